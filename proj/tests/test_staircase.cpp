#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ct/staircase.hpp"

using namespace ct;

namespace {

LinearForm lf(int a, int b, int c) { return {Int(a), Int(b), Int(c)}; }

bool multiset_eq(std::vector<LinearForm> x, std::vector<LinearForm> y) {
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

}  // namespace

TEST_CASE("colength of the worked staircases") {
  CHECK(ideal_square(StairIdeal({{1, 0}, {0, 1}})).colength() == 3);

  const StairIdeal curl = ideal_square(StairIdeal({{1, 0}, {0, 2}}));
  CHECK(curl == StairIdeal({{2, 0}, {1, 2}, {0, 4}}));
  CHECK(curl.colength() == 6);

  const StairIdeal fat_modified =
      ideal_sum(StairIdeal::maximal_power(4), StairIdeal::principal({3, 0}));
  CHECK(fat_modified.colength() == 9);
}

TEST_CASE("quotient bases in canonical order") {
  CHECK(StairIdeal({{1, 0}, {0, 1}}).quotient_basis() == std::vector<ExponentPair>{{0, 0}});

  CHECK(StairIdeal({{2, 0}, {1, 2}, {0, 4}}).quotient_basis() ==
        std::vector<ExponentPair>{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}, {0, 3}});

  const StairIdeal fat_modified =
      ideal_sum(StairIdeal::maximal_power(4), StairIdeal::principal({3, 0}));
  CHECK(fat_modified.quotient_basis() ==
        std::vector<ExponentPair>{
            {0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}, {0, 2}, {1, 2}, {0, 3}});
}

TEST_CASE("squares and sums") {
  CHECK(ideal_square(StairIdeal({{1, 0}, {0, 1}})) == StairIdeal({{2, 0}, {1, 1}, {0, 2}}));
  CHECK(ideal_square(StairIdeal({{1, 0}, {0, 3}})) == StairIdeal({{2, 0}, {1, 3}, {0, 6}}));
  // (u,v)^4 + (u^3): u^3 absorbs u^4 and u^3 v
  CHECK(ideal_sum(StairIdeal::maximal_power(4), StairIdeal::principal({3, 0})) ==
        StairIdeal({{3, 0}, {2, 2}, {1, 3}, {0, 4}}));
}

TEST_CASE("modified squaring") {
  const StairIdeal fat = StairIdeal::maximal_power(2);

  const StairIdeal tripled_line = modified_square(fat, StairIdeal::principal({3, 0}));
  CHECK(tripled_line == StairIdeal({{3, 0}, {2, 2}, {1, 3}, {0, 4}}));
  CHECK(tripled_line.colength() == 9);

  const StairIdeal asterisk = modified_square(fat, StairIdeal::principal({2, 1}));
  CHECK(asterisk.colength() == 9);
  CHECK(asterisk.quotient_basis() ==
        std::vector<ExponentPair>{
            {0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}, {0, 3}});

  // gamma already inside I^2 leaves the square untouched
  const StairIdeal curvilinear({{1, 0}, {0, 2}});
  CHECK(modified_square(curvilinear, StairIdeal::principal({2, 0})) ==
        ideal_square(curvilinear));
  CHECK(modified_square(curvilinear, StairIdeal::principal({2, 0})).colength() == 6);

  CHECK_THROWS_AS((void)modified_square(fat, fat), std::invalid_argument);
}

TEST_CASE("hom weights of complete intersections") {
  // chart at the first coordinate point: local coordinate weights b-a, c-a
  const Chart chart0 = Chart::primal(0);
  CHECK(chart0.u_weight == lf(-1, 1, 0));
  CHECK(chart0.v_weight == lf(-1, 0, 1));
  CHECK(multiset_eq(hom_weights(StairIdeal({{1, 0}, {0, 1}}), chart0),
                    {lf(1, -1, 0), lf(1, 0, -1)}));

  const Chart chart2 = Chart::primal(2);
  CHECK(multiset_eq(hom_weights(StairIdeal({{1, 0}, {0, 2}}), chart2),
                    {lf(-1, 0, 1), lf(-1, 1, 0), lf(0, -2, 2), lf(0, -1, 1)}));

  CHECK(multiset_eq(hom_weights(StairIdeal({{1, 0}, {0, 3}}), chart2),
                    {lf(-1, 0, 1), lf(-1, 1, 0), lf(-1, 2, -1), lf(0, -3, 3), lf(0, -2, 2),
                     lf(0, -1, 1)}));

  CHECK_THROWS_AS((void)hom_weights(StairIdeal::maximal_power(2), chart2),
                  std::invalid_argument);
}

TEST_CASE("section weights") {
  CHECK(section_weights(StairIdeal({{1, 0}, {0, 1}}), Chart::primal(0), 5) ==
        std::vector<LinearForm>{lf(5, 0, 0)});

  CHECK(multiset_eq(section_weights(StairIdeal({{2, 0}, {1, 2}, {0, 4}}), Chart::primal(2), 5),
                    {lf(0, 0, 5), lf(1, 0, 4), lf(0, 1, 4), lf(1, 1, 3), lf(0, 2, 3),
                     lf(0, 3, 2)}));

  // zero twist exposes the raw staircase weights
  const StairIdeal ideal({{2, 0}, {0, 2}});
  const Chart chart = Chart::primal(1);
  const auto weights = section_weights(ideal, chart, 0);
  const auto basis = ideal.quotient_basis();
  REQUIRE(weights.size() == basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    CHECK(weights[i] == chart.monomial_weight(basis[i]));
}

TEST_CASE("dual charts carry negated weights") {
  const Chart dual0 = Chart::dual_plane(0);
  CHECK(dual0.u_weight == lf(1, -1, 0));
  CHECK(dual0.v_weight == lf(1, 0, -1));
  CHECK(dual0.coordinate_weight == lf(-1, 0, 0));
  CHECK(dual0.trivialization(2) == lf(-2, 0, 0));
}

TEST_CASE("colength triples under squaring away from the fat point") {
  const StairIdeal pieces[] = {
      StairIdeal({{1, 0}, {0, 1}}), StairIdeal({{1, 0}, {0, 2}}), StairIdeal({{1, 0}, {0, 3}}),
      StairIdeal({{0, 1}, {3, 0}}), StairIdeal({{0, 1}, {2, 0}})};
  for (const StairIdeal& ideal : pieces)
    CHECK(ideal_square(ideal).colength() == 3 * ideal.colength());

  const StairIdeal fat = StairIdeal::maximal_power(2);
  CHECK(ideal_square(fat).colength() == 10);
  CHECK(ideal_square(fat).colength() - 3 * fat.colength() == 1);
}

TEST_CASE("random staircase properties") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<ExponentPair> gens;
    gens.push_back({1 + static_cast<int>(rng() % 6), 0});
    gens.push_back({0, 1 + static_cast<int>(rng() % 6)});
    const int extra = static_cast<int>(rng() % 3);
    for (int k = 0; k < extra; ++k)
      gens.push_back({1 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 5)});
    const StairIdeal ideal(gens);

    const auto basis = ideal.quotient_basis();
    CHECK(static_cast<int>(basis.size()) == ideal.colength());
    for (const ExponentPair& m : basis) CHECK_FALSE(ideal.contains(m));
    for (const ExponentPair& g : ideal.generators()) CHECK(ideal.contains(g));

    const StairIdeal gamma = StairIdeal::principal(
        {static_cast<int>(rng() % 5), static_cast<int>(rng() % 5)});
    CHECK(modified_square(ideal, gamma).contains(ideal_square(ideal)));
  }
  for (int trial = 0; trial < 20; ++trial) {
    const StairIdeal ci({{1 + static_cast<int>(rng() % 5), 0},
                         {0, 1 + static_cast<int>(rng() % 5)}});
    CHECK(hom_weights(ci, Chart::primal(static_cast<int>(rng() % 3))).size() ==
          2 * static_cast<std::size_t>(ci.colength()));
  }
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS((void)StairIdeal({{1, 0}}).colength(), std::invalid_argument);
  CHECK_THROWS_AS((void)StairIdeal({{-1, 0}}), std::invalid_argument);
  CHECK_FALSE(StairIdeal({{2, 1}}).is_cofinite());
}
