#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "ct/exactpoly.hpp"

using namespace ct;

namespace {

const ExactPoly A = ExactPoly::variable(0);
const ExactPoly B = ExactPoly::variable(1);
const ExactPoly C = ExactPoly::variable(2);
const ExactPoly One = ExactPoly(Rat(1));

LinearForm lf(int a, int b, int c) { return {Int(a), Int(b), Int(c)}; }

Rat random_rat(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 19) - 9;
  const long den = 1 + static_cast<long>(rng() % 9);
  return Rat(num, den);
}

ExactPoly random_poly(std::mt19937_64& rng, bool allow_eps) {
  ExactPoly p;
  const int terms = 1 + static_cast<int>(rng() % 5);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (std::size_t i = 0; i < 3; ++i) m.abc[i] = static_cast<std::uint8_t>(rng() % 3);
    if (allow_eps) m.eps = static_cast<std::uint8_t>(rng() % 2);
    p += ExactPoly::term(m, random_rat(rng));
  }
  return p;
}

// independent subset-enumeration oracle for sigma_i
ExactPoly sigma_bruteforce(int i, const std::vector<LinearForm>& ws) {
  const int n = static_cast<int>(ws.size());
  ExactPoly total;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != i) continue;
    ExactPoly prod(Rat(1));
    for (int j = 0; j < n; ++j)
      if (mask & (1u << j)) prod *= ws[static_cast<std::size_t>(j)].to_poly();
    total += prod;
  }
  return total;
}

}  // namespace

TEST_CASE("ring arithmetic") {
  CHECK((A + B) * (A - B) == A * A - B * B);
  const ExactPoly eps = ExactPoly::epsilon();
  CHECK((One + eps * A) * (One + eps * B) == One + eps * (A + B));
  CHECK(eps * eps == ExactPoly());
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const ExactPoly p = random_poly(rng, true);
    CHECK(p + ExactPoly() == p);
    CHECK(p - p == ExactPoly());
  }
}

TEST_CASE("substitution") {
  CHECK((A + Rat(2) * C).substitute(-20, 9, 7) == Rat(-6));
  CHECK((A * B + A * C + B * C).substitute(1, 1, 1) == Rat(3));
  CHECK((A - B).substitute(2, 2, 5) == Rat(0));
  CHECK_THROWS_AS((void)ExactPoly::epsilon().substitute(1, 2, 3), std::invalid_argument);
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 25; ++t) {
    const ExactPoly p = random_poly(rng, false);
    const ExactPoly q = random_poly(rng, false);
    const Rat a0 = random_rat(rng), b0 = random_rat(rng), c0 = random_rat(rng);
    CHECK((p * q).substitute(a0, b0, c0) == p.substitute(a0, b0, c0) * q.substitute(a0, b0, c0));
    CHECK((p + q).substitute(a0, b0, c0) == p.substitute(a0, b0, c0) + q.substitute(a0, b0, c0));
  }
}

TEST_CASE("elementary symmetric polynomials") {
  const std::vector<LinearForm> abc{lf(1, 0, 0), lf(0, 1, 0), lf(0, 0, 1)};
  CHECK(elementary_symmetric(2, abc) == A * B + A * C + B * C);
  CHECK(elementary_symmetric(0, abc) == One);

  // the six tangent weights of the honest triangle, evaluated at (0, 1, 2)
  const std::vector<LinearForm> tangent{lf(-1, 0, 1), lf(0, -1, 1), lf(0, 1, -1),
                                        lf(-1, 1, 0), lf(1, -1, 0), lf(1, 0, -1)};
  CHECK(elementary_symmetric(6, tangent).substitute(0, 1, 2) == Rat(-4));

  CHECK_THROWS_AS((void)elementary_symmetric(4, abc), std::invalid_argument);
  CHECK_THROWS_AS((void)elementary_symmetric(-1, abc), std::invalid_argument);
}

TEST_CASE("elementary symmetric matches the subset oracle") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    std::vector<LinearForm> ws;
    for (int j = 0; j < n; ++j)
      ws.push_back(lf(static_cast<int>(rng() % 9) - 4, static_cast<int>(rng() % 9) - 4,
                      static_cast<int>(rng() % 9) - 4));
    for (int i = 0; i <= n; ++i) CHECK(elementary_symmetric(i, ws) == sigma_bruteforce(i, ws));
  }
}

TEST_CASE("symmetrization") {
  CHECK(symmetrize(A) == Rat(2) * A + Rat(2) * B + Rat(2) * C);
  CHECK(symmetrize(A * B * C) == Rat(6) * (A * B * C));
  const ExactPoly orbit =
      A * A * B + A * A * C + B * B * A + B * B * C + C * C * A + C * C * B;
  CHECK(symmetrize(A * A * B) == orbit);
  CHECK_THROWS_AS((void)symmetrize(ExactPoly::epsilon()), std::invalid_argument);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 15; ++t) {
    const ExactPoly p = random_poly(rng, false);
    CHECK(symmetrize(symmetrize(p)) == Rat(6) * symmetrize(p));
  }
}

TEST_CASE("canonical text form") {
  CHECK(ExactPoly().str() == "0");
  const ExactPoly p = Rat(3, 2) * (A * A * B) - C;
  CHECK(p.str() == "3/2*a^2*b - c");
  CHECK(ExactPoly::parse("3/2*a^2*b - c") == p);
  CHECK((One + ExactPoly::epsilon() * (A + B)).str() == "a*eps + b*eps + 1");
}

TEST_CASE("text round trip is lossless") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 40; ++t) {
    const ExactPoly p = random_poly(rng, true);
    CHECK(ExactPoly::parse(p.str()) == p);
  }
}

TEST_CASE("linear forms") {
  const LinearForm w = lf(4, 1, 0);
  CHECK(w.str() == "4a+b");
  CHECK(lf(-1, 2, -1).str() == "-a+2b-c");
  CHECK(lf(0, 0, 0).str() == "0");
  CHECK(w.evaluate(2, 3, 100) == 11);
  // substitution a->b, b->c, c->a sends 4a+b to 4b+c
  const Perm rotate{1, 2, 0};
  CHECK(w.substituted(rotate) == lf(0, 4, 1));
  CHECK(w.to_poly() == Rat(4) * A + B);
}

TEST_CASE("homogeneity bookkeeping") {
  CHECK((A * A + B * C).is_homogeneous_abc(2));
  CHECK_FALSE((A * A + B).is_homogeneous_abc(2));
  CHECK_FALSE((A + ExactPoly::epsilon()).is_homogeneous_abc(1));
  CHECK(ExactPoly().is_homogeneous_abc(4));
  CHECK((A * B * C).degree_abc() == 3);
}
