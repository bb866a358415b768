#include "ct/fixedlocus.hpp"

#include <algorithm>
#include <stdexcept>

namespace ct {

namespace {

std::array<int, 2> other_indices(int label) {
  std::array<int, 2> out{};
  int k = 0;
  for (int i = 0; i < 3; ++i)
    if (i != label) out[static_cast<std::size_t>(k++)] = i;
  return out;
}

IdealPiece permute_piece(const IdealPiece& piece, const Perm& perm) {
  const int new_label = perm[static_cast<std::size_t>(piece.chart.label)];
  const auto old_others = other_indices(piece.chart.label);
  const auto new_others = other_indices(new_label);
  // chart coordinate u tracks the smaller remaining index; a permutation that
  // reverses the pair swaps the two local coordinates
  const bool swap_uv = perm[static_cast<std::size_t>(old_others[0])] != new_others[0];
  const auto map_pair = [&](ExponentPair e) {
    return swap_uv ? ExponentPair{e[1], e[0]} : e;
  };
  IdealPiece out;
  out.chart = piece.chart.dual ? Chart::dual_plane(new_label) : Chart::primal(new_label);
  std::vector<ExponentPair> gens;
  for (const ExponentPair& g : piece.ideal.generators()) gens.push_back(map_pair(g));
  out.ideal = StairIdeal(std::move(gens));
  if (piece.dual_cubic)
    out.dual_cubic = StairIdeal::principal(map_pair(piece.dual_cubic->generators()[0]));
  return out;
}

IdealPiece make_piece(bool dual, int label, std::vector<ExponentPair> gens,
                      std::optional<ExponentPair> cubic = std::nullopt) {
  IdealPiece piece;
  piece.chart = dual ? Chart::dual_plane(label) : Chart::primal(label);
  piece.ideal = StairIdeal(std::move(gens));
  if (cubic) piece.dual_cubic = StairIdeal::principal(*cubic);
  return piece;
}

using MonomialTriple = std::array<std::array<int, 2>, 3>;

}  // namespace

FixedPoint orbit_representative(int orbit_type) {
  FixedPoint fp;
  fp.orbit_type = orbit_type;
  fp.perm = kIdentityPerm;
  switch (orbit_type) {
    case 1:
      // (XY, YZ, XZ; XvYv, XvZv, YvZv): the coordinate triangle
      fp.primal_pieces = {make_piece(false, 0, {{1, 0}, {0, 1}}),
                          make_piece(false, 1, {{1, 0}, {0, 1}}),
                          make_piece(false, 2, {{1, 0}, {0, 1}})};
      fp.support = {{0, 1}, {1, 1}, {2, 1}};
      fp.primal_net = QuadricSpace::monomial_span(MonomialTriple{{{0, 1}, {1, 2}, {0, 2}}});
      fp.dual_net = QuadricSpace::monomial_span(MonomialTriple{{{0, 1}, {0, 2}, {1, 2}}});
      break;
    case 2:
      // (XY, XZ, Y^2; XvYv, XvZv, Zv^2): point + planar double point
      fp.primal_pieces = {make_piece(false, 0, {{1, 0}, {0, 1}}),
                          make_piece(false, 2, {{1, 0}, {0, 2}})};
      fp.support = {{0, 1}, {2, 2}};
      fp.primal_net = QuadricSpace::monomial_span(MonomialTriple{{{0, 1}, {0, 2}, {1, 1}}});
      fp.dual_net = QuadricSpace::monomial_span(MonomialTriple{{{0, 1}, {0, 2}, {2, 2}}});
      break;
    case 3:
      // (X, Y^2 Z; Yv^2, YvZv, Zv^2): point + double point inside a line
      fp.primal_pieces = {make_piece(false, 1, {{1, 0}, {0, 1}}),
                          make_piece(false, 2, {{1, 0}, {0, 2}})};
      fp.support = {{1, 1}, {2, 2}};
      fp.primal_net = QuadricSpace::monomial_span(MonomialTriple{{{0, 0}, {0, 1}, {0, 2}}});
      fp.dual_net = QuadricSpace::monomial_span(MonomialTriple{{{1, 1}, {1, 2}, {2, 2}}});
      break;
    case 4:
      // (X, Y^3; Yv^2, YvZv, Zv^2): curvilinear length 3 inside a line
      fp.primal_pieces = {make_piece(false, 2, {{1, 0}, {0, 3}})};
      fp.support = {{2, 3}};
      fp.primal_net = QuadricSpace::monomial_span(MonomialTriple{{{0, 0}, {0, 1}, {0, 2}}});
      fp.dual_net = QuadricSpace::monomial_span(MonomialTriple{{{1, 1}, {1, 2}, {2, 2}}});
      break;
    case 5:
      // (X^2, XY, Y^2; Zv, Yv^3): fat point; dual cubic is a tripled line, X^3
      fp.primal_pieces = {make_piece(false, 2, {{2, 0}, {1, 1}, {0, 2}}, ExponentPair{3, 0})};
      fp.dual_pieces = {make_piece(true, 0, {{0, 1}, {3, 0}})};
      fp.support = {{2, 3}};
      fp.primal_net = QuadricSpace::monomial_span(MonomialTriple{{{0, 0}, {0, 1}, {1, 1}}});
      fp.dual_net = QuadricSpace::monomial_span(MonomialTriple{{{0, 2}, {1, 2}, {2, 2}}});
      break;
    case 6:
      // (X^2, XY, Y^2; Zv, Yv^2 Xv): fat point; dual cubic X^2 Y
      fp.primal_pieces = {make_piece(false, 2, {{2, 0}, {1, 1}, {0, 2}}, ExponentPair{2, 1})};
      fp.dual_pieces = {make_piece(true, 0, {{0, 1}, {2, 0}}),
                        make_piece(true, 1, {{1, 0}, {0, 1}})};
      fp.support = {{2, 3}};
      fp.primal_net = QuadricSpace::monomial_span(MonomialTriple{{{0, 0}, {0, 1}, {1, 1}}});
      fp.dual_net = QuadricSpace::monomial_span(MonomialTriple{{{0, 2}, {1, 2}, {2, 2}}});
      break;
    default:
      throw std::invalid_argument("orbit_representative: type out of range");
  }
  return fp;
}

FixedPoint permute_fixed_point(const FixedPoint& rep, const Perm& perm, int id) {
  FixedPoint fp;
  fp.id = id;
  fp.orbit_type = rep.orbit_type;
  fp.perm = perm;
  for (const IdealPiece& piece : rep.primal_pieces)
    fp.primal_pieces.push_back(permute_piece(piece, perm));
  for (const IdealPiece& piece : rep.dual_pieces)
    fp.dual_pieces.push_back(permute_piece(piece, perm));
  for (const SupportPoint& sp : rep.support)
    fp.support.push_back({perm[static_cast<std::size_t>(sp.label)], sp.multiplicity});
  fp.primal_net = permuted(rep.primal_net, perm);
  fp.dual_net = permuted(rep.dual_net, perm);
  return fp;
}

std::vector<FixedPoint> enumerate_fixed_points() {
  std::vector<FixedPoint> out;
  FixedPoint honest = orbit_representative(1);
  honest.id = 0;
  out.push_back(std::move(honest));
  int id = 1;
  for (int type = 2; type <= 6; ++type) {
    const FixedPoint rep = orbit_representative(type);
    for (const Perm& perm : all_permutations())
      out.push_back(permute_fixed_point(rep, perm, id++));
  }
  return out;
}

std::vector<LinearForm> derive_E_weights(const FixedPoint& fp) {
  std::vector<LinearForm> out;
  for (const IdealPiece& piece : fp.primal_pieces) {
    const StairIdeal squared = piece.dual_cubic
                                   ? modified_square(piece.ideal, *piece.dual_cubic)
                                   : ideal_square(piece.ideal);
    const auto weights = section_weights(squared, piece.chart, 5);
    out.insert(out.end(), weights.begin(), weights.end());
  }
  if (out.size() != 9)
    throw std::logic_error("derive_E_weights: expected 9 weights, got " +
                           std::to_string(out.size()));
  return out;
}

std::vector<LinearForm> derive_tangent_weights(const FixedPoint& fp) {
  // the forgetful map to the Hilbert scheme of the primal plane is a local
  // isomorphism for types 1-4; for the fat types it is the dual-plane map
  const auto& pieces = fp.orbit_type >= 5 ? fp.dual_pieces : fp.primal_pieces;
  std::vector<LinearForm> out;
  for (const IdealPiece& piece : pieces) {
    const auto weights = hom_weights(piece.ideal, piece.chart);
    out.insert(out.end(), weights.begin(), weights.end());
  }
  if (out.size() != 6)
    throw std::logic_error("derive_tangent_weights: expected 6 weights, got " +
                           std::to_string(out.size()));
  return out;
}

std::vector<LinearForm> derive_taut_weights(const FixedPoint& fp, int d) {
  if (d < 0 || d > 3) throw std::invalid_argument("derive_taut_weights: twist out of range");
  std::vector<LinearForm> out;
  for (const IdealPiece& piece : fp.primal_pieces) {
    const auto weights = section_weights(piece.ideal, piece.chart, d);
    out.insert(out.end(), weights.begin(), weights.end());
  }
  if (out.size() != 3)
    throw std::logic_error("derive_taut_weights: expected 3 weights, got " +
                           std::to_string(out.size()));
  return out;
}

LinearForm derive_H_weight(const FixedPoint& fp) {
  LinearForm determinant_rule;
  for (const LinearForm& w : derive_taut_weights(fp, 1)) determinant_rule = determinant_rule + w;
  for (const LinearForm& w : derive_taut_weights(fp, 0)) determinant_rule = determinant_rule - w;
  LinearForm support_rule;
  for (const SupportPoint& sp : fp.support)
    support_rule = support_rule + Int(sp.multiplicity) * variable_weight(sp.label);
  if (!(determinant_rule == support_rule))
    throw std::logic_error("derive_H_weight: determinant rule and support rule disagree");
  return determinant_rule;
}

WeightTable derived_weight_table() {
  WeightTable table;
  for (const FixedPoint& fp : enumerate_fixed_points()) {
    PointWeights pw;
    pw.id = fp.id;
    pw.orbit_type = fp.orbit_type;
    pw.perm = fp.perm;
    pw.E = derive_E_weights(fp);
    pw.tangent = derive_tangent_weights(fp);
    for (int d = 0; d < 4; ++d) pw.taut[static_cast<std::size_t>(d)] = derive_taut_weights(fp, d);
    pw.H = derive_H_weight(fp);
    table.push_back(std::move(pw));
  }
  return table;
}

namespace {

LinearForm lf(int ka, int kb, int kc) { return {Int(ka), Int(kb), Int(kc)}; }

struct PaperRows {
  std::vector<LinearForm> E;
  std::vector<LinearForm> tangent;
  std::array<std::vector<LinearForm>, 4> taut;
  LinearForm H;
};

// transcription of the published representative rows, types 1..6
const std::array<PaperRows, 6>& paper_rows() {
  static const std::array<PaperRows, 6> rows = [] {
    std::array<PaperRows, 6> t{};
    t[0].E = {lf(5, 0, 0), lf(0, 5, 0), lf(0, 0, 5), lf(4, 1, 0), lf(4, 0, 1),
              lf(1, 4, 0), lf(0, 4, 1), lf(1, 0, 4), lf(0, 1, 4)};
    t[1].E = {lf(5, 0, 0), lf(4, 1, 0), lf(4, 0, 1), lf(0, 0, 5), lf(1, 0, 4),
              lf(0, 1, 4), lf(1, 1, 3), lf(0, 2, 3), lf(0, 3, 2)};
    t[2].E = {lf(0, 5, 0), lf(1, 4, 0), lf(0, 4, 1), lf(0, 0, 5), lf(1, 0, 4),
              lf(0, 1, 4), lf(1, 1, 3), lf(0, 2, 3), lf(0, 3, 2)};
    t[3].E = {lf(0, 0, 5), lf(0, 1, 4), lf(0, 2, 3), lf(0, 3, 2), lf(0, 4, 1),
              lf(0, 5, 0), lf(1, 0, 4), lf(1, 1, 3), lf(1, 2, 2)};
    t[4].E = {lf(0, 0, 5), lf(1, 0, 4), lf(2, 0, 3), lf(0, 1, 4), lf(1, 1, 3),
              lf(2, 1, 2), lf(0, 2, 3), lf(1, 2, 2), lf(0, 3, 2)};
    t[5].E = {lf(0, 0, 5), lf(1, 0, 4), lf(2, 0, 3), lf(3, 0, 2), lf(0, 1, 4),
              lf(1, 1, 3), lf(0, 2, 3), lf(1, 2, 2), lf(0, 3, 2)};

    t[0].tangent = {lf(-1, 0, 1), lf(0, -1, 1), lf(0, 1, -1),
                    lf(-1, 1, 0), lf(1, -1, 0), lf(1, 0, -1)};
    t[1].tangent = {lf(1, 0, -1), lf(1, -1, 0), lf(-1, 0, 1),
                    lf(0, -2, 2), lf(-1, 1, 0), lf(0, -1, 1)};
    t[2].tangent = {lf(-1, 0, 1), lf(0, -2, 2), lf(-1, 1, 0),
                    lf(0, -1, 1), lf(0, 1, -1), lf(-1, 1, 0)};
    t[3].tangent = {lf(-1, 0, 1), lf(0, -3, 3), lf(-1, 1, 0),
                    lf(0, -2, 2), lf(-1, 2, -1), lf(0, -1, 1)};
    t[4].tangent = {lf(-3, 3, 0), lf(-2, 2, 0), lf(-1, 1, 0),
                    lf(-1, 0, 1), lf(0, -1, 1), lf(1, -2, 1)};
    t[5].tangent = {lf(1, -1, 0), lf(0, -1, 1), lf(-1, 0, 1),
                    lf(-2, 2, 0), lf(0, -1, 1), lf(-1, 1, 0)};

    t[0].taut[0] = {lf(0, 0, 0), lf(0, 0, 0), lf(0, 0, 0)};
    t[1].taut[0] = {lf(0, 0, 0), lf(0, 1, -1), lf(0, 0, 0)};
    t[2].taut[0] = {lf(0, 0, 0), lf(0, 1, -1), lf(0, 0, 0)};
    t[3].taut[0] = {lf(0, 0, 0), lf(0, 1, -1), lf(0, 2, -2)};
    t[4].taut[0] = {lf(0, 0, 0), lf(1, 0, -1), lf(0, 1, -1)};
    t[5].taut[0] = {lf(0, 0, 0), lf(1, 0, -1), lf(0, 1, -1)};

    t[0].taut[1] = {lf(1, 0, 0), lf(0, 1, 0), lf(0, 0, 1)};
    t[1].taut[1] = {lf(1, 0, 0), lf(0, 1, 0), lf(0, 0, 1)};
    t[2].taut[1] = {lf(0, 1, 0), lf(0, 1, 0), lf(0, 0, 1)};
    t[3].taut[1] = {lf(0, 0, 1), lf(0, 1, 0), lf(0, 2, -1)};
    t[4].taut[1] = {lf(1, 0, 0), lf(0, 1, 0), lf(0, 0, 1)};
    t[5].taut[1] = {lf(1, 0, 0), lf(0, 1, 0), lf(0, 0, 1)};

    t[0].taut[2] = {lf(2, 0, 0), lf(0, 2, 0), lf(0, 0, 2)};
    t[1].taut[2] = {lf(2, 0, 0), lf(0, 1, 1), lf(0, 0, 2)};
    t[2].taut[2] = {lf(0, 2, 0), lf(0, 1, 1), lf(0, 0, 2)};
    t[3].taut[2] = {lf(0, 2, 0), lf(0, 1, 1), lf(0, 0, 2)};
    t[4].taut[2] = {lf(1, 0, 1), lf(0, 1, 1), lf(0, 0, 2)};
    t[5].taut[2] = {lf(1, 0, 1), lf(0, 1, 1), lf(0, 0, 2)};

    t[0].taut[3] = {lf(3, 0, 0), lf(0, 3, 0), lf(0, 0, 3)};
    t[1].taut[3] = {lf(3, 0, 0), lf(0, 1, 2), lf(0, 0, 3)};
    t[2].taut[3] = {lf(0, 3, 0), lf(0, 1, 2), lf(0, 0, 3)};
    t[3].taut[3] = {lf(0, 1, 2), lf(0, 2, 1), lf(0, 0, 3)};
    t[4].taut[3] = {lf(1, 0, 2), lf(0, 1, 2), lf(0, 0, 3)};
    t[5].taut[3] = {lf(1, 0, 2), lf(0, 1, 2), lf(0, 0, 3)};

    t[0].H = lf(1, 1, 1);
    t[1].H = lf(1, 0, 2);
    t[2].H = lf(0, 1, 2);
    t[3].H = lf(0, 0, 3);
    t[4].H = lf(0, 0, 3);
    t[5].H = lf(0, 0, 3);
    return t;
  }();
  return rows;
}

std::vector<LinearForm> permute_all(const std::vector<LinearForm>& ws, const Perm& perm) {
  std::vector<LinearForm> out;
  out.reserve(ws.size());
  for (const LinearForm& w : ws) out.push_back(w.substituted(perm));
  return out;
}

PointWeights permute_rows(const PaperRows& rows, int orbit_type, const Perm& perm, int id) {
  PointWeights pw;
  pw.id = id;
  pw.orbit_type = orbit_type;
  pw.perm = perm;
  pw.E = permute_all(rows.E, perm);
  pw.tangent = permute_all(rows.tangent, perm);
  for (std::size_t d = 0; d < 4; ++d) pw.taut[d] = permute_all(rows.taut[d], perm);
  pw.H = rows.H.substituted(perm);
  return pw;
}

}  // namespace

WeightTable paper_weight_table() {
  WeightTable table;
  table.push_back(permute_rows(paper_rows()[0], 1, kIdentityPerm, 0));
  int id = 1;
  for (int type = 2; type <= 6; ++type)
    for (const Perm& perm : all_permutations())
      table.push_back(permute_rows(paper_rows()[static_cast<std::size_t>(type - 1)], type, perm,
                                   id++));
  return table;
}

bool multiset_equal(std::vector<LinearForm> lhs, std::vector<LinearForm> rhs) {
  if (lhs.size() != rhs.size()) return false;
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  return lhs == rhs;
}

CrossCheckReport cross_check_tables(const WeightTable& derived, const WeightTable& paper) {
  if (derived.size() != paper.size())
    throw std::invalid_argument("cross_check_tables: table sizes differ");
  CrossCheckReport report;
  for (std::size_t i = 0; i < derived.size(); ++i) {
    const PointWeights& d = derived[i];
    const PointWeights& p = paper[i];
    const auto check = [&](bool ok, const char* bundle) {
      ++report.comparisons;
      if (!ok) report.mismatches.push_back({d.id, bundle});
    };
    check(multiset_equal(d.E, p.E), "E");
    check(multiset_equal(d.tangent, p.tangent), "T");
    check(multiset_equal(d.taut[0], p.taut[0]), "O(0)^[3]");
    check(multiset_equal(d.taut[1], p.taut[1]), "O(1)^[3]");
    check(multiset_equal(d.taut[2], p.taut[2]), "O(2)^[3]");
    check(multiset_equal(d.taut[3], p.taut[3]), "O(3)^[3]");
    check(d.H == p.H, "H");
  }
  return report;
}

CrossCheckReport cross_check_tables() {
  return cross_check_tables(derived_weight_table(), paper_weight_table());
}

WeightTable corrupt_one_entry(WeightTable table) {
  if (table.empty() || table[0].E.empty())
    throw std::invalid_argument("corrupt_one_entry: empty table");
  table[0].E[0] = table[0].E[0] + lf(1, 0, 0);
  return table;
}

namespace {

nlohmann::ordered_json form_to_json(const LinearForm& w) {
  return nlohmann::ordered_json::array({w.a.convert_to<long long>(), w.b.convert_to<long long>(),
                                        w.c.convert_to<long long>()});
}

nlohmann::ordered_json forms_to_json(const std::vector<LinearForm>& ws) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const LinearForm& w : ws) arr.push_back(form_to_json(w));
  return arr;
}

LinearForm form_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3)
    throw std::invalid_argument("weight table JSON: linear form must be [a, b, c]");
  return {Int(j[0].get<long long>()), Int(j[1].get<long long>()), Int(j[2].get<long long>())};
}

std::vector<LinearForm> forms_from_json(const nlohmann::json& j, std::size_t expected) {
  if (!j.is_array() || j.size() != expected)
    throw std::invalid_argument("weight table JSON: wrong number of weights");
  std::vector<LinearForm> out;
  for (const auto& e : j) out.push_back(form_from_json(e));
  return out;
}

}  // namespace

nlohmann::ordered_json weight_table_to_json(const WeightTable& table) {
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const PointWeights& pw : table) {
    nlohmann::ordered_json rec;
    rec["id"] = pw.id;
    rec["orbit_type"] = pw.orbit_type;
    rec["perm"] = {pw.perm[0], pw.perm[1], pw.perm[2]};
    nlohmann::ordered_json weights;
    weights["E"] = forms_to_json(pw.E);
    weights["T"] = forms_to_json(pw.tangent);
    for (int d = 0; d < 4; ++d)
      weights["taut" + std::to_string(d)] = forms_to_json(pw.taut[static_cast<std::size_t>(d)]);
    weights["H"] = form_to_json(pw.H);
    rec["weights"] = std::move(weights);
    records.push_back(std::move(rec));
  }
  return records;
}

WeightTable weight_table_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("weight table JSON: expected an array");
  WeightTable table;
  for (const auto& rec : j) {
    PointWeights pw;
    pw.id = rec.at("id").get<int>();
    pw.orbit_type = rec.at("orbit_type").get<int>();
    const auto& perm = rec.at("perm");
    for (std::size_t i = 0; i < 3; ++i) pw.perm[i] = perm.at(i).get<int>();
    const auto& weights = rec.at("weights");
    pw.E = forms_from_json(weights.at("E"), 9);
    pw.tangent = forms_from_json(weights.at("T"), 6);
    for (int d = 0; d < 4; ++d)
      pw.taut[static_cast<std::size_t>(d)] =
          forms_from_json(weights.at("taut" + std::to_string(d)), 3);
    pw.H = form_from_json(weights.at("H"));
    table.push_back(std::move(pw));
  }
  return table;
}

namespace {

nlohmann::ordered_json piece_to_json(const IdealPiece& piece) {
  nlohmann::ordered_json out;
  out["chart"] = piece.chart.label;
  out["dual"] = piece.chart.dual;
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const ExponentPair& g : piece.ideal.generators()) gens.push_back({g[0], g[1]});
  out["generators"] = std::move(gens);
  if (piece.dual_cubic) {
    const ExponentPair g = piece.dual_cubic->generators()[0];
    out["dual_cubic"] = {g[0], g[1]};
  } else {
    out["dual_cubic"] = nullptr;
  }
  return out;
}

nlohmann::ordered_json net_to_json(const QuadricSpace& net) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 0; i < 3; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int j = 0; j < kQuadricMonomials; ++j) row.push_back(to_string(net.basis()(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

nlohmann::ordered_json fixed_points_to_json(const std::vector<FixedPoint>& points) {
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const FixedPoint& fp : points) {
    nlohmann::ordered_json rec;
    rec["id"] = fp.id;
    rec["orbit_type"] = fp.orbit_type;
    rec["perm"] = {fp.perm[0], fp.perm[1], fp.perm[2]};
    nlohmann::ordered_json support = nlohmann::ordered_json::array();
    for (const SupportPoint& sp : fp.support) support.push_back({sp.label, sp.multiplicity});
    rec["support"] = std::move(support);
    nlohmann::ordered_json primal = nlohmann::ordered_json::array();
    for (const IdealPiece& piece : fp.primal_pieces) primal.push_back(piece_to_json(piece));
    rec["primal_pieces"] = std::move(primal);
    nlohmann::ordered_json dual = nlohmann::ordered_json::array();
    for (const IdealPiece& piece : fp.dual_pieces) dual.push_back(piece_to_json(piece));
    rec["dual_pieces"] = std::move(dual);
    rec["primal_net"] = net_to_json(fp.primal_net);
    rec["dual_net"] = net_to_json(fp.dual_net);
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace ct
