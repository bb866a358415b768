#include "ct/exactpoly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ct {

const std::array<Perm, 6>& all_permutations() {
  static const std::array<Perm, 6> perms = {
      Perm{0, 1, 2}, Perm{0, 2, 1}, Perm{1, 0, 2},
      Perm{1, 2, 0}, Perm{2, 0, 1}, Perm{2, 1, 0},
  };
  return perms;
}

ExactPoly::ExactPoly(const Rat& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

ExactPoly ExactPoly::variable(int index) {
  if (index < 0 || index > 2) throw std::invalid_argument("variable index out of range");
  Monomial m;
  m.abc[static_cast<std::size_t>(index)] = 1;
  return term(m, Rat(1));
}

ExactPoly ExactPoly::epsilon() {
  Monomial m;
  m.eps = 1;
  return term(m, Rat(1));
}

ExactPoly ExactPoly::term(const Monomial& m, const Rat& coeff) {
  ExactPoly p;
  p.add_term(m, coeff);
  return p;
}

bool ExactPoly::has_eps() const {
  for (const auto& [m, c] : terms_)
    if (m.eps) return true;
  return false;
}

int ExactPoly::degree_abc() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree_abc());
  return d;
}

bool ExactPoly::is_homogeneous_abc(int d) const {
  for (const auto& [m, c] : terms_)
    if (m.eps != 0 || m.degree_abc() != d) return false;
  return true;
}

void ExactPoly::add_term(const Monomial& m, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ExactPoly operator*(const ExactPoly& x, const ExactPoly& y) {
  ExactPoly out;
  for (const auto& [mx, cx] : x.terms_) {
    for (const auto& [my, cy] : y.terms_) {
      if (mx.eps + my.eps >= 2) continue;  // eps^2 = 0
      Monomial m;
      for (int i = 0; i < 3; ++i)
        m.abc[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>(mx.abc[static_cast<std::size_t>(i)] +
                                      my.abc[static_cast<std::size_t>(i)]);
      m.eps = static_cast<std::uint8_t>(mx.eps + my.eps);
      out.add_term(m, cx * cy);
    }
  }
  return out;
}

ExactPoly& ExactPoly::operator*=(const ExactPoly& o) {
  *this = *this * o;
  return *this;
}

ExactPoly& ExactPoly::operator*=(const Rat& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

ExactPoly ExactPoly::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative power");
  ExactPoly out(Rat(1));
  for (int k = 0; k < n; ++k) out *= *this;
  return out;
}

Rat ExactPoly::substitute(const Rat& a0, const Rat& b0, const Rat& c0) const {
  if (has_eps()) throw std::invalid_argument("substitute: polynomial contains eps");
  const std::array<Rat, 3> v{a0, b0, c0};
  Rat total(0);
  for (const auto& [m, coeff] : terms_) {
    Rat t = coeff;
    for (std::size_t i = 0; i < 3; ++i)
      for (int k = 0; k < m.abc[i]; ++k) t *= v[i];
    total += t;
  }
  return total;
}

ExactPoly ExactPoly::substituted(const Perm& perm) const {
  ExactPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial pm;
    pm.eps = m.eps;
    for (std::size_t i = 0; i < 3; ++i)
      pm.abc[static_cast<std::size_t>(perm[i])] = m.abc[i];
    out.add_term(pm, c);
  }
  return out;
}

namespace {

const char* kVarNames[4] = {"a", "b", "c", "eps"};

std::string monomial_str(const Monomial& m) {
  std::string s;
  const std::array<int, 4> exps{m.abc[0], m.abc[1], m.abc[2], m.eps};
  for (int i = 0; i < 4; ++i) {
    if (exps[static_cast<std::size_t>(i)] == 0) continue;
    if (!s.empty()) s += "*";
    s += kVarNames[i];
    if (exps[static_cast<std::size_t>(i)] > 1)
      s += "^" + std::to_string(exps[static_cast<std::size_t>(i)]);
  }
  return s;
}

}  // namespace

std::string ExactPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, coeff] : terms_) {
    const bool neg = coeff < 0;
    const Rat mag = neg ? Rat(-coeff) : coeff;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    const std::string mono = monomial_str(m);
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

namespace {

// parser for the canonical rendering
struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() { return s[pos]; }
  bool consume(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  Int integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("ExactPoly::parse: expected digits");
    return Int(std::string(s.substr(start, pos - start)));
  }
  int var_index() {
    skip_ws();
    if (pos < s.size()) {
      if (s.compare(pos, 3, "eps") == 0) {
        pos += 3;
        return 3;
      }
      const char c = s[pos];
      if (c >= 'a' && c <= 'c') {
        ++pos;
        return c - 'a';
      }
    }
    return -1;
  }
};

}  // namespace

ExactPoly ExactPoly::parse(std::string_view text) {
  Cursor cur{text};
  ExactPoly out;
  bool first = true;
  while (!cur.done()) {
    bool neg = false;
    if (first) {
      if (cur.consume('-')) neg = true;
      first = false;
    } else if (cur.consume('+')) {
      neg = false;
    } else if (cur.consume('-')) {
      neg = true;
    } else {
      throw std::invalid_argument("ExactPoly::parse: expected '+' or '-'");
    }
    cur.skip_ws();
    Rat coeff(1);
    bool saw_coeff = false;
    if (cur.pos < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      Int num = cur.integer();
      Int den(1);
      if (cur.consume('/')) den = cur.integer();
      coeff = Rat(num, den);
      saw_coeff = true;
      if (!cur.consume('*')) {
        out.add_term(Monomial{}, neg ? Rat(-coeff) : coeff);
        continue;
      }
    }
    Monomial m;
    bool saw_var = false;
    while (true) {
      const int vi = cur.var_index();
      if (vi < 0) break;
      saw_var = true;
      int exp = 1;
      if (cur.consume('^')) exp = static_cast<int>(cur.integer());
      if (vi == 3)
        m.eps = static_cast<std::uint8_t>(m.eps + exp);
      else
        m.abc[static_cast<std::size_t>(vi)] =
            static_cast<std::uint8_t>(m.abc[static_cast<std::size_t>(vi)] + exp);
      if (!cur.consume('*')) break;
    }
    if (!saw_var && !saw_coeff)
      throw std::invalid_argument("ExactPoly::parse: empty term");
    if (m.eps > 1) throw std::invalid_argument("ExactPoly::parse: eps exponent > 1");
    out.add_term(m, neg ? Rat(-coeff) : coeff);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const ExactPoly& p) { return os << p.str(); }

LinearForm LinearForm::substituted(const Perm& perm) const {
  const std::array<const Int*, 3> in{&a, &b, &c};
  std::array<Int, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) out[static_cast<std::size_t>(perm[i])] = *in[i];
  return {out[0], out[1], out[2]};
}

ExactPoly LinearForm::to_poly() const {
  ExactPoly p;
  const std::array<const Int*, 3> k{&a, &b, &c};
  for (int i = 0; i < 3; ++i) {
    Monomial m;
    m.abc[static_cast<std::size_t>(i)] = 1;
    p += ExactPoly::term(m, Rat(*k[static_cast<std::size_t>(i)]));
  }
  return p;
}

std::string LinearForm::str() const {
  const std::array<const Int*, 3> k{&a, &b, &c};
  const char* names = "abc";
  std::string out;
  for (std::size_t i = 0; i < 3; ++i) {
    const Int& coeff = *k[i];
    if (coeff == 0) continue;
    const bool neg = coeff < 0;
    const Int mag = neg ? Int(-coeff) : coeff;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    if (mag != 1) out += mag.str();
    out += names[i];
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const LinearForm& w) { return os << w.str(); }

LinearForm variable_weight(int index) {
  switch (index) {
    case 0: return {1, 0, 0};
    case 1: return {0, 1, 0};
    case 2: return {0, 0, 1};
    default: throw std::invalid_argument("coordinate index out of range");
  }
}

ExactPoly elementary_symmetric(int i, std::span<const LinearForm> weights) {
  const int n = static_cast<int>(weights.size());
  if (i < 0 || i > n) throw std::invalid_argument("elementary_symmetric: index out of range");
  // e[k] after processing j forms holds sigma_k of those forms
  std::vector<ExactPoly> e(static_cast<std::size_t>(i) + 1);
  e[0] = ExactPoly(Rat(1));
  int processed = 0;
  for (const LinearForm& w : weights) {
    const ExactPoly wp = w.to_poly();
    ++processed;
    for (int k = std::min(i, processed); k >= 1; --k)
      e[static_cast<std::size_t>(k)] += e[static_cast<std::size_t>(k - 1)] * wp;
  }
  return e[static_cast<std::size_t>(i)];
}

ExactPoly symmetrize(const ExactPoly& p) {
  if (p.has_eps()) throw std::invalid_argument("symmetrize: polynomial contains eps");
  ExactPoly out;
  for (const Perm& perm : all_permutations()) out += p.substituted(perm);
  return out;
}

}  // namespace ct
