#pragma once

// Exact Laurent polynomials over Z in the variables A, B_1..B_d.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "singknot/errors.hpp"

namespace singknot {

using Integer = boost::multiprecision::cpp_int;

/// Exponent of A followed by the exponents of B_1..B_d. Ordered
/// lexicographically, which is also the canonical term order.
struct Exponents {
  int a = 0;
  std::vector<int> b;

  auto operator<=>(const Exponents&) const = default;
  bool operator==(const Exponents&) const = default;
};

class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, Integer>;

  explicit LaurentPoly(std::size_t arity = 0) : arity_(arity) {}

  static LaurentPoly constant(const Integer& c, std::size_t arity = 0) {
    return monomial(c, 0, std::vector<int>(arity, 0));
  }

  static LaurentPoly monomial(const Integer& c, int a_exp, std::vector<int> b_exps) {
    LaurentPoly p(b_exps.size());
    if (c != 0) p.terms_.emplace(Exponents{a_exp, std::move(b_exps)}, c);
    return p;
  }

  /// A^k in the given arity.
  static LaurentPoly a_power(int k, std::size_t arity = 0) {
    return monomial(1, k, std::vector<int>(arity, 0));
  }

  /// B_i^e (i is 1-based).
  static LaurentPoly b_power(std::size_t i, int e, std::size_t arity) {
    std::vector<int> b(arity, 0);
    b.at(i - 1) = e;
    return monomial(1, 0, std::move(b));
  }

  std::size_t arity() const noexcept { return arity_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Integer coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// Adds c * A^a * B^b in place.
  void add_term(const Integer& c, int a_exp, const std::vector<int>& b_exps) {
    if (b_exps.size() != arity_) throw Error(ErrorCode::ArityMismatch, "term arity differs from polynomial arity");
    if (c == 0) return;
    Exponents key{a_exp, b_exps};
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& q) {
    check_arity(q);
    for (const auto& [e, c] : q.terms_) add_term(c, e.a, e.b);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& q) {
    check_arity(q);
    for (const auto& [e, c] : q.terms_) add_term(-c, e.a, e.b);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }

  friend LaurentPoly operator-(const LaurentPoly& p) {
    LaurentPoly r(p.arity_);
    for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
    p.check_arity(q);
    LaurentPoly r(p.arity_);
    std::vector<int> b(p.arity_);
    for (const auto& [ep, cp] : p.terms_) {
      for (const auto& [eq, cq] : q.terms_) {
        for (std::size_t i = 0; i < b.size(); ++i) b[i] = ep.b[i] + eq.b[i];
        r.add_term(cp * cq, ep.a + eq.a, b);
      }
    }
    return r;
  }

  LaurentPoly& operator*=(const LaurentPoly& q) { return *this = *this * q; }

  LaurentPoly pow(unsigned k) const {
    LaurentPoly result = constant(1, arity_);
    LaurentPoly base = *this;
    while (k > 0) {
      if (k & 1u) result *= base;
      k >>= 1;
      if (k > 0) base *= base;
    }
    return result;
  }

  bool operator==(const LaurentPoly& q) const { return arity_ == q.arity_ && terms_ == q.terms_; }

  /// Canonical text form: terms sorted by (aExp, bExps), each written as
  /// `c*A^a*B1^b1*...`, joined by " + ". Arity-1 polynomials use `B`.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) out += " + ";
      first = false;
      out += c.str();
      out += "*A^" + std::to_string(e.a);
      for (std::size_t i = 0; i < e.b.size(); ++i) {
        out += arity_ == 1 ? std::string("*B") : "*B" + std::to_string(i + 1);
        out += "^" + std::to_string(e.b[i]);
      }
    }
    return out;
  }

  /// Inverse of to_string(). Accepts `B` as a synonym for `B1`.
  static LaurentPoly parse(const std::string& text, std::size_t arity) {
    LaurentPoly p(arity);
    std::string trimmed = trim(text);
    if (trimmed == "0") return p;
    std::size_t pos = 0;
    while (pos <= trimmed.size()) {
      std::size_t next = trimmed.find(" + ", pos);
      std::string term = trim(trimmed.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
      parse_term(term, p);
      if (next == std::string::npos) break;
      pos = next + 3;
    }
    return p;
  }

 private:
  void check_arity(const LaurentPoly& q) const {
    if (arity_ != q.arity_) {
      throw Error(ErrorCode::ArityMismatch,
                  "arity " + std::to_string(arity_) + " vs " + std::to_string(q.arity_));
    }
  }

  static std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
  }

  static void parse_term(const std::string& term, LaurentPoly& p) {
    auto bad = [&] { return Error(ErrorCode::MalformedLine, "bad polynomial term '" + term + "'"); };
    std::vector<std::string> factors;
    std::stringstream ss(term);
    std::string f;
    while (std::getline(ss, f, '*')) factors.push_back(f);
    if (factors.empty()) throw bad();
    Integer c;
    try {
      c = Integer(factors[0]);
    } catch (...) {
      throw bad();
    }
    int a = 0;
    std::vector<int> b(p.arity_, 0);
    for (std::size_t k = 1; k < factors.size(); ++k) {
      const std::string& fac = factors[k];
      auto caret = fac.find('^');
      if (caret == std::string::npos) throw bad();
      std::string var = fac.substr(0, caret);
      int e = 0;
      try {
        e = std::stoi(fac.substr(caret + 1));
      } catch (...) {
        throw bad();
      }
      if (var == "A") {
        a += e;
      } else if (!var.empty() && var[0] == 'B') {
        std::size_t idx = 1;
        if (var.size() > 1) {
          try {
            idx = static_cast<std::size_t>(std::stoul(var.substr(1)));
          } catch (...) {
            throw bad();
          }
        }
        if (idx == 0 || idx > p.arity_) throw Error(ErrorCode::ArityMismatch, "variable " + var + " outside arity");
        b[idx - 1] += e;
      } else {
        throw bad();
      }
    }
    p.add_term(c, a, b);
  }

  std::size_t arity_;
  TermMap terms_;
};

/// The loop value -A^2 - A^-2.
inline LaurentPoly loop_value(std::size_t arity = 0) {
  return -(LaurentPoly::a_power(2, arity) + LaurentPoly::a_power(-2, arity));
}

/// Substitutes B_i -> B for every i. Arity 0 inputs are lifted to arity 1.
inline LaurentPoly identify_b_variables(const LaurentPoly& p) {
  LaurentPoly r(1);
  for (const auto& [e, c] : p.terms()) {
    int sum = 0;
    for (int x : e.b) sum += x;
    r.add_term(c, e.a, {sum});
  }
  return r;
}

/// Re-embeds p with its B variables permuted: B_i -> B_{perm[i-1]}.
inline LaurentPoly permute_b_variables(const LaurentPoly& p, const std::vector<std::size_t>& perm) {
  if (perm.size() != p.arity()) throw Error(ErrorCode::ArityMismatch, "permutation size differs from arity");
  LaurentPoly r(p.arity());
  std::vector<int> b(p.arity());
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < b.size(); ++i) b[perm[i] - 1] = e.b[i];
    r.add_term(c, e.a, b);
  }
  return r;
}

/// Groups terms by B-exponent pattern; each value is an A-only polynomial.
inline std::map<std::vector<int>, LaurentPoly> decompose_by_b_pattern(const LaurentPoly& p) {
  std::vector<std::set<int>> seen(p.arity());
  std::map<std::vector<int>, LaurentPoly> parts;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.b.size(); ++i) {
      seen[i].insert(e.b[i]);
      if (seen[i].size() > 2) {
        throw Error(ErrorCode::PatternOverflow,
                    "B" + std::to_string(i + 1) + " takes more than two exponent values");
      }
    }
    auto [it, _] = parts.try_emplace(e.b, LaurentPoly(0));
    it->second.add_term(c, e.a, {});
  }
  if (p.is_zero()) parts.clear();
  return parts;
}

/// Sum over patterns of B^pattern * part; inverse of decompose_by_b_pattern.
inline LaurentPoly recombine_b_pattern(const std::map<std::vector<int>, LaurentPoly>& parts, std::size_t arity) {
  LaurentPoly r(arity);
  for (const auto& [pattern, part] : parts) {
    if (pattern.size() != arity || part.arity() != 0) throw Error(ErrorCode::ArityMismatch, "pattern arity");
    for (const auto& [e, c] : part.terms()) r.add_term(c, e.a, pattern);
  }
  return r;
}

/// Evaluates B_i (1-based) at an integer constant; the variable stays in the
/// arity with exponent 0.
inline LaurentPoly substitute_b(const LaurentPoly& p, std::size_t i, long long value) {
  if (i == 0 || i > p.arity()) throw Error(ErrorCode::ArityMismatch, "no variable B" + std::to_string(i));
  LaurentPoly r(p.arity());
  for (const auto& [e, c] : p.terms()) {
    int k = e.b[i - 1];
    Integer factor = 1;
    if (k < 0) {
      if (value == 0) throw Error(ErrorCode::NegativeExponentAtZero, "B" + std::to_string(i) + "^" + std::to_string(k));
      if (value != 1 && value != -1) {
        throw Error(ErrorCode::NonIntegralSubstitution, "B" + std::to_string(i) + "^" + std::to_string(k));
      }
      factor = (value == -1 && (-k) % 2 == 1) ? -1 : 1;
    } else {
      factor = boost::multiprecision::pow(Integer(value), static_cast<unsigned>(k));
    }
    std::vector<int> b = e.b;
    b[i - 1] = 0;
    r.add_term(c * factor, e.a, b);
  }
  return r;
}

/// (min, max) exponent of B_i across terms; nullopt for the zero polynomial.
inline std::optional<std::pair<int, int>> b_degree_range(const LaurentPoly& p, std::size_t i) {
  if (i == 0 || i > p.arity()) throw Error(ErrorCode::ArityMismatch, "no variable B" + std::to_string(i));
  std::optional<std::pair<int, int>> range;
  for (const auto& [e, c] : p.terms()) {
    int k = e.b[i - 1];
    if (!range) {
      range = std::pair{k, k};
    } else {
      range->first = std::min(range->first, k);
      range->second = std::max(range->second, k);
    }
  }
  return range;
}

/// Distinct exponents of B_i across terms.
inline std::set<int> b_exponents(const LaurentPoly& p, std::size_t i) {
  std::set<int> out;
  for (const auto& [e, c] : p.terms()) out.insert(e.b.at(i - 1));
  return out;
}

}  // namespace singknot
