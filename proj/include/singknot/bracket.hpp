#pragma once

// Singular Kauffman bracket by exhaustive state enumeration.
//
// A state picks one of two smoothings at every vertex. Crossings contribute
// A (A-smoothing) or A^-1 (B-smoothing); double points contribute the table
// weight of the chosen smoothing; each state also gets d^(loops-1) with
// d = -A^2 - A^-2. The arc of a long knot counts as one loop.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <thread>
#include <unordered_map>
#include <vector>

#include "singknot/diagram.hpp"
#include "singknot/poly.hpp"
#include "singknot/weights.hpp"

namespace singknot {

struct BracketOptions {
  Mode mode = Mode::SingleB;
  unsigned jobs = 1;
  DoublePointWeightTable table = DoublePointWeightTable::standard();
};

struct BracketResult {
  LaurentPoly value;
  std::uint64_t states = 0;
};

namespace detail {

// Smoothing pairs, as position pairs at the vertex.
inline constexpr std::array<std::array<int, 4>, 2> kPairs = {{{0, 1, 2, 3}, {0, 3, 1, 2}}};

struct StateTally {
  // (crossing A-exponent, double-point choice mask, loops) -> number of states
  std::unordered_map<std::uint64_t, std::int64_t> counts;
};

class BracketEnumerator {
 public:
  explicit BracketEnumerator(const SingularDiagram& d) {
    std::map<EdgeId, int> dense;
    for (const auto& [e, ends] : d.edges()) dense.emplace(e, static_cast<int>(dense.size()));
    edge_count_ = static_cast<int>(dense.size());
    for (std::size_t v = 0; v < d.vertices().size(); ++v) {
      const Vertex& vx = d.vertices()[v];
      Local loc;
      for (int p = 0; p < 4; ++p) loc.edge[p] = dense.at(vx.edges[p]);
      if (vx.is_crossing()) {
        // choice 0 is the A-smoothing
        loc.pairs[0] = 0;
        loc.pairs[1] = 1;
        crossings_.push_back(loc);
      } else {
        // choice 0 is the oriented smoothing
        int oriented = vx.dirs[1] == Dir::Out ? 0 : 1;
        loc.pairs[0] = oriented;
        loc.pairs[1] = 1 - oriented;
        double_points_.push_back(loc);
        dp_vertex_.push_back(static_cast<int>(v));
      }
    }
    n_ = static_cast<int>(crossings_.size());
    dcount_ = static_cast<int>(double_points_.size());
    if (n_ + dcount_ > 62) throw Error(ErrorCode::ArityMismatch, "too many vertices for exhaustive enumeration");
  }

  int crossings() const { return n_; }
  int double_points() const { return dcount_; }
  const std::vector<int>& dp_vertices() const { return dp_vertex_; }
  std::uint64_t state_count() const { return std::uint64_t{1} << (n_ + dcount_); }

  static std::uint64_t key(int a_exp, std::uint64_t mask, int loops, int n) {
    return (mask << 24) | (static_cast<std::uint64_t>(a_exp + n) << 12) | static_cast<std::uint64_t>(loops);
  }

  /// Enumerates states [lo, hi) of the binary counter (crossings in the low bits).
  void run(std::uint64_t lo, std::uint64_t hi, StateTally& out) const {
    std::vector<int> parent(edge_count_);
    for (std::uint64_t s = lo; s < hi; ++s) {
      std::iota(parent.begin(), parent.end(), 0);
      int loops = edge_count_;
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      auto join = [&](int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) {
          parent[x] = y;
          --loops;
        }
      };
      auto smooth = [&](const Local& loc, int choice) {
        const auto& pr = kPairs[loc.pairs[choice]];
        join(loc.edge[pr[0]], loc.edge[pr[1]]);
        join(loc.edge[pr[2]], loc.edge[pr[3]]);
      };
      int a_exp = 0;
      for (int i = 0; i < n_; ++i) {
        int c = static_cast<int>((s >> i) & 1U);
        a_exp += c ? -1 : 1;
        smooth(crossings_[i], c);
      }
      std::uint64_t mask = s >> n_;
      for (int j = 0; j < dcount_; ++j) smooth(double_points_[j], static_cast<int>((mask >> j) & 1U));
      ++out.counts[key(a_exp, mask, loops, n_)];
    }
  }

 private:
  struct Local {
    std::array<int, 4> edge{};
    std::array<int, 2> pairs{};
  };
  int edge_count_ = 0;
  int n_ = 0;
  int dcount_ = 0;
  std::vector<Local> crossings_;
  std::vector<Local> double_points_;
  std::vector<int> dp_vertex_;
};

}  // namespace detail

/// Un-normalized singular bracket, with the number of enumerated states.
inline BracketResult singular_bracket_states(const SingularDiagram& d, const BracketOptions& opt = {}) {
  BIndexing bi = BIndexing::make(d, opt.mode);
  const std::size_t arity = bi.arity;
  if (d.vertices().empty()) return {LaurentPoly::constant(1, arity), 1};

  detail::BracketEnumerator en(d);
  const std::uint64_t total = en.state_count();
  unsigned jobs = std::max(1U, opt.jobs);
  if (total < 4096) jobs = 1;
  std::vector<detail::StateTally> tallies(jobs);
  if (jobs == 1) {
    en.run(0, total, tallies[0]);
  } else {
    std::vector<std::thread> workers;
    for (unsigned j = 0; j < jobs; ++j) {
      std::uint64_t lo = total / jobs * j;
      std::uint64_t hi = j + 1 == jobs ? total : total / jobs * (j + 1);
      workers.emplace_back([&, j, lo, hi] { en.run(lo, hi, tallies[j]); });
    }
    for (auto& w : workers) w.join();
  }

  // merge, then group by double-point mask so each weight product is formed once
  std::map<std::uint64_t, std::map<std::pair<int, int>, std::int64_t>> by_mask;
  const int n = en.crossings();
  for (const auto& t : tallies) {
    for (const auto& [k, c] : t.counts) {
      std::uint64_t mask = k >> 24;
      int a_exp = static_cast<int>((k >> 12) & 0xFFF) - n;
      int loops = static_cast<int>(k & 0xFFF);
      by_mask[mask][{a_exp, loops}] += c;
    }
  }

  std::vector<LaurentPoly> delta_pow{LaurentPoly::constant(1, arity)};
  const LaurentPoly delta = loop_value(arity);
  std::vector<std::array<LaurentPoly, 2>> dp_weight;
  for (int v : en.dp_vertices()) {
    std::size_t idx = bi.index[v];
    dp_weight.push_back({embed_b(opt.table.oriented, idx, arity), embed_b(opt.table.unoriented, idx, arity)});
  }

  LaurentPoly sum(arity);
  for (const auto& [mask, cells] : by_mask) {
    LaurentPoly part(arity);
    std::vector<int> zero(arity, 0);
    for (const auto& [al, c] : cells) {
      auto [a_exp, loops] = al;
      while (static_cast<int>(delta_pow.size()) < loops) delta_pow.push_back(delta_pow.back() * delta);
      part += LaurentPoly::monomial(c, a_exp, zero) * delta_pow[loops - 1];
    }
    for (int j = 0; j < en.double_points(); ++j) part *= dp_weight[j][(mask >> j) & 1U];
    sum += part;
  }
  return {std::move(sum), total};
}

inline LaurentPoly singular_bracket(const SingularDiagram& d, const BracketOptions& opt = {}) {
  return singular_bracket_states(d, opt).value;
}

/// (-A)^(-3w) times the bracket.
inline LaurentPoly jones_vs(const SingularDiagram& d, const BracketOptions& opt = {}) {
  LaurentPoly br = singular_bracket(d, opt);
  int w = d.writhe();
  LaurentPoly norm = LaurentPoly::a_power(-3 * w, br.arity());
  if (w % 2 != 0) norm = -norm;
  return norm * br;
}

struct InvertibilityCertificate {
  bool not_invertible = false;
  LaurentPoly forward;  // invariant of K
  LaurentPoly inverse;  // invariant of -K
  /// B-exponent patterns whose coefficients differ between K and -K.
  std::vector<std::vector<int>> differing_patterns;
  /// A relabeling B_i -> B_{perm[i-1]} carrying the invariant of K onto that of -K, if one exists.
  std::optional<std::vector<std::size_t>> permutation;
};

namespace detail {

inline InvertibilityCertificate compare_for_inverse(LaurentPoly p, LaurentPoly q) {
  InvertibilityCertificate cert;
  cert.not_invertible = !(p == q);
  if (cert.not_invertible) {
    std::map<std::vector<int>, LaurentPoly> dp, dq;
    for (const auto& [e, c] : p.terms()) dp[e.b] += LaurentPoly::monomial(c, e.a, {});
    for (const auto& [e, c] : q.terms()) dq[e.b] += LaurentPoly::monomial(c, e.a, {});
    std::map<std::vector<int>, bool> keys;
    for (const auto& [k, v] : dp) keys[k] = true;
    for (const auto& [k, v] : dq) keys[k] = true;
    for (const auto& [k, unused] : keys) {
      LaurentPoly zero;
      const LaurentPoly& a = dp.count(k) ? dp[k] : zero;
      const LaurentPoly& b = dq.count(k) ? dq[k] : zero;
      if (!(a == b)) cert.differing_patterns.push_back(k);
    }
    std::vector<std::size_t> perm(p.arity());
    std::iota(perm.begin(), perm.end(), 1);
    if (p.arity() <= 8) {
      do {
        if (permute_b_variables(p, perm) == q) {
          cert.permutation = perm;
          break;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  cert.forward = std::move(p);
  cert.inverse = std::move(q);
  return cert;
}

}  // namespace detail

/// Compares the indexed Jones-type invariant of K and -K. Equality proves nothing.
inline InvertibilityCertificate invertibility_certificate_v(const SingularDiagram& d, unsigned jobs = 1) {
  if (!d.is_long()) throw Error(ErrorCode::NotLong, "invertibility needs a long diagram");
  BracketOptions opt{Mode::IndexedB, jobs, DoublePointWeightTable::standard()};
  return detail::compare_for_inverse(jones_vs(d, opt), jones_vs(inverse_long_knot(d), opt));
}

}  // namespace singknot
