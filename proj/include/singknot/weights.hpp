#pragma once

// Local weight tables for the two state sums. They are the only datum that
// depends on pictures rather than formulas, so they are kept here as plain
// values that callers can replace (the fuzz negative controls do exactly that).

#include <algorithm>
#include <array>
#include <cstddef>

#include "singknot/diagram.hpp"
#include "singknot/poly.hpp"

namespace singknot {

enum class Mode { SingleB, IndexedB };

/// Maps a template in A and a single B (arity 0 or 1) to arity `arity`,
/// sending B to B_index (1-based).
inline LaurentPoly embed_b(const LaurentPoly& tmpl, std::size_t index, std::size_t arity) {
  LaurentPoly out(arity);
  std::vector<int> b(arity, 0);
  for (const auto& [e, c] : tmpl.terms()) {
    int exp = e.b.empty() ? 0 : e.b[0];
    if (exp != 0 && (index == 0 || index > arity))
      throw Error(ErrorCode::ArityMismatch, "B variable index out of range");
    std::fill(b.begin(), b.end(), 0);
    if (exp != 0) b[index - 1] = exp;
    out.add_term(c, e.a, b);
  }
  return out;
}

/// Weights of the two smoothings at a double point, as templates in A and B.
struct DoublePointWeightTable {
  LaurentPoly oriented;    // smoothing that follows the orientation of both strands
  LaurentPoly unoriented;  // the other smoothing

  static DoublePointWeightTable standard() {
    return {LaurentPoly::monomial(1, 3, {1}), LaurentPoly::monomial(1, 3, {-1})};
  }
};

/// Weight of a dot in each quadrant class. Crossing entries are polynomials
/// in A only; double-point entries are templates in A and B.
struct QuadrantWeightTable {
  std::array<LaurentPoly, 4> positive;      // indexed by QuadrantClass
  std::array<LaurentPoly, 4> negative;
  std::array<LaurentPoly, 4> double_point;

  static QuadrantWeightTable standard() {
    using P = LaurentPoly;
    QuadrantWeightTable t;
    // order: In, Out, Left, Right
    t.positive = {P::a_power(1), -P::a_power(-1), P::constant(1), P::constant(1)};
    t.negative = {P::a_power(-1), -P::a_power(1), P::constant(1), P::constant(1)};
    P b = P::monomial(1, 1, {1});  // A*B
    t.double_point = {P::a_power(-2, 1) + b, P::constant(-1, 1) + b, P::a_power(-1, 1), P::a_power(-1, 1)};
    return t;
  }

  const LaurentPoly& entry(VertexKind kind, QuadrantClass q) const {
    auto i = static_cast<std::size_t>(q);
    switch (kind) {
      case VertexKind::PositiveCrossing: return positive[i];
      case VertexKind::NegativeCrossing: return negative[i];
      case VertexKind::DoublePoint: return double_point[i];
    }
    return positive[i];
  }
};

/// Number of B variables and the B index of each vertex for a given mode.
struct BIndexing {
  std::size_t arity = 0;
  std::vector<std::size_t> index;  // per vertex; 0 for crossings

  static BIndexing make(const SingularDiagram& d, Mode mode) {
    BIndexing bi;
    bi.index.assign(d.vertices().size(), 0);
    if (mode == Mode::IndexedB) {
      if (!d.is_long()) throw Error(ErrorCode::NotLong, "indexed B variables need a long diagram");
      bi.arity = d.double_point_count();
    } else {
      bi.arity = 1;
    }
    for (std::size_t v = 0; v < d.vertices().size(); ++v) {
      const Vertex& vx = d.vertices()[v];
      if (!vx.is_double_point()) continue;
      bi.index[v] = mode == Mode::IndexedB ? static_cast<std::size_t>(vx.label) : 1;
    }
    return bi;
  }
};

}  // namespace singknot
