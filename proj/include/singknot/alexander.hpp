#pragma once

// Singular Alexander polynomial from the dot (Kauffman state) model on a long
// diagram. The two faces next to the cut edge are starred; a state places one
// dot at a corner of every vertex so that each unstarred face gets one dot.

#include <algorithm>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "singknot/bracket.hpp"
#include "singknot/diagram.hpp"
#include "singknot/poly.hpp"
#include "singknot/weights.hpp"

namespace singknot {

/// quadrant[v] is the corner of vertex v holding its dot.
struct AlexanderState {
  std::vector<int> quadrant;
  bool operator==(const AlexanderState&) const = default;
};

inline std::pair<int, int> star_regions(const SingularDiagram& d) {
  if (!d.is_long()) throw Error(ErrorCode::NotLong, "star regions need a long diagram");
  auto s = d.star_faces();
  if (s.size() != 2) throw Error(ErrorCode::NonPlanar, "cut edge does not separate two faces");
  return {s[0], s[1]};
}

namespace detail {

/// Calls visit(state) for every perfect assignment, choosing at each step the
/// open face with the fewest remaining corners.
inline void for_each_alexander_state(const SingularDiagram& d, const std::function<void(const std::vector<int>&)>& visit) {
  auto [s1, s2] = star_regions(d);
  const int n = static_cast<int>(d.vertices().size());
  const int nf = static_cast<int>(d.faces().size());
  // corners of each face, excluding starred faces
  std::vector<std::vector<Corner>> corners(nf);
  for (int f = 0; f < nf; ++f) {
    if (f == s1 || f == s2) continue;
    corners[f] = d.faces()[f].corners;
  }
  std::vector<int> state(n, -1);
  std::vector<char> face_done(nf, 0);
  face_done[s1] = face_done[s2] = 1;
  int remaining = nf - 2;
  if (remaining != n) return;

  std::function<void()> rec = [&] {
    if (remaining == 0) {
      visit(state);
      return;
    }
    int best = -1;
    int best_count = std::numeric_limits<int>::max();
    for (int f = 0; f < nf; ++f) {
      if (face_done[f]) continue;
      int cnt = 0;
      for (const Corner& c : corners[f]) cnt += state[c.vertex] < 0;
      if (cnt < best_count) {
        best_count = cnt;
        best = f;
        if (cnt == 0) return;
      }
    }
    face_done[best] = 1;
    --remaining;
    for (const Corner& c : corners[best]) {
      if (state[c.vertex] >= 0) continue;
      state[c.vertex] = c.quadrant;
      rec();
      state[c.vertex] = -1;
    }
    ++remaining;
    face_done[best] = 0;
  };
  rec();
}

}  // namespace detail

inline std::vector<AlexanderState> enumerate_states(const SingularDiagram& d) {
  std::vector<AlexanderState> out;
  detail::for_each_alexander_state(d, [&](const std::vector<int>& s) { out.push_back({s}); });
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.quadrant < b.quadrant; });
  return out;
}

struct AlexanderOptions {
  Mode mode = Mode::SingleB;
  QuadrantWeightTable table = QuadrantWeightTable::standard();
};

inline LaurentPoly alexander_s(const SingularDiagram& d, const AlexanderOptions& opt = {}) {
  if (!d.is_long()) throw Error(ErrorCode::NotLong, "the Alexander state sum needs a long diagram");
  BIndexing bi = BIndexing::make(d, opt.mode);
  const std::size_t arity = bi.arity;
  const int n = static_cast<int>(d.vertices().size());
  // weights[v][q]
  std::vector<std::array<LaurentPoly, 4>> weights(n);
  for (int v = 0; v < n; ++v) {
    const Vertex& vx = d.vertices()[v];
    for (int q = 0; q < 4; ++q)
      weights[v][q] = embed_b(opt.table.entry(vx.kind, vx.quadrant_class(q)), bi.index[v], arity);
  }
  LaurentPoly sum(arity);
  detail::for_each_alexander_state(d, [&](const std::vector<int>& s) {
    LaurentPoly term = LaurentPoly::constant(1, arity);
    for (int v = 0; v < n; ++v) term *= weights[v][s[v]];
    sum += term;
  });
  return sum;
}

inline InvertibilityCertificate invertibility_certificate_alex(const SingularDiagram& d) {
  if (!d.is_long()) throw Error(ErrorCode::NotLong, "invertibility needs a long diagram");
  AlexanderOptions opt{Mode::IndexedB, QuadrantWeightTable::standard()};
  return detail::compare_for_inverse(alexander_s(d, opt), alexander_s(inverse_long_knot(d), opt));
}

}  // namespace singknot
