#pragma once

// Reidemeister and singular moves as local rewrites of the combinatorial map,
// plus a seeded fuzzer that checks both invariants along random move sequences.
//
// A rewrite removes a few vertices, keeps the edges that cross the boundary of
// the affected disk as "stubs", and glues in new vertices whose arms refer to
// stubs or to fresh inner edges. Orientation of inner edges is propagated from
// the stubs and crossing signs follow from which arms are marked over.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "singknot/alexander.hpp"
#include "singknot/bracket.hpp"
#include "singknot/diagram.hpp"

namespace singknot {

enum class MoveKind { R1Add, R1Remove, R2Add, R2Remove, R3, SII, SIIInverse, SIII };

inline constexpr std::array<MoveKind, 8> kAllMoveKinds = {MoveKind::R1Add, MoveKind::R1Remove, MoveKind::R2Add,
                                                          MoveKind::R2Remove, MoveKind::R3, MoveKind::SII,
                                                          MoveKind::SIIInverse, MoveKind::SIII};

inline std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::R1Add: return "R1+";
    case MoveKind::R1Remove: return "R1-";
    case MoveKind::R2Add: return "R2";
    case MoveKind::R2Remove: return "R2inv";
    case MoveKind::R3: return "R3";
    case MoveKind::SII: return "SII";
    case MoveKind::SIIInverse: return "SIIinv";
    case MoveKind::SIII: return "SIII";
  }
  return "?";
}

inline bool adds_vertices(MoveKind k) { return k == MoveKind::R1Add || k == MoveKind::R2Add; }

struct MoveInstance {
  MoveKind kind = MoveKind::R1Add;
  std::vector<int> site;  // edge ids and flags locating the match
  std::string variant;    // orientation/side case
  bool operator==(const MoveInstance&) const = default;
  auto operator<=>(const MoveInstance&) const = default;
};

inline std::string describe(const MoveInstance& m) {
  std::ostringstream out;
  out << to_string(m.kind) << '[';
  for (std::size_t i = 0; i < m.site.size(); ++i) out << (i ? "," : "") << m.site[i];
  out << "] " << m.variant;
  return out.str();
}

namespace detail {

/// Scratch state for one local rewrite.
class Workbench {
 public:
  explicit Workbench(const SingularDiagram& d) : d_(d), verts_(d.vertices()), removed_(d.vertices().size(), 0) {
    for (const auto& [e, ends] : d.edges()) next_id_ = std::max(next_id_, e + 1);
    next_id_ = std::max(next_id_, d.end_edge() + 1);
  }

  struct Stub {
    EdgeId edge;
    bool entering;  // the strand enters the disk along this edge
  };

  /// Stub for the edge at a slot of a vertex that will be removed.
  int stub_at(Slot s) {
    const Vertex& v = verts_[s.vertex];
    stubs_.push_back({v.edges[s.pos], v.dirs[s.pos] == Dir::In});
    return static_cast<int>(stubs_.size()) - 1;
  }

  /// Cuts edge e open; returns (entering stub, leaving stub). If e is the cut
  /// edge, `mark_on_head` chooses which piece keeps the marked point.
  std::pair<int, int> split_edge(EdgeId e, bool mark_on_head) {
    if (d_.vertices().empty()) {
      stubs_.push_back({e, true});
      stubs_.push_back({e, false});
    } else {
      const EdgeEnds& ends = d_.edges().at(e);
      EdgeId fresh = next_id_++;
      bool tail_fresh = d_.cut_edge() == e && mark_on_head;
      Slot s = tail_fresh ? ends.tail : ends.head;
      verts_[s.vertex].edges[s.pos] = fresh;
      stubs_.push_back({tail_fresh ? fresh : e, true});
      stubs_.push_back({tail_fresh ? e : fresh, false});
    }
    int n = static_cast<int>(stubs_.size());
    return {n - 2, n - 1};
  }

  void remove(int v) { removed_[v] = 1; }

  int inner() { return inner_count_++; }

  struct ArmRef {
    int stub = -1;
    int inner = -1;
  };
  static ArmRef S(int stub) { return {stub, -1}; }
  static ArmRef I(int inner) { return {-1, inner}; }

  /// Adds a vertex with arms in counterclockwise order. For crossings `axis`
  /// selects the over pair: 0 = arms 0 and 2, 1 = arms 1 and 3.
  void add_vertex(std::array<ArmRef, 4> arms, bool double_point, int axis = 0) {
    added_.push_back({arms, double_point, axis});
  }

  void connect(int a, int b) { connections_.emplace_back(a, b); }

  /// Assembles, validates and canonicalizes the rewritten diagram. Throws on
  /// an invalid result (orientation clash, split diagram).
  SingularDiagram finish() {
    std::vector<EdgeId> inner_id(inner_count_);
    for (auto& id : inner_id) id = next_id_++;

    // arm directions
    const std::size_t na = added_.size();
    std::vector<std::array<std::optional<Dir>, 4>> dir(na);
    for (std::size_t v = 0; v < na; ++v)
      for (int k = 0; k < 4; ++k)
        if (added_[v].arms[k].stub >= 0) dir[v][k] = stubs_[added_[v].arms[k].stub].entering ? Dir::In : Dir::Out;
    auto set = [&](std::size_t v, int k, Dir d) {
      if (dir[v][k]) {
        if (*dir[v][k] != d) throw Error(ErrorCode::OrientationConflict, "rewrite orientation clash");
        return false;
      }
      dir[v][k] = d;
      return true;
    };
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t v = 0; v < na; ++v)
        for (int k = 0; k < 4; ++k)
          if (dir[v][k]) changed |= set(v, (k + 2) % 4, flip(*dir[v][k]));
      for (int label = 0; label < inner_count_; ++label) {
        std::vector<std::pair<std::size_t, int>> occ;
        for (std::size_t v = 0; v < na; ++v)
          for (int k = 0; k < 4; ++k)
            if (added_[v].arms[k].inner == label) occ.emplace_back(v, k);
        if (occ.size() != 2) throw Error(ErrorCode::EdgeMultiplicity, "inner edge must join two arms");
        auto [v0, k0] = occ[0];
        auto [v1, k1] = occ[1];
        if (dir[v0][k0]) changed |= set(v1, k1, flip(*dir[v0][k0]));
        if (dir[v1][k1]) changed |= set(v0, k0, flip(*dir[v1][k1]));
      }
    }

    // merges from direct stub connections
    std::map<EdgeId, EdgeId> rename;
    auto resolve = [&](EdgeId e) {
      while (rename.count(e)) e = rename.at(e);
      return e;
    };
    std::optional<EdgeId> cut = d_.cut_edge();
    int closed_loops = 0;
    for (auto [a, b] : connections_) {
      Stub sa = stubs_[a], sb = stubs_[b];
      if (sa.entering == sb.entering) throw Error(ErrorCode::OrientationConflict, "connected stubs run against each other");
      if (!sa.entering) std::swap(sa, sb);
      EdgeId in = resolve(sa.edge), out = resolve(sb.edge);
      if (in == out) {
        ++closed_loops;
        continue;
      }
      if (cut && out == *cut) rename[in] = out;
      else rename[out] = in;
    }

    std::vector<Vertex> out;
    for (std::size_t v = 0; v < verts_.size(); ++v)
      if (!removed_[v]) out.push_back(verts_[v]);
    for (std::size_t v = 0; v < na; ++v) {
      std::array<Arm, 4> ccw;
      for (int k = 0; k < 4; ++k) {
        const ArmRef& r = added_[v].arms[k];
        if (!dir[v][k]) throw Error(ErrorCode::OrientationConflict, "rewrite leaves an unoriented arm");
        EdgeId e = r.stub >= 0 ? stubs_[r.stub].edge : inner_id[r.inner];
        bool over = !added_[v].double_point && (k % 2 == added_[v].axis);
        ccw[k] = Arm{e, *dir[v][k], over};
      }
      out.push_back(make_vertex(ccw, added_[v].double_point));
    }
    for (auto& v : out)
      for (auto& e : v.edges) e = resolve(e);

    if (closed_loops > 0) {
      if (!out.empty() || closed_loops > 1) throw Error(ErrorCode::Disconnected, "rewrite splits off a loop");
      EdgeId e = cut ? *cut : 1;
      return SingularDiagram::build({}, cut ? std::optional<EdgeId>(e) : std::nullopt, e, {e}).canonical();
    }
    return SingularDiagram::build(std::move(out), cut, next_id_++).canonical();
  }

 private:
  struct Added {
    std::array<ArmRef, 4> arms;
    bool double_point;
    int axis;
  };
  const SingularDiagram& d_;
  std::vector<Vertex> verts_;
  std::vector<char> removed_;
  std::vector<Stub> stubs_;
  std::vector<Added> added_;
  std::vector<std::pair<int, int>> connections_;
  int inner_count_ = 0;
  EdgeId next_id_ = 1;
};

inline char class_letter(QuadrantClass q) {
  switch (q) {
    case QuadrantClass::In: return 'i';
    case QuadrantClass::Out: return 'o';
    case QuadrantClass::Left: return 'l';
    case QuadrantClass::Right: return 'r';
  }
  return '?';
}

inline char sign_letter(const Vertex& v) { return v.is_double_point() ? 'v' : (v.sign() > 0 ? '+' : '-'); }

inline int over_axis(const Vertex& v, int bl_pos) { return v.on_over_strand(bl_pos) ? 0 : 1; }

/// Bigon faces: (corner 0, corner 1) at distinct vertices.
struct Bigon {
  Corner c0, c1;
  EdgeId side_a, side_b;  // the two bounding edges
};

inline std::vector<Bigon> bigons(const SingularDiagram& d) {
  std::vector<Bigon> out;
  for (const Face& f : d.faces()) {
    if (f.corners.size() != 2) continue;
    Corner c0 = f.corners[0], c1 = f.corners[1];
    if (c0.vertex == c1.vertex) continue;
    const Vertex& w0 = d.vertices()[c0.vertex];
    EdgeId a = w0.edges[c0.quadrant], b = w0.edges[(c0.quadrant + 1) % 4];
    if (d.cut_edge() && (a == *d.cut_edge() || b == *d.cut_edge())) continue;
    out.push_back({c0, c1, std::min(a, b), std::max(a, b)});
  }
  return out;
}

/// Stub layout shared by every bigon rewrite: (b1, b2, t2, t1).
inline std::array<int, 4> bigon_stubs(Workbench& wb, const Bigon& g) {
  int q0 = g.c0.quadrant, q1 = g.c1.quadrant;
  int w0 = g.c0.vertex, w1 = g.c1.vertex;
  std::array<int, 4> s{wb.stub_at({w0, (q0 + 2) % 4}), wb.stub_at({w0, (q0 + 3) % 4}),
                       wb.stub_at({w1, (q1 + 2) % 4}), wb.stub_at({w1, (q1 + 3) % 4})};
  wb.remove(w0);
  wb.remove(w1);
  return s;
}

/// Adds the two-vertex bigon content on stubs (b1, b2, t2, t1).
inline void add_bigon(Workbench& wb, const std::array<int, 4>& s, bool dp1, int axis1, bool dp2, int axis2) {
  using W = Workbench;
  int p = wb.inner(), r = wb.inner();
  wb.add_vertex({W::S(s[0]), W::S(s[1]), W::I(p), W::I(r)}, dp1, axis1);
  wb.add_vertex({W::I(r), W::I(p), W::S(s[2]), W::S(s[3])}, dp2, axis2);
}

struct Triangle {
  std::array<Corner, 3> c;
  std::array<EdgeId, 3> sides;
};

inline std::vector<Triangle> triangles(const SingularDiagram& d) {
  std::vector<Triangle> out;
  for (const Face& f : d.faces()) {
    if (f.corners.size() != 3) continue;
    std::array<Corner, 3> c{f.corners[0], f.corners[1], f.corners[2]};
    if (c[0].vertex == c[1].vertex || c[1].vertex == c[2].vertex || c[0].vertex == c[2].vertex) continue;
    std::array<EdgeId, 3> sides;
    bool touches_cut = false;
    for (int i = 0; i < 3; ++i) {
      sides[i] = d.vertices()[c[i].vertex].edges[c[i].quadrant];
      if (d.cut_edge() && sides[i] == *d.cut_edge()) touches_cut = true;
    }
    if (touches_cut) continue;
    std::sort(sides.begin(), sides.end());
    out.push_back({c, sides});
  }
  return out;
}

// Strand pairs at the triangle vertices: w0 = (A,B), w1 = (A,C), w2 = (B,C).
// over[x][y] tells whether strand x passes over y at their shared vertex.
struct TriangleStrands {
  int dp_count = 0;
  int dp_pair = -1;  // 0 = AB, 1 = AC, 2 = BC
  bool over[3][3] = {};
};

inline TriangleStrands triangle_strands(const SingularDiagram& d, const Triangle& t) {
  TriangleStrands ts;
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (int i = 0; i < 3; ++i) {
    const Vertex& v = d.vertices()[t.c[i].vertex];
    int q = t.c[i].quadrant;
    // slot of the first strand: A at q+2 on w0, A at q+1 on w1, B at q on w2
    int first_slot = i == 0 ? (q + 2) % 4 : (i == 1 ? (q + 1) % 4 : q);
    int x = pairs[i][0], y = pairs[i][1];
    if (v.is_double_point()) {
      ++ts.dp_count;
      ts.dp_pair = i;
    } else {
      bool xo = v.on_over_strand(first_slot);
      ts.over[x][y] = xo;
      ts.over[y][x] = !xo;
    }
  }
  return ts;
}

}  // namespace detail

/// Every applicable move. Introductions are skipped when the diagram already
/// has `max_vertices` vertices or more.
inline std::vector<MoveInstance> find_moves(const SingularDiagram& d, std::size_t max_vertices = 64);

/// Applies m; throws StaleSite if m is not applicable to d.
inline SingularDiagram apply_move(const SingularDiagram& d, const MoveInstance& m);

namespace detail {

inline SingularDiagram rewrite(const SingularDiagram& d, const MoveInstance& m) {
  using W = Workbench;
  Workbench wb(d);
  const auto& s = m.site;
  switch (m.kind) {
    case MoveKind::R1Add: {
      // site: edge, right loop, first pass over, mark on head piece
      EdgeId e = s[0];
      bool right = s[1] != 0, first_over = s[2] != 0, mark_head = s[3] != 0;
      auto [in, out] = wb.split_edge(e, mark_head);
      int loop = wb.inner();
      // compass order E, N, W, S
      std::array<W::ArmRef, 4> arms = right ? std::array<W::ArmRef, 4>{W::I(loop), W::I(loop), W::S(out), W::S(in)}
                                            : std::array<W::ArmRef, 4>{W::S(out), W::I(loop), W::I(loop), W::S(in)};
      wb.add_vertex(arms, false, first_over ? 1 : 0);
      return wb.finish();
    }
    case MoveKind::R1Remove: {
      for (const Face& f : d.faces()) {
        if (f.corners.size() != 1) continue;
        Corner c = f.corners[0];
        const Vertex& v = d.vertices()[c.vertex];
        if (v.edges[c.quadrant] != s[0] || v.is_double_point()) continue;
        int a = wb.stub_at({c.vertex, (c.quadrant + 2) % 4});
        int b = wb.stub_at({c.vertex, (c.quadrant + 3) % 4});
        wb.remove(c.vertex);
        wb.connect(a, b);
        return wb.finish();
      }
      break;
    }
    case MoveKind::R2Add: {
      // site: edge Y, side Y, edge X, side X, X over, mark Y head, mark X head
      auto pieces = [&](EdgeId e, int side, bool mark_head) {
        auto [in, out] = wb.split_edge(e, mark_head);
        // (before, after) along the face boundary, which runs with the edge on its left side
        return side == static_cast<int>(Side::Left) ? std::pair{in, out} : std::pair{out, in};
      };
      auto [y_before, y_after] = pieces(s[0], s[1], s[5] != 0);
      auto [x_before, x_after] = pieces(s[2], s[3], s[6] != 0);
      bool x_over = s[4] != 0;
      add_bigon(wb, {x_after, y_before, y_after, x_before}, false, x_over ? 0 : 1, false, x_over ? 1 : 0);
      return wb.finish();
    }
    case MoveKind::R2Remove:
    case MoveKind::SII:
    case MoveKind::SIIInverse: {
      for (const Bigon& g : bigons(d)) {
        if (g.side_a != s[0] || g.side_b != s[1]) continue;
        const Vertex& v1 = d.vertices()[g.c0.vertex];
        const Vertex& v2 = d.vertices()[g.c1.vertex];
        int a1 = over_axis(v1, (g.c0.quadrant + 2) % 4);
        int a2 = over_axis(v2, g.c1.quadrant);
        auto st = bigon_stubs(wb, g);
        if (m.kind == MoveKind::R2Remove) {
          wb.connect(st[0], st[3]);
          wb.connect(st[1], st[2]);
        } else {
          add_bigon(wb, st, v2.is_double_point(), a2, v1.is_double_point(), a1);
        }
        return wb.finish();
      }
      break;
    }
    case MoveKind::R3:
    case MoveKind::SIII: {
      for (const Triangle& t : triangles(d)) {
        if (t.sides[0] != s[0] || t.sides[1] != s[1] || t.sides[2] != s[2]) continue;
        TriangleStrands ts = triangle_strands(d, t);
        int q0 = t.c[0].quadrant, q1 = t.c[1].quadrant, q2 = t.c[2].quadrant;
        int w0 = t.c[0].vertex, w1 = t.c[1].vertex, w2 = t.c[2].vertex;
        int b1 = wb.stub_at({w0, (q0 + 2) % 4}), b2 = wb.stub_at({w0, (q0 + 3) % 4});
        int b3 = wb.stub_at({w1, (q1 + 2) % 4}), t3 = wb.stub_at({w1, (q1 + 3) % 4});
        int t2 = wb.stub_at({w2, (q2 + 2) % 4}), t1 = wb.stub_at({w2, (q2 + 3) % 4});
        wb.remove(w0);
        wb.remove(w1);
        wb.remove(w2);
        int x = wb.inner(), y = wb.inner(), u = wb.inner();
        enum { A, B, C };
        auto axis = [&](int first, int second) { return ts.over[first][second] ? 0 : 1; };
        wb.add_vertex({W::S(b2), W::S(b3), W::I(x), W::I(y)}, ts.dp_pair == 2, axis(B, C));
        wb.add_vertex({W::S(b1), W::I(y), W::I(u), W::S(t1)}, ts.dp_pair == 1, axis(A, C));
        wb.add_vertex({W::I(u), W::I(x), W::S(t3), W::S(t2)}, ts.dp_pair == 0, axis(A, B));
        return wb.finish();
      }
      break;
    }
  }
  throw Error(ErrorCode::StaleSite, "no match for " + describe(m));
}

}  // namespace detail

inline std::vector<MoveInstance> find_moves(const SingularDiagram& d, std::size_t max_vertices) {
  using detail::class_letter;
  using detail::sign_letter;
  std::vector<MoveInstance> out;
  const bool grow = d.vertices().size() < max_vertices;
  const std::optional<EdgeId> cut = d.cut_edge();
  auto marks = [&](EdgeId e) { return cut && *cut == e ? std::vector<int>{0, 1} : std::vector<int>{0}; };

  if (grow) {
    for (const auto& [e, ends] : d.edges())
      for (int right : {0, 1})
        for (int over : {0, 1})
          for (int mark : marks(e))
            out.push_back({MoveKind::R1Add, {e, right, over, mark},
                           std::string(right ? "right" : "left") + (over ? "/over" : "/under") + (mark ? "/mark-after" : "")});

    for (const Face& f : d.faces()) {
      const auto& bd = f.boundary;
      for (std::size_t i = 0; i < bd.size(); ++i)
        for (std::size_t j = i + 1; j < bd.size(); ++j) {
          if (bd[i].edge == bd[j].edge) continue;
          for (int x_over : {0, 1})
            for (int my : marks(bd[i].edge))
              for (int mx : marks(bd[j].edge))
                out.push_back({MoveKind::R2Add,
                               {bd[i].edge, static_cast<int>(bd[i].side), bd[j].edge, static_cast<int>(bd[j].side), x_over,
                                my, mx},
                               std::string(bd[i].side == bd[j].side ? "antiparallel" : "parallel") +
                                   (my || mx ? "/mark-after" : "")});
        }
    }
  }

  for (const Face& f : d.faces()) {
    if (f.corners.size() != 1) continue;
    Corner c = f.corners[0];
    const Vertex& v = d.vertices()[c.vertex];
    EdgeId loop = v.edges[c.quadrant];
    if (v.is_double_point() || (cut && *cut == loop)) continue;
    MoveInstance m{MoveKind::R1Remove, {loop}, std::string(1, sign_letter(v)) + class_letter(v.quadrant_class(c.quadrant))};
    try {
      detail::rewrite(d, m);
      out.push_back(m);
    } catch (const Error&) {
    }
  }

  for (const auto& g : detail::bigons(d)) {
    const Vertex& v1 = d.vertices()[g.c0.vertex];
    const Vertex& v2 = d.vertices()[g.c1.vertex];
    if (v1.is_crossing() && v2.is_crossing()) {
      int a1 = detail::over_axis(v1, (g.c0.quadrant + 2) % 4);
      int a2 = detail::over_axis(v2, g.c1.quadrant);
      if (a1 == a2) continue;  // same strand must be over at both
      MoveInstance m{MoveKind::R2Remove, {g.side_a, g.side_b},
                     v1.quadrant_class(g.c0.quadrant) == QuadrantClass::In ||
                             v1.quadrant_class(g.c0.quadrant) == QuadrantClass::Out
                         ? "parallel"
                         : "antiparallel"};
      try {
        detail::rewrite(d, m);
        out.push_back(m);
      } catch (const Error&) {
      }
    } else if (v1.is_double_point() != v2.is_double_point()) {
      const Vertex& dp = v1.is_double_point() ? v1 : v2;
      const Vertex& cr = v1.is_double_point() ? v2 : v1;
      int q = v1.is_double_point() ? g.c0.quadrant : g.c1.quadrant;
      QuadrantClass cls = dp.quadrant_class(q);
      MoveKind kind = cls == QuadrantClass::Out || cls == QuadrantClass::Right ? MoveKind::SII : MoveKind::SIIInverse;
      out.push_back({kind, {g.side_a, g.side_b}, std::string(1, class_letter(cls)) + sign_letter(cr)});
    }
  }

  for (const auto& t : detail::triangles(d)) {
    detail::TriangleStrands ts = detail::triangle_strands(d, t);
    std::string signs;
    for (const Corner& c : t.c) signs += sign_letter(d.vertices()[c.vertex]);
    std::sort(signs.begin(), signs.end());
    if (ts.dp_count == 0) {
      // acyclic over relation: some strand is over both others
      bool top = false;
      for (int x = 0; x < 3; ++x) {
        int y = (x + 1) % 3, z = (x + 2) % 3;
        if (ts.over[x][y] && ts.over[x][z]) top = true;
      }
      if (top) out.push_back({MoveKind::R3, {t.sides[0], t.sides[1], t.sides[2]}, signs});
    } else if (ts.dp_count == 1) {
      const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
      int x = pairs[ts.dp_pair][0], y = pairs[ts.dp_pair][1];
      int z = 3 - x - y;
      if (ts.over[z][x] != ts.over[z][y]) continue;
      const Corner& dc = t.c[ts.dp_pair];
      QuadrantClass cls = d.vertices()[dc.vertex].quadrant_class(dc.quadrant);
      out.push_back({MoveKind::SIII, {t.sides[0], t.sides[1], t.sides[2]},
                     std::string(ts.over[z][x] ? "over/" : "under/") + class_letter(cls)});
    }
  }
  return out;
}

inline SingularDiagram apply_move(const SingularDiagram& d, const MoveInstance& m) {
  auto all = find_moves(d);
  if (std::find(all.begin(), all.end(), m) == all.end())
    throw Error(ErrorCode::StaleSite, describe(m) + " does not match the diagram");
  return detail::rewrite(d, m);
}

// ---------------------------------------------------------------------------
// Fuzzing

/// FNV-1a over a string, printed as 16 hex digits.
inline std::string digest(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

struct FuzzOptions {
  std::size_t steps = 8;
  std::uint64_t seed = 1;
  std::size_t max_vertices = 12;
  /// Relative weight of the introduction kinds (R1+, R2) against the others.
  double introduction_bias = 1.0;
  DoublePointWeightTable bracket_table = DoublePointWeightTable::standard();
  QuadrantWeightTable alexander_table = QuadrantWeightTable::standard();
};

struct FuzzStep {
  std::size_t step = 0;
  MoveInstance move;
  std::size_t vertices = 0;
  std::string jones_digest;
  std::string alexander_digest;  // empty for closed diagrams
  bool jones_ok = true;
  bool alexander_ok = true;
};

struct FuzzReport {
  std::uint64_t seed = 0;
  std::string jones_digest;  // digest of the starting invariants
  std::string alexander_digest;
  std::vector<FuzzStep> steps;
  std::optional<std::size_t> first_failure;  // index into steps
  bool success() const { return !first_failure.has_value(); }
};

struct Invariants {
  LaurentPoly jones;
  std::optional<LaurentPoly> alexander;
};

inline Invariants compute_invariants(const SingularDiagram& d, const FuzzOptions& opt) {
  Mode mode = d.is_long() ? Mode::IndexedB : Mode::SingleB;
  Invariants inv;
  inv.jones = jones_vs(d, BracketOptions{mode, 1, opt.bracket_table});
  if (d.is_long()) inv.alexander = alexander_s(d, AlexanderOptions{mode, opt.alexander_table});
  return inv;
}

/// Picks a kind among those with instances (introductions weighted by the
/// bias), then an instance of that kind uniformly.
inline std::optional<MoveInstance> choose_move(const std::vector<MoveInstance>& moves, double introduction_bias,
                                               std::mt19937_64& rng) {
  std::map<MoveKind, std::vector<const MoveInstance*>> by_kind;
  for (const auto& m : moves) by_kind[m.kind].push_back(&m);
  if (by_kind.empty()) return std::nullopt;
  std::vector<MoveKind> kinds;
  std::vector<double> weights;
  for (const auto& [k, list] : by_kind) {
    kinds.push_back(k);
    weights.push_back(adds_vertices(k) ? introduction_bias : 1.0);
  }
  std::discrete_distribution<std::size_t> pick_kind(weights.begin(), weights.end());
  const auto& list = by_kind[kinds[pick_kind(rng)]];
  std::uniform_int_distribution<std::size_t> pick(0, list.size() - 1);
  return *list[pick(rng)];
}

inline FuzzReport fuzz_invariance(const SingularDiagram& start, const FuzzOptions& opt) {
  FuzzReport report;
  report.seed = opt.seed;
  std::mt19937_64 rng(opt.seed);
  const Invariants ref = compute_invariants(start, opt);
  report.jones_digest = digest(ref.jones.to_string());
  report.alexander_digest = ref.alexander ? digest(ref.alexander->to_string()) : "";
  SingularDiagram d = start;
  for (std::size_t step = 0; step < opt.steps; ++step) {
    auto m = choose_move(find_moves(d, opt.max_vertices), opt.introduction_bias, rng);
    if (!m) break;
    d = detail::rewrite(d, *m);
    Invariants now = compute_invariants(d, opt);
    FuzzStep rec;
    rec.step = step + 1;
    rec.move = *m;
    rec.vertices = d.vertices().size();
    rec.jones_digest = digest(now.jones.to_string());
    rec.alexander_digest = now.alexander ? digest(now.alexander->to_string()) : "";
    rec.jones_ok = now.jones == ref.jones;
    rec.alexander_ok = now.alexander == ref.alexander;
    report.steps.push_back(rec);
    if (!(rec.jones_ok && rec.alexander_ok)) {
      report.first_failure = report.steps.size() - 1;
      break;
    }
  }
  return report;
}

}  // namespace singknot
