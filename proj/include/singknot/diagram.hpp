#pragma once

// Oriented singular link diagrams stored as combinatorial maps.
//
// Every vertex has four incidences in counterclockwise order. For a crossing,
// position 0 is the incoming under-edge; the incoming over-edge sits at
// position 3 for a positive crossing and at position 1 for a negative one.
// For a double point, position 0 is an incoming edge and the two strands
// occupy the antipodal pairs {0,2} and {1,3}.
//
// A long diagram is stored closed up: the start and end edges are merged into
// one internal "cut" edge whose id is the start edge id. The end edge id is
// kept only for reading and writing files.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "singknot/errors.hpp"

namespace singknot {

using EdgeId = int;

enum class VertexKind { PositiveCrossing, NegativeCrossing, DoublePoint };
enum class Dir : std::uint8_t { In, Out };
enum class Side : std::uint8_t { Left, Right };

/// Position of a corner relative to the two strands through a vertex.
enum class QuadrantClass : std::uint8_t { In, Out, Left, Right };

inline Dir flip(Dir d) { return d == Dir::In ? Dir::Out : Dir::In; }

struct Slot {
  int vertex = -1;
  int pos = -1;
  bool operator==(const Slot&) const = default;
};

struct Vertex {
  VertexKind kind = VertexKind::PositiveCrossing;
  std::array<EdgeId, 4> edges{};
  std::array<Dir, 4> dirs{};
  int label = 0;  // first-passage index of a double point (1-based), 0 if unset

  bool is_double_point() const { return kind == VertexKind::DoublePoint; }
  bool is_crossing() const { return !is_double_point(); }

  /// Whether position p lies on the over-strand of a crossing.
  bool on_over_strand(int p) const {
    return is_crossing() && (p % 2 == 1);
  }

  int sign() const {
    switch (kind) {
      case VertexKind::PositiveCrossing: return 1;
      case VertexKind::NegativeCrossing: return -1;
      case VertexKind::DoublePoint: return 0;
    }
    return 0;
  }

  /// Class of the corner between positions q and q+1.
  QuadrantClass quadrant_class(int q) const {
    Dir d1 = dirs[q % 4];
    Dir d2 = dirs[(q + 1) % 4];
    if (d1 == Dir::In && d2 == Dir::In) return QuadrantClass::In;
    if (d1 == Dir::Out && d2 == Dir::Out) return QuadrantClass::Out;
    if (d1 == Dir::In) return QuadrantClass::Right;
    return QuadrantClass::Left;
  }

  bool operator==(const Vertex&) const = default;
};

/// One arm of a vertex described geometrically, used to build vertices with
/// the anchor convention applied.
struct Arm {
  EdgeId edge = 0;
  Dir dir = Dir::In;
  bool over = false;
};

/// Builds a vertex from four arms in counterclockwise order. For crossings
/// exactly one antipodal pair must be flagged `over`.
inline Vertex make_vertex(const std::array<Arm, 4>& ccw, bool double_point) {
  Vertex v;
  int anchor = -1;
  for (int i = 0; i < 4; ++i) {
    if (ccw[i].dir != Dir::In) continue;
    if (double_point || !ccw[i].over) {
      anchor = i;
      break;
    }
  }
  if (anchor < 0) throw Error(ErrorCode::OrientationConflict, "vertex has no admissible incoming arm");
  for (int k = 0; k < 4; ++k) {
    v.edges[k] = ccw[(anchor + k) % 4].edge;
    v.dirs[k] = ccw[(anchor + k) % 4].dir;
  }
  if (double_point) {
    v.kind = VertexKind::DoublePoint;
  } else {
    const Arm& p1 = ccw[(anchor + 1) % 4];
    const Arm& p3 = ccw[(anchor + 3) % 4];
    if (!p1.over || !p3.over || ccw[(anchor + 2) % 4].over) {
      throw Error(ErrorCode::OrientationConflict, "over-strand is not an antipodal pair");
    }
    v.kind = p3.dir == Dir::In ? VertexKind::PositiveCrossing : VertexKind::NegativeCrossing;
  }
  return v;
}

struct Corner {
  int vertex = -1;
  int quadrant = -1;  // corner between positions quadrant and quadrant+1
  bool operator==(const Corner&) const = default;
};

struct FaceSide {
  EdgeId edge = 0;
  Side side = Side::Left;  // side of the edge, relative to its orientation
};

struct Face {
  std::vector<FaceSide> boundary;
  std::vector<Corner> corners;
  /// Half-edges (4*vertex + pos) traversed with this face on the left.
  std::vector<int> half_edges;
  bool is_star = false;
};

struct EdgeEnds {
  Slot tail;  // vertex/pos where the edge leaves, invalid for a vertex-free loop
  Slot head;
};

class SingularDiagram {
 public:
  /// Closed 0-vertex unknot.
  SingularDiagram() : SingularDiagram(build({}, std::nullopt, 0, {1})) {}

  /// Validates a closed-up description. `cut` marks the long-knot edge;
  /// `end_label` is the end-edge id used when writing the file.
  static SingularDiagram build(std::vector<Vertex> vertices, std::optional<EdgeId> cut, EdgeId end_label,
                               std::vector<EdgeId> isolated_edges = {}) {
    SingularDiagram d{Blank{}};
    d.vertices_ = std::move(vertices);
    d.cut_ = cut;
    d.end_label_ = end_label;
    d.index_edges(isolated_edges);
    d.validate();
    d.compute_faces();
    d.label_double_points();
    return d;
  }

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::map<EdgeId, EdgeEnds>& edges() const noexcept { return edges_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  bool is_long() const noexcept { return cut_.has_value(); }
  std::optional<EdgeId> cut_edge() const noexcept { return cut_; }
  EdgeId start_edge() const { return cut_.value(); }
  EdgeId end_edge() const { return end_label_; }
  int component_count() const noexcept { return components_; }

  std::size_t crossing_count() const {
    return static_cast<std::size_t>(
        std::count_if(vertices_.begin(), vertices_.end(), [](const Vertex& v) { return v.is_crossing(); }));
  }
  std::size_t double_point_count() const { return vertices_.size() - crossing_count(); }

  int writhe() const {
    int w = 0;
    for (const auto& v : vertices_) w += v.sign();
    return w;
  }

  /// Double points in first-passage order from the start edge.
  std::vector<int> double_point_order() const {
    if (!is_long()) throw Error(ErrorCode::NotLong, "double point order needs a long diagram");
    return dp_order_;
  }

  /// Index used for B_i: first-passage index for long diagrams; closed
  /// diagrams walk their components starting from the smallest edge id.
  int double_point_index(int vertex) const { return vertices_.at(vertex).label; }

  /// Edge leaving the vertex on the same strand as the edge arriving at `s`.
  EdgeId through(Slot s) const { return vertices_[s.vertex].edges[(s.pos + 2) % 4]; }

  /// The other end of the edge at half-edge (v, p).
  Slot opposite(Slot s) const {
    const EdgeEnds& e = edges_.at(vertices_[s.vertex].edges[s.pos]);
    return e.tail == s ? e.head : e.tail;
  }

  int face_of_corner(int vertex, int quadrant) const { return corner_face_[4 * vertex + quadrant]; }

  std::vector<int> star_faces() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < faces_.size(); ++i)
      if (faces_[i].is_star) out.push_back(static_cast<int>(i));
    return out;
  }

  /// Relabels edges (and reorders vertices) by a deterministic traversal so
  /// that diagrams equal up to renaming get identical representations.
  SingularDiagram canonical() const;

  /// Canonical file text: LONG first, then statements sorted by (kind, first edge).
  std::string serialize() const;

  /// Structural equality (same labels, same vertex order).
  bool operator==(const SingularDiagram& other) const {
    return vertices_ == other.vertices_ && cut_ == other.cut_ && end_label_ == other.end_label_ &&
           edges_.size() == other.edges_.size();
  }

  /// Equality up to renaming of edges.
  bool isomorphic(const SingularDiagram& other) const { return canonical().serialize() == other.canonical().serialize(); }

 private:
  struct Blank {};
  explicit SingularDiagram(Blank) {}

  void index_edges(const std::vector<EdgeId>& isolated) {
    edges_.clear();
    std::map<EdgeId, std::vector<std::pair<Slot, Dir>>> inc;
    for (int v = 0; v < static_cast<int>(vertices_.size()); ++v)
      for (int p = 0; p < 4; ++p) inc[vertices_[v].edges[p]].push_back({Slot{v, p}, vertices_[v].dirs[p]});
    for (const auto& [e, list] : inc) {
      if (list.size() != 2) {
        throw Error(ErrorCode::EdgeMultiplicity, "edge " + std::to_string(e) + " used " +
                                                     std::to_string(list.size()) + " times");
      }
      EdgeEnds ends;
      for (const auto& [slot, dir] : list) {
        if (dir == Dir::Out) {
          if (ends.tail.vertex >= 0) throw Error(ErrorCode::OrientationConflict, "edge " + std::to_string(e) + " leaves two vertices");
          ends.tail = slot;
        } else {
          if (ends.head.vertex >= 0) throw Error(ErrorCode::OrientationConflict, "edge " + std::to_string(e) + " enters two vertices");
          ends.head = slot;
        }
      }
      edges_[e] = ends;
    }
    for (EdgeId e : isolated) edges_[e] = EdgeEnds{};
  }

  void validate() {
    const int n = static_cast<int>(vertices_.size());
    for (const auto& v : vertices_) {
      int ins = 0;
      for (Dir d : v.dirs) ins += d == Dir::In;
      if (ins != 2 || v.dirs[0] != Dir::In || v.dirs[2] != Dir::Out || v.dirs[1] == v.dirs[3]) {
        throw Error(ErrorCode::OrientationConflict, "vertex strands are not consistently oriented");
      }
      if (v.kind == VertexKind::PositiveCrossing && v.dirs[3] != Dir::In)
        throw Error(ErrorCode::OrientationConflict, "positive crossing needs the incoming over-edge at position 4");
      if (v.kind == VertexKind::NegativeCrossing && v.dirs[1] != Dir::In)
        throw Error(ErrorCode::OrientationConflict, "negative crossing needs the incoming over-edge at position 2");
    }
    if (n == 0) {
      if (edges_.size() != 1) throw Error(ErrorCode::Disconnected, "vertex-free diagram must be a single loop");
      if (cut_ && !edges_.count(*cut_)) throw Error(ErrorCode::EdgeMultiplicity, "start edge is not an edge");
      components_ = 1;
      return;
    }
    for (const auto& [e, ends] : edges_) {
      if (ends.tail.vertex < 0) throw Error(ErrorCode::Disconnected, "vertex-free loop next to other components");
    }
    if (cut_ && !edges_.count(*cut_)) throw Error(ErrorCode::EdgeMultiplicity, "start edge is not used by any vertex");

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& [e, ends] : edges_) parent[find(ends.tail.vertex)] = find(ends.head.vertex);
    for (int v = 0; v < n; ++v)
      if (find(v) != find(0)) throw Error(ErrorCode::Disconnected, "split diagrams are not supported");

    // strand components
    std::map<EdgeId, bool> seen;
    components_ = 0;
    for (const auto& [e, ends] : edges_) {
      if (seen[e]) continue;
      ++components_;
      EdgeId cur = e;
      while (!seen[cur]) {
        seen[cur] = true;
        cur = through(edges_.at(cur).head);
      }
    }
  }

  void compute_faces() {
    faces_.clear();
    const int n = static_cast<int>(vertices_.size());
    if (n == 0) {
      EdgeId e = edges_.begin()->first;
      faces_.push_back(Face{{FaceSide{e, Side::Left}}, {}, {}, is_long()});
      faces_.push_back(Face{{FaceSide{e, Side::Right}}, {}, {}, is_long()});
      return;
    }
    std::vector<int> face_of_half(4 * n, -1);
    corner_face_.assign(4 * n, -1);
    for (int h0 = 0; h0 < 4 * n; ++h0) {
      if (face_of_half[h0] >= 0) continue;
      Face f;
      int id = static_cast<int>(faces_.size());
      int h = h0;
      while (face_of_half[h] < 0) {
        face_of_half[h] = id;
        Slot s{h / 4, h % 4};
        const Vertex& v = vertices_[s.vertex];
        f.half_edges.push_back(h);
        f.boundary.push_back(FaceSide{v.edges[s.pos], v.dirs[s.pos] == Dir::Out ? Side::Left : Side::Right});
        Slot o = opposite(s);
        int q = (o.pos + 3) % 4;
        f.corners.push_back(Corner{o.vertex, q});
        corner_face_[4 * o.vertex + q] = id;
        h = 4 * o.vertex + q;
      }
      faces_.push_back(std::move(f));
    }
    if (faces_.size() != vertices_.size() + 2) {
      throw Error(ErrorCode::NonPlanar, std::to_string(faces_.size()) + " faces for " +
                                            std::to_string(vertices_.size()) + " vertices");
    }
    if (cut_) {
      for (auto& f : faces_)
        for (const auto& side : f.boundary)
          if (side.edge == *cut_) f.is_star = true;
    }
  }

  void label_double_points() {
    for (auto& v : vertices_) v.label = 0;
    dp_order_.clear();
    if (vertices_.empty()) return;
    int next = 1;
    auto walk = [&](EdgeId start) {
      EdgeId cur = start;
      do {
        Slot h = edges_.at(cur).head;
        Vertex& v = vertices_[h.vertex];
        if (v.is_double_point() && v.label == 0) {
          v.label = next++;
          dp_order_.push_back(h.vertex);
        }
        cur = through(h);
      } while (cur != start);
    };
    if (cut_) walk(*cut_);
    // remaining components of a long link, then closed diagrams
    for (const auto& [e, ends] : edges_) walk(e);
    if (!cut_) dp_order_.clear();
  }

  std::vector<Vertex> vertices_;
  std::map<EdgeId, EdgeEnds> edges_;
  std::optional<EdgeId> cut_;
  EdgeId end_label_ = 0;
  int components_ = 0;
  std::vector<Face> faces_;
  std::vector<int> corner_face_;
  std::vector<int> dp_order_;
};

namespace detail {

inline int kind_rank(VertexKind k) {
  switch (k) {
    case VertexKind::PositiveCrossing: return 0;
    case VertexKind::NegativeCrossing: return 1;
    case VertexKind::DoublePoint: return 2;
  }
  return 3;
}

inline const char* kind_token(VertexKind k) {
  switch (k) {
    case VertexKind::PositiveCrossing: return "X+";
    case VertexKind::NegativeCrossing: return "X-";
    case VertexKind::DoublePoint: return "V";
  }
  return "?";
}

/// Rotates a double point so that position 0 is the incoming edge with the
/// smaller id under `name`.
template <class Name>
Vertex normalize_double_point(const Vertex& v, Name name) {
  if (!v.is_double_point()) return v;
  int alt = v.dirs[1] == Dir::In ? 1 : 3;
  if (name(v.edges[alt]) >= name(v.edges[0])) return v;
  Vertex r = v;
  for (int k = 0; k < 4; ++k) {
    r.edges[k] = v.edges[(alt + k) % 4];
    r.dirs[k] = v.dirs[(alt + k) % 4];
  }
  return r;
}

}  // namespace detail

inline SingularDiagram SingularDiagram::canonical() const {
  const int n = static_cast<int>(vertices_.size());
  if (n == 0) {
    if (cut_) return build({}, EdgeId{1}, EdgeId{1}, {1});
    return build({}, std::nullopt, 0, {1});
  }
  struct Labeling {
    std::vector<int> code;
    std::map<EdgeId, int> edge_label;
    std::vector<int> vertex_order;
  };
  auto run = [&](EdgeId start) {
    Labeling L;
    std::vector<int> vertex_rank(n, -1);
    std::vector<EdgeId> queue{start};
    L.edge_label[start] = 1;
    int next_label = 2;
    auto visit = [&](Slot s) {
      if (vertex_rank[s.vertex] >= 0) return;
      vertex_rank[s.vertex] = static_cast<int>(L.vertex_order.size());
      L.vertex_order.push_back(s.vertex);
      const Vertex& v = vertices_[s.vertex];
      for (int k = 0; k < 4; ++k) {
        EdgeId e = v.edges[(s.pos + k) % 4];
        if (!L.edge_label.count(e)) {
          L.edge_label[e] = next_label++;
          queue.push_back(e);
        }
      }
    };
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const EdgeEnds& ends = edges_.at(queue[qi]);
      visit(ends.tail);
      visit(ends.head);
    }
    auto name = [&](EdgeId e) { return L.edge_label.at(e); };
    for (int vi : L.vertex_order) {
      Vertex v = detail::normalize_double_point(vertices_[vi], name);
      L.code.push_back(detail::kind_rank(v.kind));
      for (int k = 0; k < 4; ++k) L.code.push_back(name(v.edges[k]) * 2 + (v.dirs[k] == Dir::Out));
    }
    return L;
  };

  std::optional<Labeling> best;
  if (cut_) {
    best = run(*cut_);
  } else {
    for (const auto& [e, ends] : edges_) {
      Labeling L = run(e);
      if (!best || L.code < best->code) best = std::move(L);
    }
  }
  auto name = [&](EdgeId e) { return best->edge_label.at(e); };
  std::vector<Vertex> out;
  for (int vi : best->vertex_order) {
    Vertex v = detail::normalize_double_point(vertices_[vi], name);
    for (auto& e : v.edges) e = name(e);
    v.label = 0;
    out.push_back(v);
  }
  std::optional<EdgeId> cut;
  EdgeId end = 0;
  if (cut_) {
    cut = 1;
    end = static_cast<EdgeId>(edges_.size()) + 1;
  }
  return build(std::move(out), cut, end);
}

inline std::string SingularDiagram::serialize() const {
  std::ostringstream out;
  if (cut_) out << "LONG " << *cut_ << ' ' << end_label_ << '\n';
  if (vertices_.empty()) return out.str();
  auto name = [&](EdgeId e) { return e; };
  std::vector<std::tuple<int, int, std::string>> lines;
  for (int vi = 0; vi < static_cast<int>(vertices_.size()); ++vi) {
    Vertex v = detail::normalize_double_point(vertices_[vi], name);
    std::array<EdgeId, 4> shown = v.edges;
    if (cut_) {
      for (int k = 0; k < 4; ++k)
        if (v.edges[k] == *cut_ && v.dirs[k] == Dir::Out) shown[k] = end_label_;
    }
    std::ostringstream line;
    line << detail::kind_token(v.kind);
    for (EdgeId e : shown) line << ' ' << e;
    lines.emplace_back(detail::kind_rank(v.kind), shown[0], line.str());
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& [rank, first, text] : lines) out << text << '\n';
  return out.str();
}

/// Parses the diagram text format (`X+`, `X-`, `V`, `LONG`, `#` comments).
/// An input without vertex statements is the unknot (long if LONG is given).
inline SingularDiagram parse_diagram(const std::string& text) {
  struct Raw {
    VertexKind kind;
    std::array<EdgeId, 4> edges;
    int line;
  };
  std::vector<Raw> raws;
  std::optional<std::pair<EdgeId, EdgeId>> long_ends;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto parse_id = [&](const std::string& tok) {
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(tok, &used);
    } catch (...) {
      used = 0;
    }
    if (used != tok.size() || value <= 0 || value > 1'000'000'000)
      throw Error(ErrorCode::MalformedLine, "bad edge id '" + tok + "'", lineno);
    return static_cast<EdgeId>(value);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "LONG") {
      if (tok.size() != 3) throw Error(ErrorCode::MalformedLine, "LONG takes two edge ids", lineno);
      if (long_ends) throw Error(ErrorCode::MalformedLine, "duplicate LONG statement", lineno);
      long_ends = std::pair{parse_id(tok[1]), parse_id(tok[2])};
      continue;
    }
    VertexKind kind;
    if (tok[0] == "X+") kind = VertexKind::PositiveCrossing;
    else if (tok[0] == "X-") kind = VertexKind::NegativeCrossing;
    else if (tok[0] == "V") kind = VertexKind::DoublePoint;
    else throw Error(ErrorCode::MalformedLine, "unknown statement '" + tok[0] + "'", lineno);
    if (tok.size() != 5) throw Error(ErrorCode::MalformedLine, "vertex needs four edge ids", lineno);
    Raw r{kind, {}, lineno};
    for (int k = 0; k < 4; ++k) r.edges[k] = parse_id(tok[k + 1]);
    raws.push_back(r);
  }

  std::map<EdgeId, int> uses;
  for (const auto& r : raws)
    for (EdgeId e : r.edges) ++uses[e];

  if (raws.empty()) {
    if (long_ends) {
      if (long_ends->first != long_ends->second)
        throw Error(ErrorCode::EdgeMultiplicity, "start and end edges of a vertex-free long knot must coincide");
      return SingularDiagram::build({}, long_ends->first, long_ends->first, {long_ends->first});
    }
    return SingularDiagram::build({}, std::nullopt, 0, {1});
  }

  std::optional<EdgeId> cut;
  EdgeId end_label = 0;
  if (long_ends) {
    auto [s, e] = *long_ends;
    if (s == e) throw Error(ErrorCode::EdgeMultiplicity, "start and end edge coincide in a diagram with vertices");
    if (uses[s] != 1) throw Error(ErrorCode::EdgeMultiplicity, "start edge " + std::to_string(s) + " must be used once");
    if (uses[e] != 1) throw Error(ErrorCode::EdgeMultiplicity, "end edge " + std::to_string(e) + " must be used once");
    cut = s;
    end_label = e;
  }
  for (const auto& [e, count] : uses) {
    if (long_ends && (e == long_ends->first || e == long_ends->second)) continue;
    if (count != 2)
      throw Error(ErrorCode::EdgeMultiplicity, "edge " + std::to_string(e) + " used " + std::to_string(count) + " times");
  }

  const int n = static_cast<int>(raws.size());
  std::vector<Vertex> verts(n);
  std::vector<std::array<std::optional<Dir>, 4>> dir(n);
  std::map<EdgeId, std::vector<Slot>> slots;
  for (int v = 0; v < n; ++v) {
    verts[v].kind = raws[v].kind;
    for (int p = 0; p < 4; ++p) {
      EdgeId e = raws[v].edges[p];
      if (long_ends && e == long_ends->second) e = long_ends->first;
      verts[v].edges[p] = e;
      slots[e].push_back(Slot{v, p});
    }
    dir[v][0] = Dir::In;
    dir[v][2] = Dir::Out;
    if (raws[v].kind == VertexKind::PositiveCrossing) {
      dir[v][3] = Dir::In;
      dir[v][1] = Dir::Out;
    } else if (raws[v].kind == VertexKind::NegativeCrossing) {
      dir[v][1] = Dir::In;
      dir[v][3] = Dir::Out;
    }
  }
  auto conflict = [&](Slot s, const std::string& why) {
    return Error(ErrorCode::OrientationConflict, why, raws[s.vertex].line);
  };
  auto set_dir = [&](Slot s, Dir d) {
    auto& cur = dir[s.vertex][s.pos];
    if (cur && *cur != d) throw conflict(s, "edge " + std::to_string(verts[s.vertex].edges[s.pos]) + " has inconsistent direction");
    bool changed = !cur;
    cur = d;
    return changed;
  };
  if (long_ends) {
    for (int v = 0; v < n; ++v)
      for (int p = 0; p < 4; ++p) {
        if (raws[v].edges[p] == long_ends->first) set_dir({v, p}, Dir::In);
        if (raws[v].edges[p] == long_ends->second) set_dir({v, p}, Dir::Out);
      }
  }
  auto propagate = [&] {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < n; ++v) {
        if (!verts[v].is_double_point()) continue;
        for (int p : {1, 3}) {
          int q = (p + 2) % 4;
          if (dir[v][p] && set_dir({v, q}, flip(*dir[v][p]))) changed = true;
        }
      }
      for (const auto& [e, list] : slots) {
        const Slot a = list[0], b = list[1];
        auto da = dir[a.vertex][a.pos];
        auto db = dir[b.vertex][b.pos];
        if (da && db && *da == *db) throw conflict(b, "edge " + std::to_string(e) + (*da == Dir::In ? " enters" : " leaves") + " two vertices");
        if (da && !db) changed |= set_dir(b, flip(*da));
        if (db && !da) changed |= set_dir(a, flip(*db));
      }
    }
  };
  propagate();
  for (int v = 0; v < n; ++v) {
    if (!dir[v][1]) {
      set_dir({v, 1}, Dir::In);
      propagate();
    }
  }
  for (int v = 0; v < n; ++v)
    for (int p = 0; p < 4; ++p) verts[v].dirs[p] = *dir[v][p];
  return SingularDiagram::build(std::move(verts), cut, end_label);
}

/// -K: the long diagram reflected in a vertical line (which reverses the
/// cyclic order at each vertex and exchanges over and under) with every edge
/// reversed. Crossing signs are preserved.
inline SingularDiagram inverse_long_knot(const SingularDiagram& d) {
  if (!d.is_long()) throw Error(ErrorCode::NotLong, "inverse long knot needs a long diagram");
  std::vector<Vertex> out;
  for (const auto& v : d.vertices()) {
    std::array<Arm, 4> ccw;
    for (int k = 0; k < 4; ++k) {
      int src = (4 - k) % 4;
      ccw[k] = Arm{v.edges[src], flip(v.dirs[src]), v.is_crossing() && !v.on_over_strand(src)};
    }
    out.push_back(make_vertex(ccw, v.is_double_point()));
  }
  if (out.empty()) return d.canonical();
  return SingularDiagram::build(std::move(out), d.cut_edge(), d.end_edge()).canonical();
}

/// Plane reflection without orientation change: flips every crossing sign.
inline SingularDiagram mirror(const SingularDiagram& d) {
  std::vector<Vertex> out;
  for (const auto& v : d.vertices()) {
    std::array<Arm, 4> ccw;
    for (int k = 0; k < 4; ++k) {
      int src = (4 - k) % 4;
      ccw[k] = Arm{v.edges[src], v.dirs[src], v.on_over_strand(src)};
    }
    out.push_back(make_vertex(ccw, v.is_double_point()));
  }
  if (out.empty()) return d;
  return SingularDiagram::build(std::move(out), d.cut_edge(), d.end_edge());
}

}  // namespace singknot
