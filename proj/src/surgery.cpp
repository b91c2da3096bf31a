#include "altknot/surgery.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

#include "altknot/spectra.hpp"

namespace altknot {

namespace {

Direction flip(Direction d) { return d == Direction::Out ? Direction::In : Direction::Out; }

/// Mutable working copy of a map; surgery edits this and then rebuilds an
/// immutable Diagram.
struct Workspace {
  std::vector<int> vertex;
  std::vector<int> twin;
  std::vector<Direction> dir;
  std::vector<std::array<int, 4>> rotation;

  explicit Workspace(const Diagram& d) {
    for (const Dart& x : d.darts()) {
      vertex.push_back(x.vertex);
      twin.push_back(x.twin);
      dir.push_back(x.direction);
    }
    rotation.assign(d.rotation().begin(), d.rotation().end());
  }

  int add_dart(int v, Direction d) {
    vertex.push_back(v);
    twin.push_back(-1);
    dir.push_back(d);
    return static_cast<int>(vertex.size()) - 1;
  }

  void join(int a, int b) {
    twin[static_cast<std::size_t>(a)] = b;
    twin[static_cast<std::size_t>(b)] = a;
  }

  /// Starts every rotation at an out dart.
  void normalize() {
    for (auto& r : rotation) {
      while (dir[static_cast<std::size_t>(r[0])] != Direction::Out) std::rotate(r.begin(), r.begin() + 1, r.end());
    }
  }

  /// Drops the listed darts and vertex, shifting higher ids down.
  void remove(const std::set<int>& darts, int dead_vertex) {
    std::vector<int> dart_map(vertex.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < vertex.size(); ++i)
      if (!darts.count(static_cast<int>(i))) dart_map[i] = next++;
    auto vmap = [&](int v) { return v > dead_vertex ? v - 1 : v; };

    Workspace out = *this;
    out.vertex.assign(static_cast<std::size_t>(next), 0);
    out.twin.assign(static_cast<std::size_t>(next), 0);
    out.dir.assign(static_cast<std::size_t>(next), Direction::Out);
    for (std::size_t i = 0; i < vertex.size(); ++i) {
      const int n = dart_map[i];
      if (n < 0) continue;
      out.vertex[static_cast<std::size_t>(n)] = vmap(vertex[i]);
      out.twin[static_cast<std::size_t>(n)] = dart_map[static_cast<std::size_t>(twin[i])];
      out.dir[static_cast<std::size_t>(n)] = dir[i];
    }
    out.rotation.clear();
    for (int v = 0; v < static_cast<int>(rotation.size()); ++v) {
      if (v == dead_vertex) continue;
      std::array<int, 4> r{};
      for (int s = 0; s < 4; ++s) r[static_cast<std::size_t>(s)] = dart_map[static_cast<std::size_t>(rotation[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)])];
      out.rotation.push_back(r);
    }
    *this = std::move(out);
  }

  Diagram build() const {
    std::vector<Dart> darts;
    for (std::size_t i = 0; i < vertex.size(); ++i)
      darts.push_back({static_cast<int>(i), vertex[i], twin[i], dir[i]});
    Diagram raw(DiagramKind::Twist, std::move(darts), rotation);
    require_valid(raw);
    return raw.with_kind(infer_kind(raw));
  }
};

void require_vertex(const Diagram& d, int v) {
  if (v < 0 || v >= d.vertex_count()) throw std::out_of_range("vertex " + std::to_string(v) + " does not exist");
}

void require_edge(const Diagram& d, int e) {
  if (e < 0 || e >= d.dart_count() || d.dart(e).direction != Direction::Out)
    throw std::invalid_argument("edge " + std::to_string(e) + " is not the out dart of an edge");
}

/// Lane pairs at a vertex as (out dart, in dart), first pair holding the
/// vertex's first out dart in rotation order.
std::array<std::array<int, 2>, 2> lane_pairs(const Diagram& d, int v, Lane lane) {
  const auto& r = d.rotation(v);
  int s = 0;
  while (d.dart(r[static_cast<std::size_t>(s)]).direction != Direction::Out) ++s;
  auto at = [&](int k) { return r[static_cast<std::size_t>((s + k) % 4)]; };
  if (lane == Lane::Out) return {{{at(0), at(1)}, {at(2), at(3)}}};
  return {{{at(0), at(3)}, {at(2), at(1)}}};
}

/// Out darts of the edges met by the strand running through edge `e`.
std::vector<int> strand_of(const Diagram& d, int e) {
  std::vector<int> out;
  int cur = e;
  bool column_move = true;
  do {
    out.push_back(cur);
    cur = column_move ? d.dart(d.opposite(d.dart(cur).twin)).twin : d.opposite(cur);
    column_move = !column_move;
  } while (cur != e);
  return out;
}

}  // namespace

Diagram expand_vertex(const Diagram& d, int vertex, Lane lane) {
  require_valid(d);
  require_vertex(d, vertex);
  const auto& r = d.rotation(vertex);
  int s = 0;
  while (d.dart(r[static_cast<std::size_t>(s)]).direction != Direction::Out) ++s;
  auto at = [&](int k) { return r[static_cast<std::size_t>((s + k) % 4)]; };
  const std::array<int, 2> keep = lane == Lane::Out ? std::array{at(0), at(1)} : std::array{at(3), at(0)};
  const std::array<int, 2> give = lane == Lane::Out ? std::array{at(2), at(3)} : std::array{at(1), at(2)};

  Workspace w(d);
  const int fresh = d.vertex_count();
  const Direction after_keep = flip(w.dir[static_cast<std::size_t>(keep[1])]);
  const Direction after_give = flip(w.dir[static_cast<std::size_t>(give[1])]);
  const int n1 = w.add_dart(vertex, after_keep);
  const int n2 = w.add_dart(vertex, flip(after_keep));
  const int m1 = w.add_dart(fresh, after_give);
  const int m2 = w.add_dart(fresh, flip(after_give));
  w.join(n1, m2);
  w.join(n2, m1);
  for (int g : give) w.vertex[static_cast<std::size_t>(g)] = fresh;
  w.rotation[static_cast<std::size_t>(vertex)] = {keep[0], keep[1], n1, n2};
  w.rotation.push_back({give[0], give[1], m1, m2});
  w.normalize();
  return w.build();
}

Diagram contract_bigon(const Diagram& d, int face_id) {
  require_valid(d);
  const FaceTrace trace = faces(d);
  if (face_id < 0 || face_id >= static_cast<int>(trace.faces.size()))
    throw std::out_of_range("face " + std::to_string(face_id) + " does not exist");
  const Face& f = trace.faces[static_cast<std::size_t>(face_id)];
  if (f.size() != 2) throw std::invalid_argument("face " + std::to_string(face_id) + " is not a bigon");
  const int x = f.darts[0];
  const int y = f.darts[1];
  const int v1 = d.dart(x).vertex;
  const int v2 = d.dart(y).vertex;
  if (v1 == v2) throw std::invalid_argument("bigon endpoints coincide");
  const int ex = d.dart(x).direction == Direction::Out ? x : d.dart(x).twin;
  const int ey = d.dart(y).direction == Direction::Out ? y : d.dart(y).twin;
  const std::vector<int> strand = strand_of(d, ex);
  if (strand.size() == 2 && std::find(strand.begin(), strand.end(), ey) != strand.end())
    throw std::invalid_argument("bigon edges form a whole circle; contracting would erase a strand");

  const std::set<int> bigon{x, y, d.dart(x).twin, d.dart(y).twin};
  // At each endpoint the two bigon darts are consecutive; take the other two
  // in rotation order, starting right after the bigon.
  auto rest = [&](int v) {
    const auto& r = d.rotation(v);
    int s = 0;
    while (!(bigon.count(r[static_cast<std::size_t>(s)]) && !bigon.count(r[static_cast<std::size_t>((s + 1) % 4)]))) ++s;
    return std::array{r[static_cast<std::size_t>((s + 1) % 4)], r[static_cast<std::size_t>((s + 2) % 4)]};
  };
  const auto r1 = rest(v1);
  const auto r2 = rest(v2);
  const int keep = std::min(v1, v2);
  const int dead = std::max(v1, v2);

  Workspace w(d);
  for (int a : {r1[0], r1[1], r2[0], r2[1]}) w.vertex[static_cast<std::size_t>(a)] = keep;
  w.rotation[static_cast<std::size_t>(keep)] = {r1[0], r1[1], r2[0], r2[1]};
  w.remove(bigon, dead);
  w.normalize();
  return w.build();
}

Elimination eliminate_crossing(const Diagram& d, int vertex, Lane lane) {
  require_valid(d);
  require_vertex(d, vertex);
  const auto pairs = lane_pairs(d, vertex, lane);
  auto partner = [&](int dart) {
    for (const auto& p : pairs) {
      if (p[0] == dart) return p[1];
      if (p[1] == dart) return p[0];
    }
    throw std::logic_error("dart outside the eliminated vertex");
  };
  auto at_vertex = [&](int dart) { return d.dart(dart).vertex == vertex; };

  Workspace w(d);
  std::set<int> consumed;
  for (int i : d.rotation(vertex)) {
    if (d.dart(i).direction != Direction::In || at_vertex(d.dart(i).twin)) continue;
    const int start = d.dart(i).twin;  // external out dart
    int cur = i;
    int end = -1;
    for (;;) {
      consumed.insert(cur);
      const int o = partner(cur);
      consumed.insert(o);
      const int t = d.dart(o).twin;
      if (!at_vertex(t)) {
        end = t;
        break;
      }
      cur = t;
    }
    w.join(start, end);
  }
  int circles = 0;
  for (int i : d.rotation(vertex)) {
    if (consumed.count(i) || d.dart(i).direction != Direction::In) continue;
    ++circles;
    int cur = i;
    while (!consumed.count(cur)) {
      consumed.insert(cur);
      const int o = partner(cur);
      consumed.insert(o);
      cur = d.dart(o).twin;
    }
  }

  if (d.vertex_count() == 1) return {std::nullopt, circles};
  const auto& r = d.rotation(vertex);
  w.remove({r.begin(), r.end()}, vertex);
  std::vector<Dart> darts;
  for (std::size_t i = 0; i < w.vertex.size(); ++i) darts.push_back({static_cast<int>(i), w.vertex[i], w.twin[i], w.dir[i]});
  Diagram raw(DiagramKind::Twist, std::move(darts), w.rotation);
  const ValidationReport report = validate(raw);
  if (!report.ok()) throw std::domain_error("crossing elimination leaves an invalid diagram: " + report.summary());
  return {raw.with_kind(infer_kind(raw)), circles};
}

Diagram compose_twist(const Diagram& d1, int edge1, const Diagram& d2, int edge2, int twists) {
  require_valid(d1);
  require_valid(d2);
  require_edge(d1, edge1);
  require_edge(d2, edge2);
  if (twists < 0) throw std::invalid_argument("twist count must be nonnegative");

  Workspace w(d1);
  const int offset = d1.dart_count();
  const int voffset = d1.vertex_count();
  for (const Dart& x : d2.darts()) {
    w.vertex.push_back(x.vertex + voffset);
    w.twin.push_back(x.twin + offset);
    w.dir.push_back(x.direction);
  }
  for (const auto& r : d2.rotation()) w.rotation.push_back({r[0] + offset, r[1] + offset, r[2] + offset, r[3] + offset});

  const int a2 = edge2 + offset;
  const int b2 = d2.dart(edge2).twin + offset;
  // Dangling (out, in) pair on the d1 side, carried through the twist chain.
  int out_end = edge1;
  int in_end = d1.dart(edge1).twin;
  for (int t = 0; t < twists; ++t) {
    const int v = static_cast<int>(w.rotation.size());
    const int from_out = w.add_dart(v, Direction::In);
    const int to_in = w.add_dart(v, Direction::Out);
    const int next_in = w.add_dart(v, Direction::In);
    const int next_out = w.add_dart(v, Direction::Out);
    w.join(from_out, out_end);
    w.join(to_in, in_end);
    w.rotation.push_back({from_out, to_in, next_in, next_out});
    out_end = next_out;
    in_end = next_in;
  }
  w.join(out_end, b2);
  w.join(a2, in_end);
  w.normalize();
  return w.build();
}

std::vector<int> canonical_form(const Diagram& d) {
  require_valid(d);
  const int n = d.dart_count();
  std::vector<int> best;
  std::vector<int> label(static_cast<std::size_t>(n));
  std::vector<int> order;
  for (int start = 0; start < n; ++start) {
    std::fill(label.begin(), label.end(), -1);
    order.clear();
    label[static_cast<std::size_t>(start)] = 0;
    order.push_back(start);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const int x = order[head];
      for (int y : {d.next_around(x), d.dart(x).twin}) {
        if (label[static_cast<std::size_t>(y)] >= 0) continue;
        label[static_cast<std::size_t>(y)] = static_cast<int>(order.size());
        order.push_back(y);
      }
    }
    std::vector<int> code{d.vertex_count()};
    code.reserve(3 * static_cast<std::size_t>(n) + 1);
    for (int x : order) {
      code.push_back(label[static_cast<std::size_t>(d.next_around(x))]);
      code.push_back(label[static_cast<std::size_t>(d.dart(x).twin)]);
      code.push_back(d.dart(x).direction == Direction::Out ? 0 : 1);
    }
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

bool isomorphic(const Diagram& a, const Diagram& b) {
  return a.vertex_count() == b.vertex_count() && canonical_form(a) == canonical_form(b);
}

}  // namespace altknot
