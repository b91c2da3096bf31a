#include "altknot/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace altknot {

std::string_view to_string(Direction d) { return d == Direction::Out ? "out" : "in"; }

std::string_view to_string(DiagramKind k) {
  switch (k) {
    case DiagramKind::Knot: return "knot";
    case DiagramKind::Link: return "link";
    case DiagramKind::Twist: return "twist";
  }
  return "knot";
}

std::string_view to_string(FaceSense s) { return s == FaceSense::CW ? "CW" : "CCW"; }

Diagram::Diagram(DiagramKind kind, std::vector<Dart> darts, std::vector<std::array<int, 4>> rotation)
    : kind_(kind), darts_(std::move(darts)), rotation_(std::move(rotation)), slot_(darts_.size(), -1) {
  for (const auto& r : rotation_) {
    for (int i = 0; i < 4; ++i) {
      if (r[i] >= 0 && r[i] < dart_count()) slot_[static_cast<std::size_t>(r[i])] = i;
    }
  }
}

int Diagram::next_around(int d) const {
  const int s = slot(d);
  if (s < 0) throw std::out_of_range("dart is missing from the rotation system");
  return rotation(dart(d).vertex)[static_cast<std::size_t>((s + 1) % 4)];
}

int Diagram::prev_around(int d) const {
  const int s = slot(d);
  if (s < 0) throw std::out_of_range("dart is missing from the rotation system");
  return rotation(dart(d).vertex)[static_cast<std::size_t>((s + 3) % 4)];
}

int Diagram::opposite(int d) const {
  const int s = slot(d);
  if (s < 0) throw std::out_of_range("dart is missing from the rotation system");
  return rotation(dart(d).vertex)[static_cast<std::size_t>((s + 2) % 4)];
}

std::vector<int> Diagram::edges() const {
  std::vector<int> out;
  out.reserve(darts_.size() / 2);
  for (const auto& d : darts_)
    if (d.direction == Direction::Out) out.push_back(d.id);
  return out;
}

int Diagram::loop_count() const {
  int n = 0;
  for (const auto& d : darts_) {
    if (d.direction != Direction::Out) continue;
    if (d.twin >= 0 && d.twin < dart_count() && darts_[static_cast<std::size_t>(d.twin)].vertex == d.vertex) ++n;
  }
  return n;
}

Diagram Diagram::with_kind(DiagramKind kind) const {
  Diagram copy = *this;
  copy.kind_ = kind;
  return copy;
}

bool ValidationReport::mentions(std::string_view rule) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.rule == rule; });
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out << "; ";
    out << violations[i].rule << ": " << violations[i].detail;
  }
  return out.str();
}

InvalidDiagram::InvalidDiagram(ValidationReport report)
    : std::invalid_argument("invalid diagram: " + report.summary()), report_(std::move(report)) {}

namespace {

class Reporter {
 public:
  void add(std::string rule, std::string detail) { report.violations.push_back({std::move(rule), std::move(detail)}); }
  ValidationReport report;
};

template <typename... Args>
std::string cat(Args&&... args) {
  std::ostringstream out;
  (out << ... << args);
  return out.str();
}

}  // namespace

ValidationReport validate(const Diagram& d) {
  Reporter r;
  const int n = d.dart_count();
  const int V = d.vertex_count();

  if (V < 1) {
    r.add("vertex count", "a diagram needs at least one vertex");
    return r.report;
  }
  if (n != 4 * V) r.add("dart ids", cat("expected ", 4 * V, " darts, found ", n));

  bool darts_sane = true;
  for (int i = 0; i < n; ++i) {
    const Dart& x = d.darts()[static_cast<std::size_t>(i)];
    if (x.id != i) {
      r.add("dart ids", cat("dart at position ", i, " has id ", x.id));
      darts_sane = false;
    }
    if (x.vertex < 0 || x.vertex >= V) {
      r.add("dart ids", cat("dart ", i, " references vertex ", x.vertex));
      darts_sane = false;
    }
    if (x.twin < 0 || x.twin >= n) {
      r.add("twin", cat("dart ", i, " has twin ", x.twin, " out of range"));
      darts_sane = false;
    }
  }
  if (!darts_sane) return r.report;

  for (int i = 0; i < n; ++i) {
    const Dart& x = d.dart(i);
    if (x.twin == i) {
      r.add("twin", cat("dart ", i, " is its own twin"));
    } else if (d.dart(x.twin).twin != i) {
      r.add("twin", cat("twin of dart ", x.twin, " is not ", i));
    } else if (d.dart(x.twin).direction == x.direction) {
      r.add("edge orientation", cat("darts ", i, " and ", x.twin, " have the same direction"));
    }
  }

  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  bool rotation_sane = true;
  for (int v = 0; v < V; ++v) {
    int outs = 0;
    for (int s = 0; s < 4; ++s) {
      const int id = d.rotation(v)[static_cast<std::size_t>(s)];
      if (id < 0 || id >= n) {
        r.add("rotation", cat("vertex ", v, " lists unknown dart ", id));
        rotation_sane = false;
        continue;
      }
      ++seen[static_cast<std::size_t>(id)];
      if (d.dart(id).vertex != v) {
        r.add("rotation", cat("dart ", id, " listed at vertex ", v, " but attached to ", d.dart(id).vertex));
        rotation_sane = false;
      }
      if (d.dart(id).direction == Direction::Out) ++outs;
    }
    if (outs != 2) r.add("in/out balance", cat("vertex ", v, " has ", outs, " out darts"));
    bool alternates = true;
    for (int s = 0; s < 4; ++s) {
      const int a = d.rotation(v)[static_cast<std::size_t>(s)];
      const int b = d.rotation(v)[static_cast<std::size_t>((s + 1) % 4)];
      if (a < 0 || a >= n || b < 0 || b >= n) continue;
      if (d.dart(a).direction == d.dart(b).direction) alternates = false;
    }
    if (!alternates) r.add("alternation", cat("rotation at vertex ", v, " does not alternate out/in"));
  }
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)] != 1) {
      r.add("rotation", cat("dart ", i, " appears ", seen[static_cast<std::size_t>(i)], " times in the rotation system"));
      rotation_sane = false;
    }
  }

  if (d.loop_count() > 0 && d.kind() != DiagramKind::Twist)
    r.add("loops", cat(d.loop_count(), " loop edge(s) in a diagram not flagged as a twist"));

  // Connectivity over the underlying multigraph.
  std::vector<int> comp(static_cast<std::size_t>(V), -1);
  std::vector<int> stack{0};
  comp[0] = 0;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const Dart& x : d.darts()) {
      if (x.vertex != v) continue;
      const int w = d.dart(x.twin).vertex;
      if (comp[static_cast<std::size_t>(w)] < 0) {
        comp[static_cast<std::size_t>(w)] = 0;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != V) r.add("connectivity", cat("only ", reached, " of ", V, " vertices are reachable"));

  if (rotation_sane && r.report.ok()) {
    const int f = static_cast<int>(faces(d).faces.size());
    const int e = n / 2;
    if (V + f != e + 2) r.add("euler", cat("V + F = ", V + f, " but E + 2 = ", e + 2, "; the map is not spherical"));
  }
  return r.report;
}

void require_valid(const Diagram& d) {
  auto report = validate(d);
  if (!report.ok()) throw InvalidDiagram(std::move(report));
}

int FaceCensus::count(int size) const {
  auto it = counts.find(size);
  return it == counts.end() ? 0 : it->second;
}

int FaceCensus::total() const {
  int t = 0;
  for (const auto& [size, c] : counts) t += c;
  return t;
}

long FaceCensus::weighted_total() const {
  long t = 0;
  for (const auto& [size, c] : counts) t += static_cast<long>(size) * c;
  return t;
}

FaceTrace faces(const Diagram& d) {
  FaceTrace out;
  out.face_of.assign(static_cast<std::size_t>(d.dart_count()), -1);
  for (int start = 0; start < d.dart_count(); ++start) {
    if (out.face_of[static_cast<std::size_t>(start)] >= 0) continue;
    const int id = static_cast<int>(out.faces.size());
    Face f;
    int cur = start;
    while (out.face_of[static_cast<std::size_t>(cur)] < 0) {
      out.face_of[static_cast<std::size_t>(cur)] = id;
      f.darts.push_back(cur);
      cur = d.next_around(d.dart(cur).twin);
    }
    ++out.census.counts[f.size()];
    out.census.largest = std::max(out.census.largest, f.size());
    out.faces.push_back(std::move(f));
  }
  return out;
}

bool check_face_identity(const FaceCensus& census) {
  if (census.count(1) > 0) throw std::invalid_argument("face identity needs a census without one-edge faces");
  long rhs = 8;
  for (const auto& [size, c] : census.counts)
    if (size >= 5) rhs += static_cast<long>(size - 4) * c;
  return 2L * census.count(2) + census.count(3) == rhs;
}

std::vector<FaceSense> face_orientations(const Diagram& d) {
  const FaceTrace trace = faces(d);
  std::vector<FaceSense> senses;
  senses.reserve(trace.faces.size());
  for (const Face& f : trace.faces) {
    const Direction first = d.dart(f.darts.front()).direction;
    for (int x : f.darts)
      if (d.dart(x).direction != first) throw std::domain_error("orientation rule broken");
    senses.push_back(first == Direction::Out ? FaceSense::CCW : FaceSense::CW);
  }
  return senses;
}

}  // namespace altknot
