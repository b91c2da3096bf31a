#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace altknot {

/// Orientation of a half-edge relative to the vertex it is attached to.
/// The over-lane edges of a crossing point away from it (Out), the
/// under-lane edges point into it (In).
enum class Direction : std::uint8_t { Out, In };

enum class DiagramKind : std::uint8_t { Knot, Link, Twist };

std::string_view to_string(Direction d);
std::string_view to_string(DiagramKind k);

struct Dart {
  int id = 0;
  int vertex = 0;
  int twin = 0;
  Direction direction = Direction::Out;

  friend bool operator==(const Dart&, const Dart&) = default;
};

/// Combinatorial map of a 2-in/2-out 4-regular multigraph on the sphere.
///
/// Each vertex lists its four darts in embedding order. An edge is identified
/// throughout the library by the id of its Out dart. The constructor stores
/// whatever it is given; use validate() to check the structural invariants.
class Diagram {
 public:
  Diagram(DiagramKind kind, std::vector<Dart> darts, std::vector<std::array<int, 4>> rotation);

  DiagramKind kind() const { return kind_; }
  int vertex_count() const { return static_cast<int>(rotation_.size()); }
  int dart_count() const { return static_cast<int>(darts_.size()); }
  int edge_count() const { return dart_count() / 2; }

  std::span<const Dart> darts() const { return darts_; }
  const Dart& dart(int id) const { return darts_.at(static_cast<std::size_t>(id)); }
  std::span<const std::array<int, 4>> rotation() const { return rotation_; }
  const std::array<int, 4>& rotation(int vertex) const { return rotation_.at(static_cast<std::size_t>(vertex)); }

  /// Position of a dart inside its vertex rotation, or -1 when absent.
  int slot(int dart) const { return slot_.at(static_cast<std::size_t>(dart)); }
  /// Rotation successor (sigma) of a dart at its vertex.
  int next_around(int dart) const;
  int prev_around(int dart) const;
  /// The dart across the vertex (same lane).
  int opposite(int dart) const;

  /// Out darts, i.e. one handle per edge, in increasing id order.
  std::vector<int> edges() const;
  int loop_count() const;

  Diagram with_kind(DiagramKind kind) const;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.kind_ == b.kind_ && a.darts_ == b.darts_ && a.rotation_ == b.rotation_;
  }

 private:
  DiagramKind kind_;
  std::vector<Dart> darts_;
  std::vector<std::array<int, 4>> rotation_;
  std::vector<int> slot_;
};

struct Violation {
  std::string rule;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool mentions(std::string_view rule) const;
  std::string summary() const;
};

/// Thrown when an operation that requires a valid diagram receives one that
/// is not.
class InvalidDiagram : public std::invalid_argument {
 public:
  explicit InvalidDiagram(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Checks every structural invariant; never throws.
///
/// Rule names used in the report: "vertex count", "dart ids", "twin",
/// "edge orientation", "rotation", "in/out balance", "alternation", "loops",
/// "connectivity", "euler".
ValidationReport validate(const Diagram& d);
void require_valid(const Diagram& d);

struct Face {
  std::vector<int> darts;
  int size() const { return static_cast<int>(darts.size()); }
};

struct FaceCensus {
  std::map<int, int> counts;  // face size -> number of faces
  int largest = 0;
  bool sea_included = true;

  int count(int size) const;
  int total() const;
  long weighted_total() const;
};

struct FaceTrace {
  std::vector<Face> faces;
  FaceCensus census;
  /// face index for every dart
  std::vector<int> face_of;
};

/// Traces every face: from dart d the next boundary dart is
/// next_around(twin(d)). Faces are numbered in order of their smallest dart.
FaceTrace faces(const Diagram& d);

/// 2*C_2 + C_3 == 8 + sum_{j>=5} (j-4)*C_j. Throws for censuses with
/// one-edge faces, where the identity does not apply.
bool check_face_identity(const FaceCensus& census);

enum class FaceSense : std::uint8_t { CW, CCW };
std::string_view to_string(FaceSense s);

/// Two-colouring by boundary orientation. CCW marks faces whose boundary runs
/// along the edge orientation. Throws std::domain_error("orientation rule
/// broken") when a face boundary is not coherent.
std::vector<FaceSense> face_orientations(const Diagram& d);

}  // namespace altknot
