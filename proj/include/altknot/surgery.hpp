#pragma once

#include <optional>
#include <vector>

#include "altknot/diagram.hpp"

namespace altknot {

/// The two ways of splitting a crossing's four darts into two consecutive
/// (out, in) pairs. Lane::Out groups every out dart with its rotation
/// successor; Lane::In groups it with its predecessor. Expanding a vertex
/// twice along the same lane extends the same ribbon.
enum class Lane { Out, In };

/// Replaces `vertex` by an antiparallel bigon. The vertex keeps the lane pair
/// containing its first out dart; the other pair moves to the new vertex
/// `vertex_count()`. The four new darts get ids dart_count() .. +3; dart
/// dart_count() + 1 borders the new bigon face.
Diagram expand_vertex(const Diagram& d, int vertex, Lane lane);

/// Collapses a two-edge face with distinct endpoints into a single vertex.
/// `face_id` indexes faces(d).faces. The lower-numbered endpoint survives;
/// higher vertex and dart ids shift down to stay dense.
Diagram contract_bigon(const Diagram& d, int face_id);

struct Elimination {
  /// Empty when nothing remains but unknotted circles.
  std::optional<Diagram> diagram;
  /// Vertex-free closed curves produced by the splice.
  int free_circles = 0;

  bool is_unknot() const { return !diagram.has_value(); }
};

/// Removes a crossing by joining in-edges to out-edges across the lane pairs.
/// Throws std::domain_error if the remaining diagram falls apart.
Elimination eliminate_crossing(const Diagram& d, int vertex, Lane lane);

/// Connected sum through edge1 of d1 and edge2 of d2 (edges named by their
/// out dart), with `twists` crossings inserted between the two joining
/// strands. Dart ids of d1 are kept, d2's are offset by d1.dart_count().
Diagram compose_twist(const Diagram& d1, int edge1, const Diagram& d2, int edge2, int twists);

/// Lexicographically smallest BFS relabelling code over all start darts.
/// Equal codes <=> orientation-preserving isomorphic maps (directions kept).
std::vector<int> canonical_form(const Diagram& d);
bool isomorphic(const Diagram& a, const Diagram& b);

}  // namespace altknot
