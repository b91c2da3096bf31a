#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

#include "altknot/diagram.hpp"

namespace altknot {

/// Square matrix of small integers, row-major. For a diagram, entry (j,k)
/// counts the edges oriented j -> k; loops sit on the diagonal.
class AdjMatrix {
 public:
  AdjMatrix() = default;
  explicit AdjMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}
  /// Throws std::invalid_argument unless the rows form a square matrix.
  static AdjMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int size() const { return n_; }
  int operator()(int row, int col) const { return entries_[index(row, col)]; }
  int& operator()(int row, int col) { return entries_[index(row, col)]; }

  std::vector<std::vector<int>> rows() const;
  int trace() const;
  int row_sum(int row) const;
  int col_sum(int col) const;
  /// P^T M P for the permutation sending index i to perm[i].
  AdjMatrix relabeled(const std::vector<int>& perm) const;

  friend bool operator==(const AdjMatrix&, const AdjMatrix&) = default;
  friend auto operator<=>(const AdjMatrix&, const AdjMatrix&) = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(col);
  }
  int n_ = 0;
  std::vector<int> entries_;
};

/// Rows of space-separated integers; also accepts a JSON array of arrays.
AdjMatrix parse_matrix(const std::string& text);
std::string format_matrix(const AdjMatrix& m);

AdjMatrix adjacency(const Diagram& d);

/// Every row and column sums to 2, entries nonnegative.
bool is_two_regular(const AdjMatrix& m);

struct MatrixEdge {
  int id = 0;
  int row = 0;
  int col = 0;
};

struct StrandComponent {
  /// Edge ids in walk order; consecutive edges alternately share a row
  /// (tail vertex) and a column (head vertex).
  std::vector<int> walk;
  /// Even and odd positions of the walk.
  std::array<std::vector<int>, 2> classes;
};

struct StrandDecomposition {
  /// Matrix entries expanded into edges in (row, col) order; an entry 2
  /// contributes two edges with consecutive ids.
  std::vector<MatrixEdge> edges;
  std::vector<StrandComponent> components;

  int count() const { return static_cast<int>(components.size()); }
};

/// Alternating row/column walk. Each walk starts from the smallest edge not
/// yet traversed and closes when it returns to its first edge.
StrandDecomposition trace_strands(const AdjMatrix& m);

/// Knot when there is one strand and no loop, link for several strands,
/// twist whenever loops are present.
DiagramKind infer_kind(const Diagram& d);

struct PermutationPair {
  AdjMatrix first;
  AdjMatrix second;
};

/// All splittings m = P1 + P2 into permutation matrices, one per choice of
/// class in every component after the first. The class holding the
/// smallest edge of component 0 always goes to P1 and identical pairs are
/// reported once.
std::vector<PermutationPair> permutation_decompositions(const AdjMatrix& m);

/// Number of components whose two classes give different matrices.
int distinct_class_components(const AdjMatrix& m);

/// m * 1 == 2 * 1 and 1^T * m == 2 * 1^T.
bool all_ones_check(const AdjMatrix& m);

/// trace(m^k), exactly.
mpz_class closed_path_count(const AdjMatrix& m, int k);
/// trace(m^1) .. trace(m^k_max).
std::vector<mpz_class> closed_path_counts(const AdjMatrix& m, int k_max);

}  // namespace altknot
