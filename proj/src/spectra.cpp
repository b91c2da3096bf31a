#include "altknot/spectra.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace altknot {

AdjMatrix AdjMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  AdjMatrix m(n);
  for (int j = 0; j < n; ++j) {
    if (static_cast<int>(rows[static_cast<std::size_t>(j)].size()) != n)
      throw std::invalid_argument("matrix is not square");
    for (int k = 0; k < n; ++k) m(j, k) = rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
  }
  return m;
}

std::vector<std::vector<int>> AdjMatrix::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_)));
  for (int j = 0; j < n_; ++j)
    for (int k = 0; k < n_; ++k) out[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = (*this)(j, k);
  return out;
}

int AdjMatrix::trace() const {
  int t = 0;
  for (int j = 0; j < n_; ++j) t += (*this)(j, j);
  return t;
}

int AdjMatrix::row_sum(int row) const {
  int s = 0;
  for (int k = 0; k < n_; ++k) s += (*this)(row, k);
  return s;
}

int AdjMatrix::col_sum(int col) const {
  int s = 0;
  for (int j = 0; j < n_; ++j) s += (*this)(j, col);
  return s;
}

AdjMatrix AdjMatrix::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
  AdjMatrix out(n_);
  for (int j = 0; j < n_; ++j)
    for (int k = 0; k < n_; ++k)
      out(perm[static_cast<std::size_t>(j)], perm[static_cast<std::size_t>(k)]) = (*this)(j, k);
  return out;
}

AdjMatrix parse_matrix(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    try {
      return AdjMatrix::from_rows(nlohmann::json::parse(text).get<std::vector<std::vector<int>>>());
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("malformed matrix JSON: ") + e.what());
    }
  }
  std::vector<std::vector<int>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::vector<int> row;
    std::string cell;
    while (cells >> cell) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != cell.size()) throw std::invalid_argument("matrix entry '" + cell + "' is not an integer");
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return AdjMatrix::from_rows(rows);
}

std::string format_matrix(const AdjMatrix& m) {
  std::ostringstream out;
  for (int j = 0; j < m.size(); ++j) {
    for (int k = 0; k < m.size(); ++k) out << (k ? " " : "") << m(j, k);
    out << '\n';
  }
  return out.str();
}

AdjMatrix adjacency(const Diagram& d) {
  require_valid(d);
  AdjMatrix m(d.vertex_count());
  for (int e : d.edges()) {
    const Dart& tail = d.dart(e);
    ++m(tail.vertex, d.dart(tail.twin).vertex);
  }
  return m;
}

bool is_two_regular(const AdjMatrix& m) {
  for (int j = 0; j < m.size(); ++j) {
    if (m.row_sum(j) != 2 || m.col_sum(j) != 2) return false;
    for (int k = 0; k < m.size(); ++k)
      if (m(j, k) < 0) return false;
  }
  return true;
}

StrandDecomposition trace_strands(const AdjMatrix& m) {
  if (!is_two_regular(m)) throw std::invalid_argument("strand tracing needs row and column sums equal to 2");
  StrandDecomposition out;
  const int n = m.size();
  std::vector<std::vector<int>> by_row(static_cast<std::size_t>(n)), by_col(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      for (int c = 0; c < m(j, k); ++c) {
        const int id = static_cast<int>(out.edges.size());
        out.edges.push_back({id, j, k});
        by_row[static_cast<std::size_t>(j)].push_back(id);
        by_col[static_cast<std::size_t>(k)].push_back(id);
      }
    }
  }
  auto other = [](const std::vector<int>& pair, int e) { return pair[0] == e ? pair[1] : pair[0]; };

  std::vector<bool> used(out.edges.size(), false);
  for (const MatrixEdge& start : out.edges) {
    if (used[static_cast<std::size_t>(start.id)]) continue;
    StrandComponent comp;
    int cur = start.id;
    bool row_move = true;
    do {
      used[static_cast<std::size_t>(cur)] = true;
      comp.classes[comp.walk.size() % 2].push_back(cur);
      comp.walk.push_back(cur);
      const MatrixEdge& e = out.edges[static_cast<std::size_t>(cur)];
      cur = row_move ? other(by_row[static_cast<std::size_t>(e.row)], cur)
                     : other(by_col[static_cast<std::size_t>(e.col)], cur);
      row_move = !row_move;
    } while (cur != start.id);
    out.components.push_back(std::move(comp));
  }
  return out;
}

DiagramKind infer_kind(const Diagram& d) {
  if (d.loop_count() > 0) return DiagramKind::Twist;
  return trace_strands(adjacency(d.with_kind(DiagramKind::Twist))).count() == 1 ? DiagramKind::Knot
                                                                                 : DiagramKind::Link;
}

namespace {

AdjMatrix class_matrix(const StrandDecomposition& s, const std::vector<int>& edges, int n) {
  AdjMatrix p(n);
  for (int e : edges) {
    const MatrixEdge& me = s.edges[static_cast<std::size_t>(e)];
    ++p(me.row, me.col);
  }
  return p;
}

}  // namespace

std::vector<PermutationPair> permutation_decompositions(const AdjMatrix& m) {
  const StrandDecomposition s = trace_strands(m);
  const int n = m.size();
  const int comps = s.count();
  if (comps > 24) throw std::invalid_argument("too many components to enumerate decompositions");

  // The walk of every component starts at its smallest edge, so class 0
  // already holds that edge.
  std::vector<std::array<AdjMatrix, 2>> parts;
  for (const auto& c : s.components)
    parts.push_back({class_matrix(s, c.classes[0], n), class_matrix(s, c.classes[1], n)});

  std::vector<PermutationPair> out;
  std::set<std::pair<AdjMatrix, AdjMatrix>> seen;
  const std::uint64_t choices = comps > 0 ? (std::uint64_t{1} << (comps - 1)) : 1;
  for (std::uint64_t mask = 0; mask < choices; ++mask) {
    AdjMatrix p1(n), p2(n);
    for (int c = 0; c < comps; ++c) {
      const bool flip = c > 0 && ((mask >> (c - 1)) & 1U);
      const AdjMatrix& a = parts[static_cast<std::size_t>(c)][flip ? 1 : 0];
      const AdjMatrix& b = parts[static_cast<std::size_t>(c)][flip ? 0 : 1];
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          p1(j, k) += a(j, k);
          p2(j, k) += b(j, k);
        }
    }
    auto key = std::minmax(p1, p2);
    if (!seen.insert({key.first, key.second}).second) continue;
    out.push_back({std::move(p1), std::move(p2)});
  }
  return out;
}

int distinct_class_components(const AdjMatrix& m) {
  const StrandDecomposition s = trace_strands(m);
  int distinct = 0;
  for (const auto& c : s.components)
    if (class_matrix(s, c.classes[0], m.size()) != class_matrix(s, c.classes[1], m.size())) ++distinct;
  return distinct;
}

bool all_ones_check(const AdjMatrix& m) {
  for (int j = 0; j < m.size(); ++j)
    if (m.row_sum(j) != 2 || m.col_sum(j) != 2) return false;
  return true;
}

std::vector<mpz_class> closed_path_counts(const AdjMatrix& m, int k_max) {
  if (k_max < 1) throw std::invalid_argument("path length must be positive");
  const int n = m.size();
  // Column-sparse view of m: for column c, the (row, value) pairs.
  std::vector<std::vector<std::pair<int, int>>> cols(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      if (m(j, k) != 0) cols[static_cast<std::size_t>(k)].push_back({j, m(j, k)});

  std::vector<mpz_class> power(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) power[static_cast<std::size_t>(j * n + k)] = m(j, k);

  std::vector<mpz_class> traces;
  std::vector<mpz_class> next(power.size());
  for (int step = 1; step <= k_max; ++step) {
    if (step > 1) {
      for (int i = 0; i < n; ++i)
        for (int c = 0; c < n; ++c) {
          mpz_class acc = 0;
          for (const auto& [l, v] : cols[static_cast<std::size_t>(c)]) acc += power[static_cast<std::size_t>(i * n + l)] * v;
          next[static_cast<std::size_t>(i * n + c)] = std::move(acc);
        }
      power.swap(next);
    }
    mpz_class t = 0;
    for (int i = 0; i < n; ++i) t += power[static_cast<std::size_t>(i * n + i)];
    traces.push_back(std::move(t));
  }
  return traces;
}

mpz_class closed_path_count(const AdjMatrix& m, int k) { return closed_path_counts(m, k).back(); }

}  // namespace altknot
