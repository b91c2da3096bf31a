#pragma once

// Test-side reference computations, written independently of the library
// algorithms they check.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "altknot/diagram.hpp"
#include "altknot/int_poly.hpp"
#include "altknot/spectra.hpp"

namespace oracle {

using altknot::IntPoly;

/// det(xI - A) by the Leibniz permutation sum over polynomial entries.
/// Fine up to dimension 7 or so.
inline IntPoly leibniz_charpoly(const altknot::AdjMatrix& a) {
  const int n = a.size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  IntPoly total;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    IntPoly term{inversions % 2 == 0 ? 1 : -1};
    for (int i = 0; i < n && !term.is_zero(); ++i) {
      const int j = perm[static_cast<std::size_t>(i)];
      IntPoly entry{-a(i, j)};
      if (i == j) entry += IntPoly::x();
      term *= entry;
    }
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Link components counted on the map itself: a strand leaves a crossing
/// through a dart and re-enters at its twin, then continues straight across.
inline int straight_through_components(const altknot::Diagram& d) {
  std::vector<bool> seen(static_cast<std::size_t>(d.dart_count()), false);
  int count = 0;
  for (int start = 0; start < d.dart_count(); ++start) {
    if (seen[static_cast<std::size_t>(start)] || d.dart(start).direction != altknot::Direction::Out) continue;
    ++count;
    int dart = start;
    while (!seen[static_cast<std::size_t>(dart)]) {
      seen[static_cast<std::size_t>(dart)] = true;
      const int in = d.dart(dart).twin;
      seen[static_cast<std::size_t>(in)] = true;
      dart = d.opposite(in);
    }
  }
  return count;
}

/// Number of faces from Euler's formula on the sphere: V - E + F = 2.
inline int euler_faces(const altknot::Diagram& d) { return 2 - d.vertex_count() + d.edge_count(); }

}  // namespace oracle
