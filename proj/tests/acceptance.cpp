// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "altknot/families.hpp"
#include "altknot/polynomials.hpp"
#include "altknot/spectra.hpp"
#include "altknot/surgery.hpp"
#include "oracles.hpp"

using namespace altknot;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> failures;
  long checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

IntPoly X() { return IntPoly::x(); }
IntPoly poly(const Diagram& d) { return charpoly(adjacency(d)); }

// Every diagram generated under criteria 2-4, for the matrix and
// decomposition laws.
std::vector<std::pair<std::string, Diagram>> g_members;

bool member_matches(Criterion& c, const FamilySpec& s) {
  const Diagram d = generate(s);
  const IntPoly g = poly(d);
  const IntPoly f = closed_form(s);
  g_members.emplace_back(to_string(s), d);
  c.expect(g == f, to_string(s) + ": generated " + g.to_string() + " formula " + f.to_string());
  return g == f;
}

void homogeneous_triples(Criterion& c, Family f, int lo, int hi) {
  for (int v = lo; v + 2 <= hi; ++v) {
    const auto r = check_family_recurrence(closed_form({f, {v}}), closed_form({f, {v + 1}}), closed_form({f, {v + 2}}));
    c.expect(r.homogeneous, std::string(info(f).cli_name) + " triple at V=" + std::to_string(v));
  }
}

void criterion1(Criterion& c) {
  const std::vector<IntPoly> printed{
      IntPoly{1},          IntPoly{0, 1},           IntPoly{-1, 0, 1},
      IntPoly{0, -2, 0, 1}, IntPoly{1, 0, -3, 0, 1}, IntPoly{0, 3, 0, -4, 0, 1},
      IntPoly{-1, 0, 6, 0, -5, 0, 1}, IntPoly{0, -4, 0, 10, 0, -6, 0, 1}};
  for (int k = 0; k <= 7; ++k) c.expect(jpoly(k) == printed[static_cast<std::size_t>(k)], "J_" + std::to_string(k));
  for (int k = 0; k <= 50; ++k) c.expect(jpoly(k) == jpoly_explicit(k), "explicit J_" + std::to_string(k));
  for (int k = 1; k <= 50; ++k) c.expect(check_quadratic_identity(k), "quadratic k=" + std::to_string(k));
  c.expect(check_generating_function(20), "generating function to 20");
}

void criterion2(Criterion& c) {
  for (int v = 1; v <= 30; ++v) {
    member_matches(c, {Family::TwistChain, {v}});
    c.expect(closed_form({Family::TwistChain, {v}}) == (X() - IntPoly{2}) * jpoly(v - 1), "twist chain form");
  }
  for (int v = 2; v <= 30; ++v) member_matches(c, {Family::HopfTwist, {v}});
  for (int v = 3; v <= 30; ++v) member_matches(c, {Family::TrefoilTwist, {v}});
  for (int v = 4; v <= 30; ++v) member_matches(c, {Family::FourKnotTwist, {v}});
  c.expect(closed_form({Family::FourKnotTwist, {4}}) == IntPoly({0, -4, -2, 0, 1}), "four-knot seed 4");
  c.expect(closed_form({Family::FourKnotTwist, {5}}) == IntPoly({-2, 1, 0, -2, -1, 1}), "four-knot seed 5");
  homogeneous_triples(c, Family::TwistChain, 1, 30);
  homogeneous_triples(c, Family::HopfTwist, 2, 30);
  homogeneous_triples(c, Family::TrefoilTwist, 3, 30);
  homogeneous_triples(c, Family::FourKnotTwist, 4, 30);
  // The same triples computed from the generated diagrams.
  for (Family f : {Family::TwistChain, Family::HopfTwist, Family::TrefoilTwist, Family::FourKnotTwist})
    for (int v = 4; v + 2 <= 12; ++v) {
      const auto r = check_family_recurrence(poly(generate({f, {v}})), poly(generate({f, {v + 1}})),
                                             poly(generate({f, {v + 2}})));
      c.expect(r.homogeneous, std::string(info(f).cli_name) + " generated triple at " + std::to_string(v));
    }
}

void criterion3(Criterion& c) {
  for (int v = 1; v <= 30; ++v) {
    member_matches(c, {Family::CyclicTorus, {v}});
    const int strands = trace_strands(adjacency(generate({Family::CyclicTorus, {v}}))).count();
    c.expect(strands == (v % 2 == 1 ? 1 : 2), "torus strands V=" + std::to_string(v));
  }
  const IntPoly two{2};
  for (int k = 1; k <= 15; ++k) {
    const IntPoly s = jpoly(k) + jpoly(k - 1);
    c.expect(closed_form({Family::CyclicTorus, {2 * k + 1}}) == (X() - two) * s * s, "odd factorisation k=" + std::to_string(k));
    c.expect(closed_form({Family::CyclicTorus, {2 * k}}) == (X() * X() - IntPoly{4}) * jpoly(k - 1) * jpoly(k - 1),
             "even factorisation k=" + std::to_string(k));
  }
}

void criterion4(Criterion& c) {
  for (int v = 3; v <= 20; ++v) member_matches(c, {Family::TwistKnots, {v}});
  for (int v = 3; v + 2 <= 20; ++v) {
    const auto r = check_family_recurrence(closed_form({Family::TwistKnots, {v}}), closed_form({Family::TwistKnots, {v + 1}}),
                                           closed_form({Family::TwistKnots, {v + 2}}));
    c.expect(!r.homogeneous && *r.source == IntPoly({0, 2}), "twist knot source at V=" + std::to_string(v));
  }
  for (int j = 1; j <= 8; ++j)
    for (int k = 1; k <= j; ++k) member_matches(c, {Family::TwoRibbon, {j, k}});
  c.expect(poly(generate({Family::TwoRibbon, {2, 2}})) == IntPoly({0, -4, -2, 0, 1}), "F_{2,2}");

  for (int k = 1; k <= 5; ++k)
    for (int l = 1; l <= 5; ++l)
      for (int m = 0; m <= 5; ++m) member_matches(c, {Family::ThreeRibbonP, {k, l, m}});
  for (int k = 0; k <= 5; ++k)
    for (int l = 0; l <= 5; ++l)
      for (int m = 0; m <= 5; ++m)
        if ((k == 0) + (l == 0) + (m == 0) <= 1) member_matches(c, {Family::ThreeRibbonG, {k, l, m}});

  for (int k = 1; k <= 6; ++k)
    for (int l = 1; l <= 6; ++l) {
      c.expect(closed_form({Family::ThreeRibbonP, {k, l, 1}}) == closed_form({Family::ThreeRibbonG, {k, l, 1}}),
               "P=G at " + std::to_string(k) + "," + std::to_string(l));
      c.expect(poly(generate({Family::ThreeRibbonP, {k, l, 1}})) == poly(generate({Family::ThreeRibbonG, {k, l, 1}})),
               "generated P=G at " + std::to_string(k) + "," + std::to_string(l));
    }
  for (int k = 1; k <= 10; ++k) {
    const IntPoly expected = (X() - IntPoly{2}) * pow(IntPoly{1, 1}, 2) * pow(jpoly(k - 1), 3);
    c.expect(closed_form({Family::ThreeRibbonG, {k, k, k}}) == expected, "G_kkk k=" + std::to_string(k));
    c.expect(poly(generate({Family::ThreeRibbonG, {k, k, k}})) == expected, "generated G_kkk k=" + std::to_string(k));
  }

  for (int m = 1; m <= 8; ++m) {
    const int v = m + 4;
    const CollisionPair pair = generate_collision_pair(v);
    g_members.emplace_back("collision torus-link V=" + std::to_string(v), pair.from_torus_link);
    g_members.emplace_back("collision circle-chain V=" + std::to_string(v), pair.from_circle_chain);
    c.expect(poly(pair.from_torus_link) == collision_pair_formula(v), "collision torus-link V=" + std::to_string(v));
    c.expect(poly(pair.from_circle_chain) == collision_pair_formula(v), "collision circle-chain V=" + std::to_string(v));
    c.expect(isomorphic(pair.from_torus_link, pair.from_circle_chain) == (v == 5),
             "collision diagrams distinct V=" + std::to_string(v));
  }
  for (int k = 1; k <= 8; ++k) member_matches(c, {Family::ClosedChain, {k}});
  for (int k = 1; k <= 8; ++k)
    for (int m = 1; m <= 8; ++m) member_matches(c, {Family::KRibbonCyclic, {k, m}});
  for (int k = 0; k <= 8; ++k)
    for (int n = 1; n <= 8; ++n) member_matches(c, {Family::ChainedCyclic, {k, n}});
}

void criterion5(Criterion& c) {
  for (const auto& [name, d] : g_members) {
    const AdjMatrix m = adjacency(d);
    const IntPoly p = charpoly(m);
    c.expect(is_two_regular(m), name + ": row/column sums");
    c.expect(all_ones_check(m), name + ": M1 = 21");
    c.expect(divide_out(p, IntPoly{-2, 1}).exact, name + ": (x-2) divides");
    const int loops = d.loop_count();
    c.expect(m.trace() == loops, name + ": trace counts loops");
    const FaceCensus census = faces(d).census;
    const CoefficientReport rep = coefficient_report(p, census, loops);
    c.expect(rep.all_pass(), name + ": coefficient rules");
    if (loops == 0) c.expect(check_face_identity(census), name + ": face identity");
    const int v = d.vertex_count();
    c.expect(power_sums(p, v) == closed_path_counts(m, v), name + ": closed paths vs Newton");
  }
}

// Independent count of unordered splittings M = P + Q into permutation
// matrices, by backtracking over row assignments.
long count_splittings(const AdjMatrix& m) {
  const int n = m.size();
  std::vector<int> used(static_cast<std::size_t>(n), 0);
  std::vector<int> assign(static_cast<std::size_t>(n), -1);
  long ordered = 0;
  long self = 0;
  std::function<void(int)> rec = [&](int r) {
    if (r == n) {
      ++ordered;
      bool half = true;
      for (int i = 0; i < n && half; ++i)
        for (int j = 0; j < n; ++j)
          if (m(i, j) != 2 * (assign[static_cast<std::size_t>(i)] == j ? 1 : 0)) {
            half = false;
            break;
          }
      if (half) ++self;
      return;
    }
    for (int col = 0; col < n; ++col) {
      if (m(r, col) == 0 || used[static_cast<std::size_t>(col)]) continue;
      used[static_cast<std::size_t>(col)] = 1;
      assign[static_cast<std::size_t>(r)] = col;
      rec(r + 1);
      used[static_cast<std::size_t>(col)] = 0;
    }
  };
  rec(0);
  return (ordered + self) / 2;
}

void criterion6(Criterion& c) {
  for (const auto& [name, d] : g_members) {
    const AdjMatrix m = adjacency(d);
    const int strands = trace_strands(m).count();
    if (strands > 16) continue;
    const auto pairs = permutation_decompositions(m);
    if (strands == 1) c.expect(pairs.size() == 1, name + ": single strand, one decomposition");
    if (distinct_class_components(m) == strands)
      c.expect(pairs.size() == (std::size_t{1} << (strands - 1)), name + ": 2^(N-1) decompositions");
    if (m.size() <= 24) c.expect(static_cast<long>(pairs.size()) == count_splittings(m), name + ": backtracking count");
    std::set<std::pair<AdjMatrix, AdjMatrix>> seen;
    for (const auto& p : pairs) {
      bool sum = true;
      for (int r = 0; r < m.size(); ++r) {
        int row1 = 0, row2 = 0;
        for (int col = 0; col < m.size(); ++col) {
          sum = sum && p.first(r, col) + p.second(r, col) == m(r, col);
          row1 += p.first(r, col);
          row2 += p.second(r, col);
        }
        sum = sum && row1 == 1 && row2 == 1;
      }
      c.expect(sum, name + ": P1 + P2 = M");
      seen.insert(std::minmax(p.first, p.second));
    }
    c.expect(seen.size() == pairs.size(), name + ": no repeated pair");
  }
}

void criterion7(Criterion& c) {
  const std::vector<FamilySpec> bases{
      {Family::CyclicTorus, {3}},      {Family::CyclicTorus, {6}},      {Family::TwoRibbon, {3, 2}},
      {Family::ThreeRibbonP, {2, 2, 2}}, {Family::ThreeRibbonG, {2, 3, 1}}, {Family::TwistChain, {4}},
      {Family::HopfTwist, {5}},        {Family::FourKnotTwist, {6}},    {Family::KRibbonCyclic, {3, 2}},
      {Family::ChainedCyclic, {2, 3}},
  };
  std::mt19937 rng(1729);
  for (int trial = 0; trial < 100; ++trial) {
    const FamilySpec& s = bases[static_cast<std::size_t>(trial) % bases.size()];
    const Diagram d = generate(s);
    const int v = std::uniform_int_distribution<int>(0, d.vertex_count() - 1)(rng);
    const Lane lane = std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? Lane::Out : Lane::In;
    const std::string tag = to_string(s) + " vertex " + std::to_string(v) + (lane == Lane::Out ? " out" : " in");

    const Diagram e = expand_vertex(d, v, lane);
    const int face = faces(e).face_of[static_cast<std::size_t>(d.dart_count() + 1)];
    c.expect(canonical_form(contract_bigon(e, face)) == canonical_form(d), tag + ": expand then contract");

    const Diagram e2 = expand_vertex(e, v, lane);
    const Diagram e3 = expand_vertex(e2, v, lane);
    try {
      const auto a = check_family_recurrence(poly(d), poly(e), poly(e2));
      const auto b = check_family_recurrence(poly(e), poly(e2), poly(e3));
      c.expect(a.homogeneous == b.homogeneous && a.source == b.source, tag + ": constant source term");
    } catch (const std::invalid_argument&) {
      c.expect(false, tag + ": not a family triple");
    }
  }
}

void criterion8(Criterion& c) {
  c.expect(poly(generate({Family::CyclicTorus, {3}})) == (X() - IntPoly{2}) * pow(IntPoly{1, 1}, 2), "trefoil");
  c.expect(poly(generate({Family::CyclicTorus, {2}})) == IntPoly({-4, 0, 1}), "Hopf link");
  c.expect(poly(generate({Family::TwoRibbon, {2, 2}})) == IntPoly({0, -4, -2, 0, 1}), "figure-eight knot");
  c.expect(poly(generate({Family::TwistChain, {1}})) == IntPoly({-2, 1}), "one-vertex twist");
  c.expect(charpoly(AdjMatrix::from_rows({{2}})) == IntPoly({-2, 1}), "[2]");
  c.expect(oracle::leibniz_charpoly(adjacency(generate({Family::TwoRibbon, {2, 2}}))) == IntPoly({0, -4, -2, 0, 1}),
           "figure-eight knot by Leibniz");
}

}  // namespace

int main() {
  std::vector<std::pair<Criterion, std::function<void(Criterion&)>>> suite{
      {{1, "Chebyshev base: printed values, explicit form, quadratic identity, series"}, criterion1},
      {{2, "Twist families against their closed forms, homogeneous triples"}, criterion2},
      {{3, "Torus family: generator, odd/even factorisations, strand parity"}, criterion3},
      {{4, "Knot and link families against their closed forms and identities"}, criterion4},
      {{5, "Matrix laws on every generated member"}, criterion5},
      {{6, "Permutation decompositions"}, criterion6},
      {{7, "Surgery round trip and constant source term"}, criterion7},
      {{8, "Known small polynomials"}, criterion8},
  };
  bool all = true;
  for (auto& [c, run] : suite) {
    const auto start = std::chrono::steady_clock::now();
    try {
      run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = c.failures.empty();
    all = all && ok;
    std::cout << "criterion " << c.number << ": " << (ok ? "PASS" : "FAIL") << "  " << c.title << " (" << c.checks
              << " checks, " << static_cast<int>(secs * 1000) << " ms)\n";
    for (std::size_t i = 0; i < c.failures.size() && i < 10; ++i) std::cout << "    " << c.failures[i] << '\n';
    if (c.failures.size() > 10) std::cout << "    ... " << c.failures.size() - 10 << " more\n";
  }
  return all ? 0 : 1;
}
