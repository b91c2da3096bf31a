#include "altknot/families.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <stdexcept>

#include "altknot/polynomials.hpp"
#include "altknot/spectra.hpp"
#include "altknot/surgery.hpp"

namespace altknot {

namespace {

const std::vector<FamilyInfo> kTable{
    {Family::TwistChain, "twistchain", "TWIST_CHAIN", {"V"}},
    {Family::HopfTwist, "hopftwist", "HOPF_TWIST", {"V"}},
    {Family::TrefoilTwist, "trefoiltwist", "TREFOIL_TWIST", {"V"}},
    {Family::FourKnotTwist, "fourknottwist", "FOUR_KNOT_TWIST", {"V"}},
    {Family::CyclicTorus, "cyclic", "CYCLIC_TORUS", {"V"}},
    {Family::TwistKnots, "twistknot", "TWIST_KNOTS", {"V"}},
    {Family::TwoRibbon, "f", "TWO_RIBBON", {"j", "k"}},
    {Family::ThreeRibbonP, "p", "THREE_RIBBON_P", {"k", "l", "m"}},
    {Family::ThreeRibbonG, "g", "THREE_RIBBON_G", {"k", "l", "m"}},
    {Family::ClosedChain, "chain", "CLOSED_CHAIN", {"k"}},
    {Family::KRibbonCyclic, "kribbon", "K_RIBBON_CYCLIC", {"k", "m"}},
    {Family::ChainedCyclic, "lchain", "CHAINED_CYCLIC", {"k", "n"}},
};

// Smallest admissible value of each parameter.
std::vector<int> minimums(Family f) {
  switch (f) {
    case Family::TwistChain: return {1};
    case Family::HopfTwist: return {2};
    case Family::TrefoilTwist: return {3};
    case Family::FourKnotTwist: return {4};
    case Family::CyclicTorus: return {1};
    case Family::TwistKnots: return {3};
    case Family::TwoRibbon: return {1, 1};
    case Family::ThreeRibbonP: return {1, 1, 0};
    case Family::ThreeRibbonG: return {0, 0, 0};
    case Family::ClosedChain: return {1};
    case Family::KRibbonCyclic: return {1, 1};
    case Family::ChainedCyclic: return {0, 1};
  }
  throw std::invalid_argument("unknown family");
}

int param(const FamilySpec& s, std::size_t i) { return s.params.at(i); }

IntPoly J(int k) { return jpoly(k); }
const IntPoly& X() {
  static const IntPoly x = IntPoly::x();
  return x;
}

// --- seeds ---------------------------------------------------------------

Diagram figure_eight() {
  std::vector<Dart> darts{
      {0, 0, 1, Direction::Out}, {1, 0, 0, Direction::In}, {2, 0, 3, Direction::Out}, {3, 0, 2, Direction::In}};
  Diagram d(DiagramKind::Twist, std::move(darts), {{0, 1, 2, 3}});
  require_valid(d);
  return d;
}

Diagram expand_times(Diagram d, int vertex, Lane lane, int times) {
  for (int i = 0; i < times; ++i) d = expand_vertex(d, vertex, lane);
  return d;
}

Diagram twist_chain(int v) { return expand_times(figure_eight(), 0, Lane::Out, v - 1); }
Diagram cyclic(int v) { return expand_times(figure_eight(), 0, Lane::In, v - 1); }

Diagram two_ribbon(int j, int k) {
  Diagram d = expand_times(cyclic(2), 0, Lane::Out, j - 1);
  return expand_times(std::move(d), 1, Lane::In, k - 1);
}

int first_out_at(const Diagram& d, int vertex) {
  for (int e : d.edges())
    if (d.dart(e).vertex == vertex) return e;
  throw std::logic_error("vertex without an out dart");
}

// Dart 0 of every twist chain is a loop at vertex 0.
Diagram with_twisted_edge(const Diagram& seed, int edge, int extra) {
  if (extra == 0) return seed;
  return compose_twist(seed, edge, twist_chain(extra), 0, 0);
}

int triangle_edge(const Diagram& d) {
  const FaceTrace ft = faces(d);
  for (int e : d.edges()) {
    const int a = ft.face_of[static_cast<std::size_t>(e)];
    const int b = ft.face_of[static_cast<std::size_t>(d.dart(e).twin)];
    if (ft.faces[static_cast<std::size_t>(a)].size() == 3 && ft.faces[static_cast<std::size_t>(b)].size() == 3) return e;
  }
  throw std::logic_error("no edge between two triangles");
}

Diagram three_ribbon_p(int k, int l, int m) {
  if (m == 0) return cyclic(k + l);
  Diagram d = expand_times(cyclic(3), 0, Lane::Out, k - 1);
  d = expand_times(std::move(d), 1, Lane::Out, l - 1);
  return expand_times(std::move(d), 2, Lane::In, m - 1);
}

Diagram three_ribbon_g(int k, int l, int m) {
  const std::array<int, 3> idx{k, l, m};
  const auto zeros = std::count(idx.begin(), idx.end(), 0);
  if (zeros == 1) {
    std::vector<int> rest;
    for (int i : idx)
      if (i != 0) rest.push_back(i);
    const Diagram a = cyclic(rest[0]);
    const Diagram b = cyclic(rest[1]);
    return compose_twist(a, a.edges().front(), b, b.edges().front(), 0);
  }
  Diagram d = expand_times(cyclic(3), 0, Lane::Out, k - 1);
  d = expand_times(std::move(d), 1, Lane::Out, l - 1);
  return expand_times(std::move(d), 2, Lane::Out, m - 1);
}

Diagram k_ribbon(int k, int m) {
  Diagram d = cyclic(k);
  for (int v = 0; v < k; ++v) d = expand_times(std::move(d), v, Lane::Out, m - 1);
  return d;
}

// Each new Hopf link clasps the free circle of the previous one.
Diagram chained_cyclic(int k, int n) {
  Diagram d = cyclic(n);
  const Diagram hopf = cyclic(2);
  const int hopf_edge = first_out_at(hopf, 0);
  int attach = d.edges().front();
  for (int i = 0; i < k; ++i) {
    const int base = d.vertex_count();
    d = compose_twist(d, attach, hopf, hopf_edge, 0);
    attach = first_out_at(d, base + 1);
  }
  return d;
}

// --- closed forms --------------------------------------------------------

IntPoly cyclic_poly(int v) { return IntPoly{2} * (J(v) - IntPoly{1}) - X() * J(v - 1); }

IntPoly f_poly(int j, int k) {
  return J(k) * J(j) - J(k - 2) * J(j - 2) - IntPoly{2} * J(j - 1) - IntPoly{2} * J(k - 1);
}

IntPoly p_poly(int k, int l, int m) {
  const IntPoly a = (J(k - 2) * J(l - 2) + J(k) * J(l) - IntPoly{2}) * J(m);
  const IntPoly b = X() * (J(k - 1) + J(l - 1) + J(k - 2) * J(l - 2) - IntPoly{1}) * J(m - 1);
  return a - b - IntPoly{2} * J(k - 1) * J(l - 1);
}

IntPoly g_poly(int k, int l, int m) {
  const IntPoly x = X();
  IntPoly out = x * (J(k - 1) * J(l) * J(m) + J(k) * J(l - 1) * J(m) + J(k) * J(l) * J(m - 1));
  out -= x * x * (J(k) * J(l - 1) * J(m - 1) + J(k - 1) * J(l) * J(m - 1) + J(k - 1) * J(l - 1) * J(m));
  out += (pow(x, 3) - IntPoly{2}) * J(k - 1) * J(l - 1) * J(m - 1);
  out -= x * (J(k - 1) + J(l - 1) + J(m - 1));
  return out;
}

IntPoly four_knot_twist_poly(int v) {
  IntPoly prev{0, -4, -2, 0, 1};        // x^4 - 2x^2 - 4x
  IntPoly cur{-2, 1, 0, -2, -1, 1};     // x^5 - x^4 - 2x^3 + x - 2
  if (v == 4) return prev;
  for (int i = 5; i < v; ++i) {
    IntPoly next = X() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly l_poly(int k, int n) {
  const IntPoly x = X();
  const IntPoly xk = pow(x, static_cast<unsigned>(k));
  const IntPoly a = xk * (IntPoly{2} * J(k) - x * J(k - 1)) * (J(n) - IntPoly{1});
  const IntPoly b = xk * (-(x * J(k)) + (x * x - IntPoly{2}) * J(k - 1)) * J(n - 1);
  return a + b;
}

std::string join_params(std::initializer_list<int> xs) {
  std::string out;
  for (int v : xs) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

IntPoly generated_poly(const Diagram& d) { return charpoly(adjacency(d)); }

}  // namespace

std::span<const FamilyInfo> family_table() { return kTable; }

const FamilyInfo& info(Family f) {
  for (const auto& i : kTable)
    if (i.family == f) return i;
  throw std::invalid_argument("unknown family");
}

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("family spec needs the form name:p=v,...");
  const std::string_view name = text.substr(0, colon);
  const FamilyInfo* fi = nullptr;
  for (const auto& i : kTable)
    if (i.cli_name == name) fi = &i;
  if (fi == nullptr) throw std::invalid_argument("unknown family '" + std::string(name) + "'");

  FamilySpec spec{fi->family, std::vector<int>(fi->params.size(), 0)};
  std::vector<bool> seen(fi->params.size(), false);
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("malformed parameter '" + std::string(item) + "'");
    const std::string_view key = item.substr(0, eq);
    const std::string_view val = item.substr(eq + 1);
    const auto it = std::find(fi->params.begin(), fi->params.end(), key);
    if (it == fi->params.end())
      throw std::invalid_argument("unknown parameter '" + std::string(key) + "' for " + std::string(name));
    const auto pos = static_cast<std::size_t>(it - fi->params.begin());
    if (seen[pos]) throw std::invalid_argument("parameter '" + std::string(key) + "' given twice");
    int value = 0;
    const auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), value);
    if (ec != std::errc{} || ptr != val.data() + val.size() || val.empty())
      throw std::invalid_argument("parameter '" + std::string(key) + "' is not an integer");
    spec.params[pos] = value;
    seen[pos] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw std::invalid_argument("missing parameter '" + std::string(fi->params[i]) + "'");
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  const FamilyInfo& fi = info(spec.family);
  std::string out(fi.cli_name);
  out += ':';
  for (std::size_t i = 0; i < fi.params.size(); ++i) {
    if (i > 0) out += ',';
    out += fi.params[i];
    out += '=';
    out += std::to_string(spec.params.at(i));
  }
  return out;
}

int member_vertex_count(const FamilySpec& s) {
  switch (s.family) {
    case Family::TwistChain:
    case Family::HopfTwist:
    case Family::TrefoilTwist:
    case Family::FourKnotTwist:
    case Family::CyclicTorus:
    case Family::TwistKnots: return param(s, 0);
    case Family::TwoRibbon: return param(s, 0) + param(s, 1);
    case Family::ThreeRibbonP:
    case Family::ThreeRibbonG: return param(s, 0) + param(s, 1) + param(s, 2);
    case Family::ClosedChain: return 2 * param(s, 0);
    case Family::KRibbonCyclic: return param(s, 0) * param(s, 1);
    case Family::ChainedCyclic: return param(s, 1) + 2 * param(s, 0);
  }
  throw std::invalid_argument("unknown family");
}

void check_range(const FamilySpec& s, int max_vertices) {
  const FamilyInfo& fi = info(s.family);
  if (s.params.size() != fi.params.size())
    throw std::invalid_argument(std::string(fi.name) + " takes " + std::to_string(fi.params.size()) + " parameters");
  const std::vector<int> lo = minimums(s.family);
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (s.params[i] < lo[i] || s.params[i] > max_vertices)
      throw std::out_of_range(std::string(fi.params[i]) + " out of range");
  if (s.family == Family::ThreeRibbonG && std::count(s.params.begin(), s.params.end(), 0) > 1)
    throw std::out_of_range("at most one of k, l, m may be 0");
  const long v = static_cast<long>(member_vertex_count(s));
  if (v < 1 || v > max_vertices) throw std::out_of_range("V out of range");
}

Diagram generate(const FamilySpec& s, int max_vertices) {
  check_range(s, max_vertices);
  switch (s.family) {
    case Family::TwistChain: return twist_chain(param(s, 0));
    case Family::HopfTwist: {
      const Diagram hopf = cyclic(2);
      return with_twisted_edge(hopf, hopf.edges().front(), param(s, 0) - 2);
    }
    case Family::TrefoilTwist: {
      const Diagram trefoil = cyclic(3);
      return with_twisted_edge(trefoil, trefoil.edges().front(), param(s, 0) - 3);
    }
    case Family::FourKnotTwist: {
      const Diagram four = two_ribbon(2, 2);
      if (param(s, 0) == 4) return four;
      return with_twisted_edge(four, triangle_edge(four), param(s, 0) - 4);
    }
    case Family::CyclicTorus: return cyclic(param(s, 0));
    case Family::TwistKnots: return two_ribbon(param(s, 0) - 2, 2);
    case Family::TwoRibbon: return two_ribbon(param(s, 0), param(s, 1));
    case Family::ThreeRibbonP: return three_ribbon_p(param(s, 0), param(s, 1), param(s, 2));
    case Family::ThreeRibbonG: return three_ribbon_g(param(s, 0), param(s, 1), param(s, 2));
    case Family::ClosedChain: return k_ribbon(param(s, 0), 2);
    case Family::KRibbonCyclic: return k_ribbon(param(s, 0), param(s, 1));
    case Family::ChainedCyclic: return chained_cyclic(param(s, 0), param(s, 1));
  }
  throw std::invalid_argument("unknown family");
}

IntPoly closed_form(const FamilySpec& s) {
  check_range(s);
  const IntPoly x = X();
  const IntPoly two{2};
  switch (s.family) {
    case Family::TwistChain: return (x - two) * J(param(s, 0) - 1);
    case Family::HopfTwist: {
      const int v = param(s, 0);
      return (x - two) * ((x + two) * J(v - 2) - x * J(v - 3));
    }
    case Family::TrefoilTwist: {
      const int v = param(s, 0);
      const IntPoly one{1};
      return (x - two) * (x + one) * ((x + one) * J(v - 3) - x * J(v - 4));
    }
    case Family::FourKnotTwist: return four_knot_twist_poly(param(s, 0));
    case Family::CyclicTorus: return cyclic_poly(param(s, 0));
    case Family::TwistKnots: {
      const int v = param(s, 0);
      return (pow(x, 3) - x - two) * J(v - 3) - x * x * J(v - 4) - two * x;
    }
    case Family::TwoRibbon: return f_poly(param(s, 0), param(s, 1));
    case Family::ThreeRibbonP: return p_poly(param(s, 0), param(s, 1), param(s, 2));
    case Family::ThreeRibbonG: return g_poly(param(s, 0), param(s, 1), param(s, 2));
    case Family::ClosedChain: {
      const int k = param(s, 0);
      return cyclic_poly(k) * pow(x, static_cast<unsigned>(k));
    }
    case Family::KRibbonCyclic: {
      const int k = param(s, 0);
      return cyclic_poly(k) * pow(J(param(s, 1) - 1), static_cast<unsigned>(k));
    }
    case Family::ChainedCyclic: return l_poly(param(s, 0), param(s, 1));
  }
  throw std::invalid_argument("unknown family");
}

MemberCheck verify_member(const FamilySpec& spec, int max_vertices) {
  MemberCheck out;
  out.generated = generated_poly(generate(spec, max_vertices));
  out.formula = closed_form(spec);
  out.match = out.generated == out.formula;
  return out;
}

RecurrenceCheck check_family_recurrence(const IntPoly& p0, const IntPoly& p1, const IntPoly& p2) {
  const IntPoly r = p2 - X() * p1 + p0;
  if (r.is_zero()) return {true, std::nullopt};
  auto [q, rem] = divide_by_unit_leading(r, IntPoly{-2, 1});
  if (!rem.is_zero()) throw std::invalid_argument("not a family triple");
  return {false, std::move(q)};
}

std::vector<IdentityCheck> check_identities(int max_index) {
  if (max_index < 1) throw std::invalid_argument("max_index must be at least 1");
  std::vector<IdentityCheck> out;
  auto add = [&](std::string id, std::string params, bool pass) {
    out.push_back({std::move(id), std::move(params), pass});
  };
  const IntPoly x = X();
  const IntPoly two{2};
  const int n = max_index;

  for (int k = 1; k <= n; ++k) {
    const IntPoly s = J(k) + J(k - 1);
    add("a", join_params({k}), cyclic_poly(2 * k + 1) == (x - two) * s * s);
    add("b", join_params({k}), cyclic_poly(2 * k) == (x * x - IntPoly{4}) * J(k - 1) * J(k - 1));
    add("c", join_params({k}), g_poly(k, k, k) == (x - two) * pow(IntPoly{1, 1}, 2) * pow(J(k - 1), 3));
  }
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l) add("d", join_params({k, l}), p_poly(k, l, 1) == g_poly(k, l, 1));
  for (int j = 1; j <= n; ++j) add("e", join_params({j}), f_poly(j, 1) == cyclic_poly(j + 1));
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) add("f", join_params({j, k}), f_poly(j, k) == f_poly(k, j));
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l)
      for (int m = 1; m <= n; ++m) {
        const IntPoly g = g_poly(k, l, m);
        const bool sym = g == g_poly(l, k, m) && g == g_poly(k, m, l) && g == g_poly(m, l, k) &&
                         g == g_poly(l, m, k) && g == g_poly(m, k, l);
        add("g", join_params({k, l, m}), sym);
      }
  for (int k = 1; k <= n && 2 * k <= kDefaultMaxVertices; ++k) {
    const FamilySpec spec{Family::ClosedChain, {k}};
    add("h", "chain:" + join_params({k}),
        generated_poly(generate(spec)) == cyclic_poly(k) * pow(x, static_cast<unsigned>(k)));
  }
  for (int k = 1; k <= n; ++k)
    for (int m = 1; m <= n && k * m <= kDefaultMaxVertices; ++m) {
      const FamilySpec spec{Family::KRibbonCyclic, {k, m}};
      add("h", "kribbon:" + join_params({k, m}),
          generated_poly(generate(spec)) == cyclic_poly(k) * pow(J(m - 1), static_cast<unsigned>(k)));
    }
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n && k + l <= kDefaultMaxVertices; ++l) {
      const Diagram a = cyclic(k);
      const Diagram b = cyclic(l);
      const Diagram c = compose_twist(a, a.edges().front(), b, b.edges().front(), 0);
      add("i", join_params({k, l}), generated_poly(c) == g_poly(k, l, 0));
    }
  for (int v = 5; v <= n + 4 && v <= kDefaultMaxVertices; ++v) {
    const IntPoly target = collision_pair_formula(v);
    add("collision", join_params({v}), p_poly(2, 2, v - 4) == target && g_poly(2, 2, v - 4) == target);
  }
  for (int v = 3; v <= n + 2; ++v)
    add("twist knots", join_params({v}), closed_form({Family::TwistKnots, {v}}) == f_poly(v - 2, 2));
  return out;
}

IntPoly collision_pair_formula(int v) {
  if (v < 4) throw std::out_of_range("V out of range");
  const IntPoly x = X();
  return x * x * ((x * x - IntPoly{2}) * J(v - 4) - IntPoly{2} * J(v - 5) - IntPoly{2});
}

CollisionPair generate_collision_pair(int v) {
  if (v < 5 || v > kDefaultMaxVertices) throw std::out_of_range("V out of range");
  return {three_ribbon_p(2, 2, v - 4), three_ribbon_g(2, 2, v - 4)};
}

}  // namespace altknot
