#include "altknot/diagram_io.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace altknot {

using nlohmann::json;

namespace {

DiagramKind parse_kind(const std::string& s) {
  if (s == "knot") return DiagramKind::Knot;
  if (s == "link") return DiagramKind::Link;
  if (s == "twist") return DiagramKind::Twist;
  throw std::invalid_argument("unknown diagram kind '" + s + "'");
}

Direction parse_direction(const std::string& s) {
  if (s == "out") return Direction::Out;
  if (s == "in") return Direction::In;
  throw std::invalid_argument("unknown dart direction '" + s + "'");
}

}  // namespace

std::string diagram_to_json(const Diagram& d, int indent) {
  json darts = json::array();
  for (const Dart& x : d.darts())
    darts.push_back({{"id", x.id}, {"vertex", x.vertex}, {"twin", x.twin}, {"dir", to_string(x.direction)}});
  json rotation = json::array();
  for (const auto& r : d.rotation()) rotation.push_back(json::array({r[0], r[1], r[2], r[3]}));
  json doc = {{"version", 1},
              {"kind", to_string(d.kind())},
              {"vertex_count", d.vertex_count()},
              {"darts", std::move(darts)},
              {"rotation", std::move(rotation)}};
  return doc.dump(indent);
}

Diagram diagram_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("diagram JSON does not parse: ") + e.what());
  }
  try {
    if (doc.at("version").get<int>() != 1) throw std::invalid_argument("unsupported diagram version");
    const DiagramKind kind = parse_kind(doc.at("kind").get<std::string>());
    const int V = doc.at("vertex_count").get<int>();

    std::vector<Dart> darts;
    for (const auto& jd : doc.at("darts")) {
      darts.push_back({jd.at("id").get<int>(), jd.at("vertex").get<int>(), jd.at("twin").get<int>(),
                       parse_direction(jd.at("dir").get<std::string>())});
    }
    std::vector<std::array<int, 4>> rotation;
    for (const auto& jr : doc.at("rotation")) {
      if (!jr.is_array() || jr.size() != 4) throw std::invalid_argument("each rotation entry must list 4 darts");
      rotation.push_back({jr[0].get<int>(), jr[1].get<int>(), jr[2].get<int>(), jr[3].get<int>()});
    }
    if (static_cast<int>(rotation.size()) != V)
      throw std::invalid_argument("vertex_count does not match the rotation system");
    return Diagram(kind, std::move(darts), std::move(rotation));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed diagram JSON: ") + e.what());
  }
}

std::string diagram_to_dot(const Diagram& d, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (int v = 0; v < d.vertex_count(); ++v) out << "  v" << v << ";\n";
  for (int e : d.edges()) {
    const Dart& tail = d.dart(e);
    out << "  v" << tail.vertex << " -> v" << d.dart(tail.twin).vertex << " [label=\"e" << e << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string poly_to_json(const IntPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return json{{"coeffs", std::move(coeffs)}}.dump();
}

IntPoly poly_from_json(const std::string& text) {
  try {
    const json doc = json::parse(text);
    std::vector<mpz_class> coeffs;
    for (const auto& c : doc.at("coeffs")) {
      mpz_class v;
      if (v.set_str(c.get<std::string>(), 10) != 0) throw std::invalid_argument("coefficient is not a decimal integer");
      coeffs.push_back(v);
    }
    return IntPoly(std::move(coeffs));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed polynomial JSON: ") + e.what());
  }
}

}  // namespace altknot
