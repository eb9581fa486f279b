#include "jetorder/io.hpp"

#include <json.hpp>

#include "jetorder/error.hpp"

namespace jetorder {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::MalformedDocument, what);
}

Json parse_document(std::string_view text) {
  try {
    Json doc = Json::parse(text);
    if (!doc.is_object()) malformed("document must be a JSON object");
    return doc;
  } catch (const Json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

long as_integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) malformed(where + ": expected an integer");
  return j.get<long>();
}

IntVector int_vector(const Json& j, const std::string& where) {
  if (!j.is_array()) malformed(where + ": expected an array of integers");
  IntVector out;
  for (const auto& e : j) out.push_back(as_integer(e, where));
  return out;
}

Exponent exponent(const Json& j, std::size_t nvars, const std::string& where) {
  IntVector v = int_vector(j, where);
  if (v.size() != nvars)
    throw Error(ErrorCode::DimensionMismatch,
                where + ": exponent " + to_string(v) + " has " + std::to_string(v.size()) +
                    " entries, expected " + std::to_string(nvars));
  std::vector<int> e;
  for (long x : v) {
    if (x < 0) throw Error(ErrorCode::NegativeExponent, where + ": negative exponent " + to_string(v));
    e.push_back(static_cast<int>(x));
  }
  return Exponent(std::move(e));
}

Rational rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorCode::MalformedRational, where + ": expected an integer or a \"p/q\" string");
}

std::vector<IntVector> vector_list(const Json& j, const std::string& where) {
  if (!j.is_array()) malformed(where + ": expected an array");
  std::vector<IntVector> out;
  for (const auto& e : j) out.push_back(int_vector(e, where));
  return out;
}

Settings settings(const Json& doc) {
  Settings s;
  if (auto it = doc.find("seed"); it != doc.end()) {
    if (!it->is_number_unsigned() && !(it->is_number_integer() && it->get<long>() >= 0))
      malformed("seed: expected a non-negative integer");
    s.seed = it->get<std::uint64_t>();
  }
  if (auto it = doc.find("symbolic_threshold"); it != doc.end()) {
    long v = as_integer(*it, "symbolic_threshold");
    if (v < 0) malformed("symbolic_threshold: must be non-negative");
    s.symbolic_threshold = static_cast<std::size_t>(v);
  }
  if (auto it = doc.find("random_trials"); it != doc.end()) {
    long v = as_integer(*it, "random_trials");
    if (v < 1) malformed("random_trials: must be positive");
    s.random_trials = static_cast<int>(v);
  }
  if (auto it = doc.find("search_bound"); it != doc.end()) {
    long v = as_integer(*it, "search_bound");
    if (v < 0) malformed("search_bound: must be non-negative");
    s.search_bound = v;
  }
  return s;
}

}  // namespace

SpaceFile parse_space(std::string_view text) {
  const Json doc = parse_document(text);
  auto nv = doc.find("nvars");
  if (nv == doc.end()) malformed("missing \"nvars\"");
  const long n = as_integer(*nv, "nvars");
  if (n < 1) throw Error(ErrorCode::DimensionMismatch, "nvars must be positive");
  const auto nvars = static_cast<std::size_t>(n);
  const bool has_mono = doc.contains("monomials");
  const bool has_poly = doc.contains("polynomials");
  if (has_mono == has_poly) malformed("expected exactly one of \"monomials\" or \"polynomials\"");

  if (has_mono) {
    const Json& list = doc["monomials"];
    if (!list.is_array()) malformed("monomials: expected an array");
    std::vector<Exponent> pts;
    for (const auto& e : list) pts.push_back(exponent(e, nvars, "monomials"));
    return {SubspaceV::from_monomials(nvars, std::move(pts)), settings(doc)};
  }

  const Json& list = doc["polynomials"];
  if (!list.is_array()) malformed("polynomials: expected an array");
  std::vector<Polynomial> basis;
  for (const auto& entry : list) {
    if (!entry.is_object()) malformed("polynomials: each entry must be an object");
    Polynomial q(nvars);
    for (const auto& [key, value] : entry.items()) {
      Json parsed;
      try {
        parsed = Json::parse(key);
      } catch (const Json::parse_error&) {
        malformed("polynomials: key " + key + " is not an exponent vector");
      }
      Exponent e = exponent(parsed, nvars, "polynomials");
      if (q.coefficient(e) != 0)
        throw Error(ErrorCode::DuplicateMonomial, "polynomials: repeated exponent " + key);
      q.add_term(e, rational(value, "polynomials"));
    }
    basis.push_back(std::move(q));
  }
  return {SubspaceV::from_polynomials(nvars, std::move(basis)), settings(doc)};
}

std::string serialize_space(const SubspaceV& v) {
  Json doc;
  doc["nvars"] = v.nvars();
  if (v.is_monomial()) {
    Json list = Json::array();
    for (const auto& p : v.points()) list.push_back(p.values());
    doc["monomials"] = std::move(list);
  } else {
    Json list = Json::array();
    for (const auto& q : v.basis()) {
      Json entry = Json::object();
      for (const auto& [e, c] : q.terms()) entry[to_string(e)] = to_string(c);
      list.push_back(std::move(entry));
    }
    doc["polynomials"] = std::move(list);
  }
  return doc.dump();
}

PolytopeFile parse_polytope(std::string_view text) {
  const Json doc = parse_document(text);
  const Settings s = settings(doc);
  if (doc.contains("monomials") || doc.contains("polynomials")) {
    const SpaceFile sf = parse_space(text);
    if (!sf.space.is_monomial())
      throw Error(ErrorCode::DomainError, "polytope documents need a monomial space");
    std::vector<IntVector> pts;
    for (const auto& e : sf.space.points()) pts.push_back(to_int_vector(e));
    return {LatticePolytope::from_points(std::move(pts)), sf.settings};
  }
  const bool has_v = doc.contains("vertices");
  const bool has_p = doc.contains("points");
  if (!has_v) malformed("polytope document needs \"vertices\"");
  auto vertices = vector_list(doc["vertices"], "vertices");
  if (vertices.empty()) malformed("vertices: empty list");
  if (!has_p) {
    if (doc.contains("edges")) malformed("\"edges\" requires \"points\"");
    return {LatticePolytope::from_vertices(std::move(vertices)), s};
  }
  auto points = vector_list(doc["points"], "points");
  if (!doc.contains("edges"))
    return {LatticePolytope::from_points_and_vertices(std::move(points), std::move(vertices)), s};
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : doc["edges"]) {
    IntVector pair = int_vector(e, "edges");
    if (pair.size() != 2 || pair[0] < 0 || pair[1] < 0)
      malformed("edges: each entry must be a pair of vertex indices");
    edges.emplace_back(static_cast<std::size_t>(pair[0]), static_cast<std::size_t>(pair[1]));
  }
  return {LatticePolytope::from_explicit(std::move(points), std::move(vertices), std::move(edges)), s};
}

std::vector<EvalPoint> parse_points(std::string_view text, std::size_t nvars) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  const Json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("points")) malformed("points document needs \"points\"");
    list = &doc["points"];
  }
  if (!list->is_array()) malformed("points: expected an array");
  std::vector<EvalPoint> out;
  for (const auto& entry : *list) {
    if (!entry.is_array()) malformed("points: each point must be an array");
    if (entry.size() != nvars)
      throw Error(ErrorCode::DimensionMismatch,
                  "points: point has " + std::to_string(entry.size()) + " coordinates, expected " +
                      std::to_string(nvars));
    std::vector<Rational> coords;
    for (const auto& c : entry) coords.push_back(rational(c, "points"));
    out.push_back(EvalPoint::at(std::move(coords)));
  }
  return out;
}

EvalPoint parse_point_list(std::string_view text, std::size_t nvars) {
  std::vector<Rational> coords;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    std::string_view item = text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    coords.push_back(parse_rational(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (coords.size() != nvars)
    throw Error(ErrorCode::DimensionMismatch, "point has " + std::to_string(coords.size()) +
                                                  " coordinates, expected " + std::to_string(nvars));
  return EvalPoint::at(std::move(coords));
}

}  // namespace jetorder
