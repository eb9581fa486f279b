#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jetorder/jets.hpp"
#include "jetorder/subspace.hpp"
#include "jetorder/toric.hpp"

namespace jetorder {

/// Optional knobs shared by space and polytope documents.
struct Settings {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> symbolic_threshold;
  std::optional<int> random_trials;
  std::optional<long> search_bound;
};

struct SpaceFile {
  SubspaceV space;
  Settings settings;
};

/// {"nvars": n, "monomials": [[..], ..]} or
/// {"nvars": n, "polynomials": [{"[e1,..,en]": "p/q", ..}, ..]}.
SpaceFile parse_space(std::string_view text);

/// Inverse of parse_space; monomial spaces are written as "monomials".
std::string serialize_space(const SubspaceV& v);

struct PolytopeFile {
  LatticePolytope polytope;
  Settings settings;
};

/// {"vertices": [..]}, {"points": [..], "vertices": [..]} (optionally with
/// "edges": [[i, j], ..] for rank > 3), or a monomial space document whose
/// exponents are taken as the point set.
PolytopeFile parse_polytope(std::string_view text);

/// {"points": [["1/2", "3"], [0, 1], ..]}; entries may be integers or
/// rational strings.
std::vector<EvalPoint> parse_points(std::string_view text, std::size_t nvars);

/// "1/2,3" -> point.
EvalPoint parse_point_list(std::string_view text, std::size_t nvars);

}  // namespace jetorder
