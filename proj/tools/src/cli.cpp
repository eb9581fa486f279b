#include "jetorder/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "jetorder/diffops.hpp"
#include "jetorder/error.hpp"
#include "jetorder/io.hpp"
#include "jetorder/jets.hpp"
#include "jetorder/toric.hpp"
#include "jetorder/verify.hpp"

namespace jetorder::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kMaxWindowWeights = 4096;

struct Common {
  bool json = false;
  std::optional<std::uint64_t> seed;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedDocument, "cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Flag, then JETORDER_SEED, then the input document, then 0.
std::uint64_t resolve_seed(const Common& common, const Settings& settings) {
  if (common.seed) return *common.seed;
  if (const char* env = std::getenv("JETORDER_SEED"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || env[0] == '-')
      throw Error(ErrorCode::MalformedDocument, std::string("JETORDER_SEED is not a non-negative integer: ") + env);
    return v;
  }
  return settings.seed.value_or(0);
}

RankOptions rank_options(const Settings& s, std::uint64_t seed) {
  RankOptions r;
  r.seed = seed;
  if (s.symbolic_threshold) r.symbolic_threshold = *s.symbolic_threshold;
  if (s.random_trials) r.random_trials = *s.random_trials;
  return r;
}

Json space_echo(const SubspaceV& v) { return Json::parse(serialize_space(v)); }

Json order_json(const OrderReport& r) {
  return Json{{"point", r.point.to_string()},
              {"n_inj", r.n_inj},
              {"n_surj", r.n_surj},
              {"gap_sequence", r.gap_sequence},
              {"rank_profile", r.rank_profile},
              {"weierstrass_order", r.weierstrass_order},
              {"method", to_string(r.method)},
              {"certified", r.certified}};
}

EvalPoint parse_at(const std::string& text, std::size_t nvars) {
  std::vector<std::optional<Rational>> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (item == "?")
      coords.emplace_back(std::nullopt);
    else
      coords.emplace_back(parse_rational(item));
  }
  if (!text.empty() && text.back() == ',') coords.emplace_back(parse_rational(""));
  if (coords.size() != nvars)
    throw Error(ErrorCode::DimensionMismatch, "--at has " + std::to_string(coords.size()) +
                                                  " coordinates, expected " + std::to_string(nvars));
  return EvalPoint::partial(std::move(coords));
}

std::vector<IntVector> weight_window(const std::string& window, std::size_t nvars) {
  const auto colon = window.find(':');
  if (colon == std::string::npos)
    throw Error(ErrorCode::MalformedDocument, "--weights expects lo:hi, got '" + window + "'");
  long lo = 0, hi = 0;
  try {
    std::size_t used = 0;
    lo = std::stol(window.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("lo");
    hi = std::stol(window.substr(colon + 1), &used);
    if (used != window.size() - colon - 1) throw std::invalid_argument("hi");
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::MalformedDocument, "--weights expects integers lo:hi, got '" + window + "'");
  }
  if (lo > hi) throw Error(ErrorCode::DomainError, "--weights window is empty");
  double count = 1;
  for (std::size_t i = 0; i < nvars; ++i) count *= static_cast<double>(hi - lo + 1);
  if (count > static_cast<double>(kMaxWindowWeights))
    throw Error(ErrorCode::DomainError, "--weights window holds more than " +
                                            std::to_string(kMaxWindowWeights) + " weights");
  std::vector<IntVector> out;
  IntVector w(nvars, lo);
  while (true) {
    out.push_back(w);
    std::size_t i = nvars;
    while (i > 0 && w[i - 1] == hi) w[--i] = lo;
    if (i == 0) break;
    ++w[i - 1];
  }
  return out;
}

void render_text(const Json& j, std::ostream& out, int indent);

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar_text(j[i]);
    return s + "]";
  }
  return j.dump();
}

bool is_flat(const Json& j) {
  if (j.is_object()) return false;
  if (j.is_array())
    return std::all_of(j.begin(), j.end(), [](const Json& e) { return !e.is_string() && is_flat(e); });
  return true;
}

void render_text(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_flat(value)) {
        out << pad << key << ": " << scalar_text(value) << '\n';
      } else {
        out << pad << key << ":\n";
        render_text(value, out, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (is_flat(e)) {
        out << pad << "- " << scalar_text(e) << '\n';
      } else {
        std::ostringstream item;
        render_text(e, item, indent + 2);
        std::string text = item.str();
        text.replace(0, pad.size() + 2, pad + "- ");
        out << text;
      }
    }
  } else {
    out << pad << scalar_text(j) << '\n';
  }
}

void emit(const Common& common, const std::string& command, std::uint64_t seed, Json input,
          Json result, std::ostream& out) {
  Json report{{"tool", "jetorder"},
              {"version", JETORDER_VERSION},
              {"command", command},
              {"seed", seed},
              {"input", std::move(input)},
              {"result", std::move(result)}};
  if (common.json)
    out << report.dump(2) << '\n';
  else
    render_text(report, out, 0);
}

Json verify_json(const VerifyReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"check", row.name},
                        {"expected", row.expected},
                        {"computed", row.computed},
                        {"status", row.pass ? "PASS" : "FAIL"},
                        {"source", to_string(row.source)}});
  return Json{{"family", r.family}, {"passed", r.passed()}, {"checks", rows}, {"notes", r.notes}};
}

Json toric_json(const LatticePolytope& p, const ToricReport& r, bool full) {
  Json out{{"nvars", p.nvars()},
           {"dim", p.dim()},
           {"lattice_points", p.points().size()},
           {"vertices", Json::array()},
           {"smooth", r.smooth},
           {"very_ample", r.very_ample},
           {"very_ample_decided_by_bounded_search", r.very_ample_bounded},
           {"d_gonal", r.d_gonal},
           {"N_inj", r.hilbert.n_inj},
           {"hilbert_profile", r.hilbert.profile}};
  for (const auto& v : p.vertices()) out["vertices"].push_back(to_string(v));
  if (!full) return out;
  if (!r.s) {
    out["note"] = "basis condition fails; face formulas not evaluated";
    return out;
  }
  out["s"] = *r.s;
  Json by_vertex = Json::array();
  for (std::size_t i = 0; i < r.n_inj_by_vertex.size(); ++i)
    by_vertex.push_back(Json{{"vertex", to_string(p.vertices()[i])}, {"n_inj", r.n_inj_by_vertex[i]}});
  out["n_inj_by_vertex"] = by_vertex;
  Json by_face = Json::array();
  for (const auto& [fi, n] : r.n_inj_by_face)
    by_face.push_back(Json{{"face", describe(p, p.faces()[fi])}, {"n_inj", n}});
  out["n_inj_by_face"] = by_face;
  out["n_inj"] = *r.n_inj_max;
  out["n_surj"] = *r.n_surj;
  Json facets = Json::array();
  for (const auto& [fi, n] : r.n1_surj->by_facet)
    facets.push_back(Json{{"face", describe(p, p.faces()[fi])}, {"n_surj", n}});
  out["n1_surj"] = r.n1_surj->n1_surj;
  out["n1_surj_by_facet"] = facets;
  out["method"] = to_string(r.n1_surj->method);
  out["certified"] = r.n1_surj->certified;
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jet invariants, preserving differential operators and toric formulas for "
               "subspaces of polynomial rings",
               "jetorder"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", JETORDER_VERSION);
  Common common;
  app.add_flag("--json", common.json, "Machine-readable JSON report");
  app.add_option("--seed", common.seed, "Seed for randomized rank checks and sampling");

  std::string file;
  auto* orders = app.add_subcommand("orders", "Injectivity/jet orders at a point or generically");
  orders->add_option("space", file, "Space document")->required();
  std::string at;
  bool generic = false;
  auto* at_opt = orders->add_option("--at", at, "Point as x,y,...; '?' leaves a coordinate symbolic");
  auto* gen_opt = orders->add_flag("--generic", generic, "Generic point");
  at_opt->excludes(gen_opt);
  gen_opt->excludes(at_opt);

  auto* scan = app.add_subcommand("scan", "Orders at every point of a point list");
  scan->add_option("space", file, "Space document")->required();
  std::string points_file;
  scan->add_option("--points", points_file, "Points document")->required();

  auto* minors = app.add_subcommand("minors", "Maximal minors cutting out the Weierstrass points");
  minors->add_option("space", file, "Space document")->required();
  std::size_t max_minors = MinorOptions{}.max_minors;
  minors->add_option("--max-minors", max_minors, "Refuse when more column subsets exist");

  auto* dv = app.add_subcommand("dv", "Weight spaces of preserving differential operators");
  dv->add_option("space", file, "Monomial space document")->required();
  int order = 0;
  dv->add_option("--order", order, "Operator order bound")->required()->check(CLI::NonNegativeNumber);
  std::string window;
  dv->add_option("--weights", window, "Weight window lo:hi per coordinate (default P - P)");

  auto* toric = app.add_subcommand("toric", "Lattice polytope invariants");
  toric->add_option("polytope", file, "Polytope or monomial space document")->required();
  bool full = false;
  toric->add_flag("--report", full, "Full report including face formulas");
  std::vector<std::string> fields;
  toric->add_option("--require", fields, "Fields that must be computed (s, n_inj, n_surj, n1_surj)")
      ->delimiter(',')
      ->check(CLI::IsMember({"s", "n_inj", "n_surj", "n1_surj"}));

  auto* verify = app.add_subcommand("verify", "Check the worked families against closed forms");
  verify->require_subcommand(1);
  int samples = VerifyOptions{}.sample_points;
  verify->add_option("--samples", samples, "Seeded sample points per check")->check(CLI::NonNegativeNumber);
  verify->add_option("--max-minors", max_minors, "Minor enumeration cap");
  int vn = 1, vm = 1, hr = 1, hk = 1, hl = 1;
  auto* veronese = verify->add_subcommand("veronese", "All monomials of degree <= m in n variables");
  veronese->add_option("--n", vn)->required()->check(CLI::PositiveNumber);
  veronese->add_option("--m", vm)->required()->check(CLI::PositiveNumber);
  auto* hirz = verify->add_subcommand("hirzebruch", "x^i y^j with i + r j <= k, j <= l");
  hirz->add_option("--r", hr)->required();
  hirz->add_option("--k", hk)->required();
  hirz->add_option("--l", hl)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (orders->parsed()) {
      if (!generic && at.empty()) throw Error(ErrorCode::MalformedDocument, "orders needs --at or --generic");
      const SpaceFile sf = parse_space(read_file(file));
      const std::uint64_t seed = resolve_seed(common, sf.settings);
      const RankOptions ro = rank_options(sf.settings, seed);
      const auto& v = sf.space;
      const OrderReport g = n_inj_at(v, EvalPoint::generic(v.nvars()), ro);
      Json result{{"N_inj", g.n_inj}};
      const EvalPoint point = generic ? EvalPoint::generic(v.nvars()) : parse_at(at, v.nvars());
      const OrderReport r = generic ? g : n_inj_at(v, point, ro, g.n_inj);
      result["report"] = order_json(r);
      emit(common, "orders", seed,
           Json{{"file", file}, {"space", space_echo(v)}, {"point", point.to_string()}}, result, out);
      return kOk;
    }
    if (scan->parsed()) {
      const SpaceFile sf = parse_space(read_file(file));
      const std::uint64_t seed = resolve_seed(common, sf.settings);
      const auto& v = sf.space;
      const auto points = parse_points(read_file(points_file), v.nvars());
      const RankOptions ro = rank_options(sf.settings, seed);
      const int generic_n = n_inj_at(v, EvalPoint::generic(v.nvars()), ro).n_inj;
      Json reports = Json::array();
      std::size_t weierstrass = 0;
      for (const auto& p : points) {
        const OrderReport r = n_inj_at(v, p, ro, generic_n);
        if (r.n_inj > generic_n) ++weierstrass;
        reports.push_back(order_json(r));
      }
      emit(common, "scan", seed,
           Json{{"file", file}, {"points_file", points_file}, {"space", space_echo(v)}},
           Json{{"N_inj", generic_n}, {"weierstrass_points", weierstrass}, {"points", reports}}, out);
      return kOk;
    }
    if (minors->parsed()) {
      const SpaceFile sf = parse_space(read_file(file));
      const std::uint64_t seed = resolve_seed(common, sf.settings);
      const auto& v = sf.space;
      const RankOptions ro = rank_options(sf.settings, seed);
      const auto list = weierstrass_minors(v, ro, MinorOptions{max_minors});
      Json polys = Json::array();
      for (const auto& q : list) polys.push_back(q.to_string());
      emit(common, "minors", seed, Json{{"file", file}, {"space", space_echo(v)}},
           Json{{"N_inj", n_inj_at(v, EvalPoint::generic(v.nvars()), ro).n_inj},
                {"count", list.size()},
                {"minors", polys}},
           out);
      return kOk;
    }
    if (dv->parsed()) {
      const SpaceFile sf = parse_space(read_file(file));
      const std::uint64_t seed = resolve_seed(common, sf.settings);
      const auto& v = sf.space;
      if (!v.is_monomial())
        throw Error(ErrorCode::DomainError, "dv needs a monomial space (the weight grading requires it)");
      const auto weights =
          window.empty() ? difference_weights(v.points()) : weight_window(window, v.nvars());
      Json spaces = Json::array();
      for (const auto& w : weights) {
        const WeightSpace ws = preserving_weight_space(v.points(), w, order);
        Json basis = Json::array();
        for (const auto& op : ws.basis) basis.push_back(op.to_string());
        spaces.push_back(Json{{"weight", to_string(w)},
                              {"dim", ws.dim()},
                              {"annihilator_dim", ws.annihilator_dim},
                              {"basis", basis}});
      }
      const EndImage image = evaluation_image(v, order);
      emit(common, "dv", seed,
           Json{{"file", file},
                {"space", space_echo(v)},
                {"order", order},
                {"weights", window.empty() ? "P - P" : window}},
           Json{{"weight_spaces", spaces},
                {"end_image_rank", image.rank},
                {"dim_v_squared", image.dim_v * image.dim_v},
                {"irreducible", image.rank == image.dim_v * image.dim_v}},
           out);
      return kOk;
    }
    if (toric->parsed()) {
      const PolytopeFile pf = parse_polytope(read_file(file));
      const std::uint64_t seed = resolve_seed(common, pf.settings);
      ToricOptions to;
      to.rank = rank_options(pf.settings, seed);
      if (pf.settings.search_bound) to.search_bound = *pf.settings.search_bound;
      const bool need = !fields.empty();
      const ToricReport r = toric_report(pf.polytope, to, need);
      Json input{{"file", file}, {"report", full}};
      if (need) input["require"] = fields;
      emit(common, "toric", seed, input, toric_json(pf.polytope, r, full || need), out);
      return kOk;
    }
    if (verify->parsed()) {
      const std::uint64_t seed = resolve_seed(common, Settings{});
      VerifyOptions vo;
      vo.seed = seed;
      vo.rank.seed = seed;
      vo.sample_points = samples;
      vo.minors.max_minors = max_minors;
      VerifyReport report;
      Json input;
      if (veronese->parsed()) {
        report = verify_veronese(vn, vm, vo);
        input = Json{{"family", "veronese"}, {"n", vn}, {"m", vm}, {"samples", samples}};
      } else {
        report = verify_hirzebruch(hr, hk, hl, vo);
        input = Json{{"family", "hirzebruch"}, {"r", hr}, {"k", hk}, {"l", hl}, {"samples", samples}};
      }
      emit(common, "verify", seed, input, verify_json(report), out);
      return report.passed() ? kOk : kCheckFailed;
    }
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace jetorder::cli
