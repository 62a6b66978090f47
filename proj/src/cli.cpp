#include "fqc/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fqc/bounds.hpp"
#include "fqc/closure.hpp"
#include "fqc/generators.hpp"
#include "fqc/json_io.hpp"
#include "fqc/vanishing_ideal.hpp"

namespace fqc::cli {
namespace {

using io::Json;
using io::JsonError;

constexpr const char* kTheoremHelp =
    "Theorem ids: size-bound, closure-bound, product-closure-bound, "
    "mult-set-bound, mult-closure-bound, hilbert-growth, schwartz-zippel-mult, "
    "statistical-kakeya, partial-lines, splus-growth, union-subadditivity, "
    "closure-axioms";

struct GlobalOpts {
  long long cap_grid = kDefaultGridCap;
  long long cap_matrix = kDefaultMatrixCap;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::string out_path;
};

Caps caps_of(const GlobalOpts& g) { return Caps{g.cap_grid, g.cap_matrix}; }

/// q = p^e factored over the primes; rejects non prime powers.
std::pair<std::uint32_t, int> factor_order(long long q) {
  if (q < 2) throw std::invalid_argument("field order must be >= 2");
  for (long long p = 2; p * p <= q; ++p) {
    if (q % p) continue;
    int e = 0;
    long long rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (rest != 1)
      throw std::invalid_argument("field order " + std::to_string(q) +
                                  " is not a prime power");
    return {static_cast<std::uint32_t>(p), e};
  }
  return {static_cast<std::uint32_t>(q), 1};  // q itself is prime
}

FieldPtr field_from_flags(long long q, const std::string& modulus_text) {
  const auto [p, e] = factor_order(q);
  if (modulus_text.empty()) return make_field(p, e);
  const Json mj = io::parse_json_text(modulus_text);
  if (!mj.is_array()) throw std::invalid_argument("--modulus must be a JSON array");
  std::vector<std::uint32_t> mod;
  for (const auto& c : mj) mod.push_back(c.get<std::uint32_t>());
  return make_field(p, e, mod);
}

PointSet points_from_flags(const std::string& input, long long q, int n,
                           const std::string& points_text,
                           const std::string& modulus_text) {
  if (!input.empty()) return io::point_set_from_json(io::parse_json_file(input));
  if (q == 0 || n == 0 || points_text.empty())
    throw std::invalid_argument(
        "point set needs either --input FILE or all of --q, --n, --points");
  FieldPtr field = field_from_flags(q, modulus_text);
  const Json pj = io::parse_json_text(points_text);
  Json wrapped = {{"field", io::field_to_json(*field)}, {"n", n}, {"points", pj}};
  return io::point_set_from_json(wrapped);
}

void emit(const std::string& text, const GlobalOpts& g, std::ostream& out) {
  if (g.out_path.empty() || g.out_path == "-") {
    out << text;
    if (!text.empty() && text.back() != '\n') out << "\n";
    return;
  }
  std::ofstream f(g.out_path);
  if (!f) throw std::invalid_argument("cannot write output file '" + g.out_path + "'");
  f << text;
}

std::string points_csv(const PointSet& y) {
  std::ostringstream s;
  for (const auto& pt : y.points()) {
    for (std::size_t i = 0; i < pt.size(); ++i) s << (i ? "," : "") << pt[i];
    s << "\n";
  }
  return s.str();
}

/// Emits the reports and picks the exit code: 1 iff a non-advisory bound
/// fails.
int finish_reports(const std::vector<BoundReport>& reports, const GlobalOpts& g,
                   std::ostream& out) {
  if (g.format == "csv") {
    emit(io::reports_to_csv(reports), g, out);
  } else {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(io::bound_report_to_json(r));
    emit(arr.dump(2), g, out);
  }
  for (const auto& r : reports)
    if (!r.advisory && !r.holds) return 1;
  return 0;
}

std::vector<int> parse_int_list(const std::string& text, char sep, const char* what) {
  std::vector<int> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, sep)) {
    try {
      size_t pos = 0;
      out.push_back(std::stoi(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(what);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("cannot parse ") + what + " '" + text + "'");
    }
  }
  return out;
}

int run_verify(const std::string& theorem, const std::string& instance_path, int d,
               int d1, int d2, int l, int m, int lambda, int tau,
               const std::string& chain_text, const std::string& alpha_text,
               const GlobalOpts& g, std::ostream& out) {
  const Caps caps = caps_of(g);
  std::vector<BoundReport> reports;

  if (theorem == "size-bound" || theorem == "closure-bound" ||
      theorem == "mult-set-bound" || theorem == "mult-closure-bound" ||
      theorem == "hilbert-growth") {
    const PointSet y = io::point_set_from_json(io::parse_json_file(instance_path));
    if (theorem == "size-bound") {
      reports.push_back(verify_size_bound(y, d, caps));
    } else if (theorem == "closure-bound") {
      reports.push_back(verify_closure_bound(y, d, caps));
    } else if (theorem == "mult-set-bound") {
      reports.push_back(verify_multiplicity_set_bound(y, d, m, caps));
    } else if (theorem == "mult-closure-bound") {
      reports.push_back(verify_multiplicity_closure_bound(y, d, l, m, caps));
    } else {
      if (d1 < 0 || d2 < 0)
        throw std::invalid_argument("hilbert-growth needs --d1 and --d2");
      reports.push_back(verify_hilbert_growth(y, d1, d2, m, caps));
    }
  } else if (theorem == "product-closure-bound") {
    const Json j = io::parse_json_file(instance_path);
    const PointSet y = io::point_set_from_json(j.contains("y") ? j.at("y") : j);
    if (!j.contains("factors") || !j.at("factors").is_array())
      throw JsonError("product-closure-bound instance needs a 'factors' array");
    std::vector<std::vector<std::uint32_t>> factors;
    for (const auto& fac : j.at("factors")) {
      std::vector<std::uint32_t> vals;
      for (const auto& v : fac) vals.push_back(v.get<std::uint32_t>());
      factors.push_back(std::move(vals));
    }
    reports = verify_product_closure_bound(factors, y, d, caps);
  } else if (theorem == "schwartz-zippel-mult") {
    const Json j = io::parse_json_file(instance_path);
    if (!j.contains("curve") || !j.contains("x"))
      throw JsonError("schwartz-zippel-mult instance needs 'curve' and 'x'");
    const CurveSpec curve = io::curve_from_json(j.at("curve"));
    const PointSet x = io::point_set_from_json(j.at("x"));
    reports.push_back(verify_schwartz_zippel_mult(curve, x, d, l, m, caps));
  } else if (theorem == "statistical-kakeya") {
    const InstanceBundle bundle = io::bundle_from_json(io::parse_json_file(instance_path));
    std::optional<std::tuple<int, int, int>> chain;
    if (!chain_text.empty()) {
      const auto v = parse_int_list(chain_text, ',', "--chain l,m,d");
      if (v.size() != 3) throw std::invalid_argument("--chain needs l,m,d");
      chain = std::make_tuple(v[0], v[1], v[2]);
    }
    const KakeyaResult res = verify_statistical_kakeya(bundle, lambda, tau, chain, caps);
    reports.push_back(res.report);
  } else if (theorem == "partial-lines") {
    const InstanceBundle bundle = io::bundle_from_json(io::parse_json_file(instance_path));
    std::optional<std::pair<int, int>> alpha;
    if (!alpha_text.empty()) {
      const auto v = parse_int_list(alpha_text, '/', "--alpha a/b");
      if (v.size() != 2) throw std::invalid_argument("--alpha needs a/b");
      alpha = std::make_pair(v[0], v[1]);
    }
    const PartialLinesResult res = verify_partial_lines_corollaries(bundle, alpha, caps);
    reports.push_back(res.factorial_form);
    reports.push_back(res.rational_form);
    if (res.alpha_form) reports.push_back(*res.alpha_form);
  } else if (theorem == "splus-growth") {
    const Staircase s = io::staircase_from_json(io::parse_json_file(instance_path));
    reports.push_back(splus_growth_report(s.members, s.n, d));
  } else if (theorem == "union-subadditivity") {
    const Json j = io::parse_json_file(instance_path);
    if (!j.contains("parts") || !j.at("parts").is_array() || j.at("parts").empty())
      throw JsonError("union-subadditivity instance needs a nonempty 'parts' array");
    std::vector<PointSet> parts;
    for (const auto& pj : j.at("parts")) parts.push_back(io::point_set_from_json(pj));
    reports.push_back(union_subadditivity_report(parts, d, caps));
  } else if (theorem == "closure-axioms") {
    const Json j = io::parse_json_file(instance_path);
    if (!j.contains("x") || !j.contains("y"))
      throw JsonError("closure-axioms instance needs 'x' and 'y'");
    const PointSet x = io::point_set_from_json(j.at("x"));
    const PointSet y = io::point_set_from_json(j.at("y"));
    reports.push_back(closure_axioms_report(x, y, d, caps));
  } else {
    throw std::invalid_argument("unknown theorem id '" + theorem + "'. " + kTheoremHelp);
  }
  return finish_reports(reports, g, out);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verifier for Hilbert functions, degree closures and "
               "point-set bounds over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--cap-grid", g.cap_grid, "Grid enumeration cap (points)");
  app.add_option("--cap-matrix", g.cap_matrix, "Matrix entry cap");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", g.seed, "Random seed for generators and sampling");
  app.add_option("--out", g.out_path, "Output file (default stdout)");

  // Shared instance flags.
  std::string input, points_text, modulus_text;
  long long q = 0;
  int n = 0, d = -1, dmax = -1, m = 1, l = 1;

  auto* hilbert = app.add_subcommand(
      "hilbert", "Hilbert function of a point set (single degree or profile)");
  hilbert->add_option("--input", input, "Point-set JSON file");
  hilbert->add_option("--q", q, "Field order p^e");
  hilbert->add_option("--n", n, "Ambient dimension");
  hilbert->add_option("--points", points_text, "Inline JSON point list");
  hilbert->add_option("--modulus", modulus_text, "Field modulus (little-endian JSON array)");
  hilbert->add_option("--d", d, "Single degree");
  hilbert->add_option("--dmax", dmax, "Profile up to this degree");
  hilbert->add_option("--m", m, "Multiplicity order (default 1)");

  auto* closure_cmd = app.add_subcommand("closure", "Degree-d closure of a point set");
  closure_cmd->add_option("--input", input, "Point-set JSON file");
  closure_cmd->add_option("--q", q, "Field order p^e");
  closure_cmd->add_option("--n", n, "Ambient dimension");
  closure_cmd->add_option("--points", points_text, "Inline JSON point list");
  closure_cmd->add_option("--modulus", modulus_text, "Field modulus");
  closure_cmd->add_option("--d", d, "Degree")->required();

  auto* mclosure = app.add_subcommand(
      "mclosure", "Multiplicity closure cl_d^{l,m} of a point set");
  mclosure->add_option("--input", input, "Point-set JSON file");
  mclosure->add_option("--q", q, "Field order p^e");
  mclosure->add_option("--n", n, "Ambient dimension");
  mclosure->add_option("--points", points_text, "Inline JSON point list");
  mclosure->add_option("--modulus", modulus_text, "Field modulus");
  mclosure->add_option("--d", d, "Degree")->required();
  mclosure->add_option("--l", l, "Output vanishing order")->required();
  mclosure->add_option("--m", m, "Input vanishing order")->required();

  auto* gen = app.add_subcommand("gen", "Generate instances (JSON)");
  gen->require_subcommand(1);
  gen->fallthrough();
  int count = 0, tau = 0, degree_bound = 1;
  std::string factors_text, components_text;
  auto* gen_lines = gen->add_subcommand("lines", "Union of random partial lines");
  gen_lines->add_option("--q", q, "Field order p^e")->required();
  gen_lines->add_option("--n", n, "Ambient dimension")->required();
  gen_lines->add_option("--modulus", modulus_text, "Field modulus");
  gen_lines->add_option("--count", count, "Number of distinct lines")->required();
  gen_lines->add_option("--tau", tau, "Sample size per line")->required();
  auto* gen_nikodym = gen->add_subcommand(
      "nikodym", "One random line through every grid point, tau-sampled");
  gen_nikodym->add_option("--q", q, "Field order p^e")->required();
  gen_nikodym->add_option("--n", n, "Ambient dimension")->required();
  gen_nikodym->add_option("--modulus", modulus_text, "Field modulus");
  gen_nikodym->add_option("--tau", tau, "Sample size per line")->required();
  auto* gen_product = gen->add_subcommand("product", "Product set E_1 x ... x E_n");
  gen_product->add_option("--q", q, "Field order p^e")->required();
  gen_product->add_option("--modulus", modulus_text, "Field modulus");
  gen_product->add_option("--factors", factors_text, "JSON list of coordinate value lists")
      ->required();
  auto* gen_curve = gen->add_subcommand("curve", "Parametric curve image");
  gen_curve->add_option("--q", q, "Field order p^e")->required();
  gen_curve->add_option("--n", n, "Ambient dimension")->required();
  gen_curve->add_option("--modulus", modulus_text, "Field modulus");
  gen_curve->add_option("--degree-bound", degree_bound, "Component degree bound")
      ->required();
  gen_curve
      ->add_option("--components", components_text,
                   "JSON list of little-endian coefficient lists")
      ->required();

  std::string theorem, instance_path, chain_text, alpha_text;
  int d1 = -1, d2 = -1, lambda = 1;
  auto* verify = app.add_subcommand("verify", std::string("Verify one bound. ") + kTheoremHelp);
  verify->add_option("theorem", theorem, "Theorem id")->required();
  verify->add_option("--instance", instance_path, "Instance JSON file")->required();
  verify->add_option("--d", d, "Degree");
  verify->add_option("--d1", d1, "Larger degree (hilbert-growth)");
  verify->add_option("--d2", d2, "Smaller degree (hilbert-growth)");
  verify->add_option("--l", l, "Output vanishing order");
  verify->add_option("--m", m, "Input vanishing order");
  verify->add_option("--lambda", lambda, "Curve degree bound");
  verify->add_option("--tau", tau, "Per-curve sample size");
  verify->add_option("--chain", chain_text, "l,m,d diagnostic chain (statistical-kakeya)");
  verify->add_option("--alpha", alpha_text, "a/b sample exponent (partial-lines)");

  int dmin = 0;
  long long sample = 0;
  std::string mode_text = "size-bound";
  bool summary_only = false;
  auto* sweep = app.add_subcommand(
      "sweep", "Check size-bound/closure-bound over all (or sampled) grid subsets");
  sweep->add_option("--q", q, "Field order p^e")->required();
  sweep->add_option("--n", n, "Ambient dimension")->required();
  sweep->add_option("--modulus", modulus_text, "Field modulus");
  sweep->add_option("--dmin", dmin, "Smallest degree (default 0)");
  sweep->add_option("--dmax", dmax, "Largest degree");
  sweep->add_option("--d", d, "Single degree (sets both ends)");
  sweep->add_option("--mode", mode_text, "Bound to check")
      ->check(CLI::IsMember({"size-bound", "closure-bound"}));
  sweep->add_option("--sample", sample, "Sampled subset count (0 = exhaustive)");
  sweep->add_flag("--summary-only", summary_only, "Omit per-instance reports");

  std::string functions_path;
  auto* fkg = app.add_subcommand(
      "fkg-check", "Correlation-inequality hypotheses and conclusion on a finite box");
  fkg->add_option("--functions", functions_path, "Lattice tables JSON file")->required();

  std::vector<const char*> argv;
  argv.push_back("fqclosure");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const Caps caps = caps_of(g);

  if (hilbert->parsed()) {
    const PointSet y = points_from_flags(input, q, n, points_text, modulus_text);
    if ((d < 0) == (dmax < 0))
      throw std::invalid_argument("hilbert needs exactly one of --d or --dmax");
    if (d >= 0) {
      const long long value = hilbert_function(y, d, m, caps.matrix);
      if (g.format == "csv") {
        emit("d,value\n" + std::to_string(d) + "," + std::to_string(value) + "\n", g, out);
      } else {
        const Json j = {{"d", d}, {"m", m}, {"value", value}};
        emit(j.dump(2), g, out);
      }
    } else {
      const HilbertProfile prof = hilbert_profile(y, dmax, m, caps.matrix);
      emit(g.format == "csv" ? io::profile_to_csv(prof) : io::profile_to_json(prof).dump(2),
           g, out);
    }
    return 0;
  }

  if (closure_cmd->parsed() || mclosure->parsed()) {
    const PointSet y = points_from_flags(input, q, n, points_text, modulus_text);
    const ClosureResult res = closure_cmd->parsed()
                                  ? closure(y, d, caps)
                                  : multiplicity_closure(y, d, l, m, caps);
    emit(g.format == "csv" ? points_csv(res.output)
                           : io::closure_result_to_json(res).dump(2),
         g, out);
    return 0;
  }

  if (gen->parsed()) {
    FieldPtr field = field_from_flags(q, modulus_text);
    Json j;
    if (gen_lines->parsed()) {
      j = io::bundle_to_json(partial_lines_instance(field, n, count, tau, g.seed));
    } else if (gen_nikodym->parsed()) {
      j = io::bundle_to_json(nikodym_instance(field, n, tau, g.seed, caps.grid));
    } else if (gen_product->parsed()) {
      const Json fj = io::parse_json_text(factors_text);
      std::vector<std::vector<std::uint32_t>> factors;
      for (const auto& fac : fj) {
        std::vector<std::uint32_t> vals;
        for (const auto& v : fac) vals.push_back(v.get<std::uint32_t>());
        factors.push_back(std::move(vals));
      }
      j = io::point_set_to_json(product_set(field, factors));
    } else {
      const Json cj = io::parse_json_text(components_text);
      std::vector<std::vector<std::uint32_t>> components;
      for (const auto& comp : cj) {
        std::vector<std::uint32_t> vals;
        for (const auto& v : comp) vals.push_back(v.get<std::uint32_t>());
        components.push_back(std::move(vals));
      }
      const CurveSpec curve = make_curve(field, components, degree_bound);
      j = {{"curve", io::curve_to_json(curve)},
           {"points", io::point_set_to_json(curve_points(curve))}};
    }
    emit(j.dump(2), g, out);
    return 0;
  }

  if (verify->parsed())
    return run_verify(theorem, instance_path, d, d1, d2, l, m, lambda, tau, chain_text,
                      alpha_text, g, out);

  if (sweep->parsed()) {
    FieldPtr field = field_from_flags(q, modulus_text);
    if (d >= 0) {
      dmin = d;
      dmax = d;
    }
    if (dmax < 0) throw std::invalid_argument("sweep needs --dmax or --d");
    const SweepMode mode =
        mode_text == "size-bound" ? SweepMode::kSizeBound : SweepMode::kClosureBound;
    const std::optional<long long> sample_opt =
        sample > 0 ? std::optional<long long>(sample) : std::nullopt;
    const SweepResult res =
        exhaustive_sweep(field, n, dmin, dmax, mode, sample_opt, g.seed, caps);
    if (g.format == "csv") {
      emit(io::reports_to_csv(summary_only ? std::vector<BoundReport>{res.worst}
                                           : res.reports),
           g, out);
    } else {
      emit(io::sweep_result_to_json(res, !summary_only).dump(2), g, out);
    }
    return res.violations > 0 ? 1 : 0;
  }

  if (fkg->parsed()) {
    const LatticeFunctions fns =
        io::lattice_functions_from_json(io::parse_json_file(functions_path));
    const FkgReport report = fkg_check(fns);
    if (g.format == "csv") {
      std::ostringstream s;
      const Json j = io::fkg_report_to_json(report);
      s << "key,value\n";
      for (const auto& [key, value] : j.items())
        s << key << "," << (value.is_string() ? value.get<std::string>() : value.dump())
          << "\n";
      emit(s.str(), g, out);
    } else {
      emit(io::fkg_report_to_json(report).dump(2), g, out);
    }
    return report.hypotheses_hold && !report.inequality_holds ? 1 : 0;
  }

  err << "usage error: no subcommand given\n";
  return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const JsonError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceededError& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "hypothesis or usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace fqc::cli
