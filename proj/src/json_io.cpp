#include "fqc/json_io.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

namespace fqc::io {
namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw JsonError(std::string("missing required key '") + key + "'");
  return j.at(key);
}

long long require_int(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer() && !v.is_number_unsigned())
    throw JsonError(std::string("key '") + key + "' must be an integer");
  return v.get<long long>();
}

Json big_to_json(const BigInt& v) {
  if (v >= BigInt(std::numeric_limits<long long>::min()) &&
      v <= BigInt(std::numeric_limits<long long>::max()))
    return static_cast<long long>(v);
  return v.str();
}

BigInt big_from_json(const Json& v, const char* what) {
  if (v.is_number_integer() || v.is_number_unsigned()) return BigInt(v.get<long long>());
  if (v.is_string()) {
    try {
      return BigInt(v.get<std::string>());
    } catch (const std::exception&) {
      throw JsonError(std::string(what) + " is not a decimal integer string");
    }
  }
  throw JsonError(std::string(what) + " must be an integer or a decimal string");
}

std::vector<std::uint32_t> u32_list(const Json& v, const char* what) {
  if (!v.is_array()) throw JsonError(std::string(what) + " must be an array");
  std::vector<std::uint32_t> out;
  for (const auto& e : v) {
    if (!e.is_number_integer() && !e.is_number_unsigned())
      throw JsonError(std::string(what) + " entries must be integers");
    const long long x = e.get<long long>();
    if (x < 0 || x > std::numeric_limits<std::uint32_t>::max())
      throw JsonError(std::string(what) + " entry out of range");
    out.push_back(static_cast<std::uint32_t>(x));
  }
  return out;
}

Fraction fraction_from_json(const Json& v) {
  if (v.is_number_integer() || v.is_number_unsigned())
    return make_fraction(BigInt(v.get<long long>()), 1);
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    try {
      const Fraction f = frac_from_string(s);
      if (f.den == 0) throw JsonError("fraction '" + s + "' has zero denominator");
      return f;
    } catch (const JsonError&) {
      throw;
    } catch (const std::exception&) {
      throw JsonError("fraction '" + s + "' is not an integer or \"p/q\"");
    }
  }
  if (v.is_number_float())
    throw JsonError("floating-point values are not accepted; use integers or \"p/q\" strings");
  throw JsonError("fraction values must be integers or \"p/q\" strings");
}

std::string csv_note(const BoundReport& r) {
  std::vector<std::string> parts;
  for (const char* key : {"form", "variant", "tighter"}) {
    if (r.details.contains(key) && r.details.at(key).is_string())
      parts.push_back(std::string(key) + "=" + r.details.at(key).get<std::string>());
  }
  for (const char* key : {"m", "l", "tau", "lambda", "mask"}) {
    if (r.details.contains(key) && r.details.at(key).is_number())
      parts.push_back(std::string(key) + "=" + r.details.at(key).dump());
  }
  if (r.details.contains("realized_ratio"))
    parts.push_back("realized_ratio=" + r.details.at("realized_ratio").get<std::string>());
  if (r.details.contains("bound_constant"))
    parts.push_back("bound_constant=" + r.details.at("bound_constant").get<std::string>());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i)
    out += (i ? ";" : "") + parts[i];
  return out;
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw JsonError(std::string("malformed JSON: ") + e.what());
  }
}

Json parse_json_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return parse_json_text(buf.str());
  }
  std::ifstream in(path);
  if (!in) throw JsonError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

Json field_to_json(const FiniteField& f) {
  Json j = {{"p", f.p()}, {"e", f.e()}};
  if (f.e() > 1) {
    Json mod = Json::array();
    for (auto c : f.modulus()) mod.push_back(c);
    j["modulus"] = mod;
  }
  return j;
}

FieldPtr field_from_json(const Json& j) {
  const long long p = require_int(j, "p");
  const long long e = j.contains("e") ? require_int(j, "e") : 1;
  if (p < 2 || e < 1) throw JsonError("field needs p >= 2 and e >= 1");
  try {
    if (j.contains("modulus")) {
      auto mod = u32_list(j.at("modulus"), "modulus");
      return make_field(static_cast<std::uint32_t>(p), static_cast<int>(e), mod);
    }
    return make_field(static_cast<std::uint32_t>(p), static_cast<int>(e));
  } catch (const std::invalid_argument& ex) {
    throw JsonError(std::string("invalid field: ") + ex.what());
  }
}

Json point_set_to_json(const PointSet& y) {
  Json pts = Json::array();
  for (const auto& pt : y.points()) {
    Json row = Json::array();
    for (auto v : pt) row.push_back(v);
    pts.push_back(row);
  }
  return {{"field", field_to_json(*y.field())}, {"n", y.n()}, {"points", pts}};
}

PointSet point_set_from_json(const Json& j) {
  FieldPtr field = field_from_json(require(j, "field"));
  const int n = static_cast<int>(require_int(j, "n"));
  const Json& pts = require(j, "points");
  if (!pts.is_array()) throw JsonError("points must be an array of points");
  std::vector<Point> points;
  for (const auto& row : pts) points.push_back(u32_list(row, "point"));
  try {
    return PointSet(field, n, std::move(points));
  } catch (const std::invalid_argument& ex) {
    throw JsonError(std::string("invalid point set: ") + ex.what());
  }
}

Json staircase_to_json(const Staircase& s) {
  Json members = Json::array();
  for (const auto& a : s.members) {
    Json row = Json::array();
    for (int v : a) row.push_back(v);
    members.push_back(row);
  }
  return {{"n", s.n}, {"members", members}};
}

Staircase staircase_from_json(const Json& j) {
  const int n = static_cast<int>(require_int(j, "n"));
  const Json& members = require(j, "members");
  if (!members.is_array()) throw JsonError("members must be an array");
  std::vector<Exponent> exps;
  for (const auto& row : members) {
    if (!row.is_array()) throw JsonError("staircase members must be arrays");
    Exponent a;
    for (const auto& e : row) {
      if (!e.is_number_integer() && !e.is_number_unsigned())
        throw JsonError("exponents must be integers");
      a.push_back(e.get<int>());
    }
    exps.push_back(std::move(a));
  }
  try {
    return make_staircase(n, std::move(exps));
  } catch (const std::invalid_argument& ex) {
    throw JsonError(std::string("invalid staircase: ") + ex.what());
  }
}

Json polynomial_to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [exp, coef] : p.terms()) {
    Json e = Json::array();
    for (int v : exp) e.push_back(v);
    terms.push_back({{"exp", e}, {"coef", coef}});
  }
  return terms;
}

Polynomial polynomial_from_json(FieldPtr field, int n, const Json& terms) {
  if (!terms.is_array()) throw JsonError("polynomial must be an array of terms");
  Polynomial p(field, n);
  for (const auto& t : terms) {
    const Json& ej = require(t, "exp");
    if (!ej.is_array()) throw JsonError("term exp must be an array");
    Exponent a;
    for (const auto& e : ej) a.push_back(e.get<int>());
    const long long c = require_int(t, "coef");
    if (c < 0 || !field->is_element(static_cast<std::uint32_t>(c)))
      throw JsonError("term coefficient is not a field element");
    try {
      p.add_term(a, static_cast<std::uint32_t>(c));
    } catch (const std::invalid_argument& ex) {
      throw JsonError(std::string("invalid term: ") + ex.what());
    }
  }
  return p;
}

Json ideal_slice_to_json(const IdealSlice& s) {
  Json basis = Json::array();
  for (const auto& p : s.basis) basis.push_back(polynomial_to_json(p));
  return {{"field", field_to_json(*s.source.field())},
          {"n", s.source.n()},
          {"d", s.d},
          {"m", s.m},
          {"columns", s.columns.size()},
          {"rank", s.rank},
          {"basis", basis}};
}

Json profile_to_json(const HilbertProfile& p) {
  return {{"m", p.m}, {"dmax", p.dmax}, {"values", p.values}};
}

std::string profile_to_csv(const HilbertProfile& p) {
  std::ostringstream out;
  out << "d,value\n";
  for (std::size_t d = 0; d < p.values.size(); ++d) out << d << "," << p.values[d] << "\n";
  return out.str();
}

Json closure_result_to_json(const ClosureResult& c) {
  return {{"input", point_set_to_json(c.input)},
          {"d", c.d},
          {"l", c.l},
          {"m", c.m},
          {"ideal", ideal_slice_to_json(c.slice)},
          {"output", point_set_to_json(c.output)}};
}

Json curve_to_json(const CurveSpec& c) {
  Json comps = Json::array();
  for (const auto& comp : c.components) {
    Json row = Json::array();
    for (auto v : comp) row.push_back(v);
    comps.push_back(row);
  }
  return {{"field", field_to_json(*c.field)},
          {"n", c.n},
          {"degree_bound", c.degree_bound},
          {"components", comps}};
}

CurveSpec curve_from_json(const Json& j) {
  FieldPtr field = field_from_json(require(j, "field"));
  const int n = static_cast<int>(require_int(j, "n"));
  const int db = static_cast<int>(require_int(j, "degree_bound"));
  const Json& comps = require(j, "components");
  if (!comps.is_array() || static_cast<int>(comps.size()) != n)
    throw JsonError("curve needs one component per coordinate");
  std::vector<std::vector<std::uint32_t>> components;
  for (const auto& row : comps) components.push_back(u32_list(row, "component"));
  try {
    return make_curve(field, std::move(components), db);
  } catch (const std::invalid_argument& ex) {
    throw JsonError(std::string("invalid curve: ") + ex.what());
  }
}

Json bundle_to_json(const InstanceBundle& b) {
  Json curves = Json::array();
  for (const auto& c : b.curves) curves.push_back(curve_to_json(c));
  return {{"field", field_to_json(*b.field)},
          {"n", b.n},
          {"tau", b.tau},
          {"seed", b.seed},
          {"curves", curves},
          {"x", point_set_to_json(b.x)},
          {"y", point_set_to_json(b.y)},
          {"witness", b.witness}};
}

InstanceBundle bundle_from_json(const Json& j) {
  InstanceBundle b;
  b.field = field_from_json(require(j, "field"));
  b.n = static_cast<int>(require_int(j, "n"));
  b.tau = static_cast<int>(require_int(j, "tau"));
  b.seed = static_cast<std::uint64_t>(require_int(j, "seed"));
  const Json& curves = require(j, "curves");
  if (!curves.is_array()) throw JsonError("curves must be an array");
  for (const auto& c : curves) b.curves.push_back(curve_from_json(c));
  b.x = point_set_from_json(require(j, "x"));
  b.y = point_set_from_json(require(j, "y"));
  const Json& wit = require(j, "witness");
  if (!wit.is_array()) throw JsonError("witness must be an array of curve indices");
  for (const auto& w : wit) {
    if (!w.is_number_integer() && !w.is_number_unsigned())
      throw JsonError("witness entries must be integers");
    const long long idx = w.get<long long>();
    if (idx < 0) throw JsonError("witness entries must be nonnegative");
    b.witness.push_back(static_cast<std::size_t>(idx));
  }
  if (b.witness.size() != b.x.size())
    throw JsonError("witness table must have one entry per point of x");
  require_same_field(*b.field, *b.x.field(), "bundle");
  require_same_field(*b.field, *b.y.field(), "bundle");
  return b;
}

Json bound_report_to_json(const BoundReport& r) {
  return {{"theorem_id", r.theorem_id},
          {"q", r.q},
          {"n", r.n},
          {"d", r.d},
          {"lhs", big_to_json(r.lhs)},
          {"rhs", big_to_json(r.rhs)},
          {"ratio", frac_to_string(r.ratio())},
          {"holds", r.holds},
          {"advisory", r.advisory},
          {"details", r.details}};
}

BoundReport bound_report_from_json(const Json& j) {
  BoundReport r;
  r.theorem_id = require(j, "theorem_id").get<std::string>();
  r.q = require_int(j, "q");
  r.n = static_cast<int>(require_int(j, "n"));
  r.d = static_cast<int>(require_int(j, "d"));
  r.lhs = big_from_json(require(j, "lhs"), "lhs");
  r.rhs = big_from_json(require(j, "rhs"), "rhs");
  r.holds = require(j, "holds").get<bool>();
  r.advisory = require(j, "advisory").get<bool>();
  if (j.contains("details")) r.details = j.at("details");
  return r;
}

LatticeFunctions lattice_functions_from_json(const Json& j) {
  LatticeFunctions fns;
  const Json& box = require(j, "box");
  if (!box.is_array() || box.empty()) throw JsonError("box must be a nonempty array");
  for (const auto& b : box) {
    if (!b.is_number_integer() && !b.is_number_unsigned())
      throw JsonError("box entries must be integers");
    fns.box.push_back(b.get<int>());
  }
  for (const char* key : {"mu", "f", "g"}) {
    const Json& table = require(j, key);
    if (!table.is_array())
      throw JsonError(std::string("table '") + key + "' must be an array");
    std::vector<Fraction> vals;
    for (const auto& v : table) vals.push_back(fraction_from_json(v));
    if (std::string(key) == "mu")
      fns.mu = std::move(vals);
    else if (std::string(key) == "f")
      fns.f = std::move(vals);
    else
      fns.g = std::move(vals);
  }
  return fns;
}

Json fkg_report_to_json(const FkgReport& r) {
  return {{"mu_log_supermodular", r.mu_log_supermodular},
          {"f_trend", to_string(r.f_trend)},
          {"g_trend", to_string(r.g_trend)},
          {"aligned", r.aligned},
          {"hypotheses_hold", r.hypotheses_hold},
          {"inequality_holds", r.inequality_holds},
          {"sum_mu", frac_to_string(r.sum_mu)},
          {"sum_muf", frac_to_string(r.sum_muf)},
          {"sum_mug", frac_to_string(r.sum_mug)},
          {"sum_mufg", frac_to_string(r.sum_mufg)},
          {"lhs", frac_to_string(r.lhs)},
          {"rhs", frac_to_string(r.rhs)}};
}

Json sweep_result_to_json(const SweepResult& s, bool include_reports) {
  Json j = {{"mode", s.mode == SweepMode::kSizeBound ? "size-bound" : "closure-bound"},
            {"q", s.q},
            {"n", s.n},
            {"dmin", s.dmin},
            {"dmax", s.dmax},
            {"exhaustive", s.exhaustive},
            {"seed", s.seed},
            {"instances", s.instances},
            {"violations", s.violations},
            {"worst", bound_report_to_json(s.worst)}};
  if (include_reports) {
    Json reports = Json::array();
    for (const auto& r : s.reports) reports.push_back(bound_report_to_json(r));
    j["reports"] = reports;
  }
  return j;
}

std::string reports_to_csv(const std::vector<BoundReport>& reports) {
  std::ostringstream out;
  out << "theorem_id,q,n,d,lhs,rhs,ratio,holds,advisory,note\n";
  for (const auto& r : reports) {
    out << r.theorem_id << "," << r.q << "," << r.n << "," << r.d << "," << r.lhs.str()
        << "," << r.rhs.str() << "," << frac_to_string(r.ratio()) << ","
        << (r.holds ? "true" : "false") << "," << (r.advisory ? "true" : "false") << ","
        << csv_note(r) << "\n";
  }
  return out.str();
}

}  // namespace fqc::io
