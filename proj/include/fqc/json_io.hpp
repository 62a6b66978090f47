#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fqc/bounds.hpp"
#include "fqc/closure.hpp"
#include "fqc/generators.hpp"
#include "fqc/staircase.hpp"
#include "fqc/vanishing_ideal.hpp"

namespace fqc::io {

using Json = nlohmann::json;

/// Malformed or semantically invalid input document.
struct JsonError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses a file (or stdin for path "-"); throws JsonError on syntax errors.
Json parse_json_file(const std::string& path);
Json parse_json_text(const std::string& text);

// Field: {"p": 2, "e": 2} or {"p": 2, "e": 2, "modulus": [1, 1, 1]}
// (modulus coefficients little-endian, leading coefficient included).
Json field_to_json(const FiniteField& f);
FieldPtr field_from_json(const Json& j);

// Point set: {"field": ..., "n": 2, "points": [[0, 0], [1, 1]]}.
Json point_set_to_json(const PointSet& y);
PointSet point_set_from_json(const Json& j);

// Staircase: {"n": 2, "members": [[0, 0], [0, 1]]}.
Json staircase_to_json(const Staircase& s);
Staircase staircase_from_json(const Json& j);

// Polynomial terms: [{"exp": [1, 0], "coef": 1}, ...], grlex ascending.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(FieldPtr field, int n, const Json& terms);

Json ideal_slice_to_json(const IdealSlice& s);

Json profile_to_json(const HilbertProfile& p);
std::string profile_to_csv(const HilbertProfile& p);

Json closure_result_to_json(const ClosureResult& c);

// Curve: {"field": ..., "n": 2, "degree_bound": 1,
//         "components": [[b1, d1], [b2, d2]]} (coefficients little-endian).
Json curve_to_json(const CurveSpec& c);
CurveSpec curve_from_json(const Json& j);

// Bundle: curves, x, y, tau, seed, and witness (curve index per point of X,
// aligned with the sorted point order of x).
Json bundle_to_json(const InstanceBundle& b);
InstanceBundle bundle_from_json(const Json& j);

// Bound reports round-trip losslessly: lhs/rhs as JSON numbers when they fit
// in 64 bits, decimal strings otherwise.
Json bound_report_to_json(const BoundReport& r);
BoundReport bound_report_from_json(const Json& j);

// Lattice tables for the correlation check; values are integers or "p/q"
// strings, never floats.
LatticeFunctions lattice_functions_from_json(const Json& j);
Json fkg_report_to_json(const FkgReport& r);

Json sweep_result_to_json(const SweepResult& s, bool include_reports = true);

/// CSV with header theorem_id,q,n,d,lhs,rhs,ratio,holds,advisory,note.
std::string reports_to_csv(const std::vector<BoundReport>& reports);

}  // namespace fqc::io
