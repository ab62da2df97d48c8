#ifndef CLIFFSYM_IO_HPP
#define CLIFFSYM_IO_HPP

#include <string>

#include "json.hpp"

#include "cliffsym/lie_sets.hpp"
#include "cliffsym/multivector.hpp"
#include "cliffsym/verify.hpp"

namespace cliffsym {

using Json = nlohmann::json;

/// Shortest decimal form that round-trips the exact double.
std::string format_real(double x);

/// "(re,im)" for nonreal values, bare real form otherwise.
std::string format_complex(Complex z);

/// Algebraic text form, parseable by parse_expression. Terms appear in
/// ascending blade-mask order; the zero element prints as "0".
std::string print_multivector(const Multivector& u);

/// One bracketed row per line, entries formatted with format_complex.
std::string print_matrix(const Eigen::MatrixXcd& m);

/// One-line pass/fail summary per check plus an overall verdict. Includes
/// wall-clock timings, so it is not byte-stable; use to_json for that.
std::string report_text(const VerificationReport& report);

/// Multivectors serialize as {"p", "q", "<blade key>": [re, im], ...} with
/// zero coefficients omitted; matrices as {"dim", "entries": row-major
/// [re, im] pairs}. Reports use nested objects in the same style. All
/// emitted JSON is key-sorted and deterministic for fixed inputs.
Json to_json(const Multivector& u);
Json to_json(const Eigen::MatrixXcd& m);
Json to_json(const MembershipReport& report);
Json to_json(const VerificationReport& report);

Multivector multivector_from_json(const Json& j);
Eigen::MatrixXcd matrix_from_json(const Json& j);

} // namespace cliffsym

#endif
