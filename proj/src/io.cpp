#include "cliffsym/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace cliffsym {

namespace {

std::uint32_t parse_blade_key(const std::string& key, const Signature& sig) {
  std::uint32_t mask = 0;
  int prev = -1;
  for (char c : key) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("blade key '" + key + "' has a non-digit");
    const int label = c - '0';
    if (label <= prev)
      throw std::invalid_argument("blade key '" + key +
                                  "' digits must strictly increase");
    if (label >= sig.n())
      throw std::out_of_range("blade key '" + key + "' exceeds " + sig.str());
    mask |= 1u << label;
    prev = label;
  }
  return mask;
}

Complex complex_from_pair(const Json& value, const std::string& where) {
  if (!value.is_array() || value.size() != 2)
    throw std::invalid_argument(where + ": expected an [re, im] pair");
  return {value.at(0).get<double>(), value.at(1).get<double>()};
}

} // namespace

std::string format_real(double x) {
  if (x == 0.0) x = 0.0; // canonicalize -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string format_complex(Complex z) {
  if (z.imag() == 0.0) return format_real(z.real());
  return "(" + format_real(z.real()) + "," + format_real(z.imag()) + ")";
}

std::string print_multivector(const Multivector& u) {
  std::string out;
  for (std::uint32_t mask = 0; mask < static_cast<std::uint32_t>(u.dim());
       ++mask) {
    const Complex z = u.coeff(Blade{mask});
    if (z == 0.0) continue;
    const std::string blade = blade_name(Blade{mask});
    if (z.imag() != 0.0) {
      if (!out.empty()) out += " + ";
      out += "(" + format_real(z.real()) + "," + format_real(z.imag()) + ")*" +
             blade;
      continue;
    }
    double re = z.real();
    if (out.empty()) {
      if (re == 1.0)
        out += blade;
      else if (re > 0.0)
        out += format_real(re) + "*" + blade;
      else
        out += "(" + format_real(re) + ",0)*" + blade;
      continue;
    }
    out += re < 0.0 ? " - " : " + ";
    re = std::abs(re);
    out += re == 1.0 ? blade : format_real(re) + "*" + blade;
  }
  return out.empty() ? "0" : out;
}

std::string print_matrix(const Eigen::MatrixXcd& m) {
  std::string out;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    out += "[";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out += "  ";
      out += format_complex(m(r, c));
    }
    out += "]\n";
  }
  return out;
}

std::string report_text(const VerificationReport& report) {
  std::string out = "theorem suite: seed " + std::to_string(report.seed) +
                    ", tolerance " + format_real(report.tolerance) +
                    ", trials " + std::to_string(report.trials) + "\n";
  char line[256];
  int index = 0;
  int passed = 0;
  for (const CheckResult& c : report.checks) {
    ++index;
    passed += c.passed ? 1 : 0;
    std::snprintf(line, sizeof line,
                  "%2d/%2d %s %-28s residual %-12g (%s, %d cases, %.3fs)\n",
                  index, static_cast<int>(report.checks.size()),
                  c.passed ? "PASS" : "FAIL", c.spec.name.c_str(),
                  c.max_residual,
                  c.spec.exhaustive ? "exhaustive" : "randomized",
                  c.trials_run, c.elapsed_seconds);
    out += line;
  }
  out += "overall: ";
  out += report.all_passed() ? "PASS" : "FAIL";
  out += " (" + std::to_string(passed) + "/" +
         std::to_string(report.checks.size()) + " checks)\n";
  return out;
}

Json to_json(const Multivector& u) {
  Json j;
  j["p"] = u.sig().p();
  j["q"] = u.sig().q();
  for (std::uint32_t mask = 0; mask < static_cast<std::uint32_t>(u.dim());
       ++mask) {
    const Complex z = u.coeff(Blade{mask});
    if (z == 0.0) continue;
    j[blade_key(Blade{mask})] = Json::array({z.real(), z.imag()});
  }
  return j;
}

Json to_json(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("to_json: matrix must be square");
  Json entries = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      entries.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
  return Json{{"dim", m.rows()}, {"entries", std::move(entries)}};
}

Json to_json(const MembershipReport& report) {
  Json residuals = Json::object();
  for (const auto& [name, value] : report.residuals) residuals[name] = value;
  return Json{{"member", report.member},
              {"residuals", std::move(residuals)},
              {"tolerance", report.tolerance}};
}

Json to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const CheckResult& c : report.checks) {
    Json entry{{"name", c.spec.name},
               {"statement", c.spec.statement},
               {"kind", c.spec.exhaustive ? "exhaustive" : "randomized"},
               {"trials", c.trials_run},
               {"tolerance", c.spec.tolerance},
               {"max_residual", c.max_residual},
               {"passed", c.passed}};
    if (!c.spec.exhaustive) entry["seed"] = c.spec.seed;
    checks.push_back(std::move(entry));
  }
  return Json{{"seed", report.seed},
              {"tolerance", report.tolerance},
              {"trials", report.trials},
              {"overall", report.all_passed()},
              {"checks", std::move(checks)}};
}

Multivector multivector_from_json(const Json& j) {
  if (!j.is_object())
    throw std::invalid_argument("multivector_from_json: expected an object");
  const Signature sig(j.at("p").get<int>(), j.at("q").get<int>());
  Eigen::VectorXcd coeffs = Eigen::VectorXcd::Zero(sig.blade_count());
  for (const auto& [key, value] : j.items()) {
    if (key == "p" || key == "q") continue;
    coeffs(parse_blade_key(key, sig)) =
        complex_from_pair(value, "blade '" + key + "'");
  }
  return Multivector(sig, std::move(coeffs));
}

Eigen::MatrixXcd matrix_from_json(const Json& j) {
  if (!j.is_object())
    throw std::invalid_argument("matrix_from_json: expected an object");
  const auto dim = j.at("dim").get<Eigen::Index>();
  if (dim < 1) throw std::invalid_argument("matrix_from_json: dim must be >= 1");
  const Json& entries = j.at("entries");
  if (!entries.is_array() ||
      entries.size() != static_cast<std::size_t>(dim * dim))
    throw std::invalid_argument("matrix_from_json: expected dim*dim entries");
  Eigen::MatrixXcd m(dim, dim);
  std::size_t k = 0;
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c, ++k)
      m(r, c) = complex_from_pair(entries.at(k), "entry " + std::to_string(k));
  return m;
}

} // namespace cliffsym
