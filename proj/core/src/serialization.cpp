#include "supratoa/serialization.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>
#include <string>

#include "supratoa/errors.hpp"

namespace supratoa {

using nlohmann::json;

namespace {

Rational rational_from(const json& j, const char* what) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError(std::string(what) + ": expected a \"num/den\" string");
}

int int_from(const json& j, const char* what) {
  if (j.is_number_integer()) return j.get<int>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size()) return v;
  }
  throw ParseError(std::string(what) + ": expected an integer");
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

}  // namespace

json poly_to_json(const QPoly& p) {
  json arr = json::array();
  for (const auto& [deg, c] : p.terms()) arr.push_back(json::array({deg, c.str()}));
  return arr;
}

QPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial: expected an array of [degree, coefficient] pairs");
  QPoly p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw ParseError("polynomial: each term must be [degree, coefficient]");
    const int deg = int_from(term[0], "polynomial degree");
    if (deg < 0) throw ParseError("polynomial: negative degree");
    p += QPoly::monomial(deg, rational_from(term[1], "polynomial coefficient"));
  }
  return p;
}

json kernel_to_json(const GradedKernel& k) {
  json entries = json::array();
  for (const auto& [idx, a] : k.entries()) {
    entries.push_back({{"m", idx.m}, {"j", idx.j}, {"s", idx.s}, {"coeff", a.str()}});
  }
  return {{"potential", poly_to_json(k.potential().poly())},
          {"mu", k.mu().str()},
          {"jmax", k.jmax()},
          {"mmax", k.mmax()},
          {"entries", entries}};
}

GradedKernel kernel_from_json(const json& j) {
  const Potential v(poly_from_json(field(j, "potential")));
  const Rational mu = rational_from(field(j, "mu"), "mu");
  const int jmax = int_from(field(j, "jmax"), "jmax");
  const json& entries = field(j, "entries");
  if (!entries.is_array()) throw ParseError("entries: expected an array");
  int mmax = 1;
  if (j.contains("mmax")) {
    mmax = int_from(j.at("mmax"), "mmax");
  } else {
    for (const auto& e : entries) mmax = std::max(mmax, int_from(field(e, "m"), "m"));
  }
  GradedKernel k(v, mu, jmax, mmax);
  for (const auto& e : entries) {
    const GradedKernel::Index idx{int_from(field(e, "m"), "m"), int_from(field(e, "j"), "j"),
                                  int_from(field(e, "s"), "s")};
    if (!GradedKernel::valid_index(idx)) {
      throw ParseError("entry (m=" + std::to_string(idx.m) + ", j=" + std::to_string(idx.j) +
                       ", s=" + std::to_string(idx.s) + ") is outside the kernel index range");
    }
    k.add(idx.m, idx.j, idx.s, rational_from(field(e, "coeff"), "coeff"));
  }
  return k;
}

json series_to_json(const MomentumSeries& t) {
  json arr = json::array();
  for (const auto& [idx, poly] : t.terms()) arr.push_back({{"k", idx.k}, {"s", idx.s}, {"poly", poly_to_json(poly)}});
  return arr;
}

MomentumSeries series_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("series: expected an array of terms");
  MomentumSeries t;
  for (const auto& e : j) {
    const int k = int_from(field(e, "k"), "k");
    const int s = int_from(field(e, "s"), "s");
    if (k < 0 || s < 0) throw ParseError("series: negative k or s");
    t.add(k, s, poly_from_json(field(e, "poly")));
  }
  return t;
}

json residual_to_json(const CommutatorReport& rep, const json& params) {
  return {{"residual", rep.residual}, {"error_budget", rep.error_budget}, {"params", params}};
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw std::runtime_error("cannot format double");
  return {buf, ptr};
}

void write_sampled_csv(std::ostream& os, const std::vector<double>& q, const std::vector<std::complex<double>>& values) {
  if (q.size() != values.size()) throw std::invalid_argument("grid and sample sizes differ");
  os << "q,re,im\n";
  for (std::size_t i = 0; i < q.size(); ++i) {
    os << format_double(q[i]) << ',' << format_double(values[i].real()) << ',' << format_double(values[i].imag())
       << '\n';
  }
}

}  // namespace supratoa
