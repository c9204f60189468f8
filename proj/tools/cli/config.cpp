#include "config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "supratoa/errors.hpp"

namespace supratoa::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad(std::string_view key, std::string_view value, std::string_view why) {
  throw ParseError("config key '" + std::string(key) + "': " + std::string(why) + " (got \"" + std::string(value) +
                   "\")");
}

int parse_int(std::string_view key, std::string_view value) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) bad(key, value, "expected an integer");
  return v;
}

double parse_real(std::string_view key, std::string_view value) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec == std::errc() && ptr == value.data() + value.size()) return v;
  // exact forms such as "1/3" are accepted too
  try {
    return Rational::parse(value).to_double();
  } catch (const ParseError&) {
    bad(key, value, "expected a real number");
  }
}

Rational parse_rational(std::string_view key, std::string_view value) {
  try {
    return Rational::parse(value);
  } catch (const ParseError& e) {
    bad(key, value, e.what());
  }
}

double parse_positive(std::string_view key, std::string_view value) {
  const double v = parse_real(key, value);
  if (!(v > 0.0)) bad(key, value, "must be positive");
  return v;
}

Potential parse_potential(std::string_view key, std::string_view value) {
  if (value == "free") return Potential::free();
  if (value.empty()) bad(key, value, "empty potential; write \"free\" for V = 0");
  QPoly poly;
  std::size_t pos = 0;
  while (pos <= value.size()) {
    const auto comma = value.find(',', pos);
    const auto item = trim(value.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) bad(key, value, "terms must look like degree:coefficient");
    const int deg = parse_int(key, trim(item.substr(0, colon)));
    if (deg < 0) bad(key, value, "negative degree");
    poly += QPoly::monomial(deg, parse_rational(key, trim(item.substr(colon + 1))));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Potential(poly);
}

BumpSpec parse_bump(std::string_view key, std::string_view value) {
  const auto comma = value.find(',');
  if (comma == std::string_view::npos) bad(key, value, "expected \"center, halfwidth\"");
  BumpSpec b{parse_real(key, trim(value.substr(0, comma))), parse_real(key, trim(value.substr(comma + 1)))};
  if (!(b.halfwidth > 0.0)) bad(key, value, "halfwidth must be positive");
  return b;
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw ParseError("format must be json or csv (got \"" + std::string(text) + "\")");
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  bool have_potential = false;
  std::set<std::string, std::less<>> seen;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (!seen.emplace(key).second) bad(key, value, "key given twice");

    if (key == "potential") {
      cfg.potential = parse_potential(key, value);
      have_potential = true;
    } else if (key == "mu") {
      cfg.mu = parse_rational(key, value);
      if (cfg.mu.sign() <= 0) bad(key, value, "must be positive");
    } else if (key == "hbar") {
      cfg.hbar = parse_rational(key, value);
      if (cfg.hbar.sign() <= 0) bad(key, value, "must be positive");
    } else if (key == "x") {
      cfg.x = parse_rational(key, value);
    } else if (key == "jmax") {
      cfg.jmax = parse_int(key, value);
      if (cfg.jmax < 0) bad(key, value, "must be >= 0");
    } else if (key == "kmax") {
      cfg.kmax = parse_int(key, value);
      if (*cfg.kmax < 0) bad(key, value, "must be >= 0");
    } else if (key == "mmax") {
      cfg.mmax = parse_int(key, value);
      if (*cfg.mmax < 1) bad(key, value, "must be >= 1");
    } else if (key == "quad_abs_tol") {
      cfg.quad_abs_tol = parse_positive(key, value);
    } else if (key == "series_tol") {
      cfg.series_tol = parse_positive(key, value);
    } else if (key == "format") {
      try {
        cfg.format = parse_format(value);
      } catch (const ParseError&) {
        bad(key, value, "must be json or csv");
      }
    } else if (key == "out") {
      cfg.out = std::string(value);
    } else if (key == "commutator_threshold") {
      cfg.commutator_threshold = parse_positive(key, value);
    } else if (key == "bump_phi") {
      cfg.bump_phi = parse_bump(key, value);
    } else if (key == "bump_psi") {
      cfg.bump_psi = parse_bump(key, value);
    } else if (key == "grid_n") {
      cfg.grid_n = parse_int(key, value);
      if (cfg.grid_n < 1) bad(key, value, "must be >= 1");
    } else if (key == "grid_lo") {
      cfg.grid_lo = parse_real(key, value);
    } else if (key == "grid_hi") {
      cfg.grid_hi = parse_real(key, value);
    } else if (key == "grid_kind") {
      if (value != "kernel" && value != "toa" && value != "apply") bad(key, value, "must be kernel, toa or apply");
      cfg.grid_kind = std::string(value);
    } else if (key == "q") {
      cfg.q = parse_real(key, value);
    } else if (key == "p") {
      cfg.p = parse_real(key, value);
      if (cfg.p == 0.0) bad(key, value, "momentum must be nonzero");
    } else {
      bad(key, value, "unknown key");
    }
  }
  if (!have_potential) throw ParseError("config key 'potential': missing (write \"potential = free\" for V = 0)");
  if (cfg.mmax && *cfg.mmax < 2 * cfg.jmax + 1) {
    throw ParseError("config key 'mmax': must be >= 2*jmax + 1");
  }
  if (!(cfg.grid_lo < cfg.grid_hi)) throw ParseError("config key 'grid_hi': must exceed grid_lo");
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string seed_config(std::string_view command) {
  std::ostringstream s;
  s << "# supratoa " << command << " configuration\n"
    << "# Exact values are written as integers, num/den or exact decimals.\n\n"
    << "# V(q) = sum of degree:coefficient terms, or \"free\" for V = 0\n"
    << "potential = 2:1/2\n"
    << "mu = 1\n"
    << "hbar = 1\n"
    << "# arrival point\n"
    << "x = 0\n\n"
    << "# truncation: v-power 2*jmax, p-power 2*kmax+1 (kmax defaults to jmax)\n"
    << "jmax = 8\n"
    << "kmax = 8\n"
    << "# mmax = 17\n\n"
    << "quad_abs_tol = 1e-10\n"
    << "series_tol = 1e-16\n\n"
    << "# output: json or csv; empty out means standard output\n"
    << "format = json\n"
    << "# out = result.json\n\n"
    << "# commutator: bumps are \"center, halfwidth\"\n"
    << "commutator_threshold = 1e-6\n"
    << "bump_phi = 0, 0.5\n"
    << "bump_psi = 0.1, 0.5\n\n"
    << "# grid: kind is kernel (q,qp,re,im), toa (q,local_toa,tail_bound) or apply (q,re,im)\n"
    << "grid_kind = kernel\n"
    << "grid_n = 50\n"
    << "grid_lo = -1\n"
    << "grid_hi = 1\n\n"
    << "# phase point for toa (p is also the momentum of toa grids)\n"
    << "q = 0.2\n"
    << "p = 1\n";
  return s.str();
}

}  // namespace supratoa::cli
