#include "commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "supratoa/classical_toa.hpp"
#include "supratoa/errors.hpp"
#include "supratoa/kernel_operator.hpp"
#include "supratoa/kernel_solver.hpp"
#include "supratoa/serialization.hpp"
#include "supratoa/transforms.hpp"

namespace supratoa::cli {

using nlohmann::json;

namespace {

// Sends the payload to cfg.out when set, else to `out`.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& payload) {
  if (cfg.out.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw ParseError("cannot open output file '" + cfg.out + "'");
  file << payload;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  [[nodiscard]] std::string render(Format f) const {
    std::ostringstream s;
    if (f == Format::Csv) {
      for (std::size_t i = 0; i < header.size(); ++i) s << (i ? "," : "") << header[i];
      s << '\n';
      for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) s << (i ? "," : "") << format_double(r[i]);
        s << '\n';
      }
      return s.str();
    }
    json arr = json::array();
    for (const auto& r : rows) {
      json o = json::object();
      for (std::size_t i = 0; i < r.size(); ++i) o[header[i]] = std::isfinite(r[i]) ? json(r[i]) : json(nullptr);
      arr.push_back(o);
    }
    return dump(arr);
  }
};

// Origin-based problem equivalent to arrival at cfg.x.
Potential shifted_potential(const RunConfig& cfg) { return shift_arrival(cfg.potential, cfg.x); }

GradedKernel solve(const RunConfig& cfg, int jmax) {
  return solve_kernel_general({shifted_potential(cfg), cfg.mu, jmax, cfg.mmax});
}

// Kernel in the original coordinates: T(q, q') = T~(q - x, q' - x).
EvaluableKernel relabelled(const EvaluableKernel& k, double x) {
  if (x == 0.0) return k;
  auto inner = k.factor;
  return {[inner, x](double q, double qp) { return inner(q - x, qp - x); }, k.mu, k.hbar};
}

json params_of(const RunConfig& cfg) {
  return {{"potential", poly_to_json(cfg.potential.poly())},
          {"mu", cfg.mu.str()},
          {"hbar", cfg.hbar.str()},
          {"x", cfg.x.str()},
          {"jmax", cfg.jmax},
          {"quad_abs_tol", cfg.quad_abs_tol}};
}

}  // namespace

int cmd_kernel(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const GradedKernel k = solve(cfg, cfg.jmax);
  const BoundaryReport bc = boundary_check(k);
  const PdeResidual pde = pde_residual(k, k.potential());
  // Everything below the first order that would need j = jmax + 1 must cancel.
  const bool pde_ok = pde.exact() || (pde.lowest_v_degree && *pde.lowest_v_degree >= 2 * cfg.jmax + 1 &&
                                      pde.lowest_total_degree && *pde.lowest_total_degree >= 2 * cfg.jmax + 2);
  if (!bc.passed() || !pde_ok) {
    json diag = {{"boundary_check", {{"passed", bc.passed()}, {"failures", bc.failures}}},
                 {"pde_residual",
                  {{"passed", pde_ok},
                   {"lowest_v_degree", pde.lowest_v_degree ? json(*pde.lowest_v_degree) : json(nullptr)},
                   {"lowest_total_degree", pde.lowest_total_degree ? json(*pde.lowest_total_degree) : json(nullptr)},
                   {"required_min_v_degree", 2 * cfg.jmax + 1}}}};
    err << dump({{"diagnostics", diag}});
    return kVerificationFailure;
  }
  if (cfg.format == Format::Csv) {
    std::ostringstream s;
    s << "m,j,s,coeff\n";
    for (const auto& [idx, a] : k.entries()) s << idx.m << ',' << idx.j << ',' << idx.s << ',' << a.str() << '\n';
    emit(cfg, out, s.str());
  } else {
    json j = kernel_to_json(k);
    if (!cfg.x.is_zero()) j["arrival_point"] = cfg.x.str();
    emit(cfg, out, dump(j));
  }
  return kSuccess;
}

int cmd_classical_limit(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const int kmax = cfg.effective_kmax();
  const MomentumSeries t = wigner_transform(solve(cfg, kmax));
  // Back to the original coordinate: P~(q~) with q~ = q - x.
  const MomentumSeries classical = classical_limit(t).shifted(-cfg.x);
  const MomentumSeries residual = hbar2_residual(t).shifted(-cfg.x);
  const MomentumSeries toa = local_toa(cfg.potential, cfg.mu, cfg.x, kmax);

  bool all_match = true;
  json terms = json::array();
  std::ostringstream csv;
  csv << "k,wigner,local_toa,match\n";
  for (int k = 0; k <= kmax; ++k) {
    const QPoly w = classical.term(k, 0);
    const QPoly l = toa.term(k, 0);
    const bool match = w == l;
    all_match = all_match && match;
    terms.push_back({{"k", k}, {"wigner", poly_to_json(w)}, {"local_toa", poly_to_json(l)}, {"match", match}});
    csv << k << ',' << csv_escape(w.str()) << ',' << csv_escape(l.str()) << ',' << (match ? "true" : "false") << '\n';
  }
  const MomentumSeries s1 = residual.grade_slice(1);
  if (cfg.format == Format::Csv) {
    emit(cfg, out, csv.str());
  } else {
    emit(cfg, out,
         dump({{"params", params_of(cfg)},
               {"terms", terms},
               {"all_match", all_match},
               {"hbar2_residual", series_to_json(s1)},
               {"residual_empty", s1.empty()}}));
  }
  if (!all_match) {
    err << "classical limit differs from the local time of arrival\n";
    return kVerificationFailure;
  }
  return kSuccess;
}

int cmd_commutator(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const double hbar = cfg.hbar.to_double();
  const double x = cfg.x.to_double();
  const Potential vt = shifted_potential(cfg);
  const EvaluableKernel k = series_kernel(solve(cfg, cfg.jmax), hbar);
  QuadSpec quad;
  quad.abs_tol = cfg.quad_abs_tol;
  // Work in the shifted coordinate; the residual is invariant under the relabeling.
  const BumpProfile phi(cfg.bump_phi.center - x, cfg.bump_phi.halfwidth);
  const BumpProfile psi(cfg.bump_psi.center - x, cfg.bump_psi.halfwidth);
  const CommutatorReport rep = commutator_residual(vt, k, phi, psi, quad);

  json params = params_of(cfg);
  params["bump_phi"] = {cfg.bump_phi.center, cfg.bump_phi.halfwidth};
  params["bump_psi"] = {cfg.bump_psi.center, cfg.bump_psi.halfwidth};
  params["threshold"] = cfg.commutator_threshold;
  if (cfg.format == Format::Csv) {
    emit(cfg, out, "residual,error_budget\n" + format_double(rep.residual) + "," + format_double(rep.error_budget) + "\n");
  } else {
    emit(cfg, out, dump(residual_to_json(rep, params)));
  }
  if (!(rep.residual < cfg.commutator_threshold)) {
    err << "commutator residual " << rep.residual << " is not below threshold " << cfg.commutator_threshold << "\n";
    return kVerificationFailure;
  }
  return kSuccess;
}

int cmd_weyl_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Potential vt = shifted_potential(cfg);
  const GradedKernel weyl = weyl_quantize(local_toa(vt, cfg.mu, 0, cfg.jmax), cfg.mu, vt);
  const GradedKernel classical = classical_kernel(vt, cfg.mu, cfg.jmax);
  const GradedKernel full = solve(cfg, cfg.jmax);
  const GradedKernel diff = full - weyl;
  const bool weyl_ok = weyl.same_coefficients(classical);
  const bool linear = cfg.potential.is_linear();
  int max_grade = 0;
  for (const auto& [idx, _] : diff.entries()) max_grade = std::max(max_grade, idx.s);
  const std::string note = diff.empty() ? "none: Weyl kernel equals the supraquantized kernel"
                                        : "obstruction: s>=1 terms present";
  // Linear systems must agree completely; nonlinear ones must show the obstruction.
  const bool shape_ok = linear ? diff.empty() : !diff.empty();

  if (cfg.format == Format::Csv) {
    std::ostringstream s;
    s << "m,j,s,full_minus_weyl\n";
    for (const auto& [idx, a] : diff.entries()) s << idx.m << ',' << idx.j << ',' << idx.s << ',' << a.str() << '\n';
    emit(cfg, out, s.str());
  } else {
    json d = kernel_to_json(diff)["entries"];
    emit(cfg, out,
         dump({{"params", params_of(cfg)},
               {"weyl_equals_classical_term", weyl_ok},
               {"linear", linear},
               {"full_minus_weyl", d},
               {"full_minus_weyl_entries", diff.size()},
               {"full_minus_weyl_max_grade", max_grade},
               {"note", note}}));
  }
  err << note << "\n";
  if (!weyl_ok) {
    err << "Weyl kernel differs from the classical term\n";
    return kVerificationFailure;
  }
  if (!shape_ok) {
    err << (linear ? "linear potential but the full kernel differs from the Weyl kernel\n"
                   : "nonlinear potential but no obstruction found\n");
    return kVerificationFailure;
  }
  return kSuccess;
}

int cmd_grid(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  const double hbar = cfg.hbar.to_double();
  const double x = cfg.x.to_double();
  const int n = cfg.grid_n;
  auto node = [&](int i) {
    return n == 1 ? cfg.grid_lo : cfg.grid_lo + (cfg.grid_hi - cfg.grid_lo) * i / static_cast<double>(n - 1);
  };
  Table table;
  if (cfg.grid_kind == "kernel") {
    const EvaluableKernel k = relabelled(series_kernel(solve(cfg, cfg.jmax), hbar), x);
    table.header = {"q", "qp", "re", "im"};
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const auto val = k(node(i), node(j));
        table.rows.push_back({node(i), node(j), val.real(), val.imag()});
      }
    }
  } else if (cfg.grid_kind == "toa") {
    const MomentumSeries toa = local_toa(shifted_potential(cfg), cfg.mu, 0, cfg.effective_kmax());
    const double mu = cfg.mu.to_double();
    table.header = {"q", "local_toa", "tail_bound"};
    for (int i = 0; i < n; ++i) {
      const double q = node(i);
      table.rows.push_back({q, toa.eval(q - x, cfg.p), toa_tail_bound(cfg.potential, mu, q, x, cfg.p, cfg.effective_kmax())});
    }
  } else {
    const EvaluableKernel k = relabelled(series_kernel(solve(cfg, cfg.jmax), hbar), x);
    QuadSpec quad;
    quad.abs_tol = cfg.quad_abs_tol;
    std::vector<double> qs;
    for (int i = 0; i < n; ++i) qs.push_back(node(i));
    const auto vals = apply_kernel(k, BumpProfile(cfg.bump_phi.center, cfg.bump_phi.halfwidth), qs, quad);
    table.header = {"q", "re", "im"};
    for (int i = 0; i < n; ++i) table.rows.push_back({qs[i], vals[i].real(), vals[i].imag()});
  }
  emit(cfg, out, table.render(cfg.format));
  return kSuccess;
}

int cmd_toa(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const int kmax = cfg.effective_kmax();
  const double mu = cfg.mu.to_double();
  const double x = cfg.x.to_double();
  // Evaluated about the arrival point; the expansion about the origin loses digits near q = x.
  const MomentumSeries toa = local_toa(shifted_potential(cfg), cfg.mu, 0, kmax);
  const double series = toa.eval(cfg.q - x, cfg.p);
  const ConvergenceMargin margin = convergence_margin(cfg.potential, mu, cfg.q, x, cfg.p);
  const double tail = toa_tail_bound(cfg.potential, mu, cfg.q, x, cfg.p, kmax);

  json report = {{"params", params_of(cfg)},
                 {"q", cfg.q},
                 {"p", cfg.p},
                 {"kmax", kmax},
                 {"local_toa", series},
                 {"convergence_ratio", margin.ratio},
                 {"converges", margin.converges},
                 {"tail_bound", std::isfinite(tail) ? json(tail) : json(nullptr)}};
  bool consistent = true;
  try {
    const auto quad = toa_quadrature(cfg.potential, {cfg.q, cfg.p, x, mu}, cfg.quad_abs_tol);
    report["quadrature"] = quad.value;
    report["quadrature_error"] = quad.error_estimate;
    if (std::isfinite(tail)) {
      const double gap = std::abs(series - quad.value);
      consistent = gap <= tail + quad.error_estimate + 1e-12 * std::max(1.0, std::abs(quad.value));
      report["series_minus_quadrature"] = gap;
    }
  } catch (const NotAccessible& e) {
    report["quadrature"] = nullptr;
    report["note"] = e.what();
  }
  report["consistent"] = consistent;
  if (cfg.format == Format::Csv) {
    std::ostringstream s;
    s << "q,p,local_toa,tail_bound,quadrature\n"
      << format_double(cfg.q) << ',' << format_double(cfg.p) << ',' << format_double(series) << ','
      << format_double(tail) << ','
      << (report["quadrature"].is_null() ? std::string("nan") : format_double(report["quadrature"].get<double>()))
      << '\n';
    emit(cfg, out, s.str());
  } else {
    emit(cfg, out, dump(report));
  }
  if (!consistent) {
    err << "local time of arrival and quadrature disagree beyond the tail bound\n";
    return kVerificationFailure;
  }
  return kSuccess;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  static const std::map<std::string, std::function<int(const RunConfig&, std::ostream&, std::ostream&)>> commands = {
      {"kernel", cmd_kernel},       {"classical-limit", cmd_classical_limit}, {"commutator", cmd_commutator},
      {"weyl-compare", cmd_weyl_compare}, {"grid", cmd_grid},              {"toa", cmd_toa}};

  CLI::App app{"Time-of-arrival kernels by supraquantization", "supratoa"};
  std::string command;
  std::string config_path;
  std::string out_path;
  std::string format;
  bool seed = false;
  app.add_option("command", command, "kernel | classical-limit | commutator | weyl-compare | grid | toa")
      ->required()
      ->check(CLI::IsMember({"kernel", "classical-limit", "commutator", "weyl-compare", "grid", "toa"}));
  app.add_option("--config", config_path, "Run configuration file");
  app.add_option("--out", out_path, "Write the result here instead of standard output");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--seed-config", seed, "Print a complete sample configuration and exit");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "supratoa: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  try {
    if (seed) {
      RunConfig cfg;
      cfg.out = out_path;
      emit(cfg, out, seed_config(command));
      return kSuccess;
    }
    if (config_path.empty()) {
      err << "supratoa: --config FILE is required\n";
      return kUsageError;
    }
    RunConfig cfg = load_config(config_path);
    if (!out_path.empty()) cfg.out = out_path;
    if (!format.empty()) cfg.format = parse_format(format);
    return commands.at(command)(cfg, out, err);
  } catch (const ParseError& e) {
    err << "supratoa: " << e.what() << "\n";
    return kUsageError;
  } catch (const ZeroMomentum& e) {
    err << "supratoa: " << e.what() << "\n";
    return kUsageError;
  } catch (const ZeroOverlap& e) {
    err << "supratoa: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "supratoa: " << command << " failed: " << e.what() << "\n";
    return kVerificationFailure;
  }
}

}  // namespace supratoa::cli
