#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rieszwell/acceptance.hpp"
#include "rieszwell/analysis.hpp"
#include "rieszwell/closedform.hpp"
#include "rieszwell/oracle.hpp"
#include "rieszwell/scan.hpp"
#include "rieszwell/specfun.hpp"

namespace rieszwell::cli {

namespace {

bool takes_alpha(const std::string& cmd) {
  return cmd == "eval-i" || cmd == "eval-f" || cmd == "residual" || cmd == "scan-i" ||
         cmd == "branch-demo";
}

QuadratureSettings settings_for(const RunConfig& rc) {
  QuadratureSettings cfg;
  cfg.rel_tol = rc.rel_tol;
  cfg.max_panels = rc.max_panels;
  cfg.validate();
  return cfg;
}

WellConfig well_for(const RunConfig& rc) {
  WellConfig w;
  w.a = rc.a;
  w.validate();
  return w;
}

// Renders the whole record first, then writes it in one go; file output goes
// through a temporary so a failed run never leaves a partial file behind.
void emit(const RunConfig& rc, std::ostream& out, const std::string& text) {
  if (rc.out_path == "-") {
    out << text;
    return;
  }
  const std::filesystem::path target(rc.out_path);
  const std::filesystem::path partial = target.string() + ".partial";
  {
    std::ofstream f(partial, std::ios::binary | std::ios::trunc);
    if (!f) throw DomainError("cannot open output file " + rc.out_path);
    f << text;
    if (!f.flush()) {
      f.close();
      std::filesystem::remove(partial);
      throw DomainError("failed writing " + rc.out_path);
    }
  }
  std::filesystem::rename(partial, target);
}

std::string eval_record(const RunConfig& rc, const EvalResult& r) {
  if (rc.format == "json") return scan::to_json(r).dump() + "\n";
  std::ostringstream os;
  os << "value,err_estimate,method,degraded\n"
     << scan::format_number(r.value) << ',' << scan::format_number(r.err_estimate) << ','
     << to_string(r.method) << ',' << (r.degraded ? 1 : 0) << '\n';
  return os.str();
}

int cmd_eval_i(const RunConfig& rc, std::ostream& out) {
  const auto r = analysis::i_hybrid(FractionalOrder(rc.alpha), well_for(rc), rc.x, settings_for(rc));
  emit(rc, out, eval_record(rc, r));
  return kOk;
}

int cmd_eval_f(const RunConfig& rc, std::ostream& out) {
  settings_for(rc);
  emit(rc, out, eval_record(rc, closedform::f_closed(FractionalOrder(rc.alpha))));
  return kOk;
}

int cmd_residual(const RunConfig& rc, std::ostream& out) {
  settings_for(rc);
  const auto r = analysis::boundary_residual(FractionalOrder(rc.alpha), well_for(rc));
  emit(rc, out, eval_record(rc, r));
  return kOk;
}

int cmd_scan_i(const RunConfig& rc, std::ostream& out) {
  const auto xs = scan::x_grid(rc.x_min, rc.x_max, rc.points, rc.mirror);
  const auto rows =
      scan::scan_i(FractionalOrder(rc.alpha), well_for(rc), xs, settings_for(rc));
  std::ostringstream os;
  if (rc.format == "json") {
    os << scan::to_json(rows).dump() << '\n';
  } else {
    scan::write_csv(os, rows);
  }
  emit(rc, out, os.str());
  return kOk;
}

int cmd_scan_f(const RunConfig& rc, std::ostream& out) {
  const auto alphas = scan::alpha_grid(rc.alpha_min, rc.alpha_max, rc.points);
  const auto rows = scan::scan_f(alphas, settings_for(rc));
  std::ostringstream os;
  if (rc.format == "json") {
    os << scan::to_json(rows).dump() << '\n';
  } else {
    scan::write_csv(os, rows);
  }
  emit(rc, out, os.str());
  return kOk;
}

int cmd_gamma_inc(const RunConfig& rc, std::ostream& out) {
  const Complex z{rc.z_re, rc.z_im};
  const Complex v = specfun::upper_incomplete_gamma(specfun::GammaOrder(rc.s), z);
  std::ostringstream os;
  if (rc.format == "json") {
    nlohmann::json j{{"schema", scan::kSchemaVersion},
                     {"s", rc.s},
                     {"z", {z.real(), z.imag()}},
                     {"value", {v.real(), v.imag()}}};
    if (z.real() >= 0.0) {
      QuadratureSettings ray = settings_for(rc);
      ray.rel_tol = std::min(ray.rel_tol, 1e-12);
      ray.abs_tol = 1e-15;
      const Complex o = specfun::upper_incomplete_gamma_oracle(rc.s, z, ray);
      j["oracle"] = {o.real(), o.imag()};
    }
    os << j.dump() << '\n';
  } else {
    os << "s,z_re,z_im,value_re,value_im\n"
       << scan::format_number(rc.s) << ',' << scan::format_number(z.real()) << ','
       << scan::format_number(z.imag()) << ',' << scan::format_number(v.real()) << ','
       << scan::format_number(v.imag()) << '\n';
  }
  emit(rc, out, os.str());
  return kOk;
}

int cmd_branch_demo(const RunConfig& rc, std::ostream& out) {
  const auto rep = analysis::branch_ambiguity_demo(FractionalOrder(rc.alpha), rc.q_grid);
  std::ostringstream os;
  if (rc.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& c : rep.choices) {
      rows.push_back({{"choice", c.choice.label()},
                      {"analytic_half_plane", c.choice.analytic_half_plane()},
                      {"dev_positive", c.positive_axis},
                      {"dev_negative", c.negative_axis},
                      {"sup", c.sup}});
    }
    os << nlohmann::json{{"schema", scan::kSchemaVersion}, {"alpha", rep.alpha}, {"rows", rows}}
              .dump()
       << '\n';
  } else {
    os << "choice,analytic_half_plane,dev_positive,dev_negative,sup\n";
    for (const auto& c : rep.choices) {
      os << '"' << c.choice.label() << "\"," << c.choice.analytic_half_plane() << ','
         << scan::format_number(c.positive_axis) << ',' << scan::format_number(c.negative_axis)
         << ',' << scan::format_number(c.sup) << '\n';
    }
  }
  emit(rc, out, os.str());
  return kOk;
}

int cmd_verify(const RunConfig& rc, std::ostream& out) {
  acceptance::Options opts;
  opts.cfg = settings_for(rc);
  if (rc.alpha_set) opts.probe_alpha = rc.alpha;
  const auto report = acceptance::run(opts);
  emit(rc, out, acceptance::to_json(report).dump(2) + "\n");
  return report.all_pass ? kOk : kVerifyFailed;
}

}  // namespace

void RunConfig::validate() const {
  if (points < 1) throw DomainError("--points must be at least 1");
  if (!(x_min <= x_max)) throw DomainError("--x-min must not exceed --x-max");
  if (!(alpha_min <= alpha_max)) throw DomainError("--alpha-min must not exceed --alpha-max");
  if (format != "csv" && format != "json") throw DomainError("--format must be csv or json");
  if (!(rel_tol >= 1e-14) || !std::isfinite(rel_tol)) {
    throw DomainError("--rel-tol must be finite and >= 1e-14");
  }
  if (max_panels < 1) throw DomainError("--max-panels must be at least 1");
  if (!std::isfinite(x) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
    throw DomainError("x values must be finite");
  }
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("--a must be positive");
  if ((takes_alpha(subcommand) || (subcommand == "verify" && alpha_set)) &&
      !FractionalOrder::admissible(alpha)) {
    (void)FractionalOrder(alpha);
  }
  if (subcommand == "scan-f") {
    for (double v : {alpha_min, alpha_max}) {
      if (std::abs(v) > 1.0 - FractionalOrder::kEdgeMargin) (void)FractionalOrder(v);
    }
  }
  if (subcommand == "gamma-inc") (void)specfun::GammaOrder(s);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Riesz derivative of the infinite-well candidate ground state"};
  app.require_subcommand(1);
  RunConfig rc;

  auto common = [&rc](CLI::App* sub) {
    sub->add_option("--rel-tol", rc.rel_tol, "Oracle relative tolerance");
    sub->add_option("--max-panels", rc.max_panels, "Quadrature panel budget per integral");
    sub->add_option("--format", rc.format, "Output format: csv or json");
    sub->add_option("--out", rc.out_path, "Output file, '-' for standard output");
  };
  auto alpha_opt = [&rc](CLI::App* sub) {
    return sub->add_option("--alpha", rc.alpha, "Fractional order in (-1, 1), nonzero");
  };

  auto* eval_i = app.add_subcommand("eval-i", "I(x) at one point (hybrid route)");
  alpha_opt(eval_i);
  eval_i->add_option("--a", rc.a, "Well half-width");
  eval_i->add_option("--x", rc.x, "Position");
  common(eval_i);

  auto* eval_f = app.add_subcommand("eval-f", "f(alpha) from the closed form");
  alpha_opt(eval_f);
  common(eval_f);

  auto* residual = app.add_subcommand("residual", "Riesz derivative of the candidate at x = a");
  alpha_opt(residual);
  residual->add_option("--a", rc.a, "Well half-width");
  common(residual);

  auto* scan_i = app.add_subcommand("scan-i", "I(x) on an x grid, both routes");
  alpha_opt(scan_i);
  scan_i->add_option("--a", rc.a, "Well half-width");
  scan_i->add_option("--x-min", rc.x_min);
  scan_i->add_option("--x-max", rc.x_max);
  scan_i->add_option("--points", rc.points);
  scan_i->add_flag("--mirror", rc.mirror, "Also emit the mirrored negative x values");
  common(scan_i);

  auto* scan_f = app.add_subcommand("scan-f", "f(alpha) on an alpha grid, both routes");
  scan_f->add_option("--alpha-min", rc.alpha_min);
  scan_f->add_option("--alpha-max", rc.alpha_max);
  auto* f_points = scan_f->add_option("--points", rc.points);
  common(scan_f);

  auto* gamma_inc = app.add_subcommand("gamma-inc", "Upper incomplete gamma Gamma(s, z)");
  gamma_inc->add_option("--s", rc.s, "Real order");
  gamma_inc->add_option("--re", rc.z_re, "Re z");
  gamma_inc->add_option("--im", rc.z_im, "Im z");
  common(gamma_inc);

  auto* branch = app.add_subcommand("branch-demo", "Branch-cut choices for |q|^alpha");
  alpha_opt(branch);
  branch->add_option("--q", rc.q_grid, "Real q values (nonzero)");
  common(branch);

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  auto* verify_alpha = alpha_opt(verify);
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  rc.subcommand = app.get_subcommands().front()->get_name();
  rc.alpha_set = verify_alpha->count() > 0;
  if (rc.subcommand == "scan-f" && f_points->count() == 0) rc.points = 73;

  const std::map<std::string, std::function<int(const RunConfig&, std::ostream&)>> commands{
      {"eval-i", cmd_eval_i},       {"eval-f", cmd_eval_f},       {"residual", cmd_residual},
      {"scan-i", cmd_scan_i},       {"scan-f", cmd_scan_f},       {"gamma-inc", cmd_gamma_inc},
      {"branch-demo", cmd_branch_demo}, {"verify", cmd_verify}};
  try {
    rc.validate();
    return commands.at(rc.subcommand)(rc, out);
  } catch (const ConvergenceError& e) {
    err << "convergence failure: " << e.what() << '\n';
    return kConvergence;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "io error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace rieszwell::cli
