#include "rieszwell/scan.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <ostream>

#include "rieszwell/analysis.hpp"
#include "rieszwell/oracle.hpp"

namespace rieszwell::scan {

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 1) throw DomainError("linspace: need at least one point");
  std::vector<double> out(static_cast<std::size_t>(n));
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  for (int k = 0; k < n; ++k) out[k] = lo + (hi - lo) * k / (n - 1);
  out.back() = hi;
  return out;
}

std::vector<double> alpha_grid(double lo, double hi, int n) {
  auto grid = linspace(lo, hi, n);
  std::erase_if(grid, [](double a) { return std::abs(a) < 1e-3; });
  return grid;
}

std::vector<double> x_grid(double lo, double hi, int n, bool mirror) {
  auto grid = linspace(lo, hi, n);
  if (mirror) {
    const auto count = grid.size();
    for (std::size_t i = 0; i < count; ++i) {
      if (grid[i] > 0.0) grid.push_back(-grid[i]);
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

namespace {

template <typename Fn>
auto with_retry(Fn&& fn, const QuadratureSettings& cfg) {
  try {
    return fn(cfg);
  } catch (const ConvergenceError&) {
    QuadratureSettings wider = cfg;
    wider.max_panels *= 2;
    wider.tail_blocks *= 2;
    return fn(wider);
  }
}

void rethrow_first(const std::vector<std::exception_ptr>& errors) {
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

std::vector<ScanIRow> scan_i(const FractionalOrder& order, const WellConfig& well,
                             const std::vector<double>& xs, const QuadratureSettings& cfg,
                             Execution exec) {
  well.validate();
  cfg.validate();
  std::vector<ScanIRow> rows(xs.size());
  std::vector<std::exception_ptr> errors(xs.size());
  for_each_index(xs.size(), exec, [&](std::size_t k) {
    try {
      const double x = xs[k];
      const auto closed = with_retry(
          [&](const QuadratureSettings& c) { return analysis::i_hybrid(order, well, x, c); }, cfg);
      const auto direct = with_retry(
          [&](const QuadratureSettings& c) { return oracle::i_direct(order, well, x, c); }, cfg);
      rows[k] = {x,
                 closed.value,
                 direct.value,
                 std::abs(closed.value - direct.value),
                 closed.method,
                 closed.degraded};
    } catch (...) {
      errors[k] = std::current_exception();
    }
  });
  rethrow_first(errors);
  return rows;
}

std::vector<ScanFRow> scan_f(const std::vector<double>& alphas, const QuadratureSettings& cfg,
                             Execution exec) {
  cfg.validate();
  std::vector<FractionalOrder> orders;
  orders.reserve(alphas.size());
  for (double a : alphas) orders.emplace_back(a);

  std::vector<ScanFRow> rows(alphas.size());
  std::vector<std::exception_ptr> errors(alphas.size());
  for_each_index(alphas.size(), exec, [&](std::size_t k) {
    try {
      const auto& order = orders[k];
      const auto closed = closedform::f_closed(order);
      const auto direct = with_retry(
          [&](const QuadratureSettings& c) { return oracle::f_direct(order, c); }, cfg);
      rows[k] = {order.value(), closed.value, direct.value,
                 std::abs(closed.value - direct.value)};
    } catch (...) {
      errors[k] = std::current_exception();
    }
  });
  rethrow_first(errors);
  return rows;
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const std::vector<ScanIRow>& rows) {
  os << kScanIHeader << '\n';
  for (const auto& r : rows) {
    os << format_number(r.x) << ',' << format_number(r.i_closed) << ','
       << format_number(r.i_oracle) << ',' << format_number(r.abs_diff) << ','
       << to_string(r.method) << ',' << (r.degraded ? 1 : 0) << '\n';
  }
}

void write_csv(std::ostream& os, const std::vector<ScanFRow>& rows) {
  os << kScanFHeader << '\n';
  for (const auto& r : rows) {
    os << format_number(r.alpha) << ',' << format_number(r.f_closed) << ','
       << format_number(r.f_oracle) << ',' << format_number(r.abs_diff) << '\n';
  }
}

nlohmann::json to_json(const std::vector<ScanIRow>& rows) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : rows) {
    records.push_back({{"x", r.x},
                       {"i_closed", r.i_closed},
                       {"i_oracle", r.i_oracle},
                       {"abs_diff", r.abs_diff},
                       {"method", to_string(r.method)},
                       {"degraded", r.degraded}});
  }
  return {{"schema", kSchemaVersion}, {"rows", records}};
}

nlohmann::json to_json(const std::vector<ScanFRow>& rows) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : rows) {
    records.push_back({{"alpha", r.alpha},
                       {"f_closed", r.f_closed},
                       {"f_oracle", r.f_oracle},
                       {"abs_diff", r.abs_diff}});
  }
  return {{"schema", kSchemaVersion}, {"rows", records}};
}

nlohmann::json to_json(const EvalResult& r) {
  return {{"schema", kSchemaVersion},
          {"value", r.value},
          {"err_estimate", r.err_estimate},
          {"method", to_string(r.method)},
          {"degraded", r.degraded},
          {"cause", to_string(r.cause)},
          {"n_evals", r.n_evals}};
}

}  // namespace rieszwell::scan
