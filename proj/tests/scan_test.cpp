#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rieszwell/scan.hpp"

namespace {

using namespace rieszwell;
using namespace rieszwell::scan;

std::vector<std::vector<std::string>> read_csv(std::istream& is) {
  std::vector<std::vector<std::string>> out;
  std::string line;
  while (std::getline(is, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    out.push_back(cells);
  }
  return out;
}

std::vector<std::vector<std::string>> read_golden(const std::string& name) {
  std::ifstream in(std::string(RIESZWELL_GOLDEN_DIR) + "/" + name);
  EXPECT_TRUE(in.good()) << name;
  return read_csv(in);
}

void expect_matches_golden(const std::string& csv, const std::string& golden_name,
                           const std::vector<double>& tol_per_column) {
  std::stringstream ss(csv);
  const auto got = read_csv(ss);
  const auto want = read_golden(golden_name);
  ASSERT_EQ(got.size(), want.size());
  ASSERT_FALSE(want.empty());
  EXPECT_EQ(got[0], want[0]);
  for (std::size_t i = 1; i < want.size(); ++i) {
    ASSERT_EQ(got[i].size(), want[i].size()) << i;
    for (std::size_t j = 0; j < want[i].size(); ++j) {
      if (j >= tol_per_column.size() || tol_per_column[j] < 0.0) {
        EXPECT_EQ(got[i][j], want[i][j]) << "row " << i << " col " << j;
      } else {
        EXPECT_NEAR(std::stod(got[i][j]), std::stod(want[i][j]), tol_per_column[j])
            << "row " << i << " col " << j;
      }
    }
  }
}

TEST(Grids, Linspace) {
  const auto g = linspace(0.0, 3.0, 301);
  ASSERT_EQ(g.size(), 301u);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g.back(), 3.0);
  EXPECT_EQ(linspace(2.0, 5.0, 1), std::vector<double>{2.0});
}

TEST(Grids, AlphaGridDropsZero) {
  const auto g = alpha_grid(-0.9, 0.9, 73);
  EXPECT_EQ(g.size(), 72u);
  for (double a : g) EXPECT_GE(std::abs(a), 1e-3);
  EXPECT_EQ(alpha_grid(-0.9, 0.9, 5).size(), 4u);
}

TEST(Grids, XGridMirror) {
  const auto g = x_grid(0.0, 2.0, 3, true);
  EXPECT_EQ(g, (std::vector<double>{-2.0, -1.0, 0.0, 1.0, 2.0}));
  EXPECT_EQ(x_grid(0.0, 2.0, 3, false), (std::vector<double>{0.0, 1.0, 2.0}));
}

TEST(FormatNumber, SeventeenDigits) {
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(-2.5), "-2.5");
  EXPECT_EQ(std::stod(format_number(1.6615619497468797)), 1.6615619497468797);
}

TEST(Headers, Frozen) {
  EXPECT_STREQ(kScanIHeader, "x,i_closed,i_oracle,abs_diff,method,degraded");
  EXPECT_STREQ(kScanFHeader, "alpha,f_closed,f_oracle,abs_diff");
  EXPECT_EQ(kSchemaVersion, 1);
}

TEST(ScanI, ParallelMatchesSerial) {
  const FractionalOrder order(0.5);
  const auto xs = x_grid(0.0, 3.0, 31, true);
  const auto par = scan_i(order, WellConfig{}, xs, QuadratureSettings{}, Execution::parallel);
  const auto ser = scan_i(order, WellConfig{}, xs, QuadratureSettings{}, Execution::serial);
  std::ostringstream a, b;
  write_csv(a, par);
  write_csv(b, ser);
  EXPECT_EQ(a.str(), b.str());
}

TEST(ScanI, PresetBoundaryRowIsNonzero) {
  const auto rows = scan_i(FractionalOrder(0.5), WellConfig{}, x_grid(0.0, 3.0, 301, false),
                           QuadratureSettings{});
  ASSERT_EQ(rows.size(), 301u);
  const auto& edge = rows[100];
  EXPECT_EQ(edge.x, 1.0);
  EXPECT_GT(std::abs(edge.i_closed), 0.1);
  for (const auto& r : rows) EXPECT_LT(r.abs_diff, 1e-6) << r.x;
  EXPECT_TRUE(rows[99].degraded == false);
}

TEST(ScanI, SinglePoint) {
  const auto rows = scan_i(FractionalOrder(0.5), WellConfig{}, {0.0}, QuadratureSettings{});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_NEAR(rows[0].i_closed, -2.75366343562012988, 1e-13);
}

TEST(ScanI, JsonCarriesSameRows) {
  const auto rows =
      scan_i(FractionalOrder(-0.3), WellConfig{}, x_grid(0.0, 2.0, 5, false), QuadratureSettings{});
  const auto j = to_json(rows);
  EXPECT_EQ(j["schema"], 1);
  ASSERT_EQ(j["rows"].size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(j["rows"][i]["x"].get<double>(), rows[i].x);
    EXPECT_EQ(j["rows"][i]["i_closed"].get<double>(), rows[i].i_closed);
    EXPECT_EQ(j["rows"][i]["i_oracle"].get<double>(), rows[i].i_oracle);
    EXPECT_EQ(j["rows"][i]["method"].get<std::string>(), std::string(to_string(rows[i].method)));
  }
  std::ostringstream csv;
  write_csv(csv, rows);
  std::stringstream ss(csv.str());
  const auto cells = read_csv(ss);
  ASSERT_EQ(cells.size(), rows.size() + 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(std::stod(cells[i + 1][1]), rows[i].i_closed);
  }
}

TEST(ScanI, MatchesGolden) {
  const QuadratureSettings cfg;
  std::ostringstream a, b;
  write_csv(a, scan_i(FractionalOrder(0.5), WellConfig{}, x_grid(0.0, 3.0, 13, false), cfg));
  write_csv(b, scan_i(FractionalOrder(-0.5), WellConfig{}, x_grid(-2.0, 2.0, 9, false), cfg));
  // x exact, closed form to rounding, oracle to its tolerance, diff loosely.
  const std::vector<double> tol{-1.0, 1e-13, 1e-9, 1e-9, -1.0, -1.0};
  expect_matches_golden(a.str(), "scan_i_alpha0.5.csv", tol);
  expect_matches_golden(b.str(), "scan_i_alpham0.5.csv", tol);
}

TEST(ScanF, PresetIncreasingWithSignChange) {
  const auto rows = scan_f(alpha_grid(-0.9, 0.9, 73), QuadratureSettings{});
  ASSERT_EQ(rows.size(), 72u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_GT(rows[i].f_closed, rows[i - 1].f_closed) << rows[i].alpha;
  }
  EXPECT_LT(rows.front().f_closed, 0.0);
  EXPECT_GT(rows.back().f_closed, 0.0);
  for (const auto& r : rows) EXPECT_LT(r.abs_diff, 1e-7) << r.alpha;
}

TEST(ScanF, SmallGrids) {
  const auto two = scan_f({-0.5, 0.5}, QuadratureSettings{});
  ASSERT_EQ(two.size(), 2u);
  EXPECT_NEAR(two[0].f_closed, -1.121504931219282518, 1e-13);
  EXPECT_NEAR(two[1].f_closed, 0.830780974873439845, 1e-13);
  EXPECT_EQ(scan_f({0.25}, QuadratureSettings{}).size(), 1u);
  EXPECT_THROW(scan_f({0.0}, QuadratureSettings{}), DomainError);
}

TEST(ScanF, MatchesGolden) {
  std::ostringstream os;
  write_csv(os, scan_f(alpha_grid(-0.9, 0.9, 9), QuadratureSettings{}));
  expect_matches_golden(os.str(), "scan_f.csv", {-1.0, 1e-13, 1e-9, 1e-9});
}

}  // namespace
