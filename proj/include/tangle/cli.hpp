#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tangle/monogamy.hpp"

namespace tangle::cli {

enum class Command { state, measure, table, scan, roof, verify };
enum class Format { csv, json };

struct RunConfig {
  Command command = Command::state;
  std::string target;  // table name, roof/verify scenario
  std::string state_name;
  std::optional<double> p;
  std::optional<double> phi;
  std::string measure_name;
  PowerFactors factors;
  std::optional<double> nu;  // roof / verify exponent
  std::size_t grid_p = 2001;
  std::size_t grid_phi = 721;
  Format format = Format::csv;
  std::string out_path;  // empty: standard output
};

struct TableCell {
  std::string row;
  std::string column;
  double computed;
  double expected;
  double deviation;
};

struct TableReport {
  std::string name;
  double tolerance;
  std::vector<TableCell> cells;
  double max_deviation() const;
  bool pass() const { return max_deviation() <= tolerance; }
};

// which: "I", "II" or "III". Tables I and II use 1e-9 unless TANGLE_LAB_TOL
// is set; Table III uses 1e-4.
TableReport compute_table(const std::string& which);

// "star", "inf"/"infinity" or a number. Star resolves to the threshold of
// the given measure ("n1" or "n2").
double parse_exponent(const std::string& text, const std::string& measure);

// 12 significant digits, lowercase scientific.
std::string format_number(double x);

// Full command-line entry point. Exit codes: 0 success, 1 tolerance or
// verification failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tangle::cli
