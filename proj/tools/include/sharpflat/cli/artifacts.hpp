#pragma once

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sharpflat/exponent_fit.hpp"

namespace sharpflat::cli {

/// 17 significant digits; "inf", "-inf" and "nan" for non-finite values.
std::string format_number(double x);

/// "(2,2,2,2,2)".
std::string format_tuple(const std::vector<int>& values);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  class Row {
   public:
    Row& add(double x);
    Row& add(std::int64_t x);
    Row& add(int x) { return add(static_cast<std::int64_t>(x)); }
    Row& add(std::size_t x) { return add(static_cast<std::int64_t>(x)); }
    Row& add(bool x);
    Row& add(const std::string& text);
    Row& add(const char* text) { return add(std::string(text)); }

   private:
    friend class CsvTable;
    std::vector<std::string> cells_;
  };

  void push(Row row);
  std::size_t size() const { return rows_.size(); }
  const std::vector<std::string>& header() const { return header_; }
  /// Header line plus one line per row, "\n" terminated, RFC 4180 quoting.
  std::string render() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

struct Check {
  std::string name;
  double value = 0.0;
  std::string comparison;  ///< "<=", ">=", "==", "in"
  double threshold = 0.0;
  double threshold_high = 0.0;  ///< upper end for "in"
  bool pass = false;
  std::string note;
};

Check check_at_most(std::string name, double value, double limit, std::string note = {});
Check check_at_least(std::string name, double value, double limit, std::string note = {});
Check check_within(std::string name, double value, double lo, double hi, std::string note = {});

struct FitSummary {
  std::string name;
  torus::ExponentFit fit;
  double target = 0.0;
  double tolerance = 0.0;
  bool asserted = true;  ///< false for diagnostics-only fits
};

/// A command's data table plus checks and fits for the summary.
struct RunResult {
  CsvTable table{{}};
  std::vector<Check> checks;
  std::vector<FitSummary> fits;
  nlohmann::json extra = nlohmann::json::object();

  bool pass() const;
};

nlohmann::json to_json(const Check& check);
nlohmann::json to_json(const FitSummary& fit);

/// Writes through a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace sharpflat::cli
