#include "sharpflat/cli/artifacts.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace sharpflat::cli {

namespace {

std::string quote_if_needed(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_tuple(const std::vector<int>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out + ")";
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

CsvTable::Row& CsvTable::Row::add(double x) {
  cells_.push_back(format_number(x));
  return *this;
}

CsvTable::Row& CsvTable::Row::add(std::int64_t x) {
  cells_.push_back(std::to_string(x));
  return *this;
}

CsvTable::Row& CsvTable::Row::add(bool x) {
  cells_.push_back(x ? "true" : "false");
  return *this;
}

CsvTable::Row& CsvTable::Row::add(const std::string& text) {
  cells_.push_back(text);
  return *this;
}

void CsvTable::push(Row row) {
  if (row.cells_.size() != header_.size()) {
    throw std::logic_error("CSV row has " + std::to_string(row.cells_.size()) + " cells, header has " +
                           std::to_string(header_.size()));
  }
  rows_.push_back(std::move(row.cells_));
}

std::string CsvTable::render() const {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += ',';
      out += quote_if_needed(cells[i]);
    }
    out += '\n';
  };
  line(header_);
  for (const auto& r : rows_) line(r);
  return out;
}

Check check_at_most(std::string name, double value, double limit, std::string note) {
  return {std::move(name), value, "<=", limit, 0.0, value <= limit, std::move(note)};
}

Check check_at_least(std::string name, double value, double limit, std::string note) {
  return {std::move(name), value, ">=", limit, 0.0, value >= limit, std::move(note)};
}

Check check_within(std::string name, double value, double lo, double hi, std::string note) {
  return {std::move(name), value, "in", lo, hi, value >= lo && value <= hi, std::move(note)};
}

bool RunResult::pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  for (const auto& f : fits) {
    if (f.asserted && !(std::abs(f.fit.slope - f.target) <= f.tolerance)) return false;
  }
  return true;
}

namespace {

nlohmann::json number_json(double x) {
  if (std::isfinite(x)) return x;
  return format_number(x);
}

}  // namespace

nlohmann::json to_json(const Check& check) {
  nlohmann::json j;
  j["name"] = check.name;
  j["value"] = number_json(check.value);
  j["comparison"] = check.comparison;
  if (check.comparison == "in") {
    j["threshold"] = {number_json(check.threshold), number_json(check.threshold_high)};
  } else {
    j["threshold"] = number_json(check.threshold);
  }
  j["pass"] = check.pass;
  if (!check.note.empty()) j["note"] = check.note;
  return j;
}

nlohmann::json to_json(const FitSummary& fit) {
  nlohmann::json j;
  j["name"] = fit.name;
  j["slope"] = number_json(fit.fit.slope);
  j["intercept"] = number_json(fit.fit.intercept);
  j["max_residual"] = number_json(fit.fit.max_residual);
  j["samples"] = fit.fit.sample_count;
  j["target"] = number_json(fit.target);
  j["tolerance"] = number_json(fit.tolerance);
  j["asserted"] = fit.asserted;
  j["pass"] = !fit.asserted || std::abs(fit.fit.slope - fit.target) <= fit.tolerance;
  return j;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace sharpflat::cli
