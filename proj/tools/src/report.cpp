#include "carlab/report.hpp"

#include <carleman/cutoffs.hpp>
#include <carleman/errors.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace carlab {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skip: return "SKIP";
  }
  return "?";
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

Measurement& Verdict::check(const std::string& name, double value, const std::string& relation, double bound) {
  Measurement m{name, value, relation, bound, false};
  if (relation == "<=") m.ok = value <= bound;
  else if (relation == ">=") m.ok = value >= bound;
  else if (relation == "<") m.ok = value < bound;
  else if (relation == ">") m.ok = value > bound;
  else if (relation == "==") m.ok = value == bound;
  else throw carleman::ConfigError("unknown relation " + relation);
  if (std::isnan(value)) m.ok = false;
  measurements.push_back(m);
  return measurements.back();
}

void Verdict::info(const std::string& name, double value) { measurements.push_back({name, value, "info", 0.0, true}); }

void Verdict::finish() {
  if (status == Status::Skip && !measurements.empty()) status = Status::Pass;
  if (status == Status::Skip) return;
  bool ok = true;
  for (const auto& m : measurements) ok = ok && m.ok;
  if (budget_seconds > 0 && seconds > budget_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("runtime over budget");
  }
  status = ok ? Status::Pass : Status::Fail;
}

std::string Verdict::line() const {
  std::ostringstream os;
  os << id << " " << to_string(status) << " " << title;
  for (const auto& m : measurements) {
    if (m.relation == "info") continue;
    if (!m.ok || status != Status::Pass) os << " | " << m.name << "=" << fmt(m.value) << " " << m.relation << " " << fmt(m.bound) << (m.ok ? "" : " (violated)");
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, " [%.1fs/%.0fs]", seconds, budget_seconds);
  os << buf;
  if (!detail.empty()) os << " -- " << detail;
  return os.str();
}

bool RunReport::all_pass() const {
  for (const auto& v : verdicts)
    if (v.status != Status::Pass) return false;
  return !verdicts.empty();
}

json RunReport::to_json() const {
  json j;
  j["config"] = config;
  j["bump_fingerprint"] = fingerprint;
  j["wall_seconds"] = wall_seconds;
  j["all_pass"] = all_pass();
  j["verdicts"] = json::array();
  for (const auto& v : verdicts) {
    json jv{{"id", v.id},       {"title", v.title},   {"status", to_string(v.status)},
            {"detail", v.detail}, {"seconds", v.seconds}, {"budget_seconds", v.budget_seconds}};
    jv["measurements"] = json::array();
    for (const auto& m : v.measurements)
      jv["measurements"].push_back(
          {{"name", m.name}, {"value", m.value}, {"relation", m.relation}, {"bound", m.bound}, {"ok", m.ok}});
    j["verdicts"].push_back(jv);
  }
  return j;
}

void RunReport::write(const std::string& path) const { write_text_atomic(path, to_json().dump(2) + "\n"); }

void write_text_atomic(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw carleman::ConfigError("cannot write " + tmp.string());
    out << text;
  }
  fs::rename(tmp, target);
}

CsvWriter::CsvWriter(const std::string& path, const ExperimentConfig& cfg, const std::vector<std::string>& columns)
    : path_(path) {
  // Every quantity the tools emit is a ratio or a rescaled coordinate.
  text_ = "# config_hash=" + cfg.hash() + " units=dimensionless bump=" + carleman::bump_fingerprint() + "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) text_ += (i ? "," : "") + columns[i];
  text_ += "\n";
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) text_ += (i ? "," : "") + cells[i];
  text_ += "\n";
}

void CsvWriter::close() { write_text_atomic(path_, text_); }

}  // namespace carlab
