#pragma once
#include <string>
#include <vector>

#include "carlab/config.hpp"

namespace carlab {

enum class Status { Pass, Fail, Skip };
std::string to_string(Status s);

struct Measurement {
  std::string name;
  double value = 0.0;
  std::string relation;  // "<=", ">=", "within" or "info"
  double bound = 0.0;
  bool ok = true;
};

struct Verdict {
  std::string id;
  std::string title;
  Status status = Status::Skip;
  std::vector<Measurement> measurements;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;

  // Records a check; any failing check fails the verdict.
  Measurement& check(const std::string& name, double value, const std::string& relation, double bound);
  void info(const std::string& name, double value);
  void finish();  // Pass iff every check held and the runtime fits the budget
  std::string line() const;
};

struct RunReport {
  json config;
  std::vector<Verdict> verdicts;
  double wall_seconds = 0.0;
  std::string fingerprint;

  bool all_pass() const;
  json to_json() const;
  void write(const std::string& path) const;  // atomic: temp file then rename
};

void write_text_atomic(const std::string& path, const std::string& text);

// CSV with a commented header naming the generating config hash and bump family.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const ExperimentConfig& cfg, const std::vector<std::string>& columns);
  void row(const std::vector<std::string>& cells);
  void close();

 private:
  std::string path_;
  std::string text_;
};

std::string fmt(double v);

}  // namespace carlab
