#include "fusionkit/report.hpp"

#include <sstream>

namespace fusionkit {

using nlohmann::json;

bool ReportEntry::unexpected() const {
  return expected_failure ? !verdict.failed() : verdict.failed();
}

void RunReport::add(std::string file, Verdict v, bool expected_failure) {
  entries.push_back({std::move(file), std::move(v), expected_failure});
}

void RunReport::append(RunReport&& other) {
  for (auto& i : other.inputs) inputs.push_back(std::move(i));
  for (auto& e : other.entries) entries.push_back(std::move(e));
  for (auto& x : other.exports) exports.push_back(std::move(x));
  for (auto& w : other.warnings) warnings.push_back(std::move(w));
  input_error = input_error || other.input_error;
  numeric_error = numeric_error || other.numeric_error;
}

int RunReport::exit_code() const {
  if (input_error) return kInputError;
  if (numeric_error) return kNumericError;
  for (const auto& e : entries)
    if (e.unexpected()) return kCheckFailed;
  return kAllPassed;
}

namespace {

json entry_json(const ReportEntry& e) {
  json j = {{"file", e.file},
            {"check", e.verdict.check},
            {"outcome", std::string(to_string(e.verdict.outcome))},
            {"exact", e.verdict.exact}};
  if (e.verdict.residual) j["residual"] = *e.verdict.residual;
  if (!e.verdict.details.empty()) j["details"] = e.verdict.details;
  if (e.expected_failure) j["expected"] = "fail";
  return j;
}

}  // namespace

std::string RunReport::render(bool single_document) const {
  json header = {{"command", command}, {"seed", seed}, {"tol", tol}, {"snap", snap}};
  json in = json::array();
  for (const auto& [path, digest] : inputs) in.push_back({{"path", path}, {"sha256", digest}});
  header["inputs"] = in;

  std::size_t passed = 0, failed = 0, na = 0, xfail = 0;
  for (const auto& e : entries) {
    switch (e.verdict.outcome) {
      case Outcome::pass: ++passed; break;
      case Outcome::fail: ++failed; break;
      case Outcome::not_applicable: ++na; break;
    }
    if (e.expected_failure && e.verdict.failed()) ++xfail;
  }
  json summary = {{"checks", entries.size()},      {"passed", passed},
                  {"failed", failed},              {"not_applicable", na},
                  {"expected_failures", xfail},    {"exit_code", exit_code()},
                  {"warnings", warnings}};
  if (elapsed_seconds) summary["elapsed_seconds"] = *elapsed_seconds;

  if (single_document) {
    json doc = header;
    doc["verdicts"] = json::array();
    for (const auto& e : entries) doc["verdicts"].push_back(entry_json(e));
    doc["exports"] = json::array();
    for (const auto& x : exports)
      doc["exports"].push_back({{"file", x.file}, {"kind", x.kind}, {"data", x.data}});
    doc["summary"] = summary;
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << json{{"header", header}}.dump() << "\n";
  for (const auto& e : entries) os << entry_json(e).dump() << "\n";
  for (const auto& x : exports)
    os << json{{"export", x.kind}, {"file", x.file}, {"data", x.data}}.dump() << "\n";
  os << json{{"summary", summary}}.dump() << "\n";
  return os.str();
}

}  // namespace fusionkit
