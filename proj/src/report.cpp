#include "weakcp/report.hpp"

#include <algorithm>
#include <sstream>

namespace weakcp {

std::string Witness::describe() const {
  std::ostringstream os;
  os << "at (";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) os << ", ";
    os << labels[i];
  }
  os << "): lhs = " << lhs.str() << ", rhs = " << rhs.str();
  return os.str();
}

void ConditionReport::add(ConditionResult r) {
  if (find(r.id)) throw error("duplicate condition id '" + r.id + "' in report");
  results_.push_back(std::move(r));
}

void ConditionReport::add_pass(const std::string& id, std::size_t cases,
                               const std::string& note) {
  add(ConditionResult{id, Verdict::Pass, cases, std::nullopt, note});
}

void ConditionReport::add_fail(const std::string& id, Witness w, std::size_t cases,
                               const std::string& note) {
  add(ConditionResult{id, Verdict::Fail, cases, std::move(w), note});
}

void ConditionReport::add_not_checked(const std::string& id, const std::string& note) {
  add(ConditionResult{id, Verdict::NotChecked, 0, std::nullopt, note});
}

void ConditionReport::merge(const ConditionReport& o) {
  for (const auto& r : o.results_) {
    const ConditionResult* mine = find(r.id);
    if (!mine) {
      results_.push_back(r);
      continue;
    }
    if (mine->verdict != r.verdict)
      throw error("conflicting verdicts for condition '" + r.id + "' while merging reports");
  }
}

bool ConditionReport::all_passed() const {
  return std::none_of(results_.begin(), results_.end(),
                      [](const ConditionResult& r) { return r.failed(); });
}

std::size_t ConditionReport::fail_count() const {
  return static_cast<std::size_t>(
      std::count_if(results_.begin(), results_.end(),
                    [](const ConditionResult& r) { return r.failed(); }));
}

const ConditionResult* ConditionReport::find(const std::string& id) const {
  for (const auto& r : results_)
    if (r.id == id) return &r;
  return nullptr;
}

const ConditionResult& ConditionReport::at(const std::string& id) const {
  const ConditionResult* r = find(id);
  if (!r) throw error("report has no verdict for condition '" + id + "'");
  return *r;
}

void ConditionScan::require_eq(const Vec& lhs, const Vec& rhs,
                               std::vector<std::size_t> indices,
                               std::vector<std::string> labels) {
  ++cases_;
  if (!ok_) return;  // keep the first witness
  if (lhs == rhs) return;
  ok_ = false;
  witness_ = Witness{std::move(indices), std::move(labels), lhs, rhs};
}

void ConditionScan::emit(ConditionReport& report, const std::string& id,
                         const std::string& note) const {
  if (ok_)
    report.add_pass(id, cases_, note);
  else
    report.add_fail(id, *witness_, cases_, note);
}

}  // namespace weakcp
