#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weakcp/linalg.hpp"

namespace weakcp {

/// Failure evidence for one condition: the basis tuple on which it broke
/// and both evaluated sides. Witnesses re-evaluate from the instance data
/// alone.
struct Witness {
  std::vector<std::size_t> indices;
  std::vector<std::string> labels;  // parallel to indices, human-readable
  Vec lhs;
  Vec rhs;

  std::string describe() const;
};

enum class Verdict { Pass, Fail, NotChecked };

struct ConditionResult {
  std::string id;
  Verdict verdict = Verdict::NotChecked;
  std::size_t cases_checked = 0;
  std::optional<Witness> witness;  // present iff verdict == Fail
  std::string note;

  bool passed() const { return verdict == Verdict::Pass; }
  bool failed() const { return verdict == Verdict::Fail; }
};

/// Ordered collection of per-condition verdicts. Each id carries exactly
/// one verdict; insertion order is preserved so reports are deterministic.
class ConditionReport {
public:
  void add_pass(const std::string& id, std::size_t cases, const std::string& note = "");
  void add_fail(const std::string& id, Witness w, std::size_t cases,
                const std::string& note = "");
  void add_not_checked(const std::string& id, const std::string& note = "");
  void add(ConditionResult r);

  /// Appends all results of `o`. A duplicate id is tolerated only when the
  /// verdicts agree (the same identity re-checked along two paths); the
  /// duplicate entry is dropped.
  void merge(const ConditionReport& o);

  bool all_passed() const;  // no Fail entries
  bool has(const std::string& id) const { return find(id) != nullptr; }
  const ConditionResult* find(const std::string& id) const;
  /// Result for a known id; throws if absent.
  const ConditionResult& at(const std::string& id) const;

  const std::vector<ConditionResult>& results() const { return results_; }
  std::size_t fail_count() const;

private:
  std::vector<ConditionResult> results_;
};

/// Scan helper for one condition: feeds basis-tuple comparisons, keeps the
/// first failure as witness.
class ConditionScan {
public:
  void require_eq(const Vec& lhs, const Vec& rhs, std::vector<std::size_t> indices,
                  std::vector<std::string> labels);
  bool ok() const { return ok_; }
  std::size_t cases() const { return cases_; }

  /// Emits this scan's verdict into `report` under `id`.
  void emit(ConditionReport& report, const std::string& id,
            const std::string& note = "") const;

private:
  bool ok_ = true;
  std::size_t cases_ = 0;
  std::optional<Witness> witness_;
};

}  // namespace weakcp
