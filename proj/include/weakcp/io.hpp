#pragma once

#include <iosfwd>
#include <optional>

#include "weakcp/fixtures.hpp"

namespace weakcp {

inline constexpr const char* kToolVersion = "1.0.0";

/// Parse failure with the offending line number.
class parse_error : public error {
public:
  parse_error(std::size_t line, const std::string& what)
      : error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// A crossed product as written by `build`: carrier basis, multiplication
/// table, unit and comodule map.
struct ProductBlock {
  CocycleVariant kind = CocycleVariant::BB;
  Space carrier;
  std::vector<Vec> mult;  // dim^2 entries, row-major
  Vec unit;
  LinMap delta;  // carrier -> carrier⊗H

  ProductBlock(CocycleVariant k, Space c, const Field& f, const Space& hopf_space);
  bool operator==(const ProductBlock& o) const;
};

ProductBlock product_block_of(const CrossedProduct& p, const Space& hopf_space);

/// In-memory form of an instance file. The hopf and algebra blocks are
/// mandatory; action, cocycle and product are optional.
struct Instance {
  Field field = Field::rationals();
  std::optional<WeakBialgebra> hopf;
  std::optional<LinMap> antipode;
  std::optional<LinMap> antipode_inv;
  std::optional<StructuredAlgebra> algebra;
  std::optional<std::vector<Vec>> action;  // dimH*dimA entries
  std::optional<CocycleVariant> cocycle_variant;
  std::optional<std::vector<Vec>> cocycle;  // dimH^2 entries
  std::optional<ProductBlock> product;

  bool operator==(const Instance& o) const;

  /// Assemblers; throw when the needed blocks are absent.
  WeakHopfAlgebra assemble_hopf() const;
  Measuring assemble_measuring() const;
  CocycleTable assemble_cocycle() const;
};

Instance parse_instance(std::istream& in);
Instance parse_instance_string(const std::string& text);
std::string serialize_instance(const Instance& inst);

Instance instance_from_fixture(const FixtureBundle& b);

/// FNV-1a 64-bit digest of the canonical serialization, as 16 hex digits.
std::string instance_digest(const Instance& inst);

/// A report document: tool version, instance digest, verdicts.
struct ReportDocument {
  std::string tool_version = kToolVersion;
  std::string digest;
  ConditionReport report;

  bool all_passed() const { return report.all_passed(); }
};

/// Human-readable rendering: one line per condition, witnesses with labels
/// and both evaluated sides, then a summary line.
std::string render_text(const ReportDocument& doc);

/// Machine rendering: "COND <id> PASS|FAIL [witness=<i,j,...>]" records
/// (NOTCHECKED for conditions skipped due to missing input), then one
/// summary line. Byte-identical across runs.
std::string render_machine(const ReportDocument& doc);

}  // namespace weakcp
