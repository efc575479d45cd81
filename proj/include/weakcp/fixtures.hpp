#pragma once

#include <map>

#include "weakcp/crossed.hpp"

namespace weakcp {

/// A ready-made instance: weak Hopf algebra, coefficient algebra, action
/// and cocycle, together with the expected verdict for every condition the
/// scan runs. The expected map is the regression contract: scan_fixture
/// must reproduce it exactly.
struct FixtureBundle {
  std::string name;
  std::string description;
  WeakHopfAlgebra hopf;
  StructuredAlgebra algebra;
  Measuring measuring;
  CocycleTable cocycle;  // bb variant; ag checks run on the induced table
  std::map<std::string, bool> expected;
};

/// The 8-dimensional instance K⊗k[C2]⊗K with K = k×k: a weak Hopf algebra
/// whose action and cocycle satisfy conditions (1)-(9) with an invertible
/// cocycle, while conditions (10)-(12) fail. Works over any field.
FixtureBundle paper_example(const Field& field = Field::rationals());

/// Degenerate sanity case: the group algebra of C2 acting on k[x]/(x²-1)
/// by the sign flip, trivial cocycle. Everything passes and the comparison
/// map is the identity. Characteristic 2 is rejected (the action would
/// trivialize).
FixtureBundle hopf_smash_fixture(const Field& field = Field::rationals());

/// Groupoid algebra of the pair groupoid on n objects (2 <= n <= 4) acting
/// on k^n, trivial cocycle hk·1. A positive instance whose left counital
/// subalgebra has dimension n > 1.
FixtureBundle groupoid_fixture(std::size_t n, const Field& field = Field::rationals());

/// Lookup by CLI name: "paper8", "smash-c2", "groupoid-2".."groupoid-4".
FixtureBundle fixture_by_name(const std::string& name,
                              const Field& field = Field::rationals());

/// Runs the full verification pipeline (weak Hopf axioms, conditions
/// (1)-(24), inverse solves, both constructions, comparison) and returns
/// the flat verdict map keyed like FixtureBundle::expected.
std::map<std::string, bool> scan_fixture(const FixtureBundle& b);

}  // namespace weakcp
