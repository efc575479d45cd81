#pragma once

#include <optional>

#include "weakcp/wha.hpp"

namespace weakcp {

/// An action table ρ: H⊗A -> A, written h·a. Whether it is a measuring
/// (conditions (1)-(4)) is decided by check_measuring, never assumed.
struct Measuring {
  WeakHopfAlgebra hopf;
  StructuredAlgebra algebra;
  std::vector<Vec> action;  // dimH*dimA entries, row-major (h*dimA + a)

  Measuring(WeakHopfAlgebra h, StructuredAlgebra a, std::vector<Vec> act);
  const Vec& act_basis(std::size_t h, std::size_t a) const;

  bool operator==(const Measuring& o) const;
};

/// Bilinear extension of the action.
Vec act(const Measuring& m, const Vec& h, const Vec& a);

/// Which tensor product the cocycle is declared on: BB tables live on the
/// balanced product over the right counital subalgebra (balance is a
/// checkable condition), AG tables on the plain tensor square.
enum class CocycleVariant { BB, AG };

std::string to_string(CocycleVariant v);

/// σ or ς as a basis-indexed table H⊗H -> A.
struct CocycleTable {
  Measuring measuring;
  std::vector<Vec> table;  // dimH*dimH entries, row-major
  CocycleVariant variant;

  CocycleTable(Measuring m, std::vector<Vec> t, CocycleVariant v);
  const Vec& at_basis(std::size_t i, std::size_t j) const;

  bool operator==(const CocycleTable& o) const;
};

/// Bilinear extension of the cocycle table.
Vec cocycle_eval(const CocycleTable& c, const Vec& h, const Vec& k);

/// Inverse cocycle σ̄ (BB: balanced over the left counital subalgebra) or
/// ς̄ (AG).
struct CocycleInverse {
  std::vector<Vec> table;
  CocycleVariant variant;
};

/// Conditions (1)-(4) for the action, plus the composite-action identity
/// h·(k·a) = hk·a for h in the product of the two counital subalgebras.
ConditionReport check_measuring(const Measuring& m);

/// BB cocycle: balance-R, the normal-cocycle conditions (5)-(8), the
/// twisted module condition (9), and the normalization identity
/// σ(h,k) = σ(h⁽¹⁾,k⁽¹⁾)(h⁽²⁾k⁽²⁾·1) (id "sigma-normal-form").
ConditionReport check_bb_cocycle(const CocycleTable& c);

/// The three equivalent assertions (10), (11), (12) plus an "equiv-agree"
/// verdict recording that the three agree on this instance.
ConditionReport check_equiv_10_12(const Measuring& m, const CocycleTable& c);

/// AG cocycle: (11), (17)-(22), normality ς(1⊗h) = ς(h⊗1) = h·1, and the
/// normalization identity (h⁽¹⁾k⁽¹⁾·1)ς(h⁽²⁾⊗k⁽²⁾) = ς(h⊗k)
/// (id "varsigma-normal-form").
ConditionReport check_ag_cocycle(const CocycleTable& c);

/// A crossed product: carrier with multiplication table, unit and the
/// right comodule map δ: carrier -> carrier⊗H. The embedded report records
/// assoc / unit / comodule verdicts (and, for BB, well-definedness); a
/// failed verdict is a legitimate outcome, not an error.
struct CrossedProduct {
  CocycleVariant provenance;
  Space carrier;
  Field field = Field::rationals();
  std::vector<Vec> mult;  // carrier-dim^2 entries, row-major
  Vec unit;
  LinMap delta;  // carrier -> carrier⊗H
  std::optional<QuotientSpace> quotient;  // BB carrier data
  std::optional<LinMap> incl, retr;       // AG carrier data (image of ∇)
  ConditionReport report;

  CrossedProduct(CocycleVariant prov, Space carrier_space, const Field& f,
                 const Space& hopf_space);
  const Vec& product(std::size_t i, std::size_t j) const;
  Vec multiply_vec(const Vec& x, const Vec& y) const;
  std::size_t dim() const { return carrier->dim(); }
};

/// The quotient-based construction on A⊗H modulo a·l⊗h - a⊗lh, with
/// product (a⊗h)(b⊗k) = a(h⁽¹⁾·b)σ(h⁽²⁾,k⁽¹⁾) ⊗ h⁽³⁾k⁽²⁾.
CrossedProduct build_bb(const Measuring& m, const CocycleTable& c);

/// The idempotent a⊗h ↦ a(h⁽¹⁾·1)⊗h⁽²⁾ on A⊗H, as a matrix.
LinMap nabla(const Measuring& m);

/// ν(1) = ∇(1_A⊗1).
Vec preunit(const Measuring& m);

/// "nabla-idempotent" verdict: ∇∘∇ = ∇ (holds whenever condition (2) does;
/// a failure is witnessed by the offending column).
ConditionReport check_nabla(const Measuring& m);

/// The image-of-∇ construction with product
/// (a×h)(b×k) = a(h⁽¹⁾·b)ς(h⁽²⁾⊗k⁽¹⁾) × h⁽³⁾k⁽²⁾. Requires ∇ idempotent
/// (throws otherwise); assoc/unit failures are recorded verdicts.
CrossedProduct build_ag(const Measuring& m, const CocycleTable& c);

/// Result of a cocycle-inverse solve: the inverse when the defining linear
/// system is consistent, plus a report with the post-hoc verification of
/// every defining item and a "unique" verdict (kernel of the homogeneous
/// system restricted by the normalization identity is zero).
struct InverseResult {
  std::optional<CocycleInverse> inverse;
  ConditionReport report;
};

/// Solves items (13)-(16) plus balance-L for σ̄ as one exact linear system.
InverseResult invert_bb(const Measuring& m, const CocycleTable& c);
InverseResult invert_bb(const Measuring& m, const CocycleTable& c,
                        const Scalar& free_seed);

/// Solves items (23)-(24) for ς̄.
InverseResult invert_ag(const Measuring& m, const CocycleTable& c);
InverseResult invert_ag(const Measuring& m, const CocycleTable& c,
                        const Scalar& free_seed);

/// Verifies an inverse table against its defining items ((13)-(16) and
/// balance-L for BB, (23)-(24) for AG).
ConditionReport check_inverse(const Measuring& m, const CocycleTable& c,
                              const CocycleInverse& inv);

/// σ̃(h,k) = (h⁽¹⁾k⁽¹⁾·1)σ̄(h⁽²⁾,k⁽²⁾). Verifies items (13)-(16) on the
/// result and throws if the verification fails (the input did not satisfy
/// items (14)-(16)).
CocycleInverse tilde_from_bar(const Measuring& m, const CocycleTable& c,
                              const CocycleInverse& bar);

/// Retags a BB table as an AG table (the canonical surjection is the
/// identity on basis-indexed tables).
CocycleTable induce(const CocycleTable& c);

/// Descends an AG table to a BB table: verifies balance over the right
/// counital subalgebra, returning nullopt (with the witness in *why) when
/// unbalanced.
std::optional<CocycleTable> descend(const CocycleTable& c,
                                    std::optional<Witness>* why = nullptr);

/// Auxiliary identities: "subalgebra-action" (k·(h·a) = kh·a for k in
/// either counital subalgebra), "varsigma-unit-absorb"
/// ((h⁽¹⁾·1)ς(h⁽²⁾⊗k) = ς(h⁽¹⁾⊗k)(h⁽²⁾·1) = ς(h⊗k)), and
/// "varsigma-counit-absorb" (ε(h⁽¹⁾l⁽¹⁾)ς(h⁽²⁾⊗l⁽²⁾) = ς(h⊗l)).
ConditionReport check_aux_lemmas(const Measuring& m, const CocycleTable& ag);

/// Outcome of the comparison between the two constructions.
struct ComparisonResult {
  enum class Status {
    Verified,            // (1)-(10) hold; ψ verified as an isomorphism
    RefusedCondition10,  // (1)-(9) hold but (10) fails: no ×-construction
    PreconditionFailed,  // some of (1)-(9) fails
    IsomorphismFailed,   // pipeline ran but an isomorphism check failed
  };
  Status status = Status::PreconditionFailed;
  ConditionReport preconditions;  // (1)-(4), balance-R, (5)-(9), (10)-(12)
  std::optional<CrossedProduct> bb, ag;
  std::optional<LinMap> psi, phi;  // ψ: A×H -> A#H and its inverse
  ConditionReport iso_report;
};

/// Builds both products and the comparison maps ψ = π∘i and φ (with
/// i∘φ∘π = ∇), verifying: mutual inverse, multiplicative, unital, left
/// A-linear, right H-colinear, and the auxiliary identities π∘∇ = π,
/// ∇∘i = i. Refuses (status RefusedCondition10) when condition (10) fails.
ComparisonResult comparison_iso(const Measuring& m, const CocycleTable& c);

}  // namespace weakcp
