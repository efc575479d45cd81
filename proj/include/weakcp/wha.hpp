#pragma once

#include <optional>
#include <vector>

#include "weakcp/report.hpp"

namespace weakcp {

/// Finite-dimensional algebra given by structure constants: the product of
/// basis vectors i and j is the stored vector product(i, j). Construction
/// checks shapes only; associativity and the unit laws are verified by
/// verify_algebra / verify_weak_bialgebra and reported, never assumed.
struct StructuredAlgebra {
  Space space;
  Field field = Field::rationals();
  std::vector<Vec> mult;  // dim*dim entries, row-major (i*dim + j)
  Vec unit;

  StructuredAlgebra(Space s, const Field& f, std::vector<Vec> m, Vec u);
  const Vec& product(std::size_t i, std::size_t j) const;
  std::size_t dim() const { return space->dim(); }

  bool operator==(const StructuredAlgebra& o) const;
};

/// Bilinear extension of the structure constants.
Vec multiply(const StructuredAlgebra& a, const Vec& x, const Vec& y);

/// The product as a map space⊗space -> space.
LinMap mult_map(const StructuredAlgebra& a);

/// "assoc" and "unit" verdicts for a structure-constant algebra.
ConditionReport verify_algebra(const StructuredAlgebra& a);

/// Finite-dimensional coalgebra by structure constants: comult(i) lives in
/// space⊗space (row-major indexing), counit(i) is a scalar.
struct StructuredCoalgebra {
  Space space;
  Space square;  // tensor_space(space, space)
  Field field = Field::rationals();
  std::vector<Vec> comult;
  std::vector<Scalar> counit;

  StructuredCoalgebra(Space s, const Field& f, std::vector<Vec> cm,
                      std::vector<Scalar> cu);
  std::size_t dim() const { return space->dim(); }

  bool operator==(const StructuredCoalgebra& o) const;
};

LinMap comult_map(const StructuredCoalgebra& c);

/// Nonzero Sweedler terms of Δ(e_i): triples (first leg, second leg, coefficient).
struct SweedlerPair {
  std::size_t a, b;
  Scalar coeff;
};
std::vector<SweedlerPair> sweedler_pairs(const StructuredCoalgebra& c, std::size_t i);

/// Nonzero terms of (Δ⊗id)Δ(e_i). Under coassociativity this is the
/// canonical three-leg expansion; with unverified input it is simply the
/// left-nested one.
struct SweedlerTriple {
  std::size_t a, b, c;
  Scalar coeff;
};
std::vector<SweedlerTriple> sweedler_triples(const StructuredCoalgebra& c, std::size_t i);

/// Δ extended linearly to an arbitrary vector.
Vec comult_vec(const StructuredCoalgebra& c, const Vec& v);
/// ε extended linearly.
Scalar counit_vec(const StructuredCoalgebra& c, const Vec& v);

/// Raw weak-bialgebra data: an algebra and a coalgebra on one space.
struct WeakBialgebra {
  StructuredAlgebra alg;
  StructuredCoalgebra coalg;

  WeakBialgebra(StructuredAlgebra a, StructuredCoalgebra c);
  const Space& space() const { return alg.space; }
  const Field& field() const { return alg.field; }
  std::size_t dim() const { return alg.dim(); }

  bool operator==(const WeakBialgebra& o) const;
};

/// Verdicts: assoc, unit, coassoc, counit, delta-mult (Δ is multiplicative),
/// eq1 (the weak compatibility of Δ² of the unit), eq2 (the weak counit
/// multiplicativity). Each failure carries a witness tuple.
ConditionReport verify_weak_bialgebra(const WeakBialgebra& b);

enum class Side { Left, Right };

/// The canonical idempotent: on the left, h ↦ ε(1⁽¹⁾h) 1⁽²⁾; on the right,
/// h ↦ 1⁽¹⁾ ε(h1⁽²⁾). Throws if the computed map is not idempotent, which
/// signals corrupt input.
LinMap canonical_projector(const WeakBialgebra& b, Side side);

/// Image of the canonical projector, verified closed under multiplication
/// and containing the unit (throws with a witness pair otherwise).
Subspace counital_subalgebra(const WeakBialgebra& b, Side side);

struct WeakHopfAlgebra {
  WeakBialgebra wb;
  LinMap antipode;
  LinMap antipode_inv;

  const Space& space() const { return wb.space(); }
  const Field& field() const { return wb.field(); }
  std::size_t dim() const { return wb.dim(); }

  bool operator==(const WeakHopfAlgebra& o) const;
};

/// Builds a weak Hopf algebra value from raw data. The inverse antipode is
/// computed by matrix inversion when not supplied (throws if singular);
/// a supplied inverse is cross-checked against S.
WeakHopfAlgebra make_weak_hopf(WeakBialgebra wb, LinMap antipode,
                               std::optional<LinMap> antipode_inv = std::nullopt);

/// Antipode axioms and the standard consequences: antipode-left
/// (h⁽¹⁾S(h⁽²⁾) equals the left projection), antipode-right,
/// antipode-compat (S(h⁽¹⁾)h⁽²⁾S(h⁽³⁾) = S(h)), antipode-bijective, plus
/// antipode-antimult / -anticomult / -unit / -counit.
ConditionReport verify_antipode(const WeakHopfAlgebra& h);

/// Full pipeline used by the CLI: bialgebra report, antipode report, and
/// the constructed value when everything passed (including a computable
/// inverse antipode).
struct HopfVerification {
  ConditionReport bialgebra;
  ConditionReport antipode;
  std::optional<WeakHopfAlgebra> hopf;
};

HopfVerification verify_weak_hopf(const WeakBialgebra& wb, const LinMap& antipode,
                                  std::optional<LinMap> antipode_inv = std::nullopt);

}  // namespace weakcp
