#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "weakcp/fixtures.hpp"

using namespace weakcp;

namespace {

// Relabels and reorders the basis of a weak bialgebra by a permutation
// (new index = perm[old index]); used to check that verification verdicts
// do not depend on basis enumeration order.
WeakBialgebra permuted(const WeakBialgebra& b, const std::vector<std::size_t>& perm) {
  std::size_t n = b.dim();
  const Field& f = b.field();
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[perm[i]] = b.space()->label(i);
  Space s = make_space(labels);
  Space ss = tensor_space(s, s);

  auto push_vec = [&](const Vec& v) {
    Vec out(s, f);
    for (std::size_t i = 0; i < n; ++i)
      if (!v[i].is_zero()) out.set(perm[i], v[i]);
    return out;
  };
  auto push_tensor = [&](const Vec& v) {
    Vec out(ss, f);
    for (std::size_t p = 0; p < v.dim(); ++p)
      if (!v[p].is_zero())
        out.set(tensor_index(perm[p / n], perm[p % n], n), v[p]);
    return out;
  };

  std::vector<Vec> mult(n * n, Vec(s, f));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      mult[perm[i] * n + perm[j]] = push_vec(b.alg.product(i, j));
  StructuredAlgebra alg(s, f, std::move(mult), push_vec(b.alg.unit));

  std::vector<Vec> comult(n, Vec(ss, f));
  std::vector<Scalar> counit(n, Scalar::zero(f));
  for (std::size_t i = 0; i < n; ++i) {
    comult[perm[i]] = push_tensor(b.coalg.comult[i]);
    counit[perm[i]] = b.coalg.counit[i];
  }
  StructuredCoalgebra coalg(s, f, std::move(comult), std::move(counit));
  return WeakBialgebra(std::move(alg), std::move(coalg));
}

}  // namespace

TEST_CASE("paper instance satisfies all weak bialgebra and antipode axioms") {
  FixtureBundle b = paper_example();
  ConditionReport wb = verify_weak_bialgebra(b.hopf.wb);
  CHECK(wb.all_passed());
  for (const char* id : {"assoc", "unit", "coassoc", "counit", "delta-mult", "eq1", "eq2"})
    CHECK(wb.at(id).passed());
  ConditionReport an = verify_antipode(b.hopf);
  CHECK(an.all_passed());
  // The antipode is an involution here, so it equals its inverse.
  CHECK(b.hopf.antipode == b.hopf.antipode_inv);
}

TEST_CASE("group algebra of C2 is a (weak) Hopf algebra with grouplike unit") {
  FixtureBundle b = hopf_smash_fixture();
  CHECK(verify_weak_bialgebra(b.hopf.wb).all_passed());
  CHECK(verify_antipode(b.hopf).all_passed());
  Vec d1 = comult_vec(b.hopf.wb.coalg, b.hopf.wb.alg.unit);
  CHECK(d1 == tensor_vec(b.hopf.wb.alg.unit, b.hopf.wb.alg.unit,
                         b.hopf.wb.coalg.square));
}

TEST_CASE("projector tables match the closed formulas on the 8-dim instance") {
  FixtureBundle b = paper_example();
  const Field f = b.hopf.field();
  const Space& H = b.hopf.space();
  LinMap piL = canonical_projector(b.hopf.wb, Side::Left);
  LinMap piR = canonical_projector(b.hopf.wb, Side::Right);

  auto lam11 = [&](long sub10, long sub01) {  // l_{sub10,sub01}^{11}
    Vec v(H, f);
    v.set(0, Scalar(f, sub10));
    v.set(1, Scalar(f, sub10));
    v.set(2, Scalar(f, sub01));
    v.set(3, Scalar(f, sub01));
    return v;
  };
  auto lam11up = [&](long sup10, long sup01) {  // l_{11}^{sup10,sup01}
    Vec v(H, f);
    v.set(0, Scalar(f, sup10));
    v.set(1, Scalar(f, sup01));
    v.set(2, Scalar(f, sup10));
    v.set(3, Scalar(f, sup01));
    return v;
  };

  for (std::size_t i = 0; i < 8; ++i) {
    bool is_g = i >= 4;
    long a = (i % 4) / 2 == 0, bpar = (i % 4) / 2 == 1;
    long c = i % 2 == 0, d = i % 2 == 1;
    // Left: l ↦ l_{ac,bd}^{11},  G ↦ l_{ad,bc}^{11}
    Vec expL = is_g ? lam11(a * d, bpar * c) : lam11(a * c, bpar * d);
    // Right: l ↦ l_{11}^{ac,bd},  G ↦ l_{11}^{bc,ad}
    Vec expR = is_g ? lam11up(bpar * c, a * d) : lam11up(a * c, bpar * d);
    CHECK(piL.column(i) == expL);
    CHECK(piR.column(i) == expR);
  }
}

TEST_CASE("the canonical projectors are idempotent matrices") {
  for (FixtureBundle b : {paper_example(), hopf_smash_fixture(), groupoid_fixture(3)}) {
    LinMap piL = canonical_projector(b.hopf.wb, Side::Left);
    LinMap piR = canonical_projector(b.hopf.wb, Side::Right);
    CHECK(piL.compose(piL) == piL);
    CHECK(piR.compose(piR) == piR);
  }
}

TEST_CASE("counital subalgebras of the paper instance are two-dimensional") {
  FixtureBundle b = paper_example();
  const Field f = b.hopf.field();
  const Space& H = b.hopf.space();
  Subspace hl = counital_subalgebra(b.hopf.wb, Side::Left);
  Subspace hr = counital_subalgebra(b.hopf.wb, Side::Right);
  REQUIRE(hl.dim() == 2);
  REQUIRE(hr.dim() == 2);
  CHECK(hl.basis()[0] == Vec::basis(H, f, 0) + Vec::basis(H, f, 1));  // l10^11
  CHECK(hl.basis()[1] == Vec::basis(H, f, 2) + Vec::basis(H, f, 3));  // l01^11
  CHECK(hr.basis()[0] == Vec::basis(H, f, 0) + Vec::basis(H, f, 2));  // l11^10
  CHECK(hr.basis()[1] == Vec::basis(H, f, 1) + Vec::basis(H, f, 3));  // l11^01
}

TEST_CASE("on a genuine Hopf algebra the left projector is unit∘counit") {
  FixtureBundle b = hopf_smash_fixture();
  LinMap piL = canonical_projector(b.hopf.wb, Side::Left);
  for (std::size_t i = 0; i < b.hopf.dim(); ++i)
    CHECK(piL.column(i) == b.hopf.wb.alg.unit.scaled(b.hopf.wb.coalg.counit[i]));
  CHECK(counital_subalgebra(b.hopf.wb, Side::Left).dim() == 1);
}

TEST_CASE("the projected-first-leg identity holds on every basis vector") {
  for (FixtureBundle b : {paper_example(), hopf_smash_fixture(), groupoid_fixture(3)}) {
    LinMap piL = canonical_projector(b.hopf.wb, Side::Left);
    for (std::size_t i = 0; i < b.hopf.dim(); ++i) {
      Vec acc(b.hopf.space(), b.hopf.field());
      for (const auto& [h1, h2, w] : sweedler_pairs(b.hopf.wb.coalg, i))
        acc.add_scaled(multiply(b.hopf.wb.alg, piL.column(h1),
                                Vec::basis(b.hopf.space(), b.hopf.field(), h2)),
                       w);
      CHECK(acc == Vec::basis(b.hopf.space(), b.hopf.field(), i));
    }
  }
}

TEST_CASE("the two counital subalgebras have equal dimension on all fixtures") {
  for (FixtureBundle b :
       {paper_example(), hopf_smash_fixture(), groupoid_fixture(2), groupoid_fixture(4)})
    CHECK(counital_subalgebra(b.hopf.wb, Side::Left).dim() ==
          counital_subalgebra(b.hopf.wb, Side::Right).dim());
}

TEST_CASE("a planted multiplication defect is detected with a witness") {
  FixtureBundle b = paper_example();
  WeakBialgebra broken = b.hopf.wb;
  broken.alg.mult[0] = -broken.alg.mult[0];  // flip the sign of l10^10 * l10^10
  ConditionReport rep = verify_weak_bialgebra(broken);
  CHECK_FALSE(rep.all_passed());
  bool assoc_or_dmult = rep.at("assoc").failed() || rep.at("delta-mult").failed();
  CHECK(assoc_or_dmult);
  for (const auto& r : rep.results())
    if (r.failed()) REQUIRE(r.witness.has_value());
}

TEST_CASE("replacing the antipode by the identity breaks the left axiom") {
  FixtureBundle b = paper_example();
  const Field f = b.hopf.field();
  WeakHopfAlgebra broken{b.hopf.wb, LinMap::identity(b.hopf.space(), f),
                         LinMap::identity(b.hopf.space(), f)};
  ConditionReport rep = verify_antipode(broken);
  REQUIRE(rep.at("antipode-left").failed());
  REQUIRE(rep.at("antipode-left").witness.has_value());

  // G10^01 is a violation too: h⁽¹⁾h⁽²⁾ lands in the unit component but
  // differs from the left projection of h.
  LinMap piL = canonical_projector(b.hopf.wb, Side::Left);
  Vec acc(b.hopf.space(), f);
  for (const auto& [h1, h2, w] : sweedler_pairs(b.hopf.wb.coalg, 5))
    acc.add_scaled(multiply(b.hopf.wb.alg, Vec::basis(b.hopf.space(), f, h1),
                            Vec::basis(b.hopf.space(), f, h2)),
                   w);
  CHECK(acc != piL.column(5));
}

TEST_CASE("a singular antipode is rejected and reported") {
  FixtureBundle b = paper_example();
  CHECK_THROWS_AS(make_weak_hopf(b.hopf.wb, LinMap(b.hopf.space(), b.hopf.space(),
                                                   b.hopf.field())),
                  error);
  HopfVerification v = verify_weak_hopf(
      b.hopf.wb, LinMap(b.hopf.space(), b.hopf.space(), b.hopf.field()));
  CHECK_FALSE(v.hopf.has_value());
  CHECK(v.antipode.at("antipode-bijective").failed());
}

TEST_CASE("a wrong supplied inverse antipode fails the bijectivity check") {
  FixtureBundle b = paper_example();
  HopfVerification v =
      verify_weak_hopf(b.hopf.wb, b.hopf.antipode,
                       LinMap(b.hopf.space(), b.hopf.space(), b.hopf.field()));
  CHECK_FALSE(v.hopf.has_value());
  CHECK(v.antipode.at("antipode-bijective").failed());
}

TEST_CASE("verification verdicts do not depend on basis enumeration order") {
  std::mt19937 rng(31337);
  FixtureBundle b = paper_example();
  std::vector<std::size_t> perm(b.hopf.dim());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    WeakBialgebra shuffled = permuted(b.hopf.wb, perm);
    ConditionReport rep = verify_weak_bialgebra(shuffled);
    CHECK(rep.all_passed());
    CHECK(counital_subalgebra(shuffled, Side::Left).dim() == 2);
    CHECK(counital_subalgebra(shuffled, Side::Right).dim() == 2);
  }
}

TEST_CASE("algebra/coalgebra dimension mismatch is rejected at construction") {
  FixtureBundle p = paper_example();
  FixtureBundle s = hopf_smash_fixture();
  CHECK_THROWS_AS(WeakBialgebra(p.hopf.wb.alg, s.hopf.wb.coalg), error);
}
