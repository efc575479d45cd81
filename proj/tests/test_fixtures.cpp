#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weakcp/fixtures.hpp"

using namespace weakcp;

namespace {

void check_expected(const FixtureBundle& b) {
  auto actual = scan_fixture(b);
  for (const auto& [id, want] : b.expected) {
    CAPTURE(id);
    auto it = actual.find(id);
    REQUIRE(it != actual.end());
    CHECK(it->second == want);
  }
  for (const auto& [id, got] : actual) {
    CAPTURE(id);
    CHECK(b.expected.count(id) == 1);
  }
}

}  // namespace

TEST_CASE("paper8 matches its expected verdict map exactly") {
  check_expected(paper_example());
}

TEST_CASE("smash-c2 matches its expected verdict map exactly") {
  check_expected(hopf_smash_fixture());
}

TEST_CASE("groupoid-2 matches its expected verdict map exactly") {
  check_expected(groupoid_fixture(2));
}

TEST_CASE("groupoid-3 matches its expected verdict map exactly") {
  check_expected(groupoid_fixture(3));
}

TEST_CASE("paper8 spot values from the defining tables") {
  FixtureBundle b = paper_example();
  const Field f = b.hopf.field();
  const Space& H = b.hopf.space();
  auto kv = [&](long x, long y) {
    Vec v(b.algebra.space, f);
    v.set(0, Scalar(f, x));
    v.set(1, Scalar(f, y));
    return v;
  };

  // Counit of G10^01 is 1; of G10^10 is 0.
  CHECK(b.hopf.wb.coalg.counit[5] == Scalar::one(f));
  CHECK(b.hopf.wb.coalg.counit[4] == Scalar::zero(f));

  // l10^10 is idempotent.
  CHECK(b.hopf.wb.alg.product(0, 0) == Vec::basis(H, f, 0));

  // Unit is the sum of the four unit-component basis vectors.
  Vec unit(H, f);
  for (std::size_t i = 0; i < 4; ++i) unit.set(i, Scalar::one(f));
  CHECK(b.hopf.wb.alg.unit == unit);

  // Cocycle samples: sigma(l10^10, G10^10) = 0 and sigma(G10^01, G10^10) = (1,0).
  CHECK(b.cocycle.at_basis(0, 4) == kv(0, 0));
  CHECK(b.cocycle.at_basis(5, 4) == kv(1, 0));

  // Action samples: G10^01 fixes (1,0); l10^10 fixes (1,0) and kills (0,1).
  CHECK(b.measuring.act_basis(5, 0) == kv(1, 0));
  CHECK(b.measuring.act_basis(0, 0) == kv(1, 0));
  CHECK(b.measuring.act_basis(0, 1) == kv(0, 0));
}

TEST_CASE("paper8 is field-agnostic, including characteristic 2") {
  for (const Field& f : {Field::prime(2), Field::prime(3), Field::prime(5)}) {
    FixtureBundle b = paper_example(f);
    CHECK(verify_weak_bialgebra(b.hopf.wb).all_passed());
    CHECK(verify_antipode(b.hopf).all_passed());
    CHECK(check_measuring(b.measuring).all_passed());
    CHECK(check_bb_cocycle(b.cocycle).all_passed());
    ConditionReport equiv = check_equiv_10_12(b.measuring, b.cocycle);
    CHECK(equiv.at("10").failed());
    CHECK(equiv.at("equiv-agree").passed());
    CHECK(invert_bb(b.measuring, b.cocycle).inverse.has_value());
  }
}

TEST_CASE("full scans over small prime fields match the rational verdicts") {
  for (const Field& f : {Field::prime(3), Field::prime(5)}) {
    FixtureBundle b = paper_example(f);
    auto actual = scan_fixture(b);
    for (const auto& [id, want] : b.expected) {
      CAPTURE(id);
      CHECK(actual.at(id) == want);
    }
  }
}

TEST_CASE("the smash fixture rejects characteristic 2") {
  CHECK_THROWS_AS(hopf_smash_fixture(Field::prime(2)), error);
  CHECK(verify_weak_bialgebra(hopf_smash_fixture(Field::prime(3)).hopf.wb).all_passed());
}

TEST_CASE("groupoid fixture dimensions and identity-arrow action") {
  FixtureBundle b = groupoid_fixture(2);
  CHECK(b.hopf.dim() == 4);
  CHECK(counital_subalgebra(b.hopf.wb, Side::Left).dim() == 2);
  const Field f = b.hopf.field();
  // The identity arrow at object 0 fixes e0 and kills e1.
  CHECK(b.measuring.act_basis(0, 0) == Vec::basis(b.algebra.space, f, 0));
  CHECK(b.measuring.act_basis(0, 1).is_zero());
  ConditionReport equiv = check_equiv_10_12(b.measuring, b.cocycle);
  CHECK(equiv.at("10").passed());
}

TEST_CASE("groupoid range errors and the n=4 instance") {
  CHECK_THROWS_AS(groupoid_fixture(1), error);
  CHECK_THROWS_AS(groupoid_fixture(5), error);
  FixtureBundle b = groupoid_fixture(4);
  CHECK(b.hopf.dim() == 16);
  CHECK(verify_weak_bialgebra(b.hopf.wb).all_passed());
  CHECK(verify_antipode(b.hopf).all_passed());
  CHECK(counital_subalgebra(b.hopf.wb, Side::Left).dim() == 4);
  CHECK(nabla(b.measuring).rank() == 16);
}

TEST_CASE("fixture lookup by name") {
  CHECK(fixture_by_name("paper8").name == "paper8");
  CHECK(fixture_by_name("smash-c2").name == "smash-c2");
  CHECK(fixture_by_name("groupoid-3").name == "groupoid-3");
  CHECK_THROWS_AS(fixture_by_name("groupoid-9"), error);
  CHECK_THROWS_AS(fixture_by_name("unknown"), error);
}
