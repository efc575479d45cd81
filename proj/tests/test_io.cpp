#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weakcp/io.hpp"

using namespace weakcp;

TEST_CASE("serialize/parse is the identity on every fixture") {
  for (const char* name : {"paper8", "smash-c2", "groupoid-2", "groupoid-3"}) {
    CAPTURE(name);
    Instance inst = instance_from_fixture(fixture_by_name(name));
    std::string text = serialize_instance(inst);
    Instance back = parse_instance_string(text);
    CHECK(back == inst);
    // Serialization is canonical: a second round emits identical bytes.
    CHECK(serialize_instance(back) == text);
  }
}

TEST_CASE("built products round-trip through the product block") {
  for (const char* name : {"paper8", "smash-c2"}) {
    CAPTURE(name);
    FixtureBundle b = fixture_by_name(name);
    Instance inst = instance_from_fixture(b);
    CrossedProduct bb = build_bb(b.measuring, b.cocycle);
    inst.product = product_block_of(bb, b.hopf.space());
    Instance back = parse_instance_string(serialize_instance(inst));
    CHECK(back == inst);
    REQUIRE(back.product.has_value());
    CHECK(back.product->mult == bb.mult);
    CHECK(back.product->delta == bb.delta);

    CrossedProduct ag = build_ag(b.measuring, induce(b.cocycle));
    inst.product = product_block_of(ag, b.hopf.space());
    CHECK(parse_instance_string(serialize_instance(inst)) == inst);
  }
}

TEST_CASE("prime-field instances round-trip") {
  Instance inst = instance_from_fixture(fixture_by_name("paper8", Field::prime(7)));
  Instance back = parse_instance_string(serialize_instance(inst));
  CHECK(back == inst);
  CHECK(back.field == Field::prime(7));
}

TEST_CASE("digests are deterministic and separate distinct instances") {
  Instance a = instance_from_fixture(fixture_by_name("paper8"));
  Instance b = instance_from_fixture(fixture_by_name("smash-c2"));
  CHECK(instance_digest(a) == instance_digest(a));
  CHECK(instance_digest(a) != instance_digest(b));
  CHECK(instance_digest(a).size() == 16);
}

TEST_CASE("assemblers reconstruct the library objects") {
  FixtureBundle b = fixture_by_name("paper8");
  Instance inst = instance_from_fixture(b);
  CHECK(inst.assemble_hopf() == b.hopf);
  CHECK(inst.assemble_measuring() == b.measuring);
  CHECK(inst.assemble_cocycle() == b.cocycle);
}

TEST_CASE("parse errors carry line numbers") {
  auto bad = [](const std::string& text, std::size_t line) {
    try {
      parse_instance_string(text);
      FAIL_CHECK("expected a parse error");
    } catch (const parse_error& e) {
      CHECK(e.line() == line);
    }
  };
  bad("nonsense\n", 1);
  bad("weakcp-instance v1\nfield real\n", 2);
  bad("weakcp-instance v1\nfield prime 6\n", 2);
  // Scalars must be integers or fractions; decimals are rejected at the line.
  std::string base = "weakcp-instance v1\nfield rational\nbegin hopf\ndim 1\nbasis e\n"
                     "begin unit\n0 3.5\n";
  bad(base, 7);
  std::string floaty = "weakcp-instance v1\nfield rational\nbegin hopf\ndim 1\nbasis e\n"
                       "begin unit\n0 1e3\n";
  bad(floaty, 7);
}

TEST_CASE("structural parse errors are rejected") {
  FixtureBundle b = fixture_by_name("smash-c2");
  std::string good = serialize_instance(instance_from_fixture(b));

  // Out-of-range index.
  std::string broken = good;
  auto pos = broken.find("begin counit");
  REQUIRE(pos != std::string::npos);
  broken.insert(pos, "7 1\n");  // inside the preceding comult block: row 7 of 2
  CHECK_THROWS_AS(parse_instance_string(broken), parse_error);

  // Truncated file.
  CHECK_THROWS_AS(parse_instance_string(good.substr(0, good.size() / 2)), parse_error);

  // Wrong basis arity.
  std::string wrong = good;
  auto bpos = wrong.find("basis 1 g");
  REQUIRE(bpos != std::string::npos);
  wrong.replace(bpos, 9, "basis 1");
  CHECK_THROWS_AS(parse_instance_string(wrong), parse_error);

  // Fraction in a prime field.
  Instance p = instance_from_fixture(fixture_by_name("smash-c2", Field::prime(5)));
  std::string ptext = serialize_instance(p);
  auto upos = ptext.find("begin mult");
  REQUIRE(upos != std::string::npos);
  ptext.insert(upos, "");  // keep ptext valid; now inject a fraction value
  auto vpos = ptext.find("0 0 1\n");
  REQUIRE(vpos != std::string::npos);
  ptext.replace(vpos, 6, "0 0 1/2\n");
  CHECK_THROWS_AS(parse_instance_string(ptext), parse_error);
}

TEST_CASE("duplicate basis labels are rejected") {
  std::string text =
      "weakcp-instance v1\nfield rational\nbegin hopf\ndim 2\nbasis e e\n";
  CHECK_THROWS_AS(parse_instance_string(text), parse_error);
}

TEST_CASE("comments and blank lines are ignored") {
  Instance inst = instance_from_fixture(fixture_by_name("smash-c2"));
  std::string text = serialize_instance(inst);
  std::string commented = "# header comment\n\n" + text + "\n# trailing\n";
  auto pos = commented.find("begin algebra");
  commented.insert(pos, "# mid-file comment\n\n");
  CHECK(parse_instance_string(commented) == inst);
}

TEST_CASE("machine reports are stable and carry witnesses") {
  FixtureBundle b = fixture_by_name("paper8");
  Instance inst = instance_from_fixture(b);
  ReportDocument doc;
  doc.digest = instance_digest(inst);
  doc.report = check_equiv_10_12(b.measuring, b.cocycle);
  std::string m1 = render_machine(doc);
  std::string m2 = render_machine(doc);
  CHECK(m1 == m2);
  CHECK(m1.find("COND 10 FAIL witness=5,0") != std::string::npos);
  CHECK(m1.find("SUMMARY FAIL checked=4 failed=3") != std::string::npos);
  std::string t = render_text(doc);
  CHECK(t.find("lhs = (1, 0), rhs = (0, 0)") != std::string::npos);
}
