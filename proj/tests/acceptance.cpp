// Acceptance suite: one criterion per numbered check, each printed as a
// single PASS/FAIL line. Everything is exact arithmetic; the two timed
// criteria also enforce their wall-clock budgets. The process exit code is
// the number of failed criteria.

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "weakcp/io.hpp"

using namespace weakcp;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void criterion(int n, bool pass, const std::string& summary,
               const std::string& detail = "") {
  std::cout << "CRITERION " << n << (pass ? " PASS" : " FAIL") << " - " << summary
            << "\n";
  if (!detail.empty()) std::cout << "  " << detail << "\n";
  if (!pass) ++g_failures;
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Vec kv(const StructuredAlgebra& a, long x, long y) {
  Vec v(a.space, a.field);
  v.set(0, Scalar(a.field, x));
  v.set(1, Scalar(a.field, y));
  return v;
}

// ---- criterion 1: the 8-dim instance is a weak Hopf algebra, < 1 s -------

void criterion1() {
  auto t0 = Clock::now();
  FixtureBundle b = paper_example();
  ConditionReport wb = verify_weak_bialgebra(b.hopf.wb);
  ConditionReport an = verify_antipode(b.hopf);
  double ms = ms_since(t0);
  bool pass = wb.all_passed() && an.all_passed() && ms < 1000.0;
  std::ostringstream d;
  d << "axiom groups: " << wb.results().size() + an.results().size()
    << " all-pass=" << (wb.all_passed() && an.all_passed()) << ", " << ms << " ms";
  criterion(1, pass, "paper instance satisfies all weak Hopf axioms exactly", d.str());
}

// ---- criterion 2: projector tables match the closed formulas -------------

void criterion2() {
  FixtureBundle b = paper_example();
  const Field f = b.hopf.field();
  const Space& H = b.hopf.space();
  LinMap piL = canonical_projector(b.hopf.wb, Side::Left);
  LinMap piR = canonical_projector(b.hopf.wb, Side::Right);
  auto lam11 = [&](long s10, long s01) {
    Vec v(H, f);
    v.set(0, Scalar(f, s10));
    v.set(1, Scalar(f, s10));
    v.set(2, Scalar(f, s01));
    v.set(3, Scalar(f, s01));
    return v;
  };
  auto lam11up = [&](long u10, long u01) {
    Vec v(H, f);
    v.set(0, Scalar(f, u10));
    v.set(1, Scalar(f, u01));
    v.set(2, Scalar(f, u10));
    v.set(3, Scalar(f, u01));
    return v;
  };
  bool pass = true;
  for (std::size_t i = 0; i < 8; ++i) {
    bool is_g = i >= 4;
    long a = (i % 4) / 2 == 0, bp = (i % 4) / 2 == 1;
    long c = i % 2 == 0, d = i % 2 == 1;
    Vec expL = is_g ? lam11(a * d, bp * c) : lam11(a * c, bp * d);
    Vec expR = is_g ? lam11up(bp * c, a * d) : lam11up(a * c, bp * d);
    pass = pass && piL.column(i) == expL && piR.column(i) == expR;
  }
  criterion(2, pass, "projector tables equal the stated closed formulas exactly");
}

// ---- criterion 3: condition suite on the paper instance ------------------

void criterion3() {
  FixtureBundle b = paper_example();
  ConditionReport meas = check_measuring(b.measuring);
  ConditionReport coc = check_bb_cocycle(b.cocycle);
  ConditionReport equiv = check_equiv_10_12(b.measuring, b.cocycle);
  InverseResult inv = invert_bb(b.measuring, b.cocycle);

  bool rho_ok = true;
  for (const char* id : {"1", "2", "3", "4"}) rho_ok = rho_ok && meas.at(id).passed();
  bool sigma_ok = true;
  for (const char* id : {"balance-R", "5", "6", "7", "8", "9"})
    sigma_ok = sigma_ok && coc.at(id).passed();
  bool inv_ok = inv.inverse.has_value();
  for (const char* id : {"13", "14", "15", "16"})
    inv_ok = inv_ok && inv.report.at(id).passed();
  bool fail_ok = equiv.at("10").failed() && equiv.at("11").failed() &&
                 equiv.at("12").failed() && equiv.at("equiv-agree").passed();

  // Machine-checkable witness for (10): emitted indices re-evaluate to
  // unequal sides from the instance tables alone.
  bool witness_ok = false;
  std::string machine_line;
  if (equiv.at("10").witness) {
    const Witness& w = *equiv.at("10").witness;
    ReportDocument doc;
    doc.digest = instance_digest(instance_from_fixture(b));
    doc.report = equiv;
    machine_line = render_machine(doc);
    Subspace hl = counital_subalgebra(b.hopf.wb, Side::Left);
    if (w.indices.size() == 2 && w.indices[0] == 5 && w.indices[1] == 0) {
      Vec h = Vec::basis(b.hopf.space(), b.hopf.field(), w.indices[0]);
      const Vec& l = hl.basis()[w.indices[1]];
      Vec lhs = act(b.measuring, h, act(b.measuring, l, b.algebra.unit));
      Vec rhs = act(b.measuring, multiply(b.hopf.wb.alg, h, l), b.algebra.unit);
      witness_ok = lhs != rhs && lhs == w.lhs && rhs == w.rhs &&
                   lhs == kv(b.algebra, 1, 0) && rhs == kv(b.algebra, 0, 0) &&
                   machine_line.find("COND 10 FAIL witness=5,0") != std::string::npos;
    }
  }
  bool pass = rho_ok && sigma_ok && inv_ok && fail_ok && witness_ok;
  std::ostringstream d;
  d << "rho(1-4)=" << rho_ok << " sigma(5-9)=" << sigma_ok << " inverse(13-16)="
    << inv_ok << " (10)-(12) fail+agree=" << fail_ok << " witness=" << witness_ok;
  criterion(3, pass, "paper conditions: (1)-(9) pass, inverse exists, (10)-(12) fail",
            d.str());
}

// ---- criterion 4: negative direction of the main comparison --------------

void criterion4() {
  FixtureBundle b = paper_example();
  CrossedProduct bb = build_bb(b.measuring, b.cocycle);
  bool bb_ok = bb.dim() == 8 && bb.report.at("assoc").passed() &&
               bb.report.at("unit").passed() && bb.report.at("comodule").passed() &&
               bb.report.at("well-defined").passed();

  CocycleTable ag_table = induce(b.cocycle);
  CrossedProduct ag = build_ag(b.measuring, ag_table);
  std::size_t nabla_rank = nabla(b.measuring).rank();
  bool carrier_ok = ag.dim() == 8 && ag.dim() == nabla_rank;

  bool ag_table_fails =
      ag.report.at("assoc").failed() || ag.report.at("unit").failed();

  bool pass = bb_ok && carrier_ok && ag_table_fails;
  std::ostringstream d;
  d << "bb(8-dim, assoc, unit, comodule)=" << bb_ok << " ag-carrier(8=rank nabla)="
    << carrier_ok << " ag-table-fails-assoc-or-unit=" << ag_table_fails;
  if (!ag_table_fails) {
    ConditionReport agc = check_ag_cocycle(ag_table);
    d << "\n  note: exact computation shows the x-product table on Im(nabla) is "
         "associative and unital on this instance;"
      << "\n  the construction is still not a certified crossed product because its "
         "defining condition set fails (condition (11) verdict: "
      << (agc.at("11").failed() ? "FAIL" : "PASS")
      << "); see the negative-direction confirmation in criterion 3 and the "
         "compare command.";
  }
  criterion(4, pass,
            "negative direction: bb builds and verifies; ag table fails assoc/unit",
            d.str());
}

// ---- criterion 5: positive direction on smash and groupoid fixtures ------

bool positive_pipeline(const FixtureBundle& b, std::string& why) {
  ConditionReport meas = check_measuring(b.measuring);
  ConditionReport coc = check_bb_cocycle(b.cocycle);
  ConditionReport equiv = check_equiv_10_12(b.measuring, b.cocycle);
  InverseResult ibb = invert_bb(b.measuring, b.cocycle);
  CocycleTable ag_table = induce(b.cocycle);
  ConditionReport agc = check_ag_cocycle(ag_table);
  InverseResult iag = invert_ag(b.measuring, ag_table);

  auto need = [&](bool ok, const std::string& what) {
    if (!ok && why.empty()) why = b.name + ": " + what;
    return ok;
  };
  bool ok = true;
  for (const char* id : {"1", "2", "3", "4"})
    ok &= need(meas.at(id).passed(), std::string("condition ") + id);
  for (const char* id : {"balance-R", "5", "6", "7", "8", "9"})
    ok &= need(coc.at(id).passed(), std::string("condition ") + id);
  for (const char* id : {"10", "11", "12"})
    ok &= need(equiv.at(id).passed(), std::string("condition ") + id);
  ok &= need(ibb.inverse.has_value(), "inverse (13)-(16)");
  if (ibb.inverse)
    for (const char* id : {"13", "14", "15", "16"})
      ok &= need(ibb.report.at(id).passed(), std::string("item ") + id);
  for (const char* id : {"17", "18", "19", "20", "21", "22", "normality"})
    ok &= need(agc.at(id).passed(), std::string("condition ") + id);
  ok &= need(iag.inverse.has_value(), "inverse (23)-(24)");
  if (iag.inverse)
    for (const char* id : {"23", "24"})
      ok &= need(iag.report.at(id).passed(), std::string("item ") + id);

  CrossedProduct bb = build_bb(b.measuring, b.cocycle);
  CrossedProduct ag = build_ag(b.measuring, ag_table);
  ok &= need(bb.report.all_passed(), "bb construction");
  ok &= need(ag.report.all_passed(), "ag construction");

  ComparisonResult cmp = comparison_iso(b.measuring, b.cocycle);
  ok &= need(cmp.status == ComparisonResult::Status::Verified, "comparison status");
  if (cmp.status == ComparisonResult::Status::Verified)
    for (const char* id : {"psi-phi-id", "phi-psi-id", "psi-mult", "psi-unit",
                           "psi-left-linear", "psi-colinear", "pi-nabla", "nabla-i"})
      ok &= need(cmp.iso_report.at(id).passed(), std::string("iso check ") + id);
  return ok;
}

void criterion5() {
  auto t0 = Clock::now();
  std::string why;
  bool pass = true;
  for (FixtureBundle b :
       {groupoid_fixture(2), groupoid_fixture(3), hopf_smash_fixture()})
    pass = positive_pipeline(b, why) && pass;
  double ms = ms_since(t0);
  bool in_budget = ms < 5000.0;
  std::ostringstream d;
  d << ms << " ms";
  if (!why.empty()) d << "; first failure: " << why;
  criterion(5, pass && in_budget,
            "positive direction: full pipeline verifies on groupoid-2/3 and smash",
            d.str());
}

// ---- criterion 6: mutation suite for the construction bi-implication -----

void criterion6() {
  FixtureBundle base = paper_example();
  const Field f = base.hopf.field();
  Vec zero(base.algebra.space, f);

  auto mut_action = [&](std::size_t h, std::size_t a, Vec v) {
    std::vector<Vec> action = base.measuring.action;
    action[h * 2 + a] = std::move(v);
    Measuring m(base.hopf, base.algebra, std::move(action));
    return CocycleTable(m, base.cocycle.table, CocycleVariant::BB);
  };
  auto mut_sigma = [&](std::size_t i, std::size_t j, Vec v) {
    std::vector<Vec> table = base.cocycle.table;
    table[i * 8 + j] = std::move(v);
    return CocycleTable(base.measuring, std::move(table), CocycleVariant::BB);
  };

  // Single-entry mutations that stay inside the construction theorem's
  // frame far enough to exhibit the bi-implication: six action entries and
  // six cocycle entries, plus two all-pass cases (the original tables and
  // one mutation the conditions do not see).
  Vec ones = kv(base.algebra, 1, 1);
  std::vector<CocycleTable> cases;
  cases.push_back(base.cocycle);           // unmutated
  cases.push_back(mut_sigma(5, 4, zero));  // invisible to the conditions
  cases.push_back(mut_action(4, 0, ones));
  cases.push_back(mut_action(4, 1, ones));
  cases.push_back(mut_action(5, 0, zero));
  cases.push_back(mut_action(5, 1, ones));
  cases.push_back(mut_action(6, 1, zero));
  cases.push_back(mut_action(7, 0, ones));
  cases.push_back(mut_sigma(0, 0, zero));
  cases.push_back(mut_sigma(0, 5, zero));
  cases.push_back(mut_sigma(3, 3, zero));
  cases.push_back(mut_sigma(5, 1, zero));
  cases.push_back(mut_sigma(0, 2, ones));
  cases.push_back(mut_sigma(6, 5, ones));

  std::size_t broken = 0, agreements = 0;
  bool pass = true;
  for (const CocycleTable& c : cases) {
    ConditionReport meas = check_measuring(c.measuring);
    ConditionReport coc = check_bb_cocycle(c);
    bool conditions_ok = true;
    for (const char* id : {"1", "2", "3", "4"})
      conditions_ok = conditions_ok && meas.at(id).passed();
    for (const char* id : {"balance-R", "5", "6", "7", "8", "9"})
      conditions_ok = conditions_ok && coc.at(id).passed();
    CrossedProduct p = build_bb(c.measuring, c);
    bool built_ok = p.report.at("well-defined").passed() &&
                    p.report.at("assoc").passed() && p.report.at("unit").passed();
    if (conditions_ok == built_ok) ++agreements;
    pass = pass && conditions_ok == built_ok;
    if (!conditions_ok) ++broken;
  }
  pass = pass && broken >= 10;
  std::ostringstream d;
  d << cases.size() << " cases, " << broken << " with broken conditions, "
    << agreements << " bi-implication agreements";
  criterion(6, pass, "mutation suite instantiates the construction bi-implication",
            d.str());
}

// ---- criterion 7: inverse uniqueness, normalized inverse, round trips ----

void criterion7() {
  bool pass = true;
  std::string why;
  for (FixtureBundle b :
       {paper_example(), hopf_smash_fixture(), groupoid_fixture(2), groupoid_fixture(3)}) {
    InverseResult r0 = invert_bb(b.measuring, b.cocycle);
    if (!r0.inverse) {
      pass = false;
      why = b.name + ": no inverse";
      continue;
    }
    InverseResult r1 = invert_bb(b.measuring, b.cocycle, Scalar(b.hopf.field(), 1));
    InverseResult r2 = invert_bb(b.measuring, b.cocycle, Scalar(b.hopf.field(), -3));
    bool same = r1.inverse && r2.inverse && r0.inverse->table == r1.inverse->table &&
                r0.inverse->table == r2.inverse->table;
    bool unique_flag = r0.report.at("unique").passed();

    bool tilde_ok = false;
    try {
      CocycleInverse tilde = tilde_from_bar(b.measuring, b.cocycle, *r0.inverse);
      tilde_ok = check_inverse(b.measuring, b.cocycle, tilde).all_passed();
    } catch (const error&) {
      tilde_ok = false;
    }

    CocycleTable ag = induce(b.cocycle);
    auto back = descend(ag);
    bool round_ok = back.has_value() && back->table == b.cocycle.table &&
                    back->variant == CocycleVariant::BB &&
                    induce(*back).table == ag.table;

    if (!(same && unique_flag && tilde_ok && round_ok)) {
      pass = false;
      if (why.empty())
        why = b.name + ": same=" + std::to_string(same) +
              " unique=" + std::to_string(unique_flag) +
              " tilde=" + std::to_string(tilde_ok) +
              " round=" + std::to_string(round_ok);
    }
  }
  criterion(7, pass,
            "inverses are seed-independent and unique; normalized inverse passes; "
            "induce/descend round-trips",
            why);
}

// ---- criterion 8: round trips and byte-identical reports -----------------

void criterion8() {
  bool pass = true;
  std::string why;
  for (const char* name : {"paper8", "smash-c2", "groupoid-2", "groupoid-3"}) {
    FixtureBundle b = fixture_by_name(name);
    Instance inst = instance_from_fixture(b);
    std::string text = serialize_instance(inst);
    Instance back = parse_instance_string(text);
    if (!(back == inst) || serialize_instance(back) != text) {
      pass = false;
      why = std::string(name) + ": instance round-trip";
    }
    CrossedProduct bb = build_bb(b.measuring, b.cocycle);
    inst.product = product_block_of(bb, b.hopf.space());
    if (!(parse_instance_string(serialize_instance(inst)) == inst)) {
      pass = false;
      why = std::string(name) + ": product round-trip";
    }
  }

  // Reports are byte-identical across repeated evaluations.
  FixtureBundle b = paper_example();
  auto render_once = [&]() {
    ReportDocument doc;
    doc.digest = instance_digest(instance_from_fixture(b));
    ConditionReport rep = check_measuring(b.measuring);
    rep.merge(check_bb_cocycle(b.cocycle));
    rep.merge(check_equiv_10_12(b.measuring, b.cocycle));
    doc.report = rep;
    return render_machine(doc) + render_text(doc);
  };
  if (render_once() != render_once()) {
    pass = false;
    why = "report rendering not deterministic";
  }
  criterion(8, pass, "serialize/parse identity and byte-identical reports", why);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  std::cout << (g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " ("
            << (8 - g_failures) << "/8 criteria)\n";
  return g_failures;
}
