#include "weakcp/crossed.hpp"

namespace weakcp {

// ------------------------------------------------------------ Measuring

Measuring::Measuring(WeakHopfAlgebra h, StructuredAlgebra a, std::vector<Vec> actn)
    : hopf(std::move(h)), algebra(std::move(a)), action(std::move(actn)) {
  if (hopf.field() != algebra.field) throw error("action: field mismatch");
  if (action.size() != hopf.dim() * algebra.dim())
    throw error("action table must have dimH*dimA = " +
                std::to_string(hopf.dim() * algebra.dim()) + " entries, got " +
                std::to_string(action.size()));
  for (const Vec& v : action)
    if (!same_space(v.space(), algebra.space) || v.field() != algebra.field)
      throw error("action entry lives in the wrong space");
}

const Vec& Measuring::act_basis(std::size_t h, std::size_t a) const {
  return action.at(h * algebra.dim() + a);
}

bool Measuring::operator==(const Measuring& o) const {
  return hopf == o.hopf && algebra == o.algebra && action == o.action;
}

Vec act(const Measuring& m, const Vec& h, const Vec& a) {
  Vec r(m.algebra.space, m.algebra.field);
  for (std::size_t i = 0; i < h.dim(); ++i) {
    if (h[i].is_zero()) continue;
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (a[j].is_zero()) continue;
      r.add_scaled(m.act_basis(i, j), h[i] * a[j]);
    }
  }
  return r;
}

// ---------------------------------------------------------- CocycleTable

std::string to_string(CocycleVariant v) { return v == CocycleVariant::BB ? "bb" : "ag"; }

CocycleTable::CocycleTable(Measuring m, std::vector<Vec> t, CocycleVariant v)
    : measuring(std::move(m)), table(std::move(t)), variant(v) {
  std::size_t nh = measuring.hopf.dim();
  if (table.size() != nh * nh)
    throw error("cocycle table must have dimH^2 entries, got " +
                std::to_string(table.size()));
  for (const Vec& e : table)
    if (!same_space(e.space(), measuring.algebra.space))
      throw error("cocycle entry lives outside the coefficient algebra");
}

const Vec& CocycleTable::at_basis(std::size_t i, std::size_t j) const {
  return table.at(i * measuring.hopf.dim() + j);
}

bool CocycleTable::operator==(const CocycleTable& o) const {
  return measuring == o.measuring && table == o.table && variant == o.variant;
}

Vec cocycle_eval(const CocycleTable& c, const Vec& h, const Vec& k) {
  Vec r(c.measuring.algebra.space, c.measuring.algebra.field);
  for (std::size_t i = 0; i < h.dim(); ++i) {
    if (h[i].is_zero()) continue;
    for (std::size_t j = 0; j < k.dim(); ++j) {
      if (k[j].is_zero()) continue;
      r.add_scaled(c.at_basis(i, j), h[i] * k[j]);
    }
  }
  return r;
}

// ------------------------------------------------------------- internals

namespace {

/// Cached per-instance data shared by the checkers.
struct Ctx {
  const Measuring& m;
  const StructuredAlgebra& A;
  const WeakBialgebra& H;
  Field f;
  std::size_t nh, na;
  std::vector<Vec> hl, hr;  // echelon bases of the counital subalgebras
  Vec oneA, oneH;

  explicit Ctx(const Measuring& mm)
      : m(mm), A(mm.algebra), H(mm.hopf.wb), f(mm.algebra.field),
        nh(mm.hopf.dim()), na(mm.algebra.dim()),
        oneA(mm.algebra.unit), oneH(mm.hopf.wb.alg.unit) {
    Subspace l = counital_subalgebra(H, Side::Left);
    Subspace r = counital_subalgebra(H, Side::Right);
    hl = l.basis();
    hr = r.basis();
  }

  Vec eH(std::size_t i) const { return Vec::basis(H.space(), f, i); }
  Vec eA(std::size_t a) const { return Vec::basis(A.space, f, a); }
  const std::string& labH(std::size_t i) const { return H.space()->label(i); }
  const std::string& labA(std::size_t a) const { return A.space->label(a); }

  Vec multH(const Vec& x, const Vec& y) const { return multiply(H.alg, x, y); }
  Vec multA(const Vec& x, const Vec& y) const { return multiply(A, x, y); }
  Vec sinv(const Vec& x) const { return m.hopf.antipode_inv.apply(x); }
  Vec dot1(const Vec& h) const { return act(m, h, oneA); }

  std::vector<SweedlerPair> dpairs(std::size_t i) const {
    return sweedler_pairs(H.coalg, i);
  }
  std::vector<SweedlerTriple> dtriples(std::size_t i) const {
    return sweedler_triples(H.coalg, i);
  }
};

}  // namespace

// -------------------------------------------------------- check_measuring

ConditionReport check_measuring(const Measuring& m) {
  Ctx c(m);
  ConditionReport rep;

  {
    ConditionScan s;  // (1) h·1 = Π^L(h)·1
    LinMap piL = canonical_projector(c.H, Side::Left);
    for (std::size_t h = 0; h < c.nh; ++h)
      s.require_eq(c.dot1(c.eH(h)), act(m, piL.column(h), c.oneA), {h}, {c.labH(h)});
    s.emit(rep, "1");
  }
  {
    ConditionScan s;  // (2) h·(aa') = (h⁽¹⁾·a)(h⁽²⁾·a')
    for (std::size_t h = 0; h < c.nh; ++h)
      for (std::size_t a = 0; a < c.na; ++a)
        for (std::size_t b = 0; b < c.na; ++b) {
          Vec lhs = act(m, c.eH(h), c.A.product(a, b));
          Vec rhs(c.A.space, c.f);
          for (const auto& [h1, h2, w] : c.dpairs(h))
            rhs.add_scaled(c.multA(m.act_basis(h1, a), m.act_basis(h2, b)), w);
          s.require_eq(lhs, rhs, {h, a, b}, {c.labH(h), c.labA(a), c.labA(b)});
        }
    s.emit(rep, "2");
  }
  {
    ConditionScan s;  // (3) S⁻¹(l)h·a = (h·a)(l·1) and lh·a = (l·1)(h·a)
    for (std::size_t li = 0; li < c.hl.size(); ++li) {
      const Vec& l = c.hl[li];
      Vec l1 = c.dot1(l);
      Vec sl = c.sinv(l);
      for (std::size_t h = 0; h < c.nh; ++h)
        for (std::size_t a = 0; a < c.na; ++a) {
          s.require_eq(act(m, c.multH(sl, c.eH(h)), c.eA(a)),
                       c.multA(m.act_basis(h, a), l1), {li, h, a},
                       {"l=" + l.pretty(), c.labH(h), c.labA(a)});
          s.require_eq(act(m, c.multH(l, c.eH(h)), c.eA(a)),
                       c.multA(l1, m.act_basis(h, a)), {li, h, a},
                       {"l=" + l.pretty(), c.labH(h), c.labA(a)});
        }
    }
    s.emit(rep, "3");
  }
  {
    ConditionScan s;  // (4) 1·a = a
    for (std::size_t a = 0; a < c.na; ++a)
      s.require_eq(act(m, c.oneH, c.eA(a)), c.eA(a), {a}, {c.labA(a)});
    s.emit(rep, "4");
  }
  {
    ConditionScan s;  // h·(k·a) = hk·a for h in H^L·H^R
    for (std::size_t li = 0; li < c.hl.size(); ++li)
      for (std::size_t ri = 0; ri < c.hr.size(); ++ri) {
        Vec x = c.multH(c.hl[li], c.hr[ri]);
        for (std::size_t k = 0; k < c.nh; ++k)
          for (std::size_t a = 0; a < c.na; ++a)
            s.require_eq(act(m, x, m.act_basis(k, a)),
                         act(m, c.multH(x, c.eH(k)), c.eA(a)), {li, ri, k, a},
                         {"h=" + x.pretty(), c.labH(k), c.labA(a)});
      }
    s.emit(rep, "composite-action");
  }
  return rep;
}

// ---------------------------------------------------- shared cocycle scans

namespace {

// (8)/(17): (h⁽¹⁾·σ(k⁽¹⁾,m⁽¹⁾))σ(h⁽²⁾,k⁽²⁾m⁽²⁾) = σ(h⁽¹⁾,k⁽¹⁾)σ(h⁽²⁾k⁽²⁾,m)
ConditionScan scan_cocycle_identity(const Ctx& c, const CocycleTable& t) {
  ConditionScan s;
  for (std::size_t h = 0; h < c.nh; ++h) {
    auto dh = c.dpairs(h);
    for (std::size_t k = 0; k < c.nh; ++k) {
      auto dk = c.dpairs(k);
      for (std::size_t mm = 0; mm < c.nh; ++mm) {
        auto dm = c.dpairs(mm);
        Vec lhs(c.A.space, c.f), rhs(c.A.space, c.f);
        for (const auto& [h1, h2, wh] : dh)
          for (const auto& [k1, k2, wk] : dk) {
            for (const auto& [m1, m2, wm] : dm) {
              Vec inner = cocycle_eval(t, c.eH(h2), c.multH(c.eH(k2), c.eH(m2)));
              lhs.add_scaled(c.multA(act(c.m, c.eH(h1), t.at_basis(k1, m1)), inner),
                             wh * wk * wm);
            }
            rhs.add_scaled(
                c.multA(t.at_basis(h1, k1),
                        cocycle_eval(t, c.multH(c.eH(h2), c.eH(k2)), c.eH(mm))),
                wh * wk);
          }
        s.require_eq(lhs, rhs, {h, k, mm}, {c.labH(h), c.labH(k), c.labH(mm)});
      }
    }
  }
  return s;
}

// (9)/(18): (h⁽¹⁾·(k⁽¹⁾·a))σ(h⁽²⁾,k⁽²⁾) = σ(h⁽¹⁾,k⁽¹⁾)(h⁽²⁾k⁽²⁾·a)
ConditionScan scan_twisted_module(const Ctx& c, const CocycleTable& t) {
  ConditionScan s;
  for (std::size_t h = 0; h < c.nh; ++h)
    for (std::size_t k = 0; k < c.nh; ++k)
      for (std::size_t a = 0; a < c.na; ++a) {
        Vec lhs(c.A.space, c.f), rhs(c.A.space, c.f);
        for (const auto& [h1, h2, wh] : c.dpairs(h))
          for (const auto& [k1, k2, wk] : c.dpairs(k)) {
            lhs.add_scaled(c.multA(act(c.m, c.eH(h1), c.m.act_basis(k1, a)),
                                   t.at_basis(h2, k2)),
                           wh * wk);
            rhs.add_scaled(c.multA(t.at_basis(h1, k1),
                                   act(c.m, c.multH(c.eH(h2), c.eH(k2)), c.eA(a))),
                           wh * wk);
          }
        s.require_eq(lhs, rhs, {h, k, a}, {c.labH(h), c.labH(k), c.labA(a)});
      }
  return s;
}

// (19) and the BB normalization: σ(h,k) = σ(h⁽¹⁾,k⁽¹⁾)(h⁽²⁾k⁽²⁾·1)
ConditionScan scan_right_normal_form(const Ctx& c, const CocycleTable& t) {
  ConditionScan s;
  for (std::size_t h = 0; h < c.nh; ++h)
    for (std::size_t k = 0; k < c.nh; ++k) {
      Vec rhs(c.A.space, c.f);
      for (const auto& [h1, h2, wh] : c.dpairs(h))
        for (const auto& [k1, k2, wk] : c.dpairs(k))
          rhs.add_scaled(c.multA(t.at_basis(h1, k1),
                                 c.dot1(c.multH(c.eH(h2), c.eH(k2)))),
                         wh * wk);
      s.require_eq(t.at_basis(h, k), rhs, {h, k}, {c.labH(h), c.labH(k)});
    }
  return s;
}

// The mirrored normalization: (h⁽¹⁾k⁽¹⁾·1)σ(h⁽²⁾,k⁽²⁾) = σ(h,k)
ConditionScan scan_left_normal_form(const Ctx& c, const std::vector<Vec>& table) {
  ConditionScan s;
  auto at = [&](std::size_t i, std::size_t j) -> const Vec& {
    return table[i * c.nh + j];
  };
  for (std::size_t h = 0; h < c.nh; ++h)
    for (std::size_t k = 0; k < c.nh; ++k) {
      Vec lhs(c.A.space, c.f);
      for (const auto& [h1, h2, wh] : c.dpairs(h))
        for (const auto& [k1, k2, wk] : c.dpairs(k))
          lhs.add_scaled(c.multA(c.dot1(c.multH(c.eH(h1), c.eH(k1))), at(h2, k2)),
                         wh * wk);
      s.require_eq(lhs, at(h, k), {h, k}, {c.labH(h), c.labH(k)});
    }
  return s;
}

ConditionScan scan_balance(const Ctx& c, const std::vector<Vec>& table,
                           const std::vector<Vec>& middle,
                           const std::string& side_name) {
  ConditionScan s;
  auto eval = [&](const Vec& u, const Vec& v) {
    Vec r(c.A.space, c.f);
    for (std::size_t i = 0; i < c.nh; ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < c.nh; ++j)
        if (!v[j].is_zero()) r.add_scaled(table[i * c.nh + j], u[i] * v[j]);
    }
    return r;
  };
  for (std::size_t h = 0; h < c.nh; ++h)
    for (std::size_t ri = 0; ri < middle.size(); ++ri)
      for (std::size_t k = 0; k < c.nh; ++k)
        s.require_eq(eval(c.multH(c.eH(h), middle[ri]), c.eH(k)),
                     eval(c.eH(h), c.multH(middle[ri], c.eH(k))), {h, ri, k},
                     {c.labH(h), side_name + "=" + middle[ri].pretty(), c.labH(k)});
  return s;
}

// (10)/(12) quantify l over an echelon basis of H^L; (11) over all of H.
ConditionScan scan_cond10(const Ctx& c) {
  ConditionScan s;
  for (std::size_t h = 0; h < c.nh; ++h)
    for (std::size_t li = 0; li < c.hl.size(); ++li) {
      const Vec& l = c.hl[li];
      s.require_eq(act(c.m, c.eH(h), c.dot1(l)), c.dot1(c.multH(c.eH(h), l)),
                   {h, li}, {c.labH(h), "l=" + l.pretty()});
    }
  return s;
}

ConditionScan scan_cond11(const Ctx& c) {
  ConditionScan s;
  for (std::size_t h = 0; h < c.nh; ++h)
    for (std::size_t l = 0; l < c.nh; ++l)
      s.require_eq(act(c.m, c.eH(h), c.dot1(c.eH(l))),
                   c.dot1(c.multH(c.eH(h), c.eH(l))), {h, l},
                   {c.labH(h), c.labH(l)});
  return s;
}

}  // namespace

// ------------------------------------------------------- check_bb_cocycle

ConditionReport check_bb_cocycle(const CocycleTable& t) {
  if (t.variant != CocycleVariant::BB)
    throw error("check_bb_cocycle: table is not tagged as a bb cocycle");
  Ctx c(t.measuring);
  ConditionReport rep;

  scan_balance(c, t.table, c.hr, "r").emit(rep, "balance-R");

  {
    ConditionScan s;  // (5) σ(lh,k) = (l·1)σ(h,k) and σ(S⁻¹(l)h,k) = σ(h,k)(l·1)
    for (std::size_t li = 0; li < c.hl.size(); ++li) {
      const Vec& l = c.hl[li];
      Vec l1 = c.dot1(l);
      Vec sl = c.sinv(l);
      for (std::size_t h = 0; h < c.nh; ++h)
        for (std::size_t k = 0; k < c.nh; ++k) {
          s.require_eq(cocycle_eval(t, c.multH(l, c.eH(h)), c.eH(k)),
                       c.multA(l1, t.at_basis(h, k)), {li, h, k},
                       {"l=" + l.pretty(), c.labH(h), c.labH(k)});
          s.require_eq(cocycle_eval(t, c.multH(sl, c.eH(h)), c.eH(k)),
                       c.multA(t.at_basis(h, k), l1), {li, h, k},
                       {"l=" + l.pretty(), c.labH(h), c.labH(k)});
        }
    }
    s.emit(rep, "5");
  }
  {
    ConditionScan s;  // (6) (h⁽¹⁾·(l·1))σ(h⁽²⁾,k) = σ(h,lk)
    for (std::size_t li = 0; li < c.hl.size(); ++li) {
      const Vec& l = c.hl[li];
      Vec l1 = c.dot1(l);
      for (std::size_t h = 0; h < c.nh; ++h)
        for (std::size_t k = 0; k < c.nh; ++k) {
          Vec lhs(c.A.space, c.f);
          for (const auto& [h1, h2, w] : c.dpairs(h))
            lhs.add_scaled(c.multA(act(c.m, c.eH(h1), l1), t.at_basis(h2, k)), w);
          s.require_eq(lhs, cocycle_eval(t, c.eH(h), c.multH(l, c.eH(k))),
                       {li, h, k}, {"l=" + l.pretty(), c.labH(h), c.labH(k)});
        }
    }
    s.emit(rep, "6");
  }
  {
    ConditionScan s;  // (7) σ(1,h) = σ(h,1) = h·1
    for (std::size_t h = 0; h < c.nh; ++h) {
      Vec h1 = c.dot1(c.eH(h));
      s.require_eq(cocycle_eval(t, c.oneH, c.eH(h)), h1, {h}, {"σ(1," + c.labH(h) + ")"});
      s.require_eq(cocycle_eval(t, c.eH(h), c.oneH), h1, {h}, {"σ(" + c.labH(h) + ",1)"});
    }
    s.emit(rep, "7");
  }
  scan_cocycle_identity(c, t).emit(rep, "8");
  scan_twisted_module(c, t).emit(rep, "9");
  scan_right_normal_form(c, t).emit(rep, "sigma-normal-form");
  return rep;
}

// ------------------------------------------------------ check_equiv_10_12

ConditionReport check_equiv_10_12(const Measuring& m, const CocycleTable& t) {
  Ctx c(m);
  ConditionReport rep;

  // The equivalence claim presupposes (1), (2), (6) and (7).
  ConditionReport meas = check_measuring(m);
  ConditionReport coc = check_bb_cocycle(t);
  std::vector<std::string> hyp_failed;
  for (const char* id : {"1", "2"})
    if (meas.at(id).failed()) hyp_failed.push_back(id);
  for (const char* id : {"6", "7"})
    if (coc.at(id).failed()) hyp_failed.push_back(id);
  if (!hyp_failed.empty()) {
    std::string note = "hypothesis condition(s) failed:";
    for (const auto& h : hyp_failed) note += " " + h;
    rep.add_not_checked("10", note);
    rep.add_not_checked("11", note);
    rep.add_not_checked("12", note);
    rep.add_not_checked("equiv-agree", note);
    return rep;
  }

  ConditionScan s10 = scan_cond10(c);
  ConditionScan s11 = scan_cond11(c);
  ConditionScan s12;  // (12) σ(h,l) = σ(hl,1)
  for (std::size_t h = 0; h < c.nh; ++h)
    for (std::size_t li = 0; li < c.hl.size(); ++li) {
      const Vec& l = c.hl[li];
      s12.require_eq(cocycle_eval(t, c.eH(h), l),
                     cocycle_eval(t, c.multH(c.eH(h), l), c.oneH), {h, li},
                     {c.labH(h), "l=" + l.pretty()});
    }
  s10.emit(rep, "10");
  s11.emit(rep, "11");
  s12.emit(rep, "12");

  bool agree = (s10.ok() == s11.ok()) && (s11.ok() == s12.ok());
  if (agree)
    rep.add_pass("equiv-agree", 3, "verdicts of (10), (11), (12) coincide");
  else {
    Witness w{{}, {"(10)/(11)/(12) verdicts differ"}, Vec(c.A.space, c.f),
              Vec(c.A.space, c.f)};
    rep.add_fail("equiv-agree", std::move(w), 3);
  }
  return rep;
}

// ------------------------------------------------------- check_ag_cocycle

ConditionReport check_ag_cocycle(const CocycleTable& t) {
  if (t.variant != CocycleVariant::AG)
    throw error("check_ag_cocycle: table is not tagged as an ag cocycle");
  Ctx c(t.measuring);
  ConditionReport rep;

  scan_cond11(c).emit(rep, "11");
  scan_cocycle_identity(c, t).emit(rep, "17");
  scan_twisted_module(c, t).emit(rep, "18");
  scan_right_normal_form(c, t).emit(rep, "19");

  Vec d1 = comult_vec(c.H.coalg, c.oneH);
  auto d1_terms = [&]() {
    std::vector<SweedlerPair> out;
    for (std::size_t p = 0; p < d1.dim(); ++p)
      if (!d1[p].is_zero()) out.push_back({p / c.nh, p % c.nh, d1[p]});
    return out;
  }();

  {
    ConditionScan s;  // (20) h·1 = (h⁽¹⁾·(1⁽¹⁾·1))ς(h⁽²⁾⊗1⁽²⁾)
    for (std::size_t h = 0; h < c.nh; ++h) {
      Vec rhs(c.A.space, c.f);
      for (const auto& [h1, h2, wh] : c.dpairs(h))
        for (const auto& [u1, u2, wu] : d1_terms)
          rhs.add_scaled(c.multA(act(c.m, c.eH(h1), c.dot1(c.eH(u1))),
                                 t.at_basis(h2, u2)),
                         wh * wu);
      s.require_eq(c.dot1(c.eH(h)), rhs, {h}, {c.labH(h)});
    }
    s.emit(rep, "20");
  }
  {
    ConditionScan s;  // (21) h·1 = (1⁽¹⁾·1)ς(1⁽²⁾⊗h)
    for (std::size_t h = 0; h < c.nh; ++h) {
      Vec rhs(c.A.space, c.f);
      for (const auto& [u1, u2, wu] : d1_terms)
        rhs.add_scaled(c.multA(c.dot1(c.eH(u1)), t.at_basis(u2, h)), wu);
      s.require_eq(c.dot1(c.eH(h)), rhs, {h}, {c.labH(h)});
    }
    s.emit(rep, "21");
  }
  {
    ConditionScan s;  // (22) a(1⁽¹⁾·1)⊗1⁽²⁾ = 1⁽¹⁾·a⊗1⁽²⁾
    Space AH = tensor_space(c.A.space, c.H.space());
    for (std::size_t a = 0; a < c.na; ++a) {
      Vec lhs(AH, c.f), rhs(AH, c.f);
      for (const auto& [u1, u2, wu] : d1_terms) {
        lhs.add_scaled(tensor_vec(c.multA(c.eA(a), c.dot1(c.eH(u1))), c.eH(u2), AH), wu);
        rhs.add_scaled(tensor_vec(act(c.m, c.eH(u1), c.eA(a)), c.eH(u2), AH), wu);
      }
      s.require_eq(lhs, rhs, {a}, {c.labA(a)});
    }
    s.emit(rep, "22");
  }
  {
    ConditionScan s;  // normality: ς(1⊗h) = ς(h⊗1) = h·1
    for (std::size_t h = 0; h < c.nh; ++h) {
      Vec h1 = c.dot1(c.eH(h));
      s.require_eq(cocycle_eval(t, c.oneH, c.eH(h)), h1, {h}, {"ς(1⊗" + c.labH(h) + ")"});
      s.require_eq(cocycle_eval(t, c.eH(h), c.oneH), h1, {h}, {"ς(" + c.labH(h) + "⊗1)"});
    }
    s.emit(rep, "normality");
  }
  scan_left_normal_form(c, t.table).emit(rep, "varsigma-normal-form");
  return rep;
}

// ---------------------------------------------------------- constructions

namespace {

// Index of a⊗h in A⊗H (A outer).
std::size_t ah_index(const Ctx& c, std::size_t a, std::size_t h) {
  return tensor_index(a, h, c.nh);
}

// Crossed-product formula on A⊗H:
// (a⊗h)(b⊗k) = a(h⁽¹⁾·b)σ(h⁽²⁾,k⁽¹⁾) ⊗ h⁽³⁾k⁽²⁾, extended bilinearly.
Vec product_formula(const Ctx& c, const CocycleTable& t, const Space& AH,
                    const Vec& x, const Vec& y) {
  Vec out(AH, c.f);
  for (std::size_t p = 0; p < x.dim(); ++p) {
    if (x[p].is_zero()) continue;
    std::size_t a = p / c.nh, h = p % c.nh;
    auto th = c.dtriples(h);
    for (std::size_t q = 0; q < y.dim(); ++q) {
      if (y[q].is_zero()) continue;
      std::size_t b = q / c.nh, k = q % c.nh;
      Scalar w0 = x[p] * y[q];
      for (const auto& [h1, h2, h3, wh] : th)
        for (const auto& [k1, k2, wk] : c.dpairs(k)) {
          Vec acoef = c.multA(c.multA(c.eA(a), c.m.act_basis(h1, b)),
                              t.at_basis(h2, k1));
          if (acoef.is_zero()) continue;
          Vec hk = c.multH(c.eH(h3), c.eH(k2));
          if (hk.is_zero()) continue;
          out.add_scaled(tensor_vec(acoef, hk, AH), w0 * wh * wk);
        }
    }
  }
  return out;
}

// a⊗h ↦ a⊗h⁽¹⁾⊗h⁽²⁾ as a map A⊗H -> (A⊗H)⊗H.
LinMap delta_on_ah(const Ctx& c, const Space& AH) {
  Space AHH = tensor_space(AH, c.H.space());
  LinMap d(AH, AHH, c.f);
  for (std::size_t a = 0; a < c.na; ++a)
    for (std::size_t h = 0; h < c.nh; ++h)
      for (const auto& [h1, h2, w] : c.dpairs(h))
        d.set(tensor_index(ah_index(c, a, h1), h2, c.nh), ah_index(c, a, h), w);
  return d;
}

// assoc + unit + comodule verdicts for a finished product.
void verify_product(const Ctx& c, CrossedProduct& p) {
  const auto& lab = p.carrier->labels();
  std::size_t n = p.dim();
  {
    ConditionScan s;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          s.require_eq(
              p.multiply_vec(p.product(i, j), Vec::basis(p.carrier, c.f, k)),
              p.multiply_vec(Vec::basis(p.carrier, c.f, i), p.product(j, k)),
              {i, j, k}, {lab[i], lab[j], lab[k]});
    s.emit(p.report, "assoc");
  }
  {
    ConditionScan s;
    for (std::size_t i = 0; i < n; ++i) {
      Vec e = Vec::basis(p.carrier, c.f, i);
      s.require_eq(p.multiply_vec(p.unit, e), e, {i}, {"1*" + lab[i]});
      s.require_eq(p.multiply_vec(e, p.unit), e, {i}, {lab[i] + "*1"});
    }
    s.emit(p.report, "unit");
  }
  {
    ConditionScan s;
    LinMap dH = comult_map(c.H.coalg);
    LinMap idH = LinMap::identity(c.H.space(), c.f);
    LinMap idC = LinMap::identity(p.carrier, c.f);
    LinMap lhs = p.delta.tensor(idH).compose(p.delta);
    LinMap rhs = idC.tensor(dH).compose(p.delta);
    for (std::size_t i = 0; i < n; ++i)
      s.require_eq(lhs.column(i), rhs.column(i), {i}, {"(δ⊗id)δ vs (id⊗Δ)δ at " + lab[i]});
    // counit leg: (id⊗ε)∘δ = id
    for (std::size_t i = 0; i < n; ++i) {
      Vec dx = p.delta.column(i);
      Vec folded(p.carrier, c.f);
      for (std::size_t q = 0; q < dx.dim(); ++q) {
        if (dx[q].is_zero()) continue;
        std::size_t ci = q / c.nh, hj = q % c.nh;
        folded.add_scaled(Vec::basis(p.carrier, c.f, ci),
                          dx[q] * c.H.coalg.counit[hj]);
      }
      s.require_eq(folded, Vec::basis(p.carrier, c.f, i), {i},
                   {"(id⊗ε)δ at " + lab[i]});
    }
    s.emit(p.report, "comodule");
  }
}

}  // namespace

CrossedProduct build_bb(const Measuring& m, const CocycleTable& t) {
  if (t.variant != CocycleVariant::BB)
    throw error("build_bb requires a bb-variant cocycle");
  Ctx c(m);
  Space AH = tensor_space(c.A.space, c.H.space());

  // Relations a·l⊗h - a⊗lh with a·l = a(l·1), l over the echelon basis of H^L.
  std::vector<Vec> rels;
  for (const Vec& l : c.hl) {
    Vec l1 = c.dot1(l);
    for (std::size_t a = 0; a < c.na; ++a) {
      Vec al = c.multA(c.eA(a), l1);
      for (std::size_t h = 0; h < c.nh; ++h) {
        Vec rel = tensor_vec(al, c.eH(h), AH);
        rel.add_scaled(tensor_vec(c.eA(a), c.multH(l, c.eH(h)), AH),
                       -Scalar::one(c.f));
        rels.push_back(std::move(rel));
      }
    }
  }
  QuotientSpace q = quotient_by(AH, c.f, rels);

  CrossedProduct p(CocycleVariant::BB, q.quotient, c.f, c.H.space());

  // Representative independence: shifting either factor by a relation must
  // not move the projected product.
  {
    ConditionScan s;
    Vec zero(q.quotient, c.f);
    for (std::size_t ri = 0; ri < q.relations.dim(); ++ri) {
      const Vec& r = q.relations.basis()[ri];
      for (std::size_t x = 0; x < AH->dim(); ++x) {
        Vec ex = Vec::basis(AH, c.f, x);
        s.require_eq(q.project.apply(product_formula(c, t, AH, r, ex)), zero,
                     {ri, x}, {"rel[" + std::to_string(ri) + "]", AH->label(x)});
        s.require_eq(q.project.apply(product_formula(c, t, AH, ex, r)), zero,
                     {ri, x}, {AH->label(x), "rel[" + std::to_string(ri) + "]"});
      }
    }
    s.emit(p.report, "well-defined");
  }

  LinMap dAH = delta_on_ah(c, AH);
  LinMap idH = LinMap::identity(c.H.space(), c.f);
  {
    ConditionScan s;  // δ maps relations into relations⊗H
    LinMap projH = q.project.tensor(idH);
    Vec zero(tensor_space(q.quotient, c.H.space()), c.f);
    for (std::size_t ri = 0; ri < q.relations.dim(); ++ri)
      s.require_eq(projH.apply(dAH.apply(q.relations.basis()[ri])), zero, {ri},
                   {"rel[" + std::to_string(ri) + "]"});
    s.emit(p.report, "delta-descends");
  }

  std::size_t n = q.quotient->dim();
  p.mult.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec xi = q.section.column(i);
    for (std::size_t j = 0; j < n; ++j)
      p.mult.push_back(q.project.apply(
          product_formula(c, t, AH, xi, q.section.column(j))));
  }
  p.unit = q.project.apply(tensor_vec(c.oneA, c.oneH, AH));
  p.delta = q.project.tensor(idH).compose(dAH).compose(q.section);
  p.quotient = std::move(q);

  verify_product(c, p);
  return p;
}

LinMap nabla(const Measuring& m) {
  Ctx c(m);
  Space AH = tensor_space(c.A.space, c.H.space());
  LinMap nab(AH, AH, c.f);
  for (std::size_t a = 0; a < c.na; ++a)
    for (std::size_t h = 0; h < c.nh; ++h) {
      Vec img(AH, c.f);
      for (const auto& [h1, h2, w] : c.dpairs(h))
        img.add_scaled(
            tensor_vec(c.multA(c.eA(a), c.dot1(c.eH(h1))), c.eH(h2), AH), w);
      std::size_t col = ah_index(c, a, h);
      for (std::size_t r = 0; r < img.dim(); ++r)
        if (!img[r].is_zero()) nab.set(r, col, img[r]);
    }
  return nab;
}

Vec preunit(const Measuring& m) {
  Ctx c(m);
  Space AH = tensor_space(c.A.space, c.H.space());
  return nabla(m).apply(tensor_vec(c.oneA, c.oneH, AH));
}

ConditionReport check_nabla(const Measuring& m) {
  ConditionReport rep;
  LinMap nab = nabla(m);
  LinMap sq = nab.compose(nab);
  ConditionScan s;
  for (std::size_t j = 0; j < nab.domain()->dim(); ++j)
    s.require_eq(sq.column(j), nab.column(j), {j}, {nab.domain()->label(j)});
  s.emit(rep, "nabla-idempotent");
  return rep;
}

CrossedProduct build_ag(const Measuring& m, const CocycleTable& t) {
  if (t.variant != CocycleVariant::AG)
    throw error("build_ag requires an ag-variant cocycle");
  Ctx c(m);
  Space AH = tensor_space(c.A.space, c.H.space());
  LinMap nab = nabla(m);
  IdempotentImage im = image_of_idempotent(nab);  // throws if not idempotent

  CrossedProduct p(CocycleVariant::AG, im.abstract, c.f, c.H.space());

  std::size_t n = im.abstract->dim();
  p.mult.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec xi = im.incl.column(i);
    for (std::size_t j = 0; j < n; ++j)
      p.mult.push_back(
          im.retr.apply(product_formula(c, t, AH, xi, im.incl.column(j))));
  }
  p.unit = im.retr.apply(tensor_vec(c.oneA, c.oneH, AH));

  LinMap dAH = delta_on_ah(c, AH);
  LinMap idH = LinMap::identity(c.H.space(), c.f);
  p.delta = im.retr.tensor(idH).compose(dAH).compose(im.incl);
  p.incl = std::move(im.incl);
  p.retr = std::move(im.retr);

  verify_product(c, p);
  return p;
}

CrossedProduct::CrossedProduct(CocycleVariant prov, Space carrier_space,
                               const Field& f, const Space& hopf_space)
    : provenance(prov), carrier(std::move(carrier_space)), field(f),
      unit(carrier, f), delta(carrier, tensor_space(carrier, hopf_space), f) {}

const Vec& CrossedProduct::product(std::size_t i, std::size_t j) const {
  return mult.at(i * carrier->dim() + j);
}

Vec CrossedProduct::multiply_vec(const Vec& x, const Vec& y) const {
  Vec r(carrier, field);
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.dim(); ++j) {
      if (y[j].is_zero()) continue;
      r.add_scaled(product(i, j), x[i] * y[j]);
    }
  }
  return r;
}

// -------------------------------------------------------- inverse solving

namespace {

/// A-valued affine expression in the unknown inverse table: a dense
/// dimA x (N+1) coefficient matrix, the last column constant.
struct LinExpr {
  std::size_t na, ncols;  // ncols = N+1
  std::vector<Scalar> coef;

  LinExpr(const Ctx& c, std::size_t unknowns)
      : na(c.na), ncols(unknowns + 1),
        coef(na * ncols, Scalar::zero(c.f)) {}
  Scalar& at(std::size_t a, std::size_t col) { return coef[a * ncols + col]; }
  const Scalar& at(std::size_t a, std::size_t col) const { return coef[a * ncols + col]; }
};

struct InverseSystem {
  const Ctx& c;
  std::size_t N;  // nh*nh*na unknowns
  Space unknowns;
  std::vector<LinearRow> rows;        // defining system
  std::vector<LinearRow> homog_rows;  // homogeneous copies for uniqueness

  explicit InverseSystem(const Ctx& ctx)
      : c(ctx), N(ctx.nh * ctx.nh * ctx.na),
        unknowns(make_space("x", ctx.nh * ctx.nh * ctx.na)) {}

  std::size_t uidx(std::size_t i, std::size_t j, std::size_t a) const {
    return (i * c.nh + j) * c.na + a;
  }

  LinExpr unknown(std::size_t i, std::size_t j) const {
    LinExpr e(c, N);
    for (std::size_t a = 0; a < c.na; ++a)
      e.at(a, uidx(i, j, a)) = Scalar::one(c.f);
    return e;
  }

  // Bilinear table evaluation with vector arguments.
  LinExpr unknown_eval(const Vec& u, const Vec& v) const {
    LinExpr e(c, N);
    for (std::size_t i = 0; i < c.nh; ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < c.nh; ++j) {
        if (v[j].is_zero()) continue;
        Scalar w = u[i] * v[j];
        for (std::size_t a = 0; a < c.na; ++a) e.at(a, uidx(i, j, a)) += w;
      }
    }
    return e;
  }

  LinExpr constant(const Vec& v) const {
    LinExpr e(c, N);
    for (std::size_t a = 0; a < c.na; ++a) e.at(a, N) = v[a];
    return e;
  }

  // multiply(A, w, expr): out_x = sum_{y,z} w_y e_z m(y,z)_x
  LinExpr mul_left(const Vec& w, const LinExpr& e) const {
    LinExpr out(c, N);
    for (std::size_t y = 0; y < c.na; ++y) {
      if (w[y].is_zero()) continue;
      for (std::size_t z = 0; z < c.na; ++z) {
        const Vec& prod = c.A.product(y, z);
        for (std::size_t x = 0; x < c.na; ++x) {
          if (prod[x].is_zero()) continue;
          Scalar f = w[y] * prod[x];
          for (std::size_t col = 0; col < e.ncols; ++col)
            if (!e.at(z, col).is_zero()) out.at(x, col) += f * e.at(z, col);
        }
      }
    }
    return out;
  }

  LinExpr mul_right(const LinExpr& e, const Vec& w) const {
    LinExpr out(c, N);
    for (std::size_t z = 0; z < c.na; ++z)
      for (std::size_t y = 0; y < c.na; ++y) {
        if (w[y].is_zero()) continue;
        const Vec& prod = c.A.product(z, y);
        for (std::size_t x = 0; x < c.na; ++x) {
          if (prod[x].is_zero()) continue;
          Scalar f = w[y] * prod[x];
          for (std::size_t col = 0; col < e.ncols; ++col)
            if (!e.at(z, col).is_zero()) out.at(x, col) += f * e.at(z, col);
        }
      }
    return out;
  }

  static LinExpr sub(LinExpr lhs, const LinExpr& rhs) {
    for (std::size_t i = 0; i < lhs.coef.size(); ++i)
      if (!rhs.coef[i].is_zero()) lhs.coef[i] -= rhs.coef[i];
    return lhs;
  }

  static LinExpr add_scaled(LinExpr base, const LinExpr& e, const Scalar& w) {
    if (w.is_zero()) return base;
    for (std::size_t i = 0; i < base.coef.size(); ++i)
      if (!e.coef[i].is_zero()) base.coef[i] += e.coef[i] * w;
    return base;
  }

  // expr = 0, one row per A coordinate. `uniqueness_only` rows feed the
  // kernel computation but not the solve.
  void require_zero(const LinExpr& e, bool uniqueness_only = false) {
    for (std::size_t a = 0; a < c.na; ++a) {
      Vec lhs(unknowns, c.f);
      bool any = false;
      for (std::size_t col = 0; col < N; ++col)
        if (!e.at(a, col).is_zero()) {
          lhs.set(col, e.at(a, col));
          any = true;
        }
      Scalar rhs = -e.at(a, N);
      if (!any && rhs.is_zero()) continue;
      if (!uniqueness_only) rows.push_back(LinearRow{lhs, rhs});
      homog_rows.push_back(LinearRow{std::move(lhs), Scalar::zero(c.f)});
    }
  }
};

std::vector<Vec> table_from_solution(const InverseSystem& sys, const Vec& x) {
  std::vector<Vec> table;
  table.reserve(sys.c.nh * sys.c.nh);
  for (std::size_t i = 0; i < sys.c.nh; ++i)
    for (std::size_t j = 0; j < sys.c.nh; ++j) {
      Vec v(sys.c.A.space, sys.c.f);
      for (std::size_t a = 0; a < sys.c.na; ++a) {
        const Scalar& s = x[sys.uidx(i, j, a)];
        if (!s.is_zero()) v.set(a, s);
      }
      table.push_back(std::move(v));
    }
  return table;
}

// Items (13)-(16) and balance-L as one linear system in the entries of σ̄.
InverseSystem bb_inverse_system(const Ctx& c, const CocycleTable& t) {
  InverseSystem sys(c);
  // (13) σ̄(h,k) = (h⁽¹⁾k⁽¹⁾·1) σ̄(h⁽²⁾,k⁽²⁾)
  for (std::size_t h = 0; h < c.nh; ++h)
    for (std::size_t k = 0; k < c.nh; ++k) {
      LinExpr rhs(c, sys.N);
      for (const auto& [h1, h2, wh] : c.dpairs(h))
        for (const auto& [k1, k2, wk] : c.dpairs(k))
          rhs = InverseSystem::add_scaled(
              std::move(rhs),
              sys.mul_left(c.dot1(c.multH(c.eH(h1), c.eH(k1))), sys.unknown(h2, k2)),
              wh * wk);
      sys.require_zero(InverseSystem::sub(sys.unknown(h, k), rhs));
    }
  // (14) σ̄(lh,k) = (l·1)σ̄(h,k) and σ̄(S⁻¹(l)h,k) = σ̄(h,k)(l·1)
  for (const Vec& l : c.hl) {
    Vec l1 = c.dot1(l);
    Vec sl = c.sinv(l);
    for (std::size_t h = 0; h < c.nh; ++h)
      for (std::size_t k = 0; k < c.nh; ++k) {
        sys.require_zero(InverseSystem::sub(
            sys.unknown_eval(c.multH(l, c.eH(h)), c.eH(k)),
            sys.mul_left(l1, sys.unknown(h, k))));
        sys.require_zero(InverseSystem::sub(
            sys.unknown_eval(c.multH(sl, c.eH(h)), c.eH(k)),
            sys.mul_right(sys.unknown(h, k), l1)));
      }
  }
  // (15) σ̄(h⁽¹⁾,k)(h⁽²⁾·(l·1)) = σ̄(h,S⁻¹(l)k)
  for (const Vec& l : c.hl) {
    Vec l1 = c.dot1(l);
    Vec sl = c.sinv(l);
    for (std::size_t h = 0; h < c.nh; ++h)
      for (std::size_t k = 0; k < c.nh; ++k) {
        LinExpr lhs(c, sys.N);
        for (const auto& [h1, h2, wh] : c.dpairs(h))
          lhs = InverseSystem::add_scaled(
              std::move(lhs),
              sys.mul_right(sys.unknown(h1, k), act(c.m, c.eH(h2), l1)), wh);
        sys.require_zero(InverseSystem::sub(
            std::move(lhs), sys.unknown_eval(c.eH(h), c.multH(sl, c.eH(k)))));
      }
  }
  // (16) σ(h⁽¹⁾,k⁽¹⁾)σ̄(h⁽²⁾,k⁽²⁾) = h·(k·1) and the mirrored half
  for (std::size_t h = 0; h < c.nh; ++h)
    for (std::size_t k = 0; k < c.nh; ++k) {
      LinExpr first(c, sys.N), second(c, sys.N);
      for (const auto& [h1, h2, wh] : c.dpairs(h))
        for (const auto& [k1, k2, wk] : c.dpairs(k)) {
          first = InverseSystem::add_scaled(
              std::move(first), sys.mul_left(t.at_basis(h1, k1), sys.unknown(h2, k2)),
              wh * wk);
          second = InverseSystem::add_scaled(
              std::move(second), sys.mul_right(sys.unknown(h1, k1), t.at_basis(h2, k2)),
              wh * wk);
        }
      sys.require_zero(InverseSystem::sub(
          std::move(first), sys.constant(act(c.m, c.eH(h), c.dot1(c.eH(k))))));
      sys.require_zero(InverseSystem::sub(
          std::move(second), sys.constant(c.dot1(c.multH(c.eH(h), c.eH(k))))));
    }
  // balance over H^L: σ̄(hl,k) = σ̄(h,lk)
  for (const Vec& l : c.hl)
    for (std::size_t h = 0; h < c.nh; ++h)
      for (std::size_t k = 0; k < c.nh; ++k)
        sys.require_zero(InverseSystem::sub(
            sys.unknown_eval(c.multH(c.eH(h), l), c.eH(k)),
            sys.unknown_eval(c.eH(h), c.multH(l, c.eH(k)))));
  // Normalization σ̄(h,k) = σ̄(h⁽¹⁾,k⁽¹⁾)(h⁽²⁾·(k⁽²⁾·1)): pins uniqueness.
  for (std::size_t h = 0; h < c.nh; ++h)
    for (std::size_t k = 0; k < c.nh; ++k) {
      LinExpr rhs(c, sys.N);
      for (const auto& [h1, h2, wh] : c.dpairs(h))
        for (const auto& [k1, k2, wk] : c.dpairs(k))
          rhs = InverseSystem::add_scaled(
              std::move(rhs),
              sys.mul_right(sys.unknown(h1, k1),
                            act(c.m, c.eH(h2), c.dot1(c.eH(k2)))),
              wh * wk);
      sys.require_zero(InverseSystem::sub(sys.unknown(h, k), rhs),
                       /*uniqueness_only=*/true);
    }
  return sys;
}

// Items (23)-(24) for ς̄.
InverseSystem ag_inverse_system(const Ctx& c, const CocycleTable& t) {
  InverseSystem sys(c);
  for (std::size_t h = 0; h < c.nh; ++h)
    for (std::size_t k = 0; k < c.nh; ++k) {
      LinExpr norm(c, sys.N), first(c, sys.N), second(c, sys.N);
      for (const auto& [h1, h2, wh] : c.dpairs(h))
        for (const auto& [k1, k2, wk] : c.dpairs(k)) {
          norm = InverseSystem::add_scaled(
              std::move(norm),
              sys.mul_left(c.dot1(c.multH(c.eH(h1), c.eH(k1))), sys.unknown(h2, k2)),
              wh * wk);
          first = InverseSystem::add_scaled(
              std::move(first), sys.mul_left(t.at_basis(h1, k1), sys.unknown(h2, k2)),
              wh * wk);
          second = InverseSystem::add_scaled(
              std::move(second), sys.mul_right(sys.unknown(h1, k1), t.at_basis(h2, k2)),
              wh * wk);
        }
      // (23)
      sys.require_zero(InverseSystem::sub(sys.unknown(h, k), std::move(norm)));
      // (24), both halves
      Vec hk1 = c.dot1(c.multH(c.eH(h), c.eH(k)));
      sys.require_zero(InverseSystem::sub(std::move(first), sys.constant(hk1)));
      sys.require_zero(InverseSystem::sub(std::move(second), sys.constant(hk1)));
    }
  return sys;
}

InverseResult run_inverse_solve(const Ctx& c, const CocycleTable& t,
                                InverseSystem sys, CocycleVariant variant,
                                const Scalar& seed) {
  InverseResult out;
  std::optional<Vec> x = solve_linear(sys.rows, sys.unknowns, c.f, seed);
  if (!x) {
    Witness w{{}, {"defining linear system is inconsistent"},
              Vec(sys.unknowns, c.f), Vec(sys.unknowns, c.f)};
    out.report.add_fail("solve", std::move(w), sys.rows.size());
    return out;
  }
  out.report.add_pass("solve", sys.rows.size());
  CocycleInverse inv{table_from_solution(sys, *x), variant};

  out.report.merge(check_inverse(c.m, t, inv));

  std::size_t kdim = homogeneous_kernel_dim(sys.homog_rows, sys.unknowns, c.f);
  if (kdim == 0)
    out.report.add_pass("unique", sys.homog_rows.size(),
                        "homogeneous system with normalization has zero kernel");
  else {
    Witness w{{kdim}, {"kernel dimension " + std::to_string(kdim)},
              Vec(sys.unknowns, c.f), Vec(sys.unknowns, c.f)};
    out.report.add_fail("unique", std::move(w), sys.homog_rows.size());
  }
  if (out.report.all_passed()) out.inverse = std::move(inv);
  return out;
}

}  // namespace

ConditionReport check_inverse(const Measuring& m, const CocycleTable& t,
                              const CocycleInverse& inv) {
  Ctx c(m);
  ConditionReport rep;
  auto bar = [&](std::size_t i, std::size_t j) -> const Vec& {
    return inv.table.at(i * c.nh + j);
  };
  auto bar_eval = [&](const Vec& u, const Vec& v) {
    Vec r(c.A.space, c.f);
    for (std::size_t i = 0; i < c.nh; ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < c.nh; ++j)
        if (!v[j].is_zero()) r.add_scaled(bar(i, j), u[i] * v[j]);
    }
    return r;
  };

  if (inv.variant == CocycleVariant::BB) {
    scan_left_normal_form(c, inv.table).emit(rep, "13");
    {
      ConditionScan s;  // (14)
      for (std::size_t li = 0; li < c.hl.size(); ++li) {
        const Vec& l = c.hl[li];
        Vec l1 = c.dot1(l);
        Vec sl = c.sinv(l);
        for (std::size_t h = 0; h < c.nh; ++h)
          for (std::size_t k = 0; k < c.nh; ++k) {
            s.require_eq(bar_eval(c.multH(l, c.eH(h)), c.eH(k)),
                         c.multA(l1, bar(h, k)), {li, h, k},
                         {"l=" + l.pretty(), c.labH(h), c.labH(k)});
            s.require_eq(bar_eval(c.multH(sl, c.eH(h)), c.eH(k)),
                         c.multA(bar(h, k), l1), {li, h, k},
                         {"l=" + l.pretty(), c.labH(h), c.labH(k)});
          }
      }
      s.emit(rep, "14");
    }
    {
      ConditionScan s;  // (15)
      for (std::size_t li = 0; li < c.hl.size(); ++li) {
        const Vec& l = c.hl[li];
        Vec l1 = c.dot1(l);
        Vec sl = c.sinv(l);
        for (std::size_t h = 0; h < c.nh; ++h)
          for (std::size_t k = 0; k < c.nh; ++k) {
            Vec lhs(c.A.space, c.f);
            for (const auto& [h1, h2, wh] : c.dpairs(h))
              lhs.add_scaled(c.multA(bar(h1, k), act(m, c.eH(h2), l1)), wh);
            s.require_eq(lhs, bar_eval(c.eH(h), c.multH(sl, c.eH(k))), {li, h, k},
                         {"l=" + l.pretty(), c.labH(h), c.labH(k)});
          }
      }
      s.emit(rep, "15");
    }
    {
      ConditionScan s;  // (16)
      for (std::size_t h = 0; h < c.nh; ++h)
        for (std::size_t k = 0; k < c.nh; ++k) {
          Vec first(c.A.space, c.f), second(c.A.space, c.f);
          for (const auto& [h1, h2, wh] : c.dpairs(h))
            for (const auto& [k1, k2, wk] : c.dpairs(k)) {
              first.add_scaled(c.multA(t.at_basis(h1, k1), bar(h2, k2)), wh * wk);
              second.add_scaled(c.multA(bar(h1, k1), t.at_basis(h2, k2)), wh * wk);
            }
          s.require_eq(first, act(m, c.eH(h), c.dot1(c.eH(k))), {h, k},
                       {c.labH(h), c.labH(k)});
          s.require_eq(second, c.dot1(c.multH(c.eH(h), c.eH(k))), {h, k},
                       {c.labH(h), c.labH(k)});
        }
      s.emit(rep, "16");
    }
    scan_balance(c, inv.table, c.hl, "l").emit(rep, "balance-L");
  } else {
    scan_left_normal_form(c, inv.table).emit(rep, "23");
    {
      ConditionScan s;  // (24)
      for (std::size_t h = 0; h < c.nh; ++h)
        for (std::size_t k = 0; k < c.nh; ++k) {
          Vec first(c.A.space, c.f), second(c.A.space, c.f);
          for (const auto& [h1, h2, wh] : c.dpairs(h))
            for (const auto& [k1, k2, wk] : c.dpairs(k)) {
              first.add_scaled(c.multA(t.at_basis(h1, k1), bar(h2, k2)), wh * wk);
              second.add_scaled(c.multA(bar(h1, k1), t.at_basis(h2, k2)), wh * wk);
            }
          Vec hk1 = c.dot1(c.multH(c.eH(h), c.eH(k)));
          s.require_eq(first, hk1, {h, k}, {c.labH(h), c.labH(k)});
          s.require_eq(second, hk1, {h, k}, {c.labH(h), c.labH(k)});
        }
      s.emit(rep, "24");
    }
  }
  return rep;
}

InverseResult invert_bb(const Measuring& m, const CocycleTable& t, const Scalar& seed) {
  if (t.variant != CocycleVariant::BB)
    throw error("invert_bb requires a bb-variant cocycle");
  Ctx c(m);
  return run_inverse_solve(c, t, bb_inverse_system(c, t), CocycleVariant::BB, seed);
}

InverseResult invert_bb(const Measuring& m, const CocycleTable& t) {
  return invert_bb(m, t, Scalar::zero(m.algebra.field));
}

InverseResult invert_ag(const Measuring& m, const CocycleTable& t, const Scalar& seed) {
  if (t.variant != CocycleVariant::AG)
    throw error("invert_ag requires an ag-variant cocycle");
  Ctx c(m);
  return run_inverse_solve(c, t, ag_inverse_system(c, t), CocycleVariant::AG, seed);
}

InverseResult invert_ag(const Measuring& m, const CocycleTable& t) {
  return invert_ag(m, t, Scalar::zero(m.algebra.field));
}

CocycleInverse tilde_from_bar(const Measuring& m, const CocycleTable& t,
                              const CocycleInverse& bar) {
  if (bar.variant != CocycleVariant::BB)
    throw error("tilde_from_bar expects a bb-variant inverse");
  Ctx c(m);
  std::vector<Vec> table;
  table.reserve(c.nh * c.nh);
  for (std::size_t h = 0; h < c.nh; ++h)
    for (std::size_t k = 0; k < c.nh; ++k) {
      Vec v(c.A.space, c.f);
      for (const auto& [h1, h2, wh] : c.dpairs(h))
        for (const auto& [k1, k2, wk] : c.dpairs(k))
          v.add_scaled(c.multA(c.dot1(c.multH(c.eH(h1), c.eH(k1))),
                               bar.table[h2 * c.nh + k2]),
                       wh * wk);
      table.push_back(std::move(v));
    }
  CocycleInverse tilde{std::move(table), CocycleVariant::BB};
  ConditionReport rep = check_inverse(m, t, tilde);
  if (!rep.all_passed()) {
    std::string msg = "tilde construction failed verification (input does not "
                      "satisfy items (14)-(16)):";
    for (const auto& r : rep.results())
      if (r.failed()) msg += " (" + r.id + ") " + r.witness->describe() + ";";
    throw error(msg);
  }
  return tilde;
}

CocycleTable induce(const CocycleTable& t) {
  if (t.variant != CocycleVariant::BB)
    throw error("induce expects a bb-variant table");
  return CocycleTable(t.measuring, t.table, CocycleVariant::AG);
}

std::optional<CocycleTable> descend(const CocycleTable& t, std::optional<Witness>* why) {
  if (t.variant != CocycleVariant::AG)
    throw error("descend expects an ag-variant table");
  Ctx c(t.measuring);
  ConditionScan s = scan_balance(c, t.table, c.hr, "r");
  ConditionReport rep;
  s.emit(rep, "balance-R");
  if (!rep.at("balance-R").passed()) {
    if (why) *why = *rep.at("balance-R").witness;
    return std::nullopt;
  }
  return CocycleTable(t.measuring, t.table, CocycleVariant::BB);
}

// ------------------------------------------------------- check_aux_lemmas

ConditionReport check_aux_lemmas(const Measuring& m, const CocycleTable& ag) {
  if (ag.variant != CocycleVariant::AG)
    throw error("check_aux_lemmas expects an ag-variant table");
  Ctx c(m);
  ConditionReport rep;
  {
    ConditionScan s;  // k·(h·a) = kh·a for k in H^L ∪ H^R
    std::vector<std::pair<std::string, const std::vector<Vec>*>> sides = {
        {"H^L", &c.hl}, {"H^R", &c.hr}};
    for (const auto& [name, basis] : sides)
      for (std::size_t ki = 0; ki < basis->size(); ++ki) {
        const Vec& k = (*basis)[ki];
        for (std::size_t h = 0; h < c.nh; ++h)
          for (std::size_t a = 0; a < c.na; ++a)
            s.require_eq(act(m, k, m.act_basis(h, a)),
                         act(m, c.multH(k, c.eH(h)), c.eA(a)), {ki, h, a},
                         {name + " k=" + k.pretty(), c.labH(h), c.labA(a)});
      }
    s.emit(rep, "subalgebra-action");
  }
  {
    ConditionScan s;  // (h⁽¹⁾·1)ς(h⁽²⁾⊗k) = ς(h⁽¹⁾⊗k)(h⁽²⁾·1) = ς(h⊗k)
    for (std::size_t h = 0; h < c.nh; ++h)
      for (std::size_t k = 0; k < c.nh; ++k) {
        Vec left(c.A.space, c.f), right(c.A.space, c.f);
        for (const auto& [h1, h2, wh] : c.dpairs(h)) {
          left.add_scaled(c.multA(c.dot1(c.eH(h1)), ag.at_basis(h2, k)), wh);
          right.add_scaled(c.multA(ag.at_basis(h1, k), c.dot1(c.eH(h2))), wh);
        }
        s.require_eq(left, ag.at_basis(h, k), {h, k}, {c.labH(h), c.labH(k)});
        s.require_eq(right, ag.at_basis(h, k), {h, k}, {c.labH(h), c.labH(k)});
      }
    s.emit(rep, "varsigma-unit-absorb");
  }
  {
    ConditionScan s;  // ε(h⁽¹⁾l⁽¹⁾)ς(h⁽²⁾⊗l⁽²⁾) = ς(h⊗l)
    for (std::size_t h = 0; h < c.nh; ++h)
      for (std::size_t l = 0; l < c.nh; ++l) {
        Vec lhs(c.A.space, c.f);
        for (const auto& [h1, h2, wh] : c.dpairs(h))
          for (const auto& [l1, l2, wl] : c.dpairs(l)) {
            Scalar e = counit_vec(c.H.coalg, c.multH(c.eH(h1), c.eH(l1)));
            lhs.add_scaled(ag.at_basis(h2, l2), wh * wl * e);
          }
        s.require_eq(lhs, ag.at_basis(h, l), {h, l}, {c.labH(h), c.labH(l)});
      }
    s.emit(rep, "varsigma-counit-absorb");
  }
  return rep;
}

// -------------------------------------------------------- comparison_iso

ComparisonResult comparison_iso(const Measuring& m, const CocycleTable& t) {
  if (t.variant != CocycleVariant::BB)
    throw error("comparison_iso expects a bb-variant cocycle");
  ComparisonResult out;
  out.preconditions = check_measuring(m);
  out.preconditions.merge(check_bb_cocycle(t));
  out.preconditions.merge(check_equiv_10_12(m, t));

  for (const char* id : {"1", "2", "3", "4", "balance-R", "5", "6", "7", "8", "9"})
    if (!out.preconditions.at(id).passed()) {
      out.status = ComparisonResult::Status::PreconditionFailed;
      return out;
    }
  if (!out.preconditions.at("10").passed()) {
    out.status = ComparisonResult::Status::RefusedCondition10;
    return out;
  }

  Ctx c(m);
  out.bb = build_bb(m, t);
  out.ag = build_ag(m, induce(t));
  const CrossedProduct& bb = *out.bb;
  const CrossedProduct& ag = *out.ag;
  const QuotientSpace& q = *bb.quotient;
  const LinMap& incl = *ag.incl;
  const LinMap& retr = *ag.retr;
  LinMap nab = nabla(m);

  LinMap psi = q.project.compose(incl);   // A×H -> A#H
  LinMap phi = retr.compose(q.section);   // A#H -> A×H

  ConditionReport& rep = out.iso_report;
  auto map_scan = [&](const LinMap& lhs, const LinMap& rhs, const std::string& id) {
    ConditionScan s;
    for (std::size_t j = 0; j < lhs.domain()->dim(); ++j)
      s.require_eq(lhs.column(j), rhs.column(j), {j}, {lhs.domain()->label(j)});
    s.emit(rep, id);
  };

  map_scan(q.project.compose(nab), q.project, "pi-nabla");
  map_scan(nab.compose(incl), incl, "nabla-i");
  map_scan(incl.compose(phi).compose(q.project), nab, "factor-nabla");
  map_scan(psi.compose(phi), LinMap::identity(bb.carrier, c.f), "psi-phi-id");
  map_scan(phi.compose(psi), LinMap::identity(ag.carrier, c.f), "phi-psi-id");

  {
    ConditionScan s;
    for (std::size_t i = 0; i < ag.dim(); ++i)
      for (std::size_t j = 0; j < ag.dim(); ++j)
        s.require_eq(psi.apply(ag.product(i, j)),
                     bb.multiply_vec(psi.column(i), psi.column(j)), {i, j},
                     {ag.carrier->label(i), ag.carrier->label(j)});
    s.emit(rep, "psi-mult");
  }
  {
    ConditionScan s;
    s.require_eq(psi.apply(ag.unit), bb.unit, {}, {"ψ(unit)"});
    s.emit(rep, "psi-unit");
  }
  {
    ConditionScan s;  // ψ(a▷x) = a▷ψ(x) with the natural left A-actions
    Space AH = tensor_space(c.A.space, c.H.space());
    auto lmul = [&](std::size_t a, const Vec& z) {
      Vec r(AH, c.f);
      for (std::size_t p = 0; p < z.dim(); ++p) {
        if (z[p].is_zero()) continue;
        std::size_t b = p / c.nh, h = p % c.nh;
        r.add_scaled(tensor_vec(c.multA(c.eA(a), c.eA(b)), c.eH(h), AH), z[p]);
      }
      return r;
    };
    for (std::size_t a = 0; a < c.na; ++a)
      for (std::size_t x = 0; x < ag.dim(); ++x) {
        Vec on_ag = retr.apply(lmul(a, incl.column(x)));
        Vec on_bb = q.project.apply(lmul(a, q.section.apply(psi.column(x))));
        s.require_eq(psi.apply(on_ag), on_bb, {a, x},
                     {c.labA(a), ag.carrier->label(x)});
      }
    s.emit(rep, "psi-left-linear");
  }
  {
    LinMap idH = LinMap::identity(c.H.space(), c.f);
    map_scan(bb.delta.compose(psi), psi.tensor(idH).compose(ag.delta), "psi-colinear");
  }

  out.psi = std::move(psi);
  out.phi = std::move(phi);
  out.status = rep.all_passed() ? ComparisonResult::Status::Verified
                                : ComparisonResult::Status::IsomorphismFailed;
  return out;
}

}  // namespace weakcp
