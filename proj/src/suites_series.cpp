// Series-type identities: MacMahon (Bos x Ferm = 1) degree by degree, the
// trace-replacement identity behind its telescoping proof, Newton's
// identities at coefficient level (both the e- and h-recursions), the
// matrix-valued lemma behind them, Cayley-Hamilton, and the coefficientwise
// comparison of char(MN) with char(NM).
#include "suites_common.hpp"

namespace manin {
namespace suites_detail {

namespace {

/// All of these run over a single (q)-Manin family: p is set equal to q.
struct SeriesContext {
  ParameterAssignment assign;
  Alphabet alphabet;
  AlgMatrix M;

  SeriesContext(int n, Mode mode, uint64_t seed, Field f)
      : assign(ParameterAssignment::make_square_q(
            n, mode == Mode::yangian ? Mode::generic : mode, seed, f)),
        alphabet({{Family::M, n, n}}),
        M(AlgMatrix::generators(alphabet, Family::M, f)) {}

  RelationSet relations() const {
    RelationSet rs(alphabet, assign.field());
    add_manin_relations(rs, family_gen(alphabet, Family::M, assign.field()),
                        assign.n(), assign.n(), ParamView::q_of(assign),
                        ParamView::p_of(assign));
    return rs;
  }
};

SeedReport run_macmahon(const SuiteRequest& req) {
  return run_blocked_suite(req, [&](uint64_t aseed) {
    int n = req.n;
    Field f = req.field;
    int cap = req.degree ? req.degree : default_degree_cap(n);
    SeriesContext ctx(n, req.mode, aseed, f);
    Block block(ctx.relations());
    // bos[k] = tr S^(k) M_1..M_k, ferm[k] = (-1)^k tr A^(k) M_1..M_k
    std::vector<NCPoly> bos, ferm, ferm_unsigned;
    bos.push_back(NCPoly::one(f));
    ferm.push_back(NCPoly::one(f));
    ferm_unsigned.push_back(NCPoly::one(f));
    for (int k = 1; k <= cap; ++k) {
      bos.push_back(
          traced_chain(projector(ctx.assign, ProjKind::sym_q, k), ctx.M, k));
      NCPoly a = traced_chain(projector(ctx.assign, ProjKind::antisym_q, k),
                              ctx.M, k);
      ferm_unsigned.push_back(a);
      ferm.push_back(k % 2 ? a * (-FieldElement::one(f)) : a);
    }
    for (int d = 1; d <= cap; ++d) {
      NCPoly target(f);
      for (int r = 0; r <= d; ++r) target += bos[r] * ferm[d - r];
      block.positives.push_back({"degree=" + std::to_string(d), target, d});
    }
    if (n >= 2 && cap >= 2) {
      NCPoly target(f);
      for (int r = 0; r <= 2; ++r) target += bos[r] * ferm_unsigned[2 - r];
      block.controls.push_back({"drop-sign degree=2", target, 2});
    }
    std::vector<Block> blocks;
    blocks.push_back(std::move(block));
    return blocks;
  });
}

SeedReport run_trace_replacement(const SuiteRequest& req) {
  return run_blocked_suite(req, [&](uint64_t aseed) {
    int n = req.n;
    Field f = req.field;
    int kmax = std::min(4, req.degree ? req.degree : 4);
    SeriesContext ctx(n, req.mode, aseed, f);
    ParamView q = ParamView::q_of(ctx.assign);
    Block block(ctx.relations());
    for (int k = 1; k <= kmax; ++k) {
      for (int r = 0; r <= k; ++r) {
        // tr S^(r) A^{r+1..k} = [r(k-r+1)/k] tr S^(r) A^{r..k}
        //                      + [(r+1)(k-r)/k] tr S^(r+1) A^{r+1..k}
        ScalarMatrix Sr = projector_on_range(q, false, k, 1, r);
        ScalarMatrix Ahigh = projector_on_range(q, true, k, r + 1, k);
        ScalarMatrix lhs_op = Sr * Ahigh;
        FieldElement c1 =
            FieldElement::from_ratio((long long)r * (k - r + 1), k, f);
        FieldElement c2 =
            FieldElement::from_ratio((long long)(r + 1) * (k - r), k, f);
        ScalarMatrix op = lhs_op;
        if (!c1.is_zero()) {
          ScalarMatrix t1 = Sr * projector_on_range(q, true, k, r, k);
          op = op - t1.scaled(c1);
        }
        if (!c2.is_zero()) {
          ScalarMatrix t2 = projector_on_range(q, false, k, 1, r + 1) * Ahigh;
          op = op - t2.scaled(c2);
        }
        NCPoly target = traced_chain(op, ctx.M, k);
        block.positives.push_back({"k=" + std::to_string(k) +
                                       " r=" + std::to_string(r),
                                   target, k});
      }
    }
    if (n >= 2 && kmax >= 2) {
      int k = 2, r = 1;
      ScalarMatrix Sr = projector_on_range(q, false, k, 1, r);
      ScalarMatrix Ahigh = projector_on_range(q, true, k, r + 1, k);
      // mutated first coefficient r(k-r)/k instead of r(k-r+1)/k
      FieldElement c1 = FieldElement::from_ratio((long long)r * (k - r), k, f);
      FieldElement c2 =
          FieldElement::from_ratio((long long)(r + 1) * (k - r), k, f);
      ScalarMatrix op = Sr * Ahigh;
      op = op - (Sr * projector_on_range(q, true, k, r, k)).scaled(c1);
      op = op - (projector_on_range(q, false, k, 1, r + 1) * Ahigh).scaled(c2);
      block.controls.push_back(
          {"swap-diag coefficient k=2 r=1", traced_chain(op, ctx.M, k), k});
    }
    std::vector<Block> blocks;
    blocks.push_back(std::move(block));
    return blocks;
  });
}

SeedReport run_newton_lemma(const SuiteRequest& req) {
  return run_blocked_suite(req, [&](uint64_t aseed) {
    int n = req.n;
    Field f = req.field;
    int kmax = 3;
    SeriesContext ctx(n, req.mode, aseed, f);
    ParamView q = ParamView::q_of(ctx.assign);
    Block block(ctx.relations());
    for (int k = 1; k <= kmax; ++k) {
      // k tr_{1..k-1} A^(k) M_1..M_k = sum_i (-1)^{k+i+1} e_i M^[k-i]
      ScalarMatrix Ak = projector(ctx.assign, ProjKind::antisym_q, k);
      AlgMatrix lhs = partial_traced_chain(Ak, ctx.M, k)
                          .scaled(NCPoly::constant(FieldElement::from_int(k, f)));
      AlgMatrix rhs(n, n, f);
      for (int i = 0; i <= k - 1; ++i) {
        NCPoly ei = sym_function('e', i, ctx.M, ctx.assign);
        FieldElement sign = FieldElement::from_int(
            ((k + i + 1) % 2 == 0) ? 1 : -1, f);
        rhs = rhs + star_power(q, ctx.M, k - i).scaled(ei * sign);
      }
      AlgMatrix diff = lhs - rhs;
      for (int r0 = 0; r0 < n; ++r0)
        for (int c0 = 0; c0 < n; ++c0)
          if (!diff.at(r0, c0).is_zero())
            block.positives.push_back(
                {"k=" + std::to_string(k) + " entry(" + std::to_string(r0) +
                     "," + std::to_string(c0) + ")",
                 diff.at(r0, c0), k});
    }
    if (n >= 2) {
      // control: scale the left side by k+1 instead of k
      int k = 2;
      ScalarMatrix Ak = projector(ctx.assign, ProjKind::antisym_q, k);
      AlgMatrix lhs =
          partial_traced_chain(Ak, ctx.M, k)
              .scaled(NCPoly::constant(FieldElement::from_int(k + 1, f)));
      AlgMatrix rhs(n, n, f);
      for (int i = 0; i <= k - 1; ++i) {
        NCPoly ei = sym_function('e', i, ctx.M, ctx.assign);
        FieldElement sign =
            FieldElement::from_int(((k + i + 1) % 2 == 0) ? 1 : -1, f);
        rhs = rhs + star_power(q, ctx.M, k - i).scaled(ei * sign);
      }
      AlgMatrix diff = lhs - rhs;
      block.controls.push_back(
          {"drop-sign k-factor k=2 entry(0,0)", diff.at(0, 0), k});
    }
    std::vector<Block> blocks;
    blocks.push_back(std::move(block));
    return blocks;
  });
}

SeedReport run_newton(const SuiteRequest& req) {
  return run_blocked_suite(req, [&](uint64_t aseed) {
    int n = req.n;
    Field f = req.field;
    int kmax = std::min(4, req.degree ? req.degree : 4);
    SeriesContext ctx(n, req.mode, aseed, f);
    ParamView q = ParamView::q_of(ctx.assign);
    Block block(ctx.relations());
    std::vector<NCPoly> e, h, trpow;
    for (int k = 0; k <= kmax; ++k) {
      e.push_back(sym_function('e', k, ctx.M, ctx.assign));
      h.push_back(sym_function('h', k, ctx.M, ctx.assign));
      trpow.push_back(star_power(q, ctx.M, k).trace());
    }
    for (int k = 1; k <= kmax; ++k) {
      // k e_k = sum_{i=0}^{k-1} (-1)^{k+i+1} e_i tr M^[k-i]
      NCPoly target = e[k] * FieldElement::from_int(k, f);
      for (int i = 0; i <= k - 1; ++i) {
        FieldElement sign =
            FieldElement::from_int(((k + i + 1) % 2 == 0) ? 1 : -1, f);
        target -= (e[i] * trpow[k - i]) * sign;
      }
      block.positives.push_back({"e-recursion k=" + std::to_string(k), target,
                                 k});
      // k h_k = sum_{i=1}^{k} (tr M^[i]) h_{k-i}
      NCPoly htarget = h[k] * FieldElement::from_int(k, f);
      for (int i = 1; i <= k; ++i) htarget -= trpow[i] * h[k - i];
      block.positives.push_back({"h-recursion k=" + std::to_string(k), htarget,
                                 k});
    }
    if (kmax >= 2 && n >= 2) {
      // control: flip every sign in the e-recursion at k = 2
      int k = 2;
      NCPoly target = e[k] * FieldElement::from_int(k, f);
      for (int i = 0; i <= k - 1; ++i) {
        FieldElement sign =
            FieldElement::from_int(((k + i) % 2 == 0) ? 1 : -1, f);
        target -= (e[i] * trpow[k - i]) * sign;
      }
      block.controls.push_back({"drop-sign e-recursion k=2", target, k});
    }
    std::vector<Block> blocks;
    blocks.push_back(std::move(block));
    return blocks;
  });
}

SeedReport run_cayley_hamilton(const SuiteRequest& req) {
  return run_blocked_suite(req, [&](uint64_t aseed) {
    int n = req.n;
    Field f = req.field;
    SeriesContext ctx(n, req.mode, aseed, f);
    ParamView q = ParamView::q_of(ctx.assign);
    Block block(ctx.relations());
    auto build = [&](bool alternate) {
      AlgMatrix acc(n, n, f);
      for (int k = 0; k <= n; ++k) {
        NCPoly ek = sym_function('e', k, ctx.M, ctx.assign);
        FieldElement sign =
            FieldElement::from_int(alternate && (k % 2) ? -1 : 1, f);
        acc = acc + star_power(q, ctx.M, n - k).scaled(ek * sign);
      }
      return acc;
    };
    AlgMatrix lhs = build(true);
    for (int r0 = 0; r0 < n; ++r0)
      for (int c0 = 0; c0 < n; ++c0)
        if (!lhs.at(r0, c0).is_zero())
          block.positives.push_back({"entry(" + std::to_string(r0) + "," +
                                         std::to_string(c0) + ")",
                                     lhs.at(r0, c0), n});
    if (n >= 2) {
      AlgMatrix allplus = build(false);
      block.controls.push_back(
          {"drop-sign entry(0,0)", allplus.at(0, 0), n});
    }
    std::vector<Block> blocks;
    blocks.push_back(std::move(block));
    return blocks;
  });
}

SeedReport run_char_mn_nm(const SuiteRequest& req) {
  return run_blocked_suite(req, [&](uint64_t aseed) {
    int n = req.n, m = req.m;
    Field f = req.field;
    ParameterAssignment assign =
        ParameterAssignment::make(n, m, req.mode, aseed, f);
    ParamView q = ParamView::q_of(assign), p = ParamView::p_of(assign);
    Alphabet al({{Family::M, n, m}, {Family::N, m, n}});
    RelationSet rs(al, f);
    add_manin_relations(rs, family_gen(al, Family::M, f), n, m, q, p);
    add_manin_relations(rs, family_gen(al, Family::N, f), m, n, p, q);
    add_commuting_relations(rs, al, Family::M, Family::N);
    Block block(std::move(rs));
    AlgMatrix M = AlgMatrix::generators(al, Family::M, f);
    AlgMatrix N = AlgMatrix::generators(al, Family::N, f);
    AlgMatrix MN = M * N;  // n x n, (q)-Manin
    AlgMatrix NM = N * M;  // m x m, (p)-Manin
    int lo = std::min(n, m), hi = std::max(n, m);
    auto e_of = [&](const AlgMatrix& base, bool p_flavor, int k) {
      ProjKind kind = p_flavor ? ProjKind::antisym_p : ProjKind::antisym_q;
      return traced_chain(projector(assign, kind, k), base, k);
    };
    for (int k = 1; k <= lo; ++k)
      block.positives.push_back({"e_k(MN)=e_k(NM) k=" + std::to_string(k),
                                 e_of(MN, false, k) - e_of(NM, true, k),
                                 2 * k});
    for (int k = lo + 1; k <= hi; ++k) {
      const AlgMatrix& big = n >= m ? MN : NM;
      bool p_flavor = !(n >= m);
      block.positives.push_back(
          {"top-vanishing e_k k=" + std::to_string(k) + " [t^{n-m} factor]",
           e_of(big, p_flavor, k), 2 * k});
    }
    if (req.mode == Mode::generic || req.mode == Mode::yangian) {
      NCPoly t = e_of(MN, false, 1) -
                 e_of(NM, true, 1) * assign.lookup('q', 1, std::min(2, n));
      if (n >= 2)
        block.controls.push_back({"drop-sign scaled e_1", t, 2});
    }
    std::vector<Block> blocks;
    blocks.push_back(std::move(block));
    return blocks;
  });
}

}  // namespace

SeedReport run_series_suite(const SuiteRequest& req) {
  if (req.id == "series.macmahon") return run_macmahon(req);
  if (req.id == "series.trace-replacement") return run_trace_replacement(req);
  if (req.id == "series.newton-lemma") return run_newton_lemma(req);
  if (req.id == "series.newton") return run_newton(req);
  if (req.id == "series.cayley-hamilton") return run_cayley_hamilton(req);
  if (req.id == "series.char-mn-nm") return run_char_mn_nm(req);
  throw MathError("unknown series suite: " + req.id);
}

}  // namespace suites_detail
}  // namespace manin
