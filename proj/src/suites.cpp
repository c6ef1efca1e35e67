#include "manin/suites.hpp"

#include <algorithm>

#include "suites_common.hpp"

namespace manin {
namespace suites_detail {

std::string render_witness(const NCPoly& w, const Alphabet& a) {
  if (w.term_count() <= 8) return w.to_string(a);
  std::vector<const Word*> order;
  for (const auto& [word, _] : w.terms()) order.push_back(&word);
  std::sort(order.begin(), order.end(),
            [](const Word* x, const Word* y) { return x->less(*y); });
  std::string s;
  for (int i = 0; i < 5; ++i) {
    if (i) s += " + ";
    s += w.terms().at(*order[i]).to_string() + "*" + a.word_name(*order[i]);
  }
  s += " (+" + std::to_string(w.term_count() - 5) + " more terms)";
  return s;
}

uint64_t derived_seed(uint64_t seed, uint64_t salt) {
  Rng rng(seed ^ (salt * 0x9e3779b97f4a7c15ULL));
  return rng.next();
}

SeedReport make_header(const SuiteRequest& req) {
  SeedReport rep;
  rep.id = req.id;
  rep.n = req.n;
  rep.m = req.m;
  rep.s = req.s;
  rep.mode = mode_name(req.mode);
  rep.prime = req.field.prime;
  rep.seed = req.seed;
  rep.sz_bound = format_sz_bound(0, req.field);
  return rep;
}

namespace {

void run_one_block(SeedReport& rep, Block& block, const SuiteRequest& req,
                   unsigned long long& deg_estimate) {
  MembershipEngine eng(block.rels, req.guard_words);
  std::vector<const NCPoly*> all;
  for (auto& c : block.positives) all.push_back(&c.target);
  for (auto& c : block.controls) all.push_back(&c.target);
  bool control_only = block.positives.empty();
  try {
    eng.prepare(all);
    for (auto& c : block.positives) {
      MembershipVerdict v = eng.test(c.target);
      CaseResult r;
      r.indices = c.label;
      r.degree = c.degree;
      r.member = v.member;
      if (!v.member) r.witness = render_witness(v.witness, block.rels.alphabet());
      rep.cases.push_back(std::move(r));
    }
    for (auto& c : block.controls) {
      CaseResult r;
      r.indices = c.label;
      r.degree = c.degree;
      try {
        MembershipVerdict v = eng.test(c.target);
        r.member = v.member;
        if (!v.member)
          r.witness = render_witness(v.witness, block.rels.alphabet());
      } catch (const DegenerateAssignment&) {
        r.member = true;
        r.note = "degenerate";
      }
      rep.controls.push_back(std::move(r));
    }
  } catch (const DegenerateAssignment&) {
    if (!control_only) throw;
    for (auto& c : block.controls) {
      CaseResult r;
      r.indices = c.label;
      r.degree = c.degree;
      r.member = true;
      r.note = "degenerate";
      rep.controls.push_back(std::move(r));
    }
    return;
  }
  // Non-vacuity: every touched ideal component must have rank strictly
  // below its word count, otherwise the membership checks say nothing.
  bool vacuous = false;
  int max_w = 0;
  for (const ComponentStats& st : eng.stats()) {
    max_w = std::max(max_w, st.weight);
    if (!st.structural && st.closure_words > 0 && st.rank >= st.closure_words)
      vacuous = true;
    unsigned long long d = 2ull * (unsigned long long)st.weight *
                           (unsigned long long)(st.rank + 1);
    deg_estimate = std::max(deg_estimate, d);
  }
  if (block.vacuity_case && !block.positives.empty() &&
      !block.rels.relations().empty()) {
    CaseResult r;
    r.indices = "non-vacuity";
    r.degree = max_w;
    r.member = !vacuous;
    rep.cases.push_back(std::move(r));
  }
}

}  // namespace

SeedReport run_blocked_suite(
    const SuiteRequest& req,
    const std::function<std::vector<Block>(uint64_t)>& builder) {
  SeedReport rep = make_header(req);
  uint64_t aseed = req.seed;
  for (int attempt = 0;; ++attempt) {
    rep.cases.clear();
    rep.controls.clear();
    unsigned long long deg_estimate = 0;
    try {
      std::vector<Block> blocks = builder(aseed);
      for (Block& b : blocks) run_one_block(rep, b, req, deg_estimate);
      rep.sz_bound = format_sz_bound(deg_estimate, req.field);
      return rep;
    } catch (const DegenerateAssignment&) {
      if (attempt >= 3) {
        CaseResult r;
        r.indices = "assignment";
        r.degree = 0;
        r.member = false;
        r.note = "degenerate after 4 attempts";
        rep.cases.push_back(std::move(r));
        return rep;
      }
      ++rep.resampled;
      aseed = derived_seed(aseed, 0xdeadull + attempt);
    }
  }
}

}  // namespace suites_detail

using namespace suites_detail;

namespace {

// ---------------------------------------------------------------------------
// signs: the epsilon/mu factorization identities, exhaustive over the
// request dimension (acceptance uses n = 4).

SeedReport run_signs_suite(const SuiteRequest& req) {
  SeedReport rep = make_header(req);
  int n = req.n;
  ParameterAssignment a =
      ParameterAssignment::make(n, n, req.mode, req.seed, req.field);
  ParamView q = ParamView::q_of(a);
  Field f = req.field;

  std::vector<MultiIndex> all_inc;
  for (int r = 0; r <= n; ++r)
    for (const auto& I : increasing_indices(n, r)) all_inc.push_back(I);

  {  // eps(q, I + K^tau) = eps(q, I + K) eps(q, K^tau)
    CaseResult r;
    r.indices = "eps-factorization exhaustive n=" + std::to_string(n);
    r.member = true;
    for (const auto& I : all_inc)
      for (const auto& K : all_inc) {
        if (!(eps_index(q, juxtapose(I, reversed(K))) ==
              eps_index(q, juxtapose(I, K)) * eps_index(q, reversed(K)))) {
          r.member = false;
          r.witness = "I=" + index_to_string(I) + " K=" + index_to_string(K);
        }
      }
    rep.cases.push_back(std::move(r));
  }
  {  // nested factorization for I contained in K
    CaseResult r;
    r.indices = "eps-nested-factorization exhaustive n=" + std::to_string(n);
    r.member = true;
    for (const auto& K : all_inc)
      for (const auto& I : all_inc) {
        bool contained = true;
        for (int v : I)
          if (std::find(K.begin(), K.end(), v) == K.end()) contained = false;
        if (!contained) continue;
        MultiIndex KI = complement(I, K);
        if (!(eps_index(q, reversed(K)) ==
              eps_index(q, reversed(I)) * eps_index(q, reversed(KI)) *
                  eps_index(q, juxtapose(I, KI)) *
                  eps_index(q, juxtapose(KI, I)))) {
          r.member = false;
          r.witness = "I=" + index_to_string(I) + " K=" + index_to_string(K);
        }
      }
    rep.cases.push_back(std::move(r));
  }
  {  // eps_index(I) = eps_perm(I^or, sorting permutation)
    CaseResult r;
    r.indices = "eps-index-vs-perm";
    r.member = true;
    for (int len = 1; len <= n; ++len)
      for (const auto& I : all_tuples(n, len)) {
        if (has_repeat(I)) continue;
        MultiIndex S = sorted_index(I);
        Perm sigma(len);
        for (int t = 0; t < len; ++t)
          sigma[t] =
              (int)(std::find(S.begin(), S.end(), I[t]) - S.begin()) + 1;
        if (!(eps_index(q, I) == eps_perm(q, S, sigma))) {
          r.member = false;
          r.witness = "I=" + index_to_string(I);
        }
      }
    rep.cases.push_back(std::move(r));
  }
  {  // classical: eps reduces to the sign and mu to 1
    CaseResult r;
    r.indices = "classical-reduction";
    r.member = true;
    ParameterAssignment cl =
        ParameterAssignment::make(n, n, Mode::classical, req.seed, f);
    ParamView cq = ParamView::q_of(cl), cp = ParamView::p_of(cl);
    MultiIndex I = iota_index(n);
    for (const Perm& sgm : all_perms(n)) {
      FieldElement sign =
          FieldElement::from_int(inversions(sgm) % 2 ? -1 : 1, f);
      if (!(eps_perm(cq, I, sgm) == sign) ||
          !(mu_perm(cp, I, sgm) == FieldElement::one(f))) {
        r.member = false;
        r.witness = "sigma inversions=" + std::to_string(inversions(sgm));
      }
    }
    rep.cases.push_back(std::move(r));
  }
  // Controls: with the reversal dropped the factorization must fail
  // somewhere, and eps stripped of its minus signs must differ from eps.
  if (n >= 2) {
    CaseResult r;
    r.indices = "drop-sign eps-factorization";
    r.member = true;  // stays member only if the mutation goes undetected
    for (const auto& I : all_inc)
      for (const auto& K : all_inc)
        if (!(eps_index(q, juxtapose(I, reversed(K))) ==
              eps_index(q, juxtapose(I, K)) * eps_index(q, K)))
          r.member = false;
    rep.controls.push_back(std::move(r));

    CaseResult r2;
    r2.indices = "drop-minus eps-vs-unsigned";
    r2.member = true;
    for (const auto& K : all_inc) {
      if (K.size() < 2) continue;
      FieldElement unsigned_eps = FieldElement::one(f);
      MultiIndex Kt = reversed(K);
      for (size_t s1 = 0; s1 < Kt.size(); ++s1)
        for (size_t t1 = s1 + 1; t1 < Kt.size(); ++t1)
          if (Kt[s1] > Kt[t1])
            unsigned_eps = unsigned_eps * q.at(Kt[s1], Kt[t1]);
      if (!(eps_index(q, Kt) == unsigned_eps)) r2.member = false;
    }
    rep.controls.push_back(std::move(r2));
  }
  rep.sz_bound = format_sz_bound(2ull * n * n, req.field);
  return rep;
}

// ---------------------------------------------------------------------------
// operators: P^2 = 1, braid, idempotency of the projector family, S A = 0.

SeedReport run_operators_suite(const SuiteRequest& req) {
  SeedReport rep = make_header(req);
  int n = req.n;
  Field f = req.field;
  ParameterAssignment a =
      ParameterAssignment::make(n, n, req.mode, req.seed, f);
  ParamView q = ParamView::q_of(a), p = ParamView::p_of(a);
  auto push = [&](const std::string& label, bool ok) {
    CaseResult r;
    r.indices = label;
    r.member = ok;
    rep.cases.push_back(std::move(r));
  };

  ScalarMatrix Pq = permutation_op(q), Pp = permutation_op(p);
  ScalarMatrix I2 = ScalarMatrix::identity({n, n}, f);
  push("P2-q", Pq * Pq == I2);
  push("P2-p", Pp * Pp == I2);
  {
    ScalarMatrix P12 = embed_two_slot(Pq, 1, 2, 3, n);
    ScalarMatrix P23 = embed_two_slot(Pq, 2, 3, 3, n);
    push("braid-q", P12 * P23 * P12 == P23 * P12 * P23);
  }
  const int kmax = 4;
  for (int k = 1; k <= kmax; ++k) {
    ScalarMatrix A = projector(a, ProjKind::antisym_q, k);
    ScalarMatrix S = projector(a, ProjKind::sym_q, k);
    push("idem-A-q k=" + std::to_string(k), A * A == A);
    push("idem-S-q k=" + std::to_string(k), S * S == S);
    if (k >= 2) push("SA-zero k=" + std::to_string(k), (S * A).is_zero());
    if (k == 2)
      push("A-plus-S k=2", A + S == ScalarMatrix::identity(A.row_factors(), f));
  }
  {
    // The mixed projector is a scaled idempotent in general; it is an honest
    // idempotent exactly in the one-parameter-family regime p = q, which is
    // where the suite asserts it.
    ParameterAssignment sq = ParameterAssignment::make_square_q(
        n, req.mode == Mode::yangian ? Mode::generic : req.mode, req.seed, f);
    for (int k = 1; k <= kmax; ++k) {
      ScalarMatrix A = projector(sq, ProjKind::mixed_qp, k);
      push("idem-mixed-qp(q=p) k=" + std::to_string(k), A * A == A);
    }
  }
  if (n >= 2) {
    ParameterAssignment ya = ParameterAssignment::make(
        n, n, Mode::yangian, derived_seed(req.seed, 0x9aa), f);
    for (int k = 1; k <= kmax; ++k) {
      ScalarMatrix A = projector(ya, ProjKind::yangian_antisym, k,
                                 BracketConvention::geometric_u2_inv);
      push("idem-yangian k=" + std::to_string(k) + " [conv=1+u^-2+...]",
           A * A == A);
    }
  }
  if (n <= 3) {
    ScalarMatrix Atop = projector(a, ProjKind::antisym_q, n + 1);
    push("antisym-top-vanishing k=n+1", Atop.is_zero());
  }

  if (n >= 2) {
    CaseResult r;
    r.indices = "wrong-normalizer A(2)";
    ScalarMatrix bad = (I2 - Pq).scaled(FieldElement::from_ratio(1, 3, f));
    r.member = (bad * bad == bad);
    rep.controls.push_back(std::move(r));
  }
  if (n >= 2 &&
      (req.mode == Mode::generic || req.mode == Mode::one_parameter)) {
    // broken() violates q12 q21 = 1 in these modes, so P^2 = 1 must fail
    CaseResult r;
    r.indices = "break-constraint P2";
    ParameterAssignment br = a.broken(req.seed);
    ScalarMatrix Pb = permutation_op(ParamView::q_of(br));
    r.member = (Pb * Pb == I2);
    rep.controls.push_back(std::move(r));
  } else if (n >= 2 && req.mode == Mode::yangian) {
    // here broken() violates p12 q12 = u^2 instead, which destroys the
    // idempotency of the u-deformed antisymmetrizer
    CaseResult r;
    r.indices = "break-constraint yangian-A idempotency";
    ParameterAssignment br = a.broken(req.seed);
    ScalarMatrix Ab = projector(br, ProjKind::yangian_antisym, 2,
                                BracketConvention::geometric_u2_inv);
    r.member = (Ab * Ab == Ab);
    rep.controls.push_back(std::move(r));
  }
  rep.sz_bound = format_sz_bound(4ull * n, req.field);
  return rep;
}

// ---------------------------------------------------------------------------
// minors.*: column permutation, Laplace, Pluecker, adjugate row, comodule
// and the antisymmetrizer factorization. All run on a square generic matrix.

struct MinorsContext {
  ParameterAssignment assign;
  Alphabet alphabet;
  AlgMatrix M;
  NCPoly cdetM;

  MinorsContext(int n, Mode mode, uint64_t seed, Field f)
      : assign(ParameterAssignment::make(n, n, mode, seed, f)),
        alphabet({{Family::M, n, n}}),
        M(AlgMatrix::generators(alphabet, Family::M, f)),
        cdetM(f) {
    MultiIndex full = iota_index(n);
    cdetM =
        cdet(ParamView::q_of(assign), full, submatrix_entry(M, full, full));
  }

  RelationSet relations() const {
    RelationSet rs(alphabet, assign.field());
    add_manin_relations(rs, family_gen(alphabet, Family::M, assign.field()),
                        assign.n(), assign.m(), ParamView::q_of(assign),
                        ParamView::p_of(assign));
    return rs;
  }
};

SeedReport run_column_perm(const SuiteRequest& req) {
  return run_blocked_suite(req, [&](uint64_t aseed) {
    int n = req.n;
    MinorsContext ctx(n, req.mode, aseed, req.field);
    ParamView q = ParamView::q_of(ctx.assign), p = ParamView::p_of(ctx.assign);
    Block block(ctx.relations());
    MultiIndex full = iota_index(n);
    for (const auto& I : all_tuples(n, n)) {
      NCPoly lhs = cdet(q, full, [&](int a1, int b) {
        return ctx.M.at(a1 - 1, I[b - 1] - 1);
      });
      NCPoly target = lhs - ctx.cdetM * eps_index(p, I);
      block.positives.push_back({"I=" + index_to_string(I), target, n});
    }
    if (n >= 2) {
      MultiIndex I = iota_index(n);
      std::swap(I[0], I[1]);
      NCPoly lhs = cdet(q, full, [&](int a1, int b) {
        return ctx.M.at(a1 - 1, I[b - 1] - 1);
      });
      block.controls.push_back(
          {"drop-sign I=" + index_to_string(I), lhs - ctx.cdetM, n});
    }
    std::vector<Block> blocks;
    blocks.push_back(std::move(block));
    if (n >= 2 &&
        (req.mode == Mode::generic || req.mode == Mode::one_parameter)) {
      // break-constraint: under an assignment with q12 q21 != 1 the column
      // relation written with the inverse convention, M11 M21 - q12^-1 M21
      // M11, leaves the (broken) ideal; under a valid assignment it is the
      // stored relation itself. (In yangian mode broken() violates the
      // p q = u^2 link instead; the yangian suites control for that.)
      ParameterAssignment broken = ctx.assign.broken(req.seed);
      RelationSet rs(ctx.alphabet, req.field);
      add_manin_relations(rs, family_gen(ctx.alphabet, Family::M, req.field),
                          n, n, ParamView::q_of(broken),
                          ParamView::p_of(broken));
      Block ctrl(std::move(rs));
      Field f = req.field;
      NCPoly m11 = NCPoly::generator(ctx.alphabet.letter(Family::M, 1, 1), f);
      NCPoly m21 = NCPoly::generator(ctx.alphabet.letter(Family::M, 2, 1), f);
      NCPoly target =
          m11 * m21 - (m21 * m11) * broken.lookup('q', 1, 2).inv();
      ctrl.controls.push_back({"break-constraint column-relation", target, 2});
      blocks.push_back(std::move(ctrl));
    }
    return blocks;
  });
}

SeedReport run_laplace(const SuiteRequest& req) {
  return run_blocked_suite(req, [&](uint64_t aseed) {
    int n = req.n;
    MinorsContext ctx(n, req.mode, aseed, req.field);
    ParamView q = ParamView::q_of(ctx.assign), p = ParamView::p_of(ctx.assign);
    MultiIndex full = iota_index(n);
    Block block(ctx.relations());
    auto lhs_sum = [&](int r, const MultiIndex& I, const MultiIndex& K,
                       bool with_eps) {
      NCPoly acc(req.field);
      for (const auto& J : increasing_indices(n, r)) {
        MultiIndex Jc = complement(J, full);
        NCPoly t = cdet(q, J, submatrix_entry(ctx.M, J, I)) *
                   cdet(q, Jc, submatrix_entry(ctx.M, Jc, K));
        if (with_eps) t = t * eps_index(q, juxtapose(J, Jc));
        acc += t;
      }
      return acc;
    };
    for (int r = 0; r <= n; ++r)
      for (const auto& I : increasing_indices(n, r))
        for (const auto& K : increasing_indices(n, n - r)) {
          NCPoly target = lhs_sum(r, I, K, true) -
                          ctx.cdetM * eps_index(p, juxtapose(I, K));
          block.positives.push_back({"r=" + std::to_string(r) +
                                         " I=" + index_to_string(I) +
                                         " K=" + index_to_string(K),
                                     target, n});
        }
    if (n >= 2) {
      MultiIndex I = {1}, K = complement({1}, full);
      NCPoly target = lhs_sum(1, I, K, false) -
                      ctx.cdetM * eps_index(p, juxtapose(I, K));
      block.controls.push_back({"drop-sign r=1 I=(1)", target, n});
    }
    std::vector<Block> blocks;
    blocks.push_back(std::move(block));
    return blocks;
  });
}

SeedReport run_plucker(const SuiteRequest& req) {
  return run_blocked_suite(req, [&](uint64_t aseed) {
    int n = req.n;
    MinorsContext ctx(n, req.mode, aseed, req.field);
    ParamView q = ParamView::q_of(ctx.assign);
    Block block(ctx.relations());
    auto plucker_sum = [&](int r, const MultiIndex& K, const MultiIndex& I,
                           bool flip_first) {
      NCPoly acc(req.field);
      bool first = true;
      for (const auto& Jpos : increasing_indices(2 * r, r)) {
        MultiIndex J, KJ;
        std::vector<char> taken(2 * r, 0);
        for (int t : Jpos) {
          J.push_back(K[t - 1]);
          taken[t - 1] = 1;
        }
        for (int t = 0; t < 2 * r; ++t)
          if (!taken[t]) KJ.push_back(K[t]);
        NCPoly t = (cdet(q, J, submatrix_entry(ctx.M, J, I)) *
                    cdet(q, KJ, submatrix_entry(ctx.M, KJ, I))) *
                   eps_index(q, juxtapose(J, KJ));
        if (flip_first && first) t = t * (-FieldElement::one(req.field));
        first = false;
        acc += t;
      }
      return acc;
    };
    for (int r = 1; 2 * r <= n; ++r)
      for (const auto& K : increasing_indices(n, 2 * r))
        for (const auto& I : increasing_indices(n, r))
          block.positives.push_back({"r=" + std::to_string(r) +
                                         " K=" + index_to_string(K) +
                                         " I=" + index_to_string(I),
                                     plucker_sum(r, K, I, false), 2 * r});
    if (n >= 2) {
      MultiIndex K = increasing_indices(n, 2)[0];
      MultiIndex I = {1};
      block.controls.push_back({"drop-sign r=1", plucker_sum(1, K, I, true), 2});
    }
    std::vector<Block> blocks;
    blocks.push_back(std::move(block));
    return blocks;
  });
}

SeedReport run_adjugate(const SuiteRequest& req) {
  return run_blocked_suite(req, [&](uint64_t aseed) {
    int n = req.n;
    MinorsContext ctx(n, req.mode, aseed, req.field);
    ParamView q = ParamView::q_of(ctx.assign), p = ParamView::p_of(ctx.assign);
    MultiIndex full = iota_index(n);
    Block block(ctx.relations());
    auto lhs_sum = [&](int i, int k) {
      MultiIndex ic = complement({i}, full);
      NCPoly acc(req.field);
      for (int j = 1; j <= n; ++j) {
        MultiIndex jc = complement({j}, full);
        acc += (cdet(q, jc, submatrix_entry(ctx.M, jc, ic)) *
                ctx.M.at(j - 1, k - 1)) *
               eps_index(q, juxtapose(jc, {j}));
      }
      return acc;
    };
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= n; ++k) {
        MultiIndex ic = complement({i}, full);
        NCPoly target =
            lhs_sum(i, k) - ctx.cdetM * eps_index(p, juxtapose(ic, {k}));
        block.positives.push_back(
            {"i=" + std::to_string(i) + " k=" + std::to_string(k), target, n});
      }
    if (n >= 2)
      block.controls.push_back(
          {"drop-sign i=k=1", lhs_sum(1, 1) - ctx.cdetM, n});
    std::vector<Block> blocks;
    blocks.push_back(std::move(block));
    return blocks;
  });
}

SeedReport run_comodule(const SuiteRequest& req) {
  return run_blocked_suite(req, [&](uint64_t aseed) {
    int n = req.n;
    Field f = req.field;
    ParameterAssignment assign =
        ParameterAssignment::make(n, n, req.mode, aseed, f);
    ParamView q = ParamView::q_of(assign), p = ParamView::p_of(assign);
    std::vector<Block> blocks;

    {  // direction 1: Y = MX satisfies the q-plane given the p-plane on X
      Alphabet al({{Family::M, n, n}, {Family::X, n, 0}});
      RelationSet rs(al, f);
      add_manin_relations(rs, family_gen(al, Family::M, f), n, n, q, p);
      add_quantum_plane_relations(rs, al, Family::X, p);
      add_commuting_relations(rs, al, Family::M, Family::X);
      Block block(std::move(rs));
      std::vector<NCPoly> y;
      for (int i = 1; i <= n; ++i) {
        NCPoly yi(f);
        for (int j = 1; j <= n; ++j)
          yi += NCPoly::generator(al.letter(Family::M, i, j), f) *
                NCPoly::generator(al.letter(Family::X, j), f);
        y.push_back(yi);
      }
      // A_q(Y x Y) = 0 entrywise: entry (a,b) is (y_a y_b - q_ba y_b y_a)/2.
      for (int a1 = 1; a1 <= n; ++a1)
        for (int b = 1; b <= n; ++b) {
          NCPoly target =
              y[a1 - 1] * y[b - 1] - (y[b - 1] * y[a1 - 1]) * q.at(b, a1);
          block.positives.push_back({"A(YxY)=0 a=" + std::to_string(a1) +
                                         " b=" + std::to_string(b),
                                     target, 4});
        }
      if (n >= 2 && (req.mode == Mode::generic || req.mode == Mode::yangian)) {
        NCPoly wrong = y[0] * y[1] - (y[1] * y[0]) * p.at(2, 1);
        block.controls.push_back({"drop-sign wrong-plane a=1 b=2", wrong, 4});
      }
      blocks.push_back(std::move(block));
    }
    {  // direction 2: Phi = Psi M satisfies the p-exterior relations
      Alphabet al({{Family::M, n, n}, {Family::Psi, n, 0}});
      RelationSet rs(al, f);
      add_manin_relations(rs, family_gen(al, Family::M, f), n, n, q, p);
      add_grassmann_relations(rs, al, Family::Psi, q);
      add_commuting_relations(rs, al, Family::M, Family::Psi);
      Block block(std::move(rs));
      std::vector<NCPoly> phi;
      for (int j = 1; j <= n; ++j) {
        NCPoly pj(f);
        for (int i = 1; i <= n; ++i)
          pj += NCPoly::generator(al.letter(Family::Psi, i), f) *
                NCPoly::generator(al.letter(Family::M, i, j), f);
        phi.push_back(pj);
      }
      for (int a1 = 1; a1 <= n; ++a1)
        for (int b = 1; b <= n; ++b) {
          NCPoly target = a1 == b ? phi[a1 - 1] * phi[a1 - 1]
                                  : phi[a1 - 1] * phi[b - 1] +
                                        (phi[b - 1] * phi[a1 - 1]) * p.at(a1, b);
          block.positives.push_back({"(PhixPhi)S_p=0 a=" + std::to_string(a1) +
                                         " b=" + std::to_string(b),
                                     target, 4});
        }
      blocks.push_back(std::move(block));
    }
    {  // p:comm2 on the tensor powers, entrywise
      Alphabet al({{Family::M, n, n}});
      RelationSet rs(al, f);
      add_manin_relations(rs, family_gen(al, Family::M, f), n, n, q, p);
      Block block(std::move(rs));
      AlgMatrix M = AlgMatrix::generators(al, Family::M, f);
      for (int k = 2; k <= n; ++k) {
        ScalarMatrix Aq = projector(assign, ProjKind::antisym_q, k);
        ScalarMatrix Ap = projector(assign, ProjKind::antisym_p, k);
        ScalarMatrix Sq = projector(assign, ProjKind::sym_q, k);
        ScalarMatrix Sp = projector(assign, ProjKind::sym_p, k);
        ScalarMatrix Id = ScalarMatrix::identity(Aq.row_factors(), f);
        AlgMatrix lhs1 =
            sandwich_chain(Aq, M, k, nullptr) - sandwich_chain(Aq, M, k, &Ap);
        AlgMatrix lhs2 =
            sandwich_chain(Id, M, k, &Sp) - sandwich_chain(Sq, M, k, &Sp);
        for (int r0 = 0; r0 < lhs1.rows(); ++r0)
          for (int c0 = 0; c0 < lhs1.cols(); ++c0) {
            if (!lhs1.at(r0, c0).is_zero())
              block.positives.push_back(
                  {"AqM..M(1-Ap) k=" + std::to_string(k) + " entry(" +
                       std::to_string(r0) + "," + std::to_string(c0) + ")",
                   lhs1.at(r0, c0), k});
            if (!lhs2.at(r0, c0).is_zero())
              block.positives.push_back(
                  {"(1-Sq)M..MSp k=" + std::to_string(k) + " entry(" +
                       std::to_string(r0) + "," + std::to_string(c0) + ")",
                   lhs2.at(r0, c0), k});
          }
      }
      if (!block.positives.empty()) blocks.push_back(std::move(block));
    }
    return blocks;
  });
}

SeedReport run_factorization(const SuiteRequest& req) {
  return run_blocked_suite(req, [&](uint64_t aseed) {
    int n = req.n;
    Field f = req.field;
    MinorsContext ctx(n, req.mode, aseed, f);
    Block block(ctx.relations());
    ScalarMatrix Aq = projector(ctx.assign, ProjKind::antisym_q, n);
    ScalarMatrix Aqp = projector(ctx.assign, ProjKind::mixed_qp, n);
    AlgMatrix lhs = sandwich_chain(Aq, ctx.M, n, nullptr);
    for (int r0 = 0; r0 < lhs.rows(); ++r0)
      for (int c0 = 0; c0 < lhs.cols(); ++c0) {
        NCPoly target = lhs.at(r0, c0) - ctx.cdetM * Aqp.at(r0, c0);
        if (target.is_zero()) continue;
        block.positives.push_back({"entry(" + std::to_string(r0) + "," +
                                       std::to_string(c0) + ")",
                                   target, n});
      }
    if (n >= 2 && req.mode != Mode::classical) {
      int r0 = tensor_encode(iota_index(n), n);
      NCPoly target =
          lhs.at(r0, r0) -
          ctx.cdetM * (Aqp.at(r0, r0) * ctx.assign.lookup('q', 1, 2));
      block.controls.push_back({"wrong-scalar diagonal entry", target, n});
    }
    std::vector<Block> blocks;
    blocks.push_back(std::move(block));
    return blocks;
  });
}

// ---------------------------------------------------------------------------
// binet.det / binet.per: Cauchy-Binet through a second commuting family.

SeedReport run_binet_det(const SuiteRequest& req) {
  return run_blocked_suite(req, [&](uint64_t aseed) {
    int n = req.n, m = req.m, s = req.s;
    Field f = req.field;
    ParameterAssignment assign =
        ParameterAssignment::make(n, m, req.mode, aseed, f);
    ParamView q = ParamView::q_of(assign), p = ParamView::p_of(assign);
    Alphabet al({{Family::M, n, m}, {Family::N, m, s}});
    RelationSet rs(al, f);
    add_manin_relations(rs, family_gen(al, Family::M, f), n, m, q, p);
    add_commuting_relations(rs, al, Family::M, Family::N);
    Block block(std::move(rs));
    AlgMatrix M = AlgMatrix::generators(al, Family::M, f);
    AlgMatrix N = AlgMatrix::generators(al, Family::N, f);
    AlgMatrix MN = M * N;
    for (int r = 1; r <= std::min(n, s); ++r)
      for (const auto& I : increasing_indices(n, r))
        for (const auto& K : all_tuples(s, r)) {
          NCPoly lhs = cdet(q, I, submatrix_entry(MN, I, K));
          NCPoly rhs(f);
          if (r <= m)
            for (const auto& J : increasing_indices(m, r))
              rhs += cdet(q, I, submatrix_entry(M, I, J)) *
                     cdet(p, J, submatrix_entry(N, J, K));
          std::string label = "r=" + std::to_string(r) +
                              " I=" + index_to_string(I) +
                              " K=" + index_to_string(K);
          if (r > m) label += " [vanishing r>m]";
          block.positives.push_back({label, lhs - rhs, 2 * r});
        }
    if (m >= 2 && std::min(n, s) >= 2 &&
        (req.mode == Mode::generic || req.mode == Mode::yangian)) {
      int r = 2;
      ParamView ptriv = ParamView::trivial(m, f);
      MultiIndex I = increasing_indices(n, r)[0];
      MultiIndex K = increasing_indices(s, r)[0];
      NCPoly lhs = cdet(q, I, submatrix_entry(MN, I, K));
      NCPoly rhs(f);
      for (const auto& J : increasing_indices(m, r))
        rhs += cdet(q, I, submatrix_entry(M, I, J)) *
               cdet(ptriv, J, submatrix_entry(N, J, K));
      block.controls.push_back(
          {"drop-sign cdet_p->classical r=2", lhs - rhs, 2 * r});
    }
    std::vector<Block> blocks;
    blocks.push_back(std::move(block));
    return blocks;
  });
}

SeedReport run_binet_per(const SuiteRequest& req) {
  return run_blocked_suite(req, [&](uint64_t aseed) {
    int n = req.n, m = req.m, s = req.s;
    Field f = req.field;
    // q is m x m and p is s x s here: N is the (q,p)-Manin factor.
    ParameterAssignment assign =
        ParameterAssignment::make(m, s, req.mode, aseed, f);
    ParamView q = ParamView::q_of(assign), p = ParamView::p_of(assign);
    Alphabet al({{Family::M, n, m}, {Family::N, m, s}});
    RelationSet rs(al, f);
    add_manin_relations(rs, family_gen(al, Family::N, f), m, s, q, p);
    add_commuting_relations(rs, al, Family::M, Family::N);
    Block block(std::move(rs));
    AlgMatrix M = AlgMatrix::generators(al, Family::M, f);
    AlgMatrix N = AlgMatrix::generators(al, Family::N, f);
    AlgMatrix MN = M * N;
    for (int r = 1; r <= 2; ++r)
      for (const auto& I : all_tuples(n, r))
        for (const auto& K : non_decreasing_indices(s, r)) {
          NCPoly lhs = rper(p, K, submatrix_entry(MN, I, K), true);
          NCPoly rhs(f);
          for (const auto& J : non_decreasing_indices(m, r))
            rhs += rper(q, J, submatrix_entry(M, I, J), true) *
                   rper(p, K, submatrix_entry(N, J, K), true);
          block.positives.push_back({"r=" + std::to_string(r) +
                                         " I=" + index_to_string(I) +
                                         " K=" + index_to_string(K),
                                     lhs - rhs, 2 * r});
        }
    if (s >= 2 && (req.mode == Mode::generic || req.mode == Mode::yangian)) {
      int r = 2;
      ParamView ptriv = ParamView::trivial(s, f);
      MultiIndex I = all_tuples(n, r)[0];
      MultiIndex K = non_decreasing_indices(s, r)[1];
      NCPoly lhs = rper(ptriv, K, submatrix_entry(MN, I, K), true);
      NCPoly rhs(f);
      for (const auto& J : non_decreasing_indices(m, r))
        rhs += rper(q, J, submatrix_entry(M, I, J), true) *
               rper(p, K, submatrix_entry(N, J, K), true);
      block.controls.push_back(
          {"drop-mu lhs-unweighted r=2", lhs - rhs, 2 * r});
    }
    std::vector<Block> blocks;
    blocks.push_back(std::move(block));
    return blocks;
  });
}

// ---------------------------------------------------------------------------
// capelli.*: the four Capelli-type variants on the {M, N, H} alphabet.

SeedReport run_capelli_inner(const SuiteRequest& req, CapelliVariant variant,
                             bool h_central) {
  return run_blocked_suite(req, [&req, variant, h_central](uint64_t aseed) {
    int n = req.n, m = req.m, s = req.s;
    Field f = req.field;
    Alphabet al({{Family::M, n, m}, {Family::N, m, s}, {Family::H, n, s}});
    AlgMatrix M = AlgMatrix::generators(al, Family::M, f);
    AlgMatrix N = AlgMatrix::generators(al, Family::N, f);
    AlgMatrix H = AlgMatrix::generators(al, Family::H, f);
    AlgMatrix MN = M * N;

    int pdim = (variant == CapelliVariant::det_col ||
                variant == CapelliVariant::per_col)
                   ? n
                   : s;
    ParameterAssignment assign =
        ParameterAssignment::make(pdim, pdim, req.mode, aseed, f);
    ParamView v = ParamView::q_of(assign);
    Block block(capelli_relation_set(n, m, s, assign, variant, h_central));

    // r <= 2 by default; --degree 3 opts into the r = 3 minors
    int rcap = req.degree ? std::min(req.degree, 3) : 2;
    int rmax = std::min({rcap, n, m, s});
    // entry of the diagonal-shifted minor matrix: col_shift scales the H
    // column by (r-b), row shift by (a-1); plus selects the sign.
    auto shifted = [&MN, &H, f](const MultiIndex& I, const MultiIndex& K,
                                int r, bool col_shift, bool plus,
                                bool swap_direction) {
      return [&MN, &H, f, I, K, r, col_shift, plus, swap_direction](int a1,
                                                                    int b) {
        long long shift;
        if (!swap_direction)
          shift = col_shift ? (r - b) : (a1 - 1);
        else
          shift = col_shift ? (b - 1) : (r - a1);
        FieldElement c = FieldElement::from_int(plus ? shift : -shift, f);
        return MN.at(I[a1 - 1] - 1, K[b - 1] - 1) +
               H.at(I[a1 - 1] - 1, K[b - 1] - 1) * c;
      };
    };
    bool col = variant == CapelliVariant::det_col ||
               variant == CapelliVariant::per_col;
    bool plus = variant == CapelliVariant::det_col ||
                variant == CapelliVariant::det_row;

    auto lhs_of = [&](const MultiIndex& I, const MultiIndex& K, int r,
                      bool swapd) {
      EntryFn e = shifted(I, K, r, col, plus, swapd);
      switch (variant) {
        case CapelliVariant::det_col: return cdet(v, I, e);
        case CapelliVariant::det_row: return rdet(v, K, e);
        case CapelliVariant::per: return rper(v, K, e, true);
        case CapelliVariant::per_col: return cper(v, I, e, true);
      }
      throw MathError("unreachable");
    };
    auto rhs_of = [&](const MultiIndex& I, const MultiIndex& K, int r) {
      NCPoly rhs(f);
      ParamView triv = ParamView::trivial(m, f);
      switch (variant) {
        case CapelliVariant::det_col:
          for (const auto& J : increasing_indices(m, r))
            rhs += cdet(v, I, submatrix_entry(M, I, J)) *
                   cdet(triv, J, submatrix_entry(N, J, K));
          break;
        case CapelliVariant::det_row:
          for (const auto& J : increasing_indices(m, r))
            rhs += rdet(triv, J, submatrix_entry(M, I, J)) *
                   rdet(v, K, submatrix_entry(N, J, K));
          break;
        case CapelliVariant::per:
          for (const auto& J : non_decreasing_indices(m, r))
            rhs += rper(triv, J, submatrix_entry(M, I, J), true) *
                   rper(v, K, submatrix_entry(N, J, K), true);
          break;
        case CapelliVariant::per_col:
          for (const auto& J : non_decreasing_indices(m, r))
            rhs += cper(v, I, submatrix_entry(M, I, J), true) *
                   cper(triv, J, submatrix_entry(N, J, K), true);
          break;
      }
      return rhs;
    };
    auto row_indices = [&](int r) {
      switch (variant) {
        case CapelliVariant::per: return all_tuples(n, r);
        case CapelliVariant::per_col: return non_decreasing_indices(n, r);
        default: return increasing_indices(n, r);
      }
    };
    auto col_indices = [&](int r) {
      switch (variant) {
        case CapelliVariant::det_col: return all_tuples(s, r);
        case CapelliVariant::det_row: return increasing_indices(s, r);
        default: return non_decreasing_indices(s, r);
      }
    };

    for (int r = 1; r <= rmax; ++r)
      for (const auto& I : row_indices(r))
        for (const auto& K : col_indices(r))
          block.positives.push_back(
              {"r=" + std::to_string(r) + " I=" + index_to_string(I) +
                   " K=" + index_to_string(K),
               lhs_of(I, K, r, false) - rhs_of(I, K, r), 2 * r});

    if (rmax >= 2) {
      int r = 2;
      MultiIndex I = row_indices(r)[0];
      MultiIndex K = col_indices(r).back();
      block.controls.push_back({"swap-diag r=2 I=" + index_to_string(I) +
                                    " K=" + index_to_string(K),
                                lhs_of(I, K, r, true) - rhs_of(I, K, r),
                                2 * r});
    }
    std::vector<Block> blocks;
    blocks.push_back(std::move(block));
    return blocks;
  });
}

SeedReport run_capelli(const SuiteRequest& req, CapelliVariant variant) {
  SeedReport rep = run_capelli_inner(req, variant, false);
  bool any_failed = false;
  for (const CaseResult& c : rep.cases)
    if (!c.member) any_failed = true;
  if (!any_failed) return rep;
  // A failure under the exactly-stated relations is flagged and re-tested
  // with h central (an assumption beyond the stated hypotheses); the strict
  // verdict stands, the note records the augmented outcome.
  SeedReport aug = run_capelli_inner(req, variant, true);
  for (CaseResult& c : rep.cases) {
    if (c.member) continue;
    for (const CaseResult& a : aug.cases)
      if (a.indices == c.indices)
        c.note = a.member ? "member under the h-central augmentation"
                          : "non-member even under the h-central augmentation";
  }
  return rep;
}

}  // namespace

const std::vector<std::string>& catalogue_ids() {
  static const std::vector<std::string> ids = {
      "signs",
      "operators",
      "minors.column-perm",
      "minors.laplace",
      "minors.plucker",
      "minors.adjugate",
      "minors.comodule",
      "minors.factorization",
      "binet.det",
      "binet.per",
      "capelli.det-col",
      "capelli.det-row",
      "capelli.per",
      "capelli.per-col",
      "series.macmahon",
      "series.trace-replacement",
      "series.newton-lemma",
      "series.newton",
      "series.cayley-hamilton",
      "series.char-mn-nm",
      "yangian.ybe",
      "yangian.fusion",
      "oracle.capelli-weyl",
      "oracle.macmahon",
      "oracle.inverse",
  };
  return ids;
}

bool is_known_suite(const std::string& id) {
  const auto& ids = catalogue_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

int default_degree_cap(int n) { return n <= 2 ? 5 : 4; }

SeedReport run_suite_seed(const SuiteRequest& req) {
  const std::string& id = req.id;
  if (!is_known_suite(id)) throw MathError("unknown suite id: " + id);
  if (req.n < 1 || req.m < 1 || req.s < 1)
    throw MathError("dimensions must be positive");
  if (id == "signs") return run_signs_suite(req);
  if (id == "operators") return run_operators_suite(req);
  if (id == "minors.column-perm") return run_column_perm(req);
  if (id == "minors.laplace") return run_laplace(req);
  if (id == "minors.plucker") return run_plucker(req);
  if (id == "minors.adjugate") return run_adjugate(req);
  if (id == "minors.comodule") return run_comodule(req);
  if (id == "minors.factorization") return run_factorization(req);
  if (id == "binet.det") return run_binet_det(req);
  if (id == "binet.per") return run_binet_per(req);
  if (id == "capelli.det-col") return run_capelli(req, CapelliVariant::det_col);
  if (id == "capelli.det-row") return run_capelli(req, CapelliVariant::det_row);
  if (id == "capelli.per") return run_capelli(req, CapelliVariant::per);
  if (id == "capelli.per-col") return run_capelli(req, CapelliVariant::per_col);
  if (id.rfind("series.", 0) == 0) return run_series_suite(req);
  if (id.rfind("yangian.", 0) == 0) return run_yangian_suite(req);
  if (id.rfind("oracle.", 0) == 0) return run_oracle_suite(req);
  throw MathError("unhandled suite id: " + id);
}

}  // namespace manin
