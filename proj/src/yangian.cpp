#include "manin/yangian.hpp"

#include "suites_common.hpp"

namespace manin {

ScalarMatrix r_matrix(const ParameterAssignment& assign,
                      const FieldElement& z) {
  int n = assign.n();
  Field f = assign.field();
  const FieldElement u = assign.u();
  FieldElement ui = u.inv();
  ScalarMatrix R({n, n}, {n, n}, f);
  for (int i = 1; i <= n; ++i)
    R.add_at(tensor_encode({i, i}, n), tensor_encode({i, i}, n), z * u - ui);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i < j) {
        R.add_at(tensor_encode({i, j}, n), tensor_encode({i, j}, n),
                 z * ui * assign.lookup('p', i, j) -
                     u * assign.lookup('q', i, j).inv());
        R.add_at(tensor_encode({i, j}, n), tensor_encode({j, i}, n),
                 z * (u - ui));
      } else if (i > j) {
        R.add_at(tensor_encode({i, j}, n), tensor_encode({i, j}, n),
                 z * ui * assign.lookup('q', j, i) -
                     u * assign.lookup('p', j, i).inv());
        R.add_at(tensor_encode({i, j}, n), tensor_encode({j, i}, n), u - ui);
      }
    }
  return R;
}

ScalarMatrix r_hat(const ParameterAssignment& assign, const FieldElement& z) {
  int n = assign.n();
  Field f = assign.field();
  ScalarMatrix P({n, n}, {n, n}, f);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      P.add_at(tensor_encode({j, i}, n), tensor_encode({i, j}, n),
               FieldElement::one(f));
  return P * r_matrix(assign, z);
}

ScalarMatrix r_hat_u2_closed_form(const ParameterAssignment& assign) {
  int n = assign.n();
  Field f = assign.field();
  const FieldElement u = assign.u();
  FieldElement c = u - u.inv();
  ScalarMatrix R({n, n}, {n, n}, f);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      FieldElement qi = assign.lookup('q', i, j).inv();
      FieldElement pi = assign.lookup('p', i, j).inv();
      R.add_at(tensor_encode({i, j}, n), tensor_encode({i, j}, n), c);
      R.add_at(tensor_encode({j, i}, n), tensor_encode({i, j}, n), -c * qi);
      R.add_at(tensor_encode({i, j}, n), tensor_encode({j, i}, n), -c * pi);
      R.add_at(tensor_encode({j, i}, n), tensor_encode({j, i}, n),
               c * pi * qi);
    }
  return R;
}

ScalarMatrix fused_r(const ParameterAssignment& assign,
                     const std::vector<FieldElement>& lambdas) {
  int k = (int)lambdas.size();
  int n = assign.n();
  Field f = assign.field();
  std::vector<int> factors(k, n);
  ScalarMatrix prod = ScalarMatrix::identity(factors, f);
  // factor slots, leftmost group first: (1..k-1)(1..k-2)...(1)
  std::vector<int> slots;
  for (int g = k - 1; g >= 1; --g)
    for (int i = 1; i <= g; ++i) slots.push_back(i);
  // apply right-to-left, tracking which original strand sits in each slot
  std::vector<int> strand(k);
  for (int i = 0; i < k; ++i) strand[i] = i;
  for (auto it = slots.rbegin(); it != slots.rend(); ++it) {
    int i = *it;  // acts on slots (i, i+1)
    FieldElement arg = lambdas[strand[i]] / lambdas[strand[i - 1]];
    ScalarMatrix Ri = k == 2 ? r_hat(assign, arg)
                             : embed_two_slot(r_hat(assign, arg), i, i + 1, k, n);
    prod = Ri * prod;
    std::swap(strand[i - 1], strand[i]);
  }
  return prod;
}

FieldElement fusion_scalar(const ParameterAssignment& assign, int k,
                           BracketConvention conv) {
  Field f = assign.field();
  const FieldElement u = assign.u();
  FieldElement u2i = (u * u).inv();
  FieldElement c = FieldElement::one(f);
  for (int t = 0; t < k * (k - 1) / 2; ++t) c = c * u;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      FieldElement pw = FieldElement::one(f);
      for (int t = 0; t < j - i; ++t) pw = pw * u2i;  // u^{2(i-j)}, i-j < 0
      c = c * (FieldElement::one(f) - pw);
    }
  return c * u_bracket_factorial(u, k, conv);
}

namespace suites_detail {

namespace {

SeedReport run_ybe(const SuiteRequest& req) {
  SeedReport rep = make_header(req);
  rep.mode = mode_name(Mode::yangian);
  int n = req.n;
  Field f = req.field;
  ParameterAssignment a =
      ParameterAssignment::make(n, n, Mode::yangian, req.seed, f);
  Rng rng(derived_seed(req.seed, 0x417));
  FieldElement z = rng.nonzero(f), w = rng.nonzero(f);
  auto ybe_holds = [&](const ParameterAssignment& pa) {
    ScalarMatrix R12 = embed_two_slot(r_matrix(pa, z / w), 1, 2, 3, n);
    ScalarMatrix R13 = embed_two_slot(r_matrix(pa, z), 1, 3, 3, n);
    ScalarMatrix R23 = embed_two_slot(r_matrix(pa, w), 2, 3, 3, n);
    return R12 * R13 * R23 == R23 * R13 * R12;
  };
  {
    CaseResult r;
    r.indices = "ybe z,w draw";
    r.member = ybe_holds(a);
    rep.cases.push_back(std::move(r));
  }
  if (n >= 2) {
    CaseResult r;
    r.indices = "break-constraint ybe";
    r.member = ybe_holds(a.broken(req.seed));
    rep.controls.push_back(std::move(r));
  }
  rep.sz_bound = format_sz_bound(6ull * n, f);
  return rep;
}

SeedReport run_fusion(const SuiteRequest& req) {
  SeedReport rep = make_header(req);
  rep.mode = mode_name(Mode::yangian);
  int n = req.n;
  Field f = req.field;
  ParameterAssignment a =
      ParameterAssignment::make(n, n, Mode::yangian, req.seed, f);
  const FieldElement u = a.u();
  FieldElement u2i = (u * u).inv();
  auto push = [&](const std::string& label, bool ok, const std::string& note) {
    CaseResult r;
    r.indices = label;
    r.member = ok;
    r.note = note;
    rep.cases.push_back(std::move(r));
  };

  // (a) closed form of R-hat(u^-2)
  push("rhat(u^-2) closed form", r_hat(a, u2i) == r_hat_u2_closed_form(a), "");

  // Pin the bracket convention operationally: A^(k) must be idempotent.
  BracketConvention pinned = BracketConvention::geometric_u2_inv;
  std::string conv_note;
  {
    const BracketConvention candidates[] = {
        BracketConvention::geometric_u2, BracketConvention::geometric_u2_inv,
        BracketConvention::balanced};
    const char* names[] = {"1+u^2+...", "1+u^-2+...", "balanced"};
    bool found = false;
    for (int ci = 0; ci < 3 && !found; ++ci) {
      bool ok = true;
      for (int k = 2; k <= 3 && ok; ++k) {
        ScalarMatrix A = projector(a, ProjKind::yangian_antisym, k,
                                   candidates[ci]);
        ok = (A * A == A);
      }
      if (ok) {
        pinned = candidates[ci];
        conv_note = std::string("[k]! convention pinned: ") + names[ci];
        found = true;
      }
    }
    push("bracket convention pinned by idempotency", found, conv_note);
  }

  // (b) fusion: the staircase at (1, u^-2, ..., u^{-2k+2}) equals c A^(k)
  int kmax = std::min(4, n == 2 ? 3 : 3);
  for (int k = 2; k <= kmax; ++k) {
    std::vector<FieldElement> lam;
    FieldElement cur = FieldElement::one(f);
    for (int t = 0; t < k; ++t) {
      lam.push_back(cur);
      cur = cur * u2i;
    }
    ScalarMatrix lhs = fused_r(a, lam);
    ScalarMatrix Ak = projector(a, ProjKind::yangian_antisym, k, pinned);
    FieldElement c = fusion_scalar(a, k, pinned);
    push("fusion k=" + std::to_string(k), lhs == Ak.scaled(c), "");
  }

  // (c) the lemma identities A_p^(k) A^(k) = A_p^(k), A^(k) A_p^(k) = A^(k)
  for (int k = 2; k <= kmax; ++k) {
    ScalarMatrix Ak = projector(a, ProjKind::yangian_antisym, k, pinned);
    ScalarMatrix Ap = projector(a, ProjKind::antisym_p, k);
    push("lemma A_p A = A_p k=" + std::to_string(k), Ap * Ak == Ap, "");
    push("lemma A A_p = A k=" + std::to_string(k), Ak * Ap == Ak, "");
  }

  if (n >= 2) {
    // control: under a broken constraint the fusion equality must fail
    ParameterAssignment br = a.broken(req.seed);
    std::vector<FieldElement> lam{FieldElement::one(f), u2i};
    ScalarMatrix lhs = fused_r(br, lam);
    ScalarMatrix Ak = projector(br, ProjKind::yangian_antisym, 2, pinned);
    FieldElement c = fusion_scalar(br, 2, pinned);
    CaseResult r;
    r.indices = "break-constraint fusion k=2";
    r.member = (lhs == Ak.scaled(c));
    rep.controls.push_back(std::move(r));
  }
  rep.sz_bound = format_sz_bound(8ull * n, f);
  return rep;
}

}  // namespace

SeedReport run_yangian_suite(const SuiteRequest& req) {
  if (req.field.is_rational())
    throw MathError(
        "yangian suites need an F_p field (u is sampled, not chosen)");
  if (req.id == "yangian.ybe") return run_ybe(req);
  if (req.id == "yangian.fusion") return run_fusion(req);
  throw MathError("unknown yangian suite: " + req.id);
}

}  // namespace suites_detail
}  // namespace manin
