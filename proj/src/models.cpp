#include "manin/models.hpp"

#include <algorithm>
#include <functional>

#include "suites_common.hpp"

namespace manin {

TruncatedWeylSpace::TruncatedWeylSpace(int n, int D) : n_(n), D_(D) {
  if (n < 1 || n > 3 || D < 1 || D > 6)
    throw MathError("TruncatedWeylSpace: size guard (n <= 3, D <= 6)");
}

static int total_degree(const TruncatedWeylSpace::Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

TruncatedWeylSpace::Poly TruncatedWeylSpace::multiply_x(int i, int j,
                                                        const Poly& p) const {
  Poly out;
  int var = (i - 1) * n_ + (j - 1);
  for (const auto& [m, c] : p) {
    if (c == 0) continue;
    Monomial m2 = m;
    ++m2[var];
    if (total_degree(m2) > D_)
      throw MathError("Weyl truncation overflow: degree exceeds D=" +
                      std::to_string(D_));
    out[m2] += c;
  }
  return out;
}

TruncatedWeylSpace::Poly TruncatedWeylSpace::differentiate(
    int i, int j, const Poly& p) const {
  Poly out;
  int var = (i - 1) * n_ + (j - 1);
  for (const auto& [m, c] : p) {
    if (m[var] == 0) continue;
    Monomial m2 = m;
    --m2[var];
    out[m2] += c * m[var];
  }
  return out;
}

TruncatedWeylSpace::Poly TruncatedWeylSpace::polarization(int i, int l,
                                                          const Poly& p) const {
  Poly out;
  for (int j = 1; j <= n_; ++j) {
    Poly t = multiply_x(i, j, differentiate(l, j, p));
    for (const auto& [m, c] : t) {
      out[m] += c;
      if (out[m] == 0) out.erase(m);
    }
  }
  return out;
}

std::vector<TruncatedWeylSpace::Monomial> TruncatedWeylSpace::basis(
    int d) const {
  std::vector<Monomial> out;
  Monomial m(n_ * n_, 0);
  // enumerate all exponent vectors of total degree <= d
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == n_ * n_) {
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= rem; ++e) {
      m[pos] = e;
      rec(pos + 1, rem - e);
    }
    m[pos] = 0;
  };
  rec(0, d);
  return out;
}

OracleCheck classical_capelli_weyl(int n, int D, bool with_shift) {
  OracleCheck res;
  res.label = "capelli-weyl n=" + std::to_string(n) + " D=" + std::to_string(D);
  TruncatedWeylSpace W(n, D);
  using Poly = TruncatedWeylSpace::Poly;

  auto add_into = [](Poly& a, const Poly& b, const mpq_class& c) {
    for (const auto& [m, v] : b) {
      a[m] += v * c;
      if (a[m] == 0) a.erase(m);
    }
  };

  // LHS: cdet(X D^t + diag(n-1,...,0)) applied as an operator; the column
  // determinant applies the rightmost factor first.
  auto lhs_apply = [&](const Poly& p) {
    Poly acc;
    for (const Perm& s : all_perms(n)) {
      Poly cur = p;
      for (int t = n; t >= 1; --t) {
        Poly next = W.polarization(s[t - 1], t, cur);
        if (with_shift && s[t - 1] == t) {
          // + (n - t) * identity on this factor
          add_into(next, cur, mpq_class(n - t));
        }
        cur = std::move(next);
      }
      add_into(acc, cur, mpq_class(inversions(s) % 2 ? -1 : 1));
    }
    return acc;
  };

  // RHS: det X (multiplication operator) after det D (constant-coefficient
  // differential operator).
  auto det_d_apply = [&](const Poly& p) {
    Poly acc;
    for (const Perm& s : all_perms(n)) {
      Poly cur = p;
      for (int t = 1; t <= n; ++t) cur = W.differentiate(s[t - 1], t, cur);
      add_into(acc, cur, mpq_class(inversions(s) % 2 ? -1 : 1));
    }
    return acc;
  };
  auto det_x_apply = [&](const Poly& p) {
    Poly acc;
    for (const Perm& s : all_perms(n)) {
      Poly cur = p;
      for (int t = 1; t <= n; ++t) cur = W.multiply_x(s[t - 1], t, cur);
      add_into(acc, cur, mpq_class(inversions(s) % 2 ? -1 : 1));
    }
    return acc;
  };

  for (const auto& mono : W.basis(D - n)) {
    Poly p;
    p[mono] = 1;
    Poly lhs = lhs_apply(p);
    Poly rhs = det_x_apply(det_d_apply(p));
    if (lhs != rhs) {
      res.ok = false;
      std::string name;
      for (size_t v = 0; v < mono.size(); ++v)
        if (mono[v])
          name += "x[" + std::to_string((int)v / n + 1) + "," +
                  std::to_string((int)v % n + 1) + "]^" +
                  std::to_string(mono[v]);
      if (name.empty()) name = "1";
      res.detail = "disagreement on monomial " + name;
      return res;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// MacMahon over exact rationals.

namespace {

using NPoly = std::map<std::vector<int>, mpq_class>;  // n commuting variables

NPoly npoly_mul(const NPoly& a, const NPoly& b, int cap) {
  NPoly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      std::vector<int> m(ma.size());
      int tot = 0;
      for (size_t i = 0; i < m.size(); ++i) {
        m[i] = ma[i] + mb[i];
        tot += m[i];
      }
      if (tot > cap) continue;
      out[m] += ca * cb;
      if (out[m] == 0) out.erase(m);
    }
  return out;
}

/// Coefficients of det(I - tA) as a polynomial in t (degree <= n).
std::vector<mpq_class> det_i_minus_ta(
    int n, const std::vector<std::vector<mpq_class>>& A, int sign) {
  // Entries are degree-1 polynomials in t; expand over permutations.
  std::vector<mpq_class> acc(n + 1, 0);
  for (const Perm& s : all_perms(n)) {
    std::vector<mpq_class> term{mpq_class(inversions(s) % 2 ? -1 : 1)};
    for (int i = 1; i <= n; ++i) {
      // entry (s[i-1], i) of I - tA (or I + tA when sign = +1)
      mpq_class c0 = s[i - 1] == i ? 1 : 0;
      mpq_class c1 = mpq_class(sign) * A[s[i - 1] - 1][i - 1];
      std::vector<mpq_class> next(term.size() + 1, 0);
      for (size_t d = 0; d < term.size(); ++d) {
        next[d] += term[d] * c0;
        next[d + 1] += term[d] * c1;
      }
      term = std::move(next);
    }
    for (size_t d = 0; d < term.size() && d <= (size_t)n; ++d)
      acc[d] += term[d];
  }
  return acc;
}

/// Power series inverse of a polynomial with constant term 1, to `cap`.
std::vector<mpq_class> series_inverse(const std::vector<mpq_class>& c,
                                      int cap) {
  std::vector<mpq_class> b(cap + 1, 0);
  b[0] = 1 / c[0];
  for (int d = 1; d <= cap; ++d) {
    mpq_class acc = 0;
    for (int i = 1; i <= d && i < (int)c.size(); ++i) acc += c[i] * b[d - i];
    b[d] = -acc / c[0];
  }
  return b;
}

/// sum over |k| = d of G(k1..kn), the coefficient of x^k in
/// prod_i (row_i . x)^{k_i}.
mpq_class g_sum(int n, const std::vector<std::vector<mpq_class>>& A, int d) {
  // enumerate compositions of d into n parts
  std::vector<int> k(n, 0);
  mpq_class total = 0;
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == n - 1) {
      k[pos] = rem;
      // expand prod_i L_i^{k_i}
      NPoly poly;
      poly[std::vector<int>(n, 0)] = 1;
      for (int i = 0; i < n; ++i) {
        NPoly L;
        for (int j = 0; j < n; ++j) {
          if (A[i][j] == 0) continue;
          std::vector<int> m(n, 0);
          m[j] = 1;
          L[m] = A[i][j];
        }
        for (int t = 0; t < k[i]; ++t) poly = npoly_mul(poly, L, d);
      }
      auto it = poly.find(k);
      if (it != poly.end()) total += it->second;
      return;
    }
    for (int e = 0; e <= rem; ++e) {
      k[pos] = e;
      rec(pos + 1, rem - e);
    }
  };
  if (n == 1) {
    k[0] = d;
    NPoly poly;
    poly[std::vector<int>(1, 0)] = 1;
    NPoly L;
    L[{1}] = A[0][0];
    for (int t = 0; t < d; ++t) poly = npoly_mul(poly, L, d);
    auto it = poly.find(k);
    return it == poly.end() ? mpq_class(0) : it->second;
  }
  rec(0, d);
  return total;
}

std::string q_str(const mpq_class& v) { return v.get_str(); }

}  // namespace

OracleCheck classical_macmahon_series(
    int n, const std::vector<std::vector<mpq_class>>& A, int degree,
    bool flip_sign) {
  OracleCheck res;
  res.label = "macmahon-series n=" + std::to_string(n);
  if (n > 3 || degree > 6) throw MathError("macmahon oracle size guard");
  std::vector<mpq_class> det = det_i_minus_ta(n, A, flip_sign ? +1 : -1);
  std::vector<mpq_class> inv = series_inverse(det, degree);
  for (int d = 0; d <= degree; ++d) {
    mpq_class g = g_sum(n, A, d);
    if (g != inv[d]) {
      res.ok = false;
      res.detail = "degree " + std::to_string(d) + ": G-sum " + q_str(g) +
                   " vs series " + q_str(inv[d]);
      return res;
    }
  }
  return res;
}

OracleCheck classical_macmahon_substitution(
    int n, const std::vector<std::vector<mpq_class>>& A, int degree) {
  OracleCheck res;
  res.label = "macmahon-substitution n=" + std::to_string(n);
  Field f = Field::rationals();
  ParameterAssignment cl =
      ParameterAssignment::make_square_q(n, Mode::classical, 1, f);
  Alphabet al({{Family::M, n, n}});
  AlgMatrix M = AlgMatrix::generators(al, Family::M, f);
  auto image = [&](Letter l) {
    GeneratorSymbol g = unpack_letter(l, true);
    return FieldElement::from_rational(A[g.row - 1][g.col - 1]);
  };
  std::vector<mpq_class> det = det_i_minus_ta(n, A, -1);
  for (int d = 1; d <= degree; ++d) {
    NCPoly bos = traced_chain(projector(cl, ProjKind::sym_q, d), M, d);
    mpq_class lhs = bos.eval(image).rational();
    mpq_class rhs = g_sum(n, A, d);
    if (lhs != rhs) {
      res.ok = false;
      res.detail = "Bos_" + std::to_string(d) + ": " + q_str(lhs) + " vs " +
                   q_str(rhs);
      return res;
    }
    if (d <= n) {
      NCPoly fer = traced_chain(projector(cl, ProjKind::antisym_q, d), M, d);
      mpq_class lf = fer.eval(image).rational();
      if (d % 2) lf = -lf;
      if (lf != det[d]) {
        res.ok = false;
        res.detail = "Ferm_" + std::to_string(d) + ": " + q_str(lf) + " vs " +
                     q_str(det[d]);
        return res;
      }
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Inverse-dependent identities on numeric rational matrices, evaluated
// through the same eps / minor code paths with q = p = 1.

namespace {

using QMat = std::vector<std::vector<mpq_class>>;

QMat random_int_matrix(int n, Rng& rng) {
  QMat A(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      A[i][j] = mpq_class((long)(rng.below(19)) - 9);
  return A;
}

mpq_class det_naive(const QMat& A) {
  int n = (int)A.size();
  mpq_class acc = 0;
  for (const Perm& s : all_perms(n)) {
    mpq_class t = inversions(s) % 2 ? -1 : 1;
    for (int i = 0; i < n; ++i) t *= A[s[i] - 1][i];
    acc += t;
  }
  return acc;
}

QMat invert(const QMat& A) {
  int n = (int)A.size();
  QMat aug(n, std::vector<mpq_class>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = A[i][j];
    aug[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (aug[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw MathError("invert: singular matrix");
    std::swap(aug[c], aug[piv]);
    mpq_class inv = 1 / aug[c][c];
    for (int j = 0; j < 2 * n; ++j) aug[c][j] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      mpq_class fct = aug[r][c];
      for (int j = 0; j < 2 * n; ++j) aug[r][j] -= fct * aug[c][j];
    }
  }
  QMat inv(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

AlgMatrix constant_matrix(const QMat& A, Field f) {
  int n = (int)A.size();
  AlgMatrix M(n, n, f);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      M.at(i, j) = NCPoly::constant(FieldElement::from_rational(A[i][j]));
  return M;
}

/// cdet of a numeric submatrix with rows I (not necessarily increasing)
/// through the quantum code path: rows are sorted first and the sign comes
/// from the classical eps of the row arrangement.
mpq_class num_cdet(const ParamView& v, const AlgMatrix& M, const MultiIndex& I,
                   const MultiIndex& J) {
  // entries commute, so cdet over a sorted row set with the eps_index
  // prefactor of the unsorted arrangement keeps the column-order convention
  MultiIndex S = sorted_index(I);
  mpq_class sign = eps_index(v, I).rational() /
                   eps_index(v, S).rational();  // classical: +-1
  NCPoly d = cdet(v, S, submatrix_entry(M, S, J));
  return sign * d.coeff(Word()).rational();
}

}  // namespace

OracleCheck classical_inverse_identity(InverseIdentity which, int n,
                                       int trials, uint64_t seed,
                                       bool drop_sign, int* resampled) {
  OracleCheck res;
  Field f = Field::rationals();
  ParameterAssignment cl =
      ParameterAssignment::make(n, n, Mode::classical, seed, f);
  ParamView q = ParamView::q_of(cl), p = ParamView::p_of(cl);
  Rng rng(seed ^ 0xfeedULL);
  MultiIndex full = iota_index(n);

  switch (which) {
    case InverseIdentity::jacobi: res.label = "jacobi"; break;
    case InverseIdentity::pairing: res.label = "pairing"; break;
    case InverseIdentity::cayley_complementary: res.label = "cayley"; break;
    case InverseIdentity::sylvester: res.label = "sylvester"; break;
    case InverseIdentity::quasidet: res.label = "quasidet"; break;
  }
  res.label += " n=" + std::to_string(n);
  if (drop_sign) res.label = "drop-sign " + res.label;

  for (int trial = 0; trial < trials; ++trial) {
    QMat A = random_int_matrix(n, rng);
    while (det_naive(A) == 0) {
      if (resampled) ++*resampled;
      A = random_int_matrix(n, rng);
    }
    QMat Ainv = invert(A);
    AlgMatrix M = constant_matrix(A, f);
    AlgMatrix Mi = constant_matrix(Ainv, f);
    mpq_class detM =
        cdet(q, full, submatrix_entry(M, full, full)).coeff(Word()).rational();

    auto fail = [&](const std::string& where) {
      res.ok = false;
      res.detail = "trial " + std::to_string(trial) + ": " + where;
    };

    switch (which) {
      case InverseIdentity::jacobi: {
        for (int k = 1; k <= n && res.ok; ++k)
          for (const auto& I : increasing_indices(n, k)) {
            if (!res.ok) break;
            for (const auto& Jbase : increasing_indices(n, k)) {
              if (!res.ok) break;
              // run over all rearrangements of Jbase
              MultiIndex J = Jbase;
              std::vector<MultiIndex> perms_of_J;
              MultiIndex sj = Jbase;
              do {
                perms_of_J.push_back(sj);
              } while (std::next_permutation(sj.begin(), sj.end()));
              for (const auto& Jtup : perms_of_J) {
                MultiIndex Ic = complement(I, full);
                MultiIndex Jc = complement(Jtup, full);
                mpq_class lhs_eps =
                    eps_index(p, juxtapose(Ic, reversed(I))).rational();
                if (drop_sign) lhs_eps = 1;
                mpq_class lhs =
                    lhs_eps * detM * num_cdet(p, Mi, I, Jtup);
                mpq_class rhs =
                    eps_index(q, juxtapose(Jc, reversed(Jtup))).rational() *
                    num_cdet(q, M, Jc, Ic);
                if (lhs != rhs) {
                  fail("jacobi k=" + std::to_string(k) +
                       " I=" + index_to_string(I) +
                       " J=" + index_to_string(Jtup));
                  break;
                }
              }
            }
          }
        break;
      }
      case InverseIdentity::pairing: {
        for (int k = 1; k <= n && res.ok; ++k)
          for (const auto& I : increasing_indices(n, k)) {
            if (!res.ok) break;
            for (const auto& J : increasing_indices(n, k)) {
              mpq_class acc = 0;
              for (const auto& K : increasing_indices(n, k))
                acc += eps_index(p, reversed(K)).rational() *
                       num_cdet(q, M, I, K) * num_cdet(p, Mi, K, J);
              mpq_class rhs = (I == J)
                                  ? eps_index(q, reversed(J)).rational()
                                  : mpq_class(0);
              if (acc != rhs) {
                fail("pairing I=" + index_to_string(I) +
                     " J=" + index_to_string(J));
                break;
              }
            }
          }
        break;
      }
      case InverseIdentity::cayley_complementary: {
        // Input identity: the Laplace expansion at (I, K). Its Cayley
        // transform replaces cdet(M_{A B}) by
        // eps_q(B^c + B^tau)/eps_p(A^c + A^tau) det(M)^-1 cdet(M_{B^c A^c}).
        auto transform = [&](const MultiIndex& Arows,
                             const MultiIndex& Bcols) -> mpq_class {
          MultiIndex Ac = complement(Arows, full);
          MultiIndex Bc = complement(Bcols, full);
          mpq_class num =
              eps_index(q, juxtapose(Bc, reversed(Bcols))).rational();
          mpq_class den =
              eps_index(p, juxtapose(Ac, reversed(Arows))).rational();
          return num / den / detM * num_cdet(q, M, Bc, Ac);
        };
        for (int r = 1; r < n && res.ok; ++r)
          for (const auto& I : increasing_indices(n, r)) {
            if (!res.ok) break;
            for (const auto& K : increasing_indices(n, n - r)) {
              mpq_class acc = 0;
              for (const auto& J : increasing_indices(n, r)) {
                MultiIndex Jc = complement(J, full);
                acc += eps_index(q, juxtapose(J, Jc)).rational() *
                       transform(J, I) * transform(Jc, K);
              }
              acc -= eps_index(p, juxtapose(I, K)).rational() *
                     transform(full, full);
              if (acc != 0) {
                fail("cayley r=" + std::to_string(r) +
                     " I=" + index_to_string(I) + " K=" + index_to_string(K));
                break;
              }
            }
          }
        break;
      }
      case InverseIdentity::sylvester: {
        for (int m0 = 1; m0 < n && res.ok; ++m0) {
          MultiIndex K;
          for (int t = m0 + 1; t <= n; ++t) K.push_back(t);
          MultiIndex KK = K;
          mpq_class detKK = num_cdet(q, M, KK, KK);
          if (detKK == 0) {
            if (resampled) ++*resampled;
            continue;  // submatrix singular: skip this trial block
          }
          QMat B(m0, std::vector<mpq_class>(m0));
          for (int r = 1; r <= m0; ++r)
            for (int s2 = 1; s2 <= m0; ++s2) {
              MultiIndex rows = juxtapose({r}, K);
              MultiIndex cols = juxtapose({s2}, K);
              B[r - 1][s2 - 1] = num_cdet(q, M, rows, cols) / detKK;
            }
          mpq_class detB = det_naive(B);
          if (detB != detM / detKK) {
            fail("sylvester |K|=" + std::to_string(n - m0));
            break;
          }
        }
        break;
      }
      case InverseIdentity::quasidet: {
        // reading with the full (J_n, I_n) in the last factor
        std::vector<Perm> ps = all_perms(n);
        for (int pi = 0; pi < (int)ps.size() && res.ok; ++pi) {
          MultiIndex I(ps[pi].begin(), ps[pi].end());
          MultiIndex J(ps[(pi * 7 + 3) % ps.size()].begin(),
                       ps[(pi * 7 + 3) % ps.size()].end());
          mpq_class prod = 1;
          bool skip = false;
          for (int k = 1; k <= n; ++k) {
            MultiIndex Ik(I.begin(), I.begin() + k);
            MultiIndex Jk(J.begin(), J.begin() + k);
            MultiIndex Iks = sorted_index(Ik), Jks = sorted_index(Jk);
            QMat X(k, std::vector<mpq_class>(k));
            for (int r = 0; r < k; ++r)
              for (int c = 0; c < k; ++c)
                X[r][c] = A[Jks[r] - 1][Iks[c] - 1];
            if (det_naive(X) == 0) {
              skip = true;  // quasideterminant undefined; resample trial
              break;
            }
            QMat Xi = invert(X);
            int rpos = (int)(std::find(Jks.begin(), Jks.end(), J[k - 1]) -
                             Jks.begin());
            int cpos = (int)(std::find(Iks.begin(), Iks.end(), I[k - 1]) -
                             Iks.begin());
            if (Xi[cpos][rpos] == 0) {
              skip = true;
              break;
            }
            prod *= 1 / Xi[cpos][rpos];
          }
          if (skip) {
            if (resampled) ++*resampled;
            continue;
          }
          mpq_class lhs = eps_index(q, J).rational() /
                          eps_index(p, I).rational() * prod;
          if (lhs != detM) {
            fail("quasidet [reading J_n,I_n] I=" + index_to_string(I) +
                 " J=" + index_to_string(J));
            break;
          }
        }
        break;
      }
    }
    if (!res.ok) return res;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Suite wrappers.

namespace suites_detail {

namespace {

SeedReport run_capelli_weyl_suite(const SuiteRequest& req) {
  SeedReport rep = make_header(req);
  rep.mode = "classical";
  rep.prime = 0;
  int n = std::min(req.n, 3);
  OracleCheck main = classical_capelli_weyl(n, n + 1, true);
  CaseResult r;
  r.indices = main.label + " full basis";
  r.member = main.ok;
  r.witness = main.detail;
  rep.cases.push_back(std::move(r));
  if (n >= 2) {
    OracleCheck ctl = classical_capelli_weyl(n, n + 1, false);
    CaseResult c;
    c.indices = "swap-diag shift removed n=" + std::to_string(n);
    c.member = ctl.ok;
    c.witness = ctl.detail;
    rep.controls.push_back(std::move(c));
  }
  rep.sz_bound = "0";
  return rep;
}

SeedReport run_macmahon_oracle_suite(const SuiteRequest& req) {
  SeedReport rep = make_header(req);
  rep.mode = "classical";
  rep.prime = 0;
  int n = std::min(req.n, 3);
  int degree = req.degree ? std::min(req.degree, 6) : 4;
  Rng rng(req.seed ^ 0x11bULL);
  std::vector<std::vector<mpq_class>> A(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A[i][j] = mpq_class((long)rng.below(7)) - 3;
  auto push = [&](const OracleCheck& c, const std::string& extra) {
    CaseResult r;
    r.indices = c.label + extra;
    r.member = c.ok;
    r.witness = c.detail;
    rep.cases.push_back(std::move(r));
  };
  push(classical_macmahon_series(n, A, degree, false), " random A");
  push(classical_macmahon_substitution(n, A, degree), " random A");
  {  // the all-ones 2x2 matrix gives the series 1/(1-2t)
    std::vector<std::vector<mpq_class>> ones(2, std::vector<mpq_class>(2, 1));
    push(classical_macmahon_series(2, ones, degree, false), " all-ones");
    std::vector<mpq_class> inv =
        series_inverse(det_i_minus_ta(2, ones, -1), degree);
    bool pow2 = true;
    mpq_class expect = 1;
    for (int d = 0; d <= degree; ++d) {
      if (inv[d] != expect) pow2 = false;
      expect *= 2;
    }
    CaseResult r;
    r.indices = "all-ones series equals 1/(1-2t)";
    r.member = pow2;
    rep.cases.push_back(std::move(r));
  }
  {  // control: sign flipped denominator
    std::vector<std::vector<mpq_class>> ones(2, std::vector<mpq_class>(2, 1));
    OracleCheck c = classical_macmahon_series(2, ones, degree, true);
    CaseResult r;
    r.indices = "drop-sign 1/det(I+tA)";
    r.member = c.ok;
    r.witness = c.detail;
    rep.controls.push_back(std::move(r));
  }
  rep.sz_bound = "0";
  return rep;
}

SeedReport run_inverse_oracle_suite(const SuiteRequest& req) {
  SeedReport rep = make_header(req);
  rep.mode = "classical";
  rep.prime = 0;
  int n = std::min(req.n, 3);
  int trials = 20;
  int resampled = 0;
  auto push = [&](InverseIdentity w) {
    OracleCheck c = classical_inverse_identity(w, n, trials, req.seed, false,
                                               &resampled);
    CaseResult r;
    r.indices = c.label + " trials=" + std::to_string(trials);
    r.member = c.ok;
    r.witness = c.detail;
    rep.cases.push_back(std::move(r));
  };
  push(InverseIdentity::jacobi);
  push(InverseIdentity::pairing);
  push(InverseIdentity::cayley_complementary);
  push(InverseIdentity::sylvester);
  push(InverseIdentity::quasidet);
  if (n >= 2) {
    OracleCheck c = classical_inverse_identity(InverseIdentity::jacobi, n, 5,
                                               req.seed, true, &resampled);
    CaseResult r;
    r.indices = c.label;
    r.member = c.ok;
    r.witness = c.detail;
    rep.controls.push_back(std::move(r));
  }
  rep.resampled = resampled;
  rep.sz_bound = "0";
  return rep;
}

}  // namespace

SeedReport run_oracle_suite(const SuiteRequest& req) {
  if (req.id == "oracle.capelli-weyl") return run_capelli_weyl_suite(req);
  if (req.id == "oracle.macmahon") return run_macmahon_oracle_suite(req);
  if (req.id == "oracle.inverse") return run_inverse_oracle_suite(req);
  throw MathError("unknown oracle suite: " + req.id);
}

}  // namespace suites_detail

}  // namespace manin
