// Classical (q = p = 1) realizations used as independent oracles: the
// truncated Weyl algebra for the Capelli identity, exact power series for
// the MacMahon master theorem, and numeric rational matrices for the
// inverse-dependent identities (Jacobi ratio, Cayley complementary,
// Sylvester, quasideterminant factorization, and the M / M^-1 pairing).
// Everything here is exact over Q; there is no tolerance anywhere.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "manin/minors.hpp"

namespace manin {

/// Polynomials in the n^2 variables x_ij of total degree <= D, on the
/// monomial basis, with the Weyl action x_ij (multiplication) and d_ij
/// (partial derivative). Degree overflow past the truncation is an error,
/// never a silent clip.
class TruncatedWeylSpace {
 public:
  using Monomial = std::vector<int>;  // exponents, length n^2
  using Poly = std::map<Monomial, mpq_class>;

  TruncatedWeylSpace(int n, int D);

  int n() const { return n_; }
  int truncation() const { return D_; }

  Poly multiply_x(int i, int j, const Poly& p) const;  // 1-based indices
  Poly differentiate(int i, int j, const Poly& p) const;
  /// (X D^t)_{il} = sum_j x_ij d_lj.
  Poly polarization(int i, int l, const Poly& p) const;

  /// All monomials of total degree <= d, deterministic order.
  std::vector<Monomial> basis(int d) const;

 private:
  int n_, D_;
};

struct OracleCheck {
  std::string label;
  bool ok = true;
  std::string detail;  // first disagreement, when any
};

/// det(X D^t + diag(n-1,...,0)) = det X det D applied to every monomial of
/// degree <= D - n; with_shift = false removes the diagonal and is expected
/// to fail (the control).
OracleCheck classical_capelli_weyl(int n, int D, bool with_shift);

/// Compares sum_{|k|=d} G(k) with the degree-d coefficient of
/// 1/det(I - tA) for d <= degree; flip_sign compares against 1/det(I + tA)
/// instead (the control).
OracleCheck classical_macmahon_series(int n,
                                      const std::vector<std::vector<mpq_class>>& A,
                                      int degree, bool flip_sign);

/// Substitutes the numeric matrix into the free-algebra Bos/Ferm terms and
/// compares with the G-sums and det(I - tA) coefficients.
OracleCheck classical_macmahon_substitution(
    int n, const std::vector<std::vector<mpq_class>>& A, int degree);

enum class InverseIdentity { jacobi, pairing, cayley_complementary, sylvester,
                             quasidet };

/// Evaluates the named identity on `trials` random invertible rational
/// matrices through the same eps / minor code paths with q = p = 1.
/// drop_sign omits one epsilon factor in the Jacobi identity (control).
OracleCheck classical_inverse_identity(InverseIdentity which, int n,
                                       int trials, uint64_t seed,
                                       bool drop_sign, int* resampled);

}  // namespace manin
