// Operators on tensor powers of C^n with field coefficients (ScalarMatrix)
// and matrices over the free algebra (AlgMatrix), plus the projector family:
// P_q, P^sigma, the normalized (anti)symmetrizers A^(k), S^(k), the mixed
// A_qp^(k), the u-deformed Yangian antisymmetrizer, partial traces, generator
// chain products and the star product behind M^[k].
//
// Basis convention: e_{i_1} (x) ... (x) e_{i_k} has linear index with i_1 the
// most significant digit; indices are 1-based.
#pragma once

#include <map>
#include <vector>

#include "manin/multiindex.hpp"
#include "manin/ncpoly.hpp"

namespace manin {

class ScalarMatrix {
 public:
  ScalarMatrix(std::vector<int> row_factors, std::vector<int> col_factors,
               Field f);
  static ScalarMatrix identity(const std::vector<int>& factors, Field f);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Field field() const { return field_; }
  const std::vector<int>& row_factors() const { return row_factors_; }
  const std::vector<int>& col_factors() const { return col_factors_; }

  FieldElement at(int r, int c) const;  // 0-based linear indices
  void add_at(int r, int c, const FieldElement& v);
  const std::map<int, FieldElement>& row(int r) const { return data_[r]; }

  ScalarMatrix operator*(const ScalarMatrix& o) const;
  ScalarMatrix operator+(const ScalarMatrix& o) const;
  ScalarMatrix operator-(const ScalarMatrix& o) const;
  ScalarMatrix scaled(const FieldElement& c) const;
  bool operator==(const ScalarMatrix& o) const;
  bool is_zero() const;
  size_t nnz() const;
  FieldElement trace() const;

  /// Contracts the 1-based slots in `slots` (row and col factor dims must
  /// agree there); remaining slots keep their order.
  ScalarMatrix partial_trace(const std::vector<int>& slots) const;

 private:
  int rows_, cols_;
  std::vector<int> row_factors_, col_factors_;
  Field field_;
  std::vector<std::map<int, FieldElement>> data_;
};

/// digits[t] is the 1-based index in slot t+1; slot 1 most significant.
std::vector<int> tensor_decode(int linear, int dim, int k);
int tensor_encode(const std::vector<int>& digits, int dim);

/// P_q on C^n (x) C^n: P(e_a (x) e_b) = q_ab e_b (x) e_a.
ScalarMatrix permutation_op(const ParamView& q);

/// Embeds a two-slot operator into slots (a, b) of k n-dimensional slots.
ScalarMatrix embed_two_slot(const ScalarMatrix& op2, int a, int b, int k,
                            int n);

/// P^sigma for sigma in S_k acting on (C^n)^(x k); computed from an adjacent-
/// transposition factorization (well-definedness across factorizations holds
/// because P_q^2 = 1 and the braid relation hold, and is covered by tests).
ScalarMatrix perm_action(const ParamView& q, const Perm& sigma, int k);

enum class ProjKind {
  antisym_q,
  sym_q,
  antisym_p,
  sym_p,
  mixed_qp,
  yangian_antisym
};

/// [i]_{u^2} bracket convention for the Yangian antisymmetrizer normalizer.
enum class BracketConvention {
  geometric_u2,       // [i] = 1 + u^2 + ... + u^(2(i-1))
  geometric_u2_inv,   // [i] = 1 + u^-2 + ... + u^(-2(i-1))
  balanced            // [i] = (u^(2i) - u^(-2i)) / (u^2 - u^(-2))
};

FieldElement u_bracket(const FieldElement& u, int i, BracketConvention conv);
FieldElement u_bracket_factorial(const FieldElement& u, int k,
                                 BracketConvention conv);

/// The normalized projector of the given kind on (C^n)^(x k); n is taken
/// from the assignment (q side) or must be passed for the p side of a
/// rectangular assignment via the views inside.
ScalarMatrix projector(const ParameterAssignment& assign, ProjKind kind, int k,
                       BracketConvention conv = BracketConvention::geometric_u2_inv);

/// (Anti)symmetrizer acting on the contiguous slot range [lo, hi] (1-based)
/// of k slots, identity elsewhere. lo > hi yields the identity.
ScalarMatrix projector_on_range(const ParamView& q, bool antisym, int k,
                                int lo, int hi);

/// Matrix over the free algebra.
class AlgMatrix {
 public:
  AlgMatrix(int rows, int cols, Field f);
  /// The generic matrix of generators of the family.
  static AlgMatrix generators(const Alphabet& a, Family fam, Field f);
  static AlgMatrix identity(int n, Field f);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Field field() const { return field_; }

  const NCPoly& at(int r, int c) const;  // 0-based
  NCPoly& at(int r, int c);

  AlgMatrix operator*(const AlgMatrix& o) const;
  AlgMatrix operator+(const AlgMatrix& o) const;
  AlgMatrix operator-(const AlgMatrix& o) const;
  AlgMatrix scaled(const NCPoly& c) const;  // left multiplication by c
  bool is_zero() const;
  NCPoly trace() const;

 private:
  int rows_, cols_;
  Field field_;
  std::vector<NCPoly> e_;
};

/// The n^k x m^k matrix with entry ((i_1..i_k),(j_1..j_k)) equal to the word
/// base[i_1,j_1] ... base[i_k,j_k].
AlgMatrix alg_product_chain(const AlgMatrix& base, int k);

/// tr(C . X_1 ... X_k) where X_t is `base` acting in slot t; C must be
/// n^k-square with n = base.rows() = base.cols().
NCPoly traced_chain(const ScalarMatrix& C, const AlgMatrix& base, int k);

/// tr_{1..k-1}(C . X_1 ... X_k): the n x n matrix left on slot k.
AlgMatrix partial_traced_chain(const ScalarMatrix& C, const AlgMatrix& base,
                               int k);

/// L . X_1...X_k . R with R optional; L is n^k-square, R m^k-square.
AlgMatrix sandwich_chain(const ScalarMatrix& L, const AlgMatrix& base, int k,
                         const ScalarMatrix* R);

/// B * C = tr_1 P_q B_1 C_2, i.e. (B*C)[y,d] = sum_b q_{yb} B[y,b] C[b,d].
AlgMatrix star_product(const ParamView& q, const AlgMatrix& B,
                       const AlgMatrix& C);

/// M^[k] under the star product; M^[0] = 1, M^[1] = M.
AlgMatrix star_power(const ParamView& q, const AlgMatrix& M, int k);

}  // namespace manin
