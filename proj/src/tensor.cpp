#include "manin/tensor.hpp"

#include <algorithm>
#include <numeric>

namespace manin {

namespace {
int product_of(const std::vector<int>& v) {
  int p = 1;
  for (int x : v) p *= x;
  return p;
}
}  // namespace

ScalarMatrix::ScalarMatrix(std::vector<int> row_factors,
                           std::vector<int> col_factors, Field f)
    : row_factors_(std::move(row_factors)),
      col_factors_(std::move(col_factors)),
      field_(f) {
  rows_ = product_of(row_factors_);
  cols_ = product_of(col_factors_);
  data_.resize(rows_);
}

ScalarMatrix ScalarMatrix::identity(const std::vector<int>& factors, Field f) {
  ScalarMatrix m(factors, factors, f);
  for (int i = 0; i < m.rows_; ++i)
    m.add_at(i, i, FieldElement::one(f));
  return m;
}

FieldElement ScalarMatrix::at(int r, int c) const {
  auto it = data_[r].find(c);
  return it == data_[r].end() ? FieldElement::zero(field_) : it->second;
}

void ScalarMatrix::add_at(int r, int c, const FieldElement& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = data_[r].emplace(c, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) data_[r].erase(it);
  }
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
  if (cols_ != o.rows_) throw MathError("ScalarMatrix: shape mismatch in *");
  ScalarMatrix r(row_factors_, o.col_factors_, field_);
  for (int i = 0; i < rows_; ++i)
    for (const auto& [k, a] : data_[i])
      for (const auto& [j, b] : o.data_[k]) r.add_at(i, j, a * b);
  return r;
}

ScalarMatrix ScalarMatrix::operator+(const ScalarMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw MathError("ScalarMatrix: shape mismatch in +");
  ScalarMatrix r = *this;
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, b] : o.data_[i]) r.add_at(i, j, b);
  return r;
}

ScalarMatrix ScalarMatrix::operator-(const ScalarMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw MathError("ScalarMatrix: shape mismatch in -");
  ScalarMatrix r = *this;
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, b] : o.data_[i]) r.add_at(i, j, -b);
  return r;
}

ScalarMatrix ScalarMatrix::scaled(const FieldElement& c) const {
  ScalarMatrix r(row_factors_, col_factors_, field_);
  if (c.is_zero()) return r;
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, v] : data_[i]) r.add_at(i, j, v * c);
  return r;
}

bool ScalarMatrix::operator==(const ScalarMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (int i = 0; i < rows_; ++i) {
    if (data_[i].size() != o.data_[i].size()) return false;
    for (const auto& [j, v] : data_[i]) {
      auto it = o.data_[i].find(j);
      if (it == o.data_[i].end() || !(it->second == v)) return false;
    }
  }
  return true;
}

bool ScalarMatrix::is_zero() const {
  for (const auto& row : data_)
    if (!row.empty()) return false;
  return true;
}

size_t ScalarMatrix::nnz() const {
  size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

FieldElement ScalarMatrix::trace() const {
  if (rows_ != cols_) throw MathError("trace of non-square matrix");
  FieldElement t = FieldElement::zero(field_);
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

ScalarMatrix ScalarMatrix::partial_trace(const std::vector<int>& slots) const {
  int k = (int)row_factors_.size();
  if ((int)col_factors_.size() != k)
    throw MathError("partial_trace: mixed slot counts");
  std::vector<char> traced(k, 0);
  for (int s : slots) {
    if (s < 1 || s > k) throw MathError("partial_trace: invalid slot");
    if (row_factors_[s - 1] != col_factors_[s - 1])
      throw MathError("partial_trace: traced slot is not square");
    traced[s - 1] = 1;
  }
  std::vector<int> new_rf, new_cf;
  for (int t = 0; t < k; ++t)
    if (!traced[t]) {
      new_rf.push_back(row_factors_[t]);
      new_cf.push_back(col_factors_[t]);
    }
  if (new_rf.empty()) {
    new_rf.push_back(1);
    new_cf.push_back(1);
  }
  ScalarMatrix out(new_rf, new_cf, field_);

  // Decode with mixed radices.
  auto decode = [&](int linear, const std::vector<int>& factors) {
    std::vector<int> d(factors.size());
    for (int t = (int)factors.size() - 1; t >= 0; --t) {
      d[t] = linear % factors[t];
      linear /= factors[t];
    }
    return d;
  };
  auto encode_kept = [&](const std::vector<int>& d,
                         const std::vector<int>& factors) {
    int v = 0;
    for (int t = 0; t < k; ++t)
      if (!traced[t]) v = v * factors[t] + d[t];
    return v;
  };
  for (int i = 0; i < rows_; ++i) {
    if (data_[i].empty()) continue;
    std::vector<int> di = decode(i, row_factors_);
    for (const auto& [j, v] : data_[i]) {
      std::vector<int> dj = decode(j, col_factors_);
      bool diag = true;
      for (int t = 0; t < k && diag; ++t)
        if (traced[t] && di[t] != dj[t]) diag = false;
      if (!diag) continue;
      out.add_at(encode_kept(di, row_factors_), encode_kept(dj, col_factors_),
                 v);
    }
  }
  return out;
}

std::vector<int> tensor_decode(int linear, int dim, int k) {
  std::vector<int> d(k);
  for (int t = k - 1; t >= 0; --t) {
    d[t] = linear % dim + 1;
    linear /= dim;
  }
  return d;
}

int tensor_encode(const std::vector<int>& digits, int dim) {
  int v = 0;
  for (int x : digits) v = v * dim + (x - 1);
  return v;
}

ScalarMatrix permutation_op(const ParamView& q) {
  int n = q.dim();
  Field f = q.field();
  ScalarMatrix P({n, n}, {n, n}, f);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      P.add_at(tensor_encode({b, a}, n), tensor_encode({a, b}, n), q.at(a, b));
  return P;
}

ScalarMatrix embed_two_slot(const ScalarMatrix& op2, int a, int b, int k,
                            int n) {
  if (a == b || a < 1 || b < 1 || a > k || b > k)
    throw MathError("embed_two_slot: bad slots");
  std::vector<int> factors(k, n);
  ScalarMatrix out(factors, factors, op2.field());
  int rest = 1;
  for (int t = 0; t < k - 2; ++t) rest *= n;
  for (int r2 = 0; r2 < op2.rows(); ++r2) {
    for (const auto& [c2, v] : op2.row(r2)) {
      std::vector<int> ro = tensor_decode(r2, n, 2), co = tensor_decode(c2, n, 2);
      for (int e = 0; e < rest; ++e) {
        std::vector<int> env = tensor_decode(e, n, k - 2);
        std::vector<int> row(k), col(k);
        int ei = 0;
        for (int t = 1; t <= k; ++t) {
          if (t == a) {
            row[t - 1] = ro[0];
            col[t - 1] = co[0];
          } else if (t == b) {
            row[t - 1] = ro[1];
            col[t - 1] = co[1];
          } else {
            row[t - 1] = env[ei];
            col[t - 1] = env[ei];
            ++ei;
          }
        }
        out.add_at(tensor_encode(row, n), tensor_encode(col, n), v);
      }
    }
  }
  return out;
}

ScalarMatrix perm_action(const ParamView& q, const Perm& sigma, int k) {
  if ((int)sigma.size() != k || !is_permutation(sigma))
    throw MathError("perm_action: not a permutation");
  int n = q.dim();
  std::vector<int> factors(k, n);
  ScalarMatrix P2 = permutation_op(q);
  ScalarMatrix result = ScalarMatrix::identity(factors, q.field());
  // Peel adjacent descents: sigma = sigma' . s_i lowers the inversion count;
  // the action is a genuine S_k representation, so the factorization choice
  // does not matter.
  Perm s = sigma;
  Perm id(k);
  std::iota(id.begin(), id.end(), 1);
  while (s != id) {
    int i = -1;
    for (int t = 0; t + 1 < k; ++t)
      if (s[t] > s[t + 1]) {
        i = t;
        break;
      }
    ScalarMatrix Pi = k == 2 ? P2 : embed_two_slot(P2, i + 1, i + 2, k, n);
    result = result * Pi;
    std::swap(s[i], s[i + 1]);
  }
  return result;
}

FieldElement u_bracket(const FieldElement& u, int i, BracketConvention conv) {
  Field f = u.field();
  FieldElement one = FieldElement::one(f);
  FieldElement u2 = u * u;
  switch (conv) {
    case BracketConvention::geometric_u2: {
      FieldElement acc = FieldElement::zero(f), pow = one;
      for (int t = 0; t < i; ++t) {
        acc += pow;
        pow = pow * u2;
      }
      return acc;
    }
    case BracketConvention::geometric_u2_inv: {
      FieldElement u2i = u2.inv();
      FieldElement acc = FieldElement::zero(f), pow = one;
      for (int t = 0; t < i; ++t) {
        acc += pow;
        pow = pow * u2i;
      }
      return acc;
    }
    case BracketConvention::balanced: {
      FieldElement num = FieldElement::one(f), den = u2 - u2.inv();
      FieldElement u2k = one;
      for (int t = 0; t < i; ++t) u2k = u2k * u2;
      num = u2k - u2k.inv();
      return num / den;
    }
  }
  throw MathError("unknown bracket convention");
}

FieldElement u_bracket_factorial(const FieldElement& u, int k,
                                 BracketConvention conv) {
  FieldElement v = FieldElement::one(u.field());
  for (int i = 1; i <= k; ++i) v = v * u_bracket(u, i, conv);
  return v;
}

ScalarMatrix projector(const ParameterAssignment& assign, ProjKind kind, int k,
                       BracketConvention conv) {
  Field f = assign.field();
  int n;
  switch (kind) {
    case ProjKind::antisym_p:
    case ProjKind::sym_p:
      n = assign.m();
      break;
    default:
      n = assign.n();
  }
  std::vector<int> factors(k, n);
  if (kind == ProjKind::antisym_q || kind == ProjKind::sym_q ||
      kind == ProjKind::antisym_p || kind == ProjKind::sym_p) {
    bool anti = kind == ProjKind::antisym_q || kind == ProjKind::antisym_p;
    ParamView v = (kind == ProjKind::antisym_q || kind == ProjKind::sym_q)
                      ? ParamView::q_of(assign)
                      : ParamView::p_of(assign);
    ScalarMatrix acc({factors}, {factors}, f);
    long long kfact = 1;
    for (const Perm& s : all_perms(k)) {
      ScalarMatrix Ps = perm_action(v, s, k);
      FieldElement c = FieldElement::one(f);
      if (anti && inversions(s) % 2) c = -c;
      acc = acc + Ps.scaled(c);
    }
    for (int i = 2; i <= k; ++i) kfact *= i;
    FieldElement norm = FieldElement::from_int(kfact, f);
    if (norm.is_zero())
      throw MathError("projector: k! vanishes in the field");
    return acc.scaled(norm.inv());
  }

  // Explicit basis-element sums over increasing multi-indices.
  ScalarMatrix acc(factors, factors, f);
  ParamView qv = ParamView::q_of(assign), pv = ParamView::p_of(assign);
  std::vector<Perm> perms = all_perms(k);
  FieldElement norm = FieldElement::zero(f);
  if (kind == ProjKind::mixed_qp) {
    long long kfact = 1;
    for (int i = 2; i <= k; ++i) kfact *= i;
    norm = FieldElement::from_int(kfact, f);
  } else {
    norm = u_bracket_factorial(assign.u(), k, conv);
  }
  if (norm.is_zero())
    throw MathError("projector: normalizer vanishes in the field");
  FieldElement norm_inv = norm.inv();
  for (const MultiIndex& I : increasing_indices(n, k)) {
    for (const Perm& sig : perms) {
      FieldElement eq = eps_perm(qv, I, sig);
      for (const Perm& rho : perms) {
        FieldElement ep = eps_perm(pv, I, rho);
        FieldElement c = kind == ProjKind::mixed_qp ? ep / eq : ep * eq;
        std::vector<int> row(k), col(k);
        for (int t = 0; t < k; ++t) {
          row[t] = I[sig[t] - 1];
          col[t] = I[rho[t] - 1];
        }
        acc.add_at(tensor_encode(row, n), tensor_encode(col, n), c * norm_inv);
      }
    }
  }
  return acc;
}

ScalarMatrix projector_on_range(const ParamView& q, bool antisym, int k,
                                int lo, int hi) {
  int n = q.dim();
  Field f = q.field();
  std::vector<int> factors(k, n);
  if (lo > hi) return ScalarMatrix::identity(factors, f);
  if (lo < 1 || hi > k) throw MathError("projector_on_range: bad range");
  int len = hi - lo + 1;
  ScalarMatrix acc(factors, factors, f);
  long long lfact = 1;
  for (int i = 2; i <= len; ++i) lfact *= i;
  for (const Perm& s : all_perms(len)) {
    // Shift the permutation into slots [lo, hi].
    Perm big(k);
    std::iota(big.begin(), big.end(), 1);
    for (int t = 0; t < len; ++t) big[lo - 1 + t] = lo - 1 + s[t];
    ScalarMatrix Ps = perm_action(q, big, k);
    FieldElement c = FieldElement::one(f);
    if (antisym && inversions(s) % 2) c = -c;
    acc = acc + Ps.scaled(c);
  }
  FieldElement norm = FieldElement::from_int(lfact, f);
  return acc.scaled(norm.inv());
}

AlgMatrix::AlgMatrix(int rows, int cols, Field f)
    : rows_(rows), cols_(cols), field_(f) {
  e_.assign((size_t)rows * cols, NCPoly(f));
}

AlgMatrix AlgMatrix::generators(const Alphabet& a, Family fam, Field f) {
  const auto& fs = a.family(fam);
  int rows = fs.rows, cols = fs.cols == 0 ? 1 : fs.cols;
  AlgMatrix m(rows, cols, f);
  for (int r = 1; r <= rows; ++r)
    for (int c = 1; c <= (fs.cols == 0 ? 1 : fs.cols); ++c)
      m.at(r - 1, c - 1) =
          NCPoly::generator(a.letter(fam, r, fs.cols == 0 ? 0 : c), f);
  return m;
}

AlgMatrix AlgMatrix::identity(int n, Field f) {
  AlgMatrix m(n, n, f);
  for (int i = 0; i < n; ++i) m.at(i, i) = NCPoly::one(f);
  return m;
}

const NCPoly& AlgMatrix::at(int r, int c) const {
  return e_[(size_t)r * cols_ + c];
}
NCPoly& AlgMatrix::at(int r, int c) { return e_[(size_t)r * cols_ + c]; }

AlgMatrix AlgMatrix::operator*(const AlgMatrix& o) const {
  if (cols_ != o.rows_) throw MathError("AlgMatrix: shape mismatch in *");
  AlgMatrix r(rows_, o.cols_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (!o.at(k, j).is_zero()) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

AlgMatrix AlgMatrix::operator+(const AlgMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw MathError("AlgMatrix: shape mismatch in +");
  AlgMatrix r = *this;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) += o.at(i, j);
  return r;
}

AlgMatrix AlgMatrix::operator-(const AlgMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw MathError("AlgMatrix: shape mismatch in -");
  AlgMatrix r = *this;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) -= o.at(i, j);
  return r;
}

AlgMatrix AlgMatrix::scaled(const NCPoly& c) const {
  AlgMatrix r(rows_, cols_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = c * at(i, j);
  return r;
}

bool AlgMatrix::is_zero() const {
  for (const auto& p : e_)
    if (!p.is_zero()) return false;
  return true;
}

NCPoly AlgMatrix::trace() const {
  if (rows_ != cols_) throw MathError("trace of non-square AlgMatrix");
  NCPoly t(field_);
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

AlgMatrix alg_product_chain(const AlgMatrix& base, int k) {
  int n = base.rows(), m = base.cols();
  int rk = 1, ck = 1;
  for (int t = 0; t < k; ++t) {
    rk *= n;
    ck *= m;
  }
  AlgMatrix out(rk, ck, base.field());
  for (int r = 0; r < rk; ++r) {
    std::vector<int> ri = tensor_decode(r, n, k);
    for (int c = 0; c < ck; ++c) {
      std::vector<int> ci = tensor_decode(c, m, k);
      NCPoly p = NCPoly::one(base.field());
      for (int t = 0; t < k; ++t) p = p * base.at(ri[t] - 1, ci[t] - 1);
      out.at(r, c) = p;
    }
  }
  return out;
}

NCPoly traced_chain(const ScalarMatrix& C, const AlgMatrix& base, int k) {
  if (base.rows() != base.cols())
    throw MathError("traced_chain: base must be square");
  int n = base.rows();
  NCPoly acc(base.field());
  for (int v = 0; v < C.rows(); ++v) {
    std::vector<int> vi = tensor_decode(v, n, k);
    for (const auto& [w, c] : C.row(v)) {
      std::vector<int> wi = tensor_decode(w, n, k);
      NCPoly p = NCPoly::constant(c);
      for (int t = 0; t < k; ++t) p = p * base.at(wi[t] - 1, vi[t] - 1);
      acc += p;
    }
  }
  return acc;
}

AlgMatrix partial_traced_chain(const ScalarMatrix& C, const AlgMatrix& base,
                               int k) {
  if (base.rows() != base.cols())
    throw MathError("partial_traced_chain: base must be square");
  int n = base.rows();
  AlgMatrix out(n, n, base.field());
  for (int v = 0; v < C.rows(); ++v) {
    std::vector<int> vi = tensor_decode(v, n, k);  // (b_1..b_{k-1}, y)
    for (const auto& [w, c] : C.row(v)) {
      std::vector<int> wi = tensor_decode(w, n, k);
      for (int d = 1; d <= n; ++d) {
        NCPoly p = NCPoly::constant(c);
        for (int t = 0; t + 1 < k; ++t) p = p * base.at(wi[t] - 1, vi[t] - 1);
        p = p * base.at(wi[k - 1] - 1, d - 1);
        out.at(vi[k - 1] - 1, d - 1) += p;
      }
    }
  }
  return out;
}

AlgMatrix sandwich_chain(const ScalarMatrix& L, const AlgMatrix& base, int k,
                         const ScalarMatrix* R) {
  int n = base.rows(), m = base.cols();
  int ck = 1;
  for (int t = 0; t < k; ++t) ck *= m;
  AlgMatrix out(L.rows(), R ? R->cols() : ck, base.field());
  for (int v = 0; v < L.rows(); ++v) {
    for (const auto& [w, lc] : L.row(v)) {
      std::vector<int> wi = tensor_decode(w, n, k);
      if (!R) {
        for (int c = 0; c < ck; ++c) {
          std::vector<int> ci = tensor_decode(c, m, k);
          NCPoly p = NCPoly::constant(lc);
          for (int t = 0; t < k; ++t) p = p * base.at(wi[t] - 1, ci[t] - 1);
          out.at(v, c) += p;
        }
      } else {
        for (int y = 0; y < R->rows(); ++y) {
          std::vector<int> yi = tensor_decode(y, m, k);
          NCPoly p = NCPoly::constant(lc);
          for (int t = 0; t < k; ++t) p = p * base.at(wi[t] - 1, yi[t] - 1);
          for (const auto& [c, rc] : R->row(y)) out.at(v, c) += p * rc;
        }
      }
    }
  }
  return out;
}

AlgMatrix star_product(const ParamView& q, const AlgMatrix& B,
                       const AlgMatrix& C) {
  int n = q.dim();
  if (B.rows() != n || B.cols() != n || C.rows() != n || C.cols() != n)
    throw MathError("star_product: matrices must be n x n");
  AlgMatrix out(n, n, B.field());
  for (int y = 1; y <= n; ++y)
    for (int d = 1; d <= n; ++d) {
      NCPoly acc(B.field());
      for (int b = 1; b <= n; ++b)
        acc += (B.at(y - 1, b - 1) * C.at(b - 1, d - 1)) * q.at(y, b);
      out.at(y - 1, d - 1) = acc;
    }
  return out;
}

AlgMatrix star_power(const ParamView& q, const AlgMatrix& M, int k) {
  if (k < 0) throw MathError("star_power: negative power");
  if (k == 0) return AlgMatrix::identity(M.rows(), M.field());
  AlgMatrix acc = M;
  for (int i = 2; i <= k; ++i) acc = star_product(q, acc, M);
  return acc;
}

}  // namespace manin
