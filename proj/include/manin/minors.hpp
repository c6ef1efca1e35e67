// Quantum minor determinants and permanents, the elementary / complete
// symmetric functions e_k, h_k, and characteristic polynomial coefficients.
//
//   cdet_q(M_IJ)  = sum_sigma eps(q,I,sigma) M[i_sigma(1),j_1] ... M[i_sigma(r),j_r]
//   rdet_q(M_IJ)  = sum_sigma eps(q,J,sigma) M[i_1,j_sigma(1)] ... M[i_r,j_sigma(r)]
//   rper_p(M_IJ)  = sum_sigma mu(p,J,sigma)  M[i_1,j_sigma(1)] ...
//   cper_p(M_IJ)  = sum_sigma mu(p,I,sigma)  M[i_sigma(1),j_1] ...
//
// normalized permanents divide by v(alpha) of the permuted index. Entries
// are supplied through a position callback so the same expansion covers
// generator matrices, MN products and the diagonal-shifted Capelli minors.
#pragma once

#include <functional>

#include "manin/tensor.hpp"

namespace manin {

/// entry(a, b) is the (a, b) entry of the r x r (sub)matrix, positions
/// 1-based within the minor.
using EntryFn = std::function<NCPoly(int, int)>;

/// Column-ordered quantum determinant; I must be strictly increasing.
NCPoly cdet(const ParamView& q, const MultiIndex& I, const EntryFn& entry);
/// Row-ordered quantum determinant; J must be strictly increasing.
NCPoly rdet(const ParamView& q, const MultiIndex& J, const EntryFn& entry);
/// Row permanent; pass normalized = true to divide by v(alpha_J)
/// (J must then be non-decreasing).
NCPoly rper(const ParamView& p, const MultiIndex& J, const EntryFn& entry,
            bool normalized);
/// Column permanent; normalization divides by v(alpha_I).
NCPoly cper(const ParamView& p, const MultiIndex& I, const EntryFn& entry,
            bool normalized);

/// Entry callback for the submatrix of `base` with rows I and columns J.
EntryFn submatrix_entry(const AlgMatrix& base, const MultiIndex& I,
                        const MultiIndex& J);

enum class MinorOrientation { column, row };
enum class MinorKind { det, per, per_normalized };

struct MinorSpec {
  MinorOrientation orientation;
  MinorKind kind;
  MultiIndex I;
  MultiIndex J;
};

/// Minor of a plain generator matrix: dispatches on orientation/kind and
/// validates the index-shape invariants.
NCPoly minor(const MinorSpec& spec, const AlgMatrix& base, const ParamView& v);

/// e_k = tr_{1..k} A^(k) M_1...M_k and h_k = tr_{1..k} S^(k) M_1...M_k for a
/// square base matrix; flavor selects the q- or p-side projector. e_0 = h_0 = 1.
NCPoly sym_function(char kind, int k, const AlgMatrix& base,
                    const ParameterAssignment& assign, bool p_flavor = false);

/// Coefficients ((-1)^k e_k) for k = 0..n of char_q(M, t).
std::vector<NCPoly> char_poly_coeffs(const AlgMatrix& base,
                                     const ParameterAssignment& assign,
                                     bool p_flavor = false);

}  // namespace manin
