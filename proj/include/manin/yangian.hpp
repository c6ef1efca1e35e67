// The multiparameter R-matrix and its structural checks: the Yang-Baxter
// equation, the closed form of R-hat at z = u^-2, and fusion of the nested
// staircase product down to the u-deformed antisymmetrizer.
#pragma once

#include "manin/tensor.hpp"

namespace manin {

/// R(z) on C^n (x) C^n for a yangian-mode assignment (p_ij q_ij = u^2):
///   (z u - u^-1) sum_i e_ii (x) e_ii
/// + sum_{i<j} (z u^-1 p_ij - u q_ij^-1) e_ii (x) e_jj
/// + sum_{i>j} (z u^-1 q_ji - u p_ji^-1) e_ii (x) e_jj
/// + z (u - u^-1) sum_{i<j} e_ij (x) e_ji
/// +   (u - u^-1) sum_{i>j} e_ij (x) e_ji
ScalarMatrix r_matrix(const ParameterAssignment& assign, const FieldElement& z);

/// R-hat(z) = P R(z) with the unparametrized flip P.
ScalarMatrix r_hat(const ParameterAssignment& assign, const FieldElement& z);

/// The closed form of R-hat(u^-2) (independent route, assembled from the
/// displayed four-term sum over i < j).
ScalarMatrix r_hat_u2_closed_form(const ParameterAssignment& assign);

/// The staircase product R(lambda_1, ..., lambda_k) =
/// (Rh_12 ... Rh_{k-1,k}) ... (Rh_12 Rh_23) Rh_12 with the spectral argument
/// of each factor read off the strands it crosses (argument lambda_b/lambda_a
/// when the factor exchanges original strands a and b).
ScalarMatrix fused_r(const ParameterAssignment& assign,
                     const std::vector<FieldElement>& lambdas);

/// The scalar u^{k(k-1)/2} prod_{0<=i<j<=k-1} (1 - u^{2(i-j)}) [k]_{u^2}!
/// multiplying A^(k) in the fusion formula, evaluated literally.
FieldElement fusion_scalar(const ParameterAssignment& assign, int k,
                           BracketConvention conv);

}  // namespace manin
