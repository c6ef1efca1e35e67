// Multi-index calculus and the epsilon / mu sign factors. A multi-index is a
// finite sequence of 1-based positive indices; "increasing" means strictly
// increasing. All factors are products over inversion pairs:
//
//   eps(q, I)        = 0 if I has a repeat, else prod_{s<t, i_s>i_t} (-q_{i_s i_t})
//   eps(q, I, sigma) = prod_{s<t, sigma_s>sigma_t} (-q_{i_{sigma_s} i_{sigma_t}})   (I increasing)
//   mu(p, J, sigma)  = prod_{s<t, sigma_s>sigma_t}   p_{j_{sigma_t} j_{sigma_s}}
//   mu(p, sigma)     = mu(p, (1..r), sigma)
#pragma once

#include <vector>

#include "manin/params.hpp"

namespace manin {

using MultiIndex = std::vector<int>;
/// A permutation of {1..r} stored as images: perm[s-1] = sigma(s).
using Perm = std::vector<int>;

bool is_increasing(const MultiIndex& I);
bool is_non_decreasing(const MultiIndex& I);
bool has_repeat(const MultiIndex& I);

/// Reverse I^tau.
MultiIndex reversed(const MultiIndex& I);
/// Non-decreasing rearrangement I^or.
MultiIndex sorted_index(const MultiIndex& I);
/// Juxtaposition I (+) J.
MultiIndex juxtapose(const MultiIndex& I, const MultiIndex& J);
/// K with the entries of I deleted (set-like; I must have distinct entries,
/// each contained in the increasing K).
MultiIndex complement(const MultiIndex& I, const MultiIndex& K);
/// (1, 2, ..., n).
MultiIndex iota_index(int n);

bool is_permutation(const Perm& s);
int inversions(const Perm& s);
/// All permutations of {1..r} in lexicographic order.
std::vector<Perm> all_perms(int r);

FieldElement eps_index(const ParamView& q, const MultiIndex& I);
FieldElement eps_perm(const ParamView& q, const MultiIndex& I, const Perm& s);
FieldElement mu_perm(const ParamView& p, const MultiIndex& J, const Perm& s);

/// v(alpha_J) = prod_a |alpha^-1(a)|! for the multiplicity map of J.
long long multiplicity_factorial(const MultiIndex& J);

/// All increasing r-subsets of {1..n} in lexicographic order.
std::vector<MultiIndex> increasing_indices(int n, int r);
/// All non-decreasing r-tuples over {1..n}.
std::vector<MultiIndex> non_decreasing_indices(int n, int r);
/// All r-tuples over {1..n}.
std::vector<MultiIndex> all_tuples(int n, int r);

std::string index_to_string(const MultiIndex& I);

}  // namespace manin
