#include "doctest.h"
#include "manin/multiindex.hpp"

using namespace manin;

namespace {
ParameterAssignment generic4(uint64_t seed) {
  return ParameterAssignment::make(4, 4, Mode::generic, seed,
                                   Field::default_fp());
}
}  // namespace

TEST_CASE("eps_index frozen values") {
  auto a = generic4(3);
  ParamView q = ParamView::q_of(a);
  FieldElement one = FieldElement::one(a.field());
  CHECK(eps_index(q, {1, 2}) == one);
  CHECK(eps_index(q, {2, 1}) == -a.lookup('q', 2, 1));
  CHECK(eps_index(q, {1, 1, 2}).is_zero());
  // I = (3,1,2): inversion pairs (3,1) and (3,2).
  CHECK(eps_index(q, {3, 1, 2}) ==
        a.lookup('q', 3, 1) * a.lookup('q', 3, 2));
}

TEST_CASE("eps_perm frozen values") {
  auto a = generic4(4);
  ParamView q = ParamView::q_of(a);
  CHECK(eps_perm(q, {1, 2}, {1, 2}) == FieldElement::one(a.field()));
  CHECK(eps_perm(q, {1, 2}, {2, 1}) == -a.lookup('q', 2, 1));
  // sigma = (3,2,1): inversions (3,2), (3,1), (2,1).
  FieldElement expect = (-a.lookup('q', 3, 2)) * (-a.lookup('q', 3, 1)) *
                        (-a.lookup('q', 2, 1));
  CHECK(eps_perm(q, {1, 2, 3}, {3, 2, 1}) == expect);
  CHECK_THROWS_AS(eps_perm(q, {2, 1}, {1, 2}), MathError);
  CHECK_THROWS_AS(eps_perm(q, {1, 2}, {1, 1}), MathError);
}

TEST_CASE("mu_perm frozen values") {
  auto a = generic4(5);
  ParamView p = ParamView::p_of(a);
  CHECK(mu_perm(p, {1, 2}, {1, 2}) == FieldElement::one(a.field()));
  CHECK(mu_perm(p, {1, 2}, {2, 1}) == a.lookup('p', 1, 2));
  FieldElement expect = a.lookup('p', 2, 3) * a.lookup('p', 1, 3) *
                        a.lookup('p', 1, 2);
  CHECK(mu_perm(p, {1, 2, 3}, {3, 2, 1}) == expect);
}

TEST_CASE("complement") {
  CHECK(complement({2}, {1, 2, 3}) == MultiIndex{1, 3});
  CHECK(complement({1, 3}, {1, 2, 3, 4}) == MultiIndex{2, 4});
  CHECK(complement({}, {1, 2}) == MultiIndex{1, 2});
  CHECK_THROWS_AS(complement({5}, {1, 2}), MathError);
  CHECK_THROWS_AS(complement({1, 1}, {1, 2}), MathError);
}

TEST_CASE("eps factorization identities, exhaustive over {1..4}") {
  auto a = generic4(6);
  ParamView q = ParamView::q_of(a);
  std::vector<MultiIndex> all_inc;
  for (int r = 0; r <= 4; ++r)
    for (const auto& I : increasing_indices(4, r)) all_inc.push_back(I);
  for (const auto& I : all_inc)
    for (const auto& K : all_inc) {
      CHECK(eps_index(q, juxtapose(I, reversed(K))) ==
            eps_index(q, juxtapose(I, K)) * eps_index(q, reversed(K)));
    }
  // Nested: I subset of K.
  for (const auto& K : all_inc)
    for (const auto& I : all_inc) {
      bool contained = true;
      for (int v : I)
        if (std::find(K.begin(), K.end(), v) == K.end()) contained = false;
      if (!contained) continue;
      MultiIndex KI = complement(I, K);
      CHECK(eps_index(q, reversed(K)) ==
            eps_index(q, reversed(I)) * eps_index(q, reversed(KI)) *
                eps_index(q, juxtapose(I, KI)) *
                eps_index(q, juxtapose(KI, I)));
    }
}

TEST_CASE("eps_index equals eps_perm on the sorted index") {
  auto a = generic4(7);
  ParamView q = ParamView::q_of(a);
  for (int r = 1; r <= 4; ++r)
    for (const auto& I : all_tuples(4, r)) {
      if (has_repeat(I)) continue;
      MultiIndex S = sorted_index(I);
      Perm sigma(r);
      for (int t = 0; t < r; ++t)
        sigma[t] =
            (int)(std::find(S.begin(), S.end(), I[t]) - S.begin()) + 1;
      CHECK(eps_index(q, I) == eps_perm(q, S, sigma));
    }
}

TEST_CASE("classical specialization: eps is the sign, mu is one") {
  auto a = ParameterAssignment::make(4, 4, Mode::classical, 1,
                                     Field::default_fp());
  ParamView q = ParamView::q_of(a), p = ParamView::p_of(a);
  MultiIndex I = iota_index(4);
  for (const Perm& s : all_perms(4)) {
    FieldElement sign = FieldElement::from_int(
        inversions(s) % 2 ? -1 : 1, a.field());
    CHECK(eps_perm(q, I, s) == sign);
    CHECK(mu_perm(p, I, s) == FieldElement::one(a.field()));
  }
}

TEST_CASE("multiplicity factorial") {
  CHECK(multiplicity_factorial({1, 1}) == 2);
  CHECK(multiplicity_factorial({1, 2, 3}) == 1);
  CHECK(multiplicity_factorial({2, 2, 2}) == 6);
  CHECK(multiplicity_factorial({1, 1, 2, 2}) == 4);
}

TEST_CASE("index enumeration") {
  CHECK(increasing_indices(4, 2).size() == 6);
  CHECK(non_decreasing_indices(3, 2).size() == 6);
  CHECK(all_tuples(3, 2).size() == 9);
  CHECK(increasing_indices(2, 3).empty());
  CHECK(increasing_indices(3, 0).size() == 1);
}
