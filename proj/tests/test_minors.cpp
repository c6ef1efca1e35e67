#include "doctest.h"
#include "manin/minors.hpp"

using namespace manin;

namespace {

ParameterAssignment gen(int n, uint64_t seed) {
  return ParameterAssignment::make(n, n, Mode::generic, seed,
                                   Field::default_fp());
}

// Independent oracle: ordinary determinant / permanent by the naive n!
// expansion over exact rationals.
mpq_class naive_det(const std::vector<std::vector<mpq_class>>& m) {
  int n = (int)m.size();
  mpq_class acc = 0;
  for (const Perm& s : all_perms(n)) {
    mpq_class t = inversions(s) % 2 ? -1 : 1;
    for (int i = 0; i < n; ++i) t *= m[s[i] - 1][i];
    acc += t;
  }
  return acc;
}

mpq_class naive_per(const std::vector<std::vector<mpq_class>>& m) {
  int n = (int)m.size();
  mpq_class acc = 0;
  for (const Perm& s : all_perms(n)) {
    mpq_class t = 1;
    for (int i = 0; i < n; ++i) t *= m[i][s[i] - 1];
    acc += t;
  }
  return acc;
}

}  // namespace

TEST_CASE("cdet frozen expansions") {
  auto a = gen(2, 5);
  Field f = a.field();
  Alphabet al({{Family::M, 2, 2}});
  AlgMatrix M = AlgMatrix::generators(al, Family::M, f);
  ParamView q = ParamView::q_of(a);
  SUBCASE("n = 1") {
    Alphabet al1({{Family::M, 1, 1}});
    AlgMatrix M1 = AlgMatrix::generators(al1, Family::M, f);
    auto a1 = gen(1, 5);
    NCPoly d = cdet(ParamView::q_of(a1), {1}, submatrix_entry(M1, {1}, {1}));
    CHECK(d == M1.at(0, 0));
  }
  SUBCASE("n = 2: M11 M22 - q21 M21 M12") {
    NCPoly d = cdet(q, {1, 2}, submatrix_entry(M, {1, 2}, {1, 2}));
    NCPoly expect = M.at(0, 0) * M.at(1, 1) -
                    (M.at(1, 0) * M.at(0, 1)) * a.lookup('q', 2, 1);
    CHECK(d == expect);
  }
}

TEST_CASE("rper frozen expansion and normalization") {
  auto a = gen(2, 6);
  Field f = a.field();
  Alphabet al({{Family::M, 2, 2}});
  AlgMatrix M = AlgMatrix::generators(al, Family::M, f);
  ParamView p = ParamView::p_of(a);
  NCPoly r = rper(p, {1, 2}, submatrix_entry(M, {1, 2}, {1, 2}), false);
  NCPoly expect =
      M.at(0, 0) * M.at(1, 1) + (M.at(0, 1) * M.at(1, 0)) * a.lookup('p', 1, 2);
  CHECK(r == expect);
  // repeated column J = (1,1): v = 2!, normalized result collapses to a
  // single product per row order
  NCPoly rn = rper(p, {1, 1}, submatrix_entry(M, {1, 2}, {1, 1}), true);
  CHECK(rn == M.at(0, 0) * M.at(1, 0));
}

TEST_CASE("classical specialization matches the naive oracles") {
  Field f = Field::rationals();
  auto a = ParameterAssignment::make(3, 3, Mode::classical, 2, f);
  Rng rng(99);
  std::vector<std::vector<mpq_class>> vals(3, std::vector<mpq_class>(3));
  AlgMatrix num(3, 3, f);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      FieldElement e = rng.nonzero(f);
      vals[i][j] = e.rational();
      num.at(i, j) = NCPoly::constant(e);
    }
  MultiIndex I = {1, 2, 3};
  NCPoly d = cdet(ParamView::q_of(a), I, submatrix_entry(num, I, I));
  NCPoly rd = rdet(ParamView::q_of(a), I, submatrix_entry(num, I, I));
  NCPoly pr = rper(ParamView::p_of(a), I, submatrix_entry(num, I, I), false);
  CHECK(d.coeff(Word()).rational() == naive_det(vals));
  CHECK(rd.coeff(Word()).rational() == naive_det(vals));
  CHECK(pr.coeff(Word()).rational() == naive_per(vals));
}

TEST_CASE("sym functions: e1 = h1 = trace, e_k vanishes beyond top degree") {
  auto a = gen(2, 7);
  Field f = a.field();
  Alphabet al({{Family::M, 2, 2}});
  AlgMatrix M = AlgMatrix::generators(al, Family::M, f);
  NCPoly e0 = sym_function('e', 0, M, a);
  CHECK(e0 == NCPoly::one(f));
  NCPoly e1 = sym_function('e', 1, M, a);
  NCPoly h1 = sym_function('h', 1, M, a);
  NCPoly tr = M.at(0, 0) + M.at(1, 1);
  CHECK(e1 == tr);
  CHECK(h1 == tr);
  // e_k = 0 for k > n: the projector itself vanishes
  NCPoly e3 = sym_function('e', 3, M, a);
  CHECK(e3.is_zero());
}

TEST_CASE("char poly coefficients") {
  auto a = gen(2, 8);
  Field f = a.field();
  Alphabet al({{Family::M, 2, 2}});
  AlgMatrix M = AlgMatrix::generators(al, Family::M, f);
  auto coeffs = char_poly_coeffs(M, a);
  REQUIRE(coeffs.size() == 3);
  CHECK(coeffs[0] == NCPoly::one(f));
  CHECK(coeffs[1] == sym_function('e', 1, M, a) * (-FieldElement::one(f)));
  CHECK(coeffs[2] == sym_function('e', 2, M, a));
  SUBCASE("n = 1") {
    Alphabet al1({{Family::M, 1, 1}});
    AlgMatrix M1 = AlgMatrix::generators(al1, Family::M, f);
    auto a1 = gen(1, 8);
    auto c1 = char_poly_coeffs(M1, a1);
    REQUIRE(c1.size() == 2);
    CHECK(c1[0] == NCPoly::one(f));
    CHECK(c1[1] == M1.at(0, 0) * (-FieldElement::one(f)));
  }
}

TEST_CASE("minor spec validation") {
  auto a = gen(2, 9);
  Alphabet al({{Family::M, 2, 2}});
  AlgMatrix M = AlgMatrix::generators(al, Family::M, a.field());
  MinorSpec bad{MinorOrientation::column, MinorKind::det, {2, 1}, {1, 2}};
  CHECK_THROWS_AS(minor(bad, M, ParamView::q_of(a)), MathError);
  MinorSpec good{MinorOrientation::column, MinorKind::det, {1, 2}, {2, 1}};
  CHECK_FALSE(minor(good, M, ParamView::q_of(a)).is_zero());
}

TEST_CASE("rdet and cper frozen expansions at n = 2") {
  auto a = gen(2, 15);
  Field f = a.field();
  Alphabet al({{Family::M, 2, 2}});
  AlgMatrix M = AlgMatrix::generators(al, Family::M, f);
  MultiIndex I = {1, 2};
  // rdet: rows in order, columns permuted with eps(q, J, sigma)
  NCPoly rd = rdet(ParamView::q_of(a), I, submatrix_entry(M, I, I));
  NCPoly rd_expect = M.at(0, 0) * M.at(1, 1) -
                     (M.at(0, 1) * M.at(1, 0)) * a.lookup('q', 2, 1);
  CHECK(rd == rd_expect);
  // cper: columns in order, rows permuted with mu(p, I, sigma)
  NCPoly cp = cper(ParamView::p_of(a), I, submatrix_entry(M, I, I), false);
  NCPoly cp_expect = M.at(0, 0) * M.at(1, 1) +
                     (M.at(1, 0) * M.at(0, 1)) * a.lookup('p', 1, 2);
  CHECK(cp == cp_expect);
}
