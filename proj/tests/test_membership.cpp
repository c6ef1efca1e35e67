#include "doctest.h"
#include "manin/membership.hpp"

using namespace manin;

namespace {

ParameterAssignment gen(int n, int m, uint64_t seed) {
  return ParameterAssignment::make(n, m, Mode::generic, seed,
                                   Field::default_fp());
}

// Independent dense rank oracle over F_p for cross-checking the sparse
// engine's degree components.
size_t dense_rank(std::vector<std::vector<uint64_t>> rows, uint64_t p) {
  size_t rank = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t c = 0; c < cols && rank < rows.size(); ++c) {
    size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    uint64_t inv = detail::inv_mod(rows[rank][c], p);
    for (size_t j = c; j < cols; ++j)
      rows[rank][j] = detail::mul_mod(rows[rank][j], inv, p);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      uint64_t f = rows[r][c];
      for (size_t j = c; j < cols; ++j)
        rows[r][j] = detail::sub_mod(rows[r][j],
                                     detail::mul_mod(f, rows[rank][j], p), p);
    }
    ++rank;
  }
  return rank;
}

size_t oracle_component_rank(const RelationSet& rels, int weight) {
  std::vector<Word> words = rels.alphabet().words_of_weight(weight, 1000000);
  std::unordered_map<Word, uint32_t, WordHash> id;
  for (uint32_t i = 0; i < words.size(); ++i) id[words[i]] = i;
  uint64_t p = rels.field().prime;
  std::vector<std::vector<uint64_t>> rows;
  std::map<int, std::vector<Word>> cache;
  auto words_of = [&](int w) -> const std::vector<Word>& {
    auto it = cache.find(w);
    if (it == cache.end())
      it = cache.emplace(w, rels.alphabet().words_of_weight(w, 1000000)).first;
    return it->second;
  };
  for (const Relation& rel : rels.relations()) {
    int rest = weight - rel.weight;
    if (rest < 0) continue;
    for (int wp = 0; wp <= rest; ++wp)
      for (const Word& pre : words_of(wp))
        for (const Word& suf : words_of(rest - wp)) {
          std::vector<uint64_t> row(words.size(), 0);
          for (const auto& [tw, tc] : rel.poly.terms()) {
            uint32_t c = id.at(pre.concat(tw).concat(suf));
            row[c] = detail::add_mod(row[c], tc.residue(), p);
          }
          rows.push_back(std::move(row));
        }
  }
  return dense_rank(std::move(rows), p);
}

}  // namespace

TEST_CASE("manin relation counts") {
  CHECK(manin_relation_set(1, 1, gen(1, 1, 3)).size() == 0);
  CHECK(manin_relation_set(2, 2, gen(2, 2, 3)).size() == 3);
  CHECK(manin_relation_set(2, 3, gen(2, 3, 3)).size() == 6);
  CHECK(manin_relation_set(3, 3, gen(3, 3, 3)).size() == 18);
}

TEST_CASE("degree component ranks against the dense oracle") {
  auto assign = gen(2, 2, 17);
  RelationSet rels = manin_relation_set(2, 2, assign);
  SUBCASE("weight 2 has rank 3 in dimension 16") {
    DegreeComponentInfo info = degree_component(rels, 2);
    CHECK(info.total_words == 16);
    CHECK(info.rank == 3);
    CHECK(info.rank == oracle_component_rank(rels, 2));
  }
  SUBCASE("weight 3: sparse and dense agree, rank below dimension") {
    DegreeComponentInfo info = degree_component(rels, 3);
    CHECK(info.total_words == 64);
    CHECK(info.rank == oracle_component_rank(rels, 3));
    CHECK(info.rank < 64);
    // generic rank is stable across seeds
    for (uint64_t s : {21ull, 22ull, 23ull}) {
      auto a2 = gen(2, 2, s);
      RelationSet r2 = manin_relation_set(2, 2, a2);
      CHECK(degree_component(r2, 3).rank == info.rank);
    }
  }
  SUBCASE("empty relation set has rank zero") {
    RelationSet none = manin_relation_set(1, 1, gen(1, 1, 2));
    CHECK(degree_component(none, 3).rank == 0);
  }
}

TEST_CASE("rank is invariant under permuting the relation list") {
  auto assign = gen(2, 2, 29);
  RelationSet rels = manin_relation_set(2, 2, assign);
  RelationSet shuffled(rels.alphabet(), rels.field());
  const auto& v = rels.relations();
  for (int i = (int)v.size() - 1; i >= 0; --i)
    shuffled.add(v[i].poly, v[i].tag);
  CHECK(degree_component(rels, 3).rank == degree_component(shuffled, 3).rank);
}

TEST_CASE("membership: generators, closure products, and non-members") {
  auto assign = gen(2, 2, 33);
  RelationSet rels = manin_relation_set(2, 2, assign);
  MembershipEngine eng(rels);
  Field f = assign.field();
  const Alphabet& al = rels.alphabet();

  SUBCASE("every relation is a member") {
    for (const Relation& r : rels.relations()) CHECK(eng.test(r.poly).member);
  }
  SUBCASE("zero is a member") { CHECK(eng.test(NCPoly::zero(f)).member); }
  SUBCASE("a bare monomial is not a member") {
    NCPoly m = NCPoly::generator(al.letter(Family::M, 1, 1), f) *
               NCPoly::generator(al.letter(Family::M, 2, 2), f);
    MembershipVerdict v = eng.test(m);
    CHECK_FALSE(v.member);
    CHECK(v.witness_weight == 2);
    CHECK_FALSE(v.witness.is_zero());
  }
  SUBCASE("two-sided closure: w r w' stays a member") {
    Rng rng(5);
    const auto& letters = al.letters();
    for (int t = 0; t < 20; ++t) {
      const Relation& r = rels.relations()[rng.below(rels.size())];
      Word pre, suf;
      for (uint64_t i = rng.below(3); i > 0; --i)
        pre = pre.appended(letters[rng.below(letters.size())]);
      for (uint64_t i = rng.below(3); i > 0; --i)
        suf = suf.appended(letters[rng.below(letters.size())]);
      NCPoly w = NCPoly::monomial(pre, FieldElement::one(f)) * r.poly *
                 NCPoly::monomial(suf, FieldElement::one(f));
      CHECK(eng.test(w).member);
    }
  }
  SUBCASE("mixed-weight polynomials split into components") {
    const Relation& r = rels.relations()[0];
    NCPoly mixed = r.poly + NCPoly::generator(al.letter(Family::M, 1, 1), f);
    MembershipVerdict v = eng.test(mixed);
    CHECK_FALSE(v.member);
    CHECK(v.witness_weight == 1);
  }
}

TEST_CASE("split engine agrees with the closure engine") {
  // Two commuting families where both sides carry Manin relations: compare
  // the tensor-split fast path against the generic closure engine on the
  // same targets.
  auto assign = gen(2, 2, 47);
  Field f = assign.field();
  Alphabet al({{Family::M, 2, 2}, {Family::N, 2, 2}});
  // split-eligible set: Manin on M, Manin on N, complete cross commutators
  RelationSet split_rels(al, f);
  add_manin_relations(split_rels, family_gen(al, Family::M, f), 2, 2,
                      ParamView::q_of(assign), ParamView::p_of(assign));
  add_manin_relations(split_rels, family_gen(al, Family::N, f), 2, 2,
                      ParamView::p_of(assign), ParamView::q_of(assign));
  add_commuting_relations(split_rels, al, Family::M, Family::N);
  MembershipEngine eng(split_rels);

  // closure-only twin: add a harmless H family so the alphabet has three
  // families and the split path is disabled
  Alphabet al3({{Family::M, 2, 2}, {Family::N, 2, 2}, {Family::H, 1, 1}});
  RelationSet closure_rels(al3, f);
  add_manin_relations(closure_rels, family_gen(al3, Family::M, f), 2, 2,
                      ParamView::q_of(assign), ParamView::p_of(assign));
  add_manin_relations(closure_rels, family_gen(al3, Family::N, f), 2, 2,
                      ParamView::p_of(assign), ParamView::q_of(assign));
  add_commuting_relations(closure_rels, al3, Family::M, Family::N);
  MembershipEngine closure_eng(closure_rels);

  Rng rng(9);
  const auto& letters = al.letters();
  int agree = 0;
  for (int t = 0; t < 40; ++t) {
    NCPoly p(f);
    for (int term = 0; term < 3; ++term) {
      Word w;
      for (int i = 0; i < 4; ++i)
        w = w.appended(letters[rng.below(letters.size())]);
      p.add_term(w, rng.nonzero(f));
    }
    // make half the samples actual members
    if (t % 2 == 0) {
      const Relation& r =
          split_rels.relations()[rng.below(split_rels.size())];
      Word pre = Word::single(letters[rng.below(letters.size())]);
      Word suf = Word::single(letters[rng.below(letters.size())]);
      p = NCPoly::monomial(pre, FieldElement::one(f)) * r.poly *
          NCPoly::monomial(suf, FieldElement::one(f));
    }
    bool a = eng.test(p).member;
    bool b = closure_eng.test(p).member;
    CHECK(a == b);
    agree += (a == b);
  }
  CHECK(agree == 40);
}

TEST_CASE("relations_from_idempotent reproduces the manin row space") {
  auto assign = gen(2, 2, 53);
  RelationSet manin = manin_relation_set(2, 2, assign);
  ScalarMatrix A = projector(assign, ProjKind::antisym_q, 2);
  ScalarMatrix B = projector(assign, ProjKind::antisym_p, 2);
  RelationSet from_idem =
      relations_from_idempotent(A, B, manin.alphabet(), Family::M);
  DegreeComponentInfo a = degree_component(manin, 2);
  DegreeComponentInfo b = degree_component(from_idem, 2);
  CHECK(a.rank == b.rank);
  CHECK(a.pivot_words == b.pivot_words);
  // cross-membership in both directions
  MembershipEngine ea(manin), eb(from_idem);
  for (const Relation& r : from_idem.relations()) CHECK(ea.test(r.poly).member);
  for (const Relation& r : manin.relations()) CHECK(eb.test(r.poly).member);
}

TEST_CASE("idempotent input validation") {
  auto assign = gen(2, 2, 57);
  Field f = assign.field();
  Alphabet al({{Family::M, 2, 2}});
  ScalarMatrix P = permutation_op(ParamView::q_of(assign));
  ScalarMatrix A = projector(assign, ProjKind::antisym_q, 2);
  CHECK_THROWS_AS(relations_from_idempotent(P, A, al, Family::M), MathError);
  // A = 0 or B = 1 give an empty set
  ScalarMatrix Z({2, 2}, {2, 2}, f);
  ScalarMatrix I = ScalarMatrix::identity({2, 2}, f);
  CHECK(relations_from_idempotent(Z, A, al, Family::M).size() == 0);
  CHECK(relations_from_idempotent(A, I, al, Family::M).size() == 0);
}

TEST_CASE("guard is enforced") {
  auto assign = gen(3, 3, 61);
  RelationSet rels = manin_relation_set(3, 3, assign);
  MembershipEngine eng(rels, 100);
  Field f = assign.field();
  NCPoly m = NCPoly::one(f);
  for (int i = 0; i < 4; ++i)
    m = m * NCPoly::generator(rels.alphabet().letter(Family::M, 1, 1), f) *
        NCPoly::generator(rels.alphabet().letter(Family::M, 2, 2), f);
  CHECK_THROWS_AS(eng.test(m), GuardExceeded);
}

TEST_CASE("foreign letters and fields are rejected") {
  auto assign = gen(2, 2, 71);
  RelationSet rels = manin_relation_set(2, 2, assign);
  MembershipEngine eng(rels);
  // a generator outside the alphabet
  NCPoly foreign =
      NCPoly::generator(pack_letter(Family::X, 1, 0), assign.field());
  CHECK_THROWS_AS(eng.test(foreign), MathError);
  // wrong field
  NCPoly rational = NCPoly::one(Field::rationals());
  CHECK_THROWS_AS(eng.test(rational), MathError);
}

TEST_CASE("shared components: many targets, one elimination") {
  auto assign = gen(2, 2, 73);
  RelationSet rels = manin_relation_set(2, 2, assign);
  MembershipEngine eng(rels);
  Field f = assign.field();
  const Alphabet& al = rels.alphabet();
  // prepare with a batch, then test each; verdicts must match fresh engines
  std::vector<NCPoly> targets;
  Rng rng(3);
  const auto& letters = al.letters();
  for (int t = 0; t < 10; ++t) {
    NCPoly p(f);
    for (int term = 0; term < 2; ++term) {
      Word w;
      for (int i = 0; i < 3; ++i)
        w = w.appended(letters[rng.below(letters.size())]);
      p.add_term(w, rng.nonzero(f));
    }
    targets.push_back(p);
  }
  std::vector<const NCPoly*> ptrs;
  for (auto& t : targets) ptrs.push_back(&t);
  eng.prepare(ptrs);
  for (auto& t : targets) {
    MembershipEngine fresh(rels);
    CHECK(eng.test(t).member == fresh.test(t).member);
  }
}

TEST_CASE("capelli relation sets: counts and the single-cross case") {
  Field f = Field::default_fp();
  SUBCASE("n=m=s=1: only the cross relation M11 N11 - N11 M11 + h11") {
    auto a = ParameterAssignment::make(1, 1, Mode::generic, 3, f);
    RelationSet rs = capelli_relation_set(1, 1, 1, a, CapelliVariant::det_col);
    REQUIRE(rs.size() == 1);
    const NCPoly& p = rs.relations()[0].poly;
    CHECK(p.term_count() == 3);
    CHECK(p.homogeneous_weight() == 2);
  }
  SUBCASE("det-col at (2,2,2): 3 Manin on M + 16 cross") {
    auto a = ParameterAssignment::make(2, 2, Mode::generic, 3, f);
    RelationSet rs = capelli_relation_set(2, 2, 2, a, CapelliVariant::det_col);
    CHECK(rs.size() == 3 + 16);
    // delta_jk = 0 cross relations are plain commutators
    int commutators = 0;
    for (const Relation& r : rs.relations())
      if (r.tag == RelTag::capelli_cross && r.poly.term_count() == 2)
        ++commutators;
    CHECK(commutators == 8);  // j != k pairs: 2*1*2*2
  }
  SUBCASE("per-col adds the weight-3 M-H relations") {
    auto a = ParameterAssignment::make(2, 2, Mode::generic, 3, f);
    RelationSet rs = capelli_relation_set(2, 2, 2, a, CapelliVariant::per_col);
    bool saw_weight3 = false;
    for (const Relation& r : rs.relations())
      if (r.weight == 3) saw_weight3 = true;
    CHECK(saw_weight3);
  }
  SUBCASE("dimension mismatch is rejected") {
    auto a = ParameterAssignment::make(3, 3, Mode::generic, 3, f);
    CHECK_THROWS_AS(capelli_relation_set(2, 2, 2, a, CapelliVariant::det_col),
                    MathError);
  }
}
