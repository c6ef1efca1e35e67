#include "manin/membership.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <unordered_set>

namespace manin {

namespace {

// ---------------------------------------------------------------------------
// Coefficient policies: the elimination kernels run on raw residues in F_p
// (the hot path) and on exact rationals over Q.

struct FpOps {
  uint64_t p;
  using Coef = uint64_t;
  Coef from(const FieldElement& e) const { return e.residue(); }
  FieldElement to(Coef c) const {
    return FieldElement::from_residue(c, Field{p});
  }
  Coef add(Coef a, Coef b) const { return detail::add_mod(a, b, p); }
  Coef mul(Coef a, Coef b) const { return detail::mul_mod(a, b, p); }
  Coef neg(Coef a) const { return a == 0 ? 0 : p - a; }
  Coef inv(Coef a) const { return detail::inv_mod(a, p); }
  bool is_zero(Coef a) const { return a == 0; }
};

struct QOps {
  using Coef = mpq_class;
  Coef from(const FieldElement& e) const { return e.rational(); }
  FieldElement to(const Coef& c) const { return FieldElement::from_rational(c); }
  Coef add(const Coef& a, const Coef& b) const { return a + b; }
  Coef mul(const Coef& a, const Coef& b) const { return a * b; }
  Coef neg(const Coef& a) const { return -a; }
  Coef inv(const Coef& a) const {
    if (a == 0) throw MathError("division by zero in Q");
    return 1 / a;
  }
  bool is_zero(const Coef& a) const { return a == 0; }
};

/// Sparse row-echelon accumulator. Rows are stored sorted by column id with
/// a monic leading (least) column; the pivot of a row is that least id, so
/// every reduction step only introduces larger ids and terminates.
template <class Ops>
struct Echelon {
  using Coef = typename Ops::Coef;
  using RowVec = std::vector<std::pair<uint32_t, Coef>>;
  using Acc = std::map<uint32_t, Coef>;

  Ops ops;
  std::vector<RowVec> basis;
  std::vector<int32_t> pivot_of;

  explicit Echelon(Ops o) : ops(o) {}

  void reset(size_t word_count) {
    basis.clear();
    pivot_of.assign(word_count, -1);
  }

  void acc_add(Acc& acc, uint32_t id, const Coef& v) const {
    if (ops.is_zero(v)) return;
    auto [it, inserted] = acc.try_emplace(id, v);
    if (!inserted) {
      it->second = ops.add(it->second, v);
      if (ops.is_zero(it->second)) acc.erase(it);
    }
  }

  bool insert(Acc acc) {
    while (!acc.empty()) {
      auto it = acc.begin();
      int32_t pv = pivot_of[it->first];
      if (pv < 0) break;
      Coef c = it->second;
      acc.erase(it);
      const RowVec& row = basis[pv];
      for (size_t t = 1; t < row.size(); ++t)
        acc_add(acc, row[t].first, ops.neg(ops.mul(c, row[t].second)));
    }
    if (acc.empty()) return false;
    Coef lead_inv = ops.inv(acc.begin()->second);
    RowVec stored;
    stored.reserve(acc.size());
    for (auto& [id, v] : acc) stored.emplace_back(id, ops.mul(v, lead_inv));
    pivot_of[stored[0].first] = (int32_t)basis.size();
    basis.push_back(std::move(stored));
    return true;
  }

  RowVec reduce(Acc acc) const {
    RowVec out;
    while (!acc.empty()) {
      auto it = acc.begin();
      uint32_t id = it->first;
      Coef c = it->second;
      acc.erase(it);
      int32_t pv = pivot_of[id];
      if (pv < 0) {
        out.emplace_back(id, c);
        continue;
      }
      const RowVec& row = basis[pv];
      for (size_t t = 1; t < row.size(); ++t)
        acc_add(acc, row[t].first, ops.neg(ops.mul(c, row[t].second)));
    }
    return out;
  }

  size_t rank() const { return basis.size(); }
};

struct RowDesc {
  uint32_t rel;
  Word pre, suf;
  bool operator==(const RowDesc& o) const {
    return rel == o.rel && pre == o.pre && suf == o.suf;
  }
};

struct RowDescHash {
  size_t operator()(const RowDesc& d) const {
    size_t h = d.pre.hash();
    h ^= d.suf.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= d.rel + 0x9e3779b9ULL + (h << 6) + (h >> 2);
    return h;
  }
};

bool row_desc_less(const RowDesc& a, const RowDesc& b) {
  if (a.rel != b.rel) return a.rel < b.rel;
  if (a.pre != b.pre) return a.pre.less(b.pre);
  return a.suf.less(b.suf);
}

std::vector<Word> sorted_words(const std::unordered_set<Word, WordHash>& s) {
  std::vector<Word> v(s.begin(), s.end());
  std::sort(v.begin(), v.end(),
            [](const Word& a, const Word& b) { return a.less(b); });
  return v;
}

// ---------------------------------------------------------------------------
// Engine strategies. "closure" is generic: it restricts the spanning-set
// linear algebra to the words reachable from the tested supports, which is
// exact because unreachable spanning vectors have disjoint support. "split"
// applies when the alphabet has exactly two families and every cross pair of
// generators commutes: the algebra is then the tensor product of the two
// one-family algebras, and membership factorizes through per-side normal
// forms on full one-family bases.

struct EngineImpl {
  virtual ~EngineImpl() = default;
  virtual void prepare_one(const NCPoly& comp, int weight) = 0;
  /// Normal form of a weight-homogeneous component; nullopt when it reduces
  /// to zero (member).
  virtual std::optional<NCPoly> reduce(const NCPoly& comp, int weight) = 0;
  virtual std::vector<ComponentStats> stats() const = 0;
};

template <class Ops>
class ClosureEngine : public EngineImpl {
 public:
  ClosureEngine(const RelationSet& rels, size_t guard, Ops ops)
      : rels_(rels), guard_(guard), ops_(ops) {
    for (uint32_t r = 0; r < rels_.relations().size(); ++r)
      for (const auto& [w, _] : rels_.relations()[r].poly.terms()) {
        auto& v = mono_index_[w];
        if (std::find(v.begin(), v.end(), r) == v.end()) v.push_back(r);
      }
  }

  void prepare_one(const NCPoly& comp, int weight) override {
    // closure growth only; the (single) elimination pass runs lazily
    extend(component(weight), comp);
  }

  std::optional<NCPoly> reduce(const NCPoly& comp, int weight) override {
    Component& c = component(weight);
    extend(c, comp);
    materialize(c);
    if (!c.words.empty() && c.ech.rank() == c.words.size())
      throw DegenerateAssignment(
          "weight-" + std::to_string(weight) +
          " ideal component is full-rank on the tested subspace");
    typename Echelon<Ops>::Acc acc;
    for (const auto& [tw, tc] : comp.terms())
      c.ech.acc_add(acc, c.word_id.at(tw), ops_.from(tc));
    auto nf = c.ech.reduce(std::move(acc));
    if (nf.empty()) return std::nullopt;
    NCPoly wit(comp.field());
    for (auto& [id, cv] : nf) wit.add_term(c.words[id], ops_.to(cv));
    return wit;
  }

  std::vector<ComponentStats> stats() const override {
    std::vector<ComponentStats> out;
    for (const auto& c : comps_) {
      ComponentStats s;
      s.weight = c->weight;
      s.closure_words = c->words.size();
      s.rank = c->ech.rank();
      s.total_words = rels_.alphabet().count_words(c->weight);
      out.push_back(s);
    }
    std::sort(out.begin(), out.end(),
              [](const ComponentStats& a, const ComponentStats& b) {
                return a.weight < b.weight;
              });
    return out;
  }

 private:
  struct Component {
    int weight = 0;
    bool built = false;
    std::unordered_set<Word, WordHash> active;
    std::vector<Word> frontier;
    std::unordered_set<RowDesc, RowDescHash> seen;
    std::vector<RowDesc> rows;
    std::vector<Word> words;
    std::unordered_map<Word, uint32_t, WordHash> word_id;
    Echelon<Ops> ech;
    explicit Component(Ops o) : ech(o) {}
  };

  Component& component(int weight) {
    for (auto& c : comps_)
      if (c->weight == weight) return *c;
    comps_.push_back(std::make_unique<Component>(ops_));
    comps_.back()->weight = weight;
    return *comps_.back();
  }

  void extend(Component& c, const NCPoly& target) {
    bool grew = false;
    for (const auto& [w, _] : target.terms()) {
      if (w.weight() != c.weight)
        throw MathError("membership: component weight mismatch");
      if (c.active.insert(w).second) {
        c.frontier.push_back(w);
        grew = true;
      }
    }
    if (!grew) return;
    c.built = false;

    while (!c.frontier.empty()) {
      Word w = c.frontier.back();
      c.frontier.pop_back();
      int L = w.size();
      for (int start = 0; start < L; ++start) {
        for (int len = 1; len <= 2 && start + len <= L; ++len) {
          Word sub = w.slice(start, start + len);
          auto it = mono_index_.find(sub);
          if (it == mono_index_.end()) continue;
          Word pre = w.slice(0, start);
          Word suf = w.slice(start + len, L);
          for (uint32_t r : it->second) {
            RowDesc d{r, pre, suf};
            if (!c.seen.insert(d).second) continue;
            c.rows.push_back(d);
            for (const auto& [tw, _] : rels_.relations()[r].poly.terms()) {
              Word full = pre.concat(tw).concat(suf);
              if (c.active.insert(full).second) c.frontier.push_back(full);
            }
          }
        }
      }
      if (c.active.size() > guard_)
        throw GuardExceeded("weight-" + std::to_string(c.weight) +
                            " closure exceeds guard of " +
                            std::to_string(guard_) + " words");
    }
  }

  void materialize(Component& c) {
    if (c.built) return;
    c.words = sorted_words(c.active);
    c.word_id.clear();
    for (uint32_t i = 0; i < c.words.size(); ++i) c.word_id[c.words[i]] = i;
    std::sort(c.rows.begin(), c.rows.end(), row_desc_less);
    c.ech.reset(c.words.size());
    for (const RowDesc& d : c.rows) {
      typename Echelon<Ops>::Acc acc;
      for (const auto& [tw, tc] : rels_.relations()[d.rel].poly.terms()) {
        Word full = d.pre.concat(tw).concat(d.suf);
        c.ech.acc_add(acc, c.word_id.at(full), ops_.from(tc));
      }
      c.ech.insert(std::move(acc));
    }
    c.built = true;
  }

  const RelationSet& rels_;
  size_t guard_;
  Ops ops_;
  std::unordered_map<Word, std::vector<uint32_t>, WordHash> mono_index_;
  std::vector<std::unique_ptr<Component>> comps_;
};

std::pair<Word, Word> split_word(const Word& w, Family first_side) {
  Word a, b;
  for (int i = 0; i < w.size(); ++i) {
    Letter l = w.at(i);
    if (letter_family(l) == first_side)
      a = a.appended(l);
    else
      b = b.appended(l);
  }
  return {a, b};
}

template <class Ops>
class SplitEngine : public EngineImpl {
 public:
  SplitEngine(const RelationSet& rels, size_t guard, Ops ops, Family fam_a,
              Family fam_b, std::vector<uint32_t> rels_a,
              std::vector<uint32_t> rels_b)
      : rels_(rels),
        guard_(guard),
        ops_(ops),
        fam_a_(fam_a),
        fam_b_(fam_b),
        rel_idx_{std::move(rels_a), std::move(rels_b)} {
    const auto& fs_a = rels.alphabet().family(fam_a);
    const auto& fs_b = rels.alphabet().family(fam_b);
    sub_alphabet_[0] = Alphabet({fs_a});
    sub_alphabet_[1] = Alphabet({fs_b});
    for (int side = 0; side < 2; ++side) {
      structural_[side] = !rel_idx_[side].empty();
      for (uint32_t ri : rel_idx_[side])
        if (rels_.relations()[ri].tag != RelTag::comodule)
          structural_[side] = false;
    }
  }

  void prepare_one(const NCPoly& comp, int weight) override {
    (void)weight;
    for (const auto& [w, _] : comp.terms()) {
      auto [wa, wb] = split_word(w, fam_a_);
      side_component(0, wa.weight());
      side_component(1, wb.weight());
    }
  }

  std::optional<NCPoly> reduce(const NCPoly& comp, int weight) override {
    (void)weight;
    struct PairHash {
      size_t operator()(const std::pair<Word, Word>& p) const {
        return p.first.hash() * 1000003u ^ p.second.hash();
      }
    };
    // Normal form modulo the commuting cross relations: stable partition of
    // each word into its side words.
    std::unordered_map<std::pair<Word, Word>, FieldElement, PairHash> canon;
    for (const auto& [w, c] : comp.terms()) {
      auto key = split_word(w, fam_a_);
      auto [it, inserted] = canon.try_emplace(key, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) canon.erase(it);
      }
    }
    // Group by bidegree, then reduce side a per fixed b-word and side b per
    // surviving a-word. The residual is the component of the target in the
    // complement (non-pivot a-words) x (non-pivot b-words), which vanishes
    // exactly on ideal members.
    std::map<std::pair<int, int>, std::map<Word, Echelon<Ops>, WordLess>>
        dummy;  // (kept for clarity of the grouping below)
    (void)dummy;
    std::map<std::pair<int, int>,
             std::map<Word, typename Echelon<Ops>::Acc, WordLess>>
        groups;
    for (const auto& [key, c] : canon) {
      Side& sa = side_component(0, key.first.weight());
      auto& g = groups[{key.first.weight(), key.second.weight()}];
      auto [it, _] = g.try_emplace(key.second);
      sa.ech.acc_add(it->second, sa.word_id.at(key.first), ops_.from(c));
    }
    NCPoly residual(comp.field());
    for (auto& [bideg, by_b] : groups) {
      Side& sa = side_component(0, bideg.first);
      Side& sb = side_component(1, bideg.second);
      if ((sa.full_rank() && !structural_[0]) ||
          (sb.full_rank() && !structural_[1]))
        throw DegenerateAssignment(
            "split-side ideal component is full-rank at bidegree (" +
            std::to_string(bideg.first) + "," + std::to_string(bideg.second) +
            ")");
      std::map<uint32_t, typename Echelon<Ops>::Acc> by_a;
      for (auto& [wb, acc] : by_b) {
        auto nf = sa.ech.reduce(std::move(acc));
        uint32_t bid = sb.word_id.at(wb);
        for (auto& [aid, cv] : nf) sb.ech.acc_add(by_a[aid], bid, cv);
      }
      for (auto& [aid, acc] : by_a) {
        auto nf = sb.ech.reduce(std::move(acc));
        for (auto& [bid, cv] : nf)
          residual.add_term(sa.words[aid].concat(sb.words[bid]), ops_.to(cv));
      }
    }
    if (residual.is_zero()) return std::nullopt;
    return residual;
  }

  std::vector<ComponentStats> stats() const override {
    std::vector<ComponentStats> out;
    for (int side = 0; side < 2; ++side)
      for (const auto& s : sides_[side]) {
        ComponentStats cs;
        cs.weight = s->weight;
        cs.closure_words = s->words.size();
        cs.rank = s->ech.rank();
        cs.total_words = sub_alphabet_[side].count_words(s->weight);
        cs.structural = structural_[side];
        out.push_back(cs);
      }
    std::sort(out.begin(), out.end(),
              [](const ComponentStats& a, const ComponentStats& b) {
                return a.weight < b.weight;
              });
    return out;
  }

 private:
  struct Side {
    int weight = 0;
    std::vector<Word> words;
    std::unordered_map<Word, uint32_t, WordHash> word_id;
    Echelon<Ops> ech;
    explicit Side(Ops o) : ech(o) {}
    bool full_rank() const {
      return !words.empty() && ech.rank() == words.size();
    }
  };

  Side& side_component(int which, int weight) {
    for (auto& s : sides_[which])
      if (s->weight == weight) return *s;
    auto s = std::make_unique<Side>(ops_);
    s->weight = weight;
    s->words = sub_alphabet_[which].words_of_weight(weight, guard_);
    for (uint32_t i = 0; i < s->words.size(); ++i) s->word_id[s->words[i]] = i;
    s->ech.reset(s->words.size());
    // Full spanning set of the one-family ideal component.
    std::map<int, std::vector<Word>> side_words_by_weight;
    auto words_of = [&](int w) -> const std::vector<Word>& {
      auto it = side_words_by_weight.find(w);
      if (it == side_words_by_weight.end())
        it = side_words_by_weight
                 .emplace(w, sub_alphabet_[which].words_of_weight(w, guard_))
                 .first;
      return it->second;
    };
    for (uint32_t ri : rel_idx_[which]) {
      const Relation& rel = rels_.relations()[ri];
      int rest = weight - rel.weight;
      if (rest < 0) continue;
      for (int wp = 0; wp <= rest; ++wp)
        for (const Word& pre : words_of(wp))
          for (const Word& suf : words_of(rest - wp)) {
            typename Echelon<Ops>::Acc acc;
            for (const auto& [tw, tc] : rel.poly.terms())
              s->ech.acc_add(acc, s->word_id.at(pre.concat(tw).concat(suf)),
                             ops_.from(tc));
            s->ech.insert(std::move(acc));
          }
    }
    sides_[which].push_back(std::move(s));
    return *sides_[which].back();
  }

  const RelationSet& rels_;
  size_t guard_;
  Ops ops_;
  Family fam_a_, fam_b_;
  Alphabet sub_alphabet_[2];
  std::vector<uint32_t> rel_idx_[2];
  bool structural_[2] = {false, false};
  std::vector<std::unique_ptr<Side>> sides_[2];
};

/// Split applicability: exactly two families, every relation one-sided or a
/// two-term cross commutator, and the commutators cover every cross pair.
struct SplitPlan {
  bool ok = false;
  Family fam_a, fam_b;
  std::vector<uint32_t> rels_a, rels_b;
};

SplitPlan detect_split(const RelationSet& rels) {
  SplitPlan plan;
  const auto& fams = rels.alphabet().families();
  if (fams.size() != 2) return plan;
  Family fa = fams[0].fam, fb = fams[1].fam;
  std::unordered_set<uint64_t> commuting;
  for (uint32_t ri = 0; ri < rels.relations().size(); ++ri) {
    const NCPoly& p = rels.relations()[ri].poly;
    bool in_a = true, in_b = true;
    for (const auto& [w, _] : p.terms())
      for (int i = 0; i < w.size(); ++i) {
        Family f = letter_family(w.at(i));
        if (f != fa) in_a = false;
        if (f != fb) in_b = false;
      }
    if (in_a) {
      plan.rels_a.push_back(ri);
      continue;
    }
    if (in_b) {
      plan.rels_b.push_back(ri);
      continue;
    }
    // Must be x y - y x with x, y in different families.
    if (p.terms().size() != 2) return plan;
    std::vector<std::pair<Word, FieldElement>> ts(p.terms().begin(),
                                                  p.terms().end());
    const Word &w1 = ts[0].first, &w2 = ts[1].first;
    if (w1.size() != 2 || w2.size() != 2) return plan;
    Letter x = w1.at(0), y = w1.at(1);
    if (letter_family(x) == letter_family(y)) return plan;
    if (!(w2.at(0) == y && w2.at(1) == x)) return plan;
    if (!((ts[0].second + ts[1].second).is_zero())) return plan;
    Letter la = letter_family(x) == fa ? x : y;
    Letter lb = letter_family(x) == fa ? y : x;
    commuting.insert(((uint64_t)la << 16) | lb);
  }
  size_t na = 0, nb = 0;
  std::vector<Letter> la_list, lb_list;
  for (Letter l : rels.alphabet().letters())
    (letter_family(l) == fa ? la_list : lb_list).push_back(l);
  na = la_list.size();
  nb = lb_list.size();
  if (commuting.size() != na * nb) return plan;
  for (Letter la : la_list)
    for (Letter lb : lb_list)
      if (!commuting.count(((uint64_t)la << 16) | lb)) return plan;
  plan.ok = true;
  plan.fam_a = fa;
  plan.fam_b = fb;
  return plan;
}

std::unique_ptr<EngineImpl> make_impl(const RelationSet& rels, size_t guard) {
  SplitPlan plan = detect_split(rels);
  if (rels.field().is_rational()) {
    QOps ops;
    if (plan.ok)
      return std::make_unique<SplitEngine<QOps>>(rels, guard, ops, plan.fam_a,
                                                 plan.fam_b, plan.rels_a,
                                                 plan.rels_b);
    return std::make_unique<ClosureEngine<QOps>>(rels, guard, ops);
  }
  FpOps ops{rels.field().prime};
  if (plan.ok)
    return std::make_unique<SplitEngine<FpOps>>(rels, guard, ops, plan.fam_a,
                                                plan.fam_b, plan.rels_a,
                                                plan.rels_b);
  return std::make_unique<ClosureEngine<FpOps>>(rels, guard, ops);
}

}  // namespace

// ---------------------------------------------------------------------------

struct MembershipEngine::Impl {
  std::unique_ptr<EngineImpl> engine;
};

MembershipEngine::MembershipEngine(const RelationSet& rels, size_t guard_words)
    : rels_(rels), guard_(guard_words), impl_(std::make_unique<Impl>()) {
  impl_->engine = make_impl(rels_, guard_);
}

namespace {

void validate_poly(const RelationSet& rels, const NCPoly& poly) {
  if (!(poly.field() == rels.field()))
    throw MathError("membership: polynomial field differs from the relations'");
  for (const auto& [w, _] : poly.terms())
    for (int i = 0; i < w.size(); ++i)
      if (!rels.alphabet().valid_letter(w.at(i)))
        throw MathError("membership: polynomial uses the letter " +
                        std::to_string((unsigned)w.at(i)) +
                        " outside the relation alphabet");
}

}  // namespace

void MembershipEngine::prepare(const std::vector<const NCPoly*>& targets) {
  for (const NCPoly* t : targets) {
    validate_poly(rels_, *t);
    for (int w : t->weights())
      impl_->engine->prepare_one(t->weighted_component(w), w);
  }
}

MembershipVerdict MembershipEngine::test(const NCPoly& poly) {
  validate_poly(rels_, poly);
  MembershipVerdict v;
  for (int w : poly.weights()) {
    NCPoly comp = poly.weighted_component(w);
    auto nf = impl_->engine->reduce(comp, w);
    if (nf) {
      v.member = false;
      v.witness_weight = w;
      v.witness = *nf;
      return v;
    }
  }
  return v;
}

std::vector<ComponentStats> MembershipEngine::stats() const {
  return impl_->engine->stats();
}

DegreeComponentInfo degree_component(const RelationSet& rels, int weight,
                                     size_t guard_words) {
  DegreeComponentInfo info;
  info.weight = weight;
  info.total_words = rels.alphabet().count_words(weight);
  std::vector<Word> words = rels.alphabet().words_of_weight(weight, guard_words);
  std::unordered_map<Word, uint32_t, WordHash> word_id;
  for (uint32_t i = 0; i < words.size(); ++i) word_id[words[i]] = i;

  QOps qops;
  FpOps fops{rels.field().is_rational() ? 3ull : rels.field().prime};
  bool rational = rels.field().is_rational();
  Echelon<QOps> eq(qops);
  Echelon<FpOps> ef(fops);
  eq.reset(words.size());
  ef.reset(words.size());

  std::map<int, std::vector<Word>> side;
  auto side_words = [&](int w) -> const std::vector<Word>& {
    auto it = side.find(w);
    if (it == side.end())
      it = side.emplace(w, rels.alphabet().words_of_weight(w, guard_words))
               .first;
    return it->second;
  };
  for (const Relation& rel : rels.relations()) {
    int rest = weight - rel.weight;
    if (rest < 0) continue;
    for (int wp = 0; wp <= rest; ++wp) {
      for (const Word& pre : side_words(wp)) {
        for (const Word& suf : side_words(rest - wp)) {
          if (rational) {
            Echelon<QOps>::Acc acc;
            for (const auto& [tw, tc] : rel.poly.terms())
              eq.acc_add(acc, word_id.at(pre.concat(tw).concat(suf)),
                         qops.from(tc));
            eq.insert(std::move(acc));
          } else {
            Echelon<FpOps>::Acc acc;
            for (const auto& [tw, tc] : rel.poly.terms())
              ef.acc_add(acc, word_id.at(pre.concat(tw).concat(suf)),
                         fops.from(tc));
            ef.insert(std::move(acc));
          }
        }
      }
    }
  }
  if (rational) {
    info.rank = eq.rank();
    for (const auto& row : eq.basis) info.pivot_words.push_back(words[row[0].first]);
  } else {
    info.rank = ef.rank();
    for (const auto& row : ef.basis) info.pivot_words.push_back(words[row[0].first]);
  }
  std::sort(info.pivot_words.begin(), info.pivot_words.end(),
            [](const Word& a, const Word& b) { return a.less(b); });
  return info;
}

}  // namespace manin

namespace manin {
MembershipEngine::~MembershipEngine() = default;
MembershipEngine::MembershipEngine(MembershipEngine&&) noexcept = default;
}  // namespace manin
