// Degree-bounded two-sided ideal membership by linear algebra. For a
// weighted-homogeneous target of weight d, membership in the two-sided ideal
// generated by the relation set is equivalent to membership in
// span{ w . r . w' : weight(w) + weight(r) + weight(w') = d }. The engine
// reduces against a row-echelon basis of the subspace spanned by the vectors
// that touch the target's support closure; vectors outside the closure have
// disjoint support, so restricting is exact. No confluence or term-rewriting
// assumption is made anywhere.
#pragma once

#include <memory>
#include <optional>

#include "manin/relations.hpp"

namespace manin {

struct MembershipVerdict {
  bool member = true;
  int witness_weight = -1;  // weight of the first failing component
  NCPoly witness;           // its reduced normal form
  MembershipVerdict() : witness(Field::rationals()) {}
};

struct ComponentStats {
  int weight = 0;
  size_t closure_words = 0;       // words reachable from the tested supports
  size_t rank = 0;                // echelon rank on the closure
  unsigned long long total_words = 0;  // all words of this weight
  // Full rank is legitimate for structurally truncating relations (the
  // exterior-algebra side of a comodule check); such components are not a
  // degenerate-assignment signal and are excluded from non-vacuity.
  bool structural = false;
};

class MembershipEngine {
 public:
  explicit MembershipEngine(const RelationSet& rels,
                            size_t guard_words = 1000000);

  /// Extends the closures with the supports of these targets; call once with
  /// every polynomial a suite will test so the elimination work is shared.
  void prepare(const std::vector<const NCPoly*>& targets);

  /// Splits into weighted-homogeneous components and reduces each. Throws
  /// DegenerateAssignment if some touched component is full-rank on its
  /// closure (every target there would vacuously be a member).
  MembershipVerdict test(const NCPoly& poly);

  /// Stats for every component touched so far, ascending weight.
  std::vector<ComponentStats> stats() const;

  const RelationSet& relations() const { return rels_; }

  ~MembershipEngine();
  MembershipEngine(MembershipEngine&&) noexcept;

 private:
  struct Impl;
  const RelationSet& rels_;
  size_t guard_;
  std::unique_ptr<Impl> impl_;
};

/// Standalone degree component: row-reduces the full spanning set over all
/// weight-d words (guarded by the word count).
struct DegreeComponentInfo {
  int weight = 0;
  unsigned long long total_words = 0;
  size_t rank = 0;
  std::vector<Word> pivot_words;  // canonical order
};

DegreeComponentInfo degree_component(const RelationSet& rels, int weight,
                                     size_t guard_words = 1000000);

}  // namespace manin
