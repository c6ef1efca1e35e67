// Sparse elements of the free associative algebra: finitely many words with
// nonzero field coefficients. Values are immutable in spirit; every
// operation returns a normalized polynomial (no stored zero coefficient).
#pragma once

#include <functional>
#include <unordered_map>

#include "manin/word.hpp"

namespace manin {

class NCPoly {
 public:
  explicit NCPoly(Field f) : field_(f) {}

  static NCPoly zero(Field f) { return NCPoly(f); }
  static NCPoly one(Field f) { return constant(FieldElement::one(f)); }
  static NCPoly constant(const FieldElement& c);
  static NCPoly generator(Letter l, Field f);
  static NCPoly monomial(const Word& w, const FieldElement& c);

  Field field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::unordered_map<Word, FieldElement, WordHash>& terms() const {
    return terms_;
  }

  /// Coefficient of w (zero element if absent).
  FieldElement coeff(const Word& w) const;

  void add_term(const Word& w, const FieldElement& c);

  NCPoly operator+(const NCPoly& o) const;
  NCPoly operator-(const NCPoly& o) const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly operator*(const FieldElement& c) const;
  /// Free-algebra product: distributive concatenation.
  NCPoly operator*(const NCPoly& o) const;

  bool operator==(const NCPoly& o) const;
  bool operator!=(const NCPoly& o) const { return !(*this == o); }

  /// Sum of the terms of weight exactly d.
  NCPoly weighted_component(int d) const;
  /// Weights present, ascending.
  std::vector<int> weights() const;
  /// Weight if homogeneous (zero polynomial reports -1), else MathError.
  int homogeneous_weight() const;

  /// Evaluates under the algebra map sending each letter to a scalar
  /// (substitution homomorphism into the commutative field).
  FieldElement eval(
      const std::function<FieldElement(Letter)>& image) const;

  /// Canonically ordered exact rendering, e.g. "1*M[1,1]M[2,2] - q*M[2,1]M[1,2]".
  std::string to_string(const Alphabet& a) const;

 private:
  Field field_;
  std::unordered_map<Word, FieldElement, WordHash> terms_;
};

inline NCPoly nc_mul(const NCPoly& a, const NCPoly& b) { return a * b; }

}  // namespace manin
