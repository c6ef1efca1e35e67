// Exact coefficient fields: F_p for a configured prime p (p > 2^31, default
// the Mersenne prime 2^61-1) and arbitrary-precision rationals via GMP.
// All verification arithmetic in the engine happens through FieldElement;
// there is no floating point anywhere.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace manin {

/// Thrown on contract violations (bad indices, mismatched fields, ...).
struct MathError : std::runtime_error {
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a configurable size guard is exceeded.
struct GuardExceeded : std::runtime_error {
  explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a sampled parameter assignment makes an ideal component
/// full-rank (every polynomial would be a member); callers resample.
struct DegenerateAssignment : std::runtime_error {
  explicit DegenerateAssignment(const std::string& what)
      : std::runtime_error(what) {}
};

bool is_prime_u64(uint64_t n);

/// Field descriptor: prime == 0 selects the rationals.
struct Field {
  uint64_t prime = 0;

  static constexpr uint64_t kMersenne61 = (uint64_t(1) << 61) - 1;

  static Field rationals() { return Field{0}; }
  static Field fp(uint64_t p);
  static Field default_fp() { return Field{kMersenne61}; }

  bool is_rational() const { return prime == 0; }
  bool operator==(const Field&) const = default;
  std::string to_string() const;
};

namespace detail {

inline uint64_t add_mod(uint64_t a, uint64_t b, uint64_t p) {
  uint64_t s = a + b;  // p < 2^63, no overflow
  return s >= p ? s - p : s;
}

inline uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

inline uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t p) {
  unsigned __int128 t = (unsigned __int128)a * b;
  if (p == Field::kMersenne61) {
    uint64_t lo = (uint64_t)t & Field::kMersenne61;
    uint64_t hi = (uint64_t)(t >> 61);
    uint64_t r = lo + hi;
    if (r >= Field::kMersenne61) r -= Field::kMersenne61;
    return r;
  }
  return (uint64_t)(t % p);
}

uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t p);
uint64_t inv_mod(uint64_t a, uint64_t p);

}  // namespace detail

/// An element of F_p or of Q. Immutable value type; elements of distinct
/// fields never mix (MathError). Division by zero is a reported error.
class FieldElement {
 public:
  static FieldElement zero(Field f);
  static FieldElement one(Field f);
  static FieldElement from_int(long long v, Field f);
  /// num/den with den inverted in the field; den must be nonzero.
  static FieldElement from_ratio(long long num, long long den, Field f);
  /// Canonical residue in [0, p); requires an F_p field.
  static FieldElement from_residue(uint64_t v, Field f);
  static FieldElement from_rational(mpq_class q);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  /// Exact rendering: decimal residue in F_p, "a/b" (or "a") over Q.
  std::string to_string() const;

  /// F_p residue in [0, p); error over Q.
  uint64_t residue() const;
  /// Rational value; error over F_p.
  const mpq_class& rational() const;

 private:
  struct FpValue {
    uint64_t v;
    uint64_t p;
  };
  explicit FieldElement(FpValue fp) : rep_(fp) {}
  explicit FieldElement(mpq_class q) : rep_(std::move(q)) {}

  const FpValue* fp() const { return std::get_if<FpValue>(&rep_); }
  void check_same(const FieldElement& o) const;

  std::variant<FpValue, mpq_class> rep_;
};

/// Deterministic 64-bit generator (splitmix64); used everywhere randomness
/// is needed so that identical seeds reproduce identical runs bit-for-bit.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}
  uint64_t next();
  /// Uniform in [0, bound).
  uint64_t below(uint64_t bound);
  /// Uniform nonzero element of the field. Over Q, draws a small fraction
  /// sign * a/b with a, b in [1, 9] (the exact-Q mode is for tiny certified
  /// cases, not statistical coverage).
  FieldElement nonzero(Field f);

 private:
  uint64_t state_;
};

}  // namespace manin
