#include "manin/field.hpp"

namespace manin {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return (uint64_t)((unsigned __int128)a * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin for 64-bit inputs with the base set above.
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Field Field::fp(uint64_t p) {
  if (p <= (uint64_t(1) << 31))
    throw MathError("prime field modulus must exceed 2^31, got " +
                    std::to_string(p));
  if (!is_prime_u64(p))
    throw MathError("modulus " + std::to_string(p) + " is not prime");
  return Field{p};
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "F_" + std::to_string(prime);
}

namespace detail {

uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t p) {
  return powmod_u64(a, e, p);
}

uint64_t inv_mod(uint64_t a, uint64_t p) {
  if (a == 0) throw MathError("division by zero in F_p");
  return powmod_u64(a, p - 2, p);
}

}  // namespace detail

FieldElement FieldElement::zero(Field f) {
  if (f.is_rational()) return FieldElement(mpq_class(0));
  return FieldElement(FpValue{0, f.prime});
}

FieldElement FieldElement::one(Field f) {
  if (f.is_rational()) return FieldElement(mpq_class(1));
  return FieldElement(FpValue{1, f.prime});
}

FieldElement FieldElement::from_int(long long v, Field f) {
  if (f.is_rational()) return FieldElement(mpq_class((long)v));
  uint64_t p = f.prime;
  uint64_t r = v >= 0 ? (uint64_t)v % p : p - ((uint64_t)(-(v + 1)) + 1) % p;
  if (r == p) r = 0;
  return FieldElement(FpValue{r, p});
}

FieldElement FieldElement::from_ratio(long long num, long long den, Field f) {
  if (den == 0) throw MathError("zero denominator");
  return from_int(num, f) / from_int(den, f);
}

FieldElement FieldElement::from_residue(uint64_t v, Field f) {
  if (f.is_rational()) throw MathError("from_residue needs an F_p field");
  if (v >= f.prime) throw MathError("from_residue: value not reduced");
  return FieldElement(FpValue{v, f.prime});
}

FieldElement FieldElement::from_rational(mpq_class q) {
  return FieldElement(std::move(q));
}

Field FieldElement::field() const {
  if (const FpValue* v = fp()) return Field{v->p};
  return Field::rationals();
}

bool FieldElement::is_zero() const {
  if (const FpValue* v = fp()) return v->v == 0;
  return std::get<mpq_class>(rep_) == 0;
}

bool FieldElement::is_one() const {
  if (const FpValue* v = fp()) return v->v == 1;
  return std::get<mpq_class>(rep_) == 1;
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!(field() == o.field()))
    throw MathError("mixed-field arithmetic: " + field().to_string() + " vs " +
                    o.field().to_string());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  if (const FpValue* a = fp())
    return FieldElement(FpValue{detail::add_mod(a->v, o.fp()->v, a->p), a->p});
  return FieldElement(
      mpq_class(std::get<mpq_class>(rep_) + std::get<mpq_class>(o.rep_)));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  if (const FpValue* a = fp())
    return FieldElement(FpValue{detail::sub_mod(a->v, o.fp()->v, a->p), a->p});
  return FieldElement(
      mpq_class(std::get<mpq_class>(rep_) - std::get<mpq_class>(o.rep_)));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  if (const FpValue* a = fp())
    return FieldElement(FpValue{detail::mul_mod(a->v, o.fp()->v, a->p), a->p});
  return FieldElement(
      mpq_class(std::get<mpq_class>(rep_) * std::get<mpq_class>(o.rep_)));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  return *this * o.inv();
}

FieldElement FieldElement::operator-() const {
  if (const FpValue* a = fp())
    return FieldElement(FpValue{a->v == 0 ? 0 : a->p - a->v, a->p});
  return FieldElement(mpq_class(-std::get<mpq_class>(rep_)));
}

FieldElement FieldElement::inv() const {
  if (const FpValue* a = fp())
    return FieldElement(FpValue{detail::inv_mod(a->v, a->p), a->p});
  const mpq_class& q = std::get<mpq_class>(rep_);
  if (q == 0) throw MathError("division by zero in Q");
  return FieldElement(mpq_class(1 / q));
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (!(field() == o.field())) return false;
  if (const FpValue* a = fp()) return a->v == o.fp()->v;
  return std::get<mpq_class>(rep_) == std::get<mpq_class>(o.rep_);
}

std::string FieldElement::to_string() const {
  if (const FpValue* a = fp()) return std::to_string(a->v);
  return std::get<mpq_class>(rep_).get_str();
}

uint64_t FieldElement::residue() const {
  if (const FpValue* a = fp()) return a->v;
  throw MathError("residue() on a rational element");
}

const mpq_class& FieldElement::rational() const {
  if (fp()) throw MathError("rational() on an F_p element");
  return std::get<mpq_class>(rep_);
}

uint64_t Rng::next() {
  // splitmix64
  uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t Rng::below(uint64_t bound) {
  if (bound == 0) throw MathError("Rng::below(0)");
  uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % bound;
}

FieldElement Rng::nonzero(Field f) {
  if (f.is_rational()) {
    long long num = (long long)below(9) + 1;
    long long den = (long long)below(9) + 1;
    if (below(2)) num = -num;
    return FieldElement::from_ratio(num, den, f);
  }
  return FieldElement::from_int((long long)(below(f.prime - 1) + 1), f);
}

}  // namespace manin
