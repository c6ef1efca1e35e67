#include "manin/params.hpp"

namespace manin {

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::generic: return "generic";
    case Mode::one_parameter: return "one-parameter";
    case Mode::classical: return "classical";
    case Mode::yangian: return "yangian";
  }
  return "?";
}

std::optional<Mode> mode_from_name(const std::string& s) {
  if (s == "generic") return Mode::generic;
  if (s == "one-parameter") return Mode::one_parameter;
  if (s == "classical") return Mode::classical;
  if (s == "yangian") return Mode::yangian;
  return std::nullopt;
}

ParameterAssignment ParameterAssignment::make(int n, int m, Mode mode,
                                              uint64_t seed, Field field) {
  if (n < 1 || m < 1) throw MathError("dimensions must be positive");
  ParameterAssignment a;
  a.n_ = n;
  a.m_ = m;
  a.mode_ = mode;
  a.field_ = field;
  a.seed_ = seed;
  const FieldElement one = FieldElement::one(field);
  a.q_.assign((size_t)n * n, one);
  a.p_.assign((size_t)m * m, one);

  Rng rng(seed);
  switch (mode) {
    case Mode::classical:
      break;  // everything stays 1
    case Mode::one_parameter: {
      FieldElement q = rng.nonzero(field);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) a.q_[(i - 1) * n + (j - 1)] = q;
      for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) a.p_[(i - 1) * m + (j - 1)] = q;
      break;
    }
    case Mode::generic: {
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          a.q_[(i - 1) * n + (j - 1)] = rng.nonzero(field);
      for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
          a.p_[(i - 1) * m + (j - 1)] = rng.nonzero(field);
      break;
    }
    case Mode::yangian: {
      if (n != m) throw MathError("yangian mode requires n == m");
      // u nonzero with u^2 != -1; u = 0 would make p_ij q_ij = u^2
      // unsatisfiable with invertible parameters.
      FieldElement minus_one = -FieldElement::one(field);
      FieldElement u = rng.nonzero(field);
      while (u * u == minus_one) u = rng.nonzero(field);
      a.u_ = u;
      FieldElement u2 = u * u;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          FieldElement q = rng.nonzero(field);
          a.q_[(i - 1) * n + (j - 1)] = q;
          a.p_[(i - 1) * m + (j - 1)] = u2 / q;
        }
      break;
    }
  }
  a.force_constraints();
  return a;
}

ParameterAssignment ParameterAssignment::make_square_q(int n, Mode mode,
                                                       uint64_t seed,
                                                       Field field) {
  ParameterAssignment a = make(n, n, mode, seed, field);
  a.p_ = a.q_;
  return a;
}

void ParameterAssignment::force_constraints() {
  for (int i = 1; i <= n_; ++i) {
    q_[(i - 1) * n_ + (i - 1)] = FieldElement::one(field_);
    for (int j = i + 1; j <= n_; ++j)
      q_[(j - 1) * n_ + (i - 1)] = q_[(i - 1) * n_ + (j - 1)].inv();
  }
  for (int i = 1; i <= m_; ++i) {
    p_[(i - 1) * m_ + (i - 1)] = FieldElement::one(field_);
    for (int j = i + 1; j <= m_; ++j)
      p_[(j - 1) * m_ + (i - 1)] = p_[(i - 1) * m_ + (j - 1)].inv();
  }
}

const FieldElement& ParameterAssignment::lookup(char sym, int i, int j) const {
  if (sym == 'q') {
    if (i < 1 || j < 1 || i > n_ || j > n_)
      throw MathError("q index out of range");
    return q_[(i - 1) * n_ + (j - 1)];
  }
  if (sym == 'p') {
    if (i < 1 || j < 1 || i > m_ || j > m_)
      throw MathError("p index out of range");
    return p_[(i - 1) * m_ + (j - 1)];
  }
  throw MathError("unknown parameter symbol");
}

const FieldElement& ParameterAssignment::u() const {
  if (!u_) throw MathError("assignment has no u (not in yangian mode)");
  return *u_;
}

ParameterAssignment ParameterAssignment::broken(uint64_t control_seed) const {
  if (mode_ == Mode::classical)
    throw MathError("break-constraint is inapplicable in classical mode: "
                    "all parameter values are forced");
  ParameterAssignment a = *this;
  Rng rng(control_seed ^ 0xb01dface0ddba11ULL);
  if (mode_ == Mode::yangian) {
    // Violate p_12 q_12 = u^2 while keeping p_12 p_21 = 1.
    if (m_ < 2) throw MathError("break-constraint needs dimension >= 2");
    FieldElement p12 = rng.nonzero(field_);
    while (p12 * a.q_[1] == a.u() * a.u()) p12 = rng.nonzero(field_);
    a.p_[0 * m_ + 1] = p12;
    a.p_[1 * m_ + 0] = p12.inv();
    return a;
  }
  if (n_ < 2) throw MathError("break-constraint needs dimension >= 2");
  // Violate q_12 q_21 = 1.
  FieldElement q21 = rng.nonzero(field_);
  while (q21 * a.q_[1] == FieldElement::one(field_)) q21 = rng.nonzero(field_);
  a.q_[1 * n_ + 0] = q21;
  return a;
}

}  // namespace manin
