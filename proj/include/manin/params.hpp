// Constrained parameter assignments: concrete values for the parametric
// matrices q = (q_ij), p = (p_ij) and the optional u, z, w, honoring
// q_ii = 1, q_ij q_ji = 1 (same for p) and, in yangian mode,
// p_ij q_ij = u^2 with u^2 != -1.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "manin/field.hpp"

namespace manin {

enum class Mode { generic, one_parameter, classical, yangian };

std::string mode_name(Mode m);
std::optional<Mode> mode_from_name(const std::string& s);

class ParameterAssignment {
 public:
  /// Samples q_ij, p_ij for i < j independently and uniformly from the
  /// nonzero field elements (classical forces 1, one-parameter uses a single
  /// q for everything, yangian forces p_ij = u^2 / q_ij). The remaining
  /// entries are determined by the constraints. Deterministic in
  /// (n, m, mode, seed, field).
  static ParameterAssignment make(int n, int m, Mode mode, uint64_t seed,
                                  Field field);

  /// Square assignment with p == q, as required for (q)-Manin matrices.
  static ParameterAssignment make_square_q(int n, Mode mode, uint64_t seed,
                                           Field field);

  int n() const { return n_; }
  int m() const { return m_; }
  Mode mode() const { return mode_; }
  Field field() const { return field_; }
  uint64_t seed() const { return seed_; }

  /// 1-based lookup; sym is 'q' (n x n) or 'p' (m x m).
  const FieldElement& lookup(char sym, int i, int j) const;

  const FieldElement& u() const;
  bool has_u() const { return u_.has_value(); }

  /// Negative-control copy: re-samples q_21 (or, in yangian mode, p_12)
  /// independently, so q_12 q_21 = 1 (resp. p_12 q_12 = u^2) fails with
  /// overwhelming probability. Rejected in classical mode, where every value
  /// is forced.
  ParameterAssignment broken(uint64_t control_seed) const;

 private:
  ParameterAssignment() = default;
  void force_constraints();

  int n_ = 0, m_ = 0;
  Mode mode_ = Mode::generic;
  Field field_;
  uint64_t seed_ = 0;
  std::vector<FieldElement> q_, p_;  // row-major, 0-based storage
  std::optional<FieldElement> u_;
};

/// Read-only view of one parametric matrix (an assignment's q or p, or the
/// all-ones matrix used by the (q,1)- and (1,p)-Manin variants). All sign
/// factors in the engine are evaluated through views so a single code path
/// fixes the conventions.
class ParamView {
 public:
  static ParamView q_of(const ParameterAssignment& a) {
    return ParamView(&a, 'q', a.n());
  }
  static ParamView p_of(const ParameterAssignment& a) {
    return ParamView(&a, 'p', a.m());
  }
  static ParamView trivial(int dim, Field f) {
    ParamView v(nullptr, '1', dim);
    v.field_ = f;
    return v;
  }
  /// Transpose view: at(i,j) of the transpose is at(j,i) of the base.
  ParamView transposed() const {
    ParamView v = *this;
    v.transpose_ = !v.transpose_;
    return v;
  }

  int dim() const { return dim_; }
  Field field() const { return assign_ ? assign_->field() : field_; }
  FieldElement at(int i, int j) const {
    if (i < 1 || j < 1 || i > dim_ || j > dim_)
      throw MathError("parameter index out of range");
    if (!assign_) return FieldElement::one(field_);
    return transpose_ ? assign_->lookup(sym_, j, i)
                      : assign_->lookup(sym_, i, j);
  }

 private:
  ParamView(const ParameterAssignment* a, char sym, int dim)
      : assign_(a), sym_(sym), dim_(dim) {}

  const ParameterAssignment* assign_;
  char sym_;
  int dim_;
  bool transpose_ = false;
  Field field_;
};

}  // namespace manin
