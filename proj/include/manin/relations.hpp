// Presentations of two-sided ideals by weighted-homogeneous relations:
// Manin column/cross relations, Capelli cross relations, commuting families,
// quantum-plane / exterior relations for the comodule checks, and the
// idempotent-pair form A M1 M2 (1 - B) = 0.
#pragma once

#include "manin/minors.hpp"

namespace manin {

enum class RelTag {
  manin_column,
  manin_cross,
  commuting,
  capelli_cross,
  comodule,
  custom
};

const char* rel_tag_name(RelTag t);

struct Relation {
  NCPoly poly;
  RelTag tag;
  int weight;
};

class RelationSet {
 public:
  RelationSet(Alphabet alphabet, Field f)
      : alphabet_(std::move(alphabet)), field_(f) {}

  const Alphabet& alphabet() const { return alphabet_; }
  Field field() const { return field_; }
  const std::vector<Relation>& relations() const { return rels_; }
  size_t size() const { return rels_.size(); }

  /// Adds a weighted-homogeneous relation (zero polynomials are dropped).
  void add(NCPoly p, RelTag tag);

 private:
  Alphabet alphabet_;
  Field field_;
  std::vector<Relation> rels_;
};

/// Generator accessor: gen(i, j) for 1 <= i <= n, 1 <= j <= m. Lets the
/// builders below write relations for a family or for its transpose.
using GenFn = std::function<NCPoly(int, int)>;

GenFn family_gen(const Alphabet& a, Family fam, Field f);
GenFn family_gen_transposed(const Alphabet& a, Family fam, Field f);

/// (q,p)-Manin relations for an n x m matrix of generators:
///   M_ik M_jk - q_ji M_jk M_ik                                  (i<j, all k)
///   M_ik M_jl - q_ji p_kl M_jl M_ik + p_kl M_il M_jk - q_ji M_jk M_il
///                                                               (i<j, k<l)
void add_manin_relations(RelationSet& rs, const GenFn& gen, int n, int m,
                         const ParamView& q, const ParamView& p);

/// [A_ij, B_kl] = 0 for two distinct families.
void add_commuting_relations(RelationSet& rs, const Alphabet& a, Family fa,
                             Family fb);

/// M_ij N_kl - N_kl M_ij + delta_jk h_il = 0 with M n x m, N m x s, H n x s.
void add_capelli_cross_relations(RelationSet& rs, const Alphabet& a);

/// x_j x_i = p_ij x_i x_j (the quadratic algebra of B X (x) X = 0, B = A_p).
void add_quantum_plane_relations(RelationSet& rs, const Alphabet& a, Family x,
                                 const ParamView& p);

/// psi_i^2 = 0 and psi_j psi_i = -q_ji psi_i psi_j for i < j.
void add_grassmann_relations(RelationSet& rs, const Alphabet& a, Family psi,
                             const ParamView& q);

/// The extra hypothesis of the column-permanent Capelli identity,
/// (1 + P_{p'})(M_1 H_2 - H_1 M_2 P) = 0, in entries:
///   M_xj h_yl - h_xl M_yj + p_xy (M_yj h_xl - h_yl M_xj) = 0
/// for x <= y in [n], j in [m], l in [s]; p is the n x n parameter matrix.
void add_percol_mh_relations(RelationSet& rs, const Alphabet& a,
                             const ParamView& p);

/// Convenience builder: the (q,p)-Manin relation set of the family M with the
/// assignment's parameters (n, m must match the assignment).
RelationSet manin_relation_set(int n, int m, const ParameterAssignment& assign);

/// The four Capelli-type presentations on the alphabet {M (n x m), N (m x s),
/// H (n x s)}: the variant's one-sided Manin relations exactly as hypothesized
/// (det_col: M is (q,1)-Manin; det_row: N^t is (q,1)-Manin; per: N is
/// (1,p)-Manin; per_col: M^t is (1,p)-Manin plus the extra M-H relations),
/// together with the cross relations M_ij N_kl - N_kl M_ij + delta_jk h_il
/// — and nothing more. The assignment's q side supplies the parametric
/// matrix; its dimension must be n (det_col, per_col) or s (det_row, per).
/// h_central adds [h, M] = [h, N] = 0, an assumption beyond the stated
/// hypotheses used only to annotate failures.
enum class CapelliVariant { det_col, det_row, per, per_col };

RelationSet capelli_relation_set(int n, int m, int s,
                                 const ParameterAssignment& assign,
                                 CapelliVariant variant,
                                 bool h_central = false);

/// One relation per nonzero entry of A M1 M2 (1 - B); A, B must be
/// idempotent (checked). With A = A_q, B = A_p the row space equals the
/// Manin relations'.
RelationSet relations_from_idempotent(const ScalarMatrix& A,
                                      const ScalarMatrix& B,
                                      const Alphabet& alphabet, Family fam);

}  // namespace manin
