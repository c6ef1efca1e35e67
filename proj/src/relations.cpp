#include "manin/relations.hpp"

namespace manin {

const char* rel_tag_name(RelTag t) {
  switch (t) {
    case RelTag::manin_column: return "manin-column";
    case RelTag::manin_cross: return "manin-cross";
    case RelTag::commuting: return "commuting";
    case RelTag::capelli_cross: return "capelli-cross";
    case RelTag::comodule: return "comodule";
    case RelTag::custom: return "custom";
  }
  return "?";
}

void RelationSet::add(NCPoly p, RelTag tag) {
  if (p.is_zero()) return;
  if (!(p.field() == field_)) throw MathError("relation field mismatch");
  int w = p.homogeneous_weight();
  for (const auto& [word, _] : p.terms())
    for (int i = 0; i < word.size(); ++i)
      if (!alphabet_.valid_letter(word.at(i)))
        throw MathError("relation uses a letter outside the alphabet");
  rels_.push_back(Relation{std::move(p), tag, w});
}

GenFn family_gen(const Alphabet& a, Family fam, Field f) {
  return [&a, fam, f](int i, int j) {
    return NCPoly::generator(a.letter(fam, i, j), f);
  };
}

GenFn family_gen_transposed(const Alphabet& a, Family fam, Field f) {
  return [&a, fam, f](int i, int j) {
    return NCPoly::generator(a.letter(fam, j, i), f);
  };
}

void add_manin_relations(RelationSet& rs, const GenFn& gen, int n, int m,
                         const ParamView& q, const ParamView& p) {
  if (q.dim() != n || p.dim() != m)
    throw MathError("manin relations: parameter dimensions mismatch");
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      FieldElement qji = q.at(j, i);
      for (int k = 1; k <= m; ++k)
        rs.add(gen(i, k) * gen(j, k) - (gen(j, k) * gen(i, k)) * qji,
               RelTag::manin_column);
      for (int k = 1; k <= m; ++k)
        for (int l = k + 1; l <= m; ++l) {
          FieldElement pkl = p.at(k, l);
          NCPoly r = gen(i, k) * gen(j, l);
          r -= (gen(j, l) * gen(i, k)) * (qji * pkl);
          r += (gen(i, l) * gen(j, k)) * pkl;
          r -= (gen(j, k) * gen(i, l)) * qji;
          rs.add(std::move(r), RelTag::manin_cross);
        }
    }
}

void add_commuting_relations(RelationSet& rs, const Alphabet& a, Family fa,
                             Family fb) {
  Field f = rs.field();
  const auto& sa = a.family(fa);
  const auto& sb = a.family(fb);
  for (int i = 1; i <= sa.rows; ++i)
    for (int j = 1; j <= std::max(sa.cols, 1); ++j)
      for (int k = 1; k <= sb.rows; ++k)
        for (int l = 1; l <= std::max(sb.cols, 1); ++l) {
          NCPoly A = NCPoly::generator(a.letter(fa, i, sa.cols ? j : 0), f);
          NCPoly B = NCPoly::generator(a.letter(fb, k, sb.cols ? l : 0), f);
          rs.add(A * B - B * A, RelTag::commuting);
        }
}

void add_capelli_cross_relations(RelationSet& rs, const Alphabet& a) {
  Field f = rs.field();
  const auto& sm = a.family(Family::M);
  const auto& sn = a.family(Family::N);
  const auto& sh = a.family(Family::H);
  if (sm.cols != sn.rows || sh.rows != sm.rows || sh.cols != sn.cols)
    throw MathError("capelli cross relations: inconsistent dimensions");
  for (int i = 1; i <= sm.rows; ++i)
    for (int j = 1; j <= sm.cols; ++j)
      for (int k = 1; k <= sn.rows; ++k)
        for (int l = 1; l <= sn.cols; ++l) {
          NCPoly M = NCPoly::generator(a.letter(Family::M, i, j), f);
          NCPoly N = NCPoly::generator(a.letter(Family::N, k, l), f);
          NCPoly r = M * N - N * M;
          if (j == k)
            r += NCPoly::generator(a.letter(Family::H, i, l), f);
          rs.add(std::move(r), RelTag::capelli_cross);
        }
}

void add_quantum_plane_relations(RelationSet& rs, const Alphabet& a, Family x,
                                 const ParamView& p) {
  Field f = rs.field();
  int m = a.family(x).rows;
  if (p.dim() != m) throw MathError("quantum plane: dimension mismatch");
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      NCPoly xi = NCPoly::generator(a.letter(x, i, 0), f);
      NCPoly xj = NCPoly::generator(a.letter(x, j, 0), f);
      rs.add(xj * xi - (xi * xj) * p.at(i, j), RelTag::comodule);
    }
}

void add_grassmann_relations(RelationSet& rs, const Alphabet& a, Family psi,
                             const ParamView& q) {
  Field f = rs.field();
  int n = a.family(psi).rows;
  if (q.dim() != n) throw MathError("grassmann relations: dimension mismatch");
  for (int i = 1; i <= n; ++i) {
    NCPoly pi = NCPoly::generator(a.letter(psi, i, 0), f);
    rs.add(pi * pi, RelTag::comodule);
    for (int j = i + 1; j <= n; ++j) {
      NCPoly pj = NCPoly::generator(a.letter(psi, j, 0), f);
      rs.add(pj * pi + (pi * pj) * q.at(j, i), RelTag::comodule);
    }
  }
}

void add_percol_mh_relations(RelationSet& rs, const Alphabet& a,
                             const ParamView& p) {
  Field f = rs.field();
  const auto& sm = a.family(Family::M);
  const auto& sh = a.family(Family::H);
  int n = sm.rows, m = sm.cols, s = sh.cols;
  if (p.dim() != n || sh.rows != n)
    throw MathError("per-col MH relations: dimension mismatch");
  for (int x = 1; x <= n; ++x)
    for (int y = x; y <= n; ++y)
      for (int j = 1; j <= m; ++j)
        for (int l = 1; l <= s; ++l) {
          NCPoly Mxj = NCPoly::generator(a.letter(Family::M, x, j), f);
          NCPoly Myj = NCPoly::generator(a.letter(Family::M, y, j), f);
          NCPoly Hxl = NCPoly::generator(a.letter(Family::H, x, l), f);
          NCPoly Hyl = NCPoly::generator(a.letter(Family::H, y, l), f);
          NCPoly r = Mxj * Hyl - Hxl * Myj;
          r += (Myj * Hxl - Hyl * Mxj) * p.at(x, y);
          rs.add(std::move(r), RelTag::custom);
        }
}

RelationSet manin_relation_set(int n, int m,
                               const ParameterAssignment& assign) {
  if (assign.n() != n || assign.m() != m)
    throw MathError("manin_relation_set: assignment dimensions mismatch");
  Alphabet a({{Family::M, n, m}});
  RelationSet rs(a, assign.field());
  add_manin_relations(rs, family_gen(rs.alphabet(), Family::M, assign.field()),
                      n, m, ParamView::q_of(assign), ParamView::p_of(assign));
  return rs;
}

RelationSet capelli_relation_set(int n, int m, int s,
                                 const ParameterAssignment& assign,
                                 CapelliVariant variant, bool h_central) {
  Field f = assign.field();
  Alphabet al({{Family::M, n, m}, {Family::N, m, s}, {Family::H, n, s}});
  int pdim = (variant == CapelliVariant::det_col ||
              variant == CapelliVariant::per_col)
                 ? n
                 : s;
  if (assign.n() != pdim)
    throw MathError("capelli relations: the assignment's q side must be " +
                    std::to_string(pdim) + "-dimensional for this variant");
  ParamView v = ParamView::q_of(assign);
  RelationSet rs(al, f);
  switch (variant) {
    case CapelliVariant::det_col:
      add_manin_relations(rs, family_gen(al, Family::M, f), n, m, v,
                          ParamView::trivial(m, f));
      break;
    case CapelliVariant::det_row:
      add_manin_relations(rs, family_gen_transposed(al, Family::N, f), s, m,
                          v, ParamView::trivial(m, f));
      break;
    case CapelliVariant::per:
      add_manin_relations(rs, family_gen(al, Family::N, f), m, s,
                          ParamView::trivial(m, f), v);
      break;
    case CapelliVariant::per_col:
      add_manin_relations(rs, family_gen_transposed(al, Family::M, f), m, n,
                          ParamView::trivial(m, f), v);
      add_percol_mh_relations(rs, al, v);
      break;
  }
  add_capelli_cross_relations(rs, al);
  if (h_central) {
    add_commuting_relations(rs, al, Family::H, Family::M);
    add_commuting_relations(rs, al, Family::H, Family::N);
  }
  return rs;
}

RelationSet relations_from_idempotent(const ScalarMatrix& A,
                                      const ScalarMatrix& B,
                                      const Alphabet& alphabet, Family fam) {
  if (!(A * A == A)) throw MathError("relations_from_idempotent: A^2 != A");
  if (!(B * B == B)) throw MathError("relations_from_idempotent: B^2 != B");
  Field f = A.field();
  const auto& fs = alphabet.family(fam);
  int n = fs.rows, m = fs.cols;
  if (A.rows() != n * n || B.rows() != m * m)
    throw MathError("relations_from_idempotent: shape mismatch");
  AlgMatrix gen = AlgMatrix::generators(alphabet, fam, f);
  ScalarMatrix one_minus_B =
      ScalarMatrix::identity(B.row_factors(), f) - B;
  AlgMatrix T = sandwich_chain(A, gen, 2, &one_minus_B);
  RelationSet rs(alphabet, f);
  for (int r = 0; r < T.rows(); ++r)
    for (int c = 0; c < T.cols(); ++c)
      if (!T.at(r, c).is_zero()) rs.add(T.at(r, c), RelTag::custom);
  return rs;
}

}  // namespace manin
