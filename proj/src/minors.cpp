#include "manin/minors.hpp"

namespace manin {

namespace {

NCPoly perm_sum(const ParamView& v, const MultiIndex& idx, const EntryFn& entry,
                bool row_oriented, bool det_signs, Field f) {
  int r = (int)idx.size();
  NCPoly acc(f);
  for (const Perm& s : all_perms(r)) {
    FieldElement c = det_signs ? eps_perm(v, idx, s) : mu_perm(v, idx, s);
    if (c.is_zero()) continue;
    NCPoly term = NCPoly::constant(c);
    for (int t = 1; t <= r; ++t)
      term = term * (row_oriented ? entry(t, s[t - 1]) : entry(s[t - 1], t));
    acc += term;
  }
  return acc;
}

}  // namespace

NCPoly cdet(const ParamView& q, const MultiIndex& I, const EntryFn& entry) {
  if (!is_increasing(I)) throw MathError("cdet: I must be increasing");
  return perm_sum(q, I, entry, false, true, q.field());
}

NCPoly rdet(const ParamView& q, const MultiIndex& J, const EntryFn& entry) {
  if (!is_increasing(J)) throw MathError("rdet: J must be increasing");
  return perm_sum(q, J, entry, true, true, q.field());
}

NCPoly rper(const ParamView& p, const MultiIndex& J, const EntryFn& entry,
            bool normalized) {
  NCPoly s = perm_sum(p, J, entry, true, false, p.field());
  if (!normalized) return s;
  if (!is_non_decreasing(J))
    throw MathError("normalized rper: J must be non-decreasing");
  return s * FieldElement::from_int(multiplicity_factorial(J), p.field()).inv();
}

NCPoly cper(const ParamView& p, const MultiIndex& I, const EntryFn& entry,
            bool normalized) {
  NCPoly s = perm_sum(p, I, entry, false, false, p.field());
  if (!normalized) return s;
  if (!is_non_decreasing(I))
    throw MathError("normalized cper: I must be non-decreasing");
  return s * FieldElement::from_int(multiplicity_factorial(I), p.field()).inv();
}

EntryFn submatrix_entry(const AlgMatrix& base, const MultiIndex& I,
                        const MultiIndex& J) {
  if (I.size() != J.size()) throw MathError("submatrix: |I| != |J|");
  for (int i : I)
    if (i < 1 || i > base.rows()) throw MathError("submatrix: row out of range");
  for (int j : J)
    if (j < 1 || j > base.cols()) throw MathError("submatrix: col out of range");
  return [&base, I, J](int a, int b) { return base.at(I[a - 1] - 1, J[b - 1] - 1); };
}

NCPoly minor(const MinorSpec& spec, const AlgMatrix& base, const ParamView& v) {
  EntryFn entry = submatrix_entry(base, spec.I, spec.J);
  bool norm = spec.kind == MinorKind::per_normalized;
  if (spec.kind == MinorKind::det) {
    if (spec.orientation == MinorOrientation::column)
      return cdet(v, spec.I, entry);
    return rdet(v, spec.J, entry);
  }
  if (spec.orientation == MinorOrientation::column)
    return cper(v, spec.I, entry, norm);
  return rper(v, spec.J, entry, norm);
}

NCPoly sym_function(char kind, int k, const AlgMatrix& base,
                    const ParameterAssignment& assign, bool p_flavor) {
  if (base.rows() != base.cols())
    throw MathError("sym_function: base must be square");
  if (k < 0) throw MathError("sym_function: negative k");
  if (k == 0) return NCPoly::one(base.field());
  ProjKind pk;
  if (kind == 'e')
    pk = p_flavor ? ProjKind::antisym_p : ProjKind::antisym_q;
  else if (kind == 'h')
    pk = p_flavor ? ProjKind::sym_p : ProjKind::sym_q;
  else
    throw MathError("sym_function: kind must be 'e' or 'h'");
  ScalarMatrix proj = projector(assign, pk, k);
  return traced_chain(proj, base, k);
}

std::vector<NCPoly> char_poly_coeffs(const AlgMatrix& base,
                                     const ParameterAssignment& assign,
                                     bool p_flavor) {
  int n = base.rows();
  std::vector<NCPoly> out;
  FieldElement sign = FieldElement::one(base.field());
  for (int k = 0; k <= n; ++k) {
    out.push_back(sym_function('e', k, base, assign, p_flavor) * sign);
    sign = -sign;
  }
  return out;
}

}  // namespace manin
