#include "manin/multiindex.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace manin {

bool is_increasing(const MultiIndex& I) {
  for (size_t k = 1; k < I.size(); ++k)
    if (I[k - 1] >= I[k]) return false;
  return true;
}

bool is_non_decreasing(const MultiIndex& I) {
  for (size_t k = 1; k < I.size(); ++k)
    if (I[k - 1] > I[k]) return false;
  return true;
}

bool has_repeat(const MultiIndex& I) {
  MultiIndex s = I;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) != s.end();
}

MultiIndex reversed(const MultiIndex& I) {
  return MultiIndex(I.rbegin(), I.rend());
}

MultiIndex sorted_index(const MultiIndex& I) {
  MultiIndex s = I;
  std::sort(s.begin(), s.end());
  return s;
}

MultiIndex juxtapose(const MultiIndex& I, const MultiIndex& J) {
  MultiIndex r = I;
  r.insert(r.end(), J.begin(), J.end());
  return r;
}

MultiIndex complement(const MultiIndex& I, const MultiIndex& K) {
  if (!is_increasing(K)) throw MathError("complement: K must be increasing");
  if (has_repeat(I)) throw MathError("complement: I must have distinct entries");
  MultiIndex out;
  for (int k : K) {
    bool drop = std::find(I.begin(), I.end(), k) != I.end();
    if (!drop) out.push_back(k);
  }
  if (out.size() + I.size() != K.size())
    throw MathError("complement: I is not contained in K");
  return out;
}

MultiIndex iota_index(int n) {
  MultiIndex I(n);
  std::iota(I.begin(), I.end(), 1);
  return I;
}

bool is_permutation(const Perm& s) {
  std::vector<char> seen(s.size() + 1, 0);
  for (int v : s) {
    if (v < 1 || v > (int)s.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

int inversions(const Perm& s) {
  int c = 0;
  for (size_t a = 0; a < s.size(); ++a)
    for (size_t b = a + 1; b < s.size(); ++b)
      if (s[a] > s[b]) ++c;
  return c;
}

std::vector<Perm> all_perms(int r) {
  Perm s(r);
  std::iota(s.begin(), s.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(s);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

FieldElement eps_index(const ParamView& q, const MultiIndex& I) {
  for (int v : I)
    if (v < 1 || v > q.dim()) throw MathError("eps_index: entry out of range");
  if (has_repeat(I)) return FieldElement::zero(q.field());
  FieldElement r = FieldElement::one(q.field());
  for (size_t s = 0; s < I.size(); ++s)
    for (size_t t = s + 1; t < I.size(); ++t)
      if (I[s] > I[t]) r = r * (-q.at(I[s], I[t]));
  return r;
}

FieldElement eps_perm(const ParamView& q, const MultiIndex& I, const Perm& s) {
  if (!is_increasing(I))
    throw MathError("eps_perm: I must be strictly increasing");
  if (s.size() != I.size() || !is_permutation(s))
    throw MathError("eps_perm: sigma is not a permutation of |I| letters");
  for (int v : I)
    if (v < 1 || v > q.dim()) throw MathError("eps_perm: entry out of range");
  FieldElement r = FieldElement::one(q.field());
  for (size_t a = 0; a < s.size(); ++a)
    for (size_t b = a + 1; b < s.size(); ++b)
      if (s[a] > s[b]) r = r * (-q.at(I[s[a] - 1], I[s[b] - 1]));
  return r;
}

FieldElement mu_perm(const ParamView& p, const MultiIndex& J, const Perm& s) {
  if (s.size() != J.size() || !is_permutation(s))
    throw MathError("mu_perm: sigma is not a permutation of |J| letters");
  for (int v : J)
    if (v < 1 || v > p.dim()) throw MathError("mu_perm: entry out of range");
  FieldElement r = FieldElement::one(p.field());
  for (size_t a = 0; a < s.size(); ++a)
    for (size_t b = a + 1; b < s.size(); ++b)
      if (s[a] > s[b]) r = r * p.at(J[s[b] - 1], J[s[a] - 1]);
  return r;
}

long long multiplicity_factorial(const MultiIndex& J) {
  std::map<int, long long> mult;
  for (int j : J) ++mult[j];
  long long v = 1;
  for (auto& [_, c] : mult)
    for (long long k = 2; k <= c; ++k) v *= k;
  return v;
}

std::vector<MultiIndex> increasing_indices(int n, int r) {
  std::vector<MultiIndex> out;
  if (r == 0) {
    out.push_back({});
    return out;
  }
  if (r > n) return out;
  MultiIndex I(r);
  std::iota(I.begin(), I.end(), 1);
  while (true) {
    out.push_back(I);
    int k = r - 1;
    while (k >= 0 && I[k] == n - (r - 1 - k)) --k;
    if (k < 0) break;
    ++I[k];
    for (int t = k + 1; t < r; ++t) I[t] = I[t - 1] + 1;
  }
  return out;
}

std::vector<MultiIndex> non_decreasing_indices(int n, int r) {
  std::vector<MultiIndex> out;
  if (r == 0) {
    out.push_back({});
    return out;
  }
  MultiIndex I(r, 1);
  while (true) {
    out.push_back(I);
    int k = r - 1;
    while (k >= 0 && I[k] == n) --k;
    if (k < 0) break;
    ++I[k];
    for (int t = k + 1; t < r; ++t) I[t] = I[k];
  }
  return out;
}

std::vector<MultiIndex> all_tuples(int n, int r) {
  std::vector<MultiIndex> out;
  MultiIndex I(r, 1);
  if (r == 0) {
    out.push_back({});
    return out;
  }
  while (true) {
    out.push_back(I);
    int k = r - 1;
    while (k >= 0 && I[k] == n) {
      I[k] = 1;
      --k;
    }
    if (k < 0) break;
    ++I[k];
  }
  return out;
}

std::string index_to_string(const MultiIndex& I) {
  std::string s = "(";
  for (size_t k = 0; k < I.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(I[k]);
  }
  return s + ")";
}

}  // namespace manin
