#include "manin/ncpoly.hpp"

#include <algorithm>
#include <set>

namespace manin {

NCPoly NCPoly::constant(const FieldElement& c) {
  NCPoly p(c.field());
  p.add_term(Word(), c);
  return p;
}

NCPoly NCPoly::generator(Letter l, Field f) {
  NCPoly p(f);
  p.add_term(Word::single(l), FieldElement::one(f));
  return p;
}

NCPoly NCPoly::monomial(const Word& w, const FieldElement& c) {
  NCPoly p(c.field());
  p.add_term(w, c);
  return p;
}

FieldElement NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? FieldElement::zero(field_) : it->second;
}

void NCPoly::add_term(const Word& w, const FieldElement& c) {
  if (!(c.field() == field_)) throw MathError("NCPoly: coefficient field mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  NCPoly r = *this;
  r += o;
  return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
  NCPoly r = *this;
  r -= o;
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  if (!(o.field_ == field_)) throw MathError("NCPoly: field mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  if (!(o.field_ == field_)) throw MathError("NCPoly: field mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly NCPoly::operator*(const FieldElement& c) const {
  NCPoly r(field_);
  if (c.is_zero()) return r;
  for (const auto& [w, v] : terms_) r.add_term(w, v * c);
  return r;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
  if (!(o.field_ == field_)) throw MathError("NCPoly: field mismatch");
  NCPoly r(field_);
  for (const auto& [wa, ca] : terms_)
    for (const auto& [wb, cb] : o.terms_) r.add_term(wa.concat(wb), ca * cb);
  return r;
}

bool NCPoly::operator==(const NCPoly& o) const {
  if (!(o.field_ == field_) || terms_.size() != o.terms_.size()) return false;
  for (const auto& [w, c] : terms_) {
    auto it = o.terms_.find(w);
    if (it == o.terms_.end() || !(it->second == c)) return false;
  }
  return true;
}

NCPoly NCPoly::weighted_component(int d) const {
  NCPoly r(field_);
  for (const auto& [w, c] : terms_)
    if (w.weight() == d) r.add_term(w, c);
  return r;
}

std::vector<int> NCPoly::weights() const {
  std::set<int> s;
  for (const auto& [w, _] : terms_) s.insert(w.weight());
  return std::vector<int>(s.begin(), s.end());
}

int NCPoly::homogeneous_weight() const {
  std::vector<int> ws = weights();
  if (ws.empty()) return -1;
  if (ws.size() > 1) throw MathError("polynomial is not weighted-homogeneous");
  return ws[0];
}

FieldElement NCPoly::eval(
    const std::function<FieldElement(Letter)>& image) const {
  FieldElement acc = FieldElement::zero(field_);
  for (const auto& [w, c] : terms_) {
    FieldElement t = c;
    for (int i = 0; i < w.size(); ++i) t = t * image(w.at(i));
    acc += t;
  }
  return acc;
}

std::string NCPoly::to_string(const Alphabet& a) const {
  if (terms_.empty()) return "0";
  std::vector<const Word*> order;
  order.reserve(terms_.size());
  for (const auto& [w, _] : terms_) order.push_back(&w);
  std::sort(order.begin(), order.end(),
            [](const Word* x, const Word* y) { return x->less(*y); });
  std::string s;
  for (const Word* w : order) {
    const FieldElement& c = terms_.at(*w);
    if (!s.empty()) s += " + ";
    s += c.to_string();
    s += "*";
    s += a.word_name(*w);
  }
  return s;
}

}  // namespace manin
