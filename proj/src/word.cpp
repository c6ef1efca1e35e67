#include "manin/word.hpp"

#include <algorithm>

namespace manin {

const char* family_name(Family f) {
  switch (f) {
    case Family::M: return "M";
    case Family::N: return "N";
    case Family::H: return "h";
    case Family::X: return "x";
    case Family::Y: return "y";
    case Family::Psi: return "psi";
    case Family::Phi: return "phi";
  }
  return "?";
}

Alphabet::Alphabet(std::vector<FamilySpec> fams) : fams_(std::move(fams)) {
  for (const auto& fs : fams_) {
    if (fs.rows < 1 || fs.rows > 8 || fs.cols < 0 || fs.cols > 8)
      throw MathError("alphabet dimensions out of range");
    for (int r = 1; r <= fs.rows; ++r) {
      if (fs.cols == 0)
        letters_.push_back(pack_letter(fs.fam, r, 0));
      else
        for (int c = 1; c <= fs.cols; ++c)
          letters_.push_back(pack_letter(fs.fam, r, c));
    }
  }
  std::sort(letters_.begin(), letters_.end());
}

bool Alphabet::has_family(Family f) const {
  for (const auto& fs : fams_)
    if (fs.fam == f) return true;
  return false;
}

const Alphabet::FamilySpec& Alphabet::family(Family f) const {
  for (const auto& fs : fams_)
    if (fs.fam == f) return fs;
  throw MathError(std::string("family ") + family_name(f) +
                  " not in alphabet");
}

Letter Alphabet::letter(Family f, int row, int col) const {
  const FamilySpec& fs = family(f);
  if (row < 1 || row > fs.rows || col < 0 || col > fs.cols ||
      (fs.cols > 0 && col == 0))
    throw MathError(std::string("generator index out of range for ") +
                    family_name(f));
  return pack_letter(f, row, col);
}

bool Alphabet::valid_letter(Letter l) const {
  Family f = letter_family(l);
  for (const auto& fs : fams_) {
    if (fs.fam != f) continue;
    GeneratorSymbol g = unpack_letter(l, fs.cols > 0);
    return g.row >= 1 && g.row <= fs.rows &&
           (fs.cols == 0 ? (l & 7) == 0 : g.col >= 1 && g.col <= fs.cols);
  }
  return false;
}

std::string Alphabet::letter_name(Letter l) const {
  Family f = letter_family(l);
  const FamilySpec& fs = family(f);
  GeneratorSymbol g = unpack_letter(l, fs.cols > 0);
  std::string s = family_name(f);
  s += "[";
  s += std::to_string(g.row);
  if (fs.cols > 0) {
    s += ",";
    s += std::to_string(g.col);
  }
  s += "]";
  return s;
}

std::string Alphabet::word_name(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (int i = 0; i < w.size(); ++i) s += letter_name(w.at(i));
  return s;
}

unsigned long long Alphabet::count_words(int weight) const {
  // Letters have weight 1 or 2; simple DP over the remaining weight.
  unsigned long long n1 = 0, n2 = 0;
  for (Letter l : letters_) (letter_weight(l) == 1 ? n1 : n2) += 1;
  std::vector<unsigned long long> cnt(weight + 1, 0);
  cnt[0] = 1;
  const unsigned long long cap = ~0ULL / 2;
  for (int d = 1; d <= weight; ++d) {
    unsigned long long v = n1 * cnt[d - 1];
    if (d >= 2) v += n2 * cnt[d - 2];
    cnt[d] = std::min(v, cap);
  }
  return cnt[weight];
}

std::vector<Word> Alphabet::words_of_weight(int weight, size_t guard) const {
  if (count_words(weight) > guard)
    throw GuardExceeded("weight-" + std::to_string(weight) +
                        " word count exceeds guard (" + std::to_string(guard) +
                        ")");
  std::vector<Word> out, stack_words;
  // Depth-first enumeration in canonical letter order.
  struct Item {
    Word w;
    int rem;
  };
  std::vector<Item> stack{{Word(), weight}};
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (it.rem == 0) {
      out.push_back(it.w);
      continue;
    }
    // Push in reverse so the output comes out in canonical order.
    for (auto l = letters_.rbegin(); l != letters_.rend(); ++l) {
      int lw = letter_weight(*l);
      if (lw <= it.rem) stack.push_back({it.w.appended(*l), it.rem - lw});
    }
  }
  return out;
}

bool Alphabet::operator==(const Alphabet& o) const {
  if (fams_.size() != o.fams_.size()) return false;
  for (size_t i = 0; i < fams_.size(); ++i) {
    if (fams_[i].fam != o.fams_[i].fam || fams_[i].rows != o.fams_[i].rows ||
        fams_[i].cols != o.fams_[i].cols)
      return false;
  }
  return true;
}

}  // namespace manin
