// Words over an alphabet of indexed generator families. Letters are packed
// 10 bits each (family, row-1, col-1) into two machine words; a word holds at
// most 12 letters, which covers every weight reachable under the engine's
// degree caps. Letter order (family, row, col) and word order (letterwise,
// then length) give the canonical deterministic ordering used for pivots and
// rendering; it is never used as a rewriting order.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "manin/field.hpp"

namespace manin {

enum class Family : uint8_t { M = 0, N = 1, H = 2, X = 3, Y = 4, Psi = 5, Phi = 6 };

const char* family_name(Family f);

/// Weighted grading: H counts 2 (it absorbs a commutator of two weight-1
/// letters in the Capelli cross relation), everything else counts 1.
inline int family_weight(Family f) { return f == Family::H ? 2 : 1; }

/// One generator occurrence; indices are 1-based, col is 0 for the
/// single-index families (X, Y, Psi, Phi).
struct GeneratorSymbol {
  Family fam;
  int row;
  int col;
};

using Letter = uint16_t;  // 10 bits used

inline Letter pack_letter(Family f, int row, int col) {
  if (row < 1 || row > 8 || col < 0 || col > 8)
    throw MathError("generator index out of packable range");
  return (Letter)(((unsigned)f << 6) | ((unsigned)(row - 1) << 3) |
                  (unsigned)(col == 0 ? 0 : col - 1));
}

inline GeneratorSymbol unpack_letter(Letter l, bool has_col) {
  Family f = (Family)(l >> 6);
  int row = (int)((l >> 3) & 7) + 1;
  int col = has_col ? (int)(l & 7) + 1 : 0;
  return {f, row, col};
}

inline Family letter_family(Letter l) { return (Family)(l >> 6); }
inline int letter_weight(Letter l) { return family_weight(letter_family(l)); }

/// Immutable word of at most 12 packed letters. The empty word is the
/// algebra unit.
class Word {
 public:
  static constexpr int kMaxLetters = 12;

  Word() : lo_(0), hi_(0) {}

  int size() const { return (int)(hi_ >> 60); }
  bool empty() const { return size() == 0; }

  Letter at(int i) const {
    uint64_t chunk = i < 6 ? lo_ : hi_;
    int off = (i < 6 ? i : i - 6) * 10;
    return (Letter)((chunk >> off) & 0x3ff);
  }

  Word appended(Letter l) const {
    int n = size();
    if (n >= kMaxLetters) throw MathError("word capacity (12 letters) exceeded");
    Word w = *this;
    if (n < 6)
      w.lo_ |= (uint64_t)l << (10 * n);
    else
      w.hi_ |= (uint64_t)l << (10 * (n - 6));
    w.hi_ = (w.hi_ & ~(0xfULL << 60)) | ((uint64_t)(n + 1) << 60);
    return w;
  }

  static Word single(Letter l) { return Word().appended(l); }

  Word concat(const Word& o) const {
    Word w = *this;
    for (int i = 0; i < o.size(); ++i) w = w.appended(o.at(i));
    return w;
  }

  /// Letters [from, to).
  Word slice(int from, int to) const {
    Word w;
    for (int i = from; i < to; ++i) w = w.appended(at(i));
    return w;
  }

  int weight() const {
    int s = 0;
    for (int i = 0; i < size(); ++i) s += letter_weight(at(i));
    return s;
  }

  bool operator==(const Word& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }
  bool operator!=(const Word& o) const { return !(*this == o); }

  /// Canonical order: letterwise (family, row, col), shorter prefix first.
  bool less(const Word& o) const {
    int n = std::min(size(), o.size());
    for (int i = 0; i < n; ++i) {
      Letter a = at(i), b = o.at(i);
      if (a != b) return a < b;
    }
    return size() < o.size();
  }

  size_t hash() const {
    uint64_t h = lo_ * 0x9e3779b97f4a7c15ULL;
    h ^= hi_ + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return (size_t)h;
  }

 private:
  uint64_t lo_, hi_;
};

struct WordHash {
  size_t operator()(const Word& w) const { return w.hash(); }
};

struct WordLess {
  bool operator()(const Word& a, const Word& b) const { return a.less(b); }
};

/// Declared generator families with their dimensions; validates letters and
/// enumerates monomial bases for the full degree components.
class Alphabet {
 public:
  struct FamilySpec {
    Family fam;
    int rows;
    int cols;  // 0 for single-index families
  };

  Alphabet() = default;
  explicit Alphabet(std::vector<FamilySpec> fams);

  const std::vector<FamilySpec>& families() const { return fams_; }
  bool has_family(Family f) const;
  const FamilySpec& family(Family f) const;

  Letter letter(Family f, int row, int col = 0) const;
  bool valid_letter(Letter l) const;
  std::string letter_name(Letter l) const;
  std::string word_name(const Word& w) const;

  /// All letters, in canonical order.
  const std::vector<Letter>& letters() const { return letters_; }

  /// Number of words of the given weight (no materialization).
  unsigned long long count_words(int weight) const;
  /// All words of the given weight, canonically ordered; guarded.
  std::vector<Word> words_of_weight(int weight, size_t guard) const;

  bool operator==(const Alphabet& o) const;

 private:
  std::vector<FamilySpec> fams_;
  std::vector<Letter> letters_;
};

}  // namespace manin
