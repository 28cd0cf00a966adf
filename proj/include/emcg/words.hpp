#pragma once

// Free-group word calculus shared by every other module.
//
// Two alphabets are in use.  The mapping alphabet holds the half-twists
// s1 ... s(n-1) and the reflection t; the free alphabet holds the basis
// x1 ... x(n-1) of the fundamental group of the punctured sphere.  Words
// are immutable values kept in freely reduced form.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace emcg {

enum class Alphabet { mapping, free };

/// Generator id of the reflection t in the mapping alphabet.
inline constexpr int kReflection = 0;

struct Letter {
  int index = 1;
  int sign = 1;

  constexpr Letter inverse() const { return {index, -sign}; }
  constexpr bool is_reflection() const { return index == kReflection; }
  constexpr bool cancels(Letter other) const {
    return index == other.index && sign == -other.sign;
  }
  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;
};

constexpr Letter sigma(int i, int sign = 1) { return {i, sign}; }
constexpr Letter reflection(int sign = 1) { return {kReflection, sign}; }
constexpr Letter basis(int i, int sign = 1) { return {i, sign}; }

class Word {
 public:
  Word() = default;
  /// Freely reduces `letters`.
  explicit Word(std::span<const Letter> letters,
                Alphabet alphabet = Alphabet::mapping);
  Word(std::initializer_list<Letter> letters,
       Alphabet alphabet = Alphabet::mapping);

  static Word identity(Alphabet alphabet = Alphabet::mapping) {
    Word w;
    w.alphabet_ = alphabet;
    return w;
  }

  Alphabet alphabet() const { return alphabet_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  /// Largest generator index used, 0 for the empty word.
  int max_index() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }
  friend bool operator<(const Word& a, const Word& b) {
    return a.letters_ < b.letters_;
  }

 private:
  friend class WordBuilder;
  std::vector<Letter> letters_;
  Alphabet alphabet_ = Alphabet::mapping;
};

/// Stack-based accumulator; the word it produces is freely reduced no
/// matter what order letters arrive in.
class WordBuilder {
 public:
  explicit WordBuilder(Alphabet alphabet = Alphabet::mapping)
      : alphabet_(alphabet) {}

  void reserve(std::size_t n) { letters_.reserve(n); }
  std::size_t size() const { return letters_.size(); }

  void push(Letter l) {
    if (!letters_.empty() && letters_.back().cancels(l)) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
  void append(const Word& w) {
    for (Letter l : w) push(l);
  }
  void append_inverse(const Word& w) {
    for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) {
      push(it->inverse());
    }
  }
  Word build() &&;

 private:
  std::vector<Letter> letters_;
  Alphabet alphabet_;
};

Word reduce(std::span<const Letter> raw, Alphabet alphabet = Alphabet::mapping);

/// Throws std::invalid_argument when the alphabets differ.
Word concat(const Word& u, const Word& v);
Word invert(const Word& u);
Word power(const Word& u, int k);
/// u v u^-1
Word conjugate(const Word& u, const Word& v);
Word commutator(const Word& u, const Word& v);

inline Word operator*(const Word& u, const Word& v) { return concat(u, v); }

struct CyclicReduction {
  Word core;
  Word conjugator;
};

/// u = conjugator * core * conjugator^-1 with core cyclically reduced.
CyclicReduction cyclic_reduce(const Word& u);

/// Some w with w v w^-1 = u, or nullopt when u and v are not conjugate.
/// When v is a single letter the shortest solution is returned.
std::optional<Word> solve_conjugacy(const Word& u, const Word& v);

/// Homomorphic extension of generator images.  Throws std::out_of_range
/// for a generator with no image.
Word substitute(const Word& u, const std::map<int, Word>& images);
/// Fast path: images[i - 1] is the image of generator i.
Word substitute(const Word& u, std::span<const Word> images,
                Alphabet target = Alphabet::free);

/// Letter counts, ignoring signs.
int count_reflections(const Word& u);
int count_sigmas(const Word& u);

/// Text form: "s3 S1 t" in the mapping alphabet, "x1 X2" in the free one;
/// lowercase is the generator, uppercase its inverse, "1" is the identity.
std::string to_string(const Word& u);

/// Parses the word grammar.  `rank` is the number of non-reflection
/// generators; indices outside 1..rank are rejected.  "T" denotes the
/// inverse of t, which is t again in the group.  Throws ParseError.
Word parse_word(std::string_view text, int rank,
                Alphabet alphabet = Alphabet::mapping);

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace emcg
