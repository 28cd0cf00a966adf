#include "emcg/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace emcg {

Word::Word(std::span<const Letter> letters, Alphabet alphabet)
    : alphabet_(alphabet) {
  WordBuilder b(alphabet);
  b.reserve(letters.size());
  for (Letter l : letters) b.push(l);
  letters_ = std::move(b).build().letters_;
}

Word::Word(std::initializer_list<Letter> letters, Alphabet alphabet)
    : Word(std::span<const Letter>(letters.begin(), letters.size()),
           alphabet) {}

int Word::max_index() const {
  int m = 0;
  for (Letter l : letters_) m = std::max(m, l.index);
  return m;
}

Word WordBuilder::build() && {
  Word w;
  w.alphabet_ = alphabet_;
  w.letters_ = std::move(letters_);
  return w;
}

Word reduce(std::span<const Letter> raw, Alphabet alphabet) {
  return Word(raw, alphabet);
}

namespace {

void require_same_alphabet(const Word& u, const Word& v) {
  if (u.alphabet() != v.alphabet()) {
    throw std::invalid_argument("words over different alphabets");
  }
}

}  // namespace

Word concat(const Word& u, const Word& v) {
  require_same_alphabet(u, v);
  WordBuilder b(u.alphabet());
  b.reserve(u.size() + v.size());
  b.append(u);
  b.append(v);
  return std::move(b).build();
}

Word invert(const Word& u) {
  WordBuilder b(u.alphabet());
  b.reserve(u.size());
  b.append_inverse(u);
  return std::move(b).build();
}

Word power(const Word& u, int k) {
  WordBuilder b(u.alphabet());
  const int reps = k < 0 ? -k : k;
  for (int i = 0; i < reps; ++i) {
    if (k > 0) {
      b.append(u);
    } else {
      b.append_inverse(u);
    }
  }
  return std::move(b).build();
}

Word conjugate(const Word& u, const Word& v) {
  require_same_alphabet(u, v);
  WordBuilder b(u.alphabet());
  b.append(u);
  b.append(v);
  b.append_inverse(u);
  return std::move(b).build();
}

Word commutator(const Word& u, const Word& v) {
  require_same_alphabet(u, v);
  WordBuilder b(u.alphabet());
  b.append(u);
  b.append(v);
  b.append_inverse(u);
  b.append_inverse(v);
  return std::move(b).build();
}

CyclicReduction cyclic_reduce(const Word& u) {
  const auto letters = u.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo].cancels(letters[hi - 1])) {
    ++lo;
    --hi;
  }
  return {Word(letters.subspan(lo, hi - lo), u.alphabet()),
          Word(letters.first(lo), u.alphabet())};
}

std::optional<Word> solve_conjugacy(const Word& u, const Word& v) {
  require_same_alphabet(u, v);
  const auto cu = cyclic_reduce(u);
  const auto cv = cyclic_reduce(v);
  if (cu.core.size() != cv.core.size()) return std::nullopt;

  // Rotations of the core of v: core(v) = p q, core(u) = q p = p^-1 core(v) p.
  const auto target = cu.core.letters();
  const auto source = cv.core.letters();
  const std::size_t len = source.size();
  std::vector<Letter> doubled(source.begin(), source.end());
  doubled.insert(doubled.end(), source.begin(), source.end());
  for (std::size_t shift = 0; shift < std::max<std::size_t>(len, 1); ++shift) {
    if (len != 0 &&
        !std::equal(target.begin(), target.end(), doubled.begin() + shift)) {
      continue;
    }
    WordBuilder b(u.alphabet());
    b.append(cu.conjugator);
    b.append_inverse(Word(source.first(shift), u.alphabet()));
    b.append_inverse(cv.conjugator);
    return std::move(b).build();
  }
  return std::nullopt;
}

Word substitute(const Word& u, const std::map<int, Word>& images) {
  const Alphabet target =
      images.empty() ? u.alphabet() : images.begin()->second.alphabet();
  WordBuilder b(target);
  for (Letter l : u) {
    const auto it = images.find(l.index);
    if (it == images.end()) {
      throw std::out_of_range("no image for generator " +
                              std::to_string(l.index));
    }
    if (l.sign > 0) {
      b.append(it->second);
    } else {
      b.append_inverse(it->second);
    }
  }
  return std::move(b).build();
}

Word substitute(const Word& u, std::span<const Word> images, Alphabet target) {
  WordBuilder b(target);
  for (Letter l : u) {
    if (l.index < 1 || static_cast<std::size_t>(l.index) > images.size()) {
      throw std::out_of_range("no image for generator " +
                              std::to_string(l.index));
    }
    const Word& image = images[static_cast<std::size_t>(l.index - 1)];
    if (l.sign > 0) {
      b.append(image);
    } else {
      b.append_inverse(image);
    }
  }
  return std::move(b).build();
}

int count_reflections(const Word& u) {
  return static_cast<int>(
      std::count_if(u.begin(), u.end(), [](Letter l) { return l.is_reflection(); }));
}

int count_sigmas(const Word& u) {
  return static_cast<int>(u.size()) - count_reflections(u);
}

std::string to_string(const Word& u) {
  if (u.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (Letter l : u) {
    if (!first) out << ' ';
    first = false;
    if (u.alphabet() == Alphabet::free) {
      out << (l.sign > 0 ? 'x' : 'X') << l.index;
    } else if (l.is_reflection()) {
      out << (l.sign > 0 ? 't' : 'T');
    } else {
      out << (l.sign > 0 ? 's' : 'S') << l.index;
    }
  }
  return out.str();
}

Word parse_word(std::string_view text, int rank, Alphabet alphabet) {
  const char gen = alphabet == Alphabet::free ? 'x' : 's';
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[end]))) {
      ++end;
    }
    const std::string_view token = text.substr(pos, end - pos);
    pos = end;
    if (token == "1") continue;
    const char head = token.front();
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(head)));
    const int sign = std::islower(static_cast<unsigned char>(head)) ? 1 : -1;
    if (alphabet == Alphabet::mapping && lower == 't' && token.size() == 1) {
      letters.push_back(reflection(sign));
      continue;
    }
    if (lower != gen || token.size() < 2) {
      throw ParseError("bad token '" + std::string(token) + "'");
    }
    int index = 0;
    const auto digits = token.substr(1);
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ParseError("bad token '" + std::string(token) + "'");
    }
    if (index < 1 || index > rank) {
      throw ParseError("generator index out of range in '" +
                       std::string(token) + "'");
    }
    letters.push_back({index, sign});
  }
  return Word(letters, alphabet);
}

}  // namespace emcg
