#include "emcg/presentation.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace emcg {

std::string to_string(Flavor f) {
  return f == Flavor::oriented ? "oriented" : "extended";
}

Flavor parse_flavor(std::string_view text) {
  if (text == "oriented") return Flavor::oriented;
  if (text == "extended") return Flavor::extended;
  throw std::invalid_argument("unknown flavor '" + std::string(text) + "'");
}

namespace {

Word word_of(std::vector<Letter> letters) { return Word(letters); }

// s_from s_(from+1) ... s_to (empty when from > to)
std::vector<Letter> ascending(int from, int to) {
  std::vector<Letter> out;
  for (int i = from; i <= to; ++i) out.push_back(sigma(i));
  return out;
}

Word alpha0(int n) { return word_of(ascending(1, n - 1)); }

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

void require_even_six(int n) {
  require(n >= 6 && n % 2 == 0, "element needs even n >= 6");
}

}  // namespace

Presentation build_presentation(int n, Flavor flavor) {
  if (n < 3) throw std::invalid_argument("presentation needs n >= 3");
  Presentation p;
  p.n = n;
  p.flavor = flavor;
  for (int i = 1; i < n; ++i) p.generators.push_back(sigma(i));
  if (flavor == Flavor::extended) p.generators.push_back(reflection());

  auto add = [&p](Word w, std::string name) {
    assert(!w.empty());
    p.relators.push_back(std::move(w));
    p.relator_names.push_back(std::move(name));
  };
  for (int i = 1; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      add(commutator(Word{sigma(i)}, Word{sigma(j)}),
          "comm(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  for (int i = 1; i + 1 < n; ++i) {
    add(Word{sigma(i), sigma(i + 1), sigma(i), sigma(i + 1, -1), sigma(i, -1),
             sigma(i + 1, -1)},
        "braid(" + std::to_string(i) + "," + std::to_string(i + 1) + ")");
  }
  {
    auto letters = ascending(1, n - 1);
    for (int i = n - 1; i >= 1; --i) letters.push_back(sigma(i));
    add(word_of(letters), "R");
  }
  add(power(alpha0(n), n), "power");
  if (flavor == Flavor::extended) {
    add(Word{reflection(), reflection()}, "t^2");
    for (int i = 1; i < n; ++i) {
      add(Word{reflection(), sigma(i), reflection(), sigma(i)},
          "(t s" + std::to_string(i) + ")^2");
    }
  }
  return p;
}

std::string dump(const Presentation& p) {
  std::ostringstream out;
  out << "n=" << p.n << " flavor=" << to_string(p.flavor) << '\n';
  for (const auto& r : p.relators) out << to_string(r) << '\n';
  return out.str();
}

int wrap_index(int k, int n) {
  int r = ((k % n) + n) % n;
  if (r == 0) throw std::logic_error("subscript reduced to 0 modulo n");
  return r;
}

Word named_word(NamedElement e, int n) {
  require(n >= 3, "named elements need n >= 3");
  switch (e.name) {
    case Named::alpha0:
      return alpha0(n);
    case Named::alpha1:
      return word_of(ascending(1, n - 2));
    case Named::alpha2: {
      auto letters = ascending(1, n - 2);
      letters.push_back(sigma(n - 2));
      return word_of(letters);
    }
    case Named::a: {
      require(n >= 4, "a needs n >= 4");
      std::vector<Letter> letters{sigma(n - 3), reflection()};
      for (Letter l : alpha0(n)) letters.push_back(l);
      letters.push_back(sigma(n - 3, -1));
      return word_of(letters);
    }
    case Named::b: {
      std::vector<Letter> letters{reflection(), sigma(n - 1, -1)};
      for (Letter l : named_word({Named::alpha2}, n)) letters.push_back(l);
      return word_of(letters);
    }
    case Named::gamma: {
      require_even_six(n);
      require(e.index % 2 != 0 && e.index >= 1 && e.index < n,
              "gamma needs an odd index in 1..n-1");
      const int k = e.index;
      return Word{sigma(wrap_index(k, n)), sigma(wrap_index(k + 2, n)),
                  sigma(wrap_index(k + 4, n), -1)};
    }
    case Named::delta: {
      require(n >= 6 && e.index >= 1 && e.index <= n - 5,
              "delta needs 1 <= k <= n - 5");
      const int k = e.index;
      return Word{sigma(k), sigma(k + 1), sigma(k + 3)};
    }
    case Named::y: {
      require_even_six(n);
      std::vector<Letter> letters;
      for (int k = 1; k < n; k += 2) letters.push_back(sigma(k));
      return word_of(letters);
    }
    case Named::z: {
      require_even_six(n);
      std::vector<Letter> letters;
      for (int k = 1; k <= n - 5; k += 2) letters.push_back(sigma(k));
      letters.push_back(sigma(n - 2));
      return word_of(letters);
    }
    case Named::w:
      require_even_six(n);
      return Word{sigma(n - 2, -1), sigma(1)};
    case Named::c:
      require_even_six(n);
      return Word{sigma(n - 1, -1), sigma(1)};
    case Named::phi: {
      // Positive half-twist on strands 1 .. n-1.
      std::vector<Letter> letters;
      for (int k = 1; k <= n - 2; ++k) {
        for (int i = k; i >= 1; --i) letters.push_back(sigma(i));
      }
      return word_of(letters);
    }
  }
  throw std::invalid_argument("unknown named element");
}

Word chain_ab(int step, int n) {
  require_even_six(n);
  require(step >= 0 && step <= 4, "chain step must be 0..4");
  const Word a = named_word({Named::a}, n);
  const Word b = named_word({Named::b}, n);
  Word x = power(b, -2) * a * b;
  if (step >= 1) x = conjugate(x, a);
  if (step >= 2) x = x * invert(a);
  if (step >= 3) x = x * invert(b);
  if (step >= 4) x = x * a;
  return x;
}

Word chain_sigma(int step, int n) {
  require_even_six(n);
  auto s = [](int i) { return sigma(i); };
  auto S = [](int i) { return sigma(i, -1); };
  std::vector<Letter> letters;
  switch (step) {
    case 0:
      letters = {S(n - 2), S(n - 3), s(n - 5), s(n - 4), s(n - 2)};
      break;
    case 1:
      letters = {S(n - 2), S(n - 3), s(n - 5), s(n - 4), s(n - 2), s(n - 3),
                 s(n - 2), s(n - 1), s(n - 3), s(n - 4), S(n - 2), S(n - 1),
                 reflection()};
      for (Letter l : alpha0(n)) letters.push_back(l);
      break;
    case 2:
      letters = {s(n - 5), S(n - 2), S(n - 3), s(n - 2),
                 s(n - 2), s(n - 3), s(n - 4), S(n - 1)};
      break;
    case 3: {
      letters = {s(n - 5), s(n - 3), s(n - 3), s(n - 4), S(n - 1)};
      for (Letter l : invert(alpha0(n))) letters.push_back(l);
      letters.push_back(reflection());
      break;
    }
    case 4:
      letters = {s(n - 5), s(n - 3), S(n - 1)};
      break;
    default:
      throw std::invalid_argument("chain step must be 0..4");
  }
  return word_of(letters);
}

Word ab_word(NamedElement e, int n) {
  switch (e.name) {
    case Named::gamma: {
      named_word(e, n);  // validates the index
      const Word a = named_word({Named::a}, n);
      // a^2 shifts odd subscripts by 2 (mod n); start from gamma_(n-5) = x4.
      const int shift = (((e.index - (n - 5)) % n) + n) % n;
      return conjugate(power(a, shift), chain_ab(4, n));
    }
    case Named::y: {
      require_even_six(n);
      Word y;
      for (int k = 1; k < n; k += 2) y = y * ab_word({Named::gamma, k}, n);
      return y;
    }
    case Named::z: {
      require_even_six(n);
      const Word ab = named_word({Named::a}, n) * named_word({Named::b}, n);
      return power(ab, n / 2 - 1);
    }
    case Named::w: {
      require_even_six(n);
      return invert(ab_word({Named::z}, n)) * ab_word({Named::y}, n) *
             invert(ab_word({Named::gamma, n - 3}, n));
    }
    case Named::c: {
      require_even_six(n);
      const Word a = named_word({Named::a}, n);
      const Word b = named_word({Named::b}, n);
      return conjugate(invert(a) * b, ab_word({Named::w}, n));
    }
    default:
      return named_word(e, n);
  }
}

TNormalForm t_normal_form(const Word& u) {
  // Moving every t to the front inverts each sigma letter once per t to its
  // right.
  const auto letters = u.letters();
  std::vector<Letter> out;
  out.reserve(letters.size());
  int to_the_right = 0;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    if (it->is_reflection()) {
      ++to_the_right;
      continue;
    }
    out.push_back(to_the_right % 2 == 0 ? *it : it->inverse());
  }
  std::reverse(out.begin(), out.end());
  return {to_the_right % 2, Word(out, u.alphabet())};
}

namespace {

struct NamedToken {
  std::string_view prefix;
  Named name;
  bool indexed;
};

constexpr NamedToken kNamedTokens[] = {
    {"a0", Named::alpha0, false}, {"a1", Named::alpha1, false},
    {"a2", Named::alpha2, false}, {"a", Named::a, false},
    {"b", Named::b, false},       {"y", Named::y, false},
    {"z", Named::z, false},       {"w", Named::w, false},
    {"c", Named::c, false},       {"phi", Named::phi, false},
    {"g", Named::gamma, true},    {"d", Named::delta, true},
};

bool parse_int(std::string_view text, int& value) {
  if (text.empty()) return false;
  const char* first = text.data();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

Word expand_token(std::string_view token, int n) {
  for (const auto& named : kNamedTokens) {
    if (named.indexed) {
      if (token.size() <= named.prefix.size() ||
          token.substr(0, named.prefix.size()) != named.prefix) {
        continue;
      }
      int k = 0;
      if (!parse_int(token.substr(named.prefix.size()), k)) continue;
      return named_word({named.name, k}, n);
    }
    if (token == named.prefix) return named_word({named.name}, n);
  }
  return parse_word(token, n - 1);
}

}  // namespace

Word parse_expression(std::string_view text, int n) {
  if (n < 3) throw ParseError("expressions need n >= 3");
  WordBuilder out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    int exponent = 1;
    std::string_view base = token;
    if (const auto caret = base.find('^'); caret != std::string_view::npos) {
      if (!parse_int(base.substr(caret + 1), exponent)) {
        throw ParseError("bad exponent in '" + token + "'");
      }
      base = base.substr(0, caret);
    }
    if (base.empty()) throw ParseError("empty token in '" + token + "'");
    Word w;
    try {
      w = expand_token(base, n);
    } catch (const std::invalid_argument& e) {
      throw ParseError("'" + token + "': " + e.what());
    }
    out.append(power(w, exponent));
  }
  return std::move(out).build();
}

}  // namespace emcg
