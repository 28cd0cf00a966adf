#pragma once

// Presentations of Mod(S_{0,n}) and Mod^{+-}(S_{0,n}) and the named
// elements used throughout the generation proofs.

#include <string>
#include <string_view>
#include <vector>

#include "emcg/words.hpp"

namespace emcg {

enum class Flavor { oriented, extended };

std::string to_string(Flavor f);
/// Accepts "oriented" or "extended"; throws std::invalid_argument.
Flavor parse_flavor(std::string_view text);

struct Presentation {
  int n = 0;
  Flavor flavor = Flavor::extended;
  std::vector<Letter> generators;
  std::vector<Word> relators;
  /// Human-readable tag per relator ("comm(1,3)", "braid(2,3)", "R", ...).
  std::vector<std::string> relator_names;
};

/// Throws std::invalid_argument for n < 3.
///
/// Relator order: commutations (i < j, j - i >= 2), braid relations,
/// the sphere relator s1 ... s(n-1) s(n-1) ... s1, the power
/// (s1 ... s(n-1))^n, then for the extended flavor t^2 and (t si)^2.
Presentation build_presentation(int n, Flavor flavor);

/// Header "n=<n> flavor=<flavor>" followed by one relator per line.
std::string dump(const Presentation& p);

enum class Named {
  alpha0,
  alpha1,
  alpha2,
  a,
  b,
  gamma,
  delta,
  y,
  z,
  w,
  c,
  phi,
};

struct NamedElement {
  Named name;
  int index = 0;  // gamma and delta only
};

/// The sigma/t word of a named element.  Throws std::invalid_argument when
/// the element is not defined for n (a needs n >= 4; gamma, y, z, w, c need
/// even n >= 6 and gamma an odd index; delta needs 1 <= k <= n - 5).
Word named_word(NamedElement e, int n);

/// y, z, w, c and gamma written as products of a and b, following the
/// generation argument for even n >= 6.  Other names return named_word.
Word ab_word(NamedElement e, int n);

/// Lemma-chain elements x0 ... x4 as products of a and b (even n >= 6).
Word chain_ab(int step, int n);
/// The closed sigma/t forms of the same chain elements.
Word chain_sigma(int step, int n);

/// Reduces a subscript into 1..n-1 modulo n; asserts the result is not 0.
int wrap_index(int k, int n);

struct TNormalForm {
  int parity = 0;
  Word sigma_word;
};

/// u = t^parity * sigma_word, using t si = si^-1 t and t^2 = 1.
TNormalForm t_normal_form(const Word& u);

/// Word expression with named elements: the word grammar plus the tokens
/// a0 a1 a2 a b y z w c phi g<k> d<k>, each optionally suffixed "^k"
/// (including "^-1").  Named tokens expand to their sigma/t forms.
/// Throws ParseError.
Word parse_expression(std::string_view text, int n);

}  // namespace emcg
