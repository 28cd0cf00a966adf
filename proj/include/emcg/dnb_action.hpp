#pragma once

// Word-problem oracle.  A mapping class of the n-punctured sphere acts on
// the fundamental group, which is free on x1 ... x(n-1) once the peripheral
// loop xn = (x1 ... x(n-1))^-1 is eliminated.  Two words are equal in
// Mod^{+-}(S_{0,n}) exactly when the induced automorphisms differ by an
// inner automorphism (assumed faithful for n >= 3, and cross-checked
// against coset enumeration and the homomorphisms in homs.hpp).

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "emcg/presentation.hpp"
#include "emcg/words.hpp"

namespace emcg {

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ActionLimits {
  /// Total letters over all basis images before a computation aborts.
  std::size_t max_image_length = 1'000'000;
};

class FreeAut {
 public:
  /// images[i - 1] is the image of x_i, i = 1 .. n-1.
  FreeAut(int n, std::vector<Word> images);
  static FreeAut identity(int n);

  int n() const { return n_; }
  int rank() const { return n_ - 1; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  std::size_t total_length() const;

  Word apply(const Word& u) const;

  friend bool operator==(const FreeAut&, const FreeAut&) = default;

 private:
  int n_;
  std::vector<Word> images_;
};

/// (f o g)(x) = f(g(x)).
FreeAut compose(const FreeAut& f, const FreeAut& g);

/// Conjugation x -> w x w^-1.
FreeAut inner(int n, const Word& w);

/// Peripheral loop x_n = (x1 ... x(n-1))^-1 as a basis word.
Word peripheral_word(int n);

enum class SigmaConvention { standard, mirrored };

/// The action of the generators, fixed by relator validation: the first
/// sigma convention under which every oriented relator acts trivially, and
/// the first reflection candidate x_i -> c_i x_i^-1 c_i^-1 that is an exact
/// involution, sends x_n to a conjugate of x_n^-1, and makes t^2 and every
/// (t s_i)^2 inner.
class ActionModel {
 public:
  /// Throws std::logic_error when no convention validates.
  explicit ActionModel(int n);

  int n() const { return n_; }
  SigmaConvention sigma_convention() const { return sigma_convention_; }
  const std::string& reflection_formula() const { return reflection_formula_; }
  std::string describe() const;

  /// Throws std::out_of_range for an index outside 1..n-1.
  const FreeAut& generator(Letter g) const;

  FreeAut word_to_aut(const Word& u, const ActionLimits& limits = {}) const;

 private:
  int n_;
  SigmaConvention sigma_convention_ = SigmaConvention::standard;
  std::string reflection_formula_;
  // [0]: t, then s1, S1, s2, S2, ...
  std::vector<FreeAut> generators_;
};

/// Shared, lazily built model per n.  Thread-safe.
const ActionModel& action_model(int n);

FreeAut generator_aut(Letter g, int n);
FreeAut word_to_aut(const Word& u, int n, const ActionLimits& limits = {});

/// Some w with phi(x) = w x w^-1 for every basis letter, else nullopt.
std::optional<Word> is_inner(const FreeAut& phi);

bool equal_in_group(const Word& u, const Word& v, int n,
                    const ActionLimits& limits = {});
/// Conjugator witnessing u = v, if any.
std::optional<Word> equality_witness(const Word& u, const Word& v, int n,
                                     const ActionLimits& limits = {});

/// Least k <= cap with u^k trivial.  cap <= 0 selects the default 4n.
std::optional<int> order_of(const Word& u, int n, int cap = 0,
                            const ActionLimits& limits = {});

/// The automorphism modulo inner automorphisms, normalised so that x1 maps
/// to a basis letter and the image of x2 does not begin with that letter.
/// Equal outer classes give equal canonical forms.
FreeAut canonical_outer(const FreeAut& phi);

struct ValidationRow {
  std::string relator_id;
  std::string relator_name;
  Word relator;
  bool passed = false;
  std::optional<Word> witness;
};

struct ValidationReport {
  int n = 0;
  std::string convention;
  std::vector<ValidationRow> rows;
  bool all_passed() const;
};

/// Every relator of the extended presentation through the oracle.
ValidationReport validate_action(int n, Flavor flavor = Flavor::extended);

}  // namespace emcg
