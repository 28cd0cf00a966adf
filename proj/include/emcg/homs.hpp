#pragma once

// Homomorphisms out of Mod^{+-}(S_{0,n}): the puncture permutation, the
// abelianization onto (Z/2)^2 and, for n = 4, the quotient onto PGL2(Z).
// The first two are cheap necessary conditions for oracle equality.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "emcg/presentation.hpp"
#include "emcg/words.hpp"

namespace emcg {

/// Bijection of {1..n}, stored 0-based.
class Perm {
 public:
  explicit Perm(int n);
  explicit Perm(std::vector<int> images);  // 0-based images

  int size() const { return static_cast<int>(images_.size()); }
  /// Image of the 1-based point p.
  int operator()(int p) const { return images_.at(static_cast<std::size_t>(p - 1)) + 1; }
  bool is_identity() const;
  Perm inverse() const;

  /// (f * g)(p) = f(g(p)).
  friend Perm operator*(const Perm& f, const Perm& g);
  friend bool operator==(const Perm&, const Perm&) = default;

  static Perm transposition(int n, int i, int j);

 private:
  std::vector<int> images_;
};

/// Cycle notation, e.g. "(1 2 4 3 5 6)"; "()" for the identity.
std::string to_string(const Perm& p);

struct GF2Vec {
  std::uint8_t s = 0;
  std::uint8_t t = 0;

  friend GF2Vec operator+(GF2Vec a, GF2Vec b) {
    return {static_cast<std::uint8_t>(a.s ^ b.s), static_cast<std::uint8_t>(a.t ^ b.t)};
  }
  friend bool operator==(GF2Vec, GF2Vec) = default;
};

/// "(s,t)"
std::string to_string(GF2Vec v);

struct Mat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  std::int64_t det() const { return a * d - b * c; }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }
  /// Exact inverse; entries must have determinant +-1.
  Mat2 inverse() const;
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
  static Mat2 identity() { return {}; }
};

/// A class in PGL2(Z): the representative is kept as computed, equality
/// ignores a global sign.
struct ProjMat2 {
  Mat2 rep;

  bool is_identity() const { return rep == Mat2::identity() || rep == -Mat2::identity(); }
  friend ProjMat2 operator*(const ProjMat2& x, const ProjMat2& y) { return {x.rep * y.rep}; }
  friend bool operator==(const ProjMat2& x, const ProjMat2& y) {
    return x.rep == y.rep || x.rep == -y.rep;
  }
};

/// Row-major "[[a,b],[c,d]]".
std::string to_string(const Mat2& m);
std::string to_string(const ProjMat2& m);

/// si swaps punctures i and i+1; t fixes every puncture.
Perm perm_image(const Word& u, int n);
GF2Vec abelianization_image(const Word& u);

/// Images of s1, s2, s3 and t for the n = 4 quotient onto PGL2(Z).
struct Pgl2Assignment {
  Mat2 s1{1, 1, 0, 1};
  Mat2 s2{1, 0, -1, 1};
  Mat2 s3{1, 1, 0, 1};
  Mat2 t{1, 0, 0, -1};
  std::string t_choice = "diag(1,-1)";
};

/// The assignment used by pgl2_image: the first reflection candidate
/// (diag(1,-1), then diag(-1,1)) for which every relator of the n = 4
/// extended presentation maps to +-Id.
const Pgl2Assignment& pgl2_assignment();

/// Throws std::invalid_argument for a letter outside the n = 4 alphabet.
ProjMat2 pgl2_image(const Word& u);
ProjMat2 pgl2_image(const Word& u, const Pgl2Assignment& assignment);

/// Target-agnostic relator check: `is_trivial(image(relator))` for every
/// relator.
template <typename Image>
bool validate_hom(const Presentation& p, const std::function<Image(const Word&)>& image,
                  const std::function<bool(const Image&)>& is_trivial) {
  for (const auto& r : p.relators) {
    if (!is_trivial(image(r))) return false;
  }
  return true;
}

bool validate_perm_hom(const Presentation& p);
bool validate_abelianization_hom(const Presentation& p);
/// p must be the n = 4 presentation.
bool validate_pgl2_hom(const Presentation& p, const Pgl2Assignment& assignment);

bool span_gf2(const std::vector<GF2Vec>& vs);

/// Shortest word (length <= max_length, breadth-first in a fixed letter
/// order) over the n = 4 extended alphabet whose image is `target`.
std::optional<Word> find_pgl2_preimage(const ProjMat2& target, int max_length = 8);

}  // namespace emcg
