#pragma once

// Seeded random sampling of the word oracle against its cheap invariants.

#include <cstdint>
#include <random>
#include <vector>

#include "emcg/harness.hpp"
#include "emcg/words.hpp"

namespace emcg {

struct SampleConfig {
  std::uint64_t seed = 20240601;
  int pairs = 200;
  int hom_pairs = 100;
  int max_length = 12;
};

/// Uniform length in [0, max_length], uniform letters over the extended
/// alphabet of n (t, s1 .. s(n-1) and inverses), freely reduced.
Word random_word(std::mt19937_64& rng, int n, int max_length);

/// A word equal to u in the group: a random conjugate of a random relator
/// spliced in at a random position.
Word plant_relator(std::mt19937_64& rng, const Word& u, int n);

/// Checks ids "n<n>.prop.*": equality implies equal permutation and
/// abelianization images, planted pairs are equal, reflexivity, symmetry,
/// and word_to_aut(uv) = word_to_aut(u) o word_to_aut(v).
CheckResults verify_properties(int n, const SampleConfig& sample = {},
                               const HarnessConfig& config = {});

}  // namespace emcg
