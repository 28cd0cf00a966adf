#pragma once

#include <random>
#include <string_view>

#include "emcg/words.hpp"

namespace testing {

inline emcg::Word W(std::string_view text, int n = 6) { return emcg::parse_word(text, n - 1); }

inline emcg::Word X(std::string_view text, int rank = 5) {
  return emcg::parse_word(text, rank, emcg::Alphabet::free);
}

/// Unreduced random letters over x1..x(rank).
inline std::vector<emcg::Letter> raw_letters(std::mt19937_64& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> idx(1, rank);
  std::bernoulli_distribution pos(0.5);
  std::vector<emcg::Letter> out(static_cast<std::size_t>(len(rng)));
  for (auto& l : out) l = emcg::basis(idx(rng), pos(rng) ? 1 : -1);
  return out;
}

inline emcg::Word free_word(std::mt19937_64& rng, int rank, int max_len) {
  return emcg::Word(raw_letters(rng, rank, max_len), emcg::Alphabet::free);
}

}  // namespace testing
