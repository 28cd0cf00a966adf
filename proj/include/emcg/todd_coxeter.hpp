#pragma once

// Deterministic Todd-Coxeter coset enumeration (HLT strategy with
// immediate coincidence processing).  An index-1 result certifies that the
// subgroup generators generate the whole group.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "emcg/presentation.hpp"
#include "emcg/words.hpp"

namespace emcg {

struct EnumerationLimits {
  /// Cosets allowed to be alive at once.
  std::size_t max_cosets = 1'000'000;
  std::chrono::milliseconds max_time{60'000};
};

struct EnumerationStats {
  std::size_t defined = 0;
  std::size_t max_alive = 0;
  std::size_t collapsed = 0;
  double seconds = 0.0;
};

/// A complete, standardized coset table: coset 0 is the subgroup, and the
/// cosets are numbered in order of first appearance when rows are read
/// left to right.  Every generator and its inverse has a column.
class CosetTable {
 public:
  CosetTable() = default;
  CosetTable(std::vector<Letter> generators, std::vector<std::int32_t> entries);

  std::size_t index() const { return columns() == 0 ? 1 : entries_.size() / columns(); }
  std::size_t columns() const { return 2 * generators_.size(); }
  const std::vector<Letter>& generators() const { return generators_; }

  /// Coset reached from `coset` by the letter l.  Throws std::out_of_range
  /// for a letter outside the table's alphabet.
  std::size_t act(std::size_t coset, Letter l) const;
  std::size_t trace(std::size_t coset, const Word& w) const;

  friend bool operator==(const CosetTable&, const CosetTable&) = default;

 private:
  std::size_t column(Letter l) const;
  std::vector<Letter> generators_;
  std::vector<std::int32_t> entries_;
};

enum class EnumerationStatus { finished, overflow };

struct EnumerationResult {
  EnumerationStatus status = EnumerationStatus::overflow;
  std::size_t index = 0;  // finished only
  CosetTable table;       // finished only
  EnumerationStats stats;
  std::string overflow_reason;

  bool finished() const { return status == EnumerationStatus::finished; }
};

/// Subgroup generators must be words over the presentation's alphabet
/// (std::invalid_argument otherwise).  Overflow means a limit was hit, not
/// that the index is infinite.
EnumerationResult enumerate(const Presentation& p, const std::vector<Word>& subgroup,
                            const EnumerationLimits& limits = {});

/// Independent check of a finished table: every relator closes at every
/// coset, every subgroup generator fixes coset 0, and each column is a
/// permutation inverse to its partner column.
bool verify_table(const CosetTable& table, const Presentation& p,
                  const std::vector<Word>& subgroup);

}  // namespace emcg
