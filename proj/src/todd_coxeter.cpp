#include "emcg/todd_coxeter.hpp"

#include <algorithm>
#include <stdexcept>

namespace emcg {

CosetTable::CosetTable(std::vector<Letter> generators,
                       std::vector<std::int32_t> entries)
    : generators_(std::move(generators)), entries_(std::move(entries)) {}

std::size_t CosetTable::column(Letter l) const {
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    if (generators_[g].index == l.index) return 2 * g + (l.sign > 0 ? 0 : 1);
  }
  throw std::out_of_range("letter not in the table's alphabet");
}

std::size_t CosetTable::act(std::size_t coset, Letter l) const {
  return static_cast<std::size_t>(entries_.at(coset * columns() + column(l)));
}

std::size_t CosetTable::trace(std::size_t coset, const Word& w) const {
  for (Letter l : w) coset = act(coset, l);
  return coset;
}

namespace {

constexpr std::int32_t kUndefined = -1;

struct Overflow {
  std::string reason;
};

class Enumerator {
 public:
  Enumerator(const Presentation& p, const EnumerationLimits& limits)
      : generators_(p.generators),
        columns_(2 * p.generators.size()),
        limits_(limits),
        start_(std::chrono::steady_clock::now()) {
    for (const auto& r : p.relators) relators_.push_back(encode(r));
    add_row();
  }

  std::vector<int> encode(const Word& w) const {
    std::vector<int> out;
    out.reserve(w.size());
    for (Letter l : w) {
      const auto it = std::find_if(generators_.begin(), generators_.end(),
                                   [&](Letter g) { return g.index == l.index; });
      if (it == generators_.end()) {
        throw std::invalid_argument("word uses a letter outside the presentation");
      }
      const int g = static_cast<int>(it - generators_.begin());
      out.push_back(2 * g + (l.sign > 0 ? 0 : 1));
    }
    return out;
  }

  EnumerationResult run(const std::vector<std::vector<int>>& subgroup) {
    EnumerationResult result;
    try {
      for (const auto& w : subgroup) scan_and_fill(0, w);
      for (std::size_t alpha = 0; alpha < parent_.size(); ++alpha) {
        maybe_compact(alpha);
        if (!alive(alpha)) continue;
        for (const auto& r : relators_) {
          scan_and_fill(static_cast<int>(alpha), r);
          if (!alive(alpha)) break;
        }
        if (!alive(alpha)) continue;
        for (std::size_t x = 0; x < columns_; ++x) {
          if (at(alpha, x) == kUndefined) define(static_cast<int>(alpha), x);
        }
      }
    } catch (const Overflow& o) {
      result.status = EnumerationStatus::overflow;
      result.overflow_reason = o.reason;
      result.stats = stats();
      return result;
    }
    result.status = EnumerationStatus::finished;
    result.table = standardize();
    result.index = result.table.index();
    result.stats = stats();
    return result;
  }

 private:
  std::int32_t& at(std::size_t coset, std::size_t x) {
    return table_[coset * columns_ + x];
  }
  bool alive(std::size_t coset) const {
    return parent_[coset] == static_cast<std::int32_t>(coset);
  }
  static std::size_t inverse(std::size_t x) { return x ^ 1U; }

  void add_row() {
    const auto id = static_cast<std::int32_t>(parent_.size());
    parent_.push_back(id);
    table_.resize(table_.size() + columns_, kUndefined);
    ++alive_count_;
    ++defined_;
    max_alive_ = std::max(max_alive_, alive_count_);
  }

  int define(int coset, std::size_t x) {
    if (alive_count_ >= limits_.max_cosets) {
      throw Overflow{"max_cosets " + std::to_string(limits_.max_cosets) + " exceeded"};
    }
    if ((defined_ & 0xFFF) == 0 &&
        std::chrono::steady_clock::now() - start_ > limits_.max_time) {
      throw Overflow{"max_time exceeded"};
    }
    add_row();
    const int fresh = static_cast<int>(parent_.size() - 1);
    at(static_cast<std::size_t>(coset), x) = fresh;
    at(static_cast<std::size_t>(fresh), inverse(x)) = coset;
    return fresh;
  }

  void scan_and_fill(int coset, const std::vector<int>& w) {
    if (w.empty()) return;
    int f = coset;
    int b = coset;
    std::ptrdiff_t i = 0;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j) {
        const std::int32_t next = at(static_cast<std::size_t>(f), static_cast<std::size_t>(w[i]));
        if (next == kUndefined) break;
        f = next;
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i) {
        const std::int32_t next =
            at(static_cast<std::size_t>(b), inverse(static_cast<std::size_t>(w[j])));
        if (next == kUndefined) break;
        b = next;
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        const auto x = static_cast<std::size_t>(w[i]);
        at(static_cast<std::size_t>(f), x) = b;
        at(static_cast<std::size_t>(b), inverse(x)) = f;
        return;
      }
      define(f, static_cast<std::size_t>(w[i]));
    }
  }

  int rep(int c) {
    int root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      const int next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(int k, int l) {
    const int a = rep(k);
    const int b = rep(l);
    if (a == b) return;
    const int lo = std::min(a, b);
    const int hi = std::max(a, b);
    parent_[hi] = lo;
    --alive_count_;
    ++collapsed_;
    queue_.push_back(hi);
  }

  void coincidence(int a, int b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t q = 0; q < queue_.size(); ++q) {
      const int gamma = queue_[q];
      for (std::size_t x = 0; x < columns_; ++x) {
        const std::int32_t delta = at(static_cast<std::size_t>(gamma), x);
        if (delta == kUndefined) continue;
        at(static_cast<std::size_t>(delta), inverse(x)) = kUndefined;
        const int mu = rep(gamma);
        const int nu = rep(delta);
        const std::int32_t mu_x = at(static_cast<std::size_t>(mu), x);
        const std::int32_t nu_inv = at(static_cast<std::size_t>(nu), inverse(x));
        if (mu_x != kUndefined) {
          merge(nu, mu_x);
        } else if (nu_inv != kUndefined) {
          merge(mu, nu_inv);
        } else {
          at(static_cast<std::size_t>(mu), x) = nu;
          at(static_cast<std::size_t>(nu), inverse(x)) = mu;
        }
      }
    }
  }

  // Renumbers live cosets in order once dead rows dominate the table.
  // Only called between cosets of the main loop, when no coincidence is
  // pending; `alpha` is remapped to the first live coset at or after it.
  void maybe_compact(std::size_t& alpha) {
    const std::size_t rows = parent_.size();
    if (rows < 4096 || alive_count_ * 2 > rows) return;
    std::vector<std::int32_t> renumber(rows, kUndefined);
    std::int32_t next = 0;
    std::size_t new_alpha = static_cast<std::size_t>(-1);
    for (std::size_t c = 0; c < rows; ++c) {
      if (!alive(c)) continue;
      if (c >= alpha && new_alpha == static_cast<std::size_t>(-1)) {
        new_alpha = static_cast<std::size_t>(next);
      }
      renumber[c] = next++;
    }
    std::vector<std::int32_t> table(static_cast<std::size_t>(next) * columns_);
    for (std::size_t c = 0; c < rows; ++c) {
      if (renumber[c] == kUndefined) continue;
      for (std::size_t x = 0; x < columns_; ++x) {
        const std::int32_t e = at(c, x);
        table[static_cast<std::size_t>(renumber[c]) * columns_ + x] =
            e == kUndefined ? kUndefined : renumber[static_cast<std::size_t>(e)];
      }
    }
    table_ = std::move(table);
    parent_.resize(static_cast<std::size_t>(next));
    for (std::int32_t c = 0; c < next; ++c) parent_[static_cast<std::size_t>(c)] = c;
    alpha = new_alpha == static_cast<std::size_t>(-1) ? static_cast<std::size_t>(next)
                                                      : new_alpha;
  }

  CosetTable standardize() {
    std::vector<std::int32_t> order{0};
    std::vector<std::int32_t> number(parent_.size(), kUndefined);
    number[0] = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
      const auto c = static_cast<std::size_t>(order[k]);
      for (std::size_t x = 0; x < columns_; ++x) {
        const std::int32_t d = at(c, x);
        if (number[static_cast<std::size_t>(d)] == kUndefined) {
          number[static_cast<std::size_t>(d)] = static_cast<std::int32_t>(order.size());
          order.push_back(d);
        }
      }
    }
    std::vector<std::int32_t> entries(order.size() * columns_);
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (std::size_t x = 0; x < columns_; ++x) {
        entries[k * columns_ + x] =
            number[static_cast<std::size_t>(at(static_cast<std::size_t>(order[k]), x))];
      }
    }
    return CosetTable(generators_, std::move(entries));
  }

  EnumerationStats stats() const {
    EnumerationStats s;
    s.defined = defined_;
    s.max_alive = max_alive_;
    s.collapsed = collapsed_;
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return s;
  }

  std::vector<Letter> generators_;
  std::size_t columns_;
  EnumerationLimits limits_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::vector<int> queue_;
  std::size_t alive_count_ = 0;
  std::size_t defined_ = 0;
  std::size_t max_alive_ = 0;
  std::size_t collapsed_ = 0;
};

}  // namespace

EnumerationResult enumerate(const Presentation& p, const std::vector<Word>& subgroup,
                            const EnumerationLimits& limits) {
  if (limits.max_cosets < 1) throw std::invalid_argument("max_cosets must be >= 1");
  Enumerator e(p, limits);
  std::vector<std::vector<int>> encoded;
  for (const auto& w : subgroup) encoded.push_back(e.encode(w));
  return e.run(encoded);
}

bool verify_table(const CosetTable& table, const Presentation& p,
                  const std::vector<Word>& subgroup) {
  if (table.generators() != p.generators) return false;
  const std::size_t index = table.index();
  for (std::size_t c = 0; c < index; ++c) {
    for (Letter g : p.generators) {
      const std::size_t d = table.act(c, g);
      if (d >= index || table.act(d, g.inverse()) != c) return false;
    }
    for (const auto& r : p.relators) {
      if (table.trace(c, r) != c) return false;
    }
  }
  for (const auto& w : subgroup) {
    if (table.trace(0, w) != 0) return false;
  }
  return true;
}

}  // namespace emcg
