#include "emcg/dnb_action.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace emcg {

FreeAut::FreeAut(int n, std::vector<Word> images)
    : n_(n), images_(std::move(images)) {
  if (n < 3) throw std::invalid_argument("automorphisms need n >= 3");
  if (images_.size() != static_cast<std::size_t>(n - 1)) {
    throw std::invalid_argument("need one image per basis letter");
  }
}

FreeAut FreeAut::identity(int n) {
  std::vector<Word> images;
  for (int i = 1; i < n; ++i) images.push_back(Word({basis(i)}, Alphabet::free));
  return FreeAut(n, std::move(images));
}

std::size_t FreeAut::total_length() const {
  std::size_t total = 0;
  for (const auto& w : images_) total += w.size();
  return total;
}

Word FreeAut::apply(const Word& u) const {
  return substitute(u, images_, Alphabet::free);
}

namespace {

bool is_basis_letter(const Word& w, int i) {
  return w.size() == 1 && w[0] == basis(i);
}

}  // namespace

FreeAut compose(const FreeAut& f, const FreeAut& g) {
  if (f.n() != g.n()) throw std::invalid_argument("rank mismatch");
  std::vector<Word> images;
  images.reserve(g.images().size());
  for (int i = 1; i <= g.rank(); ++i) {
    const Word& gi = g.image(i);
    images.push_back(is_basis_letter(gi, i) ? f.image(i) : f.apply(gi));
  }
  return FreeAut(f.n(), std::move(images));
}

FreeAut inner(int n, const Word& w) {
  std::vector<Word> images;
  for (int i = 1; i < n; ++i) {
    images.push_back(conjugate(w, Word({basis(i)}, Alphabet::free)));
  }
  return FreeAut(n, std::move(images));
}

Word peripheral_word(int n) {
  std::vector<Letter> letters;
  for (int i = n - 1; i >= 1; --i) letters.push_back(basis(i, -1));
  return Word(letters, Alphabet::free);
}

namespace {

// Words over x1 .. xn; xn is replaced by the peripheral word.
Word eliminate_last(const std::vector<Letter>& letters, int n) {
  std::vector<Word> images;
  for (int i = 1; i < n; ++i) images.push_back(Word({basis(i)}, Alphabet::free));
  images.push_back(peripheral_word(n));
  return substitute(Word(letters, Alphabet::free), images, Alphabet::free);
}

// x_i -> x_i x_(i+1) x_i^-1, x_(i+1) -> x_i when `forward`; its inverse
// otherwise.
FreeAut half_twist(int n, int i, bool forward) {
  std::vector<std::vector<Letter>> raw;
  for (int j = 1; j <= n; ++j) raw.push_back({basis(j)});
  const Letter xi = basis(i);
  const Letter xj = basis(i + 1);
  if (forward) {
    raw[i - 1] = {xi, xj, xi.inverse()};
    raw[i] = {xi};
  } else {
    raw[i - 1] = {xj};
    raw[i] = {xj.inverse(), xi, xj};
  }
  std::vector<Word> images;
  for (int j = 1; j < n; ++j) images.push_back(eliminate_last(raw[j - 1], n));
  return FreeAut(n, std::move(images));
}

struct ReflectionCandidate {
  const char* formula;
  // Conjugator c_i as a basis word.
  Word (*conjugator)(int i, int n);
};

Word prefix(int i, int /*n*/) {
  std::vector<Letter> l;
  for (int j = 1; j < i; ++j) l.push_back(basis(j));
  return Word(l, Alphabet::free);
}
Word reversed_prefix(int i, int /*n*/) {
  std::vector<Letter> l;
  for (int j = i - 1; j >= 1; --j) l.push_back(basis(j));
  return Word(l, Alphabet::free);
}
Word suffix(int i, int n) {
  std::vector<Letter> l;
  for (int j = i + 1; j < n; ++j) l.push_back(basis(j));
  return Word(l, Alphabet::free);
}
Word reversed_suffix(int i, int n) {
  std::vector<Letter> l;
  for (int j = n - 1; j > i; --j) l.push_back(basis(j));
  return Word(l, Alphabet::free);
}

constexpr ReflectionCandidate kReflectionCandidates[] = {
    {"c_i = 1", [](int, int) { return Word::identity(Alphabet::free); }},
    {"c_i = x1 ... x(i-1)", prefix},
    {"c_i = x(i-1) ... x1", reversed_prefix},
    {"c_i = (x1 ... x(i-1))^-1", [](int i, int n) { return invert(prefix(i, n)); }},
    {"c_i = (x(i-1) ... x1)^-1",
     [](int i, int n) { return invert(reversed_prefix(i, n)); }},
    {"c_i = x(i+1) ... x(n-1)", suffix},
    {"c_i = x(n-1) ... x(i+1)", reversed_suffix},
    {"c_i = (x(i+1) ... x(n-1))^-1", [](int i, int n) { return invert(suffix(i, n)); }},
    {"c_i = (x(n-1) ... x(i+1))^-1",
     [](int i, int n) { return invert(reversed_suffix(i, n)); }},
};

FreeAut reflection_candidate(const ReflectionCandidate& cand, int n) {
  std::vector<Word> images;
  for (int i = 1; i < n; ++i) {
    images.push_back(
        conjugate(cand.conjugator(i, n), Word({basis(i, -1)}, Alphabet::free)));
  }
  return FreeAut(n, std::move(images));
}

std::size_t slot(Letter g) {
  if (g.is_reflection()) return 0;
  return static_cast<std::size_t>(2 * g.index - (g.sign > 0 ? 1 : 0));
}

}  // namespace

ActionModel::ActionModel(int n) : n_(n) {
  if (n < 3) throw std::invalid_argument("action needs n >= 3");
  const Presentation oriented = build_presentation(n, Flavor::oriented);

  auto install_sigmas = [&](SigmaConvention convention) {
    generators_.assign(1, FreeAut::identity(n));
    for (int i = 1; i < n; ++i) {
      const bool forward = convention == SigmaConvention::standard;
      generators_.push_back(half_twist(n, i, forward));
      generators_.push_back(half_twist(n, i, !forward));
    }
    sigma_convention_ = convention;
  };
  auto relators_pass = [&](const std::vector<Word>& relators) {
    for (const auto& r : relators) {
      if (!is_inner(word_to_aut(r))) return false;
    }
    return true;
  };

  bool sigma_ok = false;
  for (auto convention : {SigmaConvention::standard, SigmaConvention::mirrored}) {
    install_sigmas(convention);
    if (relators_pass(oriented.relators)) {
      sigma_ok = true;
      break;
    }
  }
  if (!sigma_ok) {
    throw std::logic_error("no half-twist convention satisfies the relators");
  }

  const Presentation extended = build_presentation(n, Flavor::extended);
  std::vector<Word> reflection_relators;
  for (const auto& r : extended.relators) {
    if (count_reflections(r) > 0) reflection_relators.push_back(r);
  }
  const Word xn = peripheral_word(n);
  for (const auto& cand : kReflectionCandidates) {
    FreeAut t = reflection_candidate(cand, n);
    if (!(compose(t, t) == FreeAut::identity(n))) continue;
    if (!solve_conjugacy(t.apply(xn), invert(xn))) continue;
    generators_[0] = std::move(t);
    if (relators_pass(reflection_relators)) {
      reflection_formula_ = std::string("t: x_i -> c_i x_i^-1 c_i^-1, ") + cand.formula;
      return;
    }
  }
  throw std::logic_error("no reflection candidate satisfies the relators");
}

std::string ActionModel::describe() const {
  std::ostringstream out;
  out << "n=" << n_ << " sigma: "
      << (sigma_convention_ == SigmaConvention::standard
              ? "x_i -> x_i x_(i+1) x_i^-1, x_(i+1) -> x_i"
              : "x_i -> x_(i+1), x_(i+1) -> x_(i+1)^-1 x_i x_(i+1)")
      << "; " << reflection_formula_;
  return out.str();
}

const FreeAut& ActionModel::generator(Letter g) const {
  if (!g.is_reflection() && (g.index < 1 || g.index >= n_)) {
    throw std::out_of_range("generator index out of range");
  }
  return generators_[slot(g)];
}

FreeAut ActionModel::word_to_aut(const Word& u, const ActionLimits& limits) const {
  FreeAut result = FreeAut::identity(n_);
  for (Letter g : u) {
    result = compose(result, generator(g));
    if (result.total_length() > limits.max_image_length) {
      throw ResourceError("automorphism image length exceeds " +
                          std::to_string(limits.max_image_length));
    }
  }
  return result;
}

const ActionModel& action_model(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<ActionModel>> models;
  std::lock_guard lock(mutex);
  auto& slot = models[n];
  if (!slot) slot = std::make_unique<ActionModel>(n);
  return *slot;
}

FreeAut generator_aut(Letter g, int n) { return action_model(n).generator(g); }

FreeAut word_to_aut(const Word& u, int n, const ActionLimits& limits) {
  return action_model(n).word_to_aut(u, limits);
}

namespace {

// Leading exponent of letter x_i in w: w = x_i^p v with v not starting
// with x_i^(+-1).
int leading_power(const Word& w, int i) {
  int p = 0;
  for (Letter l : w) {
    if (l.index != i) break;
    p += l.sign;
  }
  return p;
}

}  // namespace

std::optional<Word> is_inner(const FreeAut& phi) {
  const Word x1({basis(1)}, Alphabet::free);
  const auto cr = cyclic_reduce(phi.image(1));
  if (!(cr.core == x1)) return std::nullopt;

  // phi(x1) = c x1 c^-1, so any conjugator is c x1^k; the image of x2
  // pins k down.
  Word w = cr.conjugator;
  if (phi.rank() >= 2) {
    const Word inside = conjugate(invert(w), phi.image(2));
    const int k = leading_power(inside, 1);
    w = w * power(x1, k);
  }
  for (int i = 1; i <= phi.rank(); ++i) {
    if (!(phi.image(i) == conjugate(w, Word({basis(i)}, Alphabet::free)))) {
      return std::nullopt;
    }
  }
  return w;
}

std::optional<Word> equality_witness(const Word& u, const Word& v, int n,
                                     const ActionLimits& limits) {
  return is_inner(word_to_aut(u * invert(v), n, limits));
}

bool equal_in_group(const Word& u, const Word& v, int n,
                    const ActionLimits& limits) {
  return equality_witness(u, v, n, limits).has_value();
}

std::optional<int> order_of(const Word& u, int n, int cap,
                            const ActionLimits& limits) {
  if (cap <= 0) cap = 4 * n;
  const FreeAut step = word_to_aut(u, n, limits);
  FreeAut acc = step;
  for (int k = 1; k <= cap; ++k) {
    if (is_inner(acc)) return k;
    if (k == cap) break;
    acc = compose(acc, step);
    if (acc.total_length() > limits.max_image_length) {
      throw ResourceError("automorphism image length exceeds " +
                          std::to_string(limits.max_image_length));
    }
  }
  return std::nullopt;
}

FreeAut canonical_outer(const FreeAut& phi) {
  const int n = phi.n();
  const auto cr = cyclic_reduce(phi.image(1));
  FreeAut psi = compose(inner(n, invert(cr.conjugator)), phi);
  if (cr.core.size() == 1 && phi.rank() >= 2) {
    const int j = cr.core[0].index;
    const int p = leading_power(psi.image(2), j);
    if (p != 0) {
      psi = compose(inner(n, power(Word({basis(j)}, Alphabet::free), -p)), psi);
    }
  }
  return psi;
}

bool ValidationReport::all_passed() const {
  for (const auto& row : rows) {
    if (!row.passed) return false;
  }
  return true;
}

ValidationReport validate_action(int n, Flavor flavor) {
  const ActionModel& model = action_model(n);
  const Presentation p = build_presentation(n, flavor);
  ValidationReport report;
  report.n = n;
  report.convention = model.describe();
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    ValidationRow row;
    std::ostringstream id;
    id << "r" << (i < 10 ? "0" : "") << i;
    row.relator_id = id.str();
    row.relator_name = p.relator_names[i];
    row.relator = p.relators[i];
    row.witness = is_inner(model.word_to_aut(p.relators[i]));
    row.passed = row.witness.has_value();
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace emcg
