#include "emcg/properties.hpp"

#include <chrono>
#include <string>

#include "emcg/dnb_action.hpp"
#include "emcg/homs.hpp"
#include "emcg/presentation.hpp"

namespace emcg {

Word random_word(std::mt19937_64& rng, int n, int max_length) {
  std::uniform_int_distribution<int> length(0, max_length);
  std::uniform_int_distribution<int> index(0, n - 1);
  std::bernoulli_distribution positive(0.5);
  std::vector<Letter> letters(static_cast<std::size_t>(length(rng)));
  for (auto& l : letters) {
    const int i = index(rng);
    l = {i, positive(rng) ? 1 : -1};
  }
  return Word(letters);
}

Word plant_relator(std::mt19937_64& rng, const Word& u, int n) {
  const Presentation p = build_presentation(n, Flavor::extended);
  std::uniform_int_distribution<std::size_t> pick(0, p.relators.size() - 1);
  std::uniform_int_distribution<std::size_t> cut(0, u.size());
  const Word r = conjugate(random_word(rng, n, 3), p.relators[pick(rng)]);
  const std::size_t at = cut(rng);
  const auto letters = u.letters();
  const Word head(letters.subspan(0, at));
  const Word tail(letters.subspan(at));
  return head * r * tail;
}

namespace {

CheckResult make(std::string id, std::string statement, bool ok, std::string witness,
                 std::chrono::steady_clock::time_point start) {
  CheckResult r;
  r.id = std::move(id);
  r.statement = std::move(statement);
  r.status = ok ? CheckStatus::pass : CheckStatus::fail;
  r.witness = std::move(witness);
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                 .count();
  return r;
}

}  // namespace

CheckResults verify_properties(int n, const SampleConfig& sample, const HarnessConfig& config) {
  const std::string prefix = "n" + std::to_string(n) + ".prop.";
  std::mt19937_64 rng(sample.seed);
  CheckResults out;

  auto start = std::chrono::steady_clock::now();
  int equal_pairs = 0;
  int planted = 0;
  std::string sound_fail;
  std::string planted_fail;
  std::string reflexive_fail;
  std::string symmetric_fail;
  for (int i = 0; i < sample.pairs; ++i) {
    const Word u = random_word(rng, n, sample.max_length);
    const bool plant = i % 2 == 0;
    const Word v = plant ? plant_relator(rng, u, n) : random_word(rng, n, sample.max_length);
    const bool uv = equal_in_group(u, v, n, config.action);
    const bool vu = equal_in_group(v, u, n, config.action);
    if (uv) ++equal_pairs;
    if (plant) ++planted;
    const std::string pair = to_string(u) + " | " + to_string(v);
    if (uv && (perm_image(u, n) != perm_image(v, n) ||
               abelianization_image(u) != abelianization_image(v))) {
      if (sound_fail.empty()) sound_fail = pair;
    }
    if (plant && !uv && planted_fail.empty()) planted_fail = pair;
    if (uv != vu && symmetric_fail.empty()) symmetric_fail = pair;
    if (!equal_in_group(u, u, n, config.action) && reflexive_fail.empty()) {
      reflexive_fail = to_string(u);
    }
  }
  const std::string sizes = std::to_string(sample.pairs) + " pairs, " +
                            std::to_string(equal_pairs) + " equal, seed " +
                            std::to_string(sample.seed);
  out.push_back(make(prefix + "sound", "oracle equality implies equal permutation and psi' images",
                     sound_fail.empty(), sound_fail.empty() ? sizes : sound_fail, start));
  out.push_back(make(prefix + "planted", "words differing by a conjugated relator are equal",
                     planted_fail.empty(),
                     planted_fail.empty() ? std::to_string(planted) + " planted pairs" : planted_fail,
                     start));
  out.push_back(make(prefix + "reflexive", "oracle equality is reflexive on the sample",
                     reflexive_fail.empty(), reflexive_fail.empty() ? sizes : reflexive_fail, start));
  out.push_back(make(prefix + "symmetric", "oracle equality is symmetric on the sample",
                     symmetric_fail.empty(), symmetric_fail.empty() ? sizes : symmetric_fail, start));

  start = std::chrono::steady_clock::now();
  std::string hom_fail;
  for (int i = 0; i < sample.hom_pairs; ++i) {
    const Word u = random_word(rng, n, sample.max_length);
    const Word v = random_word(rng, n, sample.max_length);
    const FreeAut lhs = word_to_aut(u * v, n, config.action);
    const FreeAut rhs = compose(word_to_aut(u, n, config.action), word_to_aut(v, n, config.action));
    if (!(lhs == rhs) && hom_fail.empty()) hom_fail = to_string(u) + " | " + to_string(v);
  }
  out.push_back(make(prefix + "hom", "word_to_aut(uv) = word_to_aut(u) o word_to_aut(v)",
                     hom_fail.empty(),
                     hom_fail.empty() ? std::to_string(sample.hom_pairs) + " pairs" : hom_fail,
                     start));
  return out;
}

}  // namespace emcg
