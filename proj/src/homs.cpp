#include "emcg/homs.hpp"

#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace emcg {

Perm::Perm(int n) : images_(static_cast<std::size_t>(n)) {
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() ||
        seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  }
  return Perm(std::move(inv));
}

Perm operator*(const Perm& f, const Perm& g) {
  if (f.size() != g.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> out(g.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = f.images_[static_cast<std::size_t>(g.images_[i])];
  }
  return Perm(std::move(out));
}

Perm Perm::transposition(int n, int i, int j) {
  Perm p(n);
  std::swap(p.images_.at(static_cast<std::size_t>(i - 1)),
            p.images_.at(static_cast<std::size_t>(j - 1)));
  return p;
}

std::string to_string(const Perm& p) {
  std::ostringstream out;
  std::vector<bool> done(static_cast<std::size_t>(p.size()), false);
  bool any = false;
  for (int start = 1; start <= p.size(); ++start) {
    if (done[static_cast<std::size_t>(start - 1)] || p(start) == start) continue;
    any = true;
    out << '(';
    int q = start;
    bool first = true;
    do {
      if (!first) out << ' ';
      first = false;
      out << q;
      done[static_cast<std::size_t>(q - 1)] = true;
      q = p(q);
    } while (q != start);
    out << ')';
  }
  return any ? out.str() : "()";
}

std::string to_string(GF2Vec v) {
  return "(" + std::to_string(v.s) + "," + std::to_string(v.t) + ")";
}

Mat2 Mat2::inverse() const {
  const std::int64_t dt = det();
  if (dt != 1 && dt != -1) throw std::domain_error("matrix not invertible over Z");
  return {d * dt, -b * dt, -c * dt, a * dt};
}

std::string to_string(const Mat2& m) {
  std::ostringstream out;
  out << "[[" << m.a << ',' << m.b << "],[" << m.c << ',' << m.d << "]]";
  return out.str();
}

std::string to_string(const ProjMat2& m) { return to_string(m.rep); }

Perm perm_image(const Word& u, int n) {
  Perm p(n);
  for (Letter l : u) {
    if (l.is_reflection()) continue;
    if (l.index < 1 || l.index >= n) throw std::invalid_argument("sigma index out of range");
    p = p * Perm::transposition(n, l.index, l.index + 1);
  }
  return p;
}

GF2Vec abelianization_image(const Word& u) {
  return {static_cast<std::uint8_t>(count_sigmas(u) % 2),
          static_cast<std::uint8_t>(count_reflections(u) % 2)};
}

ProjMat2 pgl2_image(const Word& u, const Pgl2Assignment& m) {
  Mat2 acc;
  for (Letter l : u) {
    Mat2 g;
    if (l.is_reflection()) {
      g = m.t;
    } else if (l.index == 1) {
      g = m.s1;
    } else if (l.index == 2) {
      g = m.s2;
    } else if (l.index == 3) {
      g = m.s3;
    } else {
      throw std::invalid_argument("pgl2 image is defined for n = 4 only");
    }
    acc = acc * (l.sign > 0 ? g : g.inverse());
  }
  return {acc};
}

bool validate_perm_hom(const Presentation& p) {
  return validate_hom<Perm>(
      p, [&](const Word& w) { return perm_image(w, p.n); },
      [](const Perm& q) { return q.is_identity(); });
}

bool validate_abelianization_hom(const Presentation& p) {
  return validate_hom<GF2Vec>(
      p, [](const Word& w) { return abelianization_image(w); },
      [](const GF2Vec& v) { return v == GF2Vec{}; });
}

bool validate_pgl2_hom(const Presentation& p, const Pgl2Assignment& assignment) {
  if (p.n != 4) return false;
  return validate_hom<ProjMat2>(
      p, [&](const Word& w) { return pgl2_image(w, assignment); },
      [](const ProjMat2& m) { return m.is_identity(); });
}

const Pgl2Assignment& pgl2_assignment() {
  static const Pgl2Assignment chosen = [] {
    const Presentation p = build_presentation(4, Flavor::extended);
    Pgl2Assignment candidate;
    const std::pair<Mat2, const char*> reflections[] = {
        {Mat2{1, 0, 0, -1}, "diag(1,-1)"},
        {Mat2{-1, 0, 0, 1}, "diag(-1,1)"},
    };
    for (const auto& [t, name] : reflections) {
      candidate.t = t;
      candidate.t_choice = name;
      if (validate_pgl2_hom(p, candidate)) return candidate;
    }
    throw std::logic_error("no reflection image satisfies the n = 4 relators");
  }();
  return chosen;
}

ProjMat2 pgl2_image(const Word& u) { return pgl2_image(u, pgl2_assignment()); }

bool span_gf2(const std::vector<GF2Vec>& vs) {
  // Two vectors span (Z/2)^2 iff some pair is independent.
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const GF2Vec u = vs[i];
      const GF2Vec v = vs[j];
      if ((u.s * v.t + u.t * v.s) % 2 == 1) return true;
    }
  }
  return false;
}

std::optional<Word> find_pgl2_preimage(const ProjMat2& target, int max_length) {
  const std::vector<Letter> alphabet{sigma(1),     sigma(1, -1), sigma(2), sigma(2, -1),
                                     sigma(3),     sigma(3, -1), reflection()};
  auto key = [](const ProjMat2& m) {
    // Canonical sign: first nonzero entry positive.
    Mat2 r = m.rep;
    const std::int64_t lead = r.a != 0 ? r.a : (r.b != 0 ? r.b : (r.c != 0 ? r.c : r.d));
    if (lead < 0) r = -r;
    return std::array<std::int64_t, 4>{r.a, r.b, r.c, r.d};
  };
  std::vector<std::pair<Word, ProjMat2>> frontier{{Word{}, ProjMat2{Mat2::identity()}}};
  std::set<std::array<std::int64_t, 4>> seen{key(frontier.front().second)};
  if (frontier.front().second == target) return Word{};
  const Pgl2Assignment& m = pgl2_assignment();
  for (int len = 1; len <= max_length; ++len) {
    std::vector<std::pair<Word, ProjMat2>> next;
    for (const auto& [w, img] : frontier) {
      for (Letter l : alphabet) {
        const Word extended = w * Word{l};
        if (extended.size() != static_cast<std::size_t>(len)) continue;
        const ProjMat2 e = img * pgl2_image(Word{l}, m);
        if (!seen.insert(key(e)).second) continue;
        if (e == target) return extended;
        next.emplace_back(extended, e);
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace emcg
