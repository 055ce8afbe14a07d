#pragma once

// Galleries of chambers at a point z, positive foldings along true walls, the
// neg statistic, codim of decorated Hecke paths and the kappa/kappa* parameter
// pattern. Chambers at z are Weyl elements relative to the chamber germ of
// z + C_f.

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hpl/paths.hpp"

namespace hpl {

struct GalleryAtPoint {
  VectorV z;
  Word type;                          // i_1 .. i_n
  std::vector<WeylElement> chambers;  // d_0 .. d_n
  std::vector<bool> folds;            // step j (0-based) is a fold
  std::vector<bool> true_walls;       // wall of step j is true at z
  std::vector<RealRoot> walls;        // positive root of the wall of step j

  std::size_t size() const { return type.size(); }
  const WeylElement& end() const { return chambers.back(); }
  std::vector<int> fold_positions() const {
    std::vector<int> out;
    for (std::size_t j = 0; j < folds.size(); ++j)
      if (folds[j]) out.push_back(int(j) + 1);
    return out;
  }
};

namespace detail {

// Recomputes walls and trueness from the chambers.
inline void fill_walls(const RootSystem& rs, GalleryAtPoint& g) {
  g.walls.clear();
  g.true_walls.clear();
  auto zv = rs.alpha_values(g.z);
  for (std::size_t j = 0; j < g.type.size(); ++j) {
    RealRoot w = rs.act(g.chambers[j], rs.simple_root(g.type[j]));
    if (!w.positive()) w = -w;
    g.true_walls.push_back(is_integer(rs.eval(w, zv)));
    g.walls.push_back(std::move(w));
  }
}

inline void check_reduced(const RootSystem& rs, const Word& word) {
  if (rs.normalize(std::span<const int>(word)).length() != word.size())
    throw InvalidInput("gallery type " + detail::word_str(word) + " is not a reduced word");
}

// Would the step leave the side of d_0 (the chamber d_{j-1} lies on the side of c_0)?
inline bool ascending(const RootSystem& rs, const GalleryAtPoint& g, std::size_t j) {
  return rs.act(g.chambers[j], rs.simple_root(g.type[j])).positive();
}

}  // namespace detail

/// The unfolded gallery d_j = s_{i_1} ... s_{i_j}.
inline GalleryAtPoint minimal_gallery(const RootSystem& rs, const VectorV& z, const Word& word) {
  detail::check_reduced(rs, word);
  GalleryAtPoint g;
  g.z = z;
  g.type = word;
  g.chambers.push_back(rs.identity());
  for (int i : word) g.chambers.push_back(rs.multiply(g.chambers.back(), rs.generator(i)));
  g.folds.assign(word.size(), false);
  detail::fill_walls(rs, g);
  return g;
}

/// The gallery of the given type that folds exactly at the marked steps.
inline GalleryAtPoint gallery_with_folds(const RootSystem& rs, const VectorV& z, const Word& word,
                                         const std::vector<bool>& folds) {
  detail::check_reduced(rs, word);
  GalleryAtPoint g;
  g.z = z;
  g.type = word;
  g.folds = folds;
  g.chambers.push_back(rs.identity());
  for (std::size_t j = 0; j < word.size(); ++j)
    g.chambers.push_back(folds[j] ? g.chambers.back() : rs.multiply(g.chambers.back(), rs.generator(word[j])));
  detail::fill_walls(rs, g);
  return g;
}

/// Every fold sits on a true wall and keeps the gallery on the side of d_0.
inline bool is_positively_folded(const RootSystem& rs, const GalleryAtPoint& g) {
  for (std::size_t j = 0; j < g.size(); ++j)
    if (g.folds[j] && (!g.true_walls[j] || !detail::ascending(rs, g, j))) return false;
  return true;
}

/// Steps whose wall is true and separates d_j from d_0.
inline long neg_count(const RootSystem& rs, const GalleryAtPoint& g) {
  long n = 0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (!g.true_walls[j]) continue;
    if (!rs.act(rs.inverse(g.chambers[j + 1]), g.walls[j]).positive()) ++n;
  }
  return n;
}

/// Folds g successively along the chain roots: beta_k is folded at a crossing
/// of its wall that leaves the side of c_0, later chambers are reflected by
/// r_{beta_k}. Fold positions are tried from the last crossing backwards
/// until the result is positively folded.
inline GalleryAtPoint fold_gallery(const RootSystem& rs, const GalleryAtPoint& g, const ChainCertificate& chain) {
  auto zv = rs.alpha_values(g.z);
  std::optional<GalleryAtPoint> result;
  int failed = 0;
  std::string why;
  std::function<bool(const GalleryAtPoint&, std::size_t)> rec = [&](const GalleryAtPoint& cur, std::size_t k) {
    if (k == chain.roots.size()) {
      if (!is_positively_folded(rs, cur)) return false;
      result = cur;
      return true;
    }
    const RealRoot& b = chain.roots[k];
    if (!is_integer(rs.eval(b, zv))) {
      failed = int(k) + 1;
      why = "wall of beta_" + std::to_string(k + 1) + " is not a true wall at z";
      return false;
    }
    if (rs.act(rs.inverse(cur.end()), b).positive()) {
      failed = std::max(failed, int(k) + 1);
      why = "beta_" + std::to_string(k + 1) + " does not separate c_0 from the end chamber";
      return false;
    }
    for (std::size_t j = cur.size(); j-- > 0;) {
      if (cur.folds[j] || !(cur.walls[j] == b) || !detail::ascending(rs, cur, j)) continue;
      GalleryAtPoint next = cur;
      WeylElement r = rs.multiply(rs.multiply(cur.chambers[j], rs.generator(cur.type[j])), rs.inverse(cur.chambers[j]));
      for (std::size_t m = j + 1; m < next.chambers.size(); ++m) next.chambers[m] = rs.multiply(r, cur.chambers[m]);
      next.folds[j] = true;
      detail::fill_walls(rs, next);
      if (rec(next, k + 1)) return true;
    }
    if (failed < int(k) + 1) {
      failed = int(k) + 1;
      why = "no positive fold position for beta_" + std::to_string(k + 1);
    }
    return false;
  };
  if (!rec(g, 0)) throw FoldNotApplicable(failed ? failed : 1, why.empty() ? "fold not applicable" : why);
  return *result;
}

/// A Hecke path with one gallery per interior breakpoint.
struct DecoratedHeckePath {
  LambdaPath base;
  std::vector<GalleryAtPoint> galleries;
};

/// Decoration from longest Hecke chains: at each breakpoint the minimal gallery
/// of the normal form of w_-(t) folded along a longest chain to w_+(t).
inline DecoratedHeckePath decorate(const RootSystem& rs, const LambdaPath& p, long h) {
  auto v = check_hecke(rs, p, h, true);
  if (!v.ok) throw NotHecke(v.reason);
  DecoratedHeckePath d{p, {}};
  for (std::size_t j = 1; j < p.segments(); ++j) {
    auto z = p.eval(p.breakpoints()[j]);
    auto g = minimal_gallery(rs, z, p.directions()[j - 1].element.word());
    d.galleries.push_back(fold_gallery(rs, g, v.certificates[j - 1]));
  }
  return d;
}

/// All positively folded galleries at the breakpoint with index j (1-based
/// among interior breakpoints) of type NF(w_-) ending in the coset of w_+.
inline std::vector<GalleryAtPoint> all_decorations_at(const RootSystem& rs, const LambdaPath& p, std::size_t j) {
  const auto& wm = p.directions()[j - 1].element;
  auto z = p.eval(p.breakpoints()[j]);
  const Word& word = wm.word();
  if (word.size() > 20) throw InvalidInput("gallery too long for exhaustive decoration");
  std::vector<GalleryAtPoint> out;
  for (std::size_t mask = 0; mask < (std::size_t(1) << word.size()); ++mask) {
    std::vector<bool> folds(word.size());
    for (std::size_t k = 0; k < word.size(); ++k) folds[k] = mask >> k & 1;
    auto g = gallery_with_folds(rs, z, word, folds);
    if (!is_positively_folded(rs, g)) continue;
    if (rs.act(g.end(), p.base()) != p.velocities()[j]) continue;
    out.push_back(std::move(g));
  }
  return out;
}

/// codim(pi~) = l_{pi(0)}(w_+(0)) + sum_{0<t<1} neg(delta_t); away from the
/// breakpoints delta_t is the minimal gallery, whose neg is l_{pi(t)}(w(t)).
inline long codim_tilde(const RootSystem& rs, const DecoratedHeckePath& d, long h) {
  const auto& p = d.base;
  if (d.galleries.size() + 1 != p.segments())
    throw InvalidInput("need one gallery per interior breakpoint");
  long total = stats(rs, p, h).codim;
  for (std::size_t j = 1; j < p.segments(); ++j) {
    const auto& g = d.galleries[j - 1];
    auto z = p.eval(p.breakpoints()[j]);
    if (g.z != z) throw InvalidInput("gallery base point differs from the breakpoint");
    if (!(rs.normalize(std::span<const int>(g.type)) == p.directions()[j - 1].element))
      throw InvalidInput("gallery type is not a reduced word of w_-(t)");
    if (rs.act(g.end(), p.base()) != p.velocities()[j])
      throw InvalidInput("gallery does not end in the chamber of the outgoing direction");
    if (!is_positively_folded(rs, g)) throw InvalidInput("gallery is not positively folded along true walls");
    total -= long(rs.relative_length(z, p.directions()[j].element, h));
    total += neg_count(rs, g);
  }
  return total;
}

enum class Factor { Kappa, KappaStar };

inline const char* to_string(Factor f) { return f == Factor::Kappa ? "k" : "k*"; }

struct PatternGroup {
  Rational t;
  long n = 0;
};

struct ParameterPattern {
  long N = 0;
  std::vector<Factor> factors;
  std::vector<PatternGroup> groups;  // decreasing t
};

/// Walks the path from its end backwards; every t with n_t = l_{pi(t)}(w_-(t)) > 0
/// contributes one factor per true step of the minimal gallery of w_-(t).
inline ParameterPattern parameter_pattern(const RootSystem& rs, const LambdaPath& p, long h) {
  auto v = check_hecke(rs, p, h, true);
  if (!v.ok) throw NotHecke(v.reason);
  std::set<Rational> times;
  for (std::size_t j = 0; j < p.segments(); ++j) {
    const auto& a0 = p.breakpoints()[j];
    const auto& a1 = p.breakpoints()[j + 1];
    auto inv = rs.inversion_set(p.directions()[j].element);
    rs.check_heights(inv, h);
    auto v0 = rs.alpha_values(p.eval(a0)), v1 = rs.alpha_values(p.eval(a1));
    for (const auto& b : inv) {
      Rational b0 = rs.eval(b, v0), b1 = rs.eval(b, v1);  // b1 < b0
      for (Integer k = ceil_of(b1); Rational(k) < b0; ++k) times.insert(a0 + (b0 - Rational(k)) / (b0 - b1) * (a1 - a0));
    }
  }
  ParameterPattern pat;
  for (auto it = times.rbegin(); it != times.rend(); ++it) {
    const Rational& t = *it;
    auto z = p.eval(t);
    std::size_t seg = p.left_segment(t);
    auto g = minimal_gallery(rs, z, p.directions()[seg].element.word());
    std::vector<bool> starred(g.size(), false);
    if (t < 1 && p.breakpoints()[seg + 1] == t) {
      auto folded = fold_gallery(rs, g, v.certificates[seg]);
      starred = folded.folds;
    }
    PatternGroup grp{t, 0};
    for (std::size_t k = 0; k < g.size(); ++k)
      if (g.true_walls[k]) {
        pat.factors.push_back(starred[k] ? Factor::KappaStar : Factor::Kappa);
        ++grp.n;
      }
    if (grp.n > 0) pat.groups.push_back(grp);
  }
  pat.N = long(pat.factors.size());
  return pat;
}

}  // namespace hpl
