#pragma once

// The affine apartment: walls M(alpha,k) = {alpha(v) + k = 0}, half-apartments,
// affine reflections and special points.

#include <vector>

#include "hpl/root_system.hpp"

namespace hpl {

struct Wall {
  RealRoot root;  // positive
  Integer level;

  /// M(alpha,k) = M(-alpha,-k): flips a negative root to its positive form.
  static Wall make(const RealRoot& a, const Integer& k) {
    if (a.positive()) return Wall{a, k};
    return Wall{-a, -k};
  }
  friend bool operator==(const Wall& a, const Wall& b) { return a.root == b.root && a.level == b.level; }
};

struct HalfApartment {
  RealRoot root;
  Integer level;
  bool open = false;
};

inline Rational wall_eval(const RootSystem& rs, const Wall& w, const VectorV& x) {
  return rs.eval(w.root, x) + Rational(w.level);
}

inline bool contains(const RootSystem& rs, const HalfApartment& d, const VectorV& x) {
  Rational v = rs.eval(d.root, x) + Rational(d.level);
  return d.open ? v > 0 : v >= 0;
}

/// r_{alpha,k}(y) = r_alpha(y) - k alpha^vee.
inline VectorV affine_reflect(const RootSystem& rs, const Wall& w, const VectorV& y) {
  VectorV out = rs.reflect(w.root, y);
  if (w.level != 0) out -= Rational(w.level) * rs.coroot_of(w.root);
  return out;
}

/// Translation by a vector of Q^vee (or any vector of V).
inline VectorV translate(const VectorV& y, const VectorV& by) { return y + by; }

inline bool is_special(const RootSystem& rs, const VectorV& x) {
  for (std::size_t i = 0; i < rs.rank(); ++i)
    if (!is_integer(rs.alpha(i, x))) return false;
  return true;
}

/// Walls through x whose (positive) root has height <= h.
inline std::vector<Wall> walls_through(const RootSystem& rs, const VectorV& x, long h) {
  std::vector<Wall> out;
  auto vals = rs.alpha_values(x);
  for (const auto& b : rs.positive_roots(h)) {
    Rational v = rs.eval(b, vals);
    if (is_integer(v)) out.push_back(Wall{b, Integer(-v.get_num())});
  }
  return out;
}

}  // namespace hpl
