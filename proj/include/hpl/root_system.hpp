#pragma once

// Root data of a Kac-Moody matrix: realization, real roots, the vectorial Weyl
// group with ShortLex normal forms, Bruhat order, parabolic cosets and the Tits
// cone.
//
// Weyl group elements are identified through the "numbers game": for w in W^v
// the integer vector (alpha_j(w.rho_check))_j, where alpha_j(rho_check) = 1 for
// all j, determines w, and its negative entries are exactly the left descents
// of w. Repeatedly applying the smallest left descent yields the ShortLex
// smallest reduced word.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hpl/errors.hpp"
#include "hpl/linalg.hpp"
#include "hpl/rational.hpp"

namespace hpl {

using IntMatrix = std::vector<std::vector<std::int64_t>>;
using Word = std::vector<int>;

namespace detail {

inline std::int64_t sub_mul(std::int64_t x, std::int64_t a, std::int64_t y) {
  std::int64_t p, r;
  if (__builtin_mul_overflow(a, y, &p) || __builtin_sub_overflow(x, p, &r))
    throw Error("integer overflow in Weyl group arithmetic");
  return r;
}

inline std::string word_str(const Word& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i] + 1);
  }
  return s + ")";
}

}  // namespace detail

/// A validated generalized Cartan matrix, entries a_ij = alpha_j(alpha_i^vee).
class KacMoodyMatrix {
 public:
  KacMoodyMatrix() = default;

  /// Checks the three axioms and throws NotGCM naming the first violation.
  static KacMoodyMatrix validate(IntMatrix entries) {
    const std::size_t n = entries.size();
    if (n == 0) throw InvalidInput("Kac-Moody matrix must be non-empty");
    for (const auto& row : entries)
      if (row.size() != n) throw InvalidInput("Kac-Moody matrix must be square");
    for (std::size_t i = 0; i < n; ++i)
      if (entries[i][i] != 2)
        throw NotGCM(int(i), int(i), 1,
                     "axiom (i) violated: a[" + std::to_string(i + 1) + "][" + std::to_string(i + 1) +
                         "] = " + std::to_string(entries[i][i]) + " != 2");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (entries[i][j] > 0)
          throw NotGCM(int(i), int(j), 2,
                       "axiom (ii) violated: a[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) +
                           "] = " + std::to_string(entries[i][j]) + " > 0");
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if ((entries[i][j] == 0) != (entries[j][i] == 0))
          throw NotGCM(int(i), int(j), 3,
                       "axiom (iii) violated: a[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) +
                           "] = " + std::to_string(entries[i][j]) + " but a[" + std::to_string(j + 1) + "][" +
                           std::to_string(i + 1) + "] = " + std::to_string(entries[j][i]));
    KacMoodyMatrix m;
    m.a_ = std::move(entries);
    return m;
  }

  std::size_t size() const { return a_.size(); }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }
  const IntMatrix& entries() const { return a_; }

  KacMoodyMatrix transposed() const {
    IntMatrix t(size(), std::vector<std::int64_t>(size()));
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) t[j][i] = a_[i][j];
    KacMoodyMatrix m;
    m.a_ = std::move(t);
    return m;
  }

  friend bool operator==(const KacMoodyMatrix&, const KacMoodyMatrix&) = default;

 private:
  IntMatrix a_;
};

enum class GcmType { Finite, Affine, Indefinite };

inline const char* to_string(GcmType t) {
  switch (t) {
    case GcmType::Finite: return "finite";
    case GcmType::Affine: return "affine";
    default: return "indefinite";
  }
}

/// A real root, stored by its coefficients over the simple roots together with
/// the coefficients of its coroot over the simple coroots.
struct RealRoot {
  std::vector<std::int64_t> coeffs;
  std::vector<std::int64_t> coroot;

  long height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0L); }
  bool positive() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](auto c) { return c >= 0; });
  }
  RealRoot operator-() const {
    RealRoot r = *this;
    for (auto& c : r.coeffs) c = -c;
    for (auto& c : r.coroot) c = -c;
    return r;
  }
  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(coeffs[i]);
    }
    return s + "]";
  }
  friend bool operator==(const RealRoot& a, const RealRoot& b) { return a.coeffs == b.coeffs; }
  /// Height first, then lexicographic on coefficients.
  friend bool operator<(const RealRoot& a, const RealRoot& b) {
    auto ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a.coeffs < b.coeffs;
  }
};

/// An element of W^v in ShortLex normal form. `signature` is the numbers-game
/// vector (alpha_j(w.rho_check))_j, a faithful invariant of the element.
class WeylElement {
 public:
  WeylElement() = default;
  const Word& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  bool is_identity() const { return word_.empty(); }
  const std::vector<std::int64_t>& signature() const { return sig_; }
  bool has_left_descent(int i) const { return sig_[i] < 0; }
  std::string str() const { return word_.empty() ? "e" : detail::word_str(word_); }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.word_ == b.word_; }
  friend bool operator<(const WeylElement& a, const WeylElement& b) {
    if (a.word_.size() != b.word_.size()) return a.word_.size() < b.word_.size();
    return a.word_ < b.word_;
  }

 private:
  friend class RootSystem;
  Word word_;
  std::vector<std::int64_t> sig_;
};

/// The minimal-length representative of a class in W^v / W^v_lambda.
struct CosetRep {
  WeylElement element;
  VectorV lambda;

  std::size_t length() const { return element.length(); }
  friend bool operator==(const CosetRep& a, const CosetRep& b) {
    return a.element == b.element && a.lambda == b.lambda;
  }
};

enum class TitsVerdict { In, Out, Unknown };

struct TitsResult {
  TitsVerdict verdict = TitsVerdict::Unknown;
  std::optional<WeylElement> witness;  // set for In: act(witness, v) is dominant
  std::string reason;
};

class RootSystem {
 public:
  /// Realization used when only a matrix is given: Y = Z^(n + corank), the
  /// first n basis vectors are the simple coroots, and the extra ones are
  /// chosen greedily among the fundamental coweights so that the simple roots
  /// become linearly independent.
  static RootSystem from_gcm(const KacMoodyMatrix& a, std::vector<std::string> names = {}) {
    const std::size_t n = a.size();
    IntMatrix roots(n, std::vector<std::int64_t>(n));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) roots[j][i] = a(i, j);
    std::size_t r = linalg::rank(linalg::to_rational(roots));
    std::vector<std::size_t> extra;
    for (std::size_t k = 0; k < n && r < n; ++k) {
      auto trial = roots;
      for (std::size_t j = 0; j < n; ++j) trial[j].push_back(j == k ? 1 : 0);
      std::size_t r2 = linalg::rank(linalg::to_rational(trial));
      if (r2 > r) {
        roots = std::move(trial);
        r = r2;
        extra.push_back(k);
      }
    }
    const std::size_t dim = n + extra.size();
    IntMatrix coroots(n, std::vector<std::int64_t>(dim, 0));
    for (std::size_t i = 0; i < n; ++i) coroots[i][i] = 1;
    return RootSystem(a, std::move(roots), std::move(coroots), std::move(names));
  }

  RootSystem(KacMoodyMatrix a, IntMatrix simple_roots, IntMatrix simple_coroots,
             std::vector<std::string> names = {})
      : a_(std::move(a)), roots_(std::move(simple_roots)), coroots_(std::move(simple_coroots)) {
    n_ = a_.size();
    if (roots_.size() != n_ || coroots_.size() != n_)
      throw InvalidInput("need exactly one simple root and one simple coroot per index");
    dim_ = roots_[0].size();
    if (dim_ < n_) throw InvalidInput("rank of Y must be at least the size of the matrix");
    for (const auto& r : roots_)
      if (r.size() != dim_) throw InvalidInput("simple roots have inconsistent dimensions");
    for (const auto& r : coroots_)
      if (r.size() != dim_) throw InvalidInput("simple coroots have inconsistent dimensions");
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        std::int64_t v = 0;
        for (std::size_t k = 0; k < dim_; ++k) v += roots_[j][k] * coroots_[i][k];
        if (v != a_(i, j))
          throw InvalidInput("alpha_" + std::to_string(j + 1) + "(alpha_" + std::to_string(i + 1) +
                             "^vee) = " + std::to_string(v) + " but the matrix entry is " +
                             std::to_string(a_(i, j)));
      }
    if (linalg::rank(linalg::to_rational(roots_)) != n_)
      throw InvalidInput("simple roots are not linearly independent");
    if (linalg::rank(linalg::to_rational(coroots_)) != n_)
      throw InvalidInput("simple coroots are not linearly independent");
    names_ = names.empty() ? default_names() : std::move(names);
    if (names_.size() != n_) throw InvalidInput("names must list one entry per index");
    compute_symmetrizer();
    classify();
    compute_rho();
  }

  // ---- basic data ---------------------------------------------------------

  std::size_t rank() const { return n_; }
  std::size_t dim() const { return dim_; }
  const KacMoodyMatrix& gcm() const { return a_; }
  std::int64_t cartan(std::size_t i, std::size_t j) const { return a_(i, j); }
  const IntMatrix& simple_roots() const { return roots_; }
  const IntMatrix& simple_coroots() const { return coroots_; }
  const std::vector<std::string>& names() const { return names_; }
  GcmType type() const { return type_; }
  bool is_finite() const { return type_ == GcmType::Finite; }
  /// Positive integers d_i with d_i a_ij = d_j a_ji, smallest per component.
  const std::vector<Integer>& symmetrizer() const { return sym_; }
  /// Coefficients c of the null root delta = sum c_i alpha_i (affine type only).
  const std::vector<std::int64_t>& null_root() const { return null_; }
  /// Covector rho with rho(alpha_i^vee) = 1, in the dual basis of Y.
  const std::vector<Rational>& rho() const { return rho_; }

  VectorV zero() const { return VectorV(dim_); }
  VectorV coroot_vector(std::size_t i) const {
    return VectorV::from_ints(coroots_[i]);
  }
  /// The vector sum_i c_i alpha_i^vee.
  VectorV from_coroot_coords(const std::vector<Rational>& c) const {
    VectorV v(dim_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < dim_; ++k)
        if (coroots_[i][k] != 0) v[k] += c[i] * Rational(static_cast<long>(coroots_[i][k]));
    return v;
  }
  /// Coordinates of v over the simple coroots, if v lies in their span.
  std::optional<std::vector<Rational>> coroot_coords(const VectorV& v) const {
    linalg::Matrix m(dim_, std::vector<Rational>(n_));
    for (std::size_t k = 0; k < dim_; ++k)
      for (std::size_t i = 0; i < n_; ++i) m[k][i] = Rational(static_cast<long>(coroots_[i][k]));
    return linalg::solve(m, v.coords());
  }

  Rational alpha(std::size_t i, const VectorV& v) const {
    Rational s = 0;
    for (std::size_t k = 0; k < dim_; ++k)
      if (roots_[i][k] != 0) s += Rational(static_cast<long>(roots_[i][k])) * v[k];
    return s;
  }
  std::vector<Rational> alpha_values(const VectorV& v) const {
    std::vector<Rational> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = alpha(i, v);
    return out;
  }
  Rational rho_of(const VectorV& v) const {
    Rational s = 0;
    for (std::size_t k = 0; k < dim_; ++k) s += rho_[k] * v[k];
    return s;
  }
  bool is_dominant(const VectorV& v) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (alpha(i, v) < 0) return false;
    return true;
  }
  bool in_lattice(const VectorV& v) const { return v.is_integral(); }

  /// r_i(v) = v - alpha_i(v) alpha_i^vee.
  VectorV simple_reflection(std::size_t i, VectorV v) const {
    check_index(i);
    Rational a = alpha(i, v);
    if (a != 0)
      for (std::size_t k = 0; k < dim_; ++k)
        if (coroots_[i][k] != 0) v[k] -= a * Rational(static_cast<long>(coroots_[i][k]));
    return v;
  }

  // ---- real roots ---------------------------------------------------------

  RealRoot simple_root(std::size_t i) const {
    RealRoot r;
    r.coeffs.assign(n_, 0);
    r.coroot.assign(n_, 0);
    r.coeffs[i] = 1;
    r.coroot[i] = 1;
    return r;
  }
  /// <beta, alpha_j^vee>.
  std::int64_t pair_with_coroot(const RealRoot& b, std::size_t j) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n_; ++i) s += b.coeffs[i] * a_(j, i);
    return s;
  }
  RealRoot reflect_root(std::size_t j, RealRoot b) const {
    std::int64_t p = pair_with_coroot(b, j);
    b.coeffs[j] = detail::sub_mul(b.coeffs[j], p, 1);
    std::int64_t q = 0;
    for (std::size_t i = 0; i < n_; ++i) q += b.coroot[i] * a_(i, j);
    b.coroot[j] = detail::sub_mul(b.coroot[j], q, 1);
    return b;
  }
  Rational eval(const RealRoot& b, const std::vector<Rational>& alpha_vals) const {
    Rational s = 0;
    for (std::size_t i = 0; i < n_; ++i)
      if (b.coeffs[i] != 0) s += Rational(static_cast<long>(b.coeffs[i])) * alpha_vals[i];
    return s;
  }
  Rational eval(const RealRoot& b, const VectorV& v) const { return eval(b, alpha_values(v)); }
  VectorV coroot_of(const RealRoot& b) const {
    std::vector<Rational> c(n_);
    for (std::size_t i = 0; i < n_; ++i) c[i] = Rational(static_cast<long>(b.coroot[i]));
    return from_coroot_coords(c);
  }
  /// r_beta(v) = v - beta(v) beta^vee.
  VectorV reflect(const RealRoot& b, const VectorV& v) const {
    Rational s = eval(b, v);
    if (s == 0) return v;
    return v - s * coroot_of(b);
  }

  /// All positive real roots of height <= h, each once, ordered by height then
  /// lexicographically. Non-simple positive roots are reached from simple ones
  /// by height-increasing simple reflections.
  std::vector<RealRoot> positive_roots(long h) const {
    if (h < 1) throw InvalidInput("height bound must be at least 1");
    std::map<std::vector<std::int64_t>, RealRoot> seen;
    std::vector<RealRoot> frontier;
    for (std::size_t i = 0; i < n_; ++i) {
      auto r = simple_root(i);
      seen.emplace(r.coeffs, r);
      frontier.push_back(r);
    }
    while (!frontier.empty()) {
      std::vector<RealRoot> next;
      for (const auto& b : frontier)
        for (std::size_t j = 0; j < n_; ++j) {
          if (pair_with_coroot(b, j) >= 0) continue;
          auto c = reflect_root(j, b);
          if (c.height() > h || seen.count(c.coeffs)) continue;
          seen.emplace(c.coeffs, c);
          next.push_back(std::move(c));
        }
      frontier = std::move(next);
    }
    std::vector<RealRoot> out;
    for (auto& [k, r] : seen) out.push_back(r);
    std::sort(out.begin(), out.end());
    return out;
  }

  // ---- Weyl group ---------------------------------------------------------

  WeylElement identity() const {
    WeylElement w;
    w.sig_.assign(n_, 1);
    return w;
  }

  /// Canonical (ShortLex) reduced word of the product of the given generators.
  WeylElement normalize(std::span<const int> word) const {
    std::vector<std::int64_t> x(n_, 1);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      check_index(*it);
      apply_sig(x, *it);
    }
    return reduce(std::move(x));
  }
  WeylElement normalize(std::initializer_list<int> word) const {
    Word w(word);
    return normalize(std::span<const int>(w));
  }
  WeylElement generator(int i) const { return normalize({i}); }

  WeylElement multiply(const WeylElement& u, const WeylElement& v) const {
    auto x = v.sig_;
    for (auto it = u.word_.rbegin(); it != u.word_.rend(); ++it) apply_sig(x, *it);
    return reduce(std::move(x));
  }
  WeylElement inverse(const WeylElement& w) const {
    Word r(w.word_.rbegin(), w.word_.rend());
    return normalize(std::span<const int>(r));
  }
  /// s_i w.
  WeylElement left_multiply(int i, const WeylElement& w) const {
    auto x = w.sig_;
    apply_sig(x, i);
    return reduce(std::move(x));
  }

  VectorV act(const WeylElement& w, VectorV v) const {
    for (auto it = w.word_.rbegin(); it != w.word_.rend(); ++it) v = simple_reflection(*it, std::move(v));
    return v;
  }
  RealRoot act(const WeylElement& w, RealRoot b) const {
    for (auto it = w.word_.rbegin(); it != w.word_.rend(); ++it) b = reflect_root(*it, std::move(b));
    return b;
  }

  /// beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}) for the normal form word:
  /// the positive roots sent to negative roots by w^{-1}.
  std::vector<RealRoot> inversion_set(const WeylElement& w) const {
    std::vector<RealRoot> out;
    out.reserve(w.length());
    for (std::size_t k = 0; k < w.word_.size(); ++k) {
      RealRoot b = simple_root(w.word_[k]);
      for (std::size_t m = k; m-- > 0;) b = reflect_root(w.word_[m], std::move(b));
      out.push_back(std::move(b));
    }
    return out;
  }

  /// Bruhat-Chevalley order via the lifting property: for a left descent s of
  /// w, u <= w iff su <= sw (s a descent of u) or u <= sw (otherwise).
  bool bruhat_leq(const WeylElement& u, const WeylElement& w) const {
    auto xu = u.sig_, xw = w.sig_;
    std::size_t lu = u.length(), lw = w.length();
    while (true) {
      if (lu > lw) return false;
      if (lw == 0) return lu == 0;
      if (lu == 0) return true;
      std::size_t s = 0;
      while (xw[s] >= 0) ++s;
      apply_sig(xw, int(s));
      --lw;
      if (xu[s] < 0) {
        apply_sig(xu, int(s));
        --lu;
      }
    }
  }

  /// All reduced words of w (finite; exponential in general, meant for small w).
  std::vector<Word> reduced_words(const WeylElement& w) const {
    std::vector<Word> out;
    Word cur;
    collect_reduced_words(w.sig_, w.length(), cur, out);
    return out;
  }

  // ---- parabolic cosets ---------------------------------------------------

  /// Minimal representative of w W_lambda for dominant lambda.
  CosetRep min_coset_rep(const WeylElement& w, const VectorV& lambda) const {
    if (!is_dominant(lambda)) throw NotDominant("lambda " + lambda.str() + " is not dominant");
    return coset_of_direction(act(w, lambda), lambda);
  }

  /// The coset u W_lambda with u(lambda) = d, by playing the numbers game on d.
  /// Throws InvalidInput if d is not in the orbit W.lambda.
  CosetRep coset_of_direction(const VectorV& d, const VectorV& lambda, std::size_t cap = 200000) const {
    auto [u, base] = dominant_with_word(d, cap);
    if (base != lambda)
      throw InvalidInput("vector " + d.str() + " is not in the Weyl orbit of " + lambda.str());
    return CosetRep{u, lambda};
  }

  /// (u, v0) with v0 = u^{-1}(d) dominant, u the ShortLex minimal element for
  /// which this holds. Fails after `cap` steps (outside the Tits cone).
  std::pair<WeylElement, VectorV> dominant_with_word(VectorV d, std::size_t cap = 200000) const {
    auto x = alpha_values(d);
    Word steps;
    while (true) {
      std::size_t i = 0;
      while (i < n_ && x[i] >= 0) ++i;
      if (i == n_) break;
      if (steps.size() >= cap) throw InvalidInput("vector " + d.str() + " does not reach the dominant chamber");
      steps.push_back(int(i));
      Rational xi = x[i];
      for (std::size_t j = 0; j < n_; ++j)
        if (a_(i, j) != 0) x[j] -= Rational(static_cast<long>(a_(i, j))) * xi;
      for (std::size_t k = 0; k < dim_; ++k)
        if (coroots_[i][k] != 0) d[k] -= xi * Rational(static_cast<long>(coroots_[i][k]));
    }
    return {normalize(std::span<const int>(steps)), std::move(d)};
  }

  /// Length of the minimal coset representative carrying lambda to d.
  std::size_t coset_length(const VectorV& d) const {
    auto x = alpha_values(d);
    std::size_t steps = 0;
    while (true) {
      std::size_t i = 0;
      while (i < n_ && x[i] >= 0) ++i;
      if (i == n_) return steps;
      if (++steps > 200000) throw InvalidInput("vector " + d.str() + " does not reach the dominant chamber");
      Rational xi = x[i];
      for (std::size_t j = 0; j < n_; ++j)
        if (a_(i, j) != 0) x[j] -= Rational(static_cast<long>(a_(i, j))) * xi;
    }
  }

  /// l_x(w) = #{beta in inversion_set(w) : beta(x) in Z}.
  std::size_t relative_length(const VectorV& x, const WeylElement& w, long h) const {
    auto inv = inversion_set(w);
    check_heights(inv, h);
    auto vals = alpha_values(x);
    std::size_t n = 0;
    for (const auto& b : inv)
      if (is_integer(eval(b, vals))) ++n;
    return n;
  }

  void check_heights(const std::vector<RealRoot>& roots, long h) const {
    long worst = 0;
    for (const auto& b : roots) worst = std::max(worst, b.height());
    if (worst > h) throw HeightBoundTooSmall(worst, h);
  }

  // ---- Tits cone ----------------------------------------------------------

  TitsResult tits_cone_membership(const VectorV& v, std::size_t step_cap) const {
    TitsResult res;
    auto game = [&](std::size_t cap) -> std::optional<WeylElement> {
      auto x = alpha_values(v);
      Word steps;
      while (true) {
        std::size_t i = 0;
        while (i < n_ && x[i] >= 0) ++i;
        if (i == n_) break;
        if (steps.size() >= cap) return std::nullopt;
        steps.push_back(int(i));
        Rational xi = x[i];
        for (std::size_t j = 0; j < n_; ++j)
          if (a_(i, j) != 0) x[j] -= Rational(static_cast<long>(a_(i, j))) * xi;
      }
      // s_{k} ... s_{1} v is dominant: the witness is the reversed step word.
      Word rev(steps.rbegin(), steps.rend());
      return normalize(std::span<const int>(rev));
    };
    auto vals = alpha_values(v);
    bool in_v0 = std::all_of(vals.begin(), vals.end(), [](const Rational& q) { return q == 0; });
    if (in_v0) {
      res.verdict = TitsVerdict::In;
      res.witness = identity();
      res.reason = "v lies in V_0";
      return res;
    }
    if (type_ == GcmType::Finite) {
      res.verdict = TitsVerdict::In;
      res.witness = game(std::numeric_limits<std::size_t>::max());
      res.reason = "finite type: the Tits cone is all of V";
      return res;
    }
    if (type_ == GcmType::Affine) {
      Rational d = 0;
      for (std::size_t i = 0; i < n_; ++i) d += Rational(static_cast<long>(null_[i])) * vals[i];
      if (d > 0) {
        res.verdict = TitsVerdict::In;
        res.witness = game(std::max<std::size_t>(step_cap, 1));
        if (!res.witness) {
          res.verdict = TitsVerdict::Unknown;
          res.reason = "delta(v) > 0 but the step cap was reached before a witness was found";
        } else {
          res.reason = "affine type: delta(v) > 0";
        }
        return res;
      }
      res.verdict = TitsVerdict::Out;
      res.reason = d < 0 ? "affine type: delta(v) < 0" : "affine type: delta(v) = 0 and v not in V_0";
      return res;
    }
    res.witness = game(step_cap);
    if (res.witness) {
      res.verdict = TitsVerdict::In;
      res.reason = "dominance steps reached the fundamental chamber";
    } else {
      res.verdict = TitsVerdict::Unknown;
      res.reason = "step cap reached";
    }
    return res;
  }

 private:
  void check_index(std::size_t i) const {
    if (i >= n_) throw InvalidInput("generator index " + std::to_string(i + 1) + " out of range");
  }

  void apply_sig(std::vector<std::int64_t>& x, int i) const {
    std::int64_t xi = x[i];
    for (std::size_t j = 0; j < n_; ++j)
      if (a_(i, j) != 0) x[j] = detail::sub_mul(x[j], a_(i, j), xi);
  }

  WeylElement reduce(std::vector<std::int64_t> x) const {
    WeylElement w;
    w.sig_ = x;
    while (true) {
      std::size_t i = 0;
      while (i < n_ && x[i] >= 0) ++i;
      if (i == n_) break;
      w.word_.push_back(int(i));
      apply_sig(x, int(i));
    }
    return w;
  }

  void collect_reduced_words(const std::vector<std::int64_t>& x, std::size_t len, Word& cur,
                             std::vector<Word>& out) const {
    if (len == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (x[i] >= 0) continue;
      auto y = x;
      apply_sig(y, int(i));
      cur.push_back(int(i));
      collect_reduced_words(y, len - 1, cur, out);
      cur.pop_back();
    }
  }

  std::vector<std::string> default_names() const {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n_; ++i) v.push_back("a" + std::to_string(i + 1));
    return v;
  }

  std::vector<std::vector<std::size_t>> components() const {
    std::vector<int> comp(n_, -1);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < n_; ++s) {
      if (comp[s] >= 0) continue;
      std::vector<std::size_t> members{s};
      comp[s] = int(out.size());
      for (std::size_t k = 0; k < members.size(); ++k)
        for (std::size_t j = 0; j < n_; ++j)
          if (comp[j] < 0 && a_(members[k], j) != 0) {
            comp[j] = comp[s];
            members.push_back(j);
          }
      std::sort(members.begin(), members.end());
      out.push_back(std::move(members));
    }
    return out;
  }

  void compute_symmetrizer() {
    std::vector<Rational> d(n_, 0);
    std::vector<Integer> out(n_);
    for (const auto& comp : components()) {
      d[comp[0]] = 1;
      std::vector<std::size_t> order{comp[0]};
      std::vector<bool> done(n_, false);
      done[comp[0]] = true;
      for (std::size_t k = 0; k < order.size(); ++k) {
        std::size_t i = order[k];
        for (std::size_t j = 0; j < n_; ++j) {
          if (i == j || a_(i, j) == 0) continue;
          Rational want = d[i] * Rational(static_cast<long>(a_(i, j))) / Rational(static_cast<long>(a_(j, i)));
          if (!done[j]) {
            d[j] = want;
            done[j] = true;
            order.push_back(j);
          } else if (d[j] != want) {
            throw NotSymmetrizable("the matrix is not symmetrizable (indices " + std::to_string(i + 1) +
                                   ", " + std::to_string(j + 1) + ")");
          }
        }
      }
      Integer l = 1;
      for (auto i : comp) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d[i].get_den_mpz_t());
      Integer g = 0;
      for (auto i : comp) {
        Rational s = d[i] * l;
        out[i] = s.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
      }
      for (auto i : comp) out[i] /= g;
    }
    sym_ = std::move(out);
  }

  static bool all_principal_minors_positive(const linalg::Matrix& m, bool allow_full_singular) {
    const std::size_t n = m.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
      linalg::Matrix sub;
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) idx.push_back(i);
      for (auto i : idx) {
        sub.emplace_back();
        for (auto j : idx) sub.back().push_back(m[i][j]);
      }
      Rational d = linalg::determinant(sub);
      bool full = idx.size() == n;
      if (full && allow_full_singular) {
        if (d != 0) return false;
      } else if (d <= 0) {
        return false;
      }
    }
    return true;
  }

  // An indecomposable symmetrizable GCM is of finite type iff all
  // principal minors are positive, affine iff det = 0 and all proper ones are.
  void classify() {
    auto comps = components();
    bool all_finite = true;
    for (const auto& c : comps) {
      linalg::Matrix sub;
      for (auto i : c) {
        sub.emplace_back();
        for (auto j : c) sub.back().emplace_back(static_cast<long>(a_(i, j)));
      }
      if (!all_principal_minors_positive(sub, false)) all_finite = false;
    }
    if (all_finite) {
      type_ = GcmType::Finite;
      return;
    }
    if (comps.size() == 1) {
      auto m = linalg::to_rational(a_.entries());
      if (all_principal_minors_positive(m, true)) {
        type_ = GcmType::Affine;
        auto ker = linalg::kernel(m);
        auto c = ker.at(0);
        Integer l = 1;
        for (auto& q : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        Integer g = 0;
        std::vector<Integer> ints;
        for (auto& q : c) {
          Rational s = q * l;
          ints.push_back(s.get_num());
          mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
        }
        int sign = ints[0] < 0 ? -1 : 1;
        for (auto& z : ints) null_.push_back(sign * Integer(z / g).get_si());
        return;
      }
    }
    type_ = GcmType::Indefinite;
  }

  void compute_rho() {
    linalg::Matrix m(n_, std::vector<Rational>(dim_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < dim_; ++k) m[i][k] = Rational(static_cast<long>(coroots_[i][k]));
    auto sol = linalg::solve(m, std::vector<Rational>(n_, Rational(1)));
    rho_ = *sol;  // coroots are independent, so a solution exists
  }

  KacMoodyMatrix a_;
  IntMatrix roots_, coroots_;
  std::vector<std::string> names_;
  std::size_t n_ = 0, dim_ = 0;
  GcmType type_ = GcmType::Indefinite;
  std::vector<Integer> sym_;
  std::vector<std::int64_t> null_;
  std::vector<Rational> rho_;
};

/// Common Cartan matrices.
namespace cartan {
inline KacMoodyMatrix A1() { return KacMoodyMatrix::validate({{2}}); }
inline KacMoodyMatrix A2() { return KacMoodyMatrix::validate({{2, -1}, {-1, 2}}); }
inline KacMoodyMatrix B2() { return KacMoodyMatrix::validate({{2, -2}, {-1, 2}}); }
inline KacMoodyMatrix G2() { return KacMoodyMatrix::validate({{2, -1}, {-3, 2}}); }
inline KacMoodyMatrix A1_affine() { return KacMoodyMatrix::validate({{2, -2}, {-2, 2}}); }
inline KacMoodyMatrix A2_affine() { return KacMoodyMatrix::validate({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}); }
/// Hyperbolic rank-2 matrix [[2,-3],[-3,2]].
inline KacMoodyMatrix H3() { return KacMoodyMatrix::validate({{2, -3}, {-3, 2}}); }

/// Parses names such as "A2", "B2", "G2", "A1^(1)".
inline std::optional<KacMoodyMatrix> by_name(const std::string& s) {
  if (s == "A1") return A1();
  if (s == "A2") return A2();
  if (s == "B2") return B2();
  if (s == "G2") return G2();
  if (s == "A1^(1)" || s == "A1~") return A1_affine();
  if (s == "A2^(1)" || s == "A2~") return A2_affine();
  if (s == "H3") return H3();
  return std::nullopt;
}
}  // namespace cartan

}  // namespace hpl
