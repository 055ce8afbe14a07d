#pragma once

// Lambda-paths with exact breakpoints, Hecke and LS chain certificates, the
// ddim/codim statistics and the root operators e, f and e-tilde.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hpl/apartment.hpp"
#include "hpl/root_system.hpp"

namespace hpl {

/// A continuous piecewise-linear map [0,1] -> V, given by a start point, the
/// breakpoints 0 = a_0 < ... < a_r = 1 and the velocity on each segment.
struct Polyline {
  VectorV start;
  std::vector<Rational> breakpoints;
  std::vector<VectorV> velocities;

  std::size_t segments() const { return velocities.size(); }

  VectorV eval(const Rational& t) const {
    VectorV p = start;
    for (std::size_t j = 0; j < velocities.size(); ++j) {
      const auto& a = breakpoints[j];
      const auto& b = breakpoints[j + 1];
      if (t <= a) break;
      p += ((t < b ? t : b) - a) * velocities[j];
    }
    return p;
  }
  VectorV end() const { return eval(Rational(1)); }

  /// Inserts t as a breakpoint (no-op if already present).
  void split_at(const Rational& t) {
    for (std::size_t j = 0; j < velocities.size(); ++j)
      if (breakpoints[j] < t && t < breakpoints[j + 1]) {
        breakpoints.insert(breakpoints.begin() + long(j) + 1, t);
        velocities.insert(velocities.begin() + long(j) + 1, velocities[j]);
        return;
      }
  }

  /// The piece on [t0, t1], reparametrized to [0, 1].
  Polyline restrict(const Rational& t0, const Rational& t1) const {
    if (!(t0 < t1)) throw OutOfRange("restrict needs t0 < t1");
    Polyline p = *this;
    p.split_at(t0);
    p.split_at(t1);
    Polyline out;
    out.start = eval(t0);
    Rational len = t1 - t0;
    out.breakpoints.push_back(0);
    for (std::size_t j = 0; j < p.velocities.size(); ++j) {
      if (p.breakpoints[j] < t0 || p.breakpoints[j + 1] > t1) continue;
      out.breakpoints.push_back((p.breakpoints[j + 1] - t0) / len);
      out.velocities.push_back(len * p.velocities[j]);
    }
    return out;
  }

  /// Drops zero-length segments and joins neighbours with equal velocity.
  void simplify() {
    Polyline out;
    out.start = start;
    out.breakpoints.push_back(breakpoints.front());
    for (std::size_t j = 0; j < velocities.size(); ++j) {
      if (breakpoints[j] == breakpoints[j + 1]) continue;
      if (!out.velocities.empty() && out.velocities.back() == velocities[j]) {
        out.breakpoints.back() = breakpoints[j + 1];
        continue;
      }
      out.velocities.push_back(velocities[j]);
      out.breakpoints.push_back(breakpoints[j + 1]);
    }
    *this = std::move(out);
  }
};

/// (pi1 * pi2)(t) = pi1(2t) for t <= 1/2 and pi1(1) + pi2(2t - 1) - pi2(0) after.
inline Polyline concat(const Polyline& p1, const Polyline& p2) {
  Polyline out;
  out.start = p1.start;
  out.breakpoints.push_back(0);
  Rational half(1, 2);
  for (std::size_t j = 0; j < p1.segments(); ++j) {
    out.breakpoints.push_back(half * p1.breakpoints[j + 1]);
    out.velocities.push_back(Rational(2) * p1.velocities[j]);
  }
  for (std::size_t j = 0; j < p2.segments(); ++j) {
    out.breakpoints.push_back(half + half * p2.breakpoints[j + 1]);
    out.velocities.push_back(Rational(2) * p2.velocities[j]);
  }
  out.simplify();
  return out;
}

/// A lambda-path: pi(t) = pi_0 + sum_{i<j} (a_i - a_{i-1}) tau_i(lambda) + (t - a_{j-1}) tau_j(lambda).
/// The shape is either dominant or the negative of a dominant vector (reverse
/// paths); directions are minimal coset representatives for the dominant one.
class LambdaPath {
 public:
  LambdaPath() = default;

  static LambdaPath make(const RootSystem& rs, VectorV shape, VectorV start, const std::vector<WeylElement>& dirs,
                         std::vector<Rational> bps) {
    LambdaPath p;
    p.init_shape(rs, std::move(shape));
    p.start_ = std::move(start);
    check_breakpoints(bps, dirs.size());
    check_dim(rs, p.start_, "start");
    std::vector<CosetRep> cos;
    for (const auto& w : dirs) cos.push_back(rs.min_coset_rep(w, p.base_));
    p.assign(rs, std::move(cos), std::move(bps));
    return p;
  }

  static LambdaPath from_vectors(const RootSystem& rs, VectorV shape, VectorV start,
                                 const std::vector<VectorV>& velocities, std::vector<Rational> bps) {
    LambdaPath p;
    p.init_shape(rs, std::move(shape));
    p.start_ = std::move(start);
    check_breakpoints(bps, velocities.size());
    check_dim(rs, p.start_, "start");
    std::vector<CosetRep> cos;
    for (const auto& v : velocities) {
      check_dim(rs, v, "direction");
      cos.push_back(rs.coset_of_direction(p.negative_ ? -v : v, p.base_));
    }
    p.assign(rs, std::move(cos), std::move(bps));
    return p;
  }

  /// pi_lambda(t) = start + t lambda.
  static LambdaPath straight(const RootSystem& rs, const VectorV& lambda, std::optional<VectorV> start = {}) {
    return make(rs, lambda, start ? *start : rs.zero(), {rs.identity()}, {Rational(0), Rational(1)});
  }

  const VectorV& shape() const { return shape_; }
  /// The dominant vector lambda with shape = +-lambda.
  const VectorV& base() const { return base_; }
  bool reversed_shape() const { return negative_; }
  const VectorV& start() const { return start_; }
  const std::vector<CosetRep>& directions() const { return dirs_; }
  const std::vector<Rational>& breakpoints() const { return bps_; }
  const std::vector<VectorV>& velocities() const { return vel_; }
  std::size_t segments() const { return dirs_.size(); }

  Polyline polyline() const { return Polyline{start_, bps_, vel_}; }

  VectorV eval(const Rational& t) const {
    if (t < 0 || t > 1) throw OutOfRange("t = " + t.get_str() + " is outside [0,1]");
    return polyline().eval(t);
  }
  VectorV end() const { return polyline().end(); }
  VectorV nu() const { return end() - start_; }
  bool in_Y() const { return shape_.is_integral() && start_.is_integral() && end().is_integral(); }

  /// Index of the segment containing t from the left (t in (a_{j-1}, a_j]).
  std::size_t left_segment(const Rational& t) const {
    if (t <= 0 || t > 1) throw OutOfRange("left derivative needs t in (0,1]");
    std::size_t j = 0;
    while (bps_[j + 1] < t) ++j;
    return j;
  }
  /// Index of the segment containing t from the right (t in [a_{j-1}, a_j)).
  std::size_t right_segment(const Rational& t) const {
    if (t < 0 || t >= 1) throw OutOfRange("right derivative needs t in [0,1)");
    std::size_t j = 0;
    while (bps_[j + 1] <= t) ++j;
    return j;
  }

  /// Canonical text form; equal paths have equal keys.
  std::string key() const {
    std::string s = shape_.str() + "|" + start_.str() + "|";
    for (std::size_t j = 0; j < dirs_.size(); ++j) s += dirs_[j].element.str() + "@" + bps_[j + 1].get_str() + ";";
    return s;
  }

  friend bool operator==(const LambdaPath& a, const LambdaPath& b) {
    return a.shape_ == b.shape_ && a.start_ == b.start_ && a.bps_ == b.bps_ && a.dirs_ == b.dirs_;
  }
  /// Lexicographic on (breakpoints, direction words).
  friend bool operator<(const LambdaPath& a, const LambdaPath& b) {
    if (a.bps_ != b.bps_) return a.bps_ < b.bps_;
    for (std::size_t j = 0; j < std::min(a.dirs_.size(), b.dirs_.size()); ++j)
      if (!(a.dirs_[j].element == b.dirs_[j].element)) return a.dirs_[j].element.word() < b.dirs_[j].element.word();
    if (a.dirs_.size() != b.dirs_.size()) return a.dirs_.size() < b.dirs_.size();
    if (a.start_ != b.start_) return a.start_ < b.start_;
    return a.shape_ < b.shape_;
  }

 private:
  static void check_dim(const RootSystem& rs, const VectorV& v, const char* what) {
    if (v.dim() != rs.dim())
      throw InvalidInput(std::string(what) + " has " + std::to_string(v.dim()) + " coordinates, expected " +
                         std::to_string(rs.dim()));
  }

  static void check_breakpoints(const std::vector<Rational>& bps, std::size_t r) {
    if (r == 0) throw InvalidInput("a path needs at least one direction");
    if (bps.size() != r + 1)
      throw InvalidInput("expected " + std::to_string(r + 1) + " breakpoints, got " + std::to_string(bps.size()));
    if (bps.front() != 0 || bps.back() != 1) throw InvalidInput("breakpoints must start at 0 and end at 1");
    for (std::size_t j = 0; j + 1 < bps.size(); ++j)
      if (!(bps[j] < bps[j + 1])) throw InvalidInput("breakpoints must be strictly increasing");
  }

  void init_shape(const RootSystem& rs, VectorV shape) {
    check_dim(rs, shape, "shape");
    shape_ = std::move(shape);
    if (rs.is_dominant(shape_)) {
      base_ = shape_;
      negative_ = false;
    } else if (rs.is_dominant(-shape_)) {
      base_ = -shape_;
      negative_ = true;
    } else {
      throw NotDominant("shape " + shape_.str() + " is neither dominant nor antidominant");
    }
  }

  void assign(const RootSystem& rs, std::vector<CosetRep> cos, std::vector<Rational> bps) {
    dirs_.clear();
    bps_ = {bps.front()};
    for (std::size_t j = 0; j < cos.size(); ++j) {
      if (!dirs_.empty() && dirs_.back() == cos[j]) {
        bps_.back() = bps[j + 1];
        continue;
      }
      dirs_.push_back(std::move(cos[j]));
      bps_.push_back(bps[j + 1]);
    }
    vel_.clear();
    for (const auto& c : dirs_) vel_.push_back(rs.act(c.element, shape_));
  }

  VectorV shape_, base_, start_;
  bool negative_ = false;
  std::vector<CosetRep> dirs_;
  std::vector<Rational> bps_;
  std::vector<VectorV> vel_;
};

/// The reverse path t -> pi(1 - t), a (-lambda)-path.
inline LambdaPath reverse_path(const RootSystem& rs, const LambdaPath& p) {
  std::vector<WeylElement> dirs;
  std::vector<Rational> bps;
  for (auto it = p.directions().rbegin(); it != p.directions().rend(); ++it) dirs.push_back(it->element);
  for (auto it = p.breakpoints().rbegin(); it != p.breakpoints().rend(); ++it) bps.push_back(1 - *it);
  return LambdaPath::make(rs, -p.shape(), p.end(), dirs, bps);
}

/// Reads a polyline as a lambda-path when all its velocities are positive
/// multiples of vectors in one Weyl orbit; time is rescaled accordingly and
/// stationary pieces are dropped. Returns nullopt for mixed orbits.
inline std::optional<LambdaPath> as_lambda_path(const RootSystem& rs, Polyline poly) {
  poly.simplify();
  std::vector<VectorV> dirs;
  std::vector<Rational> weights, scale;
  std::optional<VectorV> unit;
  for (std::size_t j = 0; j < poly.segments(); ++j) {
    const auto& v = poly.velocities[j];
    if (v.is_zero()) continue;
    auto dom = rs.dominant_with_word(v).second;
    Rational c;
    if (!unit) {
      unit = dom;
      c = 1;
    } else {
      std::size_t k = 0;
      while ((*unit)[k] == 0) ++k;
      c = dom[k] / (*unit)[k];
      if (c <= 0 || c * *unit != dom) return std::nullopt;
    }
    Rational len = poly.breakpoints[j + 1] - poly.breakpoints[j];
    dirs.push_back(v);
    weights.push_back(c * len);
    scale.push_back(c);
  }
  if (!unit) return LambdaPath::straight(rs, rs.zero(), poly.start);
  Rational total = 0;
  for (const auto& w : weights) total += w;
  VectorV shape = total * *unit;
  std::vector<Rational> bps{0};
  std::vector<VectorV> vel;
  Rational acc = 0;
  for (std::size_t j = 0; j < dirs.size(); ++j) {
    acc += weights[j];
    bps.push_back(acc / total);
    vel.push_back((total / scale[j]) * dirs[j]);
  }
  return LambdaPath::from_vectors(rs, shape, poly.start, vel, bps);
}

struct DirectionData {
  Rational t;
  VectorV left, right;
  CosetRep w_minus, w_plus;
};

inline DirectionData direction_data(const LambdaPath& p, const Rational& t) {
  if (t <= 0 || t >= 1) throw OutOfRange("direction data needs t in (0,1), got " + t.get_str());
  auto l = p.left_segment(t), r = p.right_segment(t);
  return DirectionData{t, p.velocities()[l], p.velocities()[r], p.directions()[l], p.directions()[r]};
}

// ---- chains ---------------------------------------------------------------

enum class ChainKind { Hecke, LS };

inline const char* to_string(ChainKind k) { return k == ChainKind::Hecke ? "hecke" : "ls"; }

struct ChainCertificate {
  Rational t;
  ChainKind kind = ChainKind::Hecke;
  std::vector<RealRoot> roots;  // beta_1 .. beta_s
  std::vector<VectorV> xis;     // xi_0 .. xi_s
  std::vector<CosetRep> sigmas; // sigma_0 .. sigma_s
};

struct ChainQuery {
  ChainKind kind = ChainKind::Hecke;
  Rational a = 1;          // the breakpoint a_j, used by LS condition (ii)
  bool check_vii = true;   // Hecke condition beta(x) in Z
  bool longest = false;    // return a longest chain instead of the first found
};

/// Searches a chain xi_0 = from, xi_i = r_{beta_i} xi_{i-1}, ..., xi_s = to with
/// beta_i(xi_{i-1}) < 0, subject to the conditions of the requested kind. The
/// candidate roots at sigma are its inversions, so the search is exhaustive.
inline std::optional<ChainCertificate> find_chain(const RootSystem& rs, const VectorV& from, const VectorV& to,
                                                  const VectorV& x, const VectorV& lambda, const ChainQuery& q,
                                                  long h) {
  if (!rs.is_dominant(lambda)) throw NotDominant("chain shape " + lambda.str() + " is not dominant");
  CosetRep target = rs.coset_of_direction(to, lambda);
  auto xvals = rs.alpha_values(x);
  struct Step {
    RealRoot root;
    VectorV xi;
    CosetRep sigma;
  };
  // best[xi] = steps from xi to the target (nullopt: unreachable).
  std::map<VectorV, std::optional<std::vector<Step>>> memo;
  std::function<std::optional<std::vector<Step>>(const VectorV&, const CosetRep&)> solve =
      [&](const VectorV& xi, const CosetRep& sigma) -> std::optional<std::vector<Step>> {
    if (xi == to) return std::vector<Step>{};
    if (auto it = memo.find(xi); it != memo.end()) return it->second;
    std::optional<std::vector<Step>> best;
    if (sigma.length() > target.length() && rs.bruhat_leq(target.element, sigma.element)) {
      auto inv = rs.inversion_set(sigma.element);
      rs.check_heights(inv, h);
      for (const auto& b : inv) {
        if (rs.eval(b, xi) >= 0) continue;
        if (q.kind == ChainKind::Hecke && q.check_vii && !is_integer(rs.eval(b, xvals))) continue;
        VectorV next = rs.reflect(b, xi);
        CosetRep ns = rs.coset_of_direction(next, lambda);
        if (q.kind == ChainKind::LS) {
          if (ns.length() + 1 != sigma.length()) continue;
          if (!is_integer(q.a * rs.eval(b, next))) continue;
        }
        auto rest = solve(next, ns);
        if (!rest) continue;
        rest->insert(rest->begin(), Step{b, next, ns});
        if (!best || (q.longest && rest->size() > best->size())) best = std::move(rest);
        if (!q.longest) break;
      }
    }
    memo[xi] = best;
    return best;
  };
  CosetRep s0 = rs.coset_of_direction(from, lambda);
  auto steps = solve(from, s0);
  if (!steps) return std::nullopt;
  ChainCertificate c;
  c.kind = q.kind;
  c.xis.push_back(from);
  c.sigmas.push_back(s0);
  for (auto& s : *steps) {
    c.roots.push_back(s.root);
    c.xis.push_back(s.xi);
    c.sigmas.push_back(s.sigma);
  }
  return c;
}

struct ChainVerdict {
  bool ok = true;
  std::vector<ChainCertificate> certificates;  // one per interior breakpoint, in order
  std::string reason;
};

inline ChainVerdict check_hecke(const RootSystem& rs, const LambdaPath& p, long h, bool longest = false) {
  if (p.reversed_shape()) throw NotDominant("Hecke paths need a dominant shape");
  ChainVerdict v;
  for (std::size_t j = 1; j < p.segments(); ++j) {
    const Rational& t = p.breakpoints()[j];
    auto x = p.eval(t);
    ChainQuery q;
    q.longest = longest;
    auto c = find_chain(rs, p.velocities()[j - 1], p.velocities()[j], x, p.base(), q, h);
    if (!c) {
      q.check_vii = false;
      bool without_vii = find_chain(rs, p.velocities()[j - 1], p.velocities()[j], x, p.base(), q, h).has_value();
      v.ok = false;
      v.reason = std::string(without_vii ? "condition vii fails" : "condition vi fails") + " at t=" + t.get_str();
      return v;
    }
    c->t = t;
    v.certificates.push_back(std::move(*c));
  }
  return v;
}

inline bool is_hecke(const RootSystem& rs, const LambdaPath& p, long h) { return check_hecke(rs, p, h).ok; }

// ---- statistics -----------------------------------------------------------

struct RootTally {
  RealRoot root;
  long pos = 0, neg = 0;          // walls left positively / negatively by the path
  long pos_rev = 0, neg_rev = 0;  // the same for the reverse path
};

struct PathStats {
  long ddim = 0;
  long codim = 0;
  std::optional<long> dim;  // finite type only
  std::vector<RootTally> tallies;
};

namespace detail {
// Integers in [lo, hi) and in (lo, hi].
inline long count_closed_open(const Rational& lo, const Rational& hi) {
  return Integer(ceil_of(hi) - ceil_of(lo)).get_si();
}
inline long count_open_closed(const Rational& lo, const Rational& hi) {
  return Integer(floor_of(hi) - floor_of(lo)).get_si();
}
}  // namespace detail

/// ddim = sum_{t>0} l_{pi(t)}(w_-(t)), codim = sum_{t<1} l_{pi(t)}(w_+(t)).
inline PathStats stats(const RootSystem& rs, const LambdaPath& p, long h) {
  PathStats st;
  std::map<std::vector<std::int64_t>, RootTally> tally;
  auto add = [&](const RealRoot& b) -> RootTally& {
    auto [it, fresh] = tally.try_emplace(b.coeffs);
    if (fresh) it->second.root = b;
    return it->second;
  };
  std::vector<RealRoot> all;
  if (rs.is_finite()) all = rs.positive_roots(std::max<long>(h, 64));
  long dim = 0;
  for (std::size_t j = 0; j < p.segments(); ++j) {
    auto v0 = rs.alpha_values(p.eval(p.breakpoints()[j]));
    auto v1 = rs.alpha_values(p.eval(p.breakpoints()[j + 1]));
    const auto& d = p.velocities()[j];
    std::vector<RealRoot> roots;
    if (rs.is_finite()) {
      roots = all;
    } else {
      // Only roots negative on the direction can be counted by ddim/codim.
      if (p.reversed_shape()) throw UnsupportedType("statistics of reverse paths need finite type");
      roots = rs.inversion_set(p.directions()[j].element);
      rs.check_heights(roots, h);
    }
    for (const auto& b : roots) {
      Rational s = rs.eval(b, d);
      if (s == 0) continue;
      Rational b0 = rs.eval(b, v0), b1 = rs.eval(b, v1);
      if (s < 0) {
        long dd = detail::count_closed_open(b1, b0);
        long cd = detail::count_open_closed(b1, b0);
        if (dd == 0 && cd == 0) continue;
        auto& t = add(b);
        t.pos_rev += dd;
        t.neg += cd;
        st.ddim += dd;
        st.codim += cd;
      } else {
        long ps = detail::count_closed_open(b0, b1);
        long nr = detail::count_open_closed(b0, b1);
        if (ps == 0 && nr == 0) continue;
        auto& t = add(b);
        t.pos += ps;
        t.neg_rev += nr;
        dim += ps;
      }
    }
  }
  if (rs.is_finite()) st.dim = dim;
  for (auto& [k, t] : tally) st.tallies.push_back(t);
  std::sort(st.tallies.begin(), st.tallies.end(), [](const auto& a, const auto& b) { return a.root < b.root; });
  return st;
}

/// rho(lambda - nu).
inline Rational rho_gap(const RootSystem& rs, const LambdaPath& p) { return rs.rho_of(p.shape() - p.nu()); }

// ---- LS recognition -------------------------------------------------------

struct LsVerdict {
  bool ls = false;
  std::vector<ChainCertificate> certificates;
  std::string reason;
  bool cross_checked = false;
  bool hecke = false;
  long ddim = 0;
  Rational rho_gap = 0;
};

/// LS chains at every breakpoint; for paths in Y the answer is compared with
/// the characterization [Hecke and ddim = rho(lambda - nu)].
inline LsVerdict is_ls(const RootSystem& rs, const LambdaPath& p, long h) {
  if (p.reversed_shape()) throw NotDominant("LS paths need a dominant shape");
  LsVerdict v;
  if (!p.shape().is_integral() || !p.start().is_integral()) {
    v.reason = "path is not in Y";
    return v;
  }
  v.ls = true;
  for (std::size_t j = 1; j < p.segments(); ++j) {
    const Rational& t = p.breakpoints()[j];
    ChainQuery q;
    q.kind = ChainKind::LS;
    q.a = t;
    auto c = find_chain(rs, p.velocities()[j - 1], p.velocities()[j], p.eval(t), p.base(), q, h);
    if (!c) {
      v.ls = false;
      v.reason = "no LS chain at t=" + t.get_str();
      v.certificates.clear();
      break;
    }
    c->t = t;
    v.certificates.push_back(std::move(*c));
  }
  if (!p.end().is_integral()) {
    if (v.ls) throw CrossCheckMismatch("LS chains found but the endpoint " + p.end().str() + " is not in Y");
    return v;
  }
  auto hk = check_hecke(rs, p, h);
  v.hecke = hk.ok;
  v.ddim = stats(rs, p, h).ddim;
  v.rho_gap = rho_gap(rs, p);
  v.cross_checked = true;
  bool characterized = v.hecke && Rational(v.ddim) == v.rho_gap;
  if (characterized != v.ls)
    throw CrossCheckMismatch("LS chain search says " + std::string(v.ls ? "LS" : "not LS") +
                             " but Hecke=" + (v.hecke ? "true" : "false") + ", ddim=" + std::to_string(v.ddim) +
                             ", rho(lambda-nu)=" + v.rho_gap.get_str());
  return v;
}

/// w_+(t) lies in W_{pi(t)} w_-(t) at every breakpoint (finite type only).
inline bool is_billiard(const RootSystem& rs, const LambdaPath& p, long h) {
  if (!rs.is_finite()) throw UnsupportedType("billiard test is implemented for finite type only");
  auto roots = rs.positive_roots(std::max<long>(h, 64));
  for (std::size_t j = 1; j < p.segments(); ++j) {
    auto x = rs.alpha_values(p.eval(p.breakpoints()[j]));
    std::vector<RealRoot> local;
    for (const auto& b : roots)
      if (is_integer(rs.eval(b, x))) local.push_back(b);
    std::vector<VectorV> seen{p.velocities()[j - 1]};
    bool found = false;
    for (std::size_t k = 0; k < seen.size() && !found; ++k)
      for (const auto& b : local) {
        auto n = rs.reflect(b, seen[k]);
        if (std::find(seen.begin(), seen.end(), n) == seen.end()) seen.push_back(n);
      }
    if (std::find(seen.begin(), seen.end(), p.velocities()[j]) == seen.end()) return false;
  }
  return true;
}

// ---- root operators -------------------------------------------------------

enum class OpKind { E, F, ETilde };

inline const char* to_string(OpKind k) {
  switch (k) {
    case OpKind::E: return "e";
    case OpKind::F: return "f";
    default: return "etilde";
  }
}

struct OpResult {
  std::optional<LambdaPath> path;
  std::string reason;  // why the operator is undefined
};

namespace detail {

struct Height {
  std::vector<Rational> t, v;  // breakpoints and alpha-values there
};

inline Height height_function(const RootSystem& rs, std::size_t i, const Polyline& p) {
  Height h;
  for (const auto& t : p.breakpoints) {
    h.t.push_back(t);
    h.v.push_back(rs.alpha(i, p.eval(t)));
  }
  return h;
}

inline Rational at(const Height& h, std::size_t j, const Rational& t) {
  return h.v[j] + (h.v[j + 1] - h.v[j]) * (t - h.t[j]) / (h.t[j + 1] - h.t[j]);
}

// First t >= from with h(t) = c.
inline std::optional<Rational> first_hit(const Height& h, const Rational& c, const Rational& from) {
  for (std::size_t j = 0; j + 1 < h.t.size(); ++j) {
    if (h.t[j + 1] < from) continue;
    Rational a = h.t[j] < from ? from : h.t[j];
    Rational ha = at(h, j, a), hb = h.v[j + 1];
    if (ha == c) return a;
    if ((ha < c && c <= hb) || (hb <= c && c < ha)) return h.t[j] + (c - h.v[j]) / (hb - h.v[j]) * (h.t[j + 1] - h.t[j]);
  }
  return std::nullopt;
}

// Last t <= upto with h(t) = c.
inline std::optional<Rational> last_hit(const Height& h, const Rational& c, const Rational& upto) {
  for (std::size_t j = h.t.size() - 1; j-- > 0;) {
    if (h.t[j] > upto) continue;
    Rational b = h.t[j + 1] > upto ? upto : h.t[j + 1];
    Rational hb = at(h, j, b), ha = h.v[j];
    if (hb == c) return b;
    if ((ha <= c && c < hb) || (hb < c && c <= ha)) return h.t[j] + (c - ha) / (h.v[j + 1] - ha) * (h.t[j + 1] - h.t[j]);
  }
  return std::nullopt;
}

inline Polyline reflect_between(const RootSystem& rs, std::size_t i, Polyline p, const Rational& t0,
                                const Rational& t1) {
  p.split_at(t0);
  p.split_at(t1);
  for (std::size_t j = 0; j < p.segments(); ++j)
    if (t0 <= p.breakpoints[j] && p.breakpoints[j + 1] <= t1) p.velocities[j] = rs.simple_reflection(i, p.velocities[j]);
  p.simplify();
  return p;
}

}  // namespace detail

/// e_i and f_i reflect the piece between the last/first visit of the minimum m
/// of alpha_i o pi and the adjacent visit of m + 1 (m must be an integer);
/// e-tilde reflects the piece between q and theta around the minimal integral
/// level attained.
inline OpResult root_operator(const RootSystem& rs, OpKind kind, std::size_t i, const LambdaPath& p) {
  if (i >= rs.rank()) throw InvalidInput("simple index " + std::to_string(i + 1) + " out of range");
  if (p.reversed_shape()) throw NotDominant("root operators need a dominant shape");
  Polyline poly = p.polyline();
  auto h = detail::height_function(rs, i, poly);
  Rational m = *std::min_element(h.v.begin(), h.v.end());
  OpResult res;
  Rational t0, t1;
  switch (kind) {
    case OpKind::E: {
      if (!is_integer(m)) {
        res.reason = "minimum " + m.get_str() + " of alpha o pi is not an integer";
        return res;
      }
      if (m > h.v.front() - 1) {
        res.reason = "minimum of alpha o pi is not at least one below its start";
        return res;
      }
      t1 = *detail::first_hit(h, m, 0);
      t0 = *detail::last_hit(h, m + 1, t1);
      break;
    }
    case OpKind::F: {
      if (!is_integer(m)) {
        res.reason = "minimum " + m.get_str() + " of alpha o pi is not an integer";
        return res;
      }
      if (h.v.back() < m + 1) {
        res.reason = "alpha o pi does not end at least one above its minimum";
        return res;
      }
      t0 = *detail::last_hit(h, m, 1);
      t1 = *detail::first_hit(h, m + 1, t0);
      break;
    }
    case OpKind::ETilde: {
      Rational q_level(ceil_of(m));
      std::optional<Rational> q;
      for (std::size_t j = 0; j + 1 < h.t.size(); ++j)
        if (h.v[j + 1] < q_level) {
          if (h.v[j] < q_level) break;
          q = h.t[j] + (q_level - h.v[j]) / (h.v[j + 1] - h.v[j]) * (h.t[j + 1] - h.t[j]);
          break;
        }
      if (!q) {
        res.reason = "q = 1: alpha o pi never drops below its minimal integral value";
        return res;
      }
      std::optional<Rational> theta;
      for (std::size_t j = 0; j + 1 < h.t.size(); ++j) {
        if (h.t[j + 1] <= *q) continue;
        Rational a = h.t[j] < *q ? *q : h.t[j];
        Rational ha = detail::at(h, j, a), hb = h.v[j + 1];
        if (a > *q && ha == q_level) { theta = a; break; }
        if (ha < q_level && q_level <= hb) {
          theta = h.t[j] + (q_level - h.v[j]) / (hb - h.v[j]) * (h.t[j + 1] - h.t[j]);
          break;
        }
      }
      if (!theta) {
        res.reason = "alpha o pi does not return to the level " + q_level.get_str() + " after q";
        return res;
      }
      t0 = *q;
      t1 = *theta;
      break;
    }
  }
  auto out = detail::reflect_between(rs, i, std::move(poly), t0, t1);
  res.path = LambdaPath::from_vectors(rs, p.shape(), p.start(), out.velocities, out.breakpoints);
  return res;
}

}  // namespace hpl
