#pragma once

// LS-path crystals, weight multiplicities, an independent Freudenthal oracle,
// and exhaustive enumeration of Hecke paths between two points.

#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "hpl/paths.hpp"

namespace hpl {

struct CrystalEdge {
  std::size_t from, to;
  std::size_t index;  // f_index
};

struct CrystalGraph {
  VectorV lambda;
  std::vector<LambdaPath> nodes;  // nodes[0] = pi_lambda
  std::vector<std::size_t> depth;
  std::vector<CrystalEdge> edges;
  std::size_t depth_cap = 0;
  bool cap_hit = false;
};

/// Breadth-first closure of {pi_lambda} under the defined f_i, stopping at
/// `depth_cap` applications. In finite type every node is checked with is_ls.
inline CrystalGraph generate_ls_paths(const RootSystem& rs, const VectorV& lambda, std::size_t depth_cap, long h) {
  if (!rs.is_dominant(lambda)) throw NotDominant("lambda " + lambda.str() + " is not dominant");
  if (!lambda.is_integral()) throw InvalidInput("lambda " + lambda.str() + " is not in Y");
  CrystalGraph g;
  g.lambda = lambda;
  g.depth_cap = depth_cap;
  std::unordered_map<std::string, std::size_t> index;
  g.nodes.push_back(LambdaPath::straight(rs, lambda));
  g.depth.push_back(0);
  index[g.nodes[0].key()] = 0;
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      auto r = root_operator(rs, OpKind::F, i, g.nodes[k]);
      if (!r.path) continue;
      if (g.depth[k] >= depth_cap) {
        g.cap_hit = true;
        continue;
      }
      auto key = r.path->key();
      auto it = index.find(key);
      std::size_t to;
      if (it == index.end()) {
        to = g.nodes.size();
        index.emplace(key, to);
        g.nodes.push_back(std::move(*r.path));
        g.depth.push_back(g.depth[k] + 1);
      } else {
        to = it->second;
      }
      g.edges.push_back(CrystalEdge{k, to, i});
    }
  }
  if (rs.is_finite())
    for (const auto& p : g.nodes)
      if (!is_ls(rs, p, h).ls) throw CrossCheckMismatch("generated path " + p.key() + " is not LS");
  return g;
}

/// Sum of the coordinates of lambda - mu over the simple coroots, or nullopt if
/// lambda - mu is not a non-negative integral combination of them.
inline std::optional<long> depth_below(const RootSystem& rs, const VectorV& lambda, const VectorV& mu) {
  auto c = rs.coroot_coords(lambda - mu);
  if (!c) return std::nullopt;
  long s = 0;
  for (const auto& q : *c) {
    if (!is_integer(q) || q < 0) return std::nullopt;
    s += q.get_num().get_si();
  }
  return s;
}

inline std::size_t count_endpoint(const CrystalGraph& g, const VectorV& mu) {
  std::size_t n = 0;
  for (const auto& p : g.nodes)
    if (p.end() == mu) ++n;
  return n;
}

/// Number of LS paths of shape lambda from 0 to mu.
inline std::size_t multiplicity(const RootSystem& rs, const VectorV& lambda, const VectorV& mu,
                                std::size_t depth_cap, long h) {
  auto d = depth_below(rs, lambda, mu);
  if (!d) return 0;
  auto g = generate_ls_paths(rs, lambda, depth_cap, h);
  if (g.cap_hit && std::size_t(*d) > depth_cap)
    throw CapHit("weight " + mu.str() + " lies below the depth cap " + std::to_string(depth_cap));
  return count_endpoint(g, mu);
}

// ---- Freudenthal oracle ---------------------------------------------------

/// Weight multiplicities of the irreducible highest-weight module L(lambda) of
/// the Langlands dual algebra (Cartan matrix A^T, simple roots alpha_i^vee),
/// whose characters are counted by LS paths of shape lambda. Weights are
/// written lambda - eta with eta a non-negative vector over the alpha_i^vee.
/// Self-contained: it only uses the Cartan matrix and the values alpha_i(lambda).
class Freudenthal {
 public:
  using Eta = std::vector<long>;

  Freudenthal(const IntMatrix& a, std::vector<long> lambda_values) : a_(a), lam_(std::move(lambda_values)) {
    n_ = a_.size();
    classify();
    symmetrize();
  }

  /// Multiplicity of lambda - eta.
  long mult(const Eta& eta) {
    for (auto c : eta)
      if (c < 0) return 0;
    long ht = 0;
    for (auto c : eta) ht += c;
    extend_to(ht);
    auto it = table_.find(eta);
    return it == table_.end() ? 0 : it->second;
  }

  /// All weights with positive multiplicity and height of eta <= ht.
  const std::map<Eta, long>& table(long ht) {
    extend_to(ht);
    return table_;
  }

 private:
  long pair(const Eta& x, const Eta& y) const {
    // (alpha'_i, alpha'_j) = eps_i a_ji
    long s = 0;
    for (std::size_t i = 0; i < n_; ++i)
      if (x[i])
        for (std::size_t j = 0; j < n_; ++j)
          if (y[j]) s += x[i] * y[j] * eps_[i] * a_[j][i];
    return s;
  }
  // (lambda, x) for x over the alpha'_i.
  long pair_lambda(const Eta& x) const {
    long s = 0;
    for (std::size_t i = 0; i < n_; ++i) s += x[i] * eps_[i] * lam_[i];
    return s;
  }
  long pair_rho(const Eta& x) const {
    long s = 0;
    for (std::size_t i = 0; i < n_; ++i) s += x[i] * eps_[i];
    return s;
  }

  void classify() {
    bool symmetric = true;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (a_[i][j] != a_[j][i]) symmetric = false;
    // Finite type iff the positive real roots form a finite set; the closure
    // below stops at the probe height and records whether it was cut off.
    const long probe = 60;
    std::set<Eta> seen;
    std::vector<Eta> frontier;
    for (std::size_t i = 0; i < n_; ++i) {
      Eta e(n_, 0);
      e[i] = 1;
      seen.insert(e);
      frontier.push_back(e);
    }
    bool truncated = false;
    while (!frontier.empty()) {
      std::vector<Eta> next;
      for (const auto& b : frontier)
        for (std::size_t j = 0; j < n_; ++j) {
          // <beta, alpha'^vee_j> = sum_i b_i a_ij
          long p = 0;
          for (std::size_t i = 0; i < n_; ++i) p += b[i] * a_[i][j];
          if (p >= 0) continue;
          Eta c = b;
          c[j] -= p;
          long ht = 0;
          for (auto x : c) ht += x;
          if (ht > probe) {
            truncated = true;
            continue;
          }
          if (seen.insert(c).second) next.push_back(c);
        }
      frontier = std::move(next);
    }
    finite_ = !truncated;
    if (finite_) {
      roots_.assign(seen.begin(), seen.end());
      return;
    }
    if (!symmetric)
      throw UnsupportedType("Freudenthal oracle supports finite type and simply-laced affine type only");
    // Null root: the smallest positive integral c with sum_i c_i a_ij = 0 for all j.
    std::optional<Eta> delta;
    Eta c(n_, 1);
    std::function<bool(std::size_t, long)> rec = [&](std::size_t k, long rest) -> bool {
      if (k + 1 == n_) {
        if (rest < 1) return false;
        c[k] = rest;
        for (std::size_t j = 0; j < n_; ++j) {
          long p = 0;
          for (std::size_t i = 0; i < n_; ++i) p += c[i] * a_[i][j];
          if (p != 0) return false;
        }
        return true;
      }
      for (long v = 1; v <= rest - long(n_ - k - 1); ++v) {
        c[k] = v;
        if (rec(k + 1, rest - v)) return true;
      }
      return false;
    };
    for (long total = long(n_); total <= probe && !delta; ++total)
      if (rec(0, total)) delta = c;
    if (!delta) throw UnsupportedType("Freudenthal oracle does not support indefinite type");
    delta_ = *delta;
    imag_mult_ = long(n_) - 1;
  }

  void symmetrize() {
    // eps_i a_ji = eps_j a_ij, smallest positive integers (connected case via
    // propagation, components handled independently).
    std::vector<long> num(n_, 0), den(n_, 1);
    for (std::size_t s = 0; s < n_; ++s) {
      if (num[s]) continue;
      num[s] = 1;
      std::vector<std::size_t> q{s};
      for (std::size_t k = 0; k < q.size(); ++k) {
        std::size_t i = q[k];
        for (std::size_t j = 0; j < n_; ++j) {
          if (i == j || a_[i][j] == 0 || num[j]) continue;
          // eps_j = eps_i a_ji / a_ij
          long nn = num[i] * a_[j][i], dd = den[i] * a_[i][j];
          if (dd < 0) nn = -nn, dd = -dd;
          long g = std::gcd(nn, dd);
          num[j] = nn / g;
          den[j] = dd / g;
          q.push_back(j);
        }
      }
    }
    long l = 1;
    for (auto d : den) l = std::lcm(l, d);
    eps_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) eps_[i] = num[i] * (l / den[i]);
  }

  void extend_to(long ht) {
    if (table_.empty()) {
      table_[Eta(n_, 0)] = 1;
      levels_.push_back({Eta(n_, 0)});
    }
    while (long(levels_.size()) <= ht) {
      std::set<Eta> cand;
      for (const auto& e : levels_.back())
        for (std::size_t i = 0; i < n_; ++i) {
          Eta f = e;
          ++f[i];
          cand.insert(f);
        }
      std::vector<Eta> level;
      for (const auto& e : cand) {
        long m = compute(e);
        if (m > 0) {
          table_[e] = m;
          level.push_back(e);
        }
      }
      levels_.push_back(std::move(level));
      if (levels_.back().empty()) break;
    }
  }

  long compute(const Eta& eta) const {
    // (2(lambda + rho, eta) - (eta, eta)) m = 2 sum_{beta>0} mult(beta) sum_{k>=1} (mu + k beta, beta) m(mu + k beta)
    long lhs = 2 * (pair_lambda(eta) + pair_rho(eta)) - pair(eta, eta);
    long rhs = 0;
    auto visit = [&](const Eta& beta, long mult) {
      for (long k = 1;; ++k) {
        Eta rest = eta;
        bool ok = true;
        for (std::size_t i = 0; i < n_; ++i) {
          rest[i] -= k * beta[i];
          if (rest[i] < 0) ok = false;
        }
        if (!ok) break;
        auto it = table_.find(rest);
        if (it == table_.end()) continue;
        // (lambda - rest, beta)
        long v = pair_lambda(beta) - pair(rest, beta);
        rhs += mult * v * it->second;
      }
    };
    long ht = 0;
    for (auto c : eta) ht += c;
    for (const auto& b : roots_for(ht)) visit(b, 1);
    if (!finite_) {
      Eta nd = delta_;
      for (long n = 1;; ++n) {
        bool ok = true;
        for (std::size_t i = 0; i < n_; ++i) {
          nd[i] = n * delta_[i];
          if (nd[i] > eta[i]) ok = false;
        }
        if (!ok) break;
        visit(nd, imag_mult_);
      }
    }
    rhs *= 2;
    if (lhs == 0) {
      if (rhs != 0) throw Error("Freudenthal recursion: zero coefficient with non-zero right side");
      return 0;
    }
    if (rhs % lhs != 0 || rhs / lhs < 0) throw Error("Freudenthal recursion produced a non-integral multiplicity");
    return rhs / lhs;
  }

  // Positive real roots of the dual system of height <= ht.
  const std::vector<Eta>& roots_for(long ht) const {
    if (finite_) return roots_;
    if (ht <= real_ht_) return real_;
    std::set<Eta> seen(real_.begin(), real_.end());
    std::vector<Eta> frontier;
    if (seen.empty())
      for (std::size_t i = 0; i < n_; ++i) {
        Eta e(n_, 0);
        e[i] = 1;
        seen.insert(e);
      }
    frontier.assign(seen.begin(), seen.end());
    while (!frontier.empty()) {
      std::vector<Eta> next;
      for (const auto& b : frontier)
        for (std::size_t j = 0; j < n_; ++j) {
          long p = 0;
          for (std::size_t i = 0; i < n_; ++i) p += b[i] * a_[i][j];
          if (p >= 0) continue;
          Eta c = b;
          c[j] -= p;
          long h = 0;
          for (auto x : c) h += x;
          if (h > ht || seen.count(c)) continue;
          seen.insert(c);
          next.push_back(c);
        }
      frontier = std::move(next);
    }
    real_.assign(seen.begin(), seen.end());
    real_ht_ = ht;
    return real_;
  }

  IntMatrix a_;
  std::vector<long> lam_;
  std::size_t n_ = 0;
  bool finite_ = true;
  std::vector<Eta> roots_;
  Eta delta_;
  long imag_mult_ = 0;
  std::vector<long> eps_;
  std::map<Eta, long> table_;
  std::vector<std::vector<Eta>> levels_;
  mutable std::vector<Eta> real_;
  mutable long real_ht_ = 0;
};

inline long freudenthal_multiplicity(const RootSystem& rs, const VectorV& lambda, const VectorV& mu) {
  if (!rs.is_dominant(lambda) || !lambda.is_integral()) throw NotDominant("lambda must be dominant and in Y");
  if (rs.type() == GcmType::Indefinite) throw UnsupportedType("Freudenthal oracle does not support indefinite type");
  auto c = rs.coroot_coords(lambda - mu);
  if (!c) return 0;
  Freudenthal::Eta eta;
  for (const auto& q : *c) {
    if (!is_integer(q)) return 0;
    eta.push_back(q.get_num().get_si());
  }
  std::vector<long> lv;
  for (const auto& q : rs.alpha_values(lambda)) lv.push_back(q.get_num().get_si());
  Freudenthal f(rs.gcm().entries(), lv);
  return f.mult(eta);
}

// ---- Hecke path enumeration ----------------------------------------------

/// All Hecke paths of shape lambda from y0 to y1, sorted by (breakpoints,
/// direction words). Directions only move down in Bruhat order at folds, fold
/// times are the integral levels of the inversions of the current direction,
/// and the initial direction satisfies l(w_+(0)) <= 2 rho(lambda - nu).
inline std::vector<LambdaPath> enumerate_hecke(const RootSystem& rs, const VectorV& lambda, const VectorV& y0,
                                               const VectorV& y1, long h) {
  if (!rs.is_dominant(lambda)) throw NotDominant("lambda " + lambda.str() + " is not dominant");
  if (!lambda.is_integral() || !y0.is_integral() || !y1.is_integral())
    throw InvalidInput("enumerate_hecke needs lambda, y0, y1 in Y");
  std::vector<LambdaPath> out;
  VectorV nu = y1 - y0;
  Rational gap = rs.rho_of(lambda - nu);
  if (gap < 0) return out;
  if (lambda.is_zero()) {
    if (nu.is_zero()) out.push_back(LambdaPath::straight(rs, lambda, y0));
    return out;
  }
  std::size_t max_len = Integer(floor_of(2 * gap)).get_ui();

  // Directions reachable from lambda with coset length <= max_len.
  std::vector<VectorV> starts{lambda};
  {
    std::set<VectorV> seen{lambda};
    std::vector<VectorV> frontier{lambda};
    for (std::size_t len = 0; len < max_len; ++len) {
      std::vector<VectorV> next;
      for (const auto& d : frontier)
        for (std::size_t i = 0; i < rs.rank(); ++i)
          if (rs.alpha(i, d) > 0) {
            auto e = rs.simple_reflection(i, d);
            if (seen.insert(e).second) next.push_back(e);
          }
      starts.insert(starts.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
  }

  std::set<std::string> keys;
  std::vector<Rational> bps{0};
  std::vector<VectorV> dirs;
  std::function<void(const Rational&, const VectorV&, const VectorV&)> walk = [&](const Rational& t, const VectorV& p,
                                                                                    const VectorV& d) {
    dirs.push_back(d);
    // Finish here.
    if (p + (1 - t) * d == y1) {
      bps.push_back(1);
      auto path = LambdaPath::from_vectors(rs, lambda, y0, dirs, bps);
      if (keys.insert(path.key()).second) out.push_back(std::move(path));
      bps.pop_back();
    }
    // Fold later on this segment.
    CosetRep sigma = rs.coset_of_direction(d, lambda);
    auto inv = rs.inversion_set(sigma.element);
    rs.check_heights(inv, h);
    std::set<Rational> times;
    auto pv = rs.alpha_values(p);
    for (const auto& b : inv) {
      Rational b0 = rs.eval(b, pv), s = rs.eval(b, d);  // s < 0
      Rational b1 = b0 + (1 - t) * s;
      // integers k in (b1, b0) are hit at t + (k - b0)/s
      for (Integer k = floor_of(b0); Rational(k) > b1; --k) {
        if (Rational(k) >= b0) continue;
        times.insert(t + (Rational(k) - b0) / s);
      }
    }
    for (const auto& t1 : times) {
      VectorV x = p + (t1 - t) * d;
      auto xv = rs.alpha_values(x);
      // Every direction reachable from d by a Hecke chain at x.
      std::set<VectorV> reach;
      std::vector<std::pair<VectorV, CosetRep>> stack{{d, sigma}};
      while (!stack.empty()) {
        auto [xi, sg] = stack.back();
        stack.pop_back();
        auto inv2 = rs.inversion_set(sg.element);
        rs.check_heights(inv2, h);
        for (const auto& b : inv2) {
          if (!is_integer(rs.eval(b, xv))) continue;
          auto nx = rs.reflect(b, xi);
          if (reach.insert(nx).second) stack.emplace_back(nx, rs.coset_of_direction(nx, lambda));
        }
      }
      bps.push_back(t1);
      for (const auto& nd : reach) walk(t1, x, nd);
      bps.pop_back();
    }
    dirs.pop_back();
  };
  for (const auto& d : starts) walk(Rational(0), y0, d);

  std::vector<LambdaPath> verified;
  for (auto& p : out) {
    if (!is_hecke(rs, p, h)) throw CrossCheckMismatch("enumerated path " + p.key() + " fails the Hecke test");
    verified.push_back(std::move(p));
  }
  std::sort(verified.begin(), verified.end());
  return verified;
}

}  // namespace hpl
