#pragma once

// Exact rational scalars and vectors of V = Y (x) Q.

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hpl/errors.hpp"

namespace hpl {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (q > 0 after normalization). No decimals, no floats.
inline Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto bad = [&] { return InvalidInput("not a rational \"p/q\": \"" + std::string(text) + "\""); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto digits_ok = [](std::string_view d, bool allow_sign) {
    if (allow_sign && !d.empty() && (d[0] == '-' || d[0] == '+')) d.remove_prefix(1);
    if (d.empty()) return false;
    for (char c : d)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw InvalidInput("zero denominator in \"" + std::string(text) + "\"");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// p/q in lowest terms (mpq_class(p, q) alone does not reduce).
inline Rational frac(long p, long q) {
  if (q == 0) throw InvalidInput("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Greatest integer <= r.
inline Integer floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

/// Smallest integer >= r.
inline Integer ceil_of(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

/// A point of V written in a fixed basis of Y.
class VectorV {
 public:
  VectorV() = default;
  explicit VectorV(std::size_t dim) : c_(dim) {}
  explicit VectorV(std::vector<Rational> c) : c_(std::move(c)) {}
  VectorV(std::initializer_list<Rational> c) : c_(c) {}

  static VectorV from_ints(const std::vector<std::int64_t>& v) {
    VectorV out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out.c_[i] = Rational(static_cast<long>(v[i]));
    return out;
  }

  std::size_t dim() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }
  bool is_integral() const {
    for (const auto& x : c_)
      if (!is_integer(x)) return false;
    return true;
  }

  VectorV& operator+=(const VectorV& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  VectorV& operator-=(const VectorV& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  VectorV& operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  friend VectorV operator+(VectorV a, const VectorV& b) { return a += b; }
  friend VectorV operator-(VectorV a, const VectorV& b) { return a -= b; }
  friend VectorV operator*(const Rational& s, VectorV a) { return a *= s; }
  friend VectorV operator-(VectorV a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend bool operator==(const VectorV& a, const VectorV& b) { return a.c_ == b.c_; }
  friend bool operator!=(const VectorV& a, const VectorV& b) { return !(a == b); }
  friend bool operator<(const VectorV& a, const VectorV& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] < b.c_[i]) return true;
      if (b.c_[i] < a.c_[i]) return false;
    }
    return false;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ", ";
      s += c_[i].get_str();
    }
    return s + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const VectorV& v) { return os << v.str(); }

 private:
  std::vector<Rational> c_;
};

/// Parses "1,-1/2,0" into a vector.
inline VectorV parse_vector(std::string_view text) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(parse_rational(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return VectorV(std::move(out));
}

struct VectorHash {
  std::size_t operator()(const VectorV& v) const {
    std::size_t h = v.dim();
    for (std::size_t i = 0; i < v.dim(); ++i) {
      const auto& q = v[i];
      std::size_t e = mpz_get_si(q.get_num_mpz_t()) * 1000003u + mpz_get_si(q.get_den_mpz_t());
      h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace hpl
