#pragma once

#include <stdexcept>
#include <string>

namespace hpl {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix violating one of the generalized Cartan matrix axioms.
/// `axiom` is 1, 2 or 3 for a_ii = 2, a_ij <= 0, and a_ij = 0 <=> a_ji = 0.
class NotGCM : public Error {
 public:
  NotGCM(int i, int j, int axiom, const std::string& what)
      : Error(what), i_(i), j_(j), axiom_(axiom) {}
  int row() const { return i_; }
  int col() const { return j_; }
  int axiom() const { return axiom_; }

 private:
  int i_, j_, axiom_;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class NotDominant : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// Raised when an operation would need a positive real root of height above
/// the bound it was given.
class HeightBoundTooSmall : public Error {
 public:
  HeightBoundTooSmall(long needed, long bound)
      : Error("height bound " + std::to_string(bound) + " too small: a root of height " +
              std::to_string(needed) + " is required"),
        needed_(needed),
        bound_(bound) {}
  long needed() const { return needed_; }
  long bound() const { return bound_; }

 private:
  long needed_, bound_;
};

class NotSymmetrizable : public Error {
 public:
  using Error::Error;
};

class UnsupportedType : public Error {
 public:
  using Error::Error;
};

class NotHecke : public Error {
 public:
  using Error::Error;
};

class FoldNotApplicable : public Error {
 public:
  FoldNotApplicable(int k, const std::string& what) : Error(what), k_(k) {}
  /// 1-based index of the chain root that could not be folded.
  int index() const { return k_; }

 private:
  int k_;
};

/// The LS verdict disagrees with the Hecke + ddim characterization. This is an
/// internal consistency failure, never an input problem.
class CrossCheckMismatch : public Error {
 public:
  using Error::Error;
};

class CapHit : public Error {
 public:
  using Error::Error;
};

}  // namespace hpl
