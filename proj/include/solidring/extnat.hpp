#pragma once

#include <string>
#include <utility>

#include "solidring/arith.hpp"
#include "solidring/errors.hpp"

namespace solidring {

/// Element of N ∪ {inf} with the obvious total order. Finite values are
/// arbitrary-precision and nonnegative.
class ExtNat {
 public:
  ExtNat() : finite_(true), value_(0) {}
  ExtNat(Nat value) : finite_(true), value_(std::move(value)) {
    if (value_ < 0) throw DomainError("ExtNat must be nonnegative");
  }
  ExtNat(unsigned long value) : finite_(true), value_(value) {}
  ExtNat(int value) : ExtNat(Nat(value)) {}

  static ExtNat infinity() {
    ExtNat e;
    e.finite_ = false;
    return e;
  }

  bool is_finite() const { return finite_; }
  bool is_infinite() const { return !finite_; }

  const Nat& finite_value() const {
    if (!finite_) throw DomainError("value is infinite");
    return value_;
  }

  friend bool operator==(const ExtNat& a, const ExtNat& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend bool operator!=(const ExtNat& a, const ExtNat& b) { return !(a == b); }
  friend bool operator<(const ExtNat& a, const ExtNat& b) {
    if (!a.finite_) return false;            // inf < x never
    if (!b.finite_) return true;             // finite < inf
    return a.value_ < b.value_;
  }
  friend bool operator<=(const ExtNat& a, const ExtNat& b) { return a < b || a == b; }
  friend bool operator>(const ExtNat& a, const ExtNat& b) { return b < a; }
  friend bool operator>=(const ExtNat& a, const ExtNat& b) { return b <= a; }

  static const ExtNat& min(const ExtNat& a, const ExtNat& b) { return b < a ? b : a; }
  static const ExtNat& max(const ExtNat& a, const ExtNat& b) { return a < b ? b : a; }

  std::string str() const { return finite_ ? value_.get_str() : "inf"; }

 private:
  bool finite_;
  Nat value_;
};

}  // namespace solidring
