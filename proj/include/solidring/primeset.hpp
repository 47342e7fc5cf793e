#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "solidring/arith.hpp"
#include "solidring/errors.hpp"
#include "solidring/text.hpp"

namespace solidring {

/// A finite or cofinite set of primes. Finite mode lists the members,
/// cofinite mode lists the non-members; either list is sorted, duplicate-free
/// and contains verified primes only. This family of sets is closed under
/// complement, union and intersection.
class PrimeSet {
 public:
  static PrimeSet finite(std::vector<Nat> primes) { return PrimeSet(Mode::Finite, std::move(primes)); }
  static PrimeSet cofinite(std::vector<Nat> excluded) { return PrimeSet(Mode::Cofinite, std::move(excluded)); }
  static PrimeSet all() { return cofinite({}); }
  static PrimeSet none() { return finite({}); }

  /// True when the set itself is finite (not: "has finitely many exceptions").
  bool is_finite_set() const { return mode_ == Mode::Finite; }
  bool is_empty() const { return mode_ == Mode::Finite && exceptions_.empty(); }
  bool is_all() const { return mode_ == Mode::Cofinite && exceptions_.empty(); }

  /// Members in finite mode, non-members in cofinite mode.
  const std::vector<Nat>& exceptions() const { return exceptions_; }

  bool contains(const Nat& p) const {
    bool listed = std::binary_search(exceptions_.begin(), exceptions_.end(), p);
    return mode_ == Mode::Finite ? listed : !listed;
  }

  PrimeSet complement() const {
    PrimeSet out = *this;
    out.mode_ = mode_ == Mode::Finite ? Mode::Cofinite : Mode::Finite;
    return out;
  }

  PrimeSet set_union(const PrimeSet& other) const {
    if (mode_ == Mode::Finite && other.mode_ == Mode::Finite)
      return finite(merge(exceptions_, other.exceptions_));
    if (mode_ == Mode::Cofinite && other.mode_ == Mode::Cofinite)
      return cofinite(intersection(exceptions_, other.exceptions_));
    const PrimeSet& fin = mode_ == Mode::Finite ? *this : other;
    const PrimeSet& cof = mode_ == Mode::Finite ? other : *this;
    return cofinite(difference(cof.exceptions_, fin.exceptions_));
  }

  PrimeSet set_intersection(const PrimeSet& other) const {
    return complement().set_union(other.complement()).complement();
  }

  PrimeSet set_difference(const PrimeSet& other) const {
    return set_intersection(other.complement());
  }

  bool is_subset_of(const PrimeSet& other) const { return set_intersection(other) == *this; }

  friend bool operator==(const PrimeSet& a, const PrimeSet& b) {
    return a.mode_ == b.mode_ && a.exceptions_ == b.exceptions_;
  }
  friend bool operator!=(const PrimeSet& a, const PrimeSet& b) { return !(a == b); }

  /// `P`, `P\{2,3}`, `{2,3,5}` or `{}`.
  std::string str() const {
    if (is_all()) return "P";
    std::string body = "{";
    for (std::size_t i = 0; i < exceptions_.size(); ++i) {
      if (i) body += ",";
      body += exceptions_[i].get_str();
    }
    body += "}";
    return mode_ == Mode::Finite ? body : "P\\" + body;
  }

  static PrimeSet parse(Cursor& cur) {
    if (cur.try_consume("P")) {
      if (cur.try_consume("\\")) return cofinite(parse_braced(cur));
      return all();
    }
    if (cur.peek() == '{') return finite(parse_braced(cur));
    cur.fail("expected a prime set (P, P\\{..} or {..})");
  }

  static PrimeSet parse(const std::string& text) {
    Cursor cur(text);
    PrimeSet out = parse(cur);
    cur.expect_end();
    return out;
  }

 private:
  enum class Mode { Finite, Cofinite };

  PrimeSet(Mode mode, std::vector<Nat> exceptions) : mode_(mode), exceptions_(std::move(exceptions)) {
    std::sort(exceptions_.begin(), exceptions_.end());
    exceptions_.erase(std::unique(exceptions_.begin(), exceptions_.end()), exceptions_.end());
    for (const Nat& p : exceptions_) require_prime(p);
  }

  static std::vector<Nat> parse_braced(Cursor& cur) {
    cur.expect("{");
    std::vector<Nat> primes;
    if (!cur.try_consume("}")) {
      do {
        primes.push_back(cur.parse_prime());
      } while (cur.try_consume(","));
      cur.expect("}");
    }
    return primes;
  }

  static std::vector<Nat> merge(const std::vector<Nat>& a, const std::vector<Nat>& b) {
    std::vector<Nat> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }
  static std::vector<Nat> intersection(const std::vector<Nat>& a, const std::vector<Nat>& b) {
    std::vector<Nat> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }
  static std::vector<Nat> difference(const std::vector<Nat>& a, const std::vector<Nat>& b) {
    std::vector<Nat> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  Mode mode_;
  std::vector<Nat> exceptions_;
};

}  // namespace solidring
