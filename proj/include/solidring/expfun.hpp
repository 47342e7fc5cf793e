#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "solidring/extnat.hpp"
#include "solidring/primeset.hpp"
#include "solidring/text.hpp"

namespace solidring {

/// Eventually constant function from the primes to N ∪ {inf}: a default value
/// plus finitely many exceptions. Normal form (no exception equal to the
/// default) is established on construction, so structural equality is
/// pointwise equality.
class ExpFun {
 public:
  explicit ExpFun(ExtNat default_value, std::map<Nat, ExtNat> exceptions = {})
      : default_(std::move(default_value)), exceptions_(std::move(exceptions)) {
    for (auto it = exceptions_.begin(); it != exceptions_.end();) {
      require_prime(it->first);
      it = it->second == default_ ? exceptions_.erase(it) : std::next(it);
    }
  }

  static ExpFun constant(ExtNat value) { return ExpFun(std::move(value)); }

  const ExtNat& default_value() const { return default_; }
  const std::map<Nat, ExtNat>& exceptions() const { return exceptions_; }

  const ExtNat& operator()(const Nat& p) const {
    auto it = exceptions_.find(p);
    return it != exceptions_.end() ? it->second : default_;
  }

  friend bool operator==(const ExpFun& a, const ExpFun& b) {
    return a.default_ == b.default_ && a.exceptions_ == b.exceptions_;
  }
  friend bool operator!=(const ExpFun& a, const ExpFun& b) { return !(a == b); }

  static ExpFun pointwise_min(const ExpFun& a, const ExpFun& b) {
    return pointwise(a, b, [](const ExtNat& x, const ExtNat& y) { return ExtNat::min(x, y); });
  }

  static ExpFun pointwise_sup(const ExpFun& a, const ExpFun& b) {
    return pointwise(a, b, [](const ExtNat& x, const ExtNat& y) { return ExtNat::max(x, y); });
  }

  /// Pointwise supremum of the family {f_p}_{p in S} where f_p is supported
  /// at its own index prime with value factor(p): the result is factor on S
  /// and 0 off S. This is the computable form of a supremum over an infinite
  /// index set of singly-supported functions.
  static ExpFun sup_indexed(const PrimeSet& index, const ExpFun& factor) {
    ExtNat def = index.is_finite_set() ? ExtNat(0) : factor.default_value();
    std::map<Nat, ExtNat> exc;
    for (const Nat& p : index.exceptions())
      exc[p] = index.contains(p) ? factor(p) : ExtNat(0);
    for (const auto& [p, v] : factor.exceptions())
      if (exc.find(p) == exc.end()) exc[p] = index.contains(p) ? v : ExtNat(0);
    return ExpFun(def, std::move(exc));
  }

  /// The set {p : e(p) > 0}, when finite; nullopt when infinite. Decidable:
  /// infinite exactly when the default is positive.
  std::optional<std::vector<Nat>> positive_support() const {
    if (default_ != ExtNat(0)) return std::nullopt;
    std::vector<Nat> out;
    for (const auto& [p, v] : exceptions_)
      if (v > ExtNat(0)) out.push_back(p);
    return out;
  }

  bool everywhere_finite() const {
    if (default_.is_infinite()) return false;
    for (const auto& [p, v] : exceptions_)
      if (v.is_infinite()) return false;
    return true;
  }

  /// Whether {p : 0 < e(p) < inf} is finite.
  bool finite_value_support_finite() const {
    return !(default_.is_finite() && default_ > ExtNat(0));
  }

  /// The set {p : e(p) < inf} (finite or cofinite, hence a PrimeSet).
  PrimeSet finite_value_set() const {
    std::vector<Nat> exc;
    if (default_.is_infinite()) {
      for (const auto& [p, v] : exceptions_)
        if (v.is_finite()) exc.push_back(p);
      return PrimeSet::finite(std::move(exc));
    }
    for (const auto& [p, v] : exceptions_)
      if (v.is_infinite()) exc.push_back(p);
    return PrimeSet::cofinite(std::move(exc));
  }

  /// `e(default=0; 2=>3, 5=>inf)`; exceptions ascending.
  std::string str() const {
    std::string out = "e(default=" + default_.str();
    bool first = true;
    for (const auto& [p, v] : exceptions_) {
      out += first ? "; " : ", ";
      out += p.get_str() + "=>" + v.str();
      first = false;
    }
    return out + ")";
  }

  static ExpFun parse(Cursor& cur) {
    cur.expect("e(");
    cur.expect("default=");
    ExtNat def = parse_extnat(cur);
    std::map<Nat, ExtNat> exc;
    if (cur.try_consume(";")) {
      do {
        std::size_t at = cur.pos();
        Nat p = cur.parse_prime();
        if (exc.count(p)) throw ParseError(at, "duplicate prime " + p.get_str());
        cur.expect("=>");
        exc.emplace(std::move(p), parse_extnat(cur));
      } while (cur.try_consume(","));
    }
    cur.expect(")");
    return ExpFun(std::move(def), std::move(exc));
  }

  static ExpFun parse(const std::string& text) {
    Cursor cur(text);
    ExpFun out = parse(cur);
    cur.expect_end();
    return out;
  }

  static ExtNat parse_extnat(Cursor& cur) {
    if (cur.try_consume("inf")) return ExtNat::infinity();
    if (!cur.peek_digit()) cur.fail("expected a number or 'inf'");
    return ExtNat(cur.parse_nat());
  }

 private:
  template <typename Op>
  static ExpFun pointwise(const ExpFun& a, const ExpFun& b, Op op) {
    std::set<Nat> primes;
    for (const auto& [p, v] : a.exceptions_) primes.insert(p);
    for (const auto& [p, v] : b.exceptions_) primes.insert(p);
    std::map<Nat, ExtNat> exc;
    for (const Nat& p : primes) exc.emplace(p, op(a(p), b(p)));
    return ExpFun(op(a.default_, b.default_), std::move(exc));
  }

  ExtNat default_;
  std::map<Nat, ExtNat> exceptions_;
};

/// Pointwise minimum over a nonempty family.
inline ExpFun expfun_min(const std::vector<ExpFun>& family) {
  if (family.empty()) throw DomainError("expfun_min of an empty family");
  ExpFun out = family.front();
  for (std::size_t i = 1; i < family.size(); ++i) out = ExpFun::pointwise_min(out, family[i]);
  return out;
}

/// Pointwise supremum over a nonempty family.
inline ExpFun expfun_sup(const std::vector<ExpFun>& family) {
  if (family.empty()) throw DomainError("expfun_sup of an empty family");
  ExpFun out = family.front();
  for (std::size_t i = 1; i < family.size(); ++i) out = ExpFun::pointwise_sup(out, family[i]);
  return out;
}

}  // namespace solidring
