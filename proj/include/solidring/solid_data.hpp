#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "solidring/expfun.hpp"

namespace solidring {

enum class SolidType { ZeroRing, Cyclic, SubringOfQ, ProductType, Colimit };

/// Requesting torsion invariants of q=1 data: the torsion is the whole ring,
/// not an invariant pair.
class TorsionOfCyclicError : public DomainError {
 public:
  TorsionOfCyclicError() : DomainError("q=1 data is all torsion") {}
};

/// `Z` / `Q` / `Z[J^-1]` with the canonical collapses for the empty and the
/// full set of primes.
inline std::string localized_str(const PrimeSet& inverted) {
  if (inverted.is_empty()) return "Z";
  if (inverted.is_all()) return "Q";
  return "Z[" + inverted.str() + "^-1]";
}

/// Classification data of a solid ring: an exponent function e and a binary
/// parameter q. e(p) is the least a such that Z[1/p] x Z/p^a maps into the
/// ring; q = 1 exactly when the ring has nonzero characteristic, which forces
/// e to be finite everywhere with finitely many positive values.
class SolidData {
 public:
  SolidData(ExpFun e, int q) : e_(std::move(e)), q_(q) {
    if (q != 0 && q != 1) throw DomainError("q must be 0 or 1");
    if (q == 1) {
      if (!e_.everywhere_finite())
        throw DomainError("q=1 requires a finite exponent at every prime");
      if (!e_.positive_support())
        throw DomainError("q=1 requires finitely many positive exponents");
    }
  }

  static SolidData cyclic(const Nat& n) {
    if (n < 1) throw DomainError("cyclic modulus must be >= 1");
    std::map<Nat, ExtNat> exc;
    for (const auto& [p, k] : factorize(n)) exc.emplace(p, ExtNat(k));
    return SolidData(ExpFun(ExtNat(0), std::move(exc)), 1);
  }

  static SolidData zero_ring() { return SolidData(ExpFun(ExtNat(0)), 1); }

  const ExpFun& exponents() const { return e_; }
  int q() const { return q_; }

  /// 0 for q=0; the cyclic modulus (1 for the zero ring) for q=1.
  Nat characteristic() const {
    if (q_ == 0) return 0;
    Nat n = 1;
    for (const auto& [p, v] : e_.exceptions()) n *= pow_nat(p, v.finite_value());
    return n;
  }

  SolidType classify() const {
    if (q_ == 1) return e_.exceptions().empty() ? SolidType::ZeroRing : SolidType::Cyclic;
    bool zero_or_inf = default_zero_or_inf(e_.default_value());
    for (const auto& [p, v] : e_.exceptions()) zero_or_inf = zero_or_inf && default_zero_or_inf(v);
    if (zero_or_inf) return SolidType::SubringOfQ;
    return e_.finite_value_support_finite() ? SolidType::ProductType : SolidType::Colimit;
  }

  friend bool operator==(const SolidData& a, const SolidData& b) {
    return a.q_ == b.q_ && a.e_ == b.e_;
  }
  friend bool operator!=(const SolidData& a, const SolidData& b) { return !(a == b); }

  /// Canonical ring name; injective on SolidData.
  std::string ring_str() const {
    switch (classify()) {
      case SolidType::ZeroRing:
        return "Z/1";
      case SolidType::Cyclic:
        return "Z/" + characteristic().get_str();
      case SolidType::SubringOfQ:
        return localized_str(inverted_set());
      case SolidType::ProductType: {
        Nat n = 1;
        for (const auto& [p, v] : e_.exceptions())
          if (v.is_finite() && v > ExtNat(0)) n *= pow_nat(p, v.finite_value());
        return localized_str(e_.finite_value_set()) + " x Z/" + n.get_str();
      }
      case SolidType::Colimit: {
        // The infinitely many finite exponents, indexed by J = {p : e(p) < inf};
        // primes off J are recorded by J itself.
        std::map<Nat, ExtNat> exc;
        for (const auto& [p, v] : e_.exceptions())
          if (v.is_finite()) exc.emplace(p, v);
        ExpFun restricted(e_.default_value(), std::move(exc));
        return "Solid(J=" + e_.finite_value_set().str() + "; e=" + restricted.str() + ")";
      }
    }
    throw DomainError("unreachable");
  }

  /// The canonical one-line form consumed and produced by the CLI.
  std::string line() const {
    return "solid(q=" + std::to_string(q_) + "; " + e_.str() + ")  ring=" + ring_str();
  }

  /// Parses `solid(q=..; e(..))`, ignoring an optional trailing `ring=...`
  /// annotation so that printed lines round-trip.
  static SolidData parse_line(const std::string& text) {
    Cursor cur(text);
    cur.expect("solid(");
    cur.expect("q=");
    int q;
    if (cur.try_consume("0"))
      q = 0;
    else if (cur.try_consume("1"))
      q = 1;
    else
      cur.fail("q must be 0 or 1");
    cur.expect(";");
    ExpFun e = ExpFun::parse(cur);
    cur.expect(")");
    if (!cur.at_end()) cur.expect("ring=");  // rest of the line is display only
    return SolidData(std::move(e), q);
  }

 private:
  /// {p : e(p) = 0}, the inverted primes of a subring of Q.
  PrimeSet inverted_set() const {
    std::vector<Nat> exc;
    for (const auto& [p, v] : e_.exceptions()) exc.push_back(p);
    return e_.default_value() == ExtNat(0) ? PrimeSet::cofinite(std::move(exc))
                                           : PrimeSet::finite(std::move(exc));
  }

  static bool default_zero_or_inf(const ExtNat& v) { return v == ExtNat(0) || v.is_infinite(); }

  ExpFun e_;
  int q_;
};

inline bool iso(const SolidData& a, const SolidData& b) { return a == b; }

struct TorsionInvariants {
  ExpFun torsion;              // e where 0 < e < inf, 0 elsewhere
  PrimeSet quotient_inverted;  // {p : e(p) < inf}; the quotient by torsion is Z[J^-1]
};

inline TorsionInvariants torsion_invariants(const SolidData& s) {
  if (s.q() == 1) throw TorsionOfCyclicError();
  const ExpFun& e = s.exponents();
  auto clamp = [](const ExtNat& v) {
    return (v.is_finite() && v > ExtNat(0)) ? v : ExtNat(0);
  };
  std::map<Nat, ExtNat> exc;
  for (const auto& [p, v] : e.exceptions()) exc.emplace(p, clamp(v));
  return {ExpFun(clamp(e.default_value()), std::move(exc)), e.finite_value_set()};
}

/// Coproduct (tensor over Z) of solid rings: pointwise minimum of the
/// exponent functions, maximum of the q's. Always yields valid data: a q=1
/// member already bounds the minimum into the cyclic regime.
inline SolidData coproduct(const std::vector<SolidData>& family) {
  if (family.empty()) throw DomainError("coproduct of an empty family");
  ExpFun e = family.front().exponents();
  int q = family.front().q();
  for (std::size_t i = 1; i < family.size(); ++i) {
    e = ExpFun::pointwise_min(e, family[i].exponents());
    q = std::max(q, family[i].q());
  }
  return SolidData(std::move(e), q);
}

/// Core data of a limit of rings with the given core data: pointwise
/// supremum; q = 1 only when every member has q = 1 and the supremum still
/// describes a finite cyclic ring.
inline SolidData limit_sup(const std::vector<SolidData>& family) {
  if (family.empty()) throw DomainError("limit_sup of an empty family");
  ExpFun e = family.front().exponents();
  bool all_q1 = family.front().q() == 1;
  for (std::size_t i = 1; i < family.size(); ++i) {
    e = ExpFun::pointwise_sup(e, family[i].exponents());
    all_q1 = all_q1 && family[i].q() == 1;
  }
  int q = (all_q1 && e.everywhere_finite() && e.positive_support().has_value()) ? 1 : 0;
  return SolidData(std::move(e), q);
}

struct ColimitBound {
  SolidData bound;  // upper bound on e, lower bound on q
  bool exact;
};

/// Bound on the core data of a colimit: e at most the pointwise minimum, q at
/// least the maximum. The bound is exact only when the caller asserts that
/// every input ring is itself solid (the colimit is then the coproduct); a
/// singleton diagram is trivially exact.
inline ColimitBound colimit_bound(const std::vector<SolidData>& family, bool inputs_are_solid) {
  SolidData bound = coproduct(family);
  return {std::move(bound), inputs_are_solid || family.size() == 1};
}

}  // namespace solidring
