#pragma once

#include <memory>
#include <string>
#include <utility>
#include <variant>

#include "solidring/expfun.hpp"
#include "solidring/primeset.hpp"
#include "solidring/solid_data.hpp"
#include "solidring/text.hpp"

namespace solidring {

struct RingExpr;
using ExprPtr = std::shared_ptr<const RingExpr>;

/// AST of the ring-expression language. Immutable; shared subtrees are fine.
struct RingExpr {
  struct IntegersZ {};
  struct RationalsQ {};
  struct ProfiniteZ {};
  struct Field0 {};  // an unspecified field of characteristic zero
  struct Cyclic {
    Nat modulus;  // >= 1
  };
  struct LocalizedZ {
    PrimeSet inverted;
  };
  struct LocalAt {
    Nat p;  // Z localized at the prime ideal (p)
  };
  struct Padic {
    Nat p;
  };
  struct Product {
    ExprPtr left, right;
  };
  struct ProdCyclic {  // Prod(p in S) Z/p^e; e finite at every index prime
    PrimeSet index;
    ExpFun exponents;
  };
  struct ProdPadic {  // Prod(p in S) Z_p
    PrimeSet index;
  };
  struct Poly {
    ExprPtr base;  // polynomial ring over base, any set of indeterminates
  };

  using Node = std::variant<IntegersZ, RationalsQ, ProfiniteZ, Field0, Cyclic, LocalizedZ,
                            LocalAt, Padic, Product, ProdCyclic, ProdPadic, Poly>;
  Node node;
};

template <typename T>
ExprPtr make_expr(T node) {
  return std::make_shared<RingExpr>(RingExpr{std::move(node)});
}

/// True when e is finite at every prime of the index set (decidable from the
/// representations).
inline bool finite_on_index(const PrimeSet& index, const ExpFun& e) {
  if (!index.is_finite_set() && e.default_value().is_infinite()) return false;
  if (index.is_finite_set()) {
    for (const Nat& p : index.exceptions())
      if (e(p).is_infinite()) return false;
    return true;
  }
  for (const auto& [p, v] : e.exceptions())
    if (v.is_infinite() && index.contains(p)) return false;
  return true;
}

inline ExprPtr prod_cyclic(PrimeSet index, ExpFun exponents) {
  if (!finite_on_index(index, exponents))
    throw DomainError("infinite exponent inside Prod factor");
  return make_expr(RingExpr::ProdCyclic{std::move(index), std::move(exponents)});
}

inline bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  using E = RingExpr;
  if (a->node.index() != b->node.index()) return false;
  if (auto* c = std::get_if<E::Cyclic>(&a->node))
    return c->modulus == std::get<E::Cyclic>(b->node).modulus;
  if (auto* l = std::get_if<E::LocalizedZ>(&a->node))
    return l->inverted == std::get<E::LocalizedZ>(b->node).inverted;
  if (auto* l = std::get_if<E::LocalAt>(&a->node)) return l->p == std::get<E::LocalAt>(b->node).p;
  if (auto* p = std::get_if<E::Padic>(&a->node)) return p->p == std::get<E::Padic>(b->node).p;
  if (auto* pr = std::get_if<E::Product>(&a->node)) {
    const auto& o = std::get<E::Product>(b->node);
    return expr_equal(pr->left, o.left) && expr_equal(pr->right, o.right);
  }
  if (auto* pc = std::get_if<E::ProdCyclic>(&a->node)) {
    const auto& o = std::get<E::ProdCyclic>(b->node);
    return pc->index == o.index && pc->exponents == o.exponents;
  }
  if (auto* pp = std::get_if<E::ProdPadic>(&a->node))
    return pp->index == std::get<E::ProdPadic>(b->node).index;
  if (auto* po = std::get_if<E::Poly>(&a->node))
    return expr_equal(po->base, std::get<E::Poly>(b->node).base);
  return true;  // nullary constructors
}

/// Canonical form: Z[{}^-1] becomes Z and Z[P^-1] becomes Q, recursively.
inline ExprPtr normalize(const ExprPtr& expr) {
  using E = RingExpr;
  if (auto* l = std::get_if<E::LocalizedZ>(&expr->node)) {
    if (l->inverted.is_empty()) return make_expr(E::IntegersZ{});
    if (l->inverted.is_all()) return make_expr(E::RationalsQ{});
    return expr;
  }
  if (auto* pr = std::get_if<E::Product>(&expr->node)) {
    ExprPtr left = normalize(pr->left);
    ExprPtr right = normalize(pr->right);
    if (left == pr->left && right == pr->right) return expr;
    return make_expr(E::Product{std::move(left), std::move(right)});
  }
  if (auto* po = std::get_if<E::Poly>(&expr->node)) {
    ExprPtr base = normalize(po->base);
    return base == po->base ? expr : make_expr(E::Poly{std::move(base)});
  }
  return expr;
}

namespace detail {

inline std::string print_node(const ExprPtr& expr);

inline std::string expspec_str(const ExpFun& e) {
  if (e.exceptions().empty() && e.default_value().is_finite())
    return e.default_value().str();
  return e.str();
}

inline std::string print_factor(const ExprPtr& expr) {
  if (std::holds_alternative<RingExpr::Product>(expr->node))
    return "(" + print_node(expr) + ")";
  return print_node(expr);
}

inline std::string print_node(const ExprPtr& expr) {
  using E = RingExpr;
  if (std::holds_alternative<E::IntegersZ>(expr->node)) return "Z";
  if (std::holds_alternative<E::RationalsQ>(expr->node)) return "Q";
  if (std::holds_alternative<E::ProfiniteZ>(expr->node)) return "Zhat";
  if (std::holds_alternative<E::Field0>(expr->node)) return "Field(0)";
  if (auto* c = std::get_if<E::Cyclic>(&expr->node)) return "Z/" + c->modulus.get_str();
  if (auto* l = std::get_if<E::LocalizedZ>(&expr->node))
    return "Z[" + l->inverted.str() + "^-1]";
  if (auto* l = std::get_if<E::LocalAt>(&expr->node)) return "Z_(" + l->p.get_str() + ")";
  if (auto* p = std::get_if<E::Padic>(&expr->node)) return "Z_" + p->p.get_str();
  if (auto* pr = std::get_if<E::Product>(&expr->node))
    return print_node(pr->left) + " x " + print_factor(pr->right);
  if (auto* pc = std::get_if<E::ProdCyclic>(&expr->node))
    return "Prod(p in " + pc->index.str() + ") Z/p^" + expspec_str(pc->exponents);
  if (auto* pp = std::get_if<E::ProdPadic>(&expr->node))
    return "Prod(p in " + pp->index.str() + ") Z_p";
  if (auto* po = std::get_if<E::Poly>(&expr->node)) return "Poly(" + print_node(po->base) + ")";
  throw DomainError("unreachable");
}

inline ExprPtr parse_expr_at(Cursor& cur);

inline ExprPtr parse_term(Cursor& cur) {
  using E = RingExpr;
  if (cur.try_consume("(")) {
    ExprPtr inner = parse_expr_at(cur);
    cur.expect(")");
    return inner;
  }
  if (cur.try_consume("Poly(")) {
    ExprPtr base = parse_expr_at(cur);
    cur.expect(")");
    return make_expr(E::Poly{std::move(base)});
  }
  if (cur.try_consume("Field(")) {
    cur.expect("0");
    cur.expect(")");
    return make_expr(E::Field0{});
  }
  if (cur.try_consume("Prod(")) {
    cur.expect("p");
    cur.expect("in");
    PrimeSet index = PrimeSet::parse(cur);
    cur.expect(")");
    if (cur.try_consume("Z/p^")) {
      std::size_t at = cur.pos();
      ExpFun e = cur.peek() == 'e' ? ExpFun::parse(cur) : ExpFun(ExtNat(cur.parse_nat()));
      if (!finite_on_index(index, e))
        throw ParseError(at, "infinite exponent inside Prod factor");
      return make_expr(E::ProdCyclic{std::move(index), std::move(e)});
    }
    if (cur.try_consume("Z_p")) return make_expr(E::ProdPadic{std::move(index)});
    cur.fail("expected Z/p^<exp> or Z_p after Prod(..)");
  }
  if (cur.try_consume("Zhat")) return make_expr(E::ProfiniteZ{});
  if (cur.try_consume("Z/")) {
    std::size_t at = cur.pos();
    Nat n = cur.parse_nat();
    if (n < 1) throw ParseError(at, "modulus must be >= 1");
    cur.try_consume("Z");  // optional trailing Z, as in Z/nZ
    return make_expr(E::Cyclic{std::move(n)});
  }
  if (cur.try_consume("Z[")) {
    if (cur.try_consume("1/")) {
      std::vector<Nat> primes{cur.parse_prime()};
      while (cur.try_consume(",")) {
        cur.expect("1/");
        primes.push_back(cur.parse_prime());
      }
      cur.expect("]");
      return make_expr(E::LocalizedZ{PrimeSet::finite(std::move(primes))});
    }
    PrimeSet inverted = PrimeSet::parse(cur);
    cur.expect("^-1");
    cur.expect("]");
    return make_expr(E::LocalizedZ{std::move(inverted)});
  }
  if (cur.try_consume("Z_(")) {
    Nat p = cur.parse_prime();
    cur.expect(")");
    return make_expr(E::LocalAt{std::move(p)});
  }
  if (cur.try_consume("Z_")) return make_expr(E::Padic{cur.parse_prime()});
  if (cur.try_consume("Z")) return make_expr(E::IntegersZ{});
  if (cur.try_consume("Q")) return make_expr(E::RationalsQ{});
  cur.fail("expected a ring expression");
}

inline ExprPtr parse_expr_at(Cursor& cur) {
  ExprPtr out = parse_term(cur);
  while (cur.try_consume("x"))
    out = make_expr(RingExpr::Product{std::move(out), parse_term(cur)});
  return out;
}

}  // namespace detail

inline ExprPtr parse_expr(const std::string& text) {
  Cursor cur(text);
  ExprPtr out = detail::parse_expr_at(cur);
  cur.expect_end();
  return out;
}

/// Canonical text; parse(print_expr(x)) is structurally normalize(x).
inline std::string print_expr(const ExprPtr& expr) { return detail::print_node(normalize(expr)); }

}  // namespace solidring
