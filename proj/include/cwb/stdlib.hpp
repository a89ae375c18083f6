#pragma once

// Object-level building blocks used by the constructions. The arithmetic
// entries (add, mul, monus, sgn, ...) are the classical primitive-recursive
// definitions and cost time linear in their recursion argument; they are
// meant for small control values. `select` routes large values through
// projections, so dispatching on a 0/1 flag stays cheap no matter how big
// the selected values are.

#include "cwb/codec.hpp"
#include "cwb/numbering.hpp"
#include "cwb/term.hpp"

#include <stdexcept>
#include <string>

namespace cwb::stdlib {

inline Term identity() { return Term::proj(1, 0); }

// k-ary constant; evaluates its first argument slot only through a projection.
inline Term constk(std::uint64_t k, const Nat& v) {
    if (k == 1) return Term::constant(v);
    return Term::comp(Term::constant(v), {Term::proj(k, 0)});
}

// add(y, x) = y + x
inline Term add() {
    return Term::primrec(Term::proj(1, 0),
                         Term::comp(Term::succ(), {Term::proj(3, 1)}));
}

// pred(0) = 0, pred(y+1) = y
inline Term pred() { return Term::primrec(Term::zero(0), Term::proj(2, 0)); }

// monus(x, y) = max(x - y, 0)
inline Term monus() {
    Term monus1 =
        Term::primrec(Term::proj(1, 0), Term::comp(pred(), {Term::proj(3, 1)}));
    return Term::comp(std::move(monus1), {Term::proj(2, 1), Term::proj(2, 0)});
}

// mul(y, x) = y * x
inline Term mul() {
    return Term::primrec(
        Term::zero(1), Term::comp(add(), {Term::proj(3, 1), Term::proj(3, 2)}));
}

inline Term one0() { return Term::comp(Term::succ(), {Term::zero(0)}); }

// sgn(0) = 0, sgn(y+1) = 1
inline Term sgn() { return Term::primrec(Term::zero(0), constk(2, 1)); }

// cosgn(0) = 1, cosgn(y+1) = 0
inline Term cosgn() { return Term::primrec(one0(), constk(2, 0)); }

// select(c, a, b) = a when c = 0, else b; costs min(c,1)+1 rule applications
// beyond the projections, independent of the sizes of a and b.
inline Term select() { return Term::primrec(Term::proj(2, 0), Term::proj(4, 3)); }

// even(n) in {0,1}
inline Term even() {
    return Term::primrec(one0(), Term::comp(cosgn(), {Term::proj(2, 1)}));
}

// unary, diverges on every input
inline Term diverge() { return Term::mu(constk(2, 1)); }

// Resolves the documented library names to codes. const(k) takes a decimal
// parameter, e.g. "const(7)".
inline Code lookup(const std::string& name) {
    if (name.rfind("const(", 0) == 0 && name.back() == ')') {
        Nat v = nat_from_string(name.substr(6, name.size() - 7));
        return encode(Term::constant(v));
    }
    if (name == "identity") return encode(identity());
    if (name == "add") return encode(add());
    if (name == "mul") return encode(mul());
    if (name == "pred") return encode(pred());
    if (name == "monus") return encode(monus());
    if (name == "pair") return encode(Term::pair_prim());
    if (name == "unpair_left") return encode(Term::unpair_l());
    if (name == "unpair_right") return encode(Term::unpair_r());
    if (name == "cpair") return encode(Term::cpair());
    if (name == "beval") return encode(Term::beval());
    if (name == "sgn") return encode(sgn());
    if (name == "cosgn") return encode(cosgn());
    if (name == "select") return encode(select());
    if (name == "even") return encode(even());
    if (name == "diverge") return encode(diverge());
    if (name == "smn") return smn_term();
    if (name == "universal") return universal_code();
    throw std::invalid_argument("stdlib: unknown name '" + name + "'");
}

}  // namespace cwb::stdlib
