#pragma once

// Abstract syntax of the object language: Kleene's schemata (zero, successor,
// projection, composition, primitive recursion, minimization) extended with a
// universal application, an oracle query, a nowhere-defined program, and a
// small set of constant-cost data primitives (const, Cantor pair/unpair,
// code-pair, bounded evaluation). Terms are immutable and structurally shared;
// ill-formed shapes are rejected at construction time, so every Term has a
// well-defined arity.

#include "cwb/nat.hpp"

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cwb {

enum class Kind : std::uint8_t {
    Zero,     // k-ary constant 0
    Succ,     // unary successor
    Proj,     // k-ary projection onto index i
    Comp,     // outer(inner_1(args), ..., inner_m(args))
    PrimRec,  // f(0,xs)=base(xs); f(y+1,xs)=step(y, f(y,xs), xs)
    Mu,       // least y with body(y,xs)=0
    Univ,     // w |-> phi_{left(w)}(right(w)), same fuel budget
    Query,    // oracle membership, 1/0; diverges without an oracle
    Bottom,   // unary, diverges
    Const,    // unary, ignores its argument, returns a fixed natural
    Pair,     // binary Cantor pair
    UnpairL,  // unary, left Cantor component
    UnpairR,  // unary, right Cantor component
    CPair,    // binary code-pair (the pairing used by encode)
    BEval,    // (e,n,t) |-> 1 if phi_e(n) converges within fuel t, else 0
};

class arity_error : public std::invalid_argument {
  public:
    explicit arity_error(const std::string& what) : std::invalid_argument(what) {}
};

class Term {
  public:
    Term() = default;

    Kind kind() const { return node_->kind; }
    std::uint64_t arity() const { return node_->arity; }
    // Zero: param_a = arity. Proj: param_a = arity, param_b = index.
    std::uint64_t param_a() const { return node_->a; }
    std::uint64_t param_b() const { return node_->b; }
    const Nat& const_value() const { return node_->value; }
    const std::vector<Term>& children() const { return node_->kids; }
    bool valid() const { return node_ != nullptr; }

    friend bool operator==(const Term& lhs, const Term& rhs) {
        if (lhs.node_ == rhs.node_) return true;
        if (!lhs.node_ || !rhs.node_) return false;
        const Node& a = *lhs.node_;
        const Node& b = *rhs.node_;
        if (a.kind != b.kind || a.a != b.a || a.b != b.b || a.value != b.value ||
            a.kids.size() != b.kids.size())
            return false;
        for (std::size_t i = 0; i < a.kids.size(); ++i)
            if (!(a.kids[i] == b.kids[i])) return false;
        return true;
    }
    friend bool operator!=(const Term& lhs, const Term& rhs) { return !(lhs == rhs); }

    static Term zero(std::uint64_t k) { return make(Kind::Zero, k, 0, {}, {}, k); }

    static Term succ() { return make(Kind::Succ, 0, 0, {}, {}, 1); }

    static Term proj(std::uint64_t k, std::uint64_t i) {
        if (i >= k) throw arity_error("proj: index must be below arity");
        return make(Kind::Proj, k, i, {}, {}, k);
    }

    static Term comp(Term outer, std::vector<Term> inners) {
        if (inners.empty()) throw arity_error("comp: needs at least one inner term");
        std::uint64_t k = inners.front().arity();
        for (const Term& g : inners)
            if (g.arity() != k) throw arity_error("comp: inner arities disagree");
        if (outer.arity() != inners.size())
            throw arity_error("comp: outer arity must equal number of inners");
        std::vector<Term> kids;
        kids.reserve(inners.size() + 1);
        kids.push_back(std::move(outer));
        for (Term& g : inners) kids.push_back(std::move(g));
        return make(Kind::Comp, 0, 0, {}, std::move(kids), k);
    }

    static Term primrec(Term base, Term step) {
        std::uint64_t k = base.arity();
        if (step.arity() != k + 2)
            throw arity_error("primrec: step arity must be base arity + 2");
        return make(Kind::PrimRec, 0, 0, {}, {std::move(base), std::move(step)}, k + 1);
    }

    static Term mu(Term body) {
        if (body.arity() == 0) throw arity_error("mu: body must have arity >= 1");
        std::uint64_t k = body.arity() - 1;
        return make(Kind::Mu, 0, 0, {}, {std::move(body)}, k);
    }

    static Term univ() { return make(Kind::Univ, 0, 0, {}, {}, 1); }
    static Term query() { return make(Kind::Query, 0, 0, {}, {}, 1); }
    static Term bottom() { return make(Kind::Bottom, 0, 0, {}, {}, 1); }
    static Term constant(Nat v) { return make(Kind::Const, 0, 0, std::move(v), {}, 1); }
    static Term pair_prim() { return make(Kind::Pair, 0, 0, {}, {}, 2); }
    static Term unpair_l() { return make(Kind::UnpairL, 0, 0, {}, {}, 1); }
    static Term unpair_r() { return make(Kind::UnpairR, 0, 0, {}, {}, 1); }
    static Term cpair() { return make(Kind::CPair, 0, 0, {}, {}, 2); }
    static Term beval() { return make(Kind::BEval, 0, 0, {}, {}, 3); }

  private:
    struct Node {
        Kind kind;
        std::uint64_t a = 0;
        std::uint64_t b = 0;
        Nat value;
        std::vector<Term> kids;
        std::uint64_t arity = 0;
    };

    static Term make(Kind kind, std::uint64_t a, std::uint64_t b, Nat value,
                     std::vector<Term> kids, std::uint64_t arity) {
        Term t;
        t.node_ = std::make_shared<const Node>(
            Node{kind, a, b, std::move(value), std::move(kids), arity});
        return t;
    }

    std::shared_ptr<const Node> node_;
};

}  // namespace cwb
