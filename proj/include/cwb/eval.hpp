#pragma once

// Fuel-bounded operational semantics. One budget is threaded through the
// whole run, including nested `univ` dispatches, so "converges within s
// steps" is a single monotone notion: if a run converges at fuel F it
// converges with the same value and step count at every fuel above F.
//
// Step costs (normative): every schema-rule application costs 1; primitive
// recursion charges 1 per unfolding; mu charges 1 per candidate; univ costs
// 1 plus 1 for decoding plus the inner run; beval costs 1 plus the fuel the
// bounded sub-run actually consumed (at most its bound). `bottom`, `query`
// without an oracle, and codes that do not decode to a unary program all
// exhaust whatever budget remains.
//
// univ and beval realize the oracle-free numbering: their sub-runs never see
// the ambient oracle context.

#include "cwb/codec.hpp"
#include "cwb/nat.hpp"
#include "cwb/pairing.hpp"
#include "cwb/term.hpp"

#include <atomic>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace cwb {

struct OracleContext {
    std::set<Nat> members;

    bool contains(const Nat& n) const { return members.count(n) > 0; }
};

struct EvalOutcome {
    bool converged = false;
    Nat value;                 // meaningful when converged
    std::uint64_t steps = 0;   // fuel consumed; only reported when converged
    std::uint64_t fuel = 0;    // the supplied budget

    static EvalOutcome make_converged(Nat v, std::uint64_t steps, std::uint64_t fuel) {
        return {true, std::move(v), steps, fuel};
    }
    static EvalOutcome make_exhausted(std::uint64_t fuel) { return {false, Nat(0), 0, fuel}; }

    friend bool operator==(const EvalOutcome& a, const EvalOutcome& b) {
        if (a.converged != b.converged) return false;
        if (!a.converged) return true;
        return a.value == b.value;
    }
};

struct EvalResult {
    EvalOutcome outcome;
    bool queried = false;
    Nat max_query;  // largest value passed to `query`, when queried

    // Least u such that the run depends only on oracle membership below u.
    Nat use() const { return queried ? max_query + 1 : Nat(0); }
};

namespace detail {

inline std::atomic<std::uint64_t> eval_invocation_count{0};

struct fuel_exhausted {};

class Machine {
  public:
    Machine(const OracleContext* oracle, std::uint64_t fuel, std::map<Nat, Term>* cache)
        : oracle_(oracle), fuel_(fuel), cache_(cache) {}

    std::uint64_t consumed() const { return consumed_; }
    bool queried() const { return queried_; }
    const Nat& max_query() const { return max_query_; }

    Nat run(const Term& t, const std::vector<Nat>& args) {
        switch (t.kind()) {
            case Kind::Zero:
                charge(1);
                return 0;
            case Kind::Succ:
                charge(1);
                return args[0] + 1;
            case Kind::Proj:
                charge(1);
                return args[t.param_b()];
            case Kind::Const:
                charge(1);
                return t.const_value();
            case Kind::Pair:
                charge(1);
                return pair(args[0], args[1]);
            case Kind::UnpairL:
                charge(1);
                return unpair(args[0]).first;
            case Kind::UnpairR:
                charge(1);
                return unpair(args[0]).second;
            case Kind::CPair:
                charge(1);
                return code_pair(args[0], args[1]);
            case Kind::Query: {
                charge(1);
                if (!oracle_) exhaust();
                queried_ = true;
                if (args[0] > max_query_) max_query_ = args[0];
                return oracle_->contains(args[0]) ? 1 : 0;
            }
            case Kind::Bottom:
                exhaust();
            case Kind::Comp: {
                charge(1);
                const auto& kids = t.children();
                std::vector<Nat> inner_vals;
                inner_vals.reserve(kids.size() - 1);
                for (std::size_t i = 1; i < kids.size(); ++i)
                    inner_vals.push_back(run(kids[i], args));
                return run(kids[0], inner_vals);
            }
            case Kind::PrimRec: {
                const Term& base = t.children()[0];
                const Term& step = t.children()[1];
                const Nat& bound = args[0];
                std::vector<Nat> rest(args.begin() + 1, args.end());
                charge(1);
                Nat acc = run(base, rest);
                std::vector<Nat> step_args(args.size() + 1);
                for (std::size_t i = 1; i < args.size(); ++i) step_args[i + 1] = args[i];
                for (Nat i = 0; i < bound; ++i) {
                    charge(1);
                    step_args[0] = i;
                    step_args[1] = std::move(acc);
                    acc = run(step, step_args);
                }
                return acc;
            }
            case Kind::Mu: {
                const Term& body = t.children()[0];
                std::vector<Nat> body_args(args.size() + 1);
                for (std::size_t i = 0; i < args.size(); ++i) body_args[i + 1] = args[i];
                for (Nat y = 0;; ++y) {
                    charge(1);
                    body_args[0] = y;
                    if (run(body, body_args) == 0) return y;
                }
            }
            case Kind::Univ: {
                charge(1);
                auto [e, n] = unpair(args[0]);
                return run_phi(e, n);
            }
            case Kind::BEval: {
                charge(1);
                const Nat& bound = args[2];
                std::uint64_t remaining = fuel_ - consumed_;
                bool bound_fits = fits_u64(bound) && to_u64(bound) <= remaining;
                std::uint64_t budget = bound_fits ? to_u64(bound) : remaining;
                Machine sub(nullptr, budget, cache_);
                bool inner_converged = true;
                try {
                    sub.run_phi(args[0], args[1]);
                } catch (const fuel_exhausted&) {
                    inner_converged = false;
                }
                if (inner_converged) {
                    charge(sub.consumed());
                    return 1;
                }
                if (!bound_fits) exhaust();  // cannot tell "within bound" from here
                charge(budget);
                return 0;
            }
        }
        exhaust();  // unreachable
    }

    // phi_e(n) within this machine: decode (cost 1), then run under the
    // unary convention -- a code not naming a unary program diverges.
    Nat run_phi(const Nat& e, const Nat& n) {
        charge(1);
        const Term& t = decode_cached(e);
        if (t.arity() != 1) exhaust();
        return run(t, {n});
    }

  private:
    void charge(std::uint64_t n) {
        if (n > fuel_ - consumed_) exhaust();
        consumed_ += n;
    }

    [[noreturn]] void exhaust() {
        consumed_ = fuel_;
        throw fuel_exhausted{};
    }

    const Term& decode_cached(const Nat& e) {
        auto it = cache_->find(e);
        if (it == cache_->end()) it = cache_->emplace(e, decode(Code(e))).first;
        return it->second;
    }

    const OracleContext* oracle_;
    std::uint64_t fuel_;
    std::uint64_t consumed_ = 0;
    std::map<Nat, Term>* cache_;
    bool queried_ = false;
    Nat max_query_;
};

}  // namespace detail

// Number of top-level evaluator entries so far (diagnostic; used to assert
// that code transformations are pure build-time surgery).
inline std::uint64_t eval_invocations() { return detail::eval_invocation_count.load(); }

inline EvalResult eval(const Term& t, const std::vector<Nat>& args,
                       const OracleContext* oracle, std::uint64_t fuel) {
    detail::eval_invocation_count.fetch_add(1, std::memory_order_relaxed);
    if (!t.valid()) throw std::invalid_argument("eval: empty term");
    if (args.size() != t.arity())
        throw arity_error("eval: argument count does not match term arity");
    std::map<Nat, Term> cache;
    detail::Machine machine(oracle, fuel, &cache);
    EvalResult r;
    try {
        Nat v = machine.run(t, args);
        r.outcome = EvalOutcome::make_converged(std::move(v), machine.consumed(), fuel);
    } catch (const detail::fuel_exhausted&) {
        r.outcome = EvalOutcome::make_exhausted(fuel);
    }
    r.queried = machine.queried();
    r.max_query = machine.max_query();
    return r;
}

inline EvalOutcome phi(const Code& e, const Nat& n, std::uint64_t fuel) {
    Term t = decode(e);
    if (t.arity() != 1) {
        detail::eval_invocation_count.fetch_add(1, std::memory_order_relaxed);
        return EvalOutcome::make_exhausted(fuel);
    }
    return eval(t, {n}, nullptr, fuel).outcome;
}

// W_{e,s} = { n < s : phi_e(n) converges within fuel s }, ascending.
inline std::vector<Nat> w_enum(const Code& e, std::uint64_t stage) {
    std::vector<Nat> out;
    Term t = decode(e);
    if (t.arity() != 1) return out;
    std::map<Nat, Term> cache;
    for (std::uint64_t n = 0; n < stage; ++n) {
        detail::eval_invocation_count.fetch_add(1, std::memory_order_relaxed);
        detail::Machine machine(nullptr, stage, &cache);
        try {
            machine.run(t, {nat(n)});
            out.push_back(nat(n));
        } catch (const detail::fuel_exhausted&) {
        }
    }
    return out;
}

inline std::string outcome_string(const EvalOutcome& o) {
    if (o.converged)
        return to_string(o.value) + " (" + std::to_string(o.steps) + " steps)";
    return "exhausted @" + std::to_string(o.fuel);
}

}  // namespace cwb
