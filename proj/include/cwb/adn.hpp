#pragma once

// Partial fixed-point-free functions and totalization avoiding them: the
// race combinator, the empty-set avoider, the domain extension hat_delta,
// the totalizer family (psi fixed or universal), and the diagonal map built
// from a code-level fixed-point-free function.
//
// "Stage" inside every object-level race is kernel fuel: an event happens at
// stage t when the corresponding run converges within fuel t, which makes
// "before" exact and reproducible. Ties always go to the second branch.

#include "cwb/builder.hpp"
#include "cwb/codec.hpp"
#include "cwb/eval.hpp"
#include "cwb/fixedpoint.hpp"
#include "cwb/numbering.hpp"
#include "cwb/pairing.hpp"
#include "cwb/stdlib.hpp"
#include "cwb/term.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cwb::adn {

// A code of a partial unary function on codes, with a record of which
// generator built it. Generator-built values avoid fixed points by
// construction; user-supplied ones carry no guarantee.
struct PartialFpfCode {
    Code code;
    std::string provenance = "user-supplied, unverified";
};

// The racing program: phi_r(y) finds the least stage t at which phi_{c1}(a1)
// or phi_{c2}(a2) converges within fuel t, then continues as the winner's
// value run on y. The second event wins ties. No winner means divergence.
// The stage search runs once; its result is tupled with y and threaded into
// the dispatch body.
inline Term race_term(const Nat& c1, const Nat& a1, const Nat& c2, const Nat& a2) {
    using stdlib::constk;
    Term t_var = Term::proj(2, 0);
    Term flag1 =
        Term::comp(Term::beval(), {constk(2, c1), constk(2, a1), t_var});
    Term flag2 =
        Term::comp(Term::beval(), {constk(2, c2), constk(2, a2), t_var});
    Term body = Term::comp(
        stdlib::monus(),
        {constk(2, 1), Term::comp(stdlib::add(), {flag2, flag1})});
    Term tstar = Term::mu(body);

    // dispatch body over w = <t*, y>
    Term t_in = Term::unpair_l();
    Term y_in = Term::unpair_r();
    Term flag2_won = Term::comp(
        Term::beval(), {Term::constant(c2), Term::constant(a2), t_in});
    Term winner_code = Term::comp(
        stdlib::select(), {flag2_won, Term::constant(c1), Term::constant(c2)});
    Term winner_arg = Term::comp(
        stdlib::select(),
        {Term::comp(Term::beval(),
                    {Term::constant(c2), Term::constant(a2), Term::unpair_l()}),
         Term::constant(a1), Term::constant(a2)});
    Term target = Term::comp(
        Term::univ(), {Term::comp(Term::pair_prim(), {winner_code, winner_arg})});
    Term dispatch = Term::comp(
        Term::univ(), {Term::comp(Term::pair_prim(), {target, y_in})});
    return Term::comp(
        std::move(dispatch),
        {Term::comp(Term::pair_prim(), {std::move(tstar), Term::proj(1, 0)})});
}

inline Code race(const Code& c1, const Nat& a1, const Code& c2, const Nat& a2) {
    return encode(race_term(c1.value, a1, c2.value, a2));
}

// delta(a) = d_empty as soon as some phi_a(n) is seen to converge; diverges
// on codes of the empty set. Avoids fixed points because W_{d_empty} is
// empty while W_a is not whenever delta(a) converges.
inline PartialFpfCode empty_avoider(const Code& d_empty) {
    using stdlib::constk;
    Term z = Term::proj(2, 0);
    Term a = Term::proj(2, 1);
    Term witness = Term::comp(
        Term::beval(),
        {a, Term::comp(Term::unpair_l(), {z}), Term::comp(Term::unpair_r(), {z})});
    Term body = Term::comp(stdlib::monus(), {constk(2, 1), witness});
    Term search = Term::mu(body);
    Term delta = Term::comp(Term::constant(d_empty.value), {search});
    return {encode(delta), "empty-avoider"};
}

// hat_delta(a): race "delta(a) converges" against "W_a is seen nonempty".
// Strictly-first delta keeps its value; a nonempty witness first or at a tie
// yields d. Defined on every a with W_a nonempty; avoids fixed points when
// delta does and W_d is empty.
inline PartialFpfCode hat_delta(const PartialFpfCode& delta, const Code& d) {
    using stdlib::constk;
    // orc(m, a, t) = sum_{n<m} beval(a, n, t)
    Term orc = Term::primrec(
        Term::zero(2),
        Term::comp(stdlib::add(),
                   {Term::proj(4, 1),
                    Term::comp(Term::beval(),
                               {Term::proj(4, 2), Term::proj(4, 0), Term::proj(4, 3)})}));
    // wex(a, t) = sgn(orc(t, a, t)): some member of W_a below t within fuel t
    Term wex = Term::comp(
        stdlib::sgn(),
        {Term::comp(orc, {Term::proj(2, 1), Term::proj(2, 0), Term::proj(2, 1)})});
    // body(t, a): 0 once either event happened at stage t
    Term delta_flag = Term::comp(
        Term::beval(), {constk(2, delta.code.value), Term::proj(2, 1), Term::proj(2, 0)});
    Term w_flag = Term::comp(wex, {Term::proj(2, 1), Term::proj(2, 0)});
    Term body = Term::comp(
        stdlib::monus(),
        {constk(2, 1), Term::comp(stdlib::add(), {w_flag, delta_flag})});
    Term tstar = Term::mu(body);
    Term w_won = Term::comp(wex, {Term::proj(1, 0), tstar});
    Term dispatch = Term::comp(
        stdlib::select(),
        {w_won, Term::constant(delta.code.value),
         Term::constant(encode(Term::constant(d.value)).value)});
    Term dhat = Term::comp(
        Term::univ(), {Term::comp(Term::pair_prim(), {dispatch, Term::proj(1, 0)})});
    return {encode(dhat), "hat-delta(" + delta.provenance + ")"};
}

// The totalizer family: f(n) = the recursion-theorem fixed point whose
// program races delta on f(n) against psi on n. When psi(n) converges first
// (and it always does first for a genuinely fixed-point-free delta), f(n)
// behaves exactly like the code psi(n) returned; when psi(n) diverges, the
// race never resolves, W_{f(n)} stays empty and delta never engages f(n).
struct Totalizer {
    Code psi;
    PartialFpfCode delta;
    Code h_code;  // the binary transformer handed to the recursion theorem
    fixedpoint::ParamFixedPoint fp;

    Code for_input(const Nat& n) const { return fp.code_for(n); }
    // Section of the uniform totalizer at a fixed psi-code e.
    Code for_section(const Code& e, const Nat& n) const {
        return for_input(pair(e.value, n));
    }
};

inline Totalizer adn_totalizer(const Code& psi, const PartialFpfCode& delta) {
    std::map<Nat, Term> holes;
    // input <n, x>: n is the psi argument, x the fixed-point code
    holes[builder::hole_marker(0)] = Term::unpair_r();  // x, raced under delta
    holes[builder::hole_marker(1)] = Term::unpair_l();  // n, raced under psi
    Term skeleton = race_term(delta.code.value, builder::hole_marker(0), psi.value,
                              builder::hole_marker(1));
    Term h_term = builder::object_encoder(skeleton, holes, 1);
    Code h_code = encode(h_term);
    Totalizer t{psi, delta, h_code,
                fixedpoint::fixed_point_with_params(fixedpoint::BinaryTransformerCode{h_code})};
    return t;
}

inline Totalizer adn_uniform(const PartialFpfCode& delta) {
    return adn_totalizer(universal_code(), delta);
}

// n |-> code of (const n); the total code-producing sample.
inline Code const_builder_code() {
    return encode(Term::comp(
        Term::cpair(),
        {Term::constant(nat(cwb::detail::kTagConst)), Term::proj(1, 0)}));
}

// The shipped psi sample: psi(n) = code of (const n) for even n, divergent
// for odd n. Parity-based, so ground truth about psi(n) diverging is
// analytic rather than empirical.
inline Code parity_psi() {
    Term dispatch = Term::comp(
        stdlib::select(), {Term::comp(stdlib::even(), {Term::proj(1, 0)}),
                           Term::constant(encode(Term::bottom()).value),
                           Term::constant(const_builder_code().value)});
    return encode(Term::comp(
        Term::univ(),
        {Term::comp(Term::pair_prim(), {std::move(dispatch), Term::proj(1, 0)})}));
}

// Per-input record of what the totalizer did, at explicit budgets.
struct TotalizationRecord {
    Nat n;
    Code f_n;
    EvalOutcome psi_status;     // phi(psi, n) at psi_budget
    std::vector<Nat> w_f;       // w_enum(f(n), stage)
    std::vector<Nat> w_target;  // w_enum(psi(n)-value, stage), when psi converged
    EvalOutcome delta_status;   // phi(delta, f(n)) at delta_budget
    std::uint64_t stage = 0;
    std::uint64_t psi_budget = 0;
    std::uint64_t delta_budget = 0;
};

inline TotalizationRecord totalization_record(const Totalizer& t, const Nat& n,
                                              std::uint64_t stage,
                                              std::uint64_t psi_budget,
                                              std::uint64_t delta_budget) {
    TotalizationRecord r;
    r.n = n;
    r.f_n = t.for_input(n);
    r.stage = stage;
    r.psi_budget = psi_budget;
    r.delta_budget = delta_budget;
    r.psi_status = phi(t.psi, n, psi_budget);
    r.w_f = w_enum(r.f_n, stage);
    if (r.psi_status.converged) r.w_target = w_enum(Code(r.psi_status.value), stage);
    r.delta_status = phi(t.delta.code, r.f_n.value, delta_budget);
    return r;
}

// The diagonal map of a code-level fixed-point-free f: g(e) = phi_f(c(e))
// where phi_{c(e)} = phi_{phi_e(e)}. Whenever phi_e(e) converges and f has
// no fixed point at c(e), g(e) differs from phi_e(e).
struct DncMap {
    Code f;

    Code redirect_code(const Code& e) const {
        Term inner = Term::comp(
            Term::univ(),
            {Term::comp(Term::pair_prim(),
                        {Term::constant(e.value), Term::constant(e.value)})});
        Term c = Term::comp(
            Term::univ(),
            {Term::comp(Term::pair_prim(), {inner, Term::proj(1, 0)})});
        return encode(c);
    }

    // nullopt = undetermined at budget (phi_f exhausted)
    std::optional<Nat> at(const Code& e, std::uint64_t fuel) const {
        EvalOutcome out = phi(f, redirect_code(e).value, fuel);
        if (!out.converged) return std::nullopt;
        return out.value;
    }
};

inline DncMap dnc_from_phifpf(const Code& f) { return DncMap{f}; }

// Diagnostic sweep: for codes a up to `code_bound` on which delta converges
// within `stage`, compare W_a and W_{delta(a)} at that stage. Evidence only;
// equality at a stage is suspicion, not disproof, and nothing here certifies
// the fixed-point-free property.
enum class FpfProbeStatus { DiscrepancyFound, SetsEqualAtStage, Undetermined };

struct FpfProbeEntry {
    Nat a;
    FpfProbeStatus status;
    Nat delta_value;  // when determined
};

struct FpfProbeReport {
    std::vector<FpfProbeEntry> entries;
    std::size_t discrepancies = 0;
    std::size_t sets_equal = 0;
    std::size_t undetermined = 0;
};

inline FpfProbeReport fpf_probe(const Code& delta, std::uint64_t code_bound,
                                std::uint64_t stage) {
    FpfProbeReport report;
    for (std::uint64_t a = 0; a <= code_bound; ++a) {
        FpfProbeEntry entry;
        entry.a = nat(a);
        EvalOutcome out = phi(delta, entry.a, stage);
        if (!out.converged) {
            entry.status = FpfProbeStatus::Undetermined;
            ++report.undetermined;
        } else {
            entry.delta_value = out.value;
            std::vector<Nat> wa = w_enum(Code(entry.a), stage);
            std::vector<Nat> wd = w_enum(Code(out.value), stage);
            entry.status = wa == wd ? FpfProbeStatus::SetsEqualAtStage
                                    : FpfProbeStatus::DiscrepancyFound;
            if (wa == wd)
                ++report.sets_equal;
            else
                ++report.discrepancies;
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace cwb::adn
