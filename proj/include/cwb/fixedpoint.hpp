#pragma once

// Fixed points of code transformations: the recursion theorem, its version
// with parameters, and the quine built on top. Both constructions are pure
// term surgery: the transformer's code is embedded in the result and only
// ever applied when the fixed point itself runs.
//
// Self-reference is routed through two fixed helper codes so the recursion
// witness d appears exactly once in each produced code:
//
//   phi_Q(<p,y>)      = phi_p(<p,y>)        (self_apply_code)
//   phi_P(<p,<n,y>>)  = phi_p(<<p,n>,y>)    (param_apply_code)
//
// The fixed point is then y |-> univ(<Q,<d,y>>) respectively
// y |-> univ(<P,<d,<n,y>>>), and the program behind d rebuilds that exact
// code from its own unpacked x with constant-cost code-pair arithmetic.

#include "cwb/builder.hpp"
#include "cwb/codec.hpp"
#include "cwb/eval.hpp"
#include "cwb/numbering.hpp"
#include "cwb/pairing.hpp"
#include "cwb/stdlib.hpp"
#include "cwb/term.hpp"

#include <map>
#include <string>
#include <vector>

namespace cwb::fixedpoint {

// A code of a total unary function on codes. Totality on the probed inputs
// is the caller's obligation; nothing here checks it.
struct TransformerCode {
    Code code;
};

// h(n,x) = phi_code(<n,x>), total on probes.
struct BinaryTransformerCode {
    Code code;
};

namespace detail {

inline Term pair2(Term a, Term b) {
    return Term::comp(Term::pair_prim(), {std::move(a), std::move(b)});
}

inline Term univ1(Term a) { return Term::comp(Term::univ(), {std::move(a)}); }

// phi_Q(<p,y>) = phi_p(<p,y>)
inline Code self_apply_code() {
    Term p = Term::unpair_l();
    Term y = Term::unpair_r();
    return encode(univ1(pair2(p, pair2(p, y))));
}

// phi_P(<p,<n,y>>) = phi_p(<<p,n>,y>)
inline Code param_apply_code() {
    Term p = Term::unpair_l();
    Term n = Term::comp(Term::unpair_l(), {Term::unpair_r()});
    Term y = Term::comp(Term::unpair_r(), {Term::unpair_r()});
    return encode(univ1(pair2(p, pair2(pair2(p, n), y))));
}

// y |-> phi_d(<d,y>)
inline Term self_redirect_term(const Nat& d) {
    return univ1(pair2(Term::constant(self_apply_code().value),
                       pair2(Term::constant(d), Term::proj(1, 0))));
}

// y |-> phi_d(<<d,n>,y>)
inline Term param_redirect_term(const Nat& d, const Nat& n) {
    return univ1(pair2(
        Term::constant(param_apply_code().value),
        pair2(Term::constant(d), pair2(Term::constant(n), Term::proj(1, 0)))));
}

}  // namespace detail

// e with phi_e = phi_{phi_f(e)}. The program behind e unpacks its own code x
// from the argument, recomputes e with the same arithmetic that built it,
// applies f to that, and dispatches: phi_e(y) = phi_{phi_f(e)}(y).
inline Code kleene_fixed_point(const TransformerCode& f) {
    std::map<Nat, Term> holes;
    holes[builder::hole_marker(0)] = Term::unpair_l();  // x from w = <x,y>
    Term self = builder::object_encoder(
        detail::self_redirect_term(builder::hole_marker(0)), holes, 1);
    Term transformed = detail::univ1(
        detail::pair2(Term::constant(f.code.value), self));
    Term d_term =
        detail::univ1(detail::pair2(transformed, Term::unpair_r()));
    Code d = encode(d_term);
    return encode(detail::self_redirect_term(d.value));
}

// The function f of the parameterized recursion theorem, both as a hosted
// map and as a code of that map.
struct ParamFixedPoint {
    Nat d;             // code of the recursion witness
    Code object_code;  // unary program computing n |-> code_for(n)

    Code code_for(const Nat& n) const {
        return encode(detail::param_redirect_term(d, n));
    }
};

// f with phi_{f(n)} = phi_{h(n, f(n))} for all n.
inline ParamFixedPoint fixed_point_with_params(const BinaryTransformerCode& h) {
    Term xn = Term::unpair_l();
    Term x = Term::comp(Term::unpair_l(), {Term::unpair_l()});
    Term n = Term::comp(Term::unpair_r(), {Term::unpair_l()});
    Term y = Term::unpair_r();
    std::map<Nat, Term> holes;
    holes[builder::hole_marker(0)] = x;
    holes[builder::hole_marker(1)] = n;
    Term fn = builder::object_encoder(
        detail::param_redirect_term(builder::hole_marker(0), builder::hole_marker(1)),
        holes, 1);
    Term hv = detail::univ1(detail::pair2(Term::constant(h.code.value),
                                          detail::pair2(std::move(n), std::move(fn))));
    Term d_term = detail::univ1(detail::pair2(std::move(hv), std::move(y)));
    Code d = encode(d_term);
    (void)xn;

    ParamFixedPoint out;
    out.d = d.value;
    std::map<Nat, Term> map_holes;
    map_holes[builder::hole_marker(0)] = Term::constant(d.value);
    map_holes[builder::hole_marker(1)] = Term::proj(1, 0);
    out.object_code = encode(builder::object_encoder(
        detail::param_redirect_term(builder::hole_marker(0), builder::hole_marker(1)),
        map_holes, 1));
    return out;
}

// e with phi_e(y) = e for every y: fixed point of c |-> code of (const c).
inline Code quine() {
    Term wrap = Term::comp(
        Term::cpair(),
        {Term::constant(nat(cwb::detail::kTagConst)), Term::proj(1, 0)});
    return kleene_fixed_point(TransformerCode{encode(wrap)});
}

enum class ProbeStatus {
    Agree,          // both converged, equal values
    Disagree,       // both converged, different values
    OneSided,       // one converged, the other exhausted: suspicious
    BothExhausted,  // no evidence either way
};

struct ExtensionalProbe {
    Nat input;
    EvalOutcome left;
    EvalOutcome right;
    ProbeStatus status;
};

// Desk-scale comparison of phi_{e1} and phi_{e2} on chosen inputs. A
// one-sided exhaustion is reported as suspicion, never as inequality, and
// two exhaustions are no evidence, never equality.
struct ExtensionalReport {
    std::vector<ExtensionalProbe> probes;
    std::size_t agreements = 0;
    std::size_t disagreements = 0;
    std::size_t one_sided = 0;
    std::size_t both_exhausted = 0;

    bool zero_disagreements() const { return disagreements == 0; }
    bool suspicious() const { return one_sided > 0; }
};

inline ExtensionalReport verify_extensional(const Code& e1, const Code& e2,
                                            const std::vector<Nat>& inputs,
                                            std::uint64_t fuel) {
    ExtensionalReport report;
    for (const Nat& y : inputs) {
        ExtensionalProbe probe;
        probe.input = y;
        probe.left = phi(e1, y, fuel);
        probe.right = phi(e2, y, fuel);
        if (probe.left.converged && probe.right.converged) {
            probe.status = probe.left.value == probe.right.value
                               ? ProbeStatus::Agree
                               : ProbeStatus::Disagree;
        } else if (!probe.left.converged && !probe.right.converged) {
            probe.status = ProbeStatus::BothExhausted;
        } else {
            probe.status = ProbeStatus::OneSided;
        }
        switch (probe.status) {
            case ProbeStatus::Agree: ++report.agreements; break;
            case ProbeStatus::Disagree: ++report.disagreements; break;
            case ProbeStatus::OneSided: ++report.one_sided; break;
            case ProbeStatus::BothExhausted: ++report.both_exhausted; break;
        }
        report.probes.push_back(std::move(probe));
    }
    return report;
}

inline std::string report_summary(const ExtensionalReport& r) {
    return std::to_string(r.agreements) + " agree, " +
           std::to_string(r.disagreements) + " disagree, " +
           std::to_string(r.one_sided) + " suspicious, " +
           std::to_string(r.both_exhausted) + " no-evidence";
}

}  // namespace cwb::fixedpoint
