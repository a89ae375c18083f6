#pragma once

// s-m-n and the universal code for the numbering fixed in codec.hpp.
//
// smn(p,x) names the program y |-> univ(<p, <x, y>>), so the law
// phi_{smn(p,x)}(y) = phi_p(<x,y>) holds for every p and x, including codes
// that do not name unary programs (both sides then diverge). The definition
// is a fixed arithmetic shape in p and x, which is what lets smn_term
// reproduce it exactly inside the object language.

#include "cwb/builder.hpp"
#include "cwb/codec.hpp"
#include "cwb/term.hpp"

#include <utility>

namespace cwb {

inline Term smn_redirect_term(const Nat& p, const Nat& x) {
    return Term::comp(
        Term::univ(),
        {Term::comp(Term::pair_prim(),
                    {Term::constant(p),
                     Term::comp(Term::pair_prim(),
                                {Term::constant(x), Term::proj(1, 0)})})});
}

inline Code smn(const Code& p, const Nat& x) {
    return encode(smn_redirect_term(p.value, x));
}

// Object-level s-m-n: a code S with phi_S(<p,x>) = smn(p,x), bit for bit.
inline Code smn_term() {
    std::map<Nat, Term> holes;
    holes[builder::hole_marker(0)] = Term::unpair_l();
    holes[builder::hole_marker(1)] = Term::unpair_r();
    Term skeleton = smn_redirect_term(builder::hole_marker(0), builder::hole_marker(1));
    return encode(builder::object_encoder(skeleton, holes, 1));
}

// phi_u(<e,n>) = phi_e(n); `univ` is already that function.
inline Code universal_code() { return encode(Term::univ()); }

}  // namespace cwb
