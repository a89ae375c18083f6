#pragma once

// Object-level code templates. object_encoder turns a term skeleton with
// hole leaves into a program that computes, at run time, the code of the
// skeleton with each hole replaced by a runtime constant. Maximal constant
// subtrees collapse to literal codes, so the emitted program is a short
// spine of cpair applications.

#include "cwb/codec.hpp"
#include "cwb/term.hpp"

#include <map>
#include <stdexcept>

namespace cwb::builder {

// Hole markers live far above any constant a skeleton would carry.
inline Nat hole_marker(unsigned i) { return (Nat(1) << 96) + i; }

inline Term hole(unsigned i) { return Term::constant(hole_marker(i)); }

namespace detail {

inline bool has_hole(const Term& t, const std::map<Nat, Term>& holes) {
    if (t.kind() == Kind::Const && holes.count(t.const_value())) return true;
    for (const Term& k : t.children())
        if (has_hole(k, holes)) return true;
    return false;
}

inline Term lit(std::uint64_t in_arity, const Nat& v) {
    if (in_arity == 1) return Term::constant(v);
    return Term::comp(Term::constant(v), {Term::proj(in_arity, 0)});
}

inline Term cp2(Term a, Term b) {
    return Term::comp(Term::cpair(), {std::move(a), std::move(b)});
}

inline Term expr(const Term& t, const std::map<Nat, Term>& holes, std::uint64_t in_arity) {
    if (t.kind() == Kind::Const) {
        auto it = holes.find(t.const_value());
        if (it != holes.end())
            return cp2(lit(in_arity, nat(cwb::detail::kTagConst)), it->second);
    }
    if (!has_hole(t, holes)) return lit(in_arity, cwb::detail::encode_nat(t));
    switch (t.kind()) {
        case Kind::Comp: {
            const auto& kids = t.children();
            Term nest = expr(kids.back(), holes, in_arity);
            for (std::size_t i = kids.size() - 1; i > 1; --i)
                nest = cp2(expr(kids[i - 1], holes, in_arity), std::move(nest));
            Term m = lit(in_arity, nat(kids.size() - 1));
            return cp2(lit(in_arity, nat(cwb::detail::kTagComp)),
                       cp2(expr(kids[0], holes, in_arity),
                           cp2(std::move(m), std::move(nest))));
        }
        case Kind::PrimRec:
            return cp2(lit(in_arity, nat(cwb::detail::kTagPrimRec)),
                       cp2(expr(t.children()[0], holes, in_arity),
                           expr(t.children()[1], holes, in_arity)));
        case Kind::Mu:
            return cp2(lit(in_arity, nat(cwb::detail::kTagMu)),
                       expr(t.children()[0], holes, in_arity));
        default:
            throw std::logic_error("object_encoder: hole in a leaf position");
    }
}

}  // namespace detail

// Returns a term of arity `in_arity` computing
//   encode(skeleton[hole_i := const(value of holes[i] on the inputs)]).
// Every hole extractor must itself have arity `in_arity`.
inline Term object_encoder(const Term& skeleton, const std::map<Nat, Term>& holes,
                           std::uint64_t in_arity) {
    for (const auto& [marker, extractor] : holes)
        if (extractor.arity() != in_arity)
            throw arity_error("object_encoder: extractor arity mismatch");
    return detail::expr(skeleton, holes, in_arity);
}

}  // namespace cwb::builder
