#pragma once

// The numbering: every natural names a program, via a tagged encoding.
//
//   encode(t) = cp(tag(t), payload(t))
//
//   tag   0 zero   1 succ   2 proj   3 comp   4 primrec   5 mu   6 univ
//         7 query  8 bottom 9 const 10 pair  11 unpairl  12 unpairr
//        13 cpair 14 beval
//
//   payload: zero -> arity; proj -> cp(arity, index); comp -> cp(outer,
//   cp(m, nest)) with nest the right-nested cp chain of the m inner codes;
//   primrec -> cp(base, step); mu -> body; const -> value; all others -> 0.
//
// cp is a self-delimiting bit pairing (length-prefixed concatenation), so a
// code's bit length is proportional to the size of the term it names. cp is
// injective but not surjective; naturals outside its image, unknown tags, and
// payloads violating the arity invariants all decode to `bottom`, which makes
// decoding total. Note cp is distinct from the Cantor pairing <x,y> used for
// argument tupling (pairing.hpp).

#include "cwb/nat.hpp"
#include "cwb/term.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cwb {

struct Code {
    Nat value;

    Code() = default;
    explicit Code(Nat v) : value(std::move(v)) {}

    friend bool operator==(const Code& a, const Code& b) { return a.value == b.value; }
    friend bool operator!=(const Code& a, const Code& b) { return a.value != b.value; }
    friend bool operator<(const Code& a, const Code& b) { return a.value < b.value; }
};

// cp(a,b): the natural with binary expansion
//
//   "1" ++ gamma(len(a+1)) ++ bits(a+1) ++ tail(b+1)
//
// where gamma is the Elias gamma code, bits() the plain binary expansion and
// tail() that expansion minus its leading 1. Both components sit in the
// result at full length, so bit_length(cp(a,b)) is bit_length(a) +
// bit_length(b) + O(log log a): codes stay proportional to term size no
// matter how terms nest. Unambiguous to split from the left; not surjective.
inline Nat code_pair(const Nat& a, const Nat& b) {
    Nat A = a + 1;
    Nat B = b + 1;
    std::size_t la = bit_length(A);
    std::size_t lb = bit_length(B);
    std::size_t lla = bit_length(nat(la));
    Nat out = 1;
    // gamma(la): (lla-1) zeros then bits(la), as one (2*lla-1)-wide field
    out = (out << (2 * lla - 1)) + nat(la);
    out = (out << la) + A;
    Nat tail = B;
    mpz_clrbit(tail.get_mpz_t(), static_cast<mp_bitcnt_t>(lb - 1));
    out = (out << (lb - 1)) + tail;
    return out;
}

inline std::optional<std::pair<Nat, Nat>> code_split(const Nat& n) {
    if (sgn(n) <= 0) return std::nullopt;
    std::size_t len = bit_length(n) - 1;  // payload bits after the sentinel
    if (len == 0) return std::nullopt;
    Nat one = 1;
    Nat s = n - (one << len);  // remaining bits, logical width `len`
    std::size_t zs = len - bit_length(s);  // leading zeros: gamma prefix
    std::size_t width_la = zs + 1;
    if (zs + width_la > len) return std::nullopt;
    std::size_t rest = len - zs - width_la;
    Nat la_nat = s >> rest;
    s -= la_nat << rest;
    if (!fits_u64(la_nat)) return std::nullopt;
    std::uint64_t la = to_u64(la_nat);
    if (la == 0 || la > rest) return std::nullopt;
    std::size_t rem = rest - static_cast<std::size_t>(la);
    Nat A = s >> rem;
    if (bit_length(A) != la) return std::nullopt;  // A must carry its top bit
    s -= A << rem;
    Nat b = (one << rem) + s - 1;
    return std::make_pair(A - 1, std::move(b));
}

namespace detail {

constexpr std::uint64_t kTagZero = 0, kTagSucc = 1, kTagProj = 2, kTagComp = 3,
                        kTagPrimRec = 4, kTagMu = 5, kTagUniv = 6, kTagQuery = 7,
                        kTagBottom = 8, kTagConst = 9, kTagPair = 10, kTagUnpairL = 11,
                        kTagUnpairR = 12, kTagCPair = 13, kTagBEval = 14;

inline Nat encode_nat(const Term& t);

inline Nat encode_list(const std::vector<Term>& kids, std::size_t from) {
    // right-nested chain; the caller prefixes the length
    Nat acc = encode_nat(kids.back());
    for (std::size_t i = kids.size() - 1; i > from; --i)
        acc = code_pair(encode_nat(kids[i - 1]), acc);
    return acc;
}

inline Nat encode_nat(const Term& t) {
    switch (t.kind()) {
        case Kind::Zero:
            return code_pair(nat(kTagZero), nat(t.param_a()));
        case Kind::Succ:
            return code_pair(nat(kTagSucc), 0);
        case Kind::Proj:
            return code_pair(nat(kTagProj), code_pair(nat(t.param_a()), nat(t.param_b())));
        case Kind::Comp: {
            Nat nest = encode_list(t.children(), 1);
            Nat m = nat(t.children().size() - 1);
            return code_pair(nat(kTagComp),
                             code_pair(encode_nat(t.children()[0]), code_pair(m, nest)));
        }
        case Kind::PrimRec:
            return code_pair(nat(kTagPrimRec), code_pair(encode_nat(t.children()[0]),
                                                         encode_nat(t.children()[1])));
        case Kind::Mu:
            return code_pair(nat(kTagMu), encode_nat(t.children()[0]));
        case Kind::Univ:
            return code_pair(nat(kTagUniv), 0);
        case Kind::Query:
            return code_pair(nat(kTagQuery), 0);
        case Kind::Bottom:
            return code_pair(nat(kTagBottom), 0);
        case Kind::Const:
            return code_pair(nat(kTagConst), t.const_value());
        case Kind::Pair:
            return code_pair(nat(kTagPair), 0);
        case Kind::UnpairL:
            return code_pair(nat(kTagUnpairL), 0);
        case Kind::UnpairR:
            return code_pair(nat(kTagUnpairR), 0);
        case Kind::CPair:
            return code_pair(nat(kTagCPair), 0);
        case Kind::BEval:
            return code_pair(nat(kTagBEval), 0);
    }
    return 0;  // unreachable
}

struct decode_failure {};

inline std::uint64_t small_or_fail(const Nat& n) {
    if (!fits_u64(n) || to_u64(n) > (std::uint64_t{1} << 32)) throw decode_failure{};
    return to_u64(n);
}

inline Term decode_term(const Nat& c, int depth) {
    if (depth > 100000) throw decode_failure{};
    auto split = code_split(c);
    if (!split) throw decode_failure{};
    const auto& [tag_nat, payload] = *split;
    if (!fits_u64(tag_nat)) throw decode_failure{};
    std::uint64_t tag = to_u64(tag_nat);
    try {
        switch (tag) {
            case kTagZero:
                return Term::zero(small_or_fail(payload));
            case kTagSucc:
                return Term::succ();
            case kTagProj: {
                auto ki = code_split(payload);
                if (!ki) throw decode_failure{};
                return Term::proj(small_or_fail(ki->first), small_or_fail(ki->second));
            }
            case kTagComp: {
                auto outer_rest = code_split(payload);
                if (!outer_rest) throw decode_failure{};
                Term outer = decode_term(outer_rest->first, depth + 1);
                auto m_nest = code_split(outer_rest->second);
                if (!m_nest) throw decode_failure{};
                std::uint64_t m = small_or_fail(m_nest->first);
                if (m == 0) throw decode_failure{};
                std::vector<Term> inners;
                inners.reserve(m);
                Nat nest = m_nest->second;
                for (std::uint64_t i = 0; i + 1 < m; ++i) {
                    auto head_rest = code_split(nest);
                    if (!head_rest) throw decode_failure{};
                    inners.push_back(decode_term(head_rest->first, depth + 1));
                    nest = head_rest->second;
                }
                inners.push_back(decode_term(nest, depth + 1));
                return Term::comp(std::move(outer), std::move(inners));
            }
            case kTagPrimRec: {
                auto bs = code_split(payload);
                if (!bs) throw decode_failure{};
                return Term::primrec(decode_term(bs->first, depth + 1),
                                     decode_term(bs->second, depth + 1));
            }
            case kTagMu:
                return Term::mu(decode_term(payload, depth + 1));
            case kTagUniv:
                return Term::univ();
            case kTagQuery:
                return Term::query();
            case kTagBottom:
                return Term::bottom();
            case kTagConst:
                return Term::constant(payload);
            case kTagPair:
                return Term::pair_prim();
            case kTagUnpairL:
                return Term::unpair_l();
            case kTagUnpairR:
                return Term::unpair_r();
            case kTagCPair:
                return Term::cpair();
            case kTagBEval:
                return Term::beval();
            default:
                throw decode_failure{};
        }
    } catch (const arity_error&) {
        throw decode_failure{};
    }
}

}  // namespace detail

inline Code encode(const Term& t) { return Code(detail::encode_nat(t)); }

inline Term decode(const Code& c) {
    try {
        return detail::decode_term(c.value, 0);
    } catch (const detail::decode_failure&) {
        return Term::bottom();
    }
}

inline Term decode(const Nat& c) { return decode(Code(c)); }

}  // namespace cwb
