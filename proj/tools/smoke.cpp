// Throwaway smoke check for the core laws; superseded by the test suite.
#include "cwb/adn.hpp"
#include "cwb/eval.hpp"
#include "cwb/fixedpoint.hpp"
#include "cwb/parse.hpp"
#include "cwb/stack_runner.hpp"

#include <iostream>

using namespace cwb;

int work() {
    // pairing
    std::cout << "pair(1,2) = " << to_string(pair(1, 2)) << " (want 8)\n";
    auto [ux, uy] = unpair(nat(8));
    std::cout << "unpair(8) = (" << to_string(ux) << "," << to_string(uy) << ")\n";

    // codec
    std::cout << "encode(succ) = " << to_string(encode(Term::succ()).value) << " (want 10)\n";
    std::cout << "encode(bottom) = " << to_string(encode(Term::bottom()).value)
              << " (want 137)\n";
    Term t = parse("(comp succ (succ))");
    std::cout << "pretty roundtrip: " << pretty(t) << "\n";
    std::cout << "decode(encode(t)) == t: " << (decode(encode(t)) == t) << "\n";

    // eval
    auto r = eval(t, {nat(3)}, nullptr, 100);
    std::cout << "comp succ succ (3) = " << outcome_string(r.outcome) << "\n";

    // smn law: phi_{smn(p,x)}(y) = phi_p(<x,y>)
    Code p = encode(Term::comp(Term::succ(), {Term::unpair_r()}));  // p(<x,y>) = y+1
    Code sxy = smn(p, nat(4));
    auto lhs = phi(sxy, nat(7), 100000);
    auto rhs = phi(p, pair(nat(4), nat(7)), 100000);
    std::cout << "smn law: " << outcome_string(lhs) << " vs " << outcome_string(rhs) << "\n";

    // smn_term agreement
    Code s = smn_term();
    auto obj = phi(s, pair(p.value, nat(4)), 100000);
    std::cout << "smn_term: converged=" << obj.converged
              << " equal=" << (obj.converged && obj.value == sxy.value) << "\n";

    // universal code
    auto u = universal_code();
    auto uv = phi(u, pair(encode(Term::succ()).value, nat(4)), 1000);
    std::cout << "universal: " << outcome_string(uv) << " (want 5)\n";

    // recursion theorem: const-7 transformer
    Code c7 = encode(Term::constant(nat(7)));
    fixedpoint::TransformerCode f{encode(Term::constant(c7.value))};
    Code e = fixedpoint::kleene_fixed_point(f);
    auto fe = phi(e, nat(0), 100000);
    std::cout << "fixed point of const-7 transformer at 0: " << outcome_string(fe)
              << " (want 7); code bits=" << bit_length(e.value) << "\n";

    // quine
    Code q = fixedpoint::quine();
    auto qv = phi(q, nat(0), 1000000);
    std::cout << "quine: converged=" << qv.converged
              << " self=" << (qv.converged && qv.value == q.value)
              << " bits=" << bit_length(q.value) << "\n";

    // race: c2 wins
    Code bot = encode(Term::bottom());
    Code c2 = encode(Term::constant(encode(Term::succ()).value));
    Code r2 = adn::race(bot, nat(0), c2, nat(0));
    auto rv = phi(r2, nat(4), 100000);
    std::cout << "race: " << outcome_string(rv) << " (want 5)\n";

    // empty avoider on succ
    auto ea = adn::empty_avoider(bot);
    auto ev = phi(ea.code, encode(Term::succ()).value, 1000000);
    std::cout << "empty_avoider(succ): converged=" << ev.converged
              << " equal-d=" << (ev.converged && ev.value == bot.value) << "\n";

    // adn totalizer with parity psi
    Term wrapn = Term::comp(
        Term::cpair(), {Term::constant(nat(cwb::detail::kTagConst)), Term::proj(1, 0)});
    Term sel = Term::comp(stdlib::select(),
                          {Term::comp(stdlib::even(), {Term::proj(1, 0)}),
                           Term::constant(encode(wrapn).value),
                           Term::constant(encode(Term::bottom()).value)});
    // psi(n) = encode(const n) if even else diverge -- note select: 0 -> first
    // even(n)=1 for even n, so branch order: flag 1 -> second arg
    Term psi_term = Term::comp(
        Term::univ(),
        {Term::comp(Term::pair_prim(),
                    {Term::comp(stdlib::select(),
                                {Term::comp(stdlib::even(), {Term::proj(1, 0)}),
                                 Term::constant(encode(Term::bottom()).value),
                                 Term::constant(encode(wrapn).value)}),
                     Term::proj(1, 0)})});
    (void)sel;
    Code psi = encode(psi_term);
    auto p0 = phi(psi, nat(2), 100000);
    std::cout << "psi(2): converged=" << p0.converged << "\n";
    auto p1 = phi(psi, nat(3), 10000);
    std::cout << "psi(3): converged=" << p1.converged << " (want 0)\n";

    auto tot = adn::adn_totalizer(psi, ea);
    Code f2 = tot.for_input(nat(2));
    auto f2v = phi(f2, nat(9), 100000);
    std::cout << "f(2)(9) = " << outcome_string(f2v) << " (want 2), f(2) bits="
              << bit_length(f2.value) << "\n";
    auto wf = w_enum(f2, 2000);
    std::cout << "w_enum(f(2), 2000) size = " << wf.size() << "\n";
    Code f1 = tot.for_input(nat(1));
    auto wf1 = w_enum(f1, 1000);
    std::cout << "w_enum(f(1), 1000) size = " << wf1.size() << " (want 0)\n";
    auto df1 = phi(ea.code, f1.value, 1000000);
    std::cout << "delta(f(1)): converged=" << df1.converged << " (want 0)\n";
    return 0;
}

int main() { return cwb::run_with_large_stack(work); }
