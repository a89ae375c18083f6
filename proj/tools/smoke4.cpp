#include "cwb/adn.hpp"
#include "cwb/eval.hpp"
#include "cwb/stack_runner.hpp"

#include <chrono>
#include <iostream>

using namespace cwb;
using Clock = std::chrono::steady_clock;
static Clock::time_point t0;
static void mark(const char* what) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    std::cerr << "[" << ms << "ms] " << what << std::endl;
}

// psi(n): code of (const n) when n is even, diverges when n is odd
static Code parity_psi() {
    Term wrapn = Term::comp(
        Term::cpair(), {Term::constant(nat(cwb::detail::kTagConst)), Term::proj(1, 0)});
    Term dispatch = Term::comp(
        stdlib::select(), {Term::comp(stdlib::even(), {Term::proj(1, 0)}),
                           Term::constant(encode(Term::bottom()).value),
                           Term::constant(encode(wrapn).value)});
    return encode(Term::comp(
        Term::univ(),
        {Term::comp(Term::pair_prim(), {dispatch, Term::proj(1, 0)})}));
}

int work() {
    t0 = Clock::now();
    Code bot = encode(Term::bottom());
    Code psi = parity_psi();
    std::cerr << "psi bits=" << bit_length(psi.value) << std::endl;
    auto p2 = phi(psi, nat(2), 100000);
    std::cerr << "psi(2)=" << outcome_string(p2) << std::endl;
    auto p3 = phi(psi, nat(3), 10000);
    std::cerr << "psi(3)=" << outcome_string(p3) << std::endl;
    mark("psi probes");

    auto ea = adn::empty_avoider(bot);
    auto tot = adn::adn_totalizer(psi, ea);
    std::cerr << "h_code bits=" << bit_length(tot.h_code.value) << std::endl;
    Code f2 = tot.for_input(nat(2));
    std::cerr << "f(2) bits=" << bit_length(f2.value) << std::endl;
    mark("totalizer built");

    auto f2v = phi(f2, nat(9), 1000000);
    mark("f(2)(9) eval");
    std::cerr << "f(2)(9)=" << outcome_string(f2v) << std::endl;

    auto f2v2 = phi(f2, nat(0), 1000000);
    mark("f(2)(0) eval");
    std::cerr << "f(2)(0)=" << outcome_string(f2v2) << std::endl;

    Code f1 = tot.for_input(nat(1));
    auto f1v = phi(f1, nat(0), 100000);
    mark("f(1)(0) eval @1e5");
    std::cerr << "f(1)(0)=" << outcome_string(f1v) << std::endl;
    return 0;
}

int main() { return cwb::run_with_large_stack(work); }
