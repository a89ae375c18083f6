// Narrower probe with flushing to find the slow/hanging stage.
#include "cwb/adn.hpp"
#include "cwb/eval.hpp"
#include "cwb/fixedpoint.hpp"
#include "cwb/parse.hpp"
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

int work() {
    t0 = Clock::now();
    mark("start");
    std::cerr << "pair(1,2)=" << to_string(pair(1, 2)) << std::endl;
    std::cerr << "encode(succ)=" << to_string(encode(Term::succ()).value) << std::endl;
    mark("codec ok");

    Term t = parse("(comp succ (succ))");
    auto r = eval(t, {nat(3)}, nullptr, 100);
    std::cerr << "eval=" << outcome_string(r.outcome) << std::endl;
    mark("eval ok");

    Code p = encode(Term::comp(Term::succ(), {Term::unpair_r()}));
    Code sxy = smn(p, nat(4));
    mark("smn built");
    auto lhs = phi(sxy, nat(7), 100000);
    mark("phi(smn) done");
    std::cerr << "smn lhs=" << outcome_string(lhs) << std::endl;

    Code s = smn_term();
    std::cerr << "smn_term bits=" << bit_length(s.value) << std::endl;
    mark("smn_term built");
    auto obj = phi(s, pair(p.value, nat(4)), 100000);
    mark("phi(smn_term) done");
    std::cerr << "smn_term agrees=" << (obj.converged && obj.value == sxy.value)
              << " steps=" << obj.steps << std::endl;

    Code c7 = encode(Term::constant(nat(7)));
    fixedpoint::TransformerCode f{encode(Term::constant(c7.value))};
    Code e = fixedpoint::kleene_fixed_point(f);
    std::cerr << "fixed point bits=" << bit_length(e.value) << std::endl;
    mark("kfp built");
    auto fe = phi(e, nat(0), 100000);
    mark("phi(kfp) done");
    std::cerr << "kfp(0)=" << outcome_string(fe) << std::endl;
    return 0;
}

int main() { return cwb::run_with_large_stack(work); }
