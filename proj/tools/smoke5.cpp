#include "cwb/adn.hpp"
#include "cwb/eval.hpp"
#include "cwb/fixedpoint.hpp"
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
    Code succ = encode(Term::succ());
    auto ea = adn::empty_avoider(bot);

    // quine at 1e6
    Code q = fixedpoint::quine();
    auto qv = phi(q, nat(0), 1000000);
    auto qv5 = phi(q, nat(5), 1000000);
    std::cerr << "quine self(0)=" << (qv.converged && qv.value == q.value)
              << " self(5)=" << (qv5.converged && qv5.value == q.value)
              << " bits=" << bit_length(q.value) << " steps=" << qv.steps << std::endl;
    mark("quine");

    // hat_delta: tie goes to d
    Code k42 = encode(Term::constant(nat(42)));
    auto dh = adn::hat_delta(adn::PartialFpfCode{k42, "user"}, bot);
    auto hv = phi(dh.code, succ.value, 1000000);
    std::cerr << "hat_delta(succ)=" << outcome_string(hv)
              << " (d=" << to_string(bot.value) << ")" << std::endl;
    auto hb = phi(dh.code, bot.value, 100000);
    std::cerr << "hat_delta(bottom)=" << outcome_string(hb) << std::endl;
    auto dh2 = adn::hat_delta(ea, bot);
    auto hv2 = phi(dh2.code, succ.value, 1000000);
    std::cerr << "hat_delta(ea)(succ)=" << outcome_string(hv2) << std::endl;
    mark("hat_delta");

    // dnc
    Term wrapsucc = Term::comp(
        Term::cpair(),
        {Term::constant(nat(cwb::detail::kTagConst)),
         Term::comp(Term::succ(), {Term::proj(1, 0)})});
    auto g = adn::dnc_from_phifpf(encode(wrapsucc));  // f(c) = code of const(c+1)
    Code e1 = encode(Term::constant(nat(3)));         // phi_e1(e1) = 3
    auto gv = g.at(e1, 100000);
    auto pe = phi(e1, e1.value, 100000);
    std::cerr << "dnc: g(e)=" << (gv ? to_string(*gv) : "undet")
              << " phi_e(e)=" << outcome_string(pe) << std::endl;
    mark("dnc");

    // fpf_probe on identity (not FPF): expect sets-equal findings
    auto idrep = adn::fpf_probe(encode(Term::proj(1, 0)), 50, 300);
    std::cerr << "fpf_probe(identity): eq=" << idrep.sets_equal
              << " disc=" << idrep.discrepancies << " und=" << idrep.undetermined
              << std::endl;
    mark("fpf_probe identity");
    auto earep = adn::fpf_probe(ea.code, 50, 500);
    std::cerr << "fpf_probe(ea): eq=" << earep.sets_equal
              << " disc=" << earep.discrepancies << " und=" << earep.undetermined
              << std::endl;
    mark("fpf_probe ea");

    // uniform adn: sections
    auto uni = adn::adn_uniform(ea);
    Code psi = parity_psi();
    Code sec = uni.for_section(psi, nat(2));  // phi_psi(2) = code of const 2
    auto sv = phi(sec, nat(7), 1000000);
    std::cerr << "uniform section (psi,2)(7)=" << outcome_string(sv) << std::endl;
    Code secb = uni.for_section(bot, nat(0));
    auto sbv = phi(secb, nat(0), 10000);
    std::cerr << "uniform section (bot,0)(0)=" << outcome_string(sbv) << std::endl;
    mark("uniform");

    // acceptance workload unit: profile f(2) on m < 1000 at fuel 1e5
    auto tot = adn::adn_totalizer(psi, ea);
    Code f2 = tot.for_input(nat(2));
    std::size_t conv = 0;
    std::uint64_t maxsteps = 0;
    for (std::uint64_t m = 0; m < 1000; ++m) {
        auto o = phi(f2, nat(m), 100000);
        if (o.converged) {
            ++conv;
            maxsteps = std::max(maxsteps, o.steps);
        }
    }
    std::cerr << "profile f(2): conv=" << conv << "/1000 maxsteps=" << maxsteps
              << std::endl;
    mark("profile f(2) m<1000 @1e5");

    // odd side: w_enum(f(1), 1000) + delta exhaustion at 1e6
    Code f1 = tot.for_input(nat(1));
    auto w1 = w_enum(f1, 1000);
    std::cerr << "w_enum(f(1),1000) size=" << w1.size() << std::endl;
    mark("w_enum f(1) 1000");
    auto d1 = phi(ea.code, f1.value, 1000000);
    std::cerr << "delta(f(1))=" << outcome_string(d1) << std::endl;
    mark("delta(f(1)) @1e6");
    return 0;
}

int main() { return cwb::run_with_large_stack(work); }
