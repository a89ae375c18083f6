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

int work() {
    t0 = Clock::now();
    Code bot = encode(Term::bottom());
    Code succ = encode(Term::succ());

    // race: c2 wins over bottom-side
    Code c2 = encode(Term::constant(succ.value));
    Code r2 = adn::race(bot, nat(0), c2, nat(0));
    std::cerr << "race code bits=" << bit_length(r2.value) << std::endl;
    auto rv = phi(r2, nat(4), 100000);
    mark("race eval done");
    std::cerr << "race=" << outcome_string(rv) << std::endl;

    // empty avoider
    auto ea = adn::empty_avoider(bot);
    auto ev = phi(ea.code, succ.value, 1000000);
    mark("empty_avoider(succ) done");
    std::cerr << "ea=" << outcome_string(ev) << std::endl;

    auto ev2 = phi(ea.code, bot.value, 100000);
    mark("empty_avoider(bottom) @1e5 done");
    std::cerr << "ea(bot)=" << outcome_string(ev2) << std::endl;
    return 0;
}

int main() { return cwb::run_with_large_stack(work); }
