#pragma once

// Scenario scripts for the stage construction: enumeration timelines for the
// c.e. set A and the target set H, psi convergence events, delta computation
// events (scripted per slot, or derived from an oracle program), and
// W-enumeration timelines for codes the construction may follow.
//
// Line-oriented text format, stages and naturals in decimal, `#` comments:
//
//   horizon N
//   A e @s                     # element e enters A at stage s
//   H x @s                     # element x enters H at stage s
//   psi n @s -> c              # psi(n) converges at stage s with value c
//   delta slot n @s -> v use u # computation on slot n: starts at s, value v,
//                              #   invalidated if A later gains an element < u
//   deltacode <code>           # oracle mode: derive slot events from a program
//   W c e @s                   # e enters W_c at stage s

#include "cwb/codec.hpp"
#include "cwb/nat.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace cwb::sim {

struct DeltaEvent {
    std::uint64_t start = 0;
    Nat value;
    Nat use;  // invalidated when A gains an element strictly below this
};

struct PsiEvent {
    std::uint64_t n = 0;
    std::uint64_t stage = 0;
    Nat value;
};

struct Scenario {
    std::uint64_t horizon = 0;
    std::vector<std::pair<Nat, std::uint64_t>> a_events;
    std::vector<std::pair<Nat, std::uint64_t>> h_events;
    std::vector<PsiEvent> psi_events;
    std::map<std::uint64_t, std::vector<DeltaEvent>> delta_slots;
    std::optional<Code> delta_code;
    std::map<Nat, std::vector<std::pair<Nat, std::uint64_t>>> w_scripts;

    bool scripted_delta() const { return !delta_code.has_value(); }
};

class scenario_error : public std::runtime_error {
  public:
    scenario_error(std::size_t line, const std::string& msg)
        : std::runtime_error("scenario line " + std::to_string(line) + ": " + msg),
          line(line) {}
    std::size_t line;
};

namespace detail {

inline std::vector<std::string> fields(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string f;
    while (is >> f) {
        if (f[0] == '#') break;
        out.push_back(f);
    }
    return out;
}

inline std::uint64_t parse_stage(const std::string& f, std::size_t line) {
    if (f.size() < 2 || f[0] != '@')
        throw scenario_error(line, "expected @stage, got '" + f + "'");
    Nat n = nat_from_string(f.substr(1));
    if (!fits_u64(n)) throw scenario_error(line, "stage out of range");
    return to_u64(n);
}

inline Nat parse_nat(const std::string& f, std::size_t line) {
    try {
        return nat_from_string(f);
    } catch (const std::invalid_argument&) {
        throw scenario_error(line, "expected natural, got '" + f + "'");
    }
}

}  // namespace detail

inline Scenario parse_scenario(const std::string& text) {
    Scenario s;
    bool saw_horizon = false;
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto f = detail::fields(line);
        if (f.empty()) continue;
        const std::string& head = f[0];
        if (head == "horizon") {
            if (f.size() != 2) throw scenario_error(lineno, "horizon N");
            Nat n = detail::parse_nat(f[1], lineno);
            if (!fits_u64(n)) throw scenario_error(lineno, "horizon out of range");
            s.horizon = to_u64(n);
            saw_horizon = true;
        } else if (head == "A") {
            if (f.size() != 3) throw scenario_error(lineno, "A e @s");
            s.a_events.emplace_back(detail::parse_nat(f[1], lineno),
                                    detail::parse_stage(f[2], lineno));
        } else if (head == "H") {
            if (f.size() != 3) throw scenario_error(lineno, "H x @s");
            s.h_events.emplace_back(detail::parse_nat(f[1], lineno),
                                    detail::parse_stage(f[2], lineno));
        } else if (head == "psi") {
            if (f.size() != 5 || f[3] != "->")
                throw scenario_error(lineno, "psi n @s -> c");
            PsiEvent e;
            Nat n = detail::parse_nat(f[1], lineno);
            if (!fits_u64(n)) throw scenario_error(lineno, "psi index out of range");
            e.n = to_u64(n);
            e.stage = detail::parse_stage(f[2], lineno);
            e.value = detail::parse_nat(f[4], lineno);
            s.psi_events.push_back(std::move(e));
        } else if (head == "delta") {
            if (f.size() != 8 || f[1] != "slot" || f[4] != "->" || f[6] != "use")
                throw scenario_error(lineno, "delta slot n @s -> v use u");
            Nat slot = detail::parse_nat(f[2], lineno);
            if (!fits_u64(slot)) throw scenario_error(lineno, "slot out of range");
            DeltaEvent e;
            e.start = detail::parse_stage(f[3], lineno);
            e.value = detail::parse_nat(f[5], lineno);
            e.use = detail::parse_nat(f[7], lineno);
            s.delta_slots[to_u64(slot)].push_back(std::move(e));
        } else if (head == "deltacode") {
            if (f.size() != 2) throw scenario_error(lineno, "deltacode <code>");
            s.delta_code = Code(detail::parse_nat(f[1], lineno));
        } else if (head == "W") {
            if (f.size() != 4) throw scenario_error(lineno, "W c e @s");
            Nat c = detail::parse_nat(f[1], lineno);
            s.w_scripts[c].emplace_back(detail::parse_nat(f[2], lineno),
                                        detail::parse_stage(f[3], lineno));
        } else {
            throw scenario_error(lineno, "unknown directive '" + head + "'");
        }
    }
    if (!saw_horizon) throw scenario_error(lineno, "missing horizon directive");
    return s;
}

struct Violation {
    std::string message;
};

inline std::vector<Violation> validate_scenario(const Scenario& s) {
    std::vector<Violation> out;
    auto check_stage = [&](std::uint64_t stage, const std::string& what) {
        if (stage >= s.horizon)
            out.push_back({what + " at stage " + std::to_string(stage) +
                           " >= horizon " + std::to_string(s.horizon)});
    };
    std::map<Nat, std::size_t> a_seen;
    for (const auto& [e, stage] : s.a_events) {
        check_stage(stage, "A event");
        if (++a_seen[e] == 2)
            out.push_back({"duplicate A element " + to_string(e)});
    }
    std::map<Nat, std::size_t> h_seen;
    for (const auto& [e, stage] : s.h_events) {
        check_stage(stage, "H event");
        if (++h_seen[e] == 2)
            out.push_back({"duplicate H element " + to_string(e)});
    }
    std::map<std::uint64_t, std::size_t> psi_seen;
    for (const auto& e : s.psi_events) {
        check_stage(e.stage, "psi event");
        if (++psi_seen[e.n] == 2)
            out.push_back({"duplicate psi event for n=" + std::to_string(e.n)});
    }
    for (const auto& [slot, events] : s.delta_slots) {
        for (std::size_t i = 0; i < events.size(); ++i) {
            check_stage(events[i].start, "delta event");
            if (i > 0 && events[i].start <= events[i - 1].start)
                out.push_back({"delta slot " + std::to_string(slot) +
                               " events not stage-increasing"});
        }
    }
    if (!s.delta_slots.empty() && s.delta_code)
        out.push_back({"both scripted delta events and deltacode given"});
    for (const auto& [c, entries] : s.w_scripts) {
        std::map<Nat, std::size_t> w_seen;
        for (const auto& [e, stage] : entries) {
            check_stage(stage, "W event");
            if (++w_seen[e] == 2)
                out.push_back({"duplicate W element " + to_string(e) + " for code " +
                               to_string(c)});
        }
    }
    return out;
}

}  // namespace cwb::sim
