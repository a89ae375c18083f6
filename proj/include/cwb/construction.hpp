#pragma once

// The stage construction and its decision procedure. A deterministic state
// machine per (scenario, x): while no slot is engaged the construction
// totalizes the psi script stage by stage; when the L-least eligible slot
// carries an apparently converging delta computation the tables freeze; a
// frozen computation that the A-timeline invalidates is discarded (that copy
// in L is never searched again) and totalizing resumes the same stage; if x
// enters H while frozen, the frozen slot permanently follows the computation
// value's W-script. The decision procedure replays the construction and
// consults the scenario's full A-timeline to classify each freeze as
// permanent or not.
//
// Conventions (fixed here, noted in the docs): the search order starts at 0;
// "L-least" means least position in the order, so earlier copies win;
// freezing freezes every table, not just the engaged slot's; within a stage
// the H/psi scripts are consulted before delta events; during Following the
// other slots keep totalizing.

#include "cwb/eval.hpp"
#include "cwb/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace cwb::sim {

// Position i of the triangular order 0; 0 1; 0 1 2; ... Every value occurs
// infinitely often, value n first at position n(n+1)/2 + n.
inline std::uint64_t l_order(std::uint64_t i) {
    long double approx = (std::sqrt(8.0L * static_cast<long double>(i) + 1.0L) - 1.0L) / 2.0L;
    std::uint64_t k = static_cast<std::uint64_t>(approx);
    while (k * (k + 1) / 2 > i) --k;
    while ((k + 1) * (k + 2) / 2 <= i) ++k;
    return i - k * (k + 1) / 2;
}

struct Snapshot {
    Nat value;
    Nat use;
    std::uint64_t start = 0;
};

struct TraceEvent {
    enum class Type { TotalizeStep, Freeze, Unfreeze, Discard, Follow, Decision };
    enum class UnfreezeReason { NonPermanent, TargetEntered };
    enum class Verdict { In, Out, Exhausted };

    std::uint64_t stage = 0;
    Type type = Type::TotalizeStep;
    std::uint64_t n = 0;              // TotalizeStep: range end; Freeze/Follow: slot
    std::uint64_t position = 0;       // Freeze/Discard
    Snapshot snapshot;                // Freeze
    UnfreezeReason reason = UnfreezeReason::NonPermanent;
    Nat follow_target;                // Follow
    Verdict verdict = Verdict::Exhausted;
    std::uint64_t evidence_stage = 0;  // Decision: IN stage / OUT freeze stage
    std::uint64_t evidence_n = 0;      // Decision OUT
    Nat evidence_use;                  // Decision OUT
};

inline std::string format_event(const TraceEvent& e) {
    std::ostringstream os;
    os << "s=" << e.stage << " ";
    switch (e.type) {
        case TraceEvent::Type::TotalizeStep:
            os << "TOTALIZE 0.." << e.n;
            break;
        case TraceEvent::Type::Freeze:
            os << "FREEZE n=" << e.n << " pos=" << e.position
               << " value=" << to_string(e.snapshot.value)
               << " use=" << to_string(e.snapshot.use) << " start=" << e.snapshot.start;
            break;
        case TraceEvent::Type::Unfreeze:
            os << "UNFREEZE "
               << (e.reason == TraceEvent::UnfreezeReason::NonPermanent
                       ? "NONPERMANENT"
                       : "TARGET_ENTERED");
            break;
        case TraceEvent::Type::Discard:
            os << "DISCARD pos=" << e.position;
            break;
        case TraceEvent::Type::Follow:
            os << "FOLLOW n=" << e.n << " target=" << to_string(e.follow_target);
            break;
        case TraceEvent::Type::Decision:
            switch (e.verdict) {
                case TraceEvent::Verdict::In:
                    os << "DECISION IN @" << e.evidence_stage;
                    break;
                case TraceEvent::Verdict::Out:
                    os << "DECISION OUT n=" << e.evidence_n << " stage=" << e.evidence_stage
                       << " use=" << to_string(e.evidence_use);
                    break;
                case TraceEvent::Verdict::Exhausted:
                    os << "DECISION EXHAUSTED @" << e.evidence_stage;
                    break;
            }
            break;
    }
    return os.str();
}

inline std::string format_trace(const std::vector<TraceEvent>& trace) {
    std::string out;
    for (const TraceEvent& e : trace) {
        out += format_event(e);
        out += '\n';
    }
    return out;
}

enum class Mode { Totalizing, Frozen, Following };

struct ConstructionState {
    std::uint64_t stage = 0;
    Mode mode = Mode::Totalizing;
    std::uint64_t frozen_n = 0;
    std::uint64_t frozen_pos = 0;
    Snapshot frozen_snapshot;
    std::uint64_t follow_n = 0;
    Nat follow_target;
    std::map<std::uint64_t, std::set<Nat>> w_tables;
    std::set<std::uint64_t> discarded;
    std::vector<TraceEvent> trace;
};

// Scripted delta timelines, either straight from the scenario or derived
// from the oracle program.
using DeltaTimelines = std::map<std::uint64_t, std::vector<DeltaEvent>>;

// delta_s(n) = run of the oracle code on n with oracle A_s and fuel s. New
// events appear exactly where A changed below the previous use (or where no
// computation existed); by the oracle-use invariant everything in between is
// the same computation.
inline DeltaTimelines delta_from_oracle(const Code& code, const Scenario& sc) {
    DeltaTimelines out;
    Term t = decode(code);
    if (t.arity() != 1) return out;
    for (std::uint64_t slot = 0; slot < sc.horizon; ++slot) {
        std::vector<DeltaEvent> events;
        std::optional<DeltaEvent> current;
        OracleContext ctx;
        std::size_t fed = 0;
        std::vector<std::pair<std::uint64_t, Nat>> arrivals;  // (stage, element)
        for (const auto& [e, stage] : sc.a_events) arrivals.emplace_back(stage, e);
        std::sort(arrivals.begin(), arrivals.end());
        for (std::uint64_t s = 0; s < sc.horizon; ++s) {
            bool changed_below_use = false;
            while (fed < arrivals.size() && arrivals[fed].first <= s) {
                ctx.members.insert(arrivals[fed].second);
                if (current && arrivals[fed].first > current->start &&
                    arrivals[fed].second < current->use)
                    changed_below_use = true;
                ++fed;
            }
            if (current && changed_below_use) current.reset();
            if (!current) {
                EvalResult r = eval(t, {nat(slot)}, &ctx, s);
                if (r.outcome.converged) {
                    current = DeltaEvent{s, r.outcome.value, r.use()};
                    events.push_back(*current);
                }
            }
        }
        if (!events.empty()) out[slot] = std::move(events);
    }
    return out;
}

namespace detail {

struct CompiledScenario {
    const Scenario* src = nullptr;
    DeltaTimelines slots;
    std::map<std::uint64_t, std::pair<std::uint64_t, Nat>> psi;  // n -> (stage, code)
    std::vector<std::pair<std::uint64_t, Nat>> a_by_stage;       // sorted (stage, elem)

    // Latest event for `slot` started by stage s and still valid: not
    // superseded by a later-started event and A unchanged below its use
    // since it started.
    std::optional<DeltaEvent> live_event(std::uint64_t slot, std::uint64_t s) const {
        auto it = slots.find(slot);
        if (it == slots.end()) return std::nullopt;
        const DeltaEvent* latest = nullptr;
        for (const DeltaEvent& e : it->second)
            if (e.start <= s) latest = &e;
        if (!latest) return std::nullopt;
        if (a_changed_below(latest->use, latest->start, s)) return std::nullopt;
        return *latest;
    }

    // Did A gain an element < use at a stage in (after, through]?
    bool a_changed_below(const Nat& use, std::uint64_t after, std::uint64_t through) const {
        for (const auto& [stage, elem] : a_by_stage) {
            if (stage > through) break;
            if (stage > after && elem < use) return true;
        }
        return false;
    }

    bool psi_converged(std::uint64_t n, std::uint64_t s) const {
        auto it = psi.find(n);
        return it != psi.end() && it->second.first <= s;
    }

    std::optional<std::uint64_t> h_entry_stage(const Nat& x) const {
        for (const auto& [e, stage] : src->h_events)
            if (e == x) return stage;
        return std::nullopt;
    }

    std::set<Nat> w_script_at(const Nat& code, std::uint64_t s) const {
        std::set<Nat> out;
        auto it = src->w_scripts.find(code);
        if (it == src->w_scripts.end()) return out;
        for (const auto& [e, stage] : it->second)
            if (stage <= s) out.insert(e);
        return out;
    }
};

inline CompiledScenario compile(const Scenario& sc) {
    CompiledScenario c;
    c.src = &sc;
    c.slots = sc.scripted_delta() ? sc.delta_slots : delta_from_oracle(*sc.delta_code, sc);
    for (const PsiEvent& e : sc.psi_events) c.psi[e.n] = {e.stage, e.value};
    for (const auto& [e, stage] : sc.a_events) c.a_by_stage.emplace_back(stage, e);
    std::sort(c.a_by_stage.begin(), c.a_by_stage.end(),
              [](const auto& a, const auto& b) {
                  return a.first != b.first ? a.first < b.first : a.second < b.second;
              });
    return c;
}

inline void totalize_tables(ConstructionState& st, const CompiledScenario& sc,
                            std::uint64_t s) {
    for (std::uint64_t n = 0; n <= s; ++n) {
        if (st.mode == Mode::Following && n == st.follow_n) continue;
        auto it = sc.psi.find(n);
        if (it != sc.psi.end() && it->second.first <= s)
            st.w_tables[n] = sc.w_script_at(it->second.second, s);
    }
    if (st.mode == Mode::Following)
        st.w_tables[st.follow_n] = sc.w_script_at(st.follow_target, s);
}

inline void emit(ConstructionState& st, TraceEvent e) { st.trace.push_back(std::move(e)); }

inline void step_compiled(ConstructionState& st, const CompiledScenario& sc, const Nat& x) {
    std::uint64_t s = st.stage;
    if (st.mode == Mode::Frozen) {
        auto live = sc.live_event(st.frozen_n, s);
        bool still_same = live && live->start == st.frozen_snapshot.start;
        if (!still_same) {
            TraceEvent unf;
            unf.stage = s;
            unf.type = TraceEvent::Type::Unfreeze;
            unf.reason = TraceEvent::UnfreezeReason::NonPermanent;
            emit(st, unf);
            TraceEvent disc;
            disc.stage = s;
            disc.type = TraceEvent::Type::Discard;
            disc.position = st.frozen_pos;
            emit(st, disc);
            st.discarded.insert(st.frozen_pos);
            st.mode = Mode::Totalizing;
            totalize_tables(st, sc, s);
            TraceEvent tot;
            tot.stage = s;
            tot.type = TraceEvent::Type::TotalizeStep;
            tot.n = s;
            emit(st, tot);
            ++st.stage;
            return;
        }
        auto h_stage = sc.h_entry_stage(x);
        if (h_stage && *h_stage <= s) {
            TraceEvent unf;
            unf.stage = s;
            unf.type = TraceEvent::Type::Unfreeze;
            unf.reason = TraceEvent::UnfreezeReason::TargetEntered;
            emit(st, unf);
            TraceEvent fol;
            fol.stage = s;
            fol.type = TraceEvent::Type::Follow;
            fol.n = st.frozen_n;
            fol.follow_target = st.frozen_snapshot.value;
            emit(st, fol);
            st.follow_n = st.frozen_n;
            st.follow_target = st.frozen_snapshot.value;
            st.mode = Mode::Following;
            totalize_tables(st, sc, s);
            ++st.stage;
            return;
        }
        ++st.stage;  // frozen stages are silent
        return;
    }
    if (st.mode == Mode::Following) {
        totalize_tables(st, sc, s);
        TraceEvent tot;
        tot.stage = s;
        tot.type = TraceEvent::Type::TotalizeStep;
        tot.n = s;
        emit(st, tot);
        ++st.stage;
        return;
    }
    // Totalizing: search L positions over blocks 0..s for the least
    // non-discarded copy of an n <= s with psi still divergent and a live
    // delta computation on its slot.
    std::uint64_t block_end = (s + 1) * (s + 2) / 2;
    for (std::uint64_t i = 0; i < block_end; ++i) {
        if (st.discarded.count(i)) continue;
        std::uint64_t n = l_order(i);
        if (sc.psi_converged(n, s)) continue;
        auto live = sc.live_event(n, s);
        if (!live) continue;
        TraceEvent frz;
        frz.stage = s;
        frz.type = TraceEvent::Type::Freeze;
        frz.n = n;
        frz.position = i;
        frz.snapshot = Snapshot{live->value, live->use, live->start};
        emit(st, frz);
        st.mode = Mode::Frozen;
        st.frozen_n = n;
        st.frozen_pos = i;
        st.frozen_snapshot = frz.snapshot;
        ++st.stage;
        return;
    }
    totalize_tables(st, sc, s);
    TraceEvent tot;
    tot.stage = s;
    tot.type = TraceEvent::Type::TotalizeStep;
    tot.n = s;
    emit(st, tot);
    ++st.stage;
}

}  // namespace detail

// One stage transition. Scenario invariants are assumed checked (see
// validate_scenario); scripted or oracle-derived timelines behave alike.
inline ConstructionState step(ConstructionState st, const Scenario& sc, const Nat& x) {
    detail::CompiledScenario c = detail::compile(sc);
    detail::step_compiled(st, c, x);
    return st;
}

inline std::pair<ConstructionState, std::vector<TraceEvent>> run_construction(
    const Scenario& sc, const Nat& x) {
    detail::CompiledScenario c = detail::compile(sc);
    ConstructionState st;
    while (st.stage < sc.horizon) detail::step_compiled(st, c, x);
    return {st, st.trace};
}

struct DecideResult {
    TraceEvent::Verdict verdict = TraceEvent::Verdict::Exhausted;
    std::uint64_t stage = 0;   // IN: H entry; OUT: freeze stage; EXHAUSTED: horizon
    std::uint64_t n = 0;       // OUT
    Nat use;                   // OUT
    std::vector<TraceEvent> trace;
};

inline std::string verdict_string(const DecideResult& r) {
    switch (r.verdict) {
        case TraceEvent::Verdict::In:
            return "IN @" + std::to_string(r.stage);
        case TraceEvent::Verdict::Out:
            return "OUT n=" + std::to_string(r.n) + " stage=" + std::to_string(r.stage) +
                   " use=" + to_string(r.use);
        case TraceEvent::Verdict::Exhausted:
            return "EXHAUSTED @" + std::to_string(r.stage);
    }
    return "";
}

// Replays the construction while consulting the scenario's whole A-timeline:
// x found in H decides IN at its entry stage; a freeze whose computation A
// never disturbs below the use before the horizon decides OUT; a horizon
// reached with neither is EXHAUSTED, an explicitly inconclusive verdict.
inline DecideResult decide(const Scenario& sc, const Nat& x) {
    detail::CompiledScenario c = detail::compile(sc);
    ConstructionState st;
    DecideResult out;
    auto h_stage = c.h_entry_stage(x);
    while (st.stage < sc.horizon) {
        std::uint64_t s = st.stage;
        if (h_stage && *h_stage <= s) {
            out.verdict = TraceEvent::Verdict::In;
            out.stage = *h_stage;
            TraceEvent d;
            d.stage = s;
            d.type = TraceEvent::Type::Decision;
            d.verdict = out.verdict;
            d.evidence_stage = out.stage;
            st.trace.push_back(d);
            out.trace = st.trace;
            return out;
        }
        std::size_t before = st.trace.size();
        detail::step_compiled(st, c, x);
        for (std::size_t i = before; i < st.trace.size(); ++i) {
            const TraceEvent& e = st.trace[i];
            if (e.type != TraceEvent::Type::Freeze) continue;
            if (!c.a_changed_below(e.snapshot.use, e.snapshot.start, sc.horizon)) {
                out.verdict = TraceEvent::Verdict::Out;
                out.stage = e.stage;
                out.n = e.n;
                out.use = e.snapshot.use;
                TraceEvent d;
                d.stage = e.stage;
                d.type = TraceEvent::Type::Decision;
                d.verdict = out.verdict;
                d.evidence_stage = e.stage;
                d.evidence_n = e.n;
                d.evidence_use = e.snapshot.use;
                st.trace.push_back(d);
                out.trace = st.trace;
                return out;
            }
        }
    }
    out.verdict = TraceEvent::Verdict::Exhausted;
    out.stage = sc.horizon;
    TraceEvent d;
    d.stage = sc.horizon;
    d.type = TraceEvent::Type::Decision;
    d.verdict = out.verdict;
    d.evidence_stage = sc.horizon;
    st.trace.push_back(d);
    out.trace = st.trace;
    return out;
}

}  // namespace cwb::sim
