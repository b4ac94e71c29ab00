#include "ces/configurations.hpp"

namespace ces {

const char* to_string(Justification j) {
    switch (j) {
        case Justification::StandardEnabled: return "standard-enabled";
        case Justification::CircularEnabled: return "circular-enabled";
        case Justification::Credit: return "credit";
    }
    return "?";
}

namespace {

void require_events(const Contract& c, const EventSet& events, const char* what) {
    for (const EventId& e : events)
        if (!c.events.count(e))
            throw ContractError(std::string(what) + " contains unknown event '" + e + "'");
}

// Greedy witness construction: keep appending the least event justifiable at
// the current position. Standard enablings are monotone in the placed prefix
// and the other two justifications do not depend on it at all, so appending a
// justifiable event never blocks another one — if any justifying order
// exists, the greedy one does. Standard wins over credit wins over circular
// when several justifications apply, which keeps witnesses deterministic.
std::optional<OrderingWitness> greedy_witness(const Contract& c, const EventSet& credit,
                                              const State& candidate) {
    if (!subset_of(credit, candidate)) return std::nullopt;
    OrderingWitness witness;
    State placed;
    while (placed.size() < candidate.size()) {
        bool advanced = false;
        for (const EventId& e : candidate) {
            if (placed.count(e)) continue;
            std::optional<Justification> j;
            if (enables(c, EnablingKind::Standard, placed, e))
                j = Justification::StandardEnabled;
            else if (credit.count(e))
                j = Justification::Credit;
            else if (enables(c, EnablingKind::Circular, candidate, e))
                j = Justification::CircularEnabled;
            if (j) {
                witness.push_back({e, *j});
                placed.insert(e);
                advanced = true;
                break;
            }
        }
        if (!advanced) return std::nullopt;
    }
    return witness;
}

}  // namespace

std::optional<OrderingWitness> is_configuration(const Contract& c, const State& candidate) {
    require_events(c, candidate, "candidate");
    return greedy_witness(c, {}, candidate);
}

std::optional<OrderingWitness> is_x_configuration(const Contract& c, const EventSet& credit,
                                                  const State& candidate) {
    require_events(c, credit, "credit set");
    require_events(c, candidate, "candidate");
    return greedy_witness(c, credit, candidate);
}

std::set<State> enumerate_configurations(const Contract& c, std::size_t cap) {
    if (c.events.size() > cap)
        throw ContractError("event cap exceeded: " + std::to_string(c.events.size()) + " > " +
                            std::to_string(cap));
    std::vector<EventId> events(c.events.begin(), c.events.end());
    std::set<State> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << events.size()); ++mask) {
        State candidate;
        for (std::size_t i = 0; i < events.size(); ++i)
            if (mask & (std::size_t{1} << i)) candidate.insert(events[i]);
        if (greedy_witness(c, {}, candidate)) out.insert(std::move(candidate));
    }
    return out;
}

namespace {

// Least fixpoint per credit set. Rule (ii) recurses on a strictly larger
// credit set (when the target is already on credit, rule (iii) has it
// covered), so the recursion depth is bounded by the number of events.
// The memo is shared across one top-level query.
const EventSet& reach(const Contract& c, const EventSet& credit,
                      std::map<EventSet, EventSet>& memo) {
    auto it = memo.find(credit);
    if (it != memo.end()) return it->second;
    EventSet r = credit;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Clause& cl : c.clauses) {
            if (r.count(cl.target)) continue;
            bool fires;
            if (cl.kind == EnablingKind::Standard) {
                fires = subset_of(cl.premises, r);
            } else {
                EventSet extended = credit;
                extended.insert(cl.target);
                fires = subset_of(cl.premises, reach(c, extended, memo));
            }
            if (fires) {
                r.insert(cl.target);
                changed = true;
            }
        }
    }
    return memo.emplace(credit, std::move(r)).first->second;
}

}  // namespace

EventSet reachable_with_credit(const Contract& c, const EventSet& credit) {
    require_events(c, credit, "credit set");
    std::map<EventSet, EventSet> memo;
    return reach(c, credit, memo);
}

EventSet reachable_events(const Contract& c) { return reachable_with_credit(c, {}); }

State maximal_configuration(const Contract& c) { return reachable_events(c); }

}  // namespace ces
