#include "ces/agreement.hpp"

namespace ces {

const char* to_string(PerformKind k) {
    switch (k) {
        case PerformKind::StandardJustified: return "standard-justified";
        case PerformKind::CircularCredit: return "circular-credit";
        case PerformKind::Unjustified: return "unjustified";
    }
    return "?";
}

AgreementResult find_agreement(const Contract& c) {
    EventSet reachable = reachable_events(c);
    AgreementResult out;
    out.agreed = true;
    for (const ParticipantId& p : c.participants) {
        std::optional<EventSet> witness;
        for (const GoalSet& g : c.goals)  // set order: least goal set wins
            if (g.participant == p && subset_of(g.goal, reachable)) {
                witness = g.goal;
                break;
            }
        out.agreed &= witness.has_value();
        out.goal_witness.emplace(p, std::move(witness));
    }
    if (out.agreed) out.configuration = std::move(reachable);
    return out;
}

namespace {

void require_state(const Contract& c, const State& x) {
    for (const EventId& e : x)
        if (!c.events.count(e)) throw ContractError("unknown event '" + e + "'");
}

EventSet duties_in(const Contract& c, const ParticipantId& participant, const State& performed,
                   const State& maximal) {
    bool standard_step_exists = false;
    for (const EventId& e : maximal)
        if (!performed.count(e) && enables(c, EnablingKind::Standard, performed, e)) {
            standard_step_exists = true;
            break;
        }
    EventSet on_credit = maximal;
    on_credit.insert(performed.begin(), performed.end());
    EventSet out;
    for (const EventId& e : maximal) {
        if (performed.count(e) || owner_of(c, e) != participant) continue;
        if (enables(c, EnablingKind::Standard, performed, e))
            out.insert(e);
        else if (!standard_step_exists && enables(c, EnablingKind::Circular, on_credit, e))
            out.insert(e);
    }
    return out;
}

}  // namespace

EventSet duties(const Contract& c, const ParticipantId& participant, const State& performed) {
    if (!c.participants.count(participant))
        throw ContractError("unknown participant '" + participant + "'");
    require_state(c, performed);
    return duties_in(c, participant, performed, maximal_configuration(c));
}

DutyReport duty_report(const Contract& c, const State& performed) {
    require_state(c, performed);
    State maximal = maximal_configuration(c);
    DutyReport out;
    out.state = performed;
    for (const ParticipantId& p : c.participants) {
        EventSet owed = duties_in(c, p, performed, maximal);
        if (!owed.empty()) out.culpable.insert(p);
        if (ok(c, p, performed)) out.fulfilled.insert(p);
        out.duties.emplace(p, std::move(owed));
    }
    return out;
}

PerformResult perform(const Contract& c, const State& performed, const EventId& e) {
    if (!c.events.count(e)) throw ContractError("unknown event '" + e + "'");
    require_state(c, performed);
    if (performed.count(e)) throw ContractError("event '" + e + "' already performed");
    PerformResult out;
    out.state = performed;
    out.state.insert(e);
    if (enables(c, EnablingKind::Standard, performed, e)) {
        out.classification = PerformKind::StandardJustified;
    } else {
        EventSet on_credit = maximal_configuration(c);
        on_credit.insert(performed.begin(), performed.end());
        on_credit.insert(e);
        out.classification = enables(c, EnablingKind::Circular, on_credit, e)
                                 ? PerformKind::CircularCredit
                                 : PerformKind::Unjustified;
    }
    return out;
}

std::optional<State> check_theorem3(const Contract& c, std::size_t cap) {
    if (!find_agreement(c).agreed) throw ContractError("contract admits no agreement");
    if (c.events.size() > cap)
        throw ContractError("event cap exceeded: " + std::to_string(c.events.size()) + " > " +
                            std::to_string(cap));
    State maximal = maximal_configuration(c);
    std::vector<EventId> events(c.events.begin(), c.events.end());
    for (std::size_t mask = 0; mask < (std::size_t{1} << events.size()); ++mask) {
        State x;
        for (std::size_t i = 0; i < events.size(); ++i)
            if (mask & (std::size_t{1} << i)) x.insert(events[i]);
        bool everyone_ok = true;
        for (const ParticipantId& p : c.participants) everyone_ok &= ok(c, p, x);
        if (everyone_ok) continue;
        bool someone_culpable = false;
        for (const ParticipantId& p : c.participants)
            if (!duties_in(c, p, x, maximal).empty()) {
                someone_culpable = true;
                break;
            }
        if (!someone_culpable) return x;
    }
    return std::nullopt;
}

}  // namespace ces
