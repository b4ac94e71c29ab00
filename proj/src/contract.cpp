#include "ces/contract.hpp"

#include "ces/text_format.hpp"

namespace ces {

ParseError::ParseError(const std::string& message, int line_, int column_)
    : ContractError("line " + std::to_string(line_) + ", column " + std::to_string(column_) +
                    ": " + message),
      line(line_),
      column(column_) {}

namespace {

void require_event(const Contract& c, const EventId& e) {
    if (!c.events.count(e)) throw ContractError("unknown event '" + e + "'");
}

void require_state(const Contract& c, const State& x) {
    for (const EventId& e : x) require_event(c, e);
}

void require_participant(const Contract& c, const ParticipantId& p) {
    if (!c.participants.count(p)) throw ContractError("unknown participant '" + p + "'");
}

std::string render_clause(const Clause& cl) {
    return "enable " + render_events(cl.premises) +
           (cl.kind == EnablingKind::Standard ? " |- " : " ||- ") + cl.target;
}

}  // namespace

const ParticipantId& owner_of(const Contract& c, const EventId& e) {
    auto it = c.owner.find(e);
    if (it == c.owner.end()) throw ContractError("unknown event '" + e + "'");
    return it->second;
}

bool enables(const Contract& c, EnablingKind kind, const State& performed, const EventId& e) {
    require_event(c, e);
    require_state(c, performed);
    for (const Clause& cl : c.clauses)
        if (cl.kind == kind && cl.target == e && subset_of(cl.premises, performed)) return true;
    return false;
}

bool ok(const Contract& c, const ParticipantId& participant, const State& performed) {
    require_participant(c, participant);
    require_state(c, performed);
    for (const GoalSet& g : c.goals)
        if (g.participant == participant && subset_of(g.goal, performed)) return true;
    return false;
}

Contract compose(const Contract& a, const Contract& b) {
    for (const auto& [e, p] : a.owner) {
        auto it = b.owner.find(e);
        if (it != b.owner.end() && it->second != p)
            throw ContractError("event '" + e + "' owned by both '" + p + "' and '" +
                                it->second + "'");
    }
    Contract out = a;
    out.events.insert(b.events.begin(), b.events.end());
    out.participants.insert(b.participants.begin(), b.participants.end());
    out.owner.insert(b.owner.begin(), b.owner.end());
    out.clauses.insert(b.clauses.begin(), b.clauses.end());
    out.goals.insert(b.goals.begin(), b.goals.end());
    return out;
}

std::vector<Diagnostic> validate(const Contract& c) {
    std::vector<Diagnostic> out;
    for (const ParticipantId& p : c.participants) {
        bool has_goal = false;
        for (const GoalSet& g : c.goals) has_goal |= g.participant == p;
        if (!has_goal)
            out.push_back({DiagnosticCode::ParticipantWithoutGoals,
                           "participant '" + p + "' has no goal set and is never fulfilled"});
    }
    for (const Clause& cl : c.clauses)
        if (cl.kind == EnablingKind::Standard && cl.premises.count(cl.target))
            out.push_back({DiagnosticCode::InertStandardClause,
                           "'" + render_clause(cl) + "' lists its own target and can never fire"});
    for (const Clause& cl : c.clauses)
        for (const Clause& other : c.clauses)
            if (other.kind == cl.kind && other.target == cl.target && other.premises != cl.premises &&
                subset_of(other.premises, cl.premises)) {
                out.push_back({DiagnosticCode::SubsumedClause,
                               "'" + render_clause(cl) + "' is subsumed by '" +
                                   render_clause(other) + "'"});
                break;
            }
    return out;
}

}  // namespace ces
