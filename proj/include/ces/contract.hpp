// Contract event structures: events, participants, enabling clauses, goals.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ces {

using EventId = std::string;
using ParticipantId = std::string;
using EventSet = std::set<EventId>;

// A state is the set of events performed so far. States that admit a
// justifying order are configurations (see configurations.hpp).
using State = EventSet;

class ContractError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public ContractError {
public:
    ParseError(const std::string& message, int line, int column);
    int line;
    int column;
};

enum class EnablingKind { Standard, Circular };

// One minimal enabling: premises |- target (standard) or premises ||- target
// (circular). Supersets of the premises enable the target as well; that
// closure stays implicit, enables() runs the subset test instead.
struct Clause {
    EventSet premises;
    EventId target;
    EnablingKind kind = EnablingKind::Standard;

    friend bool operator==(const Clause&, const Clause&) = default;
    // Ordered by target first so renders group clauses per enabled event.
    friend bool operator<(const Clause& a, const Clause& b) {
        if (a.target != b.target) return a.target < b.target;
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.premises < b.premises;
    }
};

// One minimal goal set: the participant is satisfied once all of `goal`
// happened (and in any superset thereof).
struct GoalSet {
    ParticipantId participant;
    EventSet goal;

    friend bool operator==(const GoalSet&, const GoalSet&) = default;
    friend bool operator<(const GoalSet& a, const GoalSet& b) {
        if (a.participant != b.participant) return a.participant < b.participant;
        return a.goal < b.goal;
    }
};

struct Contract {
    EventSet events;
    std::set<ParticipantId> participants;
    std::map<EventId, ParticipantId> owner;  // total on events
    std::set<Clause> clauses;
    std::set<GoalSet> goals;

    friend bool operator==(const Contract&, const Contract&) = default;
};

inline bool subset_of(const EventSet& a, const EventSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

const ParticipantId& owner_of(const Contract& c, const EventId& e);

// True iff some clause of the given kind with target e has premises contained
// in `performed`. Monotone in `performed`.
bool enables(const Contract& c, EnablingKind kind, const State& performed, const EventId& e);

// True iff some goal set of `participant` is contained in `performed`.
// A participant with no goal sets is never fulfilled; an explicit empty goal
// set makes them always fulfilled.
bool ok(const Contract& c, const ParticipantId& participant, const State& performed);

// Component-wise union. Throws on an event owned by different participants.
Contract compose(const Contract& a, const Contract& b);

enum class DiagnosticCode {
    ParticipantWithoutGoals,  // never fulfilled
    InertStandardClause,      // target among its own premises, can never fire
    SubsumedClause,           // another clause, same kind/target, fewer premises
};

struct Diagnostic {
    DiagnosticCode code;
    std::string message;

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

std::vector<Diagnostic> validate(const Contract& c);

}  // namespace ces
