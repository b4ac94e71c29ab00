// Broker: agreeing-subset search and in-process session execution.
#pragma once

#include <cstddef>
#include <optional>

#include "ces/agreement.hpp"

namespace ces {

struct Strategy {
    enum class Kind { Honest, LazyHonest, DishonestAfter };

    Kind kind = Kind::Honest;
    int honest_rounds = 0;  // DishonestAfter: rounds played honestly first

    static Strategy honest();
    static Strategy lazy_honest();
    static Strategy dishonest_after(int rounds);

    // Events performed this round out of the notified duty set, in order.
    // Honest: all of them. LazyHonest: the least one. DishonestAfter(k):
    // all of them while round <= k, then none. Rounds are 1-based.
    std::vector<EventId> act(int round, const EventSet& duty_set) const;

    friend bool operator==(const Strategy&, const Strategy&) = default;
};

// "honest", "lazy", or "dishonest-after:<K>".
Strategy parse_strategy(const std::string& text);

struct SessionAction {
    ParticipantId participant;
    EventId event;
    PerformKind classification = PerformKind::Unjustified;

    friend bool operator==(const SessionAction&, const SessionAction&) = default;
};

struct SessionRound {
    State state_before;
    std::map<ParticipantId, EventSet> notifications;  // duties of the culpable
    std::vector<SessionAction> actions;

    friend bool operator==(const SessionRound&, const SessionRound&) = default;
};

enum class Verdict { AllFulfilled, Stalled };

const char* to_string(Verdict v);

struct SessionLog {
    std::vector<SessionRound> rounds;
    Verdict verdict = Verdict::AllFulfilled;
    std::set<ParticipantId> culpable;  // empty iff all fulfilled
    State final_state;

    friend bool operator==(const SessionLog&, const SessionLog&) = default;
};

struct AgreeingSubset {
    std::vector<std::size_t> indices;  // into the submitted contract list
    AgreementResult agreement;
};

// First nonempty subset, largest first and lexicographic within a size,
// whose composition is agreed by every participant appearing in it. Absent
// when no subset agrees or the input list is empty.
std::optional<AgreeingSubset> find_agreeing_subset(const std::vector<Contract>& contracts,
                                                   std::size_t cap = 12);

// Composes the contracts (must be agreed) and plays rounds: report duties,
// stop all-fulfilled when everyone is ok, notify the culpable, let them act
// per strategy in participant order. A round without a single performed
// event stalls, as does exceeding max_rounds. Participants without an entry
// in `strategies` play honest. Deterministic: equal inputs, equal logs.
SessionLog run_session(const std::vector<Contract>& contracts,
                       const std::map<ParticipantId, Strategy>& strategies,
                       int max_rounds = 100);

}  // namespace ces
