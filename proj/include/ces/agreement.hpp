// Agreements, duties, culpability, and event performance.
#pragma once

#include <cstddef>
#include <optional>

#include "ces/configurations.hpp"
#include "ces/contract.hpp"

namespace ces {

struct AgreementResult {
    bool agreed = false;
    // The maximal configuration, when agreed.
    std::optional<State> configuration;
    // Per participant, the least goal set contained in the reachable events,
    // or absent when the participant has none.
    std::map<ParticipantId, std::optional<EventSet>> goal_witness;

    friend bool operator==(const AgreementResult&, const AgreementResult&) = default;
};

// A contract is agreed when every participant has some goal set among the
// reachable events; the maximal configuration then satisfies everyone.
AgreementResult find_agreement(const Contract& c);

// Events owed by `participant` in state `performed`: not yet performed,
// reachable, and either standard-enabled by the state, or — when nothing
// reachable is standard-enabled — circular-enabled by the reachable events
// together with the state. Standard enablings take priority: credit is only
// owed when no standard step exists at all.
EventSet duties(const Contract& c, const ParticipantId& participant, const State& performed);

struct DutyReport {
    State state;
    std::map<ParticipantId, EventSet> duties;
    std::set<ParticipantId> culpable;   // nonempty duties
    std::set<ParticipantId> fulfilled;  // ok in this state

    friend bool operator==(const DutyReport&, const DutyReport&) = default;
};

DutyReport duty_report(const Contract& c, const State& performed);

enum class PerformKind {
    StandardJustified,  // standard-enabled by the prior state
    CircularCredit,     // circular-enabled by reachable + state + itself
    Unjustified,        // permitted, but justified by nothing
};

const char* to_string(PerformKind k);

struct PerformResult {
    State state;
    PerformKind classification = PerformKind::Unjustified;

    friend bool operator==(const PerformResult&, const PerformResult&) = default;
};

// Performs one not-yet-performed event and classifies the step.
PerformResult perform(const Contract& c, const State& performed, const EventId& e);

// For an agreed contract, scans every state for a counterexample to
// "everyone fulfilled or someone culpable". Returns the first offending
// state, or absent. Throws when the contract is not agreed or too large.
std::optional<State> check_theorem3(const Contract& c, std::size_t cap = 20);

}  // namespace ces
