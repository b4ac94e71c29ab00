// Configurations, credit-extended configurations, and reachable events.
#pragma once

#include <cstddef>
#include <optional>

#include "ces/contract.hpp"

namespace ces {

enum class Justification {
    StandardEnabled,  // standard clause satisfied by the preceding events
    CircularEnabled,  // circular clause satisfied by the whole candidate set
    Credit,           // taken on credit: member of the credit set
};

const char* to_string(Justification j);

struct WitnessStep {
    EventId event;
    Justification justification = Justification::StandardEnabled;

    friend bool operator==(const WitnessStep&, const WitnessStep&) = default;
};

// An order over the candidate set in which every event is justified at the
// position it occupies.
using OrderingWitness = std::vector<WitnessStep>;

// Decides whether `candidate` admits a justifying order: each event either
// standard-enabled by the events before it or circular-enabled by the whole
// candidate set. Returns a witness order, or absent.
std::optional<OrderingWitness> is_configuration(const Contract& c, const State& candidate);

// Same, but events in `credit` may additionally be placed unjustified.
// Requires credit to be a subset of candidate for a witness to exist.
std::optional<OrderingWitness> is_x_configuration(const Contract& c, const EventSet& credit,
                                                  const State& candidate);

// All configurations, by exhaustive subset scan; guarded by an event cap.
std::set<State> enumerate_configurations(const Contract& c, std::size_t cap = 20);

// Least set R closed under:
//   (i)   D |- e and D within R              => e in R
//   (ii)  D ||- e and D within R(credit+{e}) => e in R
//   (iii) e in credit                        => e in R
// Rule (ii) re-runs the analysis with e itself taken on credit.
EventSet reachable_with_credit(const Contract& c, const EventSet& credit);

// reachable_with_credit with no credit.
EventSet reachable_events(const Contract& c);

// The set of all reachable events; it is itself a configuration and contains
// every other configuration.
State maximal_configuration(const Contract& c);

}  // namespace ces
