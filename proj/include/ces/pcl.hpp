// Encoding contracts into the logic, and the two provability notions.
#pragma once

#include "ces/prover.hpp"

namespace ces {

// Each clause D |- a (resp. D ||- a) becomes
//   owner(a) says ((/\ over d in D of owner(d) says d) -> a)      (resp. -->>)
// with T for an empty premise set. The clause formulae are joined by /\,
// right-associated over lexicographically sorted operands. No clauses: T.
Formula encode(const Contract& c);

// Proof search for owner(e) says e from the encoded contract.
ProofResult provable_atom(const Contract& c, const EventId& e,
                          std::size_t budget = kDefaultProofBudget);

// The model-side counterpart: every goal event reachable once the
// hypotheses are granted on credit.
bool semantic_provable(const Contract& c, const EventSet& hypotheses, const EventSet& goal);

}  // namespace ces
