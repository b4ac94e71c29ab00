// Backward sequent-calculus proof search for the contract logic.
#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <set>
#include <vector>

#include "ces/formula.hpp"

namespace ces {

struct Sequent {
    std::set<Formula> context;
    Formula goal;

    friend bool operator==(const Sequent&, const Sequent&) = default;
    friend std::strong_ordering operator<=>(const Sequent&, const Sequent&) = default;
};

enum class Rule {
    Axiom,        // goal occurs in the context
    TruthRight,   // goal is T
    ConjRight,    // split a conjunction goal
    ConjLeft,     // expose both halves of a context conjunction
    ImplRight,    // move the antecedent into the context
    ImplLeft,     // use a context implication: prove its antecedent, gain its consequent
    CImplRight,   // prove p -->> q by proving q outright
    CImplRight2,  // prove a -->> b through a context p -->> q
    CImplLeft,    // use a context p -->> q: prove p with the goal itself on credit
    SaysRight,    // prove A says x by proving x
    SaysLeft,     // under an A says goal, open a context A says x to x
};

const char* to_string(Rule r);

struct ProofNode {
    Rule rule = Rule::Axiom;
    Sequent sequent;
    std::optional<Formula> principal;  // the context formula a left rule acts on
    std::vector<ProofNode> premises;
};

enum class ProofStatus {
    Proved,           // proof tree attached
    Refuted,          // search space exhausted, no proof exists
    BudgetExhausted,  // gave up: budget hit, or saturation outside the supported fragment
};

const char* to_string(ProofStatus s);

struct ProofResult {
    ProofStatus status = ProofStatus::Refuted;
    std::optional<ProofNode> proof;
    std::size_t visited = 0;
    std::string note;  // set when saturation is not authoritative
};

inline constexpr std::size_t kDefaultProofBudget = 100000;

// Goal-directed backward search. Contexts are sets (no contraction
// bookkeeping); invertible rules run eagerly; the remaining rules backtrack
// over every principal formula. A sequent repeating on the current branch is
// abandoned — minimal proofs never repeat a sequent along a branch, so this
// loses nothing. Results are memoized per search; failures established under
// a loop cutoff are path-dependent and are not.
//
// Refutation is only claimed when every input formula keeps implications
// non-nested (the fragment the engine is validated on); otherwise saturation
// reports BudgetExhausted with a note.
ProofResult prove(const std::set<Formula>& context, const Formula& goal,
                  std::size_t budget = kDefaultProofBudget);

// Replays a proof tree rule by rule: premises of every node must be exactly
// the ones its rule prescribes for its sequent and principal formula.
bool check_proof(const ProofNode& root);

std::string to_string(const Sequent& s);
void print_proof(std::ostream& out, const ProofNode& node, int indent = 0);

}  // namespace ces
