#include "ces/pcl.hpp"

#include <algorithm>

#include "ces/configurations.hpp"

namespace ces {

namespace {

Formula conj_right_assoc(const std::vector<Formula>& parts) {
    Formula out = parts.back();
    for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) out = Formula::conj(*it, out);
    return out;
}

}  // namespace

Formula encode(const Contract& c) {
    if (c.clauses.empty()) return Formula::truth();
    std::vector<Formula> parts;
    for (const Clause& cl : c.clauses) {
        Formula antecedent = Formula::truth();
        if (!cl.premises.empty()) {
            std::vector<Formula> said;
            for (const EventId& d : cl.premises)  // set order: sorted
                said.push_back(Formula::says(owner_of(c, d), Formula::atom(d)));
            antecedent = conj_right_assoc(said);
        }
        Formula target = Formula::atom(cl.target);
        Formula step = cl.kind == EnablingKind::Standard ? Formula::impl(antecedent, target)
                                                         : Formula::cimpl(antecedent, target);
        parts.push_back(Formula::says(owner_of(c, cl.target), step));
    }
    std::sort(parts.begin(), parts.end(), [](const Formula& a, const Formula& b) {
        return a.to_string() < b.to_string();
    });
    return conj_right_assoc(parts);
}

ProofResult provable_atom(const Contract& c, const EventId& e, std::size_t budget) {
    const ParticipantId& speaker = owner_of(c, e);
    return prove({encode(c)}, Formula::says(speaker, Formula::atom(e)), budget);
}

bool semantic_provable(const Contract& c, const EventSet& hypotheses, const EventSet& goal) {
    for (const EventId& e : goal)
        if (!c.events.count(e)) throw ContractError("unknown event '" + e + "'");
    return subset_of(goal, reachable_with_credit(c, hypotheses));
}

}  // namespace ces
