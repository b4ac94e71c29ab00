#include "ces/session.hpp"

namespace ces {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::AllFulfilled: return "all-fulfilled";
        case Verdict::Stalled: return "stalled";
    }
    return "?";
}

Strategy Strategy::honest() { return {Kind::Honest, 0}; }

Strategy Strategy::lazy_honest() { return {Kind::LazyHonest, 0}; }

Strategy Strategy::dishonest_after(int rounds) { return {Kind::DishonestAfter, rounds}; }

std::vector<EventId> Strategy::act(int round, const EventSet& duty_set) const {
    switch (kind) {
        case Kind::Honest:
            return {duty_set.begin(), duty_set.end()};
        case Kind::LazyHonest:
            if (duty_set.empty()) return {};
            return {*duty_set.begin()};
        case Kind::DishonestAfter:
            if (round <= honest_rounds) return {duty_set.begin(), duty_set.end()};
            return {};
    }
    return {};
}

Strategy parse_strategy(const std::string& text) {
    if (text == "honest") return Strategy::honest();
    if (text == "lazy") return Strategy::lazy_honest();
    const std::string prefix = "dishonest-after:";
    if (text.rfind(prefix, 0) == 0) {
        const std::string digits = text.substr(prefix.size());
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos)
            return Strategy::dishonest_after(std::stoi(digits));
    }
    throw ContractError("unknown strategy '" + text +
                        "' (expected honest, lazy or dishonest-after:<K>)");
}

std::optional<AgreeingSubset> find_agreeing_subset(const std::vector<Contract>& contracts,
                                                   std::size_t cap) {
    if (contracts.size() > cap)
        throw ContractError("contract cap exceeded: " + std::to_string(contracts.size()) +
                            " > " + std::to_string(cap));
    // Surface ownership clashes up front rather than mid-search.
    for (std::size_t i = 0; i < contracts.size(); ++i)
        for (std::size_t j = i + 1; j < contracts.size(); ++j) compose(contracts[i], contracts[j]);

    const std::size_t n = contracts.size();
    for (std::size_t size = n; size >= 1; --size) {
        // Index combinations in lexicographic order.
        std::vector<std::size_t> pick(size);
        for (std::size_t i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            Contract composed;
            for (std::size_t i : pick) composed = compose(composed, contracts[i]);
            AgreementResult agreement = find_agreement(composed);
            if (agreement.agreed) return AgreeingSubset{pick, std::move(agreement)};
            // Advance to the next combination of `size` indices out of n.
            std::size_t k = size;
            while (k > 0 && pick[k - 1] == n - size + (k - 1)) --k;
            if (k == 0) break;
            ++pick[k - 1];
            for (std::size_t i = k; i < size; ++i) pick[i] = pick[i - 1] + 1;
        }
    }
    return std::nullopt;
}

SessionLog run_session(const std::vector<Contract>& contracts,
                       const std::map<ParticipantId, Strategy>& strategies, int max_rounds) {
    Contract c;
    for (const Contract& part : contracts) c = compose(c, part);
    for (const auto& [p, strategy] : strategies)
        if (!c.participants.count(p)) throw ContractError("unknown participant '" + p + "'");
    if (!find_agreement(c).agreed) throw ContractError("composition admits no agreement");

    SessionLog log;
    State state;
    while (true) {
        DutyReport report = duty_report(c, state);
        if (report.fulfilled.size() == c.participants.size()) {
            log.verdict = Verdict::AllFulfilled;
            break;
        }
        if (static_cast<int>(log.rounds.size()) >= max_rounds) {
            log.verdict = Verdict::Stalled;
            log.culpable = report.culpable;
            break;
        }
        SessionRound round;
        round.state_before = state;
        for (const ParticipantId& p : report.culpable)
            round.notifications.emplace(p, report.duties.at(p));
        const int round_number = static_cast<int>(log.rounds.size()) + 1;
        for (const ParticipantId& p : report.culpable) {
            auto it = strategies.find(p);
            const Strategy strategy = it == strategies.end() ? Strategy::honest() : it->second;
            for (const EventId& e : strategy.act(round_number, round.notifications.at(p))) {
                PerformResult step = perform(c, state, e);
                state = std::move(step.state);
                round.actions.push_back({p, e, step.classification});
            }
        }
        const bool stalled = round.actions.empty();
        log.rounds.push_back(std::move(round));
        if (stalled) {
            log.verdict = Verdict::Stalled;
            log.culpable = report.culpable;
            break;
        }
    }
    log.final_state = state;
    return log;
}

}  // namespace ces
