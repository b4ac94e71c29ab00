#include "ces/json_io.hpp"

namespace ces {

Json to_json(const EventSet& events) {
    Json out = Json::array();
    for (const EventId& e : events) out.push_back(e);
    return out;
}

Json to_json(const OrderingWitness& witness) {
    Json out = Json::array();
    for (const WitnessStep& step : witness)
        out.push_back({{"event", step.event}, {"justification", to_string(step.justification)}});
    return out;
}

Json to_json(const AgreementResult& result) {
    Json out;
    out["agreed"] = result.agreed;
    out["configuration"] =
        result.configuration ? to_json(*result.configuration) : Json(nullptr);
    Json witnesses = Json::object();
    for (const auto& [p, goal] : result.goal_witness)
        witnesses[p] = goal ? to_json(*goal) : Json(nullptr);
    out["witnesses"] = std::move(witnesses);
    return out;
}

Json to_json(const DutyReport& report) {
    Json out;
    out["state"] = to_json(report.state);
    Json duties = Json::object();
    for (const auto& [p, owed] : report.duties) duties[p] = to_json(owed);
    out["duties"] = std::move(duties);
    Json culpable = Json::array();
    for (const ParticipantId& p : report.culpable) culpable.push_back(p);
    out["culpable"] = std::move(culpable);
    Json fulfilled = Json::array();
    for (const ParticipantId& p : report.fulfilled) fulfilled.push_back(p);
    out["fulfilled"] = std::move(fulfilled);
    return out;
}

Json to_json(const SessionLog& log) {
    Json rounds = Json::array();
    for (std::size_t i = 0; i < log.rounds.size(); ++i) {
        const SessionRound& round = log.rounds[i];
        Json r;
        r["round"] = i + 1;
        r["state_before"] = to_json(round.state_before);
        Json notifications = Json::object();
        for (const auto& [p, owed] : round.notifications) notifications[p] = to_json(owed);
        r["notifications"] = std::move(notifications);
        Json actions = Json::array();
        for (const SessionAction& action : round.actions)
            actions.push_back({{"participant", action.participant},
                               {"event", action.event},
                               {"classification", to_string(action.classification)}});
        r["actions"] = std::move(actions);
        rounds.push_back(std::move(r));
    }
    Json out;
    out["rounds"] = std::move(rounds);
    Json verdict;
    verdict["kind"] = to_string(log.verdict);
    Json culpable = Json::array();
    for (const ParticipantId& p : log.culpable) culpable.push_back(p);
    verdict["culpable"] = std::move(culpable);
    out["verdict"] = std::move(verdict);
    out["final_state"] = to_json(log.final_state);
    return out;
}

}  // namespace ces
