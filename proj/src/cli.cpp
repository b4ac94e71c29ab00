#include "ces/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ces/json_io.hpp"
#include "ces/pcl.hpp"
#include "ces/session.hpp"
#include "ces/text_format.hpp"

namespace ces {

namespace {

constexpr int kYes = 0;      // affirmative decision
constexpr int kNo = 1;       // negative decision
constexpr int kTrouble = 2;  // usage or input error

Contract load_contract(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ContractError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_contract(buffer.str());
    } catch (const ParseError& e) {
        throw ContractError(path + ": " + e.what());
    }
}

void emit(const Json& document) { std::cout << document.dump(2) << '\n'; }

int run_check(const std::string& path, const std::string& state_arg, bool json) {
    Contract c = load_contract(path);
    State state = parse_state(c, state_arg);
    auto witness = is_configuration(c, state);
    if (json) {
        Json out;
        out["configuration"] = witness.has_value();
        out["witness"] = witness ? to_json(*witness) : Json(nullptr);
        emit(out);
    } else if (witness) {
        std::cout << "configuration\n";
        std::cout << "witness:\n";
        for (const WitnessStep& step : *witness)
            std::cout << "  " << step.event << ' ' << to_string(step.justification) << '\n';
    } else {
        std::cout << "not a configuration\n";
    }
    return witness ? kYes : kNo;
}

int run_reach(const std::string& path, bool json) {
    Contract c = load_contract(path);
    EventSet reachable = reachable_events(c);
    if (json) {
        Json out;
        out["reachable"] = to_json(reachable);
        emit(out);
    } else {
        for (const EventId& e : reachable) std::cout << e << '\n';
    }
    return kYes;
}

int run_agree(const std::string& path, bool json) {
    Contract c = load_contract(path);
    AgreementResult result = find_agreement(c);
    if (json) {
        emit(to_json(result));
    } else if (result.agreed) {
        std::cout << "agreement\n";
        std::cout << "configuration: " << render_events(*result.configuration) << '\n';
        for (const auto& [p, goal] : result.goal_witness)
            std::cout << p << ": " << render_events(*goal) << '\n';
    } else {
        std::cout << "no agreement\n";
        std::set<ParticipantId> unsatisfiable;
        for (const auto& [p, goal] : result.goal_witness)
            if (!goal) unsatisfiable.insert(p);
        std::cout << "unsatisfiable: ";
        bool first = true;
        for (const ParticipantId& p : unsatisfiable) {
            if (!first) std::cout << ',';
            std::cout << p;
            first = false;
        }
        if (unsatisfiable.empty()) std::cout << '-';
        std::cout << '\n';
    }
    return result.agreed ? kYes : kNo;
}

int run_duties(const std::string& path, const std::string& state_arg,
               const std::string& participant, bool json) {
    Contract c = load_contract(path);
    State state = parse_state(c, state_arg);
    if (!participant.empty()) {
        EventSet owed = duties(c, participant, state);
        if (json) {
            Json out;
            out["state"] = to_json(state);
            out["participant"] = participant;
            out["duties"] = to_json(owed);
            emit(out);
        } else {
            for (const EventId& e : owed) std::cout << e << '\n';
        }
        return kYes;
    }
    DutyReport report = duty_report(c, state);
    if (json) {
        emit(to_json(report));
    } else {
        std::cout << "state: " << render_events(report.state) << '\n';
        for (const auto& [p, owed] : report.duties)
            std::cout << "duties " << p << ": " << render_events(owed) << '\n';
        std::string culpable;
        for (const ParticipantId& p : report.culpable)
            culpable += (culpable.empty() ? "" : ",") + p;
        std::string fulfilled;
        for (const ParticipantId& p : report.fulfilled)
            fulfilled += (fulfilled.empty() ? "" : ",") + p;
        std::cout << "culpable: " << (culpable.empty() ? "-" : culpable) << '\n';
        std::cout << "fulfilled: " << (fulfilled.empty() ? "-" : fulfilled) << '\n';
    }
    return kYes;
}

int run_theorem3(const std::string& path) {
    Contract c = load_contract(path);
    auto counterexample = check_theorem3(c);
    if (counterexample) {
        std::cout << "counterexample: " << render_events(*counterexample) << '\n';
        return kNo;
    }
    std::cout << "ok\n";
    return kYes;
}

int run_encode(const std::string& path) {
    Contract c = load_contract(path);
    std::cout << encode(c).to_string() << '\n';
    return kYes;
}

int run_prove(const std::string& path, const std::string& goal_event,
              const std::string& hyp_arg, const std::string& formula_arg,
              const std::vector<std::string>& assumptions, std::size_t budget,
              bool print_tree) {
    std::set<Formula> context;
    std::optional<Formula> goal;
    if (!formula_arg.empty()) {
        goal = parse_formula(formula_arg);
        for (const std::string& text : assumptions) context.insert(parse_formula(text));
    } else {
        if (path.empty() || goal_event.empty())
            throw ContractError("prove needs either --formula or a contract file with --goal");
        Contract c = load_contract(path);
        if (!c.events.count(goal_event)) throw ContractError("unknown event '" + goal_event + "'");
        context.insert(encode(c));
        for (const EventId& d : parse_state(c, hyp_arg))
            context.insert(Formula::says(owner_of(c, d), Formula::atom(d)));
        goal = Formula::says(owner_of(c, goal_event), Formula::atom(goal_event));
    }
    ProofResult result = prove(context, *goal, budget);
    std::cout << to_string(result.status) << " (visited " << result.visited << ")\n";
    if (!result.note.empty()) std::cout << "note: " << result.note << '\n';
    if (print_tree && result.proof) print_proof(std::cout, *result.proof);
    return result.status == ProofStatus::Proved ? kYes : kNo;
}

int run_session(const std::vector<std::string>& paths,
                const std::vector<std::string>& strategy_args, int max_rounds, bool json) {
    std::vector<Contract> contracts;
    for (const std::string& path : paths) contracts.push_back(load_contract(path));
    std::map<ParticipantId, Strategy> strategies;
    for (const std::string& arg : strategy_args) {
        std::size_t eq = arg.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ContractError("expected --strategy <participant>=<strategy>, got '" + arg + "'");
        strategies[arg.substr(0, eq)] = parse_strategy(arg.substr(eq + 1));
    }
    SessionLog log = run_session(contracts, strategies, max_rounds);
    if (json) {
        emit(to_json(log));
    } else {
        for (std::size_t i = 0; i < log.rounds.size(); ++i) {
            const SessionRound& round = log.rounds[i];
            std::cout << "round " << i + 1 << '\n';
            std::cout << "  state: " << render_events(round.state_before) << '\n';
            for (const auto& [p, owed] : round.notifications)
                std::cout << "  notify " << p << ": " << render_events(owed) << '\n';
            for (const SessionAction& action : round.actions)
                std::cout << "  " << action.participant << " performs " << action.event << " ("
                          << to_string(action.classification) << ")\n";
        }
        std::cout << "verdict: " << to_string(log.verdict) << '\n';
        if (log.verdict == Verdict::Stalled) {
            std::string culpable;
            for (const ParticipantId& p : log.culpable)
                culpable += (culpable.empty() ? "" : ",") + p;
            std::cout << "culpable: " << (culpable.empty() ? "-" : culpable) << '\n';
        }
        std::cout << "final state: " << render_events(log.final_state) << '\n';
    }
    return log.verdict == Verdict::AllFulfilled ? kYes : kNo;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"contract event structures: configurations, agreements, duties, proofs, sessions"};
    app.require_subcommand(1);

    std::string file;
    std::string state_arg = "-";
    std::string participant;
    std::string goal_event;
    std::string formula_arg;
    std::vector<std::string> assumptions;
    std::vector<std::string> paths;
    std::vector<std::string> strategy_args;
    std::size_t budget = kDefaultProofBudget;
    int max_rounds = 100;
    bool json = false;
    bool print_tree = false;

    CLI::App* check = app.add_subcommand("check", "decide whether a state is a configuration");
    check->add_option("file", file, "contract file")->required();
    check->add_option("--state", state_arg, "comma-separated events, '-' for none");
    check->add_flag("--json", json, "structured output");

    CLI::App* reach = app.add_subcommand("reach", "list the reachable events");
    reach->add_option("file", file, "contract file")->required();
    reach->add_flag("--json", json, "structured output");

    CLI::App* agree = app.add_subcommand("agree", "look for an agreement");
    agree->add_option("file", file, "contract file")->required();
    agree->add_flag("--json", json, "structured output");

    CLI::App* duties_cmd = app.add_subcommand("duties", "report duties in a state");
    duties_cmd->add_option("file", file, "contract file")->required();
    duties_cmd->add_option("--state", state_arg, "comma-separated events, '-' for none");
    duties_cmd->add_option("--participant", participant, "restrict to one participant");
    duties_cmd->add_flag("--json", json, "structured output");

    CLI::App* theorem3 = app.add_subcommand(
        "theorem3", "scan all states for one unfulfilled for someone yet culpable-free");
    theorem3->add_option("file", file, "contract file")->required();

    CLI::App* encode_cmd = app.add_subcommand("encode", "print the logic encoding");
    encode_cmd->add_option("file", file, "contract file")->required();

    CLI::App* prove_cmd = app.add_subcommand("prove", "run proof search");
    prove_cmd->add_option("file", file, "contract file");
    prove_cmd->add_option("--goal", goal_event, "event: prove owner says event");
    prove_cmd->add_option("--hyp", state_arg, "events granted as hypotheses");
    prove_cmd->add_option("--formula", formula_arg, "prove a formula instead of an event");
    prove_cmd->add_option("--assume", assumptions, "context formula (repeatable)");
    prove_cmd->add_option("--budget", budget, "visited-sequent budget");
    prove_cmd->add_flag("--print-proof", print_tree, "print the proof tree");

    CLI::App* session = app.add_subcommand("session", "compose contracts and run rounds");
    session->add_option("files", paths, "contract files")->required();
    session->add_option("--strategy", strategy_args,
                        "<participant>=honest|lazy|dishonest-after:<K> (repeatable)");
    session->add_option("--max-rounds", max_rounds, "round cutoff");
    session->add_flag("--json", json, "structured output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kTrouble;
    }

    try {
        if (check->parsed()) return run_check(file, state_arg, json);
        if (reach->parsed()) return run_reach(file, json);
        if (agree->parsed()) return run_agree(file, json);
        if (duties_cmd->parsed()) return run_duties(file, state_arg, participant, json);
        if (theorem3->parsed()) return run_theorem3(file);
        if (encode_cmd->parsed()) return run_encode(file);
        if (prove_cmd->parsed())
            return run_prove(file, goal_event, state_arg == "-" ? "" : state_arg, formula_arg,
                             assumptions, budget, print_tree);
        if (session->parsed()) return run_session(paths, strategy_args, max_rounds, json);
    } catch (const ContractError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kTrouble;
    }
    return kTrouble;
}

}  // namespace ces
