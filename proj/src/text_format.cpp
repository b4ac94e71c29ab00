#include "ces/text_format.hpp"

#include <cctype>
#include <sstream>

namespace ces {

namespace {

bool valid_token(const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
    return true;
}

struct Token {
    std::string text;
    int column = 0;  // 1-based
};

struct Line {
    int number = 0;  // 1-based
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        Line line{number, {}};
        std::size_t end = raw.find('#');
        if (end == std::string::npos) end = raw.size();
        std::size_t i = 0;
        while (i < end) {
            if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < end && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            line.tokens.push_back({raw.substr(start, i - start), static_cast<int>(start) + 1});
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

[[noreturn]] void fail(const std::string& message, const Line& line, int column) {
    throw ParseError(message, line.number, column);
}

void check_shape(const Line& line, std::size_t count, const char* shape) {
    if (line.tokens.size() != count) {
        int col = line.tokens.size() > count ? line.tokens[count].column
                                             : line.tokens.back().column +
                                                   static_cast<int>(line.tokens.back().text.size());
        fail(std::string("expected '") + shape + "'", line, col);
    }
}

std::string checked_name(const Line& line, std::size_t index, const char* what) {
    const Token& t = line.tokens[index];
    if (!valid_token(t.text))
        fail("invalid " + std::string(what) + " '" + t.text + "'", line, t.column);
    return t.text;
}

void check_literal(const Line& line, std::size_t index, const char* expected) {
    const Token& t = line.tokens[index];
    if (t.text != expected)
        fail(std::string("expected '") + expected + "', found '" + t.text + "'", line, t.column);
}

// Splits "a,b,c" (or "-") at `token`, reporting errors at precise columns.
EventSet event_list(const Line& line, std::size_t index, const char* what) {
    const Token& t = line.tokens[index];
    if (t.text == "-") return {};
    EventSet out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = t.text.find(',', start);
        std::string piece = t.text.substr(start, comma - start);
        int col = t.column + static_cast<int>(start);
        if (!valid_token(piece))
            fail("invalid " + std::string(what) + " '" + piece + "'", line, col);
        out.insert(piece);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

Contract parse_contract(const std::string& text) {
    std::vector<Line> lines = tokenize(text);
    Contract c;

    for (const Line& line : lines)
        if (line.tokens[0].text == "participant") {
            check_shape(line, 2, "participant <P>");
            c.participants.insert(checked_name(line, 1, "participant name"));
        }

    for (const Line& line : lines)
        if (line.tokens[0].text == "event") {
            check_shape(line, 4, "event <e> @ <P>");
            std::string name = checked_name(line, 1, "event name");
            check_literal(line, 2, "@");
            std::string owner = checked_name(line, 3, "participant name");
            auto it = c.owner.find(name);
            if (it != c.owner.end()) {
                if (it->second != owner)
                    fail("event '" + name + "' already owned by '" + it->second + "'", line,
                         line.tokens[3].column);
                fail("duplicate declaration of event '" + name + "'", line,
                     line.tokens[1].column);
            }
            if (!c.participants.count(owner))
                fail("undeclared participant '" + owner + "'", line, line.tokens[3].column);
            c.events.insert(name);
            c.owner[name] = owner;
        }

    auto known_events = [&](const Line& line, std::size_t index, const EventSet& events) {
        for (const EventId& e : events)
            if (!c.events.count(e))
                fail("undeclared event '" + e + "'", line, line.tokens[index].column);
    };

    for (const Line& line : lines) {
        const std::string& kw = line.tokens[0].text;
        if (kw == "participant" || kw == "event") continue;
        if (kw == "enable") {
            check_shape(line, 4, "enable <premises> |- <e>");
            EventSet premises = event_list(line, 1, "event name");
            known_events(line, 1, premises);
            const Token& op = line.tokens[2];
            EnablingKind kind;
            if (op.text == "|-")
                kind = EnablingKind::Standard;
            else if (op.text == "||-")
                kind = EnablingKind::Circular;
            else
                fail("expected '|-' or '||-', found '" + op.text + "'", line, op.column);
            std::string target = checked_name(line, 3, "event name");
            if (!c.events.count(target))
                fail("undeclared event '" + target + "'", line, line.tokens[3].column);
            c.clauses.insert({std::move(premises), std::move(target), kind});
        } else if (kw == "ok") {
            check_shape(line, 4, "ok <P> : <goal>");
            std::string participant = checked_name(line, 1, "participant name");
            if (!c.participants.count(participant))
                fail("undeclared participant '" + participant + "'", line,
                     line.tokens[1].column);
            check_literal(line, 2, ":");
            EventSet goal = event_list(line, 3, "event name");
            known_events(line, 3, goal);
            c.goals.insert({std::move(participant), std::move(goal)});
        } else {
            fail("expected 'participant', 'event', 'enable' or 'ok', found '" + kw + "'", line,
                 line.tokens[0].column);
        }
    }
    return c;
}

std::string render_events(const EventSet& events) {
    if (events.empty()) return "-";
    std::string out;
    for (const EventId& e : events) {
        if (!out.empty()) out += ',';
        out += e;
    }
    return out;
}

EventSet parse_event_list(const std::string& token) {
    if (token.empty() || token == "-") return {};
    EventSet out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = token.find(',', start);
        std::string piece = token.substr(start, comma - start);
        if (!valid_token(piece)) throw ContractError("invalid event name '" + piece + "'");
        out.insert(piece);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

State parse_state(const Contract& c, const std::string& token) {
    State out = parse_event_list(token);
    for (const EventId& e : out)
        if (!c.events.count(e)) throw ContractError("unknown event '" + e + "'");
    return out;
}

std::string render(const Contract& c) {
    std::string out;
    for (const ParticipantId& p : c.participants) out += "participant " + p + "\n";
    for (const EventId& e : c.events) out += "event " + e + " @ " + c.owner.at(e) + "\n";
    for (const Clause& cl : c.clauses)
        out += "enable " + render_events(cl.premises) +
               (cl.kind == EnablingKind::Standard ? " |- " : " ||- ") + cl.target + "\n";
    for (const GoalSet& g : c.goals)
        out += "ok " + g.participant + " : " + render_events(g.goal) + "\n";
    return out;
}

}  // namespace ces
