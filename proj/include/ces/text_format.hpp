// Line-oriented contract text format: parsing and normalized rendering.
#pragma once

#include <string>

#include "ces/contract.hpp"

namespace ces {

// Accepts one declaration per line:
//   participant <P>
//   event <e> @ <P>
//   enable <e1>,<e2>,... |- <e>     (standard; "-" for an empty premise list)
//   enable <e1>,<e2>,... ||- <e>    (circular)
//   ok <P> : <e1>,<e2>,...          ("-" for the empty goal set)
// '#' starts a comment; blank lines are ignored. Declarations may appear in
// any order. Throws ParseError with 1-based line/column on the first problem.
Contract parse_contract(const std::string& text);

// Deterministic normal form: participants, then events, then enable lines
// (ordered by target), then ok lines, each group sorted, one space between
// tokens. parse_contract(render(c)) == c.
std::string render(const Contract& c);

// "a,b,c" for a set, "-" for the empty set.
std::string render_events(const EventSet& events);

// Inverse of render_events; does not check membership in any contract.
EventSet parse_event_list(const std::string& token);

// parse_event_list plus a membership check against c.events.
State parse_state(const Contract& c, const std::string& token);

}  // namespace ces
