// Shared example contracts. `toys` is the three-party exchange used as the
// running example throughout the tests: A gives a once B gave b, B gives b
// once C gave c, and C promises c against a and b on credit.
#pragma once

#include <string>

#include "ces/contract.hpp"
#include "ces/text_format.hpp"

namespace ces::testing {

inline constexpr const char* kToysText = R"(participant A
participant B
participant C
event a @ A
event b @ B
event c @ C
enable b |- a
enable c |- b
enable a,b ||- c
ok A : b
ok B : c
ok C : a,b
)";

// Same exchange but C only offers a standard enabling, so nothing can start.
inline constexpr const char* kToysStrictText = R"(participant A
participant B
participant C
event a @ A
event b @ B
event c @ C
enable b |- a
enable c |- b
enable a,b |- c
ok A : b
ok B : c
ok C : a,b
)";

// Mutual circular promises: each event is enabled on credit by the other.
inline constexpr const char* kHandshakeText = R"(participant A
participant B
event a @ A
event b @ B
enable b ||- a
enable a ||- b
ok A : b
ok B : a
)";

// Four-party ring: a0 is freely enabled, a1 and a2 enable each other on
// credit given a0, and a3 follows a1,a2 by a standard enabling.
inline constexpr const char* kDiamondText = R"(participant A0
participant A1
participant A2
participant A3
event a0 @ A0
event a1 @ A1
event a2 @ A2
event a3 @ A3
enable - |- a0
enable a0,a2 ||- a1
enable a0,a1 ||- a2
enable a1,a2 |- a3
ok A0 : a0,a1,a2,a3
ok A1 : a0,a1,a2,a3
ok A2 : a0,a1,a2,a3
ok A3 : a0,a1,a2,a3
)";

// The toys exchange split into one contract per participant; composing the
// three yields kToysText exactly.
inline constexpr const char* kToysPartAText = R"(participant A
participant B
participant C
event a @ A
event b @ B
enable b |- a
ok A : b
)";

inline constexpr const char* kToysPartBText = R"(participant A
participant B
participant C
event b @ B
event c @ C
enable c |- b
ok B : c
)";

inline constexpr const char* kToysPartCText = R"(participant A
participant B
participant C
event a @ A
event b @ B
event c @ C
enable a,b ||- c
ok C : a,b
)";

// Declares event a under a different owner than kToysText does.
inline constexpr const char* kClashText = R"(participant B
event a @ B
ok B : -
)";

inline Contract load(const char* text) { return parse_contract(text); }

inline Contract toys() { return load(kToysText); }
inline Contract toys_strict() { return load(kToysStrictText); }
inline Contract handshake() { return load(kHandshakeText); }
inline Contract diamond() { return load(kDiamondText); }

}  // namespace ces::testing
