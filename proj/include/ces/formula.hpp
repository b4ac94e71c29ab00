// Propositional contract-logic formulae: atoms, truth, conjunction, standard
// and contractual implication, and a participant-indexed "says" modality.
#pragma once

#include <compare>
#include <memory>
#include <string>

#include "ces/contract.hpp"

namespace ces {

// Immutable value type; copies share structure and are cheap.
class Formula {
public:
    enum class Kind { Atom, Truth, Conj, Impl, CImpl, Says };

    static Formula atom(const std::string& name);
    static Formula truth();
    static Formula conj(const Formula& l, const Formula& r);
    static Formula impl(const Formula& l, const Formula& r);
    static Formula cimpl(const Formula& l, const Formula& r);  // contractual ("on credit")
    static Formula says(const ParticipantId& speaker, const Formula& body);

    Kind kind() const;
    const std::string& name() const;           // Atom
    const ParticipantId& speaker() const;      // Says
    Formula left() const;                      // Conj/Impl/CImpl left, Says body
    Formula right() const;                     // Conj/Impl/CImpl right
    Formula body() const { return left(); }    // Says

    // Linear syntax: `T`, `a`, `x /\ y`, `x -> y`, `x -->> y`, `P says (x)`.
    // Compound operands are parenthesized; /\, -> and -->> associate right.
    std::string to_string() const;

    bool operator==(const Formula& o) const;
    std::strong_ordering operator<=>(const Formula& o) const;

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node);
    static std::strong_ordering compare(const Node* a, const Node* b);
    std::shared_ptr<const Node> node_;
};

// Parses the linear syntax printed by Formula::to_string. `says` and `T` are
// reserved words; atom and speaker tokens are made of letters, digits and
// underscores. Throws ParseError (line 1, 1-based column).
Formula parse_formula(const std::string& text);

// True when no implication of either kind occurs beneath another one. The
// prover only claims authoritative refutations on sequents built from such
// formulae; see prover.hpp.
bool non_nested_implications(const Formula& f);

}  // namespace ces
