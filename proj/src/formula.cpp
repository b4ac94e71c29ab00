#include "ces/formula.hpp"

#include <cassert>
#include <cctype>

namespace ces {

struct Formula::Node {
    Kind kind;
    std::string label;  // atom name or speaker
    std::shared_ptr<const Node> left, right;
};

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::atom(const std::string& name) {
    return Formula(std::make_shared<Node>(Node{Kind::Atom, name, nullptr, nullptr}));
}

Formula Formula::truth() {
    return Formula(std::make_shared<Node>(Node{Kind::Truth, "", nullptr, nullptr}));
}

Formula Formula::conj(const Formula& l, const Formula& r) {
    return Formula(std::make_shared<Node>(Node{Kind::Conj, "", l.node_, r.node_}));
}

Formula Formula::impl(const Formula& l, const Formula& r) {
    return Formula(std::make_shared<Node>(Node{Kind::Impl, "", l.node_, r.node_}));
}

Formula Formula::cimpl(const Formula& l, const Formula& r) {
    return Formula(std::make_shared<Node>(Node{Kind::CImpl, "", l.node_, r.node_}));
}

Formula Formula::says(const ParticipantId& speaker, const Formula& body) {
    return Formula(std::make_shared<Node>(Node{Kind::Says, speaker, body.node_, nullptr}));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const std::string& Formula::name() const {
    assert(node_->kind == Kind::Atom);
    return node_->label;
}

const ParticipantId& Formula::speaker() const {
    assert(node_->kind == Kind::Says);
    return node_->label;
}

Formula Formula::left() const {
    assert(node_->left);
    return Formula(node_->left);
}

Formula Formula::right() const {
    assert(node_->right);
    return Formula(node_->right);
}

std::strong_ordering Formula::compare(const Node* a, const Node* b) {
    if (a == b) return std::strong_ordering::equal;
    if (!a || !b) return !a ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = a->kind <=> b->kind; c != 0) return c;
    if (auto c = a->label.compare(b->label); c != 0)
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = compare(a->left.get(), b->left.get()); c != 0) return c;
    return compare(a->right.get(), b->right.get());
}

bool Formula::operator==(const Formula& o) const { return (*this <=> o) == 0; }

std::strong_ordering Formula::operator<=>(const Formula& o) const {
    return compare(node_.get(), o.node_.get());
}

namespace {

using Kind = Formula::Kind;

void print(const Formula& f, std::string& out);

// Operands of a binary connective: atoms and T stay bare, anything compound
// gets parentheses — except that the right operand of /\ (resp. -> and -->>)
// absorbs a chain of the same precedence, which prints right-associated
// chains flat.
void print_operand(const Formula& f, std::string& out) {
    if (f.kind() == Kind::Atom || f.kind() == Kind::Truth) {
        print(f, out);
    } else {
        out += '(';
        print(f, out);
        out += ')';
    }
}

void print(const Formula& f, std::string& out) {
    switch (f.kind()) {
        case Kind::Atom: out += f.name(); break;
        case Kind::Truth: out += 'T'; break;
        case Kind::Says:
            out += f.speaker();
            out += " says ";
            print_operand(f.body(), out);
            break;
        case Kind::Conj:
            print_operand(f.left(), out);
            out += " /\\ ";
            if (f.right().kind() == Kind::Conj)
                print(f.right(), out);
            else
                print_operand(f.right(), out);
            break;
        case Kind::Impl:
        case Kind::CImpl:
            print_operand(f.left(), out);
            out += f.kind() == Kind::Impl ? " -> " : " -->> ";
            if (f.right().kind() == Kind::Impl || f.right().kind() == Kind::CImpl)
                print(f.right(), out);
            else
                print_operand(f.right(), out);
            break;
    }
}

}  // namespace

std::string Formula::to_string() const {
    std::string out;
    print(*this, out);
    return out;
}

namespace {

enum class TokKind { LParen, RParen, And, Impl, CImpl, Ident, Says, Truth, End };

struct FTok {
    TokKind kind;
    std::string text;
    int column;  // 1-based
};

std::vector<FTok> lex_formula(const std::string& text) {
    std::vector<FTok> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        int col = static_cast<int>(i) + 1;
        if (ch == '(') {
            out.push_back({TokKind::LParen, "(", col});
            ++i;
        } else if (ch == ')') {
            out.push_back({TokKind::RParen, ")", col});
            ++i;
        } else if (text.compare(i, 2, "/\\") == 0) {
            out.push_back({TokKind::And, "/\\", col});
            i += 2;
        } else if (text.compare(i, 4, "-->>") == 0) {
            out.push_back({TokKind::CImpl, "-->>", col});
            i += 4;
        } else if (text.compare(i, 2, "->") == 0) {
            out.push_back({TokKind::Impl, "->", col});
            i += 2;
        } else if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t start = i;
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                       text[i] == '_'))
                ++i;
            std::string word = text.substr(start, i - start);
            if (word == "says")
                out.push_back({TokKind::Says, word, col});
            else if (word == "T")
                out.push_back({TokKind::Truth, word, col});
            else
                out.push_back({TokKind::Ident, word, col});
        } else {
            throw ParseError(std::string("unexpected character '") + ch + "'", 1, col);
        }
    }
    out.push_back({TokKind::End, "", static_cast<int>(text.size()) + 1});
    return out;
}

class FormulaParser {
public:
    explicit FormulaParser(const std::string& text) : toks_(lex_formula(text)) {}

    Formula run() {
        Formula f = implication();
        expect(TokKind::End, "end of input");
        return f;
    }

private:
    const FTok& peek() const { return toks_[pos_]; }

    FTok take() { return toks_[pos_++]; }

    void expect(TokKind kind, const char* what) {
        if (peek().kind != kind)
            throw ParseError("expected " + std::string(what) + ", found '" + peek().text + "'",
                             1, peek().column);
        ++pos_;
    }

    Formula implication() {
        Formula l = conjunction();
        if (peek().kind == TokKind::Impl) {
            take();
            return Formula::impl(l, implication());
        }
        if (peek().kind == TokKind::CImpl) {
            take();
            return Formula::cimpl(l, implication());
        }
        return l;
    }

    Formula conjunction() {
        Formula l = primary();
        if (peek().kind == TokKind::And) {
            take();
            return Formula::conj(l, conjunction());
        }
        return l;
    }

    Formula primary() {
        const FTok& t = peek();
        switch (t.kind) {
            case TokKind::LParen: {
                take();
                Formula f = implication();
                expect(TokKind::RParen, "')'");
                return f;
            }
            case TokKind::Truth:
                take();
                return Formula::truth();
            case TokKind::Ident: {
                FTok name = take();
                if (peek().kind == TokKind::Says) {
                    take();
                    return Formula::says(name.text, says_body());
                }
                return Formula::atom(name.text);
            }
            default:
                throw ParseError("expected a formula, found '" + t.text + "'", 1, t.column);
        }
    }

    // The body of `says` is a single token or parenthesized; `A says B says b`
    // must be written `A says (B says b)`.
    Formula says_body() {
        const FTok& t = peek();
        if (t.kind == TokKind::Truth) {
            take();
            return Formula::truth();
        }
        if (t.kind == TokKind::Ident) {
            return Formula::atom(take().text);
        }
        if (t.kind == TokKind::LParen) {
            take();
            Formula f = implication();
            expect(TokKind::RParen, "')'");
            return f;
        }
        throw ParseError("expected a says body, found '" + t.text + "'", 1, t.column);
    }

    std::vector<FTok> toks_;
    std::size_t pos_ = 0;
};

bool non_nested(const Formula& f, bool under_implication) {
    switch (f.kind()) {
        case Kind::Atom:
        case Kind::Truth:
            return true;
        case Kind::Says:
            return non_nested(f.body(), under_implication);
        case Kind::Conj:
            return non_nested(f.left(), under_implication) &&
                   non_nested(f.right(), under_implication);
        case Kind::Impl:
        case Kind::CImpl:
            return !under_implication && non_nested(f.left(), true) &&
                   non_nested(f.right(), true);
    }
    return false;
}

}  // namespace

Formula parse_formula(const std::string& text) { return FormulaParser(text).run(); }

bool non_nested_implications(const Formula& f) { return non_nested(f, false); }

}  // namespace ces
