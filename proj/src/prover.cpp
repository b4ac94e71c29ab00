#include "ces/prover.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

namespace ces {

const char* to_string(Rule r) {
    switch (r) {
        case Rule::Axiom: return "axiom";
        case Rule::TruthRight: return "truth-right";
        case Rule::ConjRight: return "conj-right";
        case Rule::ConjLeft: return "conj-left";
        case Rule::ImplRight: return "impl-right";
        case Rule::ImplLeft: return "impl-left";
        case Rule::CImplRight: return "cimpl-right";
        case Rule::CImplRight2: return "cimpl-right-2";
        case Rule::CImplLeft: return "cimpl-left";
        case Rule::SaysRight: return "says-right";
        case Rule::SaysLeft: return "says-left";
    }
    return "?";
}

const char* to_string(ProofStatus s) {
    switch (s) {
        case ProofStatus::Proved: return "proved";
        case ProofStatus::Refuted: return "refuted";
        case ProofStatus::BudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

namespace {

using Kind = Formula::Kind;

std::set<Formula> with(std::set<Formula> ctx, const Formula& f) {
    ctx.insert(f);
    return ctx;
}

std::set<Formula> with(std::set<Formula> ctx, const Formula& f, const Formula& g) {
    ctx.insert(f);
    ctx.insert(g);
    return ctx;
}

// Backward search. All rules keep the conclusion's context inside the
// premise contexts, so weakening is built in and a memoized proof stays
// valid anywhere. A failure is also final — and memoizable — unless some
// abandoned branch repeated a sequent lying strictly above this one on the
// path: a repetition at or below it could be snipped out of any candidate
// proof, so exhausting those branches already rules a proof out. Each
// failure therefore carries the shallowest path depth it depended on.
struct Searcher {
    explicit Searcher(std::size_t budget) : budget_(budget) {}

    struct BudgetExceeded {};

    static constexpr int kNoTaint = std::numeric_limits<int>::max();

    struct Attempt {
        std::optional<ProofNode> proof;
        int taint_depth = kNoTaint;  // shallowest on-path sequent this failure relies on
    };

    std::size_t visited() const { return visited_; }

    Attempt search(const Sequent& s) {
        if (auto it = on_path_.find(s); it != on_path_.end()) return {std::nullopt, it->second};
        if (auto it = memo_.find(s); it != memo_.end()) return {it->second, kNoTaint};
        if (++visited_ > budget_) throw BudgetExceeded{};
        const int depth = static_cast<int>(on_path_.size());
        on_path_.emplace(s, depth);
        Attempt out = expand(s);
        on_path_.erase(s);
        if (out.proof || out.taint_depth >= depth) {
            memo_[s] = out.proof;
            out.taint_depth = kNoTaint;
        }
        return out;
    }

private:
    // Proves every premise or reports the first failure.
    Attempt apply(Rule rule, const Sequent& s, std::optional<Formula> principal,
                  std::vector<Sequent> premises) {
        ProofNode node{rule, s, std::move(principal), {}};
        for (const Sequent& p : premises) {
            Attempt sub = search(p);
            if (!sub.proof) return {std::nullopt, sub.taint_depth};
            node.premises.push_back(std::move(*sub.proof));
        }
        return {std::move(node), kNoTaint};
    }

    Attempt expand(const Sequent& s) {
        const std::set<Formula>& ctx = s.context;
        const Formula& goal = s.goal;

        if (goal.kind() == Kind::Truth) return {ProofNode{Rule::TruthRight, s, {}, {}}, kNoTaint};
        if (ctx.count(goal)) return {ProofNode{Rule::Axiom, s, {}, {}}, kNoTaint};

        // Invertible steps first; their failure is the sequent's failure.
        for (const Formula& f : ctx)
            if (f.kind() == Kind::Conj &&
                !(ctx.count(f.left()) && ctx.count(f.right())))
                return apply(Rule::ConjLeft, s, f,
                             {{with(ctx, f.left(), f.right()), goal}});
        if (goal.kind() == Kind::Conj)
            return apply(Rule::ConjRight, s, {},
                         {{ctx, goal.left()}, {ctx, goal.right()}});
        if (goal.kind() == Kind::Impl)
            return apply(Rule::ImplRight, s, {}, {{with(ctx, goal.left()), goal.right()}});
        if (goal.kind() == Kind::Says)
            for (const Formula& f : ctx)
                if (f.kind() == Kind::Says && f.speaker() == goal.speaker() &&
                    !ctx.count(f.body()))
                    return apply(Rule::SaysLeft, s, f, {{with(ctx, f.body()), goal}});

        // Choice points: first success wins, failures accumulate the
        // shallowest depth any of them depended on.
        int taint_depth = kNoTaint;
        auto attempt = [&](Rule rule, std::optional<Formula> principal,
                           std::vector<Sequent> premises) -> std::optional<ProofNode> {
            Attempt a = apply(rule, s, std::move(principal), std::move(premises));
            taint_depth = std::min(taint_depth, a.taint_depth);
            return std::move(a.proof);
        };

        if (goal.kind() == Kind::Says)
            if (auto p = attempt(Rule::SaysRight, {}, {{ctx, goal.body()}})) return {p, kNoTaint};

        if (goal.kind() == Kind::CImpl) {
            if (auto p = attempt(Rule::CImplRight, {}, {{ctx, goal.right()}})) return {p, kNoTaint};
            for (const Formula& f : ctx)
                if (f.kind() == Kind::CImpl)
                    if (auto p = attempt(Rule::CImplRight2, f,
                                         {{with(ctx, goal.left()), f.left()},
                                          {with(ctx, f.right()), goal.right()}}))
                        return {p, kNoTaint};
        }

        for (const Formula& f : ctx)
            if (f.kind() == Kind::Impl && !ctx.count(f.right()))
                if (auto p = attempt(Rule::ImplLeft, f,
                                     {{ctx, f.left()}, {with(ctx, f.right()), goal}}))
                    return {p, kNoTaint};

        for (const Formula& f : ctx)
            if (f.kind() == Kind::CImpl && !ctx.count(f.right()))
                if (auto p = attempt(Rule::CImplLeft, f,
                                     {{with(ctx, goal), f.left()},
                                      {with(ctx, f.right()), goal}}))
                    return {p, kNoTaint};

        return {std::nullopt, taint_depth};
    }

    std::size_t budget_;
    std::size_t visited_ = 0;
    std::map<Sequent, std::optional<ProofNode>> memo_;
    std::map<Sequent, int> on_path_;  // sequent -> its depth on the current branch
};

}  // namespace

ProofResult prove(const std::set<Formula>& context, const Formula& goal, std::size_t budget) {
    Searcher searcher(budget);
    ProofResult out;
    try {
        Searcher::Attempt a = searcher.search(Sequent{context, goal});
        out.visited = searcher.visited();
        if (a.proof) {
            out.status = ProofStatus::Proved;
            out.proof = std::move(a.proof);
        } else {
            bool supported = non_nested_implications(goal);
            for (const Formula& f : context) supported &= non_nested_implications(f);
            if (supported) {
                out.status = ProofStatus::Refuted;
            } else {
                out.status = ProofStatus::BudgetExhausted;
                out.note =
                    "sequent nests implications; saturation without a proof is not a refutation "
                    "outside the non-nested fragment";
            }
        }
    } catch (const Searcher::BudgetExceeded&) {
        out.status = ProofStatus::BudgetExhausted;
        out.visited = searcher.visited();
        out.note = "visited-sequent budget exhausted";
    }
    return out;
}

namespace {

bool premises_match(const ProofNode& node, const std::vector<Sequent>& expected) {
    if (node.premises.size() != expected.size()) return false;
    for (std::size_t i = 0; i < expected.size(); ++i)
        if (!(node.premises[i].sequent == expected[i])) return false;
    for (const ProofNode& premise : node.premises)
        if (!check_proof(premise)) return false;
    return true;
}

}  // namespace

bool check_proof(const ProofNode& node) {
    const std::set<Formula>& ctx = node.sequent.context;
    const Formula& goal = node.sequent.goal;
    const std::optional<Formula>& pr = node.principal;
    switch (node.rule) {
        case Rule::Axiom:
            return node.premises.empty() && ctx.count(goal) > 0;
        case Rule::TruthRight:
            return node.premises.empty() && goal.kind() == Kind::Truth;
        case Rule::ConjRight:
            return goal.kind() == Kind::Conj &&
                   premises_match(node, {{ctx, goal.left()}, {ctx, goal.right()}});
        case Rule::ConjLeft:
            return pr && pr->kind() == Kind::Conj && ctx.count(*pr) &&
                   premises_match(node, {{with(ctx, pr->left(), pr->right()), goal}});
        case Rule::ImplRight:
            return goal.kind() == Kind::Impl &&
                   premises_match(node, {{with(ctx, goal.left()), goal.right()}});
        case Rule::ImplLeft:
            return pr && pr->kind() == Kind::Impl && ctx.count(*pr) &&
                   premises_match(node, {{ctx, pr->left()}, {with(ctx, pr->right()), goal}});
        case Rule::CImplRight:
            return goal.kind() == Kind::CImpl && premises_match(node, {{ctx, goal.right()}});
        case Rule::CImplRight2:
            return goal.kind() == Kind::CImpl && pr && pr->kind() == Kind::CImpl &&
                   ctx.count(*pr) &&
                   premises_match(node, {{with(ctx, goal.left()), pr->left()},
                                         {with(ctx, pr->right()), goal.right()}});
        case Rule::CImplLeft:
            return pr && pr->kind() == Kind::CImpl && ctx.count(*pr) &&
                   premises_match(node, {{with(ctx, goal), pr->left()},
                                         {with(ctx, pr->right()), goal}});
        case Rule::SaysRight:
            return goal.kind() == Kind::Says && premises_match(node, {{ctx, goal.body()}});
        case Rule::SaysLeft:
            return goal.kind() == Kind::Says && pr && pr->kind() == Kind::Says &&
                   pr->speaker() == goal.speaker() && ctx.count(*pr) &&
                   premises_match(node, {{with(ctx, pr->body()), goal}});
    }
    return false;
}

std::string to_string(const Sequent& s) {
    std::string out;
    for (const Formula& f : s.context) {
        if (!out.empty()) out += ", ";
        out += f.to_string();
    }
    out += out.empty() ? "|- " : " |- ";
    out += s.goal.to_string();
    return out;
}

void print_proof(std::ostream& out, const ProofNode& node, int indent) {
    out << std::string(static_cast<std::size_t>(indent) * 2, ' ') << '[' << to_string(node.rule)
        << "] " << to_string(node.sequent) << '\n';
    for (const ProofNode& premise : node.premises) print_proof(out, premise, indent + 1);
}

}  // namespace ces
