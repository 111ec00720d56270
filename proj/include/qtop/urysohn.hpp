#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtop/dyadic.hpp"
#include "qtop/errors.hpp"

namespace qtop {

/// Abstract universe the function synthesis runs over: opaque set handles
/// with closure/interior, entourage handles with composition, and balls
/// connecting the two. The finite bit-set engine and the symbolic interval
/// engine both satisfy this.
template <typename M>
concept SetModel = requires(const M m, const typename M::Set& s, const typename M::Set& t,
                            const typename M::Entourage& u, const typename M::Entourage& v,
                            const typename M::Point& p) {
    { m.ball(s, u) } -> std::convertible_to<typename M::Set>;
    { m.closure(s) } -> std::convertible_to<typename M::Set>;
    { m.interior(s) } -> std::convertible_to<typename M::Set>;
    { m.unite(s, t) } -> std::convertible_to<typename M::Set>;
    { m.difference(s, t) } -> std::convertible_to<typename M::Set>;
    { m.isSubset(s, t) } -> std::convertible_to<bool>;
    { m.isEmpty(s) } -> std::convertible_to<bool>;
    { m.contains(s, p) } -> std::convertible_to<bool>;
    { m.isOpen(s) } -> std::convertible_to<bool>;
    { m.universe() } -> std::convertible_to<typename M::Set>;
    { m.compose(u, v) } -> std::convertible_to<typename M::Entourage>;
    { m.entourageSubset(u, v) } -> std::convertible_to<bool>;
    { m.entourageNormal(u) } -> std::convertible_to<bool>;
    { m.describe(s) } -> std::convertible_to<std::string>;
};

/// Models that can enumerate their points admit the exact tabulated checks.
template <typename M>
concept PointEnumerableModel = SetModel<M> && requires(const M m) {
    { m.points() } -> std::convertible_to<std::vector<typename M::Point>>;
};

/// Top entourage plus the halving sequence U_1..U_k. Construction eagerly
/// checks the composition certificates U_1 U_1 inside the top and
/// U_n U_n inside U_{n-1}; a chain that fails them never exists as a value.
template <SetModel M>
class EntourageChain {
  public:
    EntourageChain(const M& model, typename M::Entourage top,
                   std::vector<typename M::Entourage> levels)
        : top_(std::move(top)), levels_(std::move(levels)) {
        if (levels_.empty()) throw InvalidChainError("chain needs depth at least 1");
        if (!model.entourageSubset(model.compose(levels_[0], levels_[0]), top_))
            throw InvalidChainError("U₁ composed with itself escapes the top entourage");
        for (std::size_t i = 1; i < levels_.size(); ++i)
            if (!model.entourageSubset(model.compose(levels_[i], levels_[i]), levels_[i - 1]))
                throw InvalidChainError("U_" + std::to_string(i + 1) +
                                        " composed with itself escapes U_" + std::to_string(i));
    }

    const typename M::Entourage& top() const { return top_; }
    const std::vector<typename M::Entourage>& levels() const { return levels_; }
    int depth() const { return static_cast<int>(levels_.size()); }

  private:
    typename M::Entourage top_;
    std::vector<typename M::Entourage> levels_;
};

/// Left-to-right composition of the chain entourages selected by the binary
/// expansion of q; skipped digits contribute the identity.
template <SetModel M>
typename M::Entourage entouragePower(const M& model, const EntourageChain<M>& chain,
                                     const Dyadic& q) {
    std::vector<int> bits = binaryExpansion(q);
    if (static_cast<int>(bits.size()) > chain.depth())
        throw DomainError("binary expansion of " + q.toString() +
                          " is deeper than the chain");
    std::optional<typename M::Entourage> acc;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (!bits[i]) continue;
        const auto& factor = chain.levels()[i];
        acc = acc ? model.compose(*acc, factor) : factor;
    }
    // q in (0,1) always has at least one digit set.
    return *acc;
}

/// The synthesized [0,1]-valued function: the least dyadic level at which the
/// closed chain-neighborhood of the source set captures a point. Lazy by
/// design; evaluation is the interface.
template <SetModel M>
class UrysohnFunction {
  public:
    UrysohnFunction(M model, EntourageChain<M> chain, typename M::Set source)
        : model_(std::move(model)), chain_(std::move(chain)), source_(std::move(source)) {
        if (model_.isEmpty(source_)) throw DomainError("source set must be nonempty");
    }

    const M& model() const { return model_; }
    const EntourageChain<M>& chain() const { return chain_; }
    const typename M::Set& source() const { return source_; }
    int depth() const { return chain_.depth(); }

    /// Closed chain-neighborhood at level q: closure(ball(source, U^q)).
    typename M::Set closedNeighborhood(const Dyadic& q) const {
        return model_.closure(model_.ball(source_, entouragePower(model_, chain_, q)));
    }

    bool memberAt(const typename M::Point& z, const Dyadic& q) const {
        return model_.contains(closedNeighborhood(q), z);
    }

    /// Infimum of the dyadic levels capturing z, restricted to level <= depth;
    /// points of the closure of the source evaluate to exactly 0 (level-zero
    /// power is the identity entourage), points never captured to 1. The
    /// binary search relies on membership being monotone in q, which holds
    /// whenever the chain comes from a normal quasi-uniformity and is itself
    /// a verified invariant.
    Dyadic evaluate(const typename M::Point& z) const {
        if (model_.contains(model_.closure(source_), z)) return Dyadic::zero();
        const int k = depth();
        const std::int64_t top = (std::int64_t{1} << k) - 1;
        if (!memberAt(z, Dyadic::of(top, k))) return Dyadic::one();
        std::int64_t lo = 1, hi = top;
        while (lo < hi) {
            std::int64_t mid = lo + (hi - lo) / 2;
            if (memberAt(z, Dyadic::of(mid, k)))
                hi = mid;
            else
                lo = mid + 1;
        }
        return Dyadic::of(lo, k);
    }

    /// Least capturing level by linear scan; oracle for the binary search.
    Dyadic evaluateLinear(const typename M::Point& z) const {
        if (model_.contains(model_.closure(source_), z)) return Dyadic::zero();
        const int k = depth();
        for (std::int64_t i = 1; i < (std::int64_t{1} << k); ++i)
            if (memberAt(z, Dyadic::of(i, k))) return Dyadic::of(i, k);
        return Dyadic::one();
    }

  private:
    M model_;
    EntourageChain<M> chain_;
    typename M::Set source_;
};

enum class TheoremVerdict { Pass, HypothesisViolated, TheoremViolation };

inline const char* toString(TheoremVerdict v) {
    switch (v) {
        case TheoremVerdict::Pass: return "pass";
        case TheoremVerdict::HypothesisViolated: return "hypothesis violated";
        case TheoremVerdict::TheoremViolation: return "THEOREM VIOLATION";
    }
    return "?";
}

struct CheckResult {
    bool pass = true;
    std::string detail;
};

/// Outcome of the four function-synthesis checks against one model/chain/set.
struct TheoremReport {
    bool hypothesisHolds = true;
    std::string hypothesisDetail;
    CheckResult zeroSet;     // (a) source inside the zero set
    CheckResult range;       // (b) sub-1 level set inside int cl ball(source, top)
    CheckResult monotone;    // (c) closed neighborhoods nest into interiors
    CheckResult continuity;  // (d) level sets match the set formulas and are open

    bool allChecksPass() const {
        return zeroSet.pass && range.pass && monotone.pass && continuity.pass;
    }
    TheoremVerdict verdict() const {
        if (hypothesisHolds) return allChecksPass() ? TheoremVerdict::Pass
                                                    : TheoremVerdict::TheoremViolation;
        return TheoremVerdict::HypothesisViolated;
    }
    std::string summary() const {
        auto line = [](const char* name, const CheckResult& c) {
            return std::string(name) + ": " + (c.pass ? "ok" : "FAIL") +
                   (c.detail.empty() ? "" : " (" + c.detail + ")") + "\n";
        };
        std::string out;
        out += std::string("hypothesis: ") + (hypothesisHolds ? "holds" : "violated") +
               (hypothesisDetail.empty() ? "" : " (" + hypothesisDetail + ")") + "\n";
        out += line("zero set", zeroSet);
        out += line("range", range);
        out += line("monotone", monotone);
        out += line("continuity", continuity);
        out += std::string("verdict: ") + toString(verdict()) + "\n";
        return out;
    }
};

/// Runs the four checks of the function synthesis over one model. All set
/// computations are exact within the model; point-enumerable models
/// additionally tabulate the function and compare it against the set
/// formulas. The normality hypothesis on the chain is evaluated first but
/// all checks run regardless, so a violated hypothesis still reports which
/// concrete inclusion broke.
template <SetModel M>
TheoremReport verifyTheoremMain(const M& model, const EntourageChain<M>& chain,
                                const typename M::Set& source) {
    using Set = typename M::Set;
    TheoremReport rep;
    UrysohnFunction<M> f(model, chain, source);
    const int k = chain.depth();
    const std::vector<Dyadic> grid = dyadicsUpToLevel(k);

    // Hypothesis: each chain entourage behaves normally over the model.
    if (!model.entourageNormal(chain.top())) {
        rep.hypothesisHolds = false;
        rep.hypothesisDetail = "top entourage not normal over the model";
    }
    for (int i = 0; i < k && rep.hypothesisHolds; ++i)
        if (!model.entourageNormal(chain.levels()[i])) {
            rep.hypothesisHolds = false;
            rep.hypothesisDetail = "chain entourage U_" + std::to_string(i + 1) +
                                   " not normal over the model";
        }

    const Set closureOfSource = model.closure(source);
    std::vector<Set> closedNbhd;  // index i-1 holds level i/2^k
    closedNbhd.reserve(grid.size());
    for (const Dyadic& q : grid) closedNbhd.push_back(f.closedNeighborhood(q));

    // (a) The zero set of the function is exactly the closure of the source.
    if (!model.isSubset(source, closureOfSource)) {
        rep.zeroSet.pass = false;
        rep.zeroSet.detail = "source escapes its own closure";
    }
    if constexpr (PointEnumerableModel<M>) {
        for (const auto& p : model.points())
            if (rep.zeroSet.pass && model.contains(source, p) && !f.evaluate(p).isZero()) {
                rep.zeroSet.pass = false;
                rep.zeroSet.detail = "source point evaluates above 0";
            }
    }

    // (b) Everything below value 1 stays inside int cl ball(source, top).
    Set subOne = closureOfSource;
    for (const Set& s : closedNbhd) subOne = model.unite(subOne, s);
    Set rangeTarget = model.interior(model.closure(model.ball(source, chain.top())));
    if (!model.isSubset(subOne, rangeTarget)) {
        rep.range.pass = false;
        rep.range.detail = "sub-1 level set " + model.describe(subOne) + " escapes " +
                           model.describe(rangeTarget);
    }

    // (c) Monotone nesting, including the zero step from the closure of the
    // source itself. First failing pair is reported.
    for (std::size_t j = 0; j < closedNbhd.size() && rep.monotone.pass; ++j) {
        Set innerTarget = model.interior(closedNbhd[j]);
        if (!model.isSubset(closureOfSource, innerTarget)) {
            rep.monotone.pass = false;
            rep.monotone.detail = "cl(source) = " + model.describe(closureOfSource) +
                                  " escapes int " + model.describe(closedNbhd[j]) + " at level " +
                                  grid[j].toString();
            break;
        }
        for (std::size_t i = 0; i < j; ++i)
            if (!model.isSubset(closedNbhd[i], innerTarget)) {
                rep.monotone.pass = false;
                rep.monotone.detail = "closed neighborhood at " + grid[i].toString() + " = " +
                                      model.describe(closedNbhd[i]) + " escapes int of the one at " +
                                      grid[j].toString() + " = " + model.describe(closedNbhd[j]);
                break;
            }
    }

    // (d) Level sets. The strict-below and strict-above sets of the function
    // must match the set formulas exactly on point-enumerable models, and
    // the open forms must be genuinely open in every model. The open lower
    // form is a union of interiors and the upper form a complement of a
    // closed union, so for the interval engine this exercises idempotence of
    // the symbolic closure and interior.
    [[maybe_unused]] std::vector<Dyadic> table;
    if constexpr (PointEnumerableModel<M>) {
        for (const auto& p : model.points()) {
            Dyadic v = f.evaluate(p);
            if (rep.continuity.pass && v != f.evaluateLinear(p)) {
                rep.continuity.pass = false;
                rep.continuity.detail = "binary search disagrees with linear scan";
            }
            table.push_back(v);
        }
    }
    for (std::size_t j = 0; j < grid.size() && rep.continuity.pass; ++j) {
        Set strictBelow = closureOfSource;  // levels strictly under grid[j]
        Set openLower = model.interior(closureOfSource);
        for (std::size_t i = 0; i < j; ++i) {
            strictBelow = model.unite(strictBelow, closedNbhd[i]);
            openLower = model.unite(openLower, model.interior(closedNbhd[i]));
        }
        Set capturedAt = model.unite(closureOfSource, closedNbhd[j]);
        Set strictAbove = model.difference(model.universe(), capturedAt);
        if (!model.isOpen(openLower)) {
            rep.continuity.pass = false;
            rep.continuity.detail = "open lower form at " + grid[j].toString() +
                                    " is not open: " + model.describe(openLower);
            break;
        }
        if (!model.isOpen(strictAbove)) {
            rep.continuity.pass = false;
            rep.continuity.detail = "upper level set at " + grid[j].toString() +
                                    " is not open: " + model.describe(strictAbove);
            break;
        }
        if constexpr (PointEnumerableModel<M>) {
            const auto pts = model.points();
            for (std::size_t pi = 0; pi < pts.size(); ++pi) {
                bool below = table[pi] < grid[j];
                bool above = grid[j] < table[pi];
                if (below != model.contains(strictBelow, pts[pi]) ||
                    above != model.contains(strictAbove, pts[pi])) {
                    rep.continuity.pass = false;
                    rep.continuity.detail =
                        "tabulated level sets disagree with the set formulas at " +
                        grid[j].toString();
                    break;
                }
            }
        }
    }

    return rep;
}

}  // namespace qtop
