#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qtop/interval_set.hpp"
#include "qtop/urysohn.hpp"

namespace qtop {

/// Closure in the lower-limit (Sorgenfrey) topology: a point is captured only
/// by approach from the right, so per interval the finite open lower end
/// closes and nothing else changes. [a,b) stays put, i.e. is clopen.
inline IntervalSet sorgenfreyClosure(const IntervalSet& a) {
    std::vector<Interval> out;
    for (const Interval& iv : a.parts())
        out.push_back(Interval::make(iv.lo(), iv.lo().has_value(), iv.hi(), iv.hiClosed()));
    return IntervalSet(std::move(out));
}

/// Interior in the lower-limit topology: a closed finite upper end has no
/// [b, b+delta) inside the set, so it opens; in canonical form no neighbor
/// can cover it.
inline IntervalSet sorgenfreyInterior(const IntervalSet& a) {
    std::vector<Interval> out;
    for (const Interval& iv : a.parts()) {
        if (iv.lo() && iv.hi() && *iv.lo() == *iv.hi()) continue;  // singleton, empty interior
        out.push_back(Interval::make(iv.lo(), iv.loClosed(), iv.hi(), false));
    }
    return IntervalSet(std::move(out));
}

inline IntervalSet euclideanClosure(const IntervalSet& a) {
    std::vector<Interval> out;
    for (const Interval& iv : a.parts())
        out.push_back(Interval::make(iv.lo(), iv.lo().has_value(), iv.hi(), iv.hi().has_value()));
    return IntervalSet(std::move(out));
}

inline IntervalSet euclideanInterior(const IntervalSet& a) {
    std::vector<Interval> out;
    for (const Interval& iv : a.parts()) {
        if (iv.lo() && iv.hi() && *iv.lo() == *iv.hi()) continue;
        out.push_back(Interval::make(iv.lo(), false, iv.hi(), false));
    }
    return IntervalSet(std::move(out));
}

/// Exact Minkowski sum with the half-open segment [0, eps): the lower end of
/// each interval keeps its flag, the upper end moves up by eps and is never
/// attained.
inline IntervalSet minkowskiRight(const IntervalSet& a, const Rat& eps) {
    if (eps <= 0) throw DomainError("translation radius must be positive");
    std::vector<Interval> out;
    for (const Interval& iv : a.parts()) {
        std::optional<Rat> hi;
        if (iv.hi()) hi = Rat(*iv.hi() + eps);
        out.push_back(Interval::make(iv.lo(), iv.loClosed(), std::move(hi), false));
    }
    return IntervalSet(std::move(out));
}

/// Addition on the reals is commutative, so the left translate set equals the
/// right one.
inline IntervalSet minkowskiLeft(const IntervalSet& a, const Rat& eps) {
    return minkowskiRight(a, eps);
}

/// {y : [y, y+eps) meets s}, computed as the exact Minkowski sum with
/// (-eps, 0]: per interval the lower end slides down by eps and opens, the
/// upper end keeps its flag.
inline IntervalSet meetsRightTranslates(const IntervalSet& s, const Rat& eps) {
    if (eps <= 0) throw DomainError("translation radius must be positive");
    std::vector<Interval> out;
    for (const Interval& iv : s.parts()) {
        std::optional<Rat> lo;
        if (iv.lo()) lo = Rat(*iv.lo() - eps);
        out.push_back(Interval::make(std::move(lo), false, iv.hi(), iv.hiClosed()));
    }
    return IntervalSet(std::move(out));
}

/// Ball of x in the quasi-Roelcke entourage of the Sorgenfrey group (R,+)
/// with U = [0,eps): both displayed conditions are worked out from the
/// interval arithmetic rather than hard-coded to the known Euclidean answer.
inline IntervalSet quasiRoelckeBall(const Rat& x, const Rat& eps) {
    IntervalSet uxTranslate = minkowskiRight(IntervalSet::point(x), eps);  // U + x
    IntervalSet xuTranslate = minkowskiLeft(IntervalSet::point(x), eps);   // x + U
    IntervalSet meetsUx = meetsRightTranslates(uxTranslate, eps);  // {y : yU meets Ux}
    IntervalSet meetsXu = meetsRightTranslates(xuTranslate, eps);  // {y : Uy meets xU}
    return meetsUx.intersectWith(meetsXu);
}

enum class SorgenfreyUniverse { HalfLine, Line };

/// Interval-set instantiation of the function-synthesis model over the
/// Sorgenfrey line or the additive half-line monoid. Entourage handles are
/// translation radii; composition adds them exactly. Every set is kept
/// intersected into the universe; the universe is clopen, so the subspace
/// closure and interior are the global ones clipped back.
class SorgenfreyModel {
  public:
    using Set = IntervalSet;
    using Entourage = Rat;
    using Point = Rat;

    explicit SorgenfreyModel(SorgenfreyUniverse u) : universe_kind_(u) {}

    SorgenfreyUniverse universeKind() const { return universe_kind_; }

    Set universe() const {
        return universe_kind_ == SorgenfreyUniverse::HalfLine
                   ? IntervalSet::of(Rat(0), true, std::nullopt, false)
                   : IntervalSet::wholeLine();
    }

    Set clip(const Set& s) const { return s.intersectWith(universe()); }

    Set ball(const Set& a, const Entourage& r) const { return clip(minkowskiRight(a, r)); }
    Set closure(const Set& a) const { return clip(sorgenfreyClosure(a)); }
    Set interior(const Set& a) const { return clip(sorgenfreyInterior(a)); }
    Set unite(const Set& a, const Set& b) const { return a.unionWith(b); }
    Set difference(const Set& a, const Set& b) const { return a.minus(b); }
    bool isSubset(const Set& a, const Set& b) const { return a.subsetOf(b); }
    bool isEmpty(const Set& a) const { return a.isEmpty(); }
    bool contains(const Set& a, const Point& p) const { return a.contains(p); }
    bool isOpen(const Set& a) const { return interior(a) == a; }

    Entourage compose(const Entourage& a, const Entourage& b) const { return a + b; }
    bool entourageSubset(const Entourage& a, const Entourage& b) const { return a <= b; }

    /// Radius entourages are the left entourages of an additive monoid with
    /// open shifts, which are normal; there is no finite certificate to
    /// compute here.
    bool entourageNormal(const Entourage&) const { return true; }

    std::string describe(const Set& a) const { return a.toString(); }

  private:
    SorgenfreyUniverse universe_kind_;
};

/// Radius-halving chain: the top entourage has radius eps and level n radius
/// eps/2^n, so every composition certificate holds with equality.
inline EntourageChain<SorgenfreyModel> sorgenfreyChain(const SorgenfreyModel& model,
                                                       const Rat& eps, int depth) {
    if (eps <= 0) throw DomainError("chain radius must be positive");
    std::vector<Rat> levels;
    Rat r = eps;
    for (int i = 0; i < depth; ++i) {
        r /= 2;
        levels.push_back(r);
    }
    return EntourageChain<SorgenfreyModel>(model, eps, std::move(levels));
}

/// Submetrizability evidence for the Sorgenfrey group: the quasi-Roelcke
/// balls coincide with Euclidean balls on every sample, and the countable
/// family [0, 1/2^n) separates every sampled pair one-sidedly.
struct SubmetrizabilityReport {
    struct PairResult {
        Rat x, y;
        bool ballsMatch = true;     // quasi-Roelcke ball is the Euclidean ball, all radii
        bool degenerate = false;    // x == y: only reflexivity is checked
        bool reflexive = true;
        bool separated = false;     // some [0,1/2^n) kills one of the two mixed products
        int separatingLevel = -1;
        Rat metric;                 // |x - y|
    };
    std::vector<PairResult> pairs;

    bool pass() const {
        for (const PairResult& p : pairs) {
            if (!p.ballsMatch || !p.reflexive) return false;
            if (!p.degenerate && !p.separated) return false;
        }
        return !pairs.empty();
    }
};

inline SubmetrizabilityReport submetrizabilityWitness(
    const std::vector<std::pair<Rat, Rat>>& samples, const std::vector<Rat>& epsList) {
    SubmetrizabilityReport rep;
    for (const auto& [x, y] : samples) {
        SubmetrizabilityReport::PairResult res;
        res.x = x;
        res.y = y;
        res.metric = ratAbs(x - y);
        res.degenerate = x == y;
        for (const Rat& eps : epsList) {
            IntervalSet expected = IntervalSet::of(Rat(x - eps), false, Rat(x + eps), false);
            if (quasiRoelckeBall(x, eps) != expected) res.ballsMatch = false;
            IntervalSet expectedY = IntervalSet::of(Rat(y - eps), false, Rat(y + eps), false);
            if (quasiRoelckeBall(y, eps) != expectedY) res.ballsMatch = false;
            if (!quasiRoelckeBall(x, eps).contains(x)) res.reflexive = false;
        }
        if (!res.degenerate) {
            Rat radius(1);
            for (int n = 0; n <= 256 && !res.separated; ++n) {
                IntervalSet ux = minkowskiRight(IntervalSet::point(x), radius);
                IntervalSet yu = minkowskiLeft(IntervalSet::point(y), radius);
                IntervalSet uy = minkowskiRight(IntervalSet::point(y), radius);
                IntervalSet xu = minkowskiLeft(IntervalSet::point(x), radius);
                if (ux.intersectWith(yu).isEmpty() || uy.intersectWith(xu).isEmpty()) {
                    res.separated = true;
                    res.separatingLevel = n;
                }
                radius /= 2;
            }
        }
        rep.pairs.push_back(std::move(res));
    }
    return rep;
}

}  // namespace qtop
