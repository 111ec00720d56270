#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtop/fin_space.hpp"
#include "qtop/relation.hpp"
#include "qtop/separation.hpp"

namespace qtop {

/// Quasi-uniformity on a finite carrier, kept as its generating entourages
/// plus their intersection. On a finite square every entourage filter is
/// principal, so the filter is a quasi-uniformity exactly when the minimal
/// entourage is a preorder; normalize() checks that once and every predicate
/// afterwards works on the minimal entourage where monotonicity permits.
class FiniteQuasiUniformity {
  public:
    /// Validates and normalizes a generating family. Throws
    /// NotQuasiUniformityError when the intersection fails to be a preorder
    /// (no smaller member can repair a missing composition witness).
    static FiniteQuasiUniformity normalize(std::vector<Relation> base) {
        if (base.empty()) throw NotQuasiUniformityError("base must be nonempty");
        Relation minimal = base.front();
        for (const Relation& r : base) {
            if (r.size() != minimal.size())
                throw DimensionError("base entourages must share one carrier");
            minimal = minimal.intersectWith(r);
        }
        if (!minimal.isPreorder())
            throw NotQuasiUniformityError(
                "minimal entourage is not transitive; the family generates no quasi-uniformity");
        return FiniteQuasiUniformity(std::move(base), std::move(minimal));
    }

    int size() const { return minimal_.size(); }
    const std::vector<Relation>& base() const { return base_; }
    const Relation& minimal() const { return minimal_; }

    /// The topology the filter generates: the minimal neighborhood of x is
    /// the minimal-entourage ball of x, open because the minimal entourage is
    /// a preorder.
    FinSpace inducedTopology() const { return FinSpace(minimal_); }

  private:
    FiniteQuasiUniformity(std::vector<Relation> base, Relation minimal)
        : base_(std::move(base)), minimal_(std::move(minimal)) {}

    std::vector<Relation> base_;
    Relation minimal_;
};

/// A failed normality containment: cl(a) escapes int(cl(ball(a))).
struct NormalityWitness {
    PointSet a;
    PointSet closureOfA;
    PointSet interiorClosureBall;
};

/// First subset (ascending bit mask) violating normality against the ambient
/// space, or nullopt when the quasi-uniformity is normal. Only the minimal
/// entourage is tested: ball, closure and interior are monotone in the
/// entourage, so the minimal one is the hardest. The full-quantification
/// oracle lives in the test tree.
inline std::optional<NormalityWitness> findNormalityViolation(const FiniteQuasiUniformity& q,
                                                              const FinSpace& ambient) {
    if (q.size() != ambient.size())
        throw DimensionError("quasi-uniformity and ambient space differ in size");
    const std::uint32_t limit = PointSet::full(ambient.size()).bits();
    for (std::uint32_t w = 0;; ++w) {
        PointSet a{w};
        PointSet cl = ambient.closure(a);
        PointSet target = ambient.interior(ambient.closure(q.minimal().ball(a)));
        if (!cl.subsetOf(target)) return NormalityWitness{a, cl, target};
        if (w == limit) break;
    }
    return std::nullopt;
}

inline bool isNormal(const FiniteQuasiUniformity& q, const FinSpace& ambient) {
    return !findNormalityViolation(q, ambient).has_value();
}

struct QuasiUniformityAxioms {
    bool separated;     // intersection of the filter is the diagonal
    bool isUniformity;  // filter closed under inverses
    bool continuous;    // induced topology contained in the ambient topology
};

inline QuasiUniformityAxioms checkAxioms(const FiniteQuasiUniformity& q,
                                         const FinSpace& ambient) {
    if (q.size() != ambient.size())
        throw DimensionError("quasi-uniformity and ambient space differ in size");
    QuasiUniformityAxioms out{};
    out.separated = q.minimal().isDiagonal();
    out.isUniformity = q.minimal().inverted() == q.minimal();
    // Induced opens are unions of minimal-entourage rows, so it is enough
    // that every row is open in the ambient space.
    out.continuous = true;
    for (int x = 0; x < q.size(); ++x)
        if (!ambient.isOpen(q.minimal().row(x))) out.continuous = false;
    return out;
}

/// The unique quasi-uniformity generating the topology of `s`: the principal
/// filter of the minimal-open preorder. Uniqueness on finite carriers (the
/// induced topology pins down the minimal entourage, and conversely) is a
/// tested proposition, not an assumption.
inline FiniteQuasiUniformity canonicalQU(const FinSpace& s) {
    return FiniteQuasiUniformity::normalize({s.minimalOpenRelation()});
}

inline bool isNormallyQuasiUniformizable(const FinSpace& s) {
    return isNormal(canonicalQU(s), s);
}

/// Classification with the quasi-uniformity column filled in.
inline ClassificationRecord classifyFull(const FinSpace& s) {
    ClassificationRecord rec = classify(s);
    rec.normallyQuasiUniformizable = isNormallyQuasiUniformizable(s);
    return rec;
}

}  // namespace qtop
