#pragma once

#include <numeric>
#include <vector>

#include "qtop/fin_space.hpp"
#include "qtop/quasi_uniformity.hpp"
#include "qtop/urysohn.hpp"

namespace qtop {

/// Finite-space instantiation of the function-synthesis model: sets are bit
/// masks, entourages are relations, points are indices.
class FiniteSetModel {
  public:
    using Set = PointSet;
    using Entourage = Relation;
    using Point = int;

    explicit FiniteSetModel(FinSpace space) : space_(std::move(space)) {}

    const FinSpace& space() const { return space_; }

    Set ball(const Set& a, const Entourage& u) const { return u.ball(a); }
    Set closure(const Set& a) const { return space_.closure(a); }
    Set interior(const Set& a) const { return space_.interior(a); }
    Set unite(const Set& a, const Set& b) const { return a.unionWith(b); }
    Set difference(const Set& a, const Set& b) const { return a.minus(b); }
    bool isSubset(const Set& a, const Set& b) const { return a.subsetOf(b); }
    bool isEmpty(const Set& a) const { return a.isEmpty(); }
    bool contains(const Set& a, Point p) const { return a.contains(p); }
    bool isOpen(const Set& a) const { return space_.isOpen(a); }
    Set universe() const { return PointSet::full(space_.size()); }

    Entourage compose(const Entourage& u, const Entourage& v) const {
        return u.composedWith(v);
    }
    bool entourageSubset(const Entourage& u, const Entourage& v) const {
        return u.subsetOf(v);
    }

    /// Exhaustive normality of one entourage over the ambient space: every
    /// subset's closure sits inside the interior of the closed ball around it.
    bool entourageNormal(const Entourage& u) const {
        const std::uint32_t limit = PointSet::full(space_.size()).bits();
        for (std::uint32_t w = 0;; ++w) {
            PointSet a{w};
            if (!space_.closure(a).subsetOf(space_.interior(space_.closure(u.ball(a)))))
                return false;
            if (w == limit) break;
        }
        return true;
    }

    std::string describe(const Set& a) const { return a.toString(); }

    std::vector<Point> points() const {
        std::vector<int> out(space_.size());
        std::iota(out.begin(), out.end(), 0);
        return out;
    }

  private:
    FinSpace space_;
};

/// Default chain on a finite space: every level is the minimal-open preorder
/// of the canonical quasi-uniformity. Idempotence makes the composition
/// certificates exact at every depth.
inline EntourageChain<FiniteSetModel> canonicalFiniteChain(const FiniteSetModel& model,
                                                           int depth) {
    const Relation m = model.space().minimalOpenRelation();
    return EntourageChain<FiniteSetModel>(model, m,
                                          std::vector<Relation>(static_cast<std::size_t>(depth), m));
}

}  // namespace qtop
