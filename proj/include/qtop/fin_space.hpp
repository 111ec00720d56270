#pragma once

#include <algorithm>
#include <vector>

#include "qtop/errors.hpp"
#include "qtop/relation.hpp"

namespace qtop {

/// Finite topological space. Every finite topology is Alexandrov, so it is
/// fully determined by the minimal-open relation m: (x,y) in m iff y lies in
/// the smallest open set containing x. m is always a preorder, and a set W is
/// open iff it contains the minimal open of each of its points.
///
/// Orientation convention, fixed here for the whole library: (x,y) in m means
/// y is in U_x. The specialization "x in cl{y}" is the inverse relation.
class FinSpace {
  public:
    explicit FinSpace(Relation minimalOpen) : m_(std::move(minimalOpen)) {
        if (!m_.isPreorder())
            throw InvalidTopologyError("minimal-open relation must be a preorder");
    }

    /// Builds the space generated by an explicit open-set family. The family
    /// must contain the empty set and the full carrier and be closed under
    /// pairwise union and intersection (for a finite family this is exactly
    /// the topology axioms). The minimal open of x is the intersection of all
    /// listed opens containing x.
    static FinSpace fromOpens(int n, const std::vector<PointSet>& opens) {
        if (n < 1) throw InvalidTopologyError("carrier must be nonempty");
        if (n > kMaxPoints) throw CapExceeded("carrier size exceeds the build cap");
        const PointSet all = PointSet::full(n);
        std::vector<PointSet> family = opens;
        std::sort(family.begin(), family.end());
        family.erase(std::unique(family.begin(), family.end()), family.end());

        for (PointSet o : family)
            if (!o.subsetOf(all))
                throw InvalidTopologyError("open set " + o.toString() +
                                           " mentions points outside the carrier");
        auto member = [&](PointSet s) {
            return std::binary_search(family.begin(), family.end(), s);
        };
        if (!member(PointSet::empty()))
            throw InvalidTopologyError("open-set family is missing the empty set");
        if (!member(all))
            throw InvalidTopologyError("open-set family is missing the full carrier");
        for (PointSet a : family)
            for (PointSet b : family) {
                if (!member(a.unionWith(b)))
                    throw InvalidTopologyError("family not closed under union: " + a.toString() +
                                               " with " + b.toString());
                if (!member(a.intersect(b)))
                    throw InvalidTopologyError("family not closed under intersection: " +
                                               a.toString() + " with " + b.toString());
            }

        std::vector<std::uint32_t> rows(n);
        for (int x = 0; x < n; ++x) {
            PointSet ux = all;
            for (PointSet o : family)
                if (o.contains(x)) ux = ux.intersect(o);
            rows[x] = ux.bits();
        }
        return FinSpace(Relation::fromRows(n, rows));
    }

    int size() const { return m_.size(); }
    const Relation& minimalOpenRelation() const { return m_; }

    PointSet minimalOpen(int x) const { return m_.row(x); }

    /// Points all of whose neighborhoods meet `a`; equals the ball of `a`
    /// under the inverse minimal-open relation.
    PointSet closure(PointSet a) const { return m_.inverted().ball(a); }

    /// Largest open subset of `a`.
    PointSet interior(PointSet a) const {
        PointSet out;
        for (int x : a)
            if (m_.row(x).subsetOf(a)) out = out.with(x);
        return out;
    }

    bool isOpen(PointSet a) const { return interior(a) == a; }
    bool isClosed(PointSet a) const { return closure(a) == a; }

    /// Every open set, ascending by bit mask.
    std::vector<PointSet> allOpens() const {
        std::vector<PointSet> out;
        const std::uint32_t limit = PointSet::full(size()).bits();
        for (std::uint32_t w = 0;; ++w) {
            PointSet s{w};
            if (isOpen(s)) out.push_back(s);
            if (w == limit) break;
        }
        return out;
    }

    /// Finest partition of the carrier into clopen sets: the components of
    /// the symmetrized, transitively closed minimal-open relation. Classes
    /// are ordered by their smallest member.
    std::vector<PointSet> clopenPartition() const {
        Relation sym = m_.unionWith(m_.inverted()).transitiveClosure();
        std::vector<PointSet> classes;
        PointSet seen;
        for (int x = 0; x < size(); ++x) {
            if (seen.contains(x)) continue;
            PointSet cls = sym.row(x);
            classes.push_back(cls);
            seen = seen.unionWith(cls);
        }
        return classes;
    }

    /// The clopen-partition class of a single point.
    PointSet clopenClass(int x) const {
        return m_.unionWith(m_.inverted()).transitiveClosure().row(x);
    }

    bool operator==(const FinSpace& o) const { return m_ == o.m_; }

  private:
    Relation m_;
};

}  // namespace qtop
