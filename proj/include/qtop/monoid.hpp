#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtop/fin_space.hpp"
#include "qtop/finite_model.hpp"
#include "qtop/quasi_uniformity.hpp"
#include "qtop/urysohn.hpp"

namespace qtop {

/// Raw multiplication data before validation: row-major table, candidate
/// two-sided unit.
struct MonoidData {
    int n = 0;
    std::vector<int> table;  // table[a*n + b] = a*b
    int unit = 0;
};

struct MonoidDefect {
    enum class Kind { Range, UnitLaw, Associativity } kind;
    int a = 0, b = 0, c = 0;

    std::string describe() const {
        switch (kind) {
            case Kind::Range:
                return "entry (" + std::to_string(a) + "," + std::to_string(b) +
                       ") outside the carrier";
            case Kind::UnitLaw:
                return "unit law fails at " + std::to_string(a);
            case Kind::Associativity:
                return "associativity fails at (" + std::to_string(a) + "," +
                       std::to_string(b) + "," + std::to_string(c) + ")";
        }
        return "?";
    }
};

/// First violated monoid law, or nullopt when the data is a monoid.
inline std::optional<MonoidDefect> findMonoidDefect(const MonoidData& d) {
    const int n = d.n;
    auto mul = [&](int a, int b) { return d.table[a * n + b]; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mul(a, b) < 0 || mul(a, b) >= n)
                return MonoidDefect{MonoidDefect::Kind::Range, a, b, 0};
    for (int x = 0; x < n; ++x)
        if (mul(d.unit, x) != x || mul(x, d.unit) != x)
            return MonoidDefect{MonoidDefect::Kind::UnitLaw, x, 0, 0};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    return MonoidDefect{MonoidDefect::Kind::Associativity, a, b, c};
    return std::nullopt;
}

inline bool validate(const MonoidData& d) { return !findMonoidDefect(d).has_value(); }

/// Monoid carrying a finite topology. Construction revalidates the algebra,
/// so an instance always satisfies the monoid laws; whether multiplication is
/// continuous or shifts are open is a separate question.
class TopMonoid {
  public:
    TopMonoid(MonoidData data, FinSpace space)
        : data_(std::move(data)), space_(std::move(space)) {
        if (data_.n != space_.size())
            throw DimensionError("monoid table and topology differ in carrier size");
        if (auto defect = findMonoidDefect(data_))
            throw DomainError("not a monoid: " + defect->describe());
    }

    int size() const { return data_.n; }
    int unit() const { return data_.unit; }
    int mul(int a, int b) const { return data_.table[a * data_.n + b]; }
    const FinSpace& space() const { return space_; }
    const MonoidData& data() const { return data_; }

    PointSet mulSet(PointSet a, PointSet b) const {
        PointSet out;
        for (int x : a)
            for (int y : b) out = out.with(mul(x, y));
        return out;
    }

    /// Image of a set under the two-sided shift x -> a x b.
    PointSet shiftImage(int a, PointSet s, int b) const {
        PointSet out;
        for (int x : s) out = out.with(mul(mul(a, x), b));
        return out;
    }

  private:
    MonoidData data_;
    FinSpace space_;
};

/// Joint continuity of multiplication. On a finite Alexandrov space it is
/// enough that the product of two minimal opens lands in the minimal open of
/// the product; the epsilon-delta oracle over all open pairs lives in the
/// test tree.
inline bool multiplicationContinuous(const TopMonoid& m) {
    for (int a = 0; a < m.size(); ++a)
        for (int b = 0; b < m.size(); ++b)
            if (!m.mulSet(m.space().minimalOpen(a), m.space().minimalOpen(b))
                     .subsetOf(m.space().minimalOpen(m.mul(a, b))))
                return false;
    return true;
}

/// Every two-sided shift maps opens to opens. Images distribute over unions,
/// so minimal opens suffice.
inline bool hasOpenShifts(const TopMonoid& m) {
    for (int a = 0; a < m.size(); ++a)
        for (int b = 0; b < m.size(); ++b)
            for (int x = 0; x < m.size(); ++x)
                if (!m.space().isOpen(m.shiftImage(a, m.space().minimalOpen(x), b)))
                    return false;
    return true;
}

/// The five canonical entourage families on a topologized monoid.
enum class QuKind { Left, Right, TwoSided, Roelcke, QuasiRoelcke };

inline const char* toString(QuKind k) {
    switch (k) {
        case QuKind::Left: return "left";
        case QuKind::Right: return "right";
        case QuKind::TwoSided: return "two-sided";
        case QuKind::Roelcke: return "roelcke";
        case QuKind::QuasiRoelcke: return "quasi-roelcke";
    }
    return "?";
}

/// Entourage determined by one open neighborhood of the unit.
inline Relation quEntourage(const TopMonoid& m, QuKind kind, PointSet u) {
    const int n = m.size();
    std::vector<std::uint32_t> rows(n, 0);
    for (int x = 0; x < n; ++x) {
        PointSet row;
        switch (kind) {
            case QuKind::Left:
                row = m.mulSet(PointSet::single(x), u);
                break;
            case QuKind::Right:
                row = m.mulSet(u, PointSet::single(x));
                break;
            case QuKind::TwoSided:
                row = m.mulSet(PointSet::single(x), u)
                          .intersect(m.mulSet(u, PointSet::single(x)));
                break;
            case QuKind::Roelcke:
                row = m.mulSet(m.mulSet(u, PointSet::single(x)), u);
                break;
            case QuKind::QuasiRoelcke: {
                PointSet ux = m.mulSet(u, PointSet::single(x));
                PointSet xu = m.mulSet(PointSet::single(x), u);
                for (int y = 0; y < n; ++y) {
                    PointSet uy = m.mulSet(u, PointSet::single(y));
                    PointSet yu = m.mulSet(PointSet::single(y), u);
                    if (ux.intersects(yu) && uy.intersects(xu)) row = row.with(y);
                }
                break;
            }
        }
        rows[x] = row.bits();
    }
    return Relation::fromRows(n, rows);
}

/// Quasi-uniformity generated by one entourage per open neighborhood of the
/// unit. Normalization can fail for the quasi-Roelcke family on monoids with
/// discontinuous multiplication; the error is propagated, never masked.
inline FiniteQuasiUniformity quBase(const TopMonoid& m, QuKind kind) {
    std::vector<Relation> base;
    for (PointSet u : m.space().allOpens())
        if (u.contains(m.unit())) base.push_back(quEntourage(m, kind, u));
    return FiniteQuasiUniformity::normalize(base);
}

/// Verdicts for the monoid quasi-uniformity battery: normality of left,
/// right and Roelcke entourage families, regeneration of the topology by the
/// four classical families, and symmetry plus coarseness for quasi-Roelcke.
struct P2Report {
    bool hypothesisMet = false;  // open shifts and continuous multiplication
    bool leftNormal = false, rightNormal = false, roelckeNormal = false;
    bool leftRegenerates = false, rightRegenerates = false;
    bool twoSidedRegenerates = false, roelckeRegenerates = false;
    bool quasiRoelckeSymmetric = false;
    bool quasiRoelckeCoarser = false;

    bool pass() const {
        return hypothesisMet && leftNormal && rightNormal && roelckeNormal &&
               leftRegenerates && rightRegenerates && twoSidedRegenerates &&
               roelckeRegenerates && quasiRoelckeSymmetric && quasiRoelckeCoarser;
    }
};

inline P2Report checkP2(const TopMonoid& m) {
    P2Report rep;
    rep.hypothesisMet = hasOpenShifts(m) && multiplicationContinuous(m);
    if (!rep.hypothesisMet) return rep;

    const FinSpace& ambient = m.space();
    FiniteQuasiUniformity left = quBase(m, QuKind::Left);
    FiniteQuasiUniformity right = quBase(m, QuKind::Right);
    FiniteQuasiUniformity twoSided = quBase(m, QuKind::TwoSided);
    FiniteQuasiUniformity roelcke = quBase(m, QuKind::Roelcke);
    FiniteQuasiUniformity quasi = quBase(m, QuKind::QuasiRoelcke);

    rep.leftNormal = isNormal(left, ambient);
    rep.rightNormal = isNormal(right, ambient);
    rep.roelckeNormal = isNormal(roelcke, ambient);

    rep.leftRegenerates = left.inducedTopology() == ambient;
    rep.rightRegenerates = right.inducedTopology() == ambient;
    rep.twoSidedRegenerates = twoSided.inducedTopology() == ambient;
    rep.roelckeRegenerates = roelcke.inducedTopology() == ambient;

    rep.quasiRoelckeSymmetric = quasi.minimal().inverted() == quasi.minimal();
    rep.quasiRoelckeCoarser = checkAxioms(quasi, ambient).continuous;
    return rep;
}

/// Product of the left and right synthesized functions for one neighborhood
/// of the unit, tabulated over the carrier, with the two containments the
/// product must satisfy.
struct ParaFunctionResult {
    std::vector<Dyadic> leftValues, rightValues, productValues;
    PointSet rangeTarget;  // int cl(AU) ∩ int cl(UA)
    bool zeroSetHolds = false;
    bool rangeHolds = false;

    bool pass() const { return zeroSetHolds && rangeHolds; }
};

inline ParaFunctionResult theoremParaFunction(const TopMonoid& m, PointSet a, PointSet u,
                                              int depth = 4) {
    if (a.isEmpty()) throw DomainError("source set must be nonempty");
    if (!u.contains(m.unit())) throw DomainError("neighborhood must contain the unit");
    if (!m.space().isOpen(u)) throw DomainError("neighborhood of the unit must be open");
    if (!hasOpenShifts(m) || !multiplicationContinuous(m))
        throw DomainError("hypothesis not met: needs open shifts and continuous multiplication");

    FiniteSetModel model(m.space());
    const Relation leftMin = quBase(m, QuKind::Left).minimal();
    const Relation rightMin = quBase(m, QuKind::Right).minimal();
    EntourageChain<FiniteSetModel> leftChain(
        model, quEntourage(m, QuKind::Left, u),
        std::vector<Relation>(static_cast<std::size_t>(depth), leftMin));
    EntourageChain<FiniteSetModel> rightChain(
        model, quEntourage(m, QuKind::Right, u),
        std::vector<Relation>(static_cast<std::size_t>(depth), rightMin));
    UrysohnFunction<FiniteSetModel> fLeft(model, leftChain, a);
    UrysohnFunction<FiniteSetModel> fRight(model, rightChain, a);

    ParaFunctionResult out;
    out.rangeTarget = m.space()
                          .interior(m.space().closure(m.mulSet(a, u)))
                          .intersect(m.space().interior(m.space().closure(m.mulSet(u, a))));
    out.zeroSetHolds = true;
    out.rangeHolds = true;
    for (int p = 0; p < m.size(); ++p) {
        Dyadic l = fLeft.evaluate(p);
        Dyadic r = fRight.evaluate(p);
        Dyadic prod = l.times(r);
        out.leftValues.push_back(l);
        out.rightValues.push_back(r);
        out.productValues.push_back(prod);
        if (a.contains(p) && !prod.isZero()) out.zeroSetHolds = false;
        if (!prod.isOne() && !out.rangeTarget.contains(p)) out.rangeHolds = false;
    }
    return out;
}

}  // namespace qtop
