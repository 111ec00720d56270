#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qtop/errors.hpp"
#include "qtop/point_set.hpp"

namespace qtop {

/// Reflexive binary relation (entourage) on {0..n-1}, one bit-mask row per
/// point. Row i holds the successor set {j : (i,j) in the relation}, so the
/// ball of a point is a plain row read. Values are immutable: every operation
/// returns a fresh relation.
///
/// Relations must contain the diagonal; constructors reject matrices that do
/// not rather than repairing them.
class Relation {
  public:
    static Relation diagonal(int n) {
        Relation r(n);
        for (int i = 0; i < n; ++i) r.rows_[i] = PointSet::single(i).bits();
        return r;
    }

    static Relation full(int n) {
        Relation r(n);
        for (int i = 0; i < n; ++i) r.rows_[i] = PointSet::full(n).bits();
        return r;
    }

    /// Builds from explicit rows; throws DimensionError if any diagonal bit is
    /// missing or a row mentions points outside the carrier.
    static Relation fromRows(int n, const std::vector<std::uint32_t>& rows) {
        Relation r(n);
        if (static_cast<int>(rows.size()) != n)
            throw DimensionError("relation needs exactly n rows");
        for (int i = 0; i < n; ++i) {
            if ((rows[i] & ~PointSet::full(n).bits()) != 0)
                throw DimensionError("relation row mentions a point outside the carrier");
            if (!((rows[i] >> i) & 1u))
                throw DimensionError("relation is missing the diagonal pair (" +
                                     std::to_string(i) + "," + std::to_string(i) + ")");
            r.rows_[i] = rows[i];
        }
        return r;
    }

    int size() const { return n_; }

    bool contains(int i, int j) const { return (rows_[i] >> j) & 1u; }
    PointSet row(int i) const { return PointSet{rows_[i]}; }

    /// Pairs (x,z) with an intermediate y such that (x,y) is here and (y,z)
    /// in `s`. Contains the diagonal whenever both inputs do.
    Relation composedWith(const Relation& s) const {
        if (n_ != s.n_) throw DimensionError("composing relations of different sizes");
        Relation out(n_);
        for (int i = 0; i < n_; ++i) {
            std::uint32_t acc = 0;
            for (int y : row(i)) acc |= s.rows_[y];
            out.rows_[i] = acc;
        }
        return out;
    }

    Relation inverted() const {
        Relation out(n_);
        for (int i = 0; i < n_; ++i)
            for (int j : row(i)) out.rows_[j] |= PointSet::single(i).bits();
        return out;
    }

    /// Union of the rows indexed by `a`: the neighborhood of the set under
    /// this entourage.
    PointSet ball(PointSet a) const {
        std::uint32_t acc = 0;
        for (int x : a) acc |= rows_[x];
        return PointSet{acc};
    }

    /// Reflexive plus transitive, i.e. composing with itself adds nothing.
    bool isPreorder() const { return composedWith(*this).subsetOf(*this); }

    bool subsetOf(const Relation& o) const {
        if (n_ != o.n_) throw DimensionError("comparing relations of different sizes");
        for (int i = 0; i < n_; ++i)
            if (rows_[i] & ~o.rows_[i]) return false;
        return true;
    }

    Relation unionWith(const Relation& o) const {
        if (n_ != o.n_) throw DimensionError("uniting relations of different sizes");
        Relation out(n_);
        for (int i = 0; i < n_; ++i) out.rows_[i] = rows_[i] | o.rows_[i];
        return out;
    }

    Relation intersectWith(const Relation& o) const {
        if (n_ != o.n_) throw DimensionError("intersecting relations of different sizes");
        Relation out(n_);
        for (int i = 0; i < n_; ++i) out.rows_[i] = rows_[i] & o.rows_[i];
        return out;
    }

    bool isSymmetric() const {
        for (int i = 0; i < n_; ++i)
            for (int j : row(i))
                if (!contains(j, i)) return false;
        return true;
    }

    bool isDiagonal() const {
        for (int i = 0; i < n_; ++i)
            if (rows_[i] != PointSet::single(i).bits()) return false;
        return true;
    }

    /// Smallest preorder containing this relation.
    Relation transitiveClosure() const {
        Relation out = *this;
        for (int k = 0; k < n_; ++k)
            for (int i = 0; i < n_; ++i)
                if (out.contains(i, k)) out.rows_[i] |= out.rows_[k];
        return out;
    }

    bool operator==(const Relation& o) const {
        if (n_ != o.n_) return false;
        for (int i = 0; i < n_; ++i)
            if (rows_[i] != o.rows_[i]) return false;
        return true;
    }

    /// Row-major bit encoding; doubles as the deterministic enumeration key.
    /// Cell (0,0) is the most significant bit.
    std::uint64_t encode() const {
        std::uint64_t v = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) v = (v << 1) | (contains(i, j) ? 1 : 0);
        return v;
    }

    /// Text form: n lines of n characters '0'/'1' (row i, column j).
    std::string toText() const {
        std::string out;
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) out += contains(i, j) ? '1' : '0';
            out += '\n';
        }
        return out;
    }

    static Relation fromText(const std::vector<std::string>& lines, int firstLineNo = 0);

  private:
    explicit Relation(int n) : n_(n), rows_{} {
        if (n < 1) throw DimensionError("relation carrier must be nonempty");
        if (n > kMaxPoints)
            throw CapExceeded("carrier size " + std::to_string(n) + " exceeds the build cap " +
                              std::to_string(kMaxPoints));
    }

    int n_;
    std::array<std::uint32_t, kMaxPoints> rows_;
};

inline Relation Relation::fromText(const std::vector<std::string>& lines, int firstLineNo) {
    int n = static_cast<int>(lines.size());
    if (n < 1) throw ParseError(firstLineNo, "relation text needs at least one row");
    if (n > kMaxPoints) throw CapExceeded("relation text exceeds the build cap");
    std::vector<std::uint32_t> rows(n, 0);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(lines[i].size()) != n)
            throw ParseError(firstLineNo + i, "relation row must have exactly " +
                                                  std::to_string(n) + " characters");
        for (int j = 0; j < n; ++j) {
            char c = lines[i][j];
            if (c != '0' && c != '1')
                throw ParseError(firstLineNo + i, "relation entries must be '0' or '1'");
            if (c == '1') rows[i] |= PointSet::single(j).bits();
        }
    }
    try {
        return fromRows(n, rows);
    } catch (const DimensionError& e) {
        throw ParseError(firstLineNo, e.what());
    }
}

}  // namespace qtop
