#pragma once

#include <cstdint>
#include <vector>

#include "qtop/fin_space.hpp"
#include "qtop/monoid.hpp"

namespace qtop {

/// Campaign-facing cap on exhaustive enumeration sizes. The raw space
/// enumerator accepts one size more for the sequence cross-check; beyond that
/// the search space (2^(n^2-n) relations) stops being desk-scale.
inline constexpr int kEnumerationCap = 4;
inline constexpr int kSpaceEnumerationLimit = 5;

/// Every preorder on n labeled points exactly once, ascending by the
/// row-major bit encoding of the relation (cell (0,0) most significant).
/// Labeled topologies correspond one-to-one to these preorders.
inline std::vector<FinSpace> enumerateSpaces(int n) {
    if (n < 1) throw DomainError("carrier must be nonempty");
    if (n > kSpaceEnumerationLimit)
        throw CapExceeded("space enumeration capped at n = " +
                          std::to_string(kSpaceEnumerationLimit));
    std::vector<FinSpace> out;
    const int offDiag = n * n - n;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << offDiag); ++v) {
        std::vector<std::uint32_t> rows(n);
        int bitIndex = offDiag - 1;  // first off-diagonal cell is most significant
        for (int i = 0; i < n; ++i) {
            rows[i] = PointSet::single(i).bits();
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                if ((v >> bitIndex) & 1) rows[i] |= PointSet::single(j).bits();
                --bitIndex;
            }
        }
        Relation r = Relation::fromRows(n, rows);
        if (r.isPreorder()) out.emplace_back(r);
    }
    return out;
}

/// All monoid tables on {0..n-1} with the unit fixed at index 0 (every
/// monoid relabels to this form), ascending by row-major table encoding.
/// Backtracks over the free cells with associativity pruning on fully
/// determined triples.
inline std::vector<std::vector<int>> enumerateMonoidTables(int n) {
    if (n < 1) throw DomainError("carrier must be nonempty");
    if (n > kEnumerationCap)
        throw CapExceeded("monoid enumeration capped at n = " + std::to_string(kEnumerationCap));
    std::vector<std::vector<int>> out;
    std::vector<int> table(static_cast<std::size_t>(n) * n, -1);
    for (int x = 0; x < n; ++x) {
        table[0 * n + x] = x;
        table[x * n + 0] = x;
    }
    auto known = [&](int a, int b) { return table[a * n + b] >= 0; };
    auto consistent = [&](int) {
        // Check every triple whose both evaluation orders are determined.
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (!known(a, b)) continue;
                for (int c = 0; c < n; ++c) {
                    if (!known(b, c)) continue;
                    int ab = table[a * n + b], bc = table[b * n + c];
                    if (!known(ab, c) || !known(a, bc)) continue;
                    if (table[ab * n + c] != table[a * n + bc]) return false;
                }
            }
        return true;
    };
    // Free cells (i,j) with i,j >= 1 in row-major order.
    std::vector<int> cells;
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) cells.push_back(i * n + j);
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            out.push_back(table);
            return;
        }
        for (int v = 0; v < n; ++v) {
            table[cells[k]] = v;
            if (consistent(cells[k])) self(self, k + 1);
        }
        table[cells[k]] = -1;
    };
    rec(rec, 0);
    return out;
}

/// Group tables are the monoid tables whose rows and columns are all
/// permutations.
inline bool isGroupTable(int n, const std::vector<int>& table) {
    for (int a = 0; a < n; ++a) {
        std::uint32_t rowSeen = 0, colSeen = 0;
        for (int b = 0; b < n; ++b) {
            rowSeen |= std::uint32_t{1} << table[a * n + b];
            colSeen |= std::uint32_t{1} << table[b * n + a];
        }
        if (rowSeen != PointSet::full(n).bits() || colSeen != PointSet::full(n).bits())
            return false;
    }
    return true;
}

/// One enumerated (table, topology) instance with its filter flags and the
/// deterministic ordering keys.
struct TopMonoidInstance {
    TopMonoid monoid;
    std::uint64_t tableCode;
    std::uint64_t spaceCode;
    bool continuousMultiplication;
    bool openShifts;
};

inline std::uint64_t encodeTable(int n, const std::vector<int>& table) {
    std::uint64_t code = 0;
    for (int v : table) code = code * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(v);
    return code;
}

/// Streams every (Cayley table, unit 0, preorder) instance of size n in
/// deterministic order: tables ascending, then topologies ascending.
template <typename Callback>
void forEachTopMonoid(int n, Callback&& cb) {
    const auto tables = enumerateMonoidTables(n);
    const auto spaces = enumerateSpaces(n);
    for (const auto& table : tables) {
        MonoidData data{n, table, 0};
        for (const FinSpace& space : spaces) {
            TopMonoid m(data, space);
            TopMonoidInstance inst{m, encodeTable(n, table),
                                   space.minimalOpenRelation().encode(),
                                   multiplicationContinuous(m), hasOpenShifts(m)};
            cb(inst);
        }
    }
}

}  // namespace qtop
