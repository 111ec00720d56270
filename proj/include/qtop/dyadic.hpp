#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qtop/errors.hpp"

namespace qtop {

/// Dyadic rational num / 2^level in [0,1], normalized so num is odd unless
/// level is 0 (which covers the endpoints 0/1 and 1/1).
struct Dyadic {
    std::int64_t num = 0;
    int level = 0;

    static Dyadic zero() { return {0, 0}; }
    static Dyadic one() { return {1, 0}; }

    static Dyadic of(std::int64_t num, int level) {
        if (level < 0 || level > 62 || num < 0 || num > (std::int64_t{1} << level))
            throw DomainError("dyadic out of range");
        while (level > 0 && num % 2 == 0) {
            num /= 2;
            --level;
        }
        return {num, level};
    }

    bool isZero() const { return num == 0; }
    bool isOne() const { return num == 1 && level == 0; }

    double value() const { return static_cast<double>(num) / static_cast<double>(std::int64_t{1} << level); }

    std::int64_t scaledTo(int targetLevel) const {
        return num << (targetLevel - level);
    }

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.num == b.num && a.level == b.level;
    }
    friend bool operator<(const Dyadic& a, const Dyadic& b) {
        int lev = a.level > b.level ? a.level : b.level;
        return a.scaledTo(lev) < b.scaledTo(lev);
    }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return a == b || a < b; }

    Dyadic times(const Dyadic& o) const { return Dyadic::of(num * o.num, level + o.level); }

    std::string toString() const {
        if (level == 0) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(std::int64_t{1} << level);
    }
};

/// Binary expansion r_1..r_l of a dyadic in the open interval (0,1); the last
/// bit is always 1 and the value is the sum of r_i / 2^i.
inline std::vector<int> binaryExpansion(const Dyadic& q) {
    if (q.isZero() || q.isOne() || q.num < 0 || q.num > (std::int64_t{1} << q.level))
        throw DomainError("binary expansion requires a dyadic strictly between 0 and 1");
    std::vector<int> bits(q.level);
    for (int i = 1; i <= q.level; ++i) bits[i - 1] = (q.num >> (q.level - i)) & 1;
    return bits;
}

/// All dyadics of level <= k in (0,1), ascending: i/2^k for i = 1..2^k-1.
inline std::vector<Dyadic> dyadicsUpToLevel(int k) {
    std::vector<Dyadic> out;
    out.reserve((std::size_t{1} << k) - 1);
    for (std::int64_t i = 1; i < (std::int64_t{1} << k); ++i) out.push_back(Dyadic::of(i, k));
    return out;
}

}  // namespace qtop
