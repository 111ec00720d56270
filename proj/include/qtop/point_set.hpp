#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "qtop/errors.hpp"

namespace qtop {

/// Subset of the carrier {0..n-1}, stored as a bit mask. The set does not
/// remember n; operations that need the carrier size take it explicitly.
class PointSet {
  public:
    constexpr PointSet() = default;
    constexpr explicit PointSet(std::uint32_t bits) : bits_(bits) {}

    static constexpr PointSet empty() { return PointSet{}; }
    static constexpr PointSet full(int n) {
        return PointSet{n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1};
    }
    static constexpr PointSet single(int p) { return PointSet{std::uint32_t{1} << p}; }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool isEmpty() const { return bits_ == 0; }
    constexpr int count() const { return std::popcount(bits_); }
    constexpr bool contains(int p) const { return (bits_ >> p) & 1u; }

    constexpr PointSet with(int p) const { return PointSet{bits_ | (std::uint32_t{1} << p)}; }
    constexpr PointSet without(int p) const { return PointSet{bits_ & ~(std::uint32_t{1} << p)}; }

    constexpr PointSet unionWith(PointSet o) const { return PointSet{bits_ | o.bits_}; }
    constexpr PointSet intersect(PointSet o) const { return PointSet{bits_ & o.bits_}; }
    constexpr PointSet minus(PointSet o) const { return PointSet{bits_ & ~o.bits_}; }
    constexpr PointSet complementWithin(int n) const {
        return PointSet{~bits_ & full(n).bits_};
    }

    constexpr bool subsetOf(PointSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(PointSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr bool operator==(const PointSet&) const = default;
    constexpr bool operator<(PointSet o) const { return bits_ < o.bits_; }

    /// Smallest member; undefined on the empty set.
    constexpr int min() const { return std::countr_zero(bits_); }

    /// Iterates set members in increasing order.
    class iterator {
      public:
        constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

      private:
        std::uint32_t rest_;
    };
    constexpr iterator begin() const { return iterator{bits_}; }
    constexpr iterator end() const { return iterator{0}; }

    /// "{0,2}" form used by the CLI and fixtures.
    std::string toString() const {
        std::string out = "{";
        bool first = true;
        for (int p : *this) {
            if (!first) out += ',';
            out += std::to_string(p);
            first = false;
        }
        return out + "}";
    }

    /// Parses "{0,2}" (whitespace tolerated, "{}" is the empty set).
    static PointSet parse(const std::string& text, int n);

  private:
    std::uint32_t bits_ = 0;
};

inline PointSet PointSet::parse(const std::string& text, int n) {
    std::size_t i = 0;
    auto skipWs = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skipWs();
    if (i >= text.size() || text[i] != '{') throw ParseError(0, "expected '{' in point set");
    ++i;
    PointSet out;
    skipWs();
    if (i < text.size() && text[i] == '}') {
        ++i;
    } else {
        while (true) {
            skipWs();
            std::size_t start = i;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
            if (i == start) throw ParseError(0, "expected point index in point set");
            int p = std::stoi(text.substr(start, i - start));
            if (p < 0 || p >= n)
                throw ParseError(0, "point " + std::to_string(p) + " outside carrier 0.." +
                                        std::to_string(n - 1));
            out = out.with(p);
            skipWs();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == '}') {
                ++i;
                break;
            }
            throw ParseError(0, "expected ',' or '}' in point set");
        }
    }
    skipWs();
    if (i != text.size()) throw ParseError(0, "trailing characters after point set");
    return out;
}

}  // namespace qtop
