#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "qtop/errors.hpp"
#include "qtop/rational.hpp"

namespace qtop {

/// Nonempty interval of rationals. A missing endpoint means the interval is
/// unbounded on that side; infinite ends are always open.
class Interval {
  public:
    static Interval make(std::optional<Rat> lo, bool loClosed, std::optional<Rat> hi,
                         bool hiClosed) {
        if (!lo) loClosed = false;
        if (!hi) hiClosed = false;
        if (lo && hi) {
            if (*lo > *hi || (*lo == *hi && !(loClosed && hiClosed)))
                throw DomainError("empty interval bounds");
        }
        return Interval(std::move(lo), loClosed, std::move(hi), hiClosed);
    }

    static Interval point(Rat v) { return make(v, true, v, true); }
    static Interval wholeLine() { return make(std::nullopt, false, std::nullopt, false); }

    const std::optional<Rat>& lo() const { return lo_; }
    const std::optional<Rat>& hi() const { return hi_; }
    bool loClosed() const { return loClosed_; }
    bool hiClosed() const { return hiClosed_; }

    bool contains(const Rat& x) const {
        if (lo_ && (x < *lo_ || (x == *lo_ && !loClosed_))) return false;
        if (hi_ && (x > *hi_ || (x == *hi_ && !hiClosed_))) return false;
        return true;
    }

    bool operator==(const Interval& o) const {
        return lo_ == o.lo_ && hi_ == o.hi_ && loClosed_ == o.loClosed_ &&
               hiClosed_ == o.hiClosed_;
    }

    std::string toString() const {
        std::string out;
        out += loClosed_ ? '[' : '(';
        out += lo_ ? qtop::toString(*lo_) : "-inf";
        out += ',';
        out += hi_ ? qtop::toString(*hi_) : "inf";
        out += hiClosed_ ? ']' : ')';
        return out;
    }

  private:
    Interval(std::optional<Rat> lo, bool loClosed, std::optional<Rat> hi, bool hiClosed)
        : lo_(std::move(lo)), hi_(std::move(hi)), loClosed_(loClosed), hiClosed_(hiClosed) {}

    std::optional<Rat> lo_, hi_;
    bool loClosed_, hiClosed_;
};

/// Finite union of intervals in canonical form: sorted, pairwise disjoint and
/// non-adjacent, so set equality is structural equality. The adjacency rule:
/// two intervals meeting at one endpoint merge exactly when at least one side
/// includes the point.
class IntervalSet {
  public:
    IntervalSet() = default;
    explicit IntervalSet(std::vector<Interval> parts) : parts_(std::move(parts)) {
        canonicalize();
    }

    static IntervalSet empty() { return IntervalSet(); }
    static IntervalSet wholeLine() { return IntervalSet({Interval::wholeLine()}); }
    static IntervalSet point(Rat v) { return IntervalSet({Interval::point(std::move(v))}); }
    static IntervalSet of(std::optional<Rat> lo, bool loClosed, std::optional<Rat> hi,
                          bool hiClosed) {
        return IntervalSet({Interval::make(std::move(lo), loClosed, std::move(hi), hiClosed)});
    }

    const std::vector<Interval>& parts() const { return parts_; }
    bool isEmpty() const { return parts_.empty(); }

    bool contains(const Rat& x) const {
        for (const Interval& iv : parts_)
            if (iv.contains(x)) return true;
        return false;
    }

    IntervalSet unionWith(const IntervalSet& o) const {
        std::vector<Interval> merged = parts_;
        merged.insert(merged.end(), o.parts_.begin(), o.parts_.end());
        return IntervalSet(std::move(merged));
    }

    /// Pairwise interval intersection, independent of complement so the
    /// De Morgan laws stay a real property.
    IntervalSet intersectWith(const IntervalSet& o) const {
        std::vector<Interval> out;
        for (const Interval& a : parts_)
            for (const Interval& b : o.parts_) {
                // Lower bound: the larger one wins; ties intersect the flags.
                std::optional<Rat> lo;
                bool loClosed;
                if (!a.lo()) {
                    lo = b.lo();
                    loClosed = b.loClosed();
                } else if (!b.lo()) {
                    lo = a.lo();
                    loClosed = a.loClosed();
                } else if (*a.lo() > *b.lo()) {
                    lo = a.lo();
                    loClosed = a.loClosed();
                } else if (*b.lo() > *a.lo()) {
                    lo = b.lo();
                    loClosed = b.loClosed();
                } else {
                    lo = a.lo();
                    loClosed = a.loClosed() && b.loClosed();
                }
                std::optional<Rat> hi;
                bool hiClosed;
                if (!a.hi()) {
                    hi = b.hi();
                    hiClosed = b.hiClosed();
                } else if (!b.hi()) {
                    hi = a.hi();
                    hiClosed = a.hiClosed();
                } else if (*a.hi() < *b.hi()) {
                    hi = a.hi();
                    hiClosed = a.hiClosed();
                } else if (*b.hi() < *a.hi()) {
                    hi = b.hi();
                    hiClosed = b.hiClosed();
                } else {
                    hi = a.hi();
                    hiClosed = a.hiClosed() && b.hiClosed();
                }
                if (lo && hi && (*lo > *hi || (*lo == *hi && !(loClosed && hiClosed))))
                    continue;
                out.push_back(Interval::make(lo, loClosed, hi, hiClosed));
            }
        return IntervalSet(std::move(out));
    }

    IntervalSet complement() const {
        std::vector<Interval> out;
        std::optional<Rat> cursor;  // nullopt = -infinity
        bool cursorClosed = false;  // whether the gap may include the cursor value
        bool atStart = true;
        for (const Interval& iv : parts_) {
            // Gap between the cursor and this interval's lower end.
            std::optional<Rat> gapHi = iv.lo();
            bool gapHiClosed = iv.lo() && !iv.loClosed();
            bool gapNonempty;
            if (atStart && !cursor) {
                gapNonempty = iv.lo().has_value();
            } else if (!gapHi) {
                gapNonempty = true;  // unreachable for nonempty iv after a bounded cursor
            } else if (*cursor < *gapHi) {
                gapNonempty = true;
            } else {
                gapNonempty = *cursor == *gapHi && cursorClosed && gapHiClosed;
            }
            if (gapNonempty)
                out.push_back(Interval::make(cursor, cursorClosed, gapHi, gapHiClosed));
            cursor = iv.hi();
            cursorClosed = iv.hi() && !iv.hiClosed();
            atStart = false;
            if (!iv.hi()) return IntervalSet(std::move(out));  // reached +infinity
        }
        if (atStart) return wholeLine();
        out.push_back(Interval::make(cursor, cursorClosed, std::nullopt, false));
        return IntervalSet(std::move(out));
    }

    IntervalSet minus(const IntervalSet& o) const { return intersectWith(o.complement()); }

    bool subsetOf(const IntervalSet& o) const { return minus(o).isEmpty(); }

    bool operator==(const IntervalSet& o) const { return parts_ == o.parts_; }

    std::string toString() const {
        if (parts_.empty()) return "empty";
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += " U ";
            out += parts_[i].toString();
        }
        return out;
    }

    /// Grammar: `empty` | interval (`U` interval)*, with
    /// interval := ('['|'(') (rat|'-inf') ',' (rat|'inf') (')'|']').
    static IntervalSet parse(const std::string& text);

  private:
    void canonicalize() {
        auto loLess = [](const Interval& a, const Interval& b) {
            if (!a.lo()) return b.lo().has_value();
            if (!b.lo()) return false;
            if (*a.lo() != *b.lo()) return *a.lo() < *b.lo();
            return a.loClosed() && !b.loClosed();
        };
        std::sort(parts_.begin(), parts_.end(), loLess);
        std::vector<Interval> merged;
        for (const Interval& iv : parts_) {
            if (merged.empty()) {
                merged.push_back(iv);
                continue;
            }
            Interval& prev = merged.back();
            bool joins;
            if (!prev.hi() || !iv.lo()) {
                joins = true;
            } else if (*iv.lo() < *prev.hi()) {
                joins = true;
            } else if (*iv.lo() == *prev.hi()) {
                joins = prev.hiClosed() || iv.loClosed();
            } else {
                joins = false;
            }
            if (!joins) {
                merged.push_back(iv);
                continue;
            }
            // Extend prev's upper end if iv reaches further.
            std::optional<Rat> hi;
            bool hiClosed;
            if (!prev.hi() || !iv.hi()) {
                hi = std::nullopt;
                hiClosed = false;
            } else if (*iv.hi() > *prev.hi()) {
                hi = iv.hi();
                hiClosed = iv.hiClosed();
            } else if (*iv.hi() < *prev.hi()) {
                hi = prev.hi();
                hiClosed = prev.hiClosed();
            } else {
                hi = prev.hi();
                hiClosed = prev.hiClosed() || iv.hiClosed();
            }
            prev = Interval::make(prev.lo(), prev.loClosed(), hi, hiClosed);
        }
        parts_ = std::move(merged);
    }

    std::vector<Interval> parts_;
};

inline IntervalSet IntervalSet::parse(const std::string& text) {
    std::size_t i = 0;
    auto skipWs = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skipWs();
    if (text.compare(i, 5, "empty") == 0) {
        i += 5;
        skipWs();
        if (i != text.size()) throw ParseError(0, "trailing characters after 'empty'");
        return IntervalSet::empty();
    }
    std::vector<Interval> parts;
    while (true) {
        skipWs();
        if (i >= text.size() || (text[i] != '[' && text[i] != '('))
            throw ParseError(0, "expected '[' or '(' in interval set");
        bool loClosed = text[i] == '[';
        ++i;
        skipWs();
        auto readToken = [&]() {
            std::size_t start = i;
            while (i < text.size() && text[i] != ',' && text[i] != ')' && text[i] != ']' &&
                   text[i] != ' ' && text[i] != '\t')
                ++i;
            return text.substr(start, i - start);
        };
        std::string loTok = readToken();
        std::optional<Rat> lo;
        if (loTok != "-inf") lo = parseRat(loTok);
        skipWs();
        if (i >= text.size() || text[i] != ',') throw ParseError(0, "expected ',' in interval");
        ++i;
        skipWs();
        std::string hiTok = readToken();
        std::optional<Rat> hi;
        if (hiTok != "inf") hi = parseRat(hiTok);
        skipWs();
        if (i >= text.size() || (text[i] != ')' && text[i] != ']'))
            throw ParseError(0, "expected ')' or ']' in interval");
        bool hiClosed = text[i] == ']';
        ++i;
        if (!lo && loClosed) throw ParseError(0, "'-inf' endpoint cannot be closed");
        if (!hi && hiClosed) throw ParseError(0, "'inf' endpoint cannot be closed");
        try {
            parts.push_back(Interval::make(lo, loClosed, hi, hiClosed));
        } catch (const DomainError& e) {
            throw ParseError(0, e.what());
        }
        skipWs();
        if (i == text.size()) break;
        if (text[i] != 'U') throw ParseError(0, "expected 'U' between intervals");
        ++i;
    }
    return IntervalSet(std::move(parts));
}

}  // namespace qtop
