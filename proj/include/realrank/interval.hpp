#pragma once

#include <optional>
#include <stdexcept>

#include "realrank/rational.hpp"

namespace realrank {

/// Sign of every point of an interval, when uniform.
enum class IntervalSign { negative, zero, positive, mixed };

/// Closed interval with exact rational endpoints. All operations are exact
/// (rationals are closed under field operations), so enclosures are tight up
/// to the dependency problem.
struct Interval {
    Rational lo, hi;

    Interval() : lo(0), hi(0) {}
    Interval(Rational point) : lo(point), hi(point) {}
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("Interval: lo > hi");
    }

    bool is_point() const { return lo == hi; }
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / Rational(2); }

    /// Largest absolute value attained on the interval.
    Rational mag() const { return max(lo.abs(), hi.abs()); }

    IntervalSign sign() const {
        if (lo.sign() > 0) return IntervalSign::positive;
        if (hi.sign() < 0) return IntervalSign::negative;
        if (lo.is_zero() && hi.is_zero()) return IntervalSign::zero;
        return IntervalSign::mixed;
    }

    friend Interval operator+(const Interval& a, const Interval& b) {
        return Interval(a.lo + b.lo, a.hi + b.hi);
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        return Interval(a.lo - b.hi, a.hi - b.lo);
    }
    Interval operator-() const { return Interval(-hi, -lo); }

    friend Interval operator*(const Interval& a, const Interval& b) {
        Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        return Interval(min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4)));
    }

    /// Division is defined only when the divisor excludes zero.
    friend std::optional<Interval> checked_div(const Interval& a, const Interval& b) {
        if (b.contains_zero()) return std::nullopt;
        Rational p1 = a.lo / b.lo, p2 = a.lo / b.hi, p3 = a.hi / b.lo, p4 = a.hi / b.hi;
        return Interval(min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4)));
    }

    friend Interval hull(const Interval& a, const Interval& b) {
        return Interval(min(a.lo, b.lo), max(a.hi, b.hi));
    }

    bool disjoint_from(const Interval& o) const { return hi < o.lo || o.hi < lo; }
};

inline Interval ipow(const Interval& x, unsigned e) {
    if (e == 0) return Interval(Rational(1));
    Interval r = x;
    for (unsigned i = 1; i < e; ++i) r = r * x;
    // Even powers are nonnegative; tighten the naive product enclosure.
    if (e % 2 == 0 && r.lo.sign() < 0) r.lo = Rational(0);
    return r;
}

}  // namespace realrank
