// Closed subintervals of [0,1] and the running-intersection reporter shared
// by all confidence-sequence engines.

#pragma once

#include <cstdint>
#include <stdexcept>

namespace acs {

// A closed interval [lo, hi]. The empty set is a distinct state, not a
// lo > hi encoding; callers must check empty() before reading bounds.
class Interval {
public:
    Interval(double lo, double hi) : lo_(lo), hi_(hi), empty_(false) {
        if (!(lo <= hi)) throw std::invalid_argument("Interval: lo must be <= hi");
    }

    static Interval empty() { return Interval(); }
    static Interval unit() { return Interval(0.0, 1.0); }

    bool is_empty() const { return empty_; }

    double lo() const {
        if (empty_) throw std::logic_error("Interval: lo() on empty interval");
        return lo_;
    }
    double hi() const {
        if (empty_) throw std::logic_error("Interval: hi() on empty interval");
        return hi_;
    }

    double width() const { return empty_ ? 0.0 : hi_ - lo_; }

    // Closed-interval membership.
    bool contains(double x) const { return !empty_ && lo_ <= x && x <= hi_; }

    bool operator==(const Interval& o) const {
        if (empty_ || o.empty_) return empty_ == o.empty_;
        return lo_ == o.lo_ && hi_ == o.hi_;
    }

private:
    Interval() : lo_(0.0), hi_(0.0), empty_(true) {}

    double lo_;
    double hi_;
    bool empty_;
};

// Set intersection; empty when the intervals are disjoint.
Interval intersect(const Interval& a, const Interval& b);

// Intersection with [0,1]. Accepts bounds outside the unit interval, as
// produced by closed-form radii before clipping.
Interval clip_unit(const Interval& a);

// Miscoverage budget and stream horizon shared by every engine.
struct CsConfig {
    double alpha = 0.05;
    std::int64_t horizon = 10000;

    void validate() const {
        if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("CsConfig: alpha must be in (0,1)");
        if (horizon < 1) throw std::invalid_argument("CsConfig: horizon must be >= 1");
    }
};

// One observation of a stream; t is 1-based and strictly increasing.
struct StreamRecord {
    std::int64_t t = 0;
    double x = 0.0;
};

// Intersection of all per-step sets seen so far. Widths never increase.
// Hitting the empty set is reported as an event rather than an error: it can
// only happen when the underlying guarantee failed by chance or by misuse.
class RunningIntersection {
public:
    // Intersects the per-step set into the current state. Returns true when
    // this push made the intersection empty (the logging event); pushes after
    // that return false and leave the state empty.
    bool push(const Interval& step_set) {
        bool was_empty = current_.is_empty();
        current_ = intersect(current_, step_set);
        if (current_.is_empty() && !was_empty) {
            ever_empty_ = true;
            return true;
        }
        return false;
    }

    const Interval& current() const { return current_; }
    bool ever_empty() const { return ever_empty_; }

private:
    Interval current_ = Interval::unit();
    bool ever_empty_ = false;
};

}  // namespace acs
