#include "acs/interval.hpp"

#include <algorithm>

namespace acs {

Interval intersect(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) return Interval::empty();
    double lo = std::max(a.lo(), b.lo());
    double hi = std::min(a.hi(), b.hi());
    if (lo > hi) return Interval::empty();
    return Interval(lo, hi);
}

Interval clip_unit(const Interval& a) {
    return intersect(a, Interval::unit());
}

}  // namespace acs
