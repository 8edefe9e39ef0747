#include "greyrank/grey_interval.hpp"

#include "greyrank/errors.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace greyrank {

namespace {

std::string describe(double lo, double hi) {
    std::ostringstream os;
    os.precision(17);
    os << '[' << lo << ", " << hi << ']';
    return os.str();
}

} // namespace

GreyInterval::GreyInterval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw ValidationError("interval bounds must be finite: " + describe(lo, hi));
    if (lo > hi)
        throw ValidationError("interval lower bound exceeds upper bound: " + describe(lo, hi));
}

double distance(const GreyInterval& a, const GreyInterval& b) noexcept {
    return std::hypot(b.hi() - a.hi(), b.lo() - a.lo());
}

GreyInterval add(const GreyInterval& a, const GreyInterval& b) {
    return GreyInterval(a.lo() + b.lo(), a.hi() + b.hi());
}

GreyInterval scale(double c, const GreyInterval& a) {
    if (!(c >= 0.0))
        throw ValidationError("interval scale factor must be non-negative");
    return GreyInterval(c * a.lo(), c * a.hi());
}

GreyInterval mul(const GreyInterval& a, const GreyInterval& b) {
    if (!a.is_nonnegative() || !b.is_nonnegative())
        throw ValidationError("interval product is defined only for non-negative intervals, got " +
                              describe(a.lo(), a.hi()) + " and " + describe(b.lo(), b.hi()));
    return GreyInterval(a.lo() * b.lo(), a.hi() * b.hi());
}

std::ostream& operator<<(std::ostream& os, const GreyInterval& a) {
    return os << '[' << a.lo() << ", " << a.hi() << ']';
}

} // namespace greyrank
