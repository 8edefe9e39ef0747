#pragma once

#include <iosfwd>

namespace greyrank {

// Closed interval grey number [lo, hi].
//
// Construction enforces lo <= hi and finite bounds. Non-negativity is not a
// type invariant; it is checked where it matters (mul, normalization, problem
// validation).
class GreyInterval {
public:
    constexpr GreyInterval() = default;
    GreyInterval(double lo, double hi);

    // Degenerate interval [v, v].
    static GreyInterval point(double v) { return GreyInterval(v, v); }

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    double width() const noexcept { return hi_ - lo_; }
    bool is_degenerate() const noexcept { return lo_ == hi_; }
    bool is_nonnegative() const noexcept { return lo_ >= 0.0; }

    // True when this interval lies inside [lo, hi].
    bool within(double lo, double hi) const noexcept { return lo_ >= lo && hi_ <= hi; }
    bool contains(double v) const noexcept { return lo_ <= v && v <= hi_; }

    friend bool operator==(const GreyInterval&, const GreyInterval&) = default;

private:
    double lo_ = 0.0;
    double hi_ = 0.0;
};

// Two-dimensional Euclidean distance between the bound pairs.
double distance(const GreyInterval& a, const GreyInterval& b) noexcept;

GreyInterval add(const GreyInterval& a, const GreyInterval& b);

// Throws ValidationError for c < 0.
GreyInterval scale(double c, const GreyInterval& a);

// Product of two non-negative intervals; throws ValidationError otherwise.
GreyInterval mul(const GreyInterval& a, const GreyInterval& b);

inline GreyInterval operator+(const GreyInterval& a, const GreyInterval& b) { return add(a, b); }
inline GreyInterval operator*(double c, const GreyInterval& a) { return scale(c, a); }
inline GreyInterval operator*(const GreyInterval& a, const GreyInterval& b) { return mul(a, b); }

std::ostream& operator<<(std::ostream& os, const GreyInterval& a);

} // namespace greyrank
