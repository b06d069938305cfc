#ifndef PEAKRED_DEGREE_HPP
#define PEAKRED_DEGREE_HPP

#include <compare>
#include <string>

namespace peakred {

/// Total degree with a distinguished value for the zero polynomial.
/// MinusInfinity compares below every integer and absorbs under addition.
class Degree {
public:
    constexpr Degree() = default;
    constexpr Degree(int d) : value_(d), finite_(true) {}

    static constexpr Degree minus_infinity() { return Degree(); }

    constexpr bool is_finite() const { return finite_; }
    constexpr int value() const { return value_; }

    friend constexpr bool operator==(Degree a, Degree b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
        if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
        return a.value_ <=> b.value_;
    }
    friend constexpr Degree operator+(Degree a, Degree b) {
        if (!a.finite_ || !b.finite_) return Degree();
        return Degree(a.value_ + b.value_);
    }

    std::string str() const { return finite_ ? std::to_string(value_) : std::string("-inf"); }

private:
    int value_ = 0;
    bool finite_ = false;
};

}  // namespace peakred

#endif
