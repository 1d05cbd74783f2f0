#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "icv/errors.hpp"

namespace icv {

// Value in (-inf, +inf]: a finite double or positive infinity.
// NaN and -inf are rejected at construction; addition absorbs into +inf.
class ExtReal {
public:
    ExtReal() = default;

    ExtReal(double v) : v_(v) {
        if (std::isnan(v) || v == -std::numeric_limits<double>::infinity())
            throw InputError("ExtReal: value must be finite or +infinity");
    }

    static ExtReal infinity() {
        ExtReal e;
        e.v_ = std::numeric_limits<double>::infinity();
        return e;
    }

    bool finite() const { return std::isfinite(v_); }
    bool infinite() const { return !finite(); }

    // Finite value; throws on +infinity.
    double value() const {
        if (!finite()) throw InputError("ExtReal: value() on +infinity");
        return v_;
    }

    double value_or(double fallback) const { return finite() ? v_ : fallback; }

    // Underlying double, +inf allowed. Safe for comparisons and min/max.
    double raw() const { return v_; }

    ExtReal& operator+=(ExtReal o) {
        v_ += o.v_;  // finite+finite, or absorbed into +inf
        return *this;
    }

    friend ExtReal operator+(ExtReal a, ExtReal b) { return a += b; }

    // Scale by a positive factor (keeps +inf).
    ExtReal scaled(double positive_factor) const {
        ExtReal e;
        e.v_ = v_ * positive_factor;
        return e;
    }

    friend bool operator==(ExtReal a, ExtReal b) { return a.v_ == b.v_; }
    friend bool operator!=(ExtReal a, ExtReal b) { return a.v_ != b.v_; }
    friend bool operator<(ExtReal a, ExtReal b) { return a.v_ < b.v_; }
    friend bool operator<=(ExtReal a, ExtReal b) { return a.v_ <= b.v_; }
    friend bool operator>(ExtReal a, ExtReal b) { return a.v_ > b.v_; }
    friend bool operator>=(ExtReal a, ExtReal b) { return a.v_ >= b.v_; }

    std::string str() const { return finite() ? std::to_string(v_) : "+inf"; }

private:
    double v_ = 0.0;
};

}  // namespace icv
