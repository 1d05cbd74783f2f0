#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "icv/errors.hpp"

namespace icv {

inline constexpr std::size_t kMaxDimension = 16;

namespace detail {
void check_coords(const std::vector<double>& c, const char* what);
std::string coords_str(const std::vector<double>& c);
}  // namespace detail

// Point in R^n. Entries are finite; 1 <= n <= kMaxDimension.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::vector<double> coords) : c_(std::move(coords)) {
        detail::check_coords(c_, "Vector");
    }
    Vector(std::initializer_list<double> coords) : Vector(std::vector<double>(coords)) {}

    static Vector zero(std::size_t n) { return Vector(std::vector<double>(n, 0.0)); }

    std::size_t dim() const { return c_.size(); }
    double operator[](std::size_t i) const { return c_[i]; }
    double& operator[](std::size_t i) { return c_[i]; }
    const std::vector<double>& coords() const { return c_; }

    double norm2() const {
        double s = 0;
        for (double v : c_) s += v * v;
        return std::sqrt(s);
    }
    double norm1() const {
        double s = 0;
        for (double v : c_) s += std::abs(v);
        return s;
    }
    double norm_inf() const {
        double s = 0;
        for (double v : c_) s = std::max(s, std::abs(v));
        return s;
    }

    std::string str() const { return detail::coords_str(c_); }

private:
    std::vector<double> c_;
};

// Linear functional on R^n, represented by its coefficient array.
class Covector {
public:
    Covector() = default;
    explicit Covector(std::vector<double> coords) : c_(std::move(coords)) {
        detail::check_coords(c_, "Covector");
    }
    Covector(std::initializer_list<double> coords) : Covector(std::vector<double>(coords)) {}

    static Covector zero(std::size_t n) { return Covector(std::vector<double>(n, 0.0)); }

    std::size_t dim() const { return c_.size(); }
    double operator[](std::size_t i) const { return c_[i]; }
    double& operator[](std::size_t i) { return c_[i]; }
    const std::vector<double>& coords() const { return c_; }

    double norm2() const {
        double s = 0;
        for (double v : c_) s += v * v;
        return std::sqrt(s);
    }

    std::string str() const { return detail::coords_str(c_); }

private:
    std::vector<double> c_;
};

void check_same_dim(std::size_t a, std::size_t b, const char* what);

double pairing(const Covector& xstar, const Vector& x);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(double s, const Vector& a);
Covector operator+(const Covector& a, const Covector& b);
Covector operator-(const Covector& a);
Covector operator*(double s, const Covector& a);

// Strict lexicographic order on coordinates (deterministic tie-breaking).
bool lex_less(const Vector& a, const Vector& b);

Covector as_covector(const Vector& v);
Vector as_vector(const Covector& c);

}  // namespace icv
