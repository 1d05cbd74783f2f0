#include "icv/vec.hpp"

#include <cmath>
#include <cstdio>

namespace icv {

namespace detail {

void check_coords(const std::vector<double>& c, const char* what) {
    if (c.empty() || c.size() > kMaxDimension)
        throw InputError(std::string(what) + ": dimension must be in [1, " +
                         std::to_string(kMaxDimension) + "], got " + std::to_string(c.size()));
    for (double v : c)
        if (!std::isfinite(v)) throw InputError(std::string(what) + ": entries must be finite");
}

std::string coords_str(const std::vector<double>& c) {
    std::string s = "(";
    char buf[48];
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", c[i]);
        if (i) s += ", ";
        s += buf;
    }
    s += ")";
    return s;
}

}  // namespace detail

void check_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b)
        throw InputError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
}

double pairing(const Covector& xstar, const Vector& x) {
    check_same_dim(xstar.dim(), x.dim(), "pairing");
    double s = 0;
    for (std::size_t i = 0; i < x.dim(); ++i) s += xstar[i] * x[i];
    return s;
}

Vector operator+(const Vector& a, const Vector& b) {
    check_same_dim(a.dim(), b.dim(), "Vector+");
    std::vector<double> c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a[i] + b[i];
    return Vector(std::move(c));
}

Vector operator-(const Vector& a, const Vector& b) {
    check_same_dim(a.dim(), b.dim(), "Vector-");
    std::vector<double> c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a[i] - b[i];
    return Vector(std::move(c));
}

Vector operator*(double s, const Vector& a) {
    std::vector<double> c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) c[i] = s * a[i];
    return Vector(std::move(c));
}

Covector operator+(const Covector& a, const Covector& b) {
    check_same_dim(a.dim(), b.dim(), "Covector+");
    std::vector<double> c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a[i] + b[i];
    return Covector(std::move(c));
}

Covector operator-(const Covector& a) {
    std::vector<double> c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) c[i] = -a[i];
    return Covector(std::move(c));
}

Covector operator*(double s, const Covector& a) {
    std::vector<double> c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) c[i] = s * a[i];
    return Covector(std::move(c));
}

bool lex_less(const Vector& a, const Vector& b) {
    for (std::size_t i = 0; i < a.dim() && i < b.dim(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return a.dim() < b.dim();
}

Covector as_covector(const Vector& v) { return Covector(v.coords()); }
Vector as_vector(const Covector& c) { return Vector(c.coords()); }

}  // namespace icv
