#pragma once

// Univariate polynomials with exact 64-bit integer coefficients, used for
// characteristic polynomials and weight enumerators.  All sizes handled here
// stay far below the overflow line, see the guards on the callers.

#include <cstdint>
#include <string>
#include <vector>

namespace qmatroids {

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(long long constant) { if (constant) c_ = {constant}; }

    static Polynomial monomial(long long coef, std::size_t deg);
    static Polynomial x() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? -1 : static_cast<int>(c_.size()) - 1; }
    long long coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    Polynomial operator+(const Polynomial&) const;
    Polynomial operator-(const Polynomial&) const;
    Polynomial operator*(const Polynomial&) const;
    Polynomial& operator+=(const Polynomial& r) { *this = *this + r; return *this; }
    Polynomial& operator-=(const Polynomial& r) { *this = *this - r; return *this; }
    bool operator==(const Polynomial&) const = default;

    long long eval(long long x) const;

    // Human-readable form in descending powers, e.g. "x^2 - 3x + 2" or "0".
    std::string str() const;

private:
    void trim();
    std::vector<long long> c_; // ascending, no trailing zeros
};

} // namespace qmatroids
