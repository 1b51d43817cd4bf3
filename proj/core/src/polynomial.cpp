#include "qmatroids/polynomial.hpp"

#include <algorithm>

namespace qmatroids {

Polynomial Polynomial::monomial(long long coef, std::size_t deg) {
    Polynomial p;
    if (coef == 0) return p;
    p.c_.assign(deg + 1, 0);
    p.c_[deg] = coef;
    return p;
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::operator+(const Polynomial& r) const {
    Polynomial out;
    out.c_.assign(std::max(c_.size(), r.c_.size()), 0);
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = coeff(i) + r.coeff(i);
    out.trim();
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& r) const {
    Polynomial out;
    out.c_.assign(std::max(c_.size(), r.c_.size()), 0);
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = coeff(i) - r.coeff(i);
    out.trim();
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& r) const {
    Polynomial out;
    if (c_.empty() || r.c_.empty()) return out;
    out.c_.assign(c_.size() + r.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < r.c_.size(); ++j)
            out.c_[i + j] += c_[i] * r.c_[j];
    out.trim();
    return out;
}

long long Polynomial::eval(long long x) const {
    long long acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::string Polynomial::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        long long c = c_[i];
        if (c == 0) continue;
        bool first = s.empty();
        if (first) {
            if (c < 0) s += "-";
        } else {
            s += (c < 0) ? " - " : " + ";
        }
        long long a = c < 0 ? -c : c;
        if (a != 1 || i == 0) s += std::to_string(a);
        if (i >= 1) {
            s += "x";
            if (i >= 2) s += "^" + std::to_string(i);
        }
    }
    return s;
}

} // namespace qmatroids
