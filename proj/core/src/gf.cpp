#include "qmatroids/gf.hpp"
#include "qmatroids/matrix.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace qmatroids {

namespace {

// Polynomials over an arbitrary coefficient arithmetic, little-endian, used
// only while bootstrapping field tables.  Arith must provide add/mul/neg/inv.
template <class Arith>
std::vector<Elem> poly_trim(std::vector<Elem> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

template <class Arith>
std::vector<Elem> poly_mul(const Arith& k, const std::vector<Elem>& a, const std::vector<Elem>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Elem> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = k.add(c[i + j], k.mul(a[i], b[j]));
    return poly_trim<Arith>(std::move(c));
}

// Remainder of a modulo m; m must be monic.
template <class Arith>
std::vector<Elem> poly_mod(const Arith& k, std::vector<Elem> a, const std::vector<Elem>& m) {
    a = poly_trim<Arith>(std::move(a));
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        Elem lead = a.back();
        std::size_t shift = a.size() - 1 - dm;
        if (lead != 0)
            for (std::size_t i = 0; i < m.size(); ++i)
                a[i + shift] = k.sub(a[i + shift], k.mul(lead, m[i]));
        a.pop_back();
        a = poly_trim<Arith>(std::move(a));
    }
    return a;
}

// Long division: returns true and the (quotient-ignored) remainder test when
// divisor divides a exactly.  divisor must be monic.
template <class Arith>
bool poly_divides(const Arith& k, const std::vector<Elem>& divisor, std::vector<Elem> a) {
    return poly_mod(k, std::move(a), divisor).empty();
}

template <class Arith>
bool poly_irreducible(const Arith& k, unsigned q, const std::vector<Elem>& m) {
    const std::size_t deg = m.size() - 1;
    // Trial division by every monic polynomial of degree 1..deg/2.  Fine at
    // the sizes we allow (q^(deg/2) <= 256 whenever q^deg <= 2^16).
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        unsigned long long count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= q;
        for (unsigned long long idx = 0; idx < count; ++idx) {
            std::vector<Elem> cand(d + 1, 0);
            unsigned long long t = idx;
            for (std::size_t i = 0; i < d; ++i) { cand[i] = static_cast<Elem>(t % q); t /= q; }
            cand[d] = 1;
            if (poly_divides(k, cand, m)) return false;
        }
    }
    return true;
}

// Arithmetic of GF(p) for prime p, the bootstrap layer below Field.
struct PrimeArith {
    unsigned p;
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return (a + p - b % p) % p; }
    Elem neg(Elem a) const { return (p - a % p) % p; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
};

struct PrimePower {
    unsigned p, d;
};

PrimePower factor_prime_power(unsigned q) {
    if (q < 2) throw InvalidArgument("field order must be at least 2, got " + std::to_string(q));
    unsigned p = 0;
    for (unsigned c = 2; c * c <= q; ++c)
        if (q % c == 0) { p = c; break; }
    if (p == 0) return {q, 1};
    unsigned d = 0, t = q;
    while (t % p == 0) { t /= p; ++d; }
    if (t != 1)
        throw InvalidArgument("NonPrimePower: " + std::to_string(q) + " is not a prime power");
    return {p, d};
}

// Elements of GF(p^d) as little-endian base-p digit encodings of polynomials.
std::vector<Elem> digits_of(Elem a, unsigned p, unsigned d) {
    std::vector<Elem> v(d, 0);
    for (unsigned i = 0; i < d && a; ++i) { v[i] = a % p; a /= p; }
    return v;
}

Elem index_of(const std::vector<Elem>& v, unsigned p) {
    Elem a = 0;
    for (std::size_t i = v.size(); i-- > 0;) a = a * p + v[i];
    return a;
}

} // namespace

Field::Field(unsigned q) {
    if (q > 256) throw GuardError("TooLarge: base fields are supported up to q = 256");
    auto [p, d] = factor_prime_power(q);
    q_ = q; p_ = p; deg_ = d;
    PrimeArith k{p};

    if (d == 1) {
        modulus_ = {0, 1};
    } else {
        // Canonically least irreducible monic of degree d over GF(p): scan
        // constant-through-(d-1) coefficient vectors in index order.
        unsigned long long count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (unsigned long long idx = 0; idx < count; ++idx) {
            std::vector<Elem> cand(d + 1, 0);
            unsigned long long t = idx;
            for (unsigned i = 0; i < d; ++i) { cand[i] = static_cast<Elem>(t % p); t /= p; }
            cand[d] = 1;
            if (poly_irreducible(k, p, cand)) { modulus_ = cand; break; }
        }
    }

    // Addition: digitwise mod p, tabulated.
    add_.resize(static_cast<std::size_t>(q) * q);
    neg_.resize(q);
    for (Elem a = 0; a < q; ++a) {
        auto da = digits_of(a, p, d);
        std::vector<Elem> dn(d);
        for (unsigned i = 0; i < d; ++i) dn[i] = k.neg(da[i]);
        neg_[a] = index_of(dn, p);
        for (Elem b = 0; b < q; ++b) {
            auto db = digits_of(b, p, d);
            std::vector<Elem> dc(d);
            for (unsigned i = 0; i < d; ++i) dc[i] = k.add(da[i], db[i]);
            add_[a * q + b] = index_of(dc, p);
        }
    }

    // Multiplication via a generator of the multiplicative group.
    auto mul_poly = [&](Elem a, Elem b) {
        auto prod = poly_mul(k, poly_trim<PrimeArith>(digits_of(a, p, d)), poly_trim<PrimeArith>(digits_of(b, p, d)));
        prod = poly_mod(k, std::move(prod), modulus_);
        prod.resize(d, 0);
        return index_of(prod, p);
    };
    log_.assign(q, 0);
    antilog_.assign(q - 1, 0);
    if (q == 2) {
        antilog_ = {1};
    } else {
        bool found = false;
        for (Elem g = 2; g < q && !found; ++g) {
            // Step through powers of g; g generates iff it first returns to 1
            // after exactly q-1 steps.
            Elem x = 1;
            unsigned steps = 0;
            std::vector<Elem> seen;
            seen.reserve(q - 1);
            do {
                seen.push_back(x);
                x = mul_poly(x, g);
                ++steps;
            } while (x != 1 && steps < q);
            if (steps == q - 1) {
                for (unsigned i = 0; i < q - 1; ++i) { antilog_[i] = seen[i]; log_[seen[i]] = i; }
                found = true;
            }
        }
        if (!found)
            throw Error("internal: no generator found for GF(" + std::to_string(q) + ")");
    }

    // Verify the tables: every nonzero element must have a working inverse.
    for (Elem a = 1; a < q; ++a) {
        if (mul(a, inv(a)) != 1 || mul(a, 1) != a)
            throw Error("internal: arithmetic table verification failed for GF(" + std::to_string(q) + ")");
        if (add(a, neg(a)) != 0)
            throw Error("internal: additive table verification failed for GF(" + std::to_string(q) + ")");
    }
}

Elem Field::pow(Elem a, long long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw InvalidArgument("Field::pow: zero to a negative power");
        return 0;
    }
    long long ord = q_ - 1;
    long long r = e % ord;
    if (r < 0) r += ord;
    return antilog_[(static_cast<long long>(log_[a]) * r) % ord];
}

std::shared_ptr<const Field> Field::make(unsigned q) {
    static std::mutex mx;
    static std::map<unsigned, std::shared_ptr<const Field>> cache;
    std::lock_guard<std::mutex> lock(mx);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
    auto f = std::shared_ptr<const Field>(new Field(q));
    cache.emplace(q, f);
    return f;
}

// Arithmetic of a base Field, coefficient layer for ExtField bootstrap.
namespace {
struct BaseArith {
    const Field* f;
    Elem add(Elem a, Elem b) const { return f->add(a, b); }
    Elem sub(Elem a, Elem b) const { return f->sub(a, b); }
    Elem neg(Elem a) const { return f->neg(a); }
    Elem mul(Elem a, Elem b) const { return f->mul(a, b); }
};
} // namespace

ExtField::ExtField(FieldPtr base, unsigned m, std::vector<Elem> modulus)
    : base_(std::move(base)), m_(m), modulus_(std::move(modulus)) {
    const unsigned q = base_->q();
    unsigned long long ord = 1;
    for (unsigned i = 0; i < m_; ++i) {
        ord *= q;
        if (ord > (1ull << 16))
            throw GuardError("TooLarge: extension fields are supported up to q^m = 2^16");
    }
    order_ = static_cast<unsigned>(ord);

    qpow_.resize(m_ + 1);
    qpow_[0] = 1;
    for (unsigned i = 1; i <= m_; ++i) qpow_[i] = qpow_[i - 1] * q;

    BaseArith k{base_.get()};
    if (modulus_.size() != m_ + 1)
        throw InvalidArgument("modulus must have degree m = " + std::to_string(m_));
    for (Elem c : modulus_)
        if (c >= q) throw InvalidArgument("UnknownElement: modulus coefficient out of range");
    if (modulus_.back() == 0)
        throw InvalidArgument("modulus must have degree m = " + std::to_string(m_));
    if (modulus_.back() != 1) {
        // Scale to monic; the quotient ring is unchanged.
        Elem s = base_->inv(modulus_.back());
        for (Elem& c : modulus_) c = base_->mul(c, s);
    }
    if (m_ > 1 && !poly_irreducible(k, q, modulus_))
        throw InvalidArgument("Reducible: modulus factors over the base field");

    gamma_.resize(m_);
    for (unsigned j = 0; j < m_; ++j) gamma_[j] = qpow_[j];

    // log/antilog over a generator, powers computed with polynomial reduction.
    auto mul_poly = [&](Elem a, Elem b) {
        auto pa = digits(a), pb = digits(b);
        auto prod = poly_mul(k, poly_trim<BaseArith>(std::move(pa)), poly_trim<BaseArith>(std::move(pb)));
        prod = poly_mod(k, std::move(prod), modulus_);
        prod.resize(m_, 0);
        return from_digits(prod);
    };
    log_.assign(order_, 0);
    antilog_.assign(order_ - 1, 0);
    bool found = false;
    for (Elem g = 2; g < order_ && !found; ++g) {
        Elem x = 1;
        unsigned steps = 0;
        std::vector<Elem> seen;
        seen.reserve(order_ - 1);
        do {
            seen.push_back(x);
            x = mul_poly(x, g);
            ++steps;
        } while (x != 1 && steps < order_);
        if (steps == order_ - 1) {
            for (unsigned i = 0; i + 1 < order_; ++i) { antilog_[i] = seen[i]; log_[seen[i]] = i; }
            found = true;
        }
    }
    if (!found && order_ == 2) { antilog_ = {1}; log_ = {0, 0}; found = true; }
    if (!found)
        throw Error("internal: no generator found for GF(" + std::to_string(order_) + ")");

    for (Elem a = 1; a < order_; ++a)
        if (mul(a, inv(a)) != 1)
            throw Error("internal: arithmetic table verification failed for GF(" + std::to_string(order_) + ")");
}

std::shared_ptr<const ExtField> ExtField::make(FieldPtr base, unsigned m,
                                               std::optional<std::vector<Elem>> modulus) {
    if (!base) throw InvalidArgument("ExtField::make: null base field");
    if (m < 1) throw InvalidArgument("ExtField::make: m must be at least 1");
    if (modulus) return std::shared_ptr<const ExtField>(new ExtField(std::move(base), m, std::move(*modulus)));

    const unsigned q = base->q();
    unsigned long long ord = 1;
    for (unsigned i = 0; i < m; ++i) {
        ord *= q;
        if (ord > (1ull << 16))
            throw GuardError("NoDefault: no built-in modulus beyond q^m = 2^16; supply one explicitly");
    }
    if (m == 1) return std::shared_ptr<const ExtField>(new ExtField(std::move(base), m, std::vector<Elem>{0, 1}));

    // Canonically least irreducible monic of degree m over the base.
    BaseArith k{base.get()};
    unsigned long long count = 1;
    for (unsigned i = 0; i < m; ++i) count *= q;
    for (unsigned long long idx = 0; idx < count; ++idx) {
        std::vector<Elem> cand(m + 1, 0);
        unsigned long long t = idx;
        for (unsigned i = 0; i < m; ++i) { cand[i] = static_cast<Elem>(t % q); t /= q; }
        cand[m] = 1;
        if (poly_irreducible(k, q, cand))
            return std::shared_ptr<const ExtField>(new ExtField(std::move(base), m, std::move(cand)));
    }
    throw Error("internal: no irreducible modulus found");
}

Elem ExtField::add(Elem a, Elem b) const {
    const unsigned q = base_->q();
    Elem r = 0;
    for (unsigned j = m_; j-- > 0;) {
        Elem da = (a / qpow_[j]) % q, db = (b / qpow_[j]) % q;
        r = r * q + base_->add(da, db);
    }
    return r;
}

Elem ExtField::neg(Elem a) const {
    const unsigned q = base_->q();
    Elem r = 0;
    for (unsigned j = m_; j-- > 0;) {
        Elem da = (a / qpow_[j]) % q;
        r = r * q + base_->neg(da);
    }
    return r;
}

Elem ExtField::pow(Elem a, long long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw InvalidArgument("ExtField::pow: zero to a negative power");
        return 0;
    }
    long long ord = order_ - 1;
    long long r = e % ord;
    if (r < 0) r += ord;
    return antilog_[(static_cast<long long>(log_[a]) * r) % ord];
}

Elem ExtField::embed(Elem base_elem) const {
    if (base_elem >= base_->q()) throw InvalidArgument("UnknownElement: not a base field element");
    return base_elem;
}

std::vector<Elem> ExtField::digits(Elem a) const {
    if (a >= order_) throw InvalidArgument("UnknownElement: index out of range for GF(" + std::to_string(order_) + ")");
    const unsigned q = base_->q();
    std::vector<Elem> v(m_, 0);
    for (unsigned j = 0; j < m_; ++j) { v[j] = a % q; a /= q; }
    return v;
}

Elem ExtField::from_digits(const std::vector<Elem>& d) const {
    if (d.size() > m_) throw InvalidArgument("coefficient vector longer than extension degree");
    const unsigned q = base_->q();
    Elem a = 0;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] >= q) throw InvalidArgument("UnknownElement: coefficient out of range");
        a = a * q + d[i];
    }
    return a;
}

std::vector<Elem> ExtField::coords(Elem a, const std::vector<Elem>& basis) const {
    if (basis.size() != m_)
        throw InvalidArgument("basis must have m = " + std::to_string(m_) + " elements");
    // Solve sum_j x_j * basis[j] = a over the base field.  The m x m system
    // has (i, j) entry equal to digit i of basis[j]; eliminate with the
    // digits of a as right-hand side.
    std::vector<std::vector<Elem>> aug(m_, std::vector<Elem>(m_ + 1, 0));
    for (unsigned j = 0; j < m_; ++j) {
        auto dj = digits(basis[j]);
        for (unsigned i = 0; i < m_; ++i) aug[i][j] = dj[i];
    }
    auto rhs = digits(a);
    for (unsigned i = 0; i < m_; ++i) aug[i][m_] = rhs[i];

    unsigned r = 0;
    std::vector<int> pivot_col(m_, -1);
    for (unsigned c = 0; c < m_ && r < m_; ++c) {
        unsigned pr = r;
        while (pr < m_ && aug[pr][c] == 0) ++pr;
        if (pr == m_) continue;
        std::swap(aug[pr], aug[r]);
        Elem s = base_->inv(aug[r][c]);
        for (unsigned j = 0; j <= m_; ++j) aug[r][j] = base_->mul(aug[r][j], s);
        for (unsigned i = 0; i < m_; ++i) {
            if (i == r || aug[i][c] == 0) continue;
            Elem f = aug[i][c];
            for (unsigned j = 0; j <= m_; ++j)
                aug[i][j] = base_->sub(aug[i][j], base_->mul(f, aug[r][j]));
        }
        pivot_col[r] = static_cast<int>(c);
        ++r;
    }
    if (r < m_) throw InvalidArgument("basis is linearly dependent over the base field");
    std::vector<Elem> sol(m_, 0);
    for (unsigned i = 0; i < m_; ++i) sol[pivot_col[i]] = aug[i][m_];
    return sol;
}

Matrix<Field> gamma_expand(const ExtFieldPtr& ext, const std::vector<Elem>& v,
                           const std::vector<Elem>* basis) {
    const unsigned m = ext->m();
    Matrix<Field> out(ext->base(), v.size(), m);
    for (std::size_t i = 0; i < v.size(); ++i) {
        // With the power basis the coordinates are exactly the digits.
        std::vector<Elem> c = basis ? ext->coords(v[i], *basis) : ext->digits(v[i]);
        out.set_row(i, c);
    }
    return out;
}

} // namespace qmatroids
