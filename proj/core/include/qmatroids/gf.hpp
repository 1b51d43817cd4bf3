#pragma once

// Finite field arithmetic on small fields.
//
// A Field models GF(q) for a prime power q <= 256.  Elements are integer
// indices in [0, q): the index encodes the coefficient vector of the element
// over the prime field, little-endian in base p.  Multiplication runs on
// log/antilog tables built from a fixed generator; addition runs on a full
// q-by-q table.  Both are verified at construction.
//
// An ExtField models GF(q^m) on top of a base Field, with elements encoded
// the same way as indices in [0, q^m) whose base-q digits are the coordinates
// with respect to the power basis of a fixed irreducible modulus.  When no
// modulus is supplied the canonically least irreducible monic polynomial of
// degree m is used, which makes the encoding reproducible across runs.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qmatroids/errors.hpp"

namespace qmatroids {

using Elem = std::uint32_t;

class Field {
public:
    // Factory with a process-wide cache, so repeated requests for the same q
    // share one set of tables.  Throws InvalidArgument if q is not a prime
    // power, GuardError if q > 256.
    static std::shared_ptr<const Field> make(unsigned q);

    unsigned q() const { return q_; }
    unsigned characteristic() const { return p_; }
    unsigned degree() const { return deg_; }

    // Coefficients over GF(p) of the modulus used to build the field,
    // little-endian with the leading 1 included.  For prime fields this is
    // just (0, 1), i.e. the polynomial x.
    const std::vector<Elem>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }

    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return antilog_[(log_[a] + log_[b]) % (q_ - 1)];
    }
    Elem inv(Elem a) const {
        if (a == 0) throw InvalidArgument("Field::inv: division by zero");
        return antilog_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, long long e) const;

    bool operator==(const Field& other) const { return q_ == other.q_; }

private:
    explicit Field(unsigned q);

    unsigned q_ = 0, p_ = 0, deg_ = 0;
    std::vector<Elem> modulus_;
    std::vector<Elem> add_, neg_, log_, antilog_;
};

using FieldPtr = std::shared_ptr<const Field>;

class ExtField {
public:
    // GF(q^m) over `base`.  `modulus`, when given, lists m+1 coefficients of
    // a degree-m polynomial over the base field, little-endian; it must be
    // irreducible (checked by trial division) or Reducible is reported via
    // InvalidArgument.  Without a modulus the canonical irreducible is
    // searched, which requires q^m <= 2^16.
    static std::shared_ptr<const ExtField> make(FieldPtr base, unsigned m,
                                                std::optional<std::vector<Elem>> modulus = std::nullopt);

    const FieldPtr& base() const { return base_; }
    unsigned m() const { return m_; }
    unsigned order() const { return order_; } // q^m
    const std::vector<Elem>& modulus() const { return modulus_; }

    // The power basis 1, g, g^2, ..., g^(m-1) where g is the residue of x.
    const std::vector<Elem>& gamma() const { return gamma_; }

    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return antilog_[(log_[a] + log_[b]) % (order_ - 1)];
    }
    Elem inv(Elem a) const {
        if (a == 0) throw InvalidArgument("ExtField::inv: division by zero");
        return antilog_[(order_ - 1 - log_[a]) % (order_ - 1)];
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, long long e) const;

    // Base-field elements embed as constants; with the index encoding this is
    // the identity on indices.
    Elem embed(Elem base_elem) const;

    // Little-endian base-q digits of an element, i.e. its coordinates with
    // respect to the power basis.
    std::vector<Elem> digits(Elem a) const;
    Elem from_digits(const std::vector<Elem>& d) const;

    // Coordinates of `a` with respect to an arbitrary basis of GF(q^m) over
    // the base field (defaults to the power basis).  The basis is checked for
    // linear independence once per call set; see gamma_expand in matrix.hpp
    // for the bulk interface.
    std::vector<Elem> coords(Elem a, const std::vector<Elem>& basis) const;

private:
    ExtField(FieldPtr base, unsigned m, std::vector<Elem> modulus);

    FieldPtr base_;
    unsigned m_ = 0;
    unsigned order_ = 0;
    std::vector<Elem> modulus_;
    std::vector<Elem> gamma_;
    std::vector<Elem> log_, antilog_;
    std::vector<unsigned> qpow_; // q^j for digit extraction
};

using ExtFieldPtr = std::shared_ptr<const ExtField>;

} // namespace qmatroids
