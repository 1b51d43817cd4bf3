#pragma once

// The lattice of subspaces of F_q^n.
//
// A Subspace is canonically represented by the RREF basis of its row space
// with zero rows removed, so equality of subspaces is equality of entries.
// The canonical order on subspaces is dimension first, then lexicographic on
// the basis entries read row-major.  Projective points carry the normalized
// representative whose first nonzero coordinate is 1 and are ordered by the
// little-endian integer value of that representative.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmatroids/matrix.hpp"

namespace qmatroids {

// Little-endian integer encoding of a coordinate vector: coordinate 0 is the
// least significant digit.
std::uint64_t vec_index(const std::vector<Elem>& v, unsigned q);
std::vector<Elem> vec_from_index(std::uint64_t idx, unsigned q, std::size_t n);

struct ProjPoint {
    std::vector<Elem> rep;   // normalized representative
    std::uint64_t index = 0; // vec_index of rep; canonical order is ascending index

    bool operator==(const ProjPoint&) const = default;
    bool operator<(const ProjPoint& o) const { return index < o.index; }
    std::string str() const;
};

class Subspace {
public:
    static Subspace zero(FieldPtr field, std::size_t n);
    static Subspace full(FieldPtr field, std::size_t n);
    static Subspace span(FieldPtr field, std::size_t n, const std::vector<std::vector<Elem>>& vectors);
    static Subspace from_matrix(const Matrix<Field>& rows_span);
    static Subspace line(FieldPtr field, const std::vector<Elem>& v);

    const FieldPtr& field() const { return basis_.field(); }
    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_dim(); }

    // dim x n matrix in reduced row echelon form, zero rows removed.
    const Matrix<Field>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains_vector(const std::vector<Elem>& v) const;
    bool contains(const Subspace& other) const; // other <= this
    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

    // Canonical key: (dim, entries row-major).  Doubles as a memoization key.
    std::vector<std::uint32_t> key() const;

    // All q^dim vectors, in coefficient counting order.
    std::vector<std::vector<Elem>> vectors() const;

    std::string str() const;

private:
    Subspace(Matrix<Field> rref_basis, std::vector<std::size_t> pivots)
        : basis_(std::move(rref_basis)), pivots_(std::move(pivots)) {}

    Matrix<Field> basis_;
    std::vector<std::size_t> pivots_;
};

bool subspace_less(const Subspace& a, const Subspace& b);

Subspace meet(const Subspace& u, const Subspace& v); // intersection
Subspace join(const Subspace& u, const Subspace& v); // sum
// Orthogonal complement with respect to the standard dot product.
Subspace orthogonal(const Subspace& v);

// Every subspace of F_q^n (optionally of one dimension), canonically ordered.
// Guard: q^n <= 2^20.
std::vector<Subspace> enumerate_subspaces(const FieldPtr& field, std::size_t n,
                                          std::optional<std::size_t> dim = std::nullopt);
// Every subspace contained in V, canonically ordered.
std::vector<Subspace> subspaces_of(const Subspace& v,
                                   std::optional<std::size_t> dim = std::nullopt);

ProjPoint normalize_point(const FieldPtr& field, std::vector<Elem> v);
// The (q^n - 1)/(q - 1) points of the full space, canonically ordered.
std::vector<ProjPoint> all_projective_points(const FieldPtr& field, std::size_t n);
// The points lying inside V, canonically ordered.
std::vector<ProjPoint> projective_points(const Subspace& v);

// E/V with the canonical transversal: the unit vectors at the non-pivot
// columns of V's basis.  Quotient vectors live in F_q^(n-dim V), coordinates
// taken along the transversal.
class QuotientSpace {
public:
    QuotientSpace(FieldPtr field, std::size_t n, Subspace v);

    const Subspace& modulus() const { return v_; }
    std::size_t ambient_dim() const { return n_; }
    std::size_t qdim() const { return n_ - v_.dim(); }
    const std::vector<std::vector<Elem>>& transversal() const { return transversal_; }

    std::vector<Elem> project(std::vector<Elem> v) const;
    std::vector<Elem> lift(const std::vector<Elem>& vq) const;
    Subspace project_subspace(const Subspace& w) const;
    Subspace preimage(const Subspace& wq) const;

private:
    FieldPtr field_;
    std::size_t n_;
    Subspace v_;
    std::vector<std::vector<Elem>> transversal_;
    std::vector<std::size_t> free_cols_;
};

// Moebius function of the subspace lattice.  The recursive form is the
// defining computation; mobius_subspace uses the closed form
// (-1)^k q^(k(k-1)/2) for intervals starting at the zero subspace, which the
// test suite pins against the recursion before anything else relies on it.
long long mobius_subspace(const Subspace& u, const Subspace& v);
long long mobius_subspace_recursive(const Subspace& u, const Subspace& v);
long long mobius_closed_form(std::size_t k, unsigned q);

long long gaussian_binomial(std::size_t n, std::size_t k, unsigned q);

} // namespace qmatroids
