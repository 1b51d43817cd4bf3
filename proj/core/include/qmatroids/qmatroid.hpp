#pragma once

// q-Matroids: rank functions on the subspace lattice of F_q^n satisfying
// boundedness, monotonicity and submodularity.
//
// Minors change the ambient space.  Deletion by V restricts to the orthogonal
// complement of V and re-coordinatizes along its canonical basis; contraction
// by V moves to the quotient E/V, coordinatized along the canonical
// transversal of QuotientSpace.  Nested contractions are flattened eagerly:
// contracting a contraction pulls the modulus back to the original ambient
// space and contracts there, so the representation depth stays at one.

#include <functional>
#include <memory>
#include <optional>

#include "qmatroids/matroid.hpp"
#include "qmatroids/subspace.hpp"

namespace qmatroids {

struct QFlatLattice {
    std::vector<Subspace> flats; // sorted by (height, canonical key)
    std::vector<int> height;
    std::vector<std::vector<std::size_t>> covers;
    std::vector<long long> mobius; // mu(bottom, F)

    std::size_t size() const { return flats.size(); }
    std::size_t bottom() const { return 0; }
    std::size_t top() const { return flats.size() - 1; }
    std::optional<std::size_t> find(const Subspace& f) const;
    std::size_t index_of(const Subspace& f) const;
    std::size_t meet_idx(std::size_t i, std::size_t j) const;
    std::size_t join_idx(std::size_t i, std::size_t j) const;
};

class QMatroid {
public:
    QMatroid(FieldPtr field, std::size_t n, std::function<int(const Subspace&)> rho);

    static QMatroid uniform(FieldPtr field, std::size_t n, std::size_t k);
    // Reconstructs the q-matroid whose flats are exactly the given family;
    // the flat axioms are verified and NotAFlatFamily reported otherwise.
    static QMatroid from_flats(FieldPtr field, std::size_t n, std::vector<Subspace> flats);

    const FieldPtr& field() const;
    std::size_t dim() const; // ambient dimension

    int rank(const Subspace& v) const; // memoized
    int rank_full() const;

    Subspace qclosure(const Subspace& v) const;
    Subspace loops_subspace() const { return qclosure(Subspace::zero(field(), dim())); }
    bool is_qcoloop(const std::vector<Elem>& w) const;

    QMatroid deletion(const Subspace& v) const;    // lives on the complement of v
    QMatroid contraction(const Subspace& v) const; // lives on E/v
    QMatroid dualized() const;                     // same ambient, standard dot product

    const QFlatLattice& flats() const; // computed once, cached

    // Set when this q-matroid is a contraction: the base it was contracted
    // from and the modulus inside the base's ambient space.
    struct ContractionInfo;
    const ContractionInfo* contraction_info() const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

struct QMatroid::ContractionInfo {
    QMatroid base;
    Subspace modulus;
};

struct QRecursionStats {
    bool coloop_branch = false;
    std::size_t contractions = 0;
};

// Characteristic polynomial of a q-matroid.  The definition method sums
// lattice Moebius values over every subspace; the flats method (default) sums
// over the flat lattice and vanishes when loops exist; the recursive method
// applies the deletion/contraction rule with the canonically least projective
// point v and, on the coloop branch, the canonically least point e outside
// the hyperplane orthogonal to v.
Polynomial char_poly(const QMatroid& m, CharPolyMethod method = CharPolyMethod::flats,
                     QRecursionStats* stats = nullptr);

// (qR1) 0 <= rho(V) <= dim V, (qR2) monotonicity, (qR3) submodularity,
// exhaustively over all pairs of subspaces.  Guard: q^n <= 2^10.
AxiomReport check_qmatroid_axioms(const QMatroid& m);

// Rank-preserving lattice equivalence.  With an explicit invertible matrix
// the agreement rho_a(V) = rho_b(V * iso) is checked on every subspace; with
// none, all of GL(n, q) is searched (guard: q^n <= 2^6).  Returns a witness.
std::optional<Matrix<Field>> q_equivalent(const QMatroid& a, const QMatroid& b,
                                          const std::optional<Matrix<Field>>& iso = std::nullopt);

// Flat family axioms for an explicit family: the full space belongs to it,
// it is closed under intersection, and for every member F and point e
// outside F the least member containing both covers F.
AxiomReport check_flat_family(const FieldPtr& field, std::size_t n,
                              const std::vector<Subspace>& flats);

} // namespace qmatroids
