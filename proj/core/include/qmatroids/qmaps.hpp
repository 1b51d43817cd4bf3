#pragma once

// Maps between q-matroids and between their projectivization matroids.
//
// An LMap is a function between two ambient spaces over the same base field
// that carries subspaces to subspaces.  Linear maps (given by a matrix acting
// on row vectors) always qualify; arbitrary tabulated functions are accepted
// but exhaustively validated at construction.  Every LMap induces a map on
// extended projective spaces (points plus an adjoined zero element "o"), and
// the weak/strong map predicates exist in parallel at the q-matroid level and
// at the matroid level on the loop-extended projectivizations.  The verifiers
// at the bottom re-prove, instance by instance, that the two levels agree.

#include <functional>
#include <optional>

#include "qmatroids/projectivize.hpp"

namespace qmatroids {

class LMap {
public:
    // Linear map v -> v * A, with A of shape (domain dim) x (codomain dim).
    static LMap linear(Matrix<Field> a);

    // Arbitrary vector function between the two ambients.  The constructor
    // checks, subspace by subspace, that every image set is itself a
    // subspace; guard: q^(domain dim) <= 2^10.
    static LMap tabulated(FieldPtr field, std::size_t domain_dim, std::size_t codomain_dim,
                          std::function<std::vector<Elem>(const std::vector<Elem>&)> fn);

    const FieldPtr& field() const { return field_; }
    std::size_t domain_dim() const { return domain_dim_; }
    std::size_t codomain_dim() const { return codomain_dim_; }
    bool is_linear() const { return matrix_.has_value(); }

    std::vector<Elem> apply(const std::vector<Elem>& v) const;

    // The image sigma(V), which is a subspace of the codomain by the L-map
    // property.
    Subspace image(const Subspace& v) const;

private:
    LMap(FieldPtr field, std::size_t dom, std::size_t cod);

    FieldPtr field_;
    std::size_t domain_dim_, codomain_dim_;
    std::optional<Matrix<Field>> matrix_;
    std::function<std::vector<Elem>(const std::vector<Elem>&)> fn_;
};

LMap lmap_from_matrix(const Matrix<Field>& a);

// The induced map on extended projective spaces: each projective point of
// the domain goes to a projective point of the codomain or to the adjoined
// zero element "o"; o itself always maps to o.
class ExtendedProjMap {
public:
    explicit ExtendedProjMap(LMap sigma);

    const LMap& source() const { return sigma_; }
    const std::vector<ProjPoint>& domain_points() const { return dom_points_; }
    const std::vector<ProjPoint>& codomain_points() const { return cod_points_; }

    // Image of the i-th domain point as a position in the codomain point
    // list; codomain_points().size() encodes o.
    std::size_t apply_index(std::size_t i) const;

    // Image of a domain point; absent means o.
    std::optional<ProjPoint> apply(const ProjPoint& p) const;

private:
    LMap sigma_;
    std::vector<ProjPoint> dom_points_, cod_points_;
    std::vector<std::size_t> images_;
};

ExtendedProjMap induced_proj_map(const LMap& sigma);

// q-matroid level: sigma is q-weak if it never increases rank, and q-strong
// if the preimage of every flat of the codomain is a flat of the domain.
// Both quantifiers run exhaustively over the subspace lattice.
bool is_qweak(const LMap& sigma, const QMatroid& m, const QMatroid& n);
bool is_qstrong(const LMap& sigma, const QMatroid& m, const QMatroid& n);

// Matroid level, on the loop extensions M_o and N_o of the given matroids,
// whose groundsets must match the domain/codomain point lists of the map.
// The weak quantifier runs over all subsets when there are at most 2^16 of
// them and over `samples` random subsets otherwise.
bool is_weak(const ExtendedProjMap& sigma_l, const Matroid& m, const Matroid& n,
             unsigned seed = 1, std::size_t samples = 100000);
bool is_strong(const ExtendedProjMap& sigma_l, const Matroid& m, const Matroid& n);

// The induced flat map F -> cl_N(sigma(F)).  The argument must be a flat of
// the domain q-matroid; the result is a flat of the codomain q-matroid.
Subspace sigma_sharp(const LMap& sigma, const QMatroid& m, const QMatroid& n,
                     const Subspace& flat);

// Characterization of q-strong maps through sigma-sharp.  The report
// evaluates three lattice-level conditions:
//   - join_preserving:  sigma_sharp(F1 v F2) = sigma_sharp(F1) v sigma_sharp(F2)
//     for all flats F1, F2 of the domain;
//   - atoms_to_atoms:   sigma_sharp sends atoms of the domain flat lattice to
//     atoms or to the bottom of the codomain flat lattice;
//   - point_compatible: sigma_sharp(cl_M(<v>)) = cl_N(<sigma(v)>) for every
//     vector v of the domain, including v = 0 (which pins the bottom).
// Join preservation together with point compatibility is equivalent to the
// map being q-strong, and implies the atom condition.  The atom condition is
// strictly weaker: a lattice atom can be the closure of many lines, and its
// image does not pin down where each of those lines goes, so a map can
// satisfy it while some individual flat preimage fails to be a flat (the
// tests hold concrete witnesses).  `witness` describes the first violated
// clause, if any.
struct StrongMapReport {
    bool join_preserving = false;
    bool atoms_to_atoms = false;
    bool point_compatible = false;
    bool q_strong = false;
    std::string witness;

    bool conditions() const { return join_preserving && point_compatible; }
    bool consistent() const { return conditions() == q_strong; }
};

StrongMapReport check_strong_characterization(const LMap& sigma, const QMatroid& m,
                                              const QMatroid& n);

// P_o(sigma(v)) = sigma_L(P_o(v)) for every vector of the domain.
CheckResult check_proj_commutation(const LMap& sigma, std::string instance = "");

// P(sigma_sharp(F)) = sigma_L_sharp(P(F)) for every flat F of the domain.
CheckResult check_sharp_commutation(const LMap& sigma, const QMatroid& m, const QMatroid& n,
                                    std::string instance = "");

// The two levels agree: q-weak iff weak, q-strong iff strong (with the
// matroid predicates computed independently on the loop-extended
// projectivizations), and q-strong implies q-weak.
CheckResult check_map_functor(const LMap& sigma, const QMatroid& m, const QMatroid& n,
                              std::string instance = "");

} // namespace qmatroids
