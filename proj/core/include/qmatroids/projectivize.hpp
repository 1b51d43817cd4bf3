#pragma once

// Projectivization: the matroid P(M) on the projective points of E whose rank
// of a point set is the q-matroid rank of its span.  The rank oracle
// delegates to the source q-matroid through the span, so the defining
// identity r(S) = rho(<S>) holds by construction rather than by claim.
//
// The verifiers in this header re-prove, instance by instance, the structural
// correspondences between a q-matroid and its projectivization: equality of
// characteristic polynomials, the flat-lattice isomorphism, and the
// realization of q-matroid minors as matroid minors of P(M).

#include <cstdint>
#include <optional>
#include <string>

#include "qmatroids/matroid.hpp"
#include "qmatroids/qmatroid.hpp"

namespace qmatroids {

// Outcome of one verification: which statement was checked, on what instance,
// whether it held, and a human-readable witness when it did not.
struct CheckResult {
    std::string theorem;
    std::string instance;
    std::string status;  // "pass" or "fail"
    std::string witness; // empty on pass

    bool pass() const { return status == "pass"; }
};

class Projectivization {
public:
    // Guard: the projective space may hold at most 63 points.
    explicit Projectivization(const QMatroid& source);

    const QMatroid& source() const { return source_; }
    const Matroid& matroid() const { return matroid_; }
    const std::vector<ProjPoint>& points() const { return points_; }
    std::uint64_t full_mask() const { return matroid_.full_mask(); }

    // Position of a projective point in the canonical groundset order.
    std::size_t index_of(const ProjPoint& p) const;

    // Span of the points selected by the mask.
    Subspace span_of(std::uint64_t mask) const;

    // P(F): the points lying inside the subspace.
    std::uint64_t flat_image(const Subspace& f) const;

    // The subspace whose points are exactly the given set, if the set of
    // chosen vectors (plus zero) is additively closed; absent otherwise.
    std::optional<Subspace> flat_preimage(std::uint64_t mask) const;

    // Q_V: the points outside V.  Q_V^{*A} additionally removes A, which must
    // be contained in Q_V.
    std::uint64_t q_set(const Subspace& v) const;
    std::uint64_t q_set_star(const Subspace& v, std::uint64_t a) const;

private:
    QMatroid source_;
    std::vector<ProjPoint> points_;
    Matroid matroid_;
};

// For a decomposition W + V = E (direct sum), checks that the projectivized
// contraction P(M/W) agrees with (P(M)/S) minus Q_V^{*S}, where S consists of
// the points of a basis of W, under the transversal bijection sending a coset
// to its unique representative in V; and that P(M minus V-perp) agrees with
// P(M) minus Q_V.  Rank agreement is exhaustive up to 16-point groundsets and
// sampled above that.
CheckResult verify_minor_correspondence(const QMatroid& qm, const Subspace& w,
                                        const Subspace& v, std::string instance = "");

// chi_M = chi_P(M), and chi_{M/V} = chi_{P(M)/P(V)} for every subspace V.
CheckResult char_poly_consistency(const QMatroid& qm, std::string instance = "");

// The flat lattices of M and P(M) are isomorphic under F -> P(F):
// heights, covers, and the meet/join tables all transport.
CheckResult verify_flat_lattice_iso(const QMatroid& qm, std::string instance = "");

// For a flat F of M, the lattice of flats of M/F maps isomorphically onto the
// lattice of flats of P(M)/P(F) via F' -> P(preimage of F') - P(F).
CheckResult verify_contraction_flat_iso(const QMatroid& qm, const Subspace& flat,
                                        std::string instance = "");

} // namespace qmatroids
