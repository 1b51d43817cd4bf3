#pragma once

// Classical matroids on small groundsets.
//
// Subsets are 64-bit masks over an ordered groundset of at most 63 labeled
// elements, which is enough for the projectivizations this library builds
// (projective groundsets reach 63 points at q = 2, n = 6).  The rank oracle
// is memoized behind a shared, mutex-guarded cache, so copies of a Matroid
// are cheap and share their work.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qmatroids/errors.hpp"
#include "qmatroids/polynomial.hpp"

namespace qmatroids {

// The lattice of flats: masks sorted by (height, mask), upper covers, and the
// Moebius function from the bottom flat.  Meet and join are intrinsic to the
// family: meet is the intersection (always a flat), join the least flat
// containing the union.
struct FlatLattice {
    std::vector<std::uint64_t> flats;
    std::vector<int> height;
    std::vector<std::vector<std::size_t>> covers;
    std::vector<long long> mobius; // mu(bottom, F)

    std::size_t size() const { return flats.size(); }
    std::size_t bottom() const { return 0; }
    std::size_t top() const { return flats.size() - 1; }
    std::optional<std::size_t> find(std::uint64_t flat) const;
    std::size_t index_of(std::uint64_t flat) const;
    std::size_t meet_idx(std::size_t i, std::size_t j) const;
    std::size_t join_idx(std::size_t i, std::size_t j) const;
};

class Matroid {
public:
    Matroid(std::vector<std::string> labels, std::function<int(std::uint64_t)> rank_fn);

    static Matroid uniform(std::size_t k, std::size_t n);

    std::size_t size() const;
    const std::vector<std::string>& labels() const;
    std::uint64_t full_mask() const;
    std::string subset_str(std::uint64_t mask) const;

    int rank(std::uint64_t subset) const;
    int rank_full() const { return rank(full_mask()); }

    std::uint64_t closure(std::uint64_t subset) const;
    std::uint64_t loops() const { return closure(0); }
    bool is_loop(std::size_t e) const;
    bool is_coloop(std::size_t e) const;

    Matroid deletion(std::uint64_t a) const;
    Matroid contraction(std::uint64_t a) const;
    Matroid dual() const;
    // Adds a single loop with the given label (made unique if necessary).
    Matroid loop_extension(std::string label = "o") const;

    const FlatLattice& flats() const; // computed once, cached

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

enum class CharPolyMethod { definition, flats, recursive };

// Characteristic polynomial.  The definition method sums over all subsets
// (guard: at most 20 elements); the flats method sums Moebius values over the
// flat lattice and is the default; the recursive method removes the
// canonically least non-coloop element, falling back to the product rule when
// every element is a coloop.
Polynomial char_poly(const Matroid& m, CharPolyMethod method = CharPolyMethod::flats);

struct AxiomViolation {
    std::string axiom;
    std::string witness;
};

struct AxiomReport {
    std::vector<AxiomViolation> violations;
    std::size_t checked = 0;
    bool exhaustive = false;
    bool ok() const { return violations.empty(); }
};

// (R1) 0 <= r(A) <= |A|, (R2) monotonicity, (R3) submodularity.  Exhaustive
// over all pairs up to 12 elements, otherwise a seeded sample of pairs.
AxiomReport check_matroid_axioms(const Matroid& m, unsigned seed = 1,
                                 std::size_t sample_pairs = 200000);

// Rank-preserving bijection test.  With an explicit bijection (element i of
// `a` maps to bijection[i] of `b`) all subsets are compared; without one a
// search over permutations runs for groundsets of at most 8 elements.
// Returns the witness bijection on success.
std::optional<std::vector<std::size_t>> matroids_equivalent(
    const Matroid& a, const Matroid& b,
    const std::optional<std::vector<std::size_t>>& bijection = std::nullopt);

} // namespace qmatroids
