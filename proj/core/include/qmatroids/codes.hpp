#pragma once

// F_{q^m}-linear codes in the rank and Hamming metrics.
//
// A LinearCode is the row space over GF(q^m) of a full-rank k x n generator
// matrix.  Rank-metric notions are taken relative to the base field GF(q):
// a codeword v expands to the n x m matrix over GF(q) whose i-th row holds
// the coordinates of v_i in a fixed basis of GF(q^m) over GF(q) (the power
// basis unless one is supplied); the rank weight is the rank of that matrix
// and the rank support its column space, a subspace of F_q^n.  Hamming
// supports are position masks.
//
// The module also builds the associated matroid and q-matroid (ranks of
// column selections of G over GF(q^m)), the Hamming-metric companion code
// G * H whose positions are the projective points of F_q^n, weight
// distributions and matroid weight enumerators, and the brute-force ordered
// tuple counting engine that the critical-theorem checks run against.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qmatroids/qmatroid.hpp"

namespace qmatroids {

enum class Metric { hamming, rank };

class LinearCode {
public:
    // Row space of `generator` (k x n over GF(q^m)).  The generator must
    // have full row rank; InvalidArgument (NotFullRank) otherwise.  k = 0
    // gives the zero code.
    explicit LinearCode(Matrix<ExtField> generator);

    const ExtFieldPtr& field() const { return generator_.field(); }
    const FieldPtr& base_field() const { return generator_.field()->base(); }
    unsigned q() const { return base_field()->q(); }
    unsigned m() const { return field()->m(); }
    std::size_t length() const { return generator_.cols(); }    // n
    std::size_t dimension() const { return generator_.rows(); } // k
    const Matrix<ExtField>& generator() const { return generator_; }

    // |C| = q^{mk}.  Guard: fits comfortably in 64 bits (TooLarge).
    std::uint64_t size() const;

    // All q^{mk} codewords in coefficient counting order over the rows of G
    // (the row-0 coefficient is the least significant digit).  Computed once
    // and shared between copies.  Guard: size() <= 2^20 (TooLarge).
    const std::vector<std::vector<Elem>>& codewords() const;

private:
    struct Cache;
    Matrix<ExtField> generator_;
    std::shared_ptr<Cache> cache_;
};

// ---- weights and supports ------------------------------------------------

// Number of nonzero entries.
unsigned hamming_weight(const std::vector<Elem>& v);

// The position set {i : v_i != 0} as a bit mask.  Guard: at most 63
// positions (TooLarge).
std::uint64_t hamming_support(const std::vector<Elem>& v);
// Union over a set of vectors.
std::uint64_t hamming_support_set(const std::vector<std::vector<Elem>>& vs);

// Column space of the expansion of v: a subspace of F_q^n.  `basis` selects
// the expansion basis of GF(q^m) over GF(q); the power basis when null.
Subspace rank_support(const ExtFieldPtr& ext, const std::vector<Elem>& v,
                      const std::vector<Elem>* basis = nullptr);
unsigned rank_weight(const ExtFieldPtr& ext, const std::vector<Elem>& v,
                     const std::vector<Elem>* basis = nullptr);
// Subspace sum over a set of vectors; `n` fixes the ambient for empty sets.
Subspace rank_support_set(const ExtFieldPtr& ext, std::size_t n,
                          const std::vector<std::vector<Elem>>& vs,
                          const std::vector<Elem>* basis = nullptr);

// ---- support filtrations ---------------------------------------------------

// Codewords whose Hamming support is exactly `a`, by filtering the codeword
// list.
std::vector<std::vector<Elem>> codewords_with_hamming_support(const LinearCode& c,
                                                              std::uint64_t a);
// Codewords whose rank support is exactly `v`, by filtering the codeword
// list.
std::vector<std::vector<Elem>> codewords_with_rank_support(const LinearCode& c,
                                                           const Subspace& v);

// ---- associated matroid and q-matroid -------------------------------------

// rho(V) = rank over GF(q^m) of G * Y_V, for Y_V any basis matrix of V; the
// value does not depend on the basis choice.
QMatroid associated_qmatroid(const LinearCode& c);
// r(A) = rank over GF(q^m) of the columns of G selected by A.  Element
// labels are the positions "1" .. "n".
Matroid associated_matroid(const LinearCode& c);

// ---- the Hamming-metric companion code -------------------------------------

// n x (q^n-1)/(q-1) matrix over GF(q) whose columns are the canonical
// projective representatives in canonical order.  Guard: point count
// <= 2^12 (TooLarge).
Matrix<Field> projective_rep_matrix(const FieldPtr& field, std::size_t n);

// The code generated by G * H.  H defaults to projective_rep_matrix of the
// base field; a supplied H must consist of pairwise distinct projective
// representatives covering all of PF_q^n (InvalidArgument, BadH otherwise).
LinearCode hamming_assoc_code(const LinearCode& c,
                              const std::optional<Matrix<Field>>& h = std::nullopt);

// ---- weight distributions and enumerators ----------------------------------

struct WeightDistribution {
    Metric metric = Metric::hamming;
    std::vector<std::uint64_t> counts; // W^(i) for 0 <= i <= n

    std::uint64_t total() const;
    std::string str() const; // "0:1 1:0 2:3"
};

// Exact counts by full codeword enumeration.  Guard: size() <= 2^20.
WeightDistribution weight_distribution(const LinearCode& c, Metric metric);

// A^{(i)}: the sum of characteristic polynomials of the contractions by the
// flats of corank i (size n - i on the matroid side, dimension n - i on the
// q-matroid side); the zero polynomial when no flat matches.
Polynomial weight_enumerator(const Matroid& m, std::size_t i);
Polynomial weight_enumerator(const QMatroid& m, std::size_t i);
// The defining sums: contractions by the complement of every i-subset,
// respectively by the orthogonal space of every i-dimensional subspace.
// Cross-checks the flats form.  Guard on the matroid side: at most 20
// elements (TooLarge).
Polynomial weight_enumerator_definition(const Matroid& m, std::size_t i);
Polynomial weight_enumerator_definition(const QMatroid& m, std::size_t i);

// ---- critical counting ------------------------------------------------------

// Number of ordered t-tuples of codewords (repetition allowed; the all-zero
// tuple counts) whose rank supports sum to exactly `w`.  Guard:
// size()^t <= 2^22 (TooLarge).
std::uint64_t critical_count(const LinearCode& c, const Subspace& w, unsigned t);
// The predicted count: the characteristic polynomial of m / w^perp
// evaluated at q^(ext_degree * t).
long long critical_predict(const QMatroid& m, const Subspace& w, unsigned t,
                           unsigned ext_degree);

// Hamming-side analogues: ordered t-tuples whose Hamming supports union to
// exactly `a`, against the characteristic polynomial of m / (S - A)
// evaluated at alphabet^t.
std::uint64_t critical_count_hamming(const LinearCode& c, std::uint64_t a, unsigned t);
long long critical_predict_hamming(const Matroid& m, std::uint64_t a, unsigned t,
                                   std::uint64_t alphabet);

} // namespace qmatroids
