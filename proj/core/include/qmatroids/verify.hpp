#pragma once

// Theorem-verification suites: each runner re-proves one family of
// statements against a concrete input and returns one CheckResult per
// instance checked.  Results are sorted by instance key (then theorem), so
// a suite's output is canonical regardless of evaluation order.
//
// Suites:
//   charpoly          three characteristic-polynomial methods agree; loops
//                     force the zero polynomial.
//   projectivization  chi and flat-lattice transport across P(M), the
//                     contraction lattices, and the minor correspondence
//                     for every subspace with a canonical complement.
//   maps              projective-map commutation, sharp commutation, the
//                     weak/strong functor, and the strong-map
//                     characterization, per corpus entry.
//   critical          brute-force support counts equal the predicted
//                     characteristic-polynomial values, per subspace.
//   weights           rank weight distribution matches the enumerators and
//                     transports to the Hamming side of the companion code.

#include <string>
#include <vector>

#include "qmatroids/serialize.hpp"

namespace qmatroids {

bool all_pass(const std::vector<CheckResult>& results);

std::vector<CheckResult> verify_charpoly_suite(const QMatroid& qm,
                                               const std::string& label = "qmatroid");

std::vector<CheckResult> verify_projectivization_suite(const QMatroid& qm,
                                                       const std::string& label = "qmatroid");

std::vector<CheckResult> verify_maps_suite(const std::vector<MapCorpusItem>& corpus);

// Checks every subspace W of the ambient space at the given tuple length t.
// When `rows` is non-null the raw counts are appended there, one row per W,
// in the same canonical order.
std::vector<CheckResult> verify_critical_suite(const LinearCode& c, unsigned t,
                                               const std::string& label = "code",
                                               std::vector<CriticalRow>* rows = nullptr);

std::vector<CheckResult> verify_weights_suite(const LinearCode& c,
                                              const std::string& label = "code");

} // namespace qmatroids
