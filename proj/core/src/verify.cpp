#include "qmatroids/verify.hpp"

#include <algorithm>

namespace qmatroids {

namespace {

void sort_canonical(std::vector<CheckResult>& rs) {
    std::stable_sort(rs.begin(), rs.end(), [](const CheckResult& a, const CheckResult& b) {
        if (a.instance != b.instance) return a.instance < b.instance;
        return a.theorem < b.theorem;
    });
}

CheckResult make_result(std::string theorem, std::string instance, bool ok,
                        std::string witness) {
    return CheckResult{std::move(theorem), std::move(instance),
                       ok ? "pass" : "fail", ok ? std::string() : std::move(witness)};
}

// Total number of subspaces of F_q^n, compared against a cap.  Computed with
// 128-bit intermediates and saturation so absurd (q, n) bail out instead of
// overflowing.
bool subspace_count_within(unsigned q, std::size_t n, std::uint64_t cap) {
    using u128 = unsigned __int128;
    const u128 sat = u128(1) << 64;
    auto qpow = [&](std::size_t e) {
        u128 r = 1;
        while (e--) {
            r *= q;
            if (r >= sat) return sat;
        }
        return r;
    };
    u128 total = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        u128 val = 1; // [n choose k]_q; every prefix product below is integral
        for (std::size_t j = 1; j <= k; ++j) val = val * (qpow(n - j + 1) - 1) / (qpow(j) - 1);
        total += val;
        if (total > cap) return false;
    }
    return true;
}

// A direct-sum complement of w, obtained by extending its basis with
// standard unit vectors.
Subspace complement_of(const Subspace& w) {
    auto f = w.field();
    const std::size_t n = w.ambient_dim();
    std::vector<std::vector<Elem>> span_rows;
    for (std::size_t r = 0; r < w.dim(); ++r) span_rows.push_back(w.basis().row(r));
    std::vector<std::vector<Elem>> comp_rows;
    Subspace acc = w;
    for (std::size_t i = 0; i < n && acc.dim() < n; ++i) {
        std::vector<Elem> e(n, 0);
        e[i] = 1;
        if (acc.contains_vector(e)) continue;
        comp_rows.push_back(e);
        span_rows.push_back(e);
        acc = Subspace::span(f, n, span_rows);
    }
    return Subspace::span(f, n, comp_rows);
}

} // namespace

bool all_pass(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass()) return false;
    return true;
}

std::vector<CheckResult> verify_charpoly_suite(const QMatroid& qm, const std::string& label) {
    std::vector<CheckResult> out;

    Polynomial by_def = char_poly(qm, CharPolyMethod::definition);
    Polynomial by_flats = char_poly(qm, CharPolyMethod::flats);
    Polynomial by_rec = char_poly(qm, CharPolyMethod::recursive);
    bool agree = by_def == by_flats && by_flats == by_rec;
    out.push_back(make_result("charpoly-three-methods", label, agree,
                              "definition=" + by_def.str() + " flats=" + by_flats.str() +
                                  " recursive=" + by_rec.str()));

    // Loops force the zero polynomial; the check is vacuous on loopless input.
    bool has_loops = qm.loops_subspace().dim() > 0;
    bool zero_ok = !has_loops || (by_def.is_zero() && by_flats.is_zero() && by_rec.is_zero());
    out.push_back(make_result("charpoly-loops-zero", label, zero_ok,
                              "loops present but chi = " + by_flats.str()));

    sort_canonical(out);
    return out;
}

std::vector<CheckResult> verify_projectivization_suite(const QMatroid& qm,
                                                       const std::string& label) {
    std::vector<CheckResult> out;
    out.push_back(char_poly_consistency(qm, label));
    out.push_back(verify_flat_lattice_iso(qm, label));

    const QFlatLattice fl = qm.flats();
    for (const Subspace& f : fl.flats)
        out.push_back(verify_contraction_flat_iso(qm, f, label + ":flat=" + f.str()));

    for (const Subspace& w : enumerate_subspaces(qm.field(), qm.dim()))
        out.push_back(
            verify_minor_correspondence(qm, w, complement_of(w), label + ":W=" + w.str()));

    sort_canonical(out);
    return out;
}

std::vector<CheckResult> verify_maps_suite(const std::vector<MapCorpusItem>& corpus) {
    std::vector<CheckResult> out;
    for (const MapCorpusItem& item : corpus) {
        out.push_back(check_proj_commutation(item.map, item.name));
        out.push_back(check_sharp_commutation(item.map, item.domain, item.codomain, item.name));
        out.push_back(check_map_functor(item.map, item.domain, item.codomain, item.name));

        StrongMapReport rep = check_strong_characterization(item.map, item.domain, item.codomain);
        out.push_back(make_result("strong-characterization", item.name, rep.consistent(),
                                  rep.witness.empty() ? "lattice conditions disagree with the "
                                                        "rank definition of q-strong"
                                                      : rep.witness));
    }
    sort_canonical(out);
    return out;
}

std::vector<CheckResult> verify_critical_suite(const LinearCode& c, unsigned t,
                                               const std::string& label,
                                               std::vector<CriticalRow>* rows) {
    std::vector<CheckResult> out;
    if (!subspace_count_within(c.q(), c.length(), 1ull << 16))
        throw GuardError("TooLarge: the critical suite checks every subspace of the ambient "
                         "space, capped at 2^16 subspaces");
    QMatroid qm = associated_qmatroid(c);
    for (const Subspace& w : enumerate_subspaces(c.base_field(), c.length())) {
        std::uint64_t count = critical_count(c, w, t);
        long long predicted = critical_predict(qm, w, t, c.m());
        bool ok = predicted >= 0 && count == static_cast<std::uint64_t>(predicted);
        if (rows) rows->push_back(CriticalRow{w, t, count, predicted});
        out.push_back(make_result("critical-theorem",
                                  label + ":t=" + std::to_string(t) + ":W=" + w.str(), ok,
                                  "counted " + std::to_string(count) + " tuples, predicted " +
                                      std::to_string(predicted)));
    }
    sort_canonical(out);
    return out;
}

std::vector<CheckResult> verify_weights_suite(const LinearCode& c, const std::string& label) {
    std::vector<CheckResult> out;
    const unsigned q = c.q();
    const std::size_t n = c.length();
    long long qm_val = 1; // q^m <= 2^16 by the extension-field guard
    for (unsigned i = 0; i < c.m(); ++i) qm_val *= q;

    WeightDistribution wr = weight_distribution(c, Metric::rank);
    QMatroid qmat = associated_qmatroid(c);

    std::uint64_t total = 0;
    for (std::uint64_t cnt : wr.counts) total += cnt;
    out.push_back(make_result("weights-total", label, total == c.size(),
                              "rank weight counts sum to " + std::to_string(total) +
                                  ", expected " + std::to_string(c.size())));

    for (std::size_t i = 0; i <= n; ++i) {
        long long predicted = weight_enumerator(qmat, i).eval(qm_val);
        bool ok = predicted >= 0 && wr.counts[i] == static_cast<std::uint64_t>(predicted);
        out.push_back(make_result("weights-rank-enumerator",
                                  label + ":i=" + std::to_string(i), ok,
                                  "distribution has " + std::to_string(wr.counts[i]) +
                                      ", enumerator predicts " + std::to_string(predicted)));
    }

    LinearCode ch = hamming_assoc_code(c);
    WeightDistribution wh = weight_distribution(ch, Metric::hamming);
    Matroid mh = associated_matroid(ch);

    // Transport to the companion code: the Hamming distribution of C^H is the
    // rank distribution of C placed at the projective indices, zero elsewhere.
    {
        bool ok = true;
        std::string witness;
        std::vector<std::uint64_t> expected(wh.counts.size(), 0);
        std::uint64_t qpow = 1; // q^n stays small: the companion groundset fits 63 points
        for (std::size_t i = 0; i < n; ++i) qpow *= q;
        for (std::size_t i = 0; i <= n; ++i) {
            std::uint64_t qni = qpow;
            for (std::size_t d = 0; d < i; ++d) qni /= q;
            std::size_t j = static_cast<std::size_t>((qpow - qni) / (q - 1));
            expected[j] += wr.counts[i];
        }
        for (std::size_t j = 0; j < wh.counts.size(); ++j)
            if (wh.counts[j] != expected[j]) {
                ok = false;
                witness = "companion Hamming count at weight " + std::to_string(j) + " is " +
                          std::to_string(wh.counts[j]) + ", expected " +
                          std::to_string(expected[j]);
                break;
            }
        out.push_back(make_result("weights-hamming-projective", label, ok, witness));
    }

    // The companion code's Hamming distribution matches its own matroid
    // enumerators.
    {
        bool ok = true;
        std::string witness;
        for (std::size_t j = 0; j < wh.counts.size(); ++j) {
            long long predicted = weight_enumerator(mh, j).eval(qm_val);
            if (predicted < 0 || wh.counts[j] != static_cast<std::uint64_t>(predicted)) {
                ok = false;
                witness = "Hamming weight " + std::to_string(j) + " count " +
                          std::to_string(wh.counts[j]) + " but enumerator predicts " +
                          std::to_string(predicted);
                break;
            }
        }
        out.push_back(make_result("weights-hamming-enumerator", label, ok, witness));
    }

    sort_canonical(out);
    return out;
}

} // namespace qmatroids
