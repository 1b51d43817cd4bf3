#include "qmatroids/codes.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <set>

namespace qmatroids {

namespace {

// base^exp, throwing TooLarge past `cap`.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap,
                          const char* what) {
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && x > cap / base)
            throw GuardError(std::string("TooLarge: ") + what);
        x *= base;
        if (x > cap) throw GuardError(std::string("TooLarge: ") + what);
    }
    return x;
}

std::uint64_t projective_count(unsigned q, std::size_t n, std::uint64_t cap,
                               const char* what) {
    // 1 + q + ... + q^(n-1)
    std::uint64_t total = 0, p = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total += p;
        if (total > cap) throw GuardError(std::string("TooLarge: ") + what);
        p *= q;
    }
    return total;
}

void check_ambient(const LinearCode& c, const Subspace& w) {
    if (w.field()->q() != c.q())
        throw InvalidArgument("FieldMismatch: subspace is over GF(" +
                              std::to_string(w.field()->q()) + ") but the code expands over GF(" +
                              std::to_string(c.q()) + ")");
    if (w.ambient_dim() != c.length())
        throw InvalidArgument("AmbientMismatch: subspace lives in dimension " +
                              std::to_string(w.ambient_dim()) + " but the code has length " +
                              std::to_string(c.length()));
}

void check_mask(const Matroid& m, std::uint64_t a) {
    if (a & ~m.full_mask())
        throw InvalidArgument("UnknownElement: subset mask has bits outside the groundset");
}

} // namespace

struct LinearCode::Cache {
    std::mutex mx;
    std::vector<std::vector<Elem>> words;
    bool ready = false;
};

LinearCode::LinearCode(Matrix<ExtField> generator)
    : generator_(std::move(generator)), cache_(std::make_shared<Cache>()) {
    if (rank(generator_) != generator_.rows())
        throw InvalidArgument("NotFullRank: generator matrix has dependent rows");
}

std::uint64_t LinearCode::size() const {
    return checked_pow(field()->order(), dimension(), std::uint64_t(1) << 62,
                       "code has more than 2^62 codewords");
}

const std::vector<std::vector<Elem>>& LinearCode::codewords() const {
    std::lock_guard<std::mutex> lock(cache_->mx);
    if (cache_->ready) return cache_->words;

    std::uint64_t total = size();
    if (total > (std::uint64_t(1) << 20))
        throw GuardError("TooLarge: codeword enumeration is limited to 2^20 words");

    const ExtField& f = *field();
    const std::uint64_t order = f.order();
    const std::size_t n = length(), k = dimension();
    cache_->words.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<Elem> w(n, 0);
        std::uint64_t rest = idx;
        for (std::size_t r = 0; r < k; ++r) {
            Elem coef = static_cast<Elem>(rest % order);
            rest /= order;
            if (coef == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                w[j] = f.add(w[j], f.mul(coef, generator_.at(r, j)));
        }
        cache_->words.push_back(std::move(w));
    }
    cache_->ready = true;
    return cache_->words;
}

// ---- weights and supports ------------------------------------------------

unsigned hamming_weight(const std::vector<Elem>& v) {
    return static_cast<unsigned>(std::count_if(v.begin(), v.end(),
                                               [](Elem e) { return e != 0; }));
}

std::uint64_t hamming_support(const std::vector<Elem>& v) {
    if (v.size() > 63)
        throw GuardError("TooLarge: Hamming support masks are limited to 63 positions");
    std::uint64_t a = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) a |= std::uint64_t(1) << i;
    return a;
}

std::uint64_t hamming_support_set(const std::vector<std::vector<Elem>>& vs) {
    std::uint64_t a = 0;
    for (const auto& v : vs) a |= hamming_support(v);
    return a;
}

Subspace rank_support(const ExtFieldPtr& ext, const std::vector<Elem>& v,
                      const std::vector<Elem>* basis) {
    return Subspace::from_matrix(gamma_expand(ext, v, basis).transpose());
}

unsigned rank_weight(const ExtFieldPtr& ext, const std::vector<Elem>& v,
                     const std::vector<Elem>* basis) {
    return static_cast<unsigned>(rank(gamma_expand(ext, v, basis)));
}

Subspace rank_support_set(const ExtFieldPtr& ext, std::size_t n,
                          const std::vector<std::vector<Elem>>& vs,
                          const std::vector<Elem>* basis) {
    Subspace acc = Subspace::zero(ext->base(), n);
    for (const auto& v : vs) acc = join(acc, rank_support(ext, v, basis));
    return acc;
}

// ---- support filtrations ---------------------------------------------------

std::vector<std::vector<Elem>> codewords_with_hamming_support(const LinearCode& c,
                                                              std::uint64_t a) {
    std::vector<std::vector<Elem>> out;
    for (const auto& w : c.codewords())
        if (hamming_support(w) == a) out.push_back(w);
    return out;
}

std::vector<std::vector<Elem>> codewords_with_rank_support(const LinearCode& c,
                                                           const Subspace& v) {
    check_ambient(c, v);
    std::vector<std::vector<Elem>> out;
    for (const auto& w : c.codewords())
        if (rank_support(c.field(), w) == v) out.push_back(w);
    return out;
}

// ---- associated matroid and q-matroid -------------------------------------

QMatroid associated_qmatroid(const LinearCode& c) {
    Matrix<ExtField> g = c.generator();
    ExtFieldPtr ext = c.field();
    return QMatroid(c.base_field(), c.length(), [g, ext](const Subspace& v) -> int {
        if (v.is_zero()) return 0;
        return static_cast<int>(rank(g * lift(v.basis().transpose(), ext)));
    });
}

Matroid associated_matroid(const LinearCode& c) {
    std::vector<std::string> labels;
    labels.reserve(c.length());
    for (std::size_t i = 1; i <= c.length(); ++i) labels.push_back(std::to_string(i));
    Matrix<ExtField> g = c.generator();
    return Matroid(std::move(labels), [g](std::uint64_t mask) -> int {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (mask & (std::uint64_t(1) << j)) cols.push_back(j);
        Matrix<ExtField> sub(g.field(), g.rows(), cols.size());
        for (std::size_t r = 0; r < g.rows(); ++r)
            for (std::size_t j = 0; j < cols.size(); ++j) sub.at(r, j) = g.at(r, cols[j]);
        return static_cast<int>(rank(sub));
    });
}

// ---- the Hamming-metric companion code -------------------------------------

Matrix<Field> projective_rep_matrix(const FieldPtr& field, std::size_t n) {
    projective_count(field->q(), n, std::uint64_t(1) << 12,
                     "projective representative matrices are limited to 2^12 columns");
    auto pts = all_projective_points(field, n);
    Matrix<Field> h(field, n, pts.size());
    for (std::size_t j = 0; j < pts.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) h.at(i, j) = pts[j].rep[i];
    return h;
}

LinearCode hamming_assoc_code(const LinearCode& c, const std::optional<Matrix<Field>>& h) {
    const std::size_t n = c.length();
    Matrix<Field> hm = h ? *h : projective_rep_matrix(c.base_field(), n);
    if (hm.field()->q() != c.q())
        throw InvalidArgument("BadH: H is over GF(" + std::to_string(hm.field()->q()) +
                              ") but the code expands over GF(" + std::to_string(c.q()) + ")");
    if (hm.rows() != n)
        throw InvalidArgument("BadH: H has " + std::to_string(hm.rows()) +
                              " rows but the code has length " + std::to_string(n));
    std::uint64_t expected = projective_count(c.q(), n, std::uint64_t(1) << 12,
                                              "projective representative matrices are limited "
                                              "to 2^12 columns");
    if (hm.cols() != expected)
        throw InvalidArgument("BadH: expected " + std::to_string(expected) +
                              " columns, one per projective point, got " +
                              std::to_string(hm.cols()));
    std::set<std::uint64_t> seen;
    for (std::size_t j = 0; j < hm.cols(); ++j) {
        std::vector<Elem> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = hm.at(i, j);
        if (std::all_of(col.begin(), col.end(), [](Elem e) { return e == 0; }))
            throw InvalidArgument("BadH: column " + std::to_string(j + 1) + " is zero");
        seen.insert(normalize_point(c.base_field(), col).index);
    }
    if (seen.size() != expected)
        throw InvalidArgument("BadH: columns do not represent distinct projective points");
    return LinearCode(c.generator() * lift(hm, c.field()));
}

// ---- weight distributions and enumerators ----------------------------------

std::uint64_t WeightDistribution::total() const {
    std::uint64_t t = 0;
    for (auto c : counts) t += c;
    return t;
}

std::string WeightDistribution::str() const {
    std::string s;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(i) + ":" + std::to_string(counts[i]);
    }
    return s;
}

WeightDistribution weight_distribution(const LinearCode& c, Metric metric) {
    WeightDistribution wd;
    wd.metric = metric;
    wd.counts.assign(c.length() + 1, 0);
    for (const auto& w : c.codewords()) {
        unsigned i = metric == Metric::hamming ? hamming_weight(w) : rank_weight(c.field(), w);
        ++wd.counts[i];
    }
    return wd;
}

Polynomial weight_enumerator(const Matroid& m, std::size_t i) {
    const std::size_t n = m.size();
    Polynomial acc;
    if (i > n) return acc;
    const FlatLattice& fl = m.flats();
    for (std::size_t fi = 0; fi < fl.size(); ++fi) {
        std::uint64_t f = fl.flats[fi];
        if (static_cast<std::size_t>(std::popcount(f)) != n - i) continue;
        acc += char_poly(m.contraction(f));
    }
    return acc;
}

Polynomial weight_enumerator(const QMatroid& m, std::size_t i) {
    const std::size_t n = m.dim();
    Polynomial acc;
    if (i > n) return acc;
    const QFlatLattice& fl = m.flats();
    for (const Subspace& f : fl.flats) {
        if (f.dim() != n - i) continue;
        acc += char_poly(m.contraction(f));
    }
    return acc;
}

Polynomial weight_enumerator_definition(const Matroid& m, std::size_t i) {
    const std::size_t n = m.size();
    Polynomial acc;
    if (i > n) return acc;
    if (n > 20)
        throw GuardError("TooLarge: the defining sum enumerates subsets of at most 20 elements");
    const std::uint64_t full = m.full_mask();
    for (std::uint64_t a = 0;; ++a) {
        if (static_cast<std::size_t>(std::popcount(a)) == i)
            acc += char_poly(m.contraction(full & ~a));
        if (a == full) break;
    }
    return acc;
}

Polynomial weight_enumerator_definition(const QMatroid& m, std::size_t i) {
    Polynomial acc;
    if (i > m.dim()) return acc;
    for (const Subspace& v : enumerate_subspaces(m.field(), m.dim(), i))
        acc += char_poly(m.contraction(orthogonal(v)));
    return acc;
}

// ---- critical counting ------------------------------------------------------

std::uint64_t critical_count(const LinearCode& c, const Subspace& w, unsigned t) {
    check_ambient(c, w);
    checked_pow(c.size(), t, std::uint64_t(1) << 22,
                "ordered tuple enumeration is limited to 2^22 tuples");
    std::vector<Subspace> sup;
    sup.reserve(c.codewords().size());
    for (const auto& v : c.codewords()) sup.push_back(rank_support(c.field(), v));

    std::uint64_t count = 0;
    // Depth-first over tuple positions; supports only grow under join, so a
    // partial join escaping w can be pruned.
    auto rec = [&](auto&& self, unsigned depth, const Subspace& acc) -> void {
        if (!w.contains(acc)) return;
        if (depth == t) {
            if (acc == w) ++count;
            return;
        }
        for (const Subspace& s : sup) self(self, depth + 1, join(acc, s));
    };
    rec(rec, 0, Subspace::zero(c.base_field(), c.length()));
    return count;
}

long long critical_predict(const QMatroid& m, const Subspace& w, unsigned t,
                           unsigned ext_degree) {
    if (w.field()->q() != m.field()->q())
        throw InvalidArgument("FieldMismatch: subspace and q-matroid fields differ");
    if (w.ambient_dim() != m.dim())
        throw InvalidArgument("AmbientMismatch: subspace lives in dimension " +
                              std::to_string(w.ambient_dim()) + " but the q-matroid has dimension " +
                              std::to_string(m.dim()));
    long long x = static_cast<long long>(
        checked_pow(m.field()->q(), std::uint64_t(ext_degree) * t, std::uint64_t(1) << 40,
                    "evaluation point exceeds 2^40"));
    return char_poly(m.contraction(orthogonal(w))).eval(x);
}

std::uint64_t critical_count_hamming(const LinearCode& c, std::uint64_t a, unsigned t) {
    if (c.length() > 63)
        throw GuardError("TooLarge: Hamming support masks are limited to 63 positions");
    if (a & ~((c.length() == 0 ? 0 : (std::uint64_t(1) << c.length()) - 1)))
        throw InvalidArgument("UnknownElement: subset mask has bits outside the code positions");
    checked_pow(c.size(), t, std::uint64_t(1) << 22,
                "ordered tuple enumeration is limited to 2^22 tuples");
    std::vector<std::uint64_t> sup;
    sup.reserve(c.codewords().size());
    for (const auto& v : c.codewords()) sup.push_back(hamming_support(v));

    std::uint64_t count = 0;
    auto rec = [&](auto&& self, unsigned depth, std::uint64_t acc) -> void {
        if (acc & ~a) return;
        if (depth == t) {
            if (acc == a) ++count;
            return;
        }
        for (std::uint64_t s : sup) self(self, depth + 1, acc | s);
    };
    rec(rec, 0, 0);
    return count;
}

long long critical_predict_hamming(const Matroid& m, std::uint64_t a, unsigned t,
                                   std::uint64_t alphabet) {
    check_mask(m, a);
    long long x = static_cast<long long>(
        checked_pow(alphabet, t, std::uint64_t(1) << 40, "evaluation point exceeds 2^40"));
    return char_poly(m.contraction(m.full_mask() & ~a)).eval(x);
}

} // namespace qmatroids
