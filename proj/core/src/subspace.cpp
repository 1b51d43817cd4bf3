#include "qmatroids/subspace.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace qmatroids {

std::uint64_t vec_index(const std::vector<Elem>& v, unsigned q) {
    std::uint64_t idx = 0;
    for (std::size_t i = v.size(); i-- > 0;) idx = idx * q + v[i];
    return idx;
}

std::vector<Elem> vec_from_index(std::uint64_t idx, unsigned q, std::size_t n) {
    std::vector<Elem> v(n, 0);
    for (std::size_t i = 0; i < n; ++i) { v[i] = static_cast<Elem>(idx % q); idx /= q; }
    return v;
}

std::string ProjPoint::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < rep.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(rep[i]);
    }
    return s + ")";
}

Subspace Subspace::from_matrix(const Matrix<Field>& rows_span) {
    auto rr = rref(rows_span);
    Matrix<Field> basis(rows_span.field(), rr.rank, rows_span.cols());
    for (std::size_t r = 0; r < rr.rank; ++r)
        for (std::size_t c = 0; c < rows_span.cols(); ++c)
            basis.at(r, c) = rr.matrix.at(r, c);
    return Subspace(std::move(basis), std::move(rr.pivots));
}

Subspace Subspace::zero(FieldPtr field, std::size_t n) {
    return Subspace(Matrix<Field>(std::move(field), 0, n), {});
}

Subspace Subspace::full(FieldPtr field, std::size_t n) {
    std::vector<std::size_t> piv(n);
    for (std::size_t i = 0; i < n; ++i) piv[i] = i;
    return Subspace(Matrix<Field>::identity(std::move(field), n), std::move(piv));
}

Subspace Subspace::span(FieldPtr field, std::size_t n, const std::vector<std::vector<Elem>>& vectors) {
    Matrix<Field> m(field, vectors.size(), n);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        if (vectors[r].size() != n)
            throw InvalidArgument("DimensionMismatch: vector length does not match ambient dimension");
        m.set_row(r, vectors[r]);
    }
    return from_matrix(m);
}

Subspace Subspace::line(FieldPtr field, const std::vector<Elem>& v) {
    return span(field, v.size(), {v});
}

bool Subspace::contains_vector(const std::vector<Elem>& v) const {
    if (v.size() != ambient_dim())
        throw InvalidArgument("DimensionMismatch: vector length does not match ambient dimension");
    const Field& f = *field();
    std::vector<Elem> r = v;
    for (std::size_t i = 0; i < dim(); ++i) {
        Elem c = r[pivots_[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < ambient_dim(); ++j)
            r[j] = f.sub(r[j], f.mul(c, basis_.at(i, j)));
    }
    return std::all_of(r.begin(), r.end(), [](Elem e) { return e == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim() || !(*other.field() == *field()))
        throw InvalidArgument("AmbientMismatch: subspaces live in different ambient spaces");
    if (other.dim() > dim()) return false;
    for (std::size_t r = 0; r < other.dim(); ++r)
        if (!contains_vector(other.basis_.row(r))) return false;
    return true;
}

std::vector<std::uint32_t> Subspace::key() const {
    std::vector<std::uint32_t> k;
    k.reserve(1 + basis_.entries().size());
    k.push_back(static_cast<std::uint32_t>(dim()));
    for (Elem e : basis_.entries()) k.push_back(e);
    return k;
}

std::vector<std::vector<Elem>> Subspace::vectors() const {
    const Field& f = *field();
    const unsigned q = f.q();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < dim(); ++i) count *= q;
    std::vector<std::vector<Elem>> out;
    out.reserve(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        auto coef = vec_from_index(idx, q, dim());
        std::vector<Elem> v(ambient_dim(), 0);
        for (std::size_t r = 0; r < dim(); ++r) {
            if (coef[r] == 0) continue;
            for (std::size_t c = 0; c < ambient_dim(); ++c)
                v[c] = f.add(v[c], f.mul(coef[r], basis_.at(r, c)));
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::string Subspace::str() const {
    if (is_zero()) return "<0>";
    std::string s = "<";
    for (std::size_t r = 0; r < dim(); ++r) {
        if (r) s += ",";
        s += "(";
        for (std::size_t c = 0; c < ambient_dim(); ++c) {
            if (c) s += ",";
            s += std::to_string(basis_.at(r, c));
        }
        s += ")";
    }
    return s + ">";
}

bool subspace_less(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.basis().entries() < b.basis().entries();
}

namespace {

void check_same_ambient(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim() || !(*u.field() == *v.field()))
        throw InvalidArgument("AmbientMismatch: subspaces live in different ambient spaces");
}

} // namespace

Subspace join(const Subspace& u, const Subspace& v) {
    check_same_ambient(u, v);
    Matrix<Field> stacked(u.field(), u.dim() + v.dim(), u.ambient_dim());
    for (std::size_t r = 0; r < u.dim(); ++r) stacked.set_row(r, u.basis().row(r));
    for (std::size_t r = 0; r < v.dim(); ++r) stacked.set_row(u.dim() + r, v.basis().row(r));
    return Subspace::from_matrix(stacked);
}

Subspace meet(const Subspace& u, const Subspace& v) {
    check_same_ambient(u, v);
    // Nullspace stacking: a relation a*B_u + b*B_v = 0 exhibits the vector
    // a*B_u of the intersection, and every intersection vector arises so.
    Matrix<Field> stacked(u.field(), u.dim() + v.dim(), u.ambient_dim());
    for (std::size_t r = 0; r < u.dim(); ++r) stacked.set_row(r, u.basis().row(r));
    for (std::size_t r = 0; r < v.dim(); ++r) stacked.set_row(u.dim() + r, v.basis().row(r));
    Matrix<Field> relations = nullspace(stacked.transpose());
    const Field& f = *u.field();
    Matrix<Field> gens(u.field(), relations.rows(), u.ambient_dim());
    for (std::size_t r = 0; r < relations.rows(); ++r)
        for (std::size_t i = 0; i < u.dim(); ++i) {
            Elem a = relations.at(r, i);
            if (a == 0) continue;
            for (std::size_t c = 0; c < u.ambient_dim(); ++c)
                gens.at(r, c) = f.add(gens.at(r, c), f.mul(a, u.basis().at(i, c)));
        }
    return Subspace::from_matrix(gens);
}

Subspace orthogonal(const Subspace& v) {
    return Subspace::from_matrix(nullspace(v.basis()));
}

namespace {

std::uint64_t checked_pow(unsigned q, std::size_t n, std::uint64_t guard, const char* what) {
    std::uint64_t x = 1;
    for (std::size_t i = 0; i < n; ++i) {
        x *= q;
        if (x > guard)
            throw GuardError(std::string("TooLarge: ") + what);
    }
    return x;
}

} // namespace

std::vector<Subspace> enumerate_subspaces(const FieldPtr& field, std::size_t n,
                                          std::optional<std::size_t> dim) {
    checked_pow(field->q(), n, 1ull << 20, "subspace enumeration requires q^n <= 2^20");
    const unsigned q = field->q();
    std::vector<Subspace> out;

    std::size_t klo = dim.value_or(0), khi = dim.value_or(n);
    if (khi > n) throw InvalidArgument("requested dimension exceeds the ambient dimension");
    for (std::size_t k = klo; k <= khi; ++k) {
        std::vector<Subspace> layer;
        // Pivot columns in increasing combinations; the remaining entries of
        // an RREF matrix are free exactly at (row i, col c) with c > pivot_i
        // and c not itself a pivot.
        std::vector<std::size_t> piv(k);
        for (std::size_t i = 0; i < k; ++i) piv[i] = i;
        bool more = (k <= n);
        while (more) {
            std::vector<std::pair<std::size_t, std::size_t>> free_pos;
            std::vector<bool> is_piv(n, false);
            for (std::size_t p : piv) is_piv[p] = true;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t c = piv[i] + 1; c < n; ++c)
                    if (!is_piv[c]) free_pos.emplace_back(i, c);

            std::uint64_t fills = 1;
            for (std::size_t i = 0; i < free_pos.size(); ++i) fills *= q;
            for (std::uint64_t idx = 0; idx < fills; ++idx) {
                Matrix<Field> basis(field, k, n);
                for (std::size_t i = 0; i < k; ++i) basis.at(i, piv[i]) = 1;
                std::uint64_t t = idx;
                for (auto [i, c] : free_pos) {
                    basis.at(i, c) = static_cast<Elem>(t % q);
                    t /= q;
                }
                layer.push_back(Subspace::from_matrix(basis));
            }

            // next combination
            if (k == 0) break;
            std::size_t i = k;
            while (i-- > 0) {
                if (piv[i] + (k - i) < n) {
                    ++piv[i];
                    for (std::size_t j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
                    break;
                }
                if (i == 0) { more = false; break; }
            }
            if (k == 0) more = false;
        }
        std::sort(layer.begin(), layer.end(), subspace_less);
        for (auto& s : layer) out.push_back(std::move(s));
    }
    return out;
}

std::vector<Subspace> subspaces_of(const Subspace& v, std::optional<std::size_t> dim) {
    if (dim && *dim > v.dim()) return {};
    auto inner = enumerate_subspaces(v.field(), v.dim(), dim);
    std::vector<Subspace> out;
    out.reserve(inner.size());
    for (const auto& w : inner) {
        // Coordinates inside v map back through its basis.
        Matrix<Field> rows = w.basis() * v.basis();
        out.push_back(Subspace::from_matrix(rows));
    }
    std::sort(out.begin(), out.end(), subspace_less);
    return out;
}

ProjPoint normalize_point(const FieldPtr& field, std::vector<Elem> v) {
    const Field& f = *field;
    std::size_t first = v.size();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) { first = i; break; }
    if (first == v.size())
        throw InvalidArgument("the zero vector spans no projective point");
    Elem s = f.inv(v[first]);
    if (s != 1)
        for (auto& e : v) e = f.mul(e, s);
    std::uint64_t idx = vec_index(v, f.q());
    return ProjPoint{std::move(v), idx};
}

std::vector<ProjPoint> all_projective_points(const FieldPtr& field, std::size_t n) {
    std::uint64_t count = checked_pow(field->q(), n, 1ull << 20, "point enumeration requires q^n <= 2^20");
    std::vector<ProjPoint> out;
    const unsigned q = field->q();
    for (std::uint64_t idx = 1; idx < count; ++idx) {
        auto v = vec_from_index(idx, q, n);
        auto p = normalize_point(field, std::move(v));
        if (p.index == idx) out.push_back(std::move(p)); // keep each line once
    }
    return out;
}

std::vector<ProjPoint> projective_points(const Subspace& v) {
    std::set<std::uint64_t> seen;
    std::vector<ProjPoint> out;
    for (auto& vec : v.vectors()) {
        bool zero = std::all_of(vec.begin(), vec.end(), [](Elem e) { return e == 0; });
        if (zero) continue;
        auto p = normalize_point(v.field(), std::move(vec));
        if (seen.insert(p.index).second) out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

QuotientSpace::QuotientSpace(FieldPtr field, std::size_t n, Subspace v)
    : field_(std::move(field)), n_(n), v_(std::move(v)) {
    if (v_.ambient_dim() != n_ || !(*v_.field() == *field_))
        throw InvalidArgument("AmbientMismatch: modulus does not live in the given ambient space");
    std::vector<bool> is_piv(n_, false);
    for (std::size_t p : v_.pivots()) is_piv[p] = true;
    for (std::size_t c = 0; c < n_; ++c) {
        if (is_piv[c]) continue;
        free_cols_.push_back(c);
        std::vector<Elem> unit(n_, 0);
        unit[c] = 1;
        transversal_.push_back(std::move(unit));
    }
}

std::vector<Elem> QuotientSpace::project(std::vector<Elem> v) const {
    if (v.size() != n_)
        throw InvalidArgument("DimensionMismatch: vector length does not match ambient dimension");
    const Field& f = *field_;
    // Kill the pivot coordinates with the basis of the modulus; what is left
    // is the canonical coset representative supported on the free columns.
    for (std::size_t i = 0; i < v_.dim(); ++i) {
        Elem c = v[v_.pivots()[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < n_; ++j)
            v[j] = f.sub(v[j], f.mul(c, v_.basis().at(i, j)));
    }
    std::vector<Elem> out(free_cols_.size());
    for (std::size_t i = 0; i < free_cols_.size(); ++i) out[i] = v[free_cols_[i]];
    return out;
}

std::vector<Elem> QuotientSpace::lift(const std::vector<Elem>& vq) const {
    if (vq.size() != qdim())
        throw InvalidArgument("DimensionMismatch: vector length does not match quotient dimension");
    std::vector<Elem> v(n_, 0);
    for (std::size_t i = 0; i < free_cols_.size(); ++i) v[free_cols_[i]] = vq[i];
    return v;
}

Subspace QuotientSpace::project_subspace(const Subspace& w) const {
    if (w.ambient_dim() != n_)
        throw InvalidArgument("AmbientMismatch: subspace does not live in the quotient's ambient space");
    std::vector<std::vector<Elem>> rows;
    rows.reserve(w.dim());
    for (std::size_t r = 0; r < w.dim(); ++r) rows.push_back(project(w.basis().row(r)));
    return Subspace::span(field_, qdim(), rows);
}

Subspace QuotientSpace::preimage(const Subspace& wq) const {
    if (wq.ambient_dim() != qdim())
        throw InvalidArgument("AmbientMismatch: subspace does not live in the quotient space");
    std::vector<std::vector<Elem>> rows;
    rows.reserve(wq.dim() + v_.dim());
    for (std::size_t r = 0; r < wq.dim(); ++r) rows.push_back(lift(wq.basis().row(r)));
    for (std::size_t r = 0; r < v_.dim(); ++r) rows.push_back(v_.basis().row(r));
    return Subspace::span(field_, n_, rows);
}

long long mobius_closed_form(std::size_t k, unsigned q) {
    long long val = 1;
    for (std::size_t i = 0; i + 1 < k; ++i)
        for (std::size_t j = 0; j <= i; ++j) val *= q; // q^(k(k-1)/2) in factors
    // The loop above multiplies q exactly 1+2+...+(k-1) times.
    return (k % 2 == 0) ? val : -val;
}

namespace {

struct MobiusKey {
    unsigned q;
    std::vector<std::uint32_t> ku, kv;
    bool operator<(const MobiusKey& o) const {
        if (q != o.q) return q < o.q;
        if (ku != o.ku) return ku < o.ku;
        return kv < o.kv;
    }
};

std::mutex mobius_mx;
std::map<MobiusKey, long long> mobius_cache;

long long mobius_rec_impl(const Subspace& u, const Subspace& v) {
    if (u == v) return 1;
    MobiusKey key{u.field()->q(), u.key(), v.key()};
    {
        std::lock_guard<std::mutex> lock(mobius_mx);
        auto it = mobius_cache.find(key);
        if (it != mobius_cache.end()) return it->second;
    }
    // Walk the interval [u, v] through the quotient by u.
    QuotientSpace quot(u.field(), u.ambient_dim(), u);
    Subspace vq = quot.project_subspace(v);
    long long sum = 0;
    for (const auto& wq : subspaces_of(vq)) {
        Subspace w = quot.preimage(wq);
        if (w == v) continue;
        sum += mobius_rec_impl(u, w);
    }
    long long val = -sum;
    std::lock_guard<std::mutex> lock(mobius_mx);
    mobius_cache.emplace(std::move(key), val);
    return val;
}

} // namespace

long long mobius_subspace_recursive(const Subspace& u, const Subspace& v) {
    check_same_ambient(u, v);
    if (!v.contains(u))
        throw InvalidArgument("NotComparable: the interval [U, V] requires U <= V");
    return mobius_rec_impl(u, v);
}

long long mobius_subspace(const Subspace& u, const Subspace& v) {
    check_same_ambient(u, v);
    if (!v.contains(u))
        throw InvalidArgument("NotComparable: the interval [U, V] requires U <= V");
    if (u.is_zero()) return mobius_closed_form(v.dim(), v.field()->q());
    return mobius_rec_impl(u, v);
}

long long gaussian_binomial(std::size_t n, std::size_t k, unsigned q) {
    if (k > n) return 0;
    // Pascal-style recurrence keeps everything in exact integers.
    std::vector<std::vector<long long>> g(n + 1, std::vector<long long>(k + 1, 0));
    for (std::size_t i = 0; i <= n; ++i) g[i][0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        long long qk = 1;
        for (std::size_t j = 1; j <= std::min(i, k); ++j) {
            qk *= q;
            g[i][j] = g[i - 1][j - 1] + qk * g[i - 1][j];
        }
    }
    return g[n][k];
}

} // namespace qmatroids
