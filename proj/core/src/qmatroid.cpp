#include "qmatroids/qmatroid.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace qmatroids {

namespace {

bool qflat_less(const std::pair<int, Subspace>& a, const std::pair<int, Subspace>& b) {
    if (a.first != b.first) return a.first < b.first;
    return subspace_less(a.second, b.second);
}

std::uint64_t checked_order(const FieldPtr& f, std::size_t n, std::uint64_t guard, const char* what) {
    std::uint64_t x = 1;
    for (std::size_t i = 0; i < n; ++i) {
        x *= f->q();
        if (x > guard) throw GuardError(std::string("TooLarge: ") + what);
    }
    return x;
}

} // namespace

std::optional<std::size_t> QFlatLattice::find(const Subspace& f) const {
    for (std::size_t i = 0; i < flats.size(); ++i)
        if (flats[i] == f) return i;
    return std::nullopt;
}

std::size_t QFlatLattice::index_of(const Subspace& f) const {
    auto i = find(f);
    if (!i) throw InvalidArgument("NotAFlat: the given subspace is not a flat");
    return *i;
}

std::size_t QFlatLattice::meet_idx(std::size_t i, std::size_t j) const {
    return index_of(meet(flats[i], flats[j]));
}

std::size_t QFlatLattice::join_idx(std::size_t i, std::size_t j) const {
    Subspace u = join(flats[i], flats[j]);
    for (std::size_t k = 0; k < flats.size(); ++k)
        if (flats[k].contains(u)) return k; // minimal: flats are sorted by height
    throw Error("internal: flat lattice has no member above a join");
}

struct QMatroid::Impl {
    FieldPtr field;
    std::size_t n = 0;
    std::function<int(const Subspace&)> rho;
    std::optional<ContractionInfo> contraction;

    mutable std::mutex memo_mx;
    mutable std::map<std::vector<std::uint32_t>, int> memo;

    mutable std::mutex flats_mx;
    mutable std::optional<QFlatLattice> flats;

    int rank(const Subspace& v) const {
        auto key = v.key();
        {
            std::lock_guard<std::mutex> lock(memo_mx);
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
        }
        int r = rho(v);
        std::lock_guard<std::mutex> lock(memo_mx);
        memo.emplace(std::move(key), r);
        return r;
    }
};

QMatroid::QMatroid(FieldPtr field, std::size_t n, std::function<int(const Subspace&)> rho)
    : impl_(std::make_shared<Impl>()) {
    impl_->field = std::move(field);
    impl_->n = n;
    impl_->rho = std::move(rho);
}

QMatroid QMatroid::uniform(FieldPtr field, std::size_t n, std::size_t k) {
    if (k > n) throw InvalidArgument("uniform q-matroid requires k <= n");
    return QMatroid(std::move(field), n, [k](const Subspace& v) {
        return static_cast<int>(std::min(v.dim(), k));
    });
}

const FieldPtr& QMatroid::field() const { return impl_->field; }
std::size_t QMatroid::dim() const { return impl_->n; }

int QMatroid::rank(const Subspace& v) const {
    if (v.ambient_dim() != impl_->n || !(*v.field() == *impl_->field))
        throw InvalidArgument("AmbientMismatch: subspace does not live in this q-matroid's ambient space");
    return impl_->rank(v);
}

int QMatroid::rank_full() const { return rank(Subspace::full(impl_->field, impl_->n)); }

Subspace QMatroid::qclosure(const Subspace& v) const {
    int r = rank(v);
    std::vector<std::vector<Elem>> gens;
    for (std::size_t i = 0; i < v.dim(); ++i) gens.push_back(v.basis().row(i));
    for (const auto& p : all_projective_points(impl_->field, impl_->n)) {
        if (v.contains_vector(p.rep)) continue;
        if (rank(join(v, Subspace::line(impl_->field, p.rep))) == r) gens.push_back(p.rep);
    }
    return Subspace::span(impl_->field, impl_->n, gens);
}

bool QMatroid::is_qcoloop(const std::vector<Elem>& w) const {
    Subspace hyper = orthogonal(Subspace::line(impl_->field, w));
    return rank(hyper) == rank_full() - 1;
}

QMatroid QMatroid::deletion(const Subspace& v) const {
    if (v.ambient_dim() != impl_->n)
        throw InvalidArgument("AmbientMismatch: subspace does not live in this q-matroid's ambient space");
    Subspace ground = orthogonal(v);
    QMatroid base = *this;
    Matrix<Field> b = ground.basis();
    std::size_t nd = ground.dim();
    return QMatroid(impl_->field, nd, [base, b](const Subspace& w) {
        return base.rank(Subspace::from_matrix(w.basis() * b));
    });
}

QMatroid QMatroid::contraction(const Subspace& v) const {
    if (v.ambient_dim() != impl_->n)
        throw InvalidArgument("AmbientMismatch: subspace does not live in this q-matroid's ambient space");
    if (impl_->contraction) {
        // Flatten: pull the modulus back to the base ambient space and
        // contract there, keeping the quotient depth at one.
        QuotientSpace quot(impl_->contraction->base.field(), impl_->contraction->base.dim(),
                           impl_->contraction->modulus);
        return impl_->contraction->base.contraction(quot.preimage(v));
    }
    QuotientSpace quot(impl_->field, impl_->n, v);
    QMatroid base = *this;
    int rv = rank(v);
    QMatroid out(impl_->field, quot.qdim(), [base, quot, rv](const Subspace& w) {
        return base.rank(quot.preimage(w)) - rv;
    });
    out.impl_->contraction = ContractionInfo{*this, v};
    return out;
}

QMatroid QMatroid::dualized() const {
    QMatroid base = *this;
    int re = rank_full();
    return QMatroid(impl_->field, impl_->n, [base, re](const Subspace& v) {
        return static_cast<int>(v.dim()) - re + base.rank(orthogonal(v));
    });
}

const QMatroid::ContractionInfo* QMatroid::contraction_info() const {
    return impl_->contraction ? &*impl_->contraction : nullptr;
}

const QFlatLattice& QMatroid::flats() const {
    std::lock_guard<std::mutex> lock(impl_->flats_mx);
    if (impl_->flats) return *impl_->flats;

    auto points = all_projective_points(impl_->field, impl_->n);
    QFlatLattice lat;
    std::vector<std::pair<int, Subspace>> found;
    auto have = [&](const Subspace& s) {
        return std::any_of(found.begin(), found.end(),
                           [&](const auto& pr) { return pr.second == s; });
    };

    Subspace bottom = qclosure(Subspace::zero(impl_->field, impl_->n));
    found.emplace_back(rank(bottom), bottom);
    std::vector<Subspace> current{bottom};
    while (!current.empty()) {
        std::vector<Subspace> next;
        for (const auto& f : current) {
            for (const auto& p : points) {
                if (f.contains_vector(p.rep)) continue;
                Subspace g = qclosure(join(f, Subspace::line(impl_->field, p.rep)));
                if (!have(g)) {
                    found.emplace_back(rank(g), g);
                    next.push_back(g);
                }
            }
        }
        current = std::move(next);
    }

    std::sort(found.begin(), found.end(), qflat_less);
    for (auto& [h, f] : found) {
        lat.flats.push_back(std::move(f));
        lat.height.push_back(h);
    }

    lat.covers.resize(lat.flats.size());
    for (std::size_t i = 0; i < lat.flats.size(); ++i) {
        std::set<std::size_t> cov;
        for (const auto& p : points) {
            if (lat.flats[i].contains_vector(p.rep)) continue;
            Subspace g = qclosure(join(lat.flats[i], Subspace::line(impl_->field, p.rep)));
            cov.insert(lat.index_of(g));
        }
        lat.covers[i].assign(cov.begin(), cov.end());
    }

    lat.mobius.assign(lat.flats.size(), 0);
    if (!lat.flats.empty()) lat.mobius[0] = 1;
    for (std::size_t i = 1; i < lat.flats.size(); ++i) {
        long long sum = 0;
        for (std::size_t j = 0; j < i; ++j)
            if (lat.flats[i].contains(lat.flats[j])) sum += lat.mobius[j];
        lat.mobius[i] = -sum;
    }

    impl_->flats = std::move(lat);
    return *impl_->flats;
}

QMatroid QMatroid::from_flats(FieldPtr field, std::size_t n, std::vector<Subspace> flats) {
    auto report = check_flat_family(field, n, flats);
    if (!report.ok())
        throw InvalidArgument("NotAFlatFamily: " + report.violations.front().axiom + " fails at " +
                              report.violations.front().witness);

    std::sort(flats.begin(), flats.end(), subspace_less); // dim asc, then key
    flats.erase(std::unique(flats.begin(), flats.end()), flats.end());
    // Heights by longest chain from the bottom; the verified family is the
    // flat lattice of a q-matroid, where chains are graded.
    std::vector<int> height(flats.size(), 0);
    for (std::size_t i = 0; i < flats.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (flats[i] == flats[j] || !flats[i].contains(flats[j])) continue;
            bool covered = true;
            for (std::size_t k = 0; k < flats.size(); ++k) {
                if (k == i || k == j) continue;
                if (flats[i].contains(flats[k]) && flats[k].contains(flats[j]) &&
                    !(flats[k] == flats[i]) && !(flats[k] == flats[j])) { covered = false; break; }
            }
            if (covered) height[i] = std::max(height[i], height[j] + 1);
        }
    }

    auto shared = std::make_shared<std::pair<std::vector<Subspace>, std::vector<int>>>(
        std::move(flats), std::move(height));
    return QMatroid(std::move(field), n, [shared](const Subspace& v) {
        // The least flat containing v is the first one in dimension order.
        for (std::size_t i = 0; i < shared->first.size(); ++i)
            if (shared->first[i].contains(v)) return shared->second[i];
        throw Error("internal: flat family has no member above a subspace");
    });
}

AxiomReport check_flat_family(const FieldPtr& field, std::size_t n,
                              const std::vector<Subspace>& flats) {
    AxiomReport rep;
    auto note = [&](const std::string& axiom, const std::string& witness) {
        if (rep.violations.size() < 16) rep.violations.push_back({axiom, witness});
    };
    rep.exhaustive = true;
    if (flats.empty()) {
        note("qF1", "empty family");
        return rep;
    }
    for (const auto& f : flats)
        if (f.ambient_dim() != n || !(*f.field() == *field))
            throw InvalidArgument("AmbientMismatch: flat family crosses ambient spaces");

    auto member = [&](const Subspace& s) {
        return std::any_of(flats.begin(), flats.end(), [&](const Subspace& f) { return f == s; });
    };

    if (!member(Subspace::full(field, n)))
        note("qF1", "the full space is missing");

    for (std::size_t i = 0; i < flats.size(); ++i)
        for (std::size_t j = i + 1; j < flats.size(); ++j) {
            ++rep.checked;
            if (!member(meet(flats[i], flats[j])))
                note("qF2", flats[i].str() + " and " + flats[j].str());
        }

    // For each member F and point e outside it, the least member containing
    // F + <e> has to cover F.
    auto points = all_projective_points(field, n);
    for (const auto& f : flats) {
        for (const auto& p : points) {
            if (f.contains_vector(p.rep)) continue;
            ++rep.checked;
            Subspace fe = join(f, Subspace::line(field, p.rep));
            const Subspace* least = nullptr;
            for (const auto& g : flats) {
                if (!g.contains(fe)) continue;
                if (!least || least->contains(g)) least = &g;
            }
            if (!least) {
                note("qF1", "no member above " + fe.str());
                continue;
            }
            for (const auto& h : flats) {
                if (h == f || h == *least) continue;
                if (least->contains(h) && h.contains(f)) {
                    note("qF3", "flat " + h.str() + " sits between " + f.str() + " and " + least->str());
                    break;
                }
            }
        }
    }
    return rep;
}

namespace {

Polynomial char_poly_q_definition(const QMatroid& m) {
    checked_order(m.field(), m.dim(), 1ull << 16,
                  "the definition method enumerates subspaces, capped at q^n = 2^16");
    int re = m.rank_full();
    Polynomial out;
    for (const auto& v : enumerate_subspaces(m.field(), m.dim()))
        out += Polynomial::monomial(mobius_subspace(Subspace::zero(m.field(), m.dim()), v),
                                    static_cast<std::size_t>(re - m.rank(v)));
    return out;
}

Polynomial char_poly_q_flats(const QMatroid& m) {
    if (m.loops_subspace().dim() > 0) return Polynomial();
    const QFlatLattice& lat = m.flats();
    int re = m.rank_full();
    Polynomial out;
    for (std::size_t i = 0; i < lat.size(); ++i)
        out += Polynomial::monomial(lat.mobius[i], static_cast<std::size_t>(re - lat.height[i]));
    return out;
}

Polynomial char_poly_q_recursive(const QMatroid& m, QRecursionStats* stats) {
    if (m.dim() == 0) return Polynomial(1);
    const FieldPtr& field = m.field();
    auto points = all_projective_points(field, m.dim());
    const auto& v = points.front(); // canonically least projective point
    Subspace vline = Subspace::line(field, v.rep);
    Subspace vperp = orthogonal(vline);

    bool coloop = (m.rank(vperp) == m.rank_full() - 1);

    // Q is the set of points outside the hyperplane orthogonal to v.
    std::vector<const ProjPoint*> q_out;
    for (const auto& p : points)
        if (!vperp.contains_vector(p.rep)) q_out.push_back(&p);

    if (coloop) {
        if (stats) stats->coloop_branch = true;
        const ProjPoint* e = q_out.front(); // canonically least with <e> + vperp = E
        if (stats) ++stats->contractions;
        // On this branch e is a coloop of the matroid obtained from the
        // projectivization by deleting the other points outside the
        // hyperplane, so it splits off a factor of x - 1.
        Polynomial out = (Polynomial::x() - Polynomial(1)) *
                         char_poly_q_recursive(m.contraction(Subspace::line(field, e->rep)), stats);
        for (const ProjPoint* w : q_out) {
            if (w == e) continue;
            if (stats) ++stats->contractions;
            out -= char_poly_q_recursive(m.contraction(Subspace::line(field, w->rep)), stats);
        }
        return out;
    }
    Polynomial out = char_poly_q_recursive(m.deletion(vline), stats);
    for (const ProjPoint* w : q_out) {
        if (stats) ++stats->contractions;
        out -= char_poly_q_recursive(m.contraction(Subspace::line(field, w->rep)), stats);
    }
    return out;
}

} // namespace

Polynomial char_poly(const QMatroid& m, CharPolyMethod method, QRecursionStats* stats) {
    switch (method) {
        case CharPolyMethod::definition: return char_poly_q_definition(m);
        case CharPolyMethod::flats: return char_poly_q_flats(m);
        case CharPolyMethod::recursive: return char_poly_q_recursive(m, stats);
    }
    throw InvalidArgument("unknown characteristic polynomial method");
}

AxiomReport check_qmatroid_axioms(const QMatroid& m) {
    checked_order(m.field(), m.dim(), 1ull << 10,
                  "exhaustive q-matroid axiom checking is capped at q^n = 2^10");
    AxiomReport rep;
    rep.exhaustive = true;
    auto note = [&](const std::string& axiom, const std::string& witness) {
        if (rep.violations.size() < 16) rep.violations.push_back({axiom, witness});
    };
    auto subs = enumerate_subspaces(m.field(), m.dim());
    std::vector<int> rk(subs.size());
    for (std::size_t i = 0; i < subs.size(); ++i) {
        rk[i] = m.rank(subs[i]);
        if (rk[i] < 0 || rk[i] > static_cast<int>(subs[i].dim()))
            note("qR1", subs[i].str() + " has rank " + std::to_string(rk[i]));
    }
    for (std::size_t i = 0; i < subs.size(); ++i) {
        for (std::size_t j = 0; j < subs.size(); ++j) {
            ++rep.checked;
            if (i != j && subs[j].contains(subs[i]) && rk[i] > rk[j])
                note("qR2", subs[i].str() + " inside " + subs[j].str());
            if (j < i) continue;
            int sum = m.rank(join(subs[i], subs[j])) + m.rank(meet(subs[i], subs[j]));
            if (sum > rk[i] + rk[j])
                note("qR3", subs[i].str() + " and " + subs[j].str());
        }
    }
    return rep;
}

namespace {

void enumerate_gl(const FieldPtr& field, std::size_t n,
                  std::vector<std::vector<Elem>>& rows,
                  const std::function<bool(const Matrix<Field>&)>& visit, bool& stop) {
    if (stop) return;
    if (rows.size() == n) {
        Matrix<Field> a(field, n, n);
        for (std::size_t r = 0; r < n; ++r) a.set_row(r, rows[r]);
        if (visit(a)) stop = true;
        return;
    }
    Subspace sofar = Subspace::span(field, n, rows);
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < n; ++i) count *= field->q();
    for (std::uint64_t idx = 1; idx < count && !stop; ++idx) {
        auto v = vec_from_index(idx, field->q(), n);
        if (sofar.contains_vector(v)) continue;
        rows.push_back(v);
        enumerate_gl(field, n, rows, visit, stop);
        rows.pop_back();
    }
}

} // namespace

std::optional<Matrix<Field>> q_equivalent(const QMatroid& a, const QMatroid& b,
                                          const std::optional<Matrix<Field>>& iso) {
    if (a.dim() != b.dim() || !(*a.field() == *b.field())) return std::nullopt;
    const std::size_t n = a.dim();
    const FieldPtr& field = a.field();

    auto subs = enumerate_subspaces(field, n);
    auto agrees = [&](const Matrix<Field>& m) {
        for (const auto& v : subs) {
            Subspace image = Subspace::from_matrix(v.basis() * m);
            if (a.rank(v) != b.rank(image)) return false;
        }
        return true;
    };

    if (iso) {
        if (iso->rows() != n || iso->cols() != n)
            throw InvalidArgument("DimensionMismatch: isomorphism must be an n x n matrix");
        if (rank(*iso) != n)
            throw InvalidArgument("the proposed isomorphism is singular");
        return agrees(*iso) ? iso : std::nullopt;
    }

    checked_order(field, n, 1ull << 6, "equivalence search is capped at q^n = 2^6");
    std::optional<Matrix<Field>> witness;
    std::vector<std::vector<Elem>> rows;
    bool stop = false;
    enumerate_gl(field, n, rows, [&](const Matrix<Field>& m) {
        if (agrees(m)) { witness = m; return true; }
        return false;
    }, stop);
    return witness;
}

} // namespace qmatroids
