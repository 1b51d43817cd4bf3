#include "qmatroids/projectivize.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace qmatroids {

namespace {

std::string default_instance(const QMatroid& qm) {
    std::ostringstream os;
    os << "q=" << qm.field()->q() << " n=" << qm.dim() << " rank=" << qm.rank_full();
    return os.str();
}

// New index of each kept element after removing `removed` from a groundset of
// `size` elements; kept elements stay in ascending order.
std::vector<std::size_t> removal_map(std::size_t size, std::uint64_t removed) {
    std::vector<std::size_t> map(size, static_cast<std::size_t>(-1));
    std::size_t next = 0;
    for (std::size_t i = 0; i < size; ++i)
        if (!(removed >> i & 1)) map[i] = next++;
    return map;
}

Matroid build_matroid(const QMatroid& source, const std::vector<ProjPoint>& points) {
    std::vector<std::string> labels;
    labels.reserve(points.size());
    for (const auto& p : points) labels.push_back(p.str());
    return Matroid(std::move(labels), [source, points](std::uint64_t mask) {
        std::vector<std::vector<Elem>> reps;
        for (std::size_t i = 0; i < points.size(); ++i)
            if (mask >> i & 1) reps.push_back(points[i].rep);
        return source.rank(Subspace::span(source.field(), source.dim(), reps));
    });
}

} // namespace

Projectivization::Projectivization(const QMatroid& source)
    : source_(source),
      points_(all_projective_points(source.field(), source.dim())),
      matroid_(build_matroid(source_, points_)) {
    if (points_.size() > 63)
        throw GuardError("TooLarge: the projective space has " + std::to_string(points_.size()) +
                         " points; at most 63 are supported");
}

std::size_t Projectivization::index_of(const ProjPoint& p) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || !(*it == p))
        throw InvalidArgument("UnknownElement: " + p.str() + " is not a point of this space");
    return static_cast<std::size_t>(it - points_.begin());
}

Subspace Projectivization::span_of(std::uint64_t mask) const {
    std::vector<std::vector<Elem>> reps;
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (mask >> i & 1) reps.push_back(points_[i].rep);
    return Subspace::span(source_.field(), source_.dim(), reps);
}

std::uint64_t Projectivization::flat_image(const Subspace& f) const {
    if (f.ambient_dim() != source_.dim() || !(*f.field() == *source_.field()))
        throw InvalidArgument("AmbientMismatch: subspace does not live in the source space");
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (f.contains_vector(points_[i].rep)) mask |= 1ull << i;
    return mask;
}

std::optional<Subspace> Projectivization::flat_preimage(std::uint64_t mask) const {
    Subspace v = span_of(mask);
    if (flat_image(v) != mask) return std::nullopt; // not additively closed
    return v;
}

std::uint64_t Projectivization::q_set(const Subspace& v) const {
    return full_mask() & ~flat_image(v);
}

std::uint64_t Projectivization::q_set_star(const Subspace& v, std::uint64_t a) const {
    std::uint64_t q = q_set(v);
    if ((a & ~q) != 0)
        throw InvalidArgument("NotContained: the removed set must lie inside Q_V");
    return q & ~a;
}

CheckResult verify_minor_correspondence(const QMatroid& qm, const Subspace& w,
                                        const Subspace& v, std::string instance) {
    const FieldPtr& field = qm.field();
    std::size_t n = qm.dim();
    if (w.ambient_dim() != n || v.ambient_dim() != n || !(*w.field() == *field) ||
        !(*v.field() == *field))
        throw InvalidArgument("AmbientMismatch: the split must live in the ambient space");
    if (meet(w, v).dim() != 0 || w.dim() + v.dim() != n)
        throw InvalidArgument("NotComplementary: the subspaces do not form a direct sum");

    CheckResult res{"minor-correspondence",
                    instance.empty() ? default_instance(qm) + " W=" + w.str() + " V=" + v.str()
                                     : std::move(instance),
                    "pass", ""};
    auto fail = [&](const std::string& why) {
        res.status = "fail";
        if (res.witness.empty()) res.witness = why;
    };

    Projectivization proj(qm);
    const auto& pm = proj.matroid();

    // S: the points of the canonical basis of W.
    std::uint64_t s_mask = 0;
    for (std::size_t r = 0; r < w.dim(); ++r) {
        std::vector<Elem> row(w.basis().row(r));
        s_mask |= 1ull << proj.index_of(normalize_point(field, row));
    }

    // N = (P(M)/S) minus Q_V^{*S}, tracked through the index re-embeddings of
    // the matroid minors; its groundset is exactly the points of V.
    auto after_s = removal_map(proj.points().size(), s_mask);
    std::uint64_t qstar = proj.q_set_star(v, s_mask);
    Matroid contracted = pm.contraction(s_mask);
    std::uint64_t qstar_new = 0;
    for (std::size_t i = 0; i < proj.points().size(); ++i)
        if (qstar >> i & 1) qstar_new |= 1ull << after_s[i];
    Matroid nside = contracted.deletion(qstar_new);
    // Position of each original point of V inside N's groundset.
    auto after_q = removal_map(contracted.size(), qstar_new);
    auto n_index = [&](std::size_t orig) { return after_q[after_s[orig]]; };

    // Left side: P(M/W), together with the coset-to-V bijection.
    QMatroid mw = qm.contraction(w);
    Projectivization pmw(mw);
    QuotientSpace quot(field, n, w);
    std::vector<std::size_t> psi(pmw.points().size());
    auto wvecs = w.vectors();
    for (std::size_t i = 0; i < pmw.points().size(); ++i) {
        // The unique representative in V of the lifted coset: x - w0 for the
        // w0 in W that lands the difference inside V (the direct sum makes it
        // unique; the spaces here are small enough to scan).
        std::vector<Elem> x = quot.lift(pmw.points()[i].rep);
        bool found = false;
        for (const auto& w0 : wvecs) {
            std::vector<Elem> cand(n);
            for (std::size_t c = 0; c < n; ++c) cand[c] = field->sub(x[c], w0[c]);
            if (v.contains_vector(cand)) {
                psi[i] = n_index(proj.index_of(normalize_point(field, cand)));
                found = true;
                break;
            }
        }
        if (!found) throw Error("internal: coset has no representative in the complement");
    }

    // Rank agreement over subsets of the common groundset.
    std::size_t t = pmw.points().size();
    auto check_subset = [&](std::uint64_t a) {
        std::uint64_t image = 0;
        for (std::size_t i = 0; i < t; ++i)
            if (a >> i & 1) image |= 1ull << psi[i];
        if (pmw.matroid().rank(a) != nside.rank(image))
            fail("contraction side differs on " + pmw.matroid().subset_str(a));
    };
    if (t <= 16) {
        for (std::uint64_t a = 0; a < (1ull << t); ++a) check_subset(a);
    } else {
        std::mt19937_64 rng(1);
        for (int i = 0; i < 5000; ++i) check_subset(rng() & ((1ull << t) - 1));
    }

    // Second equivalence: P(M minus V-perp) vs P(M) minus Q_V.  The deletion
    // is coordinatized along the canonical basis of V, which maps its points
    // back into the ambient space.
    QMatroid mdel = qm.deletion(orthogonal(v));
    Projectivization pdel(mdel);
    Matroid dside = pm.deletion(proj.q_set(v));
    auto after_del = removal_map(proj.points().size(), proj.q_set(v));
    std::size_t td = pdel.points().size();
    std::vector<std::size_t> embed(td);
    for (std::size_t i = 0; i < td; ++i) {
        Matrix<Field> row(field, 1, pdel.source().dim());
        row.set_row(0, pdel.points()[i].rep);
        Matrix<Field> amb = row * v.basis();
        embed[i] = after_del[proj.index_of(normalize_point(field, amb.row(0)))];
    }
    auto check_del = [&](std::uint64_t a) {
        std::uint64_t image = 0;
        for (std::size_t i = 0; i < td; ++i)
            if (a >> i & 1) image |= 1ull << embed[i];
        if (pdel.matroid().rank(a) != dside.rank(image))
            fail("deletion side differs on " + pdel.matroid().subset_str(a));
    };
    if (td <= 16) {
        for (std::uint64_t a = 0; a < (1ull << td); ++a) check_del(a);
    } else {
        std::mt19937_64 rng(2);
        for (int i = 0; i < 5000; ++i) check_del(rng() & ((1ull << td) - 1));
    }

    return res;
}

CheckResult char_poly_consistency(const QMatroid& qm, std::string instance) {
    CheckResult res{"charpoly-projectivization",
                    instance.empty() ? default_instance(qm) : std::move(instance), "pass", ""};
    Projectivization proj(qm);
    if (char_poly(qm) != char_poly(proj.matroid())) {
        res.status = "fail";
        res.witness = "chi of the source and of its projectivization differ";
        return res;
    }
    for (const auto& v : enumerate_subspaces(qm.field(), qm.dim())) {
        Polynomial lhs = char_poly(qm.contraction(v));
        Polynomial rhs = char_poly(proj.matroid().contraction(proj.flat_image(v)));
        if (lhs != rhs) {
            res.status = "fail";
            res.witness = "contraction by " + v.str() + ": " + lhs.str() + " vs " + rhs.str();
            return res;
        }
    }
    return res;
}

namespace {

// Bijection check between a q-matroid flat lattice and a matroid flat
// lattice under an explicit flat-to-mask map; heights, covers, meets and
// joins must all transport.
void check_lattice_transport(const QFlatLattice& qf, const FlatLattice& mf,
                             const std::function<std::uint64_t(const Subspace&)>& image,
                             CheckResult& res) {
    auto fail = [&](const std::string& why) {
        res.status = "fail";
        if (res.witness.empty()) res.witness = why;
    };
    if (qf.size() != mf.size()) {
        fail("the lattices have different sizes");
        return;
    }
    std::vector<std::size_t> to(qf.size());
    for (std::size_t i = 0; i < qf.size(); ++i) {
        auto found = mf.find(image(qf.flats[i]));
        if (!found) {
            fail("image of " + qf.flats[i].str() + " is not a flat of the projectivization");
            return;
        }
        to[i] = *found;
        if (qf.height[i] != mf.height[*found]) {
            fail("height mismatch at " + qf.flats[i].str());
            return;
        }
    }
    for (std::size_t i = 0; i < qf.size(); ++i) {
        std::vector<std::size_t> mapped;
        for (auto c : qf.covers[i]) mapped.push_back(to[c]);
        std::sort(mapped.begin(), mapped.end());
        if (mapped != mf.covers[to[i]]) {
            fail("cover sets differ at " + qf.flats[i].str());
            return;
        }
        for (std::size_t j = 0; j < qf.size(); ++j) {
            if (to[qf.meet_idx(i, j)] != mf.meet_idx(to[i], to[j])) {
                fail("meet differs at (" + qf.flats[i].str() + ", " + qf.flats[j].str() + ")");
                return;
            }
            if (to[qf.join_idx(i, j)] != mf.join_idx(to[i], to[j])) {
                fail("join differs at (" + qf.flats[i].str() + ", " + qf.flats[j].str() + ")");
                return;
            }
        }
    }
}

} // namespace

CheckResult verify_flat_lattice_iso(const QMatroid& qm, std::string instance) {
    CheckResult res{"flat-lattice-isomorphism",
                    instance.empty() ? default_instance(qm) : std::move(instance), "pass", ""};
    Projectivization proj(qm);
    check_lattice_transport(qm.flats(), proj.matroid().flats(),
                            [&](const Subspace& f) { return proj.flat_image(f); }, res);
    return res;
}

CheckResult verify_contraction_flat_iso(const QMatroid& qm, const Subspace& flat,
                                        std::string instance) {
    CheckResult res{"contraction-flat-lattice-isomorphism",
                    instance.empty() ? default_instance(qm) + " F=" + flat.str()
                                     : std::move(instance),
                    "pass", ""};
    if (!qm.flats().find(flat))
        throw InvalidArgument("NotAFlat: " + flat.str() + " is not a flat of the q-matroid");

    Projectivization proj(qm);
    QMatroid contracted = qm.contraction(flat);
    Matroid pm_contracted = proj.matroid().contraction(proj.flat_image(flat));

    // Transport rule: a flat F' of M/F pulls back along the quotient to a
    // subspace of E; its points, minus the points of F, form the matching
    // flat of P(M)/P(F) in the contracted index order.
    QuotientSpace quot(qm.field(), qm.dim(), flat);
    auto shift = removal_map(proj.points().size(), proj.flat_image(flat));
    auto image = [&](const Subspace& fprime) {
        std::uint64_t up = proj.flat_image(quot.preimage(fprime)) & ~proj.flat_image(flat);
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < proj.points().size(); ++i)
            if (up >> i & 1) mask |= 1ull << shift[i];
        return mask;
    };
    check_lattice_transport(contracted.flats(), pm_contracted.flats(), image, res);
    return res;
}

} // namespace qmatroids
