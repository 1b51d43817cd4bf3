#include "qmatroids/qmaps.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace qmatroids {

namespace {

std::size_t qpow(unsigned q, std::size_t k) {
    std::size_t out = 1;
    while (k--) out *= q;
    return out;
}

std::string map_instance(const LMap& sigma) {
    std::ostringstream os;
    os << "q=" << sigma.field()->q() << " dom=" << sigma.domain_dim()
       << " cod=" << sigma.codomain_dim();
    return os.str();
}

std::string vec_str(const std::vector<Elem>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

void check_pair(const LMap& sigma, const QMatroid& m, const QMatroid& n) {
    if (sigma.field()->q() != m.field()->q() || sigma.field()->q() != n.field()->q())
        throw InvalidArgument("FieldMismatch: map and q-matroids use different base fields");
    if (sigma.domain_dim() != m.dim() || sigma.codomain_dim() != n.dim())
        throw InvalidArgument("AmbientMismatch: map shape does not match the groundspaces");
}

} // namespace

LMap::LMap(FieldPtr field, std::size_t dom, std::size_t cod)
    : field_(std::move(field)), domain_dim_(dom), codomain_dim_(cod) {}

LMap LMap::linear(Matrix<Field> a) {
    LMap out(a.field(), a.rows(), a.cols());
    out.matrix_ = std::move(a);
    return out;
}

LMap lmap_from_matrix(const Matrix<Field>& a) { return LMap::linear(a); }

LMap LMap::tabulated(FieldPtr field, std::size_t domain_dim, std::size_t codomain_dim,
                     std::function<std::vector<Elem>(const std::vector<Elem>&)> fn) {
    if (qpow(field->q(), domain_dim) > 1024)
        throw GuardError("TooLarge: tabulated maps are validated vector by vector, "
                         "which needs q^dim <= 1024");
    LMap out(field, domain_dim, codomain_dim);
    out.fn_ = std::move(fn);
    // The defining property: the image of every subspace is a subspace.
    for (const auto& v : enumerate_subspaces(out.field_, domain_dim)) {
        std::vector<std::vector<Elem>> imgs;
        for (const auto& x : v.vectors()) imgs.push_back(out.apply(x));
        std::sort(imgs.begin(), imgs.end());
        imgs.erase(std::unique(imgs.begin(), imgs.end()), imgs.end());
        Subspace span = Subspace::span(out.field_, codomain_dim, imgs);
        if (imgs.size() != qpow(out.field_->q(), span.dim()))
            throw InvalidArgument("NotAnLMap: the image of " + v.str() +
                                  " is not a subspace");
    }
    return out;
}

std::vector<Elem> LMap::apply(const std::vector<Elem>& v) const {
    if (v.size() != domain_dim_)
        throw InvalidArgument("DimensionMismatch: vector does not live in the domain");
    for (Elem e : v)
        if (e >= field_->q())
            throw InvalidArgument("DimensionMismatch: coordinate outside the field");
    if (matrix_) {
        Matrix<Field> rv(field_, 1, domain_dim_, v);
        return (rv * *matrix_).row(0);
    }
    std::vector<Elem> out = fn_(v);
    if (out.size() != codomain_dim_)
        throw InvalidArgument("DimensionMismatch: tabulated map returned a vector "
                              "outside the codomain");
    return out;
}

Subspace LMap::image(const Subspace& v) const {
    if (v.ambient_dim() != domain_dim_)
        throw InvalidArgument("AmbientMismatch: subspace does not live in the domain");
    if (v.field()->q() != field_->q())
        throw InvalidArgument("FieldMismatch: subspace is over a different field");
    if (matrix_) {
        if (v.dim() == 0) return Subspace::zero(field_, codomain_dim_);
        return Subspace::from_matrix(v.basis() * *matrix_);
    }
    std::vector<std::vector<Elem>> imgs;
    for (const auto& x : v.vectors()) imgs.push_back(apply(x));
    return Subspace::span(field_, codomain_dim_, imgs);
}

ExtendedProjMap::ExtendedProjMap(LMap sigma)
    : sigma_(std::move(sigma)),
      dom_points_(all_projective_points(sigma_.field(), sigma_.domain_dim())),
      cod_points_(all_projective_points(sigma_.field(), sigma_.codomain_dim())) {
    images_.reserve(dom_points_.size());
    for (const auto& p : dom_points_) {
        auto w = sigma_.apply(p.rep);
        if (std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; })) {
            images_.push_back(cod_points_.size()); // the adjoined zero o
            continue;
        }
        ProjPoint q = normalize_point(sigma_.field(), w);
        auto it = std::lower_bound(cod_points_.begin(), cod_points_.end(), q);
        images_.push_back(static_cast<std::size_t>(it - cod_points_.begin()));
    }
}

ExtendedProjMap induced_proj_map(const LMap& sigma) { return ExtendedProjMap(sigma); }

std::size_t ExtendedProjMap::apply_index(std::size_t i) const {
    if (i >= dom_points_.size())
        throw InvalidArgument("UnknownElement: point index outside the domain");
    return images_[i];
}

std::optional<ProjPoint> ExtendedProjMap::apply(const ProjPoint& p) const {
    auto it = std::lower_bound(dom_points_.begin(), dom_points_.end(), p);
    if (it == dom_points_.end() || !(*it == p))
        throw InvalidArgument("UnknownElement: " + p.str() + " is not a domain point");
    std::size_t j = images_[static_cast<std::size_t>(it - dom_points_.begin())];
    if (j == cod_points_.size()) return std::nullopt;
    return cod_points_[j];
}

bool is_qweak(const LMap& sigma, const QMatroid& m, const QMatroid& n) {
    check_pair(sigma, m, n);
    for (const auto& v : enumerate_subspaces(m.field(), m.dim()))
        if (n.rank(sigma.image(v)) > m.rank(v)) return false;
    return true;
}

bool is_qstrong(const LMap& sigma, const QMatroid& m, const QMatroid& n) {
    check_pair(sigma, m, n);
    auto domain_vectors = Subspace::full(m.field(), m.dim()).vectors();
    for (const auto& f : n.flats().flats) {
        std::vector<std::vector<Elem>> pre;
        for (const auto& v : domain_vectors)
            if (f.contains_vector(sigma.apply(v))) pre.push_back(v);
        Subspace s = Subspace::span(m.field(), m.dim(), pre);
        // For a non-linear map the preimage of a subspace need not be one;
        // the flat condition then simply fails.
        if (pre.size() != qpow(m.field()->q(), s.dim())) return false;
        if (!(m.qclosure(s) == s)) return false;
    }
    return true;
}

bool is_weak(const ExtendedProjMap& sigma_l, const Matroid& m, const Matroid& n,
             unsigned seed, std::size_t samples) {
    if (m.size() != sigma_l.domain_points().size() ||
        n.size() != sigma_l.codomain_points().size())
        throw InvalidArgument("AmbientMismatch: matroid groundsets do not match "
                              "the projective point lists");
    Matroid mo = m.loop_extension();
    Matroid no = n.loop_extension();
    const std::size_t om = m.size(), on = n.size();
    auto image_mask = [&](std::uint64_t a) {
        std::uint64_t img = 0;
        for (std::size_t i = 0; i <= om; ++i)
            if (a >> i & 1) img |= 1ull << (i == om ? on : sigma_l.apply_index(i));
        return img;
    };
    auto ok = [&](std::uint64_t a) { return no.rank(image_mask(a)) <= mo.rank(a); };

    const std::size_t bits = om + 1;
    if (bits <= 16) {
        for (std::uint64_t a = 0; a < (1ull << bits); ++a)
            if (!ok(a)) return false;
        return true;
    }
    std::mt19937_64 rng(seed);
    const std::uint64_t full = bits == 64 ? ~0ull : (1ull << bits) - 1;
    for (std::size_t t = 0; t < samples; ++t)
        if (!ok(rng() & full)) return false;
    return ok(full);
}

bool is_strong(const ExtendedProjMap& sigma_l, const Matroid& m, const Matroid& n) {
    if (m.size() != sigma_l.domain_points().size() ||
        n.size() != sigma_l.codomain_points().size())
        throw InvalidArgument("AmbientMismatch: matroid groundsets do not match "
                              "the projective point lists");
    Matroid mo = m.loop_extension();
    Matroid no = n.loop_extension();
    const std::size_t om = m.size(), on = n.size();
    for (std::uint64_t f : no.flats().flats) {
        std::uint64_t pre = 0;
        for (std::size_t i = 0; i <= om; ++i) {
            std::size_t j = i == om ? on : sigma_l.apply_index(i);
            if (f >> j & 1) pre |= 1ull << i;
        }
        if (mo.closure(pre) != pre) return false;
    }
    return true;
}

Subspace sigma_sharp(const LMap& sigma, const QMatroid& m, const QMatroid& n,
                     const Subspace& flat) {
    check_pair(sigma, m, n);
    if (flat.ambient_dim() != m.dim())
        throw InvalidArgument("AmbientMismatch: flat does not live in the domain space");
    if (!(m.qclosure(flat) == flat))
        throw InvalidArgument("NotAFlat: " + flat.str() + " is not a flat of the domain");
    return n.qclosure(sigma.image(flat));
}

StrongMapReport check_strong_characterization(const LMap& sigma, const QMatroid& m,
                                              const QMatroid& n) {
    check_pair(sigma, m, n);
    StrongMapReport rep;
    rep.q_strong = is_qstrong(sigma, m, n);

    const QFlatLattice& fm = m.flats();
    const QFlatLattice& fn = n.flats();
    std::vector<Subspace> sharp;
    sharp.reserve(fm.flats.size());
    for (const auto& f : fm.flats) sharp.push_back(n.qclosure(sigma.image(f)));

    rep.join_preserving = true;
    for (std::size_t i = 0; i < fm.flats.size() && rep.join_preserving; ++i)
        for (std::size_t j = i; j < fm.flats.size(); ++j) {
            Subspace mjoin = m.qclosure(join(fm.flats[i], fm.flats[j]));
            Subspace lhs = n.qclosure(sigma.image(mjoin));
            Subspace rhs = n.qclosure(join(sharp[i], sharp[j]));
            if (!(lhs == rhs)) {
                rep.join_preserving = false;
                rep.witness = "join not preserved at F1=" + fm.flats[i].str() +
                              " F2=" + fm.flats[j].str();
                break;
            }
        }

    rep.atoms_to_atoms = true;
    const Subspace& bottom_n = fn.flats.front();
    for (std::size_t i = 0; i < fm.flats.size(); ++i) {
        if (fm.height[i] != 1) continue;
        const Subspace& img = sharp[i];
        bool ok = img == bottom_n;
        for (std::size_t j = 0; j < fn.flats.size() && !ok; ++j)
            ok = fn.height[j] == 1 && fn.flats[j] == img;
        if (!ok) {
            rep.atoms_to_atoms = false;
            if (rep.witness.empty())
                rep.witness = "atom " + fm.flats[i].str() +
                              " maps to the non-atom flat " + img.str();
            break;
        }
    }

    rep.point_compatible = true;
    for (const auto& v : Subspace::full(m.field(), m.dim()).vectors()) {
        Subspace lhs = n.qclosure(sigma.image(m.qclosure(Subspace::line(m.field(), v))));
        Subspace rhs = n.qclosure(Subspace::line(n.field(), sigma.apply(v)));
        if (!(lhs == rhs)) {
            rep.point_compatible = false;
            if (rep.witness.empty())
                rep.witness = "at v=" + vec_str(v) + ": sharp(cl<v>) = " + lhs.str() +
                              " but cl<sigma(v)> = " + rhs.str();
            break;
        }
    }

    if (!rep.consistent() && rep.witness.empty())
        rep.witness = std::string("characterization mismatch: conditions hold=") +
                      (rep.conditions() ? "true" : "false") + " but q-strong=" +
                      (rep.q_strong ? "true" : "false");
    return rep;
}

CheckResult check_proj_commutation(const LMap& sigma, std::string instance) {
    CheckResult res{"proj-map-commutation",
                    instance.empty() ? map_instance(sigma) : std::move(instance),
                    "pass", ""};
    for (const auto& v : Subspace::full(sigma.field(), sigma.domain_dim()).vectors()) {
        Subspace lhs = sigma.image(Subspace::line(sigma.field(), v));
        Subspace rhs = Subspace::line(sigma.field(), sigma.apply(v));
        if (!(lhs == rhs)) {
            res.status = "fail";
            res.witness = "at v=" + vec_str(v) + ": sigma_L<v> = " + lhs.str() +
                          " but <sigma(v)> = " + rhs.str();
            return res;
        }
    }
    return res;
}

CheckResult check_sharp_commutation(const LMap& sigma, const QMatroid& m, const QMatroid& n,
                                    std::string instance) {
    check_pair(sigma, m, n);
    CheckResult res{"sharp-commutation",
                    instance.empty() ? map_instance(sigma) : std::move(instance),
                    "pass", ""};
    Projectivization pm(m), pn(n);
    ExtendedProjMap sl(sigma);
    for (const auto& f : m.flats().flats) {
        Subspace sh = n.qclosure(sigma.image(f));
        std::uint64_t lhs = pn.flat_image(sh);
        std::uint64_t mapped = 0;
        std::uint64_t src = pm.flat_image(f);
        for (std::size_t i = 0; i < pm.points().size(); ++i) {
            if (!(src >> i & 1)) continue;
            std::size_t j = sl.apply_index(i);
            if (j < pn.points().size()) mapped |= 1ull << j;
        }
        std::uint64_t rhs = pn.matroid().closure(mapped);
        if (lhs != rhs) {
            res.status = "fail";
            res.witness = "at F=" + f.str() + ": P(sharp(F)) = " + pn.matroid().subset_str(lhs) +
                          " but sharp_L(P(F)) = " + pn.matroid().subset_str(rhs);
            return res;
        }
    }
    return res;
}

CheckResult check_map_functor(const LMap& sigma, const QMatroid& m, const QMatroid& n,
                              std::string instance) {
    check_pair(sigma, m, n);
    CheckResult res{"map-functor",
                    instance.empty() ? map_instance(sigma) : std::move(instance),
                    "pass", ""};
    bool qw = is_qweak(sigma, m, n);
    bool qs = is_qstrong(sigma, m, n);
    Projectivization pm(m), pn(n);
    ExtendedProjMap sl(sigma);
    bool w = is_weak(sl, pm.matroid(), pn.matroid());
    bool s = is_strong(sl, pm.matroid(), pn.matroid());
    auto yn = [](bool b) { return b ? "true" : "false"; };
    if (qw != w) {
        res.status = "fail";
        res.witness = std::string("q-weak=") + yn(qw) + " but weak=" + yn(w);
    } else if (qs != s) {
        res.status = "fail";
        res.witness = std::string("q-strong=") + yn(qs) + " but strong=" + yn(s);
    } else if (qs && !qw) {
        res.status = "fail";
        res.witness = "q-strong map is not q-weak";
    }
    return res;
}

} // namespace qmatroids
