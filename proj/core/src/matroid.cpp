#include "qmatroids/matroid.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <random>
#include <set>
#include <unordered_map>

namespace qmatroids {

std::optional<std::size_t> FlatLattice::find(std::uint64_t flat) const {
    for (std::size_t i = 0; i < flats.size(); ++i)
        if (flats[i] == flat) return i;
    return std::nullopt;
}

std::size_t FlatLattice::index_of(std::uint64_t flat) const {
    auto i = find(flat);
    if (!i) throw InvalidArgument("NotAFlat: the given subset is not a flat");
    return *i;
}

std::size_t FlatLattice::meet_idx(std::size_t i, std::size_t j) const {
    // Flats are closed under intersection.
    return index_of(flats[i] & flats[j]);
}

std::size_t FlatLattice::join_idx(std::size_t i, std::size_t j) const {
    std::uint64_t u = flats[i] | flats[j];
    for (std::size_t k = 0; k < flats.size(); ++k)
        if ((flats[k] & u) == u) return k; // first in (height, mask) order is minimal
    throw Error("internal: flat lattice has no top above a union");
}

struct Matroid::Impl {
    std::vector<std::string> labels;
    std::function<int(std::uint64_t)> rank_fn;

    mutable std::mutex memo_mx;
    mutable std::unordered_map<std::uint64_t, int> memo;

    mutable std::mutex flats_mx;
    mutable std::optional<FlatLattice> flats;

    int rank(std::uint64_t subset) const {
        {
            std::lock_guard<std::mutex> lock(memo_mx);
            auto it = memo.find(subset);
            if (it != memo.end()) return it->second;
        }
        int r = rank_fn(subset);
        std::lock_guard<std::mutex> lock(memo_mx);
        memo.emplace(subset, r);
        return r;
    }
};

Matroid::Matroid(std::vector<std::string> labels, std::function<int(std::uint64_t)> rank_fn)
    : impl_(std::make_shared<Impl>()) {
    if (labels.size() > 63)
        throw GuardError("TooLarge: matroid groundsets are capped at 63 elements");
    impl_->labels = std::move(labels);
    impl_->rank_fn = std::move(rank_fn);
}

Matroid Matroid::uniform(std::size_t k, std::size_t n) {
    if (k > n) throw InvalidArgument("uniform matroid requires k <= n");
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = "e" + std::to_string(i);
    return Matroid(std::move(labels), [k](std::uint64_t a) {
        return static_cast<int>(std::min<std::size_t>(k, std::popcount(a)));
    });
}

std::size_t Matroid::size() const { return impl_->labels.size(); }
const std::vector<std::string>& Matroid::labels() const { return impl_->labels; }

std::uint64_t Matroid::full_mask() const {
    std::size_t n = size();
    return n == 0 ? 0 : (n == 64 ? ~0ull : (1ull << n) - 1);
}

std::string Matroid::subset_str(std::uint64_t mask) const {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < size(); ++i) {
        if (!(mask >> i & 1)) continue;
        if (!first) s += ",";
        s += impl_->labels[i];
        first = false;
    }
    return s + "}";
}

int Matroid::rank(std::uint64_t subset) const {
    if (subset & ~full_mask())
        throw InvalidArgument("UnknownElement: subset mask uses bits outside the groundset");
    return impl_->rank(subset);
}

std::uint64_t Matroid::closure(std::uint64_t subset) const {
    int r = rank(subset);
    std::uint64_t cl = subset;
    for (std::size_t e = 0; e < size(); ++e) {
        if (subset >> e & 1) continue;
        if (rank(subset | (1ull << e)) == r) cl |= 1ull << e;
    }
    return cl;
}

bool Matroid::is_loop(std::size_t e) const { return rank(1ull << e) == 0; }

bool Matroid::is_coloop(std::size_t e) const {
    return rank(full_mask() & ~(1ull << e)) == rank_full() - 1;
}

Matroid Matroid::deletion(std::uint64_t a) const {
    if (a & ~full_mask())
        throw InvalidArgument("UnknownElement: subset mask uses bits outside the groundset");
    std::vector<std::size_t> kept;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < size(); ++i)
        if (!(a >> i & 1)) { kept.push_back(i); labels.push_back(impl_->labels[i]); }
    Matroid base = *this;
    return Matroid(std::move(labels), [base, kept](std::uint64_t sub) {
        std::uint64_t big = 0;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (sub >> j & 1) big |= 1ull << kept[j];
        return base.rank(big);
    });
}

Matroid Matroid::contraction(std::uint64_t a) const {
    if (a & ~full_mask())
        throw InvalidArgument("UnknownElement: subset mask uses bits outside the groundset");
    std::vector<std::size_t> kept;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < size(); ++i)
        if (!(a >> i & 1)) { kept.push_back(i); labels.push_back(impl_->labels[i]); }
    Matroid base = *this;
    int ra = rank(a);
    return Matroid(std::move(labels), [base, kept, a, ra](std::uint64_t sub) {
        std::uint64_t big = a;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (sub >> j & 1) big |= 1ull << kept[j];
        return base.rank(big) - ra;
    });
}

Matroid Matroid::dual() const {
    Matroid base = *this;
    std::uint64_t full = full_mask();
    int rs = rank_full();
    return Matroid(impl_->labels, [base, full, rs](std::uint64_t sub) {
        return static_cast<int>(std::popcount(sub)) - rs + base.rank(full & ~sub);
    });
}

Matroid Matroid::loop_extension(std::string label) const {
    std::vector<std::string> labels = impl_->labels;
    while (std::find(labels.begin(), labels.end(), label) != labels.end()) label += "'";
    labels.push_back(std::move(label));
    Matroid base = *this;
    std::uint64_t old_full = full_mask();
    return Matroid(std::move(labels), [base, old_full](std::uint64_t sub) {
        return base.rank(sub & old_full);
    });
}

const FlatLattice& Matroid::flats() const {
    std::lock_guard<std::mutex> lock(impl_->flats_mx);
    if (impl_->flats) return *impl_->flats;

    // Cover generation: the flats covering F are exactly the closures
    // cl(F + e) for e outside F, so a walk by rank layers finds everything.
    FlatLattice lat;
    std::set<std::pair<int, std::uint64_t>> ordered;
    std::uint64_t bottom = closure(0);
    ordered.emplace(rank(bottom), bottom);
    std::vector<std::uint64_t> current{bottom};
    std::set<std::uint64_t> seen{bottom};
    while (!current.empty()) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t f : current) {
            for (std::size_t e = 0; e < size(); ++e) {
                if (f >> e & 1) continue;
                std::uint64_t g = closure(f | (1ull << e));
                if (seen.insert(g).second) {
                    ordered.emplace(rank(g), g);
                    next.push_back(g);
                }
            }
        }
        current = std::move(next);
    }

    for (auto& [h, f] : ordered) {
        lat.flats.push_back(f);
        lat.height.push_back(h - rank(bottom));
    }
    // With the bottom's rank subtracted the heights start at 0; for a matroid
    // the bottom has rank 0 anyway, but contractions reuse this code path.

    lat.covers.resize(lat.flats.size());
    for (std::size_t i = 0; i < lat.flats.size(); ++i) {
        std::set<std::uint64_t> cov;
        for (std::size_t e = 0; e < size(); ++e) {
            if (lat.flats[i] >> e & 1) continue;
            cov.insert(closure(lat.flats[i] | (1ull << e)));
        }
        for (std::uint64_t g : cov) lat.covers[i].push_back(lat.index_of(g));
        std::sort(lat.covers[i].begin(), lat.covers[i].end());
    }

    lat.mobius.assign(lat.flats.size(), 0);
    lat.mobius[0] = 1;
    for (std::size_t i = 1; i < lat.flats.size(); ++i) {
        long long sum = 0;
        for (std::size_t j = 0; j < i; ++j)
            if ((lat.flats[j] & lat.flats[i]) == lat.flats[j]) sum += lat.mobius[j];
        lat.mobius[i] = -sum;
    }

    impl_->flats = std::move(lat);
    return *impl_->flats;
}

namespace {

Polynomial char_poly_definition(const Matroid& m) {
    if (m.size() > 20)
        throw GuardError("TooLarge: the definition method enumerates subsets, capped at 20 elements");
    int rs = m.rank_full();
    Polynomial out;
    for (std::uint64_t a = 0;; ++a) {
        int sign = (std::popcount(a) % 2 == 0) ? 1 : -1;
        out += Polynomial::monomial(sign, static_cast<std::size_t>(rs - m.rank(a)));
        if (a == m.full_mask()) break;
    }
    return out;
}

Polynomial char_poly_flats(const Matroid& m) {
    if (m.loops() != 0) return Polynomial();
    const FlatLattice& lat = m.flats();
    int rs = m.rank_full();
    Polynomial out;
    for (std::size_t i = 0; i < lat.size(); ++i)
        out += Polynomial::monomial(lat.mobius[i], static_cast<std::size_t>(rs - lat.height[i]));
    return out;
}

Polynomial char_poly_recursive(const Matroid& m) {
    if (m.size() == 0) return Polynomial(1);
    std::optional<std::size_t> e;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (!m.is_coloop(i)) { e = i; break; }
    if (e) {
        std::uint64_t bit = 1ull << *e;
        return char_poly_recursive(m.deletion(bit)) - char_poly_recursive(m.contraction(bit));
    }
    // Every element is a coloop; the least one splits off a factor of x - 1,
    // since deleting and contracting a coloop give the same minor.
    std::uint64_t bit = 1;
    return (Polynomial::x() - Polynomial(1)) * char_poly_recursive(m.contraction(bit));
}

} // namespace

Polynomial char_poly(const Matroid& m, CharPolyMethod method) {
    switch (method) {
        case CharPolyMethod::definition: return char_poly_definition(m);
        case CharPolyMethod::flats: return char_poly_flats(m);
        case CharPolyMethod::recursive:
            if (m.size() > 20)
                throw GuardError("TooLarge: the recursive method is capped at 20 elements");
            return char_poly_recursive(m);
    }
    throw InvalidArgument("unknown characteristic polynomial method");
}

AxiomReport check_matroid_axioms(const Matroid& m, unsigned seed, std::size_t sample_pairs) {
    AxiomReport rep;
    const std::size_t n = m.size();
    auto note = [&](const std::string& axiom, const std::string& witness) {
        if (rep.violations.size() < 16) rep.violations.push_back({axiom, witness});
    };
    auto check_bounds = [&](std::uint64_t a) {
        int r = m.rank(a);
        if (r < 0 || r > std::popcount(a))
            note("R1", "A=" + m.subset_str(a) + " r=" + std::to_string(r));
    };
    auto check_pair = [&](std::uint64_t a, std::uint64_t b) {
        int ra = m.rank(a), rb = m.rank(b);
        if ((a & b) == a && ra > rb)
            note("R2", "A=" + m.subset_str(a) + " B=" + m.subset_str(b));
        if (m.rank(a | b) + m.rank(a & b) > ra + rb)
            note("R3", "A=" + m.subset_str(a) + " B=" + m.subset_str(b));
        ++rep.checked;
    };

    std::uint64_t full = m.full_mask();
    if (n <= 12) {
        rep.exhaustive = true;
        for (std::uint64_t a = 0;; ++a) {
            check_bounds(a);
            for (std::uint64_t b = 0;; ++b) {
                check_pair(a, b);
                if (b == full) break;
            }
            if (a == full) break;
        }
    } else {
        rep.exhaustive = false;
        std::mt19937_64 rng(seed);
        check_bounds(0);
        check_bounds(full);
        for (std::size_t i = 0; i < sample_pairs; ++i) {
            std::uint64_t a = rng() & full, b = rng() & full;
            check_bounds(a);
            check_bounds(b);
            check_pair(a, b);
        }
    }
    return rep;
}

std::optional<std::vector<std::size_t>> matroids_equivalent(
    const Matroid& a, const Matroid& b,
    const std::optional<std::vector<std::size_t>>& bijection) {
    if (a.size() != b.size()) return std::nullopt;
    const std::size_t n = a.size();
    if (n > 20)
        throw GuardError("TooLarge: equivalence checking enumerates subsets, capped at 20 elements");

    auto agrees = [&](const std::vector<std::size_t>& perm) {
        for (std::uint64_t sub = 0;; ++sub) {
            std::uint64_t mapped = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (sub >> i & 1) mapped |= 1ull << perm[i];
            if (a.rank(sub) != b.rank(mapped)) return false;
            if (sub == a.full_mask()) break;
        }
        return true;
    };

    if (bijection) {
        if (bijection->size() != n)
            throw InvalidArgument("bijection size does not match the groundset");
        return agrees(*bijection) ? bijection : std::nullopt;
    }
    if (n > 8)
        throw GuardError("TooLarge: bijection search is capped at 8 elements");
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    do {
        if (agrees(perm)) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

} // namespace qmatroids
