#include "qmatroids/serialize.hpp"

#include <bit>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qmatroids {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw ParseError("Parse: " + msg); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        fail(e.what());
    }
}

const json& member(const json& j, const char* key) {
    if (!j.is_object()) fail(std::string("expected an object holding '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) fail(std::string("missing key '") + key + "'");
    return *it;
}

std::uint64_t get_uint(const json& j, const char* what, std::uint64_t max_value) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        fail(std::string(what) + " must be a non-negative integer");
    auto v = j.get<std::uint64_t>();
    if (v > max_value)
        fail(std::string(what) + " = " + std::to_string(v) + " exceeds " +
             std::to_string(max_value));
    return v;
}

std::vector<Elem> get_row(const json& j, std::size_t cols, std::uint64_t max_entry,
                          const char* what) {
    if (!j.is_array() || j.size() != cols)
        fail(std::string(what) + " must be an array of " + std::to_string(cols) + " entries");
    std::vector<Elem> row(cols);
    for (std::size_t c = 0; c < cols; ++c)
        row[c] = static_cast<Elem>(get_uint(j[c], "matrix entry", max_entry));
    return row;
}

json rows_json(const std::vector<std::vector<Elem>>& rows) {
    json out = json::array();
    for (const auto& r : rows) {
        json jr = json::array();
        for (Elem e : r) jr.push_back(e);
        out.push_back(std::move(jr));
    }
    return out;
}

template <class F>
json matrix_obj(const Matrix<F>& m, unsigned q, unsigned deg) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
        rows.push_back(std::move(row));
    }
    return json{{"field", {{"q", q}, {"m", deg}}},
                {"rows", m.rows()},
                {"cols", m.cols()},
                {"entries", std::move(rows)}};
}

// Size-guard conditions (q too large, q^m too large, ...) must surface as the
// library's GuardError, so field construction is attempted before any
// parse-level cap could reject the value; only malformed structure and
// out-of-range entries become ParseError.
FieldPtr make_base_field(unsigned q) {
    try {
        return Field::make(q);
    } catch (const GuardError&) {
        throw;
    } catch (const InvalidArgument& e) {
        fail(e.what());
    }
}

ExtFieldPtr make_ext_field(const FieldPtr& base, unsigned m,
                           const std::optional<std::vector<Elem>>& modulus = std::nullopt) {
    try {
        return ExtField::make(base, m, modulus);
    } catch (const GuardError&) {
        throw;
    } catch (const InvalidArgument& e) {
        fail(e.what());
    }
}

struct MatrixHeader {
    unsigned q = 0, m = 0;
    std::size_t rows = 0, cols = 0;
};

MatrixHeader matrix_header(const json& j) {
    MatrixHeader h;
    const json& f = member(j, "field");
    h.q = static_cast<unsigned>(get_uint(member(f, "q"), "field q", (1u << 31) - 1));
    h.m = static_cast<unsigned>(get_uint(member(f, "m"), "field m", 1 << 20));
    h.rows = get_uint(member(j, "rows"), "rows", 1 << 12);
    h.cols = get_uint(member(j, "cols"), "cols", 1 << 12);
    return h;
}

std::vector<Elem> matrix_entries(const json& j, const MatrixHeader& h, std::uint64_t max_entry) {
    const json& entries = member(j, "entries");
    if (!entries.is_array() || entries.size() != h.rows)
        fail("entries must be an array of " + std::to_string(h.rows) + " rows");
    std::vector<Elem> out;
    out.reserve(h.rows * h.cols);
    for (std::size_t r = 0; r < h.rows; ++r) {
        auto row = get_row(entries[r], h.cols, max_entry, "matrix row");
        out.insert(out.end(), row.begin(), row.end());
    }
    return out;
}

json subspace_obj(const Subspace& s) {
    std::vector<std::vector<Elem>> rows;
    for (std::size_t r = 0; r < s.dim(); ++r) rows.push_back(s.basis().row(r));
    return json{{"q", s.field()->q()},
                {"n", s.ambient_dim()},
                {"basis", rows_json(rows)}};
}

Subspace subspace_from_obj(const json& j) {
    unsigned q = static_cast<unsigned>(get_uint(member(j, "q"), "q", (1u << 31) - 1));
    std::size_t n = get_uint(member(j, "n"), "n", 1 << 12);
    auto field = make_base_field(q);
    const json& basis = member(j, "basis");
    if (!basis.is_array()) fail("basis must be an array of rows");
    std::vector<std::vector<Elem>> rows;
    for (const auto& r : basis) rows.push_back(get_row(r, n, q - 1, "basis row"));
    return Subspace::span(field, n, rows);
}

// Flats as basis-row lists; the zero space is the empty list.
json flat_obj(const Subspace& f) {
    std::vector<std::vector<Elem>> rows;
    for (std::size_t r = 0; r < f.dim(); ++r) rows.push_back(f.basis().row(r));
    return rows_json(rows);
}

QMatroid qmatroid_from_obj(const json& j) {
    unsigned q = static_cast<unsigned>(get_uint(member(j, "q"), "q", (1u << 31) - 1));
    std::size_t n = get_uint(member(j, "n"), "n", 1 << 12);
    auto field = make_base_field(q);
    const json& jf = member(j, "flats");
    const json& jh = member(j, "heights");
    if (!jf.is_array() || !jh.is_array() || jf.size() != jh.size())
        fail("flats and heights must be arrays of equal length");
    std::vector<Subspace> flats;
    flats.reserve(jf.size());
    for (const auto& fl : jf) {
        if (!fl.is_array()) fail("a flat must be an array of basis rows");
        std::vector<std::vector<Elem>> rows;
        for (const auto& r : fl) rows.push_back(get_row(r, n, q - 1, "flat basis row"));
        flats.push_back(Subspace::span(field, n, rows));
    }
    QMatroid qm = [&] {
        try {
            return QMatroid::from_flats(field, n, flats);
        } catch (const GuardError&) {
            throw;
        } catch (const InvalidArgument& e) {
            fail(e.what());
        }
    }();
    for (std::size_t i = 0; i < flats.size(); ++i) {
        long long h = static_cast<long long>(get_uint(jh[i], "height", 63));
        if (qm.rank(flats[i]) != h)
            fail("declared height " + std::to_string(h) + " of flat " + std::to_string(i) +
                 " does not match its reconstructed rank " +
                 std::to_string(qm.rank(flats[i])));
    }
    return qm;
}

LinearCode code_from_obj(const json& j) {
    unsigned q = static_cast<unsigned>(get_uint(member(j, "q"), "q", (1u << 31) - 1));
    unsigned m = static_cast<unsigned>(get_uint(member(j, "m"), "m", 1 << 20));
    if (m < 1) fail("m must be at least 1");
    std::size_t n = get_uint(member(j, "n"), "n", 1 << 12);
    std::size_t k = get_uint(member(j, "k"), "k", 1 << 12);

    FieldPtr base = make_base_field(q);

    std::optional<std::vector<Elem>> modulus;
    if (j.contains("modulus")) {
        const json& jm = j["modulus"];
        if (!jm.is_array() || jm.size() != static_cast<std::size_t>(m) + 1)
            fail("modulus must list " + std::to_string(m + 1) + " coefficients");
        std::vector<Elem> coeffs;
        for (const auto& c : jm)
            coeffs.push_back(static_cast<Elem>(get_uint(c, "modulus coefficient", q - 1)));
        modulus = std::move(coeffs);
    }
    ExtFieldPtr ext = make_ext_field(base, m, modulus);

    const json& jg = member(j, "G");
    if (!jg.is_array() || jg.size() != k)
        fail("G must be an array of " + std::to_string(k) + " rows");
    std::vector<Elem> entries;
    entries.reserve(k * n);
    for (std::size_t r = 0; r < k; ++r) {
        auto row = get_row(jg[r], n, ext->order() - 1, "generator row");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    try {
        return LinearCode(Matrix<ExtField>(ext, k, n, std::move(entries)));
    } catch (const GuardError&) {
        throw;
    } catch (const InvalidArgument& e) {
        fail(e.what());
    }
}

json check_obj(const CheckResult& r) {
    return json{{"theorem", r.theorem},
                {"instance", r.instance},
                {"status", r.status},
                {"witness", r.witness}};
}

std::string subspace_compact(const Subspace& s) {
    if (s.is_zero()) return "0";
    std::string out;
    for (std::size_t r = 0; r < s.dim(); ++r) {
        if (r) out += ';';
        auto row = s.basis().row(r);
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += '.';
            out += std::to_string(row[c]);
        }
    }
    return out;
}

} // namespace

// ---- emitters ----

std::string matrix_json(const Matrix<Field>& m) {
    return dump(matrix_obj(m, m.field()->q(), 1));
}

std::string matrix_json(const Matrix<ExtField>& m) {
    return dump(matrix_obj(m, m.field()->base()->q(), m.field()->m()));
}

std::string subspace_json(const Subspace& s) { return dump(subspace_obj(s)); }

std::string matroid_json(const Matroid& m) {
    json flats = json::array();
    const FlatLattice& fl = m.flats();
    for (std::size_t i = 0; i < fl.size(); ++i) {
        json elems = json::array();
        for (std::size_t e = 0; e < m.size(); ++e)
            if (fl.flats[i] & (std::uint64_t(1) << e)) elems.push_back(e);
        flats.push_back(json{{"elements", std::move(elems)}, {"rank", m.rank(fl.flats[i])}});
    }
    return dump(json{{"groundset", m.labels()}, {"flats", std::move(flats)}});
}

std::string qmatroid_json(const QMatroid& m) {
    const QFlatLattice& fl = m.flats();
    json flats = json::array();
    json heights = json::array();
    for (std::size_t i = 0; i < fl.size(); ++i) {
        flats.push_back(flat_obj(fl.flats[i]));
        heights.push_back(fl.height[i]);
    }
    return dump(json{{"q", m.field()->q()},
                     {"n", m.dim()},
                     {"flats", std::move(flats)},
                     {"heights", std::move(heights)}});
}

std::string code_json(const LinearCode& c) {
    json g = json::array();
    for (std::size_t r = 0; r < c.dimension(); ++r) {
        json row = json::array();
        for (std::size_t j = 0; j < c.length(); ++j) row.push_back(c.generator().at(r, j));
        g.push_back(std::move(row));
    }
    json modulus = json::array();
    for (Elem e : c.field()->modulus()) modulus.push_back(e);
    return dump(json{{"q", c.q()},
                     {"m", c.m()},
                     {"modulus", std::move(modulus)},
                     {"n", c.length()},
                     {"k", c.dimension()},
                     {"G", std::move(g)}});
}

std::string check_json(const CheckResult& r) { return dump(check_obj(r)); }

std::string checks_json(const std::vector<CheckResult>& rs) {
    json results = json::array();
    bool pass = true;
    for (const auto& r : rs) {
        results.push_back(check_obj(r));
        pass = pass && r.pass();
    }
    return dump(json{{"pass", pass}, {"results", std::move(results)}});
}

std::string weight_report_json(const WeightDistribution& wd) {
    return dump(json{{"metric", wd.metric == Metric::hamming ? "hamming" : "rank"},
                     {"counts", wd.counts}});
}

std::string weight_report_csv(const WeightDistribution& wd) {
    std::string out = "i,count\n";
    for (std::size_t i = 0; i < wd.counts.size(); ++i)
        out += std::to_string(i) + "," + std::to_string(wd.counts[i]) + "\n";
    return out;
}

std::string critical_report_json(const std::vector<CriticalRow>& rows) {
    json out = json::array();
    for (const auto& r : rows)
        out.push_back(json{{"w", subspace_obj(r.w)},
                           {"t", r.t},
                           {"count", r.count},
                           {"predicted", r.predicted},
                           {"match", r.match()}});
    return dump(out);
}

std::string critical_report_csv(const std::vector<CriticalRow>& rows) {
    std::string out = "w,t,count,predicted,match\n";
    for (const auto& r : rows)
        out += subspace_compact(r.w) + "," + std::to_string(r.t) + "," +
               std::to_string(r.count) + "," + std::to_string(r.predicted) + "," +
               (r.match() ? "true" : "false") + "\n";
    return out;
}

// ---- parsers ----

Matrix<Field> matrix_from_json(const std::string& text) {
    json j = parse_text(text);
    auto h = matrix_header(j);
    if (h.m != 1) fail("expected a base-field matrix (m = 1)");
    FieldPtr f = make_base_field(h.q);
    return Matrix<Field>(f, h.rows, h.cols, matrix_entries(j, h, f->q() - 1));
}

Matrix<ExtField> ext_matrix_from_json(const std::string& text) {
    json j = parse_text(text);
    auto h = matrix_header(j);
    ExtFieldPtr ext = make_ext_field(make_base_field(h.q), h.m);
    return Matrix<ExtField>(ext, h.rows, h.cols, matrix_entries(j, h, ext->order() - 1));
}

Subspace subspace_from_json(const std::string& text) {
    return subspace_from_obj(parse_text(text));
}

Matroid matroid_from_json(const std::string& text) {
    json j = parse_text(text);
    const json& jg = member(j, "groundset");
    if (!jg.is_array() || jg.empty()) fail("groundset must be a non-empty array of labels");
    std::vector<std::string> labels;
    for (const auto& l : jg) {
        if (!l.is_string()) fail("groundset labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    const std::size_t n = labels.size();
    if (n > 63) throw GuardError("TooLarge: matroid groundsets are capped at 63 elements");

    const json& jf = member(j, "flats");
    if (!jf.is_array() || jf.empty()) fail("flats must be a non-empty array");
    std::vector<std::pair<std::uint64_t, int>> flats;
    for (const auto& f : jf) {
        const json& elems = member(f, "elements");
        if (!elems.is_array()) fail("flat elements must be an array of indices");
        std::uint64_t mask = 0;
        for (const auto& e : elems)
            mask |= std::uint64_t(1) << get_uint(e, "flat element", n - 1);
        int rank = static_cast<int>(get_uint(member(f, "rank"), "flat rank", 63));
        flats.emplace_back(mask, rank);
    }
    const std::uint64_t full = n == 63 ? ~std::uint64_t(0) >> 1 : (std::uint64_t(1) << n) - 1;
    bool has_top = false;
    for (const auto& [mask, rank] : flats) has_top = has_top || mask == full;
    if (!has_top) fail("the flat list must contain the full groundset");

    // The rank of a subset is the least rank among flats containing it.
    return Matroid(std::move(labels), [flats](std::uint64_t a) -> int {
        int best = -1;
        for (const auto& [mask, rank] : flats)
            if ((a & ~mask) == 0 && (best < 0 || rank < best)) best = rank;
        return best;
    });
}

QMatroid qmatroid_from_json(const std::string& text) {
    return qmatroid_from_obj(parse_text(text));
}

LinearCode code_from_json(const std::string& text) {
    return code_from_obj(parse_text(text));
}

std::vector<MapCorpusItem> map_corpus_from_json(const std::string& text) {
    json j = parse_text(text);
    const json& jq = member(j, "qmatroids");
    if (!jq.is_object()) fail("qmatroids must be an object of named q-matroids");
    std::vector<std::pair<std::string, QMatroid>> table;
    for (auto it = jq.begin(); it != jq.end(); ++it)
        table.emplace_back(it.key(), qmatroid_from_obj(it.value()));
    auto lookup = [&](const std::string& name) -> const QMatroid& {
        for (const auto& [k, v] : table)
            if (k == name) return v;
        fail("unknown q-matroid reference '" + name + "'");
    };

    const json& jm = member(j, "maps");
    if (!jm.is_array()) fail("maps must be an array");
    std::vector<MapCorpusItem> out;
    std::size_t idx = 0;
    for (const auto& entry : jm) {
        ++idx;
        std::string name = "map" + std::to_string(idx);
        if (entry.contains("name")) {
            if (!entry["name"].is_string()) fail("map name must be a string");
            name = entry["name"].get<std::string>();
        }
        const json& jmat = member(entry, "matrix");
        auto h = matrix_header(jmat);
        if (h.m != 1) fail("map matrices must be base-field matrices (m = 1)");
        FieldPtr f = make_base_field(h.q);
        Matrix<Field> a(f, h.rows, h.cols, matrix_entries(jmat, h, f->q() - 1));

        if (!member(entry, "domain").is_string() || !member(entry, "codomain").is_string())
            fail("domain and codomain must name entries of the qmatroids table");
        const QMatroid& dom = lookup(entry["domain"].get<std::string>());
        const QMatroid& cod = lookup(entry["codomain"].get<std::string>());
        if (dom.field()->q() != h.q || cod.field()->q() != h.q)
            fail("map '" + name + "' is over GF(" + std::to_string(h.q) +
                 ") but its q-matroids are not");
        if (dom.dim() != a.rows() || cod.dim() != a.cols())
            fail("map '" + name + "' has shape " + a.shape_str() +
                 " but its q-matroids have dimensions " + std::to_string(dom.dim()) + " and " +
                 std::to_string(cod.dim()));
        out.push_back(MapCorpusItem{name, LMap::linear(std::move(a)), dom, cod});
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("Parse: cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace qmatroids
