#pragma once

// JSON and CSV interchange.  All emitters produce canonical text — two-space
// indentation, keys in sorted order, a trailing newline — so identical inputs
// give byte-identical files.  All parsers throw ParseError on malformed text
// or invalid content; size guards raised while rebuilding objects (field
// tables, enumerations) stay GuardError.
//
// Formats:
//   matrix    {"field": {"q": Q, "m": M}, "rows": R, "cols": C,
//              "entries": [[row 0 ...], ...]}
//             Entries are element indices: little-endian polynomial
//             coefficients over the prime, resp. base, field.  M = 1 is a
//             plain base-field matrix.
//   subspace  {"q": Q, "n": N, "basis": [[row] ...]}  (canonical RREF rows;
//             any spanning rows are accepted on input)
//   matroid   {"groundset": [labels], "flats": [{"elements": [i ...],
//             "rank": r}, ...]}  The rank of a subset is recovered as the
//             least rank among flats containing it.
//   q-matroid {"q": Q, "n": N, "flats": [[[row] ...] ...], "heights": [...]}
//             Each flat lists basis rows (the zero space is []); heights are
//             checked against the reconstruction.
//   code      {"q": Q, "m": M, "modulus": [c0 ... cM], "n": N, "k": K,
//             "G": [[row] ...]}  modulus is optional and defaults to the
//             canonical irreducible.
//   checks    {"pass": bool, "results": [{"theorem", "instance", "status",
//             "witness"} ...]}
//   weights   {"metric": "hamming"|"rank", "counts": [...]} and CSV
//             "i,count" rows.
//   critical  [{"w": subspace, "t": T, "count": C, "predicted": P,
//             "match": bool} ...] and CSV "w,t,count,predicted,match" rows,
//             where w is written compactly: basis rows joined by ';', the
//             coordinates of a row joined by '.', the zero space as "0".
//   map corpus {"qmatroids": {name: q-matroid ...}, "maps": [{"name",
//             "matrix", "domain", "codomain"} ...]} with domain/codomain
//             naming entries of the qmatroids table.

#include <string>
#include <vector>

#include "qmatroids/codes.hpp"
#include "qmatroids/projectivize.hpp"
#include "qmatroids/qmaps.hpp"

namespace qmatroids {

// ---- emitters ----

std::string matrix_json(const Matrix<Field>& m);
std::string matrix_json(const Matrix<ExtField>& m);
std::string subspace_json(const Subspace& s);
std::string matroid_json(const Matroid& m);
std::string qmatroid_json(const QMatroid& m);
std::string code_json(const LinearCode& c);
std::string check_json(const CheckResult& r);
std::string checks_json(const std::vector<CheckResult>& rs);

std::string weight_report_json(const WeightDistribution& wd);
std::string weight_report_csv(const WeightDistribution& wd);

struct CriticalRow {
    Subspace w;
    unsigned t = 1;
    std::uint64_t count = 0;
    long long predicted = 0;

    bool match() const {
        return predicted >= 0 && count == static_cast<std::uint64_t>(predicted);
    }
};

std::string critical_report_json(const std::vector<CriticalRow>& rows);
std::string critical_report_csv(const std::vector<CriticalRow>& rows);

// ---- parsers ----

Matrix<Field> matrix_from_json(const std::string& text);      // requires m = 1
Matrix<ExtField> ext_matrix_from_json(const std::string& text);
Subspace subspace_from_json(const std::string& text);
Matroid matroid_from_json(const std::string& text);
QMatroid qmatroid_from_json(const std::string& text);
LinearCode code_from_json(const std::string& text);

struct MapCorpusItem {
    std::string name;
    LMap map;
    QMatroid domain;
    QMatroid codomain;
};

std::vector<MapCorpusItem> map_corpus_from_json(const std::string& text);

// Reads a whole file; ParseError when it cannot be opened.
std::string read_text_file(const std::string& path);

} // namespace qmatroids
