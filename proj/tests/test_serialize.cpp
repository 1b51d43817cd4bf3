#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "qmatroids/serialize.hpp"

using namespace qmatroids;

namespace {

ExtFieldPtr gf4() { return ExtField::make(Field::make(2), 2); }

LinearCode c_one_gamma() {
    return LinearCode(Matrix<ExtField>(gf4(), 1, 2, {1, 2}));
}

QMatroid u12() { return QMatroid::uniform(Field::make(2), 2, 1); }
QMatroid u22() { return QMatroid::uniform(Field::make(2), 2, 2); }

bool same_qmatroid(const QMatroid& a, const QMatroid& b) {
    if (a.field()->q() != b.field()->q() || a.dim() != b.dim()) return false;
    for (const Subspace& v : enumerate_subspaces(a.field(), a.dim()))
        if (a.rank(v) != b.rank(v)) return false;
    return true;
}

bool same_matroid(const Matroid& a, const Matroid& b) {
    if (a.labels() != b.labels()) return false;
    for (std::uint64_t s = 0;; ++s) {
        if (a.rank(s) != b.rank(s)) return false;
        if (s == a.full_mask()) break;
    }
    return true;
}

} // namespace

TEST_CASE("matrix json round trips and is canonical") {
    auto f2 = Field::make(2);
    Matrix<Field> a(f2, 2, 3, {1, 0, 1, 0, 1, 1});
    std::string text = matrix_json(a);
    CHECK(text == matrix_json(a));           // emission is deterministic
    CHECK(text.back() == '\n');
    Matrix<Field> back = matrix_from_json(text);
    CHECK(back == a);
    CHECK(matrix_json(back) == text);        // parse-emit is idempotent

    Matrix<ExtField> g(gf4(), 1, 2, {1, 2});
    std::string gtext = matrix_json(g);
    Matrix<ExtField> gback = ext_matrix_from_json(gtext);
    CHECK(gback == g);
    CHECK(matrix_json(gback) == gtext);

    // Exact canonical form: two-space indent, sorted keys, trailing newline.
    Matrix<Field> tiny(f2, 1, 1, {1});
    CHECK(matrix_json(tiny) ==
          "{\n"
          "  \"cols\": 1,\n"
          "  \"entries\": [\n"
          "    [\n"
          "      1\n"
          "    ]\n"
          "  ],\n"
          "  \"field\": {\n"
          "    \"m\": 1,\n"
          "    \"q\": 2\n"
          "  },\n"
          "  \"rows\": 1\n"
          "}\n");
}

TEST_CASE("subspace json round trips, normalizing the basis") {
    auto f2 = Field::make(2);
    Subspace line = Subspace::line(f2, {1, 1, 0});
    std::string text = subspace_json(line);
    CHECK(subspace_from_json(text) == line);

    // Non-canonical spanning rows parse to the same subspace.
    std::string redundant = "{\"q\":2,\"n\":3,\"basis\":[[1,1,0],[1,1,0],[0,0,0]]}";
    CHECK(subspace_from_json(redundant) == line);

    Subspace zero = Subspace::zero(f2, 2);
    CHECK(subspace_from_json(subspace_json(zero)) == zero);
    CHECK(subspace_json(zero) ==
          "{\n"
          "  \"basis\": [],\n"
          "  \"n\": 2,\n"
          "  \"q\": 2\n"
          "}\n");

    Subspace full3 = Subspace::full(Field::make(3), 2);
    CHECK(subspace_from_json(subspace_json(full3)) == full3);
}

TEST_CASE("matroid json round trips through the flat list") {
    Matroid u23 = Matroid::uniform(2, 3);
    Matroid back = matroid_from_json(matroid_json(u23));
    CHECK(same_matroid(back, u23));

    // A matroid with a loop keeps its loop through the round trip.
    Matroid loopy = Matroid::uniform(1, 2).loop_extension("o");
    Matroid lback = matroid_from_json(matroid_json(loopy));
    CHECK(same_matroid(lback, loopy));
    CHECK(lback.is_loop(2));

    // Emission is canonical.
    CHECK(matroid_json(u23) == matroid_json(Matroid::uniform(2, 3)));
}

TEST_CASE("q-matroid json round trips through the flat lattice") {
    for (const QMatroid& qm : {u12(), u22(), QMatroid::uniform(Field::make(3), 2, 1)}) {
        QMatroid back = qmatroid_from_json(qmatroid_json(qm));
        CHECK(same_qmatroid(back, qm));
    }

    // A loopy q-matroid (loops inside <(1,0)>) survives the round trip.
    auto f2 = Field::make(2);
    Subspace loopline = Subspace::line(f2, {1, 0});
    QMatroid loopy(f2, 2, [loopline](const Subspace& v) {
        return v.dim() == 0 || loopline.contains(v) ? 0 : 1;
    });
    QMatroid back = qmatroid_from_json(qmatroid_json(loopy));
    CHECK(same_qmatroid(back, loopy));
    CHECK(back.loops_subspace() == loopline);
}

TEST_CASE("code json round trips, including a classical m = 1 code") {
    LinearCode c = c_one_gamma();
    LinearCode back = code_from_json(code_json(c));
    CHECK(back.q() == 2);
    CHECK(back.m() == 2);
    CHECK(back.length() == 2);
    CHECK(back.dimension() == 1);
    CHECK(back.generator() == c.generator());

    auto ext1 = ExtField::make(Field::make(3), 1);
    LinearCode classical(Matrix<ExtField>(ext1, 2, 3, {1, 0, 2, 0, 1, 1}));
    LinearCode cback = code_from_json(code_json(classical));
    CHECK(cback.m() == 1);
    CHECK(cback.generator() == classical.generator());

    // The explicit modulus in the file is honored.
    std::string text = code_json(c);
    LinearCode again = code_from_json(text);
    CHECK(again.field()->modulus() == c.field()->modulus());

    // Zero code round trip.
    LinearCode zero(Matrix<ExtField>(gf4(), 0, 2, {}));
    LinearCode zback = code_from_json(code_json(zero));
    CHECK(zback.dimension() == 0);
    CHECK(zback.length() == 2);
}

TEST_CASE("check and weight reports have frozen canonical forms") {
    CheckResult r{"charpoly-projectivization", "U_{1,2}(2)", "pass", ""};
    CHECK(check_json(r) ==
          "{\n"
          "  \"instance\": \"U_{1,2}(2)\",\n"
          "  \"status\": \"pass\",\n"
          "  \"theorem\": \"charpoly-projectivization\",\n"
          "  \"witness\": \"\"\n"
          "}\n");

    CheckResult bad{"map-functor", "sigma", "fail", "composite disagrees at index 3"};
    std::string suite = checks_json({r, bad});
    CHECK(suite.find("\"pass\": false") != std::string::npos);
    CHECK(suite.find("composite disagrees at index 3") != std::string::npos);
    CHECK(checks_json({r}).find("\"pass\": true") != std::string::npos);

    WeightDistribution wd = weight_distribution(c_one_gamma(), Metric::rank);
    CHECK(weight_report_json(wd) ==
          "{\n"
          "  \"counts\": [\n"
          "    1,\n"
          "    0,\n"
          "    3\n"
          "  ],\n"
          "  \"metric\": \"rank\"\n"
          "}\n");
    CHECK(weight_report_csv(wd) == "i,count\n0,1\n1,0\n2,3\n");
}

TEST_CASE("critical reports render subspaces compactly") {
    auto f2 = Field::make(2);
    std::vector<CriticalRow> rows;
    rows.push_back({Subspace::zero(f2, 2), 1, 1, 1});
    rows.push_back({Subspace::line(f2, {1, 1}), 1, 0, 0});
    rows.push_back({Subspace::full(f2, 2), 2, 15, 15});
    rows.push_back({Subspace::full(f2, 2), 1, 3, 4}); // deliberate mismatch

    CHECK(critical_report_csv(rows) ==
          "w,t,count,predicted,match\n"
          "0,1,1,1,true\n"
          "1.1,1,0,0,true\n"
          "1.0;0.1,2,15,15,true\n"
          "1.0;0.1,1,3,4,false\n");

    std::string j = critical_report_json(rows);
    CHECK(j.find("\"match\": false") != std::string::npos);
    CHECK(j.find("\"predicted\": 15") != std::string::npos);
    CHECK(critical_report_json(rows) == j);
}

TEST_CASE("malformed payloads raise ParseError") {
    CHECK_THROWS_AS(matrix_from_json("{nope"), ParseError);
    CHECK_THROWS_AS(matrix_from_json("[1,2,3]"), ParseError);
    CHECK_THROWS_AS(matrix_from_json("{\"field\":{\"q\":2,\"m\":1},\"rows\":1,\"cols\":1}"),
                    ParseError); // missing entries
    CHECK_THROWS_AS(matrix_from_json("{\"field\":{\"q\":2,\"m\":1},\"rows\":1,\"cols\":2,"
                                     "\"entries\":[[1]]}"),
                    ParseError); // wrong row width
    CHECK_THROWS_AS(matrix_from_json("{\"field\":{\"q\":2,\"m\":1},\"rows\":1,\"cols\":1,"
                                     "\"entries\":[[7]]}"),
                    ParseError); // entry out of range
    CHECK_THROWS_AS(matrix_from_json("{\"field\":{\"q\":6,\"m\":1},\"rows\":1,\"cols\":1,"
                                     "\"entries\":[[1]]}"),
                    ParseError); // non prime power
    CHECK_THROWS_AS(matrix_from_json("{\"field\":{\"q\":2,\"m\":2},\"rows\":1,\"cols\":1,"
                                     "\"entries\":[[1]]}"),
                    ParseError); // extension matrix fed to the base-field parser
    CHECK_THROWS_AS(matrix_from_json("{\"field\":{\"q\":2,\"m\":1},\"rows\":-1,\"cols\":1,"
                                     "\"entries\":[[1]]}"),
                    ParseError);

    CHECK_THROWS_AS(subspace_from_json("{\"q\":2,\"n\":2,\"basis\":[[1,0,0]]}"), ParseError);
    CHECK_THROWS_AS(subspace_from_json("{\"q\":2,\"basis\":[]}"), ParseError);

    // Reducible modulus: x^2 + 1 factors over GF(2).
    CHECK_THROWS_AS(code_from_json("{\"q\":2,\"m\":2,\"modulus\":[1,0,1],\"n\":1,\"k\":1,"
                                   "\"G\":[[1]]}"),
                    ParseError);
    // Dependent generator rows: (gamma, gamma^2) = gamma * (1, gamma).
    CHECK_THROWS_AS(code_from_json("{\"q\":2,\"m\":2,\"n\":2,\"k\":2,"
                                   "\"G\":[[1,2],[2,3]]}"),
                    ParseError);
    CHECK_THROWS_AS(code_from_json("{\"q\":2,\"m\":2,\"n\":2,\"k\":1,\"G\":[[1,2],[0,1]]}"),
                    ParseError); // k disagrees with G

    // Matroid: flat list must include the full groundset.
    CHECK_THROWS_AS(matroid_from_json("{\"groundset\":[\"a\",\"b\"],\"flats\":["
                                      "{\"elements\":[],\"rank\":0}]}"),
                    ParseError);
    CHECK_THROWS_AS(matroid_from_json("{\"groundset\":[\"a\"],\"flats\":["
                                      "{\"elements\":[3],\"rank\":0}]}"),
                    ParseError); // element index out of range

    // q-matroid: bad flat family, then declared heights that contradict it.
    CHECK_THROWS_AS(qmatroid_from_json("{\"q\":2,\"n\":2,\"flats\":[[]],\"heights\":[0]}"),
                    ParseError); // missing the top flat
    CHECK_THROWS_AS(qmatroid_from_json("{\"q\":2,\"n\":2,\"flats\":[[],[[1,0],[0,1]]],"
                                       "\"heights\":[0,2]}"),
                    ParseError); // U_{1,2} flats declared with rank 2 top
    CHECK_THROWS_AS(qmatroid_from_json("{\"q\":2,\"n\":2,\"flats\":[[],[[1,0],[0,1]]]}"),
                    ParseError); // heights missing
}

TEST_CASE("size guards pass through as GuardError") {
    CHECK_THROWS_AS(matrix_from_json("{\"field\":{\"q\":1031,\"m\":1},\"rows\":1,\"cols\":1,"
                                     "\"entries\":[[1]]}"),
                    GuardError); // prime, but past the base-field cap

    std::string labels;
    std::string elems;
    for (int i = 0; i < 64; ++i) {
        labels += (i ? std::string(",") : std::string()) + "\"e" + std::to_string(i) + "\"";
        elems += (i ? std::string(",") : std::string()) + std::to_string(i);
    }
    CHECK_THROWS_AS(matroid_from_json("{\"groundset\":[" + labels + "],\"flats\":["
                                      "{\"elements\":[" + elems + "],\"rank\":1}]}"),
                    GuardError);
}

TEST_CASE("map corpus files resolve named q-matroids") {
    auto f2 = Field::make(2);
    std::string corpus = std::string("{\"qmatroids\":{\"u12\":") + qmatroid_json(u12()) +
                         ",\"u22\":" + qmatroid_json(u22()) +
                         "},\"maps\":[{\"name\":\"id\",\"matrix\":" +
                         matrix_json(Matrix<Field>::identity(f2, 2)) +
                         ",\"domain\":\"u22\",\"codomain\":\"u12\"}," +
                         "{\"matrix\":" + matrix_json(Matrix<Field>(f2, 2, 2, {0, 0, 0, 0})) +
                         ",\"domain\":\"u12\",\"codomain\":\"u22\"}]}";
    auto items = map_corpus_from_json(corpus);
    REQUIRE(items.size() == 2);
    CHECK(items[0].name == "id");
    CHECK(items[1].name == "map2"); // unnamed maps are numbered
    CHECK(items[0].map.is_linear());
    CHECK(same_qmatroid(items[0].domain, u22()));
    CHECK(same_qmatroid(items[0].codomain, u12()));
    CHECK(is_qweak(items[0].map, items[0].domain, items[0].codomain));
    CHECK(is_qstrong(items[1].map, items[1].domain, items[1].codomain));

    // Unresolved references and shape mismatches are parse failures.
    std::string badref = std::string("{\"qmatroids\":{\"u12\":") + qmatroid_json(u12()) +
                         "},\"maps\":[{\"matrix\":" +
                         matrix_json(Matrix<Field>::identity(f2, 2)) +
                         ",\"domain\":\"u12\",\"codomain\":\"nope\"}]}";
    CHECK_THROWS_AS(map_corpus_from_json(badref), ParseError);

    std::string badshape = std::string("{\"qmatroids\":{\"u12\":") + qmatroid_json(u12()) +
                           "},\"maps\":[{\"matrix\":" +
                           matrix_json(Matrix<Field>(f2, 1, 2, {1, 0})) +
                           ",\"domain\":\"u12\",\"codomain\":\"u12\"}]}";
    CHECK_THROWS_AS(map_corpus_from_json(badshape), ParseError);
}

TEST_CASE("read_text_file reads bytes back and rejects missing paths") {
    const std::string path = "serialize_roundtrip_tmp.json";
    const std::string payload = subspace_json(Subspace::full(Field::make(2), 2));
    {
        std::ofstream out(path, std::ios::binary);
        out << payload;
    }
    CHECK(read_text_file(path) == payload);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_text_file("definitely/not/a/file.json"), ParseError);
}
