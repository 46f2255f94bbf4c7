#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "hcns/algebra.hpp"
#include "hcns/registry.hpp"

#include <filesystem>

using namespace hcns;
using namespace hcns::test;

namespace {

Scalar S(const char* text) { return parse_scalar(text); }

bool has_finding(const std::vector<Finding>& fs, const std::string& code) {
    for (const auto& f : fs)
        if (f.code == code) return true;
    return false;
}

const Finding* finding(const std::vector<Finding>& fs, const std::string& code) {
    for (const auto& f : fs)
        if (f.code == code) return &f;
    return nullptr;
}

AlgebraDef from_golden(const std::string& name) { return in_convert_hns(golden_tables().at(name), name); }

}  // namespace

TEST_CASE("in_convert_hns on published tables") {
    const AlgebraDef t = from_golden("T");
    CHECK(t.gamma[1][1] == Cell{S("-1/2"), S("0"), S("1/2")});
    CHECK(t.params.empty());
    const AlgebraDef rc = from_golden("RplusC");
    CHECK(rc.gamma[0][1] == Cell{S("0"), S("0"), S("0")});
    const AlgebraDef hab = from_golden("Hab");
    CHECK(hab.params == std::vector<std::string>{"alpha", "beta"});
    CHECK(hab.gamma[3][3] == Cell{S("-alpha*beta"), S("0"), S("0"), S("0")});
    const AlgebraDef q = from_golden("Q4N");
    CHECK(q.basis == "E");
    CHECK(q.params == std::vector<std::string>{"p", "q"});
}

TEST_CASE("in_convert_hns errors") {
    CHECK_THROWS_AS(in_convert_hns(Table{{"e1", "f2"}, {"e2", "e1"}}, "X"), Error);
    try {
        in_convert_hns(Table{{"e1", "f2"}, {"e2", "e1"}}, "X");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BasisMismatch);
    }
    try {
        in_convert_hns(Table{{"e1", "e2 +"}, {"e2", "e1"}}, "X");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ParseError);
    }
    try {
        in_convert_hns(Table{{"e1", "e3"}, {"e2", "e1"}}, "X");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::IndexOutOfRange);
    }
    try {
        in_convert_hns(Table{{"e1", "e2"}, {"e2"}}, "X");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DimMismatch);
    }
}

TEST_CASE("viz_hns renders cells in natural form") {
    const auto q = viz_hns_cells(from_golden("Q4N"), "E");
    CHECK(q[1][1].to_string(true) == "p*E1+q*E2");
    const auto h = viz_hns_cells(from_golden("H"), "E");
    CHECK(h[1][2].to_string(true) == "E4");
    const auto rc = viz_hns_cells(from_golden("RplusC"), "e");
    CHECK(rc[0][1].to_string(true) == "0");
    const std::string text = viz_hns(from_golden("T"), "e");
    CHECK(text.find("-1/2*e1+1/2*e3") != std::string::npos);
}

TEST_CASE("viz_hns and in_convert_hns are inverse on every built-in") {
    for (const auto& def : builtin_algebras()) {
        const auto cells = viz_hns_cells(def, def.basis);
        const AlgebraDef back = in_convert_hns(cells, def.name);
        CHECK_MESSAGE(back.gamma == def.gamma, def.name);
        // Through text as well.
        Table text(def.dim);
        for (std::size_t i = 0; i < def.dim; ++i)
            for (const auto& c : cells[i]) text[i].push_back(c.to_string(true));
        CHECK(in_convert_hns(text, def.name).gamma == def.gamma);
    }
}

TEST_CASE("validate reports structure") {
    const auto hab = validate(from_golden("Hab"));
    CHECK_FALSE(has_fatal(hab));
    CHECK(finding(hab, "associative")->message == "associative");
    CHECK(finding(hab, "commutative")->message == "noncommutative");
    CHECK(finding(hab, "identity")->message.find("not") == std::string::npos);
    CHECK(is_associative(from_golden("Hab")));
    CHECK_FALSE(is_commutative(from_golden("Hab")));
    CHECK(first_basis_is_identity(from_golden("Hab")));

    const AlgebraDef rc = from_golden("RplusC");
    CHECK(is_commutative(rc));
    CHECK(is_associative(rc));
    CHECK_FALSE(first_basis_is_identity(rc));

    for (const char* name : {"Hab", "T", "RplusC"}) CHECK_MESSAGE(is_associative(from_golden(name)), name);
}

TEST_CASE("Q4N table is associative only for q = 0") {
    const AlgebraDef q4n = from_golden("Q4N");
    CHECK_FALSE(is_associative(q4n));
    const auto triple = [&](std::size_t a, std::size_t b, std::size_t c, bool left) {
        const auto& g = q4n.gamma;
        std::vector<Scalar> out(4);
        for (std::size_t k = 0; k < 4; ++k)
            for (std::size_t m = 0; m < 4; ++m)
                out[m] += left ? g[a][b][k] * g[k][c][m] : g[b][c][k] * g[a][k][m];
        return out;
    };
    // (E3 E2) E2 against E3 (E2 E2).
    CHECK(triple(2, 1, 1, true) == std::vector<Scalar>{S("0"), S("0"), S("p"), S("q")});
    CHECK(triple(2, 1, 1, false) == std::vector<Scalar>{S("0"), S("0"), S("p"), S("-q")});

    AlgebraDef q0 = q4n;
    q0.params = {"p"};
    for (auto& row : q0.gamma)
        for (auto& cell : row)
            for (auto& c : cell) c = c.substitute({{"q", Scalar(0L)}});
    CHECK(is_associative(q0));

    AlgebraDef zero;
    zero.name = "Z";
    zero.dim = 2;
    zero.gamma = zero_tensor(2);
    const auto z = validate(zero);
    CHECK_FALSE(has_fatal(z));
    CHECK_FALSE(first_basis_is_identity(zero));
}

TEST_CASE("validate rejects malformed definitions") {
    AlgebraDef bad = from_golden("W");
    bad.params = {"p"};
    CHECK(has_fatal(validate(bad)));
    CHECK(has_finding(validate(bad), "unknown_symbol"));

    AlgebraDef shape = from_golden("C");
    shape.gamma[1].pop_back();
    CHECK(has_finding(validate(shape), "shape"));

    AlgebraDef flt = from_golden("C");
    flt.gamma[1][1][0] = Scalar::from_double(-1.0);
    CHECK(has_finding(validate(flt), "non_exact"));

    AlgebraDef unnamed = from_golden("C");
    unnamed.name.clear();
    CHECK(has_finding(validate(unnamed), "name"));
}

TEST_CASE("non-associative tables are accepted and reported") {
    // Octonion-like sign flip breaks associativity.
    AlgebraDef def = from_golden("H");
    def.name = "Hbroken";
    def.gamma[1][2] = Cell{S("0"), S("0"), S("0"), S("-1")};
    const auto fs = validate(def);
    CHECK_FALSE(has_fatal(fs));
    CHECK_FALSE(is_associative(def));
    CHECK(finding(fs, "associative")->message == "nonassociative");
}

TEST_CASE("cayley_cell uses 1-based indices") {
    const CayleyCell c = cayley_cell(from_golden("H"), 2, 3);
    CHECK(c.row == 2);
    CHECK(c.value == Cell{S("0"), S("0"), S("0"), S("1")});
    CHECK_THROWS_AS(cayley_cell(from_golden("H"), 5, 1), Error);
}

TEST_CASE("list form rendering") {
    CHECK(list_form(from_golden("C")) == "[[[1, 0], [0, 1]], [[0, 1], [-1, 0]]]");
}

TEST_CASE("algebra file round trip") {
    for (const auto& def : builtin_algebras()) CHECK(from_file_text(to_file_text(def)) == def);
    AlgebraDef ratio = from_golden("W");
    ratio.gamma[1][1][0] = S("p/(q - 1)");
    ratio.comment = "unicode ok: αβ";
    CHECK(from_file_text(to_file_text(ratio)) == ratio);

    const auto dir = std::filesystem::temp_directory_path() / "hcns_algebra_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    save_algebra(ratio, dir / "W.hns");
    CHECK(load_algebra(dir / "W.hns") == ratio);
    CHECK_FALSE(std::filesystem::exists(dir / "W.hns.tmp"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("corrupt algebra files") {
    for (const char* text : {"", "{", "[]", R"({"name": "X", "dim": 2})",
                             R"({"name": "X", "dim": 1, "params": [], "gamma": [[["1 +"]]]})",
                             R"({"name": "X", "dim": 2, "params": [], "gamma": [[["1"]]]})"}) {
        try {
            from_file_text(text);
            FAIL("accepted: " << text);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::CorruptFile);
        }
    }
    try {
        load_algebra("/nonexistent/dir/x.hns");
        FAIL("loaded a missing file");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::IoError);
    }
}
