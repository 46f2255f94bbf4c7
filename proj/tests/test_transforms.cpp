#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "hcns/ops.hpp"
#include "hcns/transforms.hpp"

#include <algorithm>

using namespace hcns;
using namespace hcns::test;

namespace {

Scalar S(const char* text) { return parse_scalar(text); }

Errc error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return Errc::InvalidArgument;
}

AlgebraDef alg(const std::string& name) { return in_convert_hns(golden_tables().at(name), name); }

Matrix M(std::initializer_list<std::initializer_list<const char*>> rows) {
    Matrix m;
    for (const auto& r : rows) {
        m.emplace_back();
        for (const char* s : r) m.back().push_back(S(s));
    }
    return m;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m[0].size(), std::vector<Scalar>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

// New coordinates y map to old coordinates L^T y.
HNumber to_old(const Matrix& l, const HNumber& y) {
    std::vector<Scalar> out(y.dim());
    for (std::size_t r = 0; r < y.dim(); ++r)
        for (std::size_t s = 0; s < y.dim(); ++s) out[s] += l[r][s] * y[r];
    return HNumber(std::move(out));
}

HNumber basis_element(std::size_t dim, std::size_t i) {
    std::vector<Scalar> c(dim);
    c[i] = Scalar(1L);
    return HNumber(std::move(c));
}

}  // namespace

TEST_CASE("trans equals gen_iso with the swap permutation") {
    for (const auto& [name, table] : golden_tables()) {
        const AlgebraDef def = alg(name);
        if (def.dim < 2) continue;
        for (std::size_t s = 1; s <= def.dim; ++s)
            for (std::size_t t = s + 1; t <= def.dim; ++t) {
                const AlgebraDef swapped = trans(def, s, t);
                CHECK_MESSAGE(swapped.gamma == gen_iso(BasisTransform::swap(def.dim, s, t), def, def.basis).gamma,
                              name);
                CHECK_MESSAGE(trans(swapped, s, t).gamma == def.gamma, name);
            }
    }
    // Swapping e1 and e2 in C moves the identity.
    const AlgebraDef c = trans(alg("C"), 1, 2);
    CHECK(c.gamma[1][1] == Cell{S("0"), S("1")});
    CHECK(c.gamma[0][0] == Cell{S("0"), S("-1")});
    CHECK(error_of([] { trans(alg("C"), 1, 3); }) == Errc::IndexOutOfRange);
}

TEST_CASE("gen_iso is a homomorphism back to the source basis") {
    Random rnd(501);
    const std::vector<std::pair<std::string, Matrix>> cases = {
        {"C", M({{"1", "0"}, {"1", "1"}})},
        {"H", M({{"1", "0", "0", "0"}, {"0", "1", "1", "0"}, {"0", "0", "1", "0"}, {"0", "2", "0", "-1"}})},
        {"W", M({{"1", "0"}, {"x", "2"}})},
        {"T", M({{"1", "0", "1"}, {"0", "1", "0"}, {"1", "0", "-1"}})},
    };
    for (const auto& [name, l] : cases) {
        const AlgebraDef a = alg(name);
        const AlgebraDef b = gen_iso(BasisTransform(l), a, "f");
        CHECK(b.basis == "f");
        for (int t = 0; t < 10; ++t) {
            const HNumber y = rnd.exact_number(a.dim);
            const HNumber z = rnd.exact_number(a.dim);
            CHECK_MESSAGE(to_old(l, in_multi(y, z, b)) == in_multi(to_old(l, y), to_old(l, z), a), name);
        }
        CHECK(is_associative(b) == is_associative(a));
        CHECK(is_commutative(b) == is_commutative(a));
    }
}

TEST_CASE("gen_iso preserves structural verdicts") {
    const Matrix l = M({{"1", "0", "0"}, {"1", "1", "0"}, {"0", "1", "1"}});
    for (const char* name : {"T", "RplusC"}) {
        const AlgebraDef a = alg(name);
        const AlgebraDef b = gen_iso(BasisTransform(l), a, "g", "moved");
        CHECK(b.name == "moved");
        CHECK(is_associative(b) == is_associative(a));
        CHECK(is_commutative(b) == is_commutative(a));
        CHECK_FALSE(has_fatal(validate(b)));
        // The unit moves with the basis.
        CHECK(to_old(l, unit(b)) == unit(a));
    }
}

TEST_CASE("basis transform errors") {
    CHECK(error_of([] { BasisTransform(M({{"1", "1"}, {"1", "1"}})); }) == Errc::SingularTransform);
    CHECK(error_of([] { BasisTransform(M({{"x", "1"}, {"x", "1"}})); }) == Errc::SingularTransform);
    CHECK(error_of([] { gen_iso(BasisTransform(identity_matrix(3)), alg("C"), "e"); }) == Errc::DimMismatch);
    const BasisTransform l(M({{"2", "0"}, {"0", "1"}}));
    CHECK(l.inverse() == M({{"1/2", "0"}, {"0", "1"}}));
}

TEST_CASE("direct sums") {
    const AlgebraDef rc = dir_sum2(alg("R"), alg("C"), "RC");
    CHECK(rc.gamma == alg("RplusC").gamma);
    CHECK(rc.name == "RC");

    const AlgebraDef three = dir_sum_n({alg("R"), alg("C"), alg("D")}, "e", "RCD");
    REQUIRE(three.dim == 5);
    CHECK(three.gamma[0][0] == Cell{S("1"), S("0"), S("0"), S("0"), S("0")});
    CHECK(three.gamma[2][2] == Cell{S("0"), S("-1"), S("0"), S("0"), S("0")});
    CHECK(three.gamma[4][4] == Cell{S("0"), S("0"), S("0"), S("1"), S("0")});
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            const auto block = [](std::size_t k) { return k == 0 ? 0 : k < 3 ? 1 : 2; };
            if (block(i) != block(j)) CHECK(std::all_of(three.gamma[i][j].begin(), three.gamma[i][j].end(),
                                                        [](const Scalar& s) { return s.is_zero(); }));
        }
    CHECK(unit(three) == HNumber({S("1"), S("1"), S("0"), S("1"), S("0")}));
}

TEST_CASE("parameter clashes") {
    const AlgebraDef same = dir_sum2(alg("W"), alg("W"), "WW");
    CHECK(same.params == std::vector<std::string>{"p", "q"});
    const AlgebraDef mixed = dir_sum2(alg("W"), alg("Q4N"), "WQ");
    CHECK(std::find(mixed.params.begin(), mixed.params.end(), "W_p") != mixed.params.end());
    CHECK(std::find(mixed.params.begin(), mixed.params.end(), "Q4N_q") != mixed.params.end());
    CHECK(mixed.gamma[1][1] == Cell{S("W_p"), S("W_q"), S("0"), S("0"), S("0"), S("0")});
    CHECK_FALSE(has_fatal(validate(mixed)));
}

TEST_CASE("tensor product pairs indices row-major") {
    const AlgebraDef a = alg("C");
    const AlgebraDef b = alg("D");
    const AlgebraDef t = multi_dim(a, b, "e", DimMode::Commutative, "CxD");
    REQUIRE(t.dim == 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    for (std::size_t m = 0; m < 2; ++m)
                        for (std::size_t n = 0; n < 2; ++n)
                            CHECK(t.gamma[i * 2 + j][k * 2 + l][m * 2 + n] == a.gamma[i][k][m] * b.gamma[j][l][n]);
    CHECK(is_commutative(t));
    CHECK(is_associative(t));
}

TEST_CASE("doubling") {
    // R doubled by C is C again.
    CHECK(multi_dim(alg("R"), alg("C"), "e", DimMode::NonCommutative, "C2").gamma == alg("C").gamma);
    const AlgebraDef h = multi_dim(alg("C"), alg("C"), "e", DimMode::NonCommutative, "H2");
    CHECK(h.gamma == alg("H").gamma);
    const AlgebraDef q = multi_dim(alg("W"), alg("W"), "E", DimMode::NonCommutative, "Q");
    CHECK(q.gamma == alg("Q4N").gamma);
    CHECK(q.params == std::vector<std::string>{"p", "q"});
    CHECK(error_of([] { multi_dim(alg("C"), alg("T"), "e", DimMode::NonCommutative, "X"); }) ==
          Errc::UnsupportedDoubling);
    CHECK(error_of([] { multi_dim(alg("RplusC"), alg("C"), "e", DimMode::NonCommutative, "X"); }) ==
          Errc::UnsupportedDoubling);
}

TEST_CASE("isomorphism equation systems") {
    const IsoSystem hh = sys_izo(alg("H"), alg("H"));
    CHECK(hh.equations.size() == 64);
    CHECK(hh.unknowns.size() == 16);
    CHECK(hh.unknowns[1] == iso_unknown(1, 2));
    CHECK(iso_unknown(3, 4) == "L_3_4");
    REQUIRE(hh.nondegeneracy.has_value());
    CHECK(failing_equations(hh, identity_matrix(4)).empty());

    // The inverse of a basis change is an isomorphism onto the changed system.
    const Matrix l = M({{"1", "0", "0"}, {"1", "1", "0"}, {"0", "2", "1"}});
    const BasisTransform bt(l);
    const IsoSystem tt = sys_izo(alg("T"), gen_iso(bt, alg("T"), "f"));
    CHECK(failing_equations(tt, bt.inverse()).empty());
    CHECK_FALSE(failing_equations(tt, identity_matrix(3)).empty());
    CHECK(tt.nondegeneracy->substitute({{"L_1_1", S("1")}, {"L_1_2", S("0")}, {"L_1_3", S("0")},
                                        {"L_2_1", S("0")}, {"L_2_2", S("1")}, {"L_2_3", S("0")},
                                        {"L_3_1", S("0")}, {"L_3_2", S("0")}, {"L_3_3", S("1")}}) == S("1"));

    // Swapping e2, e3 of RplusC is realized by the permutation matrix.
    const IsoSystem rc = sys_izo(alg("RplusC"), trans(alg("RplusC"), 2, 3));
    CHECK(failing_equations(rc, BasisTransform::swap(3, 2, 3).matrix()).empty());

    CHECK(error_of([] { sys_izo(alg("C"), alg("H")); }) == Errc::DimMismatch);
    CHECK_FALSE(sys_izo(dir_sum_n({alg("H"), alg("H"), alg("C")}, "e"), dir_sum_n({alg("H"), alg("H"), alg("C")}, "e"))
                    .nondegeneracy.has_value());
}

TEST_CASE("isomorphism system export round trip") {
    const IsoSystem sys = sys_izo(alg("W"), alg("D"));
    const std::string text = export_iso_system(sys);
    CHECK(text.rfind("# isomorphism W -> D, dim 2, 8 equations", 0) == 0);
    const IsoSystem back = parse_iso_system(text);
    CHECK(back.source == sys.source);
    CHECK(back.target == sys.target);
    CHECK(back.dim == sys.dim);
    CHECK(back.unknowns == sys.unknowns);
    REQUIRE(back.equations.size() == sys.equations.size());
    for (std::size_t e = 0; e < sys.equations.size(); ++e) {
        CHECK(back.equations[e].lhs == sys.equations[e].lhs);
        CHECK(back.equations[e].i == sys.equations[e].i);
        CHECK(back.equations[e].m == sys.equations[e].m);
    }
    CHECK(back.nondegeneracy == sys.nondegeneracy);
    CHECK(error_of([] { parse_iso_system("garbage"); }) == Errc::ParseError);
}
