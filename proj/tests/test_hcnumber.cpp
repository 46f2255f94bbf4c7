#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "hcns/hcnumber.hpp"

using namespace hcns;
using hcns::test::Random;

namespace {

Scalar S(const char* text) { return parse_scalar(text); }

HNumber L(std::initializer_list<const char*> items) {
    std::vector<Scalar> c;
    for (const char* s : items) c.push_back(S(s));
    return HNumber(std::move(c));
}

Errc error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("hns_number builds both forms") {
    const auto [list, nat] = hns_number(8, "a", "e");
    REQUIRE(list.dim() == 8);
    for (std::size_t i = 0; i < 8; ++i) CHECK(list[i] == Scalar::symbol("a_" + std::to_string(i + 1)));
    CHECK(nat.to_string() == "a_1*e1 + a_2*e2 + a_3*e3 + a_4*e4 + a_5*e5 + a_6*e6 + a_7*e7 + a_8*e8");
    const auto [one, one_nat] = hns_number(1, "x", "e");
    CHECK(one == L({"x_1"}));
    CHECK(one_nat.to_string() == "x_1*e1");
    const auto [b, b_nat] = hns_number(4, "b", "E");
    CHECK(b == L({"b_1", "b_2", "b_3", "b_4"}));
    CHECK(name_bas(b_nat) == "E");
}

TEST_CASE("parse_natural") {
    const NaturalForm a = parse_natural("a_1*e1 + a_2*e2 + a_3*e3");
    CHECK(a.basis() == "e");
    REQUIRE(a.terms().size() == 3);
    CHECK(a.terms()[1].coeff == S("a_2"));
    CHECK(a.terms()[1].index == 2);

    const NaturalForm zero = parse_natural("e1 - e1");
    CHECK(zero.basis() == "e");
    CHECK(zero.is_zero());

    const NaturalForm f = parse_natural("(1/2)*f3");
    CHECK(f.basis() == "f");
    REQUIRE(f.terms().size() == 1);
    CHECK(f.terms()[0].coeff == S("1/2"));
    CHECK(f.terms()[0].index == 3);

    CHECK(parse_natural("e2*x - (y + 1)*e2 + e1/2") == parse_natural("1/2*e1 + (x - y - 1)*e2"));
    CHECK(parse_natural("0").is_zero());
    CHECK(parse_natural("-(e1 + 2*e3)") == parse_natural("-e1 - 2*e3"));
}

TEST_CASE("parse_natural rejects malformed input") {
    CHECK(error_of([] { parse_natural("a_1*e1 + 3"); }) == Errc::ParseError);
    CHECK(error_of([] { parse_natural("e1 + f2"); }) == Errc::MixedBasis);
    CHECK(error_of([] { parse_natural("e1*e2"); }) == Errc::ParseError);
    CHECK(error_of([] { parse_natural("e1^2"); }) == Errc::ParseError);
    CHECK(error_of([] { parse_natural("x/e1"); }) == Errc::ParseError);
    CHECK(error_of([] { parse_natural("2e1"); }) == Errc::ParseError);
    CHECK(error_of([] { parse_natural("a_1*e1 +"); }) == Errc::ParseError);
    CHECK(error_of([] { parse_natural("e0"); }) == Errc::IndexOutOfRange);
    try {
        parse_natural("a*e1 + + ");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() >= 7);
    }
}

TEST_CASE("convert_a fills absent indices with zeros") {
    CHECK(convert_a(parse_natural("a_1*e1 + 3*e3"), 4) == L({"a_1", "0", "3", "0"}));
    CHECK(convert_a(parse_natural("0"), 3) == L({"0", "0", "0"}));
    CHECK(convert_a(parse_natural("a_1*e1+a_2*e2+a_3*e3+a_4*e4"), 4) == L({"a_1", "a_2", "a_3", "a_4"}));
    CHECK(error_of([] { convert_a(parse_natural("e5"), 4); }) == Errc::IndexOutOfRange);
    CHECK(convert_a(parse_natural("e2"), 6).dim() == 6);
}

TEST_CASE("viz_in_a and renam_a") {
    CHECK(viz_in_a(L({"a_1", "0", "3", "0"}), "f").to_string() == "a_1*f1 + 3*f3");
    CHECK(viz_in_a(L({"0", "0", "0"}), "e").is_zero());
    CHECK(viz_in_a(L({"0", "0", "0"}), "e").to_string() == "0");
    CHECK(viz_in_a(L({"a_1 + b_1", "a_2 + b_2"}), "e").to_string() == "(a_1 + b_1)*e1 + (a_2 + b_2)*e2");
    CHECK(viz_in_a(L({"1", "-1", "-x"}), "e").to_string() == "e1 - e2 - x*e3");
    CHECK(viz_in_a(L({"p", "q"}), "E").to_string(true) == "p*E1+q*E2");

    const NaturalForm a = parse_natural("a_1*e1 + a_2*e2");
    CHECK(renam_a(a, "f") == parse_natural("a_1*f1 + a_2*f2"));
    CHECK(renam_a(a, "e") == a);
    CHECK(renam_a(parse_natural("0"), "g").is_zero());
}

TEST_CASE("list helpers") {
    CHECK(list_hns(4) == L({"0", "0", "0", "0"}));
    CHECK(refill({S("x")}, S("y")) == std::vector<Scalar>{S("x"), S("y")});
    CHECK(refill({}, S("x")) == std::vector<Scalar>{S("x")});
}

TEST_CASE("float numbers") {
    const HNumber f = HNumber::from_doubles({1.5, 0.0, -2.0});
    CHECK(f.is_float());
    CHECK(f.to_string(4) == "[1.5, 0, -2]");
    CHECK(HNumber({S("1"), Scalar::from_double(0.5)}).is_float());
    CHECK(error_of([] { HNumber({S("x"), Scalar::from_double(0.5)}); }) == Errc::ExactnessMismatch);
    CHECK(convert_a(parse_natural("0.5*e2"), 3).is_float());
    CHECK(convert_a(parse_natural("0.5*e2"), 3)[0].is_float());
}

TEST_CASE("natural <-> list round trips on random numbers") {
    Random rnd(201);
    for (int t = 0; t < 300; ++t) {
        const std::size_t dim = static_cast<std::size_t>(rnd.integer(1, 10));
        const HNumber x = rnd.exact_number(dim, t % 2 ? 0.6 : 0.1);
        const NaturalForm nat = viz_in_a(x, "e");
        CHECK(convert_a(nat, dim) == x);
        CHECK(parse_natural(nat.to_string()) == nat);
        CHECK(parse_natural(nat.to_string(true)) == nat);
        CHECK(viz_in_a(convert_a(nat, dim), "e") == nat);
    }
}
