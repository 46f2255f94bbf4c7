#include "hcns/scalar.hpp"

#include "hcns/expr.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace hcns {

namespace {

[[noreturn]] void throw_mismatch() {
    throw Error(Errc::ExactnessMismatch,
                "cannot mix Float and exact scalars without explicit promotion");
}

bool needs_parens(const Poly& p) {
    if (p.size() > 1) return true;
    if (p.size() == 1) {
        const auto& t = p.terms().front();
        return !t.mono.is_one() && t.coeff != 1;
    }
    return false;
}

std::string float_to_string(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    std::string s(buf, end);
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

}  // namespace

Scalar::Scalar(long value) : value_(Exact{Poly(value), Poly(1L)}) {}

Scalar::Scalar(const Rational& value) : value_(Exact{Poly(value), Poly(1L)}) {}

Scalar::Scalar(Poly value) : value_(Exact{std::move(value), Poly(1L)}) {}

Scalar Scalar::symbol(std::string_view name) {
    if (!is_valid_symbol(name))
        throw Error(Errc::InvalidArgument, "invalid symbol name '" + std::string(name) + "'");
    return Scalar(Poly::symbol(std::string(name)));
}

Scalar Scalar::ratio(Poly num, Poly den) { return normalized(std::move(num), std::move(den)); }

Scalar Scalar::from_double(double value) {
    Scalar s;
    s.value_ = value;
    return s;
}

Scalar Scalar::normalized(Poly num, Poly den) {
    if (den.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
    Scalar s;
    if (num.is_zero()) return s;
    if (den.is_constant()) {
        if (!den.is_one()) num = num.scaled(Rational(1) / den.leading_coeff());
        s.value_ = Exact{std::move(num), Poly(1L)};
        return s;
    }
    const Poly g = gcd(num, den);
    if (!g.is_constant()) {
        num = *num.divide_exact(g);
        den = *den.divide_exact(g);
    }
    const Rational lc = den.leading_coeff();
    if (lc != 1) {
        const Rational inv = Rational(1) / lc;
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    if (den.is_one()) den = Poly(1L);
    s.value_ = Exact{std::move(num), std::move(den)};
    return s;
}

const Scalar::Exact& Scalar::exact() const {
    if (const auto* e = std::get_if<Exact>(&value_)) return *e;
    throw_mismatch();
}

Scalar::Kind Scalar::kind() const {
    if (is_float()) return Kind::Float;
    const auto& e = exact();
    if (!e.den.is_one()) return Kind::Ratio;
    return e.num.is_constant() ? Kind::Rational : Kind::Poly;
}

bool Scalar::is_zero() const {
    if (const auto* d = std::get_if<double>(&value_)) return std::fabs(*d) <= kFloatTolerance;
    return exact().num.is_zero();
}

bool Scalar::is_one() const {
    if (const auto* d = std::get_if<double>(&value_)) return std::fabs(*d - 1.0) <= kFloatTolerance;
    const auto& e = exact();
    return e.den.is_one() && e.num.is_one();
}

bool Scalar::is_numeric() const {
    if (is_float()) return true;
    const auto& e = exact();
    return e.num.is_constant() && e.den.is_constant();
}

const Poly& Scalar::numerator() const { return exact().num; }
const Poly& Scalar::denominator() const { return exact().den; }

Rational Scalar::to_rational() const {
    if (is_float()) throw_mismatch();
    if (!is_numeric())
        throw Error(Errc::NonNumeric, "scalar '" + to_string() + "' still contains symbols");
    return exact().num.constant_value();
}

double Scalar::to_double() const {
    if (const auto* d = std::get_if<double>(&value_)) return *d;
    return to_rational().get_d();
}

std::set<std::string> Scalar::symbols() const {
    if (is_float()) return {};
    auto out = exact().num.symbols();
    auto den = exact().den.symbols();
    out.insert(den.begin(), den.end());
    return out;
}

namespace {

Scalar substitute_poly(const Poly& p, const std::map<std::string, Scalar>& bindings) {
    Scalar total;
    for (const auto& t : p.terms()) {
        Poly kept(Monomial{}, t.coeff);
        Scalar bound(1L);
        std::vector<Monomial::Factor> free;
        for (const auto& [name, exp] : t.mono.factors()) {
            auto it = bindings.find(name);
            if (it == bindings.end()) {
                free.emplace_back(name, exp);
            } else {
                if (it->second.is_float()) throw_mismatch();
                bound *= it->second.pow(exp);
            }
        }
        kept = kept * Poly(Monomial::from_factors(std::move(free)), Rational(1));
        total += Scalar(std::move(kept)) * bound;
    }
    return total;
}

}  // namespace

Scalar Scalar::substitute(const std::map<std::string, Scalar>& bindings) const {
    if (is_float() || bindings.empty()) return *this;
    const auto& e = exact();
    Scalar num = substitute_poly(e.num, bindings);
    if (e.den.is_one()) return num;
    return num / substitute_poly(e.den, bindings);
}

std::string Scalar::to_string() const {
    if (const auto* d = std::get_if<double>(&value_)) return float_to_string(*d);
    const auto& e = exact();
    if (e.den.is_one()) return e.num.to_string();
    const std::string num = needs_parens(e.num) ? "(" + e.num.to_string() + ")" : e.num.to_string();
    // The denominator may stay bare only as a single power of one symbol.
    const auto& lead = e.den.terms().front();
    const bool atom = e.den.size() == 1 && lead.coeff == 1 && lead.mono.factors().size() == 1;
    return num + "/" + (atom ? e.den.to_string() : "(" + e.den.to_string() + ")");
}

std::string Scalar::to_string(int digits) const {
    if (const auto* d = std::get_if<double>(&value_)) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*g", digits, *d);
        return buf;
    }
    return to_string();
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_float() != b.is_float()) throw_mismatch();
    if (a.is_float()) return Scalar::from_double(std::get<double>(a.value_) + std::get<double>(b.value_));
    const auto& x = a.exact();
    const auto& y = b.exact();
    if (y.num.is_zero()) return a;
    if (x.num.is_zero()) return b;
    if (x.den.is_one() && y.den.is_one()) return Scalar(x.num + y.num);
    if (x.den == y.den) return Scalar::normalized(x.num + y.num, x.den);
    if (x.den.is_one()) return Scalar::normalized(x.num * y.den + y.num, y.den);
    if (y.den.is_one()) return Scalar::normalized(x.num + y.num * x.den, x.den);
    // Work over the lcm of the denominators.
    const Poly g = gcd(x.den, y.den);
    const Poly xs = *x.den.divide_exact(g);
    const Poly ys = *y.den.divide_exact(g);
    return Scalar::normalized(x.num * ys + y.num * xs, x.den * ys);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar Scalar::operator-() const {
    if (const auto* d = std::get_if<double>(&value_)) return from_double(-*d);
    Scalar out = *this;
    auto& e = std::get<Exact>(out.value_);
    e.num = -e.num;
    return out;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_float() != b.is_float()) throw_mismatch();
    if (a.is_float()) return Scalar::from_double(std::get<double>(a.value_) * std::get<double>(b.value_));
    const auto& x = a.exact();
    const auto& y = b.exact();
    if (x.num.is_zero() || y.num.is_zero()) return Scalar{};
    if (x.den.is_one() && y.den.is_one()) return Scalar(x.num * y.num);
    // Cross-cancel before multiplying.
    const Poly g1 = gcd(x.num, y.den);
    const Poly g2 = gcd(y.num, x.den);
    return Scalar::normalized(*x.num.divide_exact(g1) * *y.num.divide_exact(g2),
                              *x.den.divide_exact(g2) * *y.den.divide_exact(g1));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (a.is_float() != b.is_float()) throw_mismatch();
    if (a.is_float()) {
        const double d = std::get<double>(b.value_);
        if (d == 0.0) throw Error(Errc::DivisionByZero, "division by zero");
        return Scalar::from_double(std::get<double>(a.value_) / d);
    }
    const auto& x = a.exact();
    const auto& y = b.exact();
    if (y.num.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
    return Scalar::normalized(x.num * y.den, x.den * y.num);
}

Scalar Scalar::pow(unsigned exponent) const {
    if (const auto* d = std::get_if<double>(&value_)) return from_double(std::pow(*d, exponent));
    const auto& e = exact();
    Scalar out;
    out.value_ = Exact{e.num.pow(exponent), e.den.pow(exponent)};
    return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_float() != b.is_float()) return false;
    if (a.is_float()) {
        const double x = std::get<double>(a.value_);
        const double y = std::get<double>(b.value_);
        const double scale = std::max({1.0, std::fabs(x), std::fabs(y)});
        return std::fabs(x - y) <= kFloatTolerance * scale;
    }
    const auto& x = a.exact();
    const auto& y = b.exact();
    if (x.den.is_one() && y.den.is_one()) return x.num == y.num;
    return x.num * y.den == y.num * x.den;
}

bool Scalar::identical(const Scalar& other) const {
    if (is_float() != other.is_float()) return false;
    if (is_float()) return std::get<double>(value_) == std::get<double>(other.value_);
    return exact().num == other.exact().num && exact().den == other.exact().den;
}

bool is_zero(const Scalar& x) { return x.is_zero(); }
bool equals(const Scalar& x, const Scalar& y) { return x == y; }
Scalar substitute(const Scalar& x, const std::map<std::string, Scalar>& bindings) {
    return x.substitute(bindings);
}

bool is_valid_symbol(std::string_view name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

Scalar parse_scalar(std::string_view text) { return evaluate_scalar(parse_expression(text)); }

}  // namespace hcns
