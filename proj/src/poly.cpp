#include "hcns/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace hcns {

Monomial::Monomial(std::string symbol, unsigned exponent) {
    if (exponent > 0) {
        factors_.emplace_back(std::move(symbol), exponent);
        degree_ = exponent;
    }
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial m;
    for (auto& f : factors) {
        if (f.second == 0) continue;
        if (!m.factors_.empty() && m.factors_.back().first == f.first)
            m.factors_.back().second += f.second;
        else
            m.factors_.push_back(std::move(f));
        m.degree_ += f.second;
    }
    return m;
}

unsigned Monomial::degree_in(const std::string& symbol) const {
    for (const auto& [name, exp] : factors_)
        if (name == symbol) return exp;
    return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    out.degree_ = degree_ + other.degree_;
    return out;
}

std::optional<Monomial> Monomial::divide(const Monomial& divisor) const {
    if (divisor.degree_ > degree_) return std::nullopt;
    Monomial out;
    auto a = factors_.begin();
    for (const auto& [name, exp] : divisor.factors_) {
        while (a != factors_.end() && a->first < name) out.factors_.push_back(*a++);
        if (a == factors_.end() || a->first != name || a->second < exp) return std::nullopt;
        if (a->second > exp) out.factors_.emplace_back(name, a->second - exp);
        ++a;
    }
    while (a != factors_.end()) out.factors_.push_back(*a++);
    out.degree_ = degree_ - divisor.degree_;
    return out;
}

Monomial Monomial::without(const std::string& symbol) const {
    Monomial out;
    for (const auto& f : factors_) {
        if (f.first == symbol) continue;
        out.factors_.push_back(f);
        out.degree_ += f.second;
    }
    return out;
}

std::string Monomial::to_string() const {
    std::string s;
    for (const auto& [name, exp] : factors_) {
        if (!s.empty()) s += '*';
        s += name;
        if (exp != 1) s += '^' + std::to_string(exp);
    }
    return s.empty() ? "1" : s;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < fa.size() && j < fb.size()) {
        if (fa[i].first == fb[j].first) {
            if (fa[i].second != fb[j].second) return fa[i].second < fb[j].second ? -1 : 1;
            ++i;
            ++j;
        } else {
            // The symbol that sorts first is the more significant variable.
            return fa[i].first < fb[j].first ? 1 : -1;
        }
    }
    if (i < fa.size()) return 1;
    if (j < fb.size()) return -1;
    return 0;
}

namespace {

bool term_before(const Poly::Term& a, const Poly::Term& b) {
    return grlex_compare(a.mono, b.mono) > 0;
}

}  // namespace

Poly::Poly(long value) {
    if (value != 0) terms_.push_back({Monomial{}, Rational(value)});
}

Poly::Poly(const Rational& value) {
    if (value != 0) terms_.push_back({Monomial{}, value});
}

Poly::Poly(Monomial mono, const Rational& coeff) {
    if (coeff != 0) terms_.push_back({std::move(mono), coeff});
}

Poly Poly::symbol(const std::string& name) { return Poly(Monomial(name), Rational(1)); }

Poly Poly::from_unsorted(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_before);
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
        } else {
            if (!out.empty() && out.back().coeff == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
    return Poly(std::move(out));
}

bool Poly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Poly::is_one() const { return is_constant() && !terms_.empty() && terms_[0].coeff == 1; }

Rational Poly::constant_value() const {
    if (terms_.empty() || !terms_.back().mono.is_one()) return Rational(0);
    return terms_.back().coeff;
}

const Rational& Poly::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return terms_.front().coeff;
}

const Monomial& Poly::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading monomial of zero polynomial");
    return terms_.front().mono;
}

std::set<std::string> Poly::symbols() const {
    std::set<std::string> out;
    for (const auto& t : terms_)
        for (const auto& f : t.mono.factors()) out.insert(f.first);
    return out;
}

unsigned Poly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

unsigned Poly::degree_in(const std::string& symbol) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree_in(symbol));
    return d;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

namespace {

std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a,
                                    const std::vector<Poly::Term>& b, bool subtract) {
    std::vector<Poly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        int cmp;
        if (i == a.size())
            cmp = -1;
        else if (j == b.size())
            cmp = 1;
        else
            cmp = grlex_compare(a[i].mono, b[j].mono);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            out.push_back(b[j]);
            if (subtract) out.back().coeff = -out.back().coeff;
            ++j;
        } else {
            Rational c = subtract ? Rational(a[i].coeff - b[j].coeff)
                                  : Rational(a[i].coeff + b[j].coeff);
            if (c != 0) out.push_back({a[i].mono, c});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& other) {
    if (other.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, other.terms_, false);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    if (other.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, other.terms_, true);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    if (a.is_constant()) return b.scaled(a.terms_[0].coeff);
    if (b.is_constant()) return a.scaled(b.terms_[0].coeff);
    std::vector<Poly::Term> products;
    products.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_)
            products.push_back({ta.mono * tb.mono, ta.coeff * tb.coeff});
    return Poly::from_unsorted(std::move(products));
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly Poly::scaled(const Rational& factor) const {
    if (factor == 0) return Poly{};
    Poly out = *this;
    for (auto& t : out.terms_) t.coeff *= factor;
    return out;
}

Poly Poly::pow(unsigned exponent) const {
    Poly result(1L);
    Poly base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1u;
        if (exponent > 0) base *= base;
    }
    return result;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    if (divisor.is_constant()) return scaled(Rational(1) / divisor.terms_[0].coeff);
    Poly remainder = *this;
    std::vector<Term> quotient;
    const Term& lead = divisor.terms_.front();
    while (!remainder.is_zero()) {
        const Term& r = remainder.terms_.front();
        auto mono = r.mono.divide(lead.mono);
        if (!mono) return std::nullopt;
        Term q{std::move(*mono), r.coeff / lead.coeff};
        remainder -= Poly(q.mono, q.coeff) * divisor;
        quotient.push_back(std::move(q));
    }
    // Quotient terms come out in strictly descending order.
    return Poly(std::move(quotient));
}

Poly Poly::monic() const {
    if (is_zero() || leading_coeff() == 1) return *this;
    return scaled(Rational(1) / leading_coeff());
}

std::vector<Poly> Poly::coefficients_in(const std::string& symbol) const {
    std::vector<std::vector<Term>> buckets(degree_in(symbol) + 1);
    for (const auto& t : terms_) buckets[t.mono.degree_in(symbol)].push_back({t.mono.without(symbol), t.coeff});
    std::vector<Poly> out;
    out.reserve(buckets.size());
    // Removing one symbol from a sorted term list can break grlex order.
    for (auto& b : buckets) out.push_back(from_unsorted(std::move(b)));
    return out;
}

Poly Poly::from_coefficients_in(const std::string& symbol, const std::vector<Poly>& coeffs) {
    std::vector<Term> terms;
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        Monomial x(symbol, static_cast<unsigned>(d));
        for (const auto& t : coeffs[d].terms_) terms.push_back({t.mono * x, t.coeff});
    }
    return from_unsorted(std::move(terms));
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].mono == b.terms_[i].mono))
            return false;
    return true;
}

std::string rational_to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        const bool negative = t.coeff < 0;
        const Rational mag = abs(t.coeff);
        std::string body;
        if (t.mono.is_one())
            body = rational_to_string(mag);
        else if (mag == 1)
            body = t.mono.to_string();
        else
            body = rational_to_string(mag) + "*" + t.mono.to_string();
        if (first)
            out = negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// gcd: recursive primitive polynomial remainder sequences.

namespace {

Poly content_in(const std::vector<Poly>& coeffs) {
    Poly g;
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

// lc(B)^k * A mod B in the main variable, on coefficient vectors.
std::vector<Poly> pseudo_remainder(std::vector<Poly> a, const std::vector<Poly>& b) {
    const std::size_t db = b.size() - 1;
    const Poly& lcb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t shift = a.size() - 1 - db;
        const Poly lca = a.back();
        for (auto& c : a) c *= lcb;
        for (std::size_t j = 0; j <= db; ++j) a[j + shift] -= lca * b[j];
        while (!a.empty() && a.back().is_zero()) a.pop_back();
    }
    return a;
}

std::vector<Poly> primitive_part(const std::vector<Poly>& coeffs) {
    const Poly c = content_in(coeffs);
    std::vector<Poly> out;
    out.reserve(coeffs.size());
    for (const auto& x : coeffs) out.push_back(c.is_constant() ? x : *x.divide_exact(c));
    // Keep rational coefficients from growing along the remainder sequence.
    const Rational scale = Rational(1) / out.back().leading_coeff();
    for (auto& x : out) x = x.scaled(scale);
    return out;
}

Poly monomial_gcd(const Monomial& m, const Poly& p) {
    std::vector<Monomial::Factor> common;
    for (const auto& [name, exp] : m.factors()) {
        unsigned e = exp;
        for (const auto& t : p.terms()) {
            e = std::min(e, t.mono.degree_in(name));
            if (e == 0) break;
        }
        if (e > 0) common.emplace_back(name, e);
    }
    return Poly(Monomial::from_factors(std::move(common)), Rational(1));
}

// Arithmetic modulo the Mersenne prime 2^61 - 1.
using u64 = std::uint64_t;
constexpr u64 kPrime = (u64(1) << 61) - 1;

u64 mul_mod(u64 a, u64 b) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % kPrime); }
u64 add_mod(u64 a, u64 b) { return (a + b) % kPrime; }
u64 sub_mod(u64 a, u64 b) { return (a + kPrime - b) % kPrime; }

u64 pow_mod(u64 a, u64 e) {
    u64 r = 1;
    for (; e; e >>= 1, a = mul_mod(a, a))
        if (e & 1) r = mul_mod(r, a);
    return r;
}

u64 inv_mod(u64 a) { return pow_mod(a, kPrime - 2); }

std::optional<u64> integer_mod(const Integer& z) {
    Integer r = z % Integer(static_cast<unsigned long>(kPrime));
    if (r < 0) r += Integer(static_cast<unsigned long>(kPrime));
    return static_cast<u64>(r.get_ui());
}

// Image of a rational; nullopt when the denominator vanishes mod the prime.
std::optional<u64> rational_mod(const Rational& q) {
    const u64 den = *integer_mod(q.get_den());
    if (den == 0) return std::nullopt;
    return mul_mod(*integer_mod(q.get_num()), inv_mod(den));
}

std::optional<u64> evaluate_mod(const Poly& p, const std::map<std::string, u64>& at) {
    u64 sum = 0;
    for (const auto& t : p.terms()) {
        auto v = rational_mod(t.coeff);
        if (!v) return std::nullopt;
        for (const auto& [name, exp] : t.mono.factors()) *v = mul_mod(*v, pow_mod(at.at(name), exp));
        sum = add_mod(sum, *v);
    }
    return sum;
}

// Degree of the gcd of two univariate polynomials over the prime field.
std::size_t univariate_gcd_degree(std::vector<u64> a, std::vector<u64> b) {
    auto trim = [](std::vector<u64>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        const u64 inv = inv_mod(b.back());
        while (!a.empty() && a.size() >= b.size()) {
            const u64 f = mul_mod(a.back(), inv);
            const std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] = sub_mod(a[j + shift], mul_mod(f, b[j]));
            trim(a);
        }
        std::swap(a, b);
    }
    return a.empty() ? 0 : a.size() - 1;
}

// True when the primitive coefficient vectors certainly share no factor
// involving the main variable: their images mod a prime, at a point keeping
// both leading coefficients nonzero, are coprime.
bool coprime_by_evaluation(const std::vector<Poly>& pa, const std::vector<Poly>& pb) {
    std::set<std::string> vars;
    for (const auto* v : {&pa, &pb})
        for (const auto& c : *v)
            for (const auto& s : c.symbols()) vars.insert(s);
    for (u64 seed = 0; seed < 3; ++seed) {
        std::map<std::string, u64> at;
        u64 k = 0;
        for (const auto& s : vars) at[s] = 1000003 + 7919 * (k++) + 104729 * seed;
        std::vector<u64> ia, ib;
        bool ok = true;
        for (const auto* v : {&pa, &pb})
            for (const auto& c : *v) {
                const auto x = evaluate_mod(c, at);
                if (!x) {
                    ok = false;
                    break;
                }
                (v == &pa ? ia : ib).push_back(*x);
            }
        if (!ok || ia.back() == 0 || ib.back() == 0) continue;
        return univariate_gcd_degree(std::move(ia), std::move(ib)) == 0;
    }
    return false;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly(1L);
    if (a.size() == 1) return monomial_gcd(a.leading_monomial(), b);
    if (b.size() == 1) return monomial_gcd(b.leading_monomial(), a);
    if (a == b) return a.monic();

    const auto sa = a.symbols();
    const auto sb = b.symbols();
    std::string x;
    for (const auto& s : sa)
        if (sb.count(s)) {
            x = s;
            break;
        }
    if (x.empty()) {
        // No shared variable: the gcd lives in the contents.
        const std::string ya = *sa.begin();
        return gcd(content_in(a.coefficients_in(ya)), b);
    }
    if (auto q = a.divide_exact(b)) return b.monic();
    if (auto q = b.divide_exact(a)) return a.monic();

    auto ca = a.coefficients_in(x);
    auto cb = b.coefficients_in(x);
    const Poly cont = gcd(content_in(ca), content_in(cb));
    auto pa = primitive_part(ca);
    auto pb = primitive_part(cb);
    if (coprime_by_evaluation(pa, pb)) return cont.monic();
    if (pa.size() < pb.size()) std::swap(pa, pb);
    while (!pb.empty()) {
        auto r = pseudo_remainder(pa, pb);
        pa = std::move(pb);
        pb = r.empty() ? std::vector<Poly>{} : primitive_part(r);
    }
    Poly g = pa.size() == 1 ? Poly(1L) : Poly::from_coefficients_in(x, pa);
    return (g * cont).monic();
}

}  // namespace hcns
