#include "hcns/hcnumber.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace hcns {

// ---------------------------------------------------------------------------
// HNumber

HNumber::HNumber(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    const bool any_float = std::any_of(coeffs_.begin(), coeffs_.end(),
                                       [](const Scalar& s) { return s.is_float(); });
    if (!any_float) return;
    for (auto& c : coeffs_) {
        if (c.is_float()) continue;
        if (!c.is_numeric())
            throw Error(Errc::ExactnessMismatch,
                        "symbolic coefficient '" + c.to_string() + "' mixed with Float coefficients");
        c = c.to_float();
    }
}

HNumber HNumber::zeros(std::size_t dim, bool floating) {
    return HNumber(std::vector<Scalar>(dim, floating ? Scalar::from_double(0.0) : Scalar{}));
}

HNumber HNumber::basis(std::size_t dim, std::size_t index) {
    if (index < 1 || index > dim)
        throw Error(Errc::IndexOutOfRange, "basis index " + std::to_string(index) + " outside 1.." +
                                               std::to_string(dim));
    std::vector<Scalar> c(dim);
    c[index - 1] = Scalar(1L);
    return HNumber(std::move(c));
}

HNumber HNumber::from_doubles(const std::vector<double>& values) {
    std::vector<Scalar> c;
    c.reserve(values.size());
    for (double v : values) c.push_back(Scalar::from_double(v));
    return HNumber(std::move(c));
}

bool HNumber::is_float() const {
    return !coeffs_.empty() && coeffs_.front().is_float();
}

bool HNumber::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::vector<double> HNumber::to_doubles() const {
    std::vector<double> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.to_double());
    return out;
}

HNumber HNumber::to_float() const { return from_doubles(to_doubles()); }

std::string HNumber::to_string() const { return to_string(-1); }

std::string HNumber::to_string(int digits) const {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ", ";
        s += digits > 0 ? coeffs_[i].to_string(digits) : coeffs_[i].to_string();
    }
    return s + "]";
}

// ---------------------------------------------------------------------------
// NaturalForm

NaturalForm::NaturalForm(std::string basis, std::vector<NaturalTerm> terms) : basis_(std::move(basis)) {
    std::map<std::size_t, Scalar> collected;
    for (auto& t : terms) {
        if (t.index < 1) throw Error(Errc::IndexOutOfRange, "basis indices start at 1");
        auto [it, inserted] = collected.emplace(t.index, t.coeff);
        if (!inserted) it->second += t.coeff;
    }
    for (auto& [index, coeff] : collected)
        if (!coeff.is_zero()) terms_.push_back({std::move(coeff), index});
}

namespace {

std::string strip_spaces(std::string s) {
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    return s;
}

bool is_negative_single_term(const Scalar& c) {
    if (c.is_float()) return c.to_double() < 0;
    const Poly& num = c.numerator();
    return num.size() == 1 && num.leading_coeff() < 0;
}

}  // namespace

std::string NaturalForm::to_string(bool compact, int digits) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& [coeff, index] = terms_[i];
        const bool negative = is_negative_single_term(coeff);
        const Scalar mag = negative ? -coeff : coeff;
        const std::string element = basis_ + std::to_string(index);
        std::string body;
        if (mag.is_exact() && mag.is_one()) {
            body = element;
        } else {
            std::string c = digits > 0 ? mag.to_string(digits) : mag.to_string();
            if (mag.is_exact() && mag.denominator().is_one() && mag.numerator().size() > 1)
                c = "(" + c + ")";
            body = c + "*" + element;
        }
        if (i == 0)
            out = negative ? "-" + body : body;
        else
            out += negative ? " - " + body : " + " + body;
    }
    return compact ? strip_spaces(out) : out;
}

// ---------------------------------------------------------------------------
// Parsing

bool split_basis_identifier(std::string_view ident, std::string& basis, std::size_t& index) {
    std::size_t i = 0;
    while (i < ident.size() && std::isalpha(static_cast<unsigned char>(ident[i]))) ++i;
    if (i == 0 || i == ident.size()) return false;
    for (std::size_t j = i; j < ident.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(ident[j]))) return false;
    if (ident.size() - i > 9) return false;
    basis.assign(ident.substr(0, i));
    index = std::stoul(std::string(ident.substr(i)));
    return true;
}

namespace {

// Either a scalar or a linear combination of basis elements.
struct Linear {
    bool is_vector = false;
    Scalar scalar;
    std::map<std::size_t, Scalar> comps;
};

void align_exactness(Scalar& a, Scalar& b) {
    if (a.is_float() == b.is_float()) return;
    Scalar& exact = a.is_float() ? b : a;
    if (!exact.is_numeric())
        throw Error(Errc::ExactnessMismatch,
                    "symbolic coefficient '" + exact.to_string() + "' mixed with Float values");
    exact = exact.to_float();
}

Scalar mul_aligned(Scalar a, Scalar b) {
    align_exactness(a, b);
    return a * b;
}

Scalar add_aligned(Scalar a, Scalar b) {
    align_exactness(a, b);
    return a + b;
}

class NaturalEvaluator {
public:
    std::string basis;

    Linear eval(const Expr& e) {
        switch (e.op) {
        case Expr::Op::Integer:
        case Expr::Op::Decimal: return scalar(evaluate_scalar(e));
        case Expr::Op::Ident: {
            std::string b;
            std::size_t index = 0;
            if (!split_basis_identifier(e.text, b, index)) return scalar(Scalar::symbol(e.text));
            if (index == 0) throw Error(Errc::IndexOutOfRange, "basis indices start at 1");
            if (basis.empty())
                basis = b;
            else if (basis != b)
                throw Error(Errc::MixedBasis, "basis identifiers '" + basis + "' and '" + b +
                                                  "' mixed in one number (at offset " +
                                                  std::to_string(e.pos) + ")");
            Linear v;
            v.is_vector = true;
            v.comps.emplace(index, Scalar(1L));
            return v;
        }
        case Expr::Op::Call: throw ParseError("function calls are not allowed in a number", e.pos);
        case Expr::Op::Neg: {
            Linear v = eval(e.args[0]);
            if (!v.is_vector) return scalar(-v.scalar);
            for (auto& [k, c] : v.comps) c = -c;
            return v;
        }
        case Expr::Op::Add:
        case Expr::Op::Sub: {
            Linear a = eval(e.args[0]);
            Linear b = eval(e.args[1]);
            if (a.is_vector != b.is_vector) {
                // A literal zero may stand in for the zero number.
                if (!a.is_vector && a.scalar.is_exact() && a.scalar.is_zero()) a = Linear{true, {}, {}};
                else if (!b.is_vector && b.scalar.is_exact() && b.scalar.is_zero()) b = Linear{true, {}, {}};
                else throw ParseError("every term must name a basis element", e.pos);
            }
            const bool sub = e.op == Expr::Op::Sub;
            if (!a.is_vector) return scalar(sub ? a.scalar - b.scalar : a.scalar + b.scalar);
            for (auto& [k, c] : b.comps) {
                Scalar term = sub ? -c : c;
                auto [it, inserted] = a.comps.emplace(k, term);
                if (!inserted) it->second = add_aligned(it->second, term);
            }
            return a;
        }
        case Expr::Op::Mul: {
            Linear a = eval(e.args[0]);
            Linear b = eval(e.args[1]);
            if (a.is_vector && b.is_vector)
                throw ParseError("basis element used inside a coefficient", e.pos);
            if (!a.is_vector && !b.is_vector) return scalar(a.scalar * b.scalar);
            Linear& v = a.is_vector ? a : b;
            const Scalar& s = a.is_vector ? b.scalar : a.scalar;
            for (auto& [k, c] : v.comps) c = mul_aligned(s, c);
            return std::move(v);
        }
        case Expr::Op::Div: {
            Linear a = eval(e.args[0]);
            Linear b = eval(e.args[1]);
            if (b.is_vector) throw ParseError("division by a basis element", e.pos);
            if (!a.is_vector) return scalar(a.scalar / b.scalar);
            for (auto& [k, c] : a.comps) {
                Scalar d = b.scalar;
                align_exactness(c, d);
                c = c / d;
            }
            return a;
        }
        case Expr::Op::Pow: {
            Linear a = eval(e.args[0]);
            if (a.is_vector) throw ParseError("powers of basis elements are not allowed", e.pos);
            return scalar(a.scalar.pow(e.exponent));
        }
        }
        throw ParseError("unsupported expression", e.pos);
    }

private:
    static Linear scalar(Scalar s) {
        Linear v;
        v.scalar = std::move(s);
        return v;
    }
};

}  // namespace

NaturalForm natural_from_expr(const Expr& expr) {
    NaturalEvaluator ev;
    Linear v = ev.eval(expr);
    if (!v.is_vector) {
        if (v.scalar.is_zero()) return NaturalForm{};
        throw ParseError("every term must name a basis element", expr.pos);
    }
    std::vector<NaturalTerm> terms;
    for (auto& [k, c] : v.comps) terms.push_back({std::move(c), k});
    return NaturalForm(ev.basis, std::move(terms));
}

NaturalForm parse_natural(std::string_view text) { return natural_from_expr(parse_expression(text)); }

std::pair<HNumber, NaturalForm> hns_number(std::size_t n, std::string_view coeff_name,
                                           std::string_view basis_name) {
    if (n < 1) throw Error(Errc::InvalidArgument, "dimension must be positive");
    std::vector<Scalar> coeffs;
    std::vector<NaturalTerm> terms;
    for (std::size_t i = 1; i <= n; ++i) {
        Scalar s = Scalar::symbol(std::string(coeff_name) + "_" + std::to_string(i));
        coeffs.push_back(s);
        terms.push_back({std::move(s), i});
    }
    return {HNumber(std::move(coeffs)), NaturalForm(std::string(basis_name), std::move(terms))};
}

const std::string& name_bas(const NaturalForm& a) { return a.basis(); }

HNumber convert_a(const NaturalForm& a, std::size_t dim) {
    if (a.max_index() > dim)
        throw Error(Errc::IndexOutOfRange, "basis index " + std::to_string(a.max_index()) +
                                               " exceeds dimension " + std::to_string(dim));
    const bool floating = std::any_of(a.terms().begin(), a.terms().end(),
                                      [](const NaturalTerm& t) { return t.coeff.is_float(); });
    std::vector<Scalar> coeffs(dim, floating ? Scalar::from_double(0.0) : Scalar{});
    for (const auto& t : a.terms()) coeffs[t.index - 1] = t.coeff;
    return HNumber(std::move(coeffs));
}

NaturalForm viz_in_a(const HNumber& a, std::string_view basis_name) {
    std::vector<NaturalTerm> terms;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!a[i].is_zero()) terms.push_back({a[i], i + 1});
    return NaturalForm(std::string(basis_name), std::move(terms));
}

NaturalForm renam_a(const NaturalForm& a, std::string_view new_basis) {
    return NaturalForm(std::string(new_basis), a.terms());
}

HNumber list_hns(std::size_t dim) { return HNumber::zeros(dim); }

std::vector<Scalar> refill(std::vector<Scalar> list, Scalar element) {
    list.push_back(std::move(element));
    return list;
}

}  // namespace hcns
