#include "hcns/ops.hpp"

namespace hcns {

namespace {

bool mixed(const HNumber& a, const HNumber& b) { return a.is_float() != b.is_float(); }

// Promotes the exact side of a mixed pair; symbolic values cannot be promoted.
void align(HNumber& a, HNumber& b) {
    if (!mixed(a, b)) return;
    (a.is_float() ? b : a) = (a.is_float() ? b : a).to_float();
}

void align(Scalar& a, Scalar& b) {
    if (a.is_float() == b.is_float()) return;
    Scalar& exact = a.is_float() ? b : a;
    exact = exact.to_float();
}

void align(Scalar& s, HNumber& x) {
    if (s.is_float() == x.is_float()) return;
    if (s.is_float())
        x = x.to_float();
    else
        s = s.to_float();
}

class Calculator {
public:
    Calculator(const AlgebraDef& alg) : alg_(alg) {}

    std::string basis;

    CalcValue eval(const Expr& e) {
        switch (e.op) {
        case Expr::Op::Integer:
        case Expr::Op::Decimal: return scalar(evaluate_scalar(e));
        case Expr::Op::Ident: {
            std::string b;
            std::size_t index = 0;
            if (!split_basis_identifier(e.text, b, index)) return scalar(Scalar::symbol(e.text));
            if (basis.empty())
                basis = b;
            else if (b != basis)
                throw Error(Errc::MixedBasis, "basis identifiers '" + basis + "' and '" + b + "' mixed");
            if (index < 1 || index > alg_.dim)
                throw Error(Errc::IndexOutOfRange, e.text + " is not a basis element of '" + alg_.name + "'");
            return number(HNumber::basis(alg_.dim, index));
        }
        case Expr::Op::Call: return call(e);
        case Expr::Op::Neg: {
            CalcValue v = eval(e.args[0]);
            if (v.is_number) return number(negate(v.number));
            return scalar(-v.scalar);
        }
        case Expr::Op::Add:
        case Expr::Op::Sub: {
            CalcValue a = eval(e.args[0]);
            CalcValue b = eval(e.args[1]);
            const bool sub = e.op == Expr::Op::Sub;
            if (!a.is_number && !b.is_number) {
                align(a.scalar, b.scalar);
                return scalar(sub ? a.scalar - b.scalar : a.scalar + b.scalar);
            }
            HNumber x = as_number(a);
            HNumber y = as_number(b);
            align(x, y);
            return number(sub ? in_sub(x, y) : in_add(x, y));
        }
        case Expr::Op::Mul: {
            CalcValue a = eval(e.args[0]);
            CalcValue b = eval(e.args[1]);
            if (!a.is_number && !b.is_number) {
                align(a.scalar, b.scalar);
                return scalar(a.scalar * b.scalar);
            }
            if (!a.is_number || !b.is_number) {
                Scalar s = a.is_number ? b.scalar : a.scalar;
                HNumber x = a.is_number ? a.number : b.number;
                align(s, x);
                return number(scalar_mul(s, x));
            }
            align(a.number, b.number);
            return number(in_multi(a.number, b.number, alg_));
        }
        case Expr::Op::Div: {
            CalcValue a = eval(e.args[0]);
            CalcValue b = eval(e.args[1]);
            if (!b.is_number) {
                if (!a.is_number) {
                    align(a.scalar, b.scalar);
                    return scalar(a.scalar / b.scalar);
                }
                Scalar s = b.scalar;
                HNumber x = a.number;
                align(s, x);
                const Scalar one = s.is_float() ? Scalar::from_double(1.0) : Scalar(1L);
                return number(scalar_mul(one / s, x));
            }
            HNumber x = as_number(a);
            HNumber y = b.number;
            align(x, y);
            return number(divis(x, y, alg_, Side::Left));
        }
        case Expr::Op::Pow: {
            CalcValue a = eval(e.args[0]);
            if (!a.is_number) return scalar(a.scalar.pow(e.exponent));
            HNumber acc = a.number.is_float() ? unit(alg_).to_float() : unit(alg_);
            if (e.exponent > 0) acc = a.number;
            for (unsigned i = 1; i < e.exponent; ++i) acc = in_multi(acc, a.number, alg_);
            return number(std::move(acc));
        }
        }
        throw ParseError("unsupported expression", e.pos);
    }

private:
    CalcValue call(const Expr& e) {
        auto arity = [&](std::size_t n) {
            if (e.args.size() != n)
                throw ParseError(e.text + "() takes " + std::to_string(n) + " argument(s)", e.pos);
        };
        if (e.text == "unit") {
            arity(0);
            return number(unit(alg_));
        }
        if (e.text == "conj") {
            arity(1);
            return number(conjug(as_number(eval(e.args[0])), alg_));
        }
        if (e.text == "norm") {
            arity(1);
            return scalar(norma(as_number(eval(e.args[0])), alg_));
        }
        throw ParseError("unknown function '" + e.text + "'", e.pos);
    }

    // Scalars stand for multiples of the identity when combined with numbers.
    HNumber as_number(const CalcValue& v) {
        if (v.is_number) return v.number;
        HNumber u = unit(alg_);
        if (v.scalar.is_float()) u = u.to_float();
        return scalar_mul(v.scalar, u);
    }

    static CalcValue scalar(Scalar s) {
        CalcValue v;
        v.scalar = std::move(s);
        return v;
    }

    static CalcValue number(HNumber x) {
        CalcValue v;
        v.is_number = true;
        v.number = std::move(x);
        return v;
    }

    const AlgebraDef& alg_;
};

}  // namespace

CalcValue evaluate_in(const AlgebraDef& alg, std::string_view text, std::string* basis_seen) {
    alg.require_shape();
    Calculator calc(alg);
    CalcValue v = calc.eval(parse_expression(text));
    if (basis_seen) *basis_seen = calc.basis;
    return v;
}

}  // namespace hcns
