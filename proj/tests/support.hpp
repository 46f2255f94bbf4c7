#pragma once

// Shared test data and independent reference implementations.

#include "hcns/algebra.hpp"
#include "hcns/hcnumber.hpp"
#include "hcns/scalar.hpp"

#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace hcns::test {

using Table = std::vector<std::vector<std::string>>;

// Cayley tables in natural form, transcribed separately from the registry.
inline const std::map<std::string, Table>& golden_tables() {
    static const std::map<std::string, Table> tables = {
        {"R", {{"e1"}}},
        {"C", {{"e1", "e2"}, {"e2", "-e1"}}},
        {"D", {{"e1", "e2"}, {"e2", "e1"}}},
        {"Dual", {{"e1", "e2"}, {"e2", "0"}}},
        {"W", {{"e1", "e2"}, {"e2", "p*e1+q*e2"}}},
        {"H",
         {{"e1", "e2", "e3", "e4"}, {"e2", "-e1", "e4", "-e3"}, {"e3", "-e4", "-e1", "e2"}, {"e4", "e3", "-e2", "-e1"}}},
        {"Hab",
         {{"e1", "e2", "e3", "e4"},
          {"e2", "-alpha*e1", "e4", "-alpha*e3"},
          {"e3", "-e4", "-beta*e1", "beta*e2"},
          {"e4", "alpha*e3", "-beta*e2", "-alpha*beta*e1"}}},
        {"Q4N",
         {{"E1", "E2", "E3", "E4"},
          {"E2", "p*E1+q*E2", "E4", "p*E3+q*E4"},
          {"E3", "-E4", "p*E1+q*E3", "-p*E2-q*E4"},
          {"E4", "-p*E3-q*E4", "p*E2+q*E4", "-p^2*E1-p*q*E2-p*q*E3-q^2*E4"}}},
        {"T", {{"e1", "e2", "e3"}, {"e2", "(e3-e1)/2", "-e2"}, {"e3", "-e2", "e1"}}},
        {"RplusC", {{"e1", "0", "0"}, {"0", "e2", "e3"}, {"0", "e3", "-e2"}}},
    };
    return tables;
}

// Parses "[[[1,0],[0,1]],[[0,1],[-alpha,0]]]" into a tensor of scalars.
inline Tensor3 parse_nested_list(const std::string& text) {
    Tensor3 out;
    int depth = 0;
    std::string leaf;
    auto flush = [&] {
        if (leaf.find_first_not_of(" \t\n") == std::string::npos) {
            leaf.clear();
            return;
        }
        out.back().back().push_back(parse_scalar(leaf));
        leaf.clear();
    };
    for (char c : text) {
        if (c == '[') {
            ++depth;
            if (depth == 2) out.emplace_back();
            if (depth == 3) out.back().emplace_back();
        } else if (c == ']') {
            if (depth == 3) flush();
            --depth;
        } else if (c == ',' && depth == 3) {
            flush();
        } else if (depth == 3) {
            leaf += c;
        }
    }
    return out;
}

// Distributes every a_i e_i * b_j e_j through the natural Cayley table and
// collects coefficients per basis element.
inline std::vector<Scalar> brute_force_product(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                                               const Table& table) {
    const std::size_t n = table.size();
    std::map<std::size_t, Scalar> acc;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const NaturalForm cell = parse_natural(table[i][j]);
            for (const auto& term : cell.terms()) acc[term.index] += a[i] * b[j] * term.coeff;
        }
    std::vector<Scalar> out(n);
    for (const auto& [k, v] : acc) out[k - 1] = v;
    return out;
}

class Random {
public:
    explicit Random(unsigned seed) : gen_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)); }

    Scalar rational() {
        const long num = integer(-9, 9);
        const long den = integer(1, 5);
        Rational r{Integer(num), Integer(den)};
        r.canonicalize();
        return Scalar(r);
    }

    // Exact scalar, sometimes symbolic.
    Scalar exact(const std::vector<std::string>& symbols = {"x", "y"}) {
        Scalar s = rational();
        if (!symbols.empty() && integer(0, 2) == 0) s += rational() * Scalar::symbol(symbols[index(symbols.size())]);
        return s;
    }

    HNumber rational_number(std::size_t dim, double zero_prob = 0.2) {
        std::vector<Scalar> c;
        for (std::size_t i = 0; i < dim; ++i) c.push_back(real(0, 1) < zero_prob ? Scalar(0L) : rational());
        return HNumber(std::move(c));
    }

    HNumber exact_number(std::size_t dim, double zero_prob = 0.2) {
        std::vector<Scalar> c;
        for (std::size_t i = 0; i < dim; ++i) c.push_back(real(0, 1) < zero_prob ? Scalar(0L) : exact());
        return HNumber(std::move(c));
    }

    HNumber float_number(std::size_t dim, double lo = -2.0, double hi = 2.0) {
        std::vector<double> c;
        for (std::size_t i = 0; i < dim; ++i) c.push_back(real(lo, hi));
        return HNumber::from_doubles(c);
    }

    std::mt19937& engine() { return gen_; }

private:
    std::mt19937 gen_;
};

inline double max_abs_diff(const HNumber& a, const HNumber& b) {
    const auto x = a.to_doubles();
    const auto y = b.to_doubles();
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::fabs(x[i] - y[i]));
    return d;
}

}  // namespace hcns::test
