#include "hcns/algebra.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace hcns {

using json = nlohmann::json;

void AlgebraDef::require_shape() const {
    auto bad = [&] {
        throw Error(Errc::DimMismatch, "structure-constant tensor of '" + name +
                                           "' is not " + std::to_string(dim) + "x" +
                                           std::to_string(dim) + "x" + std::to_string(dim));
    };
    if (dim == 0 || gamma.size() != dim) bad();
    for (const auto& row : gamma) {
        if (row.size() != dim) bad();
        for (const auto& cell : row)
            if (cell.size() != dim) bad();
    }
}

Tensor3 zero_tensor(std::size_t n) { return Tensor3(n, std::vector<Cell>(n, Cell(n))); }

CayleyCell cayley_cell(const AlgebraDef& def, std::size_t row, std::size_t column) {
    if (row < 1 || row > def.dim || column < 1 || column > def.dim)
        throw Error(Errc::IndexOutOfRange, "Cayley cell index outside 1.." + std::to_string(def.dim));
    return {row, column, def.gamma[row - 1][column - 1]};
}

// ---------------------------------------------------------------------------
// Structural properties

bool is_commutative(const AlgebraDef& def) {
    def.require_shape();
    for (std::size_t i = 0; i < def.dim; ++i)
        for (std::size_t j = i + 1; j < def.dim; ++j)
            if (def.gamma[i][j] != def.gamma[j][i]) return false;
    return true;
}

bool is_associative(const AlgebraDef& def) {
    def.require_shape();
    const std::size_t n = def.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t m = 0; m < n; ++m) {
                    Scalar left;
                    Scalar right;
                    for (std::size_t l = 0; l < n; ++l) {
                        if (!def.at(i, j, l).is_zero() && !def.at(l, k, m).is_zero())
                            left += def.at(i, j, l) * def.at(l, k, m);
                        if (!def.at(j, k, l).is_zero() && !def.at(i, l, m).is_zero())
                            right += def.at(j, k, l) * def.at(i, l, m);
                    }
                    if (left != right) return false;
                }
    return true;
}

bool first_basis_is_identity(const AlgebraDef& def) {
    def.require_shape();
    for (std::size_t j = 0; j < def.dim; ++j)
        for (std::size_t k = 0; k < def.dim; ++k) {
            const Scalar expected(j == k ? 1L : 0L);
            if (def.at(0, j, k) != expected || def.at(j, 0, k) != expected) return false;
        }
    return true;
}

std::vector<Finding> validate(const AlgebraDef& def) {
    std::vector<Finding> out;
    auto fatal = [&](std::string code, std::string msg) {
        out.push_back({Finding::Severity::Fatal, std::move(code), std::move(msg)});
    };
    auto info = [&](std::string code, std::string msg) {
        out.push_back({Finding::Severity::Info, std::move(code), std::move(msg)});
    };

    if (def.name.empty()) fatal("name", "algebra name is empty");
    try {
        def.require_shape();
    } catch (const Error& e) {
        fatal("shape", e.what());
        return out;
    }
    const std::set<std::string> declared(def.params.begin(), def.params.end());
    for (const auto& p : def.params)
        if (!is_valid_symbol(p)) fatal("param", "parameter '" + p + "' is not a valid symbol");
    std::set<std::string> undeclared;
    bool non_exact = false;
    for (const auto& row : def.gamma)
        for (const auto& cell : row)
            for (const auto& c : cell) {
                if (c.is_float()) {
                    non_exact = true;
                    continue;
                }
                for (const auto& s : c.symbols())
                    if (!declared.count(s)) undeclared.insert(s);
            }
    if (non_exact) fatal("non_exact", "structure constants must be exact");
    for (const auto& s : undeclared)
        fatal("unknown_symbol", "structure constants use undeclared symbol '" + s + "'");
    if (has_fatal(out)) return out;

    info("identity", first_basis_is_identity(def) ? "e1 is a two-sided identity"
                                                  : "e1 is not a two-sided identity");
    info("commutative", is_commutative(def) ? "commutative" : "noncommutative");
    info("associative", is_associative(def) ? "associative" : "nonassociative");
    return out;
}

bool has_fatal(const std::vector<Finding>& findings) {
    return std::any_of(findings.begin(), findings.end(),
                       [](const Finding& f) { return f.severity == Finding::Severity::Fatal; });
}

// ---------------------------------------------------------------------------
// Natural tables

AlgebraDef in_convert_hns(const std::vector<std::vector<NaturalForm>>& table, std::string_view name) {
    const std::size_t n = table.size();
    if (n == 0) throw Error(Errc::DimMismatch, "empty Cayley table");
    AlgebraDef def;
    def.name = std::string(name);
    def.dim = n;
    def.gamma.reserve(n);
    std::string basis;
    std::set<std::string> symbols;
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i].size() != n)
            throw Error(Errc::DimMismatch, "Cayley table row " + std::to_string(i + 1) + " has " +
                                               std::to_string(table[i].size()) + " cells, expected " +
                                               std::to_string(n));
        std::vector<Cell> row;
        for (std::size_t j = 0; j < n; ++j) {
            const NaturalForm& cell = table[i][j];
            if (!cell.basis().empty()) {
                if (basis.empty())
                    basis = cell.basis();
                else if (basis != cell.basis())
                    throw Error(Errc::BasisMismatch, "cell (" + std::to_string(i + 1) + "," +
                                                         std::to_string(j + 1) + ") uses basis '" +
                                                         cell.basis() + "', expected '" + basis + "'");
            }
            HNumber v = convert_a(cell, n);
            for (const auto& c : v.coeffs()) {
                auto s = c.symbols();
                symbols.insert(s.begin(), s.end());
            }
            row.push_back(v.coeffs());
        }
        def.gamma.push_back(std::move(row));
    }
    def.params.assign(symbols.begin(), symbols.end());
    if (!basis.empty()) def.basis = basis;
    return def;
}

AlgebraDef in_convert_hns(const std::vector<std::vector<std::string>>& table, std::string_view name) {
    std::vector<std::vector<NaturalForm>> parsed;
    parsed.reserve(table.size());
    for (const auto& row : table) {
        std::vector<NaturalForm> r;
        r.reserve(row.size());
        for (const auto& cell : row) r.push_back(parse_natural(cell));
        parsed.push_back(std::move(r));
    }
    return in_convert_hns(parsed, name);
}

std::vector<std::vector<NaturalForm>> viz_hns_cells(const AlgebraDef& def, std::string_view basis_name) {
    def.require_shape();
    std::vector<std::vector<NaturalForm>> out(def.dim);
    for (std::size_t i = 0; i < def.dim; ++i)
        for (std::size_t j = 0; j < def.dim; ++j) out[i].push_back(viz_in_a(HNumber(def.gamma[i][j]), basis_name));
    return out;
}

std::string viz_hns(const AlgebraDef& def, std::string_view basis_name) {
    const auto cells = viz_hns_cells(def, basis_name);
    const std::size_t n = def.dim;
    std::vector<std::vector<std::string>> grid(n + 1, std::vector<std::string>(n + 1));
    grid[0][0] = def.name;
    for (std::size_t i = 0; i < n; ++i) {
        grid[0][i + 1] = std::string(basis_name) + std::to_string(i + 1);
        grid[i + 1][0] = grid[0][i + 1];
        for (std::size_t j = 0; j < n; ++j) grid[i + 1][j + 1] = cells[i][j].to_string(true);
    }
    std::vector<std::size_t> width(n + 1, 0);
    for (const auto& row : grid)
        for (std::size_t j = 0; j <= n; ++j) width[j] = std::max(width[j], row[j].size());
    std::string out;
    for (std::size_t r = 0; r <= n; ++r) {
        std::string line;
        for (std::size_t j = 0; j <= n; ++j) {
            line += grid[r][j];
            if (j < n) line += std::string(width[j] - grid[r][j].size() + 2, ' ');
        }
        out += line + "\n";
    }
    return out;
}

std::string viz_hns(const AlgebraDef& def) { return viz_hns(def, def.basis); }

std::string list_form(const AlgebraDef& def) {
    std::string s = "[";
    for (std::size_t i = 0; i < def.gamma.size(); ++i) {
        if (i) s += ", ";
        s += "[";
        for (std::size_t j = 0; j < def.gamma[i].size(); ++j) {
            if (j) s += ", ";
            s += HNumber(def.gamma[i][j]).to_string();
        }
        s += "]";
    }
    return s + "]";
}

// ---------------------------------------------------------------------------
// File format

std::string to_file_text(const AlgebraDef& def) {
    json gamma = json::array();
    for (const auto& row : def.gamma) {
        json r = json::array();
        for (const auto& cell : row) {
            json c = json::array();
            for (const auto& s : cell) c.push_back(s.to_string());
            r.push_back(std::move(c));
        }
        gamma.push_back(std::move(r));
    }
    json doc = {
        {"name", def.name},       {"dim", def.dim},   {"params", def.params},
        {"comment", def.comment}, {"kind", def.kind}, {"basis", def.basis},
        {"gamma", std::move(gamma)},
    };
    return doc.dump(1) + "\n";
}

AlgebraDef from_file_text(std::string_view text) {
    try {
        const json doc = json::parse(text);
        AlgebraDef def;
        def.name = doc.at("name").get<std::string>();
        def.dim = doc.at("dim").get<std::size_t>();
        def.params = doc.value("params", std::vector<std::string>{});
        def.comment = doc.value("comment", std::string{});
        def.kind = doc.value("kind", std::string{});
        def.basis = doc.value("basis", std::string("e"));
        for (const auto& r : doc.at("gamma")) {
            std::vector<Cell> row;
            for (const auto& c : r) {
                Cell cell;
                for (const auto& s : c) cell.push_back(parse_scalar(s.get<std::string>()));
                row.push_back(std::move(cell));
            }
            def.gamma.push_back(std::move(row));
        }
        def.require_shape();
        return def;
    } catch (const json::exception& e) {
        throw Error(Errc::CorruptFile, std::string("malformed algebra document: ") + e.what());
    } catch (const Error& e) {
        throw Error(Errc::CorruptFile, std::string("invalid algebra document: ") + e.what());
    }
}

void save_algebra(const AlgebraDef& def, const std::filesystem::path& path) {
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(Errc::IoError, "cannot write '" + tmp + "'");
        out << to_file_text(def);
        if (!out) throw Error(Errc::IoError, "write failed for '" + tmp + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw Error(Errc::IoError, "cannot move '" + tmp + "' to '" + path.string() + "': " + ec.message());
}

AlgebraDef load_algebra(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::IoError, "cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_file_text(ss.str());
}

}  // namespace hcns
