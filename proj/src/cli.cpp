#include "hcns/cli.hpp"

#include "hcns/ops.hpp"
#include "hcns/registry.hpp"
#include "hcns/rotation.hpp"
#include "hcns/transforms.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <sstream>

namespace hcns::cli {

namespace {

enum class OutputMode { Natural, List, Both };

struct Config {
    std::string lib;
    OutputMode output = OutputMode::Both;
    int precision = 12;
};

int exit_code_for(Errc code) {
    switch (code) {
    case Errc::NotFound: return NotFound;
    case Errc::ParseError: return Parse;
    case Errc::IoError:
    case Errc::CorruptFile: return Io;
    default: return Math;
    }
}

std::filesystem::path storage_path(const Config& cfg) {
    if (!cfg.lib.empty()) return cfg.lib;
    return default_storage_path();
}

Registry open_registry(const Config& cfg, std::ostream& err) {
    Registry reg(storage_path(cfg));
    for (const auto& w : reg.warnings()) err << "warning: " << w << "\n";
    return reg;
}

std::string fmt(double x, int digits) {
    std::ostringstream s;
    s << std::setprecision(digits) << x;
    return s.str();
}

std::string fmt(const Vec3& v, int digits) {
    return "(" + fmt(v[0], digits) + ", " + fmt(v[1], digits) + ", " + fmt(v[2], digits) + ")";
}

void print_number(std::ostream& out, const HNumber& x, std::string_view basis, const Config& cfg) {
    const std::string list = x.to_string(cfg.precision);
    const std::string natural = viz_in_a(x, basis).to_string(false, cfg.precision);
    switch (cfg.output) {
    case OutputMode::List: out << list << "\n"; break;
    case OutputMode::Natural: out << natural << "\n"; break;
    case OutputMode::Both: out << "list:    " << list << "\n" << "natural: " << natural << "\n"; break;
    }
}

void print_algebra(std::ostream& out, const AlgebraDef& def, const Config& cfg) {
    out << def.name << "  dim " << def.dim;
    if (!def.params.empty()) {
        out << "  params";
        for (const auto& p : def.params) out << " " << p;
    }
    if (!def.kind.empty()) out << "  [" << def.kind << "]";
    out << "\n";
    if (!def.comment.empty()) out << def.comment << "\n";
    if (cfg.output != OutputMode::List) out << viz_hns(def);
    if (cfg.output != OutputMode::Natural) out << list_form(def) << "\n";
}

// Numbers, `pi`, `+ - * / ^` and a trailing `deg` for degrees.
double parse_angle(std::string text) {
    double factor = 1.0;
    const auto last = text.find_last_not_of(" \t");
    if (last != std::string::npos && last >= 2 && text.compare(last - 2, 3, "deg") == 0) {
        text.erase(last - 2);
        factor = std::numbers::pi / 180.0;
    }
    const Expr e = parse_expression(text);
    auto eval = [](auto&& self, const Expr& x) -> double {
        switch (x.op) {
        case Expr::Op::Integer:
        case Expr::Op::Decimal: return std::stod(x.text);
        case Expr::Op::Ident:
            if (x.text == "pi") return std::numbers::pi;
            throw ParseError("unknown name '" + x.text + "' in angle", x.pos);
        case Expr::Op::Call: throw ParseError("function calls are not allowed in angles", x.pos);
        case Expr::Op::Neg: return -self(self, x.args[0]);
        case Expr::Op::Add: return self(self, x.args[0]) + self(self, x.args[1]);
        case Expr::Op::Sub: return self(self, x.args[0]) - self(self, x.args[1]);
        case Expr::Op::Mul: return self(self, x.args[0]) * self(self, x.args[1]);
        case Expr::Op::Div: return self(self, x.args[0]) / self(self, x.args[1]);
        case Expr::Op::Pow: return std::pow(self(self, x.args[0]), static_cast<double>(x.exponent));
        }
        return 0.0;
    };
    return factor * eval(eval, e);
}

Vec3 parse_vec3(const std::string& text) {
    Vec3 v{};
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
        const auto comma = text.find(',', start);
        if ((i < 2) != (comma != std::string::npos))
            throw ParseError("expected three comma-separated numbers, got '" + text + "'", start);
        const std::string part = text.substr(start, i < 2 ? comma - start : std::string::npos);
        std::size_t used = 0;
        try {
            v[i] = std::stod(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || part.find_first_not_of(" \t", used) != std::string::npos)
            throw ParseError("'" + part + "' is not a number", start);
        start = comma + 1;
    }
    return v;
}

// A bare zero scalar stands for the zero number.
HNumber require_number(const CalcValue& v, std::string_view what, std::size_t dim) {
    if (!v.is_number && v.scalar.is_zero()) return list_hns(dim);
    if (!v.is_number) throw Error(Errc::InvalidArgument, std::string(what) + " must be a hypercomplex number");
    return v.number;
}

HNumber as_float(const HNumber& x) { return x.is_float() ? x : HNumber::from_doubles(x.to_doubles()); }

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::IoError, "cannot read " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what(), 0);
    }
    if (!j.is_array()) throw ParseError(path + ": expected an array of rows", 0);
    Matrix m;
    for (const auto& row : j) {
        if (!row.is_array()) throw ParseError(path + ": expected an array of rows", 0);
        std::vector<Scalar> r;
        for (const auto& cell : row) {
            if (cell.is_string())
                r.push_back(parse_scalar(cell.get<std::string>()));
            else if (cell.is_number_integer())
                r.push_back(parse_scalar(cell.dump()));
            else
                throw ParseError(path + ": matrix entries must be integers or strings", 0);
        }
        m.push_back(std::move(r));
    }
    return m;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::IoError, "cannot write " + path);
    out << text;
    out.close();
    if (!out) throw Error(Errc::IoError, "cannot write " + path);
}

const char* kDemoNote =
    "note: the second rotation axis of this scenario is not fixed by its usual statement;\n"
    "      the defaults rotate about (0,1,0) first and (1,0,0) second.\n"
    "      The value 3e2 + (sqrt(3)+0.5)e3 + (sqrt(3)-0.5)e4 often quoted for it has\n"
    "      squared length 15.5, while |r|^2 = 14, so it cannot be a rotation of r.\n";

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"hcns: arithmetic in hypercomplex number systems"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string output_mode = "both";
    app.add_option("--lib", cfg.lib, "Directory of stored systems (overrides HCNS_LIB)");
    app.add_option("--output", output_mode, "Result format")->check(CLI::IsMember({"natural", "list", "both"}));
    app.add_option("--precision", cfg.precision, "Significant digits for Float output")->check(CLI::Range(1, 17));

    auto* list = app.add_subcommand("list", "List the stored systems");
    bool full = false;
    list->add_flag("--full", full, "Also print every Cayley table");

    auto* show = app.add_subcommand("show", "Print the Cayley table of a system");
    std::string name;
    show->add_option("name", name)->required();

    auto* eval = app.add_subcommand("eval", "Evaluate an expression in a system");
    std::string expr;
    std::string basis;
    eval->add_option("name", name)->required();
    eval->add_option("expr", expr)->required();
    eval->add_option("--basis", basis, "Basis name for the result");

    auto* rad2_cmd = app.add_subcommand("rad2", "Square roots of a number");
    rad2_cmd->add_option("name", name)->required();
    rad2_cmd->add_option("expr", expr)->required();
    rad2_cmd->add_option("--basis", basis, "Basis name for the result");

    auto* sqeq = app.add_subcommand("sqrteq", "Roots of A*X*X + B*X + C = 0");
    std::string ea, eb, ec;
    sqeq->add_option("name", name)->required();
    sqeq->add_option("A", ea)->required();
    sqeq->add_option("B", eb)->required();
    sqeq->add_option("C", ec)->required();
    sqeq->add_option("--basis", basis, "Basis name for the result");

    auto* rotate_cmd = app.add_subcommand("rotate", "Rotate a point by one or two axis-angle rotations");
    std::string point = "1,2,3", axis1 = "0,1,0", angle1 = "pi/3", axis2, angle2;
    rotate_cmd->add_option("--point", point, "x,y,z");
    rotate_cmd->add_option("--axis1", axis1, "First rotation axis x,y,z");
    rotate_cmd->add_option("--angle1", angle1, "First angle (radians; `pi` allowed; suffix deg for degrees)");
    rotate_cmd->add_option("--axis2", axis2, "Second rotation axis x,y,z");
    rotate_cmd->add_option("--angle2", angle2, "Second angle");

    auto* dirsum = app.add_subcommand("dirsum", "Direct sum of systems, stored under OUT");
    std::vector<std::string> names;
    dirsum->add_option("names", names, "Systems followed by the output name")->required()->expected(2, -1);
    dirsum->add_option("--basis", basis, "Basis name of the result");

    auto* dbl = app.add_subcommand("double", "Tensor product or doubling, stored under OUT");
    std::string mode, out_name, with;
    dbl->add_option("name", name)->required();
    dbl->add_option("mode", mode)->required()->check(CLI::IsMember({"comm", "noncomm"}));
    dbl->add_option("out", out_name)->required();
    dbl->add_option("--with", with, "Second factor (defaults to the first)");
    dbl->add_option("--basis", basis, "Basis name of the result");

    auto* trans_cmd = app.add_subcommand("trans", "Swap two basis elements, stored under OUT");
    std::size_t s = 0, t = 0;
    trans_cmd->add_option("name", name)->required();
    trans_cmd->add_option("s", s)->required();
    trans_cmd->add_option("t", t)->required();
    trans_cmd->add_option("out", out_name)->required();

    auto* geniso = app.add_subcommand("geniso", "Change of basis f_r = sum_s L[r][s] e_s, stored under OUT");
    std::string matrix_file;
    geniso->add_option("name", name)->required();
    geniso->add_option("matrix", matrix_file, "JSON array of rows; entries integers or strings")->required();
    geniso->add_option("out", out_name)->required();
    geniso->add_option("--basis", basis, "Basis name of the result");

    auto* isosys = app.add_subcommand("isosys", "Export the isomorphism equations between two systems");
    std::string other, out_file;
    isosys->add_option("name", name)->required();
    isosys->add_option("other", other)->required();
    isosys->add_option("file", out_file)->required();

    auto* add_cmd = app.add_subcommand("add", "Store a system from an algebra file");
    std::string in_file;
    add_cmd->add_option("file", in_file)->required();
    add_cmd->add_option("--name", out_name, "Name to store it under");

    auto* remove_cmd = app.add_subcommand("remove", "Delete a stored user system");
    remove_cmd->add_option("name", name)->required();

    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--lib" || a == "--output" || a == "--precision") {
            ++i;
            continue;
        }
        if (a.rfind("-", 0) == 0) continue;
        bool known = false;
        for (const auto* sub : app.get_subcommands({}))
            if (sub->get_name() == a) known = true;
        if (!known) {
            err << "error: unknown command '" << a << "'\nRun with --help for more information.\n";
            return Usage;
        }
        break;
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : Usage;
    }
    cfg.output = output_mode == "natural" ? OutputMode::Natural
                 : output_mode == "list"  ? OutputMode::List
                                          : OutputMode::Both;

    try {
        Registry reg = open_registry(cfg, err);

        if (list->parsed()) {
            if (full) {
                out << viz_lib_hns(reg);
                return Ok;
            }
            for (const auto& [n, def] : reg.entries()) {
                out << std::left << std::setw(12) << n << " dim " << std::setw(3) << def.dim;
                out << (reg.is_builtin(n) ? " built-in " : " user     ");
                if (!def.params.empty()) {
                    out << " params";
                    for (const auto& p : def.params) out << " " << p;
                }
                if (!def.comment.empty()) out << "  " << def.comment;
                out << "\n";
            }
            return Ok;
        }
        if (show->parsed()) {
            print_algebra(out, reg.search(name), cfg);
            return Ok;
        }
        if (eval->parsed()) {
            const AlgebraDef& alg = reg.search(name);
            std::string seen;
            const CalcValue v = evaluate_in(alg, expr, &seen);
            if (!v.is_number) {
                out << v.scalar.to_string(cfg.precision) << "\n";
                return Ok;
            }
            print_number(out, v.number, !basis.empty() ? basis : !seen.empty() ? seen : alg.basis, cfg);
            return Ok;
        }
        if (rad2_cmd->parsed() || sqeq->parsed()) {
            const AlgebraDef& alg = reg.search(name);
            std::string seen;
            std::vector<HNumber> roots;
            if (rad2_cmd->parsed()) {
                roots = rad2(require_number(evaluate_in(alg, expr, &seen), "the radicand", alg.dim), alg);
            } else {
                const HNumber a = as_float(require_number(evaluate_in(alg, ea, &seen), "A", alg.dim));
                const HNumber b = as_float(require_number(evaluate_in(alg, eb), "B", alg.dim));
                const HNumber c = as_float(require_number(evaluate_in(alg, ec), "C", alg.dim));
                roots = sqrt_eq(a, b, c, alg);
            }
            out << roots.size() << (roots.size() == 1 ? " root\n" : " roots\n");
            for (const auto& r : roots)
                print_number(out, r, !basis.empty() ? basis : !seen.empty() ? seen : alg.basis, cfg);
            return Ok;
        }
        if (rotate_cmd->parsed()) {
            const int d = cfg.precision;
            const Vec3 r = parse_vec3(point);
            RotationSpec first{parse_vec3(axis1), parse_angle(angle1)};
            const bool defaults = rotate_cmd->count("--axis1") == 0 && rotate_cmd->count("--angle1") == 0 &&
                                  rotate_cmd->count("--axis2") == 0 && rotate_cmd->count("--angle2") == 0 &&
                                  rotate_cmd->count("--point") == 0;
            std::optional<RotationSpec> second;
            if (defaults) second = RotationSpec{{1.0, 0.0, 0.0}, std::numbers::pi / 2};
            if (!axis2.empty() || !angle2.empty()) {
                if (axis2.empty() || angle2.empty())
                    throw Error(Errc::InvalidArgument, "--axis2 and --angle2 must be given together");
                second = RotationSpec{parse_vec3(axis2), parse_angle(angle2)};
            }
            const HNumber q = quat_from_rotation(first);
            out << "q  = " << q.to_string(d) << "\n";
            Vec3 via_quat;
            Mat3 m = rotation_matrix_oracle(first);
            if (second) {
                const HNumber p = quat_from_rotation(*second);
                out << "p  = " << p.to_string(d) << "\n";
                via_quat = rotate2(r, q, p);
                m = compose(rotation_matrix_oracle(*second), m);
            } else {
                via_quat = rotate(r, q);
            }
            const Vec3 via_matrix = hcns::apply(m, r);
            double dev = 0.0;
            for (int i = 0; i < 3; ++i) dev = std::max(dev, std::fabs(via_quat[i] - via_matrix[i]));
            out << "r  = " << fmt(r, d) << "\n";
            out << "r' = " << fmt(via_quat, d) << "  (quaternion product)\n";
            out << "r' = " << fmt(via_matrix, d) << "  (rotation matrix)\n";
            out << "max deviation " << fmt(dev, 3) << "\n";
            out << "|r| = " << fmt(norm(r), d) << ", |r'| = " << fmt(norm(via_quat), d) << "\n";
            if (defaults) out << kDemoNote;
            return Ok;
        }
        if (dirsum->parsed()) {
            const std::string out_n = names.back();
            std::vector<AlgebraDef> parts;
            for (std::size_t i = 0; i + 1 < names.size(); ++i) parts.push_back(reg.search(names[i]));
            AlgebraDef def = dir_sum_n(parts, basis.empty() ? parts.front().basis : basis, out_n);
            reg.add(out_n, def);
            print_algebra(out, reg.search(out_n), cfg);
            return Ok;
        }
        if (dbl->parsed()) {
            const AlgebraDef a = reg.search(name);
            const AlgebraDef b = reg.search(with.empty() ? name : with);
            AlgebraDef def = multi_dim(a, b, basis.empty() ? a.basis : basis,
                                       mode == "comm" ? DimMode::Commutative : DimMode::NonCommutative, out_name);
            reg.add(out_name, def);
            print_algebra(out, reg.search(out_name), cfg);
            return Ok;
        }
        if (trans_cmd->parsed()) {
            AlgebraDef def = trans(reg.search(name), s, t);
            def.comment = name + " with e" + std::to_string(s) + " and e" + std::to_string(t) + " swapped";
            reg.add(out_name, def);
            print_algebra(out, reg.search(out_name), cfg);
            return Ok;
        }
        if (geniso->parsed()) {
            const AlgebraDef& alg = reg.search(name);
            const BasisTransform l(read_matrix_file(matrix_file));
            AlgebraDef def = gen_iso(l, alg, basis.empty() ? alg.basis : basis, out_name);
            def.comment = name + " in a new basis";
            reg.add(out_name, def);
            print_algebra(out, reg.search(out_name), cfg);
            return Ok;
        }
        if (isosys->parsed()) {
            const IsoSystem sys = sys_izo(reg.search(name), reg.search(other));
            write_text_file(out_file, export_iso_system(sys));
            out << sys.equations.size() << " equations in " << sys.unknowns.size() << " unknowns written to "
                << out_file << "\n";
            if (!sys.nondegeneracy) out << "nondegeneracy condition omitted for dimension above 8\n";
            return Ok;
        }
        if (add_cmd->parsed()) {
            AlgebraDef def = load_algebra(in_file);
            const std::string n = out_name.empty() ? def.name : out_name;
            reg.add(n, def);
            for (const auto& f : validate(reg.search(n)))
                if (f.severity == Finding::Severity::Info) out << "note: " << f.message << "\n";
            out << "stored " << n << " in " << reg.storage_path()->string() << "\n";
            return Ok;
        }
        if (remove_cmd->parsed()) {
            reg.remove(name);
            out << "removed " << name << "\n";
            return Ok;
        }
    } catch (const Error& e) {
        err << "error [" << e.name() << "]: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return Math;
    }
    return Usage;
}

}  // namespace hcns::cli
