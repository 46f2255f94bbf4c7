#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "hcns/cli.hpp"
#include "hcns/registry.hpp"
#include "hcns/transforms.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hcns;
using namespace hcns::test;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

struct Cli {
    fs::path lib;

    explicit Cli(const std::string& tag) : lib(fs::temp_directory_path() / ("hcns_cli_" + tag)) {
        fs::remove_all(lib);
    }
    ~Cli() { fs::remove_all(lib); }

    Result operator()(std::vector<std::string> args) const {
        args.insert(args.begin(), {"--lib", lib.string()});
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return {code, out.str(), err.str()};
    }
};

AlgebraDef alg(const std::string& name) { return in_convert_hns(golden_tables().at(name), name); }

bool has(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

// Components of the first printed list.
std::vector<Scalar> list_line(const std::string& out) {
    const auto start = out.find('[');
    const auto end = out.find(']', start);
    std::vector<Scalar> v;
    std::stringstream parts(out.substr(start + 1, end - start - 1));
    std::string item;
    while (std::getline(parts, item, ',')) v.push_back(parse_scalar(item));
    return v;
}

std::vector<Scalar> symbols(const std::string& stem, std::size_t n) {
    std::vector<Scalar> v;
    for (std::size_t i = 1; i <= n; ++i) v.push_back(Scalar::symbol(stem + "_" + std::to_string(i)));
    return v;
}

}  // namespace

TEST_CASE("usage errors exit with 1") {
    const Cli cli("usage");
    CHECK(cli({}).code == cli::Usage);
    const Result unknown = cli({"frob"});
    CHECK(unknown.code == cli::Usage);
    CHECK(has(unknown.err, "unknown command 'frob'"));
    CHECK(cli({"--precision", "30", "list"}).code == cli::Usage);
    CHECK(cli({"--output", "fancy", "list"}).code == cli::Usage);
    CHECK(cli({"show"}).code == cli::Usage);
    CHECK(cli({"--help"}).code == cli::Ok);
}

TEST_CASE("list and show") {
    const Cli cli("show");
    const Result list = cli({"list"});
    CHECK(list.code == cli::Ok);
    for (const char* name : {"R", "C", "H", "Hab", "Q4N", "T", "RplusC"}) CHECK_MESSAGE(has(list.out, name), name);
    const Result show = cli({"show", "Q4N"});
    CHECK(show.code == cli::Ok);
    CHECK(has(show.out, "p*E1+q*E2"));
    CHECK(has(show.out, "-p^2*E1-p*q*E2-p*q*E3-q^2*E4"));
    const Result missing = cli({"show", "Q4"});
    CHECK(missing.code == cli::NotFound);
    CHECK(has(missing.err, "'Q4N'"));
}

TEST_CASE("eval matches independent computations") {
    const Cli cli("eval");
    const Result t = cli({"--output", "list", "eval", "T", "(a_1*e1+a_2*e2+a_3*e3)*(b_1*e1+b_2*e2+b_3*e3)"});
    REQUIRE(t.code == cli::Ok);
    CHECK_FALSE(has(t.out, "natural:"));
    CHECK(list_line(t.out) == brute_force_product(symbols("a", 3), symbols("b", 3), golden_tables().at("T")));

    const Result norm = cli({"eval", "H", "norm(a_1*e1+a_2*e2+a_3*e3+a_4*e4)"});
    REQUIRE(norm.code == cli::Ok);
    CHECK(parse_scalar(norm.out) == parse_scalar("a_1^2 + a_2^2 + a_3^2 + a_4^2"));

    const Result unit = cli({"--output", "natural", "eval", "H", "unit()"});
    CHECK(unit.out == "e1\n");
    const Result both = cli({"eval", "C", "e2*e2"});
    CHECK(has(both.out, "list:"));
    CHECK(has(both.out, "natural: -e1"));
}

TEST_CASE("error exit codes") {
    const Cli cli("errors");
    const Result parse = cli({"eval", "C", "e1 +"});
    CHECK(parse.code == cli::Parse);
    CHECK(has(parse.err, "[ParseError]"));
    CHECK(cli({"eval", "C", "e1/(e1-e1)"}).code == cli::Math);
    CHECK(cli({"eval", "Nope", "e1"}).code == cli::NotFound);
    CHECK(cli({"isosys", "C", "H", (cli.lib / "x.txt").string()}).code == cli::Math);
    CHECK(cli({"rotate", "--axis1", "0,0,0", "--angle1", "1"}).code == cli::Math);
    CHECK(cli({"add", "/nonexistent/file.hns"}).code == cli::Io);
    CHECK(cli({"remove", "H"}).code == cli::Math);
    CHECK(cli({"remove", "Nope"}).code == cli::NotFound);
}

TEST_CASE("transform commands persist their results") {
    const Cli cli("transforms");
    REQUIRE(cli({"dirsum", "R", "C", "RC2"}).code == cli::Ok);
    REQUIRE(cli({"double", "W", "noncomm", "Q4N2"}).code == cli::Ok);
    REQUIRE(cli({"trans", "H", "2", "3", "H23"}).code == cli::Ok);
    REQUIRE(cli({"trans", "H23", "2", "3", "H32"}).code == cli::Ok);
    std::ofstream(cli.lib / "m.json") << "[[1, 0], [1, 1]]";
    REQUIRE(cli({"geniso", "C", (cli.lib / "m.json").string(), "Cf", "--basis", "f"}).code == cli::Ok);

    const Registry reg(cli.lib);
    CHECK(reg.search("RC2").gamma == alg("RplusC").gamma);
    CHECK(reg.search("Q4N2").gamma == alg("Q4N").gamma);
    CHECK(reg.search("H32").gamma == alg("H").gamma);
    CHECK(reg.search("H23").gamma != alg("H").gamma);
    Matrix l(2, std::vector<Scalar>(2));
    l[0][0] = l[1][0] = l[1][1] = Scalar(1L);
    CHECK(reg.search("Cf").gamma == gen_iso(BasisTransform(l), alg("C"), "f").gamma);
    CHECK(reg.search("Cf").basis == "f");

    const Result show = cli({"show", "RC2"});
    CHECK(has(show.out, "e3"));
    CHECK(cli({"dirsum", "R", "C", "RC2"}).code == cli::Math);
    CHECK(cli({"double", "C", "sideways", "X"}).code == cli::Usage);
}

TEST_CASE("isosys writes a parseable system") {
    const Cli cli("isosys");
    fs::create_directories(cli.lib);
    const fs::path file = cli.lib / "hh.txt";
    const Result r = cli({"isosys", "H", "H", file.string()});
    REQUIRE(r.code == cli::Ok);
    CHECK(has(r.out, "64 equations"));
    std::ifstream in(file);
    std::stringstream text;
    text << in.rdbuf();
    const IsoSystem sys = parse_iso_system(text.str());
    CHECK(sys.equations.size() == 64);
    CHECK(failing_equations(sys, identity_matrix(4)).empty());
}

TEST_CASE("add and remove") {
    const Cli cli("add");
    fs::create_directories(cli.lib);
    const fs::path file = cli.lib / "incoming.json";
    save_algebra(alg("Dual"), file);
    CHECK(cli({"add", file.string(), "--name", "Eps"}).code == cli::Ok);
    CHECK(cli({"show", "Eps"}).code == cli::Ok);
    CHECK(cli({"add", file.string(), "--name", "Eps"}).code == cli::Math);
    std::ofstream(cli.lib / "junk.json") << "{";
    CHECK(cli({"add", (cli.lib / "junk.json").string()}).code == cli::Io);
    CHECK(cli({"remove", "Eps"}).code == cli::Ok);
    CHECK(cli({"remove", "Eps"}).code == cli::NotFound);
}

TEST_CASE("roots") {
    const Cli cli("roots");
    const Result r = cli({"rad2", "C", "-1.0*e1"});
    CHECK(r.code == cli::Ok);
    CHECK(has(r.out, "2 roots"));
    const Result exact = cli({"--output", "natural", "rad2", "C", "3*e1 + 4*e2"});
    CHECK(has(exact.out, "2*e1 + e2"));
    const Result q = cli({"sqrteq", "C", "e1", "0", "e1"});
    CHECK(q.code == cli::Ok);
    CHECK(has(q.out, "2 roots"));
}

TEST_CASE("rotate") {
    const Cli cli("rotate");
    const Result demo = cli({"rotate"});
    REQUIRE(demo.code == cli::Ok);
    CHECK(has(demo.out, "3.09807621135"));
    CHECK(has(demo.out, "-0.633974596216"));
    CHECK(has(demo.out, "15.5"));
    const Result z = cli({"--precision", "6", "rotate", "--point", "1,0,0", "--axis1", "0,0,1", "--angle1", "90deg"});
    REQUIRE(z.code == cli::Ok);
    CHECK(has(z.out, "r' = ("));
    CHECK(has(z.out, ", 1, 0)"));
    const Result none = cli({"rotate", "--point", "1,2,3", "--axis1", "0,1,0", "--angle1", "0"});
    CHECK(has(none.out, "r' = (1, 2, 3)"));
    CHECK(cli({"rotate", "--angle1", "pie"}).code == cli::Parse);
}
