#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "hcns/registry.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace hcns;
using namespace hcns::test;
namespace fs = std::filesystem;

namespace {

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

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) : path(fs::temp_directory_path() / ("hcns_registry_" + tag)) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("built-ins match the transcribed tables") {
    const auto& builtins = builtin_algebras();
    CHECK(builtins.size() >= 10);
    std::vector<std::string> names;
    for (const auto& def : builtins) names.push_back(def.name);
    CHECK(names == std::vector<std::string>{"R", "C", "D", "Dual", "W", "H", "Hab", "Q4N", "T", "RplusC"});
    for (const auto& def : builtins) {
        CHECK_MESSAGE(def.gamma == alg(def.name).gamma, def.name);
        CHECK_FALSE(has_fatal(validate(def)));
        CHECK_FALSE(def.comment.empty());
    }
    const Registry reg;
    CHECK(reg.entries().size() == builtins.size());
    CHECK_FALSE(reg.storage_path().has_value());
}

TEST_CASE("search and suggestions") {
    const Registry reg = lib_hns();
    CHECK(search_hns("Hab", reg).params == std::vector<std::string>{"alpha", "beta"});
    CHECK(reg.is_builtin("C"));
    try {
        reg.search("Q4");
        FAIL("found a missing system");
    } catch (const NotFoundError& e) {
        CHECK(e.code() == Errc::NotFound);
        REQUIRE_FALSE(e.suggestions().empty());
        CHECK(e.suggestions().front() == "Q4N");
    }
    CHECK(reg.suggestions("Dul").front() == "Dual");
    CHECK(reg.suggestions("Hab", 2).size() == 2);
}

TEST_CASE("adding systems in memory") {
    Registry reg;
    AlgebraDef c2 = alg("C");
    add_hns(reg, "C2", c2, "complex again", "commutative");
    CHECK(reg.contains("C2"));
    CHECK_FALSE(reg.is_builtin("C2"));
    CHECK(reg.search("C2").comment == "complex again");
    CHECK(reg.search("C2").kind == "commutative");
    CHECK(error_of([&] { reg.add("C2", c2); }) == Errc::DuplicateName);
    CHECK(error_of([&] { reg.add("H", c2); }) == Errc::DuplicateName);
    CHECK(error_of([&] { reg.add("2bad", c2); }) == Errc::ValidationFailed);
    AlgebraDef broken = alg("W");
    broken.params = {"p"};
    CHECK(error_of([&] { reg.add("Wbroken", broken); }) == Errc::ValidationFailed);
    CHECK_FALSE(reg.contains("Wbroken"));
}

TEST_CASE("persistence on disk") {
    TempDir dir("persist");
    {
        Registry reg = lib_hns(dir.path);
        AlgebraDef w = alg("W");
        reg.add("Wuser", w, "user copy");
        CHECK(fs::exists(dir.path / "Wuser.hns"));
    }
    {
        Registry reg(dir.path);
        REQUIRE(reg.contains("Wuser"));
        CHECK(reg.search("Wuser").gamma == alg("W").gamma);
        CHECK(reg.search("Wuser").comment == "user copy");
        CHECK(reg.warnings().empty());
        refill_hns(reg, "Wuser");
        CHECK_FALSE(reg.contains("Wuser"));
        CHECK_FALSE(fs::exists(dir.path / "Wuser.hns"));
        CHECK(error_of([&] { reg.remove("Wuser"); }) == Errc::NotFound);
        CHECK(error_of([&] { reg.remove("H"); }) == Errc::BuiltinProtected);
    }
    CHECK_FALSE(Registry(dir.path).contains("Wuser"));
}

TEST_CASE("storage directory is created on first add") {
    TempDir dir("create");
    const fs::path nested = dir.path / "a" / "b";
    Registry reg(nested);
    reg.add("Cn", alg("C"));
    CHECK(fs::exists(nested / "Cn.hns"));
}

TEST_CASE("corrupt and clashing files become warnings") {
    TempDir dir("corrupt");
    std::ofstream(dir.path / "Bad.hns") << "{ not json";
    std::ofstream(dir.path / "notes.txt") << "ignored";
    {
        AlgebraDef shadow = alg("C");
        shadow.name = "H";
        save_algebra(shadow, dir.path / "H.hns");
    }
    AlgebraDef d2 = alg("D");
    d2.name = "D2";
    save_algebra(d2, dir.path / "D2.hns");
    const Registry reg(dir.path);
    CHECK(reg.warnings().size() == 2);
    CHECK_FALSE(reg.contains("Bad"));
    CHECK(reg.search("H").gamma == alg("H").gamma);
    CHECK(reg.contains("D2"));
}

TEST_CASE("viz_lib_hns lists both sections") {
    const Registry reg;
    const std::string text = viz_lib_hns(reg);
    CHECK(text.find("Built-in systems") != std::string::npos);
    CHECK(text.find("User systems") != std::string::npos);
    CHECK(text.find("(none)") != std::string::npos);
    CHECK(text.find("Q4N") != std::string::npos);
    CHECK(text.find("p*E1+q*E2") != std::string::npos);

    Registry user;
    user.add("Mine", alg("Dual"), "my dual numbers");
    const std::string with_user = viz_lib_hns(user);
    CHECK(with_user.find("(none)") == std::string::npos);
    CHECK(with_user.find("my dual numbers") > with_user.find("User systems"));
}

TEST_CASE("default storage path") {
    const char* old_lib = std::getenv("HCNS_LIB");
    const std::string saved = old_lib ? old_lib : "";
    setenv("HCNS_LIB", "/tmp/hcns-lib-test", 1);
    CHECK(default_storage_path() == fs::path("/tmp/hcns-lib-test"));
    unsetenv("HCNS_LIB");
    setenv("XDG_DATA_HOME", "/tmp/xdg-test", 1);
    CHECK(default_storage_path() == fs::path("/tmp/xdg-test/hcns"));
    unsetenv("XDG_DATA_HOME");
    setenv("HOME", "/tmp/home-test", 1);
    CHECK(default_storage_path() == fs::path("/tmp/home-test/.local/share/hcns"));
    if (old_lib) setenv("HCNS_LIB", saved.c_str(), 1);
}
