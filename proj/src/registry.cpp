#include "hcns/registry.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <system_error>

namespace hcns {

namespace {

AlgebraDef from_table(std::string_view name, const std::vector<std::vector<std::string>>& table,
                      std::string comment, std::string kind) {
    AlgebraDef def = in_convert_hns(table, name);
    def.comment = std::move(comment);
    def.kind = std::move(kind);
    return def;
}

std::vector<AlgebraDef> make_builtins() {
    std::vector<AlgebraDef> out;
    out.push_back(from_table("R", {{"e1"}}, "real numbers", "commutative"));
    out.push_back(from_table("C", {{"e1", "e2"}, {"e2", "-e1"}}, "complex numbers, e2^2 = -e1", "commutative"));
    out.push_back(from_table("D", {{"e1", "e2"}, {"e2", "e1"}}, "double numbers, e2^2 = e1", "commutative"));
    out.push_back(from_table("Dual", {{"e1", "e2"}, {"e2", "0"}}, "dual numbers, e2^2 = 0", "commutative"));
    out.push_back(from_table("W", {{"e1", "e2"}, {"e2", "p*e1 + q*e2"}},
                             "generalized complex numbers, e2^2 = p*e1 + q*e2", "commutative"));
    out.push_back(from_table("H",
                             {{"e1", "e2", "e3", "e4"},
                              {"e2", "-e1", "e4", "-e3"},
                              {"e3", "-e4", "-e1", "e2"},
                              {"e4", "e3", "-e2", "-e1"}},
                             "quaternions", "noncommutative"));
    out.push_back(from_table("Hab",
                             {{"e1", "e2", "e3", "e4"},
                              {"e2", "-alpha*e1", "e4", "-alpha*e3"},
                              {"e3", "-e4", "-beta*e1", "beta*e2"},
                              {"e4", "alpha*e3", "-beta*e2", "-alpha*beta*e1"}},
                             "generalized quaternions", "noncommutative"));
    out.push_back(from_table("Q4N",
                             {{"E1", "E2", "E3", "E4"},
                              {"E2", "p*E1 + q*E2", "E4", "p*E3 + q*E4"},
                              {"E3", "-E4", "p*E1 + q*E3", "-p*E2 - q*E4"},
                              {"E4", "-p*E3 - q*E4", "p*E2 + q*E4", "-p^2*E1 - p*q*E2 - p*q*E3 - q^2*E4"}},
                             "noncommutative doubling of the generalized complex numbers", "noncommutative"));
    out.push_back(from_table("T",
                             {{"e1", "e2", "e3"}, {"e2", "(e3 - e1)/2", "-e2"}, {"e3", "-e2", "e1"}},
                             "triplex numbers", "commutative"));
    out.push_back(from_table("RplusC", {{"e1", "0", "0"}, {"0", "e2", "e3"}, {"0", "e3", "-e2"}},
                             "direct sum of the real and complex numbers", "commutative"));
    return out;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
    std::vector<std::size_t> prev(b.size() + 1);
    std::vector<std::size_t> cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const bool same = std::tolower(static_cast<unsigned char>(a[i - 1])) ==
                              std::tolower(static_cast<unsigned char>(b[j - 1]));
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (same ? 0 : 1)});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

}  // namespace

const std::vector<AlgebraDef>& builtin_algebras() {
    static const std::vector<AlgebraDef> builtins = make_builtins();
    return builtins;
}

std::filesystem::path default_storage_path() {
    if (const char* env = std::getenv("HCNS_LIB"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_DATA_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "hcns";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".local" / "share" / "hcns";
    return std::filesystem::path(".hcns");
}

Registry::Registry() {
    for (const auto& def : builtin_algebras()) entries_.emplace(def.name, def);
}

Registry::Registry(std::filesystem::path storage) : Registry() {
    storage_ = std::move(storage);
    std::error_code ec;
    if (!std::filesystem::is_directory(*storage_, ec)) return;
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(*storage_, ec))
        if (entry.is_regular_file() && entry.path().extension() == ".hns") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
        try {
            AlgebraDef def = load_algebra(file);
            const auto findings = validate(def);
            if (has_fatal(findings)) throw Error(Errc::CorruptFile, "definition does not validate");
            if (contains(def.name)) {
                warnings_.push_back("skipping " + file.string() + ": name '" + def.name + "' already in use");
                continue;
            }
            std::string name = def.name;
            entries_.emplace(std::move(name), std::move(def));
        } catch (const Error& e) {
            warnings_.push_back("skipping " + file.string() + ": " + e.what());
        }
    }
}

bool Registry::contains(std::string_view name) const { return entries_.count(std::string(name)) > 0; }

bool Registry::is_builtin(std::string_view name) const {
    const auto& b = builtin_algebras();
    return std::any_of(b.begin(), b.end(), [&](const AlgebraDef& d) { return d.name == name; });
}

std::vector<std::string> Registry::suggestions(std::string_view name, std::size_t limit) const {
    const std::size_t threshold = std::max<std::size_t>(2, name.size() / 3);
    std::vector<std::pair<std::size_t, std::string>> scored;
    for (const auto& [n, def] : entries_) {
        const std::size_t d = edit_distance(name, n);
        if (d <= threshold) scored.emplace_back(d, n);
    }
    std::sort(scored.begin(), scored.end());
    std::vector<std::string> out;
    for (std::size_t i = 0; i < scored.size() && i < limit; ++i) out.push_back(scored[i].second);
    return out;
}

const AlgebraDef& Registry::search(std::string_view name) const {
    auto it = entries_.find(std::string(name));
    if (it == entries_.end()) throw NotFoundError(std::string(name), suggestions(name));
    return it->second;
}

std::filesystem::path Registry::file_for(std::string_view name) const {
    return *storage_ / (std::string(name) + ".hns");
}

void Registry::add(std::string_view name, AlgebraDef def, std::string_view comment, std::string_view kind) {
    if (!is_valid_symbol(name))
        throw Error(Errc::ValidationFailed, "'" + std::string(name) + "' is not a valid system name");
    if (contains(name)) throw Error(Errc::DuplicateName, "a system named '" + std::string(name) + "' already exists");
    def.name = std::string(name);
    if (!comment.empty()) def.comment = std::string(comment);
    if (!kind.empty()) def.kind = std::string(kind);
    const auto findings = validate(def);
    if (has_fatal(findings)) {
        std::string msg = "system '" + def.name + "' is invalid:";
        for (const auto& f : findings)
            if (f.severity == Finding::Severity::Fatal) msg += " " + f.message + ";";
        msg.pop_back();
        throw Error(Errc::ValidationFailed, msg);
    }
    if (storage_) {
        std::error_code ec;
        std::filesystem::create_directories(*storage_, ec);
        if (ec) throw Error(Errc::IoError, "cannot create " + storage_->string() + ": " + ec.message());
        save_algebra(def, file_for(name));
    }
    entries_.emplace(def.name, std::move(def));
}

void Registry::remove(std::string_view name) {
    if (is_builtin(name))
        throw Error(Errc::BuiltinProtected, "built-in system '" + std::string(name) + "' cannot be removed");
    auto it = entries_.find(std::string(name));
    if (it == entries_.end()) throw NotFoundError(std::string(name), suggestions(name));
    if (storage_) {
        std::error_code ec;
        std::filesystem::remove(file_for(name), ec);
        if (ec) throw Error(Errc::IoError, "cannot delete " + file_for(name).string() + ": " + ec.message());
    }
    entries_.erase(it);
}

Registry lib_hns() { return Registry(); }

Registry lib_hns(const std::filesystem::path& storage) { return Registry(storage); }

const AlgebraDef& search_hns(std::string_view name, const Registry& reg) { return reg.search(name); }

Registry& add_hns(Registry& reg, std::string_view name, AlgebraDef table, std::string_view comment,
                  std::string_view kind) {
    reg.add(name, std::move(table), comment, kind);
    return reg;
}

Registry& refill_hns(Registry& reg, std::string_view name) {
    reg.remove(name);
    return reg;
}

namespace {

std::string describe(const AlgebraDef& def) {
    std::string out = def.name + "  dim " + std::to_string(def.dim);
    if (!def.params.empty()) {
        out += "  params";
        for (const auto& p : def.params) out += " " + p;
    }
    if (!def.kind.empty()) out += "  [" + def.kind + "]";
    out += "\n";
    if (!def.comment.empty()) out += "  " + def.comment + "\n";
    out += viz_hns(def);
    return out;
}

}  // namespace

std::string viz_lib_hns(const Registry& reg) {
    std::string builtin;
    std::string user;
    for (const auto& [name, def] : reg.entries()) {
        std::string& section = reg.is_builtin(name) ? builtin : user;
        section += "\n" + describe(def);
    }
    std::string out = "Built-in systems\n" + builtin;
    out += "\nUser systems\n";
    out += user.empty() ? "(none)\n" : user;
    return out;
}

}  // namespace hcns
