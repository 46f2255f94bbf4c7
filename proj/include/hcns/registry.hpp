#pragma once

/**
 * Named collection of hypercomplex number systems.
 *
 * A registry always contains the built-in systems. User systems live in a
 * storage directory, one `<name>.hns` file each, and are loaded on startup.
 */

#include "hcns/algebra.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hcns {

/// Built-in systems in registration order: R, C, D, Dual, W, H, Hab, Q4N, T, RplusC.
const std::vector<AlgebraDef>& builtin_algebras();

/// $HCNS_LIB if set, else ${XDG_DATA_HOME:-$HOME/.local/share}/hcns.
std::filesystem::path default_storage_path();

class Registry {
public:
    /// Built-ins only, nothing persisted.
    Registry();
    /// Built-ins plus every readable `.hns` file under `storage`. Unreadable or
    /// invalid files are skipped and reported through warnings().
    explicit Registry(std::filesystem::path storage);

    const std::map<std::string, AlgebraDef>& entries() const noexcept { return entries_; }
    const std::optional<std::filesystem::path>& storage_path() const noexcept { return storage_; }
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

    bool contains(std::string_view name) const;
    bool is_builtin(std::string_view name) const;

    /// Throws NotFoundError with the closest names as suggestions.
    const AlgebraDef& search(std::string_view name) const;

    /// Stores `def` under `name`; throws DuplicateName or ValidationFailed.
    /// Empty comment/kind keep the ones already on `def`.
    void add(std::string_view name, AlgebraDef def, std::string_view comment = {},
             std::string_view kind = {});

    /// Removes a user system and its file; throws NotFound or BuiltinProtected.
    void remove(std::string_view name);

    /// Names sorted by edit distance to `name` (at most `limit`).
    std::vector<std::string> suggestions(std::string_view name, std::size_t limit = 3) const;

private:
    std::filesystem::path file_for(std::string_view name) const;

    std::map<std::string, AlgebraDef> entries_;
    std::optional<std::filesystem::path> storage_;
    std::vector<std::string> warnings_;
};

Registry lib_hns();
Registry lib_hns(const std::filesystem::path& storage);
const AlgebraDef& search_hns(std::string_view name, const Registry& reg);
Registry& add_hns(Registry& reg, std::string_view name, AlgebraDef table, std::string_view comment,
                  std::string_view kind);
Registry& refill_hns(Registry& reg, std::string_view name);

/// Every entry (name ascending) with dim, params, comment and Cayley table,
/// split into built-in and user sections.
std::string viz_lib_hns(const Registry& reg);

}  // namespace hcns
