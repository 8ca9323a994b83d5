#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <vector>

#include "wt/canonical.hpp"
#include "wt/sequence.hpp"

namespace wt {

/// One line of a catalog file: "<n> <canonical-form-hex> <degree-sequence>".
struct CatalogEntry {
    std::size_t n = 0;
    CanonicalForm form;
    DegreeSequence degrees{0};

    bool operator==(const CatalogEntry&) const = default;
};

CatalogEntry make_entry(const CanonicalForm& form);

void write_catalog(std::ostream& out, const std::vector<CatalogEntry>& entries);
/// Throws ParseError on malformed lines.
std::vector<CatalogEntry> read_catalog(std::istream& in);

void save_catalog(const std::filesystem::path& path, const std::vector<CatalogEntry>& entries);
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path);

/// Directory named by WT_CATALOG_DIR, if set and nonempty.
std::optional<std::filesystem::path> catalog_dir();

/// enumerate_wt_graphs(n) with the default options, reusing "wt-graphs-<n>.txt" under
/// catalog_dir() when present and writing it otherwise.
std::set<CanonicalForm> cached_wt_graphs(std::size_t n);

}  // namespace wt
