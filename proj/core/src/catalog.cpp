#include "wt/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "wt/buildkit.hpp"
#include "wt/errors.hpp"

namespace wt {

CatalogEntry make_entry(const CanonicalForm& form) {
    const SimpleGraph g = graph_from_canonical(form);
    return CatalogEntry{g.order(), form, degree_sequence(g)};
}

void write_catalog(std::ostream& out, const std::vector<CatalogEntry>& entries) {
    for (const auto& e : entries) {
        out << e.n << ' ' << e.form.hex() << ' ' << e.degrees.to_string() << '\n';
    }
}

std::vector<CatalogEntry> read_catalog(std::istream& in) {
    std::vector<CatalogEntry> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::istringstream fields(line);
        std::size_t n = 0;
        std::string hex;
        std::string degrees;
        std::string extra;
        if (!(fields >> n >> hex >> degrees) || (fields >> extra)) {
            throw ParseError("catalog line " + std::to_string(line_no) + " is malformed");
        }
        CatalogEntry entry{n, CanonicalForm::from_hex(hex), DegreeSequence::parse(degrees)};
        if (entry.degrees.size() != n) {
            throw ParseError("catalog line " + std::to_string(line_no) + " has the wrong length");
        }
        out.push_back(std::move(entry));
    }
    return out;
}

void save_catalog(const std::filesystem::path& path, const std::vector<CatalogEntry>& entries) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    // Write then rename so a concurrent reader never sees a partial file.
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
        write_catalog(out, entries);
    }
    std::filesystem::rename(tmp, path);
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    return read_catalog(in);
}

std::optional<std::filesystem::path> catalog_dir() {
    const char* dir = std::getenv("WT_CATALOG_DIR");
    if (dir == nullptr || *dir == '\0') {
        return std::nullopt;
    }
    return std::filesystem::path(dir);
}

std::set<CanonicalForm> cached_wt_graphs(std::size_t n) {
    const auto dir = catalog_dir();
    const auto file = dir ? *dir / ("wt-graphs-" + std::to_string(n) + ".txt") : std::filesystem::path{};
    if (dir && std::filesystem::exists(file)) {
        std::set<CanonicalForm> out;
        for (const auto& e : load_catalog(file)) {
            out.insert(e.form);
        }
        return out;
    }
    auto forms = enumerate_wt_graphs(n);
    if (dir) {
        std::vector<CatalogEntry> entries;
        for (const auto& f : forms) {
            entries.push_back(make_entry(f));
        }
        save_catalog(file, entries);
    }
    return forms;
}

}  // namespace wt
