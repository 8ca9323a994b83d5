#include "wt/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "wt/errors.hpp"

namespace wt {

DegreeSequence DegreeSequence::normalize(std::vector<Degree> raw) {
    if (raw.empty()) {
        throw EmptySequence();
    }
    if (std::any_of(raw.begin(), raw.end(), [](Degree t) { return t < 0; })) {
        throw NegativeTerm("degree sequence terms must be nonnegative");
    }
    std::sort(raw.begin(), raw.end(), std::greater<>());
    return DegreeSequence(std::move(raw));
}

DegreeSequence::DegreeSequence(std::initializer_list<Degree> raw)
    : DegreeSequence(normalize(std::vector<Degree>(raw))) {}

DegreeSequence DegreeSequence::parse(std::string_view text) {
    if (text.empty()) {
        throw ParseError("empty degree sequence text");
    }
    std::vector<Degree> raw;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view token =
            text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        Degree value = 0;
        const auto* first = token.data();
        const auto* last = token.data() + token.size();
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (token.empty() || ec != std::errc() || ptr != last || value < 0) {
            throw ParseError("bad degree sequence term '" + std::string(token) + "'");
        }
        raw.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return normalize(std::move(raw));
}

Degree DegreeSequence::sum() const noexcept {
    return std::accumulate(terms_.begin(), terms_.end(), Degree{0});
}

std::string DegreeSequence::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += std::to_string(terms_[i]);
    }
    return out;
}

std::size_t corrected_durfee(const DegreeSequence& d) {
    std::size_t m = 1;
    for (std::size_t i = 1; i <= d.size(); ++i) {
        if (d[i - 1] >= static_cast<Degree>(i) - 1) {
            m = i;
        }
    }
    return m;
}

namespace {

Degree eg_difference_unchecked(const DegreeSequence& d, std::size_t k) {
    const auto kk = static_cast<Degree>(k);
    Degree value = kk * (kk - 1);
    for (std::size_t i = 0; i < d.size(); ++i) {
        value += i < k ? -d[i] : std::min(kk, d[i]);
    }
    return value;
}

}  // namespace

Degree eg_difference(const DegreeSequence& d, std::size_t k) {
    const std::size_t m = corrected_durfee(d);
    if (k < 1 || k > m) {
        throw IndexOutOfRange("Erdos-Gallai difference index " + std::to_string(k) +
                              " outside [1, " + std::to_string(m) + "]");
    }
    return eg_difference_unchecked(d, k);
}

EgProfile eg_profile(const DegreeSequence& d) {
    EgProfile profile;
    profile.m = corrected_durfee(d);
    profile.deltas.reserve(profile.m);
    for (std::size_t k = 1; k <= profile.m; ++k) {
        profile.deltas.push_back(eg_difference_unchecked(d, k));
    }
    return profile;
}

namespace {

bool graphic_with(const DegreeSequence& d, const EgProfile& profile) {
    if (d.sum() % 2 != 0 || d.max() > static_cast<Degree>(d.size()) - 1) {
        return false;
    }
    return std::all_of(profile.deltas.begin(), profile.deltas.end(),
                       [](Degree delta) { return delta >= 0; });
}

}  // namespace

bool is_graphic(const DegreeSequence& d) {
    return graphic_with(d, eg_profile(d));
}

SequenceClass classify(const DegreeSequence& d) {
    const EgProfile profile = eg_profile(d);
    SequenceClass cls;
    cls.graphic = graphic_with(d, profile);
    if (!cls.graphic) {
        return cls;
    }
    const auto& deltas = profile.deltas;
    cls.split = deltas.back() == 0;
    cls.weakly_threshold =
        std::all_of(deltas.begin(), deltas.end(), [](Degree delta) { return delta <= 1; });
    cls.threshold =
        std::all_of(deltas.begin(), deltas.end(), [](Degree delta) { return delta == 0; });
    return cls;
}

std::int64_t FerrersDiagram::ones_below(std::size_t k) const {
    std::int64_t count = 0;
    for (std::size_t col = 0; col < std::min(k, n_); ++col) {
        for (std::size_t row = col + 1; row < n_; ++row) {
            count += at(row, col) == Cell::one;
        }
    }
    return count;
}

std::int64_t FerrersDiagram::ones_right(std::size_t k) const {
    std::int64_t count = 0;
    for (std::size_t row = 0; row < std::min(k, n_); ++row) {
        for (std::size_t col = row + 1; col < n_; ++col) {
            count += at(row, col) == Cell::one;
        }
    }
    return count;
}

FerrersDiagram ferrers(const DegreeSequence& d) {
    const std::size_t n = d.size();
    std::vector<Cell> cells(n * n, Cell::zero);
    for (std::size_t row = 0; row < n; ++row) {
        if (d[row] > static_cast<Degree>(n) - 1) {
            throw RowOverflow("term " + std::to_string(d[row]) + " does not fit a row of length " +
                              std::to_string(n));
        }
        cells[row * n + row] = Cell::star;
        auto remaining = d[row];
        for (std::size_t col = 0; col < n && remaining > 0; ++col) {
            if (col != row) {
                cells[row * n + col] = Cell::one;
                --remaining;
            }
        }
    }
    return FerrersDiagram(n, std::move(cells));
}

std::string render_ferrers(const FerrersDiagram& diagram) {
    std::string out;
    const std::size_t n = diagram.size();
    out.reserve(n * 2 * n);
    for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t col = 0; col < n; ++col) {
            if (col != 0) {
                out += ' ';
            }
            out += static_cast<char>(diagram.at(row, col));
        }
        out += '\n';
    }
    return out;
}

namespace {

void fill_colex(std::vector<Degree>& terms, std::size_t pos, Degree low, Degree max_term,
                const std::function<void(const DegreeSequence&)>& fn) {
    for (Degree v = low; v <= max_term; ++v) {
        terms[pos] = v;
        if (pos == 0) {
            fn(DegreeSequence::normalize(terms));
        } else {
            fill_colex(terms, pos - 1, v, max_term, fn);
        }
    }
}

}  // namespace

void for_each_nonincreasing(std::size_t n, Degree max_term,
                            const std::function<void(const DegreeSequence&)>& fn) {
    if (n == 0 || max_term < 0) {
        return;
    }
    std::vector<Degree> terms(n, 0);
    fill_colex(terms, n - 1, 0, max_term, fn);
}

std::vector<DegreeSequence> graphic_sequences(std::size_t n) {
    std::vector<DegreeSequence> out;
    for_each_nonincreasing(n, static_cast<Degree>(n) - 1, [&](const DegreeSequence& d) {
        if (is_graphic(d)) {
            out.push_back(d);
        }
    });
    return out;
}

}  // namespace wt
