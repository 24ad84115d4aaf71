#include "ghw/betti.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <thread>

namespace ghw {

BettiTable::BettiTable(Entries entries) {
    for (const auto& [key, value] : entries) add(key.first, key.second, value);
}

std::uint64_t BettiTable::at(int i, int j) const noexcept {
    const auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::uint64_t value) {
    if (value != 0) entries_[{i, j}] += value;
}

int BettiTable::projective_dimension() const noexcept {
    int pd = 0;
    for (const auto& [key, value] : entries_) pd = std::max(pd, key.first);
    return pd;
}

int BettiTable::max_row() const noexcept {
    int row = 0;
    for (const auto& [key, value] : entries_) row = std::max(row, key.second - key.first);
    return row;
}

std::optional<int> BettiTable::min_shift(int i) const noexcept {
    const auto it = entries_.lower_bound({i, -1});
    if (it == entries_.end() || it->first.first != i) return std::nullopt;
    return it->first.second;
}

std::uint64_t BettiTable::total_rank(int i) const noexcept {
    std::uint64_t sum = 0;
    for (const auto& [key, value] : entries_) {
        if (key.first == i) sum += value;
    }
    return sum;
}

long long BettiTable::alternating_sum() const noexcept {
    long long sum = 0;
    for (const auto& [key, value] : entries_) {
        sum += (key.first % 2 == 0) ? static_cast<long long>(value) : -static_cast<long long>(value);
    }
    return sum;
}

namespace {

using Bits = BitWord::bits_type;

struct HochsterShared {
    int n;
    std::vector<std::uint8_t> face;  // face[s]: s contains no generator
    std::vector<Bits> generated;     // union of the generators inside s
};

HochsterShared prepare(const MonomialIdeal& ideal) {
    const int n = ideal.n();
    const std::size_t total = std::size_t{1} << n;
    HochsterShared shared{n, std::vector<std::uint8_t>(total, 1), std::vector<Bits>(total, 0)};
    std::vector<std::uint8_t> is_generator(total, 0);
    for (BitWord g : ideal.generators()) is_generator[g.bits()] = 1;
    for (std::size_t s = 0; s < total; ++s) {
        const auto w = static_cast<Bits>(s);
        if (is_generator[s]) {
            shared.face[s] = 0;
            shared.generated[s] = w;
        }
        for (auto rest = w; rest != 0; rest &= rest - 1) {
            const auto sub = w & ~(rest & (~rest + 1));
            if (!shared.face[sub]) shared.face[s] = 0;
            shared.generated[s] |= shared.generated[sub];
        }
    }
    return shared;
}

struct Partial {
    std::vector<std::uint64_t> cells;  // (n + 2) x (n + 2), indexed [i][j]
    HochsterStats stats;
};

void sweep(const HochsterShared& shared, const HochsterOptions& options, std::size_t first, std::size_t stride,
           Partial& out) {
    const int n = shared.n;
    const auto width = static_cast<std::size_t>(n + 2);
    detail::HomologyWorkspace workspace(n);
    FaceSets faces;
    faces.n = n;
    const std::size_t total = std::size_t{1} << n;
    for (std::size_t s = first; s < total; s += stride) {
        const auto w = static_cast<Bits>(s);
        if (options.skip_cones && shared.generated[s] != w) continue;
        const int size = std::popcount(w);
        faces.by_size.assign(static_cast<std::size_t>(size) + 1, {});
        for (Bits sub = w;; sub = (sub - 1) & w) {
            if (shared.face[sub]) faces.by_size[static_cast<std::size_t>(std::popcount(sub))].push_back(sub);
            if (sub == 0) break;
        }
        while (!faces.by_size.empty() && faces.by_size.back().empty()) faces.by_size.pop_back();
        const ReducedHomology h = workspace.compute(faces, options.field_char);
        ++out.stats.complexes;
        if (options.check_euler) {
            ++out.stats.euler_checks;
            if (!euler_consistent(faces, h)) {
                throw Error(ErrorKind::TheoremViolation,
                            "Euler characteristic mismatch on restriction to " + BitWord(n, w).to_string());
            }
        }
        for (std::size_t idx = 0; idx < h.dims.size(); ++idx) {
            if (h.dims[idx] == 0) continue;
            const int d = static_cast<int>(idx) - 1;
            const int i = size - d - 1;
            out.cells[static_cast<std::size_t>(i) * width + static_cast<std::size_t>(size)] += h.dims[idx];
        }
    }
}

}  // namespace

BettiTable betti_table_hochster(const MonomialIdeal& ideal, const HochsterOptions& options, HochsterStats* stats) {
    require_within_cap(ideal.n(), "Hochster sweep");
    if (!is_prime(options.field_char)) {
        throw Error(ErrorKind::Usage, "field characteristic must be prime, got " + std::to_string(options.field_char));
    }
    const HochsterShared shared = prepare(ideal);
    const auto width = static_cast<std::size_t>(ideal.n() + 2);
    const unsigned threads = std::max(1U, options.threads);

    std::vector<Partial> partials(threads, Partial{std::vector<std::uint64_t>(width * width, 0), {}});
    if (threads == 1) {
        sweep(shared, options, 0, 1, partials[0]);
    } else {
        std::vector<std::exception_ptr> errors(threads);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    sweep(shared, options, t, threads, partials[t]);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    BettiTable table;
    HochsterStats merged;
    for (const auto& p : partials) {
        for (std::size_t i = 0; i < width; ++i) {
            for (std::size_t j = 0; j < width; ++j) {
                table.add(static_cast<int>(i), static_cast<int>(j), p.cells[i * width + j]);
            }
        }
        merged.complexes += p.stats.complexes;
        merged.euler_checks += p.stats.euler_checks;
    }
    if (stats != nullptr) *stats = merged;
    return table;
}

std::vector<std::pair<int, int>> min_shift_sequence(const BettiTable& t) {
    std::vector<std::pair<int, int>> out;
    const int pd = t.projective_dimension();
    for (int i = 1; i <= pd; ++i) {
        if (auto j = t.min_shift(i)) out.emplace_back(i, *j);
    }
    return out;
}

std::vector<int> min_shifts(const BettiTable& t) {
    std::vector<int> out;
    for (const auto& [i, j] : min_shift_sequence(t)) out.push_back(j);
    return out;
}

int taylor_pair_minimum(const MonomialIdeal& ideal) {
    const auto& gens = ideal.generators();
    if (gens.size() < 2) {
        throw Error(ErrorKind::TooFewGenerators, "Taylor pair minimum needs at least two generators");
    }
    int best = ideal.n() + 1;
    for (std::size_t a = 0; a < gens.size(); ++a) {
        for (std::size_t b = a + 1; b < gens.size(); ++b) best = std::min(best, (gens[a] | gens[b]).weight());
    }
    return best;
}

std::string render_betti_diagram(const BettiTable& t) {
    const int pd = t.projective_dimension();
    const int rows = t.max_row();
    std::size_t width = 1;
    for (const auto& [key, value] : t.entries()) width = std::max(width, std::to_string(value).size());
    width = std::max(width, std::to_string(pd).size());
    const std::size_t label = std::to_string(rows).size() + 1;

    std::ostringstream out;
    auto pad = [&](const std::string& s, std::size_t w) { out << std::string(w - s.size(), ' ') << s; };
    out << std::string(label, ' ') << " |";
    for (int i = 0; i <= pd; ++i) {
        out << ' ';
        pad(std::to_string(i), width);
    }
    out << '\n' << std::string(label + 2 + static_cast<std::size_t>(pd + 1) * (width + 1), '-') << '\n';
    for (int r = 0; r <= rows; ++r) {
        pad(std::to_string(r), label);
        out << " |";
        for (int i = 0; i <= pd; ++i) {
            out << ' ';
            pad(std::to_string(t.at(i, r + i)), width);
        }
        out << '\n';
    }
    return out.str();
}

BettiTable parse_betti_diagram(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    BettiTable t;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" -") == std::string::npos) continue;
        const auto bar = line.find('|');
        if (bar == std::string::npos) throw Error(ErrorKind::Parse, "Betti diagram line without '|': " + line);
        if (header) {
            header = false;
            continue;
        }
        const int row = std::stoi(line.substr(0, bar));
        std::istringstream cells(line.substr(bar + 1));
        std::uint64_t value = 0;
        for (int i = 0; cells >> value; ++i) t.add(i, row + i, value);
    }
    return t;
}

}  // namespace ghw
