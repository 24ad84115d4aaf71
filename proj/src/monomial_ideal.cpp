#include "ghw/monomial_ideal.hpp"

#include <algorithm>

#include "ghw/binary_matrix.hpp"

namespace ghw {

MonomialIdeal::MonomialIdeal(int n, std::vector<BitWord> supports) : n_(n) {
    if (n <= 0) throw Error(ErrorKind::EmptyAmbient, "monomial ideal needs at least one variable");
    for (BitWord s : supports) {
        if (s.size() != n) {
            throw Error(ErrorKind::LengthMismatch, "generator support of length " + std::to_string(s.size()) +
                                                       " in " + std::to_string(n) + " variables");
        }
    }
    canonicalize(supports);
    std::stable_sort(supports.begin(), supports.end(), [](BitWord a, BitWord b) { return a.weight() < b.weight(); });
    for (BitWord s : supports) {
        const bool redundant =
            std::any_of(gens_.begin(), gens_.end(), [s](BitWord g) { return g.subset_of(s); });
        if (!redundant) gens_.push_back(s);
    }
    canonicalize(gens_);
}

bool MonomialIdeal::contains(BitWord w) const noexcept {
    return std::any_of(gens_.begin(), gens_.end(), [w](BitWord g) { return g.subset_of(w); });
}

MonomialIdeal ideal_from_supports(int n, std::vector<BitWord> supports) {
    return {n, std::move(supports)};
}

bool SimplicialComplexView::is_face(BitWord s) const noexcept {
    return std::none_of(nonfaces_.begin(), nonfaces_.end(), [s](BitWord g) { return g.subset_of(s); });
}

std::size_t FaceSets::count(int dim) const noexcept {
    const auto idx = static_cast<std::size_t>(dim + 1);
    return dim >= -1 && idx < by_size.size() ? by_size[idx].size() : 0;
}

std::size_t FaceSets::total() const noexcept {
    std::size_t t = 0;
    for (const auto& f : by_size) t += f.size();
    return t;
}

FaceSets restricted_faces(const SimplicialComplexView& v, BitWord w) {
    FaceSets out;
    out.n = v.n();
    out.by_size.resize(static_cast<std::size_t>(w.weight()) + 1);
    const auto mask = w.bits();
    for (BitWord::bits_type s = mask;; s = (s - 1) & mask) {
        if (v.is_face(BitWord(v.n(), s))) out.by_size[static_cast<std::size_t>(std::popcount(s))].push_back(s);
        if (s == 0) break;
    }
    for (auto& level : out.by_size) std::sort(level.begin(), level.end());
    while (!out.by_size.empty() && out.by_size.back().empty()) out.by_size.pop_back();
    return out;
}

bool ReducedHomology::acyclic() const noexcept {
    return std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; });
}

bool is_prime(int p) noexcept {
    if (p < 2) return false;
    for (int q = 2; q * q <= p; ++q) {
        if (p % q == 0) return false;
    }
    return true;
}

ReducedHomology reduced_homology_dims(const FaceSets& faces, int field_char) {
    detail::HomologyWorkspace ws(faces.n);
    return ws.compute(faces, field_char);
}

bool euler_consistent(const FaceSets& faces, const ReducedHomology& h) noexcept {
    long long from_faces = 0;
    for (std::size_t s = 0; s < faces.by_size.size(); ++s) {
        const auto count = static_cast<long long>(faces.by_size[s].size());
        from_faces += (s % 2 == 1) ? count : -count;  // dimension s - 1
    }
    long long from_homology = 0;
    for (std::size_t s = 0; s < h.dims.size(); ++s) {
        const auto count = static_cast<long long>(h.dims[s]);
        from_homology += (s % 2 == 1) ? count : -count;
    }
    return from_faces == from_homology;
}

namespace detail {

HomologyWorkspace::HomologyWorkspace(int n) : index_(std::size_t{1} << n, -1) {}

std::size_t HomologyWorkspace::rank_boundary_gf2(const std::vector<BitWord::bits_type>& upper,
                                                 const std::vector<BitWord::bits_type>& lower) {
    for (std::size_t i = 0; i < lower.size(); ++i) index_[lower[i]] = static_cast<std::int32_t>(i);
    PackedMatrix m(upper.size(), lower.size());
    for (std::size_t r = 0; r < upper.size(); ++r) {
        const auto face = upper[r];
        for (auto rest = face; rest != 0; rest &= rest - 1) {
            m.set(r, static_cast<std::size_t>(index_[face & ~(rest & (~rest + 1))]));
        }
    }
    return m.eliminate();
}

std::size_t HomologyWorkspace::rank_boundary_mod_p(const std::vector<BitWord::bits_type>& upper,
                                                   const std::vector<BitWord::bits_type>& lower, int p) {
    for (std::size_t i = 0; i < lower.size(); ++i) index_[lower[i]] = static_cast<std::int32_t>(i);
    const std::size_t cols = lower.size();
    std::vector<std::int64_t> entries(upper.size() * cols, 0);
    for (std::size_t r = 0; r < upper.size(); ++r) {
        const auto face = upper[r];
        int position = 0;
        for (auto rest = face; rest != 0; rest &= rest - 1, ++position) {
            const auto col = static_cast<std::size_t>(index_[face & ~(rest & (~rest + 1))]);
            entries[r * cols + col] = (position % 2 == 0) ? 1 : -1;
        }
    }
    return rank_mod_p(std::move(entries), upper.size(), cols, p);
}

ReducedHomology HomologyWorkspace::compute(const FaceSets& faces, int field_char) {
    if (!is_prime(field_char)) {
        throw Error(ErrorKind::Usage, "field characteristic must be prime, got " + std::to_string(field_char));
    }
    ReducedHomology h;
    const std::size_t levels = faces.by_size.size();
    if (levels == 0 || faces.by_size[0].empty()) return h;  // void complex
    // rank_of[s] = rank of the boundary from faces with s vertices to faces
    // with s - 1 vertices; rank_of[0] = 0, rank_of[1] is the augmentation.
    std::vector<std::size_t> rank_of(levels + 1, 0);
    if (levels > 1) rank_of[1] = faces.by_size[1].empty() ? 0 : 1;
    for (std::size_t s = 2; s < levels; ++s) {
        const auto& upper = faces.by_size[s];
        const auto& lower = faces.by_size[s - 1];
        if (upper.empty() || lower.empty()) continue;
        rank_of[s] = field_char == 2 ? rank_boundary_gf2(upper, lower) : rank_boundary_mod_p(upper, lower, field_char);
    }
    h.dims.resize(levels, 0);
    for (std::size_t s = 0; s < levels; ++s) {
        h.dims[s] = faces.by_size[s].size() - rank_of[s] - rank_of[s + 1];
    }
    return h;
}

}  // namespace detail

}  // namespace ghw
