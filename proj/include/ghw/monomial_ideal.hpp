#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ghw/bitword.hpp"

namespace ghw {

/// Square-free monomial ideal in n variables, stored by the supports of its
/// inclusion-minimal generators (lexicographic order).
class MonomialIdeal {
public:
    /// Keeps the inclusion-minimal supports. Throws EmptyAmbient if n == 0.
    MonomialIdeal(int n, std::vector<BitWord> supports);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] const std::vector<BitWord>& generators() const noexcept { return gens_; }
    [[nodiscard]] std::size_t size() const noexcept { return gens_.size(); }
    /// X^w lies in the ideal.
    [[nodiscard]] bool contains(BitWord w) const noexcept;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    std::vector<BitWord> gens_;
    int n_;
};

[[nodiscard]] MonomialIdeal ideal_from_supports(int n, std::vector<BitWord> supports);

/// Stanley-Reisner complex of a square-free monomial ideal: a vertex set is a
/// face iff it contains no generator support.
class SimplicialComplexView {
public:
    explicit SimplicialComplexView(const MonomialIdeal& ideal) : nonfaces_(ideal.generators()), n_(ideal.n()) {}

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] const std::vector<BitWord>& nonfaces() const noexcept { return nonfaces_; }
    [[nodiscard]] bool is_face(BitWord s) const noexcept;

private:
    std::vector<BitWord> nonfaces_;
    int n_;
};

/// Faces of a complex grouped by vertex count: by_size[s] holds the faces of
/// dimension s - 1 (by_size[0] is {empty face} unless the complex is void).
struct FaceSets {
    int n = 0;
    std::vector<std::vector<BitWord::bits_type>> by_size;

    [[nodiscard]] std::size_t count(int dim) const noexcept;
    [[nodiscard]] int top_dimension() const noexcept { return static_cast<int>(by_size.size()) - 2; }
    [[nodiscard]] std::size_t total() const noexcept;
};

/// All faces of the restriction of v to the vertex set w.
[[nodiscard]] FaceSets restricted_faces(const SimplicialComplexView& v, BitWord w);

/// dims[d + 1] = dim of reduced homology in degree d, for d >= -1.
struct ReducedHomology {
    std::vector<std::size_t> dims;

    [[nodiscard]] std::size_t at(int d) const noexcept {
        const auto idx = static_cast<std::size_t>(d + 1);
        return d >= -1 && idx < dims.size() ? dims[idx] : 0;
    }
    [[nodiscard]] bool acyclic() const noexcept;
};

/// Reduced simplicial homology over GF(p) for prime p (default 2) of the
/// augmented chain complex. The complex {empty} has H_{-1} of dimension 1; the
/// void complex has no homology at all.
[[nodiscard]] ReducedHomology reduced_homology_dims(const FaceSets& faces, int field_char = 2);

/// Reduced Euler characteristic computed from face counts equals the
/// alternating sum of the homology dimensions.
[[nodiscard]] bool euler_consistent(const FaceSets& faces, const ReducedHomology& h) noexcept;

[[nodiscard]] bool is_prime(int p) noexcept;

namespace detail {

/// Reusable scratch space for repeated homology computations on subcomplexes
/// of one ambient vertex set.
class HomologyWorkspace {
public:
    explicit HomologyWorkspace(int n);

    ReducedHomology compute(const FaceSets& faces, int field_char);

private:
    std::size_t rank_boundary_gf2(const std::vector<BitWord::bits_type>& upper,
                                  const std::vector<BitWord::bits_type>& lower);
    std::size_t rank_boundary_mod_p(const std::vector<BitWord::bits_type>& upper,
                                    const std::vector<BitWord::bits_type>& lower, int p);

    std::vector<std::int32_t> index_;
};

}  // namespace detail

}  // namespace ghw
