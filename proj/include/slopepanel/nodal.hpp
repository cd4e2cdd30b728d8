#pragma once

#include "slopepanel/splitting_type.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace slopepanel {

/// Line bundle O_Z(a, b) on the nodal curve Z = Z1 u Z2: degree a on Z1 and
/// degree b on Z2.
struct NodalSummand {
    std::int64_t a = 0;
    std::int64_t b = 0;

    std::int64_t total() const noexcept { return a + b; }
    friend bool operator==(const NodalSummand&, const NodalSummand&) = default;
};

/// Vector bundle on Z as a sum of line bundles, kept sorted descending by
/// (a + b, a).
class NodalType {
public:
    explicit NodalType(std::vector<NodalSummand> summands);

    std::span<const NodalSummand> summands() const noexcept { return summands_; }
    const NodalSummand& operator[](std::size_t i) const { return summands_[i]; }
    std::size_t rank() const noexcept { return summands_.size(); }
    std::int64_t total_degree() const noexcept;

    SplittingType restrict_z1() const;
    SplittingType restrict_z2() const;

    /// Exchanges the roles of Z1 and Z2.
    NodalType swapped() const;

    friend bool operator==(const NodalType&, const NodalType&) = default;

private:
    std::vector<NodalSummand> summands_;
};

/// Torsion-free sheaf on Z, G + H1 + H2: a bundle on Z plus bundles supported
/// on each component.
struct TorsionFreeType {
    std::vector<NodalSummand> g_part;
    std::vector<std::int64_t> h1_part;
    std::vector<std::int64_t> h2_part;

    std::size_t locally_free_rank() const noexcept { return g_part.size(); }
    /// Generic rank along Z1 and Z2 respectively.
    std::size_t rank_on_z1() const noexcept { return g_part.size() + h1_part.size(); }
    std::size_t rank_on_z2() const noexcept { return g_part.size() + h2_part.size(); }
};

std::int64_t euler_char(const TorsionFreeType& f);

/// Node matching: summand i of the first curve meets summand perm[i] of the
/// second. Indices are 0-based.
class Alignment {
public:
    explicit Alignment(std::vector<std::size_t> perm);

    static Alignment identity(std::size_t rank);
    /// Pairs the largest summand of one curve with the smallest of the other.
    static Alignment dual(std::size_t rank);

    std::size_t size() const noexcept { return perm_.size(); }
    std::size_t operator[](std::size_t i) const { return perm_[i]; }

private:
    std::vector<std::size_t> perm_;
};

NodalType glue(const SplittingType& t1, const SplittingType& t2, const Alignment& align);

inline constexpr std::size_t kDefaultRankLimit = 16;

/// A choice of disjoint index sets realizing a degree bound (0-based indices
/// into the canonical summand order).
struct DegreeBoundSelection {
    std::vector<std::size_t> joint;    // contributes a + b
    std::vector<std::size_t> only_z1;  // contributes a + 1
    std::vector<std::size_t> only_z2;  // contributes b + 1
    std::int64_t value = 0;
};

/// Minimum of sum_J (a+b) + sum_K1 (a+1) + sum_K2 (b+1) over disjoint J, K1, K2
/// with |J| + |K1| = |J| + |K2| = m. Throws OutOfRange unless 1 <= m <= rank,
/// RankTooLarge when rank exceeds `rank_limit`.
std::int64_t degbd(const NodalType& z, std::size_t m, std::size_t rank_limit = kDefaultRankLimit);

/// Same minimum, together with one set of indices attaining it.
DegreeBoundSelection degbd_selection(const NodalType& z, std::size_t m,
                                     std::size_t rank_limit = kDefaultRankLimit);

/// min( min_i (a_i + b_i), min_i a_i + min_j b_j + 2 ); equals degbd(z, 1).
std::int64_t degbd_m1_closed_form(const NodalType& z);

/// Splitting types on a general smoothing that are compatible with every
/// degree bound: same rank and degree, and the m smallest entries sum to at
/// least degbd(z, m). Lexicographically descending. Necessary conditions
/// only, so the result may contain types no actual smoothing realizes.
std::vector<SplittingType> admissible_smoothings(const NodalType& z, bool require_sequential);

struct WitnessBlock {
    enum class Kind { Single, Pair };

    Kind kind = Kind::Single;
    std::size_t first = 0;   // J index, or K1 index of a pair
    std::size_t second = 0;  // K2 index of a pair
    std::int64_t value = 0;
    /// For pairs: a[second] >= a[first] + 2 and b[first] >= b[second] + 2.
    bool certified = true;
};

struct SharpnessWitness {
    std::vector<WitnessBlock> blocks;
    std::int64_t total = 0;
    bool certified = true;
};

/// Decomposes an optimal degree-bound selection into line-bundle quotients
/// and rank-2 extension blocks. Pairs that cannot be matched so that the
/// extension inequalities hold are kept but flagged uncertified.
SharpnessWitness sharpness_witness(const NodalType& z, std::size_t m,
                                   std::size_t rank_limit = kDefaultRankLimit);

/// One block per line (`single i -> v` or `pair i j -> v`, 1-based), then
/// `total -> v`.
std::string format_witness(const SharpnessWitness& w);

/// Comma-separated `a/b` pairs, e.g. `2/-1,-1/2`.
NodalType parse_nodal_type(std::string_view text);
std::string to_string(const NodalType& z);

/// `identity`, `dual`, or `perm:i1,i2,...` with 1-based indices.
Alignment parse_alignment(std::string_view text, std::size_t rank);

}  // namespace slopepanel
