#pragma once

#include "slopepanel/rational.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace slopepanel {

/// Splitting type of a vector bundle on P^1: the degrees a_1 >= ... >= a_r of
/// its line-bundle summands. Construction sorts into this canonical order, so
/// two types are equal exactly when they describe the same multiset.
class SplittingType {
public:
    explicit SplittingType(std::vector<std::int64_t> degrees);
    SplittingType(std::initializer_list<std::int64_t> degrees)
        : SplittingType(std::vector<std::int64_t>(degrees)) {}

    std::span<const std::int64_t> degrees() const noexcept { return degrees_; }
    std::int64_t operator[](std::size_t i) const { return degrees_[i]; }
    std::size_t rank() const noexcept { return degrees_.size(); }
    std::int64_t total_degree() const noexcept;

    std::int64_t largest() const noexcept { return degrees_.front(); }
    std::int64_t smallest() const noexcept { return degrees_.back(); }

    /// Sum of the k smallest entries, for k = 1..rank (index k-1).
    std::vector<std::int64_t> smallest_partial_sums() const;

    SplittingType shifted(std::int64_t c) const;

    friend bool operator==(const SplittingType&, const SplittingType&) = default;
    friend std::strong_ordering operator<=>(const SplittingType&, const SplittingType&) = default;

private:
    std::vector<std::int64_t> degrees_;
};

struct SlopePanel {
    std::vector<Rational> entries;

    Rational minimal() const { return entries.back(); }
    Rational sum() const;
    std::size_t size() const noexcept { return entries.size(); }
};

Rational slope(const SplittingType& t);

/// Entries a_i / mu in summand order. Throws ZeroSlope when the total degree
/// is zero. Negative slopes are allowed; entries keep the a_i order.
SlopePanel slope_panel(const SplittingType& t);

/// Smallest panel entry. Requires positive slope.
Rational minimal_slope_ratio(const SplittingType& t);

/// True iff `general` specializes to `special`: for every k the k smallest
/// entries of `general` sum to at least the k smallest of `special`.
bool specializes_to(const SplittingType& general, const SplittingType& special);

std::int64_t balance_width(const SplittingType& t);
inline bool is_balanced(const SplittingType& t) { return balance_width(t) <= 1; }
bool is_sequential(const SplittingType& t);

SplittingType tensor(const SplittingType& t1, const SplittingType& t2);
SplittingType dual(const SplittingType& t);
SplittingType direct_sum(const SplittingType& t1, const SplittingType& t2);

/// The unique type of width <= 1 with the given rank and degree.
SplittingType most_balanced(std::size_t rank, std::int64_t degree);

/// All splitting types of the given rank and degree whose entries lie in
/// [lo, hi], in lexicographically descending order.
std::vector<SplittingType> enumerate_types(std::size_t rank, std::int64_t degree,
                                           std::int64_t lo, std::int64_t hi);

/// Accepts comma-separated integers in any order, e.g. `4,3,3,2`.
SplittingType parse_splitting_type(std::string_view text);
std::string to_string(const SplittingType& t);

}  // namespace slopepanel
