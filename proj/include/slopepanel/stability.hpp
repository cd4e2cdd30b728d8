#pragma once

#include "slopepanel/nodal.hpp"
#include "slopepanel/rational.hpp"
#include "slopepanel/splitting_type.hpp"

#include <cstdint>
#include <vector>

namespace slopepanel {

enum class SmoothingPolicy {
    Worst,  // least balanced admissible type, lexicographically largest on ties
    Best,   // most balanced admissible type, lexicographically smallest on ties
};

inline constexpr std::size_t kMaxBalanceRank = 5;

/// Number of copies to glue before the slope of `t` becomes an integer.
std::int64_t integer_slope_copy_factor(const SplittingType& t);

/// One glue-and-smooth round: glue two copies of `t` along `align` and pick
/// a sequential admissible smoothing according to `policy`. The result has
/// twice the degree of `t`.
///
/// Requires integer slope (NonIntegerSlope), rank <= 5 (RankTooLarge) and a
/// sequential input (NotSequential).
SplittingType balance_step(const SplittingType& t, SmoothingPolicy policy = SmoothingPolicy::Worst);
SplittingType balance_step(const SplittingType& t, const Alignment& align, SmoothingPolicy policy);

struct BalanceTrace {
    std::vector<SplittingType> states;
    std::size_t steps = 0;
    /// 2^steps glued copies of the starting curve.
    std::uint64_t copies = 1;
    bool converged = false;

    const SplittingType& final_state() const { return states.back(); }
};

/// Iterates balance_step until the state is 0-balanced or `max_steps` rounds
/// have run; hitting the cap is reported through `converged`, not thrown.
BalanceTrace balance(const SplittingType& t, std::size_t max_steps,
                     SmoothingPolicy policy = SmoothingPolicy::Worst);
BalanceTrace balance(const SplittingType& t, std::size_t max_steps, const Alignment& align,
                     SmoothingPolicy policy);

struct FiltrationPiece {
    std::int64_t rank = 0;
    Rational slope;
};

/// Harder-Narasimhan style filtration data: piece slopes strictly decrease.
class FiltrationData {
public:
    explicit FiltrationData(std::vector<FiltrationPiece> pieces);

    const std::vector<FiltrationPiece>& pieces() const noexcept { return pieces_; }
    std::int64_t total_rank() const noexcept;

private:
    std::vector<FiltrationPiece> pieces_;
};

struct RestrictionBounds {
    std::vector<Rational> expected;  // slopes repeated by rank, non-increasing
    Rational bound;                  // half the largest piece rank
};

RestrictionBounds hn_restriction_bounds(const FiltrationData& f);

/// True iff every degree of `t` lies strictly within `bound` of the matching
/// expected entry.
bool sp_feasible(const SplittingType& t, const FiltrationData& f);

/// 1 - n^2 / (2 deg): lower bound for the minimal slope ratio of a general
/// curve of anticanonical degree `deg` when T_X is semistable.
Rational minimal_slope_ratio_lower_bound(std::int64_t n, std::int64_t deg);

}  // namespace slopepanel
