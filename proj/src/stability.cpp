#include "slopepanel/stability.hpp"

#include "slopepanel/errors.hpp"

#include <algorithm>
#include <numeric>

namespace slopepanel {

std::int64_t integer_slope_copy_factor(const SplittingType& t) {
    const auto r = static_cast<std::int64_t>(t.rank());
    const auto g = std::gcd(t.total_degree(), r);
    return r / g;
}

namespace {

void check_balance_input(const SplittingType& t) {
    if (t.rank() > kMaxBalanceRank) {
        throw Error(ErrorKind::RankTooLarge, "balancing is only modeled up to rank 5, got rank " +
                                                 std::to_string(t.rank()));
    }
    if (const auto k = integer_slope_copy_factor(t); k != 1) {
        throw Error(ErrorKind::NonIntegerSlope, "slope of " + to_string(t) + " is " + to_string(slope(t)) +
                                                    "; glue " + std::to_string(k) + " copies first");
    }
    if (!is_sequential(t)) {
        throw Error(ErrorKind::NotSequential, to_string(t) + " is not sequential");
    }
}

bool worse(const SplittingType& x, const SplittingType& y) {
    const auto wx = balance_width(x), wy = balance_width(y);
    if (wx != wy) return wx > wy;
    return x > y;
}

bool better(const SplittingType& x, const SplittingType& y) {
    const auto wx = balance_width(x), wy = balance_width(y);
    if (wx != wy) return wx < wy;
    return x < y;
}

}  // namespace

SplittingType balance_step(const SplittingType& t, SmoothingPolicy policy) {
    return balance_step(t, Alignment::dual(t.rank()), policy);
}

SplittingType balance_step(const SplittingType& t, const Alignment& align, SmoothingPolicy policy) {
    check_balance_input(t);
    const auto candidates = admissible_smoothings(glue(t, t, align), /*require_sequential=*/true);
    if (candidates.empty()) {
        // Only reachable with a non-generic alignment.
        throw Error(ErrorKind::OutOfRange, "no sequential smoothing satisfies the degree bounds for " +
                                               to_string(t));
    }
    const auto pick = policy == SmoothingPolicy::Worst
                          ? std::min_element(candidates.begin(), candidates.end(), worse)
                          : std::min_element(candidates.begin(), candidates.end(), better);
    return *pick;
}

BalanceTrace balance(const SplittingType& t, std::size_t max_steps, SmoothingPolicy policy) {
    return balance(t, max_steps, Alignment::dual(t.rank()), policy);
}

BalanceTrace balance(const SplittingType& t, std::size_t max_steps, const Alignment& align,
                     SmoothingPolicy policy) {
    check_balance_input(t);
    if (max_steps > 62) {
        throw Error(ErrorKind::OutOfRange, "at most 62 balancing rounds are supported");
    }
    BalanceTrace trace;
    trace.states.push_back(t);
    while (balance_width(trace.final_state()) != 0 && trace.steps < max_steps) {
        trace.states.push_back(balance_step(trace.final_state(), align, policy));
        ++trace.steps;
        trace.copies *= 2;
    }
    trace.converged = balance_width(trace.final_state()) == 0;
    return trace;
}

FiltrationData::FiltrationData(std::vector<FiltrationPiece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw Error(ErrorKind::InvalidFiltration, "filtration has no pieces");
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (pieces_[i].rank <= 0) {
            throw Error(ErrorKind::InvalidFiltration, "filtration piece ranks must be positive");
        }
        if (i > 0 && !(pieces_[i].slope < pieces_[i - 1].slope)) {
            throw Error(ErrorKind::InvalidFiltration, "filtration slopes must strictly decrease");
        }
    }
}

std::int64_t FiltrationData::total_rank() const noexcept {
    std::int64_t n = 0;
    for (const auto& p : pieces_) n += p.rank;
    return n;
}

RestrictionBounds hn_restriction_bounds(const FiltrationData& f) {
    RestrictionBounds out;
    std::int64_t max_rank = 0;
    for (const auto& p : f.pieces()) {
        out.expected.insert(out.expected.end(), static_cast<std::size_t>(p.rank), p.slope);
        max_rank = std::max(max_rank, p.rank);
    }
    out.bound = Rational(max_rank, 2);
    return out;
}

bool sp_feasible(const SplittingType& t, const FiltrationData& f) {
    if (static_cast<std::int64_t>(t.rank()) != f.total_rank()) {
        throw Error(ErrorKind::RankMismatch, "splitting type rank differs from filtration rank");
    }
    const auto b = hn_restriction_bounds(f);
    for (std::size_t i = 0; i < t.rank(); ++i) {
        Rational gap = Rational(t[i]) - b.expected[i];
        if (gap < 0) gap = -gap;
        if (!(gap < b.bound)) return false;
    }
    return true;
}

Rational minimal_slope_ratio_lower_bound(std::int64_t n, std::int64_t deg) {
    if (deg <= 0) throw Error(ErrorKind::ZeroDegree, "anticanonical degree must be positive");
    return Rational(1) - Rational(n * n, 2 * deg);
}

}  // namespace slopepanel
