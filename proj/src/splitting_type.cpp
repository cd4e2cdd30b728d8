#include "slopepanel/splitting_type.hpp"

#include "slopepanel/errors.hpp"
#include "slopepanel/parse.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace slopepanel {

SplittingType::SplittingType(std::vector<std::int64_t> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.empty()) {
        throw Error(ErrorKind::ShapeMismatch, "a splitting type needs at least one summand");
    }
    std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
}

std::int64_t SplittingType::total_degree() const noexcept {
    return std::accumulate(degrees_.begin(), degrees_.end(), std::int64_t{0});
}

std::vector<std::int64_t> SplittingType::smallest_partial_sums() const {
    std::vector<std::int64_t> sums(degrees_.size());
    std::int64_t acc = 0;
    for (std::size_t k = 0; k < degrees_.size(); ++k) {
        acc += degrees_[degrees_.size() - 1 - k];
        sums[k] = acc;
    }
    return sums;
}

SplittingType SplittingType::shifted(std::int64_t c) const {
    auto d = degrees_;
    for (auto& x : d) x += c;
    return SplittingType(std::move(d));
}

Rational SlopePanel::sum() const {
    Rational s = 0;
    for (const auto& e : entries) s += e;
    return s;
}

Rational slope(const SplittingType& t) {
    return Rational(t.total_degree(), static_cast<std::int64_t>(t.rank()));
}

SlopePanel slope_panel(const SplittingType& t) {
    const Rational mu = slope(t);
    if (mu == 0) {
        throw Error(ErrorKind::ZeroSlope, "slope panel undefined for degree-0 type " + to_string(t));
    }
    SlopePanel panel;
    panel.entries.reserve(t.rank());
    for (auto a : t.degrees()) panel.entries.push_back(Rational(a) / mu);
    return panel;
}

Rational minimal_slope_ratio(const SplittingType& t) {
    const Rational mu = slope(t);
    if (mu == 0) {
        throw Error(ErrorKind::ZeroSlope, "minimal slope ratio undefined for degree-0 type " + to_string(t));
    }
    if (mu < 0) {
        throw Error(ErrorKind::NegativeSlope, "minimal slope ratio needs positive slope, got " + to_string(mu));
    }
    return Rational(t.smallest()) / mu;
}

bool specializes_to(const SplittingType& general, const SplittingType& special) {
    if (general.rank() != special.rank() || general.total_degree() != special.total_degree()) {
        throw Error(ErrorKind::ShapeMismatch,
                    "specialization compares types of equal rank and degree: " + to_string(general) +
                        " vs " + to_string(special));
    }
    const auto g = general.smallest_partial_sums();
    const auto s = special.smallest_partial_sums();
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (g[k] < s[k]) return false;
    }
    return true;
}

std::int64_t balance_width(const SplittingType& t) { return t.largest() - t.smallest(); }

bool is_sequential(const SplittingType& t) {
    const auto d = t.degrees();
    for (std::size_t i = 1; i < d.size(); ++i) {
        if (d[i - 1] - d[i] > 1) return false;
    }
    return true;
}

SplittingType tensor(const SplittingType& t1, const SplittingType& t2) {
    std::vector<std::int64_t> out;
    out.reserve(t1.rank() * t2.rank());
    for (auto a : t1.degrees()) {
        for (auto b : t2.degrees()) out.push_back(a + b);
    }
    return SplittingType(std::move(out));
}

SplittingType dual(const SplittingType& t) {
    std::vector<std::int64_t> out(t.degrees().begin(), t.degrees().end());
    for (auto& x : out) x = -x;
    return SplittingType(std::move(out));
}

SplittingType direct_sum(const SplittingType& t1, const SplittingType& t2) {
    std::vector<std::int64_t> out(t1.degrees().begin(), t1.degrees().end());
    out.insert(out.end(), t2.degrees().begin(), t2.degrees().end());
    return SplittingType(std::move(out));
}

SplittingType most_balanced(std::size_t rank, std::int64_t degree) {
    if (rank == 0) throw Error(ErrorKind::ShapeMismatch, "rank must be positive");
    const auto r = static_cast<std::int64_t>(rank);
    // floor division, valid for negative degrees as well
    std::int64_t q = degree / r;
    if (degree % r != 0 && degree < 0) --q;
    const std::int64_t extra = degree - q * r;
    std::vector<std::int64_t> out(rank, q);
    for (std::int64_t i = 0; i < extra; ++i) out[static_cast<std::size_t>(i)] += 1;
    return SplittingType(std::move(out));
}

namespace {

void enumerate_rec(std::vector<std::int64_t>& prefix, std::size_t remaining, std::int64_t sum_left,
                   std::int64_t lo, std::int64_t cap, std::vector<SplittingType>& out) {
    if (remaining == 0) {
        if (sum_left == 0) out.emplace_back(prefix);
        return;
    }
    const auto rest = static_cast<std::int64_t>(remaining - 1);
    const std::int64_t top = std::min(cap, sum_left - rest * lo);
    for (std::int64_t x = top; x >= lo; --x) {
        // the remaining entries are at most x
        if (sum_left - x > rest * x) break;
        prefix.push_back(x);
        enumerate_rec(prefix, remaining - 1, sum_left - x, lo, x, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<SplittingType> enumerate_types(std::size_t rank, std::int64_t degree, std::int64_t lo,
                                           std::int64_t hi) {
    std::vector<SplittingType> out;
    if (rank == 0 || lo > hi) return out;
    std::vector<std::int64_t> prefix;
    prefix.reserve(rank);
    enumerate_rec(prefix, rank, degree, lo, hi, out);
    return out;
}

SplittingType parse_splitting_type(std::string_view text) {
    return SplittingType(detail::parse_int_list(text));
}

std::string to_string(const SplittingType& t) {
    std::string out;
    for (std::size_t i = 0; i < t.rank(); ++i) {
        if (i) out += ',';
        out += std::to_string(t[i]);
    }
    return out;
}

}  // namespace slopepanel
