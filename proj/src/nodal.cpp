#include "slopepanel/nodal.hpp"

#include "slopepanel/errors.hpp"
#include "slopepanel/parse.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>

namespace slopepanel {

NodalType::NodalType(std::vector<NodalSummand> summands) : summands_(std::move(summands)) {
    if (summands_.empty()) {
        throw Error(ErrorKind::ShapeMismatch, "a nodal type needs at least one summand");
    }
    std::sort(summands_.begin(), summands_.end(), [](const NodalSummand& x, const NodalSummand& y) {
        if (x.total() != y.total()) return x.total() > y.total();
        return x.a > y.a;
    });
}

std::int64_t NodalType::total_degree() const noexcept {
    std::int64_t sum = 0;
    for (const auto& s : summands_) sum += s.total();
    return sum;
}

SplittingType NodalType::restrict_z1() const {
    std::vector<std::int64_t> d;
    for (const auto& s : summands_) d.push_back(s.a);
    return SplittingType(std::move(d));
}

SplittingType NodalType::restrict_z2() const {
    std::vector<std::int64_t> d;
    for (const auto& s : summands_) d.push_back(s.b);
    return SplittingType(std::move(d));
}

NodalType NodalType::swapped() const {
    std::vector<NodalSummand> out;
    for (const auto& s : summands_) out.push_back({s.b, s.a});
    return NodalType(std::move(out));
}

std::int64_t euler_char(const TorsionFreeType& f) {
    std::int64_t chi = 0;
    for (const auto& s : f.g_part) chi += s.a + s.b + 1;
    for (auto a : f.h1_part) chi += a + 1;
    for (auto b : f.h2_part) chi += b + 1;
    return chi;
}

Alignment::Alignment(std::vector<std::size_t> perm) : perm_(std::move(perm)) {
    std::vector<bool> seen(perm_.size(), false);
    for (auto p : perm_) {
        if (p >= perm_.size() || seen[p]) {
            throw Error(ErrorKind::ParseError, "alignment is not a permutation");
        }
        seen[p] = true;
    }
}

Alignment Alignment::identity(std::size_t rank) {
    std::vector<std::size_t> perm(rank);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    return Alignment(std::move(perm));
}

Alignment Alignment::dual(std::size_t rank) {
    std::vector<std::size_t> perm(rank);
    for (std::size_t i = 0; i < rank; ++i) perm[i] = rank - 1 - i;
    return Alignment(std::move(perm));
}

NodalType glue(const SplittingType& t1, const SplittingType& t2, const Alignment& align) {
    if (t1.rank() != t2.rank()) {
        throw Error(ErrorKind::RankMismatch, "cannot glue ranks " + std::to_string(t1.rank()) + " and " +
                                                 std::to_string(t2.rank()));
    }
    if (align.size() != t1.rank()) {
        throw Error(ErrorKind::RankMismatch, "alignment size does not match rank");
    }
    std::vector<NodalSummand> pairs;
    pairs.reserve(t1.rank());
    for (std::size_t i = 0; i < t1.rank(); ++i) pairs.push_back({t1[i], t2[align[i]]});
    return NodalType(std::move(pairs));
}

namespace {

enum class Label : unsigned char { None, Joint, OnlyZ1, OnlyZ2 };

constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max();

void check_degbd_args(const NodalType& z, std::size_t m, std::size_t rank_limit) {
    if (z.rank() > rank_limit) {
        throw Error(ErrorKind::RankTooLarge, "degree bound limited to rank " + std::to_string(rank_limit));
    }
    if (m < 1 || m > z.rank()) {
        throw Error(ErrorKind::OutOfRange,
                    "m must lie in 1.." + std::to_string(z.rank()) + ", got " + std::to_string(m));
    }
}

// best[i][p1][p2]: minimum over labelings of the first i summands with
// |J|+|K1| = p1 and |J|+|K2| = p2.
DegreeBoundSelection solve_degbd(const NodalType& z, std::size_t m) {
    const std::size_t r = z.rank();
    const std::size_t w = m + 1;
    std::vector<std::vector<std::int64_t>> best(r + 1, std::vector<std::int64_t>(w * w, kUnreachable));
    std::vector<std::vector<Label>> choice(r + 1, std::vector<Label>(w * w, Label::None));
    best[0][0] = 0;

    auto relax = [&](std::size_t i, std::size_t p1, std::size_t p2, std::int64_t v, Label l) {
        if (p1 > m || p2 > m) return;
        auto& cell = best[i + 1][p1 * w + p2];
        if (v < cell) {
            cell = v;
            choice[i + 1][p1 * w + p2] = l;
        }
    };

    for (std::size_t i = 0; i < r; ++i) {
        const auto& s = z[i];
        for (std::size_t p1 = 0; p1 <= m; ++p1) {
            for (std::size_t p2 = 0; p2 <= m; ++p2) {
                const auto cur = best[i][p1 * w + p2];
                if (cur == kUnreachable) continue;
                relax(i, p1, p2, cur, Label::None);
                relax(i, p1 + 1, p2 + 1, cur + s.a + s.b, Label::Joint);
                relax(i, p1 + 1, p2, cur + s.a + 1, Label::OnlyZ1);
                relax(i, p1, p2 + 1, cur + s.b + 1, Label::OnlyZ2);
            }
        }
    }

    DegreeBoundSelection sel;
    sel.value = best[r][m * w + m];
    std::size_t p1 = m, p2 = m;
    for (std::size_t i = r; i-- > 0;) {
        switch (choice[i + 1][p1 * w + p2]) {
            case Label::None: break;
            case Label::Joint: sel.joint.push_back(i); --p1; --p2; break;
            case Label::OnlyZ1: sel.only_z1.push_back(i); --p1; break;
            case Label::OnlyZ2: sel.only_z2.push_back(i); --p2; break;
        }
    }
    std::reverse(sel.joint.begin(), sel.joint.end());
    std::reverse(sel.only_z1.begin(), sel.only_z1.end());
    std::reverse(sel.only_z2.begin(), sel.only_z2.end());
    return sel;
}

}  // namespace

std::int64_t degbd(const NodalType& z, std::size_t m, std::size_t rank_limit) {
    return degbd_selection(z, m, rank_limit).value;
}

DegreeBoundSelection degbd_selection(const NodalType& z, std::size_t m, std::size_t rank_limit) {
    check_degbd_args(z, m, rank_limit);
    return solve_degbd(z, m);
}

std::int64_t degbd_m1_closed_form(const NodalType& z) {
    std::int64_t min_total = kUnreachable, min_a = kUnreachable, min_b = kUnreachable;
    for (const auto& s : z.summands()) {
        min_total = std::min(min_total, s.total());
        min_a = std::min(min_a, s.a);
        min_b = std::min(min_b, s.b);
    }
    // a single summand cannot supply disjoint K1 and K2
    if (z.rank() == 1) return min_total;
    return std::min(min_total, min_a + min_b + 2);
}

namespace {

struct SmoothingSearch {
    std::size_t rank;
    std::int64_t degree;
    std::vector<std::int64_t> bounds;  // bounds[k-1] = degbd(z, k)
    bool sequential;
    std::vector<std::int64_t> ascending;
    std::vector<SplittingType> out;

    void run(std::int64_t partial) {
        const std::size_t k = ascending.size();
        if (k == rank) {
            if (partial == degree) out.emplace_back(ascending);
            return;
        }
        const std::int64_t floor_value = k == 0 ? bounds[0] : ascending.back();
        const std::int64_t lo = std::max(floor_value, bounds[k] - partial);
        const auto rest = static_cast<std::int64_t>(rank - k);
        for (std::int64_t x = lo; partial + rest * x <= degree; ++x) {
            if (sequential && k > 0 && x - ascending.back() > 1) break;
            ascending.push_back(x);
            run(partial + x);
            ascending.pop_back();
        }
    }
};

}  // namespace

std::vector<SplittingType> admissible_smoothings(const NodalType& z, bool require_sequential) {
    SmoothingSearch search{z.rank(), z.total_degree(), {}, require_sequential, {}, {}};
    if (z.rank() > kDefaultRankLimit) {
        throw Error(ErrorKind::RankTooLarge, "degree bound limited to rank " + std::to_string(kDefaultRankLimit));
    }
    for (std::size_t m = 1; m <= z.rank(); ++m) search.bounds.push_back(solve_degbd(z, m).value);
    search.run(0);
    std::sort(search.out.begin(), search.out.end(), std::greater<>());
    return std::move(search.out);
}

namespace {

bool extension_ok(const NodalType& z, std::size_t k1, std::size_t k2) {
    return z[k2].a >= z[k1].a + 2 && z[k1].b >= z[k2].b + 2;
}

// Kuhn's augmenting paths; match[j] is the K1 slot matched to K2 slot j.
bool augment(const std::vector<std::vector<bool>>& ok, std::size_t i, std::vector<bool>& seen,
             std::vector<std::optional<std::size_t>>& match) {
    for (std::size_t j = 0; j < ok[i].size(); ++j) {
        if (!ok[i][j] || seen[j]) continue;
        seen[j] = true;
        if (!match[j] || augment(ok, *match[j], seen, match)) {
            match[j] = i;
            return true;
        }
    }
    return false;
}

}  // namespace

SharpnessWitness sharpness_witness(const NodalType& z, std::size_t m, std::size_t rank_limit) {
    const auto sel = degbd_selection(z, m, rank_limit);
    SharpnessWitness w;
    w.total = sel.value;

    for (auto i : sel.joint) {
        w.blocks.push_back({WitnessBlock::Kind::Single, i, 0, z[i].total(), true});
    }

    const std::size_t k = sel.only_z1.size();
    std::vector<std::vector<bool>> ok(k, std::vector<bool>(k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) ok[i][j] = extension_ok(z, sel.only_z1[i], sel.only_z2[j]);
    }
    std::vector<std::optional<std::size_t>> match(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<bool> seen(k, false);
        augment(ok, i, seen, match);
    }
    // Unmatched slots are paired up in order and flagged.
    std::vector<std::optional<std::size_t>> partner(k);
    for (std::size_t j = 0; j < k; ++j) {
        if (match[j]) partner[*match[j]] = j;
    }
    std::vector<std::size_t> free_k2;
    for (std::size_t j = 0; j < k; ++j) {
        if (!match[j]) free_k2.push_back(j);
    }
    std::size_t next_free = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (!partner[i]) partner[i] = free_k2[next_free++];
        const auto first = sel.only_z1[i];
        const auto second = sel.only_z2[*partner[i]];
        const bool certified = extension_ok(z, first, second);
        w.certified = w.certified && certified;
        w.blocks.push_back({WitnessBlock::Kind::Pair, first, second, z[first].a + z[second].b + 2, certified});
    }
    return w;
}

std::string format_witness(const SharpnessWitness& w) {
    std::string out;
    for (const auto& b : w.blocks) {
        if (b.kind == WitnessBlock::Kind::Single) {
            out += "single " + std::to_string(b.first + 1);
        } else {
            out += "pair " + std::to_string(b.first + 1) + " " + std::to_string(b.second + 1);
        }
        out += " -> " + std::to_string(b.value);
        if (!b.certified) out += " uncertified";
        out += '\n';
    }
    out += "total -> " + std::to_string(w.total) + '\n';
    return out;
}

NodalType parse_nodal_type(std::string_view text) {
    std::vector<NodalSummand> pairs;
    for (auto item : detail::split(text, ',')) {
        const auto parts = detail::split(item, '/');
        if (parts.size() != 2) {
            throw Error(ErrorKind::ParseError, "expected a/b, got '" + std::string(item) + "'");
        }
        pairs.push_back({detail::parse_int(parts[0]), detail::parse_int(parts[1])});
    }
    return NodalType(std::move(pairs));
}

std::string to_string(const NodalType& z) {
    std::string out;
    for (std::size_t i = 0; i < z.rank(); ++i) {
        if (i) out += ',';
        out += std::to_string(z[i].a) + "/" + std::to_string(z[i].b);
    }
    return out;
}

Alignment parse_alignment(std::string_view text, std::size_t rank) {
    text = detail::trim(text);
    if (text == "identity") return Alignment::identity(rank);
    if (text == "dual") return Alignment::dual(rank);
    if (text.starts_with("perm:")) {
        std::vector<std::size_t> perm;
        for (auto v : detail::parse_int_list(text.substr(5))) {
            if (v < 1) throw Error(ErrorKind::ParseError, "alignment indices are 1-based");
            perm.push_back(static_cast<std::size_t>(v - 1));
        }
        if (perm.size() != rank) {
            throw Error(ErrorKind::RankMismatch, "alignment has " + std::to_string(perm.size()) +
                                                     " entries, rank is " + std::to_string(rank));
        }
        return Alignment(std::move(perm));
    }
    throw Error(ErrorKind::ParseError, "unknown alignment '" + std::string(text) + "'");
}

}  // namespace slopepanel
