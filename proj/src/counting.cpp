#include "slopepanel/counting.hpp"

#include "slopepanel/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace slopepanel {

EpsSchedule EpsSchedule::power(Rational c, Rational p) {
    if (c <= 0) throw Error(ErrorKind::InvalidConfig, "eps coefficient must be positive");
    if (p <= 0) throw Error(ErrorKind::InvalidConfig, "eps exponent must be positive");
    return EpsSchedule(Power{std::move(c), std::move(p)});
}

EpsSchedule EpsSchedule::table(std::vector<std::pair<std::int64_t, Rational>> entries) {
    if (entries.empty()) throw Error(ErrorKind::InvalidConfig, "eps table is empty");
    std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (entries[i].first == entries[i - 1].first) {
            throw Error(ErrorKind::InvalidConfig, "eps table repeats d = " + std::to_string(entries[i].first));
        }
        if (entries[i].second > entries[i - 1].second) {
            throw Error(ErrorKind::InvalidConfig, "eps table must be non-increasing in d");
        }
    }
    return EpsSchedule(Table{std::move(entries)});
}

namespace {

const Rational& table_value(const EpsSchedule::Table& t, std::int64_t d) {
    auto it = std::upper_bound(t.entries.begin(), t.entries.end(), d,
                               [](std::int64_t v, const auto& e) { return v < e.first; });
    if (it == t.entries.begin()) {
        throw Error(ErrorKind::InvalidConfig, "eps table has no entry at or below d = " + std::to_string(d));
    }
    return std::prev(it)->second;
}

}  // namespace

bool EpsSchedule::exceeded_by(const Rational& x, std::int64_t d) const {
    if (const auto* t = std::get_if<Table>(&form_)) return x > table_value(*t, d);
    const auto& pw = std::get<Power>(form_);
    if (x <= 0) return false;
    // x > c d^(-a/b)  <=>  (x/c)^b d^a > 1
    const auto a = boost::multiprecision::numerator(pw.p).convert_to<unsigned>();
    const auto b = boost::multiprecision::denominator(pw.p).convert_to<unsigned>();
    return pow(x / pw.c, b) * pow(Rational(d), a) > 1;
}

std::string EpsSchedule::describe(std::int64_t d) const {
    if (const auto* t = std::get_if<Table>(&form_)) return to_string(table_value(*t, d));
    const auto& pw = std::get<Power>(form_);
    if (is_integer(pw.p)) {
        return to_string(pw.c / pow(Rational(d), boost::multiprecision::numerator(pw.p).convert_to<unsigned>()));
    }
    return to_string(pw.c) + "*" + std::to_string(d) + "^(-" + to_string(pw.p) + ")";
}

void check_config(const VarietyModel& model, const CountingConfig& cfg) {
    auto fail = [](const std::string& msg) { throw Error(ErrorKind::InvalidConfig, msg); };
    if (cfg.q <= 1) fail("q must exceed 1");
    if (cfg.br < 0) fail("br must be non-negative");
    if (cfg.m_cap < 0) fail("M must be non-negative");
    if (cfg.br > cfg.m_cap) fail("br exceeds the bound M");
    if (cfg.outside_xi < 0 || cfg.outside_xi > cfg.m_cap) fail("outside_xi must lie in 0..M");
    if (cfg.beta.size() != model.rho) fail("beta must have rho entries");
    if (cfg.delta <= 0 || cfg.delta >= 1) fail("delta must lie strictly between 0 and 1");
}

std::int64_t r_min(const VarietyModel& model) {
    std::int64_t g = 0;
    for (auto c : model.minus_k) g = std::gcd(g, c);
    if (g == 0) throw Error(ErrorKind::ZeroFunctional, "-K is the zero functional");
    return g;
}

std::vector<IntVector> lattice_slice(const VarietyModel& model, std::int64_t bound) {
    return lattice_points_in_slice(model.nef_facets, model.minus_k, bound);
}

std::int64_t xi(const VarietyModel& model, const CountingConfig& cfg, const IntVector& alpha) {
    IntVector shifted = alpha;
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] -= cfg.beta[i];
    return model.in_nef_cone(shifted) ? cfg.br : cfg.outside_xi;
}

namespace {

struct ClassData {
    std::int64_t degree;
    std::int64_t weight;  // xi
    Rational bound;       // liberated_lower_bound, only filled when needed
};

// Classes of degree <= bound, plus q^k for k = 0..bound.
struct SliceTable {
    std::vector<ClassData> classes;
    std::vector<Rational> q_powers;
};

SliceTable build_table(const VarietyModel& model, const CountingConfig& cfg, std::int64_t max_degree,
                       bool with_bounds) {
    check_config(model, cfg);
    SliceTable table;
    for (const auto& alpha : lattice_slice(model, max_degree)) {
        ClassData c{model.degree(alpha), xi(model, cfg, alpha), Rational(0)};
        if (with_bounds) c.bound = liberated_lower_bound(model, alpha);
        table.classes.push_back(std::move(c));
    }
    table.q_powers.reserve(static_cast<std::size_t>(max_degree) + 1);
    Rational p = 1;
    for (std::int64_t k = 0; k <= max_degree; ++k) {
        table.q_powers.push_back(p);
        p *= cfg.q;
    }
    return table;
}

void check_d(std::int64_t d) {
    if (d < 1) throw Error(ErrorKind::OutOfRange, "d must be positive");
}

}  // namespace

Rational count_N(const VarietyModel& model, const CountingConfig& cfg, std::int64_t d) {
    check_d(d);
    const auto table = build_table(model, cfg, d * r_min(model), false);
    Rational sum = 0;
    for (const auto& c : table.classes) sum += c.weight * table.q_powers[static_cast<std::size_t>(c.degree)];
    return sum;
}

Rational count_N_liberated(const VarietyModel& model, const CountingConfig& cfg, std::int64_t d) {
    check_d(d);
    const auto table = build_table(model, cfg, d * r_min(model), true);
    Rational sum = 0;
    for (const auto& c : table.classes) {
        if (cfg.eps.exceeded_by(c.bound, d)) sum += c.weight * table.q_powers[static_cast<std::size_t>(c.degree)];
    }
    return sum;
}

CountReport ratio_check(const VarietyModel& model, const CountingConfig& cfg, std::int64_t d_min,
                        std::int64_t d_max) {
    check_d(d_min);
    if (d_max < d_min) throw Error(ErrorKind::OutOfRange, "empty degree range");
    const std::int64_t step = r_min(model);
    auto table = build_table(model, cfg, d_max * step, true);

    // Sorting by certified bound turns "bound > eps(d)" into a suffix.
    std::stable_sort(table.classes.begin(), table.classes.end(),
                     [](const ClassData& x, const ClassData& y) { return x.bound < y.bound; });

    CountReport report;
    report.delta = cfg.delta;
    const Rational threshold = Rational(1) - cfg.delta;
    for (std::int64_t d = d_min; d <= d_max; ++d) {
        const auto first_certified = std::partition_point(
            table.classes.begin(), table.classes.end(),
            [&](const ClassData& c) { return !cfg.eps.exceeded_by(c.bound, d); });
        const auto cutoff = static_cast<std::size_t>(first_certified - table.classes.begin());

        CountRow row;
        row.d = d;
        for (std::size_t i = 0; i < table.classes.size(); ++i) {
            const auto& c = table.classes[i];
            if (c.degree > d * step) continue;
            const Rational term = c.weight * table.q_powers[static_cast<std::size_t>(c.degree)];
            ++row.points;
            row.n += term;
            if (i >= cutoff) {
                ++row.liberated;
                row.n_liberated += term;
            }
        }
        if (row.n != 0) row.ratio = row.n_liberated / row.n;
        report.rows.push_back(std::move(row));
    }

    for (auto it = report.rows.rbegin(); it != report.rows.rend(); ++it) {
        if (!it->ratio || !(*it->ratio > threshold)) break;
        report.d0 = it->d;
    }
    return report;
}

std::string format_report_tsv(const CountReport& report) {
    std::string out;
    out += "# weights q^(-K.alpha); N over nef classes with -K.alpha <= d*r\n";
    out += "# delta\t" + to_string(report.delta) + "\n";
    out += "d\tpoints\tliberated\tN\tN_lib\tratio\n";
    for (const auto& row : report.rows) {
        out += std::to_string(row.d) + '\t' + std::to_string(row.points) + '\t' + std::to_string(row.liberated) +
               '\t' + to_string(row.n) + '\t' + to_string(row.n_liberated) + '\t' +
               (row.ratio ? to_string(*row.ratio) : std::string("NA")) + '\n';
    }
    out += "# d0\t" + (report.d0 ? std::to_string(*report.d0) : std::string("none")) + "\n";
    return out;
}

}  // namespace slopepanel
