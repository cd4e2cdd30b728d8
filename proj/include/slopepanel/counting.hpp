#pragma once

#include "slopepanel/polyhedral.hpp"
#include "slopepanel/rational.hpp"
#include "slopepanel/variety_model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace slopepanel {

/// Liberation threshold eps(d), either c * d^(-p) or a step table.
class EpsSchedule {
public:
    struct Power {
        Rational c;
        Rational p;
    };
    /// (d, value) pairs; eps(d) is the value of the last entry with key <= d.
    struct Table {
        std::vector<std::pair<std::int64_t, Rational>> entries;
    };

    static EpsSchedule power(Rational c, Rational p);
    static EpsSchedule table(std::vector<std::pair<std::int64_t, Rational>> entries);

    /// Exact test x > eps(d); d^(-p) is never rounded.
    bool exceeded_by(const Rational& x, std::int64_t d) const;

    /// Human-readable value: exact for tables and integral exponents,
    /// otherwise symbolic (`c*d^(-p)`).
    std::string describe(std::int64_t d) const;

    const std::variant<Power, Table>& form() const noexcept { return form_; }

private:
    explicit EpsSchedule(std::variant<Power, Table> form) : form_(std::move(form)) {}
    std::variant<Power, Table> form_;
};

struct CountingConfig {
    Rational q;
    std::int64_t br = 1;
    std::int64_t m_cap = 1;
    IntVector beta;
    std::int64_t outside_xi = 0;
    EpsSchedule eps = EpsSchedule::power(1, 1);
    Rational delta;
};

/// Throws InvalidConfig when `cfg` violates its invariants for `model`.
void check_config(const VarietyModel& model, const CountingConfig& cfg);

/// Minimal positive anticanonical degree on the lattice: gcd of -K.
std::int64_t r_min(const VarietyModel& model);

/// Nef lattice classes with 0 < <-K, alpha> <= bound, lexicographic.
std::vector<IntVector> lattice_slice(const VarietyModel& model, std::int64_t bound);

/// br on the translate beta + Nef, outside_xi elsewhere.
std::int64_t xi(const VarietyModel& model, const CountingConfig& cfg, const IntVector& alpha);

/// Sum of xi(alpha) q^<-K, alpha> over nef classes of degree <= d * r_min.
Rational count_N(const VarietyModel& model, const CountingConfig& cfg, std::int64_t d);

/// Same sum over classes whose liberated_lower_bound exceeds eps(d).
Rational count_N_liberated(const VarietyModel& model, const CountingConfig& cfg, std::int64_t d);

struct CountRow {
    std::int64_t d = 0;
    std::size_t points = 0;
    std::size_t liberated = 0;
    Rational n;
    Rational n_liberated;
    std::optional<Rational> ratio;  // empty when N = 0
};

struct CountReport {
    std::vector<CountRow> rows;
    Rational delta;
    /// Smallest d such that every row from d on has ratio > 1 - delta.
    std::optional<std::int64_t> d0;
};

CountReport ratio_check(const VarietyModel& model, const CountingConfig& cfg, std::int64_t d_min,
                        std::int64_t d_max);

/// Comment header, then `d points liberated N N_lib ratio` rows
/// (tab-separated), then a `# d0` trailer.
std::string format_report_tsv(const CountReport& report);

}  // namespace slopepanel
