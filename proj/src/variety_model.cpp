#include "slopepanel/variety_model.hpp"

#include "slopepanel/errors.hpp"

#include <algorithm>
#include <functional>

namespace slopepanel {

namespace {

std::string vec_str(const IntVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out + ")";
}

std::vector<Rational> expand(const Chamber& chamber, const IntVector& alpha) {
    std::vector<Rational> out;
    for (const auto& step : chamber.filtration) {
        out.insert(out.end(), static_cast<std::size_t>(step.rank), step.slope(alpha));
    }
    return out;
}

}  // namespace

bool VarietyModel::in_chamber(std::size_t chamber, const IntVector& alpha) const {
    return in_nef_cone(alpha) && satisfies(chambers.at(chamber).facets, alpha);
}

std::vector<std::string> shape_problems(const VarietyModel& model) {
    std::vector<std::string> out;
    if (model.rho == 0) out.push_back("rho must be positive");
    if (model.dim <= 0) out.push_back("dim must be positive");
    if (model.minus_k.size() != model.rho) out.push_back("minusK must have rho entries");
    for (const auto& f : model.nef_facets) {
        if (f.size() != model.rho) out.push_back("nef facet " + vec_str(f) + " must have rho entries");
    }
    if (model.nef_generators) {
        for (const auto& g : *model.nef_generators) {
            if (g.size() != model.rho) out.push_back("nef generator " + vec_str(g) + " must have rho entries");
        }
    }
    for (std::size_t c = 0; c < model.chambers.size(); ++c) {
        const auto& ch = model.chambers[c];
        const std::string where = "chamber " + std::to_string(c + 1);
        for (const auto& f : ch.facets) {
            if (f.size() != model.rho) out.push_back(where + ": facet " + vec_str(f) + " must have rho entries");
        }
        if (ch.filtration.empty()) out.push_back(where + ": empty filtration");
        for (const auto& step : ch.filtration) {
            if (step.rank <= 0) out.push_back(where + ": filtration ranks must be positive");
            if (step.slope.den <= 0) out.push_back(where + ": slope denominators must be positive");
            if (step.slope.num.size() != model.rho) out.push_back(where + ": slope functional must have rho entries");
        }
    }
    return out;
}

std::size_t chamber_of(const VarietyModel& model, const IntVector& alpha) {
    if (alpha.size() != model.rho) {
        throw Error(ErrorKind::ShapeMismatch, "class " + vec_str(alpha) + " must have " +
                                                  std::to_string(model.rho) + " entries");
    }
    if (!model.in_nef_cone(alpha)) {
        throw Error(ErrorKind::NotInNefCone, "class " + vec_str(alpha) + " is not nef");
    }
    if (model.degree(alpha) <= 0) {
        throw Error(ErrorKind::ZeroDegree, "class " + vec_str(alpha) + " has non-positive anticanonical degree");
    }
    std::optional<std::size_t> first;
    std::vector<Rational> reference;
    for (std::size_t c = 0; c < model.chambers.size(); ++c) {
        if (!model.in_chamber(c, alpha)) continue;
        auto values = expand(model.chambers[c], alpha);
        std::sort(values.begin(), values.end(), std::greater<>());
        if (!first) {
            first = c;
            reference = std::move(values);
        } else if (values != reference) {
            throw Error(ErrorKind::BoundaryMismatch, "chambers " + std::to_string(*first + 1) + " and " +
                                                         std::to_string(c + 1) + " disagree at " + vec_str(alpha));
        }
    }
    if (!first) throw Error(ErrorKind::NoChamber, "no chamber contains " + vec_str(alpha));
    return *first;
}

SlopePanel esp(const VarietyModel& model, const IntVector& alpha) {
    const auto c = chamber_of(model, alpha);
    const Rational mu = Rational(model.degree(alpha), model.dim);
    SlopePanel panel;
    for (const auto& v : expand(model.chambers[c], alpha)) panel.entries.push_back(v / mu);
    std::sort(panel.entries.begin(), panel.entries.end(), std::greater<>());
    return panel;
}

Rational liberated_lower_bound(const VarietyModel& model, const IntVector& alpha) {
    const auto panel = esp(model, alpha);
    return panel.minimal() - Rational(model.dim * model.dim, 2 * model.degree(alpha));
}

ValidationReport validate(const VarietyModel& model) {
    ValidationReport report;
    auto& v = report.violations;
    v = shape_problems(model);
    if (!v.empty()) return report;

    const auto nef = cone_rays(model.nef_facets, model.rho);
    if (!nef.pointed) {
        v.push_back("nef cone contains a line");
        return report;
    }
    for (const auto& r : nef.rays) {
        if (model.degree(r) <= 0) v.push_back("-K is not positive on nef ray " + vec_str(r));
    }
    if (model.nef_generators) {
        for (const auto& g : *model.nef_generators) {
            if (!model.in_nef_cone(g)) v.push_back("generator " + vec_str(g) + " violates a nef facet");
            if (model.degree(g) <= 0) v.push_back("-K is not positive on generator " + vec_str(g));
        }
        for (const auto& r : nef.rays) {
            const bool listed = std::any_of(model.nef_generators->begin(), model.nef_generators->end(),
                                            [&](const IntVector& g) { return matrix_rank({g, r}, model.rho) == 1 &&
                                                                             dot(g, r) > 0; });
            if (!listed) v.push_back("nef ray " + vec_str(r) + " is missing from the generators");
        }
    }
    if (model.chambers.empty()) v.push_back("model has no chambers");

    for (std::size_t c = 0; c < model.chambers.size(); ++c) {
        const auto& ch = model.chambers[c];
        const std::string where = "chamber " + std::to_string(c + 1);

        std::int64_t rank_sum = 0;
        std::vector<Rational> combined(model.rho, Rational(0));
        for (const auto& step : ch.filtration) {
            rank_sum += step.rank;
            for (std::size_t i = 0; i < model.rho; ++i) {
                combined[i] += Rational(step.rank * step.slope.num[i], step.slope.den);
            }
        }
        if (rank_sum != model.dim) {
            v.push_back(where + ": filtration ranks sum to " + std::to_string(rank_sum) + ", expected dim " +
                        std::to_string(model.dim));
        }
        for (std::size_t i = 0; i < model.rho; ++i) {
            if (combined[i] != model.minus_k[i]) {
                v.push_back(where + ": rank-weighted slopes do not add up to -K");
                break;
            }
        }

        auto facets = model.nef_facets;
        facets.insert(facets.end(), ch.facets.begin(), ch.facets.end());
        const auto cone = cone_rays(facets, model.rho);
        if (cone.rays.empty() || (model.rho > 1 && cone.rays.size() < model.rho)) {
            v.push_back(where + ": not full-dimensional");
            continue;
        }
        // Slopes are linear, so checking on the generators covers the chamber.
        for (const auto& r : cone.rays) {
            for (std::size_t k = 0; k < ch.filtration.size(); ++k) {
                const Rational s = ch.filtration[k].slope(r);
                if (s < 0) {
                    v.push_back(where + ": slope of piece " + std::to_string(k + 1) + " is negative on generator " +
                                vec_str(r));
                }
                if (k > 0 && s > ch.filtration[k - 1].slope(r)) {
                    v.push_back(where + ": slopes increase between pieces " + std::to_string(k) + " and " +
                                std::to_string(k + 1) + " on generator " + vec_str(r));
                }
            }
        }
    }

    // Sampled coverage: every nef lattice class of moderate degree must lie
    // in some chamber.
    if (!model.chambers.empty()) {
        std::int64_t sample_degree = 1;
        for (const auto& r : nef.rays) sample_degree = std::max(sample_degree, model.degree(r));
        sample_degree *= 3;
        try {
            for (const auto& alpha : lattice_points_in_slice(model.nef_facets, model.minus_k, sample_degree)) {
                bool covered = false;
                for (std::size_t c = 0; c < model.chambers.size() && !covered; ++c) {
                    covered = model.in_chamber(c, alpha);
                }
                if (!covered) {
                    v.push_back("class " + vec_str(alpha) + " lies in no chamber");
                    break;
                }
            }
        } catch (const Error& e) {
            v.push_back(std::string(e.name()) + ": " + e.what());
        }
    }
    return report;
}

VarietyModel pbundle(std::int64_t n0, std::int64_t m, std::vector<std::int64_t> a_list) {
    if (n0 < 1 || m < 1) throw Error(ErrorKind::InvalidModel, "pbundle needs n0 >= 1 and m >= 1");
    if (static_cast<std::int64_t>(a_list.size()) != m + 1) {
        throw Error(ErrorKind::InvalidModel, "pbundle needs m + 1 twisting degrees");
    }
    std::sort(a_list.begin(), a_list.end(), std::greater<>());
    if (a_list.back() < 0) throw Error(ErrorKind::InvalidModel, "twisting degrees must be non-negative");
    std::int64_t d = 0;
    for (auto a : a_list) d += a;
    if (d > n0) throw Error(ErrorKind::InvalidModel, "pbundle is Fano only when the degrees sum to at most n0");
    const std::int64_t a0 = a_list.front();

    // Degrees on the class x*beta + y*line: relative part x((m+1)a0 - d) + y(m+1),
    // base part x(n0+1).
    const RationalFunctional relative{{(m + 1) * a0 - d, m + 1}, m};
    const RationalFunctional base{{n0 + 1, 0}, n0};
    for (const IntVector& g : {IntVector{1, 0}, IntVector{0, 1}}) {
        if (relative(g) < base(g)) {
            throw Error(ErrorKind::InvalidModel,
                        "pbundle model needs the relative slope to dominate the base slope on the nef cone");
        }
    }

    VarietyModel model;
    model.rho = 2;
    model.dim = n0 + m;
    model.minus_k = {(m + 1) * a0 - d + n0 + 1, m + 1};
    model.nef_facets = {{1, 0}, {0, 1}};
    model.nef_generators = std::vector<IntVector>{{1, 0}, {0, 1}};
    model.chambers.push_back(Chamber{{}, {{m, relative}, {n0, base}}});
    return model;
}

VarietyModel toy_rho1(std::int64_t c, std::int64_t n) {
    if (c <= 0 || n <= 0) throw Error(ErrorKind::InvalidModel, "toy_rho1 needs c > 0 and n > 0");
    VarietyModel model;
    model.rho = 1;
    model.dim = n;
    model.minus_k = {c};
    model.nef_facets = {{1}};
    model.nef_generators = std::vector<IntVector>{{1}};
    model.chambers.push_back(Chamber{{}, {{n, RationalFunctional{{c}, n}}}});
    return model;
}

VarietyModel toy_rho2() {
    const RationalFunctional first{{2, 1}, 3};
    const RationalFunctional second{{1, 2}, 3};
    VarietyModel model;
    model.rho = 2;
    model.dim = 2;
    model.minus_k = {1, 1};
    model.nef_facets = {{1, 0}, {0, 1}};
    model.nef_generators = std::vector<IntVector>{{1, 0}, {0, 1}};
    model.chambers.push_back(Chamber{{{1, -1}}, {{1, first}, {1, second}}});
    model.chambers.push_back(Chamber{{{-1, 1}}, {{1, second}, {1, first}}});
    return model;
}

}  // namespace slopepanel
