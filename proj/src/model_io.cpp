#include "slopepanel/model_io.hpp"

#include "slopepanel/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace slopepanel {

using nlohmann::json;

namespace {

struct Reader {
    ErrorKind kind;

    [[noreturn]] void fail(const std::string& msg) const { throw Error(kind, msg); }

    void only_fields(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) const {
        if (!obj.is_object()) fail(where + " must be an object");
        const std::set<std::string> names(allowed.begin(), allowed.end());
        for (const auto& item : obj.items()) {
            if (!names.count(item.key())) fail("unknown field '" + item.key() + "' in " + where);
        }
    }

    const json& field(const json& obj, const std::string& where, const char* name) const {
        if (!obj.contains(name)) fail(where + " is missing '" + name + "'");
        return obj.at(name);
    }

    std::int64_t integer(const json& v, const std::string& what) const {
        if (!v.is_number_integer()) fail(what + " must be an integer");
        return v.get<std::int64_t>();
    }

    IntVector int_vector(const json& v, const std::string& what) const {
        if (!v.is_array()) fail(what + " must be an integer array");
        IntVector out;
        for (const auto& x : v) out.push_back(integer(x, what));
        return out;
    }

    std::vector<IntVector> int_matrix(const json& v, const std::string& what) const {
        if (!v.is_array()) fail(what + " must be an array of integer arrays");
        std::vector<IntVector> out;
        for (const auto& row : v) out.push_back(int_vector(row, what));
        return out;
    }

    Rational ratio(const json& obj, const std::string& where, const char* num, const char* den) const {
        const auto n = integer(field(obj, where, num), where + "." + num);
        const auto d = integer(field(obj, where, den), where + "." + den);
        if (d <= 0) fail(where + "." + den + " must be positive");
        return Rational(n, d);
    }
};

Chamber parse_chamber(const Reader& rd, const json& obj, const std::string& where) {
    rd.only_fields(obj, where, {"facets", "filtration"});
    Chamber ch;
    ch.facets = rd.int_matrix(rd.field(obj, where, "facets"), where + ".facets");
    const auto& filt = rd.field(obj, where, "filtration");
    if (!filt.is_array()) rd.fail(where + ".filtration must be an array");
    for (std::size_t k = 0; k < filt.size(); ++k) {
        const std::string at = where + ".filtration[" + std::to_string(k) + "]";
        rd.only_fields(filt[k], at, {"rank", "slope_num", "slope_den"});
        FiltrationStep step;
        step.rank = rd.integer(rd.field(filt[k], at, "rank"), at + ".rank");
        step.slope.num = rd.int_vector(rd.field(filt[k], at, "slope_num"), at + ".slope_num");
        step.slope.den = rd.integer(rd.field(filt[k], at, "slope_den"), at + ".slope_den");
        ch.filtration.push_back(std::move(step));
    }
    return ch;
}

CountingConfig parse_counting(const json& obj, const VarietyModel& model) {
    const Reader rd{ErrorKind::InvalidConfig};
    const std::string where = "counting";
    rd.only_fields(obj, where,
                   {"q_num", "q_den", "br", "M", "beta", "outside_xi", "eps", "delta_num", "delta_den"});
    CountingConfig cfg;
    cfg.q = rd.ratio(obj, where, "q_num", "q_den");
    cfg.br = rd.integer(rd.field(obj, where, "br"), "counting.br");
    cfg.m_cap = rd.integer(rd.field(obj, where, "M"), "counting.M");
    cfg.beta = rd.int_vector(rd.field(obj, where, "beta"), "counting.beta");
    cfg.outside_xi = rd.integer(rd.field(obj, where, "outside_xi"), "counting.outside_xi");
    cfg.delta = rd.ratio(obj, where, "delta_num", "delta_den");

    const auto& eps = rd.field(obj, where, "eps");
    if (eps.is_object() && eps.contains("table")) {
        rd.only_fields(eps, "counting.eps", {"table"});
        std::vector<std::pair<std::int64_t, Rational>> entries;
        const auto& t = eps.at("table");
        if (!t.is_array()) rd.fail("counting.eps.table must be an array");
        for (const auto& row : t) {
            const auto v = rd.int_vector(row, "counting.eps.table row");
            if (v.size() != 3 || v[2] <= 0) rd.fail("counting.eps.table rows are [d, num, den] with den > 0");
            entries.emplace_back(v[0], Rational(v[1], v[2]));
        }
        cfg.eps = EpsSchedule::table(std::move(entries));
    } else {
        rd.only_fields(eps, "counting.eps", {"c_num", "c_den", "p_num", "p_den"});
        cfg.eps = EpsSchedule::power(rd.ratio(eps, "counting.eps", "c_num", "c_den"),
                                     rd.ratio(eps, "counting.eps", "p_num", "p_den"));
    }
    check_config(model, cfg);
    return cfg;
}

}  // namespace

ModelFile parse_model(const json& doc) {
    const Reader rd{ErrorKind::InvalidModel};
    const std::string where = "model";
    rd.only_fields(doc, where, {"dim", "rho", "minusK", "nef", "chambers", "counting"});

    ModelFile file;
    auto& m = file.model;
    m.dim = rd.integer(rd.field(doc, where, "dim"), "dim");
    const auto rho = rd.integer(rd.field(doc, where, "rho"), "rho");
    if (rho <= 0) rd.fail("rho must be positive");
    m.rho = static_cast<std::size_t>(rho);
    m.minus_k = rd.int_vector(rd.field(doc, where, "minusK"), "minusK");

    const auto& nef = rd.field(doc, where, "nef");
    rd.only_fields(nef, "nef", {"facets", "generators"});
    m.nef_facets = rd.int_matrix(rd.field(nef, "nef", "facets"), "nef.facets");
    if (nef.contains("generators")) m.nef_generators = rd.int_matrix(nef.at("generators"), "nef.generators");

    const auto& chambers = rd.field(doc, where, "chambers");
    if (!chambers.is_array()) rd.fail("chambers must be an array");
    for (std::size_t c = 0; c < chambers.size(); ++c) {
        m.chambers.push_back(parse_chamber(rd, chambers[c], "chambers[" + std::to_string(c) + "]"));
    }

    if (const auto problems = shape_problems(m); !problems.empty()) rd.fail(problems.front());
    if (doc.contains("counting")) file.counting = parse_counting(doc.at("counting"), m);
    return file;
}

ModelFile parse_model_text(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, std::string("model is not valid JSON: ") + e.what());
    }
    return parse_model(doc);
}

ModelFile load_model(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read model file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_model_text(buf.str());
}

json to_json(const VarietyModel& model) {
    json doc;
    doc["dim"] = model.dim;
    doc["rho"] = model.rho;
    doc["minusK"] = model.minus_k;
    doc["nef"] = {{"facets", model.nef_facets}};
    if (model.nef_generators) doc["nef"]["generators"] = *model.nef_generators;
    doc["chambers"] = json::array();
    for (const auto& ch : model.chambers) {
        json jc;
        jc["facets"] = ch.facets;
        jc["filtration"] = json::array();
        for (const auto& step : ch.filtration) {
            jc["filtration"].push_back({{"rank", step.rank}, {"slope_num", step.slope.num}, {"slope_den", step.slope.den}});
        }
        doc["chambers"].push_back(std::move(jc));
    }
    return doc;
}

namespace {

std::int64_t to_i64(const Integer& x) { return x.convert_to<std::int64_t>(); }

}  // namespace

json to_json(const CountingConfig& cfg) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    json doc;
    doc["q_num"] = to_i64(numerator(cfg.q));
    doc["q_den"] = to_i64(denominator(cfg.q));
    doc["br"] = cfg.br;
    doc["M"] = cfg.m_cap;
    doc["beta"] = cfg.beta;
    doc["outside_xi"] = cfg.outside_xi;
    if (const auto* t = std::get_if<EpsSchedule::Table>(&cfg.eps.form())) {
        json rows = json::array();
        for (const auto& [d, v] : t->entries) rows.push_back({d, to_i64(numerator(v)), to_i64(denominator(v))});
        doc["eps"] = {{"table", rows}};
    } else {
        const auto& p = std::get<EpsSchedule::Power>(cfg.eps.form());
        doc["eps"] = {{"c_num", to_i64(numerator(p.c))}, {"c_den", to_i64(denominator(p.c))},
                      {"p_num", to_i64(numerator(p.p))}, {"p_den", to_i64(denominator(p.p))}};
    }
    doc["delta_num"] = to_i64(numerator(cfg.delta));
    doc["delta_den"] = to_i64(denominator(cfg.delta));
    return doc;
}

}  // namespace slopepanel
