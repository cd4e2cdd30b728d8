#include "slopepanel/cli.hpp"

#include "slopepanel/counting.hpp"
#include "slopepanel/errors.hpp"
#include "slopepanel/model_io.hpp"
#include "slopepanel/nodal.hpp"
#include "slopepanel/parse.hpp"
#include "slopepanel/splitting_type.hpp"
#include "slopepanel/stability.hpp"
#include "slopepanel/variety_model.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace slopepanel {

namespace {

Rational parse_rational(const std::string& text) {
    const auto parts = detail::split(text, '/');
    if (parts.size() == 1) return Rational(detail::parse_int(parts[0]));
    if (parts.size() != 2) throw Error(ErrorKind::ParseError, "expected p/q, got '" + text + "'");
    const auto den = detail::parse_int(parts[1]);
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
    return Rational(detail::parse_int(parts[0]), den);
}

SmoothingPolicy parse_policy(const std::string& text) {
    if (text == "worst") return SmoothingPolicy::Worst;
    if (text == "best") return SmoothingPolicy::Best;
    throw Error(ErrorKind::ParseError, "policy must be worst or best");
}

struct Options {
    std::string out_path;
    std::vector<std::string> types;
    std::string nodal;
    std::size_t m = 1;
    std::string align = "dual";
    bool sequential = false;
    bool witness = false;
    std::string policy = "worst";
    std::size_t max_steps = 16;
    std::string model;
    std::string klass;
    std::string q;
    std::string delta;
    std::int64_t dmin = 1;
    std::int64_t dmax = 0;
};

SplittingType single_type(const Options& o) {
    if (o.types.size() != 1) throw Error(ErrorKind::ParseError, "expected exactly one --type");
    return parse_splitting_type(o.types.front());
}

void cmd_sp(const Options& o, std::ostream& out) {
    const auto t = single_type(o);
    const auto panel = slope_panel(t);
    if (slope(t) < 0) {
        // The panel exists; the ratio does not.
        out << "panel: " << join(panel.entries) << '\n';
        minimal_slope_ratio(t);
    }
    out << "panel: " << join(panel.entries) << "  min_ratio: " << to_string(minimal_slope_ratio(t)) << '\n';
}

void cmd_degbd(const Options& o, std::ostream& out) {
    const auto z = parse_nodal_type(o.nodal);
    out << degbd(z, o.m) << '\n';
    if (o.witness) out << format_witness(sharpness_witness(z, o.m));
}

void cmd_smooth(const Options& o, std::ostream& out) {
    const auto types = admissible_smoothings(parse_nodal_type(o.nodal), o.sequential);
    if (types.empty()) out << "none\n";
    for (const auto& t : types) out << to_string(t) << '\n';
}

void cmd_glue(const Options& o, std::ostream& out) {
    if (o.types.size() != 2) throw Error(ErrorKind::ParseError, "glue needs --type twice");
    const auto t1 = parse_splitting_type(o.types[0]);
    const auto t2 = parse_splitting_type(o.types[1]);
    out << to_string(glue(t1, t2, parse_alignment(o.align, t1.rank()))) << '\n';
}

void cmd_balance(const Options& o, std::ostream& out) {
    const auto t = single_type(o);
    const auto trace = balance(t, o.max_steps, parse_alignment(o.align, t.rank()), parse_policy(o.policy));
    for (std::size_t i = 0; i < trace.states.size(); ++i) {
        out << "step " << i << ": " << to_string(trace.states[i]) << '\n';
    }
    out << "steps: " << trace.steps << '\n';
    out << "copies: " << trace.copies << '\n';
    out << "converged: " << (trace.converged ? "yes" : "no") << '\n';
}

void cmd_esp(const Options& o, std::ostream& out) {
    const auto file = load_model(o.model);
    const auto alpha = detail::parse_int_list(o.klass);
    const auto panel = esp(file.model, alpha);
    out << "esp: " << join(panel.entries) << '\n';
    out << "chamber: " << chamber_of(file.model, alpha) + 1 << '\n';
    out << "degree: " << file.model.degree(alpha) << '\n';
    out << "liberated_bound: " << to_string(liberated_lower_bound(file.model, alpha)) << '\n';
}

void cmd_check(const Options& o, std::ostream& out, int& status) {
    const auto file = load_model(o.model);
    const auto report = validate(file.model);
    for (const auto& v : report.violations) out << "violation: " << v << '\n';
    if (report.ok()) out << "ok\n";
    status = report.ok() ? kExitOk : kExitDomainError;
}

void cmd_count(const Options& o, std::ostream& out) {
    const auto file = load_model(o.model);
    if (!file.counting) throw Error(ErrorKind::InvalidConfig, "model file has no counting block");
    auto cfg = *file.counting;
    if (!o.q.empty()) cfg.q = parse_rational(o.q);
    if (!o.delta.empty()) cfg.delta = parse_rational(o.delta);
    out << format_report_tsv(ratio_check(file.model, cfg, o.dmin, o.dmax));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact calculus of splitting types, nodal degree bounds and curve counts", "slopepanel"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--out", o.out_path, "Write results to FILE instead of standard output");

    auto* sp = app.add_subcommand("sp", "Slope panel and minimal slope ratio of a splitting type");
    sp->add_option("--type", o.types, "Splitting type, e.g. 4,3,3,2")->required();

    auto* db = app.add_subcommand("degbd", "Degree bound of a bundle on the nodal curve");
    db->add_option("--nodal", o.nodal, "Nodal type, e.g. 2/-1,-1/2")->required();
    db->add_option("--m", o.m, "Quotient rank")->required();
    db->add_flag("--witness", o.witness, "Print the block decomposition attaining the bound");

    auto* sm = app.add_subcommand("smooth", "Splitting types admissible on a general smoothing");
    sm->add_option("--nodal", o.nodal, "Nodal type")->required();
    sm->add_flag("--sequential", o.sequential, "Keep only sequential types");

    auto* gl = app.add_subcommand("glue", "Glue two splitting types at a node");
    gl->add_option("--type", o.types, "Splitting type; give twice")
        ->required()
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    gl->add_option("--align", o.align, "dual, identity or perm:i1,i2,...");

    auto* bl = app.add_subcommand("balance", "Worst-case glue-and-smooth balancing trace");
    bl->add_option("--type", o.types, "Splitting type")->required();
    bl->add_option("--align", o.align, "dual, identity or perm:i1,i2,...");
    bl->add_option("--policy", o.policy, "worst or best");
    bl->add_option("--max-steps", o.max_steps, "Round cap");
    bl->add_flag("--sequential", o.sequential, "Accepted for symmetry; balancing always filters sequential types");

    auto* es = app.add_subcommand("esp", "Expected slope panel of a curve class");
    es->add_option("--model", o.model, "Model file")->required();
    es->add_option("--class", o.klass, "Curve class, e.g. 1,0")->required();

    auto* ct = app.add_subcommand("count", "Counting functions N and N^{lib > eps} per degree");
    ct->add_option("--model", o.model, "Model file with a counting block")->required();
    ct->add_option("--dmax", o.dmax, "Largest degree step")->required()->check(CLI::PositiveNumber);
    ct->add_option("--dmin", o.dmin, "Smallest degree step")->check(CLI::PositiveNumber);
    ct->add_option("--q", o.q, "Override q, as p/q");
    ct->add_option("--delta", o.delta, "Override delta, as p/q");

    auto* ck = app.add_subcommand("check", "Validate a model file");
    ck->add_option("--model", o.model, "Model file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::ofstream file_out;
    std::ostream* sink = &out;
    if (!o.out_path.empty()) {
        file_out.open(o.out_path, std::ios::binary);
        if (!file_out) {
            err << "usage error: cannot open " << o.out_path << '\n';
            return kExitUsage;
        }
        sink = &file_out;
    }

    int status = kExitOk;
    try {
        if (sp->parsed()) cmd_sp(o, *sink);
        else if (db->parsed()) cmd_degbd(o, *sink);
        else if (sm->parsed()) cmd_smooth(o, *sink);
        else if (gl->parsed()) cmd_glue(o, *sink);
        else if (bl->parsed()) cmd_balance(o, *sink);
        else if (es->parsed()) cmd_esp(o, *sink);
        else if (ct->parsed()) cmd_count(o, *sink);
        else if (ck->parsed()) cmd_check(o, *sink, status);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError) {
            err << "usage error: " << e.what() << '\n';
            return kExitUsage;
        }
        err << "error: " << e.name() << ": " << e.what() << '\n';
        return kExitDomainError;
    }
    return status;
}

}  // namespace slopepanel
