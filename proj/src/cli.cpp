#include "macq/cli.hpp"

#include "macq/error.hpp"
#include "macq/graphs.hpp"
#include "macq/json_io.hpp"
#include "macq/macdonald.hpp"
#include "macq/parallel.hpp"
#include "macq/sweeps.hpp"
#include "macq/symfunc.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iomanip>
#include <ostream>

namespace macq::cli {

namespace {

enum class Format { text, json, latex };

struct Options {
    Format format = Format::text;
    int threads = 0;
    std::string partitions;
    std::string basis = "m";
    std::string route;
    std::string graph_path;
    std::string spec = "1,q";
    std::string suite;
    int s = 0;
    int max_size = 4;
    bool list = false;
};

std::string join(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + ")";
}

std::string qsym_text(const QSymExpansion& f) {
    if (f.coeffs.empty()) return "0";
    json j = to_json(f);
    std::string out;
    for (const auto& [key, value] : j.at("coeffs").items()) {
        if (!out.empty()) out += '\n';
        out += "F" + key + ": " + value.get<std::string>();
    }
    return out;
}

void emit_symfunc(std::ostream& out, Format format, const SymFunc& f, const json& header) {
    switch (format) {
    case Format::text: out << f.to_string() << '\n'; break;
    case Format::latex: out << f.to_latex() << '\n'; break;
    case Format::json: {
        json j = header;
        j.update(to_json(f));
        out << j.dump() << '\n';
        break;
    }
    }
}

void emit_poly(std::ostream& out, Format format, const MPoly& p, json header) {
    switch (format) {
    case Format::text: out << p.to_string() << '\n'; break;
    case Format::latex: out << p.to_latex() << '\n'; break;
    case Format::json:
        header["value"] = to_json(p);
        header["string"] = p.to_string();
        out << header.dump() << '\n';
        break;
    }
}

/// Coefficient-wise diff of two monomial expansions, as JSON.
json diff(const SymFunc& a, const SymFunc& b, const char* name_a, const char* name_b) {
    json rows = json::array();
    std::vector<Partition> keys;
    for (const auto& [p, c] : a.coeffs) keys.push_back(p);
    for (const auto& [p, c] : b.coeffs) keys.push_back(p);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (const Partition& p : keys) {
        MPoly x = a.coefficient(p), y = b.coefficient(p);
        if (x != y) rows.push_back({{"key", to_string(a.basis) + p.to_string()}, {name_a, x.to_string()}, {name_b, y.to_string()}});
    }
    return rows;
}

SymFunc in_requested_basis(const SymFunc& f, const std::string& basis) {
    if (basis == "m") return to_monomial(f);
    if (basis == "s") return to_schur(f);
    throw Error(ErrorKind::InvalidInput, "basis must be m or s, got '" + basis + "'");
}

// -- verbs -------------------------------------------------------------------

int cmd_macdonald(const Options& o, std::ostream& out) {
    CumulantProblem problem = CumulantProblem::parse(o.partitions);
    if (problem.r() != 1) throw Error(ErrorKind::InvalidInput, "macdonald takes a single partition");
    if (o.basis != "m" && o.basis != "s" && o.basis != "F")
        throw Error(ErrorKind::InvalidInput, "basis must be m, s or F");
    const Partition& lambda = problem.partitions().front();
    json header = {{"partition", to_json(lambda)}};
    if (o.basis == "F") {
        QSymExpansion f = cumulant_qsym(problem);
        if (o.format == Format::json) {
            json j = header;
            j.update(to_json(f));
            out << j.dump() << '\n';
        } else {
            out << qsym_text(f) << '\n';
        }
        return kOk;
    }
    emit_symfunc(out, o.format, in_requested_basis(haglund(lambda), o.basis), header);
    return kOk;
}

int cmd_cumulant(const Options& o, std::ostream& out) {
    CumulantProblem problem = CumulantProblem::parse(o.partitions);
    if (o.basis != "m" && o.basis != "s") throw Error(ErrorKind::InvalidInput, "basis must be m or s");
    const std::string route = o.route.empty() ? "comb" : o.route;
    if (route != "def" && route != "comb" && route != "both")
        throw Error(ErrorKind::InvalidInput, "route must be def, comb or both");
    json header = {{"problem", to_json(problem)}};
    if (route == "both") {
        SymFunc def = in_requested_basis(cumulant_by_definition(problem), o.basis);
        SymFunc comb = in_requested_basis(cumulant_combinatorial(problem), o.basis);
        if (def != comb) {
            json report = header;
            report["mismatch"] = diff(def, comb, "def", "comb");
            out << report.dump() << '\n';
            return kMismatch;
        }
        emit_symfunc(out, o.format, def, header);
        return kOk;
    }
    SymFunc f = route == "def" ? cumulant_by_definition(problem) : cumulant_combinatorial(problem);
    emit_symfunc(out, o.format, in_requested_basis(f, o.basis), header);
    return kOk;
}

int cmd_hook_kostka(const Options& o, std::ostream& out) {
    CumulantProblem problem = CumulantProblem::parse(o.partitions);
    if (o.s < 0 || o.s >= problem.n())
        throw Error(ErrorKind::InvalidInput, "s must lie in [0, " + std::to_string(problem.n() - 1) + "]");
    emit_poly(out, o.format, hook_kostka(problem, o.s), {{"problem", to_json(problem)}, {"s", o.s}});
    return kOk;
}

int cmd_fully_colored(const Options& o, std::ostream& out) {
    CumulantProblem parsed = CumulantProblem::parse(o.partitions);
    if (parsed.r() != 1) throw Error(ErrorKind::InvalidInput, "fully-colored takes a single partition");
    const Partition& mu = parsed.partitions().front();
    emit_symfunc(out, o.format, in_requested_basis(fully_colored(mu), o.basis), {{"partition", to_json(mu)}});
    return kOk;
}

int cmd_tutte(const Options& o, std::ostream& out) {
    Multigraph g = load_multigraph(o.graph_path);
    if (o.spec != "1,q" && o.spec != "1,1" && o.spec != "xy")
        throw Error(ErrorKind::InvalidInput, "spec must be 1,q or 1,1 or xy");
    TuttePolynomial t = tutte(g);
    json header = {{"graph", to_json(g)}, {"spec", o.spec}};
    if (o.spec == "xy") {
        if (o.format == Format::json) {
            header["value"] = to_json(t.xy);
            header["string"] = t.to_string();
            out << header.dump() << '\n';
        } else {
            out << t.to_string() << '\n';
        }
        return kOk;
    }
    MPoly value = o.spec == "1,q" ? t.at(MPoly(1), MPoly::q()) : t.at(MPoly(1), MPoly(1));
    emit_poly(out, o.format, value, header);
    return kOk;
}

int cmd_inversion_poly(const Options& o, std::ostream& out) {
    Multigraph g = load_multigraph(o.graph_path);
    const std::string route = o.route.empty() ? "tree" : o.route;
    const std::vector<std::pair<std::string, std::function<MPoly()>>> routes = {
        {"tree", [&] { return inversion_poly(g); }},
        {"tutte", [&] { return tutte_at_1q(g); }},
        {"recursive", [&] { return inversion_poly_recursive(g); }},
        {"cumulant", [&] { return g.connected() ? tutte_cumulant_form(g) : MPoly(); }},
    };
    if (route != "all") {
        for (const auto& [name, fn] : routes)
            if (name == route) {
                emit_poly(out, o.format, fn(), {{"graph", to_json(g)}, {"route", name}});
                return kOk;
            }
        throw Error(ErrorKind::InvalidInput, "route must be tree, tutte, recursive, cumulant or all");
    }
    std::vector<MPoly> values;
    json report = {{"graph", to_json(g)}, {"routes", json::object()}};
    for (const auto& [name, fn] : routes) {
        values.push_back(fn());
        report["routes"][name] = values.back().to_string();
    }
    bool agree = std::all_of(values.begin(), values.end(), [&](const MPoly& v) { return v == values.front(); });
    if (o.format == Format::json || !agree) {
        report["agree"] = agree;
        out << report.dump() << '\n';
    } else {
        for (std::size_t k = 0; k < routes.size(); ++k)
            out << routes[k].first << ": "
                << (o.format == Format::latex ? values[k].to_latex() : values[k].to_string()) << '\n';
    }
    return agree ? kOk : kMismatch;
}

int cmd_gparking(const Options& o, std::ostream& out) {
    Multigraph g = load_multigraph(o.graph_path);
    auto all = gparking_enumerate(g);
    if (o.format == Format::json) {
        json j = {{"graph", to_json(g)}, {"generating_function", to_json(parking_gen(g))}};
        if (o.list) {
            j["parking_functions"] = json::array();
            for (const auto& f : all) j["parking_functions"].push_back({{"values", f.values}, {"weight", parking_weight(g, f)}});
        }
        out << j.dump() << '\n';
        return kOk;
    }
    if (o.list)
        for (const auto& f : all) out << join(f.values) << " weight " << parking_weight(g, f) << '\n';
    MPoly p = parking_gen(g);
    out << (o.format == Format::latex ? p.to_latex() : p.to_string()) << '\n';
    return kOk;
}

int cmd_sandpile(const Options& o, std::ostream& out) {
    Multigraph g = load_multigraph(o.graph_path);
    auto all = sandpile_recurrent(g);
    if (o.format == Format::json) {
        json j = {{"graph", to_json(g)}, {"generating_function", to_json(sandpile_level_gen(g))}};
        if (o.list) {
            j["recurrent"] = json::array();
            for (const auto& u : all) j["recurrent"].push_back({{"chips", u.chips}, {"level", level(g, u)}});
        }
        out << j.dump() << '\n';
        return kOk;
    }
    if (o.list)
        for (const auto& u : all) out << join(u.chips) << " level " << level(g, u) << '\n';
    MPoly p = sandpile_level_gen(g);
    out << (o.format == Format::latex ? p.to_latex() : p.to_string()) << '\n';
    return kOk;
}

// -- verify ------------------------------------------------------------------

struct Row {
    std::string label;
    bool pass = false;
    std::string note;
};

std::vector<Row> suite_axioms(int max_size) {
    std::vector<Row> rows;
    for (int n = 1; n <= max_size; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            AxiomReport r = verify_axioms(lambda);
            rows.push_back({lambda.to_string(), r.ok(), r.detail});
        }
    return rows;
}

std::vector<Row> suite_main(int max_size) {
    auto problems = problems_up_to(3, max_size);
    return parallel_map<Row>(problems.size(), [&](std::size_t k) {
        const auto& p = problems[k];
        try {
            bool same = cumulant_by_definition(p) == cumulant_combinatorial(p);
            return Row{p.to_string(), same, same ? "" : "routes differ"};
        } catch (const Error& e) {
            return Row{p.to_string(), false, e.what()};
        }
    });
}

std::vector<Row> suite_hooks(int max_size) {
    auto problems = problems_up_to(3, max_size);
    return parallel_map<Row>(problems.size(), [&](std::size_t k) {
        const auto& p = problems[k];
        SymFunc schur = to_schur(cumulant_by_definition(p));
        for (int s = 0; s < p.n(); ++s) {
            MPoly expected = schur.coefficient(hook(p.n(), s));
            MPoly got = hook_kostka(p, s);
            if (got != expected)
                return Row{p.to_string(), false, "s=" + std::to_string(s) + ": " + got.to_string() + " vs " + expected.to_string()};
            MPoly previous = s > 0 ? hook_kostka(p, s - 1) : MPoly();
            if (hook_kostka_all_boxes(p, s) != got + previous)
                return Row{p.to_string(), false, "s=" + std::to_string(s) + ": relation fails"};
        }
        return Row{p.to_string(), true, ""};
    });
}

std::vector<Row> suite_graphs(int max_size) {
    std::vector<Multigraph> graphs;
    for (auto& g : multigraphs_up_to(max_size, max_size + 2))
        if (g.connected()) graphs.push_back(std::move(g));
    return parallel_map<Row>(graphs.size(), [&](std::size_t k) {
        const Multigraph& g = graphs[k];
        std::string label = to_json(g).at("edges").dump();
        MPoly tree = inversion_poly(g);
        bool ok = tree == tutte_at_1q(g) && tree == inversion_poly_recursive(g) && tree == tutte_cumulant_form(g) &&
                  tree == parking_gen(g) && tree == sandpile_level_gen(g);
        return Row{std::to_string(g.vertex_count()) + " " + label, ok, ok ? "" : "routes differ"};
    });
}

int cmd_verify(const Options& o, std::ostream& out) {
    if (o.max_size < 1 || o.max_size > 8) throw Error(ErrorKind::InvalidInput, "max-size must be between 1 and 8");
    std::vector<Row> rows;
    if (o.suite == "axioms") rows = suite_axioms(o.max_size);
    else if (o.suite == "main") rows = suite_main(o.max_size);
    else if (o.suite == "hooks") rows = suite_hooks(o.max_size);
    else if (o.suite == "graphs") rows = suite_graphs(o.max_size);
    else throw Error(ErrorKind::InvalidInput, "suite must be axioms, main, hooks or graphs");

    std::size_t failures = 0;
    json cases = json::array();
    for (const Row& r : rows) {
        failures += r.pass ? 0 : 1;
        if (o.format == Format::json) cases.push_back({{"case", r.label}, {"pass", r.pass}, {"note", r.note}});
        else out << (r.pass ? "PASS  " : "FAIL  ") << r.label << (r.note.empty() ? "" : "  " + r.note) << '\n';
    }
    if (o.format == Format::json)
        out << json{{"suite", o.suite}, {"max_size", o.max_size}, {"cases", cases}, {"failures", failures}}.dump() << '\n';
    else
        out << o.suite << ": " << rows.size() - failures << "/" << rows.size() << " passed\n";
    return failures == 0 ? kOk : kMismatch;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Macdonald cumulants, graph polynomials and symmetric functions", "macq"};
    app.require_subcommand(1);
    Options o;
    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "latex"}))
        ->capture_default_str();
    app.add_option("--threads", o.threads, "Worker threads (default: MACQ_THREADS or all cores)")->check(CLI::NonNegativeNumber);

    auto* macdonald = app.add_subcommand("macdonald", "Transformed Macdonald polynomial from Haglund's formula");
    macdonald->add_option("-l,--lambda", o.partitions, "Partition, e.g. 2,1")->required();
    macdonald->add_option("--basis", o.basis, "m, s or F")->capture_default_str();

    auto* cumulant = app.add_subcommand("cumulant", "Macdonald cumulant of several partitions");
    cumulant->add_option("-l,--lambda", o.partitions, "Partitions, e.g. \"2,1;1,1\"")->required();
    cumulant->add_option("--basis", o.basis, "m or s")->capture_default_str();
    cumulant->add_option("--route", o.route, "def, comb or both")->default_str("comb");

    auto* hooks = app.add_subcommand("hook-kostka", "q,t-Kostka coefficient at the hook (n-s,1^s)");
    hooks->add_option("-l,--lambda", o.partitions, "Partitions, e.g. \"1;1;1\"")->required();
    hooks->add_option("-s", o.s, "Hook leg length")->required();

    auto* colored = app.add_subcommand("fully-colored", "Fully colored Macdonald polynomial");
    colored->add_option("-m,--mu", o.partitions, "Partition, e.g. 2,2")->required();
    colored->add_option("--basis", o.basis, "m or s")->capture_default_str();

    auto* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial of a multigraph");
    tutte_cmd->add_option("-g,--graph", o.graph_path, "Graph JSON file")->required();
    tutte_cmd->add_option("--spec", o.spec, "1,q or 1,1 or xy")->capture_default_str();

    auto* inversion = app.add_subcommand("inversion-poly", "G-inversion polynomial");
    inversion->add_option("-g,--graph", o.graph_path, "Graph JSON file")->required();
    inversion->add_option("--route", o.route, "tree, tutte, recursive, cumulant or all")->default_str("tree");

    auto* parking = app.add_subcommand("gparking", "G-parking functions");
    parking->add_option("-g,--graph", o.graph_path, "Graph JSON file")->required();
    parking->add_flag("--list", o.list, "List every parking function");

    auto* sandpile = app.add_subcommand("sandpile", "Recurrent sandpile configurations");
    sandpile->add_option("-g,--graph", o.graph_path, "Graph JSON file")->required();
    sandpile->add_flag("--list", o.list, "List every recurrent configuration");

    auto* verify = app.add_subcommand("verify", "Run an invariant sweep");
    verify->add_option("--suite", o.suite, "axioms, main, hooks or graphs")->required();
    verify->add_option("--max-size", o.max_size, "Largest size in the sweep")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalid;
    }

    o.format = format == "json" ? Format::json : (format == "latex" ? Format::latex : Format::text);
    set_thread_count(o.threads);
    try {
        if (macdonald->parsed()) return cmd_macdonald(o, out);
        if (cumulant->parsed()) return cmd_cumulant(o, out);
        if (hooks->parsed()) return cmd_hook_kostka(o, out);
        if (colored->parsed()) return cmd_fully_colored(o, out);
        if (tutte_cmd->parsed()) return cmd_tutte(o, out);
        if (inversion->parsed()) return cmd_inversion_poly(o, out);
        if (parking->parsed()) return cmd_gparking(o, out);
        if (sandpile->parsed()) return cmd_sandpile(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        bool identity = e.kind() == ErrorKind::NonDivisible || e.kind() == ErrorKind::NonIntegral;
        return identity ? kMismatch : kInvalid;
    }
    return kInvalid;
}

} // namespace macq::cli
