#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wt/buildkit.hpp"
#include "wt/catalog.hpp"
#include "wt/census.hpp"
#include "wt/decomp.hpp"
#include "wt/errors.hpp"
#include "wt/graph_io.hpp"
#include "wt/majorize.hpp"
#include "wt/sequence.hpp"
#include "wt/structure.hpp"

namespace wt::cli {

using nlohmann::json;

namespace {

// One command's outcome. Handlers fill `result` and the human-readable `text`.
struct Report {
    std::string command;
    json input = json::object();
    json result = json::object();
    std::ostringstream text;
    int code = Exit::ok;
    std::string message;
};

json to_json(const DegreeSequence& d) {
    return json(std::vector<Degree>(d.terms().begin(), d.terms().end()));
}

std::string join(const std::vector<Degree>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? "," : "") + std::to_string(xs[i]);
    }
    return out;
}

std::string join(const std::vector<Vertex>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? "," : "") + std::to_string(xs[i]);
    }
    return out;
}

const char* flag(bool b) { return b ? "true" : "false"; }

// ---- seq ------------------------------------------------------------------

void seq_classify(Report& r, const std::string& text) {
    const auto d = DegreeSequence::parse(text);
    const auto cls = classify(d);
    const auto profile = eg_profile(d);
    r.result = {{"graphic", cls.graphic},
                {"split", cls.split},
                {"weakly_threshold", cls.weakly_threshold},
                {"threshold", cls.threshold},
                {"m", profile.m},
                {"deltas", profile.deltas}};
    r.text << "sequence: " << d.to_string() << '\n'
           << "graphic: " << flag(cls.graphic) << '\n'
           << "split: " << flag(cls.split) << '\n'
           << "weakly_threshold: " << flag(cls.weakly_threshold) << '\n'
           << "threshold: " << flag(cls.threshold) << '\n'
           << "m: " << profile.m << '\n'
           << "deltas: " << join(profile.deltas) << '\n';
    if (!cls.graphic) {
        r.code = Exit::not_graphic;
        r.message = d.to_string() + " is not graphic";
    }
}

std::string bracketed(const SplittedSequence& s) { return "[" + s.to_string() + "]"; }

void seq_decompose(Report& r, const std::string& text) {
    const auto d = DegreeSequence::parse(text);
    const auto report = check_eg_concatenation(d);
    json heads = json::array();
    std::string line;
    for (const auto& h : report.decomposition.heads) {
        heads.push_back(h.to_string());
        line += (line.empty() ? "" : " ") + bracketed(h);
    }
    r.result = {{"heads", heads},
                {"tail", to_json(report.decomposition.tail)},
                {"indecomposable", report.decomposition.heads.empty()},
                {"eg_concatenation", report.ok()}};
    r.text << "sequence: " << d.to_string() << '\n'
           << "heads: " << line << '\n'
           << "tail: " << report.decomposition.tail.to_string() << '\n'
           << "eg_concatenation: " << (report.ok() ? "ok" : "mismatch") << '\n';
}

void seq_realize(Report& r, const std::string& text) {
    const auto d = DegreeSequence::parse(text);
    if (!is_graphic(d)) {
        throw NotGraphic(d.to_string() + " is not graphic");
    }
    const auto script = realize_script(d);
    const auto g = run_script(script);
    r.result = {{"script", script.to_string()}, {"graph", format_edge_list(g)}, {"graph6", to_graph6(g)}};
    r.text << "script: " << script.to_string() << '\n'
           << "graph: " << format_edge_list(g) << '\n'
           << "graph6: " << to_graph6(g) << '\n';
}

void ferrers_cmd(Report& r, const std::string& text) {
    const auto d = DegreeSequence::parse(text);
    const auto diagram = ferrers(d);
    const std::string rendered = render_ferrers(diagram);
    json rows = json::array();
    std::istringstream lines(rendered);
    for (std::string row; std::getline(lines, row);) {
        rows.push_back(row);
    }
    r.result = {{"rows", rows}, {"m", corrected_durfee(d)}};
    r.text << rendered;
}

// ---- graph ----------------------------------------------------------------

SimpleGraph read_graph(Report& r, const std::string& text, const std::string& g6) {
    if (!g6.empty() && !text.empty()) {
        throw ParseError("give either an edge list or --g6, not both");
    }
    if (!g6.empty()) {
        r.input["graph6"] = g6;
        return from_graph6(g6);
    }
    if (text.empty()) {
        throw ParseError("missing graph (edge list or --g6)");
    }
    r.input["graph"] = text;
    return parse_edge_list(text);
}

void graph_classify(Report& r, const SimpleGraph& g) {
    const auto degrees = degree_sequence(g);
    const auto cls = classify(degrees);
    const auto rec = recognize(g);
    r.result = {{"degrees", to_json(degrees)},
                {"weakly_threshold", rec.weakly_threshold()},
                {"threshold", cls.threshold},
                {"split", cls.split}};
    r.text << "graph: " << format_edge_list(g) << '\n'
           << "degrees: " << degrees.to_string() << '\n'
           << "weakly_threshold: " << flag(rec.weakly_threshold()) << '\n'
           << "threshold: " << flag(cls.threshold) << '\n'
           << "split: " << flag(cls.split) << '\n';
    if (rec.script) {
        r.result["script"] = rec.script->to_string();
        r.text << "script: " << rec.script->to_string() << '\n';
    } else {
        const std::string member(to_string(rec.witness->member));
        r.result["witness"] = {{"member", member}, {"vertices", rec.witness->vertices}};
        r.text << "witness: " << member << ' ' << join(rec.witness->vertices) << '\n';
        r.code = Exit::not_in_class;
        r.message = "not weakly threshold";
    }
}

SplittedSequence sides_of(const SplittedGraph& s) {
    SplittedSequence out;
    for (Vertex v : s.clique) {
        out.clique.push_back(static_cast<Degree>(s.graph.degree(v)));
    }
    for (Vertex v : s.independent) {
        out.independent.push_back(static_cast<Degree>(s.graph.degree(v)));
    }
    std::sort(out.clique.begin(), out.clique.end(), std::greater<>());
    std::sort(out.independent.begin(), out.independent.end(), std::greater<>());
    return out;
}

void graph_decompose(Report& r, const SimpleGraph& g) {
    const auto dec = decompose_graph(g);
    json heads = json::array();
    std::string line;
    for (const auto& h : dec.heads) {
        const auto seq = sides_of(h);
        heads.push_back({{"sequence", seq.to_string()},
                         {"graph", format_edge_list(h.graph)},
                         {"clique", h.clique.to_vector()},
                         {"independent", h.independent.to_vector()}});
        line += (line.empty() ? "" : " ") + bracketed(seq);
    }
    const auto tail_degrees = degree_sequence(dec.tail);
    r.result = {{"heads", heads},
                {"tail", {{"degrees", to_json(tail_degrees)}, {"graph", format_edge_list(dec.tail)}}},
                {"vertex_order", dec.vertex_order}};
    r.text << "heads: " << line << '\n'
           << "tail: " << tail_degrees.to_string() << '\n'
           << "tail_graph: " << format_edge_list(dec.tail) << '\n'
           << "vertex_order: " << join(dec.vertex_order) << '\n';
}

void graph_recognize(Report& r, const SimpleGraph& g) {
    const auto rec = recognize(g);
    if (rec.script) {
        r.result = {{"script", rec.script->to_string()}, {"vertex_order", rec.vertex_order}};
        r.text << "script: " << rec.script->to_string() << '\n'
               << "vertex_order: " << join(rec.vertex_order) << '\n';
        return;
    }
    const std::string member(to_string(rec.witness->member));
    r.result = {{"witness", {{"member", member}, {"vertices", rec.witness->vertices}}}};
    r.text << "witness: " << member << ' ' << join(rec.witness->vertices) << '\n';
    r.code = Exit::not_in_class;
    r.message = "not weakly threshold";
}

void graph_complement(Report& r, const SimpleGraph& g) {
    const auto c = complement(g);
    r.result = {{"graph", format_edge_list(c)}, {"graph6", to_graph6(c)}};
    r.text << format_edge_list(c) << '\n';
}

// ---- enumerate ------------------------------------------------------------

void write_export(const std::string& path, const std::string& body) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << body;
}

void enumerate_cmd(Report& r, std::size_t n, const std::string& what, const std::string& export_path) {
    r.input = {{"n", n}, {"what", what}};
    std::ostringstream body;
    json rows = json::array();
    if (what == "sequences") {
        for (const auto& d : enumerate_wt_sequences(n)) {
            body << d.to_string() << '\n';
            rows.push_back(d.to_string());
        }
    } else if (what == "graphs") {
        std::vector<CatalogEntry> entries;
        for (const auto& form : cached_wt_graphs(n)) {
            entries.push_back(make_entry(form));
            rows.push_back({{"canonical", form.hex()}, {"degrees", entries.back().degrees.to_string()}});
        }
        write_catalog(body, entries);
    } else {
        if (n == 0) {
            throw OutOfDomain("table needs n >= 1");
        }
        const auto g = series_coefficients(indecomposable_sequences_series(), n);
        const auto h = series_coefficients(indecomposable_graphs_series(), n);
        body << "n\tg\th\ts\tw\tthreshold\n";
        for (std::size_t k = 1; k <= n; ++k) {
            const auto s = count_wt_sequences(k).str();
            const auto w = count_wt_graphs(k).str();
            const auto t = count_threshold(k).str();
            body << k << '\t' << g[k] << '\t' << h[k] << '\t' << s << '\t' << w << '\t' << t << '\n';
            rows.push_back({{"n", k}, {"g", g[k].str()}, {"h", h[k].str()}, {"s", s}, {"w", w}, {"threshold", t}});
        }
    }
    r.result = {{"count", rows.size()}, {"rows", rows}};
    if (!export_path.empty()) {
        write_export(export_path, body.str());
        r.result["exported"] = export_path;
    }
    r.text << body.str();
}

// ---- oracle ---------------------------------------------------------------

struct Check {
    std::string name;
    std::function<std::optional<std::string>(std::size_t)> run;  // counterexample, if any
};

std::vector<Check> battery() {
    return {
        {"recognizers",
         [](std::size_t n) -> std::optional<std::string> {
             for (const auto& g : enumerate_graphs(n)) {
                 const bool by_degrees = classify(degree_sequence(g)).weakly_threshold;
                 const bool by_forbidden = is_wt_by_forbidden(g).weakly_threshold;
                 const auto rec = recognize(g);
                 const bool rebuilt = rec.script && run_script(*rec.script) == g.relabeled(rec.vertex_order);
                 if (by_degrees != by_forbidden || by_degrees != rec.weakly_threshold() ||
                     (rec.script && !rebuilt)) {
                     return format_edge_list(g);
                 }
             }
             return std::nullopt;
         }},
        {"complement",
         [](std::size_t n) -> std::optional<std::string> {
             for (const auto& g : enumerate_graphs(n)) {
                 if (classify(degree_sequence(g)).weakly_threshold !=
                     classify(degree_sequence(complement(g))).weakly_threshold) {
                     return format_edge_list(g);
                 }
             }
             return std::nullopt;
         }},
        {"decomposition",
         [](std::size_t n) -> std::optional<std::string> {
             for (const auto& g : enumerate_graphs(n)) {
                 const auto dec = decompose_graph(g);
                 if (canonical_form(recompose(dec)) != canonical_form(g) ||
                     recompose(dec) != g.relabeled(dec.vertex_order) ||
                     dec.heads.empty() != is_indecomposable_graph(g)) {
                     return format_edge_list(g);
                 }
             }
             return std::nullopt;
         }},
        {"eg-concatenation",
         [](std::size_t n) -> std::optional<std::string> {
             for (const auto& d : graphic_sequences(n)) {
                 const auto report = check_eg_concatenation(d);
                 if (!report.ok() || recompose(report.decomposition) != d) {
                     return d.to_string();
                 }
             }
             return std::nullopt;
         }},
        {"upward-closure",
         [](std::size_t n) -> std::optional<std::string> {
             for (long sum = 0; sum <= static_cast<long>(n * (n - 1)); sum += 2) {
                 const auto report = verify_upward_closure(n, sum);
                 if (!report.ok()) {
                     const auto& [d, e] = report.counterexamples.front();
                     return d.to_string() + " <= " + e.to_string();
                 }
             }
             return std::nullopt;
         }},
        {"counts",
         [](std::size_t n) -> std::optional<std::string> {
             const auto report = oracle_crosscheck(n);
             if (!report.ok()) {
                 std::ostringstream os;
                 os << "s=" << report.wt_sequences << " w=" << report.wt_graphs
                    << " g=" << report.indecomposable_sequences << " h=" << report.indecomposable_graphs
                    << " threshold=" << report.threshold_graphs;
                 return os.str();
             }
             return std::nullopt;
         }},
    };
}

void oracle_cmd(Report& r, std::size_t max_n) {
    r.input = {{"max_n", max_n}};
    if (max_n > kOracleGraphBound) {
        throw SizeLimit("oracle battery up to n = " + std::to_string(max_n), kOracleGraphBound);
    }
    json checks = json::array();
    const auto checks_list = battery();
    for (std::size_t n = 1; n <= max_n; ++n) {
        for (const auto& check : checks_list) {
            const auto start = std::chrono::steady_clock::now();
            const auto failure = check.run(n);
            const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
            json entry = {{"n", n}, {"check", check.name}, {"ok", !failure.has_value()}};
            r.text << "n=" << n << ' ' << check.name << ' ' << (failure ? "FAIL" : "ok");
            if (failure) {
                entry["counterexample"] = *failure;
                r.text << " counterexample: " << *failure << '\n';
                checks.push_back(entry);
                r.result = {{"checks", checks}};
                r.code = Exit::failure;
                r.message = check.name + " failed at n=" + std::to_string(n);
                return;
            }
            r.text << " (" << static_cast<long>(took.count() * 1000) << " ms)\n";
            checks.push_back(entry);
        }
    }
    r.result = {{"checks", checks}};
}

// ---- dispatch -------------------------------------------------------------

int classify_error(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const EmptySequence*>(&e) ||
        dynamic_cast<const NegativeTerm*>(&e)) {
        return Exit::parse_error;
    }
    if (dynamic_cast<const NotGraphic*>(&e) || dynamic_cast<const RowOverflow*>(&e)) {
        return Exit::not_graphic;
    }
    if (dynamic_cast<const NotWeaklyThreshold*>(&e)) {
        return Exit::not_in_class;
    }
    if (dynamic_cast<const SizeLimit*>(&e) || dynamic_cast<const OutOfDomain*>(&e)) {
        return Exit::size_bound;
    }
    return Exit::failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weakly threshold sequences and graphs", "wt"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Print a JSON report");

    Report report;
    std::function<void()> action;

    auto* seq = app.add_subcommand("seq", "Degree sequence commands");
    seq->require_subcommand(1);
    std::string seq_text;
    for (const auto& [name, help] : {std::pair{"classify", "Class flags and Erdős–Gallai differences"},
                                     std::pair{"decompose", "Canonical decomposition"},
                                     std::pair{"realize", "Build script and graph realizing the sequence"}}) {
        auto* sub = seq->add_subcommand(name, help);
        sub->add_option("sequence", seq_text, "Comma-separated terms, e.g. 3,3,2,1,1")->required();
        const std::string which = name;
        sub->callback([&, which] {
            report.command = "seq " + which;
            action = [&, which] {
                report.input = {{"sequence", seq_text}};
                if (which == "classify") {
                    seq_classify(report, seq_text);
                } else if (which == "decompose") {
                    seq_decompose(report, seq_text);
                } else {
                    seq_realize(report, seq_text);
                }
            };
        });
    }

    auto* graph = app.add_subcommand("graph", "Graph commands");
    graph->require_subcommand(1);
    std::string graph_text;
    std::string g6;
    for (const auto& [name, help] : {std::pair{"classify", "Weakly threshold verdict with script or witness"},
                                     std::pair{"decompose", "Canonical decomposition"},
                                     std::pair{"recognize", "Build script or forbidden witness"},
                                     std::pair{"complement", "Complement as an edge list"}}) {
        auto* sub = graph->add_subcommand(name, help);
        sub->add_option("graph", graph_text, "Edge list, e.g. n=4;edges=0-1,1-2,2-3");
        sub->add_option("--g6", g6, "Graph in graph6 format");
        const std::string which = name;
        sub->callback([&, which] {
            report.command = "graph " + which;
            action = [&, which] {
                const auto g = read_graph(report, graph_text, g6);
                if (which == "classify") {
                    graph_classify(report, g);
                } else if (which == "decompose") {
                    graph_decompose(report, g);
                } else if (which == "recognize") {
                    graph_recognize(report, g);
                } else {
                    graph_complement(report, g);
                }
            };
        });
    }

    auto* enumerate = app.add_subcommand("enumerate", "Exhaustive lists and count tables");
    std::size_t n = 0;
    std::string what = "table";
    std::string export_path;
    enumerate->add_option("--n", n, "Order")->required();
    enumerate->add_option("--what", what, "sequences, graphs or table")
        ->check(CLI::IsMember({"sequences", "graphs", "table"}));
    enumerate->add_option("--export", export_path, "Also write the listing to this file");
    enumerate->callback([&] {
        report.command = "enumerate";
        action = [&] { enumerate_cmd(report, n, what, export_path); };
    });

    auto* oracle = app.add_subcommand("oracle", "Exhaustive cross-check battery");
    std::size_t max_n = 0;
    oracle->add_option("--max-n", max_n, "Largest order to check")->required();
    oracle->callback([&] {
        report.command = "oracle";
        action = [&] { oracle_cmd(report, max_n); };
    });

    auto* ferrers_sub = app.add_subcommand("ferrers", "Render the corrected Ferrers diagram");
    std::string ferrers_text;
    ferrers_sub->add_option("sequence", ferrers_text, "Comma-separated terms")->required();
    ferrers_sub->callback([&] {
        report.command = "ferrers";
        action = [&] {
            report.input = {{"sequence", ferrers_text}};
            ferrers_cmd(report, ferrers_text);
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return Exit::parse_error;
    }

    try {
        action();
    } catch (const std::exception& e) {
        report.code = classify_error(e);
        report.message = e.what();
        report.result = json::object();
        report.text.str("");
    }

    if (as_json) {
        const json doc = {{"command", report.command},
                          {"input", report.input},
                          {"result", report.result},
                          {"status",
                           {{"ok", report.code == Exit::ok},
                            {"exit_code", report.code},
                            {"message", report.message}}}};
        out << doc.dump(2) << '\n';
    } else {
        out << report.text.str();
        if (report.code != Exit::ok) {
            err << "error: " << report.message << '\n';
        }
    }
    return report.code;
}

}  // namespace wt::cli
