#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "tr2dom/bounds.hpp"
#include "tr2dom/closed_forms.hpp"
#include "tr2dom/enumerate.hpp"
#include "tr2dom/families.hpp"
#include "tr2dom/graph_io.hpp"
#include "tr2dom/labeling.hpp"
#include "tr2dom/profile.hpp"
#include "tr2dom/reduction.hpp"
#include "tr2dom/solvers.hpp"
#include "tr2dom/sweep.hpp"
#include "tr2dom/tree_dp.hpp"

using json = nlohmann::json;
using namespace tr2dom;

namespace {

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Edge-list text contains spaces on its first line; graph6 lines never do.
std::vector<Graph> load_graphs(const std::string& text) {
    std::istringstream lines(text);
    std::string first;
    while (std::getline(lines, first)) {
        if (first.find_first_not_of(" \t\r") != std::string::npos) break;
        first.clear();
    }
    if (first.empty()) throw std::runtime_error("empty input");
    if (first.find(' ') != std::string::npos) return {parse_edge_list(text)};
    std::istringstream in(text);
    return read_graph6_stream(in);
}

json witness_json(const Labeling& f) {
    json arr = json::array();
    for (int v = 0; v < f.size(); ++v) arr.push_back(static_cast<int>(f[v]));
    return arr;
}

struct GlobalOpts {
    std::string format = "text";
    long long budget_ms = 0;
    int jobs = 1;

    SolverConfig solver_config() const {
        SolverConfig cfg;
        if (budget_ms > 0) cfg.time_budget = std::chrono::milliseconds(budget_ms);
        return cfg;
    }
};

void emit(const GlobalOpts& opts, const json& objects, const std::string& csv,
          const std::string& text) {
    if (opts.format == "json")
        std::cout << objects.dump(2) << '\n';
    else if (opts.format == "csv")
        std::cout << csv;
    else
        std::cout << text;
}

// ---- solve ----------------------------------------------------------------

int cmd_solve(const GlobalOpts& opts, const std::string& input, const std::string& param,
              const std::string& method, int trace_vertex) {
    SolverConfig cfg = opts.solver_config();
    if (method == "brute") cfg.force_method = Method::BruteForce;
    if (method == "bb") cfg.force_method = Method::BranchBound;
    if (method == "treedp") cfg.force_method = Method::TreeDP;

    auto graphs = load_graphs(read_input(input));
    json out = json::array();
    std::ostringstream csv, text;
    csv << "graph,param,value,method,nodes,millis,optimal,witness\n";

    for (const Graph& g : graphs) {
        if (trace_vertex >= 0) {
            DpTableRow row = dp_trace(g, trace_vertex);
            json jr;
            jr["graph"] = encode_graph6(g);
            jr["vertex"] = trace_vertex;
            static const char* names[] = {"0/credit0", "0/credit1", "0/sat",
                                          "1/pending", "1/ok",      "2/pending", "2/ok"};
            for (int s = 0; s < kDpStateCount; ++s)
                jr["table"][names[s]] = row[s] >= kDpInfeasible ? json(nullptr) : json(row[s]);
            out.push_back(jr);
            text << "dp table at vertex " << trace_vertex << ":";
            for (int s = 0; s < kDpStateCount; ++s) {
                text << ' ' << names[s] << '=';
                if (row[s] >= kDpInfeasible)
                    text << "inf";
                else
                    text << row[s];
            }
            text << '\n';
            continue;
        }

        SolveResult r;
        if (param == "tr2")
            r = gamma_tr2_exact(g, cfg);
        else if (param == "dom")
            r = gamma(g, cfg);
        else if (param == "total")
            r = gamma_t(g, cfg);
        else if (param == "r2")
            r = gamma_r2(g, cfg);
        else
            r = gamma_x2(g, cfg);

        double millis = r.elapsed.count() / 1000.0;
        json jr;
        jr["graph"] = encode_graph6(g);
        jr["param"] = param;
        jr["value"] = r.value;
        jr["witness"] = witness_json(r.witness);
        jr["method"] = method_name(r.method);
        jr["nodes"] = r.nodes_explored;
        jr["millis"] = millis;
        jr["optimal"] = r.optimal;
        out.push_back(jr);

        csv << encode_graph6(g) << ',' << param << ',' << r.value << ',' << method_name(r.method)
            << ',' << r.nodes_explored << ',' << millis << ',' << (r.optimal ? 1 : 0) << ",\""
            << format_labeling(r.witness) << "\"\n";
        text << encode_graph6(g) << ": " << param << "=" << r.value << " method="
             << method_name(r.method) << " nodes=" << r.nodes_explored << " millis=" << millis
             << (r.optimal ? "" : " (budget hit, possibly suboptimal)")
             << " witness=" << format_labeling(r.witness) << '\n';
    }
    emit(opts, out.size() == 1 ? out[0] : out, csv.str(), text.str());
    return 0;
}

// ---- verify -----------------------------------------------------------------

Labeling labeling_from_text(const std::string& text) {
    // Accepts both the digit form "1 1 0 1 1" and the JSON form
    // {"values":[1,1,0,1,1]}.
    auto at = text.find_first_not_of(" \t\r\n");
    if (at != std::string::npos && text[at] == '{') {
        json j = json::parse(text);
        std::vector<std::uint8_t> values;
        for (int v : j.at("values")) {
            if (v < 0 || v > 2) throw std::runtime_error("labeling value outside {0,1,2}");
            values.push_back(static_cast<std::uint8_t>(v));
        }
        return Labeling(std::move(values));
    }
    return parse_labeling(text);
}

int cmd_verify(const GlobalOpts& opts, const std::string& input, const std::string& labeling_text,
               const std::string& param) {
    auto graphs = load_graphs(read_input(input));
    if (graphs.size() != 1) throw std::runtime_error("verify expects exactly one graph");
    const Graph& g = graphs[0];
    Labeling f = labeling_from_text(labeling_text);
    if (f.size() != g.order()) throw std::runtime_error("labeling length != graph order");

    std::vector<Violation> violations;
    if (param == "tr2") {
        violations = check_tr2df(g, f);
    } else if (param == "r2") {
        violations = check_r2f(g, f);
    } else {
        std::vector<int> s;
        for (int v = 0; v < f.size(); ++v)
            if (f[v] > 0) s.push_back(v);
        bool ok = param == "dom"     ? is_dominating_set(g, s)
                  : param == "total" ? is_total_dominating_set(g, s)
                                     : is_double_dominating_set(g, s);
        if (!ok) {
            Violation::Kind kind = param == "double" ? Violation::Kind::NotDoublyDominated
                                                     : Violation::Kind::UndominatedVertex;
            violations.push_back({kind, -1, "set fails the " + param + " domination predicate"});
        }
    }

    json out;
    out["graph"] = encode_graph6(g);
    out["param"] = param;
    out["weight"] = weight(f);
    out["ok"] = violations.empty();
    out["violations"] = json::array();
    std::ostringstream text;
    for (const auto& v : violations) {
        json jv;
        jv["vertex"] = v.vertex;
        jv["detail"] = v.detail;
        out["violations"].push_back(jv);
        text << "violation at vertex " << v.vertex << ": " << v.detail << '\n';
    }
    text << (violations.empty() ? "ok" : "invalid") << " (weight " << weight(f) << ")\n";
    emit(opts, out, text.str(), text.str());
    return violations.empty() ? 0 : 1;
}

// ---- params -----------------------------------------------------------------

int cmd_params(const GlobalOpts& opts, const std::string& input) {
    auto graphs = load_graphs(read_input(input));
    json out = json::array();
    std::ostringstream csv, text;
    csv << "graph,n,m,gamma,gamma_t,gamma_r2,gamma_x2,gamma_tr2\n";
    for (const Graph& g : graphs) {
        json jr;
        jr["graph"] = encode_graph6(g);
        jr["n"] = g.order();
        jr["m"] = g.size();
        csv << encode_graph6(g) << ',' << g.order() << ',' << g.size();
        text << encode_graph6(g) << ": n=" << g.order() << " m=" << g.size();
        struct Row {
            const char* key;
            SolveResult (*fn)(const Graph&, const SolverConfig&);
        };
        for (const Row& row : {Row{"gamma", gamma}, Row{"gamma_t", gamma_t},
                               Row{"gamma_r2", gamma_r2}, Row{"gamma_x2", gamma_x2},
                               Row{"gamma_tr2", gamma_tr2_exact}}) {
            try {
                int v = row.fn(g, opts.solver_config()).value;
                jr[row.key] = v;
                csv << ',' << v;
                text << ' ' << row.key << '=' << v;
            } catch (const IsolatedVertexError&) {
                jr[row.key] = nullptr;
                csv << ",undefined";
                text << ' ' << row.key << "=undefined";
            }
        }
        out.push_back(jr);
        csv << '\n';
        text << '\n';
    }
    emit(opts, out.size() == 1 ? out[0] : out, csv.str(), text.str());
    return 0;
}

// ---- bounds -----------------------------------------------------------------

int cmd_bounds(const GlobalOpts& opts, const std::string& input) {
    auto graphs = load_graphs(read_input(input));
    json out = json::array();
    std::ostringstream csv, text;
    csv << "graph_id,bound,applicable,lhs,rhs,holds,tight\n";
    for (const Graph& g : graphs) {
        BoundReport rep = bound_report(g);
        std::string id = encode_graph6(g);
        json jr;
        jr["graph"] = id;
        jr["entries"] = json::array();
        for (const auto& e : rep.entries) {
            json je;
            je["bound"] = e.name;
            je["applicable"] = e.applicable;
            je["lhs"] = e.lhs;
            je["rhs"] = e.rhs;
            je["holds"] = e.holds;
            je["tight"] = e.tight;
            jr["entries"].push_back(je);
            csv << id << ',' << e.name << ',' << (e.applicable ? 1 : 0) << ',' << e.lhs << ','
                << e.rhs << ',' << (e.holds ? 1 : 0) << ',' << (e.tight ? 1 : 0) << '\n';
            text << id << ' ' << e.name
                 << (e.applicable ? (e.holds ? (e.tight ? " tight" : " holds") : " VIOLATED")
                                  : " n/a")
                 << " (lhs=" << e.lhs << " rhs=" << e.rhs << ")\n";
        }
        for (const auto& [k, v] : rep.gamma_values) jr["params"][k] = v;
        out.push_back(jr);
    }
    emit(opts, out.size() == 1 ? out[0] : out, csv.str(), text.str());
    return 0;
}

// ---- classify ---------------------------------------------------------------

int cmd_classify(const GlobalOpts& opts, const std::string& input) {
    auto graphs = load_graphs(read_input(input));
    json out = json::array();
    std::ostringstream csv, text;
    csv << "graph,kind,also_value_n,evidence\n";
    for (const Graph& g : graphs) {
        Classification c = classify(g);
        json jr;
        jr["graph"] = encode_graph6(g);
        jr["kind"] = value_kind_name(c.kind);
        jr["also_value_n"] = c.also_value_n;
        std::string ev;
        if (c.universal_pair) {
            jr["evidence"]["universal_pair"] = {c.universal_pair->first, c.universal_pair->second};
            ev = "universal adjacent pair " + std::to_string(c.universal_pair->first) + "," +
                 std::to_string(c.universal_pair->second);
        } else if (c.universal_vertex) {
            jr["evidence"]["universal_vertex"] = *c.universal_vertex;
            ev = "unique universal vertex " + std::to_string(*c.universal_vertex);
        } else if (c.triple) {
            jr["evidence"]["triple"] = {(*c.triple)[0], (*c.triple)[1], (*c.triple)[2]};
            ev = "triple " + std::to_string((*c.triple)[0]) + "," + std::to_string((*c.triple)[1]) +
                 "," + std::to_string((*c.triple)[2]);
        } else if (c.by_solver) {
            jr["evidence"]["by_solver"] = true;
            ev = "exact solver (order <= 4)";
        } else {
            jr["evidence"] = nullptr;
            ev = "none";
        }
        out.push_back(jr);
        csv << encode_graph6(g) << ',' << value_kind_name(c.kind) << ',' << (c.also_value_n ? 1 : 0)
            << ",\"" << ev << "\"\n";
        text << encode_graph6(g) << ": " << value_kind_name(c.kind)
             << (c.also_value_n ? " (also value n)" : "") << " evidence: " << ev << '\n';
    }
    emit(opts, out.size() == 1 ? out[0] : out, csv.str(), text.str());
    return 0;
}

// ---- formula / gen ------------------------------------------------------------

FamilySpec spec_from_flags(const std::string& spec_text, const std::string& family, int n, int p,
                           int q, int k) {
    if (!spec_text.empty()) return parse_family(spec_text);
    if (family.empty()) throw CLI::ValidationError("need --spec or --family");
    if (family == "path") return FamilySpec::path(n);
    if (family == "cycle") return FamilySpec::cycle(n);
    if (family == "star") return FamilySpec::star(n);
    if (family == "complete") return FamilySpec::complete(n);
    if (family == "empty") return FamilySpec::empty(n);
    if (family == "doublestar") return FamilySpec::double_star(p, q);
    if (family == "completebipartite") return FamilySpec::complete_bipartite(p, q);
    if (family == "pendantpathtree") return FamilySpec::pendant_path_tree(k);
    if (family == "twostarbridge") return FamilySpec::two_star_bridge(p, q);
    throw CLI::ValidationError("unknown --family (use --spec for corona/join)");
}

int cmd_formula(const GlobalOpts& opts, const FamilySpec& spec) {
    int value = formula_value(spec);
    json out;
    out["family"] = spec.label();
    out["gamma_tr2"] = value;
    std::ostringstream text;
    text << spec.label() << ": gamma_tr2 = " << value << '\n';
    emit(opts, out, text.str(), text.str());
    return 0;
}

int cmd_gen(const FamilySpec& spec, const std::string& out_format) {
    Graph g = generate(spec);
    if (out_format == "graph6")
        std::cout << encode_graph6(g) << '\n';
    else
        std::cout << format_edge_list(g);
    return 0;
}

// ---- reduce -----------------------------------------------------------------

int cmd_reduce(const GlobalOpts& opts, const std::string& input, const std::string& variant,
               const std::string& out_format, bool emit_k) {
    X3CInstance inst = parse_x3c(read_input(input));
    ReductionVariant v =
        variant == "chordal" ? ReductionVariant::Chordal : ReductionVariant::Bipartite;
    ReductionOutput red = reduce(inst, v);
    if (opts.format == "json") {
        json out;
        out["k"] = red.k;
        out["n"] = red.graph.order();
        out["m"] = red.graph.size();
        out["variant"] = variant;
        out["graph6"] = encode_graph6(red.graph);
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    if (out_format == "graph6")
        std::cout << encode_graph6(red.graph) << '\n';
    else
        std::cout << format_edge_list(red.graph);
    if (emit_k) std::cout << "k " << red.k << '\n';
    return 0;
}

// ---- sweep ------------------------------------------------------------------

std::vector<FamilySpec> expand_families(const std::string& list) {
    // Comma-separated specs; "name(a..b)" expands the single-int families.
    std::vector<FamilySpec> out;
    std::size_t at = 0;
    while (at < list.size()) {
        int depth = 0;
        std::size_t end = at;
        while (end < list.size() && (depth > 0 || list[end] != ',')) {
            if (list[end] == '(') ++depth;
            if (list[end] == ')') --depth;
            ++end;
        }
        std::string item = list.substr(at, end - at);
        at = end + (end < list.size() ? 1 : 0);
        if (item.empty()) continue;
        auto dots = item.find("..");
        if (dots != std::string::npos) {
            auto open = item.find('(');
            auto close = item.rfind(')');
            if (open == std::string::npos || close == std::string::npos)
                throw std::runtime_error("bad family range: " + item);
            std::string name = item.substr(0, open);
            int lo = std::stoi(item.substr(open + 1, dots - open - 1));
            int hi = std::stoi(item.substr(dots + 2, close - dots - 2));
            for (int x = lo; x <= hi; ++x)
                out.push_back(parse_family(name + "(" + std::to_string(x) + ")"));
        } else {
            out.push_back(parse_family(item));
        }
    }
    return out;
}

int cmd_sweep(const GlobalOpts& opts, const std::string& corpus, int max_n,
              const std::string& g6_file, const std::string& families,
              const std::string& checks_csv) {
    SweepConfig cfg;
    if (corpus == "trees")
        cfg.corpus = SweepConfig::TreesUpTo{max_n};
    else if (corpus == "connected")
        cfg.corpus = SweepConfig::ConnectedUpTo{max_n};
    else if (corpus == "file")
        cfg.corpus = SweepConfig::Graph6File{g6_file};
    else
        cfg.corpus = SweepConfig::Families{expand_families(families)};

    std::stringstream cs(checks_csv);
    std::string name;
    while (std::getline(cs, name, ',')) {
        if (name.empty()) continue;
        auto c = check_from_name(name);
        if (!c) throw std::runtime_error("unknown check: " + name);
        cfg.checks.push_back(*c);
    }
    if (cfg.checks.empty())
        cfg.checks = {Check::Bounds, Check::Characterizations, Check::PrivateNeighbors, Check::EmptyV2,
                      Check::DoubleEquiv, Check::SupportLabels, Check::Formulas, Check::DpOracle};
    cfg.jobs = opts.jobs;
    if (opts.budget_ms > 0) cfg.time_budget = std::chrono::milliseconds(opts.budget_ms);

    SweepReport rep = run_sweep(cfg);

    json out;
    out["graphs"] = rep.graphs_processed;
    out["millis"] = rep.millis;
    out["budget_exhausted"] = rep.budget_exhausted;
    std::ostringstream csv, text;
    csv << "check,checked,failed\n";
    text << "sweep over " << rep.graphs_processed << " graphs in " << rep.millis << " ms\n";
    for (const auto& [check, s] : rep.stats) {
        out["checks"][check] = {{"checked", s.checked}, {"failed", s.failed}};
        csv << check << ',' << s.checked << ',' << s.failed << '\n';
        text << "  " << check << ": " << s.checked << " checked, " << s.failed << " failed\n";
    }
    out["counterexamples"] = json::array();
    for (const auto& ce : rep.counterexamples) {
        out["counterexamples"].push_back(
            {{"graph6", ce.graph_id}, {"check", ce.check}, {"detail", ce.detail}});
        text << "  counterexample [" << ce.check << "] " << ce.graph_id << ": " << ce.detail
             << '\n';
    }
    for (const auto& [bound, ids] : rep.tight_instances) {
        out["tight"][bound] = ids;
        text << "  tight " << bound << " (" << rep.tight_counts.at(bound) << "):";
        int shown = 0;
        for (const auto& id : ids) {
            if (++shown > 8) {
                text << " ...";
                break;
            }
            text << ' ' << id;
        }
        text << '\n';
    }
    if (rep.budget_exhausted) text << "  (budget exhausted; partial results)\n";
    text << (rep.ok() ? "PASS" : "FAIL") << '\n';
    emit(opts, out, csv.str(), text.str());
    return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solvers and verification harness for total Roman {2}-domination"};
    app.require_subcommand(1);

    GlobalOpts opts;
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--budget-ms", opts.budget_ms, "time budget per solve (ms)");
    app.add_option("--jobs", opts.jobs, "worker threads for sweeps");

    std::string input = "-";
    std::string param = "tr2", method = "auto";
    int trace_vertex = -1;
    auto* solve = app.add_subcommand("solve", "compute a domination parameter exactly");
    solve->fallthrough();
    solve->add_option("input", input, "graph file (edge list or graph6), - for stdin");
    solve->add_option("--param", param)
        ->check(CLI::IsMember({"tr2", "dom", "total", "r2", "double"}));
    solve->add_option("--method", method)->check(CLI::IsMember({"auto", "brute", "bb", "treedp"}));
    solve->add_option("--trace-dp", trace_vertex, "emit the DP table at a vertex (forests)");

    std::string labeling_text;
    std::string vparam = "tr2";
    std::string vinput = "-";
    auto* verify = app.add_subcommand("verify", "check a labeling against a graph");
    verify->fallthrough();
    verify->add_option("input", vinput, "graph file");
    verify->add_option("--labeling", labeling_text, "labeling digits, e.g. \"1 1 0 1 1\"")
        ->required();
    verify->add_option("--param", vparam)
        ->check(CLI::IsMember({"tr2", "r2", "dom", "total", "double"}));

    std::string pinput = "-";
    auto* params = app.add_subcommand("params", "compute all domination parameters");
    params->fallthrough();
    params->add_option("input", pinput, "graph file");

    std::string binput = "-";
    auto* bounds = app.add_subcommand("bounds", "evaluate every bound of the theory");
    bounds->fallthrough();
    bounds->add_option("input", binput, "graph file");

    std::string cinput = "-";
    auto* classify_cmd = app.add_subcommand("classify", "recognize gamma_tR2 in {2,3,n}");
    classify_cmd->fallthrough();
    classify_cmd->add_option("input", cinput, "graph file");

    std::string spec_text, family;
    int fn = 0, fp = 0, fq = 0, fk = 0;
    auto* formula = app.add_subcommand("formula", "proven closed-form values");
    formula->fallthrough();
    formula->add_option("--spec", spec_text, "family spec, e.g. corona(path(4))");
    formula->add_option("--family", family, "family name");
    formula->add_option("--n", fn);
    formula->add_option("--p", fp);
    formula->add_option("--q", fq);
    formula->add_option("--k", fk);

    std::string gspec_text, gfamily, gout = "edgelist";
    int gn = 0, gp = 0, gq = 0, gk = 0;
    auto* gen = app.add_subcommand("gen", "generate a named family graph");
    gen->fallthrough();
    gen->add_option("--spec", gspec_text, "family spec, e.g. corona(path(4))");
    gen->add_option("--family", gfamily, "family name");
    gen->add_option("--n", gn);
    gen->add_option("--p", gp);
    gen->add_option("--q", gq);
    gen->add_option("--k", gk);
    gen->add_option("--out", gout)->check(CLI::IsMember({"edgelist", "graph6"}));

    std::string rinput = "-", rvariant = "bipartite", rout = "edgelist";
    bool emit_k = false;
    auto* reduce_cmd = app.add_subcommand("reduce", "build the X3C hardness gadget graph");
    reduce_cmd->fallthrough();
    reduce_cmd->add_option("input", rinput, "x3c file: \"q t\" then t lines of 3 ints");
    reduce_cmd->add_option("--variant", rvariant)->check(CLI::IsMember({"bipartite", "chordal"}));
    reduce_cmd->add_option("--out", rout)->check(CLI::IsMember({"edgelist", "graph6"}));
    reduce_cmd->add_flag("--emit-k", emit_k, "append the decision threshold k");

    std::string corpus = "trees", g6_file, families_list, checks_csv;
    int max_n = 6;
    auto* sweep_cmd = app.add_subcommand("sweep", "exhaustive theorem verification");
    sweep_cmd->fallthrough();
    sweep_cmd->add_option("--corpus", corpus)
        ->check(CLI::IsMember({"trees", "connected", "file", "families"}));
    sweep_cmd->add_option("--max-n", max_n, "corpus size cap");
    sweep_cmd->add_option("--g6-file", g6_file, "graph6 corpus file");
    sweep_cmd->add_option("--families", families_list,
                          "comma list, ranges allowed: path(2..14),cycle(3..14)");
    sweep_cmd->add_option("--checks", checks_csv, "comma list of checks (default: all)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(opts, input, param, method, trace_vertex);
        if (verify->parsed()) return cmd_verify(opts, vinput, labeling_text, vparam);
        if (params->parsed()) return cmd_params(opts, pinput);
        if (bounds->parsed()) return cmd_bounds(opts, binput);
        if (classify_cmd->parsed()) return cmd_classify(opts, cinput);
        if (formula->parsed())
            return cmd_formula(opts, spec_from_flags(spec_text, family, fn, fp, fq, fk));
        if (gen->parsed())
            return cmd_gen(spec_from_flags(gspec_text, gfamily, gn, gp, gq, gk), gout);
        if (reduce_cmd->parsed()) return cmd_reduce(opts, rinput, rvariant, rout, emit_k);
        if (sweep_cmd->parsed())
            return cmd_sweep(opts, corpus, max_n, g6_file, families_list, checks_csv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
