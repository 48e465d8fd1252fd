// cnr: solve graphs, check the claims, grow truncations, play games, serve sessions.
#include <CLI11.hpp>

#include <csignal>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cnr/claims.hpp"
#include "cnr/graph_io.hpp"
#include "cnr/http_service.hpp"
#include "cnr/strategies.hpp"
#include "cnr/table_io.hpp"

namespace fs = std::filesystem;
using namespace cnr;

namespace {

constexpr int kPass = 0;
constexpr int kClaimFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_file(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path);
    out << text;
    if (!out) throw UsageError("cannot write " + path.string());
}

Vertex parse_vertex(const std::string& text) {
    Vertex v;
    char comma = 0;
    std::istringstream in(text);
    if (!(in >> v.x >> comma >> v.y) || comma != ',' || !in.eof()) throw UsageError("expected x,y but got '" + text + "'");
    return v;
}

std::vector<Coord> parse_k_list(const std::string& text) {
    std::vector<Coord> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(std::stoull(item));
        } catch (const std::exception&) {
            throw UsageError("bad k value '" + item + "'");
        }
        if (out.back() < 1) throw UsageError("k must be at least 1");
        if (out.size() > 1 && out.back() <= out[out.size() - 2]) throw UsageError("k list must be increasing");
    }
    if (out.empty()) throw UsageError("empty k list");
    return out;
}

int cmd_solve(const std::string& source, const fs::path& out) {
    const FiniteGraph g = load_graph_source(source);
    if (g.size() == 0) throw UsageError("graph has no vertices");
    const fs::path cache = out / "cache" / (graph_hash(g) + ".json");
    std::optional<SolveResult> result = load_table_cache(cache, g);
    const bool hit = result.has_value();
    if (!hit) {
        result = solve_eta(g);
        write_file(cache, table_cache_json(*result));
    }
    const std::string summary = summary_text(g, *result);
    write_file(out / "eta.csv", eta_csv(g, result->table));
    write_file(out / "summary.txt", summary);
    std::cout << summary << "cache=" << (hit ? "hit" : "miss") << ' ' << cache.string() << '\n';
    return kPass;
}

int cmd_check(Level level, std::uint64_t seed, const std::string& filter, const std::optional<fs::path>& out) {
    const auto reports = run_claims(level, seed, filter);
    if (reports.empty()) throw UsageError("no claim matches '" + filter + "'");
    bool ok = true;
    for (const ClaimReport& r : reports) {
        std::cout << report_line(r) << '\n';
        ok = ok && r.pass;
    }
    if (out) write_file(*out / "claims.csv", reports_csv(reports));
    std::cout << (ok ? "all claims pass" : "some claims FAIL") << " (level " << to_string(level) << ", seed " << seed << ")\n";
    return ok ? kPass : kClaimFailure;
}

int cmd_growth(const std::string& k_list, const std::optional<fs::path>& out) {
    const auto ks = parse_k_list(k_list);
    std::ostringstream csv;
    csv << "k,vertices,eta_G,rho_G\n";
    std::cout << std::setw(4) << "k" << std::setw(10) << "|V|" << std::setw(8) << "eta_G" << std::setw(8) << "rho_G" << '\n';
    bool monotone = true;
    std::optional<CaptureValue> previous;
    for (Coord k : ks) {
        const FiniteGraph t = triangular_truncation(k);
        const SolveResult r = solve_eta(t);
        std::cout << std::setw(4) << k << std::setw(10) << t.size() << std::setw(8) << r.eta_graph.to_string() << std::setw(8)
                  << r.rho_graph.to_string() << '\n';
        csv << k << ',' << t.size() << ',' << r.eta_graph.raw() << ',' << r.rho_graph.raw() << '\n';
        if (previous && r.rho_graph < *previous) monotone = false;
        previous = r.rho_graph;
    }
    if (out) write_file(*out / "growth.csv", csv.str());
    std::cout << "rho non-decreasing: " << (monotone ? "yes" : "NO") << '\n';
    return monotone ? kPass : kClaimFailure;
}

struct PlayOptions {
    std::string graph = "quadrant";
    std::string cop = "papercop";
    std::string robber = "paperrobber";
    std::string cop_start = "1,1";
    std::string robber_start = "5,5";
    std::string convention = "robberfirst";
    std::optional<std::uint64_t> move_cap;
    std::uint64_t seed = 1;
    Coord bound = 0;
    int horizon = 3;
    std::optional<fs::path> out;
};

int cmd_play(const PlayOptions& o) {
    StrategyOptions options;
    options.seed = o.seed;
    options.horizon = o.horizon;
    const Vertex cop_start = parse_vertex(o.cop_start);
    const Vertex robber_start = parse_vertex(o.robber_start);
    options.bound = o.bound ? o.bound : 4 * std::max({cop_start.x, cop_start.y, robber_start.x, robber_start.y});
    const GraphOracle* graph = &quadrant_graph();
    if (o.graph != "quadrant") {
        options.graph = std::make_shared<const FiniteGraph>(load_graph_source(o.graph));
        if (o.cop == "table" || o.robber == "table") options.solved = std::make_shared<const SolveResult>(solve_eta(*options.graph));
        graph = options.graph.get();
    } else if (o.cop == "table" || o.robber == "table") {
        throw UsageError("the table strategy needs --graph");
    }
    if (!graph->contains(cop_start) || !graph->contains(robber_start)) throw UsageError("start vertex not in the graph");
    std::unique_ptr<Strategy> cop, robber;
    try {
        cop = make_strategy(o.cop, Side::Cop, options);
        robber = make_strategy(o.robber, Side::Robber, options);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const Convention convention = parse_convention(o.convention);
    const std::uint64_t cap = o.move_cap.value_or(default_move_cap(cop_start, robber_start));
    const Transcript t = run_game(*graph, *cop, *robber, cop_start, robber_start, convention, cap);
    const std::string json = transcript_to_json(t);
    if (o.out) write_file(*o.out, json + "\n");
    std::cout << "outcome=" << (t.outcome == Outcome::Captured ? "captured" : "move_cap") << " cop_moves=" << t.cop_moves
              << " predicted_bound=" << predicted_bound(robber_start, convention) << '\n';
    if (!o.out) std::cout << json << '\n';
    return kPass;
}

HttpService* active_service = nullptr;

int cmd_serve(const std::string& host, int port, std::uint64_t seed) {
    ServiceConfig config;
    config.seed = seed;
    SessionManager sessions(config);
    HttpService service(sessions);
    const int bound = service.bind(host, port);
    if (bound < 0) throw UsageError("cannot bind " + host + ":" + std::to_string(port));
    active_service = &service;
    std::signal(SIGINT, [](int) { active_service->stop(); });
    std::signal(SIGTERM, [](int) { active_service->stop(); });
    std::cout << "serving on http://" << host << ':' << bound << std::endl;
    service.serve();
    active_service = nullptr;
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cops and robbers on the quadrant graph and on finite graphs"};
    app.require_subcommand(1);

    std::string graph_source;
    std::string out_dir = "cnr-out";
    auto* solve = app.add_subcommand("solve", "solve a finite graph and write eta.csv, summary.txt and a table cache");
    solve->add_option("--graph", graph_source, "path or builtin:p5 | builtin:tri:K | builtin:sq:N | builtin:path:M | builtin:cycle:M")->required();
    solve->add_option("--out", out_dir, "output directory")->capture_default_str();

    std::string level = "quick";
    std::uint64_t seed = 20240601;
    std::string filter;
    std::string check_out;
    auto* check = app.add_subcommand("check", "run the claim verification suite");
    check->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}))->capture_default_str();
    check->add_option("--seed", seed)->capture_default_str();
    check->add_option("--filter", filter, "only claims whose id contains this text");
    check->add_option("--out", check_out, "directory for claims.csv");

    std::string k_list = "2,4,6,8,10,12,14,16,18,20";
    std::string growth_out;
    auto* growth = app.add_subcommand("growth", "eta(G) and rho(G) over triangular truncations");
    growth->add_option("--k", k_list, "increasing comma-separated list")->capture_default_str();
    growth->add_option("--out", growth_out, "directory for growth.csv");

    PlayOptions play_options;
    std::string play_out;
    std::uint64_t move_cap = 0;
    auto* play = app.add_subcommand("play", "simulate one game and print or write its transcript");
    play->add_option("--graph", play_options.graph, "quadrant or a finite graph source")->capture_default_str();
    play->add_option("--cop", play_options.cop, "papercop, table, stay, random")->capture_default_str();
    play->add_option("--robber", play_options.robber, "paperrobber, minimax, table, stay, random")->capture_default_str();
    play->add_option("--cop-start", play_options.cop_start, "x,y")->capture_default_str();
    play->add_option("--robber-start", play_options.robber_start, "x,y")->capture_default_str();
    play->add_option("--convention", play_options.convention, "copfirst or robberfirst")
        ->check(CLI::IsMember({"copfirst", "robberfirst"}))
        ->capture_default_str();
    play->add_option("--move-cap", move_cap, "cop moves before giving up (default 4*max start + 16)");
    play->add_option("--seed", play_options.seed)->capture_default_str();
    play->add_option("--bound", play_options.bound, "coordinate bound for random and minimax (default 4*max start)");
    play->add_option("--horizon", play_options.horizon, "minimax horizon")->capture_default_str();
    play->add_option("--out", play_out, "transcript file");

    std::string host = "127.0.0.1";
    int port = 8080;
    std::uint64_t serve_seed = 1;
    auto* serve = app.add_subcommand("serve", "run the session service");
    serve->add_option("--port", port)->capture_default_str();
    serve->add_option("--host", host)->capture_default_str();
    serve->add_option("--seed", serve_seed)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*solve) return cmd_solve(graph_source, out_dir);
        if (*check) return cmd_check(parse_level(level), seed, filter, check_out.empty() ? std::nullopt : std::optional<fs::path>(check_out));
        if (*growth) return cmd_growth(k_list, growth_out.empty() ? std::nullopt : std::optional<fs::path>(growth_out));
        if (*play) {
            if (move_cap) play_options.move_cap = move_cap;
            if (!play_out.empty()) play_options.out = play_out;
            return cmd_play(play_options);
        }
        if (*serve) return cmd_serve(host, port, serve_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
