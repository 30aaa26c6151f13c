// Command-line front end: game numbers, bounds, generalized Petersen sweeps,
// graph generation, and an interactive play mode.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "surround/bounds.hpp"
#include "surround/designs.hpp"
#include "surround/errors.hpp"
#include "surround/families.hpp"
#include "surround/graph.hpp"
#include "surround/oracle.hpp"
#include "surround/record.hpp"
#include "surround/solver.hpp"
#include "surround/strategy.hpp"
#include "surround/sweep.hpp"

#ifndef SURROUND_DATA_DIR
#define SURROUND_DATA_DIR "data"
#endif

namespace {

using namespace surround;

constexpr int kRoundCap = 100;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> whitespace_tokens(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

// ---------------------------------------------------------------------------
// Shared graph-input flags.

struct GraphInput {
    std::string family;
    std::string graph6_path;
    std::string edges_path;
    std::string design;
    bool big = false;
};

void add_graph_flags(CLI::App* cmd, GraphInput& in) {
    cmd->add_option("--family", in.family,
                    "Graph family spec, e.g. \"gp 7 2\", \"path 6\", \"petersen\"");
    cmd->add_option("--graph6", in.graph6_path, "File containing a graph6 line");
    cmd->add_option("--edges", in.edges_path, "Edge-list file (\"u v\" per line)");
    cmd->add_option("--design", in.design,
                    "Builtin design name (fano, ag23) or design file; solves on its "
                    "incidence graph unless --big is given");
    cmd->add_flag("--big", in.big, "With --design: use the block-intersection graph");
}

struct LoadedGraph {
    Graph g;
    std::string desc;
    std::string digest;    // nonempty only for file-based input
};

LoadedGraph load_graph(const GraphInput& in) {
    const int sources = static_cast<int>(!in.family.empty()) +
                        static_cast<int>(!in.graph6_path.empty()) +
                        static_cast<int>(!in.edges_path.empty()) +
                        static_cast<int>(!in.design.empty());
    if (sources != 1) {
        throw parse_error("exactly one of --family, --graph6, --edges, --design is required");
    }
    if (in.big && in.design.empty()) throw parse_error("--big requires --design");

    LoadedGraph out;
    if (!in.family.empty()) {
        FamilySpec spec = FamilySpec::parse(whitespace_tokens(in.family));
        out.g = make_family(spec);
        out.desc = spec.to_string();
    } else if (!in.graph6_path.empty()) {
        std::string text = read_file(in.graph6_path);
        std::istringstream is(text);
        std::string line;
        std::string first;
        while (std::getline(is, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) {
                first = line;
                break;
            }
        }
        if (first.empty()) throw parse_error("no graph6 line in " + in.graph6_path);
        out.g = parse_graph6(first);
        out.desc = "file:" + in.graph6_path;
        out.digest = fnv1a_digest(text);
    } else if (!in.edges_path.empty()) {
        std::string text = read_file(in.edges_path);
        out.g = parse_edge_list(text);
        out.desc = "file:" + in.edges_path;
        out.digest = fnv1a_digest(text);
    } else {
        Design d;
        const auto names = builtin_design_names();
        if (std::find(names.begin(), names.end(), in.design) != names.end()) {
            d = builtin_design(in.design);
            out.desc = "design:" + in.design;
        } else {
            std::string text = read_file(in.design);
            d = parse_design(text);
            out.desc = "design-file:" + in.design;
            out.digest = fnv1a_digest(text);
        }
        out.g = in.big ? block_intersection_graph(d) : incidence_graph(d);
        out.desc += in.big ? "/big" : "/incidence";
    }
    return out;
}

std::string game_symbol(Variant v) {
    return v == Variant::surround ? "sigma" : "c";
}

// ---------------------------------------------------------------------------
// number

struct NumberOpts {
    GraphInput input;
    std::string game = "surround";
    std::string mode = "worklist";
    std::uint64_t budget = 5'000'000;
    std::uint64_t op_budget = 0;
    int cops = 0;
    bool no_bounds = false;
    bool json = false;
    bool naive = false;
};

int run_number(const NumberOpts& o) {
    LoadedGraph lg = load_graph(o.input);
    const Variant variant = variant_from_name(o.game);
    SolveOptions so;
    so.config_budget = o.budget;
    so.op_budget = o.op_budget;
    so.mode = mode_from_name(o.mode);
    so.use_bounds = !o.no_bounds;

    if (o.cops > 0) {
        const bool rw = o.naive ? naive_robber_wins(lg.g, o.cops, variant)
                                : robber_wins(lg.g, o.cops, variant, so);
        if (o.json) {
            nlohmann::json j{{"graph", lg.desc},
                             {"variant", variant_name(variant)},
                             {"k", o.cops},
                             {"cops_win", !rw}};
            if (!lg.digest.empty()) j["digest"] = lg.digest;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << lg.desc << ", " << variant_name(variant) << ", k=" << o.cops << ": "
                      << (rw ? "robber wins" : "cops win") << "\n";
        }
        return rw ? 1 : 0;
    }

    ResultRecord rec;
    rec.graph = lg.desc;
    rec.digest = lg.digest;
    rec.variant = variant;
    rec.mode = so.mode;
    if (o.naive) {
        if (!lg.g.connected()) throw disconnected_error("graph is not connected");
        GameNumberResult res;
        res.bracket = {1, lg.g.order()};
        for (int k = 1; k <= lg.g.order(); ++k) {
            auto t0 = std::chrono::steady_clock::now();
            const bool rw = naive_robber_wins(lg.g, k, variant);
            const double dt =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            res.trials.push_back({k, rw, dt});
            if (!rw) {
                res.number = k;
                break;
            }
        }
        rec.result = res;
    } else {
        rec.result = game_number(lg.g, variant, so);
    }

    if (o.json) {
        std::cout << to_json(rec).dump(2) << "\n";
    } else {
        std::cout << game_symbol(variant) << "(" << lg.desc << ") = " << rec.result.number
                  << "\n";
        std::cout << "bracket: " << rec.result.bracket.lo << ".." << rec.result.bracket.hi
                  << (rec.result.pinned_by_bounds ? " (pinned by bounds)" : "") << "\n";
        for (const KTrial& t : rec.result.trials) {
            std::printf("k=%d: %s (%.2fs)\n", t.k, t.robber_wins ? "robber wins" : "cops win",
                        t.seconds);
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// bounds

int run_bounds(const GraphInput& input, bool json) {
    LoadedGraph lg = load_graph(input);
    LowerBounds lo = lower_bounds(lg.g);
    UpperBounds hi = upper_bounds(lg.g);
    Bracket b = sigma_bracket(lg.g);
    if (json) {
        nlohmann::json j = bracket_json(b, lo, hi);
        j["graph"] = lg.desc;
        if (!lg.digest.empty()) j["digest"] = lg.digest;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "graph: " << lg.desc << "\n";
    std::cout << "lower: min_degree=" << lo.min_degree << " clique_minus_one=" << lo.clique_minus_one;
    if (lo.girth_rule) std::cout << " girth_rule=" << *lo.girth_rule;
    std::cout << " best=" << lo.best() << (lo.exact ? "" : " (clique search truncated)") << "\n";
    std::cout << "upper: vertex_cover=" << hi.vertex_cover
              << " elim_width_plus_one=" << hi.elim_width_plus_one << " best=" << hi.best()
              << (hi.exact ? "" : " (independence search truncated)") << "\n";
    std::cout << "bracket: " << b.lo << ".." << b.hi << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepCliOpts {
    int nmax = 12;
    int kmax = 0;
    std::string game = "surround";
    std::string out;
    std::string tables = SURROUND_DATA_DIR;
    int workers = 1;
    bool stable = false;
    bool compare = false;
    std::uint64_t budget = 5'000'000;
};

int run_sweep_cmd(const SweepCliOpts& o) {
    SweepOptions sw;
    sw.nmax = o.nmax;
    sw.kmax = o.kmax;
    sw.variant = variant_from_name(o.game);
    sw.workers = o.workers;
    sw.stable = o.stable;
    sw.config_budget = o.budget;
    // stable mode promises byte-identical output, so per-cell progress lines
    // (whose order depends on worker scheduling) are suppressed
    std::vector<SweepCell> rows = run_sweep(sw, o.out, o.stable ? nullptr : &std::cout);
    if (o.out.empty()) {
        std::cout << format_sweep_csv(rows);
    } else {
        std::cout << "wrote " << rows.size() << " rows to " << o.out << "\n";
    }
    if (o.compare) {
        const std::string ref_path =
            o.tables + "/gp_" + variant_name(sw.variant) + "_table.csv";
        CompareReport rep = compare_sweep(rows, read_reference_csv(ref_path));
        std::cout << "compare vs " << ref_path << ": " << rep.compared << " compared, "
                  << rep.matched << " matched, " << rep.mismatched << " mismatched, "
                  << rep.missing_reference << " without reference\n";
        for (const std::string& line : rep.mismatch_lines) std::cout << "  " << line << "\n";
        return rep.mismatched == 0 ? 0 : 1;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// gen

int run_gen(const GraphInput& input, const std::string& format, const std::string& out_path) {
    LoadedGraph lg = load_graph(input);
    std::string text;
    if (format == "graph6") {
        text = write_graph6(lg.g) + "\n";
    } else if (format == "edges") {
        text = write_edge_list(lg.g);
    } else {
        throw parse_error("unknown output format: " + format);
    }
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
        if (!out) throw parse_error("cannot write file: " + out_path);
        out << text;
        std::cout << "wrote " << (format == "graph6" ? "graph6" : "edge list") << " for "
                  << lg.desc << " to " << out_path << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// play

std::optional<std::string> prompt_line(const std::string& prompt) {
    std::cout << prompt << std::flush;
    std::string line;
    if (!std::getline(std::cin, line)) return std::nullopt;
    return line;
}

std::string describe_config(const Graph& g, std::span<const int> positions) {
    std::string out;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (i) out += " ";
        out += g.label(positions[i]);
    }
    return out;
}

// Parse k cop positions by label or index; nullopt if the line is unusable.
std::optional<std::vector<int>> parse_positions(const Graph& g, const std::string& line, int k) {
    std::vector<std::string> toks = whitespace_tokens(line);
    if (static_cast<int>(toks.size()) != k) {
        std::cout << "need exactly " << k << " vertices\n";
        return std::nullopt;
    }
    std::vector<int> pos;
    for (const std::string& t : toks) {
        int v = g.vertex_by_label(t);
        if (v < 0) {
            std::cout << "unknown vertex '" << t << "'\n";
            return std::nullopt;
        }
        pos.push_back(v);
    }
    std::sort(pos.begin(), pos.end());
    return pos;
}

bool robber_lost_at(const Graph& g, Variant variant, std::span<const int> cops, int r) {
    std::vector<char> occ(static_cast<std::size_t>(g.order()), 0);
    for (int p : cops) occ[static_cast<std::size_t>(p)] = 1;
    if (variant == Variant::capture) return occ[static_cast<std::size_t>(r)] != 0;
    for (int u : g.neighbor_list(r)) {
        if (!occ[static_cast<std::size_t>(u)]) return false;
    }
    return true;
}

int play_as_robber(const Graph& g, int k, Variant variant, const StrategyOptions& sopts) {
    StrategyTable table(g, k, variant, sopts);
    if (!table.solved_for_cops()) {
        std::cout << "internal error: cop strategy table unsolved\n";
        return 1;
    }
    std::cout << "You are the robber against " << k << " cop(s); variant: "
              << variant_name(variant) << ". Enter vertices by label or index.\n";
    std::uint64_t cfg = table.initial_config();
    std::vector<int> pos(static_cast<std::size_t>(k));
    table.space().unrank(cfg, pos);
    std::cout << "cops start at: " << describe_config(g, pos) << "\n";
    if (table.immediate_win()) {
        std::cout << "no free vertex to stand on -- cops win immediately\n";
        return 0;
    }

    int r = -1;
    for (;;) {
        auto line = prompt_line("place the robber: ");
        if (!line) return 0;
        std::vector<std::string> toks = whitespace_tokens(*line);
        if (toks.empty()) continue;
        int v = g.vertex_by_label(toks[0]);
        if (v < 0) {
            std::cout << "unknown vertex\n";
            continue;
        }
        if (table.occupied(cfg, v)) {
            std::cout << "that vertex is occupied by a cop\n";
            continue;
        }
        r = v;
        break;
    }
    if (robber_lost_at(g, variant, pos, r)) {
        std::cout << "that vertex is already "
                  << (variant == Variant::surround ? "surrounded" : "lost") << " -- cops win\n";
        return 0;
    }

    for (int round = 1; round <= kRoundCap; ++round) {
        const std::uint32_t mv = table.cop_move(cfg, r);
        if (mv == StrategyTable::kNoMove) {
            std::cout << "cops have no recorded move here -- you escaped the table\n";
            return 0;
        }
        cfg = mv;
        table.space().unrank(cfg, pos);
        std::cout << "round " << round << ", cops move to: " << describe_config(g, pos) << "\n";
        if (robber_lost_at(g, variant, pos, r)) {
            std::cout << (variant == Variant::surround ? "surrounded" : "caught") << " at "
                      << g.label(r) << " after " << round << " round(s) -- cops win\n";
            return 0;
        }
        std::vector<int> moves = table.robber_moves(cfg, r);
        std::string opts;
        for (std::size_t i = 0; i < moves.size(); ++i) {
            if (i) opts += " ";
            opts += g.label(moves[i]);
        }
        for (;;) {
            auto line = prompt_line("your move [" + opts + "]: ");
            if (!line) return 0;
            std::vector<std::string> toks = whitespace_tokens(*line);
            if (toks.empty()) continue;
            int v = g.vertex_by_label(toks[0]);
            if (v < 0 || std::find(moves.begin(), moves.end(), v) == moves.end()) {
                std::cout << "not a legal move\n";
                continue;
            }
            r = v;
            break;
        }
        if (robber_lost_at(g, variant, pos, r)) {
            std::cout << (variant == Variant::surround ? "surrounded" : "caught") << " at "
                      << g.label(r) << " -- cops win\n";
            return 0;
        }
    }
    std::cout << "round cap reached -- stopping\n";
    return 0;
}

int play_as_cops(const Graph& g, int k, Variant variant, const SolveOptions& so) {
    PsiMap pm = init_psi(g, k, variant, so);
    refine_to_fixpoint(pm, so);
    RobberPolicy policy(pm);
    std::cout << "You are " << k << " cop(s) against the robber; variant: "
              << variant_name(variant)
              << ". Enter all cop positions on one line (stacking allowed).\n";

    std::vector<int> cur;
    for (;;) {
        auto line = prompt_line("place the cops: ");
        if (!line) return 0;
        auto pos = parse_positions(g, *line, k);
        if (!pos) continue;
        cur = *pos;
        break;
    }
    int r = policy.place(pm.space().rank(cur));
    std::cout << "robber appears at: " << g.label(r) << "\n";

    for (int round = 1; round <= kRoundCap; ++round) {
        std::vector<int> next;
        for (;;) {
            auto line = prompt_line("round " + std::to_string(round) + ", move the cops: ");
            if (!line) return 0;
            auto pos = parse_positions(g, *line, k);
            if (!pos) continue;
            if (!config_move_legal(g, CopConfig{cur}, CopConfig{*pos})) {
                std::cout << "illegal: each cop may stay or cross one edge\n";
                continue;
            }
            next = *pos;
            break;
        }
        cur = next;
        if (robber_lost_at(g, variant, cur, r)) {
            std::cout << "the robber is " << (variant == Variant::surround ? "surrounded" : "caught")
                      << " -- cops win (this should not happen against this policy)\n";
            return 0;
        }
        r = policy.reply(r, pm.space().rank(cur));
        std::cout << "robber moves to: " << g.label(r) << "\n";
        if (robber_lost_at(g, variant, cur, r)) {
            std::cout << "the robber walked into a loss -- cops win\n";
            return 0;
        }
    }
    std::cout << "the robber survived " << kRoundCap << " rounds -- game called for the robber\n";
    return 0;
}

struct PlayOpts {
    GraphInput input;
    std::string game = "surround";
    int cops = 0;
    std::uint64_t budget = 5'000'000;
};

int run_play(const PlayOpts& o) {
    LoadedGraph lg = load_graph(o.input);
    const Variant variant = variant_from_name(o.game);
    SolveOptions so;
    so.config_budget = o.budget;
    int k = o.cops;
    if (k <= 0) {
        GameNumberResult res = game_number(lg.g, variant, so);
        k = res.number;
        std::cout << game_symbol(variant) << "(" << lg.desc << ") = " << k << "\n";
    }
    if (!lg.g.connected()) throw disconnected_error("play mode needs a connected graph");
    const bool rw = robber_wins(lg.g, k, variant, so);
    if (rw) return play_as_cops(lg.g, k, variant, so);
    StrategyOptions sopts;
    sopts.config_budget = o.budget;
    return play_as_robber(lg.g, k, variant, sopts);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pursuit games on graphs: surrounding and classic cop numbers"};
    app.require_subcommand(1);

    NumberOpts num;
    CLI::App* number = app.add_subcommand("number", "Compute the game number of a graph");
    add_graph_flags(number, num.input);
    number->add_option("--game", num.game, "surround (default) or capture");
    number->add_option("--mode", num.mode, "Refinement schedule: worklist (default) or faithful");
    number->add_option("--budget", num.budget, "Max cop configurations per solver run");
    number->add_option("--op-budget", num.op_budget,
                       "Max successor-enumeration operations (0 = unlimited)");
    number->add_option("--cops", num.cops,
                       "Test this many cops instead of searching; exit 0 when cops win, 1 "
                       "when the robber wins");
    number->add_flag("--no-bounds", num.no_bounds, "Search upward from k=1 without bound help");
    number->add_flag("--json", num.json, "Emit a JSON record");
    number
        ->add_flag("--naive-oracle", num.naive,
                   "Use the slow tuple-state reference solver instead of the production one")
        ->group("");    // hidden

    GraphInput bounds_in;
    bool bounds_json = false;
    CLI::App* bounds = app.add_subcommand("bounds", "Degree/clique/cover bounds and the bracket");
    add_graph_flags(bounds, bounds_in);
    bounds->add_flag("--json", bounds_json, "Emit JSON");

    SweepCliOpts sw;
    CLI::App* sweep = app.add_subcommand("sweep", "Tabulate gp(n,k) game numbers");
    sweep->add_option("--nmax", sw.nmax, "Largest n (default 12)");
    sweep->add_option("--kmax", sw.kmax, "Largest k (default: all k with 2k < n)");
    sweep->add_option("--game", sw.game, "surround (default) or capture");
    sweep->add_option("--out", sw.out, "CSV output file; reruns resume finished rows");
    sweep->add_option("--workers", sw.workers, "Parallel workers (default 1)");
    sweep->add_flag("--stable", sw.stable,
                    "Byte-reproducible output: zero the seconds column, no progress lines");
    sweep->add_flag("--compare", sw.compare, "Compare against the bundled reference table");
    sweep->add_option("--tables", sw.tables, "Directory holding the reference tables");
    sweep->add_option("--budget", sw.budget, "Max cop configurations per cell");

    GraphInput gen_in;
    std::string gen_format = "graph6";
    std::string gen_out;
    CLI::App* gen = app.add_subcommand("gen", "Write a graph in graph6 or edge-list form");
    add_graph_flags(gen, gen_in);
    gen->add_option("--format", gen_format, "graph6 (default) or edges");
    gen->add_option("--out", gen_out, "Output file (default stdout)");

    PlayOpts play;
    CLI::App* playc = app.add_subcommand("play", "Play one side interactively");
    add_graph_flags(playc, play.input);
    playc->add_option("--game", play.game, "surround (default) or capture");
    playc->add_option("--cops", play.cops, "Cop count (default: the game number)");
    playc->add_option("--budget", play.budget, "Max cop configurations");

    try {
        app.parse(argc, argv);
        if (number->parsed()) return run_number(num);
        if (bounds->parsed()) return run_bounds(bounds_in, bounds_json);
        if (sweep->parsed()) return run_sweep_cmd(sw);
        if (gen->parsed()) return run_gen(gen_in, gen_format, gen_out);
        if (playc->parsed()) return run_play(play);
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const surround::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const surround::budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const surround::disconnected_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
