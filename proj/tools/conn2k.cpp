#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "conn2k/augment.hpp"
#include "conn2k/conncheck.hpp"
#include "conn2k/gen.hpp"
#include "conn2k/io.hpp"
#include "conn2k/oracle.hpp"

namespace {

using namespace conn2k;

// Exit codes: 0 success/verified, 1 verification failure, 2 input error,
// 3 internal-error diagnostic.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

std::string ids_1based(const std::vector<int>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(ids[i] + 1);
    }
    return out;
}

AssertLevel parse_assert_level(const std::string& s) {
    if (s == "off") return AssertLevel::off;
    if (s == "cheap") return AssertLevel::cheap;
    if (s == "full") return AssertLevel::full;
    throw ParseError("unknown assert level: " + s);
}

// Relabels vertex sid (0-based) of g to the highest index so it can play s.
// old_of_new[i] gives the original label of star vertex i.
StarGraph designate_s(const CapGraph& g, int sid, std::vector<int>& old_of_new) {
    int n = g.vertex_count();
    if (sid < 0 || sid >= n) throw ParseError("-s vertex id out of range");
    std::vector<int> new_of_old(n);
    old_of_new.assign(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (v != sid) {
            new_of_old[v] = next;
            old_of_new[next] = v;
            ++next;
        }
    new_of_old[sid] = n - 1;
    old_of_new[n - 1] = sid;
    CapGraph h(n);
    for (auto& [u, v, c] : g.edges()) h.add_capacity(new_of_old[u], new_of_old[v], c);
    return StarGraph(std::move(h));
}

void print_biset_witness(const StarGraph& h, int k, const Biset& b) {
    std::cout << "witness biset inner " << ids_1based(b.inner.members()) << " outer "
              << ids_1based(b.outer.members()) << " f " << f_value(h, k, b) << '\n';
}

int cmd_check(const std::string& file, int k) {
    CapGraph g = parse_instance_file(file);
    StarGraph h = StarGraph::attach(g);
    ConnVerdict verdict = is_2k_conn_in_v(h, k);
    if (verdict.ok) {
        std::cout << "ok\n";
        return kExitOk;
    }
    if (verdict.biset_witness) print_biset_witness(h, k, *verdict.biset_witness);
    return kExitVerifyFail;
}

int cmd_extend(const std::string& file, int k) {
    CapGraph g = parse_instance_file(file);
    Extension ext = minimal_even_extension(g, k);
    for (int v = 0; v < g.vertex_count(); ++v)
        std::cout << "s " << v + 1 << ' ' << ext.star.graph.capacity(ext.star.s(), v) << '\n';
    std::cout << "total " << ext.star.s_degree() << '\n';
    return kExitOk;
}

int cmd_augment(const std::string& file, int k, const std::string& algo_name, bool verify,
                bool stats, const std::string& out_path, AssertLevel level) {
    CapGraph g = parse_instance_file(file);
    Algo algo;
    if (algo_name == "fast")
        algo = Algo::fast;
    else if (algo_name == "naive")
        algo = Algo::naive;
    else
        throw ParseError("--algo must be fast or naive");

    auto [augmented, result] = augment(g, k, algo, level);
    std::cout << "c algo=" << algo_name << " k=" << k << " n=" << g.vertex_count() << '\n';
    for (auto& [u, v, c] : result.added) std::cout << "a " << u + 1 << ' ' << v + 1 << ' ' << c << '\n';
    std::cout << "s total " << result.total << '\n';
    if (stats)
        std::cout << "c iters=" << result.stats.iterations << " maxsplits=" << result.stats.maximal_splits
                  << " mincuts=" << result.stats.mincut_calls << '\n';
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot open output file: " + out_path);
        write_instance(out, augmented);
    }
    if (verify && !is_2k_conn_in_v(StarGraph::attach(augmented), k).ok) {
        std::cerr << "verification failed: result is not (2," << k << ")-connected\n";
        return kExitVerifyFail;
    }
    return kExitOk;
}

int cmd_mincut(const std::string& file, int s_1based) {
    CapGraph g = parse_instance_file(file);
    if (s_1based > 0) {
        std::vector<int> old_of_new;
        StarGraph h = designate_s(g, s_1based - 1, old_of_new);
        CutResult cut = restricted_min_cut(h);
        std::vector<int> side;
        for (int v : cut.side.members()) side.push_back(old_of_new[v]);
        std::cout << "value " << cut.value << '\n' << "side " << ids_1based(side) << '\n';
    } else {
        CutResult cut = global_min_cut(g);
        std::cout << "value " << cut.value << '\n' << "side " << ids_1based(cut.side.members()) << '\n';
    }
    return kExitOk;
}

int cmd_oracle_check(const std::string& file, int k) {
    CapGraph g = parse_instance_file(file);
    StarGraph h = StarGraph::attach(g);
    ConnVerdict verdict = oracle::bf_is_2k_conn(h, k);
    if (verdict.ok) {
        std::cout << "ok\n";
        return kExitOk;
    }
    if (verdict.biset_witness) print_biset_witness(h, k, *verdict.biset_witness);
    return kExitVerifyFail;
}

int cmd_oracle_mincut(const std::string& file, int s_1based) {
    CapGraph g = parse_instance_file(file);
    std::vector<int> old_of_new;
    StarGraph h = s_1based > 0 ? designate_s(g, s_1based - 1, old_of_new) : StarGraph::attach(g);
    CutResult cut = oracle::bf_restricted_min_cut(h);
    std::vector<int> side;
    for (int v : cut.side.members()) side.push_back(s_1based > 0 ? old_of_new[v] : v);
    std::cout << "value " << cut.value << '\n' << "side " << ids_1based(side) << '\n';
    return kExitOk;
}

int cmd_oracle_opt(const std::string& file, int k, long long budget) {
    CapGraph g = parse_instance_file(file);
    auto found = oracle::bf_min_augmentation(g, k, budget);
    if (!found) {
        std::cout << "none within budget " << budget << '\n';
        return kExitOk;
    }
    for (auto& [u, v, c] : found->added) std::cout << "a " << u + 1 << ' ' << v + 1 << ' ' << c << '\n';
    std::cout << "s total " << found->total << '\n';
    return kExitOk;
}

int cmd_oracle_obstacle(const std::string& file, int k, int s_1based) {
    CapGraph g = parse_instance_file(file);
    std::vector<int> old_of_new;
    StarGraph h = s_1based > 0 ? designate_s(g, s_1based - 1, old_of_new) : StarGraph::attach(g);
    auto translate = [&](int v) { return s_1based > 0 ? old_of_new[v] : v; };
    auto obstacle = oracle::find_obstacle(h, k);
    if (!obstacle) {
        std::cout << "none\n";
        return kExitOk;
    }
    std::cout << "obstacle special " << translate(obstacle->special) + 1
              << (obstacle->vacuous_cover ? " (empty collection)" : "") << '\n';
    for (auto& b : obstacle->bisets) {
        std::vector<int> inner, outer;
        for (int v : b.inner.members()) inner.push_back(translate(v));
        for (int v : b.outer.members()) outer.push_back(translate(v));
        std::cout << "biset inner " << ids_1based(inner) << " outer " << ids_1based(outer) << '\n';
    }
    return kExitOk;
}

int cmd_gen(int n, double p, long long max_cap, std::uint64_t seed, const std::string& out_path) {
    CapGraph g = random_instance(n, p, max_cap, seed);
    if (out_path.empty()) {
        write_instance(std::cout, g);
    } else {
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot open output file: " + out_path);
        write_instance(out, g);
    }
    return kExitOk;
}

int cmd_bench(const std::string& sizes_arg, int trials, std::uint64_t seed, int k, double p,
              long long max_cap, AssertLevel level) {
    std::vector<int> sizes;
    std::stringstream ss(sizes_arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) sizes.push_back(std::stoi(tok));
    if (sizes.empty()) throw ParseError("--sizes must list at least one size");

    std::cout << "n,m,k,algo,seed,wall_time_ms,maximal_splits,mincut_calls,added_total\n";
    for (int n : sizes) {
        for (int trial = 0; trial < trials; ++trial) {
            std::uint64_t inst_seed = seed + std::uint64_t(n) * 1000003u + std::uint64_t(trial);
            double prob = p > 0 ? p : 2.0 / n;
            CapGraph g = random_instance(n, prob, max_cap, inst_seed);
            Capacity totals[2];
            const char* names[2] = {"naive", "fast"};
            for (int a = 0; a < 2; ++a) {
                auto t0 = std::chrono::steady_clock::now();
                std::pair<CapGraph, AugmentationResult> run;
                try {
                    run = augment(g, k, a == 0 ? Algo::naive : Algo::fast, level);
                } catch (const std::exception& e) {
                    std::cerr << "bench failure at seed " << inst_seed << " n=" << n << " algo=" << names[a]
                              << ": " << e.what() << '\n';
                    throw;
                }
                auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
                totals[a] = run.second.total;
                std::cout << n << ',' << g.edge_count() << ',' << k << ',' << names[a] << ',' << inst_seed
                          << ',' << ms.count() << ',' << run.second.stats.maximal_splits << ','
                          << run.second.stats.mincut_calls << ',' << run.second.total << '\n';
            }
            if (totals[0] != totals[1])
                throw InternalError("bench: naive and fast disagree at seed " + std::to_string(inst_seed));
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"(2,k)-connectivity augmentation toolkit"};
    app.require_subcommand(1);
    std::string assert_level_name = "cheap";
    app.add_option("--assert-level", assert_level_name, "off|cheap|full")->capture_default_str();

    std::string file, algo = "fast", out_path, sizes;
    int k = 2, s_id = 0, n = 10, trials = 3;
    long long budget = 6, max_cap = 3;
    double p = 0.5, bench_p = 0.0;
    std::uint64_t seed = 1;
    bool verify = false, stats = false;

    auto* c_check = app.add_subcommand("check", "test (2,k)-connectivity");
    c_check->add_option("-k", k)->required();
    c_check->add_option("file", file)->required();

    auto* c_extend = app.add_subcommand("extend", "minimal even extension");
    c_extend->add_option("-k", k)->required();
    c_extend->add_option("file", file)->required();

    auto* c_augment = app.add_subcommand("augment", "minimum (2,k)-connected augmentation");
    c_augment->add_option("-k", k)->required();
    c_augment->add_option("--algo", algo, "fast|naive")->capture_default_str();
    c_augment->add_flag("--verify", verify);
    c_augment->add_flag("--stats", stats);
    c_augment->add_option("-o", out_path, "write the augmented instance here");
    c_augment->add_option("file", file)->required();

    auto* c_mincut = app.add_subcommand("mincut", "minimum cut (restricted when -s is given)");
    c_mincut->add_option("-s", s_id, "1-based id of the designated vertex");
    c_mincut->add_option("file", file)->required();

    auto* c_oracle = app.add_subcommand("oracle", "brute-force reference computations");
    c_oracle->require_subcommand(1);
    auto* o_check = c_oracle->add_subcommand("check");
    o_check->add_option("-k", k)->required();
    o_check->add_option("file", file)->required();
    auto* o_mincut = c_oracle->add_subcommand("mincut");
    o_mincut->add_option("-s", s_id);
    o_mincut->add_option("file", file)->required();
    auto* o_opt = c_oracle->add_subcommand("opt");
    o_opt->add_option("-k", k)->required();
    o_opt->add_option("--budget", budget)->capture_default_str();
    o_opt->add_option("file", file)->required();
    auto* o_obstacle = c_oracle->add_subcommand("obstacle");
    o_obstacle->add_option("-k", k)->required();
    o_obstacle->add_option("-s", s_id);
    o_obstacle->add_option("file", file)->required();

    auto* c_gen = app.add_subcommand("gen", "deterministic random instance");
    c_gen->add_option("-n", n)->required();
    c_gen->add_option("-p", p, "edge probability")->capture_default_str();
    c_gen->add_option("--max-cap", max_cap)->capture_default_str();
    c_gen->add_option("--seed", seed)->capture_default_str();
    c_gen->add_option("-o", out_path);

    auto* c_bench = app.add_subcommand("bench", "naive vs fast operation counts, CSV on stdout");
    c_bench->add_option("--sizes", sizes, "comma-separated vertex counts")->required();
    c_bench->add_option("--trials", trials)->capture_default_str();
    c_bench->add_option("--seed", seed)->capture_default_str();
    c_bench->add_option("-k", k)->capture_default_str();
    c_bench->add_option("-p", bench_p, "edge probability, 0 = use 2/n");
    c_bench->add_option("--max-cap", max_cap)->capture_default_str();

    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough(true);
        for (auto* nested : sub->get_subcommands({})) nested->fallthrough(true);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        AssertLevel level = parse_assert_level(assert_level_name);
        if (*c_check) return cmd_check(file, k);
        if (*c_extend) return cmd_extend(file, k);
        if (*c_augment) return cmd_augment(file, k, algo, verify, stats, out_path, level);
        if (*c_mincut) return cmd_mincut(file, s_id);
        if (*o_check) return cmd_oracle_check(file, k);
        if (*o_mincut) return cmd_oracle_mincut(file, s_id);
        if (*o_opt) return cmd_oracle_opt(file, k, budget);
        if (*o_obstacle) return cmd_oracle_obstacle(file, k, s_id);
        if (*c_gen) return cmd_gen(n, p, max_cap, seed, out_path);
        if (*c_bench) return cmd_bench(sizes, trials, seed, k, bench_p, max_cap, level);
        return kExitInput;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const InvalidArgument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    }
}
