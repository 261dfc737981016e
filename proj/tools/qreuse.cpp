// Copyright 2026 The qreuse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// qreuse: command-line front end for the qubit-reuse compiler.
//
// Exit codes:
//   0  success
//   1  verify: distributions differ
//   2  parse error (input file or command line)
//   3  invalid circuit or unsupported input
//   4  exact search timed out without a feasible order
//   5  simulation oracle limit exceeded
//   6  other error (I/O, bad argument values)

#include <atomic>
#include <chrono>
#include <csignal>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qreuse/circuit.hpp"
#include "qreuse/cones.hpp"
#include "qreuse/errors.hpp"
#include "qreuse/exact.hpp"
#include "qreuse/generators.hpp"
#include "qreuse/greedy.hpp"
#include "qreuse/io.hpp"
#include "qreuse/parallel.hpp"
#include "qreuse/pipeline.hpp"
#include "qreuse/simulator.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace qreuse;

enum Exit { kOk = 0, kVerifyFail = 1, kParse = 2, kInvalid = 3, kTimeout = 4, kOracle = 5, kOther = 6 };

std::atomic<bool> g_interrupted{false};

void on_interrupt(int) { g_interrupted = true; }

bool ends_with(const std::string &s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Circuit load_circuit(const std::string &path) {
    std::string text = read_file(path);
    if (ends_with(path, ".qasm")) {
        return import_qasm2_subset(text);
    }
    return parse_json(text);
}

std::vector<uint64_t> parse_u64_list(const std::string &text) {
    std::vector<uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        out.push_back(std::stoull(item, &used));
        if (used != item.size()) {
            throw std::invalid_argument("bad integer '" + item + "'");
        }
    }
    return out;
}

json order_json(const std::vector<QubitId> &order) { return json(order); }

std::string reversed(std::string s) { return {s.rbegin(), s.rend()}; }

json distribution_json(const Distribution &d, bool big_endian) {
    std::map<std::string, double> sorted;
    for (const auto &[bits, p] : d.probs) {
        sorted[big_endian ? reversed(bits) : bits] += p;
    }
    json out = json::object();
    for (const auto &[bits, p] : sorted) {
        out[bits] = p;
    }
    return out;
}

// clbit_map recorded by the compiler, or the identity on measured qubits when
// the file was not produced by `compile`.
std::map<QubitId, ClbitId> clbit_map_of(const Circuit &compiled, const Circuit &original) {
    std::map<QubitId, ClbitId> map;
    auto it = compiled.metadata.find("clbit_map");
    if (it != compiled.metadata.end()) {
        json parsed = json::parse(it->second);
        for (const auto &[k, v] : parsed.items()) {
            map[static_cast<QubitId>(std::stoul(k))] = v.get<ClbitId>();
        }
        return map;
    }
    for (const Operation &op : original.ops) {
        if (op.kind == OpKind::Measure) {
            map[op.qubit()] = *op.clbit;
        }
    }
    return map;
}

struct CompileArgs {
    std::string input, output;
    std::string strategy = "greedy-brute";
    bool dual = true;
    std::optional<size_t> budget;
    bool strict_budget = false;
    double time_limit = 600;
    std::string outputs, hint;
    bool no_seed = false;
    bool keep_final_resets = false;
};

int cmd_compile(const CompileArgs &a) {
    Circuit original = load_circuit(a.input);
    Circuit source = original;
    if (!a.outputs.empty()) {
        std::set<QubitId> keep;
        for (uint64_t q : parse_u64_list(a.outputs)) {
            keep.insert(static_cast<QubitId>(q));
        }
        source = restrict_to_outputs(original, keep);
    }
    CompileOptions options;
    auto strategy = parse_strategy(a.strategy);
    if (!strategy || *strategy == Strategy::BruteForce) {
        throw CLI::ValidationError("--strategy", "expected greedy, greedy-brute or exact");
    }
    options.strategy = *strategy;
    options.use_dual = a.dual;
    options.time_limit = a.time_limit;
    options.seed_exact = !a.no_seed;
    if (!a.hint.empty()) {
        std::vector<QubitId> hint;
        for (uint64_t q : parse_u64_list(a.hint)) {
            hint.push_back(static_cast<QubitId>(q));
        }
        options.hint = hint;
    }
    AllocationPolicy policy =
        a.budget ? AllocationPolicy::new_first_until(*a.budget) : AllocationPolicy::reuse_first();
    RewriteOptions rewrite_options{.strict_budget = a.strict_budget, .trailing_resets = a.keep_final_resets};

    Compilation result = compile(source, options, policy, rewrite_options);
    Circuit &out = result.compiled.circuit;
    out.metadata["source_sha256"] = sha256_hex(read_file(a.input));
    out.metadata["strategy"] = std::string(strategy_name(options.strategy));
    if (!a.output.empty()) {
        write_file(a.output, emit_json(out));
    }

    const size_t original_width = source.num_qubits;
    const size_t compiled_width = result.compiled.physical_width;
    size_t outputs = compute_cones(source, {.with_gates = false}).outputs.size();
    json report;
    report["original_width"] = original_width;
    report["compiled_width"] = compiled_width;
    report["order_width"] = result.order.width();
    report["strategy"] = strategy_name(options.strategy);
    report["via_dual"] = result.order.via_dual;
    report["optimal"] = result.order.optimal;
    report["elapsed"] = result.order.elapsed;
    report["nodes_explored"] = result.order.nodes_explored;
    report["policy"] = policy.to_string();
    report["order"] = order_json(result.order.order.order);
    report["no_compression_possible"] = result.order.width() >= outputs;
    if (!a.outputs.empty()) {
        report["restricted_outputs"] = source.metadata["restricted_outputs"];
    }
    if (!a.output.empty()) {
        report["output"] = a.output;
    }
    std::cout << report.dump(2) << "\n";
    std::cerr << "compiled " << a.input << ": " << original_width << " -> " << compiled_width << " qubits ("
              << strategy_name(options.strategy) << (result.order.via_dual ? ", via dual" : "")
              << (result.order.optimal ? ", optimal" : "") << ")"
              << (report["no_compression_possible"].get<bool>() ? "; no compression possible" : "") << "\n";
    return kOk;
}

int cmd_analyze(const std::string &input, bool with_cones) {
    Circuit c = load_circuit(input);
    ConeMap cones = compute_cones(c, {.with_gates = false});
    ConeMap dual_cones = compute_cones(dual(c), {.with_gates = false});
    json report;
    report["num_qubits"] = c.num_qubits;
    report["num_clbits"] = c.num_clbits;
    report["gates"] = c.gate_count();
    report["outputs"] = cones.outputs.size();
    size_t min_cone = SIZE_MAX, max_cone = 0;
    for (QubitId q : cones.outputs) {
        min_cone = std::min(min_cone, cones.cone_size(q));
        max_cone = std::max(max_cone, cones.cone_size(q));
    }
    report["min_cone"] = cones.outputs.empty() ? 0 : min_cone;
    report["max_cone"] = max_cone;
    report["greedy_width"] = greedy_order(cones).width();
    report["greedy_brute_width"] = greedy_brute_first(cones).width();
    report["dual_greedy_width"] = greedy_order(dual_cones).width();
    report["dual_greedy_brute_width"] = greedy_brute_first(dual_cones).width();
    if (with_cones) {
        json list = json::object();
        for (QubitId q : cones.outputs) {
            list[std::to_string(q)] = cones.inputs[q].to_vector();
        }
        report["cones"] = list;
    }
    std::cout << report.dump(2) << "\n";
    std::cerr << input << ": " << c.num_qubits << " qubits, cones " << report["min_cone"] << ".." << max_cone
              << ", greedy-brute width " << report["greedy_brute_width"] << " (dual "
              << report["dual_greedy_brute_width"] << ")\n";
    return kOk;
}

struct GenerateArgs {
    std::string family, output, graph_in, graph_out, s;
    uint32_t N = 0, Nx = 0, Ny = 0, k = 1, D = 2, chi = 2, p = 1;
    bool open = false;
    uint64_t seed = 0;
    std::optional<uint64_t> haar_seed;
    std::vector<double> betas, gammas;
};

int cmd_generate(const GenerateArgs &a) {
    auto family = parse_family(a.family);
    if (!family) {
        throw CLI::ValidationError("family", "unknown family '" + a.family + "'");
    }
    FamilyParams params;
    params.family = *family;
    params.N = a.N;
    params.Nx = a.Nx;
    params.Ny = a.Ny;
    params.k = a.k;
    params.D = a.D;
    params.chi = a.chi;
    params.p = a.p;
    params.periodic = !a.open;
    params.s = a.s;
    params.seed = a.seed;
    params.betas = a.betas;
    params.gammas = a.gammas;
    if (a.haar_seed) {
        params.gate_source = GateSource::haar(*a.haar_seed);
    }

    Circuit c;
    if (*family == Family::Qaoa) {
        Graph g = a.graph_in.empty() ? random_u3r_graph(a.N, a.seed) : parse_edge_list(read_file(a.graph_in));
        std::vector<double> betas = a.betas, gammas = a.gammas;
        if (betas.empty() && gammas.empty()) {
            betas.assign(a.p, kDefaultBeta);
            gammas.assign(a.p, kDefaultGamma);
        }
        c = qaoa_maxcut(g, betas, gammas);
        if (!a.graph_out.empty()) {
            write_file(a.graph_out, emit_edge_list(g));
        }
    } else {
        c = generate(params);
    }
    c.metadata["family"] = a.family;
    std::string text = emit_json(c);
    if (a.output.empty()) {
        std::cout << text;
    } else {
        write_file(a.output, text);
    }
    std::cerr << "generated " << a.family << ": " << c.num_qubits << " qubits, " << c.gate_count() << " gates";
    if (*family != Family::Qaoa) {
        std::cerr << ", predicted compiled width " << predicted_width(params);
    }
    std::cerr << "\n";
    return kOk;
}

struct VerifyArgs {
    std::string original, compiled;
    double tol = 1e-9;
    uint32_t max_qubits = 14;
    std::string bit_order = "little";
    bool show = false;
};

int cmd_verify(const VerifyArgs &a) {
    Circuit original = load_circuit(a.original);
    Circuit compiled = load_circuit(a.compiled);
    auto restricted = compiled.metadata.find("restricted_outputs");
    if (restricted != compiled.metadata.end()) {
        std::set<QubitId> keep;
        for (uint64_t q : parse_u64_list(restricted->second)) {
            keep.insert(static_cast<QubitId>(q));
        }
        original = restrict_to_outputs(original, keep);
    }
    SimOptions sim;
    sim.max_qubits = a.max_qubits;
    EquivalenceReport r = verify_equivalence(original, compiled, clbit_map_of(compiled, original), a.tol, sim);
    json report;
    report["pass"] = r.pass;
    report["tvd"] = r.tvd;
    report["tol"] = a.tol;
    report["original_support"] = r.original_support;
    report["compiled_support"] = r.compiled_support;
    if (a.show) {
        bool big = a.bit_order == "big";
        report["bit_order"] = a.bit_order;
        report["original_distribution"] = distribution_json(exact_distribution(original, sim), big);
    }
    std::cout << report.dump(2) << "\n";
    std::cerr << (r.pass ? "PASS" : "FAIL") << " tvd=" << format_double(r.tvd) << " (tol " << a.tol << ")\n";
    return r.pass ? kOk : kVerifyFail;
}

int cmd_simulate(const std::string &input, uint32_t max_qubits, const std::string &bit_order) {
    Circuit c = load_circuit(input);
    SimOptions sim;
    sim.max_qubits = max_qubits;
    Distribution d = exact_distribution(c, sim);
    std::cout << distribution_json(d, bit_order == "big").dump(2) << "\n";
    std::cerr << d.probs.size() << " outcomes, total probability " << format_double(d.total()) << "\n";
    return kOk;
}

struct BenchArgs {
    std::string family = "qaoa-u3r";
    std::string Ns = "80", ps = "1";
    uint64_t seeds = 10, seed_start = 0;
    std::string strategies = "greedy-brute+dual";
    double time_limit = 600;
    std::string csv;
    size_t threshold = 20;
};

struct BenchStrategy {
    std::string name;
    Strategy strategy;
    bool dual;
};

struct BenchRecord {
    uint32_t N;
    uint32_t p;
    uint64_t seed;
    const BenchStrategy *strategy;
    size_t width = 0;
    bool via_dual = false;
    bool optimal = false;
    double elapsed = 0;
    bool done = false;
};

int cmd_bench(const BenchArgs &a) {
    if (a.family != "qaoa-u3r") {
        throw CLI::ValidationError("--family", "only qaoa-u3r is supported");
    }
    std::vector<BenchStrategy> strategies;
    {
        std::stringstream ss(a.strategies);
        std::string item;
        while (std::getline(ss, item, ',')) {
            bool dual = ends_with(item, "+dual");
            auto s = parse_strategy(dual ? item.substr(0, item.size() - 5) : item);
            if (!s || *s == Strategy::BruteForce) {
                throw CLI::ValidationError("--strategies", "unknown strategy '" + item + "'");
            }
            strategies.push_back({item, *s, dual});
        }
    }
    std::vector<BenchRecord> cells;
    for (uint64_t N : parse_u64_list(a.Ns)) {
        for (uint64_t p : parse_u64_list(a.ps)) {
            for (uint64_t s = a.seed_start; s < a.seed_start + a.seeds; s++) {
                for (const BenchStrategy &st : strategies) {
                    cells.push_back({static_cast<uint32_t>(N), static_cast<uint32_t>(p), s, &st});
                }
            }
        }
    }

    auto previous = std::signal(SIGINT, on_interrupt);
    std::atomic<size_t> failures{0};
    // Cells are independent; the kernels inside them stay serial here so the
    // grid is the only parallel level.
#pragma omp parallel for schedule(dynamic, 1)
    for (size_t i = 0; i < cells.size(); i++) {
        if (g_interrupted) {
            continue;
        }
        BenchRecord &r = cells[i];
        try {
            Circuit c = qaoa_maxcut(random_u3r_graph(r.N, r.seed), std::vector<double>(r.p, kDefaultBeta),
                                    std::vector<double>(r.p, kDefaultGamma));
            CompileOptions options;
            options.strategy = r.strategy->strategy;
            options.use_dual = r.strategy->dual;
            options.time_limit = a.time_limit;
            OrderResult o = compile_order(c, options);
            r.width = o.width();
            r.via_dual = o.via_dual;
            r.optimal = o.optimal;
            r.elapsed = o.elapsed;
            r.done = true;
        } catch (const std::exception &e) {
#pragma omp critical
            std::cerr << "cell N=" << r.N << " p=" << r.p << " seed=" << r.seed << " failed: " << e.what() << "\n";
            failures++;
        }
    }
    std::signal(SIGINT, previous);

    std::ostringstream csv;
    csv << "family,N,param,seed,strategy,via_dual,width,optimal,elapsed_s\n";
    for (const BenchRecord &r : cells) {
        if (r.done) {
            csv << a.family << "," << r.N << "," << r.p << "," << r.seed << "," << r.strategy->name << ","
                << (r.via_dual ? "true" : "false") << "," << r.width << "," << (r.optimal ? "true" : "false") << ","
                << format_double(r.elapsed) << "\n";
        }
    }
    if (a.csv.empty() || a.csv == "-") {
        std::cout << csv.str();
    } else {
        write_file(a.csv, csv.str());
    }

    // Summary per (N, p, strategy): mean width with error on the mean.
    json summary = json::array();
    for (uint64_t N : parse_u64_list(a.Ns)) {
        for (uint64_t p : parse_u64_list(a.ps)) {
            for (const BenchStrategy &st : strategies) {
                double sum = 0, sq = 0, time = 0;
                size_t n = 0, below = 0;
                for (const BenchRecord &r : cells) {
                    if (r.done && r.N == N && r.p == p && r.strategy == &st) {
                        sum += r.width;
                        sq += double(r.width) * r.width;
                        time += r.elapsed;
                        below += r.width <= a.threshold;
                        n++;
                    }
                }
                if (n == 0) {
                    continue;
                }
                double mean = sum / n;
                double sd = n > 1 ? std::sqrt(std::max(0.0, (sq - n * mean * mean) / (n - 1))) : 0;
                json row;
                row["N"] = N;
                row["p"] = p;
                row["strategy"] = st.name;
                row["instances"] = n;
                row["mean_width"] = mean;
                row["sd_width"] = sd;
                row["sem_width"] = sd / std::sqrt(double(n));
                row["mean_ratio"] = mean / N;
                row["fraction_within_threshold"] = double(below) / n;
                row["threshold"] = a.threshold;
                row["mean_elapsed_s"] = time / n;
                summary.push_back(row);
                std::fprintf(stderr, "N=%llu p=%llu %-20s width %.2f +- %.2f (sd %.2f)  <=%zu: %.3f  %.3fs\n",
                             (unsigned long long)N, (unsigned long long)p, st.name.c_str(), mean,
                             sd / std::sqrt(double(n)), sd, a.threshold, double(below) / n, time / n);
            }
        }
    }
    if (!a.csv.empty() && a.csv != "-") {
        std::cout << summary.dump(2) << "\n";
    }
    if (g_interrupted) {
        std::cerr << "interrupted: wrote completed rows only\n";
        return kOther;
    }
    return failures ? kOther : kOk;
}

}  // namespace

int main(int argc, char **argv) {
    configure_threads_from_env();
    CLI::App app{"qreuse: qubit-reuse compiler"};
    app.require_subcommand(1);

    CompileArgs ca;
    auto *compile_cmd = app.add_subcommand("compile", "Compile a circuit to use fewer qubits");
    compile_cmd->add_option("input", ca.input, "Input circuit (.qrc.json or .qasm)")->required();
    compile_cmd->add_option("-o,--output", ca.output, "Write the compiled circuit here");
    compile_cmd->add_option("--strategy", ca.strategy, "greedy | greedy-brute | exact")->capture_default_str();
    compile_cmd->add_flag("--dual,!--no-dual", ca.dual, "Also try the dual circuit (default on)");
    compile_cmd->add_option("--budget", ca.budget, "Open fresh wires until B exist, then reuse");
    compile_cmd->add_flag("--strict-budget", ca.strict_budget, "Fail when the budget is below the order width");
    compile_cmd->add_option("--time-limit", ca.time_limit, "Exact search limit in seconds")->capture_default_str();
    compile_cmd->add_option("--outputs", ca.outputs, "Compile only the cones of these outputs (q1,q2,...)");
    compile_cmd->add_option("--hint", ca.hint, "Exact search starting order (q1,q2,...)");
    compile_cmd->add_flag("--no-seed", ca.no_seed, "Do not seed the exact search with greedy");
    compile_cmd->add_flag("--keep-final-resets,!--strip-final-resets", ca.keep_final_resets,
                          "Append a Reset after each wire's final measurement (default: strip)");

    std::string analyze_input;
    bool analyze_cones = false;
    auto *analyze_cmd = app.add_subcommand("analyze", "Report causal cones and heuristic widths");
    analyze_cmd->add_option("input", analyze_input, "Input circuit")->required();
    analyze_cmd->add_flag("--cones", analyze_cones, "Include every cone in the report");

    GenerateArgs ga;
    auto *generate_cmd = app.add_subcommand("generate", "Generate a benchmark circuit");
    generate_cmd->add_option("family", ga.family, "brick1d | brick2d | mps | ttn | mera | qcnn | bv | qaoa")
        ->required();
    generate_cmd->add_option("-o,--output", ga.output, "Output file (default stdout)");
    generate_cmd->add_option("--N", ga.N, "Qubits (brick1d, mps, bv, qaoa)");
    generate_cmd->add_option("--Nx", ga.Nx, "Grid width (brick2d)");
    generate_cmd->add_option("--Ny", ga.Ny, "Grid height (brick2d)");
    generate_cmd->add_option("--k", ga.k, "Layers (brick1d, brick2d)");
    generate_cmd->add_option("--D", ga.D, "Depth (ttn, mera, qcnn)");
    generate_cmd->add_option("--chi", ga.chi, "Bond dimension (mps)");
    generate_cmd->add_option("--p", ga.p, "QAOA rounds");
    generate_cmd->add_option("--s", ga.s, "Hidden bitstring (bv)");
    generate_cmd->add_option("--seed", ga.seed, "Graph seed (qaoa)");
    generate_cmd->add_option("--haar-seed", ga.haar_seed, "Use seeded Haar-random gates");
    generate_cmd->add_option("--betas", ga.betas, "QAOA mixer angles")->delimiter(',');
    generate_cmd->add_option("--gammas", ga.gammas, "QAOA cost angles")->delimiter(',');
    generate_cmd->add_option("--graph", ga.graph_in, "Read the QAOA graph from an edge list");
    generate_cmd->add_option("--graph-out", ga.graph_out, "Write the QAOA graph as an edge list");
    generate_cmd->add_flag("--open", ga.open, "Open instead of periodic boundaries");

    VerifyArgs va;
    auto *verify_cmd = app.add_subcommand("verify", "Check a compiled circuit against the original");
    verify_cmd->add_option("original", va.original, "Original circuit")->required();
    verify_cmd->add_option("compiled", va.compiled, "Compiled circuit")->required();
    verify_cmd->add_option("--tol", va.tol, "TVD tolerance")->capture_default_str();
    verify_cmd->add_option("--max-qubits", va.max_qubits, "Simulation width limit")->capture_default_str();
    verify_cmd->add_option("--bit-order", va.bit_order, "little: char i is clbit i; big: reversed")
        ->check(CLI::IsMember({"little", "big"}))
        ->capture_default_str();
    verify_cmd->add_flag("--show-distribution", va.show, "Include the original distribution");

    std::string sim_input, sim_order = "little";
    uint32_t sim_max = 14;
    auto *simulate_cmd = app.add_subcommand("simulate", "Print the exact outcome distribution");
    simulate_cmd->add_option("input", sim_input, "Circuit")->required();
    simulate_cmd->add_option("--max-qubits", sim_max, "Simulation width limit")->capture_default_str();
    simulate_cmd->add_option("--bit-order", sim_order, "little: char i is clbit i; big: reversed")
        ->check(CLI::IsMember({"little", "big"}))
        ->capture_default_str();

    BenchArgs ba;
    auto *bench_cmd = app.add_subcommand("bench", "Width/runtime benchmark over random QAOA instances");
    bench_cmd->add_option("--family", ba.family, "Benchmark family")->capture_default_str();
    bench_cmd->add_option("--N", ba.Ns, "Comma-separated qubit counts")->capture_default_str();
    bench_cmd->add_option("--p", ba.ps, "Comma-separated QAOA depths")->capture_default_str();
    bench_cmd->add_option("--seeds", ba.seeds, "Instances per (N, p)")->capture_default_str();
    bench_cmd->add_option("--seed-start", ba.seed_start, "First seed")->capture_default_str();
    bench_cmd->add_option("--strategies", ba.strategies, "e.g. greedy,greedy-brute+dual,exact")
        ->capture_default_str();
    bench_cmd->add_option("--time-limit", ba.time_limit, "Exact search limit per instance")->capture_default_str();
    bench_cmd->add_option("--csv", ba.csv, "CSV output path (default stdout)");
    bench_cmd->add_option("--threshold", ba.threshold, "Width threshold for the summary fraction")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    try {
        if (*compile_cmd) {
            return cmd_compile(ca);
        }
        if (*analyze_cmd) {
            return cmd_analyze(analyze_input, analyze_cones);
        }
        if (*generate_cmd) {
            return cmd_generate(ga);
        }
        if (*verify_cmd) {
            return cmd_verify(va);
        }
        if (*simulate_cmd) {
            return cmd_simulate(sim_input, sim_max, sim_order);
        }
        if (*bench_cmd) {
            return cmd_bench(ba);
        }
    } catch (const CLI::ValidationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const InvalidCircuit &e) {
        std::cerr << "invalid circuit: " << e.what() << "\n";
        return kInvalid;
    } catch (const UnsupportedInput &e) {
        std::cerr << "unsupported input: " << e.what() << "\n";
        return kInvalid;
    } catch (const SearchTimeout &e) {
        std::cerr << "timeout: " << e.what() << "\n";
        return kTimeout;
    } catch (const OracleLimitExceeded &e) {
        std::cerr << "oracle limit: " << e.what() << "\n";
        return kOracle;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kOther;
    }
    return kOther;
}
