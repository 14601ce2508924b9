#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hyperca/constructors.hpp"
#include "hyperca/core.hpp"
#include "hyperca/io.hpp"
#include "hyperca/ops.hpp"
#include "hyperca/oracle.hpp"
#include "hyperca/structure.hpp"

namespace {

// Exit codes: 0 ok/verified, 1 verification failure, 2 input error,
// 3 unsupported class, 4 budget exceeded.

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hyperca::input_error("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_build(const std::string& model_path, const std::string& mode,
              std::optional<std::uint64_t> seed, bool balanced_check) {
    hyperca::WeightedHypergraph h =
        hyperca::parse_hypergraph(read_file(model_path));
    hyperca::BuildOptions options;
    options.seed = seed;
    hyperca::CoveringArray c = [&] {
        if (mode == "acyclic") return hyperca::construct_acyclic(h, options);
        if (mode == "loose-cycle")
            return hyperca::construct_loose_cycle(h, options);
        if (mode == "cycle3") return hyperca::construct_cycle3(h, options);
        return hyperca::construct_auto(h, options);
    }();
    if (balanced_check) {
        hyperca::VerificationReport report =
            hyperca::verify_covering_array(c, true);
        if (!report.ok) {
            for (const auto& v : report.violations)
                std::cerr << hyperca::format_violation(v) << '\n';
            return 1;
        }
        std::cerr << "balanced verification: ok\n";
    }
    std::cout << hyperca::emit_array(c);
    return 0;
}

int run_verify(const std::string& model_path, const std::string& array_path,
               bool balanced, int jobs) {
    hyperca::WeightedHypergraph h =
        hyperca::parse_hypergraph(read_file(model_path));
    hyperca::CoveringArray c =
        hyperca::bind_array(hyperca::parse_array(read_file(array_path)), h);
    hyperca::VerificationReport report =
        hyperca::verify_covering_array(c, balanced, jobs);
    if (report.ok) {
        std::cout << "ok\n";
        return 0;
    }
    for (const auto& v : report.violations)
        std::cout << hyperca::format_violation(v) << '\n';
    return 1;
}

int run_classify(const std::string& model_path) {
    hyperca::WeightedHypergraph h =
        hyperca::parse_hypergraph(read_file(model_path));
    bool uniform = true;
    for (const auto& e : h.edges()) uniform = uniform && e.size() == 3;
    bool acyclic = hyperca::is_alpha_acyclic(h);
    auto lc = hyperca::recognize_loose_cycle(h);
    auto c3 = hyperca::recognize_cycle3_shape(h);

    std::cout << "alpha-acyclic: " << (acyclic ? "yes" : "no") << '\n';
    if (lc)
        std::cout << "loose-cycle: yes (k=" << lc->length << ")\n";
    else
        std::cout << "loose-cycle: no\n";
    if (c3 && c3->conditions_ok())
        std::cout << "cycle3: yes\n";
    else if (c3)
        std::cout << "cycle3: shape only (weight conditions fail)\n";
    else
        std::cout << "cycle3: no\n";

    std::string cls = "unsupported";
    if (acyclic && uniform && h.edge_count() > 0)
        cls = "acyclic";
    else if (lc)
        cls = "loose-cycle";
    else if (c3 && c3->conditions_ok())
        cls = "cycle3";
    std::cout << "class: " << cls << '\n';
    return cls == "unsupported" ? 3 : 0;
}

int run_oracle(const std::string& model_path, int max_n, long long budget) {
    hyperca::WeightedHypergraph h =
        hyperca::parse_hypergraph(read_file(model_path));
    hyperca::OracleOptions options;
    options.node_budget = budget;
    long long pw = hyperca::product_weight(h);
    std::cerr << "product weight: " << pw << '\n';
    if (max_n > 0) {
        for (long long n = pw; n <= max_n; ++n) {
            hyperca::OracleResult r =
                hyperca::exists_ca_of_size(h, static_cast<int>(n), options);
            if (r.status == hyperca::OracleStatus::BudgetExceeded)
                throw hyperca::budget_error("node budget exceeded at n = " +
                                            std::to_string(n));
            if (r.status == hyperca::OracleStatus::Found) {
                std::cout << "min_can = " << n << '\n';
                return 0;
            }
        }
        std::cout << "no covering array of size <= " << max_n << '\n';
        return 0;
    }
    hyperca::MinCanResult r = hyperca::min_can(h, options);
    if (r.status == hyperca::OracleStatus::BudgetExceeded)
        throw hyperca::budget_error("node budget exceeded at n = " +
                                    std::to_string(r.n));
    std::cout << "min_can = " << r.n << '\n';
    return 0;
}

int run_gen(const std::string& shape, int k, int r, int weight) {
    using hyperca::WeightedHypergraph;
    WeightedHypergraph h;
    if (shape == "complete") {
        std::vector<int> weights(k, weight);
        h = hyperca::complete_uniform(k, r, weights);
    } else if (shape == "loose-cycle") {
        if (k < 3) throw hyperca::input_error("loose cycle needs k >= 3");
        for (int i = 1; i <= 2 * k; ++i) h.add_vertex(i, weight);
        for (int i = 1; i <= k; ++i)
            h.add_edge({i, k + i, i == k ? 1 : i + 1});
    } else if (shape == "h1" || shape == "h2") {
        for (int i = 1; i <= 6; ++i) h.add_vertex(i, weight);
        const std::vector<std::vector<hyperca::VertexId>> edges =
            shape == "h1"
                ? std::vector<std::vector<hyperca::VertexId>>{
                      {1, 2, 3}, {1, 3, 4}, {1, 2, 6}, {2, 3, 5}}
                : std::vector<std::vector<hyperca::VertexId>>{
                      {1, 2, 3}, {1, 3, 4}, {2, 4, 5}, {4, 5, 6}};
        for (const auto& e : edges) h.add_edge(e);
    } else if (shape == "fig4") {
        int weights[5] = {10, 8, 5, 2, 18};
        for (int i = 0; i < 5; ++i) h.add_vertex(i, weights[i]);
        h.add_edge({0, 1, 2});
        h.add_edge({1, 2, 3});
        h.add_edge({3, 4, 0});
    } else {
        throw hyperca::input_error("unknown shape '" + shape +
                                   "' (want complete, loose-cycle, h1, h2, "
                                   "fig4)");
    }
    std::cout << hyperca::emit_hypergraph(h);
    return 0;
}

int run_script(const std::string& model_path, const std::string& steps_path,
               const std::string& array_path) {
    hyperca::WeightedHypergraph h =
        hyperca::parse_hypergraph(read_file(model_path));
    hyperca::CoveringArray base =
        array_path.empty()
            ? hyperca::construct_auto(h)
            : hyperca::bind_array(hyperca::parse_array(read_file(array_path)),
                                  h);
    std::vector<hyperca::HookStep> steps;
    std::istringstream in(read_file(steps_path));
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed;
        std::istringstream probe(line);
        probe >> trimmed;
        if (trimmed.empty() || trimmed[0] == '#') continue;
        try {
            steps.push_back(hyperca::parse_hook_step(line));
        } catch (const hyperca::input_error& e) {
            throw hyperca::input_error("line " + std::to_string(lineno) +
                                       ": " + e.what());
        }
    }
    hyperca::CoveringArray out = hyperca::apply_sequence(base, steps);
    std::cout << hyperca::emit_array(out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"covering arrays of strength 3 on weighted hypergraphs"};
    app.require_subcommand(1);

    auto* build = app.add_subcommand("build", "construct an optimal array");
    std::string build_model;
    build->add_option("model", build_model, "model file")->required();
    bool f_auto = false, f_acyclic = false, f_loose = false, f_cycle3 = false;
    auto* o_auto = build->add_flag("--auto", f_auto, "dispatch by class");
    auto* o_acy = build->add_flag("--acyclic", f_acyclic, "alpha-acyclic path");
    auto* o_loose =
        build->add_flag("--loose-cycle", f_loose, "loose cycle path");
    auto* o_c3 = build->add_flag("--cycle3", f_cycle3, "three-edge cycle path");
    o_auto->excludes(o_acy)->excludes(o_loose)->excludes(o_c3);
    o_acy->excludes(o_loose)->excludes(o_c3);
    o_loose->excludes(o_c3);
    std::uint64_t build_seed = 0;
    auto* o_seed =
        build->add_option("--seed", build_seed, "column shuffle seed");
    bool balanced_check = false;
    build->add_flag("--balanced-check", balanced_check,
                    "re-verify balancedness and report");

    auto* verify = app.add_subcommand("verify", "verify an array on a model");
    std::string verify_model, verify_array;
    verify->add_option("model", verify_model, "model file")->required();
    verify->add_option("array", verify_array, "array file")->required();
    bool verify_balanced = false;
    verify->add_flag("--balanced", verify_balanced, "also check balance");
    int jobs = 1;
    verify->add_option("--jobs", jobs, "parallel verification workers");

    auto* classify = app.add_subcommand("classify", "report class recognizers");
    std::string classify_model;
    classify->add_option("model", classify_model, "model file")->required();

    auto* oracle =
        app.add_subcommand("oracle", "brute-force minimum array size");
    std::string oracle_model;
    oracle->add_option("model", oracle_model, "model file")->required();
    int max_n = 0;
    oracle->add_option("--max-n", max_n, "stop after this size");
    long long budget = 100'000'000;
    oracle->add_option("--budget", budget, "backtracking node budget");

    auto* gen = app.add_subcommand("gen", "emit a model file");
    std::string shape;
    gen->add_option("shape", shape,
                    "complete | loose-cycle | h1 | h2 | fig4")
        ->required();
    int gen_k = 4, gen_r = 3, gen_weight = 2;
    gen->add_option("--k", gen_k, "vertex or cycle count");
    gen->add_option("--r", gen_r, "edge size for complete (2 or 3)");
    gen->add_option("--weight", gen_weight, "uniform vertex weight");

    auto* script = app.add_subcommand("script", "apply hooking steps");
    std::string script_model, script_steps, script_array;
    script->add_option("model", script_model, "model file")->required();
    script->add_option("steps", script_steps, "hook step file")->required();
    script->add_option("--array", script_array,
                       "base array file (default: build the model)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) {
            std::string mode = f_acyclic ? "acyclic"
                               : f_loose ? "loose-cycle"
                               : f_cycle3
                                   ? "cycle3"
                                   : "auto";
            std::optional<std::uint64_t> seed;
            if (o_seed->count()) seed = build_seed;
            return run_build(build_model, mode, seed, balanced_check);
        }
        if (verify->parsed())
            return run_verify(verify_model, verify_array, verify_balanced,
                              jobs);
        if (classify->parsed()) return run_classify(classify_model);
        if (oracle->parsed()) return run_oracle(oracle_model, max_n, budget);
        if (gen->parsed()) return run_gen(shape, gen_k, gen_r, gen_weight);
        if (script->parsed())
            return run_script(script_model, script_steps, script_array);
    } catch (const hyperca::input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const hyperca::unsupported_error& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return 3;
    } catch (const hyperca::budget_error& e) {
        std::cerr << "budget: " << e.what() << '\n';
        return 4;
    } catch (const hyperca::precondition_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
