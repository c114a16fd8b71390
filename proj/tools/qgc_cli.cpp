// qgc — graph-code compiler and verifier command line.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qgc/check_matrix.hpp"
#include "qgc/compiler.hpp"
#include "qgc/executor.hpp"
#include "qgc/graph.hpp"
#include "qgc/graph_code.hpp"
#include "qgc/outcome_source.hpp"
#include "qgc/pattern.hpp"
#include "qgc/tableau.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <typename F>
auto parse_file(const std::string& path, F&& parse) {
    try {
        return parse(slurp(path));
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open file for writing");
    out << text;
}

qgc::OutcomeSource make_source(long long seed, const std::string& script) {
    if (script.empty()) return qgc::OutcomeSource::seeded(static_cast<uint64_t>(seed));
    std::vector<int> bits;
    for (char ch : script) {
        if (ch == '0' || ch == '1')
            bits.push_back(ch - '0');
        else if (!std::isspace(static_cast<unsigned char>(ch)) && ch != ',')
            throw std::runtime_error("--script expects a string of 0/1 bits");
    }
    return qgc::OutcomeSource::scripted(bits);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph-code compiler and verifier"};
    app.require_subcommand(1);

    std::string code_path, graph_path, pattern_path, input_path, out_path, script;
    long long seed = 0;
    bool compact = false, dot = false;

    auto* cmd_convert = app.add_subcommand(
        "convert", "check matrix -> graph code blocks and local Clifford circuit");
    cmd_convert->add_option("code", code_path, "check-matrix file")->required();
    cmd_convert->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* cmd_graph =
        app.add_subcommand("graph", "check matrix -> augmented graph of the code");
    cmd_graph->add_option("code", code_path, "check-matrix file")->required();
    cmd_graph->add_flag("--dot", dot, "emit Graphviz DOT instead of the text format");
    cmd_graph->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* cmd_compile =
        app.add_subcommand("compile", "graph -> cluster measurement pattern");
    cmd_compile->add_option("graph", graph_path, "graph file")->required();
    cmd_compile->add_flag("--compact", compact, "O(n) x O(d) layout");
    cmd_compile->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* cmd_run = app.add_subcommand("run", "execute a pattern and dump the trace");
    cmd_run->add_option("pattern", pattern_path, "pattern file")->required();
    cmd_run->add_option("--seed", seed, "random outcome seed");
    cmd_run->add_option("--script", script, "forced outcome bits, e.g. 0110");

    auto* cmd_verify =
        app.add_subcommand("verify", "execute a pattern and check the target graph state");
    cmd_verify->add_option("pattern", pattern_path, "pattern file")->required();
    cmd_verify->add_option("graph", graph_path, "target graph file")->required();
    cmd_verify->add_option("--seed", seed, "random outcome seed");

    auto* cmd_encode =
        app.add_subcommand("encode", "teleport an input state into a stabilizer code");
    cmd_encode->add_option("code", code_path, "check-matrix file")->required();
    cmd_encode->add_option("input", input_path, "k-qubit input state as a signed check matrix")
        ->required();
    cmd_encode->add_option("--seed", seed, "random outcome seed");

    auto* cmd_stats = app.add_subcommand("stats", "pattern metrics as key=value lines");
    cmd_stats->add_option("pattern", pattern_path, "pattern file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_convert->parsed()) {
            auto cm = parse_file(code_path, qgc::parse_check_matrix);
            auto sf = qgc::standard_form(cm);
            write_out(out_path, qgc::serialize_graph_code(sf.code) +
                                    qgc::serialize_circuit(sf.circuit));
        } else if (cmd_graph->parsed()) {
            auto cm = parse_file(code_path, qgc::parse_check_matrix);
            auto sf = qgc::standard_form(cm);
            auto aug = qgc::augment(sf.code, qgc::logical_operators(sf.code));
            write_out(out_path, dot ? qgc::graph_to_dot(aug.graph)
                                    : qgc::serialize_graph(aug.graph));
        } else if (cmd_compile->parsed()) {
            auto g = parse_file(graph_path, qgc::parse_graph);
            auto pat = qgc::compile_graph(
                g, compact ? qgc::LayoutMode::Compact : qgc::LayoutMode::Standard);
            write_out(out_path, qgc::serialize_pattern(pat));
        } else if (cmd_run->parsed()) {
            auto pat = parse_file(pattern_path, qgc::parse_pattern);
            auto src = make_source(seed, script);
            auto trace = qgc::execute(pat, src);
            std::cout << qgc::trace_dump(trace);
        } else if (cmd_verify->parsed()) {
            auto pat = parse_file(pattern_path, qgc::parse_pattern);
            auto g = parse_file(graph_path, qgc::parse_graph);
            auto src = make_source(seed, "");
            auto trace = qgc::execute(pat, src);
            if (!qgc::verify_graph_state(trace.output, qgc::compacted(g))) {
                std::cout << "fail\n";
                return 1;
            }
            std::cout << "pass\n";
        } else if (cmd_encode->parsed()) {
            auto cm = parse_file(code_path, qgc::parse_check_matrix);
            auto in = parse_file(input_path, qgc::parse_check_matrix);
            auto input = qgc::tableau_from_stabilizers(in);
            auto src = make_source(seed, "");
            auto out = qgc::encode_state(cm, input, src);
            std::cout << qgc::serialize_check_matrix(out.stabilizer_check_matrix());
        } else if (cmd_stats->parsed()) {
            auto pat = parse_file(pattern_path, qgc::parse_pattern);
            auto m = qgc::metrics(pat);
            std::cout << "measurements=" << m.measurements << "\n"
                      << "rounds=" << m.rounds << "\n"
                      << "area=" << m.area << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
