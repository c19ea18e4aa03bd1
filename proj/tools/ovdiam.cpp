// ovdiam: generate, compile, build, measure, verify.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ovd/construction.hpp"
#include "ovd/graphcore.hpp"
#include "ovd/ovcore.hpp"
#include "ovd/satfrontend.hpp"
#include "ovd/verify.hpp"

namespace {

constexpr std::int64_t kDefaultEdgeBudget = 5'000'000;

void write_text_or_file(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

void emit_ov(const std::string& path, const ovd::OvInstance& inst) {
    std::ostringstream os;
    ovd::write_ov(os, inst);
    write_text_or_file(path, os.str());
}

void emit_graph(const std::string& path, const ovd::GadgetGraph& g) {
    std::ostringstream os;
    ovd::write_graph(os, g);
    write_text_or_file(path, os.str());
}

ovd::Flavor parse_flavor(const std::string& s) {
    if (s == "weighted") return ovd::Flavor::Weighted;
    if (s == "unweighted") return ovd::Flavor::Unweighted;
    throw CLI::ValidationError("--flavor", "expected weighted or unweighted");
}

std::string flavor_text_report(const ovd::FlavorReport& fr) {
    std::ostringstream os;
    os << "flavor " << ovd::flavor_name(fr.flavor) << "\n";
    if (fr.diameter) {
        os << "  diameter " << *fr.diameter;
        if (fr.diameter_witness)
            os << " (witness " << fr.diameter_witness->first << " " << fr.diameter_witness->second
               << ")";
        os << "\n";
    }
    if (fr.witness_distance)
        os << "  witness distance " << *fr.witness_distance << " (vertices "
           << fr.witness_pair->first << " " << fr.witness_pair->second << ")\n";
    for (const auto& lemma : fr.lemmas)
        os << "  lemma " << (lemma.pass ? "pass" : "FAIL") << "  " << lemma.lemma
           << (lemma.detail.empty() ? "" : "  [" + lemma.detail + "]") << "\n";
    if (fr.certification)
        os << "  certified pairs " << fr.certification->pairs_certified << ", max length "
           << fr.certification->max_length << ", failures " << fr.certification->failures << "\n";
    if (!fr.note.empty()) os << "  note: " << fr.note << "\n";
    os << "  verdict " << (fr.pass ? "pass" : "fail") << "\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"4-OV to Diameter gap-graph workbench"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate an OV instance");
    bool g_random = false, g_none = false, g_planted = false;
    int g_n = 4, g_l = 4;
    double g_density = 0.5;
    std::string g_mode = "forced-one", g_out;
    std::uint64_t g_seed = 1;
    auto* f_random = gen->add_flag("--random", g_random, "i.i.d. random entries");
    auto* f_none = gen->add_flag("--no-instance", g_none, "guaranteed NONE class");
    auto* f_planted = gen->add_flag("--planted", g_planted, "planted distinct orthogonal quadruple");
    f_random->excludes(f_none)->excludes(f_planted);
    f_none->excludes(f_planted);
    gen->add_option("--n", g_n, "number of vectors")->required();
    gen->add_option("--l", g_l, "dimension")->required();
    gen->add_option("--density", g_density, "probability of a 1 entry (random mode)");
    gen->add_option("--mode", g_mode, "no-instance strategy: forced-one | rejection");
    gen->add_option("--seed", g_seed, "generator seed");
    gen->add_option("-o,--output", g_out, "output OV file (default stdout)");

    // sat2ov
    auto* sat = app.add_subcommand("sat2ov", "compile a DIMACS CNF into a 4-OV instance");
    std::string s_in, s_out;
    sat->add_option("input", s_in, "DIMACS CNF file")->required();
    sat->add_option("-o,--output", s_out, "output OV file (default stdout)");

    // build
    auto* build = app.add_subcommand("build", "build a gadget graph from an OV instance");
    std::string b_in, b_out, b_flavor = "weighted";
    int b_max_l = 6;
    std::int64_t b_max_edges = kDefaultEdgeBudget;
    build->add_option("input", b_in, "OV instance file")->required();
    build->add_option("--flavor", b_flavor, "weighted | unweighted");
    build->add_option("-o,--output", b_out, "output graph file (default stdout)");
    build->add_option("--max-l", b_max_l, "dimension cap");
    build->add_option("--max-edges", b_max_edges, "predicted-edge budget (-1 = unlimited)");

    // diam
    auto* diam = app.add_subcommand("diam", "diameter of a graph file");
    std::string d_in, d_method = "exact";
    int d_start = 0, d_threads = 0;
    diam->add_option("input", d_in, "graph file")->required();
    diam->add_option("--method", d_method, "exact | approx2");
    diam->add_option("--start", d_start, "start vertex for approx2");
    diam->add_option("--threads", d_threads, "worker count (0 = hardware)");

    // verify
    auto* verify = app.add_subcommand("verify", "certify the dichotomy for an OV instance");
    std::string v_in, v_out, v_flavors = "both", v_format = "text";
    int v_threads = 0;
    bool v_no_lemmas = false, v_no_cert = false;
    int v_max_l = 6;
    std::int64_t v_max_edges = kDefaultEdgeBudget;
    verify->add_option("input", v_in, "OV instance file")->required();
    verify->add_option("--flavors", v_flavors, "weighted | unweighted | both");
    verify->add_option("--format", v_format, "text | json");
    verify->add_option("-o,--output", v_out, "report file (default stdout)");
    verify->add_option("--threads", v_threads, "worker count (0 = hardware)");
    verify->add_flag("--no-lemmas", v_no_lemmas, "skip the ball-inclusion checks");
    verify->add_flag("--no-certification", v_no_cert, "skip per-pair path certification");
    verify->add_option("--max-l", v_max_l, "dimension cap");
    verify->add_option("--max-edges", v_max_edges, "predicted-edge budget (-1 = unlimited)");

    // stats
    auto* stats = app.add_subcommand("stats", "layer and edge-class counts of a graph file");
    std::string t_in;
    stats->add_option("input", t_in, "graph file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            if (static_cast<int>(g_random) + static_cast<int>(g_none) +
                    static_cast<int>(g_planted) !=
                1)
                throw ovd::ParameterError("choose exactly one of --random, --no-instance, --planted");
            ovd::OvInstance inst;
            if (g_random) {
                inst = ovd::gen_random(g_n, g_l, g_density, g_seed);
            } else if (g_none) {
                ovd::NoInstanceMode mode;
                if (g_mode == "forced-one")
                    mode = ovd::NoInstanceMode::ForcedOne;
                else if (g_mode == "rejection")
                    mode = ovd::NoInstanceMode::Rejection;
                else
                    throw ovd::ParameterError("--mode must be forced-one or rejection");
                inst = ovd::gen_no_instance(g_n, g_l, mode, g_seed);
            } else {
                inst = ovd::gen_planted_distinct(g_n, g_l, g_seed);
            }
            emit_ov(g_out, inst);
            return 0;
        }

        if (sat->parsed()) {
            const auto formula = ovd::parse_dimacs_file(s_in);
            emit_ov(s_out, ovd::merge_groups(ovd::split_and_list(formula)));
            return 0;
        }

        if (build->parsed()) {
            const auto inst = ovd::read_ov_file(b_in);
            ovd::BuildLimits limits{b_max_l, b_max_edges};
            emit_graph(b_out, ovd::build_gadget(inst, parse_flavor(b_flavor), limits));
            return 0;
        }

        if (diam->parsed()) {
            const auto g = ovd::read_graph_file(d_in);
            if (d_method == "exact") {
                const auto r = ovd::exact_diameter(g.core, d_threads);
                std::cout << "diameter " << r.value << "\n"
                          << "witness " << r.witness.first << " " << r.witness.second << "\n";
            } else if (d_method == "approx2") {
                const auto r = ovd::approx2_diameter(g.core, d_start);
                std::cout << "estimate " << r.estimate << "\n"
                          << "guarantee [" << r.lower << ", " << r.upper << "]\n";
            } else {
                throw ovd::ParameterError("--method must be exact or approx2");
            }
            return 0;
        }

        if (verify->parsed()) {
            const auto inst = ovd::read_ov_file(v_in);
            const bool weighted = v_flavors == "both" || v_flavors == "weighted";
            const bool unweighted = v_flavors == "both" || v_flavors == "unweighted";
            if (!weighted && !unweighted)
                throw ovd::ParameterError("--flavors must be weighted, unweighted, or both");
            ovd::VerifyOptions opt;
            opt.run_lemmas = !v_no_lemmas;
            opt.run_certification = !v_no_cert;
            opt.threads = v_threads;
            opt.limits = ovd::BuildLimits{v_max_l, v_max_edges};
            const auto report = ovd::check_dichotomy(inst, weighted, unweighted, opt);

            std::ostringstream os;
            if (v_format == "json") {
                os << ovd::report_to_json(report).dump(2) << "\n";
            } else if (v_format == "text") {
                os << "class " << ovd::to_string(report.cls.tag);
                if (report.cls.witness) {
                    os << " witness";
                    for (int x : *report.cls.witness) os << " " << x + 1;
                }
                os << "\n";
                for (const auto& fr : report.flavors) os << flavor_text_report(fr);
                os << "verdict " << (report.verdict_pass() ? "pass" : "fail") << "\n";
            } else {
                throw ovd::ParameterError("--format must be text or json");
            }
            write_text_or_file(v_out, os.str());
            return report.verdict_pass() ? 0 : 2;
        }

        if (stats->parsed()) {
            const auto g = ovd::read_graph_file(t_in);
            const auto s = ovd::count_summary(g);
            std::cout << "flavor " << ovd::flavor_name(s.flavor) << "\n"
                      << "n " << s.num_vectors << "\n"
                      << "l " << s.l << "\n";
            for (const auto& [name, count] : s.layer_counts)
                std::cout << "|" << name << "| = " << count << "\n";
            for (const auto& [key, count] : s.edge_counts)
                std::cout << "E(" << key << ") = " << count << "\n";
            std::cout << "identities " << (s.identities_ok ? "ok" : "violated") << "\n";
            for (const auto& f : s.identity_failures) std::cout << "  " << f << "\n";
            return s.identities_ok ? 0 : 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
