#include "halo/moduli.hpp"
#include "halo/polygons.hpp"
#include "halo/polytope.hpp"
#include "halo/tubing_poset.hpp"
#include "halo/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace halo;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct ObjectSpec {
    Graph graph;
    PolytopeKind kind;
    std::string name;
};

int geometric_dim_bound() {
    if (const char* env = std::getenv("HALO_MAX_DIM")) {
        try {
            return std::max(0, std::stoi(env));
        } catch (const std::exception&) {
            throw std::invalid_argument("HALO_MAX_DIM must be an integer");
        }
    }
    return 5;
}

ObjectSpec resolve_object(const std::string& object, std::optional<int> n,
                          const std::string& graph_file, int max_n) {
    auto need_n = [&](int lo) {
        if (!n) throw std::invalid_argument("--n is required for object '" + object + "'");
        if (*n < lo)
            throw std::invalid_argument("--n must be at least " + std::to_string(lo) +
                                        " for object '" + object + "'");
    };
    auto from_file = [&] {
        if (graph_file.empty())
            throw std::invalid_argument("--graph is required for object '" + object + "'");
        std::ifstream in(graph_file);
        if (!in) throw std::invalid_argument("cannot open graph file '" + graph_file + "'");
        nlohmann::json j;
        in >> j;
        return Graph::from_json(j);
    };
    std::optional<ObjectSpec> spec;
    if (object == "k") {
        need_n(2);
        spec = {Graph::path(*n - 1), PolytopeKind::Associahedron, "K_" + std::to_string(*n)};
    } else if (object == "w") {
        need_n(1);
        spec = {*n == 1 ? Graph::path(1) : Graph::cycle(*n), PolytopeKind::Associahedron,
                "W_" + std::to_string(*n)};
    } else if (object == "halo") {
        need_n(1);
        spec = {*n == 1 ? Graph::path(1) : Graph::cycle(*n), PolytopeKind::Cubeahedron,
                "Y_" + std::to_string(*n)};
    } else if (object == "graph-assoc") {
        Graph g = from_file();
        std::string name = "KG(" + g.name() + ")";
        spec = {std::move(g), PolytopeKind::Associahedron, std::move(name)};
    } else if (object == "graph-cube") {
        Graph g = from_file();
        std::string name = "CG(" + g.name() + ")";
        spec = {std::move(g), PolytopeKind::Cubeahedron, std::move(name)};
    } else {
        throw std::invalid_argument("unknown object '" + object + "'");
    }
    if (spec->graph.node_count() > max_n)
        throw std::invalid_argument("graph has " + std::to_string(spec->graph.node_count()) +
                                    " nodes, above the bound " + std::to_string(max_n) +
                                    " (raise --max-n)");
    return std::move(*spec);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << text;
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

Polytope realize_object(const ObjectSpec& spec) {
    const int dim_bound = geometric_dim_bound();
    if (spec.kind == PolytopeKind::Associahedron)
        return build_graph_associahedron(spec.graph, dim_bound + 1);
    return build_graph_cubeahedron(spec.graph, dim_bound);
}

std::string f_vector_line(const std::vector<long long>& f) {
    std::ostringstream out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out << " ";
        out << f[i];
    }
    return out.str();
}

int cmd_build(const std::string& object, std::optional<int> n, const std::string& graph_file,
              bool realize_flag, const std::string& out_path, int max_n) {
    const ObjectSpec spec = resolve_object(object, n, graph_file, max_n);
    auto poset = tubing_poset(spec.graph, spec.kind);
    poset.object = spec.name;
    std::cout << f_vector_line(poset.f_vector()) << "\n";
    if (!out_path.empty()) write_json_file(out_path + ".poset.json", poset_json(poset));
    if (realize_flag) {
        if (out_path.empty())
            throw std::invalid_argument("--realize needs --out to write geometry files");
        const Polytope p = realize_object(spec);
        write_json_file(out_path + ".geometry.json", exact_geometry_json(p));
        write_text_file(out_path + ".off", off_string(p));
    }
    return kExitOk;
}

int cmd_classify(int g, int h, int n, const std::string& marks_arg) {
    std::vector<int> marks;
    if (!marks_arg.empty()) {
        std::stringstream in(marks_arg);
        std::string item;
        while (std::getline(in, item, ','))
            marks.push_back(std::stoi(item));
    }
    const SurfaceSignature s{g, h, n, marks};
    validate_signature(s);
    std::cout << verdict_json(s).dump(2) << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& suite, int bound) {
    const auto result = verify::run_suite(suite, bound);
    std::size_t width = 12;
    for (const auto& row : result.rows) width = std::max(width, row.name.size());
    for (const auto& row : result.rows) {
        std::cout << std::left << std::setw(static_cast<int>(width) + 2) << row.name
                  << (row.ok ? "ok    " : "FAIL  ") << row.detail << "\n";
    }
    std::cout << result.suite << ": " << (result.ok() ? "all checks passed" : "FAILED") << " ("
              << result.rows.size() << " checks)\n";
    return result.ok() ? kExitOk : kExitVerificationFailure;
}

int cmd_export(const std::string& object, std::optional<int> n, const std::string& graph_file,
               const std::string& out_path, const std::string& format, int max_n) {
    const ObjectSpec spec = resolve_object(object, n, graph_file, max_n);
    const Polytope p = realize_object(spec);
    if (format == "json" || format == "both")
        write_json_file(out_path + ".geometry.json", exact_geometry_json(p));
    if (format == "off" || format == "both") write_text_file(out_path + ".off", off_string(p));
    std::cout << spec.name << ": " << p.vertex_count() << " vertices, " << p.facet_count()
              << " facets\n";
    return kExitOk;
}

}  // namespace

namespace {

int run(int argc, char** argv) {
    CLI::App app{"graph associahedra, graph cubeahedra, and moduli of bordered surfaces"};
    app.require_subcommand(1);

    std::string object, graph_file, out_path, marks_arg, suite, format = "both";
    std::optional<int> n;
    bool realize_flag = false;
    int max_n = 6, bound = 0;
    int g = 0, h = 0, punctures = 0;

    auto* build = app.add_subcommand("build", "build a face poset (and optionally geometry)");
    build->add_option("--object", object, "k | w | halo | graph-assoc | graph-cube")->required();
    build->add_option("--n", n, "size parameter for k/w/halo");
    build->add_option("--graph", graph_file, "graph JSON file for graph-assoc/graph-cube");
    build->add_flag("--realize", realize_flag, "also build exact geometry (JSON + OFF)");
    build->add_option("--out", out_path, "output path prefix");
    build->add_option("--max-n", max_n, "combinatorial size bound (default 6)");

    auto* classify = app.add_subcommand("classify", "classify a surface signature (g h n [m-list])");
    classify->add_option("genus", g, "genus g")->required();
    classify->add_option("circles", h, "boundary circles h")->required();
    classify->add_option("punctures", punctures, "interior punctures n")->required();
    classify->add_option("marks", marks_arg, "comma-separated boundary mark counts m");

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite_help = "one of:";
    for (const auto& name : halo::verify::suite_names()) suite_help += " " + name;
    verify_cmd->add_option("suite", suite, suite_help)->required();
    verify_cmd->add_option("--bound", bound, "size bound override");

    auto* export_cmd = app.add_subcommand("export", "realize an object and write geometry files");
    export_cmd->add_option("--object", object, "k | w | halo | graph-assoc | graph-cube")
        ->required();
    export_cmd->add_option("--n", n, "size parameter for k/w/halo");
    export_cmd->add_option("--graph", graph_file, "graph JSON file");
    export_cmd->add_option("--out", out_path, "output path prefix")->required();
    export_cmd->add_option("--format", format, "off | json | both (default both)")
        ->check(CLI::IsMember({"off", "json", "both"}));
    export_cmd->add_option("--max-n", max_n, "combinatorial size bound (default 6)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (build->parsed())
            return cmd_build(object, n, graph_file, realize_flag, out_path, max_n);
        if (classify->parsed()) return cmd_classify(g, h, punctures, marks_arg);
        if (verify_cmd->parsed()) return cmd_verify(suite, bound);
        if (export_cmd->parsed())
            return cmd_export(object, n, graph_file, out_path, format, max_n);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
