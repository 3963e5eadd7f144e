// Command-line front end. Exit codes: 0 ok, 1 check failed, 2 usage, 3 bad input, 4 internal error.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "strandhopf/graph.hpp"
#include "strandhopf/hopf.hpp"
#include "strandhopf/io.hpp"
#include "strandhopf/iso.hpp"
#include "strandhopf/models.hpp"
#include "strandhopf/rewrite.hpp"
#include "strandhopf/series.hpp"

using namespace strandhopf;

namespace {

enum Exit { ok = 0, check_failed = 1, usage = 2, bad_input = 3, internal = 4 };

struct InputError : std::runtime_error {
    std::string kind;
    Json detail;
    InputError(std::string k, const std::string& msg, Json d = nullptr)
        : std::runtime_error(msg), kind(std::move(k)), detail(std::move(d)) {}
};

void emit_error(const std::string& kind, const std::string& message, const Json& detail = nullptr) {
    Json e = {{"error", {{"kind", kind}, {"message", message}}}};
    if (!detail.is_null()) e["error"]["detail"] = detail;
    std::cerr << e.dump() << "\n";
}

TwoGraph read_graph(const std::string& path) {
    TwoGraph g;
    try {
        g = load_graph(path);
    } catch (const ParseError& e) {
        throw InputError("parse", e.what());
    }
    return g;
}

TwoGraph read_valid_graph(const std::string& path) {
    auto g = read_graph(path);
    auto r = validate(g);
    if (!r.valid) throw InputError("validation", "graph fails validation", to_json(r));
    return g;
}

Theory read_theory(const std::string& spec) {
    try {
        return load_theory(spec);
    } catch (const ParseError& e) {
        throw InputError("theory", e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError("theory", e.what());
    }
}

// Edge tokens: a half-edge label on either side, or e<k> for the k-th edge of edges().
std::vector<bool> edge_selection(const TwoGraph& g, const std::string& list) {
    const auto es = edges(g);
    std::vector<bool> flags(g.num_half_edges(), false);
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        int h = find_half_edge(g, tok);
        if (h < 0 && tok.size() > 1 && tok[0] == 'e' && tok.find_first_not_of("0123456789", 1) == std::string::npos) {
            const auto k = std::stoul(tok.substr(1));
            if (k >= 1 && k <= es.size()) h = es[k - 1].first;
        }
        if (h < 0) throw InputError("usage", "unknown edge '" + tok + "'");
        if (g.iota[h] == h) throw InputError("usage", "'" + tok + "' is an external half-edge");
        flags[h] = flags[g.iota[h]] = true;
    }
    return flags;
}

void print_table(const Json& j, const std::string& indent = "") {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it->is_object()) {
            std::cout << indent << it.key() << ":\n";
            print_table(*it, indent + "  ");
        } else if (it->is_array() && !it->empty() && (it->front().is_object())) {
            std::cout << indent << it.key() << ":\n";
            for (const auto& e : *it) {
                std::cout << indent << "  -\n";
                print_table(e, indent + "    ");
            }
        } else {
            std::cout << indent << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
        }
    }
}

void print_terms_table(const Json& terms) {
    for (const auto& t : terms) {
        std::cout << t["coefficient"].get<std::string>();
        if (t.contains("monomial")) std::cout << "\t" << t["monomial"].get<std::string>();
        if (t.contains("left")) std::cout << "\t" << t["left"].get<std::string>() << "\t(x)\t" << t["right"].get<std::string>();
        std::cout << "\n";
    }
}

void output(const Json& j, const std::string& format) {
    if (format == "table")
        print_table(j);
    else
        std::cout << j.dump(2) << "\n";
}

Json info_json(const TwoGraph& g, const std::optional<Theory>& theory) {
    const auto fs = faces(g);
    Json j;
    j["vertices"] = g.num_vertices();
    j["half_edges"] = g.num_half_edges();
    j["strands"] = g.num_strands();
    j["edges"] = num_edges(g);
    j["internal_faces"] = fs.internal.size();
    j["external_faces"] = fs.external.size();
    j["euler_characteristic"] = euler_characteristic(g);
    j["connected"] = is_connected(g);
    j["bridgeless"] = is_bridgeless(g);
    j["code"] = canonical_form(g);
    j["automorphisms"] = automorphism_count(g);
    j["boundary_code"] = canonical_form(boundary(g));
    Json bc = Json::array();
    for (const auto& c : multiset_code(boundary_components(g))) bc.push_back(c);
    j["boundary_components"] = bc;
    Json vg = Json::array();
    for (std::size_t v = 0; v < g.num_vertices(); ++v) vg.push_back(canonical_form(vertex_graph(g, static_cast<int>(v))));
    j["vertex_graphs"] = vg;
    j["genus"] = nullptr;
    if (is_map_class(g) && is_connected(g)) {
        try {
            j["genus"] = genus(g);
        } catch (const std::invalid_argument&) {
        }
    }
    if (theory) {
        j["theory"] = theory->name;
        j["classification"] = to_json(classify(*theory, g));
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stranded graphs, their Hopf algebra and power counting"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));

    std::string file, theory_name, edge_list, boundary_file, mode = "stranded";
    int max_edges = 0, max_components = 2;
    bool connected_only = false;

    auto* validate_cmd = app.add_subcommand("validate", "Check the 2-graph axioms");
    validate_cmd->add_option("file", file)->required();

    auto* info_cmd = app.add_subcommand("info", "Counts, codes and degrees of a graph");
    info_cmd->add_option("file", file)->required();
    info_cmd->add_option("--theory", theory_name, "Preset name or theory JSON file");

    auto* contract_cmd = app.add_subcommand("contract", "Contract a set of edges");
    contract_cmd->add_option("file", file)->required();
    contract_cmd->add_option("--edges", edge_list, "Comma-separated half-edge labels or e<k>")->required();

    auto* coproduct_cmd = app.add_subcommand("coproduct", "Coproduct term list");
    coproduct_cmd->add_option("file", file)->required();

    auto* antipode_cmd = app.add_subcommand("antipode", "Antipode term list");
    antipode_cmd->add_option("file", file)->required();

    auto* classify_cmd = app.add_subcommand("classify", "Divergence report");
    classify_cmd->add_option("file", file)->required();
    classify_cmd->add_option("--theory", theory_name)->required();

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Iso classes of graphs over a theory");
    enumerate_cmd->add_option("--theory", theory_name)->required();
    enumerate_cmd->add_option("--max-edges", max_edges)->required()->check(CLI::Range(0, 8));
    enumerate_cmd->add_flag("--connected", connected_only);
    enumerate_cmd->add_option("--boundary", boundary_file, "1-graph or 2-graph document; keeps graphs with that boundary");
    enumerate_cmd->add_option("--max-components", max_components)->check(CLI::Range(1, 8));

    auto* central_cmd = app.add_subcommand("central-check", "Check the central identity up to an edge bound");
    central_cmd->add_option("--theory", theory_name)->required();
    central_cmd->add_option("--max-edges", max_edges)->required()->check(CLI::Range(0, 4));
    central_cmd->add_option("--max-components", max_components)->check(CLI::Range(1, 4));

    auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz rendering");
    dot_cmd->add_option("file", file)->required();
    dot_cmd->add_option("--mode", mode)->check(CLI::IsMember({"stranded", "vertexgraph"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("usage", e.what());
        return usage;
    }

    try {
        if (*validate_cmd) {
            const auto g = read_graph(file);
            const auto r = validate(g);
            output(to_json(r), format);
            if (!r.valid) {
                emit_error("validation", "graph fails validation", to_json(r));
                return check_failed;
            }
            return ok;
        }
        if (*info_cmd) {
            const auto g = read_valid_graph(file);
            std::optional<Theory> t;
            if (!theory_name.empty()) t = read_theory(theory_name);
            output(info_json(g, t), format);
            return ok;
        }
        if (*contract_cmd) {
            const auto g = read_valid_graph(file);
            std::cout << serialize_graph(contract_edges(g, edge_selection(g, edge_list)));
            return ok;
        }
        if (*coproduct_cmd) {
            const auto j = to_json(coproduct(AlgebraElement::of(read_valid_graph(file))));
            if (format == "table") print_terms_table(j);
            else std::cout << j.dump(2) << "\n";
            return ok;
        }
        if (*antipode_cmd) {
            const auto j = to_json(antipode(read_valid_graph(file)));
            if (format == "table") print_terms_table(j);
            else std::cout << j.dump(2) << "\n";
            return ok;
        }
        if (*classify_cmd) {
            const auto g = read_valid_graph(file);
            output(to_json(classify(read_theory(theory_name), g)), format);
            return ok;
        }
        if (*enumerate_cmd) {
            const auto t = read_theory(theory_name);
            EnumerationOptions opt;
            opt.max_edges = max_edges;
            opt.connected = connected_only;
            opt.max_components = max_components;
            if (!boundary_file.empty()) {
                std::ifstream in(boundary_file);
                if (!in) throw InputError("parse", "cannot open " + boundary_file);
                Json j;
                try {
                    j = Json::parse(in);
                    opt.boundary = j.contains("strands") ? boundary(two_graph_from_json(j)) : one_graph_from_json(j);
                } catch (const Json::parse_error& e) {
                    throw InputError("parse", e.what());
                } catch (const ParseError& e) {
                    throw InputError("parse", e.what());
                }
            }
            for (const auto& e : enumerate(t, opt)) {
                if (format == "table")
                    std::cout << num_edges(e.graph) << "\t" << e.aut << "\t" << e.code << "\n";
                else
                    std::cout << to_json(e.graph).dump() << "\n";
            }
            return ok;
        }
        if (*central_cmd) {
            const auto r = check_central_identity(read_theory(theory_name), max_edges, max_components);
            output(to_json(r), format);
            return r.pass ? ok : check_failed;
        }
        if (*dot_cmd) {
            std::cout << to_dot(read_valid_graph(file), mode == "vertexgraph" ? DotMode::vertexgraph : DotMode::stranded);
            return ok;
        }
    } catch (const InputError& e) {
        emit_error(e.kind, e.what(), e.detail);
        return e.kind == "usage" ? usage : bad_input;
    } catch (const std::invalid_argument& e) {
        emit_error("input", e.what());
        return bad_input;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return internal;
    }
    return usage;
}
