#include "strandhopf/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "strandhopf/iso.hpp"

namespace strandhopf {

namespace {

std::vector<int> label_order(const std::vector<std::string>& labels) {
    std::vector<int> idx(labels.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return label_less(labels[a], labels[b]); });
    return idx;
}

Json pair_list(const std::vector<int>& inv, const std::vector<std::string>& labels) {
    std::vector<std::pair<std::string, std::string>> ps;
    for (std::size_t x = 0; x < inv.size(); ++x) {
        const int y = inv[x];
        if (y < 0 || y == static_cast<int>(x)) continue;
        const auto& a = labels[x];
        const auto& b = labels[y];
        if (label_less(a, b)) ps.emplace_back(a, b);
    }
    std::sort(ps.begin(), ps.end(), [](const auto& p, const auto& q) {
        if (p.first != q.first) return label_less(p.first, q.first);
        return label_less(p.second, q.second);
    });
    Json out = Json::array();
    for (auto& [a, b] : ps) out.push_back(Json::array({a, b}));
    return out;
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw ParseError("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

std::string id_of(const Json& j, const char* what) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw ParseError(std::string("bad ") + what + " id");
}

std::map<std::string, int> index_map(const std::vector<std::string>& labels, const char* what) {
    std::map<std::string, int> m;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (!m.emplace(labels[i], static_cast<int>(i)).second)
            throw ParseError(std::string("duplicate ") + what + " id '" + labels[i] + "'");
    return m;
}

int lookup(const std::map<std::string, int>& m, const std::string& id, const char* what) {
    auto it = m.find(id);
    if (it == m.end()) throw ParseError(std::string("unknown ") + what + " '" + id + "'");
    return it->second;
}

// Applies [a,b] pairs to an identity-initialized map; repeated ids surface in validate().
void read_pairs(const Json& list, const std::map<std::string, int>& m, std::vector<int>& inv, const char* what) {
    if (!list.is_array()) throw ParseError(std::string(what) + " must be a list of pairs");
    for (const auto& p : list) {
        if (!p.is_array() || p.size() != 2) throw ParseError(std::string(what) + " entries must be pairs");
        const int a = lookup(m, id_of(p[0], what), what), b = lookup(m, id_of(p[1], what), what);
        inv[a] = b;
        inv[b] = a;
    }
}

Json rational_json(const Rational& q) {
    if (denominator(q) == 1) return Json(static_cast<long long>(numerator(q)));
    return Json(q.str());
}

Rational rational_from(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::exception& e) {
            throw ParseError("bad rational '" + j.get<std::string>() + "'");
        }
    }
    throw ParseError("expected an integer or a rational string");
}

const char* stranding_name(Stranding s) {
    switch (s) {
        case Stranding::generic: return "generic";
        case Stranding::oriented: return "oriented";
        case Stranding::coloured: return "coloured";
    }
    return "generic";
}

const char* rule_name(WeightRule r) {
    switch (r) {
        case WeightRule::explicit_only: return "explicit";
        case WeightRule::zero_default: return "zero";
        case WeightRule::tensorial: return "tensorial";
    }
    return "explicit";
}

}  // namespace

// ------------------------------------------------------------------ 2-graphs

Json to_json(const TwoGraph& g) {
    Json j;
    Json vs = Json::array();
    for (int v : label_order(g.vertex_labels)) vs.push_back(g.vertex_labels[v]);
    Json hs = Json::array();
    for (int h : label_order(g.half_edge_labels))
        hs.push_back({{"id", g.half_edge_labels[h]}, {"vertex", g.vertex_labels[g.nu[h]]}});
    Json ss = Json::array();
    for (int s : label_order(g.strand_labels)) {
        Json e = {{"id", g.strand_labels[s]}, {"half_edge", g.half_edge_labels[g.mu[s]]}};
        if (g.has_tags()) e["tag"] = g.tags[s];
        ss.push_back(std::move(e));
    }
    j["vertices"] = std::move(vs);
    j["half_edges"] = std::move(hs);
    j["strands"] = std::move(ss);
    j["iota"] = pair_list(g.iota, g.half_edge_labels);
    j["sigma1"] = pair_list(g.sigma1, g.strand_labels);
    j["sigma2"] = pair_list(g.sigma2, g.strand_labels);
    return j;
}

TwoGraph two_graph_from_json(const Json& j) {
    TwoGraph g;
    const auto& vs = field(j, "vertices");
    const auto& hs = field(j, "half_edges");
    const auto& ss = field(j, "strands");
    if (!vs.is_array() || !hs.is_array() || !ss.is_array())
        throw ParseError("vertices, half_edges and strands must be lists");
    for (const auto& v : vs) g.vertex_labels.push_back(id_of(v, "vertex"));
    const auto vm = index_map(g.vertex_labels, "vertex");
    for (const auto& h : hs) {
        g.half_edge_labels.push_back(id_of(field(h, "id"), "half-edge"));
        g.nu.push_back(lookup(vm, id_of(field(h, "vertex"), "vertex"), "vertex"));
    }
    const auto hm = index_map(g.half_edge_labels, "half-edge");
    std::size_t tagged = 0;
    for (const auto& s : ss) {
        g.strand_labels.push_back(id_of(field(s, "id"), "strand"));
        g.mu.push_back(lookup(hm, id_of(field(s, "half_edge"), "half-edge"), "half-edge"));
        if (s.contains("tag")) {
            if (!s["tag"].is_number_integer()) throw ParseError("strand tag must be an integer");
            g.tags.push_back(s["tag"].get<int>());
            ++tagged;
        }
    }
    if (tagged != 0 && tagged != g.strand_labels.size()) throw ParseError("either all strands carry a tag or none");
    const auto sm = index_map(g.strand_labels, "strand");
    const auto H = g.half_edge_labels.size(), S = g.strand_labels.size();
    g.iota.resize(H);
    std::iota(g.iota.begin(), g.iota.end(), 0);
    g.sigma1.resize(S);
    std::iota(g.sigma1.begin(), g.sigma1.end(), 0);
    g.sigma2.resize(S);
    std::iota(g.sigma2.begin(), g.sigma2.end(), 0);
    read_pairs(j.contains("iota") ? j["iota"] : Json::array(), hm, g.iota, "half-edge");
    read_pairs(field(j, "sigma1"), sm, g.sigma1, "strand");
    read_pairs(j.contains("sigma2") ? j["sigma2"] : Json::array(), sm, g.sigma2, "strand");
    return g;
}

std::string serialize_graph(const TwoGraph& g) { return to_json(g).dump(2) + "\n"; }

TwoGraph parse_graph(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return two_graph_from_json(j);
}

TwoGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

// ------------------------------------------------------------------ 1-graphs

Json to_json(const OneGraph& g) {
    Json j;
    Json vs = Json::array();
    for (int v : label_order(g.vertex_labels)) vs.push_back(g.vertex_labels[v]);
    Json hs = Json::array();
    for (int h : label_order(g.half_edge_labels)) {
        Json e = {{"id", g.half_edge_labels[h]}, {"vertex", g.vertex_labels[g.attach[h]]}};
        if (g.has_tags()) e["tag"] = g.tags[h];
        hs.push_back(std::move(e));
    }
    j["vertices"] = std::move(vs);
    j["half_edges"] = std::move(hs);
    j["edges"] = pair_list(g.pairing, g.half_edge_labels);
    return j;
}

OneGraph one_graph_from_json(const Json& j) {
    OneGraph g;
    const auto& vs = field(j, "vertices");
    const auto& hs = field(j, "half_edges");
    if (!vs.is_array() || !hs.is_array()) throw ParseError("vertices and half_edges must be lists");
    for (const auto& v : vs) g.vertex_labels.push_back(id_of(v, "vertex"));
    const auto vm = index_map(g.vertex_labels, "vertex");
    std::size_t tagged = 0;
    for (const auto& h : hs) {
        g.half_edge_labels.push_back(id_of(field(h, "id"), "half-edge"));
        g.attach.push_back(lookup(vm, id_of(field(h, "vertex"), "vertex"), "vertex"));
        if (h.contains("tag")) {
            g.tags.push_back(h["tag"].get<int>());
            ++tagged;
        }
    }
    if (tagged != 0 && tagged != g.half_edge_labels.size()) throw ParseError("either all half-edges carry a tag or none");
    const auto hm = index_map(g.half_edge_labels, "half-edge");
    g.pairing.resize(g.half_edge_labels.size());
    std::iota(g.pairing.begin(), g.pairing.end(), 0);
    read_pairs(j.contains("edges") ? j["edges"] : Json::array(), hm, g.pairing, "half-edge");
    return g;
}

// ------------------------------------------------------------------- theories

Json to_json(const Theory& t) {
    Json j;
    j["name"] = t.name;
    j["dimension"] = t.dimension;
    j["zeta"] = rational_json(t.zeta);
    j["rank"] = t.rank;
    j["stranding"] = stranding_name(t.stranding);
    j["weight_rule"] = rule_name(t.rule);
    j["propagator"] = {{"graph", to_json(t.propagator.graph)}, {"weight", rational_json(t.propagator.weight)}};
    Json vs = Json::array();
    for (const auto& v : t.vertices) vs.push_back({{"graph", to_json(v.graph)}, {"weight", rational_json(v.weight)}});
    j["vertices"] = std::move(vs);
    return j;
}

Theory theory_from_json(const Json& j) {
    Theory t;
    t.name = j.value("name", std::string("custom"));
    if (!field(j, "dimension").is_number_integer()) throw ParseError("dimension must be an integer");
    t.dimension = j["dimension"].get<int>();
    t.zeta = j.contains("zeta") ? rational_from(j["zeta"]) : Rational(1);
    t.rank = j.value("rank", 0);
    const std::string st = j.value("stranding", std::string("generic"));
    if (st == "generic") t.stranding = Stranding::generic;
    else if (st == "oriented") t.stranding = Stranding::oriented;
    else if (st == "coloured") t.stranding = Stranding::coloured;
    else throw ParseError("unknown stranding '" + st + "'");
    const std::string rule = j.value("weight_rule", std::string("explicit"));
    if (rule == "explicit") t.rule = WeightRule::explicit_only;
    else if (rule == "zero") t.rule = WeightRule::zero_default;
    else if (rule == "tensorial") t.rule = WeightRule::tensorial;
    else throw ParseError("unknown weight_rule '" + rule + "'");
    const auto& p = field(j, "propagator");
    t.propagator = {one_graph_from_json(field(p, "graph")), rational_from(field(p, "weight"))};
    for (const auto& v : field(j, "vertices"))
        t.vertices.push_back({one_graph_from_json(field(v, "graph")), rational_from(field(v, "weight"))});
    return t;
}

Theory load_theory(const std::string& preset_or_path) {
    const auto names = preset_names();
    if (std::find(names.begin(), names.end(), preset_or_path) != names.end()) return preset_theory(preset_or_path);
    std::ifstream in(preset_or_path);
    if (!in) throw ParseError("unknown theory preset or file '" + preset_or_path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return theory_from_json(j);
}

// -------------------------------------------------------------------- reports

Json to_json(const ValidationReport& r) {
    return {{"valid", r.valid}, {"presentations_agree", r.presentations_agree}, {"violations", r.violations}};
}

Json to_json(const DivergenceReport& r) {
    Json comps = Json::array();
    for (const auto& c : r.components) {
        Json e = {{"omega_sd", rational_json(c.omega_sd)},
                  {"V", c.V},
                  {"E", c.E},
                  {"F", c.F},
                  {"V_boundary", c.V_boundary},
                  {"E_boundary", c.E_boundary},
                  {"K_boundary", c.K_boundary},
                  {"bridgeless", c.bridgeless},
                  {"divergent", c.divergent},
                  {"code", c.code},
                  {"boundary_code", c.boundary_code}};
        e["genus"] = c.genus ? Json(*c.genus) : Json(nullptr);
        e["gurau"] = c.gurau ? rational_json(*c.gurau) : Json(nullptr);
        e["gurau_boundary"] = c.gurau_boundary ? rational_json(*c.gurau_boundary) : Json(nullptr);
        e["gurau_capped"] = c.gurau_capped ? rational_json(*c.gurau_capped) : Json(nullptr);
        comps.push_back(std::move(e));
    }
    return {{"divergent", r.divergent}, {"components", std::move(comps)}};
}

Json to_json(const CentralIdentityReport& r) {
    auto pair_json = [](const IdentityPair& p) {
        return Json{{"left", p.left}, {"right", p.right}, {"lhs", p.lhs.str()}, {"rhs", p.rhs.str()}};
    };
    Json j = {{"result", r.pass ? "PASS" : "FAIL"},
              {"max_edges", r.max_edges},
              {"max_components", r.max_components},
              {"vertex_types", r.vertex_types},
              {"right_factors", r.right_factors},
              {"pairs_compared", r.pairs_compared},
              {"multi_trace_right_factors", r.multi_trace_right_factors},
              {"dropped_lhs_pairs", r.dropped_lhs_pairs}};
    j["first_mismatch"] = r.first_mismatch ? pair_json(*r.first_mismatch) : Json(nullptr);
    return j;
}

Json to_json(const AlgebraElement& x) {
    Json out = Json::array();
    for (const auto& [m, q] : x.terms) out.push_back({{"monomial", m.str()}, {"coefficient", q.str()}});
    return out;
}

Json to_json(const TensorElement& x) {
    Json out = Json::array();
    for (const auto& [k, q] : x.terms)
        out.push_back({{"left", k.first.str()}, {"right", k.second.str()}, {"coefficient", q.str()}});
    return out;
}

Json to_json(const Laurent& x) {
    Json out = Json::object();
    for (const auto& [e, q] : x.coeff) out[std::to_string(e)] = q.str();
    return out;
}

// ------------------------------------------------------------------------ DOT

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_dot(const TwoGraph& g, DotMode mode) {
    std::ostringstream o;
    o << "graph G {\n  node [fontsize=10];\n";
    const auto vorder = label_order(g.vertex_labels);
    const auto horder = label_order(g.half_edge_labels);
    const auto sorder = label_order(g.strand_labels);
    if (mode == DotMode::vertexgraph) {
        // half-edges are the nodes, sigma1 pairs the solid edges, iota the dashed ones
        for (int v : vorder) {
            o << "  subgraph " << quoted("cluster_" + g.vertex_labels[v]) << " {\n    label=" << quoted(g.vertex_labels[v])
              << ";\n";
            for (int h : horder)
                if (g.nu[h] == v) o << "    " << quoted("h:" + g.half_edge_labels[h]) << " [label=" << quoted(g.half_edge_labels[h]) << ", shape=circle];\n";
            o << "  }\n";
        }
        for (int s : sorder) {
            const int t = g.sigma1[s];
            if (!label_less(g.strand_labels[s], g.strand_labels[t])) continue;
            o << "  " << quoted("h:" + g.half_edge_labels[g.mu[s]]) << " -- " << quoted("h:" + g.half_edge_labels[g.mu[t]])
              << " [label=" << quoted(g.has_tags() ? std::to_string(g.tags[s]) : g.strand_labels[s]) << "];\n";
        }
        for (int h : horder) {
            const int k = g.iota[h];
            if (k == h) {
                o << "  " << quoted("x:" + g.half_edge_labels[h]) << " [shape=point];\n";
                o << "  " << quoted("h:" + g.half_edge_labels[h]) << " -- " << quoted("x:" + g.half_edge_labels[h]) << " [style=dashed];\n";
            } else if (label_less(g.half_edge_labels[h], g.half_edge_labels[k])) {
                o << "  " << quoted("h:" + g.half_edge_labels[h]) << " -- " << quoted("h:" + g.half_edge_labels[k]) << " [style=dashed];\n";
            }
        }
    } else {
        // strand sections are the nodes, grouped by half-edge and vertex
        for (int v : vorder) {
            o << "  subgraph " << quoted("cluster_" + g.vertex_labels[v]) << " {\n    label=" << quoted(g.vertex_labels[v]) << ";\n";
            for (int h : horder) {
                if (g.nu[h] != v) continue;
                o << "    subgraph " << quoted("cluster_h_" + g.half_edge_labels[h]) << " {\n      label=" << quoted(g.half_edge_labels[h])
                  << "; style=rounded;\n";
                for (int s : sorder)
                    if (g.mu[s] == h) o << "      " << quoted("s:" + g.strand_labels[s]) << " [label=" << quoted(g.strand_labels[s]) << ", shape=point];\n";
                o << "    }\n";
            }
            o << "  }\n";
        }
        for (int s : sorder) {
            const int t = g.sigma1[s];
            if (label_less(g.strand_labels[s], g.strand_labels[t]))
                o << "  " << quoted("s:" + g.strand_labels[s]) << " -- " << quoted("s:" + g.strand_labels[t]) << " [color=gray];\n";
            const int u = g.sigma2[s];
            if (u == s) {
                o << "  " << quoted("x:" + g.strand_labels[s]) << " [shape=none, label=\"\"];\n";
                o << "  " << quoted("s:" + g.strand_labels[s]) << " -- " << quoted("x:" + g.strand_labels[s]) << ";\n";
            } else if (label_less(g.strand_labels[s], g.strand_labels[u])) {
                o << "  " << quoted("s:" + g.strand_labels[s]) << " -- " << quoted("s:" + g.strand_labels[u]) << " [penwidth=2];\n";
            }
        }
    }
    o << "}\n";
    return o.str();
}

}  // namespace strandhopf
