#include "lcf/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace lcf {

namespace {

// Runs f, turning library and json exceptions into SchemaError tagged with `what`.
template <class F>
auto guarded(const std::string& what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const SchemaError&) {
        throw;
    } catch (const GuardError&) {
        throw;
    } catch (const json::exception& e) {
        throw SchemaError(what + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(what + ": " + e.what());
    } catch (const std::out_of_range& e) {
        throw SchemaError(what + ": " + e.what());
    } catch (const std::logic_error& e) {
        throw SchemaError(what + ": " + e.what());
    }
}

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

json edge_list(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& e) {
    json a = json::array();
    for (const auto& [u, v] : e) {
        a.push_back({u, v});
    }
    return a;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_from(const json& j) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) {
            throw SchemaError("edge must be a pair");
        }
        out.emplace_back(e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>());
    }
    return out;
}

const char* kind_name(CellKind k) {
    switch (k) {
        case CellKind::Vertex:
            return "vertex";
        case CellKind::Edge:
            return "edge";
        default:
            return "face";
    }
}

const char* region_name(Region r) {
    switch (r) {
        case Region::S:
            return "S";
        case Region::T:
            return "T";
        default:
            return "U";
    }
}

}  // namespace

json parse_json(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
        std::string msg = e.what();
        // drop the library prefix up to the first ": "
        if (const auto p = msg.find(": "); p != std::string::npos) {
            msg = msg.substr(p + 2);
        }
        throw SchemaError(source + ": parse error at line " + std::to_string(line) + ", column " +
                          std::to_string(col) + ": " + msg);
    }
}

json read_json_file(const std::string& path) {
    std::stringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) {
            throw SchemaError(path + ": cannot open");
        }
        ss << in.rdbuf();
    }
    return parse_json(ss.str(), path);
}

void write_json_file(const std::string& path, const json& doc) {
    if (path.empty() || path == "-") {
        std::cout << doc.dump() << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw SchemaError(path + ": cannot write");
    }
    out << doc.dump() << "\n";
}

json document(const std::string& type, json body) {
    json d = {{"format", kFormat}, {"type", type}};
    for (auto& [k, v] : body.items()) {
        d[k] = v;
    }
    return d;
}

std::string document_type(const json& doc) {
    if (!doc.is_object()) {
        throw SchemaError("document must be a JSON object");
    }
    if (!doc.contains("format") || doc["format"] != kFormat) {
        throw SchemaError(std::string("document must carry \"format\": \"") + kFormat + "\"");
    }
    if (!doc.contains("type") || !doc["type"].is_string()) {
        throw SchemaError("document has no \"type\"");
    }
    return doc["type"].get<std::string>();
}

const json& expect_document(const json& doc, const std::string& type) {
    const auto t = document_type(doc);
    if (t != type) {
        throw SchemaError("expected a " + type + " document, got " + t);
    }
    return doc;
}

json to_json(const BitVector& v) {
    json a = json::array();
    for (auto i : v.support()) {
        a.push_back(i);
    }
    return a;
}

BitVector bitvector_from_json(const json& j, std::size_t n) {
    return guarded("bit vector", [&] {
        BitVector v(n);
        for (const auto& x : j) {
            const auto i = x.get<std::size_t>();
            if (i >= n) {
                throw SchemaError("bit vector: index " + std::to_string(i) + " out of range " + std::to_string(n));
            }
            v.set(i);
        }
        return v;
    });
}

json to_json(const SparseBitMatrix& m) {
    json e = json::array();
    for (const auto& [r, c] : m.entries()) {
        e.push_back({r, c});
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", e}};
}

SparseBitMatrix matrix_from_json(const json& j) {
    return guarded("matrix", [&] {
        std::vector<Entry> e;
        for (const auto& p : j.at("entries")) {
            if (!p.is_array() || p.size() != 2) {
                throw SchemaError("matrix: entry must be [row, col]");
            }
            e.emplace_back(p[0].get<std::uint32_t>(), p[1].get<std::uint32_t>());
        }
        if (!std::is_sorted(e.begin(), e.end())) {
            throw SchemaError("matrix: entries must be sorted lexicographically");
        }
        return SparseBitMatrix(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(), std::move(e));
    });
}

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
    return guarded("rational", [&] {
        if (j.is_number_integer()) {
            return Rational(j.get<std::int64_t>());
        }
        return Rational::parse(j.get<std::string>());
    });
}

json to_json(const ChainComplex3& x) {
    json labels = json::object();
    for (int i = 0; i < 3; ++i) {
        if (!x.labels[i].empty()) {
            labels[std::to_string(i)] = x.labels[i];
        }
    }
    return {{"sizes", {x.n0(), x.n1(), x.n2()}},
            {"delta0", to_json(x.delta0)},
            {"delta1", to_json(x.delta1)},
            {"labels", labels}};
}

ChainComplex3 chain_complex_from_json(const json& j) {
    return guarded("chain complex", [&] {
        ChainComplex3 x(matrix_from_json(j.at("delta0")), matrix_from_json(j.at("delta1")));
        if (j.contains("sizes")) {
            const auto s = j["sizes"].get<std::vector<std::size_t>>();
            if (s.size() != 3 || s[0] != x.n0() || s[1] != x.n1() || s[2] != x.n2()) {
                throw SchemaError("chain complex: sizes disagree with the matrices");
            }
        }
        if (j.contains("labels")) {
            for (const auto& [k, v] : j["labels"].items()) {
                const int i = std::stoi(k);
                if (i < 0 || i > 2) {
                    throw SchemaError("chain complex: label level " + k);
                }
                x.labels[i] = v.get<std::vector<std::string>>();
            }
        }
        const auto d = validate(x);
        if (!d.valid) {
            throw SchemaError("chain complex: " + d.message);
        }
        return x;
    });
}

json to_json(const ClassicalCode& c) { return {{"H", to_json(c.H)}}; }

ClassicalCode classical_code_from_json(const json& j) {
    return guarded("classical code", [&] { return ClassicalCode(matrix_from_json(j.at("H"))); });
}

json to_json(const GroupTable& g) { return {{"order", g.order()}, {"mul", g.table()}}; }

GroupTable group_from_json(const json& j) {
    return guarded("group", [&] {
        if (j.contains("cyclic")) {
            return GroupTable::cyclic(j["cyclic"].get<std::size_t>());
        }
        if (j.contains("dihedral")) {
            return GroupTable::dihedral(j["dihedral"].get<std::size_t>());
        }
        auto mul = j.at("mul").get<std::vector<std::vector<std::uint32_t>>>();
        if (j.contains("order") && j["order"].get<std::size_t>() != mul.size()) {
            throw SchemaError("group: order disagrees with the table");
        }
        return GroupTable(std::move(mul));
    });
}

json to_json(const SquareComplex& s) {
    json faces = json::array();
    for (const auto& f : s.faces) {
        faces.push_back(f);
    }
    json classes = json::array();
    for (auto c : s.vclass) {
        classes.push_back(c);
    }
    json j = {{"classes", classes}, {"edges", edge_list(s.edges)}, {"faces", faces}};
    if (!s.labels.empty()) {
        j["labels"] = s.labels;
    }
    return j;
}

SquareComplex square_complex_from_json(const json& j) {
    return guarded("square complex", [&] {
        SquareComplex s;
        for (const auto& c : j.at("classes")) {
            const auto v = c.get<unsigned>();
            if (v > 3) {
                throw SchemaError("square complex: vertex class must be 0..3");
            }
            s.vclass.push_back(static_cast<std::uint8_t>(v));
        }
        s.edges = edges_from(j.at("edges"));
        for (const auto& f : j.at("faces")) {
            s.faces.push_back(f.get<std::array<std::uint32_t, 4>>());
        }
        if (j.contains("labels")) {
            s.labels = j["labels"].get<std::vector<std::string>>();
        }
        for (const auto& [u, v] : s.edges) {
            if (u >= s.n_vertices() || v >= s.n_vertices()) {
                throw SchemaError("square complex: edge endpoint out of range");
            }
        }
        for (const auto& f : s.faces) {
            for (auto v : f) {
                if (v >= s.n_vertices()) {
                    throw SchemaError("square complex: face vertex out of range");
                }
            }
        }
        s.normalize();
        s.validate();
        return s;
    });
}

json to_json(const SubdividedComplex& s) {
    json verts = json::array();
    for (const auto& v : s.vertices) {
        verts.push_back({{"kind", kind_name(v.kind)},
                         {"cell", v.cell},
                         {"i", v.i},
                         {"j", v.j},
                         {"region", region_name(v.region)},
                         {"component", v.component},
                         {"level", v.level},
                         {"index", v.index}});
    }
    return {{"base", to_json(s.base)}, {"L", s.L}, {"vertices", verts}, {"complex", to_json(s.XL)}};
}

SubdividedComplex subdivided_from_json(const json& j) {
    return guarded("subdivided complex", [&] {
        auto sub = subdivide(square_complex_from_json(j.at("base")), j.at("L").get<std::size_t>());
        if (j.contains("vertices") && j["vertices"].size() != sub.vertices.size()) {
            throw SchemaError("subdivided complex: vertex table has " + std::to_string(j["vertices"].size()) +
                              " rows, expected " + std::to_string(sub.vertices.size()));
        }
        if (j.contains("complex")) {
            const auto& c = j["complex"];
            // kept as stored, so that check chain-map sees what the file says
            sub.XL = ChainComplex3(matrix_from_json(c.at("delta0")), matrix_from_json(c.at("delta1")));
        }
        return sub;
    });
}

json to_json(const BoundaryComplex& y) {
    json d = json::array();
    for (const auto& m : y.delta) {
        d.push_back(to_json(m));
    }
    return {{"L", y.L}, {"interior", y.n_int}, {"boundary", y.n_bd}, {"delta", d}};
}

BoundaryComplex boundary_complex_from_json(const json& j) {
    return guarded("boundary complex", [&] {
        if (j.contains("repetition")) {
            const auto& r = j["repetition"];
            return generalized_repetition(r.at("L").get<std::size_t>(), r.at("Delta").get<std::size_t>());
        }
        if (j.contains("surface")) {
            const auto& r = j["surface"];
            return generalized_surface(r.at("L").get<std::size_t>(), r.at("Delta1").get<std::size_t>(),
                                       r.at("Delta2").get<std::size_t>());
        }
        std::vector<SparseBitMatrix> d;
        for (const auto& m : j.at("delta")) {
            d.push_back(matrix_from_json(m));
        }
        BoundaryComplex y(j.at("interior").get<std::vector<std::size_t>>(),
                          j.at("boundary").get<std::vector<std::size_t>>(), std::move(d),
                          j.value("L", std::size_t{0}));
        y.validate();
        return y;
    });
}

json to_json(const BoundaryGraph& g) { return {{"n", g.n}, {"edges", edge_list(g.edges)}, {"mult", g.mult}}; }

BoundaryGraph boundary_graph_from_json(const json& j) {
    return guarded("boundary graph", [&] {
        return BoundaryGraph(j.at("n").get<std::size_t>(), edges_from(j.at("edges")),
                             j.at("mult").get<std::vector<std::uint32_t>>());
    });
}

json to_json(const LatticeEmbedding& e, const EdgeList* edges) {
    json pts = json::object();
    for (std::size_t v = 0; v < e.points.size(); ++v) {
        pts[std::to_string(v)] = e.points[v];
    }
    json j = {{"D", e.D}, {"seed", e.seed}, {"points", pts}, {"a", e.a()}, {"a_squared", e.a_squared}, {"b", e.b}};
    if (edges != nullptr) {
        j["edges"] = edge_list(*edges);
    }
    return j;
}

LatticeEmbedding embedding_from_json(const json& j, EdgeList* edges) {
    return guarded("embedding", [&] {
        LatticeEmbedding e;
        e.D = j.at("D").get<std::size_t>();
        e.seed = j.at("seed").get<std::uint64_t>();
        const auto& pts = j.at("points");
        e.points.resize(pts.size());
        std::vector<char> seen(pts.size(), 0);
        for (const auto& [k, v] : pts.items()) {
            std::size_t pos = 0;
            const auto id = std::stoul(k, &pos);
            if (pos != k.size() || id >= pts.size() || seen[id]) {
                throw SchemaError("embedding: vertex keys must be 0.." + std::to_string(pts.size() - 1) +
                                  " without repeats, got \"" + k + "\"");
            }
            seen[id] = 1;
            e.points[id] = v.get<Point>();
            if (e.points[id].size() != e.D) {
                throw SchemaError("embedding: point " + k + " is not in dimension " + std::to_string(e.D));
            }
        }
        e.b = j.at("b").get<std::size_t>();
        e.a_squared = j.value("a_squared", std::int64_t{-1});
        if (e.a_squared < 0) {
            const auto a = j.at("a").get<double>();
            e.a_squared = static_cast<std::int64_t>(a * a + 0.5);
        }
        if (edges != nullptr && j.contains("edges")) {
            *edges = edges_from(j["edges"]);
        }
        return e;
    });
}

json to_json(const CodeReport& r) {
    json j = {{"quantum", r.quantum}, {"n", r.n}, {"k", r.k}, {"d", r.d}, {"energy", r.energy}, {"methods", r.methods}};
    if (r.soundness) {
        j["soundness"] = to_json(*r.soundness);
    }
    return j;
}

CodeReport code_report_from_json(const json& j) {
    return guarded("code report", [&] {
        CodeReport r;
        r.quantum = j.value("quantum", true);
        r.n = j.at("n").get<std::size_t>();
        r.k = j.at("k").get<std::size_t>();
        r.d = j.at("d").get<std::vector<std::size_t>>();
        r.energy = j.value("energy", std::vector<std::size_t>{});
        if (j.contains("soundness")) {
            r.soundness = rational_from_json(j["soundness"]);
        }
        r.methods = j.value("methods", std::map<std::string, std::string>{});
        return r;
    });
}

Guards RunConfig::guards() const {
    Guards g;
    if (guard_n) {
        g.distance_n = g.barrier_n = g.expansion_n = g.classical_n = g.soundness_n = g.cleaning_n = *guard_n;
    }
    g.force = force;
    return g;
}

json to_json(const RunConfig& c) {
    json j = {{"command", c.command}, {"input", c.input}, {"output", c.output}, {"seed", c.seed},
              {"force", c.force},     {"sweep", c.sweep}, {"what", c.what},     {"side", c.side},
              {"csv", c.csv}};
    auto opt = [&](const char* k, const auto& v) {
        if (v) {
            j[k] = *v;
        }
    };
    opt("L", c.L);
    opt("D", c.D);
    opt("guard_n", c.guard_n);
    opt("level", c.level);
    opt("r", c.r);
    opt("copies", c.copies);
    opt("samples", c.samples);
    auto rat = [&](const char* k, const std::optional<Rational>& v) {
        if (v) {
            j[k] = to_json(*v);
        }
    };
    rat("alpha", c.alpha);
    rat("beta", c.beta);
    rat("gamma", c.gamma);
    rat("eta", c.eta);
    rat("C", c.C);
    rat("Cb", c.Cb);
    return document("run_config", j);
}

RunConfig run_config_from_json(const json& doc) {
    expect_document(doc, "run_config");
    return guarded("run config", [&] {
        RunConfig c;
        c.command = doc.at("command").get<std::string>();
        c.input = doc.value("input", std::string{});
        c.output = doc.value("output", std::string{"-"});
        c.seed = doc.value("seed", std::uint64_t{1});
        c.force = doc.value("force", false);
        c.sweep = doc.value("sweep", false);
        c.what = doc.value("what", std::string{});
        c.side = doc.value("side", std::string{"coboundary"});
        c.csv = doc.value("csv", std::string{});
        auto opt = [&](const char* k, std::optional<std::size_t>& v) {
            if (doc.contains(k)) {
                v = doc[k].get<std::size_t>();
            }
        };
        opt("L", c.L);
        opt("D", c.D);
        opt("guard_n", c.guard_n);
        opt("level", c.level);
        opt("r", c.r);
        opt("copies", c.copies);
        opt("samples", c.samples);
    opt("samples", c.samples);
        auto rat = [&](const char* k, std::optional<Rational>& v) {
            if (doc.contains(k)) {
                v = rational_from_json(doc[k]);
            }
        };
        rat("alpha", c.alpha);
        rat("beta", c.beta);
        rat("gamma", c.gamma);
        rat("eta", c.eta);
        rat("C", c.C);
        rat("Cb", c.Cb);
        return c;
    });
}

}  // namespace lcf
