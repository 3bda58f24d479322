#include "lcf/cli.hpp"

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

namespace lcf {

namespace {

SparseBitMatrix parity_spec(const json& p) {
    if (p.contains("repetition")) {
        return repetition_parity(p["repetition"].get<std::size_t>());
    }
    if (p.contains("cyclic_repetition")) {
        return cyclic_repetition_parity(p["cyclic_repetition"].get<std::size_t>());
    }
    if (p.contains("H")) {
        return matrix_from_json(p["H"]);
    }
    return matrix_from_json(p);
}

std::size_t need(const std::optional<std::size_t>& v, const char* flag) {
    if (!v) {
        throw SchemaError(std::string("missing --") + flag);
    }
    return *v;
}

Rational need(const std::optional<Rational>& v, const char* flag) {
    if (!v) {
        throw SchemaError(std::string("missing --") + flag);
    }
    return *v;
}

json opt_rational(const std::optional<Rational>& r) { return r ? to_json(*r) : json(nullptr); }

json report_json(const CodeReport& r) { return document("code_report", to_json(r)); }

// Square complexes are accepted wherever a chain complex is, through square_complex_chain.
ChainComplex3 as_chain(const json& doc) {
    const auto t = document_type(doc);
    if (t == "chain_complex") {
        return chain_complex_from_json(doc);
    }
    if (t == "square_complex") {
        return square_complex_chain(square_complex_from_json(doc));
    }
    if (t == "subdivided_complex") {
        return subdivided_from_json(doc).XL;
    }
    if (t == "stacked") {
        return chain_complex_from_json(doc.at("complex"));
    }
    throw SchemaError("expected a chain complex, got " + t);
}

ClassicalSubdivision classical_sub_from_json(const json& doc) {
    expect_document(doc, "classical_subdivision");
    return subdivide_classical(classical_code_from_json(doc.at("base")), doc.at("L").get<std::size_t>());
}

json verdict(const std::string& what, bool pass, json details) {
    json d = document("verdict", std::move(details));
    d["what"] = what;
    d["pass"] = pass;
    return d;
}

json ledger_json(const CleaningLedger& l) {
    return {{"c1_S", l.c1_S},     {"c1_T", l.c1_T},     {"c1", l.c1},         {"dc1_S", l.dc1_S},
            {"dc1_T", l.dc1_T},   {"dc1_U", l.dc1_U},   {"dc1", l.dc1},       {"c0S", l.c0S},
            {"dc0S_T", l.dc0S_T}, {"c1S", l.c1S},       {"dc1S_T", l.dc1S_T}, {"c1p", l.c1p},
            {"dc1p_T", l.dc1p_T}, {"dc1p_U", l.dc1p_U}, {"dc1p", l.dc1p},     {"c1T", l.c1T},
            {"dc1T_U", l.dc1T_U}, {"c1pp", l.c1pp},     {"dc1pp", l.dc1pp},   {"dc1pp_U", l.dc1pp_U},
            {"step1_bounds", l.step1_bounds},           {"step2_bounds", l.step2_bounds}};
}

json classical_lemma_json(const ClassicalLemmaReport& r) {
    return {{"chain_map", r.chain_map}, {"k_base", r.k_base},       {"k_sub", r.k_sub},
            {"d_base", r.d_base},       {"d_sub", r.d_sub},         {"s_base", to_json(r.s_base)},
            {"s_sub", to_json(r.s_sub)}, {"s_bound", to_json(r.s_bound)}, {"delta_max", r.delta_max},
            {"min_component", r.min_component}, {"k_ok", r.k_ok}, {"d_ok", r.d_ok}, {"s_ok", r.s_ok}};
}

json size_claim_json(const SizeClaim& c) {
    return {{"precondition", c.precondition}, {"lower", c.lower}, {"upper", c.upper},
            {"sizes", c.sizes},               {"base", c.base},   {"delta_max", c.delta_max}};
}

Verdict check_cleaning(const SubdividedComplex& sub, const Guards& g) {
    const std::size_t n1 = sub.XL.n1();
    g.require(n1 <= g.expansion_n, "cleaning sweep over 2^" + std::to_string(n1) + " vectors");
    if (n1 >= 63) {
        throw GuardError("cleaning sweep over 2^" + std::to_string(n1) + " vectors");
    }
    std::map<std::string, std::size_t> failures;
    std::size_t total = 0;
    std::optional<BitVector> first;
    json first_ledger;
    for (std::uint64_t m = 0; m < (1ULL << n1); ++m) {
        const auto c1 = BitVector::from_mask(n1, m);
        const auto res = clean_vector(sub, c1, g);
        bool ok = true;
        for (const auto& line : audit_cleaning(sub, res.ledger)) {
            if (!line.ok) {
                ++failures[line.name];
                ok = false;
            }
        }
        if (!ok && !first) {
            first = c1;
            first_ledger = ledger_json(res.ledger);
        }
        ++total;
    }
    json d = {{"checked", total}, {"failures", failures}};
    if (first) {
        d["witness"] = to_json(*first);
        d["ledger"] = first_ledger;
    }
    return {failures.empty(), verdict("cleaning", failures.empty(), d)};
}

}  // namespace

json cmd_build(const json& spec) {
    expect_document(spec, "build_spec");
    const auto kind = spec.at("kind").get<std::string>();
    try {
        if (kind == "surface") {
            return document("chain_complex", to_json(surface_code(spec.at("L").get<std::size_t>())));
        }
        if (kind == "repetition") {
            const auto n = spec.at("n").get<std::size_t>();
            const bool cyc = spec.value("cyclic", false);
            return document("classical_code", to_json(ClassicalCode(cyc ? cyclic_repetition_parity(n) : repetition_parity(n))));
        }
        if (kind == "classical") {
            return document("classical_code", to_json(ClassicalCode(parity_spec(spec.at("H")))));
        }
        if (kind == "tanner") {
            const auto n = spec.at("n_vertices").get<std::size_t>();
            std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
            for (const auto& e : spec.at("edges")) {
                edges.emplace_back(e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>());
            }
            return document("classical_code", to_json(tanner_code(n, edges, ClassicalCode(parity_spec(spec.at("local"))))));
        }
        if (kind == "hypergraph_product") {
            return document("chain_complex", to_json(hypergraph_product(parity_spec(spec.at("a")), parity_spec(spec.at("b")))));
        }
        if (kind == "square_product") {
            const auto ga = ActedBipartiteGraph::from_parity(parity_spec(spec.at("a")));
            const auto gb = ActedBipartiteGraph::from_parity(parity_spec(spec.at("b")).transpose());
            auto sq = balanced_product_graphs(ga, gb);
            sq.validate();
            return document("square_complex", to_json(sq));
        }
        if (kind == "cayley") {
            const auto g = group_from_json(spec.at("group"));
            const auto a = spec.at("A").get<std::vector<std::uint32_t>>();
            const auto b = spec.at("B").get<std::vector<std::uint32_t>>();
            auto sq = left_right_cayley(a, g, b);
            sq.validate();
            return document("square_complex", to_json(sq));
        }
        if (kind == "generalized_repetition") {
            return document("boundary_complex", to_json(generalized_repetition(spec.at("L").get<std::size_t>(),
                                                                               spec.at("Delta").get<std::size_t>())));
        }
        if (kind == "generalized_surface") {
            return document("boundary_complex",
                            to_json(generalized_surface(spec.at("L").get<std::size_t>(), spec.at("Delta1").get<std::size_t>(),
                                                        spec.at("Delta2").get<std::size_t>())));
        }
        if (kind == "repetition_graph") {
            return document("boundary_graph", to_json(repetition_graph(spec.at("L").get<std::size_t>(),
                                                                       spec.at("Delta").get<std::size_t>())));
        }
        if (kind == "boundary_graph_product") {
            return document("boundary_graph", to_json(boundary_graph_product(boundary_graph_from_json(spec.at("a")),
                                                                             boundary_graph_from_json(spec.at("b")))));
        }
    } catch (const json::exception& e) {
        throw SchemaError("build_spec " + kind + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw SchemaError("build_spec " + kind + ": " + e.what());
    }
    throw SchemaError("build_spec: unknown kind \"" + kind + "\"");
}

json cmd_subdivide(const json& doc, const RunConfig& cfg) {
    const auto L = need(cfg.L, "L");
    const auto t = document_type(doc);
    try {
        if (t == "square_complex") {
            return document("subdivided_complex", to_json(subdivide(square_complex_from_json(doc), L)));
        }
        if (t == "classical_code") {
            const auto code = classical_code_from_json(doc);
            const auto sub = subdivide_classical(code, L);
            return document("classical_subdivision", {{"base", to_json(code)}, {"L", L}, {"code", to_json(sub.HL)}});
        }
    } catch (const std::invalid_argument& e) {
        throw SchemaError(std::string("subdivide: ") + e.what());
    }
    throw SchemaError("subdivide: expected a square_complex or classical_code, got " + t);
}

json cmd_embed(const json& doc, const RunConfig& cfg) {
    const auto t = document_type(doc);
    try {
        if (t == "subdivided_complex" || t == "square_complex") {
            const auto sub = t == "subdivided_complex" ? subdivided_from_json(doc)
                                                       : subdivide(square_complex_from_json(doc), need(cfg.L, "L"));
            const auto D = cfg.D.value_or(3);
            const auto e = embed_square(sub, D, cfg.seed);
            return document("embedding", to_json(e, &sub.edges));
        }
        if (t == "classical_code" || t == "classical_subdivision") {
            const auto code = t == "classical_code" ? classical_code_from_json(doc) : classical_code_from_json(doc.at("base"));
            const auto L = t == "classical_code" ? need(cfg.L, "L") : doc.at("L").get<std::size_t>();
            EdgeList base;
            for (const auto& [chk, bit] : code.H.entries()) {
                base.emplace_back(bit, static_cast<std::uint32_t>(code.n() + chk));
            }
            const auto g = embed_graph(code.n() + code.m(), base, L, cfg.D.value_or(2), cfg.seed);
            return document("embedding", to_json(g.embedding, &g.edges));
        }
    } catch (const std::invalid_argument& e) {
        throw SchemaError(std::string("embed: ") + e.what());
    }
    throw SchemaError("embed: expected a subdivided, square or classical input, got " + t);
}

Verdict cmd_measure(const json& doc, const RunConfig& cfg) {
    const auto t = document_type(doc);
    const auto g = cfg.guards();
    if (t == "classical_code") {
        return {true, report_json(classical_params(classical_code_from_json(doc), g))};
    }
    if (t == "classical_subdivision") {
        return {true, report_json(classical_params(classical_sub_from_json(doc).HL, g))};
    }
    if (t == "embedding") {
        EdgeList edges;
        const auto e = embedding_from_json(doc, &edges);
        const auto m = verify_embedding(e.points, edges);
        const bool match = m.a_squared == e.a_squared && m.b == e.b;
        json d = {{"a", m.a()}, {"a_squared", m.a_squared}, {"b", m.b}, {"stored_match", match}};
        json h = json::object();
        for (const auto& [k, v] : m.histogram) {
            h[std::to_string(k)] = v;
        }
        d["histogram"] = h;
        return {match, document("embedding_measure", d)};
    }
    return {true, report_json(measure(as_chain(doc), g))};
}

Verdict cmd_check(const json& doc, const RunConfig& cfg) {
    const auto& what = cfg.what;
    const auto g = cfg.guards();
    if (what == "validate") {
        const auto x = as_chain(doc);
        const auto d = validate(x);
        json det = {{"message", d.message}, {"max_degree", d.max_degree}};
        if (d.witness) {
            det["witness"] = {d.witness->first, d.witness->second};
        }
        return {d.valid, verdict(what, d.valid, det)};
    }
    if (what == "expansion") {
        const auto y = boundary_complex_from_json(expect_document(doc, "boundary_complex"));
        const auto level = cfg.level.value_or(0);
        if (cfg.sweep) {
            const auto s = boundary_expansion_sweep(y, level, g);
            return {true, verdict(what, true, {{"level", level}, {"beta_max", opt_rational(s.beta_max)},
                                               {"eta_max", opt_rational(s.eta_max)}})};
        }
        const auto beta = need(cfg.beta, "beta");
        const auto eta = need(cfg.eta, "eta");
        std::optional<SampledMode> mode;
        if (cfg.samples) {
            mode = SampledMode{cfg.seed, *cfg.samples};
        }
        const auto r = check_boundary_expansion(y, level, beta, eta, mode, g);
        json det = {{"level", level}, {"beta", to_json(beta)}, {"eta", to_json(eta)}, {"checked", r.checked},
                    {"method", r.method}};
        if (r.witness) {
            det["witness"] = to_json(*r.witness);
        }
        return {r.pass, verdict(what, r.pass, det)};
    }
    if (what == "small-set") {
        const auto x = as_chain(doc);
        const auto side = cfg.side == "boundary" ? ExpansionSide::Boundary : ExpansionSide::Coboundary;
        const auto alpha = need(cfg.alpha, "alpha");
        const auto gamma = need(cfg.gamma, "gamma");
        if (cfg.sweep) {
            const auto b = small_set_max_beta(x, alpha, gamma, side, g);
            return {true, verdict(what, true, {{"side", cfg.side}, {"beta_max", opt_rational(b)}})};
        }
        const auto r = check_small_set_expansion(x, alpha, need(cfg.beta, "beta"), gamma, side, g);
        json det = {{"side", cfg.side}, {"checked", r.checked}};
        if (r.witness) {
            det["witness"] = to_json(*r.witness);
        }
        return {r.pass, verdict(what, r.pass, det)};
    }
    if (what == "functional") {
        const auto bg = boundary_graph_from_json(expect_document(doc, "boundary_graph"));
        if (cfg.sweep) {
            const auto s = functional_sweep(bg, g);
            return {true, verdict(what, true, {{"C_max", opt_rational(s.C_max)}, {"Cb_max", opt_rational(s.Cb_max)}})};
        }
        const auto r = check_functional_inequalities(bg, need(cfg.C, "C"), need(cfg.Cb, "Cb"), g);
        json det = {{"checked", r.checked}, {"which", r.which}};
        if (r.witness) {
            det["witness"] = *r.witness;
        }
        return {r.pass, verdict(what, r.pass, det)};
    }
    if (what == "chain-map") {
        const auto c = verify_chain_map(subdivided_from_json(expect_document(doc, "subdivided_complex")));
        return {c.pass, verdict(what, c.pass, {{"message", c.message}})};
    }
    if (what == "dimension") {
        const auto r = verify_dimension_preservation(subdivided_from_json(expect_document(doc, "subdivided_complex")), g);
        return {r.pass, verdict(what, r.pass, {{"k_base", r.k_base}, {"k_sub", r.k_sub},
                                               {"obligations", r.obligations}, {"message", r.message}})};
    }
    if (what == "size") {
        const auto c = check_size_claim(subdivided_from_json(expect_document(doc, "subdivided_complex")));
        return {c.holds(), verdict(what, c.holds(), size_claim_json(c))};
    }
    if (what == "cleaning") {
        return check_cleaning(subdivided_from_json(expect_document(doc, "subdivided_complex")), g);
    }
    if (what == "classical") {
        const auto r = verify_classical_lemma(classical_sub_from_json(doc), g);
        return {r.all(), verdict(what, r.all(), classical_lemma_json(r))};
    }
    if (what == "bpt") {
        const auto rep = code_report_from_json(expect_document(doc, "code_report"));
        const auto b = bpt_bounds(static_cast<std::int64_t>(need(cfg.L, "L")), static_cast<std::int64_t>(need(cfg.D, "D")),
                                  static_cast<std::int64_t>(need(cfg.r, "r")),
                                  rep.quantum ? BoundKind::Quantum : BoundKind::Classical);
        const auto c = check_bpt(rep, b);
        return {c.all(), verdict(what, c.all(), {{"d_max", b.d_max}, {"energy_max", b.energy_max}, {"d_ok", c.d_ok},
                                                 {"energy_ok", c.energy_ok}, {"k_ok", c.k_ok}})};
    }
    if (what == "embedding") {
        auto m = cmd_measure(expect_document(doc, "embedding"), cfg);
        return {m.pass, verdict(what, m.pass, m.doc)};
    }
    throw SchemaError("check: unknown --what \"" + what + "\"");
}

Verdict cmd_report(const json& doc, const RunConfig& cfg) {
    const auto square = document_type(doc) == "build_spec" ? cmd_build(doc) : doc;
    const auto sq = square_complex_from_json(expect_document(square, "square_complex"));
    const auto L = need(cfg.L, "L");
    const auto g = cfg.guards();
    json out = {{"L", L}, {"seed", cfg.seed}};
    bool pass = true;
    auto guarded_measure = [&](const ChainComplex3& x) -> json {
        try {
            return to_json(measure(x, g));
        } catch (const GuardError& e) {
            return {{"skipped", e.what()}};
        }
    };
    const auto X = square_complex_chain(sq);
    out["base"] = guarded_measure(X);
    const auto sub = subdivide(sq, L);
    out["sizes"] = {{"base", {X.n0(), X.n1(), X.n2()}}, {"subdivided", {sub.XL.n0(), sub.XL.n1(), sub.XL.n2()}}};
    const auto cm = verify_chain_map(sub);
    out["chain_map"] = {{"pass", cm.pass}, {"message", cm.message}};
    pass = pass && cm.pass;
    try {
        const auto dim = verify_dimension_preservation(sub, g);
        out["dimension"] = {{"pass", dim.pass}, {"k_base", dim.k_base}, {"k_sub", dim.k_sub}};
        pass = pass && dim.pass;
    } catch (const GuardError& e) {
        out["dimension"] = {{"skipped", e.what()}};
    }
    const auto sc = check_size_claim(sub);
    out["size_claim"] = size_claim_json(sc);
    if (sc.precondition) {
        pass = pass && sc.holds();
    }
    out["subdivided"] = guarded_measure(sub.XL);
    const auto D = cfg.D.value_or(3);
    const auto e = embed_square(sub, D, cfg.seed);
    out["embedding"] = {{"D", D}, {"a", e.a()}, {"a_squared", e.a_squared}, {"b", e.b}};
    if (cfg.r && out["subdivided"].contains("n")) {
        const auto b = bpt_bounds(static_cast<std::int64_t>(L), static_cast<std::int64_t>(D),
                                  static_cast<std::int64_t>(*cfg.r), BoundKind::Quantum);
        const auto c = check_bpt(code_report_from_json(out["subdivided"]), b);
        out["bpt"] = {{"d_max", b.d_max}, {"energy_max", b.energy_max}, {"pass", c.all()}};
        pass = pass && c.all();
    }
    out["pass"] = pass;
    return {pass, document("report", out)};
}

json cmd_stack(const json& doc, const RunConfig& cfg) {
    const auto x = chain_complex_from_json(expect_document(doc, "chain_complex"));
    const auto D = cfg.D.value_or(3);
    const auto a = need(cfg.copies, "copies");
    const auto s = stack(x, points_from_grid_labels(x, D), D, a);
    const auto edges = tanner_edges(s.code);
    const auto m = verify_embedding(s.points, edges);
    LatticeEmbedding e;
    e.D = D;
    e.seed = cfg.seed;
    e.points = s.points;
    e.a_squared = m.a_squared;
    e.b = m.b;
    json body = {{"copies", a}, {"complex", to_json(s.code)}, {"embedding", to_json(e, &edges)}};
    return document("stacked", body);
}

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"lcf: build, subdivide, embed and audit square-complex codes"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string alpha, beta, gamma, eta, C, Cb, config_path;

    const std::vector<std::string> names{"build", "subdivide", "embed", "measure", "check", "report", "stack"};
    for (const auto& name : names) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("input", cfg.input, "input document, - for stdin")->required();
        sub->add_option("--out", cfg.output, "output path, - for stdout");
        sub->add_option("--L", cfg.L, "subdivision length");
        sub->add_option("--D", cfg.D, "lattice dimension");
        sub->add_option("--seed", cfg.seed, "embedding seed");
        sub->add_option("--guard-n", cfg.guard_n, "size limit of every exhaustive oracle");
        sub->add_flag("--force", cfg.force, "run oracles past their guards");
        sub->add_option("--alpha", alpha);
        sub->add_option("--beta", beta);
        sub->add_option("--gamma", gamma);
        sub->add_option("--eta", eta);
        sub->add_option("--C", C);
        sub->add_option("--Cb", Cb);
        sub->add_flag("--sweep", cfg.sweep, "report the largest passing constants instead");
        sub->add_option("--what", cfg.what,
                        "validate|expansion|small-set|functional|chain-map|dimension|size|cleaning|classical|bpt|embedding");
        sub->add_option("--level", cfg.level);
        sub->add_option("--samples", cfg.samples, "stratified samples instead of the exhaustive sweep");
        sub->add_option("--r", cfg.r, "locality radius for the bpt bounds");
        sub->add_option("--copies", cfg.copies, "copies per axis for stack");
        sub->add_option("--side", cfg.side)->check(CLI::IsMember({"coboundary", "boundary"}));
        sub->add_option("--csv", cfg.csv, "also write embedding coordinates as CSV");
        sub->add_option("--config-out", config_path, "write the parsed run config");
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kPass : kError;
    }
    try {
        cfg.command = app.get_subcommands().front()->get_name();
        auto rat = [](const std::string& s) -> std::optional<Rational> {
            if (s.empty()) {
                return std::nullopt;
            }
            try {
                return Rational::parse(s);
            } catch (const std::exception&) {
                throw SchemaError("not a rational number: \"" + s + "\"");
            }
        };
        cfg.alpha = rat(alpha);
        cfg.beta = rat(beta);
        cfg.gamma = rat(gamma);
        cfg.eta = rat(eta);
        cfg.C = rat(C);
        cfg.Cb = rat(Cb);
        if (!config_path.empty()) {
            write_json_file(config_path, to_json(cfg));
        }

        const auto in = read_json_file(cfg.input);
        json out;
        bool pass = true;
        const auto& c = cfg.command;
        if (c == "build") {
            out = cmd_build(in);
        } else if (c == "subdivide") {
            out = cmd_subdivide(in, cfg);
        } else if (c == "embed") {
            out = cmd_embed(in, cfg);
        } else if (c == "measure") {
            auto v = cmd_measure(in, cfg);
            pass = v.pass;
            out = std::move(v.doc);
        } else if (c == "check") {
            auto v = cmd_check(in, cfg);
            pass = v.pass;
            out = std::move(v.doc);
        } else if (c == "report") {
            auto v = cmd_report(in, cfg);
            pass = v.pass;
            out = std::move(v.doc);
        } else {
            out = cmd_stack(in, cfg);
        }
        write_json_file(cfg.output, out);
        if (!cfg.csv.empty()) {
            const json* emb = nullptr;
            if (document_type(out) == "embedding") {
                emb = &out;
            } else if (out.contains("embedding") && out["embedding"].contains("points")) {
                emb = &out["embedding"];
            }
            if (emb == nullptr) {
                throw SchemaError("--csv needs a command that produces an embedding");
            }
            std::ofstream f(cfg.csv);
            f << points_csv(embedding_from_json(*emb).points);
        }
        return pass ? kPass : kFail;
    } catch (const GuardError& e) {
        std::cerr << json{{"error", "guard"}, {"message", std::string(e.what())}, {"hint", "raise --guard-n or pass --force"}}.dump()
                  << "\n";
    } catch (const SchemaError& e) {
        std::cerr << json{{"error", "schema"}, {"message", std::string(e.what())}}.dump() << "\n";
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "runtime"}, {"message", std::string(e.what())}}.dump() << "\n";
    }
    return kError;
}

}  // namespace lcf
