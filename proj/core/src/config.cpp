#include "pidisc/config.hpp"

#include <fstream>

namespace pidisc {

namespace {

[[noreturn]] void bad(const std::string& what) { throw parse_error("config: " + what); }

FieldSpec parse_field(const nlohmann::json& j) {
    if (!j.is_object()) bad("'field' must be an object");
    if (j.contains("prime")) return FieldSpec::prime(j.at("prime").get<std::uint64_t>());
    std::string mode = j.value("mode", std::string());
    if (mode == "rational") return FieldSpec::rationals();
    if (mode == "prime") {
        if (!j.contains("p")) bad("prime field needs key 'p'");
        return FieldSpec::prime(j.at("p").get<std::uint64_t>());
    }
    bad("field.mode must be 'rational' or 'prime' (or use {\"prime\": p})");
}

TraceSpec parse_trace_spec(const nlohmann::json& j) {
    TraceSpec t;
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "reg")
            t.kind = TraceKind::regular;
        else if (s == "std")
            t.kind = TraceKind::standard;
        else if (s == "red")
            t.kind = TraceKind::reduced;
        else
            bad("unknown trace kind '" + s + "' (expected reg|std|red)");
        return t;
    }
    if (j.is_object() && j.value("kind", std::string()) == "scaled") {
        t.kind = TraceKind::scaled;
        t.base = j.value("base", std::string("red"));
        if (!j.contains("factor")) bad("scaled trace needs key 'factor'");
        t.factor = j.at("factor").get<std::string>();
        return t;
    }
    bad("trace entries must be 'reg'|'std'|'red' or {kind:'scaled', base, factor}");
}

} // namespace

RunConfig parse_config(const nlohmann::json& j) {
    RunConfig c;
    if (!j.is_object()) bad("top level must be an object");
    if (!j.contains("field")) bad("missing 'field'");
    c.field = parse_field(j.at("field"));
    c.family = j.value("family", std::string());
    if (c.family != "weyl" && c.family != "quantum_affine_space" && c.family != "matrix_order" &&
        c.family != "structure_constants")
        bad("family must be weyl|quantum_affine_space|matrix_order|structure_constants");

    if (c.family == "weyl") {
        if (!j.contains("weyl")) bad("weyl family needs a 'weyl' object");
        const auto& w = j.at("weyl");
        for (const auto& v : w.value("lambda", nlohmann::json::array()))
            c.lambda.push_back(v.get<unsigned>());
        if (!w.contains("epsilon")) bad("weyl needs 'epsilon'");
        for (const auto& e : w.at("epsilon")) {
            EpsilonSpec es;
            if (e.is_object() && e.contains("order"))
                es.order = e.at("order").get<std::uint64_t>();
            else if (e.is_object() && e.contains("residue"))
                es.residue = e.at("residue").get<long long>();
            else
                bad("epsilon entries must be {order: d} or {residue: v}");
            c.epsilon.push_back(es);
        }
        if (w.contains("chi")) {
            for (const auto& row : w.at("chi")) {
                std::vector<long long> r;
                for (const auto& v : row) r.push_back(v.get<long long>());
                c.chi.push_back(std::move(r));
            }
        }
    } else if (c.family == "quantum_affine_space") {
        if (j.contains("quantum_affine")) {
            const auto& q = j.at("quantum_affine");
            c.p12 = q.value("p12", -1);
            c.p13 = q.value("p13", -1);
            c.p23 = q.value("p23", 1);
        }
    } else if (c.family == "structure_constants") {
        if (!j.contains("structure_constants")) bad("structure_constants family needs its object");
        c.structure = j.at("structure_constants");
    }

    if (j.contains("traces"))
        for (const auto& t : j.at("traces")) c.traces.push_back(parse_trace_spec(t));

    if (j.contains("grid")) {
        const auto& g = j.at("grid");
        if (g.value("full", false)) c.grid_full = true;
        if (g.contains("values")) {
            for (const auto& [name, list] : g.at("values").items()) {
                std::vector<long long> vals;
                for (const auto& v : list) vals.push_back(v.get<long long>());
                c.grid_values[name] = std::move(vals);
            }
        }
    }

    c.seed = j.value("seed", std::uint64_t{0});
    c.max_dets = j.value("max_dets", std::uint64_t{1000000});
    c.force_rational = j.value("force_rational", false);
    c.out_path = j.value("out", std::string());
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open config file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error("config JSON parse failure in '" + path + "': " + e.what());
    }
    return parse_config(j);
}

PresentedAlgebra build_structure_constants(const FieldSpec& f, const nlohmann::json& j) {
    if (!j.is_object()) throw parse_error("structure_constants must be an object");
    std::vector<std::string> center_vars;
    for (const auto& v : j.value("center_vars", nlohmann::json::array()))
        center_vars.push_back(v.get<std::string>());
    if (center_vars.empty()) throw parse_error("structure_constants needs center_vars");

    CentralRing ring;
    if (j.contains("relations")) {
        std::vector<RewriteRule> rules;
        CentralRing plain = CentralRing::polynomial(f, center_vars);
        for (const auto& r : j.at("relations")) {
            MultiPoly lhs = plain.parse(r.at("lhs").get<std::string>());
            if (!lhs.is_monomial()) throw parse_error("relation lhs must be a monomial");
            rules.push_back(RewriteRule{lhs.leading_term().first, plain.parse(r.at("rhs").get<std::string>())});
        }
        std::vector<ExpVec> embed;
        std::size_t adim = 0;
        std::vector<std::string> anames;
        if (j.contains("ambient")) {
            for (const auto& n : j.at("ambient").at("names")) anames.push_back(n.get<std::string>());
            adim = anames.size();
            for (const auto& row : j.at("ambient").at("embedding")) {
                ExpVec e;
                for (const auto& v : row) e.push_back(v.get<std::uint32_t>());
                if (e.size() != adim) throw parse_error("embedding row length mismatch");
                embed.push_back(std::move(e));
            }
        }
        ring = CentralRing::with_rules(f, center_vars, std::move(rules), std::move(embed), adim, anames);
    } else {
        ring = CentralRing::polynomial(f, center_vars);
    }

    PresentedAlgebra a;
    a.center = ring;
    for (const auto& l : j.at("labels")) a.basis_labels.push_back(l.get<std::string>());
    std::size_t L = a.basis_labels.size();
    if (L == 0) throw parse_error("structure_constants needs labels");

    auto parse_comb = [&](const nlohmann::json& obj) {
        LinComb lc;
        for (const auto& [label, poly] : obj.items()) {
            std::size_t k = a.label_index(label);
            MultiPoly c = ring.reduce(ring.parse(poly.get<std::string>()));
            if (!c.is_zero()) lc.emplace(k, c);
        }
        return lc;
    };

    const auto& table = j.at("table");
    if (table.size() != L) throw parse_error("table must have one row per label");
    a.table.assign(L * L, LinComb{});
    for (std::size_t i = 0; i < L; ++i) {
        if (table[i].size() != L) throw parse_error("table row length mismatch");
        for (std::size_t k2 = 0; k2 < L; ++k2) a.table[i * L + k2] = parse_comb(table[i][k2]);
    }
    a.identity = parse_comb(j.at("identity"));
    a.is_free = j.value("free", false);
    if (j.contains("pi_degree")) a.pi_degree_hint = j.at("pi_degree").get<unsigned>();
    if (j.contains("syzygies"))
        for (const auto& s : j.at("syzygies")) a.syzygies.push_back(parse_comb(s));
    if (j.contains("qbasis"))
        for (const auto& q : j.at("qbasis")) a.qbasis.push_back(a.label_index(q.get<std::string>()));
    if (j.contains("qexpansion")) {
        for (const auto& [label, rows] : j.at("qexpansion").items()) {
            std::vector<std::pair<std::size_t, PolyFraction>> exp;
            for (const auto& row : rows) {
                // [target label, numerator, denominator]
                std::size_t b = a.label_index(row.at(0).get<std::string>());
                MultiPoly num = ring.parse(row.at(1).get<std::string>());
                MultiPoly den = ring.parse(row.at(2).get<std::string>());
                exp.emplace_back(b, PolyFraction(num, den));
            }
            a.qexpansion[a.label_index(label)] = std::move(exp);
        }
    }
    a.validate();
    return a;
}

AlgebraBundle build_family(const RunConfig& cfg, Rng& rng) {
    AlgebraBundle b;
    b.family = cfg.family;
    if (cfg.family == "weyl") {
        WeylParams p;
        p.field = cfg.field;
        p.lambda = cfg.lambda;
        if (p.lambda.empty()) p.lambda.assign(cfg.epsilon.size(), 1u);
        for (const auto& es : cfg.epsilon) {
            if (es.order)
                p.epsilon.push_back(root_of_unity(cfg.field, *es.order));
            else
                p.epsilon.push_back(Scalar::from_int(cfg.field, *es.residue));
        }
        std::size_t n = p.epsilon.size();
        p.chi.assign(n, std::vector<Scalar>(n, Scalar::one(cfg.field)));
        if (!cfg.chi.empty()) {
            if (cfg.chi.size() != n) throw parse_error("chi must be N x N");
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k)
                    p.chi[i][k] = Scalar::from_int(cfg.field, cfg.chi[i][k]);
        }
        auto w = std::make_shared<WeylAlgebra>(build_weyl(p));
        b.pi_deg = static_cast<unsigned>(w->r);
        b.weyl = std::move(w);
        return b;
    }
    if (cfg.family == "matrix_order") {
        b.plain = std::make_shared<PresentedAlgebra>(build_matrix_order(cfg.field));
    } else if (cfg.family == "quantum_affine_space") {
        auto s = [&](long long v) { return Scalar::from_int(cfg.field, v); };
        std::vector<std::vector<Scalar>> pij = {{s(1), s(cfg.p12), s(cfg.p13)},
                                                {s(cfg.p12).inverse(), s(1), s(cfg.p23)},
                                                {s(cfg.p13).inverse(), s(cfg.p23).inverse(), s(1)}};
        b.plain = std::make_shared<PresentedAlgebra>(build_quantum_affine(cfg.field, pij));
    } else if (cfg.family == "structure_constants") {
        b.plain = std::make_shared<PresentedAlgebra>(build_structure_constants(cfg.field, cfg.structure));
    } else {
        throw parse_error("unknown family");
    }
    b.pi_deg = b.plain->pi_degree(rng);
    return b;
}

std::vector<TraceMap> build_traces(const RunConfig& cfg, const AlgebraBundle& bundle) {
    const PresentedAlgebra& a = bundle.alg();
    std::vector<TraceSpec> specs = cfg.traces;
    if (specs.empty()) {
        TraceSpec def;
        def.kind = a.is_free ? TraceKind::regular : TraceKind::standard;
        specs.push_back(def);
    }
    std::vector<TraceMap> out;
    for (const auto& s : specs) {
        switch (s.kind) {
            case TraceKind::regular:
                out.push_back(TraceMap::regular(a));
                break;
            case TraceKind::standard:
                out.push_back(TraceMap::standard(a));
                break;
            case TraceKind::reduced:
                out.push_back(TraceMap::reduced(a, bundle.pi_deg));
                break;
            case TraceKind::scaled: {
                TraceMap base = s.base == "reg"   ? TraceMap::regular(a)
                                : s.base == "std" ? TraceMap::standard(a)
                                                  : TraceMap::reduced(a, bundle.pi_deg);
                out.push_back(TraceMap::scaled(base, a.center.parse(s.factor)));
                break;
            }
        }
    }
    return out;
}

std::vector<Scalar> parse_point(const PresentedAlgebra& a, const std::string& text) {
    const auto& names = a.center.names();
    std::vector<std::optional<Scalar>> vals(names.size());
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        pos = comma == std::string::npos ? text.size() : comma + 1;
        std::size_t eq = item.find('=');
        if (eq == std::string::npos) throw parse_error("point items must look like NAME=VALUE");
        std::string name = item.substr(0, eq);
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        std::string val = item.substr(eq + 1);
        std::size_t idx = names.size();
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) idx = i;
        if (idx == names.size()) throw parse_error("unknown center variable '" + name + "'");
        try {
            vals[idx] = Scalar::from_mpq(a.center.field(), mpq_class(val));
        } catch (const std::invalid_argument&) {
            throw parse_error("bad value for '" + name + "': " + val);
        }
    }
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!vals[i]) throw parse_error("point misses center variable '" + names[i] + "'");
        out.push_back(*vals[i]);
    }
    return out;
}

std::vector<std::vector<Scalar>> grid_points(const RunConfig& cfg, const AlgebraBundle& bundle,
                                             std::uint64_t budget) {
    const PresentedAlgebra& a = bundle.alg();
    const FieldSpec& f = a.center.field();
    std::size_t nv = a.center.nvars();

    std::vector<std::vector<Scalar>> axis(nv);
    if (cfg.grid_full) {
        if (!f.is_prime_mode()) throw unsupported_error("full grids need a prime field");
        for (std::size_t i = 0; i < nv; ++i)
            for (std::uint64_t v = 0; v < f.p; ++v) axis[i].push_back(Scalar::from_residue(f, v));
    } else {
        for (std::size_t i = 0; i < nv; ++i) {
            auto it = cfg.grid_values.find(a.center.names()[i]);
            if (it == cfg.grid_values.end())
                throw parse_error("grid values missing for variable '" + a.center.names()[i] + "'");
            for (long long v : it->second) axis[i].push_back(Scalar::from_int(f, v));
        }
    }

    std::vector<std::vector<Scalar>> pts;
    if (bundle.family == "quantum_affine_space" && cfg.grid_full) {
        // enumerate the cone D^2 = B*C directly: (A, B, C, D) with the relation solved
        for (std::uint64_t av = 0; av < f.p; ++av)
            for (std::uint64_t bv = 0; bv < f.p; ++bv)
                for (std::uint64_t dv = 0; dv < f.p; ++dv) {
                    Scalar A = Scalar::from_residue(f, av), B = Scalar::from_residue(f, bv);
                    Scalar D = Scalar::from_residue(f, dv);
                    if (bv == 0) {
                        if (dv != 0) continue; // D^2 = 0 forces D = 0, C free
                        for (std::uint64_t cv = 0; cv < f.p; ++cv)
                            pts.push_back({A, B, Scalar::from_residue(f, cv), D});
                    } else {
                        pts.push_back({A, B, D * D / B, D});
                    }
                    if (pts.size() > budget) throw budget_error("grid exceeds the point budget");
                }
        std::sort(pts.begin(), pts.end(), [](const auto& x, const auto& y) {
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (x[i].residue() != y[i].residue()) return x[i].residue() < y[i].residue();
            }
            return false;
        });
        return pts;
    }

    std::uint64_t total = 1;
    for (const auto& ax : axis) {
        total *= ax.size();
        if (total > budget) throw budget_error("grid exceeds the point budget");
    }
    std::vector<std::size_t> idx(nv, 0);
    while (true) {
        std::vector<Scalar> pt;
        pt.reserve(nv);
        for (std::size_t i = 0; i < nv; ++i) pt.push_back(axis[i][idx[i]]);
        if (a.center.point_valid(pt)) pts.push_back(std::move(pt));
        std::size_t pos = nv;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < axis[pos].size()) break;
            idx[pos] = 0;
            if (pos == 0) return pts;
        }
    }
}

} // namespace pidisc
