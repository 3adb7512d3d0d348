#include "cblock/cli.hpp"

#include "cblock/alcove.hpp"
#include "cblock/error.hpp"
#include "cblock/fusion.hpp"
#include "cblock/orbitmap.hpp"
#include "cblock/torus.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>

namespace cblock::cli {

using nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;
const std::vector<std::string> kCommands{"dim", "trace", "invdim", "fusion", "alcove", "torus", "verify"};
const std::vector<std::string> kSuites{"all", "casimir", "cardinality", "axioms", "triangle", "degeneracy", "sp"};

ordered_json weight_json(const Weight& w) { return ordered_json(w.coords); }

std::string weight_csv(const Weight& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::to_string(w[i]);
    return s;
}

ordered_json config_json(const JobConfig& cfg) {
    ordered_json c;
    c["command"] = cfg.command;
    c["type"] = cfg.type;
    c["rank"] = cfg.rank;
    c["sigma"] = cfg.sigma.empty() ? "none" : cfg.sigma;
    c["level"] = cfg.level;
    c["genus"] = cfg.genus;
    ordered_json ws = ordered_json::array();
    for (const auto& w : cfg.weights) ws.push_back(weight_json(w));
    c["weights"] = ws;
    c["output"] = cfg.output;
    c["tolerance"] = cfg.tolerance;
    if (cfg.command == "verify") c["suite"] = cfg.suite;
    return c;
}

struct Context {
    RootSystem rs;
    OrbitData od;
    bool twisted;  // a sigma was given
};

Context make_context(const JobConfig& cfg) {
    RootSystem rs = build_root_system(LieType::parse(cfg.type, cfg.rank));
    const std::string name = cfg.sigma.empty() ? "trivial" : cfg.sigma;
    OrbitData od = orbit_algebra(rs, DiagramAutomorphism::named(rs, name));
    return Context{rs, od, !cfg.sigma.empty()};
}

// ------------------------------------------------------------------ verify ---

struct Property {
    explicit Property(std::string n) : name(std::move(n)) {}
    std::string name;
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string note;
    bool skipped = false;
    void check(bool ok) {
        ++checked;
        if (!ok) ++failures;
    }
    bool pass() const { return skipped || failures == 0; }
};

std::vector<std::vector<std::size_t>> multisets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Property> suite_casimir(const Context& ctx, const JobConfig& cfg) {
    Property p{"casimir closed form equals character sum"};
    TorusMode mode = ctx.twisted ? TorusMode::twisted : TorusMode::untwisted;
    CharTable table = build_char_table(torus_group(ctx.od, cfg.level, mode));
    for (const auto& c : table.casimir) p.check(std::abs(c.direct - c.closed) < cfg.tolerance && c.closed > 0);
    return {p};
}

std::vector<Property> suite_cardinality(const Context& ctx, const JobConfig& cfg) {
    TorusMode mode = ctx.twisted ? TorusMode::twisted : TorusMode::untwisted;
    TorusSpec spec = torus_group(ctx.od, cfg.level, mode);
    Property count{"regular orbit count equals alcove size"};
    auto reps = regular_orbit_reps(spec, OrbitMethod::filter);
    count.check(reps.size() == spec.alcove.size());
    Property ident{"ident parametrization agrees with the filtered scan"};
    if (dual_lattice_is_coweight_lattice(spec)) {
        auto alt = regular_orbit_reps(spec, OrbitMethod::ident);
        ident.check(alt.size() == reps.size() &&
                    std::equal(alt.begin(), alt.end(), reps.begin(),
                               [](const TorusPoint& a, const TorusPoint& b) { return a.x == b.x; }));
    } else {
        ident.skipped = true;
        ident.note = "dual lattice differs from the coweight lattice";
    }
    Property order{"group order equals the number of enumerated torus points"};
    if (spec.rs.rank() <= 3) {
        order.check(static_cast<Int>(enumerate_torus(spec).size()) == spec.order);
    } else {
        order.skipped = true;
        order.note = "rank above 3";
    }
    return {count, ident, order};
}

std::vector<Property> suite_axioms(const Context& ctx, const JobConfig& cfg) {
    TorusMode mode = ctx.twisted ? TorusMode::twisted : TorusMode::untwisted;
    FusionRing ring(ctx.od, cfg.level, mode);
    FusionTable t = fusion_table(ring, cfg.tolerance);
    const std::size_t n = t.size();
    const std::size_t zero = t.index_of(Weight::zero(ctx.rs.rank()));
    Property unit{"unit: N(0, l, m) = [m = l*]"}, dual{"duality: N(x*) = N(x)"}, sym{"symmetry in the three slots"},
        nondeg{"non-degeneracy: N(l, l*) = 1"}, fact{"factorization N(x+y) = sum_l N(x+l) N(y+l*)"};
    for (std::size_t i = 0; i < n; ++i) {
        nondeg.check(ring.evaluate({0, {t.weights[i], t.weights[t.dual[i]]}}, cfg.tolerance).value == 1);
        for (std::size_t j = 0; j < n; ++j) {
            unit.check(t.at(zero, i, j) == (j == t.dual[i] ? 1 : 0));
            for (std::size_t k = 0; k < n; ++k) {
                Int v = t.at(i, j, k);
                dual.check(t.at(t.dual[i], t.dual[j], t.dual[k]) == v);
                sym.check(t.at(j, i, k) == v && t.at(i, k, j) == v && t.at(k, j, i) == v);
            }
        }
    }
    auto eval = [&](const std::vector<std::size_t>& ids) {
        BlockQuery q{0, {}};
        for (auto id : ids) q.weights.push_back(t.weights[id]);
        return ring.evaluate(q, cfg.tolerance).value;
    };
    for (std::size_t a = 1; a <= 2; ++a)
        for (std::size_t b = 1; b <= 2; ++b)
            for (const auto& x : multisets(n, a))
                for (const auto& y : multisets(n, b)) {
                    std::vector<std::size_t> xy = x;
                    xy.insert(xy.end(), y.begin(), y.end());
                    Int rhs = 0;
                    for (std::size_t l = 0; l < n; ++l) {
                        auto xl = x, yl = y;
                        xl.push_back(l);
                        yl.push_back(t.dual[l]);
                        rhs += eval(xl) * eval(yl);
                    }
                    fact.check(eval(xy) == rhs);
                }
    std::vector<Property> out{unit, dual, sym, nondeg, fact};
    if (ctx.twisted && !ctx.od.autom.is_trivial()) {
        FusionTable full = fusion_table(FusionRing(ctx.od, cfg.level, TorusMode::untwisted), cfg.tolerance);
        Property bound{"|trace| <= dimension"}, divis{"dim + (r-1) trace divisible by r"};
        const Int r = ctx.od.autom.order();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    Int tr = t.at(i, j, k);
                    Int dim = full.at(full.index_of(t.weights[i]), full.index_of(t.weights[j]),
                                      full.index_of(t.weights[k]));
                    bound.check(std::llabs(tr) <= dim);
                    divis.check((dim + (r - 1) * tr) % r == 0);
                }
        out.push_back(bound);
        out.push_back(divis);
    }
    return out;
}

std::vector<Property> suite_triangle(const Context& ctx, const JobConfig& cfg) {
    FusionRing ring(ctx.od, cfg.level, TorusMode::twisted);
    FusionTable t = fusion_table(ring, cfg.tolerance);
    Property p{"character sum = alternating sum = table entry"};
    const std::size_t n = t.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Int chi = ring.evaluate({0, {t.weights[i], t.weights[j], t.weights[k]}}, cfg.tolerance).value;
                Int kw = kac_watson_trace(ctx.od, cfg.level, t.weights[i], t.weights[j], t.weights[k]);
                p.check(chi == kw && kw == t.at(i, j, k));
            }
    return {p};
}

std::vector<Property> suite_degeneracy(const Context& ctx, const JobConfig& cfg) {
    OrbitData trivial = orbit_algebra(ctx.rs, DiagramAutomorphism::trivial(ctx.rs.rank()));
    FusionTable a = fusion_table(FusionRing(trivial, cfg.level, TorusMode::twisted), cfg.tolerance);
    FusionTable b = fusion_table(FusionRing(ctx.rs, cfg.level), cfg.tolerance);
    Property p{"trivial-sigma twisted table equals untwisted table"};
    p.check(a.weights == b.weights);
    for (std::size_t i = 0; i < std::min(a.coeffs.size(), b.coeffs.size()); ++i) p.check(a.coeffs[i] == b.coeffs[i]);
    return {p};
}

std::vector<Property> suite_sp(const Context& ctx, const JobConfig& cfg) {
    Property p{"sl(2n+1) flip trace equals sp(2n) dimension at level (l-1)/2"};
    const bool applies = ctx.rs.type().family == Family::A && ctx.rs.rank() % 2 == 0 &&
                         !ctx.od.autom.is_trivial() && cfg.level % 2 == 1;
    if (!applies) {
        p.skipped = true;
        p.note = "needs A_2n with sigma flip at odd level";
        return {p};
    }
    const auto ws = level_weights(ctx.rs, cfg.level, &ctx.od.autom).sigma_invariant;
    const int n = static_cast<int>(ctx.rs.rank() / 2);
    for (int genus = 0; genus <= 1; ++genus)
        for (const auto& tri : multisets(ws.size(), 3)) {
            BlockQuery q{genus, {ws[tri[0]], ws[tri[1]], ws[tri[2]]}};
            p.check(sl_odd_sp_correspondence(cfg.level, n, q, cfg.tolerance).equal);
        }
    return {p};
}

int run_verify(const JobConfig& cfg, std::ostream& out) {
    Context ctx = make_context(cfg);
    std::vector<std::pair<std::string, std::vector<Property>>> results;
    auto want = [&](const char* s) { return cfg.suite == "all" || cfg.suite == s; };
    if (want("casimir")) results.emplace_back("casimir", suite_casimir(ctx, cfg));
    if (want("cardinality")) results.emplace_back("cardinality", suite_cardinality(ctx, cfg));
    if (want("axioms")) results.emplace_back("axioms", suite_axioms(ctx, cfg));
    if (want("triangle")) results.emplace_back("triangle", suite_triangle(ctx, cfg));
    if (want("degeneracy")) results.emplace_back("degeneracy", suite_degeneracy(ctx, cfg));
    if (want("sp")) results.emplace_back("sp", suite_sp(ctx, cfg));

    bool all_pass = true;
    ordered_json props = ordered_json::array();
    for (const auto& [suite, list] : results)
        for (const auto& p : list) {
            all_pass = all_pass && p.pass();
            ordered_json j;
            j["suite"] = suite;
            j["property"] = p.name;
            j["status"] = p.skipped ? "skipped" : (p.pass() ? "pass" : "fail");
            j["checked"] = p.checked;
            j["failures"] = p.failures;
            if (!p.note.empty()) j["note"] = p.note;
            props.push_back(j);
        }
    if (cfg.output == "csv") {
        out << "suite,property,status,checked,failures\n";
        for (const auto& j : props)
            out << j["suite"].get<std::string>() << ",\"" << j["property"].get<std::string>() << "\","
                << j["status"].get<std::string>() << "," << j["checked"] << "," << j["failures"] << "\n";
    } else {
        ordered_json report;
        report["schema_version"] = kSchemaVersion;
        report["command"] = cfg.command;
        report["config"] = config_json(cfg);
        report["result"] = all_pass ? "pass" : "fail";
        report["properties"] = props;
        report["meta"] = {{"residual_max", 0.0}, {"elapsed_ms", 0}};
        out << report.dump(2) << "\n";
    }
    return all_pass ? kOk : kVerifyFailed;
}

// ------------------------------------------------------------------ others ---

void emit_scalar(const JobConfig& cfg, std::ostream& out, Int result, const BlockValue& meta, ordered_json extra,
                 double elapsed) {
    if (cfg.output == "csv") {
        out << "result,torus_order,orbit_count,residual_max\n"
            << result << "," << meta.torus_order << "," << meta.orbit_count << "," << meta.residual << "\n";
        return;
    }
    ordered_json report;
    report["schema_version"] = kSchemaVersion;
    report["command"] = cfg.command;
    report["config"] = config_json(cfg);
    report["result"] = result;
    ordered_json m;
    m["torus_order"] = meta.torus_order;
    m["orbit_count"] = meta.orbit_count;
    m["residual_max"] = meta.residual;
    m["elapsed_ms"] = cfg.timing ? elapsed : 0.0;
    for (auto it = extra.begin(); it != extra.end(); ++it) m[it.key()] = it.value();
    report["meta"] = m;
    out << report.dump(2) << "\n";
}

int run_job(const JobConfig& cfg, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    };
    if (cfg.command == "verify") return run_verify(cfg, out);

    Context ctx = make_context(cfg);
    const BlockQuery q{cfg.genus, cfg.weights};

    if (cfg.command == "dim" || cfg.command == "trace") {
        if (cfg.weights.empty()) throw InvalidInput(cfg.command + " needs at least one weight");
        if (cfg.command == "trace" && cfg.sigma.empty()) throw InvalidInput("trace needs --sigma");
        BlockValue v = cfg.command == "dim" ? verlinde_dim(ctx.rs, cfg.level, q, cfg.tolerance)
                                            : twisted_trace(ctx.od, cfg.level, q, cfg.tolerance);
        emit_scalar(cfg, out, v.value, v, ordered_json::object(), elapsed());
        return kOk;
    }
    if (cfg.command == "invdim") {
        if (cfg.sigma.empty()) throw InvalidInput("invdim needs --sigma");
        InvariantDim r = invariant_dim(ctx.od, cfg.level, q, cfg.tolerance);
        BlockValue meta = twisted_trace(ctx.od, cfg.level, q, cfg.tolerance);
        emit_scalar(cfg, out, r.value, meta, {{"dim", r.dim}, {"trace", r.trace}, {"order", r.order}}, elapsed());
        return kOk;
    }
    if (cfg.command == "fusion") {
        TorusMode mode = ctx.twisted ? TorusMode::twisted : TorusMode::untwisted;
        FusionRing ring(ctx.od, cfg.level, mode);
        FusionTable t = fusion_table(ring, cfg.tolerance);
        const std::size_t n = t.size();
        if (cfg.output == "csv") {
            out << "lambda,mu,nu_star,coefficient\n";
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k)
                        out << weight_csv(t.weights[i]) << "," << weight_csv(t.weights[j]) << ","
                            << weight_csv(t.weights[k]) << "," << t.at(i, j, k) << "\n";
            return kOk;
        }
        ordered_json entries = ordered_json::array();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    entries.push_back({{"lambda", weight_json(t.weights[i])},
                                       {"mu", weight_json(t.weights[j])},
                                       {"nu_star", weight_json(t.weights[k])},
                                       {"coefficient", t.at(i, j, k)}});
        ordered_json report;
        report["schema_version"] = kSchemaVersion;
        report["command"] = cfg.command;
        report["config"] = config_json(cfg);
        report["mode"] = to_string(mode);
        report["result"] = entries;
        report["meta"] = {{"torus_order", ring.table().spec.order},
                          {"orbit_count", ring.table().points.size()},
                          {"residual_max", 0.0},
                          {"elapsed_ms", cfg.timing ? elapsed() : 0.0}};
        out << report.dump(2) << "\n";
        return kOk;
    }
    if (cfg.command == "alcove") {
        LevelWeights lw = level_weights(ctx.rs, cfg.level, &ctx.od.autom);
        if (cfg.output == "csv") {
            out << "weight,sigma_invariant\n";
            for (const auto& w : lw.all)
                out << weight_csv(w) << "," << (ctx.od.autom.apply(w) == w ? 1 : 0) << "\n";
            return kOk;
        }
        ordered_json all = ordered_json::array(), inv = ordered_json::array();
        for (const auto& w : lw.all) all.push_back(weight_json(w));
        for (const auto& w : lw.sigma_invariant) inv.push_back(weight_json(w));
        ordered_json report;
        report["schema_version"] = kSchemaVersion;
        report["command"] = cfg.command;
        report["config"] = config_json(cfg);
        report["result"] = {{"all", all}, {"sigma_invariant", inv}};
        report["meta"] = {{"count", lw.all.size()},
                          {"sigma_invariant_count", lw.sigma_invariant.size()},
                          {"elapsed_ms", cfg.timing ? elapsed() : 0.0}};
        out << report.dump(2) << "\n";
        return kOk;
    }
    if (cfg.command == "torus") {
        TorusMode mode = ctx.twisted ? TorusMode::twisted : TorusMode::untwisted;
        CharTable table = build_char_table(torus_group(ctx.od, cfg.level, mode));
        const TorusSpec& s = table.spec;
        double worst = 0;
        for (const auto& c : table.casimir) worst = std::max(worst, std::abs(c.direct - c.closed));
        if (cfg.output == "csv") {
            out << "point,delta,casimir_direct,casimir_closed\n";
            for (std::size_t p = 0; p < table.points.size(); ++p) {
                std::string xs;
                for (std::size_t i = 0; i < table.points[p].x.coords.size(); ++i)
                    xs += (i ? " " : "") + table.points[p].x.coords[i].str();
                out << xs << "," << table.delta[p] << "," << table.casimir[p].direct << ","
                    << table.casimir[p].closed << "\n";
            }
            return kOk;
        }
        ordered_json pts = ordered_json::array();
        for (std::size_t p = 0; p < table.points.size(); ++p) {
            ordered_json x = ordered_json::array();
            for (const auto& c : table.points[p].x.coords) x.push_back(c.str());
            pts.push_back({{"x", x},
                           {"delta", table.delta[p]},
                           {"casimir_direct", table.casimir[p].direct},
                           {"casimir_closed", table.casimir[p].closed}});
        }
        ordered_json report;
        report["schema_version"] = kSchemaVersion;
        report["command"] = cfg.command;
        report["config"] = config_json(cfg);
        report["mode"] = to_string(mode);
        report["result"] = {{"root_system", s.rs.type().name()},
                           {"denom", s.denom},
                           {"order", s.order},
                           {"invariant_factors", s.invariant_factors},
                           {"points", pts}};
        report["meta"] = {{"torus_order", s.order},
                          {"orbit_count", table.points.size()},
                          {"residual_max", worst},
                          {"elapsed_ms", cfg.timing ? elapsed() : 0.0}};
        out << report.dump(2) << "\n";
        return kOk;
    }
    throw InvalidInput("unknown command '" + cfg.command + "'");
}

void configure(CLI::App& app, JobConfig& cfg) {
    app.add_option("command", cfg.command, "dim | trace | invdim | fusion | alcove | torus | verify")
        ->required()
        ->check(CLI::IsMember(kCommands));
    app.add_option("--type", cfg.type, "Cartan family A..G")->capture_default_str();
    app.add_option("--rank", cfg.rank, "rank")->capture_default_str();
    app.add_option("--sigma", cfg.sigma, "diagram automorphism: trivial | flip | d4rot");
    app.add_option("--level", cfg.level, "level")->capture_default_str();
    app.add_option("--genus", cfg.genus, "genus")->capture_default_str();
    app.add_option("--weights", cfg.weights_text, "weights, e.g. \"1,0;0,1\"");
    app.add_option("--output", cfg.output, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--tolerance", cfg.tolerance, "rounding tolerance")->capture_default_str();
    app.add_option("--suite", cfg.suite, "verify suite")->check(CLI::IsMember(kSuites))->capture_default_str();
    app.add_flag("--timing", cfg.timing, "report wall-clock time in elapsed_ms");
}

void finish(JobConfig& cfg) {
    if (cfg.level < 0) throw InvalidInput("level must be nonnegative");
    if (cfg.genus < 0) throw InvalidInput("genus must be nonnegative");
    if (!(cfg.tolerance > 0)) throw InvalidInput("tolerance must be positive");
    LieType::parse(cfg.type, cfg.rank);
    cfg.weights = parse_weights(cfg.weights_text, static_cast<std::size_t>(cfg.rank));
}

}  // namespace

std::vector<Weight> parse_weights(std::string_view text, std::size_t rank) {
    std::vector<Weight> out;
    if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(';', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view item = text.substr(pos, end - pos);
        Weight w;
        std::size_t p = 0;
        while (p <= item.size()) {
            std::size_t q = item.find(',', p);
            if (q == std::string_view::npos) q = item.size();
            std::string tok(item.substr(p, q - p));
            tok.erase(0, tok.find_first_not_of(" \t"));
            tok.erase(tok.find_last_not_of(" \t") + 1);
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (tok.empty() || used != tok.size()) throw InvalidInput("bad weight coordinate '" + tok + "'");
            w.coords.push_back(static_cast<Int>(v));
            p = q + 1;
        }
        if (w.size() != rank)
            throw InvalidInput("weight '" + std::string(item) + "' has " + std::to_string(w.size()) +
                               " coordinates, expected " + std::to_string(rank));
        out.push_back(std::move(w));
        pos = end + 1;
    }
    return out;
}

JobConfig parse_args(int argc, const char* const* argv) {
    JobConfig cfg;
    CLI::App app{"conformal block dimensions and diagram-automorphism traces"};
    configure(app, cfg);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        throw InvalidInput(e.what());
    }
    finish(cfg);
    return cfg;
}

int run(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        return run_job(cfg, out);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const Unsupported& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const RoundingError& e) {
        err << "rounding failure: " << e.what() << "\n";
        return kRounding;
    }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    JobConfig cfg;
    CLI::App app{"conformal block dimensions and diagram-automorphism traces"};
    configure(app, cfg);
    try {
        app.parse(argc, argv);
    } catch (const CLI::Success&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
    try {
        finish(cfg);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
    return run(cfg, out, err);
}

}  // namespace cblock::cli
