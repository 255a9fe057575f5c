#include "qtor/runner.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "qtor/polyid.hpp"
#include "qtor/suites.hpp"

namespace qtor {

namespace {

using nlohmann::json;

long long value_as_int(const Value& v, const std::string& key, SourcePos pos) {
    if (v.kind != Value::Kind::Int)
        throw SemanticError("parameter '" + key + "' must be an integer", pos);
    return v.i;
}

std::vector<int> value_as_int_list(const Value& v, const std::string& key, SourcePos pos) {
    switch (v.kind) {
        case Value::Kind::Int:
            return {static_cast<int>(v.i)};
        case Value::Kind::Range: {
            std::vector<int> out;
            for (long long x = v.lo; x <= v.hi; ++x) out.push_back(static_cast<int>(x));
            return out;
        }
        case Value::Kind::List: {
            std::vector<int> out;
            for (const auto& e : v.list) {
                if (e.kind != Value::Kind::Int)
                    throw SemanticError("list entries of '" + key + "' must be integers", pos);
                out.push_back(static_cast<int>(e.i));
            }
            return out;
        }
        default:
            throw SemanticError("parameter '" + key + "' must be an integer, range or list",
                                pos);
    }
}

int require_index(long long v, const std::string& key, SourcePos pos) {
    if (v != 0 && v != 1)
        throw SemanticError("index " + key + "=" + std::to_string(v) + " out of {0,1}", pos);
    return static_cast<int>(v);
}

struct StmtView {
    const CheckStmt& stmt;
    const RunOptions& opts;

    std::optional<long long> get_int(const std::string& key) const {
        const Value* v = stmt.find(key);
        if (!v) return std::nullopt;
        return value_as_int(*v, key, stmt.pos);
    }
    std::optional<std::string> get_ident(const std::string& key) const {
        const Value* v = stmt.find(key);
        if (!v) return std::nullopt;
        if (v->kind != Value::Kind::Ident)
            throw SemanticError("parameter '" + key + "' must be an identifier", stmt.pos);
        return v->ident;
    }
};

RelationParams build_params(const CheckStmt& stmt, const RunOptions& opts) {
    RelationParams p;
    if (opts.window) p.window = *opts.window;
    if (opts.maxdeg) p.maxdeg = *opts.maxdeg;
    if (opts.modes) p.modes = *opts.modes;
    if (opts.convention) p.config = *opts.convention;

    for (const auto& [key, v] : stmt.args) {
        if (key == "i") p.i = require_index(value_as_int(v, key, stmt.pos), "i", stmt.pos);
        else if (key == "j") p.j = require_index(value_as_int(v, key, stmt.pos), "j", stmt.pos);
        else if (key == "sign") {
            long long s = value_as_int(v, key, stmt.pos);
            if (s != 1 && s != -1)
                throw SemanticError("sign must be 1 or -1", stmt.pos);
            p.sign = static_cast<int>(s);
        } else if (key == "m") p.modes_m = value_as_int_list(v, key, stmt.pos);
        else if (key == "n") p.modes_n = value_as_int_list(v, key, stmt.pos);
        else if (key == "modes") p.modes = static_cast<int>(value_as_int(v, key, stmt.pos));
        else if (key == "window") p.window = static_cast<int>(value_as_int(v, key, stmt.pos));
        else if (key == "deg") p.maxdeg = static_cast<int>(value_as_int(v, key, stmt.pos));
        else if (key == "lat") p.latrange = static_cast<int>(value_as_int(v, key, stmt.pos));
        else if (key == "order") p.order = static_cast<int>(value_as_int(v, key, stmt.pos));
        else if (key == "budget") p.budget = static_cast<int>(value_as_int(v, key, stmt.pos));
        else if (key == "perturb") p.perturb = static_cast<int>(value_as_int(v, key, stmt.pos));
        else if (key == "states") {
            if (v.kind != Value::Kind::Basis)
                throw SemanticError("states must be basis(deg<=N[,lat<=K])", stmt.pos);
            p.maxdeg = v.basis_deg;
            p.latrange = v.basis_lat;
        } else if (key == "uv") {
            if (v.kind != Value::Kind::Ident ||
                (v.ident != "asWritten" && v.ident != "negated"))
                throw SemanticError("uv must be asWritten or negated", stmt.pos);
            p.config.uv = v.ident == "negated" ? UvSign::Negated : UvSign::AsWritten;
        } else if (key == "flip") {
            if (v.kind != Value::Kind::Ident || (v.ident != "on" && v.ident != "off"))
                throw SemanticError("flip must be on or off", stmt.pos);
            p.config.flip_zero_node = v.ident == "on";
        } else if (key == "convention") {
            if (v.kind != Value::Kind::Ident || v.ident != "all")
                throw SemanticError("convention must be 'all' (or use uv=/flip=)", stmt.pos);
            p.all_configs = true;
        } else {
            throw SemanticError("unknown parameter '" + key + "' for check " + stmt.name,
                                stmt.pos);
        }
    }

    // odd-mode sanity for the h relations
    for (int m : p.modes_m)
        if ((stmt.name == "R1" || stmt.name == "R2" || stmt.name == "R3" ||
             stmt.name == "R4") && m % 2 == 0)
            throw SemanticError("h modes must be odd, got " + std::to_string(m), stmt.pos);
    return p;
}

std::function<Report()> make_job(const CheckStmt& stmt, const RunOptions& opts) {
    StmtView sv{stmt, opts};
    if (auto rel = relation_from_string(stmt.name)) {
        RelationParams p = build_params(stmt, opts);
        RelationId id = *rel;
        if ((id == RelationId::R2 || id == RelationId::R4 || id == RelationId::S2 ||
             id == RelationId::S3 || id == RelationId::GS12) &&
            !stmt.find("j"))
            p.j = 1 - p.i;
        if ((id == RelationId::GS14 || id == RelationId::GS15) && !stmt.find("j"))
            p.j = p.i;
        return [id, p] { return verify_relation(id, p); };
    }
    if (stmt.name == "heisenberg") {
        int modes = static_cast<int>(sv.get_int("modes").value_or(opts.modes.value_or(7)));
        int deg = static_cast<int>(sv.get_int("deg").value_or(opts.maxdeg.value_or(8)));
        return [=] { return suite_heisenberg(modes, deg); };
    }
    if (stmt.name == "exchange") {
        int comps = static_cast<int>(
            sv.get_int("comps").value_or(sv.get_int("window").value_or(opts.window.value_or(6))));
        int deg = static_cast<int>(sv.get_int("deg").value_or(opts.maxdeg.value_or(6)));
        return [=] { return suite_exchange(comps, deg); };
    }
    if (stmt.name == "prop1") {
        int window = static_cast<int>(sv.get_int("window").value_or(opts.window.value_or(6)));
        int deg = static_cast<int>(sv.get_int("deg").value_or(opts.maxdeg.value_or(4)));
        int lat = static_cast<int>(sv.get_int("lat").value_or(1));
        return [=] { return suite_prop1(window, deg, lat); };
    }
    if (stmt.name == "lemma3") {
        int window = static_cast<int>(sv.get_int("window").value_or(opts.window.value_or(6)));
        int deg = static_cast<int>(sv.get_int("deg").value_or(opts.maxdeg.value_or(2)));
        return [=] { return suite_lemma3(window, deg); };
    }
    if (stmt.name == "lemma4") {
        int order = static_cast<int>(sv.get_int("order").value_or(40));
        int pairs = static_cast<int>(sv.get_int("pairs").value_or(20));
        unsigned long long seed = static_cast<unsigned long long>(
            sv.get_int("seed").value_or(static_cast<long long>(opts.seed)));
        return [=] { return suite_lemma4(order, pairs, seed); };
    }
    if (stmt.name == "prop5") {
        int window = static_cast<int>(sv.get_int("window").value_or(opts.window.value_or(4)));
        int deg = static_cast<int>(sv.get_int("deg").value_or(opts.maxdeg.value_or(3)));
        int lat = static_cast<int>(sv.get_int("lat").value_or(1));
        return [=] { return suite_prop5(window, deg, lat); };
    }
    if (stmt.name == "lemma7") {
        return [] { return lemma7_check(); };
    }
    if (stmt.name == "quartic_bracket") {
        return [] { return quartic_bracket_identity(); };
    }
    if (stmt.name == "serre_quartic") {
        int budget = static_cast<int>(sv.get_int("budget").value_or(3));
        int sign = static_cast<int>(sv.get_int("sign").value_or(1));
        if (sign != 1 && sign != -1) throw SemanticError("sign must be 1 or -1", stmt.pos);
        return [=] { return serre_quartic_smoke(sign, budget); };
    }
    if (stmt.name == "selftest") {
        int perturb = static_cast<int>(sv.get_int("perturb").value_or(1));
        return [=] { return suite_selftest(perturb); };
    }
    throw SemanticError("unknown check '" + stmt.name + "'", stmt.pos);
}

}  // namespace

std::vector<std::pair<std::string, std::string>> check_catalogue() {
    auto out = relation_catalogue();
    out.emplace_back("heisenberg", "Heisenberg commutation on all basis states");
    out.emplace_back("exchange", "E+/E- exchange identity, windowed");
    out.emplace_back("prop1", "contraction factorization of X-word products");
    out.emplace_back("lemma3", "limit specializations onto u/v words");
    out.emplace_back("lemma4", "partial-fraction expansion identity");
    out.emplace_back("prop5", "[X_ij, X_ji] delta-function commutator windows");
    out.emplace_back("lemma7", "combinatorial quartic identity, full expansion");
    out.emplace_back("quartic_bracket", "rational reduction of the quartic kernel sum");
    out.emplace_back("serre_quartic", "direct quartic Serre check on the vacuum");
    out.emplace_back("selftest", "deliberately perturbed check; must fail");
    return out;
}

RunReport run_script(const Script& script, const RunOptions& opts) {
    // validate everything up front so semantic errors beat slow checks
    std::vector<std::function<Report()>> jobs;
    jobs.reserve(script.checks.size());
    for (const auto& stmt : script.checks) jobs.push_back(make_job(stmt, opts));

    RunReport out;
    out.checks.resize(jobs.size());
    auto t0 = std::chrono::steady_clock::now();

    auto run_one = [&](std::size_t idx) {
        auto s0 = std::chrono::steady_clock::now();
        Report r = jobs[idx]();
        auto s1 = std::chrono::steady_clock::now();
        r.millis = std::chrono::duration<double, std::milli>(s1 - s0).count();
        out.checks[idx] = std::move(r);
    };

    int jobs_n = std::max(1, opts.jobs);
    if (jobs_n == 1 || jobs.size() <= 1) {
        for (std::size_t k = 0; k < jobs.size(); ++k) run_one(k);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        int nthreads = std::min<std::size_t>(jobs_n, jobs.size());
        for (int t = 0; t < nthreads; ++t) {
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t k = next.fetch_add(1);
                    if (k >= jobs.size()) return;
                    run_one(k);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    auto t1 = std::chrono::steady_clock::now();
    out.total_millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
    for (const auto& r : out.checks)
        if (!r.pass()) out.pass = false;
    return out;
}

std::string report_to_json(const RunReport& r, bool timing) {
    json j;
    j["version"] = r.version;
    j["pass"] = r.pass;
    json checks = json::array();
    for (const auto& c : r.checks) {
        json jc;
        jc["id"] = c.id;
        jc["params"] = c.params;
        jc["cells"] = c.cells;
        json ms = json::array();
        for (const auto& m : c.mismatches)
            ms.push_back({{"location", m.location}, {"lhs", m.lhs}, {"rhs", m.rhs}});
        jc["mismatches"] = ms;
        jc["pass"] = c.pass();
        if (!c.notes.empty()) jc["notes"] = c.notes;
        if (timing) jc["millis"] = c.millis;
        checks.push_back(jc);
    }
    j["checks"] = checks;
    if (timing) j["millis"] = r.total_millis;
    return j.dump(2) + "\n";
}

std::string report_to_text(const RunReport& r, bool timing) {
    std::ostringstream os;
    for (const auto& c : r.checks) {
        os << (c.pass() ? "[PASS] " : "[FAIL] ") << c.id << "  (" << c.params << ")  cells="
           << c.cells;
        if (timing) os << "  " << static_cast<long long>(c.millis) << "ms";
        os << "\n";
        if (!c.notes.empty()) os << "       note: " << c.notes << "\n";
        for (const auto& m : c.mismatches) {
            os << "       mismatch at " << m.location << "\n";
            os << "         lhs = " << m.lhs << "\n";
            os << "         rhs = " << m.rhs << "\n";
        }
    }
    os << (r.pass ? "OVERALL PASS" : "OVERALL FAIL") << " (" << r.checks.size()
       << " checks)";
    if (timing) os << "  total " << static_cast<long long>(r.total_millis) << "ms";
    os << "\n";
    return os.str();
}

}  // namespace qtor
