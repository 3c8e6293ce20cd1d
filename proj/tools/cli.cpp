#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ybh/cohomology.hpp"
#include "ybh/deformation.hpp"
#include "ybh/errors.hpp"
#include "ybh/fixtures.hpp"
#include "ybh/io.hpp"
#include "ybh/random.hpp"

namespace ybh::cli {

using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kInput = 2, kInternal = 3 };

struct Options {
    std::string field;
    std::uint64_t prime = 0;
    std::string out;
    std::size_t max_dim = 0;
    bool timing = false;
    std::uint64_t seed = 1;
    std::size_t trials = 20;
    int degree = 2;
    bool slow = false;
    bool list = false;
    bool bases = false;
    std::string path;
    std::string name;
};

class Stopwatch {
public:
    void lap(const std::string& label) {
        auto now = std::chrono::steady_clock::now();
        laps_[label] = std::chrono::duration<double, std::milli>(now - start_).count();
        start_ = now;
    }
    const json& laps() const { return laps_; }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
    json laps_ = json::object();
};

std::optional<FieldSpec> field_override(const Options& o) {
    if (o.field.empty()) {
        if (o.prime) return FieldSpec::prime(o.prime);
        return std::nullopt;
    }
    return parse_field(o.field, o.prime ? std::optional<std::uint64_t>(o.prime) : std::nullopt);
}

FieldSpec field_or(const Options& o, FieldSpec fallback) { return field_override(o).value_or(fallback); }

DimensionGuard guard_for(const Options& o) {
    auto g = DimensionGuard::from_env();
    if (o.max_dim) g.degree2 = g.degree3 = o.max_dim;
    return g;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

json check_json(const CheckResult& c) {
    json j{{"axiom", c.axiom}, {"passed", c.passed}};
    if (!c.passed) {
        j["witness"] = c.witness;
        j["output_index"] = c.output_index;
        j["lhs"] = c.lhs_value;
        j["rhs"] = c.rhs_value;
    }
    return j;
}

json sparse_json(const SparseVector& v) {
    json out = json::array();
    for (const auto& [i, x] : v) out.push_back(json::array({i, x.to_string()}));
    return out;
}

json input_json(const Options& o, const AlgebraDocument& doc) {
    return json{{"path", std::filesystem::path(o.path).filename().string()},
                {"digest", hex64(fnv1a64(dump_document(doc)))}};
}

void emit(const Options& o, json report, const Stopwatch& sw, std::ostream& out) {
    if (o.timing) report["timing_ms"] = sw.laps();
    std::string text = report.dump(2) + "\n";
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw InputError("cannot write " + o.out);
    f << text;
}

BraidedAlgebra braided_of(const AlgebraDocument& doc) {
    if (doc.delta) return braided_from_hopf(hopf_from_document(doc));
    return braided_from_document(doc);
}

int cmd_check(const Options& o, std::ostream& out) {
    Stopwatch sw;
    auto doc = load_document(o.path, field_override(o));
    json report{{"command", "check"}, {"input", input_json(o, doc)}, {"dim", doc.dim},
                {"field", json::parse(field_to_json(doc.field))}};
    json checks = json::array();
    bool passed = true;
    auto record = [&](const CheckResult& c) {
        passed = passed && c.passed;
        checks.push_back(check_json(c));
    };
    std::optional<BraidedAlgebra> b;
    if (doc.delta) {
        report["kind"] = "hopf";
        HopfAlgebra h(doc.mu.value_or(TensorMap(doc.field, doc.dim, 2, 1)), doc.eta.value_or(TensorMap(doc.field, doc.dim, 0, 1)),
                      *doc.delta, doc.epsilon.value_or(TensorMap(doc.field, doc.dim, 1, 0)),
                      doc.antipode.value_or(TensorMap(doc.field, doc.dim, 1, 1)), doc.basis);
        auto hc = check_hopf(h);
        for (const auto& v : hc.violations) record(v);
        if (hc.passed()) {
            record(CheckResult{true, "hopf", {}, 0, {}, {}});
            b.emplace(braided_from_hopf(h));
        }
        report["flags"] = {{"commutative", hc.commutative},
                           {"cocommutative", hc.cocommutative},
                           {"involutory", hc.involutory}};
    } else {
        report["kind"] = "braided";
        if (!doc.mu) throw InputError("document has no 'mu'");
        if (!doc.R) throw InputError("document has no 'R'");
        AssociativeAlgebra alg(*doc.mu, doc.eta, doc.basis);
        if (alg.unit()) record(check_unit(alg));
        try {
            b.emplace(std::move(alg), YangBaxterOperator(*doc.R));
        } catch (const ValidationError& e) {
            record(CheckResult{false, e.axiom(), e.witness(), 0, {}, {}});
        }
    }
    if (b)
        for (const auto& c : check_all(*b)) record(c);
    report["checks"] = checks;
    report["passed"] = passed;
    sw.lap("check");
    emit(o, report, sw, out);
    return passed ? kOk : kFailed;
}

int cmd_cohomology(const Options& o, std::ostream& out) {
    if (o.degree != 2 && o.degree != 3) throw InputError("--degree must be 2 or 3");
    Stopwatch sw;
    auto doc = load_document(o.path, field_override(o));
    auto b = braided_of(doc);
    auto guard = guard_for(o);
    guard.require(b.dim(), o.degree);
    ComplexSlice slice(b, guard);
    auto s = slice.summary(o.degree == 3, guard);
    sw.lap("cohomology");
    json report{{"command", "cohomology"},
                {"input", input_json(o, doc)},
                {"field", json::parse(field_to_json(b.field()))},
                {"dim", s.dim},
                {"c1_dim", s.c1_dim},
                {"c2_dim", s.c2_dim},
                {"c3_dim", s.c3_dim},
                {"rank_d1", s.rank_d1},
                {"rank_d2", s.rank_d2},
                {"dim_z2", s.dim_z2},
                {"dim_b2", s.dim_b2},
                {"h2", s.h2}};
    if (s.degree3) {
        const auto& t = *s.degree3;
        report["degree3"] = {{"c4_dim", t.c4_dim},         {"c4_shared_dim", t.c4_shared_dim},
                             {"rank_d3", t.rank_d3},       {"rank_d3_shared", t.rank_d3_shared},
                             {"dim_z3", t.dim_z3},         {"dim_z3_shared", t.dim_z3_shared},
                             {"h3", t.h3},                 {"h3_shared", t.h3_shared}};
    }
    if (o.bases) {
        json z = json::array(), bb = json::array();
        for (const auto& c : slice.cocycle_basis()) z.push_back(sparse_json(c.flatten()));
        for (const auto& c : slice.coboundary_basis()) bb.push_back(sparse_json(c.flatten()));
        report["z2_basis"] = z;
        report["b2_basis"] = bb;
    }
    emit(o, report, sw, out);
    return kOk;
}

int cmd_deform(const Options& o, std::ostream& out) {
    Stopwatch sw;
    std::ifstream in(o.path, std::ios::binary);
    if (!in) throw InputError("cannot open " + o.path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto doc = parse_document(text, field_override(o));
    json report{{"command", "deform"}, {"input", input_json(o, doc)}, {"field", json::parse(field_to_json(doc.field))}};
    if (text.find("\"phi_terms\"") != std::string::npos) {
        auto series = parse_series(text, field_override(o));
        auto check = verify_deformation(series);
        sw.lap("verify");
        report["mode"] = "verify";
        report["order"] = series.order();
        report["passed"] = check.passed;
        if (!check.passed) {
            report["failure"] = check_json(check.detail);
            report["failure"]["hbar_degree"] = check.degree;
        }
        emit(o, report, sw, out);
        return check.passed ? kOk : kFailed;
    }
    auto b = braided_of(doc);
    auto guard = guard_for(o);
    ComplexSlice slice(b, guard);
    const auto& basis = slice.cocycle_basis();
    auto ext = extend_to_quadratic(slice, basis);
    sw.lap("extend");
    const bool with_d3 = b.dim() <= guard.degree3;
    json items = json::array();
    bool consistent = true;
    std::size_t extended = 0;
    for (std::size_t t = 0; t < basis.size(); ++t) {
        json item{{"index", t}, {"extended", ext[t].extended}};
        if (ext[t].extended) {
            ++extended;
        } else {
            bool ok = certificate_valid(slice.D2(), ext[t]);
            consistent = consistent && ok;
            item["certificate_valid"] = ok;
        }
        if (with_d3) {
            bool closed = obstruction_is_cocycle(b, ext[t].bundle.to_cochain3());
            consistent = consistent && closed;
            item["obstruction_cocycle"] = closed;
        }
        items.push_back(item);
    }
    if (with_d3) sw.lap("obstruction");
    report["mode"] = "extend";
    report["dim_z2"] = basis.size();
    report["extended"] = extended;
    report["cocycles"] = items;
    report["passed"] = consistent;
    emit(o, report, sw, out);
    return consistent ? kOk : kFailed;
}

int cmd_construct(const Options& o, std::ostream& out) {
    if (o.list) {
        for (const auto* list : {&braided_fixtures(), &hopf_fixtures()})
            for (const auto& f : *list) out << f.name << "\t" << f.dim << "\t" << f.description << "\n";
        return kOk;
    }
    if (o.name.empty()) throw InputError("construct needs a fixture name (see --list)");
    auto k = field_or(o, FieldSpec::rational());
    json prov{{"construction", o.name}};
    bool hopf = std::any_of(hopf_fixtures().begin(), hopf_fixtures().end(),
                            [&](const FixtureInfo& f) { return f.name == o.name; });
    auto doc = hopf ? to_document(make_hopf_fixture(o.name, k), prov.dump())
                    : to_document(make_fixture(o.name, k), prov.dump());
    if (o.out.empty())
        out << dump_document(doc);
    else
        save_document(o.out, doc);
    return kOk;
}

// Randomized property suites over the small fixtures.
int cmd_selftest(const Options& o, std::ostream& out) {
    Stopwatch sw;
    auto k = field_or(o, FieldSpec::prime(101));
    auto guard = guard_for(o);
    Rng rng(o.seed);
    json suites = json::object();
    bool all = true;
    auto suite = [&](const std::string& name, std::size_t runs, std::size_t failures) {
        suites[name] = {{"runs", runs}, {"failures", failures}};
        all = all && failures == 0;
        sw.lap(name);
    };
    std::vector<BraidedAlgebra> small;
    std::size_t runs = 0, failures = 0;
    for (const auto& info : braided_fixtures()) {
        if (!fixture_defined(info, k)) continue;
        if (!o.slow && info.dim > guard.degree2) continue;
        auto b = make_fixture(info.name, k);
        for (const auto& c : check_all(b)) {
            ++runs;
            failures += !c.passed;
        }
        small.push_back(std::move(b));
    }
    suite("axioms", runs, failures);

    runs = failures = 0;
    for (const auto& b : small) {
        if (b.dim() > guard.degree2) continue;
        auto d1 = differential_matrix(b, 1, guard);
        auto d2 = differential_matrix(b, 2, guard);
        ++runs;
        auto prod = multiply(d2, d1);
        for (std::size_t j = 0; j < prod.cols(); ++j) failures += !prod.column(j).empty();
        for (std::size_t t = 0; t < o.trials; ++t) {
            ++runs;
            failures += !delta2(b, delta1(b, random_map(rng, k, b.dim(), 1, 1))).is_zero();
        }
    }
    suite("chain_1_2", runs, failures);

    runs = failures = 0;
    for (const auto& b : small) {
        if (b.dim() > guard.degree3) continue;
        Delta3 d3(b);
        for (std::size_t t = 0; t < o.trials; ++t) {
            ++runs;
            failures += !d3(delta2(b, random_cochain2(rng, k, b.dim()))).is_zero();
        }
    }
    suite("chain_2_3", runs, failures);

    runs = failures = 0;
    for (const auto& b : small) {
        if (b.dim() > guard.degree3) continue;
        for (const auto& c : cocycle_basis(b, guard)) {
            ++runs;
            failures += !obstruction_is_cocycle(b, c);
        }
    }
    suite("obstruction_cocycle", runs, failures);

    runs = failures = 0;
    for (const auto& b : small) {
        if (b.dim() > guard.degree2) continue;
        ComplexSlice slice(b, guard);
        for (std::size_t t = 0; t < o.trials; ++t) {
            // Even trials are random cocycles, odd trials random cochains, so both directions run.
            Cochain2 c = random_cochain2(rng, k, b.dim(), 0.05);
            if (t % 2 == 0) {
                c = Cochain2::zero(k, b.dim());
                for (const auto& z : slice.cocycle_basis()) {
                    auto a = random_scalar(rng, k);
                    c += Cochain2{a * z.phi, a * z.psi};
                }
            }
            bool in_kernel = slice.is_cocycle(c);
            ++runs;
            failures += in_kernel != verify_deformation(DeformationSeries::infinitesimal(b, c)).passed;
        }
    }
    suite("deformation_equivalence", runs, failures);

    json report{{"command", "selftest"},
                {"field", json::parse(field_to_json(k))},
                {"seed", o.seed},
                {"trials", o.trials},
                {"fixtures", small.size()},
                {"suites", suites},
                {"passed", all}};
    emit(o, report, sw, out);
    return all ? kOk : kFailed;
}

void common_flags(CLI::App* app, Options& o) {
    app->add_option("--field", o.field, "q, p (with --prime), or a prime");
    app->add_option("--prime", o.prime, "prime modulus for --field p");
    app->add_option("--out", o.out, "write the report here instead of stdout");
    app->add_option("--max-dim", o.max_dim, "dimension guard for degree 2 and 3 (overrides YBH_MAX_DIM)");
    app->add_flag("--timing", o.timing, "include wall-clock timings in the report");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Braided algebras, their Yang-Baxter Hochschild cohomology and deformations", "ybh"};
    app.require_subcommand(1);
    Options o;

    auto* check = app.add_subcommand("check", "verify the axioms of an algebra document");
    check->add_option("file", o.path, "algebra document")->required();
    common_flags(check, o);

    auto* cohom = app.add_subcommand("cohomology", "ranks of D1, D2 (and D3) and the cohomology dimensions");
    cohom->add_option("file", o.path, "algebra document")->required();
    cohom->add_option("--degree", o.degree, "2 or 3");
    cohom->add_flag("--bases", o.bases, "include cocycle and coboundary bases");
    common_flags(cohom, o);

    auto* deform = app.add_subcommand("deform", "verify a deformation series, or extend every 2-cocycle");
    deform->add_option("file", o.path, "series or algebra document")->required();
    common_flags(deform, o);

    auto* construct = app.add_subcommand("construct", "write a fixture as an algebra document");
    construct->add_option("name", o.name, "fixture name");
    construct->add_flag("--list", o.list, "list fixtures");
    common_flags(construct, o);

    auto* selftest = app.add_subcommand("selftest", "seeded randomized property suites");
    selftest->add_option("--seed", o.seed, "PRNG seed (mt19937_64)");
    selftest->add_option("--trials", o.trials, "random trials per fixture and suite");
    selftest->add_flag("--slow", o.slow, "include fixtures above the dimension guard where possible");
    common_flags(selftest, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInput;
    }

    try {
        if (*check) return cmd_check(o, out);
        if (*cohom) return cmd_cohomology(o, out);
        if (*deform) return cmd_deform(o, out);
        if (*construct) return cmd_construct(o, out);
        if (*selftest) return cmd_selftest(o, out);
    } catch (const ValidationError& e) {
        err << "validation failed: " << e.what() << "\n";
        return kFailed;
    } catch (const NoIntegralError& e) {
        err << e.what() << "\n";
        return kFailed;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInput;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kInput;
}

}  // namespace ybh::cli
