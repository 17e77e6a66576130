// Batch entry point: validate semigroup files, run the exhaustive oracle with
// classification, verify the family constructors by sampling, and sweep the
// structural property checkers. All reports are JSON on stdout.
//
// Exit codes: 0 clean, 1 certificates found, 2 invalid semigroup or sigma,
// 3 parse error, 4 budget exceeded.

#include "semieq/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

namespace {

using namespace semieq;

constexpr const char* kVersion = "1.0.0";

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

struct Input {
    Semigroup s;
    std::vector<Involution> sigmas; // candidates from file or enumeration
    std::string source;
};

// A malformed field spec is a parse error under the exit-code contract.
Field parse_field(const std::string& spec) {
    try {
        return Field::parse(spec);
    } catch (const FieldError& e) {
        throw ParseError(e.what());
    }
}

Input resolve_input(const std::string& file, const std::string& catalog_name) {
    Input in;
    if (!catalog_name.empty()) {
        in.s = catalog(catalog_name);
        in.sigmas = involutive_automorphisms(in.s);
        in.source = "catalog:" + catalog_name;
    } else {
        SemigroupFile sf = load_semigroup_file(file);
        in.s = sf.s;
        in.sigmas = sf.sigmas.empty() ? involutive_automorphisms(sf.s) : sf.sigmas;
        in.source = file;
    }
    return in;
}

ordered_json base_report(const std::string& command, uint64_t seed) {
    ordered_json j;
    j["schema"] = kReportSchema;
    j["version"] = kVersion;
    j["command"] = command;
    j["seed"] = seed;
    return j;
}

int cmd_validate(const std::string& file) {
    ordered_json rep = base_report("validate", 0);
    try {
        SemigroupFile sf = load_semigroup_file(file);
        rep["input"] = file;
        rep["semigroup"] = semigroup_to_json(sf.s);
        ordered_json sig = ordered_json::array();
        for (const auto& s : sf.sigmas) sig.push_back(s.perm);
        rep["sigmas"] = sig;
        rep["valid"] = true;
        write_report(std::cout, rep);
        return 0;
    } catch (const SemigroupError& e) {
        rep["valid"] = false;
        rep["error"] = e.what();
        ordered_json ws = ordered_json::array();
        for (const auto& w : e.witnesses) ws.push_back(ordered_json::array({w[0], w[1], w[2]}));
        if (!ws.empty()) rep["witnesses"] = ws;
        write_report(std::cout, rep);
        return 2;
    }
}

int cmd_solve(const std::string& file, const std::string& catalog_name, const std::string& field_spec,
              int sigma_index, int shards, double budget, uint64_t seed, size_t max_listed) {
    Timer timer;
    Field field = parse_field(field_spec);
    if (!field.finite()) throw FieldError("the oracle needs a finite field");
    Input in = resolve_input(file, catalog_name);
    if (sigma_index < 0 || sigma_index >= static_cast<int>(in.sigmas.size()))
        throw SemigroupError("sigma index " + std::to_string(sigma_index) + " out of range (have " +
                             std::to_string(in.sigmas.size()) + ")");
    const Involution& sigma = in.sigmas[static_cast<size_t>(sigma_index)];

    ordered_json rep = base_report("solve", seed);
    rep["input"] = in.source;
    rep["semigroup"] = semigroup_to_json(in.s);
    rep["sigma"] = sigma.perm;
    rep["field"] = field.spec_string();
    rep["shards"] = shards;
    rep["budget"] = budget;

    Timer oracle_timer;
    OracleResult oracle = brute_force_solutions(in.s, sigma, field, shards, budget);
    double oracle_seconds = oracle_timer.seconds();

    Timer classify_timer;
    SpaceCache cache(in.s, sigma, field);
    CompletenessReport comp =
        completeness_report(in.s, sigma, field, cache, oracle.solutions, true);
    double classify_seconds = classify_timer.seconds();

    rep["systems_solved"] = oracle.systems_solved;
    rep["solution_count"] = comp.total;
    rep["histogram"] = comp.histogram.empty() ? ordered_json::object() : ordered_json(comp.histogram);
    rep["lifted_count"] = comp.lifted;
    rep["structure_failures"] = comp.structure_failures;

    ordered_json sols = ordered_json::array();
    if (comp.total <= max_listed) {
        for (size_t i = 0; i < oracle.solutions.size(); ++i) {
            SolutionTriple t = decode_solution(field, in.s.order(), oracle.solutions[i]);
            ordered_json js = triple_to_json(t);
            js["classification"] = classify_to_json(comp.results[i]);
            sols.push_back(std::move(js));
        }
        rep["solutions"] = sols;
    } else {
        rep["solutions_omitted"] = comp.total;
    }

    ordered_json certs = ordered_json::array();
    for (size_t i : comp.unclassified) {
        SolutionTriple t = decode_solution(field, in.s.order(), oracle.solutions[i]);
        ordered_json c;
        c["semigroup"] = semigroup_to_json(in.s);
        c["sigma"] = sigma.perm;
        c["field"] = field.spec_string();
        c["triple"] = triple_to_json(t);
        c["detail"] = comp.results[i].certificate;
        certs.push_back(std::move(c));
    }
    rep["certificates"] = certs;

    ordered_json tm;
    tm["oracle_seconds"] = oracle_seconds;
    tm["classify_seconds"] = classify_seconds;
    tm["total_seconds"] = timer.seconds();
    rep["timings"] = tm;
    write_report(std::cout, rep);
    return certs.empty() ? 0 : 1;
}

int cmd_families(const std::string& field_spec, int samples, uint64_t seed, bool verify,
                 size_t& failures_out) {
    Timer timer;
    Field field = parse_field(field_spec);
    ordered_json rep = base_report("families", seed);
    rep["field"] = field.spec_string();
    rep["samples_requested"] = samples;

    size_t failures = 0;
    ordered_json contexts = ordered_json::array();
    for (const auto& name : catalog_names()) {
        Semigroup s = catalog(name);
        auto sigmas = involutive_automorphisms(s);
        for (size_t si = 0; si < sigmas.size(); ++si) {
            const Involution& sigma = sigmas[si];
            SpaceCache cache(s, sigma, field);
            std::mt19937_64 rng(seed ^ (std::hash<std::string>{}(name) + si));
            ordered_json ctx;
            ctx["semigroup"] = name;
            ctx["sigma"] = sigma.perm;
            ordered_json fam = ordered_json::object();
            for (FamilyId id : all_families()) {
                std::string why;
                auto drawn = sample_family(id, s, sigma, cache, rng, samples, &why);
                ordered_json fj;
                fj["samples"] = drawn.size();
                if (drawn.empty()) {
                    fj["realizable"] = false;
                    fj["reason"] = why;
                } else {
                    fj["realizable"] = true;
                    size_t verified = 0;
                    std::string note;
                    for (const auto& smp : drawn) {
                        if (!verify || residual_main(s, sigma, smp.triple).zero) ++verified;
                        if (note.empty() && !smp.note.empty()) note = smp.note;
                    }
                    fj["verified"] = verified;
                    if (!note.empty()) fj["note"] = note;
                    failures += drawn.size() - verified;
                }
                fam[family_name(id)] = std::move(fj);
            }
            ctx["families"] = std::move(fam);
            contexts.push_back(std::move(ctx));
        }
    }
    rep["contexts"] = contexts;
    rep["construction_failures"] = failures;
    ordered_json tm;
    tm["total_seconds"] = timer.seconds();
    rep["timings"] = tm;
    write_report(std::cout, rep);
    failures_out = failures;
    return failures == 0 ? 0 : 1;
}

int cmd_lemmas(const std::string& file, const std::string& catalog_name,
               const std::string& field_spec, double budget, uint64_t seed) {
    Timer timer;
    Field field = parse_field(field_spec);
    if (!field.finite()) throw FieldError("the property sweep needs a finite field");
    ordered_json rep = base_report("lemmas", seed);
    rep["field"] = field.spec_string();

    std::vector<std::pair<std::string, Input>> inputs;
    if (!file.empty() || !catalog_name.empty()) {
        Input in = resolve_input(file, catalog_name);
        inputs.push_back({in.source, std::move(in)});
    } else {
        for (const auto& name : catalog_names())
            inputs.push_back({"catalog:" + name, resolve_input("", name)});
    }

    size_t certificates = 0;
    ordered_json sweeps = ordered_json::array();
    for (const auto& [source, in] : inputs) {
        // Character-span property: a sine-law solution for nonzero chi never
        // lies in the span of the multiplicative functions.
        ordered_json span_certs = ordered_json::array();
        for (const auto& cert : character_span_certificates(in.s, field)) {
            ordered_json c;
            c["chi"] = func_to_json(cert.chi);
            c["phi"] = func_to_json(cert.phi);
            span_certs.push_back(std::move(c));
        }
        certificates += span_certs.size();

        for (size_t si = 0; si < in.sigmas.size(); ++si) {
            const Involution& sigma = in.sigmas[si];
            OracleResult oracle = brute_force_solutions(in.s, sigma, field, 1, budget);
            size_t structure_failures = 0;
            ordered_json failures = ordered_json::array();
            for (const auto& coded : oracle.solutions) {
                SolutionTriple t = decode_solution(field, in.s.order(), coded);
                auto uncond = check_solution_structure(in.s, sigma, t);
                auto cond = check_conditional_lemmas(in.s, sigma, t);
                if (!uncond.all_conclusions_hold() || !cond.all_conclusions_hold()) {
                    ++structure_failures;
                    ordered_json fj;
                    fj["triple"] = triple_to_json(t);
                    fj["unconditional"] = lemma_report_to_json(uncond);
                    fj["conditional"] = lemma_report_to_json(cond);
                    failures.push_back(std::move(fj));
                }
            }
            certificates += structure_failures;
            ordered_json sj;
            sj["input"] = source;
            sj["sigma"] = sigma.perm;
            sj["solutions"] = oracle.solutions.size();
            sj["structure_failures"] = structure_failures;
            if (!failures.empty()) sj["failures"] = failures;
            if (si == 0) sj["span_certificates"] = span_certs;
            sweeps.push_back(std::move(sj));
        }
    }
    rep["sweeps"] = sweeps;
    rep["certificates"] = certificates;
    ordered_json tm;
    tm["total_seconds"] = timer.seconds();
    rep["timings"] = tm;
    write_report(std::cout, rep);
    return certificates == 0 ? 0 : 1;
}

int cmd_catalog(const std::string& name) {
    Semigroup s = catalog(name);
    ordered_json j;
    j["order"] = s.order();
    j["table"] = s.rows();
    ordered_json sig = ordered_json::array();
    for (const auto& sigma : involutive_automorphisms(s)) sig.push_back(sigma.perm);
    j["sigma"] = sig;
    std::cout << j.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-semigroup functional-equation laboratory"};
    app.require_subcommand(1);
    uint64_t seed = 0x5eed5eed;
    app.add_option("--seed", seed, "seed for all sampling");

    auto* validate = app.add_subcommand("validate", "validate a semigroup file");
    std::string v_file;
    validate->add_option("file", v_file, "semigroup JSON file")->required();

    auto* solve = app.add_subcommand("solve", "exhaustively solve and classify");
    std::string s_file, s_catalog, s_field = "gf:3";
    int s_sigma = 0, s_shards = 1;
    double s_budget = 1e8;
    size_t s_max_listed = 10000;
    solve->add_option("file", s_file, "semigroup JSON file");
    solve->add_option("--catalog", s_catalog, "catalog table name");
    solve->add_option("--field", s_field, "field spec: gf:p, gf:p^2");
    solve->add_option("--sigma-index", s_sigma, "index into the involution list");
    solve->add_option("--shards", s_shards, "parallel shard count");
    solve->add_option("--budget", s_budget, "max number of (g,h) systems");
    solve->add_option("--max-listed", s_max_listed, "omit solution list above this count");

    auto* families = app.add_subcommand("families", "sample and verify family constructors");
    std::string f_field = "gf:5^2";
    int f_samples = 10;
    bool f_verify = false;
    families->add_option("--field", f_field, "field spec");
    families->add_option("--samples", f_samples, "samples per realizable family");
    families->add_flag("--verify", f_verify, "re-verify every sampled triple");

    auto* lemmas = app.add_subcommand("lemmas", "structural property sweep over oracle solutions");
    std::string l_file, l_catalog, l_field = "gf:3";
    double l_budget = 1e8;
    lemmas->add_option("file", l_file, "semigroup JSON file");
    lemmas->add_option("--catalog", l_catalog, "catalog table name (default: whole catalog)");
    lemmas->add_option("--field", l_field, "field spec");
    lemmas->add_option("--budget", l_budget, "oracle budget");

    auto* cat = app.add_subcommand("catalog", "print a catalog table as a semigroup file");
    std::string c_name;
    cat->add_option("name", c_name, "table name")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) return cmd_validate(v_file);
        if (*solve)
            return cmd_solve(s_file, s_catalog, s_field, s_sigma, s_shards, s_budget, seed,
                             s_max_listed);
        if (*families) {
            size_t failures = 0;
            return cmd_families(f_field, f_samples, seed, f_verify, failures);
        }
        if (*lemmas) return cmd_lemmas(l_file, l_catalog, l_field, l_budget, seed);
        if (*cat) return cmd_catalog(c_name);
    } catch (const semieq::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const semieq::BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 4;
    } catch (const semieq::SemigroupError& e) {
        std::cerr << "semigroup error: " << e.what() << "\n";
        return 2;
    } catch (const semieq::FieldError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
