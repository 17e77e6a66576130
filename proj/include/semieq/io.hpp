#pragma once

// JSON input (semigroup files) and output (run reports). Reports use an
// ordered JSON document so equal runs produce byte-identical output; wall
// times live under the single top-level "timings" key so consumers can strip
// it before comparing.

#include "semieq/oracle.hpp"

#include <json.hpp>

#include <fstream>

namespace semieq {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "semieq-report/1";

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SemigroupFile {
    Semigroup s;
    std::vector<Involution> sigmas;      // listed in the file, validated
    std::vector<std::string> labels;     // optional element labels
};

// File format: {"order": n, "table": [[...]], "sigma": [...], "labels": [...]}
// where "sigma" may be one permutation or a list of them, both optional.
inline SemigroupFile load_semigroup_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    if (!j.is_object() || !j.contains("order") || !j.contains("table"))
        throw ParseError("'" + path + "' must be an object with \"order\" and \"table\"");
    SemigroupFile out;
    try {
        int order = j.at("order").get<int>();
        auto table = j.at("table").get<std::vector<std::vector<int>>>();
        if (static_cast<int>(table.size()) != order)
            throw SemigroupError("\"table\" has " + std::to_string(table.size()) +
                                 " rows, \"order\" says " + std::to_string(order));
        out.s = Semigroup::validate(table);
        if (j.contains("sigma")) {
            const auto& sig = j.at("sigma");
            std::vector<std::vector<int>> perms;
            if (sig.is_array() && !sig.empty() && sig.front().is_array())
                perms = sig.get<std::vector<std::vector<int>>>();
            else
                perms.push_back(sig.get<std::vector<int>>());
            for (auto& p : perms) out.sigmas.push_back(validate_involution(out.s, std::move(p)));
        }
        if (j.contains("labels")) {
            out.labels = j.at("labels").get<std::vector<std::string>>();
            if (static_cast<int>(out.labels.size()) != order)
                throw ParseError("\"labels\" length does not match \"order\"");
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad field types in '" + path + "': " + e.what());
    }
    return out;
}

inline ordered_json semigroup_to_json(const Semigroup& s) {
    ordered_json j;
    j["order"] = s.order();
    j["table"] = s.rows();
    return j;
}

inline ordered_json scalar_to_json(const Scalar& v) {
    switch (v.field->kind) {
    case FieldKind::PrimeField: return v.a;
    case FieldKind::QuadraticExtension: return ordered_json::array({v.a, v.b});
    default: return ordered_json::array({v.z.real(), v.z.imag()});
    }
}

inline ordered_json func_to_json(const Func& f) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : f.values) arr.push_back(scalar_to_json(v));
    return arr;
}

inline ordered_json params_to_json(const ParamSet& ps) {
    ordered_json j;
    ordered_json sc = ordered_json::object();
    for (const auto& [k, v] : ps.scalars) sc[k] = scalar_to_json(v);
    ordered_json fn = ordered_json::object();
    for (const auto& [k, v] : ps.funcs) fn[k] = func_to_json(v);
    j["scalars"] = sc;
    j["funcs"] = fn;
    return j;
}

inline ordered_json classify_to_json(const ClassifyResult& cr) {
    ordered_json j;
    j["classified"] = cr.classified;
    if (cr.classified) {
        j["family"] = family_name(cr.family);
        j["params"] = params_to_json(cr.params);
        if (!cr.note.empty()) j["note"] = cr.note;
        j["lifted"] = cr.lifted;
    } else {
        j["certificate"] = cr.certificate;
    }
    return j;
}

inline ordered_json triple_to_json(const SolutionTriple& t) {
    ordered_json j;
    j["f"] = func_to_json(t.f);
    j["g"] = func_to_json(t.g);
    j["h"] = func_to_json(t.h);
    return j;
}

inline ordered_json lemma_report_to_json(const LemmaReport& rep) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : rep.entries) {
        ordered_json j;
        j["id"] = e.id;
        j["hypotheses_held"] = e.hypotheses_held;
        if (e.hypotheses_held) j["conclusion_held"] = e.conclusion_held;
        if (!e.detail.empty()) j["detail"] = e.detail;
        arr.push_back(std::move(j));
    }
    return arr;
}

// Shared report skeleton: schema id, command, and the run context.
inline ordered_json report_header(const std::string& command, const Semigroup& s,
                                  const Involution& sigma, const Field& field) {
    ordered_json j;
    j["schema"] = kReportSchema;
    j["command"] = command;
    j["semigroup"] = semigroup_to_json(s);
    j["sigma"] = sigma.perm;
    j["field"] = field.spec_string();
    return j;
}

inline void write_report(std::ostream& os, const ordered_json& j) { os << j.dump(2) << "\n"; }

} // namespace semieq
