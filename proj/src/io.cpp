#include "novikov/io.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace novikov::io {

json field_to_json(const FieldDescriptor& f) {
    if (f.is_rationals()) return json("Q");
    return json{{"GFp", f.modulus()}};
}

FieldDescriptor field_from_json(const json& j, const std::string& where) {
    if (j.is_string()) {
        if (j.get<std::string>() == "Q") return FieldDescriptor::rationals();
        throw input_error(where + ": unknown field '" + j.get<std::string>() +
                          "' (expected \"Q\" or {\"GFp\": p})");
    }
    if (j.is_object() && j.contains("GFp") && j["GFp"].is_number_unsigned())
        return FieldDescriptor::gf(j["GFp"].get<std::uint32_t>());
    throw input_error(where + ": malformed field descriptor (expected \"Q\" or {\"GFp\": p})");
}

json vec_to_json(const Vec& v) {
    json out = json::array();
    for (const Scalar& s : v) out.push_back(s.to_string());
    return out;
}

Vec vec_from_json(const FieldDescriptor& f, std::size_t n, const json& j,
                  const std::string& where) {
    if (!j.is_array() || j.size() != n)
        throw input_error(where + ": expected an array of " + std::to_string(n) + " scalars");
    Vec v;
    v.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const json& e = j[k];
        if (!e.is_string())
            throw input_error(where + "[" + std::to_string(k) +
                              "]: scalars must be strings, not numbers");
        try {
            v.push_back(Scalar::parse(f, e.get<std::string>()));
        } catch (const input_error& err) {
            throw input_error(where + "[" + std::to_string(k) + "]: " + err.what());
        }
    }
    return v;
}

json subspace_to_json(const Subspace& s) {
    json basis = json::array();
    for (std::size_t r = 0; r < s.dim(); ++r) basis.push_back(vec_to_json(s.basis_row(r)));
    return json{{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", basis}};
}

Subspace subspace_from_json(const FieldDescriptor& f, const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("basis"))
        throw input_error(where + ": expected {ambient_dim, dim, basis}");
    const std::size_t n = j["ambient_dim"].get<std::size_t>();
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < j["basis"].size(); ++r)
        rows.push_back(vec_from_json(f, n, j["basis"][r],
                                     where + ".basis[" + std::to_string(r) + "]"));
    return Subspace::span(f, n, rows);
}

json algebra_to_json(const Algebra& a) {
    json out;
    out["format_version"] = kFormatVersion;
    out["field"] = field_to_json(a.field());
    out["dim"] = a.dim();
    if (!a.basis_names().empty()) out["basis_names"] = a.basis_names();
    json table = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(vec_to_json(a.table(i, j)));
        table.push_back(std::move(row));
    }
    out["table"] = std::move(table);
    return out;
}

Algebra algebra_from_json(const json& j) {
    if (!j.is_object()) throw input_error("algebra: expected a JSON object");
    if (!j.contains("format_version") || !j["format_version"].is_number() ||
        j["format_version"].get<int>() != kFormatVersion)
        throw input_error("algebra.format_version: expected " + std::to_string(kFormatVersion));
    if (!j.contains("field")) throw input_error("algebra.field: missing");
    FieldDescriptor f = field_from_json(j["field"], "algebra.field");
    if (!j.contains("dim") || !j["dim"].is_number_unsigned())
        throw input_error("algebra.dim: expected a nonnegative integer");
    const std::size_t n = j["dim"].get<std::size_t>();
    if (!j.contains("table") || !j["table"].is_array() || j["table"].size() != n)
        throw input_error("algebra.table: expected " + std::to_string(n) + " rows");
    std::vector<Vec> table;
    table.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = j["table"][i];
        if (!row.is_array() || row.size() != n)
            throw input_error("algebra.table[" + std::to_string(i) + "]: expected " +
                              std::to_string(n) + " entries");
        for (std::size_t k = 0; k < n; ++k)
            table.push_back(vec_from_json(f, n, row[k],
                                          "algebra.table[" + std::to_string(i) + "][" +
                                              std::to_string(k) + "]"));
    }
    std::vector<std::string> names;
    if (j.contains("basis_names")) {
        if (!j["basis_names"].is_array() || j["basis_names"].size() != n)
            throw input_error("algebra.basis_names: expected " + std::to_string(n) + " strings");
        for (const auto& s : j["basis_names"]) names.push_back(s.get<std::string>());
    }
    return Algebra(f, n, std::move(table), std::move(names));
}

AlgebraFile parse_algebra_file(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("JSON parse error: ") + e.what());
    }
    AlgebraFile out{algebra_from_json(j), json(), {}};
    if (j.contains("meta")) out.meta = j["meta"];
    if (j.contains("subspaces")) {
        if (!j["subspaces"].is_object()) throw input_error("subspaces: expected an object");
        for (const auto& [name, body] : j["subspaces"].items())
            out.subspaces.emplace_back(
                name, subspace_from_json(out.algebra.field(), body, "subspaces." + name));
    }
    return out;
}

AlgebraFile load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_algebra_file(buf.str());
    } catch (const input_error& e) {
        throw input_error(path + ": " + e.what());
    }
}

std::string serialize_algebra_file(const AlgebraFile& f, bool pretty) {
    json j = algebra_to_json(f.algebra);
    if (!f.meta.is_null()) j["meta"] = f.meta;
    if (!f.subspaces.empty()) {
        json subs;
        for (const auto& [name, s] : f.subspaces) subs[name] = subspace_to_json(s);
        j["subspaces"] = std::move(subs);
    }
    return pretty ? j.dump(2) + "\n" : j.dump();
}

std::string canonical_algebra_string(const Algebra& a) {
    return algebra_to_json(a).dump();
}

std::string digest_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json identity_report_to_json(const IdentityReport& r) {
    json out{{"identity", identity_name(r.id)}, {"holds", r.holds}};
    if (r.witness) {
        out["witness"] = json{{"indices", r.witness->indices},
                              {"expression", r.witness->expression},
                              {"defect", vec_to_json(r.witness->defect)}};
    }
    return out;
}

json decision_to_json(const Decision& d) {
    json out{{"status", decision_status_name(d.status)},
             {"method", decision_method_name(d.method)}};
    if (!d.certificate.empty()) out["certificate"] = d.certificate;
    if (d.witness) {
        json ids = json::array();
        for (const Subspace& s : d.witness->ideals) ids.push_back(subspace_to_json(s));
        out["witness"] = json{{"kind", d.witness->kind}, {"ideals", ids}};
    }
    return out;
}

json verdict_to_json(const Verdict& v) {
    json out{{"claim", claim_name(v.claim)},
             {"status", verdict_status_name(v.status)},
             {"context", v.context},
             {"instances_exercised", v.instances_exercised}};
    if (!v.instance.subspaces.empty() || !v.instance.vectors.empty()) {
        json inst;
        json subs = json::array();
        for (const auto& [name, s] : v.instance.subspaces)
            subs.push_back(json{{"name", name}, {"space", subspace_to_json(s)}});
        json vecs = json::array();
        for (const auto& [name, w] : v.instance.vectors)
            vecs.push_back(json{{"name", name}, {"vector", vec_to_json(w)}});
        inst["subspaces"] = std::move(subs);
        inst["vectors"] = std::move(vecs);
        out["instance"] = std::move(inst);
    }
    if (v.witness) {
        json w{{"description", v.witness->description}};
        json subs = json::array();
        for (const auto& [name, s] : v.witness->subspaces)
            subs.push_back(json{{"name", name}, {"space", subspace_to_json(s)}});
        json vecs = json::array();
        for (const auto& [name, x] : v.witness->vectors)
            vecs.push_back(json{{"name", name}, {"vector", vec_to_json(x)}});
        w["subspaces"] = std::move(subs);
        w["vectors"] = std::move(vecs);
        out["witness"] = std::move(w);
    }
    return out;
}

json suite_report_to_json(const SuiteReport& r) {
    json stats;
    for (const auto& [claim, st] : r.stats)
        stats[claim_name(claim)] = json{{"holds", st.holds},
                                        {"fails", st.fails},
                                        {"vacuous", st.vacuous},
                                        {"undetermined", st.undetermined},
                                        {"non_vacuous", st.non_vacuous}};
    json failures = json::array();
    for (const auto& [name, v] : r.failures)
        failures.push_back(json{{"algebra", name}, {"verdict", verdict_to_json(v)}});
    return json{{"algebras", r.algebras},
                {"novikov_algebras", r.novikov_algebras},
                {"claims", std::move(stats)},
                {"failures", std::move(failures)}};
}

json baer_chain_to_json(const BaerChain& c) {
    json stages = json::array();
    for (const IdealHandle& h : c.stages) stages.push_back(subspace_to_json(h.space));
    return json{{"stages", std::move(stages)},
                {"radical", subspace_to_json(c.radical().space)},
                {"certified", c.certified}};
}

json witness_identity(const Algebra& a, const IdentityReport& failed) {
    if (failed.holds || !failed.witness)
        throw error("witness_identity needs a failed identity report");
    return json{{"kind", "identity_defect"},
                {"algebra", algebra_to_json(a)},
                {"identity", identity_name(failed.id)},
                {"indices", failed.witness->indices},
                {"expression", failed.witness->expression},
                {"defect", vec_to_json(failed.witness->defect)}};
}

json witness_decision(const Algebra& a, const Decision& d) {
    if (!d.witness) throw error("witness_decision needs a No decision with witness");
    json ids = json::array();
    for (const Subspace& s : d.witness->ideals) ids.push_back(subspace_to_json(s));
    return json{{"kind", d.witness->kind}, {"algebra", algebra_to_json(a)}, {"ideals", ids}};
}

json witness_verdict(const Algebra& a, const Verdict& failed) {
    if (failed.status != VerdictStatus::Fails)
        throw error("witness_verdict needs a Fails verdict");
    json inst;
    json subs = json::array();
    for (const auto& [name, s] : failed.instance.subspaces)
        subs.push_back(json{{"name", name}, {"space", subspace_to_json(s)}});
    json vecs = json::array();
    for (const auto& [name, x] : failed.instance.vectors)
        vecs.push_back(json{{"name", name}, {"vector", vec_to_json(x)}});
    inst["subspaces"] = std::move(subs);
    inst["vectors"] = std::move(vecs);
    return json{{"kind", "claim_failure"},
                {"algebra", algebra_to_json(a)},
                {"claim", claim_name(failed.claim)},
                {"instance", std::move(inst)},
                {"description", failed.witness ? failed.witness->description : ""}};
}

json witness_radical_chain(const Algebra& a, const BaerChain& chain) {
    json stages = json::array();
    for (const IdealHandle& h : chain.stages) stages.push_back(subspace_to_json(h.space));
    return json{{"kind", "radical_chain"},
                {"algebra", algebra_to_json(a)},
                {"stages", std::move(stages)}};
}

namespace {

ClaimId claim_from_name(const std::string& name) {
    for (ClaimId c : {ClaimId::L1, ClaimId::L2, ClaimId::L3, ClaimId::T1, ClaimId::L4,
                      ClaimId::L5a, ClaimId::L5b, ClaimId::L5c, ClaimId::L5d, ClaimId::L5e,
                      ClaimId::L6, ClaimId::L7, ClaimId::T2, ClaimId::T3, ClaimId::T4,
                      ClaimId::L8, ClaimId::C2, ClaimId::C3, ClaimId::C1,
                      ClaimId::NovikovCommAssoc})
        if (claim_name(c) == name) return c;
    throw input_error("unknown claim id '" + name + "'");
}

IdentityId identity_from_name(const std::string& name) {
    for (IdentityId i : {IdentityId::RightSym1, IdentityId::RightComm2, IdentityId::Derived3,
                         IdentityId::Lemma1Eq6, IdentityId::Associativity,
                         IdentityId::Commutativity})
        if (identity_name(i) == name) return i;
    throw input_error("unknown identity id '" + name + "'");
}

// Re-evaluates the defect of an identity at a stored witness tuple.
Vec identity_defect_at(const Algebra& a, IdentityId id, const std::vector<std::size_t>& idx,
                       const std::string& expression) {
    const std::size_t n = a.dim();
    auto unit = [&](std::size_t i) { return unit_vec(a.field(), n, i); };
    switch (id) {
        case IdentityId::RightSym1:
            return vec_sub(a.associator_basis(idx.at(0), idx.at(1), idx.at(2)),
                           a.associator_basis(idx.at(1), idx.at(0), idx.at(2)));
        case IdentityId::RightComm2:
            return vec_sub(a.mul_basis_right(a.table(idx.at(0), idx.at(1)), idx.at(2)),
                           a.mul_basis_right(a.table(idx.at(0), idx.at(2)), idx.at(1)));
        case IdentityId::Associativity:
            return a.associator_basis(idx.at(0), idx.at(1), idx.at(2));
        case IdentityId::Commutativity:
            return vec_sub(a.table(idx.at(0), idx.at(1)), a.table(idx.at(1), idx.at(0)));
        case IdentityId::Derived3: {
            const std::size_t i = idx.at(0), j = idx.at(1), k = idx.at(2), l = idx.at(3);
            Vec mid = a.associator(unit(i), a.table(j, l), unit(k));
            if (expression == "(ad,b,c)-(a,bd,c)")
                return vec_sub(a.associator(a.table(i, l), unit(j), unit(k)), mid);
            return vec_sub(mid, a.mul_basis_right(a.associator_basis(i, j, k), l));
        }
        case IdentityId::Lemma1Eq6: {
            Subspace nuc = nucleus(a);
            const Vec nv = nuc.basis_row(idx.at(0));
            const std::size_t i = idx.at(1), j = idx.at(2), k = idx.at(3);
            const Vec assoc = a.associator_basis(i, j, k);
            if (expression == "n(x,y,z)") return a.mul(nv, assoc);
            if (expression == "(nx,y,z)")
                return a.associator(a.mul(nv, unit(i)), unit(j), unit(k));
            if (expression == "(xn,y,z)")
                return a.associator(a.mul(unit(i), nv), unit(j), unit(k));
            if (expression == "(x,yn,z)")
                return a.associator(unit(i), a.mul(unit(j), nv), unit(k));
            if (expression == "(x,ny,z)")
                return a.associator(unit(i), a.mul(nv, unit(j)), unit(k));
            if (expression == "(x,y,nz)")
                return a.associator(unit(i), unit(j), a.mul(nv, unit(k)));
            if (expression == "(x,y,zn)")
                return a.associator(unit(i), unit(j), a.mul(unit(k), nv));
            if (expression == "(x,y,z)n") return a.mul(assoc, nv);
            throw input_error("unknown nucleus absorption expression '" + expression + "'");
        }
    }
    throw error("unknown identity");
}

std::string verify_identity_record(const json& rec) {
    Algebra a = algebra_from_json(rec.at("algebra"));
    IdentityId id = identity_from_name(rec.at("identity").get<std::string>());
    std::vector<std::size_t> idx = rec.at("indices").get<std::vector<std::size_t>>();
    const std::string expr = rec.at("expression").get<std::string>();
    Vec defect = identity_defect_at(a, id, idx, expr);
    if (is_zero_vec(defect)) return "stored witness defect re-evaluates to zero";
    Vec stored = vec_from_json(a.field(), a.dim(), rec.at("defect"), "defect");
    if (defect != stored) return "re-evaluated defect differs from the stored defect";
    return "";
}

std::string verify_ideal_record(const json& rec) {
    Algebra a = algebra_from_json(rec.at("algebra"));
    const std::string kind = rec.at("kind").get<std::string>();
    std::vector<Subspace> ideals;
    for (const auto& s : rec.at("ideals"))
        ideals.push_back(subspace_from_json(a.field(), s, "ideals"));
    if (kind == "zero_square_algebra") {
        const Subspace full = Subspace::full(a.field(), a.dim());
        if (a.dim() > 0 && !subspace_product(a, full, full).is_zero())
            return "A*A is nonzero";
        return "";
    }
    if (ideals.empty()) return "witness carries no ideals";
    for (const Subspace& s : ideals)
        if (!is_ideal(a, s, Sidedness::TwoSided)) return "witness subspace is not an ideal";
    if (kind == "trivial_ideal") {
        if (ideals[0].is_zero()) return "trivial-ideal witness is zero";
        if (!subspace_product(a, ideals[0], ideals[0]).is_zero())
            return "witness ideal has nonzero square";
        return "";
    }
    if (kind == "zero_product_pair") {
        if (ideals.size() != 2) return "pair witness needs two ideals";
        if (ideals[0].is_zero() || ideals[1].is_zero()) return "pair witness has a zero ideal";
        if (!subspace_product(a, ideals[0], ideals[1]).is_zero())
            return "witness pair has nonzero product";
        return "";
    }
    if (kind == "proper_ideal") {
        if (ideals[0].is_zero() || ideals[0].dim() >= a.dim())
            return "witness ideal is not proper nonzero";
        return "";
    }
    return "unknown ideal witness kind '" + kind + "'";
}

std::string verify_claim_record(const json& rec) {
    Algebra a = algebra_from_json(rec.at("algebra"));
    ClaimId claim = claim_from_name(rec.at("claim").get<std::string>());
    VerdictInstance inst;
    const json& ji = rec.at("instance");
    for (const auto& e : ji.at("subspaces"))
        inst.subspaces.emplace_back(
            e.at("name").get<std::string>(),
            subspace_from_json(a.field(), e.at("space"), "instance"));
    for (const auto& e : ji.at("vectors"))
        inst.vectors.emplace_back(e.at("name").get<std::string>(),
                                  vec_from_json(a.field(), a.dim(), e.at("vector"), "instance"));
    Verdict fresh = rerun_check(claim, a, inst);
    if (fresh.status != VerdictStatus::Fails)
        return "re-running the check does not reproduce the failure (got " +
               verdict_status_name(fresh.status) + ")";
    return "";
}

std::string verify_radical_record(const json& rec) {
    Algebra a = algebra_from_json(rec.at("algebra"));
    const json& stages = rec.at("stages");
    if (stages.empty()) return "radical chain has no stages";
    std::vector<Subspace> chain;
    for (const auto& s : stages) chain.push_back(subspace_from_json(a.field(), s, "stages"));
    if (!chain.front().is_zero()) return "chain does not start at 0";
    for (std::size_t k = 0; k < chain.size(); ++k) {
        if (!is_ideal(a, chain[k], Sidedness::TwoSided))
            return "stage " + std::to_string(k) + " is not a two-sided ideal";
        if (k > 0 && chain[k].dim() <= chain[k - 1].dim())
            return "chain is not strictly increasing at stage " + std::to_string(k);
    }
    if (a.field().is_prime_field()) {
        QuotientResult q =
            quotient(a, IdealHandle{chain.back(), Sidedness::TwoSided});
        if (is_semiprime(q.algebra).status != DecisionStatus::Yes)
            return "quotient by the radical is not semiprime";
    }
    return "";
}

} // namespace

std::string verify_witness_record(const json& record) {
    if (!record.is_object() || !record.contains("kind"))
        return "malformed witness record (missing kind)";
    const std::string kind = record["kind"].get<std::string>();
    try {
        if (kind == "identity_defect") return verify_identity_record(record);
        if (kind == "trivial_ideal" || kind == "zero_product_pair" || kind == "proper_ideal" ||
            kind == "zero_square_algebra")
            return verify_ideal_record(record);
        if (kind == "claim_failure") return verify_claim_record(record);
        if (kind == "radical_chain") return verify_radical_record(record);
    } catch (const std::exception& e) {
        return std::string("exception during re-verification: ") + e.what();
    }
    return "unknown witness kind '" + kind + "'";
}

std::string iso_timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace novikov::io
