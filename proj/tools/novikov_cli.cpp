// novikov: structure-constant analysis of finite-dimensional algebras.
// Subcommands: check, analyze, decide, radical, lattice, theorems, generate,
// verify-witness. Exit codes: 0 ok, 1 a checked claim failed, 2 input error,
// 3 undetermined where a determination was requested.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "novikov/io.hpp"

using namespace novikov;
using io::json;

namespace {

struct GlobalOptions {
    std::string format = "human";
    std::string out_path; // empty: stdout
    std::size_t dim_cap = 64;
    std::uint32_t field_cap = 65521;
    std::uint64_t seed = default_profile().seed;
    bool oracle = false;
};

void enforce_caps(const GlobalOptions& g, const Algebra& a) {
    if (a.dim() > g.dim_cap)
        throw input_error("dim-cap exceeded: algebra dim " + std::to_string(a.dim()) +
                          " > --dim-cap " + std::to_string(g.dim_cap));
    if (a.field().is_prime_field() && a.field().modulus() > g.field_cap)
        throw input_error("field-cap exceeded: GF(" + std::to_string(a.field().modulus()) +
                          ") > --field-cap " + std::to_string(g.field_cap));
}

void emit(const GlobalOptions& g, const json& report, const std::string& human_summary) {
    json doc{{"header",
              {{"tool", "novikov"},
               {"version", io::kToolVersion},
               {"generated_at", io::iso_timestamp_utc()}}},
             {"report", report}};
    std::string text;
    if (g.format == "canonical")
        text = report.dump();
    else
        text = human_summary + doc.dump(2) + "\n";
    if (g.out_path.empty()) {
        std::cout << text;
        if (g.format == "canonical") std::cout << "\n";
    } else {
        std::ofstream out(g.out_path);
        if (!out) throw input_error("cannot write " + g.out_path);
        out << text;
        if (g.format == "canonical") out << "\n";
    }
}

json base_report(const std::string& command, const Algebra& a) {
    json rep;
    rep["command"] = command;
    rep["input_digest"] = io::digest_hex(io::canonical_algebra_string(a));
    rep["algebra"] = io::algebra_to_json(a);
    return rep;
}

int cmd_check(const GlobalOptions& g, const std::string& path) {
    io::AlgebraFile f = io::load_algebra_file(path);
    enforce_caps(g, f.algebra);
    const Algebra& a = f.algebra;
    json rep = base_report("check", a);
    json witnesses = json::array();

    NovikovReport nov = check_novikov(a);
    json identities = json::array();
    auto push_identity = [&](const IdentityReport& r) {
        identities.push_back(io::identity_report_to_json(r));
        if (!r.holds) witnesses.push_back(io::witness_identity(a, r));
    };
    for (const IdentityReport& r : nov.reports) push_identity(r);
    bool derived3_ok = true;
    if (nov.is_novikov) {
        IdentityReport d3 = check_identity(a, IdentityId::Derived3);
        derived3_ok = d3.holds;
        push_identity(d3);
    }
    push_identity(check_identity(a, IdentityId::Associativity));
    push_identity(check_identity(a, IdentityId::Commutativity));

    rep["results"] = json{{"novikov", nov.is_novikov}, {"identities", identities}};
    rep["witnesses"] = witnesses;
    std::string summary = std::string("novikov: ") + (nov.is_novikov ? "true" : "false") + "\n";
    emit(g, rep, summary);
    return (nov.is_novikov && derived3_ok) ? 0 : 1;
}

int cmd_analyze(const GlobalOptions& g, const std::string& path) {
    io::AlgebraFile f = io::load_algebra_file(path);
    enforce_caps(g, f.algebra);
    const Algebra& a = f.algebra;
    json rep = base_report("analyze", a);

    Subspace n = nucleus(a);
    Subspace k = commutative_center(a);
    Subspace z = center(a);
    IdealHandle d = associator_ideal(a);
    const Subspace full = Subspace::full(a.field(), a.dim());

    json results;
    results["nucleus"] = io::subspace_to_json(n);
    results["commutative_center"] = io::subspace_to_json(k);
    results["center"] = io::subspace_to_json(z);
    results["associator_ideal"] = io::subspace_to_json(d.space);
    json ann;
    ann["full"] = json{{"left", io::subspace_to_json(ann_left(a, full))},
                       {"right", io::subspace_to_json(ann_right(a, full))}};
    ann["associator_ideal"] = json{{"left", io::subspace_to_json(ann_left(a, d.space))},
                                   {"right", io::subspace_to_json(ann_right(a, d.space))}};
    for (const auto& [name, s] : f.subspaces)
        ann[name] = json{{"left", io::subspace_to_json(ann_left(a, s))},
                         {"right", io::subspace_to_json(ann_right(a, s))}};
    results["annihilators"] = std::move(ann);
    rep["results"] = std::move(results);
    rep["witnesses"] = json::array();

    std::string summary = "N dim " + std::to_string(n.dim()) + ", K dim " +
                          std::to_string(k.dim()) + ", Z dim " + std::to_string(z.dim()) +
                          ", D dim " + std::to_string(d.space.dim()) + "\n";
    emit(g, rep, summary);
    return 0;
}

int cmd_decide(const GlobalOptions& g, const std::string& path, const std::string& question) {
    io::AlgebraFile f = io::load_algebra_file(path);
    enforce_caps(g, f.algebra);
    const Algebra& a = f.algebra;
    json rep = base_report("decide", a);
    rep["question"] = question;

    Decision d;
    if (question == "semiprime")
        d = is_semiprime(a);
    else if (question == "prime")
        d = is_prime(a);
    else if (question == "simple")
        d = is_simple(a);
    else
        throw input_error("unknown question '" + question + "' (semiprime|prime|simple)");

    json witnesses = json::array();
    if (d.witness) witnesses.push_back(io::witness_decision(a, d));
    if (a.field().is_rationals()) rep["search_seed"] = kRationalSearchSeed;
    rep["results"] = io::decision_to_json(d);

    bool oracle_agrees = true;
    if (g.oracle) {
        if (!enumeration_within_caps(a.field(), a.dim()))
            throw input_error("--oracle: enumeration cap exceeded (GF(2) dim<=5, GF(3) dim<=4)");
        std::vector<IdealHandle> ideals = enumerate_ideals(a);
        DecisionStatus oracle_status = DecisionStatus::Yes;
        if (question == "semiprime") {
            for (const auto& i : ideals)
                if (!i.space.is_zero() && subspace_product(a, i.space, i.space).is_zero())
                    oracle_status = DecisionStatus::No;
        } else if (question == "prime") {
            for (const auto& i : ideals)
                for (const auto& j : ideals)
                    if (!i.space.is_zero() && !j.space.is_zero() &&
                        subspace_product(a, i.space, j.space).is_zero())
                        oracle_status = DecisionStatus::No;
        } else {
            const Subspace full = Subspace::full(a.field(), a.dim());
            if (a.dim() == 0 || subspace_product(a, full, full).is_zero())
                oracle_status = DecisionStatus::No;
            for (const auto& i : ideals)
                if (!i.space.is_zero() && i.space.dim() < a.dim())
                    oracle_status = DecisionStatus::No;
        }
        oracle_agrees = oracle_status == d.status;
        rep["oracle"] = json{{"status", decision_status_name(oracle_status)},
                             {"agrees", oracle_agrees}};
    }
    rep["witnesses"] = witnesses;

    std::string summary = question + ": " + decision_status_name(d.status) + "\n";
    emit(g, rep, summary);
    if (!oracle_agrees) return 1;
    return d.status == DecisionStatus::Undetermined ? 3 : 0;
}

int cmd_radical(const GlobalOptions& g, const std::string& path) {
    io::AlgebraFile f = io::load_algebra_file(path);
    enforce_caps(g, f.algebra);
    const Algebra& a = f.algebra;
    json rep = base_report("radical", a);
    if (a.field().is_rationals()) rep["search_seed"] = kRationalSearchSeed;
    BaerChain chain = baer_radical(a);
    rep["results"] = io::baer_chain_to_json(chain);
    rep["witnesses"] = json::array({io::witness_radical_chain(a, chain)});
    std::string summary = "radical dim " + std::to_string(chain.radical().space.dim()) +
                          " of " + std::to_string(a.dim()) +
                          (chain.certified ? " (quotient certified semiprime)"
                                           : " (not certified)") +
                          "\n";
    emit(g, rep, summary);
    return 0;
}

int cmd_lattice(const GlobalOptions& g, const std::string& path) {
    io::AlgebraFile f = io::load_algebra_file(path);
    enforce_caps(g, f.algebra);
    const Algebra& a = f.algebra;
    json rep = base_report("lattice", a);

    std::vector<Subspace> subs = enumerate_subspaces(a.field(), a.dim());
    std::vector<std::size_t> per_rank(a.dim() + 1, 0);
    for (const Subspace& s : subs) ++per_rank[s.dim()];
    bool counts_ok = true;
    json counts = json::array();
    for (std::size_t r = 0; r <= a.dim(); ++r) {
        mpz_class expected = gaussian_binomial(a.dim(), r, a.field().modulus());
        bool ok = expected == static_cast<long>(per_rank[r]);
        counts_ok = counts_ok && ok;
        counts.push_back(json{{"rank", r},
                              {"enumerated", per_rank[r]},
                              {"gaussian_binomial", expected.get_str()},
                              {"match", ok}});
    }

    std::vector<IdealHandle> ideals = enumerate_ideals(a);
    json jideals = json::array();
    for (const IdealHandle& i : ideals)
        jideals.push_back(json{
            {"space", io::subspace_to_json(i.space)},
            {"trivial", subspace_product(a, i.space, i.space).is_zero()}});
    rep["results"] = json{{"subspace_counts", counts},
                          {"counts_match_gaussian_binomials", counts_ok},
                          {"ideals", jideals}};
    rep["witnesses"] = json::array();
    std::string summary = std::to_string(subs.size()) + " subspaces, " +
                          std::to_string(ideals.size()) + " two-sided ideals\n";
    emit(g, rep, summary);
    return counts_ok ? 0 : 1;
}

CorpusProfile parse_profile(const std::string& fields, const std::string& dims,
                            std::size_t count, std::uint64_t seed) {
    CorpusProfile p;
    p.count = count;
    p.seed = seed;
    std::stringstream fs(fields);
    std::string tok;
    while (std::getline(fs, tok, ',')) {
        if (tok == "Q")
            p.fields.push_back(FieldDescriptor::rationals());
        else if (tok.rfind("GF", 0) == 0)
            p.fields.push_back(FieldDescriptor::gf(std::stoul(tok.substr(2))));
        else
            throw input_error("bad field '" + tok + "' (use Q or GF<p>)");
    }
    auto dash = dims.find('-');
    if (dash != std::string::npos) {
        std::size_t lo = std::stoul(dims.substr(0, dash));
        std::size_t hi = std::stoul(dims.substr(dash + 1));
        if (lo > hi) throw input_error("bad dim range '" + dims + "'");
        for (std::size_t d = lo; d <= hi; ++d) p.dims.push_back(d);
    } else {
        std::stringstream ds(dims);
        while (std::getline(ds, tok, ',')) p.dims.push_back(std::stoul(tok));
    }
    return p;
}

int cmd_theorems(const GlobalOptions& g, const std::string& path, bool use_corpus,
                 const CorpusProfile& profile) {
    std::vector<CorpusEntry> entries;
    if (use_corpus) {
        entries = corpus(profile);
    } else {
        io::AlgebraFile f = io::load_algebra_file(path);
        enforce_caps(g, f.algebra);
        bool nov = check_novikov(f.algebra).is_novikov;
        entries.push_back(CorpusEntry{std::filesystem::path(path).stem().string(),
                                      f.algebra, nov, "file"});
    }
    for (const CorpusEntry& e : entries) enforce_caps(g, e.algebra);

    SuiteReport suite = run_suite(entries, g.seed);
    json rep;
    rep["command"] = "theorems";
    rep["seed"] = g.seed;
    if (use_corpus)
        rep["corpus"] = json{{"count", profile.count}, {"seed", profile.seed}};
    rep["results"] = io::suite_report_to_json(suite);
    json witnesses = json::array();
    for (const auto& [name, verdict] : suite.failures) {
        for (const CorpusEntry& e : entries)
            if (e.name == name) {
                witnesses.push_back(io::witness_verdict(e.algebra, verdict));
                break;
            }
    }
    rep["witnesses"] = witnesses;

    std::ostringstream sum;
    sum << "suite over " << suite.novikov_algebras << " Novikov algebras ("
        << suite.algebras << " total)\n";
    for (const auto& [claim, st] : suite.stats)
        sum << "  " << claim_name(claim) << ": holds " << st.holds << ", fails " << st.fails
            << ", vacuous " << st.vacuous << ", undetermined " << st.undetermined
            << ", non-vacuous " << st.non_vacuous << "\n";
    sum << (suite.failures.empty() ? "no failures\n"
                                   : std::to_string(suite.failures.size()) + " FAILURES\n");
    emit(g, rep, sum.str());
    return suite.failures.empty() ? 0 : 1;
}

int cmd_generate(const GlobalOptions& g, const CorpusProfile& profile,
                 const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    std::vector<CorpusEntry> entries = corpus(profile);
    json manifest;
    manifest["profile"] = json{{"dims", profile.dims},
                               {"count", profile.count},
                               {"seed", profile.seed}};
    json fields = json::array();
    for (const auto& f : profile.fields) fields.push_back(io::field_to_json(f));
    manifest["profile"]["fields"] = std::move(fields);
    json files = json::array();
    for (const CorpusEntry& e : entries) {
        io::AlgebraFile f{e.algebra,
                          json{{"name", e.name},
                               {"novikov", e.novikov},
                               {"construction", e.construction},
                               {"profile_seed", profile.seed}},
                          {}};
        const std::string text = io::serialize_algebra_file(f, false);
        const std::string fname = e.name + ".json";
        std::ofstream out(std::filesystem::path(out_dir) / fname);
        if (!out) throw input_error("cannot write corpus file " + fname);
        out << text;
        files.push_back(json{{"name", e.name},
                             {"file", fname},
                             {"digest", io::digest_hex(text)},
                             {"novikov", e.novikov}});
    }
    manifest["files"] = std::move(files);
    std::ofstream mout(std::filesystem::path(out_dir) / "manifest.json");
    mout << manifest.dump(2) << "\n";
    std::cout << "wrote " << entries.size() << " algebras to " << out_dir << "\n";
    return 0;
}

int cmd_verify_witness(const GlobalOptions&, const std::string& report_path) {
    std::ifstream in(report_path);
    if (!in) throw input_error("cannot open report: " + report_path);
    std::stringstream buf;
    buf << in.rdbuf();
    json doc;
    try {
        doc = json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("report parse error: ") + e.what());
    }
    const json* rep = &doc;
    if (doc.contains("report")) rep = &doc["report"];
    if (!rep->contains("witnesses") || !(*rep)["witnesses"].is_array())
        throw input_error("report has no witnesses array");
    std::size_t ok = 0, bad = 0;
    for (const json& w : (*rep)["witnesses"]) {
        std::string err = io::verify_witness_record(w);
        if (err.empty()) {
            ++ok;
        } else {
            ++bad;
            std::cout << "witness " << w.value("kind", "?") << ": FAILED: " << err << "\n";
        }
    }
    std::cout << ok << " witnesses verified, " << bad << " failed\n";
    return bad == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact structure-constant analysis of finite-dimensional Novikov algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOptions g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"human", "canonical"}));
    app.add_option("-o,--out", g.out_path, "write the report to a file");
    app.add_option("--dim-cap", g.dim_cap, "refuse inputs above this dimension");
    app.add_option("--field-cap", g.field_cap, "refuse GF(p) inputs with p above this");
    app.add_option("--seed", g.seed, "seed for corpus generation and instance selection");
    app.add_flag("--oracle", g.oracle, "cross-check decisions against full enumeration");

    std::string path, question = "semiprime", out_dir = "corpus";
    std::string fields = "Q,GF2,GF3,GF5", dims = "1-6";
    std::size_t count = 220;
    bool use_corpus = false;

    CLI::App* c_check = app.add_subcommand("check", "Novikov identity checks");
    c_check->add_option("file", path)->required();
    CLI::App* c_analyze = app.add_subcommand("analyze", "nucleus, centers, D(A), annihilators");
    c_analyze->add_option("file", path)->required();
    CLI::App* c_decide = app.add_subcommand("decide", "semiprime/prime/simple decision");
    c_decide->add_option("file", path)->required();
    c_decide->add_option("-q,--question", question, "semiprime|prime|simple")
        ->check(CLI::IsMember({"semiprime", "prime", "simple"}));
    CLI::App* c_radical = app.add_subcommand("radical", "Baer radical chain");
    c_radical->add_option("file", path)->required();
    CLI::App* c_lattice = app.add_subcommand("lattice", "full ideal enumeration (within caps)");
    c_lattice->add_option("file", path)->required();
    CLI::App* c_theorems = app.add_subcommand("theorems", "run the lemma/theorem suite");
    c_theorems->add_option("file", path);
    c_theorems->add_flag("--corpus", use_corpus, "run on a generated corpus");
    c_theorems->add_option("--fields", fields, "corpus fields, e.g. Q,GF2,GF3");
    c_theorems->add_option("--dims", dims, "corpus dims, e.g. 1-6 or 2,3");
    c_theorems->add_option("--count", count, "number of Novikov corpus entries");
    CLI::App* c_generate = app.add_subcommand("generate", "emit a corpus to a directory");
    c_generate->add_option("--out", out_dir, "output directory");
    c_generate->add_option("--fields", fields, "corpus fields");
    c_generate->add_option("--dims", dims, "corpus dims");
    c_generate->add_option("--count", count, "number of Novikov corpus entries");
    CLI::App* c_verify = app.add_subcommand("verify-witness", "re-verify report witnesses");
    c_verify->add_option("report", path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_check->parsed()) return cmd_check(g, path);
        if (c_analyze->parsed()) return cmd_analyze(g, path);
        if (c_decide->parsed()) return cmd_decide(g, path, question);
        if (c_radical->parsed()) return cmd_radical(g, path);
        if (c_lattice->parsed()) return cmd_lattice(g, path);
        if (c_theorems->parsed()) {
            if (!use_corpus && path.empty())
                throw input_error("theorems needs a file or --corpus");
            return cmd_theorems(g, path, use_corpus,
                                parse_profile(fields, dims, count, g.seed));
        }
        if (c_generate->parsed())
            return cmd_generate(g, parse_profile(fields, dims, count, g.seed), out_dir);
        if (c_verify->parsed()) return cmd_verify_witness(g, path);
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return 2;
}
