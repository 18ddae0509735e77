// Acceptance suite: one pass/fail line per criterion. Exit code 0 iff every
// criterion passes. Expected values come from the test-side oracles in
// oracles.hpp, never from the code paths under test.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "novikov/io.hpp"
#include "novikov/rng.hpp"
#include "oracles.hpp"

using namespace novikov;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& title, const std::function<std::string()>& body) {
    const auto start = Clock::now();
    std::string error;
    try {
        error = body();
    } catch (const std::exception& e) {
        error = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    if (error.empty()) {
        line << "[PASS] criterion " << number << ": " << title << " (" << secs << "s)";
    } else {
        ++g_failures;
        line << "[FAIL] criterion " << number << ": " << title << " (" << secs
             << "s): " << error;
    }
    std::cout << line.str() << std::endl;
}

template <typename T>
std::string expect_eq(const T& got, const T& want, const std::string& what) {
    if (got == want) return "";
    return what + " mismatch";
}

Vec random_vec(const Algebra& a, Rng& rng) {
    Vec v = zero_vec(a.field(), a.dim());
    for (auto& x : v) x = rng.scalar(a.field());
    return v;
}

std::string criterion1_identity_soundness() {
    const auto start = Clock::now();
    const auto& entries = oracles::default_corpus();
    std::size_t gd_count = 0;
    for (const CorpusEntry& e : entries) {
        if (!e.novikov) continue;
        ++gd_count;
        if (!check_novikov(e.algebra).is_novikov)
            return "corpus algebra " + e.name + " rejected by check_novikov";
    }
    if (gd_count < 200) return "corpus has only " + std::to_string(gd_count) + " Novikov entries";

    // >= 200 single-entry mutations, judged by the definitional triple-loop oracle
    Rng rng(0xACCE97);
    std::size_t mutations = 0, breaking = 0;
    for (std::size_t idx = 0; mutations < 220; ++idx) {
        const CorpusEntry& e = entries[idx % entries.size()];
        if (!e.novikov || e.algebra.dim() == 0) continue;
        const std::size_t n = e.algebra.dim();
        Algebra m = mutate(e.algebra, rng.uniform(n), rng.uniform(n), rng.uniform(n),
                           rng.nonzero_scalar(e.algebra.field()));
        ++mutations;
        NovikovReport rep = check_novikov(m);
        const bool oracle_says_novikov = oracles::novikov_by_triple_loop(m);
        if (rep.is_novikov != oracle_says_novikov)
            return "checker disagrees with the triple-loop oracle on a mutation of " + e.name;
        if (!rep.is_novikov) {
            ++breaking;
            for (const IdentityReport& r : rep.reports) {
                if (r.holds) continue;
                const auto& w = *r.witness;
                Vec defect =
                    r.id == IdentityId::RightSym1
                        ? oracles::defect_right_sym(m, w.indices[0], w.indices[1], w.indices[2])
                        : oracles::defect_right_comm(m, w.indices[0], w.indices[1],
                                                     w.indices[2]);
                if (is_zero_vec(defect)) return "witness defect re-evaluates to zero";
                if (defect != w.defect) return "witness defect differs from the oracle value";
            }
        }
    }
    if (breaking == 0) return "no mutation broke the identities; judge pool degenerate";
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > 60.0) return "runtime " + std::to_string(secs) + "s exceeds the minute budget";
    return "";
}

std::string criterion2_structure_oracles() {
    Rng rng(0xACCE98);
    for (const CorpusEntry& e : oracles::default_corpus()) {
        const Algebra& a = e.algebra;
        if (auto err = expect_eq(nucleus(a), oracles::nucleus_scan(a), e.name + " nucleus");
            !err.empty())
            return err;
        if (auto err = expect_eq(commutative_center(a), oracles::commutative_center_scan(a),
                                 e.name + " commutative_center");
            !err.empty())
            return err;
        const Subspace full = Subspace::full(a.field(), a.dim());
        const Subspace d = associator_ideal(a).space;
        Subspace rand_sub = a.dim() == 0
                                ? Subspace::zero(a.field(), 0)
                                : Subspace::span(a.field(), a.dim(), {random_vec(a, rng)});
        for (const Subspace& m : {full, d, rand_sub}) {
            if (auto err = expect_eq(ann_left(a, m), oracles::ann_left_scan(a, m),
                                     e.name + " ann_left");
                !err.empty())
                return err;
            if (auto err = expect_eq(ann_right(a, m), oracles::ann_right_scan(a, m),
                                     e.name + " ann_right");
                !err.empty())
                return err;
        }
    }
    return "";
}

std::string criterion3_decider_oracles() {
    std::size_t covered = 0;
    for (const CorpusEntry& e : oracles::default_corpus()) {
        const Algebra& a = e.algebra;
        if (!a.field().is_prime_field()) continue;
        const std::uint32_t p = a.field().modulus();
        const bool in_scope = (p == 2 && a.dim() <= 4) || (p == 3 && a.dim() <= 3);
        if (!in_scope) continue;
        ++covered;
        std::vector<IdealHandle> ideals = enumerate_ideals(a);
        if (is_semiprime(a).status != oracles::semiprime_from_ideals(a, ideals))
            return e.name + ": is_semiprime disagrees with enumeration";
        if (is_prime(a).status != oracles::prime_from_ideals(a, ideals))
            return e.name + ": is_prime disagrees with enumeration";
        if (is_simple(a).status != oracles::simple_from_ideals(a, ideals))
            return e.name + ": is_simple disagrees with enumeration";
        MinimalIdealsResult got = minimal_ideals(a);
        std::vector<Subspace> want = oracles::minimal_from_ideals(a, ideals);
        if (!got.exact) return e.name + ": minimal_ideals not exact over a finite field";
        if (got.ideals.size() != want.size())
            return e.name + ": minimal ideal count disagrees with enumeration";
        for (const IdealHandle& g : got.ideals) {
            bool matched = false;
            for (const Subspace& s : want) matched = matched || s == g.space;
            if (!matched) return e.name + ": minimal ideal set disagrees with enumeration";
        }
    }
    if (covered < 20)
        return "only " + std::to_string(covered) + " corpus algebras in oracle scope";
    // enumerator counts vs the closed-form Gaussian binomials
    struct Case {
        std::uint32_t p;
        std::size_t n;
    };
    for (Case c : {Case{2, 1}, Case{2, 2}, Case{2, 3}, Case{2, 4}, Case{2, 5}, Case{3, 1},
                   Case{3, 2}, Case{3, 3}, Case{3, 4}}) {
        std::vector<Subspace> subs = enumerate_subspaces(FieldDescriptor::gf(c.p), c.n);
        std::vector<std::size_t> per_rank(c.n + 1, 0);
        for (const Subspace& s : subs) ++per_rank[s.dim()];
        for (std::size_t r = 0; r <= c.n; ++r)
            if (gaussian_binomial(c.n, r, c.p) != static_cast<long>(per_rank[r]))
                return "subspace count (" + std::to_string(c.p) + "," + std::to_string(c.n) +
                       ") rank " + std::to_string(r) + " does not match the Gaussian binomial";
    }
    return "";
}

std::string criterion4_theorem_suite() {
    const auto& entries = oracles::default_corpus();
    SuiteReport rep = run_suite(entries, default_profile().seed);
    if (!rep.failures.empty()) {
        const auto& [name, v] = rep.failures.front();
        return std::to_string(rep.failures.size()) + " Fails, first: " + claim_name(v.claim) +
               " on " + name + (v.witness ? " (" + v.witness->description + ")" : "");
    }
    for (ClaimId c : {ClaimId::L1, ClaimId::L2, ClaimId::L3, ClaimId::L5a, ClaimId::L5b,
                      ClaimId::L5c, ClaimId::L5d, ClaimId::L5e, ClaimId::L6, ClaimId::L7,
                      ClaimId::L8, ClaimId::T2, ClaimId::T4, ClaimId::C1}) {
        auto it = rep.stats.find(c);
        if (it == rep.stats.end() || it->second.non_vacuous == 0)
            return "claim " + claim_name(c) + " has no non-vacuous coverage";
    }
    // T1/T3/C2/C3 coverage is required whenever the corpus certifies a prime
    // nonassociative finite-field algebra
    bool have_prime_nonassoc = false;
    for (const CorpusEntry& e : entries) {
        if (!e.novikov || !e.algebra.field().is_prime_field()) continue;
        if (associator_ideal(e.algebra).space.is_zero()) continue;
        if (is_prime(e.algebra).status == DecisionStatus::Yes) {
            have_prime_nonassoc = true;
            break;
        }
    }
    std::ostringstream coverage;
    for (ClaimId c : {ClaimId::T1, ClaimId::T3, ClaimId::C2, ClaimId::C3}) {
        const std::size_t nv = rep.stats.count(c) ? rep.stats.at(c).non_vacuous : 0;
        coverage << claim_name(c) << "=" << nv << " ";
        if (have_prime_nonassoc && nv == 0)
            return "corpus contains a certified prime nonassociative algebra but " +
                   claim_name(c) + " was never exercised";
    }
    std::cout << "       coverage with prime nonassociative present="
              << (have_prime_nonassoc ? "yes" : "no") << ": " << coverage.str() << "\n";
    return "";
}

std::string criterion5_baer_radical() {
    for (const CorpusEntry& e : oracles::default_corpus()) {
        const Algebra& a = e.algebra;
        if (!a.field().is_prime_field()) continue;
        if (!enumeration_within_caps(a.field(), a.dim())) continue;
        BaerChain chain = baer_radical(a);
        QuotientResult q = quotient(a, chain.radical());
        if (is_semiprime(q.algebra).status != DecisionStatus::Yes)
            return e.name + ": quotient by the radical not certified semiprime";
        for (const IdealHandle& i : enumerate_ideals(a)) {
            if (!subspace_product(a, i.space, i.space).is_zero()) continue;
            if (!subspace_leq(i.space, chain.radical().space))
                return e.name + ": enumerated trivial ideal escapes the radical";
        }
    }
    return "";
}

std::string criterion6_structural_identities() {
    for (const CorpusEntry& e : oracles::default_corpus()) {
        if (!e.novikov) continue;
        const Algebra& a = e.algebra;
        Subspace n = nucleus(a);
        Subspace k = commutative_center(a);
        Subspace z = center(a);
        Subspace d = associator_ideal(a).space;
        if (!subspace_product(a, d, n).is_zero()) return e.name + ": D(A)N(A) != 0";
        if (!subspace_product(a, n, d).is_zero()) return e.name + ": N(A)D(A) != 0";
        if (k != z) return e.name + ": K(A) != Z(A)";
        if (!is_ideal(a, n, Sidedness::TwoSided)) return e.name + ": N(A) not an ideal";
        if (!is_ideal(a, z, Sidedness::TwoSided)) return e.name + ": Z(A) not an ideal";
    }
    return "";
}

std::string criterion7_determinism_roundtrip() {
    // identical profile + seed => byte-identical serialized corpora
    CorpusProfile p = default_profile();
    p.count = 40;
    std::vector<CorpusEntry> c1 = corpus(p);
    std::vector<CorpusEntry> c2 = corpus(p);
    if (c1.size() != c2.size()) return "corpus sizes differ between runs";
    for (std::size_t i = 0; i < c1.size(); ++i) {
        std::string s1 = io::canonical_algebra_string(c1[i].algebra);
        std::string s2 = io::canonical_algebra_string(c2[i].algebra);
        if (s1 != s2 || c1[i].name != c2[i].name) return "corpus serialization not reproducible";
        Algebra back = io::parse_algebra_file(s1).algebra;
        if (!(back == c1[i].algebra)) return "parse/serialize round trip changed an algebra";
    }

    // every witness a run emits must re-verify with no other inputs
    const FieldDescriptor f2 = FieldDescriptor::gf(2);
    const FieldDescriptor f3 = FieldDescriptor::gf(3);
    std::vector<io::json> witnesses;
    {
        Algebra z = Algebra::zero_algebra(f2, 3);
        Decision d = is_semiprime(z);
        witnesses.push_back(io::witness_decision(z, d));
        witnesses.push_back(io::witness_radical_chain(z, baer_radical(z)));
    }
    {
        Algebra sum = direct_sum(chain_algebra(f3, 1), chain_algebra(f3, 1));
        witnesses.push_back(io::witness_decision(sum, is_prime(sum)));
        witnesses.push_back(io::witness_decision(sum, is_simple(sum)));
        witnesses.push_back(io::witness_radical_chain(sum, baer_radical(sum)));
    }
    {
        Algebra broken =
            mutate(truncated_poly_algebra(3, Scalar::zero(f3)), 0, 0, 0, Scalar::one(f3));
        NovikovReport rep = check_novikov(broken);
        for (const IdentityReport& r : rep.reports)
            if (!r.holds) witnesses.push_back(io::witness_identity(broken, r));
    }
    for (const CorpusEntry& e : oracles::default_corpus()) {
        if (witnesses.size() > 40) break;
        if (e.novikov) continue;
        NovikovReport rep = check_novikov(e.algebra);
        for (const IdentityReport& r : rep.reports)
            if (!r.holds) witnesses.push_back(io::witness_identity(e.algebra, r));
    }
    for (const io::json& w : witnesses) {
        std::string err = io::verify_witness_record(w);
        if (!err.empty()) return "emitted witness failed re-verification: " + err;
    }
    return "";
}

std::string criterion8_performance_floor() {
    // dim 32 over Q with random small-integer tables: nucleus, center and
    // annihilators in under 10 seconds
    Rng rng(0xACCE99);
    const FieldDescriptor Q = FieldDescriptor::rationals();
    const std::size_t n = 32;
    std::vector<Vec> table(n * n, zero_vec(Q, n));
    for (auto& v : table)
        for (auto& x : v) x = Scalar::of(Q, rng.range(-2, 2));
    Algebra big(Q, n, std::move(table));
    const auto t0 = Clock::now();
    Subspace nuc = nucleus(big);
    Subspace cen = center(big);
    Subspace al = ann_left(big, Subspace::full(Q, n));
    Subspace ar = ann_right(big, Subspace::full(Q, n));
    const double big_secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (nuc.dim() > n || cen.dim() > n || al.dim() > n || ar.dim() > n)
        return "nonsense dimensions in the dim-32 run";
    if (big_secs > 10.0)
        return "dim-32 structure maps took " + std::to_string(big_secs) + "s (budget 10s)";

    // GF(3), dim 4 projective-scan deciders in under 5 seconds; the instance
    // is the truncated GF(3) algebra plus a field summand
    const FieldDescriptor f3 = FieldDescriptor::gf(3);
    Algebra g4 = direct_sum(truncated_poly_algebra(3, Scalar::zero(f3)), chain_algebra(f3, 1));
    const auto t1 = Clock::now();
    (void)is_semiprime(g4);
    (void)is_prime(g4);
    (void)is_simple(g4);
    (void)minimal_ideals(g4);
    (void)baer_radical(g4);
    const double scan_secs = std::chrono::duration<double>(Clock::now() - t1).count();
    if (scan_secs > 5.0)
        return "GF(3) dim-4 deciders took " + std::to_string(scan_secs) + "s (budget 5s)";
    std::cout << "       dim-32/Q structure maps: " << big_secs
              << "s; GF(3) dim-4 deciders: " << scan_secs << "s\n";
    return "";
}

} // namespace

int main() {
    criterion(1, "identity soundness on the generated corpus and mutations",
              criterion1_identity_soundness);
    criterion(2, "structure maps agree with definitional brute-force scans",
              criterion2_structure_oracles);
    criterion(3, "deciders agree with full subspace enumeration",
              criterion3_decider_oracles);
    criterion(4, "theorem suite: zero Fails and required non-vacuous coverage",
              criterion4_theorem_suite);
    criterion(5, "Baer radical: certified semiprime quotient, contains trivial ideals",
              criterion5_baer_radical);
    criterion(6, "structural identities: D*N = N*D = 0, K = Z, N and Z ideals",
              criterion6_structural_identities);
    criterion(7, "determinism, round-trip exactness, witness re-verification",
              criterion7_determinism_roundtrip);
    criterion(8, "performance floor: dim-32/Q structure maps, GF(3) dim-4 deciders",
              criterion8_performance_floor);
    if (g_failures == 0) {
        std::cout << "acceptance: all criteria passed" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criteria FAILED" << std::endl;
    return 1;
}
