// Executable checks for every lemma, theorem and corollary, with hypothesis
// gating: a check never reports Fails when the claim's hypotheses are unmet,
// it reports Vacuous instead. Fails verdicts carry a reproducible witness.
#pragma once

#include <map>

#include "novikov/deciders.hpp"
#include "novikov/generators.hpp"

namespace novikov {

enum class ClaimId {
    L1,   // nucleus elements annihilate associators in every slot
    L2,   // Ann_l(left ideal) is an ideal; Ann_r(ideal) is a left ideal
    L3,   // N(A), Z(A) ideals; K(A) = Z(A)
    T1,   // prime nonassociative => N(A) = Z(A) = 0
    L4,   // V trivial ideal of ideal I: AV+V, VA+V ideals of I (+ triviality under semiprimeness)
    L5a,  // Ma+M and aM+M are ideals of I
    L5b,  // (MA)I^2 in M
    L5c,  // (Ma)^2(Ma)^2 in M
    L5d,  // (AM)I^2 in M
    L5e,  // (aM)^2(aM)^2 in M
    L6,   // I/M semiprime => M is an ideal of A
    L7,   // {x in I : xA in I} is an ideal of A
    T2,   // ideals of semiprime are semiprime
    T3,   // ideals of prime are prime
    T4,   // minimal ideal is trivial or simple
    L8,   // commutative ideal H = H^2 lies in the nucleus
    C2,   // prime nonassociative has no nonzero commutative H = H^2
    C3,   // prime with minimal commutative ideal is associative
    C1,   // Baer radical: chain stabilizes, quotient certified semiprime
    NovikovCommAssoc, // commutative Novikov algebras are associative
};

std::string claim_name(ClaimId c);

enum class VerdictStatus { Holds, Fails, Vacuous, Undetermined };

std::string verdict_status_name(VerdictStatus s);

// The concrete objects a check ran against, by name ("I", "V", "M", "L",
// "x", "seed0", ...). Enough to re-run the check from a serialized report.
struct VerdictInstance {
    std::vector<std::pair<std::string, Subspace>> subspaces;
    std::vector<std::pair<std::string, Vec>> vectors;
};

struct VerdictWitness {
    std::string description;
    std::vector<std::pair<std::string, Subspace>> subspaces;
    std::vector<std::pair<std::string, Vec>> vectors;
};

struct Verdict {
    ClaimId claim;
    VerdictStatus status = VerdictStatus::Vacuous;
    std::string context;                    // hypothesis trace / gate reason
    std::size_t instances_exercised = 0;    // nonzero iff the check was non-vacuous
    VerdictInstance instance;
    std::optional<VerdictWitness> witness;  // present iff status == Fails
};

Verdict check_L1(const Algebra& a);
Verdict check_L2(const Algebra& a, const std::vector<Vec>& seeds);
Verdict check_L3(const Algebra& a);
Verdict check_T1(const Algebra& a);
// v: a subspace of A that is a two-sided ideal of the subalgebra i with
// v * v = 0 (gated Vacuous otherwise).
Verdict check_L4_structural(const Algebra& a, const IdealHandle& i, const Subspace& v);
// m: an ideal of the subalgebra i, in A coordinates; x: any vector of A.
std::vector<Verdict> check_L5(const Algebra& a, const IdealHandle& i, const Subspace& m,
                              const Vec& x);
Verdict check_L6(const Algebra& a, const IdealHandle& i, const Subspace& m);
Verdict check_L7(const Algebra& a, const IdealHandle& l);
Verdict check_T2(const Algebra& a);
Verdict check_T3(const Algebra& a);
Verdict check_T4(const Algebra& a);
Verdict check_C1(const Algebra& a);
// Returns verdicts for L8, C2, C3 and NovikovCommAssoc.
std::vector<Verdict> check_L8_C2_C3(const Algebra& a);

struct ClaimStats {
    std::size_t holds = 0, fails = 0, vacuous = 0, undetermined = 0;
    std::size_t non_vacuous = 0; // verdicts with instances_exercised > 0
};

struct SuiteReport {
    std::map<ClaimId, ClaimStats> stats;
    std::vector<std::pair<std::string, Verdict>> failures; // (algebra name, verdict)
    std::size_t algebras = 0;
    std::size_t novikov_algebras = 0;
    bool all_hold_or_vacuous() const { return failures.empty(); }
};

// Runs every check over the Novikov-flagged corpus entries. Instance
// selection (ideal pairs, seeds) is deterministic given the seed.
SuiteReport run_suite(const std::vector<CorpusEntry>& entries, std::uint64_t seed);

// Re-runs a single check on a deserialized instance; used by witness
// re-verification. Returns the fresh verdict.
Verdict rerun_check(ClaimId claim, const Algebra& a, const VerdictInstance& instance);

} // namespace novikov
