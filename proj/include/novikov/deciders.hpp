// Decision procedures over finite fields and semidecisions over Q:
// semiprimeness, primeness, simplicity, minimal ideals, the Baer radical
// chain, and the exhaustive subspace/ideal enumeration oracle.
//
// Finite-field Yes/No answers are unconditional. Over the rationals the
// existential searches are bounded, so only No-with-witness and Undetermined
// are ever reported for semiprime/prime/simple.
#pragma once

#include <functional>

#include "novikov/structure.hpp"

namespace novikov {

enum class DecisionStatus { Yes, No, Undetermined };
enum class DecisionMethod { ProjectiveScan, SubspaceEnumeration, RandomSearch };

// Seed of the bounded random candidate search used by the Q semidecisions;
// fixed so that identical inputs give identical reports.
inline constexpr std::uint64_t kRationalSearchSeed = 0x5eed20240001ULL;

std::string decision_status_name(DecisionStatus s);
std::string decision_method_name(DecisionMethod m);

struct DecisionWitness {
    // "trivial_ideal": one nonzero two-sided ideal with zero square
    // "zero_product_pair": two nonzero two-sided ideals with product zero
    // "proper_ideal": one nonzero proper two-sided ideal
    // "zero_square_algebra": the full space, A*A = 0
    std::string kind;
    std::vector<Subspace> ideals;
};

struct Decision {
    DecisionStatus status = DecisionStatus::Undetermined;
    DecisionMethod method = DecisionMethod::ProjectiveScan;
    std::optional<DecisionWitness> witness;
    std::string certificate; // Yes certificate or Undetermined reason
};

// Visits one representative per scalar class of nonzero vectors of F_p^n
// ((p^n-1)/(p-1) points, first nonzero coordinate 1) in lexicographic order.
// The visitor returns false to stop; the return value is false iff stopped.
bool scan_projective_points(const FieldDescriptor& f, std::size_t n,
                            const std::function<bool(const Vec&)>& visit);
std::vector<Vec> projective_points(const FieldDescriptor& f, std::size_t n);

// Least two-sided ideal containing x.
IdealHandle principal_ideal(const Algebra& a, const Vec& x);

Decision is_semiprime(const Algebra& a);
Decision is_prime(const Algebra& a);
Decision is_simple(const Algebra& a);

struct MinimalIdealsResult {
    std::vector<IdealHandle> ideals;
    bool exact; // false over Q: candidates found by bounded search only
};
MinimalIdealsResult minimal_ideals(const Algebra& a);

// B_0 = 0 and B_{k+1} is the preimage of the sum of all trivial principal
// ideals of A/B_k; stops when the quotient has none. `certified` records that
// an independent is_semiprime run accepted the final quotient (finite fields).
struct BaerChain {
    std::vector<IdealHandle> stages;
    bool certified = false;
    const IdealHandle& radical() const { return stages.back(); }
};
BaerChain baer_radical(const Algebra& a);

// Exhaustive enumeration oracle. Hard caps: dim <= 5 over GF(2), dim <= 4
// over GF(3); anything else throws input_error naming the cap.
bool enumeration_within_caps(const FieldDescriptor& f, std::size_t n);
std::vector<Subspace> enumerate_subspaces(const FieldDescriptor& f, std::size_t n);
std::vector<IdealHandle> enumerate_ideals(const Algebra& a);

// Number of r-dimensional subspaces of F_p^n.
mpz_class gaussian_binomial(std::size_t n, std::size_t r, std::uint32_t p);

} // namespace novikov
