// Corpus constructors: the Gelfand-Dorfman product on a commutative
// associative algebra with a derivation, truncated-polynomial derivation
// algebras, direct sums, controlled mutations, and seeded corpus generation.
#pragma once

#include "novikov/identities.hpp"
#include "novikov/rng.hpp"

namespace novikov {

// c must be commutative and associative; d must satisfy the Leibniz rule on
// all basis pairs. Both are validated by gd_algebra.
struct GDInput {
    Algebra c;
    Matrix d;
    Scalar lambda;
};

// a∘b = a·d(b) + lambda·a·b; the derivation acts on the right factor. The
// output is checked to be Novikov before it is returned.
Algebra gd_algebra(const GDInput& in);

// F[x]/(x^k) with basis 1, x, ..., x^(k-1); commutative, associative, unital.
Algebra chain_algebra(const FieldDescriptor& f, std::size_t k);
// x·F[x]/(x^(k+1)) with basis x, ..., x^k; commutative, associative, nilpotent.
Algebra nilpotent_chain_algebra(const FieldDescriptor& f, std::size_t k);

// gd_algebra on GF(p)[x]/(x^p) with d = d/dx; dim = p. d/dx obeys Leibniz
// here precisely because char divides the truncation degree.
Algebra truncated_poly_algebra(std::uint32_t p, const Scalar& lambda);

// Basis of the derivation space of c: all matrices d with
// d(e_i e_j) = d(e_i) e_j + e_i d(e_j). Canonical (RREF over flattened
// matrix coordinates), so the output order is deterministic.
std::vector<Matrix> derivations(const Algebra& c);

// Block-diagonal table; the summands embed as ideals annihilating each other.
Algebra direct_sum(const Algebra& a, const Algebra& b);

// Copy of a with table[i][j][k] += delta.
Algebra mutate(const Algebra& a, std::size_t i, std::size_t j, std::size_t k,
               const Scalar& delta);

struct CorpusProfile {
    std::vector<FieldDescriptor> fields;
    std::vector<std::size_t> dims;
    std::size_t count = 0;   // number of Novikov entries
    std::uint64_t seed = 0;
};

struct CorpusEntry {
    std::string name;
    Algebra algebra;
    bool novikov;            // checker verdict; mutated companions are false
    std::string construction;
};

// Deterministic: identical profile and seed give identical entry lists.
// Emits `count` Novikov algebras (structured staples first, then random
// Gelfand-Dorfman constructions) followed by mutated non-Novikov companions.
std::vector<CorpusEntry> corpus(const CorpusProfile& profile);

// The corpus profile used by the default theorem-suite and acceptance runs.
CorpusProfile default_profile();

} // namespace novikov
