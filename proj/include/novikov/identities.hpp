// Checkers for the defining and derived identities of Novikov algebras.
// Identities are multilinear, so vanishing on all basis tuples is equivalent
// to vanishing everywhere; the checkers scan basis tuples in lexicographic
// order and report the first failure.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "novikov/algebra.hpp"

namespace novikov {

enum class IdentityId {
    RightSym1,     // (a,b,c) = (b,a,c)
    RightComm2,    // (ab)c = (ac)b
    Derived3,      // (ad,b,c) = (a,bd,c) = (a,b,c)d
    Lemma1Eq6,     // n(x,y,z) = (nx,y,z) = ... = (x,y,z)n = 0 for n in N(A)
    Associativity, // (a,b,c) = 0
    Commutativity, // ab = ba
};

std::string identity_name(IdentityId id);

struct IdentityWitness {
    std::vector<std::size_t> indices; // basis tuple (nucleus-basis index first for Lemma1Eq6)
    Vec defect;                       // nonzero by construction
    std::string expression;           // which defect of a multi-part identity failed
};

struct IdentityReport {
    IdentityId id;
    bool holds = false;
    std::optional<IdentityWitness> witness; // present iff !holds
};

// Lemma1Eq6 needs the nucleus and is rejected here; use the overload below.
IdentityReport check_identity(const Algebra& a, IdentityId which);
IdentityReport check_identity(const Algebra& a, IdentityId which, const Subspace& nucleus);

struct NovikovReport {
    bool is_novikov = false;
    std::vector<IdentityReport> reports;
};

// is_novikov iff RightSym1 and RightComm2 both hold.
NovikovReport check_novikov(const Algebra& a);

} // namespace novikov
