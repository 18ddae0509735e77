// Subspace-valued structural invariants and ideal arithmetic: nucleus,
// commutative center, center, associator ideal, annihilators, ideal closures,
// subspace products, quotient and subalgebra extraction.
#pragma once

#include <optional>

#include "novikov/algebra.hpp"

namespace novikov {

enum class Sidedness { TwoSided, LeftIdeal, RightIdeal };

std::string sidedness_name(Sidedness s);

// A basis pair whose product escapes the candidate subspace.
struct IdealViolation {
    bool left_multiplication; // true: e_i * b escaped; false: b * e_i escaped
    std::size_t algebra_index;
    std::size_t basis_index;
    Vec product;
};

// A Subspace together with the sidedness it was certified for.
struct IdealHandle {
    Subspace space;
    Sidedness sidedness;
};

std::optional<IdealViolation> ideal_violation(const Algebra& a, const Subspace& s, Sidedness side);
bool is_ideal(const Algebra& a, const Subspace& s, Sidedness side);
// Throws input_error carrying the violating pair if s is not an ideal.
IdealHandle certify_ideal(const Algebra& a, const Subspace& s, Sidedness side);

// N(A): all n with (n,a,b) = (a,n,b) = (a,b,n) = 0 against all basis pairs.
Subspace nucleus(const Algebra& a);
// K(A): all k with [k,a] = 0 for all a.
Subspace commutative_center(const Algebra& a);
// Z(A) = N(A) ∩ K(A)
Subspace center(const Algebra& a);

// Span of all basis-triple associators (no closure).
Subspace associator_span(const Algebra& a);
// D(A): the ideal generated by all associators. For Novikov algebras the
// closure step is a no-op on the raw span.
IdealHandle associator_ideal(const Algebra& a);

// Ann_l(M) = {x : xM = 0} and Ann_r(M) = {x : Mx = 0}.
Subspace ann_left(const Algebra& a, const Subspace& m);
Subspace ann_right(const Algebra& a, const Subspace& m);

// Least ideal of the requested sidedness containing s; alternating left/right
// multiplication passes, stabilizes in at most dim rounds.
IdealHandle ideal_closure(const Algebra& a, const Subspace& s, Sidedness side);

// Span of all products u_i * v_j over basis pairs. A bare subspace: for
// non-Novikov algebras the product of ideals need not be an ideal.
Subspace subspace_product(const Algebra& a, const Subspace& u, const Subspace& v);

// Quotient modulo a two-sided ideal. Coset representatives are the standard
// vectors at the non-pivot coordinates of the ideal's canonical basis;
// projection maps A-coordinates to quotient coordinates and satisfies
// projection(mul(u,v)) = mul_q(projection(u), projection(v)).
struct QuotientResult {
    Algebra algebra;
    Matrix projection;                     // (n - dim i) x n
    std::vector<std::size_t> representatives; // coset representative coordinates
};
QuotientResult quotient(const Algebra& a, const IdealHandle& i);

// Representative in A of a quotient-coordinate vector (projection of the
// result is the input again).
Vec quotient_lift(const QuotientResult& q, const Vec& qvec);

// The structure constants of a multiplicatively closed subspace in its own
// canonical basis; inclusion rows embed subalgebra coordinates back into A.
struct SubalgebraResult {
    Algebra algebra;
    Matrix inclusion; // dim(s) x n
};
SubalgebraResult subalgebra_as_algebra(const Algebra& a, const IdealHandle& i);

// Embed a vector given in subalgebra coordinates back into A-coordinates.
Vec include_vector(const SubalgebraResult& s, const Vec& v);
// Express an A-vector lying inside the subalgebra in its coordinates.
Vec restrict_vector(const SubalgebraResult& s, const Vec& v);

} // namespace novikov
