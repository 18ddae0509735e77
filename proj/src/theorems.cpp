#include "novikov/theorems.hpp"

#include <algorithm>

namespace novikov {

std::string claim_name(ClaimId c) {
    switch (c) {
        case ClaimId::L1: return "L1";
        case ClaimId::L2: return "L2";
        case ClaimId::L3: return "L3";
        case ClaimId::T1: return "T1";
        case ClaimId::L4: return "L4";
        case ClaimId::L5a: return "L5a";
        case ClaimId::L5b: return "L5b";
        case ClaimId::L5c: return "L5c";
        case ClaimId::L5d: return "L5d";
        case ClaimId::L5e: return "L5e";
        case ClaimId::L6: return "L6";
        case ClaimId::L7: return "L7";
        case ClaimId::T2: return "T2";
        case ClaimId::T3: return "T3";
        case ClaimId::T4: return "T4";
        case ClaimId::L8: return "L8";
        case ClaimId::C2: return "C2";
        case ClaimId::C3: return "C3";
        case ClaimId::C1: return "C1";
        case ClaimId::NovikovCommAssoc: return "NovikovCommAssoc";
    }
    return "?";
}

std::string verdict_status_name(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Holds: return "holds";
        case VerdictStatus::Fails: return "fails";
        case VerdictStatus::Vacuous: return "vacuous";
        case VerdictStatus::Undetermined: return "undetermined";
    }
    return "?";
}

namespace {

Verdict make(ClaimId c, VerdictStatus s, std::string context, std::size_t exercised = 0) {
    Verdict v;
    v.claim = c;
    v.status = s;
    v.context = std::move(context);
    v.instances_exercised = exercised;
    return v;
}

Verdict vacuous(ClaimId c, std::string reason) {
    return make(c, VerdictStatus::Vacuous, std::move(reason));
}

Verdict undet(ClaimId c, std::string reason) {
    return make(c, VerdictStatus::Undetermined, std::move(reason));
}

void set_fail(Verdict& v, std::string description) {
    v.status = VerdictStatus::Fails;
    v.witness = VerdictWitness{std::move(description), {}, {}};
}

bool novikov_gate(const Algebra& a) { return check_novikov(a).is_novikov; }

// mul(u, w) = mul(w, u) on all basis pairs of s
bool commutes_on(const Algebra& a, const Subspace& s) {
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = i + 1; j < s.dim(); ++j)
            if (a.mul(s.basis_row(i), s.basis_row(j)) != a.mul(s.basis_row(j), s.basis_row(i)))
                return false;
    return true;
}

// v is contained in i and closed under multiplication by i on both sides,
// i.e. a two-sided ideal of the subalgebra i written in A coordinates.
bool is_ideal_of_subalgebra(const Algebra& a, const Subspace& i, const Subspace& v) {
    if (!subspace_leq(v, i)) return false;
    for (std::size_t b = 0; b < v.dim(); ++b) {
        const Vec row = v.basis_row(b);
        for (std::size_t k = 0; k < i.dim(); ++k) {
            const Vec ik = i.basis_row(k);
            if (!v.contains(a.mul(ik, row)) || !v.contains(a.mul(row, ik))) return false;
        }
    }
    return true;
}

// span{ mul(u, x) : u basis of m }
Subspace right_translate(const Algebra& a, const Subspace& m, const Vec& x) {
    std::vector<Vec> prods;
    prods.reserve(m.dim());
    for (std::size_t b = 0; b < m.dim(); ++b) prods.push_back(a.mul(m.basis_row(b), x));
    return Subspace::span(a.field(), a.dim(), prods);
}

// span{ mul(x, u) : u basis of m }
Subspace left_translate(const Algebra& a, const Vec& x, const Subspace& m) {
    std::vector<Vec> prods;
    prods.reserve(m.dim());
    for (std::size_t b = 0; b < m.dim(); ++b) prods.push_back(a.mul(x, m.basis_row(b)));
    return Subspace::span(a.field(), a.dim(), prods);
}

std::string dim_str(const Subspace& s) { return "dim " + std::to_string(s.dim()); }

} // namespace

Verdict check_L1(const Algebra& a) {
    if (!novikov_gate(a)) return vacuous(ClaimId::L1, "not a Novikov algebra");
    Subspace n = nucleus(a);
    if (n.dim() == 0) return vacuous(ClaimId::L1, "nucleus is zero");
    Verdict v = make(ClaimId::L1, VerdictStatus::Holds, "nucleus " + dim_str(n), 1);
    v.instance.subspaces.emplace_back("N", n);
    IdentityReport r = check_identity(a, IdentityId::Lemma1Eq6, n);
    if (!r.holds) {
        set_fail(v, "nucleus absorption expression " + r.witness->expression + " is nonzero");
        v.witness->vectors.emplace_back("defect", r.witness->defect);
    }
    return v;
}

Verdict check_L2(const Algebra& a, const std::vector<Vec>& seeds) {
    if (!novikov_gate(a)) return vacuous(ClaimId::L2, "not a Novikov algebra");
    Verdict v = make(ClaimId::L2, VerdictStatus::Holds, "", 0);
    std::size_t k = 0;
    for (const Vec& s : seeds) {
        const std::string tag = "seed" + std::to_string(k++);
        v.instance.vectors.emplace_back(tag, s);
        IdealHandle left = ideal_closure(a, Subspace::span(a.field(), a.dim(), {s}),
                                         Sidedness::LeftIdeal);
        Subspace al = ann_left(a, left.space);
        if (auto viol = ideal_violation(a, al, Sidedness::TwoSided)) {
            set_fail(v, "Ann_l of the left ideal from " + tag + " is not a two-sided ideal");
            v.witness->subspaces.emplace_back("L", left.space);
            v.witness->subspaces.emplace_back("Ann_l(L)", al);
            return v;
        }
        IdealHandle two = ideal_closure(a, Subspace::span(a.field(), a.dim(), {s}),
                                        Sidedness::TwoSided);
        Subspace ar = ann_right(a, two.space);
        if (auto viol = ideal_violation(a, ar, Sidedness::LeftIdeal)) {
            set_fail(v, "Ann_r of the ideal from " + tag + " is not a left ideal");
            v.witness->subspaces.emplace_back("I", two.space);
            v.witness->subspaces.emplace_back("Ann_r(I)", ar);
            return v;
        }
        if (!left.space.is_zero() || !two.space.is_zero()) ++v.instances_exercised;
    }
    return v;
}

Verdict check_L3(const Algebra& a) {
    if (!novikov_gate(a)) return vacuous(ClaimId::L3, "not a Novikov algebra");
    Subspace n = nucleus(a);
    Subspace k = commutative_center(a);
    Subspace z = center(a);
    Verdict v = make(ClaimId::L3, VerdictStatus::Holds,
                     "N " + dim_str(n) + ", K " + dim_str(k) + ", Z " + dim_str(z), 1);
    v.instance.subspaces.emplace_back("N", n);
    v.instance.subspaces.emplace_back("K", k);
    v.instance.subspaces.emplace_back("Z", z);
    if (ideal_violation(a, n, Sidedness::TwoSided)) {
        set_fail(v, "N(A) is not a two-sided ideal");
        v.witness->subspaces.emplace_back("N", n);
    } else if (ideal_violation(a, z, Sidedness::TwoSided)) {
        set_fail(v, "Z(A) is not a two-sided ideal");
        v.witness->subspaces.emplace_back("Z", z);
    } else if (k != z) {
        set_fail(v, "K(A) differs from Z(A)");
        v.witness->subspaces.emplace_back("K", k);
        v.witness->subspaces.emplace_back("Z", z);
    }
    return v;
}

Verdict check_T1(const Algebra& a) {
    if (!novikov_gate(a)) return vacuous(ClaimId::T1, "not a Novikov algebra");
    IdealHandle d = associator_ideal(a);
    if (d.space.is_zero()) return vacuous(ClaimId::T1, "associative (D(A) = 0)");
    Decision p = is_prime(a);
    if (p.status == DecisionStatus::Undetermined)
        return undet(ClaimId::T1, "primeness undetermined: " + p.certificate);
    if (p.status == DecisionStatus::No) return vacuous(ClaimId::T1, "not prime");
    Subspace n = nucleus(a);
    Subspace z = center(a);
    Verdict v = make(ClaimId::T1, VerdictStatus::Holds, "prime nonassociative", 1);
    v.instance.subspaces.emplace_back("D", d.space);
    if (!n.is_zero() || !z.is_zero()) {
        set_fail(v, "prime nonassociative algebra with nonzero nucleus or center");
        v.witness->subspaces.emplace_back("N", n);
        v.witness->subspaces.emplace_back("Z", z);
    }
    return v;
}

Verdict check_L4_structural(const Algebra& a, const IdealHandle& i, const Subspace& v) {
    if (!novikov_gate(a)) return vacuous(ClaimId::L4, "not a Novikov algebra");
    if (ideal_violation(a, i.space, Sidedness::TwoSided))
        throw input_error("check_L4: i is not a two-sided ideal");
    if (!is_ideal_of_subalgebra(a, i.space, v))
        return vacuous(ClaimId::L4, "V is not an ideal of I");
    if (!subspace_product(a, v, v).is_zero()) return vacuous(ClaimId::L4, "V*V != 0");

    Verdict out = make(ClaimId::L4, VerdictStatus::Holds,
                       "I " + dim_str(i.space) + ", V " + dim_str(v),
                       v.dim() > 0 ? 1 : 0);
    out.instance.subspaces.emplace_back("I", i.space);
    out.instance.subspaces.emplace_back("V", v);

    // degenerate products: (VI)V and the associator blocks (V,V,I), (V,I,V),
    // (I,V,V) all vanish when V is a square-zero ideal of I
    Subspace vi = subspace_product(a, v, i.space);
    if (!subspace_product(a, vi, v).is_zero()) {
        set_fail(out, "(VI)V != 0");
        return out;
    }
    for (std::size_t x = 0; x < v.dim(); ++x)
        for (std::size_t y = 0; y < v.dim(); ++y)
            for (std::size_t w = 0; w < i.space.dim(); ++w) {
                const Vec vx = v.basis_row(x), vy = v.basis_row(y), iw = i.space.basis_row(w);
                if (!is_zero_vec(a.associator(vx, vy, iw)) ||
                    !is_zero_vec(a.associator(vx, iw, vy)) ||
                    !is_zero_vec(a.associator(iw, vx, vy))) {
                    set_fail(out, "an associator block of the square-zero ideal is nonzero");
                    return out;
                }
            }

    const Subspace full = Subspace::full(a.field(), a.dim());
    Subspace av = subspace_product(a, full, v);
    Subspace va = subspace_product(a, v, full);
    Subspace av_v = subspace_sum(av, v);
    Subspace va_v = subspace_sum(va, v);

    struct Containment {
        const char* label;
        bool ok;
    };
    const Containment cs[] = {
        {"(AV)I in V", subspace_leq(subspace_product(a, av, i.space), v)},
        {"I(AV) in AV+V", subspace_leq(subspace_product(a, i.space, av), av_v)},
        {"I(VA) in VA+V", subspace_leq(subspace_product(a, i.space, va), va_v)},
        {"(VA)I in VA", subspace_leq(subspace_product(a, va, i.space), va)},
    };
    for (const auto& c : cs)
        if (!c.ok) {
            set_fail(out, std::string("containment failed: ") + c.label);
            return out;
        }
    if (!subspace_leq(av_v, i.space) || !is_ideal_of_subalgebra(a, i.space, av_v)) {
        set_fail(out, "AV+V is not an ideal of I");
        out.witness->subspaces.emplace_back("AV+V", av_v);
        return out;
    }
    if (!subspace_leq(va_v, i.space) || !is_ideal_of_subalgebra(a, i.space, va_v)) {
        set_fail(out, "VA+V is not an ideal of I");
        out.witness->subspaces.emplace_back("VA+V", va_v);
        return out;
    }

    // triviality only under the lemma's semiprimeness hypothesis
    Decision sp = is_semiprime(a);
    if (sp.status == DecisionStatus::Yes) {
        out.context += "; semiprime certified, triviality checked";
        if (!subspace_product(a, av_v, av_v).is_zero() ||
            !subspace_product(a, va_v, va_v).is_zero()) {
            set_fail(out, "AV+V or VA+V is not trivial despite semiprimeness");
            return out;
        }
    } else {
        out.context += "; semiprimeness not certified, triviality sub-check skipped";
    }
    return out;
}

std::vector<Verdict> check_L5(const Algebra& a, const IdealHandle& i, const Subspace& m,
                              const Vec& x) {
    const ClaimId ids[] = {ClaimId::L5a, ClaimId::L5b, ClaimId::L5c, ClaimId::L5d, ClaimId::L5e};
    std::vector<Verdict> out;
    if (!novikov_gate(a)) {
        for (ClaimId id : ids) out.push_back(vacuous(id, "not a Novikov algebra"));
        return out;
    }
    if (ideal_violation(a, i.space, Sidedness::TwoSided))
        throw input_error("check_L5: i is not a two-sided ideal");
    if (!is_ideal_of_subalgebra(a, i.space, m)) {
        for (ClaimId id : ids) out.push_back(vacuous(id, "M is not an ideal of I"));
        return out;
    }

    const std::size_t exercised = m.dim() > 0 ? 1 : 0;
    const std::string ctx = "I " + dim_str(i.space) + ", M " + dim_str(m);
    auto fresh = [&](ClaimId id) {
        Verdict v = make(id, VerdictStatus::Holds, ctx, exercised);
        v.instance.subspaces.emplace_back("I", i.space);
        v.instance.subspaces.emplace_back("M", m);
        v.instance.vectors.emplace_back("x", x);
        return v;
    };

    const Subspace full = Subspace::full(a.field(), a.dim());
    Subspace ma = right_translate(a, m, x); // M x
    Subspace am = left_translate(a, x, m);  // x M
    Subspace i2 = subspace_product(a, i.space, i.space);
    Subspace mA = subspace_product(a, m, full);
    Subspace Am = subspace_product(a, full, m);

    // a) Ma+M and aM+M are ideals of I
    Verdict va = fresh(ClaimId::L5a);
    Subspace ma_m = subspace_sum(ma, m);
    Subspace am_m = subspace_sum(am, m);
    if (!subspace_leq(ma_m, i.space) || !is_ideal_of_subalgebra(a, i.space, ma_m)) {
        set_fail(va, "Ma+M is not an ideal of I");
        va.witness->subspaces.emplace_back("Ma+M", ma_m);
    } else if (!subspace_leq(am_m, i.space) || !is_ideal_of_subalgebra(a, i.space, am_m)) {
        set_fail(va, "aM+M is not an ideal of I");
        va.witness->subspaces.emplace_back("aM+M", am_m);
    }
    out.push_back(std::move(va));

    // b) (MA)I^2 in M
    Verdict vb = fresh(ClaimId::L5b);
    if (!subspace_leq(subspace_product(a, mA, i2), m)) set_fail(vb, "(MA)I^2 escapes M");
    out.push_back(std::move(vb));

    // c) (Ma)^2 (Ma)^2 in M
    Verdict vc = fresh(ClaimId::L5c);
    Subspace ma2 = subspace_product(a, ma, ma);
    if (!subspace_leq(subspace_product(a, ma2, ma2), m)) set_fail(vc, "(Ma)^2(Ma)^2 escapes M");
    out.push_back(std::move(vc));

    // d) (AM)I^2 in M
    Verdict vd = fresh(ClaimId::L5d);
    if (!subspace_leq(subspace_product(a, Am, i2), m)) set_fail(vd, "(AM)I^2 escapes M");
    out.push_back(std::move(vd));

    // e) (aM)^2 (aM)^2 in M
    Verdict ve = fresh(ClaimId::L5e);
    Subspace am2 = subspace_product(a, am, am);
    if (!subspace_leq(subspace_product(a, am2, am2), m)) set_fail(ve, "(aM)^2(aM)^2 escapes M");
    out.push_back(std::move(ve));
    return out;
}

Verdict check_L6(const Algebra& a, const IdealHandle& i, const Subspace& m) {
    if (!novikov_gate(a)) return vacuous(ClaimId::L6, "not a Novikov algebra");
    if (ideal_violation(a, i.space, Sidedness::TwoSided))
        throw input_error("check_L6: i is not a two-sided ideal");
    if (!is_ideal_of_subalgebra(a, i.space, m))
        return vacuous(ClaimId::L6, "M is not an ideal of I");

    SubalgebraResult sub = subalgebra_as_algebra(a, i);
    std::vector<Vec> m_rows;
    for (std::size_t r = 0; r < m.dim(); ++r)
        m_rows.push_back(restrict_vector(sub, m.basis_row(r)));
    Subspace m_in_i = Subspace::span(a.field(), sub.algebra.dim(), m_rows);
    QuotientResult q =
        quotient(sub.algebra, certify_ideal(sub.algebra, m_in_i, Sidedness::TwoSided));
    Decision sp = is_semiprime(q.algebra);
    if (sp.status == DecisionStatus::Undetermined)
        return undet(ClaimId::L6, "semiprimeness of I/M undetermined: " + sp.certificate);
    if (sp.status == DecisionStatus::No) return vacuous(ClaimId::L6, "I/M is not semiprime");

    Verdict v = make(ClaimId::L6, VerdictStatus::Holds,
                     "I " + dim_str(i.space) + ", M " + dim_str(m) + ", I/M semiprime", 1);
    v.instance.subspaces.emplace_back("I", i.space);
    v.instance.subspaces.emplace_back("M", m);
    if (ideal_violation(a, m, Sidedness::TwoSided)) {
        set_fail(v, "M is not a two-sided ideal of A although I/M is semiprime");
        v.witness->subspaces.emplace_back("M", m);
    }
    return v;
}

Verdict check_L7(const Algebra& a, const IdealHandle& l) {
    if (!novikov_gate(a)) return vacuous(ClaimId::L7, "not a Novikov algebra");
    if (l.sidedness == Sidedness::RightIdeal)
        throw input_error("check_L7: expected a left (or two-sided) ideal");
    if (ideal_violation(a, l.space, Sidedness::LeftIdeal))
        throw input_error("check_L7: l is not a left ideal");
    const std::size_t n = a.dim(), r = l.space.dim();
    // M = {x in L : x e_j in L for all j}; parametrize x by its coefficients
    // in the basis of L and solve the reduction residual system
    KernelBuilder kb(a.field(), r);
    for (std::size_t j = 0; j < n && !kb.saturated(); ++j) {
        std::vector<Vec> residuals;
        residuals.reserve(r);
        for (std::size_t b = 0; b < r; ++b)
            residuals.push_back(l.space.reduce(a.mul_basis_right(l.space.basis_row(b), j)));
        for (std::size_t c = 0; c < n; ++c) {
            Vec row = zero_vec(a.field(), r);
            for (std::size_t b = 0; b < r; ++b) row[b] = residuals[b][c];
            kb.add(std::move(row));
        }
    }
    Subspace coeffs = kb.solve();
    std::vector<Vec> m_rows;
    for (std::size_t b = 0; b < coeffs.dim(); ++b) {
        Vec x = zero_vec(a.field(), n);
        const Vec t = coeffs.basis_row(b);
        for (std::size_t k = 0; k < r; ++k) add_scaled(x, t[k], l.space.basis_row(k));
        m_rows.push_back(std::move(x));
    }
    Subspace m = Subspace::span(a.field(), n, m_rows);

    Verdict v = make(ClaimId::L7, VerdictStatus::Holds,
                     "L " + dim_str(l.space) + ", M " + dim_str(m), r > 0 ? 1 : 0);
    v.instance.subspaces.emplace_back("L", l.space);
    v.instance.subspaces.emplace_back("M", m);
    if (ideal_violation(a, m, Sidedness::TwoSided)) {
        set_fail(v, "M = {x in L : xA in L} is not a two-sided ideal");
        v.witness->subspaces.emplace_back("M", m);
    }
    return v;
}

Verdict check_T2(const Algebra& a) {
    Decision sp = is_semiprime(a);
    if (sp.status == DecisionStatus::Undetermined)
        return undet(ClaimId::T2, "semiprimeness undetermined: " + sp.certificate);
    if (sp.status == DecisionStatus::No) return vacuous(ClaimId::T2, "not semiprime");
    if (!enumeration_within_caps(a.field(), a.dim()))
        return undet(ClaimId::T2, "semiprime, but ideals exceed the enumeration cap");
    Verdict v = make(ClaimId::T2, VerdictStatus::Holds, "semiprime, ideals enumerated", 0);
    for (const IdealHandle& i : enumerate_ideals(a)) {
        ++v.instances_exercised;
        SubalgebraResult sub = subalgebra_as_algebra(a, i);
        if (is_semiprime(sub.algebra).status != DecisionStatus::Yes) {
            set_fail(v, "ideal of a semiprime algebra is not semiprime");
            v.witness->subspaces.emplace_back("I", i.space);
            return v;
        }
    }
    return v;
}

Verdict check_T3(const Algebra& a) {
    Decision p = is_prime(a);
    if (p.status == DecisionStatus::Undetermined)
        return undet(ClaimId::T3, "primeness undetermined: " + p.certificate);
    if (p.status == DecisionStatus::No) return vacuous(ClaimId::T3, "not prime");
    if (!enumeration_within_caps(a.field(), a.dim()))
        return undet(ClaimId::T3, "prime, but ideals exceed the enumeration cap");
    Verdict v = make(ClaimId::T3, VerdictStatus::Holds, "prime, ideals enumerated", 0);
    for (const IdealHandle& i : enumerate_ideals(a)) {
        if (i.space.is_zero()) continue;
        ++v.instances_exercised;
        SubalgebraResult sub = subalgebra_as_algebra(a, i);
        if (is_prime(sub.algebra).status != DecisionStatus::Yes) {
            set_fail(v, "nonzero ideal of a prime algebra is not prime");
            v.witness->subspaces.emplace_back("I", i.space);
            return v;
        }
    }
    return v;
}

Verdict check_T4(const Algebra& a) {
    if (a.dim() == 0) return vacuous(ClaimId::T4, "zero algebra has no minimal ideals");
    MinimalIdealsResult mins = minimal_ideals(a);
    if (!mins.exact) return undet(ClaimId::T4, "minimal ideals are heuristic over Q");
    Verdict v = make(ClaimId::T4, VerdictStatus::Holds,
                     std::to_string(mins.ideals.size()) + " minimal ideals", 0);
    for (const IdealHandle& m : mins.ideals) {
        ++v.instances_exercised;
        if (subspace_product(a, m.space, m.space).is_zero()) continue;
        SubalgebraResult sub = subalgebra_as_algebra(a, m);
        if (is_simple(sub.algebra).status != DecisionStatus::Yes) {
            set_fail(v, "minimal ideal with nonzero square is not simple");
            v.witness->subspaces.emplace_back("I", m.space);
            return v;
        }
    }
    return v;
}

Verdict check_C1(const Algebra& a) {
    BaerChain chain = baer_radical(a);
    Verdict v = make(ClaimId::C1, VerdictStatus::Holds,
                     "chain length " + std::to_string(chain.stages.size()), 1);
    for (std::size_t s = 0; s < chain.stages.size(); ++s)
        v.instance.subspaces.emplace_back("B" + std::to_string(s), chain.stages[s].space);
    for (std::size_t s = 1; s < chain.stages.size(); ++s)
        if (chain.stages[s].space.dim() <= chain.stages[s - 1].space.dim()) {
            set_fail(v, "radical chain is not strictly increasing");
            return v;
        }
    if (a.field().is_rationals())
        return undet(ClaimId::C1, "radical chain over Q is heuristic (not certified)");
    QuotientResult q = quotient(a, chain.radical());
    if (is_semiprime(q.algebra).status != DecisionStatus::Yes) {
        set_fail(v, "quotient by the radical is not certified semiprime");
        return v;
    }
    if (enumeration_within_caps(a.field(), a.dim())) {
        for (const IdealHandle& i : enumerate_ideals(a)) {
            if (!subspace_product(a, i.space, i.space).is_zero()) continue;
            if (!subspace_leq(i.space, chain.radical().space)) {
                set_fail(v, "a trivial ideal escapes the radical");
                v.witness->subspaces.emplace_back("I", i.space);
                return v;
            }
        }
        v.context += "; radical contains every enumerated trivial ideal";
    }
    return v;
}

std::vector<Verdict> check_L8_C2_C3(const Algebra& a) {
    std::vector<Verdict> out;
    if (!novikov_gate(a)) {
        for (ClaimId id :
             {ClaimId::L8, ClaimId::C2, ClaimId::C3, ClaimId::NovikovCommAssoc})
            out.push_back(vacuous(id, "not a Novikov algebra"));
        return out;
    }

    // candidate commutative ideals H with H^2 = H
    std::vector<Subspace> idempotent_comm;
    bool candidates_exact = false;
    if (enumeration_within_caps(a.field(), a.dim())) {
        candidates_exact = true;
        for (const IdealHandle& h : enumerate_ideals(a)) {
            if (h.space.is_zero()) continue;
            if (!commutes_on(a, h.space)) continue;
            if (subspace_product(a, h.space, h.space) != h.space) continue;
            idempotent_comm.push_back(h.space);
        }
    }

    // L8
    {
        Verdict v = make(ClaimId::L8, VerdictStatus::Holds,
                         std::to_string(idempotent_comm.size()) +
                             " commutative idempotent ideals",
                         idempotent_comm.size());
        if (!candidates_exact) {
            v = vacuous(ClaimId::L8, "no candidate source (enumeration cap or infinite field)");
        } else if (idempotent_comm.empty()) {
            v = vacuous(ClaimId::L8, "no nonzero commutative ideal with H^2 = H");
        } else {
            Subspace n = nucleus(a);
            for (const Subspace& h : idempotent_comm)
                if (!subspace_leq(h, n)) {
                    set_fail(v, "commutative idempotent ideal escapes the nucleus");
                    v.witness->subspaces.emplace_back("H", h);
                    v.witness->subspaces.emplace_back("N", n);
                    break;
                }
            for (const Subspace& h : idempotent_comm)
                v.instance.subspaces.emplace_back("H", h);
        }
        out.push_back(std::move(v));
    }

    Decision p = is_prime(a);
    IdealHandle d = associator_ideal(a);

    // C2
    {
        Verdict v = make(ClaimId::C2, VerdictStatus::Holds, "prime nonassociative", 1);
        if (p.status == DecisionStatus::Undetermined)
            v = undet(ClaimId::C2, "primeness undetermined");
        else if (p.status == DecisionStatus::No)
            v = vacuous(ClaimId::C2, "not prime");
        else if (d.space.is_zero())
            v = vacuous(ClaimId::C2, "associative (D(A) = 0)");
        else if (!candidates_exact)
            v = undet(ClaimId::C2, "candidate ideals exceed the enumeration cap");
        else if (!idempotent_comm.empty()) {
            set_fail(v, "prime nonassociative algebra contains a commutative H = H^2");
            v.witness->subspaces.emplace_back("H", idempotent_comm.front());
        }
        out.push_back(std::move(v));
    }

    // C3
    {
        Verdict v = make(ClaimId::C3, VerdictStatus::Holds, "prime with commutative minimal ideal",
                         1);
        if (p.status == DecisionStatus::Undetermined)
            v = undet(ClaimId::C3, "primeness undetermined");
        else if (p.status == DecisionStatus::No)
            v = vacuous(ClaimId::C3, "not prime");
        else {
            MinimalIdealsResult mins = minimal_ideals(a);
            std::optional<Subspace> comm_min;
            for (const IdealHandle& m : mins.ideals)
                if (commutes_on(a, m.space)) {
                    comm_min = m.space;
                    break;
                }
            if (!comm_min)
                v = vacuous(ClaimId::C3, "no commutative minimal ideal");
            else {
                v.instance.subspaces.emplace_back("H", *comm_min);
                IdentityReport assoc = check_identity(a, IdentityId::Associativity);
                if (!assoc.holds) {
                    set_fail(v, "prime algebra with a commutative minimal ideal is not "
                                "associative");
                    v.witness->subspaces.emplace_back("H", *comm_min);
                    v.witness->vectors.emplace_back("defect", assoc.witness->defect);
                }
            }
        }
        out.push_back(std::move(v));
    }

    // commutative Novikov algebras are associative
    {
        Verdict v = make(ClaimId::NovikovCommAssoc, VerdictStatus::Holds, "commutative", 1);
        if (!check_identity(a, IdentityId::Commutativity).holds)
            v = vacuous(ClaimId::NovikovCommAssoc, "not commutative");
        else {
            IdentityReport assoc = check_identity(a, IdentityId::Associativity);
            if (!assoc.holds) {
                set_fail(v, "commutative Novikov algebra is not associative");
                v.witness->vectors.emplace_back("defect", assoc.witness->defect);
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

void record(SuiteReport& rep, const std::string& name, const Verdict& v) {
    ClaimStats& st = rep.stats[v.claim];
    switch (v.status) {
        case VerdictStatus::Holds: ++st.holds; break;
        case VerdictStatus::Fails: ++st.fails; break;
        case VerdictStatus::Vacuous: ++st.vacuous; break;
        case VerdictStatus::Undetermined: ++st.undetermined; break;
    }
    if (v.instances_exercised > 0 && v.status != VerdictStatus::Vacuous &&
        v.status != VerdictStatus::Undetermined)
        ++st.non_vacuous;
    if (v.status == VerdictStatus::Fails) rep.failures.emplace_back(name, v);
}

// Candidate two-sided ideals for instantiating L4/L5/L6.
std::vector<IdealHandle> ideal_candidates(const Algebra& a) {
    std::vector<IdealHandle> out;
    auto add = [&](IdealHandle h) {
        if (h.space.is_zero()) return;
        for (const auto& prev : out)
            if (prev.space == h.space) return;
        out.push_back(std::move(h));
    };
    if (enumeration_within_caps(a.field(), a.dim())) {
        std::vector<IdealHandle> all = enumerate_ideals(a);
        // proper nonzero ideals first, the full space last
        for (const IdealHandle& h : all)
            if (!h.space.is_zero() && h.space.dim() < a.dim() && out.size() < 3) add(h);
        for (const IdealHandle& h : all)
            if (h.space.dim() == a.dim()) add(h);
    } else {
        if (a.dim() > 0)
            add(ideal_closure(a, Subspace::span(a.field(), a.dim(),
                                                {unit_vec(a.field(), a.dim(), 0)}),
                              Sidedness::TwoSided));
        add(associator_ideal(a));
        add(IdealHandle{Subspace::full(a.field(), a.dim()), Sidedness::TwoSided});
    }
    return out;
}

// Sub-ideals of the subalgebra i (in A coordinates), capped.
std::vector<Subspace> subideal_candidates(const Algebra& a, const IdealHandle& i,
                                          std::size_t cap) {
    std::vector<Subspace> out;
    auto add = [&](const Subspace& s) {
        if (out.size() >= cap) return;
        for (const auto& prev : out)
            if (prev == s) return;
        out.push_back(s);
    };
    SubalgebraResult sub = subalgebra_as_algebra(a, i);
    if (enumeration_within_caps(a.field(), sub.algebra.dim())) {
        for (const IdealHandle& h : enumerate_ideals(sub.algebra)) {
            if (h.space.is_zero()) continue;
            std::vector<Vec> rows;
            for (std::size_t r = 0; r < h.space.dim(); ++r)
                rows.push_back(include_vector(sub, h.space.basis_row(r)));
            add(Subspace::span(a.field(), a.dim(), rows));
        }
    } else {
        Decision sp = is_semiprime(sub.algebra);
        if (sp.status == DecisionStatus::No && sp.witness)
            for (const Subspace& w : sp.witness->ideals) {
                std::vector<Vec> rows;
                for (std::size_t r = 0; r < w.dim(); ++r)
                    rows.push_back(include_vector(sub, w.basis_row(r)));
                add(Subspace::span(a.field(), a.dim(), rows));
            }
        add(i.space);
    }
    return out;
}

} // namespace

SuiteReport run_suite(const std::vector<CorpusEntry>& entries, std::uint64_t seed) {
    SuiteReport rep;
    for (std::size_t idx = 0; idx < entries.size(); ++idx) {
        const CorpusEntry& entry = entries[idx];
        ++rep.algebras;
        if (!entry.novikov) continue; // labeled negatives never enter the suite
        ++rep.novikov_algebras;
        const Algebra& a = entry.algebra;
        const std::size_t n = a.dim();
        Rng rng(seed + 0x9e3779b97f4a7c15ULL * (idx + 1));
        auto random_vec = [&]() {
            Vec v = zero_vec(a.field(), n);
            for (auto& x : v) x = rng.scalar(a.field());
            return v;
        };

        record(rep, entry.name, check_L1(a));
        record(rep, entry.name, check_L3(a));
        {
            std::vector<Vec> seeds;
            if (n > 0) {
                seeds.push_back(unit_vec(a.field(), n, 0));
                seeds.push_back(random_vec());
                seeds.push_back(random_vec());
            }
            record(rep, entry.name, check_L2(a, seeds));
        }
        if (n > 0) {
            record(rep, entry.name,
                   check_L7(a, ideal_closure(a,
                                             Subspace::span(a.field(), n,
                                                            {unit_vec(a.field(), n, 0)}),
                                             Sidedness::LeftIdeal)));
            record(rep, entry.name,
                   check_L7(a, ideal_closure(a, Subspace::span(a.field(), n, {random_vec()}),
                                             Sidedness::LeftIdeal)));
        }
        record(rep, entry.name, check_T1(a));
        record(rep, entry.name, check_T2(a));
        record(rep, entry.name, check_T3(a));
        record(rep, entry.name, check_T4(a));
        record(rep, entry.name, check_C1(a));
        for (const Verdict& v : check_L8_C2_C3(a)) record(rep, entry.name, v);

        for (const IdealHandle& i : ideal_candidates(a)) {
            std::vector<Subspace> subideals = subideal_candidates(a, i, 3);
            for (const Subspace& v : subideals)
                if (subspace_product(a, v, v).is_zero())
                    record(rep, entry.name, check_L4_structural(a, i, v));
            const Vec x = n > 0 ? unit_vec(a.field(), n, n - 1) : zero_vec(a.field(), 0);
            for (const Subspace& m : subideals)
                for (const Verdict& v : check_L5(a, i, m, x)) record(rep, entry.name, v);
            // L6 with M = 0, M = I and the enumerated sub-ideals
            record(rep, entry.name, check_L6(a, i, Subspace::zero(a.field(), n)));
            record(rep, entry.name, check_L6(a, i, i.space));
            for (const Subspace& m : subideals)
                if (m != i.space) record(rep, entry.name, check_L6(a, i, m));
        }
    }
    return rep;
}

namespace {

const Subspace& named_subspace(const VerdictInstance& inst, const std::string& name) {
    for (const auto& [k, s] : inst.subspaces)
        if (k == name) return s;
    throw input_error("witness instance lacks subspace '" + name + "'");
}

const Vec& named_vector(const VerdictInstance& inst, const std::string& name) {
    for (const auto& [k, v] : inst.vectors)
        if (k == name) return v;
    throw input_error("witness instance lacks vector '" + name + "'");
}

} // namespace

Verdict rerun_check(ClaimId claim, const Algebra& a, const VerdictInstance& instance) {
    switch (claim) {
        case ClaimId::L1: return check_L1(a);
        case ClaimId::L3: return check_L3(a);
        case ClaimId::T1: return check_T1(a);
        case ClaimId::T2: return check_T2(a);
        case ClaimId::T3: return check_T3(a);
        case ClaimId::T4: return check_T4(a);
        case ClaimId::C1: return check_C1(a);
        case ClaimId::L2: {
            std::vector<Vec> seeds;
            for (const auto& [k, v] : instance.vectors) seeds.push_back(v);
            return check_L2(a, seeds);
        }
        case ClaimId::L4:
            return check_L4_structural(
                a, certify_ideal(a, named_subspace(instance, "I"), Sidedness::TwoSided),
                named_subspace(instance, "V"));
        case ClaimId::L5a:
        case ClaimId::L5b:
        case ClaimId::L5c:
        case ClaimId::L5d:
        case ClaimId::L5e: {
            auto verdicts = check_L5(
                a, certify_ideal(a, named_subspace(instance, "I"), Sidedness::TwoSided),
                named_subspace(instance, "M"), named_vector(instance, "x"));
            for (Verdict& v : verdicts)
                if (v.claim == claim) return v;
            throw error("check_L5 did not produce the requested sub-claim");
        }
        case ClaimId::L6:
            return check_L6(a,
                            certify_ideal(a, named_subspace(instance, "I"), Sidedness::TwoSided),
                            named_subspace(instance, "M"));
        case ClaimId::L7:
            return check_L7(
                a, certify_ideal(a, named_subspace(instance, "L"), Sidedness::LeftIdeal));
        case ClaimId::L8:
        case ClaimId::C2:
        case ClaimId::C3:
        case ClaimId::NovikovCommAssoc: {
            for (Verdict& v : check_L8_C2_C3(a))
                if (v.claim == claim) return v;
            throw error("combined check did not produce the requested claim");
        }
    }
    throw error("unknown claim");
}

} // namespace novikov
