#include "novikov/identities.hpp"

namespace novikov {

std::string identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::RightSym1: return "RightSym1";
        case IdentityId::RightComm2: return "RightComm2";
        case IdentityId::Derived3: return "Derived3";
        case IdentityId::Lemma1Eq6: return "Lemma1Eq6";
        case IdentityId::Associativity: return "Associativity";
        case IdentityId::Commutativity: return "Commutativity";
    }
    return "?";
}

namespace {

IdentityReport holds_report(IdentityId id) {
    return IdentityReport{id, true, std::nullopt};
}

IdentityReport fail_report(IdentityId id, std::vector<std::size_t> idx, Vec defect,
                           std::string expr) {
    return IdentityReport{id, false,
                          IdentityWitness{std::move(idx), std::move(defect), std::move(expr)}};
}

IdentityReport check_triple_identity(const Algebra& a, IdentityId id) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec defect;
                switch (id) {
                    case IdentityId::RightSym1:
                        defect = vec_sub(a.associator_basis(i, j, k), a.associator_basis(j, i, k));
                        break;
                    case IdentityId::RightComm2:
                        defect = vec_sub(a.mul_basis_right(a.table(i, j), k),
                                         a.mul_basis_right(a.table(i, k), j));
                        break;
                    case IdentityId::Associativity:
                        defect = a.associator_basis(i, j, k);
                        break;
                    default:
                        throw error("not a triple identity");
                }
                if (!is_zero_vec(defect)) {
                    const char* expr = id == IdentityId::RightSym1 ? "(a,b,c)-(b,a,c)"
                                       : id == IdentityId::RightComm2 ? "(ab)c-(ac)b"
                                                                      : "(a,b,c)";
                    return fail_report(id, {i, j, k}, std::move(defect), expr);
                }
            }
    return holds_report(id);
}

IdentityReport check_commutativity(const Algebra& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec defect = vec_sub(a.table(i, j), a.table(j, i));
            if (!is_zero_vec(defect))
                return fail_report(IdentityId::Commutativity, {i, j}, std::move(defect), "ab-ba");
        }
    return holds_report(IdentityId::Commutativity);
}

IdentityReport check_derived3(const Algebra& a) {
    const std::size_t n = a.dim();
    std::vector<Vec> units;
    units.reserve(n);
    for (std::size_t i = 0; i < n; ++i) units.push_back(unit_vec(a.field(), n, i));
    // quadruple (i,j,k,l) plays (a,b,c,d)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Vec lhs = a.associator(a.table(i, l), units[j], units[k]);
                    Vec mid = a.associator(units[i], a.table(j, l), units[k]);
                    Vec d1 = vec_sub(lhs, mid);
                    if (!is_zero_vec(d1))
                        return fail_report(IdentityId::Derived3, {i, j, k, l}, std::move(d1),
                                           "(ad,b,c)-(a,bd,c)");
                    Vec rhs = a.mul_basis_right(a.associator_basis(i, j, k), l);
                    Vec d2 = vec_sub(mid, rhs);
                    if (!is_zero_vec(d2))
                        return fail_report(IdentityId::Derived3, {i, j, k, l}, std::move(d2),
                                           "(a,bd,c)-(a,b,c)d");
                }
    return holds_report(IdentityId::Derived3);
}

IdentityReport check_lemma1_eq6(const Algebra& a, const Subspace& nucleus) {
    if (nucleus.ambient_dim() != a.dim() || nucleus.field() != a.field())
        throw input_error("nucleus does not match the algebra");
    const std::size_t n = a.dim();
    std::vector<Vec> units;
    units.reserve(n);
    for (std::size_t i = 0; i < n; ++i) units.push_back(unit_vec(a.field(), n, i));
    for (std::size_t nb = 0; nb < nucleus.dim(); ++nb) {
        const Vec nv = nucleus.basis_row(nb);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    const Vec assoc = a.associator_basis(i, j, k);
                    struct Expr {
                        const char* label;
                        Vec value;
                    };
                    const Expr exprs[] = {
                        {"n(x,y,z)", a.mul(nv, assoc)},
                        {"(nx,y,z)", a.associator(a.mul(nv, units[i]), units[j], units[k])},
                        {"(xn,y,z)", a.associator(a.mul(units[i], nv), units[j], units[k])},
                        {"(x,yn,z)", a.associator(units[i], a.mul(units[j], nv), units[k])},
                        {"(x,ny,z)", a.associator(units[i], a.mul(nv, units[j]), units[k])},
                        {"(x,y,nz)", a.associator(units[i], units[j], a.mul(nv, units[k]))},
                        {"(x,y,zn)", a.associator(units[i], units[j], a.mul(units[k], nv))},
                        {"(x,y,z)n", a.mul(assoc, nv)},
                    };
                    for (const auto& e : exprs)
                        if (!is_zero_vec(e.value))
                            return fail_report(IdentityId::Lemma1Eq6, {nb, i, j, k}, e.value,
                                               e.label);
                }
    }
    return holds_report(IdentityId::Lemma1Eq6);
}

} // namespace

IdentityReport check_identity(const Algebra& a, IdentityId which) {
    switch (which) {
        case IdentityId::RightSym1:
        case IdentityId::RightComm2:
        case IdentityId::Associativity:
            return check_triple_identity(a, which);
        case IdentityId::Commutativity:
            return check_commutativity(a);
        case IdentityId::Derived3:
            return check_derived3(a);
        case IdentityId::Lemma1Eq6:
            throw input_error("Lemma1Eq6 requires the nucleus; use the overload taking a Subspace");
    }
    throw error("unknown identity");
}

IdentityReport check_identity(const Algebra& a, IdentityId which, const Subspace& nucleus) {
    if (which != IdentityId::Lemma1Eq6) return check_identity(a, which);
    return check_lemma1_eq6(a, nucleus);
}

NovikovReport check_novikov(const Algebra& a) {
    NovikovReport r;
    r.reports.push_back(check_identity(a, IdentityId::RightSym1));
    r.reports.push_back(check_identity(a, IdentityId::RightComm2));
    r.is_novikov = r.reports[0].holds && r.reports[1].holds;
    return r;
}

} // namespace novikov
