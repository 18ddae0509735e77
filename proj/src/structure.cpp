#include "novikov/structure.hpp"

namespace novikov {

std::string sidedness_name(Sidedness s) {
    switch (s) {
        case Sidedness::TwoSided: return "two-sided";
        case Sidedness::LeftIdeal: return "left";
        case Sidedness::RightIdeal: return "right";
    }
    return "?";
}

std::optional<IdealViolation> ideal_violation(const Algebra& a, const Subspace& s, Sidedness side) {
    if (s.ambient_dim() != a.dim() || s.field() != a.field())
        throw input_error("subspace does not match the algebra");
    const bool check_left = side != Sidedness::RightIdeal;  // A * s ⊆ s
    const bool check_right = side != Sidedness::LeftIdeal;  // s * A ⊆ s
    for (std::size_t b = 0; b < s.dim(); ++b) {
        const Vec row = s.basis_row(b);
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (check_left) {
                Vec p = a.mul_basis_left(i, row);
                if (!s.contains(p)) return IdealViolation{true, i, b, std::move(p)};
            }
            if (check_right) {
                Vec p = a.mul_basis_right(row, i);
                if (!s.contains(p)) return IdealViolation{false, i, b, std::move(p)};
            }
        }
    }
    return std::nullopt;
}

bool is_ideal(const Algebra& a, const Subspace& s, Sidedness side) {
    return !ideal_violation(a, s, side).has_value();
}

IdealHandle certify_ideal(const Algebra& a, const Subspace& s, Sidedness side) {
    if (auto v = ideal_violation(a, s, side)) {
        const std::string e = "e" + std::to_string(v->algebra_index + 1);
        const std::string b = "b" + std::to_string(v->basis_index + 1);
        throw input_error("subspace is not a " + sidedness_name(side) + " ideal: " +
                          (v->left_multiplication ? e + " * " + b : b + " * " + e) +
                          " escapes");
    }
    return IdealHandle{s, side};
}

Subspace nucleus(const Algebra& a) {
    const std::size_t n = a.dim();
    KernelBuilder kb(a.field(), n);
    // coefficient of x_l in (x,e_i,e_j), (e_i,x,e_j), (e_i,e_j,x) is the
    // corresponding basis associator; stream the three slot systems
    for (std::size_t i = 0; i < n && !kb.saturated(); ++i) {
        for (std::size_t j = 0; j < n && !kb.saturated(); ++j) {
            for (int slot = 0; slot < 3; ++slot) {
                std::vector<Vec> cols;
                cols.reserve(n);
                for (std::size_t l = 0; l < n; ++l) {
                    switch (slot) {
                        case 0: cols.push_back(a.associator_basis(l, i, j)); break;
                        case 1: cols.push_back(a.associator_basis(i, l, j)); break;
                        default: cols.push_back(a.associator_basis(i, j, l)); break;
                    }
                }
                for (std::size_t c = 0; c < n; ++c) {
                    Vec row = zero_vec(a.field(), n);
                    for (std::size_t l = 0; l < n; ++l) row[l] = cols[l][c];
                    kb.add(std::move(row));
                }
            }
        }
    }
    return kb.solve();
}

Subspace commutative_center(const Algebra& a) {
    const std::size_t n = a.dim();
    KernelBuilder kb(a.field(), n);
    for (std::size_t i = 0; i < n && !kb.saturated(); ++i) {
        // coefficient of x_l in [x, e_i] is [e_l, e_i]
        std::vector<Vec> cols;
        cols.reserve(n);
        for (std::size_t l = 0; l < n; ++l)
            cols.push_back(vec_sub(a.table(l, i), a.table(i, l)));
        for (std::size_t c = 0; c < n; ++c) {
            Vec row = zero_vec(a.field(), n);
            for (std::size_t l = 0; l < n; ++l) row[l] = cols[l][c];
            kb.add(std::move(row));
        }
    }
    return kb.solve();
}

Subspace center(const Algebra& a) {
    return subspace_intersect(nucleus(a), commutative_center(a));
}

Subspace associator_span(const Algebra& a) {
    const std::size_t n = a.dim();
    EchelonBasis e(a.field(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (e.rank() < n) e.insert(a.associator_basis(i, j, k));
    return Subspace::from_echelon(e);
}

IdealHandle associator_ideal(const Algebra& a) {
    return ideal_closure(a, associator_span(a), Sidedness::TwoSided);
}

Subspace ann_left(const Algebra& a, const Subspace& m) {
    if (m.ambient_dim() != a.dim() || m.field() != a.field())
        throw input_error("subspace does not match the algebra");
    const std::size_t n = a.dim();
    KernelBuilder kb(a.field(), n);
    for (std::size_t b = 0; b < m.dim() && !kb.saturated(); ++b) {
        const Vec mb = m.basis_row(b);
        // coefficient of x_l in x * m_b is e_l * m_b
        std::vector<Vec> cols;
        cols.reserve(n);
        for (std::size_t l = 0; l < n; ++l) cols.push_back(a.mul_basis_left(l, mb));
        for (std::size_t c = 0; c < n; ++c) {
            Vec row = zero_vec(a.field(), n);
            for (std::size_t l = 0; l < n; ++l) row[l] = cols[l][c];
            kb.add(std::move(row));
        }
    }
    return kb.solve();
}

Subspace ann_right(const Algebra& a, const Subspace& m) {
    if (m.ambient_dim() != a.dim() || m.field() != a.field())
        throw input_error("subspace does not match the algebra");
    const std::size_t n = a.dim();
    KernelBuilder kb(a.field(), n);
    for (std::size_t b = 0; b < m.dim() && !kb.saturated(); ++b) {
        const Vec mb = m.basis_row(b);
        std::vector<Vec> cols;
        cols.reserve(n);
        for (std::size_t l = 0; l < n; ++l) cols.push_back(a.mul_basis_right(mb, l));
        for (std::size_t c = 0; c < n; ++c) {
            Vec row = zero_vec(a.field(), n);
            for (std::size_t l = 0; l < n; ++l) row[l] = cols[l][c];
            kb.add(std::move(row));
        }
    }
    return kb.solve();
}

IdealHandle ideal_closure(const Algebra& a, const Subspace& s, Sidedness side) {
    if (s.ambient_dim() != a.dim() || s.field() != a.field())
        throw input_error("subspace does not match the algebra");
    const std::size_t n = a.dim();
    EchelonBasis e(a.field(), n);
    for (std::size_t i = 0; i < s.dim(); ++i) e.insert(s.basis_row(i));
    const bool close_left = side != Sidedness::RightIdeal;
    const bool close_right = side != Sidedness::LeftIdeal;
    bool changed = true;
    while (changed && e.rank() < n) {
        changed = false;
        const std::vector<Vec> snapshot = e.rows();
        if (close_left)
            for (const Vec& v : snapshot)
                for (std::size_t i = 0; i < n; ++i)
                    changed |= e.insert(a.mul_basis_left(i, v));
        if (close_right)
            for (const Vec& v : snapshot)
                for (std::size_t i = 0; i < n; ++i)
                    changed |= e.insert(a.mul_basis_right(v, i));
    }
    return IdealHandle{Subspace::from_echelon(e), side};
}

Subspace subspace_product(const Algebra& a, const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != a.dim() || v.ambient_dim() != a.dim() || u.field() != a.field() ||
        v.field() != a.field())
        throw input_error("subspace does not match the algebra");
    EchelonBasis e(a.field(), a.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) {
        const Vec ui = u.basis_row(i);
        for (std::size_t j = 0; j < v.dim(); ++j)
            if (e.rank() < a.dim()) e.insert(a.mul(ui, v.basis_row(j)));
    }
    return Subspace::from_echelon(e);
}

QuotientResult quotient(const Algebra& a, const IdealHandle& i) {
    if (i.sidedness != Sidedness::TwoSided)
        throw input_error("quotient requires a two-sided ideal");
    if (auto v = ideal_violation(a, i.space, Sidedness::TwoSided))
        throw input_error("quotient: handle subspace is not a two-sided ideal");
    const std::size_t n = a.dim();
    const Subspace& sp = i.space;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < sp.dim(); ++r) {
        std::size_t p = 0;
        while (sp.basis().at(r, p).is_zero()) ++p;
        is_pivot[p] = true;
    }
    std::vector<std::size_t> reps; // non-pivot coordinates carry the cosets
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) reps.push_back(c);
    const std::size_t q = reps.size();

    // projection row alpha reads coordinate reps[alpha] of the residual of v
    // after elimination against the ideal's canonical basis
    Matrix proj(a.field(), q, n);
    for (std::size_t c = 0; c < n; ++c) {
        Vec residual = sp.reduce(unit_vec(a.field(), n, c));
        for (std::size_t alpha = 0; alpha < q; ++alpha)
            proj.set(alpha, c, residual[reps[alpha]]);
    }

    std::vector<Vec> table;
    table.reserve(q * q);
    for (std::size_t alpha = 0; alpha < q; ++alpha)
        for (std::size_t beta = 0; beta < q; ++beta)
            table.push_back(proj.apply(a.table(reps[alpha], reps[beta])));
    return QuotientResult{Algebra(a.field(), q, std::move(table)), std::move(proj), std::move(reps)};
}

Vec quotient_lift(const QuotientResult& q, const Vec& qvec) {
    const std::size_t n = q.projection.cols();
    if (qvec.size() != q.algebra.dim()) throw input_error("quotient vector length mismatch");
    Vec out = zero_vec(q.algebra.field(), n);
    for (std::size_t alpha = 0; alpha < q.algebra.dim(); ++alpha)
        out[q.representatives[alpha]] = qvec[alpha];
    return out;
}

SubalgebraResult subalgebra_as_algebra(const Algebra& a, const IdealHandle& i) {
    const Subspace& sp = i.space;
    if (sp.ambient_dim() != a.dim() || sp.field() != a.field())
        throw input_error("subspace does not match the algebra");
    const std::size_t r = sp.dim();
    std::vector<Vec> table;
    table.reserve(r * r);
    for (std::size_t x = 0; x < r; ++x) {
        const Vec bx = sp.basis_row(x);
        for (std::size_t y = 0; y < r; ++y) {
            Vec p = a.mul(bx, sp.basis_row(y));
            auto coords = sp.coordinates(p);
            if (!coords)
                throw input_error("subspace is not multiplicatively closed: b_" +
                                  std::to_string(x + 1) + " * b_" + std::to_string(y + 1) +
                                  " escapes");
            table.push_back(std::move(*coords));
        }
    }
    return SubalgebraResult{Algebra(a.field(), r, std::move(table)), sp.basis()};
}

Vec include_vector(const SubalgebraResult& s, const Vec& v) {
    if (v.size() != s.algebra.dim()) throw input_error("subalgebra vector length mismatch");
    Vec out = zero_vec(s.algebra.field(), s.inclusion.cols());
    for (std::size_t i = 0; i < v.size(); ++i) add_scaled(out, v[i], s.inclusion.row(i));
    return out;
}

Vec restrict_vector(const SubalgebraResult& s, const Vec& v) {
    Subspace sp = Subspace::span(s.inclusion);
    auto coords = sp.coordinates(v);
    if (!coords) throw input_error("vector lies outside the subalgebra");
    return *coords;
}

} // namespace novikov
