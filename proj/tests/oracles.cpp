#include "oracles.hpp"

namespace oracles {

std::vector<Vec> naive_rref(std::vector<Vec> rows, const FieldDescriptor& f, std::size_t cols) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pr = r;
        while (pr < rows.size() && rows[pr][c].is_zero()) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[r], rows[pr]);
        const Scalar inv = rows[r][c].inverse();
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == r || rows[k][c].is_zero()) continue;
            const Scalar factor = rows[k][c];
            for (std::size_t col = 0; col < cols; ++col)
                rows[k][col] -= factor * rows[r][col];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

std::vector<Vec> naive_kernel(const std::vector<Vec>& rows, const FieldDescriptor& f,
                              std::size_t cols) {
    std::vector<Vec> r = naive_rref(rows, f, cols);
    std::vector<std::size_t> pivot_of_col(cols, SIZE_MAX);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::size_t p = 0;
        while (r[i][p].is_zero()) ++p;
        pivot_of_col[p] = i;
    }
    std::vector<Vec> basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] != SIZE_MAX) continue;
        Vec v = zero_vec(f, cols);
        v[c] = Scalar::one(f);
        for (std::size_t p = 0; p < cols; ++p)
            if (pivot_of_col[p] != SIZE_MAX) v[p] = -r[pivot_of_col[p]][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vec> all_vectors(const FieldDescriptor& f, std::size_t n) {
    const std::uint32_t p = f.modulus();
    std::vector<Vec> out;
    std::vector<std::uint32_t> digits(n, 0);
    while (true) {
        Vec v = zero_vec(f, n);
        for (std::size_t i = 0; i < n; ++i) v[i] = Scalar::residue(f, digits[i]);
        out.push_back(std::move(v));
        std::size_t t = n;
        while (t > 0) {
            if (++digits[t - 1] < p) break;
            digits[t - 1] = 0;
            --t;
        }
        if (t == 0) break;
    }
    return out;
}

Vec table_mul(const Algebra& a, const Vec& u, const Vec& v) {
    const std::size_t n = a.dim();
    Vec out = zero_vec(a.field(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar c = u[i] * v[j];
            for (std::size_t k = 0; k < n; ++k) out[k] += c * a.table(i, j)[k];
        }
    return out;
}

Vec table_associator(const Algebra& a, const Vec& x, const Vec& y, const Vec& z) {
    return vec_sub(table_mul(a, table_mul(a, x, y), z), table_mul(a, x, table_mul(a, y, z)));
}

Vec defect_right_sym(const Algebra& a, std::size_t i, std::size_t j, std::size_t k) {
    const std::size_t n = a.dim();
    const Vec ei = unit_vec(a.field(), n, i), ej = unit_vec(a.field(), n, j),
              ek = unit_vec(a.field(), n, k);
    return vec_sub(table_associator(a, ei, ej, ek), table_associator(a, ej, ei, ek));
}

Vec defect_right_comm(const Algebra& a, std::size_t i, std::size_t j, std::size_t k) {
    const std::size_t n = a.dim();
    const Vec ei = unit_vec(a.field(), n, i), ej = unit_vec(a.field(), n, j),
              ek = unit_vec(a.field(), n, k);
    return vec_sub(table_mul(a, table_mul(a, ei, ej), ek),
                   table_mul(a, table_mul(a, ei, ek), ej));
}

bool novikov_by_triple_loop(const Algebra& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!is_zero_vec(defect_right_sym(a, i, j, k)) ||
                    !is_zero_vec(defect_right_comm(a, i, j, k)))
                    return false;
    return true;
}

namespace {

Subspace span_rows(const FieldDescriptor& f, std::size_t n, const std::vector<Vec>& rows) {
    return Subspace::span(f, n, rows);
}

} // namespace

Subspace nucleus_scan(const Algebra& a) {
    const std::size_t n = a.dim();
    std::vector<Vec> units;
    for (std::size_t i = 0; i < n; ++i) units.push_back(unit_vec(a.field(), n, i));
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (int slot = 0; slot < 3; ++slot) {
                std::vector<Vec> per_l;
                for (std::size_t l = 0; l < n; ++l) {
                    const Vec& x = units[l];
                    if (slot == 0)
                        per_l.push_back(table_associator(a, x, units[i], units[j]));
                    else if (slot == 1)
                        per_l.push_back(table_associator(a, units[i], x, units[j]));
                    else
                        per_l.push_back(table_associator(a, units[i], units[j], x));
                }
                for (std::size_t c = 0; c < n; ++c) {
                    Vec row = zero_vec(a.field(), n);
                    for (std::size_t l = 0; l < n; ++l) row[l] = per_l[l][c];
                    rows.push_back(std::move(row));
                }
            }
    return span_rows(a.field(), n, naive_kernel(rows, a.field(), n));
}

Subspace commutative_center_scan(const Algebra& a) {
    const std::size_t n = a.dim();
    std::vector<Vec> units;
    for (std::size_t i = 0; i < n; ++i) units.push_back(unit_vec(a.field(), n, i));
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Vec> per_l;
        for (std::size_t l = 0; l < n; ++l)
            per_l.push_back(vec_sub(table_mul(a, units[l], units[i]),
                                    table_mul(a, units[i], units[l])));
        for (std::size_t c = 0; c < n; ++c) {
            Vec row = zero_vec(a.field(), n);
            for (std::size_t l = 0; l < n; ++l) row[l] = per_l[l][c];
            rows.push_back(std::move(row));
        }
    }
    return span_rows(a.field(), n, naive_kernel(rows, a.field(), n));
}

Subspace ann_left_scan(const Algebra& a, const Subspace& m) {
    const std::size_t n = a.dim();
    std::vector<Vec> units;
    for (std::size_t i = 0; i < n; ++i) units.push_back(unit_vec(a.field(), n, i));
    std::vector<Vec> rows;
    for (std::size_t b = 0; b < m.dim(); ++b) {
        const Vec mb = m.basis_row(b);
        std::vector<Vec> per_l;
        for (std::size_t l = 0; l < n; ++l) per_l.push_back(table_mul(a, units[l], mb));
        for (std::size_t c = 0; c < n; ++c) {
            Vec row = zero_vec(a.field(), n);
            for (std::size_t l = 0; l < n; ++l) row[l] = per_l[l][c];
            rows.push_back(std::move(row));
        }
    }
    return span_rows(a.field(), n, naive_kernel(rows, a.field(), n));
}

Subspace ann_right_scan(const Algebra& a, const Subspace& m) {
    const std::size_t n = a.dim();
    std::vector<Vec> units;
    for (std::size_t i = 0; i < n; ++i) units.push_back(unit_vec(a.field(), n, i));
    std::vector<Vec> rows;
    for (std::size_t b = 0; b < m.dim(); ++b) {
        const Vec mb = m.basis_row(b);
        std::vector<Vec> per_l;
        for (std::size_t l = 0; l < n; ++l) per_l.push_back(table_mul(a, mb, units[l]));
        for (std::size_t c = 0; c < n; ++c) {
            Vec row = zero_vec(a.field(), n);
            for (std::size_t l = 0; l < n; ++l) row[l] = per_l[l][c];
            rows.push_back(std::move(row));
        }
    }
    return span_rows(a.field(), n, naive_kernel(rows, a.field(), n));
}

Subspace intersect_by_membership(const Subspace& a, const Subspace& b) {
    std::vector<Vec> members;
    for (const Vec& v : all_vectors(a.field(), a.ambient_dim()))
        if (a.contains(v) && b.contains(v)) members.push_back(v);
    return span_rows(a.field(), a.ambient_dim(), members);
}

DecisionStatus semiprime_from_ideals(const Algebra& a, const std::vector<IdealHandle>& ideals) {
    for (const auto& i : ideals)
        if (!i.space.is_zero() && subspace_product(a, i.space, i.space).is_zero())
            return DecisionStatus::No;
    return DecisionStatus::Yes;
}

DecisionStatus prime_from_ideals(const Algebra& a, const std::vector<IdealHandle>& ideals) {
    for (const auto& i : ideals)
        for (const auto& j : ideals)
            if (!i.space.is_zero() && !j.space.is_zero() &&
                subspace_product(a, i.space, j.space).is_zero())
                return DecisionStatus::No;
    return DecisionStatus::Yes;
}

DecisionStatus simple_from_ideals(const Algebra& a, const std::vector<IdealHandle>& ideals) {
    if (a.dim() == 0) return DecisionStatus::No;
    const Subspace full = Subspace::full(a.field(), a.dim());
    if (subspace_product(a, full, full).is_zero()) return DecisionStatus::No;
    for (const auto& i : ideals)
        if (!i.space.is_zero() && i.space.dim() < a.dim()) return DecisionStatus::No;
    return DecisionStatus::Yes;
}

std::vector<Subspace> minimal_from_ideals(const Algebra& a,
                                          const std::vector<IdealHandle>& ideals) {
    std::vector<Subspace> minimal;
    for (const auto& cand : ideals) {
        if (cand.space.is_zero()) continue;
        bool has_smaller = false;
        for (const auto& other : ideals) {
            if (other.space.is_zero() || other.space == cand.space) continue;
            if (subspace_leq(other.space, cand.space)) {
                has_smaller = true;
                break;
            }
        }
        if (!has_smaller) minimal.push_back(cand.space);
    }
    return minimal;
}

const std::vector<CorpusEntry>& default_corpus() {
    static const std::vector<CorpusEntry> entries = corpus(default_profile());
    return entries;
}

} // namespace oracles
