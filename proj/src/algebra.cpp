#include "novikov/algebra.hpp"

namespace novikov {

Algebra::Algebra(FieldDescriptor f, std::size_t dim, std::vector<Vec> table,
                 std::vector<std::string> basis_names)
    : field_(std::move(f)), dim_(dim), table_(std::move(table)), names_(std::move(basis_names)) {
    if (table_.size() != dim_ * dim_)
        throw input_error("structure-constant table must have dim*dim entries");
    for (const Vec& v : table_) {
        if (v.size() != dim_) throw input_error("structure-constant vector length mismatch");
        for (const Scalar& s : v)
            if (s.field() != field_) throw input_error("structure constant from a different field");
    }
    if (!names_.empty() && names_.size() != dim_)
        throw input_error("basis_names length must equal dim");
}

Algebra Algebra::zero_algebra(const FieldDescriptor& f, std::size_t dim) {
    return Algebra(f, dim, std::vector<Vec>(dim * dim, zero_vec(f, dim)));
}

std::string Algebra::basis_name(std::size_t i) const {
    return names_.empty() ? "e" + std::to_string(i + 1) : names_[i];
}

void Algebra::check_vec(const Vec& v) const {
    if (v.size() != dim_) throw input_error("vector length does not match algebra dimension");
    for (const Scalar& s : v)
        if (s.field() != field_) throw input_error("vector entry from a different field");
}

Vec Algebra::mul(const Vec& u, const Vec& v) const {
    check_vec(u);
    check_vec(v);
    Vec out = zero_vec(field_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (v[j].is_zero()) continue;
            add_scaled(out, u[i] * v[j], table(i, j));
        }
    }
    return out;
}

Vec Algebra::mul_basis_left(std::size_t i, const Vec& v) const {
    Vec out = zero_vec(field_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        if (!v[j].is_zero()) add_scaled(out, v[j], table(i, j));
    return out;
}

Vec Algebra::mul_basis_right(const Vec& u, std::size_t j) const {
    Vec out = zero_vec(field_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        if (!u[i].is_zero()) add_scaled(out, u[i], table(i, j));
    return out;
}

Vec Algebra::associator(const Vec& x, const Vec& y, const Vec& z) const {
    return vec_sub(mul(mul(x, y), z), mul(x, mul(y, z)));
}

Vec Algebra::associator_basis(std::size_t i, std::size_t j, std::size_t k) const {
    return vec_sub(mul_basis_right(table(i, j), k), mul_basis_left(i, table(j, k)));
}

Vec Algebra::commutator(const Vec& x, const Vec& y) const {
    return vec_sub(mul(x, y), mul(y, x));
}

Algebra Algebra::with_entry_added(std::size_t i, std::size_t j, std::size_t k,
                                  const Scalar& delta) const {
    if (i >= dim_ || j >= dim_ || k >= dim_) throw input_error("table index out of range");
    if (delta.field() != field_) throw input_error("delta from a different field");
    std::vector<Vec> t = table_;
    t[i * dim_ + j][k] += delta;
    return Algebra(field_, dim_, std::move(t), names_);
}

bool Algebra::operator==(const Algebra& o) const {
    return field_ == o.field_ && dim_ == o.dim_ && table_ == o.table_;
}

} // namespace novikov
