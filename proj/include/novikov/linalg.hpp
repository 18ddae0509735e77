// Exact linear algebra: dense matrices, incremental reduced row echelon
// bases, canonical subspaces, kernels, sums and intersections.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "novikov/field.hpp"

namespace novikov {

using Vec = std::vector<Scalar>;

Vec zero_vec(const FieldDescriptor& f, std::size_t n);
Vec unit_vec(const FieldDescriptor& f, std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
// dst += c * src
void add_scaled(Vec& dst, const Scalar& c, const Vec& src);

class Matrix {
public:
    Matrix(FieldDescriptor f, std::size_t rows, std::size_t cols);
    static Matrix identity(const FieldDescriptor& f, std::size_t n);
    // Validates that every row has length `cols` and every entry lives in `f`.
    static Matrix from_rows(const FieldDescriptor& f, std::size_t cols, const std::vector<Vec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldDescriptor& field() const { return field_; }

    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Scalar v);
    Vec row(std::size_t r) const;

    Vec apply(const Vec& x) const;          // m * x
    Matrix multiplied(const Matrix& o) const; // m * o

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    FieldDescriptor field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

// Row space accumulator kept permanently in reduced row echelon form:
// pivot columns strictly increase, pivot entries are 1 and are the only
// nonzero entries in their columns.
class EchelonBasis {
public:
    EchelonBasis(FieldDescriptor f, std::size_t ambient);

    // Returns true iff the row space grew.
    bool insert(Vec v);
    // Residual of v after elimination against the current rows.
    Vec reduce(Vec v) const;
    bool contains(const Vec& v) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t ambient() const { return ambient_; }
    const FieldDescriptor& field() const { return field_; }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    Matrix to_matrix() const;

private:
    FieldDescriptor field_;
    std::size_t ambient_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

// The unique reduced row echelon form over the matrix's field, zero rows
// dropped: the result has rank(m) rows.
Matrix rref(const Matrix& m);

// A linear subspace of F^n represented by its canonical basis: the RREF of any
// spanning set with zero rows removed. Equality is entry-wise basis equality.
class Subspace {
public:
    static Subspace zero(const FieldDescriptor& f, std::size_t ambient);
    static Subspace full(const FieldDescriptor& f, std::size_t ambient);
    static Subspace span(const Matrix& rows);
    static Subspace span(const FieldDescriptor& f, std::size_t ambient, const std::vector<Vec>& vecs);
    static Subspace from_echelon(const EchelonBasis& e);

    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    const FieldDescriptor& field() const { return basis_.field(); }
    const Matrix& basis() const { return basis_; }
    Vec basis_row(std::size_t i) const { return basis_.row(i); }

    bool contains(const Vec& v) const;
    Vec reduce(Vec v) const;
    // Coefficients of v in the canonical basis; nullopt if v is outside.
    std::optional<Vec> coordinates(const Vec& v) const;

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
    Matrix basis_;
};

Subspace kernel(const Matrix& m);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool subspace_leq(const Subspace& a, const Subspace& b);

// Accumulates homogeneous constraints row . x = 0 and solves for the joint
// kernel. Constraint rows are discarded once the system reaches full rank,
// which keeps the huge streamed systems (nucleus, annihilators) cheap.
class KernelBuilder {
public:
    KernelBuilder(FieldDescriptor f, std::size_t unknowns);
    void add(Vec row);
    bool saturated() const { return rows_.rank() == rows_.ambient(); }
    Subspace solve() const;

private:
    EchelonBasis rows_;
};

} // namespace novikov
