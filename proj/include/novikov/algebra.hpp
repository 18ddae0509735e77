// Finite-dimensional algebras given by structure constants, with exact
// evaluation of products, associators and commutators.
#pragma once

#include <string>
#include <vector>

#include "novikov/linalg.hpp"

namespace novikov {

// table(i, j) is the coordinate vector of e_i * e_j. Multiplication of
// arbitrary vectors is the bilinear extension of the table. Immutable after
// construction; safe to share across threads.
class Algebra {
public:
    Algebra(FieldDescriptor f, std::size_t dim, std::vector<Vec> table,
            std::vector<std::string> basis_names = {});
    static Algebra zero_algebra(const FieldDescriptor& f, std::size_t dim);

    std::size_t dim() const { return dim_; }
    const FieldDescriptor& field() const { return field_; }
    const Vec& table(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
    const std::vector<std::string>& basis_names() const { return names_; }
    std::string basis_name(std::size_t i) const;

    Vec mul(const Vec& u, const Vec& v) const;
    // e_i * v and u * e_j; both O(dim^2)
    Vec mul_basis_left(std::size_t i, const Vec& v) const;
    Vec mul_basis_right(const Vec& u, std::size_t j) const;

    // (x,y,z) = (xy)z - x(yz)
    Vec associator(const Vec& x, const Vec& y, const Vec& z) const;
    // associator on basis elements, O(dim^2)
    Vec associator_basis(std::size_t i, std::size_t j, std::size_t k) const;
    // [x,y] = xy - yx
    Vec commutator(const Vec& x, const Vec& y) const;

    // Copy with table[i][j][k] += delta (used by the mutation generator).
    Algebra with_entry_added(std::size_t i, std::size_t j, std::size_t k, const Scalar& delta) const;

    bool operator==(const Algebra& o) const;

private:
    void check_vec(const Vec& v) const;

    FieldDescriptor field_;
    std::size_t dim_;
    std::vector<Vec> table_; // n*n coordinate vectors, index i*n + j
    std::vector<std::string> names_;
};

} // namespace novikov
