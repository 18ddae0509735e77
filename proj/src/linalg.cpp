#include "novikov/linalg.hpp"

#include <algorithm>

namespace novikov {

Vec zero_vec(const FieldDescriptor& f, std::size_t n) {
    return Vec(n, Scalar::zero(f));
}

Vec unit_vec(const FieldDescriptor& f, std::size_t n, std::size_t i) {
    Vec v = zero_vec(f, n);
    v[i] = Scalar::one(f);
    return v;
}

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

static void require_same_shape(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw input_error("vector length mismatch");
}

Vec vec_add(const Vec& a, const Vec& b) {
    require_same_shape(a, b);
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    require_same_shape(a, b);
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
    Vec r = v;
    for (auto& x : r) x *= c;
    return r;
}

void add_scaled(Vec& dst, const Scalar& c, const Vec& src) {
    require_same_shape(dst, src);
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < dst.size(); ++i)
        if (!src[i].is_zero()) dst[i] += c * src[i];
}

Matrix::Matrix(FieldDescriptor f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldDescriptor& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
    return m;
}

Matrix Matrix::from_rows(const FieldDescriptor& f, std::size_t cols, const std::vector<Vec>& rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw input_error("matrix row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

void Matrix::set(std::size_t r, std::size_t c, Scalar v) {
    if (v.field() != field_) throw input_error("matrix entry from a different field");
    a_[r * cols_ + c] = std::move(v);
}

Vec Matrix::row(std::size_t r) const {
    return Vec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw input_error("matrix/vector size mismatch");
    Vec y = zero_vec(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Scalar acc = Scalar::zero(field_);
        for (std::size_t c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero() && !x[c].is_zero()) acc += at(r, c) * x[c];
        y[r] = std::move(acc);
    }
    return y;
}

Matrix Matrix::multiplied(const Matrix& o) const {
    if (cols_ != o.rows_) throw input_error("matrix product shape mismatch");
    if (field_ != o.field_) throw input_error("matrix product field mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o.at(k, j).is_zero()) r.set(i, j, r.at(i, j) + at(i, k) * o.at(k, j));
        }
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    return a_ == o.a_;
}

EchelonBasis::EchelonBasis(FieldDescriptor f, std::size_t ambient)
    : field_(std::move(f)), ambient_(ambient) {}

Vec EchelonBasis::reduce(Vec v) const {
    if (v.size() != ambient_) throw input_error("vector/ambient dimension mismatch");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Scalar& c = v[pivots_[k]];
        if (!c.is_zero()) add_scaled(v, -c, rows_[k]);
    }
    return v;
}

bool EchelonBasis::contains(const Vec& v) const {
    return is_zero_vec(reduce(v));
}

bool EchelonBasis::insert(Vec v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < ambient_ && v[p].is_zero()) ++p;
    if (p == ambient_) return false;
    Scalar inv = v[p].inverse();
    for (auto& x : v) x *= inv;
    // eliminate the new pivot from the older rows, keep pivot order
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Scalar& c = rows_[k][p];
        if (!c.is_zero()) add_scaled(rows_[k], -c, v);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

Matrix EchelonBasis::to_matrix() const {
    return Matrix::from_rows(field_, ambient_, rows_);
}

Matrix rref(const Matrix& m) {
    EchelonBasis e(m.field(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
    return e.to_matrix();
}

Subspace Subspace::zero(const FieldDescriptor& f, std::size_t ambient) {
    return Subspace(Matrix(f, 0, ambient));
}

Subspace Subspace::full(const FieldDescriptor& f, std::size_t ambient) {
    return Subspace(Matrix::identity(f, ambient));
}

Subspace Subspace::span(const Matrix& rows) {
    EchelonBasis e(rows.field(), rows.cols());
    for (std::size_t r = 0; r < rows.rows(); ++r) e.insert(rows.row(r));
    return Subspace(e.to_matrix());
}

Subspace Subspace::span(const FieldDescriptor& f, std::size_t ambient, const std::vector<Vec>& vecs) {
    EchelonBasis e(f, ambient);
    for (const auto& v : vecs) e.insert(v);
    return Subspace(e.to_matrix());
}

Subspace Subspace::from_echelon(const EchelonBasis& e) {
    return Subspace(e.to_matrix());
}

bool Subspace::contains(const Vec& v) const {
    return is_zero_vec(reduce(v));
}

Vec Subspace::reduce(Vec v) const {
    if (v.size() != ambient_dim()) throw input_error("vector/ambient dimension mismatch");
    for (std::size_t k = 0; k < dim(); ++k) {
        // pivot of row k is its first nonzero column; cache-free scan is fine
        std::size_t p = 0;
        while (basis_.at(k, p).is_zero()) ++p;
        const Scalar c = v[p];
        if (!c.is_zero())
            for (std::size_t j = p; j < v.size(); ++j)
                if (!basis_.at(k, j).is_zero()) v[j] -= c * basis_.at(k, j);
    }
    return v;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (v.size() != ambient_dim()) throw input_error("vector/ambient dimension mismatch");
    Vec rem = v;
    Vec coeff = zero_vec(field(), dim());
    for (std::size_t k = 0; k < dim(); ++k) {
        std::size_t p = 0;
        while (basis_.at(k, p).is_zero()) ++p;
        const Scalar c = rem[p];
        coeff[k] = c;
        if (!c.is_zero())
            for (std::size_t j = p; j < rem.size(); ++j)
                if (!basis_.at(k, j).is_zero()) rem[j] -= c * basis_.at(k, j);
    }
    if (!is_zero_vec(rem)) return std::nullopt;
    return coeff;
}

static void require_compatible(const Subspace& a, const Subspace& b) {
    if (a.field() != b.field()) throw input_error("subspace field mismatch");
    if (a.ambient_dim() != b.ambient_dim()) throw input_error("subspace ambient dimension mismatch");
}

Subspace kernel(const Matrix& m) {
    const std::size_t n = m.cols();
    Matrix r = rref(m);
    std::vector<std::size_t> pivot_cols;
    std::vector<std::size_t> pivot_row_of_col(n, SIZE_MAX);
    for (std::size_t i = 0; i < r.rows(); ++i) {
        std::size_t p = 0;
        while (r.at(i, p).is_zero()) ++p;
        pivot_cols.push_back(p);
        pivot_row_of_col[p] = i;
    }
    EchelonBasis e(m.field(), n);
    for (std::size_t f = 0; f < n; ++f) {
        if (pivot_row_of_col[f] != SIZE_MAX) continue;
        Vec v = zero_vec(m.field(), n);
        v[f] = Scalar::one(m.field());
        for (std::size_t p : pivot_cols)
            v[p] = -r.at(pivot_row_of_col[p], f);
        e.insert(std::move(v));
    }
    return Subspace::from_echelon(e);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    require_compatible(a, b);
    EchelonBasis e(a.field(), a.ambient_dim());
    for (std::size_t i = 0; i < a.dim(); ++i) e.insert(a.basis_row(i));
    for (std::size_t i = 0; i < b.dim(); ++i) e.insert(b.basis_row(i));
    return Subspace::from_echelon(e);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    require_compatible(a, b);
    // Zassenhaus: reduce [[A A],[B 0]]; rows with zero left half carry the
    // intersection in their right half.
    const std::size_t n = a.ambient_dim();
    EchelonBasis e(a.field(), 2 * n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Vec row = zero_vec(a.field(), 2 * n);
        Vec ai = a.basis_row(i);
        for (std::size_t c = 0; c < n; ++c) row[c] = row[n + c] = ai[c];
        e.insert(std::move(row));
    }
    for (std::size_t i = 0; i < b.dim(); ++i) {
        Vec row = zero_vec(b.field(), 2 * n);
        Vec bi = b.basis_row(i);
        for (std::size_t c = 0; c < n; ++c) row[c] = bi[c];
        e.insert(std::move(row));
    }
    EchelonBasis out(a.field(), n);
    for (const Vec& row : e.rows()) {
        bool left_zero = true;
        for (std::size_t c = 0; c < n && left_zero; ++c) left_zero = row[c].is_zero();
        if (left_zero) out.insert(Vec(row.begin() + n, row.end()));
    }
    return Subspace::from_echelon(out);
}

bool subspace_leq(const Subspace& a, const Subspace& b) {
    require_compatible(a, b);
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!b.contains(a.basis_row(i))) return false;
    return true;
}

KernelBuilder::KernelBuilder(FieldDescriptor f, std::size_t unknowns)
    : rows_(std::move(f), unknowns) {}

void KernelBuilder::add(Vec row) {
    if (saturated() || is_zero_vec(row)) return;
    rows_.insert(std::move(row));
}

Subspace KernelBuilder::solve() const {
    return kernel(rows_.to_matrix());
}

} // namespace novikov
