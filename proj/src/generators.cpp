#include "novikov/generators.hpp"

#include <algorithm>

namespace novikov {

namespace {

Vec matrix_column(const Matrix& m, std::size_t j) {
    Vec v = zero_vec(m.field(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m.at(r, j);
    return v;
}

std::string tuple_str(std::initializer_list<std::size_t> idx) {
    std::string s = "(";
    bool first = true;
    for (std::size_t i : idx) {
        if (!first) s += ",";
        s += "e" + std::to_string(i + 1);
        first = false;
    }
    return s + ")";
}

} // namespace

Algebra gd_algebra(const GDInput& in) {
    const Algebra& c = in.c;
    const std::size_t n = c.dim();
    if (auto r = check_identity(c, IdentityId::Commutativity); !r.holds)
        throw input_error("gd_algebra: base algebra is not commutative at " +
                          tuple_str({r.witness->indices[0], r.witness->indices[1]}));
    if (auto r = check_identity(c, IdentityId::Associativity); !r.holds)
        throw input_error("gd_algebra: base algebra is not associative at " +
                          tuple_str({r.witness->indices[0], r.witness->indices[1],
                                     r.witness->indices[2]}));
    if (in.d.rows() != n || in.d.cols() != n || in.d.field() != c.field())
        throw input_error("gd_algebra: derivation matrix shape/field mismatch");
    if (in.lambda.field() != c.field()) throw input_error("gd_algebra: lambda field mismatch");

    std::vector<Vec> d_of_basis;
    d_of_basis.reserve(n);
    for (std::size_t j = 0; j < n; ++j) d_of_basis.push_back(matrix_column(in.d, j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec lhs = in.d.apply(c.table(i, j));
            Vec rhs = vec_add(c.mul_basis_right(d_of_basis[i], j),
                              c.mul_basis_left(i, d_of_basis[j]));
            if (lhs != rhs)
                throw input_error("gd_algebra: d violates the Leibniz rule at " +
                                  tuple_str({i, j}));
        }

    std::vector<Vec> table;
    table.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec prod = c.mul_basis_left(i, d_of_basis[j]);
            add_scaled(prod, in.lambda, c.table(i, j));
            table.push_back(std::move(prod));
        }
    Algebra out(c.field(), n, std::move(table), c.basis_names());
    if (!check_novikov(out).is_novikov)
        throw error("gd_algebra: output failed the Novikov check (arithmetic bug)");
    return out;
}

Algebra chain_algebra(const FieldDescriptor& f, std::size_t k) {
    std::vector<Vec> table(k * k, zero_vec(f, k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i + j < k) table[i * k + j][i + j] = Scalar::one(f);
    return Algebra(f, k, std::move(table));
}

Algebra nilpotent_chain_algebra(const FieldDescriptor& f, std::size_t k) {
    // basis e_i = x^(i+1); e_i e_j = x^(i+j+2), zero beyond degree k
    std::vector<Vec> table(k * k, zero_vec(f, k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i + j + 1 < k) table[i * k + j][i + j + 1] = Scalar::one(f);
    return Algebra(f, k, std::move(table));
}

Algebra truncated_poly_algebra(std::uint32_t p, const Scalar& lambda) {
    FieldDescriptor f = FieldDescriptor::gf(p);
    if (lambda.field() != f) throw input_error("truncated_poly_algebra: lambda field mismatch");
    Algebra c = chain_algebra(f, p);
    Matrix d(f, p, p);
    for (std::size_t j = 1; j < p; ++j) d.set(j - 1, j, Scalar::of(f, static_cast<long>(j)));
    return gd_algebra(GDInput{std::move(c), std::move(d), lambda});
}

std::vector<Matrix> derivations(const Algebra& c) {
    const std::size_t n = c.dim();
    // unknowns: flattened matrix entries d[r][s] at index r*n + s
    KernelBuilder kb(c.field(), n * n);
    for (std::size_t i = 0; i < n && !kb.saturated(); ++i)
        for (std::size_t j = 0; j < n && !kb.saturated(); ++j)
            for (std::size_t coord = 0; coord < n; ++coord) {
                Vec row = zero_vec(c.field(), n * n);
                // d(e_i e_j) contributes d[coord][s] * table(i,j)[s]
                for (std::size_t s = 0; s < n; ++s)
                    row[coord * n + s] += c.table(i, j)[s];
                // -d(e_i) e_j contributes -d[r][i] * table(r,j)[coord]
                for (std::size_t r = 0; r < n; ++r)
                    row[r * n + i] -= c.table(r, j)[coord];
                // -e_i d(e_j) contributes -d[r][j] * table(i,r)[coord]
                for (std::size_t r = 0; r < n; ++r)
                    row[r * n + j] -= c.table(i, r)[coord];
                kb.add(std::move(row));
            }
    Subspace sol = kb.solve();
    std::vector<Matrix> basis;
    basis.reserve(sol.dim());
    for (std::size_t b = 0; b < sol.dim(); ++b) {
        const Vec flat = sol.basis_row(b);
        Matrix m(c.field(), n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = 0; s < n; ++s) m.set(r, s, flat[r * n + s]);
        basis.push_back(std::move(m));
    }
    return basis;
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
    if (a.field() != b.field()) throw input_error("direct_sum: field mismatch");
    const std::size_t n = a.dim(), m = b.dim(), total = n + m;
    std::vector<Vec> table(total * total, zero_vec(a.field(), total));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) table[i * total + j][k] = a.table(i, j)[k];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                table[(n + i) * total + (n + j)][n + k] = b.table(i, j)[k];
    return Algebra(a.field(), total, std::move(table));
}

Algebra mutate(const Algebra& a, std::size_t i, std::size_t j, std::size_t k,
               const Scalar& delta) {
    return a.with_entry_added(i, j, k, delta);
}

namespace {

// Random commutative associative algebra: a direct sum of chain, nilpotent
// chain, idempotent and zero blocks.
Algebra random_comm_assoc(const FieldDescriptor& f, std::size_t dim, Rng& rng) {
    std::optional<Algebra> acc;
    std::size_t remaining = dim;
    while (remaining > 0) {
        std::size_t block = 1 + rng.uniform(std::min<std::size_t>(remaining, 3));
        Algebra piece = [&]() {
            switch (rng.uniform(3)) {
                case 0: return chain_algebra(f, block);
                case 1: return nilpotent_chain_algebra(f, block);
                default: return Algebra::zero_algebra(f, block);
            }
        }();
        acc = acc ? direct_sum(*acc, piece) : piece;
        remaining -= block;
    }
    return *acc;
}

Scalar random_lambda(const FieldDescriptor& f, Rng& rng) {
    switch (rng.uniform(3)) {
        case 0: return Scalar::zero(f);
        case 1: return Scalar::one(f);
        default: return rng.scalar(f);
    }
}

std::string field_tag(const FieldDescriptor& f) {
    return f.is_rationals() ? "Q" : "gf" + std::to_string(f.modulus());
}

} // namespace

std::vector<CorpusEntry> corpus(const CorpusProfile& profile) {
    if (profile.fields.empty() || profile.dims.empty())
        throw input_error("corpus profile needs at least one field and one dimension");
    Rng rng(profile.seed);
    std::vector<CorpusEntry> out;
    std::size_t positives = 0;
    const auto dim_allowed = [&](std::size_t d) {
        return std::find(profile.dims.begin(), profile.dims.end(), d) != profile.dims.end();
    };
    auto push = [&](Algebra alg, std::string kind) {
        if (positives >= profile.count) return;
        std::string name = "a" + std::to_string(out.size()) + "_" + field_tag(alg.field()) +
                           "_d" + std::to_string(alg.dim());
        bool nov = check_novikov(alg).is_novikov;
        if (nov) ++positives;
        out.push_back(CorpusEntry{std::move(name), std::move(alg), nov, std::move(kind)});
    };

    // structured staples: fixed constructions the suite relies on
    for (const FieldDescriptor& f : profile.fields) {
        const Scalar one = Scalar::one(f), zero = Scalar::zero(f);
        const std::size_t dmin = *std::min_element(profile.dims.begin(), profile.dims.end());
        push(Algebra::zero_algebra(f, dmin), "zero-multiplication");
        for (std::size_t d : profile.dims) {
            Algebra c = chain_algebra(f, d);
            push(gd_algebra(GDInput{c, Matrix(f, d, d), one}), "chain(d=0,lambda=1)");
        }
        if (dim_allowed(2)) {
            Algebra two_fields = direct_sum(chain_algebra(f, 1), chain_algebra(f, 1));
            push(gd_algebra(GDInput{two_fields, Matrix(f, 2, 2), one}), "field+field");
            Algebra field_plus_zero = direct_sum(chain_algebra(f, 1), Algebra::zero_algebra(f, 1));
            push(gd_algebra(GDInput{field_plus_zero, Matrix(f, 2, 2), one}), "field+zero");
        }
        if (f.is_prime_field() && dim_allowed(f.modulus())) {
            push(truncated_poly_algebra(f.modulus(), zero), "truncated-derivation(lambda=0)");
            push(truncated_poly_algebra(f.modulus(), one), "truncated-derivation(lambda=1)");
        }
    }

    // random Gelfand-Dorfman fill
    while (positives < profile.count) {
        const FieldDescriptor& f = profile.fields[rng.uniform(profile.fields.size())];
        const std::size_t dim = profile.dims[rng.uniform(profile.dims.size())];
        Algebra c = random_comm_assoc(f, dim, rng);
        std::vector<Matrix> ders = derivations(c);
        Matrix d(f, dim, dim);
        if (!ders.empty()) {
            for (const Matrix& base : ders) {
                const Scalar coef = rng.scalar(f);
                if (coef.is_zero()) continue;
                for (std::size_t r = 0; r < dim; ++r)
                    for (std::size_t s = 0; s < dim; ++s)
                        d.set(r, s, d.at(r, s) + coef * base.at(r, s));
            }
        }
        Algebra alg = gd_algebra(GDInput{std::move(c), std::move(d), random_lambda(f, rng)});
        std::string name = "a" + std::to_string(out.size()) + "_" + field_tag(f) + "_d" +
                           std::to_string(dim);
        out.push_back(CorpusEntry{std::move(name), std::move(alg), true, "random-gd"});
        ++positives;
    }

    // mutated companions: one table entry nudged, kept only when the checker
    // confirms the Novikov identities actually broke
    const std::size_t base_count = out.size();
    for (std::size_t idx = 0; idx < base_count; idx += 2) {
        const Algebra& src = out[idx].algebra;
        const std::size_t n = src.dim();
        if (n == 0) continue;
        for (int attempt = 0; attempt < 3; ++attempt) {
            const std::size_t i = rng.uniform(n), j = rng.uniform(n), k = rng.uniform(n);
            Algebra m = mutate(src, i, j, k, rng.nonzero_scalar(src.field()));
            if (!check_novikov(m).is_novikov) {
                out.push_back(CorpusEntry{out[idx].name + "_mut", std::move(m), false,
                                          "mutated:" + out[idx].construction});
                break;
            }
        }
    }
    return out;
}

CorpusProfile default_profile() {
    return CorpusProfile{
        {FieldDescriptor::rationals(), FieldDescriptor::gf(2), FieldDescriptor::gf(3),
         FieldDescriptor::gf(5)},
        {1, 2, 3, 4, 5, 6},
        220,
        20250811,
    };
}

} // namespace novikov
