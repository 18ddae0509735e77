#include "novikov/deciders.hpp"

#include <algorithm>

#include "novikov/rng.hpp"

namespace novikov {

std::string decision_status_name(DecisionStatus s) {
    switch (s) {
        case DecisionStatus::Yes: return "yes";
        case DecisionStatus::No: return "no";
        case DecisionStatus::Undetermined: return "undetermined";
    }
    return "?";
}

std::string decision_method_name(DecisionMethod m) {
    switch (m) {
        case DecisionMethod::ProjectiveScan: return "projective-scan";
        case DecisionMethod::SubspaceEnumeration: return "subspace-enumeration";
        case DecisionMethod::RandomSearch: return "random-search";
    }
    return "?";
}

bool scan_projective_points(const FieldDescriptor& f, std::size_t n,
                            const std::function<bool(const Vec&)>& visit) {
    if (!f.is_prime_field()) throw input_error("projective scan requires a finite field");
    const std::uint32_t p = f.modulus();
    // first nonzero coordinate last gives ascending lexicographic order
    for (std::size_t lead = n; lead-- > 0;) {
        Vec v = zero_vec(f, n);
        v[lead] = Scalar::one(f);
        const std::size_t tail = n - lead - 1;
        std::vector<std::uint32_t> digits(tail, 0);
        while (true) {
            for (std::size_t t = 0; t < tail; ++t)
                v[lead + 1 + t] = Scalar::residue(f, digits[t]);
            if (!visit(v)) return false;
            std::size_t t = tail;
            while (t > 0) {
                if (++digits[t - 1] < p) break;
                digits[t - 1] = 0;
                --t;
            }
            if (t == 0) break;
        }
    }
    return true;
}

std::vector<Vec> projective_points(const FieldDescriptor& f, std::size_t n) {
    std::vector<Vec> pts;
    scan_projective_points(f, n, [&](const Vec& v) {
        pts.push_back(v);
        return true;
    });
    return pts;
}

IdealHandle principal_ideal(const Algebra& a, const Vec& x) {
    return ideal_closure(a, Subspace::span(a.field(), a.dim(), {x}), Sidedness::TwoSided);
}

namespace {

constexpr std::size_t kRationalRandomCandidates = 32;

// Structured candidates plus seeded random vectors: the bounded witness
// search used for the Q semidecisions. Annihilator and nucleus elements go
// in ahead of the (potentially numerous) associators so the budget cut never
// drops the likeliest trivial-ideal generators.
std::vector<Vec> rational_candidates(const Algebra& a) {
    const std::size_t n = a.dim();
    std::vector<Vec> out;
    if (n == 0) return out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vec(a.field(), n, i));
    const Subspace full = Subspace::full(a.field(), n);
    for (const Subspace& s :
         {ann_left(a, full), ann_right(a, full), nucleus(a), commutative_center(a)})
        for (std::size_t r = 0; r < s.dim(); ++r) out.push_back(s.basis_row(r));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec as = a.associator_basis(i, j, k);
                if (!is_zero_vec(as)) out.push_back(std::move(as));
            }
    Rng rng(kRationalSearchSeed);
    for (std::size_t c = 0; c < kRationalRandomCandidates; ++c) {
        Vec v = zero_vec(a.field(), n);
        for (auto& x : v) x = rng.scalar(a.field());
        if (!is_zero_vec(v)) out.push_back(std::move(v));
    }
    // cap the quadratic pair scans at a fixed candidate budget; keep a tail
    // of random vectors alongside the structured prefix
    const std::size_t budget = std::max<std::size_t>(4 * n, 48);
    if (out.size() > budget) {
        std::vector<Vec> trimmed(out.begin(), out.begin() + budget - budget / 4);
        for (std::size_t c = out.size() - budget / 4; c < out.size(); ++c)
            trimmed.push_back(out[c]);
        out = std::move(trimmed);
    }
    return out;
}

// Distinct nonzero principal ideals in first-generator order.
std::vector<IdealHandle> distinct_principal_ideals(const Algebra& a,
                                                   const std::vector<Vec>& generators) {
    std::vector<IdealHandle> out;
    for (const Vec& x : generators) {
        if (is_zero_vec(x)) continue;
        IdealHandle h = principal_ideal(a, x);
        bool seen = false;
        for (const auto& prev : out)
            if (prev.space == h.space) {
                seen = true;
                break;
            }
        if (!seen) out.push_back(std::move(h));
    }
    return out;
}

Decision no_with_witness(DecisionMethod m, std::string kind, std::vector<Subspace> ideals) {
    Decision d;
    d.status = DecisionStatus::No;
    d.method = m;
    d.witness = DecisionWitness{std::move(kind), std::move(ideals)};
    return d;
}

Decision yes(DecisionMethod m, std::string certificate) {
    Decision d;
    d.status = DecisionStatus::Yes;
    d.method = m;
    d.certificate = std::move(certificate);
    return d;
}

Decision undetermined(DecisionMethod m, std::string reason) {
    Decision d;
    d.status = DecisionStatus::Undetermined;
    d.method = m;
    d.certificate = std::move(reason);
    return d;
}

bool square_is_zero(const Algebra& a, const Subspace& s) {
    return subspace_product(a, s, s).is_zero();
}

} // namespace

Decision is_semiprime(const Algebra& a) {
    const std::size_t n = a.dim();
    const Subspace full = Subspace::full(a.field(), n);
    if (n > 0 && square_is_zero(a, full))
        return no_with_witness(DecisionMethod::ProjectiveScan, "trivial_ideal", {full});
    if (a.field().is_prime_field()) {
        std::optional<Subspace> witness;
        std::size_t points = 0;
        scan_projective_points(a.field(), n, [&](const Vec& x) {
            ++points;
            IdealHandle h = principal_ideal(a, x);
            if (square_is_zero(a, h.space)) {
                witness = h.space;
                return false;
            }
            return true;
        });
        if (witness)
            return no_with_witness(DecisionMethod::ProjectiveScan, "trivial_ideal", {*witness});
        return yes(DecisionMethod::ProjectiveScan,
                   "projective scan of " + std::to_string(points) +
                       " points: no nonzero principal ideal squares to zero");
    }
    const auto candidates = rational_candidates(a);
    for (const Vec& x : candidates) {
        IdealHandle h = principal_ideal(a, x);
        if (!h.space.is_zero() && square_is_zero(a, h.space))
            return no_with_witness(DecisionMethod::RandomSearch, "trivial_ideal", {h.space});
    }
    return undetermined(DecisionMethod::RandomSearch,
                        "no trivial ideal among " + std::to_string(candidates.size()) +
                            " candidate generators; Yes requires a finite field");
}

Decision is_prime(const Algebra& a) {
    const std::size_t n = a.dim();
    if (a.field().is_prime_field()) {
        const auto ideals = distinct_principal_ideals(a, projective_points(a.field(), n));
        for (const auto& I : ideals)
            for (const auto& J : ideals)
                if (subspace_product(a, I.space, J.space).is_zero())
                    return no_with_witness(DecisionMethod::ProjectiveScan, "zero_product_pair",
                                           {I.space, J.space});
        return yes(DecisionMethod::ProjectiveScan,
                   "all ordered pairs of " + std::to_string(ideals.size()) +
                       " distinct principal ideals have nonzero product");
    }
    const auto ideals = distinct_principal_ideals(a, rational_candidates(a));
    for (const auto& I : ideals)
        for (const auto& J : ideals)
            if (subspace_product(a, I.space, J.space).is_zero())
                return no_with_witness(DecisionMethod::RandomSearch, "zero_product_pair",
                                       {I.space, J.space});
    return undetermined(DecisionMethod::RandomSearch,
                        "no zero product among candidate principal ideal pairs; Yes requires a "
                        "finite field");
}

Decision is_simple(const Algebra& a) {
    const std::size_t n = a.dim();
    if (n == 0)
        return no_with_witness(DecisionMethod::ProjectiveScan, "zero_square_algebra",
                               {Subspace::zero(a.field(), 0)});
    const Subspace full = Subspace::full(a.field(), n);
    if (square_is_zero(a, full))
        return no_with_witness(DecisionMethod::ProjectiveScan, "zero_square_algebra", {full});
    if (a.field().is_prime_field()) {
        std::optional<Subspace> proper;
        std::size_t points = 0;
        scan_projective_points(a.field(), n, [&](const Vec& x) {
            ++points;
            IdealHandle h = principal_ideal(a, x);
            if (h.space.dim() < n) {
                proper = h.space;
                return false;
            }
            return true;
        });
        if (proper)
            return no_with_witness(DecisionMethod::ProjectiveScan, "proper_ideal", {*proper});
        return yes(DecisionMethod::ProjectiveScan,
                   "A*A != 0 and each of " + std::to_string(points) +
                       " projective points generates the full space");
    }
    for (const Vec& x : rational_candidates(a)) {
        IdealHandle h = principal_ideal(a, x);
        if (!h.space.is_zero() && h.space.dim() < n)
            return no_with_witness(DecisionMethod::RandomSearch, "proper_ideal", {h.space});
    }
    return undetermined(DecisionMethod::RandomSearch,
                        "no proper nonzero ideal found; Yes requires a finite field");
}

MinimalIdealsResult minimal_ideals(const Algebra& a) {
    const bool exact = a.field().is_prime_field();
    std::vector<IdealHandle> principals;
    if (a.dim() > 0) {
        principals = distinct_principal_ideals(
            a, exact ? projective_points(a.field(), a.dim()) : rational_candidates(a));
    }
    std::vector<IdealHandle> minimal;
    for (const auto& cand : principals) {
        bool has_smaller = false;
        for (const auto& other : principals) {
            if (other.space == cand.space) continue;
            if (subspace_leq(other.space, cand.space)) {
                has_smaller = true;
                break;
            }
        }
        if (!has_smaller) minimal.push_back(cand);
    }
    return MinimalIdealsResult{std::move(minimal), exact};
}

BaerChain baer_radical(const Algebra& a) {
    BaerChain chain;
    chain.stages.push_back(IdealHandle{Subspace::zero(a.field(), a.dim()), Sidedness::TwoSided});
    while (true) {
        const IdealHandle& current = chain.stages.back();
        QuotientResult q = quotient(a, current);
        if (q.algebra.dim() == 0) break;
        // sum of all trivial principal ideals of the quotient
        EchelonBasis sum(a.field(), q.algebra.dim());
        auto consider = [&](const Vec& x) {
            if (is_zero_vec(x)) return;
            IdealHandle h = principal_ideal(q.algebra, x);
            if (!h.space.is_zero() && square_is_zero(q.algebra, h.space))
                for (std::size_t r = 0; r < h.space.dim(); ++r) sum.insert(h.space.basis_row(r));
        };
        if (a.field().is_prime_field()) {
            scan_projective_points(a.field(), q.algebra.dim(), [&](const Vec& x) {
                consider(x);
                return true;
            });
        } else {
            for (const Vec& x : rational_candidates(q.algebra)) consider(x);
        }
        if (sum.rank() == 0) break;
        EchelonBasis next(a.field(), a.dim());
        for (std::size_t r = 0; r < current.space.dim(); ++r)
            next.insert(current.space.basis_row(r));
        for (const Vec& s : sum.rows()) next.insert(quotient_lift(q, s));
        chain.stages.push_back(certify_ideal(a, Subspace::from_echelon(next), Sidedness::TwoSided));
    }
    if (a.field().is_prime_field()) {
        QuotientResult q = quotient(a, chain.radical());
        chain.certified = is_semiprime(q.algebra).status == DecisionStatus::Yes;
    }
    return chain;
}

bool enumeration_within_caps(const FieldDescriptor& f, std::size_t n) {
    if (!f.is_prime_field()) return false;
    const std::uint32_t p = f.modulus();
    return (p == 2 && n <= 5) || (p == 3 && n <= 4);
}

std::vector<Subspace> enumerate_subspaces(const FieldDescriptor& f, std::size_t n) {
    if (!f.is_prime_field())
        throw input_error("subspace enumeration requires a finite field (cap: GF(2) dim<=5, "
                          "GF(3) dim<=4)");
    if (!enumeration_within_caps(f, n))
        throw input_error("enumeration cap exceeded: " + f.to_string() + " dim " +
                          std::to_string(n) + " (cap: GF(2) dim<=5, GF(3) dim<=4)");
    const std::uint32_t p = f.modulus();
    std::vector<Subspace> out;
    out.push_back(Subspace::zero(f, n));
    for (std::size_t r = 1; r <= n; ++r) {
        // pivot column combinations in lexicographic order
        std::vector<std::size_t> piv(r);
        for (std::size_t i = 0; i < r; ++i) piv[i] = i;
        bool more_combinations = true;
        while (more_combinations) {
            std::vector<bool> is_piv(n, false);
            for (std::size_t c : piv) is_piv[c] = true;
            // free positions: right of the row's pivot, not a pivot column
            std::vector<std::pair<std::size_t, std::size_t>> free_pos;
            for (std::size_t k = 0; k < r; ++k)
                for (std::size_t c = piv[k] + 1; c < n; ++c)
                    if (!is_piv[c]) free_pos.emplace_back(k, c);
            std::vector<std::uint32_t> digits(free_pos.size(), 0);
            while (true) {
                Matrix basis(f, r, n);
                for (std::size_t k = 0; k < r; ++k) basis.set(k, piv[k], Scalar::one(f));
                for (std::size_t t = 0; t < free_pos.size(); ++t)
                    basis.set(free_pos[t].first, free_pos[t].second,
                              Scalar::residue(f, digits[t]));
                out.push_back(Subspace::span(basis));
                std::size_t t = digits.size();
                while (t > 0) {
                    if (++digits[t - 1] < p) break;
                    digits[t - 1] = 0;
                    --t;
                }
                if (t == 0) break;
            }
            more_combinations = false;
            for (std::size_t k = r; k-- > 0;) {
                if (piv[k] < n - r + k) {
                    ++piv[k];
                    for (std::size_t j = k + 1; j < r; ++j) piv[j] = piv[j - 1] + 1;
                    more_combinations = true;
                    break;
                }
            }
        }
    }
    return out;
}

std::vector<IdealHandle> enumerate_ideals(const Algebra& a) {
    std::vector<IdealHandle> out;
    for (Subspace& s : enumerate_subspaces(a.field(), a.dim()))
        if (is_ideal(a, s, Sidedness::TwoSided))
            out.push_back(IdealHandle{std::move(s), Sidedness::TwoSided});
    return out;
}

mpz_class gaussian_binomial(std::size_t n, std::size_t r, std::uint32_t p) {
    if (r > n) return 0;
    mpz_class num = 1, den = 1;
    mpz_class pz(p);
    for (std::size_t i = 0; i < r; ++i) {
        mpz_class pn, pd;
        mpz_pow_ui(pn.get_mpz_t(), pz.get_mpz_t(), n - i);
        mpz_pow_ui(pd.get_mpz_t(), pz.get_mpz_t(), i + 1);
        num *= pn - 1;
        den *= pd - 1;
    }
    return num / den;
}

} // namespace novikov
