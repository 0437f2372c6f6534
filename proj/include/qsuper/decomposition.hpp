#pragma once

// Inverse of the double extension: given a quadratic Lie superalgebra g of
// degree delta and an abelian isotropic ideal I, split g = a (+) h (+) I,
// read off the structure maps, rebuild a context, and certify that its
// double extension is isometric to g via x + u + alpha -> x + u + xi_delta(alpha).

#include "qsuper/double_extension.hpp"
#include "qsuper/superalgebra.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qsuper {

/// Basis of a candidate ideal, as coordinate vectors over g's basis.
struct IdealSpec {
    std::vector<Vec> basis;
};

/// S-perp = {v : B(s, v) = 0 for all s in S}, as a homogeneous basis with the
/// even vectors first. Vectors in S are assumed homogeneous.
inline std::vector<Vec> orthogonal_complement(const std::vector<Vec>& subspace, const GradedBilinearForm& b) {
    const SuperSpace& V = b.space();
    std::vector<Vec> out;
    for (Parity p : {Parity::even(), Parity::odd()}) {
        const auto idx = V.indices_of(p);
        Matrix sys(subspace.size(), idx.size());
        for (std::size_t s = 0; s < subspace.size(); ++s) {
            const Vec row = b.matrix().transpose().apply(subspace[s]);  // B(s, e_j)
            for (std::size_t c = 0; c < idx.size(); ++c) sys(s, c) = row[idx[c]];
        }
        for (const auto& sol : nullspace(sys)) {
            Vec v = zero_vec(V.dim());
            for (std::size_t c = 0; c < idx.size(); ++c) v[idx[c]] = sol[c];
            out.push_back(std::move(v));
        }
    }
    return out;
}

/// Vectors of `ambient` (in order) that extend `sub` to a basis of span(sub + ambient).
inline std::vector<Vec> greedy_complement(const std::vector<Vec>& sub, const std::vector<Vec>& ambient) {
    std::vector<Vec> span = sub, chosen;
    for (const auto& v : ambient) {
        if (in_span(span, v)) continue;
        span.push_back(v);
        chosen.push_back(v);
    }
    return chosen;
}

/// A one-dimensional central isotropic ideal spanned by a center basis vector
/// (even ones tried first), or nullopt. One-dimensional ideals are minimal.
/// Only covers the central case.
inline std::optional<IdealSpec> find_central_minimal_ideal(const QuadraticLieSuperAlgebra& g) {
    for (auto& v : center(g.algebra()))
        if (g.metric()(v, v).is_zero()) return IdealSpec{{std::move(v)}};
    return std::nullopt;
}

/// Checks the hypotheses decompose relies on: homogeneous independent
/// vectors, [g,I] in I, [I,I] = 0, I isotropic, and [I, I-perp] = 0.
inline CheckResult check_ideal(const QuadraticLieSuperAlgebra& g, const IdealSpec& ideal) {
    const auto& V = g.space();
    const auto& I = ideal.basis;
    for (std::size_t k = 0; k < I.size(); ++k) {
        if (I[k].size() != g.dim()) throw std::invalid_argument("ideal vector has wrong length");
        if (!V.parity_of(I[k]) || is_zero(I[k])) return CheckResult::fail({"ideal-homogeneous", {k}, I[k]});
    }
    if (!I.empty() && rank(Matrix::from_columns(g.dim(), I)) != I.size())
        return CheckResult::fail({"ideal-independent", {}, {}});
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t k = 0; k < I.size(); ++k)
            if (auto v = g.bracket().apply_left(i, I[k]); !in_span(I, v))
                return CheckResult::fail({"ideal", {i, k}, std::move(v)});
    for (std::size_t k = 0; k < I.size(); ++k)
        for (std::size_t l = 0; l < I.size(); ++l) {
            if (auto v = g.bracket()(I[k], I[l]); !is_zero(v)) return CheckResult::fail({"ideal-abelian", {k, l}, v});
            if (auto s = g.metric()(I[k], I[l]); !s.is_zero()) return CheckResult::fail({"ideal-isotropic", {k, l}, {s}});
        }
    const auto perp = orthogonal_complement(I, g.metric());
    for (std::size_t k = 0; k < I.size(); ++k)
        for (std::size_t m = 0; m < perp.size(); ++m)
            if (auto v = g.bracket()(I[k], perp[m]); !is_zero(v))
                return CheckResult::fail({"ideal-centralizes-perp", {k, m}, std::move(v)});
    return CheckResult::pass();
}

/// Isotropic complement a to the isotropic subspace I, paired with I by the
/// identity matrix: B(I_j, a_k) = [j == k]. When `h_complement` is nonempty,
/// a is taken inside h-perp.
///
/// Dual vectors d_k with B(I_j, d_k) = [j == k] are solved for in canonical
/// basis order (free coordinates zero), then corrected by multiples of I to
/// kill the Gram matrix G = (B(d_k, d_m)). Odd forms: only the duals of even
/// ideal vectors are corrected, by their pairings with the even duals. Even
/// forms: the same scheme inside each parity, with the upper triangle of G
/// (and half its diagonal) moved into the corrections.
inline std::vector<Vec> witt_complement(const IdealSpec& ideal, const GradedBilinearForm& b,
                                        const std::vector<Vec>& h_complement = {}) {
    const SuperSpace& V = b.space();
    const Parity delta = b.degree();
    const auto& I = ideal.basis;
    const std::size_t r = I.size(), n = V.dim();

    std::vector<Vec> ambient;
    if (h_complement.empty()) {
        for (std::size_t i = 0; i < n; ++i) ambient.push_back(unit_vec(n, i));
    } else {
        ambient = orthogonal_complement(h_complement, b);
    }

    std::vector<Parity> ideal_parity(r), dual_parity(r);
    for (std::size_t k = 0; k < r; ++k) {
        const auto p = V.parity_of(I[k]);
        if (!p) throw DegenerateInput("ideal vector " + std::to_string(k) + " is not homogeneous");
        ideal_parity[k] = *p;
        dual_parity[k] = *p + delta;
    }

    std::vector<Vec> duals;
    for (std::size_t k = 0; k < r; ++k) {
        std::vector<Vec> candidates;
        for (const auto& w : ambient)
            if (!is_zero(w) && V.parity_of(w) == dual_parity[k]) candidates.push_back(w);
        Matrix sys(r, candidates.size());
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t c = 0; c < candidates.size(); ++c) sys(j, c) = b(I[j], candidates[c]);
        const auto coef = solve(sys, unit_vec(r, k));
        if (!coef) throw DegenerateInput("no dual vector for ideal vector " + std::to_string(k));
        Vec d = zero_vec(n);
        for (std::size_t c = 0; c < candidates.size(); ++c) axpy((*coef)[c], candidates[c], d);
        duals.push_back(std::move(d));
    }

    std::vector<Vec> a;
    for (std::size_t k = 0; k < r; ++k) {
        Vec v = duals[k];
        for (std::size_t m = 0; m < r; ++m) {
            const Scalar gram = b(duals[k], duals[m]);
            if (gram.is_zero()) continue;
            Scalar c = 0;
            if (delta.is_odd()) {
                if (dual_parity[k].is_odd() && !dual_parity[m].is_odd()) c = gram;
            } else if (k < m) {
                c = gram;
            } else if (k == m) {
                c = gram / 2;
            }
            axpy(-c, I[m], v);
        }
        a.push_back(std::move(v));
    }
    return a;
}

inline std::vector<Vec> witt_complement(const IdealSpec& ideal, const QuadraticLieSuperAlgebra& g,
                                        const std::vector<Vec>& h_complement) {
    return witt_complement(ideal, g.metric(), h_complement);
}

/// The bracket of g in the basis a (+) h (+) I, split into components.
struct StructureMaps {
    SuperBracket a_bracket;     ///< [x,y]_a
    BilinearTable lambda;       ///< a x a -> h
    BilinearTable mu;           ///< a x a -> I
    std::vector<Matrix> rho;    ///< rho[x] : h -> h
    std::vector<Matrix> tau;    ///< tau[x] : h -> I
    SuperBracket h_bracket;     ///< [u,v]_h
    BilinearTable gamma;        ///< h x h -> I
    std::vector<Matrix> sigma;  ///< sigma[x] : I -> I
};

namespace detail {

inline SuperSpace subspace_space(const SuperSpace& V, const std::vector<Vec>& vectors, const std::string& prefix,
                                 std::set<std::string>& used) {
    std::vector<BasisVector> basis;
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        const auto p = V.parity_of(vectors[k]);
        if (!p) throw DegenerateInput(prefix + " vector " + std::to_string(k) + " is not homogeneous");
        std::string label;
        std::size_t nonzero = 0, where = 0;
        for (std::size_t i = 0; i < vectors[k].size(); ++i)
            if (!vectors[k][i].is_zero()) ++nonzero, where = i;
        if (nonzero == 1 && vectors[k][where] == 1) label = V.label(where);
        if (label.empty() || used.count(label)) {
            std::size_t suffix = k;
            do label = prefix + std::to_string(suffix++);
            while (used.count(label));
        }
        used.insert(label);
        basis.push_back({label, *p});
    }
    return SuperSpace(std::move(basis));
}

}  // namespace detail

/// Splits every bracket of basis vectors along g = a (+) h (+) I. Throws
/// NotAnIdealSplit if a component lands outside its expected summand.
inline StructureMaps extract_structure_maps(const QuadraticLieSuperAlgebra& g, const IdealSpec& ideal,
                                            const std::vector<Vec>& a, const std::vector<Vec>& h) {
    const std::size_t p = a.size(), q = h.size(), r = ideal.basis.size(), n = g.dim();
    if (p + q + r != n) throw std::invalid_argument("a, h and I do not add up to g");
    std::vector<Vec> cols = a;
    cols.insert(cols.end(), h.begin(), h.end());
    cols.insert(cols.end(), ideal.basis.begin(), ideal.basis.end());
    const Matrix basis = Matrix::from_columns(n, cols);
    const auto inv = inverse(basis);
    if (!inv) throw NotAnIdealSplit(Witness{"direct-sum", {}, {}});

    std::set<std::string> used;
    const SuperSpace A = detail::subspace_space(g.space(), a, "a", used);
    const SuperSpace H = detail::subspace_space(g.space(), h, "h", used);

    StructureMaps m{SuperBracket(A), BilinearTable(p, p, q), BilinearTable(p, p, r), {}, {}, SuperBracket(H),
                    BilinearTable(q, q, r), {}};
    m.rho.assign(p, Matrix(q, q));
    m.tau.assign(p, Matrix(r, q));
    m.sigma.assign(p, Matrix(r, r));

    auto coords = [&](std::size_t i, std::size_t j) { return inv->apply(g.bracket()(cols[i], cols[j])); };
    auto require_zero = [&](const Vec& v, std::size_t from, std::size_t to, const std::string& what, std::size_t i,
                            std::size_t j) {
        for (std::size_t k = from; k < to; ++k)
            if (!v[k].is_zero()) throw NotAnIdealSplit(Witness{what, {i, j, k}, {v[k]}});
    };

    for (std::size_t x = 0; x < p; ++x) {
        for (std::size_t y = 0; y < p; ++y) {
            const Vec v = coords(x, y);
            for (std::size_t k = 0; k < p; ++k) m.a_bracket.constant(x, y, k) = v[k];
            for (std::size_t k = 0; k < q; ++k) m.lambda(x, y, k) = v[p + k];
            for (std::size_t k = 0; k < r; ++k) m.mu(x, y, k) = v[p + q + k];
        }
        for (std::size_t u = 0; u < q; ++u) {
            const Vec v = coords(x, p + u);
            require_zero(v, 0, p, "split-a-h", x, u);
            for (std::size_t k = 0; k < q; ++k) m.rho[x](k, u) = v[p + k];
            for (std::size_t k = 0; k < r; ++k) m.tau[x](k, u) = v[p + q + k];
        }
        for (std::size_t l = 0; l < r; ++l) {
            const Vec v = coords(x, p + q + l);
            require_zero(v, 0, p + q, "split-a-I", x, l);
            for (std::size_t k = 0; k < r; ++k) m.sigma[x](k, l) = v[p + q + k];
        }
    }
    for (std::size_t u = 0; u < q; ++u) {
        for (std::size_t v = 0; v < q; ++v) {
            const Vec w = coords(p + u, p + v);
            require_zero(w, 0, p, "split-h-h", u, v);
            for (std::size_t k = 0; k < q; ++k) m.h_bracket.constant(u, v, k) = w[p + k];
            for (std::size_t k = 0; k < r; ++k) m.gamma(u, v, k) = w[p + q + k];
        }
        for (std::size_t l = 0; l < r; ++l) require_zero(coords(p + u, p + q + l), 0, n, "split-h-I", u, l);
    }
    for (std::size_t l = 0; l < r; ++l)
        for (std::size_t k = 0; k < r; ++k) require_zero(coords(p + q + l, p + q + k), 0, n, "split-I-I", l, k);
    return m;
}

/// xi_delta : I -> P_delta(a)* (even) and xi : I -> a* (degree delta), both
/// given by alpha -> B(alpha, .) restricted to a. They share one matrix:
/// entry (k, l) = B(I_l, a_k).
struct XiMaps {
    GradedLinearMap xi_delta;
    GradedLinearMap xi;
};

inline XiMaps build_xi(const IdealSpec& ideal, const std::vector<Vec>& a, const GradedBilinearForm& b,
                       const SuperSpace& a_space, const SuperSpace& ideal_space) {
    const std::size_t r = ideal.basis.size();
    if (a.size() != r) throw DegeneratePairing("dim a != dim I");
    Matrix m(r, r);
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = 0; l < r; ++l) m(k, l) = b(ideal.basis[l], a[k]);
    if (rank(m) != r) throw DegeneratePairing("B restricted to I x a is singular");
    const Parity delta = b.degree();
    std::vector<BasisVector> shifted;
    for (const auto& v : a_space.basis())
        shifted.push_back({delta.is_odd() ? "P(" + v.label + ")*" : v.label + "*", v.parity + delta});
    return {GradedLinearMap(ideal_space, SuperSpace(std::move(shifted)), Parity::even(), m),
            GradedLinearMap(ideal_space, dual_space(a_space), delta, m)};
}

struct DecompositionResult {
    std::vector<Vec> a, h, ideal;  ///< bases in g's coordinates
    StructureMaps maps;
    XiMaps xi;
    DeltaContext context;
    QuadraticLieSuperAlgebra extension;  ///< double_extend(context)
    Matrix isometry;                     ///< g -> extension, x + u + alpha -> x + u + xi_delta(alpha)
};

/// Splits g along the ideal, verifies every structural claim the inverse
/// construction uses, and certifies the isometry with the double extension
/// of the recovered context. Throws ClaimViolated naming the failed claim.
/// Does not test indecomposability or non-simplicity of g.
inline DecompositionResult decompose(const QuadraticLieSuperAlgebra& g, const IdealSpec& ideal) {
    if (auto c = check_ideal(g, ideal); !c) throw ClaimViolated(*c.witness);
    const auto& B = g.metric();
    const Parity delta = g.degree();
    const std::size_t n = g.dim(), r = ideal.basis.size();

    DecompositionResult res;
    res.ideal = ideal.basis;
    res.h = greedy_complement(ideal.basis, orthogonal_complement(ideal.basis, B));
    try {
        res.a = witt_complement(ideal, B, res.h);
    } catch (const DegenerateInput& e) {
        throw ClaimViolated(Witness{"claim-witt-complement", {}, {}}, e.what());
    }
    res.maps = extract_structure_maps(g, ideal, res.a, res.h);
    const auto& m = res.maps;
    const std::size_t p = res.a.size(), q = res.h.size();

    std::vector<BasisVector> ideal_basis;
    for (std::size_t k = 0; k < r; ++k) ideal_basis.push_back({"I" + std::to_string(k), *g.space().parity_of(ideal.basis[k])});
    res.xi = build_xi(ideal, res.a, B, m.a_bracket.space(), SuperSpace(std::move(ideal_basis)));
    const Matrix& xi = res.xi.xi_delta.matrix();

    auto claim = [](const CheckResult& c, const std::string& id) {
        if (!c) {
            Witness w = *c.witness;
            w.check = id + ": " + w.check;
            throw ClaimViolated(std::move(w));
        }
    };
    auto fail = [](const std::string& id, std::vector<std::size_t> idx, Vec residual) {
        throw ClaimViolated(Witness{id, std::move(idx), std::move(residual)});
    };

    LieSuperAlgebra a_alg;
    try {
        a_alg = LieSuperAlgebra(m.a_bracket);
    } catch (const ValidationError& e) {
        claim(CheckResult::fail(e.witness()), "claim-a-algebra");
    }
    const auto& A = a_alg.space();

    // sum_cyclic (-1)^{|x||z|} (mu(x,[y,z]_a) + tau(x)lambda(y,z) + sigma(x)mu(y,z)) = 0
    for (std::size_t x = 0; x < p; ++x)
        for (std::size_t y = 0; y < p; ++y)
            for (std::size_t z = 0; z < p; ++z) {
                Vec res3 = zero_vec(r);
                for (const auto& t : detail::cyclic(x, y, z)) {
                    const Scalar s = sign(A.parity(t[0]) * A.parity(t[2]));
                    axpy(s, m.mu.apply_left(t[0], a_alg(t[1], t[2])), res3);
                    axpy(s, m.tau[t[0]].apply(m.lambda.at(t[1], t[2])), res3);
                    axpy(s, m.sigma[t[0]].apply(m.mu.at(t[1], t[2])), res3);
                }
                if (!is_zero(res3)) fail("claim-mu-cocycle", {x, y, z}, std::move(res3));
            }

    // xi o sigma(x) = ad*_delta(x) o xi
    const auto co = delta_coadjoint(a_alg, delta);
    for (std::size_t x = 0; x < p; ++x)
        if (!(xi * m.sigma[x] == co.action[x].matrix() * xi)) fail("claim-sigma-coadjoint", {x}, {});

    QuadraticLieSuperAlgebra h_alg;
    try {
        Matrix bh(q, q);
        for (std::size_t u = 0; u < q; ++u)
            for (std::size_t v = 0; v < q; ++v) bh(u, v) = B(res.h[u], res.h[v]);
        h_alg = QuadraticLieSuperAlgebra(LieSuperAlgebra(m.h_bracket),
                                         GradedBilinearForm(m.h_bracket.space(), delta, std::move(bh)));
    } catch (const ValidationError& e) {
        claim(CheckResult::fail(e.witness()), "claim-h-quadratic");
    }

    DeltaContext ctx{delta, a_alg, h_alg, m.rho, m.lambda, BilinearTable(p, p, p)};
    for (std::size_t x = 0; x < p; ++x)
        for (std::size_t y = 0; y < p; ++y) ctx.omega.set(x, y, xi.apply(m.mu.at(x, y)));

    for (std::size_t x = 0; x < p; ++x) {
        claim(check_derivation(m.rho[x], A.parity(x), h_alg.bracket()), "claim-rho-derivation");
        claim(check_metric_skew(m.rho[x], A.parity(x), h_alg.space(), h_alg.metric().matrix()), "claim-rho-skew");
    }

    BilinearTable chi(p, q, p), phi(q, q, p);
    for (std::size_t x = 0; x < p; ++x)
        for (std::size_t u = 0; u < q; ++u) chi.set(x, u, xi.apply(m.tau[x].column(u)));
    for (std::size_t u = 0; u < q; ++u)
        for (std::size_t v = 0; v < q; ++v) phi.set(u, v, xi.apply(m.gamma.at(u, v)));
    claim(check_chi(ctx, chi), "claim-chi");
    claim(check_phi(ctx, phi), "claim-phi");

    // The remaining context axioms (rho-bracket, lambda-cocycle, omega-cocycle,
    // super-cyclic for mu_delta) must all hold for the recovered data.
    static const std::map<std::string, std::string> claim_of = {{"super-cyclic", "claim-mu-cyclic"},
                                                               {"rho-bracket", "claim-rho-bracket"},
                                                               {"lambda-cocycle", "claim-a-cocycle"},
                                                               {"omega-cocycle", "claim-mu-cocycle"}};
    if (auto v = validate_context(ctx); !v.empty()) {
        const auto it = claim_of.find(v.front().check);
        claim(CheckResult::fail(v.front()), it == claim_of.end() ? "claim-context" : it->second);
    }

    res.context = ctx;
    res.extension = double_extend(ctx);

    Matrix to_new = *inverse(Matrix::from_columns(n, [&] {
        std::vector<Vec> cols = res.a;
        cols.insert(cols.end(), res.h.begin(), res.h.end());
        cols.insert(cols.end(), res.ideal.begin(), res.ideal.end());
        return cols;
    }()));
    Matrix block = Matrix::identity(n);
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = 0; l < r; ++l) block(p + q + k, p + q + l) = xi(k, l);
    res.isometry = block * to_new;
    claim(check_isometry(g, res.extension, res.isometry), "claim-isometry");
    return res;
}

}  // namespace qsuper
