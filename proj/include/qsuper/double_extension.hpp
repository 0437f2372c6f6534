#pragma once

// Contexts of generalized double extension and the construction of the
// quadratic Lie superalgebra of degree delta on a (+) h (+) P_delta(a)*.
//
// Coordinates on P_delta(a)*: component k of a functional is its value on
// P_delta(x_k); the basis functional (P_delta x_k)* has parity |x_k| + delta.

#include "qsuper/semidirect.hpp"
#include "qsuper/superalgebra.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qsuper {

/// The data (h, [.,.]_h, B_h, rho, lambda, omega_delta) over the auxiliary
/// algebra a. Stored raw; validate_context checks every axiom.
struct DeltaContext {
    Parity delta;
    LieSuperAlgebra a;
    QuadraticLieSuperAlgebra h;
    std::vector<Matrix> rho;  ///< rho[i] acts on h with degree |a_i|
    BilinearTable lambda;     ///< a x a -> h
    BilinearTable omega;      ///< a x a -> P_delta(a)*

    /// Context with rho = 0, lambda = 0, omega = 0.
    static DeltaContext trivial(Parity delta, LieSuperAlgebra a, QuadraticLieSuperAlgebra h) {
        const std::size_t p = a.dim(), q = h.dim();
        DeltaContext c{delta, std::move(a), std::move(h), {}, BilinearTable(p, p, q), BilinearTable(p, p, p)};
        c.rho.assign(p, Matrix(q, q));
        return c;
    }

    GradedLinearMap rho_map(std::size_t i) const { return {h.space(), h.space(), a.parity(i), rho.at(i)}; }

    /// P_delta(a)* with labels "P(x)*" (delta = 1) or "x*" (delta = 0).
    SuperSpace dual_block() const {
        std::vector<BasisVector> basis;
        for (const auto& b : a.space().basis())
            basis.push_back({delta.is_odd() ? "P(" + b.label + ")*" : b.label + "*", b.parity + delta});
        return SuperSpace(std::move(basis));
    }

    friend bool operator==(const DeltaContext&, const DeltaContext&) = default;
};

/// The maps chi_delta and Phi_delta determined by a context.
struct DerivedContextMaps {
    BilinearTable chi;  ///< a x h -> P_delta(a)*
    BilinearTable phi;  ///< h x h -> P_delta(a)*
};

/// chi_delta(x,u)(P_delta(y)) = -(-1)^{|u||y|} B_h(lambda(x,y), u)
inline BilinearTable derive_chi(const DeltaContext& c) {
    const std::size_t p = c.a.dim(), q = c.h.dim();
    BilinearTable chi(p, q, p);
    const auto& B = c.h.metric();
    for (std::size_t x = 0; x < p; ++x)
        for (std::size_t y = 0; y < p; ++y) {
            const Vec bl = B.matrix().transpose().apply(c.lambda.at(x, y));  // B_h(lambda(x,y), u_m) for all m
            for (std::size_t u = 0; u < q; ++u)
                if (!bl[u].is_zero()) chi(x, u, y) = -sign(c.h.space().parity(u) * c.a.parity(y)) * bl[u];
        }
    return chi;
}

/// Phi_delta(u,v)(P_delta(x)) = (-1)^{|x|(|u|+|v|)} B_h(rho(x)(u), v)
inline BilinearTable derive_phi(const DeltaContext& c) {
    const std::size_t p = c.a.dim(), q = c.h.dim();
    const auto& H = c.h.space();
    BilinearTable phi(q, q, p);
    for (std::size_t x = 0; x < p; ++x) {
        const Matrix m = c.rho[x].transpose() * c.h.metric().matrix();  // (u,v) -> B_h(rho(x)u, v)
        for (std::size_t u = 0; u < q; ++u)
            for (std::size_t v = 0; v < q; ++v)
                if (!m(u, v).is_zero()) phi(u, v, x) = sign(c.a.parity(x) * (H.parity(u) + H.parity(v))) * m(u, v);
    }
    return phi;
}

inline DerivedContextMaps derive_maps(const DeltaContext& c) { return {derive_chi(c), derive_phi(c)}; }

/// Human-readable names of the context checks, keyed by check id.
inline std::string describe_check(const std::string& id) {
    static const std::map<std::string, std::string> names = {
        {"metric-degree", "metric of h has the wrong degree"},
        {"rho-grading", "rho(x) is not homogeneous of degree |x|"},
        {"rho-derivation", "rho(x) is not a derivation of h"},
        {"rho-skew", "rho(x) is not skew-symmetric for B_h"},
        {"lambda-grading", "lambda is not even"},
        {"lambda-skew", "lambda is not super skew-symmetric"},
        {"omega-grading", "omega is not even"},
        {"omega-skew", "omega is not super skew-symmetric"},
        {"rho-bracket", "[rho(x),rho(y)] - rho([x,y]) = ad(lambda(x,y)) fails"},
        {"lambda-cocycle", "cyclic rho/lambda condition fails"},
        {"omega-cocycle", "cyclic omega/chi condition fails"},
        {"super-cyclic", "super cyclic condition on omega fails"},
        {"chi", "chi does not match its defining formula"},
        {"phi", "Phi does not match its defining formula"},
        {"lemma-phi-rho", "Phi/rho/chi compatibility fails"},
        {"lemma-chi-rho", "chi/rho/Phi compatibility fails"},
        {"phi-cocycle", "Phi is not a 2-cocycle of h"},
    };
    auto it = names.find(id);
    return it == names.end() ? id : it->second;
}

namespace detail {

using Triple = std::array<std::size_t, 3>;

inline std::array<Triple, 3> cyclic(std::size_t x, std::size_t y, std::size_t z) {
    return {Triple{x, y, z}, Triple{y, z, x}, Triple{z, x, y}};
}

inline void check_shapes(const DeltaContext& c) {
    const std::size_t p = c.a.dim(), q = c.h.dim();
    bool ok = c.rho.size() == p;
    for (const auto& m : c.rho) ok = ok && m.rows() == q && m.cols() == q;
    ok = ok && c.lambda.left_dim() == p && c.lambda.right_dim() == p && c.lambda.target_dim() == q;
    ok = ok && c.omega.left_dim() == p && c.omega.right_dim() == p && c.omega.target_dim() == p;
    if (!ok) throw std::invalid_argument("context maps have the wrong shape");
}

}  // namespace detail

/// Every context axiom, exhaustively on basis tuples. Returns all violations
/// (at most one witness per check id); empty means the context is valid.
inline std::vector<Witness> validate_context(const DeltaContext& c) {
    detail::check_shapes(c);
    std::vector<Witness> out;
    const std::size_t p = c.a.dim(), q = c.h.dim();
    const auto& A = c.a.space();
    const auto& H = c.h.space();
    const SuperSpace dual = c.dual_block();

    if (c.h.degree() != c.delta) out.push_back({"metric-degree", {}, {}});

    auto first_of = [&](const std::string& id, auto&& body) {
        if (auto w = body(); w) {
            w->check = id;
            out.push_back(std::move(*w));
        }
    };

    first_of("rho-grading", [&]() -> std::optional<Witness> {
        for (std::size_t x = 0; x < p; ++x)
            for (std::size_t r = 0; r < q; ++r)
                for (std::size_t k = 0; k < q; ++k)
                    if (!c.rho[x](r, k).is_zero() && H.parity(r) != H.parity(k) + A.parity(x))
                        return Witness{"", {x, r, k}, {c.rho[x](r, k)}};
        return std::nullopt;
    });
    first_of("rho-derivation", [&]() -> std::optional<Witness> {
        for (std::size_t x = 0; x < p; ++x)
            if (auto r = check_derivation(c.rho[x], A.parity(x), c.h.bracket()); !r) {
                auto w = *r.witness;
                w.indices.insert(w.indices.begin(), x);
                return w;
            }
        return std::nullopt;
    });
    first_of("rho-skew", [&]() -> std::optional<Witness> {
        for (std::size_t x = 0; x < p; ++x)
            if (auto r = check_metric_skew(c.rho[x], A.parity(x), H, c.h.metric().matrix()); !r) {
                auto w = *r.witness;
                w.indices.insert(w.indices.begin(), x);
                return w;
            }
        return std::nullopt;
    });
    if (auto r = detail::check_even_skew_table(c.lambda, A, H, "lambda"); !r) out.push_back(*r.witness);
    if (auto r = detail::check_even_skew_table(c.omega, A, dual, "omega"); !r) out.push_back(*r.witness);

    // [rho(x),rho(y)] - rho([x,y]_a) = ad_h(lambda(x,y))
    first_of("rho-bracket", [&]() -> std::optional<Witness> {
        for (std::size_t x = 0; x < p; ++x)
            for (std::size_t y = 0; y < p; ++y) {
                Matrix r = super_commutator(c.rho[x], A.parity(x), c.rho[y], A.parity(y));
                const auto xy = c.a(x, y);
                for (std::size_t k = 0; k < p; ++k)
                    if (!xy[k].is_zero()) r -= xy[k] * c.rho[k];
                r -= c.h.bracket().ad(c.lambda.at(x, y));
                if (!r.is_zero()) return Witness{"", {x, y}, detail::flatten(r)};
            }
        return std::nullopt;
    });

    // sum_cyclic (-1)^{|z||x|} (rho(x)lambda(y,z) + lambda(x,[y,z]_a)) = 0
    first_of("lambda-cocycle", [&]() -> std::optional<Witness> {
        for (std::size_t x = 0; x < p; ++x)
            for (std::size_t y = 0; y < p; ++y)
                for (std::size_t z = 0; z < p; ++z) {
                    Vec r = zero_vec(q);
                    for (const auto& t : detail::cyclic(x, y, z)) {
                        const Scalar s = sign(A.parity(t[2]) * A.parity(t[0]));
                        axpy(s, c.rho[t[0]].apply(c.lambda.at(t[1], t[2])), r);
                        axpy(s, c.lambda.apply_left(t[0], c.a(t[1], t[2])), r);
                    }
                    if (!is_zero(r)) return Witness{"", {x, y, z}, std::move(r)};
                }
        return std::nullopt;
    });

    // sum_cyclic (-1)^{|z||x|} (ad*_delta(x) omega(y,z) + omega(x,[y,z]_a) + chi(x, lambda(y,z))) = 0
    first_of("omega-cocycle", [&]() -> std::optional<Witness> {
        const auto co = delta_coadjoint(c.a, c.delta);
        const auto chi = derive_chi(c);
        for (std::size_t x = 0; x < p; ++x)
            for (std::size_t y = 0; y < p; ++y)
                for (std::size_t z = 0; z < p; ++z) {
                    Vec r = zero_vec(p);
                    for (const auto& t : detail::cyclic(x, y, z)) {
                        const Scalar s = sign(A.parity(t[2]) * A.parity(t[0]));
                        axpy(s, co.action[t[0]](c.omega.at(t[1], t[2])), r);
                        axpy(s, c.omega.apply_left(t[0], c.a(t[1], t[2])), r);
                        axpy(s, chi.apply_left(t[0], c.lambda.at(t[1], t[2])), r);
                    }
                    if (!is_zero(r)) return Witness{"", {x, y, z}, std::move(r)};
                }
        return std::nullopt;
    });

    // omega(x,y)(P_delta z) = (-1)^{(|y|+|z|)|x|} omega(y,z)(P_delta x)
    first_of("super-cyclic", [&]() -> std::optional<Witness> {
        for (std::size_t x = 0; x < p; ++x)
            for (std::size_t y = 0; y < p; ++y)
                for (std::size_t z = 0; z < p; ++z) {
                    Scalar r = c.omega(x, y, z) - sign((A.parity(y) + A.parity(z)) * A.parity(x)) * c.omega(y, z, x);
                    if (!r.is_zero()) return Witness{"", {x, y, z}, {r}};
                }
        return std::nullopt;
    });
    return out;
}

/// Compares a candidate chi against the defining formula (check id "chi").
inline CheckResult check_chi(const DeltaContext& c, const BilinearTable& chi) {
    const auto expected = derive_chi(c);
    for (std::size_t x = 0; x < c.a.dim(); ++x)
        for (std::size_t u = 0; u < c.h.dim(); ++u) {
            Vec r = Vec(chi.at(x, u).begin(), chi.at(x, u).end()) - Vec(expected.at(x, u).begin(), expected.at(x, u).end());
            if (!is_zero(r)) return CheckResult::fail({"chi", {x, u}, std::move(r)});
        }
    return CheckResult::pass();
}

/// Compares a candidate Phi against the defining formula (check id "phi").
inline CheckResult check_phi(const DeltaContext& c, const BilinearTable& phi) {
    const auto expected = derive_phi(c);
    for (std::size_t u = 0; u < c.h.dim(); ++u)
        for (std::size_t v = 0; v < c.h.dim(); ++v) {
            Vec r = Vec(phi.at(u, v).begin(), phi.at(u, v).end()) - Vec(expected.at(u, v).begin(), expected.at(u, v).end());
            if (!is_zero(r)) return CheckResult::fail({"phi", {u, v}, std::move(r)});
        }
    return CheckResult::pass();
}

/// The identities chi and Phi satisfy for any valid context:
///   Phi(rho(x)u, v) + (-1)^{|x||u|} Phi(u, rho(x)v) - ad*(x)Phi(u,v) - chi(x,[u,v]_h) = 0
///   chi([x,y]_a,u) - chi(x,rho(y)u) + (-1)^{|x||y|} chi(y,rho(x)u)
///     - ad*(x)chi(y,u) + (-1)^{|x||y|} ad*(y)chi(x,u) + Phi(lambda(x,y),u) = 0
///   sum_cyclic (-1)^{|u||w|} Phi(u,[v,w]_h) = 0
/// Throws InvalidContext if the context itself is invalid and LemmaViolation
/// if a valid context breaks an identity.
inline void check_lemma_identities(const DeltaContext& c) {
    if (auto v = validate_context(c); !v.empty()) throw InvalidContext(std::move(v));
    const std::size_t p = c.a.dim(), q = c.h.dim();
    const auto& A = c.a.space();
    const auto& H = c.h.space();
    const auto [chi, phi] = derive_maps(c);
    const auto co = delta_coadjoint(c.a, c.delta);
    std::vector<Witness> bad;

    [&] {
        for (std::size_t x = 0; x < p; ++x)
            for (std::size_t u = 0; u < q; ++u)
                for (std::size_t v = 0; v < q; ++v) {
                    Vec r = phi.apply_right(c.rho[x].column(u), v);
                    axpy(Scalar(sign(A.parity(x) * H.parity(u))), phi.apply_left(u, c.rho[x].column(v)), r);
                    axpy(-1, co.action[x](phi.at(u, v)), r);
                    axpy(-1, chi.apply_left(x, c.h.bracket()(u, v)), r);
                    if (!is_zero(r)) return bad.push_back({"lemma-phi-rho", {x, u, v}, std::move(r)});
                }
    }();
    [&] {
        for (std::size_t x = 0; x < p; ++x)
            for (std::size_t y = 0; y < p; ++y)
                for (std::size_t u = 0; u < q; ++u) {
                    const Scalar sxy = sign(A.parity(x) * A.parity(y));
                    Vec r = chi.apply_right(c.a(x, y), u);
                    axpy(-1, chi.apply_left(x, c.rho[y].column(u)), r);
                    axpy(sxy, chi.apply_left(y, c.rho[x].column(u)), r);
                    axpy(-1, co.action[x](chi.at(y, u)), r);
                    axpy(sxy, co.action[y](chi.at(x, u)), r);
                    axpy(1, phi.apply_right(c.lambda.at(x, y), u), r);
                    if (!is_zero(r)) return bad.push_back({"lemma-chi-rho", {x, y, u}, std::move(r)});
                }
    }();
    [&] {
        for (std::size_t u = 0; u < q; ++u)
            for (std::size_t v = 0; v < q; ++v)
                for (std::size_t w = 0; w < q; ++w) {
                    Vec r = zero_vec(p);
                    for (const auto& t : detail::cyclic(u, v, w))
                        axpy(Scalar(sign(H.parity(t[0]) * H.parity(t[2]))),
                             phi.apply_left(t[0], c.h.bracket()(t[1], t[2])), r);
                    if (!is_zero(r)) return bad.push_back({"phi-cocycle", {u, v, w}, std::move(r)});
                }
    }();
    if (!bad.empty()) throw LemmaViolation(std::move(bad));
}

/// The central extension (h (+) P_delta(a)*, [u,v]' = [u,v]_h + Phi(u,v)).
inline LieSuperAlgebra central_extension(const DeltaContext& c) {
    const std::size_t p = c.a.dim(), q = c.h.dim();
    const auto phi = derive_phi(c);
    SuperBracket b(direct_sum({c.h.space(), c.dual_block()}));
    for (std::size_t u = 0; u < q; ++u)
        for (std::size_t v = 0; v < q; ++v) {
            Vec val = zero_vec(q + p);
            for (std::size_t k = 0; k < q; ++k) val[k] = c.h.bracket()(u, v)[k];
            for (std::size_t k = 0; k < p; ++k) val[q + k] = phi(u, v, k);
            b.set(u, v, val);
        }
    return LieSuperAlgebra(std::move(b));
}

/// Theta(x)(u + alpha) = rho(x)u + ad*_delta(x)alpha + chi(x,u) on the
/// central extension, and Lambda = lambda + omega.
inline SemidirectData extension_data(const DeltaContext& c) {
    const std::size_t p = c.a.dim(), q = c.h.dim();
    const auto chi = derive_chi(c);
    const auto co = delta_coadjoint(c.a, c.delta);
    SemidirectData d{{}, BilinearTable(p, p, q + p)};
    for (std::size_t x = 0; x < p; ++x) {
        Matrix t(q + p, q + p);
        for (std::size_t r = 0; r < q; ++r)
            for (std::size_t k = 0; k < q; ++k) t(r, k) = c.rho[x](r, k);
        for (std::size_t u = 0; u < q; ++u)
            for (std::size_t k = 0; k < p; ++k) t(q + k, u) = chi(x, u, k);
        for (std::size_t r = 0; r < p; ++r)
            for (std::size_t k = 0; k < p; ++k) t(q + r, q + k) = co.action[x].matrix()(r, k);
        d.theta.push_back(std::move(t));
        for (std::size_t y = 0; y < p; ++y) {
            for (std::size_t k = 0; k < q; ++k) d.lambda(x, y, k) = c.lambda(x, y, k);
            for (std::size_t k = 0; k < p; ++k) d.lambda(x, y, q + k) = c.omega(x, y, k);
        }
    }
    return d;
}

/// The invariant metric on a (+) h (+) P_delta(a)*:
///   B(x + u + alpha, y + v + beta) = (-1)^{|x||beta|} beta(x) + B_h(u,v) + alpha(y),
/// with |beta| the parity of beta as an element of P_delta(a)*.
inline GradedBilinearForm extension_metric(const DeltaContext& c, const SuperSpace& space) {
    const std::size_t p = c.a.dim(), q = c.h.dim();
    Matrix m(p + q + p, p + q + p);
    for (std::size_t u = 0; u < q; ++u)
        for (std::size_t v = 0; v < q; ++v) m(p + u, p + v) = c.h.metric()(u, v);
    for (std::size_t x = 0; x < p; ++x) {
        const std::size_t alpha = p + q + x;
        m(alpha, x) = 1;
        m(x, alpha) = sign(c.a.parity(x) * space.parity(alpha));
    }
    return {space, c.delta, std::move(m)};
}

/// Generalized double extension. Basis order: a, h, P_delta(a)*.
/// Throws InvalidContext when a context axiom fails.
inline QuadraticLieSuperAlgebra double_extend(const DeltaContext& c) {
    if (auto v = validate_context(c); !v.empty()) throw InvalidContext(std::move(v));
    LieSuperAlgebra g = semidirect_product(c.a, central_extension(c), extension_data(c));
    auto metric = extension_metric(c, g.space());
    return {std::move(g), std::move(metric)};
}

}  // namespace qsuper
