#pragma once

// Worked examples with one-dimensional a: the odd extension (x odd) and the
// Heisenberg-type extension by an even derivation (x even). Both are written
// out from their closed-form brackets, independently of double_extend.

#include "qsuper/double_extension.hpp"

#include <cstddef>
#include <string>
#include <utility>

namespace qsuper {

struct OddExtensionParams {
    QuadraticLieSuperAlgebra h;  ///< odd metric
    GradedLinearMap d;           ///< odd derivation of h, skew for B_h
    Vec w;                       ///< even vector of h
    Scalar eta;
};

struct HeisenbergExtensionParams {
    QuadraticLieSuperAlgebra h;  ///< odd metric
    GradedLinearMap d;           ///< even derivation of h, skew for B_h
};

namespace detail {

inline void require(const CheckResult& r, const std::string& id) {
    if (!r) {
        Witness w = *r.witness;
        w.check = id;
        throw InvalidParams(std::move(w));
    }
}

inline void check_derivation_params(const QuadraticLieSuperAlgebra& h, const GradedLinearMap& d, Parity degree) {
    if (h.degree() != Parity::odd()) throw InvalidParams(Witness{"metric-degree", {}, {}});
    if (d.source() != h.space() || d.target() != h.space()) throw std::invalid_argument("D must act on h");
    if (d.degree() != degree) throw InvalidParams(Witness{"derivation-degree", {}, {}});
    require(check_derivation(d.matrix(), degree, h.bracket()), "rho-derivation");
    require(check_metric_skew(d.matrix(), degree, h.space(), h.metric().matrix()), "rho-skew");
}

inline SuperSpace one_dim_extension_space(const SuperSpace& h, const std::string& x, Parity px, const std::string& dual,
                                          Parity pd) {
    std::vector<BasisVector> basis{{x, px}};
    basis.insert(basis.end(), h.basis().begin(), h.basis().end());
    basis.push_back({dual, pd});
    return SuperSpace(std::move(basis));
}

/// B_h on the h block, B(x, alpha) = B(alpha, x) = 1.
inline GradedBilinearForm one_dim_extension_metric(const QuadraticLieSuperAlgebra& h, const SuperSpace& space) {
    const std::size_t q = h.dim(), n = q + 2;
    Matrix m(n, n);
    for (std::size_t u = 0; u < q; ++u)
        for (std::size_t v = 0; v < q; ++v) m(1 + u, 1 + v) = h.metric()(u, v);
    m(0, n - 1) = 1;
    m(n - 1, 0) = 1;
    return {space, Parity::odd(), std::move(m)};
}

}  // namespace detail

/// Validates D (odd skew derivation), w (even), D^2 = 1/2 ad_h(w) and D(w) = 0.
/// Throws InvalidParams naming the failed condition.
inline void validate(const OddExtensionParams& p) {
    detail::check_derivation_params(p.h, p.d, Parity::odd());
    const auto& H = p.h.space();
    if (p.w.size() != H.dim()) throw std::invalid_argument("w has wrong length");
    if (H.parity_of(p.w) != Parity::even()) throw InvalidParams(Witness{"lambda-grading", {}, p.w});
    const Matrix r = p.d.matrix() * p.d.matrix() - Scalar(1, 2) * p.h.bracket().ad(p.w);
    if (!r.is_zero()) throw InvalidParams(Witness{"rho-bracket", {0, 0}, detail::flatten(r)});
    if (auto dw = p.d(p.w); !is_zero(dw)) throw InvalidParams(Witness{"lambda-cocycle", {0, 0, 0}, std::move(dw)});
}

inline void validate(const HeisenbergExtensionParams& p) { detail::check_derivation_params(p.h, p.d, Parity::even()); }

/// Basis x (odd), h, P(x)* (even):
///   [x,x] = w + eta P(x)*,  [x,u] = D(u) - (-1)^{|u|} B_h(u,w) P(x)*,
///   [u,v] = [u,v]_h + B_h(D(u),v) P(x)*,  [x,P(x)*] = 0.
inline QuadraticLieSuperAlgebra odd_extension_dim1(const OddExtensionParams& p) {
    validate(p);
    const auto& H = p.h.space();
    const std::size_t q = H.dim(), n = q + 2, alpha = n - 1;
    const SuperSpace space = detail::one_dim_extension_space(H, "x", Parity::odd(), "P(x)*", Parity::even());
    SuperBracket b(space);

    Vec xx = zero_vec(n);
    for (std::size_t k = 0; k < q; ++k) xx[1 + k] = p.w[k];
    xx[alpha] = p.eta;
    b.set(0, 0, xx);

    const Matrix& D = p.d.matrix();
    const Matrix& Bh = p.h.metric().matrix();
    const Vec bw = Bh.apply(p.w);  // B_h(e_u, w)
    for (std::size_t u = 0; u < q; ++u) {
        Vec v = zero_vec(n);
        for (std::size_t k = 0; k < q; ++k) v[1 + k] = D(k, u);
        v[alpha] = -sign(H.parity(u)) * bw[u];
        b.set_skew(0, 1 + u, v);
    }
    const Matrix dbh = D.transpose() * Bh;  // (u,v) -> B_h(D u, v)
    for (std::size_t u = 0; u < q; ++u)
        for (std::size_t v = 0; v < q; ++v) {
            Vec val = zero_vec(n);
            for (std::size_t k = 0; k < q; ++k) val[1 + k] = p.h.bracket()(u, v)[k];
            val[alpha] = dbh(u, v);
            b.set(1 + u, 1 + v, val);
        }
    return {LieSuperAlgebra(std::move(b)), detail::one_dim_extension_metric(p.h, space)};
}

/// The context a = {x odd}, rho(x) = D, lambda(x,x) = w, omega(x,x) = eta P(x)*.
inline DeltaContext odd_extension_context(const OddExtensionParams& p) {
    auto c = DeltaContext::trivial(Parity::odd(), LieSuperAlgebra::abelian(SuperSpace({{"x", Parity::odd()}})), p.h);
    c.rho[0] = p.d.matrix();
    c.lambda.set(0, 0, p.w);
    c.omega(0, 0, 0) = p.eta;
    return c;
}

/// Basis x (even), h, P(x)* (odd):
///   [x,u] = D(u),  [u,v] = [u,v]_h + B_h(D(u),v) P(x)*,  x and P(x)* otherwise central.
inline QuadraticLieSuperAlgebra heisenberg_extension(const HeisenbergExtensionParams& p) {
    validate(p);
    const auto& H = p.h.space();
    const std::size_t q = H.dim(), n = q + 2, alpha = n - 1;
    const SuperSpace space = detail::one_dim_extension_space(H, "x", Parity::even(), "P(x)*", Parity::odd());
    SuperBracket b(space);
    const Matrix& D = p.d.matrix();
    for (std::size_t u = 0; u < q; ++u) {
        Vec v = zero_vec(n);
        for (std::size_t k = 0; k < q; ++k) v[1 + k] = D(k, u);
        b.set_skew(0, 1 + u, v);
    }
    const Matrix dbh = D.transpose() * p.h.metric().matrix();
    for (std::size_t u = 0; u < q; ++u)
        for (std::size_t v = 0; v < q; ++v) {
            Vec val = zero_vec(n);
            for (std::size_t k = 0; k < q; ++k) val[1 + k] = p.h.bracket()(u, v)[k];
            val[alpha] = dbh(u, v);
            b.set(1 + u, 1 + v, val);
        }
    return {LieSuperAlgebra(std::move(b)), detail::one_dim_extension_metric(p.h, space)};
}

inline DeltaContext heisenberg_context(const HeisenbergExtensionParams& p) {
    auto c = DeltaContext::trivial(Parity::odd(), LieSuperAlgebra::abelian(SuperSpace({{"x", Parity::even()}})), p.h);
    c.rho[0] = p.d.matrix();
    return c;
}

/// True when h is abelian and omega(u,v) = B_h(D(u),v) is non-degenerate.
inline bool heisenberg_isometry_applies(const HeisenbergExtensionParams& p) {
    return p.h.bracket().is_abelian() && rank(p.d.matrix().transpose() * p.h.metric().matrix()) == p.h.dim();
}

/// h(D) = F D (+) h (+) F hbar with [D,u] = D(u), [u,v] = omega(u,v) hbar,
/// B(D, hbar) = 1 and B_h on h. Requires heisenberg_isometry_applies.
inline QuadraticLieSuperAlgebra heisenberg_target(const HeisenbergExtensionParams& p) {
    validate(p);
    if (!p.h.bracket().is_abelian()) throw InvalidParams(Witness{"h-abelian", {}, {}});
    const Matrix omega = p.d.matrix().transpose() * p.h.metric().matrix();
    if (rank(omega) != p.h.dim()) throw InvalidParams(Witness{"omega-nondegenerate", {}, {}});
    const auto& H = p.h.space();
    const std::size_t q = H.dim(), n = q + 2;
    const SuperSpace space = detail::one_dim_extension_space(H, "D", Parity::even(), "hbar", Parity::odd());
    SuperBracket b(space);
    for (std::size_t u = 0; u < q; ++u) {
        b.set_skew(0, 1 + u, [&] {
            Vec v = zero_vec(n);
            for (std::size_t k = 0; k < q; ++k) v[1 + k] = p.d.matrix()(k, u);
            return v;
        }());
        for (std::size_t v = 0; v < q; ++v) b.constant(1 + u, 1 + v, n - 1) = omega(u, v);
    }
    return {LieSuperAlgebra(std::move(b)), detail::one_dim_extension_metric(p.h, space)};
}

/// Psi: eta x + u + zeta P(x)* -> eta D + u + zeta hbar, checked on the basis.
inline CheckResult check_heisenberg_isometry(const HeisenbergExtensionParams& p) {
    const auto g = heisenberg_extension(p);
    const auto target = heisenberg_target(p);
    return check_isometry(g, target, Matrix::identity(g.dim()));
}

}  // namespace qsuper
