#pragma once

// Generalized semi-direct product of h by a through (Theta, Lambda).

#include "qsuper/superalgebra.hpp"

#include <cstddef>
#include <vector>

namespace qsuper {

/// Theta maps each basis vector x of a to an endomorphism of h of degree |x|;
/// Lambda is an even super skew-symmetric map a x a -> h.
struct SemidirectData {
    std::vector<Matrix> theta;
    BilinearTable lambda;
};

namespace detail {

inline Vec flatten(const Matrix& m) {
    Vec flat;
    for (std::size_t i = 0; i < m.rows(); ++i) flat.insert(flat.end(), m.row(i).begin(), m.row(i).end());
    return flat;
}

/// lambda(i,j) has parity |i|+|j| and lambda(j,i) = -(-1)^{|i||j|} lambda(i,j).
inline CheckResult check_even_skew_table(const BilinearTable& t, const SuperSpace& src, const SuperSpace& dst,
                                         const std::string& name) {
    for (std::size_t i = 0; i < src.dim(); ++i)
        for (std::size_t j = 0; j < src.dim(); ++j)
            for (std::size_t k = 0; k < dst.dim(); ++k)
                if (!t(i, j, k).is_zero() && dst.parity(k) != src.parity(i) + src.parity(j))
                    return CheckResult::fail({name + "-grading", {i, j, k}, {t(i, j, k)}});
    for (std::size_t i = 0; i < src.dim(); ++i)
        for (std::size_t j = i; j < src.dim(); ++j) {
            Vec r(t.at(i, j).begin(), t.at(i, j).end());
            axpy(Scalar(sign(src.parity(i) * src.parity(j))), t.at(j, i), r);
            if (!is_zero(r)) return CheckResult::fail({name + "-skew", {i, j}, std::move(r)});
        }
    return CheckResult::pass();
}

}  // namespace detail

/// Every precondition of the construction, in order: Theta(x) homogeneous of
/// degree |x| and a derivation of h; Lambda even and super skew-symmetric;
///   [Theta(x),Theta(y)] - Theta([x,y]_a) = ad_h(Lambda(x,y))          ("semidirect-1")
///   sum_cyclic (-1)^{|x||z|} (Theta(x)Lambda(y,z) + Lambda(x,[y,z]_a)) = 0  ("semidirect-2")
inline CheckResult check_semidirect_conditions(const LieSuperAlgebra& a, const LieSuperAlgebra& h,
                                               const SemidirectData& d) {
    const std::size_t p = a.dim(), q = h.dim();
    if (d.theta.size() != p || d.lambda.left_dim() != p || d.lambda.right_dim() != p || d.lambda.target_dim() != q)
        throw std::invalid_argument("semidirect data has wrong shape");
    for (std::size_t x = 0; x < p; ++x) {
        const auto& t = d.theta[x];
        for (std::size_t r = 0; r < q; ++r)
            for (std::size_t c = 0; c < q; ++c)
                if (!t(r, c).is_zero() && h.parity(r) != h.parity(c) + a.parity(x))
                    return CheckResult::fail({"theta-grading", {x, r, c}, {t(r, c)}});
        if (auto r = check_derivation(t, a.parity(x), h.bracket()); !r) {
            auto w = *r.witness;
            w.check = "theta-derivation";
            w.indices.insert(w.indices.begin(), x);
            return CheckResult::fail(std::move(w));
        }
    }
    if (auto r = detail::check_even_skew_table(d.lambda, a.space(), h.space(), "lambda"); !r) return r;

    for (std::size_t x = 0; x < p; ++x)
        for (std::size_t y = 0; y < p; ++y) {
            Matrix r = super_commutator(d.theta[x], a.parity(x), d.theta[y], a.parity(y));
            const auto xy = a(x, y);
            for (std::size_t k = 0; k < p; ++k)
                if (!xy[k].is_zero()) r -= xy[k] * d.theta[k];
            r -= h.bracket().ad(d.lambda.at(x, y));
            if (!r.is_zero()) return CheckResult::fail({"semidirect-1", {x, y}, detail::flatten(r)});
        }

    for (std::size_t x = 0; x < p; ++x)
        for (std::size_t y = 0; y < p; ++y)
            for (std::size_t z = 0; z < p; ++z) {
                Vec r = zero_vec(q);
                const std::size_t cyc[3][3] = {{x, y, z}, {y, z, x}, {z, x, y}};
                for (const auto& c : cyc) {
                    const Scalar s = sign(a.parity(c[0]) * a.parity(c[2]));
                    axpy(s, d.theta[c[0]].apply(d.lambda.at(c[1], c[2])), r);
                    axpy(s, d.lambda.apply_left(c[0], a(c[1], c[2])), r);
                }
                if (!is_zero(r)) return CheckResult::fail({"semidirect-2", {x, y, z}, std::move(r)});
            }
    return CheckResult::pass();
}

/// Lie superalgebra on a (+) h with
///   [x+u, y+v] = [x,y]_a + Theta(x)v - (-1)^{|x||y|} Theta(y)u + Lambda(x,y) + [u,v]_h.
/// Basis order: a, then h. Throws ConditionViolated on a failed precondition.
inline LieSuperAlgebra semidirect_product(const LieSuperAlgebra& a, const LieSuperAlgebra& h,
                                          const SemidirectData& d) {
    if (auto r = check_semidirect_conditions(a, h, d); !r) throw ConditionViolated(*r.witness);
    const std::size_t p = a.dim(), q = h.dim(), n = p + q;
    SuperBracket b(direct_sum({a.space(), h.space()}));
    for (std::size_t x = 0; x < p; ++x) {
        for (std::size_t y = 0; y < p; ++y) {
            Vec v = zero_vec(n);
            for (std::size_t k = 0; k < p; ++k) v[k] = a(x, y)[k];
            for (std::size_t k = 0; k < q; ++k) v[p + k] = d.lambda(x, y, k);
            b.set(x, y, v);
        }
        for (std::size_t u = 0; u < q; ++u) {
            Vec v = zero_vec(n);
            for (std::size_t k = 0; k < q; ++k) v[p + k] = d.theta[x](k, u);
            b.set_skew(x, p + u, v);
        }
    }
    for (std::size_t u = 0; u < q; ++u)
        for (std::size_t w = 0; w < q; ++w) {
            Vec v = zero_vec(n);
            for (std::size_t k = 0; k < q; ++k) v[p + k] = h(u, w)[k];
            b.set(p + u, p + w, v);
        }
    return LieSuperAlgebra(std::move(b));
}

}  // namespace qsuper
