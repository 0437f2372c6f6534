#pragma once

// Lie superalgebras by structure constants and their verification predicates.
// All predicates are exhaustive over basis tuples; bilinearity makes that a
// complete check. Failures carry the first violating tuple and its residual.

#include "qsuper/bilinear_table.hpp"
#include "qsuper/errors.hpp"
#include "qsuper/graded.hpp"
#include "qsuper/matrix.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qsuper {

/// Structure constants c_ij^k for every ordered pair (i, j). Unvalidated:
/// grading, skew-symmetry and Jacobi are checked by the free predicates.
class SuperBracket {
   public:
    SuperBracket() = default;
    explicit SuperBracket(SuperSpace space)
        : space_(std::move(space)), table_(space_.dim(), space_.dim(), space_.dim()) {}

    const SuperSpace& space() const noexcept { return space_; }
    std::size_t dim() const noexcept { return space_.dim(); }

    /// [e_i, e_j]
    std::span<const Scalar> operator()(std::size_t i, std::size_t j) const { return table_.at(i, j); }
    Scalar& constant(std::size_t i, std::size_t j, std::size_t k) { return table_(i, j, k); }
    const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const { return table_(i, j, k); }
    void set(std::size_t i, std::size_t j, std::span<const Scalar> v) { table_.set(i, j, v); }

    /// Sets [e_i, e_j] = v and [e_j, e_i] = -(-1)^{|i||j|} v.
    void set_skew(std::size_t i, std::size_t j, std::span<const Scalar> v) {
        table_.set(i, j, v);
        if (i != j) {
            const int s = -sign(space_.parity(i) * space_.parity(j));
            table_.set(j, i, Scalar(s) * Vec(v.begin(), v.end()));
        }
    }

    /// [e_i, v]
    Vec apply_left(std::size_t i, std::span<const Scalar> v) const { return table_.apply_left(i, v); }
    /// [u, e_j]
    Vec apply_right(std::span<const Scalar> u, std::size_t j) const { return table_.apply_right(u, j); }
    Vec operator()(std::span<const Scalar> u, std::span<const Scalar> v) const { return table_(u, v); }

    /// Matrix of ad(e_i).
    Matrix ad(std::size_t i) const {
        Matrix m(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, (*this)(i, j));
        return m;
    }

    Matrix ad(std::span<const Scalar> u) const {
        Matrix m(dim(), dim());
        for (std::size_t i = 0; i < dim(); ++i)
            if (!u[i].is_zero()) m += u[i] * ad(i);
        return m;
    }

    bool is_abelian() const { return table_.is_zero(); }
    const BilinearTable& table() const noexcept { return table_; }

    friend bool operator==(const SuperBracket&, const SuperBracket&) = default;

   private:
    SuperSpace space_;
    BilinearTable table_;
};

/// c_ij^k != 0 only when |k| = |i| + |j|.
inline CheckResult check_grading(const SuperBracket& b) {
    const auto& V = b.space();
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            for (std::size_t k = 0; k < b.dim(); ++k)
                if (!b.constant(i, j, k).is_zero() && V.parity(k) != V.parity(i) + V.parity(j))
                    return CheckResult::fail({"grading", {i, j, k}, {b.constant(i, j, k)}});
    return CheckResult::pass();
}

/// [e_i, e_j] + (-1)^{|i||j|} [e_j, e_i] = 0.
inline CheckResult check_super_skew(const SuperBracket& b) {
    const auto& V = b.space();
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = i; j < b.dim(); ++j) {
            Vec r(b(i, j).begin(), b(i, j).end());
            axpy(Scalar(sign(V.parity(i) * V.parity(j))), b(j, i), r);
            if (!is_zero(r)) return CheckResult::fail({"super-skew", {i, j}, std::move(r)});
        }
    return CheckResult::pass();
}

/// Cyclic sum (-1)^{|x||z|}[x,[y,z]] over every basis triple.
inline CheckResult check_jacobi(const SuperBracket& b) {
    const auto& V = b.space();
    const std::size_t n = b.dim();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const Parity px = V.parity(x), py = V.parity(y), pz = V.parity(z);
                Vec r = zero_vec(n);
                axpy(Scalar(sign(px * pz)), b.apply_left(x, b(y, z)), r);
                axpy(Scalar(sign(py * px)), b.apply_left(y, b(z, x)), r);
                axpy(Scalar(sign(pz * py)), b.apply_left(z, b(x, y)), r);
                if (!is_zero(r)) return CheckResult::fail({"jacobi", {x, y, z}, std::move(r)});
            }
    return CheckResult::pass();
}

/// A bracket that has passed grading, super skew-symmetry and Jacobi.
class LieSuperAlgebra {
   public:
    LieSuperAlgebra() = default;

    explicit LieSuperAlgebra(SuperBracket bracket) : bracket_(std::move(bracket)) {
        for (auto check : {check_grading, check_super_skew, check_jacobi})
            if (auto r = check(bracket_); !r) throw ValidationError(*r.witness);
    }

    static LieSuperAlgebra abelian(SuperSpace space) { return LieSuperAlgebra(SuperBracket(std::move(space))); }

    const SuperBracket& bracket() const noexcept { return bracket_; }
    const SuperSpace& space() const noexcept { return bracket_.space(); }
    std::size_t dim() const noexcept { return bracket_.dim(); }
    Parity parity(std::size_t i) const { return space().parity(i); }

    std::span<const Scalar> operator()(std::size_t i, std::size_t j) const { return bracket_(i, j); }
    Vec operator()(std::span<const Scalar> u, std::span<const Scalar> v) const { return bracket_(u, v); }
    Matrix ad(std::size_t i) const { return bracket_.ad(i); }

    friend bool operator==(const LieSuperAlgebra&, const LieSuperAlgebra&) = default;

   private:
    SuperBracket bracket_;
};

/// D([x,y]) = [D(x),y] + (-1)^{|D||x|}[x,D(y)] on all basis pairs.
inline CheckResult check_derivation(const Matrix& d, Parity degree, const SuperBracket& b) {
    const auto& V = b.space();
    const std::size_t n = b.dim();
    if (d.rows() != n || d.cols() != n) throw std::invalid_argument("derivation has wrong shape");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            Vec r = d.apply(b(x, y));
            axpy(-1, b.apply_right(d.column(x), y), r);
            axpy(Scalar(-sign(degree * V.parity(x))), b.apply_left(x, d.column(y)), r);
            if (!is_zero(r)) return CheckResult::fail({"derivation", {x, y}, std::move(r)});
        }
    return CheckResult::pass();
}

inline bool is_derivation(const GradedLinearMap& d, const LieSuperAlgebra& g) {
    if (d.source() != g.space() || d.target() != g.space()) throw std::invalid_argument("derivation must map g to g");
    return check_derivation(d.matrix(), d.degree(), g.bracket()).ok();
}

/// B(D(x),y) = -(-1)^{|x||D|} B(x,D(y)) on all basis pairs.
inline CheckResult check_metric_skew(const Matrix& d, Parity degree, const SuperSpace& space, const Matrix& form) {
    const std::size_t n = space.dim();
    // B(D e_x, e_y) = (D^T B)(x,y);  B(e_x, D e_y) = (B D)(x,y)
    const Matrix left = d.transpose() * form;
    const Matrix right = form * d;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            Scalar r = left(x, y) + sign(space.parity(x) * degree) * right(x, y);
            if (!r.is_zero()) return CheckResult::fail({"metric-skew", {x, y}, {r}});
        }
    return CheckResult::pass();
}

inline bool is_metric_skew(const GradedLinearMap& d, const GradedBilinearForm& b) {
    if (d.source() != b.space() || d.target() != b.space()) throw std::invalid_argument("map and form spaces differ");
    return check_metric_skew(d.matrix(), d.degree(), b.space(), b.matrix()).ok();
}

/// B([x,y],z) = B(x,[y,z]) on all basis triples.
inline CheckResult check_invariance(const Matrix& form, const SuperBracket& b) {
    const std::size_t n = b.dim();
    if (form.rows() != n || form.cols() != n) throw std::invalid_argument("form and bracket dimensions differ");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            // B([x,y], e_z) for all z at once: row vector [x,y]^T B
            const Vec lhs = form.transpose().apply(b(x, y));
            for (std::size_t z = 0; z < n; ++z) {
                Scalar rhs = 0;
                const auto yz = b(y, z);
                for (std::size_t k = 0; k < n; ++k)
                    if (!yz[k].is_zero()) rhs += form(x, k) * yz[k];
                Scalar r = lhs[z] - rhs;
                if (!r.is_zero()) return CheckResult::fail({"invariance", {x, y, z}, {r}});
            }
        }
    return CheckResult::pass();
}

inline CheckResult check_invariance(const GradedBilinearForm& form, const LieSuperAlgebra& g) {
    if (form.space() != g.space()) throw std::invalid_argument("form and algebra spaces differ");
    return check_invariance(form.matrix(), g.bracket());
}

inline CheckResult check_nondegenerate(const Matrix& form) {
    const std::size_t r = rank(form);
    if (r == form.rows()) return CheckResult::pass();
    return CheckResult::fail({"non-degeneracy", {r, form.rows()}, {}});
}

/// Lie superalgebra with an invariant metric (homogeneous, super-symmetric,
/// invariant, non-degenerate) of degree `degree()`.
class QuadraticLieSuperAlgebra {
   public:
    QuadraticLieSuperAlgebra() = default;

    QuadraticLieSuperAlgebra(LieSuperAlgebra algebra, GradedBilinearForm metric)
        : algebra_(std::move(algebra)), metric_(std::move(metric)) {
        if (metric_.space() != algebra_.space()) throw std::invalid_argument("metric and algebra spaces differ");
        if (auto r = check_supersymmetry(metric_.space(), metric_.matrix()); !r) throw ValidationError(*r.witness);
        if (auto r = check_invariance(metric_, algebra_); !r) throw ValidationError(*r.witness);
        if (auto r = check_nondegenerate(metric_.matrix()); !r) throw ValidationError(*r.witness);
    }

    const LieSuperAlgebra& algebra() const noexcept { return algebra_; }
    const GradedBilinearForm& metric() const noexcept { return metric_; }
    const SuperSpace& space() const noexcept { return algebra_.space(); }
    const SuperBracket& bracket() const noexcept { return algebra_.bracket(); }
    std::size_t dim() const noexcept { return algebra_.dim(); }
    Parity degree() const noexcept { return metric_.degree(); }

    friend bool operator==(const QuadraticLieSuperAlgebra&, const QuadraticLieSuperAlgebra&) = default;

   private:
    LieSuperAlgebra algebra_;
    GradedBilinearForm metric_;
};

/// B-flat: x -> B(x, .), a map g -> g* of degree |B|.
inline GradedLinearMap b_flat(const GradedBilinearForm& b) {
    return {b.space(), dual_space(b.space()), b.degree(), b.matrix().transpose()};
}

/// An action of `algebra` on `module`: action[i] is the operator of basis
/// vector i, of degree |i|.
struct Representation {
    LieSuperAlgebra algebra;
    SuperSpace module;
    std::vector<GradedLinearMap> action;
};

/// action([x,y]) = [action(x), action(y)] (graded commutator) on all basis pairs.
inline CheckResult check_representation(const Representation& rep) {
    const auto& g = rep.algebra;
    const std::size_t n = g.dim();
    if (rep.action.size() != n) throw std::invalid_argument("representation needs one operator per basis vector");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            Matrix r = super_commutator(rep.action[x].matrix(), g.parity(x), rep.action[y].matrix(), g.parity(y));
            const auto xy = g(x, y);
            for (std::size_t k = 0; k < n; ++k)
                if (!xy[k].is_zero()) r -= xy[k] * rep.action[k].matrix();
            if (!r.is_zero()) {
                Vec flat;
                for (std::size_t i = 0; i < r.rows(); ++i) flat.insert(flat.end(), r.row(i).begin(), r.row(i).end());
                return CheckResult::fail({"representation", {x, y}, std::move(flat)});
            }
        }
    return CheckResult::pass();
}

/// The delta-coadjoint representation on P_delta(g)*:
///   ad*_delta(x)(P_delta(f))(P_delta(y)) = -(-1)^{(|f|+delta)|x|} f([x,y]).
/// Coordinates on P_delta(g)* are those of g*, only parities move.
inline Representation delta_coadjoint(const LieSuperAlgebra& g, Parity delta) {
    const std::size_t n = g.dim();
    const SuperSpace module = dual_space(apply_p_delta(delta, g.space()));
    std::vector<GradedLinearMap> action;
    action.reserve(n);
    for (std::size_t x = 0; x < n; ++x) {
        Matrix m(n, n);
        for (std::size_t f = 0; f < n; ++f)        // source functional
            for (std::size_t y = 0; y < n; ++y) {  // coefficient on (P_delta y)*
                const Scalar& c = g.bracket().constant(x, y, f);
                if (!c.is_zero()) m(y, f) = -sign((g.parity(f) + delta) * g.parity(x)) * c;
            }
        action.emplace_back(module, module, g.parity(x), std::move(m));
    }
    return {g, module, std::move(action)};
}

inline Representation coadjoint(const LieSuperAlgebra& g) { return delta_coadjoint(g, Parity::even()); }

/// ad*_delta(x) o P_delta = (-1)^{delta|x|} P_delta o ad*(x), entrywise.
inline CheckResult check_delta_coadjoint_relation(const LieSuperAlgebra& g, Parity delta) {
    const auto shifted = delta_coadjoint(g, delta);
    const auto plain = coadjoint(g);
    for (std::size_t x = 0; x < g.dim(); ++x) {
        const Matrix r = shifted.action[x].matrix() - Scalar(sign(delta * g.parity(x))) * plain.action[x].matrix();
        if (!r.is_zero()) return CheckResult::fail({"coadjoint-relation", {x}, {}});
    }
    return CheckResult::pass();
}

/// B-flat is a module map: B-flat o ad(x) = (-1)^{|x||B|} ad*(x) o B-flat.
inline CheckResult check_bflat_intertwines(const GradedBilinearForm& b, const LieSuperAlgebra& g) {
    const Matrix flat = b_flat(b).matrix();
    const auto co = coadjoint(g);
    for (std::size_t x = 0; x < g.dim(); ++x) {
        const Matrix r = flat * g.ad(x) - Scalar(sign(g.parity(x) * b.degree())) * (co.action[x].matrix() * flat);
        if (!r.is_zero()) return CheckResult::fail({"bflat-intertwining", {x}, {}});
    }
    return CheckResult::pass();
}

/// Structure constants in a new basis. Column i of `basis` is new basis
/// vector i in old coordinates; `space` labels the new basis.
inline SuperBracket change_basis(const SuperBracket& b, const Matrix& basis, SuperSpace space) {
    const auto inv = inverse(basis);
    if (!inv) throw std::invalid_argument("change of basis is singular");
    const std::size_t n = b.dim();
    SuperBracket out(std::move(space));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.set(i, j, inv->apply(b(basis.column(i), basis.column(j))));
    return out;
}

/// Gram matrix of a form in a new basis: C^T B C.
inline Matrix change_basis(const Matrix& form, const Matrix& basis) { return basis.transpose() * form * basis; }

/// True when `map` (degree 0, g -> target) maps brackets to brackets and the
/// metric of g to that of target, on all basis pairs.
inline CheckResult check_isometry(const QuadraticLieSuperAlgebra& g, const QuadraticLieSuperAlgebra& target,
                                  const Matrix& map) {
    const std::size_t n = g.dim();
    if (map.rows() != target.dim() || map.cols() != n) throw std::invalid_argument("isometry has wrong shape");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec ui = map.column(i), uj = map.column(j);
            Vec r = map.apply(g.bracket()(i, j)) - target.bracket()(ui, uj);
            if (!is_zero(r)) return CheckResult::fail({"isometry-bracket", {i, j}, std::move(r)});
            Scalar m = g.metric()(i, j) - target.metric()(ui, uj);
            if (!m.is_zero()) return CheckResult::fail({"isometry-metric", {i, j}, {m}});
        }
    if (rank(map) != n || target.dim() != n) return CheckResult::fail({"isometry-bijective", {}, {}});
    return CheckResult::pass();
}

/// Center of g: a homogeneous basis, even vectors first.
inline std::vector<Vec> center(const LieSuperAlgebra& g) {
    const std::size_t n = g.dim();
    std::vector<Vec> out;
    for (Parity p : {Parity::even(), Parity::odd()}) {
        const auto idx = g.space().indices_of(p);
        // unknowns: coefficients on basis vectors of parity p; equations [v, e_j] = 0
        Matrix sys(n * n, idx.size());
        for (std::size_t c = 0; c < idx.size(); ++c)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) sys(j * n + k, c) = g.bracket().constant(idx[c], j, k);
        for (const auto& sol : nullspace(sys)) {
            Vec v = zero_vec(n);
            for (std::size_t c = 0; c < idx.size(); ++c) v[idx[c]] = sol[c];
            out.push_back(std::move(v));
        }
    }
    return out;
}

}  // namespace qsuper
