#pragma once

// Z2-graded vector spaces, homogeneous linear and bilinear maps, and the
// change-of-parity operator P_delta with its transfers to maps and duals.

#include "qsuper/errors.hpp"
#include "qsuper/matrix.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qsuper {

/// Element of Z2. `+` is addition mod 2, `*` is multiplication mod 2, so sign
/// exponents such as |x|(|y|+|z|) read naturally: sign(x * (y + z)).
class Parity {
   public:
    constexpr Parity() = default;
    constexpr explicit Parity(unsigned v) : value_(static_cast<std::uint8_t>(v & 1U)) {}

    static constexpr Parity even() { return Parity(0); }
    static constexpr Parity odd() { return Parity(1); }

    constexpr unsigned value() const noexcept { return value_; }
    constexpr bool is_odd() const noexcept { return value_ == 1; }

    friend constexpr Parity operator+(Parity a, Parity b) { return Parity(a.value_ ^ b.value_); }
    friend constexpr Parity operator*(Parity a, Parity b) { return Parity(a.value_ & b.value_); }
    friend constexpr auto operator<=>(Parity, Parity) = default;

   private:
    std::uint8_t value_ = 0;
};

/// (-1)^p
constexpr int sign(Parity p) { return p.is_odd() ? -1 : 1; }

struct BasisVector {
    std::string label;
    Parity parity;

    friend bool operator==(const BasisVector&, const BasisVector&) = default;
};

/// Finite-dimensional super-space given by an ordered homogeneous basis.
class SuperSpace {
   public:
    SuperSpace() = default;

    explicit SuperSpace(std::vector<BasisVector> basis) : basis_(std::move(basis)) {
        std::set<std::string> seen;
        for (const auto& b : basis_) {
            if (b.label.empty()) throw std::invalid_argument("empty basis label");
            if (!seen.insert(b.label).second) throw std::invalid_argument("duplicate basis label '" + b.label + "'");
        }
    }

    std::size_t dim() const noexcept { return basis_.size(); }
    std::size_t dim0() const {
        return static_cast<std::size_t>(
            std::count_if(basis_.begin(), basis_.end(), [](const auto& b) { return !b.parity.is_odd(); }));
    }
    std::size_t dim1() const { return dim() - dim0(); }

    Parity parity(std::size_t i) const { return basis_.at(i).parity; }
    const std::string& label(std::size_t i) const { return basis_.at(i).label; }
    const std::vector<BasisVector>& basis() const noexcept { return basis_; }

    std::vector<std::size_t> indices_of(Parity p) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < dim(); ++i)
            if (parity(i) == p) out.push_back(i);
        return out;
    }

    /// Even basis vectors precede odd ones.
    bool is_canonical() const {
        return std::is_sorted(basis_.begin(), basis_.end(),
                              [](const auto& a, const auto& b) { return a.parity < b.parity; });
    }

    /// Parity of a coordinate vector, or nullopt when it mixes parities. The
    /// zero vector reports even.
    std::optional<Parity> parity_of(std::span<const Scalar> v) const {
        bool has0 = false, has1 = false;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_zero()) continue;
            (parity(i).is_odd() ? has1 : has0) = true;
        }
        if (has0 && has1) return std::nullopt;
        return Parity(has1 ? 1 : 0);
    }

    friend bool operator==(const SuperSpace&, const SuperSpace&) = default;

   private:
    std::vector<BasisVector> basis_;
};

/// P(V): same labels, every parity flipped.
inline SuperSpace parity_shift(const SuperSpace& v) {
    auto basis = v.basis();
    for (auto& b : basis) b.parity = b.parity + Parity::odd();
    return SuperSpace(std::move(basis));
}

inline SuperSpace apply_p_delta(Parity delta, const SuperSpace& v) {
    return delta.is_odd() ? parity_shift(v) : v;
}

/// V* with the dual basis; the functional dual to a parity-eta vector has parity eta.
inline SuperSpace dual_space(const SuperSpace& v) {
    auto basis = v.basis();
    for (auto& b : basis) b.label += "*";
    return SuperSpace(std::move(basis));
}

inline SuperSpace direct_sum(const std::vector<SuperSpace>& parts) {
    std::vector<BasisVector> basis;
    for (const auto& p : parts) basis.insert(basis.end(), p.basis().begin(), p.basis().end());
    return SuperSpace(std::move(basis));
}

/// Stable permutation putting even basis vectors first: perm[new] = old.
inline std::vector<std::size_t> canonical_permutation(const SuperSpace& v) {
    std::vector<std::size_t> perm(v.dim());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](auto a, auto b) { return v.parity(a) < v.parity(b); });
    return perm;
}

inline SuperSpace permute(const SuperSpace& v, const std::vector<std::size_t>& perm) {
    std::vector<BasisVector> basis;
    for (auto old : perm) basis.push_back(v.basis().at(old));
    return SuperSpace(std::move(basis));
}

/// Homogeneous linear map; column j is the image of source basis vector j.
class GradedLinearMap {
   public:
    GradedLinearMap() = default;

    GradedLinearMap(SuperSpace source, SuperSpace target, Parity degree, Matrix matrix)
        : source_(std::move(source)), target_(std::move(target)), degree_(degree), matrix_(std::move(matrix)) {
        if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
            throw std::invalid_argument("linear map matrix has wrong shape");
        for (std::size_t c = 0; c < source_.dim(); ++c)
            for (std::size_t r = 0; r < target_.dim(); ++r)
                if (!matrix_(r, c).is_zero() && target_.parity(r) != source_.parity(c) + degree_)
                    throw NotHomogeneous(Witness{"map-homogeneity", {r, c}, {matrix_(r, c)}});
    }

    static GradedLinearMap zero(SuperSpace source, SuperSpace target, Parity degree) {
        Matrix m(target.dim(), source.dim());
        return {std::move(source), std::move(target), degree, std::move(m)};
    }

    const SuperSpace& source() const noexcept { return source_; }
    const SuperSpace& target() const noexcept { return target_; }
    Parity degree() const noexcept { return degree_; }
    const Matrix& matrix() const noexcept { return matrix_; }

    Vec operator()(std::span<const Scalar> v) const { return matrix_.apply(v); }
    Vec image(std::size_t source_index) const { return matrix_.column(source_index); }

    friend bool operator==(const GradedLinearMap&, const GradedLinearMap&) = default;

   private:
    SuperSpace source_;
    SuperSpace target_;
    Parity degree_;
    Matrix matrix_;
};

/// P(T): source shifted, same target and entries, degree flipped, so that
/// P(T)(P(v)) = T(v).
inline GradedLinearMap parity_shift_map(const GradedLinearMap& t) {
    return {parity_shift(t.source()), t.target(), t.degree() + Parity::odd(), t.matrix()};
}

inline GradedLinearMap compose(const GradedLinearMap& f, const GradedLinearMap& g) {
    if (f.source() != g.target()) throw std::invalid_argument("composition of incompatible maps");
    return {g.source(), f.target(), f.degree() + g.degree(), f.matrix() * g.matrix()};
}

/// Graded commutator [S,T] = ST - (-1)^{|S||T|} TS of endomorphisms.
inline Matrix super_commutator(const Matrix& s, Parity ds, const Matrix& t, Parity dt) {
    return s * t - Scalar(sign(ds * dt)) * (t * s);
}

/// Degree a bilinear form matrix is homogeneous of. A zero matrix is reported
/// as even. Throws NotHomogeneous when both patterns are violated, with the
/// first offending entry of each block as witness.
inline Parity check_form_degree(const SuperSpace& space, const Matrix& m) {
    if (m.rows() != space.dim() || m.cols() != space.dim())
        throw std::invalid_argument("bilinear form matrix has wrong shape");
    std::optional<std::pair<std::size_t, std::size_t>> mixed, same;
    for (std::size_t i = 0; i < space.dim(); ++i)
        for (std::size_t j = 0; j < space.dim(); ++j) {
            if (m(i, j).is_zero()) continue;
            auto& slot = space.parity(i) == space.parity(j) ? same : mixed;
            if (!slot) slot = {i, j};
        }
    if (mixed && same)
        throw NotHomogeneous(Witness{"homogeneity", {same->first, same->second, mixed->first, mixed->second}, {}});
    return Parity(mixed ? 1 : 0);
}

/// True when every nonzero entry (i,j) has |i| + |j| = degree.
inline CheckResult check_form_pattern(const SuperSpace& space, Parity degree, const Matrix& m) {
    for (std::size_t i = 0; i < space.dim(); ++i)
        for (std::size_t j = 0; j < space.dim(); ++j)
            if (!m(i, j).is_zero() && space.parity(i) + space.parity(j) != degree)
                return CheckResult::fail({"homogeneity", {i, j}, {m(i, j)}});
    return CheckResult::pass();
}

/// B(x,y) = (-1)^{|x||y|} B(y,x) on all basis pairs.
inline CheckResult check_supersymmetry(const SuperSpace& space, const Matrix& m) {
    for (std::size_t i = 0; i < space.dim(); ++i)
        for (std::size_t j = i; j < space.dim(); ++j) {
            Scalar r = m(i, j) - sign(space.parity(i) * space.parity(j)) * m(j, i);
            if (!r.is_zero()) return CheckResult::fail({"super-symmetry", {i, j}, {r}});
        }
    return CheckResult::pass();
}

/// Homogeneous bilinear form of a declared degree. The degree is stored, not
/// inferred, so the zero form on a zero-dimensional space can be odd.
class GradedBilinearForm {
   public:
    GradedBilinearForm() = default;

    GradedBilinearForm(SuperSpace space, Parity degree, Matrix matrix)
        : space_(std::move(space)), degree_(degree), matrix_(std::move(matrix)) {
        if (matrix_.rows() != space_.dim() || matrix_.cols() != space_.dim())
            throw std::invalid_argument("bilinear form matrix has wrong shape");
        if (auto r = check_form_pattern(space_, degree_, matrix_); !r) throw NotHomogeneous(*r.witness);
    }

    const SuperSpace& space() const noexcept { return space_; }
    Parity degree() const noexcept { return degree_; }
    const Matrix& matrix() const noexcept { return matrix_; }

    Scalar operator()(std::span<const Scalar> u, std::span<const Scalar> v) const {
        const Vec mv = matrix_.apply(v);
        Scalar s = 0;
        for (std::size_t i = 0; i < u.size(); ++i)
            if (!u[i].is_zero()) s += u[i] * mv[i];
        return s;
    }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }

    bool is_supersymmetric() const { return check_supersymmetry(space_, matrix_).ok(); }
    bool is_nondegenerate() const { return rank(matrix_) == space_.dim(); }

    friend bool operator==(const GradedBilinearForm&, const GradedBilinearForm&) = default;

   private:
    SuperSpace space_;
    Parity degree_;
    Matrix matrix_;
};

inline Parity check_form_degree(const GradedBilinearForm& b) { return check_form_degree(b.space(), b.matrix()); }

}  // namespace qsuper
