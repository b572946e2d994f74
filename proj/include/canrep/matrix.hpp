#pragma once

#include "canrep/field.hpp"
#include "canrep/polynomial.hpp"

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace canrep {

using Index = Eigen::Index;

template <class F>
using Mat = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>;
template <class F>
using Vec = Eigen::Matrix<F, Eigen::Dynamic, 1>;

template <class F>
Mat<F> zeros(const Field<F>& k, Index rows, Index cols) {
    return Mat<F>::Constant(rows, cols, k.zero());
}

template <class F>
Mat<F> identity(const Field<F>& k, Index n) {
    Mat<F> m = zeros(k, n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = k.one();
    return m;
}

template <class Derived>
bool allZero(const Eigen::MatrixBase<Derived>& m) {
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (!isZero(m(i, j))) return false;
    return true;
}

template <class F>
bool sameMatrix(const Mat<F>& a, const Mat<F>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Index j = 0; j < a.cols(); ++j)
        for (Index i = 0; i < a.rows(); ++i)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

template <class F>
struct RrefResult {
    Mat<F> reduced;
    std::vector<Index> pivots;
};

/// Reduced row echelon form by Gauss-Jordan elimination; pivots strictly increase.
template <class F>
RrefResult<F> rref(Mat<F> m) {
    std::vector<Index> pivots;
    const Index rows = m.rows(), cols = m.cols();
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index p = r;
        while (p < rows && isZero(m(p, c))) ++p;
        if (p == rows) continue;
        if (p != r) m.row(p).swap(m.row(r));
        const F inv = F(1) / m(r, c);
        for (Index j = c; j < cols; ++j) m(r, j) *= inv;
        for (Index i = 0; i < rows; ++i) {
            if (i == r || isZero(m(i, c))) continue;
            const F f = m(i, c);
            for (Index j = c; j < cols; ++j)
                if (!isZero(m(r, j))) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

template <class F>
Index rank(const Mat<F>& m) {
    return static_cast<Index>(rref(m).pivots.size());
}

/// Columns form a basis of the null space {x : m x = 0}.
template <class F>
Mat<F> kernelBasis(const Mat<F>& m, const Field<F>& k) {
    const auto rr = rref(m);
    const Index cols = m.cols();
    std::vector<char> isPivot(static_cast<std::size_t>(cols), 0);
    for (Index p : rr.pivots) isPivot[static_cast<std::size_t>(p)] = 1;
    Mat<F> basis = zeros(k, cols, cols - static_cast<Index>(rr.pivots.size()));
    Index out = 0;
    for (Index f = 0; f < cols; ++f) {
        if (isPivot[static_cast<std::size_t>(f)]) continue;
        basis(f, out) = k.one();
        for (std::size_t j = 0; j < rr.pivots.size(); ++j) basis(rr.pivots[j], out) = -rr.reduced(static_cast<Index>(j), f);
        ++out;
    }
    return basis;
}

/// Some x with a x = b, or nothing when the system is inconsistent.
template <class F>
std::optional<Mat<F>> solve(const Mat<F>& a, const Mat<F>& b, const Field<F>& k) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
    Mat<F> aug(a.rows(), a.cols() + b.cols());
    aug << a, b;
    const auto rr = rref(std::move(aug));
    Mat<F> x = zeros(k, a.cols(), b.cols());
    for (std::size_t j = 0; j < rr.pivots.size(); ++j) {
        const Index p = rr.pivots[j];
        if (p >= a.cols()) return std::nullopt;
        x.row(p) = rr.reduced.row(static_cast<Index>(j)).tail(b.cols());
    }
    return x;
}

template <class F>
std::optional<Mat<F>> inverse(const Mat<F>& m, const Field<F>& k) {
    if (m.rows() != m.cols()) return std::nullopt;
    if (rank(m) != m.rows()) return std::nullopt;
    return solve(m, identity(k, m.rows()), k);
}

template <class F>
bool isInvertible(const Mat<F>& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

/// A subset of the columns of m forming a basis of its column space.
template <class F>
Mat<F> columnSpaceBasis(const Mat<F>& m) {
    const auto rr = rref(m);
    Mat<F> out(m.rows(), static_cast<Index>(rr.pivots.size()));
    for (std::size_t j = 0; j < rr.pivots.size(); ++j) out.col(static_cast<Index>(j)) = m.col(rr.pivots[j]);
    return out;
}

/// Standard basis vectors spanning a complement of the column space of m.
template <class F>
Mat<F> complementBasis(const Mat<F>& m, const Field<F>& k) {
    Mat<F> aug(m.rows(), m.cols() + m.rows());
    aug << m, identity(k, m.rows());
    const auto rr = rref(std::move(aug));
    std::vector<Index> extra;
    for (Index p : rr.pivots)
        if (p >= m.cols()) extra.push_back(p - m.cols());
    Mat<F> out = zeros(k, m.rows(), static_cast<Index>(extra.size()));
    for (std::size_t j = 0; j < extra.size(); ++j) out(extra[j], static_cast<Index>(j)) = k.one();
    return out;
}

template <class F>
Mat<F> hstack(const Mat<F>& a, const Mat<F>& b) {
    Mat<F> out(a.rows(), a.cols() + b.cols());
    out << a, b;
    return out;
}

template <class F>
Mat<F> vstack(const Mat<F>& a, const Mat<F>& b) {
    Mat<F> out(a.rows() + b.rows(), a.cols());
    out << a, b;
    return out;
}

template <class F>
Mat<F> randomMatrix(const Field<F>& k, Index rows, Index cols, Rng& rng) {
    Mat<F> m(rows, cols);
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i) m(i, j) = k.random(rng);
    return m;
}

template <class F>
Mat<F> randomInvertible(const Field<F>& k, Index n, Rng& rng) {
    for (;;) {
        Mat<F> m = randomMatrix(k, n, n, rng);
        if (isInvertible(m)) return m;
    }
}

/// p(A) by Horner's rule.
template <class F>
Mat<F> evaluate(const Polynomial<F>& p, const Mat<F>& a, const Field<F>& k) {
    Mat<F> acc = zeros(k, a.rows(), a.cols());
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = (acc * a).eval();
        for (Index d = 0; d < a.rows(); ++d) acc(d, d) += c[i];
    }
    return acc;
}

/// Monic minimal polynomial of a square matrix, found from the first linear
/// dependency among I, A, A^2, ...
template <class F>
Polynomial<F> minimalPolynomial(const Mat<F>& a, const Field<F>& k) {
    const Index n = a.rows();
    if (n == 0) return Polynomial<F>(k.one());
    Mat<F> krylov = zeros(k, n * n, n + 1);
    Mat<F> power = identity(k, n);
    for (Index e = 0; e <= n; ++e) {
        krylov.col(e) = Eigen::Map<const Vec<F>>(power.data(), n * n);
        if (e < n) power = (power * a).eval();
    }
    const auto rr = rref(krylov);
    Index degree = 0;
    while (degree < static_cast<Index>(rr.pivots.size()) && rr.pivots[static_cast<std::size_t>(degree)] == degree) ++degree;
    std::vector<F> coeffs(static_cast<std::size_t>(degree + 1), k.zero());
    coeffs[static_cast<std::size_t>(degree)] = k.one();
    for (Index j = 0; j < degree; ++j) coeffs[static_cast<std::size_t>(j)] = -rr.reduced(j, degree);
    return Polynomial<F>(std::move(coeffs));
}

/// Companion matrix of a monic polynomial (ones on the subdiagonal, last column -c_i).
template <class F>
Mat<F> companionMatrix(const Polynomial<F>& p, const Field<F>& k) {
    const Index d = p.degree();
    if (d < 1) throw std::invalid_argument("companionMatrix: degree must be >= 1");
    const Polynomial<F> m = p.monic();
    Mat<F> c = zeros(k, d, d);
    for (Index i = 1; i < d; ++i) c(i, i - 1) = k.one();
    for (Index i = 0; i < d; ++i) c(i, d - 1) = -m.coeff(static_cast<std::size_t>(i));
    return c;
}

}  // namespace canrep
