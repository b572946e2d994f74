#pragma once

#include "canrep/homology.hpp"

#include <cstdint>
#include <vector>

namespace support {

using namespace canrep;

template <class F>
Mat<F> mat(const Field<F>& k, Index rows, Index cols, std::initializer_list<long> entries) {
    Mat<F> m = zeros(k, rows, cols);
    auto it = entries.begin();
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = k.fromInt(*it++);
    return m;
}

/// Kronecker module (r, r) with arrows (I, J) for a given square J.
template <class F>
Representation<F> kroneckerPair(const AlgebraPtr<F>& kron, const Mat<F>& a, const Mat<F>& b) {
    return makeRepresentation<F>(kron, {{"0", a.cols()}, {"c", a.rows()}}, {{"x1_1", a}, {"x2_1", b}});
}

/// Jordan block of size r with eigenvalue lambda (ones on the superdiagonal).
template <class F>
Mat<F> jordan(const Field<F>& k, Index r, const F& lambda) {
    Mat<F> j = zeros(k, r, r);
    for (Index i = 0; i < r; ++i) {
        j(i, i) = lambda;
        if (i + 1 < r) j(i, i + 1) = k.one();
    }
    return j;
}

/// The Kronecker module S_lambda[r]: arrows (I_r, J_r(lambda)).
template <class F>
Representation<F> kroneckerJordan(const AlgebraPtr<F>& kron, Index r, const F& lambda) {
    const auto& k = kron->field();
    return kroneckerPair(kron, identity(k, r), jordan(k, r, lambda));
}

template <class F>
Representation<F> randomConjugate(const Representation<F>& m, Rng& rng) {
    std::vector<Mat<F>> g;
    for (int v = 0; v < m.algebra().vertexCount(); ++v) g.push_back(randomInvertible(m.field(), m.dim(v), rng));
    return m.conjugated(g);
}

/// Brute-force dim Hom(m, n) over a prime field: counts all vertex-map tuples that
/// commute with the arrows and takes log_p. Uses plain integer arithmetic only.
inline long bruteForceHomDim(const Representation<Fp>& m, const Representation<Fp>& n) {
    const auto& alg = m.algebra();
    const std::int64_t p = m.field().modulus();
    std::vector<Index> offset;
    Index vars = 0;
    for (int v = 0; v < alg.vertexCount(); ++v) {
        offset.push_back(vars);
        vars += m.dim(v) * n.dim(v);
    }
    auto entry = [](const Mat<Fp>& a, Index i, Index j) { return a(i, j).value(); };
    std::vector<std::int64_t> x(static_cast<std::size_t>(vars), 0);
    std::uint64_t count = 0;
    for (;;) {
        bool ok = true;
        for (int a = 0; a < alg.arrowCount() && ok; ++a) {
            const auto& arr = alg.arrow(a);
            const Index ms = m.dim(arr.source), mt = m.dim(arr.target), ns = n.dim(arr.source), nt = n.dim(arr.target);
            for (Index i = 0; i < nt && ok; ++i) {
                for (Index j = 0; j < ms && ok; ++j) {
                    std::int64_t lhs = 0, rhs = 0;
                    for (Index kk = 0; kk < mt; ++kk)
                        lhs += x[static_cast<std::size_t>(offset[static_cast<std::size_t>(arr.target)] + i * mt + kk)] * entry(m.arrow(a), kk, j);
                    for (Index l = 0; l < ns; ++l)
                        rhs += entry(n.arrow(a), i, l) * x[static_cast<std::size_t>(offset[static_cast<std::size_t>(arr.source)] + l * ms + j)];
                    ok = ((lhs - rhs) % p + p) % p == 0;
                }
            }
        }
        if (ok) ++count;
        std::size_t i = 0;
        while (i < x.size() && ++x[i] == p) x[i++] = 0;
        if (i == x.size()) break;
    }
    long d = 0;
    while (count > 1) {
        count /= static_cast<std::uint64_t>(p);
        ++d;
    }
    return d;
}

/// Every Kronecker representation over F_p with the given dimensions.
inline std::vector<Representation<Fp>> allKronecker(const AlgebraPtr<Fp>& kron, Index a, Index b) {
    const auto& k = kron->field();
    const std::uint64_t p = k.modulus();
    const Index cells = 2 * a * b;
    std::uint64_t total = 1;
    for (Index i = 0; i < cells; ++i) total *= p;
    std::vector<Representation<Fp>> out;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        Mat<Fp> x = zeros(k, b, a), y = zeros(k, b, a);
        for (Index i = 0; i < b; ++i)
            for (Index j = 0; j < a; ++j) {
                x(i, j) = k.element(c % p);
                c /= p;
                y(i, j) = k.element(c % p);
                c /= p;
            }
        out.push_back(kroneckerPair(kron, x, y));
    }
    return out;
}

/// Brute-force dim Ext^1(n, m) over a prime field. Enumerates every middle term
/// with arrows [[m_a, d_a], [0, n_a]], keeps those satisfying the relations, and
/// divides out the coboundaries, whose count is p^(sum m_v n_v - dim Hom(n, m)).
inline long bruteForceExtDim(const Representation<Fp>& n, const Representation<Fp>& m) {
    const auto& alg = m.algebra();
    const auto& k = m.field();
    const std::int64_t p = k.modulus();
    DimVector dims;
    long inner = 0;
    for (int v = 0; v < alg.vertexCount(); ++v) {
        dims.push_back(m.dim(v) + n.dim(v));
        inner += static_cast<long>(m.dim(v) * n.dim(v));
    }
    std::vector<std::pair<Index, Index>> cells;  // (arrow, entry)
    for (int a = 0; a < alg.arrowCount(); ++a) {
        const auto& arr = alg.arrow(a);
        for (Index e = 0; e < m.dim(arr.target) * n.dim(arr.source); ++e) cells.emplace_back(a, e);
    }
    std::vector<std::int64_t> x(cells.size(), 0);
    std::uint64_t count = 0;
    for (;;) {
        std::vector<Mat<Fp>> arrows;
        for (int a = 0; a < alg.arrowCount(); ++a) {
            const auto& arr = alg.arrow(a);
            const Index ms = m.dim(arr.source), mt = m.dim(arr.target), ns = n.dim(arr.source), nt = n.dim(arr.target);
            Mat<Fp> b = zeros(k, mt + nt, ms + ns);
            b.topLeftCorner(mt, ms) = m.arrow(a);
            b.bottomRightCorner(nt, ns) = n.arrow(a);
            arrows.push_back(std::move(b));
        }
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const auto [a, e] = cells[c];
            const auto& arr = alg.arrow(static_cast<int>(a));
            const Index mt = m.dim(arr.target), ms = m.dim(arr.source);
            arrows[static_cast<std::size_t>(a)](e % mt, ms + e / mt) = k.element(static_cast<std::uint64_t>(x[c]));
        }
        try {
            Representation<Fp>(m.algebraPtr(), dims, std::move(arrows));
            ++count;
        } catch (const DomainError&) {
        }
        std::size_t i = 0;
        while (i < x.size() && ++x[i] == p) x[i++] = 0;
        if (i == x.size()) break;
    }
    long z = 0;
    while (count > 1) {
        count /= static_cast<std::uint64_t>(p);
        ++z;
    }
    return z - (inner - bruteForceHomDim(n, m));
}

/// Number of free entries bruteForceExtDim enumerates.
inline long extCells(const Representation<Fp>& n, const Representation<Fp>& m) {
    long cells = 0;
    for (const auto& arr : m.algebra().arrows()) cells += static_cast<long>(m.dim(arr.target) * n.dim(arr.source));
    return cells;
}

/// Simple regular module of the homogeneous tube at a finite point mu with all
/// vertex spaces one-dimensional.
template <class F>
Representation<F> homogeneousSimple(const AlgebraPtr<F>& alg, const F& mu) {
    const auto& k = alg->field();
    std::vector<std::pair<std::string, Index>> dims;
    for (const auto& label : alg->vertexLabels()) dims.emplace_back(label, 1);
    std::vector<std::pair<std::string, Mat<F>>> arrows;
    for (int arm = 1; arm <= alg->armCount(); ++arm) {
        F last = arm == 1 ? k.one() : (arm == 2 ? mu : mu - alg->armParam(arm));
        for (int j = 1; j <= alg->arms()[static_cast<std::size_t>(arm - 1)]; ++j) {
            Mat<F> x = identity(k, 1);
            if (j == alg->arms()[static_cast<std::size_t>(arm - 1)]) x(0, 0) = last;
            arrows.emplace_back("x" + std::to_string(arm) + "_" + std::to_string(j), x);
        }
    }
    return makeRepresentation(alg, dims, arrows);
}

}  // namespace support
