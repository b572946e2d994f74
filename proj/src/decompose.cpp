#include "canrep/decompose.hpp"

#include "canrep/factor.hpp"

#include <algorithm>
#include <cmath>

namespace canrep {

template <class F>
Mat<F> EndStructure<F>::leftMultiplication(const Vec<F>& x) const {
    const Index n = dim();
    const auto& k = space.source.field();
    Mat<F> out = zeros(k, n, n);
    for (Index i = 0; i < n; ++i) {
        if (isZero(x(i))) continue;
        for (Index j = 0; j < n; ++j) out.col(j) += x(i) * products[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return out;
}

template <class F>
Vec<F> EndStructure<F>::multiply(const Vec<F>& x, const Vec<F>& y) const {
    return leftMultiplication(x) * y;
}

template <class F>
EndStructure<F> endAlgebraStructure(const Representation<F>& m) {
    EndStructure<F> e{homSpace(m, m), {}, {}};
    const Index n = e.dim();
    const auto& k = m.field();
    const auto basis = e.space.morphisms();
    Mat<F> flat = zeros(k, e.space.ambientDim(), n * n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            flat.col(i * n + j) = e.space.flatten(basis[static_cast<std::size_t>(i)] * basis[static_cast<std::size_t>(j)]);
    const auto coords = solve(e.space.basis, flat, k);
    if (!coords) throw std::logic_error("End(m) is not closed under composition");
    e.products.assign(static_cast<std::size_t>(n), std::vector<Vec<F>>(static_cast<std::size_t>(n)));
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) e.products[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = coords->col(i * n + j);
    e.unit = e.space.coordinates(Morphism<F>::identity(m));
    return e;
}

template <class F>
Mat<F> totalMatrix(const Morphism<F>& f) {
    const auto& k = f.source().field();
    const Index n = f.source().totalDim(), m = f.target().totalDim();
    Mat<F> out = zeros(k, m, n);
    Index r = 0, c = 0;
    for (const auto& b : f.maps()) {
        out.block(r, c, b.rows(), b.cols()) = b;
        r += b.rows();
        c += b.cols();
    }
    return out;
}

template <class F>
Morphism<F> evaluate(const Polynomial<F>& p, const Morphism<F>& f) {
    std::vector<Mat<F>> maps;
    for (const auto& b : f.maps()) maps.push_back(evaluate(p, b, f.source().field()));
    return Morphism<F>(f.source(), f.target(), std::move(maps), false);
}

template <class F>
Polynomial<F> minimalPolynomial(const Morphism<F>& f) {
    const auto& k = f.source().field();
    Polynomial<F> acc(k.one());
    for (const auto& b : f.maps()) {
        if (b.rows() == 0) continue;
        const auto p = minimalPolynomial(b, k);
        acc = ((acc * p) / gcd(acc, p)).monic();
    }
    return acc;
}

namespace {

/// Monic polynomial of least degree with sum c_i v_i = 0 over the sequence v_0, v_1, ...
template <class F>
Polynomial<F> firstDependency(const std::vector<Vec<F>>& seq, const Field<F>& k) {
    const Index rows = seq.front().size();
    Mat<F> m = zeros(k, rows, static_cast<Index>(seq.size()));
    for (std::size_t i = 0; i < seq.size(); ++i) m.col(static_cast<Index>(i)) = seq[i];
    const auto rr = rref(m);
    Index degree = 0;
    while (degree < static_cast<Index>(rr.pivots.size()) && rr.pivots[static_cast<std::size_t>(degree)] == degree) ++degree;
    if (degree >= static_cast<Index>(seq.size())) throw std::logic_error("firstDependency: sequence too short");
    std::vector<F> c(static_cast<std::size_t>(degree + 1), k.zero());
    c[static_cast<std::size_t>(degree)] = k.one();
    for (Index j = 0; j < degree; ++j) c[static_cast<std::size_t>(j)] = -rr.reduced(j, degree);
    return Polynomial<F>(std::move(c));
}

template <class F>
Vec<F> randomVector(const Field<F>& k, Index n, Rng& rng) {
    Vec<F> v(n);
    for (Index i = 0; i < n; ++i) v(i) = k.random(rng);
    return v;
}

template <class F>
bool inSpan(const Mat<F>& basis, const Vec<F>& v) {
    return rank(hstack(basis, Mat<F>(v))) == basis.cols();
}

template <class F>
Mat<F> closeIdeal(const EndStructure<F>& e, Mat<F> j) {
    const Index n = e.dim();
    for (;;) {
        Mat<F> grown = j;
        for (Index c = 0; c < j.cols(); ++c) {
            const Vec<F> b = j.col(c);
            const Mat<F> left = e.leftMultiplication(b);
            for (Index i = 0; i < n; ++i) {
                Vec<F> ei = Vec<F>::Constant(n, e.space.source.field().zero());
                ei(i) = e.space.source.field().one();
                grown = hstack(grown, Mat<F>(e.multiply(ei, b)));
                grown = hstack(grown, Mat<F>(left.col(i)));
            }
        }
        grown = columnSpaceBasis(grown);
        if (grown.cols() == j.cols()) return j;
        j = grown;
    }
}

template <class F>
bool isNilpotentIdeal(const EndStructure<F>& e, const Mat<F>& j) {
    Mat<F> power = j;
    for (Index step = 0; step <= e.dim() + 1; ++step) {
        if (power.cols() == 0) return true;
        Mat<F> next = zeros(e.space.source.field(), e.dim(), 0);
        for (Index a = 0; a < power.cols(); ++a) {
            const Mat<F> left = e.leftMultiplication(power.col(a));
            next = hstack(next, Mat<F>(left * j));
        }
        next = columnSpaceBasis(next);
        if (next.cols() >= power.cols()) return false;
        power = next;
    }
    return power.cols() == 0;
}

/// Nilpotent part of x in its Jordan-Chevalley decomposition, via Newton iteration
/// on the squarefree part of its minimal polynomial.
template <class F>
std::optional<Vec<F>> nilpotentPart(const EndStructure<F>& e, const Vec<F>& x) {
    const auto& k = e.space.source.field();
    const Mat<F> lx = e.leftMultiplication(x);
    const auto g = minimalPolynomial(lx, k);
    const auto r = squarefreePart(g, k);
    if (!r) return std::nullopt;
    const auto dr = r->derivative();
    Mat<F> s = lx;
    for (int iter = 0; iter < 64; ++iter) {
        const Mat<F> rs = evaluate(*r, s, k);
        if (allZero(rs)) return Vec<F>((lx - s) * e.unit);
        const auto inv = inverse(evaluate(dr, s, k), k);
        if (!inv) return std::nullopt;
        s = (s - rs * *inv).eval();
    }
    return std::nullopt;
}

}  // namespace

template <class F>
LocalityCertificate<F> certifyLocal(const EndStructure<F>& e, Rng& rng) {
    const auto& k = e.space.source.field();
    const Index n = e.dim();
    LocalityCertificate<F> cert;
    cert.radical = zeros(k, n, 0);
    if (n == 0) {
        cert.verdict = Locality::NotLocal;
        return cert;
    }
    const int budget = static_cast<int>(4 * n + 24);
    for (int trial = 0; trial < budget; ++trial) {
        const Index d = n - cert.radical.cols();
        if (d == 1) {
            cert.verdict = Locality::Local;
            cert.residueDegree = 1;
            return cert;
        }
        Vec<F> y;
        if (trial < n) {
            y = Vec<F>::Constant(n, k.zero());
            y(trial) = k.one();
        } else {
            y = randomVector(k, n, rng);
        }
        // minimal polynomial of y modulo the current ideal
        const Mat<F> c = complementBasis(cert.radical, k);
        const Mat<F> proj = (*inverse(hstack(cert.radical, c), k)).bottomRows(c.cols());
        std::vector<Vec<F>> seq;
        Vec<F> power = e.unit;
        const Mat<F> ly = e.leftMultiplication(y);
        for (Index i = 0; i <= d; ++i) {
            seq.push_back(proj * power);
            power = ly * power;
        }
        const auto mbar = firstDependency(seq, k);
        const auto rb = squarefreePart(mbar, k);
        if (!rb) continue;
        const auto factors = irreducibleFactors(*rb, k, rng);
        if (factors && factors->size() >= 2) {
            cert.verdict = Locality::NotLocal;
            return cert;
        }
        if (rb->degree() < mbar.degree()) {
            const auto nil = nilpotentPart(e, y);
            if (!nil) continue;
            if (inSpan(cert.radical, *nil)) continue;
            cert.radical = closeIdeal(e, hstack(cert.radical, Mat<F>(*nil)));
            if (!isNilpotentIdeal(e, cert.radical)) {
                cert.verdict = Locality::NotLocal;
                return cert;
            }
            continue;
        }
        if (factors && factors->size() == 1 && mbar.degree() == d) {
            cert.verdict = Locality::Local;
            cert.residueDegree = d;
            return cert;
        }
    }
    if (n - cert.radical.cols() == 1) {
        cert.verdict = Locality::Local;
        cert.residueDegree = 1;
    }
    return cert;
}

namespace {

template <class F>
struct Piece {
    Representation<F> object;
    Morphism<F> inclusion;
};

template <class F>
std::optional<std::pair<Polynomial<F>, Polynomial<F>>> coprimeSplit(const Polynomial<F>& g, const Field<F>& k, Rng& rng) {
    const auto r = squarefreePart(g, k);
    if (!r || r->degree() <= 1) return std::nullopt;
    const auto factors = irreducibleFactors(*r, k, rng);
    if (!factors || factors->size() < 2) return std::nullopt;
    const auto& f = factors->front();
    Polynomial<F> a(k.one()), b = g;
    while ((b % f).isZero()) {
        a = a * f;
        b = b / f;
    }
    return std::make_pair(a, b);
}

template <class F>
std::optional<std::pair<Subobject<F>, Subobject<F>>> splitBy(const Morphism<F>& phi, const Field<F>& k, Rng& rng) {
    const auto g = minimalPolynomial(phi);
    const auto split = coprimeSplit(g, k, rng);
    if (!split) return std::nullopt;
    return std::make_pair(kernel(evaluate(split->first, phi)), kernel(evaluate(split->second, phi)));
}

template <class F>
std::optional<Vec<F>> searchIdempotent(const EndStructure<F>& e) {
    const auto& k = e.space.source.field();
    const Index n = e.dim();
    const std::uint64_t q = k.order();
    std::uint64_t total = 1;
    for (Index i = 0; i < n; ++i) total *= q;
    Vec<F> x(n);
    for (std::uint64_t code = 1; code < total; ++code) {
        std::uint64_t c = code;
        for (Index i = 0; i < n; ++i) {
            x(i) = k.element(c % q);
            c /= q;
        }
        if (sameMatrix<F>(x, e.unit)) continue;
        if (sameMatrix<F>(e.multiply(x, x), x)) return x;
    }
    return std::nullopt;
}

template <class F>
bool exhaustiveFeasible(const Field<F>& k, Index n) {
    if (!k.finite()) return false;
    return std::pow(static_cast<double>(k.order()), static_cast<double>(n)) <= 20000.0;
}

/// Either splits m into two nonzero summands or proves it indecomposable.
template <class F>
std::optional<std::pair<Subobject<F>, Subobject<F>>> splitOnce(const Representation<F>& m, Rng& rng) {
    const auto& k = m.field();
    const auto e = endAlgebraStructure(m);
    if (e.dim() <= 1) return std::nullopt;
    const auto cert = certifyLocal(e, rng);
    if (cert.verdict == Locality::Local) return std::nullopt;
    const int trials = cert.verdict == Locality::NotLocal ? 400 : 40;
    for (int t = 0; t < trials; ++t) {
        const auto phi = e.space.element(randomVector(k, e.dim(), rng));
        if (auto s = splitBy(phi, k, rng)) return s;
    }
    if (exhaustiveFeasible(k, e.dim())) {
        const auto idem = searchIdempotent(e);
        if (!idem) return std::nullopt;
        const auto phi = e.space.element(*idem);
        const auto img = image(phi);
        return std::make_pair(Subobject<F>{img.object, img.inclusion}, kernel(phi));
    }
    throw DomainError("field_too_small",
                      "could not split or certify an endomorphism ring of dimension " + std::to_string(e.dim()) +
                          "; retry over a larger field extension");
}

template <class F>
void splitRecursive(const Piece<F>& piece, Rng& rng, std::vector<Piece<F>>& out) {
    if (piece.object.isZero()) return;
    auto s = splitOnce(piece.object, rng);
    if (!s) {
        out.push_back(piece);
        return;
    }
    splitRecursive(Piece<F>{s->first.object, piece.inclusion * s->first.inclusion}, rng, out);
    splitRecursive(Piece<F>{s->second.object, piece.inclusion * s->second.inclusion}, rng, out);
}

template <class F>
std::optional<Morphism<F>> randomInvertibleHom(const HomSpace<F>& h, Rng& rng, int trials) {
    const auto& k = h.source.field();
    for (int t = 0; t < trials; ++t) {
        const auto f = h.element(randomVector(k, h.dim(), rng));
        if (f.isIsomorphism()) return f;
    }
    if (exhaustiveFeasible(k, h.dim()) && std::pow(static_cast<double>(k.order()), static_cast<double>(h.dim())) <= 4096.0) {
        const std::uint64_t q = k.order();
        std::uint64_t total = 1;
        for (Index i = 0; i < h.dim(); ++i) total *= q;
        Vec<F> x(h.dim());
        for (std::uint64_t code = 1; code < total; ++code) {
            std::uint64_t c = code;
            for (Index i = 0; i < h.dim(); ++i) {
                x(i) = k.element(c % q);
                c /= q;
            }
            const auto f = h.element(x);
            if (f.isIsomorphism()) return f;
        }
    }
    return std::nullopt;
}

template <class F>
std::optional<Morphism<F>> isomorphismImpl(const Representation<F>& m, const Representation<F>& n, Rng& rng, bool allowDecompose);

template <class F>
Decomposition<F> decomposeImpl(const Representation<F>& m, Rng& rng) {
    std::vector<Piece<F>> pieces;
    splitRecursive(Piece<F>{m, Morphism<F>::identity(m)}, rng, pieces);
    std::stable_sort(pieces.begin(), pieces.end(), [](const Piece<F>& a, const Piece<F>& b) {
        if (a.object.totalDim() != b.object.totalDim()) return a.object.totalDim() < b.object.totalDim();
        return a.object.dims() < b.object.dims();
    });

    // group isomorphic pieces, keeping the first of each class as representative
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        bool placed = false;
        for (auto& g : groups) {
            if (isomorphismImpl(pieces[g.front()].object, pieces[i].object, rng, false)) {
                g.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) groups.push_back({i});
    }

    Decomposition<F> d;
    std::vector<Morphism<F>> incl;
    for (const auto& g : groups) {
        d.summands.push_back({pieces[g.front()].object, static_cast<Index>(g.size())});
        for (std::size_t i : g) {
            d.parts.push_back(pieces[i].object);
            incl.push_back(pieces[i].inclusion);
        }
    }
    const auto sum = directSum(m.algebraPtr(), d.parts);
    d.iso = rowMorphism(sum, incl, m);
    auto inv = inverse(d.iso);
    if (!inv) throw std::logic_error("decomposition inclusions are not complementary");
    d.inverseIso = *inv;
    d.inclusions = incl;
    for (const auto& p : sum.projections) d.projections.push_back(p * d.inverseIso);
    if (!d.verify()) throw std::logic_error("decomposition certificate failed");
    return d;
}

template <class F>
std::optional<Morphism<F>> isomorphismImpl(const Representation<F>& m, const Representation<F>& n, Rng& rng, bool allowDecompose) {
    if (m.algebraPtr() != n.algebraPtr() || m.dims() != n.dims()) return std::nullopt;
    if (m.isZero()) return Morphism<F>::zero(m, n);
    const auto h = homSpace(m, n);
    const Index hmm = homDim(m, m);
    if (h.dim() != hmm || homDim(n, n) != hmm || homDim(n, m) != hmm) return std::nullopt;
    if (auto f = randomInvertibleHom(h, rng, 64)) return f;
    if (!allowDecompose || (h.source.field().finite() &&
                            std::pow(static_cast<double>(h.source.field().order()), static_cast<double>(h.dim())) <= 4096.0))
        return std::nullopt;
    // match indecomposable summands
    const auto dm = decomposeImpl(m, rng);
    const auto dn = decomposeImpl(n, rng);
    if (dm.parts.size() != dn.parts.size()) return std::nullopt;
    std::vector<char> used(dn.parts.size(), 0);
    std::vector<Morphism<F>> blocks(dm.parts.size());
    std::vector<Representation<F>> targets(dm.parts.size());
    for (std::size_t i = 0; i < dm.parts.size(); ++i) {
        bool found = false;
        for (std::size_t j = 0; j < dn.parts.size() && !found; ++j) {
            if (used[j]) continue;
            if (auto f = isomorphismImpl(dm.parts[i], dn.parts[j], rng, false)) {
                used[j] = 1;
                blocks[i] = *f;
                targets[i] = dn.parts[j];
                found = true;
                // map into n through the matched summand
                blocks[i] = dn.inclusions[j] * *f;
            }
        }
        if (!found) return std::nullopt;
    }
    const auto sum = directSum(m.algebraPtr(), dm.parts);
    const auto f = rowMorphism(sum, blocks, n) * dm.inverseIso;
    if (!f.isIsomorphism()) return std::nullopt;
    return f;
}

}  // namespace

template <class F>
bool Decomposition<F>::verify() const {
    const auto a = iso * inverseIso;
    const auto b = inverseIso * iso;
    return a == Morphism<F>::identity(iso.target()) && b == Morphism<F>::identity(iso.source()) && iso.isCommuting() &&
           inverseIso.isCommuting();
}

template <class F>
Decomposition<F> decompose(const Representation<F>& m, Rng& rng) {
    return decomposeImpl(m, rng);
}

template <class F>
bool isIndecomposable(const Representation<F>& m, Rng& rng) {
    if (m.isZero()) return false;
    return !splitOnce(m, rng).has_value();
}

template <class F>
bool isBrick(const Representation<F>& m, Rng& rng) {
    if (m.isZero()) return false;
    const auto e = endAlgebraStructure(m);
    if (e.dim() == 1) return true;
    const auto cert = certifyLocal(e, rng);
    if (cert.verdict == Locality::Local) return cert.radical.cols() == 0;
    if (cert.verdict == Locality::NotLocal) return false;
    throw DomainError("undecidable", "could not decide whether the endomorphism ring is a division ring");
}

template <class F>
std::optional<Morphism<F>> isIsomorphic(const Representation<F>& m, const Representation<F>& n, Rng& rng) {
    return isomorphismImpl(m, n, rng, true);
}

#define CANREP_INSTANTIATE(F)                                                                          \
    template struct EndStructure<F>;                                                                   \
    template struct Decomposition<F>;                                                                  \
    template EndStructure<F> endAlgebraStructure(const Representation<F>&);                            \
    template LocalityCertificate<F> certifyLocal(const EndStructure<F>&, Rng&);                        \
    template Decomposition<F> decompose(const Representation<F>&, Rng&);                               \
    template bool isIndecomposable(const Representation<F>&, Rng&);                                    \
    template bool isBrick(const Representation<F>&, Rng&);                                             \
    template std::optional<Morphism<F>> isIsomorphic(const Representation<F>&, const Representation<F>&, Rng&); \
    template Mat<F> totalMatrix(const Morphism<F>&);                                                   \
    template Morphism<F> evaluate(const Polynomial<F>&, const Morphism<F>&);                           \
    template Polynomial<F> minimalPolynomial(const Morphism<F>&);
CANREP_FOR_EACH_SCALAR(CANREP_INSTANTIATE)
#undef CANREP_INSTANTIATE

}  // namespace canrep
