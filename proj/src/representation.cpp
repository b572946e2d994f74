#include "canrep/representation.hpp"

#include <numeric>

namespace canrep {

namespace {

template <class F>
Mat<F> blockDiagonal(const Field<F>& k, const std::vector<Mat<F>>& blocks) {
    Index rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Mat<F> out = zeros(k, rows, cols);
    Index r = 0, c = 0;
    for (const auto& b : blocks) {
        out.block(r, c, b.rows(), b.cols()) = b;
        r += b.rows();
        c += b.cols();
    }
    return out;
}

template <class F>
Mat<F> horizontal(const Field<F>& k, Index rows, const std::vector<Mat<F>>& blocks) {
    Index cols = 0;
    for (const auto& b : blocks) cols += b.cols();
    Mat<F> out = zeros(k, rows, cols);
    Index c = 0;
    for (const auto& b : blocks) {
        out.middleCols(c, b.cols()) = b;
        c += b.cols();
    }
    return out;
}

template <class F>
Mat<F> vertical(const Field<F>& k, Index cols, const std::vector<Mat<F>>& blocks) {
    Index rows = 0;
    for (const auto& b : blocks) rows += b.rows();
    Mat<F> out = zeros(k, rows, cols);
    Index r = 0;
    for (const auto& b : blocks) {
        out.middleRows(r, b.rows()) = b;
        r += b.rows();
    }
    return out;
}

/// Matrix X with a X = b; the caller guarantees solvability.
template <class F>
Mat<F> mustSolve(const Mat<F>& a, const Mat<F>& b, const Field<F>& k) {
    auto x = solve(a, b, k);
    if (!x) throw std::logic_error("internal: expected a solvable system");
    return *x;
}

}  // namespace

// ---------------------------------------------------------------- Representation

template <class F>
Representation<F>::Representation(AlgebraPtr<F> alg, DimVector dims, std::vector<Mat<F>> arrows) {
    if (!alg) throw std::invalid_argument("Representation: null algebra");
    if (static_cast<int>(dims.size()) != alg->vertexCount())
        throw DomainError("shape_mismatch", "dimension vector length differs from vertex count");
    for (Index d : dims)
        if (d < 0) throw DomainError("shape_mismatch", "negative dimension");
    if (static_cast<int>(arrows.size()) != alg->arrowCount())
        throw DomainError("shape_mismatch", "arrow matrix count differs from arrow count");
    for (int a = 0; a < alg->arrowCount(); ++a) {
        const auto& arr = alg->arrow(a);
        const auto& m = arrows[static_cast<std::size_t>(a)];
        if (m.rows() != dims[static_cast<std::size_t>(arr.target)] || m.cols() != dims[static_cast<std::size_t>(arr.source)])
            throw DomainError("shape_mismatch", "arrow " + arr.label + " has the wrong shape");
    }
    data_ = std::make_shared<const Data>(Data{std::move(alg), std::move(dims), std::move(arrows)});
    if (!satisfiesRelations()) throw DomainError("relation_violated", "representation violates a relation");
}

template <class F>
Representation<F> Representation<F>::zero(AlgebraPtr<F> alg) {
    const auto& k = alg->field();
    std::vector<Mat<F>> arrows;
    for (int a = 0; a < alg->arrowCount(); ++a) arrows.push_back(zeros(k, 0, 0));
    DimVector dims(static_cast<std::size_t>(alg->vertexCount()), 0);
    return Representation(std::move(alg), std::move(dims), std::move(arrows));
}

template <class F>
Index Representation<F>::totalDim() const {
    return std::accumulate(data_->dims.begin(), data_->dims.end(), Index{0});
}

template <class F>
Mat<F> Representation<F>::pathMatrix(int source, const std::vector<int>& arrows) const {
    Mat<F> acc = identity(field(), dim(source));
    int here = source;
    for (int a : arrows) {
        const auto& arr = algebra().arrow(a);
        if (arr.source != here) throw std::logic_error("pathMatrix: arrows do not form a path");
        acc = (arrow(a) * acc).eval();
        here = arr.target;
    }
    return acc;
}

template <class F>
bool Representation<F>::satisfiesRelations() const {
    for (const auto& rel : algebra().relations()) {
        const auto& first = rel.terms.front().second;
        Mat<F> sum = zeros(field(), dim(first.target), dim(first.source));
        for (const auto& [c, p] : rel.terms) sum += c * pathMatrix(p.source, p.arrows);
        if (!allZero(sum)) return false;
    }
    return true;
}

template <class F>
Representation<F> Representation<F>::conjugated(const std::vector<Mat<F>>& g) const {
    std::vector<Mat<F>> arrows;
    for (int a = 0; a < algebra().arrowCount(); ++a) {
        const auto& arr = algebra().arrow(a);
        auto inv = inverse(g[static_cast<std::size_t>(arr.source)], field());
        if (!inv) throw DomainError("not_invertible", "basis change is not invertible");
        arrows.push_back(g[static_cast<std::size_t>(arr.target)] * arrow(a) * *inv);
    }
    return Representation(algebraPtr(), dims(), std::move(arrows));
}

// ---------------------------------------------------------------- Morphism

template <class F>
Morphism<F>::Morphism(Representation<F> source, Representation<F> target, std::vector<Mat<F>> maps, bool check)
    : source_(std::move(source)), target_(std::move(target)), maps_(std::move(maps)) {
    if (source_.algebraPtr() != target_.algebraPtr())
        throw DomainError("algebra_mismatch", "morphism between representations of different algebras");
    if (!check) return;
    const int n = source_.algebra().vertexCount();
    if (static_cast<int>(maps_.size()) != n) throw DomainError("shape_mismatch", "morphism needs one map per vertex");
    for (int v = 0; v < n; ++v) {
        const auto& m = maps_[static_cast<std::size_t>(v)];
        if (m.rows() != target_.dim(v) || m.cols() != source_.dim(v))
            throw DomainError("shape_mismatch", "morphism component has the wrong shape");
    }
    if (!isCommuting()) throw DomainError("not_a_morphism", "vertex maps do not commute with the arrows");
}

template <class F>
Morphism<F> Morphism<F>::zero(const Representation<F>& source, const Representation<F>& target) {
    std::vector<Mat<F>> maps;
    for (int v = 0; v < source.algebra().vertexCount(); ++v) maps.push_back(zeros(source.field(), target.dim(v), source.dim(v)));
    return Morphism(source, target, std::move(maps), false);
}

template <class F>
Morphism<F> Morphism<F>::identity(const Representation<F>& m) {
    std::vector<Mat<F>> maps;
    for (int v = 0; v < m.algebra().vertexCount(); ++v) maps.push_back(canrep::identity(m.field(), m.dim(v)));
    return Morphism(m, m, std::move(maps), false);
}

template <class F>
bool Morphism<F>::isCommuting() const {
    for (int a = 0; a < source_.algebra().arrowCount(); ++a) {
        const auto& arr = source_.algebra().arrow(a);
        const Mat<F> lhs = at(arr.target) * source_.arrow(a);
        const Mat<F> rhs = target_.arrow(a) * at(arr.source);
        if (!sameMatrix(lhs, rhs)) return false;
    }
    return true;
}

template <class F>
bool Morphism<F>::isZero() const {
    for (const auto& m : maps_)
        if (!allZero(m)) return false;
    return true;
}

template <class F>
bool Morphism<F>::isInjective() const {
    for (const auto& m : maps_)
        if (rank(m) != m.cols()) return false;
    return true;
}

template <class F>
bool Morphism<F>::isSurjective() const {
    for (const auto& m : maps_)
        if (rank(m) != m.rows()) return false;
    return true;
}

template <class F>
bool Morphism<F>::isIsomorphism() const {
    for (const auto& m : maps_)
        if (!isInvertible(m)) return false;
    return true;
}

template <class F>
Morphism<F> Morphism<F>::compose(const Morphism& g, const Morphism& f) {
    if (f.target_.dims() != g.source_.dims()) throw DomainError("shape_mismatch", "composition of incompatible morphisms");
    std::vector<Mat<F>> maps;
    for (std::size_t v = 0; v < f.maps_.size(); ++v) maps.push_back(g.maps_[v] * f.maps_[v]);
    return Morphism(f.source_, g.target_, std::move(maps), false);
}

template <class F>
Morphism<F> Morphism<F>::combine(const Morphism& a, const Morphism& b, bool subtract) {
    if (a.source_.dims() != b.source_.dims() || a.target_.dims() != b.target_.dims())
        throw DomainError("shape_mismatch", "sum of incompatible morphisms");
    std::vector<Mat<F>> maps;
    for (std::size_t v = 0; v < a.maps_.size(); ++v) maps.push_back(subtract ? Mat<F>(a.maps_[v] - b.maps_[v]) : Mat<F>(a.maps_[v] + b.maps_[v]));
    return Morphism(a.source_, a.target_, std::move(maps), false);
}

template <class F>
std::optional<Morphism<F>> inverse(const Morphism<F>& f) {
    std::vector<Mat<F>> maps;
    for (const auto& m : f.maps()) {
        auto inv = inverse(m, f.source().field());
        if (!inv) return std::nullopt;
        maps.push_back(*inv);
    }
    return Morphism<F>(f.target(), f.source(), std::move(maps), false);
}

// ---------------------------------------------------------------- Hom

template <class F>
Morphism<F> HomSpace<F>::fromFlat(const Vec<F>& flat) const {
    std::vector<Mat<F>> maps;
    for (int v = 0; v < source.algebra().vertexCount(); ++v) {
        const Index rows = target.dim(v), cols = source.dim(v);
        Mat<F> m(rows, cols);
        for (Index j = 0; j < cols; ++j)
            for (Index i = 0; i < rows; ++i) m(i, j) = flat(offsets[static_cast<std::size_t>(v)] + j * rows + i);
        maps.push_back(std::move(m));
    }
    return Morphism<F>(source, target, std::move(maps), false);
}

template <class F>
Morphism<F> HomSpace<F>::element(const Vec<F>& coords) const {
    return fromFlat(basis * coords);
}

template <class F>
Morphism<F> HomSpace<F>::basisElement(Index i) const {
    return fromFlat(basis.col(i));
}

template <class F>
Vec<F> HomSpace<F>::flatten(const Morphism<F>& f) const {
    Vec<F> flat(ambientDim());
    for (int v = 0; v < source.algebra().vertexCount(); ++v) {
        const Index rows = target.dim(v), cols = source.dim(v);
        for (Index j = 0; j < cols; ++j)
            for (Index i = 0; i < rows; ++i) flat(offsets[static_cast<std::size_t>(v)] + j * rows + i) = f.at(v)(i, j);
    }
    return flat;
}

template <class F>
Vec<F> HomSpace<F>::coordinates(const Morphism<F>& f) const {
    auto x = solve(basis, Mat<F>(flatten(f)), source.field());
    if (!x) throw DomainError("not_a_morphism", "map is not in the Hom space");
    return x->col(0);
}

template <class F>
std::vector<Morphism<F>> HomSpace<F>::morphisms() const {
    std::vector<Morphism<F>> out;
    for (Index i = 0; i < dim(); ++i) out.push_back(basisElement(i));
    return out;
}

template <class F>
HomSpace<F> homSpace(const Representation<F>& m, const Representation<F>& n) {
    if (m.algebraPtr() != n.algebraPtr()) throw DomainError("algebra_mismatch", "Hom between different algebras");
    const auto& alg = m.algebra();
    const auto& k = m.field();
    HomSpace<F> hs{m, n, {}, {}};
    Index offset = 0;
    for (int v = 0; v < alg.vertexCount(); ++v) {
        hs.offsets.push_back(offset);
        offset += m.dim(v) * n.dim(v);
    }
    hs.offsets.push_back(offset);
    Index eqs = 0;
    for (const auto& arr : alg.arrows()) eqs += n.dim(arr.target) * m.dim(arr.source);
    Mat<F> system = zeros(k, eqs, offset);
    Index row = 0;
    for (int a = 0; a < alg.arrowCount(); ++a) {
        const auto& arr = alg.arrow(a);
        const int s = arr.source, t = arr.target;
        const Mat<F>& ma = m.arrow(a);
        const Mat<F>& na = n.arrow(a);
        // (f_t M_a - N_a f_s)(i, j) = 0
        for (Index j = 0; j < m.dim(s); ++j) {
            for (Index i = 0; i < n.dim(t); ++i, ++row) {
                for (Index kk = 0; kk < m.dim(t); ++kk)
                    if (!isZero(ma(kk, j))) system(row, hs.offsets[static_cast<std::size_t>(t)] + kk * n.dim(t) + i) += ma(kk, j);
                for (Index l = 0; l < n.dim(s); ++l)
                    if (!isZero(na(i, l))) system(row, hs.offsets[static_cast<std::size_t>(s)] + j * n.dim(s) + l) -= na(i, l);
            }
        }
    }
    hs.basis = kernelBasis(system, k);
    return hs;
}

template <class F>
std::vector<Morphism<F>> homBasis(const Representation<F>& m, const Representation<F>& n) {
    return homSpace(m, n).morphisms();
}

template <class F>
Index homDim(const Representation<F>& m, const Representation<F>& n) {
    return homSpace(m, n).dim();
}

// ---------------------------------------------------------------- sums

template <class F>
DirectSum<F> directSum(const AlgebraPtr<F>& alg, const std::vector<Representation<F>>& parts) {
    const auto& k = alg->field();
    const int n = alg->vertexCount();
    DimVector dims(static_cast<std::size_t>(n), 0);
    for (const auto& p : parts) {
        if (p.algebraPtr() != alg) throw DomainError("algebra_mismatch", "direct sum over different algebras");
        for (int v = 0; v < n; ++v) dims[static_cast<std::size_t>(v)] += p.dim(v);
    }
    std::vector<Mat<F>> arrows;
    for (int a = 0; a < alg->arrowCount(); ++a) {
        std::vector<Mat<F>> blocks;
        for (const auto& p : parts) blocks.push_back(p.arrow(a));
        arrows.push_back(blockDiagonal(k, blocks));
    }
    DirectSum<F> out{Representation<F>(alg, dims, std::move(arrows)), {}, {}};
    DimVector offset(static_cast<std::size_t>(n), 0);
    for (const auto& p : parts) {
        std::vector<Mat<F>> inj, proj;
        for (int v = 0; v < n; ++v) {
            const auto vi = static_cast<std::size_t>(v);
            Mat<F> e = zeros(k, dims[vi], p.dim(v));
            e.middleRows(offset[vi], p.dim(v)) = identity(k, p.dim(v));
            proj.push_back(e.transpose());
            inj.push_back(std::move(e));
            offset[vi] += p.dim(v);
        }
        out.injections.emplace_back(p, out.object, std::move(inj), false);
        out.projections.emplace_back(out.object, p, std::move(proj), false);
    }
    return out;
}

template <class F>
DirectSum<F> directSum(const std::vector<Representation<F>>& parts) {
    if (parts.empty()) throw std::invalid_argument("directSum: empty list needs an explicit algebra");
    return directSum(parts.front().algebraPtr(), parts);
}

template <class F>
Morphism<F> rowMorphism(const DirectSum<F>& sources, const std::vector<Morphism<F>>& maps, const Representation<F>& target) {
    const auto& k = target.field();
    std::vector<Mat<F>> out;
    for (int v = 0; v < target.algebra().vertexCount(); ++v) {
        std::vector<Mat<F>> blocks;
        for (const auto& f : maps) blocks.push_back(f.at(v));
        out.push_back(horizontal(k, target.dim(v), blocks));
    }
    return Morphism<F>(sources.object, target, std::move(out), false);
}

template <class F>
Morphism<F> columnMorphism(const Representation<F>& source, const std::vector<Morphism<F>>& maps, const DirectSum<F>& targets) {
    const auto& k = source.field();
    std::vector<Mat<F>> out;
    for (int v = 0; v < source.algebra().vertexCount(); ++v) {
        std::vector<Mat<F>> blocks;
        for (const auto& f : maps) blocks.push_back(f.at(v));
        out.push_back(vertical(k, source.dim(v), blocks));
    }
    return Morphism<F>(source, targets.object, std::move(out), false);
}

template <class F>
Morphism<F> diagonalMorphism(const DirectSum<F>& sources, const std::vector<Morphism<F>>& maps, const DirectSum<F>& targets) {
    const auto& k = sources.object.field();
    std::vector<Mat<F>> out;
    for (int v = 0; v < sources.object.algebra().vertexCount(); ++v) {
        std::vector<Mat<F>> blocks;
        for (const auto& f : maps) blocks.push_back(f.at(v));
        out.push_back(blockDiagonal(k, blocks));
    }
    return Morphism<F>(sources.object, targets.object, std::move(out), false);
}

// ---------------------------------------------------------------- kernels and cokernels

namespace {

/// The representation carried by the column spans `basis` (closed under arrows).
template <class F>
Subobject<F> fromBasis(const Representation<F>& m, std::vector<Mat<F>> basis) {
    const auto& alg = m.algebra();
    const auto& k = m.field();
    DimVector dims;
    for (const auto& b : basis) dims.push_back(b.cols());
    std::vector<Mat<F>> arrows;
    for (int a = 0; a < alg.arrowCount(); ++a) {
        const auto& arr = alg.arrow(a);
        arrows.push_back(mustSolve<F>(basis[static_cast<std::size_t>(arr.target)],
                                      m.arrow(a) * basis[static_cast<std::size_t>(arr.source)], k));
    }
    Representation<F> sub(m.algebraPtr(), dims, std::move(arrows));
    return {sub, Morphism<F>(sub, m, std::move(basis), false)};
}

}  // namespace

template <class F>
Subobject<F> kernel(const Morphism<F>& f) {
    std::vector<Mat<F>> basis;
    for (const auto& m : f.maps()) basis.push_back(kernelBasis(m, f.source().field()));
    return fromBasis(f.source(), std::move(basis));
}

template <class F>
Quotient<F> cokernel(const Morphism<F>& f) {
    const auto& n = f.target();
    const auto& alg = n.algebra();
    const auto& k = n.field();
    std::vector<Mat<F>> proj, section;
    DimVector dims;
    for (int v = 0; v < alg.vertexCount(); ++v) {
        const Mat<F> b = columnSpaceBasis(f.at(v));
        const Mat<F> c = complementBasis(f.at(v), k);
        const Mat<F> tinv = *inverse(hstack(b, c), k);
        proj.push_back(tinv.bottomRows(c.cols()));
        section.push_back(c);
        dims.push_back(c.cols());
    }
    std::vector<Mat<F>> arrows;
    for (int a = 0; a < alg.arrowCount(); ++a) {
        const auto& arr = alg.arrow(a);
        arrows.push_back(proj[static_cast<std::size_t>(arr.target)] * n.arrow(a) * section[static_cast<std::size_t>(arr.source)]);
    }
    Representation<F> q(n.algebraPtr(), dims, std::move(arrows));
    return {q, Morphism<F>(n, q, std::move(proj), false), std::move(section)};
}

template <class F>
Image<F> image(const Morphism<F>& f) {
    std::vector<Mat<F>> basis;
    for (const auto& m : f.maps()) basis.push_back(columnSpaceBasis(m));
    auto sub = fromBasis(f.target(), basis);
    std::vector<Mat<F>> co;
    for (std::size_t v = 0; v < basis.size(); ++v) co.push_back(mustSolve<F>(basis[v], f.maps()[v], f.source().field()));
    return {sub.object, sub.inclusion, Morphism<F>(f.source(), sub.object, std::move(co), false)};
}

template <class F>
Subobject<F> generatedSubobject(const Representation<F>& m, const std::vector<Mat<F>>& spans) {
    const auto& alg = m.algebra();
    std::vector<Mat<F>> basis;
    for (const auto& s : spans) basis.push_back(columnSpaceBasis(s));
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < alg.arrowCount(); ++a) {
            const auto& arr = alg.arrow(a);
            auto& tgt = basis[static_cast<std::size_t>(arr.target)];
            const Mat<F> img = m.arrow(a) * basis[static_cast<std::size_t>(arr.source)];
            const Mat<F> grown = columnSpaceBasis(hstack(tgt, img));
            if (grown.cols() > tgt.cols()) {
                tgt = grown;
                changed = true;
            }
        }
    }
    return fromBasis(m, std::move(basis));
}

template <class F>
Quotient<F> quotient(const Subobject<F>& sub) {
    return cokernel(sub.inclusion);
}

template <class F>
Morphism<F> factorThroughCokernel(const Quotient<F>& coker, const Morphism<F>& g) {
    std::vector<Mat<F>> maps;
    for (std::size_t v = 0; v < coker.section.size(); ++v) maps.push_back(g.maps()[v] * coker.section[v]);
    return Morphism<F>(coker.object, g.target(), std::move(maps), false);
}

template <class F>
std::optional<Morphism<F>> factorThroughMono(const Morphism<F>& incl, const Morphism<F>& g) {
    std::vector<Mat<F>> maps;
    for (std::size_t v = 0; v < incl.maps().size(); ++v) {
        auto x = solve(incl.maps()[v], g.maps()[v], g.source().field());
        if (!x) return std::nullopt;
        maps.push_back(*x);
    }
    return Morphism<F>(g.source(), incl.source(), std::move(maps), false);
}

// ---------------------------------------------------------------- standard modules

template <class F>
Representation<F> simpleAt(const AlgebraPtr<F>& alg, int v) {
    DimVector dims(static_cast<std::size_t>(alg->vertexCount()), 0);
    dims.at(static_cast<std::size_t>(v)) = 1;
    std::vector<Mat<F>> arrows;
    for (const auto& arr : alg->arrows())
        arrows.push_back(zeros(alg->field(), dims[static_cast<std::size_t>(arr.target)], dims[static_cast<std::size_t>(arr.source)]));
    return Representation<F>(alg, dims, std::move(arrows));
}

template <class F>
Representation<F> projectiveAt(const AlgebraPtr<F>& alg, int v) {
    const int n = alg->vertexCount();
    DimVector dims;
    for (int w = 0; w < n; ++w) dims.push_back(alg->pathDim(v, w));
    std::vector<Mat<F>> arrows;
    for (int a = 0; a < alg->arrowCount(); ++a) {
        const auto& arr = alg->arrow(a);
        const auto& from = alg->paths(v, arr.source);
        Mat<F> m = zeros(alg->field(), alg->pathDim(v, arr.target), from.dim());
        for (Index j = 0; j < from.dim(); ++j) {
            std::vector<int> path = from.monomials[static_cast<std::size_t>(from.standard[static_cast<std::size_t>(j)])];
            path.push_back(a);
            m.col(j) = alg->reduce(v, arr.target, path);
        }
        arrows.push_back(std::move(m));
    }
    return Representation<F>(alg, dims, std::move(arrows));
}

template <class F>
Representation<F> dual(const Representation<F>& m) {
    std::vector<Mat<F>> arrows;
    for (const auto& a : m.arrowMatrices()) arrows.push_back(a.transpose());
    return Representation<F>(m.algebra().op(), m.dims(), std::move(arrows));
}

template <class F>
Morphism<F> dual(const Morphism<F>& f, const Representation<F>& dualSource, const Representation<F>& dualTarget) {
    std::vector<Mat<F>> maps;
    for (const auto& m : f.maps()) maps.push_back(m.transpose());
    return Morphism<F>(dualSource, dualTarget, std::move(maps), false);
}

template <class F>
Representation<F> injectiveAt(const AlgebraPtr<F>& alg, int v) {
    return dual(projectiveAt(alg->op(), v));
}

template <class F>
ProjectiveSum<F> projectiveSum(const AlgebraPtr<F>& alg, const std::vector<int>& tops) {
    std::vector<Representation<F>> parts;
    for (int v : tops) parts.push_back(projectiveAt(alg, v));
    ProjectiveSum<F> out{tops, directSum(alg, parts).object, {}};
    for (std::size_t i = 0; i < tops.size(); ++i) {
        Index pos = 0;
        for (std::size_t j = 0; j < i; ++j) pos += alg->pathDim(tops[j], tops[i]);
        out.generator.push_back(pos);
    }
    return out;
}

template <class F>
Morphism<F> mapFromProjective(const ProjectiveSum<F>& p, const Representation<F>& m, const std::vector<Vec<F>>& elements) {
    const auto& alg = m.algebra();
    const auto& k = m.field();
    std::vector<Mat<F>> maps;
    for (int w = 0; w < alg.vertexCount(); ++w) {
        std::vector<Mat<F>> blocks;
        for (std::size_t i = 0; i < p.tops.size(); ++i) {
            const auto& space = alg.paths(p.tops[i], w);
            Mat<F> b = zeros(k, m.dim(w), space.dim());
            for (Index j = 0; j < space.dim(); ++j)
                b.col(j) = m.pathMatrix(p.tops[i], space.monomials[static_cast<std::size_t>(space.standard[static_cast<std::size_t>(j)])]) * elements[i];
            blocks.push_back(std::move(b));
        }
        maps.push_back(horizontal(k, m.dim(w), blocks));
    }
    return Morphism<F>(p.object, m, std::move(maps), false);
}

template <class F>
Vec<F> generatorImage(const ProjectiveSum<F>& p, const Morphism<F>& f, std::size_t i) {
    return f.at(p.tops[i]).col(p.generator[i]);
}

template <class F>
Morphism<F> liftFromProjective(const ProjectiveSum<F>& p, const Morphism<F>& f, const Morphism<F>& g) {
    std::vector<Vec<F>> elements;
    for (std::size_t i = 0; i < p.tops.size(); ++i) {
        auto x = solve(g.at(p.tops[i]), Mat<F>(generatorImage(p, f, i)), f.source().field());
        if (!x) throw DomainError("no_lift", "map does not lift through the given morphism");
        elements.push_back(x->col(0));
    }
    return mapFromProjective(p, g.source(), elements);
}

template <class F>
Subobject<F> radical(const Representation<F>& m) {
    const auto& alg = m.algebra();
    std::vector<Mat<F>> spans;
    for (int v = 0; v < alg.vertexCount(); ++v) spans.push_back(zeros(m.field(), m.dim(v), 0));
    for (int a = 0; a < alg.arrowCount(); ++a) {
        auto& s = spans[static_cast<std::size_t>(alg.arrow(a).target)];
        s = hstack(s, m.arrow(a));
    }
    return generatedSubobject(m, spans);
}

template <class F>
Quotient<F> top(const Representation<F>& m) {
    return quotient(radical(m));
}

template <class F>
ProjectiveCover<F> projectiveCover(const Representation<F>& m) {
    const auto rad = radical(m);
    std::vector<int> tops;
    std::vector<Vec<F>> elements;
    for (int v = 0; v < m.algebra().vertexCount(); ++v) {
        const Mat<F> c = complementBasis(rad.inclusion.at(v), m.field());
        for (Index j = 0; j < c.cols(); ++j) {
            tops.push_back(v);
            elements.push_back(c.col(j));
        }
    }
    auto p = projectiveSum(m.algebraPtr(), tops);
    auto cover = mapFromProjective(p, m, elements);
    return {std::move(p), std::move(cover)};
}

template <class F>
Vec<F> Presentation<F>::coefficient(std::size_t i, std::size_t j) const {
    const auto& alg = p0.object.algebra();
    const int u = p1.tops[i];
    const Vec<F> x = generatorImage(p1, map, i);
    Index offset = 0;
    for (std::size_t l = 0; l < j; ++l) offset += alg.pathDim(p0.tops[l], u);
    return x.segment(offset, alg.pathDim(p0.tops[j], u));
}

template <class F>
Presentation<F> minimalProjectivePresentation(const Representation<F>& m) {
    auto c0 = projectiveCover(m);
    auto syz = kernel(c0.cover);
    auto c1 = projectiveCover(syz.object);
    auto map = syz.inclusion * c1.cover;
    return {std::move(c0.projective), std::move(c1.projective), std::move(c0.cover), std::move(syz), std::move(c1.cover), std::move(map)};
}

template <class F>
Morphism<F> projectiveMorphism(const ProjectiveSum<F>& sources, const ProjectiveSum<F>& targets,
                               const std::vector<std::vector<Vec<F>>>& coeff) {
    const auto& alg = sources.object.algebra();
    const auto& k = alg.field();
    std::vector<Mat<F>> maps;
    for (int x = 0; x < alg.vertexCount(); ++x) {
        Mat<F> m = zeros(k, targets.object.dim(x), sources.object.dim(x));
        Index col = 0;
        for (std::size_t i = 0; i < sources.tops.size(); ++i) {
            const Index width = alg.pathDim(sources.tops[i], x);
            Index row = 0;
            for (std::size_t j = 0; j < targets.tops.size(); ++j) {
                const Index height = alg.pathDim(targets.tops[j], x);
                if (height > 0 && width > 0)
                    m.block(row, col, height, width) = alg.precomposition(targets.tops[j], sources.tops[i], x, coeff[i][j]);
                row += height;
            }
            col += width;
        }
        maps.push_back(std::move(m));
    }
    return Morphism<F>(sources.object, targets.object, std::move(maps), false);
}

template <class F>
Representation<F> makeRepresentation(const AlgebraPtr<F>& alg, const std::vector<std::pair<std::string, Index>>& dims,
                                     const std::vector<std::pair<std::string, Mat<F>>>& arrows) {
    DimVector d(static_cast<std::size_t>(alg->vertexCount()), 0);
    for (const auto& [label, value] : dims) d[static_cast<std::size_t>(alg->vertexIndex(label))] = value;
    std::vector<Mat<F>> mats;
    for (const auto& arr : alg->arrows())
        mats.push_back(zeros(alg->field(), d[static_cast<std::size_t>(arr.target)], d[static_cast<std::size_t>(arr.source)]));
    for (const auto& [label, m] : arrows) mats[static_cast<std::size_t>(alg->arrowIndex(label))] = m;
    return Representation<F>(alg, d, std::move(mats));
}

#define CANREP_INSTANTIATE(F)                                                                                       \
    template class Representation<F>;                                                                               \
    template class Morphism<F>;                                                                                     \
    template struct HomSpace<F>;                                                                                    \
    template struct Presentation<F>;                                                                                \
    template std::optional<Morphism<F>> inverse(const Morphism<F>&);                                               \
    template HomSpace<F> homSpace(const Representation<F>&, const Representation<F>&);                             \
    template std::vector<Morphism<F>> homBasis(const Representation<F>&, const Representation<F>&);                \
    template Index homDim(const Representation<F>&, const Representation<F>&);                                     \
    template DirectSum<F> directSum(const AlgebraPtr<F>&, const std::vector<Representation<F>>&);                  \
    template DirectSum<F> directSum(const std::vector<Representation<F>>&);                                        \
    template Morphism<F> rowMorphism(const DirectSum<F>&, const std::vector<Morphism<F>>&, const Representation<F>&); \
    template Morphism<F> columnMorphism(const Representation<F>&, const std::vector<Morphism<F>>&, const DirectSum<F>&); \
    template Morphism<F> diagonalMorphism(const DirectSum<F>&, const std::vector<Morphism<F>>&, const DirectSum<F>&); \
    template Subobject<F> kernel(const Morphism<F>&);                                                               \
    template Quotient<F> cokernel(const Morphism<F>&);                                                              \
    template Image<F> image(const Morphism<F>&);                                                                    \
    template Subobject<F> generatedSubobject(const Representation<F>&, const std::vector<Mat<F>>&);               \
    template Quotient<F> quotient(const Subobject<F>&);                                                             \
    template Morphism<F> factorThroughCokernel(const Quotient<F>&, const Morphism<F>&);                            \
    template std::optional<Morphism<F>> factorThroughMono(const Morphism<F>&, const Morphism<F>&);                 \
    template Representation<F> simpleAt(const AlgebraPtr<F>&, int);                                                 \
    template Representation<F> projectiveAt(const AlgebraPtr<F>&, int);                                             \
    template Representation<F> injectiveAt(const AlgebraPtr<F>&, int);                                              \
    template Representation<F> dual(const Representation<F>&);                                                      \
    template Morphism<F> dual(const Morphism<F>&, const Representation<F>&, const Representation<F>&);             \
    template ProjectiveSum<F> projectiveSum(const AlgebraPtr<F>&, const std::vector<int>&);                         \
    template Morphism<F> mapFromProjective(const ProjectiveSum<F>&, const Representation<F>&, const std::vector<Vec<F>>&); \
    template Vec<F> generatorImage(const ProjectiveSum<F>&, const Morphism<F>&, std::size_t);                       \
    template Morphism<F> liftFromProjective(const ProjectiveSum<F>&, const Morphism<F>&, const Morphism<F>&);       \
    template Subobject<F> radical(const Representation<F>&);                                                        \
    template Quotient<F> top(const Representation<F>&);                                                             \
    template ProjectiveCover<F> projectiveCover(const Representation<F>&);                                          \
    template Presentation<F> minimalProjectivePresentation(const Representation<F>&);                               \
    template Morphism<F> projectiveMorphism(const ProjectiveSum<F>&, const ProjectiveSum<F>&,                       \
                                            const std::vector<std::vector<Vec<F>>>&);                               \
    template Representation<F> makeRepresentation(const AlgebraPtr<F>&,                                             \
                                                  const std::vector<std::pair<std::string, Index>>&,                \
                                                  const std::vector<std::pair<std::string, Mat<F>>>&);
CANREP_FOR_EACH_SCALAR(CANREP_INSTANTIATE)
#undef CANREP_INSTANTIATE

}  // namespace canrep
