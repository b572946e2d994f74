#include "canrep/algebra.hpp"

#include <algorithm>
#include <functional>

namespace canrep {

template <class F>
struct Algebra<F>::Pair {
    Algebra original;
    Algebra opposite;
    explicit Pair(const Field<F>& k) : original(k), opposite(k) {}
};

template <class F>
int Algebra<F>::vertexIndex(const std::string& label) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), label);
    if (it == vertices_.end()) throw DomainError("unknown_vertex", "unknown vertex label: " + label);
    return static_cast<int>(it - vertices_.begin());
}

template <class F>
int Algebra<F>::arrowIndex(const std::string& label) const {
    for (int a = 0; a < arrowCount(); ++a)
        if (arrows_[static_cast<std::size_t>(a)].label == label) return a;
    throw DomainError("unknown_arrow", "unknown arrow label: " + label);
}

template <class F>
int Algebra<F>::armVertex(int arm, int j) const {
    if (arm < 1 || arm > armCount()) throw DomainError("invalid_arm", "arm index out of range");
    const int p = arms_[static_cast<std::size_t>(arm - 1)];
    if (j == 0) return source_;
    if (j == p) return sink_;
    if (j < 0 || j > p) throw DomainError("invalid_arm", "arm position out of range");
    return armVertices_[static_cast<std::size_t>(arm - 1)][static_cast<std::size_t>(j - 1)];
}

template <class F>
int Algebra<F>::armArrow(int arm, int j) const {
    if (arm < 1 || arm > armCount()) throw DomainError("invalid_arm", "arm index out of range");
    const auto& list = armArrows_[static_cast<std::size_t>(arm - 1)];
    if (j < 1 || j > static_cast<int>(list.size())) throw DomainError("invalid_arm", "arm arrow out of range");
    return list[static_cast<std::size_t>(j - 1)];
}

template <class F>
Vec<F> Algebra<F>::reduce(int a, int b, const std::vector<int>& monomial) const {
    const auto& space = paths(a, b);
    auto it = space.lookup.find(monomial);
    if (it == space.lookup.end()) throw std::logic_error("reduce: not a path between the given vertices");
    return space.reduction.col(it->second);
}

template <class F>
Mat<F> Algebra<F>::precomposition(int a, int b, int x, const Vec<F>& r) const {
    const auto& ab = paths(a, b);
    const auto& bx = paths(b, x);
    const auto& ax = paths(a, x);
    Mat<F> out = zeros(field_, ax.dim(), bx.dim());
    for (Index i = 0; i < ab.dim(); ++i) {
        if (isZero(r(i))) continue;
        const auto& first = ab.monomials[static_cast<std::size_t>(ab.standard[static_cast<std::size_t>(i)])];
        for (Index j = 0; j < bx.dim(); ++j) {
            std::vector<int> path = first;
            const auto& second = bx.monomials[static_cast<std::size_t>(bx.standard[static_cast<std::size_t>(j)])];
            path.insert(path.end(), second.begin(), second.end());
            out.col(j) += r(i) * ax.reduction.col(ax.lookup.at(path));
        }
    }
    return out;
}

template <class F>
void Algebra<F>::buildPathSpaces() {
    const int n = vertexCount();
    // all paths, grouped by endpoints; the quiver is acyclic
    std::vector<std::vector<std::vector<int>>> all(static_cast<std::size_t>(n * n));
    std::function<void(int, int, std::vector<int>&)> walk = [&](int start, int here, std::vector<int>& path) {
        all[static_cast<std::size_t>(start * n + here)].push_back(path);
        for (int a = 0; a < arrowCount(); ++a) {
            if (arrows_[static_cast<std::size_t>(a)].source != here) continue;
            path.push_back(a);
            walk(start, arrows_[static_cast<std::size_t>(a)].target, path);
            path.pop_back();
        }
    };
    for (int v = 0; v < n; ++v) {
        std::vector<int> path;
        walk(v, v, path);
    }

    spaces_.assign(static_cast<std::size_t>(n * n), PathSpace<F>{});
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            auto& space = spaces_[static_cast<std::size_t>(a * n + b)];
            space.monomials = all[static_cast<std::size_t>(a * n + b)];
            const Index m = static_cast<Index>(space.monomials.size());
            for (Index i = 0; i < m; ++i) space.lookup[space.monomials[static_cast<std::size_t>(i)]] = i;

            // ideal elements u . rho . v, columns in reverse monomial order so that
            // pivots fall on later monomials and early ones stay standard
            std::vector<Vec<F>> rows;
            for (const auto& rel : relations_) {
                const int s = rel.terms.front().second.source, t = rel.terms.front().second.target;
                for (const auto& u : all[static_cast<std::size_t>(a * n + s)]) {
                    for (const auto& v : all[static_cast<std::size_t>(t * n + b)]) {
                        Vec<F> row = Vec<F>::Constant(m, field_.zero());
                        for (const auto& [c, p] : rel.terms) {
                            std::vector<int> path = u;
                            path.insert(path.end(), p.arrows.begin(), p.arrows.end());
                            path.insert(path.end(), v.begin(), v.end());
                            row(m - 1 - space.lookup.at(path)) += c;
                        }
                        rows.push_back(row);
                    }
                }
            }
            Mat<F> gens = zeros(field_, static_cast<Index>(rows.size()), m);
            for (std::size_t i = 0; i < rows.size(); ++i) gens.row(static_cast<Index>(i)) = rows[i].transpose();
            const auto rr = rref(gens);
            std::vector<char> pivot(static_cast<std::size_t>(m), 0);
            for (Index p : rr.pivots) pivot[static_cast<std::size_t>(m - 1 - p)] = 1;
            std::vector<Index> position(static_cast<std::size_t>(m), -1);
            for (Index i = 0; i < m; ++i) {
                if (!pivot[static_cast<std::size_t>(i)]) {
                    position[static_cast<std::size_t>(i)] = static_cast<Index>(space.standard.size());
                    space.standard.push_back(i);
                }
            }
            space.reduction = zeros(field_, space.dim(), m);
            for (Index i = 0; i < m; ++i)
                if (!pivot[static_cast<std::size_t>(i)]) space.reduction(position[static_cast<std::size_t>(i)], i) = field_.one();
            // a pivot monomial equals minus the rest of its row
            for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
                const Index col = m - 1 - rr.pivots[r];
                for (Index j = 0; j < m; ++j) {
                    const Index mono = m - 1 - j;
                    if (pivot[static_cast<std::size_t>(mono)] || isZero(rr.reduced(static_cast<Index>(r), j))) continue;
                    space.reduction(position[static_cast<std::size_t>(mono)], col) = -rr.reduced(static_cast<Index>(r), j);
                }
            }
        }
    }
}

template <class F>
void Algebra<F>::buildOpposite(const Algebra& base) {
    vertices_ = base.vertices_;
    arrows_ = base.arrows_;
    for (auto& a : arrows_) std::swap(a.source, a.target);
    relations_ = base.relations_;
    for (auto& rel : relations_) {
        for (auto& term : rel.terms) {
            std::swap(term.second.source, term.second.target);
            std::reverse(term.second.arrows.begin(), term.second.arrows.end());
        }
    }
    const int n = vertexCount();
    spaces_.assign(static_cast<std::size_t>(n * n), PathSpace<F>{});
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            auto& space = spaces_[static_cast<std::size_t>(a * n + b)];
            space = base.paths(b, a);
            space.lookup.clear();
            for (std::size_t i = 0; i < space.monomials.size(); ++i) {
                std::reverse(space.monomials[i].begin(), space.monomials[i].end());
                space.lookup[space.monomials[i]] = static_cast<Index>(i);
            }
        }
    }
    isOpposite_ = true;
    weights_ = base.weights_;
    arms_ = base.arms_;
    params_ = base.params_;
    armVertices_ = base.armVertices_;
    armArrows_ = base.armArrows_;
    source_ = base.source_;
    sink_ = base.sink_;
}

namespace {

template <class F>
std::string scalarText(const Field<F>& k, const F& x) {
    return k.format(x);
}

}  // namespace

template <class F>
AlgebraPtr<F> canonicalAlgebra(const Field<F>& k, const std::vector<int>& weights, const std::vector<F>& params) {
    for (int p : weights)
        if (p < 2) throw DomainError("invalid_weight", "weights must be at least 2");
    const std::size_t t = weights.size();
    const std::size_t expected = t >= 2 ? t - 2 : 0;
    if (params.size() != expected)
        throw DomainError("param_count", "expected " + std::to_string(expected) + " parameters, got " +
                                             std::to_string(params.size()));
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (isZero(params[i]) || params[i] == k.one())
            throw DomainError("forbidden_param", "parameter " + scalarText(k, params[i]) + " must differ from 0 and 1");
        for (std::size_t j = 0; j < i; ++j)
            if (params[i] == params[j])
                throw DomainError("repeated_param", "parameter " + scalarText(k, params[i]) + " is repeated");
    }

    auto pair = std::make_shared<typename Algebra<F>::Pair>(k);
    Algebra<F>& alg = pair->original;
    alg.weights_ = weights;
    alg.arms_ = weights;
    while (alg.arms_.size() < 2) alg.arms_.push_back(1);
    alg.params_ = params;

    alg.vertices_.push_back("0");
    alg.source_ = 0;
    for (std::size_t i = 0; i < alg.arms_.size(); ++i) {
        std::vector<int> verts;
        for (int j = 1; j < alg.arms_[i]; ++j) {
            verts.push_back(alg.vertexCount());
            alg.vertices_.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j) + ")");
        }
        alg.armVertices_.push_back(verts);
    }
    alg.sink_ = alg.vertexCount();
    alg.vertices_.push_back("c");

    for (std::size_t i = 0; i < alg.arms_.size(); ++i) {
        const int arm = static_cast<int>(i + 1);
        std::vector<int> list;
        for (int j = 1; j <= alg.arms_[i]; ++j) {
            list.push_back(alg.arrowCount());
            alg.arrows_.push_back({"x" + std::to_string(arm) + "_" + std::to_string(j), alg.armVertex(arm, j - 1),
                                   alg.armVertex(arm, j)});
        }
        alg.armArrows_.push_back(list);
    }

    // x_i = x_2 - lambda_i x_1, written as x_i - x_2 + lambda_i x_1 = 0
    auto armPath = [&](std::size_t i) {
        Path p{alg.source_, alg.sink_, alg.armArrows_[i]};
        return p;
    };
    for (std::size_t i = 2; i < alg.arms_.size(); ++i) {
        Relation<F> rel;
        rel.terms.push_back({k.one(), armPath(i)});
        rel.terms.push_back({-k.one(), armPath(1)});
        rel.terms.push_back({params[i - 2], armPath(0)});
        alg.relations_.push_back(std::move(rel));
    }
    alg.buildPathSpaces();
    pair->opposite.buildOpposite(alg);

    std::shared_ptr<const void> owner = pair;
    pair->original.owner_ = owner;
    pair->opposite.owner_ = owner;
    pair->original.opposite_ = &pair->opposite;
    pair->opposite.opposite_ = &pair->original;
    return AlgebraPtr<F>(pair, &pair->original);
}

template <class F>
IntMat cartanMatrix(const Algebra<F>& alg) {
    const int n = alg.vertexCount();
    IntMat c(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c(i, j) = alg.pathDim(i, j);
    return c;
}

namespace {

/// Inverse of an integer matrix that is unitriangular up to a simultaneous
/// permutation of rows and columns (true for Cartan matrices of directed algebras).
IntMat unitriangularInverse(const IntMat& c) {
    const Index n = c.rows();
    Mat<Rational> q(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) q(i, j) = Rational(static_cast<long>(c(i, j)));
    const auto inv = inverse(q, QField{});
    if (!inv) throw std::logic_error("Cartan matrix is singular");
    IntMat out(n, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            const Rational& x = (*inv)(i, j);
            if (!x.isInteger()) throw std::logic_error("Cartan matrix is not unimodular");
            out(i, j) = x.numerator().get_si();
        }
    }
    return out;
}

}  // namespace

template <class F>
long long eulerForm(const Algebra<F>& alg, const DimVector& d, const DimVector& e) {
    const Index n = alg.vertexCount();
    if (static_cast<Index>(d.size()) != n || static_cast<Index>(e.size()) != n)
        throw DomainError("dim_mismatch", "dimension vector length differs from vertex count");
    const IntMat inv = unitriangularInverse(cartanMatrix(alg));
    long long acc = 0;
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) acc += d[static_cast<std::size_t>(i)] * inv(i, j) * e[static_cast<std::size_t>(j)];
    return acc;
}

long long defectFromMultiplicities(long long injectiveMult, long long projectiveMult, int dimInjectiveEnd,
                                   int dimProjectiveEnd) {
    if (dimInjectiveEnd == dimProjectiveEnd) return injectiveMult - projectiveMult;
    if (dimInjectiveEnd < dimProjectiveEnd) return 2 * injectiveMult - projectiveMult;
    return injectiveMult - 2 * projectiveMult;
}

template <class F>
std::vector<long long> defectForm(const Algebra<F>& alg) {
    std::vector<long long> w(static_cast<std::size_t>(alg.vertexCount()), 0);
    // simple injective at the source, simple projective at the sink
    w[static_cast<std::size_t>(alg.sourceVertex())] = defectFromMultiplicities(1, 0);
    w[static_cast<std::size_t>(alg.sinkVertex())] = defectFromMultiplicities(0, 1);
    return w;
}

template <class F>
long long defect(const Algebra<F>& alg, const DimVector& d) {
    const auto w = defectForm(alg);
    if (d.size() != w.size()) throw DomainError("dim_mismatch", "dimension vector length differs from vertex count");
    long long acc = 0;
    for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * d[i];
    return acc;
}

#define CANREP_INSTANTIATE(F)                                                                          \
    template class Algebra<F>;                                                                         \
    template AlgebraPtr<F> canonicalAlgebra(const Field<F>&, const std::vector<int>&, const std::vector<F>&); \
    template IntMat cartanMatrix(const Algebra<F>&);                                                   \
    template long long eulerForm(const Algebra<F>&, const DimVector&, const DimVector&);              \
    template std::vector<long long> defectForm(const Algebra<F>&);                                     \
    template long long defect(const Algebra<F>&, const DimVector&);
CANREP_FOR_EACH_SCALAR(CANREP_INSTANTIATE)
#undef CANREP_INSTANTIATE

}  // namespace canrep
