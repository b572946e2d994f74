#pragma once

#include "canrep/errors.hpp"
#include "canrep/field.hpp"
#include "canrep/matrix.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace canrep {

using DimVector = std::vector<Index>;
using IntMat = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

struct Arrow {
    std::string label;
    int source = 0;
    int target = 0;
};

/// A path in the quiver, arrows listed in the order they are traversed.
struct Path {
    int source = 0;
    int target = 0;
    std::vector<int> arrows;
};

template <class F>
struct Relation {
    std::vector<std::pair<F, Path>> terms;
};

/// The space of paths a -> b modulo the relation ideal.
template <class F>
struct PathSpace {
    std::vector<std::vector<int>> monomials;
    std::map<std::vector<int>, Index> lookup;
    /// Monomials (indices into `monomials`) that form a basis of the quotient.
    std::vector<Index> standard;
    /// Coordinates of every monomial in the standard basis, one column each.
    Mat<F> reduction;

    Index dim() const { return static_cast<Index>(standard.size()); }
};

template <class F>
class Algebra;

template <class F>
using AlgebraPtr = std::shared_ptr<const Algebra<F>>;

/// Canonical algebra in its quiver-with-relations presentation.
///
/// Vertices are ordered 0, (1,1), ..., (1,p_1-1), (2,1), ..., c. Every arm is a
/// path 0 -> c; weights shorter than two arms are padded with arms of weight 1
/// (a single arrow 0 -> c). The opposite algebra shares ownership with this one
/// and is reached through op().
template <class F>
class Algebra {
public:
    const Field<F>& field() const { return field_; }

    int vertexCount() const { return static_cast<int>(vertices_.size()); }
    const std::string& vertexLabel(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
    int vertexIndex(const std::string& label) const;
    const std::vector<std::string>& vertexLabels() const { return vertices_; }

    int arrowCount() const { return static_cast<int>(arrows_.size()); }
    const Arrow& arrow(int a) const { return arrows_.at(static_cast<std::size_t>(a)); }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    int arrowIndex(const std::string& label) const;

    const std::vector<Relation<F>>& relations() const { return relations_; }

    const PathSpace<F>& paths(int a, int b) const { return spaces_[static_cast<std::size_t>(a * vertexCount() + b)]; }
    Index pathDim(int a, int b) const { return paths(a, b).dim(); }
    /// Standard-basis coordinates of a monomial a -> b.
    Vec<F> reduce(int a, int b, const std::vector<int>& monomial) const;
    /// Matrix of q |-> q o r from paths(b,x) to paths(a,x), where r lies in paths(a,b)
    /// and is traversed first.
    Mat<F> precomposition(int a, int b, int x, const Vec<F>& r) const;

    /// The opposite algebra: same labels, arrows reversed.
    AlgebraPtr<F> op() const { return AlgebraPtr<F>(owner_.lock(), opposite_); }
    bool isOpposite() const { return isOpposite_; }

    // Canonical-algebra data (always stated for the original orientation).
    const std::vector<int>& weights() const { return weights_; }
    /// Arm lengths after padding to at least two arms.
    const std::vector<int>& arms() const { return arms_; }
    int armCount() const { return static_cast<int>(arms_.size()); }
    const std::vector<F>& params() const { return params_; }
    /// lambda_i for arm i (1-based); arm 1 is at infinity and arm 2 at 0 by convention.
    const F& armParam(int arm) const { return params_.at(static_cast<std::size_t>(arm - 3)); }
    /// Source and sink of this quiver (swapped for the opposite algebra).
    int sourceVertex() const { return isOpposite_ ? sink_ : source_; }
    int sinkVertex() const { return isOpposite_ ? source_ : sink_; }
    /// Vertex (i,j) for 1 <= j <= p_i - 1, and 0 / c for j = 0 / p_i.
    int armVertex(int arm, int j) const;
    /// Arrow from armVertex(arm, j-1) to armVertex(arm, j), 1 <= j <= p_i.
    int armArrow(int arm, int j) const;
    bool isKronecker() const { return weights_.empty(); }

    template <class G>
    friend AlgebraPtr<G> canonicalAlgebra(const Field<G>&, const std::vector<int>&, const std::vector<G>&);

private:
    Algebra(Field<F> k) : field_(std::move(k)) {}
    void buildPathSpaces();
    void buildOpposite(const Algebra& base);

    struct Pair;

    Field<F> field_;
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<Relation<F>> relations_;
    std::vector<PathSpace<F>> spaces_;
    std::weak_ptr<const void> owner_;
    const Algebra* opposite_ = nullptr;
    bool isOpposite_ = false;

    std::vector<int> weights_;
    std::vector<int> arms_;
    std::vector<F> params_;
    std::vector<std::vector<int>> armVertices_;
    std::vector<std::vector<int>> armArrows_;
    int source_ = 0;
    int sink_ = 0;
};

/// The canonical algebra of the given weights and parameters lambda_3, ..., lambda_t.
template <class F>
AlgebraPtr<F> canonicalAlgebra(const Field<F>& k, const std::vector<int>& weights, const std::vector<F>& params);

/// Entry (i,j) is the dimension of the path space i -> j, so row i is dim P(i).
template <class F>
IntMat cartanMatrix(const Algebra<F>& alg);

/// The Euler form <d,e> = d^T C^{-1} e.
template <class F>
long long eulerForm(const Algebra<F>& alg, const DimVector& d, const DimVector& e);

/// Defect from Jordan-Holder multiplicities of the simple injective (S') and the
/// simple projective (S), given the k-dimensions of their endomorphism rings.
long long defectFromMultiplicities(long long injectiveMult, long long projectiveMult, int dimInjectiveEnd = 1,
                                   int dimProjectiveEnd = 1);

/// Coefficients w with defect(d) = sum_v w_v d_v.
template <class F>
std::vector<long long> defectForm(const Algebra<F>& alg);

template <class F>
long long defect(const Algebra<F>& alg, const DimVector& d);

}  // namespace canrep
