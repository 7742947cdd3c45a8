#ifndef CTX_LINALG_HPP
#define CTX_LINALG_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctx {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct ZeroVectorError : std::runtime_error {
    ZeroVectorError() : std::runtime_error("zero vector has no ray direction") {}
};
struct DimensionMismatchError : std::runtime_error {
    explicit DimensionMismatchError(const std::string& what) : std::runtime_error(what) {}
};
struct ParallelRaysError : std::runtime_error {
    ParallelRaysError() : std::runtime_error("rays are parallel") {}
};

/**
 * Direction of a ray through the origin, stored as the unique canonical
 * integer representative: coordinates are coprime and the first nonzero
 * coordinate is positive. Two rays are equal iff their canonical forms are.
 */
class RayVector {
public:
    RayVector() = default;

    /// Canonicalizes an integer vector. Throws ZeroVectorError on the zero vector.
    static RayVector canonicalize(std::vector<Int> coords);

    /// Canonicalizes a rational vector by clearing denominators first.
    static RayVector canonicalize(const std::vector<Rat>& coords);

    const std::vector<Int>& coords() const { return coords_; }
    std::size_t dim() const { return coords_.size(); }
    const Int& operator[](std::size_t i) const { return coords_[i]; }

    bool operator==(const RayVector& o) const { return coords_ == o.coords_; }
    bool operator!=(const RayVector& o) const { return coords_ != o.coords_; }
    bool operator<(const RayVector& o) const { return coords_ < o.coords_; }

    std::string str() const;

private:
    std::vector<Int> coords_;  // always canonical
};

/// Exact inner product. Throws DimensionMismatchError.
Int dot(const RayVector& a, const RayVector& b);

/// d=3 only: canonical direction orthogonal to both. Throws ParallelRaysError.
RayVector cross3(const RayVector& a, const RayVector& b);

/**
 * Linear subspace given by an independent spanning set. The basis is kept
 * as canonical ray directions; rank() == basis().size() by construction.
 */
class Subspace {
public:
    /// Builds a subspace from spanning vectors, dropping dependent ones.
    static Subspace span(const std::vector<RayVector>& vectors, std::size_t ambient_dim);

    const std::vector<RayVector>& basis() const { return basis_; }
    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t rank() const { return basis_.size(); }

private:
    std::vector<RayVector> basis_;
    std::size_t ambient_dim_ = 0;
};

/// Rank of the span, via fraction-free Gaussian elimination.
std::size_t rank(const std::vector<RayVector>& vectors);

/// True iff x lies in s, i.e. adjoining x does not raise the rank.
bool in_span(const RayVector& x, const Subspace& s);

/**
 * Basis of the orthogonal complement, deterministic (free coordinates taken
 * in index order, each output vector canonical). Ranks sum to ambient_dim.
 */
Subspace orthocomplement(const Subspace& s);

/**
 * Exact Gram-Schmidt: returns a pairwise-orthogonal canonical basis spanning
 * the same subspace as the (independent) input.
 */
std::vector<RayVector> orthogonalize(const std::vector<RayVector>& basis);

/**
 * Reduced row echelon basis of the subspace, canonicalized per row. Unique
 * for a given subspace, so usable as an identity key.
 */
std::vector<RayVector> reduced_basis(const Subspace& s);

}  // namespace ctx

#endif
