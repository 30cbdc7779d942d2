#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "permres/field.hpp"
#include "permres/linalg.hpp"

namespace permres {

using VertexSet = std::uint64_t;

/// A simplicial complex on vertices 0..nu-1 stored by its facets. The void
/// complex has no facets; {empty face} has the single facet 0.
class SimplicialComplex {
public:
    /// Facets are minimalised (contained sets dropped) and sorted.
    SimplicialComplex(int vertex_count, std::vector<VertexSet> facets);

    static SimplicialComplex void_complex(int vertex_count);
    static SimplicialComplex simplex(int vertex_count);
    static SimplicialComplex empty_face(int vertex_count);

    int vertex_count() const { return vertex_count_; }
    const std::vector<VertexSet>& facets() const { return facets_; }
    bool is_void() const { return facets_.empty(); }
    bool contains(VertexSet face) const;
    /// -1 for {empty face}; unspecified (-2) for the void complex.
    int dimension() const;
    /// All faces sorted by (dimension, bit-mask).
    std::vector<VertexSet> faces() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    int vertex_count_;
    std::vector<VertexSet> facets_;
};

VertexSet full_vertex_set(int vertex_count);

/// Faces of delta contained in sigma.
SimplicialComplex induced_subcomplex(const SimplicialComplex& delta, VertexSet sigma);

/// Cone over a new vertex nu (vertex count grows by one).
SimplicialComplex cone(const SimplicialComplex& delta);

/// counts[0] = f_{-1}, counts[k+1] = f_k.
struct FVector {
    std::vector<std::uint64_t> counts;
    std::uint64_t f(int dim) const {
        auto k = static_cast<std::size_t>(dim + 1);
        return k < counts.size() ? counts[k] : 0;
    }
    friend bool operator==(const FVector&, const FVector&) = default;
};

FVector f_vector(const SimplicialComplex& delta);

/// Reduced cohomology dimensions by degree q >= -1 (zero entries omitted).
struct CohomologyProfile {
    std::map<int, std::size_t> dims;
    std::size_t dim(int q) const {
        auto it = dims.find(q);
        return it == dims.end() ? 0 : it->second;
    }
    long long euler_characteristic() const;
    friend bool operator==(const CohomologyProfile&, const CohomologyProfile&) = default;
};

/// Coboundary delta^q : C^q -> C^{q+1} in the face bases sorted by bit-mask;
/// entry (-1)^(position of the inserted vertex). q = -1 maps the empty face.
RationalMatrix coboundary_matrix(const SimplicialComplex& delta, int q);

/// Reduced cohomology over each configured prime (ranks must agree).
CohomologyProfile reduced_cohomology_dims(const SimplicialComplex& delta, std::span<const PrimeField> primes);
CohomologyProfile reduced_cohomology_dims(const SimplicialComplex& delta);
/// Same computation over Q with fraction-free elimination.
CohomologyProfile reduced_cohomology_dims_rational(const SimplicialComplex& delta);

} // namespace permres
