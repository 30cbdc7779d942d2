#include "permres/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "permres/wedge.hpp"

namespace permres {

namespace {

bool face_less(VertexSet a, VertexSet b) {
    int da = std::popcount(a), db = std::popcount(b);
    return da != db ? da < db : a < b;
}

std::vector<VertexSet> faces_of_dimension(const std::vector<VertexSet>& faces, int q) {
    std::vector<VertexSet> out;
    for (auto f : faces)
        if (std::popcount(f) == q + 1) out.push_back(f);
    return out;
}

template <class RankFn>
CohomologyProfile cohomology_with(const SimplicialComplex& delta, RankFn&& rank_of) {
    CohomologyProfile profile;
    if (delta.is_void()) return profile;
    auto faces = delta.faces();
    int top = delta.dimension();
    std::size_t previous_rank = 0; // rank of delta^{q-1}
    for (int q = -1; q <= top; ++q) {
        std::size_t cochains = faces_of_dimension(faces, q).size();
        std::size_t r = q < top ? rank_of(coboundary_matrix(delta, q)) : 0;
        std::size_t h = cochains - r - previous_rank;
        if (h) profile.dims[q] = h;
        previous_rank = r;
    }
    return profile;
}

} // namespace

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<VertexSet> facets) : vertex_count_(vertex_count) {
    if (vertex_count < 0 || vertex_count > 64) throw DomainError("vertex count must lie in 0..64");
    VertexSet all = full_vertex_set(vertex_count);
    for (auto f : facets)
        if (f & ~all) throw DomainError("facet uses a vertex outside the vertex set");
    std::sort(facets.begin(), facets.end(), [](VertexSet a, VertexSet b) { return face_less(b, a); });
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (auto f : facets) {
        bool contained = std::any_of(facets_.begin(), facets_.end(), [&](VertexSet g) { return (f & ~g) == 0; });
        if (!contained) facets_.push_back(f);
    }
    std::sort(facets_.begin(), facets_.end(), face_less);
}

SimplicialComplex SimplicialComplex::void_complex(int vertex_count) { return {vertex_count, {}}; }

SimplicialComplex SimplicialComplex::simplex(int vertex_count) {
    return {vertex_count, {full_vertex_set(vertex_count)}};
}

SimplicialComplex SimplicialComplex::empty_face(int vertex_count) { return {vertex_count, {0}}; }

bool SimplicialComplex::contains(VertexSet face) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return (face & ~f) == 0; });
}

int SimplicialComplex::dimension() const {
    if (facets_.empty()) return -2;
    int d = -1;
    for (auto f : facets_) d = std::max(d, std::popcount(f) - 1);
    return d;
}

std::vector<VertexSet> SimplicialComplex::faces() const {
    std::vector<VertexSet> out;
    for (auto f : facets_) {
        // All submasks of f, including f and 0.
        for (VertexSet s = f;; s = (s - 1) & f) {
            out.push_back(s);
            if (s == 0) break;
        }
    }
    std::sort(out.begin(), out.end(), face_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

VertexSet full_vertex_set(int vertex_count) {
    return vertex_count >= 64 ? ~VertexSet{0} : (VertexSet{1} << vertex_count) - 1;
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& delta, VertexSet sigma) {
    std::vector<VertexSet> facets;
    for (auto f : delta.facets()) facets.push_back(f & sigma);
    return {delta.vertex_count(), std::move(facets)};
}

SimplicialComplex cone(const SimplicialComplex& delta) {
    if (delta.vertex_count() >= 64) throw DomainError("cone needs a free vertex");
    VertexSet apex = VertexSet{1} << delta.vertex_count();
    std::vector<VertexSet> facets;
    for (auto f : delta.facets()) facets.push_back(f | apex);
    return {delta.vertex_count() + 1, std::move(facets)};
}

FVector f_vector(const SimplicialComplex& delta) {
    FVector fv;
    if (delta.is_void()) return fv;
    fv.counts.assign(static_cast<std::size_t>(delta.dimension() + 2), 0);
    for (auto f : delta.faces()) ++fv.counts[static_cast<std::size_t>(std::popcount(f))];
    return fv;
}

long long CohomologyProfile::euler_characteristic() const {
    long long chi = 0;
    for (const auto& [q, d] : dims) chi += (q % 2 == 0 ? 1 : -1) * static_cast<long long>(d);
    return chi;
}

RationalMatrix coboundary_matrix(const SimplicialComplex& delta, int q) {
    auto faces = delta.faces();
    auto source = faces_of_dimension(faces, q);
    auto target = faces_of_dimension(faces, q + 1);
    std::unordered_map<VertexSet, std::size_t> column;
    for (std::size_t k = 0; k < target.size(); ++k) column.emplace(target[k], k);
    RationalMatrixBuilder b(source.size(), target.size());
    for (std::size_t r = 0; r < source.size(); ++r) {
        for (int v = 0; v < delta.vertex_count(); ++v) {
            VertexSet bit = VertexSet{1} << v;
            if (source[r] & bit) continue;
            auto it = column.find(source[r] | bit);
            if (it == column.end()) continue;
            b.add(r, it->second, position_sign(WedgeMonomial(source[r]), v));
        }
    }
    return std::move(b).build();
}

CohomologyProfile reduced_cohomology_dims(const SimplicialComplex& delta, std::span<const PrimeField> primes) {
    return cohomology_with(delta, [&](const RationalMatrix& m) { return verified_rank(m, primes); });
}

CohomologyProfile reduced_cohomology_dims(const SimplicialComplex& delta) {
    auto primes = default_primes();
    return reduced_cohomology_dims(delta, primes);
}

CohomologyProfile reduced_cohomology_dims_rational(const SimplicialComplex& delta) {
    return cohomology_with(delta, [](const RationalMatrix& m) { return rank_bareiss(m); });
}

} // namespace permres
