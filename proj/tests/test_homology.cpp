#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <random>

#include <crystal/homology.hpp>

using namespace crystal;

namespace {

SimplicialComplex complex_of(int n, std::vector<uint32_t> faces) {
    return SimplicialComplex::from_faces(n, faces);
}

// faces listed as vertex sets
uint32_t mask(std::initializer_list<int> verts) {
    uint32_t m = 0;
    for (int v : verts) m |= uint32_t{1} << v;
    return m;
}

int reduced_euler(const SimplicialComplex& K) {
    int chi = 0;
    for (uint32_t f : K.faces()) chi += (std::popcount(f) % 2 == 0) ? -1 : 1;
    return chi;  // sum over faces of (-1)^dim, empty face included
}

int homology_euler(const std::vector<int>& dims) {
    int chi = 0;
    for (size_t i = 0; i < dims.size(); ++i) chi += (i % 2 == 0 ? -1 : 1) * dims[i];
    return chi;
}

}  // namespace

TEST_CASE("field specs") {
    REQUIRE(FieldSpec::rationals().str() == "QQ");
    REQUIRE(FieldSpec::prime(2).str() == "GF(2)");
    REQUIRE(FieldSpec::prime(FieldSpec::default_prime).str() == "GF(32003)");
    REQUIRE_THROWS_AS(FieldSpec::prime(1), std::invalid_argument);
    REQUIRE_THROWS_AS(FieldSpec::prime(9), std::invalid_argument);
    REQUIRE_THROWS_AS(FieldSpec::prime(32004), std::invalid_argument);
}

TEST_CASE("exact rank of small matrices") {
    FieldSpec q = FieldSpec::rationals();
    REQUIRE(exact_rank({}, q) == 0);
    REQUIRE(exact_rank({{0, 0}, {0, 0}}, q) == 0);
    REQUIRE(exact_rank({{1, 0}, {0, 1}}, q) == 2);
    REQUIRE(exact_rank({{1, 2}, {2, 4}}, q) == 1);
    REQUIRE(exact_rank({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}, q) == 2);
    REQUIRE_THROWS_AS(exact_rank({{1, 2}, {1}}, q), std::invalid_argument);

    // determinant 2: full rank over the rationals, drops over GF(2)
    std::vector<std::vector<int>> M = {{1, 1}, {1, -1}};
    REQUIRE(exact_rank(M, q) == 2);
    REQUIRE(exact_rank(M, FieldSpec::prime(2)) == 1);
    REQUIRE(exact_rank(M, FieldSpec::prime(3)) == 2);
}

TEST_CASE("rank properties on random sign matrices") {
    std::mt19937 rng(905);
    std::uniform_int_distribution<int> entry(-2, 2);
    FieldSpec q = FieldSpec::rationals();
    FieldSpec p3 = FieldSpec::prime(3);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = 1 + trial % 6, cols = 1 + (trial * 7) % 6;
        std::vector<std::vector<int>> M(rows, std::vector<int>(cols));
        std::vector<std::vector<int>> T(cols, std::vector<int>(rows));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) T[j][i] = M[i][j] = entry(rng);
        int r = exact_rank(M, q);
        REQUIRE(r <= std::min(rows, cols));
        REQUIRE(exact_rank(T, q) == r);
        REQUIRE(exact_rank(M, p3) <= r);
    }
}

TEST_CASE("complex construction and closure") {
    SimplicialComplex K = complex_of(4, {mask({0, 1, 2})});
    REQUIRE(K.faces().size() == 8);  // closure of a triangle: all subsets
    REQUIRE(K.has_face(0));
    REQUIRE(K.has_face(mask({0, 2})));
    REQUIRE_FALSE(K.has_face(mask({3})));
    REQUIRE(K.dim() == 2);
    REQUIRE_FALSE(K.is_void());

    SimplicialComplex v = SimplicialComplex::void_complex(3);
    REQUIRE(v.is_void());
    REQUIRE(v.faces().empty());

    SimplicialComplex empty_only = complex_of(3, {0});
    REQUIRE(empty_only.faces().size() == 1);
    REQUIRE(empty_only.dim() == -1);

    REQUIRE_THROWS_AS(SimplicialComplex::from_faces(33, {0}), resource_error);
    REQUIRE_THROWS_AS(SimplicialComplex::from_faces(10, {mask({0, 1, 2, 3, 4})}, 8), resource_error);
}

TEST_CASE("induced subcomplexes") {
    SimplicialComplex K = complex_of(4, {mask({0, 1}), mask({1, 2}), mask({2, 3})});
    SimplicialComplex sub = induced_subcomplex(K, mask({0, 1, 2}));
    REQUIRE(sub.has_face(mask({0, 1})));
    REQUIRE(sub.has_face(mask({1, 2})));
    REQUIRE_FALSE(sub.has_face(mask({2, 3})));
    REQUIRE(induced_subcomplex(SimplicialComplex::void_complex(4), mask({0, 1})).is_void());
}

TEST_CASE("reduced homology of the standard small complexes") {
    FieldSpec q = FieldSpec::rationals();
    auto dims = [&](const SimplicialComplex& K) { return reduced_homology_dims(K, q); };

    REQUIRE(dims(SimplicialComplex::void_complex(3)).empty());
    REQUIRE(dims(complex_of(3, {0})) == std::vector<int>{1});           // just the empty face
    REQUIRE(dims(complex_of(3, {mask({0})})).empty());                  // a point is acyclic
    REQUIRE(dims(complex_of(3, {mask({0}), mask({1})})) == std::vector<int>{0, 1});
    REQUIRE(dims(complex_of(3, {mask({0, 1}), mask({1, 2}), mask({0, 2})})) ==
            std::vector<int>{0, 0, 1});                                 // hollow triangle
    REQUIRE(dims(complex_of(3, {mask({0, 1, 2})})).empty());            // filled triangle
    REQUIRE(dims(complex_of(4, {mask({0, 1, 2}), mask({0, 1, 3}), mask({0, 2, 3}), mask({1, 2, 3})})) ==
            std::vector<int>{0, 0, 0, 1});                              // hollow tetrahedron
    REQUIRE(dims(complex_of(4, {mask({0, 1}), mask({2, 3})})) == std::vector<int>{0, 1});
    // two hollow triangles sharing nothing: b0 = 1, b1 = 2
    REQUIRE(dims(complex_of(6, {mask({0, 1}), mask({1, 2}), mask({0, 2}), mask({3, 4}), mask({4, 5}),
                                mask({3, 5})})) == std::vector<int>{0, 1, 2});
}

TEST_CASE("homology detects the coefficient field") {
    // 6-vertex triangulated projective plane: acyclic over the rationals,
    // torsion shows up over GF(2)
    std::vector<uint32_t> faces;
    for (auto t : std::vector<std::array<int, 3>>{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                                  {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}})
        faces.push_back(mask({t[0], t[1], t[2]}));
    SimplicialComplex K = SimplicialComplex::from_faces(6, faces);
    REQUIRE(K.faces().size() == 1 + 6 + 15 + 10);
    REQUIRE(reduced_homology_dims(K, FieldSpec::rationals()).empty());
    REQUIRE(reduced_homology_dims(K, FieldSpec::prime(2)) == std::vector<int>{0, 0, 1, 1});
    REQUIRE(reduced_homology_dims(K, FieldSpec::prime(32003)).empty());
}

TEST_CASE("euler characteristic matches homology on random complexes") {
    std::mt19937 rng(77821);
    std::uniform_int_distribution<int> nfaces(1, 12);
    std::uniform_int_distribution<uint32_t> face(0, (1u << 7) - 1);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<uint32_t> gens;
        for (int i = nfaces(rng); i > 0; --i) gens.push_back(face(rng));
        SimplicialComplex K = SimplicialComplex::from_faces(7, gens);
        for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(7)}) {
            std::vector<int> dims = reduced_homology_dims(K, f);
            REQUIRE(homology_euler(dims) == reduced_euler(K));
            for (int d : dims) REQUIRE(d >= 0);
        }
    }
}

TEST_CASE("cone homology vanishes") {
    // cone over a hollow triangle {0,1,2} with apex 3 is acyclic
    SimplicialComplex K =
        complex_of(4, {mask({0, 1, 3}), mask({1, 2, 3}), mask({0, 2, 3}), mask({0, 1}), mask({1, 2}), mask({0, 2})});
    for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(2)})
        REQUIRE(reduced_homology_dims(K, f).empty());
}
