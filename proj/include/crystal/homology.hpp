#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "crystal/lattice.hpp"

namespace crystal {

/// Coefficient field for homology ranks: exact rationals, or a prime field
/// for faster arithmetic and characteristic probing.
struct FieldSpec {
    enum class Kind { rationals, prime };
    Kind kind = Kind::rationals;
    uint32_t p = 0;

    static FieldSpec rationals() { return FieldSpec{}; }

    static FieldSpec prime(uint32_t p) {
        if (p < 2) throw std::invalid_argument("field: modulus must be >= 2");
        for (uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::invalid_argument("field: modulus " + std::to_string(p) + " is not prime");
        return FieldSpec{Kind::prime, p};
    }

    static constexpr uint32_t default_prime = 32003;

    std::string str() const { return kind == Kind::rationals ? "QQ" : "GF(" + std::to_string(p) + ")"; }
    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
};

namespace linalg {

/// Sparse column over the integers; entries sorted by row, no zeros stored.
/// Rank comes from column reduction on the lowest (largest-index) entry,
/// cross-multiplying to stay in exact integer arithmetic and dividing each
/// column by its content so the numbers stay small.
using BigInt = boost::multiprecision::cpp_int;

struct QOps {
    using Scalar = BigInt;
    static Scalar from_int(int v) { return Scalar(v); }
    static void post_combine(std::vector<std::pair<int, Scalar>>& col) {
        BigInt g = 0;
        for (const auto& [r, v] : col) {
            g = boost::multiprecision::gcd(g, v);
            if (g == 1) return;
        }
        if (g > 1)
            for (auto& [r, v] : col) v /= g;
    }
    static Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
    static Scalar submul(const Scalar& x, const Scalar& a, const Scalar& y, const Scalar& b) {
        return x * a - y * b;
    }
};

struct PrimeOps {
    using Scalar = int64_t;
    uint64_t p;
    Scalar from_int(int v) const {
        Scalar r = v % static_cast<int64_t>(p);
        return r < 0 ? r + static_cast<int64_t>(p) : r;
    }
    static void post_combine(std::vector<std::pair<int, Scalar>>&) {}
    Scalar mul(const Scalar& a, const Scalar& b) const {
        return static_cast<int64_t>(static_cast<uint64_t>(a) * static_cast<uint64_t>(b) % p);
    }
    Scalar submul(const Scalar& x, const Scalar& a, const Scalar& y, const Scalar& b) const {
        uint64_t pos = static_cast<uint64_t>(x) * static_cast<uint64_t>(a) % p;
        uint64_t neg = static_cast<uint64_t>(y) * static_cast<uint64_t>(b) % p;
        return static_cast<int64_t>((pos + p - neg) % p);
    }
};

template <class Ops>
int sparse_rank_impl(std::vector<std::vector<std::pair<int, typename Ops::Scalar>>> cols, const Ops& ops) {
    using Scalar = typename Ops::Scalar;
    std::unordered_map<int, int> pivot_col_for_row;
    int rank = 0;
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
        auto& col = cols[j];
        while (!col.empty()) {
            int low = col.back().first;
            auto it = pivot_col_for_row.find(low);
            if (it == pivot_col_for_row.end()) {
                pivot_col_for_row.emplace(low, j);
                ++rank;
                break;
            }
            const auto& piv = cols[it->second];
            Scalar a = piv.back().second, b = col.back().second;
            // col := a*col - b*piv, which zeroes row `low`.
            std::vector<std::pair<int, Scalar>> merged;
            merged.reserve(col.size() + piv.size());
            size_t x = 0, y = 0;
            while (x < col.size() || y < piv.size()) {
                if (y == piv.size() || (x < col.size() && col[x].first < piv[y].first)) {
                    merged.emplace_back(col[x].first, ops.mul(col[x].second, a));
                    ++x;
                } else if (x == col.size() || piv[y].first < col[x].first) {
                    Scalar v = ops.submul(Scalar{}, Scalar{}, piv[y].second, b);
                    if (v != Scalar{}) merged.emplace_back(piv[y].first, v);
                    ++y;
                } else {
                    Scalar v = ops.submul(col[x].second, a, piv[y].second, b);
                    if (v != Scalar{}) merged.emplace_back(col[x].first, v);
                    ++x;
                    ++y;
                }
            }
            col = std::move(merged);
            ops.post_combine(col);
        }
    }
    return rank;
}

using SparseIntCols = std::vector<std::vector<std::pair<int, int>>>;

inline int sparse_rank(const SparseIntCols& cols, const FieldSpec& field) {
    if (field.kind == FieldSpec::Kind::rationals) {
        std::vector<std::vector<std::pair<int, BigInt>>> c(cols.size());
        for (size_t j = 0; j < cols.size(); ++j)
            for (const auto& [r, v] : cols[j])
                if (v != 0) c[j].emplace_back(r, BigInt(v));
        return sparse_rank_impl(std::move(c), QOps{});
    }
    PrimeOps ops{field.p};
    std::vector<std::vector<std::pair<int, int64_t>>> c(cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
        for (const auto& [r, v] : cols[j]) {
            int64_t w = ops.from_int(v);
            if (w != 0) c[j].emplace_back(r, w);
        }
    return sparse_rank_impl(std::move(c), ops);
}

}  // namespace linalg

/// Rank of an integer matrix (rows of equal length) over the chosen field;
/// exact fraction-free elimination over the rationals, modular elimination
/// over a prime field.
inline int exact_rank(const std::vector<std::vector<int>>& M, const FieldSpec& field) {
    linalg::SparseIntCols cols;
    if (!M.empty()) {
        size_t w = M[0].size();
        for (const auto& row : M)
            if (row.size() != w) throw std::invalid_argument("exact_rank: ragged matrix");
        cols.resize(w);
        for (size_t i = 0; i < M.size(); ++i)
            for (size_t j = 0; j < w; ++j)
                if (M[i][j] != 0) cols[j].emplace_back(static_cast<int>(i), M[i][j]);
    }
    return linalg::sparse_rank(cols, field);
}

/// Finite simplicial complex on vertices 0..n-1, faces as bitmasks.  The
/// empty face (mask 0) belongs to every non-void complex; the void complex
/// has no faces at all and is distinct from {emptyset}.
class SimplicialComplex {
public:
    static SimplicialComplex void_complex(int num_vertices) {
        SimplicialComplex K;
        K.nverts_ = num_vertices;
        return K;
    }

    /// Builds the downward closure of the given faces.  An empty face list
    /// yields the void complex; to get {emptyset} pass the single mask 0.
    static SimplicialComplex from_faces(int num_vertices, const std::vector<uint32_t>& faces,
                                        size_t max_faces = size_t{1} << 20) {
        if (num_vertices > 32) throw resource_error("simplicial complex limited to 32 vertices");
        SimplicialComplex K;
        K.nverts_ = num_vertices;
        std::vector<uint32_t> all(faces);
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        // closure by repeated single-vertex deletion
        std::vector<uint32_t> work(all);
        std::unordered_map<uint32_t, char> have;
        for (uint32_t f : all) have.emplace(f, 1);
        while (!work.empty()) {
            uint32_t f = work.back();
            work.pop_back();
            for (int v = 0; v < num_vertices; ++v) {
                if (!(f & (uint32_t{1} << v))) continue;
                uint32_t sub = f & ~(uint32_t{1} << v);
                if (have.emplace(sub, 1).second) {
                    work.push_back(sub);
                    if (have.size() > max_faces) throw resource_error("simplicial complex face cap exceeded");
                }
            }
        }
        K.faces_.reserve(have.size());
        for (const auto& [f, one] : have) K.faces_.push_back(f);
        std::sort(K.faces_.begin(), K.faces_.end());
        return K;
    }

    bool is_void() const { return faces_.empty(); }
    int num_vertices() const { return nverts_; }
    const std::vector<uint32_t>& faces() const { return faces_; }

    bool has_face(uint32_t f) const { return std::binary_search(faces_.begin(), faces_.end(), f); }

    /// Largest face dimension; -1 for {emptyset}, meaningless for void.
    int dim() const {
        int d = -1;
        for (uint32_t f : faces_) d = std::max(d, std::popcount(f) - 1);
        return d;
    }

private:
    int nverts_ = 0;
    std::vector<uint32_t> faces_;  // sorted
};

/// Faces of K contained in the vertex subset sigma.
inline SimplicialComplex induced_subcomplex(const SimplicialComplex& K, uint32_t sigma) {
    if (K.is_void()) return SimplicialComplex::void_complex(K.num_vertices());
    std::vector<uint32_t> faces;
    for (uint32_t f : K.faces())
        if ((f & ~sigma) == 0) faces.push_back(f);
    return SimplicialComplex::from_faces(K.num_vertices(), faces);
}

namespace detail {

/// Reduced homology dims from a face list that is already downward closed
/// (including mask 0).  Index i of the result is degree i-1.
inline std::vector<int> homology_from_masks(const std::vector<uint32_t>& faces, const FieldSpec& field) {
    if (faces.empty()) return {};
    int maxpop = 0;
    for (uint32_t f : faces) maxpop = std::max(maxpop, std::popcount(f));
    // levels[d+1]: d-dimensional faces, sorted; level 0 is the empty face
    std::vector<std::vector<uint32_t>> levels(maxpop + 1);
    for (uint32_t f : faces) levels[std::popcount(f)].push_back(f);
    for (auto& lv : levels) std::sort(lv.begin(), lv.end());

    // ranks[d+1] = rank of boundary from level d+1 down to level d
    std::vector<int> ranks(maxpop + 2, 0);
    for (int lv = 1; lv <= maxpop; ++lv) {
        linalg::SparseIntCols cols(levels[lv].size());
        for (size_t j = 0; j < levels[lv].size(); ++j) {
            uint32_t f = levels[lv][j];
            int pos = 0;
            std::vector<std::pair<int, int>> entries;
            for (uint32_t bits = f; bits != 0; bits &= bits - 1) {
                uint32_t sub = f & ~(bits & -bits);
                auto it = std::lower_bound(levels[lv - 1].begin(), levels[lv - 1].end(), sub);
                entries.emplace_back(static_cast<int>(it - levels[lv - 1].begin()), (pos % 2 == 0) ? 1 : -1);
                ++pos;
            }
            std::sort(entries.begin(), entries.end());
            cols[j] = std::move(entries);
        }
        ranks[lv] = linalg::sparse_rank(cols, field);
    }

    std::vector<int> dims(maxpop + 1, 0);
    for (int lv = 0; lv <= maxpop; ++lv)
        dims[lv] = static_cast<int>(levels[lv].size()) - ranks[lv] - ranks[lv + 1];
    while (!dims.empty() && dims.back() == 0) dims.pop_back();
    return dims;
}

}  // namespace detail

/// Reduced homology dimensions over the field, indexed from degree -1:
/// result[i] = dim of reduced H_(i-1).  Void complex: empty vector (all 0);
/// {emptyset}: dim 1 in degree -1.
inline std::vector<int> reduced_homology_dims(const SimplicialComplex& K, const FieldSpec& field) {
    if (K.faces().size() > (size_t{1} << 20)) throw resource_error("reduced homology face cap exceeded");
    return detail::homology_from_masks(K.faces(), field);
}

}  // namespace crystal
