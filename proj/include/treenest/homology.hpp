#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "treenest/simplicial_complex.hpp"

namespace treenest {

using Rational = boost::multiprecision::cpp_rational;

/// Field selector for homology computations.
struct FieldSpec {
    bool rational = true;
    long p = 0;

    static FieldSpec rationals() { return FieldSpec{true, 0}; }
    static FieldSpec prime(long p) {
        if (p < 2)
            throw std::invalid_argument("FieldSpec::prime: p must be a prime >= 2");
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0)
                throw std::invalid_argument("FieldSpec::prime: p is composite");
        return FieldSpec{false, p};
    }
};

namespace detail {

struct RationalOps {
    using Value = Rational;
    Value zero() const { return 0; }
    Value fromInt(long x) const { return x; }
    bool isZero(const Value& v) const { return v == 0; }
    Value neg(const Value& v) const { return -v; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value div(const Value& a, const Value& b) const { return a / b; }
    Value addMul(const Value& a, const Value& c, const Value& b) const { return a + c * b; }
};

struct PrimeOps {
    long p;
    using Value = long;
    Value zero() const { return 0; }
    Value fromInt(long x) const { return ((x % p) + p) % p; }
    bool isZero(const Value& v) const { return v == 0; }
    Value neg(const Value& v) const { return v == 0 ? 0 : p - v; }
    Value mul(const Value& a, const Value& b) const { return (a * b) % p; }
    Value inv(Value a) const {
        // Fermat
        Value r = 1, e = p - 2, base = a % p;
        while (e) {
            if (e & 1)
                r = (r * base) % p;
            base = (base * base) % p;
            e >>= 1;
        }
        return r;
    }
    Value div(const Value& a, const Value& b) const { return mul(a, inv(b)); }
    Value addMul(const Value& a, const Value& c, const Value& b) const {
        return (a + c * b % p) % p;
    }
};

/// Sparse column: sorted (row, value) pairs.
template <typename Ops>
using SparseCol = std::vector<std::pair<int, typename Ops::Value>>;

template <typename Ops>
void axpyCol(const Ops& ops, SparseCol<Ops>& target, const typename Ops::Value& coeff,
             const SparseCol<Ops>& src) {
    SparseCol<Ops> out;
    out.reserve(target.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < src.size()) {
        if (j == src.size() || (i < target.size() && target[i].first < src[j].first)) {
            out.push_back(target[i++]);
        } else if (i == target.size() || src[j].first < target[i].first) {
            auto v = ops.mul(coeff, src[j].second);
            if (!ops.isZero(v))
                out.emplace_back(src[j].first, v);
            ++j;
        } else {
            auto v = ops.addMul(target[i].second, coeff, src[j].second);
            if (!ops.isZero(v))
                out.emplace_back(target[i].first, v);
            ++i;
            ++j;
        }
    }
    target = std::move(out);
}

/**
 * Column reduction over a field: returns the rank and, when `kernel` is
 * non-null, a basis of the kernel expressed over the original columns.
 */
template <typename Ops>
long columnReduceRank(const Ops& ops, std::vector<SparseCol<Ops>> cols,
                      std::vector<std::vector<std::pair<int, typename Ops::Value>>>* kernel) {
    std::map<int, int> pivotOwner;  // pivot row -> reduced column index
    long rank = 0;
    std::vector<SparseCol<Ops>> combo;
    if (kernel) {
        combo.resize(cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            combo[j] = {{static_cast<int>(j), ops.fromInt(1)}};
    }
    for (std::size_t j = 0; j < cols.size(); ++j) {
        auto& col = cols[j];
        while (!col.empty()) {
            int pivotRow = col.back().first;
            auto it = pivotOwner.find(pivotRow);
            if (it == pivotOwner.end())
                break;
            const auto& other = cols[it->second];
            auto coeff = ops.neg(ops.div(col.back().second, other.back().second));
            axpyCol(ops, col, coeff, other);
            if (kernel)
                axpyCol(ops, combo[j], coeff, combo[it->second]);
        }
        if (col.empty()) {
            if (kernel)
                kernel->push_back(combo[j]);
        } else {
            pivotOwner[col.back().first] = static_cast<int>(j);
            ++rank;
        }
    }
    return rank;
}

}  // namespace detail

/**
 * Boundary matrices of a complex with the ascending-vertex-order
 * orientation.  Faces per dimension are ordered lexicographically, so
 * matrix layouts are reproducible.
 */
struct ChainComplexMatrices {
    std::vector<std::vector<Face>> facesByDim;           // dim -> sorted faces
    std::vector<std::vector<std::vector<std::pair<int, int>>>> boundary;
    // boundary[d]: columns over d-faces, entries (row in (d-1)-faces, sign)

    explicit ChainComplexMatrices(const SimplicialComplex& K) {
        const int dim = K.dimension();
        facesByDim.resize(std::max(dim + 1, 0));
        for (int d = 0; d <= dim; ++d)
            facesByDim[d] = K.faces(d);
        boundary.resize(std::max(dim + 1, 0));
        for (int d = 1; d <= dim; ++d) {
            const auto& lower = facesByDim[d - 1];
            auto rowOf = [&](const Face& f) {
                auto it = std::lower_bound(lower.begin(), lower.end(), f);
                return static_cast<int>(it - lower.begin());
            };
            for (const auto& f : facesByDim[d]) {
                std::vector<std::pair<int, int>> col;
                int sign = 1;
                for (std::size_t i = 0; i < f.size(); ++i) {
                    Face sub = f;
                    sub.erase(sub.begin() + static_cast<long>(i));
                    col.emplace_back(rowOf(sub), sign);
                    sign = -sign;
                }
                std::sort(col.begin(), col.end());
                boundary[d].push_back(std::move(col));
            }
        }
    }

    int numFaces(int d) const {
        if (d < 0 || d >= static_cast<int>(facesByDim.size()))
            return 0;
        return static_cast<int>(facesByDim[d].size());
    }
};

/// Boundary matrix as a dense integer matrix (rows: (d-1)-faces, columns:
/// d-faces); d = 0 gives the 1-row augmentation map.
inline std::vector<std::vector<int>> boundary_matrix(const SimplicialComplex& K, int d) {
    if (d < 0 || d > K.dimension())
        throw std::invalid_argument("boundary_matrix: dimension out of range");
    ChainComplexMatrices cc(K);
    if (d == 0)
        return {std::vector<int>(cc.numFaces(0), 1)};
    std::vector<std::vector<int>> M(cc.numFaces(d - 1),
                                    std::vector<int>(cc.numFaces(d), 0));
    for (int j = 0; j < cc.numFaces(d); ++j)
        for (const auto& [row, sign] : cc.boundary[d][j])
            M[row][j] = sign;
    return M;
}

namespace detail {

template <typename Ops>
long boundaryRank(const Ops& ops, const ChainComplexMatrices& cc, int d) {
    if (d <= 0 || d >= static_cast<int>(cc.boundary.size()))
        return 0;
    std::vector<SparseCol<Ops>> cols;
    for (const auto& c : cc.boundary[d]) {
        SparseCol<Ops> sc;
        for (const auto& [row, sign] : c)
            sc.emplace_back(row, ops.fromInt(sign));
        cols.push_back(std::move(sc));
    }
    return columnReduceRank(ops, std::move(cols), nullptr);
}

inline long boundaryRankField(const ChainComplexMatrices& cc, int d, const FieldSpec& F) {
    if (F.rational)
        return boundaryRank(RationalOps{}, cc, d);
    return boundaryRank(PrimeOps{F.p}, cc, d);
}

}  // namespace detail

/**
 * Reduced Betti numbers, indices 0..dim.  Exact: fraction elimination
 * over the rationals, modular elimination over a prime field.
 */
inline std::vector<long> reduced_betti(const SimplicialComplex& K,
                                       const FieldSpec& F = FieldSpec::rationals()) {
    const int dim = K.dimension();
    if (dim < 0)
        return {};
    ChainComplexMatrices cc(K);
    std::vector<long> rank(dim + 2, 0);
    for (int d = 1; d <= dim; ++d)
        rank[d] = detail::boundaryRankField(cc, d, F);
    long rank0 = cc.numFaces(0) > 0 ? 1 : 0;  // augmentation
    std::vector<long> betti(dim + 1, 0);
    for (int d = 0; d <= dim; ++d) {
        long lower = d == 0 ? rank0 : rank[d];
        betti[d] = cc.numFaces(d) - lower - rank[d + 1];
    }
    return betti;
}

/**
 * Basis of top-dimensional cycles over the rationals: kernel of the top
 * boundary map, columns expressed over the lexicographically ordered top
 * faces.
 */
inline std::vector<std::vector<std::pair<int, Rational>>> top_cycle_basis(
    const SimplicialComplex& K) {
    if (!K.pure())
        throw std::invalid_argument("top_cycle_basis: complex must be pure");
    const int dim = K.dimension();
    if (dim < 0)
        return {};
    ChainComplexMatrices cc(K);
    detail::RationalOps ops;
    std::vector<detail::SparseCol<detail::RationalOps>> cols;
    if (dim == 0) {
        // kernel of the augmentation map
        for (int j = 0; j < cc.numFaces(0); ++j)
            cols.push_back({{0, Rational(1)}});
    } else {
        for (const auto& c : cc.boundary[dim]) {
            detail::SparseCol<detail::RationalOps> sc;
            for (const auto& [row, sign] : c)
                sc.emplace_back(row, Rational(sign));
            cols.push_back(std::move(sc));
        }
    }
    std::vector<std::vector<std::pair<int, Rational>>> kernel;
    detail::columnReduceRank(ops, std::move(cols), &kernel);
    return kernel;
}

}  // namespace treenest
