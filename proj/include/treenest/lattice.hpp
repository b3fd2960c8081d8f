#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "treenest/set_partition.hpp"

namespace treenest {

/**
 * A fully materialized finite lattice (or, when join/meet tables are
 * absent, a bounded-below finite poset).  Elements are indexed; the order
 * relation, join/meet tables, ranks and atoms are precomputed once.
 *
 * Lattices built from set partitions carry the partition payloads in
 * `partitions`; generic posets carry labels only.  All values are
 * immutable after construction.
 */
class FiniteLattice {
public:
    std::vector<std::string> labels;
    std::vector<SetPartition> partitions;  // empty for non-partition posets
    std::vector<std::vector<char>> leqTable;
    std::vector<std::vector<int>> joinTable, meetTable;  // present iff hasTables
    bool hasTables = false;
    int bottom = -1, top = -1;
    std::vector<int> rank;  // height: longest chain from bottom
    std::vector<int> atoms;

    int size() const { return static_cast<int>(labels.size()); }
    bool leq(int i, int j) const { return leqTable[i][j] != 0; }
    bool lt(int i, int j) const { return i != j && leq(i, j); }

    int join(int i, int j) const {
        requireTables();
        return joinTable[i][j];
    }
    int meet(int i, int j) const {
        requireTables();
        return meetTable[i][j];
    }
    void requireTables() const {
        if (!hasTables)
            throw std::domain_error("operation requires a lattice, got a poset-only structure");
    }

    int indexOf(const SetPartition& p) const {
        auto it = partitionIndex_.find(p);
        if (it == partitionIndex_.end())
            throw std::invalid_argument("partition is not an element of this lattice");
        return it->second;
    }
    std::optional<int> tryIndexOf(const SetPartition& p) const {
        auto it = partitionIndex_.find(p);
        if (it == partitionIndex_.end())
            return std::nullopt;
        return it->second;
    }

    /// Elements z with lo <= z <= hi, ascending index order.
    std::vector<int> interval(int lo, int hi) const {
        std::vector<int> out;
        for (int z = 0; z < size(); ++z)
            if (leq(lo, z) && leq(z, hi))
                out.push_back(z);
        return out;
    }

    /// Number of elements below-or-equal x.
    int lowerCount(int x) const { return lowerCount_[x]; }

    /// Upper covers of x.
    const std::vector<int>& coversAbove(int x) const { return coversAbove_[x]; }

    /// Proper part: everything except bottom and top.
    std::vector<int> properPart() const {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (i != bottom && i != top)
                out.push_back(i);
        return out;
    }

    /// Build from an explicit reflexive-transitive order relation.  Join
    /// and meet tables are derived when unique bounds exist everywhere;
    /// otherwise the result is poset-only.
    static FiniteLattice fromRelation(std::vector<std::string> labels,
                                      std::vector<std::vector<char>> leq,
                                      std::vector<SetPartition> partitions = {}) {
        FiniteLattice L;
        L.labels = std::move(labels);
        L.partitions = std::move(partitions);
        L.leqTable = std::move(leq);
        L.finalize();
        L.deriveTablesGenerically();
        return L;
    }

    /// Same, but with join/meet tables supplied by the caller.
    static FiniteLattice fromRelationWithTables(std::vector<std::string> labels,
                                                std::vector<std::vector<char>> leq,
                                                std::vector<std::vector<int>> join,
                                                std::vector<std::vector<int>> meet,
                                                std::vector<SetPartition> partitions = {}) {
        FiniteLattice L;
        L.labels = std::move(labels);
        L.partitions = std::move(partitions);
        L.leqTable = std::move(leq);
        L.joinTable = std::move(join);
        L.meetTable = std::move(meet);
        L.hasTables = true;
        L.finalize();
        return L;
    }

private:
    void finalize() {
        const int m = size();
        if (m == 0)
            throw std::invalid_argument("FiniteLattice: no elements");
        for (std::size_t i = 0; i < partitions.size(); ++i)
            partitionIndex_[partitions[i]] = static_cast<int>(i);
        // bottom and top (top may be absent for posets; bottom must exist
        // for rank computation -- callers guarantee it for every builder)
        bottom = top = -1;
        for (int i = 0; i < m; ++i) {
            bool isBot = true, isTop = true;
            for (int j = 0; j < m; ++j) {
                if (!leq(i, j))
                    isBot = false;  // bottom is below everything
                if (!leq(j, i))
                    isTop = false;  // top is above everything
            }
            if (isBot)
                bottom = i;
            if (isTop)
                top = i;
        }
        if (bottom < 0)
            throw std::invalid_argument("FiniteLattice: no minimum element");
        // rank = height, via longest chain DP over a linear extension
        std::vector<int> order(m);
        std::iota(order.begin(), order.end(), 0);
        std::vector<int> below(m, 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (lt(j, i))
                    ++below[i];
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return below[a] < below[b]; });
        rank.assign(m, 0);
        for (int a : order)
            for (int b = 0; b < m; ++b)
                if (lt(a, b))
                    rank[b] = std::max(rank[b], rank[a] + 1);
        atoms.clear();
        coversAbove_.assign(m, {});
        std::vector<std::vector<int>> up(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (lt(i, j))
                    up[i].push_back(j);
        for (int i = 0; i < m; ++i)
            for (int j : up[i]) {
                bool cover = true;
                for (int z : up[i]) {
                    if (lt(z, j)) {
                        cover = false;
                        break;
                    }
                }
                if (cover)
                    coversAbove_[i].push_back(j);
            }
        for (int a : coversAbove_[bottom])
            atoms.push_back(a);
        std::sort(atoms.begin(), atoms.end());
        lowerCount_.assign(m, 0);
        for (int x = 0; x < m; ++x)
            for (int j = 0; j < m; ++j)
                if (leq(j, x))
                    ++lowerCount_[x];
    }

    void deriveTablesGenerically() {
        const int m = size();
        joinTable.assign(m, std::vector<int>(m, -1));
        meetTable.assign(m, std::vector<int>(m, -1));
        for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j) {
                int jo = uniqueBound(i, j, /*upper=*/true);
                int me = uniqueBound(i, j, /*upper=*/false);
                if (jo < 0 || me < 0) {
                    joinTable.clear();
                    meetTable.clear();
                    hasTables = false;
                    return;
                }
                joinTable[i][j] = joinTable[j][i] = jo;
                meetTable[i][j] = meetTable[j][i] = me;
            }
        hasTables = true;
    }

    // unique minimal upper bound / maximal lower bound, or -1
    int uniqueBound(int i, int j, bool upper) const {
        std::vector<int> bounds;
        for (int z = 0; z < size(); ++z)
            if (upper ? (leq(i, z) && leq(j, z)) : (leq(z, i) && leq(z, j)))
                bounds.push_back(z);
        std::vector<int> extremal;
        for (int z : bounds) {
            bool ext = true;
            for (int w : bounds)
                if (w != z && (upper ? lt(w, z) : lt(z, w)))
                    ext = false;
            if (ext)
                extremal.push_back(z);
        }
        return extremal.size() == 1 ? extremal.front() : -1;
    }

    std::map<SetPartition, int> partitionIndex_;
    std::vector<int> lowerCount_;
    std::vector<std::vector<int>> coversAbove_;
};

inline constexpr int kPartitionLatticeSizeCap = 8;

/// The partition lattice Pi_n, ordered by reversed refinement.
inline FiniteLattice build_partition_lattice(int n) {
    if (n < 2 || n > kPartitionLatticeSizeCap)
        throw std::invalid_argument(
            "build_partition_lattice: n must satisfy 2 <= n <= " +
            std::to_string(kPartitionLatticeSizeCap));
    std::vector<SetPartition> parts = allSetPartitions(n);
    const int m = static_cast<int>(parts.size());
    std::map<SetPartition, int> idx;
    for (int i = 0; i < m; ++i)
        idx[parts[i]] = i;
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i)
        labels[i] = parts[i].toString();
    std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
    std::vector<std::vector<int>> join(m, std::vector<int>(m)), meet(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            leq[i][j] = parts[i].refines(parts[j]) ? 1 : 0;
            if (j < i)
                continue;
            int jo = idx.at(parts[i].joinWith(parts[j]));
            int me = idx.at(parts[i].meetWith(parts[j]));
            join[i][j] = jo;
            join[j][i] = jo;
            meet[i][j] = me;
            meet[j][i] = me;
        }
    return FiniteLattice::fromRelationWithTables(std::move(labels), std::move(leq),
                                                 std::move(join), std::move(meet),
                                                 std::move(parts));
}

/**
 * The k-equal lattice Pi_{n,k}: sublattice of Pi_n join-generated by the
 * partitions with a single non-trivial block of size k, with the bottom
 * of Pi_n adjoined.  Joins agree with Pi_n (the set is join-closed);
 * meets are computed inside the sublattice.
 */
inline FiniteLattice build_k_equal_lattice(int n, int k) {
    if (!(n > k && k >= 2))
        throw std::invalid_argument("build_k_equal_lattice: need n > k >= 2");
    if (n > kPartitionLatticeSizeCap)
        throw std::invalid_argument(
            "build_k_equal_lattice: n exceeds size cap " +
            std::to_string(kPartitionLatticeSizeCap));
    // generators: all partitions with exactly one block of size k
    std::vector<SetPartition> gens;
    std::vector<int> sel(k);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == k) {
            gens.push_back(SetPartition::singleBlock(n, sel));
            return;
        }
        for (int x = start; x <= n; ++x) {
            sel[depth] = x;
            self(self, x + 1, depth + 1);
        }
    };
    rec(rec, 1, 0);
    std::vector<SetPartition> elems = gens;
    std::sort(elems.begin(), elems.end());
    // join closure
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<SetPartition> add;
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (std::size_t j = i + 1; j < elems.size(); ++j) {
                SetPartition jo = elems[i].joinWith(elems[j]);
                if (!std::binary_search(elems.begin(), elems.end(), jo))
                    add.push_back(jo);
            }
        if (!add.empty()) {
            grew = true;
            elems.insert(elems.end(), add.begin(), add.end());
            std::sort(elems.begin(), elems.end());
            elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        }
    }
    SetPartition bot = SetPartition::bottom(n);
    if (!std::binary_search(elems.begin(), elems.end(), bot)) {
        elems.push_back(bot);
        std::sort(elems.begin(), elems.end());
    }
    const int m = static_cast<int>(elems.size());
    std::map<SetPartition, int> idx;
    for (int i = 0; i < m; ++i)
        idx[elems[i]] = i;
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i)
        labels[i] = elems[i].toString();
    std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            leq[i][j] = elems[i].refines(elems[j]) ? 1 : 0;
    std::vector<std::vector<int>> join(m, std::vector<int>(m)), meet(m, std::vector<int>(m, -1));
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            int jo = idx.at(elems[i].joinWith(elems[j]));
            join[i][j] = join[j][i] = jo;
        }
    // meet inside the sublattice: unique maximal common lower bound
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            int best = -1;
            bool unique = true;
            for (int z = 0; z < m; ++z)
                if (leq[z][i] && leq[z][j]) {
                    if (best < 0 || leq[best][z])
                        best = z;
                }
            for (int z = 0; z < m; ++z)
                if (leq[z][i] && leq[z][j] && !leq[z][best])
                    unique = false;
            if (!unique)
                throw std::runtime_error("build_k_equal_lattice: meet not unique");
            meet[i][j] = meet[j][i] = best;
        }
    return FiniteLattice::fromRelationWithTables(std::move(labels), std::move(leq),
                                                 std::move(join), std::move(meet),
                                                 std::move(elems));
}

/**
 * Subposet of Pi_N on partitions all of whose block sizes are congruent
 * to 1 mod k.  Returned poset-only (it need not be a lattice).
 */
inline FiniteLattice build_block_size_poset(int N, int k) {
    if (N < 2 || k < 1)
        throw std::invalid_argument("build_block_size_poset: need N >= 2, k >= 1");
    if (N > kPartitionLatticeSizeCap)
        throw std::invalid_argument(
            "build_block_size_poset: N exceeds size cap " +
            std::to_string(kPartitionLatticeSizeCap));
    std::vector<SetPartition> elems;
    for (const auto& p : allSetPartitions(N)) {
        bool ok = true;
        for (const auto& b : p.blocks())
            if (static_cast<int>(b.size()) % k != 1 % k)
                ok = false;
        if (ok)
            elems.push_back(p);
    }
    const int m = static_cast<int>(elems.size());
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i)
        labels[i] = elems[i].toString();
    std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            leq[i][j] = elems[i].refines(elems[j]) ? 1 : 0;
    FiniteLattice P = FiniteLattice::fromRelation(std::move(labels), std::move(leq),
                                                  std::move(elems));
    if (k > 1) {
        // flag as poset-only even when generic tables happen to exist
        P.joinTable.clear();
        P.meetTable.clear();
        P.hasTables = false;
    }
    return P;
}

/**
 * Test whether the map (x_1,..,x_t) -> x_1 v ... v x_t is an order
 * isomorphism from the product of intervals [0,F_j], F_j in `factors`,
 * onto [0,X].  Checked by cardinality, bijectivity, and order
 * preservation in both directions.
 */
inline bool interval_product_iso(const FiniteLattice& L, const std::vector<int>& factors,
                                 int X) {
    L.requireTables();
    std::vector<std::vector<int>> ivs;
    long long prodSize = 1;
    for (int f : factors) {
        ivs.push_back(L.interval(L.bottom, f));
        prodSize *= static_cast<long long>(ivs.back().size());
        if (prodSize > L.lowerCount(X))
            return false;
    }
    if (prodSize != L.lowerCount(X))
        return false;
    // enumerate product tuples, record joins
    const int t = static_cast<int>(factors.size());
    std::vector<int> pos(t, 0);
    std::vector<std::vector<int>> tuples;
    std::vector<int> joins;
    for (;;) {
        int j = L.bottom;
        for (int a = 0; a < t; ++a)
            j = L.join(j, ivs[a][pos[a]]);
        if (!L.leq(j, X))
            return false;
        tuples.push_back(pos);
        joins.push_back(j);
        int a = t - 1;
        while (a >= 0 && ++pos[a] == static_cast<int>(ivs[a].size())) {
            pos[a] = 0;
            --a;
        }
        if (a < 0)
            break;
    }
    // bijectivity: joins pairwise distinct (cardinalities already agree)
    std::vector<int> sortedJoins = joins;
    std::sort(sortedJoins.begin(), sortedJoins.end());
    if (std::adjacent_find(sortedJoins.begin(), sortedJoins.end()) != sortedJoins.end())
        return false;
    // order preservation both ways
    const std::size_t M = tuples.size();
    for (std::size_t a = 0; a < M; ++a)
        for (std::size_t b = 0; b < M; ++b) {
            if (a == b)
                continue;
            bool tupleLeq = true;
            for (int c = 0; c < t && tupleLeq; ++c)
                if (!L.leq(ivs[c][tuples[a][c]], ivs[c][tuples[b][c]]))
                    tupleLeq = false;
            if (tupleLeq != L.leq(joins[a], joins[b]))
                return false;
        }
    return true;
}

struct BuildingSet {
    const FiniteLattice* lattice = nullptr;
    std::vector<int> members;  // sorted element indices, all > bottom

    bool contains(int x) const {
        return std::binary_search(members.begin(), members.end(), x);
    }
};

/// Maximal elements of G_{<=X}, the set of factors F_G(X).
inline std::vector<int> factors(const FiniteLattice& L, const BuildingSet& G, int X) {
    if (X == L.bottom)
        throw std::invalid_argument("factors: X must be above the bottom element");
    std::vector<int> below;
    for (int g : G.members)
        if (L.leq(g, X))
            below.push_back(g);
    std::vector<int> out;
    for (int g : below) {
        bool maximal = true;
        for (int h : below)
            if (h != g && L.lt(g, h))
                maximal = false;
        if (maximal)
            out.push_back(g);
    }
    return out;
}

/// Definition check for building sets via the interval-product isomorphism.
inline bool is_building_set(const FiniteLattice& L, const std::vector<int>& members) {
    L.requireTables();
    for (int g : members)
        if (g == L.bottom)
            throw std::invalid_argument("is_building_set: building set may not contain the bottom");
    BuildingSet G{&L, members};
    std::sort(G.members.begin(), G.members.end());
    for (int X = 0; X < L.size(); ++X) {
        if (X == L.bottom)
            continue;
        std::vector<int> F = factors(L, G, X);
        if (F.empty())
            return false;
        if (!interval_product_iso(L, F, X))
            return false;
    }
    return true;
}

/**
 * Irreducible elements: X > 0 such that [0,X] admits no nontrivial
 * direct-product decomposition.  Decided by exhaustive search for a
 * complementary pair (A,B) realizing [0,A] x [0,B] ~ [0,X] via joins;
 * binary splits suffice since further factors nest.
 */
inline std::vector<int> irreducibles(const FiniteLattice& L) {
    L.requireTables();
    std::vector<int> out;
    for (int X = 0; X < L.size(); ++X) {
        if (X == L.bottom)
            continue;
        std::vector<int> below = L.interval(L.bottom, X);
        bool reducible = false;
        for (std::size_t a = 0; a < below.size() && !reducible; ++a) {
            int A = below[a];
            if (A == L.bottom || A == X)
                continue;
            for (std::size_t b = a + 1; b < below.size() && !reducible; ++b) {
                int B = below[b];
                if (B == L.bottom || B == X)
                    continue;
                if (L.join(A, B) != X || L.meet(A, B) != L.bottom)
                    continue;
                if (static_cast<long long>(L.lowerCount(A)) * L.lowerCount(B) !=
                    L.lowerCount(X))
                    continue;
                if (interval_product_iso(L, {A, B}, X))
                    reducible = true;
            }
        }
        if (!reducible)
            out.push_back(X);
    }
    return out;
}

/// The minimal building set of L as a BuildingSet value.
inline BuildingSet minimal_building_set(const FiniteLattice& L) {
    return BuildingSet{&L, irreducibles(L)};
}

/// The maximal building set: all of L above the bottom.
inline BuildingSet maximal_building_set(const FiniteLattice& L) {
    BuildingSet G{&L, {}};
    for (int i = 0; i < L.size(); ++i)
        if (i != L.bottom)
            G.members.push_back(i);
    return G;
}

/// Boolean lattice of subsets of {1..m}; element labels are sorted digit
/// strings, "{}" for the empty set.  Test and example helper.
inline FiniteLattice build_boolean_lattice(int m) {
    if (m < 1 || m > 20)
        throw std::invalid_argument("build_boolean_lattice: m out of range");
    const int M = 1 << m;
    std::vector<std::string> labels(M);
    for (int s = 0; s < M; ++s) {
        std::string l;
        for (int i = 0; i < m; ++i)
            if (s & (1 << i))
                l += static_cast<char>('1' + i);
        labels[s] = l.empty() ? "{}" : l;
    }
    std::vector<std::vector<char>> leq(M, std::vector<char>(M, 0));
    std::vector<std::vector<int>> join(M, std::vector<int>(M)), meet(M, std::vector<int>(M));
    for (int a = 0; a < M; ++a)
        for (int b = 0; b < M; ++b) {
            leq[a][b] = ((a & b) == a) ? 1 : 0;
            join[a][b] = a | b;
            meet[a][b] = a & b;
        }
    return FiniteLattice::fromRelationWithTables(std::move(labels), std::move(leq),
                                                 std::move(join), std::move(meet));
}

}  // namespace treenest
