#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "treenest/lattice.hpp"
#include "treenest/nested.hpp"
#include "treenest/simplicial_complex.hpp"

namespace treenest {

using Leafset = std::vector<int>;                // sorted subset of {1..n}
using NestedFamily = std::set<Leafset>;          // pairwise disjoint-or-nested

inline std::string leafsetLabel(const Leafset& s) {
    std::string out;
    for (int x : s)
        out += static_cast<char>('0' + x);
    return out;
}

/**
 * Combinatorial type of a rooted tree with leaves labelled 1..n; every
 * non-leaf has outdegree at least 2.  Children are kept sorted by
 * minimal descendant leaf label, which makes the node list canonical.
 * The set of leafsets of non-root internal vertices is a complete
 * invariant of the type and is used as its fingerprint.
 */
class RootedTreeType {
public:
    struct Node {
        int leafLabel = 0;          // > 0 iff leaf
        std::vector<int> children;  // node indices
        bool isLeaf() const { return leafLabel > 0; }
    };

    static RootedTreeType fromNodes(int n, std::vector<Node> nodes) {
        RootedTreeType t;
        t.n_ = n;
        t.nodes_ = std::move(nodes);
        t.canonicalize();
        t.validate();
        return t;
    }

    /// Tree from a nested family of leafsets: internal vertices are the
    /// members ordered by inclusion, the root covers the maximal ones,
    /// and leaves are grown at every node for labels not delegated to a
    /// smaller member.
    static RootedTreeType fromNested(int n, const NestedFamily& family) {
        for (const auto& a : family)
            for (const auto& b : family) {
                if (a == b)
                    continue;
                Leafset inter;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                      std::back_inserter(inter));
                bool nested = inter.empty() || inter == a || inter == b;
                if (!nested)
                    throw std::invalid_argument(
                        "RootedTreeType::fromNested: family is not nested");
            }
        std::vector<Node> nodes(1);  // 0 = root
        std::map<Leafset, int> nodeOf;
        std::vector<Leafset> members(family.begin(), family.end());
        // larger sets first so parents exist before children attach
        std::sort(members.begin(), members.end(), [](const Leafset& a, const Leafset& b) {
            return a.size() != b.size() ? a.size() > b.size() : a < b;
        });
        auto parentOf = [&](const Leafset& s) -> int {
            // smallest member strictly containing s, else root
            const Leafset* best = nullptr;
            for (const auto& t : members) {
                if (t.size() <= s.size())
                    continue;
                if (std::includes(t.begin(), t.end(), s.begin(), s.end()))
                    if (!best || t.size() < best->size())
                        best = &t;
            }
            return best ? nodeOf.at(*best) : 0;
        };
        for (const auto& s : members) {
            int id = static_cast<int>(nodes.size());
            nodes.emplace_back();
            nodeOf[s] = id;
            nodes[parentOf(s)].children.push_back(id);
        }
        // grow leaves: each label goes to the smallest member containing it
        for (int x = 1; x <= n; ++x) {
            const Leafset* best = nullptr;
            for (const auto& s : members)
                if (std::binary_search(s.begin(), s.end(), x))
                    if (!best || s.size() < best->size())
                        best = &s;
            int host = best ? nodeOf.at(*best) : 0;
            int id = static_cast<int>(nodes.size());
            nodes.push_back(Node{x, {}});
            nodes[host].children.push_back(id);
        }
        return fromNodes(n, std::move(nodes));
    }

    /// Parse the nested-parentheses text form, e.g. "((1,2),(3,4))".
    static RootedTreeType parse(const std::string& text) {
        std::size_t pos = 0;
        std::vector<Node> nodes;
        auto skip = [&]() {
            while (pos < text.size() && text[pos] == ' ')
                ++pos;
        };
        auto rec = [&](auto&& self) -> int {
            skip();
            if (pos >= text.size())
                throw std::invalid_argument("RootedTreeType::parse: truncated input");
            if (text[pos] == '(') {
                ++pos;
                int id = static_cast<int>(nodes.size());
                nodes.emplace_back();
                std::vector<int> children;
                for (;;) {
                    children.push_back(self(self));
                    skip();
                    if (pos < text.size() && text[pos] == ',') {
                        ++pos;
                        continue;
                    }
                    break;
                }
                if (pos >= text.size() || text[pos] != ')')
                    throw std::invalid_argument("RootedTreeType::parse: expected ')'");
                ++pos;
                nodes[id].children = std::move(children);
                return id;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                throw std::invalid_argument("RootedTreeType::parse: expected leaf label");
            int label = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                label = label * 10 + (text[pos++] - '0');
            int id = static_cast<int>(nodes.size());
            nodes.push_back(Node{label, {}});
            return id;
        };
        int root = rec(rec);
        skip();
        if (pos != text.size())
            throw std::invalid_argument("RootedTreeType::parse: trailing input");
        if (root != 0)
            throw std::invalid_argument("RootedTreeType::parse: malformed tree");
        int n = 0;
        for (const auto& nd : nodes)
            if (nd.isLeaf())
                n = std::max(n, nd.leafLabel);
        return fromNodes(n, std::move(nodes));
    }

    int leafCount() const { return n_; }
    const std::vector<Node>& nodes() const { return nodes_; }

    std::string toString() const { return printNode(0); }

    /// Leafset below a node, sorted.
    Leafset leafset(int node) const {
        Leafset out;
        collectLeaves(node, out);
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Leafsets of internal (non-leaf, non-root) vertices: the nested set
    /// S(T) of the tree.
    NestedFamily internalLeafsets() const {
        NestedFamily out;
        for (int v = 1; v < static_cast<int>(nodes_.size()); ++v)
            if (!nodes_[v].isLeaf())
                out.insert(leafset(v));
        return out;
    }

    /// Leafsets of all non-leaves, root included.
    std::vector<Leafset> nonLeafLeafsets() const {
        std::vector<Leafset> out;
        for (int v = 0; v < static_cast<int>(nodes_.size()); ++v)
            if (!nodes_[v].isLeaf())
                out.push_back(leafset(v));
        return out;
    }

    bool isBinary() const {
        for (const auto& nd : nodes_)
            if (!nd.isLeaf() && nd.children.size() != 2)
                return false;
        return true;
    }

    int internalEdgeCount() const {
        int c = 0;
        for (int v = 1; v < static_cast<int>(nodes_.size()); ++v)
            if (!nodes_[v].isLeaf())
                ++c;
        return c;
    }

    /// Contract the internal edge above the given non-root internal
    /// vertex (identified by its leafset).
    RootedTreeType contractEdge(const Leafset& at) const {
        NestedFamily fam = internalLeafsets();
        if (fam.erase(at) == 0)
            throw std::invalid_argument("contractEdge: no such internal vertex");
        return fromNested(n_, fam);
    }

    friend bool operator==(const RootedTreeType& a, const RootedTreeType& b) {
        return a.n_ == b.n_ && a.internalLeafsets() == b.internalLeafsets();
    }
    friend bool operator<(const RootedTreeType& a, const RootedTreeType& b) {
        return a.internalLeafsets() < b.internalLeafsets();
    }

private:
    void canonicalize() {
        for (auto& nd : nodes_)
            std::sort(nd.children.begin(), nd.children.end(), [this](int a, int b) {
                return minLeaf(a) < minLeaf(b);
            });
    }

    int minLeaf(int v) const {
        if (nodes_[v].isLeaf())
            return nodes_[v].leafLabel;
        int m = n_ + 1;
        for (int c : nodes_[v].children)
            m = std::min(m, minLeaf(c));
        return m;
    }

    void validate() const {
        if (n_ < 1)
            throw std::invalid_argument("RootedTreeType: no leaves");
        std::vector<bool> seen(n_ + 1, false);
        for (const auto& nd : nodes_) {
            if (nd.isLeaf()) {
                if (nd.leafLabel < 1 || nd.leafLabel > n_ || seen[nd.leafLabel])
                    throw std::invalid_argument("RootedTreeType: bad leaf labels");
                seen[nd.leafLabel] = true;
            } else if (nd.children.size() < 2) {
                throw std::invalid_argument(
                    "RootedTreeType: non-leaf with outdegree below 2");
            }
        }
        for (int x = 1; x <= n_; ++x)
            if (!seen[x])
                throw std::invalid_argument("RootedTreeType: missing leaf label");
    }

    std::string printNode(int v) const {
        if (nodes_[v].isLeaf())
            return std::to_string(nodes_[v].leafLabel);
        std::string s = "(";
        bool first = true;
        for (int c : nodes_[v].children) {
            if (!first)
                s += ',';
            first = false;
            s += printNode(c);
        }
        return s + ")";
    }

    void collectLeaves(int v, Leafset& out) const {
        if (nodes_[v].isLeaf()) {
            out.push_back(nodes_[v].leafLabel);
            return;
        }
        for (int c : nodes_[v].children)
            collectLeaves(c, out);
    }

    int n_ = 0;
    std::vector<Node> nodes_;
};

/// S(T): leafsets below the non-root inner vertices of T.
inline NestedFamily tree_to_nested(const RootedTreeType& T) {
    return T.internalLeafsets();
}

/// T(S): grow a tree back from a reduced nested set of subsets of {1..n}.
inline RootedTreeType nested_to_tree(int n, const NestedFamily& S) {
    return RootedTreeType::fromNested(n, S);
}

namespace detail {

/**
 * Recursive leafset splitting for facet trees which are binary except at
 * preleaves, where they are k-ary (k = 2 gives plain binary trees).
 * Emits fingerprints of subtrees on `ground`: each part of a binary
 * split is a single leaf or a subtree on >= k leaves; a subtree on
 * exactly k leaves is a preleaf.
 */
inline void splitTrees(const Leafset& ground, int k, bool isRoot, NestedFamily& current,
                       std::vector<NestedFamily>& out) {
    const int sz = static_cast<int>(ground.size());
    if (!isRoot) {
        if (sz < k)
            throw std::logic_error("splitTrees: part below preleaf size");
        current.insert(ground);
    }
    if (!isRoot && sz == k) {
        // preleaf
        out.push_back(current);
        current.erase(ground);
        return;
    }
    // binary split into {A, B}: A contains min(ground) to avoid duplicates
    const int total = sz;
    std::vector<int> rest(ground.begin() + 1, ground.end());
    const int m = total - 1;
    for (int mask = 0; mask < (1 << m); ++mask) {
        Leafset A{ground.front()}, B;
        for (int i = 0; i < m; ++i)
            (mask & (1 << i) ? A : B).push_back(rest[i]);
        if (B.empty())
            continue;
        auto partOk = [&](const Leafset& p) {
            return p.size() == 1 || static_cast<int>(p.size()) >= k;
        };
        if (!partOk(A) || !partOk(B))
            continue;
        // recurse A then B over all combinations
        std::vector<NestedFamily> fromA;
        if (A.size() == 1) {
            fromA.push_back(current);
        } else {
            splitTrees(A, k, false, current, fromA);
        }
        for (auto& famA : fromA) {
            if (B.size() == 1) {
                out.push_back(famA);
            } else {
                NestedFamily c = famA;
                splitTrees(B, k, false, c, out);
            }
        }
    }
    if (!isRoot)
        current.erase(ground);
}

inline std::vector<NestedFamily> facetFingerprints(int n, int k) {
    Leafset ground(n);
    for (int i = 0; i < n; ++i)
        ground[i] = i + 1;
    NestedFamily cur;
    std::vector<NestedFamily> out;
    splitTrees(ground, k, true, cur, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline SimplicialComplex complexFromFingerprints(const std::vector<NestedFamily>& facets) {
    std::vector<LabelFace> faces;
    for (const auto& f : facets) {
        LabelFace lf;
        for (const auto& s : f)
            lf.push_back(leafsetLabel(s));
        std::sort(lf.begin(), lf.end());
        faces.push_back(std::move(lf));
    }
    return SimplicialComplex::fromLabelFaces(faces);
}

}  // namespace detail

/// All binary facet trees of T_n, canonical order.
inline std::vector<RootedTreeType> binary_facet_trees(int n) {
    std::vector<RootedTreeType> out;
    for (const auto& fam : detail::facetFingerprints(n, 2))
        out.push_back(RootedTreeType::fromNested(n, fam));
    std::sort(out.begin(), out.end());
    return out;
}

/**
 * The complex of trees T_n: facets are the combinatorial types of binary
 * rooted trees on n labelled leaves, faces arise by contracting internal
 * edges.  Vertex labels are the leafsets of the single surviving
 * internal vertex.
 */
inline SimplicialComplex enumerate_tn(int n) {
    if (n < 3)
        throw std::invalid_argument("enumerate_tn: need n >= 3");
    return detail::complexFromFingerprints(detail::facetFingerprints(n, 2));
}

/**
 * The complex of k-equal trees T_{n,k}: facet trees are binary except at
 * preleaves, where they are k-ary; faces by contraction.
 */
inline SimplicialComplex enumerate_k_equal_trees(int n, int k) {
    if (!(n > k && k >= 2))
        throw std::invalid_argument("enumerate_k_equal_trees: need n > k >= 2");
    return detail::complexFromFingerprints(detail::facetFingerprints(n, k));
}

/**
 * Hanlon's complex of k-trees T_n^(k): faces are rooted trees on
 * (n-1)k+1 labelled leaves with every outdegree >= k+1 and congruent to
 * 1 mod k, and at least one internal edge.  Faces are enumerated as
 * nested leafset families directly; validity is closed under edge
 * contraction, so the search prunes on invalid families.
 */
inline SimplicialComplex enumerate_hanlon_k_trees(int n, int k) {
    if (n < 3 || k < 1)
        throw std::invalid_argument("enumerate_hanlon_k_trees: need n >= 3, k >= 1");
    const int N = (n - 1) * k + 1;
    if (N > 9)
        throw std::invalid_argument("enumerate_hanlon_k_trees: leaf count above 9 unsupported");
    // candidate leafsets for internal vertices
    std::vector<Leafset> cand;
    for (int mask = 1; mask < (1 << N); ++mask) {
        Leafset s;
        for (int i = 0; i < N; ++i)
            if (mask & (1 << i))
                s.push_back(i + 1);
        const int sz = static_cast<int>(s.size());
        if (sz >= k + 1 && sz % k == 1 % k && sz < N)
            cand.push_back(s);
    }
    std::sort(cand.begin(), cand.end());
    Leafset ground(N);
    for (int i = 0; i < N; ++i)
        ground[i] = i + 1;
    auto familyValid = [&](const std::vector<Leafset>& fam) {
        // outdegree of every node (members and root) under the nesting
        auto outdeg = [&](const Leafset& node, bool root) {
            int children = 0;
            std::vector<char> delegated(N + 1, 0);
            for (const auto& s : fam) {
                if (s == node && !root)
                    continue;
                if (!root && !(s != node &&
                               std::includes(node.begin(), node.end(), s.begin(), s.end())))
                    continue;
                if (root && s == node)
                    continue;
                // maximal member strictly below node?
                bool maximal = true;
                for (const auto& t : fam) {
                    if (t == s || t == node)
                        continue;
                    bool tBelowNode =
                        root || std::includes(node.begin(), node.end(), t.begin(), t.end());
                    if (tBelowNode && t != node && t.size() > s.size() &&
                        std::includes(t.begin(), t.end(), s.begin(), s.end()))
                        maximal = false;
                }
                if (maximal) {
                    ++children;
                    for (int x : s)
                        delegated[x] = 1;
                }
            }
            int ownLeaves = 0;
            for (int x : node)
                if (!delegated[x])
                    ++ownLeaves;
            return children + ownLeaves;
        };
        for (const auto& s : fam) {
            int d = outdeg(s, false);
            if (d < k + 1 || d % k != 1 % k)
                return false;
        }
        int d = outdeg(ground, true);
        if (d < k + 1 || d % k != 1 % k)
            return false;
        return true;
    };
    auto nestedWith = [&](const std::vector<Leafset>& fam, const Leafset& s) {
        for (const auto& t : fam) {
            Leafset inter;
            std::set_intersection(s.begin(), s.end(), t.begin(), t.end(),
                                  std::back_inserter(inter));
            if (!(inter.empty() || inter == s || inter == t) || t == s)
                return false;
        }
        return true;
    };
    std::vector<LabelFace> faces;
    std::vector<Leafset> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (!cur.empty()) {
            LabelFace lf;
            for (const auto& s : cur)
                lf.push_back(leafsetLabel(s));
            std::sort(lf.begin(), lf.end());
            faces.push_back(std::move(lf));
        }
        for (std::size_t i = start; i < cand.size(); ++i) {
            if (!nestedWith(cur, cand[i]))
                continue;
            cur.push_back(cand[i]);
            if (familyValid(cur))
                self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    if (faces.empty())
        return SimplicialComplex{};
    return SimplicialComplex::fromLabelFaces(faces);
}

/// Identity check: T_n equals N(Pi_n, I) reduced, vertex
/// labels already agreeing through the leafset encoding.
inline bool verify_tn_identity(int n) {
    FiniteLattice L = build_partition_lattice(n);
    SimplicialComplex N = nested_set_complex(L, minimal_building_set(L), /*reduced=*/true);
    return complexes_equal(enumerate_tn(n), N);
}

}  // namespace treenest
