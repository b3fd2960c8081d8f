#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace treenest {

/**
 * A set partition of {1..n} in canonical form: every block sorted
 * ascending, blocks sorted by their minimum element.  Canonical form is
 * the element identity used throughout; two partitions compare equal iff
 * their canonical block lists are equal.
 */
class SetPartition {
public:
    SetPartition() = default;

    static SetPartition fromBlocks(int n, std::vector<std::vector<int>> blocks) {
        SetPartition p;
        p.n_ = n;
        p.blocks_ = std::move(blocks);
        p.canonicalize();
        p.validate();
        return p;
    }

    /// Finest partition: all singletons.
    static SetPartition bottom(int n) {
        std::vector<std::vector<int>> blocks;
        blocks.reserve(n);
        for (int i = 1; i <= n; ++i)
            blocks.push_back({i});
        return fromBlocks(n, std::move(blocks));
    }

    /// Coarsest partition: one block {1..n}.
    static SetPartition top(int n) {
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 1);
        return fromBlocks(n, {all});
    }

    /// Partition with a single non-singleton block; everything else singleton.
    static SetPartition singleBlock(int n, std::vector<int> block) {
        std::vector<bool> used(n + 1, false);
        for (int x : block)
            used.at(x) = true;
        std::vector<std::vector<int>> blocks{std::move(block)};
        for (int i = 1; i <= n; ++i)
            if (!used[i])
                blocks.push_back({i});
        return fromBlocks(n, std::move(blocks));
    }

    int groundSize() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int numBlocks() const { return static_cast<int>(blocks_.size()); }

    /// Number of blocks of size >= 2.
    int numNonSingletonBlocks() const {
        int c = 0;
        for (const auto& b : blocks_)
            if (b.size() >= 2)
                ++c;
        return c;
    }

    /// Block index containing element x (1-based element).
    int blockOf(int x) const {
        for (int i = 0; i < numBlocks(); ++i)
            if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), x))
                return i;
        throw std::invalid_argument("SetPartition::blockOf: element out of range");
    }

    /// this <= other in the reversed-refinement order of the partition
    /// lattice: every block of this is contained in a block of other.
    bool refines(const SetPartition& other) const {
        std::vector<int> where(n_ + 1, -1);
        for (int i = 0; i < other.numBlocks(); ++i)
            for (int x : other.blocks_[i])
                where[x] = i;
        for (const auto& b : blocks_) {
            int target = where[b.front()];
            for (int x : b)
                if (where[x] != target)
                    return false;
        }
        return true;
    }

    /// Join in the partition lattice: finest common coarsening (union-find
    /// merge of the blocks of both partitions).
    SetPartition joinWith(const SetPartition& other) const {
        std::vector<int> parent(n_ + 1);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
        for (const auto* p : {this, &other})
            for (const auto& b : p->blocks_)
                for (std::size_t i = 1; i < b.size(); ++i)
                    unite(b[0], b[i]);
        std::vector<std::vector<int>> byRoot(n_ + 1);
        for (int x = 1; x <= n_; ++x)
            byRoot[find(x)].push_back(x);
        std::vector<std::vector<int>> blocks;
        for (auto& b : byRoot)
            if (!b.empty())
                blocks.push_back(std::move(b));
        return fromBlocks(n_, std::move(blocks));
    }

    /// Meet in the partition lattice: pairwise block intersections.
    SetPartition meetWith(const SetPartition& other) const {
        std::vector<std::vector<int>> blocks;
        for (const auto& a : blocks_)
            for (const auto& b : other.blocks_) {
                std::vector<int> inter;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                      std::back_inserter(inter));
                if (!inter.empty())
                    blocks.push_back(std::move(inter));
            }
        return fromBlocks(n_, std::move(blocks));
    }

    /// Canonical text encoding: non-singleton blocks as digit strings
    /// joined by '|', smaller blocks first (ties by digit string); the
    /// all-singleton partition encodes as "0".  Requires n <= 9.
    std::string toString() const {
        std::vector<std::string> parts;
        for (const auto& b : blocks_) {
            if (b.size() < 2)
                continue;
            std::string p;
            for (int x : b)
                p += static_cast<char>('0' + x);
            parts.push_back(std::move(p));
        }
        std::sort(parts.begin(), parts.end(), [](const std::string& a, const std::string& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        std::string s;
        for (const auto& p : parts) {
            if (!s.empty())
                s += '|';
            s += p;
        }
        return s.empty() ? std::string("0") : s;
    }

    friend bool operator==(const SetPartition& a, const SetPartition& b) {
        return a.n_ == b.n_ && a.blocks_ == b.blocks_;
    }
    friend bool operator!=(const SetPartition& a, const SetPartition& b) { return !(a == b); }
    friend bool operator<(const SetPartition& a, const SetPartition& b) {
        return a.blocks_ < b.blocks_;
    }

private:
    void canonicalize() {
        for (auto& b : blocks_)
            std::sort(b.begin(), b.end());
        std::sort(blocks_.begin(), blocks_.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
    }

    void validate() const {
        if (n_ < 1)
            throw std::invalid_argument("SetPartition: ground set must be nonempty");
        if (n_ > 9)
            throw std::invalid_argument("SetPartition: ground-set size above 9 unsupported");
        std::vector<bool> seen(n_ + 1, false);
        int covered = 0;
        for (const auto& b : blocks_) {
            if (b.empty())
                throw std::invalid_argument("SetPartition: empty block");
            for (int x : b) {
                if (x < 1 || x > n_)
                    throw std::invalid_argument("SetPartition: element out of range");
                if (seen[x])
                    throw std::invalid_argument("SetPartition: blocks not disjoint");
                seen[x] = true;
                ++covered;
            }
        }
        if (covered != n_)
            throw std::invalid_argument("SetPartition: blocks do not cover {1..n}");
    }

    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
};

/// All set partitions of {1..n} in canonical (sorted) order.
inline std::vector<SetPartition> allSetPartitions(int n) {
    // restricted growth strings
    std::vector<SetPartition> out;
    std::vector<int> assign(n, 0);
    auto emit = [&]() {
        int m = *std::max_element(assign.begin(), assign.end()) + 1;
        std::vector<std::vector<int>> blocks(m);
        for (int i = 0; i < n; ++i)
            blocks[assign[i]].push_back(i + 1);
        out.push_back(SetPartition::fromBlocks(n, std::move(blocks)));
    };
    auto rec = [&](auto&& self, int i, int maxUsed) -> void {
        if (i == n) {
            emit();
            return;
        }
        for (int b = 0; b <= maxUsed + 1; ++b) {
            assign[i] = b;
            self(self, i + 1, std::max(maxUsed, b));
        }
    };
    rec(rec, 1, 0);  // element 1 always in block 0
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace treenest
