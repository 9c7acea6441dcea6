#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace nodalpart {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        return true;
    }

    std::size_t size() const { return parent_.size(); }

private:
    std::vector<int> parent_;
    std::vector<std::uint8_t> rank_;
};

// Union-find that also tracks a Z/2 label relative to the class root.
// unite(a, b, odd) records label(a) xor label(b) == odd and reports
// whether that is consistent with everything recorded so far.
class ParityUnionFind {
public:
    explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    // Returns the root and writes the parity of x relative to it.
    int find(int x, std::uint8_t& parity) {
        std::uint8_t acc = 0;
        int root = x;
        while (parent_[root] != root) {
            acc ^= parity_[root];
            root = parent_[root];
        }
        // Path compression, fixing up parities on the way.
        std::uint8_t running = acc;
        while (parent_[x] != root) {
            const int next = parent_[x];
            const std::uint8_t own = parity_[x];
            parent_[x] = root;
            parity_[x] = running;
            running ^= own;
            x = next;
        }
        parity = acc;
        return root;
    }

    // false iff the constraint contradicts earlier ones.
    bool unite(int a, int b, bool odd) {
        std::uint8_t pa = 0;
        std::uint8_t pb = 0;
        int ra = find(a, pa);
        int rb = find(b, pb);
        const std::uint8_t want = odd ? 1 : 0;
        if (ra == rb) return (pa ^ pb) == want;
        if (rank_[ra] < rank_[rb]) {
            std::swap(ra, rb);
            std::swap(pa, pb);
        }
        parent_[rb] = ra;
        parity_[rb] = pa ^ pb ^ want;
        if (rank_[ra] == rank_[rb]) ++rank_[ra];
        return true;
    }

private:
    std::vector<int> parent_;
    std::vector<std::uint8_t> parity_;
    std::vector<std::uint8_t> rank_;
};

}  // namespace nodalpart
