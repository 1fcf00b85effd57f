#include "ifree/nc_partitions.hpp"

#include "ifree/errors.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>

namespace ifree {

SetPartition::SetPartition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
    require(n >= 0, ErrorKind::InvalidArgument, "partition size must be non-negative");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    int covered = 0;
    for (auto& b : blocks_) {
        require(!b.empty(), ErrorKind::InvalidArgument, "partition blocks must be non-empty");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            require(x >= 1 && x <= n, ErrorKind::InvalidArgument,
                    "element " + std::to_string(x) + " outside 1.." + std::to_string(n));
            require(!seen[static_cast<std::size_t>(x)], ErrorKind::InvalidArgument,
                    "element " + std::to_string(x) + " appears twice");
            seen[static_cast<std::size_t>(x)] = 1;
            ++covered;
        }
    }
    require(covered == n, ErrorKind::InvalidArgument, "blocks do not cover 1.." + std::to_string(n));
    std::sort(blocks_.begin(), blocks_.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
}

SetPartition SetPartition::singletons(int n) {
    std::vector<Block> blocks;
    for (int x = 1; x <= n; ++x) blocks.push_back({x});
    return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::full(int n) {
    if (n == 0) return SetPartition(0, {});
    Block all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    return SetPartition(n, {std::move(all)});
}

SetPartition SetPartition::from_labels(const std::vector<int>& labels) {
    std::map<int, Block> classes;
    for (std::size_t i = 0; i < labels.size(); ++i) classes[labels[i]].push_back(static_cast<int>(i) + 1);
    std::vector<Block> blocks;
    blocks.reserve(classes.size());
    for (auto& [label, block] : classes) blocks.push_back(std::move(block));
    return SetPartition(static_cast<int>(labels.size()), std::move(blocks));
}

std::vector<int> SetPartition::labels() const {
    std::vector<int> out(static_cast<std::size_t>(n_), -1);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        for (int x : blocks_[b]) out[static_cast<std::size_t>(x - 1)] = static_cast<int>(b);
    }
    return out;
}

bool is_noncrossing(const SetPartition& p) {
    // Every element strictly between two consecutive members of a block must belong to a
    // block that stays inside that gap.
    const auto labels = p.labels();
    for (const auto& block : p.blocks()) {
        for (std::size_t i = 0; i + 1 < block.size(); ++i) {
            const int lo = block[i];
            const int hi = block[i + 1];
            for (int x = lo + 1; x < hi; ++x) {
                const auto& other = p.block(labels[static_cast<std::size_t>(x - 1)]);
                if (other.front() < lo || other.back() > hi) return false;
            }
        }
    }
    return true;
}

NcPartition::NcPartition(SetPartition p) : SetPartition(std::move(p)) {
    require(is_noncrossing(*this), ErrorKind::InvalidArgument, "partition is not non-crossing");
}

namespace {

struct NcCache {
    std::mutex mutex;
    std::map<int, std::unique_ptr<const std::vector<NcPartition>>> by_size;
};

NcCache& nc_cache() {
    static NcCache cache;
    return cache;
}

std::vector<NcPartition> generate_nc(int n) {
    // Restricted growth strings; element x may join block B only when no block's span
    // encloses B, which is exactly the condition that keeps the prefix non-crossing.
    std::vector<NcPartition> out;
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    std::vector<int> lo;
    std::vector<int> hi;
    auto rec = [&](auto&& self, int x) -> void {
        if (x > n) {
            out.emplace_back(SetPartition::from_labels(labels));
            return;
        }
        const int count = static_cast<int>(lo.size());
        for (int b = 0; b < count; ++b) {
            bool enclosed = false;
            for (int c = 0; c < count && !enclosed; ++c) {
                if (c != b && lo[c] < lo[b] && hi[c] > hi[b]) enclosed = true;
            }
            if (enclosed) continue;
            labels[static_cast<std::size_t>(x - 1)] = b;
            const int saved = hi[b];
            hi[b] = x;
            self(self, x + 1);
            hi[b] = saved;
        }
        labels[static_cast<std::size_t>(x - 1)] = count;
        lo.push_back(x);
        hi.push_back(x);
        self(self, x + 1);
        lo.pop_back();
        hi.pop_back();
    };
    rec(rec, 1);
    return out;
}

}  // namespace

const std::vector<NcPartition>& enumerate_nc(int n) {
    require(n >= 1, ErrorKind::InvalidArgument, "enumerate_nc needs n >= 1");
    auto& cache = nc_cache();
    std::lock_guard lock(cache.mutex);
    auto& slot = cache.by_size[n];
    if (!slot) slot = std::make_unique<const std::vector<NcPartition>>(generate_nc(n));
    return *slot;
}

Permutation biane_permutation(const SetPartition& p) {
    Permutation perm(static_cast<std::size_t>(p.size()));
    for (const auto& block : p.blocks()) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            perm[static_cast<std::size_t>(block[i] - 1)] = block[(i + 1) % block.size()];
        }
    }
    return perm;
}

SetPartition cycle_partition(const Permutation& perm) {
    const auto n = perm.size();
    std::vector<char> visited(n, 0);
    std::vector<Block> blocks;
    for (std::size_t start = 0; start < n; ++start) {
        if (visited[start]) continue;
        Block cycle;
        for (auto x = start; !visited[x]; x = static_cast<std::size_t>(perm[x] - 1)) {
            visited[x] = 1;
            cycle.push_back(static_cast<int>(x) + 1);
        }
        blocks.push_back(std::move(cycle));
    }
    return SetPartition(static_cast<int>(n), std::move(blocks));
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
    require(outer.size() == inner.size(), ErrorKind::SizeMismatch, "composing permutations of different sizes");
    Permutation out(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[static_cast<std::size_t>(inner[i] - 1)];
    return out;
}

Permutation invert(const Permutation& perm) {
    Permutation out(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) out[static_cast<std::size_t>(perm[i] - 1)] = static_cast<int>(i) + 1;
    return out;
}

namespace {

Permutation long_cycle(int m) {
    Permutation gamma(static_cast<std::size_t>(m));
    for (int x = 1; x <= m; ++x) gamma[static_cast<std::size_t>(x - 1)] = x % m + 1;
    return gamma;
}

}  // namespace

NcPartition kreweras(const NcPartition& p, KrewerasDirection direction) {
    const int m = p.size();
    if (m == 0) return p;
    // The barred element x̄ sits between x and x+1; the neighbour of x̄ in Kr(p) is
    // t(p)^{-1}(x+1), and dually γ t(p)^{-1} traces the blocks of the inverse map.
    const auto t_inv = invert(biane_permutation(p));
    const auto gamma = long_cycle(m);
    const auto perm = direction == KrewerasDirection::forward ? compose(t_inv, gamma) : compose(gamma, t_inv);
    return NcPartition(cycle_partition(perm));
}

NcPartition rotate_back(const NcPartition& p) {
    const int m = p.size();
    std::vector<Block> blocks;
    for (const auto& block : p.blocks()) {
        Block shifted;
        for (int x : block) shifted.push_back(x == 1 ? m : x - 1);
        blocks.push_back(std::move(shifted));
    }
    return NcPartition(m, std::move(blocks));
}

namespace {

int interleaved_max(const OrderedBlock& b) { return 2 * b.elements.back() - (b.barred ? 0 : 1); }

}  // namespace

bool block_precedes(const OrderedBlock& v, const OrderedBlock& w) {
    // On a non-crossing union, V nested in W or V left of W both mean max V < max W.
    return interleaved_max(v) < interleaved_max(w);
}

OrderedBlocks ordered_blocks(const NcPartition& p) {
    const auto kr = kreweras(p);
    OrderedBlocks out;
    std::vector<OrderedBlock> plain;
    std::vector<OrderedBlock> barred;
    for (const auto& b : p.blocks()) plain.push_back({b, false});
    for (const auto& b : kr.blocks()) barred.push_back({b, true});
    std::sort(plain.begin(), plain.end(), block_precedes);
    std::sort(barred.begin(), barred.end(), block_precedes);
    out.sep = plain;
    out.sep.insert(out.sep.end(), barred.begin(), barred.end());
    out.mix = out.sep;
    std::sort(out.mix.begin(), out.mix.end(), block_precedes);
    return out;
}

SetPartition partition_join(const SetPartition& p, const SetPartition& q) {
    require(p.size() == q.size(), ErrorKind::SizeMismatch,
            "join of partitions of sizes " + std::to_string(p.size()) + " and " + std::to_string(q.size()));
    const auto n = static_cast<std::size_t>(p.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite_blocks = [&](const SetPartition& s) {
        for (const auto& block : s.blocks()) {
            for (std::size_t i = 1; i < block.size(); ++i) {
                parent[static_cast<std::size_t>(find(block[i] - 1))] = find(block[0] - 1);
            }
        }
    };
    unite_blocks(p);
    unite_blocks(q);
    std::vector<int> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = find(static_cast<int>(i));
    return SetPartition::from_labels(labels);
}

bool refines(const SetPartition& p, const SetPartition& q) {
    if (p.size() != q.size()) return false;
    const auto q_labels = q.labels();
    for (const auto& block : p.blocks()) {
        const int label = q_labels[static_cast<std::size_t>(block.front() - 1)];
        for (int x : block) {
            if (q_labels[static_cast<std::size_t>(x - 1)] != label) return false;
        }
    }
    return true;
}

Rational mobius_to_top(const NcPartition& p) {
    Rational result = 1;
    const auto complement = kreweras(p);
    for (const auto& block : complement.blocks()) {
        const int s = static_cast<int>(block.size()) - 1;
        Rational factor(catalan(s));
        if (s % 2 == 1) factor = -factor;
        result *= factor;
    }
    return result;
}

}  // namespace ifree
