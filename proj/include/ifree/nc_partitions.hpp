#pragma once

#include "ifree/rational.hpp"

#include <compare>
#include <vector>

namespace ifree {

using Block = std::vector<int>;

/// Partition of {1, ..., n} in canonical form: each block sorted, blocks sorted by minimum.
class SetPartition {
public:
    SetPartition() = default;
    /// Validates disjointness and coverage, then canonicalizes. Throws InvalidArgument.
    SetPartition(int n, std::vector<Block> blocks);

    static SetPartition singletons(int n);
    static SetPartition full(int n);
    /// Partition whose blocks are the classes of `labels` (labels[x-1] names the class of x).
    static SetPartition from_labels(const std::vector<int>& labels);

    int size() const { return n_; }
    int num_blocks() const { return static_cast<int>(blocks_.size()); }
    const std::vector<Block>& blocks() const { return blocks_; }
    const Block& block(int index) const { return blocks_[static_cast<std::size_t>(index)]; }
    /// labels()[x-1] is the index of the block containing x.
    std::vector<int> labels() const;

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
    friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

private:
    int n_ = 0;
    std::vector<Block> blocks_;
};

bool is_noncrossing(const SetPartition& p);

/// A SetPartition known to be non-crossing.
class NcPartition : public SetPartition {
public:
    NcPartition() = default;
    /// Throws InvalidArgument when `p` has a crossing.
    explicit NcPartition(SetPartition p);
    NcPartition(int n, std::vector<Block> blocks) : NcPartition(SetPartition(n, std::move(blocks))) {}

    static NcPartition singletons(int n) { return NcPartition(SetPartition::singletons(n)); }
    static NcPartition full(int n) { return NcPartition(SetPartition::full(n)); }
};

/// Every element of NC(n) once, ordered lexicographically by block-label sequence.
/// The result is cached per n and shared.
const std::vector<NcPartition>& enumerate_nc(int n);

/// One-line permutation on {1..m}: perm[x-1] is the image of x.
using Permutation = std::vector<int>;

enum class KrewerasDirection { forward, inverse };

/// Kr(p) (forward) or its inverse Kr'(p), re-indexed so that the barred element x̄ becomes x.
NcPartition kreweras(const NcPartition& p, KrewerasDirection direction = KrewerasDirection::forward);

/// t(p): each block {a_1 < ... < a_j} becomes the cycle a_1 -> a_2 -> ... -> a_j -> a_1.
Permutation biane_permutation(const SetPartition& p);
/// Partition into the cycles of `perm`.
SetPartition cycle_partition(const Permutation& perm);
Permutation compose(const Permutation& outer, const Permutation& inner);
Permutation invert(const Permutation& perm);

/// The block V - 1 (mod m) for each block V.
NcPartition rotate_back(const NcPartition& p);

/// A block of p ∪ Kr(p), with barred elements marked.
struct OrderedBlock {
    Block elements;
    bool barred = false;

    friend bool operator==(const OrderedBlock&, const OrderedBlock&) = default;
};

struct OrderedBlocks {
    /// All blocks of p ∪ Kr(p) sorted by the nesting/left order.
    std::vector<OrderedBlock> mix;
    /// Blocks of p sorted, followed by blocks of Kr(p) sorted.
    std::vector<OrderedBlock> sep;
};

/// Block orders on the interleaved ground set 1 < 1̄ < 2 < 2̄ < ... < m < m̄.
OrderedBlocks ordered_blocks(const NcPartition& p);
/// V ⊏ W for blocks of p ∪ Kr(p), evaluated on the interleaved ground set.
bool block_precedes(const OrderedBlock& v, const OrderedBlock& w);

/// Finest common coarsening. Throws SizeMismatch for different ground sets.
SetPartition partition_join(const SetPartition& p, const SetPartition& q);
/// p ⪯ q in the refinement order (every block of p lies in a block of q).
bool refines(const SetPartition& p, const SetPartition& q);

/// Möb(p, 1_n) as a product over the blocks of Kr(p).
Rational mobius_to_top(const NcPartition& p);

}  // namespace ifree
