#pragma once

#include "ifree/ck_algebra.hpp"
#include "ifree/nc_partitions.hpp"

#include <optional>
#include <vector>

namespace ifree {

/// Images of the blocks of `p` (a partition of [(k+1)n]) under x -> ((x-1) mod n) + 1,
/// with duplicate images collapsed. The result is sorted and need not be a partition.
std::vector<Block> reduce_mod(const SetPartition& p, int n, int k);

/// The reduced collection when it is a partition of [n], nullopt otherwise.
std::optional<SetPartition> reduction_partition(const SetPartition& p, int n, int k);

/// Both Red(π) and Red(Kr(π)) are non-crossing partitions of [n]. Cross-checked against
/// the condition on Red(π ∪ Kr(π)); a disagreement throws PreconditionViolated.
bool is_type_k(const NcPartition& p, int n, int k);

/// Red(π ∪ Kr(π)) is a non-crossing partition of the interleaved set [n] ∪ [n̄].
bool satisfies_union_reduction(const NcPartition& p, int n, int k);

/// Red(t(π)(x)) = t(Red(π))(Red(x)) for every x. Requires Red(π) to be a partition.
bool satisfies_shift_condition(const NcPartition& p, int n, int k);

/// |V| / |Red(V)|.
int multiplicity(const Block& block, int n);

/// Element of NC^(k)(n) with its Kreweras complement, reduction and shape precomputed.
class TypeKPartition {
public:
    /// Throws InvalidArgument unless `partition` lives on [(k+1)n] and is of type k.
    TypeKPartition(NcPartition partition, int n, int k);

    int base_size() const { return n_; }
    int order() const { return k_; }
    const NcPartition& partition() const { return partition_; }
    const NcPartition& kreweras_complement() const { return kreweras_; }
    const NcPartition& reduction() const { return reduction_; }
    /// Shape indexed by the Mix order of Red(π) ∪ Kr(Red(π)); length n+1, sum k.
    const LambdaVector& shape() const { return shape_; }
    /// True when every block of Kr(π) is simple.
    bool is_star() const { return star_; }

    friend bool operator==(const TypeKPartition& a, const TypeKPartition& b) {
        return a.k_ == b.k_ && a.n_ == b.n_ && a.partition_ == b.partition_;
    }

private:
    int n_;
    int k_;
    NcPartition partition_;
    NcPartition kreweras_;
    NcPartition reduction_;
    LambdaVector shape_;
    bool star_ = true;
};

inline const LambdaVector& shape_of(const TypeKPartition& pi) { return pi.shape(); }

/// (1/((k+1)n+1)) * binom((n+1)(k+1), k+1).
Integer fiber_size_formula(int n, int k);

/// All π ∈ NC^(k)(n) with Red(π) = p, built by lifting t(p) class by class. Cached.
const std::vector<TypeKPartition>& type_k_fiber(const NcPartition& p, int k);

/// NC^(k)(n), grouped by reduction in the order of enumerate_nc(n).
std::vector<TypeKPartition> enumerate_type_k(int n, int k);

/// Number of π in the fiber over `reference` with shape λ. Throws InvalidArgument
/// unless λ ∈ Λ_{n+1,k} and `reference` lives on [n].
long r_of_shape(const LambdaVector& lambda, int n, int k, const NcPartition& reference);
/// Same count over the reference partition 1_n.
long r_of_shape(const LambdaVector& lambda, int n, int k);

/// Element of NC★^(k)(n) together with its shape restricted to the blocks of Red(π).
struct StarPartition {
    TypeKPartition partition;
    /// Blocks of Red(π) in ⊏ order.
    std::vector<Block> reduced_blocks;
    /// Entry j belongs to reduced_blocks[j]; an element of Λ_{|Red(π)|,k}.
    LambdaVector reduced_shape;
};

std::vector<StarPartition> enumerate_type_k_star(int n, int k);

/// Position of a signed index of [±n] in [2n]: i -> i, -i -> n + i.
int signed_to_linear(int signed_index, int n);
int linear_to_signed(int position, int n);
/// Blocks of a partition of [2n] that are invariant under x -> x ± n.
std::optional<Block> zero_block(const SetPartition& p, int n);
/// Invariance under the inversion map on [2n].
bool is_inversion_invariant(const SetPartition& p, int n);

}  // namespace ifree
