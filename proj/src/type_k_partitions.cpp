#include "ifree/type_k_partitions.hpp"

#include "ifree/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <utility>

namespace ifree {

namespace {

int reduce_element(int x, int n) { return (x - 1) % n + 1; }

Block reduce_block(const Block& block, int n) {
    Block image;
    image.reserve(block.size());
    for (int x : block) image.push_back(reduce_element(x, n));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    return image;
}

void check_ground_size(const SetPartition& p, int n, int k) {
    require(n >= 1 && k >= 0, ErrorKind::InvalidArgument, "type-k reduction needs n >= 1 and k >= 0");
    require(p.size() == (k + 1) * n, ErrorKind::InvalidArgument,
            "partition of size " + std::to_string(p.size()) + " is not on [(k+1)n] = [" +
                std::to_string((k + 1) * n) + "]");
}

std::optional<SetPartition> as_partition(std::vector<Block> images, int n) {
    std::size_t total = 0;
    for (const auto& b : images) total += b.size();
    if (total != static_cast<std::size_t>(n)) return std::nullopt;
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& b : images) {
        for (int x : b) {
            if (seen[static_cast<std::size_t>(x)]) return std::nullopt;
            seen[static_cast<std::size_t>(x)] = 1;
        }
    }
    return SetPartition(n, std::move(images));
}

bool is_nc_reduction(const SetPartition& p, int n, int k) {
    const auto red = reduction_partition(p, n, k);
    return red && is_noncrossing(*red);
}

}  // namespace

std::vector<Block> reduce_mod(const SetPartition& p, int n, int k) {
    check_ground_size(p, n, k);
    std::set<Block> images;
    for (const auto& block : p.blocks()) images.insert(reduce_block(block, n));
    return {images.begin(), images.end()};
}

std::optional<SetPartition> reduction_partition(const SetPartition& p, int n, int k) {
    return as_partition(reduce_mod(p, n, k), n);
}

bool satisfies_union_reduction(const NcPartition& p, int n, int k) {
    check_ground_size(p, n, k);
    // Interleave x -> 2x-1 and x̄ -> 2x; reduction mod 2n then matches reduction mod n
    // applied separately to plain and barred elements.
    std::vector<Block> blocks;
    for (const auto& b : p.blocks()) {
        Block mapped;
        for (int x : b) mapped.push_back(2 * x - 1);
        blocks.push_back(std::move(mapped));
    }
    const auto complement = kreweras(p);
    for (const auto& b : complement.blocks()) {
        Block mapped;
        for (int x : b) mapped.push_back(2 * x);
        blocks.push_back(std::move(mapped));
    }
    const SetPartition united(2 * p.size(), std::move(blocks));
    return is_nc_reduction(united, 2 * n, k);
}

bool is_type_k(const NcPartition& p, int n, int k) {
    check_ground_size(p, n, k);
    const bool both = is_nc_reduction(p, n, k) && is_nc_reduction(kreweras(p), n, k);
    if (both != satisfies_union_reduction(p, n, k)) {
        fail(ErrorKind::PreconditionViolated, "type-k membership tests disagree");
    }
    return both;
}

bool satisfies_shift_condition(const NcPartition& p, int n, int k) {
    const auto red = reduction_partition(p, n, k);
    require(red.has_value(), ErrorKind::PreconditionViolated, "reduction is not a partition of [n]");
    const auto lifted = biane_permutation(p);
    const auto reduced = biane_permutation(*red);
    for (int x = 1; x <= p.size(); ++x) {
        const int lhs = reduce_element(lifted[static_cast<std::size_t>(x - 1)], n);
        const int rhs = reduced[static_cast<std::size_t>(reduce_element(x, n) - 1)];
        if (lhs != rhs) return false;
    }
    return true;
}

int multiplicity(const Block& block, int n) {
    return static_cast<int>(block.size() / reduce_block(block, n).size());
}

TypeKPartition::TypeKPartition(NcPartition partition, int n, int k)
    : n_(n), k_(k), partition_(std::move(partition)) {
    require(is_type_k(partition_, n, k), ErrorKind::InvalidArgument, "partition is not of type k");
    kreweras_ = kreweras(partition_);
    reduction_ = NcPartition(*reduction_partition(partition_, n, k));
    shape_.entries.assign(static_cast<std::size_t>(n) + 1, 0);
    const auto mix = ordered_blocks(reduction_).mix;
    auto accumulate = [&](const NcPartition& part, bool barred) {
        for (const auto& block : part.blocks()) {
            const auto image = reduce_block(block, n);
            const int mult = static_cast<int>(block.size() / image.size());
            if (barred && mult > 1) star_ = false;
            const auto it = std::find(mix.begin(), mix.end(), OrderedBlock{image, barred});
            require(it != mix.end(), ErrorKind::PreconditionViolated, "block reduces outside Red(π) ∪ Kr(Red(π))");
            shape_.entries[static_cast<std::size_t>(it - mix.begin())] += mult - 1;
        }
    };
    accumulate(partition_, false);
    accumulate(kreweras_, true);
}

Integer fiber_size_formula(int n, int k) {
    return binomial((n + 1) * (k + 1), k + 1) / ((k + 1) * n + 1);
}

namespace {

struct FiberCache {
    std::mutex mutex;
    std::map<std::pair<int, SetPartition>, std::unique_ptr<const std::vector<TypeKPartition>>> fibers;
};

FiberCache& fiber_cache() {
    static FiberCache cache;
    return cache;
}

std::vector<TypeKPartition> lift_fiber(const NcPartition& p, int k) {
    // t(π) must carry the lifts {c, c+n, ..., c+kn} of each class c bijectively onto the
    // lifts of t(p)(c). Every such choice whose cycles trace a non-crossing partition in
    // increasing cyclic order is t(π) for a unique π in the fiber.
    const int n = p.size();
    const int width = k + 1;
    const auto reduced = biane_permutation(p);
    std::vector<std::vector<int>> arrangements;
    std::vector<int> arrangement(static_cast<std::size_t>(width));
    std::iota(arrangement.begin(), arrangement.end(), 0);
    do {
        arrangements.push_back(arrangement);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));

    std::vector<TypeKPartition> out;
    std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
    Permutation sigma(static_cast<std::size_t>(width * n));
    while (true) {
        for (int c = 1; c <= n; ++c) {
            const auto& arr = arrangements[choice[static_cast<std::size_t>(c - 1)]];
            const int target = reduced[static_cast<std::size_t>(c - 1)];
            for (int j = 0; j < width; ++j) {
                sigma[static_cast<std::size_t>(c + j * n - 1)] = target + arr[static_cast<std::size_t>(j)] * n;
            }
        }
        auto candidate = cycle_partition(sigma);
        if (biane_permutation(candidate) == sigma && is_noncrossing(candidate)) {
            NcPartition nc(std::move(candidate));
            if (!is_type_k(nc, n, k)) {
                fail(ErrorKind::PreconditionViolated, "lifted partition fails the reduction property");
            }
            out.emplace_back(std::move(nc), n, k);
            require(out.back().reduction() == p, ErrorKind::PreconditionViolated, "lifted partition has the wrong reduction");
        }
        std::size_t pos = 0;
        while (pos < choice.size() && ++choice[pos] == arrangements.size()) choice[pos++] = 0;
        if (pos == choice.size()) break;
    }
    std::sort(out.begin(), out.end(), [](const TypeKPartition& a, const TypeKPartition& b) {
        return a.partition() < b.partition();
    });
    return out;
}

}  // namespace

const std::vector<TypeKPartition>& type_k_fiber(const NcPartition& p, int k) {
    require(p.size() >= 1 && k >= 0, ErrorKind::InvalidArgument, "type-k fiber needs n >= 1 and k >= 0");
    auto& cache = fiber_cache();
    std::lock_guard lock(cache.mutex);
    auto& slot = cache.fibers[{k, p}];
    if (!slot) slot = std::make_unique<const std::vector<TypeKPartition>>(lift_fiber(p, k));
    return *slot;
}

std::vector<TypeKPartition> enumerate_type_k(int n, int k) {
    std::vector<TypeKPartition> out;
    for (const auto& p : enumerate_nc(n)) {
        const auto& fiber = type_k_fiber(p, k);
        out.insert(out.end(), fiber.begin(), fiber.end());
    }
    return out;
}

long r_of_shape(const LambdaVector& lambda, int n, int k, const NcPartition& reference) {
    require(reference.size() == n, ErrorKind::InvalidArgument, "reference partition is not on [n]");
    require(lambda.size() == n + 1 && lambda.sum() == k, ErrorKind::InvalidArgument,
            "shape is not in Lambda_{n+1,k}");
    for (int e : lambda.entries) require(e >= 0, ErrorKind::InvalidArgument, "shape entries must be non-negative");
    const auto& fiber = type_k_fiber(reference, k);
    static std::mutex mutex;
    static std::map<std::pair<int, SetPartition>, std::map<LambdaVector, long>> histograms;
    std::lock_guard lock(mutex);
    auto [it, fresh] = histograms.try_emplace({k, reference});
    if (fresh) {
        for (const auto& pi : fiber) ++it->second[pi.shape()];
    }
    const auto found = it->second.find(lambda);
    return found == it->second.end() ? 0 : found->second;
}

long r_of_shape(const LambdaVector& lambda, int n, int k) {
    return r_of_shape(lambda, n, k, NcPartition::full(n));
}

std::vector<StarPartition> enumerate_type_k_star(int n, int k) {
    std::vector<StarPartition> out;
    for (const auto& p : enumerate_nc(n)) {
        const auto mix = ordered_blocks(p).mix;
        for (const auto& pi : type_k_fiber(p, k)) {
            if (!pi.is_star()) continue;
            StarPartition star{pi, {}, {}};
            for (std::size_t i = 0; i < mix.size(); ++i) {
                if (mix[i].barred) continue;
                star.reduced_blocks.push_back(mix[i].elements);
                star.reduced_shape.entries.push_back(pi.shape()[static_cast<int>(i)]);
            }
            out.push_back(std::move(star));
        }
    }
    return out;
}

int signed_to_linear(int signed_index, int n) {
    require(signed_index != 0 && std::abs(signed_index) <= n, ErrorKind::InvalidArgument,
            "signed index outside [±" + std::to_string(n) + "]");
    return signed_index > 0 ? signed_index : n - signed_index;
}

int linear_to_signed(int position, int n) {
    require(position >= 1 && position <= 2 * n, ErrorKind::InvalidArgument,
            "position outside [" + std::to_string(2 * n) + "]");
    return position <= n ? position : n - position;
}

namespace {

Block invert_block(const Block& block, int n) {
    Block image;
    for (int x : block) image.push_back((x - 1 + n) % (2 * n) + 1);
    std::sort(image.begin(), image.end());
    return image;
}

}  // namespace

std::optional<Block> zero_block(const SetPartition& p, int n) {
    require(p.size() == 2 * n, ErrorKind::InvalidArgument, "type-B partition must live on [2n]");
    for (const auto& block : p.blocks()) {
        if (invert_block(block, n) == block) return block;
    }
    return std::nullopt;
}

bool is_inversion_invariant(const SetPartition& p, int n) {
    require(p.size() == 2 * n, ErrorKind::InvalidArgument, "type-B partition must live on [2n]");
    const std::set<Block> blocks(p.blocks().begin(), p.blocks().end());
    for (const auto& block : p.blocks()) {
        if (!blocks.contains(invert_block(block, n))) return false;
    }
    return true;
}

}  // namespace ifree
