#include "ifree/cumulants.hpp"

#include "ifree/errors.hpp"
#include "ifree/type_k_partitions.hpp"

#include <string>

namespace ifree {

WordTable::WordTable(int k, int num_vars, int max_len) : k_(k), num_vars_(num_vars), max_len_(max_len) {
    require(k >= 0, ErrorKind::InvalidArgument, "order must be non-negative");
    require(num_vars >= 1, ErrorKind::InvalidArgument, "a law needs at least one variable");
    require(max_len >= 1, ErrorKind::InvalidArgument, "word-length truncation must be at least 1");
    offsets_.assign(static_cast<std::size_t>(max_len) + 2, 0);
    std::size_t count = 1;
    for (int len = 1; len <= max_len; ++len) {
        count *= static_cast<std::size_t>(num_vars);
        offsets_[static_cast<std::size_t>(len) + 1] = offsets_[static_cast<std::size_t>(len)] + count;
    }
    values_.assign(offsets_.back(), CkScalar(k));
}

bool WordTable::contains(const Word& word) const {
    if (word.empty() || static_cast<int>(word.size()) > max_len_) return false;
    for (int v : word) {
        if (v < 1 || v > num_vars_) return false;
    }
    return true;
}

std::size_t WordTable::index_of(const Word& word) const {
    if (!contains(word)) {
        std::string text;
        for (int v : word) text += (text.empty() ? "" : ",") + std::to_string(v);
        fail(ErrorKind::InvalidArgument, "word \"" + text + "\" is outside the table (" + std::to_string(num_vars_) +
                                             " variables, length <= " + std::to_string(max_len_) + ")");
    }
    std::size_t index = 0;
    for (int v : word) index = index * static_cast<std::size_t>(num_vars_) + static_cast<std::size_t>(v - 1);
    return offsets_[word.size()] + index;
}

const CkScalar& WordTable::at(const Word& word) const { return values_[index_of(word)]; }

void WordTable::set(const Word& word, CkScalar value) {
    require(value.order() == k_, ErrorKind::OrderMismatch, "table entry has the wrong C_k order");
    values_[index_of(word)] = std::move(value);
}

std::vector<Word> WordTable::words() const { return all_words(num_vars_, max_len_); }

CkScalar InfLaw::moment(const Word& word) const {
    if (word.empty()) return CkScalar::unit(order());
    return table_.at(word);
}

std::vector<Word> all_words(int num_vars, int max_len) {
    std::vector<Word> out;
    for (int len = 1; len <= max_len; ++len) {
        Word w(static_cast<std::size_t>(len), 1);
        while (true) {
            out.push_back(w);
            int pos = len - 1;
            while (pos >= 0 && w[static_cast<std::size_t>(pos)] == num_vars) w[static_cast<std::size_t>(pos--)] = 1;
            if (pos < 0) break;
            ++w[static_cast<std::size_t>(pos)];
        }
    }
    return out;
}

Word restrict_word(const Word& word, const Block& block) {
    Word out;
    out.reserve(block.size());
    for (int x : block) out.push_back(word[static_cast<std::size_t>(x - 1)]);
    return out;
}

namespace {

void check_word_size(const SetPartition& pi, const Word& word) {
    require(static_cast<int>(word.size()) == pi.size(), ErrorKind::SizeMismatch,
            "word of length " + std::to_string(word.size()) + " against a partition of [" + std::to_string(pi.size()) +
                "]");
}

}  // namespace

CkScalar kappa_pi(const CumulantTable& cumulants, const SetPartition& pi, const Word& word) {
    check_word_size(pi, word);
    CkScalar acc = CkScalar::unit(cumulants.order());
    for (const auto& block : pi.blocks()) {
        const auto& factor = cumulants.cumulant(restrict_word(word, block));
        if (factor.is_zero()) return CkScalar(cumulants.order());
        acc = ck_mul(acc, factor);
    }
    return acc;
}

CkScalar moment_pi(const InfLaw& law, const SetPartition& pi, const Word& word) {
    check_word_size(pi, word);
    CkScalar acc = CkScalar::unit(law.order());
    for (const auto& block : pi.blocks()) acc = ck_mul(acc, law.moment(restrict_word(word, block)));
    return acc;
}

InfLaw cumulants_to_moments(const CumulantTable& cumulants) {
    InfLaw law(cumulants.order(), cumulants.num_vars(), cumulants.max_len());
    for (const auto& word : all_words(cumulants.num_vars(), cumulants.max_len())) {
        CkScalar sum(cumulants.order());
        for (const auto& p : enumerate_nc(static_cast<int>(word.size()))) sum += kappa_pi(cumulants, p, word);
        law.set_moment(word, std::move(sum));
    }
    return law;
}

CumulantTable moments_to_cumulants(const InfLaw& law) {
    CumulantTable out(law.order(), law.num_vars(), law.max_len());
    std::vector<std::vector<Rational>> weights(static_cast<std::size_t>(law.max_len()) + 1);
    for (int n = 1; n <= law.max_len(); ++n) {
        for (const auto& p : enumerate_nc(n)) weights[static_cast<std::size_t>(n)].push_back(mobius_to_top(p));
    }
    for (const auto& word : all_words(law.num_vars(), law.max_len())) {
        const auto n = word.size();
        const auto& partitions = enumerate_nc(static_cast<int>(n));
        CkScalar sum(law.order());
        for (std::size_t j = 0; j < partitions.size(); ++j) {
            sum += moment_pi(law, partitions[j], word) * weights[n][j];
        }
        out.set_cumulant(word, std::move(sum));
    }
    return out;
}

CkScalar cumulant_of_products(const CumulantTable& cumulants, const std::vector<int>& grouping,
                              const Word& word) {
    require(!grouping.empty(), ErrorKind::InvalidArgument, "grouping must be non-empty");
    int previous = 0;
    std::vector<Block> intervals;
    for (int end : grouping) {
        require(end > previous, ErrorKind::InvalidArgument, "grouping must be strictly increasing and positive");
        Block interval;
        for (int x = previous + 1; x <= end; ++x) interval.push_back(x);
        intervals.push_back(std::move(interval));
        previous = end;
    }
    require(previous == static_cast<int>(word.size()), ErrorKind::InvalidArgument,
            "grouping must end at the word length");
    const int s = previous;
    const SetPartition theta(s, std::move(intervals));
    const auto top = SetPartition::full(s);
    CkScalar sum(cumulants.order());
    for (const auto& pi : enumerate_nc(s)) {
        if (partition_join(pi, theta) == top) sum += kappa_pi(cumulants, pi, word);
    }
    return sum;
}

Rational infinitesimal_component(const CkScalar& value, int i) {
    require(i >= 0 && i <= value.order(), ErrorKind::InvalidArgument,
            "component " + std::to_string(i) + " outside 0.." + std::to_string(value.order()));
    return value[i];
}

std::map<Word, Rational> infinitesimal_component(const CumulantTable& cumulants, int i) {
    std::map<Word, Rational> out;
    for (const auto& word : all_words(cumulants.num_vars(), cumulants.max_len())) {
        out.emplace(word, infinitesimal_component(cumulants.cumulant(word), i));
    }
    return out;
}

namespace {

/// Σ_{λ ∈ Λ_{h,i}} C_i^λ ∏_j component(j, λ_j), with h = number of factors.
template <class Component>
Rational leibniz_sum(int factors, int i, const Component& component) {
    Rational total = 0;
    for_each_lambda(factors, i, [&](const LambdaVector& lambda) {
        Rational term(multinomial(lambda));
        for (int j = 0; j < factors && term != 0; ++j) term *= component(j, lambda[j]);
        total += term;
    });
    return total;
}

void check_component(int order, int i) {
    require(i >= 0 && i <= order, ErrorKind::InvalidArgument,
            "component " + std::to_string(i) + " outside 0.." + std::to_string(order));
}

}  // namespace

Rational moment_component_from_cumulants(const CumulantTable& cumulants, const Word& word, int i) {
    check_component(cumulants.order(), i);
    Rational total = 0;
    for (const auto& p : enumerate_nc(static_cast<int>(word.size()))) {
        const auto& blocks = p.blocks();
        total += leibniz_sum(p.num_blocks(), i, [&](int j, int order) {
            return cumulants.cumulant(restrict_word(word, blocks[static_cast<std::size_t>(j)]))[order];
        });
    }
    return total;
}

Rational cumulant_component_from_moments(const InfLaw& law, const Word& word, int i) {
    check_component(law.order(), i);
    Rational total = 0;
    for (const auto& p : enumerate_nc(static_cast<int>(word.size()))) {
        const auto& blocks = p.blocks();
        total += mobius_to_top(p) * leibniz_sum(p.num_blocks(), i, [&](int j, int order) {
                     return law.moment(restrict_word(word, blocks[static_cast<std::size_t>(j)]))[order];
                 });
    }
    return total;
}

Rational moment_component_from_star(const CumulantTable& cumulants, const Word& word, int i) {
    check_component(cumulants.order(), i);
    const int n = static_cast<int>(word.size());
    Rational total = 0;
    for (const auto& star : enumerate_type_k_star(n, i)) {
        const auto& reduction = star.partition.reduction();
        const long r = r_of_shape(star.partition.shape(), n, i, reduction);
        Rational term(multinomial(star.reduced_shape));
        term /= r;
        for (std::size_t j = 0; j < star.reduced_blocks.size() && term != 0; ++j) {
            term *= cumulants.cumulant(restrict_word(word, star.reduced_blocks[j]))[star.reduced_shape.entries[j]];
        }
        total += term;
    }
    return total;
}

Rational product_cumulant_component_from_type_k(const CumulantTable& cumulants, const Word& a_word,
                                                const Word& b_word, int i) {
    check_component(cumulants.order(), i);
    require(a_word.size() == b_word.size() && !a_word.empty(), ErrorKind::SizeMismatch,
            "product tuples need equal, non-zero lengths");
    const int n = static_cast<int>(a_word.size());
    Rational total = 0;
    for (const auto& p : enumerate_nc(n)) {
        const auto mix = ordered_blocks(p).mix;
        for (const auto& pi : type_k_fiber(p, i)) {
            const auto& shape = pi.shape();
            Rational term(multinomial(shape));
            term /= r_of_shape(shape, n, i, p);
            for (std::size_t j = 0; j < mix.size() && term != 0; ++j) {
                const auto& source = mix[j].barred ? b_word : a_word;
                term *= cumulants.cumulant(restrict_word(source, mix[j].elements))[shape.entries[j]];
            }
            total += term;
        }
    }
    return total;
}

}  // namespace ifree
