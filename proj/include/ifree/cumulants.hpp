#pragma once

#include "ifree/ck_algebra.hpp"
#include "ifree/nc_partitions.hpp"

#include <map>
#include <span>
#include <vector>

namespace ifree {

/// Word over variables 1..num_vars.
using Word = std::vector<int>;

/// Dense map from every non-empty word of length <= max_len to a C_k value.
class WordTable {
public:
    WordTable(int k, int num_vars, int max_len);

    int order() const { return k_; }
    int num_vars() const { return num_vars_; }
    int max_len() const { return max_len_; }

    bool contains(const Word& word) const;
    const CkScalar& at(const Word& word) const;
    void set(const Word& word, CkScalar value);

    /// All stored words, shortest first and lexicographic within a length.
    std::vector<Word> words() const;

    friend bool operator==(const WordTable&, const WordTable&) = default;

private:
    std::size_t index_of(const Word& word) const;

    int k_;
    int num_vars_;
    int max_len_;
    std::vector<std::size_t> offsets_;
    std::vector<CkScalar> values_;
};

/// Joint infinitesimal law of order k: moment of each word; the empty word has moment 1.
class InfLaw {
public:
    InfLaw(int k, int num_vars, int max_len) : table_(k, num_vars, max_len) {}
    explicit InfLaw(WordTable table) : table_(std::move(table)) {}

    int order() const { return table_.order(); }
    int num_vars() const { return table_.num_vars(); }
    int max_len() const { return table_.max_len(); }
    CkScalar moment(const Word& word) const;
    void set_moment(const Word& word, CkScalar value) { table_.set(word, std::move(value)); }
    const WordTable& table() const { return table_; }

    friend bool operator==(const InfLaw&, const InfLaw&) = default;

private:
    WordTable table_;
};

/// κ̃ of each word: word (w_1..w_m) holds κ̃_m(a_{w_1}, ..., a_{w_m}).
class CumulantTable {
public:
    CumulantTable(int k, int num_vars, int max_len) : table_(k, num_vars, max_len) {}
    explicit CumulantTable(WordTable table) : table_(std::move(table)) {}

    int order() const { return table_.order(); }
    int num_vars() const { return table_.num_vars(); }
    int max_len() const { return table_.max_len(); }
    const CkScalar& cumulant(const Word& word) const { return table_.at(word); }
    void set_cumulant(const Word& word, CkScalar value) { table_.set(word, std::move(value)); }
    const WordTable& table() const { return table_; }

    friend bool operator==(const CumulantTable&, const CumulantTable&) = default;

private:
    WordTable table_;
};

/// All words over {1..num_vars} with 1 <= length <= max_len, shortest first.
std::vector<Word> all_words(int num_vars, int max_len);

/// (w_x)_{x in block}.
Word restrict_word(const Word& word, const Block& block);

CumulantTable moments_to_cumulants(const InfLaw& law);
InfLaw cumulants_to_moments(const CumulantTable& cumulants);

/// ∏_{V ∈ π} κ̃(w|V). Throws SizeMismatch when |w| differs from the ground set of π.
CkScalar kappa_pi(const CumulantTable& cumulants, const SetPartition& pi, const Word& word);
/// ∏_{V ∈ π} φ̃(w|V).
CkScalar moment_pi(const InfLaw& law, const SetPartition& pi, const Word& word);

/// κ̃_n of the products (a_{w_1}⋯a_{w_{s_1}}, ..., a_{w_{s_{n-1}+1}}⋯a_{w_s}), where
/// `grouping` lists the strictly increasing right ends s_1 < ... < s_n = |w|.
CkScalar cumulant_of_products(const CumulantTable& cumulants, const std::vector<int>& grouping,
                              const Word& word);

/// Coordinate i of a C_k value, which is the i-th infinitesimal functional itself.
Rational infinitesimal_component(const CkScalar& value, int i);
std::map<Word, Rational> infinitesimal_component(const CumulantTable& cumulants, int i);

/// φ^(i)(w) from the componentwise cumulants: Σ_p Σ_{λ ∈ Λ_{|p|,i}} C_i^λ ∏_j κ^(λ_j)(w|V_j).
Rational moment_component_from_cumulants(const CumulantTable& cumulants, const Word& word, int i);
/// κ^(i)(w) from the componentwise moments with Möbius weights.
Rational cumulant_component_from_moments(const InfLaw& law, const Word& word, int i);
/// φ^(i)(w) summed over NC★^(i)(|w|), weighted by C_i^λ / r(λ).
Rational moment_component_from_star(const CumulantTable& cumulants, const Word& word, int i);

/// κ^(i) of (a_{u_1} b_{v_1}, ..., a_{u_n} b_{v_n}) as a sum over NC^(i)(n) weighted by
/// C_i^λ / r(λ), where a-words come from `a_word` and b-words from `b_word` in one joint table.
Rational product_cumulant_component_from_type_k(const CumulantTable& cumulants, const Word& a_word,
                                                const Word& b_word, int i);

}  // namespace ifree
