#include "ifree/freeness.hpp"

#include "ifree/errors.hpp"

#include <algorithm>
#include <string>

namespace ifree {

NcPolynomial NcPolynomial::constant(const Rational& c) { return monomial({}, c); }

NcPolynomial NcPolynomial::variable(int index) {
    require(index >= 1, ErrorKind::InvalidArgument, "variables are numbered from 1");
    return monomial({index});
}

NcPolynomial NcPolynomial::monomial(Word word, const Rational& c) {
    NcPolynomial out;
    out.add_term(word, c);
    return out;
}

void NcPolynomial::add_term(const Word& word, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(word, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

int NcPolynomial::degree() const {
    int out = -1;
    for (const auto& [word, c] : terms_) out = std::max(out, static_cast<int>(word.size()));
    return out;
}

int NcPolynomial::max_variable() const {
    int out = 0;
    for (const auto& [word, c] : terms_) {
        for (int v : word) out = std::max(out, v);
    }
    return out;
}

NcPolynomial& NcPolynomial::operator+=(const NcPolynomial& other) {
    for (const auto& [word, c] : other.terms_) add_term(word, c);
    return *this;
}

NcPolynomial& NcPolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [word, coefficient] : terms_) coefficient *= c;
    return *this;
}

NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b) {
    NcPolynomial out;
    for (const auto& [left, c] : a.terms()) {
        for (const auto& [right, d] : b.terms()) {
            Word word = left;
            word.insert(word.end(), right.begin(), right.end());
            out.add_term(word, c * d);
        }
    }
    return out;
}

NcPolynomial Derivation::apply(const NcPolynomial& p) const {
    require(static_cast<int>(images.size()) == num_vars, ErrorKind::SizeMismatch,
            "derivation lists " + std::to_string(images.size()) + " images for " + std::to_string(num_vars) +
                " variables");
    NcPolynomial out;
    for (const auto& [word, c] : p.terms()) {
        for (std::size_t pos = 0; pos < word.size(); ++pos) {
            const int v = word[pos];
            require(v >= 1 && v <= num_vars, ErrorKind::InvalidArgument,
                    "variable " + std::to_string(v) + " has no image under the derivation");
            const Word prefix(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(pos));
            const Word suffix(word.begin() + static_cast<std::ptrdiff_t>(pos) + 1, word.end());
            for (const auto& [middle, d] : images[static_cast<std::size_t>(v - 1)].terms()) {
                Word term = prefix;
                term.insert(term.end(), middle.begin(), middle.end());
                term.insert(term.end(), suffix.begin(), suffix.end());
                out.add_term(term, c * d);
            }
        }
    }
    return out;
}

NcPolynomial apply_derivation(const Derivation& derivation, const NcPolynomial& p, int power) {
    require(power >= 0, ErrorKind::InvalidArgument, "derivation power must be non-negative");
    NcPolynomial out = p;
    for (int j = 0; j < power && !out.is_zero(); ++j) out = derivation.apply(out);
    return out;
}

namespace {

struct JointCumulants {
    CumulantTable cumulants;
    Coloring coloring;
};

JointCumulants joint_cumulants(std::span<const InfLaw> laws, int max_len) {
    require(!laws.empty(), ErrorKind::InvalidArgument, "free product of no laws");
    const int k = laws.front().order();
    Coloring coloring;
    std::vector<int> local_index;
    std::vector<CumulantTable> factors;
    for (std::size_t c = 0; c < laws.size(); ++c) {
        const auto& law = laws[c];
        require(law.order() == k, ErrorKind::OrderMismatch, "free product of laws with different orders");
        require(law.max_len() >= max_len, ErrorKind::InsufficientSupport,
                "factor " + std::to_string(c + 1) + " stores words up to length " + std::to_string(law.max_len()) +
                    ", need " + std::to_string(max_len));
        for (int v = 1; v <= law.num_vars(); ++v) {
            coloring.push_back(static_cast<int>(c) + 1);
            local_index.push_back(v);
        }
        factors.push_back(moments_to_cumulants(law));
    }
    const int total = static_cast<int>(coloring.size());
    CumulantTable cumulants(k, total, max_len);
    for (const auto& word : all_words(total, max_len)) {
        const int colour = coloring[static_cast<std::size_t>(word.front() - 1)];
        Word local;
        bool pure = true;
        for (int v : word) {
            if (coloring[static_cast<std::size_t>(v - 1)] != colour) {
                pure = false;
                break;
            }
            local.push_back(local_index[static_cast<std::size_t>(v - 1)]);
        }
        if (pure) cumulants.set_cumulant(word, factors[static_cast<std::size_t>(colour - 1)].cumulant(local));
    }
    return {std::move(cumulants), std::move(coloring)};
}

void require_coloring(const Coloring& coloring, int num_vars) {
    require(static_cast<int>(coloring.size()) == num_vars, ErrorKind::SizeMismatch,
            "coloring has " + std::to_string(coloring.size()) + " entries for " + std::to_string(num_vars) +
                " variables");
}

}  // namespace

JointLaw free_product_joint(std::span<const InfLaw> laws, int max_len) {
    auto joint = joint_cumulants(laws, max_len);
    return {cumulants_to_moments(joint.cumulants), std::move(joint.coloring)};
}

CkScalar evaluate(const InfLaw& law, const NcPolynomial& p) {
    CkScalar sum(law.order());
    for (const auto& [word, c] : p.terms()) {
        require(static_cast<int>(word.size()) <= law.max_len(), ErrorKind::InsufficientSupport,
                "evaluation needs a word of length " + std::to_string(word.size()) + ", the law stores up to " +
                    std::to_string(law.max_len()));
        sum += law.moment(word) * c;
    }
    return sum;
}

InfLaw polynomial_law(const InfLaw& law, std::span<const NcPolynomial> generators, int max_len) {
    require(!generators.empty(), ErrorKind::InvalidArgument, "polynomial law needs at least one generator");
    int widest = 0;
    for (const auto& g : generators) {
        require(g.max_variable() <= law.num_vars(), ErrorKind::InvalidArgument,
                "generator uses a variable outside the law");
        widest = std::max(widest, g.degree());
    }
    require(widest * max_len <= law.max_len(), ErrorKind::InsufficientSupport,
            "generators of degree " + std::to_string(widest) + " up to length " + std::to_string(max_len) +
                " need words of length " + std::to_string(widest * max_len) + ", the law stores up to " +
                std::to_string(law.max_len()));
    InfLaw out(law.order(), static_cast<int>(generators.size()), max_len);
    for (const auto& word : all_words(out.num_vars(), max_len)) {
        NcPolynomial product = NcPolynomial::constant(1);
        for (int v : word) product = product * generators[static_cast<std::size_t>(v - 1)];
        out.set_moment(word, evaluate(law, product));
    }
    return out;
}

InfLaw sum_tuple_law(const InfLaw& mu, const InfLaw& nu) {
    require(mu.order() == nu.order(), ErrorKind::OrderMismatch, "laws have different orders");
    require(mu.num_vars() == nu.num_vars(), ErrorKind::SizeMismatch, "tuples have different lengths");
    require(mu.max_len() == nu.max_len(), ErrorKind::SizeMismatch, "laws have different truncations");
    const auto a = moments_to_cumulants(mu);
    const auto b = moments_to_cumulants(nu);
    CumulantTable sum(mu.order(), mu.num_vars(), mu.max_len());
    for (const auto& word : all_words(mu.num_vars(), mu.max_len())) sum.set_cumulant(word, a.cumulant(word) + b.cumulant(word));
    return cumulants_to_moments(sum);
}

CumulantTable product_tuple_cumulants(const CumulantTable& joint, const Coloring& coloring) {
    require_coloring(coloring, joint.num_vars());
    std::vector<int> a_vars;
    std::vector<int> b_vars;
    for (int v = 1; v <= joint.num_vars(); ++v) {
        const int colour = coloring[static_cast<std::size_t>(v - 1)];
        require(colour == 1 || colour == 2, ErrorKind::InvalidArgument,
                "product tuples need colours 1 and 2, got " + std::to_string(colour));
        (colour == 1 ? a_vars : b_vars).push_back(v);
    }
    require(!a_vars.empty() && a_vars.size() == b_vars.size(), ErrorKind::SizeMismatch,
            "the two tuples must have the same non-zero length");
    for (const auto& word : all_words(joint.num_vars(), joint.max_len())) {
        const int colour = coloring[static_cast<std::size_t>(word.front() - 1)];
        const bool mixed = std::any_of(word.begin(), word.end(),
                                       [&](int v) { return coloring[static_cast<std::size_t>(v - 1)] != colour; });
        require(!mixed || joint.cumulant(word).is_zero(), ErrorKind::PreconditionViolated,
                "a mixed cumulant is non-zero, the tuples are not free");
    }
    const int n = static_cast<int>(a_vars.size());
    std::vector<std::vector<SetPartition>> complements(static_cast<std::size_t>(joint.max_len()) + 1);
    for (int m = 1; m <= joint.max_len(); ++m) {
        for (const auto& p : enumerate_nc(m)) complements[static_cast<std::size_t>(m)].push_back(kreweras(p));
    }
    CumulantTable out(joint.order(), n, joint.max_len());
    for (const auto& word : all_words(n, joint.max_len())) {
        Word a_word;
        Word b_word;
        for (int u : word) {
            a_word.push_back(a_vars[static_cast<std::size_t>(u - 1)]);
            b_word.push_back(b_vars[static_cast<std::size_t>(u - 1)]);
        }
        const auto& partitions = enumerate_nc(static_cast<int>(word.size()));
        const auto& kr = complements[word.size()];
        CkScalar sum(joint.order());
        for (std::size_t j = 0; j < partitions.size(); ++j) {
            const auto left = kappa_pi(joint, partitions[j], a_word);
            if (left.is_zero()) continue;
            sum += ck_mul(left, kappa_pi(joint, kr[j], b_word));
        }
        out.set_cumulant(word, std::move(sum));
    }
    return out;
}

InfLaw product_tuple_law(const InfLaw& mu, const InfLaw& nu) {
    require(mu.num_vars() == nu.num_vars(), ErrorKind::SizeMismatch, "tuples have different lengths");
    require(mu.max_len() == nu.max_len(), ErrorKind::SizeMismatch, "laws have different truncations");
    const std::vector<InfLaw> factors{mu, nu};
    const auto joint = joint_cumulants(factors, mu.max_len());
    return cumulants_to_moments(product_tuple_cumulants(joint.cumulants, joint.coloring));
}

Verdict check_inf_freeness(const InfLaw& joint, const Coloring& coloring, int max_len) {
    require_coloring(coloring, joint.num_vars());
    require(max_len >= 1, ErrorKind::InvalidArgument, "length budget must be at least 1");
    require(max_len <= joint.max_len(), ErrorKind::InsufficientSupport,
            "length budget " + std::to_string(max_len) + " exceeds the stored length " +
                std::to_string(joint.max_len()));
    const int k = joint.order();
    for (const auto& word : all_words(joint.num_vars(), max_len)) {
        std::vector<Word> runs;
        for (std::size_t pos = 0; pos < word.size(); ++pos) {
            const bool fresh = pos == 0 || coloring[static_cast<std::size_t>(word[pos] - 1)] !=
                                               coloring[static_cast<std::size_t>(word[pos - 1] - 1)];
            if (fresh) runs.emplace_back();
            runs.back().push_back(word[pos]);
        }
        if (runs.size() < 2) continue;
        std::vector<CkScalar> negated_means;
        for (const auto& run : runs) negated_means.push_back(joint.moment(run) * Rational(-1));
        CkScalar value(k);
        const std::size_t subsets = std::size_t{1} << runs.size();
        for (std::size_t mask = 0; mask < subsets; ++mask) {
            Word kept;
            CkScalar weight = CkScalar::unit(k);
            for (std::size_t j = 0; j < runs.size(); ++j) {
                if (mask >> j & 1U) {
                    kept.insert(kept.end(), runs[j].begin(), runs[j].end());
                } else {
                    weight = ck_mul(weight, negated_means[j]);
                }
            }
            if (!weight.is_zero()) value += ck_mul(weight, joint.moment(kept));
        }
        for (int i = 0; i <= k; ++i) {
            if (value[i] != 0) return {false, FreenessWitness{word, runs, i, value[i]}};
        }
    }
    return {};
}

InfLaw upgraded_law(const InfLaw& base, const Derivation& derivation, int k, int max_len) {
    require(base.order() == 0, ErrorKind::OrderMismatch, "the base law must have order 0");
    require(k >= 0, ErrorKind::InvalidArgument, "order must be non-negative");
    require(derivation.num_vars == base.num_vars(), ErrorKind::SizeMismatch,
            "derivation and law have different numbers of variables");
    int growth = 0;
    for (const auto& image : derivation.images) {
        require(image.max_variable() <= base.num_vars(), ErrorKind::InvalidArgument,
                "derivation image uses a variable outside the law");
        growth = std::max(growth, image.degree() - 1);
    }
    const int needed = max_len + k * growth;
    require(needed <= base.max_len(), ErrorKind::InsufficientSupport,
            "upgrading to order " + std::to_string(k) + " up to length " + std::to_string(max_len) +
                " needs base moments up to length " + std::to_string(needed) + ", the law stores up to " +
                std::to_string(base.max_len()));
    InfLaw out(k, base.num_vars(), max_len);
    for (const auto& word : all_words(base.num_vars(), max_len)) {
        std::vector<Rational> coords;
        auto current = NcPolynomial::monomial(word);
        for (int i = 0; i <= k; ++i) {
            coords.push_back(evaluate(base, current)[0]);
            if (i < k) current = derivation.apply(current);
        }
        out.set_moment(word, CkScalar(std::move(coords)));
    }
    return out;
}

Rational cumulant_of_polynomials(const InfLaw& law, std::span<const NcPolynomial> arguments) {
    require(law.order() == 0, ErrorKind::OrderMismatch, "polynomial cumulants need an order-0 law");
    require(!arguments.empty(), ErrorKind::InvalidArgument, "cumulant of no arguments");
    Rational total = 0;
    for (const auto& p : enumerate_nc(static_cast<int>(arguments.size()))) {
        Rational term = mobius_to_top(p);
        for (const auto& block : p.blocks()) {
            if (term == 0) break;
            NcPolynomial product = NcPolynomial::constant(1);
            for (int x : block) product = product * arguments[static_cast<std::size_t>(x - 1)];
            term *= evaluate(law, product)[0];
        }
        total += term;
    }
    return total;
}

InfLaw derivative_of_convolution(const InfLaw& mu, const InfLaw& nu, ConvolutionMode mode) {
    return mode == ConvolutionMode::additive ? additive_convolve(mu, nu) : multiplicative_convolve(mu, nu);
}

InfLaw law_at_t(const InfLaw& derivatives, const Rational& t) {
    InfLaw out(0, derivatives.num_vars(), derivatives.max_len());
    for (const auto& word : all_words(derivatives.num_vars(), derivatives.max_len())) {
        const auto value = derivatives.moment(word);
        Rational sum = 0;
        Rational power = 1;
        for (int i = 0; i <= value.order(); ++i) {
            sum += value[i] * power / Rational(factorial(i));
            power *= t;
        }
        out.set_moment(word, CkScalar{sum});
    }
    return out;
}

}  // namespace ifree
