#include "ifree/json_io.hpp"

#include "ifree/errors.hpp"

#include <initializer_list>

namespace ifree {

namespace {

constexpr std::size_t kMaxTableWords = 2'000'000;

[[noreturn]] void schema_error(const std::string& path, const std::string& message) {
    fail(ErrorKind::Schema, path + ": " + message);
}

std::string child(const std::string& path, const std::string& key) { return path + "." + key; }
std::string child(const std::string& path, std::size_t index) { return path + "[" + std::to_string(index) + "]"; }

void require_object(const Json& doc, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!doc.is_object()) schema_error(path, "expected an object");
    for (const auto& [key, value] : doc.items()) {
        bool known = false;
        for (const char* name : allowed) known = known || key == name;
        if (!known) schema_error(child(path, key), "unknown key");
    }
}

const Json& field(const Json& doc, const char* key, const std::string& path) {
    const auto it = doc.find(key);
    if (it == doc.end()) schema_error(child(path, key), "missing");
    return *it;
}

int int_value(const Json& doc, const std::string& path, int minimum) {
    if (!doc.is_number_integer()) schema_error(path, "expected an integer");
    const auto value = doc.get<long long>();
    if (value < minimum || value > 1'000'000) schema_error(path, "integer " + std::to_string(value) + " out of range");
    return static_cast<int>(value);
}

int int_field(const Json& doc, const char* key, const std::string& path, int minimum) {
    return int_value(field(doc, key, path), child(path, key), minimum);
}

const Json& array_field(const Json& doc, const char* key, const std::string& path) {
    const auto& value = field(doc, key, path);
    if (!value.is_array()) schema_error(child(path, key), "expected an array");
    return value;
}

/// Runs `body`, re-raising library errors as schema errors at `path`.
template <class Body>
auto at_path(const std::string& path, Body&& body) {
    try {
        return body();
    } catch (const Error& e) {
        schema_error(path, e.what());
    }
}

Json encode_table(const WordTable& table, const char* key) {
    Json entries = Json::object();
    for (const auto& word : table.words()) entries[word_key(word)] = encode(table.at(word));
    return Json{{"k", table.order()}, {"num_vars", table.num_vars()}, {"max_len", table.max_len()}, {key, entries}};
}

WordTable decode_table(const Json& doc, const std::string& path, const char* key) {
    require_object(doc, path, {"k", "num_vars", "max_len", key});
    const int k = int_field(doc, "k", path, 0);
    const int num_vars = int_field(doc, "num_vars", path, 1);
    const int max_len = int_field(doc, "max_len", path, 1);
    std::size_t total = 0;
    std::size_t layer = 1;
    for (int len = 1; len <= max_len; ++len) {
        layer *= static_cast<std::size_t>(num_vars);
        total += layer;
        if (total > kMaxTableWords) schema_error(path, "table of " + std::to_string(num_vars) + " variables up to length " + std::to_string(max_len) + " is too large");
    }
    const auto& entries = field(doc, key, path);
    const auto entries_path = child(path, key);
    if (!entries.is_object()) schema_error(entries_path, "expected an object keyed by words");
    WordTable table(k, num_vars, max_len);
    for (const auto& [text, value] : entries.items()) {
        const auto entry_path = child(entries_path, "\"" + text + "\"");
        const auto word = parse_word_key(text, entry_path);
        if (!table.contains(word)) schema_error(entry_path, "word outside the table");
        table.set(word, decode_scalar(value, entry_path, k));
    }
    if (entries.size() != total) {
        for (const auto& word : table.words()) {
            if (!entries.contains(word_key(word))) schema_error(child(entries_path, "\"" + word_key(word) + "\""), "missing");
        }
    }
    return table;
}

}  // namespace

Json encode(const Rational& value) { return to_string(value); }

Json encode(const CkScalar& value) {
    Json out = Json::array();
    for (const auto& c : value.coords()) out.push_back(encode(c));
    return out;
}

Json encode(const CkSeries& series) {
    Json coeffs = Json::array();
    for (const auto& c : series.coeffs()) coeffs.push_back(encode(c));
    Json out{{"k", series.order()}, {"trunc", series.trunc()}, {"coeffs", coeffs}};
    if (series.has_constant_term()) out["const"] = encode(series.constant_term());
    return out;
}

Json encode(const SetPartition& partition) { return Json{{"n", partition.size()}, {"blocks", partition.blocks()}}; }

Json encode(const TypeKPartition& partition) {
    return Json{{"n", partition.base_size()},
                {"k", partition.order()},
                {"blocks", partition.partition().blocks()},
                {"reduction", encode(partition.reduction())},
                {"shape", partition.shape().entries}};
}

Json encode(const InfLaw& law) { return encode_table(law.table(), "moments"); }

Json encode(const CumulantTable& cumulants) { return encode_table(cumulants.table(), "cumulants"); }

Json encode(const NcPolynomial& polynomial) {
    Json out = Json::object();
    for (const auto& [word, c] : polynomial.terms()) out[word_key(word)] = encode(c);
    return out;
}

Json encode(const Derivation& derivation) {
    Json images = Json::array();
    for (const auto& image : derivation.images) images.push_back(encode(image));
    return Json{{"num_vars", derivation.num_vars}, {"images", images}};
}

Json encode(const Verdict& verdict) {
    Json witness = nullptr;
    if (verdict.witness) {
        witness = Json{{"word", verdict.witness->word},
                       {"component", verdict.witness->component},
                       {"value", encode(verdict.witness->value)}};
    }
    return Json{{"pass", verdict.pass}, {"witness", witness}};
}

Json encode_coloring(const Coloring& coloring) { return Json(coloring); }

std::string word_key(const Word& word) {
    std::string out;
    for (std::size_t j = 0; j < word.size(); ++j) {
        if (j > 0) out += ',';
        out += std::to_string(word[j]);
    }
    return out;
}

Word parse_word_key(const std::string& key, const std::string& path) {
    Word out;
    if (key.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = key.find(',', start);
        const auto piece = key.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        const bool digits = !piece.empty() && piece.size() <= 6 && piece.front() != '0' &&
                            piece.find_first_not_of("0123456789") == std::string::npos;
        if (!digits) schema_error(path, "malformed word key \"" + key + "\"");
        out.push_back(std::stoi(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

Rational decode_rational(const Json& doc, const std::string& path) {
    if (!doc.is_string()) schema_error(path, "expected a rational string");
    return at_path(path, [&] { return parse_rational(doc.get<std::string>()); });
}

CkScalar decode_scalar(const Json& doc, const std::string& path, int expected_order) {
    if (!doc.is_array() || doc.empty()) schema_error(path, "expected a non-empty array of rationals");
    if (expected_order >= 0 && doc.size() != static_cast<std::size_t>(expected_order) + 1) {
        schema_error(path, "expected " + std::to_string(expected_order + 1) + " coordinates, got " + std::to_string(doc.size()));
    }
    std::vector<Rational> coords;
    for (std::size_t i = 0; i < doc.size(); ++i) coords.push_back(decode_rational(doc[i], child(path, i)));
    return CkScalar(std::move(coords));
}

CkSeries decode_series(const Json& doc, const std::string& path) {
    require_object(doc, path, {"k", "trunc", "const", "coeffs"});
    const int k = int_field(doc, "k", path, 0);
    const int trunc = int_field(doc, "trunc", path, 0);
    const auto& coeffs = array_field(doc, "coeffs", path);
    if (coeffs.size() != static_cast<std::size_t>(trunc)) {
        schema_error(child(path, "coeffs"), "expected " + std::to_string(trunc) + " coefficients, got " + std::to_string(coeffs.size()));
    }
    std::vector<CkScalar> values;
    for (std::size_t d = 0; d < coeffs.size(); ++d) values.push_back(decode_scalar(coeffs[d], child(child(path, "coeffs"), d), k));
    CkScalar constant(k);
    if (doc.contains("const")) constant = decode_scalar(doc["const"], child(path, "const"), k);
    return CkSeries(k, std::move(constant), std::move(values));
}

SetPartition decode_partition(const Json& doc, const std::string& path) {
    require_object(doc, path, {"n", "blocks"});
    const int n = int_field(doc, "n", path, 1);
    const auto& blocks_doc = array_field(doc, "blocks", path);
    std::vector<Block> blocks;
    for (std::size_t b = 0; b < blocks_doc.size(); ++b) {
        const auto block_path = child(child(path, "blocks"), b);
        if (!blocks_doc[b].is_array()) schema_error(block_path, "expected an array of elements");
        Block block;
        for (std::size_t j = 0; j < blocks_doc[b].size(); ++j) block.push_back(int_value(blocks_doc[b][j], child(block_path, j), 1));
        blocks.push_back(std::move(block));
    }
    return at_path(path, [&] { return SetPartition(n, std::move(blocks)); });
}

TypeKPartition decode_type_k(const Json& doc, const std::string& path) {
    require_object(doc, path, {"n", "k", "blocks", "reduction", "shape"});
    const int n = int_field(doc, "n", path, 1);
    const int k = int_field(doc, "k", path, 0);
    const auto ground = decode_partition(Json{{"n", (k + 1) * n}, {"blocks", array_field(doc, "blocks", path)}}, path);
    auto out = at_path(path, [&] { return TypeKPartition(NcPartition(ground), n, k); });
    if (doc.contains("reduction") && decode_partition(doc["reduction"], child(path, "reduction")) != out.reduction()) {
        schema_error(child(path, "reduction"), "does not match the reduction of the blocks");
    }
    if (doc.contains("shape")) {
        const auto& shape = doc["shape"];
        if (!shape.is_array()) schema_error(child(path, "shape"), "expected an array of integers");
        std::vector<int> entries;
        for (std::size_t j = 0; j < shape.size(); ++j) entries.push_back(int_value(shape[j], child(child(path, "shape"), j), 0));
        if (entries != out.shape().entries) schema_error(child(path, "shape"), "does not match the shape of the blocks");
    }
    return out;
}

InfLaw decode_law(const Json& doc, const std::string& path) { return InfLaw(decode_table(doc, path, "moments")); }

CumulantTable decode_cumulants(const Json& doc, const std::string& path) {
    return CumulantTable(decode_table(doc, path, "cumulants"));
}

NcPolynomial decode_polynomial(const Json& doc, const std::string& path) {
    if (!doc.is_object()) schema_error(path, "expected an object keyed by words");
    NcPolynomial out;
    for (const auto& [text, value] : doc.items()) {
        const auto entry_path = child(path, "\"" + text + "\"");
        const auto word = parse_word_key(text, entry_path);
        const auto c = decode_rational(value, entry_path);
        if (c == 0) schema_error(entry_path, "zero coefficients are not stored");
        out.add_term(word, c);
    }
    return out;
}

Derivation decode_derivation(const Json& doc, const std::string& path) {
    require_object(doc, path, {"num_vars", "images"});
    const int num_vars = int_field(doc, "num_vars", path, 1);
    const auto& images = array_field(doc, "images", path);
    if (images.size() != static_cast<std::size_t>(num_vars)) {
        schema_error(child(path, "images"), "expected one image per variable (" + std::to_string(num_vars) + ")");
    }
    Derivation out{num_vars, {}};
    for (std::size_t v = 0; v < images.size(); ++v) {
        const auto image_path = child(child(path, "images"), v);
        auto image = decode_polynomial(images[v], image_path);
        if (image.max_variable() > num_vars) schema_error(image_path, "uses a variable above num_vars");
        out.images.push_back(std::move(image));
    }
    return out;
}

Verdict decode_verdict(const Json& doc, const std::string& path) {
    require_object(doc, path, {"pass", "witness"});
    const auto& pass = field(doc, "pass", path);
    if (!pass.is_boolean()) schema_error(child(path, "pass"), "expected a boolean");
    Verdict out{pass.get<bool>(), std::nullopt};
    const auto& witness = field(doc, "witness", path);
    const auto witness_path = child(path, "witness");
    if (witness.is_null()) {
        if (!out.pass) schema_error(witness_path, "a failing verdict needs a witness");
        return out;
    }
    if (out.pass) schema_error(witness_path, "a passing verdict has no witness");
    require_object(witness, witness_path, {"word", "component", "value"});
    const auto& word_doc = array_field(witness, "word", witness_path);
    FreenessWitness w;
    for (std::size_t j = 0; j < word_doc.size(); ++j) w.word.push_back(int_value(word_doc[j], child(child(witness_path, "word"), j), 1));
    w.component = int_field(witness, "component", witness_path, 0);
    w.value = decode_rational(field(witness, "value", witness_path), child(witness_path, "value"));
    out.witness = std::move(w);
    return out;
}

Coloring decode_coloring(const Json& doc, const std::string& path) {
    if (!doc.is_array() || doc.empty()) schema_error(path, "expected a non-empty array of colours");
    Coloring out;
    for (std::size_t v = 0; v < doc.size(); ++v) out.push_back(int_value(doc[v], child(path, v), 1));
    return out;
}

std::string dump(const Json& doc) { return doc.dump() + "\n"; }

}  // namespace ifree
