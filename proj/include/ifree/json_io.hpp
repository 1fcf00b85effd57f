#pragma once

#include "ifree/freeness.hpp"
#include "ifree/series.hpp"
#include "ifree/type_k_partitions.hpp"

#include <json.hpp>

#include <string>

namespace ifree {

using Json = nlohmann::json;

/// Encoders. Objects keep their keys sorted, so equal values dump to identical bytes.
Json encode(const Rational& value);
Json encode(const CkScalar& value);
Json encode(const CkSeries& series);
Json encode(const SetPartition& partition);
Json encode(const TypeKPartition& partition);
Json encode(const InfLaw& law);
Json encode(const CumulantTable& cumulants);
Json encode(const NcPolynomial& polynomial);
Json encode(const Derivation& derivation);
Json encode(const Verdict& verdict);
Json encode_coloring(const Coloring& coloring);

/// "1,2,1" for the word (1,2,1); the empty word is "".
std::string word_key(const Word& word);
Word parse_word_key(const std::string& key, const std::string& path);

/// Decoders. Every failure throws ErrorKind::Schema with a message starting at the offending
/// path ("$" is the document root).
Rational decode_rational(const Json& doc, const std::string& path = "$");
/// expected_order < 0 accepts any order.
CkScalar decode_scalar(const Json& doc, const std::string& path = "$", int expected_order = -1);
CkSeries decode_series(const Json& doc, const std::string& path = "$");
SetPartition decode_partition(const Json& doc, const std::string& path = "$");
TypeKPartition decode_type_k(const Json& doc, const std::string& path = "$");
InfLaw decode_law(const Json& doc, const std::string& path = "$");
CumulantTable decode_cumulants(const Json& doc, const std::string& path = "$");
NcPolynomial decode_polynomial(const Json& doc, const std::string& path = "$");
Derivation decode_derivation(const Json& doc, const std::string& path = "$");
Verdict decode_verdict(const Json& doc, const std::string& path = "$");
Coloring decode_coloring(const Json& doc, const std::string& path = "$");

/// Compact single-line text with a trailing newline.
std::string dump(const Json& doc);

}  // namespace ifree
