#include "ifree/rational.hpp"

#include "ifree/errors.hpp"

#include <cctype>

namespace ifree {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::OrderMismatch: return "OrderMismatch";
        case ErrorKind::SizeMismatch: return "SizeMismatch";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::InsufficientSupport: return "InsufficientSupport";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::Schema: return "Schema";
    }
    return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && s[0] == '-') i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    if (!is_integer_literal(num, true)) {
        fail(ErrorKind::Schema, "malformed rational \"" + std::string(text) + "\"");
    }
    if (slash == std::string_view::npos) {
        const Rational r{Integer{std::string(num)}};
        if (r.get_str() != text) fail(ErrorKind::Schema, "non-canonical rational \"" + std::string(text) + "\"");
        return r;
    }
    const std::string_view den = text.substr(slash + 1);
    if (!den.empty() && den[0] == '-') {
        fail(ErrorKind::Schema, "negative denominator in \"" + std::string(text) + "\"");
    }
    if (!is_integer_literal(den, false)) {
        fail(ErrorKind::Schema, "malformed rational \"" + std::string(text) + "\"");
    }
    const Integer p(std::string{num});
    const Integer q(std::string{den});
    if (q == 0) fail(ErrorKind::Schema, "zero denominator in \"" + std::string(text) + "\"");
    if (q == 1) fail(ErrorKind::Schema, "non-canonical denominator 1 in \"" + std::string(text) + "\"");
    Integer g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1) fail(ErrorKind::Schema, "non-reduced rational \"" + std::string(text) + "\"");
    Rational r(p, q);
    if (r.get_str() != text) fail(ErrorKind::Schema, "non-canonical rational \"" + std::string(text) + "\"");
    return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Integer factorial(int n) {
    require(n >= 0, ErrorKind::InvalidArgument, "factorial of a negative number");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer catalan(int n) {
    require(n >= 0, ErrorKind::InvalidArgument, "catalan of a negative number");
    return binomial(2 * n, n) / (n + 1);
}

}  // namespace ifree
