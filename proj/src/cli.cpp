#include "ifree/cli.hpp"

#include "ifree/convolution.hpp"
#include "ifree/errors.hpp"
#include "ifree/freeness.hpp"
#include "ifree/json_io.hpp"
#include "ifree/type_k_partitions.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace ifree {

namespace {

/// File-system and JSON-syntax failures; mapped to exit_io.
struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int n = 0;
    int k = 0;
    int operand_order = -1;
    int max_len = 0;
    bool star = false;
    bool r_table = false;
    bool inverse = false;
    bool biane = false;
    std::string type = "a";
    std::string via = "r";
    std::string mode = "add";
    std::string example;
    std::string param;
    std::string t;
    std::string input;
    std::string lhs;
    std::string rhs;
    std::string law;
    std::string cumulants;
    std::string colors;
    std::string base;
    std::string derivation;
    std::string out;
};

class Io {
public:
    explicit Io(std::istream& in) : in_(in) {}

    Json read(const std::string& path) {
        std::string text;
        if (path == "-") {
            if (stdin_used_) throw IoFailure("standard input can feed only one argument");
            stdin_used_ = true;
            std::ostringstream buffer;
            buffer << in_.rdbuf();
            text = buffer.str();
        } else {
            std::ifstream file(path);
            if (!file) throw IoFailure("cannot open \"" + path + "\"");
            std::ostringstream buffer;
            buffer << file.rdbuf();
            text = buffer.str();
        }
        try {
            return Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw IoFailure("\"" + path + "\" is not valid JSON: " + e.what());
        }
    }

private:
    std::istream& in_;
    bool stdin_used_ = false;
};

void require_flag(bool present, const std::string& flag) {
    if (!present) throw CLI::RequiredError(flag);
}

CkScalar parse_param(const Options& opt) {
    require_flag(!opt.param.empty(), "--param");
    Json doc;
    try {
        doc = Json::parse(opt.param);
    } catch (const Json::parse_error&) {
        return CkScalar::constant(opt.k, parse_rational(opt.param));
    }
    if (doc.is_string()) return CkScalar::constant(opt.k, decode_rational(doc, "--param"));
    if (doc.is_number()) return CkScalar::constant(opt.k, parse_rational(opt.param));
    return decode_scalar(doc, "--param");
}

const std::vector<std::pair<std::string, std::string>> kVerbs{
    {"nc-enum", "Non-crossing partitions of [n]"},
    {"nck-enum", "Type-k non-crossing partitions of [(k+1)n]"},
    {"kreweras", "Kreweras complement of a non-crossing partition"},
    {"mobius", "Moebius function Mob(p, 1_n) of one partition or of all of NC(n)"},
    {"m2c", "Moments to C_k cumulants"},
    {"c2m", "C_k cumulants (or an example law) to moments"},
    {"boxconv", "Boxed convolution of two series"},
    {"convolve-add", "Infinitesimal free additive convolution"},
    {"convolve-mul", "Infinitesimal free multiplicative convolution"},
    {"check-freeness", "Moment test of infinitesimal freeness"},
    {"upgrade", "Order-k law from an order-0 law and a derivation"},
    {"deriv-demo", "Derivatives of a free convolution from derivative data"},
};

const char* kSchemas = R"(
JSON schemas (all numbers on the wire are rational strings "p/q" or "p"):
  rational   "3/4"
  scalar     ["a0", "a1", ..., "ak"]                      element of C_k
  series     {"k", "trunc", "const"?, "coeffs": [scalar x trunc]}
  partition  {"n", "blocks": [[1, 3], [2]]}
  type-k     {"n", "k", "blocks", "reduction": partition, "shape": [int]}
  law        {"k", "num_vars", "max_len", "moments": {"1,2": scalar, ...}}
  cumulants  {"k", "num_vars", "max_len", "cumulants": {...}}
  colors     [1, 1, 2]                                     colour of each variable
  derivation {"num_vars", "images": [{"": "1", "1,1": "2"}, ...]}
  verdict    {"pass", "witness": {"word", "component", "value"} | null}
Exit status: 0 success, 1 usage, 2 domain or schema error, 3 I/O or JSON syntax error.
)";

using Handler = std::function<Json(const Options&, Io&)>;

Json list_of(const auto& items) {
    Json out = Json::array();
    for (const auto& item : items) out.push_back(encode(item));
    return out;
}

std::map<std::string, Handler> handlers() {
    std::map<std::string, Handler> h;
    h["nc-enum"] = [](const Options& opt, Io&) {
        require(opt.n >= 1, ErrorKind::InvalidArgument, "--n must be at least 1");
        return list_of(enumerate_nc(opt.n));
    };
    h["nck-enum"] = [](const Options& opt, Io&) -> Json {
        require(opt.n >= 1, ErrorKind::InvalidArgument, "--n must be at least 1");
        if (opt.r_table) {
            Json rows = Json::array();
            for (const auto& lambda : lambda_set(opt.n + 1, opt.k)) {
                rows.push_back(Json{{"lambda", lambda.entries}, {"r", r_of_shape(lambda, opt.n, opt.k)}});
            }
            return Json{{"n", opt.n}, {"k", opt.k}, {"r", rows}};
        }
        if (opt.star) {
            Json out = Json::array();
            for (const auto& s : enumerate_type_k_star(opt.n, opt.k)) out.push_back(encode(s.partition));
            return out;
        }
        return list_of(enumerate_type_k(opt.n, opt.k));
    };
    h["kreweras"] = [](const Options& opt, Io& io) -> Json {
        require_flag(!opt.input.empty(), "--in");
        const auto p = NcPartition(decode_partition(io.read(opt.input)));
        if (opt.biane) return Json(biane_permutation(p));
        return encode(kreweras(p, opt.inverse ? KrewerasDirection::inverse : KrewerasDirection::forward));
    };
    h["mobius"] = [](const Options& opt, Io& io) -> Json {
        if (!opt.input.empty()) return encode(mobius_to_top(NcPartition(decode_partition(io.read(opt.input)))));
        require(opt.n >= 1, ErrorKind::InvalidArgument, "give --in or --n >= 1");
        Json out = Json::array();
        for (const auto& p : enumerate_nc(opt.n)) out.push_back(Json{{"partition", encode(p)}, {"mobius", encode(mobius_to_top(p))}});
        return out;
    };
    h["m2c"] = [](const Options& opt, Io& io) {
        require_flag(!opt.law.empty(), "--law");
        return encode(moments_to_cumulants(decode_law(io.read(opt.law))));
    };
    h["c2m"] = [](const Options& opt, Io& io) {
        if (!opt.example.empty()) {
            require(opt.example == "semicircular" || opt.example == "free_poisson", ErrorKind::InvalidArgument,
                    "--example must be semicircular or free_poisson");
            require(opt.max_len >= 1, ErrorKind::InvalidArgument, "--max-len must be at least 1");
            const auto kind = opt.example == "semicircular" ? ExampleKind::semicircular : ExampleKind::free_poisson;
            return encode(example_law(kind, parse_param(opt), opt.max_len));
        }
        require_flag(!opt.cumulants.empty(), "--cumulants");
        return encode(cumulants_to_moments(decode_cumulants(io.read(opt.cumulants))));
    };
    h["boxconv"] = [](const Options& opt, Io& io) {
        require_flag(!opt.lhs.empty(), "--lhs");
        require_flag(!opt.rhs.empty(), "--rhs");
        const auto f = decode_series(io.read(opt.lhs), "lhs");
        const auto g = decode_series(io.read(opt.rhs), "rhs");
        if (opt.operand_order >= 0) {
            require(f.order() == opt.operand_order && g.order() == opt.operand_order, ErrorKind::OrderMismatch,
                    "operands do not have order --k " + std::to_string(opt.operand_order));
        }
        if (opt.type == "b") return encode(boxed_conv_type_b(f, g));
        if (opt.type == "k") return encode(boxed_conv_type_k(f, g));
        return encode(boxed_conv_ck(f, g));
    };
    h["convolve-add"] = [](const Options& opt, Io& io) {
        require_flag(!opt.lhs.empty(), "--lhs");
        require_flag(!opt.rhs.empty(), "--rhs");
        const auto mu = decode_law(io.read(opt.lhs), "lhs");
        const auto nu = decode_law(io.read(opt.rhs), "rhs");
        return encode(mu.num_vars() == 1 ? additive_convolve(mu, nu) : sum_tuple_law(mu, nu));
    };
    h["convolve-mul"] = [](const Options& opt, Io& io) {
        require_flag(!opt.lhs.empty(), "--lhs");
        require_flag(!opt.rhs.empty(), "--rhs");
        const auto mu = decode_law(io.read(opt.lhs), "lhs");
        const auto nu = decode_law(io.read(opt.rhs), "rhs");
        if (opt.via == "s") return encode(multiplicative_convolve_via_s(mu, nu));
        return encode(mu.num_vars() == 1 ? multiplicative_convolve(mu, nu) : product_tuple_law(mu, nu));
    };
    h["check-freeness"] = [](const Options& opt, Io& io) {
        require_flag(!opt.law.empty(), "--law");
        require_flag(!opt.colors.empty(), "--colors");
        const auto law = decode_law(io.read(opt.law), "law");
        const auto coloring = decode_coloring(io.read(opt.colors), "colors");
        return encode(check_inf_freeness(law, coloring, opt.max_len > 0 ? opt.max_len : law.max_len()));
    };
    h["upgrade"] = [](const Options& opt, Io& io) {
        require_flag(!opt.base.empty(), "--base");
        require_flag(!opt.derivation.empty(), "--derivation");
        require(opt.max_len >= 1, ErrorKind::InvalidArgument, "--max-len must be at least 1");
        const auto base = decode_law(io.read(opt.base), "base");
        const auto d = decode_derivation(io.read(opt.derivation), "derivation");
        return encode(upgraded_law(base, d, opt.k, opt.max_len));
    };
    h["deriv-demo"] = [](const Options& opt, Io& io) {
        require_flag(!opt.lhs.empty(), "--lhs");
        require_flag(!opt.rhs.empty(), "--rhs");
        const auto mu = decode_law(io.read(opt.lhs), "lhs");
        const auto nu = decode_law(io.read(opt.rhs), "rhs");
        const auto mode = opt.mode == "mul" ? ConvolutionMode::multiplicative : ConvolutionMode::additive;
        const auto derivatives = derivative_of_convolution(mu, nu, mode);
        if (opt.t.empty()) return encode(derivatives);
        return encode(law_at_t(derivatives, parse_rational(opt.t)));
    };
    return h;
}

void add_options(CLI::App& app, Options& opt) {
    const auto name = app.get_name();
    auto non_negative = CLI::NonNegativeNumber;
    if (name == "nc-enum" || name == "nck-enum" || name == "mobius") app.add_option("--n", opt.n, "base size n")->check(CLI::PositiveNumber);
    if (name == "nck-enum" || name == "c2m" || name == "upgrade") app.add_option("--k", opt.k, "order k")->check(non_negative);
    if (name == "nck-enum") {
        app.add_flag("--star", opt.star, "only partitions whose Kreweras blocks are simple");
        app.add_flag("--r-table", opt.r_table, "print r(lambda) for every shape lambda");
    }
    if (name == "kreweras") {
        app.add_option("--in", opt.input, "partition file, - for standard input");
        app.add_flag("--inverse", opt.inverse, "apply the inverse map Kr'");
        app.add_flag("--biane", opt.biane, "print the Biane permutation of the input instead");
    }
    if (name == "mobius") app.add_option("--in", opt.input, "partition file, - for standard input");
    if (name == "m2c" || name == "check-freeness") app.add_option("--law", opt.law, "law file");
    if (name == "c2m") {
        app.add_option("--cumulants", opt.cumulants, "cumulant table file");
        app.add_option("--example", opt.example, "semicircular or free_poisson");
        app.add_option("--param", opt.param, "example parameter: scalar JSON, or a rational lifted to order --k");
    }
    if (name == "c2m" || name == "check-freeness" || name == "upgrade") {
        app.add_option("--max-len,--trunc", opt.max_len, "word-length truncation")->check(CLI::PositiveNumber);
    }
    if (name == "boxconv" || name == "convolve-add" || name == "convolve-mul" || name == "deriv-demo") {
        app.add_option("--lhs", opt.lhs, "left operand file");
        app.add_option("--rhs", opt.rhs, "right operand file");
    }
    if (name == "boxconv") {
        app.add_option("--type", opt.type, "a (C_k), b (type B, k = 1) or k (type k)")->check(CLI::IsMember({"a", "b", "k"}));
        app.add_option("--k", opt.operand_order, "expected order k of both operands")->check(non_negative);
    }
    if (name == "convolve-mul") app.add_option("--via", opt.via, "r (boxed convolution) or s (S-transform)")->check(CLI::IsMember({"r", "s"}));
    if (name == "check-freeness") app.add_option("--colors", opt.colors, "colouring file");
    if (name == "upgrade") {
        app.add_option("--base", opt.base, "order-0 law file");
        app.add_option("--derivation", opt.derivation, "derivation file");
    }
    if (name == "deriv-demo") {
        app.add_option("--mode", opt.mode, "add or mul")->check(CLI::IsMember({"add", "mul"}));
        app.add_option("--t", opt.t, "evaluate the Taylor sum at this rational t");
    }
    app.add_option("--out", opt.out, "output file (default standard output)");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact combinatorics of infinitesimal free probability of order k", "ifree"};
    app.footer(kSchemas);
    app.require_subcommand(1);
    Options opt;
    for (const auto& [name, description] : kVerbs) add_options(*app.add_subcommand(name, description), opt);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    const auto* verb = app.get_subcommands().front();
    try {
        Io io(in);
        const auto result = handlers().at(verb->get_name())(opt, io);
        const auto text = dump(result);
        if (opt.out.empty()) {
            out << text;
        } else {
            std::ofstream file(opt.out);
            if (!(file << text)) throw IoFailure("cannot write \"" + opt.out + "\"");
        }
        return exit_ok;
    } catch (const CLI::RequiredError& e) {
        err << "error: " << verb->get_name() << ": " << e.what() << "\n";
        return exit_usage;
    } catch (const IoFailure& e) {
        err << "error: io: " << e.what() << "\n";
        return exit_io;
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return exit_domain;
    }
}

}  // namespace ifree
