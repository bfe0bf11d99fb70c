#include "hyperappell/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hyperappell/errors.hpp"
#include "hyperappell/family.hpp"
#include "hyperappell/format.hpp"
#include "hyperappell/identities.hpp"
#include "hyperappell/reductions.hpp"

namespace hyperappell::cli {

namespace {

enum class OutputFormat { json, latex, csv, plain };

// Raw flag text as given on the command line; rational fields are parsed
// after CLI11 so errors can name the offending flag.
struct RunConfig {
    std::string command;
    std::string a;
    std::string b;
    std::optional<unsigned> k;
    std::optional<std::string> m;
    std::optional<unsigned> n;
    std::optional<unsigned> n_min;
    std::optional<unsigned> n_max;
    std::optional<unsigned> k2;
    std::optional<std::string> M;
    std::optional<std::string> x0;
    std::optional<unsigned> order;
    std::optional<std::string> h;
    std::string f = "0,1";
    std::string identity;
    std::string reduction;
    std::string direction = "family-over-monomials";
    OutputFormat format = OutputFormat::json;
    std::string out_path;
    std::string in_path;
};

Rational parse_flag(const std::string& flag, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const Error& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

std::vector<Rational> parse_list_flag(const std::string& flag, const std::string& text) {
    try {
        return parse_rational_list(text);
    } catch (const Error& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

template <typename T>
const T& require_flag(const std::optional<T>& value, const std::string& flag) {
    if (!value) throw UsageError(flag + " is required");
    return *value;
}

FamilySpec family_from(const RunConfig& cfg) {
    auto a = parse_list_flag("--a", cfg.a);
    auto b = parse_list_flag("--b", cfg.b);
    unsigned k = require_flag(cfg.k, "--k");
    Rational m = parse_flag("--m", require_flag(cfg.m, "--m"));
    std::optional<HyperParams> params;
    try {
        params.emplace(std::move(a), std::move(b));
    } catch (const InvalidParameter& e) {
        throw InvalidParameter(std::string("--b: ") + e.what());
    }
    return {std::move(*params), k, std::move(m)};
}

std::string render(const PolyDocument& doc, OutputFormat format) {
    switch (format) {
    case OutputFormat::json: return to_json(doc) + "\n";
    case OutputFormat::latex: return to_latex(doc.poly) + "\n";
    case OutputFormat::csv: return to_csv(doc.poly);
    case OutputFormat::plain: return to_plain(doc.poly) + "\n";
    }
    return {};
}

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw UsageError("--in: cannot open '" + path + "'");
        ss << in.rdbuf();
    }
    return ss.str();
}

std::string format_report(const IdentityReport& r) {
    std::string line = r.identity_name + " n=" + std::to_string(r.n);
    if (!r.inputs.empty()) line += " " + r.inputs;
    line += ": ";
    line += r.holds ? "holds" : "FAILS";
    if (r.identity_name == "convolution") line += " vs oracle";
    if (!r.note.empty()) line += "; " + r.note;
    return line;
}

// Smallest n each identity is defined for.
unsigned identity_min_n(const std::string& identity) {
    return identity == "appell" || identity == "corollary1" || identity == "composed" ? 1 : 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    FamilySpec spec = family_from(cfg);
    const unsigned floor_n = identity_min_n(cfg.identity);
    unsigned lo = 0;
    unsigned hi = 0;
    if (cfg.n) {
        lo = hi = *cfg.n;
        if (lo < floor_n) throw UsageError("--n: " + cfg.identity + " requires n >= " + std::to_string(floor_n));
    } else if (cfg.n_max) {
        lo = std::max(cfg.n_min.value_or(floor_n), floor_n);
        hi = *cfg.n_max;
    } else {
        throw UsageError("--n or --n-max is required");
    }

    bool all = true;
    for (unsigned n = lo; n <= hi; ++n) {
        IdentityReport r = [&] {
            if (cfg.identity == "appell") return check_appell_derivative(spec, n);
            if (cfg.identity == "corollary1") return check_corollary1(spec, n);
            if (cfg.identity == "addition") return check_addition(spec, n);
            if (cfg.identity == "multiplication")
                return check_multiplication(spec, n, parse_flag("--M", require_flag(cfg.M, "--M")));
            if (cfg.identity == "interchange")
                return check_index_interchange(spec.params(), spec.m(), spec.k(), require_flag(cfg.k2, "--k2"), n);
            if (cfg.identity == "convolution") return check_convolution(spec, n);
            if (cfg.identity == "parity") return check_parity(spec, n);
            return check_composed_derivative(spec, n, LaurentPoly::from_ascending(parse_list_flag("--f", cfg.f)));
        }();
        all = all && r.holds;
        out << format_report(r) << "\n";
    }
    return all ? success : identity_failure;
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
    if (cfg.command == "coeffs") {
        FamilySpec spec = family_from(cfg);
        unsigned n = require_flag(cfg.n, "--n");
        out << render({spec, n, appell_poly(spec, n)}, cfg.format);
        return success;
    }
    if (cfg.command == "eval") {
        FamilySpec spec = family_from(cfg);
        unsigned n = require_flag(cfg.n, "--n");
        Rational x0 = parse_flag("--x", require_flag(cfg.x0, "--x"));
        out << appell_poly(spec, n).eval(x0) << "\n";
        return success;
    }
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    if (cfg.command == "genfun") {
        FamilySpec spec = family_from(cfg);
        out << rational_list_to_json(generating_series(spec, require_flag(cfg.order, "--order")).scalars()) << "\n";
        return success;
    }
    if (cfg.command == "connect") {
        FamilySpec spec = family_from(cfg);
        auto direction = cfg.direction == "family-over-monomials" ? ConnectionDirection::family_over_monomials
                                                                  : ConnectionDirection::monomials_over_family;
        out << rational_list_to_json(connection_coefficients(spec, require_flag(cfg.order, "--order"), direction))
            << "\n";
        return success;
    }
    if (cfg.command == "reduce") {
        Rational h = cfg.h ? parse_flag("--h", *cfg.h) : Rational(0);
        if (cfg.reduction == "hermite") {
            out << family_to_json(reduce_spec(ReductionKind::hermite, cfg.k.value_or(2), h)) << "\n";
        } else {
            if (!cfg.h) throw UsageError("--h is required for gould-hopper");
            out << family_to_json(reduce_spec(ReductionKind::gould_hopper, require_flag(cfg.k, "--k"), h)) << "\n";
        }
        return success;
    }
    // export
    if (!cfg.in_path.empty()) {
        out << render(poly_document_from_json(read_input(cfg.in_path)), cfg.format);
        return success;
    }
    FamilySpec spec = family_from(cfg);
    unsigned n = require_flag(cfg.n, "--n");
    out << render({spec, n, appell_poly(spec, n)}, cfg.format);
    return success;
}

void add_family_flags(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--a", cfg.a, "upper parameters, comma-separated rationals");
    sub->add_option("--b", cfg.b, "lower parameters, comma-separated rationals");
    sub->add_option("--k", cfg.k, "order k >= 1");
    sub->add_option("--m", cfg.m, "parameter m (rational)");
}

void add_output_flags(CLI::App* sub, RunConfig& cfg, bool with_format) {
    if (with_format) {
        const std::map<std::string, OutputFormat> formats{{"json", OutputFormat::json},
                                                          {"latex", OutputFormat::latex},
                                                          {"csv", OutputFormat::csv},
                                                          {"plain", OutputFormat::plain}};
        sub->add_option("--format", cfg.format, "json, latex, csv or plain")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    }
    sub->add_option("--out", cfg.out_path, "write output to this path instead of stdout");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Exact construction and identity checks for hypergeometric Appell polynomials", "hyperappell"};
    app.require_subcommand(1);

    auto* coeffs = app.add_subcommand("coeffs", "ascending coefficients of A_n");
    add_family_flags(coeffs, cfg);
    coeffs->add_option("--n", cfg.n, "index n");
    add_output_flags(coeffs, cfg, true);

    auto* eval = app.add_subcommand("eval", "exact value A_n(x0)");
    add_family_flags(eval, cfg);
    eval->add_option("--n", cfg.n, "index n");
    eval->add_option("--x", cfg.x0, "evaluation point (rational)");
    add_output_flags(eval, cfg, false);

    auto* verify = app.add_subcommand("verify", "check an identity over a range of n");
    verify->add_option("identity", cfg.identity, "identity name")
        ->required()
        ->check(CLI::IsMember({"appell", "corollary1", "addition", "multiplication", "interchange", "convolution",
                               "parity", "composed"}));
    add_family_flags(verify, cfg);
    verify->add_option("--n", cfg.n, "single index n");
    verify->add_option("--n-min", cfg.n_min, "first n of the range");
    verify->add_option("--n-max", cfg.n_max, "last n of the range");
    verify->add_option("--M", cfg.M, "multiplication factor (rational)");
    verify->add_option("--k2", cfg.k2, "second order for the interchange identity");
    verify->add_option("--f", cfg.f, "inner polynomial, ascending coefficients (default x)");
    add_output_flags(verify, cfg, false);

    auto* genfun = app.add_subcommand("genfun", "coefficients of A(t) through t^order");
    add_family_flags(genfun, cfg);
    genfun->add_option("--order", cfg.order, "truncation order");
    add_output_flags(genfun, cfg, false);

    auto* connect = app.add_subcommand("connect", "connection coefficients alpha_0..alpha_order");
    add_family_flags(connect, cfg);
    connect->add_option("--order", cfg.order, "truncation order");
    connect->add_option("--direction", cfg.direction, "family-over-monomials or monomials-over-family")
        ->check(CLI::IsMember({"family-over-monomials", "monomials-over-family"}));
    add_output_flags(connect, cfg, false);

    auto* reduce = app.add_subcommand("reduce", "family spec of a named special case");
    reduce->set_help_flag("--help", "print this help message and exit");
    reduce->add_option("kind", cfg.reduction, "hermite or gould-hopper")
        ->required()
        ->check(CLI::IsMember({"hermite", "gould-hopper"}));
    reduce->add_option("--k", cfg.k, "order k");
    reduce->add_option("--h", cfg.h, "Gould-Hopper parameter h (rational)");
    add_output_flags(reduce, cfg, false);

    auto* exp = app.add_subcommand("export", "re-emit a polynomial as json, latex, csv or plain");
    add_family_flags(exp, cfg);
    exp->add_option("--n", cfg.n, "index n");
    exp->add_option("--in", cfg.in_path, "JSON polynomial document to read ('-' for stdin)");
    add_output_flags(exp, cfg, true);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        if (cfg.out_path.empty()) return dispatch(cfg, out);
        std::ostringstream buffer;
        int code = dispatch(cfg, buffer);
        std::ofstream file(cfg.out_path);
        if (!file) throw UsageError("--out: cannot open '" + cfg.out_path + "'");
        file << buffer.str();
        return code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return domain_error;
    }
}

} // namespace hyperappell::cli
