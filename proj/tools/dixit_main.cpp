// dixit: exact arithmetic in the idiom of the early Indo-Arabic reckoning
// texts. Every subcommand can emit its step trace and cross-check its result
// against an independent modern implementation.
//
// Exit codes: 0 success, 1 domain failure (not denestable, not a perfect
// square, division by zero), 2 usage or parse error, 3 verification mismatch.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dixit/medieval_arith.hpp"
#include "dixit/oracle.hpp"
#include "dixit/polynomial.hpp"
#include "dixit/surd.hpp"
#include "dixit/trace.hpp"

namespace {

using namespace dixit;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;

std::string read_operand(const std::string& arg) {
    if (arg != "-")
        return arg;
    std::string all((std::istreambuf_iterator<char>(std::cin)),
                    std::istreambuf_iterator<char>());
    const auto begin = all.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos)
        return "";
    const auto end = all.find_last_not_of(" \t\r\n");
    return all.substr(begin, end - begin + 1);
}

struct OutputOptions {
    std::string format = "text";
    bool trace = false;
    bool verify = false;

    bool json() const { return format == "json"; }
};

void add_output_flags(CLI::App* cmd, OutputOptions& out, bool with_verify = true) {
    const char* env = std::getenv("DIXIT_FORMAT");
    if (env && (std::string(env) == "json" || std::string(env) == "text"))
        out.format = env;
    cmd->add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--trace", out.trace, "print the step trace");
    if (with_verify)
        cmd->add_flag("--verify", out.verify, "cross-check the result against the oracle");
}

void emit(const OutputOptions& out, Json result, const Trace& trace,
          const std::vector<std::string>& text_lines) {
    if (out.json()) {
        Json j;
        j["result"] = std::move(result);
        if (out.trace)
            j["trace"] = trace_to_json(trace);
        std::cout << j.dump(2) << '\n';
        return;
    }
    if (out.trace)
        std::cout << render_trace(trace, TraceFormat::Text);
    for (const std::string& line : text_lines)
        std::cout << line << '\n';
}

int verification_failed(const std::string& what) {
    std::cerr << "verification failed: " << what << '\n';
    return kExitVerify;
}

int run_multiply(const std::string& a_text, const std::string& b_text,
                 const std::string& method, const OutputOptions& out) {
    const DigitBoard a = parse_board(read_operand(a_text));
    const DigitBoard b = parse_board(read_operand(b_text));
    const MultiplicationResult r =
        method == "duplication" ? duplicate_multiply(a, b) : multiply_indian(a, b);
    const std::string product = render_board(r.product, BoardStyle::Ascii);

    Json result;
    result["method"] = method;
    result["product"] = product;
    result["board"] = board_to_json(r.product.canonical());
    emit(out, std::move(result), r.trace, {product});

    if (out.verify) {
        const mpz_class expected = oracle::oracle_mul_int(a.value(), b.value());
        if (r.product.value() != expected)
            return verification_failed("board product " + r.product.value().get_str() +
                                       " differs from the schoolbook product " +
                                       expected.get_str());
    }
    return 0;
}

int run_denest(const std::string& expr_text, const OutputOptions& out) {
    const SurdExpression e = parse_surd_expression(read_operand(expr_text));
    if (e.radicands().empty())
        throw SyntaxError("the expression reduces to the rational " +
                              e.rational_part().str() +
                              " with no surd left; take its rational root instead",
                          0);
    const DenestResult r = denest(e);

    Json result;
    result["input"] = surd_expression_to_json(e);
    result["root"] = surd_sum_to_json(r.root);
    result["rendered"] = r.root.str();
    emit(out, std::move(result), r.trace, {r.root.str()});

    if (out.verify && !(expand_square(r.root) == e))
        return verification_failed("re-squaring the root does not reproduce the input");
    return 0;
}

Polynomial parse_operand_poly(const std::string& text, Notation notation) {
    return parse_poly(read_operand(text), notation);
}

int run_poly(const std::string& op, const std::vector<std::string>& args,
             const std::string& notation_name, const OutputOptions& out) {
    const Notation notation =
        notation_name == "medieval" ? Notation::Medieval : Notation::Modern;
    const auto render = [&](const Polynomial& p) { return render_poly(p, notation); };

    if (op == "div") {
        const Polynomial n = parse_operand_poly(args[0], notation);
        const Polynomial d = parse_operand_poly(args[1], notation);
        const DivisionResult r = divide_tabular(n, d);
        Json result;
        result["quotient"] = poly_to_json(r.quotient);
        result["remainder"] = poly_to_json(r.remainder);
        result["rendered_quotient"] = render(r.quotient);
        result["rendered_remainder"] = render(r.remainder);
        emit(out, std::move(result), r.table,
             {"quotient: " + render(r.quotient), "remainder: " + render(r.remainder)});
        if (out.verify) {
            if (!(r.quotient * d + r.remainder == n))
                return verification_failed("quotient * divisor + remainder is not the dividend");
            const auto oracle_qr = oracle::oracle_poly_divmod(n, d);
            if (!(oracle_qr.quotient == r.quotient) || !(oracle_qr.remainder == r.remainder))
                return verification_failed("the tabular division disagrees with long division");
        }
        return 0;
    }

    if (op == "sqrt") {
        const Polynomial p = parse_operand_poly(args[0], notation);
        const SqrtResult r = sqrt_poly(p);
        Json result;
        result["root"] = poly_to_json(r.root);
        result["rendered"] = render(r.root);
        emit(out, std::move(result), r.trace, {render(r.root)});
        if (out.verify && !(r.root * r.root == p))
            return verification_failed("re-squaring the root does not reproduce the input");
        return 0;
    }

    const Polynomial p = parse_operand_poly(args[0], notation);
    const Polynomial q = parse_operand_poly(args[1], notation);
    Polynomial value;
    if (op == "mul")
        value = p * q;
    else if (op == "add")
        value = p + q;
    else
        value = p - q;

    Json result;
    result["result"] = poly_to_json(value);
    result["rendered"] = render(value);
    Trace none(op);
    emit(out, std::move(result), none, {render(value)});

    if (out.verify) {
        if (op == "add" && !(value - q == p))
            return verification_failed("sum minus addend is not the first operand");
        if (op == "sub" && !(value + q == p))
            return verification_failed("difference plus subtrahend is not the first operand");
        if (op == "mul") {
            // a polynomial identity holds iff it holds at more points than the degree
            const int points = value.degree().value_or(0) + 2;
            for (int i = 0; i < points; ++i) {
                const Quantity x = Quantity::integer(i);
                if (!(value.evaluate(x) == p.evaluate(x) * q.evaluate(x)))
                    return verification_failed("the product disagrees with pointwise evaluation");
            }
        }
    }
    return 0;
}

int run_classify(const std::string& n_text, const OutputOptions& out) {
    const std::string text = read_operand(n_text);
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw SyntaxError("expected a positive integer", 0);
    const mpz_class n(text);
    if (n < 1)
        throw SyntaxError("expected a positive integer", 0);
    const ParityKind kind = classify_parity(n);
    Json result;
    result["n"] = n.get_str();
    result["kind"] = std::string(to_string(kind));
    Trace none("classify");
    emit(out, std::move(result), none, {std::string(to_string(kind))});
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dixit: exact positional, surd, and polynomial reckoning with step traces"};
    app.require_subcommand(1);

    std::string mul_a, mul_b, mul_method = "indian";
    OutputOptions mul_out;
    CLI::App* mul = app.add_subcommand("multiply", "multiply two numerals on the digit board");
    mul->add_option("a", mul_a, "multiplicand (digits, O for the ring, or - for stdin)")
        ->required();
    mul->add_option("b", mul_b, "multiplier")->required();
    mul->add_option("--method", mul_method, "board algorithm")
        ->check(CLI::IsMember({"indian", "duplication"}));
    add_output_flags(mul, mul_out);

    std::string denest_expr;
    OutputOptions denest_out;
    CLI::App* den = app.add_subcommand("denest", "write a nested square root as a sum of surds");
    den->add_option("expr", denest_expr, "expression under the root, e.g. \"16 + s24 + s40\"")
        ->required();
    add_output_flags(den, denest_out);

    std::string poly_op;
    std::vector<std::string> poly_args;
    std::string poly_notation = "modern";
    OutputOptions poly_out;
    CLI::App* pol = app.add_subcommand("poly", "polynomial arithmetic, division, square root");
    pol->add_option("op", poly_op, "operation")
        ->required()
        ->check(CLI::IsMember({"div", "sqrt", "mul", "add", "sub"}));
    pol->add_option("args", poly_args, "operand polynomials")->required()->expected(1, 2);
    pol->add_option("--notation", poly_notation, "term notation")
        ->check(CLI::IsMember({"modern", "medieval"}));
    add_output_flags(pol, poly_out);

    std::string classify_n;
    OutputOptions classify_out;
    CLI::App* cls = app.add_subcommand("classify", "name the parity kind of a positive integer");
    cls->add_option("n", classify_n, "positive integer")->required();
    add_output_flags(cls, classify_out, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (mul->parsed())
            return run_multiply(mul_a, mul_b, mul_method, mul_out);
        if (den->parsed())
            return run_denest(denest_expr, denest_out);
        if (pol->parsed()) {
            const std::size_t want = poly_op == "sqrt" ? 1 : 2;
            if (poly_args.size() != want) {
                std::cerr << "error: poly " << poly_op << " takes " << want
                          << (want == 1 ? " operand" : " operands") << '\n';
                return kExitUsage;
            }
            return run_poly(poly_op, poly_args, poly_notation, poly_out);
        }
        if (cls->parsed())
            return run_classify(classify_n, classify_out);
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NotDenestable& e) {
        std::cerr << "not denestable: " << e.what() << '\n';
        return kExitDomain;
    } catch (const AmbiguousTermCount& e) {
        std::cerr << "not denestable: " << e.what() << '\n';
        return kExitDomain;
    } catch (const NotPerfectSquare& e) {
        std::cerr << "not a perfect square: " << e.what()
                  << " (last remainder: " << render_poly(e.last_remainder(), Notation::Medieval)
                  << ")" << '\n';
        return kExitDomain;
    } catch (const DivisionByZeroPolynomial& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const DivisionByNothing& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
