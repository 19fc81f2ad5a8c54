// mtproot command line tool: isolate all real roots of a mixed
// trigonometric-polynomial f(x, sin x, cos x).

#include <mtproot/isolator.hh>
#include <mtproot/mtpgen.hh>
#include <mtproot/oracle.hh>
#include <mtproot/parser.hh>
#include <mtproot/report_io.hh>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace mtproot;

namespace {

QQ parse_rational(const std::string& s)
{
    QQ q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("not a rational: " + s);
    q.canonicalize();
    return q;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"isolate all real roots of a mixed trigonometric-polynomial"};

    std::string expr, file, eps_str = "1", format = "text";
    long check_periods = -1;

    app.add_option("expr", expr,
                   "MTP expression, e.g. \"x*sin(x)+cos(x)-1\"");
    app.add_option("--file", file, "read the expression from a file");
    app.add_option("--epsilon", eps_str,
                   "maximal length of isolating intervals (rational)")
        ->capture_default_str();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--check", check_periods,
                   "validate the report with the numeric oracle over this many "
                   "periods past each threshold");

    auto* gen = app.add_subcommand("gen", "print a random MTP expression");
    unsigned gen_d = 5;
    std::string gen_p = "1/10";
    long gen_c = 10;
    unsigned long gen_seed = 1;
    gen->add_option("--d", gen_d, "total degree bound")->capture_default_str();
    gen->add_option("--p", gen_p, "monomial keep probability (rational)")
        ->capture_default_str();
    gen->add_option("--c", gen_c, "coefficient bound")->capture_default_str();
    gen->add_option("--seed", gen_seed, "generator seed")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) {
        try {
            MtpGen g(gen_seed);
            std::cout << mtp_to_input(g.rp_nonzero(gen_d, parse_rational(gen_p), gen_c))
                      << "\n";
            return 0;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
    }

    std::string text = expr;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) {
            std::cerr << "error: cannot open " << file << "\n";
            return 1;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    if (text.empty()) {
        std::cerr << "error: no expression given (positional argument or --file)\n";
        return 1;
    }

    mpoly f;
    QQ eps;
    try {
        f = parse_mtp(text).f;
        eps = parse_rational(eps_str);
        if (sgn(eps) <= 0)
            throw std::invalid_argument("epsilon must be positive");
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    }

    MTPRootReport report;
    try {
        report = isolate_mtp(f, eps);
    } catch (const identically_zero_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    std::cout << format_report(report,
                               format == "json" ? ReportFormat::json
                                                : ReportFormat::text);

    if (check_periods >= 0) {
        auto v = validate_report(f, report, (unsigned)check_periods, 256);
        if (!v.pass) {
            std::cerr << "validation FAILED:\n" << v.details;
            return 3;
        }
        std::cerr << "validation passed (" << check_periods << " periods)\n";
    }
    return 0;
}
