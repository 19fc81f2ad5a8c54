// oracle.hh -- independent high-precision cross-checker for root reports.
// Used by tests and the CLI's --check; not part of the exact kernel.

#ifndef MTPROOT_ORACLE_HH
#define MTPROOT_ORACLE_HH

#include <mtproot/isolator.hh>
#include <mtproot/mpoly.hh>

#include <string>
#include <vector>

namespace mtproot {

struct CertifiedRoot {
    QQ lo, hi; // dyadic bracket
    enum class Cert { sign_change, derivative_chain };
    Cert cert = Cert::sign_change;
    unsigned multiplicity = 1; // estimated, capped at 8
    bool inconclusive = false;
};

// Certified roots of f(x, sin x, cos x) on (a,b) by adaptive interval
// subdivision with a 2^-(bits/2) floor.
std::vector<CertifiedRoot> numeric_roots_in_window(const mpoly& f, const QQ& a,
                                                   const QQ& b, unsigned bits);

struct ValidationResult {
    bool pass = false;
    std::string details;
};

// Expands the report over a window covering all bounded records plus
// `periods` periods beyond each family threshold, finds all roots with the
// numeric oracle and matches them one-to-one against the report.
ValidationResult validate_report(const mpoly& f, const MTPRootReport& report,
                                 unsigned periods, unsigned bits);

} // namespace mtproot

#endif
