// isolator.hh -- the main driver: isolates all real roots of an MTP
// f(x, sin x, cos x), bounded ones by intervals with multiplicities and
// periodic ones by families recurring every 2 pi beyond a threshold.

#ifndef MTPROOT_ISOLATOR_HH
#define MTPROOT_ISOLATOR_HH

#include <mtproot/endpoint.hh>
#include <mtproot/mpoly.hh>

#include <stdexcept>
#include <vector>

namespace mtproot {

struct BoundedRootRecord {
    Interval interval; // exactly one root inside
    unsigned multiplicity = 1;
};

struct PeriodicFamily {
    Interval base;   // endpoints within [-pi, pi]
    unsigned count = 1;
    unsigned multiplicity = 1;
    long threshold = 0; // k >= threshold if >= 0, else k <= threshold
};

struct MTPRootReport {
    std::vector<BoundedRootRecord> bounded;
    std::vector<PeriodicFamily> periodic;
    QQ epsilon;
};

bool report_equal(const MTPRootReport& a, const MTPRootReport& b);

struct identically_zero_error : std::runtime_error {
    identically_zero_error() : std::runtime_error("f(x, sin x, cos x) is identically zero") {}
};

// true iff f(x, sin x, cos x) is the zero function
bool is_identically_zero(const mpoly& f);

// order of the root of f(x, sin x, cos x) at x = 0; requires f(0,0,1) = 0
// and the function not identically zero
unsigned multiplicity_at_zero(const mpoly& f);

// the Main Algorithm
MTPRootReport isolate_mtp(const mpoly& f, const QQ& eps);

} // namespace mtproot

#endif
