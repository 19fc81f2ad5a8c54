#include <mtproot/report_io.hh>

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace mtproot {

namespace {

using nlohmann::json;

json endpoint_json(const Endpoint& e)
{
    if (e.is_rational())
        return json{{"type", "rational"}, {"q", e.q.get_str()}};
    return json{{"type", "symbolic"},
                {"u", (long long)e.u.get_si()},
                {"q", e.q.get_str()}};
}

Endpoint endpoint_from_json(const json& j)
{
    std::string type = j.at("type").get<std::string>();
    QQ q(j.at("q").get<std::string>());
    q.canonicalize();
    if (type == "rational")
        return Endpoint::rational(q);
    if (type == "symbolic")
        return Endpoint::symbolic(ZZ((long)j.at("u").get<long long>()), q);
    throw std::runtime_error("unknown endpoint type: " + type);
}

std::string count_phrase(unsigned count, unsigned mult)
{
    std::ostringstream os;
    if (count == 1)
        os << "there is 1 real root";
    else
        os << "there are " << count << " real roots";
    os << " with multiplicity " << mult;
    return os.str();
}

std::string threshold_phrase(long k)
{
    std::ostringstream os;
    if (k >= 0)
        os << "For every k >= " << k << " (k in Z)";
    else
        os << "For every k <= " << k << " (k in Z)";
    return os.str();
}

} // namespace

std::string format_report(const MTPRootReport& report, ReportFormat mode)
{
    if (mode == ReportFormat::json) {
        json j;
        j["epsilon"] = report.epsilon.get_str();
        j["bounded"] = json::array();
        for (const auto& b : report.bounded)
            j["bounded"].push_back({{"lo", endpoint_json(b.interval.lo)},
                                    {"hi", endpoint_json(b.interval.hi)},
                                    {"multiplicity", b.multiplicity}});
        j["periodic"] = json::array();
        for (const auto& p : report.periodic)
            j["periodic"].push_back({{"lo", endpoint_json(p.base.lo)},
                                     {"hi", endpoint_json(p.base.hi)},
                                     {"count", p.count},
                                     {"multiplicity", p.multiplicity},
                                     {"threshold", p.threshold}});
        return j.dump(2) + "\n";
    }

    std::ostringstream os;
    std::vector<const PeriodicFamily*> points, intervals;
    for (const auto& p : report.periodic)
        (p.base.is_point() ? points : intervals).push_back(&p);

    // periodic point families, ascending threshold
    std::stable_sort(points.begin(), points.end(),
                     [](const PeriodicFamily* a, const PeriodicFamily* b) {
                         return a->threshold < b->threshold;
                     });
    for (const auto* p : points) {
        os << threshold_phrase(p->threshold) << ", 2kPi+(" << p->base.lo.str()
           << ") is a real root with multiplicity " << p->multiplicity << ".\n";
    }

    // bounded point roots
    for (const auto& b : report.bounded) {
        if (!b.interval.is_point())
            continue;
        os << "There is 1 real root with multiplicity " << b.multiplicity
           << " at " << b.interval.lo.str() << ".\n";
    }

    // periodic interval families: positive directions first
    std::stable_sort(intervals.begin(), intervals.end(),
                     [](const PeriodicFamily* a, const PeriodicFamily* b) {
                         bool na = a->threshold < 0, nb = b->threshold < 0;
                         if (na != nb)
                             return nb;
                         return a->threshold < b->threshold;
                     });
    for (const auto* p : intervals) {
        os << threshold_phrase(p->threshold) << ", "
           << count_phrase(p->count, p->multiplicity) << " in (2kPi+("
           << p->base.lo.str() << "), 2kPi+(" << p->base.hi.str() << ")).\n";
    }

    // bounded interval roots, grouped by multiplicity
    std::vector<unsigned> mults;
    for (const auto& b : report.bounded)
        if (!b.interval.is_point() &&
            std::find(mults.begin(), mults.end(), b.multiplicity) == mults.end())
            mults.push_back(b.multiplicity);
    std::sort(mults.begin(), mults.end());
    for (unsigned m : mults) {
        os << "There is 1 real root with multiplicity " << m
           << " in each open interval of the list\n[";
        bool first = true;
        for (const auto& b : report.bounded) {
            if (b.interval.is_point() || b.multiplicity != m)
                continue;
            if (!first)
                os << ",\n ";
            first = false;
            os << "[" << b.interval.lo.str() << ", " << b.interval.hi.str() << "]";
        }
        os << "].\n";
    }
    return os.str();
}

MTPRootReport parse_report_json(const std::string& text)
{
    json j = json::parse(text);
    MTPRootReport r;
    QQ eps(j.at("epsilon").get<std::string>());
    eps.canonicalize();
    r.epsilon = eps;
    for (const auto& b : j.at("bounded")) {
        BoundedRootRecord rec;
        rec.interval.lo = endpoint_from_json(b.at("lo"));
        rec.interval.hi = endpoint_from_json(b.at("hi"));
        rec.multiplicity = b.at("multiplicity").get<unsigned>();
        r.bounded.push_back(rec);
    }
    for (const auto& p : j.at("periodic")) {
        PeriodicFamily fam;
        fam.base.lo = endpoint_from_json(p.at("lo"));
        fam.base.hi = endpoint_from_json(p.at("hi"));
        fam.count = p.at("count").get<unsigned>();
        fam.multiplicity = p.at("multiplicity").get<unsigned>();
        fam.threshold = p.at("threshold").get<long>();
        r.periodic.push_back(fam);
    }
    return r;
}

} // namespace mtproot
