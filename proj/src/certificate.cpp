#include "boxicity/certificate.hpp"

namespace boxicity {

auto parameter_name(Parameter p) -> std::string_view
{
    switch (p) {
    case Parameter::box: return "box";
    case Parameter::localbox: return "localbox";
    case Parameter::unionbox: return "unionbox";
    }
    return "box";
}

auto parse_parameter_name(std::string_view name) -> Parameter
{
    if (name == "box")
        return Parameter::box;
    if (name == "localbox")
        return Parameter::localbox;
    if (name == "unionbox")
        return Parameter::unionbox;
    throw std::invalid_argument("unknown parameter '" + std::string(name) + "'");
}

auto make_certificate(Parameter p, const Graph &h, const CoverSolution &solution) -> Certificate
{
    return Certificate{p, solution.value, h, solution.witness, solution.stats};
}

auto verify_certificate(const Certificate &c) -> CoverStats
{
    if (c.cover.host != complement(c.graph))
        throw CertificateError("cover host is not the complement of the certified graph");

    switch (c.parameter) {
    case Parameter::box:
        if (c.cover.cover_class != CoverClass::co_interval)
            throw CertificateError("box certificates need class C");
        break;
    case Parameter::unionbox:
        if (c.cover.cover_class != CoverClass::union_co_interval)
            throw CertificateError("unionbox certificates need class Cbar");
        break;
    case Parameter::localbox: break;
    }

    auto stats = verify_cover(c.cover);
    if (stats != c.stats)
        throw CertificateError("recorded stats (t=" + std::to_string(c.stats.globality) + ", s="
                               + std::to_string(c.stats.locality) + ") differ from the cover (t="
                               + std::to_string(stats.globality) + ", s=" + std::to_string(stats.locality) + ")");

    int witnessed = c.parameter == Parameter::localbox ? stats.locality : stats.globality;
    if (witnessed != c.value)
        throw CertificateError("claimed value " + std::to_string(c.value) + " but the cover witnesses "
                               + std::to_string(witnessed));
    return stats;
}

} // namespace boxicity
