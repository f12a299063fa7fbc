#pragma once

#include "boxicity/cover.hpp"
#include "boxicity/graph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace boxicity {

enum class Parameter { box, localbox, unionbox };

[[nodiscard]] auto parameter_name(Parameter p) -> std::string_view;
[[nodiscard]] auto parse_parameter_name(std::string_view name) -> Parameter;

/// Claimed parameter value for `graph`, witnessed by a cover of its
/// complement.
struct Certificate {
    Parameter parameter = Parameter::box;
    int value = 0;
    Graph graph;
    CoCover cover;
    CoverStats stats;
};

class CertificateError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

[[nodiscard]] auto make_certificate(Parameter p, const Graph &h, const CoverSolution &solution) -> Certificate;

/// Re-checks the cover from scratch and compares it with the claimed value
/// and statistics. Throws CoverError for a broken cover and
/// CertificateError when the claims do not match the cover.
auto verify_certificate(const Certificate &c) -> CoverStats;

} // namespace boxicity
