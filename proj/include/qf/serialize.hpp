#pragma once

#include <string>

#include "qf/classify.hpp"
#include "qf/presentation.hpp"

namespace qf {

/// {"order","type","connected","orbit_sizes","inner_group_order","colorings":{"R3","R5"}}
std::string to_json(const InvariantProfile& p, int indent = -1);

/// {"verdict","basis","witness","profiles":{"a","b"},"quandle_isomorphic",
///  "group_isomorphic","caveats"}
std::string to_json(const Certificate& c, int indent = -1);

std::string to_json(const TripleReport& r, int indent = -1);

/// One-line header: {"order","type","generators":{name: index},"stats":{…}}.
std::string completion_header(const CompletionResult& r);

}  // namespace qf
