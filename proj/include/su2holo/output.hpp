#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "su2holo/types.hpp"

namespace su2holo {

/// %.12e formatting used for all CSV floats.
std::string format_sci(double x);

/// Round to 12 significant digits before storing in JSON so that emitted
/// documents re-parse and re-emit byte-identically.
double round_sig(double x, int digits = 12);

nlohmann::json matrix_to_json(const Matrix2& m);

/// Canonical serialization: sorted keys, LF-free single line.
std::string dump_canonical(const nlohmann::json& j);

}  // namespace su2holo
