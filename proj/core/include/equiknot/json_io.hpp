#pragma once

#include <string>
#include <utility>

#include "equiknot/matrix.hpp"
#include "equiknot/seifert.hpp"

namespace equiknot {

// Serialization of Seifert data as {"A": [[..]], "P": [[..]], "h": [..],
// "lk": [..], "name": "..."} with stable key order. Covectors and name are
// omitted when absent. Integer entries print as JSON numbers when |x| < 2^53,
// otherwise as strings; non-integer rationals always as "p/q" strings.
std::string seifert_to_json(const SeifertData& s);
SeifertData seifert_from_json(const std::string& text); // InvalidInput on bad schema

// Metabolizer witnesses: {"generators": [[int]], "full": bool}.
std::string witness_to_json(const MatQ& generators, bool full);
std::pair<MatQ, bool> witness_from_json(const std::string& text);

} // namespace equiknot
