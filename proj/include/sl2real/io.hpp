#pragma once

#include "sl2real/classify.hpp"
#include "sl2real/cycle.hpp"
#include "sl2real/farey.hpp"
#include "sl2real/mat2.hpp"
#include "sl2real/realness.hpp"
#include "sl2real/surd.hpp"

#include <json.hpp>

#include <string_view>

namespace sl2real {

using Json = nlohmann::json;

/// Accepts the compact form "a,b;c,d" (whitespace allowed anywhere) or JSON
/// [[a,b],[c,d]] whose entries are integers or decimal strings. Throws Parse.
Mat2 parse_matrix(std::string_view text);
Int parse_int(std::string_view text);

Mat2 matrix_from_json(const Json& j);

/// Integers are written as decimal strings throughout.
Json to_json(const Int& x);
Json to_json(const Mat2& m);
Json to_json(const Cycle& c);  // canonical rotation
Json to_json(const std::vector<Int>& seq);
Json to_json(const Surd& s);
Json to_json(const MatClass& cls);
Json to_json(const RealFactorization& f);
Json to_json(const CuttingCycle& cut);
Json to_json(const SeriesReport& report);
Json to_json(const WeakRealReport& report);

}  // namespace sl2real
