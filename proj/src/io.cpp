#include "sl2real/io.hpp"

#include "sl2real/errors.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace sl2real {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  }
  return out;
}

Int entry_from_json(const Json& j) {
  if (j.is_string()) return parse_int(j.get<std::string>());
  if (j.is_number_integer()) return Int(j.get<long long>());
  throw Error(ErrorCode::Parse, "matrix entry must be an integer or decimal string: " + j.dump());
}

}  // namespace

Int parse_int(std::string_view text) {
  const std::string s = strip_spaces(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size() ||
      !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                   [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; })) {
    throw Error(ErrorCode::Parse, "not an integer: '" + std::string(text) + "'");
  }
  // cpp_int reads a leading 0 as octal.
  std::string digits = s.substr(start);
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  Int value(digits);
  return s[0] == '-' ? Int(-value) : value;
}

Mat2 matrix_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() ||
      j[0].size() != 2 || j[1].size() != 2) {
    throw Error(ErrorCode::Parse, "expected [[a,b],[c,d]], got " + j.dump());
  }
  return {entry_from_json(j[0][0]), entry_from_json(j[0][1]), entry_from_json(j[1][0]),
          entry_from_json(j[1][1])};
}

Mat2 parse_matrix(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (!s.empty() && s.front() == '[') {
    Json j = Json::parse(s, nullptr, false);
    if (j.is_discarded()) throw Error(ErrorCode::Parse, "malformed JSON matrix: " + s);
    return matrix_from_json(j);
  }
  const auto semi = s.find(';');
  if (semi == std::string::npos || s.find(';', semi + 1) != std::string::npos) {
    throw Error(ErrorCode::Parse, "expected \"a,b;c,d\", got '" + std::string(text) + "'");
  }
  auto split_row = [&](const std::string& row) {
    const auto comma = row.find(',');
    if (comma == std::string::npos || row.find(',', comma + 1) != std::string::npos) {
      throw Error(ErrorCode::Parse, "expected \"a,b;c,d\", got '" + std::string(text) + "'");
    }
    return std::pair{parse_int(row.substr(0, comma)), parse_int(row.substr(comma + 1))};
  };
  auto [a, b] = split_row(s.substr(0, semi));
  auto [c, d] = split_row(s.substr(semi + 1));
  return {a, b, c, d};
}

Json to_json(const Int& x) { return x.str(); }

Json to_json(const Mat2& m) {
  return Json::array({Json::array({m.a.str(), m.b.str()}), Json::array({m.c.str(), m.d.str()})});
}

Json to_json(const std::vector<Int>& seq) {
  Json out = Json::array();
  for (const auto& x : seq) out.push_back(x.str());
  return out;
}

Json to_json(const Cycle& c) { return to_json(c.canonical()); }

Json to_json(const Surd& s) {
  return {{"p", s.p().str()}, {"d", s.d().str()}, {"q", s.q().str()}};
}

Json to_json(const MatClass& cls) {
  Json out = {{"tag", std::string(to_string(tag_of(cls)))}};
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, CentralClass>) {
          out["sign"] = c.sign;
        } else if constexpr (std::is_same_v<T, EllipticClass>) {
          out["trace"] = c.trace;
        } else if constexpr (std::is_same_v<T, ParabolicClass>) {
          out["shift"] = c.shift.str();
          out["sign"] = c.sign;
        } else {
          out["cycle"] = to_json(c.cycle);
          out["sign"] = c.sign;
        }
      },
      cls);
  return out;
}

Json to_json(const RealFactorization& f) {
  return {{"c_plus", to_json(f.c_plus())},
          {"c_minus", to_json(f.c_minus())},
          {"kind_plus", std::string(to_string(f.kind_plus()))},
          {"kind_minus", std::string(to_string(f.kind_minus()))}};
}

Json to_json(const CuttingCycle& cut) {
  return {{"cycle", to_json(cut.cycle)},
          {"word", to_json(cut.cycle.exponents())},
          {"sign", cut.sign},
          {"conjugator", to_json(cut.conjugator)}};
}

Json to_json(const SeriesReport& report) {
  return {{"cf_period", to_json(report.cf_period)},
          {"cycle", to_json(report.cycle)},
          {"repetition", report.repetition},
          {"consistent", report.consistent}};
}

Json to_json(const WeakRealReport& report) {
  return {{"is_real", report.is_real},
          {"bound", report.bound},
          {"witness", report.witness ? to_json(*report.witness) : Json(nullptr)},
          {"c_plus_conjugates", report.c_plus_conjugates},
          {"bound_insufficient", report.bound_insufficient},
          {"consistent", report.consistent}};
}

}  // namespace sl2real
