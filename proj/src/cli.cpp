#include "sl2real/cli.hpp"

#include "sl2real/atlas.hpp"
#include "sl2real/errors.hpp"
#include "sl2real/figure.hpp"
#include "sl2real/io.hpp"
#include "sl2real/oracle.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>

namespace sl2real::cli {

namespace {

constexpr const char* kCapVariable = "SL2REAL_CF_CAP";

CycleOptions options_from_env() {
  CycleOptions options;
  if (const char* raw = std::getenv(kCapVariable)) {
    const Int cap = parse_int(raw);
    if (cap < 0) throw Error(ErrorCode::Parse, std::string(kCapVariable) + " must be >= 0");
    options.cf_cap = cap.convert_to<std::size_t>();
  }
  return options;
}

// A false verification flag is a defect, never output.
void assert_verified(bool verified, const std::string& what, std::ostream& err) {
  if (!verified) {
    err << "internal verification failed: " << what << std::endl;
    std::abort();
  }
}

// Runs `body` on the matrix argument, or on every line of `in` when it is "-".
void for_each_matrix(const std::string& arg, std::istream& in, std::ostream& out,
                     const std::function<Json(const Mat2&)>& body) {
  if (arg != "-") {
    out << body(parse_matrix(arg)).dump() << "\n";
    return;
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out << body(parse_matrix(line)).dump() << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Real factorizations of SL(2,Z) matrices into two linear real structures",
               "sl2real"};
  app.require_subcommand(1);

  std::string matrix_arg, other_arg, group = "gl", mode = "factor", axis_arg, output;
  long long bound = 10;
  std::string max_entry = "5";
  bool real_only = false;
  int depth = 3;

  auto* classify_cmd = app.add_subcommand("classify", "Trace class and conjugacy invariants");
  classify_cmd->add_option("matrix", matrix_arg, "\"a,b;c,d\", JSON, or - for stdin")->required();

  auto* cycle_cmd = app.add_subcommand("cycle", "Cutting period-cycle with verified conjugator");
  cycle_cmd->add_option("matrix", matrix_arg)->required();

  auto* real_cmd = app.add_subcommand("real", "Decide realness and factor into involutions");
  real_cmd->add_option("matrix", matrix_arg)->required();

  auto* conj_cmd = app.add_subcommand("conjugate", "Conjugacy test in GL(2,Z) or SL(2,Z)");
  conj_cmd->add_option("a", matrix_arg)->required();
  conj_cmd->add_option("b", other_arg)->required();
  conj_cmd->add_option("--group", group)->check(CLI::IsMember({"gl", "sl"}, CLI::ignore_case));

  auto* oracle_cmd = app.add_subcommand("oracle", "Bounded brute-force search");
  oracle_cmd->add_option("matrix", matrix_arg)->required();
  oracle_cmd->add_option("--bound", bound)->check(CLI::Range(0LL, 1000LL));
  oracle_cmd->add_option("--mode", mode)->check(CLI::IsMember({"factor", "conjugator"}));

  auto* weak_cmd =
      app.add_subcommand("weakly-real", "Compare the realness verdict with a bounded det -1 conjugator");
  weak_cmd->add_option("matrix", matrix_arg)->required();
  weak_cmd->add_option("--bound", bound)->check(CLI::Range(0LL, 1000LL));

  auto* series_cmd = app.add_subcommand("series-check", "Continued fraction vs cutting cycle");
  series_cmd->add_option("matrix", matrix_arg)->required();

  auto* atlas_cmd = app.add_subcommand("atlas", "JSONL of conjugacy classes up to an entry bound");
  atlas_cmd->add_option("--max-entry", max_entry)->required();
  atlas_cmd->add_flag("--real-only", real_only);

  auto* svg_cmd = app.add_subcommand("svg", "Farey tessellation figure");
  svg_cmd->add_option("--depth", depth)->required();
  svg_cmd->add_option("--axis", axis_arg, "hyperbolic matrix whose axis is overlaid");
  svg_cmd->add_option("-o,--output", output, "output file (default stdout)");

  std::vector<std::string> argv_storage{"sl2real"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitParse;
  }

  try {
    const CycleOptions options = options_from_env();

    if (*classify_cmd) {
      for_each_matrix(matrix_arg, in, out, [&](const Mat2& m) {
        return Json{{"matrix", to_json(m)}, {"class", to_json(classify(m, options))}};
      });
    } else if (*cycle_cmd) {
      for_each_matrix(matrix_arg, in, out, [&](const Mat2& m) {
        const CuttingCycle cut = cutting_cycle(m, options);
        const Mat2& r = cut.conjugator;
        const bool verified =
            r.det() == 1 && scaled(r * cycle_matrix(cut.cycle) * inverse(r), cut.sign) == m;
        assert_verified(verified, "cycle of " + to_compact(m), err);
        Json j = to_json(cut);
        j["matrix"] = to_json(m);
        j["verified"] = verified;
        return j;
      });
    } else if (*real_cmd) {
      for_each_matrix(matrix_arg, in, out, [&](const Mat2& m) {
        Json j{{"matrix", to_json(m)}};
        const bool real = is_real(m, options);
        j["is_real"] = real;
        bool verified = true;
        if (real) {
          const RealFactorization f = m.is_central() ? central_factorization(m)
                                                     : factor_real(m, options);
          verified = is_real_structure(f.c_plus()) && is_real_structure(f.c_minus()) &&
                     f.c_plus() * f.c_minus() == m;
          j["factorization"] = to_json(f);
        } else {
          j["factorization"] = nullptr;
        }
        assert_verified(verified, "factorization of " + to_compact(m), err);
        j["verified"] = verified;
        return j;
      });
    } else if (*conj_cmd) {
      const Mat2 a = parse_matrix(matrix_arg);
      const Mat2 b = parse_matrix(other_arg);
      const bool sl = CLI::detail::to_lower(group) == "sl";
      const bool result = conjugacy_test(a, b, sl ? Group::SL : Group::GL, options);
      out << Json{{"a", to_json(a)},
                  {"b", to_json(b)},
                  {"group", sl ? "SL" : "GL"},
                  {"conjugate", result}}
                 .dump()
          << "\n";
    } else if (*oracle_cmd) {
      for_each_matrix(matrix_arg, in, out, [&](const Mat2& m) {
        if (!m.in_sl2z()) throw Error(ErrorCode::NotSL2, to_compact(m));
        Json j{{"query", {{"matrix", to_json(m)}, {"mode", mode}}}, {"bound", bound}};
        bool verified = false;
        if (mode == "factor") {
          const auto pair = oracle::brute_force_factor(m, bound);
          if (pair) {
            verified = is_real_structure(pair->first) && is_real_structure(pair->second) &&
                       pair->first * pair->second == m;
            j["witness"] = Json::array({to_json(pair->first), to_json(pair->second)});
          } else {
            j["witness"] = nullptr;
          }
        } else {
          const auto q = oracle::brute_force_conjugator(m, bound);
          if (q) {
            verified = q->det() == -1 && inverse(*q) * m * *q == inverse(m);
            j["witness"] = to_json(*q);
          } else {
            j["witness"] = nullptr;
          }
        }
        j["verified"] = verified;
        return j;
      });
    } else if (*weak_cmd) {
      for_each_matrix(matrix_arg, in, out, [&](const Mat2& m) {
        if (!m.in_sl2z()) throw Error(ErrorCode::NotSL2, to_compact(m));
        Json j = to_json(weakly_real_equals_real_check(m, bound, options));
        j["matrix"] = to_json(m);
        return j;
      });
    } else if (*series_cmd) {
      for_each_matrix(matrix_arg, in, out, [&](const Mat2& m) {
        Json j = to_json(series_crosscheck(m, options));
        j["matrix"] = to_json(m);
        return j;
      });
    } else if (*atlas_cmd) {
      const Int limit = parse_int(max_entry);
      for (const AtlasRecord& rec : build_atlas(limit, real_only, options)) {
        out << to_json(rec).dump() << "\n";
      }
    } else if (*svg_cmd) {
      std::optional<Mat2> axis;
      if (!axis_arg.empty()) axis = parse_matrix(axis_arg);
      const std::string svg = render_farey(depth, axis);
      if (output.empty() || output == "-") {
        out << svg;
      } else {
        std::ofstream file(output);
        if (!file) {
          err << "cannot open " << output << " for writing\n";
          return kExitDomain;
        }
        file << svg;
      }
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == ErrorCode::Parse ? kExitParse : kExitDomain;
  }
  out.flush();
  return kExitOk;
}

}  // namespace sl2real::cli
