#include "sl2real/atlas.hpp"

#include "sl2real/farey.hpp"

#include <algorithm>
#include <functional>

namespace sl2real {

namespace {

AtlasRecord make_record(const Mat2& m, const CycleOptions& options) {
  MatClass cls = classify(m, options);
  const bool real = is_real(m, options);
  std::optional<RealFactorization> fact;
  if (real) fact.emplace(factor_real(m, options));
  std::optional<Cycle> cycle;
  if (const auto* h = std::get_if<HyperbolicClass>(&cls)) cycle = h->cycle;
  return {m, std::move(cls), real, std::move(fact), std::move(cycle)};
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const Int& max_entry) {
  std::vector<Cycle> out;
  std::vector<Int> exps;
  // Appending a positive letter never decreases any entry, so prefixes prune.
  std::function<void(const Mat2&)> extend = [&](const Mat2& prefix) {
    if (!exps.empty() && exps.size() % 2 == 0 && least_rotation(exps) == 0) {
      out.emplace_back(exps);
    }
    const bool next_is_u = exps.size() % 2 == 0;
    for (Int e = 1;; ++e) {
      const Mat2 next = prefix * (next_is_u ? gen::U(e) : gen::V(e));
      if (next.max_abs_entry() > max_entry) break;
      exps.push_back(e);
      extend(next);
      exps.pop_back();
    }
  };
  extend(Mat2::identity());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AtlasRecord> build_atlas(const Int& max_entry, bool real_only,
                                     const CycleOptions& options) {
  std::vector<Mat2> reps;
  for (const Mat2& e : {gen::e_pi(), gen::e_2pi3(), Mat2(-gen::e_2pi3())}) {
    if (e.max_abs_entry() <= max_entry) reps.push_back(e);
  }
  for (Int n = 1; n <= max_entry; ++n) {
    reps.push_back(gen::P(n));
    reps.push_back(-gen::P(n));
  }
  for (const Cycle& c : enumerate_cycles(max_entry)) {
    const Mat2 w = cycle_matrix(c);
    reps.push_back(w);
    reps.push_back(-w);
  }

  std::vector<AtlasRecord> out;
  for (const Mat2& m : reps) {
    AtlasRecord rec = make_record(m, options);
    if (real_only && !rec.is_real) continue;
    out.push_back(std::move(rec));
  }
  return out;
}

Json to_json(const AtlasRecord& record) {
  return {{"matrix", to_json(record.matrix)},
          {"class", to_json(record.cls)},
          {"is_real", record.is_real},
          {"factorization", record.factorization ? to_json(*record.factorization) : Json(nullptr)},
          {"cycle", record.cycle ? to_json(*record.cycle) : Json(nullptr)}};
}

}  // namespace sl2real
