#pragma once

#include "sl2real/classify.hpp"
#include "sl2real/cycle.hpp"
#include "sl2real/io.hpp"
#include "sl2real/mat2.hpp"
#include "sl2real/realness.hpp"

#include <optional>
#include <vector>

namespace sl2real {

/// One conjugacy class of SL(2,Z) under GL(2,Z)-conjugation.
struct AtlasRecord {
  Mat2 matrix;  // canonical representative
  MatClass cls;
  bool is_real;
  std::optional<RealFactorization> factorization;
  std::optional<Cycle> cycle;
};

/// Classes whose canonical representative has max |entry| <= max_entry, in
/// canonical order: elliptic (traces 0, 1, -1), parabolic (n ascending, +
/// before -), hyperbolic (cycles by length then canonical rotation, + before
/// -). Central elements are not listed.
std::vector<AtlasRecord> build_atlas(const Int& max_entry, bool real_only = false,
                                     const CycleOptions& options = {});

/// Canonical-rotation cycles whose word product has max entry <= max_entry.
std::vector<Cycle> enumerate_cycles(const Int& max_entry);

Json to_json(const AtlasRecord& record);

}  // namespace sl2real
