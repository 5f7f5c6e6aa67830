#pragma once

#include <cstdint>
#include <string>

#include "apx/instance_io.hpp"

namespace apx {

// Knobs for seeded random instance generation.  A zero knob means "use the
// problem's default size"; defaults stay inside the oracle caps so every
// generated instance can be certified exactly.  Same params + seed always
// produce the identical instance.
struct GenParams {
  std::string problem;  // vc | mis | lb | cs | sc | bp
  std::uint64_t seed = 0;
  int vertices = 0;  // vc, mis
  int edges = 0;     // vc, mis
  int k = 0;         // vc: edge rank (2 or 3); cs: number of centers
  int machines = 0;  // lb
  int jobs = 0;      // lb
  int sites = 0;     // cs
  int universe = 0;  // sc
  int subsets = 0;   // sc
  int objects = 0;   // bp
};

// Generates a valid instance of the requested problem.  Construction
// guarantees the instance invariants: hyperedges within the rank bound,
// metric distances from L1 geometry (axioms hold by construction), subset
// families patched to cover their universe, bin weights in (0, c] with
// many near c/2 so the small/large split is exercised.
// Throws Error("BadParams") for an unknown problem or unusable knobs.
Instance gen_instance(const GenParams& params);

}  // namespace apx
