#pragma once

#include "sset/nerve.hpp"
#include "sset/pstructure.hpp"

namespace sset {

struct PrismCertificate {
  PrismComplex prism;
  PStructure structure;
};

/// P-structure on (Δᵐ × ∂Δⁿ) ∪ (Λᵐ_k × Δⁿ) ↪ Δᵐ × Δⁿ by splitting lattice-walk moves.
PrismCertificate prism_pstructure(int m, int n, int k);

}  // namespace sset
