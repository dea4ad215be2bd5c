#pragma once

#include <iosfwd>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "sset/io.hpp"

namespace sset::cli {

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_verification = 2, exit_resource = 3 };

/// A certificate could not be produced or failed its own checks.
class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json provenance(const std::string& command, Json parameters);

CertificateBundle prism_bundle(int m, int n, int k);
CertificateBundle sd_horn_bundle(int n, int k);
/// Certificate for Ex^{iterate-1} X → Ex^iterate X.
CertificateBundle ex_bundle(ComplexPtr x, int bound, int iterate, ExBudget budget);
/// Throws CertificateError when the Q construction reports violations.
CertificateBundle pullback_bundle(const Json& config, int k, int bound);

/// P-structure check plus replay of the presentation, when present, against
/// the complete fragment.
Report verify_bundle(const CertificateBundle& b);

/// Changes one field of the P-structure or presentation of a bundle to another
/// valid value; returns a description of the change.
std::string mutate_bundle(Json& bundle, std::mt19937_64& rng);

struct HornFill {
  int horn_index = 0;
  std::vector<std::string> faces;
  /// Least i such that the horn fills in Ex^i X, or -1.
  int stage = -1;
};

/// Every horn Λ^dim_k → X, with the first iterate of Ex in which it fills.
std::vector<HornFill> kan_search(ComplexPtr x, int dim, int iterate, ExBudget budget);

/// Entry point of the `sset` tool.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace sset::cli
