#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "sset/ex.hpp"
#include "sset/pstructure.hpp"
#include "sset/pullback_horn.hpp"
#include "sset/subdivision.hpp"

namespace sset {

using Json = nlohmann::json;

/// Thrown on malformed JSON artifacts.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const FiniteSimplicialSet& x);
Json ezpair_to_json(const FiniteSimplicialSet& x, const EZPair& s);
EZPair ezpair_from_json(const FiniteSimplicialSet& x, const Json& j);
/// Rebuilds a complex; simplices must be listed after their faces.
ComplexPtr complex_from_json(const Json& j);

Json to_json(const SimplicialMap& f);
SimplicialMap map_from_json(const Json& j, ComplexPtr source, ComplexPtr target);

Json to_json(const PStructure& p);
PStructure pstructure_from_json(const Json& j, ComplexPtr ambient);

Json to_json(const FiniteSimplicialSet& b, const AnodynePresentation& p);
AnodynePresentation presentation_from_json(const Json& j, const FiniteSimplicialSet& b);

Json to_json(const Report& r);
Json to_json(const EquationReport& r);

Json chain_to_json(const Chain& c);
/// One simplex of Ex X: its value on every chain of sd Δⁿ.
Json ex_simplex_to_json(const ExComplex& ex, int n, std::uint32_t id);

Json to_json(const FibrationStructure& fs, const QTable& q);

/// Fibration from a CLI config; `bound` is used when the config has none.
FibrationStructure fibration_from_json(const Json& j, int bound);
FiniteGroupoid groupoid_from_json(const Json& j);

struct CertificateBundle {
  ComplexPtr complex;
  PStructure structure;
  std::optional<AnodynePresentation> presentation;
  /// command, parameters, version
  Json provenance = Json::object();
  /// Family-specific data (classifications, Q tables); not interpreted by verify.
  Json extra = Json::object();
};

Json to_json(const CertificateBundle& b);
CertificateBundle bundle_from_json(const Json& j);

/// Pretty-printed with a trailing newline; the bytes are a function of the value.
std::string dump(const Json& j);
Json read_json_file(const std::filesystem::path& path);
/// Writes through a temporary file in the same directory and renames it.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace sset
