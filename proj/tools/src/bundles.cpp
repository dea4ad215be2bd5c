#include <algorithm>
#include <stdexcept>

#include "sset/lifting.hpp"
#include "sset/prism.hpp"
#include "sset_cli/cli.hpp"

#ifndef SSET_VERSION
#define SSET_VERSION "unknown"
#endif

namespace sset::cli {

namespace {

CertificateBundle finish(ComplexPtr complex, PStructure p, Json prov) {
  CertificateBundle b;
  b.complex = std::move(complex);
  b.structure = std::move(p);
  b.provenance = std::move(prov);
  try {
    b.presentation = compile_presentation(b.structure);
  } catch (const std::invalid_argument&) {
    // left out; verify reports why
  }
  return b;
}

}  // namespace

Json provenance(const std::string& command, Json parameters) {
  return {{"command", command}, {"parameters", std::move(parameters)}, {"version", SSET_VERSION}};
}

CertificateBundle prism_bundle(int m, int n, int k) {
  auto cert = prism_pstructure(m, n, k);
  ComplexPtr b = cert.structure.ambient;
  return finish(b, std::move(cert.structure), provenance("prism", {{"m", m}, {"n", n}, {"k", k}}));
}

CertificateBundle sd_horn_bundle(int n, int k) {
  auto cert = sd_horn_pstructure(n, k);
  ComplexPtr b = cert.structure.ambient;
  return finish(b, std::move(cert.structure), provenance("sd-horn", {{"n", n}, {"k", k}}));
}

CertificateBundle ex_bundle(ComplexPtr x, int bound, int iterate, ExBudget budget) {
  if (iterate < 1) throw std::invalid_argument("iterate must be at least 1");
  ExTower tower = ex_iterate(x, iterate - 1, bound, budget);
  const ExComplex ex(tower.stages.back(), bound, budget);
  ExCertificate cert = ex_pstructure(ex);
  std::size_t type_i = 0;
  std::size_t type_ii = 0;
  for (const ExClass& c : cert.classes) {
    if (c.type == ExType::type_i) ++type_i;
    if (c.type == ExType::type_ii) ++type_ii;
  }
  Json params = {{"bound", bound}, {"iterate", iterate}, {"input", to_json(*x)}};
  CertificateBundle b = finish(ex.complex(), std::move(cert.structure), provenance("ex", std::move(params)));
  b.extra = {{"type_i", type_i},
             {"type_ii", type_ii},
             {"rank_violations", check_rank_descent(ex, ExCertificate{b.structure, cert.classes}).size()}};
  return b;
}

CertificateBundle pullback_bundle(const Json& config, int k, int bound) {
  FibrationStructure fs = fibration_from_json(config, bound);
  if (!is_fibration_up_to_bound(fs)) throw CertificateError("projection has no horn lifts within the bound");
  PullbackHornCertificate cert = pullback_horn_pstructure(fs, k);
  std::vector<Violation> issues = cert.table.violations;
  for (auto& v : check_profile_descent(fs, cert)) issues.push_back(std::move(v));
  for (auto& v : check_q_injective(fs, cert.table)) issues.push_back(std::move(v));
  if (!issues.empty()) {
    throw CertificateError("Q construction: " + issues.front().kind + " at " + issues.front().subject + " (" +
                             issues.front().detail + ")");
  }
  Json params = {{"config", config}, {"k", k}, {"bound", fs.bound}};
  CertificateBundle b = finish(fs.total, std::move(cert.structure), provenance("pullback", std::move(params)));
  b.extra = {{"qtable", to_json(fs, cert.table)}};
  return b;
}

Report verify_bundle(const CertificateBundle& b) {
  Report r = verify_pstructure(b.structure);
  if (b.presentation) {
    Report p = verify_presentation(*b.complex, b.structure.base, *b.presentation, complete_fragment(b.structure));
    for (auto& v : p.violations) r.violations.push_back(std::move(v));
  }
  return r;
}

std::string mutate_bundle(Json& bundle, std::mt19937_64& rng) {
  const Json& simplices = bundle.at("complex").at("simplices");
  if (simplices.size() < 2) throw std::invalid_argument("bundle too small to mutate");
  std::vector<Json::json_pointer> ids;
  std::vector<Json::json_pointer> ints;
  Json& ps = bundle.at("pstructure");
  for (std::size_t i = 0; i < ps.at("base").size(); ++i) ids.emplace_back("/pstructure/base/" + std::to_string(i));
  for (std::size_t i = 0; i < ps.value("deferred", Json::array()).size(); ++i) {
    ids.emplace_back("/pstructure/deferred/" + std::to_string(i));
  }
  for (std::size_t i = 0; i < ps.at("pairs").size(); ++i) {
    const std::string p = "/pstructure/pairs/" + std::to_string(i);
    ids.emplace_back(p + "/child");
    ids.emplace_back(p + "/parent");
    ints.emplace_back(p + "/face_index");
  }
  if (bundle.contains("presentation")) {
    const Json& stages = bundle.at("presentation").at("stages");
    for (std::size_t s = 0; s < stages.size(); ++s) {
      for (std::size_t i = 0; i < stages[s].size(); ++i) {
        const std::string p = "/presentation/stages/" + std::to_string(s) + "/" + std::to_string(i);
        ids.emplace_back(p + "/child");
        ids.emplace_back(p + "/parent");
        ints.emplace_back(p + "/horn_dim");
        ints.emplace_back(p + "/horn_index");
      }
    }
  }
  const std::size_t total = ids.size() + ints.size();
  if (total == 0) throw std::invalid_argument("bundle has no mutable fields");
  const std::size_t pick = std::uniform_int_distribution<std::size_t>(0, total - 1)(rng);
  if (pick < ids.size()) {
    const auto& ptr = ids[pick];
    const std::string old = bundle.at(ptr).get<std::string>();
    std::string fresh = old;
    std::uniform_int_distribution<std::size_t> any(0, simplices.size() - 1);
    while (fresh == old) fresh = simplices[any(rng)].at("id").get<std::string>();
    bundle[ptr] = fresh;
    if (ptr.to_string().rfind("/pstructure/base/", 0) == 0) {
      bundle["base"] = bundle.at("pstructure").at("base");
    }
    return ptr.to_string() + ": " + old + " -> " + fresh;
  }
  const auto& ptr = ints[pick - ids.size()];
  const int old = bundle.at(ptr).get<int>();
  int fresh = old;
  std::uniform_int_distribution<int> delta(1, 3);
  while (fresh == old || fresh < 0) fresh = old + (rng() % 2 ? delta(rng) : -delta(rng));
  bundle[ptr] = fresh;
  return ptr.to_string() + ": " + std::to_string(old) + " -> " + std::to_string(fresh);
}

std::vector<HornFill> kan_search(ComplexPtr x, int dim, int iterate, ExBudget budget) {
  if (dim < 1) throw std::invalid_argument("horn dimension must be at least 1");
  if (x->dim_bound() < dim) throw std::invalid_argument("input complex is truncated below the horn dimension");
  ExTower tower = ex_iterate(x, iterate, dim, budget);
  std::vector<HornFill> out;
  const SimplexTable& faces = x->table(dim - 1);
  for (int k = 0; k <= dim; ++k) {
    for (const auto& tuple : face_tuples(*x, dim, k)) {
      HornFill h;
      h.horn_index = k;
      for (std::uint32_t id : tuple) h.faces.push_back(x->key(faces.simplices[id]));
      for (int j = 0; j <= iterate && h.stage < 0; ++j) {
        const FiniteSimplicialSet& s = *tower.stages[static_cast<std::size_t>(j)];
        std::vector<std::uint32_t> ids;
        for (std::uint32_t id : tuple) ids.push_back(s.table_id(tower.units[static_cast<std::size_t>(j)](faces.simplices[id])));
        if (find_filler(s, dim, k, ids)) h.stage = j;
      }
      out.push_back(std::move(h));
    }
  }
  return out;
}

}  // namespace sset::cli
