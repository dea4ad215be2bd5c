#include "sset/io.hpp"

#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

namespace sset {

namespace {

int lookup(const FiniteSimplicialSet& x, const Json& id) {
  if (!id.is_string()) throw FormatError("simplex id must be a string");
  auto idx = x.find(id.get<std::string>());
  if (!idx) throw FormatError("unknown simplex id '" + id.get<std::string>() + "'");
  return *idx;
}

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json ezpair_to_json(const FiniteSimplicialSet& x, const EZPair& s) {
  auto v = s.degeneracy.values();
  return {{"surj", std::vector<int>(v.begin(), v.end())}, {"core", x.id(s.core)}};
}

EZPair ezpair_from_json(const FiniteSimplicialSet& x, const Json& j) {
  return guarded("simplex", [&] {
    const int core = lookup(x, j.at("core"));
    EZPair s{MonotoneOperator(x.dim_of(core), j.at("surj").get<std::vector<int>>()), core};
    if (!s.degeneracy.is_surjective()) throw FormatError("degeneracy operator is not surjective");
    return s;
  });
}

Json to_json(const FiniteSimplicialSet& x) {
  Json simplices = Json::array();
  for (const NondegSimplex& s : x.nondeg_simplices()) {
    Json faces = Json::array();
    for (const EZPair& f : s.faces) faces.push_back(ezpair_to_json(x, f));
    simplices.push_back({{"id", s.id}, {"dim", s.dim}, {"faces", std::move(faces)}});
  }
  return {{"dim_bound", x.dim_bound()}, {"simplices", std::move(simplices)}};
}

ComplexPtr complex_from_json(const Json& j) {
  return guarded("complex", [&] {
    FiniteSimplicialSet::Builder b(j.at("dim_bound").get<int>());
    for (const Json& s : j.at("simplices")) {
      const int dim = s.at("dim").get<int>();
      std::vector<EZPair> faces;
      for (const Json& f : s.at("faces")) {
        const auto id = f.at("core").get<std::string>();
        auto core = b.find(id);
        if (!core) throw FormatError("face '" + id + "' is not listed before its coface");
        faces.push_back({MonotoneOperator(b.get(*core).dim, f.at("surj").get<std::vector<int>>()), *core});
      }
      b.add(s.at("id").get<std::string>(), dim, std::move(faces));
    }
    return std::move(b).build_shared();
  });
}

Json to_json(const SimplicialMap& f) {
  Json a = Json::object();
  for (std::size_t i = 0; i < f.source().size(); ++i) {
    a[f.source().id(static_cast<int>(i))] = ezpair_to_json(f.target(), f.image_of(static_cast<int>(i)));
  }
  return {{"assignment", std::move(a)}};
}

SimplicialMap map_from_json(const Json& j, ComplexPtr source, ComplexPtr target) {
  return guarded("map", [&] {
    const Json& a = j.at("assignment");
    std::vector<EZPair> img;
    for (std::size_t i = 0; i < source->size(); ++i) {
      img.push_back(ezpair_from_json(*target, a.at(source->id(static_cast<int>(i)))));
    }
    return SimplicialMap(source, target, std::move(img));
  });
}

Json to_json(const PStructure& p) {
  const FiniteSimplicialSet& b = *p.ambient;
  Json base = Json::array();
  for (int i : p.base) base.push_back(b.id(i));
  Json pairs = Json::array();
  for (const PairRecord& r : p.pairs) {
    pairs.push_back({{"child", b.id(r.child)}, {"parent", b.id(r.parent)}, {"face_index", r.face_index}});
  }
  Json deferred = Json::array();
  for (int i : p.deferred) deferred.push_back(b.id(i));
  return {{"base", std::move(base)}, {"pairs", std::move(pairs)}, {"deferred", std::move(deferred)}};
}

PStructure pstructure_from_json(const Json& j, ComplexPtr ambient) {
  return guarded("pstructure", [&] {
    PStructure p;
    p.ambient = ambient;
    for (const Json& id : j.at("base")) p.base.push_back(lookup(*ambient, id));
    for (const Json& r : j.at("pairs")) {
      p.pairs.push_back({lookup(*ambient, r.at("child")), lookup(*ambient, r.at("parent")), r.at("face_index").get<int>()});
    }
    if (j.contains("deferred")) {
      for (const Json& id : j.at("deferred")) p.deferred.push_back(lookup(*ambient, id));
    }
    return p;
  });
}

Json to_json(const FiniteSimplicialSet& b, const AnodynePresentation& p) {
  Json stages = Json::array();
  for (const auto& stage : p.stages) {
    Json s = Json::array();
    for (const HornAttachment& h : stage) {
      s.push_back({{"parent", b.id(h.parent)}, {"child", b.id(h.child)}, {"horn_dim", h.horn_dim},
                   {"horn_index", h.horn_index}});
    }
    stages.push_back(std::move(s));
  }
  return {{"stages", std::move(stages)}};
}

AnodynePresentation presentation_from_json(const Json& j, const FiniteSimplicialSet& b) {
  return guarded("presentation", [&] {
    AnodynePresentation p;
    for (const Json& stage : j.at("stages")) {
      auto& s = p.stages.emplace_back();
      for (const Json& h : stage) {
        s.push_back({lookup(b, h.at("parent")), lookup(b, h.at("child")), h.at("horn_dim").get<int>(),
                     h.at("horn_index").get<int>()});
      }
    }
    return p;
  });
}

Json to_json(const Report& r) {
  Json v = Json::array();
  for (const Violation& x : r.violations) v.push_back({{"kind", x.kind}, {"subject", x.subject}, {"detail", x.detail}});
  return {{"ok", r.ok()}, {"violations", std::move(v)}};
}

Json to_json(const EquationReport& r) {
  return {{"equation", r.equation}, {"instances", r.instances}, {"failures", r.failures}};
}

Json chain_to_json(const Chain& c) {
  Json out = Json::array();
  for (unsigned m : c) {
    Json s = Json::array();
    for (int i = 0; i < 32; ++i) {
      if (m & (1U << i)) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  return out;
}

Json ex_simplex_to_json(const ExComplex& ex, int n, std::uint32_t id) {
  const SdPtr sd = sd_standard(n);
  const FiniteSimplicialSet& x = ex.base();
  Json a = Json::object();
  const auto& vals = ex.values(n, id);
  for (std::size_t ch = 0; ch < vals.size(); ++ch) {
    const Chain c = sd->chain(static_cast<int>(ch));
    const int d = static_cast<int>(c.size()) - 1;
    a[chain_to_json(c).dump()] = ezpair_to_json(x, x.table(d).simplices[vals[ch]]);
  }
  return {{"n", n}, {"assignment", std::move(a)}};
}

Json to_json(const FibrationStructure& fs, const QTable& q) {
  const FiniteSimplicialSet& b = *fs.total;
  Json out = Json::object();
  for (const auto& [x, e] : q.entries) out[b.key(x)] = {{"q", b.key(e.q)}, {"z", e.z}};
  return out;
}

FiniteGroupoid groupoid_from_json(const Json& j) {
  return guarded("groupoid", [&] {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "cyclic") return FiniteGroupoid::cyclic(j.at("order").get<int>());
    if (kind == "codiscrete") return FiniteGroupoid::codiscrete(j.at("objects").get<int>());
    if (kind == "explicit") {
      std::vector<FiniteGroupoid::Morphism> ms;
      for (const Json& m : j.at("morphisms")) {
        ms.push_back({m.at("source").get<int>(), m.at("target").get<int>(), m.at("name").get<std::string>()});
      }
      return FiniteGroupoid(j.at("objects").get<int>(), std::move(ms), j.at("compose").get<std::vector<int>>());
    }
    throw FormatError("unknown groupoid kind '" + kind + "'");
  });
}

FibrationStructure fibration_from_json(const Json& j, int bound) {
  return guarded("fibration", [&] {
    const auto kind = j.at("kind").get<std::string>();
    const int n = j.at("n").get<int>();
    if (j.contains("bound")) bound = j.at("bound").get<int>();
    if (kind == "identity") return identity_fibration(n, bound);
    if (kind == "groupoid_projection") {
      if (bound < 0) throw FormatError("groupoid projection needs a bound");
      return groupoid_projection_fibration(n, groupoid_from_json(j.at("groupoid")), bound);
    }
    throw FormatError("unknown fibration kind '" + kind + "'");
  });
}

Json to_json(const CertificateBundle& b) {
  Json j = {{"complex", to_json(*b.complex)},
            {"base", to_json(b.structure).at("base")},
            {"pstructure", to_json(b.structure)},
            {"provenance", b.provenance}};
  if (b.presentation) j["presentation"] = to_json(*b.complex, *b.presentation);
  if (!b.extra.empty()) j["extra"] = b.extra;
  return j;
}

CertificateBundle bundle_from_json(const Json& j) {
  return guarded("bundle", [&] {
    CertificateBundle b;
    b.complex = complex_from_json(j.at("complex"));
    b.structure = pstructure_from_json(j.at("pstructure"), b.complex);
    if (j.at("base") != j.at("pstructure").at("base")) throw FormatError("base list disagrees with the P-structure");
    if (j.contains("presentation")) b.presentation = presentation_from_json(j.at("presentation"), *b.complex);
    b.provenance = j.value("provenance", Json::object());
    b.extra = j.value("extra", Json::object());
    return b;
  });
}

std::string dump(const Json& j) { return j.dump(1) + "\n"; }

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::system_error(errno, std::generic_category(), "cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw std::system_error(errno, std::generic_category(), "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace sset
