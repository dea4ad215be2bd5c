#include <doctest.h>

#include <algorithm>

#include "sset/prism.hpp"

using namespace sset;

namespace {

bool has_kind(const Report& r, const std::string& kind) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

// Two parallel edges a, b from x to y and two triangles whose faces swap them:
// pairing a with one triangle and b with the other creates a cycle.
PStructure crossed_triangles() {
  FiniteSimplicialSet::Builder bld(2);
  const int x = bld.add("x", 0, {});
  const int y = bld.add("y", 0, {});
  const EZPair px = EZPair::nondegenerate(x, 0);
  const EZPair py = EZPair::nondegenerate(y, 0);
  const int a = bld.add("a", 1, {py, px});
  const int b = bld.add("b", 1, {py, px});
  const EZPair sy{MonotoneOperator::codegeneracy(0, 0), y};
  const EZPair ea = EZPair::nondegenerate(a, 1);
  const EZPair eb = EZPair::nondegenerate(b, 1);
  const int t1 = bld.add("t1", 2, {sy, ea, eb});
  const int t2 = bld.add("t2", 2, {sy, eb, ea});
  PStructure p;
  p.ambient = std::move(bld).build_shared();
  p.base = {x, y};
  p.pairs = {{a, t1, 1}, {b, t2, 1}};
  return p;
}

}  // namespace

TEST_CASE("identity inclusion has the empty P-structure") {
  const auto d2 = standard(2);
  PStructure p{d2->complex(), Subcomplex::full(d2->complex()).members(), {}, {}};
  CHECK(verify_pstructure(p).ok());
  const auto pres = compile_presentation(p);
  CHECK(pres.stages.empty());
  CHECK(verify_presentation(*p.ambient, p.base, pres).ok());
}

TEST_CASE("horn of the interval") {
  const auto d1 = standard(1);
  const auto& b = *d1->complex();
  PStructure p{d1->complex(), horn(d1, 0).members(), {{b.index_of("[1]"), b.index_of("[0,1]"), 0}}, {}};
  CHECK(verify_pstructure(p).ok());
  const auto pres = compile_presentation(p);
  CHECK(pres.stages.size() == 1);
  CHECK(verify_presentation(b, p.base, pres).ok());
}

TEST_CASE("cycles are not well-founded") {
  const auto p = crossed_triangles();
  const auto r = verify_pstructure(p);
  CHECK(has_kind(r, "not_well_founded"));
  CHECK_THROWS_AS(compile_presentation(p), std::invalid_argument);
}

TEST_CASE("prism (1,1,0)") {
  const auto cert = prism_pstructure(1, 1, 0);
  const auto& b = *cert.structure.ambient;
  CHECK(b.size() == 11);
  CHECK(cert.structure.base.size() == 7);
  REQUIRE(cert.structure.pairs.size() == 2);
  const int diag = b.index_of("[[0,0],[1,1]]");
  const int upper = b.index_of("[[0,0],[0,1],[1,1]]");
  CHECK(std::count(cert.structure.pairs.begin(), cert.structure.pairs.end(), PairRecord{diag, upper, 1}) == 1);
  CHECK(verify_pstructure(cert.structure).ok());
  const auto pres = compile_presentation(cert.structure);
  REQUIRE(pres.stages.size() == 2);
  CHECK(pres.stages[0][0].child == diag);
  CHECK(pres.stages[1][0].child == b.index_of("[[1,0],[1,1]]"));
  CHECK(verify_presentation(b, cert.structure.base, pres).ok());

  const AncestralGraph g(cert.structure);
  const int right = b.index_of("[[1,0],[1,1]]");
  const auto pred = g.predecessors(right);
  CHECK(std::count(pred.begin(), pred.end(), diag) == 1);
  CHECK(std::count(pred.begin(), pred.end(), upper) == 1);
  CHECK(g.predecessors(b.index_of("[[0,0]]")).empty());
}

TEST_CASE("prism certificates verify and compile") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      for (int k = 0; k <= m; ++k) {
        CAPTURE(m);
        CAPTURE(n);
        CAPTURE(k);
        const auto cert = prism_pstructure(m, n, k);
        const auto& p = cert.structure;
        REQUIRE(verify_pstructure(p).ok());
        REQUIRE(2 * p.pairs.size() + p.base.size() == p.ambient->size());
        const auto pres = compile_presentation(p);
        REQUIRE(verify_presentation(*p.ambient, p.base, pres).ok());
        const AncestralGraph g(p);
        const auto f = filtration_levels(p);
        for (int x = 0; x < g.size(); ++x) {
          const auto a = g.predecessors(x);
          REQUIRE(a == g.predecessors_by_saturation(x));
          if (f[static_cast<std::size_t>(x)] < 0) continue;
          for (int y : a) {
            if (f[static_cast<std::size_t>(y)] >= 0) REQUIRE(f[static_cast<std::size_t>(y)] < f[static_cast<std::size_t>(x)]);
          }
        }
      }
    }
  }
  CHECK_THROWS(prism_pstructure(0, 1, 0));
}

TEST_CASE("presentation replay catches a dropped stage") {
  const auto cert = prism_pstructure(1, 1, 0);
  auto pres = compile_presentation(cert.structure);
  pres.stages.erase(pres.stages.begin());
  const auto r = verify_presentation(*cert.structure.ambient, cert.structure.base, pres);
  CHECK(has_kind(r, "missing_face"));
  CHECK(has_kind(r, "incomplete"));
}

TEST_CASE("verifier rejects single-field mutations of a prism certificate") {
  const auto cert = prism_pstructure(2, 1, 1);
  {
    auto p = cert.structure;
    p.pairs[0].face_index = (p.pairs[0].face_index + 1) % (p.ambient->dim_of(p.pairs[0].parent) + 1);
    CHECK(has_kind(verify_pstructure(p), "face_index"));
  }
  {
    auto p = cert.structure;
    p.base.pop_back();
    CHECK_FALSE(verify_pstructure(p).ok());
  }
  {
    auto p = cert.structure;
    std::swap(p.pairs[0].child, p.pairs[0].parent);
    CHECK_FALSE(verify_pstructure(p).ok());
  }
}
