#include <doctest.h>

#include <algorithm>
#include <map>

#include "sset/subdivision.hpp"

using namespace sset;

namespace {

std::size_t count_dim(const FiniteSimplicialSet& x, int d) { return x.nondeg_of_dim(d).size(); }

std::size_t count_dim(const Subcomplex& a, int d) {
  return static_cast<std::size_t>(std::count_if(a.members().begin(), a.members().end(),
                                                [&](int i) { return a.ambient().dim_of(i) == d; }));
}

}  // namespace

TEST_CASE("sd of standard simplices") {
  const auto s1 = sd_standard(1)->complex();
  CHECK(count_dim(*s1, 0) == 3);
  CHECK(count_dim(*s1, 1) == 2);
  const auto s2 = sd_standard(2)->complex();
  CHECK(count_dim(*s2, 0) == 7);
  CHECK(count_dim(*s2, 1) == 12);
  CHECK(count_dim(*s2, 2) == 6);
  std::size_t fact = 1;
  for (int n = 0; n <= 4; ++n) {
    fact *= static_cast<std::size_t>(n + 1);
    CHECK(sd_standard(n)->maximal().size() == fact);
  }
}

TEST_CASE("sd of monotone operators") {
  CHECK(sd_monotone(MonotoneOperator::identity(2)) == SimplicialMap::identity(sd_standard(2)->complex()));
  const auto d0 = sd_monotone(MonotoneOperator::coface(2, 0));
  const auto& s1 = *sd_standard(1);
  const auto& s2 = *sd_standard(2);
  const auto img = d0(s1.complex()->simplex(s1.index_of({0b01, 0b11})));
  CHECK(img == s2.complex()->simplex(s2.index_of({0b010, 0b110})));
  const auto s0 = sd_monotone(MonotoneOperator::codegeneracy(0, 0));
  for (int v : s1.complex()->nondeg_of_dim(0)) CHECK(s0.image_of(v).core == 0);
}

TEST_CASE("sd of subcomplexes") {
  const auto d2 = standard(2);
  const auto bd = sd_sub(boundary(d2));
  CHECK(count_dim(bd, 0) == 6);
  CHECK(count_dim(bd, 1) == 6);
  const auto h = sd_sub(horn(d2, 0));
  CHECK(count_dim(h, 0) == 5);
  CHECK(count_dim(h, 1) == 4);
  CHECK(sd_sub(Subcomplex::full(d2->complex())).size() == sd_standard(2)->complex()->size());
}

TEST_CASE("last vertex map") {
  CHECK(last_vertex(0).image_of(0).core == 0);
  const auto lv1 = last_vertex(1);
  const auto& s1 = *sd_standard(1);
  const auto e = lv1(s1.complex()->simplex(s1.index_of({0b01, 0b11})));
  CHECK(lv1.target().key(e) == "[0,1]");
  const auto lv2 = last_vertex(2);
  const auto& s2 = *sd_standard(2);
  const auto f = lv2(s2.complex()->simplex(s2.index_of({0b010, 0b011})));
  CHECK(lv2.target().key(f) == "[1]*[0,0]");

  // naturality against all operators of small dimension
  std::vector<SimplicialMap> lv;
  std::vector<NervePtr> st;
  for (int n = 0; n <= 4; ++n) {
    lv.push_back(last_vertex(n));
    st.push_back(standard(n));
  }
  for (int m = 0; m <= 4; ++m) {
    const auto& lm = lv[static_cast<std::size_t>(m)];
    for (int n = 0; n <= 4; ++n) {
      for (const auto& op : monotone_maps(m, n)) {
        const auto left = compose(lv[static_cast<std::size_t>(n)], sd_monotone(op));
        for (int v = 0; v < static_cast<int>(lm.source().size()); ++v) {
          std::vector<int> seq;
          for (int w : lm.target().vertices(lm.image_of(v))) seq.push_back(op(w));
          REQUIRE(left.image_of(v) == st[static_cast<std::size_t>(n)]->simplex_of(seq));
        }
      }
    }
  }
}

TEST_CASE("j and r maps") {
  for (int n = 0; n <= 4; ++n) {
    CHECK(j_join(n, n) == JoinMap::identity(n));
    CHECK(j_map(n, n) == SimplicialMap::identity(sd_standard(n)->complex()));
    CHECK(r_join(n, 0) == JoinMap::of(MonotoneOperator::codegeneracy(n, 0)));
    for (int k = 0; k <= n; ++k) {
      CHECK(compose(j_join(n, k), j_join(n, k)) == j_join(n, k));
      for (int l = k; l <= n; ++l) CHECK(compose(j_join(n, k), j_join(n, l)) == j_join(n, k));
    }
  }
  CHECK(j_join(2, 1)(0b100) == 0b111);
  CHECK(r_join(1, 1)(0b100) == 0b011);
  CHECK(r_join(2, 1)(0b1100) == 0b111);
  CHECK_THROWS(j_join(2, 3));
  // j_n^0 is the last vertex map followed by the inclusion of vertices
  for (int n = 0; n <= 4; ++n) {
    for (unsigned s = 1; s < (1U << (n + 1)); ++s) {
      const int top = 31 - __builtin_clz(s);
      CHECK(j_join(n, 0)(s) == (1U << (top + 1)) - 1);
    }
  }
}

TEST_CASE("the ten equations") {
  const auto reps = check_equations(6);
  const std::map<int, std::size_t> expected{{1, 15}, {2, 50}, {3, 20}, {4, 112}, {5, 35},
                                            {6, 35}, {7, 10}, {8, 50}, {9, 35},  {10, 20}};
  for (const auto& r : reps) {
    CAPTURE(r.equation);
    CHECK(r.failures.empty());
    CHECK(r.instances == expected.at(r.equation));
  }
}

TEST_CASE("sd horn forms at k = 0") {
  const auto& sd = *sd_standard(2);
  CHECK(sd_horn_form({0b110}, 2) == 'e');
  CHECK(sd_horn_form({0b110, 0b111}, 2) == 'f');
  const auto cert = sd_horn_pstructure(2, 0);
  const int e = sd.index_of({0b110});
  const int f = sd.index_of({0b110, 0b111});
  CHECK(std::count(cert.structure.pairs.begin(), cert.structure.pairs.end(), PairRecord{e, f, 1}) == 1);
  CHECK(cert.structure.pairs.size() == 8);
  CHECK(sd.complex()->size() == 25);
  CHECK(cert.structure.base.size() == 9);
}

TEST_CASE("sd horn certificates") {
  for (int n = 2; n <= 5; ++n) {
    const auto& sd = *sd_standard(n);
    std::map<char, int> counts;
    const auto base = sd_sub(horn(standard(n), 0));
    for (int v = 0; v < static_cast<int>(sd.complex()->size()); ++v) {
      const auto form = sd_horn_form(sd.chain(v), n);
      REQUIRE(form.has_value() != base.contains(v));
      if (form) ++counts[*form];
    }
    CHECK(counts['a'] == counts['b']);
    CHECK(counts['c'] == counts['d']);
    CHECK(counts['e'] == counts['f']);
    for (int k = 0; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const auto cert = sd_horn_pstructure(n, k);
      REQUIRE(verify_pstructure(cert.structure).ok());
      const auto pres = compile_presentation(cert.structure);
      REQUIRE(verify_presentation(*cert.structure.ambient, cert.structure.base, pres).ok());
    }
  }
}
