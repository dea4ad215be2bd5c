#include <doctest.h>

#include <algorithm>

#include "sset/groupoid.hpp"
#include "sset/lifting.hpp"
#include "sset/nerve.hpp"
#include "sset/pullback.hpp"

using namespace sset;

namespace {

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t count_dim(const FiniteSimplicialSet& x, int d) { return x.nondeg_of_dim(d).size(); }

std::size_t count_dim(const Subcomplex& a, int d) {
  return static_cast<std::size_t>(std::count_if(a.members().begin(), a.members().end(),
                                                [&](int i) { return a.ambient().dim_of(i) == d; }));
}

SimplicialMap to_point(const ComplexPtr& x) { return terminal_map(x, standard(0, x->dim_bound())->complex()); }

}  // namespace

TEST_CASE("operator composition") {
  const auto d1 = MonotoneOperator::coface(2, 1);
  CHECK(compose(MonotoneOperator::identity(2), d1) == d1);
  CHECK(compose(MonotoneOperator::codegeneracy(0, 0), MonotoneOperator::coface(1, 0)) == MonotoneOperator::identity(0));
  const auto c = compose(MonotoneOperator::coface(2, 2), MonotoneOperator::codegeneracy(1, 1));
  CHECK(c == MonotoneOperator(2, {0, 1, 1}));
  CHECK_THROWS_AS(compose(d1, d1), std::invalid_argument);
  CHECK_THROWS(MonotoneOperator(2, {1, 0}));
}

TEST_CASE("epi-mono factorization is unique and recomposes") {
  const auto op = MonotoneOperator(2, {0, 0, 2});
  const auto em = ez_factorize(op);
  CHECK(em.surjection == MonotoneOperator(1, {0, 0, 1}));
  CHECK(em.injection == MonotoneOperator(2, {0, 2}));
  const auto id = ez_factorize(MonotoneOperator::identity(3));
  CHECK(id.surjection.is_identity());
  CHECK(id.injection.is_identity());
  for (int m = 0; m <= 6; ++m) {
    for (int n = 0; n <= 6; ++n) {
      for (const auto& f : monotone_maps(m, n)) {
        const auto e = ez_factorize(f);
        REQUIRE(e.surjection.is_surjective());
        REQUIRE(e.injection.is_injective());
        REQUIRE(compose(e.injection, e.surjection) == f);
        if (f.is_injective()) REQUIRE(e.surjection.is_identity());
      }
    }
  }
}

TEST_CASE("simplex counts of standard complexes") {
  const auto d0 = standard(0, 2);
  CHECK(d0->complex()->simplices(2).size() == 1);
  CHECK(standard(1)->complex()->simplices(1).size() == 3);
  const auto d2 = standard(2);
  const auto bd = boundary(d2).materialize();
  CHECK(bd.complex->simplices(1).size() == 6);
  CHECK(count_dim(*bd.complex, 0) == 3);
  CHECK(count_dim(*bd.complex, 1) == 3);
  CHECK(count_dim(*bd.complex, 2) == 0);
  const auto h = horn(d2, 1);
  CHECK(count_dim(h, 0) == 3);
  CHECK(count_dim(h, 1) == 2);
  const auto h10 = horn(standard(1), 0);
  CHECK(h10.size() == 1);
  CHECK(h10.ambient().id(h10.members()[0]) == "[0]");
  CHECK_THROWS(horn(d2, 3));
  CHECK_THROWS(d2->complex()->simplices(3));
}

TEST_CASE("faces and degeneracies act functorially") {
  const auto d1 = standard(1, 3);
  const auto& x = *d1->complex();
  const EZPair e = x.simplex(x.index_of("[0,1]"));
  CHECK(x.key(x.face(e, 0)) == "[1]");
  const EZPair v = x.simplex(x.index_of("[0]"));
  CHECK(x.face(x.degeneracy(v, 0), 0) == v);
  CHECK(x.apply(e, MonotoneOperator::identity(1)) == e);

  const auto bd = boundary(standard(2, 3)).materialize();
  for (const auto* c : {&x, bd.complex.get()}) {
    c->validate();
    for (int d = 0; d <= 2; ++d) {
      for (const auto& s : c->simplices(d)) {
        for (int m = 0; m <= 2; ++m) {
          for (const auto& f : monotone_maps(m, d)) {
            for (int l = 0; l <= 2; ++l) {
              for (const auto& g : monotone_maps(l, m)) {
                REQUIRE(c->apply(s, compose(f, g)) == c->apply(c->apply(s, f), g));
              }
            }
          }
        }
        for (int j = 0; j < d && d >= 2; ++j) {
          for (int i = 0; i < j; ++i) REQUIRE(c->face(c->face(s, j), i) == c->face(c->face(s, i), j - 1));
        }
      }
    }
  }
}

TEST_CASE("nerves of posets") {
  CHECK(nerve(FinitePoset::chain(0), 3)->complex()->size() == 1);
  const auto n2 = nerve(FinitePoset::chain(2), 2);
  CHECK(count_dim(*n2->complex(), 2) == 1);
  const auto sub = nerve(FinitePoset::nonempty_subsets(1), 2);
  CHECK(count_dim(*sub->complex(), 0) == 3);
  CHECK(count_dim(*sub->complex(), 1) == 2);
  CHECK(count_dim(*sub->complex(), 2) == 0);
  CHECK_THROWS(FinitePoset({"a", "b"}, [](int, int) { return true; }));
}

TEST_CASE("products of standard simplices are lattice walks") {
  const auto p = product_standard(1, 1);
  CHECK(count_dim(*p.grid->complex(), 2) == 2);
  CHECK(count_dim(*p.grid->complex(), 1) == 5);
  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; m + n <= 8 && n <= 4; ++n) {
      const auto q = product_standard(m, n);
      CHECK(static_cast<long>(count_dim(*q.grid->complex(), m + n)) == binomial(m + n, m));
    }
  }
}

TEST_CASE("pullbacks") {
  const auto d2 = standard(2);
  const auto id = SimplicialMap::identity(d2->complex());
  const Pullback pb(id, id);
  CHECK(pb.complex()->size() == d2->complex()->size());

  const auto h = horn(d2, 0).materialize();
  const Pullback ph(h.inclusion, id);
  CHECK(ph.complex()->size() == h.complex->size());

  const auto point = standard(0, 2)->complex();
  const Pullback prod = product(d2->complex(), point);
  const Pullback pp(h.inclusion, prod.first());
  CHECK(pp.complex()->size() == h.complex->size());

  const Pullback sq = product(standard(1, 2)->complex(), standard(1, 2)->complex());
  CHECK(count_dim(*sq.complex(), 2) == 2);
  CHECK(count_dim(*sq.complex(), 1) == 5);

  CHECK_THROWS(Pullback(id, SimplicialMap::identity(standard(2, 3)->complex())));
}

TEST_CASE("lifting properties") {
  const auto bd = boundary(standard(2)).materialize();
  const auto r = has_rlp(to_point(bd.complex), LiftingFamily::horns, 2);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(r.witness->dim == 2);

  const auto pt = standard(0, 3)->complex();
  CHECK(has_rlp(to_point(pt), LiftingFamily::horns, 3).holds);

  const GroupoidNerve g(FiniteGroupoid::codiscrete(2), 3);
  const auto rg = has_rlp(to_point(g.complex()), LiftingFamily::horns, 3);
  CHECK(rg.holds);
  CHECK(rg.squares > 0);
  const GroupoidNerve z2(FiniteGroupoid::cyclic(2), 3);
  CHECK(has_rlp(to_point(z2.complex()), LiftingFamily::horns, 3).holds);
}

TEST_CASE("groupoid nerves") {
  const GroupoidNerve g(FiniteGroupoid::cyclic(2), 3);
  CHECK(count_dim(*g.complex(), 0) == 1);
  CHECK(count_dim(*g.complex(), 1) == 1);
  CHECK(count_dim(*g.complex(), 3) == 1);
  g.complex()->validate();
  const NerveString s{0, {1, 0, 1}};
  const auto x = g.simplex_of(s);
  CHECK_FALSE(x.is_nondegenerate());
  CHECK(g.string_of(x).morphisms == s.morphisms);
}
