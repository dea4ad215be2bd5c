// Prints one PASS/FAIL line per acceptance criterion; exits non-zero on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "../unit/oracles.hpp"
#include "sset/lifting.hpp"
#include "sset/prism.hpp"
#include "sset/pullback.hpp"
#include "sset_cli/cli.hpp"

using namespace sset;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (ok) detail.str("");
    if (!ok) detail << "; ";
    ok = false;
    detail << why;
  }
};

std::vector<CertificateBundle> round_trip_pool;

bool criterion(int id, const std::string& name, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << id << " (" << name << "): " << o.detail.str() << " ["
            << std::fixed;
  std::cout.precision(1);
  std::cout << secs << "s]" << std::endl;
  return o.ok;
}

std::string violations(const Report& r) {
  std::string s;
  for (std::size_t i = 0; i < r.violations.size() && i < 3; ++i) {
    s += (i ? ", " : "") + r.violations[i].kind + " " + r.violations[i].subject;
  }
  return s;
}

// Six forms of a chain outside sd Λⁿ_0, each read off independently.
std::vector<char> forms_of(const Chain& c, int n) {
  const unsigned full = (1U << (n + 1)) - 1;
  const unsigned rest = full & ~1U;
  const std::size_t len = c.size();
  const auto has0 = [](unsigned s) { return (s & 1U) != 0; };
  const auto big = [](unsigned s) { return __builtin_popcount(s) >= 2; };
  std::vector<char> out;
  if (c.back() == rest) out.push_back('e');
  if (c.back() != full) return out;
  if (len >= 2 && c[len - 2] == rest) out.push_back('f');
  bool a = true;
  for (std::size_t i = 0; i + 1 < len; ++i) a = a && has0(c[i]) && big(c[i]);
  if (a) out.push_back('a');
  bool b = len >= 2 && c[0] == 1U;
  for (std::size_t i = 1; b && i + 1 < len; ++i) b = has0(c[i]) && big(c[i]);
  if (b) out.push_back('b');
  std::size_t q = 0;
  while (q < len && !has0(c[q])) ++q;
  bool split = q >= 1;
  for (std::size_t i = q; i < len; ++i) split = split && has0(c[i]);
  if (split) {
    if (c[q] != (c[q - 1] | 1U)) out.push_back('c');
    if (c[q] == (c[q - 1] | 1U) && q + 1 < len) out.push_back('d');
  }
  return out;
}

ComplexPtr boundary2(int bound) { return boundary(standard(2, bound)).materialize().complex; }

}  // namespace

int main() {
  bool all = true;

  all &= criterion(1, "equation suite", [](Outcome& o) {
    std::size_t instances = 0;
    std::size_t failures = 0;
    const auto reports = check_equations(6);
    for (const auto& r : reports) {
      instances += r.instances;
      failures += r.failures.size();
      if (!r.failures.empty()) o.fail("equation " + std::to_string(r.equation) + " fails");
    }
    if (reports.size() != 10) o.fail("expected 10 equations");
    if (o.ok) o.detail << reports.size() << "/10 equations, " << instances << " instances, " << failures << " failures";
  });

  all &= criterion(2, "prism certificates", [](Outcome& o) {
    int count = 0;
    for (int m = 1; m <= 4; ++m) {
      for (int n = 0; n <= 4; ++n) {
        for (int k = 0; k <= m; ++k) {
          const std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(k) + ")";
          auto b = cli::prism_bundle(m, n, k);
          const auto& p = b.structure;
          const Report r = verify_pstructure(p);
          if (!r.ok()) o.fail(tag + " " + violations(r));
          if (!b.presentation) {
            o.fail(tag + " does not compile");
            continue;
          }
          const Report rr = verify_presentation(*p.ambient, p.base, *b.presentation);
          if (!rr.ok()) o.fail(tag + " replay " + violations(rr));
          const std::size_t diff = p.ambient->size() - p.base.size();
          if (diff % 2 != 0 || p.pairs.size() != diff / 2) o.fail(tag + " pair count");
          if (!p.deferred.empty()) o.fail(tag + " deferred simplices");
          ++count;
          if (m + n <= 5) round_trip_pool.push_back(std::move(b));
        }
      }
    }
    if (o.ok) o.detail << count << " instances verified, compiled and replayed to Δᵐ×Δⁿ";
  });

  all &= criterion(3, "sd-horn certificates", [](Outcome& o) {
    int count = 0;
    std::size_t classified = 0;
    for (int n = 2; n <= 5; ++n) {
      for (int k = 0; k <= n; ++k) {
        auto b = cli::sd_horn_bundle(n, k);
        const auto& p = b.structure;
        const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
        const Report r = verify_pstructure(p);
        if (!r.ok()) o.fail(tag + " " + violations(r));
        if (!b.presentation || !verify_presentation(*p.ambient, p.base, *b.presentation).ok()) o.fail(tag + " replay");
        ++count;
        round_trip_pool.push_back(std::move(b));
      }
      const SdPtr sd = sd_standard(n);
      const auto in_horn = sd_sub(horn(standard(n), 0));
      for (int v = 0; v < static_cast<int>(sd->complex()->size()); ++v) {
        if (in_horn.contains(v)) continue;
        const Chain c = sd->chain(v);
        const auto forms = forms_of(c, n);
        const auto form = sd_horn_form(c, n);
        if (forms.size() != 1) {
          o.fail("chain " + chain_key(c) + " has " + std::to_string(forms.size()) + " forms");
        } else if (!form || *form != forms[0]) {
          o.fail("chain " + chain_key(c) + " misclassified");
        }
        ++classified;
      }
    }
    if (o.ok) o.detail << count << " instances verified; " << classified << " chains each in exactly one of six forms";
  });

  all &= criterion(4, "Ex unit certificates", [](Outcome& o) {
    const auto square = product_standard(1, 1, 3).grid->complex();
    std::vector<std::tuple<std::string, ComplexPtr, int>> cases = {
        {"Δ¹", standard(1, 3)->complex(), 2},   {"Δ²", standard(2, 3)->complex(), 2}, {"∂Δ²", boundary2(3), 2},
        {"Λ²₁", horn(standard(2, 3), 1).materialize().complex, 2}, {"Δ¹×Δ¹", square, 2}, {"∂Δ²", boundary2(3), 3}};
    std::size_t type_i_total = 0;
    for (const auto& [name, x, bound] : cases) {
      const std::string tag = name + "@" + std::to_string(bound);
      const ExComplex ex(x, bound);
      const ExCertificate cert = ex_pstructure(ex);
      const auto& p = cert.structure;
      const Report r = verify_pstructure(p);
      if (!r.ok()) o.fail(tag + " " + violations(r));
      if (!check_rank_descent(ex, cert).empty()) o.fail(tag + " rank descent");
      const auto pres = compile_presentation(p);
      if (!verify_presentation(*p.ambient, p.base, pres, complete_fragment(p)).ok()) o.fail(tag + " replay");
      std::set<int> base(p.base.begin(), p.base.end());
      std::set<int> parents;
      std::map<int, int> parent_of;
      for (const auto& pr : p.pairs) {
        parent_of[pr.child] = pr.parent;
        parents.insert(pr.parent);
        if (face_positions(*p.ambient, pr.parent, pr.child).size() != 1) o.fail(tag + " face index not unique");
      }
      if (parents.size() != p.pairs.size()) o.fail(tag + " parent not injective");
      const std::set<int> deferred(p.deferred.begin(), p.deferred.end());
      for (int v = 0; v < static_cast<int>(cert.classes.size()); ++v) {
        const ExClass& c = cert.classes[static_cast<std::size_t>(v)];
        const bool is_base = base.count(v) > 0;
        if ((c.type == ExType::unit_image) != is_base) o.fail(tag + " classification is not a partition");
        if (c.type == ExType::type_ii && !deferred.count(v) && !parent_of.count(v)) o.fail(tag + " type II unpaired");
        if (c.type == ExType::type_i && !parents.count(v)) o.fail(tag + " type I not a parent");
        if (c.type == ExType::unit_image) continue;
        const auto [n, id] = ex.locate(v);
        const auto decs = all_decompositions(ex, n, id);
        if (decs.size() != (c.type == ExType::type_i ? 1U : 0U)) o.fail(tag + " decomposition not unique");
        if (c.type == ExType::type_i) ++type_i_total;
      }
      for (const auto& [child, parent] : parent_of) {
        if (cert.classes[static_cast<std::size_t>(child)].type != ExType::type_ii ||
            cert.classes[static_cast<std::size_t>(parent)].type != ExType::type_i) {
          o.fail(tag + " pair types");
        }
      }
    }
    if (o.ok) o.detail << cases.size() << " complexes; parent is a bijection onto " << type_i_total
                       << " type I simplices with unique decompositions";
  });

  all &= criterion(5, "Ex enumeration oracle", [](Outcome& o) {
    const auto x = boundary2(3);
    const ExComplex ex(x, 2);
    if (ex.count(1) != 14) o.fail("|Ex_1| = " + std::to_string(ex.count(1)));
    for (int n = 0; n <= 2; ++n) {
      const std::size_t brute = oracle::count_maps(*x, n);
      if (brute != ex.count(n)) {
        o.fail("n=" + std::to_string(n) + ": " + std::to_string(ex.count(n)) + " vs " + std::to_string(brute));
      }
      o.detail << (n ? ", " : "") << "|Ex_" << n << "| = " << ex.count(n);
    }
    if (o.ok) o.detail << " (both enumerators)";
  });

  all &= criterion(6, "Kan instance checks", [](Outcome& o) {
    const auto x = boundary2(3);
    const auto point = standard(0, 3)->complex();
    if (has_rlp(terminal_map(x, point), LiftingFamily::horns, 2).holds) o.fail("∂Δ² fills all 2-horns");
    const auto fills = cli::kan_search(x, 2, 2, ExBudget::from_environment());
    std::map<int, int> by_stage;
    for (const auto& h : fills) ++by_stage[h.stage];
    if (by_stage.count(-1)) o.fail(std::to_string(by_stage[-1]) + " horns unfilled in Ex²");
    if (o.ok) {
      o.detail << "∂Δ² is not Kan; " << fills.size() << " horns fill in Ex^m with m <= 2 (";
      for (const auto& [s, c] : by_stage) o.detail << (s ? ", " : "") << "m=" << s << ": " << c;
      o.detail << ")";
    }
  });

  all &= criterion(7, "appendix certificates", [](Outcome& o) {
    int count = 0;
    for (int n = 1; n <= 3; ++n) {
      for (int k = 0; k <= n; ++k) {
        const auto fs = identity_fibration(n);
        const auto cert = pullback_horn_pstructure(fs, k);
        const std::string tag = "id" + std::to_string(n) + "," + std::to_string(k);
        if (!cert.table.violations.empty()) o.fail(tag + " Q " + cert.table.violations.front().kind);
        if (cert.a.members() != horn(fs.base, k).members()) o.fail(tag + " pullback is not the horn");
        const Report r = verify_pstructure(cert.structure);
        if (!r.ok()) {
          o.fail(tag + " " + violations(r));
          continue;
        }
        const auto pres = compile_presentation(cert.structure);
        if (!verify_presentation(*fs.total, cert.structure.base, pres).ok()) o.fail(tag + " does not rebuild Δⁿ");
        ++count;
      }
    }
    std::size_t entries = 0;
    std::size_t literal = 0;
    const std::vector<std::pair<std::string, FibrationStructure>> projections = {
        {"Δ¹×N(Z/2)", groupoid_projection_fibration(1, FiniteGroupoid::cyclic(2), 3)},
        {"Δ²×N(codiscrete 2)", groupoid_projection_fibration(2, FiniteGroupoid::codiscrete(2), 3)}};
    for (const auto& [name, fs] : projections) {
      if (!is_fibration_up_to_bound(fs)) o.fail(name + " is not a fibration up to the bound");
      for (int k = 0; k <= fs.n; ++k) {
        const std::string tag = name + " k=" + std::to_string(k);
        const auto cert = pullback_horn_pstructure(fs, k);
        for (const auto& v : cert.table.violations) o.fail(tag + " " + v.kind + " " + v.subject);
        if (!check_q_injective(fs, cert.table).empty()) o.fail(tag + " Q not injective");
        if (!check_profile_descent(fs, cert).empty()) o.fail(tag + " descent");
        literal += check_profile_descent(fs, cert, DescentOrder::profile).size();
        entries += cert.table.entries.size();
        const Report r = verify_pstructure(cert.structure);
        if (!r.ok()) {
          o.fail(tag + " " + violations(r));
          continue;
        }
        const auto pres = compile_presentation(cert.structure);
        if (!verify_presentation(*fs.total, cert.structure.base, pres, complete_fragment(cert.structure)).ok()) {
          o.fail(tag + " replay");
        }
        ++count;
      }
      for (int k = 0; k <= fs.n; ++k) {
        round_trip_pool.push_back(cli::pullback_bundle(
            {{"kind", "groupoid_projection"}, {"n", fs.n}, {"groupoid", fs.n == 1 ? Json{{"kind", "cyclic"}, {"order", 2}}
                                                                                    : Json{{"kind", "codiscrete"}, {"objects", 2}}},
             {"bound", 3}},
            k, -1));
      }
    }
    if (o.ok) {
      o.detail << count << " certificates; " << entries << " Q entries without conflicts, commutation holds; "
               << literal << " faces descend only in the complementary count";
    }
  });

  all &= criterion(8, "mutation soundness", [](Outcome& o) {
    std::mt19937_64 rng(20240601);
    const std::vector<std::pair<std::string, CertificateBundle>> families = {
        {"prism", cli::prism_bundle(2, 2, 1)},
        {"sd-horn", cli::sd_horn_bundle(3, 1)},
        {"ex", cli::ex_bundle(boundary2(3), 2, 1, ExBudget::from_environment())},
        {"pullback", cli::pullback_bundle({{"kind", "groupoid_projection"},
                                           {"n", 1},
                                           {"groupoid", {{"kind", "cyclic"}, {"order", 2}}},
                                           {"bound", 3}},
                                          0, -1)}};
    int detected = 0;
    for (const auto& [name, b] : families) {
      const Json j = to_json(b);
      for (int i = 0; i < 20; ++i) {
        Json m = j;
        const std::string what = cli::mutate_bundle(m, rng);
        if (cli::verify_bundle(bundle_from_json(m)).ok()) {
          o.fail(name + " accepted " + what);
        } else {
          ++detected;
        }
      }
    }
    if (o.ok) o.detail << detected << "/" << 20 * families.size() << " mutations rejected across " << families.size()
                       << " families";
  });

  all &= criterion(9, "round trip", [](Outcome& o) {
    round_trip_pool.push_back(cli::ex_bundle(boundary2(3), 3, 1, ExBudget::from_environment()));
    for (const auto& b : round_trip_pool) {
      const Json j = to_json(b);
      const CertificateBundle back = bundle_from_json(Json::parse(dump(j)));
      if (to_json(back) != j) o.fail(b.provenance.at("command").get<std::string>() + " not lossless");
      if (!cli::verify_bundle(back).ok()) o.fail(b.provenance.at("command").get<std::string>() + " fails verify");
    }
    if (o.ok) o.detail << round_trip_pool.size() << " bundles re-verified after print/parse, all fields preserved";
  });

  return all ? 0 : 1;
}
