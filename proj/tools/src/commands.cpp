#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <map>

#include "sset/lifting.hpp"
#include "sset/pullback.hpp"
#include "sset_cli/cli.hpp"

namespace sset::cli {

namespace {

struct Common {
  std::string out;
  bool json = false;
  std::optional<std::size_t> max_simplices;
  double timeout = 0;

  ExBudget budget() const {
    ExBudget b = ExBudget::from_environment();
    if (max_simplices) b.max_simplices = *max_simplices;
    b.timeout_seconds = timeout;
    return b;
  }
};

void add_common(CLI::App* c, Common& o) {
  c->add_option("--out", o.out, "Write the result to this file");
  c->add_flag("--json", o.json, "Machine-readable summary on stdout");
  c->add_option("--max-simplices", o.max_simplices, "Enumeration budget (overrides SSET_BUDGET)");
  c->add_option("--timeout", o.timeout, "Enumeration deadline in seconds (0 = none)")->check(CLI::NonNegativeNumber);
}

std::string text_report(const Report& r) {
  if (r.ok()) return "verification: ok\n";
  std::string s = "verification: " + std::to_string(r.violations.size()) + " violation(s)\n";
  for (const Violation& v : r.violations) s += "  " + v.kind + " " + v.subject + ": " + v.detail + "\n";
  return s;
}

Json bundle_summary(const CertificateBundle& b) {
  return {{"simplices", b.complex->size()},
          {"base", b.structure.base.size()},
          {"pairs", b.structure.pairs.size()},
          {"deferred", b.structure.deferred.size()},
          {"stages", b.presentation ? Json(b.presentation->stages.size()) : Json(nullptr)}};
}

int emit_bundle(const CertificateBundle& b, const Common& o, std::ostream& out) {
  const Report r = verify_bundle(b);
  const std::string text = dump(to_json(b));
  if (o.out.empty()) {
    out << text;
  } else {
    write_file_atomic(o.out, text);
    Json s = bundle_summary(b);
    if (o.json) {
      s["out"] = o.out;
      s["verification"] = to_json(r);
      out << dump(s);
    } else {
      out << "wrote " << o.out << "\n";
      for (const auto& [k, v] : s.items()) out << k << ": " << v.dump() << "\n";
      out << text_report(r);
    }
  }
  return r.ok() ? exit_ok : exit_verification;
}

void emit(const Json& j, const std::string& text, const Common& o, std::ostream& out) {
  if (!o.out.empty()) write_file_atomic(o.out, dump(j));
  out << (o.json ? dump(j) : text);
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certificates for strong anodyne extensions of finite simplicial sets", "sset"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SSET_VERSION);
  Common o;
  std::function<int()> action;

  int m = 1, n = 1, k = 0, bound = -1, iterate = 1, max_n = 6, dim = 2;
  std::string input, config, bundle_path;

  auto* prism = app.add_subcommand("prism", "P-structure on the prism (Δᵐ×∂Δⁿ) ∪ (Λᵐ_k×Δⁿ) ↪ Δᵐ×Δⁿ");
  prism->add_option("--m", m)->required()->check(CLI::Range(1, 6));
  prism->add_option("--n", n)->required()->check(CLI::Range(0, 6));
  prism->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  add_common(prism, o);
  prism->callback([&] { action = [&] { return emit_bundle(prism_bundle(m, n, k), o, out); }; });

  auto* sdh = app.add_subcommand("sd-horn", "P-structure on sd Λⁿ_k ↪ sd Δⁿ");
  sdh->add_option("--n", n)->required()->check(CLI::Range(1, 6));
  sdh->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  add_common(sdh, o);
  sdh->callback([&] { action = [&] { return emit_bundle(sd_horn_bundle(n, k), o, out); }; });

  auto* ex = app.add_subcommand("ex", "P-structure on X → Ex X within a dimension bound");
  ex->add_option("--input", input, "Complex JSON")->required()->check(CLI::ExistingFile);
  ex->add_option("--bound,--dim", bound, "Dimension bound")->required()->check(CLI::Range(0, 6));
  ex->add_option("--iterate", iterate, "Certify Ex^(i-1) X → Ex^i X")->check(CLI::Range(1, 4));
  add_common(ex, o);
  ex->callback([&] {
    action = [&] {
      return emit_bundle(ex_bundle(complex_from_json(read_json_file(input)), bound, iterate, o.budget()), o, out);
    };
  });

  auto* pb = app.add_subcommand("pullback", "P-structure on the pullback of Λⁿ_k along a fibration");
  pb->add_option("--config", config, "Fibration JSON")->required()->check(CLI::ExistingFile);
  pb->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  pb->add_option("--bound", bound, "Dimension bound (default: from the config, else n)");
  add_common(pb, o);
  pb->callback([&] { action = [&] { return emit_bundle(pullback_bundle(read_json_file(config), k, bound), o, out); }; });

  auto* verify = app.add_subcommand("verify", "Re-check a certificate bundle");
  verify->add_option("bundle", bundle_path)->required()->check(CLI::ExistingFile);
  add_common(verify, o);
  verify->callback([&] {
    action = [&] {
      const Report r = verify_bundle(bundle_from_json(read_json_file(bundle_path)));
      emit(to_json(r), text_report(r), o, out);
      return r.ok() ? exit_ok : exit_verification;
    };
  });

  auto* compile = app.add_subcommand("compile", "Compile the P-structure of a bundle into a presentation");
  compile->add_option("bundle", bundle_path)->required()->check(CLI::ExistingFile);
  add_common(compile, o);
  compile->callback([&] {
    action = [&] {
      CertificateBundle b = bundle_from_json(read_json_file(bundle_path));
      const Report r = verify_pstructure(b.structure);
      if (!r.ok()) {
        err << text_report(r);
        return static_cast<int>(exit_verification);
      }
      b.presentation = compile_presentation(b.structure);
      return emit_bundle(b, o, out);
    };
  });

  auto* eq = app.add_subcommand("eqcheck", "Check the j/r equations on sd Δⁿ exhaustively");
  eq->add_option("--max-n", max_n, "Largest dimension")->check(CLI::Range(0, 8));
  add_common(eq, o);
  eq->callback([&] {
    action = [&] {
      const auto reports = check_equations(max_n);
      Json j = Json::array();
      std::string text;
      std::size_t ok = 0, failures = 0;
      for (const auto& r : reports) {
        j.push_back(to_json(r));
        text += "equation " + std::to_string(r.equation) + ": " + std::to_string(r.instances) + " instances, " +
                std::to_string(r.failures.size()) + " failures\n";
        if (r.failures.empty()) ++ok;
        failures += r.failures.size();
      }
      text += std::to_string(ok) + "/" + std::to_string(reports.size()) + " equations, " + std::to_string(failures) +
              " failures\n";
      emit(j, text, o, out);
      return failures == 0 ? exit_ok : exit_verification;
    };
  });

  auto* kan = app.add_subcommand("kan", "Horn lifting checks against X → Δ⁰ and its Ex iterates");
  kan->add_option("--input", input, "Complex JSON")->required()->check(CLI::ExistingFile);
  kan->add_option("--dim", dim, "Horn dimension")->check(CLI::Range(1, 4));
  kan->add_option("--iterate", iterate, "Largest Ex iterate to search")->check(CLI::Range(0, 3));
  add_common(kan, o);
  kan->callback([&] {
    action = [&] {
      const ComplexPtr x = complex_from_json(read_json_file(input));
      const auto point = standard(0, x->dim_bound())->complex();
      const LiftingResult lr = has_rlp(terminal_map(x, point), LiftingFamily::horns, std::min(dim, x->dim_bound()));
      const auto fills = kan_search(x, dim, iterate, o.budget());
      std::map<int, std::size_t> by_stage;
      Json horns = Json::array();
      bool all = true;
      for (const HornFill& h : fills) {
        ++by_stage[h.stage];
        all = all && h.stage >= 0;
        horns.push_back({{"horn_index", h.horn_index}, {"faces", h.faces}, {"stage", h.stage}});
      }
      Json j = {{"kan_in_dims_up_to_dim", lr.holds}, {"squares", lr.squares}, {"horns", horns}};
      std::string text = std::string("X has horn fillers up to dimension ") + std::to_string(dim) + ": " +
                         (lr.holds ? "yes" : "no") + "\n";
      for (const auto& [s, c] : by_stage) {
        text += s < 0 ? "unfilled up to Ex^" + std::to_string(iterate) + ": " + std::to_string(c) + "\n"
                      : "first filled in Ex^" + std::to_string(s) + ": " + std::to_string(c) + "\n";
      }
      emit(j, text, o, out);
      return all ? exit_ok : exit_verification;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }
  try {
    return action();
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return exit_resource;
  } catch (const CertificateError& e) {
    err << "certificate: " << e.what() << "\n";
    return exit_verification;
  } catch (const FormatError& e) {
    err << "input: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::out_of_range& e) {
    err << "out of range: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
}

}  // namespace sset::cli
