// rsurf: reduce classes, report symplectic invariants, regenerate tables.
//
// Exit codes: 0 success, 1 verification or table mismatch, 2 malformed input,
// 3 precondition failure (e.g. a form that is not reduced).

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "acceptance.hpp"
#include "rsurf/braid.hpp"
#include "rsurf/cone.hpp"
#include "rsurf/cremona.hpp"
#include "rsurf/errors.hpp"
#include "rsurf/json.hpp"
#include "rsurf/roots.hpp"
#include "rsurf/smcg.hpp"
#include "rsurf/tables.hpp"

namespace {

using namespace rsurf;

enum class Format { json, markdown, plain };

struct Common {
  Format format = Format::plain;
};

void add_format(CLI::App* cmd, Common& common) {
  const std::map<std::string, Format> names{
      {"json", Format::json}, {"markdown", Format::markdown}, {"plain", Format::plain}};
  cmd->add_option("--format", common.format, "json, markdown or plain")
      ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
}

std::string steps_text(const std::vector<Move>& steps) {
  if (steps.empty()) return "(none)";
  std::string s;
  for (std::size_t i = 0; i < steps.size(); ++i) s += (i ? " " : "") + to_string(steps[i]);
  return s;
}

int cmd_reduce(const std::string& text, Format fmt) {
  const HomologyClass x = parse_class(text);
  const ReductionTrace tr = reduce(x);
  switch (fmt) {
    case Format::json:
      std::cout << to_json(tr).dump(2) << '\n';
      break;
    case Format::markdown: {
      std::cout << "| step | move | class |\n|---|---|---|\n";
      std::cout << "| 0 | | " << to_string(x) << " |\n";
      HomologyClass cur = x;
      for (std::size_t i = 0; i < tr.steps.size(); ++i) {
        cur = apply_move(cur, tr.steps[i]);
        std::cout << "| " << i + 1 << " | " << to_string(tr.steps[i]) << " | " << to_string(cur) << " |\n";
      }
      break;
    }
    case Format::plain:
      std::cout << "input   " << to_string(x) << "  (" << to_symbolic(x) << ")\n"
                << "output  " << to_string(tr.output) << "  (" << to_symbolic(tr.output) << ")\n"
                << "steps   " << steps_text(tr.steps) << '\n';
      break;
  }
  return 0;
}

void print_report(const SMCGReport& r, const std::optional<FormReductionTrace>& trace,
                  const SymplecticVector& w, Format fmt) {
  if (fmt == Format::json) {
    Json out{{"form", to_json(w)}};
    if (trace) out["reduction"] = to_json(*trace);
    out["report"] = to_json(r);
    std::cout << out.dump(2) << '\n';
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows{
      {"form", to_string(w)},
      {"face", r.face.str()},
      {"Γ_L", r.gamma_l.str()},
      {"N_ω", std::to_string(r.n_omega)},
      {"N_L", std::to_string(r.n_l)},
      {"|W(Γ_L)|", std::to_string(r.weyl_order)},
  };
  if (trace) rows.insert(rows.begin() + 1, {"reduction", steps_text(trace->steps)});
  if (r.torelli) rows.emplace_back("Torelli", to_string(*r.torelli));
  rows.emplace_back("π₀", r.pi0_kernel() + " -> π₀ -> " + r.pi0_quotient());
  rows.emplace_back("π₁ rank", std::to_string(r.pi1_rank));
  if (r.packing) rows.emplace_back("packing", *r.packing ? "yes" : "no");
  if (r.balanced) rows.emplace_back("balanced", *r.balanced ? "yes" : "no");
  if (fmt == Format::markdown) {
    std::cout << "| field | value |\n|---|---|\n";
    for (const auto& [k, v] : rows) std::cout << "| " << k << " | " << v << " |\n";
  } else {
    for (const auto& [k, v] : rows) std::cout << k << ": " << v << '\n';
  }
}

int cmd_report(const std::string& text, bool auto_reduce, Format fmt) {
  SymplecticVector w = parse_form(text);
  std::optional<FormReductionTrace> trace;
  if (auto_reduce) {
    trace = reduce(w);
    w = trace->output.normalized();
  }
  print_report(full_report(w), trace, w, fmt);
  return 0;
}

int cmd_table(int k, Format fmt) {
  const Table t = regenerate_table(k);
  switch (fmt) {
    case Format::json: std::cout << to_json(t).dump(2) << '\n'; break;
    case Format::markdown: std::cout << render_markdown(t); break;
    case Format::plain: std::cout << render_plain(t); break;
  }
  int status = 0;
  for (const auto& m : compare_with_golden(t)) {
    if (m.whitelisted) {
      std::cerr << "note: " << m.face << " " << m.column << " computed " << m.actual << ", reference "
                << m.expected << " (accepted, see table notes)\n";
      continue;
    }
    std::cerr << "mismatch: " << m.face << " " << m.column << " computed " << m.actual << ", reference "
              << m.expected << '\n';
    status = 1;
  }
  return status;
}

int cmd_verify(std::uint64_t seed, Format fmt) {
  acceptance::Options opt;
  opt.seed = seed;
  const auto results = acceptance::run_all(opt);
  bool ok = true;
  Json arr = Json::array();
  for (const auto& r : results) {
    ok = ok && r.pass;
    if (fmt == Format::json) {
      arr.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    } else if (fmt == Format::markdown) {
      if (r.id == 1) std::cout << "| # | criterion | result | detail |\n|---|---|---|---|\n";
      std::cout << "| " << r.id << " | " << r.name << " | " << (r.pass ? "PASS" : "FAIL") << " | " << r.detail
                << " |\n";
    } else {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << ": " << r.detail << '\n';
    }
  }
  if (fmt == Format::json) std::cout << Json{{"seed", seed}, {"pass", ok}, {"criteria", arr}}.dump(2) << '\n';
  return ok ? 0 : 1;
}

int cmd_braid(int n, bool quotient, Format fmt) {
  const auto pure_ab = braid::pure_braid_ab_rank(n, quotient);
  const auto sphere = braid::sphere_braid_presentation(n);
  const auto sphere_ab = braid::abelianization(sphere);
  const auto matrix = braid::pure_braid_relation_matrix(n, quotient);
  const auto snf = braid::smith_normal_form(matrix);
  if (fmt == Format::json) {
    Json gens = Json::array();
    for (auto [i, j] : braid::pair_list(n)) {
      gens.push_back(Json{{"pair", {i, j}}, {"word", braid::pure_generator(i, j, n)}});
    }
    Json out{{"n", n},
             {"sphere_braid", to_json(sphere)},
             {"sphere_braid_ab", to_json(sphere_ab)},
             {"pure_generators", gens},
             {"quotient_full_twist", quotient},
             {"relation_matrix", to_json(matrix)},
             {"smith", to_json(snf)},
             {"pure_braid_ab", to_json(pure_ab)}};
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  std::ostringstream diag;
  for (auto d : snf.diagonal()) diag << (diag.tellp() > 0 ? " " : "") << d;
  const bool md = fmt == Format::markdown;
  if (md) std::cout << "| generator | word |\n|---|---|\n";
  for (auto [i, j] : braid::pair_list(n)) {
    const std::string name = "A" + std::to_string(i) + std::to_string(j);
    const std::string word = braid::to_string(braid::pure_generator(i, j, n), "s");
    if (md) {
      std::cout << "| " << name << " | " << word << " |\n";
    } else {
      std::cout << name << " = " << word << '\n';
    }
  }
  if (md) std::cout << '\n';
  std::cout << (md ? "- " : "") << "Br_" << n << "(S2) abelianization: " << sphere_ab.str() << '\n'
            << (md ? "- " : "") << "Smith diagonal: " << diag.str() << '\n'
            << (md ? "- " : "") << "PB_" << n << "(S2)" << (quotient ? "/<tau>" : "")
            << " abelianization: " << pure_ab.str() << '\n';
  return 0;
}

int cmd_roots(int k, bool positive_only, Format fmt) {
  const auto roots = positive_only ? positive_roots(k) : enumerate_roots(k).roots;
  if (fmt == Format::json) {
    Json arr = Json::array();
    for (const auto& r : roots) arr.push_back(to_json(r));
    std::cout << Json{{"k", k}, {"count", roots.size()}, {"roots", arr}}.dump(2) << '\n';
    return 0;
  }
  if (fmt == Format::markdown) std::cout << "| root | vector |\n|---|---|\n";
  for (const auto& r : roots) {
    if (fmt == Format::markdown) {
      std::cout << "| " << to_symbolic(r) << " | " << to_string(r) << " |\n";
    } else {
      std::cout << to_symbolic(r) << '\n';
    }
  }
  if (fmt == Format::plain) std::cout << roots.size() << " roots\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced symplectic cone and symplectomorphism invariants of CP2 # k(-CP2)"};
  app.require_subcommand(1);
  Common common;

  std::string class_text, form_text;
  int table_k = 0, braid_n = 5, roots_k = 5;
  bool auto_reduce = false, quotient = false, positive_only = false;
  std::uint64_t seed = acceptance::Options{}.seed;

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce an integral class a;b1,...,bk");
  reduce_cmd->add_option("class", class_text, "class vector, e.g. 4;2,2,2,1,1")->required();
  add_format(reduce_cmd, common);

  auto* report_cmd = app.add_subcommand("report", "Invariants of a reduced form nu|c1,...,ck");
  report_cmd->add_option("form", form_text, "form vector, e.g. 1|1/3,1/3,1/3,1/3,1/3")->required();
  report_cmd->add_flag("--auto-reduce", auto_reduce, "reduce the form first");
  add_format(report_cmd, common);

  auto* table_cmd = app.add_subcommand("table", "Regenerate the face table for k = 2..5");
  table_cmd->add_option("k", table_k, "number of blow-ups")->required();
  add_format(table_cmd, common);

  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance criteria");
  verify_cmd->add_option("--seed", seed, "seed for the random samples");
  add_format(verify_cmd, common);

  auto* braid_cmd = app.add_subcommand("braid", "Sphere braid presentations and abelianizations");
  braid_cmd->add_option("-n,--strands", braid_n, "strand count (2..6)");
  braid_cmd->add_flag("--quotient", quotient, "quotient by the full twist");
  add_format(braid_cmd, common);

  auto* roots_cmd = app.add_subcommand("roots", "List the root system R_k for k = 3..8");
  roots_cmd->add_option("k", roots_k, "number of blow-ups")->required();
  roots_cmd->add_flag("--positive", positive_only, "positive roots only");
  add_format(roots_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Format fmt = common.format;
    if (*reduce_cmd) return cmd_reduce(class_text, fmt);
    if (*report_cmd) return cmd_report(form_text, auto_reduce, fmt);
    if (*table_cmd) return cmd_table(table_k, fmt);
    if (*verify_cmd) return cmd_verify(seed, fmt);
    if (*braid_cmd) return cmd_braid(braid_n, quotient, fmt);
    if (*roots_cmd) return cmd_roots(roots_k, positive_only, fmt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
