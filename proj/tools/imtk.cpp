// Command-line front end: containment checks, extremal constructions,
// closed-form values, the brute-force oracle, and the verification sweeps.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "imtk/constructions.hpp"
#include "imtk/dot_io.hpp"
#include "imtk/formulas.hpp"
#include "imtk/json_io.hpp"
#include "imtk/minor_check.hpp"
#include "imtk/oracle.hpp"

namespace {

using namespace imtk;

struct GlobalOptions {
  long long budget = 26;
  int jobs = 1;
  std::uint64_t seed = 20140907;
};

long long env_budget() {
  if (const char* v = std::getenv("IMTK_ORACLE_BUDGET")) {
    try {
      return std::stoll(v);
    } catch (const std::exception&) {
      throw std::runtime_error("IMTK_ORACLE_BUDGET is not an integer");
    }
  }
  return 26;
}

AnyGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return graph_from_string(buf.str());
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

std::string exactness_word(Exactness e) {
  switch (e) {
    case Exactness::Exact:
      return "exact";
    case Exactness::UpperBoundOnly:
      return "upper-bound-only";
    case Exactness::LowerBoundOnly:
      return "lower-bound-only";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

int run_check(const std::string& graph_path, const std::vector<int>& pattern,
              const std::string& pattern_graph_path, bool identity_only) {
  const AnyGraph g = load_graph(graph_path);
  if (!pattern_graph_path.empty()) {
    // arbitrary bipartite pattern via the slow operational reference
    const AnyGraph pat = load_graph(pattern_graph_path);
    if (!std::holds_alternative<OrderedBipartiteGraph>(g) ||
        !std::holds_alternative<OrderedBipartiteGraph>(pat))
      throw std::runtime_error("--pattern-graph needs bipartite host and pattern");
    const bool hit = contains_minor_operational(std::get<OrderedBipartiteGraph>(g),
                                                std::get<OrderedBipartiteGraph>(pat));
    std::cout << (hit ? "CONTAINED" : "AVOIDS") << "\n";
    return 0;
  }
  if (pattern.empty()) throw std::runtime_error("check needs --pattern or --pattern-graph");
  if (std::holds_alternative<OrderedBipartiteGraph>(g)) {
    if (pattern.size() != 2)
      throw std::runtime_error("bipartite host needs a pattern of exactly two sizes k,l");
    const auto& host = std::get<OrderedBipartiteGraph>(g);
    if (const auto w = contains_kl_greedy(host, pattern[0], pattern[1])) {
      std::cout << "CONTAINED\n" << to_json(*w).dump() << "\n";
    } else {
      std::cout << "AVOIDS\n";
    }
    return 0;
  }
  const auto& host = std::get<OrderedMultipartiteGraph>(g);
  const CompletePatternSpec spec(pattern);
  if (const auto w = contains_multipartite(host, spec, identity_only)) {
    std::cout << "CONTAINED\n" << to_json(*w).dump() << "\n";
  } else {
    std::cout << "AVOIDS\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// construct
// ---------------------------------------------------------------------------

std::vector<int> parse_spine(const std::string& ih, int count, int part_size,
                             std::uint64_t seed) {
  if (ih.empty()) return {};
  if (ih == "random") {
    std::mt19937_64 rng(seed);
    std::vector<int> all(static_cast<std::size_t>(part_size));
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(std::min(count, part_size)));
    std::sort(all.begin(), all.end());
    return all;
  }
  std::vector<int> out;
  std::stringstream ss(ih);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item) - 1);  // 1-based input
  return out;
}

int emit_graph(const AnyGraph& g, const std::string& format, const std::string& out_path) {
  if (format == "dot")
    write_output(std::visit([](const auto& x) { return to_dot(x); }, g), out_path);
  else
    write_output(to_json(g).dump(), out_path);
  return 0;
}

// ---------------------------------------------------------------------------
// formula
// ---------------------------------------------------------------------------

int run_formula(int p, int q, int k, int l) {
  const ExtremalFormulaResult r = m_formula(p, q, k, l);
  std::cout << r.value << " " << exactness_word(r.exactness) << " ("
            << describe(r.theorem_case) << ")\n";
  return 0;
}

int run_formula_multipartite(const std::vector<int>& parts, const std::vector<int>& pattern) {
  std::vector<long long> n(parts.begin(), parts.end());
  std::vector<long long> l(pattern.begin(), pattern.end());
  const MultipartiteFormulaResult r = multipartite_m_formula(n, l);
  std::cout << r.value << " " << exactness_word(r.exactness) << " (" << describe(r.kind) << ")\n";
  if (r.displayed_form_value != r.value &&
      (r.kind == MultipartiteCaseKind::Theorem2 ||
       r.kind == MultipartiteCaseKind::Lemma5BoundOnly))
    std::cout << "note: the closed form as displayed in Theorem 2 gives "
              << r.displayed_form_value << "; the matching-bound form gives " << r.value << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// oracle
// ---------------------------------------------------------------------------

int run_oracle(int p, int q, int k, int l, const GlobalOptions& opt) {
  OracleOptions oo;
  oo.budget = opt.budget;
  oo.jobs = opt.jobs;
  const BipartiteExtremalResult r = exact_m_bipartite(p, q, k, l, oo);
  std::cout << "m(" << p << "," << q << "," << k << "," << l << ") = " << r.value << "\n";
  std::cout << "explored " << r.explored << " nodes\n";
  std::cout << "witness " << to_json(r.witness).dump() << "\n";
  return 0;
}

int run_oracle_multipartite(const std::vector<int>& parts, const std::vector<int>& pattern,
                            const GlobalOptions& opt) {
  OracleOptions oo;
  oo.budget = opt.budget;
  oo.jobs = opt.jobs;
  const MultipartiteExtremalResult r = exact_m_multipartite(parts, pattern, oo);
  std::cout << "m = " << r.value << "\n";
  std::cout << "explored " << r.explored << " nodes\n";
  std::cout << "witness " << to_json(r.witness).dump() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// verification sweeps
// ---------------------------------------------------------------------------

struct SweepRow {
  std::string params;
  std::string case_label;
  std::string exactness;
  long long formula = 0;
  std::optional<long long> oracle;
  std::string status;
  std::uint64_t explored = 0;
  double ms = 0.0;
};

void print_rows(const std::vector<SweepRow>& rows, const std::string& format) {
  if (format == "csv") {
    std::cout << "params,case,exactness,formula,oracle,status,explored,ms\n";
    for (const SweepRow& r : rows) {
      std::cout << '"' << r.params << "\"," << '"' << r.case_label << "\"," << r.exactness << ","
                << r.formula << ",";
      if (r.oracle) std::cout << *r.oracle;
      std::cout << "," << r.status << "," << r.explored << "," << r.ms << "\n";
    }
    return;
  }
  std::cout << std::left;
  std::printf("%-22s %-34s %-18s %8s %8s %-10s %10s %9s\n", "params", "case", "exactness",
              "formula", "oracle", "status", "explored", "ms");
  for (const SweepRow& r : rows)
    std::printf("%-22s %-34s %-18s %8lld %8s %-10s %10llu %9.1f\n", r.params.c_str(),
                r.case_label.c_str(), r.exactness.c_str(), r.formula,
                r.oracle ? std::to_string(*r.oracle).c_str() : "-", r.status.c_str(),
                static_cast<unsigned long long>(r.explored), r.ms);
}

int run_verify_theorem1(int pmax, int qmax, int kmax, int lmax, const std::string& format,
                        const GlobalOptions& opt) {
  std::vector<SweepRow> rows;
  int mismatches = 0;
  for (int k = 1; k <= kmax; ++k)
    for (int l = k; l <= lmax; ++l)
      for (int p = 1; p <= pmax; ++p)
        for (int q = 1; q <= qmax; ++q) {
          SweepRow row;
          row.params = "p=" + std::to_string(p) + ",q=" + std::to_string(q) +
                       ",k=" + std::to_string(k) + ",l=" + std::to_string(l);
          const ExtremalFormulaResult f = m_formula(p, q, k, l);
          row.case_label = short_label(f.theorem_case);
          row.exactness = exactness_word(f.exactness);
          row.formula = f.value;
          if (static_cast<long long>(p) * q > opt.budget) {
            row.status = "SKIPPED";
            rows.push_back(row);
            continue;
          }
          OracleOptions oo;
          oo.budget = opt.budget;
          oo.jobs = opt.jobs;
          const auto start = std::chrono::steady_clock::now();
          const BipartiteExtremalResult r = exact_m_bipartite(p, q, k, l, oo);
          row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                             start)
                       .count();
          row.oracle = r.value;
          row.explored = r.explored;
          if (f.exactness == Exactness::Exact)
            row.status = r.value == f.value ? "MATCH" : "MISMATCH";
          else
            row.status = r.value <= f.value ? "BOUND-ONLY" : "MISMATCH";
          if (row.status == "MISMATCH") ++mismatches;
          rows.push_back(row);
        }
  print_rows(rows, format);
  if (mismatches > 0) {
    std::cerr << mismatches << " MISMATCH row(s)\n";
    return 1;
  }
  return 0;
}

int run_verify_theorem2(int nmax, int lmax, const std::string& format, const GlobalOptions& opt) {
  std::vector<SweepRow> rows;
  int mismatches = 0;
  auto tuples = [&](int maxv) {
    std::vector<std::vector<int>> out;
    for (int a = 1; a <= maxv; ++a)
      for (int b = a + 1; b <= maxv; ++b)
        for (int c = b + 1; c <= maxv; ++c) out.push_back({a, b, c});
    return out;
  };
  for (const std::vector<int>& n : tuples(nmax))
    for (const std::vector<int>& l : tuples(lmax)) {
      SweepRow row;
      auto fmt = [](const std::vector<int>& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i)
          s += (i ? "," : "") + std::to_string(v[static_cast<std::size_t>(i)]);
        return s + ")";
      };
      row.params = "n=" + fmt(n) + ",l=" + fmt(l);
      const std::vector<long long> nl(n.begin(), n.end()), ll(l.begin(), l.end());
      const MultipartiteFormulaResult f = multipartite_m_formula(nl, ll);
      switch (f.kind) {
        case MultipartiteCaseKind::TrivialNoFit: row.case_label = "pattern cannot fit"; break;
        case MultipartiteCaseKind::Theorem2: row.case_label = "Theorem 2"; break;
        case MultipartiteCaseKind::Lemma5BoundOnly: row.case_label = "Lemma 5 bound"; break;
        case MultipartiteCaseKind::Lemma4LowerOnly: row.case_label = "lower bound only"; break;
        case MultipartiteCaseKind::TrivialBoundOnly: row.case_label = "trivial bound only"; break;
      }
      row.exactness = exactness_word(f.exactness);
      row.formula = f.value;
      if (complete_multipartite_edge_count(nl) > opt.budget) {
        row.status = "SKIPPED";
        rows.push_back(row);
        continue;
      }
      OracleOptions oo;
      oo.budget = opt.budget;
      oo.jobs = opt.jobs;
      const auto start = std::chrono::steady_clock::now();
      const MultipartiteExtremalResult r = exact_m_multipartite(n, l, oo);
      row.ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
      row.oracle = r.value;
      row.explored = r.explored;
      if (f.exactness == Exactness::Exact)
        row.status = r.value == f.value ? "MATCH" : "MISMATCH";
      else if (f.exactness == Exactness::LowerBoundOnly)
        row.status = r.value >= f.value ? "BOUND-ONLY" : "MISMATCH";
      else
        row.status = r.value <= f.value ? "BOUND-ONLY" : "MISMATCH";
      if (row.status == "MISMATCH") ++mismatches;
      rows.push_back(row);
    }
  print_rows(rows, format);
  if (mismatches > 0) {
    std::cerr << mismatches << " MISMATCH row(s)\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interval-minor toolkit: containment checks, extremal constructions,"
               " closed forms, and a brute-force oracle for ordered (multi)partite graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opt;
  try {
    opt.budget = env_budget();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  app.add_option("--budget", opt.budget, "oracle budget in potential edges");
  app.add_option("--jobs", opt.jobs, "oracle worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "seed for randomized selections");

  // check
  auto* check = app.add_subcommand("check", "decide interval-minor containment");
  std::string check_graph, check_pattern_graph;
  std::vector<int> check_pattern;
  bool identity_only = false;
  check->add_option("--graph", check_graph, "host graph JSON file")->required();
  check->add_option("--pattern", check_pattern, "complete pattern sizes, e.g. 2,3")
      ->delimiter(',');
  check->add_option("--pattern-graph", check_pattern_graph,
                    "bipartite pattern JSON file (slow operational reference)");
  check->add_flag("--identity-only", identity_only,
                  "restrict multipartite part assignment to the identity");

  // construct
  auto* construct = app.add_subcommand("construct", "build the extremal families");
  construct->fallthrough();
  std::string construct_format = "json", construct_out, construct_ih;
  bool no_verify = false;
  construct->add_option("--format", construct_format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  construct->add_option("-o,--output", construct_out, "output file (default stdout)");
  construct->add_option("--ih", construct_ih,
                        "spine selection: comma list of 1-based positions, or 'random'");
  construct->add_flag("--no-verify", no_verify, "skip the avoidance re-check");

  auto* ex_pq = construct->add_subcommand("example-pq", "dense columns plus spine family");
  ex_pq->fallthrough();
  int c_p = 1, c_q = 1, c_k = 1, c_l = 1;
  ex_pq->add_option("-p", c_p)->required();
  ex_pq->add_option("-q", c_q)->required();
  ex_pq->add_option("-k", c_k)->required();
  ex_pq->add_option("-l", c_l)->required();

  auto* ex_st = construct->add_subcommand("extremal", "staircase family (exact regimes)");
  ex_st->fallthrough();
  int s_p = 1, s_q = 1, s_k = 1, s_l = 2;
  ex_st->add_option("-p", s_p)->required();
  ex_st->add_option("-q", s_q)->required();
  ex_st->add_option("-k", s_k)->required();
  ex_st->add_option("-l", s_l)->required();

  auto* ex_mu = construct->add_subcommand("multipartite", "complete-but-one-pair family");
  ex_mu->fallthrough();
  std::vector<int> m_parts, m_pattern;
  ex_mu->add_option("--parts", m_parts, "part sizes n_1<...<n_t")->delimiter(',')->required();
  ex_mu->add_option("--pattern", m_pattern, "pattern sizes l_1<...<l_t")
      ->delimiter(',')
      ->required();

  // formula
  auto* formula = app.add_subcommand("formula", "closed-form extremal value");
  int f_p = 0, f_q = 0, f_k = 0, f_l = 0;
  std::vector<int> f_parts, f_pattern;
  formula->add_option("-p", f_p);
  formula->add_option("-q", f_q);
  formula->add_option("-k", f_k);
  formula->add_option("-l", f_l);
  formula->add_option("--parts", f_parts)->delimiter(',');
  formula->add_option("--pattern", f_pattern)->delimiter(',');

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "exact brute-force extremal value");
  int o_p = 0, o_q = 0, o_k = 0, o_l = 0;
  std::vector<int> o_parts, o_pattern;
  oracle_cmd->add_option("-p", o_p);
  oracle_cmd->add_option("-q", o_q);
  oracle_cmd->add_option("-k", o_k);
  oracle_cmd->add_option("-l", o_l);
  oracle_cmd->add_option("--parts", o_parts)->delimiter(',');
  oracle_cmd->add_option("--pattern", o_pattern)->delimiter(',');

  // verify sweeps
  auto* v1 = app.add_subcommand("verify-theorem1", "sweep: formula vs oracle (bipartite)");
  int pmax = 5, qmax = 5, kmax = 4, lmax = 4;
  std::string v1_format = "table";
  v1->add_option("--pmax", pmax);
  v1->add_option("--qmax", qmax);
  v1->add_option("--kmax", kmax);
  v1->add_option("--lmax", lmax);
  v1->add_option("--format", v1_format)->check(CLI::IsMember({"table", "csv"}));

  auto* v2 = app.add_subcommand("verify-theorem2", "sweep: formula vs oracle (multipartite)");
  int v2_nmax = 4, v2_lmax = 4;
  std::string v2_format = "table";
  v2->add_option("--nmax", v2_nmax);
  v2->add_option("--lmax", v2_lmax);
  v2->add_option("--format", v2_format)->check(CLI::IsMember({"table", "csv"}));

  // export
  auto* exp = app.add_subcommand("export", "re-emit a graph as canonical JSON or DOT");
  std::string e_graph, e_format = "json", e_out;
  exp->add_option("--graph", e_graph)->required();
  exp->add_option("--format", e_format)->check(CLI::IsMember({"json", "dot"}));
  exp->add_option("-o,--output", e_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*check) return run_check(check_graph, check_pattern, check_pattern_graph, identity_only);
    if (*construct) {
      if (*ex_pq) {
        const std::vector<int> spine = parse_spine(construct_ih, c_k - 1, c_p, opt.seed);
        const OrderedBipartiteGraph g = example_pq({c_p, c_q, c_k, c_l, spine}, !no_verify);
        return emit_graph(g, construct_format, construct_out);
      }
      if (*ex_st) {
        const OrderedBipartiteGraph g = extremal_bipartite(s_p, s_q, s_k, s_l, !no_verify);
        return emit_graph(g, construct_format, construct_out);
      }
      if (*ex_mu) {
        const int l1 = m_pattern.empty() ? 1 : m_pattern.front();
        const int n1 = m_parts.empty() ? 1 : m_parts.front();
        const std::vector<int> spine = parse_spine(construct_ih, l1 - 1, n1, opt.seed);
        const OrderedMultipartiteGraph g =
            multipartite_construction({m_parts, m_pattern, spine}, !no_verify);
        return emit_graph(g, construct_format, construct_out);
      }
      std::cerr << "construct needs one of: example-pq, extremal, multipartite\n";
      return 2;
    }
    if (*formula) {
      if (!f_parts.empty() || !f_pattern.empty())
        return run_formula_multipartite(f_parts, f_pattern);
      if (f_p < 1 || f_q < 1 || f_k < 1 || f_l < 1) {
        std::cerr << "formula needs -p -q -k -l or --parts/--pattern\n";
        return 2;
      }
      return run_formula(f_p, f_q, f_k, f_l);
    }
    if (*oracle_cmd) {
      if (!o_parts.empty() || !o_pattern.empty())
        return run_oracle_multipartite(o_parts, o_pattern, opt);
      if (o_p < 1 || o_q < 1 || o_k < 1 || o_l < 1) {
        std::cerr << "oracle needs -p -q -k -l or --parts/--pattern\n";
        return 2;
      }
      return run_oracle(o_p, o_q, o_k, o_l, opt);
    }
    if (*v1) return run_verify_theorem1(pmax, qmax, kmax, lmax, v1_format, opt);
    if (*v2) return run_verify_theorem2(v2_nmax, v2_lmax, v2_format, opt);
    if (*exp) {
      const AnyGraph g = load_graph(e_graph);
      return emit_graph(g, e_format, e_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
