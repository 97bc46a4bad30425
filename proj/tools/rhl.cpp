#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "rhl/acceptance.hpp"
#include "rhl/certify.hpp"
#include "rhl/codec.hpp"
#include "rhl/constrained.hpp"
#include "rhl/construct.hpp"
#include "rhl/search.hpp"

namespace {

using nlohmann::ordered_json;

// Exit codes: 0 success/verified, 1 negative finding, 2 inconclusive,
// 3 usage or file error, 4 theorem violation.
constexpr int kOk = 0, kNegative = 1, kInconclusive = 2, kUsage = 3, kViolation = 4;

// Line-oriented key:value records, optionally followed by a JSON certificate;
// --format json folds everything into one object instead.
struct Report {
  std::vector<std::pair<std::string, ordered_json>> kv;
  std::optional<ordered_json> certificate;

  void add(std::string key, ordered_json value) { kv.emplace_back(std::move(key), std::move(value)); }

  void print(const std::string& format) const {
    if (format == "json") {
      ordered_json out = ordered_json::object();
      for (const auto& [k, v] : kv) out[k] = v;
      if (certificate) out["certificate"] = *certificate;
      std::cout << out.dump(2) << '\n';
      return;
    }
    for (const auto& [k, v] : kv) {
      std::cout << k << ": ";
      if (v.is_string())
        std::cout << v.get<std::string>();
      else
        std::cout << v.dump();
      std::cout << '\n';
    }
    if (certificate) std::cout << certificate->dump(2) << '\n';
  }
};

rhl::Pattern pattern_arg(const std::string& spec) {
  static const std::map<std::string, rhl::PatternId> names = {
      {"T", rhl::PatternId::TightPath},
      {"M", rhl::PatternId::MessyPath},
      {"L", rhl::PatternId::LoosePath},
      {"tight-path", rhl::PatternId::TightPath},
      {"messy-path", rhl::PatternId::MessyPath},
      {"loose-path", rhl::PatternId::LoosePath},
      {"loose-cycle", rhl::PatternId::LooseCycle},
      {"loose-star2", rhl::PatternId::LooseStar2},
      {"loose-star3", rhl::PatternId::LooseStar3},
      {"tight-star2", rhl::PatternId::TightStar2},
      {"tight-star3", rhl::PatternId::TightStar3},
      {"loose-star2-plus-edge", rhl::PatternId::LooseStar2PlusEdge},
      {"tight-star2-plus-edge", rhl::PatternId::TightStar2PlusEdge},
      {"matching2", rhl::PatternId::Matching2},
      {"single-edge", rhl::PatternId::SingleEdge},
  };
  if (auto it = names.find(spec); it != names.end())
    return rhl::Pattern::from_catalog(it->second);
  std::ifstream in(spec);
  if (!in)
    throw rhl::Error(rhl::Error::Code::Parse,
                     "'" + spec + "' is neither a catalog pattern nor a readable file");
  return rhl::Pattern::parse(in, spec);
}

rhl::Coloring coloring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw rhl::Error(rhl::Error::Code::Parse, "cannot open '" + path + "'");
  return rhl::parse_coloring(in);
}

void write_coloring(const rhl::Coloring& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw rhl::Error(rhl::Error::Code::Parse, "cannot write '" + path + "'");
  rhl::serialize_coloring(c, out);
}

std::string host_label(const rhl::HostGraph& h) {
  if (h.kind() == rhl::HostKind::Complete)
    return "complete " + std::to_string(h.vertex_count());
  std::string s = "tripartite";
  for (int p : h.part_sizes()) s += " " + std::to_string(p);
  return s;
}

ordered_json embedding_json(const rhl::HostGraph& host, const rhl::Embedding& emb) {
  ordered_json edges = ordered_json::array();
  for (rhl::EdgeId e : emb.edge_images) {
    rhl::Edge ed = host.edge_unrank(e);
    edges.push_back(ordered_json{ed[0], ed[1], ed[2]});
  }
  return ordered_json{{"vertices", emb.vertex_images}, {"edges", edges}};
}

rhl::SearchBudget budget_from(uint64_t nodes, double secs) {
  rhl::SearchBudget b;
  if (nodes > 0) b.max_nodes = nodes;
  if (secs > 0)
    b.max_seconds = secs;
  else if (const char* env = std::getenv("RHL_DEFAULT_BUDGET_SECS"))
    b.max_seconds = std::atof(env);
  return b;
}

std::set<int> parse_j(const std::string& spec) {
  std::set<int> j;
  std::istringstream in(spec);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty()) continue;
    int idx = std::stoi(part);
    if (idx < 1 || idx > 3)
      throw rhl::Error(rhl::Error::Code::BadParameters, "--J entries are 1-based in 1..3");
    j.insert(idx - 1);
  }
  return j;
}

const std::map<std::string, rhl::construct::StructureCase>& case_names() {
  static const std::map<std::string, rhl::construct::StructureCase> m = {
      {"tight-partition", rhl::construct::StructureCase::TightPartition},
      {"loose-mono-minus-vertex", rhl::construct::StructureCase::LooseMonoMinusVertex},
      {"loose-special-edge", rhl::construct::StructureCase::LooseSpecialEdge},
      {"loose-plus-two-apex", rhl::construct::StructureCase::LoosePlusTwoApex},
      {"loose-plus-near-mono", rhl::construct::StructureCase::LoosePlusNearMono},
      {"loose-plus-special-edge", rhl::construct::StructureCase::LoosePlusSpecialEdge},
      {"tri-apex-partition", rhl::construct::StructureCase::TriApexPartition},
      {"tri-base-partition", rhl::construct::StructureCase::TriBasePartition},
      {"tri-two-apex", rhl::construct::StructureCase::TriTwoApex},
      {"tri-unique-edge", rhl::construct::StructureCase::TriUniqueEdge},
      {"tri-five-vertex", rhl::construct::StructureCase::TriFiveVertex},
  };
  return m;
}

int cmd_gen(const std::string& construction, int n, const std::vector<int>& parts,
            uint64_t seed, const std::string& j_spec, const std::string& case_name,
            const std::string& out_path, const std::string& format) {
  using namespace rhl;
  auto tri_host = [&](int fallback) {
    if (parts.size() == 3) return HostGraph::tripartite(parts[0], parts[1], parts[2]);
    int t = n > 0 ? n : fallback;
    return HostGraph::tripartite(t, t, t);
  };
  std::optional<Coloring> c;
  if (construction == "tight-lb")
    c = construct::tight_lower_bound(n);
  else if (construction == "messy-k6")
    c = construct::messy_matching_k6();
  else if (construction == "loose-lb")
    c = construct::loose_lower_bound(n);
  else if (construction == "star-clique2")
    c = construct::star_clique_2(n);
  else if (construction == "tri-apex")
    c = construct::tri_apex_coloring(n);
  else if (construction == "tri-diagonal")
    c = construct::tri_diagonal_coloring(n);
  else if (construction == "tri-pair-star")
    c = construct::tri_pair_star_coloring(n);
  else if (construction == "projection-canonical")
    c = construct::projection_canonical(tri_host(n), parse_j(j_spec));
  else if (construction == "position-canonical")
    c = construct::position_canonical(n, parse_j(j_spec));
  else if (construction == "sample") {
    auto it = case_names().find(case_name);
    if (it == case_names().end())
      throw Error(Error::Code::BadParameters, "unknown --case '" + case_name + "'");
    bool tri = case_name.rfind("tri-", 0) == 0;
    HostGraph host = tri ? tri_host(4) : HostGraph::complete(n);
    c = construct::sample_structured(it->second, host, seed);
  } else {
    throw Error(Error::Code::BadParameters, "unknown --construction '" + construction + "'");
  }

  write_coloring(c->normalized(), out_path);
  Report rep;
  rep.add("construction", construction);
  rep.add("host", host_label(c->host()));
  rep.add("palette", c->palette_size());
  rep.add("output", out_path);
  rep.print(format);
  return kOk;
}

int cmd_check(const std::string& pattern_spec, const std::string& file,
              const std::string& format) {
  using namespace rhl;
  Pattern p = pattern_arg(pattern_spec);
  Coloring c = coloring_file(file);
  Report rep;
  rep.add("host", host_label(c.host()));
  rep.add("pattern", p.name());
  rep.add("palette", c.palette_size());
  auto rb = find_rainbow_copy(c, p);
  if (!rb) {
    rep.add("rainbow", "none");
    rep.print(format);
    return kOk;
  }
  rep.add("rainbow", "found");
  rep.add("witness", embedding_json(c.host(), *rb));
  rep.print(format);
  return kNegative;
}

int cmd_certify(const std::string& theorem, const std::string& file,
                const std::string& format) {
  using namespace rhl;
  Coloring c = coloring_file(file);
  Report rep;
  rep.add("host", host_label(c.host()));
  rep.add("theorem", theorem);
  rep.add("palette", c.palette_size());

  int code = kOk;
  auto digest = [&](const auto& result) {
    if (auto* rej = std::get_if<Rejection>(&result)) {
      bool viol = rej->kind == Rejection::Kind::TheoremViolation;
      rep.add("status", viol ? "theorem-violation" : "rejected");
      rep.add("reason", rej->reason);
      if (rej->witness) rep.add("witness", embedding_json(c.host(), *rej->witness));
      code = viol ? kViolation : kNegative;
      return;
    }
    rep.add("status", "certified");
    std::visit(
        [&](const auto& cert) {
          using T = std::decay_t<decltype(cert)>;
          if constexpr (!std::is_same_v<T, Rejection>) {
            rep.add("verified", verify_certificate(c, cert).ok ? "yes" : "no");
            rep.certificate = to_json(cert);
          }
        },
        result);
  };

  if (theorem == "tight")
    digest(certify_tight(c));
  else if (theorem == "messy")
    digest(certify_messy(c));
  else if (theorem == "loose")
    digest(certify_loose(c));
  else if (theorem == "loose-plus")
    digest(certify_loose_plus(c));
  else if (theorem == "tri-tight")
    digest(certify_tripartite(c, TriTheorem::Tight));
  else if (theorem == "tri-messy")
    digest(certify_tripartite(c, TriTheorem::Messy));
  else if (theorem == "tri-loose")
    digest(certify_tripartite(c, TriTheorem::Loose));
  else
    throw Error(Error::Code::BadParameters, "unknown --theorem '" + theorem + "'");

  rep.print(format);
  return code;
}

int cmd_ar(const std::string& host_kind, int n, const std::vector<int>& parts,
           const std::string& pattern_spec, uint64_t budget_nodes, double budget_secs,
           const std::string& witness_path, const std::string& format) {
  using namespace rhl;
  HostGraph host = host_kind == "tripartite"
                       ? (parts.size() == 3 ? HostGraph::tripartite(parts[0], parts[1], parts[2])
                                            : HostGraph::tripartite(n, n, n))
                       : HostGraph::complete(n);
  Pattern p = pattern_arg(pattern_spec);
  auto r = anti_ramsey(host, p, budget_from(budget_nodes, budget_secs));
  Report rep;
  rep.add("host", host_label(host));
  rep.add("pattern", p.name());
  bool proved = r.status == SearchStatus::Proved;
  rep.add("status", proved ? "PROVED" : "INCONCLUSIVE");
  rep.add(proved ? "value" : "value-lower-bound", r.max_colors);
  rep.add("max-rainbow-free-colors", r.max_colors - 1);
  rep.add("nodes", r.nodes);
  if (r.witness && !witness_path.empty()) {
    write_coloring(r.witness->normalized(), witness_path);
    rep.add("witness", witness_path);
  } else {
    rep.add("witness", r.witness ? "not-saved (pass -o FILE)" : "none");
  }
  rep.print(format);
  return proved ? kOk : kInconclusive;
}

int cmd_ramsey2(int n, const std::string& target_spec, uint64_t budget_nodes,
                double budget_secs, const std::string& witness_path,
                const std::string& format) {
  using namespace rhl;
  Pattern p = pattern_arg(target_spec);
  auto r = ramsey2_search(HostGraph::complete(n), p, budget_from(budget_nodes, budget_secs));
  Report rep;
  rep.add("host", "complete " + std::to_string(n));
  rep.add("target", p.name());
  bool proved = r.status == SearchStatus::Proved;
  rep.add("status", proved ? "PROVED" : "INCONCLUSIVE");
  rep.add("arrows", r.arrows ? "yes" : "no");
  rep.add("nodes", r.nodes);
  if (r.witness && !witness_path.empty()) {
    write_coloring(r.witness->normalized(), witness_path);
    rep.add("witness", witness_path);
  } else {
    rep.add("witness", r.witness ? "not-saved (pass -o FILE)" : "none");
  }
  rep.print(format);
  return proved ? kOk : kInconclusive;
}

int cmd_constrained(const std::string& target_spec, const std::string& path_spec,
                    uint64_t budget_nodes, double budget_secs, int desk_samples,
                    uint64_t seed, const std::string& format) {
  using namespace rhl;
  Pattern target = pattern_arg(target_spec);
  PatternId path;
  if (path_spec == "T")
    path = PatternId::TightPath;
  else if (path_spec == "M")
    path = PatternId::MessyPath;
  else if (path_spec == "L")
    path = PatternId::LoosePath;
  else
    throw Error(Error::Code::BadParameters, "--path must be T, M, or L");

  auto rep_data =
      constrained_ramsey_check(target, path, budget_from(budget_nodes, budget_secs),
                               desk_samples, seed);
  Report rep;
  rep.add("target", target.name());
  rep.add("path", path_spec);
  const char* status = rep_data.status == ConstrainedStatus::Proved ? "PROVED"
                       : rep_data.status == ConstrainedStatus::HypothesisNotMet
                           ? "HYPOTHESIS-NOT-MET"
                           : "INCONCLUSIVE";
  rep.add("status", status);
  if (rep_data.r2 > 0) rep.add("r2", rep_data.r2);
  if (rep_data.status == ConstrainedStatus::Proved) rep.add("f", rep_data.f);
  rep.add("desk-check", rep_data.desk_check_ok ? "ok" : "failed");
  rep.add("nodes", rep_data.nodes);
  for (const auto& line : rep_data.trace) rep.add("trace", line);
  rep.print(format);
  if (rep_data.status == ConstrainedStatus::Proved) return kOk;
  return rep_data.status == ConstrainedStatus::HypothesisNotMet ? kNegative : kInconclusive;
}

int cmd_canonical(int t, const std::string& host_kind, const std::string& h_spec,
                  const std::string& g_spec, const std::string& format) {
  using namespace rhl;
  auto kind = host_kind == "ordered" ? CanonicalHostKind::CompleteOrdered
                                     : CanonicalHostKind::Tripartite;
  Pattern h = pattern_arg(h_spec);
  Pattern g = pattern_arg(g_spec);
  auto table = canonical_existence_check(h, g, t, kind);
  Report rep;
  rep.add("host", host_kind + " t=" + std::to_string(t));
  rep.add("H", h.name());
  rep.add("G", g.name());
  for (const auto& row : table.rows) {
    std::string j = "{";
    for (int i = 0; i < 3; ++i)
      if (row.j_mask & (1 << i)) j += (j.size() > 1 ? "," : "") + std::to_string(i + 1);
    j += "}";
    rep.add("J=" + j, std::string("mono=") + (row.mono ? "yes" : "no") +
                          " rainbow=" + (row.rainbow ? "yes" : "no"));
  }
  rep.add("mono-or-rainbow-everywhere", table.exists_at_t ? "yes" : "no");
  rep.print(format);
  return table.exists_at_t ? kOk : kNegative;
}

int cmd_verify(const std::string& suite, const std::string& format) {
  using namespace rhl::acceptance;
  auto names = suite_names();
  std::vector<CriterionResult> results;
  if (suite == "all") {
    results = run_all();
  } else {
    auto it = std::find(names.begin(), names.end(), suite);
    if (it == names.end()) {
      std::string known = "all";
      for (const auto& nm : names) known += ", " + nm;
      throw rhl::Error(rhl::Error::Code::BadParameters,
                       "unknown suite '" + suite + "' (known: " + known + ")");
    }
    results.push_back(run_criterion(int(it - names.begin()) + 1));
  }

  int failed = 0;
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : results) {
      arr.push_back(ordered_json{{"criterion", r.id},
                                 {"suite", r.name},
                                 {"pass", r.pass},
                                 {"unproven", r.unproven},
                                 {"seconds", r.seconds},
                                 {"detail", r.detail}});
      if (!r.pass) ++failed;
    }
    std::cout << arr.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      std::printf("CRITERION %2d %s %-22s (%.2fs)%s%s\n", r.id, r.pass ? "PASS" : "FAIL",
                  r.name.c_str(), r.seconds, r.unproven ? " [sampled-fallback]" : "",
                  r.detail.c_str());
      if (!r.pass) ++failed;
    }
    std::printf("VERIFY %s (%zu/%zu)\n", failed == 0 ? "PASS" : "FAIL",
                results.size() - failed, results.size());
  }
  return failed == 0 ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rainbow-path toolkit for edge-colored 3-uniform hypergraphs"};
  app.require_subcommand(1);

  std::string format = "text";
  int threads = int(std::thread::hardware_concurrency());
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", threads,
                 "worker threads (searches are deterministic; results are thread-count "
                 "independent)");

  // gen
  std::string g_construction, g_j, g_case, g_out;
  int g_n = 0;
  std::vector<int> g_parts;
  uint64_t g_seed = 0;
  auto* gen = app.add_subcommand("gen", "generate a coloring file");
  gen->add_option("--construction", g_construction,
                  "tight-lb | messy-k6 | loose-lb | star-clique2 | tri-apex | tri-diagonal | "
                  "tri-pair-star | projection-canonical | position-canonical | sample")
      ->required();
  gen->add_option("--n", g_n, "vertex count (complete) / part size (tripartite) / t (canonical)");
  gen->add_option("--parts", g_parts, "tripartite part sizes a b c")->expected(3);
  gen->add_option("--seed", g_seed, "sample seed");
  gen->add_option("--J", g_j, "canonical coordinate set, 1-based, e.g. 1,2");
  gen->add_option("--case", g_case, "structure case for --construction sample");
  gen->add_option("-o,--output", g_out, "output coloring file")->required();

  // check
  std::string c_pattern, c_file;
  auto* check = app.add_subcommand("check", "detect rainbow copies in a coloring file");
  check->add_option("--pattern", c_pattern, "catalog pattern (T|M|L|...) or pattern file")
      ->required();
  check->add_option("file", c_file, "coloring file")->required();

  // certify
  std::string ce_theorem, ce_file;
  auto* certify = app.add_subcommand("certify", "match a coloring against a structure theorem");
  certify
      ->add_option("--theorem", ce_theorem,
                   "tight | messy | loose | loose-plus | tri-tight | tri-messy | tri-loose")
      ->required();
  certify->add_option("file", ce_file, "coloring file")->required();

  // ar
  std::string a_host = "complete", a_pattern, a_out;
  int a_n = 0;
  std::vector<int> a_parts;
  uint64_t a_nodes = 0;
  double a_secs = 0;
  auto* ar = app.add_subcommand("ar", "anti-Ramsey number by branch-and-bound");
  ar->add_option("--host", a_host, "complete | tripartite")
      ->check(CLI::IsMember({"complete", "tripartite"}));
  ar->add_option("--n", a_n, "vertex count (complete) / part size (tripartite)")->required();
  ar->add_option("--parts", a_parts, "tripartite part sizes a b c")->expected(3);
  ar->add_option("--pattern", a_pattern, "catalog pattern or pattern file")->required();
  ar->add_option("--budget-nodes", a_nodes, "node budget");
  ar->add_option("--budget-secs", a_secs, "wall-clock budget in seconds");
  ar->add_option("-o,--witness", a_out, "write the extremal coloring here");

  // ramsey2
  std::string r_target, r_out;
  int r_n = 0;
  uint64_t r_nodes = 0;
  double r_secs = 0;
  auto* ramsey2 = app.add_subcommand("ramsey2", "2-color Ramsey arrowing by DFS");
  ramsey2->add_option("--n", r_n, "vertex count")->required();
  ramsey2->add_option("--target", r_target, "catalog pattern or pattern file")->required();
  ramsey2->add_option("--budget-nodes", r_nodes, "node budget");
  ramsey2->add_option("--budget-secs", r_secs, "wall-clock budget in seconds");
  ramsey2->add_option("-o,--witness", r_out, "write the mono-free 2-coloring here");

  // constrained
  std::string k_target, k_path;
  uint64_t k_nodes = 0, k_seed = 0;
  double k_secs = 0;
  int k_desk = 1000;
  auto* constrained =
      app.add_subcommand("constrained", "constrained Ramsey number via the reduction");
  constrained->add_option("--target", k_target, "catalog pattern or pattern file")->required();
  constrained->add_option("--path", k_path, "rainbow path family: T | M | L")->required();
  constrained->add_option("--budget-nodes", k_nodes, "node budget");
  constrained->add_option("--budget-secs", k_secs, "wall-clock budget in seconds");
  constrained->add_option("--desk-samples", k_desk, "desk-check sample count");
  constrained->add_option("--seed", k_seed, "desk-check seed");

  // canonical
  std::string n_host = "tripartite", n_h = "single-edge", n_g;
  int n_t = 0;
  auto* canonical = app.add_subcommand("canonical", "mono-H / rainbow-G table over canonical colorings");
  canonical->add_option("--t", n_t, "part size (tripartite) / vertex count (ordered)")->required();
  canonical->add_option("--host", n_host, "ordered | tripartite")
      ->check(CLI::IsMember({"ordered", "tripartite"}));
  canonical->add_option("--H", n_h, "mono target: catalog pattern or pattern file");
  canonical->add_option("--G", n_g, "rainbow target: catalog pattern or pattern file")->required();

  // verify
  std::string v_suite = "all";
  auto* verify = app.add_subcommand("verify", "run a named acceptance bundle");
  verify->add_option("--suite", v_suite, "suite name or 'all'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  (void)threads;  // searches are single-threaded and deterministic by design
  try {
    if (gen->parsed())
      return cmd_gen(g_construction, g_n, g_parts, g_seed, g_j, g_case, g_out, format);
    if (check->parsed()) return cmd_check(c_pattern, c_file, format);
    if (certify->parsed()) return cmd_certify(ce_theorem, ce_file, format);
    if (ar->parsed())
      return cmd_ar(a_host, a_n, a_parts, a_pattern, a_nodes, a_secs, a_out, format);
    if (ramsey2->parsed()) return cmd_ramsey2(r_n, r_target, r_nodes, r_secs, r_out, format);
    if (constrained->parsed())
      return cmd_constrained(k_target, k_path, k_nodes, k_secs, k_desk, k_seed, format);
    if (canonical->parsed()) return cmd_canonical(n_t, n_host, n_h, n_g, format);
    if (verify->parsed()) return cmd_verify(v_suite, format);
  } catch (const rhl::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
