// modprod command-line interface: graph products, distance formulas,
// structural analysis, strong resolving graphs, and strong metric dimension
// with scriptable JSON output.
//
// Exit codes: 0 success, 1 usage or input error, 2 verification mismatch,
// 3 solver budget exhausted before optimality.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "modprod/classify.hpp"
#include "modprod/corpus.hpp"
#include "modprod/edgelist.hpp"
#include "modprod/families.hpp"
#include "modprod/metric.hpp"
#include "modprod/srg.hpp"
#include "modprod/structure.hpp"
#include "modprod/vertex_cover.hpp"

using json = nlohmann::json;
using namespace modprod;

namespace {

constexpr int kSchemaVersion = 1;
constexpr std::uint64_t kDefaultSeed = 20250811;

json dist_json(int d) {
  if (is_inf(d)) return "inf";
  return d;
}

void emit(const json& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
  out << doc.dump(2) << "\n";
}

void write_graph(const Graph& g, const std::string& out_path) {
  if (out_path.empty())
    write_edge_list(std::cout, g);
  else
    write_edge_list_file(out_path, g);
}

ProductKind parse_kind(const std::string& name) {
  auto kind = product_kind_from_string(name);
  if (!kind) throw CLI::ValidationError("--kind", "unknown product kind: " + name);
  return *kind;
}

// ---- gen ------------------------------------------------------------

FamilySpec spec_from_cli(const std::string& family, const std::vector<int>& params,
                         const std::string& of, const std::vector<int>& of_params) {
  auto tag = family_tag_from_string(family);
  if (!tag) throw CLI::ValidationError("--family", "unknown family: " + family);
  if (*tag == FamilySpec::Tag::complement_of) {
    auto inner_tag = family_tag_from_string(of);
    if (!inner_tag || *inner_tag == FamilySpec::Tag::complement_of)
      throw CLI::ValidationError("--of", "complement needs a base family via --of");
    return FamilySpec::complement_of(FamilySpec{*inner_tag, of_params, nullptr});
  }
  return FamilySpec{*tag, params, nullptr};
}

// ---- verify ----------------------------------------------------------

FamilySpec spec_from_json(const json& j) {
  const std::string family = j.at("family").get<std::string>();
  auto tag = family_tag_from_string(family);
  if (!tag) throw std::runtime_error("unknown family in claim: " + family);
  if (*tag == FamilySpec::Tag::complement_of)
    return FamilySpec::complement_of(spec_from_json(j.at("of")));
  FamilySpec spec{*tag, {}, nullptr};
  if (j.contains("params")) spec.params = j.at("params").get<std::vector<int>>();
  return spec;
}

Claim claim_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "stars")
    return {Claim::Kind::star_star, {j.at("s").get<int>(), j.at("t").get<int>()}, {}, {}};
  if (kind == "cocycles")
    return {Claim::Kind::cocycle_cocycle, {j.at("s").get<int>(), j.at("t").get<int>()}, {}, {}};
  if (kind == "cycles")
    return {Claim::Kind::cycle_cycle, {j.at("s").get<int>(), j.at("t").get<int>()}, {}, {}};
  if (kind == "knnm-h") {
    const int n = j.at("n").get<int>();
    std::vector<int> a{n};
    const auto q = j.value("q", std::vector<int>(n, 1));
    const auto r = j.value("r", std::vector<int>(n, 1));
    a.insert(a.end(), q.begin(), q.end());
    a.insert(a.end(), r.begin(), r.end());
    return {Claim::Kind::knn_blowup_h, a, {}, spec_from_json(j.at("h"))};
  }
  if (kind == "p5-h") return {Claim::Kind::p5_h, {}, {}, spec_from_json(j.at("h"))};
  if (kind == "star-hstq")
    return {Claim::Kind::star_hstq,
            {j.at("r").get<int>(), j.at("s").get<int>(), j.at("t").get<int>(),
             j.at("q").get<int>()},
            {},
            {}};
  if (kind == "complete-factor")
    return {Claim::Kind::complete_factor, {j.at("t").get<int>()}, spec_from_json(j.at("g")), {}};
  throw std::runtime_error("unknown claim kind: " + kind);
}

json report_to_json(const ClaimReport& r) {
  json j{{"id", r.id},
         {"valid", r.valid},
         {"predicted", r.predicted},
         {"computed", r.computed},
         {"match", r.match},
         {"optimal", r.optimal},
         {"product_order", r.product_order},
         {"srg_edges", r.srg_edges},
         {"srg_components", r.srg_components},
         {"solver_nodes", r.solver_nodes},
         {"elapsed_seconds", r.elapsed_seconds}};
  if (!r.valid) j["invalid_reason"] = r.invalid_reason;
  return j;
}

int run_verify(const std::vector<Claim>& claims, const VerifyOptions& options, int threads,
               const std::string& out_path) {
  std::vector<ClaimReport> reports(claims.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < claims.size(); ++i) reports[i] = verify_claim(claims[i], options);
  } else {
    std::vector<std::future<ClaimReport>> futs(claims.size());
    std::size_t next = 0;
    while (next < claims.size()) {
      const std::size_t batch = std::min<std::size_t>(threads, claims.size() - next);
      for (std::size_t i = 0; i < batch; ++i)
        futs[next + i] = std::async(std::launch::async,
                                    [&, idx = next + i] { return verify_claim(claims[idx], options); });
      for (std::size_t i = 0; i < batch; ++i) reports[next + i] = futs[next + i].get();
      next += batch;
    }
  }

  std::printf("%-36s %10s %10s %7s %9s\n", "claim", "predicted", "computed", "match", "time");
  bool mismatch = false, nonoptimal = false;
  json arr = json::array();
  for (const auto& r : reports) {
    arr.push_back(report_to_json(r));
    if (!r.valid) {
      std::printf("%-36s %10s %10s %7s %9s  [%s]\n", r.id.c_str(), "-", "-", "skip", "-",
                  r.invalid_reason.c_str());
      continue;
    }
    std::printf("%-36s %10d %10d %7s %8.2fs\n", r.id.c_str(), r.predicted, r.computed,
                r.match ? "yes" : "NO", r.elapsed_seconds);
    if (!r.match) mismatch = true;
    if (!r.optimal) nonoptimal = true;
  }
  if (!out_path.empty())
    emit(json{{"schema", kSchemaVersion}, {"reports", arr}}, out_path);
  if (mismatch) return 2;
  if (nonoptimal) return 3;
  return 0;
}

// ---- selftest ---------------------------------------------------------

int run_selftest(bool quick, std::uint64_t seed, int pair_count) {
  auto corpus = exhaustive_pairs(quick ? 3 : 4);
  auto rnd = random_pairs(quick ? std::min(pair_count, 60) : pair_count, quick ? 5 : 6, seed);
  corpus.insert(corpus.end(), rnd.begin(), rnd.end());
  if (!quick) {
    auto spec = special_pairs();
    corpus.insert(corpus.end(), spec.begin(), spec.end());
  }

  int bad = 0;
  auto show = [&bad](const SuiteResult& r) {
    std::printf("%-18s pairs=%-5d comparisons=%-9ld %s\n", r.name.c_str(), r.pairs_checked,
                r.comparisons, r.ok() ? "ok" : "FAILED");
    for (const auto& f : r.failures) std::printf("    %s\n", f.c_str());
    if (!r.ok()) ++bad;
  };
  show(check_distance_formulas(corpus));
  show(check_srg_builders(corpus));
  show(check_structure(corpus));
  show(check_solver(quick ? 60 : 300, quick ? 12 : 16, seed + 1));
  std::printf("selftest: %s\n", bad == 0 ? "all suites passed" : "FAILURES");
  return bad == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modular products, strong resolving graphs and strong metric dimension"};
  app.require_subcommand(1);
  // --h names a factor file, so help stays on --help only
  app.set_help_flag("--help", "print help");
  app.option_defaults()->ignore_case(false);
  int threads = 1;
  app.add_option("--threads", threads, "max worker threads for verify suites")
      ->capture_default_str();

  // product
  auto* product_cmd = app.add_subcommand("product", "build a graph product");
  product_cmd->set_help_flag("--help", "print help");
  std::string product_kind_name = "modular", product_g, product_h, product_out;
  product_cmd->add_option("--kind", product_kind_name, "product kind")->capture_default_str();
  product_cmd->add_option("--g", product_g, "first factor edge list")->required();
  product_cmd->add_option("--h", product_h, "second factor edge list")->required();
  product_cmd->add_option("--out", product_out, "output edge list (default stdout)");

  // dist
  auto* dist_cmd = app.add_subcommand("dist", "closed-form distances against BFS");
  dist_cmd->set_help_flag("--help", "print help");
  std::string dist_kind_name = "modular", dist_g, dist_h, dist_out;
  std::vector<int> dist_pair;
  bool dist_all = false;
  dist_cmd->add_option("--kind", dist_kind_name, "product kind")->capture_default_str();
  dist_cmd->add_option("--g", dist_g, "first factor edge list")->required();
  dist_cmd->add_option("--h", dist_h, "second factor edge list")->required();
  dist_cmd->add_option("--pair", dist_pair, "one vertex pair: g h g' h'")->expected(4);
  dist_cmd->add_flag("--all", dist_all, "every vertex pair");
  dist_cmd->add_option("--out", dist_out, "output JSON path (default stdout)");

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "structural summary of one graph");
  analyze_cmd->set_help_flag("--help", "print help");
  std::string analyze_g, analyze_out;
  analyze_cmd->add_option("--g", analyze_g, "graph edge list")->required();
  analyze_cmd->add_option("--out", analyze_out, "output JSON path (default stdout)");

  // srg
  auto* srg_cmd = app.add_subcommand("srg", "strong resolving graph of a modular product");
  srg_cmd->set_help_flag("--help", "print help");
  std::string srg_g, srg_h, srg_out, srg_method = "auto";
  srg_cmd->add_option("--g", srg_g, "first factor edge list")->required();
  srg_cmd->add_option("--h", srg_h, "second factor edge list")->required();
  srg_cmd->add_option("--method", srg_method, "oracle|auto")->capture_default_str();
  srg_cmd->add_option("--out", srg_out, "output edge list; reasons go to <out>.reasons.json");

  // dims
  auto* dims_cmd = app.add_subcommand("dims", "strong metric dimension");
  dims_cmd->set_help_flag("--help", "print help");
  std::string dims_g, dims_h, dims_out;
  double dims_budget = 300.0;
  bool dims_canonical = false;
  dims_cmd->add_option("--g", dims_g, "graph (or first factor) edge list")->required();
  dims_cmd->add_option("--h", dims_h, "second factor edge list (modular product mode)");
  dims_cmd->add_option("--budget", dims_budget, "solver budget in seconds")->capture_default_str();
  dims_cmd->add_flag("--canonical", dims_canonical, "lexicographically smallest witness");
  dims_cmd->add_option("--out", dims_out, "output JSON path (default stdout)");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "generate a parameterized family member");
  gen_cmd->set_help_flag("--help", "print help");
  std::string gen_family, gen_of, gen_out;
  std::vector<int> gen_params, gen_of_params;
  gen_cmd->add_option("--family", gen_family,
                      "path|cycle|complete|star|empty|clique-union|knnm|hstq|complement")
      ->required();
  gen_cmd->add_option("--params", gen_params, "family parameters");
  gen_cmd->add_option("--of", gen_of, "base family for --family complement");
  gen_cmd->add_option("--of-params", gen_of_params, "base family parameters");
  gen_cmd->add_option("--out", gen_out, "output edge list (default stdout)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check closed-form dimension claims");
  verify_cmd->set_help_flag("--help", "print help");
  std::string verify_suite, verify_claim_json, verify_out;
  double verify_budget = 300.0;
  int verify_max_product = 120;
  bool verify_allow_large = false;
  verify_cmd->add_option("--suite", verify_suite, "paper|quick");
  verify_cmd->add_option("--claim", verify_claim_json, "single claim as JSON");
  verify_cmd->add_option("--budget", verify_budget, "per-claim solver budget in seconds")
      ->capture_default_str();
  verify_cmd->add_option("--max-product", verify_max_product, "product order ceiling")
      ->capture_default_str();
  verify_cmd->add_flag("--allow-large", verify_allow_large, "lift the product order ceiling");
  verify_cmd->add_option("--out", verify_out, "JSON report path");

  // selftest
  auto* selftest_cmd = app.add_subcommand("selftest", "run the built-in property suites");
  selftest_cmd->set_help_flag("--help", "print help");
  bool selftest_quick = false;
  std::uint64_t selftest_seed = kDefaultSeed;
  int selftest_pairs = 500;
  selftest_cmd->add_flag("--quick", selftest_quick, "smaller corpora");
  selftest_cmd->add_option("--seed", selftest_seed, "corpus seed")->capture_default_str();
  selftest_cmd->add_option("--pairs", selftest_pairs, "random pair count")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*product_cmd) {
      const Graph g = read_edge_list_file(product_g);
      const Graph h = read_edge_list_file(product_h);
      write_graph(build_product(parse_kind(product_kind_name), g, h), product_out);
      return 0;
    }

    if (*dist_cmd) {
      const ProductKind kind = parse_kind(dist_kind_name);
      const Graph g = read_edge_list_file(dist_g);
      const Graph h = read_edge_list_file(dist_h);
      if (dist_pair.empty() && !dist_all)
        throw CLI::ValidationError("dist", "need --pair or --all");
      const Graph prod = build_product(kind, g, h);
      const DistMatrix bfs = all_pairs_distances(prod);
      const PairCode code{h.order()};

      std::optional<ModularMetric> modular;
      std::optional<StandardMetric> standard;
      if (kind == ProductKind::modular)
        modular.emplace(g, h);
      else if (kind != ProductKind::direct_codirect)
        standard.emplace(g, h);
      else
        throw CLI::ValidationError("--kind",
                                   "no closed form for direct-codirect; use another kind");

      json records = json::array();
      auto add_record = [&](int g1, int h1, int g2, int h2) {
        json rec{{"pair", {g1, h1, g2, h2}}};
        if (modular) {
          const auto c = modular->distance(g1, h1, g2, h2);
          rec["closed_form"] = dist_json(c.value);
          rec["case_tag"] = to_string(c.tag);
        } else {
          rec["closed_form"] = dist_json(standard->distance(kind, g1, h1, g2, h2));
        }
        rec["bfs"] = dist_json(bfs.at(code.encode(g1, h1), code.encode(g2, h2)));
        rec["agree"] = rec["closed_form"] == rec["bfs"];
        records.push_back(std::move(rec));
      };
      if (dist_all) {
        for (int u = 0; u < prod.order(); ++u) {
          auto [g1, h1] = code.decode(u);
          for (int v = u; v < prod.order(); ++v) {
            auto [g2, h2] = code.decode(v);
            add_record(g1, h1, g2, h2);
          }
        }
      } else {
        g.check_vertex(dist_pair[0]);
        h.check_vertex(dist_pair[1]);
        g.check_vertex(dist_pair[2]);
        h.check_vertex(dist_pair[3]);
        add_record(dist_pair[0], dist_pair[1], dist_pair[2], dist_pair[3]);
      }
      emit(json{{"schema", kSchemaVersion},
                {"config", {{"kind", to_string(kind)}, {"g", dist_g}, {"h", dist_h}}},
                {"records", records}},
           dist_out);
      return 0;
    }

    if (*analyze_cmd) {
      const Graph g = read_edge_list_file(analyze_g);
      const GraphClass cls = classify(g);
      json doc{{"schema", kSchemaVersion}, {"config", {{"g", analyze_g}}}};
      doc["order"] = g.order();
      doc["edges"] = g.edge_count();
      doc["class"] = {{"complete", cls.is_complete},
                      {"edgeless", cls.is_edgeless},
                      {"connected", cls.is_connected},
                      {"union_of_two_cliques", cls.is_union_of_two_cliques},
                      {"diameter", dist_json(cls.diameter)},
                      {"universal_vertices", cls.universal_vertices},
                      {"isolated_vertices", cls.isolated_vertices}};
      doc["twin_classes"] = twin_classes(g, TwinKind::closed).classes;
      doc["false_twin_classes"] = twin_classes(g, TwinKind::open).classes;
      json gammas = json::array();
      for (auto [u, v] : gamma_pairs(g).pairs) gammas.push_back({u, v});
      doc["gamma_pairs"] = gammas;
      doc["p_set"] = p_set(g);
      const MinusGraphs mg = minus_graphs(g);
      doc["minus_order"] = mg.minus.order();
      doc["minus_vertices"] = mg.to_original;
      const TwinOrdering ord = twin_ordering(g);
      doc["twin_ordering"] = {{"blocks", ord.blocks}, {"sizes", ord.sizes}, {"k", ord.block_count}};
      if (cls.is_connected) doc["boundary_vertices"] = boundary_vertices(g);
      emit(doc, analyze_out);
      return 0;
    }

    if (*srg_cmd) {
      const Graph g = read_edge_list_file(srg_g);
      const Graph h = read_edge_list_file(srg_h);
      SrgGraph srg = [&] {
        if (srg_method == "oracle")
          return srg_oracle(build_product(ProductKind::modular, g, h));
        if (srg_method == "auto") return srg_dispatch(g, h);
        throw CLI::ValidationError("--method", "expected oracle or auto");
      }();
      write_graph(srg.skeleton, srg_out);
      json sidecar{{"schema", kSchemaVersion},
                   {"method", srg.method},
                   {"config", {{"g", srg_g}, {"h", srg_h}, {"method", srg_method}}}};
      if (srg.specialized_match) sidecar["specialized_match"] = *srg.specialized_match;
      json edges = json::array();
      for (const auto& e : srg.edges)
        edges.push_back({{"u", e.u}, {"v", e.v}, {"reason", to_string(e.reason)}});
      sidecar["edges"] = edges;
      if (!srg_out.empty())
        emit(sidecar, srg_out + ".reasons.json");
      else
        emit(sidecar, "");
      return 0;
    }

    if (*dims_cmd) {
      const Graph g = read_edge_list_file(dims_g);
      json doc{{"schema", kSchemaVersion}};
      CoverResult result;
      if (dims_h.empty()) {
        const SrgGraph srg = srg_oracle(g);
        result = dims_canonical ? min_vertex_cover_canonical(srg.skeleton, dims_budget)
                                : min_vertex_cover(srg.skeleton, dims_budget);
        doc["config"] = {{"g", dims_g}, {"budget", dims_budget}, {"canonical", dims_canonical}};
      } else {
        const Graph h = read_edge_list_file(dims_h);
        if (dims_canonical) {
          ModularMetric m(g, h);
          if (!m.connected()) throw precondition_error("disconnected modular product");
          const SrgGraph srg = srg_dispatch(g, h);
          result = min_vertex_cover_canonical(srg.skeleton, dims_budget);
        } else {
          result = strong_metric_dimension_modular(g, h, dims_budget);
        }
        doc["config"] = {{"g", dims_g},
                         {"h", dims_h},
                         {"budget", dims_budget},
                         {"canonical", dims_canonical}};
        if (result.has_witness) {
          const PairCode code{h.order()};
          json pairs = json::array();
          for (int v : result.witness) {
            auto [a, b] = code.decode(v);
            pairs.push_back({a, b});
          }
          doc["witness_pairs"] = pairs;
        }
      }
      doc["dims"] = result.size;
      if (result.has_witness) doc["witness"] = result.witness;
      doc["optimal"] = result.optimal;
      doc["elapsed"] = result.elapsed_seconds;
      doc["nodes"] = result.nodes_explored;
      emit(doc, dims_out);
      return result.optimal ? 0 : 3;
    }

    if (*gen_cmd) {
      write_graph(generate(spec_from_cli(gen_family, gen_params, gen_of, gen_of_params)),
                  gen_out);
      return 0;
    }

    if (*verify_cmd) {
      VerifyOptions options;
      options.budget_seconds = verify_budget;
      options.max_product_order = verify_max_product;
      options.allow_large = verify_allow_large;
      std::vector<Claim> claims;
      if (!verify_claim_json.empty()) {
        claims.push_back(claim_from_json(json::parse(verify_claim_json)));
      } else if (verify_suite == "paper") {
        claims = paper_suite();
      } else if (verify_suite == "quick") {
        claims = quick_suite();
      } else {
        throw CLI::ValidationError("verify", "need --suite paper|quick or --claim");
      }
      return run_verify(claims, options, threads, verify_out);
    }

    if (*selftest_cmd) return run_selftest(selftest_quick, selftest_seed, selftest_pairs);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
