#ifndef MODPROD_FAMILIES_HPP
#define MODPROD_FAMILIES_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modprod/graph.hpp"
#include "modprod/vertex_cover.hpp"

namespace modprod {

// Parameterized graph generators with documented labelings.
struct FamilySpec {
  enum class Tag {
    path,          // params: n >= 1; vertices in path order
    cycle,         // params: n >= 3
    complete,      // params: n >= 1
    star,          // params: s >= 1; center 0, leaves 1..s
    empty,         // params: n >= 1
    clique_union,  // params: sizes of the cliques, each >= 1
    knn_minus_m,   // params: n, q_1..q_n, r_1..r_n; x-cliques first, then
                   // y-cliques, blocks in index order
    hstq,          // params: s >= 1, t >= 2, q >= 0; X block, then Y, then W,
                   // then the hub vertex last
    complement_of, // inner spec
  };

  Tag tag;
  std::vector<int> params;
  std::shared_ptr<FamilySpec> inner;

  static FamilySpec path(int n) { return {Tag::path, {n}, nullptr}; }
  static FamilySpec cycle(int n) { return {Tag::cycle, {n}, nullptr}; }
  static FamilySpec complete(int n) { return {Tag::complete, {n}, nullptr}; }
  static FamilySpec star(int s) { return {Tag::star, {s}, nullptr}; }
  static FamilySpec empty(int n) { return {Tag::empty, {n}, nullptr}; }
  static FamilySpec clique_union(std::vector<int> sizes) {
    return {Tag::clique_union, std::move(sizes), nullptr};
  }
  static FamilySpec knn_minus_m(int n) {
    std::vector<int> p(2 * n + 1, 1);
    p[0] = n;
    return {Tag::knn_minus_m, std::move(p), nullptr};
  }
  static FamilySpec knn_minus_m_blowup(int n, std::vector<int> q, std::vector<int> r) {
    std::vector<int> p{n};
    p.insert(p.end(), q.begin(), q.end());
    p.insert(p.end(), r.begin(), r.end());
    return {Tag::knn_minus_m, std::move(p), nullptr};
  }
  static FamilySpec hstq(int s, int t, int q) { return {Tag::hstq, {s, t, q}, nullptr}; }
  static FamilySpec complement_of(FamilySpec inner) {
    return {Tag::complement_of, {}, std::make_shared<FamilySpec>(std::move(inner))};
  }
};

Graph generate(const FamilySpec& spec);
std::string to_string(const FamilySpec& spec);
std::optional<FamilySpec::Tag> family_tag_from_string(std::string_view name);

// A closed-form dimension statement for one modular product instance.
struct Claim {
  enum class Kind {
    star_star,        // a = {s, t}, s >= t >= 2
    cocycle_cocycle,  // a = {s, t}, s,t >= 5 (the (5,5) value is special)
    cycle_cycle,      // a = {s, t}, s,t >= 7
    knn_blowup_h,     // a = {n, q.., r..}, h_spec; n >= 3, h without
                      // universal vertex
    p5_h,             // h_spec; h without universal vertex or distinct twins
    star_hstq,        // a = {r, s, t, q}; r,q >= 3, s,t >= 4
    complete_factor,  // g_spec, a = {t}; g connected, not complete, t >= 2
  };

  Kind kind;
  std::vector<int> a;
  std::optional<FamilySpec> g_spec;
  std::optional<FamilySpec> h_spec;

  std::string id() const;
  // The two factors of the product instance.
  FamilySpec left_spec() const;
  FamilySpec right_spec() const;
};

struct Prediction {
  bool valid = false;
  int value = 0;
  std::string invalid_reason;
};

// The claim's closed-form value, or the violated hypothesis.
Prediction predicted_dims(const Claim& claim);

struct VerifyOptions {
  double budget_seconds = 300.0;
  int max_product_order = 120;
  bool allow_large = false;
};

struct ClaimReport {
  std::string id;
  bool valid = false;
  std::string invalid_reason;
  int predicted = 0;
  int computed = 0;
  bool match = false;
  bool optimal = true;
  int product_order = 0;
  int srg_edges = 0;
  int srg_components = 0;
  std::uint64_t solver_nodes = 0;
  double elapsed_seconds = 0.0;
};

// Builds the factors, runs the full pipeline, and compares with the
// prediction.
ClaimReport verify_claim(const Claim& claim, const VerifyOptions& options = {});

// The proposition matrix exercised by the acceptance run.
std::vector<Claim> paper_suite();
// A fast subset for smoke runs.
std::vector<Claim> quick_suite();

}  // namespace modprod

#endif
