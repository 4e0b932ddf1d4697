#include "modprod/families.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "modprod/classify.hpp"
#include "modprod/metric.hpp"
#include "modprod/srg.hpp"
#include "modprod/structure.hpp"

namespace modprod {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

Graph make_path(int n) {
  require(n >= 1, "path: n >= 1");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph make_cycle(int n) {
  require(n >= 3, "cycle: n >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph make_complete(int n) {
  require(n >= 1, "complete: n >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph make_star(int s) {
  require(s >= 1, "star: s >= 1");
  Graph g(s + 1);
  for (int v = 1; v <= s; ++v) g.add_edge(0, v);
  return g;
}

Graph make_clique_union(const std::vector<int>& sizes) {
  require(!sizes.empty(), "clique_union: at least one clique");
  int total = 0;
  for (int s : sizes) {
    require(s >= 1, "clique_union: clique sizes >= 1");
    total += s;
  }
  Graph g(total);
  int base = 0;
  for (int s : sizes) {
    for (int u = 0; u < s; ++u)
      for (int v = u + 1; v < s; ++v) g.add_edge(base + u, base + v);
    base += s;
  }
  return g;
}

Graph make_knn_minus_m(const std::vector<int>& params) {
  require(!params.empty(), "knn_minus_m: missing n");
  const int n = params[0];
  require(n >= 2, "knn_minus_m: n >= 2");
  require(static_cast<int>(params.size()) == 2 * n + 1, "knn_minus_m: expected n, q_1..q_n, r_1..r_n");
  std::vector<int> q(params.begin() + 1, params.begin() + 1 + n);
  std::vector<int> r(params.begin() + 1 + n, params.end());
  for (int i = 0; i < n; ++i) require(q[i] >= 1 && r[i] >= 1, "knn_minus_m: blowup sizes >= 1");

  std::vector<int> x_base(n), y_base(n);
  int total = 0;
  for (int i = 0; i < n; ++i) {
    x_base[i] = total;
    total += q[i];
  }
  for (int i = 0; i < n; ++i) {
    y_base[i] = total;
    total += r[i];
  }
  Graph g(total);
  auto add_clique = [&](int base, int size) {
    for (int u = 0; u < size; ++u)
      for (int v = u + 1; v < size; ++v) g.add_edge(base + u, base + v);
  };
  for (int i = 0; i < n; ++i) {
    add_clique(x_base[i], q[i]);
    add_clique(y_base[i], r[i]);
  }
  // x-block i joined to every y-block except the matched one
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int u = 0; u < q[i]; ++u)
        for (int v = 0; v < r[j]; ++v) g.add_edge(x_base[i] + u, y_base[j] + v);
    }
  return g;
}

Graph make_hstq(int s, int t, int q) {
  require(s >= 1 && t >= 2 && q >= 0, "hstq: s >= 1, t >= 2, q >= 0");
  // labeling: x_1..x_s = 0..s-1, y_1..y_t next, w_1..w_q next, hub z last
  const int z = s + t + q;
  Graph g(z + 1);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < t; ++j) g.add_edge(i, s + j);
  for (int j = 0; j < t - 1; ++j) g.add_edge(z, s + j);
  for (int l = 0; l < q; ++l) g.add_edge(z, s + t + l);
  return g;
}

}  // namespace

Graph generate(const FamilySpec& spec) {
  using Tag = FamilySpec::Tag;
  switch (spec.tag) {
    case Tag::path: return make_path(spec.params.at(0));
    case Tag::cycle: return make_cycle(spec.params.at(0));
    case Tag::complete: return make_complete(spec.params.at(0));
    case Tag::star: return make_star(spec.params.at(0));
    case Tag::empty:
      require(spec.params.at(0) >= 1, "empty: n >= 1");
      return Graph(spec.params.at(0));
    case Tag::clique_union: return make_clique_union(spec.params);
    case Tag::knn_minus_m: return make_knn_minus_m(spec.params);
    case Tag::hstq: return make_hstq(spec.params.at(0), spec.params.at(1), spec.params.at(2));
    case Tag::complement_of:
      require(spec.inner != nullptr, "complement_of: missing inner spec");
      return complement(generate(*spec.inner));
  }
  throw std::invalid_argument("unknown family tag");
}

std::string to_string(const FamilySpec& spec) {
  using Tag = FamilySpec::Tag;
  std::ostringstream os;
  switch (spec.tag) {
    case Tag::path: os << "path(" << spec.params.at(0) << ")"; break;
    case Tag::cycle: os << "cycle(" << spec.params.at(0) << ")"; break;
    case Tag::complete: os << "complete(" << spec.params.at(0) << ")"; break;
    case Tag::star: os << "star(" << spec.params.at(0) << ")"; break;
    case Tag::empty: os << "empty(" << spec.params.at(0) << ")"; break;
    case Tag::clique_union: {
      os << "clique-union(";
      for (std::size_t i = 0; i < spec.params.size(); ++i) os << (i ? "," : "") << spec.params[i];
      os << ")";
      break;
    }
    case Tag::knn_minus_m: {
      os << "knnm(";
      for (std::size_t i = 0; i < spec.params.size(); ++i) os << (i ? "," : "") << spec.params[i];
      os << ")";
      break;
    }
    case Tag::hstq:
      os << "hstq(" << spec.params.at(0) << "," << spec.params.at(1) << "," << spec.params.at(2)
         << ")";
      break;
    case Tag::complement_of: os << "co-" << to_string(*spec.inner); break;
  }
  return os.str();
}

std::optional<FamilySpec::Tag> family_tag_from_string(std::string_view name) {
  using Tag = FamilySpec::Tag;
  if (name == "path") return Tag::path;
  if (name == "cycle") return Tag::cycle;
  if (name == "complete") return Tag::complete;
  if (name == "star") return Tag::star;
  if (name == "empty") return Tag::empty;
  if (name == "clique-union") return Tag::clique_union;
  if (name == "knnm") return Tag::knn_minus_m;
  if (name == "hstq") return Tag::hstq;
  if (name == "complement") return Tag::complement_of;
  return std::nullopt;
}

FamilySpec Claim::left_spec() const {
  switch (kind) {
    case Kind::star_star: return FamilySpec::star(a.at(0));
    case Kind::cocycle_cocycle: return FamilySpec::complement_of(FamilySpec::cycle(a.at(0)));
    case Kind::cycle_cycle: return FamilySpec::cycle(a.at(0));
    case Kind::knn_blowup_h: {
      const int n = a.at(0);
      return FamilySpec{FamilySpec::Tag::knn_minus_m,
                        std::vector<int>(a.begin(), a.begin() + 2 * n + 1), nullptr};
    }
    case Kind::p5_h: return FamilySpec::path(5);
    case Kind::star_hstq: return FamilySpec::star(a.at(0));
    case Kind::complete_factor: return *g_spec;
  }
  throw std::logic_error("unknown claim kind");
}

FamilySpec Claim::right_spec() const {
  switch (kind) {
    case Kind::star_star: return FamilySpec::star(a.at(1));
    case Kind::cocycle_cocycle: return FamilySpec::complement_of(FamilySpec::cycle(a.at(1)));
    case Kind::cycle_cycle: return FamilySpec::cycle(a.at(1));
    case Kind::knn_blowup_h:
    case Kind::p5_h: return *h_spec;
    case Kind::star_hstq: return FamilySpec::hstq(a.at(1), a.at(2), a.at(3));
    case Kind::complete_factor: return FamilySpec::complete(a.at(0));
  }
  throw std::logic_error("unknown claim kind");
}

std::string Claim::id() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::star_star: os << "stars(" << a.at(0) << "," << a.at(1) << ")"; break;
    case Kind::cocycle_cocycle: os << "cocycles(" << a.at(0) << "," << a.at(1) << ")"; break;
    case Kind::cycle_cycle: os << "cycles(" << a.at(0) << "," << a.at(1) << ")"; break;
    case Kind::knn_blowup_h: os << to_string(left_spec()) << " x " << to_string(*h_spec); break;
    case Kind::p5_h: os << "path(5) x " << to_string(*h_spec); break;
    case Kind::star_hstq:
      os << "star(" << a.at(0) << ") x hstq(" << a.at(1) << "," << a.at(2) << "," << a.at(3)
         << ")";
      break;
    case Kind::complete_factor:
      os << to_string(*g_spec) << " x complete(" << a.at(0) << ")";
      break;
  }
  return os.str();
}

namespace {

Prediction invalid(std::string reason) { return {false, 0, std::move(reason)}; }
Prediction valid(int value) { return {true, value, {}}; }

Prediction predict_star_star(int s, int t) {
  if (!(s >= t && t >= 2)) return invalid("requires s >= t >= 2");
  return valid(t == 2 ? s * t + s - 1 : s * t + s);
}

Prediction predict_cocycle(int s, int t) {
  if (s > t) std::swap(s, t);
  if (s < 5) return invalid("requires s,t >= 5");
  if (s == 5 && t == 5) return valid(20);
  return valid(s * t - (s / 2) * (t / 2));
}

Prediction predict_cycle(int s, int t) {
  if (std::min(s, t) < 7) return invalid("requires s,t >= 7");
  const int mn = std::min(s, t);
  int r = 0;
  if (mn % 3 == 2) r = s == t ? 1 : 2;
  return valid(s * t - 4 * (mn / 3) - r);
}

Prediction predict_knn_blowup_h(const Claim& claim) {
  const int n = claim.a.at(0);
  if (n < 3) return invalid("requires n >= 3");
  const Graph h = generate(*claim.h_spec);
  if (!classify(h).universal_vertices.empty())
    return invalid("second factor must have no universal vertex");
  const Graph g = generate(claim.left_spec());
  const TwinOrdering og = twin_ordering(g);
  const TwinOrdering oh = twin_ordering(h);
  const int sum_g = std::accumulate(og.sizes.begin(), og.sizes.end(), 0);
  const int sum_h = std::accumulate(oh.sizes.begin(), oh.sizes.end(), 0);
  return valid(sum_g * sum_h - n * oh.block_count);
}

Prediction predict_p5_h(const Claim& claim) {
  const Graph h = generate(*claim.h_spec);
  const GraphClass ch = classify(h);
  if (!ch.universal_vertices.empty()) return invalid("factor must have no universal vertex");
  for (const auto& cls : twin_classes(h, TwinKind::closed).classes)
    if (cls.size() > 1) return invalid("factor must have no distinct twins");
  const TwinOrdering oh = twin_ordering(h);
  const int sum_h = std::accumulate(oh.sizes.begin(), oh.sizes.end(), 0);
  const CoverResult beta = min_vertex_cover(minus_graphs(h).co_minus);
  return valid(4 * sum_h - 2 * oh.block_count + beta.size);
}

Prediction predict_star_hstq(int r, int s, int t, int q) {
  if (!(r >= 3 && q >= 3 && s >= 4 && t >= 4)) return invalid("requires r,q >= 3 and s,t >= 4");
  const int ms = std::min(s, r - q);
  const int mt = std::min(t - 1, r - q);
  int b;
  if (r <= q + 1)
    b = r + 2;
  else if (r == q + 2 || (r >= q + 3 && std::max(s + 1, t) >= r))
    b = r + 1;
  else if (r >= q + 3 && t <= s && s < r - 1)
    b = q + ms;
  else if (r >= q + 3 && s < t && t < r)
    b = q + mt;
  else
    return invalid("parameters fall outside the case table");
  return valid((s + t + q - 1) * r - b + r + q + s + t);
}

Prediction predict_complete_factor(const Claim& claim) {
  const int t = claim.a.at(0);
  if (t < 2) return invalid("requires t >= 2");
  const Graph g = generate(*claim.g_spec);
  const GraphClass cg = classify(g);
  if (cg.is_complete) return invalid("first factor must not be complete");
  if (!cg.is_connected) return invalid("first factor must be connected");
  return valid((t - 1) * g.order() + strong_metric_dimension(g));
}

}  // namespace

Prediction predicted_dims(const Claim& claim) {
  switch (claim.kind) {
    case Claim::Kind::star_star: return predict_star_star(claim.a.at(0), claim.a.at(1));
    case Claim::Kind::cocycle_cocycle: return predict_cocycle(claim.a.at(0), claim.a.at(1));
    case Claim::Kind::cycle_cycle: return predict_cycle(claim.a.at(0), claim.a.at(1));
    case Claim::Kind::knn_blowup_h: return predict_knn_blowup_h(claim);
    case Claim::Kind::p5_h: return predict_p5_h(claim);
    case Claim::Kind::star_hstq:
      return predict_star_hstq(claim.a.at(0), claim.a.at(1), claim.a.at(2), claim.a.at(3));
    case Claim::Kind::complete_factor: return predict_complete_factor(claim);
  }
  throw std::logic_error("unknown claim kind");
}

ClaimReport verify_claim(const Claim& claim, const VerifyOptions& options) {
  ClaimReport report;
  report.id = claim.id();
  const Prediction pred = predicted_dims(claim);
  report.valid = pred.valid;
  if (!pred.valid) {
    report.invalid_reason = pred.invalid_reason;
    return report;
  }
  report.predicted = pred.value;

  const Graph g = generate(claim.left_spec());
  const Graph h = generate(claim.right_spec());
  report.product_order = g.order() * h.order();
  if (report.product_order > options.max_product_order && !options.allow_large) {
    report.valid = false;
    report.invalid_reason = "product order " + std::to_string(report.product_order) +
                            " exceeds the ceiling " + std::to_string(options.max_product_order);
    return report;
  }

  const auto t0 = std::chrono::steady_clock::now();
  if (claim.kind == Claim::Kind::complete_factor) {
    // cross-check the closed form against the full pipeline
    CoverResult via_formula = strong_metric_dimension_modular(g, h, options.budget_seconds);
    SrgGraph srg = srg_oracle(build_product(ProductKind::modular, g, h));
    CoverResult via_pipeline = min_vertex_cover(srg.skeleton, options.budget_seconds);
    report.computed = via_formula.size;
    report.optimal = via_pipeline.optimal;
    report.srg_edges = srg.skeleton.edge_count();
    report.srg_components = component_count(srg.skeleton);
    report.solver_nodes = via_pipeline.nodes_explored;
    report.match = via_formula.size == pred.value && via_pipeline.size == pred.value;
  } else {
    SrgGraph srg = srg_dispatch(g, h);
    CoverResult res = min_vertex_cover(srg.skeleton, options.budget_seconds);
    report.computed = res.size;
    report.optimal = res.optimal;
    report.srg_edges = srg.skeleton.edge_count();
    report.srg_components = component_count(srg.skeleton);
    report.solver_nodes = res.nodes_explored;
    report.match = res.optimal && res.size == pred.value;
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::vector<Claim> paper_suite() {
  using Kind = Claim::Kind;
  std::vector<Claim> out;
  out.push_back({Kind::star_star, {3, 2}, {}, {}});
  out.push_back({Kind::star_star, {4, 3}, {}, {}});
  out.push_back({Kind::cocycle_cocycle, {5, 5}, {}, {}});
  out.push_back({Kind::cocycle_cocycle, {5, 6}, {}, {}});
  out.push_back({Kind::cycle_cycle, {7, 7}, {}, {}});
  out.push_back({Kind::cycle_cycle, {7, 8}, {}, {}});
  out.push_back({Kind::cycle_cycle, {8, 8}, {}, {}});
  out.push_back({Kind::cycle_cycle, {8, 9}, {}, {}});
  out.push_back({Kind::knn_blowup_h, {3, 1, 1, 1, 1, 1, 1}, {}, FamilySpec::knn_minus_m(3)});
  out.push_back({Kind::knn_blowup_h, {3, 1, 1, 1, 1, 1, 1}, {}, FamilySpec::cycle(7)});
  out.push_back({Kind::p5_h, {}, {}, FamilySpec::path(7)});
  out.push_back({Kind::p5_h, {}, {}, FamilySpec::cycle(7)});
  out.push_back({Kind::complete_factor, {2}, FamilySpec::path(4), {}});
  out.push_back({Kind::star_hstq, {3, 4, 4, 3}, {}, {}});
  return out;
}

std::vector<Claim> quick_suite() {
  using Kind = Claim::Kind;
  std::vector<Claim> out;
  out.push_back({Kind::star_star, {3, 2}, {}, {}});
  out.push_back({Kind::complete_factor, {2}, FamilySpec::path(4), {}});
  out.push_back({Kind::knn_blowup_h, {3, 1, 1, 1, 1, 1, 1}, {}, FamilySpec::cycle(7)});
  out.push_back({Kind::p5_h, {}, {}, FamilySpec::cycle(7)});
  return out;
}

}  // namespace modprod
