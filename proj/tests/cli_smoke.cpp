// End-to-end exercise of the CLI binary (path passed as argv[1]).

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "modprod/edgelist.hpp"
#include "modprod/graph.hpp"

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
  std::printf("%s %s\n", ok ? "ok  " : "FAIL", what.c_str());
  if (!ok) ++failures;
}

int run(const std::string& cmd) {
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_smoke <modprod-binary>\n");
    return 2;
  }
  const std::string bin = argv[1];
  const fs::path dir = fs::temp_directory_path() / "modprod_cli_smoke";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto at = [&](const char* name) { return (dir / name).string(); };

  check(run(bin + " gen --family path --params 4 --out " + at("p4.el")) == 0, "gen path");
  check(run(bin + " gen --family complete --params 2 --out " + at("k2.el")) == 0, "gen complete");
  check(run(bin + " gen --family cycle --params 7 --out " + at("c7.el")) == 0, "gen cycle");
  check(run(bin + " gen --family complement --of cycle --of-params 5 --out " + at("cc5.el")) == 0,
        "gen complement");
  check(run(bin + " gen --family nosuch --params 1 >/dev/null 2>&1") == 1, "gen usage error");

  {
    const modprod::Graph p4 = modprod::read_edge_list_file(at("p4.el"));
    check(p4.order() == 4 && p4.edge_count() == 3, "generated path shape");
  }

  check(run(bin + " product --kind modular --g " + at("p4.el") + " --h " + at("k2.el") +
            " --out " + at("prod.el")) == 0,
        "product");
  {
    const modprod::Graph prod = modprod::read_edge_list_file(at("prod.el"));
    check(prod.order() == 8, "product order");
  }

  check(run(bin + " dist --kind modular --g " + at("p4.el") + " --h " + at("k2.el") +
            " --all --out " + at("dist.json")) == 0,
        "dist --all");
  {
    const json doc = json::parse(slurp(at("dist.json")));
    check(doc.at("schema") == 1, "dist schema");
    bool all_agree = true;
    for (const auto& rec : doc.at("records")) all_agree = all_agree && rec.at("agree") == true;
    check(all_agree && !doc.at("records").empty(), "dist closed form equals bfs");
  }

  check(run(bin + " analyze --g " + at("c7.el") + " --out " + at("an.json")) == 0, "analyze");
  {
    const json doc = json::parse(slurp(at("an.json")));
    check(doc.at("gamma_pairs").empty() && doc.at("class").at("diameter") == 3,
          "analyze cycle facts");
  }

  check(run(bin + " srg --g " + at("c7.el") + " --h " + at("c7.el") + " --method auto --out " +
            at("srg.el")) == 0,
        "srg");
  {
    const json sidecar = json::parse(slurp(at("srg.el.reasons.json")));
    check(sidecar.at("method") == "diam2" && sidecar.at("specialized_match") == true,
          "srg sidecar");
    const modprod::Graph skel = modprod::read_edge_list_file(at("srg.el"));
    check(skel.order() == 49 && skel.edge_count() == static_cast<int>(sidecar.at("edges").size()),
          "srg skeleton");
  }

  check(run(bin + " dims --g " + at("p4.el") + " --h " + at("k2.el") + " --out " +
            at("dims.json")) == 0,
        "dims modular");
  {
    const json doc = json::parse(slurp(at("dims.json")));
    check(doc.at("dims") == 5, "dims value via complete-factor shortcut");
  }

  check(run(bin + " dims --g " + at("c7.el") + " --h " + at("c7.el") + " --canonical --out " +
            at("dims2.json")) == 0,
        "dims canonical");
  {
    const json doc = json::parse(slurp(at("dims2.json")));
    check(doc.at("dims") == 41, "dims of the cycle pair");
    check(doc.at("witness").size() == 41, "dims witness size");
  }

  check(run(bin + " verify --suite quick --out " + at("verify.json") + " >" + at("verify.txt")) ==
            0,
        "verify quick");
  {
    const json doc = json::parse(slurp(at("verify.json")));
    bool all_match = true;
    for (const auto& rep : doc.at("reports")) all_match = all_match && rep.at("match") == true;
    check(all_match, "verify quick all match");
  }

  check(run(bin + " verify --claim '{\"kind\":\"stars\",\"s\":3,\"t\":2}' >" + at("claim.txt")) ==
            0,
        "verify single claim");

  check(run(bin + " --threads 4 verify --suite paper --out " + at("paper.json") + " >" +
            at("paper.txt")) == 0,
        "verify paper suite exits 0");
  {
    const json doc = json::parse(slurp(at("paper.json")));
    bool all_match = true;
    for (const auto& rep : doc.at("reports")) all_match = all_match && rep.at("match") == true;
    check(all_match && doc.at("reports").size() == 14, "verify paper all match");
  }

  check(run(bin + " selftest --quick --pairs 40 >" + at("selftest.txt")) == 0, "selftest quick");

  check(run(bin + " dist --g " + at("p4.el") + " --h " + at("k2.el") + " >/dev/null 2>&1") == 1,
        "dist without pair selection fails");

  std::printf("%s\n", failures == 0 ? "CLI SMOKE PASS" : "CLI SMOKE FAILED");
  return failures == 0 ? 0 : 1;
}
