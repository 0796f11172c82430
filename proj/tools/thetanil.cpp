// Command line front end: roots, cosets, pisystems, orbits, nregular, wdd.

#include "thetanil/commands.hpp"
#include "thetanil/parallel.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace thetanil;

namespace {

struct Common {
  std::string method = "auto";
  std::uint64_t seed = 1;
  std::int64_t omega_cap = std::int64_t{1} << 20;
  int threads = 0;
  std::string output = "text";

  void add(CLI::App* app) {
    app->add_option("--method", method, "auto, 1 or 2")->check(CLI::IsMember({"auto", "1", "2"}));
    app->add_option("--seed", seed, "seed for the random search");
    app->add_option("--omega-cap", omega_cap, "largest coefficient bound tried for e");
    app->add_option("--threads", threads, "worker threads (default: THETANIL_THREADS or all cores)");
    app->add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));
  }
  RunOptions run() const {
    RunOptions r;
    r.seed = seed;
    r.omega_cap = omega_cap;
    r.threads = threads > 0 ? threads : default_threads();
    return r;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nilpotent orbits of theta-groups"};
  app.require_subcommand(1);

  std::string type;
  auto* roots = app.add_subcommand("roots", "print a root system");
  roots->add_option("--type", type, "type and rank, e.g. E8")->required();

  CosetConfig ccfg;
  std::string minus, simple, ckac;
  auto* cosets = app.add_subcommand("cosets", "minimal length coset representatives of a Weyl subgroup");
  cosets->add_option("--type", ccfg.type)->required();
  auto* o1 = cosets->add_option("--subsystem-from-extended-minus", minus, "extended diagram nodes to drop, e.g. 5");
  auto* o2 = cosets->add_option("--simple", simple, "simple roots generating the subgroup, e.g. 1,3");
  auto* o3 = cosets->add_option("--kac", ckac, "subgroup W_l of this Kac diagram");
  o1->excludes(o2)->excludes(o3);
  o2->excludes(o3);
  cosets->add_flag("--words", ccfg.words, "print the representatives");

  auto* pis = app.add_subcommand("pisystems", "pi-systems up to Weyl group conjugacy");
  pis->add_option("--type", type)->required();

  Common common;
  std::string kac;
  int nreg = 0;
  auto* orbits = app.add_subcommand("orbits", "nilpotent orbits in g_1");
  orbits->add_option("--type", type)->required();
  auto* ok = orbits->add_option("--kac", kac, "labels s0,s1,...,sl (node 0 is the affine node)");
  auto* on = orbits->add_option("--nregular-order", nreg, "use the N-regular diagram of this order");
  ok->excludes(on);
  common.add(orbits);

  std::string orders = "2";
  auto* nregular = app.add_subcommand("nregular", "table of N-regular automorphisms");
  nregular->add_option("--type", type)->required();
  nregular->add_option("--orders", orders, "range such as 2..5");
  common.add(nregular);

  auto* wdd = app.add_subcommand("wdd", "weighted Dynkin diagrams of the nilpotent orbits of g");
  wdd->add_option("--type", type)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*roots) std::cout << cmd_roots(type);
    if (*cosets) {
      if (!minus.empty()) ccfg.extended_minus = parse_int_list(minus);
      if (!simple.empty()) ccfg.simple = parse_int_list(simple);
      if (!ckac.empty()) ccfg.kac = parse_kac(ckac);
      std::cout << cmd_cosets(ccfg);
    }
    if (*pis) std::cout << cmd_pisystems(type);
    if (*orbits) {
      RunConfig cfg;
      cfg.type = type;
      if (*ok) cfg.kac = parse_kac(kac);
      if (*on) cfg.nregular_order = nreg;
      if (!*ok && !*on) throw std::invalid_argument("orbits needs --kac or --nregular-order");
      cfg.method = parse_method(common.method);
      cfg.run = common.run();
      cfg.json = common.output == "json";
      std::cout << cmd_orbits(cfg);
    }
    if (*nregular) {
      auto [lo, hi] = parse_range(orders);
      if (lo < 2) throw std::invalid_argument("orders start at 2");
      std::cout << cmd_nregular(type, lo, hi, parse_method(common.method), common.run());
    }
    if (*wdd) std::cout << cmd_wdd(type);
  } catch (const RetryBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (retry with another --seed or a larger --omega-cap)\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
