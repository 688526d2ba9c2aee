// kfreq: frequency K_i experiments on symmetric TSP instances.
#include <CLI11.hpp>

#include <iostream>

#include "kfreq/experiments.hpp"

namespace {

struct Raw {
  std::string instance, random, perturb, i_range, tour;
  int i = 0;
  std::uint64_t samples = 0;
  int n = 0;
};

void add_common(CLI::App* sub, kfreq::RunConfig& cfg, Raw& raw) {
  sub->add_option("--instance", raw.instance, "TSPLIB .tsp file");
  sub->add_option("--random", raw.random, "random instance 'n,seed' with distances in (0,10]");
  sub->add_option("--perturb", raw.perturb, "add tie-breaking noise: magnitude or 'auto'");
  sub->add_option("--i", raw.i, "subset size i");
  sub->add_option("--i-range", raw.i_range, "inclusive subset-size range a..b");
  sub->add_option("--samples", raw.samples, "frequency K_i samples per edge (N)");
  sub->add_option("--seed", cfg.seed, "master seed")->capture_default_str();
  sub->add_option("--tour", raw.tour, "reference TSPLIB .tour file");
  sub->add_option("--out", cfg.out_dir, "existing output directory")->capture_default_str();
  sub->add_flag("--exhaustive", cfg.exhaustive, "use every K_i instead of sampling");
  sub->add_option("--workers", cfg.workers, "worker threads")->capture_default_str();
  sub->add_option("--cap", cfg.cap, "exact-solve size cap")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frequency K_i graphs, edge statistics and sparsification for symmetric TSP"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kfreq::kVersion);

  kfreq::RunConfig cfg;
  Raw raw;
  for (int k = 1; k < argc; ++k) cfg.argv.emplace_back(argv[k]);

  auto* freqgraph = app.add_subcommand("freqgraph", "frequency K_n of a small instance");
  auto* trajectory = app.add_subcommand("trajectory", "per-edge F, f, p across a range of i");
  auto* sample = app.add_subcommand("sample", "sampled OHC frequencies and err tables");
  auto* analytics = app.add_subcommand("analytics", "model curves and solved thresholds");
  auto* sparsify = app.add_subcommand("sparsify", "drop edges by decrement or threshold rule");
  auto* solve = app.add_subcommand("solve", "recover the OHC from a sparsified graph");
  auto* idsolve = app.add_subcommand("idsolve", "smallest i_d for a given n");

  for (auto* sub : {freqgraph, trajectory, sample, sparsify, solve}) add_common(sub, cfg, raw);
  sample->add_option("--repeats", cfg.repeats, "independent repeats with seeds seed..seed+R-1")
      ->capture_default_str();
  sample->add_flag("--ohc-only", cfg.ohc_only, "sample only the tour edges");
  sparsify->add_option("--mode", cfg.mode, "decrement | threshold")->capture_default_str();
  sparsify->add_option("--rule", cfg.rule, "threshold rule: f_lb | fixed | kth")
      ->capture_default_str();
  sparsify->add_option("--value", cfg.value, "threshold for --rule fixed");
  sparsify->add_option("--k", cfg.k, "k for --rule kth")->capture_default_str();
  for (auto* sub : {analytics, idsolve}) {
    sub->add_option("--n", raw.n, "instance size n");
    sub->add_flag("--residual-corrected", cfg.residual_corrected,
                  "also report i_d with the residual term kept");
  }
  analytics->add_option("--out", cfg.out_dir, "existing output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(kfreq::ExitCode::Usage);
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    auto* sub = app.get_subcommands().front();
    if (!raw.instance.empty()) cfg.instance_path = raw.instance;
    if (!raw.random.empty()) cfg.random = kfreq::parse_random_spec(raw.random);
    if (!raw.perturb.empty()) cfg.perturb = raw.perturb;
    if (!raw.tour.empty()) cfg.tour_path = raw.tour;
    if (!raw.i_range.empty()) cfg.i_range = kfreq::parse_range(raw.i_range);
    auto given = [&](const char* name) {
      const auto* opt = sub->get_option_no_throw(name);
      return opt != nullptr && opt->count() > 0;
    };
    if (given("--i")) cfg.i = raw.i;
    if (given("--samples")) cfg.samples = raw.samples;
    if (given("--n")) cfg.n = raw.n;

    const auto res = kfreq::run_command(cfg);
    if (!res.summary.empty()) std::cout << res.summary << '\n';
    for (const auto& f : res.files) std::cout << "wrote " << f << '\n';
    return 0;
  } catch (const std::exception& e) {
    const auto code = kfreq::classify_error(e);
    std::cerr << "error: " << e.what() << '\n';
    if (const auto* nh = dynamic_cast<const kfreq::NotHamiltonian*>(&e)) {
      std::cerr << "low-degree vertices:";
      for (int v : nh->low_degree_vertices()) std::cerr << ' ' << v;
      std::cerr << '\n';
    }
    return static_cast<int>(code);
  }
}
