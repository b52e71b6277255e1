// galois-sieve: field models, the elliptic-square sieve, linear algebra mod ell and the JL baseline.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gsieve/baseline/jl.hpp"
#include "gsieve/models/field_model.hpp"
#include "gsieve/pipeline/pipeline.hpp"

using namespace gsieve;

namespace {

struct RunFlags {
  std::string config;
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
  std::optional<int> kappa;
  std::optional<std::size_t> target_rank;
  std::string report;
  std::string relations;
  std::optional<std::string> exponent;
};

void add_run_flags(CLI::App* app, RunFlags& f) {
  app->add_option("--config", f.config, "experiment configuration file")->required()->check(CLI::ExistingFile);
  app->add_option("--seed", f.seed, "override the configured seed");
  app->add_option("--jobs", f.jobs, "worker threads for the sieve")->check(CLI::PositiveNumber);
  app->add_option("--kappa", f.kappa, "largest place degree in the factor basis (1 or 2)")->check(CLI::Range(1, 2));
  app->add_option("--target-rank", f.target_rank, "stop once the relation matrix reaches this rank");
  app->add_option("--report", f.report, "write the report to this file instead of standard output");
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

PipelineConfig load_with_overrides(const RunFlags& f) {
  PipelineConfig c = load_config(f.config);
  if (f.seed) c.seed = *f.seed;
  if (f.kappa) c.kappa = *f.kappa;
  if (f.target_rank) c.target_rank = *f.target_rank;
  return c;
}

int finish(const PipelineResult& res, const RunFlags& f) {
  emit(res.report, f.report);
  if (!f.relations.empty()) emit(relation_log(res), f.relations);
  for (auto& c : res.checks) {
    if (!c.passed) return 1;
  }
  return 0;
}

std::string degree_sample(const FieldModel& M, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const ResidueField& K = M.field();
  std::map<int, std::size_t> hist;
  std::size_t invariant = 0;
  for (std::size_t i = 0; i < n; ++i) {
    ResidueElem z = K.random(rng);
    int dz = model_degree(z, M);
    ++hist[dz];
    invariant += model_degree(K.frobenius(z), M) == dz;
  }
  std::ostringstream os;
  os << "degree sample (" << n << " random elements, seed " << seed << ")\n";
  for (auto& [k, c] : hist) os << "  degree " << k << ": " << c << "\n";
  os << "  deg(z^p) = deg(z): " << invariant << " of " << n << "\n";
  return os.str();
}

std::vector<std::int64_t> split_ints(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::int64_t> v;
  std::int64_t x;
  while (is >> x) v.push_back(x);
  if (!is.eof()) throw CLI::ValidationError("expected a list of integers: " + s);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite fields with Galois-invariant smoothness bases and the elliptic-square sieve"};
  app.require_subcommand(1);

  // model
  auto* model = app.add_subcommand("model", "build a finite field model and print its certificate");
  model->require_subcommand(1);
  std::uint32_t p = 0;
  int d = 0;
  std::int64_t a = 0, D = 0, ua = 0;
  std::size_t sample = 0;
  std::uint64_t mseed = kDefaultSeed;
  bool histogram = false;
  std::string curve_s, point_s;

  auto* kummer = model->add_subcommand("kummer", "F_p[X]/(X^d - a) with d | p - 1");
  kummer->add_option("--p", p)->required();
  kummer->add_option("--d", d)->required();
  kummer->add_option("--a", a)->required();
  auto* as = model->add_subcommand("artin-schreier", "F_p[X]/(X^p - X - a)");
  as->add_option("--p", p)->required();
  as->add_option("--a", a)->required();
  auto* torus = model->add_subcommand("torus", "norm-one torus model with d | p + 1");
  torus->add_option("--p", p)->required();
  torus->add_option("--d", d)->required();
  torus->add_option("--D", D, "non-square defining F_p(sqrt D)")->required();
  torus->add_option("--ua", ua, "u-coordinate of the generator")->required();
  torus->add_flag("--histogram", histogram, "count the torus degree of every field element");
  auto* ell = model->add_subcommand("elliptic", "residue field of the fiber of phi - 1 over a rational point");
  ell->add_option("--p", p)->required();
  ell->add_option("--curve", curve_s, "a1 a2 a3 a4 a6")->required();
  ell->add_option("--point", point_s, "x y of the rational point a")->required();
  for (auto* s : {kummer, as, torus, ell}) {
    s->add_option("--sample", sample, "report the model degree of this many random elements");
    s->add_option("--seed", mseed, "seed for sampling");
  }

  // pipeline stages
  RunFlags sieve_f, linalg_f, dlog_f;
  auto* sieve = app.add_subcommand("sieve", "relation collection");
  sieve->require_subcommand(1);
  auto* sieve_run = sieve->add_subcommand("run", "sieve until the target rank, without solving");
  add_run_flags(sieve_run, sieve_f);
  sieve_run->add_option("--relations", sieve_f.relations, "write the relation log to this file");
  auto* linalg = app.add_subcommand("linalg", "linear algebra modulo ell");
  linalg->require_subcommand(1);
  auto* linalg_solve = linalg->add_subcommand("solve", "sieve and solve for the virtual logarithms");
  add_run_flags(linalg_solve, linalg_f);
  linalg_solve->add_option("--relations", linalg_f.relations, "write the relation log to this file");
  auto* dlog = app.add_subcommand("dlog", "discrete logarithm checks");
  dlog->require_subcommand(1);
  auto* dlog_verify = dlog->add_subcommand("verify", "full pipeline with the configured verification");
  add_run_flags(dlog_verify, dlog_f);
  dlog_verify->add_option("--exponent", dlog_f.exponent, "check this exponent instead of the configured one");

  // baseline
  auto* baseline = app.add_subcommand("baseline", "comparison baselines");
  baseline->require_subcommand(1);
  auto* jl = baseline->add_subcommand("jl", "Joux-Lercier style basis on y = f(x), x = g(y)");
  std::uint32_t jp = 61;
  int jkappa = 2, jdf = 2, jdg = 10, jd = 19;
  std::uint64_t jseed = 20240611;
  std::size_t reduced = 196;
  jl->add_option("--p", jp, "base field")->capture_default_str();
  jl->add_option("--kappa", jkappa, "largest basis degree")->capture_default_str();
  jl->add_option("--df", jdf, "degree of f")->capture_default_str();
  jl->add_option("--dg", jdg, "degree of g")->capture_default_str();
  jl->add_option("--d", jd, "degree of the target field")->capture_default_str();
  jl->add_option("--seed", jseed, "search seed")->capture_default_str();
  jl->add_option("--reduced", reduced, "size of the Galois-reduced basis to compare with")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (model->parsed()) {
      std::unique_ptr<FieldModel> M;
      if (kummer->parsed()) M = std::make_unique<FieldModel>(kummer_model(p, d, a));
      if (as->parsed()) M = std::make_unique<FieldModel>(artin_schreier_model(p, a));
      if (torus->parsed()) M = std::make_unique<FieldModel>(torus_model(p, d, D, ua));
      if (ell->parsed()) {
        auto c = split_ints(curve_s);
        auto pt = split_ints(point_s);
        if (c.size() != 5 || pt.size() != 2) throw std::invalid_argument("--curve needs 5 integers and --point 2");
        PrimeField F(p);
        CurveFp E(F, F.from_int(c[0]), F.from_int(c[1]), F.from_int(c[2]), F.from_int(c[3]), F.from_int(c[4]));
        M = std::make_unique<FieldModel>(elliptic_residue_model(E, make_point(E, pt[0], pt[1]), mseed));
      }
      std::cout << M->report();
      if (histogram) {
        auto h = torus_degree_histogram(*M);
        std::cout << "torus degree histogram\n";
        for (std::size_t k = 0; k < h.size(); ++k) std::cout << "  degree " << k << ": " << h[k] << "\n";
      }
      if (sample) std::cout << degree_sample(*M, sample, mseed);
      return M->certify() ? 0 : 1;
    }
    if (sieve_run->parsed()) {
      PipelineOptions opt;
      opt.jobs = sieve_f.jobs;
      opt.solve = false;
      opt.verify = false;
      return finish(run_pipeline(load_with_overrides(sieve_f), opt), sieve_f);
    }
    if (linalg_solve->parsed()) {
      PipelineOptions opt;
      opt.jobs = linalg_f.jobs;
      opt.verify = false;
      return finish(run_pipeline(load_with_overrides(linalg_f), opt), linalg_f);
    }
    if (dlog_verify->parsed()) {
      PipelineOptions opt;
      opt.jobs = dlog_f.jobs;
      opt.exponent = dlog_f.exponent;
      return finish(run_pipeline(load_with_overrides(dlog_f), opt), dlog_f);
    }
    if (jl->parsed()) {
      auto fg = jl_search(jp, jdf, jdg, jd, jseed);
      if (!fg) {
        std::cerr << "baseline jl: no f, g found with a degree-" << jd << " target factor\n";
        return 1;
      }
      std::cout << jl_report(jl_baseline(fg->first, fg->second, jkappa, jd), reduced);
      return 0;
    }
  } catch (const StageError& e) {
    std::cerr << "stage " << e.stage() << " failed: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
