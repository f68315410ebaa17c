// momst: generate bi-objective spanning-tree benchmark instances, run the
// mutation-based NSGA-II on them, and post-process the results.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli_util.hpp"
#include "momst/archive.hpp"
#include "momst/errors.hpp"
#include "momst/indicators.hpp"
#include "momst/instance.hpp"
#include "momst/mutation.hpp"
#include "momst/nsga2.hpp"
#include "momst/rng.hpp"
#include "momst/scalarize.hpp"

namespace fs = std::filesystem;
using cli::atomic_write;
using cli::fmt_double;

namespace {

constexpr const char* kResultsMagic = "# momst-results v1";
constexpr const char* kResultsHeader =
    "instance,op,rep,seed,fraction,evaluations,front_size,front_file,wall_seconds";

struct ResultRow {
  std::string instance;
  std::string op;
  int rep = 0;
  std::uint64_t seed = 0;
  double fraction = 0.0;
  long long evaluations = 0;
  int front_size = 0;
  std::string front_file;
  double wall_seconds = 0.0;
};

std::string row_to_csv(const ResultRow& r) {
  std::ostringstream out;
  out << r.instance << ',' << r.op << ',' << r.rep << ',' << r.seed << ','
      << fmt_double(r.fraction) << ',' << r.evaluations << ',' << r.front_size << ','
      << r.front_file << ',' << fmt_double(r.wall_seconds);
  return out.str();
}

ResultRow row_from_csv(const std::string& line, int line_no) {
  const auto f = cli::split(line, ',');
  if (f.size() != 9) throw momst::ParseError("expected 9 result fields", line_no);
  ResultRow r;
  try {
    r.instance = f[0];
    r.op = f[1];
    r.rep = std::stoi(f[2]);
    r.seed = std::stoull(f[3]);
    r.fraction = std::stod(f[4]);
    r.evaluations = std::stoll(f[5]);
    r.front_size = std::stoi(f[6]);
    r.front_file = f[7];
    r.wall_seconds = std::stod(f[8]);
  } catch (const std::exception&) {
    throw momst::ParseError("malformed result row", line_no);
  }
  return r;
}

std::string front_to_csv(std::span<const momst::CostVector> pts) {
  std::string out = "# momst-front v1\nc1,c2\n";
  for (const auto& p : pts) {
    out += fmt_double(p.c1);
    out += ',';
    out += fmt_double(p.c2);
    out += '\n';
  }
  return out;
}

std::vector<momst::CostVector> front_from_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open front file " + path.string());
  std::vector<momst::CostVector> pts;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#' || line == "c1,c2") continue;
    const auto f = cli::split(line, ',');
    if (f.size() != 2) throw momst::ParseError("expected 'c1,c2' in " + path.string(), line_no);
    try {
      pts.push_back({std::stod(f[0]), std::stod(f[1])});
    } catch (const std::exception&) {
      throw momst::ParseError("malformed point in " + path.string(), line_no);
    }
  }
  return pts;
}

std::vector<int> parse_int_list(const std::string& csv, const char* what) {
  std::vector<int> out;
  for (const std::string& s : cli::split(csv, ','))
    try {
      out.push_back(std::stoi(s));
    } catch (const std::exception&) {
      throw momst::ContractError(std::string("bad ") + what + " value: " + s);
    }
  if (out.empty()) throw momst::ContractError(std::string("empty ") + what + " list");
  return out;
}

momst::MutationConfig make_mutation_config(const std::string& op, int sigma, int usg_floor,
                                           const std::string& sg_solver) {
  momst::MutationConfig cfg;
  cfg.op = momst::parse_op(op);
  cfg.sigma = sigma;
  if (usg_floor != 1 && usg_floor != 3)
    throw momst::ContractError("--usg-floor must be 1 or 3");
  cfg.usg_floor = usg_floor == 1 ? momst::UsgSampleFloor::FromOne
                                 : momst::UsgSampleFloor::FromThree;
  if (sg_solver == "kruskal")
    cfg.sg_mst = momst::SubgraphMst::Kruskal;
  else if (sg_solver == "prim")
    cfg.sg_mst = momst::SubgraphMst::Prim;
  else
    throw momst::ContractError("--sg-solver must be 'kruskal' or 'prim'");
  return cfg;
}

int report(const std::vector<std::string>& errors, const std::string& done_msg) {
  for (const std::string& e : errors) std::cerr << "error: " << e << '\n';
  if (errors.empty()) {
    std::cout << done_msg << '\n';
    return 0;
  }
  std::cerr << errors.size() << " job(s) failed\n";
  return 1;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  std::string out_dir;
  std::string classes;
  std::string sizes;
  int count = 1;
  std::uint64_t seed = 1;
  double target_rho = std::numeric_limits<double>::quiet_NaN();
  int jobs = cli::default_jobs();
};

int cmd_generate(const GenerateArgs& a) {
  const std::vector<std::string> classes = cli::split(a.classes, ',');
  const std::vector<int> sizes = parse_int_list(a.sizes, "size");
  if (a.count < 1) throw momst::ContractError("--count must be >= 1");
  fs::create_directories(a.out_dir);

  struct Job {
    momst::InstanceClass cls;
    int n;
    std::string stem;
  };
  std::vector<Job> jobs;
  for (const std::string& c : classes) {
    const momst::InstanceClass cls = momst::parse_class(c);
    for (int n : sizes)
      for (int idx = 0; idx < a.count; ++idx)
        jobs.push_back({cls, n,
                        std::string(momst::class_name(cls)) + "_" + std::to_string(n) + "_" +
                            std::to_string(idx)});
  }

  const auto errors = cli::run_jobs(a.jobs, static_cast<int>(jobs.size()),
                                    [&](int i) -> std::optional<std::string> {
    const Job& job = jobs[i];
    momst::InstanceSpec spec{job.cls, job.n, momst::mix64(a.seed ^ momst::fnv1a(job.stem)),
                             a.target_rho};
    try {
      const momst::Graph g = momst::generate_instance(spec);
      momst::write_instance(g, fs::path(a.out_dir) / (job.stem + ".momst"));
    } catch (const std::exception& e) {
      return job.stem + ": " + e.what();
    }
    return std::nullopt;
  });
  return report(errors, "generated " + std::to_string(jobs.size()) + " instance(s) in " +
                            a.out_dir);
}

// --------------------------------------------------------------------- run

struct RunArgs {
  std::string out_dir;
  std::vector<std::string> instances;
  std::string ops;
  int reps = 1;
  std::uint64_t seed = 1;
  int mu = 100;
  int budget_mult = 1000;
  long long budget = 0;  // 0 = budget_mult * n
  int sigma = 0;         // 0 = n/2
  int usg_floor = 1;
  std::string sg_solver = "kruskal";
  std::string selection = "uniform";
  std::string snapshots = "0.1,0.5,1.0";
  int jobs = cli::default_jobs();
  bool fresh = false;
};

int cmd_run(const RunArgs& a) {
  const std::vector<std::string> ops = cli::split(a.ops, ',');
  for (const std::string& op : ops) momst::parse_op(op);  // fail fast
  if (a.reps < 1) throw momst::ContractError("--reps must be >= 1");

  std::vector<double> fractions;
  for (const std::string& s : cli::split(a.snapshots, ',')) fractions.push_back(std::stod(s));

  momst::ParentSelection selection;
  if (a.selection == "uniform")
    selection = momst::ParentSelection::UniformRandom;
  else if (a.selection == "tournament")
    selection = momst::ParentSelection::BinaryTournament;
  else
    throw momst::ContractError("--selection must be 'uniform' or 'tournament'");

  const fs::path out(a.out_dir);
  fs::create_directories(out / "fronts");
  fs::create_directories(out / "rows");

  struct Job {
    std::string instance;
    std::string stem;
    std::string op;
    int rep;
  };
  std::vector<Job> jobs;
  for (const std::string& inst : a.instances) {
    const std::string stem = fs::path(inst).stem().string();
    for (const std::string& op : ops)
      for (int rep = 0; rep < a.reps; ++rep) jobs.push_back({inst, stem, op, rep});
  }

  const auto errors = cli::run_jobs(a.jobs, static_cast<int>(jobs.size()),
                                    [&](int i) -> std::optional<std::string> {
    const Job& job = jobs[i];
    const std::string job_name = job.stem + "__" + job.op + "__r" + std::to_string(job.rep);
    const fs::path fragment = out / "rows" / (job_name + ".csv");
    try {
      if (!a.fresh && fs::exists(fragment)) {
        // Resume: trust the fragment only if every front file it lists exists.
        std::ifstream in(fragment);
        std::string line;
        bool complete = true;
        int line_no = 0;
        while (std::getline(in, line)) {
          if (line.empty()) continue;
          const ResultRow row = row_from_csv(line, ++line_no);
          if (!fs::exists(out / row.front_file)) {
            complete = false;
            break;
          }
        }
        if (complete && line_no > 0) return std::nullopt;
      }

      const momst::Graph g = momst::read_instance(job.instance);
      momst::Nsga2Config cfg;
      cfg.mutation = make_mutation_config(job.op, a.sigma, a.usg_floor, a.sg_solver);
      cfg.mu = a.mu;
      cfg.budget = a.budget > 0
                       ? a.budget
                       : static_cast<long long>(a.budget_mult) * g.node_count();
      cfg.selection = selection;
      cfg.snapshot_fractions = fractions;

      const std::uint64_t run_seed = momst::mix64(
          a.seed ^ momst::fnv1a(job.stem + "|" + job.op + "|r" + std::to_string(job.rep)));
      const momst::RunRecord rec = momst::run_nsga2(g, cfg, run_seed, job.instance);

      std::string rows;
      for (const momst::Snapshot& snap : rec.snapshots) {
        const std::string front_name =
            job_name + "__p" + std::to_string(std::llround(snap.fraction * 100)) + ".csv";
        atomic_write(out / "fronts" / front_name, front_to_csv(snap.front));
        ResultRow row{job.instance,
                      rec.op,
                      job.rep,
                      run_seed,
                      snap.fraction,
                      snap.evaluations,
                      static_cast<int>(snap.front.size()),
                      "fronts/" + front_name,
                      rec.wall_seconds};
        rows += row_to_csv(row);
        rows += '\n';
      }
      atomic_write(fragment, rows);
      return std::nullopt;
    } catch (const std::exception& e) {
      std::error_code ec;
      fs::remove(fragment, ec);  // do not leave a half-trusted fragment
      atomic_write(out / "rows" / (job_name + ".err"), std::string(e.what()) + "\n");
      return job_name + ": " + e.what();
    }
  });

  // Assemble results.csv from the fragments of successful jobs, in job order.
  std::string body = std::string(kResultsMagic) + "\n" + kResultsHeader + "\n";
  for (const Job& job : jobs) {
    const std::string job_name = job.stem + "__" + job.op + "__r" + std::to_string(job.rep);
    std::ifstream in(out / "rows" / (job_name + ".csv"));
    if (!in) continue;
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) body += line + "\n";
  }
  atomic_write(out / "results.csv", body);

  return report(errors, "completed " + std::to_string(jobs.size()) + " run(s), results in " +
                            (out / "results.csv").string());
}

// -------------------------------------------------------------------- walk

struct WalkArgs {
  std::string instance;
  std::string op;
  int steps = 1000;
  std::uint64_t seed = 1;
  std::string out_file;
  int sigma = 0;
  int usg_floor = 1;
  std::string sg_solver = "kruskal";
};

int cmd_walk(const WalkArgs& a) {
  const momst::Graph g = momst::read_instance(a.instance);
  const momst::MutationConfig cfg =
      make_mutation_config(a.op, a.sigma, a.usg_floor, a.sg_solver);
  const auto trail = momst::random_walk(g, cfg, a.steps, a.seed);
  std::string body = "# momst-walk v1\nstep,c1,c2\n";
  for (std::size_t i = 0; i < trail.size(); ++i)
    body += std::to_string(i) + "," + fmt_double(trail[i].c1) + "," +
            fmt_double(trail[i].c2) + "\n";
  atomic_write(a.out_file, body);
  std::cout << "walk of " << a.steps << " step(s) written to " << a.out_file << '\n';
  return 0;
}

// ----------------------------------------------------------------- analyze

struct AnalyzeArgs {
  std::string instance;
  std::string out_dir;
  int sweep = 5000;
  std::string prefix;
};

int cmd_analyze(const AnalyzeArgs& a) {
  const momst::Graph g = momst::read_instance(a.instance);
  fs::create_directories(a.out_dir);
  const momst::ParetoArchive archive = momst::weighted_sum_sweep(g, a.sweep);
  const fs::path out(a.out_dir);

  atomic_write(out / (a.prefix + "front.csv"), front_to_csv(archive.cost_points()));

  // Solution-solution edge overlap, rows/columns ordered by ascending cost.
  const std::vector<int> order = archive.sorted_order();
  std::string nnce_body = "# momst-nnce v1\n";
  for (int i : order) {
    std::string line;
    for (int j : order) {
      if (!line.empty()) line += ',';
      line += fmt_double(
          momst::nnce(archive.entries()[i].tree, archive.entries()[j].tree));
    }
    nnce_body += line + "\n";
  }
  atomic_write(out / (a.prefix + "nnce.csv"), nnce_body);

  const std::vector<double> freq = momst::edge_frequency(archive);
  std::string freq_body = "# momst-edgefreq v1\nu,v,frequency\n";
  for (int ei = 0; ei < g.edge_count(); ++ei) {
    const momst::Edge& e = g.edge(ei);
    freq_body += std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + "," +
                 fmt_double(freq[ei]) + "\n";
  }
  atomic_write(out / (a.prefix + "edge_frequency.csv"), freq_body);

  std::cout << "analysis for " << a.instance << " written to " << a.out_dir << " ("
            << archive.size() << " archive entries)\n";
  return 0;
}

// -------------------------------------------------------------------- eval

struct EvalArgs {
  std::string results_dir;
  std::string out_dir;  // empty = results_dir
  int sweep = 50000;
  bool no_sweep = false;
  double p = 2.0;
  int jobs = cli::default_jobs();
};

std::string class_of(const std::string& instance_path) {
  const std::string stem = fs::path(instance_path).stem().string();
  const auto cut = stem.find('_');
  const std::string head = cut == std::string::npos ? stem : stem.substr(0, cut);
  try {
    momst::parse_class(head);
    return head;
  } catch (const momst::ContractError&) {
    return "NA";
  }
}

int cmd_eval(const EvalArgs& a) {
  const fs::path results_dir(a.results_dir);
  const fs::path out_dir(a.out_dir.empty() ? a.results_dir : a.out_dir);
  fs::create_directories(out_dir);

  std::vector<ResultRow> rows;
  {
    std::ifstream in(results_dir / "results.csv");
    if (!in)
      throw std::runtime_error("cannot open " + (results_dir / "results.csv").string());
    std::string line;
    int line_no = 0;
    if (!std::getline(in, line) || line != kResultsMagic)
      throw momst::ParseError("expected '" + std::string(kResultsMagic) + "'", 1);
    ++line_no;
    if (!std::getline(in, line) || line != kResultsHeader)
      throw momst::ParseError("unexpected results header", 2);
    ++line_no;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      rows.push_back(row_from_csv(line, line_no));
    }
  }
  if (rows.empty()) throw std::runtime_error("results.csv contains no rows");

  // Group rows by instance, keeping first-appearance order.
  std::vector<std::string> instances;
  std::map<std::string, std::vector<int>> by_instance;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto [it, inserted] = by_instance.try_emplace(rows[i].instance);
    if (inserted) instances.push_back(rows[i].instance);
    it->second.push_back(static_cast<int>(i));
  }

  struct Indicators {
    double hv = 0, eps = 0, dp = 0;
  };
  std::vector<Indicators> values(rows.size());

  const auto errors = cli::run_jobs(a.jobs, static_cast<int>(instances.size()),
                                    [&](int k) -> std::optional<std::string> {
    const std::string& inst = instances[k];
    try {
      // Reference front: supported solutions from a dense weighted-sum
      // sweep, merged with every approximation this results set holds.
      std::vector<momst::CostVector> ref_pts;
      if (!a.no_sweep) {
        const momst::Graph g = momst::read_instance(inst);
        const momst::ParetoArchive sweep = momst::weighted_sum_sweep(g, a.sweep);
        ref_pts = sweep.cost_points();
      }
      std::vector<std::vector<momst::CostVector>> fronts;
      for (int ri : by_instance[inst]) {
        fronts.push_back(front_from_file(results_dir / rows[ri].front_file));
        ref_pts.insert(ref_pts.end(), fronts.back().begin(), fronts.back().end());
      }
      const momst::ReferenceSet ref = momst::ReferenceSet::build(ref_pts);
      std::size_t fi = 0;
      for (int ri : by_instance[inst]) {
        const auto& front = fronts[fi++];
        values[ri] = {momst::hypervolume_indicator(front, ref),
                      momst::epsilon_indicator(front, ref),
                      momst::delta_p(front, ref, a.p)};
      }
      return std::nullopt;
    } catch (const std::exception& e) {
      return inst + ": " + e.what();
    }
  });
  if (!errors.empty()) return report(errors, "");

  std::string body = "# momst-indicators v1\ninstance,op,rep,seed,fraction,hv,eps,delta_p\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ResultRow& r = rows[i];
    body += r.instance + "," + r.op + "," + std::to_string(r.rep) + "," +
            std::to_string(r.seed) + "," + fmt_double(r.fraction) + "," +
            fmt_double(values[i].hv) + "," + fmt_double(values[i].eps) + "," +
            fmt_double(values[i].dp) + "\n";
  }
  atomic_write(out_dir / "indicators.csv", body);

  // Mean ranks: within each (instance, rep, fraction, indicator) rank the
  // operators by value ascending (fractional ranks for ties), then average
  // per class over instances and repetitions.
  struct Key {
    std::string cls;
    double fraction;
    std::string indicator;
    std::string op;
    auto operator<=>(const Key&) const = default;
  };
  std::map<Key, std::pair<double, int>> rank_acc;  // sum, count
  std::map<std::tuple<std::string, int, double>, std::vector<int>> groups;
  for (std::size_t i = 0; i < rows.size(); ++i)
    groups[{rows[i].instance, rows[i].rep, rows[i].fraction}].push_back(static_cast<int>(i));

  const char* indicator_names[3] = {"hv", "eps", "delta_p"};
  for (const auto& [key, members] : groups) {
    const std::string cls = class_of(std::get<0>(key));
    for (int ind = 0; ind < 3; ++ind) {
      auto value_of = [&](int ri) {
        return ind == 0 ? values[ri].hv : ind == 1 ? values[ri].eps : values[ri].dp;
      };
      std::vector<int> order(members);
      std::stable_sort(order.begin(), order.end(),
                       [&](int x, int y) { return value_of(x) < value_of(y); });
      // Fractional (average) ranks over ties.
      std::size_t i = 0;
      while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && value_of(order[j + 1]) == value_of(order[i])) ++j;
        const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) {
          auto& acc = rank_acc[{cls, std::get<2>(key), indicator_names[ind],
                                rows[order[k]].op}];
          acc.first += rank;
          acc.second += 1;
        }
        i = j + 1;
      }
    }
  }

  std::string ranks = "# momst-ranks v1\nclass,fraction,indicator,op,mean_rank\n";
  for (const auto& [key, acc] : rank_acc)
    ranks += key.cls + "," + fmt_double(key.fraction) + "," + key.indicator + "," + key.op +
             "," + fmt_double(acc.first / acc.second) + "\n";
  atomic_write(out_dir / "ranks.csv", ranks);

  std::cout << "indicators for " << rows.size() << " row(s) written to " << out_dir.string()
            << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bi-objective minimum spanning tree toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* cgen = app.add_subcommand("generate", "generate benchmark instances");
  cgen->add_option("--out", gen.out_dir, "output directory")->required();
  cgen->add_option("--classes", gen.classes, "comma list of classes (C1,C2,C3,C4)")->required();
  cgen->add_option("--sizes", gen.sizes, "comma list of node counts")->required();
  cgen->add_option("--count", gen.count, "instances per (class, size)");
  cgen->add_option("--seed", gen.seed, "master seed");
  cgen->add_option("--target-rho", gen.target_rho, "correlation target (C3/C4)");
  cgen->add_option("--jobs", gen.jobs, "parallel jobs");

  RunArgs run;
  auto* crun = app.add_subcommand("run", "run the evolutionary algorithm");
  crun->add_option("--out", run.out_dir, "output directory")->required();
  crun->add_option("--instances", run.instances, "instance files")->required()->expected(-1);
  crun->add_option("--ops", run.ops, "comma list of mutation operators")->required();
  crun->add_option("--reps", run.reps, "repetitions per (instance, operator)");
  crun->add_option("--seed", run.seed, "master seed");
  crun->add_option("--mu", run.mu, "population size");
  crun->add_option("--budget-mult", run.budget_mult, "evaluation budget = mult * n");
  crun->add_option("--budget", run.budget, "absolute evaluation budget (overrides mult)");
  crun->add_option("--sigma", run.sigma, "sub-graph size bound (0 = n/2)");
  crun->add_option("--usg-floor", run.usg_floor, "smallest USG drop count (1 or 3)");
  crun->add_option("--sg-solver", run.sg_solver, "SG/SGS inner MST solver (kruskal|prim)");
  crun->add_option("--selection", run.selection, "parent selection (uniform|tournament)");
  crun->add_option("--snapshots", run.snapshots, "comma list of budget fractions");
  crun->add_option("--jobs", run.jobs, "parallel jobs");
  crun->add_flag("--fresh", run.fresh, "ignore existing per-job fragments");

  WalkArgs walk;
  auto* cwalk = app.add_subcommand("walk", "record a mutation random walk");
  cwalk->add_option("--instance", walk.instance, "instance file")->required();
  cwalk->add_option("--op", walk.op, "mutation operator")->required();
  cwalk->add_option("--steps", walk.steps, "number of mutations");
  cwalk->add_option("--seed", walk.seed, "seed");
  cwalk->add_option("--out", walk.out_file, "output CSV")->required();
  cwalk->add_option("--sigma", walk.sigma, "sub-graph size bound (0 = n/2)");
  cwalk->add_option("--usg-floor", walk.usg_floor, "smallest USG drop count (1 or 3)");
  cwalk->add_option("--sg-solver", walk.sg_solver, "SG/SGS inner MST solver");

  AnalyzeArgs ana;
  auto* cana = app.add_subcommand("analyze", "sweep an instance and report front structure");
  cana->add_option("--instance", ana.instance, "instance file")->required();
  cana->add_option("--out", ana.out_dir, "output directory")->required();
  cana->add_option("--sweep", ana.sweep, "number of scalarization weights");
  cana->add_option("--prefix", ana.prefix, "output filename prefix");

  EvalArgs ev;
  auto* ceval = app.add_subcommand("eval", "compute indicators and ranks for run results");
  ceval->add_option("--results", ev.results_dir, "directory holding results.csv")->required();
  ceval->add_option("--out", ev.out_dir, "output directory (default: results dir)");
  ceval->add_option("--sweep", ev.sweep, "reference sweep size");
  ceval->add_flag("--no-sweep", ev.no_sweep, "reference = union of run fronts only");
  ceval->add_option("--p", ev.p, "delta_p exponent");
  ceval->add_option("--jobs", ev.jobs, "parallel jobs");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(cgen)) return cmd_generate(gen);
    if (app.got_subcommand(crun)) return cmd_run(run);
    if (app.got_subcommand(cwalk)) return cmd_walk(walk);
    if (app.got_subcommand(cana)) return cmd_analyze(ana);
    if (app.got_subcommand(ceval)) return cmd_eval(ev);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
