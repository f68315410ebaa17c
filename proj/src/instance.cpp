#include "momst/instance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "momst/errors.hpp"
#include "momst/rng.hpp"

namespace momst {

std::string_view class_name(InstanceClass c) {
  switch (c) {
    case InstanceClass::C1: return "C1";
    case InstanceClass::C2: return "C2";
    case InstanceClass::C3: return "C3";
    case InstanceClass::C4: return "C4";
  }
  throw ContractError("class_name: bad enum value");
}

InstanceClass parse_class(std::string_view name) {
  if (name == "C1") return InstanceClass::C1;
  if (name == "C2") return InstanceClass::C2;
  if (name == "C3") return InstanceClass::C3;
  if (name == "C4") return InstanceClass::C4;
  throw ContractError("unknown instance class: " + std::string(name));
}

namespace {

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t m = x.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < m; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= m;
  my /= m;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;  // degenerate marginal
  return sxy / std::sqrt(sxx * syy);
}

// Random planar points whose pairwise distances, rounded to integers, are
// all positive; coincident draws are replaced until that holds.
std::vector<std::pair<double, double>> euclidean_points(int n, Rng& rng) {
  std::vector<std::pair<double, double>> pts(n);
  for (auto& p : pts) {
    p.first = rng.uniform(0.0, 100.0);
    p.second = rng.uniform(0.0, 100.0);
  }
  auto rounded_dist = [&](int i, int j) {
    const double dx = pts[i].first - pts[j].first;
    const double dy = pts[i].second - pts[j].second;
    return std::round(std::sqrt(dx * dx + dy * dy));
  };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    int bad = -1;
    for (int i = 0; i < n && bad < 0; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rounded_dist(i, j) == 0.0) {
          bad = j;
          break;
        }
    if (bad < 0) return pts;
    pts[bad].first = rng.uniform(0.0, 100.0);
    pts[bad].second = rng.uniform(0.0, 100.0);
  }
  throw GenerationError("euclidean_points: could not separate coincident points", 0.0);
}

// c1 over edges in canonical order (u ascending, then v).
std::vector<double> euclidean_c1(int n, Rng& rng) {
  auto pts = euclidean_points(n, rng);
  std::vector<double> c1;
  c1.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const double dx = pts[u].first - pts[v].first;
      const double dy = pts[u].second - pts[v].second;
      c1.push_back(std::round(std::sqrt(dx * dx + dy * dy)));
    }
  return c1;
}

Graph assemble_complete(int n, const std::vector<double>& c1, const std::vector<double>& c2) {
  Graph g(n, true);
  std::size_t k = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++k) g.add_edge(u, v, {c1[k], c2[k]});
  g.check_invariants();
  return g;
}

Graph generate_c1(int n, std::uint64_t seed) {
  Rng rng = derive_rng(seed, "gen/C1/" + std::to_string(n));
  Graph g(n, true);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const double a = rng.uniform(10.0, 100.0);
      const double b = rng.uniform(10.0, 50.0);
      g.add_edge(u, v, {a, b});
    }
  g.check_invariants();
  return g;
}

Graph generate_c2(int n, std::uint64_t seed) {
  Rng rng = derive_rng(seed, "gen/C2/" + std::to_string(n));
  std::vector<double> c1 = euclidean_c1(n, rng);
  const double M = *std::max_element(c1.begin(), c1.end());
  // Place c2 on the quarter circle of radius M, jittered upward: the
  // resulting trade-off curve is concave, so most optima are unsupported.
  std::vector<double> c2(c1.size());
  for (std::size_t i = 0; i < c1.size(); ++i) {
    const double circle = std::round(std::sqrt(std::max(0.0, M * M - c1[i] * c1[i])));
    c2[i] = std::max(1.0, circle + rng.uniform(0.0, 5.0));
  }
  return assemble_complete(n, c1, c2);
}

// C3/C4: c2 = clamp(round(base +- N(0, s))), with s calibrated by bisection
// until the empirical correlation lands within the tolerance band. Noise is
// redrawn each iteration from a derived sub-stream, so the search explores
// (scale, realization) pairs and the emitted instance always satisfies the
// band by construction.
Graph generate_correlated(InstanceClass cls, int n, std::uint64_t seed, double target) {
  constexpr double kTol = 0.03;
  const std::string tag = std::string("gen/") + std::string(class_name(cls)) + "/" +
                          std::to_string(n);
  Rng rng = derive_rng(seed, tag);
  std::vector<double> c1 = euclidean_c1(n, rng);

  const double lo_c1 = *std::min_element(c1.begin(), c1.end());
  const double hi_c1 = *std::max_element(c1.begin(), c1.end());
  std::vector<double> base(c1.size());
  for (std::size_t i = 0; i < c1.size(); ++i)
    base[i] = (cls == InstanceClass::C3) ? lo_c1 + hi_c1 - c1[i] : c1[i];

  double mean = 0, var = 0;
  for (double x : c1) mean += x;
  mean /= static_cast<double>(c1.size());
  for (double x : c1) var += (x - mean) * (x - mean);
  var /= static_cast<double>(c1.size());
  const double sd_c1 = std::sqrt(var);

  std::vector<double> c2(c1.size());
  auto realize = [&](double s, Rng& noise) {
    for (std::size_t i = 0; i < c2.size(); ++i)
      c2[i] = std::max(1.0, std::round(base[i] + noise.normal(0.0, s)));
    return pearson(c1, c2);
  };

  double best = 2.0;  // farthest-possible sentinel
  for (int round = 0; round < 3; ++round) {
    // At s = 0 the correlation is exactly +-1; widen hi per round in case
    // the band was stepped over.
    double lo = 0.0, hi = sd_c1 * (round + 1);
    for (int iter = 0; iter < 20; ++iter) {
      const double mid = 0.5 * (lo + hi);
      Rng noise = derive_rng(seed, tag + "/noise/" + std::to_string(round) + "/" +
                                       std::to_string(iter));
      const double rho = realize(mid, noise);
      if (std::abs(rho - target) <= kTol) return assemble_complete(n, c1, c2);
      if (std::abs(rho - target) < std::abs(best - target)) best = rho;
      // More noise always pulls rho towards 0.
      const bool need_more_noise =
          (cls == InstanceClass::C3) ? (rho < target) : (rho > target);
      if (need_more_noise)
        lo = mid;
      else
        hi = mid;
    }
  }
  throw GenerationError(std::string("generate_instance: correlation calibration failed for ") +
                            std::string(class_name(cls)) + ", n=" + std::to_string(n),
                        best);
}

}  // namespace

Graph generate_instance(const InstanceSpec& spec) {
  if (spec.n < 3) throw ContractError("generate_instance: need n >= 3");
  double target = spec.target_rho;
  switch (spec.cls) {
    case InstanceClass::C1:
      return generate_c1(spec.n, spec.seed);
    case InstanceClass::C2:
      return generate_c2(spec.n, spec.seed);
    case InstanceClass::C3:
      if (std::isnan(target)) target = -0.95;
      if (!(target > -1.0 && target < 0.0))
        throw ContractError("generate_instance: C3 target correlation must lie in (-1, 0)");
      return generate_correlated(spec.cls, spec.n, spec.seed, target);
    case InstanceClass::C4:
      if (std::isnan(target)) target = 0.95;
      if (!(target > 0.0 && target < 1.0))
        throw ContractError("generate_instance: C4 target correlation must lie in (0, 1)");
      return generate_correlated(spec.cls, spec.n, spec.seed, target);
  }
  throw ContractError("generate_instance: bad class enum");
}

double cost_correlation(const Graph& g) {
  std::vector<double> x, y;
  x.reserve(g.edge_count());
  y.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    x.push_back(e.cost.c1);
    y.push_back(e.cost.c2);
  }
  return pearson(x, y);
}

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_instance(const Graph& g, const std::filesystem::path& path) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("write_instance: cannot open " + tmp.string());
    out << "momst 1\n";
    out << g.node_count() << ' ' << g.edge_count() << " 2 "
        << (g.is_complete() ? "complete" : "general") << '\n';
    for (const Edge& e : g.edges())
      out << (e.u + 1) << ' ' << (e.v + 1) << ' ' << fmt_double(e.cost.c1) << ' '
          << fmt_double(e.cost.c2) << '\n';
    if (!out) throw std::runtime_error("write_instance: write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

Graph read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_instance: cannot open " + path.string());

  int line_no = 0;
  std::string line;
  auto next_line = [&]() {
    if (!std::getline(in, line)) throw ParseError("unexpected end of file", line_no + 1);
    ++line_no;
  };

  next_line();
  {
    std::istringstream ss(line);
    std::string magic;
    int version = 0;
    if (!(ss >> magic >> version) || magic != "momst" || version != 1)
      throw ParseError("expected header 'momst 1'", line_no);
  }

  next_line();
  int n = 0, m = 0, q = 0;
  std::string kind;
  {
    std::istringstream ss(line);
    if (!(ss >> n >> m >> q >> kind)) throw ParseError("malformed size line", line_no);
    if (n < 1) throw ParseError("node count must be >= 1", line_no);
    if (m < 0) throw ParseError("edge count must be >= 0", line_no);
    if (q != 2) throw ParseError("expected 2 objectives", line_no);
    if (kind != "complete" && kind != "general")
      throw ParseError("graph kind must be 'complete' or 'general'", line_no);
    if (kind == "complete" && static_cast<long long>(m) != static_cast<long long>(n) * (n - 1) / 2)
      throw ParseError("complete graph needs m = n(n-1)/2", line_no);
  }

  Graph g(n, kind == "complete");
  std::set<std::pair<int, int>> seen;
  for (int i = 0; i < m; ++i) {
    next_line();
    std::istringstream ss(line);
    int u = 0, v = 0;
    double a = 0, b = 0;
    if (!(ss >> u >> v >> a >> b)) throw ParseError("malformed edge line", line_no);
    if (u < 1 || u > n || v < 1 || v > n) throw ParseError("node id out of range", line_no);
    if (u == v) throw ParseError("self-loop", line_no);
    if (!(a > 0.0) || !(b > 0.0)) throw ParseError("costs must be positive", line_no);
    if (!seen.insert({std::min(u, v) - 1, std::max(u, v) - 1}).second)
      throw ParseError("duplicate edge", line_no);
    g.add_edge(u - 1, v - 1, {a, b});
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string::npos)
      throw ParseError("trailing content after edge list", line_no);
  }
  g.check_invariants();
  return g;
}

}  // namespace momst
