#pragma once

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace cli {

inline std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Temp file + rename, so readers never observe a half-written file and an
// interrupted run leaves no corrupt outputs behind.
inline void atomic_write(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << content;
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(s);
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

// Runs `count` independent jobs on up to `jobs` threads. Each job returns
// nullopt on success or an error message. Error order is by job index, so
// output is scheduling-independent.
inline std::vector<std::string> run_jobs(
    int jobs, int count, const std::function<std::optional<std::string>(int)>& work) {
  std::vector<std::optional<std::string>> slots(count);
  auto guarded = [&](int i) {
    try {
      slots[i] = work(i);
    } catch (const std::exception& e) {
      slots[i] = std::string(e.what());
    }
  };
  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) guarded(i);
  } else {
    std::atomic<int> next{0};
    auto worker = [&]() {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= count) return;
        guarded(i);
      }
    };
    std::vector<std::thread> pool;
    const int n_threads = std::min(jobs, count);
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<std::string> errors;
  for (int i = 0; i < count; ++i)
    if (slots[i]) errors.push_back("job " + std::to_string(i) + ": " + *slots[i]);
  return errors;
}

inline int default_jobs() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace cli
