#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace linecut::detail {

/// Worker count from LINECUT_THREADS; 0, absent or unparsable means
/// hardware concurrency.
inline unsigned threads_from_env() {
  unsigned requested = 0;
  if (const char* env = std::getenv("LINECUT_THREADS")) {
    try {
      requested = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      requested = 0;
    }
  }
  if (requested == 0) requested = std::max(1u, std::thread::hardware_concurrency());
  return requested;
}

/// Runs body(lo, hi) over contiguous chunks of [begin, end). Chunk boundaries
/// depend only on the range and the worker count, never on timing.
template <class Body>
void parallel_chunks(std::size_t begin, std::size_t end, unsigned workers, Body&& body) {
  const std::size_t total = end > begin ? end - begin : 0;
  if (total == 0) return;
  const std::size_t parts = std::min<std::size_t>(std::max(1u, workers), total);
  if (parts == 1) {
    body(begin, end);
    return;
  }
  std::vector<std::exception_ptr> errors(parts);
  std::vector<std::thread> pool;
  pool.reserve(parts - 1);
  auto run = [&](std::size_t part) {
    const std::size_t lo = begin + total * part / parts;
    const std::size_t hi = begin + total * (part + 1) / parts;
    try {
      body(lo, hi);
    } catch (...) {
      errors[part] = std::current_exception();
    }
  };
  for (std::size_t part = 1; part < parts; ++part) pool.emplace_back(run, part);
  run(0);
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace linecut::detail
