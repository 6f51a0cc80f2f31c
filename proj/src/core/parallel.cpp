#include "core/parallel.hpp"

#include <algorithm>

namespace sekwl {

namespace {
std::atomic<std::size_t> g_threads{0};
}

void set_thread_count(std::size_t threads) { g_threads.store(threads); }

std::size_t thread_count() {
  auto t = g_threads.load();
  if (t == 0) t = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  return t;
}

}  // namespace sekwl
