#include "nlft/parallel.hpp"

namespace nlft {

namespace {

std::atomic<unsigned> g_thread_limit{0};

}  // namespace

void set_thread_limit(unsigned n) { g_thread_limit.store(n); }

unsigned thread_limit()
{
  const unsigned cap = g_thread_limit.load();
  if (cap != 0) return cap;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace nlft
