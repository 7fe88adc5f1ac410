#include "nlft/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

#include "nlft/field.hpp"

namespace nlft::fft {

namespace {

std::mutex& planner_mutex()
{
  static std::mutex m;
  return m;
}

// Rank (1 = rows, 2 = square), size, batch count, direction.
using PlanKey = std::tuple<int, std::size_t, std::size_t, int>;

struct PlanCache {
  std::map<PlanKey, fftw_plan> plans;

  ~PlanCache()
  {
    std::lock_guard lock(planner_mutex());
    for (auto& [key, plan] : plans) fftw_destroy_plan(plan);
  }

  fftw_plan get(int rank, std::size_t N, std::size_t count, Direction dir)
  {
    const PlanKey key{rank, N, count, static_cast<int>(dir)};
    if (auto it = plans.find(key); it != plans.end()) return it->second;
    // FFTW_ESTIMATE keeps plan choice, and hence rounding, reproducible run to run.
    const std::size_t total = rank == 2 ? N * N : N * count;
    CVector scratch(total);
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan = nullptr;
    {
      std::lock_guard lock(planner_mutex());
      const int sign = dir == Direction::forward ? FFTW_FORWARD : FFTW_BACKWARD;
      if (rank == 2) {
        plan = fftw_plan_dft_2d(static_cast<int>(N), static_cast<int>(N), buf, buf, sign,
                                FFTW_ESTIMATE);
      } else {
        const int len = static_cast<int>(N);
        plan = fftw_plan_many_dft(1, &len, static_cast<int>(count), buf, nullptr, 1, len, buf,
                                  nullptr, 1, len, sign, FFTW_ESTIMATE);
      }
    }
    plans.emplace(key, plan);
    return plan;
  }
};

PlanCache& cache()
{
  thread_local PlanCache c;
  return c;
}

}  // namespace

void transform2d(cplx* data, std::size_t N, Direction dir)
{
  auto* p = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(cache().get(2, N, 1, dir), p, p);
}

void transform_rows(cplx* data, std::size_t N, std::size_t count, Direction dir)
{
  auto* p = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(cache().get(1, N, count, dir), p, p);
}

std::size_t good_size(std::size_t at_least)
{
  for (std::size_t n = std::max<std::size_t>(at_least, 2);; ++n) {
    if (n % 2 != 0) continue;
    std::size_t r = n;
    for (std::size_t f : {2u, 3u, 5u, 7u})
      while (r % f == 0) r /= f;
    if (r == 1) return n;
  }
}

}  // namespace nlft::fft
