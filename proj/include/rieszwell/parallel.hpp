#pragma once

#include <cstddef>

namespace rieszwell {

// Grid kernels run either on the OpenMP team or on the calling thread. The
// serial path is the reference the parallel one is tested against; both
// write results by grid index, so their output is identical.
enum class Execution { serial, parallel };

template <typename Body>
void for_each_index(std::size_t n, Execution exec, Body&& body) {
  const auto count = static_cast<long long>(n);
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
  } else {
    for (long long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
  }
}

}  // namespace rieszwell
