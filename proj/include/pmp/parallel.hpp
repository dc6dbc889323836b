#ifndef PMP_PARALLEL_HPP
#define PMP_PARALLEL_HPP

#include <cstddef>

namespace pmp::exec {

// Runtime switch between the serial reference path and the OpenMP candidate
// loops (moment batches, factor scans). Candidates are independent and the
// arithmetic is exact, so both paths produce identical values; the serial
// path stays in place as the reference the tests compare against.
bool parallel_enabled();
void set_parallel_enabled(bool on);
int max_threads();

// Candidate count below which the parallel path is not worth entering.
inline constexpr std::size_t kLoopCutoff = 8;

}  // namespace pmp::exec

#endif
