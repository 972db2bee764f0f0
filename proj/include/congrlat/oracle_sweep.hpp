#pragma once

#include <cstdint>
#include <vector>

namespace congrlat::oracle_detail {

// Per-row state for an innermost sweep: with the other variables fixed, the
// row residue at candidate x is (prefix + coeff * x) % modulus and the row
// matches when it equals target. All values are reduced, 0 <= v < modulus,
// and modulus <= 1e9 so products never overflow int64.
struct SweepRow {
  std::int64_t prefix = 0;
  std::int64_t coeff = 0;
  std::int64_t modulus = 1;
  std::int64_t target = 0;
};

using SweepFn = void (*)(const std::vector<SweepRow>& rows, std::int64_t len,
                         std::vector<std::int64_t>& out);

// Reference kernel: direct remainder per candidate, ascending order.
void sweep_scalar(const std::vector<SweepRow>& rows, std::int64_t len,
                  std::vector<std::int64_t>& out);

#if defined(CONGRLAT_HAVE_AVX2)
// Four candidates per step via strided residue updates; identical output to
// sweep_scalar.
void sweep_avx2(const std::vector<SweepRow>& rows, std::int64_t len,
                std::vector<std::int64_t>& out);
bool cpu_has_avx2();
#endif

// Best kernel the running CPU supports.
SweepFn active_sweep();

}  // namespace congrlat::oracle_detail
