#include "congrlat/oracle_sweep.hpp"

#if defined(CONGRLAT_HAVE_AVX2)

#include <immintrin.h>

namespace congrlat::oracle_detail {

bool cpu_has_avx2() { return __builtin_cpu_supports("avx2") != 0; }

namespace {

// Residue tracking for one row across four consecutive candidates. The step
// adds (4*coeff) % m to every lane; lanes stay in [0, m) via one conditional
// subtract because the increment is already reduced.
struct LaneRow {
  __m256i residues;
  __m256i step;
  __m256i modulus;
  __m256i target;
};

inline __m256i reduce_once(__m256i v, __m256i m) {
  __m256i keep = _mm256_cmpgt_epi64(m, v);  // v < m ?
  return _mm256_sub_epi64(v, _mm256_andnot_si256(keep, m));
}

}  // namespace

void sweep_avx2(const std::vector<SweepRow>& rows, std::int64_t len,
                std::vector<std::int64_t>& out) {
  const std::int64_t blocks = len / 4;
  std::vector<LaneRow> lanes(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SweepRow& r = rows[i];
    alignas(32) std::int64_t init[4];
    for (int j = 0; j < 4; ++j)
      init[j] = (r.prefix + r.coeff * j) % r.modulus;
    lanes[i].residues = _mm256_load_si256(reinterpret_cast<__m256i*>(init));
    lanes[i].step = _mm256_set1_epi64x((4 * r.coeff) % r.modulus);
    lanes[i].modulus = _mm256_set1_epi64x(r.modulus);
    lanes[i].target = _mm256_set1_epi64x(r.target);
  }

  for (std::int64_t b = 0; b < blocks; ++b) {
    __m256i hit = _mm256_set1_epi64x(-1);
    for (LaneRow& lane : lanes) {
      hit = _mm256_and_si256(hit,
                             _mm256_cmpeq_epi64(lane.residues, lane.target));
      lane.residues = reduce_once(_mm256_add_epi64(lane.residues, lane.step),
                                  lane.modulus);
    }
    int mask = _mm256_movemask_pd(_mm256_castsi256_pd(hit));
    if (mask) {
      std::int64_t base = b * 4;
      for (int j = 0; j < 4; ++j) {
        if (mask & (1 << j)) out.push_back(base + j);
      }
    }
  }

  // Remainder candidates via the reference arithmetic.
  for (std::int64_t x = blocks * 4; x < len; ++x) {
    bool hit = true;
    for (const SweepRow& r : rows) {
      if ((r.prefix + r.coeff * x) % r.modulus != r.target) {
        hit = false;
        break;
      }
    }
    if (hit) out.push_back(x);
  }
}

}  // namespace congrlat::oracle_detail

#endif  // CONGRLAT_HAVE_AVX2
