// AVX2 variants. This translation unit is compiled with -mavx2; nothing in
// it may run before avx2_supported() has been checked.

#include "mdt/kernels.hpp"

#include <immintrin.h>

namespace mdt::kernels {
namespace {

void incidence_sums_avx2(std::span<const std::int64_t> table, int d, int n,
                         std::span<std::int64_t> out) {
    std::size_t block = 1;
    out[0] = 0;
    for (int k = d - 1; k >= 0; --k) {
        const std::int64_t* row = table.data() + static_cast<std::size_t>(k) * n;
        for (int j = n - 1; j >= 0; --j) {
            std::int64_t* dst = out.data() + static_cast<std::size_t>(j) * block;
            const __m256i shift = _mm256_set1_epi64x(row[j]);
            std::size_t b = 0;
            for (; b + 4 <= block; b += 4) {
                const __m256i src =
                    _mm256_loadu_si256(reinterpret_cast<const __m256i*>(out.data() + b));
                _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + b),
                                    _mm256_add_epi64(src, shift));
            }
            for (; b < block; ++b) dst[b] = out[b] + row[j];
        }
        block *= static_cast<std::size_t>(n);
    }
}

void threshold_bits_avx2(std::span<const std::int64_t> values, std::int64_t threshold,
                         std::span<std::uint8_t> out) {
    // values >= t  <=>  values > t - 1; t - 1 cannot underflow for t > INT64_MIN.
    const __m256i bound = _mm256_set1_epi64x(threshold - 1);
    std::size_t k = 0;
    const std::size_t size = values.size();
    for (; k + 4 <= size; k += 4) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values.data() + k));
        const int mask = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpgt_epi64(v, bound)));
        out[k] = mask & 1;
        out[k + 1] = (mask >> 1) & 1;
        out[k + 2] = (mask >> 2) & 1;
        out[k + 3] = (mask >> 3) & 1;
    }
    for (; k < size; ++k) out[k] = values[k] >= threshold ? 1 : 0;
}

std::size_t horizontal_sum(__m256i acc) {
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

std::size_t count_ones_avx2(std::span<const std::uint8_t> bits) {
    const __m256i zero = _mm256_setzero_si256();
    __m256i acc = zero;
    std::size_t k = 0;
    const std::size_t size = bits.size();
    for (; k + 32 <= size; k += 32) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bits.data() + k));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(v, zero));
    }
    std::size_t total = horizontal_sum(acc);
    for (; k < size; ++k) total += bits[k];
    return total;
}

// Reverses the 32 bytes of a register.
inline __m256i reverse_bytes(__m256i v) {
    const __m256i in_lane = _mm256_setr_epi8(15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
                                             15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0);
    return _mm256_permute2x128_si256(_mm256_shuffle_epi8(v, in_lane),
                                     _mm256_shuffle_epi8(v, in_lane), 0x01);
}

template <typename Combine, typename Tail>
std::size_t antipodal_reduce(std::span<const std::uint8_t> bits, Combine combine, Tail tail) {
    const std::size_t size = bits.size();
    const __m256i zero = _mm256_setzero_si256();
    __m256i acc = zero;
    std::size_t k = 0;
    for (; k + 32 <= size; k += 32) {
        const __m256i front = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bits.data() + k));
        const __m256i back = reverse_bytes(
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bits.data() + size - k - 32)));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(combine(front, back), zero));
    }
    std::size_t total = horizontal_sum(acc);
    for (; k < size; ++k) total += tail(bits[k], bits[size - 1 - k]);
    return total;
}

std::size_t antipodal_defects_avx2(std::span<const std::uint8_t> bits) {
    const __m256i one = _mm256_set1_epi8(1);
    return antipodal_reduce(
        bits,
        [one](__m256i a, __m256i b) {
            // 1 where a + b != 1
            const __m256i eq = _mm256_cmpeq_epi8(_mm256_add_epi8(a, b), one);
            return _mm256_andnot_si256(eq, one);
        },
        [](std::uint8_t a, std::uint8_t b) -> std::size_t { return (a + b) != 1; });
}

std::size_t antipodal_collisions_avx2(std::span<const std::uint8_t> bits) {
    return antipodal_reduce(
        bits, [](__m256i a, __m256i b) { return _mm256_and_si256(a, b); },
        [](std::uint8_t a, std::uint8_t b) -> std::size_t { return a & b; });
}

}  // namespace

const KernelTable& avx2_kernels() {
    static const KernelTable table{
        incidence_sums_avx2,   threshold_bits_avx2,       count_ones_avx2,
        antipodal_defects_avx2, antipodal_collisions_avx2,
    };
    return table;
}

}  // namespace mdt::kernels
