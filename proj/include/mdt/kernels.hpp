#pragma once

// Data-parallel inner loops over dense (0,1)-matrices. Every kernel has a
// portable scalar reference and an AVX2 variant; the variant is chosen once
// at runtime from CPUID and can be overridden for equivalence testing.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace mdt::kernels {

enum class Backend { scalar, avx2 };

struct KernelTable {
    // out[alpha] = sum_i table[i*n + alpha_i] for all n^d indices,
    // lexicographic order with the last coordinate fastest.
    void (*incidence_sums)(std::span<const std::int64_t> table, int d, int n,
                           std::span<std::int64_t> out);
    // out[k] = (values[k] >= threshold) ? 1 : 0
    void (*threshold_bits)(std::span<const std::int64_t> values, std::int64_t threshold,
                           std::span<std::uint8_t> out);
    // Sum of a byte array whose entries are 0 or 1.
    std::size_t (*count_ones)(std::span<const std::uint8_t> bits);
    // Number of indices k with bits[k] + bits[size-1-k] != 1 (order-2
    // antipodal pairs that are not split). Counts each pair twice.
    std::size_t (*antipodal_defects)(std::span<const std::uint8_t> bits);
    // Number of k with bits[k] == 1 and bits[size-1-k] == 1.
    std::size_t (*antipodal_collisions)(std::span<const std::uint8_t> bits);
};

const KernelTable& scalar_kernels();
/// Only callable when avx2_supported() is true.
const KernelTable& avx2_kernels();

bool avx2_supported();

const KernelTable& active();
Backend active_backend();
/// Selects a backend explicitly. Selecting avx2 on a CPU without it
/// throws StateError.
void set_backend(Backend backend);
void reset_backend();

std::string_view backend_name(Backend backend);

}  // namespace mdt::kernels
