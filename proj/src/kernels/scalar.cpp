#include "mdt/kernels.hpp"

namespace mdt::kernels {
namespace {

void incidence_sums_scalar(std::span<const std::int64_t> table, int d, int n,
                           std::span<std::int64_t> out) {
    // Built from the last direction outwards: a block for directions
    // k..d-1 is n copies of the block for k+1..d-1, shifted by table[k][j].
    std::size_t block = 1;
    out[0] = 0;
    for (int k = d - 1; k >= 0; --k) {
        const std::int64_t* row = table.data() + static_cast<std::size_t>(k) * n;
        for (int j = n - 1; j >= 0; --j) {
            std::int64_t* dst = out.data() + static_cast<std::size_t>(j) * block;
            for (std::size_t b = 0; b < block; ++b) dst[b] = out[b] + row[j];
        }
        // j runs downwards so the source block [0, block) is overwritten last.
        block *= static_cast<std::size_t>(n);
    }
}

void threshold_bits_scalar(std::span<const std::int64_t> values, std::int64_t threshold,
                           std::span<std::uint8_t> out) {
    for (std::size_t k = 0; k < values.size(); ++k) out[k] = values[k] >= threshold ? 1 : 0;
}

std::size_t count_ones_scalar(std::span<const std::uint8_t> bits) {
    std::size_t total = 0;
    for (auto b : bits) total += b;
    return total;
}

std::size_t antipodal_defects_scalar(std::span<const std::uint8_t> bits) {
    const std::size_t size = bits.size();
    std::size_t defects = 0;
    for (std::size_t k = 0; k < size; ++k) defects += (bits[k] + bits[size - 1 - k]) != 1;
    return defects;
}

std::size_t antipodal_collisions_scalar(std::span<const std::uint8_t> bits) {
    const std::size_t size = bits.size();
    std::size_t hits = 0;
    for (std::size_t k = 0; k < size; ++k) hits += bits[k] & bits[size - 1 - k];
    return hits;
}

}  // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table{
        incidence_sums_scalar,   threshold_bits_scalar,       count_ones_scalar,
        antipodal_defects_scalar, antipodal_collisions_scalar,
    };
    return table;
}

}  // namespace mdt::kernels
