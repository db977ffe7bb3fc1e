#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mdt {

/// Default cap on n^d, in entries.
inline constexpr std::size_t kDefaultEntryCap = std::size_t{1} << 24;
/// Default budget for orbit searches, in elementary steps (entries touched).
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// A point of I_n^d, 0-based.
using Index = std::vector<int>;

/// Dense d-dimensional (0,1)-matrix of order n. Entries are stored one per
/// byte in lexicographic index order, last coordinate fastest.
class MultiMatrix {
public:
    MultiMatrix(int d, int n, std::size_t entry_cap = kDefaultEntryCap);
    MultiMatrix(int d, int n, std::vector<std::uint8_t> bits,
                std::size_t entry_cap = kDefaultEntryCap);

    static MultiMatrix full(int d, int n);
    static MultiMatrix from_support(int d, int n, const std::vector<Index>& support);
    /// Parses a '0'/'1' string of length n^d.
    static MultiMatrix from_string(int d, int n, std::string_view bits);

    int dim() const { return d_; }
    int order() const { return n_; }
    std::size_t size() const { return bits_.size(); }

    std::span<const std::uint8_t> bits() const { return bits_; }
    std::string bit_string() const;

    bool at(std::size_t offset) const { return bits_[offset] != 0; }
    bool at(const Index& alpha) const { return at(offset_of(alpha)); }
    void set(std::size_t offset, bool value) { bits_[offset] = value ? 1 : 0; }
    void set(const Index& alpha, bool value) { set(offset_of(alpha), value); }
    MultiMatrix with_entry(std::size_t offset, bool value = true) const;

    std::size_t offset_of(const Index& alpha) const;
    Index index_of(std::size_t offset) const;
    /// n^(d-1-i): distance between consecutive values of coordinate i.
    std::size_t stride(int direction) const { return strides_[direction]; }

    std::size_t support_size() const;
    std::vector<Index> support() const;

    friend bool operator==(const MultiMatrix& a, const MultiMatrix& b) {
        return a.d_ == b.d_ && a.n_ == b.n_ && a.bits_ == b.bits_;
    }
    /// Shape first, then lexicographic bit order.
    friend std::strong_ordering operator<=>(const MultiMatrix& a, const MultiMatrix& b);

private:
    int d_;
    int n_;
    std::vector<std::size_t> strides_;
    std::vector<std::uint8_t> bits_;
};

/// Canonical profile: per-direction rates sorted ascending; direction
/// vectors then sorted lexicographically.
struct Profile {
    std::vector<std::vector<std::int64_t>> rates;
    friend auto operator<=>(const Profile&, const Profile&) = default;
    std::string str() const;
};

/// Composition of per-direction coordinate permutations and a direction
/// permutation: entry alpha of the source lands at beta with
/// beta[direction_perm[i]] = coordinate_perms[i][alpha[i]].
struct Transform {
    std::vector<int> direction_perm;
    std::vector<std::vector<int>> coordinate_perms;

    static Transform identity(int d, int n);
    MultiMatrix apply(const MultiMatrix& a) const;
};

std::vector<Index> hyperplane_indices(const MultiMatrix& a, int direction, int coordinate);
std::int64_t rate(const MultiMatrix& a, int direction, int coordinate);
/// Raw rates r[i][j], unsorted.
std::vector<std::vector<std::int64_t>> rate_table(const MultiMatrix& a);
Profile profile(const MultiMatrix& a);

bool is_equivalent(const MultiMatrix& a, const MultiMatrix& b,
                   std::uint64_t budget = kDefaultBudget);
/// Lexicographically minimal bit string over the whole equivalence group.
MultiMatrix canonical_form(const MultiMatrix& a, std::uint64_t budget = kDefaultBudget);
/// Number of transforms in the equivalence group, saturating at UINT64_MAX.
std::uint64_t group_order(int d, int n);

}  // namespace mdt
