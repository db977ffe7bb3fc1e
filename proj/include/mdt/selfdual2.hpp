#pragma once

// Order-2 matrices viewed as Boolean functions: selfduality, essential
// weights, and the published nine-variable counterexamples whose optimal
// cover polytope is an edge.

#include "mdt/duality.hpp"
#include "mdt/matrix.hpp"
#include "mdt/rational.hpp"
#include "mdt/weights.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mdt {

/// Positive weights attached to the coordinate-value-1 hyperplane of each
/// direction; the value-0 hyperplanes carry weight 0.
struct EssentialWeights {
    std::vector<Rat> weights;

    /// Throws DomainError unless every weight is positive.
    void validate() const;
    Rat total() const;
};

struct CounterexampleRecord {
    int label = 0;  // 1-based position in the published list
    long q = 1;
    std::vector<long> numerators;
    /// 0-based positions whose values interchange to give the second vertex.
    std::pair<int, int> swap_positions;

    EssentialWeights first_vertex() const;
    EssentialWeights second_vertex() const;
};

struct ClauseResult {
    char clause;
    bool passed;
    std::string detail;
};

struct CounterexampleReport {
    CounterexampleRecord record;
    std::vector<ClauseResult> clauses;
    Rat optimal_weight;
    Rat deficiency;
    std::size_t support_size = 0;
    std::vector<std::pair<Rat, Rat>> ranges;

    bool passed() const;
    /// First failing clause letter, or 0.
    char first_failure() const;
};

bool is_selfdual(const MultiMatrix& a);
/// Reads the essential weights off an order-2 cover in which one of the two
/// parallel hyperplanes of every direction has weight 0. Directions with
/// both weights 0 are dropped. Empty when some direction has two positive
/// weights.
std::optional<EssentialWeights> essential_weights_of(const WeightTable& cover);
WeightTable essential_to_table(const EssentialWeights& w);
bool extremal_iff_selfdual_threshold(const MultiMatrix& a);
bool rate_parity_check(const MultiMatrix& a);

enum class Dedup { profile, canonical_form };

/// Extremal order-2 matrices of dimension d up to equivalence, generated
/// as selfdual supports filtered by thresholdness. Sorted canonical forms.
std::vector<MultiMatrix> enumerate_extremal_order2(int d, std::uint64_t budget = kDefaultBudget,
                                                   Dedup dedup = Dedup::profile);

/// Checks clauses (a)-(f) without throwing.
CounterexampleReport check_counterexample(const CounterexampleRecord& rec);
/// Same, but throws VerificationError naming the first failed clause.
CounterexampleReport verify_counterexample(const CounterexampleRecord& rec);

const std::vector<CounterexampleRecord>& builtin_counterexamples();

}  // namespace mdt
