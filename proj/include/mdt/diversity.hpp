#pragma once

// Extremal order-2 matrices whose optimal cover takes one or two distinct
// essential weights.

#include "mdt/duality.hpp"
#include "mdt/selfdual2.hpp"

#include <optional>
#include <set>
#include <vector>

namespace mdt {

int diversity_of(const EssentialWeights& w);

/// d copies of 2/(d+1); d must be odd.
EssentialWeights div1_cover(int d);

/// One level of the uniform-weight family: A_k has support
/// {alpha : |alpha| >= k}, which is A(lambda,...,lambda) for every
/// lambda in [1/k, 1/(k-1)).
struct Div1Level {
    int k = 0;
    bool extremal = false;
    /// The uniform table with the optimal weight spread evenly over all d
    /// value-1 hyperplanes is an optimal cover.
    bool uniform_optimal = false;
    Rat deficiency;
};
/// Checks every member of the uniform family of dimension d.
std::vector<Div1Level> scan_diversity1(int d);

/// Tuple (x,...,x, y,...,y) with x = p/q repeated t_x times and y = s/q
/// repeated t_y times.
struct Div2Params {
    long p = 0;
    long s = 0;
    long q = 0;
    int t_x = 0;
    int t_y = 0;

    int dim() const { return t_x + t_y; }
    /// Throws DomainError unless q > p > s >= 1, t_x, t_y >= 1 and
    /// gcd(p, s, q) = 1.
    void validate() const;
    EssentialWeights tuple() const;
};

struct Div2Witness {
    long r_x = 0;
    long r_y = 0;
    long l_x = 0;
    long l_y = 0;
    long i = 0;
    Rat w_I;
    Rat w_J;
};

std::optional<Div2Witness> div2_admissible(const Div2Params& params);
Polyplex div2_polyplex(const Div2Params& params, const Div2Witness& witness);

struct Div2Oracle {
    bool extremal = false;
    bool tuple_optimal = false;
    Rat deficiency;
    Rat optimal_weight;
    bool admissible() const { return extremal && tuple_optimal; }
};
/// LP verdict on the tuple: is A(tuple) extremal with the tuple optimal?
Div2Oracle div2_oracle(const Div2Params& params);

struct Div2SweepEntry {
    Div2Params params;
    std::optional<Div2Witness> witness;
    Div2Oracle oracle;
    bool agree = false;
    /// Admissible instances only: deficiency 1/q, valid optimal polyplex of
    /// weight 2 - 1/q satisfying slackness against the tuple, selfdual
    /// matrix, unique optimal cover with entries on the 1/q grid.
    bool certified = true;
};

struct Div2SweepReport {
    std::vector<Div2SweepEntry> entries;
    std::size_t admissible = 0;
    std::size_t disagreements = 0;
    std::size_t certificate_failures = 0;
    std::set<long> observed_i;
};

Div2SweepReport div2_cross_validate(long max_q = 8, int max_d = 6);

}  // namespace mdt
