#pragma once

// Helpers for computing in the universal ring Z[c_1, ..., c_n] and pairing
// its degree-2n part against a Chern vector.

#include <functional>
#include <map>
#include <vector>

#include "bordx/chern_vector.hpp"
#include "bordx/cohomring.hpp"
#include "bordx/graded_poly.hpp"

namespace bordx::detail {

using PolyMul = std::function<GradedPoly(const GradedPoly&, const GradedPoly&)>;

// {2, 4, ..., 2n}
std::vector<int> chern_degrees(int n);
// 1 + c_1 + ... + c_n
GradedPoly universal_total_chern(int n);

// Multiplicity vector (e[i] = number of parts equal to i+1) -> index into
// partition_list(n).
const std::map<Exponent, std::size_t>& multiplicity_index(int n);
Exponent multiplicities(const Partition& w);

// Pairs the degree-2n terms of p (over c_1..c_n) with the Chern numbers of a.
Integer pair_with(const GradedPoly& p, const ChernVector& a);

// For each partition w of n (in partition_list order) computes
// parts[w_1] * parts[w_2] * ... by depth-first search sharing prefixes.
void for_each_partition_product(const std::vector<GradedPoly>& parts, int n, const GradedPoly& one,
                                const PolyMul& mul,
                                const std::function<void(std::size_t, const GradedPoly&)>& fn);

// Newton's identity: the power sum x_1^n + x_2^n + ... in terms of c_1..c_n.
GradedPoly newton_power_sum(int n);

// Product of classes by expanding c(a) c(b) over both sets of Chern generators.
ChernVector product_expanded(const ChernVector& a, const ChernVector& b);

// Chern numbers c_w = < prod total_{w_i}, [M] > in a presented ring.
ChernVector chern_numbers_in_ring(const PresentedRing& ring, const GradedPoly& total, Backend backend);

}  // namespace bordx::detail
