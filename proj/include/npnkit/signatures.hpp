/* npnkit: NPN canonical forms and classification for Boolean functions
 * Copyright (C) 2026  npnkit contributors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file signatures.hpp
  \brief Transform-invariant measurements of a function

  All quantities here are computed word-parallel on the packed table.
  The per-variable ones permute along with the inputs and are either
  invariant under input negation (influence) or map to a complement
  (cofactor weight), which is what makes them usable as search-space
  filters in the canonical-form computation.
*/

#pragma once

#include "truth_table.hpp"

#include <cstdint>
#include <vector>

namespace npnkit
{

/*! \brief Value type of the spectral sums (they can exceed 64 bits for
    large bases). */
using spectral_value = unsigned __int128;

/*! \brief Weights of the satisfied minterms (number of set input bits),
    sorted ascending, plus their squared sum.  Both are invariant under
    any input permutation. */
struct row_sum_stats
{
  std::vector<uint32_t> weights;
  uint64_t squared_sum{ 0 };
};

/*! \brief Weight of the positive cofactor: number of satisfied minterms
    with variable `var` set. */
uint64_t cofactor_count( truth_table const& tt, uint32_t var );

/*! \brief cofactor_count for every variable. */
std::vector<uint64_t> cofactor_counts( truth_table const& tt );

/*! \brief Influence of `var`: number of minterm pairs along the `var`
    axis whose function values differ (each pair counted once). */
uint64_t influence( truth_table const& tt, uint32_t var );

/*! \brief influence for every variable. */
std::vector<uint64_t> influences( truth_table const& tt );

/*! \brief Variables the function actually depends on (influence > 0),
    as a bit mask. */
uint32_t support_mask( truth_table const& tt );

/*! \brief XOR of the two cofactors along `var`, as an (n-1)-input table;
    its satisfy count equals influence(tt, var). */
truth_table difference_table( truth_table const& tt, uint32_t var );

/*! \brief Sorted minterm weights and their squared sum. */
row_sum_stats row_sums( truth_table const& tt );

/*! \brief Spectral sum: sum of base^weight(m) over satisfied minterms m,
    where weight(m) counts the set input bits of m.  Invariant under
    input permutation.
    \throws std::overflow_error if (base+1)^n is not representable. */
spectral_value spectral_sum( truth_table const& tt, uint32_t base = 3u );

/*! \brief Spectral sum of the positive cofactor along `var`; equals the
    sum of base^(weight(m)-1) over satisfied minterms with `var` set.
    Permutes along with the inputs and refines the cofactor weight. */
spectral_value cofactor_spectral_sum( truth_table const& tt, uint32_t var, uint32_t base = 3u );

/*! \brief cofactor_spectral_sum for every variable. */
std::vector<spectral_value> cofactor_spectral_sums( truth_table const& tt, uint32_t base = 3u );

/*! \brief Number of arrangements a set of independently permutable
    blocks admits: the product of the factorials of the block sizes. */
uint64_t permutation_cost( std::span<uint32_t const> block_sizes );

namespace detail
{

/*! \brief Minterm masks by weight: entry w selects the minterms of an
    n-input table with exactly w input bits set (n+1 entries, each
    word_count(n) words).  Cached per n. */
std::vector<std::vector<uint64_t>> const& weight_masks( uint32_t num_vars );

} // namespace detail

} // namespace npnkit
