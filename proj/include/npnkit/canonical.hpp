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
  \file canonical.hpp
  \brief Canonical forms under input negation, input permutation, and
         output negation

  Every method returns, for each input, a representative table that is
  identical for all equivalent inputs.  The signature-guided methods
  prune the transform space in stages — output polarity by satisfy
  count, per-input phases by cofactor weights, permutations by grouping
  on cofactor weight, symmetry classes, influence, and spectral values —
  and only enumerate the assignments the signatures cannot decide.  The
  pruning is exact: a candidate is dropped only when an already-compared
  vector entry strictly dominates it.  The exhaustive method ignores all
  signatures and minimizes the raw table over every transform, serving
  as the oracle the others are validated against.
*/

#pragma once

#include "signatures.hpp"
#include "truth_table.hpp"

#include <cstdint>
#include <vector>

namespace npnkit
{

/*! \brief Canonicalization strategy.

  - `influence`: prunes with cofactor weights, symmetry, influence, and
    per-candidate arrangement cost; candidate phases are selected by the
    exact remaining-arrangement count, and spectral values refine the
    enumeration blocks.
  - `influence_plus`: same pruning of permutations, but candidate phases
    are selected by the single 0th-order spectral value (cheaper
    selection, possibly more final enumerations).
  - `baseline`: the same pipeline with the influence stage disabled —
    the ablation reference for measuring what influence contributes.
  - `exhaustive`: minimizes the raw table over all 2^(n+1) n! transforms.
*/
enum class canon_method
{
  exhaustive,
  influence,
  influence_plus,
  baseline
};

/*! \brief Remaining-enumeration counts after each pruning stage.

  The phase counts follow the classical accounting where a symmetry
  class contributes one representative bit (2 choices); the actual
  enumeration visits phase multisets per class (k+1 choices for a class
  of k), which is what `phase_candidates_selected` reports.  Permutation
  counts multiply factorials of the per-stage block sizes, counting only
  variables the function depends on.  When both output polarities are
  retained, the per-stage counts describe the first (positive) branch;
  `final_enumerations` is the number of candidate tables actually built
  and compared, across all retained output polarities.
*/
struct stage_counters
{
  uint64_t phase_after_cof{ 1 };
  uint64_t phase_after_sym{ 1 };
  uint64_t perm_after_cof{ 1 };
  uint64_t perm_after_sym{ 1 };
  uint64_t perm_after_inf{ 1 };
  uint64_t phase_candidates_selected{ 1 };
  uint64_t final_enumerations{ 0 };
};

/*! \brief Tuning knobs for canonicalize. */
struct canon_options
{
  uint32_t spectral_base{ 3u };
  /*! \brief Largest n the exhaustive method accepts. */
  uint32_t exhaustive_cap{ 6u };
};

/*! \brief Canonical table, the transform that produced it, and the
    per-stage accounting. */
struct canonical_result
{
  truth_table canonical;
  npn_transform witness;
  stage_counters counters;
  /*! \brief Variable-group sizes at the last grouping stage (after
      influence for the influence methods, after cofactor grouping for
      baseline), for grouping statistics. */
  std::vector<uint32_t> group_sizes;
};

/*! \brief Computes the canonical form of `tt` under `method`.

  The witness satisfies apply_transform(tt, witness) == canonical.
  Two tables produce the same canonical table exactly when some
  transform maps one to the other; this holds per method (different
  methods may pick different representatives of the same class).

  \throws std::invalid_argument if n is 0, or for the exhaustive method
          if n exceeds options.exhaustive_cap.
*/
canonical_result canonicalize( truth_table const& tt, canon_method method,
                               canon_options const& options = {} );

} // namespace npnkit
