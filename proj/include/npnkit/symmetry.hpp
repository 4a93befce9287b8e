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
  \file symmetry.hpp
  \brief Pairwise variable symmetry detection

  Two inputs are symmetric when exchanging them leaves the function
  unchanged.  Verified symmetric pairs are merged into classes with a
  union-find; because the transpositions of a connected component
  generate every permutation of that component, any reordering of the
  variables inside a resulting class provably fixes the function — the
  merge does not rely on an unverified transitivity assumption.
*/

#pragma once

#include "truth_table.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace npnkit
{

/*! \brief True iff exchanging inputs `a` and `b` leaves the table
    unchanged (equivalently, the two mixed cofactors coincide). */
bool is_symmetric( truth_table const& tt, uint32_t a, uint32_t b );

/*! \brief Partition of `group` into classes of mutually interchangeable
    variables.

  Every pair inside `group` is tested; verified pairs are merged.
  Classes list their members ascending and are ordered by smallest
  member.  Variables outside `group` are never considered.
*/
std::vector<std::vector<uint32_t>> detect_symmetry( truth_table const& tt,
                                                    std::span<uint32_t const> group );

} // namespace npnkit
