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
  \file classify.hpp
  \brief Bucketing truth tables into NPN equivalence classes

  Streams functions through a canonicalization method and groups them
  by canonical table.  Mixed input counts are classified side by side
  (the canonical key includes the input count); cross-arity equivalence
  is out of scope.  Classification may fan out over worker threads; the
  result is independent of scheduling.
*/

#pragma once

#include "canonical.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace npnkit
{

/*! \brief One NPN class: canonical key, member count, and the
    lexicographically smallest member seen with its witness. */
struct class_entry
{
  truth_table canonical;
  uint64_t count;
  truth_table representative;
  npn_transform witness;
};

/*! \brief Aggregate accounting for one classification run.

  `totals` sums the per-function stage counters; `grouping` counts
  variable groups by size across all functions at the last grouping
  stage.  Wall times are measured, not deterministic.
*/
struct run_stats
{
  uint64_t functions{ 0 };
  uint64_t classes{ 0 };
  stage_counters totals;
  std::map<uint32_t, uint64_t> grouping;
  double canonicalize_seconds{ 0.0 };
  double merge_seconds{ 0.0 };
};

/*! \brief Classes sorted by canonical key, run statistics, and
    per-item diagnostics ("item <index>: <what>") for inputs that were
    skipped.  Skipped items are excluded from `stats.functions`. */
struct classify_result
{
  std::vector<class_entry> classes;
  run_stats stats;
  std::vector<std::string> errors;
};

/*! \brief Buckets `functions` into NPN classes under `method`.

  Two inputs land in the same bucket exactly when they are
  NPN-equivalent.  With `jobs` > 1 the functions are processed on that
  many threads; the merged result (keys, counts, representatives,
  witnesses) is byte-identical to a single-threaded run.
*/
classify_result classify( std::span<truth_table const> functions, canon_method method,
                          canon_options const& options = {}, uint32_t jobs = 1u );

/*! \brief Writes the class table as CSV.

  Schema (versioned by the leading comment):
  `canonical_hex,count,representative_hex,out_neg,phase_mask_hex,perm`
  with rows sorted by canonical key and `perm` space-separated.
*/
void write_class_csv( std::ostream& out, classify_result const& result );

/*! \brief Writes run statistics as one JSON object per line. */
void write_stats_jsonl( std::ostream& out, run_stats const& stats, std::string_view method_name );

} // namespace npnkit
