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
  \file classify.cpp
  \brief Bucketing truth tables into NPN equivalence classes
*/

#include "npnkit/classify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <thread>

#include <json.hpp>

namespace npnkit
{

namespace
{

struct bucket
{
  uint64_t count{ 0 };
  truth_table representative;
  npn_transform witness;
};

/*! \brief All-zero counters; the accumulators must not inherit the
    per-function defaults. */
constexpr stage_counters zero_counters{ 0u, 0u, 0u, 0u, 0u, 0u, 0u };

struct worker_state
{
  std::map<truth_table, bucket> buckets;
  stage_counters totals{ zero_counters };
  std::map<uint32_t, uint64_t> grouping;
  uint64_t functions{ 0 };
  std::vector<std::string> errors;
};

void add_counters( stage_counters& total, stage_counters const& item )
{
  total.phase_after_cof += item.phase_after_cof;
  total.phase_after_sym += item.phase_after_sym;
  total.perm_after_cof += item.perm_after_cof;
  total.perm_after_sym += item.perm_after_sym;
  total.perm_after_inf += item.perm_after_inf;
  total.phase_candidates_selected += item.phase_candidates_selected;
  total.final_enumerations += item.final_enumerations;
}

void process_range( std::span<truth_table const> functions, canon_method method,
                    canon_options const& options, uint32_t stride, uint32_t offset,
                    worker_state& state )
{
  for ( size_t i = offset; i < functions.size(); i += stride )
  {
    canonical_result result;
    try
    {
      result = canonicalize( functions[i], method, options );
    }
    catch ( std::exception const& e )
    {
      state.errors.push_back( "item " + std::to_string( i ) + ": " + e.what() );
      continue;
    }
    ++state.functions;
    add_counters( state.totals, result.counters );
    for ( auto const size : result.group_sizes )
    {
      ++state.grouping[size];
    }
    auto& b = state.buckets[result.canonical];
    ++b.count;
    if ( b.count == 1u || functions[i] < b.representative )
    {
      b.representative = functions[i];
      b.witness = result.witness;
    }
  }
}

} // namespace

classify_result classify( std::span<truth_table const> functions, canon_method method,
                          canon_options const& options, uint32_t jobs )
{
  using clock = std::chrono::steady_clock;
  jobs = std::max( jobs, 1u );

  classify_result result;
  result.stats.totals = zero_counters;
  std::vector<worker_state> states( jobs );

  auto const canon_begin = clock::now();
  if ( jobs == 1u )
  {
    process_range( functions, method, options, 1u, 0u, states[0] );
  }
  else
  {
    std::vector<std::thread> threads;
    threads.reserve( jobs );
    for ( uint32_t w = 0u; w < jobs; ++w )
    {
      threads.emplace_back( process_range, functions, method, std::cref( options ), jobs, w,
                            std::ref( states[w] ) );
    }
    for ( auto& t : threads )
    {
      t.join();
    }
  }
  auto const merge_begin = clock::now();

  /* merge worker maps in worker order; min-representative keeps the
     outcome independent of the split */
  std::map<truth_table, bucket> merged;
  for ( auto& state : states )
  {
    result.stats.functions += state.functions;
    add_counters( result.stats.totals, state.totals );
    for ( auto const& [size, n] : state.grouping )
    {
      result.stats.grouping[size] += n;
    }
    for ( auto& [key, b] : state.buckets )
    {
      auto& target = merged[key];
      if ( target.count == 0u || b.representative < target.representative )
      {
        target.representative = b.representative;
        target.witness = b.witness;
      }
      target.count += b.count;
    }
    for ( auto& e : state.errors )
    {
      result.errors.push_back( std::move( e ) );
    }
  }
  std::sort( result.errors.begin(), result.errors.end() );

  result.classes.reserve( merged.size() );
  for ( auto& [key, b] : merged )
  {
    result.classes.push_back( { key, b.count, b.representative, b.witness } );
  }
  result.stats.classes = result.classes.size();

  auto const end = clock::now();
  result.stats.canonicalize_seconds = std::chrono::duration<double>( merge_begin - canon_begin ).count();
  result.stats.merge_seconds = std::chrono::duration<double>( end - merge_begin ).count();
  return result;
}

void write_class_csv( std::ostream& out, classify_result const& result )
{
  out << "# npnkit classes v1\n";
  out << "canonical_hex,count,representative_hex,out_neg,phase_mask_hex,perm\n";
  char buf[8];
  for ( auto const& entry : result.classes )
  {
    out << to_hex( entry.canonical ) << ',' << entry.count << ',' << to_hex( entry.representative )
        << ',' << ( entry.witness.output_negated ? 1 : 0 ) << ',';
    std::snprintf( buf, sizeof buf, "%X", entry.witness.phase_mask );
    out << buf << ',';
    for ( size_t v = 0u; v < entry.witness.perm.size(); ++v )
    {
      out << ( v == 0u ? "" : " " ) << uint32_t( entry.witness.perm[v] );
    }
    out << '\n';
  }
}

void write_stats_jsonl( std::ostream& out, run_stats const& stats, std::string_view method_name )
{
  nlohmann::json grouping;
  for ( auto const& [size, n] : stats.grouping )
  {
    grouping[std::to_string( size )] = n;
  }
  nlohmann::json const j{
      { "schema", "npnkit-stats-v1" },
      { "method", method_name },
      { "functions", stats.functions },
      { "classes", stats.classes },
      { "phase_after_cof", stats.totals.phase_after_cof },
      { "phase_after_sym", stats.totals.phase_after_sym },
      { "perm_after_cof", stats.totals.perm_after_cof },
      { "perm_after_sym", stats.totals.perm_after_sym },
      { "perm_after_inf", stats.totals.perm_after_inf },
      { "phase_candidates_selected", stats.totals.phase_candidates_selected },
      { "final_enumerations", stats.totals.final_enumerations },
      { "grouping", grouping },
      { "canonicalize_seconds", stats.canonicalize_seconds },
      { "merge_seconds", stats.merge_seconds } };
  out << j.dump() << '\n';
}

} // namespace npnkit
