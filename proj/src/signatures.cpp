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
  \file signatures.cpp
  \brief Transform-invariant measurements of a function
*/

#include "npnkit/signatures.hpp"

#include <array>
#include <bit>
#include <mutex>
#include <stdexcept>

namespace npnkit
{

uint64_t cofactor_count( truth_table const& tt, uint32_t var )
{
  assert( var < tt.num_vars() );
  auto const words = tt.words();
  uint64_t count = 0u;
  if ( var < 6u )
  {
    for ( auto const w : words )
    {
      count += std::popcount( w & detail::var_projection[var] );
    }
  }
  else
  {
    uint32_t const stride = 1u << ( var - 6u );
    for ( uint32_t i = 0u; i < words.size(); ++i )
    {
      if ( ( i & stride ) != 0u )
      {
        count += std::popcount( words[i] );
      }
    }
  }
  return count;
}

std::vector<uint64_t> cofactor_counts( truth_table const& tt )
{
  std::vector<uint64_t> counts( tt.num_vars() );
  for ( uint32_t v = 0u; v < tt.num_vars(); ++v )
  {
    counts[v] = cofactor_count( tt, v );
  }
  return counts;
}

uint64_t influence( truth_table const& tt, uint32_t var )
{
  assert( var < tt.num_vars() );
  auto const words = tt.words();
  uint64_t count = 0u;
  if ( var < 6u )
  {
    uint32_t const shift = 1u << var;
    for ( auto const w : words )
    {
      count += std::popcount( ( w ^ ( w >> shift ) ) & ~detail::var_projection[var] );
    }
  }
  else
  {
    uint32_t const stride = 1u << ( var - 6u );
    for ( uint32_t i = 0u; i < words.size(); ++i )
    {
      if ( ( i & stride ) == 0u )
      {
        count += std::popcount( words[i] ^ words[i | stride] );
      }
    }
  }
  return count;
}

std::vector<uint64_t> influences( truth_table const& tt )
{
  std::vector<uint64_t> vals( tt.num_vars() );
  for ( uint32_t v = 0u; v < tt.num_vars(); ++v )
  {
    vals[v] = influence( tt, v );
  }
  return vals;
}

uint32_t support_mask( truth_table const& tt )
{
  uint32_t mask = 0u;
  for ( uint32_t v = 0u; v < tt.num_vars(); ++v )
  {
    if ( influence( tt, v ) != 0u )
    {
      mask |= 1u << v;
    }
  }
  return mask;
}

truth_table difference_table( truth_table const& tt, uint32_t var )
{
  assert( var < tt.num_vars() );
  truth_table const pos = cofactor( tt, var, true );
  truth_table const neg = cofactor( tt, var, false );
  truth_table res( tt.num_vars() - 1u );
  for ( uint32_t i = 0u; i < res.num_words(); ++i )
  {
    res.words()[i] = pos.words()[i] ^ neg.words()[i];
  }
  return res;
}

row_sum_stats row_sums( truth_table const& tt )
{
  auto const& masks = detail::weight_masks( tt.num_vars() );
  auto const words = tt.words();
  row_sum_stats stats;
  stats.weights.reserve( satisfy_count( tt ) );
  for ( uint32_t w = 0u; w <= tt.num_vars(); ++w )
  {
    uint64_t count = 0u;
    for ( uint32_t i = 0u; i < words.size(); ++i )
    {
      count += std::popcount( words[i] & masks[w][i] );
    }
    stats.weights.insert( stats.weights.end(), count, w );
    stats.squared_sum += count * uint64_t( w ) * w;
  }
  return stats;
}

uint64_t permutation_cost( std::span<uint32_t const> block_sizes )
{
  uint64_t cost = 1u;
  for ( auto const size : block_sizes )
  {
    for ( uint32_t k = 2u; k <= size; ++k )
    {
      cost *= k;
    }
  }
  return cost;
}

namespace detail
{

std::vector<std::vector<uint64_t>> const& weight_masks( uint32_t num_vars )
{
  assert( num_vars <= 16u );
  static std::array<std::vector<std::vector<uint64_t>>, 17> cache;
  static std::array<std::once_flag, 17> flags;
  std::call_once( flags[num_vars], [num_vars]() {
    auto& masks = cache[num_vars];
    masks.assign( num_vars + 1u, std::vector<uint64_t>( truth_table::word_count( num_vars ), 0u ) );
    for ( uint64_t m = 0u; m < ( uint64_t( 1 ) << num_vars ); ++m )
    {
      masks[std::popcount( m )][m >> 6u] |= uint64_t( 1 ) << ( m & 63u );
    }
  } );
  return cache[num_vars];
}

namespace
{

/*! \brief base^w for w = 0..num_vars, refusing bases where the full sum
    (base+1)^n could overflow the accumulator. */
std::vector<spectral_value> spectral_powers( uint32_t num_vars, uint32_t base )
{
  if ( base < 2u )
  {
    throw std::invalid_argument( "spectral base must be at least 2" );
  }
  spectral_value const limit = ~spectral_value( 0 );
  spectral_value bound = 1u;
  for ( uint32_t i = 0u; i < num_vars; ++i )
  {
    if ( bound > limit / ( base + 1u ) )
    {
      throw std::overflow_error( "spectral base too large for this input count" );
    }
    bound *= base + 1u;
  }
  std::vector<spectral_value> powers( num_vars + 1u );
  powers[0] = 1u;
  for ( uint32_t w = 0u; w < num_vars; ++w )
  {
    powers[w + 1u] = powers[w] * base;
  }
  return powers;
}

} // namespace

} // namespace detail

spectral_value spectral_sum( truth_table const& tt, uint32_t base )
{
  auto const& masks = detail::weight_masks( tt.num_vars() );
  auto const powers = detail::spectral_powers( tt.num_vars(), base );
  auto const words = tt.words();
  spectral_value sum = 0u;
  for ( uint32_t w = 0u; w <= tt.num_vars(); ++w )
  {
    uint64_t count = 0u;
    for ( uint32_t i = 0u; i < words.size(); ++i )
    {
      count += std::popcount( words[i] & masks[w][i] );
    }
    sum += powers[w] * count;
  }
  return sum;
}

spectral_value cofactor_spectral_sum( truth_table const& tt, uint32_t var, uint32_t base )
{
  assert( var < tt.num_vars() );
  auto const& masks = detail::weight_masks( tt.num_vars() );
  auto const powers = detail::spectral_powers( tt.num_vars(), base );
  auto const words = tt.words();
  uint32_t const stride = var >= 6u ? 1u << ( var - 6u ) : 0u;
  spectral_value sum = 0u;
  for ( uint32_t w = 1u; w <= tt.num_vars(); ++w )
  {
    uint64_t count = 0u;
    for ( uint32_t i = 0u; i < words.size(); ++i )
    {
      uint64_t sel = words[i] & masks[w][i];
      if ( var < 6u )
      {
        sel &= detail::var_projection[var];
      }
      else if ( ( i & stride ) == 0u )
      {
        continue;
      }
      count += std::popcount( sel );
    }
    sum += powers[w - 1u] * count;
  }
  return sum;
}

std::vector<spectral_value> cofactor_spectral_sums( truth_table const& tt, uint32_t base )
{
  std::vector<spectral_value> vals( tt.num_vars() );
  for ( uint32_t v = 0u; v < tt.num_vars(); ++v )
  {
    vals[v] = cofactor_spectral_sum( tt, v, base );
  }
  return vals;
}

} // namespace npnkit
