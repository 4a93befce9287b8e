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
  \file truth_table.cpp
  \brief Packed truth tables and NPN transforms
*/

#include "npnkit/truth_table.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace npnkit
{

namespace
{

int hex_value( char c )
{
  if ( c >= '0' && c <= '9' )
  {
    return c - '0';
  }
  if ( c >= 'a' && c <= 'f' )
  {
    return c - 'a' + 10;
  }
  if ( c >= 'A' && c <= 'F' )
  {
    return c - 'A' + 10;
  }
  return -1;
}

truth_table parse_binary( std::string_view digits, uint32_t num_vars )
{
  truth_table tt( num_vars );
  uint64_t const bits = tt.num_bits();
  if ( digits.size() != bits )
  {
    throw std::invalid_argument( "truth table: expected " + std::to_string( bits ) +
                                 " binary digits, got " + std::to_string( digits.size() ) );
  }
  for ( uint64_t i = 0u; i < bits; ++i )
  {
    char const c = digits[digits.size() - 1u - i];
    if ( c != '0' && c != '1' )
    {
      throw std::invalid_argument( std::string( "truth table: invalid binary digit '" ) + c + "'" );
    }
    tt.set_bit( i, c == '1' );
  }
  return tt;
}

} // namespace

truth_table parse_hex( std::string_view text, std::optional<uint32_t> num_vars )
{
  if ( text.size() >= 2u && text[0] == '0' && ( text[1] == 'x' || text[1] == 'X' ) )
  {
    text.remove_prefix( 2u );
  }
  if ( text.empty() )
  {
    throw std::invalid_argument( "truth table: empty string" );
  }

  uint32_t n;
  if ( num_vars )
  {
    n = *num_vars;
    if ( n > 16u )
    {
      throw std::invalid_argument( "truth table: inputs must be at most 16" );
    }
    if ( n < 2u )
    {
      return parse_binary( text, n );
    }
  }
  else
  {
    /* infer smallest n >= 2 with 2^n / 4 hex digits */
    if ( !std::has_single_bit( text.size() ) || text.size() > ( size_t( 1 ) << 14u ) )
    {
      throw std::invalid_argument( "truth table: hex digit count must be a power of two (at most 16384)" );
    }
    n = 2u;
    while ( ( size_t( 1 ) << ( n - 2u ) ) < text.size() )
    {
      ++n;
    }
  }

  size_t const digits = size_t( 1 ) << ( n - 2u );
  if ( text.size() != digits )
  {
    throw std::invalid_argument( "truth table: expected " + std::to_string( digits ) +
                                 " hex digits for " + std::to_string( n ) + " inputs, got " +
                                 std::to_string( text.size() ) );
  }

  truth_table tt( n );
  auto words = tt.words();
  for ( size_t j = 0u; j < digits; ++j )
  {
    int const v = hex_value( text[digits - 1u - j] );
    if ( v < 0 )
    {
      throw std::invalid_argument( std::string( "truth table: invalid hex digit '" ) +
                                   text[digits - 1u - j] + "'" );
    }
    words[j >> 4u] |= uint64_t( v ) << ( 4u * ( j & 15u ) );
  }
  return tt;
}

std::string to_hex( truth_table const& tt )
{
  if ( tt.num_vars() < 2u )
  {
    std::string s;
    for ( uint64_t i = tt.num_bits(); i-- > 0; )
    {
      s += tt.get_bit( i ) ? '1' : '0';
    }
    return s;
  }
  static constexpr char digit[] = "0123456789ABCDEF";
  size_t const digits = size_t( 1 ) << ( tt.num_vars() - 2u );
  std::string s( digits, '0' );
  auto words = tt.words();
  for ( size_t j = 0u; j < digits; ++j )
  {
    s[digits - 1u - j] = digit[( words[j >> 4u] >> ( 4u * ( j & 15u ) ) ) & 0xFu];
  }
  return s;
}

uint64_t satisfy_count( truth_table const& tt )
{
  uint64_t count = 0u;
  for ( auto const w : tt.words() )
  {
    count += std::popcount( w );
  }
  return count;
}

truth_table cofactor( truth_table const& tt, uint32_t var, bool positive )
{
  assert( var < tt.num_vars() );
  truth_table res( tt.num_vars() - 1u );
  uint64_t const low_mask = ( uint64_t( 1 ) << var ) - 1u;
  for ( uint64_t m = 0u; m < res.num_bits(); ++m )
  {
    uint64_t const src = ( ( m & ~low_mask ) << 1u ) | ( uint64_t( positive ) << var ) | ( m & low_mask );
    res.set_bit( m, tt.get_bit( src ) );
  }
  return res;
}

truth_table complement( truth_table const& tt )
{
  truth_table res = tt;
  for ( auto& w : res.words() )
  {
    w = ~w;
  }
  res.words()[res.num_words() - 1u] &= res.valid_mask();
  return res;
}

truth_table flip_variable( truth_table const& tt, uint32_t var )
{
  assert( var < tt.num_vars() );
  truth_table res = tt;
  auto words = res.words();
  if ( var < 6u )
  {
    uint64_t const proj = detail::var_projection[var];
    uint32_t const shift = 1u << var;
    for ( auto& w : words )
    {
      w = ( ( w & proj ) >> shift ) | ( ( w & ~proj ) << shift );
    }
    words[words.size() - 1u] &= res.valid_mask();
  }
  else
  {
    uint32_t const stride = 1u << ( var - 6u );
    for ( uint32_t i = 0u; i < words.size(); ++i )
    {
      if ( ( i & stride ) == 0u )
      {
        std::swap( words[i], words[i | stride] );
      }
    }
  }
  return res;
}

truth_table flip_inputs( truth_table const& tt, uint32_t mask )
{
  assert( mask < ( uint32_t( 1 ) << tt.num_vars() ) );
  truth_table res = tt;
  while ( mask != 0u )
  {
    uint32_t const var = std::countr_zero( mask );
    res = flip_variable( res, var );
    mask &= mask - 1u;
  }
  return res;
}

truth_table swap_variables( truth_table const& tt, uint32_t a, uint32_t b )
{
  assert( a < tt.num_vars() && b < tt.num_vars() );
  if ( a == b )
  {
    return tt;
  }
  if ( a > b )
  {
    std::swap( a, b );
  }
  truth_table res = tt;
  auto words = res.words();
  if ( b < 6u )
  {
    /* exchange in-word bit pairs (p, p + delta) where p has x_a = 1, x_b = 0 */
    uint32_t const delta = ( 1u << b ) - ( 1u << a );
    uint64_t const mask = detail::var_projection[a] & ~detail::var_projection[b];
    for ( auto& w : words )
    {
      uint64_t const t = ( ( w >> delta ) ^ w ) & mask;
      w ^= t ^ ( t << delta );
    }
  }
  else if ( a < 6u )
  {
    /* cross-word: bits with x_a = 1 of the x_b = 0 word trade places with
       bits with x_a = 0 of the x_b = 1 word */
    uint64_t const pa = detail::var_projection[a];
    uint32_t const s = 1u << a;
    uint32_t const stride = 1u << ( b - 6u );
    for ( uint32_t i = 0u; i < words.size(); ++i )
    {
      if ( ( i & stride ) == 0u )
      {
        uint64_t const lo = words[i];
        uint64_t const hi = words[i | stride];
        words[i] = ( lo & ~pa ) | ( ( hi & ~pa ) << s );
        words[i | stride] = ( hi & pa ) | ( ( lo & pa ) >> s );
      }
    }
  }
  else
  {
    /* exchange whole words across the two word-index axes */
    uint32_t const sa = 1u << ( a - 6u );
    uint32_t const sb = 1u << ( b - 6u );
    for ( uint32_t i = 0u; i < words.size(); ++i )
    {
      if ( ( i & sa ) != 0u && ( i & sb ) == 0u )
      {
        std::swap( words[i], words[( i ^ sa ) | sb] );
      }
    }
  }
  return res;
}

truth_table permute_variables( truth_table const& tt, std::span<uint8_t const> perm )
{
  if ( perm.size() != tt.num_vars() )
  {
    throw std::invalid_argument( "permutation size does not match input count" );
  }
  truth_table res = tt;
  /* cur[v] = slot currently feeding input v; swapping slots (x, y) swaps the
     values x and y inside cur, so position v can be fixed without disturbing
     the already fixed positions u < v */
  std::vector<uint8_t> cur( perm.size() );
  for ( uint32_t v = 0u; v < cur.size(); ++v )
  {
    cur[v] = static_cast<uint8_t>( v );
  }
  for ( uint32_t v = 0u; v < cur.size(); ++v )
  {
    if ( cur[v] != perm[v] )
    {
      uint8_t const x = cur[v];
      uint8_t const y = perm[v];
      res = swap_variables( res, x, y );
      for ( auto& c : cur )
      {
        c = c == x ? y : ( c == y ? x : c );
      }
    }
  }
  return res;
}

truth_table apply_transform( truth_table const& tt, npn_transform const& t )
{
  if ( t.perm.size() != tt.num_vars() )
  {
    throw std::invalid_argument( "transform size does not match input count" );
  }
  truth_table res = permute_variables( flip_inputs( tt, t.phase_mask ), t.perm );
  return t.output_negated ? complement( res ) : res;
}

npn_transform compose( npn_transform const& second, npn_transform const& first )
{
  assert( second.perm.size() == first.perm.size() );
  npn_transform t;
  t.output_negated = first.output_negated != second.output_negated;
  t.perm.resize( first.perm.size() );
  for ( uint32_t v = 0u; v < first.perm.size(); ++v )
  {
    t.perm[v] = second.perm[first.perm[v]];
    uint32_t const bit = ( ( first.phase_mask >> v ) ^ ( second.phase_mask >> first.perm[v] ) ) & 1u;
    t.phase_mask |= bit << v;
  }
  return t;
}

npn_transform invert( npn_transform const& t )
{
  npn_transform inv;
  inv.output_negated = t.output_negated;
  inv.perm.resize( t.perm.size() );
  for ( uint32_t v = 0u; v < t.perm.size(); ++v )
  {
    inv.perm[t.perm[v]] = static_cast<uint8_t>( v );
    inv.phase_mask |= ( ( t.phase_mask >> v ) & 1u ) << t.perm[v];
  }
  return inv;
}

} // namespace npnkit
