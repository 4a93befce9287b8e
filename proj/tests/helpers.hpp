/*!
  \file helpers.hpp
  \brief Shared test utilities: per-minterm reference implementations

  Everything here is written as directly as possible from the defining
  equations, bit by bit, so the word-parallel library code can be checked
  against an independent implementation.
*/

#pragma once

#include <npnkit/truth_table.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace npnkit::test
{

/*! \brief Reference transform application, one minterm at a time. */
inline truth_table naive_apply( truth_table const& f, npn_transform const& t )
{
  truth_table g( f.num_vars() );
  for ( uint64_t m = 0u; m < f.num_bits(); ++m )
  {
    uint64_t src = 0u;
    for ( uint32_t v = 0u; v < f.num_vars(); ++v )
    {
      uint64_t const bit = ( ( m >> t.perm[v] ) ^ ( t.phase_mask >> v ) ) & 1u;
      src |= bit << v;
    }
    g.set_bit( m, f.get_bit( src ) != t.output_negated );
  }
  return g;
}

/*! \brief Reference influence: number of input pairs along axis `var`
    on which the function values differ. */
inline uint64_t naive_influence( truth_table const& f, uint32_t var )
{
  uint64_t count = 0u;
  for ( uint64_t m = 0u; m < f.num_bits(); ++m )
  {
    if ( ( m >> var ) & 1u )
    {
      continue;
    }
    if ( f.get_bit( m ) != f.get_bit( m | ( uint64_t( 1 ) << var ) ) )
    {
      ++count;
    }
  }
  return count;
}

/*! \brief Reference satisfy-count-of-positive-cofactor. */
inline uint64_t naive_cofactor_count( truth_table const& f, uint32_t var )
{
  uint64_t count = 0u;
  for ( uint64_t m = 0u; m < f.num_bits(); ++m )
  {
    if ( ( ( m >> var ) & 1u ) && f.get_bit( m ) )
    {
      ++count;
    }
  }
  return count;
}

/*! \brief Enumerates every transform of n inputs (2^(n+1) n! of them). */
inline std::vector<npn_transform> all_transforms( uint32_t num_vars )
{
  std::vector<npn_transform> ts;
  std::vector<uint8_t> perm( num_vars );
  for ( uint32_t i = 0u; i < num_vars; ++i )
  {
    perm[i] = static_cast<uint8_t>( i );
  }
  do
  {
    for ( uint32_t phase = 0u; phase < ( 1u << num_vars ); ++phase )
    {
      for ( int out = 0; out < 2; ++out )
      {
        npn_transform t;
        t.output_negated = out != 0;
        t.phase_mask = phase;
        t.perm = perm;
        ts.push_back( std::move( t ) );
      }
    }
  } while ( std::next_permutation( perm.begin(), perm.end() ) );
  return ts;
}

/*! \brief Smallest table in the orbit of f, by full enumeration. */
inline truth_table orbit_min( truth_table const& f )
{
  truth_table best = f;
  for ( auto const& t : all_transforms( f.num_vars() ) )
  {
    truth_table const g = naive_apply( f, t );
    if ( g < best )
    {
      best = g;
    }
  }
  return best;
}

/*! \brief Reference spectral sum, one minterm at a time. */
inline unsigned __int128 naive_spectral( truth_table const& f, uint32_t base )
{
  unsigned __int128 sum = 0u;
  for ( uint64_t m = 0u; m < f.num_bits(); ++m )
  {
    if ( f.get_bit( m ) )
    {
      unsigned __int128 term = 1u;
      for ( int w = std::popcount( m ); w > 0; --w )
      {
        term *= base;
      }
      sum += term;
    }
  }
  return sum;
}

/*! \brief Uniformly random table on `num_vars` inputs. */
inline truth_table random_table( uint32_t num_vars, std::mt19937_64& rng )
{
  truth_table tt( num_vars );
  for ( auto& w : tt.words() )
  {
    w = rng();
  }
  tt.words()[tt.num_words() - 1u] &= tt.valid_mask();
  return tt;
}

/*! \brief Uniformly random transform on `num_vars` inputs. */
inline npn_transform random_transform( uint32_t num_vars, std::mt19937_64& rng )
{
  npn_transform t = npn_transform::identity( num_vars );
  std::shuffle( t.perm.begin(), t.perm.end(), rng );
  t.phase_mask = static_cast<uint32_t>( rng() ) & ( ( 1u << num_vars ) - 1u );
  t.output_negated = ( rng() & 1u ) != 0u;
  return t;
}

} // namespace npnkit::test
