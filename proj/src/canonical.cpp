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
  \file canonical.cpp
  \brief Canonical forms under input negation, input permutation, and
         output negation

  Candidates are compared by the vector (per-slot cofactor weights,
  per-slot influences, arrangement cost, spectral sum, per-slot spectral
  values, table bits) — with the blocks a method does not use left out.
  Earlier blocks are equal across every candidate of one input by
  construction, so the comparison implemented here starts at the first
  block that can differ.
*/

#include "npnkit/canonical.hpp"

#include "npnkit/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace npnkit
{

namespace
{

uint64_t factorial( uint32_t k )
{
  uint64_t r = 1u;
  for ( uint32_t i = 2u; i <= k; ++i )
  {
    r *= i;
  }
  return r;
}

/*! \brief Flips each input set in `mask` on a single-word table. */
uint64_t flip_word( uint64_t w, uint32_t mask )
{
  while ( mask != 0u )
  {
    uint32_t const var = std::countr_zero( mask );
    uint64_t const proj = detail::var_projection[var];
    uint32_t const shift = 1u << var;
    w = ( ( w & proj ) >> shift ) | ( ( w & ~proj ) << shift );
    mask &= mask - 1u;
  }
  return w;
}

/*! \brief Groups `vars` by ascending key, keys taken from `key_of`. */
template<typename KeyFn>
std::vector<std::vector<uint32_t>> split_ascending( std::vector<uint32_t> vars, KeyFn key_of )
{
  std::stable_sort( vars.begin(), vars.end(),
                    [&]( uint32_t a, uint32_t b ) { return key_of( a ) < key_of( b ); } );
  std::vector<std::vector<uint32_t>> parts;
  for ( auto const v : vars )
  {
    if ( parts.empty() || key_of( parts.back().front() ) != key_of( v ) )
    {
      parts.emplace_back();
    }
    parts.back().push_back( v );
  }
  return parts;
}

/*! \brief Number of distinct orderings of the class multiset. */
uint64_t arrangement_count( std::vector<std::vector<uint32_t>> const& classes )
{
  uint32_t total = 0u;
  uint64_t divisor = 1u;
  for ( auto const& cls : classes )
  {
    total += static_cast<uint32_t>( cls.size() );
    divisor *= factorial( static_cast<uint32_t>( cls.size() ) );
  }
  return factorial( total ) / divisor;
}

struct combo_info
{
  uint32_t mask{ 0 };
  uint64_t cost{ 1 };
  spectral_value s0{ 0 };
  std::vector<spectral_value> s1_slots;
  truth_table table; /* phase-assigned working table */
  /* per final enumeration block: interchangeability classes */
  std::vector<std::vector<std::vector<uint32_t>>> blocks;
};

struct best_candidate
{
  bool valid{ false };
  uint64_t cost{ 0 };
  spectral_value s0{ 0 };
  std::vector<spectral_value> s1_slots;
  truth_table table;
  bool out_neg{ false };
  uint32_t phase_mask{ 0 };
  std::vector<uint8_t> perm;

  /*! \brief True iff (cost, s0, s1, candidate table) improves on the
      stored optimum. */
  bool improves( combo_info const& c, truth_table const& cand ) const
  {
    if ( !valid )
    {
      return true;
    }
    if ( c.cost != cost )
    {
      return c.cost < cost;
    }
    if ( c.s0 != s0 )
    {
      return c.s0 < s0;
    }
    if ( c.s1_slots != s1_slots )
    {
      return c.s1_slots < s1_slots;
    }
    return cand < table;
  }
};

canonical_result exhaustive_canonicalize( truth_table const& tt, canon_options const& options )
{
  uint32_t const n = tt.num_vars();
  if ( n > options.exhaustive_cap )
  {
    throw std::invalid_argument( "exhaustive method is limited to " +
                                 std::to_string( options.exhaustive_cap ) +
                                 " inputs; raise the cap to override" );
  }

  std::vector<uint8_t> perm( n );
  std::iota( perm.begin(), perm.end(), uint8_t( 0 ) );

  bool have = false;
  truth_table best;
  bool best_out = false;
  uint32_t best_q = 0u;
  std::vector<uint8_t> best_perm = perm;

  auto const consider = [&]( truth_table const& cand, bool out, uint32_t q,
                             std::vector<uint8_t> const& p ) {
    if ( !have || cand < best )
    {
      have = true;
      best = cand;
      best_out = out;
      best_q = q;
      best_perm = p;
    }
  };

  if ( n <= 6u )
  {
    uint64_t const vm = tt.valid_mask();
    do
    {
      uint64_t const wp = permute_variables( tt, perm ).words()[0];
      for ( uint32_t q = 0u; q < ( 1u << n ); ++q )
      {
        uint64_t const w = flip_word( wp, q );
        truth_table cand( n );
        cand.words()[0] = w;
        consider( cand, false, q, perm );
        cand.words()[0] = ~w & vm;
        consider( cand, true, q, perm );
      }
    } while ( std::next_permutation( perm.begin(), perm.end() ) );
  }
  else
  {
    do
    {
      truth_table const tp = permute_variables( tt, perm );
      for ( uint32_t q = 0u; q < ( 1u << n ); ++q )
      {
        truth_table const cand = flip_inputs( tp, q );
        consider( cand, false, q, perm );
        consider( complement( cand ), true, q, perm );
      }
    } while ( std::next_permutation( perm.begin(), perm.end() ) );
  }

  canonical_result result;
  result.canonical = best;
  result.witness.output_negated = best_out;
  result.witness.perm = best_perm;
  for ( uint32_t v = 0u; v < n; ++v )
  {
    result.witness.phase_mask |= ( ( best_q >> best_perm[v] ) & 1u ) << v;
  }
  uint64_t const perms = factorial( n );
  result.counters.phase_after_cof = uint64_t( 1 ) << n;
  result.counters.phase_after_sym = uint64_t( 1 ) << n;
  result.counters.perm_after_cof = perms;
  result.counters.perm_after_sym = perms;
  result.counters.perm_after_inf = perms;
  result.counters.phase_candidates_selected = uint64_t( 1 ) << n;
  result.counters.final_enumerations = ( uint64_t( 1 ) << ( n + 1u ) ) * perms;
  result.group_sizes = { n };
  return result;
}

} // namespace

canonical_result canonicalize( truth_table const& tt, canon_method method,
                               canon_options const& options )
{
  uint32_t const n = tt.num_vars();
  if ( n == 0u || n > 16u )
  {
    throw std::invalid_argument( "canonicalize requires between 1 and 16 inputs" );
  }
  if ( method == canon_method::exhaustive )
  {
    auto result = exhaustive_canonicalize( tt, options );
    if ( apply_transform( tt, result.witness ) != result.canonical )
    {
      throw std::logic_error( "canonical witness does not reproduce the canonical table" );
    }
    return result;
  }

  bool const use_influence = method != canon_method::baseline;
  bool const select_by_cost = method != canon_method::influence_plus;

  auto const infs = influences( tt );
  uint64_t const weight = satisfy_count( tt );
  uint64_t const half = tt.num_bits() / 2u;

  std::vector<bool> branch_negs;
  if ( weight <= half )
  {
    branch_negs.push_back( false );
  }
  if ( weight >= half )
  {
    branch_negs.push_back( true );
  }

  canonical_result result;
  best_candidate best;

  for ( uint32_t branch = 0u; branch < branch_negs.size(); ++branch )
  {
    bool const out_neg = branch_negs[branch];
    truth_table const h = out_neg ? complement( tt ) : tt;
    uint64_t const wb = satisfy_count( h );
    auto const cofs = cofactor_counts( h );

    uint32_t adj_mask = 0u;
    std::vector<uint64_t> adjusted( n );
    uint32_t u_phase = 0u;
    for ( uint32_t v = 0u; v < n; ++v )
    {
      if ( 2u * cofs[v] > wb )
      {
        adj_mask |= 1u << v;
        adjusted[v] = wb - cofs[v];
      }
      else
      {
        adjusted[v] = cofs[v];
        if ( infs[v] != 0u && 2u * cofs[v] == wb )
        {
          u_phase |= 1u << v;
        }
      }
    }
    truth_table const g = flip_inputs( h, adj_mask );

    std::vector<uint32_t> all_vars( n );
    std::iota( all_vars.begin(), all_vars.end(), 0u );
    auto const groups = split_ascending( all_vars, [&]( uint32_t v ) { return adjusted[v]; } );

    /* enumeration blocks before phase assignment: per group, classes of
       interchangeable variables, split by influence unless disabled */
    struct pre_block
    {
      std::vector<uint32_t> vars;
      std::vector<std::vector<uint32_t>> classes;
    };
    std::vector<pre_block> blocks;
    std::vector<uint32_t> hist_sizes;
    for ( auto const& group : groups )
    {
      auto const classes = detect_symmetry( g, group );
      if ( !use_influence )
      {
        blocks.push_back( { group, classes } );
        hist_sizes.push_back( static_cast<uint32_t>( group.size() ) );
        continue;
      }
      auto const parts = split_ascending( group, [&]( uint32_t v ) { return infs[v]; } );
      for ( auto const& part : parts )
      {
        pre_block blk;
        blk.vars = part;
        for ( auto const& cls : classes )
        {
          /* influence is constant on a class, so classes never straddle parts */
          if ( infs[cls.front()] == infs[part.front()] )
          {
            blk.classes.push_back( cls );
          }
        }
        hist_sizes.push_back( static_cast<uint32_t>( part.size() ) );
        blocks.push_back( std::move( blk ) );
      }
    }

    if ( branch == 0u )
    {
      auto& c = result.counters;
      c.phase_after_cof = uint64_t( 1 ) << std::popcount( u_phase );
      c.perm_after_cof = 1u;
      c.perm_after_sym = 1u;
      c.perm_after_inf = 1u;
      uint32_t phased_classes = 0u;
      for ( auto const& group : groups )
      {
        uint32_t support_count = 0u;
        for ( auto const v : group )
        {
          support_count += infs[v] != 0u ? 1u : 0u;
        }
        c.perm_after_cof *= factorial( support_count );
      }
      for ( auto const& group : groups )
      {
        uint32_t support_classes = 0u;
        for ( auto const& cls : detect_symmetry( g, group ) )
        {
          if ( infs[cls.front()] != 0u )
          {
            ++support_classes;
          }
          if ( ( u_phase >> cls.front() ) & 1u )
          {
            ++phased_classes;
          }
        }
        c.perm_after_sym *= factorial( support_classes );
      }
      c.phase_after_sym = uint64_t( 1 ) << phased_classes;
      if ( use_influence )
      {
        for ( auto const& blk : blocks )
        {
          uint32_t support_classes = 0u;
          for ( auto const& cls : blk.classes )
          {
            if ( infs[cls.front()] != 0u )
            {
              ++support_classes;
            }
          }
          c.perm_after_inf *= factorial( support_classes );
        }
      }
      else
      {
        c.perm_after_inf = c.perm_after_sym;
      }
      result.group_sizes = hist_sizes;
    }

    /* classes whose phase the cofactor weights leave open */
    std::vector<std::vector<uint32_t> const*> phase_classes;
    for ( auto const& blk : blocks )
    {
      for ( auto const& cls : blk.classes )
      {
        if ( ( u_phase >> cls.front() ) & 1u )
        {
          phase_classes.push_back( &cls );
        }
      }
    }

    /* enumerate phase assignments as per-class negation counts */
    std::vector<combo_info> combos;
    std::vector<uint32_t> odo( phase_classes.size(), 0u );
    while ( true )
    {
      combo_info ci;
      for ( uint32_t k = 0u; k < odo.size(); ++k )
      {
        for ( uint32_t j = 0u; j < odo[k]; ++j )
        {
          ci.mask |= 1u << ( *phase_classes[k] )[j];
        }
      }
      ci.table = flip_inputs( g, ci.mask );
      ci.s0 = spectral_sum( ci.table, options.spectral_base );
      if ( select_by_cost )
      {
        auto const s1 = cofactor_spectral_sums( ci.table, options.spectral_base );
        for ( auto const& blk : blocks )
        {
          for ( auto const& sub : split_ascending( blk.vars, [&]( uint32_t v ) { return s1[v]; } ) )
          {
            auto classes = detect_symmetry( ci.table, sub );
            ci.cost *= arrangement_count( classes );
            ci.s1_slots.insert( ci.s1_slots.end(), sub.size(), s1[sub.front()] );
            ci.blocks.push_back( std::move( classes ) );
          }
        }
      }
      else
      {
        ci.cost = 0u; /* not part of this method's comparison */
        for ( auto const& blk : blocks )
        {
          ci.blocks.push_back( detect_symmetry( ci.table, blk.vars ) );
        }
      }
      combos.push_back( std::move( ci ) );

      uint32_t k = 0u;
      for ( ; k < odo.size(); ++k )
      {
        if ( ++odo[k] <= phase_classes[k]->size() )
        {
          break;
        }
        odo[k] = 0u;
      }
      if ( k == odo.size() )
      {
        break;
      }
    }

    /* keep every assignment minimizing the selection value */
    auto const selection = [&]( combo_info const& c ) {
      return select_by_cost ? spectral_value( c.cost ) : c.s0;
    };
    spectral_value best_sel = selection( combos.front() );
    for ( auto const& c : combos )
    {
      best_sel = std::min( best_sel, selection( c ) );
    }
    uint64_t selected = 0u;
    for ( auto const& c : combos )
    {
      selected += selection( c ) == best_sel ? 1u : 0u;
    }
    if ( branch == 0u )
    {
      result.counters.phase_candidates_selected = selected;
    }

    /* enumerate arrangements of each surviving assignment */
    std::vector<uint8_t> perm( n );
    std::vector<std::vector<uint32_t>> seqs;
    for ( auto const& ci : combos )
    {
      if ( selection( ci ) != best_sel )
      {
        continue;
      }
      seqs.clear();
      for ( auto const& classes : ci.blocks )
      {
        std::vector<uint32_t> seq;
        for ( uint32_t label = 0u; label < classes.size(); ++label )
        {
          seq.insert( seq.end(), classes[label].size(), label );
        }
        seqs.push_back( std::move( seq ) );
      }

      auto const visit = [&]() {
        uint32_t slot = 0u;
        for ( uint32_t b = 0u; b < ci.blocks.size(); ++b )
        {
          std::vector<uint32_t> cursor( ci.blocks[b].size(), 0u );
          for ( auto const label : seqs[b] )
          {
            perm[ci.blocks[b][label][cursor[label]++]] = static_cast<uint8_t>( slot++ );
          }
        }
        truth_table cand = permute_variables( ci.table, perm );
        ++result.counters.final_enumerations;
        if ( best.improves( ci, cand ) )
        {
          best.valid = true;
          best.cost = ci.cost;
          best.s0 = ci.s0;
          best.s1_slots = ci.s1_slots;
          best.table = std::move( cand );
          best.out_neg = out_neg;
          best.phase_mask = adj_mask ^ ci.mask;
          best.perm.assign( perm.begin(), perm.end() );
        }
      };

      auto const rec = [&]( auto&& self, uint32_t b ) -> void {
        if ( b == seqs.size() )
        {
          visit();
          return;
        }
        do
        {
          self( self, b + 1u );
        } while ( std::next_permutation( seqs[b].begin(), seqs[b].end() ) );
      };
      rec( rec, 0u );
    }
  }

  result.canonical = best.table;
  result.witness.output_negated = best.out_neg;
  result.witness.phase_mask = best.phase_mask;
  result.witness.perm = best.perm;
  if ( apply_transform( tt, result.witness ) != result.canonical )
  {
    throw std::logic_error( "canonical witness does not reproduce the canonical table" );
  }
  return result;
}

} // namespace npnkit
