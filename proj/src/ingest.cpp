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
  \file ingest.cpp
  \brief AIGER circuits, K-feasible cuts, and truth-table extraction
*/

#include "npnkit/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace npnkit
{

namespace
{

[[noreturn]] void fail( uint64_t line_no, std::string const& what )
{
  throw std::invalid_argument( "line " + std::to_string( line_no ) + ": " + what );
}

std::vector<uint64_t> parse_numbers( std::string const& line, uint64_t line_no, size_t expected )
{
  std::vector<uint64_t> numbers;
  char const* p = line.data();
  char const* const end = line.data() + line.size();
  while ( p != end )
  {
    if ( *p == ' ' || *p == '\t' || *p == '\r' )
    {
      ++p;
      continue;
    }
    uint64_t value = 0u;
    auto const [next, ec] = std::from_chars( p, end, value );
    if ( ec != std::errc{} || next == p )
    {
      fail( line_no, "expected a number, got '" + line + "'" );
    }
    numbers.push_back( value );
    p = next;
  }
  if ( numbers.size() != expected )
  {
    fail( line_no, "expected " + std::to_string( expected ) + " numbers, got " +
                       std::to_string( numbers.size() ) );
  }
  return numbers;
}

/*! \brief Elementary table of variable `var` over `num_vars` inputs. */
truth_table var_table( uint32_t num_vars, uint32_t var )
{
  truth_table tt( num_vars );
  auto words = tt.words();
  if ( var < 6u )
  {
    for ( auto& w : words )
    {
      w = detail::var_projection[var];
    }
    words[0] &= tt.valid_mask();
  }
  else
  {
    for ( size_t i = 0u; i < words.size(); ++i )
    {
      words[i] = ( i >> ( var - 6u ) ) & 1u ? ~uint64_t( 0 ) : 0u;
    }
  }
  return tt;
}

/*! \brief True iff a's leaves are a subset of b's (both sorted). */
bool subset_of( cut const& a, cut const& b )
{
  return std::includes( b.leaves.begin(), b.leaves.end(), a.leaves.begin(), a.leaves.end() );
}

bool cut_priority( cut const& a, cut const& b )
{
  if ( a.leaves.size() != b.leaves.size() )
  {
    return a.leaves.size() < b.leaves.size();
  }
  return a.leaves < b.leaves;
}

} // namespace

aig parse_aag( std::istream& in )
{
  std::string line;
  uint64_t line_no = 0u;
  auto const next_line = [&]( char const* what ) {
    if ( !std::getline( in, line ) )
    {
      fail( line_no, std::string( "unexpected end of file, expected " ) + what );
    }
    ++line_no;
  };

  next_line( "header" );
  std::istringstream header( line );
  std::string magic;
  uint64_t m = 0u, i = 0u, l = 0u, o = 0u, a = 0u;
  if ( !( header >> magic >> m >> i >> l >> o >> a ) || magic != "aag" )
  {
    fail( line_no, "expected header 'aag M I L O A'" );
  }
  if ( l != 0u )
  {
    fail( line_no, "sequential circuits unsupported" );
  }
  if ( i + a > m )
  {
    fail( line_no, "header counts exceed the maximum index" );
  }

  aig result;
  result.max_index = static_cast<uint32_t>( m );
  uint64_t const max_literal = 2u * m + 1u;

  /* node states: 0 undefined, 1 input, 2 gate */
  std::vector<uint8_t> kind( m + 1u, 0u );
  auto const check_literal = [&]( uint64_t lit ) {
    if ( lit > max_literal )
    {
      fail( line_no, "literal " + std::to_string( lit ) + " out of range" );
    }
  };

  for ( uint64_t k = 0u; k < i; ++k )
  {
    next_line( "an input literal" );
    auto const lit = parse_numbers( line, line_no, 1u )[0];
    check_literal( lit );
    if ( lit < 2u || ( lit & 1u ) )
    {
      fail( line_no, "input literal must be even and nonzero" );
    }
    if ( kind[lit / 2u] != 0u )
    {
      fail( line_no, "node " + std::to_string( lit / 2u ) + " defined twice" );
    }
    kind[lit / 2u] = 1u;
    result.inputs.push_back( static_cast<uint32_t>( lit / 2u ) );
  }

  for ( uint64_t k = 0u; k < o; ++k )
  {
    next_line( "an output literal" );
    auto const lit = parse_numbers( line, line_no, 1u )[0];
    check_literal( lit );
    result.outputs.push_back( static_cast<uint32_t>( lit ) );
  }

  std::vector<aig::gate> gates;
  for ( uint64_t k = 0u; k < a; ++k )
  {
    next_line( "an and-gate definition" );
    auto const numbers = parse_numbers( line, line_no, 3u );
    for ( auto const lit : numbers )
    {
      check_literal( lit );
    }
    if ( numbers[0] < 2u || ( numbers[0] & 1u ) )
    {
      fail( line_no, "gate literal must be even and nonzero" );
    }
    uint32_t const node = static_cast<uint32_t>( numbers[0] / 2u );
    if ( kind[node] != 0u )
    {
      fail( line_no, "node " + std::to_string( node ) + " defined twice" );
    }
    kind[node] = 2u;
    gates.push_back( { node, static_cast<uint32_t>( numbers[1] ),
                       static_cast<uint32_t>( numbers[2] ) } );
  }

  /* every referenced node must be the constant, an input, or a gate */
  std::unordered_map<uint32_t, size_t> gate_of;
  for ( size_t g = 0u; g < gates.size(); ++g )
  {
    gate_of.emplace( gates[g].node, g );
  }
  auto const check_defined = [&]( uint32_t lit ) {
    uint32_t const node = lit / 2u;
    if ( node != 0u && kind[node] == 0u )
    {
      throw std::invalid_argument( "literal " + std::to_string( lit ) +
                                   " references undefined node " + std::to_string( node ) );
    }
  };
  for ( auto const lit : result.outputs )
  {
    check_defined( lit );
  }
  for ( auto const& g : gates )
  {
    check_defined( g.fanin0 );
    check_defined( g.fanin1 );
  }

  /* topological sort with cycle detection (iterative DFS) */
  std::vector<uint8_t> mark( m + 1u, 0u ); /* 0 new, 1 on stack, 2 done */
  std::vector<uint32_t> stack;
  for ( auto const& g : gates )
  {
    if ( mark[g.node] != 0u )
    {
      continue;
    }
    stack.push_back( g.node );
    while ( !stack.empty() )
    {
      uint32_t const node = stack.back();
      if ( mark[node] == 0u )
      {
        mark[node] = 1u;
        auto const& def = gates[gate_of.at( node )];
        for ( auto const fanin : { def.fanin0 / 2u, def.fanin1 / 2u } )
        {
          if ( kind[fanin] == 2u )
          {
            if ( mark[fanin] == 1u )
            {
              throw std::invalid_argument( "cyclic definition through node " +
                                           std::to_string( fanin ) );
            }
            if ( mark[fanin] == 0u )
            {
              stack.push_back( fanin );
            }
          }
        }
      }
      else
      {
        stack.pop_back();
        if ( mark[node] == 1u )
        {
          mark[node] = 2u;
          result.gates.push_back( gates[gate_of.at( node )] );
        }
      }
    }
  }
  return result;
}

void write_aag( std::ostream& out, aig const& a )
{
  out << "aag " << a.max_index << ' ' << a.inputs.size() << " 0 " << a.outputs.size() << ' '
      << a.gates.size() << '\n';
  for ( auto const input : a.inputs )
  {
    out << 2u * input << '\n';
  }
  for ( auto const lit : a.outputs )
  {
    out << lit << '\n';
  }
  for ( auto const& g : a.gates )
  {
    out << 2u * g.node << ' ' << g.fanin0 << ' ' << g.fanin1 << '\n';
  }
}

std::vector<std::vector<cut>> enumerate_cuts( aig const& a, uint32_t k, uint32_t limit )
{
  if ( k < 2u || k > 16u )
  {
    throw std::invalid_argument( "cut size must be between 2 and 16" );
  }
  if ( limit < 1u )
  {
    throw std::invalid_argument( "cut limit must be at least 1" );
  }

  std::vector<std::vector<cut>> cuts( a.max_index + 1u );
  cuts[0].push_back( cut{} );
  for ( auto const input : a.inputs )
  {
    cuts[input].push_back( cut{ { input } } );
  }

  std::vector<cut> merged;
  for ( auto const& g : a.gates )
  {
    merged.clear();
    merged.push_back( cut{ { g.node } } );
    for ( auto const& c0 : cuts[g.fanin0 / 2u] )
    {
      for ( auto const& c1 : cuts[g.fanin1 / 2u] )
      {
        cut u;
        u.leaves.reserve( c0.leaves.size() + c1.leaves.size() );
        std::set_union( c0.leaves.begin(), c0.leaves.end(), c1.leaves.begin(), c1.leaves.end(),
                        std::back_inserter( u.leaves ) );
        if ( u.leaves.size() <= k )
        {
          merged.push_back( std::move( u ) );
        }
      }
    }
    std::sort( merged.begin(), merged.end(), cut_priority );
    merged.erase( std::unique( merged.begin(), merged.end() ), merged.end() );

    /* size-ascending order means any dominating cut precedes the cuts
       it dominates */
    auto& stored = cuts[g.node];
    for ( auto& candidate : merged )
    {
      if ( stored.size() == limit )
      {
        break;
      }
      bool dominated = false;
      for ( auto const& kept : stored )
      {
        if ( subset_of( kept, candidate ) )
        {
          dominated = true;
          break;
        }
      }
      if ( !dominated )
      {
        stored.push_back( std::move( candidate ) );
      }
    }
  }
  return cuts;
}

truth_table cut_truth_table( aig const& a, uint32_t node, cut const& c )
{
  uint32_t const n = static_cast<uint32_t>( c.leaves.size() );
  std::unordered_map<uint32_t, truth_table> memo;
  memo.emplace( 0u, truth_table( n ) ); /* constant false */
  for ( uint32_t v = 0u; v < n; ++v )
  {
    memo.emplace( c.leaves[v], var_table( n, v ) );
  }

  std::unordered_map<uint32_t, size_t> gate_of;
  for ( size_t g = 0u; g < a.gates.size(); ++g )
  {
    gate_of.emplace( a.gates[g].node, g );
  }

  auto const eval = [&]( auto&& self, uint32_t index ) -> truth_table const& {
    if ( auto const it = memo.find( index ); it != memo.end() )
    {
      return it->second;
    }
    auto const git = gate_of.find( index );
    if ( git == gate_of.end() )
    {
      throw std::logic_error( "cone of node " + std::to_string( node ) +
                              " escapes the cut at node " + std::to_string( index ) );
    }
    auto const& g = a.gates[git->second];
    truth_table t0 = self( self, g.fanin0 / 2u );
    if ( g.fanin0 & 1u )
    {
      t0 = complement( t0 );
    }
    truth_table t1 = self( self, g.fanin1 / 2u );
    if ( g.fanin1 & 1u )
    {
      t1 = complement( t1 );
    }
    auto words0 = t0.words();
    auto const words1 = t1.words();
    for ( size_t w = 0u; w < words0.size(); ++w )
    {
      words0[w] &= words1[w];
    }
    return memo.emplace( index, std::move( t0 ) ).first->second;
  };
  return eval( eval, node );
}

std::vector<truth_table> extract_functions( aig const& a, uint32_t k, uint32_t limit, bool dedupe )
{
  auto const cuts = enumerate_cuts( a, k, limit );
  std::vector<bool> is_gate( a.max_index + 1u, false );
  for ( auto const& g : a.gates )
  {
    is_gate[g.node] = true;
  }
  std::vector<truth_table> functions;
  std::vector<truth_table> seen;
  for ( uint32_t node = 1u; node <= a.max_index; ++node )
  {
    if ( !is_gate[node] )
    {
      continue;
    }
    for ( auto const& c : cuts[node] )
    {
      if ( c.leaves.size() < 2u )
      {
        continue;
      }
      auto table = cut_truth_table( a, node, c );
      if ( dedupe )
      {
        auto const it = std::lower_bound( seen.begin(), seen.end(), table );
        if ( it != seen.end() && *it == table )
        {
          continue;
        }
        seen.insert( it, table );
      }
      functions.push_back( std::move( table ) );
    }
  }
  return functions;
}

} // namespace npnkit
