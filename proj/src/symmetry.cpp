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
  \file symmetry.cpp
  \brief Pairwise variable symmetry detection
*/

#include "npnkit/symmetry.hpp"

#include <algorithm>
#include <numeric>

namespace npnkit
{

bool is_symmetric( truth_table const& tt, uint32_t a, uint32_t b )
{
  assert( a < tt.num_vars() && b < tt.num_vars() && a != b );
  return swap_variables( tt, a, b ) == tt;
}

std::vector<std::vector<uint32_t>> detect_symmetry( truth_table const& tt,
                                                    std::span<uint32_t const> group )
{
  std::vector<uint32_t> parent( group.size() );
  std::iota( parent.begin(), parent.end(), 0u );
  auto find = [&]( uint32_t x ) {
    while ( parent[x] != x )
    {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  for ( uint32_t i = 0u; i < group.size(); ++i )
  {
    for ( uint32_t j = i + 1u; j < group.size(); ++j )
    {
      if ( find( i ) != find( j ) && is_symmetric( tt, group[i], group[j] ) )
      {
        parent[find( i )] = find( j );
      }
    }
  }

  std::vector<std::vector<uint32_t>> classes;
  std::vector<int> class_of( group.size(), -1 );
  for ( uint32_t i = 0u; i < group.size(); ++i )
  {
    uint32_t const root = find( i );
    if ( class_of[root] < 0 )
    {
      class_of[root] = static_cast<int>( classes.size() );
      classes.emplace_back();
    }
    classes[class_of[root]].push_back( group[i] );
  }
  for ( auto& cls : classes )
  {
    std::sort( cls.begin(), cls.end() );
  }
  std::sort( classes.begin(), classes.end(),
             []( auto const& x, auto const& y ) { return x.front() < y.front(); } );
  return classes;
}

} // namespace npnkit
