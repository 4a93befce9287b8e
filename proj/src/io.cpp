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
  \file io.cpp
  \brief Text format for truth-table corpora
*/

#include "npnkit/io.hpp"

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace npnkit
{

namespace
{

std::string_view trim( std::string_view s )
{
  while ( !s.empty() && ( s.front() == ' ' || s.front() == '\t' || s.front() == '\r' ) )
  {
    s.remove_prefix( 1u );
  }
  while ( !s.empty() && ( s.back() == ' ' || s.back() == '\t' || s.back() == '\r' ) )
  {
    s.remove_suffix( 1u );
  }
  return s;
}

/*! \brief Parses `# n=<k>`; returns nothing for ordinary comments. */
std::optional<uint32_t> parse_sentinel( std::string_view comment )
{
  comment = trim( comment.substr( 1u ) );
  if ( !comment.starts_with( "n=" ) )
  {
    return std::nullopt;
  }
  comment.remove_prefix( 2u );
  uint32_t n = 0u;
  auto const [ptr, ec] = std::from_chars( comment.data(), comment.data() + comment.size(), n );
  if ( ec != std::errc{} || ptr != comment.data() + comment.size() || n > 16u )
  {
    throw std::invalid_argument( "bad arity sentinel '# n=" + std::string( comment ) + "'" );
  }
  return n;
}

} // namespace

parse_report read_functions( std::istream& in )
{
  parse_report report;
  std::optional<uint32_t> current_n;
  std::string line;
  uint64_t line_no = 0u;
  while ( std::getline( in, line ) )
  {
    ++line_no;
    auto const text = trim( line );
    if ( text.empty() )
    {
      continue;
    }
    try
    {
      if ( text.front() == '#' )
      {
        if ( auto const n = parse_sentinel( text ) )
        {
          current_n = *n;
        }
        continue;
      }
      report.functions.push_back( { line_no, parse_hex( text, current_n ) } );
    }
    catch ( std::invalid_argument const& e )
    {
      report.errors.push_back( "line " + std::to_string( line_no ) + ": " + e.what() );
    }
  }
  return report;
}

void write_functions( std::ostream& out, std::span<truth_table const> functions )
{
  std::optional<uint32_t> current_n;
  for ( auto const& tt : functions )
  {
    if ( current_n != tt.num_vars() )
    {
      current_n = tt.num_vars();
      out << "# n=" << *current_n << '\n';
    }
    out << to_hex( tt ) << '\n';
  }
}

} // namespace npnkit
