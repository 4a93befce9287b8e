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
  \file io.hpp
  \brief Text format for truth-table corpora

  One function per line, written as hex (or binary for fewer than two
  inputs).  A sentinel comment `# n=<k>` fixes the input count for the
  lines that follow; without one, the count is inferred from the digit
  count.  Other `#` comments and blank lines are skipped.
*/

#pragma once

#include "truth_table.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace npnkit
{

/*! \brief One parsed corpus line. */
struct parsed_function
{
  uint64_t line_no;
  truth_table table;
};

/*! \brief Parse outcome: functions that parsed, diagnostics for lines
    that did not.  Reading never aborts on a malformed line. */
struct parse_report
{
  std::vector<parsed_function> functions;
  std::vector<std::string> errors; /* "line <k>: <what>" */
};

/*! \brief Reads a truth-table corpus from `in`. */
parse_report read_functions( std::istream& in );

/*! \brief Writes `functions` in the corpus format, emitting a
    `# n=<k>` sentinel whenever the input count changes. */
void write_functions( std::ostream& out, std::span<truth_table const> functions );

} // namespace npnkit
