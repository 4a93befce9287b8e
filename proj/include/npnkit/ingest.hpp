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
  \file ingest.hpp
  \brief AIGER circuits, K-feasible cuts, and truth-table extraction

  Combinational and-inverter graphs in the AIGER ASCII format.  Nodes
  are indexed 0..M with node 0 the constant false; a literal is
  2*index, +1 when complemented.  Cut enumeration produces, per node,
  a dominance-filtered set of leaf sets of at most K nodes; simulating
  the cone over a cut's leaves yields a K-input truth table, ready for
  classification.
*/

#pragma once

#include "truth_table.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace npnkit
{

/*! \brief Combinational and-inverter graph. */
struct aig
{
  struct gate
  {
    uint32_t node;   /* defined node index */
    uint32_t fanin0; /* literal */
    uint32_t fanin1; /* literal */
  };

  uint32_t max_index{ 0 };        /* M from the header */
  std::vector<uint32_t> inputs;   /* node indices in declaration order */
  std::vector<uint32_t> outputs;  /* literals */
  std::vector<gate> gates;        /* topologically sorted */
};

/*! \brief One K-feasible cut: leaf node indices, sorted ascending. */
struct cut
{
  std::vector<uint32_t> leaves;

  bool operator==( cut const& ) const = default;
};

/*! \brief Parses an AIGER ASCII ("aag") stream.

  Latches are rejected: only combinational circuits are supported.
  Gates may appear in any order in the file; they are returned
  topologically sorted.

  \throws std::invalid_argument with a line-numbered message on bad
          header, out-of-range or undefined literals, redefinitions,
          cyclic definitions, or a nonzero latch count.
*/
aig parse_aag( std::istream& in );

/*! \brief Writes `a` in AIGER ASCII form; parse ∘ write round-trips. */
void write_aag( std::ostream& out, aig const& a );

/*! \brief Enumerates K-feasible cuts for every node.

  Result is indexed by node.  cuts(constant) = {∅}; cuts(input) =
  {{input}}; cuts(gate) = the dominance-filtered merge of the fanin
  cut sets plus the unit cut {{gate}}.  No stored leaf set is a strict
  superset of another stored one at the same node.  At most `limit`
  cuts are kept per node, preferring smaller leaf sets, ties broken
  lexicographically.

  \throws std::invalid_argument unless 2 ≤ k ≤ 16 and limit ≥ 1
*/
std::vector<std::vector<cut>> enumerate_cuts( aig const& a, uint32_t k = 8u,
                                              uint32_t limit = 64u );

/*! \brief Simulates the cone of `node` over `c`'s leaves.

  Leaf i (ascending node index) becomes variable x_{i+1}; complemented
  edges apply bitwise NOT; the result has |leaves| inputs.

  \throws std::logic_error if the cone reaches an input outside the cut
*/
truth_table cut_truth_table( aig const& a, uint32_t node, cut const& c );

/*! \brief All cut truth tables with between 2 and K leaves.

  Tables appear in (node, cut-priority) order; `dedupe` drops repeated
  raw tables, keeping first occurrences.
*/
std::vector<truth_table> extract_functions( aig const& a, uint32_t k = 8u, uint32_t limit = 64u,
                                            bool dedupe = false );

} // namespace npnkit
