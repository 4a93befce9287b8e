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
  \file truth_table.hpp
  \brief Packed truth tables and NPN transforms

  A function of n inputs (n <= 16) is stored as a 2^n-bit vector packed
  into 64-bit words.  Bit m holds the function value on the input
  assignment whose index is m, with variable x_1 mapped to the least
  significant bit of the minterm index.  Hex strings render the most
  significant minterm first, so parsing and printing agree with the
  usual "0x8 is the 2-input AND" reading.
*/

#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace npnkit
{

/*! \brief Truth table of an (up to) 16-input Boolean function. */
class truth_table
{
public:
  truth_table() = default;

  explicit truth_table( uint32_t num_vars )
      : num_vars_( num_vars ), words_( word_count( num_vars ), 0u )
  {
    assert( num_vars <= 16u );
  }

  static uint32_t word_count( uint32_t num_vars )
  {
    return num_vars <= 6u ? 1u : 1u << ( num_vars - 6u );
  }

  uint32_t num_vars() const { return num_vars_; }

  uint64_t num_bits() const { return uint64_t( 1 ) << num_vars_; }

  uint32_t num_words() const { return static_cast<uint32_t>( words_.size() ); }

  bool get_bit( uint64_t index ) const
  {
    assert( index < num_bits() );
    return ( words_[index >> 6u] >> ( index & 63u ) ) & 1u;
  }

  void set_bit( uint64_t index, bool value )
  {
    assert( index < num_bits() );
    uint64_t const mask = uint64_t( 1 ) << ( index & 63u );
    if ( value )
    {
      words_[index >> 6u] |= mask;
    }
    else
    {
      words_[index >> 6u] &= ~mask;
    }
  }

  std::span<uint64_t const> words() const { return words_; }

  std::span<uint64_t> words() { return words_; }

  /*! \brief Mask selecting the valid bits of the (single) word for n <= 6. */
  uint64_t valid_mask() const
  {
    return num_vars_ >= 6u ? ~uint64_t( 0 ) : ( uint64_t( 1 ) << num_bits() ) - 1u;
  }

  bool operator==( truth_table const& other ) const
  {
    return num_vars_ == other.num_vars_ && words_ == other.words_;
  }

  bool operator!=( truth_table const& other ) const { return !( *this == other ); }

  /*! \brief Orders tables by input count, then by bits with the most
      significant minterm compared first (the hex-string order). */
  bool operator<( truth_table const& other ) const
  {
    if ( num_vars_ != other.num_vars_ )
    {
      return num_vars_ < other.num_vars_;
    }
    for ( auto i = words_.size(); i-- > 0; )
    {
      if ( words_[i] != other.words_[i] )
      {
        return words_[i] < other.words_[i];
      }
    }
    return false;
  }

private:
  uint32_t num_vars_{ 0 };
  std::vector<uint64_t> words_{ 0u };
};

/*! \brief Complete NPN transform.

  Acting on f, the transform yields g with

    g(x_1, ..., x_n) = output_negated XOR f(y_1, ..., y_n),
    y_i = x_{perm[i]} XOR ((phase_mask >> i) & 1),

  i.e. `perm[i]` is the slot (0-based) from which input i of f is read
  and bit i of `phase_mask` negates that input.
*/
struct npn_transform
{
  bool output_negated{ false };
  uint32_t phase_mask{ 0 };
  std::vector<uint8_t> perm;

  static npn_transform identity( uint32_t num_vars )
  {
    npn_transform t;
    t.perm.resize( num_vars );
    for ( uint32_t i = 0u; i < num_vars; ++i )
    {
      t.perm[i] = static_cast<uint8_t>( i );
    }
    return t;
  }

  bool operator==( npn_transform const& other ) const = default;
};

/*! \brief Parses a truth table from text.

  Inputs with n >= 2 are hex strings of 2^n / 4 digits (an optional 0x
  prefix is accepted); the leftmost digit holds the four highest
  minterms.  For n < 2 the table is given as a binary string, highest
  minterm first.  When `num_vars` is omitted it is inferred from the
  digit count, always assuming hex.

  \throws std::invalid_argument on malformed text or impossible sizes.
*/
truth_table parse_hex( std::string_view text, std::optional<uint32_t> num_vars = std::nullopt );

/*! \brief Renders a table as uppercase hex (binary string for n < 2). */
std::string to_hex( truth_table const& tt );

/*! \brief Number of satisfied minterms |f|. */
uint64_t satisfy_count( truth_table const& tt );

/*! \brief Cofactor with variable `var` (0-based) fixed to `positive`;
    the result has one input fewer, variables above `var` shift down. */
truth_table cofactor( truth_table const& tt, uint32_t var, bool positive );

/*! \brief Output complement. */
truth_table complement( truth_table const& tt );

/*! \brief Negates input `var` (swaps the two halves along that axis). */
truth_table flip_variable( truth_table const& tt, uint32_t var );

/*! \brief Negates every input whose bit is set in `mask`. */
truth_table flip_inputs( truth_table const& tt, uint32_t mask );

/*! \brief Exchanges the roles of inputs `a` and `b`. */
truth_table swap_variables( truth_table const& tt, uint32_t a, uint32_t b );

/*! \brief Applies an input permutation: input v of the argument is read
    from slot `perm[v]` of the result (the permutation part of
    npn_transform's action). */
truth_table permute_variables( truth_table const& tt, std::span<uint8_t const> perm );

/*! \brief Applies a complete NPN transform per the npn_transform
    convention.  \throws std::invalid_argument on size mismatch. */
truth_table apply_transform( truth_table const& tt, npn_transform const& t );

/*! \brief Composition: applying the result equals applying `first`,
    then `second`. */
npn_transform compose( npn_transform const& second, npn_transform const& first );

/*! \brief Inverse element: compose(invert(t), t) is the identity. */
npn_transform invert( npn_transform const& t );

namespace detail
{

/*! \brief In-word projection mask of minterms with bit `var` set (var < 6). */
inline constexpr uint64_t var_projection[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull };

} // namespace detail

} // namespace npnkit
