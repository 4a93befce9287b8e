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
  \file npnkit_main.cpp
  \brief Command-line driver: canon, classify, cuts, verify, bench.

  Exit codes: 0 success, 1 input error (or verification failure),
  2 internal invariant violation.
*/

#include <CLI11.hpp>

#include <npnkit/canonical.hpp>
#include <npnkit/classify.hpp>
#include <npnkit/ingest.hpp>
#include <npnkit/io.hpp>
#include <npnkit/signatures.hpp>
#include <npnkit/truth_table.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace
{

using namespace npnkit;

canon_method method_from_name( std::string const& name )
{
  if ( name == "exhaustive" )
  {
    return canon_method::exhaustive;
  }
  if ( name == "inf" )
  {
    return canon_method::influence;
  }
  if ( name == "inf-plus" )
  {
    return canon_method::influence_plus;
  }
  if ( name == "baseline" )
  {
    return canon_method::baseline;
  }
  throw std::invalid_argument( "unknown method: " + name );
}

std::string format_phase_mask( uint32_t mask )
{
  char buffer[16];
  std::snprintf( buffer, sizeof buffer, "%X", mask );
  return buffer;
}

std::string format_perm( std::vector<uint8_t> const& perm, char sep )
{
  std::string text;
  for ( size_t i = 0u; i < perm.size(); ++i )
  {
    if ( i > 0u )
    {
      text += sep;
    }
    text += std::to_string( uint32_t( perm[i] ) );
  }
  return text;
}

/*! \brief Opens `path` for writing, or returns std::cout for an empty
    path. */
std::ostream& open_output( std::string const& path, std::ofstream& file )
{
  if ( path.empty() )
  {
    return std::cout;
  }
  file.open( path );
  if ( !file )
  {
    throw std::invalid_argument( "cannot open output file: " + path );
  }
  return file;
}

parse_report read_input_functions( std::string const& path )
{
  if ( path == "-" )
  {
    return read_functions( std::cin );
  }
  std::ifstream in( path );
  if ( !in )
  {
    throw std::invalid_argument( "cannot open input file: " + path );
  }
  return read_functions( in );
}

aig read_input_aig( std::string const& path )
{
  if ( path == "-" )
  {
    return parse_aag( std::cin );
  }
  std::ifstream in( path );
  if ( !in )
  {
    throw std::invalid_argument( "cannot open input file: " + path );
  }
  return parse_aag( in );
}

struct canon_config
{
  std::string input;
  std::string method{ "inf-plus" };
  uint32_t inputs{ 0u };
  canon_options options;
  bool stats{ false };
  std::string out_path;
};

int run_canon( canon_config const& cfg )
{
  std::vector<parsed_function> items;
  bool failed = false;

  if ( std::filesystem::is_regular_file( cfg.input ) || cfg.input == "-" )
  {
    auto report = read_input_functions( cfg.input );
    for ( auto const& e : report.errors )
    {
      std::cerr << "npnkit canon: " << e << '\n';
      failed = true;
    }
    items = std::move( report.functions );
  }
  else
  {
    std::string text = cfg.input;
    if ( text.rfind( "0x", 0 ) == 0u || text.rfind( "0X", 0 ) == 0u )
    {
      text = text.substr( 2u );
    }
    std::optional<uint32_t> n;
    if ( cfg.inputs != 0u )
    {
      n = cfg.inputs;
    }
    items.push_back( { 0u, parse_hex( text, n ) } );
  }

  std::ofstream file;
  auto& out = open_output( cfg.out_path, file );
  auto const method = method_from_name( cfg.method );

  for ( auto const& item : items )
  {
    try
    {
      auto const res = canonicalize( item.table, method, cfg.options );
      out << to_hex( item.table ) << ' ' << to_hex( res.canonical ) << ' '
          << ( res.witness.output_negated ? 1 : 0 ) << ' '
          << format_phase_mask( res.witness.phase_mask ) << ' '
          << format_perm( res.witness.perm, ',' ) << '\n';
      if ( cfg.stats )
      {
        auto const& c = res.counters;
        out << "# phase_after_cofactor=" << c.phase_after_cof
            << " phase_after_symmetry=" << c.phase_after_sym
            << " perm_after_cofactor=" << c.perm_after_cof
            << " perm_after_symmetry=" << c.perm_after_sym
            << " perm_after_influence=" << c.perm_after_inf
            << " phase_selected=" << c.phase_candidates_selected
            << " enumerations=" << c.final_enumerations << " groups=";
        for ( size_t i = 0u; i < res.group_sizes.size(); ++i )
        {
          out << ( i > 0u ? "," : "" ) << res.group_sizes[i];
        }
        out << '\n';
      }
    }
    catch ( std::invalid_argument const& e )
    {
      std::cerr << "npnkit canon: line " << item.line_no << ": " << e.what() << '\n';
      failed = true;
    }
  }
  return failed ? 1 : 0;
}

struct classify_config
{
  std::string input;
  std::string method{ "inf-plus" };
  canon_options options;
  uint32_t jobs{ 1u };
  std::string out_path;
  std::string stats_path;
};

int run_classify( classify_config const& cfg )
{
  auto report = read_input_functions( cfg.input );
  for ( auto const& e : report.errors )
  {
    std::cerr << "npnkit classify: skipped " << e << '\n';
  }

  std::vector<truth_table> tables;
  tables.reserve( report.functions.size() );
  for ( auto const& item : report.functions )
  {
    tables.push_back( item.table );
  }

  auto const result =
      classify( tables, method_from_name( cfg.method ), cfg.options, cfg.jobs );
  for ( auto const& e : result.errors )
  {
    std::cerr << "npnkit classify: skipped " << e << '\n';
  }

  std::ofstream file;
  auto& out = open_output( cfg.out_path, file );
  write_class_csv( out, result );

  auto const& s = result.stats;
  std::cerr << "npnkit classify: functions " << s.functions << ", classes " << s.classes
            << ", skipped " << ( report.errors.size() + result.errors.size() )
            << ", canonicalize " << s.canonicalize_seconds << " s, merge "
            << s.merge_seconds << " s\n";
  std::cerr << "npnkit classify: totals phase_selected " << s.totals.phase_candidates_selected
            << ", perm_after_influence " << s.totals.perm_after_inf << ", enumerations "
            << s.totals.final_enumerations << '\n';

  if ( !cfg.stats_path.empty() )
  {
    std::ofstream stats_file( cfg.stats_path );
    if ( !stats_file )
    {
      throw std::invalid_argument( "cannot open stats file: " + cfg.stats_path );
    }
    write_stats_jsonl( stats_file, s, cfg.method );
  }
  return 0;
}

struct cuts_config
{
  std::string input;
  uint32_t cut_size{ 8u };
  uint32_t cut_limit{ 64u };
  std::string out_path;
};

int run_cuts( cuts_config const& cfg )
{
  auto const a = read_input_aig( cfg.input );
  auto const functions = extract_functions( a, cfg.cut_size, cfg.cut_limit );
  std::ofstream file;
  auto& out = open_output( cfg.out_path, file );
  write_functions( out, functions );
  std::cerr << "npnkit cuts: " << functions.size() << " functions from " << a.gates.size()
            << " gates\n";
  return 0;
}

struct verify_config
{
  uint32_t inputs{ 4u };
  uint64_t samples{ 100u };
  uint64_t seed{ 1u };
  bool exhaustive{ false };
  canon_options options;
};

truth_table random_table( uint32_t num_vars, std::mt19937_64& rng )
{
  truth_table tt( num_vars );
  for ( auto& w : tt.words() )
  {
    w = rng();
  }
  tt.words()[0] &= tt.valid_mask();
  if ( num_vars >= 6u )
  {
    tt.words().back() &= tt.valid_mask();
  }
  return tt;
}

npn_transform random_transform( uint32_t num_vars, std::mt19937_64& rng )
{
  npn_transform t = npn_transform::identity( num_vars );
  std::shuffle( t.perm.begin(), t.perm.end(), rng );
  t.phase_mask =
      std::uniform_int_distribution<uint32_t>( 0u, ( 1u << num_vars ) - 1u )( rng );
  t.output_negated = std::uniform_int_distribution<uint32_t>( 0u, 1u )( rng ) != 0u;
  return t;
}

/*! \brief Checks that two per-function class keys induce the same
    partition of the same corpus. */
bool same_partition( std::vector<truth_table> const& a, std::vector<truth_table> const& b )
{
  std::map<truth_table, truth_table> fwd;
  std::map<truth_table, truth_table> bwd;
  for ( size_t i = 0u; i < a.size(); ++i )
  {
    auto const [it_f, new_f] = fwd.emplace( a[i], b[i] );
    auto const [it_b, new_b] = bwd.emplace( b[i], a[i] );
    if ( ( !new_f && it_f->second != b[i] ) || ( !new_b && it_b->second != a[i] ) )
    {
      return false;
    }
  }
  return true;
}

int run_verify( verify_config const& cfg )
{
  uint64_t violations = 0u;
  auto const n = cfg.inputs;
  if ( n == 0u || n > 16u )
  {
    throw std::invalid_argument( "--inputs must be between 1 and 16" );
  }

  std::vector<std::pair<std::string, canon_method>> methods{
      { "inf", canon_method::influence },
      { "inf-plus", canon_method::influence_plus },
      { "baseline", canon_method::baseline } };
  if ( cfg.exhaustive )
  {
    if ( n > cfg.options.exhaustive_cap )
    {
      throw std::invalid_argument( "--exhaustive requires --inputs <= the exhaustive cap" );
    }
    methods.insert( methods.begin(), { "exhaustive", canon_method::exhaustive } );
  }

  /* full enumeration of every n-input function when that is feasible */
  if ( n <= 3u || ( n == 4u && cfg.exhaustive ) )
  {
    uint64_t const total = uint64_t( 1 ) << ( uint64_t( 1 ) << n );
    std::vector<std::vector<truth_table>> keys( methods.size() );
    for ( size_t m = 0u; m < methods.size(); ++m )
    {
      keys[m].reserve( total );
      for ( uint64_t bits = 0u; bits < total; ++bits )
      {
        truth_table tt( n );
        tt.words()[0] = bits;
        keys[m].push_back( canonicalize( tt, methods[m].second, cfg.options ).canonical );
      }
    }
    std::map<truth_table, uint64_t> buckets;
    for ( auto const& k : keys[0] )
    {
      ++buckets[k];
    }
    std::cout << "verify: all " << total << " functions on " << n << " inputs form "
              << buckets.size() << " classes (" << methods[0].first << ")\n";
    for ( size_t m = 1u; m < methods.size(); ++m )
    {
      if ( !same_partition( keys[0], keys[m] ) )
      {
        std::cerr << "violation: methods " << methods[0].first << " and "
                  << methods[m].first << " disagree on the partition\n";
        ++violations;
      }
    }
    static std::map<uint32_t, uint64_t> const expected{ { 1u, 2u }, { 2u, 4u }, { 3u, 14u }, { 4u, 222u } };
    if ( buckets.size() != expected.at( n ) )
    {
      std::cerr << "violation: expected " << expected.at( n ) << " classes, found "
                << buckets.size() << '\n';
      ++violations;
    }
    else
    {
      std::cout << "verify: " << buckets.size() << " classes confirmed, all methods agree\n";
    }
  }

  std::mt19937_64 rng( cfg.seed );
  auto const half = uint64_t( 1 ) << ( n - 1u );
  for ( uint64_t sample = 0u; sample < cfg.samples; ++sample )
  {
    auto const f = random_table( n, rng );
    auto const t = random_transform( n, rng );
    auto const g = apply_transform( f, t );
    auto const complain = [&]( char const* what ) {
      std::cerr << "violation: " << what << " inputs=" << n << " seed=" << cfg.seed
                << " sample=" << sample << '\n';
      ++violations;
    };

    /* influence is untouched by input flips and output negation ... */
    uint32_t const mask =
        std::uniform_int_distribution<uint32_t>( 0u, ( 1u << n ) - 1u )( rng );
    if ( influences( flip_inputs( f, mask ) ) != influences( f ) )
    {
      complain( "influence changed under input negation" );
    }
    if ( influences( complement( f ) ) != influences( f ) )
    {
      complain( "influence changed under output negation" );
    }

    /* ... and carried along by permutations */
    auto inf_f = influences( f );
    auto inf_g = influences( g );
    std::sort( inf_f.begin(), inf_f.end() );
    std::sort( inf_g.begin(), inf_g.end() );
    if ( inf_f != inf_g )
    {
      complain( "influence multiset changed under a full transform" );
    }

    uint32_t const var = std::uniform_int_distribution<uint32_t>( 0u, n - 1u )( rng );
    if ( cofactor_count( complement( f ), var ) != half - cofactor_count( f, var ) )
    {
      complain( "cofactor count of the complement is off" );
    }

    if ( spectral_sum( permute_variables( f, t.perm ), cfg.options.spectral_base ) !=
         spectral_sum( f, cfg.options.spectral_base ) )
    {
      complain( "spectral sum changed under permutation" );
    }

    for ( auto const& [name, method] : methods )
    {
      auto const rf = canonicalize( f, method, cfg.options );
      auto const rg = canonicalize( g, method, cfg.options );
      if ( rf.canonical != rg.canonical )
      {
        std::cerr << "violation: class split under " << name << " inputs=" << n
                  << " seed=" << cfg.seed << " sample=" << sample << '\n';
        ++violations;
      }
      if ( apply_transform( f, rf.witness ) != rf.canonical )
      {
        std::cerr << "violation: witness does not reproduce the canonical form under "
                  << name << " inputs=" << n << " seed=" << cfg.seed
                  << " sample=" << sample << '\n';
        ++violations;
      }
    }
  }

  if ( violations != 0u )
  {
    std::cout << "FAIL: " << violations << " violations\n";
    return 1;
  }
  std::cout << "PASS: " << cfg.samples << " samples on " << n << " inputs, 0 violations\n";
  return 0;
}

struct bench_config
{
  std::string input;
  std::vector<std::string> methods{ "inf", "inf-plus", "baseline" };
  canon_options options;
  uint32_t jobs{ 1u };
  std::string out_path;
};

int run_bench( bench_config const& cfg )
{
  auto report = read_input_functions( cfg.input );
  for ( auto const& e : report.errors )
  {
    std::cerr << "npnkit bench: skipped " << e << '\n';
  }
  std::vector<truth_table> tables;
  tables.reserve( report.functions.size() );
  for ( auto const& item : report.functions )
  {
    tables.push_back( item.table );
  }

  std::ofstream file;
  auto& out = open_output( cfg.out_path, file );
  out << "# npnkit bench v1\n";
  out << "method,functions,classes,phase_selected,perm_after_influence,enumerations,seconds\n";

  std::optional<uint64_t> class_count;
  for ( auto const& name : cfg.methods )
  {
    auto const result = classify( tables, method_from_name( name ), cfg.options, cfg.jobs );
    for ( auto const& e : result.errors )
    {
      std::cerr << "npnkit bench: skipped " << e << '\n';
    }
    auto const& s = result.stats;
    char seconds[32];
    std::snprintf( seconds, sizeof seconds, "%.3f",
                   s.canonicalize_seconds + s.merge_seconds );
    out << name << ',' << s.functions << ',' << s.classes << ','
        << s.totals.phase_candidates_selected << ',' << s.totals.perm_after_inf << ','
        << s.totals.final_enumerations << ',' << seconds << '\n';
    if ( class_count && *class_count != s.classes )
    {
      throw std::logic_error( "methods disagree on the number of classes" );
    }
    class_count = s.classes;
  }
  return 0;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "npnkit: NPN canonical forms and classification for Boolean functions" };
  app.require_subcommand( 1 );

  auto const add_method = []( CLI::App* cmd, std::string& target ) {
    cmd->add_option( "--method", target, "canonicalization method" )
        ->check( CLI::IsMember( { "exhaustive", "inf", "inf-plus", "baseline" } ) )
        ->capture_default_str();
  };
  auto const add_options = []( CLI::App* cmd, canon_options& target ) {
    cmd->add_option( "--sers-base", target.spectral_base, "base of the spectral row sums" )
        ->check( CLI::Range( 2u, 16u ) )
        ->capture_default_str();
    cmd->add_option( "--exhaustive-cap", target.exhaustive_cap,
                     "largest input count the exhaustive method accepts" )
        ->check( CLI::Range( 1u, 16u ) )
        ->capture_default_str();
  };

  canon_config canon_cfg;
  auto* canon_cmd = app.add_subcommand( "canon", "canonicalize truth tables" );
  canon_cmd->add_option( "input", canon_cfg.input, "file of truth tables, - for stdin, or one hex table" )
      ->required();
  add_method( canon_cmd, canon_cfg.method );
  canon_cmd->add_option( "--inputs", canon_cfg.inputs, "input count of a single hex table" )
      ->check( CLI::Range( 1u, 16u ) );
  add_options( canon_cmd, canon_cfg.options );
  canon_cmd->add_flag( "--stats", canon_cfg.stats, "print per-stage counters" );
  canon_cmd->add_option( "--out", canon_cfg.out_path, "output file (default stdout)" );

  classify_config classify_cfg;
  auto* classify_cmd = app.add_subcommand( "classify", "bucket truth tables into NPN classes" );
  classify_cmd->add_option( "input", classify_cfg.input, "file of truth tables, - for stdin" )
      ->required();
  add_method( classify_cmd, classify_cfg.method );
  add_options( classify_cmd, classify_cfg.options );
  classify_cmd->add_option( "--jobs", classify_cfg.jobs, "worker threads" )
      ->check( CLI::Range( 1u, 256u ) )
      ->capture_default_str();
  classify_cmd->add_option( "--out", classify_cfg.out_path, "class CSV file (default stdout)" );
  classify_cmd->add_option( "--stats", classify_cfg.stats_path, "write run statistics (JSONL)" );

  cuts_config cuts_cfg;
  auto* cuts_cmd = app.add_subcommand( "cuts", "extract cut functions from an AIGER (ASCII) circuit" );
  cuts_cmd->add_option( "input", cuts_cfg.input, "circuit file (aag), - for stdin" )->required();
  cuts_cmd->add_option( "--cut-size", cuts_cfg.cut_size, "maximum leaves per cut" )
      ->check( CLI::Range( 2u, 16u ) )
      ->capture_default_str();
  cuts_cmd->add_option( "--cut-limit", cuts_cfg.cut_limit, "maximum cuts kept per node" )
      ->check( CLI::Range( 1u, 4096u ) )
      ->capture_default_str();
  cuts_cmd->add_option( "--out", cuts_cfg.out_path, "output file (default stdout)" );

  verify_config verify_cfg;
  auto* verify_cmd = app.add_subcommand( "verify", "run randomized self-checks" );
  verify_cmd->add_option( "--inputs", verify_cfg.inputs, "input count under test" )
      ->check( CLI::Range( 1u, 16u ) )
      ->capture_default_str();
  verify_cmd->add_option( "--samples", verify_cfg.samples, "randomized trials" )
      ->capture_default_str();
  verify_cmd->add_option( "--seed", verify_cfg.seed, "random seed" )->capture_default_str();
  verify_cmd->add_flag( "--exhaustive", verify_cfg.exhaustive,
                        "include the exhaustive method as an oracle" );
  add_options( verify_cmd, verify_cfg.options );

  bench_config bench_cfg;
  auto* bench_cmd = app.add_subcommand( "bench", "compare methods on one corpus" );
  bench_cmd->add_option( "input", bench_cfg.input, "file of truth tables, - for stdin" )
      ->required();
  bench_cmd
      ->add_option( "--method", bench_cfg.methods,
                    "methods to compare (repeatable; default inf inf-plus baseline)" )
      ->check( CLI::IsMember( { "exhaustive", "inf", "inf-plus", "baseline" } ) );
  add_options( bench_cmd, bench_cfg.options );
  bench_cmd->add_option( "--jobs", bench_cfg.jobs, "worker threads" )
      ->check( CLI::Range( 1u, 256u ) )
      ->capture_default_str();
  bench_cmd->add_option( "--out", bench_cfg.out_path, "comparison CSV file (default stdout)" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::ParseError const& e )
  {
    int const rc = app.exit( e );
    return rc == 0 ? 0 : 1;
  }

  try
  {
    if ( canon_cmd->parsed() )
    {
      return run_canon( canon_cfg );
    }
    if ( classify_cmd->parsed() )
    {
      return run_classify( classify_cfg );
    }
    if ( cuts_cmd->parsed() )
    {
      return run_cuts( cuts_cfg );
    }
    if ( verify_cmd->parsed() )
    {
      return run_verify( verify_cfg );
    }
    if ( bench_cmd->parsed() )
    {
      return run_bench( bench_cfg );
    }
  }
  catch ( std::invalid_argument const& e )
  {
    std::cerr << "npnkit: error: " << e.what() << '\n';
    return 1;
  }
  catch ( std::logic_error const& e )
  {
    std::cerr << "npnkit: internal error: " << e.what() << '\n';
    return 2;
  }
  catch ( std::exception const& e )
  {
    std::cerr << "npnkit: error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
