#ifndef BDC_CLI_BATCH_HPP
#define BDC_CLI_BATCH_HPP

#include <iosfwd>

#include "bdc/cli/compute.hpp"

namespace bdc::cli {

/// Reads one instance JSON per line and writes one result (or error object)
/// per line, in input order at any job count. Blank lines are skipped.
/// Returns the number of lines that produced an error object.
std::size_t run_batch(std::istream& in, std::ostream& out, const ComputeOptions& options, std::size_t jobs);

}  // namespace bdc::cli

#endif  // BDC_CLI_BATCH_HPP
