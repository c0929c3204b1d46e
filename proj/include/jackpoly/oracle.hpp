#pragma once

#include <map>
#include <span>
#include <vector>

#include "jackpoly/partition.hpp"
#include "jackpoly/symmetric.hpp"

// Jack polynomials built from their defining properties alone: orthogonality
// under the alpha-deformed scalar product, dominance triangularity in the
// m-basis, and the m_{1^N} coefficient N!. Shares no code with the
// creation-operator pipeline.

namespace jackpoly {

using JackTable = std::map<Partition, MExpansion, DescendingLex>;

/// Partitions of N ordered so that mu < lambda in dominance implies mu comes
/// first: reversed descending-lexicographic order.
std::vector<Partition> ascending_lex_extension(unsigned degree);
/// A second such order: descending lexicographic on conjugate partitions.
std::vector<Partition> conjugate_lex_extension(unsigned degree);

/// Gram-Schmidt over the given linear extension of dominance (smallest first),
/// then rescaled so that the m_{1^N} coefficient is N!. Throws
/// PreconditionViolated if `order` is not such an extension, DegenerateGram if
/// a pivot norm vanishes, and NonzeroRemainder if a final coefficient fails to
/// clear its denominator.
JackTable gram_schmidt_jack(unsigned degree, std::span<const Partition> order);
JackTable gram_schmidt_jack(unsigned degree);

/// Pairwise orthogonality, triangularity and normalization of the oracle
/// output for degree N.
bool verify_oracle_self(unsigned degree);

}  // namespace jackpoly
