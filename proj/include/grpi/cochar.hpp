#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "grpi/pi.hpp"

namespace grpi {

/// Weakly decreasing positive parts. Helpers validate on entry.
using Partition = std::vector<std::size_t>;

/// All partitions of n, descending lexicographic, (n) first and (1,...,1) last.
std::vector<Partition> partitions_of(std::size_t n);

/// Irreducible symmetric-group character value at a cycle type, by recursive
/// border-strip removal over first-column hook numbers. Memoized.
long long sn_character(const Partition& lambda, const Partition& mu);

/// Order of the centralizer quotient: the number of permutations with cycle
/// type mu inside S_n where n = |mu|.
std::size_t class_size(const Partition& mu);

/// One permutation of {0..n-1} with the given cycle type, cycles laid out left
/// to right.
std::vector<std::size_t> class_representative(const Partition& mu);

/// Trace of the variable permutation x_v -> x_{perm[v]} on the span of words
/// modulo identities. Blocks whose degree tuple moves contribute nothing; for
/// a stable block each pivot word is relabeled, re-expanded over the pivot
/// basis, and its own coefficient collected.
Rational quotient_trace(const QuotientModel& model, const std::vector<std::size_t>& perm);
Rational quotient_trace(AlgebraPtr a, const OperatorSpan& h, std::size_t n, bool graded,
                        const std::vector<std::size_t>& perm);

struct CocharacterResult {
    std::size_t n = 0;
    /// Nonzero multiplicities only, in partitions_of(n) order.
    std::vector<std::pair<Partition, std::size_t>> multiplicities;
    std::size_t colength = 0;   // sum of multiplicities
    std::size_t dim_check = 0;  // sum of mult * irreducible dimension; equals c_n

    [[nodiscard]] std::size_t multiplicity(const Partition& lambda) const;
};

/// Expands the permutation character of the word quotient into irreducibles:
/// m(lambda) = (1/n!) sum over cycle types of class size * trace * character.
/// Every multiplicity is checked integral and nonnegative, and the weighted
/// dimension sum is checked against the quotient dimension; a violation is a
/// CheckError.
CocharacterResult cocharacter(const QuotientModel& model);
CocharacterResult cocharacter(AlgebraPtr a, const OperatorSpan& h, std::size_t n, bool graded,
                              bool associative = true);

}
