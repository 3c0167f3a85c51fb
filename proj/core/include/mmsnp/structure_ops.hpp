#ifndef MMSNP_STRUCTURE_OPS_HPP
#define MMSNP_STRUCTURE_OPS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "mmsnp/types.hpp"

namespace mmsnp {

// Tagged union: relations and colourings copied, no cross tuples. Throws
// std::invalid_argument on signature or colour-set mismatch.
FinStructure disjoint_union(const FinStructure& a, const FinStructure& b);

// Enumerates, for a totally coloured structure, every quotient by a partition
// with colour-homogeneous blocks. The trivial partition (a itself) comes
// first. Single-consumer pull stream.
class QuotientStream {
  public:
    explicit QuotientStream(const FinStructure& a);
    std::optional<FinStructure> next();

  private:
    const FinStructure* a_;
    std::vector<std::vector<int>> groups_;   // elements grouped by colour
    std::vector<std::vector<int>> rgs_;      // restricted-growth string per group
    bool done_ = false;
    bool advance();
    FinStructure build() const;
};

std::vector<FinStructure> all_quotients(const FinStructure& a);

// Gaifman connectivity on tau-tuples; isolated elements count as components.
int component_count(const FinStructure& a);
std::vector<int> component_labels(const FinStructure& a);

// Quotient of a by an explicit block assignment (element -> block id).
// Blocks must be colour-homogeneous when the structure is coloured.
FinStructure quotient_by(const FinStructure& a, const std::vector<int>& block_of, int block_count);

}  // namespace mmsnp

#endif
