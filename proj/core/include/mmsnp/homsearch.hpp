#ifndef MMSNP_HOMSEARCH_HPP
#define MMSNP_HOMSEARCH_HPP

#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "mmsnp/types.hpp"

namespace mmsnp {

// Map source element -> target element preserving tau-tuples and colours
// (a coloured source element must land on an element of the same colour).
struct HomWitness {
    std::vector<int> map;
};

struct NeqInstance {
    FinStructure base;
    std::set<std::pair<int, int>> disequalities;  // unordered pairs, stored (min,max)
};

struct FreeCheck {
    bool free = true;
    int obstruction = -1;      // index of a violating obstruction when !free
    HomWitness witness;
};

std::optional<HomWitness> hom_exists(const FinStructure& a, const FinStructure& b,
                                     const Budget& budget = {});

FreeCheck check_free(const FinStructure& a, const std::vector<FinStructure>& obstructions,
                     const Budget& budget = {});
bool is_free(const FinStructure& a, const std::vector<FinStructure>& obstructions,
             const Budget& budget = {});

// Total obstruction-free colouring of a extending its partial colouring and
// any colours forced by precolour symbols of phi; nullopt when a !|= phi.
// phi must satisfy the structural normal-form items.
std::optional<std::vector<int>> model_check(const FinStructure& a, const Sentence& phi,
                                            const Budget& budget = {});

bool model_check_neq(const NeqInstance& inst, const Sentence& phi, const Budget& budget = {});

// Pull stream of the total obstruction-free colourings of a extending
// partial; exhaustive and duplicate-free. partial[e] = -1 means free.
class FreeColouringStream {
  public:
    FreeColouringStream(const FinStructure& a, const std::vector<FinStructure>& obstructions,
                        std::vector<int> partial, int colour_count, const Budget& budget = {});
    std::optional<std::vector<int>> next();

  private:
    FinStructure work_;
    const std::vector<FinStructure>* obstructions_;
    std::vector<unsigned> allowed_;  // per-element colour masks after unit pruning
    std::vector<int> order_;         // uncoloured elements in assignment order
    std::vector<int> cursor_;        // next colour to try per level
    int colour_count_ = 0;
    int level_ = 0;
    bool started_ = false;
    bool done_ = false;
    Budget budget_;
    long long nodes_ = 0;
    bool consistent_at(int level);
};

std::vector<std::vector<int>> all_free_colourings(const FinStructure& a,
                                                  const std::vector<FinStructure>& obstructions,
                                                  const std::vector<int>& partial, int colour_count,
                                                  const Budget& budget = {});

}  // namespace mmsnp

#endif
