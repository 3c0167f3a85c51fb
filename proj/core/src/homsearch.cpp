#include "mmsnp/homsearch.hpp"

#include <algorithm>
#include <stdexcept>

#include "mmsnp/normalform.hpp"

namespace mmsnp {

namespace {

bool colour_sets_compatible(const FinStructure& a, const FinStructure& b) {
    if (a.colour_set == b.colour_set) return true;
    auto uncoloured = [](const FinStructure& x) {
        return std::ranges::all_of(x.colouring, [](int c) { return c == -1; });
    };
    return uncoloured(a) || uncoloured(b);
}

struct HomSearcher {
    const FinStructure& a;
    const FinStructure& b;
    const Budget& budget;
    long long nodes = 0;

    std::vector<std::pair<int, std::vector<int>>> tuples;   // flattened tuples of a
    std::vector<std::vector<int>> touching;                 // element -> tuple indices
    std::vector<std::vector<int>> cands;
    std::vector<int> order;
    std::vector<int> map;

    HomSearcher(const FinStructure& a, const FinStructure& b, const Budget& budget)
        : a(a), b(b), budget(budget) {
        touching.resize(static_cast<std::size_t>(a.size()));
        for (std::size_t s = 0; s < a.relations.size(); ++s)
            for (const auto& t : a.relations[s]) {
                int idx = static_cast<int>(tuples.size());
                tuples.push_back({static_cast<int>(s), t});
                for (int e : t) {
                    auto& lst = touching[static_cast<std::size_t>(e)];
                    if (lst.empty() || lst.back() != idx) lst.push_back(idx);
                }
            }
        cands.resize(static_cast<std::size_t>(a.size()));
        for (int e = 0; e < a.size(); ++e) {
            int c = a.colouring[static_cast<std::size_t>(e)];
            for (int t = 0; t < b.size(); ++t)
                if (c == -1 || b.colouring[static_cast<std::size_t>(t)] == c)
                    cands[static_cast<std::size_t>(e)].push_back(t);
        }
        order.resize(static_cast<std::size_t>(a.size()));
        for (int e = 0; e < a.size(); ++e) order[static_cast<std::size_t>(e)] = e;
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
            return cands[static_cast<std::size_t>(x)].size() < cands[static_cast<std::size_t>(y)].size();
        });
        map.assign(static_cast<std::size_t>(a.size()), -1);
    }

    bool consistent(int e) {
        for (int ti : touching[static_cast<std::size_t>(e)]) {
            const auto& [sym, t] = tuples[static_cast<std::size_t>(ti)];
            std::vector<int> image;
            image.reserve(t.size());
            bool complete = true;
            for (int v : t) {
                int m = map[static_cast<std::size_t>(v)];
                if (m == -1) {
                    complete = false;
                    break;
                }
                image.push_back(m);
            }
            if (complete && !b.has_tuple(sym, image)) return false;
        }
        return true;
    }

    bool dfs(std::size_t level) {
        if (level == order.size()) return true;
        int e = order[level];
        for (int t : cands[static_cast<std::size_t>(e)]) {
            if (++nodes > budget.max_search_nodes)
                throw BudgetError("hom_exists: node budget exceeded");
            map[static_cast<std::size_t>(e)] = t;
            if (consistent(e) && dfs(level + 1)) return true;
            map[static_cast<std::size_t>(e)] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<HomWitness> hom_exists(const FinStructure& a, const FinStructure& b, const Budget& budget) {
    if (a.sig != b.sig) throw std::invalid_argument("hom_exists: signature mismatch");
    if (!colour_sets_compatible(a, b)) throw std::invalid_argument("hom_exists: colour-set mismatch");
    HomSearcher hs(a, b, budget);
    if (hs.dfs(0)) return HomWitness{hs.map};
    return std::nullopt;
}

FreeCheck check_free(const FinStructure& a, const std::vector<FinStructure>& obstructions,
                     const Budget& budget) {
    for (std::size_t i = 0; i < obstructions.size(); ++i) {
        if (auto w = hom_exists(obstructions[i], a, budget))
            return {false, static_cast<int>(i), std::move(*w)};
    }
    return {};
}

bool is_free(const FinStructure& a, const std::vector<FinStructure>& obstructions, const Budget& budget) {
    return check_free(a, obstructions, budget).free;
}

FreeColouringStream::FreeColouringStream(const FinStructure& a,
                                         const std::vector<FinStructure>& obstructions,
                                         std::vector<int> partial, int colour_count,
                                         const Budget& budget)
    : work_(a), obstructions_(&obstructions), budget_(budget) {
    if (partial.size() != static_cast<std::size_t>(a.size()))
        throw std::invalid_argument("free_colourings: partial colouring size mismatch");
    for (int e = 0; e < a.size(); ++e) {
        int have = a.colouring[static_cast<std::size_t>(e)];
        int want = partial[static_cast<std::size_t>(e)];
        if (have != -1 && want != -1 && have != want)
            throw std::invalid_argument("free_colourings: partial colouring conflicts with structure");
        work_.colouring[static_cast<std::size_t>(e)] = have != -1 ? have : want;
    }
    colour_count_ = colour_count;
    // unit pruning from single-element obstructions
    allowed_.assign(static_cast<std::size_t>(a.size()), (colour_count >= 31) ? ~0u : ((1u << colour_count) - 1));
    for (const auto& f : obstructions) {
        if (f.size() != 1) continue;
        bool loops_needed_ok = true;
        for (int e = 0; e < a.size() && loops_needed_ok; ++e) {
            bool present = true;
            for (std::size_t s = 0; s < f.relations.size() && present; ++s)
                for (const auto& t : f.relations[s]) {
                    std::vector<int> here(t.size(), e);
                    if (!work_.has_tuple(static_cast<int>(s), here)) {
                        present = false;
                        break;
                    }
                }
            if (present && f.colouring[0] >= 0 && f.colouring[0] < colour_count)
                allowed_[static_cast<std::size_t>(e)] &= ~(1u << f.colouring[0]);
        }
    }
    for (int e = 0; e < a.size(); ++e)
        if (work_.colouring[static_cast<std::size_t>(e)] == -1) order_.push_back(e);
    std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) {
        return std::popcount(allowed_[static_cast<std::size_t>(x)]) <
               std::popcount(allowed_[static_cast<std::size_t>(y)]);
    });
    cursor_.assign(order_.size(), 0);
}

bool FreeColouringStream::consistent_at(int) {
    for (const auto& f : *obstructions_)
        if (hom_exists(f, work_, budget_)) return false;
    return true;
}

std::optional<std::vector<int>> FreeColouringStream::next() {
    if (done_) return std::nullopt;
    const int k = static_cast<int>(order_.size());
    if (!started_) {
        started_ = true;
        if (!consistent_at(-1)) {  // the given partial already violates
            done_ = true;
            return std::nullopt;
        }
        if (k == 0) {
            done_ = true;
            return work_.colouring;
        }
    } else if (level_ == k) {
        // resume after an emitted solution
        --level_;
        work_.colouring[static_cast<std::size_t>(order_[static_cast<std::size_t>(level_)])] = -1;
    }
    while (true) {
        if (cursor_[static_cast<std::size_t>(level_)] >= colour_count_) {
            cursor_[static_cast<std::size_t>(level_)] = 0;
            if (level_ == 0) {
                done_ = true;
                return std::nullopt;
            }
            --level_;
            work_.colouring[static_cast<std::size_t>(order_[static_cast<std::size_t>(level_)])] = -1;
            continue;
        }
        int c = cursor_[static_cast<std::size_t>(level_)]++;
        int e = order_[static_cast<std::size_t>(level_)];
        if (!(allowed_[static_cast<std::size_t>(e)] & (1u << c))) continue;
        if (++nodes_ > budget_.max_search_nodes)
            throw BudgetError("free_colourings: node budget exceeded");
        work_.colouring[static_cast<std::size_t>(e)] = c;
        if (!consistent_at(level_)) {
            work_.colouring[static_cast<std::size_t>(e)] = -1;
            continue;
        }
        ++level_;
        if (level_ == k) return work_.colouring;
    }
}

std::vector<std::vector<int>> all_free_colourings(const FinStructure& a,
                                                  const std::vector<FinStructure>& obstructions,
                                                  const std::vector<int>& partial, int colour_count,
                                                  const Budget& budget) {
    FreeColouringStream fs(a, obstructions, partial, colour_count, budget);
    std::vector<std::vector<int>> out;
    while (auto c = fs.next()) out.push_back(std::move(*c));
    return out;
}

std::optional<std::vector<int>> model_check(const FinStructure& a, const Sentence& phi,
                                            const Budget& budget) {
    if (!is_normal_form_structural(phi))
        throw std::invalid_argument("model_check: sentence not in (structural) normal form");
    if (a.sig != phi.tau) throw std::invalid_argument("model_check: signature mismatch");
    if (!a.colour_set.empty() && a.colour_set != phi.colours)
        throw std::invalid_argument("model_check: colour-set mismatch");
    FinStructure inst = a;
    inst.colour_set = phi.colours;
    ObstructionSet obs = obstruction_set(phi);
    FreeColouringStream fs(inst, obs.structures, inst.colouring, static_cast<int>(phi.colours.size()),
                           budget);
    return fs.next();
}

bool model_check_neq(const NeqInstance& inst, const Sentence& phi, const Budget& budget) {
    for (const auto& [x, y] : inst.disequalities)
        if (x == y) return false;  // a conjunct x != x makes the instance unsatisfiable
    return model_check(inst.base, phi, budget).has_value();
}

}  // namespace mmsnp
