#include "mmsnp/structure_ops.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mmsnp {

FinStructure disjoint_union(const FinStructure& a, const FinStructure& b) {
    if (a.sig != b.sig) throw std::invalid_argument("disjoint_union: signature mismatch");
    if (a.colour_set != b.colour_set) throw std::invalid_argument("disjoint_union: colour-set mismatch");
    FinStructure out = FinStructure::empty(a.sig, a.colour_set);
    std::set<std::string> names;
    auto fresh = [&](const std::string& base) {
        std::string n = base;
        while (!names.insert(n).second) n += "_";
        return n;
    };
    for (int e = 0; e < a.size(); ++e) {
        out.element_names.push_back(fresh(a.element_names[static_cast<std::size_t>(e)]));
        out.colouring.push_back(a.colouring[static_cast<std::size_t>(e)]);
    }
    const int off = a.size();
    for (int e = 0; e < b.size(); ++e) {
        out.element_names.push_back(fresh(b.element_names[static_cast<std::size_t>(e)]));
        out.colouring.push_back(b.colouring[static_cast<std::size_t>(e)]);
    }
    for (std::size_t s = 0; s < a.relations.size(); ++s) {
        for (const auto& t : a.relations[s]) out.add_tuple(static_cast<int>(s), t);
        for (const auto& t : b.relations[s]) {
            std::vector<int> nt = t;
            for (auto& v : nt) v += off;
            out.add_tuple(static_cast<int>(s), std::move(nt));
        }
    }
    return out;
}

QuotientStream::QuotientStream(const FinStructure& a) : a_(&a) {
    if (!a.totally_coloured())
        throw std::invalid_argument("quotients: structure must be totally coloured");
    std::vector<std::vector<int>> bycolour(a.colour_set.size());
    for (int e = 0; e < a.size(); ++e) bycolour[static_cast<std::size_t>(a.colouring[static_cast<std::size_t>(e)])].push_back(e);
    for (auto& g : bycolour)
        if (!g.empty()) groups_.push_back(std::move(g));
    rgs_.resize(groups_.size());
    for (std::size_t i = 0; i < groups_.size(); ++i) {
        rgs_[i].resize(groups_[i].size());
        std::iota(rgs_[i].begin(), rgs_[i].end(), 0);  // all singletons first
    }
}

// Next restricted-growth string per group, treating the tuple of groups as a
// mixed-radix counter. Strings are enumerated in reverse-lex order from the
// identity (all singletons) down to the all-merged string.
bool QuotientStream::advance() {
    for (std::size_t gi = 0; gi < rgs_.size(); ++gi) {
        auto& r = rgs_[gi];
        int n = static_cast<int>(r.size());
        int k = n - 1;
        for (; k >= 1; --k) {
            if (r[static_cast<std::size_t>(k)] > 0) break;
        }
        if (k >= 1) {
            r[static_cast<std::size_t>(k)] -= 1;
            int mx = 0;
            for (int j = 0; j <= k; ++j) mx = std::max(mx, r[static_cast<std::size_t>(j)]);
            for (int j = k + 1; j < n; ++j) {
                r[static_cast<std::size_t>(j)] = mx + 1;
                ++mx;
            }
            return true;
        }
        // group exhausted: reset to identity, carry to next group
        std::iota(r.begin(), r.end(), 0);
    }
    return false;
}

FinStructure QuotientStream::build() const {
    const FinStructure& a = *a_;
    std::vector<int> block(static_cast<std::size_t>(a.size()), -1);
    int blocks = 0;
    for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
        int local = 1 + *std::max_element(rgs_[gi].begin(), rgs_[gi].end());
        for (std::size_t j = 0; j < groups_[gi].size(); ++j)
            block[static_cast<std::size_t>(groups_[gi][j])] = blocks + rgs_[gi][j];
        blocks += local;
    }
    return quotient_by(a, block, blocks);
}

std::optional<FinStructure> QuotientStream::next() {
    if (done_) return std::nullopt;
    FinStructure out = build();
    if (!advance()) done_ = true;
    return out;
}

std::vector<FinStructure> all_quotients(const FinStructure& a) {
    QuotientStream qs(a);
    std::vector<FinStructure> out;
    while (auto q = qs.next()) out.push_back(std::move(*q));
    return out;
}

FinStructure quotient_by(const FinStructure& a, const std::vector<int>& block_of, int block_count) {
    FinStructure out = FinStructure::empty(a.sig, a.colour_set);
    out.element_names.resize(static_cast<std::size_t>(block_count));
    out.colouring.assign(static_cast<std::size_t>(block_count), -1);
    for (int e = 0; e < a.size(); ++e) {
        int b = block_of[static_cast<std::size_t>(e)];
        if (out.element_names[static_cast<std::size_t>(b)].empty())
            out.element_names[static_cast<std::size_t>(b)] = a.element_names[static_cast<std::size_t>(e)];
        int c = a.colouring[static_cast<std::size_t>(e)];
        if (out.colouring[static_cast<std::size_t>(b)] == -1) out.colouring[static_cast<std::size_t>(b)] = c;
        else if (c != -1 && out.colouring[static_cast<std::size_t>(b)] != c)
            throw std::invalid_argument("quotient_by: blocks must be colour-homogeneous");
    }
    for (std::size_t s = 0; s < a.relations.size(); ++s)
        for (const auto& t : a.relations[s]) {
            std::vector<int> nt = t;
            for (auto& v : nt) v = block_of[static_cast<std::size_t>(v)];
            out.add_tuple(static_cast<int>(s), std::move(nt));
        }
    return out;
}

std::vector<int> component_labels(const FinStructure& a) {
    std::vector<int> parent(static_cast<std::size_t>(a.size()));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int x, int y) { parent[static_cast<std::size_t>(find(x))] = find(y); };
    for (const auto& rel : a.relations)
        for (const auto& t : rel)
            for (std::size_t i = 1; i < t.size(); ++i) unite(t[0], t[i]);
    std::vector<int> label(static_cast<std::size_t>(a.size()));
    std::vector<int> remap(static_cast<std::size_t>(a.size()), -1);
    int next = 0;
    for (int e = 0; e < a.size(); ++e) {
        int r = find(e);
        if (remap[static_cast<std::size_t>(r)] == -1) remap[static_cast<std::size_t>(r)] = next++;
        label[static_cast<std::size_t>(e)] = remap[static_cast<std::size_t>(r)];
    }
    return label;
}

int component_count(const FinStructure& a) {
    auto l = component_labels(a);
    return l.empty() ? 0 : 1 + *std::max_element(l.begin(), l.end());
}

}  // namespace mmsnp
