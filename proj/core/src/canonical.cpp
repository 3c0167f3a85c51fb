#include "mmsnp/canonical.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace mmsnp {

namespace {

// One refinement round: a node's signature is its class plus, for every
// occurrence in an edge, the edge type, the occurrence position and the
// classes of all nodes in that edge.
std::vector<int> refine(const IncidenceGraph& g, std::vector<int> classes) {
    const int n = g.n;
    for (;;) {
        std::vector<std::vector<std::vector<int>>> occ(static_cast<std::size_t>(n));
        for (const auto& e : g.edges) {
            for (std::size_t pos = 0; pos < e.nodes.size(); ++pos) {
                std::vector<int> sig;
                sig.push_back(e.type);
                sig.push_back(static_cast<int>(pos));
                for (int v : e.nodes) sig.push_back(classes[static_cast<std::size_t>(v)]);
                occ[static_cast<std::size_t>(e.nodes[pos])].push_back(std::move(sig));
            }
        }
        std::vector<std::pair<std::vector<std::vector<int>>, int>> keyed(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& o = occ[static_cast<std::size_t>(v)];
            std::sort(o.begin(), o.end());
            o.insert(o.begin(), {classes[static_cast<std::size_t>(v)]});
            keyed[static_cast<std::size_t>(v)] = {std::move(o), v};
        }
        auto sorted = keyed;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(static_cast<std::size_t>(n));
        int cls = -1;
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (i == 0 || sorted[i].first != sorted[i - 1].first) ++cls;
            next[static_cast<std::size_t>(sorted[i].second)] = cls;
        }
        if (next == classes) return classes;
        classes = std::move(next);
    }
}

bool discrete(const std::vector<int>& classes) {
    std::vector<int> seen(classes.size(), 0);
    for (int c : classes) {
        if (seen[static_cast<std::size_t>(c)]++) return false;
    }
    return true;
}

// Flat encoding of the graph under a permutation (new->old); used to pick the
// lexicographically least leaf of the individualization tree.
std::vector<long long> encode(const IncidenceGraph& g, const std::vector<int>& perm) {
    const int n = g.n;
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    std::vector<long long> out;
    for (int i = 0; i < n; ++i) out.push_back(g.labels[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
    std::vector<std::vector<long long>> edges;
    for (const auto& e : g.edges) {
        std::vector<long long> t;
        t.push_back(e.type);
        for (int v : e.nodes) t.push_back(pos[static_cast<std::size_t>(v)]);
        edges.push_back(std::move(t));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const auto& t : edges) {
        out.push_back(-1);
        out.insert(out.end(), t.begin(), t.end());
    }
    return out;
}

void search(const IncidenceGraph& g, std::vector<int> classes, std::vector<long long>& best,
            std::vector<int>& best_perm) {
    classes = refine(g, classes);
    if (discrete(classes)) {
        std::vector<int> perm(static_cast<std::size_t>(g.n));
        for (int v = 0; v < g.n; ++v) perm[static_cast<std::size_t>(classes[static_cast<std::size_t>(v)])] = v;
        auto enc = encode(g, perm);
        if (best_perm.empty() || enc < best) {
            best = std::move(enc);
            best_perm = std::move(perm);
        }
        return;
    }
    // smallest non-singleton class, individualize each member
    std::map<int, std::vector<int>> byclass;
    for (int v = 0; v < g.n; ++v) byclass[classes[static_cast<std::size_t>(v)]].push_back(v);
    for (const auto& [cls, members] : byclass) {
        if (members.size() < 2) continue;
        for (int m : members) {
            auto next = classes;
            for (int v = 0; v < g.n; ++v) next[static_cast<std::size_t>(v)] *= 2;
            next[static_cast<std::size_t>(m)] -= 1;
            search(g, std::move(next), best, best_perm);
        }
        return;
    }
}

}  // namespace

std::vector<int> canonical_order(const IncidenceGraph& g) {
    if (g.n == 0) return {};
    std::vector<long long> best;
    std::vector<int> best_perm;
    search(g, g.labels, best, best_perm);
    return best_perm;
}

namespace {

IncidenceGraph clause_graph(const Clause& c) {
    IncidenceGraph g;
    g.n = c.var_count;
    // node label: rank of the sorted (colour, sign) literal multiset
    std::vector<std::vector<std::pair<int, int>>> lits(static_cast<std::size_t>(c.var_count));
    for (const auto& l : c.literals)
        lits[static_cast<std::size_t>(l.var)].push_back({l.colour, l.positive ? 1 : 0});
    for (auto& v : lits) std::sort(v.begin(), v.end());
    auto sorted = lits;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    g.labels.resize(static_cast<std::size_t>(c.var_count));
    for (int v = 0; v < c.var_count; ++v) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), lits[static_cast<std::size_t>(v)]);
        g.labels[static_cast<std::size_t>(v)] = static_cast<int>(it - sorted.begin());
    }
    for (const auto& at : c.atoms) g.edges.push_back({at.symbol, at.vars});
    return g;
}

}  // namespace

Clause canonical_clause_form(const Clause& c) {
    auto perm = canonical_order(clause_graph(c));
    std::vector<int> pos(static_cast<std::size_t>(c.var_count));
    for (int i = 0; i < c.var_count; ++i) pos[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    Clause out;
    out.var_count = c.var_count;
    out.var_names.resize(static_cast<std::size_t>(c.var_count));
    for (int i = 0; i < c.var_count; ++i) out.var_names[static_cast<std::size_t>(i)] = "v" + std::to_string(i + 1);
    for (const auto& at : c.atoms) {
        TauAtom a = at;
        for (auto& v : a.vars) v = pos[static_cast<std::size_t>(v)];
        out.atoms.push_back(std::move(a));
    }
    std::sort(out.atoms.begin(), out.atoms.end());
    out.atoms.erase(std::unique(out.atoms.begin(), out.atoms.end()), out.atoms.end());
    for (const auto& l : c.literals) {
        ColourLiteral nl = l;
        nl.var = pos[static_cast<std::size_t>(l.var)];
        out.literals.push_back(nl);
    }
    std::sort(out.literals.begin(), out.literals.end(),
              [](const ColourLiteral& a, const ColourLiteral& b) {
                  return std::tie(a.var, a.colour, a.positive) < std::tie(b.var, b.colour, b.positive);
              });
    out.literals.erase(std::unique(out.literals.begin(), out.literals.end()), out.literals.end());
    return out;
}

std::string clause_key(const Clause& c) {
    Clause k = canonical_clause_form(c);
    std::ostringstream os;
    os << k.var_count << ";";
    for (const auto& a : k.atoms) {
        os << "A" << a.symbol;
        for (int v : a.vars) os << "," << v;
        os << ";";
    }
    for (const auto& l : k.literals) os << "L" << l.colour << "," << l.var << "," << (l.positive ? 1 : 0) << ";";
    return os.str();
}

namespace {

IncidenceGraph structure_graph(const FinStructure& a, int root) {
    IncidenceGraph g;
    g.n = a.size();
    g.labels.resize(static_cast<std::size_t>(g.n));
    for (int e = 0; e < g.n; ++e) {
        int label = a.colouring[static_cast<std::size_t>(e)] + 1;
        if (e == root) label += 1 + static_cast<int>(a.colour_set.size());
        g.labels[static_cast<std::size_t>(e)] = label;
    }
    for (std::size_t s = 0; s < a.relations.size(); ++s)
        for (const auto& t : a.relations[s]) g.edges.push_back({static_cast<int>(s), t});
    return g;
}

}  // namespace

FinStructure canonical_structure(const FinStructure& a, int root) {
    auto perm = canonical_order(structure_graph(a, root));
    std::vector<int> pos(static_cast<std::size_t>(a.size()));
    for (int i = 0; i < a.size(); ++i) pos[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    FinStructure out = FinStructure::empty(a.sig, a.colour_set);
    out.element_names.resize(static_cast<std::size_t>(a.size()));
    out.colouring.resize(static_cast<std::size_t>(a.size()), -1);
    for (int i = 0; i < a.size(); ++i) {
        out.element_names[static_cast<std::size_t>(i)] = "e" + std::to_string(i + 1);
        out.colouring[static_cast<std::size_t>(i)] = a.colouring[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    }
    for (std::size_t s = 0; s < a.relations.size(); ++s)
        for (const auto& t : a.relations[s]) {
            std::vector<int> nt = t;
            for (auto& v : nt) v = pos[static_cast<std::size_t>(v)];
            out.add_tuple(static_cast<int>(s), std::move(nt));
        }
    return out;
}

std::string structure_key(const FinStructure& a, int root) {
    FinStructure k = canonical_structure(a, root);
    std::ostringstream os;
    os << k.size() << ";";
    for (int c : k.colouring) os << c << ",";
    os << ";";
    for (std::size_t s = 0; s < k.relations.size(); ++s)
        for (const auto& t : k.relations[s]) {
            os << "R" << s;
            for (int v : t) os << "," << v;
            os << ";";
        }
    if (root >= 0) os << "@";
    return os.str();
}

bool iso_equal(const FinStructure& a, const FinStructure& b) {
    if (a.sig != b.sig || a.colour_set != b.colour_set || a.size() != b.size()) return false;
    return structure_key(a) == structure_key(b);
}

}  // namespace mmsnp
