#include "mmsnp/types.hpp"

#include <algorithm>
#include <set>

namespace mmsnp {

std::optional<int> Signature::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < symbols.size(); ++i)
        if (symbols[i].name == name) return static_cast<int>(i);
    return std::nullopt;
}

std::optional<int> Sentence::colour_index(std::string_view name) const {
    for (std::size_t i = 0; i < colours.size(); ++i)
        if (colours[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

bool FinStructure::totally_coloured() const {
    return std::ranges::all_of(colouring, [](int c) { return c >= 0; });
}

bool FinStructure::has_tuple(int symbol, const std::vector<int>& tuple) const {
    const auto& rel = relations[symbol];
    return std::binary_search(rel.begin(), rel.end(), tuple);
}

void FinStructure::add_tuple(int symbol, std::vector<int> tuple) {
    auto& rel = relations[symbol];
    auto it = std::lower_bound(rel.begin(), rel.end(), tuple);
    if (it == rel.end() || *it != tuple) rel.insert(it, std::move(tuple));
}

void FinStructure::normalise_relations() {
    for (auto& rel : relations) {
        std::sort(rel.begin(), rel.end());
        rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
    }
}

FinStructure FinStructure::empty(Signature sig, std::vector<std::string> colour_set) {
    FinStructure a;
    a.relations.resize(sig.symbols.size());
    a.sig = std::move(sig);
    a.colour_set = std::move(colour_set);
    return a;
}

bool RecolouringMap::injective() const {
    std::set<int> seen(map.begin(), map.end());
    return seen.size() == map.size();
}

std::size_t ColourFunction::cell_count() const {
    std::size_t n = 1;
    for (int i = 0; i < arity; ++i) n *= static_cast<std::size_t>(colour_count);
    return n;
}

std::size_t ColourFunction::cell_index(const std::vector<int>& args) const {
    std::size_t idx = 0;
    for (int a : args) idx = idx * static_cast<std::size_t>(colour_count) + static_cast<std::size_t>(a);
    return idx;
}

bool ColourFunction::well_formed() const {
    if (arity < 1 || colour_count < 1) return false;
    if (table.size() != cell_count()) return false;
    return std::ranges::all_of(table, [&](int v) { return v >= 0 && v < colour_count; });
}

bool ColourFunction::idempotent() const {
    std::vector<int> args(static_cast<std::size_t>(arity));
    for (int m = 0; m < colour_count; ++m) {
        std::fill(args.begin(), args.end(), m);
        if (apply(args) != m) return false;
    }
    return true;
}

bool valid_identifier(std::string_view name) {
    if (name.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    for (char c : name)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

std::vector<Diagnostic> validate(const Sentence& s) {
    std::vector<Diagnostic> out;
    std::set<std::string> names;
    for (const auto& sym : s.tau.symbols) {
        if (!valid_identifier(sym.name))
            out.push_back({"invalid symbol name '" + sym.name + "'"});
        if (!names.insert(sym.name).second)
            out.push_back({"duplicate symbol name '" + sym.name + "'"});
        if (sym.arity < 1)
            out.push_back({"symbol '" + sym.name + "' has arity " + std::to_string(sym.arity) +
                           "; relation symbols need arity >= 1"});
    }
    std::set<std::string> colour_names;
    for (const auto& c : s.colours) {
        if (!valid_identifier(c)) out.push_back({"invalid colour name '" + c + "'"});
        if (!colour_names.insert(c).second) out.push_back({"duplicate colour name '" + c + "'"});
        if (names.count(c)) out.push_back({"colour '" + c + "' clashes with a signature symbol"});
    }
    for (std::size_t ci = 0; ci < s.clauses.size(); ++ci) {
        const Clause& cl = s.clauses[ci];
        const std::string where = "clause " + std::to_string(ci + 1);
        if (cl.var_count < 0 || cl.var_names.size() != static_cast<std::size_t>(cl.var_count))
            out.push_back({where + ": variable table inconsistent"});
        std::vector<bool> used(static_cast<std::size_t>(std::max(cl.var_count, 0)), false);
        for (const auto& at : cl.atoms) {
            if (at.symbol < 0 || at.symbol >= static_cast<int>(s.tau.symbols.size())) {
                out.push_back({where + ": atom uses undeclared symbol"});
                continue;
            }
            if (static_cast<int>(at.vars.size()) != s.tau.symbols[at.symbol].arity)
                out.push_back({where + ": atom " + s.tau.symbols[at.symbol].name + "/" +
                               std::to_string(s.tau.symbols[at.symbol].arity) + " applied to " +
                               std::to_string(at.vars.size()) + " arguments"});
            for (int v : at.vars) {
                if (v < 0 || v >= cl.var_count)
                    out.push_back({where + ": atom references unknown variable"});
                else
                    used[static_cast<std::size_t>(v)] = true;
            }
        }
        for (const auto& lit : cl.literals) {
            if (lit.colour < 0 || lit.colour >= static_cast<int>(s.colours.size()))
                out.push_back({where + ": literal uses undeclared colour"});
            if (lit.var < 0 || lit.var >= cl.var_count)
                out.push_back({where + ": literal references unknown variable"});
            else
                used[static_cast<std::size_t>(lit.var)] = true;
        }
        for (int v = 0; v < cl.var_count; ++v)
            if (!used[static_cast<std::size_t>(v)])
                out.push_back({where + ": variable '" + cl.var_names[static_cast<std::size_t>(v)] +
                               "' occurs in no atom or literal"});
    }
    return out;
}

}  // namespace mmsnp
