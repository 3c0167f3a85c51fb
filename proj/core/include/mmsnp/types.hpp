#ifndef MMSNP_TYPES_HPP
#define MMSNP_TYPES_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmsnp {

struct Symbol {
    std::string name;
    int arity = 1;

    friend bool operator==(const Symbol&, const Symbol&) = default;
};

// Relational input signature tau. Symbol names are unique; arity-0 symbols
// are rejected by validate().
struct Signature {
    std::vector<Symbol> symbols;

    std::optional<int> index_of(std::string_view name) const;
    int arity(int symbol) const { return symbols[symbol].arity; }
    friend bool operator==(const Signature&, const Signature&) = default;
};

struct TauAtom {
    int symbol = 0;
    std::vector<int> vars;

    friend bool operator==(const TauAtom&, const TauAtom&) = default;
    friend auto operator<=>(const TauAtom&, const TauAtom&) = default;
};

struct ColourLiteral {
    int colour = 0;
    int var = 0;
    bool positive = true;

    friend bool operator==(const ColourLiteral&, const ColourLiteral&) = default;
    friend auto operator<=>(const ColourLiteral&, const ColourLiteral&) = default;
};

// One negated conjunct not(alpha and beta): atoms is alpha, literals is beta.
// Variables are interned as 0..var_count-1; var_names holds display names.
struct Clause {
    int var_count = 0;
    std::vector<std::string> var_names;
    std::vector<TauAtom> atoms;
    std::vector<ColourLiteral> literals;

    bool same_shape(const Clause& o) const {
        return var_count == o.var_count && atoms == o.atoms && literals == o.literals;
    }
    friend bool operator==(const Clause&, const Clause&) = default;
};

struct Sentence {
    Signature tau;
    std::vector<std::string> colours;
    std::vector<Clause> clauses;

    std::optional<int> colour_index(std::string_view name) const;
    friend bool operator==(const Sentence&, const Sentence&) = default;
};

// Finite (tau u sigma)-structure with an optional partial colouring.
// Doubles as coloured obstruction and as CSP instance. relations[s] is a
// sorted, deduplicated list of tuples for symbol s; colouring[e] is the
// colour of element e or -1.
struct FinStructure {
    Signature sig;
    std::vector<std::string> colour_set;
    std::vector<std::string> element_names;
    std::vector<std::vector<std::vector<int>>> relations;
    std::vector<int> colouring;

    int size() const { return static_cast<int>(element_names.size()); }
    bool totally_coloured() const;
    bool has_tuple(int symbol, const std::vector<int>& tuple) const;
    void add_tuple(int symbol, std::vector<int> tuple);
    void normalise_relations();

    static FinStructure empty(Signature sig, std::vector<std::string> colour_set);
    friend bool operator==(const FinStructure&, const FinStructure&) = default;
};

// Candidate containment witness r: source_colours -> target_colours.
struct RecolouringMap {
    std::vector<std::string> source_colours;
    std::vector<std::string> target_colours;
    std::vector<int> map;

    bool total() const {
        if (map.size() != source_colours.size()) return false;
        for (int m : map)
            if (m < 0 || m >= static_cast<int>(target_colours.size())) return false;
        return true;
    }
    bool injective() const;
    friend bool operator==(const RecolouringMap&, const RecolouringMap&) = default;
};

// Total operation table sigma^k -> sigma, stored in mixed-radix order with
// the first argument most significant.
struct ColourFunction {
    int arity = 1;
    int colour_count = 1;
    std::vector<int> table;

    std::size_t cell_index(const std::vector<int>& args) const;
    int apply(const std::vector<int>& args) const { return table[cell_index(args)]; }
    std::size_t cell_count() const;
    bool well_formed() const;
    bool idempotent() const;

    friend bool operator==(const ColourFunction&, const ColourFunction&) = default;
};

// Two-class quotient {S, T} of a preserved subset rho of the colours.
struct Subfactor {
    std::vector<std::string> carrier;
    std::vector<std::string> s_block;
    std::vector<std::string> t_block;
};

struct ComponentReport {
    Sentence component;                     // strong normal form of the component
    Sentence precoloured;                   // its standard precolouration
    std::string verdict;                    // "P" or "NP-complete"
    std::optional<ColourFunction> siggers;  // witness when verdict is P
    std::optional<Subfactor> subfactor;     // witness when verdict is NP-complete
    long long cegar_iterations = 0;
    long long learned_clauses = 0;
    bool pruned = false;                    // contained in another component
};

struct ClassificationReport {
    std::vector<ComponentReport> components;  // retained components only
    std::string overall;
    std::vector<std::string> caveats;
    bool multi_component_caveat = false;
};

struct Diagnostic {
    std::string message;
};

struct Budget {
    long long max_search_nodes = 200'000'000;
    int max_clauses = 20'000;
    long long max_cegar_iterations = 200'000;
    long long max_table_nodes = 500'000'000;
};

class BudgetError : public std::runtime_error {
  public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Structural validity of a sentence: declared symbols with matching arities,
// declared colours, names of colours disjoint from tau, every variable used.
std::vector<Diagnostic> validate(const Sentence& s);

bool valid_identifier(std::string_view name);

}  // namespace mmsnp

#endif
