#include "mmsnp/textio.hpp"

#include <json.hpp>

#include <cctype>
#include <map>
#include <sstream>

namespace mmsnp {

std::string ParseError::pretty() const {
    std::ostringstream os;
    os << "parse error at line " << span.line << ", column " << span.column << ": " << what();
    if (!expected.empty()) os << " (expected " << expected << ")";
    return os.str();
}

namespace {

struct Token {
    enum Kind { Ident, Number, LBrace, RBrace, LParen, RParen, Comma, Slash, Minus, Equals, End } kind;
    std::string text;
    SourceSpan span;
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) { next(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        next();
        return t;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_;

    void advance_char() {
        if (pos_ < text_.size() && text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance_char();
        SourceSpan sp{pos_, pos_, line_, col_};
        if (pos_ >= text_.size()) {
            tok_ = {Token::End, "", sp};
            return;
        }
        char c = text_[pos_];
        auto single = [&](Token::Kind k) {
            advance_char();
            sp.end = pos_;
            tok_ = {k, std::string(1, c), sp};
        };
        if (c == '{') return single(Token::LBrace);
        if (c == '}') return single(Token::RBrace);
        if (c == '(') return single(Token::LParen);
        if (c == ')') return single(Token::RParen);
        if (c == ',') return single(Token::Comma);
        if (c == '/') return single(Token::Slash);
        if (c == '-') return single(Token::Minus);
        if (c == '=') return single(Token::Equals);
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string s;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                s += text_[pos_];
                advance_char();
            }
            sp.end = pos_;
            tok_ = {Token::Number, s, sp};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string s;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                s += text_[pos_];
                advance_char();
            }
            sp.end = pos_;
            tok_ = {Token::Ident, s, sp};
            return;
        }
        advance_char();
        sp.end = pos_;
        throw ParseError("unexpected character '" + std::string(1, c) + "'", sp);
    }
};

Token expect(Lexer& lex, Token::Kind kind, const std::string& what) {
    Token t = lex.take();
    if (t.kind != kind)
        throw ParseError("unexpected token '" + (t.kind == Token::End ? "<end>" : t.text) + "'", t.span, what);
    return t;
}

Token expect_keyword(Lexer& lex, const std::string& kw) {
    Token t = lex.take();
    if (t.kind != Token::Ident || t.text != kw)
        throw ParseError("unexpected token '" + (t.kind == Token::End ? "<end>" : t.text) + "'", t.span,
                         "'" + kw + "'");
    return t;
}

void reject_equality(Lexer& lex) {
    if (lex.peek().kind == Token::Equals)
        throw ParseError("equality not permitted", lex.peek().span);
}

}  // namespace

Sentence parse_sentence(std::string_view text) {
    Lexer lex(text);
    Sentence s;

    expect_keyword(lex, "signature");
    expect(lex, Token::LBrace, "'{'");
    if (lex.peek().kind != Token::RBrace) {
        for (;;) {
            Token name = expect(lex, Token::Ident, "symbol name");
            expect(lex, Token::Slash, "'/'");
            Token ar = expect(lex, Token::Number, "arity");
            s.tau.symbols.push_back({name.text, std::stoi(ar.text)});
            if (lex.peek().kind == Token::Comma) {
                lex.take();
                continue;
            }
            break;
        }
    }
    expect(lex, Token::RBrace, "'}'");

    expect_keyword(lex, "colors");
    expect(lex, Token::LBrace, "'{'");
    if (lex.peek().kind != Token::RBrace) {
        for (;;) {
            Token name = expect(lex, Token::Ident, "colour name");
            s.colours.push_back(name.text);
            if (lex.peek().kind == Token::Comma) {
                lex.take();
                continue;
            }
            break;
        }
    }
    expect(lex, Token::RBrace, "'}'");

    while (lex.peek().kind != Token::End) {
        expect_keyword(lex, "forbid");
        expect(lex, Token::LBrace, "'{'");
        Clause cl;
        std::map<std::string, int> vars;
        auto var_id = [&](const Token& v) {
            auto it = vars.find(v.text);
            if (it != vars.end()) return it->second;
            int id = cl.var_count++;
            cl.var_names.push_back(v.text);
            vars.emplace(v.text, id);
            return id;
        };
        if (lex.peek().kind != Token::RBrace) {
            for (;;) {
                bool negative = false;
                if (lex.peek().kind == Token::Minus) {
                    lex.take();
                    negative = true;
                }
                Token name = expect(lex, Token::Ident, "symbol or colour name");
                expect(lex, Token::LParen, "'('");
                std::vector<Token> args;
                for (;;) {
                    reject_equality(lex);
                    args.push_back(expect(lex, Token::Ident, "variable"));
                    reject_equality(lex);
                    if (lex.peek().kind == Token::Comma) {
                        lex.take();
                        continue;
                    }
                    break;
                }
                expect(lex, Token::RParen, "')'");
                auto colour = s.colour_index(name.text);
                if (colour) {
                    if (args.size() != 1)
                        throw ParseError("colour literal '" + name.text + "' takes one variable", name.span);
                    cl.literals.push_back({*colour, var_id(args[0]), !negative});
                } else {
                    auto sym = s.tau.index_of(name.text);
                    if (!sym)
                        throw ParseError("unknown symbol '" + name.text + "'", name.span);
                    if (negative)
                        throw ParseError("negation applies to colour literals only", name.span);
                    if (static_cast<int>(args.size()) != s.tau.symbols[static_cast<std::size_t>(*sym)].arity)
                        throw ParseError("symbol '" + name.text + "' has arity " +
                                             std::to_string(s.tau.symbols[static_cast<std::size_t>(*sym)].arity),
                                         name.span);
                    TauAtom at;
                    at.symbol = *sym;
                    for (auto& a : args) at.vars.push_back(var_id(a));
                    cl.atoms.push_back(std::move(at));
                }
                reject_equality(lex);
                if (lex.peek().kind == Token::Comma) {
                    lex.take();
                    continue;
                }
                break;
            }
        }
        expect(lex, Token::RBrace, "'}'");
        s.clauses.push_back(std::move(cl));
    }
    return s;
}

std::string print_sentence(const Sentence& s) {
    std::ostringstream os;
    os << "signature {";
    for (std::size_t i = 0; i < s.tau.symbols.size(); ++i)
        os << (i ? ", " : " ") << s.tau.symbols[i].name << "/" << s.tau.symbols[i].arity;
    os << (s.tau.symbols.empty() ? "}" : " }") << "\n";
    os << "colors {";
    for (std::size_t i = 0; i < s.colours.size(); ++i) os << (i ? ", " : " ") << s.colours[i];
    os << (s.colours.empty() ? "}" : " }") << "\n";
    for (const auto& cl : s.clauses) {
        os << "forbid {";
        bool first = true;
        for (const auto& l : cl.literals) {
            os << (first ? " " : ", ") << (l.positive ? "" : "-") << s.colours[static_cast<std::size_t>(l.colour)]
               << "(" << cl.var_names[static_cast<std::size_t>(l.var)] << ")";
            first = false;
        }
        for (const auto& at : cl.atoms) {
            os << (first ? " " : ", ") << s.tau.symbols[static_cast<std::size_t>(at.symbol)].name << "(";
            for (std::size_t i = 0; i < at.vars.size(); ++i)
                os << (i ? "," : "") << cl.var_names[static_cast<std::size_t>(at.vars[i])];
            os << ")";
            first = false;
        }
        os << (first ? "}" : " }") << "\n";
    }
    return os.str();
}

FinStructure parse_structure(std::string_view text, const Sentence& against) {
    return parse_structure(text, against.tau, against.colours);
}

FinStructure parse_structure(std::string_view text, const Signature& sig,
                             const std::vector<std::string>& colour_set) {
    Lexer lex(text);
    FinStructure a = FinStructure::empty(sig, colour_set);
    expect_keyword(lex, "structure");
    expect(lex, Token::LBrace, "'{'");
    expect_keyword(lex, "domain");
    expect(lex, Token::LBrace, "'{'");
    std::map<std::string, int> elems;
    if (lex.peek().kind != Token::RBrace) {
        for (;;) {
            Token name = expect(lex, Token::Ident, "element name");
            if (elems.count(name.text))
                throw ParseError("duplicate element '" + name.text + "'", name.span);
            elems.emplace(name.text, a.size());
            a.element_names.push_back(name.text);
            a.colouring.push_back(-1);
            if (lex.peek().kind == Token::Comma) {
                lex.take();
                continue;
            }
            break;
        }
    }
    expect(lex, Token::RBrace, "'}'");

    auto elem_id = [&](const Token& t) {
        auto it = elems.find(t.text);
        if (it == elems.end()) throw ParseError("unknown element '" + t.text + "'", t.span);
        return it->second;
    };

    while (lex.peek().kind != Token::RBrace) {
        Token head = expect(lex, Token::Ident, "fact");
        if (head.text == "colour") {
            Token cname = expect(lex, Token::Ident, "colour name");
            auto ci = [&]() -> int {
                for (std::size_t i = 0; i < colour_set.size(); ++i)
                    if (colour_set[i] == cname.text) return static_cast<int>(i);
                throw ParseError("unknown colour '" + cname.text + "'", cname.span);
            }();
            expect(lex, Token::LParen, "'('");
            Token el = expect(lex, Token::Ident, "element");
            expect(lex, Token::RParen, "')'");
            int e = elem_id(el);
            if (a.colouring[static_cast<std::size_t>(e)] != -1 && a.colouring[static_cast<std::size_t>(e)] != ci)
                throw ParseError("element '" + el.text + "' doubly coloured", el.span);
            a.colouring[static_cast<std::size_t>(e)] = ci;
            continue;
        }
        auto sym = sig.index_of(head.text);
        if (!sym) throw ParseError("unknown symbol '" + head.text + "'", head.span);
        expect(lex, Token::LParen, "'('");
        std::vector<int> tuple;
        for (;;) {
            Token el = expect(lex, Token::Ident, "element");
            tuple.push_back(elem_id(el));
            if (lex.peek().kind == Token::Comma) {
                lex.take();
                continue;
            }
            break;
        }
        expect(lex, Token::RParen, "')'");
        if (static_cast<int>(tuple.size()) != sig.symbols[static_cast<std::size_t>(*sym)].arity)
            throw ParseError("symbol '" + head.text + "' has arity " +
                                 std::to_string(sig.symbols[static_cast<std::size_t>(*sym)].arity),
                             head.span);
        a.add_tuple(*sym, std::move(tuple));
    }
    expect(lex, Token::RBrace, "'}'");
    if (lex.peek().kind != Token::End)
        throw ParseError("trailing input after structure", lex.peek().span);
    return a;
}

std::string print_structure(const FinStructure& a) {
    std::ostringstream os;
    os << "structure {\n  domain {";
    for (int e = 0; e < a.size(); ++e) os << (e ? ", " : " ") << a.element_names[static_cast<std::size_t>(e)];
    os << (a.size() ? " }" : "}") << "\n";
    // facts ordered by leading element, then colour fact, then symbol, then tuple
    for (int e = 0; e < a.size(); ++e) {
        if (a.colouring[static_cast<std::size_t>(e)] >= 0)
            os << "  colour " << a.colour_set[static_cast<std::size_t>(a.colouring[static_cast<std::size_t>(e)])]
               << "(" << a.element_names[static_cast<std::size_t>(e)] << ")\n";
        for (std::size_t s = 0; s < a.relations.size(); ++s)
            for (const auto& t : a.relations[s]) {
                if (t.empty() || t[0] != e) continue;
                os << "  " << a.sig.symbols[s].name << "(";
                for (std::size_t i = 0; i < t.size(); ++i)
                    os << (i ? "," : "") << a.element_names[static_cast<std::size_t>(t[i])];
                os << ")\n";
            }
    }
    os << "}\n";
    return os.str();
}

std::string report_to_json(const ClassificationReport& report, bool explain) {
    nlohmann::json j;
    j["components"] = nlohmann::json::array();
    for (const auto& comp : report.components) {
        nlohmann::json c;
        c["sentence"] = print_sentence(comp.component);
        c["verdict"] = comp.verdict;
        nlohmann::json w;
        if (comp.siggers) {
            w["kind"] = "siggers";
            w["arity"] = comp.siggers->arity;
            w["colours"] = comp.precoloured.colours;
            if (explain) {
                nlohmann::json cells = nlohmann::json::array();
                const auto& h = *comp.siggers;
                std::vector<int> args(static_cast<std::size_t>(h.arity), 0);
                for (std::size_t idx = 0; idx < h.table.size(); ++idx) {
                    nlohmann::json cell;
                    cell["args"] = args;
                    cell["value"] = h.table[idx];
                    cells.push_back(std::move(cell));
                    for (int i = h.arity - 1; i >= 0; --i) {
                        if (++args[static_cast<std::size_t>(i)] < h.colour_count) break;
                        args[static_cast<std::size_t>(i)] = 0;
                    }
                }
                w["cells"] = std::move(cells);
            }
        } else if (comp.subfactor) {
            w["kind"] = "trivial-subfactor";
            if (explain) {
                w["rho"] = comp.subfactor->carrier;
                w["S"] = comp.subfactor->s_block;
                w["T"] = comp.subfactor->t_block;
            }
        }
        c["witness"] = std::move(w);
        nlohmann::json st;
        st["cegar_iterations"] = comp.cegar_iterations;
        st["learned_clauses"] = comp.learned_clauses;
        c["stats"] = std::move(st);
        j["components"].push_back(std::move(c));
    }
    j["overall"] = report.overall;
    j["caveats"] = report.caveats;
    return j.dump(2);
}

}  // namespace mmsnp
