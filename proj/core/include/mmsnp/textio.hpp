#ifndef MMSNP_TEXTIO_HPP
#define MMSNP_TEXTIO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "mmsnp/types.hpp"

namespace mmsnp {

struct SourceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
    int line = 1;
    int column = 1;
};

class ParseError : public std::runtime_error {
  public:
    ParseError(std::string message, SourceSpan span, std::string expected = "")
        : std::runtime_error(message), span(span), expected(std::move(expected)) {}
    SourceSpan span;
    std::string expected;

    std::string pretty() const;
};

// Sentence file grammar (UTF-8):
//   signature { NAME/ARITY (, NAME/ARITY)* }
//   colors { NAME (, NAME)* }
//   forbid { LITERAL (, LITERAL)* }      one per clause, repeated
//   LITERAL := NAME(VAR,...,VAR) | COLOUR(VAR) | -COLOUR(VAR)
// Empty braces are accepted for signature and colors.
Sentence parse_sentence(std::string_view text);
std::string print_sentence(const Sentence& s);

// Structure file grammar:
//   structure { domain { NAME,... } FACT... }
//   FACT := NAME(ELEM,...) | colour COLOUR(ELEM)
// The sentence provides the signature and colour set.
FinStructure parse_structure(std::string_view text, const Sentence& against);
FinStructure parse_structure(std::string_view text, const Signature& sig,
                             const std::vector<std::string>& colour_set);
std::string print_structure(const FinStructure& a);

std::string report_to_json(const ClassificationReport& report, bool explain);

}  // namespace mmsnp

#endif
