#pragma once

#include <string>
#include <vector>

#include "sdl/errors.hpp"

namespace sdl {

enum class TokenKind : int {
    Keyword,       // expression keywords (and, some, ...) and frame keywords (Class:, ...)
    QuotedName,    // text stored without the surrounding quotes
    SimpleName,
    PrefixedName,  // pfx:local, or :local for the default prefix
    IriRef,        // <...>, text stored without the angle brackets
    Integer,
    Punctuation,   // ( ) { } ,
    StringLiteral, // text stored unescaped
    Comment,       // '#' to end of line, text without the '#'
};

struct Token {
    TokenKind kind = TokenKind::Punctuation;
    std::string text;  // semantic value (quotes/brackets/escapes stripped)
    std::string raw;   // exact source spelling
    int line = 1;      // of the first character
    int column = 1;
};

/// Expression keywords; frame keywords are any word followed directly by ':'
/// and then a non-name character (e.g. `Class:` but not `owl:Thing`).
bool is_reserved_word(const std::string& word);

/// Splits `text` into tokens, including comment tokens. Whitespace is the
/// only material not represented in the result.
/// Throws LexError (with `file` in the location) on unterminated quoted
/// names, unterminated string literals, or stray bytes.
std::vector<Token> tokenize(const std::string& text, const std::string& file = "<input>");

}  // namespace sdl
