#include "sdl/lexer.hpp"

#include <array>
#include <cctype>

namespace sdl {

namespace {

bool is_name_start(unsigned char c) {
    return std::isalpha(c) || c == '_' || c >= 0x80;  // UTF-8 continuation/lead bytes allowed
}

bool is_name_char(unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-' || c == '.' || c >= 0x80;
}

const std::array<const char*, 11> kReserved = {
    "and", "or", "not", "some", "only", "min", "max", "exactly", "value", "inverse", "that",
};

class Cursor {
public:
    Cursor(const std::string& text, std::string file)
        : text_(text), file_(std::move(file)) {}

    bool done() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    SourceLoc loc() const { return {file_, line_, col_}; }
    std::size_t pos() const { return pos_; }
    std::string slice(std::size_t from) const { return text_.substr(from, pos_ - from); }

private:
    const std::string& text_;
    std::string file_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

}  // namespace

bool is_reserved_word(const std::string& word) {
    for (const char* r : kReserved)
        if (word == r) return true;
    return false;
}

std::vector<Token> tokenize(const std::string& text, const std::string& file) {
    std::vector<Token> out;
    Cursor cur(text, file);

    auto push = [&](TokenKind kind, std::string value, std::string raw, SourceLoc at) {
        Token t;
        t.kind = kind;
        t.text = std::move(value);
        t.raw = std::move(raw);
        t.line = at.line;
        t.column = at.column;
        out.push_back(std::move(t));
    };

    while (!cur.done()) {
        char c = cur.peek();
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
            cur.advance();
            continue;
        }
        SourceLoc at = cur.loc();
        std::size_t start = cur.pos();

        if (c == '#') {
            cur.advance();
            std::string body;
            while (!cur.done() && cur.peek() != '\n') body += cur.advance();
            push(TokenKind::Comment, body, cur.slice(start), at);
            continue;
        }
        if (c == '\'') {
            cur.advance();
            std::string body;
            while (true) {
                if (cur.done() || cur.peek() == '\n')
                    throw LexError("unterminated quoted name", at);
                char q = cur.advance();
                if (q == '\'') break;
                body += q;
            }
            push(TokenKind::QuotedName, body, cur.slice(start), at);
            continue;
        }
        if (c == '"') {
            cur.advance();
            std::string body;
            while (true) {
                if (cur.done()) throw LexError("unterminated string literal", at);
                char q = cur.advance();
                if (q == '"') break;
                if (q == '\\') {
                    if (cur.done()) throw LexError("unterminated string literal", at);
                    char esc = cur.advance();
                    switch (esc) {
                        case 'n': body += '\n'; break;
                        case 't': body += '\t'; break;
                        case '\\': body += '\\'; break;
                        case '"': body += '"'; break;
                        default:
                            body += '\\';
                            body += esc;
                    }
                } else {
                    body += q;
                }
            }
            push(TokenKind::StringLiteral, body, cur.slice(start), at);
            continue;
        }
        if (c == '<') {
            cur.advance();
            std::string body;
            while (true) {
                if (cur.done() || cur.peek() == '\n')
                    throw LexError("unterminated IRI reference", at);
                char q = cur.advance();
                if (q == '>') break;
                if (q == ' ' || q == '\t')
                    throw LexError("whitespace inside IRI reference", at);
                body += q;
            }
            push(TokenKind::IriRef, body, cur.slice(start), at);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.advance();
            std::string raw = cur.slice(start);
            push(TokenKind::Integer, raw, raw, at);
            continue;
        }
        if (is_name_start(static_cast<unsigned char>(c))) {
            while (!cur.done() && is_name_char(static_cast<unsigned char>(cur.peek()))) cur.advance();
            std::string word = cur.slice(start);
            if (cur.peek() == ':') {
                if (is_name_start(static_cast<unsigned char>(cur.peek(1)))) {
                    // pfx:local
                    cur.advance();  // ':'
                    while (!cur.done() && is_name_char(static_cast<unsigned char>(cur.peek())))
                        cur.advance();
                    std::string raw = cur.slice(start);
                    push(TokenKind::PrefixedName, raw, raw, at);
                } else {
                    // frame keyword or prefix-declaration name: `Class:` / `skos:`
                    cur.advance();  // ':'
                    std::string raw = cur.slice(start);
                    push(TokenKind::Keyword, raw, raw, at);
                }
                continue;
            }
            push(is_reserved_word(word) ? TokenKind::Keyword : TokenKind::SimpleName, word, word, at);
            continue;
        }
        if (c == ':' && is_name_start(static_cast<unsigned char>(cur.peek(1)))) {
            // :local with the default prefix
            cur.advance();
            while (!cur.done() && is_name_char(static_cast<unsigned char>(cur.peek()))) cur.advance();
            std::string raw = cur.slice(start);
            push(TokenKind::PrefixedName, raw, raw, at);
            continue;
        }
        if (c == '(' || c == ')' || c == '{' || c == '}' || c == ',' || c == ':') {
            cur.advance();
            std::string raw(1, c);
            push(TokenKind::Punctuation, raw, raw, at);
            continue;
        }
        throw LexError(std::string("unexpected character '") + c + "'", at);
    }
    return out;
}

}  // namespace sdl
