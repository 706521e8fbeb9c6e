#pragma once

// Tokenizer shared by the formula, proof and BDD readers.

#include <cstddef>
#include <string>
#include <string_view>

namespace mall {

enum class TokenKind { LParen, RParen, Comma, Tilde, Ident, End };

struct Token {
    TokenKind kind;
    std::string_view text;
    std::size_t offset; // 0-based byte offset
};

class Lexer {
public:
    explicit Lexer(std::string_view input) : input_(input) { advance(); }

    const Token &peek() const noexcept { return current_; }
    Token next();

    /// Consume a token of the given kind or throw ParseError.
    Token expect(TokenKind kind, std::string_view what);
    /// Consume an identifier equal to `keyword`, or throw.
    void expect_keyword(std::string_view keyword);
    std::size_t expect_number();
    void expect_end();

    [[noreturn]] void fail(const Token &at, const std::string &message) const;

private:
    void advance();

    std::string_view input_;
    std::size_t pos_ = 0;
    Token current_{TokenKind::End, {}, 0};
};

std::string describe(const Token &t);

} // namespace mall
