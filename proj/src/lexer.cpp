#include "mall/lexer.hpp"

#include <cctype>

#include "mall/error.hpp"

namespace mall {

namespace {

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

} // namespace

std::string describe(const Token &t) {
    switch(t.kind) {
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Comma: return "','";
    case TokenKind::Tilde: return "'~'";
    case TokenKind::Ident: return "'" + std::string(t.text) + "'";
    case TokenKind::End: return "end of input";
    }
    return "?";
}

void Lexer::advance() {
    while(pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_])))
        ++pos_;
    if(pos_ == input_.size()) {
        current_ = {TokenKind::End, {}, pos_};
        return;
    }
    const std::size_t start = pos_;
    const char c = input_[pos_];
    switch(c) {
    case '(': ++pos_; current_ = {TokenKind::LParen, input_.substr(start, 1), start}; return;
    case ')': ++pos_; current_ = {TokenKind::RParen, input_.substr(start, 1), start}; return;
    case ',': ++pos_; current_ = {TokenKind::Comma, input_.substr(start, 1), start}; return;
    case '~': ++pos_; current_ = {TokenKind::Tilde, input_.substr(start, 1), start}; return;
    default: break;
    }
    if(!ident_char(c))
        throw ParseError(start + 1, std::string("unexpected character '") + c + "'");
    while(pos_ < input_.size() && ident_char(input_[pos_]))
        ++pos_;
    current_ = {TokenKind::Ident, input_.substr(start, pos_ - start), start};
}

Token Lexer::next() {
    Token t = current_;
    if(t.kind != TokenKind::End)
        advance();
    return t;
}

void Lexer::fail(const Token &at, const std::string &message) const {
    throw ParseError(at.offset + 1, message);
}

Token Lexer::expect(TokenKind kind, std::string_view what) {
    if(current_.kind != kind)
        fail(current_, "expected " + std::string(what) + ", found " + describe(current_));
    return next();
}

void Lexer::expect_keyword(std::string_view keyword) {
    if(current_.kind != TokenKind::Ident || current_.text != keyword)
        fail(current_, "expected '" + std::string(keyword) + "', found " + describe(current_));
    next();
}

std::size_t Lexer::expect_number() {
    const Token t = current_;
    if(t.kind != TokenKind::Ident)
        fail(t, "expected a position, found " + describe(t));
    std::size_t value = 0;
    for(char c : t.text) {
        if(!std::isdigit(static_cast<unsigned char>(c)))
            fail(t, "expected a position, found " + describe(t));
        value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    next();
    return value;
}

void Lexer::expect_end() {
    if(current_.kind != TokenKind::End)
        fail(current_, "trailing input " + describe(current_));
}

} // namespace mall
