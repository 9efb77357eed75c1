#include "slcs/parser.hpp"

#include <cctype>
#include <optional>
#include <string>

#include "slcs/color.hpp"
#include "slcs/errors.hpp"

namespace slcs {

namespace {

enum class Tok { End, LParen, RParen, Bang, Amp, Pipe, Word, Color };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t column = 1;
};

std::optional<Op> unary_keyword(const std::string& w) {
    if (w == "N") return Op::Near;
    if (w == "I") return Op::Interior;
    if (w == "B") return Op::Boundary;
    if (w == "Bi") return Op::IBoundary;
    if (w == "Bp") return Op::CBoundary;
    if (w == "G") return Op::Global;
    if (w == "F") return Op::Future;
    return std::nullopt;
}

std::optional<Op> binary_keyword(const std::string& w) {
    if (w == "U") return Op::Until;
    if (w == "R") return Op::Reach;
    return std::nullopt;
}

bool is_reserved(const std::string& w) {
    return w == "top" || w == "bot" || unary_keyword(w) || binary_keyword(w);
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        Token t;
        t.column = pos_ + 1;
        if (pos_ >= text_.size()) return t;
        const char c = text_[pos_];
        switch (c) {
        case '(': ++pos_; t.kind = Tok::LParen; return t;
        case ')': ++pos_; t.kind = Tok::RParen; return t;
        case '!': ++pos_; t.kind = Tok::Bang; return t;
        case '&': ++pos_; t.kind = Tok::Amp; return t;
        case '|': ++pos_; t.kind = Tok::Pipe; return t;
        default: break;
        }
        if (!ident_start(c)) throw ParseError(std::string("unknown operator '") + c + "'", t.column);
        const std::size_t start = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
        t.text = std::string(text_.substr(start, pos_ - start));
        t.kind = Tok::Word;
        if (t.text == "color") {
            std::size_t look = pos_;
            while (look < text_.size() && std::isspace(static_cast<unsigned char>(text_[look]))) ++look;
            if (look < text_.size() && text_[look] == '(') {
                pos_ = look;
                t.text = lex_color();
                t.kind = Tok::Color;
            }
        }
        return t;
    }

private:
    // At '('; reads three channel ranges and the closing ')'.
    std::string lex_color() {
        ++pos_;
        ColorPredicate p;
        ChannelRange* channels[3] = {&p.r, &p.g, &p.b};
        for (int i = 0; i < 3; ++i) {
            if (i > 0) expect_char(',', "',' between color channels");
            *channels[i] = read_range();
        }
        expect_char(')', "')' to close color(...)");
        return p.atom_name();
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect_char(char c, const char* what) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) throw ParseError(std::string("expected ") + what, pos_ + 1);
        ++pos_;
    }

    unsigned read_int() {
        skip_space();
        const std::size_t start = pos_;
        unsigned value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + static_cast<unsigned>(text_[pos_] - '0');
            if (value > 255) throw ParseError("color channel value above 255", start + 1);
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected a channel value", start + 1);
        return value;
    }

    ChannelRange read_range() {
        skip_space();
        const std::size_t column = pos_ + 1;
        const unsigned lo = read_int();
        unsigned hi = lo;
        skip_space();
        if (text_.substr(pos_, 2) == "..") {
            pos_ += 2;
            hi = read_int();
        }
        if (lo > hi) throw ParseError("empty channel range", column);
        return {static_cast<std::uint8_t>(lo), static_cast<std::uint8_t>(hi)};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { advance(); }

    Formula parse() {
        Formula f = parse_until();
        if (current_.kind != Tok::End) unexpected("end of formula");
        return f;
    }

private:
    void advance() { current_ = lexer_.next(); }

    [[noreturn]] void unexpected(const char* wanted) {
        std::string found;
        switch (current_.kind) {
        case Tok::End: found = "end of input"; break;
        case Tok::LParen: found = "'('"; break;
        case Tok::RParen: found = "')'"; break;
        case Tok::Bang: found = "'!'"; break;
        case Tok::Amp: found = "'&'"; break;
        case Tok::Pipe: found = "'|'"; break;
        case Tok::Word:
        case Tok::Color: found = "'" + current_.text + "'"; break;
        }
        throw ParseError(std::string("expected ") + wanted + ", found " + found, current_.column);
    }

    Formula parse_until() {
        Formula lhs = parse_or();
        if (current_.kind == Tok::Word) {
            if (auto op = binary_keyword(current_.text)) {
                advance();
                return Formula::binary(*op, lhs, parse_until());
            }
        }
        return lhs;
    }

    Formula parse_or() {
        Formula f = parse_and();
        while (current_.kind == Tok::Pipe) {
            advance();
            f = Formula::disj(f, parse_and());
        }
        return f;
    }

    Formula parse_and() {
        Formula f = parse_unary();
        while (current_.kind == Tok::Amp) {
            advance();
            f = Formula::conj(f, parse_unary());
        }
        return f;
    }

    Formula parse_unary() {
        if (current_.kind == Tok::Bang) {
            advance();
            return Formula::negate(parse_unary());
        }
        if (current_.kind == Tok::Word) {
            if (auto op = unary_keyword(current_.text)) {
                advance();
                return Formula::unary(*op, parse_unary());
            }
        }
        return parse_atom();
    }

    Formula parse_atom() {
        switch (current_.kind) {
        case Tok::LParen: {
            advance();
            Formula f = parse_until();
            if (current_.kind != Tok::RParen) unexpected("')'");
            advance();
            return f;
        }
        case Tok::Color: {
            Formula f = Formula::atom(current_.text);
            advance();
            return f;
        }
        case Tok::Word: {
            if (current_.text == "top") {
                advance();
                return Formula::top();
            }
            if (current_.text == "bot") {
                advance();
                return Formula::bot();
            }
            if (is_reserved(current_.text)) unexpected("an operand");
            Formula f = Formula::atom(current_.text);
            advance();
            return f;
        }
        default:
            unexpected("an operand");
        }
    }

    Lexer lexer_;
    Token current_;
};

} // namespace

Formula parse_formula(std::string_view text) {
    return Parser(text).parse();
}

} // namespace slcs
