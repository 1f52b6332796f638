#include "eac/parser.hpp"

#include <algorithm>
#include <cctype>

namespace eac {

namespace {

enum class Tok {
    Ident, Int, LBrace, RBrace, LParen, RParen,
    Semi, Comma, Eq, Plus, Minus, Star, Caret, Slash, End
};

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') { ++line_; col_ = 1; ++pos_; continue; }
            if (c == ' ' || c == '\t' || c == '\r') { ++col_; ++pos_; continue; }
            if (c == '#') { // line comment
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
                continue;
            }
            break;
        }
        if (pos_ >= text_.size()) {
            current_ = {Tok::End, "", line_, col_};
            return;
        }
        int line = line_, col = col_;
        char c = text_[pos_];
        auto single = [&](Tok k) {
            current_ = {k, std::string(1, c), line, col};
            ++pos_; ++col_;
        };
        switch (c) {
        case '{': single(Tok::LBrace); return;
        case '}': single(Tok::RBrace); return;
        case '(': single(Tok::LParen); return;
        case ')': single(Tok::RParen); return;
        case ';': single(Tok::Semi); return;
        case ',': single(Tok::Comma); return;
        case '=': single(Tok::Eq); return;
        case '+': single(Tok::Plus); return;
        case '-': single(Tok::Minus); return;
        case '*': single(Tok::Star); return;
        case '^': single(Tok::Caret); return;
        case '/': single(Tok::Slash); return;
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                num += text_[pos_++];
                ++col_;
            }
            current_ = {Tok::Int, num, line, col};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                id += text_[pos_++];
                ++col_;
            }
            current_ = {Tok::Ident, id, line, col};
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token current_{Tok::End, "", 1, 1};
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    Document document() {
        Token head = expect(Tok::Ident, "'pair' or 'config'");
        Document doc;
        if (head.text == "pair")
            doc = pair_document();
        else if (head.text == "config")
            doc = config_document();
        else
            throw ParseError("expected 'pair' or 'config', found '" + head.text + "'",
                             head.line, head.col);
        Token end = lex_.take();
        if (end.kind != Tok::End)
            throw ParseError("trailing input after document", end.line, end.col);
        return doc;
    }

    Polynomial single_polynomial(const RingPtr& ring, char letter) {
        ring_ = ring;
        letter_ = letter;
        Polynomial p = polynomial();
        Token end = lex_.take();
        if (end.kind != Tok::End)
            throw ParseError("trailing input after polynomial", end.line, end.col);
        return p;
    }

private:
    [[noreturn]] void fail(const Token& t, const std::string& expected) {
        std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw ParseError("expected " + expected + ", found " + found, t.line, t.col);
    }

    Token expect(Tok kind, const std::string& what) {
        Token t = lex_.take();
        if (t.kind != kind) fail(t, what);
        return t;
    }

    void expect_keyword_value_end() { expect(Tok::Semi, "';'"); }

    long int_value(const Token& t) {
        try {
            return std::stol(t.text);
        } catch (...) {
            throw ParseError("integer literal out of range", t.line, t.col);
        }
    }

    PairDocument pair_document() {
        expect(Tok::LBrace, "'{'");
        PairDocument doc;
        bool have_n = false;
        while (lex_.peek().kind != Tok::RBrace) {
            Token item = expect(Tok::Ident, "a pair item");
            if (item.text == "n") {
                expect(Tok::Eq, "'='");
                Token v = expect(Tok::Int, "an integer");
                doc.n = static_cast<int>(int_value(v));
                if (doc.n < 1 || doc.n > 20)
                    throw ParseError("ambient dimension must be between 1 and 20", v.line, v.col);
                doc.ring_x = Ring::make(doc.n, "x");
                doc.ring_y = Ring::make(doc.n, "y");
                have_n = true;
                expect_keyword_value_end();
            } else if (item.text == "V" || item.text == "W" || item.text == "Vprime" ||
                       item.text == "Wprime") {
                if (!have_n)
                    throw ParseError("n must be set before polynomial blocks", item.line, item.col);
                bool vside = item.text[0] == 'V';
                ring_ = vside ? doc.ring_x : doc.ring_y;
                letter_ = vside ? 'x' : 'y';
                auto polys = poly_block();
                if (item.text == "V") doc.v_polys = std::move(polys);
                else if (item.text == "W") doc.w_polys = std::move(polys);
                else if (item.text == "Vprime") doc.v_prime = std::move(polys);
                else doc.w_prime = std::move(polys);
            } else if (item.text == "irreducible") {
                expect(Tok::Eq, "'='");
                Token v = expect(Tok::Ident, "none, V, W or both");
                if (v.text == "none") doc.irreducible = IrreducibleOpt::None;
                else if (v.text == "V") doc.irreducible = IrreducibleOpt::V;
                else if (v.text == "W") doc.irreducible = IrreducibleOpt::W;
                else if (v.text == "both") doc.irreducible = IrreducibleOpt::Both;
                else throw ParseError("expected none, V, W or both", v.line, v.col);
                expect_keyword_value_end();
            } else if (item.text == "height" || item.text == "kcap" || item.text == "seed") {
                expect(Tok::Eq, "'='");
                bool negative = false;
                if (lex_.peek().kind == Tok::Minus) { lex_.take(); negative = true; }
                Token v = expect(Tok::Int, "an integer");
                long value = int_value(v);
                if (negative) value = -value;
                if (item.text == "seed") {
                    doc.seed = value;
                } else {
                    if (value < 1)
                        throw ParseError(item.text + " must be >= 1", v.line, v.col);
                    if (item.text == "height") doc.height = static_cast<int>(value);
                    else doc.kcap = static_cast<int>(value);
                }
                expect_keyword_value_end();
            } else {
                fail(item, "one of n, V, W, Vprime, Wprime, irreducible, height, kcap, seed");
            }
        }
        expect(Tok::RBrace, "'}'");
        if (!have_n) throw ParseError("pair document is missing n", 1, 1);
        return doc;
    }

    ConfigDocument config_document() {
        expect(Tok::LBrace, "'{'");
        ConfigDocument doc;
        bool have_n = false;
        auto set_n = [&](int n, const Token& at) {
            if (n < 1 || n > 20)
                throw ParseError("generator count must be between 1 and 20", at.line, at.col);
            doc.n = n;
            doc.ring_x = Ring::make(n, "x");
            doc.ring_y = Ring::make(n, "y");
            have_n = true;
        };
        while (lex_.peek().kind != Tok::RBrace) {
            Token item = expect(Tok::Ident, "a config item");
            if (item.text == "n") {
                expect(Tok::Eq, "'='");
                Token v = expect(Tok::Int, "an integer");
                if (have_n && doc.n != int_value(v))
                    throw ParseError("n conflicts with an earlier declaration", v.line, v.col);
                set_n(static_cast<int>(int_value(v)), v);
                expect_keyword_value_end();
            } else if (item.text == "gens") {
                expect(Tok::LBrace, "'{'");
                std::vector<std::string> names;
                while (lex_.peek().kind == Tok::Ident) names.push_back(lex_.take().text);
                Token close = expect(Tok::RBrace, "a generator name or '}'");
                if (names.empty())
                    throw ParseError("gens block needs at least one name", close.line, close.col);
                if (have_n && doc.n != static_cast<int>(names.size()))
                    throw ParseError("gens count conflicts with n", item.line, item.col);
                set_n(static_cast<int>(names.size()), item);
                doc.gen_names = std::move(names);
            } else if (item.text == "X" || item.text == "Y") {
                if (!have_n)
                    throw ParseError("n (or gens) must be set before polynomial blocks",
                                     item.line, item.col);
                bool xside = item.text == "X";
                ring_ = xside ? doc.ring_x : doc.ring_y;
                letter_ = xside ? 'x' : 'y';
                auto polys = poly_block();
                (xside ? doc.x_polys : doc.y_polys) = std::move(polys);
            } else if (item.text == "lin") {
                if (!have_n)
                    throw ParseError("n (or gens) must be set before lin", item.line, item.col);
                expect(Tok::LBrace, "'{'");
                doc.lin = IntMatrix(0, doc.n);
                while (lex_.peek().kind != Tok::RBrace) {
                    std::vector<Integer> row;
                    while (lex_.peek().kind == Tok::Int || lex_.peek().kind == Tok::Minus) {
                        bool neg = false;
                        if (lex_.peek().kind == Tok::Minus) { lex_.take(); neg = true; }
                        Token v = expect(Tok::Int, "an integer");
                        Integer e(v.text);
                        row.push_back(neg ? Integer(-e) : e);
                    }
                    Token at = lex_.peek();
                    if (static_cast<int>(row.size()) != doc.n)
                        throw ParseError("linear relation row needs exactly " +
                                             std::to_string(doc.n) + " entries",
                                         at.line, at.col);
                    doc.lin.append_row(row);
                    if (lex_.peek().kind == Tok::Semi) lex_.take();
                    else break;
                }
                expect(Tok::RBrace, "'}'");
            } else if (item.text == "kernel") {
                if (!have_n)
                    throw ParseError("n (or gens) must be set before kernel", item.line, item.col);
                expect(Tok::LBrace, "'{'");
                while (lex_.peek().kind == Tok::Int) {
                    Token v = lex_.take();
                    long idx = int_value(v);
                    if (idx < 1 || idx > doc.n)
                        throw ParseError("kernel index out of range", v.line, v.col);
                    doc.kernel.push_back(static_cast<int>(idx) - 1);
                }
                expect(Tok::RBrace, "'}'");
            } else if (item.text == "height") {
                expect(Tok::Eq, "'='");
                Token v = expect(Tok::Int, "an integer");
                if (int_value(v) < 1)
                    throw ParseError("height must be >= 1", v.line, v.col);
                doc.height = static_cast<int>(int_value(v));
                expect_keyword_value_end();
            } else {
                fail(item, "one of n, gens, X, Y, lin, kernel, height");
            }
        }
        expect(Tok::RBrace, "'}'");
        if (!have_n) throw ParseError("config document is missing n or gens", 1, 1);
        std::sort(doc.kernel.begin(), doc.kernel.end());
        doc.kernel.erase(std::unique(doc.kernel.begin(), doc.kernel.end()), doc.kernel.end());
        return doc;
    }

    std::vector<Polynomial> poly_block() {
        expect(Tok::LBrace, "'{'");
        std::vector<Polynomial> polys;
        while (lex_.peek().kind != Tok::RBrace) {
            polys.push_back(polynomial());
            if (lex_.peek().kind == Tok::Semi) {
                lex_.take();
                continue;
            }
            break;
        }
        expect(Tok::RBrace, "';' or '}'");
        return polys;
    }

    // poly := ['-'] term (('+'|'-') term)*
    Polynomial polynomial() {
        bool negate = false;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            negate = true;
        }
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            Tok op = lex_.take().kind;
            Polynomial rhs = term();
            acc = op == Tok::Plus ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (lex_.peek().kind == Tok::Star) {
            lex_.take();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (lex_.peek().kind == Tok::Caret) {
            Token caret = lex_.take();
            Token e = expect(Tok::Int, "a non-negative integer exponent");
            long exp = int_value(e);
            if (exp > 64)
                throw ParseError("exponent too large (limit 64)", caret.line, caret.col);
            base = base.pow(static_cast<int>(exp));
        }
        return base;
    }

    Polynomial atom() {
        Token t = lex_.take();
        switch (t.kind) {
        case Tok::Minus:
            return -atom();
        case Tok::LParen: {
            Polynomial p = polynomial();
            expect(Tok::RParen, "')'");
            return p;
        }
        case Tok::Int: {
            Integer num(t.text);
            if (lex_.peek().kind == Tok::Slash) {
                lex_.take();
                Token d = expect(Tok::Int, "a denominator");
                Integer den(d.text);
                if (den == 0) throw ParseError("zero denominator", d.line, d.col);
                return Polynomial::constant(ring_, make_rational(num, den));
            }
            return Polynomial::constant(ring_, Rational(num));
        }
        case Tok::Ident: {
            if (t.text.size() >= 2 && (t.text[0] == 'x' || t.text[0] == 'y')) {
                bool digits = true;
                for (size_t i = 1; i < t.text.size(); ++i)
                    if (!std::isdigit(static_cast<unsigned char>(t.text[i]))) digits = false;
                if (digits) {
                    if (t.text[0] != letter_)
                        throw ParseError(std::string("this block uses '") + letter_ +
                                             "' variables",
                                         t.line, t.col);
                    // Resolve by name first (rings made of kept variables
                    // retain their original names), by index otherwise.
                    for (int i = 0; i < ring_->nvars(); ++i)
                        if (ring_->vars[i] == t.text)
                            return Polynomial::variable(ring_, i);
                    long idx = 0;
                    try {
                        idx = std::stol(t.text.substr(1));
                    } catch (...) {
                        throw ParseError("variable index out of range", t.line, t.col);
                    }
                    if (idx < 1 || idx > ring_->nvars())
                        throw ParseError("variable index out of range (n = " +
                                             std::to_string(ring_->nvars()) + ")",
                                         t.line, t.col);
                    return Polynomial::variable(ring_, static_cast<int>(idx) - 1);
                }
            }
            fail(t, "a variable, number or '('");
        }
        default:
            fail(t, "a variable, number or '('");
        }
    }

    Lexer lex_;
    RingPtr ring_;
    char letter_ = 'x';
};

} // namespace

Document parse_document(const std::string& text) {
    Parser p(text);
    return p.document();
}

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring, char letter) {
    Parser p(text);
    return p.single_polynomial(ring, letter);
}

} // namespace eac
