#include "bcrystal/parse.hpp"

#include <cctype>
#include <vector>

namespace bcrystal {

namespace {

enum class Tok { Ident, Int, LParen, RParen, Colon, Tensor, Plus, End };

struct Token {
    Tok kind;
    std::string text;
    long value = 0;
};

struct Lexer {
    std::string_view src;
    std::size_t pos = 0;
    std::vector<Token> tokens;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at offset " + std::to_string(pos) + " in \"" +
                         std::string(src) + "\"");
    }

    void run() {
        while (pos < src.size()) {
            const char c = src[pos];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos;
            } else if (c == '(') {
                if (pos + 2 < src.size() && src[pos + 2] == ')' &&
                    (src[pos + 1] == 'x' || src[pos + 1] == '+')) {
                    tokens.push_back({src[pos + 1] == 'x' ? Tok::Tensor : Tok::Plus, ""});
                    pos += 3;
                } else {
                    tokens.push_back({Tok::LParen, "("});
                    ++pos;
                }
            } else if (c == ')') {
                tokens.push_back({Tok::RParen, ")"});
                ++pos;
            } else if (c == ':') {
                tokens.push_back({Tok::Colon, ":"});
                ++pos;
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                std::size_t end = pos;
                while (end < src.size() && std::isalpha(static_cast<unsigned char>(src[end]))) {
                    ++end;
                }
                tokens.push_back({Tok::Ident, std::string(src.substr(pos, end - pos))});
                pos = end;
            } else if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t end = pos + 1;
                while (end < src.size() && std::isdigit(static_cast<unsigned char>(src[end]))) {
                    ++end;
                }
                Token t{Tok::Int, std::string(src.substr(pos, end - pos))};
                if (t.text == "-") fail("dangling '-'");
                t.value = std::stol(t.text);
                tokens.push_back(t);
                pos = end;
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
        }
        tokens.push_back({Tok::End, ""});
    }
};

struct Parser {
    std::vector<Token> toks;
    std::size_t at = 0;
    std::string src;

    const Token& peek() const { return toks[at]; }
    Token take() { return toks[at++]; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " in \"" + src + "\"");
    }

    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++at;
        return true;
    }

    void expect(Tok k, const char* what) {
        if (!accept(k)) fail(std::string("expected ") + what);
    }

    long expect_int() {
        if (peek().kind != Tok::Int) fail("expected an integer");
        return take().value;
    }

    CrystalLabel label_from_ident(const std::string& name) {
        Kind kind;
        if (name == "V") {
            kind = Kind::V;
        } else if (name == "M") {
            kind = Kind::M;
        } else if (name == "T") {
            kind = Kind::T;
        } else if (name == "Msigma") {
            kind = Kind::Msigma;
        } else {
            fail("unknown label kind '" + name + "'");
        }
        expect(Tok::LParen, "'('");
        const long param = expect_int();
        expect(Tok::RParen, "')'");
        try {
            return label(kind, static_cast<int>(param));
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }

    CrystalLabel parse_label() {
        if (peek().kind != Tok::Ident) fail("expected a label");
        return label_from_ident(take().text);
    }

    // ---- crystal expressions ----

    CrystalExpr expr_factor() {
        if (accept(Tok::LParen)) {
            CrystalExpr e = expr();
            expect(Tok::RParen, "')'");
            return e;
        }
        return CrystalExpr::atom(parse_label());
    }

    CrystalExpr expr() {
        CrystalExpr left = expr_factor();
        if (!accept(Tok::Tensor)) return left;
        CrystalExpr right = expr_factor();
        if (peek().kind == Tok::Tensor) {
            fail("ambiguous tensor chain; parenthesize nesting explicitly");
        }
        return CrystalExpr::tensor(left, right);
    }

    // ---- elements ----

    std::pair<CrystalExpr, Element> element_factor() {
        if (accept(Tok::LParen)) {
            auto inner = element();
            expect(Tok::RParen, "')'");
            return inner;
        }
        CrystalLabel l = parse_label();
        expect(Tok::Colon, "':'");
        if (peek().kind != Tok::Ident || peek().text != "b") fail("expected a node 'b...'");
        take();
        ChainTag chain = ChainTag::Plain;
        long index;
        if (accept(Tok::LParen)) {
            chain = ChainTag::Paren;
            index = expect_int();
            expect(Tok::RParen, "')'");
        } else {
            index = expect_int();
        }
        try {
            CanonicalNode n = node(l, chain, static_cast<int>(index));
            return {CrystalExpr::atom(l), leaf_element(n)};
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }

    std::pair<CrystalExpr, Element> element() {
        auto left = element_factor();
        if (!accept(Tok::Tensor)) return left;
        auto right = element_factor();
        if (peek().kind == Tok::Tensor) {
            fail("ambiguous tensor chain; parenthesize nesting explicitly");
        }
        Element joined = left.second;
        joined.insert(joined.end(), right.second.begin(), right.second.end());
        return {CrystalExpr::tensor(left.first, right.first), std::move(joined)};
    }

    // ---- module expressions ----

    ModuleSum module_primary() {
        if (peek().kind == Tok::Ident && peek().text == "dual") {
            take();
            expect(Tok::LParen, "'('");
            ModuleSum inner = module_expr();
            expect(Tok::RParen, "')'");
            return dual_sum(inner);
        }
        if (accept(Tok::LParen)) {
            ModuleSum inner = module_expr();
            expect(Tok::RParen, "')'");
            return inner;
        }
        return single(parse_label());
    }

    std::optional<CrystalLabel> as_single_label(const ModuleSum& m) {
        if (m.lines.size() != 1) return std::nullopt;
        const GenLine& g = m.lines[0];
        if (g.lo_p != 0 || !g.hi_p || *g.hi_p != 0 || g.mult != 1) return std::nullopt;
        return label(g.kind, g.c);
    }

    ModuleSum module_term() {
        ModuleSum left = module_primary();
        while (accept(Tok::Tensor)) {
            ModuleSum right = module_primary();
            auto a = as_single_label(left), b = as_single_label(right);
            if (!a || !b) {
                fail("(x) needs single module labels on both sides");
            }
            left = module_tensor(*a, *b);
        }
        return left;
    }

    ModuleSum module_expr() {
        ModuleSum sum = module_term();
        while (accept(Tok::Plus)) sum = direct_sum(std::move(sum), module_term());
        return sum;
    }

    void done() {
        if (peek().kind != Tok::End) fail("trailing input");
    }
};

Parser make_parser(const std::string& text) {
    Lexer lx{text, 0, {}};
    lx.run();
    return Parser{std::move(lx.tokens), 0, text};
}

}  // namespace

CrystalLabel parse_label(const std::string& text) {
    Parser p = make_parser(text);
    CrystalLabel l = p.parse_label();
    p.done();
    return l;
}

CrystalExpr parse_expr(const std::string& text) {
    Parser p = make_parser(text);
    CrystalExpr e = p.expr();
    p.done();
    return e;
}

std::pair<CrystalExpr, Element> parse_element(const std::string& text) {
    Parser p = make_parser(text);
    auto out = p.element();
    p.done();
    return out;
}

ModuleSum parse_module_expr(const std::string& text) {
    Parser p = make_parser(text);
    ModuleSum m = p.module_expr();
    p.done();
    return m;
}

}  // namespace bcrystal
