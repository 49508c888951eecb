#include <cctype>
#include <fstream>
#include <sstream>

#include "scopebind/frontend.hpp"

namespace scopebind {

namespace named {

namespace {
NamedPtr make(decltype(NamedTerm::node) n) { return std::make_shared<const NamedTerm>(NamedTerm{std::move(n)}); }
}  // namespace

NamedPtr var(std::string name, SourcePos pos) { return make(NVar{std::move(name), pos}); }
NamedPtr lam(std::string name, NamedPtr body) { return make(NLam{std::move(name), std::move(body)}); }

NamedPtr lams(const std::vector<std::string>& names, NamedPtr body) {
    for (auto it = names.rbegin(); it != names.rend(); ++it) body = lam(*it, std::move(body));
    return body;
}

NamedPtr app(NamedPtr fun, NamedPtr arg) { return make(NApp{std::move(fun), std::move(arg)}); }

NamedPtr apps(NamedPtr fun, const std::vector<NamedPtr>& args) {
    for (const auto& a : args) fun = app(std::move(fun), a);
    return fun;
}

NamedPtr boolean(bool value) { return make(NBool{value}); }
NamedPtr pair(NamedPtr first, NamedPtr second) { return make(NPair{std::move(first), std::move(second)}); }

NamedPtr split(NamedPtr scrutinee, std::string first, std::string second, NamedPtr body) {
    return make(NSplit{std::move(scrutinee), std::move(first), std::move(second), std::move(body)});
}

NamedPtr let_pair(NamedPat pattern, NamedPtr scrutinee, NamedPtr body) {
    return make(NLetPair{std::move(pattern), std::move(scrutinee), std::move(body)});
}

NamedPtr let(const std::vector<std::pair<std::string, NamedPtr>>& bindings, NamedPtr body) {
    for (auto it = bindings.rbegin(); it != bindings.rend(); ++it) body = app(lam(it->first, std::move(body)), it->second);
    return body;
}

NamedPat pvar(std::string name) { return NamedPat{std::move(name), nullptr, nullptr}; }

NamedPat ppair(NamedPat left, NamedPat right) {
    return NamedPat{"", std::make_shared<const NamedPat>(std::move(left)),
                    std::make_shared<const NamedPat>(std::move(right))};
}

}  // namespace named

namespace {

enum class Tok { Ident, Backslash, Dot, LParen, RParen, Comma, Semi, Eq, Let, In, True, False, Split, As, End };

struct Token {
    Tok kind;
    std::string text;
    SourcePos pos;
};

const char* describe(Tok k) {
    switch (k) {
        case Tok::Ident: return "identifier";
        case Tok::Backslash: return "'\\'";
        case Tok::Dot: return "'.'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Comma: return "','";
        case Tok::Semi: return "';'";
        case Tok::Eq: return "'='";
        case Tok::Let: return "'let'";
        case Tok::In: return "'in'";
        case Tok::True: return "'true'";
        case Tok::False: return "'false'";
        case Tok::Split: return "'split'";
        case Tok::As: return "'as'";
        case Tok::End: return "end of input";
    }
    return "token";
}

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    SourcePos pos;
    std::size_t i = 0;
    auto advance = [&] {
        if (src[i] == '\n') {
            ++pos.line;
            pos.column = 1;
        } else {
            ++pos.column;
        }
        ++i;
    };
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance();
            continue;
        }
        if (c == '-' && i + 1 < src.size() && src[i + 1] == '-') {
            while (i < src.size() && src[i] != '\n') advance();
            continue;
        }
        const SourcePos start = pos;
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word;
            while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_' || src[i] == '\'')) {
                word += src[i];
                advance();
            }
            Tok k = Tok::Ident;
            if (word == "let") k = Tok::Let;
            else if (word == "in") k = Tok::In;
            else if (word == "true") k = Tok::True;
            else if (word == "false") k = Tok::False;
            else if (word == "split") k = Tok::Split;
            else if (word == "as") k = Tok::As;
            out.push_back({k, std::move(word), start});
            continue;
        }
        Tok k;
        switch (c) {
            case '\\': k = Tok::Backslash; break;
            case '.': k = Tok::Dot; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case ',': k = Tok::Comma; break;
            case ';': k = Tok::Semi; break;
            case '=': k = Tok::Eq; break;
            default: throw ParseError(start, std::string("unexpected character '") + c + "'");
        }
        out.push_back({k, std::string(1, c), start});
        advance();
    }
    out.push_back({Tok::End, "", pos});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    NamedPtr top() {
        NamedPtr e = expr();
        expect(Tok::End);
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    bool at(Tok k) const { return peek().kind == k; }

    const Token& expect(Tok k) {
        if (!at(k)) {
            throw ParseError(peek().pos, std::string("expected ") + describe(k) + ", found " + describe(peek().kind));
        }
        return next();
    }

    std::string ident() { return expect(Tok::Ident).text; }

    bool starts_binder_form() const { return at(Tok::Backslash) || at(Tok::Let) || at(Tok::Split); }

    bool starts_atom() const {
        return at(Tok::Ident) || at(Tok::LParen) || at(Tok::True) || at(Tok::False);
    }

    NamedPtr expr() {
        if (at(Tok::Backslash)) return lambda();
        if (at(Tok::Let)) return let();
        if (at(Tok::Split)) return split();
        return application();
    }

    NamedPtr lambda() {
        expect(Tok::Backslash);
        std::vector<std::string> names{ident()};
        while (at(Tok::Ident)) names.push_back(ident());
        expect(Tok::Dot);
        return named::lams(names, expr());
    }

    NamedPtr let() {
        expect(Tok::Let);
        if (at(Tok::LParen)) {
            NamedPat p = pattern();
            expect(Tok::Eq);
            NamedPtr scrutinee = expr();
            expect(Tok::In);
            return named::let_pair(std::move(p), std::move(scrutinee), expr());
        }
        std::vector<std::pair<std::string, NamedPtr>> bindings;
        for (;;) {
            std::string name = ident();
            expect(Tok::Eq);
            bindings.emplace_back(std::move(name), expr());
            if (at(Tok::Semi)) {
                next();
                if (at(Tok::In)) break;
                continue;
            }
            break;
        }
        expect(Tok::In);
        return named::let(bindings, expr());
    }

    NamedPat pattern() {
        if (at(Tok::Ident)) return named::pvar(ident());
        expect(Tok::LParen);
        NamedPat left = pattern();
        if (at(Tok::RParen)) {
            next();
            return left;
        }
        expect(Tok::Comma);
        NamedPat right = pattern();
        expect(Tok::RParen);
        return named::ppair(std::move(left), std::move(right));
    }

    NamedPtr split() {
        expect(Tok::Split);
        NamedPtr scrutinee = expr();
        expect(Tok::As);
        expect(Tok::LParen);
        std::string a = ident();
        expect(Tok::Comma);
        std::string b = ident();
        expect(Tok::RParen);
        expect(Tok::In);
        return named::split(std::move(scrutinee), std::move(a), std::move(b), expr());
    }

    NamedPtr application() {
        NamedPtr f = atom();
        for (;;) {
            if (starts_atom()) {
                f = named::app(std::move(f), atom());
            } else if (starts_binder_form()) {
                // A trailing abstraction extends as far right as possible.
                return named::app(std::move(f), expr());
            } else {
                return f;
            }
        }
    }

    NamedPtr atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Ident: {
                next();
                return named::var(t.text, t.pos);
            }
            case Tok::True: next(); return named::boolean(true);
            case Tok::False: next(); return named::boolean(false);
            case Tok::LParen: {
                next();
                NamedPtr e = expr();
                if (at(Tok::Comma)) {
                    next();
                    NamedPtr second = expr();
                    expect(Tok::RParen);
                    return named::pair(std::move(e), std::move(second));
                }
                expect(Tok::RParen);
                return e;
            }
            default:
                throw ParseError(t.pos, std::string("expected an expression, found ") + describe(t.kind));
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

NamedPtr parse(std::string_view text) { return Parser(lex(text)).top(); }

NamedPtr parse_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

}  // namespace scopebind
