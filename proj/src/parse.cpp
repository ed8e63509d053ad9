#include "logsym/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

#include "logsym/error.hpp"

namespace logsym {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Wedge, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& names, SourceLocation at, bool vectors)
        : text_(text), names_(names), at_(at), vectors_(vectors), dim_(static_cast<int>(names.size())) {
        tokenize();
    }

    LogForm run() {
        if (peek().kind == Tok::End) fail("empty expression", peek());
        LogForm v = expr();
        if (peek().kind != Tok::End) fail("unexpected token", peek());
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what, const Token& t) const {
        std::size_t line = at_.line, column = at_.column;
        for (std::size_t i = 0; i < t.offset && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(what, line, column, t.text);
    }

    void tokenize() {
        std::size_t i = 0;
        while (i < text_.size()) {
            const char c = text_[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            const std::size_t start = i;
            if (std::isdigit(static_cast<unsigned char>(c))) {
                while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i;
                if (i < text_.size() && text_[i] == '.')
                    fail("decimal numbers are not supported; write a fraction",
                         {Tok::Number, std::string(text_.substr(start, i + 1 - start)), start});
                tokens_.push_back({Tok::Number, std::string(text_.substr(start, i - start)), start});
                continue;
            }
            if (ident_start(c)) {
                while (i < text_.size() && ident_char(text_[i])) ++i;
                tokens_.push_back({Tok::Ident, std::string(text_.substr(start, i - start)), start});
                continue;
            }
            Tok kind;
            switch (c) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '^': kind = Tok::Wedge; break;
            case '/': kind = Tok::Slash; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            default: fail("unexpected character", {Tok::End, std::string(1, c), start});
            }
            tokens_.push_back({kind, std::string(1, c), start});
            ++i;
        }
        tokens_.push_back({Tok::End, "", text_.size()});
    }

    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }
    const Token& expect(Tok k, const char* what) {
        if (peek().kind != k) fail(std::string("expected ") + what, peek());
        return next();
    }

    LogForm scalar(const TrigPoly& f) const { return LogForm::scalar(dim_, 0, f); }

    std::optional<int> coordinate(const std::string& name) const {
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) return std::nullopt;
        return static_cast<int>(it - names_.begin());
    }

    LogForm add(LogForm a, const LogForm& b, const Token& op, bool minus) const {
        if (a.degree() != b.degree()) {
            if (a.is_zero()) return minus ? -b : b;
            if (!b.is_zero()) fail("cannot add terms of different degree", op);
            return a;
        }
        return minus ? a - b : a + b;
    }

    LogForm expr() {
        LogForm v = accept(Tok::Minus) ? -term() : (accept(Tok::Plus), term());
        for (;;) {
            const Token& op = peek();
            if (accept(Tok::Plus)) v = add(v, term(), op, false);
            else if (accept(Tok::Minus)) v = add(v, term(), op, true);
            else return v;
        }
    }

    bool starts_factor(Tok k) const {
        return k == Tok::Number || k == Tok::Ident || k == Tok::LParen;
    }

    LogForm term() {
        LogForm v = factor();
        for (;;) {
            if (accept(Tok::Star) || accept(Tok::Wedge)) {
                v = wedge(v, factor());
            } else if (starts_factor(peek().kind)) {
                v = wedge(v, factor());
            } else {
                return v;
            }
        }
    }

    LogForm factor() {
        if (accept(Tok::Minus)) return -factor();
        const Token& t = peek();
        if (t.kind == Tok::Number) {
            next();
            mpq_class q(t.text);
            if (accept(Tok::Slash)) {
                const Token& d = expect(Tok::Number, "an integer denominator");
                const mpz_class den(d.text);
                if (den == 0) fail("division by zero", d);
                q /= den;
            }
            return scalar(q);
        }
        if (t.kind == Tok::LParen) {
            next();
            LogForm v = expr();
            expect(Tok::RParen, "')'");
            if (peek().kind == Tok::Slash) fail("only numbers and differentials can be divided", peek());
            return v;
        }
        if (t.kind != Tok::Ident) fail("expected a term", t);
        next();
        if (t.text == "sin" || t.text == "cos") {
            const auto [coord, k] = harmonic_argument();
            if (peek().kind == Tok::Slash) fail("only numbers and differentials can be divided", peek());
            return scalar(t.text == "sin" ? TrigPoly::sin(coord, k) : TrigPoly::cos(coord, k));
        }
        if (t.text.size() > 1 && t.text[0] == 'd') {
            if (auto c = coordinate(t.text.substr(1))) {
                if (!accept(Tok::Slash)) return LogForm::differential(dim_, 0, *c);
                const Token& s = peek();
                if (s.kind != Tok::Ident || s.text != "sin") fail("a log pole is written dθ/sin(θ)", s);
                next();
                const Token& arg = tokens_[std::min(pos_ + 1, tokens_.size() - 1)];
                const auto [pc, k] = harmonic_argument();
                if (pc != *c) fail("pole coordinate mismatch", arg);
                if (k != 1) fail("a log pole needs sin of frequency 1", arg);
                if (vectors_) fail("log covectors are not allowed in a multivector", t);
                return LogForm::covector(dim_, IndexMask{1} << *c, *c);
            }
        }
        if (coordinate(t.text)) fail("a coordinate can only appear inside sin, cos or a differential", t);
        fail("unknown identifier", t);
    }

    // "(x)", "(2x)", "(2*x)", "(-x)"
    std::pair<int, int> harmonic_argument() {
        expect(Tok::LParen, "'('");
        int sign = accept(Tok::Minus) ? -1 : 1;
        int k = 1;
        if (peek().kind == Tok::Number) {
            const Token& n = next();
            if (n.text.size() > 4) fail("frequency too large", n);
            k = std::stoi(n.text);
            accept(Tok::Star);
        }
        const Token& id = peek();
        if (id.kind != Tok::Ident) fail("expected a coordinate", id);
        next();
        auto c = coordinate(id.text);
        if (!c) fail("unknown coordinate", id);
        expect(Tok::RParen, "')'");
        return {*c, sign * k};
    }

    std::string_view text_;
    const std::vector<std::string>& names_;
    SourceLocation at_;
    bool vectors_;
    int dim_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

LogForm parse_form(std::string_view text, const std::vector<std::string>& names, SourceLocation at) {
    return Parser(text, names, at, false).run();
}

Multivector parse_multivector(std::string_view text, const std::vector<std::string>& names,
                              SourceLocation at) {
    const LogForm f = Parser(text, names, at, true).run();
    Multivector m(f.dim(), f.degree());
    for (const auto& [idx, c] : f.components()) m.add(idx, c);
    return m;
}

void check_coordinate_names(const std::vector<std::string>& names) {
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty() || !ident_start(n[0]) ||
            !std::all_of(n.begin(), n.end(), [](char c) { return ident_char(c) && c != '\''; }))
            throw InputError("invalid coordinate name '" + n + "'");
        if (n == "sin" || n == "cos") throw InputError("coordinate name '" + n + "' is reserved");
        if (!seen.insert(n).second) throw InputError("duplicate coordinate name '" + n + "'");
    }
    for (const auto& n : names)
        if (n.size() > 1 && n[0] == 'd' && seen.count(n.substr(1)))
            throw InputError("coordinate name '" + n + "' clashes with the differential of '" + n.substr(1) + "'");
}

} // namespace logsym
