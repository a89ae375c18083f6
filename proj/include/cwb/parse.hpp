#pragma once

// Concrete syntax, s-expression style:
//
//   term := (zero K) | succ | (proj K I) | (comp term (term*))
//         | (primrec term term) | (mu term) | univ | query | bottom
//         | (const N) | pair | unpairl | unpairr | cpair | beval
//
// Naturals in decimal, whitespace-insensitive, `;` comments to end of line.
// pretty() emits the canonical form; parse(pretty(t)) == t.

#include "cwb/nat.hpp"
#include "cwb/term.hpp"

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

namespace cwb {

class parse_error : public std::runtime_error {
  public:
    parse_error(std::size_t line, std::size_t col, const std::string& msg)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(col) + ": " + msg),
          line(line),
          col(col) {}
    std::size_t line;
    std::size_t col;
};

namespace detail {

struct Token {
    enum class Type { LParen, RParen, Atom, End } type;
    std::string text;
    std::size_t line;
    std::size_t col;
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        skip_blank();
        std::size_t line = line_, col = col_;
        if (pos_ >= src_.size()) return {Token::Type::End, "", line, col};
        char c = src_[pos_];
        if (c == '(') {
            advance();
            return {Token::Type::LParen, "(", line, col};
        }
        if (c == ')') {
            advance();
            return {Token::Type::RParen, ")", line, col};
        }
        std::string text;
        while (pos_ < src_.size() && !std::isspace(static_cast<unsigned char>(src_[pos_])) &&
               src_[pos_] != '(' && src_[pos_] != ')' && src_[pos_] != ';') {
            text += src_[pos_];
            advance();
        }
        return {Token::Type::Atom, text, line, col};
    }

  private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_blank() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == ';') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class Parser {
  public:
    explicit Parser(const std::string& src) : lexer_(src) { shift(); }

    Term parse_all() {
        Term t = parse_term();
        if (cur_.type != Token::Type::End)
            throw parse_error(cur_.line, cur_.col, "trailing input after term");
        return t;
    }

  private:
    void shift() { cur_ = lexer_.next(); }

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(cur_.line, cur_.col, msg);
    }

    std::uint64_t expect_small_natural(const char* what) {
        if (cur_.type != Token::Type::Atom) fail(std::string("expected ") + what);
        Nat n;
        try {
            n = nat_from_string(cur_.text);
        } catch (const std::invalid_argument&) {
            fail(std::string("expected ") + what);
        }
        if (!fits_u64(n) || to_u64(n) > (std::uint64_t{1} << 32))
            fail(std::string(what) + " out of range");
        std::uint64_t v = to_u64(n);
        shift();
        return v;
    }

    Nat expect_natural(const char* what) {
        if (cur_.type != Token::Type::Atom) fail(std::string("expected ") + what);
        Nat n;
        try {
            n = nat_from_string(cur_.text);
        } catch (const std::invalid_argument&) {
            fail(std::string("expected ") + what);
        }
        shift();
        return n;
    }

    void expect_rparen() {
        if (cur_.type != Token::Type::RParen) fail("expected ')'");
        shift();
    }

    Term parse_term() {
        if (cur_.type == Token::Type::Atom) {
            std::string name = cur_.text;
            auto [line, col] = std::pair{cur_.line, cur_.col};
            shift();
            if (name == "succ") return Term::succ();
            if (name == "univ") return Term::univ();
            if (name == "query") return Term::query();
            if (name == "bottom") return Term::bottom();
            if (name == "pair") return Term::pair_prim();
            if (name == "unpairl") return Term::unpair_l();
            if (name == "unpairr") return Term::unpair_r();
            if (name == "cpair") return Term::cpair();
            if (name == "beval") return Term::beval();
            throw parse_error(line, col, "unknown term '" + name + "'");
        }
        if (cur_.type != Token::Type::LParen) fail("expected term");
        shift();
        if (cur_.type != Token::Type::Atom) fail("expected form head");
        std::string head = cur_.text;
        auto [line, col] = std::pair{cur_.line, cur_.col};
        shift();
        try {
            if (head == "zero") {
                std::uint64_t k = expect_small_natural("arity");
                expect_rparen();
                return Term::zero(k);
            }
            if (head == "proj") {
                std::uint64_t k = expect_small_natural("arity");
                std::uint64_t i = expect_small_natural("index");
                expect_rparen();
                return Term::proj(k, i);
            }
            if (head == "const") {
                Nat v = expect_natural("value");
                expect_rparen();
                return Term::constant(std::move(v));
            }
            if (head == "comp") {
                Term outer = parse_term();
                if (cur_.type != Token::Type::LParen) fail("expected '(' before inner terms");
                shift();
                std::vector<Term> inners;
                while (cur_.type != Token::Type::RParen) inners.push_back(parse_term());
                shift();
                expect_rparen();
                return Term::comp(std::move(outer), std::move(inners));
            }
            if (head == "primrec") {
                Term base = parse_term();
                Term step = parse_term();
                expect_rparen();
                return Term::primrec(std::move(base), std::move(step));
            }
            if (head == "mu") {
                Term body = parse_term();
                expect_rparen();
                return Term::mu(std::move(body));
            }
        } catch (const arity_error&) {
            throw;  // distinct from syntax errors by exception type
        }
        throw parse_error(line, col, "unknown form '" + head + "'");
    }

    Lexer lexer_;
    Token cur_;
};

}  // namespace detail

inline Term parse(const std::string& source) { return detail::Parser(source).parse_all(); }

inline void pretty_to(const Term& t, std::ostream& os) {
    switch (t.kind()) {
        case Kind::Zero:
            os << "(zero " << t.param_a() << ")";
            return;
        case Kind::Succ:
            os << "succ";
            return;
        case Kind::Proj:
            os << "(proj " << t.param_a() << " " << t.param_b() << ")";
            return;
        case Kind::Comp: {
            os << "(comp ";
            pretty_to(t.children()[0], os);
            os << " (";
            for (std::size_t i = 1; i < t.children().size(); ++i) {
                if (i > 1) os << " ";
                pretty_to(t.children()[i], os);
            }
            os << "))";
            return;
        }
        case Kind::PrimRec:
            os << "(primrec ";
            pretty_to(t.children()[0], os);
            os << " ";
            pretty_to(t.children()[1], os);
            os << ")";
            return;
        case Kind::Mu:
            os << "(mu ";
            pretty_to(t.children()[0], os);
            os << ")";
            return;
        case Kind::Univ:
            os << "univ";
            return;
        case Kind::Query:
            os << "query";
            return;
        case Kind::Bottom:
            os << "bottom";
            return;
        case Kind::Const:
            os << "(const " << to_string(t.const_value()) << ")";
            return;
        case Kind::Pair:
            os << "pair";
            return;
        case Kind::UnpairL:
            os << "unpairl";
            return;
        case Kind::UnpairR:
            os << "unpairr";
            return;
        case Kind::CPair:
            os << "cpair";
            return;
        case Kind::BEval:
            os << "beval";
            return;
    }
}

inline std::string pretty(const Term& t) {
    std::ostringstream os;
    pretty_to(t, os);
    return os.str();
}

}  // namespace cwb
