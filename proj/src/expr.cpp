#include "ncdisc/expr.hpp"

#include <cctype>

namespace ncdisc {

namespace {

class Parser {
   public:
    Parser(std::string_view text, bool allow_hash) : s_(text), hash_(allow_hash) {}

    std::unique_ptr<Expr> run() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("empty expression", pos_);
        auto e = sum();
        skip();
        if (pos_ < s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return e;
    }

   private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    static std::unique_ptr<Expr> node(Expr::Kind k, std::size_t pos, std::unique_ptr<Expr> l,
                                      std::unique_ptr<Expr> r = nullptr) {
        auto e = std::make_unique<Expr>();
        e->kind = k;
        e->pos = pos;
        e->lhs = std::move(l);
        e->rhs = std::move(r);
        return e;
    }

    std::unique_ptr<Expr> sum() {
        auto lhs = hashed();
        for (;;) {
            skip();
            std::size_t at = pos_;
            if (accept('+')) {
                lhs = node(Expr::Kind::Add, at, std::move(lhs), hashed());
            } else if (accept('-')) {
                lhs = node(Expr::Kind::Sub, at, std::move(lhs), hashed());
            } else {
                return lhs;
            }
        }
    }

    std::unique_ptr<Expr> hashed() {
        auto lhs = product();
        for (;;) {
            skip();
            std::size_t at = pos_;
            if (!accept('#')) return lhs;
            if (!hash_) throw ParseError("'#' is only allowed in twisted elements", at);
            lhs = node(Expr::Kind::Hash, at, std::move(lhs), product());
        }
    }

    std::unique_ptr<Expr> product() {
        auto lhs = unary();
        for (;;) {
            skip();
            std::size_t at = pos_;
            if (!accept('*')) return lhs;
            lhs = node(Expr::Kind::Mul, at, std::move(lhs), unary());
        }
    }

    std::unique_ptr<Expr> unary() {
        skip();
        std::size_t at = pos_;
        if (accept('-')) return node(Expr::Kind::Neg, at, unary());
        if (accept('+')) return unary();
        return power();
    }

    std::unique_ptr<Expr> power() {
        auto base = primary();
        skip();
        std::size_t at = pos_;
        if (!accept('^')) return base;
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected nonnegative integer exponent", start);
        if (pos_ - start > 9) throw ParseError("exponent too large", start);
        auto e = node(Expr::Kind::Pow, at, std::move(base));
        e->exponent = std::stoul(std::string(s_.substr(start, pos_ - start)));
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') throw ParseError("chained exponent; use parentheses", pos_);
        return e;
    }

    std::unique_ptr<Expr> primary() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        std::size_t at = pos_;
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            auto e = sum();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string num(s_.substr(at, pos_ - at));
            // p/q is a single rational literal only when q follows immediately.
            if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
                std::size_t den_start = ++pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                std::string den(s_.substr(den_start, pos_ - den_start));
                mpz_class d(den);
                if (d == 0) throw ParseError("zero denominator", den_start);
                auto e = node(Expr::Kind::Number, at, nullptr);
                e->number = mpq_class(mpz_class(num), d);
                e->number.canonicalize();
                return e;
            }
            auto e = node(Expr::Kind::Number, at, nullptr);
            e->number = mpq_class(mpz_class(num));
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            auto e = node(Expr::Kind::Ident, at, nullptr);
            e->name = std::string(s_.substr(at, pos_ - at));
            return e;
        }
        throw ParseError(std::string("unexpected '") + c + "'", at);
    }

    std::string_view s_;
    bool hash_;
    std::size_t pos_ = 0;
};

}  // namespace

std::unique_ptr<Expr> parse_expr(std::string_view text, bool allow_hash) {
    return Parser(text, allow_hash).run();
}

}  // namespace ncdisc
