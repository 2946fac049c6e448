#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "ncdisc/errors.hpp"

namespace ncdisc {

/// Syntax tree for the expression grammar.
///
/// Precedence from tightest: ^ (nonnegative integer exponent), *, #, then
/// binary + and -. Unary minus applies to the following product factor.
struct Expr {
    enum class Kind { Number, Ident, Add, Sub, Mul, Hash, Neg, Pow };
    Kind kind = Kind::Number;
    mpq_class number;
    std::string name;
    unsigned long exponent = 0;
    std::size_t pos = 0;
    std::unique_ptr<Expr> lhs, rhs;
};

/// Throws ParseError. '#' is accepted only when allow_hash is set.
std::unique_ptr<Expr> parse_expr(std::string_view text, bool allow_hash = false);

/// Callbacks used by evaluate(). ident_power may claim x^k before the
/// generic repeated multiplication (monoid elements such as t^3 need it).
template <class T>
struct EvalOps {
    std::function<T(const mpq_class&)> number;
    std::function<T(const std::string&, std::size_t pos)> ident;
    std::function<std::optional<T>(const std::string&, unsigned long, std::size_t pos)> ident_power;
    std::function<T(const T&, const T&)> mul;
};

template <class T>
T evaluate(const Expr& e, const EvalOps<T>& ops) {
    switch (e.kind) {
        case Expr::Kind::Number:
            return ops.number(e.number);
        case Expr::Kind::Ident:
            return ops.ident(e.name, e.pos);
        case Expr::Kind::Add:
            return evaluate(*e.lhs, ops) + evaluate(*e.rhs, ops);
        case Expr::Kind::Sub:
            return evaluate(*e.lhs, ops) - evaluate(*e.rhs, ops);
        case Expr::Kind::Mul:
        case Expr::Kind::Hash:
            return ops.mul(evaluate(*e.lhs, ops), evaluate(*e.rhs, ops));
        case Expr::Kind::Neg:
            return ops.mul(ops.number(mpq_class(-1)), evaluate(*e.lhs, ops));
        case Expr::Kind::Pow: {
            if (e.lhs->kind == Expr::Kind::Ident && ops.ident_power) {
                if (auto r = ops.ident_power(e.lhs->name, e.exponent, e.lhs->pos)) return *r;
            }
            T base = evaluate(*e.lhs, ops);
            T result = ops.number(mpq_class(1));
            for (unsigned long k = e.exponent; k > 0; k >>= 1) {
                if (k & 1) result = ops.mul(result, base);
                if (k > 1) base = ops.mul(base, base);
            }
            return result;
        }
    }
    throw Error("bad expression node");
}

}  // namespace ncdisc
