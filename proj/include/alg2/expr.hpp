#ifndef ALG2_EXPR_HPP
#define ALG2_EXPR_HPP

#include <map>
#include <memory>
#include <string>

#include "alg2/errors.hpp"

namespace alg2 {

/// Arithmetic expression over a field: integer literals, named variables,
/// +, -, *, /, unary minus, integer powers and parentheses. Used to evaluate
/// the formulas carried by the degeneration data file.
class Expr {
public:
    static Expr parse(const std::string& text);

    /// Evaluates over any field with K(long long), field ops and is_zero().
    template <class K>
    K eval(const std::map<std::string, K>& env) const {
        switch (kind_) {
            case Kind::Const: return K(value_);
            case Kind::Var: {
                auto it = env.find(name_);
                if (it == env.end()) throw ParseError("expr: unbound variable " + name_);
                return it->second;
            }
            case Kind::Neg: return K(0) - lhs_->eval(env);
            case Kind::Add: return lhs_->eval(env) + rhs_->eval(env);
            case Kind::Sub: return lhs_->eval(env) - rhs_->eval(env);
            case Kind::Mul: return lhs_->eval(env) * rhs_->eval(env);
            case Kind::Div: {
                K d = rhs_->eval(env);
                if (d.is_zero()) throw InvalidInput("expr: division by zero in " + text_);
                return lhs_->eval(env) / d;
            }
            case Kind::Pow: {
                K b = lhs_->eval(env);
                K r(1);
                for (long long i = 0; i < value_; ++i) r = r * b;
                return r;
            }
        }
        throw ParseError("expr: corrupt node");
    }

    const std::string& text() const { return text_; }

private:
    enum class Kind { Const, Var, Neg, Add, Sub, Mul, Div, Pow };

    Kind kind_ = Kind::Const;
    long long value_ = 0;       // Const payload / Pow exponent
    std::string name_;          // Var payload
    std::shared_ptr<Expr> lhs_, rhs_;
    std::string text_;

    friend class ExprParser;
};

}  // namespace alg2

#endif
