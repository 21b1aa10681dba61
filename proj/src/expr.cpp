#include "alg2/expr.hpp"

#include <cctype>

namespace alg2 {

class ExprParser {
public:
    explicit ExprParser(const std::string& text) : s_(text) {}

    Expr run() {
        Expr e = sum();
        skip();
        if (pos_ != s_.size()) throw ParseError("expr: trailing input in '" + s_ + "'");
        e.text_ = s_;
        return e;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    static Expr node(Expr lhs, Expr rhs, int kind) {
        Expr e;
        e.kind_ = static_cast<Expr::Kind>(kind);
        e.lhs_ = std::make_shared<Expr>(std::move(lhs));
        e.rhs_ = std::make_shared<Expr>(std::move(rhs));
        return e;
    }

    Expr sum() {
        Expr e = product();
        while (true) {
            if (eat('+'))
                e = node(std::move(e), product(), 3);
            else if (eat('-'))
                e = node(std::move(e), product(), 4);
            else
                return e;
        }
    }

    Expr product() {
        Expr e = unary();
        while (true) {
            if (eat('*'))
                e = node(std::move(e), unary(), 5);
            else if (eat('/'))
                e = node(std::move(e), unary(), 6);
            else
                return e;
        }
    }

    Expr unary() {
        if (eat('-')) {
            Expr e;
            e.kind_ = Expr::Kind::Neg;
            e.lhs_ = std::make_shared<Expr>(unary());
            return e;
        }
        return power();
    }

    Expr power() {
        Expr base = primary();
        if (eat('^')) {
            skip();
            long long exp = 0;
            bool any = false;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                exp = exp * 10 + (s_[pos_++] - '0');
                any = true;
            }
            if (!any) throw ParseError("expr: '^' needs an integer exponent");
            Expr e;
            e.kind_ = Expr::Kind::Pow;
            e.value_ = exp;
            e.lhs_ = std::make_shared<Expr>(std::move(base));
            return e;
        }
        return base;
    }

    Expr primary() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("expr: unexpected end of '" + s_ + "'");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Expr e = sum();
            if (!eat(')')) throw ParseError("expr: missing ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                v = v * 10 + (s_[pos_++] - '0');
            Expr e;
            e.kind_ = Expr::Kind::Const;
            e.value_ = v;
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                name.push_back(s_[pos_++]);
            Expr e;
            e.kind_ = Expr::Kind::Var;
            e.name_ = std::move(name);
            return e;
        }
        throw ParseError(std::string("expr: unexpected character '") + c + "' in '" + s_ + "'");
    }

    friend class Expr;
};

Expr Expr::parse(const std::string& text) { return ExprParser(text).run(); }

}  // namespace alg2
