#include "alg2/identity.hpp"

#include <cctype>

namespace alg2 {

namespace {

struct TermParser {
    const std::string& s;
    std::size_t pos = 0;

    explicit TermParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    // product := primary (('*')? primary)*
    Term parse_product() {
        Term t = parse_primary();
        while (true) {
            skip_ws();
            if (pos >= s.size()) break;
            char c = s[pos];
            if (c == '*') {
                ++pos;
                t = Term::mul(std::move(t), parse_primary());
            } else if (c == '(' || c == 'x' || c == 'y' || c == 'z' || c == '0') {
                t = Term::mul(std::move(t), parse_primary());
            } else {
                break;
            }
        }
        return t;
    }

    Term parse_primary() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("identity: unexpected end of term");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Term t = parse_product();
            if (!peek(')')) throw ParseError("identity: missing ')'");
            ++pos;
            return t;
        }
        if (c == 'x' || c == 'y' || c == 'z') {
            ++pos;
            return Term::variable(c - 'x');
        }
        if (c == '0') {
            ++pos;
            return Term::zero();
        }
        throw ParseError(std::string("identity: unexpected character '") + c + "'");
    }
};

}  // namespace

TermIdentity parse_identity(const std::string& text) {
    auto eq = text.find('=');
    if (eq == std::string::npos) throw ParseError("identity: missing '='");
    TermParser lp(text);
    Term lhs = lp.parse_product();
    lp.skip_ws();
    if (lp.pos != eq) throw ParseError("identity: trailing characters before '='");
    std::string rhs_text = text.substr(eq + 1);
    TermParser rp(rhs_text);
    Term rhs = rp.parse_product();
    rp.skip_ws();
    if (rp.pos != rhs_text.size()) throw ParseError("identity: trailing characters after '='");
    return {std::move(lhs), std::move(rhs), text};
}

}  // namespace alg2
