#include <mtproot/parser.hh>
#include <mtproot/polyops.hh>

#include <cctype>
#include <sstream>

namespace mtproot {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    mpoly run()
    {
        mpoly e = expr();
        skip_ws();
        if (pos_ < s_.size())
            fail("unexpected trailing input");
        return e;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const
    {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
            if (s_[i] == '\n') {
                ++line;
                col = 1;
            } else
                ++col;
        }
        throw parse_error(msg, line, col);
    }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_]))
            ++pos_;
    }

    bool eat(char c)
    {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek()
    {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    mpoly expr()
    {
        bool neg = eat('-');
        mpoly acc = term();
        if (neg)
            acc = -acc;
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    mpoly term()
    {
        bool neg = eat('-');
        mpoly acc = factor();
        while (eat('*'))
            acc = acc * factor();
        return neg ? -acc : acc;
    }

    mpoly factor()
    {
        mpoly a = atom();
        if (eat('^')) {
            skip_ws();
            if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_]))
                fail("expected a nonnegative integer exponent");
            unsigned long e = 0;
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
                e = e * 10 + (unsigned long)(s_[pos_] - '0');
                if (e > 10000)
                    fail("exponent too large");
                ++pos_;
            }
            return a.pow((unsigned)e);
        }
        return a;
    }

    ZZ integer_literal()
    {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_]))
            fail("expected an integer");
        std::string digits;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_]))
            digits += s_[pos_++];
        return ZZ(digits);
    }

    mpoly atom()
    {
        skip_ws();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        char c = s_[pos_];
        if (std::isdigit((unsigned char)c)) {
            ZZ num = integer_literal();
            if (eat('/')) {
                ZZ den = integer_literal();
                if (den == 0)
                    fail("rational literal with zero denominator");
                return mpoly(rat(num, den));
            }
            return mpoly(QQ(num));
        }
        if (c == '(') {
            ++pos_;
            mpoly e = expr();
            if (!eat(')'))
                fail("expected ')'");
            return e;
        }
        if (std::isalpha((unsigned char)c)) {
            std::string name;
            while (pos_ < s_.size() && std::isalpha((unsigned char)s_[pos_]))
                name += s_[pos_++];
            if (name == "x")
                return mpoly::var(VX);
            if (name == "sin" || name == "cos") {
                if (!eat('('))
                    fail("expected '(' after " + name);
                skip_ws();
                if (pos_ >= s_.size() || s_[pos_] != 'x')
                    fail(name + " accepts only the variable x");
                ++pos_;
                if (!eat(')'))
                    fail("expected ')'");
                return mpoly::var(name == "sin" ? VY : VZ);
            }
            fail("unknown identifier '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

ParsedMTP parse_mtp(const std::string& text)
{
    Parser p(text);
    return {p.run(), text};
}

std::string mtp_to_input(const mpoly& f)
{
    if (f.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        QQ a = c;
        if (first) {
            if (sgn(a) < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0)
                a = -a;
        }
        first = false;
        bool unit = (a == 1);
        bool any_var = m[0] || m[1] || m[2];
        bool need_star = false;
        if (!unit || !any_var) {
            os << a.get_str();
            need_star = true;
        }
        const char* names[3] = {"x", "sin(x)", "cos(x)"};
        for (int v = 0; v < kMaxVars; ++v) {
            if (!m[v])
                continue;
            if (need_star)
                os << "*";
            os << names[v];
            if (m[v] > 1)
                os << "^" << m[v];
            need_star = true;
        }
    }
    return os.str();
}

} // namespace mtproot
