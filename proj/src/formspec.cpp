#include "qprime/formspec.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "qprime/serialize.hpp"

namespace qprime {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message)
    , position_(position)
{
}

namespace {

// linear + poly, where poly is a not-yet-converted polynomial in G2, G4, G6.
struct Value {
    QuasiForm linear;
    GeneratorMonomialCombo poly;

    bool pure_poly() const { return linear.is_zero(); }
    bool pure_scalar() const
    {
        return pure_poly()
            && std::all_of(poly.terms().begin(), poly.terms().end(),
                [](const auto& t) { return t.first == Monomial {0, 0, 0}; });
    }
    Rational scalar() const
    {
        auto it = poly.terms().find(Monomial {0, 0, 0});
        return it == poly.terms().end() ? Rational(0) : it->second;
    }
};

class Parser {
public:
    Parser(std::string_view text, EisensteinConvention conv)
        : text_(text)
        , conv_(conv)
    {
    }

    QuasiForm parse()
    {
        skip_space();
        if (at_end()) {
            fail("empty form spec");
        }
        Value v = expr();
        skip_space();
        if (!at_end()) {
            fail(std::string("unexpected '") + text_[pos_] + "'");
        }
        return materialize(v);
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

    bool at_end() const { return pos_ >= text_.size(); }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
            ++pos_;
        }
    }

    char peek()
    {
        skip_space();
        return at_end() ? '\0' : text_[pos_];
    }

    bool accept(char c)
    {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool accept_word(std::string_view word)
    {
        skip_space();
        if (text_.substr(pos_, word.size()) == word) {
            pos_ += word.size();
            return true;
        }
        return false;
    }

    Integer integer()
    {
        skip_space();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected an integer");
        }
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    int small_integer()
    {
        const std::size_t start = pos_;
        const Integer v = integer();
        if (v > 10000) {
            pos_ = start;
            fail("integer too large here");
        }
        return static_cast<int>(v.get_si());
    }

    QuasiForm materialize(const Value& v)
    {
        QuasiForm out = v.linear;
        GeneratorMonomialCombo products;
        for (const auto& [m, c] : v.poly.terms()) {
            if (m == Monomial {0, 0, 0}) {
                out.add_constant(c);
            } else if (m.a + m.b + m.c == 1) {
                out.add_eis({m.weight(), 0}, c);
            } else {
                products.add(m, c);
            }
        }
        if (!products.terms().empty()) {
            out += from_monomials(products, 60, conv_);
        }
        return out;
    }

    static Value add(Value a, const Value& b, const Rational& sign)
    {
        a.linear += b.linear * sign;
        GeneratorMonomialCombo scaled = b.poly;
        scaled *= sign;
        a.poly += scaled;
        return a;
    }

    Value multiply(const Value& a, const Value& b, std::size_t where)
    {
        if (a.pure_scalar() || b.pure_scalar()) {
            const Value& s = a.pure_scalar() ? a : b;
            Value out = a.pure_scalar() ? b : a;
            out.linear *= s.scalar();
            out.poly *= s.scalar();
            return out;
        }
        if (!a.pure_poly() || !b.pure_poly()) {
            throw ParseError(where, "products are only supported between G2, G4, G6 and scalars");
        }
        Value out;
        out.poly = a.poly * b.poly;
        return out;
    }

    Value expr()
    {
        Rational sign = 1;
        if (accept('-')) {
            sign = -1;
        } else {
            accept('+');
        }
        Value total = add(Value {}, term(), sign);
        while (true) {
            if (accept('+')) {
                total = add(std::move(total), term(), 1);
            } else if (accept('-')) {
                total = add(std::move(total), term(), -1);
            } else {
                return total;
            }
        }
    }

    bool starts_factor()
    {
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) != 0 || c == 'G' || c == 'H' || c == 'D' || c == 'S'
            || c == '(';
    }

    Value term()
    {
        Value v = factor();
        while (true) {
            const std::size_t where = pos_;
            if (accept('*')) {
                v = multiply(v, factor(), where);
            } else if (starts_factor()) {
                v = multiply(v, factor(), where);
            } else {
                return v;
            }
        }
    }

    Value factor()
    {
        skip_space();
        if (text_.substr(pos_, 5) != "DELTA" && accept('D')) {
            int order = 1;
            if (accept('^')) {
                order = small_integer();
            }
            Value inner = factor();
            Value out;
            out.linear = derivative(materialize(inner), order);
            return out;
        }
        Value base = primary();
        const std::size_t where = pos_;
        if (accept('^')) {
            const int e = small_integer();
            Value out;
            out.poly.add({0, 0, 0}, 1);
            for (int i = 0; i < e; ++i) {
                out = multiply(out, base, where);
            }
            return out;
        }
        return base;
    }

    Value primary()
    {
        const char c = peek();
        const std::size_t start = pos_;
        Value v;
        if (accept('(')) {
            v = expr();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            Integer num = integer();
            Integer den = 1;
            if (accept('/')) {
                den = integer();
                if (den == 0) {
                    pos_ = start;
                    fail("zero denominator");
                }
            }
            v.poly.add({0, 0, 0}, make_rational(num, den));
            return v;
        }
        if (accept_word("DELTA")) {
            v.linear = QuasiForm::cusp_form(12, 0);
            return v;
        }
        if (accept('G')) {
            const int k = small_integer();
            if (k < 2 || k % 2 != 0) {
                pos_ = start;
                fail("G_k needs an even k >= 2");
            }
            if (k <= 6) {
                v.poly.add({k == 2 ? 1 : 0, k == 4 ? 1 : 0, k == 6 ? 1 : 0}, 1);
            } else {
                v.linear = QuasiForm::eisenstein(k);
            }
            return v;
        }
        if (accept('H')) {
            const int k = small_integer();
            if (k < 6 || k % 2 != 0) {
                pos_ = start;
                fail("H_k needs an even k >= 6");
            }
            v.linear = hk_form(k);
            return v;
        }
        if (accept('S')) {
            const int m = small_integer();
            if (!accept('.')) {
                fail("expected '.' in S<m>.<i>");
            }
            const int i = small_integer();
            if (m % 2 != 0 || i >= cusp_dimension(m)) {
                pos_ = start;
                fail("no cusp basis element S" + std::to_string(m) + "." + std::to_string(i));
            }
            v.linear = QuasiForm::cusp_form(m, i);
            return v;
        }
        if (at_end()) {
            fail("unexpected end of input");
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    EisensteinConvention conv_;
    std::size_t pos_ = 0;
};

} // namespace

QuasiForm parse_form_spec(std::string_view spec, EisensteinConvention conv)
{
    return Parser(spec, conv).parse();
}

QuasiForm load_form(const std::string& spec, EisensteinConvention conv)
{
    if (spec.ends_with(".json")) {
        std::ifstream in(spec);
        if (!in) {
            throw ParseError(0, "cannot open QuasiForm file '" + spec + "'");
        }
        try {
            return quasiform_from_json(Json::parse(in));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(0, std::string("malformed QuasiForm JSON: ") + e.what());
        }
    }
    return parse_form_spec(spec, conv);
}

} // namespace qprime
