#pragma once

#include "arrfactor/matrix.hpp"

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace arrfactor {

/// Parses expressions such as "15 x + (2 zeta^6 - 1) y - i z" into the
/// covector of a homogeneous linear form. Tokens: integers, `zeta`, `i`
/// (zeta^(n/4), needs 4 | n), the given single-letter variables, + - * / ^
/// and parentheses; juxtaposition multiplies.
class LinearFormParser {
public:
    LinearFormParser(const CycField& field, std::string variables) : field_(&field), vars_(std::move(variables)) {}

    CycVector parse(std::string_view text) const
    {
        State st{text, 0};
        Value v = expr(st);
        skip_space(st);
        if (st.pos != st.text.size()) {
            fail(st, "unexpected trailing input");
        }
        if (!v.constant.is_zero()) {
            fail(st, "form has a nonzero constant term");
        }
        if (!v.linear) {
            fail(st, "form has no variable");
        }
        return v.coeffs;
    }

private:
    struct State {
        std::string_view text;
        std::size_t pos;
    };

    struct Value {
        CycNum constant;
        CycVector coeffs;
        bool linear = false;
    };

    [[noreturn]] static void fail(const State& st, const std::string& what)
    {
        throw std::invalid_argument("linear form '" + std::string(st.text) + "' at offset " + std::to_string(st.pos)
                                    + ": " + what);
    }

    static void skip_space(State& st)
    {
        while (st.pos < st.text.size() && std::isspace(static_cast<unsigned char>(st.text[st.pos]))) {
            ++st.pos;
        }
    }

    static char peek(State& st)
    {
        skip_space(st);
        return st.pos < st.text.size() ? st.text[st.pos] : '\0';
    }

    Value constant(const CycNum& c) const { return Value{c, CycVector(vars_.size(), CycNum(*field_)), false}; }

    Value add(Value a, const Value& b, bool subtract) const
    {
        if (subtract) {
            a.constant -= b.constant;
        } else {
            a.constant += b.constant;
        }
        for (std::size_t k = 0; k < a.coeffs.size(); ++k) {
            if (subtract) {
                a.coeffs[k] -= b.coeffs[k];
            } else {
                a.coeffs[k] += b.coeffs[k];
            }
        }
        a.linear = a.linear || b.linear;
        return a;
    }

    Value mul(const State& st, Value a, Value b) const
    {
        if (a.linear && b.linear) {
            fail(st, "product of two linear terms");
        }
        if (a.linear) {
            std::swap(a, b);
        }
        const CycNum c = a.constant;
        b.constant = b.constant * c;
        for (auto& x : b.coeffs) {
            x = x * c;
        }
        return b;
    }

    Value expr(State& st) const
    {
        Value acc = constant(CycNum(*field_));
        bool first = true;
        while (true) {
            char c = peek(st);
            bool subtract = false;
            if (c == '+' || c == '-') {
                subtract = c == '-';
                ++st.pos;
            } else if (!first) {
                break;
            }
            acc = add(std::move(acc), term(st), subtract);
            first = false;
        }
        return acc;
    }

    static bool starts_factor(char c) { return c == '(' || std::isalnum(static_cast<unsigned char>(c)); }

    Value term(State& st) const
    {
        Value acc = power(st);
        while (true) {
            char c = peek(st);
            if (c == '*') {
                ++st.pos;
                acc = mul(st, std::move(acc), power(st));
            } else if (c == '/') {
                ++st.pos;
                Value d = power(st);
                if (d.linear || d.constant.is_zero()) {
                    fail(st, "division by a non-constant or zero");
                }
                acc = mul(st, std::move(acc), constant(d.constant.inverse()));
            } else if (starts_factor(c)) {
                acc = mul(st, std::move(acc), power(st));
            } else {
                break;
            }
        }
        return acc;
    }

    Value power(State& st) const
    {
        Value base = primary(st);
        if (peek(st) != '^') {
            return base;
        }
        ++st.pos;
        skip_space(st);
        std::size_t start = st.pos;
        while (st.pos < st.text.size() && std::isdigit(static_cast<unsigned char>(st.text[st.pos]))) {
            ++st.pos;
        }
        if (start == st.pos) {
            fail(st, "expected exponent");
        }
        if (base.linear) {
            fail(st, "power of a linear term");
        }
        const long e = std::stol(std::string(st.text.substr(start, st.pos - start)));
        CycNum r(*field_, 1);
        for (long k = 0; k < e; ++k) {
            r = r * base.constant;
        }
        return constant(r);
    }

    Value primary(State& st) const
    {
        char c = peek(st);
        if (c == '(') {
            ++st.pos;
            Value v = expr(st);
            if (peek(st) != ')') {
                fail(st, "expected ')'");
            }
            ++st.pos;
            return v;
        }
        if (c == '-' || c == '+') {
            ++st.pos;
            Value v = power(st);
            return c == '-' ? mul(st, constant(CycNum(*field_, -1)), std::move(v)) : v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = st.pos;
            while (st.pos < st.text.size() && std::isdigit(static_cast<unsigned char>(st.text[st.pos]))) {
                ++st.pos;
            }
            return constant(CycNum(*field_, Rat(Int(std::string(st.text.substr(start, st.pos - start))))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = st.pos;
            while (st.pos < st.text.size() && std::isalpha(static_cast<unsigned char>(st.text[st.pos]))) {
                ++st.pos;
            }
            const std::string word(st.text.substr(start, st.pos - start));
            if (word == "zeta") {
                return constant(CycNum::zeta(*field_));
            }
            if (word == "i") {
                if (field_->conductor() % 4 != 0) {
                    fail(st, "'i' needs a conductor divisible by 4");
                }
                return constant(CycNum::zeta_pow(*field_, field_->conductor() / 4));
            }
            if (word.size() == 1) {
                auto k = vars_.find(word[0]);
                if (k != std::string::npos) {
                    Value v = constant(CycNum(*field_));
                    v.coeffs[k] = CycNum(*field_, 1);
                    v.linear = true;
                    return v;
                }
            }
            st.pos = start;
            fail(st, "unknown identifier '" + word + "'");
        }
        fail(st, c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
    }

    const CycField* field_;
    std::string vars_;
};

} // namespace arrfactor
