#include "fexp/parse.hpp"

#include <cctype>
#include <memory>

namespace fexp {

namespace {

struct Node {
    enum class Kind { Int, Z, W, G, Add, Sub, Mul, Div, Neg, Pow } kind;
    std::int64_t value = 0;
    std::unique_ptr<Node> lhs, rhs;
};
using NodePtr = std::unique_ptr<Node>;

NodePtr leaf(Node::Kind k, std::int64_t v = 0)
{
    auto n = std::make_unique<Node>();
    n->kind = k;
    n->value = v;
    return n;
}

NodePtr binary(Node::Kind k, NodePtr a, NodePtr b)
{
    auto n = leaf(k);
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    NodePtr parse()
    {
        NodePtr n = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return n;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::int64_t integer()
    {
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
        std::int64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_++] - '0');
            if (v > (1ll << 40)) fail("integer literal too large");
        }
        return v;
    }
    NodePtr expr()
    {
        NodePtr n = term();
        while (true) {
            if (accept('+')) n = binary(Node::Kind::Add, std::move(n), term());
            else if (accept('-')) n = binary(Node::Kind::Sub, std::move(n), term());
            else return n;
        }
    }
    NodePtr term()
    {
        NodePtr n = unary();
        while (true) {
            if (accept('*')) n = binary(Node::Kind::Mul, std::move(n), unary());
            else if (accept('/')) n = binary(Node::Kind::Div, std::move(n), unary());
            else return n;
        }
    }
    NodePtr unary()
    {
        if (accept('-')) {
            auto n = leaf(Node::Kind::Neg);
            n->lhs = unary();
            return n;
        }
        if (accept('+')) return unary();
        return power();
    }
    NodePtr power()
    {
        NodePtr base = atom();
        if (accept('^')) {
            bool negative = accept('-');
            std::int64_t e = integer();
            auto n = leaf(Node::Kind::Pow, negative ? -e : e);
            n->lhs = std::move(base);
            return n;
        }
        return base;
    }
    NodePtr atom()
    {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return leaf(Node::Kind::Int, integer());
        if (c == 'z' || c == 'w' || c == 'g') {
            ++pos_;
            return leaf(c == 'z' ? Node::Kind::Z : c == 'w' ? Node::Kind::W : Node::Kind::G);
        }
        if (accept('(')) {
            NodePtr n = expr();
            if (!accept(')')) fail("expected ')'");
            return n;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

RatFunc eval_rat(const Node& n, const FieldPtr& F)
{
    using K = Node::Kind;
    switch (n.kind) {
    case K::Int: return RatFunc::constant(F, F->from_int(n.value));
    case K::Z: return RatFunc::z(F);
    case K::W: throw ParseError("variable w not allowed in a rational function");
    case K::G:
        if (F->m() == 1) throw ParseError("g is only defined in nonprime fields");
        return RatFunc::constant(F, F->generator());
    case K::Add: return eval_rat(*n.lhs, F) + eval_rat(*n.rhs, F);
    case K::Sub: return eval_rat(*n.lhs, F) - eval_rat(*n.rhs, F);
    case K::Mul: return eval_rat(*n.lhs, F) * eval_rat(*n.rhs, F);
    case K::Div: {
        RatFunc d = eval_rat(*n.rhs, F);
        if (d.is_zero()) throw ParseError("division by zero in expression");
        return eval_rat(*n.lhs, F) / d;
    }
    case K::Neg: return -eval_rat(*n.lhs, F);
    case K::Pow: {
        RatFunc b = eval_rat(*n.lhs, F);
        if (b.is_zero() && n.value < 0) throw ParseError("zero to a negative power");
        return b.pow(n.value);
    }
    }
    throw ParseError("bad expression node");
}

// Polynomial in w with rational coefficients.
using BiRat = std::vector<RatFunc>;

BiRat birat_add(const BiRat& a, const BiRat& b, const FieldPtr& F, bool subtract)
{
    BiRat r(std::max(a.size(), b.size()), RatFunc(F));
    for (std::size_t i = 0; i < r.size(); ++i) {
        RatFunc x = i < a.size() ? a[i] : RatFunc(F);
        RatFunc y = i < b.size() ? b[i] : RatFunc(F);
        r[i] = subtract ? x - y : x + y;
    }
    return r;
}

BiRat birat_mul(const BiRat& a, const BiRat& b, const FieldPtr& F)
{
    if (a.empty() || b.empty()) return {};
    BiRat r(a.size() + b.size() - 1, RatFunc(F));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

BiRat eval_birat(const Node& n, const FieldPtr& F)
{
    using K = Node::Kind;
    switch (n.kind) {
    case K::W: return {RatFunc(F), RatFunc::constant(F, 1)};
    case K::Add: return birat_add(eval_birat(*n.lhs, F), eval_birat(*n.rhs, F), F, false);
    case K::Sub: return birat_add(eval_birat(*n.lhs, F), eval_birat(*n.rhs, F), F, true);
    case K::Mul: return birat_mul(eval_birat(*n.lhs, F), eval_birat(*n.rhs, F), F);
    case K::Neg: return birat_add({}, eval_birat(*n.lhs, F), F, true);
    case K::Div: {
        BiRat d = eval_birat(*n.rhs, F);
        while (!d.empty() && d.back().is_zero()) d.pop_back();
        if (d.size() != 1) throw ParseError("division by an expression involving w (or by zero)");
        BiRat a = eval_birat(*n.lhs, F);
        for (auto& c : a) c = c / d[0];
        return a;
    }
    case K::Pow: {
        if (n.value < 0) {
            BiRat b = eval_birat(*n.lhs, F);
            while (!b.empty() && b.back().is_zero()) b.pop_back();
            if (b.size() != 1) throw ParseError("negative power of an expression involving w");
            return {b[0].pow(n.value)};
        }
        BiRat b = eval_birat(*n.lhs, F);
        BiRat r{RatFunc::constant(F, 1)};
        for (std::int64_t i = 0; i < n.value; ++i) r = birat_mul(r, b, F);
        return r;
    }
    default: return {eval_rat(n, F)};
    }
}

} // namespace

RatFunc parse_ratfunc(const std::string& text, const FieldPtr& F)
{
    NodePtr n = Parser(text).parse();
    return eval_rat(*n, F);
}

Poly parse_poly(const std::string& text, const FieldPtr& F)
{
    RatFunc x = parse_ratfunc(text, F);
    if (!x.is_polynomial()) throw ParseError("expected a polynomial, got " + x.to_string());
    return x.num();
}

Elem parse_elem(const std::string& text, const FieldPtr& F)
{
    RatFunc x = parse_ratfunc(text, F);
    if (!x.is_constant()) throw ParseError("expected a field element, got " + x.to_string());
    return x.num()[0];
}

BiPoly parse_bipoly(const std::string& text, const FieldPtr& F)
{
    NodePtr n = Parser(text).parse();
    BiRat r = eval_birat(*n, F);
    Poly l = Poly::one(F);
    for (const auto& c : r)
        if (!c.is_zero()) l = (l * c.den()) / gcd(l, c.den());
    std::vector<Poly> coeffs;
    for (const auto& c : r) coeffs.push_back(c.is_zero() ? Poly(F) : c.num() * (l / c.den()));
    return BiPoly(F, std::move(coeffs));
}

SeriesLiteral parse_series_literal(const std::string& text, const FieldPtr& F)
{
    auto open = text.find('[');
    auto semi = text.find(';');
    auto close = text.rfind(']');
    if (open == std::string::npos || semi == std::string::npos || close == std::string::npos || !(open < semi && semi < close))
        throw ParseError("series literal must look like [m; c_m, c_m+1, ...]: \"" + text + "\"");
    SeriesLiteral s;
    std::string head = text.substr(open + 1, semi - open - 1);
    try {
        std::size_t used = 0;
        s.start = std::stoll(head, &used);
        for (std::size_t i = used; i < head.size(); ++i)
            if (!std::isspace(static_cast<unsigned char>(head[i]))) throw ParseError("bad start index");
    } catch (const std::logic_error&) {
        throw ParseError("bad start index in series literal \"" + text + "\"");
    }
    std::string body = text.substr(semi + 1, close - semi - 1);
    std::size_t pos = 0;
    while (pos <= body.size()) {
        // Split on commas at parenthesis depth 0.
        std::size_t end = pos;
        int depth = 0;
        while (end < body.size() && !(body[end] == ',' && depth == 0)) {
            if (body[end] == '(') ++depth;
            if (body[end] == ')') --depth;
            ++end;
        }
        std::string item = body.substr(pos, end - pos);
        bool blank = item.find_first_not_of(" \t\n") == std::string::npos;
        if (!blank) s.coeffs.push_back(parse_elem(item, F));
        else if (end < body.size()) throw ParseError("empty entry in series literal");
        pos = end + 1;
    }
    return s;
}

std::string format_series_literal(const SeriesLiteral& s, const FieldPtr& F)
{
    std::string out = "[" + std::to_string(s.start) + ";";
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
        out += i == 0 ? " " : ", ";
        std::string c = F->to_string(s.coeffs[i]);
        out += c.find('+') != std::string::npos ? "(" + c + ")" : c;
    }
    return out + "]";
}

} // namespace fexp
