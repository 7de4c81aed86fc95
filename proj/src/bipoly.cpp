#include "fexp/bipoly.hpp"

#include <algorithm>

namespace fexp {

std::int64_t BiPoly::z_degree() const
{
    std::int64_t d = kDegNegInf;
    for (const auto& c : c_) d = std::max(d, c.degree());
    return d;
}

BiPoly BiPoly::derivative_w() const
{
    std::vector<Poly> r;
    for (std::size_t j = 1; j < c_.size(); ++j) r.push_back(c_[j].scaled(F_->from_int(static_cast<std::int64_t>(j))));
    return BiPoly(F_, std::move(r));
}

BiPoly BiPoly::primitive() const
{
    if (is_zero()) return *this;
    Poly g(F_);
    for (const auto& c : c_) g = gcd(g, c);
    std::vector<Poly> r;
    Elem li = 1;
    for (const auto& c : c_) r.push_back(c / g);
    li = F_->inv(r.back().leading());
    for (auto& c : r) c = c.scaled(li);
    return BiPoly(F_, std::move(r));
}

std::string BiPoly::to_string() const
{
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        const Poly& c = c_[j];
        if (c.is_zero()) continue;
        if (!out.empty()) out += "+";
        std::string cs = c.to_string("z");
        if (j == 0) {
            out += cs;
            continue;
        }
        bool compound = cs.find('+') != std::string::npos;
        if (cs != "1") out += (compound ? "(" + cs + ")" : cs) + "*";
        out += "w";
        if (j > 1) out += "^" + std::to_string(j);
    }
    return out;
}

} // namespace fexp
