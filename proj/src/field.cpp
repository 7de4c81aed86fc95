#include "fexp/field.hpp"

#include <algorithm>

namespace fexp {

namespace {

using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b over F_p, b monic.
Coeffs mod_prime(Coeffs a, const Coeffs& b, std::uint32_t p)
{
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        std::uint32_t lc = a.back();
        std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i)
            a[shift + i] = (a[shift + i] + (p - lc) * b[i]) % p;
        trim(a);
    }
    return a;
}

Coeffs unpack(std::uint64_t v, std::uint32_t p, std::size_t len)
{
    Coeffs c(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
        c[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
    }
    return c;
}

bool irreducible_over_prime(const Coeffs& f, std::uint32_t p)
{
    const std::size_t deg = f.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t v = 0; v < count; ++v) {
            Coeffs g = unpack(v, p, d);
            g.push_back(1);
            if (mod_prime(f, g, p).empty()) return false;
        }
    }
    return true;
}

} // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Elem Field::add(Elem a, Elem b) const
{
    if (p_ == 2) return a ^ b;
    if (m_ == 1) return (a + b) % p_;
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    Elem r = 0, scale = 1;
    while (a != 0 || b != 0) {
        r += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

Elem Field::neg(Elem a) const
{
    if (p_ == 2) return a;
    Elem r = 0, scale = 1;
    while (a != 0) {
        r += ((p_ - a % p_) % p_) * scale;
        a /= p_;
        scale *= p_;
    }
    return r;
}

Elem Field::inv(Elem a) const
{
    if (a == 0) throw DomainError("division by zero in F_" + std::to_string(q_));
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem Field::pow(Elem a, std::int64_t e) const
{
    if (a == 0) {
        if (e < 0) throw DomainError("zero to a negative power");
        return e == 0 ? 1 : 0;
    }
    std::int64_t n = q_ - 1;
    std::int64_t k = (static_cast<std::int64_t>(log_[a]) * (e % n)) % n;
    if (k < 0) k += n;
    return exp_[k];
}

Elem Field::from_int(std::int64_t n) const
{
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

std::vector<std::uint32_t> Field::coords(Elem a) const { return unpack(a, p_, m_); }

Elem Field::from_coords(const std::vector<std::uint32_t>& c) const
{
    Elem r = 0, scale = 1;
    for (std::size_t i = 0; i < m_; ++i) {
        r += (i < c.size() ? c[i] % p_ : 0) * scale;
        scale *= p_;
    }
    return r;
}

Elem Field::slow_mul(Elem a, Elem b) const
{
    Coeffs x = coords(a), y = coords(b);
    Coeffs prod(2 * m_, 0);
    for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t j = 0; j < m_; ++j)
            prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    return from_coords(mod_prime(prod, modulus_, p_));
}

std::string Field::to_string(Elem a) const
{
    if (m_ == 1) return std::to_string(a);
    if (a == 0) return "0";
    std::string out;
    Coeffs c = coords(a);
    for (std::size_t i = 0; i < m_; ++i) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c[i]);
            continue;
        }
        if (c[i] != 1) out += std::to_string(c[i]) + "*";
        out += i == 1 ? "g" : "g^" + std::to_string(i);
    }
    return out;
}

FieldPtr make_field(std::uint32_t p, std::uint32_t m, std::optional<std::vector<std::uint32_t>> modulus)
{
    if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
    if (m == 0) throw DomainError("extension degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > (1u << 16)) throw DomainError("field too large (q > 65536)");
    }

    std::shared_ptr<Field> F(new Field());
    F->p_ = p;
    F->m_ = m;
    F->q_ = static_cast<std::uint32_t>(q);

    if (modulus) {
        Coeffs f = *modulus;
        for (auto& c : f) c %= p;
        trim(f);
        if (f.size() != m + 1 || f.back() != 1)
            throw DomainError("modulus must be monic of degree " + std::to_string(m));
        if (!irreducible_over_prime(f, p)) throw DomainError("modulus is reducible over F_" + std::to_string(p));
        F->modulus_ = f;
    } else if (m == 1) {
        F->modulus_ = {0, 1};
    } else {
        std::uint64_t count = q;
        for (std::uint64_t v = 0; v < count; ++v) {
            Coeffs f = unpack(v, p, m);
            f.push_back(1);
            if (irreducible_over_prime(f, p)) {
                F->modulus_ = f;
                break;
            }
        }
    }

    if (p != 2 && m > 1 && q <= 1024) {
        F->add_table_.resize(q * q);
        for (Elem a = 0; a < q; ++a)
            for (Elem b = 0; b < q; ++b) {
                Elem r = 0, scale = 1, x = a, y = b;
                while (x != 0 || y != 0) {
                    r += ((x % p + y % p) % p) * scale;
                    x /= p;
                    y /= p;
                    scale *= p;
                }
                F->add_table_[a * q + b] = r;
            }
    }

    // Primitive element search; any nonzero element of maximal order q-1.
    const std::uint32_t n = F->q_ - 1;
    F->log_.assign(F->q_, 0);
    F->exp_.assign(2 * static_cast<std::size_t>(n), 0);
    if (n == 1) {
        F->exp_[0] = F->exp_[1] = 1;
        return F;
    }
    for (Elem cand = 2; cand < F->q_; ++cand) {
        std::vector<Elem> powers;
        powers.reserve(n);
        Elem x = 1;
        bool ok = true;
        for (std::uint32_t k = 0; k < n; ++k) {
            if (k > 0 && x == 1) {
                ok = false;
                break;
            }
            powers.push_back(x);
            x = m == 1 ? static_cast<Elem>((static_cast<std::uint64_t>(x) * cand) % p) : F->slow_mul(x, cand);
        }
        if (!ok || x != 1) continue;
        for (std::uint32_t k = 0; k < 2 * n; ++k) F->exp_[k] = powers[k % n];
        for (std::uint32_t k = 0; k < n; ++k) F->log_[powers[k]] = k;
        return F;
    }
    throw DomainError("no primitive element found (modulus not irreducible?)");
}

} // namespace fexp
