#include "doctest.h"

#include "fexp/field.hpp"
#include "fexp/parse.hpp"
#include "fexp/poly.hpp"
#include "fexp/ratfunc.hpp"

#include <random>

using namespace fexp;

namespace {

Poly random_poly(const FieldPtr& F, std::mt19937_64& rng, int maxdeg)
{
    std::uniform_int_distribution<int> deg(0, maxdeg);
    std::uniform_int_distribution<Elem> coef(0, F->q() - 1);
    std::vector<Elem> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coef(rng);
    return Poly(F, c);
}

Poly random_nonzero(const FieldPtr& F, std::mt19937_64& rng, int maxdeg)
{
    Poly p(F);
    while (p.is_zero()) p = random_poly(F, rng, maxdeg);
    return p;
}

// Independent irreducibility oracle for degree <= 3: no roots in F_p.
bool has_root_mod_p(const std::vector<std::uint32_t>& c, std::uint32_t p)
{
    for (std::uint32_t x = 0; x < p; ++x) {
        std::uint64_t v = 0, xp = 1;
        for (auto ci : c) {
            v = (v + ci * xp) % p;
            xp = xp * x % p;
        }
        if (v == 0) return true;
    }
    return false;
}

void check_field_laws(const FieldPtr& F)
{
    const Elem q = F->q();
    for (Elem a = 0; a < q; ++a) {
        CHECK(F->add(a, 0) == a);
        CHECK(F->mul(a, 1) == a);
        CHECK(F->add(a, F->neg(a)) == 0);
        if (a != 0) CHECK(F->mul(a, F->inv(a)) == 1);
        CHECK(F->pow(a, q) == a);
        for (Elem b = 0; b < q; ++b) {
            CHECK(F->add(a, b) == F->add(b, a));
            CHECK(F->mul(a, b) == F->mul(b, a));
            // Frobenius is additive
            CHECK(F->pow(F->add(a, b), F->p()) == F->add(F->pow(a, F->p()), F->pow(b, F->p())));
            for (Elem c = 0; c < q; ++c) {
                CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
                CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
                CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
            }
        }
    }
}

} // namespace

TEST_CASE("field_make")
{
    auto F2 = make_field(2);
    CHECK(F2->q() == 2);
    CHECK(F2->mul(1, 1) == 1);

    REQUIRE_FALSE(has_root_mod_p({1, 1, 1}, 2));
    auto F4 = make_field(2, 2, std::vector<std::uint32_t>{1, 1, 1});
    CHECK(F4->q() == 4);

    REQUIRE(has_root_mod_p({1, 0, 1}, 2));
    CHECK_THROWS_AS(make_field(2, 2, std::vector<std::uint32_t>{1, 0, 1}), DomainError);
    CHECK_THROWS_AS(make_field(4, 1), DomainError);

    // Default modulus is the least irreducible: x^2+x+1 for F_4, x^3+x+1 for F_8, x^2+1 for F_9.
    CHECK(make_field(2, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(make_field(2, 3)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
    CHECK(make_field(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});
}

TEST_CASE("exhaustive field laws for F_2, F_4, F_8, F_9")
{
    for (auto [p, m] : {std::pair{2u, 1u}, {2u, 2u}, {2u, 3u}, {3u, 2u}}) check_field_laws(make_field(p, m));
}

TEST_CASE("poly_divmod examples")
{
    auto F = make_field(2);
    auto [q1, r1] = divmod(parse_poly("z^2", F), parse_poly("z^2+z+1", F));
    CHECK(q1 == parse_poly("1", F));
    CHECK(r1 == parse_poly("z+1", F));

    Poly f = parse_poly("1+z^3+z^4", F);
    auto [q2, r2] = divmod(f, Poly::one(F));
    CHECK(q2 == f);
    CHECK(r2.is_zero());

    auto [q3, r3] = divmod(Poly(F), parse_poly("z+1", F));
    CHECK(q3.is_zero());
    CHECK(r3.is_zero());

    CHECK_THROWS_AS(divmod(f, Poly(F)), DomainError);
}

TEST_CASE("divmod reconstruction on random pairs")
{
    std::mt19937_64 rng(7);
    for (auto F : {make_field(2), make_field(3), make_field(2, 2), make_field(5)}) {
        for (int i = 0; i < 250; ++i) {
            Poly f = random_poly(F, rng, 12), g = random_nonzero(F, rng, 6);
            auto [qq, r] = divmod(f, g);
            CHECK(qq * g + r == f);
            CHECK(r.degree() < g.degree());
        }
    }
}

TEST_CASE("val_p examples")
{
    auto F = make_field(2);
    CHECK(val_p(parse_ratfunc("z^3/(1+z)", F), parse_poly("z", F)) == 3);
    CHECK(val_p(parse_ratfunc("z*(1+z)^2", F), parse_poly("1+z", F)) == 2);
    CHECK(val_p(parse_ratfunc("1/(z^2+z+1)", F), parse_poly("z^2+z+1", F)) == -1);
    CHECK_FALSE(val_p(RatFunc(F), parse_poly("z", F)).has_value());
    CHECK_THROWS_AS(val_p(parse_ratfunc("z", F), parse_poly("z^2+1", F)), DomainError);
}

TEST_CASE("val_p is a valuation on random pairs")
{
    std::mt19937_64 rng(11);
    auto F = make_field(2);
    const std::vector<Poly> primes = {parse_poly("z", F), parse_poly("1+z", F), parse_poly("1+z+z^2", F)};
    for (int i = 0; i < 1000; ++i) {
        const Poly& P = primes[static_cast<std::size_t>(i) % primes.size()];
        RatFunc x(random_nonzero(F, rng, 6), random_nonzero(F, rng, 6));
        RatFunc y(random_nonzero(F, rng, 6), random_nonzero(F, rng, 6));
        auto vx = *val_p(x, P), vy = *val_p(y, P);
        CHECK(*val_p(x * y, P) == vx + vy);
        auto vs = val_p(x + y, P);
        if (vs) CHECK(*vs >= std::min(vx, vy));
    }
}

TEST_CASE("rat_degree examples and multiplicativity")
{
    auto F = make_field(2);
    CHECK(rat_degree(parse_ratfunc("z^2", F)) == 2);
    CHECK(rat_degree(parse_ratfunc("z*(1+z)", F)) == 2);
    CHECK(rat_degree(parse_ratfunc("z^2/(1+z)", F)) == 2);
    CHECK_THROWS_AS(rat_degree(parse_ratfunc("(1+z)/(1+z)", F)), DomainError);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        RatFunc x(random_nonzero(F, rng, 3), random_nonzero(F, rng, 3));
        RatFunc y(random_nonzero(F, rng, 3), random_nonzero(F, rng, 3));
        if (x.is_constant() || y.is_constant()) continue;
        CHECK(rat_degree(x.compose(y)) == rat_degree(x) * rat_degree(y));
    }
}

TEST_CASE("gcd, xgcd and irreducibility")
{
    auto F = make_field(3);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        Poly a = random_nonzero(F, rng, 8), b = random_nonzero(F, rng, 8);
        auto r = xgcd(a, b);
        CHECK(r.s * a + r.t * b == r.g);
        CHECK((a % r.g).is_zero());
        CHECK((b % r.g).is_zero());
    }
    auto F2 = make_field(2);
    CHECK(is_irreducible(parse_poly("1+z+z^3", F2)));
    CHECK_FALSE(is_irreducible(parse_poly("1+z^2", F2)));
    CHECK_FALSE(is_irreducible(parse_poly("(1+z+z^2)^2", F2)));
}

TEST_CASE("expression parser and printer round-trip")
{
    auto F2 = make_field(2);
    CHECK(parse_ratfunc("(1)/(1+z)", F2) == RatFunc(Poly::one(F2), parse_poly("1+z", F2)));
    CHECK(parse_poly("1+z^3", F2).to_string() == "1+z^3");
    CHECK(parse_ratfunc("z^-2", F2) == RatFunc(Poly::one(F2), Poly::monomial(F2, 2)));
    CHECK_THROWS_AS(parse_ratfunc("1+", F2), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("1/0", F2), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("g", F2), ParseError);

    std::mt19937_64 rng(9);
    for (auto F : {make_field(2), make_field(3), make_field(2, 2), make_field(3, 2)}) {
        for (int i = 0; i < 100; ++i) {
            RatFunc x(random_poly(F, rng, 5), random_nonzero(F, rng, 5));
            CHECK(parse_ratfunc(x.to_string(), F) == x);
        }
    }
    auto B = parse_bipoly("w^2+z*w+1", F2);
    CHECK(B.w_degree() == 2);
    CHECK(parse_bipoly(B.to_string(), F2) == B);
    CHECK(parse_bipoly("w - 1/(1+z)", F2) == parse_bipoly("(1+z)*w+1", F2));
}
