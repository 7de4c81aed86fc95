#include "doctest.h"

#include "fexp/christol.hpp"
#include "fexp/parse.hpp"

#include <random>

using namespace fexp;

namespace {

constexpr Orientation kAsc = Orientation::Ascending;

RatFunc rf(const std::string& s, const FieldPtr& F) { return parse_ratfunc(s, F); }

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Power-series coefficients of N/D by long division (D(0) != 0).
std::vector<Elem> series_of(const RatFunc& x, std::size_t count)
{
    const FieldPtr& F = x.field();
    const Poly& N = x.num();
    const Poly& D = x.den();
    std::vector<Elem> out(count, 0);
    const Elem inv = F->inv(D[0]);
    for (std::size_t n = 0; n < count; ++n) {
        Elem s = static_cast<std::int64_t>(n) <= N.degree() ? N[static_cast<std::int64_t>(n)] : 0;
        for (std::size_t k = 1; k <= n && static_cast<std::int64_t>(k) <= D.degree(); ++k)
            s = F->sub(s, F->mul(D[static_cast<std::int64_t>(k)], out[n - k]));
        out[n] = F->mul(s, inv);
    }
    return out;
}

// sum_{n<count} c_n z^n of a power series given by coefficients, times P(z).
std::vector<Elem> times_poly(const std::vector<Elem>& f, const Poly& P, const FieldPtr& F)
{
    std::vector<Elem> out(f.size(), 0);
    for (std::int64_t k = 0; k <= P.degree(); ++k)
        for (std::size_t n = static_cast<std::size_t>(k); n < f.size(); ++n)
            out[n] = F->add(out[n], F->mul(P[k], f[n - static_cast<std::size_t>(k)]));
    return out;
}

// Residual c_{-1} + sum_i c_i f^{Q^i} modulo z^count, with f^{Q^i} read
// off the coefficients (Frobenius is additive and fixes F_Q).
bool relation_holds(const LinearRelation& rel, const std::vector<Elem>& f, const FieldPtr& F)
{
    const std::size_t count = f.size();
    std::vector<Elem> acc(count, 0);
    for (std::int64_t k = 0; k <= rel.constant.degree() && static_cast<std::size_t>(k) < count; ++k)
        acc[static_cast<std::size_t>(k)] = rel.constant[k];
    std::uint64_t qi = 1;
    for (const Poly& c : rel.c) {
        std::vector<Elem> fq(count, 0);
        for (std::size_t n = 0; n * qi < count; ++n) fq[n * qi] = f[n];
        const auto term = times_poly(fq, c, F);
        for (std::size_t n = 0; n < count; ++n) acc[n] = F->add(acc[n], term[n]);
        qi *= F->q();
    }
    for (Elem a : acc)
        if (a != 0) return false;
    return true;
}

std::vector<Elem> dfao_prefix(const Dfao& m, std::size_t count)
{
    std::vector<Elem> out;
    for (std::uint64_t n = 0; n < count; ++n) out.push_back(m.eval(n));
    return out;
}

} // namespace

TEST_CASE("ore_form examples")
{
    auto F = make_field(2);
    OreForm ore = ore_form(make_spec("w^2+w+z", "z", kAsc, F));
    REQUIRE(ore.c.size() == 3);
    CHECK(ore.c[0] == parse_poly("z", F));
    CHECK(ore.c[1] == parse_poly("1+z", F));
    CHECK(ore.c[2] == parse_poly("1", F));
    CHECK(ore.verified_precision == 1024);

    // Oracle: z f + (1+z) f^2 + f^4 on the power-of-two indicator.
    std::vector<Elem> f(256);
    for (std::size_t n = 0; n < f.size(); ++n) f[n] = is_power_of_two(n);
    LinearRelation as_rel{Poly(F), ore.c, 0};
    CHECK(relation_holds(as_rel, f, F));

    OreForm geo = ore_form(spec_from_ratfunc(rf("1/(1+z)", F), kAsc));
    CHECK(!geo.c[0].is_zero());
    CHECK(relation_holds(LinearRelation{Poly(F), geo.c, 0}, series_of(rf("1/(1+z)", F), 256), F));

    CHECK_THROWS_AS(ore_form(make_spec("w^2+w", "0", kAsc, F)), DomainError);
}

TEST_CASE("encode examples")
{
    auto F = make_field(2);
    const AlgebraicSpec spec = make_spec("w^2+w+z", "z", kAsc, F);
    Dfao m = encode(spec, 4096);
    CHECK(m.size() <= 4);
    const LaurentStream f = hensel_root(spec);
    for (std::uint64_t n = 0; n < 4096; ++n) {
        CHECK(m.eval(n) == f.coeff(static_cast<std::int64_t>(n)));
        CHECK(m.eval(n) == (is_power_of_two(n) ? 1u : 0u));
    }

    Dfao ones = encode(spec_from_ratfunc(rf("1/(1+z)", F), kAsc));
    CHECK(ones.size() == 1);
    CHECK(ones.eval(12345) == 1);

    Dfao cube = encode(spec_from_ratfunc(rf("z^3", F), kAsc));
    for (std::uint64_t n = 0; n < 1024; ++n) CHECK(cube.eval(n) == (n == 3 ? 1u : 0u));
}

TEST_CASE("encode agrees with long division on random rationals")
{
    std::mt19937_64 rng(17);
    for (auto [p, m] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
        auto F = make_field(p, m);
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<Elem> num(1 + rng() % 4), den(1 + rng() % 4);
            for (auto& c : num) c = static_cast<Elem>(rng() % F->q());
            for (auto& c : den) c = static_cast<Elem>(rng() % F->q());
            den[0] = 1;
            const RatFunc x(Poly(F, num), Poly(F, den));
            if (x.is_zero()) continue;
            Dfao a = encode(spec_from_ratfunc(x, kAsc), 512);
            CHECK(a.base() == F->q());
            CHECK(dfao_prefix(a, 2048) == series_of(x, 2048));
        }
    }
}

TEST_CASE("decode examples")
{
    auto F = make_field(2);
    Dfao p2(2, {{0, 1}, {1, 2}, {2, 2}}, {0, 1, 0});
    DecodeResult d = decode(p2, F);
    CHECK(d.R == parse_bipoly("w^2+w+z", F));
    CHECK(d.relation.verified_precision == 1024);

    Dfao ones(2, {{0, 0}}, {1});
    CHECK(decode(ones, F).R == parse_bipoly("(1+z)*w+1", F));

    Dfao zero(2, {{0, 0}}, {0});
    CHECK(decode(zero, F).R == parse_bipoly("w", F));

    Dfao squares_like(2, {{0, 1}, {1, 1}}, {0, 1});  // n -> [n > 0]
    DecodeResult s = decode(squares_like, F);
    CHECK(relation_holds(s.relation, dfao_prefix(squares_like, 1024), F));
}

TEST_CASE("decode rejects non-field outputs and wrong bases")
{
    auto F = make_field(2);
    CHECK_THROWS_AS(decode(Dfao(2, {{0, 0}}, {3}), F), DomainError);
    CHECK_THROWS_AS(decode(Dfao(3, {{0, 0, 0}}, {0}), F), DomainError);
}

TEST_CASE("round trip decode(encode(spec)) on the corpus")
{
    auto F2 = make_field(2);
    auto F3 = make_field(3);
    auto F4 = make_field(2, 2);
    const std::vector<AlgebraicSpec> corpus{
        make_spec("w^2+w+z", "z", kAsc, F2),
        spec_from_ratfunc(rf("1/(1+z)", F2), kAsc),
        spec_from_ratfunc(rf("(1+z^2)/(1+z+z^3)", F2), kAsc),
        make_spec("w^3+w+z", "z", kAsc, F2),
        make_spec("w^3-w-z", "-z", kAsc, F3),
        make_spec("w^4+w+z", "z", kAsc, F4),
    };
    for (const AlgebraicSpec& spec : corpus) {
        const FieldPtr& F = spec.field();
        Dfao m = encode(spec, 4096);
        DecodeResult d = decode(m, F, 1024);
        const LaurentStream f = hensel_root(spec);
        CHECK(relation_holds(d.relation, f.coeffs(0, 1024), F));

        // Base q against base p on 4096 terms.
        if (F->m() > 1) {
            Dfao base_p = dfao_from_power_base(m, F->p());
            for (std::uint64_t n = 0; n < 4096; ++n) CHECK(base_p.eval(n) == m.eval(n));
            CHECK(decode(base_p, F, 1024).R == d.R);
        }
    }
}

TEST_CASE("periodic_to_dfao matches the certified digits")
{
    auto F = make_field(2);
    auto gamma = span_system({ModelElem(rf("1", F)), ModelElem(rf("z", F))}, BaseContext(F, Model::VZ, rf("z^2", F)));
    for (const char* x : {"1/(1+z+z^2)", "z^-3/(1+z^3)", "(1+z)/(1+z^5)"}) {
        DigitExpansion d = expand(ModelElem(rf(x, F)), gamma);
        PeriodCertificate cert = detect_period_exact(rf(x, F), gamma);
        Dfao m = periodic_to_dfao(d, cert, 2);
        for (std::int64_t n = 0; n < 1024; ++n) CHECK(m.eval(static_cast<std::uint64_t>(n)) == d.digit(d.start() + n));
    }
}

namespace {

ResidueSystem span_z2(const FieldPtr& F)
{
    return span_system({ModelElem(rf("1", F)), ModelElem(rf("z", F))}, BaseContext(F, Model::VZ, rf("z^2", F)));
}

} // namespace

TEST_CASE("span_christol on the power-of-two series")
{
    auto F = make_field(2);
    const ResidueSystem gamma = span_z2(F);
    const ModelElem x(hensel_root(make_spec("w^2+w+z", "z", kAsc, F)));
    SpanChristol sc = span_christol(x, gamma, 512);
    CHECK(sc.expansion.start() == 0);

    // Oracle: digit k is c_{2k} + c_{2k+1} z, indexed as c_{2k} + 2 c_{2k+1}.
    const std::vector<const char*> expected{"z", "1", "1", "0", "1", "0", "0", "0", "1"};
    for (std::size_t k = 0; k < expected.size(); ++k) CHECK(sc.expansion.digit_value(static_cast<std::int64_t>(k)).rational() == rf(expected[k], F));
    for (std::uint64_t k = 0; k < 4096; ++k) {
        const Symbol want = (is_power_of_two(2 * k) ? 1u : 0u) + 2u * (is_power_of_two(2 * k + 1) ? 1u : 0u);
        CHECK(sc.automaton.eval(k) == want);
    }
    const DigitExpansion direct = expand(x, gamma);
    CHECK(sc.expansion.prefix(512) == direct.prefix(512));
}

TEST_CASE("span_christol on rational samples")
{
    auto F = make_field(2);
    const ResidueSystem gamma = span_z2(F);
    for (const char* s : {"1/(1+z)", "z^-3*(1+z^2)/(1+z+z^4)", "(z+z^5)/(1+z^3+z^7)", "1+z", "z^-1"}) {
        const RatFunc x = rf(s, F);
        SpanChristol sc = span_christol(ModelElem(x), gamma, 512);
        const DigitExpansion direct = expand(ModelElem(x), gamma);
        CHECK(sc.expansion.start() == direct.start());
        CHECK(sc.expansion.prefix(512) == direct.prefix(512));
        PeriodCertificate cert = detect_period_exact(x, gamma);
        Dfao periodic = periodic_to_dfao(direct, cert, 2);
        for (std::uint64_t n = 0; n < 4096; ++n) CHECK(sc.automaton.eval(n) == periodic.eval(n));
    }
}

TEST_CASE("span_christol over other fields and models")
{
    // F_3 with pi = z, Gamma = F_3: base-3 digits of the coefficients.
    auto F3 = make_field(3);
    auto g3 = span_system({ModelElem(rf("1", F3))}, BaseContext(F3, Model::VZ, rf("z", F3)));
    const ModelElem cubic(hensel_root(make_spec("w^3-w-z", "-z", kAsc, F3)));
    CHECK(span_christol(cubic, g3, 512).expansion.prefix(512) == expand(cubic, g3).prefix(512));

    // F_4 as a prime-field span {1, a} with pi = z/(1+z).
    auto F4 = make_field(2, 2);
    auto g4 = span_system({ModelElem(rf("1", F4)), ModelElem(RatFunc::constant(F4, 2))},
                          BaseContext(F4, Model::VZ, rf("z/(1+z)", F4)), true);
    REQUIRE(g4.complete());
    const ModelElem quartic(hensel_root(make_spec("w^4+w+z", "z", kAsc, F4)));
    SpanChristol s4 = span_christol(quartic, g4, 512);
    CHECK(s4.automaton.base() == 2);
    CHECK(s4.expansion.prefix(512) == expand(quartic, g4).prefix(512));

    // Degree model: pi = 1/z over F_2 with Gamma = F_2.
    auto gd = span_system({ModelElem(rf("1", F3))}, BaseContext(F3, Model::VDeg, rf("1/z", F3)));
    const RatFunc r = rf("(1+z^4)/(z^2+2*z^5+1)", F3);
    CHECK(span_christol(ModelElem(r), gd, 256).expansion.prefix(256) == expand(ModelElem(r), gd).prefix(256));
}

TEST_CASE("span_christol on an element of Gamma is a single digit")
{
    auto F = make_field(2);
    SpanChristol sc = span_christol(ModelElem(rf("1+z", F)), span_z2(F), 256);
    CHECK(sc.automaton.eval(0) == 3);
    for (std::uint64_t n = 1; n < 1024; ++n) CHECK(sc.automaton.eval(n) == 0);
}

TEST_CASE("shifted_christol matches the direct expansion")
{
    auto F = make_field(2);
    const ResidueSystem gamma = span_z2(F);
    const ModelElem xi(rf("z^2", F));
    const ResidueSystem shifted = shift_system(gamma, xi);
    for (const char* s : {"1/(1+z)", "z^-2/(1+z+z^2)", "1+z^3"}) {
        const ModelElem x(rf(s, F));
        ShiftedChristol sh = shifted_christol(x, gamma, xi, 128);
        CHECK(sh.expansion.prefix(128) == expand(x, shifted).prefix(128));
    }
    const ModelElem f(hensel_root(make_spec("w^2+w+z", "z", kAsc, F)));
    CHECK(shifted_christol(f, gamma, xi, 128).expansion.prefix(128) == expand(f, shifted).prefix(128));

    // x = xi / (1 - pi): every a_n is 0 and every digit is xi.
    ShiftedChristol flat = shifted_christol(ModelElem(rf("z^2/(1+z^2)", F)), gamma, xi, 128);
    for (Digit a : flat.expansion.prefix(128)) CHECK(flat.expansion.system().reps()[a].rational() == rf("z^2", F));

    // xi = 0 reproduces span_christol.
    const ModelElem x(rf("1/(1+z)", F));
    CHECK(shifted_christol(x, gamma, ModelElem(RatFunc(F)), 128).expansion.prefix(128) ==
          span_christol(x, gamma, 128).expansion.prefix(128));
}

TEST_CASE("power-series digits over F_2")
{
    auto F = make_field(2);
    const ModelElem f1(rf("1/(1+z)", F)), f2(rf("z/(1+z)", F));
    PowerSeriesDigits d = q2_powerseries_digits(ModelElem(RatFunc(F)), f1, f2, 256);
    const auto prefix = d.expansion.prefix(256);
    for (std::size_t n = 0; n < prefix.size(); ++n) CHECK(prefix[n] == (n % 2 == 0 ? 1u : 0u));
    const ResidueSystem sys(BaseContext(F, Model::VZ, rf("z", F)), {f1, f2});
    CHECK(prefix == expand(ModelElem(RatFunc(F)), sys).prefix(256));

    // Swapped order: the selector still maps constant term 1 to f1.
    PowerSeriesDigits swapped = q2_powerseries_digits(ModelElem(RatFunc(F)), f2, f1, 256);
    for (std::size_t n = 0; n < 256; ++n) CHECK(swapped.expansion.digit(static_cast<std::int64_t>(n)) == 1 - prefix[n]);

    PowerSeriesDigits single = q2_powerseries_digits(f1, f1, f2, 256);
    CHECK(single.expansion.prefix(256) == expand(f1, sys).prefix(256));

    const ModelElem one(rf("1", F)), z(rf("z", F));
    const ModelElem pw(hensel_root(make_spec("w^2+w+z", "z", kAsc, F)));
    const ResidueSystem sys2(BaseContext(F, Model::VZ, rf("z", F)), {one, z});
    CHECK(q2_powerseries_digits(pw, one, z, 256).expansion.prefix(256) == expand(pw, sys2).prefix(256));

    const ModelElem g1(hensel_root(make_spec("w^2+w+z", "1+z", kAsc, F)));
    const ResidueSystem sys3(BaseContext(F, Model::VZ, rf("z", F)), {g1, f2});
    const ModelElem x(rf("1/(1+z+z^3)", F));
    CHECK(q2_powerseries_digits(x, g1, f2, 256).expansion.prefix(256) == expand(x, sys3).prefix(256));

    CHECK_THROWS_AS(q2_powerseries_digits(x, f1, f1, 64), DomainError);
}

TEST_CASE("automatic digits give an algebraic value")
{
    // x = sum_gamma gamma x_gamma with x_gamma = sum_{a_n = gamma} pi^n.
    auto F = make_field(2);
    const ResidueSystem gamma = span_z2(F);
    const AlgebraicSpec spec = make_spec("w^2+w+z", "z", kAsc, F);
    const ModelElem x(hensel_root(spec));
    SpanChristol sc = span_christol(x, gamma, 512);
    const std::size_t V = 512;
    std::vector<Elem> total(V, 0);
    for (Digit g = 0; g < gamma.size(); ++g) {
        Dfao indicator = dfao_minimize(dfao_map(sc.automaton, [g](Symbol s) { return s == g ? 1u : 0u; }));
        const std::vector<Elem> in_pi = dfao_prefix(indicator, V);
        DecodeResult d = decode(indicator, F, static_cast<std::int64_t>(V));
        CHECK(relation_holds(d.relation, in_pi, F));
        // pi = z^2: x_gamma has coefficient in_pi[n] at z^{2n}.
        std::vector<Elem> in_z(V, 0);
        for (std::size_t n = 0; 2 * n < V; ++n) in_z[2 * n] = in_pi[n];
        const auto term = times_poly(in_z, gamma.reps()[g].rational().num(), F);
        for (std::size_t n = 0; n < V; ++n) total[n] = F->add(total[n], term[n]);
    }
    CHECK(total == hensel_root(spec).coeffs(0, static_cast<std::int64_t>(V)));
}

TEST_CASE("twisting Gamma keeps the digit indices and kernel profile")
{
    auto F = make_field(2);
    const ResidueSystem gamma = span_z2(F);
    const RatFunc pi = rf("z^2", F);
    const ModelElem f(hensel_root(make_spec("w^2+w+z", "z", kAsc, F)));
    for (std::int64_t L : {1, 2, 3}) {
        const ResidueSystem twisted = twist_system(gamma, L);
        const LaurentStream scale = LaurentStream::from_ratfunc(RatFunc::constant(F, 1) - pi.pow(L), kAsc);
        const ModelElem y(scale * f.stream(kAsc));
        const auto a = expand(f, gamma).prefix(2048);
        const auto b = expand(y, twisted).prefix(2048);
        CHECK(a == b);
        std::vector<Symbol> sa(a.begin(), a.end()), sb(b.begin(), b.end());
        CHECK(kernel_profile(sa, 2, 3, 256).counts == kernel_profile(sb, 2, 3, 256).counts);
        CHECK(kernel_profile(sa, 2, 3, 256).bounded());
    }
}
