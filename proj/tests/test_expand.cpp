#include "doctest.h"

#include "fexp/expand.hpp"
#include "fexp/parse.hpp"

#include <random>

using namespace fexp;

namespace {

RatFunc rf(const std::string& s, const FieldPtr& F) { return parse_ratfunc(s, F); }

std::vector<ModelElem> elems(std::initializer_list<const char*> xs, const FieldPtr& F)
{
    std::vector<ModelElem> out;
    for (auto x : xs) out.emplace_back(rf(x, F));
    return out;
}

ResidueSystem span_vz(const FieldPtr& F, const char* pi, std::initializer_list<const char*> gens)
{
    return span_system(elems(gens, F), BaseContext(F, Model::VZ, rf(pi, F)));
}

// Greedy digits over {0, 1} for pi with v_z(pi) = 1, written against RatFunc directly.
std::vector<int> binary_greedy(RatFunc r, const RatFunc& pi, std::size_t count)
{
    const FieldPtr& F = r.field();
    std::vector<int> out;
    for (std::size_t n = 0; n < count; ++n) {
        Elem c = r.is_zero() ? 0 : F->div(r.num()[0], r.den()[0]);
        out.push_back(static_cast<int>(c));
        r = (r - RatFunc::constant(F, c)) / pi;
    }
    return out;
}

RatFunc random_rational(const FieldPtr& F, std::mt19937_64& rng, int max_deg)
{
    for (;;) {
        std::vector<Elem> n(1 + rng() % static_cast<unsigned>(max_deg)), d(1 + rng() % static_cast<unsigned>(max_deg));
        for (auto& c : n) c = static_cast<Elem>(rng() % F->q());
        for (auto& c : d) c = static_cast<Elem>(rng() % F->q());
        Poly dn(F, d);
        if (dn.is_zero()) continue;
        return RatFunc(Poly(F, n), dn);
    }
}

struct Setting {
    std::string name;
    ResidueSystem gamma;
};

std::vector<Setting> property_a_settings()
{
    auto F = make_field(2);
    std::vector<Setting> s;
    s.push_back({"z^2 span{1,z}", span_vz(F, "z^2", {"1", "z"})});
    s.push_back({"z^2/(1+z) span{1,z}", span_vz(F, "z^2/(1+z)", {"1", "z"})});
    s.push_back({"z F_2", span_vz(F, "z", {"1"})});
    Poly P = parse_poly("z^2+z+1", F);
    s.push_back({"P=z^2+z+1", span_system(elems({"1", "z"}, F), BaseContext(F, Model::VP, RatFunc(P), P))});
    s.push_back({"vdeg 1/z^2", span_system(elems({"1", "1/z"}, F), BaseContext(F, Model::VDeg, rf("1/z^2", F)))});
    return s;
}

} // namespace

TEST_CASE("expand examples")
{
    auto F = make_field(2);
    auto G = span_vz(F, "z^2", {"1", "z"});
    for (std::size_t i = 0; i < G.size(); ++i) {
        auto d = expand(G.reps()[i], G);
        CHECK(d.start() == 0);
        CHECK(d.digit(0) == i);
        for (std::int64_t n = 1; n < 20; ++n) CHECK(d.digit(n) == 0);
    }

    auto x = rf("1/(1+z)", F);
    auto d = expand(x, G);
    for (std::int64_t n = 0; n < 200; ++n) CHECK(G.reps()[d.digit(n)].to_string() == "1+z");
    // Oracle: the partial sums agree with the series of x to order 2N.
    auto s = LaurentStream::from_ratfunc(d.partial_sum(100).rational(), Orientation::Ascending);
    CHECK(stream_eq(s, LaurentStream::from_ratfunc(x, Orientation::Ascending), 199));

    ResidueSystem B(BaseContext(F, Model::VZ, rf("z*(1+z)", F)), elems({"0", "1"}, F));
    auto w = expand(rf("1+z", F), B);
    std::vector<Digit> expect = {1, 1, 1, 0, 1, 0, 0, 0, 1};
    CHECK(w.prefix(9) == expect);
    auto oracle = binary_greedy(rf("1+z", F), rf("z*(1+z)", F), 300);
    for (std::size_t n = 0; n < oracle.size(); ++n) CHECK(static_cast<int>(w.digit(static_cast<std::int64_t>(n))) == oracle[n]);
}

TEST_CASE("start index and negative valuations")
{
    auto F = make_field(2);
    auto G = span_vz(F, "z^2", {"1", "z"});
    auto x = rf("1/z^3 + 1", F);
    auto d = expand(x, G);
    CHECK(d.start() == -2);
    CHECK(d.partial_sum(40).rational() == x);
    CHECK(expand(rf("z^5", F), G).start() == 0);
    CHECK(expand(rf("z^5", F), G, Engine::Auto, 2).digit(2) == 2);
    CHECK_THROWS_AS(expand(rf("z", F), G, Engine::Auto, 1), DomainError);
}

TEST_CASE("exact and series engines agree")
{
    std::mt19937_64 rng(1);
    for (auto& st : property_a_settings()) {
        if (st.gamma.context().model() == Model::VP) continue;
        for (int i = 0; i < 20; ++i) {
            RatFunc x = random_rational(st.gamma.context().field(), rng, 6);
            auto a = expand(x, st.gamma, Engine::Exact), b = expand(x, st.gamma, Engine::Series);
            CHECK(a.start() == b.start());
            CHECK(a.prefix(150) == b.prefix(150));
        }
    }
}

TEST_CASE("reconstruction invariant through 256 digits")
{
    std::mt19937_64 rng(2);
    for (auto& st : property_a_settings()) {
        const auto& ctx = st.gamma.context();
        for (int i = 0; i < 4; ++i) {
            RatFunc x = random_rational(ctx.field(), rng, 5);
            auto d = expand(x, st.gamma);
            for (std::int64_t N : {0, 7, 64, 255}) {
                RatFunc err = x - d.partial_sum(N + 1).rational();
                auto v = ctx.valuation(err);
                if (v) CHECK(*v > N * ctx.e());
            }
            auto again = expand(x, st.gamma);
            CHECK(again.prefix(256) == d.prefix(256));
        }
    }
}

TEST_CASE("detect_period_exact examples")
{
    auto F = make_field(2);
    Poly P = parse_poly("z^2+z+1", F);
    auto GP = span_system(elems({"1", "z"}, F), BaseContext(F, Model::VP, RatFunc(P), P));
    auto c1 = detect_period_exact(RatFunc(Poly::one(F), P + Poly::one(F)), GP);
    CHECK(c1.status == PeriodStatus::Exact);
    CHECK(c1.preperiod == 0);
    CHECK(c1.period == 1);
    CHECK(expand(RatFunc(Poly::one(F), P + Poly::one(F)), GP).digit(5) == 1);

    auto G2 = span_vz(F, "z", {"1"});
    Poly m = parse_poly("1+z+z^3", F);
    // Oracle: multiplicative order of z modulo 1+z+z^3.
    std::int64_t order = 1;
    while (!(pow_mod(Poly::monomial(F, 1), static_cast<std::uint64_t>(order), m) == Poly::one(F))) ++order;
    auto c2 = detect_period_exact(RatFunc(Poly::one(F), m), G2);
    CHECK(c2.status == PeriodStatus::Exact);
    CHECK(c2.period == order);
    CHECK(c2.period == 7);

    auto c3 = detect_period_exact(rf("z", F), span_vz(F, "z^2", {"1", "z"}));
    CHECK(c3.status == PeriodStatus::Exact);
    CHECK(c3.preperiod == 1);
    CHECK(c3.period == 1);

    ResidueSystem B(BaseContext(F, Model::VZ, rf("z*(1+z)", F)), elems({"0", "1"}, F));
    CHECK_THROWS_AS(detect_period_exact(rf("1+z", F), B), DomainError);
    auto capped = detect_period_exact(RatFunc(Poly::one(F), m), G2, 3);
    CHECK(capped.status == PeriodStatus::Undetermined);
    CHECK(capped.note == "undetermined, cap 3");
}

TEST_CASE("detect_period_bounded examples")
{
    auto F = make_field(2);
    auto G = span_vz(F, "z^2", {"1", "z"});
    auto c = detect_period_bounded(expand(rf("1/(1+z)", F), G), 64, 8);
    CHECK(c.status == PeriodStatus::Candidate);
    CHECK(c.preperiod == 0);
    CHECK(c.period == 1);

    ResidueSystem B(BaseContext(F, Model::VZ, rf("z*(1+z)", F)), elems({"0", "1"}, F));
    CHECK(detect_period_bounded(expand(rf("1+z", F), B), 4096, 64).status == PeriodStatus::NoneWithinBounds);

    auto z = detect_period_bounded(expand(RatFunc(F), G), 64, 8);
    CHECK(z.status == PeriodStatus::Candidate);
    CHECK(z.preperiod == 0);
    CHECK(z.period == 1);
}

TEST_CASE("property_a_check examples")
{
    auto F = make_field(2);
    CHECK(property_a_check(span_vz(F, "z^2", {"1", "z"})).holds);
    ResidueSystem B(BaseContext(F, Model::VZ, rf("z*(1+z)", F)), elems({"0", "1"}, F));
    auto pa = property_a_check(B);
    CHECK_FALSE(pa.holds);
    CHECK(pa.reason == "fails (ii): [K:F_q(pi)]=2 > e*f=1");
    CHECK(property_a_check(span_vz(F, "z^2/(1+z)", {"1", "z"})).holds);
}

TEST_CASE("lemma21_witness examples")
{
    auto F = make_field(2);
    BaseContext ctx(F, Model::VZ, rf("z*(1+z)", F));
    auto w = lemma21_witness(ResidueSystem(ctx, elems({"0", "1"}, F)));
    CHECK(w.x == rf("1+z", F));
    CHECK(w.m == 0);
    CHECK(w.leading == std::vector<Elem>{1, 0});
    CHECK(w.lambda == std::vector<Elem>{1, 1});

    ResidueSystem G2(ctx, elems({"0", "1+z"}, F));
    auto w2 = lemma21_witness(G2);
    CHECK(detect_period_bounded(expand(w2.x, G2), 4096, 64).status == PeriodStatus::NoneWithinBounds);

    CHECK_THROWS_AS(lemma21_witness(span_vz(F, "z^2", {"1", "z"})), DomainError);
}

TEST_CASE("witnesses of failing systems have no bounded period")
{
    auto F2 = make_field(2);
    auto F3 = make_field(3);
    std::vector<ResidueSystem> failing = {
        ResidueSystem(BaseContext(F2, Model::VZ, rf("z*(1+z)", F2)), elems({"0", "1"}, F2)),
        ResidueSystem(BaseContext(F2, Model::VZ, rf("z*(1+z)", F2)), elems({"1", "z"}, F2)),
        ResidueSystem(BaseContext(F2, Model::VZ, rf("z/(1+z+z^2)", F2)), elems({"0", "1/(1+z)"}, F2)),
        span_system(elems({"1", "1/z"}, F2), BaseContext(F2, Model::VDeg, rf("(1+z)/z^3", F2))),
        span_system(elems({"1", "z"}, F3), BaseContext(F3, Model::VZ, rf("z^2*(1+z)", F3))),
    };
    for (const auto& g : failing) {
        auto w = lemma21_witness(g);
        auto cert = detect_period_bounded(expand(w.x, g), 4096, 64);
        CHECK_MESSAGE(cert.status == PeriodStatus::NoneWithinBounds, w.x.to_string());
    }
}

TEST_CASE("rational periodicity: certificates regenerate digits and resum to x")
{
    std::mt19937_64 rng(3);
    for (auto& st : property_a_settings()) {
        const auto& F = st.gamma.context().field();
        for (int i = 0; i < 40; ++i) {
            RatFunc x = random_rational(F, rng, 6);
            auto cert = detect_period_exact(x, st.gamma);
            REQUIRE(cert.status == PeriodStatus::Exact);
            auto d = expand(x, st.gamma);
            auto periodic = certified_expansion(d, cert);
            CHECK(periodic.prefix(512) == d.prefix(512));
            CHECK(resum_periodic(d, cert) == x);
        }
    }
}

TEST_CASE("periodic digits converse: any periodic digit stream sums to a rational with that expansion")
{
    std::mt19937_64 rng(4);
    for (auto& st : property_a_settings()) {
        auto sys = std::make_shared<const ResidueSystem>(st.gamma);
        for (int i = 0; i < 20; ++i) {
            std::vector<Digit> pre(1 + rng() % 6);
            for (auto& dg : pre) dg = static_cast<Digit>(rng() % sys->size());
            std::int64_t L = 1 + static_cast<std::int64_t>(rng() % pre.size());
            std::int64_t start = -static_cast<std::int64_t>(rng() % 3);
            // A nonzero leading digit keeps the default start equal to `start`.
            if (st.gamma.reps()[pre[0]].rational().is_zero() || st.gamma.context().valuation(st.gamma.reps()[pre[0]]) != 0) pre[0] = 1;
            auto d = periodic_expansion(sys, start, pre, L);
            PeriodCertificate cert{PeriodStatus::Exact, start + static_cast<std::int64_t>(pre.size()) - L, L, ""};
            RatFunc x = resum_periodic(d, cert);
            auto e = expand(x, st.gamma, Engine::Auto, start);
            CHECK(e.prefix(128) == d.prefix(128));
        }
    }
}

TEST_CASE("convert_expansion")
{
    auto F = make_field(2);
    auto G = span_vz(F, "z^2", {"1", "z"});
    auto x = rf("(1+z^3)/(1+z+z^2)", F);
    auto d = expand(x, G);
    CHECK(convert_expansion(d, G).prefix(64) == d.prefix(64));

    for (std::int64_t L : {1, 3}) {
        auto T = twist_system(G, L);
        RatFunc y = (RatFunc::constant(F, 1) - rf("z^2", F).pow(L)) * x;
        auto converted = convert_expansion(expand(y, G), T);
        CHECK(converted.prefix(128) == d.prefix(128));
        CHECK(twist_expansion(d, L).prefix(128) == expand(y, T).prefix(128));
    }

    // Digits that are polynomials in pi over span{1, z}: recombination applies.
    ResidueSystem poly_digits(G.context(), elems({"0", "1+z^2", "z+z^4", "1+z+z^2+z^6"}, F));
    REQUIRE(poly_digits.complete());
    CHECK(recombination_applies(poly_digits, G));
    auto dp = expand(rf("1/(1+z)", F), poly_digits);
    auto r1 = convert_expansion(dp, G, ConvertRoute::Recombine);
    auto r2 = convert_expansion(dp, G, ConvertRoute::Naive);
    CHECK(r1.prefix(128) == r2.prefix(128));
    CHECK(r1.prefix(128) == expand(rf("1/(1+z)", F), G).prefix(128));

    CHECK_FALSE(recombination_applies(G, twist_system(G, 1)));
}
