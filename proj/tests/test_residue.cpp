#include "doctest.h"

#include "fexp/parse.hpp"
#include "fexp/residue.hpp"

#include <random>
#include <set>

using namespace fexp;

namespace {

RatFunc rf(const std::string& s, const FieldPtr& F) { return parse_ratfunc(s, F); }

std::vector<ModelElem> elems(std::initializer_list<const char*> xs, const FieldPtr& F)
{
    std::vector<ModelElem> out;
    for (auto x : xs) out.emplace_back(rf(x, F));
    return out;
}

std::vector<std::string> rep_strings(const ResidueSystem& s)
{
    std::vector<std::string> out;
    for (const auto& g : s.reps()) out.push_back(g.to_string());
    return out;
}

} // namespace

TEST_CASE("reduce_mod_pi examples")
{
    auto F = make_field(2);
    BaseContext vz(F, Model::VZ, rf("z^2", F));
    CHECK(vz.e() == 2);
    CHECK(vz.r() == 4);
    // series of 1/(1+z) is 1 + z + z^2 + ..., truncated below z^2
    CHECK(reduce_mod_pi(rf("1/(1+z)", F), vz) == Residue{1, 1});
    CHECK(reduce_mod_pi(rf("z^3", F), vz) == Residue{0, 0});
    BaseContext vz3(F, Model::VZ, rf("z^3*(1+z)", F));
    CHECK(reduce_mod_pi(rf("z^3", F), vz3) == Residue{0, 0, 0});

    BaseContext vp(F, Model::VP, rf("z^2+z+1", F), parse_poly("z^2+z+1", F));
    CHECK(vp.f() == 2);
    CHECK(vp.residue_value(reduce_mod_pi(rf("z+1", F), vp)) == rf("z+1", F));

    CHECK_THROWS_AS(reduce_mod_pi(rf("1/z", F), vz), DomainError);
    CHECK_THROWS_AS(BaseContext(F, Model::VZ, rf("1+z", F)), DomainError);
    CHECK_THROWS_AS(BaseContext(F, Model::VP, rf("z", F), parse_poly("z^2+1", F)), DomainError);

    BaseContext vd(F, Model::VDeg, rf("1/z", F));
    CHECK(vd.e() == 1);
    CHECK(reduce_mod_pi(rf("z/(z+1)", F), vd) == Residue{1});
}

TEST_CASE("check_complete examples")
{
    auto F = make_field(2);
    BaseContext vz(F, Model::VZ, rf("z^2", F));
    CHECK(check_complete(elems({"0", "1", "z", "1+z"}, F), vz));
    BaseContext vp(F, Model::VP, rf("z^2+z+1", F), parse_poly("z^2+z+1", F));
    CHECK(check_complete(elems({"0", "1", "z", "1+z"}, F), vp));
    CHECK_FALSE(check_complete(elems({"0", "1"}, F), vz));
    CHECK_FALSE(check_complete(elems({"0", "1", "z^2", "1+z^2"}, F), vz));
}

TEST_CASE("is_additively_closed examples")
{
    auto F = make_field(2);
    auto set = [&](std::initializer_list<const char*> xs) {
        std::vector<RatFunc> v;
        for (auto x : xs) v.push_back(rf(x, F));
        return v;
    };
    CHECK(is_additively_closed(set({"0", "1", "z", "1+z"})));
    CHECK_FALSE(is_additively_closed(set({"0", "1", "z", "z^2"})));
    CHECK(is_additively_closed(set({"z", "1+z", "0", "1"})));
    CHECK_FALSE(is_additively_closed(set({"z^2", "1+z^2", "z+z^2", "1+z+z^2"})));
}

TEST_CASE("span_system examples")
{
    auto F = make_field(2);
    BaseContext vz(F, Model::VZ, rf("z^2", F));
    auto s1 = span_system(elems({"1", "z"}, F), vz);
    CHECK(rep_strings(s1) == std::vector<std::string>{"0", "1", "z", "1+z"});
    CHECK(s1.complete());

    BaseContext vp(F, Model::VP, rf("z^2+z+1", F), parse_poly("z^2+z+1", F));
    auto s2 = span_system(elems({"1", "z"}, F), vp);
    CHECK(s2.complete());
    for (const auto& g : s2.reps()) CHECK(g.rational().num().degree() < 2);

    auto s3 = span_system(elems({"1", "1+z"}, F), vz);
    CHECK(rep_strings(s3) == std::vector<std::string>{"0", "1", "1+z", "z"});

    CHECK_THROWS_AS(span_system(elems({"1", "1+z^2"}, F), vz), DomainError);
    CHECK_THROWS_AS(span_system(elems({"1"}, F), vz), DomainError);

    auto F4 = make_field(2, 2);
    BaseContext vz4(F4, Model::VZ, rf("z", F4));
    auto s4 = span_system(elems({"1", "g"}, F4), vz4, true);
    CHECK(s4.size() == 4);
    CHECK(s4.complete());
    CHECK(s4.reps()[3].to_string() == "1+g");
}

TEST_CASE("twist_system examples")
{
    auto F = make_field(2);
    BaseContext vz1(F, Model::VZ, rf("z", F));
    ResidueSystem g01(vz1, elems({"0", "1"}, F));
    CHECK(rep_strings(twist_system(g01, 1)) == std::vector<std::string>{"0", "1+z"});

    BaseContext vz(F, Model::VZ, rf("z^2", F));
    auto s = span_system(elems({"1", "z"}, F), vz);
    auto t = twist_system(s, 1);
    CHECK(rep_strings(t) == std::vector<std::string>{"0", "1+z^2", "z+z^3", "1+z+z^2+z^3"});
    CHECK(t.complete());
    CHECK(t.span().has_value());
    for (std::int64_t L = 1; L < 5; ++L) CHECK(twist_system(s, L).complete());
}

TEST_CASE("shift_system")
{
    auto F = make_field(2);
    BaseContext vz(F, Model::VZ, rf("z^2", F));
    auto s = span_system(elems({"1", "z"}, F), vz);
    CHECK(rep_strings(shift_system(s, rf("0", F))) == rep_strings(s));
    auto sh = shift_system(s, rf("z^2", F));
    CHECK(sh.complete());
    std::vector<RatFunc> reps;
    for (const auto& g : sh.reps()) reps.push_back(g.rational());
    CHECK_FALSE(is_additively_closed(reps));
    CHECK(shift_system(s, rf("1/(1+z)", F)).complete());
}

TEST_CASE("reduction is idempotent and constant on cosets")
{
    std::mt19937_64 rng(21);
    auto F = make_field(3);
    auto rnd_poly = [&](int d) {
        std::vector<Elem> c(static_cast<std::size_t>(d) + 1);
        for (auto& x : c) x = static_cast<Elem>(rng() % 3);
        return Poly(F, c);
    };
    std::vector<BaseContext> ctxs = {
        BaseContext(F, Model::VZ, rf("z^2*(1+z)", F)),
        BaseContext(F, Model::VP, rf("(z^2+1)^2", F), parse_poly("z^2+1", F)),
        BaseContext(F, Model::VDeg, rf("1/(z^3+z)", F)),
    };
    for (const auto& ctx : ctxs) {
        for (int i = 0; i < 200; ++i) {
            // Build x, y with nonnegative valuation by dividing by a unit.
            Poly unit_den = ctx.model() == Model::VDeg ? rnd_poly(3) + Poly::monomial(F, 4) : rnd_poly(3) + Poly::one(F);
            if (ctx.model() == Model::VP && (unit_den % ctx.prime()).is_zero()) continue;
            if (ctx.model() == Model::VZ && unit_den[0] == 0) continue;
            Poly xn = ctx.model() == Model::VDeg ? rnd_poly(4) : rnd_poly(6);
            RatFunc x(xn, unit_den);
            RatFunc y(ctx.model() == Model::VDeg ? rnd_poly(4) : rnd_poly(5), unit_den);
            if (ctx.valuation(x).value_or(0) < 0 || ctx.valuation(y).value_or(0) < 0) continue;
            Residue rx = reduce_mod_pi(x, ctx);
            CHECK(reduce_mod_pi(ctx.residue_value(rx), ctx) == rx);
            CHECK(reduce_mod_pi(x + ctx.pi().rational() * y, ctx) == rx);
        }
    }
}

TEST_CASE("constructed systems are complete, and removing a rep breaks completeness")
{
    auto F = make_field(2);
    BaseContext vz(F, Model::VZ, rf("z^2", F));
    BaseContext vp(F, Model::VP, rf("z^2+z+1", F), parse_poly("z^2+z+1", F));
    BaseContext vd(F, Model::VDeg, rf("1/(z^2+z)", F));
    std::vector<ResidueSystem> systems;
    for (const auto& ctx : {vz, vp}) systems.push_back(span_system(elems({"1", "z"}, F), ctx));
    systems.push_back(span_system(elems({"1", "1/z"}, F), vd));
    for (std::size_t i = 0, n = systems.size(); i < n; ++i) {
        systems.push_back(twist_system(systems[i], 2));
        if (systems[i].context().model() != Model::VDeg) systems.push_back(shift_system(systems[i], rf("1+z", F)));
    }
    for (const auto& s : systems) {
        CHECK(s.complete());
        CHECK(check_complete(s.reps(), s.context()));
        for (std::size_t k = 0; k < s.size(); ++k) {
            auto reps = s.reps();
            reps.erase(reps.begin() + static_cast<std::ptrdiff_t>(k));
            CHECK_FALSE(check_complete(reps, s.context()));
        }
    }
}

TEST_CASE("additive closure coincides with being an F_p-span")
{
    auto check_all_subsets = [](const std::vector<RatFunc>& universe) {
        const std::size_t n = universe.size();
        std::size_t closed = 0;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<RatFunc> S;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) S.push_back(universe[i]);
            std::set<std::string> lhs, rhs;
            for (const auto& x : S) lhs.insert(x.to_string());
            for (const auto& x : fp_span(S)) rhs.insert(x.to_string());
            bool is_span = lhs == rhs;
            CHECK(is_additively_closed(S) == is_span);
            closed += is_span;
        }
        return closed;
    };
    auto F2 = make_field(2);
    std::vector<RatFunc> u2;
    for (const auto& g : fp_span({rf("1", F2), rf("z", F2), rf("z^2", F2), rf("1/(1+z)", F2)})) u2.push_back(g);
    REQUIRE(u2.size() == 16);
    // Subspaces of F_2^4: 1 + 15 + 35 + 15 + 1 = 67
    CHECK(check_all_subsets(u2) == 67);

    auto F3 = make_field(3);
    auto u3 = fp_span({rf("1", F3), rf("z", F3)});
    REQUIRE(u3.size() == 9);
    // Subspaces of F_3^2: 1 + 4 + 1 = 6
    CHECK(check_all_subsets(u3) == 6);
}
