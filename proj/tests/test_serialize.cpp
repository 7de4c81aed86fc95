#include "doctest.h"

#include "fexp/christol.hpp"
#include "fexp/parse.hpp"
#include "fexp/serialize.hpp"

#include <random>

using namespace fexp;

namespace {

ModelElem rf(const std::string& s, const FieldPtr& F) { return ModelElem(parse_ratfunc(s, F)); }

bool same_system(const ResidueSystem& a, const ResidueSystem& b)
{
    if (a.size() != b.size() || a.context().model() != b.context().model()) return false;
    if (!(a.context().pi().rational() == b.context().pi().rational())) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a.reps()[i].rational() == b.reps()[i].rational())) return false;
    return a.span().has_value() == b.span().has_value();
}

} // namespace

TEST_CASE("residue system files round-trip")
{
    const FieldPtr F2 = make_field(2);
    const FieldPtr F9 = make_field(3, 2);
    const FieldPtr F3 = make_field(3);
    std::vector<ResidueSystem> systems{
        span_system({rf("1", F2), rf("z", F2)}, BaseContext(F2, Model::VZ, rf("z^2", F2))),
        span_system({rf("1", F2)}, BaseContext(F2, Model::VDeg, rf("1/z", F2))),
        ResidueSystem(BaseContext(F2, Model::VZ, rf("z/(1+z)", F2)), {rf("1/(1+z)", F2), rf("z", F2)}),
        span_system({rf("1", F9), rf("g", F9)}, BaseContext(F9, Model::VZ, rf("z", F9)), true),
        span_system({rf("1", F3), rf("z", F3)}, BaseContext(F3, Model::VP, rf("z^2+1", F3), parse_poly("z^2+1", F3))),
    };
    for (const ResidueSystem& g : systems) {
        const std::string text = system_to_json(g);
        const ResidueSystem back = system_from_json(text, g.context().field());
        CHECK(same_system(g, back));
        CHECK(back.complete() == g.complete());
        CHECK(system_to_json(back) == text);
    }
}

TEST_CASE("expansion files round-trip and are checked")
{
    const FieldPtr F = make_field(2);
    const ResidueSystem gamma = span_system({rf("1", F), rf("z", F)}, BaseContext(F, Model::VZ, rf("z^2", F)));
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Elem> num(1 + rng() % 6), den(1 + rng() % 6);
        for (auto& c : num) c = rng() % 2;
        for (auto& c : den) c = rng() % 2;
        den[0] = 1;
        const RatFunc x(Poly(F, num), Poly(F, den));
        const DigitExpansion d = expand(ModelElem(x), gamma);
        const ExpansionFile back = expansion_from_json(expansion_to_json(d, 40), F);
        CHECK(back.start == d.start());
        CHECK(back.digits == d.prefix(40));
        CHECK(same_system(*back.system, gamma));
    }
    const std::string good = expansion_to_json(expand(rf("1/(1+z)", F), gamma), 2);
    CHECK(good.find("\"values\":[\"1+z\",\"1+z\"]") != std::string::npos);
    std::string bad = good;
    bad.replace(bad.find("[3,3]"), 5, "[3,2]");
    CHECK_THROWS_AS(expansion_from_json(bad, F), ParseError);
    CHECK_THROWS_AS(expansion_from_json("{\"start\": 0}", F), ParseError);
    CHECK_THROWS_AS(expansion_from_json("not json", F), ParseError);
}

TEST_CASE("period certificates round-trip")
{
    const FieldPtr F = make_field(2);
    const ResidueSystem gamma = span_system({rf("1", F), rf("z", F)}, BaseContext(F, Model::VZ, rf("z^2", F)));
    for (const char* x : {"1/(1+z+z^2)", "z^5/(1+z^3)", "1/z^3", "0"}) {
        const PeriodCertificate c = detect_period_exact(parse_ratfunc(x, F), gamma);
        const PeriodCertificate back = certificate_from_json(certificate_to_json(c));
        CHECK(back.status == c.status);
        CHECK(back.preperiod == c.preperiod);
        CHECK(back.period == c.period);
        CHECK(back.note == c.note);
    }
    CHECK_THROWS_AS(certificate_from_json("{\"status\":\"maybe\",\"preperiod\":0,\"period\":1}"), ParseError);
}

TEST_CASE("DFAO files round-trip bit-exactly")
{
    const FieldPtr F = make_field(2);
    const Dfao m = encode(make_spec("w^2+w+z", "0", Orientation::Ascending, F));
    CHECK(Dfao::from_json(m.to_json()) == m);
    CHECK(Dfao::from_json(m.to_json()).to_json() == m.to_json());
}
