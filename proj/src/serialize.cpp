#include "fexp/serialize.hpp"

#include "fexp/parse.hpp"

#include "json.hpp"

namespace fexp {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text, const char* what)
{
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError(std::string(what) + " JSON: " + e.what());
    }
}

template <class T>
T field_of(const Json& j, const char* key, const char* what)
{
    if (!j.contains(key)) throw ParseError(std::string(what) + " JSON needs field " + key);
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception& e) {
        throw ParseError(std::string(what) + " JSON field " + key + ": " + e.what());
    }
}

std::string literal(const ModelElem& x)
{
    if (!x.is_rational()) throw DomainError("only residue systems with rational pi and representatives serialize");
    return x.rational().to_string();
}

Json system_json(const ResidueSystem& gamma)
{
    const BaseContext& ctx = gamma.context();
    Json j;
    j["field"] = {{"p", ctx.field()->p()}, {"m", ctx.field()->m()}};
    Json c;
    c["model"] = model_name(ctx.model());
    c["pi"] = literal(ctx.pi());
    if (ctx.model() == Model::VP) c["P"] = ctx.prime().to_string();
    j["context"] = c;
    Json reps = Json::array();
    for (const ModelElem& r : gamma.reps()) reps.push_back(literal(r));
    j["reps"] = reps;
    if (gamma.span()) {
        Json gens = Json::array();
        for (const ModelElem& g : gamma.span()->generators) gens.push_back(literal(g));
        j["span"] = {{"generators", gens}, {"prime_field", gamma.span()->prime_field}};
    }
    return j;
}

ResidueSystem system_from(const Json& j, const FieldPtr& F)
{
    if (j.contains("field")) {
        const Json& f = j["field"];
        if (f.value("p", F->p()) != F->p() || f.value("m", F->m()) != F->m())
            throw DomainError("residue system file is for a different field");
    }
    const Json c = field_of<Json>(j, "context", "residue system");
    const Model model = parse_model(field_of<std::string>(c, "model", "context"));
    const RatFunc pi = parse_ratfunc(field_of<std::string>(c, "pi", "context"), F);
    std::optional<Poly> P;
    if (c.contains("P")) P = parse_poly(c["P"].get<std::string>(), F);
    BaseContext ctx(F, model, ModelElem(pi), P);
    if (j.contains("span")) {
        std::vector<ModelElem> gens;
        for (const auto& g : field_of<std::vector<std::string>>(j["span"], "generators", "span"))
            gens.emplace_back(parse_ratfunc(g, F));
        ResidueSystem out = span_system(gens, ctx, j["span"].value("prime_field", false));
        if (j.contains("reps")) {
            const auto reps = j["reps"].get<std::vector<std::string>>();
            if (reps.size() != out.size()) throw ParseError("span system file lists the wrong number of reps");
            for (std::size_t i = 0; i < reps.size(); ++i)
                if (!(parse_ratfunc(reps[i], F) == out.reps()[i].rational()))
                    throw ParseError("span system file reps disagree with the span order at index " + std::to_string(i));
        }
        return out;
    }
    std::vector<ModelElem> reps;
    for (const auto& r : field_of<std::vector<std::string>>(j, "reps", "residue system"))
        reps.emplace_back(parse_ratfunc(r, F));
    return ResidueSystem(ctx, std::move(reps));
}

PeriodStatus parse_status(const std::string& s)
{
    for (PeriodStatus st : {PeriodStatus::Exact, PeriodStatus::Candidate, PeriodStatus::NoneWithinBounds,
                            PeriodStatus::Undetermined})
        if (status_name(st) == s) return st;
    throw ParseError("unknown period status '" + s + "'");
}

} // namespace

std::string system_to_json(const ResidueSystem& gamma)
{
    return system_json(gamma).dump();
}

ResidueSystem system_from_json(const std::string& text, const FieldPtr& F)
{
    return system_from(parse_json(text, "residue system"), F);
}

std::string expansion_to_json(const DigitExpansion& d, std::size_t count)
{
    Json j;
    j["system"] = system_json(d.system());
    j["start"] = d.start();
    const std::vector<Digit> digits = d.prefix(count);
    j["digits"] = digits;
    Json values = Json::array();
    for (Digit a : digits) values.push_back(literal(d.system().reps()[a]));
    j["values"] = values;
    return j.dump();
}

ExpansionFile expansion_from_json(const std::string& text, const FieldPtr& F)
{
    const Json j = parse_json(text, "expansion");
    ExpansionFile out;
    out.system = std::make_shared<const ResidueSystem>(system_from(field_of<Json>(j, "system", "expansion"), F));
    out.start = field_of<std::int64_t>(j, "start", "expansion");
    out.digits = field_of<std::vector<Digit>>(j, "digits", "expansion");
    for (std::size_t i = 0; i < out.digits.size(); ++i)
        if (out.digits[i] >= out.system->size())
            throw ParseError("expansion digit " + std::to_string(i) + " is out of range");
    if (j.contains("values")) {
        const auto values = j["values"].get<std::vector<std::string>>();
        if (values.size() != out.digits.size()) throw ParseError("expansion values and digits differ in length");
        for (std::size_t i = 0; i < values.size(); ++i)
            if (!(parse_ratfunc(values[i], F) == out.system->reps()[out.digits[i]].rational()))
                throw ParseError("expansion value " + std::to_string(i) + " disagrees with its digit index");
    }
    return out;
}

std::string certificate_to_json(const PeriodCertificate& cert)
{
    Json j;
    j["status"] = status_name(cert.status);
    j["preperiod"] = cert.preperiod;
    j["period"] = cert.period;
    j["note"] = cert.note;
    return j.dump();
}

PeriodCertificate certificate_from_json(const std::string& text)
{
    const Json j = parse_json(text, "certificate");
    PeriodCertificate c;
    c.status = parse_status(field_of<std::string>(j, "status", "certificate"));
    c.preperiod = field_of<std::int64_t>(j, "preperiod", "certificate");
    c.period = field_of<std::int64_t>(j, "period", "certificate");
    c.note = j.value("note", "");
    return c;
}

} // namespace fexp
