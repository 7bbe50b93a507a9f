#include "wildstack/json_io.hpp"

#include <fstream>
#include <limits>

namespace wildstack {

namespace {

std::int64_t to_int64(const Integer& n) {
    if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("integer too large for serialization");
    return static_cast<std::int64_t>(n);
}

}  // namespace

json place_to_json(const Place& pl) {
    switch (pl.kind) {
        case Place::Kind::Finite: return json{{"finite", pl.alpha.value}};
        case Place::Kind::Infinity: return json("infinity");
        case Place::Kind::Generic: return json{{"generic", pl.label}};
    }
    throw std::logic_error("place_to_json: unreachable");
}

Place place_from_json(const json& j, std::int64_t p) {
    if (j.is_string()) {
        if (j.get<std::string>() == "infinity") return Place::infinity();
        throw std::invalid_argument("place: unknown string \"" + j.get<std::string>() + "\"");
    }
    if (j.is_object()) {
        if (j.contains("finite")) return Place::finite(j.at("finite").get<std::int64_t>(), p);
        if (j.contains("generic")) return Place::generic(j.at("generic").get<std::string>());
    }
    throw std::invalid_argument("place: expected {\"finite\": a}, \"infinity\" or {\"generic\": label}");
}

json qdivisor_to_json(const QDivisor& d) {
    json arr = json::array();
    for (const auto& [pl, c] : d.coeffs()) {
        json entry;
        entry["place"] = place_to_json(pl);
        entry["num"] = to_int64(numerator(c));
        entry["den"] = to_int64(denominator(c));
        arr.push_back(std::move(entry));
    }
    return arr;
}

QDivisor qdivisor_from_json(const json& j, std::int64_t p) {
    if (!j.is_array()) throw std::invalid_argument("divisor: expected a list of {place, num, den}");
    QDivisor d;
    for (const auto& entry : j) {
        Place pl = place_from_json(entry.at("place"), p);
        Rational c(entry.at("num").get<std::int64_t>(), entry.at("den").get<std::int64_t>());
        d.set(pl, d.coeff(pl) + c);
    }
    return d;
}

json spec_to_json(const StackyCurveSpec& spec) {
    json j;
    j["p"] = spec.p;
    j["coarse_genus"] = spec.coarse_genus;
    json pts = json::array();
    for (const auto& pt : spec.points) {
        json e;
        e["place"] = place_to_json(pt.place);
        if (pt.is_wild())
            e["wild"] = json{{"m", pt.jump()}};
        else
            e["tame"] = json{{"r", pt.tame_order()}};
        pts.push_back(std::move(e));
    }
    j["points"] = std::move(pts);
    return j;
}

StackyCurveSpec spec_from_json(const json& j) {
    StackyCurveSpec spec;
    spec.p = j.at("p").get<std::int64_t>();
    spec.coarse_genus = j.at("coarse_genus").get<std::int64_t>();
    if (j.contains("points")) {
        for (const auto& e : j.at("points")) {
            StackyPoint pt{place_from_json(e.at("place"), spec.p), TameLocal{2}};
            const bool wild = e.contains("wild"), tame = e.contains("tame");
            if (wild == tame)
                throw std::invalid_argument("spec point: exactly one of \"wild\"/\"tame\" required");
            if (wild)
                pt.local = WildLocal{e.at("wild").at("m").get<std::int64_t>()};
            else
                pt.local = TameLocal{e.at("tame").at("r").get<std::int64_t>()};
            spec.points.push_back(std::move(pt));
        }
    }
    spec.validate();
    return spec;
}

StackyCurveSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spec file: " + path);
    json j = json::parse(in);
    return spec_from_json(j);
}

json branch_report(const BranchData& bd) {
    json j;
    j["p"] = bd.p;
    j["geometrically_trivial"] = bd.geometrically_trivial;
    json pts = json::array();
    for (const auto& pt : bd.points)
        pts.push_back(json{{"place", place_to_json(pt.place)}, {"jump", pt.jump}});
    j["points"] = std::move(pts);
    return j;
}

json reduce_report(const ASReduction& red, std::int64_t p) {
    json j;
    j["p"] = p;
    j["f_red"] = to_expression(red.reduced);
    j["shift"] = to_expression(red.shift);
    j["absorbed_constant"] = red.absorbed_constant.value;
    j["geometrically_trivial"] = red.geometrically_trivial();
    return j;
}

json cover_genus_report(const BranchData& bd, std::int64_t coarse_genus, std::int64_t genus) {
    json j;
    j["p"] = bd.p;
    j["coarse_genus"] = coarse_genus;
    j["cover_genus"] = genus;
    j["branch"] = branch_report(bd)["points"];
    return j;
}

json genus_report(const StackyCurveSpec& spec) {
    json j;
    j["p"] = spec.p;
    j["coarse_genus"] = spec.coarse_genus;
    j["stacky_genus"] = to_string(stacky_genus(spec));
    j["euler_characteristic"] = to_string(euler_characteristic(spec));
    j["canonical_degree"] = to_string(degree(canonical_divisor(spec)));
    return j;
}

json presentation_report_json(const PresentationReport& report) {
    json j;
    switch (report.verdict) {
        case Verdict::Presentable: {
            j["verdict"] = "presentable";
            json wild = json::array();
            for (const auto& d : report.wild) {
                json e;
                e["place"] = place_to_json(d.divisor.coeffs().begin()->first);
                e["m"] = d.jump;
                e["f"] = to_expression(d.f);
                wild.push_back(std::move(e));
            }
            j["wild"] = std::move(wild);
            json tame = json::array();
            for (const auto& t : report.tame)
                tame.push_back(json{{"place", place_to_json(t.place)}, {"r", t.order}});
            j["tame"] = std::move(tame);
            break;
        }
        case Verdict::Obstructed:
            j["verdict"] = "obstructed";
            j["reason"] = report.reason;
            break;
        case Verdict::Indeterminate:
            j["verdict"] = "indeterminate";
            j["reason"] = report.reason;
            break;
    }
    return j;
}

json hilbert_row_json(const HilbertRow& row) {
    json j;
    j["n"] = row.n;
    if (row.h0.is_exact())
        j["h0"] = *row.h0.exact;
    else
        j["h0"] = "indeterminate";
    j["floor_degree"] = to_int64(row.floor_degree);
    if (row.closed_form) j["closed_form"] = *row.closed_form;
    if (row.agree)
        j["agree"] = *row.agree;
    else
        j["agree"] = nullptr;
    return j;
}

json verify_local_report(std::int64_t p, std::int64_t m, const FpPoly& g,
                         const std::optional<LocalCheck>& integral_identity,
                         const LocalCheck& uniformizer) {
    json j;
    j["p"] = p;
    j["jump"] = m;
    j["g"] = to_string(g);
    if (integral_identity) {
        j["integral_identity"] = integral_identity->verified ? "verified" : "failed";
        if (!integral_identity->verified) j["integral_identity_detail"] = integral_identity->detail;
    } else {
        j["integral_identity"] = "not_applicable";
    }
    j["uniformizer"] = uniformizer.verified ? "verified" : "failed";
    if (!uniformizer.verified) j["uniformizer_detail"] = uniformizer.detail;
    return j;
}

}  // namespace wildstack
