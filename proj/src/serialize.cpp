#include "conemom/serialize.hpp"

#include "conemom/errors.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace conemom {

namespace {

json json_int(const Int& v) {
    if (v >= Int(std::numeric_limits<long long>::min()) &&
        v <= Int(std::numeric_limits<long long>::max()))
        return v.convert_to<long long>();
    return v.str();
}

// +inf is a legal domain endpoint; encode it as the string "inf".
json json_extended(double x) {
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    return x;
}

json root_interval_json(const RootInterval& iv) {
    return json{{"lo", to_json(iv.lo)}, {"hi", to_json(iv.hi)}};
}

const char* attained_name(C0Attained a) {
    switch (a) {
    case C0Attained::boundary_zero: return "boundary_zero";
    case C0Attained::interior: return "interior";
    case C0Attained::at_infinity: return "at_infinity";
    }
    return "?";
}

void dump_impl(const json& j, std::string& out) {
    switch (j.type()) {
    case json::value_t::object: {
        out += '{';
        bool first = true;
        for (const auto& [key, val] : j.items()) {
            if (!first)
                out += ',';
            first = false;
            out += json(key).dump();
            out += ':';
            dump_impl(val, out);
        }
        out += '}';
        break;
    }
    case json::value_t::array: {
        out += '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i)
                out += ',';
            dump_impl(j[i], out);
        }
        out += ']';
        break;
    }
    case json::value_t::number_float: {
        double x = j.get<double>();
        if (!std::isfinite(x))
            fail(errc::invalid_argument, "non-finite double reached the serializer");
        out += format_double(x);
        break;
    }
    default:
        out += j.dump(); // strings (escaped), integers, booleans, null
    }
}

} // namespace

std::string format_double(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string dump_json(const json& j) {
    std::string out;
    dump_impl(j, out);
    return out;
}

json to_json(const Rational& q) { return to_string(q); }

json to_json(const Poly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs())
        arr.push_back(to_json(c));
    return arr;
}

json to_json(const RationalFunction& f) {
    return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

namespace {

std::string bc_text(const BoundaryPreset& bc) {
    if (bc.tag == BoundaryTag::custom)
        return std::string("Custom:") + to_string(bc.v0) + "," + to_string(bc.v1);
    return boundary_tag_name(bc.tag);
}

} // namespace

json to_json(const Profile& pr) {
    json j;
    j["m"] = pr.m();
    j["kappa"] = to_json(pr.kappa());
    j["c"] = to_json(pr.c());
    j["bc"] = bc_text(pr.params().bc);
    j["c1"] = to_json(pr.c1());
    j["c2"] = to_json(pr.c2());
    j["numerator"] = to_json(pr.numerator());
    j["tau0"] = to_json(pr.tau0());
    PositivityDomain dom = pr.positivity_domain();
    j["b"] = dom.infinite ? json("inf") : root_interval_json(dom.b);
    return j;
}

json to_json(const EndpointBehavior& eb) {
    json j;
    j["order_at_zero"] = eb.order_at_zero;
    j["b"] = eb.b_infinite ? json("inf") : root_interval_json(eb.b);
    j["order_at_b"] = eb.b_infinite ? json(nullptr) : json(eb.order_at_b);
    j["growth_degree"] = eb.b_infinite ? json(eb.growth_degree) : json(nullptr);
    j["t1_infinite"] = eb.t1_infinite;
    j["t2_infinite"] = eb.t2_infinite;
    j["s_complete_at_zero"] = eb.s_complete_at_zero;
    j["s_complete_at_b"] = eb.s_complete_at_b;
    return j;
}

json to_json(const ClassificationReport& rep) {
    json j;
    j["behavior"] = to_json(rep.behavior);
    j["complete"] = rep.complete;
    j["einstein"] = rep.einstein ? to_json(*rep.einstein) : json(nullptr);
    j["verdict"] = verdict_name(rep.verdict);
    j["meaning"] = verdict_meaning(rep.verdict);
    return j;
}

json to_json(const SolveC0Result& res) {
    json cert;
    cert["c0_exact"] = to_json(res.cert.c0_exact);
    cert["b_exact"] = to_json(res.cert.b_exact);
    cert["attained"] = attained_name(res.cert.attained);
    cert["phi_at_b"] = to_json(res.cert.phi_at_b);
    cert["dphi_at_b"] = to_json(res.cert.dphi_at_b);
    cert["positive_below"] = res.cert.positive_below;
    cert["root_above"] = res.cert.root_above;
    cert["b_coefficient_negative"] = res.cert.b_coefficient_negative;
    json j;
    j["c0"] = res.c0;
    j["b"] = json_extended(res.b);
    j["certificate"] = std::move(cert);
    return j;
}

json to_json(const EtaEinsteinData& data) {
    json j;
    j["m"] = data.m;
    j["lambda"] = to_json(data.lambda);
    j["nu"] = to_json(data.nu);
    j["kappa"] = to_json(data.kappa);
    return j;
}

json to_json(const PrimitiveMinimalReport& rep) {
    json j;
    j["primitive"] = rep.primitive;
    j["bad_primitive_row"] = rep.bad_primitive_row;
    j["minimal"] = rep.minimal;
    j["redundant_row"] = rep.redundant_row;
    return j;
}

json to_json(const GoodnessCertificate& cert) {
    json j;
    j["good"] = cert.good;
    j["good_excluding_apex"] = cert.good_excluding_apex;
    j["readings_disagree"] = cert.readings_disagree;
    j["subsets_checked"] = cert.subsets_checked;
    if (cert.first_violation) {
        json v;
        v["subset"] = cert.first_violation->subset;
        v["independent"] = cert.first_violation->independent;
        json divs = json::array();
        for (const auto& d : cert.first_violation->divisors)
            divs.push_back(json_int(d));
        v["divisors"] = std::move(divs);
        v["apex_only"] = cert.first_violation->apex_only;
        j["first_violation"] = std::move(v);
    } else {
        j["first_violation"] = nullptr;
    }
    return j;
}

namespace {

json gamma_json(const std::vector<Rational>& gamma) {
    json arr = json::array();
    for (const auto& g : gamma)
        arr.push_back(to_json(g));
    return arr;
}

} // namespace

json to_json(const HeightResult& h) {
    json j;
    switch (h.status) {
    case HeightResult::Status::found: j["status"] = "found"; break;
    case HeightResult::Status::inconsistent: j["status"] = "inconsistent"; break;
    case HeightResult::Status::ambiguous: j["status"] = "ambiguous"; break;
    }
    j["gamma"] = h.height ? gamma_json(h.height->gamma) : json(nullptr);
    j["ell"] = h.height ? json(h.height->ell) : json(nullptr);
    j["note"] = h.note;
    return j;
}

json to_json(const ReebReport& rep) {
    json j;
    j["normalization_ok"] = rep.normalization_ok;
    j["full_rank"] = rep.full_rank;
    j["interior"] = rep.interior;
    j["admissible"] = rep.admissible;
    j["gamma"] = gamma_json(rep.gamma);
    j["ell"] = rep.ell;
    return j;
}

json to_json(const AsymptoticReport& rep) {
    json j;
    j["m"] = rep.m;
    j["fitted_coefficient"] = rep.fitted_coefficient;
    j["predicted_coefficient"] = to_json(rep.predicted_coefficient);
    j["fit_window"] = json::array({rep.fit_window.first, rep.fit_window.second});
    j["relative_error"] = rep.relative_error;
    j["fitted_exponent"] = rep.fitted_exponent;
    j["remainder_exponent_estimate"] = rep.remainder_exponent_estimate;
    j["remainder_window"] =
        json::array({rep.remainder_window.first, rep.remainder_window.second});
    return j;
}

json to_json(const PotentialTable& table) {
    json j;
    j["profile"] = to_json(table.profile);
    j["tau0"] = to_json(table.tau0);
    j["quoted_error"] = table.quoted_error;
    json rows = json::array();
    for (const auto& s : table.samples) {
        json row;
        row["tau"] = s.tau;
        row["t"] = s.t;
        row["F"] = s.F;
        row["G"] = s.G;
        row["s"] = s.s;
        rows.push_back(std::move(row));
    }
    j["samples"] = std::move(rows);
    return j;
}

void write_potential_csv(std::ostream& os, const PotentialTable& table) {
    os << "tau,t,F,G,s\n";
    for (const auto& s : table.samples)
        os << format_double(s.tau) << ',' << format_double(s.t) << ','
           << format_double(s.F) << ',' << format_double(s.G) << ','
           << format_double(s.s) << '\n';
}

DiagramInput parse_diagram(const json& j) {
    if (!j.is_object() || !j.contains("lambda"))
        fail(errc::invalid_argument, "diagram file must be an object with a \"lambda\" key");
    const json& lam = j["lambda"];
    if (!lam.is_array() || lam.empty())
        fail(errc::invalid_argument, "\"lambda\" must be a non-empty array of rows");
    long d = static_cast<long>(lam.size());
    if (!lam[0].is_array() || lam[0].empty())
        fail(errc::invalid_argument, "\"lambda\" rows must be non-empty arrays");
    long dim = static_cast<long>(lam[0].size());

    DiagramInput input;
    input.diagram.dim = dim;
    input.diagram.d = d;
    input.diagram.lambdas = IntMatrix(d, dim);
    for (long i = 0; i < d; ++i) {
        const json& row = lam[i];
        if (!row.is_array() || static_cast<long>(row.size()) != dim)
            fail(errc::invalid_argument, "\"lambda\" rows must all have the same length");
        for (long k = 0; k < dim; ++k) {
            if (!row[k].is_number_integer())
                fail(errc::invalid_argument, "\"lambda\" entries must be integers");
            input.diagram.lambdas.at(i, k) = Int(row[k].get<long long>());
        }
    }

    if (j.contains("xi")) {
        const json& xi = j["xi"];
        if (!xi.is_array() || static_cast<long>(xi.size()) != dim)
            fail(errc::invalid_argument, "\"xi\" must be an array of dim rationals");
        ReebVector v;
        for (const auto& entry : xi) {
            if (entry.is_number_integer())
                v.xi.emplace_back(entry.get<long long>());
            else if (entry.is_string())
                v.xi.push_back(parse_rational(entry.get<std::string>()));
            else
                fail(errc::invalid_argument, "\"xi\" entries must be integers or rational strings");
        }
        input.xi = std::move(v);
    }
    return input;
}

}  // namespace conemom
