#include "frob/serialize.hpp"

namespace frob {

using nlohmann::json;

namespace {

json strings(const std::array<Integer, 3>& xs) {
    return json::array({to_string(xs[0]), to_string(xs[1]), to_string(xs[2])});
}

json stats_json(const StepStats& s) {
    return {{"mean", s.mean}, {"median", s.median}, {"max", s.max}};
}

}  // namespace

json certificate_json(const MultipleCertificate& cert) {
    return {{"target", to_string(cert.target())},
            {"pair_a", to_string(cert.pair_a())},
            {"pair_c", to_string(cert.pair_c())},
            {"m", to_string(cert.m())},
            {"u", to_string(cert.u())},
            {"w", to_string(cert.w())},
            {"value", to_string(cert.value())}};
}

json trace_json(const WalkTrace& trace) {
    json rows = json::array();
    for (const WalkStep& row : trace.history) {
        rows.push_back({{"step", row.index},
                        {"k", row.index == 0 ? json(nullptr) : json(to_string(row.k))},
                        {"v", to_string(row.v)},
                        {"p", to_string(row.p)},
                        {"quotient", to_string(row_quotient(trace.input, row))}});
    }
    return {{"target", to_string(trace.input.target)},
            {"pair_a", to_string(trace.input.pair_a)},
            {"pair_c", to_string(trace.input.pair_c)},
            {"t0", to_string(trace.t0)},
            {"p0", to_string(trace.p0)},
            {"inv_p0", to_string(trace.inv_p0)},
            {"steps", trace.steps_taken},
            {"terminated", trace.terminated},
            {"rows", std::move(rows)}};
}

json result_json(const FrobeniusResult& r) {
    json out;
    out["input"] = strings(r.triple.input);
    out["generators"] = strings(r.triple.generators);
    out["degenerate_member"] =
        r.triple.degenerate_member ? json(to_string(r.triple.generators[*r.triple.degenerate_member]))
                                   : json(nullptr);
    out["g"] = to_string(r.g);
    out["f_pos"] = to_string(r.f_pos);
    if (r.candidate_a && r.candidate_b) {
        out["candidates"] = {{"A", to_string(*r.candidate_a)}, {"B", to_string(*r.candidate_b)}};
        out["selected_system"] = std::string(1, *r.selected_system);
    } else {
        out["candidates"] = nullptr;
        out["selected_system"] = nullptr;
    }
    json certs = json::array();
    for (std::size_t i = 0; i < r.certificates.size(); ++i) {
        json c = certificate_json(r.certificates[i]);
        c["steps"] = r.walk_steps[i];
        certs.push_back(std::move(c));
    }
    out["certificates"] = std::move(certs);
    json decs = json::array();
    for (const Decomposition& d : r.decompositions) {
        decs.push_back({{"generators", {to_string(r.triple.generators[d.first]),
                                        to_string(r.triple.generators[d.second])}},
                        {"coefficients", {to_string(d.first_coef), to_string(d.second_coef)}},
                        {"certified_generator", to_string(r.triple.generators[d.certified])}});
    }
    out["decompositions"] = std::move(decs);
    return out;
}

json summary_json(const BenchReport& report) {
    const BenchSummary& s = report.summary;
    return {{"digits", report.config.digits},
            {"samples", report.records.size()},
            {"seed", report.config.seed},
            {"steps_L1", stats_json(s.per_walk[0])},
            {"steps_L2", stats_json(s.per_walk[1])},
            {"steps_L3", stats_json(s.per_walk[2])},
            {"steps_total", stats_json(s.total)},
            {"mean_total_ms", s.mean_total_ms}};
}

}  // namespace frob
