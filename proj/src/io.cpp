#include "greyrank/io.hpp"

#include "greyrank/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace greyrank {

namespace {

const Json& require(const Json& obj, const char* key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end())
        throw ValidationError(where + ": missing required key '" + key + "'");
    return *it;
}

double number(const Json& v, const std::string& where) {
    if (!v.is_number())
        throw ValidationError(where + ": expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d))
        throw ValidationError(where + ": expected a finite number");
    return d;
}

std::vector<double> number_array(const Json& v, const std::string& where) {
    if (!v.is_array())
        throw ValidationError(where + ": expected an array of numbers");
    std::vector<double> out;
    for (std::size_t k = 0; k < v.size(); ++k)
        out.push_back(number(v[k], where + "[" + std::to_string(k) + "]"));
    return out;
}

GreyInterval interval(const Json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2)
        throw ValidationError(where + ": expected [lo, hi]");
    const double lo = number(v[0], where + "[0]");
    const double hi = number(v[1], where + "[1]");
    if (lo > hi)
        throw ValidationError(where + ": lower bound " + v[0].dump() + " exceeds upper bound " + v[1].dump());
    return GreyInterval(lo, hi);
}

IntervalMatrix interval_matrix(const Json& v, const DecisionProblem& p, const std::string& key) {
    const std::size_t n = p.plan_count();
    const std::size_t m = p.attribute_count();
    if (!v.is_array() || v.size() != n)
        throw ValidationError(key + ": expected " + std::to_string(n) + " rows (one per plan)");
    IntervalMatrix out(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string row = key + "[" + std::to_string(i) + "]";
        if (!v[i].is_array() || v[i].size() != m)
            throw ValidationError(row + ": expected " + std::to_string(m) + " cells (one per attribute)");
        for (std::size_t j = 0; j < m; ++j)
            out(i, j) = interval(v[i][j], row + "[" + std::to_string(j) + "] (cell " + p.plans[i] + "." +
                                              p.attributes[j].name + ")");
    }
    return out;
}

MethodParams parse_params(const Json& v) {
    if (!v.is_object())
        throw ValidationError("params: expected an object");
    static const std::set<std::string> known{"rho", "theta_plus", "theta_minus", "borda_weights"};
    for (const auto& [key, _] : v.items())
        if (!known.count(key))
            throw ValidationError("params: unknown key '" + key + "'");

    MethodParams params;
    if (v.contains("rho"))
        params.rho = number(v["rho"], "params.rho");
    if (v.contains("theta_plus")) {
        params.theta_plus = number(v["theta_plus"], "params.theta_plus");
        params.theta_minus = 1.0 - params.theta_plus;
    }
    if (v.contains("theta_minus")) {
        params.theta_minus = number(v["theta_minus"], "params.theta_minus");
        if (!v.contains("theta_plus"))
            params.theta_plus = 1.0 - params.theta_minus;
    }
    if (v.contains("borda_weights")) {
        const auto w = number_array(v["borda_weights"], "params.borda_weights");
        if (w.size() != 3)
            throw ValidationError("params.borda_weights: expected 3 weights (topsis, incidence, entropy)");
        std::copy(w.begin(), w.end(), params.borda_weights.begin());
    }
    return params;
}

DecisionProblem parse_problem(const Json& doc) {
    if (!doc.is_object())
        throw ValidationError("problem: expected a JSON object");
    static const std::set<std::string> known{"description", "notes",          "plans",       "attributes",
                                             "matrix",      "expert_weights", "preferences", "params"};
    for (const auto& [key, _] : doc.items())
        if (!known.count(key))
            throw ValidationError("problem: unknown key '" + key + "'");

    DecisionProblem p;
    const auto& plans = require(doc, "plans", "problem");
    if (!plans.is_array())
        throw ValidationError("plans: expected an array of names");
    for (std::size_t i = 0; i < plans.size(); ++i) {
        if (!plans[i].is_string())
            throw ValidationError("plans[" + std::to_string(i) + "]: expected a string");
        p.plans.push_back(plans[i].get<std::string>());
    }

    const auto& attributes = require(doc, "attributes", "problem");
    if (!attributes.is_array())
        throw ValidationError("attributes: expected an array");
    for (std::size_t j = 0; j < attributes.size(); ++j) {
        const std::string where = "attributes[" + std::to_string(j) + "]";
        const auto& a = attributes[j];
        if (!a.is_object())
            throw ValidationError(where + ": expected {\"name\": ..., \"kind\": ...}");
        const auto& name = require(a, "name", where);
        const auto& kind = require(a, "kind", where);
        if (!name.is_string() || !kind.is_string())
            throw ValidationError(where + ": name and kind must be strings");
        try {
            p.attributes.push_back({name.get<std::string>(), parse_attribute_kind(kind.get<std::string>())});
        } catch (const ValidationError& e) {
            throw ValidationError(where + ".kind: " + e.what());
        }
    }

    p.matrix = interval_matrix(require(doc, "matrix", "problem"), p, "matrix");

    const auto& experts = require(doc, "expert_weights", "problem");
    if (!experts.is_array())
        throw ValidationError("expert_weights: expected an array of weight vectors");
    for (std::size_t l = 0; l < experts.size(); ++l)
        p.expert_weights.push_back(number_array(experts[l], "expert_weights[" + std::to_string(l) + "]"));

    if (doc.contains("preferences") && !doc["preferences"].is_null()) {
        const auto& q = doc["preferences"];
        if (!q.is_array())
            throw ValidationError("preferences: expected an array of [lo, hi]");
        std::vector<GreyInterval> prefs;
        for (std::size_t i = 0; i < q.size(); ++i)
            prefs.push_back(interval(q[i], "preferences[" + std::to_string(i) + "]"));
        p.preferences = std::move(prefs);
    }

    if (doc.contains("params"))
        p.params = parse_params(doc["params"]);
    return p;
}

Json interval_json(const GreyInterval& a) { return Json::array({a.lo(), a.hi()}); }

Json intervals_json(std::span<const GreyInterval> v) {
    Json out = Json::array();
    for (const auto& a : v)
        out.push_back(interval_json(a));
    return out;
}

Json matrix_json(const IntervalMatrix& x) {
    Json out = Json::array();
    for (std::size_t i = 0; i < x.rows(); ++i)
        out.push_back(intervals_json(x.row(i)));
    return out;
}

Json real_matrix_json(const Grid<double>& x) {
    Json out = Json::array();
    for (std::size_t i = 0; i < x.rows(); ++i)
        out.push_back(Json(std::vector<double>(x.row(i).begin(), x.row(i).end())));
    return out;
}

Json plan_order_json(const Report& r, const std::vector<std::size_t>& order) {
    Json out = Json::array();
    for (std::size_t i : order)
        out.push_back(r.problem.plans[i]);
    return out;
}

std::vector<std::size_t> order_from_ranks(const std::vector<int>& ranks) {
    std::vector<std::size_t> order(ranks.size());
    for (std::size_t i = 0; i < ranks.size(); ++i)
        order[static_cast<std::size_t>(ranks[i] - 1)] = i;
    return order;
}

void dump_to(std::string& out, const Json& v, int depth) {
    const auto indent = [&](int d) { out.append(static_cast<std::size_t>(d) * 2, ' '); };
    switch (v.type()) {
    case Json::value_t::number_float: {
        const double d = v.get<double>();
        if (!std::isfinite(d)) {
            out += "null";
            break;
        }
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", d);
        out += buf;
        break;
    }
    case Json::value_t::array: {
        if (v.empty()) {
            out += "[]";
            break;
        }
        const bool flat = std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
        if (flat) {
            out += '[';
            for (std::size_t k = 0; k < v.size(); ++k) {
                if (k)
                    out += ", ";
                dump_to(out, v[k], depth + 1);
            }
            out += ']';
            break;
        }
        out += "[\n";
        for (std::size_t k = 0; k < v.size(); ++k) {
            indent(depth + 1);
            dump_to(out, v[k], depth + 1);
            out += k + 1 < v.size() ? ",\n" : "\n";
        }
        indent(depth);
        out += ']';
        break;
    }
    case Json::value_t::object: {
        if (v.empty()) {
            out += "{}";
            break;
        }
        out += "{\n";
        std::size_t k = 0;
        for (const auto& [key, value] : v.items()) {
            indent(depth + 1);
            out += Json(key).dump();
            out += ": ";
            dump_to(out, value, depth + 1);
            out += ++k < v.size() ? ",\n" : "\n";
        }
        indent(depth);
        out += '}';
        break;
    }
    default:
        out += v.dump();
    }
}

std::string fixed(double v, int precision = 5) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(precision) << v;
    return os.str();
}

std::string fixed(const GreyInterval& a) { return "[" + fixed(a.lo()) + ", " + fixed(a.hi()) + "]"; }

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width)
        s.append(width - s.size(), ' ');
    return s;
}

std::size_t plan_width(const DecisionProblem& p) {
    std::size_t w = 4;
    for (const auto& name : p.plans)
        w = std::max(w, name.size());
    return w + 2;
}

void text_interval_table(std::ostringstream& os, const DecisionProblem& p, const IntervalMatrix& x) {
    const std::size_t pw = plan_width(p);
    constexpr std::size_t cw = 20;
    os << pad("", pw);
    for (const auto& a : p.attributes)
        os << pad(a.name, cw);
    os << '\n';
    for (std::size_t i = 0; i < x.rows(); ++i) {
        os << pad(p.plans[i], pw);
        for (std::size_t j = 0; j < x.cols(); ++j)
            os << pad(fixed(x(i, j)), cw);
        os << '\n';
    }
}

std::string order_text(const DecisionProblem& p, const std::vector<int>& ranks) {
    std::string s;
    for (std::size_t i : order_from_ranks(ranks)) {
        if (!s.empty())
            s += " > ";
        s += p.plans[i];
    }
    return s;
}

} // namespace

LoadedInput parse_input(const Json& doc) {
    LoadedInput in;
    if (doc.is_object() && doc.contains("problem")) {
        in.problem = parse_problem(doc["problem"]);
        if (doc.contains("normalized") && !doc["normalized"].is_null())
            in.normalized = interval_matrix(doc["normalized"], in.problem, "normalized");
    } else {
        in.problem = parse_problem(doc);
    }
    return in;
}

LoadedInput parse_input_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ValidationError(std::string("input is not valid JSON: ") + e.what());
    }
    return parse_input(doc);
}

LoadedInput load_input(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("cannot open input file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_input_text(buf.str());
}

Json to_json(const DecisionProblem& p) {
    Json doc;
    doc["plans"] = p.plans;
    Json attrs = Json::array();
    for (const auto& a : p.attributes)
        attrs.push_back({{"name", a.name}, {"kind", std::string(to_string(a.kind))}});
    doc["attributes"] = std::move(attrs);
    doc["matrix"] = matrix_json(p.matrix);
    doc["expert_weights"] = p.expert_weights;
    if (p.preferences)
        doc["preferences"] = intervals_json(*p.preferences);
    doc["params"] = {{"rho", p.params.rho},
                     {"theta_plus", p.params.theta_plus},
                     {"theta_minus", p.params.theta_minus},
                     {"borda_weights", p.params.borda_weights}};
    return doc;
}

Json to_json(const Report& r) {
    Json doc;
    doc["stage"] = std::string(to_string(r.stage));
    doc["problem"] = to_json(r.problem);
    if (r.normalized)
        doc["normalized"] = matrix_json(*r.normalized);
    doc["normalized_precomputed"] = r.normalized_precomputed;
    if (r.weights) {
        doc["weights"] = {{"subjective", intervals_json(r.weights->subjective)},
                          {"optimization", r.weights->optimization},
                          {"entropy_lower", r.weights->entropy_lower},
                          {"entropy_upper", r.weights->entropy_upper},
                          {"objective", intervals_json(r.weights->objective)},
                          {"final", intervals_json(r.weights->final)}};
    }
    if (r.weighted) {
        doc["blended"] = matrix_json(r.weighted->blended);
        doc["weighted"] = matrix_json(r.weighted->weighted);
    }
    if (r.ideals)
        doc["ideals"] = {{"positive", intervals_json(r.ideals->positive)},
                         {"negative", intervals_json(r.ideals->negative)}};
    if (r.incidence)
        doc["incidence"] = {{"r_plus", real_matrix_json(r.incidence->r_plus)},
                            {"r_minus", real_matrix_json(r.incidence->r_minus)}};

    if (r.stage == Stage::Rank || r.stage == Stage::All) {
        Json methods = Json::object();
        Json ties = Json::object();
        for (const auto& res : r.rankings) {
            Json trace = Json::object();
            for (const auto& t : res.trace)
                trace[t.name] = t.values;
            const std::string key(to_string(res.method));
            methods[key] = {{"scores", res.scores},
                            {"ranks", res.ranks},
                            {"order", plan_order_json(r, order_from_ranks(res.ranks))},
                            {"trace", std::move(trace)},
                            {"flags", res.flags}};
            ties[key] = res.tied;
        }
        doc["methods"] = std::move(methods);
        if (r.borda) {
            Json names = Json::array();
            for (Method m : r.borda->methods)
                names.push_back(std::string(to_string(m)));
            doc["borda_methods"] = std::move(names);
            doc["borda_weights"] = r.borda->weights;
            doc["borda_scores"] = r.borda->result.scores;
            doc["final_rank"] = r.borda->result.order.ranks;
            doc["final_order"] = plan_order_json(r, r.borda->result.order.order);
            ties["borda"] = r.borda->result.order.tied;
        }
        doc["tie_flags"] = std::move(ties);
    }
    doc["warnings"] = r.warnings;
    return doc;
}

Json to_json(const WhatIfResult& w) {
    Json changes = Json::array();
    for (const auto& c : w.changes)
        changes.push_back({{"plan", c.plan}, {"baseline", c.baseline}, {"perturbed", c.perturbed}});
    Json doc;
    doc["overrides"] = w.applied;
    doc["diff"] = {{"rank_changes", std::move(changes)},
                   {"new_ties", w.new_ties},
                   {"resolved_ties", w.resolved_ties}};
    doc["baseline"] = to_json(w.baseline);
    doc["perturbed"] = to_json(w.perturbed);
    return doc;
}

std::string dump_json(const Json& value) {
    std::string out;
    dump_to(out, value, 0);
    out += '\n';
    return out;
}

std::string render_text(const Report& r) {
    std::ostringstream os;
    const auto& p = r.problem;
    os << "Stage: " << to_string(r.stage) << "  (" << p.plan_count() << " plans, " << p.attribute_count()
       << " attributes)\n\n";

    if (r.normalized) {
        os << "Normalized decision matrix" << (r.normalized_precomputed ? " (precomputed)" : "") << '\n';
        text_interval_table(os, p, *r.normalized);
        os << '\n';
    }

    if (r.weights) {
        const auto& w = *r.weights;
        os << "Attribute weights\n";
        os << pad("", 10) << pad("subjective", 20) << pad("optimization", 14) << pad("entropy lo", 12)
           << pad("entropy hi", 12) << pad("objective", 20) << "final\n";
        for (std::size_t j = 0; j < p.attribute_count(); ++j)
            os << pad(p.attributes[j].name, 10) << pad(fixed(w.subjective[j]), 20) << pad(fixed(w.optimization[j]), 14)
               << pad(fixed(w.entropy_lower[j]), 12) << pad(fixed(w.entropy_upper[j]), 12)
               << pad(fixed(w.objective[j]), 20) << fixed(w.final[j]) << '\n';
        os << '\n';
    }

    if (!r.rankings.empty()) {
        const std::size_t pw = plan_width(p);
        os << "Scores (rank)\n" << pad("", pw);
        for (const auto& res : r.rankings)
            os << pad(std::string(to_string(res.method)), 16);
        if (r.borda)
            os << "borda";
        os << '\n';
        for (std::size_t i = 0; i < p.plan_count(); ++i) {
            os << pad(p.plans[i], pw);
            for (const auto& res : r.rankings)
                os << pad(fixed(res.scores[i]) + " (" + std::to_string(res.ranks[i]) + ")", 16);
            if (r.borda)
                os << fixed(r.borda->result.scores[i]) << " (" << r.borda->result.order.ranks[i] << ")";
            os << '\n';
        }
        os << '\n';
        for (const auto& res : r.rankings)
            os << pad(std::string(to_string(res.method)) + ":", 11) << order_text(p, res.ranks) << '\n';
        if (r.borda)
            os << pad("final:", 11) << order_text(p, r.borda->result.order.ranks) << '\n';
    }

    if (!r.warnings.empty()) {
        os << "\nWarnings\n";
        for (const auto& w : r.warnings)
            os << "  - " << w << '\n';
    }
    return os.str();
}

std::string render_text(const WhatIfResult& w) {
    std::ostringstream os;
    const auto& p = w.baseline.problem;
    os << "What-if:";
    for (const auto& t : w.applied)
        os << ' ' << t;
    os << "\n\n";
    os << "baseline:  " << order_text(p, w.baseline.borda->result.order.ranks) << '\n';
    os << "perturbed: " << order_text(p, w.perturbed.borda->result.order.ranks) << '\n';
    if (w.changes.empty()) {
        os << "\nNo final rank changes.\n";
    } else {
        os << "\nRank changes\n";
        for (const auto& c : w.changes)
            os << "  " << c.plan << ": " << c.baseline << " -> " << c.perturbed << '\n';
    }
    for (const auto& t : w.new_ties)
        os << "New tie: " << t << '\n';
    for (const auto& t : w.resolved_ties)
        os << "Resolved tie: " << t << '\n';
    return os.str();
}

} // namespace greyrank
