#include "regdiag/derivation.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "regdiag/diagram_text.hpp"
#include "regdiag/errors.hpp"
#include "regdiag/portgraph.hpp"

namespace regdiag {

using nlohmann::json;

DiagramPtr apply_step(const DiagramPtr& current, const DerivationStep& step,
                      const std::vector<RewriteRule>& catalog) {
    const RewriteRule* rule = find_rule(catalog, step.rule);
    if (!rule) throw UnknownRuleError("unknown rule: " + step.rule);
    if (!rule->equality && !step.forward)
        throw BackwardOnInequalityError(
            "rule " + step.rule + " is an inequality and cannot be used backward");

    auto [lhs, rhs] = rule->build(step.widths, step.metavar);
    if (!step.forward) std::swap(lhs, rhs);

    if (step.left_pad < 0 || step.right_pad < 0)
        throw BadInstantiationError("negative padding");

    auto pad = [&](const DiagramPtr& mid) {
        return tensor_all({identity(step.left_pad), mid, identity(step.right_pad)});
    };
    DiagramPtr piece = pad(lhs);
    DiagramPtr c1 = step.c1 ? step.c1 : identity(piece->dom());
    DiagramPtr c2 = step.c2 ? step.c2 : identity(piece->cod());

    if (c1->cod() != piece->dom() || c2->dom() != piece->cod())
        throw WidthMismatchError(
            "step contexts do not fit around the rule instance: c1 is ... -> " +
            std::to_string(c1->cod()) + ", instance is " +
            std::to_string(piece->dom()) + " -> " + std::to_string(piece->cod()) +
            ", c2 is " + std::to_string(c2->dom()) + " -> ...");

    DiagramPtr reconstructed = seq_all({c1, piece, c2});
    if (reconstructed->dom() != current->dom() ||
        reconstructed->cod() != current->cod())
        throw WidthMismatchError("step reconstruction has interface " +
                                 std::to_string(reconstructed->dom()) + " -> " +
                                 std::to_string(reconstructed->cod()) +
                                 " but the current diagram has " +
                                 std::to_string(current->dom()) + " -> " +
                                 std::to_string(current->cod()));
    if (!iso_equal(reconstructed, current))
        throw ContextMismatchError(
            "contexts plus rule side do not reconstruct the current diagram");

    return seq_all({c1, pad(rhs), c2});
}

DerivationVerdict check_derivation(const Derivation& d, const Signature& sig) {
    DerivationVerdict v;
    if (!d.start || !d.goal) {
        v.reason = "derivation must have start and goal diagrams";
        return v;
    }
    auto catalog = rule_catalog(sig);
    DiagramPtr current = d.start;
    bool all_equalities = true;

    for (std::size_t i = 0; i < d.steps.size(); ++i) {
        const auto& step = d.steps[i];
        StepTrace t;
        t.index = static_cast<int>(i);
        t.rule = step.rule;
        t.forward = step.forward;
        try {
            current = apply_step(current, step, catalog);
            t.ok = true;
            const RewriteRule* rule = find_rule(catalog, step.rule);
            if (!rule->equality) all_equalities = false;
            t.note = rule->equality ? "equality" : "inequality";
        } catch (const Error& e) {
            t.ok = false;
            t.note = e.what();
            v.trace.push_back(t);
            v.reason = "step " + std::to_string(i) + " (" + step.rule +
                       "): " + e.what();
            return v;
        }
        v.trace.push_back(t);
    }

    if (current->dom() != d.goal->dom() || current->cod() != d.goal->cod()) {
        v.reason = "final diagram interface differs from the goal";
        return v;
    }
    if (!iso_equal(current, d.goal)) {
        v.reason = "derivation ends at a diagram that is not the goal";
        return v;
    }
    if (d.claims_equality && !all_equalities) {
        v.reason = "derivation claims = but uses at least one inequality step";
        return v;
    }
    v.accepted = true;
    v.equality = all_equalities;
    return v;
}

Derivation derivation_from_json_text(const std::string& text, const Signature& sig) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("derivation JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("start") || !j.contains("goal"))
        throw ParseError("derivation JSON: expected start, goal and steps");
    Derivation d;
    d.start = parse_diagram(j["start"].get<std::string>(), sig);
    d.goal = parse_diagram(j["goal"].get<std::string>(), sig);
    std::string rel = j.value("relation", "<=");
    if (rel == "=")
        d.claims_equality = true;
    else if (rel == "<=")
        d.claims_equality = false;
    else
        throw ParseError("derivation JSON: relation must be \"=\" or \"<=\"");
    if (j.contains("steps")) {
        if (!j["steps"].is_array())
            throw ParseError("derivation JSON: steps must be an array");
        for (const auto& js : j["steps"]) {
            DerivationStep s;
            if (!js.contains("rule") || !js["rule"].is_string())
                throw ParseError("derivation JSON: each step needs a rule name");
            s.rule = js["rule"].get<std::string>();
            std::string dir = js.value("direction", "forward");
            if (dir == "forward")
                s.forward = true;
            else if (dir == "backward")
                s.forward = false;
            else
                throw ParseError("derivation JSON: direction must be forward or backward");
            if (js.contains("widths")) {
                for (const auto& w : js["widths"]) s.widths.push_back(w.get<int>());
            }
            if (js.contains("metavar"))
                s.metavar = parse_diagram(js["metavar"].get<std::string>(), sig);
            if (js.contains("c1"))
                s.c1 = parse_diagram(js["c1"].get<std::string>(), sig);
            if (js.contains("c2"))
                s.c2 = parse_diagram(js["c2"].get<std::string>(), sig);
            s.left_pad = js.value("left_pad", 0);
            s.right_pad = js.value("right_pad", 0);
            d.steps.push_back(std::move(s));
        }
    }
    return d;
}

Derivation derivation_from_file(const std::string& path, const Signature& sig) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open derivation file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return derivation_from_json_text(ss.str(), sig);
}

std::string derivation_to_json_text(const Derivation& d, const Signature& sig) {
    json j;
    j["start"] = print_diagram(d.start, &sig);
    j["goal"] = print_diagram(d.goal, &sig);
    j["relation"] = d.claims_equality ? "=" : "<=";
    j["steps"] = json::array();
    for (const auto& s : d.steps) {
        json js;
        js["rule"] = s.rule;
        js["direction"] = s.forward ? "forward" : "backward";
        if (!s.widths.empty()) js["widths"] = s.widths;
        if (s.metavar) js["metavar"] = print_diagram(s.metavar, &sig);
        if (s.c1) js["c1"] = print_diagram(s.c1, &sig);
        if (s.c2) js["c2"] = print_diagram(s.c2, &sig);
        if (s.left_pad) js["left_pad"] = s.left_pad;
        if (s.right_pad) js["right_pad"] = s.right_pad;
        j["steps"].push_back(std::move(js));
    }
    return j.dump(2);
}

} // namespace regdiag
