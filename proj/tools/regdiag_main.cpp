// Command line entry point. Every capability of the library is reachable
// here with file-based inputs: translation of formulas to diagrams, model
// evaluation, inclusion and countermodel search, derivation checking,
// doctrine and bicategory validation, the adjunction checks, and DOT
// rendering. Exit codes: 0 success or property holds, 1 checked failure
// (rejected derivation, countermodel found, validation violation), 2 usage
// or input errors.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "regdiag/adjunction.hpp"
#include "regdiag/base.hpp"
#include "regdiag/bicat.hpp"
#include "regdiag/bicat_check.hpp"
#include "regdiag/composed_doctrine.hpp"
#include "regdiag/countermodel.hpp"
#include "regdiag/derivation.hpp"
#include "regdiag/diagram.hpp"
#include "regdiag/diagram_text.hpp"
#include "regdiag/doctrine_check.hpp"
#include "regdiag/errors.hpp"
#include "regdiag/finrel.hpp"
#include "regdiag/functor.hpp"
#include "regdiag/logic.hpp"
#include "regdiag/portgraph.hpp"
#include "regdiag/pow_doctrine.hpp"
#include "regdiag/rdoctrine.hpp"
#include "regdiag/report.hpp"
#include "regdiag/rules.hpp"
#include "regdiag/signature.hpp"
#include "regdiag/table_doctrine.hpp"
#include "regdiag/theta.hpp"

using json = nlohmann::json;
using namespace regdiag;

namespace {

json report_to_json(const Report& r) {
    json out;
    out["title"] = r.title;
    out["ok"] = r.ok();
    out["clauses"] = json::array();
    for (const auto& c : r.clauses) {
        json cj;
        cj["name"] = c.name;
        cj["checked"] = c.checked;
        cj["sampled"] = c.sampled;
        cj["passed"] = c.passed();
        cj["failures"] = c.failures;
        cj["notes"] = c.notes;
        out["clauses"].push_back(std::move(cj));
    }
    return out;
}

int emit_reports(const std::vector<Report>& reports, const std::string& format,
                 const std::vector<std::string>& extra_lines = {}) {
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.ok();
    if (format == "json") {
        json out;
        out["ok"] = ok;
        out["reports"] = json::array();
        for (const auto& r : reports) out["reports"].push_back(report_to_json(r));
        if (!extra_lines.empty()) out["notes"] = extra_lines;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : reports) std::cout << r.summary(!r.ok());
        for (const auto& line : extra_lines) std::cout << line << "\n";
    }
    return ok ? 0 : 1;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

DiagramPtr input_diagram(const std::string& text, bool as_formula, int context,
                         const Signature& sig) {
    if (!as_formula) return parse_diagram(text, sig);
    FormulaPtr f = parse_formula(text, sig);
    check_formula(f, context, sig);
    return theta(f, context, sig);
}

json relation_to_json(const FinModel& m, const FinRelation& r) {
    json out;
    out["carrier"] = r.carrier();
    out["dom_width"] = r.dom_width();
    out["cod_width"] = r.cod_width();
    out["pairs"] = json::array();
    for (std::size_t a = 0; a < r.dom_size(); ++a)
        for (std::size_t b = 0; b < r.cod_size(); ++b)
            if (r.get(a, b)) {
                json names_a = json::array(), names_b = json::array();
                for (int e : decode_tuple(a, r.carrier(), r.dom_width()))
                    names_a.push_back(m.name_of(e));
                for (int e : decode_tuple(b, r.carrier(), r.cod_width()))
                    names_b.push_back(m.name_of(e));
                out["pairs"].push_back({names_a, names_b});
            }
    return out;
}

// Shared source flags for the doctrine subcommands. Exactly one doctrine is
// selected: a recorded table file, or the powerset doctrine over one named
// atom, optionally composed with the diagonal k-th power functor.
struct DoctrineSource {
    std::string file;
    std::string pow_elems = "0,1";
    int power = 1;
};

void add_source_flags(CLI::App* sub, DoctrineSource& src) {
    sub->add_option("file", src.file,
                    "doctrine table file (overrides --pow)")
        ->check(CLI::ExistingFile);
    sub->add_option("--pow", src.pow_elems,
                    "elements of the single atom of the powerset doctrine");
    sub->add_option("--power", src.power,
                    "compose with the diagonal k-th power functor (k >= 2 "
                    "loses unique choice)")
        ->check(CLI::PositiveNumber);
}

template <class Fn>
int with_doctrine(const DoctrineSource& src, Fn&& fn) {
    if (!src.file.empty()) {
        if (src.power > 1)
            throw Error("--power applies to the powerset source only");
        TableDoctrine td = TableDoctrine::from_file(src.file);
        return fn(td);
    }
    if (src.power <= 1) {
        BaseCategory base({{"A", split_csv(src.pow_elems)}});
        PowersetDoctrine pow(base);
        return fn(pow);
    }
    BaseCategory base({{"A", split_csv(src.pow_elems)}});
    BaseCategory target = power_target(base, src.power);
    PowersetDoctrine pow(target);
    FunctorData F = atom_power_functor(base, target, src.power);
    ComposedDoctrine<PowersetDoctrine> composed(pow, F);
    return fn(composed);
}

struct CheckFlags {
    int depth = 1;
    std::uint64_t budget = 20000;
    std::uint64_t sample_cap = 2000;
    std::uint64_t seed = 1;
    std::string format = "text";
};

void add_check_flags(CLI::App* sub, CheckFlags& f, bool with_sample = false) {
    sub->add_option("--depth", f.depth, "object universe product depth")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--budget", f.budget, "elementary checks per clause");
    if (with_sample)
        sub->add_option("--sample-cap", f.sample_cap,
                        "draws per fiber too large to enumerate");
    sub->add_option("--seed", f.seed, "seed for sampled sweeps");
    sub->add_option("--format", f.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
}

DoctrineCheckOptions doctrine_opts(const CheckFlags& f) {
    DoctrineCheckOptions o;
    o.depth = f.depth;
    o.budget = f.budget;
    o.seed = f.seed;
    return o;
}

BicatCheckOptions bicat_opts(const CheckFlags& f) {
    BicatCheckOptions o;
    o.depth = f.depth;
    o.budget = f.budget;
    o.sample_cap = f.sample_cap;
    o.seed = f.seed;
    return o;
}

RucOptions ruc_opts(const CheckFlags& f) {
    RucOptions o;
    o.depth = f.depth;
    o.budget = f.budget;
    o.sample_cap = f.sample_cap;
    o.seed = f.seed;
    return o;
}

AdjunctionCheckOptions adj_opts(const CheckFlags& f) {
    AdjunctionCheckOptions o;
    o.depth = f.depth;
    o.budget = f.budget;
    o.seed = f.seed;
    return o;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"regdiag: string diagrams, regular logic and finite relational"
                 " semantics"};
    app.require_subcommand(1);
    int rc = 0;

    // translate
    struct {
        std::string sig, formula, format = "text";
        int context = 0;
    } tr;
    {
        auto* sub = app.add_subcommand(
            "translate", "translate a formula in context to a diagram");
        sub->add_option("--sig", tr.sig, "signature file")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("--context", tr.context,
                        "number of free variables x1..xn")
            ->required()
            ->check(CLI::NonNegativeNumber);
        sub->add_option("formula", tr.formula, "formula text")->required();
        sub->add_option("--format", tr.format, "output format")
            ->check(CLI::IsMember({"text", "json", "dot"}));
        sub->callback([&] {
            Signature sig = Signature::from_file(tr.sig);
            FormulaPtr f = parse_formula(tr.formula, sig);
            check_formula(f, tr.context, sig);
            DiagramPtr d = theta(f, tr.context, sig);
            if (tr.format == "dot") {
                std::cout << to_dot(d);
            } else if (tr.format == "json") {
                json out;
                out["formula"] = print_formula(f);
                out["context"] = tr.context;
                out["diagram"] = print_diagram(d, &sig);
                out["dom"] = d->dom();
                out["cod"] = d->cod();
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << print_diagram(d, &sig) << "\n";
            }
            rc = 0;
        });
    }

    // typecheck
    struct {
        std::string sig, text;
        bool formula = false;
        int context = 0;
        std::string format = "text";
    } tc;
    {
        auto* sub = app.add_subcommand(
            "typecheck", "parse a diagram (or formula) and report its interface");
        sub->add_option("--sig", tc.sig, "signature file")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("text", tc.text, "diagram or formula text")->required();
        sub->add_flag("--formula", tc.formula, "treat the input as a formula");
        sub->add_option("--context", tc.context, "formula context size")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--format", tc.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->callback([&] {
            Signature sig = Signature::from_file(tc.sig);
            try {
                DiagramPtr d =
                    input_diagram(tc.text, tc.formula, tc.context, sig);
                if (tc.format == "json") {
                    json out;
                    out["ok"] = true;
                    out["dom"] = d->dom();
                    out["cod"] = d->cod();
                    std::cout << out.dump(2) << "\n";
                } else {
                    std::cout << d->dom() << " -> " << d->cod() << "\n";
                }
                rc = 0;
            } catch (const ParseError&) {
                throw; // malformed input is a usage error
            } catch (const Error& e) {
                if (tc.format == "json") {
                    json out;
                    out["ok"] = false;
                    out["error"] = e.what();
                    std::cout << out.dump(2) << "\n";
                } else {
                    std::cout << "ill-typed: " << e.what() << "\n";
                }
                rc = 1;
            }
        });
    }

    // eval
    struct {
        std::string sig, model, text;
        bool formula = false;
        int context = 0;
        std::string format = "text";
    } ev;
    {
        auto* sub = app.add_subcommand(
            "eval", "evaluate a diagram (or formula) in a finite model");
        sub->add_option("--sig", ev.sig, "signature file")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("--model", ev.model, "model file")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("text", ev.text, "diagram or formula text")->required();
        sub->add_flag("--formula", ev.formula, "treat the input as a formula");
        sub->add_option("--context", ev.context, "formula context size")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--format", ev.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->callback([&] {
            Signature sig = Signature::from_file(ev.sig);
            FinModel m = FinModel::from_file(ev.model, sig);
            DiagramPtr d = input_diagram(ev.text, ev.formula, ev.context, sig);
            FinRelation r = eval_diagram(m, d);
            if (ev.format == "json") {
                std::cout << relation_to_json(m, r).dump(2) << "\n";
            } else {
                std::cout << "carrier " << r.carrier() << ", interface "
                          << r.dom_width() << " -> " << r.cod_width() << ", "
                          << r.pair_count() << " pair(s)\n";
                for (std::size_t a = 0; a < r.dom_size(); ++a)
                    for (std::size_t b = 0; b < r.cod_size(); ++b)
                        if (r.get(a, b))
                            std::cout << "  "
                                      << tuple_to_string(m, a, r.dom_width())
                                      << " -> "
                                      << tuple_to_string(m, b, r.cod_width())
                                      << "\n";
            }
            rc = 0;
        });
    }

    // include
    struct {
        std::string sig, model, lhs, rhs;
        bool formula = false;
        int context = 0;
        std::string format = "text";
    } inc;
    {
        auto* sub = app.add_subcommand(
            "include", "check inclusion of two diagrams in one model");
        sub->add_option("--sig", inc.sig, "signature file")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("--model", inc.model, "model file")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("lhs", inc.lhs, "left diagram or formula")->required();
        sub->add_option("rhs", inc.rhs, "right diagram or formula")->required();
        sub->add_flag("--formula", inc.formula, "treat inputs as formulas");
        sub->add_option("--context", inc.context, "formula context size")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--format", inc.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->callback([&] {
            Signature sig = Signature::from_file(inc.sig);
            FinModel m = FinModel::from_file(inc.model, sig);
            FinRelation l = eval_diagram(
                m, input_diagram(inc.lhs, inc.formula, inc.context, sig));
            FinRelation r = eval_diagram(
                m, input_diagram(inc.rhs, inc.formula, inc.context, sig));
            InclusionResult res = check_inclusion(l, r);
            if (inc.format == "json") {
                json out;
                out["holds"] = res.holds;
                if (!res.holds) {
                    out["witness_dom"] =
                        tuple_to_string(m, res.witness_dom, l.dom_width());
                    out["witness_cod"] =
                        tuple_to_string(m, res.witness_cod, l.cod_width());
                }
                std::cout << out.dump(2) << "\n";
            } else if (res.holds) {
                std::cout << "inclusion holds\n";
            } else {
                std::cout << "inclusion fails at "
                          << tuple_to_string(m, res.witness_dom, l.dom_width())
                          << " -> "
                          << tuple_to_string(m, res.witness_cod, l.cod_width())
                          << "\n";
            }
            rc = res.holds ? 0 : 1;
        });
    }

    // countermodel
    struct {
        std::string sig, hyp, concl;
        bool formula = false;
        int context = 0;
        int max_carrier = 3;
        std::uint64_t budget = 1'000'000;
        int jobs = 1;
        std::string format = "text";
    } cm;
    {
        auto* sub = app.add_subcommand(
            "countermodel",
            "search for a finite model separating hypothesis from conclusion");
        sub->add_option("--sig", cm.sig, "signature file")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("hypothesis", cm.hyp, "hypothesis diagram or formula")
            ->required();
        sub->add_option("conclusion", cm.concl, "conclusion diagram or formula")
            ->required();
        sub->add_flag("--formula", cm.formula, "treat inputs as formulas");
        sub->add_option("--context", cm.context, "formula context size")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--max-carrier", cm.max_carrier,
                        "largest carrier size to enumerate")
            ->check(CLI::PositiveNumber);
        sub->add_option("--budget", cm.budget, "models examined before giving up");
        sub->add_option("--jobs", cm.jobs, "worker cap for the search")
            ->check(CLI::PositiveNumber);
        sub->add_option("--format", cm.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->callback([&] {
            Signature sig = Signature::from_file(cm.sig);
            DiagramPtr h = input_diagram(cm.hyp, cm.formula, cm.context, sig);
            DiagramPtr c = input_diagram(cm.concl, cm.formula, cm.context, sig);
            CountermodelOptions opts;
            opts.max_carrier = cm.max_carrier;
            opts.budget = cm.budget;
            opts.jobs = cm.jobs;
            CountermodelResult res = countermodel_search(sig, h, c, opts);
            using Status = CountermodelResult::Status;
            if (cm.format == "json") {
                json out;
                out["status"] = res.status == Status::Found     ? "found"
                                : res.status == Status::NoneUpTo ? "none"
                                                                 : "exhausted";
                out["examined"] = res.examined;
                if (res.status == Status::Found) {
                    out["model"] = json::parse(res.model.to_json_text());
                    out["witness"] = tuple_to_string(res.model, res.witness,
                                                     h->dom());
                }
                std::cout << out.dump(2) << "\n";
            } else if (res.status == Status::Found) {
                std::cout << "countermodel found after " << res.examined
                          << " model(s); witness "
                          << tuple_to_string(res.model, res.witness, h->dom())
                          << " satisfies the hypothesis only\n"
                          << res.model.to_json_text() << "\n";
            } else if (res.status == Status::NoneUpTo) {
                std::cout << "no countermodel up to carrier " << cm.max_carrier
                          << " (" << res.examined << " model(s) examined)\n";
            } else {
                std::cout << "inconclusive: budget exhausted after "
                          << res.examined << " model(s)\n";
            }
            rc = res.status == Status::Found ? 1 : 0;
        });
    }

    // check-derivation
    struct {
        std::string sig, file, format = "text";
    } cd;
    {
        auto* sub = app.add_subcommand("check-derivation",
                                       "replay a derivation file step by step");
        sub->add_option("--sig", cd.sig, "signature file")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("file", cd.file, "derivation file")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("--format", cd.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->callback([&] {
            Signature sig = Signature::from_file(cd.sig);
            Derivation d = derivation_from_file(cd.file, sig);
            DerivationVerdict v = check_derivation(d, sig);
            if (cd.format == "json") {
                json out;
                out["accepted"] = v.accepted;
                out["relation"] = v.relation();
                out["reason"] = v.reason;
                out["trace"] = json::array();
                for (const auto& t : v.trace)
                    out["trace"].push_back({{"index", t.index},
                                            {"rule", t.rule},
                                            {"forward", t.forward},
                                            {"ok", t.ok},
                                            {"note", t.note}});
                std::cout << out.dump(2) << "\n";
            } else if (v.accepted) {
                std::cout << "Accepted (relation " << v.relation() << ", "
                          << d.steps.size() << " step(s))\n";
            } else {
                std::cout << "Rejected: " << v.reason << "\n";
                for (const auto& t : v.trace)
                    if (!t.ok)
                        std::cout << "  step " << t.index << " (" << t.rule
                                  << (t.forward ? "" : ", backward")
                                  << "): " << t.note << "\n";
            }
            rc = v.accepted ? 0 : 1;
        });
    }

    // render
    struct {
        std::string sig, text, name = "diagram";
        bool formula = false;
        int context = 0;
    } rd;
    {
        auto* sub = app.add_subcommand("render",
                                       "emit a DOT drawing of a diagram");
        sub->add_option("--sig", rd.sig, "signature file")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("text", rd.text, "diagram or formula text")->required();
        sub->add_flag("--formula", rd.formula, "treat the input as a formula");
        sub->add_option("--context", rd.context, "formula context size")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--name", rd.name, "graph name");
        sub->callback([&] {
            Signature sig = Signature::from_file(rd.sig);
            DiagramPtr d = input_diagram(rd.text, rd.formula, rd.context, sig);
            std::cout << to_dot(d, rd.name);
            rc = 0;
        });
    }

    // doctrine family
    auto* doc = app.add_subcommand("doctrine",
                                   "validation and structure checks for "
                                   "elementary existential doctrines");
    doc->require_subcommand(1);

    struct {
        DoctrineSource src;
        CheckFlags flags;
    } dv, db, dm, dr, dc, dt, de;
    {
        auto* sub = doc->add_subcommand("validate", "check the doctrine laws");
        add_source_flags(sub, dv.src);
        add_check_flags(sub, dv.flags);
        sub->callback([&] {
            rc = with_doctrine(dv.src, [&](auto& P) {
                return emit_reports({validate_doctrine(P, doctrine_opts(dv.flags))},
                                    dv.flags.format);
            });
        });
    }
    {
        auto* sub = doc->add_subcommand(
            "bicat", "verify the bicategory built from the doctrine");
        add_source_flags(sub, db.src);
        add_check_flags(sub, db.flags, true);
        sub->callback([&] {
            rc = with_doctrine(db.src, [&](auto& P) {
                BicatOfDoctrine<std::decay_t<decltype(P)>> bb(P);
                return emit_reports({verify_cbc_axioms(bb, bicat_opts(db.flags))},
                                    db.flags.format);
            });
        });
    }
    {
        auto* sub = doc->add_subcommand(
            "maps", "check that maps are exactly the morphism graphs");
        add_source_flags(sub, dm.src);
        add_check_flags(sub, dm.flags, true);
        sub->callback([&] {
            rc = with_doctrine(dm.src, [&](auto& P) {
                BicatOfDoctrine<std::decay_t<decltype(P)>> bb(P);
                return emit_reports(
                    {verify_maps_are_graphs(bb, ruc_opts(dm.flags))},
                    dm.flags.format);
            });
        });
    }
    {
        auto* sub = doc->add_subcommand(
            "ruc", "check the rule of unique choice (every map has a witness)");
        add_source_flags(sub, dr.src);
        add_check_flags(sub, dr.flags, true);
        sub->callback([&] {
            rc = with_doctrine(dr.src, [&](auto& P) {
                return emit_reports({check_ruc(P, ruc_opts(dr.flags))},
                                    dr.flags.format);
            });
        });
    }
    {
        auto* sub = doc->add_subcommand(
            "comprehension", "check that diagonals are comprehensive");
        add_source_flags(sub, dc.src);
        add_check_flags(sub, dc.flags, true);
        sub->callback([&] {
            rc = with_doctrine(dc.src, [&](auto& P) {
                return emit_reports(
                    {check_comprehensive_diagonals(P, ruc_opts(dc.flags))},
                    dc.flags.format);
            });
        });
    }
    {
        auto* sub = doc->add_subcommand(
            "triangles", "check both triangle identities of the adjunction");
        add_source_flags(sub, dt.src);
        add_check_flags(sub, dt.flags);
        sub->callback([&] {
            rc = with_doctrine(dt.src, [&](auto& P) {
                BicatOfDoctrine<std::decay_t<decltype(P)>> bb(P);
                return emit_reports(
                    {check_triangle_left(P, adj_opts(dt.flags)),
                     check_triangle_right(bb, adj_opts(dt.flags))},
                    dt.flags.format);
            });
        });
    }
    {
        auto* sub = doc->add_subcommand(
            "eta-iso",
            "decide whether the unit is an equivalence and cross-check the "
            "unique choice and comprehension criteria");
        add_source_flags(sub, de.src);
        add_check_flags(sub, de.flags, true);
        sub->callback([&] {
            rc = with_doctrine(de.src, [&](auto& P) {
                Report eta = check_eta_iso(P, ruc_opts(de.flags));
                Report ruc = check_ruc(P, ruc_opts(de.flags));
                Report comp =
                    check_comprehensive_diagonals(P, ruc_opts(de.flags));
                const ClauseResult* onto = eta.find("gamma.onto_maps");
                const ClauseResult* inj = eta.find("gamma.injective");
                bool full_agree = onto && onto->passed() == ruc.ok();
                bool faith_agree = inj && inj->passed() == comp.ok();
                std::vector<std::string> lines;
                lines.push_back(std::string("fullness verdict agrees with "
                                            "unique choice: ") +
                                (full_agree ? "yes" : "NO"));
                lines.push_back(std::string("faithfulness verdict agrees with "
                                            "comprehensive diagonals: ") +
                                (faith_agree ? "yes" : "NO"));
                int code = emit_reports({eta, ruc, comp}, de.flags.format, lines);
                if (!full_agree || !faith_agree) return 1;
                return eta.ok() ? 0 : code;
            });
        });
    }
    {
        struct OfCbc {
            std::string elements = "0,1";
            CheckFlags flags;
        };
        static OfCbc oc;
        auto* sub = doc->add_subcommand(
            "of-cbc",
            "build the doctrine of a relation bicategory, validate it and "
            "compare it fiberwise with the powerset doctrine");
        sub->add_option("--elements", oc.elements, "atom elements");
        add_check_flags(sub, oc.flags);
        sub->callback([&] {
            BaseCategory base({{"A", split_csv(oc.elements)}});
            RelTruncation bb(base);
            RDoctrine<RelTruncation> Q = doctrine_of_cbc(bb);
            PowersetDoctrine P(base);
            Report laws = validate_doctrine(Q, doctrine_opts(oc.flags));
            Report iso = check_fiberwise_order_iso(Q, P, doctrine_opts(oc.flags));
            rc = emit_reports({laws, iso}, oc.flags.format);
        });
    }

    // cbc-verify
    struct {
        std::string backend = "rel";
        std::string elements = "0,1";
        bool triangles = false;
        CheckFlags flags;
    } cv;
    {
        auto* sub = app.add_subcommand(
            "cbc-verify",
            "verify the cartesian bicategory axioms for a relation backend");
        sub->add_option("--backend", cv.backend, "bicategory backend")
            ->check(CLI::IsMember({"rel", "pow"}));
        sub->add_option("--elements", cv.elements, "atom elements");
        sub->add_flag("--triangles", cv.triangles,
                      "also check both triangle identities");
        add_check_flags(sub, cv.flags, true);
        sub->callback([&] {
            BaseCategory base({{"A", split_csv(cv.elements)}});
            std::vector<Report> reports;
            if (cv.backend == "rel") {
                RelTruncation bb(base);
                reports.push_back(verify_cbc_axioms(bb, bicat_opts(cv.flags)));
                if (cv.triangles) {
                    RDoctrine<RelTruncation> Q = doctrine_of_cbc(bb);
                    reports.push_back(
                        check_triangle_left(Q, adj_opts(cv.flags)));
                    reports.push_back(
                        check_triangle_right(bb, adj_opts(cv.flags)));
                }
            } else {
                PowersetDoctrine P(base);
                BicatOfDoctrine<PowersetDoctrine> bb(P);
                reports.push_back(verify_cbc_axioms(bb, bicat_opts(cv.flags)));
                if (cv.triangles) {
                    reports.push_back(
                        check_triangle_left(P, adj_opts(cv.flags)));
                    reports.push_back(
                        check_triangle_right(bb, adj_opts(cv.flags)));
                }
            }
            rc = emit_reports(reports, cv.flags.format);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
