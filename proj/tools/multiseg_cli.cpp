// multiseg: a calculator for the multisegment removal calculus.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "multiseg/finechain.hpp"
#include "multiseg/harness.hpp"
#include "multiseg/json_io.hpp"
#include "multiseg/minimal.hpp"
#include "multiseg/removal.hpp"
#include "multiseg/render.hpp"
#include "multiseg/twoseg.hpp"
#include "multiseg/zpos.hpp"

namespace {

using multiseg::Multisegment;
using multiseg::RemovalOutcome;
using multiseg::Segment;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kCounterexample = 2;
constexpr int kUsage = 64;

json segment_list_json(const std::vector<Segment>& segs) {
    json arr = json::array();
    for (const Segment& s : segs) arr.push_back(multiseg::to_json(s));
    return arr;
}

int run_remove(const std::string& delta, const std::string& mult, const std::string& h_text,
               bool trace, bool as_json) {
    Multisegment h = multiseg::parse_multisegment(h_text);
    Multisegment m = delta.empty()
                         ? multiseg::parse_multisegment(mult)
                         : Multisegment({multiseg::parse_segment(delta)});

    json steps = json::array();
    RemovalOutcome state{h};
    for (const Segment& d : multiseg::ascending_order(m)) {
        json step;
        step["delta"] = multiseg::to_json(d);
        step["before"] = multiseg::to_json(state);
        if (!state.is_infinity() && multiseg::admissible_seg(d, state.value())) {
            multiseg::RemovalSequence seq = multiseg::removal_sequence(d, state.value());
            step["sequence"] = segment_list_json(seq.removed);
            json truncs = json::array();
            for (const auto& t : seq.truncations)
                truncs.push_back(t ? multiseg::to_json(*t) : json(nullptr));
            step["truncations"] = truncs;
        }
        state = multiseg::r_seg(d, state);
        step["after"] = multiseg::to_json(state);
        steps.push_back(step);
        if (trace && !as_json) std::cout << step.dump() << "\n";
    }

    if (as_json) {
        json out;
        out["m"] = multiseg::to_json(m);
        out["h"] = multiseg::to_json(h);
        if (trace) out["steps"] = steps;
        out["outcome"] = multiseg::to_json(state);
        std::cout << out.dump(2) << "\n";
    } else {
        if (trace) {
            // step records already printed
        } else {
            for (const auto& step : steps) {
                if (!step.contains("sequence")) continue;
                std::cout << "remove " << step["delta"].dump()
                          << ": sequence " << step["sequence"].dump() << ", truncations "
                          << step["truncations"].dump() << "\n";
            }
        }
        std::cout << multiseg::to_string(state) << "\n";
    }
    return state.is_infinity() && !as_json ? kDomainError : kOk;
}

int run_chain(const std::string& n_text, const std::string& h_text,
              const std::string& compare_text, bool render, bool as_json) {
    Multisegment h = multiseg::parse_multisegment(h_text);
    Multisegment n = multiseg::parse_multisegment(n_text);
    multiseg::FineChain chain = multiseg::fine_chain(n, h);

    if (!compare_text.empty()) {
        Multisegment np = multiseg::parse_multisegment(compare_text);
        multiseg::PartialCmp cmp = multiseg::fc_compare(n, np, h);
        bool coincide = multiseg::chains_coincide(n, np, h);
        if (as_json) {
            json out;
            out["n"] = multiseg::to_json(n);
            out["n'"] = multiseg::to_json(np);
            out["h"] = multiseg::to_json(h);
            out["fc_compare"] = multiseg::to_string(cmp);
            out["coincide"] = coincide;
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "fc_compare: " << multiseg::to_string(cmp)
                      << (coincide ? " (chains coincide)" : "") << "\n";
        }
        return kOk;
    }

    if (as_json) {
        json out;
        out["n"] = multiseg::to_json(n);
        out["h"] = multiseg::to_json(h);
        json terms = json::array();
        for (const Multisegment& t : chain.terms) terms.push_back(multiseg::to_json(t));
        out["terms"] = terms;
        out["points"] = chain.points;
        std::cout << out.dump(2) << "\n";
        return kOk;
    }
    for (std::size_t i = 0; i < chain.length(); ++i) {
        std::cout << "round " << i << " at point " << chain.points[i] << ": fs = "
                  << multiseg::to_string(chain.terms[i]) << "\n";
        if (render) {
            std::vector<multiseg::DiagramMark> marks;
            for (const Segment& s : chain.terms[i].segments())
                marks.push_back({s, {chain.points[i]}, "removed"});
            std::cout << multiseg::render_diagram(chain.states[i].second, marks);
        }
    }
    return kOk;
}

int run_zpos(const std::string& op, const std::string& m1_text, const std::string& m2_text,
             bool as_json) {
    Multisegment m1 = multiseg::parse_multisegment(m1_text);
    json out;
    if (op == "successors") {
        std::vector<Multisegment> succ = multiseg::iu_successors(m1);
        if (as_json) {
            json arr = json::array();
            for (const Multisegment& s : succ) arr.push_back(multiseg::to_json(s));
            out["successors"] = arr;
            std::cout << out.dump(2) << "\n";
        } else {
            for (const Multisegment& s : succ) std::cout << multiseg::to_string(s) << "\n";
        }
        return kOk;
    }
    Multisegment m2 = multiseg::parse_multisegment(m2_text);
    if (op == "leq") {
        bool leq = multiseg::leq_Z(m1, m2);
        if (as_json) {
            out["leq_Z"] = leq;
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << (leq ? "true" : "false") << "\n";
        }
        return kOk;
    }
    // interval
    std::vector<Multisegment> members = multiseg::interval_Z(m1, m2);
    if (as_json) {
        json arr = json::array();
        for (const Multisegment& m : members) arr.push_back(multiseg::to_json(m));
        out["interval"] = arr;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const Multisegment& m : members) std::cout << multiseg::to_string(m) << "\n";
    }
    return kOk;
}

int run_minimal(const std::string& n_text, const std::string& h_text, bool trace,
                bool as_json) {
    Multisegment h = multiseg::parse_multisegment(h_text);
    Multisegment n = multiseg::parse_multisegment(n_text);
    if (multiseg::r_mult(n, h).is_infinity()) {
        std::cerr << "error: " << multiseg::to_string(n) << " is not admissible to "
                  << multiseg::to_string(h) << "\n";
        return kDomainError;
    }
    json steps = json::array();
    Multisegment cur = n;
    while (auto next = multiseg::descend_step(cur, h)) {
        if (trace && !as_json)
            std::cout << multiseg::to_string(cur) << " -> " << multiseg::to_string(*next)
                      << "\n";
        steps.push_back(multiseg::to_json(*next));
        cur = *next;
    }
    if (as_json) {
        json out;
        out["n"] = multiseg::to_json(n);
        out["h"] = multiseg::to_json(h);
        if (trace) out["descent"] = steps;
        out["minimal"] = multiseg::to_json(cur);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << multiseg::to_string(cur) << "\n";
    }
    return kOk;
}

int run_fiber(const std::string& h_text, const std::string& p_text, bool as_json) {
    Multisegment h = multiseg::parse_multisegment(h_text);
    RemovalOutcome p = p_text == "infinity"
                           ? RemovalOutcome::infinity()
                           : RemovalOutcome(multiseg::parse_multisegment(p_text));
    multiseg::FiberReport report = multiseg::enumerate_fiber(h, p);
    json out;
    out["h"] = multiseg::to_json(report.base);
    out["target"] = multiseg::to_json(report.target);
    json members = json::array();
    for (const Multisegment& m : report.members) members.push_back(multiseg::to_json(m));
    out["members"] = members;
    json edges = json::array();
    for (const auto& [upper, lower] : report.hasse_edges)
        edges.push_back(json{{"upper", multiseg::to_json(report.members[upper])},
                             {"lower", multiseg::to_json(report.members[lower])}});
    out["hasse_edges"] = edges;
    json minimal = json::array(), maximal = json::array();
    for (std::size_t i : report.minimal_elements)
        minimal.push_back(multiseg::to_json(report.members[i]));
    for (std::size_t i : report.maximal_elements)
        maximal.push_back(multiseg::to_json(report.members[i]));
    out["minimal_elements"] = minimal;
    out["maximal_elements"] = maximal;
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << report.members.size() << " members, " << report.minimal_elements.size()
                  << " minimal, " << report.maximal_elements.size() << " maximal\n";
        for (const Multisegment& m : report.members) {
            std::cout << "  " << multiseg::to_string(m);
            bool is_min = false, is_max = false;
            for (std::size_t i : report.minimal_elements) is_min |= report.members[i] == m;
            for (std::size_t i : report.maximal_elements) is_max |= report.members[i] == m;
            if (is_min) std::cout << "  [minimal]";
            if (is_max) std::cout << "  [maximal]";
            std::cout << "\n";
        }
    }
    return kOk;
}

int run_minimizable(const std::string& n_text, const std::string& h_text, bool as_json) {
    Multisegment h = multiseg::parse_multisegment(h_text);
    Multisegment n = multiseg::parse_multisegment(n_text);
    std::optional<std::size_t> idx = multiseg::chain_minimizable(n, h);
    if (as_json) {
        json out;
        out["n"] = multiseg::to_json(n);
        out["h"] = multiseg::to_json(h);
        out["minimizable"] = idx.has_value();
        if (idx) out["chain_index"] = *idx;
        std::cout << out.dump(2) << "\n";
    } else if (idx) {
        std::cout << "locally minimizable at chain index " << *idx << "\n";
    } else {
        std::cout << "not minimizable (fiber minimum)\n";
    }
    return kOk;
}

int run_twoseg(const std::string& d_text, const std::string& dp_text,
               const std::string& h_text, bool as_json) {
    Segment d = multiseg::parse_segment(d_text);
    Segment dp = multiseg::parse_segment(dp_text);
    Multisegment h = multiseg::parse_multisegment(h_text);
    bool no = multiseg::non_overlapping(d, dp, h);
    bool ep = multiseg::eta_preserved(d, dp, h);
    bool is = multiseg::intermediate_segment(d, dp, h);
    multiseg::EtaVector before = multiseg::eta(dp, h);
    multiseg::EtaVector after = multiseg::eta(dp, multiseg::r_seg(d, h).value());
    json out;
    out["delta"] = multiseg::to_json(d);
    out["delta'"] = multiseg::to_json(dp);
    out["h"] = multiseg::to_json(h);
    out["non_overlapping"] = no;
    out["eta_preserved"] = ep;
    out["intermediate_segment"] = is;
    out["eta_before"] = before.values;
    out["eta_after"] = after.values;
    bool agree = (no == ep && ep == is);
    out["agreement"] = agree;
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "non_overlapping:      " << (no ? "true" : "false") << "\n"
                  << "eta_preserved:        " << (ep ? "true" : "false") << "\n"
                  << "intermediate_segment: " << (is ? "true" : "false") << "\n";
        if (!agree) std::cout << "DISAGREEMENT: " << out.dump() << "\n";
    }
    return agree ? kOk : kCounterexample;
}

int run_check(const std::string& property, const std::string& window_text, int points,
              std::optional<std::uint64_t> seed, std::uint64_t budget, std::uint64_t samples,
              unsigned workers) {
    auto colon = window_text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("window must be A:B, got " + window_text);
    multiseg::Window w{std::stoi(window_text.substr(0, colon)),
                       std::stoi(window_text.substr(colon + 1))};
    multiseg::VerifyResult res =
        multiseg::verify(property, w, points, seed, budget, samples, workers);
    std::cout << res.to_json().dump(2) << "\n";
    return res.passed() ? kOk : kCounterexample;
}

int run_render(const std::string& h_text, const std::string& marks_text) {
    Multisegment h = multiseg::parse_multisegment(h_text);
    std::vector<multiseg::DiagramMark> marks;
    if (!marks_text.empty()) {
        json j = json::parse(marks_text);
        for (const auto& e : j) {
            multiseg::DiagramMark mark;
            mark.segment = multiseg::segment_from_json(e.at("segment"));
            mark.points = e.at("points").get<std::vector<int>>();
            mark.tag = e.value("tag", "removed");
            marks.push_back(std::move(mark));
        }
    }
    std::cout << multiseg::render_diagram(h, marks);
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiseg: removal processes, fine chains, Zelevinsky-order search,\n"
                 "and exhaustive verification over bounded multisegment spaces"};
    app.require_subcommand(1);

    bool as_json = false;

    // remove
    auto* remove = app.add_subcommand("remove", "run the removal process r(Δ,𝔥) or r(𝔪,𝔥)");
    std::string delta, mult, h_text;
    bool trace = false;
    remove->add_option("--delta", delta, "segment [a,b]");
    remove->add_option("--m", mult, "multisegment to remove");
    remove->add_option("--h", h_text, "base multisegment 𝔥")->required();
    remove->add_flag("--trace", trace, "emit each removal step as a JSON record");
    remove->add_flag("--json", as_json, "JSON output");

    // chain
    auto* chain = app.add_subcommand("chain", "fine chain for (𝔫,𝔥)");
    std::string n_text, compare_text;
    bool render_rounds = false;
    chain->add_option("--n", n_text, "multisegment 𝔫")->required();
    chain->add_option("--h", h_text, "multisegment 𝔥")->required();
    chain->add_option("--compare", compare_text, "second multisegment for fc_compare");
    chain->add_flag("--render", render_rounds, "diagram per chain round");
    chain->add_flag("--json", as_json, "JSON output");

    // zpos
    auto* zpos = app.add_subcommand("zpos", "Zelevinsky order queries");
    std::string zop, m1_text, m2_text;
    zpos->add_option("op", zop, "leq | interval | successors")
        ->required()
        ->check(CLI::IsMember({"leq", "interval", "successors"}));
    zpos->add_option("--m1", m1_text, "first multisegment (lower for leq/interval)")
        ->required();
    zpos->add_option("--m2", m2_text, "second multisegment (upper)");
    zpos->add_flag("--json", as_json, "JSON output");

    // minimal
    auto* minimal = app.add_subcommand("minimal", "unique minimal element of the fiber of 𝔫");
    minimal->add_option("--n", n_text, "multisegment 𝔫")->required();
    minimal->add_option("--h", h_text, "multisegment 𝔥")->required();
    minimal->add_flag("--trace", trace, "print each descent step");
    minimal->add_flag("--json", as_json, "JSON output");

    // fiber
    auto* fiber = app.add_subcommand("fiber", "enumerate S′(𝔥,𝔭) with Hasse structure");
    std::string p_text;
    fiber->add_option("--h", h_text, "multisegment 𝔥")->required();
    fiber->add_option("--p", p_text, "target multisegment 𝔭 (JSON list)")->required();
    fiber->add_flag("--json", as_json, "JSON output");

    // minimizable
    auto* minimizable =
        app.add_subcommand("minimizable", "first locally minimizable fine-chain state");
    minimizable->add_option("--n", n_text, "multisegment 𝔫")->required();
    minimizable->add_option("--h", h_text, "multisegment 𝔥")->required();
    minimizable->add_flag("--json", as_json, "JSON output");

    // twoseg
    auto* twoseg = app.add_subcommand("twoseg", "two-segment minimality criteria");
    std::string dp_text;
    twoseg->add_option("--delta", delta, "segment Δ")->required();
    twoseg->add_option("--delta2", dp_text, "segment Δ′ (linked, Δ < Δ′)")->required();
    twoseg->add_option("--h", h_text, "multisegment 𝔥")->required();
    twoseg->add_flag("--json", as_json, "JSON output");

    // check
    auto* check = app.add_subcommand("check", "verify a registered property over a window");
    std::string property, window_text = "0:3";
    int points = 5;
    std::uint64_t seed_value = 0;
    bool seed_set = false;
    std::uint64_t budget = multiseg::kDefaultBudget;
    std::uint64_t samples = multiseg::kDefaultSamples;
    unsigned workers = 0;
    check->add_option("property", property, "property id (see --list)");
    bool list_props = false;
    check->add_flag("--list", list_props, "list registered property ids");
    check->add_option("--window", window_text, "exponent window A:B");
    check->add_option("--points", points, "maximum support points");
    check->add_option("--seed", seed_value, "sampling seed")->each([&](const std::string&) {
        seed_set = true;
    });
    check->add_option("--budget", budget, "exhaustiveness ceiling (instances)");
    check->add_option("--samples", samples, "sample count when not exhaustive");
    check->add_option("--workers", workers, "worker threads (0 = hardware)");

    // render
    auto* render = app.add_subcommand("render", "dot-style text diagram of a multisegment");
    std::string marks_text;
    render->add_option("--h", h_text, "multisegment")->required();
    render->add_option("--marks", marks_text,
                       "JSON list of {segment, points, tag} marker records");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (remove->parsed()) {
            if (delta.empty() == mult.empty()) {
                std::cerr << "error: give exactly one of --delta / --m\n";
                return kUsage;
            }
            return run_remove(delta, mult, h_text, trace, as_json);
        }
        if (chain->parsed()) return run_chain(n_text, h_text, compare_text, render_rounds, as_json);
        if (zpos->parsed()) {
            if (zop != "successors" && m2_text.empty()) {
                std::cerr << "error: " << zop << " needs --m2\n";
                return kUsage;
            }
            return run_zpos(zop, m1_text, m2_text, as_json);
        }
        if (minimal->parsed()) return run_minimal(n_text, h_text, trace, as_json);
        if (fiber->parsed()) return run_fiber(h_text, p_text, as_json);
        if (minimizable->parsed()) return run_minimizable(n_text, h_text, as_json);
        if (twoseg->parsed()) return run_twoseg(delta, dp_text, h_text, as_json);
        if (check->parsed()) {
            if (list_props) {
                for (const std::string& id : multiseg::registered_properties())
                    std::cout << id << "\n";
                return kOk;
            }
            if (property.empty()) {
                std::cerr << "error: property id required (or --list)\n";
                return kUsage;
            }
            if (const char* env = std::getenv("MULTISEG_BUDGET"); env && *env && !check->count("--budget"))
                budget = std::strtoull(env, nullptr, 10);
            return run_check(property, window_text, points,
                             seed_set ? std::optional<std::uint64_t>(seed_value) : std::nullopt,
                             budget, samples, workers);
        }
        if (render->parsed()) return run_render(h_text, marks_text);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomainError;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomainError;
    }
    return kUsage;
}
