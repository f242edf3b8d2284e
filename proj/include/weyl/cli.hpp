#pragma once

// Command-line front end. Exit codes: 0 success, 2 parse errors (expressions, argv, JSON
// files), 3 domain errors, 4 inputs outside the certified range, 1 internal failures.
// Output is buffered and written only on success.

#include "weyl/centralizer.hpp"
#include "weyl/certify.hpp"
#include "weyl/errors.hpp"
#include "weyl/expr.hpp"
#include "weyl/serialize.hpp"
#include "weyl/sweep.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace weyl::cli {

inline constexpr int kOk = 0;
inline constexpr int kInternal = 1;
inline constexpr int kParse = 2;
inline constexpr int kDomain = 3;
inline constexpr int kScope = 4;

/// Element text for humans: pure K[H] elements print as the bare polynomial.
inline std::string element_text(const WeylElement& a) {
    if (a.is_zero()) return "0";
    if (a.is_homogeneous() && a.top_degree() == 0) return a.component(0).str();
    return print_canonical(a);
}

inline Json to_json(const Infeasibility& f) {
    Json j{{"s", f.s}, {"reason", f.reason == Infeasibility::Reason::degree ? "degree" : "orbit"}};
    if (f.reason == Infeasibility::Reason::orbit) {
        j["orbit"] = weyl::to_json(f.orbit_base);
        j["position"] = f.position;
        j["residue"] = f.residue;
    }
    return j;
}

inline Json to_json(const SweepCell& c, SweepPattern pattern) {
    Json j{{"index", c.index}, {"p", c.p}};
    if (pattern == SweepPattern::case_iii) {
        j["s"] = c.s;
        j["t"] = c.t;
    } else {
        j["q"] = c.q;
    }
    if (c.status != SweepCell::Status::reduction) {
        j["deg_a"] = c.deg_a;
        j["deg_b"] = c.deg_b;
        j["unknowns"] = c.unknowns;
        j["rank"] = c.rank;
    }
    j["status"] = to_string(c.status);
    if (c.status == SweepCell::Status::solutions) {
        Json w = Json::array();
        for (const auto& r : c.witness) w.push_back(weyl::to_json(r));
        j["nullity"] = c.nullity;
        j["witness"] = w;
        if (c.factored) j["factored"] = Json::array({weyl::to_json(c.factored->first), weyl::to_json(c.factored->second)});
        j["verified"] = c.witness_verified;
    }
    return j;
}

namespace detail {

struct Options {
    bool json = false;
    std::vector<std::string> exprs;
    std::string pattern;
    SweepBounds bounds;
    std::uint64_t seed = 0;
    TameLimits limits;
    std::string auto_file;
};

inline unsigned sweep_workers() {
    if (const char* env = std::getenv("WEYL_SWEEP_WORKERS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return 1;
}

inline void cmd_centralizer(const Options& o, std::ostream& out) {
    const WeylElement u = parse_element(o.exprs.at(0));
    if (u.is_zero()) throw DomainError("centralizer of zero is everything");
    if (!u.is_homogeneous()) throw OutOfScopeError("centralizers are computed for homogeneous elements only");
    const long n = u.top_degree();
    if (n == 0) {
        const std::string marker = centralizer_rational(RatFuncH(u.component(0)));
        if (o.json)
            out << Json{{"n", 0}, {"centralizer", marker}}.dump() << "\n";
        else
            out << "centralizer = " << marker << "\n";
        return;
    }
    const auto [lead, monic] = monic_split(RatFuncH(u.component(n)));
    const CentralizerResult r = centralizer_generator({n, monic});
    const auto power = power_decompose({n, RatFuncH(u.component(n))}, r.v);
    if (!power) throw std::logic_error("input is not a power of its centralizer generator");
    const BElement v = r.v.element();
    if (o.json) {
        Json inf = Json::array();
        for (const auto& f : r.infeasible) inf.push_back(to_json(f));
        out << Json{{"n", n},
                    {"s", r.s},
                    {"beta", weyl::to_json(r.beta)},
                    {"v", weyl::to_json(v)},
                    {"v_text", print_canonical(v)},
                    {"scalar", weyl::to_json(power->scalar)},
                    {"exponent", power->exponent},
                    {"infeasible", inf}}
                   .dump()
            << "\n";
        return;
    }
    out << "n = " << n << "\ns = " << r.s << "\nbeta = " << r.beta.str() << "\nv = " << print_canonical(v)
        << "\nu = " << power->scalar << " * v^" << power->exponent << "\n";
    for (const auto& f : r.infeasible) {
        out << "infeasible s = " << f.s << ": ";
        if (f.reason == Infeasibility::Reason::degree)
            out << "degree of alpha not divisible by " << std::labs(n) / f.s << "\n";
        else
            out << "orbit of " << f.orbit_base << " leaves residue " << f.residue << " at position " << f.position
                << "\n";
    }
}

inline void cmd_sweep(const Options& o, std::ostream& out) {
    const SweepReport rep = impossibility_sweep(parse_pattern(o.pattern), o.bounds, sweep_workers());
    if (o.json) {
        Json cells = Json::array();
        for (const auto& c : rep.cells) cells.push_back(to_json(c, rep.pattern));
        out << Json{{"pattern", to_string(rep.pattern)},
                    {"bounds", {{"p", rep.bounds.p}, {"q", rep.bounds.q}, {"max_coeff_deg", rep.bounds.max_coeff_deg}}},
                    {"cells", cells}}
                   .dump()
            << "\n";
        return;
    }
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& c : rep.cells) {
        ++counts[static_cast<int>(c.status)];
        out << "#" << c.index << " p=" << c.p;
        if (rep.pattern == SweepPattern::case_iii)
            out << " s=" << c.s << " t=" << c.t;
        else
            out << " q=" << c.q;
        if (c.status != SweepCell::Status::reduction) out << " deg_a=" << c.deg_a << " deg_b=" << c.deg_b;
        out << " " << to_string(c.status);
        if (c.status == SweepCell::Status::solutions) out << (c.witness_verified ? " (verified)" : " (UNVERIFIED)");
        out << "\n";
    }
    out << rep.cells.size() << " cells: " << counts[0] << " empty, " << counts[1] << " solutions, " << counts[2]
        << " reduction\n";
}

inline void dispatch(const std::string& cmd, const Options& o, std::ostream& out) {
    auto element = [&](std::size_t i) { return parse_element(o.exprs.at(i)); };
    auto emit = [&](const WeylElement& a) {
        out << (o.json ? weyl::to_json(a).dump() : element_text(a)) << "\n";
    };
    if (cmd == "normalize") {
        emit(element(0));
    } else if (cmd == "commute") {
        emit(commutator(element(0), element(1)));
    } else if (cmd == "mass") {
        const auto m = element(0).mass();
        out << (o.json ? Json{{"mass", m}}.dump() : std::to_string(m)) << "\n";
    } else if (cmd == "components") {
        const WeylElement a = element(0);
        if (o.json) {
            out << weyl::to_json(a).dump() << "\n";
        } else {
            for (const auto& [d, f] : a.components()) out << d << "\t" << f << "\n";
        }
    } else if (cmd == "degree") {
        const Degree d = total_degree(element(0));
        std::ostringstream s;
        s << d;
        out << (o.json ? (d.is_finite() ? Json{{"degree", d.value()}} : Json{{"degree", "-inf"}}).dump() : s.str())
            << "\n";
    } else if (cmd == "centralizer") {
        cmd_centralizer(o, out);
    } else if (cmd == "certify") {
        const AutoWord w = certify_pair(element(0), element(1));
        out << (o.json ? weyl::to_json(w).dump() : to_string(w)) << "\n";
    } else if (cmd == "sweep") {
        cmd_sweep(o, out);
    } else if (cmd == "random-auto") {
        const AutoWord w = random_tame(o.seed, o.limits);
        out << (o.json ? weyl::to_json(w).dump() : to_string(w)) << "\n";
    } else if (cmd == "apply") {
        std::ifstream in(o.auto_file);
        if (!in) throw JsonFormatError("cannot read " + o.auto_file);
        std::stringstream buf;
        buf << in.rdbuf();
        emit(apply_auto(autoword_from_json(parse_json(buf.str())), element(0)));
    } else {
        throw std::logic_error("unhandled subcommand " + cmd);
    }
}

}  // namespace detail

inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    detail::Options o;
    CLI::App app{"Exact arithmetic in the first Weyl algebra", "weyl"};
    app.require_subcommand(1);
    app.add_flag("--json", o.json, "Machine-readable JSON output");

    auto expr_cmd = [&](const char* name, const char* help, int n) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("expr", o.exprs, "Expression(s) in X, Y, H")->required()->expected(n);
        sub->add_flag("--json", o.json, "Machine-readable JSON output");
        return sub;
    };
    expr_cmd("normalize", "Normal form sum f_i(H) v_i", 1);
    expr_cmd("commute", "Commutator [a, b] = ab - ba", 2);
    expr_cmd("mass", "Number of nonzero graded components", 1);
    expr_cmd("components", "Graded components, ascending", 1);
    expr_cmd("degree", "Total degree in X and Y", 1);
    expr_cmd("centralizer", "Centralizer generator of a homogeneous element", 1);
    expr_cmd("certify", "Automorphism tau with tau(Y) = P, tau(X) = Q", 2);

    auto* sweep = app.add_subcommand("sweep", "Exhaustive impossibility sweep");
    sweep->add_option("pattern", o.pattern, "case-ii | case-iii | case-v")->required();
    sweep->add_option("--p", o.bounds.p, "Bound on p");
    sweep->add_option("--q", o.bounds.q, "Bound on q");
    sweep->add_option("--max-coeff-deg", o.bounds.max_coeff_deg, "Bound on coefficient degrees");
    sweep->add_flag("--json", o.json, "Machine-readable JSON output");

    auto* rnd = app.add_subcommand("random-auto", "Seeded random tame automorphism word");
    rnd->add_option("--seed", o.seed, "Generator seed");
    rnd->add_option("--word-len", o.limits.word_len, "Maximum word length");
    rnd->add_option("--max-n", o.limits.max_n, "Maximum triangular exponent");
    rnd->add_option("--coeff-height", o.limits.coeff_height, "Maximum coefficient height");
    rnd->add_flag("--json", o.json, "Machine-readable JSON output");

    auto* apply = app.add_subcommand("apply", "Apply an automorphism word (JSON file) to an element");
    apply->add_option("auto-file", o.auto_file, "AutoWord JSON file")->required();
    apply->add_option("expr", o.exprs, "Expression")->required()->expected(1);
    apply->add_flag("--json", o.json, "Machine-readable JSON output");

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParse;
    }

    std::ostringstream buffer;
    try {
        detail::dispatch(app.get_subcommands().front()->get_name(), o, buffer);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const JsonFormatError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const OutOfScopeError& e) {
        err << "out of scope: " << e.what() << "\n";
        return kScope;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    out << buffer.str();
    return kOk;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace weyl::cli
