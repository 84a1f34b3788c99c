#include "commands.hpp"

#include <chrono>
#include <charconv>
#include <sstream>

#include <CLI11.hpp>

#include "c32/gl2.hpp"
#include "c32/invariants.hpp"
#include "c32/matrix.hpp"
#include "c32/trace_word.hpp"
#include "c32/xi_pipeline.hpp"

namespace c32::cli {

using json = nlohmann::ordered_json;

json RunReport::to_json(bool with_timing) const
{
    json j;
    j["command"] = command;
    j["status"] = pass ? "pass" : "fail";
    j["payload"] = payload;
    j["version"] = kSchemaVersion;
    if (with_timing) {
        j["timing_ms"] = timing_ms;
    }
    return j;
}

std::string RunReport::to_text() const
{
    std::string out = command + ": " + (pass ? "pass" : "fail") + "\n";
    for (const auto& l : lines) {
        out += l + "\n";
    }
    return out;
}

namespace {

unsigned parse_unsigned(std::string_view s)
{
    unsigned v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || end != s.data() + s.size()) {
        throw UsageError("expected a non-negative integer, got '" + std::string(s) + "'");
    }
    return v;
}

json series_json(const TruncatedSeries& s)
{
    json arr = json::array();
    for (const auto& [key, c] : s.coeffs()) {
        arr.push_back({{"i", key.first}, {"j", key.second}, {"coeff", c.to_string()}});
    }
    return arr;
}

json decomposition_json(const Decomposition& d)
{
    json arr = json::array();
    for (const auto& [p, m] : d.multiplicities()) {
        arr.push_back({{"partition", {p.first, p.second}}, {"multiplicity", m}});
    }
    return arr;
}

void append_lines(std::vector<std::string>& lines, const std::string& block)
{
    std::istringstream is(block);
    for (std::string l; std::getline(is, l);) {
        lines.push_back(l);
    }
}

template <typename F>
RunReport timed(const std::string& name, F&& body)
{
    const auto start = std::chrono::steady_clock::now();
    RunReport r;
    r.command = name;
    body(r);
    r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace

std::pair<unsigned, unsigned> parse_pair(const std::string& text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw UsageError("expected 'a,b', got '" + text + "'");
    }
    return {parse_unsigned(std::string_view(text).substr(0, comma)),
            parse_unsigned(std::string_view(text).substr(comma + 1))};
}

RunReport verify_relation(bool generic_x, bool corrupt_xi4)
{
    return timed("verify-relation", [&](RunReport& r) {
        const InvariantContext ctx = generic_x ? InvariantContext::generic() : InvariantContext();
        XiVector xi = published_xi();
        if (corrupt_xi4) {
            xi[4] += Rational(1, 1000);
        }
        const MultiPoly w = build_w(ctx);
        const MultiPoly residual = relation_polynomial(w, build_family(ctx), xi);
        r.pass = residual.is_zero();
        r.payload["x_matrix"] = generic_x ? "generic traceless" : "diagonal traceless";
        r.payload["w_terms"] = w.size();
        r.payload["w_squared_terms"] = (w * w).size();
        r.payload["residual_terms"] = residual.size();
        json xs = json::object();
        for (std::size_t i = 0; i < kFamilySize; ++i) {
            xs[xi_labels()[i]] = xi[i].to_string();
        }
        r.payload["xi"] = xs;
        r.lines.push_back("x: " + r.payload["x_matrix"].get<std::string>());
        r.lines.push_back("terms of w: " + std::to_string(w.size()));
        r.lines.push_back("terms of w^2 - sum xi_i w_i: " + std::to_string(residual.size()));
    });
}

RunReport verify_expansions()
{
    return timed("verify-expansions", [](RunReport& r) {
        const InvariantContext ctx;
        const auto res = verify_trace_expansions(ctx);
        r.pass = res.residual_xxyy.is_zero() && res.residual_xxyyxy.is_zero();
        r.payload["residual_xxyy_terms"] = res.residual_xxyy.size();
        r.payload["residual_xxyyxy_terms"] = res.residual_xxyyxy.size();
        r.lines.push_back("tr(XXYY) residual terms: " + std::to_string(res.residual_xxyy.size()));
        r.lines.push_back("tr(XXYYXY) residual terms: " + std::to_string(res.residual_xxyyxy.size()));
    });
}

RunReport ch_identity()
{
    return timed("ch-identity", [](RunReport& r) {
        const Matrix3 ch = cayley_hamilton_residual(generic_z());
        std::size_t nonzero = 0;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                nonzero += ch(i, j).is_zero() ? 0 : 1;
            }
        }
        const MultiPoly quartic = ch_traceless_identity(generic_traceless_x());
        r.pass = nonzero == 0 && quartic.is_zero();
        r.payload["cayley_hamilton_nonzero_entries"] = nonzero;
        r.payload["traceless_quartic_residual"] = quartic.to_string();
        r.lines.push_back("z^3 - e1 z^2 + e2 z - e3: nonzero entries " + std::to_string(nonzero));
        r.lines.push_back("tr(z^4) - tr(z^2)^2/2 for traceless z: " + quartic.to_string());
    });
}

RunReport hwv(const std::string& degree)
{
    const auto [dx, dy] = parse_pair(degree);
    if (dx + dy == 0 || dx + dy > 24) {
        throw UsageError("total degree must be between 1 and 24");
    }
    return timed("hwv", [&](RunReport& r) {
        const HwvSearch s = hwv_solve(dx, dy);
        bool annihilated = true;
        json basis = json::array();
        for (const auto& b : s.basis) {
            annihilated = annihilated && linearize(b).is_zero();
            basis.push_back(b.to_string());
        }
        json cands = json::array();
        for (const auto& c : s.candidates) {
            cands.push_back(c.to_string());
        }
        r.pass = annihilated;
        r.payload["degree"] = {dx, dy};
        r.payload["candidates"] = cands;
        r.payload["basis"] = basis;
        r.lines.push_back("candidates: " + std::to_string(s.candidates.size()));
        for (std::size_t i = 0; i < s.candidates.size(); ++i) {
            r.lines.push_back("  " + s.candidates[i].to_string() + " -> " + s.images[i].to_string());
        }
        r.lines.push_back("highest weight vectors: " + std::to_string(s.basis.size()));
        for (const auto& b : s.basis) {
            r.lines.push_back("  " + b.to_string());
        }
    });
}

RunReport solve_xi(bool discover)
{
    return timed("solve-xi", [&](RunReport& r) {
        const InvariantContext ctx;
        try {
            const XiPipelineResult res = xi_pipeline(ctx, discover);
            const bool closes = relation_polynomial(ctx, res.xi).is_zero();
            r.pass = closes;
            json xs = json::object();
            for (std::size_t i = 0; i < kFamilySize; ++i) {
                xs[xi_labels()[i]] = res.xi[i].to_string();
            }
            r.payload["xi"] = xs;
            r.payload["relation_vanishes"] = closes;
            r.payload["transcript"] = res.transcript;
            if (discover) {
                r.payload["discovery_equations"] = res.discovery_equations;
                r.payload["discovery_rank"] = res.discovery_rank;
            }
            r.lines = res.transcript;
            r.lines.push_back(std::string("relation vanishes: ") + (closes ? "yes" : "no"));
        } catch (const PipelineError& e) {
            r.pass = false;
            r.payload["error"] = e.what();
            r.payload["step"] = e.step();
            r.lines.push_back(std::string("error: ") + e.what());
        }
    });
}

RunReport hilbert(unsigned max_degree)
{
    return timed("hilbert", [&](RunReport& r) {
        const TruncatedSeries h = c32_series(max_degree);
        const TruncatedSeries f = free_module_series(max_degree);
        r.pass = h == f;
        r.payload["max_degree"] = max_degree;
        r.payload["matches_free_module"] = r.pass;
        r.payload["series"] = series_json(h);
        r.lines.push_back("max degree: " + std::to_string(max_degree));
        r.lines.push_back(std::string("matches free module over S[tr X, tr Y] with basis {1, w}: ")
                          + (r.pass ? "yes" : "no"));
        append_lines(r.lines, h.to_string());
    });
}

RunReport decompose(const std::string& space, const std::string& degree)
{
    std::optional<unsigned> slice;
    std::optional<Partition2> single;
    if (!degree.empty()) {
        if (degree.find(',') != std::string::npos) {
            const auto [a, b] = parse_pair(degree);
            if (a < b) {
                throw UsageError("partition (a,b) needs a >= b");
            }
            single = Partition2(a, b);
        } else {
            slice = parse_unsigned(degree);
        }
    }
    constexpr unsigned kSBound = 12;
    unsigned bound = kSBound;
    if (space != "S") {
        bound = parse_unsigned(std::string_view(space).substr(1));
    }
    if (single) {
        bound = std::max(bound, single->size());
    } else if (slice) {
        bound = std::max(bound, *slice);
    }
    return timed("decompose", [&](RunReport& r) {
        const TruncatedSeries s = space == "S" ? s_algebra_series(bound) : trace_space_series(bound, bound);
        r.payload["space"] = space;
        try {
            Decomposition d = extract_multiplicities(s);
            if (slice) {
                d = d.of_size(*slice);
            }
            r.pass = true;
            if (single) {
                const auto m = d.multiplicity(*single);
                r.payload["partition"] = {single->first, single->second};
                r.payload["multiplicity"] = m;
                r.lines.push_back("m" + single->to_string() + " = " + std::to_string(m));
            } else {
                r.payload["decomposition"] = decomposition_json(d);
                append_lines(r.lines, d.to_string());
            }
        } catch (const std::domain_error& e) {
            r.pass = false;
            r.payload["error"] = e.what();
            r.lines.push_back(std::string("error: ") + e.what());
        }
    });
}

int run(int argc, const char* const* argv, std::string& out, std::string& err)
{
    CLI::App app{"Exact verification of the invariants of two 3x3 matrices", "c32inv"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit a JSON report");

    bool generic_x = false;
    bool corrupt = false;
    auto* rel = app.add_subcommand("verify-relation", "Check the defining relation w^2 = sum xi_i w_i");
    rel->add_flag("--generic-x", generic_x, "Use a generic traceless x instead of a diagonal one");
    rel->add_flag("--corrupt-xi4", corrupt)->group("");

    auto* lem = app.add_subcommand("verify-expansions", "Check the trace expansions of tr(XXYY) and tr(XXYYXY)");
    auto* ch = app.add_subcommand("ch-identity", "Check Cayley-Hamilton and the traceless quartic identity");

    std::string hwv_degree;
    auto* hw = app.add_subcommand("hwv", "Search highest weight vectors among single trace words");
    hw->add_option("--degree", hwv_degree, "Bidegree d1,d2")->required();

    bool discover = false;
    auto* sx = app.add_subcommand("solve-xi", "Recover the relation coefficients by evaluation");
    sx->add_flag("--discover", discover, "Also use every monomial of the generic evaluation");

    unsigned max_degree = kDefaultSeriesBound;
    auto* hs = app.add_subcommand("hilbert", "Expand the Hilbert series of the invariant algebra");
    hs->add_option("--max-degree", max_degree, "Total-degree truncation")->check(CLI::Range(0u, 64u));

    std::string space;
    std::string dec_degree;
    auto* dc = app.add_subcommand("decompose", "GL2-module decomposition of a space of invariants");
    dc->add_option("--space", space, "U2, U3, U4, U6 or S")->required()->check(CLI::IsMember({"U2", "U3", "U4", "U6", "S"}));
    dc->add_option("--degree", dec_degree, "Total degree k or partition a,b");

    std::ostringstream cli_out;
    std::ostringstream cli_err;
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, cli_out, cli_err);
        out = cli_out.str();
        err = cli_err.str();
        return code == 0 ? 0 : 2;
    }

    RunReport report;
    try {
        if (*rel) {
            report = verify_relation(generic_x, corrupt);
        } else if (*lem) {
            report = verify_expansions();
        } else if (*ch) {
            report = ch_identity();
        } else if (*hw) {
            report = hwv(hwv_degree);
        } else if (*sx) {
            report = solve_xi(discover);
        } else if (*hs) {
            report = hilbert(max_degree);
        } else if (*dc) {
            report = decompose(space, dec_degree);
        }
    } catch (const UsageError& e) {
        err = std::string("error: ") + e.what() + "\n";
        return 2;
    }
    out = as_json ? report.to_json().dump(2) + "\n" : report.to_text();
    return report.pass ? 0 : 1;
}

}  // namespace c32::cli
