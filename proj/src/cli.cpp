#include "sumsynth/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "sumsynth/factsum.hpp"
#include "sumsynth/faulhaber.hpp"
#include "sumsynth/oracle.hpp"
#include "sumsynth/parse.hpp"
#include "sumsynth/polysum.hpp"
#include "sumsynth/weighted.hpp"

namespace sumsynth {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

UniPoly parse_unipoly(const std::string& text, const std::string& what) {
    BiPoly p = parse_poly(text);
    if (p.degree_y().value_or(0) > 0)
        throw UsageError(what + ": factorial terms (n!) are not allowed here");
    return p.to_unipoly();
}

WeightSpec parse_weights(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw UsageError("--weights expects const:<c>, poly:<expr> or periodic:<c1,c2,...>");
    std::string kind = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    auto parse_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) throw UsageError("--weights: expected an integer, got '" + s + "'");
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw UsageError("--weights: expected an integer, got '" + s + "'");
        return BigInt(s);
    };
    if (kind == "const") {
        return WeightSpec{ConstantWeight{parse_int(rest)}};
    }
    if (kind == "poly") {
        UniPoly w = parse_unipoly(rest, "--weights poly");
        if (!w.has_integer_coeffs())
            throw UsageError("--weights poly: coefficients must be integers");
        return WeightSpec{PolynomialWeight{std::move(w)}};
    }
    if (kind == "periodic") {
        std::vector<BigInt> pattern;
        std::size_t start = 0;
        while (start <= rest.size()) {
            std::size_t comma = rest.find(',', start);
            std::string item = rest.substr(start, comma == std::string::npos ? std::string::npos
                                                                             : comma - start);
            if (item.empty()) throw UsageError("--weights periodic: empty pattern entry");
            pattern.push_back(parse_int(item));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (pattern.empty()) throw UsageError("--weights periodic: empty pattern");
        return WeightSpec{PeriodicWeight{std::move(pattern)}};
    }
    throw UsageError("--weights: unknown family '" + kind + "'");
}

std::string reject_reason_text(const MembershipVerdict& v, const UniPoly& g) {
    if (std::holds_alternative<NonIntegralDelta>(*v.reject_reason)) {
        return "non-integral-delta: delta = " + format_canonical(delta(g));
    }
    const auto& bc = std::get<BaseCaseMismatch>(*v.reject_reason);
    return "base-case-mismatch: g(1)=" + bc.g_at_1.str() + " f(1)=" + bc.f_at_1.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact symbolic summation: closed forms for f(1)+...+f(n)"};
    app.require_subcommand(1);

    bool emit_json = false;

    long fh_k = 0;
    auto* fh = app.add_subcommand("faulhaber", "Closed form for 1^k + ... + n^k");
    fh->add_option("k", fh_k, "exponent k >= 1")->required()->check(CLI::PositiveNumber);
    fh->add_flag("--json", emit_json, "emit one structured JSON record");

    std::string synth_expr;
    auto* synth = app.add_subcommand("synth", "Closed form for a polynomial summand");
    synth->add_option("expr", synth_expr, "summand f(n), no n!")->required();
    synth->add_flag("--json", emit_json, "emit one structured JSON record");

    std::string sf_expr;
    long sf_dx = -1, sf_dy = -1;
    auto* sf = app.add_subcommand("synth-fact",
                                  "Closed form (or certificate) for a summand in n and n!");
    sf->add_option("expr", sf_expr, "summand p(n, n!)")->required();
    sf->add_option("--deg-x", sf_dx, "ansatz degree bound in n")->check(CLI::NonNegativeNumber);
    sf->add_option("--deg-y", sf_dy, "ansatz degree bound in n!")->check(CLI::NonNegativeNumber);
    sf->add_flag("--json", emit_json, "emit one structured JSON record");

    std::string member_expr;
    auto* member = app.add_subcommand("member", "Is g the running sum of an integer polynomial?");
    member->add_option("expr", member_expr, "candidate g(n), no n!")->required();
    member->add_flag("--json", emit_json, "emit one structured JSON record");

    std::string w_expr, w_spec;
    auto* weighted = app.add_subcommand("weighted", "Closed form for a weighted sum");
    weighted->add_option("expr", w_expr, "summand f(n), no n!")->required();
    weighted->add_option("--weights", w_spec, "const:<c> | poly:<expr> | periodic:<c1,c2,...>")
        ->required();
    weighted->add_flag("--json", emit_json, "emit one structured JSON record");

    std::string v_f, v_g;
    long v_nmax = 0;
    auto* verify = app.add_subcommand("verify", "Check a closed form against the brute-force sum");
    verify->add_option("f-expr", v_f, "summand")->required();
    verify->add_option("g-expr", v_g, "candidate closed form")->required();
    verify->add_option("--n-max", v_nmax, "verification range")->check(CLI::PositiveNumber);
    verify->add_flag("--json", emit_json, "emit one structured JSON record");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends.
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    json record;
    int exit_code = 0;
    std::string plain;

    try {
        if (*fh) {
            record["command"] = "faulhaber";
            record["input"] = std::to_string(fh_k);
            plain = format_canonical(faulhaber_row(static_cast<int>(fh_k)).poly());
            record["status"] = "ok";
            record["result"] = plain;
        } else if (*synth) {
            record["command"] = "synth";
            record["input"] = synth_expr;
            UniPoly f = parse_unipoly(synth_expr, "synth");
            plain = format_canonical(synth_poly_sum(f));
            record["status"] = "ok";
            record["result"] = plain;
        } else if (*sf) {
            record["command"] = "synth-fact";
            record["input"] = sf_expr;
            BiPoly p = parse_poly(sf_expr);
            DegreeBounds bounds = default_bounds(p);
            if (sf_dx >= 0) bounds.deg_x = static_cast<int>(sf_dx);
            if (sf_dy >= 0) bounds.deg_y = static_cast<int>(sf_dy);
            SynthesisResult res = synth_fact_sum(p, bounds);
            record["bounds"] = {{"deg_x", bounds.deg_x}, {"deg_y", bounds.deg_y}};
            if (res.solved()) {
                plain = format_canonical(*res.closed_form);
                record["status"] = "ok";
                record["result"] = plain;
                record["verified_upto"] = res.verified_upto;
                record["summand_in_PFZ"] = p.has_integer_coeffs();
            } else {
                plain = "no-solution-within-bounds deg_x=" + std::to_string(bounds.deg_x) +
                        " deg_y=" + std::to_string(bounds.deg_y);
                record["status"] = "no-solution";
                record["result"] = plain;
                exit_code = 1;
            }
        } else if (*member) {
            record["command"] = "member";
            record["input"] = member_expr;
            UniPoly g = parse_unipoly(member_expr, "member");
            MembershipVerdict v = membership_SZ(g);
            if (v.accepted()) {
                plain = "member f = " + format_canonical(*v.witness_f);
                record["status"] = "ok";
                record["result"] = format_canonical(*v.witness_f);
            } else {
                plain = "not-member: " + reject_reason_text(v, g);
                record["status"] = "not-member";
                record["result"] = reject_reason_text(v, g);
                exit_code = 1;
            }
        } else if (*weighted) {
            record["command"] = "weighted";
            record["input"] = w_expr;
            UniPoly f = parse_unipoly(w_expr, "weighted");
            WeightSpec alpha = parse_weights(w_spec);
            if (const auto* c = std::get_if<ConstantWeight>(&alpha.variant)) {
                plain = format_canonical(Rational(c->c) * synth_poly_sum(f));
                record["status"] = "ok";
                record["result"] = plain;
            } else if (const auto* pw = std::get_if<PolynomialWeight>(&alpha.variant)) {
                plain = format_canonical(synth_weighted_polynomial(f, pw->w));
                record["status"] = "ok";
                record["result"] = plain;
            } else {
                const auto& pattern = std::get<PeriodicWeight>(alpha.variant).pattern;
                ResidueClosedForms forms = synth_weighted_periodic(f, pattern);
                json list = json::array();
                for (int r = 1; r <= forms.period; ++r) {
                    std::string line = format_canonical(forms.forms[static_cast<std::size_t>(r - 1)]);
                    if (!plain.empty()) plain += "\n";
                    plain += "r=" + std::to_string(r) + ": " + line;
                    list.push_back({{"r", r}, {"expr", line}});
                }
                record["status"] = "ok";
                record["result"] = list;
            }
        } else if (*verify) {
            record["command"] = "verify";
            record["input"] = v_f + " ; " + v_g;
            BiPoly p = parse_poly(v_f);
            BiPoly q = parse_poly(v_g);
            unsigned long n_max =
                v_nmax > 0 ? static_cast<unsigned long>(v_nmax) : default_verify_bound(p, q);
            VerificationReport report = verify_closed_form(p, q, n_max);
            if (report.all_match) {
                plain = "ok upto " + std::to_string(n_max);
                record["status"] = "ok";
                record["result"] = plain;
            } else {
                plain = "mismatch at n=" + std::to_string(report.mismatch_n) + " expected " +
                        report.expected.str() + " got " + report.got.str();
                record["status"] = "mismatch";
                record["result"] = plain;
                exit_code = 1;
            }
            record["verified_upto"] = report.all_match ? n_max : report.mismatch_n - 1;
        }
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return 2;
    }

    if (emit_json)
        out << record.dump() << "\n";
    else
        out << plain << "\n";
    return exit_code;
}

}  // namespace sumsynth
