// Command-line front end: exact Nuij-sequence membership, universal
// determinantal representations via special Toeplitz matrices, pencil
// root trajectories.
//
// Exit codes: 0 affirmative, 1 negative/rejection, 2 usage or input
// error. Results go to stdout (one JSON document or one CSV stream);
// diagnostics go to stderr.

#include <exception>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "nuij/serde.hpp"
#include "nuij/sturm.hpp"
#include "nuij/toeplitz.hpp"

namespace {

using nuij::json;
using nuij::NuijCandidate;
using nuij::Rational;

void emit(const json& doc) { std::cout << doc.dump() << "\n"; }

NuijCandidate parse_seq(const std::string& text) {
    return nuij::nuij_candidate_from_json(json::parse(text));
}

std::vector<Rational> parse_roots(const std::string& text) {
    return json::parse(text).get<std::vector<Rational>>();
}

int run_check_nuij(const std::string& seq) {
    nuij::MembershipReport report = nuij::check_membership(parse_seq(seq));
    emit(report);
    return report.member ? 0 : 1;
}

int run_from_toeplitz(const std::string& alpha, const std::string& beta, int d) {
    emit(nuij::udr_sequence(nuij::QuadExt(Rational::parse(alpha)),
                            nuij::QuadExt(Rational::parse(beta)), d));
    return 0;
}

int run_check_udr(const std::string& seq) {
    nuij::RecoverResult r = nuij::recover_udr(parse_seq(seq));
    if (const auto* witness = std::get_if<nuij::UDRWitness>(&r)) {
        emit(*witness);
        return 0;
    }
    emit(std::get<nuij::UDRRejection>(r));
    return 1;
}

int run_compose(const std::vector<std::string>& seqs) {
    std::vector<NuijCandidate> parsed;
    parsed.reserve(seqs.size());
    for (const std::string& s : seqs)
        parsed.push_back(parse_seq(s));
    emit(nuij::iterate_compose(parsed));
    return 0;
}

int run_verify_detrep(const std::string& roots, const std::string& alpha,
                      const std::string& beta) {
    const std::vector<Rational> lambdas = parse_roots(roots);
    const Rational a = Rational::parse(alpha), b = Rational::parse(beta);
    nuij::BiPoly pencil = nuij::detrep_bipoly(lambdas, a, b);
    const bool equal = nuij::verify_udr(lambdas, a, b);
    emit(json{{"equal", equal}, {"pencil", pencil}});
    return equal ? 0 : 1;
}

int run_verify_shift(const std::string& seq) {
    const bool equal = nuij::verify_shift_identity(parse_seq(seq));
    emit(json{{"equal", equal}});
    return equal ? 0 : 1;
}

int run_viete(const std::string& roots) {
    emit(json(nuij::viete(parse_roots(roots))));
    return 0;
}

int run_pencil_roots(const std::string& roots, const std::string& seq,
                     const std::string& s_min, const std::string& s_max, int steps,
                     const std::string& width) {
    const NuijCandidate a = parse_seq(seq);
    const nuij::HyperbolicPoly p =
        nuij::HyperbolicPoly::from_negated_roots(parse_roots(roots));
    const nuij::Pencil pencil = nuij::build_pencil(p, a);
    const Rational lo = Rational::parse(s_min), hi = Rational::parse(s_max);
    const Rational w = Rational::parse(width);
    if (steps < 1)
        throw std::invalid_argument("pencil-roots: steps must be >= 1");
    if (hi < lo)
        throw std::invalid_argument("pencil-roots: s-max must be >= s-min");

    std::cout << "s,root_index,interval_lo,interval_hi,multiplicity\n";
    for (int j = 0; j < steps; ++j) {
        Rational s = lo;
        if (steps > 1)
            s = lo + Rational(j) * (hi - lo) / Rational(steps - 1);
        nuij::RootIsolation iso =
            nuij::isolate_and_refine_roots(nuij::pencil_section(pencil, s), w);
        for (std::size_t idx = 0; idx < iso.intervals.size(); ++idx) {
            const nuij::RootInterval& iv = iso.intervals[idx];
            std::cout << s.str() << "," << idx << "," << iv.lo.str() << ","
                      << iv.hi.str() << "," << iv.multiplicity << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for Nuij pencils of hyperbolic polynomials"};
    app.require_subcommand(1);

    std::string seq, alpha, beta, roots, s_min = "-5", s_max = "5", width = "1/1000";
    std::vector<std::string> seq_list;
    int d = 1, steps = 11;

    CLI::App* check_nuij =
        app.add_subcommand("check-nuij", "Decide Nuij-sequence membership");
    check_nuij->add_option("--seq", seq, "candidate as {\"d\":int,\"a\":[\"p/q\",...]}")
        ->required();

    CLI::App* from_toeplitz = app.add_subcommand(
        "from-toeplitz", "Sequence a_i = t_{alpha,beta}(i)/i! of a special Toeplitz matrix");
    from_toeplitz->add_option("--alpha", alpha, "diagonal entry (rational)")->required();
    from_toeplitz->add_option("--beta", beta, "off-diagonal entry (rational)")->required();
    from_toeplitz->add_option("--d", d, "matrix size")->required();

    CLI::App* check_udr = app.add_subcommand(
        "check-udr", "Recover the universal determinantal representation, if any");
    check_udr->add_option("--seq", seq, "candidate sequence")->required();

    CLI::App* compose_cmd =
        app.add_subcommand("compose", "Compose sequences left to right");
    compose_cmd->add_option("--seq", seq_list, "sequence (repeatable)")->required();

    CLI::App* verify_detrep = app.add_subcommand(
        "verify-detrep", "Check det(zI+D+sT) against the pencil, symbolically");
    verify_detrep->add_option("--roots", roots, "negated roots of p as [\"p/q\",...]")
        ->required();
    verify_detrep->add_option("--alpha", alpha, "diagonal entry (rational)")->required();
    verify_detrep->add_option("--beta", beta, "off-diagonal entry (rational)")->required();

    CLI::App* verify_shift =
        app.add_subcommand("verify-shift", "Check T_a((z+w)^d) = q_a(z+w)");
    verify_shift->add_option("--seq", seq, "candidate sequence")->required();

    CLI::App* pencil_roots = app.add_subcommand(
        "pencil-roots", "Root trajectories of a pencil section over an s grid (CSV)");
    pencil_roots->add_option("--roots", roots, "negated roots of p")->required();
    pencil_roots->add_option("--seq", seq, "candidate sequence")->required();
    pencil_roots->add_option("--s-min", s_min, "grid start (rational)");
    pencil_roots->add_option("--s-max", s_max, "grid end (rational)");
    pencil_roots->add_option("--steps", steps, "grid point count");
    pencil_roots->add_option("--width", width, "maximum isolation interval width");

    CLI::App* viete_cmd = app.add_subcommand(
        "viete", "Elementary symmetric coefficients of prod (z + x_i)");
    viete_cmd->add_option("--roots", roots, "root list as [\"p/q\",...]")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (check_nuij->parsed())
            return run_check_nuij(seq);
        if (from_toeplitz->parsed())
            return run_from_toeplitz(alpha, beta, d);
        if (check_udr->parsed())
            return run_check_udr(seq);
        if (compose_cmd->parsed())
            return run_compose(seq_list);
        if (verify_detrep->parsed())
            return run_verify_detrep(roots, alpha, beta);
        if (verify_shift->parsed())
            return run_verify_shift(seq);
        if (pencil_roots->parsed())
            return run_pencil_roots(roots, seq, s_min, s_max, steps, width);
        if (viete_cmd->parsed())
            return run_viete(roots);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
