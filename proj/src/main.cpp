#include <CLI11.hpp>
#include <iostream>
#include <map>
#include <string>

#include "engine/biform.hpp"
#include "engine/error.hpp"
#include "engine/io.hpp"
#include "engine/scenarios.hpp"

using namespace conic;

namespace {

void check_line(const std::string& label, bool ok, const std::string& detail = "") {
    std::cout << label << ": " << (ok ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
}

std::string index_str(const MultiIndex& r) {
    std::string s = "(";
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
    return s + ")";
}

// First block of ∂ψ that differs from the identity — the printable witness
// of a cocycle failure.
std::string first_noncocycle_block(const Cochain& psi) {
    Cochain d = coboundary(psi).full;
    for (const auto& [r, m] : d.blocks())
        if (!m.is_identity()) return "block " + index_str(r);
    return "";
}

// Artifact commands either write --out or print the JSON to stdout.
void deliver(const Json& j, const std::string& out) {
    if (out.empty())
        std::cout << j.dump(2) << "\n";
    else
        save_json(out, j);
}

int cmd_check(const std::string& space_path, const std::string& cochain_path, int cutoff) {
    Cochain psi = load_cochain(cochain_path);
    if (cutoff >= 0) psi = truncate_cochain(psi, cutoff);
    CochainClass cls = classify(psi);
    check_line("counital", cls.is_counital);
    check_line("cocycle", cls.is_cocycle, cls.is_cocycle ? "" : first_noncocycle_block(psi));
    check_line("bicharacter", cls.is_bicharacter);
    check_line("antibicharacter", cls.is_antibicharacter);

    bool ok = cls.is_counital && cls.is_cocycle;
    if (!space_path.empty()) {
        QuantumSpace qs = load_space(space_path).space;
        if (cutoff >= 0) qs = truncate_space(qs, cutoff);
        CheckResult adm = is_admissible(qs, psi);
        CheckResult second = is_second_admissible(qs, psi);
        check_line("admissible", adm.ok, adm.detail);
        check_line("second-admissible", second.ok, second.detail);
        ok = ok && adm.ok;
    }
    return ok ? 0 : 1;
}

int cmd_twist(const std::string& space_path, const std::string& cochain_path,
              const std::string& out, int cutoff) {
    SpaceDoc doc = load_space(space_path);
    Cochain psi = load_cochain(cochain_path);
    if (cutoff >= 0) {
        doc.space = truncate_space(doc.space, cutoff);
        psi = truncate_cochain(psi, cutoff);
    }
    SpaceDoc twisted{"twisted(" + doc.name + ")", twist(doc.space, psi)};
    deliver(space_to_json(twisted), out);
    return 0;
}

int cmd_dual(const std::string& space_path, const std::string& out, int cutoff) {
    SpaceDoc doc = load_space(space_path);
    if (cutoff >= 0) doc.space = truncate_space(doc.space, cutoff);
    SpaceDoc result{"dual(" + doc.name + ")", dual(doc.space)};
    deliver(space_to_json(result), out);
    return 0;
}

int cmd_product(const std::string& kind, const std::string& left, const std::string& right,
                const std::string& out, int cutoff) {
    static const std::map<std::string, ProductKind> kinds = {
        {"circ", ProductKind::circ},       {"odot", ProductKind::odot},
        {"rtri", ProductKind::rtri},       {"ltri", ProductKind::ltri},
        {"diamond", ProductKind::diamond}, {"bullet", ProductKind::bullet}};
    auto it = kinds.find(kind);
    if (it == kinds.end()) throw InputError("unknown product kind: " + kind);
    SpaceDoc a = load_space(left), b = load_space(right);
    if (cutoff >= 0) {
        a.space = truncate_space(a.space, cutoff);
        b.space = truncate_space(b.space, cutoff);
    }
    SpaceDoc result{kind + "(" + a.name + "," + b.name + ")",
                    product(it->second, a.space, b.space)};
    deliver(space_to_json(result), out);
    return 0;
}

int cmd_cohom(const std::string& left, const std::string& right, const std::string& out,
              int cutoff) {
    SpaceDoc b = load_space(left), a = load_space(right);
    if (cutoff >= 0) {
        b.space = truncate_space(b.space, cutoff);
        a.space = truncate_space(a.space, cutoff);
    }
    SpaceDoc result{"cohom(" + b.name + "," + a.name + ")", cohom(b.space, a.space)};
    deliver(space_to_json(result), out);
    return 0;
}

int cmd_hilbert(const std::string& space_path, const std::string& out, int cutoff) {
    SpaceDoc doc = load_space(space_path);
    if (cutoff >= 0) doc.space = truncate_space(doc.space, cutoff);
    std::vector<std::size_t> h = hilbert(doc.space);
    for (std::size_t i = 0; i < h.size(); ++i) std::cout << (i ? " " : "") << h[i];
    std::cout << "\n";
    if (!out.empty()) {
        Json j;
        j["name"] = doc.name;
        j["hilbert"] = h;
        save_json(out, j);
    }
    return 0;
}

int cmd_witness(const std::string& space_path, const std::string& target_path,
                const std::string& cochain_path, const std::string& variant) {
    SpaceDoc a = load_space(space_path), b = load_space(target_path);
    Cochain psi = load_cochain(cochain_path);
    WitnessVariant v;
    if (variant == "pairwise")
        v = WitnessVariant::pairwise;
    else if (variant == "triple")
        v = WitnessVariant::triple;
    else
        throw InputError("unknown witness variant: " + variant);

    // The candidate family derived from the cochain itself: ϑₙ = θₙ⁻¹.
    Cochain theta = primitive(psi);
    std::vector<Matrix> family;
    for (int n = 0; n <= a.space.cutoff; ++n) family.push_back(theta.block_deg(n).inverse());
    CheckResult res = verify_gauge_witness(a.space, b.space, family, v);
    check_line("witness", res.ok, res.detail);
    return res.ok ? 0 : 1;
}

int cmd_bridge(std::uint64_t seed, long dim, int level, int cutoff, const std::string& kind_name,
               const std::string& out) {
    CoalgebraKind kind;
    if (kind_name == "matrix")
        kind = CoalgebraKind::matrix;
    else if (kind_name == "group_like")
        kind = CoalgebraKind::group_like;
    else
        throw InputError("unknown coalgebra kind: " + kind_name);
    if (dim < 1) throw InputError("dim must be positive");
    if (level < 1) throw InputError("level must be at least 1");
    if (cutoff < 0) throw InputError("cutoff must be nonnegative");

    BiForm chi = random_biform(level, static_cast<std::size_t>(dim), cutoff, seed, kind);
    BiForm zeta = random_biform(level, static_cast<std::size_t>(dim), cutoff, seed + 1, kind);
    Cochain fchi = digamma(chi);

    bool anti = digamma(convolution(chi, zeta)) == digamma(zeta).compose(fchi);
    check_line("anti-homomorphism", anti);
    bool faces = true;
    for (int i = 0; i <= level + 1 && faces; ++i)
        faces = digamma(face(i, chi)) == coface(i, fchi);
    check_line("face-intertwining", faces);
    bool ok = anti && faces;
    if (kind == CoalgebraKind::group_like) {
        bool trivial = fchi.is_identity();
        check_line("identity-image", trivial);
        ok = ok && trivial;
    }
    if (!out.empty()) save_cochain(out, fchi);
    return ok ? 0 : 1;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& out) {
    ScenarioParams params;
    params.seed = seed;
    std::vector<std::string> names;
    if (suite == "all")
        names = suite_names();
    else
        names.push_back(suite);

    bool ok = true;
    Json reports = Json::array();
    for (const auto& name : names) {
        ScenarioReport rep = run_theorem_suite(name, params);
        for (const auto& c : rep.checks) {
            std::string label = suite == "all" ? rep.name + "/" + c.label : c.label;
            check_line(label, c.pass, c.detail);
        }
        std::cerr << rep.name << " runtime: " << rep.runtime_seconds << "s\n";
        reports.push_back(report_to_json(rep));
        ok = ok && rep.passed();
    }
    if (!out.empty()) save_json(out, suite == "all" ? reports : reports[0]);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic engine for truncated graded algebras, blockwise cochains, "
                 "and 2-cocycle twists"};
    app.require_subcommand(1);

    std::string space_path, cochain_path, left, right, target, out;
    std::string kind = "circ", variant = "pairwise", suite, coalgebra = "matrix";
    int cutoff = -1, level = 1;
    long dim = 2;
    std::uint64_t seed = 7;

    CLI::App* check = app.add_subcommand(
        "check", "classify a cochain (and test admissibility against a space)");
    check->add_option("--cochain", cochain_path, "cochain file")->required();
    check->add_option("--space", space_path, "space file to test admissibility against");
    check->add_option("--cutoff", cutoff, "lower the working cutoff");

    CLI::App* twist_cmd =
        app.add_subcommand("twist", "twist a space by a counital 2-cocycle");
    twist_cmd->add_option("--space", space_path, "space file")->required();
    twist_cmd->add_option("--cochain", cochain_path, "cochain file")->required();
    twist_cmd->add_option("--out", out, "output space file (stdout if omitted)");
    twist_cmd->add_option("--cutoff", cutoff, "lower the working cutoff");

    CLI::App* dual_cmd = app.add_subcommand("dual", "quadratic-style dual of a space");
    dual_cmd->add_option("--space", space_path, "space file")->required();
    dual_cmd->add_option("--out", out, "output space file (stdout if omitted)");
    dual_cmd->add_option("--cutoff", cutoff, "lower the working cutoff");

    CLI::App* product_cmd = app.add_subcommand("product", "binary product of two spaces");
    product_cmd->add_option("--kind", kind, "circ|odot|rtri|ltri|diamond|bullet")->required();
    product_cmd->add_option("--left", left, "left space file")->required();
    product_cmd->add_option("--right", right, "right space file")->required();
    product_cmd->add_option("--out", out, "output space file (stdout if omitted)");
    product_cmd->add_option("--cutoff", cutoff, "lower the working cutoff");

    CLI::App* cohom_cmd = app.add_subcommand(
        "cohom", "internal cohom of two spaces (left argument is the outer one)");
    cohom_cmd->add_option("--left", left, "outer space file")->required();
    cohom_cmd->add_option("--right", right, "inner space file")->required();
    cohom_cmd->add_option("--out", out, "output space file (stdout if omitted)");
    cohom_cmd->add_option("--cutoff", cutoff, "lower the working cutoff");

    CLI::App* hilbert_cmd =
        app.add_subcommand("hilbert", "dimensions of the graded components");
    hilbert_cmd->add_option("--space", space_path, "space file")->required();
    hilbert_cmd->add_option("--out", out, "optional JSON output file");
    hilbert_cmd->add_option("--cutoff", cutoff, "lower the working cutoff");

    CLI::App* witness_cmd = app.add_subcommand(
        "witness", "verify the primitive-derived gauge witness between two spaces");
    witness_cmd->add_option("--space", space_path, "source space file")->required();
    witness_cmd->add_option("--target", target, "target space file")->required();
    witness_cmd->add_option("--cochain", cochain_path, "twisting cochain file")->required();
    witness_cmd->add_option("--variant", variant, "pairwise|triple");

    CLI::App* bridge_cmd = app.add_subcommand(
        "bridge", "bialgebra-form bridge demo: transport a random form and verify");
    bridge_cmd->add_option("--seed", seed, "RNG seed");
    bridge_cmd->add_option("--dim", dim, "generator-space dimension");
    bridge_cmd->add_option("--level", level, "form level");
    bridge_cmd->add_option("--cutoff", cutoff, "truncation cutoff");
    bridge_cmd->add_option("--kind", coalgebra, "matrix|group_like");
    bridge_cmd->add_option("--out", out, "write the transported cochain here");

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run a named theorem suite (or 'all')");
    verify_cmd->add_option("--suite", suite, "suite name")->required();
    verify_cmd->add_option("--seed", seed, "RNG seed");
    verify_cmd->add_option("--out", out, "write the machine-readable report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(check)) return cmd_check(space_path, cochain_path, cutoff);
        if (app.got_subcommand(twist_cmd))
            return cmd_twist(space_path, cochain_path, out, cutoff);
        if (app.got_subcommand(dual_cmd)) return cmd_dual(space_path, out, cutoff);
        if (app.got_subcommand(product_cmd))
            return cmd_product(kind, left, right, out, cutoff);
        if (app.got_subcommand(cohom_cmd)) return cmd_cohom(left, right, out, cutoff);
        if (app.got_subcommand(hilbert_cmd)) return cmd_hilbert(space_path, out, cutoff);
        if (app.got_subcommand(witness_cmd))
            return cmd_witness(space_path, target, cochain_path, variant);
        if (app.got_subcommand(bridge_cmd))
            return cmd_bridge(seed, dim, level, cutoff < 0 ? 3 : cutoff, coalgebra, out);
        if (app.got_subcommand(verify_cmd)) return cmd_verify(suite, seed, out);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const PropertyError& e) {
        std::cerr << "property violated: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
