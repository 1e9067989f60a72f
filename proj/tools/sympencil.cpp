#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sympencil/canonical.hpp"
#include "sympencil/errors.hpp"
#include "sympencil/experiments.hpp"
#include "sympencil/extract.hpp"
#include "sympencil/geometry.hpp"
#include "sympencil/io.hpp"
#include "sympencil/order.hpp"

namespace sp = sympencil;

namespace {

sp::Complex parse_complex(const std::string& text) {
    std::stringstream in(text);
    double re = 0.0;
    double im = 0.0;
    char comma = 0;
    if (!(in >> re)) {
        throw sp::FormatError("cannot parse complex number \"" + text + "\"");
    }
    if (in >> comma) {
        if (comma != ',' || !(in >> im)) {
            throw sp::FormatError("complex numbers are written RE or RE,IM, got \"" + text + "\"");
        }
    }
    return {re, im};
}

sp::Json eigenstructure_json(const sp::Eigenstructure& es) {
    sp::Json finite = sp::Json::array();
    for (const auto& c : es.finite) {
        finite.push_back({{"mu", sp::complex_to_json(c.value)}, {"sizes", c.sizes}});
    }
    return {{"right_minimal_indices", es.right_indices},
            {"left_minimal_indices", es.left_indices},
            {"infinite_sizes", es.infinite_sizes},
            {"finite", finite}};
}

sp::Json component_json(const sp::GenericComponent& c) {
    return {{"n", c.n()},
            {"r", c.r()},
            {"a", c.a()},
            {"alpha", c.alpha()},
            {"s", c.s()},
            {"eigenvalues", c.eigenvalue_count()},
            {"bundle", sp::descriptor_to_json(sp::generic_bundle(c))},
            {"codim_orbit", sp::codim_orbit_generic(c)},
            {"codim_bundle", sp::codim_bundle_generic(c)}};
}

int emit(sp::Json out, bool passed) {
    out["passed"] = passed;
    std::cout << out.dump(2) << '\n';
    return passed ? 0 : 1;
}

int cmd_kcf(const std::string& path, const sp::ExtractOptions& opts) {
    const sp::Pencil p = sp::pencil_from_json(sp::read_json_file(path));
    const sp::Eigenstructure es = sp::extract_eigenstructure(p, opts);
    sp::Json out{{"command", "kcf"}, {"eigenstructure", eigenstructure_json(es)}};
    if (p.is_square() && es.left_indices == es.right_indices) {
        const sp::StructureDescriptor d = es.to_descriptor();
        out["descriptor"] = sp::descriptor_to_json(d);
        std::vector<std::string> names;
        const sp::StructureDescriptor canonical = d.sorted();
        for (const auto& b : canonical.blocks()) {
            names.push_back(sp::block_name(b));
        }
        out["block_list"] = names;
    }
    return emit(std::move(out), true);
}

int cmd_codim(int n, int r, int a, const std::string& numeric, const sp::ExtractOptions& opts) {
    sp::Json table = sp::Json::array();
    for (const auto& c : sp::generic_components(n, r)) {
        table.push_back(component_json(c));
    }
    sp::Json out{{"command", "codim"}, {"n", n}, {"r", r}, {"table", table}};
    bool passed = true;
    if (a >= 0) {
        out["selected"] = component_json(sp::GenericComponent(n, r, a));
    }
    if (!numeric.empty()) {
        const sp::Pencil p = sp::pencil_from_json(sp::read_json_file(numeric));
        const auto s = sp::SymmetricPencil::symmetrize(p, opts.rank.tol);
        if (s.size() != n) {
            throw sp::DimensionError("numeric pencil has size " + std::to_string(s.size()) + ", expected " +
                                     std::to_string(n));
        }
        const int orbit = sp::codim_orbit_numeric(s, opts.rank);
        sp::Json num{{"codim_orbit", orbit}};
        try {
            num["codim_bundle"] = sp::codim_bundle_numeric(s, opts);
        } catch (const sp::PencilError& e) {
            num["codim_bundle_error"] = e.what();
        }
        if (a >= 0) {
            const int expected = sp::codim_orbit_generic(sp::GenericComponent(n, r, a));
            num["expected_codim_orbit"] = expected;
            passed = orbit == expected;
        }
        out["numeric"] = num;
    }
    return emit(std::move(out), passed);
}

int cmd_closure_check(int n, int r) {
    const auto table = sp::obstruction_table(n, r);
    sp::Json rows = sp::Json::array();
    std::vector<std::string> matrix;
    bool passed = true;
    for (std::size_t a = 0; a < table.size(); ++a) {
        std::string line;
        for (std::size_t b = 0; b < table[a].size(); ++b) {
            const auto& o = table[a][b];
            if (a != b) {
                rows.push_back(sp::obstruction_to_json(o));
                passed = passed && o.kind != sp::ObstructionKind::None;
            }
            line += a == b ? " ." : o.kind == sp::ObstructionKind::MinimalIndexMajorization ? " M" : " E";
        }
        matrix.push_back(line.substr(1));
    }
    sp::Json out{{"command", "closure-check"}, {"n", n}, {"r", r}, {"obstructions", rows}, {"matrix", matrix},
                 {"legend", "row a, column a': M majorization, E simple eigenvalue count"}};
    return emit(std::move(out), passed);
}

int cmd_sample(int n, int r, int a, int trials, std::uint64_t seed, const sp::ExtractOptions& opts) {
    const sp::GenericComponent c(n, r, a);
    const sp::SeededSampler sampler(seed);
    const auto gen = sp::genericity_trial(c, trials, sampler, opts);
    const auto cod = sp::codimension_trial(c, trials, sampler, opts.rank);
    const bool passed = gen.success_rate() >= 0.99 && gen.count(sp::FailureKind::Mismatch) == 0 &&
                        gen.count(sp::FailureKind::Error) == 0 && cod.all_passed();
    sp::Json out{{"command", "sample"},
                 {"component", component_json(c)},
                 {"seed", seed},
                 {"genericity", sp::report_to_json(gen)},
                 {"codimension", sp::report_to_json(cod)},
                 {"required_genericity_rate", 0.99}};
    return emit(std::move(out), passed);
}

int cmd_degenerate(const std::string& kind, int size, const std::string& mu, double t,
                   const sp::ExtractOptions& opts) {
    if (kind != "jordan" && kind != "jordan-inf") {
        throw sp::FormatError("--kind must be jordan or jordan-inf");
    }
    const bool infinite = kind == "jordan-inf";
    const sp::Complex m = infinite ? sp::Complex{} : parse_complex(mu);
    const auto report = sp::degeneration_check(infinite, size, m, t, opts);
    const sp::SymmetricPencil s =
        infinite ? sp::degenerate_jordan_infinite(size, t) : sp::degenerate_jordan_finite(size, m, t);
    sp::Json out{{"command", "degenerate"}, {"report", sp::report_to_json(report)},
                 {"pencil", sp::pencil_to_json(s)}};
    return emit(std::move(out), report.all_passed());
}

int cmd_verify_example(const std::string& l1, const std::string& l2, const std::string& e1, const std::string& e2,
                       const sp::ExtractOptions& opts) {
    const auto report =
        sp::verify_example_1_1(parse_complex(l1), parse_complex(l2), parse_complex(e1), parse_complex(e2), opts);
    sp::Json out{{"command", "verify-example"}, {"report", sp::report_to_json(report)}};
    return emit(std::move(out), report.all_passed());
}

int cmd_generic(int n, int r) {
    const auto components = sp::generic_components(n, r);
    sp::Json list = sp::Json::array();
    bool distinct = true;
    for (std::size_t i = 0; i < components.size(); ++i) {
        list.push_back(component_json(components[i]));
        for (std::size_t j = 0; j < i; ++j) {
            distinct = distinct && !sp::same_bundle(sp::generic_bundle(components[i]),
                                                     sp::generic_bundle(components[j]));
        }
    }
    const bool count_ok = static_cast<int>(components.size()) == r / 2 + 1;
    sp::Json out{{"command", "generic"}, {"n", n}, {"r", r}, {"count", components.size()},
                 {"components", list}};
    return emit(std::move(out), count_ok && distinct);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structure of complex symmetric matrix pencils of bounded rank"};
    app.require_subcommand(1);

    sp::ExtractOptions opts;
    app.add_option("--tol", opts.rank.tol, "Relative rank tolerance")->check(CLI::PositiveNumber);
    app.add_option("--gap", opts.rank.gap, "Required singular value gap ratio")->check(CLI::PositiveNumber);
    app.add_option("--cluster-tol", opts.cluster_tol, "Eigenvalue clustering tolerance")
        ->check(CLI::PositiveNumber);

    int n = 0;
    int r = 0;
    int a = -1;
    int size = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    double t = 0.0;
    std::string path;
    std::string numeric;
    std::string kind;
    std::string mu = "0";
    std::string l1;
    std::string l2;
    std::string e1;
    std::string e2;

    auto* kcf = app.add_subcommand("kcf", "Extract the complete eigenstructure of a pencil");
    kcf->add_option("pencil", path, "Pencil JSON file")->required();
    kcf->add_option("--tol", opts.rank.tol, "Relative rank tolerance")->check(CLI::PositiveNumber);

    auto* codim = app.add_subcommand("codim", "Closed-form and numeric codimensions");
    codim->add_option("--n", n)->required();
    codim->add_option("--r", r)->required();
    codim->add_option("--a", a);
    codim->add_option("--numeric", numeric, "Pencil JSON file to measure");

    auto* closure = app.add_subcommand("closure-check", "Pairwise closure obstructions between components");
    closure->add_option("--n", n)->required();
    closure->add_option("--r", r)->required();

    auto* sample = app.add_subcommand("sample", "Genericity and codimension trials for one component");
    sample->add_option("--n", n)->required();
    sample->add_option("--r", r)->required();
    sample->add_option("--a", a)->required();
    sample->add_option("--trials", trials)->required()->check(CLI::NonNegativeNumber);
    sample->add_option("--seed", seed)->required();

    auto* degenerate = app.add_subcommand("degenerate", "Perturb one Jordan block into simple eigenvalues");
    degenerate->add_option("--kind", kind)->required()->check(CLI::IsMember({"jordan", "jordan-inf"}));
    degenerate->add_option("--size", size)->required();
    degenerate->add_option("--mu", mu, "Eigenvalue as RE,IM");
    degenerate->add_option("--t", t)->required();

    auto* verify = app.add_subcommand("verify-example", "Check the explicit 3x3 strict equivalence");
    verify->add_option("--l1", l1)->required();
    verify->add_option("--l2", l2)->required();
    verify->add_option("--e1", e1)->required();
    verify->add_option("--e2", e2)->required();

    auto* generic = app.add_subcommand("generic", "List the generic components for (n, r)");
    generic->add_option("--n", n)->required();
    generic->add_option("--r", r)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*kcf) {
            return cmd_kcf(path, opts);
        }
        if (*codim) {
            return cmd_codim(n, r, a, numeric, opts);
        }
        if (*closure) {
            return cmd_closure_check(n, r);
        }
        if (*sample) {
            return cmd_sample(n, r, a, trials, seed, opts);
        }
        if (*degenerate) {
            return cmd_degenerate(kind, size, mu, t, opts);
        }
        if (*verify) {
            return cmd_verify_example(l1, l2, e1, e2, opts);
        }
        return cmd_generic(n, r);
    } catch (const sp::IndeterminateStructure& e) {
        return emit({{"error", e.what()}, {"kind", "indeterminate"}, {"retained", e.retained()},
                     {"discarded", e.discarded()}},
                    false);
    } catch (const sp::PencilError& e) {
        emit({{"error", e.what()}, {"kind", "error"}}, false);
        return 2;
    }
}
