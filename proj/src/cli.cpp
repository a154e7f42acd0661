#include "slicekit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "slicekit/io.hpp"
#include "slicekit/noise.hpp"
#include "slicekit/structure.hpp"

namespace slicekit::cli {

namespace {

std::string fmt_float(double x) {
    std::ostringstream ss;
    ss << std::setprecision(12) << x;
    return ss.str();
}

std::string fmt_rat(const Rat& r) {
    return rat_to_string(r) + " (~" + fmt_float(r.get_d()) + ")";
}

std::string fmt_perm(const Permutation& pi) {
    std::string s = "[";
    for (int i = 1; i <= pi.n; ++i) {
        if (i > 1) s += " ";
        s += std::to_string(pi(i));
    }
    return s + "]";
}

void emit_function(const SliceFunction& f, const std::string& out_path,
                   std::ostream& out) {
    std::string doc = slice_function_to_json(f);
    if (out_path.empty()) {
        out << doc;
    } else {
        write_text_file(out_path, doc);
        out << "wrote " << out_path << "\n";
    }
}

void emit_function(const CubeFunction& f, const std::string& out_path,
                   std::ostream& out) {
    std::string doc = cube_function_to_json(f);
    if (out_path.empty()) {
        out << doc;
    } else {
        write_text_file(out_path, doc);
        out << "wrote " << out_path << "\n";
    }
}

struct SuiteRunner {
    std::ostream& out;
    bool ok = true;

    void check(bool cond, const std::string& name) {
        out << (cond ? "ok " : "FAIL ") << name << "\n";
        if (!cond) ok = false;
    }
};

SliceFunction seeded_function(DomainPtr d, std::uint64_t seed) {
    return parse_slice_function_spec("random-rat:" + std::to_string(seed), d);
}

void suite_identities(SuiteRunner& r, int n, int ell) {
    DomainPtr d = make_domain(n, ell);
    std::vector<SliceFunction> deltas;
    for (std::size_t i = 0; i < d->size(); ++i) {
        SliceFunction delta(d);
        delta.values[i] = 1;
        deltas.push_back(std::move(delta));
    }
    bool expansion_ok = true;
    for (const auto& P : enumerate_ktuples(n, 2)) {
        auto leaves = expand_to_shifted_sorted(P, n);
        for (const auto& f : deltas) {
            SliceFunction lhs = derivative(f, P);
            SliceFunction rhs(d);
            for (const auto& term : leaves)
                rhs += apply_permutation(derivative(f, term.tuple), term.pi);
            if (!(lhs == rhs)) expansion_ok = false;
        }
    }
    r.check(expansion_ok, "expansion identity on all 2-tuples, delta functions");

    // Signed sum over S_3 acting on three coordinates vanishes.
    bool alter2_ok = true;
    std::vector<std::pair<std::vector<int>, int>> s3 = {
        {{1, 2, 3}, 1}, {{2, 1, 3}, -1}, {{1, 3, 2}, -1},
        {{3, 2, 1}, -1}, {{2, 3, 1}, 1}, {{3, 1, 2}, 1}};
    for (const auto& f : deltas) {
        SliceFunction acc(d);
        for (const auto& [img, sign] : s3) {
            Permutation pi = Permutation::identity(n);
            for (int i = 1; i <= 3; ++i) pi.image[i - 1] = img[i - 1];
            SliceFunction g = apply_permutation(f, pi);
            g *= Rat(sign);
            acc += g;
        }
        if (!acc.is_zero()) alter2_ok = false;
    }
    r.check(alter2_ok, "signed S3 sum vanishes");

    // D_23 f = D_12 f + (D_13 f)^{(12)} + (D_12 f)^{(123)}.
    bool repl_ok = true;
    Permutation three_cycle = Permutation::identity(n);
    three_cycle.image[0] = 2;
    three_cycle.image[1] = 3;
    three_cycle.image[2] = 1;
    for (const auto& f : deltas) {
        SliceFunction rhs = derivative(f, 1, 2);
        rhs += apply_transposition(derivative(f, 1, 3), 1, 2);
        rhs += apply_permutation(derivative(f, 1, 2), three_cycle);
        if (!(derivative(f, 2, 3) == rhs)) repl_ok = false;
    }
    r.check(repl_ok, "replacement identity");
}

void suite_projections(SuiteRunner& r, int n, int ell, std::uint64_t seed) {
    DomainPtr d = make_domain(n, ell);
    std::vector<KTuple> tuples;
    for (int k : {1, 2})
        for (const auto& P : enumerate_ktuples(n, k)) tuples.push_back(P);
    bool proj_ok = true, parseval_ok = true;
    for (int trial = 0; trial < 10; ++trial) {
        SliceFunction f = seeded_function(d, seed + 2 * trial);
        SliceFunction g = seeded_function(d, seed + 2 * trial + 1);
        for (const auto& P : tuples) {
            SliceFunction df = derivative(f, P);
            if (!(derivative(df, P) == df)) proj_ok = false;
            if (inner_product(df, g) != inner_product(f, derivative(g, P)))
                proj_ok = false;
            if (norm_sq(df) > norm_sq(f)) proj_ok = false;
        }
        auto dec = project_levels(f, ell);
        Rat total(0);
        for (const auto& w : dec.weights.weights) total += w;
        if (total != norm_sq(f)) parseval_ok = false;
        for (std::size_t a = 0; a < dec.parts.size(); ++a)
            for (std::size_t b = a + 1; b < dec.parts.size(); ++b)
                if (inner_product(dec.parts[a], dec.parts[b]) != 0)
                    parseval_ok = false;
    }
    r.check(proj_ok, "derivatives are orthogonal projections");
    r.check(parseval_ok, "Parseval and level orthogonality");
}

void suite_spans(SuiteRunner& r, int n, int ell) {
    DomainPtr d = make_domain(n, ell);
    bool ok = true;
    for (int k = 0; k <= std::min(3, ell) && 2 * k <= n; ++k) {
        auto dims = span_dims_check(d, k);
        if (dims.dim_and != dims.dim_psi || !dims.mutual_containment) ok = false;
    }
    r.check(ok, "AND and Psi spans agree");
}

void suite_laplacian(SuiteRunner& r, int n, int ell, std::uint64_t seed) {
    DomainPtr d = make_domain(n, ell);
    bool ok = true;
    for (int trial = 0; trial < 5; ++trial) {
        SliceFunction f = seeded_function(d, seed + trial);
        auto dec = project_levels(f, ell);
        for (int lev = 0; lev <= ell; ++lev) {
            SliceFunction lhs = laplacian(dec.parts[lev]);
            SliceFunction rhs = dec.parts[lev];
            rhs *= laplacian_eigenvalue(n, lev);
            if (!(lhs == rhs)) ok = false;
        }
    }
    r.check(ok, "Laplacian eigenvalues per level");
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact harmonic analysis on the slice"};
    app.require_subcommand(1);

    int n = 0, ell = 0, k = -1, m = 0, s = 0;
    double t = 0.0;
    std::uint64_t seed = 1;
    std::string fspec, tuple_text, out_path, suite;

    auto add_domain = [&](CLI::App* cmd, bool need_ell = true) {
        cmd->add_option("--n", n, "coordinate count")->required();
        if (need_ell) cmd->add_option("--ell", ell, "Hamming weight")->required();
    };

    auto* c_spectrum = app.add_subcommand("spectrum", "level weights of a slice function");
    add_domain(c_spectrum);
    c_spectrum->add_option("--f", fspec, "function spec")->required();
    c_spectrum->add_option("--k", k, "projection cutoff (default ell)");
    c_spectrum->add_option("--out", out_path, "write f^{<=k} here");

    auto* c_derive = app.add_subcommand("derive", "apply a derivative operator");
    add_domain(c_derive);
    c_derive->add_option("--f", fspec, "function spec")->required();
    c_derive->add_option("--tuple", tuple_text, "k-tuple, e.g. \"(1,2)(3,4)\"")->required();
    c_derive->add_option("--out", out_path, "write the derivative here");

    auto* c_shift = app.add_subcommand("shift", "expand a tuple into shifted sorted leaves");
    c_shift->add_option("--n", n, "coordinate count")->required();
    c_shift->add_option("--tuple", tuple_text, "k-tuple")->required();

    auto* c_construct = app.add_subcommand("construct", "build a function from prescribed derivatives");
    add_domain(c_construct);
    c_construct->add_option("--f", fspec, "derivative assignment file path")->required();
    c_construct->add_option("--out", out_path, "write the function here");

    auto* c_approx = app.add_subcommand("approximate", "nearest low-degree structured approximation");
    add_domain(c_approx);
    c_approx->add_option("--f", fspec, "function spec")->required();
    c_approx->add_option("--k", k, "target degree")->required();
    c_approx->add_option("--out", out_path, "write the approximant here");

    auto* c_noise = app.add_subcommand("noise", "apply the heat semigroup");
    add_domain(c_noise);
    c_noise->add_option("--f", fspec, "function spec")->required();
    c_noise->add_option("--t", t, "time")->required();

    auto* c_verify = app.add_subcommand("verify", "run a named identity/property suite");
    add_domain(c_verify);
    c_verify->add_option("--suite", suite,
                         "identities | projections | spans | laplacian | all")->required();
    c_verify->add_option("--seed", seed, "random seed");

    auto* c_embed = app.add_subcommand("embed", "embed a cube function into the balanced slice");
    c_embed->add_option("--n", n, "cube coordinate count")->required();
    c_embed->add_option("--m", m, "slice coordinate count (even)")->required();
    c_embed->add_option("--f", fspec, "cube function spec")->required();
    c_embed->add_option("--k", k, "weight cutoff (default 1)");
    c_embed->add_option("--out", out_path, "write the embedded function here");

    auto* c_pullback = app.add_subcommand("pullback", "pull a balanced-slice function back to the cube");
    c_pullback->add_option("--n", n, "cube coordinate count")->required();
    c_pullback->add_option("--f", fspec, "slice function file, as file:<path>")->required();
    c_pullback->add_option("--out", out_path, "write the cube function here");

    auto* c_example = app.add_subcommand("example", "threshold perturbation of a parity");
    c_example->add_option("--n", n, "cube coordinate count")->required();
    c_example->add_option("--k", k, "parity width")->required();
    c_example->add_option("--t", t, "threshold offset")->required();
    c_example->add_option("--out", out_path, "write f here");

    auto* c_tail = app.add_subcommand("tail", "exact hypergeometric tail vs sub-Gaussian bound");
    add_domain(c_tail);
    c_tail->add_option("--s", s, "subset size")->required();
    c_tail->add_option("--t", t, "deviation in standard units")->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*c_spectrum) {
            DomainPtr d = make_domain(n, ell);
            SliceFunction f = parse_slice_function_spec(fspec, d);
            int cutoff = (k < 0) ? ell : k;
            auto dec = project_levels(f, cutoff);
            for (int lev = 0; lev <= ell; ++lev)
                out << "level " << lev << ": " << fmt_rat(dec.weights.weights[lev]) << "\n";
            out << "degree: " << dec.degree << "\n";
            out << "low_weight(k=" << cutoff << "): " << fmt_rat(norm_sq(dec.low)) << "\n";
            out << "norm_sq: " << fmt_rat(norm_sq(f)) << "\n";
            if (!out_path.empty()) emit_function(dec.low, out_path, out);
        } else if (*c_derive) {
            DomainPtr d = make_domain(n, ell);
            SliceFunction f = parse_slice_function_spec(fspec, d);
            KTuple P = parse_tuple(tuple_text);
            validate_tuple(P, n);
            SliceFunction g = derivative(f, P);
            out << "norm_sq: " << fmt_rat(norm_sq(g)) << "\n";
            emit_function(g, out_path, out);
        } else if (*c_shift) {
            KTuple P = parse_tuple(tuple_text);
            validate_tuple(P, n);
            auto [shifted, sorted] = classify(P, n);
            auto meas = measure(P, n);
            out << "tuple: " << P.to_string() << "\n";
            out << "shifted: " << (shifted ? "yes" : "no")
                << ", sorted: " << (sorted ? "yes" : "no") << "\n";
            out << "measure: inv=" << meas.inv << " d=" << meas.d << " I=" << meas.I
                << " m=" << meas.m << "\n";
            if (!(shifted && sorted)) {
                auto [s1, s2] = rewrite_step(P, Permutation::identity(n), n);
                out << "step: D_" << P.to_string() << " f(x) = D_" << s1.tuple.to_string()
                    << " f(x^" << fmt_perm(s1.pi) << ") + D_" << s2.tuple.to_string()
                    << " f(x^" << fmt_perm(s2.pi) << ")\n";
            }
            auto leaves = expand_to_shifted_sorted(P, n);
            out << "leaves: " << leaves.size() << "\n";
            for (const auto& term : leaves)
                out << "  " << term.tuple.to_string() << " via " << fmt_perm(term.pi) << "\n";
        } else if (*c_construct) {
            DomainPtr d = make_domain(n, ell);
            std::string path = fspec.rfind("file:", 0) == 0 ? fspec.substr(5) : fspec;
            auto z = parse_derivative_assignment(read_text_file(path), n);
            SliceFunction f = build_from_derivatives(d, z);
            out << "degree: " << degree_of(f) << "\n";
            emit_function(f, out_path, out);
        } else if (*c_approx) {
            DomainPtr d = make_domain(n, ell);
            SliceFunction f = parse_slice_function_spec(fspec, d);
            auto res = approximate(f, k);
            out << "distance: " << fmt_rat(res.distance) << "\n";
            out << "residual_norm_sq: " << fmt_rat(res.residual_norm_sq) << "\n";
            out << "boolean: " << (res.is_boolean ? "yes" : "no") << "\n";
            for (std::size_t i = 0; i < res.per_level_coefficients.size(); ++i) {
                int lev = k - static_cast<int>(i);
                for (const auto& [P, ac] : res.per_level_coefficients[i]) {
                    std::string name = P.to_string();
                    out << "level " << lev << " " << (name.empty() ? "()" : name)
                        << " a=" << rat_to_string(ac.first)
                        << " c=" << rat_to_string(ac.second) << "\n";
                }
            }
            emit_function(res.g, out_path, out);
        } else if (*c_noise) {
            DomainPtr d = make_domain(n, ell);
            SliceFunction f = parse_slice_function_spec(fspec, d);
            out << "alpha: " << fmt_float(noise_alpha(n, t)) << "\n";
            for (int lev = 0; lev <= ell; ++lev)
                out << "multiplier level " << lev << ": "
                    << fmt_float(noise_level_multiplier(n, t, lev)) << "\n";
            auto vals = noise(f, NoiseParams{t, std::nullopt});
            for (std::size_t i = 0; i < vals.size(); ++i)
                out << i << ": " << fmt_float(vals[i]) << "\n";
        } else if (*c_verify) {
            SuiteRunner runner{out};
            bool known = false;
            if (suite == "identities" || suite == "all") {
                suite_identities(runner, n, ell);
                known = true;
            }
            if (suite == "projections" || suite == "all") {
                suite_projections(runner, n, ell, seed);
                known = true;
            }
            if (suite == "spans" || suite == "all") {
                suite_spans(runner, n, ell);
                known = true;
            }
            if (suite == "laplacian" || suite == "all") {
                suite_laplacian(runner, n, ell, seed);
                known = true;
            }
            if (!known) {
                err << "usage error: unknown suite \"" << suite << "\"\n";
                return 2;
            }
            out << (runner.ok ? "all checks passed" : "suite failed") << "\n";
            return runner.ok ? 0 : 1;
        } else if (*c_embed) {
            CubeFunction f = parse_cube_function_spec(fspec, n);
            int cutoff = (k < 0) ? 1 : k;
            SliceFunction fp = embed_to_slice(f, m);
            Rat cube_high = weight_above(f, cutoff);
            Rat slice_high = norm_sq(fp) - low_weight(fp, cutoff);
            out << "cube W^{>" << cutoff << "}: " << fmt_rat(cube_high) << "\n";
            out << "slice W^{>" << cutoff << "}: " << fmt_rat(slice_high) << "\n";
            out << "gap: " << fmt_float(std::abs(slice_high.get_d() - cube_high.get_d()))
                << "\n";
            if (!out_path.empty()) emit_function(fp, out_path, out);
        } else if (*c_pullback) {
            if (fspec.rfind("file:", 0) != 0)
                throw std::invalid_argument("pullback needs --f file:<path>");
            SliceFunction gp = slice_function_from_json(read_text_file(fspec.substr(5)));
            CubeFunction g = pullback_from_slice(gp, n);
            emit_function(g, out_path, out);
        } else if (*c_example) {
            auto rep = tightness_example(n, k, t);
            out << "delta: " << fmt_rat(rep.delta) << "\n";
            out << "eps: " << fmt_rat(rep.eps) << "\n";
            out << "low_weight: " << fmt_rat(rep.low_weight) << "\n";
            out << "sharp_bound: " << fmt_float(rep.sharp) << "\n";
            if (!out_path.empty()) emit_function(rep.f, out_path, out);
        } else if (*c_tail) {
            auto tail = hypergeometric_tail(n, ell, s, t);
            out << "exact_tail: " << fmt_rat(tail.exact_tail) << "\n";
            out << "bound: " << fmt_float(tail.bound) << "\n";
            out << "holds: " << (tail.exact_tail.get_d() <= tail.bound ? "yes" : "no")
                << "\n";
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace slicekit::cli
