// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include "generators.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace qsuper;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string sample(const std::string& name) { return std::string(QSUPER_SAMPLES_DIR) + "/" + name; }

IdealSpec dual_block_ideal(const DeltaContext& c) {
    const std::size_t p = c.a.dim(), q = c.h.dim(), n = 2 * p + q;
    IdealSpec I;
    for (std::size_t k = 0; k < p; ++k) I.basis.push_back(unit_vec(n, p + q + k));
    return I;
}

// ---- shared corpus ---------------------------------------------------------

// 60 contexts per degree, dim a <= 2, dim h <= 4, entries bounded by the generator.
const std::vector<oracle::Context>& corpus() {
    static const std::vector<oracle::Context> all = [] {
        std::vector<oracle::Context> out;
        for (int delta : {0, 1}) {
            gen::Rng r(9000 + delta);
            for (int t = 0; t < 60; ++t) out.push_back(gen::random_context(delta, r));
        }
        return out;
    }();
    return all;
}

// ---- criteria --------------------------------------------------------------

Outcome criterion_extension_is_quadratic() {
    const auto start = std::chrono::steady_clock::now();
    const auto& cs = corpus();
    int per_delta[2] = {0, 0};
    for (std::size_t t = 0; t < cs.size(); ++t) {
        const auto& oc = cs[t];
        if (oc.p() > 2 || oc.q() > 4 || !gen::bounded(oc)) return fail("corpus entry " + std::to_string(t) + " out of bounds");
        const auto ctx = oracle::to_library(oc);
        const auto g = double_extend(ctx);
        const std::string at = " (context " + std::to_string(t) + ")";
        if (!check_jacobi(g.bracket())) return fail("jacobi" + at);
        if (!check_invariance(g.metric(), g.algebra())) return fail("invariance" + at);
        if (check_form_degree(g.metric()) != ctx.delta) return fail("metric degree" + at);
        if (rank(g.metric().matrix()) != g.dim()) return fail("rank" + at);
        if (!oracle::same(oracle::from_library(g), oracle::double_extension(oc))) return fail("oracle mismatch" + at);
        ++per_delta[oc.delta];
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream os;
    os << per_delta[0] << "+" << per_delta[1] << " contexts in " << secs << " s";
    if (per_delta[0] < 50 || per_delta[1] < 50) return fail(os.str() + ", fewer than 50 per degree");
    if (secs >= 10) return fail(os.str() + ", over 10 s");
    return {true, os.str()};
}

Outcome criterion_lemma_identities() {
    const auto& cs = corpus();
    for (std::size_t t = 0; t < cs.size(); ++t) {
        try {
            check_lemma_identities(oracle::to_library(cs[t]));
        } catch (const std::exception& e) {
            return fail("context " + std::to_string(t) + ": " + e.what());
        }
    }
    return {true, std::to_string(cs.size()) + " contexts"};
}

Outcome criterion_coadjoint() {
    gen::Rng r(9100);
    const int count = 60;
    for (int t = 0; t < count; ++t) {
        const auto g = gen::random_lie_superalgebra(r);
        const auto og = oracle::from_library(g.bracket());
        for (int d : {0, 1}) {
            const Parity delta(static_cast<unsigned>(d));
            const std::string at = " (algebra " + std::to_string(t) + ", delta " + std::to_string(d) + ")";
            if (!check_delta_coadjoint_relation(g, delta)) return fail("delta relation" + at);
            const auto co = delta_coadjoint(g, delta);
            if (!check_representation(co)) return fail("representation" + at);
            const auto ctx = oracle::empty_context(d, og, {gen::abelian({}), {}, d});
            for (std::size_t x = 0; x < g.dim(); ++x)
                for (std::size_t f = 0; f < g.dim(); ++f)
                    if (co.action[x].matrix().column(f) != oracle::coadjoint(ctx, x, oracle::unit(g.dim(), f)))
                        return fail("oracle mismatch" + at);
        }
    }
    return {true, std::to_string(count) + " algebras, both degrees"};
}

Outcome criterion_witt() {
    int done = 0;
    for (int delta : {0, 1}) {
        gen::Rng r(9200 + delta);
        for (int t = 0; t < 60; ++t, ++done) {
            const auto inst = gen::random_isotropic(delta, r);
            const auto& I = inst.ideal.basis;
            const auto B = oracle::from_library(inst.form.matrix());
            const auto a = witt_complement(inst.ideal, inst.form);
            const std::string at = " (delta " + std::to_string(delta) + ", instance " + std::to_string(t) + ")";
            if (a.size() != I.size()) return fail("dimension" + at);
            for (const auto& u : a)
                for (const auto& v : a)
                    if (oracle::form(B, u, v) != 0) return fail("isotropy" + at);
            oracle::M both(I.begin(), I.end());
            both.insert(both.end(), a.begin(), a.end());
            if (oracle::rank(both) != both.size()) return fail("transversality" + at);
            for (std::size_t j = 0; j < I.size(); ++j)
                for (std::size_t k = 0; k < a.size(); ++k)
                    if (oracle::form(B, I[j], a[k]) != (j == k ? 1 : 0)) return fail("pairing" + at);
        }
    }
    return {true, std::to_string(done) + " instances"};
}

// Isometry verified entry by entry with the oracle's dense arithmetic.
std::size_t isometry_mismatches(const oracle::Quadratic& g, const oracle::Quadratic& t, const Matrix& map) {
    const std::size_t n = g.alg.dim();
    if (t.alg.dim() != n || map.rows() != n || map.cols() != n) return n * n + 1;
    std::size_t bad = oracle::rank(oracle::from_library(map)) == n ? 0 : 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const oracle::V ui = map.column(i), uj = map.column(j);
            const oracle::V image = oracle::mat_apply(oracle::from_library(map), oracle::bracket(g.alg, oracle::unit(n, i), oracle::unit(n, j)));
            if (image != oracle::bracket(t.alg, ui, uj)) ++bad;
            if (g.B[i][j] != oracle::form(t.B, ui, uj)) ++bad;
        }
    return bad;
}

Outcome criterion_round_trip() {
    const auto& cs = corpus();
    std::size_t mismatches = 0, identical = 0;
    for (std::size_t t = 0; t < cs.size(); ++t) {
        const auto ctx = oracle::to_library(cs[t]);
        const auto g = double_extend(ctx);
        const auto res = decompose(g, dual_block_ideal(ctx));
        if (!validate_context(res.context).empty()) return fail("recovered context invalid (context " + std::to_string(t) + ")");
        mismatches += isometry_mismatches(oracle::from_library(g), oracle::double_extension(oracle::from_library(res.context)),
                                          res.isometry);
        if (res.context == ctx) ++identical;
    }
    std::ostringstream os;
    os << cs.size() << " contexts, " << mismatches << " mismatches, " << identical << " recovered verbatim";
    return {mismatches == 0, os.str()};
}

QuadraticLieSuperAlgebra library_h(const oracle::Context& c) {
    return oracle::to_library(oracle::Quadratic{oracle::h_of(c), c.Bh, c.delta}, "u");
}

Outcome criterion_catalog() {
    const int count = 25;
    gen::Rng r(9300);
    const auto odd_a = gen::abelian({1}), even_a = gen::abelian({0});
    int isometries = 0;
    for (int t = 0; t < count; ++t) {
        const auto c = gen::random_context(1, r, nullptr, &odd_a);
        const auto h = library_h(c);
        const OddExtensionParams p{h, GradedLinearMap(h.space(), h.space(), Parity::odd(), oracle::to_matrix(c.rho[0], c.q())),
                                   c.lam[0][0], c.om[0][0][0]};
        if (odd_extension_dim1(p) != double_extend(odd_extension_context(p)))
            return fail("odd extension differs from generic path (set " + std::to_string(t) + ")");
    }
    for (int t = 0; t < count; ++t) {
        const auto c = gen::random_context(1, r, nullptr, &even_a);
        const auto h = library_h(c);
        const HeisenbergExtensionParams p{h, GradedLinearMap(h.space(), h.space(), Parity::even(), oracle::to_matrix(c.rho[0], c.q()))};
        if (heisenberg_extension(p) != double_extend(heisenberg_context(p)))
            return fail("heisenberg extension differs from generic path (set " + std::to_string(t) + ")");
        if (heisenberg_isometry_applies(p)) {
            ++isometries;
            if (!check_heisenberg_isometry(p)) return fail("Psi is not an isometry (set " + std::to_string(t) + ")");
        }
    }
    if (isometries == 0) return fail("no parameter set exercised Psi");
    return {true, std::to_string(count) + "+" + std::to_string(count) + " parameter sets, Psi checked on " +
                      std::to_string(isometries)};
}

// ---- corruption suite ------------------------------------------------------

using Ids = std::set<std::string>;

Ids failing(const std::vector<std::pair<std::string, CheckResult>>& family) {
    Ids out;
    for (const auto& [id, r] : family)
        if (!r) out.insert(id);
    return out;
}

const Witness* witness_of(const std::vector<std::pair<std::string, CheckResult>>& family, const std::string& id) {
    for (const auto& [name, r] : family)
        if (name == id && !r) return &*r.witness;
    return nullptr;
}

std::vector<std::pair<std::string, CheckResult>> bracket_family(const SuperBracket& b) {
    return {{"grading", check_grading(b)}, {"super-skew", check_super_skew(b)}, {"jacobi", check_jacobi(b)}};
}

std::vector<std::pair<std::string, CheckResult>> metric_family(const SuperSpace& s, Parity degree, const Matrix& m,
                                                               const SuperBracket& b) {
    return {{"homogeneity", check_form_pattern(s, degree, m)},
            {"super-symmetry", check_supersymmetry(s, m)},
            {"invariance", check_invariance(m, b)},
            {"non-degeneracy", check_nondegenerate(m)}};
}

Ids context_ids(const DeltaContext& c) {
    Ids out;
    for (const auto& w : validate_context(c)) out.insert(w.check);
    return out;
}

const Witness* context_witness(const std::vector<Witness>& ws, const std::string& id) {
    for (const auto& w : ws)
        if (w.check == id) return &w;
    return nullptr;
}

oracle::V slice(const oracle::V& v, std::size_t offset, std::size_t len) {
    return oracle::V(v.begin() + static_cast<std::ptrdiff_t>(offset), v.begin() + static_cast<std::ptrdiff_t>(offset + len));
}

struct Case {
    std::string name;
    std::function<std::string()> run;  // empty string on success
};

SuperBracket three_dim_base() {
    return SuperBracket(SuperSpace({{"x", Parity::even()}, {"x2", Parity::even()}, {"y", Parity::odd()}}));
}

std::string bracket_case(const SuperBracket& base, const SuperBracket& bad, const std::string& target,
                         const std::function<bool(const oracle::Algebra&, const Witness&)>& witness_ok) {
    if (!failing(bracket_family(base)).empty()) return "base instance already fails";
    const auto fam = bracket_family(bad);
    if (failing(fam) != Ids{target}) return "failing set differs from {" + target + "}";
    if (!witness_ok(oracle::from_library(bad), *witness_of(fam, target))) return "witness disagrees with oracle";
    return {};
}

std::string metric_case(const SuperSpace& s, Parity degree, const Matrix& base, const Matrix& bad, const SuperBracket& b,
                        const std::string& target, const std::function<bool(const oracle::M&, const Witness&)>& witness_ok) {
    if (!failing(metric_family(s, degree, base, b)).empty()) return "base instance already fails";
    const auto fam = metric_family(s, degree, bad, b);
    if (failing(fam) != Ids{target}) return "failing set differs from {" + target + "}";
    if (!witness_ok(oracle::from_library(bad), *witness_of(fam, target))) return "witness disagrees with oracle";
    return {};
}

// base and corrupted context given as oracle data; the witness check sees the corrupted one
std::string context_case(const oracle::Context& base, const oracle::Context& bad, const std::string& target,
                         const std::function<bool(const oracle::Context&, const Witness&)>& witness_ok) {
    if (!oracle::context_valid(base) || !validate_context(oracle::to_library(base)).empty()) return "base instance is not valid";
    if (oracle::context_valid(bad)) return "oracle accepts the corrupted context";
    const auto ws = validate_context(oracle::to_library(bad));
    Ids ids;
    for (const auto& w : ws) ids.insert(w.check);
    if (ids != Ids{target}) return "failing set differs from {" + target + "}";
    if (!witness_ok(bad, *context_witness(ws, target))) return "witness disagrees with oracle";
    return {};
}

// odd metric on {e even, f odd}, B(e,f) = B(f,e) = 1
oracle::Quadratic odd_plane() {
    oracle::Quadratic h{gen::abelian({0, 1}), oracle::zeros(2, 2), 1};
    h.B[0][1] = h.B[1][0] = 1;
    return h;
}

std::vector<Case> corruption_cases() {
    std::vector<Case> cases;

    cases.push_back({"grading", [] {
                         const auto base = three_dim_base();
                         auto bad = base;
                         bad.set_skew(0, 1, Vec{0, 0, 1});  // [x,x2] = y, odd
                         return bracket_case(base, bad, "grading", [](const oracle::Algebra& g, const Witness& w) {
                             const auto i = w.indices[0], j = w.indices[1], k = w.indices[2];
                             return ((g.par[i] + g.par[j] + g.par[k]) & 1) && g.c[i][j][k] != 0 && w.residual == Vec{g.c[i][j][k]};
                         });
                     }});

    cases.push_back({"super-skew", [] {
                         const auto base = three_dim_base();
                         auto bad = base;
                         bad.constant(0, 1, 0) = 1;  // [x,x2] = x without its partner
                         return bracket_case(base, bad, "super-skew", [](const oracle::Algebra& g, const Witness& w) {
                             const auto i = w.indices[0], j = w.indices[1];
                             Vec r(g.dim());
                             for (std::size_t k = 0; k < g.dim(); ++k) r[k] = g.c[i][j][k] + oracle::sgn(g.par[i] * g.par[j]) * g.c[j][i][k];
                             return r == w.residual && !is_zero(r);
                         });
                     }});

    cases.push_back({"jacobi", [] {
                         auto base = three_dim_base();
                         base.set_skew(0, 1, Vec{0, 1, 0});  // [x,x2] = x2
                         base.set_skew(0, 2, Vec{0, 0, 1});  // [x,y] = y
                         auto bad = base;
                         bad.set_skew(1, 2, Vec{0, 0, 1});  // [x2,y] = y
                         return bracket_case(base, bad, "jacobi", [](const oracle::Algebra& g, const Witness& w) {
                             const auto x = w.indices[0], z = w.indices[2];
                             // cyclic form = (-1)^{|x||z|} times the Leibniz form once skew-symmetry holds
                             Vec expected = oracle::jacobi_residual(g, x, w.indices[1], z);
                             for (auto& s : expected) s *= oracle::sgn(g.par[x] * g.par[z]);
                             return expected == w.residual && !is_zero(expected);
                         });
                     }});

    cases.push_back({"invariance", [] {
                         const auto g = parse_algebra(slurp(sample("heisenberg.alg")));
                         const Matrix& base = g.metric().matrix();
                         Matrix bad = base;
                         bad(1, 2) = 2;  // B(e1,f1), with its super-symmetric partner
                         bad(2, 1) = 2;
                         const auto ob = oracle::from_library(g.bracket());
                         return metric_case(g.space(), g.degree(), base, bad, g.bracket(), "invariance",
                                            [&](const oracle::M& B, const Witness& w) {
                                                const oracle::Quadratic q{ob, B, 1};
                                                const Scalar r = oracle::invariance_residual(q, w.indices[0], w.indices[1], w.indices[2]);
                                                return r != 0 && w.residual == Vec{r};
                                            });
                     }});

    const auto plane = odd_plane();
    const SuperSpace plane_space = oracle::space_of(plane.alg.par, "u");
    const SuperBracket plane_bracket(plane_space);
    const Matrix plane_metric = oracle::to_matrix(plane.B, 2);

    cases.push_back({"homogeneity", [=] {
                         Matrix bad = plane_metric;
                         bad(0, 0) = 1;  // B(e,e) on an odd form
                         return metric_case(plane_space, Parity::odd(), plane_metric, bad, plane_bracket, "homogeneity",
                                            [&](const oracle::M& B, const Witness& w) {
                                                const auto i = w.indices[0], j = w.indices[1];
                                                return ((plane.alg.par[i] + plane.alg.par[j] + 1) & 1) && B[i][j] != 0 &&
                                                       w.residual == Vec{B[i][j]};
                                            });
                     }});

    cases.push_back({"super-symmetry", [=] {
                         Matrix bad = plane_metric;
                         bad(1, 0) = 2;  // B(f,e) = 2, B(e,f) = 1
                         return metric_case(plane_space, Parity::odd(), plane_metric, bad, plane_bracket, "super-symmetry",
                                            [&](const oracle::M& B, const Witness& w) {
                                                const auto i = w.indices[0], j = w.indices[1];
                                                const Scalar r = B[i][j] - oracle::sgn(plane.alg.par[i] * plane.alg.par[j]) * B[j][i];
                                                return r != 0 && w.residual == Vec{r};
                                            });
                     }});

    cases.push_back({"non-degeneracy", [] {
                         const SuperSpace s = oracle::space_of({0, 0, 1, 1}, "u");
                         Matrix base(4, 4);
                         base(0, 2) = base(2, 0) = base(1, 3) = base(3, 1) = 1;
                         Matrix bad = base;
                         bad(1, 3) = bad(3, 1) = 0;  // drop the (e2,f2) pair
                         return metric_case(s, Parity::odd(), base, bad, SuperBracket(s), "non-degeneracy",
                                            [](const oracle::M& B, const Witness& w) {
                                                return w.indices == std::vector<std::size_t>{oracle::rank(B), B.size()} &&
                                                       oracle::rank(B) < B.size();
                                            });
                     }});

    cases.push_back({"rho-bracket", [] {
                         // h = {x', e even; f, z odd}: [x',e] = e, [x',f] = -f, [e,f] = z, B(x',z) = B(e,f) = 1
                         oracle::Quadratic h{gen::abelian({0, 0, 1, 1}), oracle::zeros(4, 4), 1};
                         gen::set_skew(h.alg, 0, 1, 1, 1);
                         gen::set_skew(h.alg, 0, 2, 2, -1);
                         gen::set_skew(h.alg, 1, 2, 3, 1);
                         h.B[0][3] = h.B[3][0] = h.B[1][2] = h.B[2][1] = 1;
                         auto base = oracle::empty_context(1, gen::abelian({1}), h);
                         base.om[0][0][0] = 1;
                         auto bad = base;
                         bad.lam[0][0][1] = 1;  // lambda(x,x) = e, not central
                         return context_case(base, bad, "rho-bracket", [](const oracle::Context& c, const Witness& w) {
                             const std::size_t q = c.q(), at = (w.indices[0] * c.p() + w.indices[1]) * q * q;
                             const auto all = oracle::eq_rho_bracket(c);
                             Vec expected(q * q);
                             for (std::size_t u = 0; u < q; ++u)
                                 for (std::size_t k = 0; k < q; ++k) expected[k * q + u] = all[at + u * q + k];
                             return expected == w.residual && !is_zero(expected);
                         });
                     }});

    cases.push_back({"lambda-cocycle", [] {
                         auto base = oracle::empty_context(1, gen::abelian({0, 1}), odd_plane());
                         base.rho[0][0][0] = 1;  // rho(x) = diag(1, -1)
                         base.rho[0][1][1] = -1;
                         auto bad = base;
                         bad.lam[1][1][0] = 1;  // lambda(y,y) = e
                         return context_case(base, bad, "lambda-cocycle", [](const oracle::Context& c, const Witness& w) {
                             const std::size_t p = c.p(), q = c.q();
                             const auto expected =
                                 slice(oracle::eq_lambda_cocycle(c), ((w.indices[0] * p + w.indices[1]) * p + w.indices[2]) * q, q);
                             return expected == w.residual && !is_zero(expected);
                         });
                     }});

    cases.push_back({"chi", [] {
                         auto oc = oracle::empty_context(1, gen::abelian({1}), odd_plane());
                         oc.lam[0][0][0] = 1;  // lambda(x,x) = e
                         const auto c = oracle::to_library(oc);
                         if (!validate_context(c).empty()) return std::string("base instance is not valid");
                         auto [chi, phi] = derive_maps(c);
                         if (!check_chi(c, chi) || !check_phi(c, phi)) return std::string("derived maps rejected");
                         const auto truth = oracle::chi(oc);
                         chi(0, 1, 0) += 1;
                         const auto r = check_chi(c, chi);
                         if (r || !check_phi(c, phi) || !validate_context(c).empty()) return std::string("failing set differs from {chi}");
                         const auto& w = *r.witness;
                         Vec expected(oc.p());
                         for (std::size_t y = 0; y < oc.p(); ++y) expected[y] = chi(w.indices[0], w.indices[1], y) - truth[w.indices[0]][w.indices[1]][y];
                         if (w.check != "chi" || expected != w.residual || is_zero(expected)) return std::string("witness disagrees with oracle");
                         return std::string();
                     }});

    cases.push_back({"omega-cocycle", [] {
                         oracle::Quadratic h{gen::abelian({0}), oracle::zeros(1, 1), 0};
                         h.B[0][0] = 1;
                         const auto base = oracle::empty_context(0, gen::abelian({1}), h);
                         auto bad = base;
                         bad.lam[0][0][0] = 1;  // lambda(x,x) = z
                         return context_case(base, bad, "omega-cocycle", [](const oracle::Context& c, const Witness& w) {
                             const std::size_t p = c.p();
                             const auto expected =
                                 slice(oracle::eq_omega_cocycle(c), ((w.indices[0] * p + w.indices[1]) * p + w.indices[2]) * p, p);
                             return expected == w.residual && !is_zero(expected);
                         });
                     }});

    cases.push_back({"super-cyclic", [] {
                         const auto base = oracle::empty_context(0, gen::abelian({0, 1}), {gen::abelian({}), {}, 0});
                         auto bad = base;
                         bad.om[1][1][0] = 1;  // omega(y,y)(x) without its cyclic partner
                         return context_case(base, bad, "super-cyclic", [](const oracle::Context& c, const Witness& w) {
                             const std::size_t p = c.p();
                             const Scalar r = oracle::eq_super_cyclic(c)[(w.indices[0] * p + w.indices[1]) * p + w.indices[2]];
                             return r != 0 && w.residual == Vec{r};
                         });
                     }});
    return cases;
}

Outcome criterion_corruption() {
    const auto cases = corruption_cases();
    std::string failures;
    for (const auto& c : cases) {
        std::string why;
        try {
            why = c.run();
        } catch (const std::exception& e) {
            why = std::string("threw: ") + e.what();
        }
        if (!why.empty()) failures += (failures.empty() ? "" : "; ") + c.name + ": " + why;
    }
    if (!failures.empty()) return fail(failures);
    return {true, std::to_string(cases.size()) + " corruptions isolated with oracle-checked witnesses"};
}

// ---- command line ----------------------------------------------------------

struct Run {
    int code;
    std::string out;
};

Run run_cli(const fs::path& dir, const std::string& args) {
    const auto out = dir / "stdout", err = dir / "stderr";
    const std::string cmd = std::string("'") + QSUPER_CLI_PATH + "' " + args + " > '" + out.string() + "' 2> '" + err.string() + "'";
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out)};
}

Outcome criterion_cli() {
    const auto dir = fs::temp_directory_path() / ("qsuper-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::vector<std::string> commands = {
        "catalog heisenberg --weights 1,2",
        "catalog odd-dim1 --eta 2 --d 3 --w 1",
        "verify " + sample("heisenberg.alg"),
        "verify " + sample("odd-dim1.alg"),
        "extend --context " + sample("heisenberg.ctx"),
        "extend --context " + sample("even-nonabelian.ctx"),
        "extend --context " + sample("odd-dim1.ctx"),
        "decompose " + sample("heisenberg.alg") + " --ideal " + sample("heisenberg.ideal"),
        "decompose " + sample("odd-dim1.alg") + " --ideal auto",
        "roundtrip " + sample("heisenberg.ctx"),
        "roundtrip " + sample("even-nonabelian.ctx"),
        "roundtrip " + sample("odd-dim1.ctx"),
    };
    std::string failures;
    for (const auto& args : commands) {
        const auto a = run_cli(dir, args), b = run_cli(dir, args);
        if (a.code != 0 || b.code != 0) failures += "; '" + args + "' exited " + std::to_string(a.code);
        else if (a.out != b.out || a.out.empty()) failures += "; '" + args + "' output not reproducible";
    }
    fs::remove_all(dir);
    if (!failures.empty()) return fail(failures.substr(2));
    return {true, std::to_string(commands.size()) + " commands, each run twice"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"valid contexts extend to quadratic Lie superalgebras", criterion_extension_is_quadratic},
        {"chi/Phi identities hold on valid contexts", criterion_lemma_identities},
        {"delta-coadjoint is a representation with the right relation", criterion_coadjoint},
        {"Witt complements are isotropic, transversal, dual to I", criterion_witt},
        {"decompose then extend is an isometry", criterion_round_trip},
        {"catalog families agree with the generic construction", criterion_catalog},
        {"each corruption is caught by exactly its checker", criterion_corruption},
        {"command line runs on shipped samples, deterministically", criterion_cli},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = fail(std::string("threw: ") + e.what());
        }
        all = all && o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first << " (" << o.detail << ")"
                  << std::endl;
    }
    return all ? 0 : 1;
}
