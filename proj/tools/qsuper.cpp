// qsuper: build, verify and decompose quadratic Lie superalgebras from files.
// Exit status: 0 success, 1 mathematical violation, 2 usage, I/O or parse error.

#include "qsuper/qsuper.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace qsuper;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& content, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(out, std::ios::binary | std::ios::trunc);
    if (!f || !(f << content)) throw IoError("cannot write '" + out + "'");
}

void print_violations(const std::vector<Witness>& violations) {
    for (const auto& w : violations) std::cerr << "violation: " << describe_check(w.check) << ": " << w.describe() << "\n";
}

IdealSpec canonical_ideal(const DeltaContext& c) {
    const std::size_t p = c.a.dim(), q = c.h.dim(), n = 2 * p + q;
    IdealSpec I;
    for (std::size_t k = 0; k < p; ++k) I.basis.push_back(unit_vec(n, p + q + k));
    return I;
}

/// h = sum of blocks {e_i even, f_i odd}, abelian, B(e_i, f_i) = B(f_i, e_i) = 1.
QuadraticLieSuperAlgebra hyperbolic_h(std::size_t blocks) {
    std::vector<BasisVector> basis;
    for (std::size_t i = 0; i < blocks; ++i) {
        basis.push_back({"e" + std::to_string(i + 1), Parity::even()});
        basis.push_back({"f" + std::to_string(i + 1), Parity::odd()});
    }
    SuperSpace H(std::move(basis));
    Matrix m(H.dim(), H.dim());
    for (std::size_t i = 0; i < blocks; ++i) m(2 * i, 2 * i + 1) = m(2 * i + 1, 2 * i) = 1;
    return {LieSuperAlgebra::abelian(H), GradedBilinearForm(H, Parity::odd(), std::move(m))};
}

std::vector<Scalar> parse_list(const std::string& text) {
    std::vector<Scalar> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_scalar(item));
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

struct Options {
    std::string format = "text";
    std::string input, context, ideal = "auto", out, catalog_name;
    std::string eta = "1", d = "0", w = "0", weights = "1";

    Format fmt() const { return format == "json" ? Format::json : Format::text; }
};

int cmd_verify(const Options& o) {
    const auto doc = read_algebra(read_file(o.input));
    const auto rep = verify_document(doc);
    std::cout << rep.str();
    return rep.ok() ? kOk : kViolation;
}

int cmd_extend(const Options& o) {
    const auto ctx = read_context(read_file(o.context));
    if (auto v = validate_context(ctx); !v.empty()) {
        print_violations(v);
        return kViolation;
    }
    emit(write_algebra(to_document("g", double_extend(ctx)), o.fmt()), o.out);
    return kOk;
}

int cmd_decompose(const Options& o) {
    const auto g = to_quadratic(read_algebra(read_file(o.input)));
    IdealSpec ideal;
    if (o.ideal == "auto") {
        auto found = find_central_minimal_ideal(g);
        if (!found) {
            std::cerr << "no isotropic vector in the center; '--ideal auto' only searches central ideals, "
                         "supply an ideal file instead\n";
            return kViolation;
        }
        ideal = std::move(*found);
    } else {
        auto d = read_ideal(read_file(o.ideal));
        if (d.ambient_dim != g.dim())
            throw ParseError(0, "ideal dimension " + std::to_string(d.ambient_dim) + " does not match algebra dimension " +
                                    std::to_string(g.dim()));
        ideal = std::move(d.ideal);
    }
    const auto res = decompose(g, ideal);
    emit(write_context(res.context, o.fmt()), o.out);
    return kOk;
}

int cmd_catalog(const Options& o) {
    QuadraticLieSuperAlgebra g;
    if (o.catalog_name == "odd-dim1") {
        // h = {e even, f odd}, D(f) = d e, w = w e
        auto h = hyperbolic_h(1);
        Matrix D(2, 2);
        D(0, 1) = parse_scalar(o.d);
        Vec w{parse_scalar(o.w), 0};
        g = odd_extension_dim1({h, GradedLinearMap(h.space(), h.space(), Parity::odd(), D), w, parse_scalar(o.eta)});
    } else if (o.catalog_name == "heisenberg") {
        // D(e_i) = t_i e_i, D(f_i) = -t_i f_i
        const auto t = parse_list(o.weights);
        auto h = hyperbolic_h(t.size());
        Matrix D(h.dim(), h.dim());
        for (std::size_t i = 0; i < t.size(); ++i) {
            D(2 * i, 2 * i) = t[i];
            D(2 * i + 1, 2 * i + 1) = -t[i];
        }
        HeisenbergExtensionParams p{h, GradedLinearMap(h.space(), h.space(), Parity::even(), D)};
        g = heisenberg_extension(p);
        if (heisenberg_isometry_applies(p)) {
            if (auto r = check_heisenberg_isometry(p); !r) {
                std::cerr << "isometry with h(D) failed: " << r.witness->describe() << "\n";
                return kViolation;
            }
        }
    } else {
        throw std::invalid_argument("unknown catalog entry '" + o.catalog_name + "'");
    }
    emit(write_algebra(to_document(o.catalog_name, g), o.fmt()), o.out);
    return kOk;
}

int cmd_roundtrip(const Options& o) {
    const auto ctx = read_context(read_file(o.context));
    if (auto v = validate_context(ctx); !v.empty()) {
        print_violations(v);
        return kViolation;
    }
    const auto g = double_extend(ctx);
    const auto res = decompose(g, canonical_ideal(ctx));
    const auto again = double_extend(res.context);
    const auto iso = check_isometry(g, again, res.isometry);
    std::cout << "extend          PASS  dim " << g.dim() << "\n";
    std::cout << "decompose       PASS  a " << res.a.size() << ", h " << res.h.size() << ", I " << res.ideal.size()
              << "\n";
    std::cout << "isometry        " << (iso ? "PASS" : "FAIL  " + iso.witness->describe()) << "\n";
    std::cout << "context         " << (res.context == ctx ? "identical" : "differs") << "\n";
    return iso ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quadratic Lie superalgebras: verify, double extension, decomposition"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "Run every predicate on an algebra file");
    verify->add_option("algebra", o.input, "Algebra file")->required();

    auto* extend = app.add_subcommand("extend", "Validate a context and write its double extension");
    extend->add_option("--context", o.context, "Context file")->required();
    extend->add_option("--out", o.out, "Output file (default stdout)");

    auto* dec = app.add_subcommand("decompose", "Recover a context from an algebra and an ideal");
    dec->add_option("algebra", o.input, "Algebra file")->required();
    dec->add_option("--ideal", o.ideal, "Ideal file, or 'auto' for a central isotropic line");
    dec->add_option("--out", o.out, "Output context file (default stdout)");

    auto* cat = app.add_subcommand("catalog", "Write a worked example");
    cat->add_option("name", o.catalog_name, "odd-dim1 or heisenberg")->required()->check(
        CLI::IsMember({"odd-dim1", "heisenberg"}));
    cat->add_option("--eta", o.eta, "odd-dim1: coefficient of P(x)* in [x,x]");
    cat->add_option("--d", o.d, "odd-dim1: D(f) = d e");
    cat->add_option("--w", o.w, "odd-dim1: w = w e");
    cat->add_option("--weights", o.weights, "heisenberg: comma-separated t_i with D(e_i) = t_i e_i");
    cat->add_option("--out", o.out, "Output file (default stdout)");

    auto* rt = app.add_subcommand("roundtrip", "Extend, decompose and re-extend a context");
    rt->add_option("context", o.context, "Context file")->required();

    for (auto* sub : {verify, extend, dec, cat, rt}) sub->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*verify) return cmd_verify(o);
        if (*extend) return cmd_extend(o);
        if (*dec) return cmd_decompose(o);
        if (*cat) return cmd_catalog(o);
        return cmd_roundtrip(o);
    } catch (const InvalidContext& e) {
        print_violations(e.violations());
        return kViolation;
    } catch (const ValidationError& e) {
        std::cerr << "violation: " << e.what() << "\n";
        return kViolation;
    } catch (const DegeneratePairing& e) {
        std::cerr << "violation: " << e.what() << "\n";
        return kViolation;
    } catch (const DegenerateInput& e) {
        std::cerr << "violation: " << e.what() << "\n";
        return kViolation;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kInputError;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
}
