#pragma once

// Line-oriented documents for algebras, contexts and ideals, plus a JSON
// rendering with the same content. Serialization is canonical: entries sorted
// by index, zeros dropped, rationals reduced. Lines starting with '#' and
// blank lines are ignored on input.
//
//   algebra <name>            context                 ideal <n> <r>
//   basis <n>                 delta <0|1>             <n values>   (r rows)
//   <label> <parity>          a                       end
//   bracket <count>           <algebra document>
//   <i> <j> <k> <coef>        h
//   metric <degree> <count>   <algebra document>
//   <i> <j> <coef>            rho <i>
//   end                       <q rows of q values>
//                             lambda <i> <j> : <q values>
//                             omega <i> <j> : <p values>
//                             end

#include "qsuper/decomposition.hpp"
#include "qsuper/double_extension.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace qsuper {

enum class Format { text, json };

struct BracketEntry {
    std::size_t i, j, k;
    Scalar value;
    friend bool operator==(const BracketEntry&, const BracketEntry&) = default;
};

struct MetricEntry {
    std::size_t i, j;
    Scalar value;
    friend bool operator==(const MetricEntry&, const MetricEntry&) = default;
};

struct MetricSpec {
    Parity degree;
    std::vector<MetricEntry> entries;
    friend bool operator==(const MetricSpec&, const MetricSpec&) = default;
};

/// Unvalidated algebra as written in a file.
struct AlgebraDocument {
    std::string name;
    std::vector<BasisVector> basis;
    std::vector<BracketEntry> bracket;
    std::optional<MetricSpec> metric;
    friend bool operator==(const AlgebraDocument&, const AlgebraDocument&) = default;
};

/// Sorts entries by index and drops zeros.
inline AlgebraDocument canonicalize(AlgebraDocument doc) {
    std::erase_if(doc.bracket, [](const auto& e) { return e.value.is_zero(); });
    std::sort(doc.bracket.begin(), doc.bracket.end(),
              [](const auto& a, const auto& b) { return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k); });
    if (doc.metric) {
        auto& m = doc.metric->entries;
        std::erase_if(m, [](const auto& e) { return e.value.is_zero(); });
        std::sort(m.begin(), m.end(), [](const auto& a, const auto& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });
    }
    return doc;
}

inline AlgebraDocument to_document(const std::string& name, const SuperBracket& b) {
    AlgebraDocument doc{name, b.space().basis(), {}, std::nullopt};
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            for (std::size_t k = 0; k < b.dim(); ++k)
                if (!b.constant(i, j, k).is_zero()) doc.bracket.push_back({i, j, k, b.constant(i, j, k)});
    return doc;
}

inline AlgebraDocument to_document(const std::string& name, const LieSuperAlgebra& g) {
    return to_document(name, g.bracket());
}

inline AlgebraDocument to_document(const std::string& name, const QuadraticLieSuperAlgebra& g) {
    AlgebraDocument doc = to_document(name, g.bracket());
    MetricSpec m{g.degree(), {}};
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j)
            if (!g.metric()(i, j).is_zero()) m.entries.push_back({i, j, g.metric()(i, j)});
    doc.metric = std::move(m);
    return doc;
}

inline SuperSpace document_space(const AlgebraDocument& doc) {
    try {
        return SuperSpace(doc.basis);
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

/// Structure constants exactly as written; not validated.
inline SuperBracket document_bracket(const AlgebraDocument& doc) {
    SuperBracket b(document_space(doc));
    for (const auto& e : doc.bracket) b.constant(e.i, e.j, e.k) = e.value;
    return b;
}

inline Matrix document_metric(const AlgebraDocument& doc) {
    Matrix m(doc.basis.size(), doc.basis.size());
    if (doc.metric)
        for (const auto& e : doc.metric->entries) m(e.i, e.j) = e.value;
    return m;
}

/// Validates grading, super skew-symmetry and Jacobi. Throws ValidationError.
inline LieSuperAlgebra to_algebra(const AlgebraDocument& doc) { return LieSuperAlgebra(document_bracket(doc)); }

/// Also validates the metric. Throws ParseError when the metric is missing.
inline QuadraticLieSuperAlgebra to_quadratic(const AlgebraDocument& doc) {
    if (!doc.metric) throw ParseError(0, "algebra '" + doc.name + "' has no metric");
    const SuperSpace space = document_space(doc);
    return {LieSuperAlgebra(document_bracket(doc)), GradedBilinearForm(space, doc.metric->degree, document_metric(doc))};
}

namespace detail {

/// Cursor over significant lines, tracking 1-based line numbers.
class LineReader {
   public:
    explicit LineReader(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        std::size_t n = 0;
        while (std::getline(in, line)) {
            ++n;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            const auto first = line.find_first_not_of(" \t");
            if (first == std::string::npos || line[first] == '#') continue;
            std::istringstream ts(line);
            std::vector<std::string> tokens;
            for (std::string t; ts >> t;) tokens.push_back(t);
            lines_.push_back({n, std::move(tokens)});
        }
    }

    bool done() const { return pos_ == lines_.size(); }
    std::size_t line() const { return done() ? (lines_.empty() ? 0 : lines_.back().first) : lines_[pos_].first; }

    const std::vector<std::string>& next() {
        if (done()) throw ParseError(line(), "unexpected end of document");
        return lines_[pos_++].second;
    }

    /// Next line, which must start with `keyword` and have exactly `arity` more tokens.
    const std::vector<std::string>& expect(const std::string& keyword, std::size_t arity) {
        const auto& t = next();
        if (t.empty() || t[0] != keyword) fail("expected '" + keyword + "'");
        if (t.size() != arity + 1) fail("'" + keyword + "' takes " + std::to_string(arity) + " field(s)");
        return t;
    }

    std::string peek_keyword() const { return done() ? "" : lines_[pos_].second.front(); }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(lines_[pos_ - 1].first, message);
    }

   private:
    std::vector<std::pair<std::size_t, std::vector<std::string>>> lines_;
    std::size_t pos_ = 0;
};

inline std::size_t parse_index(LineReader& r, const std::string& token, std::size_t bound, const std::string& what) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        if (token.empty() || token[0] == '-' || token[0] == '+') throw std::invalid_argument(token);
        v = std::stoull(token, &pos);
    } catch (const std::exception&) {
        r.fail("malformed " + what + " '" + token + "'");
    }
    if (pos != token.size()) r.fail("malformed " + what + " '" + token + "'");
    if (v >= bound) r.fail(what + " " + token + " out of range (bound " + std::to_string(bound) + ")");
    return static_cast<std::size_t>(v);
}

inline Scalar parse_value(LineReader& r, const std::string& token) {
    try {
        return parse_scalar(token);
    } catch (const std::invalid_argument& e) {
        r.fail(e.what());
    }
}

inline Parity parse_parity(LineReader& r, const std::string& token) {
    if (token == "0") return Parity::even();
    if (token == "1") return Parity::odd();
    r.fail("parity must be 0 or 1, got '" + token + "'");
}

inline std::size_t parse_count(LineReader& r, const std::string& token, const std::string& what) {
    return parse_index(r, token, static_cast<std::size_t>(-1), what);
}

inline AlgebraDocument read_algebra_block(LineReader& r) {
    AlgebraDocument doc;
    doc.name = r.expect("algebra", 1)[1];
    const std::size_t n = parse_count(r, r.expect("basis", 1)[1], "dimension");
    std::set<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& t = r.next();
        if (t.size() != 2) r.fail("basis line needs '<label> <parity>'");
        if (!labels.insert(t[0]).second) r.fail("duplicate basis label '" + t[0] + "'");
        doc.basis.push_back({t[0], parse_parity(r, t[1])});
    }
    const std::size_t nb = parse_count(r, r.expect("bracket", 1)[1], "count");
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (std::size_t e = 0; e < nb; ++e) {
        const auto& t = r.next();
        if (t.size() != 4) r.fail("bracket line needs '<i> <j> <k> <coef>'");
        BracketEntry b{parse_index(r, t[0], n, "index"), parse_index(r, t[1], n, "index"),
                       parse_index(r, t[2], n, "index"), parse_value(r, t[3])};
        if (!seen.insert({b.i, b.j, b.k}).second) r.fail("duplicate bracket entry");
        doc.bracket.push_back(std::move(b));
    }
    if (r.peek_keyword() == "metric") {
        const auto t = r.expect("metric", 2);
        MetricSpec m{parse_parity(r, t[1]), {}};
        const std::size_t nm = parse_count(r, t[2], "count");
        std::set<std::pair<std::size_t, std::size_t>> mseen;
        for (std::size_t e = 0; e < nm; ++e) {
            const auto& l = r.next();
            if (l.size() != 3) r.fail("metric line needs '<i> <j> <coef>'");
            MetricEntry me{parse_index(r, l[0], n, "index"), parse_index(r, l[1], n, "index"), parse_value(r, l[2])};
            if (!mseen.insert({me.i, me.j}).second) r.fail("duplicate metric entry");
            m.entries.push_back(std::move(me));
        }
        doc.metric = std::move(m);
    }
    r.expect("end", 0);
    return canonicalize(std::move(doc));
}

inline void write_algebra_block(std::ostream& os, const AlgebraDocument& raw) {
    const AlgebraDocument doc = canonicalize(raw);
    os << "algebra " << doc.name << "\n";
    os << "basis " << doc.basis.size() << "\n";
    for (const auto& b : doc.basis) os << b.label << " " << b.parity.value() << "\n";
    os << "bracket " << doc.bracket.size() << "\n";
    for (const auto& e : doc.bracket) os << e.i << " " << e.j << " " << e.k << " " << to_string(e.value) << "\n";
    if (doc.metric) {
        os << "metric " << doc.metric->degree.value() << " " << doc.metric->entries.size() << "\n";
        for (const auto& e : doc.metric->entries) os << e.i << " " << e.j << " " << to_string(e.value) << "\n";
    }
    os << "end\n";
}

inline bool looks_like_json(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    return first != std::string::npos && text[first] == '{';
}

inline nlohmann::json parse_json(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, e.what());
    }
}

inline nlohmann::json vec_json(std::span<const Scalar> v) {
    auto a = nlohmann::json::array();
    for (const auto& s : v) a.push_back(to_string(s));
    return a;
}

/// Wraps nlohmann type errors and our own conversions in ParseError.
template <class F>
auto json_guard(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

inline Vec json_vec(const nlohmann::json& j, std::size_t expected) {
    if (!j.is_array() || j.size() != expected)
        throw ParseError(0, "expected an array of " + std::to_string(expected) + " rationals");
    Vec v;
    for (const auto& s : j) v.push_back(parse_scalar(s.get<std::string>()));
    return v;
}

inline nlohmann::json algebra_json(const AlgebraDocument& raw) {
    const AlgebraDocument doc = canonicalize(raw);
    nlohmann::json j;
    j["name"] = doc.name;
    j["basis"] = nlohmann::json::array();
    for (const auto& b : doc.basis) j["basis"].push_back({{"label", b.label}, {"parity", b.parity.value()}});
    j["bracket"] = nlohmann::json::array();
    for (const auto& e : doc.bracket) j["bracket"].push_back({e.i, e.j, e.k, to_string(e.value)});
    if (doc.metric) {
        nlohmann::json m;
        m["degree"] = doc.metric->degree.value();
        m["entries"] = nlohmann::json::array();
        for (const auto& e : doc.metric->entries) m["entries"].push_back({e.i, e.j, to_string(e.value)});
        j["metric"] = std::move(m);
    }
    return j;
}

inline Parity json_parity(const nlohmann::json& j) {
    const auto v = j.get<unsigned>();
    if (v > 1) throw ParseError(0, "parity must be 0 or 1");
    return Parity(v);
}

inline std::size_t json_index(const nlohmann::json& j, std::size_t bound) {
    const auto v = j.get<std::size_t>();
    if (v >= bound) throw ParseError(0, "index " + std::to_string(v) + " out of range");
    return v;
}

inline AlgebraDocument algebra_from_json(const nlohmann::json& j) {
    return json_guard([&] {
        AlgebraDocument doc;
        doc.name = j.at("name").get<std::string>();
        for (const auto& b : j.at("basis")) doc.basis.push_back({b.at("label").get<std::string>(), json_parity(b.at("parity"))});
        const std::size_t n = doc.basis.size();
        std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
        for (const auto& e : j.at("bracket")) {
            if (!e.is_array() || e.size() != 4) throw ParseError(0, "bracket entry needs [i, j, k, coef]");
            BracketEntry b{json_index(e[0], n), json_index(e[1], n), json_index(e[2], n), parse_scalar(e[3].get<std::string>())};
            if (!seen.insert({b.i, b.j, b.k}).second) throw ParseError(0, "duplicate bracket entry");
            doc.bracket.push_back(std::move(b));
        }
        if (j.contains("metric")) {
            const auto& m = j.at("metric");
            MetricSpec spec{json_parity(m.at("degree")), {}};
            std::set<std::pair<std::size_t, std::size_t>> mseen;
            for (const auto& e : m.at("entries")) {
                if (!e.is_array() || e.size() != 3) throw ParseError(0, "metric entry needs [i, j, coef]");
                MetricEntry me{json_index(e[0], n), json_index(e[1], n), parse_scalar(e[2].get<std::string>())};
                if (!mseen.insert({me.i, me.j}).second) throw ParseError(0, "duplicate metric entry");
                spec.entries.push_back(std::move(me));
            }
            doc.metric = std::move(spec);
        }
        return canonicalize(std::move(doc));
    });
}

inline std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace detail

// ---- algebra documents ----------------------------------------------------

inline std::string write_algebra(const AlgebraDocument& doc, Format f = Format::text) {
    if (f == Format::json) return detail::dump(detail::algebra_json(doc));
    std::ostringstream os;
    detail::write_algebra_block(os, doc);
    return os.str();
}

/// Accepts either format. Throws ParseError with the offending line.
inline AlgebraDocument read_algebra(const std::string& text) {
    if (detail::looks_like_json(text)) return detail::algebra_from_json(detail::parse_json(text));
    detail::LineReader r(text);
    auto doc = detail::read_algebra_block(r);
    if (!r.done()) {
        r.next();
        r.fail("trailing content after 'end'");
    }
    return doc;
}

/// Parses and fully validates a quadratic algebra.
inline QuadraticLieSuperAlgebra parse_algebra(const std::string& text) { return to_quadratic(read_algebra(text)); }

// ---- context documents ----------------------------------------------------

namespace detail {

inline nlohmann::json context_json(const DeltaContext& c) {
    nlohmann::json j;
    j["delta"] = c.delta.value();
    j["a"] = algebra_json(to_document("a", c.a));
    j["h"] = algebra_json(to_document("h", c.h));
    j["rho"] = nlohmann::json::array();
    for (std::size_t x = 0; x < c.rho.size(); ++x) {
        if (c.rho[x].is_zero()) continue;
        auto rows = nlohmann::json::array();
        for (std::size_t r = 0; r < c.rho[x].rows(); ++r) rows.push_back(vec_json(c.rho[x].row(r)));
        j["rho"].push_back({{"index", x}, {"matrix", rows}});
    }
    auto pairs = [&](const BilinearTable& t) {
        auto out = nlohmann::json::array();
        for (std::size_t x = 0; x < t.left_dim(); ++x)
            for (std::size_t y = 0; y < t.right_dim(); ++y)
                if (!is_zero(t.at(x, y))) out.push_back({{"i", x}, {"j", y}, {"value", vec_json(t.at(x, y))}});
        return out;
    };
    j["lambda"] = pairs(c.lambda);
    j["omega"] = pairs(c.omega);
    return j;
}

inline DeltaContext build_context(Parity delta, const AlgebraDocument& a_doc, const AlgebraDocument& h_doc) {
    if (a_doc.metric) throw ParseError(0, "the algebra a carries no metric");
    auto a = to_algebra(a_doc);
    auto h = to_quadratic(h_doc);
    return DeltaContext::trivial(delta, std::move(a), std::move(h));
}

inline DeltaContext context_from_json(const nlohmann::json& j) {
    return json_guard([&] {
        const auto delta = json_parity(j.at("delta"));
        DeltaContext c = build_context(delta, algebra_from_json(j.at("a")), algebra_from_json(j.at("h")));
        const std::size_t p = c.a.dim(), q = c.h.dim();
        std::set<std::size_t> rho_seen;
        for (const auto& e : j.at("rho")) {
            const auto x = json_index(e.at("index"), p);
            if (!rho_seen.insert(x).second) throw ParseError(0, "duplicate rho entry");
            const auto& rows = e.at("matrix");
            if (!rows.is_array() || rows.size() != q) throw ParseError(0, "rho matrix needs " + std::to_string(q) + " rows");
            for (std::size_t r = 0; r < q; ++r) {
                const Vec row = json_vec(rows[r], q);
                for (std::size_t k = 0; k < q; ++k) c.rho[x](r, k) = row[k];
            }
        }
        auto pairs = [&](const char* key, BilinearTable& t) {
            std::set<std::pair<std::size_t, std::size_t>> seen;
            for (const auto& e : j.at(key)) {
                const auto x = json_index(e.at("i"), p), y = json_index(e.at("j"), p);
                if (!seen.insert({x, y}).second) throw ParseError(0, std::string("duplicate ") + key + " entry");
                t.set(x, y, json_vec(e.at("value"), t.target_dim()));
            }
        };
        pairs("lambda", c.lambda);
        pairs("omega", c.omega);
        return c;
    });
}

}  // namespace detail

inline std::string write_context(const DeltaContext& c, Format f = Format::text) {
    if (f == Format::json) return detail::dump(detail::context_json(c));
    std::ostringstream os;
    os << "context\n";
    os << "delta " << c.delta.value() << "\n";
    os << "a\n";
    detail::write_algebra_block(os, to_document("a", c.a));
    os << "h\n";
    detail::write_algebra_block(os, to_document("h", c.h));
    auto values = [&](std::span<const Scalar> v) {
        for (std::size_t k = 0; k < v.size(); ++k) os << (k ? " " : "") << to_string(v[k]);
        os << "\n";
    };
    for (std::size_t x = 0; x < c.rho.size(); ++x) {
        if (c.rho[x].is_zero()) continue;
        os << "rho " << x << "\n";
        for (std::size_t r = 0; r < c.rho[x].rows(); ++r) values(c.rho[x].row(r));
    }
    auto pairs = [&](const char* key, const BilinearTable& t) {
        for (std::size_t x = 0; x < t.left_dim(); ++x)
            for (std::size_t y = 0; y < t.right_dim(); ++y)
                if (!is_zero(t.at(x, y))) {
                    os << key << " " << x << " " << y << " :" << (t.target_dim() ? " " : "");
                    values(t.at(x, y));
                }
    };
    pairs("lambda", c.lambda);
    pairs("omega", c.omega);
    os << "end\n";
    return os.str();
}

/// Parses a context. a must be a Lie superalgebra and h a quadratic one;
/// the context axioms themselves are left to validate_context.
inline DeltaContext read_context(const std::string& text) {
    if (detail::looks_like_json(text)) return detail::context_from_json(detail::parse_json(text));
    detail::LineReader r(text);
    r.expect("context", 0);
    const Parity delta = detail::parse_parity(r, r.expect("delta", 1)[1]);
    r.expect("a", 0);
    const auto a_doc = detail::read_algebra_block(r);
    r.expect("h", 0);
    const auto h_doc = detail::read_algebra_block(r);
    DeltaContext c = [&] {
        try {
            return detail::build_context(delta, a_doc, h_doc);
        } catch (const ParseError& e) {
            throw ParseError(r.line(), e.what());
        }
    }();
    const std::size_t p = c.a.dim(), q = c.h.dim();

    std::set<std::size_t> rho_seen;
    std::set<std::pair<std::size_t, std::size_t>> lambda_seen, omega_seen;
    for (;;) {
        const auto t = r.next();
        if (t[0] == "end") {
            if (t.size() != 1) r.fail("'end' takes no fields");
            break;
        }
        if (t[0] == "rho") {
            if (t.size() != 2) r.fail("'rho' takes 1 field(s)");
            const auto x = detail::parse_index(r, t[1], p, "index");
            if (!rho_seen.insert(x).second) r.fail("duplicate rho entry");
            for (std::size_t row = 0; row < q; ++row) {
                const auto& l = r.next();
                if (l.size() != q) r.fail("rho row needs " + std::to_string(q) + " values");
                for (std::size_t k = 0; k < q; ++k) c.rho[x](row, k) = detail::parse_value(r, l[k]);
            }
        } else if (t[0] == "lambda" || t[0] == "omega") {
            const bool is_lambda = t[0] == "lambda";
            BilinearTable& table = is_lambda ? c.lambda : c.omega;
            const std::size_t width = table.target_dim();
            if (t.size() != 4 + width || t[3] != ":")
                r.fail("'" + t[0] + "' line needs '<i> <j> : <" + std::to_string(width) + " values>'");
            const auto x = detail::parse_index(r, t[1], p, "index"), y = detail::parse_index(r, t[2], p, "index");
            if (!(is_lambda ? lambda_seen : omega_seen).insert({x, y}).second) r.fail("duplicate " + t[0] + " entry");
            for (std::size_t k = 0; k < width; ++k) table(x, y, k) = detail::parse_value(r, t[4 + k]);
        } else {
            r.fail("unexpected '" + t[0] + "'");
        }
    }
    if (!r.done()) {
        r.next();
        r.fail("trailing content after 'end'");
    }
    return c;
}

// ---- ideal documents ------------------------------------------------------

struct IdealDocument {
    std::size_t ambient_dim = 0;
    IdealSpec ideal;
};

inline std::string write_ideal(const IdealDocument& d, Format f = Format::text) {
    if (f == Format::json) {
        nlohmann::json j;
        j["dim"] = d.ambient_dim;
        j["vectors"] = nlohmann::json::array();
        for (const auto& v : d.ideal.basis) j["vectors"].push_back(detail::vec_json(v));
        return detail::dump(j);
    }
    std::ostringstream os;
    os << "ideal " << d.ambient_dim << " " << d.ideal.basis.size() << "\n";
    for (const auto& v : d.ideal.basis) {
        for (std::size_t k = 0; k < v.size(); ++k) os << (k ? " " : "") << to_string(v[k]);
        os << "\n";
    }
    os << "end\n";
    return os.str();
}

inline IdealDocument read_ideal(const std::string& text) {
    if (detail::looks_like_json(text)) {
        const auto j = detail::parse_json(text);
        return detail::json_guard([&] {
            IdealDocument d{j.at("dim").get<std::size_t>(), {}};
            for (const auto& v : j.at("vectors")) d.ideal.basis.push_back(detail::json_vec(v, d.ambient_dim));
            return d;
        });
    }
    detail::LineReader r(text);
    const auto t = r.expect("ideal", 2);
    IdealDocument d{detail::parse_count(r, t[1], "dimension"), {}};
    const std::size_t count = detail::parse_count(r, t[2], "count");
    for (std::size_t k = 0; k < count; ++k) {
        const auto& l = r.next();
        if (l.size() != d.ambient_dim) r.fail("ideal vector needs " + std::to_string(d.ambient_dim) + " values");
        Vec v;
        for (const auto& s : l) v.push_back(detail::parse_value(r, s));
        d.ideal.basis.push_back(std::move(v));
    }
    r.expect("end", 0);
    if (!r.done()) {
        r.next();
        r.fail("trailing content after 'end'");
    }
    return d;
}

}  // namespace qsuper
