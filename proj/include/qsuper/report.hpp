#pragma once

// Full predicate report on an unvalidated algebra document.

#include "qsuper/io.hpp"

#include <cstddef>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace qsuper {

struct ReportLine {
    std::string check;
    bool pass;
    std::string detail;
};

struct VerifyReport {
    std::vector<ReportLine> lines;

    bool ok() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }

    std::string str() const {
        std::ostringstream os;
        for (const auto& l : lines) {
            os << std::left << std::setw(16) << l.check << (l.pass ? "PASS" : "FAIL");
            if (!l.detail.empty()) os << "  " << l.detail;
            os << "\n";
        }
        return os.str();
    }
};

/// Runs grading, super skew-symmetry and Jacobi, then (with a metric) the
/// declared degree, super-symmetry, invariance and rank. Every check runs even
/// after an earlier failure.
inline VerifyReport verify_document(const AlgebraDocument& doc) {
    VerifyReport rep;
    auto add = [&](const std::string& name, const CheckResult& r, std::string pass_detail = {}) {
        rep.lines.push_back({name, r.ok(), r.ok() ? std::move(pass_detail) : r.witness->describe()});
    };
    const SuperBracket b = document_bracket(doc);
    add("grading", check_grading(b));
    add("super-skew", check_super_skew(b));
    add("jacobi", check_jacobi(b));
    if (!doc.metric) return rep;

    const Matrix m = document_metric(doc);
    const std::string degree = "degree " + std::to_string(doc.metric->degree.value());
    add("degree", check_form_pattern(b.space(), doc.metric->degree, m), degree);
    add("super-symmetry", check_supersymmetry(b.space(), m));
    add("invariance", check_invariance(m, b));
    const std::size_t r = rank(m);
    rep.lines.push_back({"rank", r == m.rows(), std::to_string(r) + "/" + std::to_string(m.rows())});
    return rep;
}

}  // namespace qsuper
