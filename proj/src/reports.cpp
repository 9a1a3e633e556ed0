#include "gammaq/reports.hpp"

#include <sstream>

namespace gammaq {

namespace {

std::string half_exp_string(long half_units) {
    return HalfInteger::from_twice(Integer(half_units)).to_string();
}

int report_digits(mpfr_prec_t prec) {
    return std::max(6, static_cast<int>(static_cast<double>(prec) * 0.30103));
}

} // namespace

Json const_expr_json(const ConstExpr& e) {
    Json arr = Json::array();
    const auto& terms = e.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [m, c] = *it;
        Json zeta = Json::object();
        for (const auto& [k, ex] : m.zeta) zeta[std::to_string(k)] = ex;
        arr.push_back(Json{{"coeff", c.to_string()},
                           {"gamma", m.gamma_exp},
                           {"log2", m.log2_exp},
                           {"pi_half", m.pi_half_exp},
                           {"zeta", zeta}});
    }
    return arr;
}

Json pi_vector_json(const PiVector& v) {
    Json arr = Json::array();
    for (const auto& [exp_half, c] : v.entries)
        arr.push_back(Json{{"pi_exp", half_exp_string(exp_half)}, {"coeff", c.to_string()}});
    return arr;
}

Json certificate_json(const CertificateReport& rep, const std::string& command) {
    Json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["command"] = command;
    doc["q"] = rep.q.to_string();
    doc["xi"] = rep.xi.to_string();
    doc["m"] = rep.m;
    doc["jmax"] = rep.jmax;
    doc["pass"] = rep.pass;
    doc["rows_equal"] = rep.rows_equal;
    doc["triangular"] = rep.triangular;
    doc["all_leading_nonzero"] = rep.all_leading_nonzero;
    Json rows = Json::array();
    for (std::size_t j = 0; j <= rep.jmax; ++j) {
        Json row;
        row["j"] = j;
        row["eq5"] = pi_vector_json(rep.rows[j]);
        row["eq6"] = const_expr_json(rep.rows_cauchy[j]);
        const auto& le = rep.leading[j];
        row["leading"] = Json{{"pi_exp", half_exp_string(le.pi_exp_half)},
                              {"coeff", le.coeff.to_string()},
                              {"expected_pi_exp", half_exp_string(le.expected_exp_half)},
                              {"expected_coeff", le.expected.to_string()},
                              {"nonzero", le.nonzero}};
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    Json failures = Json::array();
    for (const auto& f : rep.failures)
        failures.push_back(Json{{"j", f.j}, {"kind", f.kind}, {"detail", f.detail}});
    doc["failures"] = std::move(failures);
    return doc;
}

Json theorem2_json(const Theorem2Report& rep) {
    const int digits = report_digits(rep.prec);
    Json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["command"] = "verify2";
    doc["q"] = rep.q.to_string();
    doc["jmax"] = rep.jmax;
    doc["prec"] = static_cast<long>(rep.prec);
    doc["guard"] = rep.guard;
    doc["pass"] = rep.pass;
    doc["nonzero_count"] = rep.nonzero_count;
    doc["nonzero_tolerance_log2"] = -static_cast<long>(rep.prec) / 2;
    doc["infinitude_note"] =
        "non-vanishing of d_j is sampled up to jmax only; no finite run can decide the "
        "infinitude claim";
    Json rows = Json::array();
    for (const auto& r : rep.rows) {
        rows.push_back(Json{{"j", r.j},
                            {"eq7_lhs", r.lhs.decimal(digits)},
                            {"eq7_rhs", r.rhs.decimal(digits)},
                            {"agree_bits", r.agree_bits},
                            {"pass", r.pass},
                            {"d_nonzero", r.d_nonzero}});
    }
    doc["rows"] = std::move(rows);
    return doc;
}

std::string certificate_text(const CertificateReport& rep) {
    std::ostringstream os;
    os << "theorem1 certificate  q=" << rep.q << "  xi=" << rep.xi << "  m=" << rep.m
       << "  jmax=" << rep.jmax << "\n";
    for (std::size_t j = 0; j <= rep.jmax; ++j) {
        const auto& le = rep.leading[j];
        os << "  j=" << j << ": c = " << rep.rows[j].to_string() << "\n"
           << "        leading p^" << half_exp_string(le.pi_exp_half) << " coeff " << le.coeff
           << " (expected " << le.expected << ")\n";
    }
    os << "  rows_equal=" << (rep.rows_equal ? "yes" : "no")
       << " triangular=" << (rep.triangular ? "yes" : "no")
       << " all_leading_nonzero=" << (rep.all_leading_nonzero ? "yes" : "no") << "\n";
    for (const auto& f : rep.failures)
        os << "  FAIL j=" << f.j << " [" << f.kind << "] " << f.detail << "\n";
    os << (rep.pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string theorem2_text(const Theorem2Report& rep) {
    const int digits = 24;
    std::ostringstream os;
    os << "theorem2 reflection check  q=" << rep.q << "  jmax=" << rep.jmax
       << "  prec=" << rep.prec << "\n";
    for (const auto& r : rep.rows) {
        os << "  j=" << r.j << ": lhs=" << r.lhs.decimal(digits) << " rhs=" << r.rhs.decimal(digits)
           << " agree_bits=" << r.agree_bits << (r.pass ? "" : "  MISMATCH")
           << (r.d_nonzero ? "" : "  d~0") << "\n";
    }
    os << "  nonzero d count: " << rep.nonzero_count << " of " << rep.rows.size()
       << " (sampled up to jmax only)\n";
    os << (rep.pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

} // namespace gammaq
