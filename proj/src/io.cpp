#include "tpriordan/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace tpr {

namespace {

std::string joined(std::string_view a, std::string_view b) {
    std::string out(a);
    out += b;
    return out;
}

Polynomial polynomial_from_json(const Json& j, std::string_view field) {
    if (!j.is_array()) {
        throw InputError(std::string(field) + ": expected an array of coefficients");
    }
    std::vector<Rational> coeffs;
    for (std::size_t k = 0; k < j.size(); ++k) {
        coeffs.push_back(rational_from_json(j[k], joined(field, "[" + std::to_string(k) + "]")));
    }
    return Polynomial(std::move(coeffs));
}

Json polynomial_to_json(const Polynomial& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) {
        out.push_back(rational_to_json(c));
    }
    return out;
}

} // namespace

Rational rational_from_json(const Json& j, std::string_view field) {
    if (j.is_number_integer()) {
        return Rational(Integer(j.dump()));
    }
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const Error& e) {
            throw InputError(std::string(field) + ": " + e.what());
        }
    }
    throw InputError(std::string(field) + ": expected an integer or a \"p/q\" string");
}

Json rational_to_json(const Rational& r) {
    return to_string(r);
}

RationalGF gf_from_json(const Json& j, std::string_view field) {
    if (!j.is_object()) {
        throw InputError(std::string(field) + ": expected an object with \"num\" and \"den\"");
    }
    if (!j.contains("num")) {
        throw InputError(std::string(field) + ".num: missing");
    }
    auto num = polynomial_from_json(j.at("num"), joined(field, ".num"));
    Polynomial den{Rational(1)};
    if (j.contains("den")) {
        den = polynomial_from_json(j.at("den"), joined(field, ".den"));
    }
    if (den[0] == 0) {
        throw InputError(std::string(field) + ".den: non-expandable generating function (den(0) = 0)");
    }
    try {
        return RationalGF(std::move(num), std::move(den));
    } catch (const InputError&) {
        throw;
    } catch (const Error& e) {
        throw InputError(std::string(field) + ": " + e.what());
    }
}

Json gf_to_json(const RationalGF& gf) {
    return Json{{"num", polynomial_to_json(gf.num())}, {"den", polynomial_to_json(gf.den())}};
}

Json series_to_json(const TruncatedSeries& s) {
    Json out = Json::array();
    for (const auto& c : s.coeffs()) {
        out.push_back(rational_to_json(c));
    }
    return out;
}

SpecFile spec_from_json(const Json& j) {
    if (!j.is_object()) {
        throw InputError("spec: expected a JSON object");
    }
    for (const char* key : {"g", "f"}) {
        if (!j.contains(key)) {
            throw InputError(std::string(key) + ": missing");
        }
    }
    auto g = gf_from_json(j.at("g"), "g");
    auto f = gf_from_json(j.at("f"), "f");
    if (g.constant_term() <= 0) {
        throw InputError("g: g(0) must be positive (got " + to_string(g.constant_term()) + ")");
    }
    if (f.is_zero() || f.constant_term() != 0) {
        throw InputError("f: f must be a nonzero series with f(0) = 0");
    }
    std::optional<std::string> label;
    if (j.contains("label")) {
        if (!j.at("label").is_string()) {
            throw InputError("label: expected a string");
        }
        label = j.at("label").get<std::string>();
    }
    return {RiordanSpec::relaxed(std::move(g), std::move(f)), std::move(label)};
}

SpecFile load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("spec: cannot open '" + path + "'");
    }
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("spec: invalid JSON in '" + path + "': " + e.what());
    }
    return spec_from_json(j);
}

MatrixFormat parse_matrix_format(std::string_view name) {
    if (name == "json") {
        return MatrixFormat::Json;
    }
    if (name == "csv") {
        return MatrixFormat::Csv;
    }
    if (name == "text") {
        return MatrixFormat::Text;
    }
    throw InputError("format: expected json, csv or text");
}

std::string render_matrix(const Matrix& m, MatrixFormat format) {
    std::ostringstream out;
    switch (format) {
    case MatrixFormat::Json: {
        Json rows = Json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Json row = Json::array();
            for (const auto& v : m.row(i)) {
                row.push_back(rational_to_json(v));
            }
            rows.push_back(std::move(row));
        }
        out << rows.dump() << '\n';
        break;
    }
    case MatrixFormat::Csv:
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                out << (j ? "," : "") << to_string(m(i, j));
            }
            out << '\n';
        }
        break;
    case MatrixFormat::Text: {
        std::vector<std::size_t> width(m.cols(), 1);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                width[j] = std::max(width[j], to_string(m(i, j)).size());
            }
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                const auto s = to_string(m(i, j));
                out << (j ? "  " : "") << std::string(width[j] - s.size(), ' ') << s;
            }
            out << '\n';
        }
        break;
    }
    }
    return out.str();
}

Json tp_report_to_json(const TPReport& r) {
    Json out;
    out["verdict"] = r.is_tp() ? "tp" : "not_tp";
    if (r.witness) {
        out["witness"] = Json{{"rows", r.witness->rows},
                              {"cols", r.witness->cols},
                              {"value", rational_to_json(r.witness->value)}};
    } else {
        out["witness"] = nullptr;
    }
    out["minors_checked"] = r.minors_checked;
    out["max_order"] = r.max_order_checked;
    return out;
}

Json pf_certificate_to_json(const PfCertificate& c) {
    return Json{{"is_pf", c.is_pf},
                {"constant", rational_to_json(c.constant)},
                {"shift", c.shift},
                {"numerator_roots_real_nonpositive", c.numerator_roots_real_nonpositive},
                {"denominator_roots_real_positive", c.denominator_roots_real_positive},
                {"coefficients_nonnegative", c.coefficients_nonnegative},
                {"reason", c.reason}};
}

Json production_to_json(const ProductionData& pd) {
    Json out{{"a", series_to_json(pd.a)}, {"z", series_to_json(pd.z)}};
    out["w"] = pd.source == ProductionSource::Quasi ? series_to_json(pd.w) : Json::array();
    return out;
}

std::string polynomial_to_string(const Polynomial& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        Rational c = p.coeffs()[k];
        if (c == 0) {
            continue;
        }
        const bool negative = c < 0;
        if (negative) {
            c = -c;
        }
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        const bool unit = c == 1 && k > 0;
        if (!unit) {
            out += to_string(c);
        }
        if (k >= 1) {
            out += "t";
        }
        if (k >= 2) {
            out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::string gf_to_string(const RationalGF& gf) {
    if (gf.den() == Polynomial{Rational(1)}) {
        return polynomial_to_string(gf.num());
    }
    auto num = polynomial_to_string(gf.num());
    const auto& c = gf.num().coeffs();
    if (std::count_if(c.begin(), c.end(), [](const Rational& x) { return x != 0; }) > 1) {
        num = "(" + num + ")";
    }
    return num + "/(" + polynomial_to_string(gf.den()) + ")";
}

} // namespace tpr
