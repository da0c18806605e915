#pragma once

#include "tpriordan/arrays.hpp"
#include "tpriordan/matrix.hpp"
#include "tpriordan/sequences.hpp"
#include "tpriordan/series.hpp"
#include "tpriordan/tp.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace tpr {

using Json = nlohmann::ordered_json;

/// Malformed or invalid input; the message starts with the failing field.
class InputError : public Error {
public:
    using Error::Error;
};

/// Integer literal or a "p/q" / "p" string.
Rational rational_from_json(const Json& j, std::string_view field);
/// Always a string ("p" or "p/q") so arbitrary sizes survive JSON readers.
Json rational_to_json(const Rational& r);

/// {"num":[c0,...],"den":[d0,...]}; "den" defaults to [1].
RationalGF gf_from_json(const Json& j, std::string_view field);
Json gf_to_json(const RationalGF& gf);

Json series_to_json(const TruncatedSeries& s);

struct SpecFile {
    RiordanSpec spec;
    std::optional<std::string> label;
};

/// {"g": GF, "f": GF, "label": optional string}. Accepts relaxed pairs.
SpecFile spec_from_json(const Json& j);
SpecFile load_spec_file(const std::string& path);

enum class MatrixFormat { Json, Csv, Text };
MatrixFormat parse_matrix_format(std::string_view name);

std::string render_matrix(const Matrix& m, MatrixFormat format);

/// {"verdict":"tp|not_tp","witness":{...}|null,"minors_checked":m,"max_order":r}
Json tp_report_to_json(const TPReport& r);
Json pf_certificate_to_json(const PfCertificate& c);
/// {"a":[...],"z":[...],"w":[...]}
Json production_to_json(const ProductionData& pd);

/// Human-readable polynomial, e.g. "1 - 3t + t^2".
std::string polynomial_to_string(const Polynomial& p);
/// "(num)/(den)" or just the numerator when den = 1.
std::string gf_to_string(const RationalGF& gf);

} // namespace tpr
