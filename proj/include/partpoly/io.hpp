#pragma once

#include <string>

#include "partpoly/eta.hpp"
#include "partpoly/poly.hpp"
#include "partpoly/report.hpp"
#include "partpoly/roots.hpp"

namespace partpoly {

/// {"degree": d, "coeffs": [{"num": "...", "den": "..."}, ...]} with index =
/// power. Numerals travel as decimal strings so any JSON reader survives them.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

/// JSON array of the polynomial forms P_0 .. P_{n_max}.
Json table_to_json(const EtaTable& table);

/// CSV "n,num,den" with a header row.
std::string sequence_csv(const ValueSequence& seq);

/// Scientific-notation decimal with sig_digits significant digits.
std::string float_string(const mpf_class& v, int sig_digits);

/// Root CSV columns: poly_id,a,b,kind,re,im,residual,lo_num,lo_den,hi_num,hi_den.
/// Real rows carry their isolating interval; complex rows leave it blank.
std::string root_csv_header();
std::string root_csv_row(const std::string& poly_id, int a, int b, const ComplexRoot& root,
                         const Interval* isolating, int sig_digits);

}  // namespace partpoly
