#include "partpoly/io.hpp"

#include <gmp.h>

#include <sstream>
#include <stdexcept>

namespace partpoly {

Json poly_to_json(const Poly& p) {
    Json coeffs = Json::array();
    for (const Rational& c : p.coeffs())
        coeffs.push_back(Json{{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
    return Json{{"degree", p.degree()}, {"coeffs", coeffs}};
}

Poly poly_from_json(const Json& j) {
    std::vector<Rational> coeffs;
    for (const Json& c : j.at("coeffs")) {
        Integer num(c.at("num").get<std::string>(), 10);
        Integer den(c.at("den").get<std::string>(), 10);
        coeffs.push_back(make_rational(num, den));
    }
    Poly p(std::move(coeffs));
    if (p.degree() != j.at("degree").get<int>())
        throw std::invalid_argument("poly_from_json: degree field disagrees with coeffs");
    return p;
}

Json table_to_json(const EtaTable& table) {
    Json arr = Json::array();
    for (int n = 0; n <= table.n_max; ++n) arr.push_back(poly_to_json(table.P(n)));
    return arr;
}

std::string sequence_csv(const ValueSequence& seq) {
    std::ostringstream out;
    out << "n,num,den\n";
    for (int n = 0; n <= seq.n_max; ++n) {
        const Rational& v = seq.values[n];
        out << n << ',' << v.get_num().get_str() << ',' << v.get_den().get_str() << '\n';
    }
    return out.str();
}

std::string float_string(const mpf_class& v, int sig_digits) {
    if (sig_digits < 1) throw std::invalid_argument("float_string: need sig_digits >= 1");
    char* s = nullptr;
    gmp_asprintf(&s, "%.*Fe", sig_digits - 1, v.get_mpf_t());
    std::string out(s);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(s, out.size() + 1);
    return out;
}

std::string root_csv_header() { return "poly_id,a,b,kind,re,im,residual,lo_num,lo_den,hi_num,hi_den"; }

std::string root_csv_row(const std::string& poly_id, int a, int b, const ComplexRoot& root,
                         const Interval* isolating, int sig_digits) {
    std::ostringstream out;
    out << poly_id << ',' << a << ',' << b << ',' << (root.is_real ? "real" : "complex") << ','
        << float_string(root.re, sig_digits) << ',' << float_string(root.im, sig_digits) << ','
        << float_string(root.residual, sig_digits) << ',';
    if (isolating != nullptr)
        out << isolating->lo.get_num().get_str() << ',' << isolating->lo.get_den().get_str() << ','
            << isolating->hi.get_num().get_str() << ',' << isolating->hi.get_den().get_str();
    else
        out << ",,,";
    return out.str();
}

}  // namespace partpoly
