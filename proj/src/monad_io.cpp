#include "flaglab/monad_io.hpp"

#include <sstream>
#include <stdexcept>

namespace flaglab::monad {

namespace {

using nlohmann::json;

json matrix_json(const Matrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Rational rational_json(const json& v)
{
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(Integer(v.get<long>()));
    throw std::invalid_argument("monad json: expected a rational string");
}

Matrix json_matrix(const json& rows, std::size_t nr, std::size_t nc, const char* what)
{
    if (!rows.is_array() || rows.size() != nr) throw std::invalid_argument(std::string("monad json: bad ") + what);
    Matrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        if (!rows[i].is_array() || rows[i].size() != nc)
            throw std::invalid_argument(std::string("monad json: bad ") + what);
        for (std::size_t j = 0; j < nc; ++j) m(i, j) = rational_json(rows[i][j]);
    }
    return m;
}

}  // namespace

nlohmann::json to_json(const MonadData& m)
{
    json j;
    j["charge"] = m.k;
    if (m.J == standard_form(m.dim_w())) j["J"] = "standard";
    else j["J"] = matrix_json(m.J);
    j["x_columns"] = json::array();
    j["y_columns"] = json::array();
    for (const auto& c : m.x_columns) j["x_columns"].push_back(matrix_json(c));
    for (const auto& c : m.y_columns) j["y_columns"].push_back(matrix_json(c));
    return j;
}

MonadData monad_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("charge") || !j["charge"].is_number_integer())
        throw std::invalid_argument("monad json: missing integer \"charge\"");
    MonadData m;
    m.k = j["charge"].get<int>();
    if (m.k < 1) throw std::invalid_argument("monad json: charge must be positive");
    const std::size_t n = m.dim_w(), k = static_cast<std::size_t>(m.k);
    const json jj = j.value("J", json("standard"));
    if (jj.is_string()) {
        if (jj.get<std::string>() != "standard") throw std::invalid_argument("monad json: unknown J");
        m.J = standard_form(n);
    } else {
        m.J = json_matrix(jj, n, n, "J");
    }
    for (const char* side : {"x_columns", "y_columns"}) {
        if (!j.contains(side) || !j[side].is_array() || j[side].size() != k)
            throw std::invalid_argument(std::string("monad json: expected ") + std::to_string(k) + " " + side);
        for (const auto& c : j[side])
            (side[0] == 'x' ? m.x_columns : m.y_columns).push_back(json_matrix(c, n, 3, side));
    }
    check_shape(m);
    return m;
}

nlohmann::json report_json(const ValidationReport& r)
{
    json j;
    j["valid"] = r.ok();
    j["exact_check"] = r.exact_ok;
    if (r.exact_witness) {
        const auto& w = *r.exact_witness;
        j["exact_witness"] = {{"block", {w.i, w.j}}, {"bidegree", {w.a, w.b}}, {"form", w.form}};
    }
    j["samples"] = r.samples;
    j["rank_failures"] = r.rank_failures;
    if (r.rank_witness)
        j["rank_witness"] = {{"x", projective_string(r.rank_witness->x)}, {"y", projective_string(r.rank_witness->y)}};
    j["h0"] = r.h0;
    j["h1"] = r.h1;
    j["section_rank"] = r.section_rank;
    j["failures"] = r.failures();
    return j;
}

std::string projective_string(const Vector& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ":" : "") + v[i].get_str();
    return s;
}

std::string scan_csv(const ScanResult& r)
{
    std::ostringstream os;
    os << "s_index,p_x,p_y,q_x,q_y,s\n";
    for (const auto& row : r.rows)
        os << row.index << ',' << projective_string(row.p.x) << ',' << projective_string(row.p.y) << ','
           << projective_string(row.q.x) << ',' << projective_string(row.q.y) << ',' << row.s << '\n';
    return os.str();
}

}  // namespace flaglab::monad
