#include "flaglab/cli.hpp"

#include "flaglab/chow.hpp"
#include "flaglab/curves.hpp"
#include "flaglab/delpezzo.hpp"
#include "flaglab/graded.hpp"
#include "flaglab/moduli.hpp"
#include "flaglab/monad.hpp"
#include "flaglab/monad_io.hpp"
#include "flaglab/rng.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace flaglab::cli {

namespace {

using nlohmann::json;

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Failure("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Failure(path + ": " + e.what());
    }
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Failure("cannot write " + path);
    out << text;
    if (!out) throw Failure("cannot write " + path);
}

json cohomology_json(const graded::CohomologyTable& t)
{
    json j;
    for (int i = 0; i < 4; ++i) j["h" + std::to_string(i)] = t.h[static_cast<std::size_t>(i)].get_si();
    return j;
}

Matrix matrix_from_json(const json& j)
{
    std::vector<Rational> flat;
    auto value = [](const json& v) {
        if (v.is_string()) return parse_rational(v.get<std::string>());
        if (v.is_number_integer()) return Rational(Integer(v.get<long>()));
        throw std::invalid_argument("matrix entries must be rational strings");
    };
    const json& m = j.is_object() && j.contains("matrix") ? j["matrix"] : j;
    if (!m.is_array()) throw std::invalid_argument("matrix: expected an array");
    for (const auto& e : m) {
        if (e.is_array())
            for (const auto& f : e) flat.push_back(value(f));
        else
            flat.push_back(value(e));
    }
    if (flat.size() != 9) throw std::invalid_argument("matrix: expected 9 entries");
    Matrix a(3, 3);
    for (std::size_t i = 0; i < 9; ++i) a(i / 3, i % 3) = flat[i];
    return a;
}

json vector_json(const Vector& v)
{
    json a = json::array();
    for (const auto& q : v) a.push_back(to_string(q));
    return a;
}

json delpezzo_json(const Matrix& raw)
{
    const delpezzo::DelPezzoMatrix m = delpezzo::normalize(raw);
    const delpezzo::DelPezzoClass c = delpezzo::classify(m);
    json j;
    j["kind"] = delpezzo::kind_name(c.kind);
    j["boundary_flag"] = c.boundary_flag;
    j["fiber_count"] = c.fiber_count;
    json eig = json::array();
    for (const auto& f : c.eigen) {
        json e{{"factor", f.factor.to_string()}, {"algebraic", f.algebraic}};
        if (f.value) e["value"] = to_string(*f.value);
        if (f.geometric) e["geometric"] = *f.geometric;
        eig.push_back(e);
    }
    j["eigen_summary"] = eig;
    json norm = json::array();
    for (std::size_t r = 0; r < 3; ++r) norm.push_back(vector_json(m.a.row(r)));
    j["normalized_matrix"] = norm;
    if (c.point) j["point"] = vector_json(*c.point);
    if (c.line) j["line"] = vector_json(*c.line);
    if (c.kind != delpezzo::Kind::ReducibleConicSmooth && c.kind != delpezzo::Kind::ReducibleConicDegenerate) {
        const delpezzo::PointScheme s = delpezzo::blown_up_points(m);
        json pts = json::array();
        for (const auto& p : s.points) {
            json q{{"minimal_polynomial", p.minimal_polynomial.to_string()}, {"multiplicity", p.multiplicity}};
            json coords = json::array();
            for (const auto& c2 : p.coords) coords.push_back(c2.to_string("theta"));
            q["coordinates"] = coords;
            if (p.rational_point) q["point"] = vector_json(*p.rational_point);
            pts.push_back(q);
        }
        j["blown_up_points"] = {{"pattern", s.pattern()}, {"orbits", pts}};
    }
    return j;
}

std::string csv_field(const std::string& s)
{
    return s.find_first_of(",\"") == std::string::npos ? s : "\"" + s + "\"";
}

json curves_json(long k, std::string* csv)
{
    const auto all = curves::enumerate_multi_indices(k);
    json rows = json::array();
    std::ostringstream os;
    os << "parts,ell,genus,h0_normal,special_class\n";
    for (const auto& m : all) {
        const auto cfg = curves::reduced_configuration(m);
        const long g = curves::genus(cfg);
        const long h0 = curves::normal_bundle_cohomology(cfg).h0;
        const std::string special = curves::special_name(curves::classify_special_config(m));
        rows.push_back({{"parts", m.parts}, {"ell", m.ell()}, {"genus", g}, {"h0_normal", h0}, {"special_class", special}});
        os << csv_field(m.to_string()) << ',' << m.ell() << ',' << g << ',' << h0 << ',' << special << '\n';
    }
    if (csv) *csv = os.str();
    return {{"charge", k}, {"count", all.size()}, {"rows", rows}};
}

json moduli_json(long max_k, std::string* csv)
{
    json rows = json::array();
    std::ostringstream os;
    os << "k,ext1,dim_MI_s_prime,dim_MI_s_doubleprime,dim_MI_i,component_lower_bound,elliptic_family\n";
    for (long k = 1; k <= max_k; ++k) {
        const moduli::ModuliTable t = moduli::dimension_table(k);
        const long ell = moduli::elliptic_family_dimension(k);
        json r{{"k", k}, {"ext1", t.ext1}, {"elliptic_family", ell}};
        auto opt = [](const std::optional<long>& v) { return v ? std::to_string(*v) : std::string(); };
        if (t.exceptional) {
            r["exceptional"] = "every charge-1 instanton is special";
        } else {
            r["dim_MI_s_prime"] = *t.dim_MI_s_prime;
            r["dim_MI_s_doubleprime"] = *t.dim_MI_s_doubleprime;
            r["dim_MI_i"] = *t.dim_MI_i;
            r["component_lower_bound"] = *t.component_lower_bound;
        }
        rows.push_back(r);
        os << k << ',' << t.ext1 << ',' << opt(t.dim_MI_s_prime) << ',' << opt(t.dim_MI_s_doubleprime) << ','
           << opt(t.dim_MI_i) << ',' << opt(t.component_lower_bound) << ',' << ell << '\n';
    }
    if (csv) *csv = os.str();
    return {{"rows", rows}};
}

json path_json(const moduli::PathWitness& w)
{
    json j{{"samples", w.t_samples.size()},
           {"min_abs_lower_bound", w.min_abs_lower},
           {"nonvanishing", w.nonvanishing},
           {"imaginary_part_nonzero", w.imaginary_nonzero},
           {"endpoints_exact", w.endpoints_exact},
           {"endpoint_swap_verified", w.endpoint_swap_verified}};
    json exact = json::array();
    for (std::size_t i = 0; i < w.t_samples.size(); ++i)
        if (w.h_values[i].exact)
            exact.push_back({{"t", to_string(w.t_samples[i])}, {"re", w.h_values[i].re}, {"im", w.h_values[i].im}});
    j["exact_values"] = exact;
    return j;
}

// Fast invariant checks across all modules.
json selftest(bool& ok)
{
    std::vector<std::pair<std::string, std::function<bool()>>> checks;
    checks.emplace_back("basis counts", [] {
        for (int a = 0; a <= 6; ++a)
            for (int b = 0; b <= 6; ++b)
                if (graded::basis(a, b)->size() != graded::basis_size_closed_form(a, b)) return false;
        return true;
    });
    checks.emplace_back("line bundle Riemann-Roch", [] {
        for (long a = -6; a <= 6; ++a)
            for (long b = -6; b <= 6; ++b)
                if (Rational(graded::line_bundle_cohomology(a, b).euler()) != chow::line_bundle_rr(a, b)) return false;
        return true;
    });
    checks.emplace_back("resolution euler characteristics", [] {
        using graded::Neighborhood;
        bool good = graded::complex_euler(graded::neighborhood_resolution(Neighborhood::Line)) == 1 &&
                    graded::complex_euler(graded::neighborhood_resolution(Neighborhood::Conic)) == 1 &&
                    graded::complex_euler(graded::neighborhood_resolution(Neighborhood::LineFirstNeighborhood)) == 3;
        for (long a = 1; a <= 5; ++a)
            good = good && graded::complex_euler(graded::neighborhood_resolution(Neighborhood::FirstNeighborhood, a)) == 3 - 2 * a;
        for (long m = 1; m <= 5; ++m)
            good = good && graded::complex_euler(graded::neighborhood_resolution(Neighborhood::LineThick, m)) == m;
        return good;
    });
    checks.emplace_back("del Pezzo crafted cases", [] {
        using delpezzo::Kind;
        const std::vector<std::pair<Matrix, Kind>> cases = {
            {Matrix{{0, 0, 0}, {0, 1, 0}, {0, 0, 2}}, Kind::Smooth},
            {Matrix{{0, 1, 0}, {0, 0, 0}, {0, 0, 1}}, Kind::A1},
            {Matrix{{1, 1, 0}, {0, 1, 0}, {0, 0, 0}}, Kind::A1},
            {Matrix{{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}, Kind::ReducibleConicSmooth},
            {Matrix{{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}, Kind::ReducibleConicDegenerate},
            {Matrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}, Kind::A2},
        };
        for (const auto& [a, kind] : cases) {
            const delpezzo::DelPezzoMatrix m{a};
            if (delpezzo::classify(m).kind != kind) return false;
            if (kind == Kind::ReducibleConicSmooth || kind == Kind::ReducibleConicDegenerate) continue;
            if (delpezzo::blown_up_points(m).pattern() != delpezzo::expected_pattern(kind)) return false;
        }
        return true;
    });
    checks.emplace_back("curve configurations", [] {
        for (long k = 1; k <= 8; ++k) {
            for (const auto& m : curves::enumerate_multi_indices(k)) {
                const auto cfg = curves::reduced_configuration(m);
                const auto n = curves::normal_bundle_cohomology(cfg);
                if (curves::genus(cfg) != -k || n.h0 != 4 * k + 2 || n.h1 != 0) return false;
            }
            if (curves::hilbert_component_lower_bound(k) != k) return false;
        }
        return true;
    });
    checks.emplace_back("monad k=1", [] {
        const monad::MonadData m = monad::search(1, 0, 100);
        if (!monad::validate(m, 100, 0).ok()) return false;
        if (monad::h0_twist(m, 1, 0) != 3 || monad::h0_twist(m, 0, 1) != 3) return false;
        auto g = substream(0, 0);
        for (int i = 0; i < 20;) {
            const auto p = monad::random_flag_point(g), q = monad::random_flag_point(g);
            if (!monad::non_aligned(p, q) || dot(p.x, q.y) == 0 || dot(q.x, p.y) == 0) continue;
            ++i;
            const std::size_t s = monad::splitting_type(m, p, q);
            if (s != 2 - monad::pairing_rank(m, p, q) || s != monad::splitting_oracle(m, monad::conic_through(p, q)))
                return false;
        }
        return true;
    });
    checks.emplace_back("moduli tables", [] {
        for (long k = 2; k <= 20; ++k) {
            const auto t = moduli::dimension_table(k);
            if (t.ext1 != 8 * k - 3 || *t.dim_MI_i != 5 * k + 2) return false;
        }
        return moduli::elliptic_family_dimension(2) == 20;
    });
    checks.emplace_back("path witness", [] { return moduli::path_witness(1000).ok(); });

    json list = json::array();
    std::size_t passed = 0;
    for (const auto& [name, f] : checks) {
        bool good = false;
        std::string why;
        try {
            good = f();
        } catch (const std::exception& e) {
            why = e.what();
        }
        json c{{"name", name}, {"ok", good}};
        if (!why.empty()) c["error"] = why;
        list.push_back(c);
        passed += good;
    }
    ok = passed == checks.size();
    return {{"checks", list}, {"passed", passed}, {"failed", checks.size() - passed}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"flaglab: exact computations on the flag threefold", "flaglab"};
    app.require_subcommand(1);

    std::function<int()> action;

    long coh_a = 0, coh_b = 0;
    auto* coh = app.add_subcommand("cohomology", "h^i of O(a h1 + b h2)");
    coh->add_option("--a", coh_a)->required();
    coh->add_option("--b", coh_b)->required();
    coh->callback([&] {
        action = [&] {
            out << cohomology_json(graded::line_bundle_cohomology(coh_a, coh_b)).dump() << '\n';
            return kOk;
        };
    });

    std::string dp_matrix;
    auto* dp = app.add_subcommand("delpezzo", "hyperplane sections");
    dp->require_subcommand(1);
    auto* dp_classify = dp->add_subcommand("classify", "classify a hyperplane section");
    dp_classify->add_option("--matrix", dp_matrix, "JSON file with 9 rationals, row-major")->required();
    dp_classify->callback([&] {
        action = [&] {
            out << delpezzo_json(matrix_from_json(read_json_file(dp_matrix))).dump() << '\n';
            return kOk;
        };
    });

    long cv_charge = 1;
    std::string cv_csv;
    auto* cv = app.add_subcommand("curves", "'t Hooft configurations");
    cv->require_subcommand(1);
    auto* cv_enum = cv->add_subcommand("enumerate", "list multi-indices of a charge");
    cv_enum->add_option("--charge", cv_charge)->required()->check(CLI::PositiveNumber);
    cv_enum->add_option("--csv", cv_csv);
    cv_enum->callback([&] {
        action = [&] {
            std::string csv;
            const json j = curves_json(cv_charge, &csv);
            if (!cv_csv.empty()) write_file(cv_csv, csv);
            out << j.dump() << '\n';
            return kOk;
        };
    });

    int mo_charge = 1;
    std::uint64_t mo_seed = 0;
    std::size_t mo_attempts = 500, mo_samples = 2000, mo_conics = 500;
    std::string mo_out, mo_file, mo_csv;
    auto* mo = app.add_subcommand("monad", "self-dual monads");
    mo->require_subcommand(1);
    auto* mo_search = mo->add_subcommand("search", "construct a monad");
    mo_search->add_option("--charge", mo_charge)->required()->check(CLI::PositiveNumber);
    mo_search->add_option("--seed", mo_seed);
    mo_search->add_option("--max-attempts", mo_attempts);
    mo_search->add_option("--out", mo_out);
    mo_search->callback([&] {
        action = [&] {
            const monad::MonadData m = monad::search(mo_charge, mo_seed, mo_attempts);
            const std::string text = monad::to_json(m).dump(1) + "\n";
            if (mo_out.empty()) {
                out << text;
            } else {
                write_file(mo_out, text);
                out << json{{"charge", mo_charge}, {"seed", mo_seed}, {"out", mo_out}}.dump() << '\n';
            }
            return kOk;
        };
    });
    auto* mo_validate = mo->add_subcommand("validate", "check a monad");
    mo_validate->add_option("--monad", mo_file)->required();
    mo_validate->add_option("--samples", mo_samples);
    mo_validate->add_option("--seed", mo_seed);
    mo_validate->callback([&] {
        action = [&] {
            const auto m = monad::monad_from_json(read_json_file(mo_file));
            const auto r = monad::validate(m, mo_samples, mo_seed);
            out << monad::report_json(r).dump() << '\n';
            return r.ok() ? kOk : kFailure;
        };
    });
    auto* mo_scan = mo->add_subcommand("scan", "splitting types on random conics");
    mo_scan->add_option("--monad", mo_file)->required();
    mo_scan->add_option("--conics", mo_conics);
    mo_scan->add_option("--seed", mo_seed);
    mo_scan->add_option("--csv", mo_csv);
    mo_scan->callback([&] {
        action = [&] {
            const auto m = monad::monad_from_json(read_json_file(mo_file));
            const auto r = monad::jump_scan(m, mo_conics, mo_seed);
            if (!mo_csv.empty()) write_file(mo_csv, monad::scan_csv(r));
            json hist = json::object();
            for (std::size_t s = 0; s < r.histogram.size(); ++s) hist[std::to_string(s)] = r.histogram[s];
            out << json{{"conics", mo_conics}, {"histogram", hist}, {"mode", r.mode()}}.dump() << '\n';
            return kOk;
        };
    });

    long md_max = 10;
    std::size_t md_samples = 10000;
    std::string md_csv;
    auto* md = app.add_subcommand("moduli", "dimension bookkeeping");
    md->require_subcommand(1);
    auto* md_table = md->add_subcommand("table", "dimension table");
    md_table->add_option("--max-charge", md_max)->required()->check(CLI::PositiveNumber);
    md_table->add_option("--csv", md_csv);
    md_table->callback([&] {
        action = [&] {
            std::string csv;
            const json j = moduli_json(md_max, &csv);
            if (!md_csv.empty()) write_file(md_csv, csv);
            out << j.dump() << '\n';
            return kOk;
        };
    });
    auto* md_path = md->add_subcommand("path", "nonvanishing certificate for the connecting path");
    md_path->add_option("--samples", md_samples)->check(CLI::Range(2, 100000000));
    md_path->callback([&] {
        action = [&] {
            const auto w = moduli::path_witness(md_samples);
            out << path_json(w).dump() << '\n';
            return w.ok() ? kOk : kFailure;
        };
    });

    auto* st = app.add_subcommand("selftest", "run the invariant suite");
    st->callback([&] {
        action = [&] {
            bool ok = false;
            out << selftest(ok).dump() << '\n';
            return ok ? kOk : kFailure;
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "flaglab: " << e.what() << "\n";
        return kUsage;
    }
    if (!action) {
        err << "flaglab: nothing to do\n";
        return kUsage;
    }
    try {
        return action();
    } catch (const std::exception& e) {
        out << json{{"error", e.what()}}.dump() << '\n';
        return kFailure;
    }
}

}  // namespace flaglab::cli
