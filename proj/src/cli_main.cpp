#include "CLI11.hpp"
#include "json.hpp"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "twistcs/chernsimons.hpp"
#include "twistcs/golden_tables.hpp"
#include "twistcs/json_io.hpp"
#include "twistcs/newton.hpp"
#include "twistcs/twistgen.hpp"

namespace {

using json = nlohmann::json;
using namespace twistcs;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitNonHyperbolic = 4;
constexpr int kExitNumerical = 5;

constexpr int kCacheSchema = 1;

struct Options {
    std::string format = "text";
    std::string intervals;
    std::string cache_dir;
    long jobs = 0;
    double tolerance = 2e-5;
};

QuadratureSpec parse_intervals(const std::string& s) {
    QuadratureSpec q;
    if (s.empty()) return q;
    long a = 0, b = 0;
    char extra = 0;
    int got = std::sscanf(s.c_str(), "%ld,%ld%c", &a, &b, &extra);
    if (got == 1) {
        b = a;
    } else if (got != 2) {
        throw std::invalid_argument("--intervals expects Nh,Ns or a single count");
    }
    q.intervals_h = a;
    q.intervals_s = b;
    if (a < 2 || a % 2 != 0 || b < 2 || b % 2 != 0)
        throw std::invalid_argument("--intervals values must be even and >= 2");
    return q;
}

long job_count(const Options& opt) {
    if (opt.jobs > 0) return opt.jobs;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<long>(hc);
}

// --- polynomial cache -------------------------------------------------------

std::optional<BiPoly> cache_load(const Options& opt, const std::string& family,
                                 long n) {
    if (opt.cache_dir.empty()) return std::nullopt;
    std::filesystem::path path =
        std::filesystem::path(opt.cache_dir) /
        (family + "_" + std::to_string(n) + ".json");
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        json j = json::parse(ss.str());
        if (!j.is_object() || j.value("schema", -1) != kCacheSchema ||
            j.value("family", std::string()) != family ||
            j.value("n", n + 1) != n || !j.contains("poly"))
            return std::nullopt;
        return bipoly_from_json(j["poly"].dump());
    } catch (const std::exception&) {
        return std::nullopt;  // corrupt cache entries are recomputed
    }
}

void cache_store(const Options& opt, const std::string& family, long n,
                 const BiPoly& p) {
    if (opt.cache_dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(opt.cache_dir, ec);
    std::filesystem::path path =
        std::filesystem::path(opt.cache_dir) /
        (family + "_" + std::to_string(n) + ".json");
    json j;
    j["schema"] = kCacheSchema;
    j["family"] = family;
    j["n"] = n;
    j["poly"] = json::parse(bipoly_to_json(p));
    std::ofstream out(path);
    out << j.dump() << "\n";
}

BiPoly cached_apoly(const Options& opt, long n) {
    if (auto hit = cache_load(opt, "apoly", n)) return *hit;
    BiPoly p = apoly_recursive(n).poly;
    cache_store(opt, "apoly", n, p);
    return p;
}

BiPoly cached_pdist(const Options& opt, long n) {
    if (auto hit = cache_load(opt, "pdist", n)) return *hit;
    BiPoly p = pdist_recursive(n).poly;
    cache_store(opt, "pdist", n, p);
    return p;
}

// --- output helpers ---------------------------------------------------------

void print_poly(const Options& opt, const BiPoly& p, bool pdist_style) {
    if (opt.format == "json") {
        std::cout << bipoly_to_json(p) << "\n";
    } else if (opt.format == "csv") {
        std::cout << p.vars().first << "_exp," << p.vars().second
                  << "_exp,coeff\n";
        for (const auto& [key, c] : p.terms())
            std::cout << key.first << "," << key.second << "," << c.get_str()
                      << "\n";
    } else {
        std::cout << (pdist_style ? render_pdist(p) : render_apoly(p)) << "\n";
    }
}

std::string rat_str(const BigRat& r) {
    return r.get_num().get_str() +
           (r.get_den() == 1 ? "" : "/" + r.get_den().get_str());
}

// --- subcommand implementations ---------------------------------------------

int run_apoly(const Options& opt, long n, const std::string& method) {
    if (method == "cross-check") {
        APoly rec = apoly_recursive(n), exp = apoly_explicit(n);
        bool flipped = false;
        APoly der = apoly_from_pdist(n, &flipped);
        bool ok = rec.poly == exp.poly && equal_up_to_unit(rec.poly, der.poly);
        if (!ok) {
            std::cerr << "apoly: generators disagree for n=" << n << "\n";
            return kExitMismatch;
        }
        print_poly(opt, rec.poly, false);
        return kExitOk;
    }
    BiPoly p = method == "explicit"     ? apoly_explicit(n).poly
               : method == "from-pdist" ? apoly_from_pdist(n).poly
                                        : cached_apoly(opt, n);
    print_poly(opt, p, false);
    return kExitOk;
}

int run_pdist(const Options& opt, long n, const std::string& method) {
    if (method == "cross-check") {
        PDist rec = pdist_recursive(n), exp = pdist_explicit(n);
        if (rec.poly != exp.poly) {
            std::cerr << "pdist: generators disagree for n=" << n << "\n";
            return kExitMismatch;
        }
        print_poly(opt, rec.poly, true);
        return kExitOk;
    }
    BiPoly p = method == "explicit" ? pdist_explicit(n).poly
                                    : cached_pdist(opt, n);
    print_poly(opt, p, true);
    return kExitOk;
}

int run_newton(const Options& opt, long n) {
    if (n == 0)
        throw std::invalid_argument(
            "newton: n = 0 gives a constant polynomial with no polygon");
    BiPoly a = cached_apoly(opt, n);
    EdgeTheoremReport report = verify_edge_theorem(n);
    if (opt.format == "json") {
        json j = json::parse(polygon_to_json(a));
        json edges_extra = json::array();
        NewtonPolygon poly = newton_polygon(a);
        for (const auto& e : poly.edges) {
            EdgePoly ep = edge_polynomial(a, e);
            edges_extra.push_back(boundary_component_count(ep));
        }
        for (size_t i = 0; i < j["edges"].size(); ++i)
            j["edges"][i]["boundary_components"] = edges_extra[i];
        j["verification"] = {{"pass", report.pass}, {"failures", report.failures}};
        std::cout << j.dump() << "\n";
    } else {
        NewtonPolygon poly = newton_polygon(a);
        std::cout << "vertices:";
        for (const auto& v : poly.vertices)
            std::cout << " (" << v.first << "," << v.second << ")";
        std::cout << "\n";
        for (const auto& e : poly.edges) {
            EdgePoly ep = edge_polynomial(a, e);
            std::cout << "edge (" << e.from.first << "," << e.from.second
                      << ")-(" << e.to.first << "," << e.to.second
                      << ") slope " << e.slope.str() << " poly";
            for (const BigInt& c : ep.coeffs) std::cout << " " << c.get_str();
            std::cout << " boundary_components " << boundary_component_count(ep)
                      << "\n";
        }
        std::cout << "verification: " << (report.pass ? "PASS" : "FAIL") << "\n";
        for (const auto& f : report.failures) std::cout << "  " << f << "\n";
    }
    return report.pass ? kExitOk : kExitMismatch;
}

int run_alpha0(const Options& opt, long n) {
    Alpha0Result r = find_alpha0(n);
    if (opt.format == "json") {
        json j;
        j["n"] = n;
        j["alpha0"] = r.alpha0;
        j["B0"] = r.B0;
        j["candidates"] = r.candidates;
        std::cout << j.dump() << "\n";
    } else {
        std::printf("alpha0(%ld) = %.12f\n", n, r.alpha0);
    }
    return kExitOk;
}

int run_cs(const Options& opt, long n, long k, bool cusp) {
    QuadratureSpec q = parse_intervals(opt.intervals);
    Alpha0Result a0 = find_alpha0(n);
    if (cusp) {
        CsValue v = cs_knot(n, q);
        if (opt.format == "json") {
            json j;
            j["n"] = n;
            j["alpha0"] = a0.alpha0;
            j["cs_knot"] = v.canonical;
            j["modulus"] = rat_str(v.modulus);
            j["intervals"] = {q.intervals_h, q.intervals_s};
            std::cout << j.dump() << "\n";
        } else {
            std::printf("n = %ld (cusped)\nalpha0 = %.9f\ncs_knot = %.9f (mod %s)\n",
                        n, a0.alpha0, v.canonical, rat_str(v.modulus).c_str());
        }
        return kExitOk;
    }
    CsValue orb = cs_orbifold(n, k, q);
    CsValue cov = cs_cyclic_cover(n, k, q);
    if (opt.format == "json") {
        json j;
        j["n"] = n;
        j["k"] = k;
        j["alpha0"] = a0.alpha0;
        j["cs_orbifold"] = orb.canonical;
        j["cs_cover"] = cov.canonical;
        j["modulus_orbifold"] = rat_str(orb.modulus);
        j["intervals"] = {q.intervals_h, q.intervals_s};
        std::cout << j.dump() << "\n";
    } else {
        std::printf("n = %ld  k = %ld\nalpha0 = %.9f\n", n, k, a0.alpha0);
        std::printf("cs_orbifold = %.9f (mod %s)\n", orb.canonical,
                    rat_str(orb.modulus).c_str());
        std::printf("cs_cover = %.9f (mod %s)\n", cov.canonical,
                    rat_str(cov.modulus).c_str());
    }
    return kExitOk;
}

int run_dump_branches(const Options& opt, long n, long k, bool cusp) {
    QuadratureSpec q = parse_intervals(opt.intervals);
    double alpha_lo = 0.0;
    if (!cusp) {
        if (k < 3)
            throw std::invalid_argument("dump-branches: need -k >= 3 or --cusp");
        alpha_lo = 2.0 * M_PI / static_cast<double>(k);
        Alpha0Result a0 = find_alpha0(n);
        if (alpha_lo >= a0.alpha0)
            throw NonHyperbolicError(
                "dump-branches: cone angle 2*pi/k is not below alpha0");
    }
    CsSamples s = cs_samples(n, alpha_lo, q);
    std::cout << branch_csv(s);
    return kExitOk;
}

// --- tables -----------------------------------------------------------------

struct TableCell {
    long n = 0, k = 0;
    double orb = 0.0, cover = 0.0;
    double d_orb = -1.0, d_cover = -1.0;  // wrap-aware deltas; -1 = no golden
    bool orb_ok = true, cover_ok = true;
    std::string error;
};

struct KnotRow {
    long n = 0;
    double alpha0 = 0.0, cs = 0.0;
    double d_alpha0 = -1.0, d_cs = -1.0;
    bool ok = true;
    std::string error;
};

double wrap_delta(double a, double b, double modulus) {
    double d = std::abs(a - b);
    return std::min(d, modulus - d);
}

const golden::OrbifoldRow* find_golden_orb(long n, long k) {
    for (std::size_t i = 0; i < golden::kOrbifoldTableSize; ++i)
        if (golden::kOrbifoldTable[i].n == n && golden::kOrbifoldTable[i].k == k)
            return &golden::kOrbifoldTable[i];
    return nullptr;
}

const golden::CuspedRow* find_golden_cusped(long n) {
    for (std::size_t i = 0; i < golden::kCuspedTableSize; ++i)
        if (golden::kCuspedTable[i].n == n) return &golden::kCuspedTable[i];
    return nullptr;
}

int run_tables(const Options& opt, long nmin, long nmax, long kmin, long kmax) {
    QuadratureSpec q = parse_intervals(opt.intervals);
    const double tol = opt.tolerance;
    const double alpha0_tol = 1e-4;

    std::vector<long> ns;
    for (long n = nmin; n <= nmax; ++n)
        if (TwistKnot{n}.hyperbolic()) ns.push_back(n);
    std::vector<KnotRow> knots(ns.size());
    std::vector<TableCell> cells;
    for (long n : ns)
        for (long k = std::max(kmin, 3L); k <= kmax; ++k) {
            TableCell c;
            c.n = n;
            c.k = k;
            cells.push_back(std::move(c));
        }

    auto knot_job = [&](size_t i) {
        KnotRow& r = knots[i];
        r.n = ns[i];
        try {
            r.alpha0 = find_alpha0(r.n).alpha0;
            r.cs = cs_knot(r.n, q).canonical;
            if (const auto* g = find_golden_cusped(r.n)) {
                r.d_alpha0 = std::abs(r.alpha0 - g->alpha0);
                r.d_cs = wrap_delta(r.cs, g->cs_knot, 0.5);
                r.ok = r.d_alpha0 <= alpha0_tol && r.d_cs <= tol;
            }
        } catch (const std::exception& e) {
            r.ok = false;
            r.error = e.what();
        }
    };
    auto cell_job = [&](size_t i) {
        TableCell& c = cells[i];
        try {
            c.orb = cs_orbifold(c.n, c.k, q).canonical;
            c.cover = cs_cyclic_cover(c.n, c.k, q).canonical;
            if (const auto* g = find_golden_orb(c.n, c.k)) {
                double orb_mod = (c.k % 2 == 0 ? 1.0 / double(c.k)
                                               : 0.5 / double(c.k));
                double cov_mod = c.k % 2 == 0 ? 1.0 : 0.5;
                c.d_orb = wrap_delta(c.orb, g->cs_orbifold, orb_mod);
                c.d_cover = wrap_delta(c.cover, g->cs_cover, cov_mod);
                c.orb_ok = c.d_orb <= tol;
                // The published cover values are k times the raw orbifold
                // numbers, so their printing noise scales with k.
                c.cover_ok = c.d_cover <= double(c.k) * tol;
            }
        } catch (const std::exception& e) {
            c.orb_ok = c.cover_ok = false;
            c.error = e.what();
        }
    };

    // Fan out: knots first (they warm the alpha0/raw caches), then cells.
    long jobs = job_count(opt);
    auto run_pool = [&](size_t count, auto&& fn) {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                fn(i);
        };
        if (jobs <= 1 || count <= 1) {
            worker();
            return;
        }
        std::vector<std::thread> pool;
        for (long t = 0; t < std::min<long>(jobs, static_cast<long>(count)); ++t)
            pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    };
    run_pool(ns.size(), knot_job);
    run_pool(cells.size(), cell_job);

    double max_d_alpha0 = 0.0, max_d_cs = 0.0, max_d_orb = 0.0, max_d_cover = 0.0;
    bool all_ok = true;
    for (const auto& r : knots) {
        all_ok = all_ok && r.ok;
        max_d_alpha0 = std::max(max_d_alpha0, r.d_alpha0);
        max_d_cs = std::max(max_d_cs, r.d_cs);
    }
    for (const auto& c : cells) {
        all_ok = all_ok && c.orb_ok && c.cover_ok;
        max_d_orb = std::max(max_d_orb, c.d_orb);
        max_d_cover = std::max(max_d_cover, c.d_cover);
    }

    if (opt.format == "json") {
        json j;
        j["cusped"] = json::array();
        for (const auto& r : knots)
            j["cusped"].push_back({{"n", r.n},
                                   {"alpha0", r.alpha0},
                                   {"cs_knot", r.cs},
                                   {"delta_alpha0", r.d_alpha0},
                                   {"delta_cs", r.d_cs},
                                   {"ok", r.ok}});
        j["orbifold"] = json::array();
        for (const auto& c : cells)
            j["orbifold"].push_back({{"n", c.n},
                                     {"k", c.k},
                                     {"cs_orbifold", c.orb},
                                     {"cs_cover", c.cover},
                                     {"delta_orbifold", c.d_orb},
                                     {"delta_cover", c.d_cover},
                                     {"ok", c.orb_ok && c.cover_ok}});
        j["max_delta"] = {{"alpha0", max_d_alpha0},
                          {"cs_knot", max_d_cs},
                          {"cs_orbifold", max_d_orb},
                          {"cs_cover", max_d_cover}};
        j["pass"] = all_ok;
        std::cout << j.dump() << "\n";
    } else if (opt.format == "csv") {
        std::cout << "table,n,k,alpha0,cs,cs_cover,delta_alpha0,delta_cs,delta_cover,ok\n";
        for (const auto& r : knots)
            std::printf("cusped,%ld,,%.9f,%.9f,,%.3g,%.3g,,%s\n", r.n, r.alpha0,
                        r.cs, r.d_alpha0, r.d_cs, r.ok ? "1" : "0");
        for (const auto& c : cells)
            std::printf("orbifold,%ld,%ld,,%.9f,%.9f,,%.3g,%.3g,%s\n", c.n, c.k,
                        c.orb, c.cover, c.d_orb, c.d_cover,
                        c.orb_ok && c.cover_ok ? "1" : "0");
    } else {
        if (!knots.empty()) {
            std::printf("%4s %12s %12s %12s %12s\n", "n", "alpha0", "cs_knot",
                        "d_alpha0", "d_cs");
            for (const auto& r : knots) {
                std::printf("%4ld %12.6f %12.6f %12.3g %12.3g%s\n", r.n,
                            r.alpha0, r.cs, r.d_alpha0, r.d_cs,
                            r.ok ? "" : "  FAIL");
                if (!r.error.empty()) std::printf("     error: %s\n", r.error.c_str());
            }
        }
        if (!cells.empty()) {
            std::printf("%4s %4s %12s %12s %12s %12s\n", "n", "k", "orbifold",
                        "cover", "d_orb", "d_cover");
            for (const auto& c : cells) {
                std::printf("%4ld %4ld %12.6f %12.6f %12.3g %12.3g%s\n", c.n,
                            c.k, c.orb, c.cover, c.d_orb, c.d_cover,
                            c.orb_ok && c.cover_ok ? "" : "  FAIL");
                if (!c.error.empty()) std::printf("     error: %s\n", c.error.c_str());
            }
        }
        std::printf(
            "max deltas: alpha0 %.3g, cs_knot %.3g, orbifold %.3g, cover %.3g\n",
            max_d_alpha0, max_d_cs, max_d_orb, max_d_cover);
        std::printf("result: %s\n", all_ok ? "PASS" : "FAIL");
    }
    return all_ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Twist-knot polynomial and Chern-Simons toolkit"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "text", "csv"}))
        ->capture_default_str();
    app.add_option("--intervals", opt.intervals,
                   "Quadrature subintervals Nh,Ns (default 10000,10000)");
    app.add_option("--cache", opt.cache_dir, "Polynomial cache directory")
        ->envname("TWISTCS_CACHE_DIR");
    app.add_option("--jobs", opt.jobs, "Worker threads for table sweeps");
    app.add_option("--tolerance", opt.tolerance,
                   "Golden-value tolerance for tables")
        ->capture_default_str();

    long n = 0, k = 0, m_raw = 0, nmin = -9, nmax = 9, kmin = 3, kmax = 10;
    bool cusp = false;
    std::string method = "recursive";

    CLI::App* apoly = app.add_subcommand("apoly", "A-polynomial of T_2n");
    CLI::Option* apoly_n = apoly->add_option("-n,--n", n, "Twist parameter n");
    CLI::Option* apoly_raw = apoly->add_option(
        "--raw-crossings", m_raw, "Twist-region crossing count m (T_m)");
    apoly_raw->excludes(apoly_n);
    apoly->add_option("--method", method, "Generator to use")
        ->check(CLI::IsMember({"recursive", "explicit", "from-pdist", "cross-check"}));

    CLI::App* pdist = app.add_subcommand("pdist", "Complex distance polynomial of T_2n");
    pdist->add_option("-n,--n", n, "Twist parameter n")->required();
    pdist->add_option("--method", method, "Generator to use")
        ->check(CLI::IsMember({"recursive", "explicit", "cross-check"}));

    CLI::App* newton = app.add_subcommand(
        "newton", "Newton polygon and edge polynomials of A_2n");
    newton->add_option("-n,--n", n, "Twist parameter n")->required();

    CLI::App* alpha0 = app.add_subcommand("alpha0", "Euclidean cone angle of T_2n");
    alpha0->add_option("-n,--n", n, "Twist parameter n")->required();

    CLI::App* cs = app.add_subcommand("cs", "Chern-Simons invariants");
    cs->add_option("-n,--n", n, "Twist parameter n")->required();
    CLI::Option* cs_k = cs->add_option("-k,--k", k, "Cone angle divisor (angle 2*pi/k)");
    CLI::Option* cs_cusp = cs->add_flag("--cusp", cusp, "Cusped knot complement");
    cs_cusp->excludes(cs_k);

    CLI::App* tables = app.add_subcommand(
        "tables", "Reproduce the reference tables with golden deltas");
    tables->add_option("--nmin", nmin, "Smallest n")->capture_default_str();
    tables->add_option("--nmax", nmax, "Largest n")->capture_default_str();
    tables->add_option("--kmin", kmin, "Smallest k")->capture_default_str();
    tables->add_option("--kmax", kmax, "Largest k")->capture_default_str();

    CLI::App* dump = app.add_subcommand(
        "dump-branches", "CSV dump of the tracked branches and integrand");
    dump->add_option("-n,--n", n, "Twist parameter n")->required();
    dump->add_option("-k,--k", k, "Cone angle divisor");
    dump->add_flag("--cusp", cusp, "Cusped knot complement");

    // Let global flags (--format, --intervals, ...) appear after the
    // subcommand name as well as before it.
    for (CLI::App* sc : {apoly, pdist, newton, alpha0, cs, tables, dump})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (apoly->parsed()) {
            if (apoly_raw->count() > 0) n = normalize_twist_param(m_raw) / 2;
            else if (apoly_n->count() == 0)
                throw std::invalid_argument("apoly: need -n or --raw-crossings");
            return run_apoly(opt, n, method);
        }
        if (pdist->parsed()) return run_pdist(opt, n, method);
        if (newton->parsed()) return run_newton(opt, n);
        if (alpha0->parsed()) return run_alpha0(opt, n);
        if (cs->parsed()) {
            if (!cusp && cs_k->count() == 0)
                throw std::invalid_argument("cs: need -k or --cusp");
            return run_cs(opt, n, k, cusp);
        }
        if (tables->parsed()) return run_tables(opt, nmin, nmax, kmin, kmax);
        if (dump->parsed()) {
            if (!cusp && dump->get_option("-k")->count() == 0)
                throw std::invalid_argument("dump-branches: need -k or --cusp");
            return run_dump_branches(opt, n, k, cusp);
        }
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NonHyperbolicError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNonHyperbolic;
    } catch (const NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const TrackingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const GeometricError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
