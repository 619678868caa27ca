#include "hvf/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "hvf/io.hpp"

namespace hvf::cli
{

namespace
{

using io::json;

class usage_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class verification_failure : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int mu = 3;
    int trunc = 64;
    std::string a1 = "calibrate";
    double tol = 1e-6;
    std::uint64_t seed = 20240611u;
    int points = 12;
    std::string format = "json";
    std::string cache_dir;
    std::string structure_constant = "system";
    std::vector<std::string> pins;
    std::string which = "all";
    int weight = -1;
    int depth = -1;
    std::string form;
    int ell = -1;
    int r = 1;
    bool extended = false;
    bool no_cache = false;
};

void check_config(const RunConfig &cfg)
{
    if (cfg.mu < 3) {
        throw usage_error("--mu must be at least 3");
    }
    if (cfg.trunc < 2) {
        throw usage_error("--n must be at least 2");
    }
    if (!(cfg.tol > 0)) {
        throw usage_error("--tol must be positive");
    }
}

bool a1_is_exact(const RunConfig &cfg)
{
    return cfg.a1 != "calibrate";
}

Rational parse_rational_arg(const std::string &text, const std::string &what)
{
    try {
        return Rational::parse(text);
    } catch (const std::exception &) {
        throw usage_error("cannot parse " + what + " '" + text + "' as a rational");
    }
}

std::map<int, Rational> parse_pins(const RunConfig &cfg)
{
    std::map<int, Rational> out;
    for (const auto &p : cfg.pins) {
        const auto eq = p.find('=');
        if (eq == std::string::npos) {
            throw usage_error("--pin expects n=value");
        }
        int n = 0;
        try {
            n = std::stoi(p.substr(0, eq));
        } catch (const std::exception &) {
            throw usage_error("--pin expects an integer order");
        }
        out[n] = parse_rational_arg(p.substr(eq + 1), "pin value");
    }
    return out;
}

StructureConstant make_constant(const RunConfig &cfg)
{
    if (cfg.structure_constant == "system") {
        return StructureConstant::from_system(cfg.mu);
    }
    if (cfg.structure_constant == "lcm") {
        return StructureConstant::from_lcm(cfg.mu);
    }
    return StructureConstant::with_numerator(cfg.mu, parse_rational_arg(cfg.structure_constant, "structure constant"));
}

std::filesystem::path cache_file(const RunConfig &cfg)
{
    std::string dir = cfg.cache_dir;
    if (dir.empty()) {
        if (const char *env = std::getenv("HVF_CACHE_DIR")) {
            dir = env;
        }
    }
    if (dir.empty()) {
        if (const char *home = std::getenv("HOME")) {
            dir = std::string(home) + "/.cache/hvf";
        }
    }
    if (dir.empty()) {
        return {};
    }
    return std::filesystem::path(dir) / "calibration.json";
}

template <typename R> std::string exact_string(R v)
{
    std::ostringstream os;
    os << std::setprecision(std::numeric_limits<R>::max_digits10) << v;
    return os.str();
}

template <typename R> R parse_real(const std::string &s)
{
    if constexpr (std::is_same_v<R, long double>) {
        return std::stold(s);
    } else {
        return std::stod(s);
    }
}

template <typename R> std::string cache_key(const RunConfig &cfg, const StructureConstant &C)
{
    std::ostringstream os;
    os << "mu=" << cfg.mu << ";N=" << cfg.trunc << ";tol=" << exact_string(cfg.tol) << ";C=" << C.kind() << ":"
       << C.str() << ";real=" << (std::is_same_v<R, long double> ? "extended" : "double");
    return os.str();
}

// Calibration with a JSON cache keyed by (mu, N, tol, C, precision).
template <typename R> CalibrationResult<R> cached_calibration(const RunConfig &cfg, const StructureConstant &C, bool &hit)
{
    hit = false;
    const auto path = cfg.no_cache ? std::filesystem::path() : cache_file(cfg);
    const std::string key = cache_key<R>(cfg, C);
    json cache = json::object();
    if (!path.empty() && std::filesystem::exists(path)) {
        std::ifstream in(path);
        try {
            cache = json::parse(in);
        } catch (const std::exception &) {
            cache = json::object();
        }
        if (cache.contains(key)) {
            const json &e = cache[key];
            CalibrationResult<R> res;
            res.a1 = parse_real<R>(e.at("a1").get<std::string>());
            for (const auto &[n, v] : e.at("pins").items()) {
                res.pins[std::stoi(n)] = parse_real<R>(v.template get<std::string>());
            }
            for (const auto &[n, v] : e.at("pin_scales").items()) {
                res.pin_scales[std::stoi(n)] = parse_real<R>(v.template get<std::string>());
            }
            res.residual = parse_real<R>(e.at("residual").get<std::string>());
            res.tail = parse_real<R>(e.at("tail").get<std::string>());
            res.iterations = e.at("iterations").get<int>();
            hit = true;
            return res;
        }
    }
    const auto res = calibrate_a1<R>(cfg.mu, cfg.trunc, static_cast<R>(cfg.tol), C);
    if (!path.empty()) {
        json e;
        e["a1"] = exact_string(res.a1);
        e["pins"] = json::object();
        e["pin_scales"] = json::object();
        for (const auto &[n, v] : res.pins) {
            e["pins"][std::to_string(n)] = exact_string(v);
        }
        for (const auto &[n, v] : res.pin_scales) {
            e["pin_scales"][std::to_string(n)] = exact_string(v);
        }
        e["residual"] = exact_string(res.residual);
        e["tail"] = exact_string(res.tail);
        e["iterations"] = res.iterations;
        cache[key] = e;
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        std::ofstream outf(path);
        if (outf) {
            outf << cache.dump(2) << "\n";
        }
    }
    return res;
}

EisensteinFamily<Rational> exact_family(const RunConfig &cfg)
{
    return hecke_eisenstein<Rational>(cfg.mu, cfg.trunc, parse_rational_arg(cfg.a1, "--a1"), parse_pins(cfg));
}

// Numeric family: the exact family converted when a1 is given, otherwise calibrated.
template <typename R> EisensteinFamily<R> numeric_family(const RunConfig &cfg, const StructureConstant &C)
{
    if (a1_is_exact(cfg)) {
        return convert_family<R>(exact_family(cfg));
    }
    if (!cfg.pins.empty()) {
        throw usage_error("--pin requires an explicit --a1");
    }
    bool hit = false;
    const auto cal = cached_calibration<R>(cfg, C, hit);
    return hecke_eisenstein<R>(cfg.mu, cfg.trunc, cal.a1, cal.pins);
}

template <typename T> QuasiForm<T> resolve_form(const RunConfig &cfg, const EisensteinFamily<T> &fam)
{
    std::string name = cfg.form;
    if (name.empty()) {
        if (cfg.weight == 2 && cfg.depth == 1) {
            name = "E2";
        } else if (cfg.weight == 6 && cfg.depth == 3) {
            name = "D63";
        } else if (cfg.depth == 0 && cfg.weight >= 0) {
            name = "E" + std::to_string(cfg.weight);
        } else {
            throw usage_error("choose a form with --form, or give --weight/--depth of a built-in form");
        }
    }
    QuasiForm<T> u;
    if (name == "E2") {
        u = quasiform_E2<T>(cfg.mu, fam.trunc);
    } else if (name == "D63") {
        if (cfg.mu != 3) {
            throw usage_error("the extremal form D63 needs --mu 3");
        }
        u = quasiform_D63(fam);
    } else if (name.size() > 1 && name[0] == 'E' && name.find_first_not_of("0123456789", 1) == std::string::npos) {
        const int w = std::stoi(name.substr(1));
        if (w == 0) {
            u = {cfg.mu, 0, 0, {QSeries<T>::constant(fam.trunc, T(1), 0)}};
        } else if (w >= 4 && w % 2 == 0 && w <= 2 * cfg.mu) {
            u = {cfg.mu, w, 0, {fam.series(w)}};
        } else {
            throw usage_error("no built-in automorphic form " + name + " at mu=" + std::to_string(cfg.mu));
        }
    } else {
        std::ifstream in(name);
        if (!in) {
            throw usage_error("cannot open form file " + name);
        }
        json j;
        try {
            j = json::parse(in);
        } catch (const std::exception &e) {
            throw usage_error(std::string("malformed form file: ") + e.what());
        }
        u = io::quasiform_from_json<T>(j, fam);
    }
    if (cfg.weight >= 0 && u.weight != cfg.weight) {
        throw usage_error("--weight does not match the selected form");
    }
    if (cfg.depth >= 0 && u.depth != cfg.depth) {
        throw usage_error("--depth does not match the selected form");
    }
    u.validate();
    return u;
}

void require_format(const RunConfig &cfg, std::initializer_list<const char *> allowed)
{
    for (const char *f : allowed) {
        if (cfg.format == f) {
            return;
        }
    }
    throw usage_error("format '" + cfg.format + "' is not available for this command");
}

// ---- subcommands ----

template <typename T> void write_family(const RunConfig &cfg, const EisensteinFamily<T> &fam, std::ostream &out)
{
    if (cfg.format == "json") {
        out << io::family_to_json(fam).dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << io::family_to_csv(fam);
    } else {
        std::string csv = io::family_to_csv(fam);
        std::replace(csv.begin(), csv.end(), ',', '\t');
        out << csv;
    }
}

void cmd_eisenstein(const RunConfig &cfg, std::ostream &out)
{
    require_format(cfg, {"json", "csv", "text"});
    if (a1_is_exact(cfg)) {
        write_family(cfg, exact_family(cfg), out);
        return;
    }
    const StructureConstant C = make_constant(cfg);
    if (cfg.extended) {
        write_family(cfg, numeric_family<long double>(cfg, C), out);
    } else {
        write_family(cfg, numeric_family<double>(cfg, C), out);
    }
}

template <typename R> void calibrate_impl(const RunConfig &cfg, std::ostream &out)
{
    const StructureConstant C = make_constant(cfg);
    bool hit = false;
    const auto cal = cached_calibration<R>(cfg, C, hit);
    if (cfg.format == "text") {
        out << exact_string(cal.a1) << "\n";
        return;
    }
    json j = io::calibration_to_json(cfg.mu, cfg.trunc, cfg.tol, C, cal);
    j["a1_text"] = exact_string(cal.a1);
    j["cached"] = hit;
    out << j.dump(2) << "\n";
}

void cmd_calibrate(const RunConfig &cfg, std::ostream &out)
{
    require_format(cfg, {"json", "text"});
    if (cfg.extended) {
        calibrate_impl<long double>(cfg, out);
    } else {
        calibrate_impl<double>(cfg, out);
    }
}

template <typename R> std::vector<VerificationReport> verify_impl(const RunConfig &cfg)
{
    const StructureConstant C = make_constant(cfg);
    const EisensteinFamily<R> fam = numeric_family<R>(cfg, C);
    const SamplePlan<R> plan = default_plan<R>(cfg.seed, cfg.points, static_cast<R>(cfg.tol), cfg.trunc);
    const std::string &w = cfg.which;
    std::vector<VerificationReport> reps;

    const bool all = w == "all";
    if (w == "E2_anomaly" || all) {
        reps.push_back(verify_E2_anomaly<R>(cfg.mu, fam.E2(), C, plan));
    }
    if (w == "periodicity" || all) {
        reps.push_back(verify_T_periodicity<R>(cfg.mu, fam.E2(), 2, plan));
    }
    const bool needs_form = w == "automorphic" || w == "vector_T" || w == "vector_S" || w == "g_under_S";
    const bool have_form = !cfg.form.empty() || cfg.weight >= 0;
    if (needs_form || (all && have_form)) {
        QuasiForm<R> u = resolve_form(cfg, fam);
        if (w == "automorphic" || (all && u.depth == 0)) {
            if (u.depth != 0) {
                throw usage_error("automorphic check needs a depth-0 form");
            }
            reps.push_back(verify_automorphic<R>(AutomorphicForm<R>{u.weight, assemble(u, fam)}, cfg.mu, plan));
        }
        const Hauptbuch<R> h = hauptbuch(u, fam, C);
        if (w == "vector_T" || all) {
            reps.push_back(verify_vector_T<R>(h, plan));
        }
        if (w == "vector_S" || all) {
            reps.push_back(verify_vector_S<R>(h, plan));
        }
        if (w == "g_under_S" || all) {
            if (cfg.ell >= 0) {
                reps.push_back(verify_g_under_S<R>(h, cfg.ell, plan));
            } else {
                for (int l = 0; l <= h.depth; ++l) {
                    reps.push_back(verify_g_under_S<R>(h, l, plan));
                }
            }
        }
    }
    if (reps.empty()) {
        throw usage_error("unknown --which '" + w +
                          "' (E2_anomaly, periodicity, automorphic, vector_T, vector_S, g_under_S, all)");
    }
    return reps;
}

void cmd_verify(const RunConfig &cfg, std::ostream &out)
{
    require_format(cfg, {"json", "csv", "text"});
    const auto reps = cfg.extended ? verify_impl<long double>(cfg) : verify_impl<double>(cfg);
    bool pass = true;
    for (const auto &r : reps) {
        pass = pass && r.pass;
    }
    if (cfg.format == "json") {
        if (reps.size() == 1) {
            out << io::to_json(reps.front()).dump(2) << "\n";
        } else {
            json arr = json::array();
            for (const auto &r : reps) {
                arr.push_back(io::to_json(r));
            }
            out << json{{"reports", arr}, {"pass", pass}}.dump(2) << "\n";
        }
    } else if (cfg.format == "csv") {
        out << "check,z_re,z_im,residual,tail_bound\n";
        out << std::setprecision(17);
        for (const auto &r : reps) {
            for (const auto &p : r.points) {
                out << r.check << "," << p.z.real() << "," << p.z.imag() << "," << p.residual << "," << p.tail_bound
                    << "\n";
            }
        }
    } else {
        for (const auto &r : reps) {
            out << r.check << " mu=" << r.mu << " w=" << r.weight << " r=" << r.depth
                << " max_residual=" << r.max_residual << " max_tail=" << r.max_tail << " "
                << (r.pass ? "PASS" : "FAIL") << "\n";
        }
    }
    if (!pass) {
        throw verification_failure("verification failed");
    }
}

void cmd_multiplier(const RunConfig &cfg, std::ostream &out)
{
    require_format(cfg, {"json", "latex", "text"});
    if (cfg.r < 0) {
        throw usage_error("--r must be nonnegative");
    }
    const MultiplierPair p = multiplier_pair(cfg.mu, cfg.r);
    if (cfg.format == "latex") {
        out << "\\varepsilon_{" << cfg.r << "}(T) = " << io::to_latex(p.epsT) << "\n\n";
        out << "\\varepsilon_{" << cfg.r << "}(S) = " << io::to_latex(p.epsS) << "\n";
    } else if (cfg.format == "text") {
        out << "epsilon_T\n" << io::to_text(p.epsT) << "epsilon_S\n" << io::to_text(to_field(cfg.mu, p.epsS));
    } else {
        json j{{"mu", cfg.mu},
               {"r", cfg.r},
               {"minimal_polynomial", minimal_polynomial(cfg.mu).str()},
               {"epsilon_T", io::to_json(p.epsT)},
               {"epsilon_S", io::to_json(p.epsS)}};
        out << j.dump(2) << "\n";
    }
}

void cmd_symcheck(const RunConfig &cfg, std::ostream &out)
{
    require_format(cfg, {"json", "text"});
    if (cfg.r < 0) {
        throw usage_error("--r must be nonnegative");
    }
    const bool sym = verify_sym_theorem(cfg.mu, cfg.r);
    const bool pres = verify_presentation(cfg.mu, cfg.r);
    if (cfg.format == "text") {
        out << "sym_theorem " << (sym ? "PASS" : "FAIL") << "\npresentation " << (pres ? "PASS" : "FAIL") << "\n";
    } else {
        out << json{{"mu", cfg.mu}, {"r", cfg.r}, {"sym_theorem", sym}, {"presentation", pres}, {"pass", sym && pres}}
                   .dump(2)
            << "\n";
    }
    if (!(sym && pres)) {
        throw verification_failure("exact multiplier check failed");
    }
}

void cmd_extremal(const RunConfig &cfg, std::ostream &out)
{
    require_format(cfg, {"json", "csv", "text"});
    const QSeries<Rational> d = extremal_D63(cfg.trunc);
    if (cfg.format != "json") {
        out << (cfg.format == "csv" ? "n,coeff\n" : "");
        for (int n = 0; n <= d.trunc(); ++n) {
            out << n << (cfg.format == "csv" ? "," : "\t") << d[n].numerator().get_str() << "\n";
        }
        return;
    }
    bool integral = true;
    json coeffs = json::array();
    for (const auto &c : d.coeffs()) {
        integral = integral && c.is_integer();
        coeffs.push_back(c.str());
    }
    // Depth basis {E2^3, E2 E4, E6} of the classical family.
    const auto fam = hecke_eisenstein<Rational>(3, cfg.trunc, Rational(-24));
    const auto &e2 = fam.series(2);
    const auto c = express_in_depth_basis(d, {pow(e2, 3), e2 * fam.series(4), fam.series(6)}, 3);
    json j{{"trunc", cfg.trunc},
           {"weight", 6},
           {"depth", 3},
           {"coeffs", coeffs},
           {"integral", integral},
           {"depth_basis", {{"E2^3", c[0].str()}, {"E2*E4", c[1].str()}, {"E6", c[2].str()}}}};
    out << j.dump(2) << "\n";
}

void cmd_dim(const RunConfig &cfg, std::ostream &out)
{
    require_format(cfg, {"json", "text"});
    if (cfg.weight < 0) {
        throw usage_error("dim needs --weight");
    }
    const long d = dim_automorphic(cfg.mu, cfg.weight);
    if (cfg.format == "text") {
        out << d << "\n";
    } else {
        out << json{{"mu", cfg.mu}, {"weight", cfg.weight}, {"dim", d}}.dump(2) << "\n";
    }
}

void cmd_hauptbuch(const RunConfig &cfg, std::ostream &out)
{
    require_format(cfg, {"json"});
    const StructureConstant C = make_constant(cfg);
    json j;
    if (a1_is_exact(cfg)) {
        const auto fam = exact_family(cfg);
        const auto u = resolve_form(cfg, fam);
        j = io::hauptbuch_to_json(hauptbuch(u, fam, C));
        j["exact"] = true;
    } else if (cfg.extended) {
        const auto fam = numeric_family<long double>(cfg, C);
        j = io::hauptbuch_to_json(hauptbuch(resolve_form(cfg, fam), fam, C));
        j["exact"] = false;
    } else {
        const auto fam = numeric_family<double>(cfg, C);
        j = io::hauptbuch_to_json(hauptbuch(resolve_form(cfg, fam), fam, C));
        j["exact"] = false;
    }
    out << j.dump(2) << "\n";
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    RunConfig cfg;
    CLI::App app{"Hecke vector-form toolkit: Eisenstein series, multiplier systems and verification"};
    app.fallthrough(true);
    app.require_subcommand(1);
    app.add_option("--mu", cfg.mu, "Hecke group index (>= 3)");
    app.add_option("--n", cfg.trunc, "Truncation order N");
    app.add_option("--a1", cfg.a1, "q-coefficient of E2: a rational such as -24/1, or 'calibrate'");
    app.add_option("--tol", cfg.tol, "Verification / calibration tolerance");
    app.add_option("--seed", cfg.seed, "Seed for the sample plan");
    app.add_option("--points", cfg.points, "Number of sample points");
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text", "latex"}));
    app.add_option("--cache-dir", cfg.cache_dir, "Calibration cache directory (default $HVF_CACHE_DIR or ~/.cache/hvf)");
    app.add_flag("--no-cache", cfg.no_cache, "Do not read or write the calibration cache");
    app.add_option("--structure-constant", cfg.structure_constant,
                   "system (default), lcm, or a rational numerator x for C = x/(pi i)");
    app.add_option("--pin", cfg.pins, "Fix a_n at a degenerate order, as n=value (repeatable)");
    app.add_option("--which", cfg.which, "Check to run for verify");
    app.add_option("--weight", cfg.weight, "Weight of the form");
    app.add_option("--depth", cfg.depth, "Depth of the form");
    app.add_option("--form", cfg.form, "E2, D63, E<w>, or a path to a quasiform JSON file");
    app.add_option("--ell", cfg.ell, "Hauptbuch index for g_under_S");
    app.add_option("--r", cfg.r, "Matrix size parameter");
    app.add_flag("--extended", cfg.extended, "Use long double for numerics");

    std::string chosen;
    const std::vector<std::pair<std::string, std::string>> subs{
        {"eisenstein", "Eisenstein coefficient table"},
        {"calibrate", "Fit a1 (and free coefficients) to the fixed point at z = i"},
        {"verify", "Numeric verification of transformation laws"},
        {"multiplier", "Exact multiplier matrices"},
        {"symcheck", "Exact symmetric-power and presentation checks"},
        {"extremal", "Extremal weight-6 depth-3 form"},
        {"dim", "Dimension of automorphic forms of weight w = 0 mod 4"},
        {"hauptbuch", "Hauptbuch series of a quasiform"},
    };
    for (const auto &[name, desc] : subs) {
        app.add_subcommand(name, desc)->callback([&chosen, name = name] { chosen = name; });
    }

    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) {
        args.emplace_back(argv[i]);
    }
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n";
        return usage;
    }

    try {
        check_config(cfg);
        if (chosen == "eisenstein") {
            cmd_eisenstein(cfg, out);
        } else if (chosen == "calibrate") {
            cmd_calibrate(cfg, out);
        } else if (chosen == "verify") {
            cmd_verify(cfg, out);
        } else if (chosen == "multiplier") {
            cmd_multiplier(cfg, out);
        } else if (chosen == "symcheck") {
            cmd_symcheck(cfg, out);
        } else if (chosen == "extremal") {
            cmd_extremal(cfg, out);
        } else if (chosen == "dim") {
            cmd_dim(cfg, out);
        } else if (chosen == "hauptbuch") {
            cmd_hauptbuch(cfg, out);
        }
    } catch (const usage_error &e) {
        err << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const degenerate_recursion &e) {
        err << "error: " << e.what() << "\n";
        out << json{{"error", "degenerate_recursion"}, {"mu", e.mu()}, {"order", e.order()},
                    {"inconsistent", e.inconsistent()}}
                   .dump()
            << "\n";
        return degeneracy;
    } catch (const calibration_error &e) {
        err << "calibration error: " << e.what() << "\n";
        return calibration_failed;
    } catch (const verification_failure &e) {
        err << e.what() << "\n";
        return verification_failed;
    } catch (const residual_error &e) {
        err << "error: " << e.what() << "\n";
        return verification_failed;
    } catch (const evaluation_error &e) {
        err << "error: " << e.what() << "\n";
        return verification_failed;
    } catch (const std::domain_error &e) {
        err << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
    return ok;
}

} // namespace hvf::cli
