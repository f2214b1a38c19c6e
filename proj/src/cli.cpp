#include "dmf/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>

#include "dmf/printer.hpp"
#include "dmf/verify.hpp"

namespace dmf::cli {

namespace {

constexpr long long kPrecBudget = 20000;

// q must be a prime power p^e <= 16
FieldSpec field_from_q(int q) {
    for (int p = 2; p <= q; ++p) {
        bool prime = p >= 2;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) { prime = false; break; }
        if (!prime || q % p) continue;
        int e = 0;
        long long v = q;
        while (v % p == 0) { v /= p; ++e; }
        if (v == 1) return FieldSpec(p, e);
        break;
    }
    throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
}

struct Options {
    int q = 0, r = 0;
    int k = -1, j = -1, d = -1;
    long long prec = -1;
    std::string format = "text";
    int threads = 1;
    std::string out_path;
};

long long default_prec(const GenericModule& mod, const std::string& form,
                       const Options& o) {
    const RingSpec& spec = mod.spec();
    if (form == "eisenstein") return bounds::eisenstein(spec, o.k);
    if (form == "g") return bounds::g_theorem(spec);
    if (form == "h") return bounds::h_congruence(spec);
    if (form == "theta") return bounds::theta_order(spec, o.j, o.d) + 4;
    if (form == "sigma") {
        if (spec.q() == 2 && o.d == 1) return spec.qpow(spec.r() + o.j - 1) + 1;
        return bounds::sigma_order(spec, o.j, o.d) + 4;
    }
    if (form == "pi") {
        if (o.d == 1) return bounds::pi1_exact_order(spec) + 2;
        if (o.d == 2) return bounds::pi2_exact_order(spec) + 2;
        return (spec.q() - 1) * (spec.qpow((long long)spec.s() * o.d) - 1) + 2;
    }
    if (form == "tate") return bounds::tate(spec, o.k);
    throw std::invalid_argument("unknown form '" + form + "'");
}

int do_compute(const GenericModule& mod, const std::string& form, const Options& o,
               std::ostream& out) {
    long long M = o.prec > 0 ? o.prec : default_prec(mod, form, o);
    if (M > kPrecBudget)
        throw std::invalid_argument("requested precision exceeds the budget of " +
                                    std::to_string(kPrecBudget));
    const RingSpec& spec = mod.spec();
    TruncatedSeries series = TruncatedSeries::zero(spec, 1);
    std::string label;
    if (form == "eisenstein") {
        auto e = eisenstein_A_expansion(mod, o.k, M, o.threads);
        series = e.series;
        label = e.label;
    } else if (form == "g") {
        auto g = g_series(mod, o.k, M, o.threads);
        series = g.series;
        label = g.label;
    } else if (form == "h") {
        series = h_normalized(mod, M, o.threads);
        label = "H";
    } else if (form == "theta") {
        series = theta(mod, o.j, o.d, M, o.threads);
        label = "Theta(" + std::to_string(o.j) + "," + std::to_string(o.d) + ")";
    } else if (form == "sigma") {
        series = sigma(mod, o.j, o.d, M, o.threads);
        label = "Sigma(" + std::to_string(o.j) + "," + std::to_string(o.d) + ")";
    } else if (form == "pi") {
        series = pi_product(mod, o.d, M, o.threads);
        label = "Pi(" + std::to_string(o.d) + ")";
    } else if (form == "tate") {
        series = tate_eisenstein(mod, o.k, M, o.threads);
        label = "E_" + std::to_string(spec.qpow(o.k) - 1) + "(L)";
    } else {
        throw std::invalid_argument("unknown form '" + form + "'");
    }
    if (o.format == "json")
        out << to_json(series).dump(2) << "\n";
    else
        out << series_to_text(label, series) << "\n";
    return 0;
}

int do_verify(const GenericModule& mod, const std::string& id, const Options& o,
              std::ostream& out) {
    std::vector<VerificationReport> reports;
    if (id == "all") {
        reports = verify_all(mod, o.threads);
    } else {
        bool explicit_params = o.k >= 0 || o.j >= 0 || o.d >= 0;
        if (explicit_params) {
            VerifyParams params;
            if (id == "tate") {
                if (o.k < 0) throw std::invalid_argument("tate requires --k (the index i)");
                params.push_back({"i", o.k});
            } else {
                if (o.k >= 0) params.push_back({"k", o.k});
                if (o.j >= 0) params.push_back({"j", o.j});
                if (o.d >= 0) params.push_back({"d", o.d});
            }
            reports.push_back(verify_one(mod, id, params, o.threads));
        } else {
            for (const auto& [sid, params] : verify_suite(mod))
                if (sid == id) reports.push_back(verify_one(mod, sid, params, o.threads));
            if (reports.empty())
                reports.push_back(verify_one(mod, id, {}, o.threads));
        }
    }
    bool all_pass = true;
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& r : reports) {
            arr.push_back(report_to_json(r));
            all_pass = all_pass && r.pass;
        }
        out << arr.dump(2) << "\n";
    } else {
        int npass = 0;
        for (const auto& r : reports) {
            out << report_line(r) << "\n";
            npass += r.pass;
            all_pass = all_pass && r.pass;
        }
        out << "summary: " << npass << "/" << reports.size() << " passed\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"t-expansions of Drinfeld modular forms for GL(r), r >= 3"};
    app.require_subcommand(1);

    Options o;
    std::string form, theorem;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--q", o.q, "field size q = p^e <= 16")->required();
        cmd->add_option("--r", o.r, "rank r >= 3")->required();
        cmd->add_option("--k", o.k, "form index k (also the tate index i)");
        cmd->add_option("--j", o.j, "power index j");
        cmd->add_option("--d", o.d, "degree d");
        cmd->add_option("--prec", o.prec, "series precision override");
        cmd->add_option("--format", o.format, "text | json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--threads", o.threads, "worker threads (default 1)")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--out", o.out_path, "output file (default stdout)");
    };

    CLI::App* compute = app.add_subcommand("compute", "compute a t-expansion");
    compute->add_option("form", form, "eisenstein | g | h | theta | sigma | pi | tate")
        ->required();
    add_common(compute);

    CLI::App* verify = app.add_subcommand("verify", "run theorem checks");
    verify->add_option("theorem", theorem, "theorem id or 'all'")->required();
    add_common(verify);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help
            out << app.help() << "\n";
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        FieldSpec F = field_from_q(o.q);
        if (o.r < 3) throw std::invalid_argument("rank r must be >= 3");
        if (o.prec == 0 || o.prec > kPrecBudget)
            throw std::invalid_argument("precision out of range (1 <= prec <= " +
                                        std::to_string(kPrecBudget) + ")");
        RingSpec spec(F, o.r);
        GenericModule mod(spec);

        std::ofstream file;
        std::ostream* sink = &out;
        if (!o.out_path.empty()) {
            file.open(o.out_path, std::ios::binary);
            if (!file) throw std::invalid_argument("cannot open output file " + o.out_path);
            sink = &file;
        }
        if (compute->parsed()) return do_compute(mod, form, o, *sink);
        return do_verify(mod, theorem, o, *sink);
    } catch (const insufficient_precision& e) {
        err << "error: insufficient precision: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace dmf::cli
