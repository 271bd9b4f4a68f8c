#include "qcert/cli.hpp"

#include "qcert/oracle.hpp"
#include "qcert/progression.hpp"
#include "qcert/qprod.hpp"
#include "qcert/scan.hpp"
#include "qcert/special.hpp"
#include "qcert/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qcert::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::optional<unsigned long> env_prec() {
    const char* v = std::getenv("QCERT_PREC");
    if (v == nullptr || *v == '\0') return std::nullopt;
    char* end = nullptr;
    const unsigned long n = std::strtoul(v, &end, 10);
    if (end == v || *end != '\0')
        throw UsageError("QCERT_PREC is not a valid precision: " + std::string(v));
    return n;
}

// explicit flag > QCERT_PREC > built-in default
unsigned long resolve_prec(unsigned long explicit_prec, unsigned long fallback) {
    if (explicit_prec > 0) return explicit_prec;
    if (auto e = env_prec()) return *e;
    return fallback;
}

Series build_series(const std::string& name, unsigned long k, std::size_t prec) {
    if (name == "theta") return qprod::theta(prec);
    if (name == "theta_neg") return qprod::theta_neg(prec);
    if (name == "psi") return qprod::psi(prec);
    if (auto id = special::lookup(name)) {
        if (*id == special::Name::C_k) {
            if (k < 1) throw UsageError("series C_k requires --k K with K >= 1");
            return special::series_C_k(k, prec);
        }
        return special::build(*id, prec);
    }
    throw UsageError("unknown series: " + name +
                     " (catalog names plus theta, theta_neg, psi)");
}

std::string rat_str(const Rat& x) { return x.get_str(); }

json result_json(const verify::CheckResult& r) {
    json j;
    j["check"] = r.name;
    j["prec"] = r.prec;
    j["status"] = r.passed ? "pass" : "fail";
    if (r.first_failure) {
        j["first_failure"] = {{"exponent", r.first_failure->exponent},
                              {"lhs", rat_str(r.first_failure->lhs)},
                              {"rhs", rat_str(r.first_failure->rhs)}};
    } else {
        j["first_failure"] = nullptr;
    }
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

void render_results(const std::vector<verify::CheckResult>& results, const std::string& format,
                    std::ostream& out) {
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : results) arr.push_back(result_json(r));
        out << arr.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        out << "check,prec,status,first_failure_exponent,elapsed_ms\n";
        for (const auto& r : results) {
            out << r.name << "," << r.prec << "," << (r.passed ? "pass" : "fail") << ",";
            if (r.first_failure) out << r.first_failure->exponent;
            out << "," << r.elapsed_ms << "\n";
        }
        return;
    }
    std::size_t passed = 0;
    for (const auto& r : results) {
        if (r.passed) {
            out << "pass  " << r.name << "  (prec " << r.prec << ", " << r.elapsed_ms
                << " ms)\n";
            ++passed;
        } else {
            out << "FAIL  " << r.name << "  at q^" << r.first_failure->exponent
                << ": lhs=" << rat_str(r.first_failure->lhs)
                << " rhs=" << rat_str(r.first_failure->rhs) << "  (prec " << r.prec << ")\n";
        }
    }
    out << passed << "/" << results.size() << " checks passed\n";
}

int cmd_verify(bool all, const std::vector<std::string>& checks, unsigned long prec_flag,
               const std::string& format, std::ostream& out) {
    const std::size_t prec = resolve_prec(prec_flag, 1000);
    std::vector<verify::CheckResult> results;
    if (all || checks.empty()) {
        results = verify::run_all(prec);
    } else {
        for (const std::string& name : checks)
            if (!verify::has_check(name)) throw UsageError("unknown check: " + name);
        for (const std::string& name : checks) results.push_back(verify::run_named(name, prec));
    }
    render_results(results, format, out);
    return std::all_of(results.begin(), results.end(),
                       [](const verify::CheckResult& r) { return r.passed; })
               ? 0
               : 1;
}

int cmd_coeff(const std::string& series, unsigned long k, unsigned long n,
              unsigned long prec_flag, std::ostream& out) {
    const std::size_t prec = resolve_prec(prec_flag, n + 1);
    if (n >= prec)
        throw UsageError("index " + std::to_string(n) + " is beyond truncation order " +
                         std::to_string(prec) + "; raise --prec");
    Series s = build_series(series, k, prec);
    out << rat_str(s.coeff(n)) << "\n";
    return 0;
}

int cmd_dissect(const std::string& series, unsigned long k, std::size_t mod,
                unsigned long prec_flag, std::size_t terms, const std::string& format,
                std::ostream& out) {
    const std::size_t prec = resolve_prec(prec_flag, 1000);
    Series s = build_series(series, k, prec);
    std::vector<Series> comps = dissect(s, mod);
    if (format == "json") {
        json j;
        j["series"] = series;
        j["mod"] = mod;
        j["prec"] = prec;
        j["components"] = json::array();
        for (std::size_t r = 0; r < comps.size(); ++r) {
            json c;
            c["residue"] = r;
            c["prec"] = comps[r].prec();
            json lead = json::array();
            for (std::size_t i = 0; i < std::min(terms, comps[r].prec()); ++i)
                lead.push_back(rat_str(comps[r].coeff(i)));
            c["leading"] = lead;
            j["components"].push_back(c);
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    if (format == "csv") {
        out << "component,n,coefficient\n";
        for (std::size_t r = 0; r < comps.size(); ++r)
            for (std::size_t i = 0; i < std::min(terms, comps[r].prec()); ++i)
                out << r << "," << i << "," << rat_str(comps[r].coeff(i)) << "\n";
        return 0;
    }
    out << "series " << series << ", mod " << mod << ", prec " << prec << "\n";
    for (std::size_t r = 0; r < comps.size(); ++r) {
        out << "component " << r << " (prec " << comps[r].prec() << "):";
        for (std::size_t i = 0; i < std::min(terms, comps[r].prec()); ++i)
            out << " " << rat_str(comps[r].coeff(i));
        out << "\n";
    }
    return 0;
}

void render_discoveries(const std::vector<scan::Discovery>& found, const std::string& series,
                        const std::string& format, std::ostream& out) {
    if (format == "json") {
        json arr = json::array();
        for (const auto& d : found) {
            json j;
            j["series"] = series;
            j["residue"] = d.progression.residue;
            j["progression_modulus"] = d.progression.modulus;
            j["test"] = (d.modulus == 0) ? std::string("exact") : d.modulus.get_str();
            j["witnesses"] = d.witnesses;
            j["degenerate"] = d.degenerate;
            arr.push_back(j);
        }
        out << arr.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        out << "series,residue,progression_modulus,test,witnesses,degenerate\n";
        for (const auto& d : found)
            out << series << "," << d.progression.residue << "," << d.progression.modulus << ","
                << ((d.modulus == 0) ? std::string("exact") : d.modulus.get_str()) << ","
                << d.witnesses << "," << (d.degenerate ? 1 : 0) << "\n";
        return;
    }
    for (const auto& d : found) {
        out << "empirical: " << series << "[" << d.progression.modulus << "n+"
            << d.progression.residue << "] == 0";
        if (d.modulus == 0)
            out << " exactly";
        else
            out << " (mod " << d.modulus.get_str() << ")";
        out << "  (witnesses " << d.witnesses << ")";
        if (d.degenerate) out << " [degenerate: zero series]";
        out << "\n";
    }
    if (found.empty()) out << "no progressions found\n";
}

int cmd_scan(const std::string& target, unsigned long kmax, const std::string& series,
             unsigned long k, std::size_t mmax, const std::string& moduli_csv,
             unsigned long prec_flag, const std::string& format, std::ostream& out) {
    if (target == "openq") {
        const std::size_t prec = resolve_prec(prec_flag, 5001);
        auto results = scan::conjecture_openq(prec);
        render_results(results, format, out);
        return results.front().passed ? 0 : 1;
    }
    if (target == "family") {
        const std::size_t prec = resolve_prec(prec_flag, 6000);
        auto results = scan::conjecture_family(kmax, prec);
        render_results(results, format, out);
        return std::all_of(results.begin(), results.end(),
                           [](const verify::CheckResult& r) { return r.passed; })
                   ? 0
                   : 1;
    }
    if (target == "discover") {
        if (series.empty()) throw UsageError("scan --target discover requires --series");
        const std::size_t prec = resolve_prec(prec_flag, 1000);
        std::vector<Int> moduli;
        std::stringstream ss(moduli_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            try {
                moduli.emplace_back(tok);
            } catch (const std::invalid_argument&) {
                throw UsageError("invalid modulus in --moduli: " + tok);
            }
        }
        if (moduli.empty()) throw UsageError("--moduli is empty");
        for (const Int& m : moduli)
            if (m != 0 && m < 2) throw UsageError("moduli must be 0 (exact test) or >= 2");
        Series f = build_series(series, k, prec);
        render_discoveries(scan::discover(f, moduli, mmax), series, format, out);
        return 0;
    }
    throw UsageError("unknown scan target: " + target + " (openq, family, discover)");
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact q-series engine: identity certification, congruence scans, "
                 "coefficient inspection"};
    app.name("qcert");
    app.require_subcommand(0, 1);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run named certification checks");
    bool v_all = false;
    std::vector<std::string> v_checks;
    unsigned long v_prec = 0;
    std::string v_format = "text";
    verify_cmd->add_flag("--all", v_all, "run the whole registry (default)");
    verify_cmd->add_option("--check", v_checks, "run one named check (repeatable)");
    verify_cmd->add_option("--prec", v_prec, "truncation order (default 1000 or QCERT_PREC)")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--format", v_format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    auto* list_flag = verify_cmd->add_flag("--list", "list registry checks and exit");

    // coeff
    auto* coeff_cmd = app.add_subcommand("coeff", "print one exact coefficient");
    std::string c_series;
    unsigned long c_k = 0, c_n = 0, c_prec = 0;
    coeff_cmd->add_option("--series", c_series, "catalog name")->required();
    coeff_cmd->add_option("--k", c_k, "parameter k (C_k only)");
    coeff_cmd->add_option("--n", c_n, "coefficient index")->required();
    coeff_cmd->add_option("--prec", c_prec, "truncation order (default n+1 or QCERT_PREC)")
        ->check(CLI::PositiveNumber);

    // dissect
    auto* dissect_cmd = app.add_subcommand("dissect", "split a series by exponent residue");
    std::string d_series, d_format = "text";
    unsigned long d_k = 0, d_prec = 0;
    std::size_t d_mod = 0, d_terms = 8;
    dissect_cmd->add_option("--series", d_series, "catalog name")->required();
    dissect_cmd->add_option("--k", d_k, "parameter k (C_k only)");
    dissect_cmd->add_option("--mod", d_mod, "dissection modulus")
        ->required()
        ->check(CLI::PositiveNumber);
    dissect_cmd->add_option("--prec", d_prec, "truncation order (default 1000 or QCERT_PREC)")
        ->check(CLI::PositiveNumber);
    dissect_cmd->add_option("--terms", d_terms, "leading coefficients to print per component");
    dissect_cmd->add_option("--format", d_format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "congruence scans and discovery");
    std::string s_target, s_series, s_moduli = "0,2,4,8", s_format = "text";
    unsigned long s_kmax = 2, s_k = 0, s_prec = 0;
    std::size_t s_mmax = 8;
    scan_cmd->add_option("--target", s_target, "openq, family or discover")->required();
    scan_cmd->add_option("--kmax", s_kmax, "family: largest k (default 2)");
    scan_cmd->add_option("--series", s_series, "discover: catalog name");
    scan_cmd->add_option("--k", s_k, "parameter k (C_k only)");
    scan_cmd->add_option("--mmax", s_mmax, "discover: largest progression modulus (default 8)");
    scan_cmd->add_option("--moduli", s_moduli,
                         "discover: comma list of tests, 0 = exact vanishing (default 0,2,4,8)");
    scan_cmd->add_option("--prec", s_prec,
                         "truncation order (defaults: openq 5001, family 6000, discover 1000)")
        ->check(CLI::PositiveNumber);
    scan_cmd->add_option("--format", s_format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (verify_cmd->parsed()) {
            if (list_flag->count() > 0) {
                for (const auto& e : verify::registry())
                    out << e.name << "  -  " << e.description << "\n";
                return 0;
            }
            return cmd_verify(v_all, v_checks, v_prec, v_format, out);
        }
        if (coeff_cmd->parsed()) return cmd_coeff(c_series, c_k, c_n, c_prec, out);
        if (dissect_cmd->parsed())
            return cmd_dissect(d_series, d_k, d_mod, d_prec, d_terms, d_format, out);
        if (scan_cmd->parsed())
            return cmd_scan(s_target, s_kmax, s_series, s_k, s_mmax, s_moduli, s_prec, s_format,
                            out);
        out << app.help();
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace qcert::cli
