// Command line front end: exact Kronecker and Littlewood-Richardson
// coefficients, character values, contingency-array counts, the reduction
// certificate and the cross-verification suites.
//
// Exit codes: 0 success, 1 usage or input errors, 2 verification failure.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "kroncoeff/characters.hpp"
#include "kroncoeff/contingency.hpp"
#include "kroncoeff/errors.hpp"
#include "kroncoeff/hooks.hpp"
#include "kroncoeff/kron.hpp"
#include "kroncoeff/lr.hpp"
#include "kroncoeff/partition.hpp"
#include "kroncoeff/report.hpp"
#include "kroncoeff/verify.hpp"

namespace {

using kroncoeff::Partition;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    int64_t millis() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::vector<int64_t> parse_vector(const std::string& text) {
    std::vector<int64_t> out;
    if (text.empty()) return out;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t comma = text.find(',', pos);
        std::string item =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::erase(item, ' ');
        try {
            size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw kroncoeff::input_error("cannot parse integer vector \"" + text + "\"");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

kroncoeff::Method parse_method(const std::string& name) {
    if (name == "oracle") return kroncoeff::Method::oracle;
    if (name == "tables") return kroncoeff::Method::tables;
    if (name == "auto") return kroncoeff::Method::automatic;
    throw kroncoeff::input_error("unknown method \"" + name + "\"");
}

const char* method_name(kroncoeff::Method m) {
    switch (m) {
    case kroncoeff::Method::oracle: return "oracle";
    case kroncoeff::Method::tables: return "tables";
    default: return "auto";
    }
}

// conjugation symmetry variant with the smallest padded length
void apply_conjugation_trick(Partition& lam, Partition& mu, Partition& nu) {
    using kroncoeff::conjugate;
    struct Variant {
        Partition a, b, c;
    };
    const std::array<Variant, 4> variants{{
        {lam, mu, nu},
        {conjugate(lam), conjugate(mu), nu},
        {conjugate(lam), mu, conjugate(nu)},
        {lam, conjugate(mu), conjugate(nu)},
    }};
    size_t best = 0;
    int best_len = std::max({variants[0].a.length(), variants[0].b.length(),
                             variants[0].c.length()});
    for (size_t i = 1; i < variants.size(); ++i) {
        const int len = std::max({variants[i].a.length(), variants[i].b.length(),
                                  variants[i].c.length()});
        if (len < best_len) {
            best_len = len;
            best = i;
        }
    }
    lam = variants[best].a;
    mu = variants[best].b;
    nu = variants[best].c;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Kronecker coefficient toolkit"};
    app.require_subcommand(1);

    int threads = 0;
    std::string char_cache_in, char_cache_out;
    size_t table_capacity = kroncoeff::TableCounter::default_capacity;
    int hook_cap = kroncoeff::hook_settings().max_n;
    app.add_option("--threads", threads, "cap the number of worker threads");
    app.add_option("--char-cache", char_cache_in,
                   "character cache file to load (overrides KRONCOEFF_CHAR_CACHE)");
    app.add_option("--char-cache-out", char_cache_out,
                   "write the character cache to this file on exit");
    app.add_option("--table-cache-capacity", table_capacity,
                   "contingency cache entry cap (default 1048576, cleared when full)");
    app.add_option("--max-hook-n", hook_cap, "enumeration cap for the hook rule");
    kroncoeff::KronSettings& kron_cfg = kroncoeff::kron_settings();
    app.add_option("--oracle-fallback-n", kron_cfg.oracle_fallback_max_n,
                   "auto method: largest reduced size still sent to the character "
                   "route when the triple is long (default 12)");
    app.add_option("--oracle-fallback-len", kron_cfg.oracle_fallback_min_len,
                   "auto method: length from which the character route is "
                   "preferred (default 5)");

    std::string lam_s, mu_s, nu_s, a_s, b_s, c_s, method_s = "auto";
    bool json_out = false, gapp = false, trace = false, conjugate_trick = false;
    int hook_k = 0;
    int verify_max_n = 5;
    std::optional<int64_t> embed_n;

    CLI::App* cmd_kron = app.add_subcommand("kron", "Kronecker coefficient g(lambda,mu,nu)");
    cmd_kron->add_option("--lam", lam_s, "partition, e.g. 2,1")->required();
    cmd_kron->add_option("--mu", mu_s, "partition")->required();
    cmd_kron->add_option("--nu", nu_s, "partition")->required();
    cmd_kron->add_option("--method", method_s, "oracle|tables|auto");
    cmd_kron->add_flag("--gapp", gapp, "also print the GapP decomposition");
    cmd_kron->add_flag("--json", json_out, "machine readable output");
    cmd_kron->add_flag("--conjugate", conjugate_trick,
                       "replace the triple by the conjugation-symmetric variant "
                       "with the fewest parts before computing");

    CLI::App* cmd_reduce = app.add_subcommand("reduce", "reduction map certificate");
    cmd_reduce->add_option("--lam", lam_s)->required();
    cmd_reduce->add_option("--mu", mu_s)->required();
    cmd_reduce->add_option("--nu", nu_s)->required();
    cmd_reduce->add_flag("--json", json_out);

    CLI::App* cmd_char = app.add_subcommand("char", "character value chi^lambda[nu]");
    cmd_char->add_option("--lam", lam_s)->required();
    cmd_char->add_option("--nu", nu_s)->required();
    cmd_char->add_flag("--json", json_out);

    CLI::App* cmd_hook = app.add_subcommand("hook", "g(lambda,mu,(n-k,1^k)) by tableau count");
    cmd_hook->add_option("--lam", lam_s)->required();
    cmd_hook->add_option("--mu", mu_s)->required();
    cmd_hook->add_option("--k", hook_k, "number of barred entries")->required();
    cmd_hook->add_flag("--trace", trace, "print each accepted tableau");
    cmd_hook->add_flag("--json", json_out);

    CLI::App* cmd_lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
    cmd_lr->add_option("--lam", lam_s)->required();
    cmd_lr->add_option("--mu", mu_s)->required();
    cmd_lr->add_option("--nu", nu_s)->required();
    cmd_lr->add_option("--method", method_s, "direct|reduction|embedding");
    cmd_lr->add_option("--n", embed_n, "embedding size for --method embedding");
    cmd_lr->add_flag("--json", json_out);

    CLI::App* cmd_red = app.add_subcommand("redkron", "reduced Kronecker coefficient");
    cmd_red->add_option("--lam", lam_s)->required();
    cmd_red->add_option("--mu", mu_s)->required();
    cmd_red->add_option("--nu", nu_s)->required();
    cmd_red->add_flag("--json", json_out);

    CLI::App* cmd_tables = app.add_subcommand("tables", "3-d contingency array count");
    cmd_tables->add_option("--a", a_s, "plane sums, e.g. 1,1")->required();
    cmd_tables->add_option("--b", b_s)->required();
    cmd_tables->add_option("--c", c_s)->required();
    cmd_tables->add_flag("--json", json_out);

    CLI::App* cmd_verify = app.add_subcommand("verify", "run the cross-method suites");
    cmd_verify->add_option("--max-n", verify_max_n, "size cap for the sweeps (hard cap 10)")
        ->check(CLI::Range(0, 10));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 1 : 0;
    }

    try {
        if (threads > 0) omp_set_num_threads(threads);
        kroncoeff::global_table_counter().set_capacity(table_capacity);
        kroncoeff::hook_settings().max_n = hook_cap;

        if (char_cache_in.empty()) {
            if (const char* env = std::getenv("KRONCOEFF_CHAR_CACHE")) char_cache_in = env;
        }
        if (!char_cache_in.empty()) kroncoeff::global_char_table().load(char_cache_in);

        Timer timer;
        nlohmann::ordered_json report;
        std::string plain;

        if (*cmd_kron) {
            Partition lam = Partition::parse(lam_s);
            Partition mu = Partition::parse(mu_s);
            Partition nu = Partition::parse(nu_s);
            if (conjugate_trick) apply_conjugation_trick(lam, mu, nu);
            const kroncoeff::Method method = parse_method(method_s);
            const kroncoeff::BigCount g = kroncoeff::compute(lam, mu, nu, method);
            nlohmann::ordered_json input{
                {"lambda", lam.str()}, {"mu", mu.str()}, {"nu", nu.str()}};
            report = kroncoeff::make_report(input, g.get_str(), method_name(method),
                                            timer.millis());
            plain = g.get_str();
            if (gapp) {
                const kroncoeff::GappPair pair = kroncoeff::gapp_decomposition(lam, mu, nu);
                report["gapp"] = {{"pos", pair.pos.get_str()}, {"neg", pair.neg.get_str()}};
                plain += "\npos " + pair.pos.get_str() + "\nneg " + pair.neg.get_str();
            }
        } else if (*cmd_reduce) {
            const Partition lam = Partition::parse(lam_s);
            const Partition mu = Partition::parse(mu_s);
            const Partition nu = Partition::parse(nu_s);
            const kroncoeff::ReductionOutcome out = kroncoeff::reduce(lam, mu, nu);
            nlohmann::ordered_json input{
                {"lambda", lam.str()}, {"mu", mu.str()}, {"nu", nu.str()}};
            if (out.provably_zero()) {
                plain = "provably_zero witness_index " +
                        std::to_string(out.zero().witness_index);
                report = kroncoeff::make_report(input, "0", "reduction", timer.millis());
                report["outcome"] = "provably_zero";
                report["witness_index"] = out.zero().witness_index;
            } else {
                const kroncoeff::Reduced& red = out.reduced();
                std::string iset;
                for (size_t i = 0; i < red.index_set.size(); ++i) {
                    if (i) iset += ',';
                    iset += std::to_string(red.index_set[i]);
                }
                plain = "t " + std::to_string(red.t) + "\nomega " + red.omega.str() +
                        "\nrho " + red.rho.str() + "\nI " + iset + "\nphi_lambda " +
                        red.phi_lambda.str() + "\nphi_mu " + red.phi_mu.str() +
                        "\nphi_nu " + red.phi_nu.str();
                report = kroncoeff::make_report(input, "reduced", "reduction", timer.millis());
                report["outcome"] = "reduced";
                report["t"] = red.t;
                report["omega"] = red.omega.str();
                report["rho"] = red.rho.str();
                report["I"] = red.index_set;
                report["phi_lambda"] = red.phi_lambda.str();
                report["phi_mu"] = red.phi_mu.str();
                report["phi_nu"] = red.phi_nu.str();
            }
        } else if (*cmd_char) {
            const Partition lam = Partition::parse(lam_s);
            const Partition nu = Partition::parse(nu_s);
            const kroncoeff::BigInt value = kroncoeff::chi(lam, nu);
            nlohmann::ordered_json input{{"lambda", lam.str()}, {"nu", nu.str()}};
            report = kroncoeff::make_report(input, value.get_str(), "murnaghan-nakayama",
                                            timer.millis());
            plain = value.get_str();
        } else if (*cmd_hook) {
            const Partition lam = Partition::parse(lam_s);
            const Partition mu = Partition::parse(mu_s);
            kroncoeff::BigCount count;
            if (trace) {
                count = kroncoeff::count_hook_kron_trace(
                    lam, mu, hook_k, [&](const kroncoeff::BarredTableau& t) {
                        std::cout << t.str() << "\n";
                    });
            } else {
                count = kroncoeff::count_hook_kron(lam, mu, hook_k);
            }
            nlohmann::ordered_json input{
                {"lambda", lam.str()}, {"mu", mu.str()}, {"k", hook_k}};
            report = kroncoeff::make_report(input, count.get_str(), "hook-rule",
                                            timer.millis());
            plain = count.get_str();
        } else if (*cmd_lr) {
            const Partition lam = Partition::parse(lam_s);
            const Partition mu = Partition::parse(mu_s);
            const Partition nu = Partition::parse(nu_s);
            std::string how = method_s == "auto" ? "direct" : method_s;
            kroncoeff::BigCount value;
            if (how == "direct") {
                value = kroncoeff::lr_coefficient(lam, mu, nu);
            } else if (how == "reduction") {
                value = kroncoeff::lr_via_reduction(lam, mu, nu);
            } else if (how == "embedding") {
                const int64_t n = embed_n.value_or(
                    std::max<int64_t>(lam.part(0), mu.part(0)) + nu.size() + lam.size());
                value = kroncoeff::murnaghan_embedding(lam, mu, nu, n);
            } else {
                throw kroncoeff::input_error("unknown lr method \"" + how + "\"");
            }
            nlohmann::ordered_json input{
                {"lambda", lam.str()}, {"mu", mu.str()}, {"nu", nu.str()}};
            report = kroncoeff::make_report(input, value.get_str(), how, timer.millis());
            plain = value.get_str();
        } else if (*cmd_red) {
            const Partition lam = Partition::parse(lam_s);
            const Partition mu = Partition::parse(mu_s);
            const Partition nu = Partition::parse(nu_s);
            const kroncoeff::BigCount value = kroncoeff::reduced_kron(lam, mu, nu);
            nlohmann::ordered_json input{
                {"lambda", lam.str()}, {"mu", mu.str()}, {"nu", nu.str()}};
            report = kroncoeff::make_report(input, value.get_str(), "reduced-kron",
                                            timer.millis());
            plain = value.get_str();
        } else if (*cmd_tables) {
            const kroncoeff::Marginals m{parse_vector(a_s), parse_vector(b_s),
                                         parse_vector(c_s)};
            const kroncoeff::BigCount value = kroncoeff::count_tables(m);
            nlohmann::ordered_json input{{"a", a_s}, {"b", b_s}, {"c", c_s}};
            report = kroncoeff::make_report(input, value.get_str(), "dp", timer.millis());
            plain = value.get_str();
        } else if (*cmd_verify) {
            const auto results = kroncoeff::run_verify(verify_max_n);
            bool all_passed = true;
            int64_t total_cases = 0;
            for (const auto& r : results) {
                total_cases += r.cases;
                if (r.passed) {
                    std::cout << "PASS " << r.name << " cases=" << r.cases << "\n";
                } else {
                    all_passed = false;
                    std::cout << "FAIL " << r.name << " cases=" << r.cases
                              << " counterexample: " << r.counterexample << "\n";
                }
            }
            if (!all_passed) return 2;
            std::cout << "all suites passed, " << total_cases << " checks\n";
            if (!char_cache_out.empty()) {
                kroncoeff::global_char_table().save(char_cache_out);
            }
            return 0;
        }

        if (json_out) {
            std::cout << report.dump() << "\n";
        } else {
            std::cout << plain << "\n";
        }
        if (!char_cache_out.empty()) {
            kroncoeff::global_char_table().save(char_cache_out);
        }
        return 0;
    } catch (const kroncoeff::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
