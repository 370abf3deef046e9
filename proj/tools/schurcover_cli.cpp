// Command line driver for the partition cover engine.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "schurcover/cover.hpp"
#include "schurcover/inject.hpp"

using namespace schurcover;

namespace {

constexpr const char* kCacheStamp = "schurcover-cache-v1";

struct CliResult {
    std::string body;
    int exit_code = 0;
};

std::string sanitize(const std::string& s) {
    std::string out;
    for (char c : s)
        out += (std::isalnum(static_cast<unsigned char>(c)) ? c : '-');
    return out;
}

std::filesystem::path cache_file(const std::string& dir, const std::string& key) {
    std::size_t h = std::hash<std::string>{}(key);
    std::ostringstream name;
    name << sanitize(key).substr(0, 80) << "-" << std::hex << h << ".txt";
    return std::filesystem::path(dir) / name.str();
}

std::optional<CliResult> read_cache(const std::filesystem::path& file, const std::string& key) {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    std::string stamp;
    if (!std::getline(in, stamp)) return std::nullopt;
    std::string expected_prefix = std::string(kCacheStamp) + " exit=";
    if (stamp.rfind(expected_prefix, 0) != 0) return std::nullopt;
    std::size_t sp = stamp.find(' ', expected_prefix.size());
    if (sp == std::string::npos || stamp.substr(sp + 1) != key) return std::nullopt;
    CliResult r;
    r.exit_code = std::stoi(stamp.substr(expected_prefix.size(), sp - expected_prefix.size()));
    std::ostringstream body;
    body << in.rdbuf();
    r.body = body.str();
    return r;
}

void write_cache(const std::filesystem::path& file, const std::string& key, const CliResult& r) {
    std::filesystem::create_directories(file.parent_path());
    std::ofstream out(file, std::ios::trunc);
    out << kCacheStamp << " exit=" << r.exit_code << " " << key << "\n" << r.body;
}

std::string render_expansion(const SchurExpansion& e, const std::string& format) {
    if (format == "tsv") return to_tsv(e);
    std::string out;
    for (const auto& [p, c] : e.terms) out += "s" + to_string(p) + ": " + c.str() + "\n";
    return out;
}

Partition parse_or_die(const std::string& text) { return parse_partition(text); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schur positivity engine for conjugate-complement products"};
    app.require_subcommand(1);

    int m = 0;
    std::string format = "text";
    int jobs = 0;
    std::string cache_dir;
    if (const char* env = std::getenv("SCHURCOVER_CACHE_DIR")) cache_dir = env;
    bool unsafe_m = false;
    app.add_option("--m", m, "side of the ambient square (m^m)");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "tsv"}));
    app.add_option("--jobs", jobs, "worker threads, 0 = hardware default");
    app.add_option("--cache-dir", cache_dir,
                   "cache directory (default: $SCHURCOVER_CACHE_DIR)");
    app.add_flag("--unsafe-m", unsafe_m, "allow m below the stable bound");

    std::string arg1, arg2;
    int sweep_n = 0, kron_k = 0;

    CLI::App* c_classify = app.add_subcommand("classify", "classify a partition");
    c_classify->add_option("nu", arg1, "partition, e.g. [6,5,3,3,3,1]")->required();

    CLI::App* c_expand = app.add_subcommand("expand", "expand s_{mu'} s_{mu^c} in (m^m)");
    c_expand->add_option("mu", arg1)->required();

    CLI::App* c_diff = app.add_subcommand("diff", "expand s_{mu'}s_{mu^c} - s_{nu'}s_{nu^c}");
    c_diff->add_option("mu", arg1)->required();
    c_diff->add_option("nu", arg2)->required();

    CLI::App* c_covers = app.add_subcommand("covers", "decide Schur positivity of the difference");
    c_covers->add_option("mu", arg1)->required();
    c_covers->add_option("nu", arg2)->required();

    CLI::App* c_verify = app.add_subcommand("verify", "sweep all covering pairs of weight n+1/n");
    c_verify->add_option("n", sweep_n)->required()->check(CLI::PositiveNumber);

    CLI::App* c_lexmin = app.add_subcommand("lexmin", "check the lex-least positive term");
    c_lexmin->add_option("nu", arg1)->required();

    CLI::App* c_inject = app.add_subcommand("inject", "verify the injection for a type shape");
    c_inject->add_option("nu", arg1)->required();

    CLI::App* c_kron = app.add_subcommand("kron", "Kronecker product of a hook with a square");
    c_kron->add_option("k", kron_k)->required()->check(CLI::NonNegativeNumber);

    for (CLI::App* s : app.get_subcommands({})) s->fallthrough();

    CLI11_PARSE(app, argc, argv);
    CLI::App* sub = app.get_subcommands().front();

    ExpandOptions opts;
    opts.unsafe_m = unsafe_m;
    opts.jobs = jobs;

    try {
        std::string verb = sub->get_name();
        CliResult result;
        std::string key;

        if (sub == c_classify) {
            Partition nu = parse_or_die(arg1);
            key = "classify " + to_string(nu);
            result.body = to_string(classify(nu)) + "\n";
        } else if (sub == c_expand) {
            Partition mu = parse_or_die(arg1);
            if (m <= 0) throw std::invalid_argument("expand: --m is required and positive");
            key = "expand " + to_string(mu) + " m=" + std::to_string(m) + " format=" + format +
                  (unsafe_m ? " unsafe" : "");
            result.body = render_expansion(product_conj_comp(mu, m, opts), format);
        } else if (sub == c_diff) {
            Partition mu = parse_or_die(arg1);
            Partition nu = parse_or_die(arg2);
            if (m <= 0) throw std::invalid_argument("diff: --m is required and positive");
            key = "diff " + to_string(mu) + " " + to_string(nu) + " m=" + std::to_string(m) +
                  " format=" + format + (unsafe_m ? " unsafe" : "");
            result.body = render_expansion(difference(mu, nu, m, opts), format);
        } else if (sub == c_covers) {
            Partition mu = parse_or_die(arg1);
            Partition nu = parse_or_die(arg2);
            key = "covers " + to_string(mu) + " " + to_string(nu) +
                  (m > 0 ? " m=" + std::to_string(m) : "");
            CoverVerdict v = covers(mu, nu, m, opts);
            result.body = v.positive ? "positive\n"
                                     : "negative witness=" + to_string(*v.witness) + "\n";
        } else if (sub == c_verify) {
            key = "verify n=" + std::to_string(sweep_n);
            ConjectureReport r = verify_conjecture(sweep_n, opts);
            result.body = to_string(r);
            if (!r.violations.empty()) result.exit_code = 2;
        } else if (sub == c_lexmin) {
            Partition nu = parse_or_die(arg1);
            key = "lexmin " + to_string(nu) + (m > 0 ? " m=" + std::to_string(m) : "");
            Partition predicted = lexmin_conjectured(nu);
            LexMinResult actual = lexmin_actual(nu, m, opts);
            bool match = actual.eta == predicted && actual.coeff == 1;
            result.body = "eta=" + to_string(actual.eta) + " conjectured=" +
                          to_string(predicted) + " match=" + (match ? "1" : "0") + "\n";
            if (!match) result.exit_code = 2;
        } else if (sub == c_inject) {
            Partition nu = parse_or_die(arg1);
            key = "inject " + to_string(nu);
            auto algo = select_injection(nu);
            if (!algo)
                throw std::invalid_argument("inject: no injection applies to " + to_string(nu));
            InjectionReport r = verify_injection(nu, *algo, opts);
            result.body = to_string(r);
            if (!r.ok()) result.exit_code = 2;
        } else if (sub == c_kron) {
            if (m <= 0) throw std::invalid_argument("kron: --m is required and positive");
            key = "kron m=" + std::to_string(m) + " k=" + std::to_string(kron_k) +
                  " format=" + format;
            result.body = render_expansion(kronecker_hook_square(m, kron_k), format);
        }

        if (!cache_dir.empty()) {
            std::filesystem::path file = cache_file(cache_dir, key);
            auto cached = read_cache(file, key);
            if (verb == "verify") {
                // always recompute; a stale cached report is a hard failure
                if (cached && cached->body != result.body) {
                    std::cerr << "cache drift for '" << key << "': cached report in " << file
                              << " no longer matches a fresh computation" << std::endl;
                    return 2;
                }
                if (!cached) write_cache(file, key, result);
            } else if (cached) {
                std::cout << cached->body << std::flush;
                return cached->exit_code;
            } else {
                write_cache(file, key, result);
            }
        }

        std::cout << result.body << std::flush;
        return result.exit_code;
    } catch (const std::exception& e) {
        std::cerr << e.what() << std::endl;
        return 1;
    }
}
