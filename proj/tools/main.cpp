// eulerchi CLI: exact tables of generalized Euler numbers/polynomials
// attached to Dirichlet characters of odd modulus, alternating power sums,
// and verification grids for the symmetry identities.
//
// Output is deterministic: characters ascend by index, grid tuples iterate
// in a fixed nesting (character, w1, w2, order, n), JSON keys keep insertion
// order and every number is exact. Grid subcommands stream one report per
// line (NDJSON / CSV rows / plain text). Exit codes: 0 all computed or
// verified, 1 at least one identity violation, 2 usage or validation error.

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "eulerchi/euler.hpp"
#include "eulerchi/json_io.hpp"
#include "eulerchi/symmetry.hpp"

namespace fs = std::filesystem;
using namespace eulerchi;

namespace {

enum class Format { json, csv, plain };

Format parse_format(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "plain") return Format::plain;
    throw std::invalid_argument("unknown format: " + name);
}

// Serialized, mutex-guarded line sink; stdout or --output file.
class OutputSink {
public:
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::invalid_argument("cannot open output file: " + path);
            os_ = &file_;
        } else {
            os_ = &std::cout;
        }
    }

    void line(const std::string& s) {
        std::lock_guard<std::mutex> lock(mu_);
        *os_ << s << '\n';
    }

private:
    std::ostream* os_;
    std::ofstream file_;
    std::mutex mu_;
};

std::string csv_coeff_list(const CycloElement& z) {
    std::string out = "\"";
    const auto& cs = z.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) out += ",";
        out += cs[i].to_string();
    }
    return out + "\"";
}

// ---------------------------------------------------------------------------
// Euler-table disk cache. Location: $EULERCHI_CACHE_DIR if set (empty value
// disables caching), otherwise $XDG_CACHE_HOME/eulerchi or ~/.cache/eulerchi.
// Best-effort: unreadable or stale files are ignored, writes go through a
// temp file + rename.
// ---------------------------------------------------------------------------

std::optional<fs::path> cache_directory() {
    if (const char* env = std::getenv("EULERCHI_CACHE_DIR")) {
        if (*env == '\0') return std::nullopt;
        return fs::path(env);
    }
    if (const char* xdg = std::getenv("XDG_CACHE_HOME")) {
        if (*xdg != '\0') return fs::path(xdg) / "eulerchi";
    }
    if (const char* home = std::getenv("HOME")) {
        if (*home != '\0') return fs::path(home) / ".cache" / "eulerchi";
    }
    return std::nullopt;
}

fs::path table_file(const fs::path& dir, const DirichletCharacter& chi, unsigned long m) {
    return dir / ("euler_table_d" + std::to_string(chi.modulus()) + "_chi" +
                  std::to_string(chi.index()) + "_m" + std::to_string(m) + ".json");
}

void preload_table(const DirichletCharacter& chi, unsigned long m) {
    const auto dir = cache_directory();
    if (!dir) return;
    try {
        std::ifstream in(table_file(*dir, chi, m));
        if (!in) return;
        const json j = json::parse(in);
        if (j.at("modulus").get<unsigned long>() != chi.modulus() ||
            j.at("char").get<unsigned long>() != chi.index() ||
            j.at("order").get<unsigned long>() != m) {
            return;
        }
        std::vector<CycloElement> numbers;
        for (const auto& item : j.at("numbers")) {
            CycloElement z = cyclo_from_json(item);
            if (z.field() != chi.value_field()) return;
            numbers.push_back(std::move(z));
        }
        seed_euler_table(chi, m, std::move(numbers));
    } catch (const std::exception&) {
        // stale or foreign file: recompute instead
    }
}

void persist_table(const DirichletCharacter& chi, unsigned long m,
                   const std::vector<CycloElement>& numbers) {
    const auto dir = cache_directory();
    if (!dir) return;
    try {
        fs::create_directories(*dir);
        const fs::path path = table_file(*dir, chi, m);
        {
            std::ifstream in(path);
            if (in) {
                const json j = json::parse(in);
                if (j.at("numbers").size() >= numbers.size()) return;
            }
        }
        json rows = json::array();
        for (const auto& z : numbers) rows.push_back(to_json(z));
        const json j{{"modulus", chi.modulus()},
                     {"char", chi.index()},
                     {"order", m},
                     {"numbers", std::move(rows)}};
        const fs::path tmp = path.string() + ".tmp";
        {
            std::ofstream out(tmp);
            out << j.dump() << '\n';
        }
        fs::rename(tmp, path);
    } catch (const std::exception&) {
        // cache is an optimization only
    }
}

// ---------------------------------------------------------------------------
// Table subcommands
// ---------------------------------------------------------------------------

struct CommonArgs {
    unsigned long modulus = 1;
    std::string char_spec = "0";
    std::string format = "json";
    std::string output;
};

unsigned long parse_char_index(const std::string& spec) {
    if (spec == "all") {
        throw std::invalid_argument("--char all is not supported by this subcommand");
    }
    std::size_t pos = 0;
    const unsigned long idx = std::stoul(spec, &pos);
    if (pos != spec.size()) throw std::invalid_argument("bad character index: " + spec);
    return idx;
}

int run_numbers(const CommonArgs& common, unsigned long order, unsigned max_n) {
    const Format format = parse_format(common.format);
    OutputSink sink(common.output);
    const auto chi = character_at(common.modulus, parse_char_index(common.char_spec));

    preload_table(chi, order);
    const auto table = euler_numbers(chi, order, max_n);
    persist_table(chi, order, table.numbers);

    if (format == Format::csv) sink.line("modulus,char,order,n,zeta_order,coeffs");
    if (format == Format::plain) {
        sink.line("# numbers modulus=" + std::to_string(chi.modulus()) +
                  " char=" + std::to_string(chi.index()) + " order=" + std::to_string(order));
    }
    for (unsigned n = 0; n <= max_n; ++n) {
        const CycloElement& value = table.numbers[n];
        switch (format) {
            case Format::json: {
                json j{{"modulus", chi.modulus()}, {"char", chi.index()}, {"order", order},
                       {"n", n},                   {"value", to_json(value)}};
                sink.line(j.dump());
                break;
            }
            case Format::csv:
                sink.line(std::to_string(chi.modulus()) + "," + std::to_string(chi.index()) +
                          "," + std::to_string(order) + "," + std::to_string(n) + "," +
                          std::to_string(value.field()->order()) + "," + csv_coeff_list(value));
                break;
            case Format::plain:
                sink.line("E^(" + std::to_string(order) + ")_" + std::to_string(n) + " = " +
                          value.to_string());
                break;
        }
    }
    return 0;
}

int run_poly(const CommonArgs& common, unsigned long order, unsigned n) {
    const Format format = parse_format(common.format);
    OutputSink sink(common.output);
    const auto chi = character_at(common.modulus, parse_char_index(common.char_spec));

    preload_table(chi, order);
    const auto poly = euler_polynomial(chi, order, n);
    persist_table(chi, order, euler_numbers(chi, order, n).numbers);

    switch (format) {
        case Format::json: {
            json j{{"modulus", chi.modulus()}, {"char", chi.index()}, {"order", order},
                   {"n", n},                   {"coefficients", to_json(poly)}};
            sink.line(j.dump());
            break;
        }
        case Format::csv: {
            sink.line("modulus,char,order,n,degree,zeta_order,coeffs");
            for (std::size_t k = 0; k < poly.coeffs().size(); ++k) {
                sink.line(std::to_string(chi.modulus()) + "," + std::to_string(chi.index()) +
                          "," + std::to_string(order) + "," + std::to_string(n) + "," +
                          std::to_string(k) + "," +
                          std::to_string(chi.value_field()->order()) + "," +
                          csv_coeff_list(poly.coeffs()[k]));
            }
            break;
        }
        case Format::plain:
            sink.line("# poly modulus=" + std::to_string(chi.modulus()) +
                      " char=" + std::to_string(chi.index()) + " order=" + std::to_string(order));
            sink.line("E^(" + std::to_string(order) + ")_" + std::to_string(n) +
                      "(x) = " + poly.to_string());
            break;
    }
    return 0;
}

int run_powersum(const CommonArgs& common, unsigned long k, unsigned long long upper) {
    const Format format = parse_format(common.format);
    OutputSink sink(common.output);
    const auto chi = character_at(common.modulus, parse_char_index(common.char_spec));
    const CycloElement value = power_sum(chi, k, upper);

    switch (format) {
        case Format::json: {
            json j{{"modulus", chi.modulus()}, {"char", chi.index()}, {"k", k},
                   {"upper", upper},           {"value", to_json(value)}};
            sink.line(j.dump());
            break;
        }
        case Format::csv:
            sink.line("modulus,char,k,upper,zeta_order,coeffs");
            sink.line(std::to_string(chi.modulus()) + "," + std::to_string(chi.index()) + "," +
                      std::to_string(k) + "," + std::to_string(upper) + "," +
                      std::to_string(value.field()->order()) + "," + csv_coeff_list(value));
            break;
        case Format::plain:
            sink.line("# powersum modulus=" + std::to_string(chi.modulus()) +
                      " char=" + std::to_string(chi.index()));
            sink.line("T_" + std::to_string(k) + "(" + std::to_string(upper) +
                      ") = " + value.to_string());
            break;
    }
    return 0;
}

// Character inventory: one record per character with its value table on
// 0..d-1, the group-order data a consumer needs to reproduce the indexing.
int run_chars(const CommonArgs& common) {
    const Format format = parse_format(common.format);
    OutputSink sink(common.output);

    std::vector<DirichletCharacter> chars;
    if (common.char_spec == "all") {
        chars = enumerate_characters(common.modulus);
    } else {
        chars.push_back(character_at(common.modulus, parse_char_index(common.char_spec)));
    }

    if (format == Format::csv) sink.line("modulus,index,order,principal,l,zeta_order,coeffs");
    for (const auto& chi : chars) {
        const unsigned long d = chi.modulus();
        switch (format) {
            case Format::json: {
                json values = json::array();
                for (unsigned long l = 0; l < d; ++l) values.push_back(to_json(chi(l)));
                json j{{"modulus", d},
                       {"index", chi.index()},
                       {"order", chi.order()},
                       {"principal", chi.is_principal()},
                       {"values", std::move(values)}};
                sink.line(j.dump());
                break;
            }
            case Format::csv:
                for (unsigned long l = 0; l < d; ++l) {
                    sink.line(std::to_string(d) + "," + std::to_string(chi.index()) + "," +
                              std::to_string(chi.order()) + "," +
                              (chi.is_principal() ? "true" : "false") + "," +
                              std::to_string(l) + "," +
                              std::to_string(chi.value_field()->order()) + "," +
                              csv_coeff_list(chi(l)));
                }
                break;
            case Format::plain: {
                std::string line = "chi(" + std::to_string(d) + "," +
                                   std::to_string(chi.index()) +
                                   ") order=" + std::to_string(chi.order()) +
                                   (chi.is_principal() ? " principal" : "") + " values:";
                for (unsigned long l = 0; l < d; ++l) line += " " + chi(l).to_string();
                sink.line(line);
                break;
            }
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify subcommand
// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string identity;
    CommonArgs common;
    std::vector<unsigned long> w1s{};
    std::vector<unsigned long> w2s{};
    std::vector<unsigned long> orders{1};
    unsigned max_n = 0;
    std::vector<unsigned long long> eq4_n{1, 3, 5};
    unsigned long max_k = 10;
    std::string mode = "symbolic";
    unsigned jobs = 1;
    bool perturb = false;
};

struct VerifyTask {
    std::size_t chi;  // index into the character list
    unsigned long w1 = 0;
    unsigned long w2 = 0;
    unsigned long order = 0;
    unsigned n = 0;
    unsigned long k = 0;           // eq4 only
    unsigned long long multiple = 0;  // eq4 only
    bool asserted = true;
};

std::string plain_witness(const CoeffDiff& w) {
    return " witness x^" + std::to_string(w.x_degree) + "*y^" + std::to_string(w.y_degree) +
           " lhs=" + w.lhs.to_string() + " rhs=" + w.rhs.to_string();
}

std::string render_report(const VerificationReport& r, Format format) {
    switch (format) {
        case Format::json:
            return to_json(r).dump();
        case Format::csv: {
            std::string row = r.identity + "," + std::to_string(r.modulus) + "," +
                              std::to_string(r.char_index) + "," + std::to_string(r.w1) + "," +
                              std::to_string(r.w2) + "," +
                              (r.order > 0 ? std::to_string(r.order) : "") + "," +
                              std::to_string(r.index) + "," +
                              (r.sample_agree ? (*r.sample_agree ? "agree" : "differ") : "") +
                              "," + (r.equal ? "equal" : "unequal");
            if (r.witness) {
                row += "," + std::to_string(r.witness->x_degree) + "," +
                       std::to_string(r.witness->y_degree) + "," +
                       csv_coeff_list(r.witness->lhs) + "," + csv_coeff_list(r.witness->rhs);
            } else {
                row += ",,,,";
            }
            return row;
        }
        case Format::plain: {
            std::string line = r.identity + " modulus=" + std::to_string(r.modulus) +
                               " char=" + std::to_string(r.char_index) +
                               " w1=" + std::to_string(r.w1) + " w2=" + std::to_string(r.w2);
            if (r.order > 0) line += " order=" + std::to_string(r.order);
            line += " n=" + std::to_string(r.index) + ":";
            if (r.sample_agree) line += std::string(" sample=") + (*r.sample_agree ? "agree" : "differ");
            line += r.equal ? " equal" : " unequal";
            if (r.witness) line += plain_witness(*r.witness);
            return line;
        }
    }
    return {};
}

std::string render_eq4(const Eq4Report& r, unsigned long modulus, unsigned long char_index,
                       bool asserted, Format format) {
    switch (format) {
        case Format::json: {
            json j{{"identity", "eq4"},
                   {"modulus", modulus},
                   {"char", char_index},
                   {"k", r.k},
                   {"n", r.n},
                   {"asserted", asserted},
                   {"verdict", r.equal ? "equal" : "unequal"},
                   {"lhs", to_json(r.lhs)},
                   {"rhs", to_json(r.rhs)}};
            return j.dump();
        }
        case Format::csv:
            return "eq4," + std::to_string(modulus) + "," + std::to_string(char_index) + "," +
                   std::to_string(r.k) + "," + std::to_string(r.n) + "," +
                   (asserted ? "true" : "false") + "," + (r.equal ? "equal" : "unequal") + "," +
                   std::to_string(r.lhs.field()->order()) + "," + csv_coeff_list(r.lhs) + "," +
                   csv_coeff_list(r.rhs);
        case Format::plain: {
            std::string line = "eq4 modulus=" + std::to_string(modulus) +
                               " char=" + std::to_string(char_index) +
                               " k=" + std::to_string(r.k) + " n=" + std::to_string(r.n) + ":" +
                               (r.equal ? " equal" : " unequal") +
                               " lhs=" + r.lhs.to_string() + " rhs=" + r.rhs.to_string();
            if (!asserted) line += " (observational: n even, outside stated hypothesis)";
            return line;
        }
    }
    return {};
}

int run_verify(const VerifyArgs& args) {
    const Format format = parse_format(args.common.format);
    if (args.mode != "symbolic" && args.mode != "sample") {
        throw std::invalid_argument("--mode must be symbolic or sample");
    }
    if (args.jobs == 0) {
        throw std::invalid_argument("--jobs must be >= 1");
    }
    const bool is_eq4 = args.identity == "eq4";
    const bool has_order = args.identity == "theorem1" || args.identity == "theorem3" ||
                           args.identity == "cross";

    // Characters: one index or the full group, ascending.
    std::vector<DirichletCharacter> chars;
    if (args.common.char_spec == "all") {
        chars = enumerate_characters(args.common.modulus);
    } else {
        chars.push_back(character_at(args.common.modulus, parse_char_index(args.common.char_spec)));
    }

    // Upfront validation so worker threads only see well-formed tuples.
    if (!is_eq4) {
        if (args.w1s.empty() || args.w2s.empty()) {
            throw std::invalid_argument("verify " + args.identity + " requires --w1 and --w2");
        }
        for (unsigned long w : args.w1s) {
            if (w == 0 || w % 2 == 0) throw std::invalid_argument("--w1 entries must be odd positive");
        }
        for (unsigned long w : args.w2s) {
            if (w == 0 || w % 2 == 0) throw std::invalid_argument("--w2 entries must be odd positive");
        }
        if (has_order) {
            for (unsigned long m : args.orders) {
                if (m == 0) throw std::invalid_argument("--order entries must be >= 1");
            }
        }
    } else {
        for (unsigned long long n : args.eq4_n) {
            if (n == 0) throw std::invalid_argument("--n entries must be >= 1");
        }
    }

    // Fixed tuple nesting: character, then w1, w2, order, n (or n, k for eq4).
    std::vector<VerifyTask> tasks;
    for (std::size_t c = 0; c < chars.size(); ++c) {
        if (is_eq4) {
            for (unsigned long long n : args.eq4_n) {
                for (unsigned long k = 0; k <= args.max_k; ++k) {
                    VerifyTask t;
                    t.chi = c;
                    t.k = k;
                    t.multiple = n;
                    t.asserted = (n % 2 == 1);
                    tasks.push_back(t);
                }
            }
            continue;
        }
        for (unsigned long w1 : args.w1s) {
            for (unsigned long w2 : args.w2s) {
                const auto& orders = has_order ? args.orders : std::vector<unsigned long>{1};
                for (unsigned long m : orders) {
                    for (unsigned n = 0; n <= args.max_n; ++n) {
                        VerifyTask t;
                        t.chi = c;
                        t.w1 = w1;
                        t.w2 = w2;
                        t.order = m;
                        t.n = n;
                        tasks.push_back(t);
                    }
                }
            }
        }
    }

    VerifyOptions options;
    options.perturbation = args.perturb ? Perturbation::offset_w : Perturbation::none;
    options.sample_points = args.mode == "sample";

    OutputSink sink(args.common.output);
    if (format == Format::csv) {
        sink.line(is_eq4 ? "identity,modulus,char,k,n,asserted,verdict,zeta_order,lhs,rhs"
                         : "identity,modulus,char,w1,w2,order,n,sample,verdict,"
                           "witness_x,witness_y,witness_lhs,witness_rhs");
    }

    std::atomic<bool> violated{false};
    std::mutex error_mu;
    std::string error_text;

    auto run_one = [&](const VerifyTask& t) -> std::string {
        const DirichletCharacter& chi = chars[t.chi];
        if (is_eq4) {
            const auto r = eq4_sides(chi, t.k, t.multiple);
            if (t.asserted && !r.equal) violated = true;
            return render_eq4(r, chi.modulus(), chi.index(), t.asserted, format);
        }
        VerificationReport report;
        if (args.identity == "theorem1") {
            report = verify_theorem1({chi, t.w1, t.w2, t.order, t.n}, options);
        } else if (args.identity == "theorem3") {
            report = verify_theorem3({chi, t.w1, t.w2, t.order, t.n}, options);
        } else if (args.identity == "corollary2") {
            report = verify_corollary2(chi, t.w1, t.w2, t.n, options);
        } else if (args.identity == "multiplication") {
            report = verify_multiplication_identity(chi, t.w1, t.w2, t.n, options);
        } else if (args.identity == "cross") {
            report = cross_theorem_check({chi, t.w1, t.w2, t.order, t.n}, options);
        } else {
            throw std::invalid_argument("unknown identity: " + args.identity);
        }
        if (!report.equal) violated = true;
        return render_report(report, format);
    };

    if (args.jobs == 1) {
        for (const auto& t : tasks) {
            sink.line(run_one(t));
        }
    } else {
        // Tuple-level parallelism; lines stay atomic but may interleave.
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const unsigned workers = std::min<std::size_t>(args.jobs, tasks.size() ? tasks.size() : 1);
        for (unsigned i = 0; i < workers; ++i) {
            pool.emplace_back([&] {
                while (true) {
                    const std::size_t idx = next.fetch_add(1);
                    if (idx >= tasks.size()) return;
                    try {
                        sink.line(run_one(tasks[idx]));
                    } catch (const std::exception& e) {
                        std::lock_guard<std::mutex> lock(error_mu);
                        if (error_text.empty()) error_text = e.what();
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        if (!error_text.empty()) throw std::runtime_error(error_text);
    }
    return violated ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact generalized Euler polynomial tables and symmetry-identity checks"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"json", "csv", "plain"};

    CommonArgs num_common;
    unsigned long num_order = 1;
    unsigned num_max_n = 0;
    auto* numbers = app.add_subcommand("numbers", "generalized Euler number table");
    numbers->add_option("--modulus", num_common.modulus, "odd modulus d")->required();
    numbers->add_option("--char", num_common.char_spec, "character index")->required();
    numbers->add_option("--order", num_order, "order m >= 0")->required();
    numbers->add_option("--max-n", num_max_n, "largest index")->required();
    numbers->add_option("--format", num_common.format)->check(CLI::IsMember(formats));
    numbers->add_option("--output", num_common.output, "output path (default stdout)");

    CommonArgs poly_common;
    unsigned long poly_order = 1;
    unsigned poly_n = 0;
    auto* poly = app.add_subcommand("poly", "generalized Euler polynomial coefficients");
    poly->add_option("--modulus", poly_common.modulus, "odd modulus d")->required();
    poly->add_option("--char", poly_common.char_spec, "character index")->required();
    poly->add_option("--order", poly_order, "order m >= 0")->required();
    poly->add_option("--n", poly_n, "polynomial index")->required();
    poly->add_option("--format", poly_common.format)->check(CLI::IsMember(formats));
    poly->add_option("--output", poly_common.output, "output path (default stdout)");

    CommonArgs chars_common;
    chars_common.char_spec = "all";
    auto* chars_cmd = app.add_subcommand("chars", "character group inventory and value tables");
    chars_cmd->add_option("--modulus", chars_common.modulus, "odd modulus d")->required();
    chars_cmd->add_option("--char", chars_common.char_spec, "character index or 'all' (default)");
    chars_cmd->add_option("--format", chars_common.format)->check(CLI::IsMember(formats));
    chars_cmd->add_option("--output", chars_common.output, "output path (default stdout)");

    CommonArgs ps_common;
    unsigned long ps_k = 0;
    unsigned long long ps_upper = 0;
    auto* powersum = app.add_subcommand("powersum", "alternating character power sum");
    powersum->add_option("--modulus", ps_common.modulus, "odd modulus d")->required();
    powersum->add_option("--char", ps_common.char_spec, "character index")->required();
    powersum->add_option("--k", ps_k, "exponent")->required();
    powersum->add_option("--upper", ps_upper, "upper summation limit")->required();
    powersum->add_option("--format", ps_common.format)->check(CLI::IsMember(formats));
    powersum->add_option("--output", ps_common.output, "output path (default stdout)");

    VerifyArgs vargs;
    auto* verify = app.add_subcommand("verify", "verify an identity over a parameter grid");
    verify->add_option("identity", vargs.identity, "identity to check")
        ->required()
        ->check(CLI::IsMember({"theorem1", "theorem3", "corollary2", "eq4", "multiplication",
                               "cross"}));
    verify->add_option("--modulus", vargs.common.modulus, "odd modulus d")->required();
    verify->add_option("--char", vargs.common.char_spec, "character index or 'all'")->required();
    verify->add_option("--w1", vargs.w1s, "odd weights w1");
    verify->add_option("--w2", vargs.w2s, "odd weights w2");
    verify->add_option("--order", vargs.orders, "orders m >= 1 (theorem1/theorem3/cross)");
    verify->add_option("--max-n", vargs.max_n, "check indices n = 0..max-n");
    verify->add_option("--n", vargs.eq4_n, "eq4 only: multiples n (odd asserted, even observational)");
    verify->add_option("--max-k", vargs.max_k, "eq4 only: check exponents k = 0..max-k");
    verify->add_option("--mode", vargs.mode, "symbolic (default) or sample (adds point preview)")
        ->check(CLI::IsMember({"symbolic", "sample"}));
    verify->add_option("--jobs", vargs.jobs, "worker threads (1 = fully deterministic order)");
    verify->add_flag("--perturb", vargs.perturb,
                     "self-test hook: build the right side with an off-by-one weight");
    verify->add_option("--format", vargs.common.format)->check(CLI::IsMember(formats));
    verify->add_option("--output", vargs.common.output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (numbers->parsed()) return run_numbers(num_common, num_order, num_max_n);
        if (chars_cmd->parsed()) return run_chars(chars_common);
        if (poly->parsed()) return run_poly(poly_common, poly_order, poly_n);
        if (powersum->parsed()) return run_powersum(ps_common, ps_k, ps_upper);
        if (verify->parsed()) return run_verify(vargs);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
