#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "deldec/codec.hpp"
#include "deldec/indicator_recovery.hpp"
#include "deldec/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using deldec::BitSeq;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string read_bits_arg(const std::string& arg) {
    if (!arg.empty() && arg != "-") return arg;
    std::string line, all;
    while (std::getline(std::cin, line)) all += line;
    return all;
}

std::uint64_t pick_seed(std::optional<std::uint64_t> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("DELDEC_SEED")) return std::strtoull(env, nullptr, 10);
    return deldec::oracle::kDefaultSeed;
}

void write_json(const std::string& path, const json& j) {
    if (path.empty()) return;
    if (path == "-") {
        std::cerr << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw deldec::InvalidInput("cannot open json output path: " + path);
    out << j.dump(2) << "\n";
}

json layout_json(const deldec::CodeLayout& lay) {
    return json{{"n", lay.n},
                {"N1", lay.N1},
                {"N2", lay.N2},
                {"N", lay.N},
                {"layer1_widths", lay.layer1_widths},
                {"layer2_widths", lay.layer2_widths}};
}

json syndromes_json(const deldec::SyndromeF& f, const deldec::SyndromeH& h) {
    return json{{"m", f.m}, {"f", {f.r[0], f.r[1], f.r[2]}}, {"h", {h.r[0], h.r[1]}}};
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
    return out;
}

int run_encode(const std::string& bits_arg, const std::string& json_path) {
    const BitSeq msg = BitSeq::parse(read_bits_arg(bits_arg));
    const auto lay = deldec::layout(static_cast<std::int64_t>(msg.size()));
    const BitSeq cw = deldec::encode(msg);
    std::cout << cw.to_string() << "\n";
    json j = layout_json(lay);
    j["syndromes"] = syndromes_json(deldec::f_syndrome(msg), deldec::h_syndrome(msg));
    write_json(json_path, j);
    return kExitOk;
}

int run_corrupt(const std::string& bits_arg, const std::string& positions, int random_k,
                std::optional<std::uint64_t> seed_flag) {
    const BitSeq cw = BitSeq::parse(read_bits_arg(bits_arg));
    std::vector<std::size_t> pos;
    if (!positions.empty()) {
        for (auto v : parse_int_list(positions)) pos.push_back(static_cast<std::size_t>(v));
    } else if (random_k > 0) {
        std::mt19937_64 rng(pick_seed(seed_flag));
        while (pos.size() < static_cast<std::size_t>(random_k)) {
            std::size_t p = 1 + rng() % cw.size();
            if (std::find(pos.begin(), pos.end(), p) == pos.end()) pos.push_back(p);
        }
    }
    if (pos.size() > 2) throw deldec::InvalidInput("corrupt: at most two deletions supported");
    const BitSeq out = deldec::delete_at(cw, pos);
    std::cerr << "deleted positions:";
    for (auto p : pos) std::cerr << " " << p;
    std::cerr << "\n";
    std::cout << out.to_string() << "\n";
    return kExitOk;
}

int run_decode(const std::string& bits_arg, std::int64_t n, bool trace, bool force_general,
               const std::string& json_path, const std::string& f_arg, const std::string& h_arg) {
    const BitSeq rx = BitSeq::parse(read_bits_arg(bits_arg));
    std::ostringstream trace_buf;

    if (!f_arg.empty() || !h_arg.empty()) {
        // direct D2 mode: rx is a length n-2 remnant of an n-bit sequence
        if (f_arg.empty() || h_arg.empty())
            throw deldec::InvalidInput("decode: --fsyn and --hsyn must be given together");
        const auto fv = parse_int_list(f_arg);
        const auto hv = parse_int_list(h_arg);
        if (fv.size() != 3 || hv.size() != 2)
            throw deldec::InvalidInput("decode: --fsyn takes 3 values, --hsyn takes 2");
        deldec::SyndromeF f;
        f.m = n;
        f.r = {fv[0], fv[1], fv[2]};
        deldec::SyndromeH h;
        h.m = n;
        h.r = {hv[0], hv[1]};
        const auto res = deldec::decode_two_deletions_ex(rx, f, h, trace ? &trace_buf : nullptr);
        if (trace) std::cerr << trace_buf.str();
        std::cout << res.sequence.to_string() << "\n";
        write_json(json_path, json{{"mode", "d2"},
                                   {"m", n},
                                   {"visited", res.visited},
                                   {"sequence", res.sequence.to_string()}});
        return kExitOk;
    }

    deldec::DecodeOptions opt;
    opt.force_general_path = force_general;
    opt.trace = trace ? &trace_buf : nullptr;
    const auto rep = deldec::decode(rx, n, opt);
    if (trace) std::cerr << trace_buf.str();
    std::cout << rep.message.to_string() << "\n";
    write_json(json_path,
               json{{"mode", "codeword"},
                    {"n", n},
                    {"path", rep.path == deldec::DecodeReport::Path::early_return ? "early-return"
                                                                                  : "general"},
                    {"L", rep.suffix_len},
                    {"trimmed", rep.trimmed},
                    {"visited_layer1", rep.visited_layer1},
                    {"visited_message", rep.visited_message},
                    {"message", rep.message.to_string()}});
    return kExitOk;
}

int run_info(std::int64_t n, const std::string& json_path) {
    const auto lay = deldec::layout(n);
    const json j = layout_json(lay);
    std::cout << j.dump(2) << "\n";
    write_json(json_path, j);
    return kExitOk;
}

int run_selftest(const std::string& suite, int n_min, int n_max, std::int64_t trials,
                 std::optional<std::uint64_t> seed_flag, int jobs, bool force_general,
                 const std::string& json_path) {
    namespace oc = deldec::oracle;
    const std::uint64_t seed = pick_seed(seed_flag);
    std::vector<oc::VerificationReport> reports;

    const bool all = suite == "all";
    if (suite == "theorem-main" || all) {
        for (int n = n_min; n <= n_max; ++n) reports.push_back(oc::verify_theorem_main(n, -1, jobs));
    }
    if (suite == "lemmas" || all) {
        reports.push_back(oc::verify_lemma_g({n_max > 13 ? 13 : n_max, 4}, jobs));
        reports.push_back(oc::verify_lemma_gplus({n_max > 13 ? 13 : n_max, 3}, jobs));
        reports.push_back(oc::verify_indicator_lemmas(std::min(n_max, 9), jobs));
    }
    if (suite == "case-identities" || all) {
        reports.push_back(oc::verify_case_identities(trials > 0 ? trials : 1000, 32, seed, jobs));
    }
    if (suite == "roundtrip" || all) {
        oc::RoundtripOptions opt;
        opt.pair_samples = trials > 0 ? trials : 40;
        opt.force_general = force_general;
        opt.seed = seed;
        opt.jobs = jobs;
        reports.push_back(oc::verify_roundtrip(8, opt));
    }
    if (reports.empty())
        throw deldec::InvalidInput(
            "selftest: suite must be one of theorem-main, lemmas, case-identities, roundtrip, all");

    bool pass = true;
    json out = json::array();
    for (const auto& r : reports) {
        pass = pass && r.pass();
        std::cout << (r.pass() ? "PASS " : "FAIL ") << r.scope << " (" << r.cases_checked
                  << " cases, " << r.elapsed_seconds << "s)\n";
        for (const auto& cex : r.counterexamples) std::cout << "  counterexample: " << cex << "\n";
        out.push_back(json::parse(r.to_json_string()));
    }
    write_json(json_path, json{{"suite", suite}, {"pass", pass}, {"reports", out}});
    return pass ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-deletion correcting code toolbox"};
    app.require_subcommand(1);

    std::string bits_arg, json_path, positions, f_arg, h_arg, suite = "all";
    std::int64_t n = 0, trials = 0;
    int random_k = 0, jobs = 0, n_min = 4, n_max = 8;
    bool trace = false, force_general = false;
    std::optional<std::uint64_t> seed_flag;

    auto* enc = app.add_subcommand("encode", "encode a message bitstring");
    enc->add_option("bits", bits_arg, "message bits ('-' for stdin)");
    enc->add_option("--json", json_path, "write layout and syndromes as JSON");

    auto* cor = app.add_subcommand("corrupt", "delete bits from a codeword");
    cor->add_option("bits", bits_arg, "codeword bits ('-' for stdin)");
    cor->add_option("--positions", positions, "comma-separated 1-based deletion positions");
    cor->add_option("--random", random_k, "delete this many random positions (0..2)")
        ->check(CLI::Range(0, 2));
    cor->add_option("--seed", seed_flag, "RNG seed (fallback: DELDEC_SEED)");

    auto* dec = app.add_subcommand("decode", "decode a received bitstring");
    dec->add_option("bits", bits_arg, "received bits ('-' for stdin)");
    dec->add_option("--n", n, "message length")->required();
    dec->add_flag("--trace", trace, "emit the indicator-search trace to stderr");
    dec->add_flag("--force-general-path", force_general, "disable the early-return branch");
    dec->add_option("--fsyn", f_arg, "direct D2 mode: f residues f0,f1,f2 for length n");
    dec->add_option("--hsyn", h_arg, "direct D2 mode: h residues h0,h1 for length n");
    dec->add_option("--json", json_path, "write a decode report as JSON");

    auto* sf = app.add_subcommand("selftest", "run verification sweeps");
    sf->add_option("--suite", suite,
                   "theorem-main | lemmas | case-identities | roundtrip | all");
    sf->add_option("--n-min", n_min, "smallest n for exhaustive sweeps");
    sf->add_option("--n-max", n_max, "largest n for exhaustive sweeps");
    sf->add_option("--trials", trials, "random trials / sampled patterns (0: suite default)");
    sf->add_option("--seed", seed_flag, "RNG seed (fallback: DELDEC_SEED)");
    sf->add_option("--jobs", jobs, "worker threads (0: all cores)");
    sf->add_flag("--force-general-path", force_general, "roundtrip without early return");
    sf->add_option("--json", json_path, "write the combined report as JSON");

    auto* info = app.add_subcommand("info", "print code layout parameters");
    info->add_option("--n", n, "message length")->required();
    info->add_option("--json", json_path, "also write the layout as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
#ifdef _OPENMP
        if (jobs > 0) omp_set_num_threads(jobs);
#endif
        if (enc->parsed()) return run_encode(bits_arg, json_path);
        if (cor->parsed()) return run_corrupt(bits_arg, positions, random_k, seed_flag);
        if (dec->parsed())
            return run_decode(bits_arg, n, trace, force_general, json_path, f_arg, h_arg);
        if (sf->parsed())
            return run_selftest(suite, n_min, n_max, trials, seed_flag, jobs, force_general,
                                json_path);
        if (info->parsed()) return run_info(n, json_path);
    } catch (const deldec::InvalidInput& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const deldec::DecodeFailure& e) {
        std::cerr << "decode failure: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
