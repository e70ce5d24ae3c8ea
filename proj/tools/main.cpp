#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "weylcdma/correlation.hpp"
#include "weylcdma/decomposition.hpp"
#include "weylcdma/io.hpp"
#include "weylcdma/sequences.hpp"
#include "weylcdma/simulator.hpp"
#include "weylcdma/spectral.hpp"

namespace {

using namespace weylcdma;

/// Flag bundle shared by every subcommand that names a sequence family.
struct FamilyFlags {
    std::string family;
    int n = 0;
    double sigma = 0.0;
    int degree = 6;
    std::uint32_t taps_a = 0, taps_b = 0, seed_a = 0, seed_b = 0;

    CLI::Option* n_opt = nullptr;

    void add_to(CLI::App& cmd, bool family_required = true) {
        auto* fam = cmd.add_option("--family", family, "Sequence family: weyl or gold")
                        ->check(CLI::IsMember({"weyl", "gold"}));
        if (family_required) fam->required();
        n_opt = cmd.add_option("--n", n, "Sequence length N (Weyl)");
        cmd.add_option("--sigma", sigma, "Weyl offset, 0 <= sigma < 1");
        cmd.add_option("--degree", degree, "Gold LFSR degree (3..10), N = 2^degree - 1");
        cmd.add_option("--taps-a", taps_a, "Gold polynomial A as a bit mask (0 = built-in)");
        cmd.add_option("--taps-b", taps_b, "Gold polynomial B as a bit mask (0 = built-in)");
        cmd.add_option("--seed-a", seed_a, "Initial register A state (0 = all ones)");
        cmd.add_option("--seed-b", seed_b, "Initial register B state (0 = all ones)");
    }

    Family parsed_family() const { return family == "gold" ? Family::gold : Family::weyl; }

    GoldParams gold_params(int shift = 0) const {
        return GoldParams{degree, taps_a, taps_b, seed_a, seed_b, shift};
    }

    int length() const {
        if (parsed_family() == Family::gold) return (1 << degree) - 1;
        if (n_opt->count() == 0)
            throw std::invalid_argument("missing required flag --n");
        return n;
    }

    /// User u (1-based) of the simulator's numbering: Weyl index k = u,
    /// Gold shift = u - 1.
    ComplexVector user_sequence(int user) const {
        if (parsed_family() == Family::weyl) return weyl_sequence({user, length(), sigma});
        return gold_sequence(gold_params(user - 1));
    }
};

/// Writes to the named file, or to standard output when no path was given.
class OutputTarget {
   public:
    explicit OutputTarget(const std::string& path) : to_file_(!path.empty()) {
        if (to_file_) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return to_file_ ? file_ : std::cout; }
    bool to_file() const { return to_file_; }

   private:
    std::ofstream file_;
    bool to_file_;
};

struct GenerateCmd {
    FamilyFlags fam;
    int k = 0;
    int shift = 0;
    std::string format = "csv";
    std::string output;
    CLI::Option* k_opt = nullptr;

    void setup(CLI::App& app) {
        auto* cmd = app.add_subcommand("generate", "Emit one spreading sequence as CSV or JSON");
        fam.add_to(*cmd);
        k_opt = cmd->add_option("--k", k, "Weyl user index, 1 <= k <= N");
        cmd->add_option("--shift", shift, "Gold register-B offset, 0 <= shift < N");
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--output", output, "Output path (default: standard output)");
        cmd->callback([this] { run(); });
    }

    void run() const {
        ComplexVector seq;
        if (fam.parsed_family() == Family::weyl) {
            const int n = fam.length();
            if (k_opt->count() == 0)
                throw std::invalid_argument("missing required flag --k");
            seq = weyl_sequence({k, n, fam.sigma});
        } else {
            seq = gold_sequence(fam.gold_params(shift));
        }
        OutputTarget out(output);
        if (format == "json")
            write_sequence_json(out.stream(), seq);
        else
            write_sequence_csv(out.stream(), seq);
        if (out.to_file())
            std::cout << "family=" << fam.family << " N=" << seq.size() << " -> " << output
                      << "\n";
    }
};

struct CorrelateCmd {
    FamilyFlags fam;
    int k1 = 0, k2 = 0;
    int prev_bit = 1, cur_bit = 1;
    std::string kind = "despread";
    std::string output;

    void setup(CLI::App& app) {
        auto* cmd = app.add_subcommand(
            "correlate", "Correlation profile of two users over all chip offsets");
        fam.add_to(*cmd);
        cmd->add_option("--k1", k1, "First user index (despread: the observed user)")
            ->required();
        cmd->add_option("--k2", k2, "Second user index")->required();
        cmd->add_option("--kind", kind,
                        "despread (unnormalized W), periodic or aperiodic (normalized C)")
            ->check(CLI::IsMember({"despread", "periodic", "aperiodic"}));
        cmd->add_option("--prev-bit", prev_bit, "Straddled previous bit, +1 or -1 (despread)")
            ->check(CLI::IsMember({-1, 1}));
        cmd->add_option("--cur-bit", cur_bit, "Straddled current bit, +1 or -1 (despread)")
            ->check(CLI::IsMember({-1, 1}));
        cmd->add_option("--output", output, "Output path (default: standard output)");
        cmd->callback([this] { run(); });
    }

    void run() const {
        const int n = fam.length();
        const ComplexVector s1 = fam.user_sequence(k1);
        const ComplexVector s2 = fam.user_sequence(k2);
        std::vector<Complex> profile;
        profile.reserve(static_cast<std::size_t>(n) + 1);
        double max_abs = 0.0;
        for (int gap = 0; gap <= n; ++gap) {
            Complex v;
            if (kind == "despread")
                v = despread_correlation_quadratic(s1, s2,
                                                   ShiftOperator(gap, BitPair(prev_bit, cur_bit), n));
            else
                v = cross_correlation(s1, s2, gap, kind == "periodic" ? 1 : -1);
            max_abs = std::max(max_abs, std::abs(v));
            profile.push_back(v);
        }
        OutputTarget out(output);
        write_profile_csv(out.stream(), profile);
        if (out.to_file())
            std::cout << "kind=" << kind << " N=" << n << " max_abs=" << format_double(max_abs)
                      << " -> " << output << "\n";
    }
};

struct VerifyBasisCmd {
    int n = 0;
    std::string kind = "same";
    int l_min = 1;
    int l_max = 0;
    CLI::Option* n_opt = nullptr;
    CLI::Option* l_max_opt = nullptr;
    int exit_code = 0;

    void setup(CLI::App& app) {
        auto* cmd = app.add_subcommand(
            "verify-basis", "Check the closed-form eigensystem against dense shift operators");
        n_opt = cmd->add_option("--n", n, "Dimension N (at most 512)");
        cmd->add_option("--kind", kind, "Bit case: same or different")
            ->check(CLI::IsMember({"same", "different"}));
        cmd->add_option("--l-min", l_min, "First gap length (default 1)");
        l_max_opt = cmd->add_option("--l-max", l_max, "Last gap length (default N)");
        cmd->callback([this] { run(); });
    }

    void run() {
        if (n_opt->count() == 0) throw std::invalid_argument("missing required flag --n");
        if (n < 1) throw std::invalid_argument("verify-basis: --n must be positive");
        if (n > 512)
            throw std::invalid_argument(
                "verify-basis: --n is capped at 512 (dense reconstruction is quadratic in "
                "memory); for larger N use per-vector checks against the closed-form "
                "eigenvalues");
        const int hi = l_max_opt->count() ? l_max : n;
        if (l_min < 1 || hi > n || l_min > hi)
            throw std::invalid_argument("verify-basis: gap range must satisfy 1 <= l-min <= "
                                        "l-max <= N");
        const BitCase bc = kind == "same" ? BitCase::same_bits : BitCase::different_bits;
        double worst = 0.0;
        for (int l = l_min; l <= hi; ++l) worst = std::max(worst, verify_diagonalization(bc, n, l));
        const double threshold = 1e-9 * n;
        const bool pass = worst <= threshold;
        std::cout << "kind=" << kind << " N=" << n << " gaps=" << l_min << ".." << hi
                  << " max_residual=" << format_double(worst)
                  << " threshold=" << format_double(threshold) << " "
                  << (pass ? "PASS" : "FAIL") << "\n";
        exit_code = pass ? 0 : 1;
    }
};

struct DecomposeCmd {
    FamilyFlags fam;
    int k = 0;
    int shift = 0;
    std::string input;
    std::string input_format;
    std::string kind = "alpha";
    std::string output;
    CLI::Option* k_opt = nullptr;
    CLI::Option* input_opt = nullptr;

    void setup(CLI::App& app) {
        auto* cmd = app.add_subcommand(
            "decompose", "Expand a sequence in the alpha or beta Weyl basis");
        fam.add_to(*cmd, /*family_required=*/false);
        k_opt = cmd->add_option("--k", k, "Weyl user index when generating the input");
        cmd->add_option("--shift", shift, "Gold register-B offset when generating the input");
        input_opt = cmd->add_option("--input", input,
                                    "Read the sequence from this CSV/JSON file instead");
        cmd->add_option("--input-format", input_format, "Force input format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--kind", kind, "Coefficient basis")
            ->check(CLI::IsMember({"alpha", "beta"}));
        cmd->add_option("--output", output, "Output path (default: standard output)");
        cmd->callback([this] { run(); });
    }

    ComplexVector load_input() const {
        std::ifstream in(input);
        if (!in) throw std::runtime_error("cannot open input file: " + input);
        std::string fmt = input_format;
        if (fmt.empty())
            fmt = input.size() >= 5 && input.substr(input.size() - 5) == ".json" ? "json" : "csv";
        return fmt == "json" ? read_sequence_json(in) : read_sequence_csv(in);
    }

    void run() const {
        ComplexVector seq;
        if (input_opt->count()) {
            seq = load_input();
        } else if (fam.parsed_family() == Family::weyl) {
            if (k_opt->count() == 0)
                throw std::invalid_argument("missing required flag --k (or use --input)");
            seq = weyl_sequence({k, fam.length(), fam.sigma});
        } else {
            seq = gold_sequence(fam.gold_params(shift));
        }
        const auto coeffs = decompose(
            seq, kind == "alpha" ? CoefficientKind::alpha : CoefficientKind::beta);
        OutputTarget out(output);
        write_coefficients_csv(out.stream(), coeffs);
        if (out.to_file())
            std::cout << "kind=" << kind << " N=" << seq.size() << " -> " << output << "\n";
    }
};

struct SimulateCmd {
    std::string config_path;
    FamilyFlags fam;
    std::vector<int> k_users;
    std::vector<double> ebn0_db;
    std::int64_t symbols = 0;
    std::uint64_t seed = 0;
    std::string phase, offsets;
    std::vector<int> fixed_offsets;
    std::string format = "csv";
    std::string output;
    bool quiet = false;

    CLI::Option *sigma_opt = nullptr, *k_opt = nullptr, *ebn0_opt = nullptr,
                *symbols_opt = nullptr, *seed_opt = nullptr, *fixed_opt = nullptr;
    CLI::App* cmd = nullptr;

    void setup(CLI::App& app) {
        cmd = app.add_subcommand("simulate", "Monte Carlo BER sweep over users and Eb/N0");
        cmd->add_option("--config", config_path, "key = value config file; flags override it");
        fam.add_to(*cmd, /*family_required=*/false);
        sigma_opt = cmd->get_option("--sigma");
        k_opt = cmd->add_option("--k-users", k_users, "User counts K (comma separated)")
                    ->delimiter(',');
        ebn0_opt = cmd->add_option("--ebn0-db", ebn0_db,
                                   "Eb/N0 points in dB (comma separated; inf = noiseless)")
                       ->delimiter(',');
        symbols_opt = cmd->add_option("--symbols", symbols, "Symbols per sweep point");
        seed_opt = cmd->add_option("--seed", seed, "64-bit RNG seed");
        cmd->add_option("--phase", phase, "Interferer carrier phase: zero or uniform")
            ->check(CLI::IsMember({"zero", "uniform"}));
        cmd->add_option("--offsets", offsets, "Chip offsets: uniform or fixed")
            ->check(CLI::IsMember({"uniform", "fixed"}));
        fixed_opt = cmd->add_option("--fixed-offsets", fixed_offsets,
                                    "Offsets per interferer when --offsets fixed")
                        ->delimiter(',');
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--output", output, "Output path (default: standard output)");
        cmd->add_flag("--quiet", quiet, "Suppress per-point progress on standard error");
        cmd->callback([this] { run(); });
    }

    SimConfig assemble() const {
        SimConfig cfg;
        if (!config_path.empty()) cfg = load_sim_config(config_path);
        if (cmd->get_option("--family")->count()) cfg.family = fam.parsed_family();
        if (fam.n_opt->count()) cfg.n = fam.n;
        if (sigma_opt->count()) cfg.sigma = fam.sigma;
        if (cmd->get_option("--degree")->count()) cfg.gold.degree = fam.degree;
        if (cmd->get_option("--taps-a")->count()) cfg.gold.taps_a = fam.taps_a;
        if (cmd->get_option("--taps-b")->count()) cfg.gold.taps_b = fam.taps_b;
        if (cmd->get_option("--seed-a")->count()) cfg.gold.seed_a = fam.seed_a;
        if (cmd->get_option("--seed-b")->count()) cfg.gold.seed_b = fam.seed_b;
        if (k_opt->count()) cfg.users = k_users;
        if (ebn0_opt->count()) cfg.ebn0_db = ebn0_db;
        if (symbols_opt->count()) cfg.symbols_per_user = symbols;
        if (seed_opt->count()) cfg.rng_seed = seed;
        if (!phase.empty())
            cfg.phase_mode = phase == "zero" ? PhaseMode::zero : PhaseMode::uniform;
        if (!offsets.empty())
            cfg.offset_mode = offsets == "fixed" ? OffsetMode::fixed : OffsetMode::uniform;
        if (fixed_opt->count()) cfg.fixed_offsets = fixed_offsets;
        return cfg;
    }

    void run() const {
        const SimConfig cfg = assemble();
        ProgressFn progress;
        if (!quiet)
            progress = [](const BerResult& r) {
                std::cerr << "point family=" << family_name(r.family) << " N=" << r.n
                          << " K=" << r.users << " ebn0_db=" << format_double(r.ebn0_db)
                          << " ber=" << format_double(r.ber) << " errors=" << r.bit_errors << "/"
                          << r.bits_simulated << "\n";
            };
        const auto results = sweep(cfg, progress);
        OutputTarget out(output);
        if (format == "json")
            write_ber_json(out.stream(), results);
        else
            write_ber_csv(out.stream(), results);
        if (out.to_file()) std::cout << results.size() << " points -> " << output << "\n";
    }
};

struct BoundCmd {
    int k_users = 0;
    int n = 0;
    double ebn0_db = std::numeric_limits<double>::infinity();

    void setup(CLI::App& app) {
        auto* cmd = app.add_subcommand(
            "bound", "Output-SNR lower bound for K users at spreading factor N");
        cmd->add_option("--k-users", k_users, "Number of users K")->required();
        cmd->add_option("--n", n, "Spreading factor N")->required();
        cmd->add_option("--ebn0-db", ebn0_db, "Eb/N0 in dB (omit for the noiseless limit)");
        cmd->callback([this] { run(); });
    }

    void run() const {
        const double linear =
            std::isinf(ebn0_db) ? ebn0_db : std::pow(10.0, ebn0_db / 10.0);
        std::cout << format_double(snr_lower_bound(k_users, n, linear)) << "\n";
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weyl spreading-sequence toolkit and chip-synchronous CDMA simulator"};
    app.require_subcommand(1);

    GenerateCmd generate_cmd;
    CorrelateCmd correlate_cmd;
    VerifyBasisCmd verify_cmd;
    DecomposeCmd decompose_cmd;
    SimulateCmd simulate_cmd;
    BoundCmd bound_cmd;
    generate_cmd.setup(app);
    correlate_cmd.setup(app);
    verify_cmd.setup(app);
    decompose_cmd.setup(app);
    simulate_cmd.setup(app);
    bound_cmd.setup(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::RequiredError& e) {
        std::cerr << "error: missing required flag: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return verify_cmd.exit_code;
}
