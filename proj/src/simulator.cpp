#include "weylcdma/simulator.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "weylcdma/correlation.hpp"
#include "weylcdma/random.hpp"

namespace weylcdma {

namespace {

int bit_index(BitPair bits) { return (bits.prev > 0 ? 2 : 0) + (bits.cur > 0 ? 1 : 0); }

int spreading_length(const SimConfig& cfg) {
    if (cfg.family == Family::gold) return (1 << cfg.gold.degree) - 1;
    return cfg.n;
}

std::vector<ComplexVector> build_sequences(const SimConfig& cfg, int users) {
    const int n = spreading_length(cfg);
    if (users < 1) throw std::invalid_argument("simulator: need at least one user");
    if (users > n)
        throw std::invalid_argument("simulator: user count exceeds the number of sequences (" +
                                    std::to_string(n) + ")");
    std::vector<ComplexVector> seqs;
    seqs.reserve(static_cast<std::size_t>(users));
    for (int u = 0; u < users; ++u) {
        if (cfg.family == Family::weyl) {
            seqs.push_back(weyl_sequence({u + 1, n, cfg.sigma}));
        } else {
            GoldParams p = cfg.gold;
            p.shift = u;
            seqs.push_back(gold_sequence(p));
        }
    }
    return seqs;
}

std::uint64_t symbol_key(std::uint64_t seed, int users, double ebn0_db, std::int64_t symbol) {
    std::uint64_t acc = mix_key(seed, static_cast<std::uint64_t>(users));
    acc = mix_key(acc, std::bit_cast<std::uint64_t>(ebn0_db));
    return mix_key(acc, static_cast<std::uint64_t>(symbol));
}

}  // namespace

InterferenceTable::InterferenceTable(const std::vector<ComplexVector>& sequences) {
    if (sequences.empty()) throw std::invalid_argument("InterferenceTable: no sequences");
    users_ = static_cast<int>(sequences.size());
    length_ = static_cast<int>(sequences[0].size());
    if (length_ == 0) throw std::invalid_argument("InterferenceTable: empty reference sequence");
    for (const auto& s : sequences)
        if (s.size() != length_)
            throw std::invalid_argument("InterferenceTable: sequence lengths differ");

    const BitPair combos[4] = {{-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
    table_.resize(static_cast<std::size_t>(users_ - 1) * length_ * 4);
    for (int u = 1; u < users_; ++u) {
        for (int gap = 0; gap < length_; ++gap) {
            for (BitPair bits : combos) {
                const ShiftOperator op{gap, bits, length_};
                const std::size_t at =
                    (static_cast<std::size_t>(u - 1) * length_ + gap) * 4 + bit_index(bits);
                table_[at] = despread_correlation_quadratic(sequences[0], sequences[u], op);
            }
        }
    }
}

Complex InterferenceTable::value(int user, int gap, BitPair bits) const {
    if (user < 1 || user >= users_) throw std::out_of_range("InterferenceTable: bad user index");
    if (gap < 0 || gap >= length_) throw std::out_of_range("InterferenceTable: bad chip offset");
    return table_[(static_cast<std::size_t>(user - 1) * length_ + gap) * 4 + bit_index(bits)];
}

double snr_lower_bound(int users, int length, double e_over_n0) {
    if (users < 1) throw std::invalid_argument("snr_lower_bound: users must be positive");
    if (length < 1) throw std::invalid_argument("snr_lower_bound: length must be positive");
    if (std::isnan(e_over_n0) || e_over_n0 <= 0.0)
        throw std::invalid_argument("snr_lower_bound: Eb/N0 must be positive");
    const double mai = static_cast<double>(users - 1) / (6.0 * length);
    const double thermal = std::isinf(e_over_n0) ? 0.0 : 1.0 / (2.0 * e_over_n0);
    const double denom = mai + thermal;
    if (denom == 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / std::sqrt(denom);
}

BerResult run_ber(const SimConfig& cfg, int users, double ebn0_db) {
    const int n = spreading_length(cfg);
    if (cfg.symbols_per_user < 1)
        throw std::invalid_argument("simulator: symbols_per_user must be positive");
    if (std::isnan(ebn0_db)) throw std::invalid_argument("simulator: Eb/N0 must not be NaN");
    if (cfg.offset_mode == OffsetMode::fixed) {
        if (static_cast<int>(cfg.fixed_offsets.size()) < users - 1)
            throw std::invalid_argument(
                "simulator: fixed_offsets needs one entry per interferer");
        for (int i = 0; i < users - 1; ++i)
            if (cfg.fixed_offsets[i] < 0 || cfg.fixed_offsets[i] >= n)
                throw std::invalid_argument("simulator: fixed offset outside [0, N)");
    }

    const auto seqs = build_sequences(cfg, users);
    const InterferenceTable table(seqs);

    const double ebn0 = std::pow(10.0, ebn0_db / 10.0);
    const double noise_sigma = std::isinf(ebn0_db) ? 0.0 : n / std::sqrt(2.0 * ebn0);

    std::int64_t errors = 0;
    for (std::int64_t sym = 0; sym < cfg.symbols_per_user; ++sym) {
        RandomStream rng(symbol_key(cfg.rng_seed, users, ebn0_db, sym));
        const int ref_bit = rng.next_sign();
        Complex z(static_cast<double>(n) * ref_bit, 0.0);
        for (int u = 1; u < users; ++u) {
            BitPair bits;
            bits.prev = rng.next_sign();
            bits.cur = rng.next_sign();
            const int gap = cfg.offset_mode == OffsetMode::uniform ? rng.next_index(n)
                                                                   : cfg.fixed_offsets[u - 1];
            Complex w = table.value(u, gap, bits);
            if (cfg.phase_mode == PhaseMode::uniform)
                w *= std::polar(1.0, kTwoPi * rng.next_double());
            z += w;
        }
        if (noise_sigma > 0.0) {
            const auto [g0, g1] = rng.next_normal_pair();
            z += Complex(noise_sigma * g0, noise_sigma * g1);
        }
        const int decided = z.real() >= 0.0 ? 1 : -1;
        if (decided != ref_bit) ++errors;
    }

    BerResult r;
    r.family = cfg.family;
    r.n = n;
    r.users = users;
    r.ebn0_db = ebn0_db;
    r.bits_simulated = cfg.symbols_per_user;
    r.bit_errors = errors;
    r.ber = static_cast<double>(errors) / static_cast<double>(cfg.symbols_per_user);
    if (errors == 0) {
        r.ci95 = 3.0 / static_cast<double>(cfg.symbols_per_user);
    } else {
        const double p = r.ber;
        r.ci95 = 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(cfg.symbols_per_user));
    }
    return r;
}

std::vector<BerResult> sweep(const SimConfig& cfg, const ProgressFn& on_point) {
    if (cfg.users.empty()) throw std::invalid_argument("simulator: empty user list");
    if (cfg.ebn0_db.empty()) throw std::invalid_argument("simulator: empty Eb/N0 list");
    std::vector<BerResult> out;
    out.reserve(cfg.users.size() * cfg.ebn0_db.size());
    for (int k : cfg.users) {
        for (double db : cfg.ebn0_db) {
            out.push_back(run_ber(cfg, k, db));
            if (on_point) on_point(out.back());
        }
    }
    return out;
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        const double x = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad number for " + key + ": '" + v + "'");
    }
}

std::int64_t parse_int(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        const std::int64_t x = std::stoll(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad integer for " + key + ": '" + v + "'");
    }
}

std::uint64_t parse_uint(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        const std::uint64_t x = std::stoull(v, &used, 0);
        if (used != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad integer for " + key + ": '" + v + "'");
    }
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> parts;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(trim(item));
    return parts;
}

}  // namespace

SimConfig parse_sim_config(std::istream& in) {
    SimConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (value.empty()) throw std::invalid_argument("config: empty value for " + key);

        if (key == "family") {
            if (value == "weyl")
                cfg.family = Family::weyl;
            else if (value == "gold")
                cfg.family = Family::gold;
            else
                throw std::invalid_argument("config: family must be weyl or gold, got '" + value +
                                            "'");
        } else if (key == "n") {
            cfg.n = static_cast<int>(parse_int(key, value));
        } else if (key == "sigma") {
            cfg.sigma = parse_double(key, value);
        } else if (key == "k") {
            cfg.users.clear();
            for (const auto& p : split_list(value))
                cfg.users.push_back(static_cast<int>(parse_int(key, p)));
        } else if (key == "ebn0_db") {
            cfg.ebn0_db.clear();
            for (const auto& p : split_list(value)) cfg.ebn0_db.push_back(parse_double(key, p));
        } else if (key == "symbols_per_user") {
            cfg.symbols_per_user = parse_int(key, value);
        } else if (key == "rng_seed") {
            cfg.rng_seed = parse_uint(key, value);
        } else if (key == "phase_mode") {
            if (value == "zero")
                cfg.phase_mode = PhaseMode::zero;
            else if (value == "uniform")
                cfg.phase_mode = PhaseMode::uniform;
            else
                throw std::invalid_argument("config: phase_mode must be zero or uniform, got '" +
                                            value + "'");
        } else if (key == "offsets_mode") {
            if (value == "fixed")
                cfg.offset_mode = OffsetMode::fixed;
            else if (value == "uniform")
                cfg.offset_mode = OffsetMode::uniform;
            else
                throw std::invalid_argument(
                    "config: offsets_mode must be uniform or fixed, got '" + value + "'");
        } else if (key == "fixed_offsets") {
            cfg.fixed_offsets.clear();
            for (const auto& p : split_list(value))
                cfg.fixed_offsets.push_back(static_cast<int>(parse_int(key, p)));
        } else if (key == "gold_degree") {
            cfg.gold.degree = static_cast<int>(parse_int(key, value));
        } else if (key == "gold_taps_a") {
            cfg.gold.taps_a = static_cast<std::uint32_t>(parse_uint(key, value));
        } else if (key == "gold_taps_b") {
            cfg.gold.taps_b = static_cast<std::uint32_t>(parse_uint(key, value));
        } else if (key == "gold_seed_a") {
            cfg.gold.seed_a = static_cast<std::uint32_t>(parse_uint(key, value));
        } else if (key == "gold_seed_b") {
            cfg.gold.seed_b = static_cast<std::uint32_t>(parse_uint(key, value));
        } else {
            throw std::invalid_argument("config: unknown key '" + key + "'");
        }
    }
    return cfg;
}

SimConfig load_sim_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    return parse_sim_config(in);
}

}  // namespace weylcdma
