#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "focal/counter_rng.hpp"
#include "focal/errors.hpp"
#include "focal/focal_engine.hpp"
#include "focal/poly_system.hpp"
#include "focal/prime_field.hpp"
#include "focal/univariate.hpp"

namespace focal {

enum class Strategy { Rejection, Parametrized };

inline std::string to_string(Strategy s) { return s == Strategy::Rejection ? "rejection" : "parametrized"; }

inline Strategy parse_strategy(std::string_view text) {
    if (text == "rejection") return Strategy::Rejection;
    if (text == "parametrized") return Strategy::Parametrized;
    throw FormatError("unknown strategy '" + std::string(text) + "' (expected rejection or parametrized)");
}

/// Number of logical PRNG streams. Trial i uses stream i % kSearchStreams
/// and counter i / kSearchStreams, independent of the worker count.
inline constexpr std::uint64_t kSearchStreams = 64;

struct SearchConfig {
    std::uint32_t prime = 29;
    int target = 1;
    Strategy strategy = Strategy::Rejection;
    std::size_t solve_first = 3;    // q30
    std::size_t solve_second = 13;  // p03
    unsigned workers = 1;
    std::uint64_t seed = 1;
    std::uint64_t budget = 100000;  // total trials, counting resumed ones
    Convention convention = Convention::N1;
    int max_depth = 0;  // 0: min(12, (p-5)/2)
    std::filesystem::path checkpoint_path;
    std::filesystem::path hit_log_path;
    std::uint64_t checkpoint_every = 1u << 20;
    bool resume = false;

    int effective_max_depth() const {
        int cap = static_cast<int>((prime - 5) / 2);
        return max_depth > 0 ? std::min(max_depth, cap) : std::min(12, cap);
    }

    void validate() const {
        PrimeField check(prime);
        (void)check;
        if (target < 1) throw Error("target depth must be at least 1");
        if (prime < 2u * static_cast<std::uint32_t>(target) + 5u)
            throw Error("prime " + std::to_string(prime) + " too small for target " + std::to_string(target) +
                        ": need p >= 2*target+5");
        if (effective_max_depth() < target) throw Error("max depth below target depth");
        if (solve_first >= kNumCoefficients || solve_second >= kNumCoefficients)
            throw Error("solve coordinates must be coefficient indices 0..13");
        if (solve_first == solve_second) throw Error("solve coordinates must be distinct");
        if (strategy == Strategy::Parametrized && kCoefficientWeights[solve_first] != 2)
            throw Error(std::string("first solve coordinate must be a cubic coefficient, got ") +
                        kCoefficientNames[solve_first]);
        if (strategy == Strategy::Parametrized && effective_max_depth() < 2)
            throw Error("parametrized strategy needs p >= 9 so that s_2 can be evaluated");
        if (workers < 1) throw Error("worker count must be at least 1");
    }

    /// Identifies the trial sequence; budget, worker count and paths may
    /// change across a resume.
    std::string canonical() const {
        std::ostringstream os;
        os << "p=" << prime << ";target=" << target << ";strategy=" << to_string(strategy)
           << ";coords=" << solve_first << "," << solve_second << ";seed=" << seed << ";streams=" << kSearchStreams
           << ";convention=" << to_string(convention) << ";max_depth=" << effective_max_depth();
        return os.str();
    }
};

inline std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

inline std::string config_digest(const SearchConfig& config) { return hex64(fnv1a(config.canonical())); }

inline CounterRng trial_rng(std::uint64_t seed, std::uint64_t trial) {
    return CounterRng(seed, trial % kSearchStreams, trial / kSearchStreams);
}

/// 14 independent uniform residues.
inline CubicCoefficients<Residue> sample_raw(CounterRng& rng, const PrimeField& field) {
    CubicCoefficients<Residue> c;
    for (auto& r : c) r = Residue{static_cast<std::uint32_t>(rng.uniform(field.modulus()))};
    return c;
}

struct CoordinateSolve {
    bool indeterminate = false;       // s_j vanishes identically in the coordinate
    std::vector<Residue> roots;       // increasing order
    std::vector<Residue> polynomial;  // s_j as polynomial in the coordinate, lowest first
};

/// Upper bound on the degree of s_j in coefficient `coord` from weighted
/// homogeneity: 2j / weight.
inline int coordinate_degree_bound(std::size_t coord, int j) { return 2 * j / kCoefficientWeights[coord]; }

/// Recovers s_j as a univariate polynomial in coefficient `coord` (others
/// fixed) by evaluating at 0..D and interpolating, then finds its roots.
inline CoordinateSolve solve_in_coordinate(FocalEngine<PrimeField>& engine, CubicCoefficients<Residue> coeffs,
                                           std::size_t coord, int j) {
    const auto& field = engine.ring();
    const int bound = coordinate_degree_bound(coord, j);
    if (field.modulus() <= static_cast<std::uint32_t>(bound)) throw Error("prime too small to interpolate s_j");
    std::vector<Residue> samples;
    for (int t = 0; t <= bound; ++t) {
        coeffs[coord] = Residue{static_cast<std::uint32_t>(t)};
        Residue value{};
        engine.run(cubic_system(coeffs), j, false, [&](int idx, Residue s) {
            if (idx == j) value = s;
            return true;
        });
        samples.push_back(value);
    }
    CoordinateSolve out;
    out.polynomial = interpolate_at_integers(field, samples);
    if (std::all_of(out.polynomial.begin(), out.polynomial.end(), [](Residue r) { return r.value == 0; })) {
        out.indeterminate = true;
        return out;
    }
    out.roots = univariate_roots(field, out.polynomial);
    return out;
}

/// All completions of `coeffs` in the two designated coordinates with
/// s_1 = s_2 = 0. The first coordinate (cubic, so s_1 is linear in it)
/// solves s_1 = 0 as a function of the second; the second then solves s_2 = 0
/// along that curve, where s_2 is a polynomial of degree <= 4 / weight.
/// Returns nothing when either equation is degenerate (identically zero or
/// a vanishing leading coefficient for s_1); an empty list means no roots.
inline std::optional<std::vector<CubicCoefficients<Residue>>> parametrized_solutions(
    FocalEngine<PrimeField>& engine, const CubicCoefficients<Residue>& coeffs, std::size_t first, std::size_t second) {
    const auto& field = engine.ring();
    auto on_curve = [&](Residue x) -> std::optional<CubicCoefficients<Residue>> {
        auto c = coeffs;
        c[second] = x;
        auto s1 = solve_in_coordinate(engine, c, first, 1);
        if (s1.indeterminate || s1.roots.size() != 1) return std::nullopt;
        c[first] = s1.roots.front();
        return c;
    };

    const int bound = 4 / kCoefficientWeights[second];
    std::vector<Residue> samples;
    for (int t = 0; t <= bound; ++t) {
        auto c = on_curve(Residue{static_cast<std::uint32_t>(t)});
        if (!c) return std::nullopt;
        Residue value{};
        engine.run(cubic_system(*c), 2, false, [&](int j, Residue s) {
            if (j == 2) value = s;
            return true;
        });
        samples.push_back(value);
    }
    auto poly = interpolate_at_integers(field, samples);
    if (std::all_of(poly.begin(), poly.end(), [](Residue r) { return r.value == 0; })) return std::nullopt;
    std::vector<CubicCoefficients<Residue>> out;
    for (Residue root : univariate_roots(field, poly)) out.push_back(*on_curve(root));
    return out;
}

/// Draws all 14 coefficients uniformly, then overwrites the two designated
/// ones with a uniformly chosen completion having s_1 = s_2 = 0. Returns
/// nothing (a rejected trial) when no completion exists.
inline std::optional<CubicCoefficients<Residue>> sample_parametrized(CounterRng& rng, FocalEngine<PrimeField>& engine,
                                                                     const SearchConfig& config) {
    auto coeffs = sample_raw(rng, engine.ring());
    auto solutions = parametrized_solutions(engine, coeffs, config.solve_first, config.solve_second);
    if (!solutions || solutions->empty()) return std::nullopt;
    return (*solutions)[solutions->size() == 1 ? 0 : rng.uniform(solutions->size())];
}

struct HitRecord {
    std::uint32_t prime = 0;
    CubicCoefficients<Residue> coefficients{};
    int depth = 0;                  // s_1..s_depth vanish
    std::optional<Residue> next;    // s_{depth+1}; absent if beyond the evaluated range
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    std::uint64_t counter = 0;
    Strategy strategy = Strategy::Rejection;
    Convention convention = Convention::N1;

    std::uint64_t trial_index() const { return counter * kSearchStreams + stream; }

    /// One JSON object per line, keys in fixed order.
    std::string to_line() const {
        nlohmann::ordered_json j;
        j["format"] = "focal-hit/1";
        j["p"] = prime;
        auto& arr = j["coefficients"] = nlohmann::ordered_json::array();
        for (auto r : coefficients) arr.push_back(r.value);
        j["depth"] = depth;
        j["next"] = next ? nlohmann::ordered_json(next->value) : nlohmann::ordered_json(nullptr);
        j["seed"] = seed;
        j["stream"] = stream;
        j["counter"] = counter;
        j["strategy"] = to_string(strategy);
        j["convention"] = to_string(convention);
        return j.dump();
    }

    static HitRecord from_line(const std::string& line) {
        try {
            auto j = nlohmann::json::parse(line);
            if (j.at("format") != "focal-hit/1") throw FormatError("unsupported hit format");
            HitRecord h;
            h.prime = j.at("p").get<std::uint32_t>();
            auto arr = j.at("coefficients");
            if (!arr.is_array() || arr.size() != kNumCoefficients) throw FormatError("hit needs 14 coefficients");
            for (std::size_t i = 0; i < kNumCoefficients; ++i) h.coefficients[i] = Residue{arr[i].get<std::uint32_t>()};
            h.depth = j.at("depth").get<int>();
            if (!j.at("next").is_null()) h.next = Residue{j.at("next").get<std::uint32_t>()};
            h.seed = j.at("seed").get<std::uint64_t>();
            h.stream = j.at("stream").get<std::uint64_t>();
            h.counter = j.at("counter").get<std::uint64_t>();
            h.strategy = parse_strategy(j.at("strategy").get<std::string>());
            h.convention = parse_convention(j.at("convention").get<std::string>());
            return h;
        } catch (const nlohmann::json::exception& e) {
            throw FormatError(std::string("malformed hit record: ") + e.what());
        }
    }

    friend bool operator==(const HitRecord&, const HitRecord&) = default;
};

struct SearchStats {
    std::uint64_t trials = 0;
    std::uint64_t accepted = 0;
    std::uint64_t rejected = 0;
    std::uint64_t hits = 0;
    std::vector<std::uint64_t> survivors;  // survivors[d-1]: accepted trials with s_1..s_d = 0
    double elapsed_seconds = 0;

    void merge(const SearchStats& o) {
        trials += o.trials;
        accepted += o.accepted;
        rejected += o.rejected;
        hits += o.hits;
        if (survivors.size() < o.survivors.size()) survivors.resize(o.survivors.size());
        for (std::size_t i = 0; i < o.survivors.size(); ++i) survivors[i] += o.survivors[i];
    }

    double survivor_fraction(int depth) const {
        return trials == 0 ? 0.0 : static_cast<double>(survivors.at(static_cast<std::size_t>(depth - 1))) / trials;
    }
};

/// Per-thread trial evaluator.
class TrialRunner {
  public:
    explicit TrialRunner(const SearchConfig& config)
        : config_(config), field_(config.prime),
          engine_(field_, 3, config.effective_max_depth(), config.convention) {}

    /// Sampled system for a trial, or nothing if the sampler rejected it.
    std::optional<CubicCoefficients<Residue>> sample(CounterRng& rng) {
        if (config_.strategy == Strategy::Rejection) return sample_raw(rng, field_);
        return sample_parametrized(rng, engine_, config_);
    }

    /// Runs trial `index`; updates stats and returns a hit if depth >= target.
    std::optional<HitRecord> run(std::uint64_t index, SearchStats& stats) {
        auto rng = trial_rng(config_.seed, index);
        ++stats.trials;
        auto coeffs = sample(rng);
        if (!coeffs) {
            ++stats.rejected;
            return std::nullopt;
        }
        ++stats.accepted;
        const int max_depth = config_.effective_max_depth();
        auto found = engine_.first_nonzero_value(cubic_system(*coeffs), max_depth);
        const int depth = found ? found->first - 1 : max_depth;
        for (int d = 1; d <= depth; ++d) ++stats.survivors[static_cast<std::size_t>(d - 1)];
        if (depth < config_.target) return std::nullopt;
        ++stats.hits;
        HitRecord h;
        h.prime = config_.prime;
        h.coefficients = *coeffs;
        h.depth = depth;
        if (found) h.next = found->second;
        h.seed = config_.seed;
        h.stream = rng.stream();
        h.counter = rng.counter();
        h.strategy = config_.strategy;
        h.convention = config_.convention;
        return h;
    }

    FocalEngine<PrimeField>& engine() { return engine_; }

  private:
    SearchConfig config_;
    PrimeField field_;
    FocalEngine<PrimeField> engine_;
};

/// Regenerates the system sampled by the trial at (seed, stream, counter).
inline std::optional<CubicCoefficients<Residue>> reproduce_trial(const SearchConfig& config, std::uint64_t stream,
                                                                 std::uint64_t counter) {
    TrialRunner runner(config);
    CounterRng rng(config.seed, stream, counter);
    return runner.sample(rng);
}

struct SearchCheckpoint {
    std::string config_digest;
    std::uint64_t trials_done = 0;
    std::vector<std::uint64_t> stream_counters = std::vector<std::uint64_t>(kSearchStreams, 0);
    SearchStats stats;

    /// Next counter of every stream after `trials` trials.
    static std::vector<std::uint64_t> counters_after(std::uint64_t trials) {
        std::vector<std::uint64_t> c(kSearchStreams);
        for (std::uint64_t s = 0; s < kSearchStreams; ++s) c[s] = trials / kSearchStreams + (s < trials % kSearchStreams);
        return c;
    }

    std::string body() const {
        std::ostringstream os;
        os << "format = focal-checkpoint/1\n";
        os << "config_digest = " << config_digest << "\n";
        os << "streams = " << kSearchStreams << "\n";
        os << "trials_done = " << trials_done << "\n";
        os << "accepted = " << stats.accepted << "\n";
        os << "rejected = " << stats.rejected << "\n";
        os << "hits = " << stats.hits << "\n";
        os << "survivors =";
        for (auto s : stats.survivors) os << " " << s;
        os << "\nstream_counters =";
        for (auto c : stream_counters) os << " " << c;
        os << "\nelapsed_seconds = " << std::fixed << std::setprecision(3) << stats.elapsed_seconds << "\n";
        return os.str();
    }

    std::string serialize() const {
        auto b = body();
        return b + "checksum = " + hex64(fnv1a(b)) + "\n";
    }

    static SearchCheckpoint parse(const std::string& text) {
        auto pos = text.rfind("checksum = ");
        if (pos == std::string::npos) throw FormatError("checkpoint has no checksum (partial write?)");
        std::string body = text.substr(0, pos);
        std::string sum = text.substr(pos + 11);
        while (!sum.empty() && (sum.back() == '\n' || sum.back() == '\r')) sum.pop_back();
        if (sum != hex64(fnv1a(body))) throw FormatError("checkpoint digest mismatch: file is corrupted or was edited");

        std::map<std::string, std::string> f;
        std::istringstream in(body);
        std::string line;
        while (std::getline(in, line)) {
            auto eq = line.find(" = ");
            if (eq == std::string::npos) eq = line.find(" =");
            if (eq == std::string::npos) throw FormatError("malformed checkpoint line: " + line);
            auto value_start = std::min(line.size(), eq + 3);
            f[line.substr(0, eq)] = line.substr(value_start);
        }
        auto need = [&](const char* key) -> const std::string& {
            auto it = f.find(key);
            if (it == f.end()) throw FormatError(std::string("checkpoint missing field '") + key + "'");
            return it->second;
        };
        auto u64 = [&](const char* key) { return std::stoull(need(key)); };
        auto list = [&](const char* key) {
            std::vector<std::uint64_t> v;
            std::istringstream s(need(key));
            std::uint64_t x;
            while (s >> x) v.push_back(x);
            return v;
        };
        if (need("format") != "focal-checkpoint/1") throw FormatError("unsupported checkpoint format");
        if (u64("streams") != kSearchStreams) throw FormatError("checkpoint stream count mismatch");
        SearchCheckpoint cp;
        cp.config_digest = need("config_digest");
        cp.trials_done = u64("trials_done");
        cp.stats.trials = cp.trials_done;
        cp.stats.accepted = u64("accepted");
        cp.stats.rejected = u64("rejected");
        cp.stats.hits = u64("hits");
        cp.stats.survivors = list("survivors");
        cp.stream_counters = list("stream_counters");
        cp.stats.elapsed_seconds = std::stod(need("elapsed_seconds"));
        if (cp.stream_counters != counters_after(cp.trials_done))
            throw FormatError("checkpoint stream counters inconsistent with trials_done");
        if (cp.stats.accepted + cp.stats.rejected != cp.trials_done)
            throw FormatError("checkpoint trial totals inconsistent");
        return cp;
    }
};

/// Writes to a temporary sibling and renames over the target.
inline void checkpoint_save(const SearchCheckpoint& cp, const std::filesystem::path& path) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write checkpoint " + tmp.string());
        out << cp.serialize();
        out.flush();
        if (!out) throw Error("failed writing checkpoint " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

/// A missing file means a fresh start (all counters zero).
inline SearchCheckpoint checkpoint_load(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) return {};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read checkpoint " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return SearchCheckpoint::parse(ss.str());
}

struct SearchResult {
    SearchStats stats;              // cumulative, including resumed trials
    std::vector<HitRecord> hits;    // hits committed during this run
    bool interrupted = false;
};

struct SearchCallbacks {
    std::function<void(const HitRecord&)> on_hit;
    std::function<void(const SearchStats&)> on_progress;
    const std::atomic<bool>* stop = nullptr;
    double progress_interval_seconds = 1.0;
};

namespace detail {

inline std::vector<std::string> read_lines(const std::filesystem::path& path) {
    std::vector<std::string> lines;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

}  // namespace detail

/// Runs trials [resumed, budget). Workers claim fixed-size chunks of trial
/// indices; the calling thread commits chunks strictly in index order, so
/// the hit log and checkpoints do not depend on the worker count.
inline SearchResult search_run(const SearchConfig& config, const SearchCallbacks& callbacks = {}) {
    config.validate();
    constexpr std::uint64_t kChunk = 1024;
    const auto digest = config_digest(config);
    const int max_depth = config.effective_max_depth();

    SearchCheckpoint state;
    state.config_digest = digest;
    state.stats.survivors.assign(static_cast<std::size_t>(max_depth), 0);
    if (config.resume && !config.checkpoint_path.empty()) {
        auto loaded = checkpoint_load(config.checkpoint_path);
        if (loaded.trials_done > 0 || !loaded.config_digest.empty()) {
            if (loaded.config_digest != digest)
                throw FormatError("checkpoint digest mismatch: checkpoint belongs to a different search configuration");
            state = std::move(loaded);
            state.stats.survivors.resize(static_cast<std::size_t>(max_depth), 0);
        }
    }

    std::ofstream hit_log;
    if (!config.hit_log_path.empty()) {
        // Drop hits logged after the last checkpoint; they are recomputed.
        std::vector<std::string> keep;
        if (state.trials_done > 0) {
            keep = detail::read_lines(config.hit_log_path);
            if (keep.size() < state.stats.hits) throw FormatError("hit log shorter than checkpoint hit count");
            keep.resize(state.stats.hits);
        }
        hit_log.open(config.hit_log_path, std::ios::binary | std::ios::trunc);
        if (!hit_log) throw Error("cannot write hit log " + config.hit_log_path.string());
        for (const auto& l : keep) hit_log << l << "\n";
        hit_log.flush();
    }

    SearchResult result;
    const std::uint64_t start = state.trials_done;
    const std::uint64_t end = std::max(start, config.budget);
    const std::uint64_t chunks = (end - start + kChunk - 1) / kChunk;
    const double elapsed_before = state.stats.elapsed_seconds;
    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };

    struct Chunk {
        SearchStats stats;
        std::vector<HitRecord> hits;
    };
    std::mutex mu;
    std::condition_variable cv;
    std::map<std::uint64_t, Chunk> finished;
    std::atomic<std::uint64_t> next_chunk{0};
    unsigned running = config.workers;

    auto worker = [&] {
        TrialRunner runner(config);
        for (;;) {
            if (callbacks.stop && callbacks.stop->load()) break;
            std::uint64_t c = next_chunk.fetch_add(1);
            if (c >= chunks) break;
            Chunk chunk;
            chunk.stats.survivors.assign(static_cast<std::size_t>(max_depth), 0);
            const std::uint64_t lo = start + c * kChunk;
            const std::uint64_t hi = std::min(end, lo + kChunk);
            for (std::uint64_t i = lo; i < hi; ++i)
                if (auto hit = runner.run(i, chunk.stats)) chunk.hits.push_back(std::move(*hit));
            std::lock_guard lock(mu);
            finished.emplace(c, std::move(chunk));
            cv.notify_one();
        }
        std::lock_guard lock(mu);
        --running;
        cv.notify_one();
    };

    std::vector<std::thread> threads;
    for (unsigned w = 0; w < config.workers; ++w) threads.emplace_back(worker);

    auto write_checkpoint = [&] {
        state.stats.elapsed_seconds = elapsed_before + elapsed();
        state.stream_counters = SearchCheckpoint::counters_after(state.trials_done);
        if (!config.checkpoint_path.empty()) checkpoint_save(state, config.checkpoint_path);
    };

    std::uint64_t since_checkpoint = 0;
    double last_progress = 0;
    for (std::uint64_t c = 0; c < chunks; ++c) {
        Chunk chunk;
        {
            std::unique_lock lock(mu);
            cv.wait(lock, [&] { return finished.count(c) || running == 0; });
            auto it = finished.find(c);
            if (it == finished.end()) {
                result.interrupted = true;
                break;
            }
            chunk = std::move(it->second);
            finished.erase(it);
        }
        for (auto& h : chunk.hits) {
            if (hit_log.is_open()) {
                hit_log << h.to_line() << "\n";
                hit_log.flush();
            }
            if (callbacks.on_hit) callbacks.on_hit(h);
            result.hits.push_back(std::move(h));
        }
        state.stats.merge(chunk.stats);
        state.trials_done += chunk.stats.trials;
        since_checkpoint += chunk.stats.trials;
        if (since_checkpoint >= config.checkpoint_every) {
            write_checkpoint();
            since_checkpoint = 0;
        }
        if (callbacks.on_progress && elapsed() - last_progress >= callbacks.progress_interval_seconds) {
            last_progress = elapsed();
            state.stats.elapsed_seconds = elapsed_before + last_progress;
            callbacks.on_progress(state.stats);
        }
    }
    for (auto& t : threads) t.join();
    if (callbacks.stop && callbacks.stop->load() && state.trials_done < end) result.interrupted = true;

    write_checkpoint();
    result.stats = state.stats;
    return result;
}

/// Reads every record of a hit log.
inline std::vector<HitRecord> read_hit_log(const std::filesystem::path& path) {
    std::vector<HitRecord> out;
    for (const auto& line : detail::read_lines(path)) out.push_back(HitRecord::from_line(line));
    return out;
}

}  // namespace focal
