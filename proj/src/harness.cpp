#include "mimopnc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace mimopnc {

namespace {

void validate(const SimConfig& cfg) {
    if (cfg.snr_db_grid.empty()) {
        throw ConfigError("snr_db_grid must be nonempty");
    }
    if (std::adjacent_find(cfg.snr_db_grid.begin(), cfg.snr_db_grid.end(),
                           [](double a, double b) { return a >= b; }) != cfg.snr_db_grid.end()) {
        throw ConfigError("snr_db_grid must be strictly increasing");
    }
    if (cfg.symbols_per_point < 1) {
        throw ConfigError("symbols_per_point must be >= 1");
    }
    if (cfg.detectors.empty()) {
        throw ConfigError("detector set must be nonempty");
    }
}

std::size_t grid_index(const SimConfig& cfg, double snr_db) {
    for (std::size_t i = 0; i < cfg.snr_db_grid.size(); ++i) {
        if (cfg.snr_db_grid[i] == snr_db) {
            return i;
        }
    }
    throw ConfigError("snr_db not on the configured grid");
}

void trial_into(RngStream& rng, const NoiseParams& sigma,
                const std::vector<DetectorId>& detectors, ChannelMode mode,
                const Mat2& fixed_h, TrialResult* out) {
    const std::uint64_t raw = rng.next_u64();
    const BitPair b1{static_cast<std::uint8_t>(raw & 1), static_cast<std::uint8_t>((raw >> 1) & 1)};
    const BitPair b2{static_cast<std::uint8_t>((raw >> 2) & 1), static_cast<std::uint8_t>((raw >> 3) & 1)};
    const BitPair truth = xor_bits(b1, b2);

    const Mat2 h = mode == ChannelMode::rayleigh_block ? draw_channel(rng) : fixed_h;
    const Vec2 x{modulate(b1).value, modulate(b2).value};
    const Vec2 n = draw_noise(rng, sigma);
    const Vec2 y{h.h11 * x.a + h.h12 * x.b + n.a, h.h21 * x.a + h.h22 * x.b + n.b};

    const DetectorInput in{y, h, sigma};
    for (std::size_t d = 0; d < detectors.size(); ++d) {
        BitPair est;
        bool degenerate = false;
        try {
            est = run_detector(detectors[d], in).bits;
        } catch (const DegenerateChannel&) {
            // Fair-coin guess so BER accounting never drops the trial.
            const std::uint64_t g = rng.next_u64();
            est = {static_cast<std::uint8_t>(g & 1), static_cast<std::uint8_t>((g >> 1) & 1)};
            degenerate = true;
        }
        out[d].bit_errors = (est.b_re != truth.b_re) + (est.b_im != truth.b_im);
        out[d].degenerate = degenerate;
    }
}

unsigned worker_count(const SimConfig& cfg) {
    unsigned n = cfg.max_workers != 0 ? cfg.max_workers : std::thread::hardware_concurrency();
    return std::max(1u, n);
}

} // namespace

std::vector<TrialResult> run_trial(RngStream& rng, const NoiseParams& sigma,
                                   const std::vector<DetectorId>& detectors,
                                   ChannelMode mode, const Mat2& fixed_h) {
    std::vector<TrialResult> out(detectors.size());
    trial_into(rng, sigma, detectors, mode, fixed_h, out.data());
    return out;
}

std::vector<BerRecord> run_point(const SimConfig& cfg, double snr_db) {
    validate(cfg);
    const std::uint64_t snr_index = grid_index(cfg, snr_db);
    const NoiseParams sigma = snr_to_sigma(snr_db);
    const std::size_t ndet = cfg.detectors.size();
    const std::uint64_t trials = cfg.symbols_per_point;

    struct Tally {
        std::vector<std::uint64_t> errors;
        std::vector<std::uint64_t> degenerate;
    };

    const unsigned workers = static_cast<unsigned>(
        std::min<std::uint64_t>(worker_count(cfg), trials));
    std::vector<Tally> tallies(workers, Tally{std::vector<std::uint64_t>(ndet, 0),
                                              std::vector<std::uint64_t>(ndet, 0)});

    // Each trial owns a substream keyed by (seed, snr index, trial index),
    // so the shard boundaries cannot affect the results.
    auto work = [&](unsigned w) {
        Tally& t = tallies[w];
        std::vector<TrialResult> res(ndet);
        for (std::uint64_t i = w; i < trials; i += workers) {
            RngStream rng(cfg.seed, (snr_index << 40) + i);
            trial_into(rng, sigma, cfg.detectors, cfg.channel_mode, cfg.fixed_h, res.data());
            for (std::size_t d = 0; d < ndet; ++d) {
                t.errors[d] += static_cast<std::uint64_t>(res[d].bit_errors);
                t.degenerate[d] += res[d].degenerate ? 1 : 0;
            }
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work, w);
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    std::vector<BerRecord> out;
    out.reserve(ndet);
    for (std::size_t d = 0; d < ndet; ++d) {
        BerRecord rec;
        rec.detector = cfg.detectors[d];
        rec.snr_db = snr_db;
        rec.bits_total = 2 * trials;
        for (const Tally& t : tallies) {
            rec.bit_errors += t.errors[d];
            rec.degenerate_count += t.degenerate[d];
        }
        rec.ber = static_cast<double>(rec.bit_errors) / static_cast<double>(rec.bits_total);
        out.push_back(rec);
    }
    return out;
}

std::vector<BerRecord> run_sweep(const SimConfig& cfg) {
    validate(cfg);
    std::vector<BerRecord> all;
    all.reserve(cfg.snr_db_grid.size() * cfg.detectors.size());
    for (double snr : cfg.snr_db_grid) {
        auto recs = run_point(cfg, snr);
        all.insert(all.end(), recs.begin(), recs.end());
    }
    std::stable_sort(all.begin(), all.end(), [](const BerRecord& a, const BerRecord& b) {
        if (a.detector != b.detector) {
            return static_cast<int>(a.detector) < static_cast<int>(b.detector);
        }
        return a.snr_db < b.snr_db;
    });
    return all;
}

namespace {

double snr_at_target(const std::vector<BerRecord>& records, DetectorId det, double target_ber) {
    std::vector<const BerRecord*> curve;
    for (const BerRecord& r : records) {
        if (r.detector == det) {
            curve.push_back(&r);
        }
    }
    std::sort(curve.begin(), curve.end(),
              [](const BerRecord* a, const BerRecord* b) { return a->snr_db < b->snr_db; });

    const double lt = std::log10(target_ber);
    for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
        if (curve[i]->ber <= 0.0 || curve[i + 1]->ber <= 0.0) {
            continue;
        }
        const double la = std::log10(curve[i]->ber);
        const double lb = std::log10(curve[i + 1]->ber);
        if ((la - lt) * (lb - lt) <= 0.0 && la != lb) {
            return curve[i]->snr_db +
                   (lt - la) / (lb - la) * (curve[i + 1]->snr_db - curve[i]->snr_db);
        }
    }
    throw NoCrossing("detector " + detector_name(det) + " never reaches the target BER on the grid");
}

} // namespace

double estimate_gap_db(const std::vector<BerRecord>& records, DetectorId det_a,
                       DetectorId det_b, double target_ber) {
    return snr_at_target(records, det_b, target_ber) - snr_at_target(records, det_a, target_ber);
}

} // namespace mimopnc
