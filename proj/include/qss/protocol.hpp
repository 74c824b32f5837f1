// Copyright 2026 The qss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "qss/adversary.hpp"
#include "qss/config.hpp"
#include "qss/estimate.hpp"
#include "qss/phase.hpp"
#include "qss/physical.hpp"
#include "qss/random.hpp"

namespace qss {

/// A caller broke a precondition that the protocol relies on.
class ContractViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Public class of a protocol phase: X for {0, pi}, Y for {pi/2, 3pi/2}.
enum class ClassLabel { X, Y };

inline ClassLabel classify(Phase8 phase) {
    if (!phase.is_protocol_phase()) {
        throw ContractViolation("classify: odd phase " + std::to_string(phase.k()) + " has no class");
    }
    return phase.k() % 4 == 0 ? ClassLabel::X : ClassLabel::Y;
}

constexpr char class_char(ClassLabel c) {
    return c == ClassLabel::X ? 'X' : 'Y';
}

/// {0, pi/2} -> 0, {pi, 3pi/2} -> 1.
inline int bit_of_phase(Phase8 phase) {
    if (!phase.is_protocol_phase()) {
        throw ContractViolation("bit_of_phase: odd phase " + std::to_string(phase.k()));
    }
    return phase.k() < 4 ? 0 : 1;
}

enum class PartyKind { distributor, intermediate_recipient, last_recipient };

/// Uniform over {0, 2, 4, 6}, or over {0, 2} for the last recipient, who
/// measures in the fixed x basis after shifting. One draw.
inline Phase8 choose_phase(PartyKind kind, RandomStream &rng) {
    std::uint64_t choices = kind == PartyKind::last_recipient ? 2 : 4;
    return Phase8(2 * static_cast<int>(rng.uniform_below(choices)));
}

/// Everything the distributor is allowed to see when deciding validity: its
/// own class and the recipients' announced classes. No phases.
struct PublicView {
    ClassLabel distributor_class;
    std::span<const ClassLabel> announced;
};

/// Perfect (anti-)correlation iff the number of Y-class parties is even.
inline bool is_valid(const PublicView &view) {
    auto y = std::count(view.announced.begin(), view.announced.end(), ClassLabel::Y);
    y += view.distributor_class == ClassLabel::Y;
    return y % 2 == 0;
}

struct RoundRecord {
    std::uint64_t round_index = 0;
    Phase8 distributor_phase;
    std::vector<Phase8> recipient_phases;
    std::vector<ClassLabel> announced_classes;
    std::vector<int> announcement_order;
    Outcome outcome = Outcome::plus;
    bool valid = false;
    std::optional<int> distributor_bit;
    bool compared = false;
    bool attack_active = false;
    std::optional<EveRecord> eve;
};

/// Fisher-Yates over [0, n). n - 1 draws.
inline std::vector<int> random_permutation(int n, RandomStream &rng) {
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        order[i] = i;
    }
    for (int i = n - 1; i > 0; --i) {
        auto j = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(i) + 1));
        std::swap(order[i], order[j]);
    }
    return order;
}

/// Runs one round with the phase choices and announcement order fixed by the
/// caller. Draws: Eve's measurement (if attacked), final measurement, flip.
inline RoundRecord execute_round(const SessionConfig &config, std::uint64_t round_index, Phase8 distributor_phase,
                                 std::vector<Phase8> recipient_phases, std::vector<int> announcement_order,
                                 RandomStream &rng) {
    if (recipient_phases.size() != static_cast<std::size_t>(config.parties)) {
        throw ContractViolation("execute_round: expected one phase per recipient");
    }
    RoundRecord rec;
    rec.round_index = round_index;
    rec.distributor_phase = distributor_phase;
    rec.recipient_phases = std::move(recipient_phases);
    rec.announcement_order = std::move(announcement_order);
    rec.attack_active = config.attack.active();

    EquatorState qubit = prepare(distributor_phase);
    for (int j = 0; j < config.parties; ++j) {
        if (rec.attack_active && config.attack.link == j) {
            auto [resent, eve] = intercept_resend(qubit, measurement_phase(config.attack.basis), rng);
            qubit = resent;
            rec.eve = eve;
        }
        qubit = apply_phase(qubit, rec.recipient_phases[j]);
    }
    rec.outcome = flip_outcome(measure(qubit, Phase8(0), rng), config.noise, rng);

    rec.announced_classes.reserve(rec.recipient_phases.size());
    for (Phase8 p : rec.recipient_phases) {
        rec.announced_classes.push_back(classify(p));
    }
    rec.valid = is_valid(PublicView{classify(distributor_phase), rec.announced_classes});
    if (rec.valid) {
        rec.distributor_bit = bit_of_phase(distributor_phase);
    }
    return rec;
}

inline RoundRecord run_round(const SessionConfig &config, std::uint64_t round_index, RandomStream &rng) {
    if (config.parties < 2) {
        throw ContractViolation("run_round: need at least 2 recipients");
    }
    Phase8 d = choose_phase(PartyKind::distributor, rng);
    std::vector<Phase8> phases;
    phases.reserve(static_cast<std::size_t>(config.parties));
    for (int j = 0; j + 1 < config.parties; ++j) {
        phases.push_back(choose_phase(PartyKind::intermediate_recipient, rng));
    }
    phases.push_back(choose_phase(PartyKind::last_recipient, rng));
    auto order = random_permutation(config.parties, rng);
    return execute_round(config, round_index, d, std::move(phases), std::move(order), rng);
}

inline std::optional<int> sift(const RoundRecord &record) {
    if (!record.valid) {
        return std::nullopt;
    }
    return bit_of_phase(record.distributor_phase);
}

/// Joint inference of the distributor's bit by all recipients: solves
/// d = T0 - sum(recipient phases) (mod 8), T0 = 0 for +1 and pi for -1.
inline int reconstruct(Outcome outcome, std::span<const Phase8> recipient_phases) {
    Phase8 solved = Phase8(outcome == Outcome::plus ? 0 : 4) - sum_phases(recipient_phases);
    if (!solved.is_protocol_phase()) {
        throw ContractViolation("reconstruct: solved phase " + std::to_string(solved.k()) +
                                " is odd; round is invalid or garbled");
    }
    return bit_of_phase(solved);
}

struct ComparisonResult {
    std::optional<QberEstimate> qber;
    std::uint64_t errors = 0;
    AbortDecision abort = AbortDecision::undecided;
};

/// Publicly compares a uniformly chosen floor(fraction * n_valid) subset of the
/// valid records (without replacement), marking them compared.
inline ComparisonResult compare_and_decide(std::span<RoundRecord> records, double compare_fraction,
                                           double threshold, RandomStream &rng) {
    if (!(compare_fraction >= 0 && compare_fraction <= 1)) {
        throw std::invalid_argument("compare_and_decide: compare_fraction outside [0, 1]");
    }
    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (records[i].valid) {
            pool.push_back(i);
        }
    }
    auto n = static_cast<std::uint64_t>(std::floor(compare_fraction * static_cast<double>(pool.size())));
    for (std::uint64_t i = 0; i < n; ++i) {
        std::uint64_t j = i + rng.uniform_below(pool.size() - i);
        std::swap(pool[i], pool[j]);
    }

    ComparisonResult result;
    for (std::uint64_t i = 0; i < n; ++i) {
        RoundRecord &r = records[pool[i]];
        r.compared = true;
        result.errors += reconstruct(r.outcome, r.recipient_phases) != *r.distributor_bit;
    }
    result.qber = qber(result.errors, n);
    if (result.qber) {
        result.abort = result.qber->q > threshold ? AbortDecision::yes : AbortDecision::no;
    }
    return result;
}

struct SessionResult {
    SessionReport report;
    /// Coincidence rounds only (the raw key rounds), in round order.
    std::vector<RoundRecord> records;
};

namespace detail {

struct ChunkResult {
    std::uint64_t z_one = 0;
    std::vector<RoundRecord> records;
};

inline ChunkResult run_chunk(const SessionConfig &config, std::uint64_t begin, std::uint64_t end) {
    ChunkResult out;
    for (std::uint64_t i = begin; i < end; ++i) {
        auto gates = RandomStream::derive(config.seed, i, RandomStream::Channel::gates);
        if (herald_gate(config.noise, gates) != HeraldResult::heralded) {
            continue;
        }
        ++out.z_one;
        if (!coincidence_gate(config.noise, gates)) {
            continue;
        }
        auto rng = RandomStream::derive(config.seed, i, RandomStream::Channel::protocol);
        out.records.push_back(run_round(config, i, rng));
    }
    return out;
}

}  // namespace detail

/// Runs config.rounds rounds through heralding and coincidence gating, sifts,
/// compares a random subset and derives the key from the rest.
///
/// The transcript depends only on config (seed included); `threads` changes
/// nothing but wall time. threads == 0 means hardware concurrency.
inline SessionResult run_session(const SessionConfig &config, unsigned threads = 1) {
    validate(config);
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    std::uint64_t chunks = std::min<std::uint64_t>(threads, std::max<std::uint64_t>(config.rounds, 1));
    std::vector<detail::ChunkResult> parts(chunks);
    auto bounds = [&](std::uint64_t c) { return config.rounds * c / chunks; };
    if (chunks == 1) {
        parts[0] = detail::run_chunk(config, 0, config.rounds);
    } else {
        std::vector<std::jthread> workers;
        for (std::uint64_t c = 0; c < chunks; ++c) {
            workers.emplace_back([&, c] { parts[c] = detail::run_chunk(config, bounds(c), bounds(c + 1)); });
        }
    }

    SessionResult result;
    SessionReport &rep = result.report;
    rep.config_echo = config;
    rep.z_total = config.rounds;
    for (auto &part : parts) {
        rep.z_one += part.z_one;
        for (auto &r : part.records) {
            result.records.push_back(std::move(r));
        }
    }
    rep.z_raw = result.records.size();
    for (const auto &r : result.records) {
        rep.z_val += r.valid;
    }

    auto rng = RandomStream::derive(config.seed, 0, RandomStream::Channel::comparison);
    ComparisonResult cmp = compare_and_decide(result.records, config.compare_fraction, config.abort_threshold, rng);
    rep.qber = cmp.qber;
    rep.abort = cmp.abort;
    rep.compared = cmp.qber ? cmp.qber->n : 0;
    for (const auto &r : result.records) {
        if (r.valid && !r.compared) {
            rep.key_bits.push_back(*r.distributor_bit == 1);
        }
    }
    return result;
}

}  // namespace qss
