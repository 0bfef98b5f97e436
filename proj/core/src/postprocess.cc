// Copyright 2026 The qgen Authors
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

#include "qgen/postprocess.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <set>

#include "qgen/bits.h"
#include "qgen/error.h"
#include "qgen/number.h"

namespace qgen {

SimonSolution simon_solve(const Gf2System &samples) {
    const std::size_t n = samples.width;
    if (samples.rows.empty()) fail(ErrorKind::invalid_argument, "no samples to solve");
    if (n == 0 || n > 64) fail(ErrorKind::invalid_argument, "GF(2) width must be in [1, 64]");
    std::vector<std::uint64_t> rows;
    for (const auto &r : samples.rows) {
        check_bitstring(r, n, "sample");
        rows.push_back(from_bitstring(r));
    }
    // Reduced row echelon form, pivots chosen from the high column down.
    std::vector<std::pair<std::uint64_t, unsigned>> basis;  // (row, pivot column)
    for (auto r : rows) {
        for (const auto &[b, col] : basis) {
            if ((r >> col) & 1) r ^= b;
        }
        if (r == 0) continue;
        const unsigned col = 63 - static_cast<unsigned>(std::countl_zero(r));
        for (auto &[b, c] : basis) {
            if ((b >> col) & 1) b ^= r;
        }
        basis.emplace_back(r, col);
    }
    SimonSolution out;
    out.rank = basis.size();
    if (out.rank == n) {
        out.status = SimonStatus::one_to_one;
        return out;
    }
    if (out.rank + 1 != n) {
        out.status = SimonStatus::insufficient;
        return out;
    }
    std::uint64_t pivots = 0;
    for (const auto &[b, col] : basis) pivots |= std::uint64_t{1} << col;
    unsigned free_col = 0;
    while ((pivots >> free_col) & 1) ++free_col;
    std::uint64_t s = std::uint64_t{1} << free_col;
    for (const auto &[b, col] : basis) {
        if ((b >> free_col) & 1) s |= std::uint64_t{1} << col;
    }
    out.status = SimonStatus::found;
    out.secret = to_bitstring(s, n);
    return out;
}

std::string_view to_string(FactorStatus status) {
    switch (status) {
        case FactorStatus::classical_shortcut:
            return "classical-shortcut";
        case FactorStatus::lucky_gcd:
            return "lucky-gcd";
        case FactorStatus::success:
            return "success";
        case FactorStatus::retry_needed:
            return "retry-needed";
    }
    return "retry-needed";
}

namespace {

std::vector<std::uint64_t> nontrivial(std::initializer_list<std::uint64_t> cands, std::uint64_t N) {
    std::vector<std::uint64_t> out;
    for (auto f : cands) {
        if (f > 1 && f < N && N % f == 0) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::optional<FactorResult> shor_screen(std::uint64_t N, std::optional<std::uint64_t> a) {
    if (N < 3) fail(ErrorKind::invalid_argument, "N must be at least 3");
    if (a && (*a <= 1 || *a >= N)) {
        fail(ErrorKind::invalid_argument, "a must satisfy 1 < a < N");
    }
    FactorResult r;
    r.N = N;
    r.a = a.value_or(0);
    r.status = FactorStatus::classical_shortcut;
    if (N % 2 == 0) {
        r.factors = nontrivial({2, N / 2}, N);
        return r;
    }
    if (is_prime(N)) return r;
    if (auto pp = perfect_power(N)) {
        r.factors = nontrivial({pp->first, N / pp->first}, N);
        return r;
    }
    if (a) {
        const auto g = std::gcd(*a, N);
        if (g != 1) {
            r.status = FactorStatus::lucky_gcd;
            r.factors = nontrivial({g, N / g}, N);
            return r;
        }
    }
    return std::nullopt;
}

FactorResult shor_postprocess(std::uint64_t x, std::size_t t, std::uint64_t N, std::uint64_t a) {
    if (t == 0 || t > 62) fail(ErrorKind::invalid_argument, "counting width must be in [1, 62]");
    if (x >= (std::uint64_t{1} << t)) fail(ErrorKind::invalid_argument, "reading exceeds 2^t");
    if (N < 3) fail(ErrorKind::invalid_argument, "N must be at least 3");
    FactorResult r;
    r.N = N;
    r.a = a;
    r.measured = x;
    r.status = FactorStatus::retry_needed;
    if (x == 0) return r;

    // Convergent recurrence on x / 2^t; stop once denominators reach N.
    std::uint64_t num = x, den = std::uint64_t{1} << t;
    std::uint64_t q_prev = 0, q_prev2 = 1;
    while (den != 0) {
        const std::uint64_t term = num / den;
        const uint128 q = static_cast<uint128>(term) * q_prev + q_prev2;
        if (q >= N) break;
        const auto qd = static_cast<std::uint64_t>(q);
        if (qd > 0 && mod_pow(a, qd, N) == 1) {
            r.period = qd;
            break;
        }
        q_prev2 = q_prev;
        q_prev = qd;
        const std::uint64_t rem = num - term * den;
        num = den;
        den = rem;
    }
    if (!r.period || *r.period % 2 != 0) return r;
    const std::uint64_t half = mod_pow(a, *r.period / 2, N);
    if (half == N - 1) return r;
    r.factors = nontrivial({std::gcd(half + N - 1, N), std::gcd(half + 1, N)}, N);
    if (!r.factors.empty()) r.status = FactorStatus::success;
    return r;
}

double counting_estimate(std::uint64_t x, std::size_t t, std::size_t n) {
    if (t > 62 || x >= (std::uint64_t{1} << t)) {
        fail(ErrorKind::invalid_argument, "reading exceeds 2^t");
    }
    const double s = std::sin(std::numbers::pi * std::ldexp(static_cast<double>(x), -static_cast<int>(t)));
    return std::ldexp(s * s, static_cast<int>(n));
}

std::string_view to_string(QkdVerdict verdict) {
    switch (verdict) {
        case QkdVerdict::clean:
            return "clean";
        case QkdVerdict::detected:
            return "detected";
        case QkdVerdict::inconclusive:
            return "inconclusive";
    }
    return "inconclusive";
}

namespace {

std::vector<int> int_array(const nlohmann::json &hidden, const char *key, std::size_t n) {
    if (!hidden.contains(key)) {
        fail(ErrorKind::invalid_argument, std::string("metadata lacks '") + key + "'");
    }
    auto v = hidden.at(key).get<std::vector<int>>();
    if (v.size() != n) {
        fail(ErrorKind::invalid_argument, std::string("metadata '") + key + "' has wrong length");
    }
    return v;
}

}  // namespace

QkdSift qkd_sift(const AlgoMetadata &metadata, const Histogram &histogram) {
    if (metadata.algorithm != Algorithm::qkd) {
        fail(ErrorKind::invalid_argument, "qkd_sift needs key-distribution metadata");
    }
    const std::size_t n = metadata.problem_size;
    const auto &h = metadata.hidden;
    const auto sender_bits = int_array(h, "sender_bits", n);
    const auto sender_bases = int_array(h, "sender_bases", n);
    const auto receiver_bases = int_array(h, "receiver_bases", n);
    const std::size_t offset = h.value("receiver_clbit_offset", std::size_t{0});

    QkdSift out;
    std::vector<int> key_bits;
    for (std::size_t i = 0; i < n; ++i) {
        if (sender_bases[i] == receiver_bases[i]) {
            out.positions.push_back(i);
            key_bits.push_back(sender_bits[i]);
        }
    }
    out.key = string_of(key_bits);
    for (const auto &[outcome, count] : histogram.counts) {
        if (outcome.size() != n + offset) {
            fail(ErrorKind::invalid_argument, "outcome width " + std::to_string(outcome.size()) +
                                                  " does not match the key layout (" +
                                                  std::to_string(n + offset) + ")");
        }
        for (auto i : out.positions) {
            const int bit = outcome[outcome.size() - 1 - (offset + i)] == '1';
            out.compared_bits += count;
            if (bit != sender_bits[i]) out.mismatches += count;
        }
    }
    if (out.compared_bits == 0) {
        out.verdict = QkdVerdict::inconclusive;
        return out;
    }
    out.mismatch_rate = static_cast<double>(out.mismatches) / static_cast<double>(out.compared_bits);
    out.verdict = out.mismatches > 0 ? QkdVerdict::detected : QkdVerdict::clean;
    return out;
}

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::pass:
            return "pass";
        case Verdict::fail:
            return "fail";
        case Verdict::inconclusive:
            return "inconclusive";
    }
    return "inconclusive";
}

namespace {

double mass(const Histogram &h, const std::function<bool(const std::string &)> &pred) {
    if (h.shots == 0) return 0.0;
    std::uint64_t hits = 0;
    for (const auto &[k, v] : h.counts) {
        if (pred(k)) hits += v;
    }
    return static_cast<double>(hits) / static_cast<double>(h.shots);
}

/// Mass on t-bit readings within 1.5 grid steps of any phase in `phases`
/// (fractions of a turn). 1.5 keeps the worst case (phase midway between
/// grid points) near 0.9 rather than on the 8/pi^2 edge.
double phase_window_mass(const Histogram &h, std::size_t t, std::initializer_list<double> phases) {
    const double space = std::ldexp(1.0, static_cast<int>(t));
    return mass(h, [&](const std::string &k) {
        const double x = static_cast<double>(from_bitstring(k));
        for (double phase : phases) {
            const double d = std::fabs(x - space * (phase - std::floor(phase)));
            if (std::min(d, space - d) < 1.5) return true;
        }
        return false;
    });
}

double mass_on_set(const Histogram &h, const nlohmann::json &strings) {
    std::set<std::string> want;
    for (const auto &s : strings) want.insert(s.get<std::string>());
    return mass(h, [&](const std::string &k) { return want.count(k) > 0; });
}

Verdict threshold(double score, double bar) {
    return score >= bar ? Verdict::pass : Verdict::fail;
}

void check_width(const Histogram &h, std::size_t width) {
    for (const auto &[k, v] : h.counts) {
        if (k.size() != width) {
            fail(ErrorKind::invalid_argument, "histogram key '" + k + "' should have " +
                                                  std::to_string(width) + " bits");
        }
    }
}

}  // namespace

Verification verify(const AlgoMetadata &meta, const Histogram &hist, const VerifyPolicy &policy) {
    Verification v;
    v.algorithm = meta.algorithm;
    const auto &hid = meta.hidden;
    const std::size_t n = meta.problem_size;
    const double strict = policy.deterministic;
    try {
        switch (meta.algorithm) {
            case Algorithm::dj: {
                check_width(hist, n);
                const double zeros = hist.frequency(std::string(n, '0'));
                const bool constant = hid.at("oracle") == "constant";
                v.score = constant ? zeros : 1.0 - zeros;
                v.verdict = threshold(v.score, strict);
                v.details = {{"oracle", hid.at("oracle")}};
                break;
            }
            case Algorithm::bv:
            case Algorithm::superdense: {
                check_width(hist, n);
                const auto want = hid.at(meta.algorithm == Algorithm::bv ? "secret" : "message")
                                      .get<std::string>();
                v.score = hist.frequency(want);
                v.verdict = threshold(v.score, strict);
                v.details = {{"expected", want}};
                break;
            }
            case Algorithm::simon: {
                check_width(hist, n);
                const auto s = hid.at("secret").get<std::string>();
                const auto sv = from_bitstring(s);
                v.score = mass(hist, [&](const std::string &k) {
                    return std::popcount(from_bitstring(k) & sv) % 2 == 0;
                });
                Gf2System sys{n, {}};
                for (const auto &[k, c] : hist.counts) sys.rows.push_back(k);
                const auto sol = sys.rows.empty() ? SimonSolution{} : simon_solve(sys);
                const bool recovered =
                    sv == 0 ? sol.status != SimonStatus::found : sol.secret == s;
                v.verdict = v.score >= strict && recovered ? Verdict::pass : Verdict::fail;
                v.details = {{"expected", s}, {"recovered", sol.secret}, {"rank", sol.rank}};
                break;
            }
            case Algorithm::qft: {
                if (!hid.contains("expected")) {
                    v.details = {{"reason", "circuit is not self-verifying"}};
                    break;
                }
                const auto want = hid.at("expected").get<std::string>();
                check_width(hist, want.size());
                v.score = hist.frequency(want);
                v.verdict = threshold(v.score, strict);
                v.details = {{"expected", want}};
                break;
            }
            case Algorithm::qpe: {
                check_width(hist, n);
                const double theta = hid.at("theta").get<double>();
                const double scaled = std::ldexp(theta, static_cast<int>(n));
                if (scaled == std::floor(scaled)) {
                    const auto want = to_bitstring(static_cast<std::uint64_t>(scaled), n);
                    v.score = hist.frequency(want);
                    v.verdict = threshold(v.score, strict);
                    v.details = {{"expected", want}};
                } else {
                    v.score = phase_window_mass(hist, n, {theta});
                    v.verdict = threshold(v.score, policy.qpe_window);
                    v.details = {{"theta_scaled", scaled}};
                }
                break;
            }
            case Algorithm::shor: {
                const auto N = hid.at("N").get<std::uint64_t>();
                const auto a = hid.at("a").get<std::uint64_t>();
                const auto t = hid.at("counting_qubits").get<std::size_t>();
                const auto r = hid.at("period").get<std::uint64_t>();
                check_width(hist, t);
                v.score = mass(hist, [&](const std::string &k) {
                    return shor_postprocess(from_bitstring(k), t, N, a).status ==
                           FactorStatus::success;
                });
                const bool usable = r % 2 == 0 && mod_pow(a, r / 2, N) != N - 1;
                v.verdict = usable ? threshold(v.score, policy.shor) : Verdict::inconclusive;
                v.details = {{"period", r}, {"usable_period", usable}};
                break;
            }
            case Algorithm::grover:
            case Algorithm::walk: {
                const auto &marked = hid.at("marked");
                if (!marked.empty()) check_width(hist, marked.at(0).get<std::string>().size());
                v.score = mass_on_set(hist, marked);
                v.verdict = threshold(
                    v.score, meta.algorithm == Algorithm::grover ? policy.grover : policy.walk);
                v.details = {{"marked", marked}};
                break;
            }
            case Algorithm::counting: {
                check_width(hist, n);
                const auto M = hid.at("solutions").get<std::uint64_t>();
                const auto search = meta.params.at("searching_qubits").get<std::size_t>();
                auto correct = [&](const std::string &k) {
                    return std::llround(counting_estimate(from_bitstring(k), n, search)) ==
                           static_cast<long long>(M);
                };
                v.score = mass(hist, correct);
                std::string top;
                std::uint64_t best = 0;
                for (const auto &[k, c] : hist.counts) {
                    if (c > best) {
                        best = c;
                        top = k;
                    }
                }
                const double estimate =
                    top.empty() ? 0.0 : counting_estimate(from_bitstring(top), n, search);
                // Grover eigenphase phi with sin^2(pi phi) = M / 2^search. Off
                // the t-bit grid the estimate can only be within the
                // first-order bound 2^search * 2 pi / 2^t.
                const double phi =
                    std::asin(std::sqrt(std::ldexp(static_cast<double>(M), -static_cast<int>(search)))) /
                    std::numbers::pi;
                const double scaled = std::ldexp(phi, static_cast<int>(n));
                const bool exact = std::fabs(scaled - std::round(scaled)) < 1e-9;
                const double bound = std::ldexp(2 * std::numbers::pi, static_cast<int>(search) - static_cast<int>(n));
                if (!top.empty() && correct(top)) {
                    v.verdict = Verdict::pass;
                } else if (!exact && !top.empty() && std::fabs(estimate - static_cast<double>(M)) <= bound) {
                    v.verdict = Verdict::inconclusive;
                } else {
                    v.verdict = Verdict::fail;
                }
                v.details = {{"solutions", M}, {"estimate", estimate}, {"mode", top}, {"exact_phase", exact}};
                break;
            }
            case Algorithm::qkd: {
                const auto sift = qkd_sift(meta, hist);
                const bool eve = meta.params.value("interception", false);
                double expected = 0.0;
                if (eve && !sift.positions.empty()) {
                    const auto sb = hid.at("sender_bases").get<std::vector<int>>();
                    const auto ab = hid.at("attacker_bases").get<std::vector<int>>();
                    std::size_t exposed = 0;
                    for (auto i : sift.positions) exposed += sb[i] != ab[i];
                    expected = 0.5 * static_cast<double>(exposed) /
                               static_cast<double>(sift.positions.size());
                }
                v.details = {{"key", sift.key},
                             {"sifted", sift.positions.size()},
                             {"mismatch_rate", sift.mismatch_rate},
                             {"expected_mismatch_rate", expected},
                             {"qkd_verdict", to_string(sift.verdict)}};
                if (sift.verdict == QkdVerdict::inconclusive) break;
                v.score = 1.0 - std::fabs(sift.mismatch_rate - expected);
                const bool expect_detect = expected > 0.0;
                const bool detected = sift.verdict == QkdVerdict::detected;
                v.verdict = expect_detect == detected ? Verdict::pass : Verdict::fail;
                break;
            }
            case Algorithm::teleport: {
                check_width(hist, n);
                v.score = hist.frequency(std::string(n, '0'));
                v.verdict = threshold(v.score, strict);
                break;
            }
            case Algorithm::qaoa:
            case Algorithm::vqe:
            case Algorithm::vqc:
                v.details = {{"reason", "no single expected outcome"}};
                break;
        }
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::invalid_argument, std::string("metadata is missing fields: ") + e.what());
    }
    return v;
}

Verification verify(const GenResult &result, const Histogram &histogram, const VerifyPolicy &policy) {
    Verification v = verify(result.metadata, histogram, policy);
    const auto algo = result.metadata.algorithm;
    const auto &c = result.circuit;
    if ((algo == Algorithm::qaoa || algo == Algorithm::vqe || algo == Algorithm::vqc) &&
        c.num_qubits() <= 16 && histogram.shots > 0) {
        // Every qubit q is measured into clbit q in these circuits.
        const auto probs = run_statevector(c).probabilities();
        double bc = 0.0;
        for (const auto &[k, count] : histogram.counts) {
            const double p = probs[from_bitstring(k)];
            bc += std::sqrt(p * static_cast<double>(count) / static_cast<double>(histogram.shots));
        }
        v.score = bc;
        v.details["score_kind"] = "bhattacharyya";
    }
    return v;
}

void to_json(nlohmann::json &j, const Verification &v) {
    j = nlohmann::json{{"algorithm", algorithm_id(v.algorithm)},
                       {"verdict", to_string(v.verdict)},
                       {"score", v.score},
                       {"details", v.details}};
}

}  // namespace qgen
