// Copyright 2026 The hemine Authors
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

#include "hemine/he_metrics.h"

#include <array>
#include <cmath>
#include <map>
#include <string>

#include "hemine/error.h"

namespace hemine {
namespace {

constexpr int hm(int h, int m) { return h * 60 + m; }

constexpr std::array<AlertnessBin, 20> kAlertness = {{
    {hm(0, 0), hm(5, 30), 0.0},
    {hm(5, 30), hm(6, 0), 5.0},
    {hm(6, 0), hm(7, 30), 23.5},
    {hm(7, 30), hm(8, 30), 60.0},
    {hm(8, 30), hm(9, 30), 82.0},
    {hm(9, 30), hm(10, 30), 86.5},
    {hm(10, 30), hm(11, 30), 77.3},
    {hm(11, 30), hm(12, 30), 66.0},
    {hm(12, 30), hm(13, 30), 76.5},
    {hm(13, 30), hm(14, 30), 88.5},
    {hm(14, 30), hm(15, 30), 77.3},
    {hm(15, 30), hm(16, 30), 57.3},
    {hm(16, 30), hm(17, 30), 44.2},
    {hm(17, 30), hm(18, 30), 48.2},
    {hm(18, 30), hm(19, 30), 68.0},
    {hm(19, 30), hm(20, 30), 82.0},
    {hm(20, 30), hm(21, 30), 80.9},
    {hm(21, 30), hm(22, 30), 99.2},
    {hm(22, 30), hm(23, 30), 64.5},
    {hm(23, 30), hm(24, 0), 17.3},
}};

}  // namespace

void validate(const ForgettingCurveParams& params) {
  if (!(std::isfinite(params.exponent) && params.exponent > 0) ||
      !(std::isfinite(params.scale) && params.scale > 0)) {
    throw UsageError("forgetting curve parameters must be positive");
  }
}

double savings(double minutes, const ForgettingCurveParams& params) {
  if (!(minutes >= 1.0)) {
    throw DomainError("savings needs t >= 1 minute, got " +
                      std::to_string(minutes));
  }
  const double log_t = params.log_base == LogBase::kTen ? std::log10(minutes)
                                                        : std::log(minutes);
  // 100k / (L^c + k) rewritten so that t = 1 yields exactly 100.
  return 100.0 / (1.0 + std::pow(log_t, params.exponent) / params.scale);
}

double memory_decay_event(const std::optional<Timestamp>& prev_touch,
                          const Timestamp& now,
                          const ForgettingCurveParams& params,
                          DecayDiagnostics* diagnostics) {
  if (!prev_touch) return 0.0;
  const std::int64_t elapsed = now.unix_seconds - prev_touch->unix_seconds;
  if (elapsed <= 0 && diagnostics != nullptr) ++diagnostics->clock_skew;
  const std::int64_t minutes = std::max<std::int64_t>(1, elapsed / 60);
  return savings(static_cast<double>(minutes), params);
}

std::span<const AlertnessBin> alertness_table() { return kAlertness; }

double alertness_at(int seconds_of_day) {
  const int minute = seconds_of_day / 60;
  for (const AlertnessBin& bin : kAlertness) {
    if (minute >= bin.start_minute && minute < bin.end_minute) return bin.score;
  }
  throw DomainError("time of day out of range: " +
                    std::to_string(seconds_of_day));
}

HEMetrics aggregate_he(std::span<const double> decay_scores,
                       std::span<const double> alertness_scores) {
  HEMetrics m;
  for (double d : decay_scores) m.e1_memory_decay += d;
  for (double a : alertness_scores) m.e2_alertness += a;
  return m;
}

HEMetrics method_he_metrics(std::span<const ChangeEvent> events,
                            const ForgettingCurveParams& params,
                            DecayDiagnostics* diagnostics) {
  std::vector<double> decay;
  std::vector<double> alertness;
  decay.reserve(events.size());
  alertness.reserve(events.size());
  std::map<std::string, Timestamp> last_touch;
  for (const ChangeEvent& e : events) {
    const auto it = last_touch.find(e.author.key);
    const std::optional<Timestamp> prev =
        it == last_touch.end() ? std::nullopt
                               : std::optional<Timestamp>(it->second);
    decay.push_back(memory_decay_event(prev, e.authored_at, params, diagnostics));
    alertness.push_back(alertness_event(e.authored_at));
    last_touch[e.author.key] = e.authored_at;
  }
  return aggregate_he(decay, alertness);
}

}  // namespace hemine
