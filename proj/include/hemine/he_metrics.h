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

// Human-error metrics: memory decay from the Ebbinghaus forgetting curve and
// time-of-day alertness.

#ifndef HEMINE_HE_METRICS_H_
#define HEMINE_HE_METRICS_H_

#include <optional>
#include <span>

#include "hemine/change_attribution.h"
#include "hemine/timestamp.h"

namespace hemine {

enum class LogBase { kTen, kE };

// b = 100 k / ((log t)^c + k), t in minutes.
struct ForgettingCurveParams {
  double exponent = 1.25;  // c
  double scale = 1.84;     // k
  LogBase log_base = LogBase::kTen;
};

// Throws UsageError unless exponent and scale are finite and positive.
void validate(const ForgettingCurveParams& params);

// Retention percentage in (0, 100] for t >= 1 minute. Throws DomainError for
// t < 1 or NaN.
double savings(double minutes, const ForgettingCurveParams& params = {});

struct DecayDiagnostics {
  int clock_skew = 0;  // previous touch not strictly before the current one
};

// 0 for an author's first touch of a method; otherwise savings() of the whole
// minutes since that author's previous touch, clamped to at least 1.
double memory_decay_event(const std::optional<Timestamp>& prev_touch,
                          const Timestamp& now,
                          const ForgettingCurveParams& params,
                          DecayDiagnostics* diagnostics = nullptr);

// Half-open [start, end) in minutes since local midnight.
struct AlertnessBin {
  int start_minute;
  int end_minute;
  double score;
};

std::span<const AlertnessBin> alertness_table();

// Score of the bin containing `seconds_of_day` (local clock).
double alertness_at(int seconds_of_day);

// Alertness for a commit time, read on the author's local clock.
inline double alertness_event(const Timestamp& authored_at) {
  return alertness_at(authored_at.local_seconds_of_day());
}

struct HEMetrics {
  double e1_memory_decay = 0.0;
  double e2_alertness = 0.0;

  friend bool operator==(const HEMetrics&, const HEMetrics&) = default;
};

HEMetrics aggregate_he(std::span<const double> decay_scores,
                       std::span<const double> alertness_scores);

// Per-event scores for one method's events, which must be sorted oldest
// first. Memory decay looks only at the same author's earlier events.
HEMetrics method_he_metrics(std::span<const ChangeEvent> events,
                            const ForgettingCurveParams& params,
                            DecayDiagnostics* diagnostics = nullptr);

}  // namespace hemine

#endif  // HEMINE_HE_METRICS_H_
