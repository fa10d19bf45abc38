// Copyright 2026 The catseg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CATSEG_EVAL_H_
#define CATSEG_EVAL_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catseg/document.h"
#include "catseg/gold.h"

namespace catseg {

// What counts as one item when scoring a segmentation.
enum class EvalMode {
  // Intra-sentence boundaries only.
  kIntraBoundary,
  // Intra-sentence boundaries plus every non-initial sentence start, which
  // both sides share.
  kAllBoundary,
  // Whole segment spans; a true positive is a span present on both sides.
  kSegmentExact,
};

std::string_view EvalModeName(EvalMode mode);
// "intra", "all" or "segment"; throws ConfigError otherwise.
EvalMode ParseEvalMode(std::string_view name);

struct EvalOptions {
  // Segment-exact mode only: a system segment covering a whole sentence is
  // counted as correct whatever the gold says.
  bool sentences_count_as_correct = false;
};

struct EvalReport {
  EvalMode mode = EvalMode::kIntraBoundary;
  int true_positives = 0;
  int system_count = 0;
  int gold_count = 0;
  double precision = 1.0;
  double recall = 1.0;
  double f_score = 1.0;
};

// Fills in P, R and F from counts. P is 1 when nothing was proposed, R is
// 1 when there was nothing to find.
EvalReport MakeEvalReport(EvalMode mode, int true_positives, int system_count,
                          int gold_count);

// Sums counts (never averages ratios). All reports must share a mode.
EvalReport CombineReports(const std::vector<EvalReport> &reports);

// Throws AlignmentError when the two sides hold different tokens.
EvalReport BoundaryPrf(const SegmentedDocument &system,
                       const GoldAnnotation &gold,
                       EvalMode mode = EvalMode::kIntraBoundary,
                       EvalOptions options = {});

// Harmonic mean, 0 when p + r = 0. Throws ValidationError outside [0, 1].
double F1(double precision, double recall);

enum class UnitMode { kWord, kClause };

std::string_view UnitModeName(UnitMode mode);
UnitMode ParseUnitMode(std::string_view name);

// 2x2 table of two annotators' boundary / non-boundary labels.
struct Confusion {
  int both = 0;     // boundary for both
  int only_a = 0;   // boundary for a only
  int only_b = 0;   // boundary for b only
  int neither = 0;  // boundary for neither

  int total() const { return both + only_a + only_b + neither; }
};

Confusion ConfusionFromLabels(const std::vector<bool> &a,
                              const std::vector<bool> &b);
double ObservedAgreement(const Confusion &confusion);
double ChanceAgreement(const Confusion &confusion);
// (p_o - p_e) / (1 - p_e). When p_e = 1 the labels are constant: 1.0 if
// they agree, ValidationError otherwise. ValidationError on an empty table.
double KappaFromConfusion(const Confusion &confusion);

struct AgreementReport {
  int agreed = 0;
  int disagreed = 0;
  double raw_agreement = 1.0;
  std::optional<double> kappa;
  std::optional<UnitMode> unit_mode;
  Confusion confusion;
};

// raw_agreement = agreed / (agreed + disagreed), 1 when both are 0.
AgreementReport RawAgreement(int agreed, int disagreed);
// Over boundaries proposed by at least one annotator: agreed when both
// propose it, disagreed when only one does. Throws AlignmentError.
AgreementReport RawAgreement(const GoldAnnotation &a, const GoldAnnotation &b);

// Word units: every intra-sentence gap. Clause units: gaps proposed by at
// least one annotator plus each sentence-final gap. Throws AlignmentError.
AgreementReport CohenKappa(const GoldAnnotation &a, const GoldAnnotation &b,
                           UnitMode mode);

struct SignificanceReport {
  double mean_difference = 0.0;
  double t_statistic = 0.0;
  int degrees_of_freedom = 0;
  double p_value = 1.0;
  double alpha = 0.05;
  bool significant = false;
};

// Paired two-tailed t-test on per-fold differences a[i] - b[i]. Zero
// variance gives t = 0, p = 1 for a zero mean and t = +-inf, p = 0
// otherwise. Throws ValidationError on a length mismatch or fewer than two
// folds.
SignificanceReport PairedFoldTTest(std::span<const double> a,
                                   std::span<const double> b,
                                   double alpha = 0.05);

// Human-readable table, one row per named report.
std::string FormatEvalTable(
    const std::vector<std::pair<std::string, EvalReport>> &rows);
// "metric<TAB>value" lines.
std::string FormatEvalMetrics(const EvalReport &report);
std::string FormatAgreement(const AgreementReport &report, bool tsv);
std::string FormatSignificance(const SignificanceReport &report, bool tsv);

}  // namespace catseg

#endif  // CATSEG_EVAL_H_
