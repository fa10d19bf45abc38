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

#include "catseg/eval.h"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <set>
#include <tuple>

#include "catseg/error.h"
#include "catseg/student_t.h"

namespace catseg {
namespace {

std::string Fixed(double value, int digits = 4) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

void CheckAligned(const std::vector<std::vector<std::string>> &forms,
                  const std::vector<Sentence> &sentences,
                  std::string_view what) {
  if (forms.size() != sentences.size()) {
    throw AlignmentError(std::string(what) + ": " +
                         std::to_string(forms.size()) + " vs " +
                         std::to_string(sentences.size()) + " sentences");
  }
  for (size_t s = 0; s < forms.size(); ++s) {
    const std::vector<Token> &tokens = sentences[s].tokens;
    bool same = forms[s].size() == tokens.size();
    for (size_t i = 0; same && i < tokens.size(); ++i) {
      same = forms[s][i] == tokens[i].form;
    }
    if (!same) {
      throw AlignmentError(std::string(what) + ": sentence " +
                           std::to_string(s) + " differs");
    }
  }
}

void CheckAligned(const GoldAnnotation &a, const GoldAnnotation &b) {
  if (a.forms != b.forms) {
    throw AlignmentError("annotations cover different tokens");
  }
}

}  // namespace

std::string_view EvalModeName(EvalMode mode) {
  switch (mode) {
    case EvalMode::kIntraBoundary:
      return "intra";
    case EvalMode::kAllBoundary:
      return "all";
    case EvalMode::kSegmentExact:
      return "segment";
  }
  return "";
}

EvalMode ParseEvalMode(std::string_view name) {
  for (EvalMode mode : {EvalMode::kIntraBoundary, EvalMode::kAllBoundary,
                        EvalMode::kSegmentExact}) {
    if (EvalModeName(mode) == name) return mode;
  }
  throw ConfigError("unknown evaluation mode '" + std::string(name) + "'");
}

EvalReport MakeEvalReport(EvalMode mode, int true_positives, int system_count,
                          int gold_count) {
  EvalReport report;
  report.mode = mode;
  report.true_positives = true_positives;
  report.system_count = system_count;
  report.gold_count = gold_count;
  report.precision =
      system_count == 0 ? 1.0 : static_cast<double>(true_positives) / system_count;
  report.recall =
      gold_count == 0 ? 1.0 : static_cast<double>(true_positives) / gold_count;
  report.f_score = F1(report.precision, report.recall);
  return report;
}

EvalReport CombineReports(const std::vector<EvalReport> &reports) {
  if (reports.empty()) return MakeEvalReport(EvalMode::kIntraBoundary, 0, 0, 0);
  int tp = 0, system = 0, gold = 0;
  for (const EvalReport &r : reports) {
    if (r.mode != reports.front().mode) {
      throw ValidationError("cannot combine reports of different modes");
    }
    tp += r.true_positives;
    system += r.system_count;
    gold += r.gold_count;
  }
  return MakeEvalReport(reports.front().mode, tp, system, gold);
}

EvalReport BoundaryPrf(const SegmentedDocument &system,
                       const GoldAnnotation &gold, EvalMode mode,
                       EvalOptions options) {
  CheckAligned(gold.forms, system.sentences(), "system and gold");
  int tp = 0, system_count = 0, gold_count = 0;
  const int num_sentences = system.num_sentences();
  if (mode == EvalMode::kSegmentExact) {
    for (int s = 0; s < num_sentences; ++s) {
      const int length = system.sentences()[s].size();
      const std::vector<Span> gold_spans =
          SpansBetween(gold.boundaries.gaps(s), length);
      const std::set<Span> gold_set(gold_spans.begin(), gold_spans.end());
      for (const Span &span : system.Segments(s)) {
        const bool whole = span.begin == 0 && span.end == length;
        if (gold_set.count(span) ||
            (whole && options.sentences_count_as_correct)) {
          ++tp;
        }
        ++system_count;
      }
      gold_count += static_cast<int>(gold_spans.size());
    }
    return MakeEvalReport(mode, tp, system_count, gold_count);
  }
  for (int s = 0; s < num_sentences; ++s) {
    const std::set<int> &sys = system.boundaries().gaps(s);
    const std::set<int> &ref = gold.boundaries.gaps(s);
    for (int g : sys) tp += static_cast<int>(ref.count(g));
    system_count += static_cast<int>(sys.size());
    gold_count += static_cast<int>(ref.size());
  }
  if (mode == EvalMode::kAllBoundary && num_sentences > 1) {
    tp += num_sentences - 1;
    system_count += num_sentences - 1;
    gold_count += num_sentences - 1;
  }
  return MakeEvalReport(mode, tp, system_count, gold_count);
}

double F1(double precision, double recall) {
  if (!(precision >= 0.0 && precision <= 1.0 && recall >= 0.0 &&
        recall <= 1.0)) {
    throw ValidationError("precision and recall must lie in [0, 1]");
  }
  if (precision + recall == 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

std::string_view UnitModeName(UnitMode mode) {
  return mode == UnitMode::kWord ? "word" : "clause";
}

UnitMode ParseUnitMode(std::string_view name) {
  if (name == "word") return UnitMode::kWord;
  if (name == "clause") return UnitMode::kClause;
  throw ConfigError("unknown unit '" + std::string(name) + "'");
}

Confusion ConfusionFromLabels(const std::vector<bool> &a,
                              const std::vector<bool> &b) {
  if (a.size() != b.size()) {
    throw ValidationError("label sequences differ in length");
  }
  Confusion c;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] && b[i]) {
      ++c.both;
    } else if (a[i]) {
      ++c.only_a;
    } else if (b[i]) {
      ++c.only_b;
    } else {
      ++c.neither;
    }
  }
  return c;
}

double ObservedAgreement(const Confusion &c) {
  if (c.total() == 0) throw ValidationError("no items to compare");
  return static_cast<double>(c.both + c.neither) / c.total();
}

double ChanceAgreement(const Confusion &c) {
  if (c.total() == 0) throw ValidationError("no items to compare");
  const double n = c.total();
  const double a_yes = (c.both + c.only_a) / n;
  const double b_yes = (c.both + c.only_b) / n;
  return a_yes * b_yes + (1.0 - a_yes) * (1.0 - b_yes);
}

double KappaFromConfusion(const Confusion &c) {
  const double observed = ObservedAgreement(c);
  const double chance = ChanceAgreement(c);
  if (chance >= 1.0) {
    if (c.only_a == 0 && c.only_b == 0) return 1.0;
    throw ValidationError("kappa undefined: chance agreement is 1");
  }
  return (observed - chance) / (1.0 - chance);
}

AgreementReport RawAgreement(int agreed, int disagreed) {
  if (agreed < 0 || disagreed < 0) {
    throw ValidationError("agreement counts must be non-negative");
  }
  AgreementReport report;
  report.agreed = agreed;
  report.disagreed = disagreed;
  report.raw_agreement =
      agreed + disagreed == 0
          ? 1.0
          : static_cast<double>(agreed) / (agreed + disagreed);
  return report;
}

AgreementReport RawAgreement(const GoldAnnotation &a, const GoldAnnotation &b) {
  CheckAligned(a, b);
  int agreed = 0, disagreed = 0;
  for (int s = 0; s < a.boundaries.num_sentences(); ++s) {
    const std::set<int> &ga = a.boundaries.gaps(s);
    const std::set<int> &gb = b.boundaries.gaps(s);
    for (int g : ga) (gb.count(g) ? agreed : disagreed) += 1;
    for (int g : gb) {
      if (!ga.count(g)) ++disagreed;
    }
  }
  return RawAgreement(agreed, disagreed);
}

AgreementReport CohenKappa(const GoldAnnotation &a, const GoldAnnotation &b,
                           UnitMode mode) {
  CheckAligned(a, b);
  std::vector<bool> labels_a, labels_b;
  for (int s = 0; s < a.boundaries.num_sentences(); ++s) {
    const std::set<int> &ga = a.boundaries.gaps(s);
    const std::set<int> &gb = b.boundaries.gaps(s);
    if (mode == UnitMode::kWord) {
      for (int g = 1; g < a.boundaries.sentence_length(s); ++g) {
        labels_a.push_back(ga.count(g) > 0);
        labels_b.push_back(gb.count(g) > 0);
      }
    } else {
      std::set<int> proposed = ga;
      proposed.insert(gb.begin(), gb.end());
      for (int g : proposed) {
        labels_a.push_back(ga.count(g) > 0);
        labels_b.push_back(gb.count(g) > 0);
      }
      labels_a.push_back(true);
      labels_b.push_back(true);
    }
  }
  const Confusion confusion = ConfusionFromLabels(labels_a, labels_b);

  AgreementReport report = RawAgreement(confusion.both + confusion.neither,
                                        confusion.only_a + confusion.only_b);
  report.confusion = confusion;
  report.unit_mode = mode;
  report.kappa = KappaFromConfusion(confusion);
  return report;
}

SignificanceReport PairedFoldTTest(std::span<const double> a,
                                   std::span<const double> b, double alpha) {
  if (a.size() != b.size()) {
    throw ValidationError("score lists differ in length");
  }
  if (a.size() < 2) throw ValidationError("need at least two folds");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ValidationError("alpha must lie in (0, 1)");
  }
  const size_t n = a.size();
  std::vector<double> diffs(n);
  for (size_t i = 0; i < n; ++i) diffs[i] = a[i] - b[i];
  const double mean = std::accumulate(diffs.begin(), diffs.end(), 0.0) / n;
  double sum_sq = 0.0;
  for (double d : diffs) sum_sq += (d - mean) * (d - mean);
  const double sd = std::sqrt(sum_sq / (n - 1));

  SignificanceReport report;
  report.mean_difference = mean;
  report.degrees_of_freedom = static_cast<int>(n) - 1;
  report.alpha = alpha;
  const double scale = std::max(1.0, std::fabs(mean));
  if (sd <= 1e-12 * scale) {
    if (std::fabs(mean) <= 1e-12) {
      report.t_statistic = 0.0;
      report.p_value = 1.0;
    } else {
      report.t_statistic = mean > 0 ? std::numeric_limits<double>::infinity()
                                    : -std::numeric_limits<double>::infinity();
      report.p_value = 0.0;
    }
  } else {
    report.t_statistic = mean / (sd / std::sqrt(static_cast<double>(n)));
    report.p_value =
        StudentTTwoTailedP(report.t_statistic, report.degrees_of_freedom);
  }
  report.significant = report.p_value < alpha;
  return report;
}

std::string FormatEvalTable(
    const std::vector<std::pair<std::string, EvalReport>> &rows) {
  char line[256];
  std::string out;
  std::snprintf(line, sizeof(line), "%-16s %-8s %9s %9s %9s %6s %6s %6s\n",
                "system", "mode", "F-score", "precision", "recall", "tp",
                "sys", "gold");
  out += line;
  for (const auto &[name, r] : rows) {
    std::snprintf(line, sizeof(line),
                  "%-16s %-8s %9s %9s %9s %6d %6d %6d\n", name.c_str(),
                  std::string(EvalModeName(r.mode)).c_str(),
                  Fixed(r.f_score).c_str(), Fixed(r.precision).c_str(),
                  Fixed(r.recall).c_str(), r.true_positives, r.system_count,
                  r.gold_count);
    out += line;
  }
  return out;
}

std::string FormatEvalMetrics(const EvalReport &r) {
  std::string out;
  out += "mode\t" + std::string(EvalModeName(r.mode)) + '\n';
  out += "precision\t" + Fixed(r.precision, 6) + '\n';
  out += "recall\t" + Fixed(r.recall, 6) + '\n';
  out += "f_score\t" + Fixed(r.f_score, 6) + '\n';
  out += "true_positives\t" + std::to_string(r.true_positives) + '\n';
  out += "system_count\t" + std::to_string(r.system_count) + '\n';
  out += "gold_count\t" + std::to_string(r.gold_count) + '\n';
  return out;
}

std::string FormatAgreement(const AgreementReport &r, bool tsv) {
  std::string out;
  if (tsv) {
    if (r.unit_mode) out += "unit\t" + std::string(UnitModeName(*r.unit_mode)) + '\n';
    out += "agreed\t" + std::to_string(r.agreed) + '\n';
    out += "disagreed\t" + std::to_string(r.disagreed) + '\n';
    out += "raw_agreement\t" + Fixed(r.raw_agreement, 6) + '\n';
    if (r.kappa) out += "kappa\t" + Fixed(*r.kappa, 6) + '\n';
    return out;
  }
  if (r.unit_mode) out += "unit:           " + std::string(UnitModeName(*r.unit_mode)) + '\n';
  out += "agreed:         " + std::to_string(r.agreed) + '\n';
  out += "disagreed:      " + std::to_string(r.disagreed) + '\n';
  out += "raw agreement:  " + Fixed(r.raw_agreement) + '\n';
  if (r.kappa) out += "kappa:          " + Fixed(*r.kappa) + '\n';
  return out;
}

std::string FormatSignificance(const SignificanceReport &r, bool tsv) {
  std::string out;
  if (tsv) {
    out += "mean_difference\t" + Fixed(r.mean_difference, 6) + '\n';
    out += "t_statistic\t" + Fixed(r.t_statistic, 6) + '\n';
    out += "degrees_of_freedom\t" + std::to_string(r.degrees_of_freedom) + '\n';
    out += "p_value\t" + Fixed(r.p_value, 6) + '\n';
    out += "alpha\t" + Fixed(r.alpha, 6) + '\n';
    out += std::string("significant\t") + (r.significant ? "yes" : "no") + '\n';
    return out;
  }
  out += "mean difference: " + Fixed(r.mean_difference) + '\n';
  out += "t:               " + Fixed(r.t_statistic) + '\n';
  out += "df:              " + std::to_string(r.degrees_of_freedom) + '\n';
  out += "p (two-tailed):  " + Fixed(r.p_value) + '\n';
  out += "significant:     " + std::string(r.significant ? "yes" : "no") +
         " at alpha " + Fixed(r.alpha, 2) + '\n';
  return out;
}

}  // namespace catseg
