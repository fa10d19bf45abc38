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

#include "cli.h"

#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "catseg/baselines.h"
#include "catseg/document.h"
#include "catseg/error.h"
#include "catseg/es2cat.h"
#include "catseg/eval.h"
#include "catseg/fixtures.h"
#include "catseg/gold.h"
#include "catseg/lexicon.h"
#include "catseg/rules.h"
#include "catseg/segmenter.h"
#include "catseg/text.h"
#include "catseg/vertical.h"

namespace catseg {
namespace cli {
namespace {

// Raised for option combinations CLI11 cannot express.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string &what) : Error(what) {}
};

struct Options {
  std::vector<std::string> inputs;
  std::string output;
  std::string lexicon;
  std::string rules;
  std::string map;
  std::string format = "brackets";
  std::string trace;
  int which = 0;
  std::vector<std::string> system, gold, tokens;
  std::string mode = "intra";
  bool sentences_count_as_correct = false;
  bool tsv = false;
  std::string fold_scores;
  std::vector<std::string> a, b;
  std::string unit = "word";
  int agreed = -1;
  int disagreed = -1;
  std::string scores_a, scores_b;
  double alpha = 0.05;
  std::string out_lexicon, out_rules, report;
  std::string from = "es", to = "ca";
  std::string data_dir;
};

void WriteFile(const std::string &path, const std::string &content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot write " + path);
  file << content;
  if (!file) throw ParseError("write failed for " + path);
}

void Emit(const Options &options, std::ostream &out, const std::string &text) {
  if (options.output.empty()) {
    out << text;
  } else {
    WriteFile(options.output, text);
  }
}

SegmentFormat ParseFormat(const std::string &name) {
  return name == "standoff" ? SegmentFormat::kStandoff
                            : SegmentFormat::kBrackets;
}

// Runs `fn` on each input concurrently and joins results in input order.
template <typename Fn>
std::string MapInputsInOrder(const std::vector<std::string> &inputs, Fn fn) {
  std::vector<std::future<std::string>> jobs;
  jobs.reserve(inputs.size());
  for (const std::string &path : inputs) {
    jobs.push_back(std::async(std::launch::async, fn, path));
  }
  std::string out;
  for (auto &job : jobs) out += job.get();
  return out;
}

std::vector<double> ReadScores(const std::string &path) {
  std::vector<double> scores;
  for (const std::string &piece : SplitWhitespace(ReadFile(path))) {
    size_t consumed = 0;
    double value = 0.0;
    try {
      value = std::stod(piece, &consumed);
    } catch (const std::exception &) {
      consumed = 0;
    }
    if (consumed != piece.size()) {
      throw ParseError(path + ": bad score '" + piece + "'");
    }
    scores.push_back(value);
  }
  return scores;
}

void RequireSameCount(const std::vector<std::string> &x,
                      const std::vector<std::string> &y, const char *what) {
  if (x.size() != y.size()) {
    throw UsageError(std::string("need one ") + what + " per --tokens file");
  }
}

int DoSegment(const Options &o, std::ostream &out, std::ostream &err) {
  const Lexicon lexicon = LoadLexicon(o.lexicon);
  const RuleSet rules = LoadRules(o.rules);
  const SegmentFormat format = ParseFormat(o.format);
  std::vector<std::string> traces(o.inputs.size());
  std::vector<std::future<std::string>> jobs;
  for (size_t i = 0; i < o.inputs.size(); ++i) {
    jobs.push_back(std::async(std::launch::async, [&, i] {
      const VerticalDocument doc = ParseVertical(ReadFile(o.inputs[i]));
      SegmentationResult result = SegmentTraced(doc, lexicon, rules);
      for (const Firing &f : result.trace) {
        traces[i] += o.inputs[i] + '\t' + std::to_string(f.sentence) + '\t' +
                     std::to_string(f.gap) + '\t' + f.rule + '\t' +
                     std::to_string(f.pass) + '\n';
      }
      return SerializeSegments(result.document, format);
    }));
  }
  std::string text;
  for (auto &job : jobs) text += job.get();
  Emit(o, out, text);
  if (!o.trace.empty()) {
    std::string all;
    for (const std::string &t : traces) all += t;
    WriteFile(o.trace, all);
  }
  (void)err;
  return kOk;
}

int DoBaseline(const Options &o, std::ostream &out) {
  const SegmentFormat format = ParseFormat(o.format);
  const int which = o.which;
  Emit(o, out, MapInputsInOrder(o.inputs, [&](const std::string &path) {
         const VerticalDocument doc = ParseVertical(ReadFile(path));
         return SerializeSegments(
             which == 1 ? CoordinationBaseline(doc) : SentenceBaseline(doc),
             format);
       }));
  return kOk;
}

int DoEval(const Options &o, std::ostream &out) {
  RequireSameCount(o.system, o.tokens, "--system");
  RequireSameCount(o.gold, o.tokens, "--gold");
  const EvalMode mode = ParseEvalMode(o.mode);
  const EvalOptions options{o.sentences_count_as_correct};
  std::vector<EvalReport> reports;
  for (size_t i = 0; i < o.tokens.size(); ++i) {
    const VerticalDocument doc = ParseVertical(ReadFile(o.tokens[i]));
    const GoldAnnotation system = ParseGold(ReadFile(o.system[i]), doc);
    const GoldAnnotation gold = ParseGold(ReadFile(o.gold[i]), doc);
    reports.push_back(BoundaryPrf(ToSegmentedDocument(doc, system), gold,
                                  mode, options));
  }
  if (!o.fold_scores.empty()) {
    std::string scores;
    char buffer[32];
    for (const EvalReport &r : reports) {
      std::snprintf(buffer, sizeof(buffer), "%.6f\n", r.f_score);
      scores += buffer;
    }
    WriteFile(o.fold_scores, scores);
  }
  const EvalReport total = CombineReports(reports);
  Emit(o, out,
       o.tsv ? FormatEvalMetrics(total) : FormatEvalTable({{"system", total}}));
  return kOk;
}

std::vector<std::pair<GoldAnnotation, GoldAnnotation>> LoadAnnotationPairs(
    const Options &o) {
  RequireSameCount(o.a, o.tokens, "--a");
  RequireSameCount(o.b, o.tokens, "--b");
  std::vector<std::pair<GoldAnnotation, GoldAnnotation>> pairs;
  for (size_t i = 0; i < o.tokens.size(); ++i) {
    const VerticalDocument doc = ParseVertical(ReadFile(o.tokens[i]));
    pairs.emplace_back(ParseGold(ReadFile(o.a[i]), doc),
                       ParseGold(ReadFile(o.b[i]), doc));
  }
  return pairs;
}

// Concatenates several aligned annotation pairs into one pair.
std::pair<GoldAnnotation, GoldAnnotation> MergePairs(
    const std::vector<std::pair<GoldAnnotation, GoldAnnotation>> &pairs) {
  std::vector<int> lengths;
  for (const auto &[a, b] : pairs) {
    const auto &l = a.boundaries.sentence_lengths();
    lengths.insert(lengths.end(), l.begin(), l.end());
  }
  GoldAnnotation a{{}, {}, BoundarySet(lengths)};
  GoldAnnotation b{{}, {}, BoundarySet(lengths)};
  int offset = 0;
  for (const auto &[pa, pb] : pairs) {
    for (int s = 0; s < pa.boundaries.num_sentences(); ++s) {
      for (int g : pa.boundaries.gaps(s)) a.boundaries.Insert(offset + s, g);
      for (int g : pb.boundaries.gaps(s)) b.boundaries.Insert(offset + s, g);
    }
    a.forms.insert(a.forms.end(), pa.forms.begin(), pa.forms.end());
    b.forms.insert(b.forms.end(), pb.forms.begin(), pb.forms.end());
    a.segments.insert(a.segments.end(), pa.segments.begin(), pa.segments.end());
    b.segments.insert(b.segments.end(), pb.segments.begin(), pb.segments.end());
    offset += pa.boundaries.num_sentences();
  }
  return {std::move(a), std::move(b)};
}

int DoKappa(const Options &o, std::ostream &out) {
  const UnitMode unit = ParseUnitMode(o.unit);
  auto [a, b] = MergePairs(LoadAnnotationPairs(o));
  Emit(o, out, FormatAgreement(CohenKappa(a, b, unit), o.tsv));
  return kOk;
}

int DoAgree(const Options &o, std::ostream &out) {
  AgreementReport report;
  if (o.agreed >= 0 || o.disagreed >= 0) {
    if (o.agreed < 0 || o.disagreed < 0 || !o.tokens.empty()) {
      throw UsageError("give either --agreed and --disagreed, or annotations");
    }
    report = RawAgreement(o.agreed, o.disagreed);
  } else {
    if (o.tokens.empty()) throw UsageError("--tokens, --a and --b are required");
    auto [a, b] = MergePairs(LoadAnnotationPairs(o));
    report = RawAgreement(a, b);
  }
  Emit(o, out, FormatAgreement(report, o.tsv));
  return kOk;
}

int DoTTest(const Options &o, std::ostream &out) {
  const std::vector<double> a = ReadScores(o.scores_a);
  const std::vector<double> b = ReadScores(o.scores_b);
  Emit(o, out, FormatSignificance(PairedFoldTTest(a, b, o.alpha), o.tsv));
  return kOk;
}

int DoTranslate(const Options &o, std::ostream &out) {
  if (o.lexicon.empty() && o.rules.empty()) {
    throw UsageError("translate needs --lexicon and/or --rules");
  }
  const TranslationMap map = LoadTranslationMap(o.map);
  const PortDirection direction{ParseLanguage(o.from), ParseLanguage(o.to)};
  std::string report;
  if (!o.lexicon.empty()) {
    auto [lexicon, port] = TranslateLexicon(LoadLexicon(o.lexicon), map, direction);
    report += "# lexicon\n" + FormatPortReport(port);
    const std::string text = SerializeLexicon(lexicon);
    if (o.out_lexicon.empty()) {
      out << text;
    } else {
      WriteFile(o.out_lexicon, text);
    }
  }
  if (!o.rules.empty()) {
    auto [rules, port] = TranslateRuleSet(LoadRules(o.rules), map, direction);
    report += "# rules\n" + FormatPortReport(port);
    const std::string text = SerializeRules(rules);
    if (o.out_rules.empty()) {
      out << text;
    } else {
      WriteFile(o.out_rules, text);
    }
  }
  if (o.report.empty()) {
    out << report;
  } else {
    WriteFile(o.report, report);
  }
  return kOk;
}

int DoStats(const Options &o, std::ostream &out) {
  RequireSameCount(o.gold, o.inputs, "--gold");
  std::vector<SegmentedDocument> corpus;
  for (size_t i = 0; i < o.inputs.size(); ++i) {
    const VerticalDocument doc = ParseVertical(ReadFile(o.inputs[i]));
    corpus.push_back(
        ToSegmentedDocument(doc, ParseGold(ReadFile(o.gold[i]), doc)));
  }
  const CorpusStats stats = ComputeCorpusStats(corpus);
  std::string text;
  char line[160];
  auto row = [&](const char *name, const CountStats &c) {
    if (o.tsv) {
      std::snprintf(line, sizeof(line), "%s_total\t%d\n%s_max\t%d\n%s_min\t%d\n%s_average\t%.2f\n",
                    name, c.total, name, c.max_per_text, name, c.min_per_text,
                    name, c.average);
    } else {
      std::snprintf(line, sizeof(line), "%-10s %8d %8d %8d %9.2f\n", name,
                    c.total, c.max_per_text, c.min_per_text, c.average);
    }
    text += line;
  };
  if (o.tsv) {
    text += "texts\t" + std::to_string(stats.num_texts) + '\n';
  } else {
    std::snprintf(line, sizeof(line), "%-10s %8s %8s %8s %9s\n", "", "total",
                  "longest", "shortest", "average");
    text += line;
  }
  row("words", stats.words);
  row("tokens", stats.tokens);
  row("sentences", stats.sentences);
  row("segments", stats.segments);
  Emit(o, out, text);
  return kOk;
}

int DoValidate(const Options &o, std::ostream &out, std::ostream &err) {
  const FixtureReport report = ValidateFixtures(o.data_dir);
  Emit(o, out, report.Format());
  if (!report.ok()) {
    err << "fixture validation failed\n";
    return kValidationError;
  }
  return kOk;
}

}  // namespace

int Run(int argc, const char *const *argv, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Rule-based discourse segmentation for Catalan", "catseg"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> formats = {"brackets", "standoff"};

  CLI::App *segment = app.add_subcommand("segment", "Segment tagged text into EDUs");
  segment->add_option("--lexicon", o.lexicon, "Marker lexicon (TSV)")->required();
  segment->add_option("--rules", o.rules, "Rule file")->required();
  segment->add_option("--input", o.inputs, "Tagged .vrt file(s)")->required();
  segment->add_option("--format", o.format)->check(CLI::IsMember(formats));
  segment->add_option("--output", o.output, "Write results here");
  segment->add_option("--trace", o.trace, "Write the rule firing trace here");

  CLI::App *baseline = app.add_subcommand("baseline", "Run a comparison segmenter");
  baseline->add_option("--which", o.which, "1: coordination, 2: sentences")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  baseline->add_option("--input", o.inputs)->required();
  baseline->add_option("--format", o.format)->check(CLI::IsMember(formats));
  baseline->add_option("--output", o.output);

  CLI::App *eval = app.add_subcommand("eval", "Precision, recall and F-score");
  eval->add_option("--system", o.system, "System .seg file(s)")->required();
  eval->add_option("--gold", o.gold, "Gold .seg file(s)")->required();
  eval->add_option("--tokens", o.tokens, "Tagged .vrt file(s)")->required();
  eval->add_option("--mode", o.mode)->check(CLI::IsMember({"intra", "all", "segment"}));
  eval->add_flag("--sentences-count-as-correct", o.sentences_count_as_correct,
                 "Segment mode: whole-sentence segments always count as correct");
  eval->add_flag("--tsv", o.tsv, "metric<TAB>value output");
  eval->add_option("--fold-scores", o.fold_scores, "Write one F-score per document here");
  eval->add_option("--output", o.output);

  CLI::App *kappa = app.add_subcommand("kappa", "Cohen's kappa between two annotations");
  kappa->add_option("--a", o.a)->required();
  kappa->add_option("--b", o.b)->required();
  kappa->add_option("--tokens", o.tokens)->required();
  kappa->add_option("--unit", o.unit)->check(CLI::IsMember({"word", "clause"}));
  kappa->add_flag("--tsv", o.tsv);
  kappa->add_option("--output", o.output);

  CLI::App *agree = app.add_subcommand("agree", "Raw boundary agreement");
  agree->add_option("--a", o.a);
  agree->add_option("--b", o.b);
  agree->add_option("--tokens", o.tokens);
  agree->add_option("--agreed", o.agreed)->check(CLI::NonNegativeNumber);
  agree->add_option("--disagreed", o.disagreed)->check(CLI::NonNegativeNumber);
  agree->add_flag("--tsv", o.tsv);
  agree->add_option("--output", o.output);

  CLI::App *ttest = app.add_subcommand("ttest", "Paired t-test over fold scores");
  ttest->add_option("--a", o.scores_a, "Scores of system A, one per fold")->required();
  ttest->add_option("--b", o.scores_b, "Scores of system B, one per fold")->required();
  ttest->add_option("--alpha", o.alpha)->check(CLI::Range(0.0, 1.0));
  ttest->add_flag("--tsv", o.tsv);
  ttest->add_option("--output", o.output);

  CLI::App *translate = app.add_subcommand("translate", "Port a lexicon and rule set");
  translate->add_option("--lexicon", o.lexicon);
  translate->add_option("--rules", o.rules);
  translate->add_option("--map", o.map)->required();
  translate->add_option("--out-lexicon", o.out_lexicon);
  translate->add_option("--out-rules", o.out_rules);
  translate->add_option("--report", o.report);
  translate->add_option("--from", o.from)->check(CLI::IsMember({"ca", "es"}));
  translate->add_option("--to", o.to)->check(CLI::IsMember({"ca", "es"}));

  CLI::App *stats = app.add_subcommand("stats", "Corpus statistics");
  stats->add_option("--input", o.inputs)->required();
  stats->add_option("--gold", o.gold)->required();
  stats->add_flag("--tsv", o.tsv);
  stats->add_option("--output", o.output);

  CLI::App *validate = app.add_subcommand("validate", "Check the shipped data directory");
  validate->add_option("--data", o.data_dir)->required();
  validate->add_option("--output", o.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, err, err);
    return kUsageError;
  }

  try {
    if (segment->parsed()) return DoSegment(o, out, err);
    if (baseline->parsed()) return DoBaseline(o, out);
    if (eval->parsed()) return DoEval(o, out);
    if (kappa->parsed()) return DoKappa(o, out);
    if (agree->parsed()) return DoAgree(o, out);
    if (ttest->parsed()) return DoTTest(o, out);
    if (translate->parsed()) return DoTranslate(o, out);
    if (stats->parsed()) return DoStats(o, out);
    if (validate->parsed()) return DoValidate(o, out, err);
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError &e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }
  err << "no subcommand\n";
  return kUsageError;
}

}  // namespace cli
}  // namespace catseg
