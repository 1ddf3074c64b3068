/*
 * Copyright 2026 The patchlink Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "patchlink/cli.h"

#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "patchlink/dataset.h"
#include "patchlink/detection.h"
#include "patchlink/error.h"
#include "patchlink/impact.h"
#include "patchlink/link_recovery.h"
#include "patchlink/patch_io.h"
#include "patchlink/report.h"
#include "patchlink/statistics.h"

namespace patchlink::cli {
namespace fs = std::filesystem;

void ValidateRunConfig(const RunConfig& config) {
  for (double interval : config.intervals) {
    if (!(interval > 0.0)) {
      throw Error(ErrorCode::kValidation, "intervals must be positive");
    }
  }
  if (config.intervals.empty()) throw Error(ErrorCode::kValidation, "no intervals given");
  if (config.k_max < 1 || config.k_max > 100) {
    throw Error(ErrorCode::kValidation, "k_max must lie in [1, 100]");
  }
  if (config.models.empty()) throw Error(ErrorCode::kValidation, "no models given");
  if (config.workers == 0) throw Error(ErrorCode::kValidation, "workers must be positive");
}

std::string DetectionFileName(PatchId query_id, double interval_days, Model model) {
  return std::to_string(query_id) + "_" + FormatNumber(interval_days) + "d_" +
         std::string(ModelTag(model)) + ".json";
}

namespace {

// Runs `body` once with the status mapping every command shares.
int Guarded(std::ostream& err, const std::function<void()>& body) {
  try {
    body();
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kIo ? kExitIo : kExitFailure;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

// Writes through a temporary file so readers never see partial output.
void WriteFileAtomically(const fs::path& path, const std::string& contents) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + temp.string());
    out << contents;
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + temp.string());
  }
  fs::rename(temp, path);
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void RequirePath(const std::string& path, const char* flag) {
  if (path.empty()) throw Error(ErrorCode::kValidation, std::string(flag) + " is required");
}

PatchStore LoadStore(const RunConfig& config) {
  RequirePath(config.patches_path, "--patches");
  return LoadPatchesFile(config.patches_path);
}

StopwordList LoadStopwords(const RunConfig& config) {
  if (config.stopwords_path.empty()) return StopwordList::English();
  return StopwordList::FromFile(config.stopwords_path);
}

// Calls fn(i) for i in [0, count) on up to `workers` threads. If any call
// throws, the exception of the lowest failing index is rethrown.
void ParallelFor(std::size_t count, std::size_t workers,
                 const std::function<void(std::size_t)>& fn) {
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min(workers, count);
  if (threads <= 1) {
    drain();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(drain);
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
}

std::vector<PatchId> UniqueSources(std::span<const GroundTruthEntry> entries) {
  std::set<PatchId> ids;
  for (const auto& entry : entries) ids.insert(entry.source_id);
  return {ids.begin(), ids.end()};
}

}  // namespace

int Ingest(const RunConfig& config, std::ostream& err) {
  return Guarded(err, [&] {
    const PatchStore store = LoadStore(config);
    std::size_t files = 0;
    std::size_t revisions = 0;
    std::size_t comments = 0;
    std::set<std::string> projects;
    for (const auto& patch : store.ByTime()) {
      files += patch.file_paths.size();
      revisions += patch.revisions.size();
      comments += patch.comments.size();
      projects.insert(patch.project);
    }
    std::ostringstream normalized;
    WritePatches(store, normalized);
    const fs::path target = fs::path(config.out_dir) / "patches.jsonl";
    WriteFileAtomically(target, normalized.str());
    err << store.size() << " patches, " << projects.size() << " projects, " << files
        << " file paths, " << revisions << " revisions, " << comments
        << " comments\n"
        << "wrote " << target.string() << '\n';
  });
}

int Recover(const RunConfig& config, std::ostream& err) {
  return Guarded(err, [&] {
    const PatchStore store = LoadStore(config);
    const RecoveryResult result = RecoverLinkages(store);
    std::ostringstream csv;
    WriteLinkagesCsv(result.records, csv);
    const fs::path target = fs::path(config.out_dir) / "linkages.csv";
    WriteFileAtomically(target, csv.str());
    err << result.records.size() << " linkages recovered from " << result.mentions
        << " mentions\n";
    for (std::size_t kind = 0; kind < kMentionKindCount; ++kind) {
      err << "  " << MentionKindName(static_cast<MentionKind>(kind)) << ": "
          << result.kind_counts[kind] << '\n';
    }
    err << "  unresolved: " << result.unresolved
        << ", self references: " << result.self_references << '\n'
        << "filtered " << result.filtered.total()
        << " (same author: " << result.filtered.same_author
        << ", cherry-pick/revert: " << result.filtered.cherry_pick_or_revert
        << ", incomplete author: " << result.filtered.incomplete_author
        << ", duplicate: " << result.filtered.duplicate << ")\n"
        << "wrote " << target.string() << '\n';
  });
}

int DetectQueries(const RunConfig& config, std::ostream& err) {
  return Guarded(err, [&] {
    ValidateRunConfig(config);
    if (config.queries.empty()) throw Error(ErrorCode::kValidation, "no query ids given");
    const PatchStore store = LoadStore(config);
    for (PatchId id : config.queries) {
      if (!store.Contains(id)) {
        throw Error(ErrorCode::kUnknownPatch, "unknown query id " + std::to_string(id));
      }
    }
    const StopwordList stopwords = LoadStopwords(config);
    const DetectionContext context(store, stopwords);
    std::atomic<std::size_t> empty_windows{0};
    ParallelFor(config.queries.size(), config.workers, [&](std::size_t i) {
      const PatchId query = config.queries[i];
      for (double interval : config.intervals) {
        for (Model model : config.models) {
          const CandidateList list = Detect(context, query, interval, model);
          if (list.diagnostics.empty_window) ++empty_windows;
          WriteFileAtomically(
              fs::path(config.out_dir) / DetectionFileName(query, interval, model),
              CandidateListToJson(list) + "\n");
        }
      }
    });
    const std::size_t files =
        config.queries.size() * config.intervals.size() * config.models.size();
    err << "wrote " << files << " candidate lists to " << config.out_dir << '\n';
    if (empty_windows > 0) {
      err << "note: " << empty_windows << " candidate lists have an empty window\n";
    }
  });
}

namespace {

ResultMap ReadDetections(const RunConfig& config, std::span<const PatchId> queries,
                         double interval, Model model) {
  ResultMap results;
  for (PatchId query : queries) {
    const fs::path path =
        fs::path(config.detections_dir) / DetectionFileName(query, interval, model);
    if (!fs::exists(path)) {
      throw Error(ErrorCode::kValidation, "missing detection output " + path.string());
    }
    CandidateList list = CandidateListFromJson(ReadFile(path));
    if (list.query_id != query || list.model != model) {
      throw Error(ErrorCode::kValidation, path.string() + " does not match its name");
    }
    results.emplace(query, std::move(list));
  }
  return results;
}

ResultMap RunDetections(const RunConfig& config, std::span<const PatchId> queries, Model model,
                        const std::function<CandidateList(PatchId, Model)>& detect) {
  std::vector<CandidateList> lists(queries.size());
  ParallelFor(queries.size(), config.workers,
              [&](std::size_t i) { lists[i] = detect(queries[i], model); });
  ResultMap results;
  for (std::size_t i = 0; i < queries.size(); ++i) {
    results.emplace(queries[i], std::move(lists[i]));
  }
  return results;
}

}  // namespace

int Evaluate(const RunConfig& config, std::ostream& err) {
  return Guarded(err, [&] {
    ValidateRunConfig(config);
    if (config.k_max > kMaxCutoff) {
      throw Error(ErrorCode::kRange, "evaluation supports k up to 10");
    }
    RequirePath(config.ground_truth_path, "--ground-truth");
    const PatchStore store = LoadStore(config);
    const auto ground_truth = LoadGroundTruthFile(config.ground_truth_path);
    if (ground_truth.empty()) throw Error(ErrorCode::kUndefinedMetric, "ground truth is empty");
    ValidateGroundTruth(store, ground_truth);
    const StopwordList stopwords = LoadStopwords(config);
    const DetectionContext context(store, stopwords);
    const std::string project =
        !config.project.empty() ? config.project : fs::path(config.patches_path).stem().string();

    EvaluationReport report;
    auto append = [&](const ReportCell& cell, const ResultMap& results,
                      std::span<const GroundTruthEntry> entries) {
      auto rows = EvaluateCell(cell, results, entries, config.k_max);
      report.rows.insert(report.rows.end(), rows.begin(), rows.end());
    };

    if (config.sample_based) {
      const SampleDataset dataset = SampleBasedSplit(store, ground_truth, config.seed);
      const auto queries = UniqueSources(dataset.ground_truth);
      for (Model model : config.models) {
        const ResultMap results = RunDetections(
            config, queries, model, [&](PatchId query, Model m) {
              const auto candidates = SampleCandidates(store, dataset, query);
              return DetectAmong(context, query, candidates, m);
            });
        append({project, "sample", 0.0, model}, results, dataset.ground_truth);
      }
      err << "sample-based pool: " << dataset.target_count << " targets + "
          << dataset.filler_count << " unlinked patches (seed " << config.seed << ")\n";
    } else {
      for (double interval : config.intervals) {
        const auto entries = GroundTruthForInterval(store, ground_truth, interval);
        const auto queries = UniqueSources(entries);
        for (Model model : config.models) {
          const ResultMap results =
              config.detections_dir.empty()
                  ? RunDetections(config, queries, model,
                                  [&](PatchId query, Model m) {
                                    return Detect(context, query, interval, m);
                                  })
                  : ReadDetections(config, queries, interval, model);
          append({project, "interval", interval, model}, results, entries);
        }
        err << "interval " << FormatNumber(interval) << "d: " << entries.size()
            << " ground-truth linkages\n";
      }
    }

    std::ostringstream csv;
    WriteReportCsv(report, csv);
    std::ostringstream json;
    WriteReportJson(report, json);
    WriteFileAtomically(fs::path(config.out_dir) / "report.csv", csv.str());
    WriteFileAtomically(fs::path(config.out_dir) / "report.json", json.str());
    err << "wrote " << report.rows.size() << " report rows to " << config.out_dir << '\n';
  });
}

namespace {

using OrderedJson = nlohmann::ordered_json;

OrderedJson Comparison(std::span<const double> xs, std::span<const double> ys) {
  OrderedJson out;
  out["n_first"] = xs.size();
  out["n_second"] = ys.size();
  if (xs.empty() || ys.empty()) {
    out["mann_whitney_u"] = nullptr;
    out["p_value"] = nullptr;
    out["cliffs_delta"] = nullptr;
    out["magnitude"] = nullptr;
    return out;
  }
  const auto u = stats::MannWhitneyU(xs, ys);
  const auto delta = stats::CliffsDelta(xs, ys);
  out["mann_whitney_u"] = u.statistic;
  out["p_value"] = u.p_value;
  out["cliffs_delta"] = *delta.effect_size;
  out["magnitude"] = stats::EffectMagnitudeName(*delta.magnitude);
  return out;
}

OrderedJson MedianJson(std::span<const double> values) {
  return values.empty() ? OrderedJson() : OrderedJson(stats::Median(values));
}

struct MetricColumns {
  std::vector<double> first_notify_time;
  std::vector<double> first_notify_revisions;
  std::vector<double> notify_to_decision_time;
  std::vector<double> notify_to_decision_revisions;
  std::vector<double> submit_to_decision_time;
  std::vector<double> submit_to_decision_revisions;

  void Add(const ImpactMetrics& m) {
    first_notify_time.push_back(m.first_notify_time);
    first_notify_revisions.push_back(m.first_notify_revisions);
    if (m.notify_to_decision_time) {
      notify_to_decision_time.push_back(*m.notify_to_decision_time);
      notify_to_decision_revisions.push_back(*m.notify_to_decision_revisions);
      submit_to_decision_time.push_back(*m.submit_to_decision_time);
      submit_to_decision_revisions.push_back(*m.submit_to_decision_revisions);
    }
  }

  OrderedJson Medians() const {
    OrderedJson out;
    out["count"] = first_notify_time.size();
    out["decided"] = notify_to_decision_time.size();
    out["first_notify_time"] = MedianJson(first_notify_time);
    out["first_notify_revisions"] = MedianJson(first_notify_revisions);
    out["notify_to_decision_time"] = MedianJson(notify_to_decision_time);
    out["notify_to_decision_revisions"] = MedianJson(notify_to_decision_revisions);
    out["submit_to_decision_time"] = MedianJson(submit_to_decision_time);
    out["submit_to_decision_revisions"] = MedianJson(submit_to_decision_revisions);
    return out;
  }
};

}  // namespace

int Impact(const RunConfig& config, std::ostream& err) {
  return Guarded(err, [&] {
    RequirePath(config.ground_truth_path, "--ground-truth");
    const PatchStore store = LoadStore(config);
    const auto ground_truth = LoadGroundTruthFile(config.ground_truth_path);

    std::ostringstream csv;
    csv << "source_id,target_id,linkage_type,first_notify_time,first_notify_revisions,"
           "notify_to_decision_time,notify_to_decision_revisions,"
           "submit_to_decision_time,submit_to_decision_revisions\n";
    MetricColumns all;
    std::map<LinkageType, MetricColumns> by_type;
    std::set<PatchId> linked;
    for (const auto& entry : ground_truth) {
      const ImpactMetrics m = ComputeImpactMetrics(store.At(entry.source_id), entry);
      store.At(entry.target_id);
      linked.insert(entry.source_id);
      linked.insert(entry.target_id);
      all.Add(m);
      by_type[entry.linkage_type].Add(m);
      auto optional = [](const auto& value) {
        return value ? FormatNumber(static_cast<double>(*value)) : std::string();
      };
      csv << entry.source_id << ',' << entry.target_id << ','
          << LinkageTypeName(entry.linkage_type) << ','
          << FormatNumber(m.first_notify_time) << ',' << m.first_notify_revisions << ','
          << optional(m.notify_to_decision_time) << ','
          << optional(m.notify_to_decision_revisions) << ','
          << optional(m.submit_to_decision_time) << ','
          << optional(m.submit_to_decision_revisions) << '\n';
    }

    MetricColumns control;
    for (const auto& patch : store.ByTime()) {
      if (linked.contains(patch.id)) continue;
      if (const auto s = ComputeSubmissionMetrics(patch)) {
        control.submit_to_decision_time.push_back(s->submit_to_decision_time);
        control.submit_to_decision_revisions.push_back(s->submit_to_decision_revisions);
      }
    }

    OrderedJson doc;
    OrderedJson medians;
    medians["ALL"] = all.Medians();
    for (LinkageType type : kAllLinkageTypes) {
      medians[std::string(LinkageTypeName(type))] = by_type[type].Medians();
    }
    doc["medians"] = std::move(medians);

    // Alternative Solution against Broader Context and Dependency combined.
    const MetricColumns& alternative = by_type[LinkageType::kAlternativeSolution];
    MetricColumns others;
    for (LinkageType type : {LinkageType::kBroaderContext, LinkageType::kDependency}) {
      const auto& group = by_type[type];
      others.notify_to_decision_time.insert(others.notify_to_decision_time.end(),
                                            group.notify_to_decision_time.begin(),
                                            group.notify_to_decision_time.end());
      others.notify_to_decision_revisions.insert(
          others.notify_to_decision_revisions.end(),
          group.notify_to_decision_revisions.begin(),
          group.notify_to_decision_revisions.end());
    }
    doc["alternative_vs_others"] = {
        {"notify_to_decision_time",
         Comparison(alternative.notify_to_decision_time, others.notify_to_decision_time)},
        {"notify_to_decision_revisions",
         Comparison(alternative.notify_to_decision_revisions,
                    others.notify_to_decision_revisions)}};

    auto kruskal = [&](auto member) {
      std::vector<std::vector<double>> groups;
      for (LinkageType type : {LinkageType::kAlternativeSolution,
                               LinkageType::kBroaderContext, LinkageType::kDependency}) {
        const auto& values = by_type[type].*member;
        if (values.empty()) return OrderedJson();
        groups.push_back(values);
      }
      const auto result = stats::KruskalWallis(groups);
      return OrderedJson{{"h", result.statistic}, {"p_value", result.p_value}};
    };
    doc["kruskal_wallis"] = {
        {"notify_to_decision_time", kruskal(&MetricColumns::notify_to_decision_time)},
        {"notify_to_decision_revisions",
         kruskal(&MetricColumns::notify_to_decision_revisions)}};

    doc["linked_vs_control"] = {
        {"control_count", control.submit_to_decision_time.size()},
        {"submit_to_decision_time",
         Comparison(all.submit_to_decision_time, control.submit_to_decision_time)},
        {"submit_to_decision_revisions",
         Comparison(all.submit_to_decision_revisions,
                    control.submit_to_decision_revisions)}};

    WriteFileAtomically(fs::path(config.out_dir) / "impact.csv", csv.str());
    WriteFileAtomically(fs::path(config.out_dir) / "impact_stats.json", doc.dump(2) + "\n");
    err << ground_truth.size() << " linkages, " << control.submit_to_decision_time.size()
        << " decided control patches\n"
        << "wrote impact.csv and impact_stats.json to " << config.out_dir << '\n';
  });
}

}  // namespace patchlink::cli
