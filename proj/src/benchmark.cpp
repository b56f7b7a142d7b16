// Copyright 2026 The xgcvqa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "xgc/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <tuple>

#include <nlohmann/json.hpp>

#include "xgc/calibrate.hpp"
#include "xgc/error.hpp"
#include "xgc/stats.hpp"
#include "xgc/util.hpp"

namespace xgc {

namespace {

using brisque::BrisqueFeatures;

struct Item {
  const ManifestEntry* entry = nullptr;
  double mos = 0.0;
  std::optional<double> fixed;  // predicted MOS supplied from outside
  std::optional<Clip> clip;
  double decode_ms = 0.0;
  // Model-free path.
  double lambda = 0.0;
  std::vector<BrisqueFeatures> key_features;
  double key_ms = 0.0;
};

struct FragmentFeatures {
  std::vector<BrisqueFeatures> features;
  double ms = 0.0;
};

using CacheKey = std::tuple<std::size_t, std::uint64_t, int>;

std::uint64_t bits_of(double v) {
  std::uint64_t b;
  std::memcpy(&b, &v, sizeof b);
  return b;
}

std::vector<std::size_t> split_order(std::size_t n, std::uint64_t seed, std::size_t repeat) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(mix64(seed ^ mix64(static_cast<std::uint64_t>(repeat))));
  for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[rng() % (i + 1)]);
  return order;
}

std::size_t test_size(std::size_t n) {
  const auto train = static_cast<std::size_t>(std::llround(kTrainFraction * static_cast<double>(n)));
  return std::max<std::size_t>(2, n - std::min(train, n));
}

Metrics correlate(std::span<const double> predicted, std::span<const double> mos, bool logistic) {
  return {stats::srocc(predicted, mos).value, stats::krocc(predicted, mos).value,
          stats::plcc(predicted, mos, logistic).value};
}

Metrics aggregate(std::span<const Metrics> all, bool use_median) {
  std::vector<double> s, k, p;
  for (const auto& m : all) {
    s.push_back(m.srocc);
    k.push_back(m.krocc);
    p.push_back(m.plcc);
  }
  if (use_median) return {stats::median(s), stats::median(k), stats::median(p)};
  return {stats::mean(s), stats::mean(k), stats::mean(p)};
}

std::vector<double> distortion_targets(const std::vector<Item>& items,
                                       std::span<const std::size_t> train) {
  double lo = items[train.front()].mos, hi = lo;
  for (auto i : train) {
    lo = std::min(lo, items[i].mos);
    hi = std::max(hi, items[i].mos);
  }
  std::vector<double> out(items.size(), 50.0);
  if (hi > lo) {
    for (std::size_t i = 0; i < items.size(); ++i) out[i] = 100.0 * (hi - items[i].mos) / (hi - lo);
  }
  return out;
}

double mean_prediction(const std::vector<BrisqueFeatures>& features,
                       const brisque::SvrModel& model) {
  double sum = 0.0;
  for (const auto& f : features) sum += brisque::predict(f, model);
  return sum / static_cast<double>(features.size());
}

std::vector<BrisqueFeatures> fragment_features(const PreparedClip& p) {
  std::vector<BrisqueFeatures> out;
  out.reserve(p.fragments.size());
  for (const auto& f : p.fragments) out.push_back(brisque::features(f.image));
  return out;
}

brisque::SvrModel fit(const std::vector<BrisqueFeatures>& x, const std::vector<double>& y,
                      const char* what) {
  require(x.size() >= kMinRegressionSamples, ErrorKind::kInvalidArgument,
          std::string("too few training samples for the ") + what + " regressor");
  return train_fallback_regressor(x, y);
}

}  // namespace

std::vector<EvaluationReport> run_benchmark(const DatasetManifest& manifest,
                                            const PipelineConfig& base_cfg,
                                            const std::optional<brisque::SvrModel>& model,
                                            std::span<const AblationRow> rows,
                                            const ScoreOverride& override_score) {
  base_cfg.validate();
  require(!rows.empty(), ErrorKind::kInvalidArgument, "no ablation rows requested");

  std::vector<ClipFailure> failures;
  std::vector<Item> items;
  for (const auto& e : manifest.entries) {
    if (!e.mos) {
      failures.push_back({e.clip_id, "missing mos"});
      continue;
    }
    Item it;
    it.entry = &e;
    it.mos = *e.mos;
    items.push_back(std::move(it));
  }
  std::sort(items.begin(), items.end(),
            [](const Item& a, const Item& b) { return a.entry->clip_id < b.entry->clip_id; });

  // Decode.
  std::vector<std::optional<std::string>> errors(items.size());
  parallel_for(items.size(), base_cfg.jobs, [&](std::size_t i) {
    auto& it = items[i];
    try {
      if (override_score) it.fixed = override_score(*it.entry);
      if (it.fixed) return;
      if (it.entry->kind == InputKind::kScoresFile) {
        it.fixed = read_scores_file(it.entry->path);
        return;
      }
      Stopwatch watch;
      it.clip = open_entry(*it.entry).preloaded();
      it.decode_ms = watch.elapsed_ms();
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::kDecode && err.kind() != ErrorKind::kIo) throw;
      errors[i] = err.what();
    }
  });
  {
    std::vector<Item> kept;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (errors[i]) {
        failures.push_back({items[i].entry->clip_id, *errors[i]});
      } else {
        kept.push_back(std::move(items[i]));
      }
    }
    items = std::move(kept);
  }
  std::sort(failures.begin(), failures.end(),
            [](const ClipFailure& a, const ClipFailure& b) { return a.clip_id < b.clip_id; });
  require(items.size() >= kMinBenchmarkEntries, ErrorKind::kInvalidArgument,
          "benchmark needs at least " + std::to_string(kMinBenchmarkEntries) +
              " scoreable entries, got " + std::to_string(items.size()));

  const std::size_t n = items.size();
  PipelineConfig cfg = base_cfg;
  cfg.jobs = 1;  // parallelism is spent across clips

  // Per row: clip index -> pipeline ms (first computation), and for the
  // model path the fixed prediction.
  std::vector<std::vector<double>> clip_ms(rows.size(), std::vector<double>(n, -1.0));
  std::vector<std::vector<double>> model_score(rows.size(), std::vector<double>(n, 0.0));

  const bool model_free = !model.has_value();
  std::optional<BrisquePredictor> predictor;
  if (model) predictor.emplace(*model);

  if (!model_free) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      PipelineConfig row_cfg = cfg;
      row_cfg.ablation = flags_for(rows[r]);
      parallel_for(n, base_cfg.jobs, [&](std::size_t i) {
        if (items[i].fixed) return;
        const auto s = score_clip_pipeline(*items[i].clip, row_cfg, *predictor);
        model_score[r][i] = s.score;
        clip_ms[r][i] = s.elapsed_ms;
      });
    }
  } else {
    bool any_quality_branch = false;
    for (auto& it : items) {
      if (it.fixed) continue;
      it.lambda = hardware_lambda(*it.clip, cfg.classifier);
      any_quality_branch = any_quality_branch || it.lambda > 1.0;
    }
    if (any_quality_branch) {
      parallel_for(n, base_cfg.jobs, [&](std::size_t i) {
        auto& it = items[i];
        if (it.fixed) return;
        Stopwatch watch;
        for (auto k : key_frame_indices(it.clip->frame_count(), cfg.classifier.key_frame_count)) {
          it.key_features.push_back(brisque::features(it.clip->frame(k)));
        }
        it.key_ms = watch.elapsed_ms();
      });
    }
  }

  std::map<CacheKey, FragmentFeatures> cache;
  std::mutex cache_mutex;

  std::vector<EvaluationReport> reports(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto& rep = reports[r];
    rep.dataset = manifest.source.string();
    rep.ablation = rows[r];
    PipelineConfig row_cfg = base_cfg;
    row_cfg.ablation = flags_for(rows[r]);
    rep.config_digest = row_cfg.digest();
    rep.repeats = base_cfg.repeats;
    rep.split_seed = base_cfg.seed;
    rep.jobs = base_cfg.jobs;
    rep.n_clips = n;
    rep.failures = failures;
  }

  for (std::size_t repeat = 0; repeat < base_cfg.repeats; ++repeat) {
    const auto order = split_order(n, base_cfg.seed, repeat);
    const std::size_t n_test = test_size(n);
    std::vector<std::size_t> train(order.begin(), order.end() - static_cast<std::ptrdiff_t>(n_test));
    std::vector<std::size_t> test(order.end() - static_cast<std::ptrdiff_t>(n_test), order.end());
    std::sort(train.begin(), train.end());
    std::sort(test.begin(), test.end());

    std::vector<double> x(n, 0.0);
    std::vector<double> target;
    if (model_free) {
      target = distortion_targets(items, train);
      std::optional<brisque::SvrModel> classifier_model;
      for (std::size_t i = 0; i < n; ++i) {
        const auto& it = items[i];
        if (it.fixed) continue;
        std::optional<double> q;
        if (it.lambda > 1.0) {
          if (!classifier_model) {
            std::vector<BrisqueFeatures> fx;
            std::vector<double> fy;
            for (auto t : train) {
              for (const auto& f : items[t].key_features) {
                fx.push_back(f);
                fy.push_back(target[t]);
              }
            }
            classifier_model = fit(fx, fy, "classifier");
          }
          q = mean_prediction(it.key_features, *classifier_model);
        }
        x[i] = classify_lambda(it.lambda, q, cfg.classifier).x;
      }
    }

    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::vector<double> predicted(n, 0.0);
      if (model_free) {
        PipelineConfig row_cfg = cfg;
        row_cfg.ablation = flags_for(rows[r]);
        std::vector<std::size_t> missing;
        for (std::size_t i = 0; i < n; ++i) {
          if (!items[i].fixed && !cache.contains({i, bits_of(x[i]), static_cast<int>(rows[r])})) {
            missing.push_back(i);
          }
        }
        parallel_for(missing.size(), base_cfg.jobs, [&](std::size_t m) {
          const std::size_t i = missing[m];
          const auto& it = items[i];
          Stopwatch watch;
          Classification cls;
          cls.lambda = it.lambda;
          cls.x = x[i];
          FragmentFeatures ff;
          ff.features = fragment_features(prepare_clip(*it.clip, cls, row_cfg));
          ff.ms = watch.elapsed_ms() + it.key_ms;
          std::lock_guard lock(cache_mutex);
          cache.emplace(CacheKey{i, bits_of(x[i]), static_cast<int>(rows[r])}, std::move(ff));
        });

        std::vector<BrisqueFeatures> fx;
        std::vector<double> fy;
        for (auto t : train) {
          if (items[t].fixed) continue;
          const auto& ff = cache.at({t, bits_of(x[t]), static_cast<int>(rows[r])});
          for (const auto& f : ff.features) {
            fx.push_back(f);
            fy.push_back(target[t]);
          }
        }
        bool need_model = false;
        for (auto t : test) need_model = need_model || !items[t].fixed;
        std::optional<brisque::SvrModel> scorer;
        if (need_model) scorer = fit(fx, fy, "scoring");
        for (auto t : test) {
          if (items[t].fixed) continue;
          const auto& ff = cache.at({t, bits_of(x[t]), static_cast<int>(rows[r])});
          Stopwatch watch;
          predicted[t] = mean_prediction(ff.features, *scorer);
          if (clip_ms[r][t] < 0.0) clip_ms[r][t] = ff.ms + watch.elapsed_ms();
        }
      } else {
        for (auto t : test) predicted[t] = model_score[r][t];
      }

      std::vector<double> pred_mos, mos;
      auto& rep = reports[r];
      for (auto t : test) {
        const auto& it = items[t];
        double value = it.fixed ? *it.fixed : predicted[t];
        const bool flip = !it.fixed && (model_free || !base_cfg.higher_is_better);
        pred_mos.push_back(flip ? -value : value);
        mos.push_back(it.mos);
        rep.records.push_back(
            {it.entry->clip_id, value, it.mos, it.fixed ? 0.0 : std::max(0.0, clip_ms[r][t]), repeat});
      }
      rep.per_repeat.push_back(correlate(pred_mos, mos, base_cfg.plcc_logistic));
    }
  }

  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto& rep = reports[r];
    rep.mean = aggregate(rep.per_repeat, false);
    rep.median = aggregate(rep.per_repeat, true);
    for (std::size_t i = 0; i < n; ++i) {
      rep.decode_ms_total += items[i].decode_ms;
      if (items[i].fixed || clip_ms[r][i] < 0.0) continue;
      rep.timed_clip_ids.push_back(items[i].entry->clip_id);
      rep.per_clip_ms.push_back(clip_ms[r][i]);
    }
    if (!rep.per_clip_ms.empty()) {
      rep.mean_ms = stats::mean(rep.per_clip_ms);
      rep.median_ms = stats::median(rep.per_clip_ms);
    }
  }
  return reports;
}

EvaluationReport run_benchmark(const DatasetManifest& manifest, const PipelineConfig& cfg,
                               const std::optional<brisque::SvrModel>& model) {
  const AblationRow row = row_for(cfg.ablation);
  return run_benchmark(manifest, cfg, model, std::span<const AblationRow>(&row, 1)).front();
}

nlohmann::json to_json(const Metrics& m) {
  return {{"srocc", m.srocc}, {"krocc", m.krocc}, {"plcc", m.plcc}};
}

nlohmann::json to_json(const EvaluationReport& r, bool include_timing) {
  nlohmann::json per_repeat = nlohmann::json::array();
  for (const auto& m : r.per_repeat) per_repeat.push_back(to_json(m));
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures) failures.push_back({{"clip_id", f.clip_id}, {"error", f.error}});
  const auto flags = flags_for(r.ablation);
  nlohmann::json j{
      {"dataset", r.dataset},
      {"config_digest", r.config_digest},
      {"repeats", r.repeats},
      {"split_seed", r.split_seed},
      {"jobs", r.jobs},
      {"n_clips", r.n_clips},
      {"per_repeat", per_repeat},
      {"mean", to_json(r.mean)},
      {"median", to_json(r.median)},
      {"ablation",
       {{"label", to_string(r.ablation)},
        {"disable_spatial", flags.disable_spatial},
        {"disable_temporal", flags.disable_temporal}}},
      {"failures", failures},
  };
  if (include_timing) {
    j["timing"] = {{"clip_ids", r.timed_clip_ids},
                   {"per_clip_ms", r.per_clip_ms},
                   {"mean_ms", r.mean_ms},
                   {"median_ms", r.median_ms},
                   {"decode_ms_total", r.decode_ms_total}};
  }
  return j;
}

std::string to_csv(std::span<const EvaluationReport> reports, bool include_timing) {
  std::ostringstream out;
  out.precision(17);
  out << "clip_id,predicted,mos,ms,ablation,repeat\n";
  for (const auto& r : reports) {
    for (const auto& rec : r.records) {
      out << rec.clip_id << ',' << rec.predicted << ',' << rec.mos << ',';
      if (include_timing) out << rec.ms;
      out << ',' << to_string(r.ablation) << ',' << rec.repeat << '\n';
    }
  }
  return out.str();
}

Metrics median_over_datasets(std::span<const EvaluationReport> reports) {
  require(!reports.empty(), ErrorKind::kInvalidArgument, "no reports to aggregate");
  std::vector<Metrics> means;
  for (const auto& r : reports) means.push_back(r.mean);
  return aggregate(means, true);
}

}  // namespace xgc
