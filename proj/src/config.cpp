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

#include "xgc/config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "xgc/error.hpp"

namespace xgc {

namespace {

namespace pt = boost::property_tree;

template <typename T>
T parse_value(const std::string& key, const std::string& text) {
  std::istringstream in(text);
  T value{};
  in >> value;
  require(!in.fail() && (in >> std::ws).eof(), ErrorKind::kConfig,
          "invalid value for " + key + ": '" + text + "'");
  return value;
}

template <>
bool parse_value<bool>(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  fail(ErrorKind::kConfig, "invalid boolean for " + key + ": '" + text + "'");
}

template <typename T>
std::function<void(const std::string&, const std::string&)> set(T& field) {
  return [&field](const std::string& key, const std::string& text) {
    field = parse_value<T>(key, text);
  };
}

std::function<void(const std::string&, const std::string&)> set_count(std::size_t& field) {
  return [&field](const std::string& key, const std::string& text) {
    const auto v = parse_value<long long>(key, text);
    require(v >= 0, ErrorKind::kConfig, key + " must not be negative");
    field = static_cast<std::size_t>(v);
  };
}

void apply_tree(const pt::ptree& tree, PipelineConfig& cfg) {
  auto& c = cfg.classifier;
  std::map<std::string, std::function<void(const std::string&, const std::string&)>> setters{
      {"classifier.alpha", set(c.alpha)},
      {"classifier.h_m", set(c.h_m)},
      {"classifier.w_m", set(c.w_m)},
      {"classifier.key_frame_count", set(c.key_frame_count)},
      {"classifier.epsilon_mean", set(c.epsilon_mean)},
      {"classifier.pgc_ogc_threshold", set(c.pgc_ogc_threshold)},
      {"classifier.invert_quality", set(c.invert_quality)},
      {"classifier.uneven_cv_bound", set(c.uneven_cv_bound)},
      {"fragment.grid_size", set(cfg.fragment.grid_size)},
      {"fragment.patch_size", set(cfg.fragment.patch_size)},
      {"fragment.seed", set(cfg.fragment.seed)},
      {"temporal.budget", set_count(cfg.temporal_budget)},
      {"temporal.reverse_density",
       [&](const std::string& key, const std::string& text) {
         cfg.orientation = parse_value<bool>(key, text) ? DensityOrientation::kReversed
                                                        : DensityOrientation::kFrontWeighted;
       }},
      {"ablation.disable_spatial", set(cfg.ablation.disable_spatial)},
      {"ablation.disable_temporal", set(cfg.ablation.disable_temporal)},
      {"model.path",
       [&](const std::string&, const std::string& text) { cfg.model_path = text; }},
      {"run.jobs", set(cfg.jobs)},
      {"run.output",
       [&](const std::string&, const std::string& text) {
         if (text.empty()) {
           cfg.output_path.reset();
         } else {
           cfg.output_path = text;
         }
       }},
      {"run.seed", set(cfg.seed)},
      {"evaluate.repeats", set_count(cfg.repeats)},
      {"evaluate.plcc_logistic", set(cfg.plcc_logistic)},
      {"evaluate.higher_is_better", set(cfg.higher_is_better)},
      {"calibrate.segments", set_count(cfg.calibrate_segments)},
      {"calibrate.stride", set_count(cfg.calibrate_stride)},
  };
  for (const auto& [section, body] : tree) {
    require(!body.empty(), ErrorKind::kConfig, "setting outside a section: " + section);
    for (const auto& [key, value] : body) {
      const auto name = section + "." + key;
      const auto it = setters.find(name);
      require(it != setters.end(), ErrorKind::kConfig, "unknown config key: " + name);
      it->second(name, value.get_value<std::string>());
    }
  }
}

void read_ini(std::istream& in, PipelineConfig& cfg, const std::string& origin) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    fail(ErrorKind::kConfig, origin + ": " + e.message() + " (line " + std::to_string(e.line()) + ")");
  }
  apply_tree(tree, cfg);
  cfg.validate();
}

}  // namespace

void apply_config_file(const std::filesystem::path& path, PipelineConfig& cfg) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::kConfig, "cannot open config file " + path.string());
  read_ini(in, cfg, path.string());
}

void apply_config_text(const std::string& text, PipelineConfig& cfg) {
  std::istringstream in(text);
  read_ini(in, cfg, "<config>");
}

}  // namespace xgc
