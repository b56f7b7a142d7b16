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

#include <cmath>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "xgc/brisque.hpp"
#include "xgc/error.hpp"
#include "xgc/util.hpp"

namespace xgc::brisque {

using nlohmann::json;

namespace {

template <typename T>
T get_field(const json& j, const char* key) {
  require(j.contains(key), ErrorKind::kModel, std::string("model file lacks '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(ErrorKind::kModel, std::string("bad '") + key + "' in model file: " + e.what());
  }
}

std::array<double, kFeatureCount> get_vector(const json& j, const char* key) {
  const auto v = get_field<std::vector<double>>(j, key);
  require(v.size() == kFeatureCount, ErrorKind::kModel,
          std::string("'") + key + "' must hold " + std::to_string(kFeatureCount) + " values");
  std::array<double, kFeatureCount> out{};
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

}  // namespace

void SvrModel::validate() const {
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    require(std::isfinite(feature_min[i]) && std::isfinite(feature_max[i]) &&
                feature_max[i] > feature_min[i],
            ErrorKind::kModel, "feature_max must exceed feature_min at index " + std::to_string(i));
  }
  if (kernel == KernelKind::kRbf) {
    require(!support_vectors.empty(), ErrorKind::kModel, "RBF model needs at least one support vector");
    require(dual_coefs.size() == support_vectors.size(), ErrorKind::kModel,
            "dual_coefs and support_vectors differ in length");
    require(std::isfinite(gamma) && gamma >= 0.0 && std::isfinite(rho), ErrorKind::kModel,
            "gamma must be finite and non-negative");
  } else {
    for (double w : weights) require(std::isfinite(w), ErrorKind::kModel, "non-finite weight");
    require(std::isfinite(bias), ErrorKind::kModel, "non-finite bias");
  }
}

std::array<double, kFeatureCount> scale_features(const BrisqueFeatures& f, const SvrModel& model) {
  std::array<double, kFeatureCount> s{};
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    s[i] = 2.0 * (f.values[i] - model.feature_min[i]) / (model.feature_max[i] - model.feature_min[i]) -
           1.0;
  }
  return s;
}

double predict_raw(const BrisqueFeatures& f, const SvrModel& model, const simd::Kernels& k) {
  const auto s = scale_features(f, model);
  if (model.kernel == KernelKind::kLinear) {
    double acc = model.bias;
    for (std::size_t i = 0; i < kFeatureCount; ++i) acc += model.weights[i] * s[i];
    return acc;
  }
  double acc = 0.0;
  for (std::size_t j = 0; j < model.support_vectors.size(); ++j) {
    const double d2 = k.squared_distance(s.data(), model.support_vectors[j].data(), kFeatureCount);
    acc += model.dual_coefs[j] * std::exp(-model.gamma * d2);
  }
  return acc - model.rho;
}

double predict(const BrisqueFeatures& f, const SvrModel& model, const simd::Kernels& k) {
  return std::clamp(predict_raw(f, model, k), 0.0, 100.0);
}

SvrModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::kModel, "cannot open model file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(ErrorKind::kModel, "model file is not valid JSON: " + std::string(e.what()));
  }
  SvrModel m;
  const auto kernel = get_field<std::string>(j, "kernel");
  if (kernel == "rbf") {
    m.kernel = KernelKind::kRbf;
    m.gamma = get_field<double>(j, "gamma");
    m.rho = get_field<double>(j, "rho");
    const auto svs = get_field<std::vector<std::vector<double>>>(j, "support_vectors");
    for (const auto& sv : svs) {
      require(sv.size() == kFeatureCount, ErrorKind::kModel,
              "support vector length must be " + std::to_string(kFeatureCount));
      std::array<double, kFeatureCount> a{};
      std::copy(sv.begin(), sv.end(), a.begin());
      m.support_vectors.push_back(a);
    }
    m.dual_coefs = get_field<std::vector<double>>(j, "dual_coefs");
  } else if (kernel == "linear") {
    m.kernel = KernelKind::kLinear;
    m.weights = get_vector(j, "weights");
    m.bias = get_field<double>(j, "bias");
  } else {
    fail(ErrorKind::kModel, "unknown kernel '" + kernel + "'");
  }
  m.feature_min = get_vector(j, "feature_min");
  m.feature_max = get_vector(j, "feature_max");
  m.validate();
  return m;
}

void save_model(const std::filesystem::path& path, const SvrModel& model) {
  model.validate();
  json j;
  if (model.kernel == KernelKind::kRbf) {
    j["kernel"] = "rbf";
    j["gamma"] = model.gamma;
    j["rho"] = model.rho;
    j["support_vectors"] = model.support_vectors;
    j["dual_coefs"] = model.dual_coefs;
  } else {
    j["kernel"] = "linear";
    j["weights"] = model.weights;
    j["bias"] = model.bias;
  }
  j["feature_min"] = model.feature_min;
  j["feature_max"] = model.feature_max;
  write_file_atomic(path, j.dump(2) + "\n");
}

}  // namespace xgc::brisque
