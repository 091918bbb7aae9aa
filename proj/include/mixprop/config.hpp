/*
Copyright (c) 2026 The mixprop Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mixprop/dataset.hpp"
#include "mixprop/trainer.hpp"

namespace mixprop {

// Resolved settings for one command: hyperparameters plus dataset inputs.
struct RunConfig {
  TrainConfig train;
  DatasetPaths paths;
  std::size_t num_classes = 0;  // 0: infer from labels
  bool row_normalize = false;
};

// Keys are the long flag names ("m-aug", "lambda-max", "N", "k", ...).
// Unknown keys and malformed values throw InputError.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

// "key = value" lines; '#' starts a comment.
std::vector<std::pair<std::string, std::string>> parse_config_text(std::string_view text,
                                                                   const std::string& source = "<memory>");
void apply_config_text(RunConfig& config, std::string_view text, const std::string& source = "<memory>");
void apply_config_file(RunConfig& config, const std::filesystem::path& path);

std::vector<std::string> preset_names();
void apply_preset(RunConfig& config, std::string_view name);

// Every key with its resolved value; feeding it back reproduces the config.
std::string format_config(const RunConfig& config);

}  // namespace mixprop
