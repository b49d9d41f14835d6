// Copyright (c) 2026 The slh-netsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "slh/mode_registry.hpp"

#include <algorithm>

#include "slh/errors.hpp"

namespace slh {

ModeRegistry::ModeRegistry(std::vector<std::string> names) : names_(std::move(names)) {
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw ParameterError("mode name must be non-empty");
    for (size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j]) {
        throw ParameterError("duplicate mode name '" + names_[i] + "'");
      }
    }
  }
}

bool ModeRegistry::contains(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

Index ModeRegistry::index(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) {
    throw EmbedError("mode '" + std::string(name) + "' not present in registry " + describe());
  }
  return static_cast<Index>(it - names_.begin());
}

std::string ModeRegistry::describe() const {
  std::string out = "[";
  for (size_t i = 0; i < names_.size(); ++i) {
    if (i > 0) out += ", ";
    out += names_[i];
  }
  out += "]";
  return out;
}

}  // namespace slh
