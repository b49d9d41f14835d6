// Copyright (c) 2026 The slh-netsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "slh/types.hpp"

namespace slh {

// Ordered set of bosonic mode labels.  The position of a label fixes the
// row/column that mode occupies in every matrix of a model built on the
// registry, so two models can only be combined when their registries agree.
class ModeRegistry {
 public:
  ModeRegistry() = default;
  explicit ModeRegistry(std::vector<std::string> names);

  Index size() const { return static_cast<Index>(names_.size()); }
  bool contains(std::string_view name) const;
  Index index(std::string_view name) const;  // throws EmbedError if absent
  const std::string& name(Index i) const { return names_.at(static_cast<size_t>(i)); }
  const std::vector<std::string>& names() const { return names_; }

  std::string describe() const;  // "[a, b]"

  friend bool operator==(const ModeRegistry&, const ModeRegistry&) = default;

 private:
  std::vector<std::string> names_;
};

}  // namespace slh
