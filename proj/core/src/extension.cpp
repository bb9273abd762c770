// Copyright 2026 The subcover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "subcover/extension.hpp"

#include <limits>
#include <stdexcept>

namespace subcover {

namespace {

Field make_extension(const Field& base, std::size_t n, const Limits& limits) {
  if (n < 1) throw InvalidArgument("extension degree must be >= 1");
  return Field::make(base.p(), base.m() * static_cast<std::uint32_t>(n), limits);
}

}  // namespace

ExtensionModel::ExtensionModel(const Field& base, std::size_t n, const Limits& limits)
    : base_(base), ext_(make_extension(base, n, limits)), n_(n) {
  const auto& k = ext_;
  // Constants 0..p-1 encode the prime field in every GF(p^m).
  const elem_t x = base_.m() * n_ >= 2 ? k.p() : 0;

  elem_t root = 0;
  if (base_.m() == 1) {
    root = 0;
  } else {
    const auto& f = base_.modulus();
    bool found = false;
    for (elem_t r = 0; r < k.q() && !found; ++r) {
      elem_t acc = 0;
      for (std::size_t i = f.size(); i-- > 0;) acc = k.add(k.mul(acc, r), f[i]);
      if (acc == 0) {
        root = r;
        found = true;
      }
    }
    if (!found) throw std::logic_error("base modulus has no root in the extension");
  }

  embed_.resize(base_.q());
  for (elem_t c = 0; c < base_.q(); ++c) {
    if (base_.m() == 1) {
      embed_[c] = c;
      continue;
    }
    const auto digits = base_.coeffs(c);
    elem_t acc = 0;
    for (std::size_t i = digits.size(); i-- > 0;) acc = k.add(k.mul(acc, root), digits[i]);
    embed_[c] = acc;
  }

  basis_.resize(n_);
  basis_[0] = 1;
  for (std::size_t i = 1; i < n_; ++i) basis_[i] = k.mul(basis_[i - 1], x);

  index_of_.assign(k.q(), std::numeric_limits<std::uint32_t>::max());
  const std::uint32_t q = base_.q();
  Row coords(n_, 0);
  for (std::uint32_t t = 0; t < k.q(); ++t) {
    std::uint32_t rest = t;
    for (std::size_t i = n_; i-- > 0;) {
      coords[i] = rest % q;
      rest /= q;
    }
    const elem_t a = from_vector(coords);
    if (index_of_[a] != std::numeric_limits<std::uint32_t>::max()) {
      throw std::logic_error("extension basis is not independent over the base field");
    }
    index_of_[a] = t;
  }
}

elem_t ExtensionModel::from_vector(std::span<const elem_t> coords) const {
  if (coords.size() != n_) throw InvalidArgument("extension model: coordinate vector has wrong length");
  elem_t acc = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (coords[i] != 0) acc = ext_.add(acc, ext_.mul(embed_[coords[i]], basis_[i]));
  }
  return acc;
}

Row ExtensionModel::to_vector(elem_t a) const {
  std::uint32_t rest = index_of_.at(a);
  Row coords(n_, 0);
  for (std::size_t i = n_; i-- > 0;) {
    coords[i] = rest % base_.q();
    rest /= base_.q();
  }
  return coords;
}

}  // namespace subcover
