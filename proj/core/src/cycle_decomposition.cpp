#include <algorithm>
#include <string>

#include "rankone/errors.hpp"
#include "rankone/permutation.hpp"

namespace rankone {

namespace {

void canonicalize(std::vector<std::vector<Label>>& cycles) {
  for (auto& c : cycles) {
    std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

}  // namespace

CycleDecomposition::CycleDecomposition(std::vector<std::vector<Label>> cycles)
    : cycles_(std::move(cycles)) {
  canonicalize(cycles_);
  for (const auto& c : cycles_) {
    ground_set_.insert(ground_set_.end(), c.begin(), c.end());
  }
  std::sort(ground_set_.begin(), ground_set_.end());
}

CycleDecomposition CycleDecomposition::from_cycles(
    std::vector<std::vector<Label>> cycles) {
  std::vector<Label> all;
  for (const auto& c : cycles) {
    if (c.empty()) throw FormatError("empty cycle");
    all.insert(all.end(), c.begin(), c.end());
  }
  std::sort(all.begin(), all.end());
  if (!all.empty() && all.front() < 0) {
    throw FormatError("negative label: " + std::to_string(all.front()));
  }
  if (auto dup = std::adjacent_find(all.begin(), all.end()); dup != all.end()) {
    throw FormatError("repeated label: " + std::to_string(*dup));
  }
  return CycleDecomposition(std::move(cycles));
}

CycleDecomposition CycleDecomposition::from_images(
    std::span<const Label> images) {
  const auto n = images.size();
  std::vector<bool> hit(n, false);
  for (Label y : images) {
    if (y < 0 || static_cast<std::size_t>(y) >= n || hit[y]) {
      throw FormatError("not a permutation of 0.." + std::to_string(n - 1));
    }
    hit[y] = true;
  }
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Label>> cycles;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    auto& cycle = cycles.emplace_back();
    for (auto x = static_cast<Label>(start); !seen[x]; x = images[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
  }
  return CycleDecomposition(std::move(cycles));
}

bool CycleDecomposition::contains(Label x) const noexcept {
  return std::binary_search(ground_set_.begin(), ground_set_.end(), x);
}

bool CycleDecomposition::has_prefix_ground_set() const noexcept {
  return ground_set_.empty() ||
         (ground_set_.front() == 0 &&
          ground_set_.back() == static_cast<Label>(ground_set_.size()) - 1);
}

std::optional<Label> CycleDecomposition::first_fixed_point() const noexcept {
  for (const auto& c : cycles_) {
    if (c.size() == 1) return c.front();
  }
  return std::nullopt;
}

std::size_t CycleDecomposition::index_of_cycle(Label x) const {
  for (std::size_t i = 0; i < cycles_.size(); ++i) {
    if (std::find(cycles_[i].begin(), cycles_[i].end(), x) !=
        cycles_[i].end()) {
      return i;
    }
  }
  throw DomainError("label not in permutation: " + std::to_string(x));
}

const std::vector<Label>& CycleDecomposition::cycle_of(Label x) const {
  return cycles_[index_of_cycle(x)];
}

Label CycleDecomposition::image(Label x) const {
  const auto& c = cycle_of(x);
  auto it = std::find(c.begin(), c.end(), x);
  return ++it == c.end() ? c.front() : *it;
}

Label CycleDecomposition::preimage(Label x) const {
  const auto& c = cycle_of(x);
  auto it = std::find(c.begin(), c.end(), x);
  return it == c.begin() ? c.back() : *(it - 1);
}

CycleDecomposition CycleDecomposition::without(Label x) const {
  auto cycles = cycles_;
  auto& c = cycles[index_of_cycle(x)];
  c.erase(std::find(c.begin(), c.end(), x));
  std::erase_if(cycles, [](const auto& cyc) { return cyc.empty(); });
  return CycleDecomposition(std::move(cycles));
}

CycleDecomposition CycleDecomposition::without_cycle_of(Label x) const {
  auto cycles = cycles_;
  cycles.erase(cycles.begin() +
               static_cast<std::ptrdiff_t>(index_of_cycle(x)));
  return CycleDecomposition(std::move(cycles));
}

CycleDecomposition CycleDecomposition::with_inserted_after(Label anchor,
                                                           Label x) const {
  if (x < 0 || contains(x)) {
    throw DomainError("cannot insert label " + std::to_string(x));
  }
  auto cycles = cycles_;
  auto& c = cycles[index_of_cycle(anchor)];
  c.insert(std::find(c.begin(), c.end(), anchor) + 1, x);
  return CycleDecomposition(std::move(cycles));
}

CycleDecomposition CycleDecomposition::with_cycle(
    std::vector<Label> cycle) const {
  auto cycles = cycles_;
  cycles.push_back(std::move(cycle));
  return from_cycles(std::move(cycles));
}

std::string CycleDecomposition::to_string() const {
  std::string out;
  for (const auto& c : cycles_) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

}  // namespace rankone
