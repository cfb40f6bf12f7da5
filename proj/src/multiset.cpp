#include "qasc/multiset.hpp"

#include <algorithm>
#include <numeric>

#include "qasc/errors.hpp"

namespace qasc {

namespace {

void require_same_group(const GMultiset& x, const GMultiset& y) {
  if (x.group() != y.group())
    throw std::invalid_argument("multisets belong to different groups");
}

}  // namespace

GMultiset::GMultiset(GroupPtr group)
    : group_(std::move(group)), counts_(group_->order(), 0) {}

GMultiset::GMultiset(GroupPtr group, const std::vector<int>& elements)
    : GMultiset(std::move(group)) {
  for (const int g : elements) {
    if (g < 0 || g >= group_->order()) throw InputError("element index out of range");
    ++counts_[g];
  }
}

GMultiset GMultiset::from_class(GroupPtr group, int class_index) {
  const auto cls = group->classes().classes.at(class_index);
  return GMultiset(std::move(group), cls);
}

GMultiset GMultiset::from_classes(GroupPtr group, const std::vector<int>& class_indices) {
  GMultiset out(group);
  for (const int c : class_indices)
    for (const int g : group->classes().classes.at(c)) out.counts_[g] = 1;
  return out;
}

GMultiset GMultiset::whole_group(GroupPtr group) {
  GMultiset out(std::move(group));
  std::fill(out.counts_.begin(), out.counts_.end(), 1);
  return out;
}

void GMultiset::set_count(int g, std::int64_t c) {
  if (c < 0) throw std::invalid_argument("negative multiplicity");
  counts_.at(g) = c;
}

void GMultiset::add(int g, std::int64_t c) { set_count(g, counts_.at(g) + c); }

std::int64_t GMultiset::size() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

bool GMultiset::empty() const {
  return std::all_of(counts_.begin(), counts_.end(), [](auto c) { return c == 0; });
}

bool GMultiset::is_set() const {
  return std::all_of(counts_.begin(), counts_.end(), [](auto c) { return c <= 1; });
}

std::vector<int> GMultiset::support() const {
  std::vector<int> out;
  for (int g = 0; g < static_cast<int>(counts_.size()); ++g)
    if (counts_[g] > 0) out.push_back(g);
  return out;
}

int GMultiset::split_class_witness() const {
  if (!group_) return -1;
  for (const auto& cls : group_->classes().classes)
    for (const int g : cls)
      if (counts_[g] != counts_[cls.front()]) return g;
  return -1;
}

bool GMultiset::is_conjugate_closed() const { return split_class_witness() < 0; }

std::vector<int> GMultiset::class_decomposition() const {
  std::vector<int> out;
  const auto& cs = group_->classes();
  for (int c = 0; c < cs.size(); ++c)
    if (counts_[cs.representatives[c]] > 0) out.push_back(c);
  return out;
}

GMultiset GMultiset::inverse() const {
  GMultiset out(group_);
  for (int g = 0; g < group_->order(); ++g) out.counts_[group_->inv(g)] = counts_[g];
  return out;
}

std::string GMultiset::to_string() const {
  if (!group_ || empty()) return "[]";
  std::string s = "[";
  bool first = true;
  for (int g = 0; g < group_->order(); ++g) {
    if (counts_[g] == 0) continue;
    if (!first) s += ", ";
    first = false;
    if (counts_[g] != 1) s += std::to_string(counts_[g]) + "*";
    s += group_->label(g);
  }
  return s + "]";
}

bool operator==(const GMultiset& a, const GMultiset& b) {
  return a.group_ == b.group_ && a.counts_ == b.counts_;
}

GMultiset mset_product(const GMultiset& x, const GMultiset& y) {
  require_same_group(x, y);
  const auto& g = *x.group();
  GMultiset out(x.group());
  const auto xs = x.support();
  const auto ys = y.support();
  for (const int a : xs)
    for (const int b : ys) out.add(g.mul(a, b), x.count(a) * y.count(b));
  return out;
}

GMultiset mset_power(const GMultiset& x, std::int64_t t) {
  const auto& g = *x.group();
  GMultiset out(x.group());
  for (const int a : x.support()) out.add(g.pow(a, t), x.count(a));
  return out;
}

GMultiset mset_diff(const GMultiset& x, const GMultiset& y) {
  require_same_group(x, y);
  GMultiset out(x.group());
  for (int a = 0; a < x.group()->order(); ++a)
    out.set_count(a, std::max<std::int64_t>(x.count(a) - y.count(a), 0));
  return out;
}

GMultiset mset_union(const GMultiset& x, const GMultiset& y) {
  require_same_group(x, y);
  GMultiset out(x.group());
  for (int a = 0; a < x.group()->order(); ++a) out.set_count(a, x.count(a) + y.count(a));
  return out;
}

GMultiset mset_scale(const GMultiset& x, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("negative scale");
  GMultiset out(x.group());
  for (int a = 0; a < x.group()->order(); ++a) out.set_count(a, x.count(a) * k);
  return out;
}

}  // namespace qasc
