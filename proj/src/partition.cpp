#include "nilcomm/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace nilcomm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (parts_[j] < 1) {
      throw std::invalid_argument("partition parts must be positive, got " +
                                  std::to_string(parts_[j]));
    }
    if (j > 0 && parts_[j] > parts_[j - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing: " +
                                  std::to_string(parts_[j - 1]) + " < " +
                                  std::to_string(parts_[j]));
    }
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
  if (i == 0) return largest() + 1;
  if (i == length() + 1) return 0;
  if (i < 0 || i > length()) {
    throw std::out_of_range("partition index " + std::to_string(i) +
                            " outside 0.." + std::to_string(length() + 1));
  }
  return parts_[static_cast<std::size_t>(i - 1)];
}

int Partition::sum(int first, int last) const {
  int total = 0;
  for (int i = first; i <= last; ++i) total += part(i);
  return total;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(parts_[j]);
  }
  return out;
}

namespace {

int parse_int_token(std::string_view token, std::string_view whole) {
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("bad partition token '" + std::string(token) +
                                "' in '" + std::string(whole) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '(' && body.back() == ')') {
    body = trim(body.substr(1, body.size() - 2));
  }
  if (body.empty()) {
    throw std::invalid_argument("empty partition '" + std::string(text) + "'");
  }
  std::vector<int> parts;
  while (true) {
    auto comma = body.find(',');
    std::string_view token = trim(body.substr(0, comma));
    auto caret = token.find('^');
    if (caret == std::string_view::npos) {
      int value = parse_int_token(token, text);
      if (value < 1) {
        throw std::invalid_argument("bad partition token '" + std::string(token) +
                                    "' in '" + std::string(text) + "'");
      }
      parts.push_back(value);
    } else {
      int value = parse_int_token(trim(token.substr(0, caret)), text);
      int times = parse_int_token(trim(token.substr(caret + 1)), text);
      if (value < 1 || times < 1) {
        throw std::invalid_argument("bad partition token '" + std::string(token) +
                                    "' in '" + std::string(text) + "'");
      }
      parts.insert(parts.end(), static_cast<std::size_t>(times), value);
    }
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>{})) {
    throw std::invalid_argument("partition '" + std::string(text) +
                                "' is not weakly decreasing");
  }
  return Partition(std::move(parts));
}

Partition MultiplicityForm::to_partition() const {
  std::vector<int> parts;
  for (const auto& g : groups) {
    parts.insert(parts.end(), static_cast<std::size_t>(g.multiplicity), g.size);
  }
  return Partition(std::move(parts));
}

MultiplicityForm multiplicity_form(const Partition& mu) {
  MultiplicityForm form;
  for (int i = 1; i <= mu.length(); ++i) {
    if (form.groups.empty() || form.groups.back().size != mu.part(i)) {
      form.groups.push_back({mu.part(i), 1, i});
    } else {
      ++form.groups.back().multiplicity;
    }
  }
  return form;
}

std::string to_exponent_string(const Partition& mu) {
  std::string out = "(";
  bool first = true;
  for (const auto& g : multiplicity_form(mu).groups) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(g.size);
    if (g.multiplicity > 1) out += '^' + std::to_string(g.multiplicity);
  }
  return out + ")";
}

Partition conjugate(const Partition& mu) {
  std::vector<int> parts(static_cast<std::size_t>(mu.largest()), 0);
  for (int p : mu.parts()) {
    for (int j = 0; j < p; ++j) ++parts[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(parts));
}

bool dominates(const Partition& lhs, const Partition& rhs) {
  int a = 0;
  int b = 0;
  int len = std::max(lhs.length(), rhs.length());
  for (int i = 1; i <= len; ++i) {
    a += i <= lhs.length() ? lhs.part(i) : 0;
    b += i <= rhs.length() ? rhs.part(i) : 0;
    if (a < b) return false;
  }
  return true;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::domain_error("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> recurse = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      recurse(remaining - part, part);
      current.pop_back();
    }
  };
  recurse(n, n);
  return out;
}

Partition rpt(int n, int t) {
  if (n < 1 || t < 1 || t > n) {
    throw std::domain_error("rpt(" + std::to_string(n) + "," + std::to_string(t) +
                            "): need 1 <= t <= n");
  }
  const int q = n / t;
  const int r = n % t;
  std::vector<int> parts(static_cast<std::size_t>(t), q);
  std::fill_n(parts.begin(), r, q + 1);
  return Partition(std::move(parts));
}

std::vector<Partition> rp_set(int n) {
  if (n < 1) throw std::domain_error("rp_set: n must be positive");
  std::vector<Partition> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int t = 1; t <= n; ++t) out.push_back(rpt(n, t));
  std::sort(out.begin(), out.end(), std::greater<>{});
  return out;
}

Partition ord_merge(std::span<const Partition> seqs) {
  if (seqs.empty()) throw std::invalid_argument("ord_merge needs at least one input");
  std::vector<int> parts;
  for (const auto& s : seqs) parts.insert(parts.end(), s.parts().begin(), s.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<>{});
  return Partition(std::move(parts));
}

std::vector<Partition> rp_of_partition(const Partition& mu) {
  std::set<Partition, std::greater<>> found;
  std::vector<Partition> pieces(static_cast<std::size_t>(mu.length()));
  std::function<void(int)> recurse = [&](int i) {
    if (i == mu.length()) {
      found.insert(ord_merge(pieces));
      return;
    }
    for (int s = 1; s <= mu.part(i + 1); ++s) {
      pieces[static_cast<std::size_t>(i)] = rpt(mu.part(i + 1), s);
      recurse(i + 1);
    }
  };
  if (mu.empty()) return {};
  recurse(0);
  return {found.begin(), found.end()};
}

BasiliIndices basili_indices(const Partition& mu) {
  BasiliIndices out;
  if (mu.empty()) return out;
  int k = 1;
  out.starts.push_back(k);
  for (int j = 2; j <= mu.length(); ++j) {
    if (mu.part(k) - mu.part(j) >= 2) {
      k = j;
      out.starts.push_back(k);
    }
  }
  out.r_b = static_cast<int>(out.starts.size());
  return out;
}

int s_width(const Partition& mu, int group) {
  const auto form = multiplicity_form(mu);
  if (group < 1 || group > form.count()) {
    throw std::domain_error("s_width: group " + std::to_string(group) +
                            " outside 1.." + std::to_string(form.count()));
  }
  const auto& g = form.groups[static_cast<std::size_t>(group - 1)];
  if (group == form.count()) return g.multiplicity;
  const auto& next = form.groups[static_cast<std::size_t>(group)];
  if (g.size - next.size >= 2) return g.multiplicity;
  return g.multiplicity + next.multiplicity;
}

}  // namespace nilcomm
