#include "schurpol/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "schurpol/field.hpp"

namespace schurpol {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw std::invalid_argument("not a partition: " + Partition::to_string());
    }
  }
}

Partition Partition::parse(std::string_view text) {
  if (text.starts_with('(') || text.starts_with('[')) text.remove_prefix(1);
  if (text.ends_with(')') || text.ends_with(']')) text.remove_suffix(1);
  std::vector<int> parts;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto token = text.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols(lambda.empty() ? 0 : lambda[0], 0);
  for (int row : lambda.parts()) {
    for (int j = 0; j < row; ++j) ++cols[j];
  }
  return Partition(std::move(cols));
}

Partition horizontal_concat(const Partition& lambda, const Partition& mu) {
  std::vector<int> parts(std::max(lambda.length(), mu.length()));
  for (std::size_t i = 0; i < parts.size(); ++i) parts[i] = lambda[i] + mu[i];
  return Partition(std::move(parts));
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw std::invalid_argument("dominance order needs partitions of equal size: " +
                                lambda.to_string() + " vs " + mu.to_string());
  }
  int a = 0, b = 0;
  const std::size_t len = std::max(lambda.length(), mu.length());
  for (std::size_t i = 0; i < len; ++i) {
    a += lambda[i];
    b += mu[i];
    if (a > b) return false;
  }
  return true;
}

SliceDecomposition slice_decomposition(const Partition& lambda, int n, int k) {
  if (k < 2) throw std::invalid_argument("slice_decomposition needs k >= 2");
  if (n < 1) throw std::invalid_argument("slice_decomposition needs n >= 1");
  if (lambda.length() > n) {
    throw std::invalid_argument("partition " + lambda.to_string() + " has more than n = " +
                                std::to_string(n) + " parts");
  }
  SliceDecomposition out{{}, n, k};
  const int window = k * n;
  std::vector<int> cols = conjugate(lambda).parts();
  std::size_t start = 0;
  int remaining = lambda.size();
  while (remaining > window) {
    // t = first index with prefix sum > k*n; take columns [start, t).
    int prefix = 0;
    std::size_t t = start;
    while (prefix + cols[t] <= window) prefix += cols[t++];
    out.pieces.push_back(conjugate(Partition(std::vector<int>(cols.begin() + start, cols.begin() + t))));
    remaining -= prefix;
    start = t;
  }
  out.pieces.push_back(conjugate(Partition(std::vector<int>(cols.begin() + start, cols.end()))));
  return out;
}

namespace {

void enumerate_into(int remaining, int max_part, int slots, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (slots == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    enumerate_into(remaining - part, part, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int d, int max_len) {
  if (d < 0 || max_len < 0) throw std::invalid_argument("enumerate_partitions needs d, max_len >= 0");
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_into(d, d, max_len, prefix, out);
  return out;
}

int alpha_p(int d, int p) {
  if (!is_prime(static_cast<std::uint64_t>(std::max(p, 0)))) {
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
  if (d < 0) throw std::invalid_argument("alpha_p needs d >= 0");
  int s = 0;
  for (; d > 0; d /= p) s += d % p;
  return s;
}

mpz_class schur_dimension(const Partition& lambda, int m) {
  if (m < 0) throw std::invalid_argument("schur_dimension needs m >= 0");
  const Partition cols = conjugate(lambda);
  mpz_class num = 1, den = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      const int content = j - i;
      if (m + content <= 0) return 0;
      num *= m + content;
      den *= (lambda[i] - j) + (cols[j] - i) - 1;
    }
  }
  return num / den;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

SliceSuiteReport slice_suite(int d_max, int n_max, int k_min, int k_max) {
  SliceSuiteReport report;
  auto fail = [&](const std::string& what) {
    ++report.failures;
    if (report.failure_samples.size() < 10) report.failure_samples.push_back(what);
  };
  for (int d = 0; d <= d_max; ++d) {
    for (int n = 1; n <= n_max; ++n) {
      for (const auto& lambda : enumerate_partitions(d, n)) {
        for (int k = k_min; k <= k_max; ++k) {
          ++report.cases;
          const auto sd = slice_decomposition(lambda, n, k);
          const std::string tag = lambda.to_string() + " n=" + std::to_string(n) + " k=" + std::to_string(k);
          Partition total;
          for (const auto& piece : sd.pieces) total = total + piece;
          if (total != lambda) fail(tag + ": pieces do not re-concatenate");
          const int s = static_cast<int>(sd.pieces.size());
          for (int i = 0; i < s; ++i) {
            const int size = sd.pieces[i].size();
            if (size > k * n) fail(tag + ": piece too large");
            if (i + 1 < s && size <= n * (k - 1)) fail(tag + ": piece too small");
            if (sd.pieces[i].length() > n) fail(tag + ": piece too long");
          }
          if (d > 0 && s > ceil_div(d, n * (k - 1))) fail(tag + ": too many pieces");
        }
      }
    }
  }
  return report;
}

}  // namespace schurpol
