#include "koorn/composition.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>

#include "koorn/error.h"

namespace koorn {

int Composition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Composition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

Composition Composition::dominant() const {
  std::vector<int> out(parts_.size());
  std::transform(parts_.begin(), parts_.end(), out.begin(), [](int x) { return std::abs(x); });
  std::sort(out.begin(), out.end(), std::greater<>());
  return Composition(std::move(out));
}

bool Composition::is_partition() const {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) return false;
    if (i > 0 && parts_[i] > parts_[i - 1]) return false;
  }
  return true;
}

Composition Composition::reflect(int i) const {
  std::vector<int> out = parts_;
  if (i < 1 || i > size()) throw InvalidParameters("reflection index out of range");
  if (i < size()) {
    std::swap(out[i - 1], out[i]);
  } else {
    out.back() = -out.back();
  }
  return Composition(std::move(out));
}

std::string Composition::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Partition::Partition(std::vector<int> parts) : Composition(std::move(parts)) {
  if (!is_partition()) {
    throw InvalidParameters("not a partition: " + to_string());
  }
}

int Partition::length() const { return size() - multiplicity(0); }

bool Partition::is_even() const {
  return std::all_of(parts().begin(), parts().end(), [](int x) { return x % 2 == 0; });
}

Partition Partition::padded(int n) const {
  if (length() > n) throw InvalidParameters("partition longer than n");
  std::vector<int> out(parts().begin(), parts().begin() + std::min(size(), n));
  out.resize(n, 0);
  return Partition(std::move(out));
}

bool DominanceLeq(const Composition& mu, const Composition& lambda) {
  if (mu.size() != lambda.size()) throw DimensionMismatch("dominance on different lengths");
  long s_mu = 0, s_lambda = 0;
  for (int i = 0; i < mu.size(); ++i) {
    s_mu += mu[i];
    s_lambda += lambda[i];
    if (s_mu > s_lambda) return false;
  }
  return true;
}

bool LexLeq(const Composition& mu, const Composition& lambda) {
  if (mu.size() != lambda.size()) throw DimensionMismatch("lex on different lengths");
  for (int i = 0; i < mu.size(); ++i) {
    if (lambda[i] != mu[i]) return lambda[i] > mu[i];
  }
  return true;
}

bool Precedes(const Composition& mu, const Composition& lambda) {
  if (mu == lambda) return false;
  const Composition mu_plus = mu.dominant();
  const Composition lambda_plus = lambda.dominant();
  if (mu_plus == lambda_plus) return DominanceLeq(mu, lambda);
  return DominanceLeq(mu_plus, lambda_plus);
}

namespace {

void PartitionsRec(int n, int max_part, int max_weight, std::vector<int>& cur,
                   std::vector<Partition>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.emplace_back(cur);
    return;
  }
  const int used = std::accumulate(cur.begin(), cur.end(), 0);
  int top = cur.empty() ? max_part : std::min(max_part, cur.back());
  top = std::min(top, max_weight - used);
  for (int p = top; p >= 0; --p) {
    cur.push_back(p);
    PartitionsRec(n, max_part, max_weight, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> PartitionsInBox(int n, int max_part) {
  std::vector<Partition> out;
  std::vector<int> cur;
  PartitionsRec(n, max_part, n * max_part, cur, out);
  return out;
}

std::vector<Partition> PartitionsUpToWeight(int n, int max_weight) {
  std::vector<Partition> out;
  std::vector<int> cur;
  PartitionsRec(n, max_weight, max_weight, cur, out);
  return out;
}

std::vector<Composition> CompositionsInBox(int n, int lo, int hi) {
  std::vector<Composition> out;
  std::vector<int> cur(n, lo);
  while (true) {
    out.emplace_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == hi) cur[i--] = lo;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

std::vector<int> ParseIndexVector(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) throw ParseError("empty index vector");
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    int value = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (!tok.empty() && tok[0] == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (tok.empty() || ec != std::errc() || ptr != last) {
      throw ParseError("bad index entry '" + std::string(tok) + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

}  // namespace koorn
