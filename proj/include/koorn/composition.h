#ifndef KOORN_COMPOSITION_H_
#define KOORN_COMPOSITION_H_

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace koorn {

// An integer weight vector in Z^n. Entries may be negative.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {}
  Composition(std::initializer_list<int> parts) : parts_(parts) {}

  int size() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[i]; }
  const std::vector<int>& parts() const { return parts_; }

  // |mu| = sum of entries.
  int weight() const;
  // Number of entries equal to value (m_value(mu)).
  int multiplicity(int value) const;
  // The dominant weight mu^+: absolute values sorted non-increasingly.
  Composition dominant() const;
  bool is_partition() const;

  // s_i mu for 1 <= i < n swaps entries i, i+1; s_n negates the last entry.
  Composition reflect(int i) const;

  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

// Weakly decreasing non-negative composition.
class Partition : public Composition {
 public:
  Partition() = default;
  // Throws InvalidParameters if parts is not weakly decreasing and >= 0.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // l(lambda): number of nonzero parts.
  int length() const;
  bool is_even() const;
  // lambda with trailing zeros padded (or stripped) to n entries.
  Partition padded(int n) const;
};

// Dominance order: every partial sum of mu is at most that of lambda.
bool DominanceLeq(const Composition& mu, const Composition& lambda);
// mu <= lambda in reverse lexicographic order (first nonzero lambda_i - mu_i is positive).
bool LexLeq(const Composition& mu, const Composition& lambda);
// mu strictly precedes lambda in the composition order used for nonsymmetric
// triangularity: mu^+ < lambda^+, or equal dominant weights and mu <= lambda.
bool Precedes(const Composition& mu, const Composition& lambda);

// All partitions with at most n parts, largest part <= max_part (padded to n).
std::vector<Partition> PartitionsInBox(int n, int max_part);
// All partitions of total weight <= max_weight with at most n parts.
std::vector<Partition> PartitionsUpToWeight(int n, int max_weight);
// All compositions in [lo, hi]^n, lexicographic.
std::vector<Composition> CompositionsInBox(int n, int lo, int hi);

// Parses "2,1,0". Throws ParseError.
std::vector<int> ParseIndexVector(std::string_view text);

}  // namespace koorn

#endif  // KOORN_COMPOSITION_H_
