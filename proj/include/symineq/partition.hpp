#ifndef SYMINEQ_PARTITION_HPP
#define SYMINEQ_PARTITION_HPP

#include <string>
#include <utility>
#include <vector>

#include "symineq/rational.hpp"

namespace symineq {

// Weakly decreasing tuple of positive integers, stored without trailing
// zeros. The weight is the sum of the parts (the degree d).
class Partition {
  public:
    Partition() = default; // empty partition, weight 0
    explicit Partition(std::vector<int> parts);
    // Comma-separated list, e.g. "3,1,1". Unsorted input is rejected.
    static Partition parse(const std::string& csv);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    // 1-based part access; 0 beyond the length (implicit zero padding).
    int part(int i) const;
    // Sum of the first j parts (j may exceed the length).
    long prefix_sum(int j) const;

    Partition conjugate() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string str() const; // "(3,1,1)", "()" for empty

  private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// All partitions of d in reverse-lexicographic order, (d) first.
std::vector<Partition> enumerate_partitions(int d);

// Prefix-sum dominance; weights must agree (shorter side zero-padded).
bool majorizes(const Partition& mu, const Partition& lambda);

// The counterexample family: d = 2m -> ((2_m), (3,1_{2m-3})),
// d = 2m+1 -> ((2_m,1), (3,1_{2m-2})). Defined for d >= 8.
std::pair<Partition, Partition> family_witness(int d);

} // namespace symineq

#endif
