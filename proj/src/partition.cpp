#include "symineq/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace symineq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    // trailing zeros are accepted and stripped (canonical form)
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw domain_error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw domain_error("partition parts must be weakly decreasing");
    }
    weight_ = static_cast<int>(std::accumulate(parts_.begin(), parts_.end(), 0L));
}

Partition Partition::parse(const std::string& csv) {
    std::vector<int> parts;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw domain_error("malformed partition entry: '" + item + "'");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos])))
            ++pos;
        if (pos != item.size())
            throw domain_error("malformed partition entry: '" + item + "'");
        parts.push_back(v);
    }
    if (parts.empty())
        throw domain_error("empty partition");
    return Partition(std::move(parts));
}

int Partition::part(int i) const {
    if (i < 1)
        throw domain_error("part index is 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

long Partition::prefix_sum(int j) const {
    long s = 0;
    for (int i = 0; i < std::min(j, length()); ++i)
        s += parts_[i];
    return s;
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (parts_.empty())
        return Partition{};
    conj.resize(parts_[0], 0);
    for (int j = 1; j <= parts_[0]; ++j)
        conj[j - 1] = static_cast<int>(
            std::count_if(parts_.begin(), parts_.end(), [j](int p) { return p >= j; }));
    return Partition(std::move(conj));
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

std::vector<Partition> enumerate_partitions(int d) {
    if (d < 1)
        throw domain_error("partitions are enumerated for d >= 1");
    std::vector<Partition> out;
    std::vector<int> cur;
    // descending-first recursion yields reverse-lexicographic order
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

bool majorizes(const Partition& mu, const Partition& lambda) {
    if (mu.weight() != lambda.weight())
        throw domain_error("majorization compares partitions of equal weight");
    int len = std::max(mu.length(), lambda.length());
    long smu = 0, slam = 0;
    for (int j = 1; j <= len; ++j) {
        smu += mu.part(j);
        slam += lambda.part(j);
        if (smu < slam)
            return false;
    }
    return true;
}

std::pair<Partition, Partition> family_witness(int d) {
    if (d < 8)
        throw domain_error("witness family is defined for d >= 8");
    int m = d / 2;
    std::vector<int> mu, lambda;
    if (d % 2 == 0) {
        mu.assign(m, 2);
        lambda.assign(2 * m - 2, 1);
        lambda[0] = 3;
    } else {
        mu.assign(m, 2);
        mu.push_back(1);
        lambda.assign(2 * m - 1, 1);
        lambda[0] = 3;
    }
    return {Partition(std::move(mu)), Partition(std::move(lambda))};
}

} // namespace symineq
