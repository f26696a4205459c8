#include "catval/partitions.hpp"

#include <algorithm>
#include <stdexcept>

#include "catval/counting.hpp"

namespace catval {

long Partition::sum() const {
    long s = 0;
    for (long p : parts) s += p;
    return s;
}

std::map<long, long> Partition::multiplicities() const {
    std::map<long, long> m;
    for (long p : parts) ++m[p];
    return m;
}

namespace {

std::string parts_str(const std::vector<long>& parts) {
    std::string out = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts[i]);
    }
    return out + ")";
}

void check_partition(const Partition& lambda) {
    for (size_t i = 0; i < lambda.parts.size(); ++i) {
        if (lambda.parts[i] < 1) throw std::invalid_argument("partition part < 1");
        if (i && lambda.parts[i] > lambda.parts[i - 1])
            throw std::invalid_argument("partition parts not weakly decreasing");
    }
}

void gen_partitions(long remaining, long max_part, std::vector<long>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition{cur});
        return;
    }
    for (long p = std::min(max_part, remaining); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::string Partition::str() const { return parts_str(parts); }

long Composition::sum() const {
    long s = 0;
    for (long p : parts) s += p;
    return s;
}

std::string Composition::str() const { return parts_str(parts); }

std::vector<Partition> partitions(long n) {
    if (n < 0) throw std::invalid_argument("partitions of negative integer");
    if (n == 0) return {Partition{}};
    std::vector<Partition> out;
    std::vector<long> cur;
    gen_partitions(n, n, cur, out);
    return out;
}

Int z_value(const Partition& lambda) {
    check_partition(lambda);
    Int z = 1;
    for (const auto& [value, count] : lambda.multiplicities()) {
        for (long c = 0; c < count; ++c) z *= value;
        z *= factorial(count);
    }
    return z;
}

Int perm_count(const Partition& lambda) {
    check_partition(lambda);
    Int p = factorial(lambda.length());
    for (const auto& [value, count] : lambda.multiplicities()) p /= factorial(count);
    return p;
}

Int cycle_class_size(const Partition& lambda) {
    Int z = z_value(lambda);
    Int total = factorial(lambda.sum());
    Int q, r;
    boost::multiprecision::divide_qr(total, z, q, r);
    if (r != 0) throw std::logic_error("z_value does not divide n!");
    return q;
}

Partition gap_partition(std::vector<long> subset, long n) {
    if (subset.empty()) throw std::invalid_argument("gap partition of empty subset");
    std::sort(subset.begin(), subset.end());
    for (size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] < 1 || subset[i] > n)
            throw std::invalid_argument("subset element out of range");
        if (i && subset[i] == subset[i - 1])
            throw std::invalid_argument("subset element repeated");
    }
    std::vector<long> gaps;
    for (size_t i = 1; i < subset.size(); ++i) gaps.push_back(subset[i] - subset[i - 1]);
    gaps.push_back(n - subset.back() + subset.front());
    std::sort(gaps.begin(), gaps.end(), std::greater<>());
    return Partition{std::move(gaps)};
}

Int gap_subset_count(long n, const Partition& lambda) {
    check_partition(lambda);
    if (lambda.sum() != n) throw std::invalid_argument("partition does not sum to n");
    Int num = n * perm_count(lambda);
    Int q, r;
    boost::multiprecision::divide_qr(num, Int(lambda.length()), q, r);
    if (r != 0) throw std::logic_error("gap subset count is not an integer");
    return q;
}

long least_period(const Composition& gamma) {
    const long k = gamma.length();
    if (k == 0) throw std::invalid_argument("period of empty composition");
    for (long m = 1; m < k; ++m) {
        bool ok = true;
        for (long i = 0; i < k && ok; ++i)
            ok = gamma.parts[static_cast<size_t>(i)] ==
                 gamma.parts[static_cast<size_t>((i + m) % k)];
        if (ok) return m;
    }
    return k;
}

std::vector<Refinement> refinements(const Partition& lambda) {
    check_partition(lambda);
    std::vector<std::vector<Partition>> per_block;
    per_block.reserve(lambda.parts.size());
    for (long part : lambda.parts) per_block.push_back(partitions(part));

    std::vector<Refinement> out;
    std::vector<Partition> chosen(per_block.size());
    auto emit = [&]() {
        Refinement r;
        r.blocks = chosen;
        for (const auto& block : chosen)
            r.flat.parts.insert(r.flat.parts.end(), block.parts.begin(), block.parts.end());
        out.push_back(std::move(r));
    };
    // Odometer over the per-block partition choices.
    std::vector<size_t> idx(per_block.size(), 0);
    while (true) {
        for (size_t b = 0; b < per_block.size(); ++b) chosen[b] = per_block[b][idx[b]];
        emit();
        size_t b = per_block.size();
        while (b > 0) {
            --b;
            if (++idx[b] < per_block[b].size()) break;
            idx[b] = 0;
            if (b == 0) return out;
        }
        if (per_block.empty()) return out;
    }
}

}  // namespace catval
