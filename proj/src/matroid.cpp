#include "catval/matroid.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace catval {

SchubertSpec schubert_from_r(const std::vector<long>& runs) {
    if (runs.empty() || runs.size() % 2 != 0)
        throw std::invalid_argument("invalid run encoding");
    SchubertSpec spec;
    spec.runs = runs;
    long pos = 0;
    for (size_t i = 0; i < runs.size(); ++i) {
        if (runs[i] < 1) throw std::invalid_argument("invalid run encoding");
        if (i % 2 == 1) {
            for (long j = 1; j <= runs[i]; ++j) spec.ones.push_back(pos + j);
        }
        pos += runs[i];
    }
    spec.ground = pos;
    spec.rank = static_cast<long>(spec.ones.size());
    return spec;
}

SchubertSpec catalan_matroid(long a, long b, long n) {
    if (a < 1 || b < 1 || n < 1)
        throw std::invalid_argument("Catalan matroid parameters must be positive");
    std::vector<long> runs;
    runs.reserve(static_cast<size_t>(2 * n));
    for (long i = 0; i < n; ++i) {
        runs.push_back(a);
        runs.push_back(b);
    }
    return schubert_from_r(runs);
}

bool dominates(const GroundSubset& T, const GroundSubset& S) {
    if (T.size() != S.size()) return false;
    for (size_t i = 0; i < T.size(); ++i)
        if (T[i] > S[i]) return false;
    return true;
}

long filling_rank(const SchubertSpec& spec, const std::vector<long>& word) {
    std::vector<bool> used(spec.ones.size(), false);
    long filled = 0;
    for (long w : word) {
        for (size_t i = 0; i < spec.ones.size(); ++i) {
            if (used[i] || spec.ones[i] < w) continue;
            used[i] = true;
            ++filled;
            break;
        }
    }
    return filled;
}

namespace {

// Ascending two-pointer specialization of filling_rank: with the word sorted,
// the chosen boxes are ascending, so skipped boxes never become usable again.
long filling_rank_sorted(const SchubertSpec& spec, const GroundSubset& sorted) {
    size_t box = 0;
    long filled = 0;
    for (long w : sorted) {
        while (box < spec.ones.size() && spec.ones[box] < w) ++box;
        if (box == spec.ones.size()) break;
        ++box;
        ++filled;
    }
    return filled;
}

void check_subset(const GroundSubset& subset, long ground) {
    for (size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] < 1 || subset[i] > ground)
            throw std::invalid_argument("ground element out of range");
        if (i && subset[i] <= subset[i - 1])
            throw std::invalid_argument("ground subset not sorted/distinct");
    }
}

}  // namespace

struct MatroidExpr::Node {
    enum class Kind { Uniform, Schubert, DirectSum, Dual } kind;
    long k = 0, n = 0;                 // Uniform
    SchubertSpec spec;                 // Schubert
    std::vector<MatroidExpr> blocks;   // DirectSum
    std::shared_ptr<const Node> inner; // Dual
};

MatroidExpr MatroidExpr::uniform(long k, long n) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("uniform matroid needs 0 <= k <= n");
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::Uniform;
    node->k = k;
    node->n = n;
    return MatroidExpr(std::move(node));
}

MatroidExpr MatroidExpr::schubert(SchubertSpec spec) {
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::Schubert;
    node->spec = std::move(spec);
    return MatroidExpr(std::move(node));
}

MatroidExpr MatroidExpr::direct_sum(std::vector<MatroidExpr> blocks) {
    if (blocks.empty()) throw std::invalid_argument("direct sum of no blocks");
    if (blocks.size() == 1) return blocks.front();
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::DirectSum;
    node->blocks = std::move(blocks);
    return MatroidExpr(std::move(node));
}

bool MatroidExpr::is_uniform() const { return node_->kind == Node::Kind::Uniform; }
bool MatroidExpr::is_schubert() const { return node_->kind == Node::Kind::Schubert; }
bool MatroidExpr::is_direct_sum() const { return node_->kind == Node::Kind::DirectSum; }
bool MatroidExpr::is_dual() const { return node_->kind == Node::Kind::Dual; }

long MatroidExpr::uniform_k() const { return node_->k; }
const SchubertSpec& MatroidExpr::schubert_spec() const { return node_->spec; }
const std::vector<MatroidExpr>& MatroidExpr::sum_blocks() const { return node_->blocks; }

long MatroidExpr::ground() const {
    switch (node_->kind) {
        case Node::Kind::Uniform: return node_->n;
        case Node::Kind::Schubert: return node_->spec.ground;
        case Node::Kind::Dual: return MatroidExpr(node_->inner).ground();
        case Node::Kind::DirectSum: {
            long g = 0;
            for (const auto& b : node_->blocks) g += b.ground();
            return g;
        }
    }
    return 0;
}

long MatroidExpr::rank() const {
    switch (node_->kind) {
        case Node::Kind::Uniform: return node_->k;
        case Node::Kind::Schubert: return node_->spec.rank;
        case Node::Kind::Dual: {
            MatroidExpr inner(node_->inner);
            return inner.ground() - inner.rank();
        }
        case Node::Kind::DirectSum: {
            long r = 0;
            for (const auto& b : node_->blocks) r += b.rank();
            return r;
        }
    }
    return 0;
}

long MatroidExpr::components() const {
    switch (node_->kind) {
        case Node::Kind::Uniform:
            // U_{0,n} is n loops and U_{n,n} is n coloops; otherwise connected.
            return (node_->k == 0 || node_->k == node_->n) ? node_->n : 1;
        case Node::Kind::Schubert:
            // Normalized runs (1 not in S, ground in S) force connectivity.
            return 1;
        case Node::Kind::Dual: return MatroidExpr(node_->inner).components();
        case Node::Kind::DirectSum: {
            long c = 0;
            for (const auto& b : node_->blocks) c += b.components();
            return c;
        }
    }
    return 0;
}

long MatroidExpr::rank_of(const GroundSubset& subset) const {
    check_subset(subset, ground());
    switch (node_->kind) {
        case Node::Kind::Uniform:
            return std::min<long>(static_cast<long>(subset.size()), node_->k);
        case Node::Kind::Schubert:
            return filling_rank_sorted(node_->spec, subset);
        case Node::Kind::Dual: {
            MatroidExpr inner(node_->inner);
            GroundSubset complement;
            size_t idx = 0;
            for (long e = 1; e <= inner.ground(); ++e) {
                if (idx < subset.size() && subset[idx] == e) ++idx;
                else complement.push_back(e);
            }
            return static_cast<long>(subset.size()) + inner.rank_of(complement) - inner.rank();
        }
        case Node::Kind::DirectSum: {
            long r = 0;
            long offset = 0;
            size_t idx = 0;
            for (const auto& b : node_->blocks) {
                long g = b.ground();
                GroundSubset local;
                while (idx < subset.size() && subset[idx] <= offset + g) {
                    local.push_back(subset[idx] - offset);
                    ++idx;
                }
                r += b.rank_of(local);
                offset += g;
            }
            return r;
        }
    }
    return 0;
}

namespace {

void enumerate_dominated(const GroundSubset& S, size_t i, long min_element,
                         GroundSubset& cur, std::vector<GroundSubset>& out) {
    if (i == S.size()) {
        out.push_back(cur);
        return;
    }
    for (long e = min_element; e <= S[i]; ++e) {
        cur.push_back(e);
        enumerate_dominated(S, i + 1, e + 1, cur, out);
        cur.pop_back();
    }
}

void enumerate_k_subsets(long n, long k, long min_element, GroundSubset& cur,
                         std::vector<GroundSubset>& out) {
    if (static_cast<long>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    long need = k - static_cast<long>(cur.size());
    for (long e = min_element; e <= n - need + 1; ++e) {
        cur.push_back(e);
        enumerate_k_subsets(n, k, e + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<GroundSubset> MatroidExpr::bases(long ground_cap) const {
    if (ground() > ground_cap) throw std::runtime_error("enumeration too large");
    switch (node_->kind) {
        case Node::Kind::Uniform: {
            std::vector<GroundSubset> out;
            GroundSubset cur;
            enumerate_k_subsets(node_->n, node_->k, 1, cur, out);
            return out;
        }
        case Node::Kind::Schubert: {
            std::vector<GroundSubset> out;
            GroundSubset cur;
            enumerate_dominated(node_->spec.ones, 0, 1, cur, out);
            return out;
        }
        case Node::Kind::Dual: {
            MatroidExpr inner(node_->inner);
            std::vector<GroundSubset> out;
            for (const auto& basis : inner.bases(ground_cap)) {
                GroundSubset complement;
                size_t idx = 0;
                for (long e = 1; e <= inner.ground(); ++e) {
                    if (idx < basis.size() && basis[idx] == e) ++idx;
                    else complement.push_back(e);
                }
                out.push_back(std::move(complement));
            }
            std::sort(out.begin(), out.end());
            return out;
        }
        case Node::Kind::DirectSum: {
            std::vector<GroundSubset> out{GroundSubset{}};
            long offset = 0;
            for (const auto& b : node_->blocks) {
                std::vector<GroundSubset> grown;
                auto block_bases = b.bases(ground_cap);
                grown.reserve(out.size() * block_bases.size());
                for (const auto& prefix : out) {
                    for (const auto& bb : block_bases) {
                        GroundSubset combined = prefix;
                        for (long e : bb) combined.push_back(e + offset);
                        grown.push_back(std::move(combined));
                    }
                }
                out = std::move(grown);
                offset += b.ground();
            }
            return out;
        }
    }
    return {};
}

GroundSubset MatroidExpr::closure(const GroundSubset& subset) const {
    long base_rank = rank_of(subset);
    GroundSubset result;
    for (long e = 1; e <= ground(); ++e) {
        if (std::binary_search(subset.begin(), subset.end(), e)) {
            result.push_back(e);
            continue;
        }
        GroundSubset extended = subset;
        extended.insert(std::upper_bound(extended.begin(), extended.end(), e), e);
        if (rank_of(extended) == base_rank) result.push_back(e);
    }
    return result;
}

std::vector<long> MatroidExpr::flats_by_rank(long ground_cap) const {
    const long g = ground();
    if (g > ground_cap) throw std::runtime_error("enumeration too large");
    std::set<GroundSubset> flats;
    for (unsigned long mask = 0; mask < (1UL << g); ++mask) {
        GroundSubset subset;
        for (long e = 0; e < g; ++e)
            if (mask & (1UL << e)) subset.push_back(e + 1);
        flats.insert(closure(subset));
    }
    std::vector<long> counts(static_cast<size_t>(rank()) + 1, 0);
    for (const auto& flat : flats) ++counts[static_cast<size_t>(rank_of(flat))];
    return counts;
}

MatroidExpr MatroidExpr::dual() const {
    switch (node_->kind) {
        case Node::Kind::Uniform: return uniform(node_->n - node_->k, node_->n);
        case Node::Kind::Dual: return MatroidExpr(node_->inner);
        case Node::Kind::DirectSum: {
            std::vector<MatroidExpr> duals;
            duals.reserve(node_->blocks.size());
            for (const auto& b : node_->blocks) duals.push_back(b.dual());
            return direct_sum(std::move(duals));
        }
        case Node::Kind::Schubert: {
            auto node = std::make_shared<Node>();
            node->kind = Node::Kind::Dual;
            node->inner = node_;
            return MatroidExpr(std::move(node));
        }
    }
    throw std::logic_error("unreachable");
}

std::string MatroidExpr::str() const {
    switch (node_->kind) {
        case Node::Kind::Uniform:
            return "U(" + std::to_string(node_->k) + "," + std::to_string(node_->n) + ")";
        case Node::Kind::Schubert: {
            std::string out = "SM[";
            for (size_t i = 0; i < node_->spec.runs.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(node_->spec.runs[i]);
            }
            return out + "]";
        }
        case Node::Kind::Dual: return MatroidExpr(node_->inner).str() + "*";
        case Node::Kind::DirectSum: {
            std::string out;
            for (size_t i = 0; i < node_->blocks.size(); ++i) {
                if (i) out += "+";
                out += node_->blocks[i].str();
            }
            return out;
        }
    }
    return "";
}

}  // namespace catval
