#include "grpi/cochar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "grpi/errors.hpp"

namespace grpi {

namespace {

void validate_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) throw InputError("partition parts must be positive");
        if (i > 0 && p[i] > p[i - 1]) throw InputError("partition parts must not increase");
    }
}

std::size_t weight(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), std::size_t{0});
}

void emit_partitions(std::size_t n, std::size_t cap, Partition& prefix,
                     std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(prefix);
        return;
    }
    for (std::size_t part = std::min(cap, n); part >= 1; --part) {
        prefix.push_back(part);
        emit_partitions(n - part, part, prefix, out);
        prefix.pop_back();
    }
}

/// First-column hook numbers: strictly decreasing, one per part.
std::vector<std::size_t> beta_numbers(const Partition& lambda) {
    std::vector<std::size_t> beta(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i)
        beta[i] = lambda[i] + (lambda.size() - 1 - i);
    return beta;
}

Partition from_beta(std::vector<std::size_t> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    Partition lambda;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const std::size_t offset = beta.size() - 1 - i;
        if (beta[i] > offset) lambda.push_back(beta[i] - offset);
    }
    return lambda;
}

long long character_recursive(const Partition& lambda, const std::vector<std::size_t>& mu,
                              std::size_t k) {
    if (k == mu.size()) return lambda.empty() ? 1 : 0;

    static std::mutex mu_lock;
    static std::map<std::pair<Partition, std::vector<std::size_t>>, long long> cache;
    const std::pair<Partition, std::vector<std::size_t>> key(
        lambda, std::vector<std::size_t>(mu.begin() + long(k), mu.end()));
    {
        std::scoped_lock lock(mu_lock);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }

    const std::size_t strip = mu[k];
    const auto beta = beta_numbers(lambda);
    long long total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (beta[i] < strip) continue;
        const std::size_t target = beta[i] - strip;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        std::size_t height = 0;
        for (std::size_t b : beta)
            if (target < b && b < beta[i]) ++height;
        auto next = beta;
        next[i] = target;
        const long long sign = height % 2 == 0 ? 1 : -1;
        total += sign * character_recursive(from_beta(std::move(next)), mu, k + 1);
    }

    std::scoped_lock lock(mu_lock);
    cache.emplace(key, total);
    return total;
}

std::size_t factorial(std::size_t n) {
    std::size_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

std::vector<Partition> partitions_of(std::size_t n) {
    std::vector<Partition> out;
    Partition prefix;
    emit_partitions(n, n == 0 ? 1 : n, prefix, out);
    return out;
}

long long sn_character(const Partition& lambda, const Partition& mu) {
    validate_partition(lambda);
    validate_partition(mu);
    if (weight(lambda) != weight(mu))
        throw InputError("character arguments must partition the same number");
    return character_recursive(lambda, mu, 0);
}

std::size_t class_size(const Partition& mu) {
    validate_partition(mu);
    const std::size_t n = weight(mu);
    std::size_t centralizer = 1;
    std::map<std::size_t, std::size_t> mult;
    for (std::size_t part : mu) {
        centralizer *= part;
        ++mult[part];
    }
    for (const auto& [part, m] : mult) centralizer *= factorial(m);
    return factorial(n) / centralizer;
}

std::vector<std::size_t> class_representative(const Partition& mu) {
    validate_partition(mu);
    std::vector<std::size_t> perm(weight(mu));
    std::size_t base = 0;
    for (std::size_t part : mu) {
        for (std::size_t i = 0; i < part; ++i) perm[base + i] = base + (i + 1) % part;
        base += part;
    }
    return perm;
}

Rational quotient_trace(const QuotientModel& model, const std::vector<std::size_t>& perm) {
    if (perm.size() != model.n) throw InputError("permutation size disagrees with the model");
    Rational trace(0);
    for (const auto& blk : model.blocks) {
        bool stable = true;
        for (std::size_t v = 0; v < model.n && stable; ++v)
            stable = blk.tuple[perm[v]] == blk.tuple[v];
        if (!stable) continue;  // basis words land in a different block
        for (std::size_t j = 0; j < blk.pivots.size(); ++j) {
            const Monomial moved =
                relabel_variables(blk.monomials[blk.pivots[j]], perm);
            trace += model.coordinates(blk, moved)[j];
        }
    }
    return trace;
}

Rational quotient_trace(AlgebraPtr a, const OperatorSpan& h, std::size_t n, bool graded,
                        const std::vector<std::size_t>& perm) {
    return quotient_trace(quotient_model(std::move(a), h, n, graded), perm);
}

std::size_t CocharacterResult::multiplicity(const Partition& lambda) const {
    for (const auto& [p, m] : multiplicities)
        if (p == lambda) return m;
    return 0;
}

CocharacterResult cocharacter(const QuotientModel& model) {
    const std::size_t n = model.n;
    CocharacterResult res;
    res.n = n;

    const auto types = partitions_of(n);
    std::vector<Rational> traces;
    traces.reserve(types.size());
    for (const auto& mu : types)
        traces.push_back(quotient_trace(model, class_representative(mu)));

    const Rational order(long(factorial(n)));
    const Partition ones(n, 1);
    for (const auto& lambda : partitions_of(n)) {
        Rational m(0);
        for (std::size_t i = 0; i < types.size(); ++i)
            m += Rational(long(class_size(types[i]))) * traces[i] *
                 Rational(sn_character(lambda, types[i]));
        m /= order;
        if (!m.is_integer() || m < Rational(0))
            throw CheckError("multiplicity of a partition came out " + m.str() +
                             "; it must be a nonnegative integer");
        const std::size_t count = std::size_t(m.to_long());
        if (count == 0) continue;
        res.multiplicities.emplace_back(lambda, count);
        res.colength += count;
        res.dim_check += count * std::size_t(sn_character(lambda, ones));
    }

    if (res.dim_check != model.dimension())
        throw CheckError("weighted dimension sum " + std::to_string(res.dim_check) +
                         " misses the quotient dimension " +
                         std::to_string(model.dimension()));
    return res;
}

CocharacterResult cocharacter(AlgebraPtr a, const OperatorSpan& h, std::size_t n, bool graded,
                              bool associative) {
    return cocharacter(quotient_model(std::move(a), h, n, graded, associative));
}

}
