#include <currentlab/errors.hpp>
#include <currentlab/tropical.hpp>

#include <algorithm>
#include <atomic>
#include <climits>
#include <mutex>
#include <numeric>
#include <thread>

namespace currentlab {

namespace {

void require_square(const TropicalMatrix& m) {
    if (m.empty()) throw ContractError("tropical matrix must be at least 1x1");
    for (const auto& row : m)
        if (row.size() != m.size()) throw ContractError("tropical matrix must be square");
}

// Optimal assignment maximizing the sum; forbidden cells carry `big` cost.
// Returns the column chosen for each row.
std::vector<size_t> hungarian_max(const TropicalMatrix& m, const Rational& big) {
    const size_t n = m.size();
    auto cost = [&](size_t i, size_t j) -> Rational { return m[i][j] ? Rational(-*m[i][j]) : big; };
    std::vector<Rational> u(n + 1, Rational(0)), v(n + 1, Rational(0));
    std::vector<size_t> p(n + 1, 0), way(n + 1, 0);
    for (size_t i = 1; i <= n; ++i) {
        p[0] = i;
        size_t j0 = 0;
        std::vector<std::optional<Rational>> minv(n + 1);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            size_t i0 = p[j0], j1 = 0;
            std::optional<Rational> delta;
            for (size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                Rational cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (!minv[j] || cur < *minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (!delta || *minv[j] < *delta) {
                    delta = *minv[j];
                    j1 = j;
                }
            }
            for (size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += *delta;
                    v[j] -= *delta;
                } else {
                    *minv[j] -= *delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<size_t> col(n);
    for (size_t j = 1; j <= n; ++j) col[p[j] - 1] = j - 1;
    return col;
}

TropicalEntry perm_sum(const TropicalMatrix& m, const std::vector<size_t>& sigma) {
    Rational s = 0;
    for (size_t i = 0; i < sigma.size(); ++i) {
        if (!m[i][sigma[i]]) return std::nullopt;
        s += *m[i][sigma[i]];
    }
    return s;
}

}  // namespace

TropicalDet tropical_det_exhaustive(const TropicalMatrix& m) {
    require_square(m);
    std::vector<size_t> sigma(m.size());
    std::iota(sigma.begin(), sigma.end(), 0);
    TropicalDet out;
    size_t ties = 0;
    do {
        auto s = perm_sum(m, sigma);
        if (!s) continue;
        if (!out.value || *s > *out.value) {
            out.value = s;
            out.argmax = {sigma};
            ties = 1;
        } else if (*s == *out.value) {
            if (out.argmax.size() < 2) out.argmax.push_back(sigma);
            ++ties;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    out.unique_argmax = out.value.has_value() && ties == 1;
    return out;
}

TropicalDet tropical_det_assignment(const TropicalMatrix& m) {
    require_square(m);
    const size_t n = m.size();
    Rational big = 1;
    for (const auto& row : m)
        for (const auto& e : row)
            if (e) big += abs(*e);
    big *= static_cast<long>(2 * n + 2);
    auto best = hungarian_max(m, big);
    TropicalDet out;
    out.value = perm_sum(m, best);
    if (!out.value) return out;
    out.argmax = {best};
    out.unique_argmax = true;
    for (size_t i = 0; i < n; ++i) {
        TropicalMatrix cut = m;
        cut[i][best[i]] = std::nullopt;
        auto alt = hungarian_max(cut, big);
        auto s = perm_sum(cut, alt);
        if (s && *s == *out.value) {
            out.unique_argmax = false;
            out.argmax.push_back(alt);
            break;
        }
    }
    return out;
}

TropicalDet tropical_det(const TropicalMatrix& m) {
    require_square(m);
    return m.size() <= 7 ? tropical_det_exhaustive(m) : tropical_det_assignment(m);
}

std::optional<std::vector<Chord>> forbidden_scan(const DiscreteCurrent& mu, int n) {
    if (n < 1) throw ContractError("forbidden_scan needs n >= 1");
    const size_t need = static_cast<size_t>(n - 1);
    for (size_t a = 0; a < mu.size(); ++a) {
        const Chord& c1 = mu.chord(a);
        const Rational y1 = offset(c1.src(), c1.dst());
        struct Cand {
            Rational s, d;
            size_t idx;
        };
        std::vector<Cand> cands;
        for (size_t b = 0; b < mu.size(); ++b) {
            Rational s = offset(c1.src(), mu.chord(b).src());
            Rational d = offset(c1.src(), mu.chord(b).dst());
            if (s > 0 && s < y1 && d > y1) cands.push_back({s, d, b});
        }
        if (need == 0) return std::vector<Chord>{c1};
        std::sort(cands.begin(), cands.end(), [](const Cand& l, const Cand& r) { return l.s < r.s; });
        std::vector<size_t> len(cands.size(), 1), prev(cands.size(), SIZE_MAX);
        for (size_t i = 0; i < cands.size(); ++i) {
            for (size_t j = 0; j < i; ++j)
                if (cands[j].s < cands[i].s && cands[j].d < cands[i].d && len[j] + 1 > len[i]) {
                    len[i] = len[j] + 1;
                    prev[i] = j;
                }
            if (len[i] >= need) {
                std::vector<size_t> chain;
                for (size_t k = i; k != SIZE_MAX && chain.size() < need; k = prev[k]) chain.push_back(k);
                std::reverse(chain.begin(), chain.end());
                std::vector<Chord> out{c1};
                for (size_t k : chain) out.push_back(mu.chord(cands[k].idx));
                return out;
            }
        }
    }
    return std::nullopt;
}

TropicalMatrix gap_potential_matrix(const HolonomyContext& ctx) {
    auto gaps = sample_gaps(ctx.mu());
    TropicalMatrix m(gaps.size(), std::vector<TropicalEntry>(gaps.size()));
    for (size_t i = 0; i < gaps.size(); ++i)
        for (size_t j = 0; j < gaps.size(); ++j)
            if (i != j) m[i][j] = potential(ctx, gaps[i], gaps[j]);
    return m;
}

namespace {

std::vector<std::vector<size_t>> combinations(size_t g, size_t k) {
    std::vector<std::vector<size_t>> out;
    std::vector<size_t> c(k);
    std::iota(c.begin(), c.end(), 0);
    while (true) {
        out.push_back(c);
        size_t i = k;
        while (i > 0 && c[i - 1] == g - k + i - 1) --i;
        if (i == 0) break;
        ++c[i - 1];
        for (size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

struct Found {
    size_t row_combo, col_combo;
    std::vector<size_t> perm;
};

// Scan over one block of row combinations. Returns the first violation found.
template <class Eval>
std::optional<Found> scan_rows(size_t r, const std::vector<std::vector<size_t>>& combos, Eval&& eval) {
    for (size_t c = 0; c < combos.size(); ++c) {
        auto perm = eval(combos[r], combos[c]);
        if (perm) return Found{r, c, *perm};
    }
    return std::nullopt;
}

}  // namespace

RankReport certify_tropical_rank(const HolonomyContext& ctx, int n, const CertifyOptions& opts) {
    if (n < 1) throw ContractError("rank needs n >= 1");
    RankReport report;
    if (ctx.mu().empty()) return report;
    auto gaps = sample_gaps(ctx.mu());
    const size_t k = static_cast<size_t>(n) + 1;
    if (gaps.size() < k) {
        report.vacuous = true;
        return report;
    }
    const TropicalMatrix full = gap_potential_matrix(ctx);
    const size_t g = gaps.size();

    // Integer image of the matrix when it fits comfortably in 64 bits.
    mpz_class lcm_den = 1;
    for (const auto& row : full)
        for (const auto& e : row)
            if (e) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), e->get_den_mpz_t());
    bool fast = k <= 7;
    std::vector<long long> scaled(g * g, LLONG_MIN);
    for (size_t i = 0; i < g && fast; ++i)
        for (size_t j = 0; j < g; ++j) {
            if (!full[i][j]) continue;
            mpz_class v = full[i][j]->get_num() * (lcm_den / full[i][j]->get_den());
            if (abs(v) > mpz_class(1) << 40) {
                fast = false;
                break;
            }
            scaled[i * g + j] = v.get_si();
        }
    std::vector<std::vector<size_t>> perms;
    if (fast) {
        std::vector<size_t> s(k);
        std::iota(s.begin(), s.end(), 0);
        do perms.push_back(s);
        while (std::next_permutation(s.begin(), s.end()));
    }

    auto eval = [&](const std::vector<size_t>& rows, const std::vector<size_t>& cols) -> std::optional<std::vector<size_t>> {
        if (fast) {
            long long best = LLONG_MIN;
            size_t count = 0, arg = 0;
            for (size_t p = 0; p < perms.size(); ++p) {
                long long s = 0;
                bool finite = true;
                for (size_t i = 0; i < k; ++i) {
                    long long e = scaled[rows[i] * g + cols[perms[p][i]]];
                    if (e == LLONG_MIN) {
                        finite = false;
                        break;
                    }
                    s += e;
                }
                if (!finite) continue;
                if (count == 0 || s > best) {
                    best = s;
                    count = 1;
                    arg = p;
                } else if (s == best) {
                    ++count;
                }
            }
            if (count == 1) return perms[arg];
            return std::nullopt;
        }
        TropicalMatrix sub(k, std::vector<TropicalEntry>(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) sub[i][j] = full[rows[i]][cols[j]];
        auto det = tropical_det(sub);
        if (det.unique_argmax) return det.argmax.front();
        return std::nullopt;
    };

    const auto combos = combinations(g, k);
    std::optional<Found> found;
    const unsigned threads = std::max(1u, opts.threads);
    if (threads == 1) {
        for (size_t r = 0; r < combos.size() && !found; ++r) found = scan_rows(r, combos, eval);
    } else {
        std::atomic<size_t> next{0}, best{SIZE_MAX};
        std::mutex mu;
        auto work = [&] {
            while (true) {
                size_t r = next.fetch_add(1);
                if (r >= combos.size()) return;
                if (opts.deterministic ? r > best.load() : best.load() != SIZE_MAX) return;
                auto f = scan_rows(r, combos, eval);
                if (!f) continue;
                std::lock_guard<std::mutex> lock(mu);
                if (!found || f->row_combo < found->row_combo) found = f;
                if (r < best.load()) best.store(r);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    const unsigned long long total = static_cast<unsigned long long>(combos.size()) * combos.size();
    if (!found) {
        report.tuples_checked = total;
        return report;
    }
    report.certified = false;
    report.tuples_checked = static_cast<unsigned long long>(found->row_combo) * combos.size() + found->col_combo + 1;
    RankWitness w;
    const auto& rows = combos[found->row_combo];
    const auto& cols = combos[found->col_combo];
    Rational value = 0;
    for (size_t i = 0; i < k; ++i) {
        w.xs.push_back(gaps[rows[i]]);
        w.ys.push_back(gaps[cols[i]]);
        value += *full[rows[i]][cols[found->perm[i]]];
    }
    w.permutation = found->perm;
    w.value = value;
    report.witness = w;
    return report;
}

}  // namespace currentlab
