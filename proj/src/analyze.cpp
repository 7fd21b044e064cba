#include "kroncode/analyze.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace kron {

namespace {

GFMatrix effective_check_matrix(const CodeSpec& spec) {
    // Work with a full-row-rank parity check; dropping dependent rows
    // leaves the code and its cosets unchanged.
    const RrefResult red = rref(spec.H);
    const int r = static_cast<int>(red.pivots.size());
    if (r == spec.H.rows()) return spec.H;
    GFMatrix eff(spec.field, r, spec.H.cols());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < spec.H.cols(); ++j) eff.set(i, j, red.matrix.at(i, j));
    return eff;
}

}  // namespace

SyndromeSpace::SyndromeSpace(const CodeSpec& spec, const AnalyzeOptions& opts)
    : field_(spec.field), check_(effective_check_matrix(spec)) {
    const int q = field_->q();
    std::uint64_t size = 1;
    for (int i = 0; i < check_.rows(); ++i) {
        if (size > opts.budget / q)
            throw BudgetExceeded("syndrome space exceeds budget of " +
                                 std::to_string(opts.budget) + " syndromes");
        size *= static_cast<std::uint64_t>(q);
    }
    if (size > opts.budget)
        throw BudgetExceeded("syndrome space exceeds budget of " +
                             std::to_string(opts.budget) + " syndromes");
    size_ = size;

    scaled_cols_.resize(check_.cols());
    for (int j = 0; j < check_.cols(); ++j) {
        scaled_cols_[j].resize(q);
        const Vec col = check_.col(j);
        for (int e = 1; e < q; ++e) {
            Vec scaled(r());
            for (int i = 0; i < r(); ++i) scaled[i] = field_->mul(e, col[i]);
            scaled_cols_[j][e] = std::move(scaled);
        }
    }
}

std::uint64_t SyndromeSpace::pack(const Vec& digits) const {
    std::uint64_t code = 0;
    for (int d : digits) code = code * field_->q() + static_cast<std::uint64_t>(d);
    return code;
}

Vec SyndromeSpace::unpack(std::uint64_t code) const {
    Vec digits(r());
    for (int i = r() - 1; i >= 0; --i) {
        digits[i] = static_cast<int>(code % field_->q());
        code /= field_->q();
    }
    return digits;
}

std::uint64_t SyndromeSpace::neighbor(std::uint64_t code, int j, int e) const {
    const Vec digits = unpack(code);
    const Vec& delta = scaled_cols_[j][e];
    std::uint64_t out = 0;
    for (int i = 0; i < r(); ++i)
        out = out * field_->q() + static_cast<std::uint64_t>(field_->add(digits[i], delta[i]));
    return out;
}

namespace {

std::uint64_t shifted_code(const Field& f, int q, const Vec& digits, const Vec& delta) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < digits.size(); ++i)
        out = out * q + static_cast<std::uint64_t>(f.add(digits[i], delta[i]));
    return out;
}

}  // namespace

SyndromeGraph syndrome_graph(const CodeSpec& spec, const AnalyzeOptions& opts) {
    SyndromeSpace space(spec, opts);
    const Field& f = *spec.field;
    const int q = f.q();
    const int n = space.n();
    const std::uint64_t size = space.size();

    // Breadth-first search from the zero syndrome over the edges
    // s -> s + e * h_j. The depth of a syndrome is its coset leader weight:
    // a vector of distance l to the code differs from a codeword in l
    // coordinates, so its syndrome is a sum of l scaled columns and is
    // reached in exactly l steps, never fewer.
    constexpr std::uint8_t unseen = 0xFF;
    std::vector<std::uint8_t> depth(size, unseen);
    std::vector<std::uint64_t> frontier{0}, next;
    depth[0] = 0;
    std::uint8_t level = 0;
    while (!frontier.empty()) {
        next.clear();
        for (std::uint64_t code : frontier) {
            const Vec digits = space.unpack(code);
            for (int j = 0; j < n; ++j)
                for (int e = 1; e < q; ++e) {
                    const std::uint64_t nb =
                        shifted_code(f, q, digits, space.scaled_col(j, e));
                    if (depth[nb] == unseen) {
                        depth[nb] = static_cast<std::uint8_t>(level + 1);
                        next.push_back(nb);
                    }
                }
        }
        frontier.swap(next);
        ++level;
    }
    for (std::uint64_t code = 0; code < size; ++code)
        if (depth[code] == unseen)
            throw std::logic_error("syndrome space is not spanned by the columns");

    SyndromeGraph graph{std::move(space), std::move(depth), 0, {}};
    graph.rho = static_cast<int>(*std::max_element(graph.depth.begin(), graph.depth.end()));

    // Classify the (q-1)*n neighbors of every syndrome by depth. Neighbor
    // depths are a function of the syndrome alone, because the neighbors of
    // any vector v with syndrome s have the syndromes s + e * h_j and depth
    // equals coset weight.
    graph.counts.assign(size, NeighborCounts{});
    for (std::uint64_t code = 0; code < size; ++code) {
        const Vec digits = graph.space.unpack(code);
        const int d0 = graph.depth[code];
        NeighborCounts& nc = graph.counts[code];
        for (int j = 0; j < n; ++j)
            for (int e = 1; e < q; ++e) {
                const std::uint64_t nb =
                    shifted_code(f, q, digits, graph.space.scaled_col(j, e));
                const int dn = graph.depth[nb];
                if (dn < d0 - 1 || dn > d0 + 1)
                    throw std::logic_error("neighbor depths differ by more than one");
                if (dn < d0)
                    ++nc.down;
                else if (dn == d0)
                    ++nc.same;
                else
                    ++nc.up;
            }
    }
    return graph;
}

int covering_radius(const CodeSpec& spec, const AnalyzeOptions& opts) {
    return syndrome_graph(spec, opts).rho;
}

std::variant<IntersectionArray, RegularityWitness> intersection_array_check(
    const SyndromeGraph& graph) {
    const int rho = graph.rho;

    struct DepthClass {
        bool seen = false;
        std::uint64_t first_code = 0;
        NeighborCounts first_counts;
        std::uint64_t conflict_code = 0;
        bool conflict = false;
    };
    std::vector<DepthClass> classes(rho + 1);

    for (std::uint64_t code = 0; code < graph.space.size(); ++code) {
        DepthClass& cls = classes[graph.depth[code]];
        if (!cls.seen) {
            cls.seen = true;
            cls.first_code = code;
            cls.first_counts = graph.counts[code];
        } else if (!cls.conflict && !(graph.counts[code] == cls.first_counts)) {
            cls.conflict = true;
            cls.conflict_code = code;
        }
    }

    const DepthClass* worst = nullptr;
    int worst_depth = -1;
    for (int l = 0; l <= rho; ++l)
        if (classes[l].conflict &&
            (!worst || classes[l].first_code < worst->first_code)) {
            worst = &classes[l];
            worst_depth = l;
        }
    if (worst) {
        RegularityWitness w;
        w.depth = worst_depth;
        w.syndrome1 = graph.space.unpack(worst->first_code);
        w.syndrome2 = graph.space.unpack(worst->conflict_code);
        w.counts1 = worst->first_counts;
        w.counts2 = graph.counts[worst->conflict_code];
        return w;
    }

    IntersectionArray arr;
    for (int l = 0; l < rho; ++l) arr.b.push_back(classes[l].first_counts.up);
    for (int l = 1; l <= rho; ++l) arr.c.push_back(classes[l].first_counts.down);
    for (int l = 0; l <= rho; ++l) arr.a.push_back(classes[l].first_counts.same);
    return arr;
}

std::variant<IntersectionArray, RegularityWitness> intersection_array_check(
    const CodeSpec& spec, const AnalyzeOptions& opts) {
    return intersection_array_check(syndrome_graph(spec, opts));
}

IntersectionArray product_intersection_array(int q, int m_a, int m_b) {
    if (m_a < 2 || m_b < 2) throw InvalidParam("closed form needs m_a, m_b >= 2");
    const int rho = std::min(m_a, m_b);
    std::int64_t n_a = 0, n_b = 0, power = 1;
    for (int i = 0; i < m_a; ++i) {
        n_a += power;
        power *= q;
    }
    power = 1;
    for (int i = 0; i < m_b; ++i) {
        n_b += power;
        power *= q;
    }

    IntersectionArray arr;
    std::int64_t gauss = 0;  // (q^l - 1) / (q - 1)
    std::int64_t q_pow = 1;  // q^l
    for (int l = 0; l <= rho; ++l) {
        const std::int64_t b = (q - 1) * (n_a - gauss) * (n_b - gauss);
        const std::int64_t c = l == 0 ? 0 : gauss * (q_pow / q);
        if (l < rho) arr.b.push_back(b);
        if (l > 0) arr.c.push_back(c);
        arr.a.push_back((q - 1) * n_a * n_b - c - (l < rho ? b : 0));
        gauss += q_pow;
        q_pow *= q;
    }
    return arr;
}

std::vector<std::vector<BigInt>> coset_weight_distributions(
    const CodeSpec& spec, const SyndromeSpace& space) {
    const Field& f = *spec.field;
    const int q = f.q();
    const int n = space.n();
    const std::uint64_t size = space.size();

    // One coordinate at a time: cell (s, w) counts the prefix assignments
    // with syndrome contribution s and weight w. After all n coordinates the
    // table holds the weight distribution of every coset.
    std::vector<std::vector<BigInt>> cur(size, std::vector<BigInt>(n + 1));
    cur[0][0] = 1;
    std::vector<std::vector<BigInt>> next(size, std::vector<BigInt>(n + 1));
    for (int j = 0; j < n; ++j) {
        for (auto& row : next) std::fill(row.begin(), row.end(), BigInt(0));
        for (std::uint64_t code = 0; code < size; ++code) {
            const Vec digits = space.unpack(code);
            for (int w = 0; w <= j; ++w) {
                const BigInt& v = cur[code][w];
                if (v == 0) continue;
                next[code][w] += v;
                for (int e = 1; e < q; ++e) {
                    const std::uint64_t target =
                        shifted_code(f, q, digits, space.scaled_col(j, e));
                    next[target][w + 1] += v;
                }
            }
        }
        cur.swap(next);
    }
    return cur;
}

std::vector<std::vector<BigInt>> coset_weight_distributions(
    const CodeSpec& spec, const AnalyzeOptions& opts) {
    AnalyzeOptions gate = opts;
    const int n = spec.H.cols();
    gate.budget = opts.budget / std::max(1, n);  // pre: q^r * n within budget
    SyndromeSpace space(spec, gate);
    return coset_weight_distributions(spec, space);
}

DistributionRegularity distribution_regularity(
    const SyndromeGraph& graph, const std::vector<std::vector<BigInt>>& dists) {
    struct DepthClass {
        bool seen = false;
        std::uint64_t first_code = 0;
        bool conflict = false;
        std::uint64_t conflict_code = 0;
    };
    std::vector<DepthClass> classes(graph.rho + 1);
    for (std::uint64_t code = 0; code < graph.space.size(); ++code) {
        DepthClass& cls = classes[graph.depth[code]];
        if (!cls.seen) {
            cls.seen = true;
            cls.first_code = code;
        } else if (!cls.conflict && dists[code] != dists[cls.first_code]) {
            cls.conflict = true;
            cls.conflict_code = code;
        }
    }
    DistributionRegularity out;
    out.regular = true;
    const DepthClass* worst = nullptr;
    for (const DepthClass& cls : classes)
        if (cls.conflict && (!worst || cls.first_code < worst->first_code)) worst = &cls;
    if (worst) {
        out.regular = false;
        out.witness = {worst->first_code, worst->conflict_code};
    }
    return out;
}

std::vector<BigInt> macwilliams_transform(const std::vector<BigInt>& mu, int n,
                                          int q, const BigInt& code_size) {
    if (static_cast<int>(mu.size()) != n + 1)
        throw DimensionMismatch("distribution must have n + 1 entries");
    if (code_size <= 0) throw InvalidParam("code size must be positive");

    std::vector<std::vector<BigInt>> binom(n + 1, std::vector<BigInt>(n + 1));
    for (int i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : BigInt(0));
    }
    std::vector<BigInt> qm1_pow(n + 1);
    qm1_pow[0] = 1;
    for (int i = 1; i <= n; ++i) qm1_pow[i] = qm1_pow[i - 1] * (q - 1);

    std::vector<BigInt> out(n + 1);
    for (int i = 0; i <= n; ++i) {
        BigInt total = 0;
        for (int j = 0; j <= n; ++j) {
            if (mu[j] == 0) continue;
            BigInt k = 0;  // q-ary Krawtchouk K_i(j)
            for (int h = 0; h <= i; ++h) {
                if (h > j || i - h > n - j) continue;
                const BigInt term = binom[j][h] * binom[n - j][i - h] * qm1_pow[i - h];
                if (h % 2)
                    k -= term;
                else
                    k += term;
            }
            total += mu[j] * k;
        }
        if (total % code_size != 0 || total < 0)
            throw NonIntegerResult("transform entry " + std::to_string(i) +
                                   " is not a non-negative integer");
        out[i] = total / code_size;
    }
    return out;
}

std::set<int> dual_weights(const CodeSpec& spec, const AnalyzeOptions& opts) {
    SyndromeSpace space(spec, opts);
    const Field& f = *spec.field;
    const int n = space.n();
    std::set<int> weights;
    for (std::uint64_t code = 1; code < space.size(); ++code) {
        const Vec digits = space.unpack(code);
        Vec word(n, 0);
        for (int i = 0; i < space.r(); ++i) {
            if (digits[i] == 0) continue;
            for (int j = 0; j < n; ++j)
                word[j] = f.add(word[j], f.mul(digits[i], space.check().at(i, j)));
        }
        weights.insert(weight(word));
    }
    weights.erase(0);
    return weights;
}

int outer_distance(const CodeSpec& spec, const AnalyzeOptions& opts) {
    return static_cast<int>(dual_weights(spec, opts).size());
}

UniformPackingResult uniform_packing_check(
    const SyndromeGraph& graph, const std::vector<std::vector<BigInt>>& dists) {
    const int rho = graph.rho;

    // One equation per distinct coset profile: sum_k alpha_k mu_k(D) = 1.
    std::set<std::vector<BigInt>> profiles;
    for (std::uint64_t code = 0; code < graph.space.size(); ++code)
        profiles.insert(std::vector<BigInt>(dists[code].begin(),
                                            dists[code].begin() + rho + 1));

    std::vector<std::vector<Rational>> mat;
    for (const auto& profile : profiles) {
        std::vector<Rational> row(rho + 2);
        for (int kk = 0; kk <= rho; ++kk) row[kk] = Rational(profile[kk]);
        row[rho + 1] = 1;
        mat.push_back(std::move(row));
    }

    // Exact Gauss-Jordan over the rationals; a floating or least-squares
    // solve would turn an algebraic yes/no into a tolerance question.
    std::vector<int> pivots;
    int lead = 0;
    const int rows = static_cast<int>(mat.size());
    for (int col = 0; col <= rho && lead < rows; ++col) {
        int pivot = -1;
        for (int i = lead; i < rows; ++i)
            if (mat[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(mat[lead], mat[pivot]);
        const Rational scale = mat[lead][col];
        for (auto& x : mat[lead]) x /= scale;
        for (int i = 0; i < rows; ++i) {
            if (i == lead || mat[i][col] == 0) continue;
            const Rational factor = mat[i][col];
            for (int j = col; j <= rho + 1; ++j) mat[i][j] -= factor * mat[lead][j];
        }
        pivots.push_back(col);
        ++lead;
    }

    UniformPackingResult out;
    for (int i = lead; i < rows; ++i)
        if (mat[i][rho + 1] != 0) return out;  // inconsistent: not packed
    out.packed = true;
    out.alpha.assign(rho + 1, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) out.alpha[pivots[i]] = mat[i][rho + 1];
    return out;
}

UniformPackingResult uniform_packing_check(const CodeSpec& spec,
                                           const AnalyzeOptions& opts) {
    const SyndromeGraph graph = syndrome_graph(spec, opts);
    return uniform_packing_check(graph, coset_weight_distributions(spec, graph.space));
}

namespace {

std::optional<int> exhaustive_min_distance(const CodeSpec& spec,
                                           const AnalyzeOptions& opts) {
    const Field& f = *spec.field;
    const int q = f.q();
    const std::vector<Vec> basis = kernel_basis(spec.H);
    std::uint64_t words = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (words > opts.budget / q) return std::nullopt;
        words *= static_cast<std::uint64_t>(q);
    }
    int best = spec.n + 1;
    for (std::uint64_t code = 1; code < words; ++code) {
        Vec word(spec.n, 0);
        std::uint64_t rest = code;
        for (const Vec& b : basis) {
            const int digit = static_cast<int>(rest % q);
            rest /= q;
            if (digit == 0) continue;
            for (int j = 0; j < spec.n; ++j)
                word[j] = f.add(word[j], f.mul(digit, b[j]));
        }
        best = std::min(best, weight(word));
    }
    if (best > spec.n) return std::nullopt;  // trivial code, no nonzero word
    return best;
}

}  // namespace

AnalysisReport analyze_code(const CodeSpec& spec, const AnalyzeOptions& opts) {
    AnalysisReport rep;
    rep.family = spec.family;
    rep.q = spec.field->q();
    rep.n = spec.n;
    rep.k = spec.k;
    rep.params = spec.params;
    rep.d = min_distance_is_3(spec) ? std::optional<int>(3)
                                    : exhaustive_min_distance(spec, opts);

    const SyndromeGraph graph = syndrome_graph(spec, opts);
    rep.rho = graph.rho;

    if (graph.space.size() > opts.budget / std::max(1, spec.n))
        throw BudgetExceeded("coset distribution table exceeds budget");
    const auto dists = coset_weight_distributions(spec, graph.space);

    const auto verdict = intersection_array_check(graph);
    const DistributionRegularity dr = distribution_regularity(graph, dists);
    rep.completely_regular = std::holds_alternative<IntersectionArray>(verdict);
    if (rep.completely_regular != dr.regular)
        throw std::logic_error("neighbor-count and distribution regularity disagree");
    if (rep.completely_regular)
        rep.intersection_array = std::get<IntersectionArray>(verdict);
    else
        rep.witness = std::get<RegularityWitness>(verdict);

    rep.dual_weight_set = dual_weights(spec, opts);
    rep.s = static_cast<int>(rep.dual_weight_set.size());

    // Cross-check the dual weights against the MacWilliams transform of the
    // code's own weight distribution (the zero coset).
    BigInt code_size = 0;
    for (const BigInt& x : dists[0]) code_size += x;
    const std::vector<BigInt> dual_dist =
        macwilliams_transform(dists[0], spec.n, rep.q, code_size);
    std::set<int> from_transform;
    for (int i = 1; i <= spec.n; ++i)
        if (dual_dist[i] != 0) from_transform.insert(i);
    if (from_transform != rep.dual_weight_set)
        throw std::logic_error("dual weights disagree with the MacWilliams transform");

    const UniformPackingResult up = uniform_packing_check(graph, dists);
    rep.uniformly_packed = up.packed;
    if (up.packed) rep.alpha = up.alpha;
    return rep;
}

CounterexampleCase counterexample_case_from_name(const std::string& name) {
    if (name == "binary28") return CounterexampleCase::binary28;
    if (name == "ternary12") return CounterexampleCase::ternary12;
    throw InvalidParam("unknown counterexample case: " + name);
}

std::string counterexample_case_name(CounterexampleCase c) {
    return c == CounterexampleCase::binary28 ? "binary28" : "ternary12";
}

CounterexampleReport reproduce_counterexample(CounterexampleCase which) {
    CodeSpec spec = which == CounterexampleCase::binary28 ? kron_up_code(2, 4, 3)
                                                          : kron_up_code(3, 3, 2);
    Vec x1(spec.n, 0), x2(spec.n, 0);
    const int n_b = spec.B->cols();
    if (which == CounterexampleCase::binary28) {
        x1[0] = 1;
        x1[n_b] = 1;  // second block, first position
        x2[0] = 1;
        x2[n_b + 1] = 1;
    } else {
        x1[0] = 1;
        x1[n_b] = 2;
        x2[0] = 1;
        x2[n_b + 1] = 1;
    }

    const SyndromeGraph graph = syndrome_graph(spec);
    const Field& f = *spec.field;
    const int q = f.q();

    auto inspect = [&](const Vec& x, int& distance, int& c2) {
        const std::uint64_t code = graph.space.pack(syndrome_of(spec, x));
        distance = graph.depth[code];
        const Vec digits = graph.space.unpack(code);
        c2 = 0;
        for (int j = 0; j < spec.n; ++j)
            for (int e = 1; e < q; ++e)
                if (graph.depth[shifted_code(f, q, digits, graph.space.scaled_col(j, e))] == 1)
                    ++c2;
    };

    CounterexampleReport rep;
    rep.which = which;
    rep.x1 = std::move(x1);
    rep.x2 = std::move(x2);
    inspect(rep.x1, rep.distance1, rep.c2_x1);
    inspect(rep.x2, rep.distance2, rep.c2_x2);
    rep.spec = std::move(spec);
    return rep;
}

}  // namespace kron
