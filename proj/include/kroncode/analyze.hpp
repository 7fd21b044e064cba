#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kroncode/construct.hpp"

namespace kron {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct AnalyzeOptions {
    std::uint64_t budget = 1ull << 22;  // max syndrome-space size q^r
};

// Coset enumeration works on syndromes instead of vectors: for a linear
// code the coset weight, the neighbor depths, and the per-distance codeword
// counts of a vector are all functions of its syndrome, which shrinks the
// search space from q^n to q^r. Syndromes are packed into integer codes
// with the first coordinate most significant, so integer order on codes is
// lexicographic order on syndrome vectors.
class SyndromeSpace {
public:
    SyndromeSpace(const CodeSpec& spec, const AnalyzeOptions& opts);

    const GFMatrix& check() const { return check_; }  // full-row-rank parity check
    int r() const { return check_.rows(); }
    int n() const { return check_.cols(); }
    std::uint64_t size() const { return size_; }

    std::uint64_t pack(const Vec& digits) const;
    Vec unpack(std::uint64_t code) const;

    // Digit vector of e * h_j, the syndrome shift of changing coordinate j
    // by e. Requires e != 0.
    const Vec& scaled_col(int j, int e) const { return scaled_cols_[j][e]; }

    // Syndrome of the neighbor v + e * unit_j, given the syndrome of v.
    std::uint64_t neighbor(std::uint64_t code, int j, int e) const;

private:
    FieldPtr field_;
    GFMatrix check_;
    std::uint64_t size_ = 0;
    // scaled columns e * h_j as digit vectors, indexed [j][e]
    std::vector<std::vector<Vec>> scaled_cols_;
};

struct NeighborCounts {
    std::uint32_t down = 0;  // neighbors one level closer to the code
    std::uint32_t same = 0;
    std::uint32_t up = 0;
    bool operator==(const NeighborCounts&) const = default;
};

struct SyndromeGraph {
    SyndromeSpace space;
    std::vector<std::uint8_t> depth;    // coset leader weight per syndrome code
    int rho = 0;                        // covering radius
    std::vector<NeighborCounts> counts;
};

SyndromeGraph syndrome_graph(const CodeSpec& spec, const AnalyzeOptions& opts = {});

int covering_radius(const CodeSpec& spec, const AnalyzeOptions& opts = {});

struct IntersectionArray {
    std::vector<std::int64_t> b;  // b_0 .. b_{rho-1}
    std::vector<std::int64_t> c;  // c_1 .. c_rho
    std::vector<std::int64_t> a;  // a_0 .. a_rho
    bool operator==(const IntersectionArray&) const = default;
};

// Two same-depth syndromes with different neighbor counts; refutes complete
// regularity. The lexicographically smallest such pair is reported.
struct RegularityWitness {
    int depth = 0;
    Vec syndrome1, syndrome2;
    NeighborCounts counts1, counts2;
};

std::variant<IntersectionArray, RegularityWitness> intersection_array_check(
    const SyndromeGraph& graph);
std::variant<IntersectionArray, RegularityWitness> intersection_array_check(
    const CodeSpec& spec, const AnalyzeOptions& opts = {});

// Closed-form intersection array of the Hamming (x) Hamming product code:
// b_l = (q-1) (n_a - (q^l-1)/(q-1)) (n_b - (q^l-1)/(q-1)),
// c_l = ((q^l-1)/(q-1)) q^(l-1),  a_l = (q-1) n_a n_b - b_l - c_l,
// for l = 0..min(m_a, m_b).
IntersectionArray product_intersection_array(int q, int m_a, int m_b);

// Coset weight distributions mu_0..mu_n indexed by syndrome code, computed
// by a dynamic program over coordinates with exact integer counts.
std::vector<std::vector<BigInt>> coset_weight_distributions(
    const CodeSpec& spec, const AnalyzeOptions& opts = {});
std::vector<std::vector<BigInt>> coset_weight_distributions(
    const CodeSpec& spec, const SyndromeSpace& space);

// Complete-regularity verdict from coset weight distributions: within every
// leader-weight class all cosets must share one distribution.
struct DistributionRegularity {
    bool regular = false;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> witness;  // syndrome codes
};
DistributionRegularity distribution_regularity(
    const SyndromeGraph& graph, const std::vector<std::vector<BigInt>>& dists);

// MacWilliams transform of a weight distribution; exact, and the result
// must consist of non-negative integers.
std::vector<BigInt> macwilliams_transform(const std::vector<BigInt>& mu, int n,
                                          int q, const BigInt& code_size);

// Distinct nonzero codeword weights of the dual code, by enumerating the
// row space of the parity check.
std::set<int> dual_weights(const CodeSpec& spec, const AnalyzeOptions& opts = {});
int outer_distance(const CodeSpec& spec, const AnalyzeOptions& opts = {});

// Rational coefficients alpha_0..alpha_rho with
//   sum_k alpha_k * #\{codewords at distance k from v\} = 1  for every v,
// if they exist. Solved exactly over the distinct coset profiles.
struct UniformPackingResult {
    bool packed = false;
    std::vector<Rational> alpha;
};
UniformPackingResult uniform_packing_check(const CodeSpec& spec,
                                           const AnalyzeOptions& opts = {});
UniformPackingResult uniform_packing_check(
    const SyndromeGraph& graph, const std::vector<std::vector<BigInt>>& dists);

struct AnalysisReport {
    Family family = Family::custom;
    int q = 0;
    int n = 0;
    int k = 0;
    std::optional<int> d;  // 3 when verified, exhaustive value when feasible
    std::vector<std::pair<std::string, int>> params;
    int rho = 0;
    int s = 0;
    bool completely_regular = false;
    std::optional<IntersectionArray> intersection_array;  // present iff CR
    std::optional<RegularityWitness> witness;             // present iff not CR
    bool uniformly_packed = false;
    std::vector<Rational> alpha;  // present iff UP
    std::set<int> dual_weight_set;
};

AnalysisReport analyze_code(const CodeSpec& spec, const AnalyzeOptions& opts = {});

enum class CounterexampleCase { binary28, ternary12 };
CounterexampleCase counterexample_case_from_name(const std::string& name);
std::string counterexample_case_name(CounterexampleCase c);

// The two fixed weight-2 vectors, at distance 2 from the code, whose
// differing neighbor counts in C(1) refute complete regularity of the
// repetition (x) Hamming family.
struct CounterexampleReport {
    CounterexampleCase which = CounterexampleCase::binary28;
    CodeSpec spec;
    Vec x1, x2;
    int distance1 = 0, distance2 = 0;  // both must be 2
    int c2_x1 = 0, c2_x2 = 0;          // expected 4 and 2
};

CounterexampleReport reproduce_counterexample(CounterexampleCase which);

}  // namespace kron
