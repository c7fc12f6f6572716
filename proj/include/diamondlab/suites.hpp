#ifndef DIAMONDLAB_SUITES_HPP
#define DIAMONDLAB_SUITES_HPP

#include <string>
#include <vector>

#include "diamondlab/matcore.hpp"

namespace dlab {

/// Configuration for the seeded property sweeps.
struct SuiteConfig {
    std::vector<Eigen::Index> ns = {2, 3, 4};
    int pairs = 1000;        // pair-shaped sweeps, per n
    int antisym_pairs = 200; // constructed two-way pairs
    int roundtrips = 50;     // decompose/make_canonical instances, per n
    int preserver_pairs = 500;
    int negative_runs = 100;
    std::uint64_t seed = 0;
    Tol tol;
};

struct SuiteResult {
    std::string suite;
    std::string check;
    long checked = 0;
    long violations = 0;
    std::string first_counterexample;  // empty when clean

    bool pass() const { return violations == 0; }
};

std::vector<SuiteResult> run_orders_suite(const SuiteConfig& cfg);
std::vector<SuiteResult> run_structure_suite(const SuiteConfig& cfg);
std::vector<SuiteResult> run_preservers_suite(const SuiteConfig& cfg);
std::vector<SuiteResult> run_jordan_suite(const SuiteConfig& cfg);
std::vector<SuiteResult> run_example_suite(const SuiteConfig& cfg);

/// suite name in {orders, structure, preservers, jordan, example, all}
std::vector<SuiteResult> run_suites(const std::string& name, const SuiteConfig& cfg);

std::string format_results(const std::vector<SuiteResult>& results);

/// The worked 2x2 instance: projection a, partial isometry u with
/// a u* a = 0 but u* a != 0.
struct ExamplePair {
    CMat a;
    CMat u;
    CMat b;  // a + u
};
ExamplePair example_pair();

}  // namespace dlab

#endif
