#ifndef APPROXDCT_SEARCH_HPP
#define APPROXDCT_SEARCH_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "approxdct/metrics.hpp"
#include "approxdct/transform_class.hpp"

namespace approxdct {

inline constexpr std::uint64_t kSearchSpaceSize = 5764801;  // 7^8

enum class SearchMode { scan, pruned };

/// The six minimized objectives: error energy, MSE, -coding gain,
/// -efficiency, additions, shifts.
struct ObjectiveVector {
    std::array<double, 6> v{};
    friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
};

ObjectiveVector objective_vector(const MetricsReport& r);

/// Weak Pareto dominance: u <= v componentwise with at least one strict
/// improvement. Exact double comparison, no epsilon.
bool dominates(const ObjectiveVector& u, const ObjectiveVector& v);

/// One non-dominated objective vector plus every parameter vector attaining it.
struct FrontMember {
    ObjectiveVector objectives;
    MetricsReport report;
    std::vector<ParamVector> params;
};

struct SearchStats {
    std::uint64_t total_enumerated = 0;  // search-space size covered
    std::uint64_t orthogonal = 0;
    std::size_t front_groups = 0;   // distinct objective vectors on the front
    std::size_t front_vectors = 0;  // parameter vectors on the front
};

struct ParetoFront {
    std::vector<FrontMember> members;  // sorted by (adds, shifts, error energy)
    SearchStats stats;
};

/// Every orthogonal parameter vector, in lexicographic order over the
/// admissible-value ordering. `scan` walks all 7^8 candidates; `pruned`
/// enumerates the solution set of the orthogonality constraint system
/// (a3=a2, a5=a1, a7=a6, a8=a4, a1*a2=a4*a6, a1*a6=a2*a4). Both cover the
/// same space and must return identical lists.
std::vector<ParamVector> enumerate_orthogonal(SearchMode mode = SearchMode::pruned,
                                              int workers = 1);

/// Evaluates every orthogonal candidate under the six objectives and keeps
/// the non-dominated set, grouping candidates with bit-identical objective
/// vectors. Deterministic for any worker count.
ParetoFront pareto_search(double rho = kDefaultRho, SearchMode mode = SearchMode::pruned,
                          int workers = 1);

std::string front_csv(const ParetoFront& front);
std::string front_json(const ParetoFront& front);  // members + stats, pretty-printed

}  // namespace approxdct

#endif
