#include "approxdct/search.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace approxdct {

namespace {

// Parameter values doubled to integers {-4,-2,-1,0,1,2,4}, domain order.
constexpr int kHalves[7] = {-4, -2, -1, 0, 1, 2, 4};

// Orthogonality in doubled-integer arithmetic: a3=a2, a5=a1, a7=a6, a8=a4,
// a1*a7 = a2*a8, a3*a5 = a4*a6.
bool orthogonal_digits(const int h[8]) {
    return h[2] == h[1] && h[4] == h[0] && h[6] == h[5] && h[7] == h[3] &&
           h[0] * h[6] == h[1] * h[7] && h[2] * h[4] == h[3] * h[5];
}

ParamVector vector_from_digits(const int digits[8]) {
    std::array<Dyadic, kNumParams> a;
    for (int i = 0; i < 8; ++i) a[i] = param_domain()[digits[i]];
    return ParamVector(a);
}

std::vector<ParamVector> scan_range(std::uint64_t begin, std::uint64_t end) {
    std::vector<ParamVector> found;
    int digits[8];
    int h[8];
    for (std::uint64_t rank = begin; rank < end; ++rank) {
        std::uint64_t r = rank;
        for (int i = 7; i >= 0; --i) {
            digits[i] = static_cast<int>(r % 7);
            r /= 7;
        }
        for (int i = 0; i < 8; ++i) h[i] = kHalves[digits[i]];
        if (orthogonal_digits(h)) found.push_back(vector_from_digits(digits));
    }
    return found;
}

int clamp_workers(int workers) {
    if (workers < 1) throw std::invalid_argument("worker count must be positive");
    return std::min(workers, 64);
}

// Front of a union equals the front of the merged per-chunk fronts
// (dominance is transitive), so chunked filtering stays exact.
std::vector<std::size_t> nondominated(const std::vector<ObjectiveVector>& objs,
                                      const std::vector<std::size_t>& candidates) {
    std::vector<std::size_t> keep;
    for (const std::size_t i : candidates) {
        bool dominated = false;
        for (const std::size_t j : candidates)
            if (j != i && dominates(objs[j], objs[i])) {
                dominated = true;
                break;
            }
        if (!dominated) keep.push_back(i);
    }
    return keep;
}

}  // namespace

ObjectiveVector objective_vector(const MetricsReport& r) {
    return ObjectiveVector{{r.total_error_energy, r.mse, -r.coding_gain_db,
                            -r.transform_efficiency, static_cast<double>(r.adds),
                            static_cast<double>(r.shifts)}};
}

bool dominates(const ObjectiveVector& u, const ObjectiveVector& v) {
    bool strict = false;
    for (std::size_t i = 0; i < u.v.size(); ++i) {
        if (u.v[i] > v.v[i]) return false;
        if (u.v[i] < v.v[i]) strict = true;
    }
    return strict;
}

std::vector<ParamVector> enumerate_orthogonal(SearchMode mode, int workers) {
    workers = clamp_workers(workers);
    if (mode == SearchMode::pruned) {
        // Free digits a1, a2, a4, a6; the remaining four are copies, leaving
        // two bilinear conditions. Loop order matches full-vector ordering.
        std::vector<ParamVector> found;
        for (int d1 = 0; d1 < 7; ++d1)
            for (int d2 = 0; d2 < 7; ++d2)
                for (int d4 = 0; d4 < 7; ++d4)
                    for (int d6 = 0; d6 < 7; ++d6) {
                        const int h1 = kHalves[d1], h2 = kHalves[d2], h4 = kHalves[d4],
                                  h6 = kHalves[d6];
                        if (h1 * h2 != h4 * h6 || h1 * h6 != h2 * h4) continue;
                        const int digits[8] = {d1, d2, d2, d4, d1, d6, d6, d4};
                        found.push_back(vector_from_digits(digits));
                    }
        return found;
    }

    const std::uint64_t total = kSearchSpaceSize;
    std::vector<std::vector<ParamVector>> parts(workers);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t begin = std::min<std::uint64_t>(w * chunk, total);
        const std::uint64_t end = std::min<std::uint64_t>(begin + chunk, total);
        pool.emplace_back([&parts, w, begin, end] { parts[w] = scan_range(begin, end); });
    }
    for (auto& t : pool) t.join();

    std::vector<ParamVector> found;
    for (auto& p : parts) found.insert(found.end(), p.begin(), p.end());
    return found;
}

ParetoFront pareto_search(double rho, SearchMode mode, int workers) {
    workers = clamp_workers(workers);
    const std::vector<ParamVector> candidates = enumerate_orthogonal(mode, workers);

    std::vector<MetricsReport> reports(candidates.size());
    std::vector<ObjectiveVector> objectives(candidates.size());
    {
        std::vector<std::thread> pool;
        const std::size_t chunk = (candidates.size() + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::size_t begin = std::min(static_cast<std::size_t>(w) * chunk,
                                               candidates.size());
            const std::size_t end = std::min(begin + chunk, candidates.size());
            pool.emplace_back([&, begin, end] {
                for (std::size_t i = begin; i < end; ++i) {
                    reports[i] = evaluate(orthonormalize(candidates[i]), rho);
                    objectives[i] = objective_vector(reports[i]);
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    // Local fronts per chunk, merged, then refiltered.
    std::vector<std::size_t> merged;
    {
        const std::size_t chunk = (candidates.size() + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::size_t begin = std::min(static_cast<std::size_t>(w) * chunk,
                                               candidates.size());
            const std::size_t end = std::min(begin + chunk, candidates.size());
            std::vector<std::size_t> local(end > begin ? end - begin : 0);
            for (std::size_t i = begin; i < end; ++i) local[i - begin] = i;
            const auto keep = nondominated(objectives, local);
            merged.insert(merged.end(), keep.begin(), keep.end());
        }
    }
    const std::vector<std::size_t> front_idx = nondominated(objectives, merged);

    // Group candidates sharing a bit-identical objective vector.
    std::map<std::array<double, 6>, FrontMember> groups;
    for (const std::size_t i : front_idx) {
        auto [it, inserted] = groups.try_emplace(objectives[i].v);
        FrontMember& m = it->second;
        if (inserted) {
            m.objectives = objectives[i];
            m.report = reports[i];
        }
        m.params.push_back(candidates[i]);
    }

    ParetoFront front;
    for (auto& [key, member] : groups) {
        std::sort(member.params.begin(), member.params.end(),
                  [](const ParamVector& a, const ParamVector& b) { return a.rank() < b.rank(); });
        // Representative label: published name when the group contains one.
        member.report.label = "a=" + member.params.front().str();
        for (const auto& p : member.params)
            for (const auto& entry : optimal_table())
                if (entry.a == p) member.report.label = entry.label;
        front.members.push_back(std::move(member));
    }
    std::sort(front.members.begin(), front.members.end(),
              [](const FrontMember& a, const FrontMember& b) {
                  const auto ka = std::tie(a.objectives.v[4], a.objectives.v[5], a.objectives.v[0]);
                  const auto kb = std::tie(b.objectives.v[4], b.objectives.v[5], b.objectives.v[0]);
                  return ka != kb ? ka < kb : a.params.front().rank() < b.params.front().rank();
              });

    front.stats.total_enumerated = kSearchSpaceSize;
    front.stats.orthogonal = candidates.size();
    front.stats.front_groups = front.members.size();
    for (const auto& m : front.members) front.stats.front_vectors += m.params.size();
    return front;
}

std::string front_csv(const ParetoFront& front) {
    std::string out = metrics_csv_header() + ",params\n";
    for (const auto& m : front.members) {
        out += metrics_csv_row(m.report) + ",";
        for (std::size_t i = 0; i < m.params.size(); ++i) {
            if (i) out += ';';
            out += m.params[i].str();
        }
        out += '\n';
    }
    return out;
}

std::string front_json(const ParetoFront& front) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& m : front.members) {
        nlohmann::json params = nlohmann::json::array();
        for (const auto& p : m.params) params.push_back(p.str());
        members.push_back({{"metrics", nlohmann::json::parse(metrics_json(m.report))},
                           {"objectives", m.objectives.v},
                           {"params", params}});
    }
    nlohmann::json j{
        {"members", members},
        {"stats",
         {{"total_enumerated", front.stats.total_enumerated},
          {"orthogonal", front.stats.orthogonal},
          {"front_groups", front.stats.front_groups},
          {"front_vectors", front.stats.front_vectors}}},
    };
    return j.dump(2) + "\n";
}

}  // namespace approxdct
