#include <doctest.h>

#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "partasym/exact_count.hpp"
#include "partasym/saddle.hpp"

using namespace partasym;

TEST_CASE("a completed table is safely shareable across concurrent readers") {
    const DistinctTable table(200, 19);
    // serial snapshot to compare against
    std::vector<std::string> expect;
    for (std::int64_t e = 0; e <= 200; e += 7)
        for (std::int64_t n = 0; n <= 19; ++n)
            expect.push_back(table.at(e, n).get_str());

    std::atomic<int> mismatches{0};
    std::vector<std::thread> workers;
    for (int t = 0; t < 8; ++t) {
        workers.emplace_back([&] {
            for (int rep = 0; rep < 20; ++rep) {
                std::size_t i = 0;
                for (std::int64_t e = 0; e <= 200; e += 7)
                    for (std::int64_t n = 0; n <= 19; ++n, ++i)
                        if (table.at(e, n).get_str() != expect[i]) ++mismatches;
            }
        });
    }
    for (auto& w : workers) w.join();
    CHECK(mismatches.load() == 0);
}

TEST_CASE("independent saddle queries run in parallel and stay deterministic") {
    struct Query {
        ModelKind model;
        std::int64_t E, N;
        std::optional<std::int64_t> B;
    };
    std::vector<Query> queries;
    for (std::int64_t e : {500, 1000, 2000, 5000, 12000})
        for (double u : {0.3, 0.6, 0.9}) {
            const std::int64_t n = std::llround(u * std::sqrt(double(e)));
            queries.push_back({ModelKind::distinct, e, n, std::nullopt});
            queries.push_back({ModelKind::unrestricted, e, n, std::nullopt});
            queries.push_back({ModelKind::bounded_distinct, e, n, 2 * e / n + 20 * n});
        }

    std::vector<double> serial;
    for (const Query& q : queries)
        serial.push_back(estimate(q.model, q.E, q.N, q.B).ln_value);

    std::vector<double> parallel(queries.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t) {
        workers.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < queries.size();
                 i = next.fetch_add(1)) {
                const Query& q = queries[i];
                parallel[i] = estimate(q.model, q.E, q.N, q.B).ln_value;
            }
        });
    }
    for (auto& w : workers) w.join();
    for (std::size_t i = 0; i < queries.size(); ++i)
        CHECK(parallel[i] == serial[i]); // bitwise equal, pure functions
}
