#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "cycliq/genfun.hpp"
#include "cycliq/io_json.hpp"
#include "cycliq/marrays.hpp"
#include "cycliq/trunc_series.hpp"

using namespace cycliq;

TEST_CASE("multiplicity arrays of small weight") {
    auto one = enumerate_marrays(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].mult(1, 1) == 1);

    // weight 2: {m_11 = 2}, {m_12 = 1}, {m_21 = 1}
    auto two = enumerate_marrays(2);
    REQUIRE(two.size() == 3);
    CHECK(two[0].mult(1, 1) == 2);
    CHECK(two[1].mult(1, 2) == 1);
    CHECK(two[2].mult(2, 1) == 1);

    // weight 3: multisets over the keys (1,1),(1,2),(2,1),(1,3),(3,1)
    CHECK(enumerate_marrays(3).size() == 5);
}

TEST_CASE("multiplicity arrays satisfy their invariants and are distinct") {
    for (long long r = 1; r <= 8; ++r) {
        auto arrays = enumerate_marrays(r);
        std::set<std::vector<std::tuple<long long, long long, long long>>> seen;
        for (const auto& M : arrays) {
            CHECK(M.r == r);
            long long weight = 0;
            for (const auto& [i, j, m] : M.entries) {
                CHECK(m >= 1);
                CHECK(i * j <= r);
                weight += i * j * m;
            }
            CHECK(weight == r);
            CHECK(std::is_sorted(M.entries.begin(), M.entries.end()));
            seen.insert(M.entries);
        }
        CHECK(seen.size() == arrays.size());
    }
}

TEST_CASE("partition subfamily") {
    auto two = enumerate_partitions(2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].mult(1, 1) == 2);
    CHECK(two[1].mult(2, 1) == 1);

    CHECK(enumerate_partitions(5).size() == 7);  // p(5) = 7 by direct listing

    for (long long r = 1; r <= 8; ++r)
        for (const auto& M : enumerate_partitions(r)) {
            CHECK(M.is_partition());
            for (const auto& e : M.entries) CHECK(std::get<1>(e) == 1);
        }
}

TEST_CASE("partition counts match the Euler-product generating function") {
    // reciprocal of prod (1 - t^i) = partition generating function
    const long long N = 20;
    using RatSeries = TruncSeries<BigRational>;
    RatSeries prod = RatSeries::one(N);
    for (long long i = 1; i <= N; ++i)
        prod = prod * (RatSeries::one(N) - RatSeries::monomial(BigRational(1), i, N));
    RatSeries pgen = prod.reciprocal();
    for (long long r = 1; r <= N; ++r)
        CHECK(BigRational(static_cast<long long>(enumerate_partitions(r).size())) == pgen.coeff(r));
}

TEST_CASE("row slices") {
    // M = {m_11 = 1, m_21 = 1} of weight 3
    MultiplicityArray M;
    M.r = 3;
    M.entries = {{1, 1, 1}, {2, 1, 1}};
    RowSlice s2 = row_slice(M, 2);
    REQUIRE(s2.multiplicities.size() == 1);
    CHECK(s2.multiplicities[0] == std::make_pair(1LL, 1LL));
    CHECK(s2.r_i == 2);

    MultiplicityArray M2;
    M2.r = 2;
    M2.entries = {{1, 2, 1}};
    RowSlice s1 = row_slice(M2, 1);
    REQUIRE(s1.multiplicities.size() == 1);
    CHECK(s1.multiplicities[0] == std::make_pair(2LL, 1LL));
    CHECK(s1.r_i == 2);

    RowSlice empty = row_slice(M, 9);
    CHECK(empty.multiplicities.empty());
    CHECK(empty.r_i == 0);

    // the row weights of any array sum to its total weight
    for (const auto& A : enumerate_marrays(6)) {
        long long sum = 0;
        for (long long i = 1; i <= 6; ++i) sum += row_slice(A, i).r_i;
        CHECK(sum == 6);
    }
}

TEST_CASE("weighted partition sums") {
    // no weights: 1 for every r
    for (long long r = 1; r <= 15; ++r) CHECK(weighted_partition_sum(r) == BigRational(1));

    // single weight f(m) = m on part size 2, r = 2: only {m_21 = 1} contributes
    PartWeight count2{2, {BigRational(0), BigRational(1)}};
    CHECK(weighted_partition_sum(2, {count2}) == BigRational(1, 2));
    CHECK(weighted_partition_sum(1, {count2}) == BigRational(0));
}

TEST_CASE("weighted sums match their generating-function closed form") {
    // With f_k(m) = m the generating function collapses to (t^k/k)/(1-t):
    // derived by differentiating the exponential series once. The series
    // below is that closed form, computed independently.
    const long long R = 12;
    using RatSeries = TruncSeries<BigRational>;
    RatSeries geo = (RatSeries::one(R) - RatSeries::monomial(BigRational(1), 1, R)).reciprocal();
    for (long long k = 1; k <= 3; ++k) {
        RatSeries expected = geo * RatSeries::monomial(BigRational(1, k), k, R);
        PartWeight countk{k, {BigRational(0), BigRational(1)}};
        for (long long r = 1; r <= R; ++r)
            CHECK(weighted_partition_sum(r, {countk}) == expected.coeff(r));
    }
}

TEST_CASE("two-weight sums match the product of closed forms") {
    // f_1(m) = m and f_2(m) = m together: (t/1)(t^2/2)/(1-t).
    const long long R = 10;
    using RatSeries = TruncSeries<BigRational>;
    RatSeries geo = (RatSeries::one(R) - RatSeries::monomial(BigRational(1), 1, R)).reciprocal();
    RatSeries expected = geo * RatSeries::monomial(BigRational(1), 1, R) *
                         RatSeries::monomial(BigRational(1, 2), 2, R);
    PartWeight w1{1, {BigRational(0), BigRational(1)}};
    PartWeight w2{2, {BigRational(0), BigRational(1)}};
    for (long long r = 1; r <= R; ++r)
        CHECK(weighted_partition_sum(r, {w1, w2}) == expected.coeff(r));
    CHECK_THROWS_AS(weighted_partition_sum(3, {w1, w2, w1}), std::invalid_argument);
}

TEST_CASE("multiplicity array JSON rendering") {
    MultiplicityArray M;
    M.r = 3;
    M.entries = {{1, 1, 1}, {2, 1, 1}};
    json j = render_marray(M);
    CHECK(j.at("r") == 3);
    CHECK(j.at("entries") == json::parse("[[1,1,1],[2,1,1]]"));
}
