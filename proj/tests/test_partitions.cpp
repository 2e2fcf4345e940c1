#include <doctest.h>

#include <nlohmann/json.hpp>

#include "hurwitzkit/partitions.hpp"

using namespace hurwitzkit;

TEST_CASE("partition numbers")
{
    const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627};
    for (int d = 0; d <= 20; ++d) {
        CHECK(partition_number(d) == expected[d]);
        if (d <= 14) {
            CHECK(static_cast<long>(enumerate(d).size()) == expected[d]);
        }
    }
}

TEST_CASE("class sizes add up to d!")
{
    for (int d = 1; d <= 9; ++d) {
        Integer total = 0;
        for (const auto& p : enumerate(d)) {
            total += class_size(p);
        }
        CHECK(total == factorial(d));
    }
    CHECK(class_size(Partition({2, 2})) == 3);
    CHECK(aut_count(Partition({1, 1, 2, 2, 2})) == 12);
}

TEST_CASE("partitions are sorted and validated")
{
    const Partition p({3, 1, 2, 1});
    CHECK(p.to_string() == "1,1,2,3");
    CHECK(p.size() == 7);
    CHECK(p.length() == 4);
    CHECK(p.multiplicity(1) == 2);
    CHECK_THROWS_AS(Partition({0, 1}), PreconditionError);
    CHECK_THROWS_AS(ThetaPartition(Partition({1, 2})), PreconditionError);
}

TEST_CASE("parsing and JSON")
{
    CHECK(parse_partition(" 2, 1 ,1") == Partition({1, 1, 2}));
    CHECK_THROWS_AS(parse_partition("1,x"), FormatError);
    CHECK_THROWS_AS(parse_partition("1,-2"), FormatError);
    CHECK(partition_from_json(to_json(Partition({4, 2}))) == Partition({2, 4}));
    CHECK_THROWS_AS(partition_from_json(nlohmann::json("12")), FormatError);
}

TEST_CASE("constrained enumeration")
{
    for (const auto& p : enumerate(8, PartitionConstraint::min_part_2())) {
        CHECK(p.min_part() >= 2);
    }
    for (const auto& p : enumerate(9, PartitionConstraint::min_part_2_with_length(3))) {
        CHECK(p.length() == 3);
    }
    CHECK(enumerate(6, PartitionConstraint::min_part_2_with_length(3)).size() == 1);
}

TEST_CASE("structure-constant index sets")
{
    CHECK(ansatz_thetas(2).size() == 6);
    CHECK(ansatz_thetas(3).size() == 26);
    CHECK(lambda_index(2, Partition({2})) == 2);
    CHECK(lambda_index(2, Partition({2, 3})) == 0);
    CHECK_THROWS_AS(ansatz_thetas(1), PreconditionError);
}
