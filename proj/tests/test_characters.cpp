#include "mvv/characters.hpp"

#include "doctest.h"

using namespace mvv;

TEST_CASE("border-strip recursion on small cases") {
    CHECK(chi(Partition{1, 1}, Partition{2}) == -1);
    CHECK(chi(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(chi(Partition(), Partition()) == 1);
    CHECK(chi(Partition{2, 1}, Partition{3}) == -1);
    CHECK_THROWS_AS(chi(Partition{2}, Partition{1}), std::invalid_argument);
}

TEST_CASE("character tables") {
    CharTable t1 = char_table(1);
    CHECK(t1.partitions.size() == 1);
    CHECK(t1.values[0][0] == 1);

    CharTable t2 = char_table(2);
    REQUIRE(t2.partitions.size() == 2);
    CHECK(t2.partitions[0] == Partition{2});
    CHECK(t2.partitions[1] == Partition{1, 1});
    // trivial row: all 1; sign row: -1 on the 2-cycle class
    CHECK(t2.values[0][0] == 1);
    CHECK(t2.values[0][1] == 1);
    CHECK(t2.values[1][0] == -1);
    CHECK(t2.values[1][1] == 1);

    CharTable t3 = char_table(3);
    // row nu = (2,1): dimension 2 on (1^3), 0 on (2,1), -1 on (3)
    REQUIRE(t3.partitions[1] == Partition{2, 1});
    CHECK(t3.values[1][0] == -1);  // class (3)
    CHECK(t3.values[1][1] == 0);   // class (2,1)
    CHECK(t3.values[1][2] == 2);   // class (1,1,1)

    CHECK_THROWS_AS(char_table(kDefaultCharNMax + 1), std::runtime_error);
    CHECK_THROWS_AS(char_table(0), std::invalid_argument);
}

TEST_CASE("oracle examples") {
    CHECK(char_oracle(Partition{2, 1}, Partition{3}) == -1);
    CHECK(char_oracle(Partition{1, 1}, Partition{1, 1}) == 1);
    for (int n = 1; n <= 6; ++n) {
        for (const auto& mu : enumerate_partitions(n)) {
            CHECK(char_oracle(Partition{n}, mu) == 1);  // trivial representation
        }
    }
    CHECK_THROWS_AS(char_oracle(Partition{2}, Partition{1}), std::invalid_argument);
    CHECK_THROWS_AS(char_oracle(Partition{9}, Partition{9}), std::invalid_argument);
}

TEST_CASE("recursion agrees with the oracle through size 6") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& nu : enumerate_partitions(n)) {
            for (const auto& mu : enumerate_partitions(n)) {
                CHECK(chi(nu, mu) == char_oracle(nu, mu));
            }
        }
    }
}

TEST_CASE("orthogonality relations hold exactly through size 6") {
    for (int n = 1; n <= 6; ++n) {
        CharTable t = char_table(n);
        size_t m = t.partitions.size();
        for (size_t r1 = 0; r1 < m; ++r1) {
            for (size_t r2 = 0; r2 < m; ++r2) {
                mpq_class row(0);
                mpz_class col(0);
                for (size_t c = 0; c < m; ++c) {
                    row += mpq_class(t.values[r1][c] * t.values[r2][c]) /
                           mpq_class(z_of(t.partitions[c]));
                    col += t.values[c][r1] * t.values[c][r2];
                }
                CHECK(row == (r1 == r2 ? 1 : 0));
                CHECK(col == (r1 == r2 ? z_of(t.partitions[r1]) : 0));
            }
        }
    }
}

TEST_CASE("dimensions match the hook length formula") {
    CHECK(hook_length_dimension(Partition()) == 1);
    CHECK(hook_length_dimension(Partition{2, 1}) == 2);
    for (int n = 1; n <= 8; ++n) {
        std::vector<int> ones(static_cast<size_t>(n), 1);
        Partition id(ones);
        for (const auto& nu : enumerate_partitions(n)) {
            CHECK(chi(nu, id) == hook_length_dimension(nu));
        }
    }
}

TEST_CASE("kostka counting basics") {
    // K_{nu,(1^n)} is the number of standard tableaux = the dimension.
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> ones(static_cast<size_t>(n), 1);
        for (const auto& nu : enumerate_partitions(n)) {
            CHECK(kostka_number(nu, ones) == hook_length_dimension(nu));
        }
    }
    CHECK(kostka_number(Partition{2, 1}, {2, 1}) == 1);
    CHECK(kostka_number(Partition{2, 1}, {3, 0}) == 0);
    CHECK(kostka_number(Partition{1, 1}, {2}) == 0);  // column-strictness
}
