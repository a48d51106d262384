#include <doctest.h>

#include "urm/multiset.hpp"

using namespace urm;

TEST_CASE("multisets keep component order and validate inputs") {
    Multiset ms = Multiset::from_lists(4, {{1, 2}, {3, 4}, {1}});
    CHECK(ms.ground_size() == 4);
    CHECK(ms.size() == 3);
    CHECK(ms.component(0).elements() == std::vector<int>{1, 2});
    CHECK(ms.component(2).elements() == std::vector<int>{1});

    CHECK_THROWS_AS((void)Multiset::from_lists(4, {{}}), malformed_input_error);
    CHECK_THROWS_AS((void)Multiset::from_lists(4, {{5}}), malformed_input_error);
    CHECK_THROWS_AS((void)Multiset(3, {SubsetMask::from_elements(4, {1})}), malformed_input_error);
}

TEST_CASE("element multiplicities and balance") {
    Multiset ms = Multiset::from_lists(3, {{1, 2}, {3}, {1, 3}, {2}});
    CHECK(ms.element_multiplicities() == std::vector<int>{2, 2, 2});
    CHECK(balance_check(ms, 2));
    CHECK(!balance_check(ms, 3));

    Multiset uneven = Multiset::from_lists(3, {{1, 2}, {3}, {1}});
    CHECK(uneven.element_multiplicities() == std::vector<int>{2, 1, 1});
    CHECK(!balance_check(uneven, 2));
}

TEST_CASE("repeated proper masks are detected, repeated full sets are not") {
    CHECK(Multiset::from_lists(2, {{1}, {2}, {1}, {2}}).has_repeated_proper_mask());
    CHECK(!Multiset::from_lists(2, {{1, 2}, {1, 2}, {1, 2}}).has_repeated_proper_mask());
    CHECK(!Multiset::from_lists(3, {{1}, {2}, {3}, {1, 2, 3}}).has_repeated_proper_mask());
    CHECK(Multiset::from_lists(3, {{1, 2}, {3}, {1, 2}, {3}}).has_repeated_proper_mask());
}
