#include "budget_list.hpp"

#include "gtest/gtest.h"

namespace voisearch_cli {
namespace {

using Budgets = std::vector<std::uint64_t>;

TEST(BudgetListTest, Grammar) {
  EXPECT_EQ(parse_budgets("32:1024:x2"), (Budgets{32, 64, 128, 256, 512, 1024}));
  EXPECT_EQ(parse_budgets("256:2048:x2"), (Budgets{256, 512, 1024, 2048}));
  EXPECT_EQ(parse_budgets("10:100:x3"), (Budgets{10, 30, 90}));
  EXPECT_EQ(parse_budgets("8"), (Budgets{8}));
  EXPECT_EQ(parse_budgets("5,7,9"), (Budgets{5, 7, 9}));
  for (const char* bad : {"", "a", "1,,2", "32:1024", "32:1024:2", "32:16:x2", "0:8:x2", "4:8:x1", "-3"}) {
    EXPECT_THROW(parse_budgets(bad), std::invalid_argument) << bad;
  }
}

}  // namespace
}  // namespace voisearch_cli
