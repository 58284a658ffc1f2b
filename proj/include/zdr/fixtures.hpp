#ifndef ZDR_FIXTURES_HPP_
#define ZDR_FIXTURES_HPP_

#include <string>
#include <tuple>
#include <vector>

#include "zdr/semigroup.hpp"

// Published multiplication tables, on the elements 0, a1, a2, a3, x1, x2.

namespace zdr::fixtures {

  // Builds a table from the listed products (by label, either order); every
  // unlisted product is 0.
  MulTable from_products(
      std::vector<std::string> const&                                     elements,
      std::vector<std::tuple<std::string, std::string, std::string>> const& products);

  // The three tables realizing K_3 with end vertices on a1 and a2.
  MulTable table_2_1();  // a1^2 = 0,  a2^2 = 0
  MulTable table_2_2();  // a1^2 = 0,  a2^2 = a2
  MulTable table_2_3();  // a1^2 = a1, a2^2 = a2

  // The unique table for figure("2.4").
  MulTable cor_2_4_table();

}  // namespace zdr::fixtures

#endif  // ZDR_FIXTURES_HPP_
