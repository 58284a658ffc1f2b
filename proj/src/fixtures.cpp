#include "zdr/fixtures.hpp"

#include <algorithm>

namespace zdr::fixtures {

  MulTable from_products(
      std::vector<std::string> const&                                     elements,
      std::vector<std::tuple<std::string, std::string, std::string>> const& products) {
    auto index = [&](std::string const& l) {
      auto it = std::find(elements.begin(), elements.end(), l);
      if (it == elements.end()) {
        throw TableError("unknown element \"" + l + "\"");
      }
      return static_cast<Element>(it - elements.begin());
    };
    std::vector<std::vector<Element>> product(
        elements.size(), std::vector<Element>(elements.size(), 0));
    for (auto const& [x, y, z] : products) {
      product[index(x)][index(y)] = index(z);
      product[index(y)][index(x)] = index(z);
    }
    return MulTable(elements, std::move(product));
  }

  namespace {
    std::vector<std::string> const labels{"0", "a1", "a2", "a3", "x1", "x2"};

    MulTable m32_table(bool a1_idempotent, bool a2_idempotent) {
      std::vector<std::tuple<std::string, std::string, std::string>> p{
          {"a1", "x2", "a1"},
          {"a2", "x1", "a2"},
          {"a3", "a3", "a3"},
          {"a3", "x1", "a3"},
          {"a3", "x2", "a3"},
          {"x1", "x1", "x1"},
          {"x1", "x2", "a3"},
          {"x2", "x2", "x2"}};
      if (a1_idempotent) {
        p.emplace_back("a1", "a1", "a1");
      }
      if (a2_idempotent) {
        p.emplace_back("a2", "a2", "a2");
      }
      return from_products(labels, p);
    }
  }  // namespace

  MulTable table_2_1() {
    return m32_table(false, false);
  }

  MulTable table_2_2() {
    return m32_table(false, true);
  }

  MulTable table_2_3() {
    return m32_table(true, true);
  }

  MulTable cor_2_4_table() {
    return from_products(labels,
                         {{"a1", "x2", "a1"},
                          {"a2", "x1", "a2"},
                          {"a3", "x1", "a2"},
                          {"a3", "x2", "a1"},
                          {"x1", "x1", "x1"},
                          {"x2", "x2", "x2"}});
  }

}  // namespace zdr::fixtures
