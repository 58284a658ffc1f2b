#ifndef ZDR_SEMIGROUP_HPP_
#define ZDR_SEMIGROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zdr/graph.hpp"

namespace zdr {

  using Element = std::uint16_t;

  class TableError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // A (candidate) commutative multiplication table on elements 0..n-1 where
  // element 0 is the zero. Construction only checks the shape; the algebraic
  // invariants are reported by validate().
  class MulTable {
   public:
    MulTable() = default;
    // Throws TableError unless `product` is |elements| x |elements|.
    MulTable(std::vector<std::string>          elements,
             std::vector<std::vector<Element>> product);

    [[nodiscard]] std::size_t size() const noexcept {
      return _elements.size();
    }
    [[nodiscard]] Element at(std::size_t x, std::size_t y) const {
      return _product[x * size() + y];
    }
    [[nodiscard]] std::string const& label(std::size_t x) const {
      return _elements.at(x);
    }
    [[nodiscard]] std::vector<std::string> const& elements() const noexcept {
      return _elements;
    }
    [[nodiscard]] std::vector<std::vector<Element>> rows() const;

    // Row-major bytes of the product matrix; one byte per entry while the
    // table has at most 256 elements, two (big-endian) otherwise.
    [[nodiscard]] std::string serialize() const;

    friend bool operator==(MulTable const&, MulTable const&) = default;

   private:
    std::vector<std::string> _elements;
    std::vector<Element>     _product;
  };

  struct Violation {
    enum class Kind { zero_row, asymmetric, out_of_range, not_zero_divisor };
    Kind        kind;
    std::string message;
  };

  // Zero row, symmetry and closure violations, followed by every nonzero
  // element without a nonzero annihilator. Empty means valid.
  std::vector<Violation> validate(MulTable const& t);
  // Only the zero row, symmetry and closure checks.
  std::vector<Violation> structural_violations(MulTable const& t);

  struct AssocWitness {
    Element x, y, z;
    Element lhs;  // (xy)z
    Element rhs;  // x(yz)
  };

  // First triple in lexicographic order with (xy)z != x(yz), or nullopt.
  std::optional<AssocWitness> is_associative(MulTable const& t);

  // Vertices are the nonzero zero-divisors with their table labels; distinct
  // x, y are adjacent iff xy = 0.
  Graph zero_divisor_graph(MulTable const& t);

  // Proper subsets of {1..n} under intersection, the empty set at index 0
  // and the rest in gamma_n vertex order.
  MulTable power_set_zd_semigroup(std::size_t n);

  // The table t' with t'[p(x)][p(y)] = p(t[x][y]) where p extends the vertex
  // permutation `perm` by fixing 0 (vertex i is element i + 1).
  MulTable relabel(MulTable const& t, Permutation const& perm);

  // Lexicographically smallest serialization of relabel(t, a) over a in auts.
  std::string canonical_key(MulTable const& t, std::vector<Permutation> const& auts);

  // A zero-fixing bijection phi on elements with phi(xy) = phi(x)phi(y), or
  // nullopt.
  std::optional<Permutation> are_semigroups_isomorphic(MulTable const& t1,
                                                       MulTable const& t2);

  // Pretty-printed upper-triangular table in the usual layout.
  std::string to_text(MulTable const& t);

}  // namespace zdr

#endif  // ZDR_SEMIGROUP_HPP_
