#include "zdr/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "zdr/families.hpp"

namespace zdr {

  MulTable::MulTable(std::vector<std::string>          elements,
                     std::vector<std::vector<Element>> product)
      : _elements(std::move(elements)) {
    if (_elements.empty()) {
      throw TableError("table needs at least the zero element");
    }
    if (product.size() != _elements.size()) {
      throw TableError("product has " + std::to_string(product.size())
                       + " rows, expected "
                       + std::to_string(_elements.size()));
    }
    _product.reserve(size() * size());
    for (std::size_t i = 0; i < product.size(); ++i) {
      if (product[i].size() != size()) {
        throw TableError("product row " + std::to_string(i) + " has "
                         + std::to_string(product[i].size())
                         + " entries, expected " + std::to_string(size()));
      }
      _product.insert(_product.end(), product[i].begin(), product[i].end());
    }
  }

  std::vector<std::vector<Element>> MulTable::rows() const {
    std::vector<std::vector<Element>> out(size());
    for (std::size_t i = 0; i < size(); ++i) {
      out[i].assign(_product.begin() + i * size(),
                    _product.begin() + (i + 1) * size());
    }
    return out;
  }

  std::string MulTable::serialize() const {
    std::string out;
    bool const  wide = size() > 256;
    out.reserve(_product.size() * (wide ? 2 : 1));
    for (Element e : _product) {
      if (wide) {
        out.push_back(static_cast<char>(e >> 8));
      }
      out.push_back(static_cast<char>(e & 0xFF));
    }
    return out;
  }

  std::vector<Violation> structural_violations(MulTable const& t) {
    std::vector<Violation> out;
    std::size_t const      n = t.size();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (t.at(x, y) >= n) {
          out.push_back({Violation::Kind::out_of_range,
                         "product " + t.label(x) + "*" + t.label(y) + " = "
                             + std::to_string(t.at(x, y))
                             + " is not an element index"});
        }
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (t.at(0, k) != 0 || t.at(k, 0) != 0) {
        out.push_back({Violation::Kind::zero_row,
                       "zero does not absorb " + t.label(k)});
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        if (t.at(x, y) != t.at(y, x)) {
          out.push_back({Violation::Kind::asymmetric,
                         t.label(x) + "*" + t.label(y) + " != " + t.label(y)
                             + "*" + t.label(x)});
        }
      }
    }
    return out;
  }

  std::vector<Violation> validate(MulTable const& t) {
    auto out = structural_violations(t);
    for (std::size_t x = 1; x < t.size(); ++x) {
      bool annihilated = false;
      for (std::size_t y = 1; y < t.size() && !annihilated; ++y) {
        annihilated = t.at(x, y) == 0;
      }
      if (!annihilated) {
        out.push_back({Violation::Kind::not_zero_divisor,
                       t.label(x) + " is not a zero-divisor"});
      }
    }
    return out;
  }

  std::optional<AssocWitness> is_associative(MulTable const& t) {
    std::size_t const n = t.size();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        Element xy = t.at(x, y);
        for (std::size_t z = 0; z < n; ++z) {
          Element lhs = t.at(xy, z);
          Element rhs = t.at(x, t.at(y, z));
          if (lhs != rhs) {
            return AssocWitness{static_cast<Element>(x),
                                static_cast<Element>(y),
                                static_cast<Element>(z),
                                lhs,
                                rhs};
          }
        }
      }
    }
    return std::nullopt;
  }

  Graph zero_divisor_graph(MulTable const& t) {
    std::vector<std::size_t> vertex_of;
    std::vector<std::string> labels;
    for (std::size_t x = 1; x < t.size(); ++x) {
      for (std::size_t y = 1; y < t.size(); ++y) {
        if (t.at(x, y) == 0) {
          labels.push_back(t.label(x));
          vertex_of.push_back(x);
          break;
        }
      }
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertex_of.size(); ++i) {
      for (std::size_t j = i + 1; j < vertex_of.size(); ++j) {
        if (t.at(vertex_of[i], vertex_of[j]) == 0) {
          edges.emplace_back(i, j);
        }
      }
    }
    return Graph(std::move(labels), edges);
  }

  MulTable power_set_zd_semigroup(std::size_t n) {
    if (n < 2) {
      throw TableError("power-set semigroup needs n >= 2");
    }
    std::vector<std::uint64_t> subsets{0};
    for (auto m : proper_subsets_in_order(n)) {
      subsets.push_back(m);
    }
    std::map<std::uint64_t, Element> index;
    std::vector<std::string>         labels;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      index[subsets[i]] = static_cast<Element>(i);
      labels.push_back(i == 0 ? "0" : subset_label(subsets[i], n));
    }
    std::vector<std::vector<Element>> product(subsets.size(),
                                              std::vector<Element>(subsets.size()));
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      for (std::size_t j = 0; j < subsets.size(); ++j) {
        product[i][j] = index.at(subsets[i] & subsets[j]);
      }
    }
    return MulTable(std::move(labels), std::move(product));
  }

  MulTable relabel(MulTable const& t, Permutation const& perm) {
    std::size_t const n = t.size();
    if (perm.size() + 1 != n) {
      throw TableError("relabel: permutation degree does not match table");
    }
    auto map = [&](std::size_t x) -> std::size_t {
      return x == 0 ? 0 : perm[x - 1] + 1;
    };
    std::vector<std::vector<Element>> product(n, std::vector<Element>(n));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        product[map(x)][map(y)] = static_cast<Element>(map(t.at(x, y)));
      }
    }
    return MulTable(t.elements(), std::move(product));
  }

  std::string canonical_key(MulTable const&                 t,
                            std::vector<Permutation> const& auts) {
    std::string best = t.serialize();
    for (auto const& a : auts) {
      auto key = relabel(t, a).serialize();
      if (key < best) {
        best = std::move(key);
      }
    }
    return best;
  }

  namespace {
    // Isomorphism-invariant description of an element.
    std::vector<std::size_t> profile(MulTable const& t, std::size_t x) {
      std::size_t annihilators = 0, fixed = 0;
      for (std::size_t y = 0; y < t.size(); ++y) {
        annihilators += t.at(x, y) == 0;
        fixed += t.at(x, y) == x;
      }
      Element sq = t.at(x, x);
      return {annihilators,
              fixed,
              static_cast<std::size_t>(sq == 0),
              static_cast<std::size_t>(sq == x)};
    }
  }  // namespace

  std::optional<Permutation> are_semigroups_isomorphic(MulTable const& t1,
                                                       MulTable const& t2) {
    std::size_t const n = t1.size();
    if (t2.size() != n) {
      return std::nullopt;
    }
    std::vector<std::vector<std::size_t>> p1(n), p2(n);
    for (std::size_t x = 0; x < n; ++x) {
      p1[x] = profile(t1, x);
      p2[x] = profile(t2, x);
    }
    {
      auto a = p1, b = p2;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) {
        return std::nullopt;
      }
    }
    constexpr std::size_t    unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> phi(n, unset);
    std::vector<char>        used(n, 0);
    phi[0]  = 0;
    used[0] = 1;

    // Every pair with both factors and the product mapped must commute with
    // phi.
    auto consistent = [&](std::size_t upto) {
      for (std::size_t x = 0; x <= upto; ++x) {
        for (std::size_t y = 0; y <= upto; ++y) {
          std::size_t p = t1.at(x, y);
          if (phi[p] != unset && phi[p] != t2.at(phi[x], phi[y])) {
            return false;
          }
        }
      }
      return true;
    };

    std::function<bool(std::size_t)> dive = [&](std::size_t x) {
      if (x == n) {
        return true;
      }
      for (std::size_t c = 1; c < n; ++c) {
        if (used[c] || p1[x] != p2[c]) {
          continue;
        }
        phi[x]  = c;
        used[c] = 1;
        if (consistent(x) && dive(x + 1)) {
          return true;
        }
        used[c] = 0;
        phi[x]  = unset;
      }
      return false;
    };
    if (!consistent(0) || !dive(1)) {
      return std::nullopt;
    }
    return Permutation(phi);
  }

  std::string to_text(MulTable const& t) {
    std::size_t width = 1;
    for (auto const& l : t.elements()) {
      width = std::max(width, l.size());
    }
    auto pad = [&](std::string const& s) {
      return s + std::string(width + 1 - s.size(), ' ');
    };
    std::ostringstream out;
    out << pad(".") << "|";
    for (std::size_t y = 1; y < t.size(); ++y) {
      out << ' ' << pad(t.label(y));
    }
    out << '\n' << std::string(width + 1, '-') << '+'
        << std::string((t.size() - 1) * (width + 2), '-') << '\n';
    for (std::size_t x = 1; x < t.size(); ++x) {
      out << pad(t.label(x)) << "|";
      for (std::size_t y = 1; y < t.size(); ++y) {
        out << ' ' << pad(y < x ? "" : t.label(t.at(x, y)));
      }
      out << '\n';
    }
    return out.str();
  }

}  // namespace zdr
