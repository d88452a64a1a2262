#include "tclass/semigroup_oracle.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace tclass {

FiniteCommSemigroup::FiniteCommSemigroup(CayleyTable table, std::size_t associativity_cap)
    : table_(std::move(table)) {
  const std::size_t m = table_.size();
  if (m > associativity_cap) {
    throw InvalidArgument("table of size " + std::to_string(m) +
                          " exceeds the associativity check cap " +
                          std::to_string(associativity_cap));
  }
  for (std::size_t a = 0; a < m; ++a) {
    if (table_[a].size() != m) throw InvalidArgument("Cayley table is not square");
    for (std::size_t b = 0; b < m; ++b) {
      if (table_[a][b] >= m) {
        throw InvalidArgument("table entry (" + std::to_string(a) + "," + std::to_string(b) +
                              ") out of range");
      }
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (table_[a][b] != table_[b][a]) {
        throw InvalidArgument("table is not commutative at (" + std::to_string(a) + "," +
                              std::to_string(b) + ")");
      }
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const std::size_t ab = table_[a][b];
      for (std::size_t c = 0; c < m; ++c) {
        if (table_[ab][c] != table_[a][table_[b][c]]) {
          throw InvalidArgument("table is not associative at (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
}

FiniteCommSemigroup FiniteCommSemigroup::read(std::istream& in) {
  std::size_t m = 0;
  if (!(in >> m)) throw ParseError("table fixture: missing size line");
  CayleyTable t(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (!(in >> t[a][b])) {
        throw ParseError("table fixture: row " + std::to_string(a) + " is short");
      }
    }
  }
  return FiniteCommSemigroup(std::move(t));
}

void FiniteCommSemigroup::write(std::ostream& out) const {
  out << table_.size() << '\n';
  for (const auto& row : table_) {
    for (std::size_t b = 0; b < row.size(); ++b) out << (b ? " " : "") << row[b];
    out << '\n';
  }
}

bool is_clifford(const FiniteCommSemigroup& s) {
  for (std::size_t x = 0; x < s.size(); ++x) {
    const std::size_t xx = s.mul(x, x);
    bool regular = false;
    for (std::size_t a = 0; a < s.size() && !regular; ++a) regular = s.mul(xx, a) == x;
    if (!regular) return false;
  }
  return true;
}

std::vector<std::size_t> idempotents(const FiniteCommSemigroup& s) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < s.size(); ++e) {
    if (s.mul(e, e) == e) out.push_back(e);
  }
  return out;
}

ConstituentGroup constituent_group(const FiniteCommSemigroup& s, std::size_t e) {
  if (e >= s.size() || s.mul(e, e) != e) {
    throw NotIdempotent("element " + std::to_string(e) + " is not an idempotent");
  }
  std::vector<bool> member(s.size(), false);
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (s.mul(s.mul(a, b), e) == e) {
        member[s.mul(a, e)] = true;
        break;
      }
    }
  }
  ConstituentGroup g{e, 0, {}, FiniteCommSemigroup(CayleyTable{{0}})};
  std::vector<std::size_t> position(s.size(), kUnknownProduct);
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (member[a]) {
      position[a] = g.elements.size();
      g.elements.push_back(a);
    }
  }
  const std::size_t k = g.elements.size();
  g.identity_position = position[e];
  CayleyTable t(k, std::vector<std::size_t>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t p = position[s.mul(g.elements[i], g.elements[j])];
      if (p == kUnknownProduct) throw InternalInconsistency("constituent group is not closed");
      t[i][j] = p;
    }
    if (t[i][g.identity_position] != i) {
      throw InternalInconsistency("idempotent is not the identity of its group");
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    bool has_inverse = false;
    for (std::size_t j = 0; j < k && !has_inverse; ++j) has_inverse = t[i][j] == g.identity_position;
    if (!has_inverse) throw InternalInconsistency("constituent group element without inverse");
  }
  g.group = FiniteCommSemigroup(std::move(t));
  return g;
}

}  // namespace tclass
