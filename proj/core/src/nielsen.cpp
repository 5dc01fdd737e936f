#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "g2cover/errors.hpp"
#include "g2cover/loci.hpp"

namespace g2cover {

namespace {

// S5 is small enough to tabulate outright: elements indexed 0..119 with the
// identity at 0, a full multiplication table, inverses, parities and the
// elements grouped by cycle type.
constexpr int kOrder = 120;
using Perm = std::array<uint8_t, 5>;

struct S5Table {
  std::vector<Perm> elems;
  std::array<std::array<uint8_t, kOrder>, kOrder> mult;  // mult[i][j] = i after j
  std::array<uint8_t, kOrder> inverse;
  std::array<bool, kOrder> even;
  std::array<int, kOrder> type_of;
  std::vector<std::vector<int>> type_elems;    // index = type id
  std::vector<std::vector<int>> type_lengths;  // cycle lengths, descending
};

std::vector<int> cycle_lengths(const Perm& p) {
  std::vector<int> lengths;
  std::array<bool, 5> seen{};
  for (int i = 0; i < 5; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    if (len > 1) lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

const S5Table& table() {
  static const S5Table t = [] {
    S5Table t;
    Perm p{0, 1, 2, 3, 4};
    std::array<int, 3125> index_of{};
    do {
      int code = 0;
      for (int i = 0; i < 5; ++i) code = code * 5 + p[i];
      index_of[code] = static_cast<int>(t.elems.size());
      t.elems.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    auto index = [&](const Perm& q) {
      int code = 0;
      for (int i = 0; i < 5; ++i) code = code * 5 + q[i];
      return index_of[code];
    };

    for (int i = 0; i < kOrder; ++i) {
      for (int j = 0; j < kOrder; ++j) {
        Perm prod;
        for (int x = 0; x < 5; ++x) prod[x] = t.elems[i][t.elems[j][x]];
        t.mult[i][j] = static_cast<uint8_t>(index(prod));
      }
      Perm inv;
      for (int x = 0; x < 5; ++x) inv[t.elems[i][x]] = static_cast<uint8_t>(x);
      t.inverse[i] = static_cast<uint8_t>(index(inv));

      std::vector<int> lengths = cycle_lengths(t.elems[i]);
      int transpositions = 0;
      for (int len : lengths) transpositions += len - 1;
      t.even[i] = transpositions % 2 == 0;

      auto it = std::find(t.type_lengths.begin(), t.type_lengths.end(), lengths);
      if (it == t.type_lengths.end()) {
        t.type_lengths.push_back(lengths);
        t.type_elems.emplace_back();
        it = std::prev(t.type_lengths.end());
      }
      int tid = static_cast<int>(it - t.type_lengths.begin());
      t.type_of[i] = tid;
      t.type_elems[tid].push_back(i);
    }
    return t;
  }();
  return t;
}

bool generates(const std::vector<uint8_t>& gens, int wanted_order, const S5Table& t) {
  std::array<bool, kOrder> in{};
  std::vector<uint8_t> members{0};
  in[0] = true;
  for (size_t i = 0; i < members.size(); ++i) {
    for (uint8_t g : gens) {
      uint8_t prod = t.mult[members[i]][g];
      if (!in[prod]) {
        in[prod] = true;
        members.push_back(prod);
      }
    }
    if (static_cast<int>(members.size()) > wanted_order) return false;
  }
  return static_cast<int>(members.size()) == wanted_order;
}

long orbit_count(const std::vector<std::vector<uint8_t>>& tuples,
                 const std::vector<int>& conjugators, const S5Table& t) {
  std::set<std::vector<uint8_t>> seen;
  long orbits = 0;
  for (const auto& tup : tuples) {
    if (seen.count(tup)) continue;
    ++orbits;
    for (int g : conjugators) {
      std::vector<uint8_t> image(tup.size());
      for (size_t k = 0; k < tup.size(); ++k)
        image[k] = t.mult[t.mult[g][tup[k]]][t.inverse[g]];
      seen.insert(std::move(image));
    }
  }
  return orbits;
}

}  // namespace

NielsenCount nielsen_count(PermGroup group, const std::vector<CycleType>& types) {
  if (types.empty())
    fail(Errc::InvalidInput, "at least one branch cycle type is required");

  std::vector<std::vector<int>> canon;
  for (const CycleType& ct : types) {
    if (ct.empty())
      fail(Errc::InvalidInput, "a cycle type must list a nontrivial cycle length");
    int moved = 0;
    for (int len : ct) {
      if (len < 2 || len > 5)
        fail(Errc::InvalidInput,
             "cycle length " + std::to_string(len) + " is not between 2 and 5");
      moved += len;
    }
    if (moved > 5)
      fail(Errc::InvalidInput, "cycle lengths move more than 5 points");
    std::vector<int> c(ct.begin(), ct.end());
    std::sort(c.rbegin(), c.rend());
    canon.push_back(std::move(c));
  }

  const S5Table& t = table();
  const int wanted_order = group == PermGroup::S5 ? 120 : 60;

  std::vector<int> slot_type(canon.size(), -1);
  for (size_t k = 0; k < canon.size(); ++k) {
    auto it = std::find(t.type_lengths.begin(), t.type_lengths.end(), canon[k]);
    if (it != t.type_lengths.end())
      slot_type[k] = static_cast<int>(it - t.type_lengths.begin());
  }

  NielsenCount out;
  out.group = group;
  for (const auto& c : canon) out.types.push_back(c);

  // the last element is the inverse of the partial product, so enumerate the
  // first r-1 slots and filter by the last slot's cycle type
  std::vector<std::vector<uint8_t>> found;
  const size_t r = canon.size();
  bool possible = true;
  for (int tid : slot_type)
    if (tid < 0) possible = false;

  if (possible) {
    std::vector<uint8_t> tuple(r);
    auto recurse = [&](auto&& self, size_t slot, uint8_t acc) -> void {
      if (slot == r - 1) {
        uint8_t last = t.inverse[acc];
        if (t.type_of[last] != slot_type[r - 1]) return;
        tuple[r - 1] = last;
        if (generates(tuple, wanted_order, t)) found.push_back(tuple);
        return;
      }
      for (int e : t.type_elems[slot_type[slot]]) {
        tuple[slot] = static_cast<uint8_t>(e);
        self(self, slot + 1, t.mult[acc][e]);
      }
    };
    recurse(recurse, 0, 0);
  }

  out.tuples = static_cast<long>(found.size());

  std::vector<int> all_s5(kOrder);
  for (int i = 0; i < kOrder; ++i) all_s5[i] = i;
  std::vector<int> all_a5;
  for (int i = 0; i < kOrder; ++i)
    if (t.even[i]) all_a5.push_back(i);

  // free-action shortcut; generating tuples have trivial centralizer, so the
  // orbit partition is only needed when the divisibility signal fails
  out.classes = out.tuples % 120 == 0 ? out.tuples / 120
                                      : orbit_count(found, all_s5, t);
  out.classes_mod_a5 = out.tuples % 60 == 0 ? out.tuples / 60
                                            : orbit_count(found, all_a5, t);
  return out;
}

}  // namespace g2cover
