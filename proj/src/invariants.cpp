#include "weldkit/invariants.hpp"

#include <algorithm>
#include <functional>

namespace weld {

ParityProfile parity_profile(const PlanarDiagram& d) {
  ParityProfile p;
  p.virtual_parity = d.virtual_count() % 2;
  p.classical_parity = d.classical_count() % 2;
  p.mixed_parity = (p.virtual_parity + p.classical_parity) % 2;
  return p;
}

int whitney_degree(const PlanarDiagram& d) {
  // Whitney's formula with the basepoint on the outer face (outer face on the
  // right, so the base term is +1). A crossing whose later strand crosses the
  // earlier one from right to left contributes -1.
  int degree = 1;
  for (std::size_t p = 0; p < d.size(); ++p)
    if (d.partner(p) > p) degree -= d.rotation_type(p);
  return degree;
}

GroupWord reduce(GroupWord w) {
  GroupWord out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  std::size_t lo = 0, hi = out.size();
  while (hi - lo >= 2 && out[lo] == -out[hi - 1]) {
    ++lo;
    --hi;
  }
  return GroupWord(out.begin() + static_cast<std::ptrdiff_t>(lo),
                   out.begin() + static_cast<std::ptrdiff_t>(hi));
}

GroupPresentation wirtinger_presentation(const PlanarDiagram& d) {
  const auto& w = d.word();
  std::vector<std::size_t> unders;
  for (std::size_t p = 0; p < w.size(); ++p)
    if (w[p].role == Role::Under) unders.push_back(p);
  GroupPresentation pres;
  const int m = static_cast<int>(unders.size());
  if (m == 0) {
    pres.generators = 1;
    return pres;
  }
  pres.generators = m;
  // Arc k runs from the k-th undercrossing (exclusive) to the next one; arc 0
  // is the one through the basepoint.
  auto arc_of = [&](std::size_t pos) {
    const auto before = std::lower_bound(unders.begin(), unders.end(), pos) - unders.begin();
    return static_cast<int>(before % m);
  };
  for (int k = 0; k < m; ++k) {
    const std::size_t u = unders[k];
    const int in = k % m;
    const int out = (k + 1) % m;
    const int over = arc_of(d.partner(u));
    const int e = w[u].sign;
    GroupWord r = {-(out + 1), e * (over + 1), in + 1, -e * (over + 1)};
    r = reduce(std::move(r));
    if (!r.empty()) pres.relators.push_back(std::move(r));
  }
  return pres;
}

std::string to_string(const GroupPresentation& p) {
  std::string out = "<";
  for (int g = 0; g < p.generators; ++g) out += (g ? ", x" : "x") + std::to_string(g + 1);
  out += " |";
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    out += r ? ", " : " ";
    for (int x : p.relators[r]) {
      out += "x" + std::to_string(std::abs(x));
      if (x < 0) out += "^-1";
      out += ' ';
    }
    out.pop_back();
  }
  return out + ">";
}

namespace {

class HomCounter {
 public:
  HomCounter(const GroupPresentation& p, const FiniteGroupTable& g, std::uint64_t budget)
      : p_(p), g_(g), budget_(budget), image_(static_cast<std::size_t>(p.generators), -1) {}

  std::uint64_t run() {
    search();
    return count_;
  }

 private:
  int letter_value(int x) const {
    const int v = image_[static_cast<std::size_t>(std::abs(x) - 1)];
    return x > 0 ? v : g_.inv(v);
  }

  // Returns false on contradiction; newly assigned generators go on the trail.
  bool propagate(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const GroupWord& r : p_.relators) {
        int free_gen = -1, free_occurrences = 0;
        bool several = false;
        for (int x : r) {
          const int gen = std::abs(x) - 1;
          if (image_[static_cast<std::size_t>(gen)] >= 0) continue;
          if (free_gen < 0 || free_gen == gen) {
            free_gen = gen;
            ++free_occurrences;
          } else {
            several = true;
          }
        }
        if (free_gen < 0) {
          int acc = g_.identity();
          for (int x : r) acc = g_.mul(acc, letter_value(x));
          if (acc != g_.identity()) return false;
          continue;
        }
        if (several || free_occurrences != 1) continue;
        // r = left x^e right = 1  =>  x^e = left^-1 right^-1
        int left = g_.identity(), right = g_.identity(), e = 0;
        bool seen = false;
        for (int x : r) {
          if (std::abs(x) - 1 == free_gen) {
            e = x > 0 ? 1 : -1;
            seen = true;
            continue;
          }
          if (!seen)
            left = g_.mul(left, letter_value(x));
          else
            right = g_.mul(right, letter_value(x));
        }
        const int power = g_.mul(g_.inv(left), g_.inv(right));
        image_[static_cast<std::size_t>(free_gen)] = e > 0 ? power : g_.inv(power);
        trail.push_back(free_gen);
        changed = true;
      }
    }
    return true;
  }

  void search() {
    if (++nodes_ > budget_) throw BudgetExceeded("hom_count: search budget exhausted");
    std::vector<int> trail;
    if (propagate(trail)) {
      auto it = std::find(image_.begin(), image_.end(), -1);
      if (it == image_.end()) {
        ++count_;
      } else {
        for (int v = 0; v < g_.order(); ++v) {
          *it = v;
          search();
        }
        *it = -1;
      }
    }
    for (int gen : trail) image_[static_cast<std::size_t>(gen)] = -1;
  }

  const GroupPresentation& p_;
  const FiniteGroupTable& g_;
  std::uint64_t budget_;
  std::vector<int> image_;
  std::uint64_t nodes_ = 0;
  std::uint64_t count_ = 0;
};

}  // namespace

std::uint64_t hom_count(const GroupPresentation& p, const FiniteGroupTable& g,
                        std::uint64_t budget) {
  return HomCounter(p, g, budget).run();
}

LaurentPolynomial alexander_polynomial(const GroupPresentation& p) {
  const int gens = p.generators;
  if (gens <= 1) return LaurentPolynomial(1);
  // Fox Jacobian evaluated at the abelianization x_j -> t.
  PolyMatrix jac;
  for (const GroupWord& r : p.relators) {
    std::vector<LaurentPolynomial> row(static_cast<std::size_t>(gens));
    int exponent = 0;
    for (int x : r) {
      auto& cell = row[static_cast<std::size_t>(std::abs(x) - 1)];
      if (x > 0) {
        cell = cell + LaurentPolynomial::monomial(1, exponent);
        ++exponent;
      } else {
        --exponent;
        cell = cell - LaurentPolynomial::monomial(1, exponent);
      }
    }
    jac.push_back(std::move(row));
  }
  // Columns sum to zero, so dropping column 0 loses nothing.
  const std::size_t size = static_cast<std::size_t>(gens - 1);
  if (jac.size() < size) return {};
  LaurentPolynomial acc;
  std::vector<std::size_t> rows(size);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t next, std::size_t depth) {
    if (depth == size) {
      PolyMatrix minor;
      for (std::size_t r : rows) {
        std::vector<LaurentPolynomial> line(jac[r].begin() + 1, jac[r].end());
        minor.push_back(std::move(line));
      }
      acc = gcd(acc, determinant(std::move(minor)));
      return;
    }
    for (std::size_t r = next; r + (size - depth) <= jac.size(); ++r) {
      rows[depth] = r;
      choose(r + 1, depth + 1);
    }
  };
  choose(0, 0);
  return acc.normalized();
}

LaurentPolynomial alexander_polynomial(const PlanarDiagram& d) {
  return alexander_polynomial(wirtinger_presentation(d));
}

Distinction distinguish(const PlanarDiagram& a, const PlanarDiagram& b, const MoveSet& s,
                        const std::vector<FiniteGroupTable>& panel) {
  Distinction out;
  auto differ = [&](std::string name, std::string va, std::string vb) {
    if (va == vb) return false;
    out.witness = Witness{std::move(name), std::move(va), std::move(vb)};
    return true;
  };
  if (s.theory() == Theory::RotationalWelded) {
    if (differ("virtual_parity", std::to_string(parity_profile(a).virtual_parity),
               std::to_string(parity_profile(b).virtual_parity)))
      return out;
  }
  const auto pa = wirtinger_presentation(a);
  const auto pb = wirtinger_presentation(b);
  for (const auto& g : panel) {
    try {
      if (differ("hom_count[" + g.name() + "]", std::to_string(hom_count(pa, g)),
                 std::to_string(hom_count(pb, g))))
        return out;
    } catch (const BudgetExceeded&) {
      out.inconclusive.push_back("hom_count[" + g.name() + "]");
    }
  }
  differ("alexander", alexander_polynomial(pa).to_string(), alexander_polynomial(pb).to_string());
  return out;
}

}  // namespace weld
