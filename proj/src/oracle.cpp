#include "radram/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <random>
#include <stdexcept>
#include <tuple>

#include "radram/errors.hpp"

namespace radram {

std::uint64_t max_order_from_env() {
  const char* raw = std::getenv("RADICAL_RAM_MAX_ORDER");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxOrder;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0 || raw[0] == '-')
    throw std::invalid_argument(std::string("RADICAL_RAM_MAX_ORDER must be a positive integer, got '") + raw + "'");
  return v;
}

ElementIndex::ElementIndex(const GroupDesc& G)
    : G_(G), ps_(G.ps()), units_(unit_residues(G)), unit_pos_(G.pr(), 0) {
  for (std::size_t k = 0; k < units_.size(); ++k) unit_pos_[units_[k]] = k;
}

namespace {

void check_bound(const GroupDesc& G, std::uint64_t max_order) {
  if (G.order() > max_order)
    throw resource_limit_error("|G| = " + std::to_string(G.order()) + " for " + G.to_string() +
                               " exceeds the oracle bound " + std::to_string(max_order));
}

struct Conjugator {
  HolomorphElement h, h_inv;
};

std::vector<Conjugator> generators(const GroupDesc& G) {
  const UnitGroupDecomp d = unit_decomp(G.p, G.r);
  std::vector<HolomorphElement> gens{{0, d.torsion_gen}, {0, d.principal_gen}};
  if (G.s > 0) gens.push_back({1, 1});
  std::vector<Conjugator> out;
  for (const auto& h : gens) out.push_back({h, inv(h, G)});
  return out;
}

HolomorphElement conjugate(const Conjugator& c, const HolomorphElement& g, const GroupDesc& G) {
  return mul(mul(c.h, g, G), c.h_inv, G);
}

// Breadth-first orbit of start; every element reached gets label = start.
void bfs_orbit(std::uint64_t start, const ElementIndex& idx, const std::vector<Conjugator>& gens,
               std::vector<std::uint64_t>& label, std::vector<char>& seen) {
  const GroupDesc& G = idx.group();
  std::deque<std::uint64_t> queue{start};
  seen[start] = 1;
  while (!queue.empty()) {
    const std::uint64_t cur = queue.front();
    queue.pop_front();
    label[cur] = start;
    const HolomorphElement g = idx.element(cur);
    for (const auto& c : gens) {
      const std::uint64_t nxt = idx.index(conjugate(c, g, G));
      if (!seen[nxt]) {
        seen[nxt] = 1;
        queue.push_back(nxt);
      }
    }
  }
}

std::uint64_t count_orbits(const std::vector<std::uint64_t>& label) {
  std::uint64_t n = 0;
  for (std::size_t k = 0; k < label.size(); ++k)
    if (label[k] == k) ++n;
  return n;
}

std::string mono_str(const Monomial& m) {
  return std::to_string(m.c) + "*z^" + std::to_string(m.e);
}

std::string class_str(const ConjClass& c) {
  return "class (alpha=" + std::to_string(c.alpha) + ", beta=" + std::to_string(c.beta) + ", u=" +
         std::to_string(c.rep.u) + ")";
}

class ClassLookup {
 public:
  explicit ClassLookup(const std::vector<ConjClass>& classes) {
    for (std::size_t k = 0; k < classes.size(); ++k) map_[{classes[k].rep.u, classes[k].beta}] = k;
  }
  [[nodiscard]] std::size_t operator()(const ConjClass& c) const {
    const auto it = map_.find({c.rep.u, c.beta});
    if (it == map_.end()) throw internal_error("class " + class_str(c) + " missing from all_classes");
    return it->second;
  }

 private:
  std::map<std::pair<std::uint64_t, unsigned>, std::size_t> map_;
};

using CharKey = std::tuple<int, unsigned, std::uint64_t, std::uint64_t>;

CharKey key_of(const Character& chi) {
  return {static_cast<int>(chi.kind), chi.k, chi.twist.a, chi.twist.b};
}

std::map<CharKey, std::size_t> char_lookup(const CharacterTable& t) {
  std::map<CharKey, std::size_t> out;
  for (std::size_t k = 0; k < t.chars.size(); ++k) out[key_of(t.chars[k])] = k;
  return out;
}

// Exact test of (1/|G|) sum size * a * conj(b) == expected.
std::optional<std::string> pairing_entry(std::uint64_t n, std::int64_t group_order, std::int64_t expected,
                                         std::size_t len, auto&& term) {
  CycInt acc(n);
  for (std::size_t c = 0; c < len; ++c) {
    const auto [coef, e] = term(c);
    if (coef != 0) acc.add_term(coef, e);
  }
  try {
    const auto v = acc.exact_div(group_order).as_integer();
    if (v && *v == expected) return std::nullopt;
    return "got " + acc.exact_div(group_order).to_string() + ", expected " + std::to_string(expected);
  } catch (const internal_error& e) {
    return std::string(e.what());
  }
}

std::optional<std::string> row_entry(const CharacterTable& t, std::size_t i, std::size_t j) {
  const std::uint64_t n = t.ring_order();
  auto term = [&](std::size_t c) -> std::pair<std::int64_t, std::uint64_t> {
    const Monomial& a = t.at(i, c);
    const Monomial& b = t.at(j, c);
    return {static_cast<std::int64_t>(t.classes[c].size) * a.c * b.c, (a.e + n - b.e) % n};
  };
  auto err = pairing_entry(n, static_cast<std::int64_t>(t.G.order()), i == j ? 1 : 0, t.classes.size(), term);
  if (err) return "<" + to_string(t.chars[i]) + ", " + to_string(t.chars[j]) + ">: " + *err;
  return std::nullopt;
}

std::optional<std::string> column_entry(const CharacterTable& t, std::size_t c1, std::size_t c2) {
  const std::uint64_t n = t.ring_order();
  auto term = [&](std::size_t chi) -> std::pair<std::int64_t, std::uint64_t> {
    const Monomial& a = t.at(chi, c1);
    const Monomial& b = t.at(chi, c2);
    return {static_cast<std::int64_t>(t.classes[c1].size) * a.c * b.c, (a.e + n - b.e) % n};
  };
  // Scaled by |c1| so the expected value is |G| delta, divided by |G| gives delta.
  auto err = pairing_entry(n, static_cast<std::int64_t>(t.G.order()), c1 == c2 ? 1 : 0, t.chars.size(), term);
  if (err) return class_str(t.classes[c1]) + " vs " + class_str(t.classes[c2]) + ": " + *err;
  return std::nullopt;
}

CheckOutcome first_failure(const std::vector<std::string>& fails) {
  for (const auto& f : fails)
    if (!f.empty()) return {false, f};
  return {};
}

template <class Entry>
CheckOutcome triangle(std::size_t n, bool parallel, Entry&& entry) {
  std::vector<std::string> fails(n);
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      auto err = entry(i, j);
      if (err) {
        fails[i] = *err;
        break;
      }
    }
  }
  return first_failure(fails);
}

}  // namespace

Partition classes_bruteforce(const GroupDesc& G, std::uint64_t max_order) {
  check_bound(G, max_order);
  const ElementIndex idx(G);
  const auto gens = generators(G);
  Partition out;
  out.label.assign(idx.size(), 0);
  std::vector<char> seen(idx.size(), 0);
  for (std::uint64_t k = 0; k < idx.size(); ++k)
    if (!seen[k]) bfs_orbit(k, idx, gens, out.label, seen);
  out.orbit_count = count_orbits(out.label);
  return out;
}

Partition classes_bruteforce_parallel(const GroupDesc& G, std::uint64_t max_order) {
  check_bound(G, max_order);
  const ElementIndex idx(G);
  const auto gens = generators(G);
  Partition out;
  out.label.assign(idx.size(), 0);
  std::vector<char> seen(idx.size(), 0);
  const auto fibers = static_cast<std::int64_t>(idx.units().size());
  const std::uint64_t w = idx.fiber_size();
  // Conjugation fixes the sigma-part, so fibers never share an orbit.
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t f = 0; f < fibers; ++f) {
    const std::uint64_t base = static_cast<std::uint64_t>(f) * w;
    for (std::uint64_t k = base; k < base + w; ++k)
      if (!seen[k]) bfs_orbit(k, idx, gens, out.label, seen);
  }
  out.orbit_count = count_orbits(out.label);
  return out;
}

std::vector<std::vector<HolomorphElement>> orbits(const Partition& part, const ElementIndex& idx) {
  std::map<std::uint64_t, std::vector<HolomorphElement>> grouped;
  for (std::uint64_t k = 0; k < part.label.size(); ++k) grouped[part.label[k]].push_back(idx.element(k));
  std::vector<std::vector<HolomorphElement>> out;
  for (auto& [lab, elems] : grouped) {
    std::sort(elems.begin(), elems.end(),
              [&](const auto& a, const auto& b) { return idx.index(a) < idx.index(b); });
    out.push_back(std::move(elems));
  }
  return out;
}

CheckOutcome compare_partition(const GroupDesc& G, const Partition& part) {
  const ElementIndex idx(G);
  const auto classes = all_classes(G);
  if (part.label.size() != G.order()) return {false, "partition does not cover the group"};
  if (part.orbit_count != classes.size())
    return {false, std::to_string(part.orbit_count) + " orbits but " + std::to_string(classes.size()) +
                       " classes"};
  std::vector<std::uint64_t> orbit_size(part.label.size(), 0);
  for (std::uint64_t lab : part.label) ++orbit_size[lab];
  for (std::uint64_t k = 0; k < part.label.size(); ++k) {
    const ConjClass a = conj_class_of(idx.element(k), G);
    const ConjClass b = conj_class_of(idx.element(part.label[k]), G);
    if (!(a == b))
      return {false, "conj_class_of differs inside one orbit: " + class_str(a) + " vs " + class_str(b)};
  }
  for (const auto& c : classes) {
    const std::uint64_t lab = part.label[idx.index(c.rep)];
    if (orbit_size[lab] != c.size)
      return {false, class_str(c) + ": orbit size " + std::to_string(orbit_size[lab]) + ", formula " +
                         std::to_string(c.size)};
  }
  return {};
}

DenseClassFunction to_class_function(const CharacterTable& t, std::size_t chi) {
  DenseClassFunction f{t.G, {}};
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    const Monomial& m = t.at(chi, c);
    f.values.push_back(CycInt::monomial(t.ring_order(), m.c, m.e));
  }
  return f;
}

DenseClassFunction induce_from_cyclic(const GroupDesc& G, std::uint64_t max_order) {
  if (G.s != G.r) throw std::invalid_argument("induce_from_cyclic: requires s = r");
  check_bound(G, max_order);
  const ElementIndex idx(G);
  const auto classes = all_classes(G);
  const std::uint64_t n = G.value_ring();
  DenseClassFunction f{G, std::vector<CycInt>(classes.size())};
  const auto m = static_cast<std::int64_t>(classes.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < m; ++c) {
    const HolomorphElement g = classes[c].rep;
    CycInt acc(n);
    for (std::uint64_t k = 0; k < idx.size(); ++k) {
      const HolomorphElement x = idx.element(k);
      const HolomorphElement y = mul(mul(x, g, G), inv(x, G), G);
      if (y.u == 1) acc.add_term(1, y.i * (G.p - 1));  // zeta_{p^r}^i
    }
    f.values[c] = acc.exact_div(static_cast<std::int64_t>(G.pr()));
  }
  return f;
}

CycInt inner_product(const DenseClassFunction& f, const DenseClassFunction& g) {
  if (!(f.G == g.G) || f.values.size() != g.values.size())
    throw std::invalid_argument("inner_product: class functions on different groups");
  const auto classes = all_classes(f.G);
  if (classes.size() != f.values.size()) throw std::invalid_argument("inner_product: wrong number of classes");
  const std::uint64_t n = f.G.value_ring();
  CycInt acc(n);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    CycInt term = embed(f.values[c].reduced(), n) * embed(g.values[c].reduced(), n).conj();
    term *= static_cast<std::int64_t>(classes[c].size);
    acc += term;
  }
  return acc.exact_div(static_cast<std::int64_t>(f.G.order()));
}

CheckOutcome lift_check(const GroupDesc& G, unsigned k) {
  if (k > G.s) throw std::invalid_argument("lift_check: level exceeds s");
  const CharacterTable small = CharacterTable::build(G);
  const ClassLookup small_cls(small.classes);
  auto at_level = [k](const Character& chi) { return level(chi) == k; };

  if (G.s < G.r) {
    const GroupDesc B = GroupDesc::make(G.p, G.r, G.r);
    const CharacterTable big = CharacterTable::build(B);
    const ClassLookup big_cls(big.classes);
    const auto big_chars = char_lookup(big);

    const std::size_t kernel = big_cls(conj_class_of({G.ps() % B.ps(), 1}, B));
    std::size_t trivial_on_kernel = 0;
    for (std::size_t x = 0; x < big.chars.size(); ++x) {
      const bool fixes = big.at(x, kernel) == Monomial{static_cast<std::int64_t>(big.chars[x].degree), 0};
      if (fixes != (level(big.chars[x]) <= G.s))
        return {false, to_string(big.chars[x]) + ": triviality on <z^{p^s}> contradicts its level"};
      trivial_on_kernel += fixes;
    }
    if (trivial_on_kernel != small.chars.size())
      return {false, std::to_string(trivial_on_kernel) + " characters trivial on <z^{p^s}> but " +
                         std::to_string(small.chars.size()) + " rows in the quotient table"};

    for (std::size_t x = 0; x < small.chars.size(); ++x) {
      if (!at_level(small.chars[x])) continue;
      const auto it = big_chars.find(key_of(small.chars[x]));
      if (it == big_chars.end()) return {false, to_string(small.chars[x]) + " has no counterpart upstairs"};
      for (std::size_t c = 0; c < big.classes.size(); ++c) {
        const HolomorphElement rep = big.classes[c].rep;
        const std::size_t down = small_cls(conj_class_of({rep.i % G.ps(), rep.u}, G));
        if (!(small.at(x, down) == big.at(it->second, c)))
          return {false, to_string(small.chars[x]) + " at " + class_str(big.classes[c]) + ": pullback " +
                             mono_str(small.at(x, down)) + " vs " + mono_str(big.at(it->second, c))};
      }
    }
  }

  if (G.r >= 2 && k <= std::min(G.s, G.r - 1)) {
    const GroupDesc D = GroupDesc::make(G.p, G.r - 1, std::min(G.s, G.r - 1));
    const CharacterTable down = CharacterTable::build(D);
    const ClassLookup down_cls(down.classes);
    const auto up_chars = char_lookup(small);
    const std::uint64_t scale = small.ring_order() / down.ring_order();
    for (std::size_t x = 0; x < down.chars.size(); ++x) {
      if (!at_level(down.chars[x])) continue;
      Character lifted = down.chars[x];
      lifted.twist.b *= G.p;
      const auto it = up_chars.find(key_of(lifted));
      if (it == up_chars.end()) return {false, to_string(down.chars[x]) + " lifts outside the table"};
      for (std::size_t c = 0; c < small.classes.size(); ++c) {
        const HolomorphElement rep = small.classes[c].rep;
        const std::size_t dc = down_cls(conj_class_of({rep.i % D.ps(), rep.u % D.pr()}, D));
        Monomial m = down.at(x, dc);
        m.e = m.c == 0 ? 0 : m.e * scale;
        if (!(m == small.at(it->second, c)))
          return {false, to_string(down.chars[x]) + " from " + D.to_string() + " at " + class_str(small.classes[c]) +
                             ": " + mono_str(m) + " vs " + mono_str(small.at(it->second, c))};
      }
    }
  }
  return {};
}

CheckOutcome row_orthogonality(const CharacterTable& t) {
  return triangle(t.chars.size(), false, [&](std::size_t i, std::size_t j) { return row_entry(t, i, j); });
}

CheckOutcome row_orthogonality_parallel(const CharacterTable& t) {
  return triangle(t.chars.size(), true, [&](std::size_t i, std::size_t j) { return row_entry(t, i, j); });
}

CheckOutcome column_orthogonality(const CharacterTable& t, bool parallel) {
  return triangle(t.classes.size(), parallel, [&](std::size_t i, std::size_t j) { return column_entry(t, i, j); });
}

NullSubgroupAudit null_subgroups_bruteforce(const CharacterTable& t, std::uint64_t max_order) {
  const GroupDesc& G = t.G;
  check_bound(G, max_order);
  const ElementIndex idx(G);
  const ClassLookup lookup(t.classes);
  std::vector<std::size_t> cls(idx.size());
  std::vector<unsigned> vi(idx.size()), va(idx.size());
  for (std::uint64_t k = 0; k < idx.size(); ++k) {
    const HolomorphElement g = idx.element(k);
    cls[k] = lookup(conj_class_of(g, G));
    vi[k] = vp_clamped(g.i, G.p, G.s);
    va[k] = vp_clamped(g.u - 1, G.p, G.r);
  }
  const SubgroupDesc wild{G.s, 1};

  const std::size_t n = t.chars.size();
  std::vector<std::string> literal_fail(n), descriptor_fail(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::size_t x = 0; x < n; ++x) {
    const Character& chi = t.chars[x];
    const SubgroupDesc h = null_subgroup(chi, G);
    const Monomial one{static_cast<std::int64_t>(chi.degree), 0};
    // fits[a][b]: every element of C(p^a) x| G^b fixes chi
    std::vector<std::vector<char>> fits(G.s + 1, std::vector<char>(G.r + 1, 1));
    std::vector<std::uint64_t> kernel;
    for (std::uint64_t k = 0; k < idx.size(); ++k) {
      const HolomorphElement g = idx.element(k);
      const bool in_kernel = t.at(x, cls[k]) == one;
      const bool in_h = member(g, h, G);
      if (in_kernel != in_h && literal_fail[x].empty())
        literal_fail[x] = to_string(chi) + ": element (" + std::to_string(g.i) + ", " + std::to_string(g.u) +
                          ") " + (in_kernel ? "fixes chi but lies outside " : "moves chi but lies in ") +
                          to_string(h);
      const bool wild_part = member(g, wild, G);
      if (in_kernel != in_h && (chi.kind == CharKind::Induced || wild_part) && descriptor_fail[x].empty())
        descriptor_fail[x] = to_string(chi) + ": kernel and " + to_string(h) + " differ at (" +
                             std::to_string(g.i) + ", " + std::to_string(g.u) + ")";
      if (in_kernel) {
        kernel.push_back(k);
      } else {
        for (unsigned a = G.s - vi[k]; a <= G.s; ++a)
          for (unsigned b = 0; b <= va[k]; ++b) fits[a][b] = 0;
      }
    }
    if (descriptor_fail[x].empty()) {
      for (unsigned a = 0; a <= G.s; ++a)
        for (unsigned b = 0; b <= G.r; ++b)
          if (fits[a][b] && !contained_in({a, b}, h, G)) {
            descriptor_fail[x] = to_string(chi) + ": " + to_string({a, b}) + " fixes chi but is not inside " +
                                 to_string(h);
            a = G.s + 1;
            break;
          }
      if (!fits[h.x][std::min(h.y, G.r)]) descriptor_fail[x] = to_string(chi) + ": " + to_string(h) + " moves chi";
    }
    // The kernel must be a subgroup whatever its shape.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(x));
    std::uniform_int_distribution<std::size_t> pick(0, kernel.size() - 1);
    for (int trial = 0; trial < 256; ++trial) {
      const HolomorphElement a = idx.element(kernel[pick(rng)]);
      const HolomorphElement b = idx.element(kernel[pick(rng)]);
      if (t.at(x, cls[idx.index(mul(a, b, G))]) != one) {
        descriptor_fail[x] = to_string(chi) + ": kernel not closed under multiplication";
        break;
      }
    }
  }
  NullSubgroupAudit out;
  out.characters = n;
  out.literal = first_failure(literal_fail);
  out.descriptor = first_failure(descriptor_fail);
  for (const auto& f : literal_fail) out.literal_mismatches += !f.empty();
  return out;
}

}  // namespace radram
