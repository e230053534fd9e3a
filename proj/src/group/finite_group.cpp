#include "group/finite_group.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <string>

#include "common/error.hpp"

namespace covdim {

namespace {

std::atomic<std::size_t>& order_cap_slot() {
  static std::atomic<std::size_t> cap = [] {
    std::size_t v = 200000;
    if (const char* env = std::getenv("COVDIM_ORDER_CAP")) {
      char* end = nullptr;
      const unsigned long long parsed = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && parsed > 0) v = static_cast<std::size_t>(parsed);
    }
    return v;
  }();
  return cap;
}

// Full multiplication tables are kept for groups up to this order.
constexpr std::size_t kTableLimit = 4096;
constexpr Elem kEmpty = static_cast<Elem>(-1);

}  // namespace

std::size_t default_order_cap() { return order_cap_slot().load(); }
void set_default_order_cap(std::size_t cap) { order_cap_slot().store(cap); }

namespace detail {

struct GroupData {
  std::size_t degree = 1;
  std::vector<Permutation> generators;
  std::vector<Elem> generator_elems;
  std::vector<Point> store;  // order * degree images
  std::size_t order = 0;

  std::vector<Elem> parent;
  std::vector<std::uint32_t> parent_gen;
  std::vector<Elem> rmul;  // order * ngens
  std::vector<Elem> inverse;

  std::vector<Elem> slots;  // open addressing index into store
  std::size_t mask = 0;

  mutable std::once_flag table_once;
  mutable std::vector<Elem> table;
  mutable std::once_flag orders_once;
  mutable std::vector<std::uint64_t> orders;
  mutable std::uint64_t exponent = 1;
  mutable std::once_flag classes_once;
  mutable std::vector<ConjugacyClass> classes;
  mutable std::vector<std::uint32_t> class_index;
  mutable std::once_flag abelian_once;
  mutable bool abelian = false;

  std::span<const Point> images(Elem x) const { return {store.data() + std::size_t{x} * degree, degree}; }

  static std::size_t hash_images(std::span<const Point> im) {
    std::uint64_t h = 1469598103934665603ull;
    for (Point p : im) {
      h ^= p;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }

  std::optional<Elem> find(std::span<const Point> im) const {
    if (im.size() != degree) return std::nullopt;
    std::size_t s = hash_images(im) & mask;
    while (slots[s] != kEmpty) {
      auto cand = images(slots[s]);
      if (std::equal(cand.begin(), cand.end(), im.begin())) return slots[s];
      s = (s + 1) & mask;
    }
    return std::nullopt;
  }

  void insert_slot(Elem x) {
    std::size_t s = hash_images(images(x)) & mask;
    while (slots[s] != kEmpty) s = (s + 1) & mask;
    slots[s] = x;
  }

  void grow_index() {
    const std::size_t cap = slots.empty() ? 64 : slots.size() * 2;
    slots.assign(cap, kEmpty);
    mask = cap - 1;
    for (Elem x = 0; x < order; ++x) insert_slot(x);
  }

  Elem mul(Elem a, Elem b) const {
    if (order <= kTableLimit) {
      std::call_once(table_once, [this] { build_table(); });
      return table[std::size_t{a} * order + b];
    }
    std::vector<Point> buf(degree);
    auto ia = images(a), ib = images(b);
    for (std::size_t i = 0; i < degree; ++i) buf[i] = ia[ib[i]];
    return *find(buf);
  }

  void build_table() const {
    const std::size_t ng = generators.size();
    table.assign(order * order, 0);
    for (Elem a = 0; a < order; ++a) {
      Elem* row = table.data() + std::size_t{a} * order;
      row[0] = a;
      for (Elem b = 1; b < order; ++b) row[b] = rmul[std::size_t{row[parent[b]]} * ng + parent_gen[b]];
    }
  }
};

}  // namespace detail

FiniteGroup::FiniteGroup() : FiniteGroup(1, {}) {}

FiniteGroup::FiniteGroup(std::size_t degree, std::vector<Permutation> generators, std::size_t order_cap) {
  if (degree == 0) fail(ErrorCode::InvalidArgument, "group degree must be positive");
  auto d = std::make_shared<detail::GroupData>();
  d->degree = degree;
  for (auto& g : generators)
    if (g.degree() != degree) fail(ErrorCode::InvalidArgument, "generator degree mismatch");
  d->generators = std::move(generators);
  const std::size_t ng = d->generators.size();

  auto push = [&](std::span<const Point> im) {
    d->store.insert(d->store.end(), im.begin(), im.end());
    ++d->order;
    if (d->order * 2 > d->slots.size()) d->grow_index();
    else d->insert_slot(static_cast<Elem>(d->order - 1));
  };

  push(Permutation::identity(degree).images());
  d->parent.push_back(0);
  d->parent_gen.push_back(0);

  std::vector<Point> buf(degree);
  for (Elem x = 0; x < d->order; ++x) {
    for (std::size_t gi = 0; gi < ng; ++gi) {
      const auto& g = d->generators[gi];
      auto ix = d->images(x);
      for (std::size_t i = 0; i < degree; ++i) buf[i] = ix[g[static_cast<Point>(i)]];
      auto found = d->find(buf);
      Elem y;
      if (found) {
        y = *found;
      } else {
        if (d->order >= order_cap)
          fail(ErrorCode::CapExceeded,
               "group order exceeds cap of " + std::to_string(order_cap));
        y = static_cast<Elem>(d->order);
        push(buf);
        d->parent.push_back(x);
        d->parent_gen.push_back(static_cast<std::uint32_t>(gi));
      }
      d->rmul.push_back(y);
    }
  }

  d->inverse.resize(d->order);
  for (Elem x = 0; x < d->order; ++x) {
    auto ix = d->images(x);
    for (std::size_t i = 0; i < degree; ++i) buf[ix[i]] = static_cast<Point>(i);
    d->inverse[x] = *d->find(buf);
  }
  for (const auto& g : d->generators) d->generator_elems.push_back(*d->find(g.images()));
  d_ = std::move(d);
}

std::size_t FiniteGroup::degree() const noexcept { return d_->degree; }
std::size_t FiniteGroup::order() const noexcept { return d_->order; }
const std::vector<Permutation>& FiniteGroup::generators() const noexcept { return d_->generators; }
std::size_t FiniteGroup::generator_count() const noexcept { return d_->generators.size(); }
Elem FiniteGroup::generator(std::size_t i) const { return d_->generator_elems.at(i); }

Permutation FiniteGroup::element(Elem x) const {
  auto im = d_->images(x);
  return Permutation(std::vector<Point>(im.begin(), im.end()));
}
std::span<const Point> FiniteGroup::images(Elem x) const { return d_->images(x); }
std::optional<Elem> FiniteGroup::find(std::span<const Point> images) const { return d_->find(images); }

Elem FiniteGroup::index_of(const Permutation& p) const {
  auto r = d_->find(p.images());
  if (!r) fail(ErrorCode::InvalidArgument, "permutation " + p.cycle_string() + " is not in the group");
  return *r;
}

Elem FiniteGroup::mul(Elem a, Elem b) const { return d_->mul(a, b); }
Elem FiniteGroup::inv(Elem a) const { return d_->inverse[a]; }

Elem FiniteGroup::pow(Elem a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elem r = identity;
  Elem base = a;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

std::uint64_t FiniteGroup::elem_order(Elem x) const {
  std::call_once(d_->orders_once, [this] {
    d_->orders.resize(d_->order);
    std::uint64_t e = 1;
    for (Elem y = 0; y < d_->order; ++y) {
      auto im = d_->images(y);
      d_->orders[y] = Permutation(std::vector<Point>(im.begin(), im.end())).order();
      e = std::lcm(e, d_->orders[y]);
    }
    d_->exponent = e;
  });
  return d_->orders[x];
}

std::uint64_t FiniteGroup::exponent() const {
  elem_order(0);
  return d_->exponent;
}

bool FiniteGroup::is_abelian() const {
  std::call_once(d_->abelian_once, [this] {
    bool ab = true;
    const auto& gens = d_->generator_elems;
    for (std::size_t i = 0; i < gens.size() && ab; ++i)
      for (std::size_t j = i + 1; j < gens.size() && ab; ++j)
        if (!commute(gens[i], gens[j])) ab = false;
    d_->abelian = ab;
  });
  return d_->abelian;
}

Elem FiniteGroup::right_mul_generator(Elem x, std::size_t gen) const {
  return d_->rmul[std::size_t{x} * d_->generators.size() + gen];
}
Elem FiniteGroup::bfs_parent(Elem x) const { return d_->parent[x]; }
std::size_t FiniteGroup::bfs_generator(Elem x) const { return d_->parent_gen[x]; }

const std::vector<ConjugacyClass>& FiniteGroup::classes() const {
  std::call_once(d_->classes_once, [this] {
    const std::size_t n = d_->order;
    std::vector<std::uint32_t> label(n, static_cast<std::uint32_t>(-1));
    std::vector<ConjugacyClass> cls;
    for (Elem x = 0; x < n; ++x) {
      if (label[x] != static_cast<std::uint32_t>(-1)) continue;
      const auto id = static_cast<std::uint32_t>(cls.size());
      ConjugacyClass c{x, {x}, elem_order(x)};
      label[x] = id;
      for (std::size_t k = 0; k < c.members.size(); ++k) {
        const Elem y = c.members[k];
        for (Elem g : d_->generator_elems) {
          const Elem z = conj(y, g);
          if (label[z] == static_cast<std::uint32_t>(-1)) {
            label[z] = id;
            c.members.push_back(z);
          }
        }
      }
      std::sort(c.members.begin(), c.members.end());
      c.representative = c.members.front();
      cls.push_back(std::move(c));
    }
    std::vector<std::size_t> perm(cls.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      const auto& A = cls[a];
      const auto& B = cls[b];
      if (A.element_order != B.element_order) return A.element_order < B.element_order;
      if (A.members.size() != B.members.size()) return A.members.size() < B.members.size();
      return A.representative < B.representative;
    });
    d_->classes.clear();
    d_->class_index.assign(n, 0);
    for (std::size_t k = 0; k < perm.size(); ++k) {
      for (Elem y : cls[perm[k]].members) d_->class_index[y] = static_cast<std::uint32_t>(k);
      d_->classes.push_back(std::move(cls[perm[k]]));
    }
  });
  return d_->classes;
}

std::size_t FiniteGroup::class_of(Elem x) const {
  classes();
  return d_->class_index[x];
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(FiniteGroup parent, Bitset members, std::vector<Elem> generators)
    : parent_(std::move(parent)), members_(std::move(members)), generators_(std::move(generators)) {
  order_ = members_.count();
}

Subgroup Subgroup::generated_by(const FiniteGroup& parent, std::vector<Elem> generators) {
  Bitset mem(parent.order());
  std::vector<Elem> list{FiniteGroup::identity};
  mem.set(FiniteGroup::identity);
  std::vector<Elem> gens;
  for (Elem g : generators)
    if (g != FiniteGroup::identity && std::find(gens.begin(), gens.end(), g) == gens.end())
      gens.push_back(g);
  for (std::size_t k = 0; k < list.size(); ++k) {
    for (Elem g : gens) {
      const Elem y = parent.mul(list[k], g);
      if (!mem.test(y)) {
        mem.set(y);
        list.push_back(y);
      }
    }
  }
  return Subgroup(parent, std::move(mem), std::move(gens));
}

Subgroup Subgroup::trivial(const FiniteGroup& parent) { return generated_by(parent, {}); }

Subgroup Subgroup::whole(const FiniteGroup& parent) {
  std::vector<Elem> gens;
  for (std::size_t i = 0; i < parent.generator_count(); ++i) gens.push_back(parent.generator(i));
  Bitset all(parent.order());
  for (Elem x = 0; x < parent.order(); ++x) all.set(x);
  return Subgroup(parent, std::move(all), std::move(gens));
}

bool Subgroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (!parent_.commute(generators_[i], generators_[j])) return false;
  return true;
}

bool Subgroup::is_normal() const {
  for (std::size_t i = 0; i < parent_.generator_count(); ++i) {
    const Elem g = parent_.generator(i);
    for (Elem h : generators_)
      if (!members_.test(parent_.conj(h, g))) return false;
  }
  return true;
}

FiniteGroup Subgroup::as_group() const {
  std::vector<Permutation> gens;
  for (Elem g : generators_) gens.push_back(parent_.element(g));
  return FiniteGroup(parent_.degree(), std::move(gens));
}

}  // namespace covdim
