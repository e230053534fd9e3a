#include "reps/character_table.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <string>

#include "common/error.hpp"
#include "common/numtheory.hpp"
#include "reps/modular.hpp"

namespace covdim {

bool Character::is_trivial() const {
  for (const auto& v : values)
    if (!(v.is_rational() && v.rational() == 1)) return false;
  return true;
}

CharacterTable::CharacterTable(FiniteGroup g, unsigned conductor, std::uint64_t modulus, std::vector<Character> irr)
    : group_(std::move(g)), conductor_(conductor), modulus_(modulus), irr_(std::move(irr)) {}

CycNumber CharacterTable::inner_product(const std::vector<CycNumber>& a, const std::vector<CycNumber>& b) const {
  CycNumber sum(conductor_);
  const auto& cls = classes();
  for (std::size_t l = 0; l < cls.size(); ++l) {
    CycNumber term = a[l] * b[l].conj();
    term *= mpq_class(static_cast<long>(cls[l].members.size()));
    sum += term;
  }
  sum *= mpq_class(1, static_cast<unsigned long>(group_.order()));
  return sum;
}

namespace {

// A character value as sparse integer coordinates in Z[z]/(z^N - 1). Values
// are algebraic integers, so a non-integral coordinate means a broken table.
using Sparse = std::vector<std::pair<unsigned, long long>>;

std::optional<Sparse> integral_coords(const CycNumber& v, unsigned n) {
  const CycNumber e = v.conductor() == n ? v : v.embed(n);
  Sparse out;
  const auto& c = e.coeffs();
  for (unsigned i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    if (c[i].get_den() != 1 || !c[i].get_num().fits_slong_p()) return std::nullopt;
    out.emplace_back(i, c[i].get_num().get_si());
  }
  return out;
}

// Sums of weighted products a * conj(b) accumulated in the group ring and
// reduced once. Returns false on int64 overflow.
class RingSum {
 public:
  explicit RingSum(unsigned n) : n_(n), acc_(n, 0) {}
  bool add(const Sparse& a, const Sparse& b, long long weight) {
    for (const auto& [i, x] : a)
      for (const auto& [j, y] : b) {
        long long t;
        if (__builtin_mul_overflow(x, y, &t) || __builtin_mul_overflow(t, weight, &t)) return false;
        long long& slot = acc_[(i + n_ - j) % n_];
        if (__builtin_add_overflow(slot, t, &slot)) return false;
      }
    return true;
  }
  bool equals(long long want) const {
    std::vector<mpq_class> poly;
    poly.reserve(n_);
    for (long long v : acc_) poly.emplace_back(static_cast<long>(v));
    return CycNumber::from_poly(n_, std::move(poly)) == CycNumber::from_int(want, n_);
  }
  void clear() { std::fill(acc_.begin(), acc_.end(), 0); }

 private:
  unsigned n_;
  std::vector<long long> acc_;
};

}  // namespace

bool CharacterTable::verify() const {
  const auto& cls = classes();
  const std::size_t k = cls.size();
  if (irr_.size() != k) return false;
  std::uint64_t squares = 0;
  for (const auto& c : irr_) {
    if (group_.order() % c.degree) return false;
    squares += std::uint64_t{c.degree} * c.degree;
  }
  if (squares != group_.order()) return false;

  std::vector<std::vector<Sparse>> coords(k);
  for (std::size_t i = 0; i < k; ++i)
    for (const auto& v : irr_[i].values) {
      auto c = integral_coords(v, conductor_);
      if (!c) return false;
      coords[i].push_back(std::move(*c));
    }
  const long long order = static_cast<long long>(group_.order());
  RingSum s(conductor_);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      s.clear();
      for (std::size_t l = 0; l < k; ++l)
        if (!s.add(coords[i][l], coords[j][l], static_cast<long long>(cls[l].members.size()))) return slow_verify();
      if (!s.equals(i == j ? order : 0)) return false;
    }
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t m = l; m < k; ++m) {
      s.clear();
      for (std::size_t i = 0; i < k; ++i)
        if (!s.add(coords[i][l], coords[i][m], 1)) return slow_verify();
      const long long centralizer = order / static_cast<long long>(cls[l].members.size());
      if (!s.equals(l == m ? centralizer : 0)) return false;
    }
  return true;
}

bool CharacterTable::slow_verify() const {
  const auto& cls = classes();
  const std::size_t k = cls.size();
  if (irr_.size() != k) return false;
  std::uint64_t squares = 0;
  for (const auto& c : irr_) {
    if (group_.order() % c.degree) return false;
    squares += std::uint64_t{c.degree} * c.degree;
  }
  if (squares != group_.order()) return false;

  std::vector<std::vector<CycNumber>> conj(k);
  for (std::size_t i = 0; i < k; ++i)
    for (const auto& v : irr_[i].values) conj[i].push_back(v.conj());
  const CycNumber zero(conductor_);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      CycNumber s(conductor_);
      for (std::size_t l = 0; l < k; ++l) {
        CycNumber t = irr_[i].values[l] * conj[j][l];
        t *= mpq_class(static_cast<long>(cls[l].members.size()));
        s += t;
      }
      const CycNumber want = i == j ? CycNumber::from_int(static_cast<long long>(group_.order()), conductor_) : zero;
      if (!(s == want)) return false;
    }
  }
  for (std::size_t l = 0; l < k; ++l) {
    for (std::size_t m = l; m < k; ++m) {
      CycNumber s(conductor_);
      for (std::size_t i = 0; i < k; ++i) s += irr_[i].values[l] * conj[i][m];
      const long long centralizer = static_cast<long long>(group_.order() / cls[l].members.size());
      const CycNumber want = l == m ? CycNumber::from_int(centralizer, conductor_) : zero;
      if (!(s == want)) return false;
    }
  }
  return true;
}

std::size_t CharacterTable::power_class(std::size_t cls, long long k) const {
  return group_.class_of(group_.pow(classes()[cls].representative, k));
}

std::uint64_t dixon_prime(std::uint64_t n, std::uint64_t e) {
  // q > 2 sqrt(n) n  <=>  q^2 > 4 n^3
  const unsigned __int128 bound = static_cast<unsigned __int128>(4) * n * n * n;
  for (std::uint64_t q = e + 1;; q += e) {
    if (static_cast<unsigned __int128>(q) * q > bound && is_prime(q)) return q;
  }
}

namespace {

using modp::Matrix;
using modp::Row;

struct Dixon {
  const FiniteGroup& g;
  std::uint64_t q;
  std::size_t k;
  std::vector<Matrix> class_mats;  // lazily filled
  std::vector<bool> have;

  const Matrix& class_matrix(std::size_t j) {
    if (!have[j]) {
      // M_j[c][l] = #{x in C_j : x^-1 g_l in C_c}
      const auto& cls = g.classes();
      Matrix m(k, Row(k, 0));
      for (Elem x : cls[j].members) {
        const Elem xi = g.inv(x);
        for (std::size_t l = 0; l < k; ++l) ++m[g.class_of(g.mul(xi, cls[l].representative))][l];
      }
      for (auto& row : m)
        for (auto& v : row) v %= q;
      class_mats[j] = std::move(m);
      have[j] = true;
    }
    return class_mats[j];
  }
};

}  // namespace

CharacterTable character_table(const FiniteGroup& g) {
  const auto& cls = g.classes();
  const std::size_t k = cls.size();
  const std::uint64_t n = g.order();
  const auto e = static_cast<unsigned>(g.exponent());
  const std::uint64_t q = dixon_prime(n, e);
  std::mt19937_64 rng(0x5eedULL + n);

  Dixon dx{g, q, k, std::vector<Matrix>(k), std::vector<bool>(k, false)};

  // Each space is a basis in reduced echelon form; split until all are lines.
  std::vector<Matrix> spaces;
  {
    Matrix id(k, Row(k, 0));
    for (std::size_t i = 0; i < k; ++i) id[i][i] = 1;
    spaces.push_back(std::move(id));
  }
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  // Large classes separate characters best.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return cls[a].members.size() > cls[b].members.size(); });
  for (std::size_t j : order) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Matrix& s) { return s.size() == 1; })) break;
    if (j == 0) continue;
    const Matrix& mj = dx.class_matrix(j);
    std::vector<Matrix> next;
    for (auto& basis : spaces) {
      if (basis.size() == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      const std::size_t s = basis.size();
      Matrix b = basis;
      const auto pivots = modp::rref(b, q);
      Matrix a(s, Row(s, 0));
      for (std::size_t t = 0; t < s; ++t) {
        Row img(k, 0);
        for (std::size_t r = 0; r < k; ++r) {
          std::uint64_t acc = 0;
          for (std::size_t l = 0; l < k; ++l)
            if (mj[r][l] && b[t][l]) acc = (acc + mulmod(mj[r][l], b[t][l], q)) % q;
          img[r] = acc;
        }
        for (std::size_t i = 0; i < s; ++i) a[i][t] = img[pivots[i]];
      }
      const auto eig = modp::roots(modp::char_poly(a, q), q, rng);
      if (eig.size() <= 1) {
        next.push_back(std::move(b));
        continue;
      }
      for (auto lambda : eig) {
        Matrix shifted = a;
        for (std::size_t i = 0; i < s; ++i) shifted[i][i] = (shifted[i][i] + q - lambda) % q;
        Matrix coords = modp::nullspace(std::move(shifted), q);
        Matrix sub;
        for (const auto& c : coords) {
          Row v(k, 0);
          for (std::size_t t = 0; t < s; ++t)
            if (c[t])
              for (std::size_t l = 0; l < k; ++l) v[l] = (v[l] + mulmod(c[t], b[t][l], q)) % q;
          sub.push_back(std::move(v));
        }
        modp::rref(sub, q);
        next.push_back(std::move(sub));
      }
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k)
    fail(ErrorCode::PreconditionViolated, "class matrices did not separate the irreducible characters");

  std::vector<std::size_t> inv_class(k);
  for (std::size_t l = 0; l < k; ++l) inv_class[l] = g.class_of(g.inv(cls[l].representative));
  std::uint64_t root_d = 1;
  while ((root_d + 1) * (root_d + 1) <= n) ++root_d;

  const std::uint64_t z = powmod(modp::primitive_root(q), (q - 1) / e, q);
  std::vector<std::vector<std::size_t>> power_cls(k);
  for (std::size_t l = 0; l < k; ++l) {
    const std::uint64_t o = cls[l].element_order;
    for (std::uint64_t t = 0; t < o; ++t)
      power_cls[l].push_back(g.class_of(g.pow(cls[l].representative, static_cast<long long>(t))));
  }

  std::vector<Character> irr;
  for (const auto& sp : spaces) {
    Row w = sp[0];
    const std::uint64_t w0i = modp::inv(w[0], q);
    for (auto& v : w) v = mulmod(v, w0i, q);
    std::uint64_t sum = 0;
    for (std::size_t l = 0; l < k; ++l)
      sum = (sum + mulmod(mulmod(w[l], w[inv_class[l]], q), modp::inv(cls[l].members.size() % q, q), q)) % q;
    const std::uint64_t target = mulmod(n % q, modp::inv(sum, q), q);
    std::uint64_t d = 0;
    for (std::uint64_t c = 1; c <= root_d; ++c)
      if (c * c % q == target) {
        d = c;
        break;
      }
    if (d == 0) fail(ErrorCode::PreconditionViolated, "no character degree matches the modular data");

    Row vals(k);
    for (std::size_t l = 0; l < k; ++l)
      vals[l] = mulmod(mulmod(w[l], d, q), modp::inv(cls[l].members.size() % q, q), q);

    Character ch;
    ch.degree = static_cast<unsigned>(d);
    for (std::size_t l = 0; l < k; ++l) {
      const std::uint64_t o = cls[l].element_order;
      const std::uint64_t step = e / o;
      const std::uint64_t oinv = modp::inv(o % q, q);
      std::vector<mpq_class> poly(e, mpq_class(0));
      std::uint64_t total = 0;
      for (std::uint64_t m = 0; m < o; ++m) {
        std::uint64_t acc = 0;
        for (std::uint64_t t = 0; t < o; ++t) {
          const std::uint64_t expo = (e - (step * m * t) % e) % e;
          acc = (acc + mulmod(vals[power_cls[l][t]], powmod(z, expo, q), q)) % q;
        }
        const std::uint64_t mult = mulmod(acc, oinv, q);
        if (mult > d) fail(ErrorCode::PreconditionViolated, "eigenvalue multiplicity lift failed");
        total += mult;
        poly[step * m] = static_cast<unsigned long>(mult);
      }
      if (total != d) fail(ErrorCode::PreconditionViolated, "eigenvalue multiplicities do not sum to the degree");
      ch.values.push_back(CycNumber::from_poly(e, std::move(poly)));
    }
    irr.push_back(std::move(ch));
  }

  std::vector<std::pair<std::vector<std::string>, std::size_t>> keys;
  for (std::size_t i = 0; i < irr.size(); ++i) {
    std::vector<std::string> s;
    for (const auto& v : irr[i].values) s.push_back(v.to_string());
    keys.emplace_back(std::move(s), i);
  }
  std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
    const auto& ca = irr[a.second];
    const auto& cb = irr[b.second];
    if (ca.degree != cb.degree) return ca.degree < cb.degree;
    if (ca.is_trivial() != cb.is_trivial()) return ca.is_trivial();
    return a.first < b.first;
  });
  std::vector<Character> sorted;
  for (const auto& kk : keys) sorted.push_back(irr[kk.second]);
  return CharacterTable(g, e, q, std::move(sorted));
}

}  // namespace covdim
