#include <minorb/rootsys.hpp>

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace minorb {

namespace {

// Cartan matrix in Bourbaki numbering.  Conventions (0-based storage):
//   chain edge i-j simply laced: A(i,j) = A(j,i) = -1
//   B_n: A(n-2,n-1) = -2, A(n-1,n-2) = -1   (node n short)
//   C_n: A(n-2,n-1) = -1, A(n-1,n-2) = -2   (node n long)
//   F_4: chain 1-2=>3-4, A(1,2) = -2, A(2,1) = -1 (0-based; nodes 3,4 short)
//   G_2: A = [[2,-1],[-3,2]] (node 1 short)
//   D_n: nodes n-1 and n both attached to n-2
//   E_n: chain 1-3-4-5-6(-7)(-8), node 2 attached to 4
IMat cartan_matrix(CartanType t) {
  const int n = t.rank();
  IMat a = IMat::Zero(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  auto edge = [&](int i, int j) { a(i, j) = a(j, i) = -1; };
  switch (t.family()) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      a(n - 2, n - 1) = -2;
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      a(n - 1, n - 2) = -2;
      break;
    case Family::D:
      for (int i = 0; i + 1 < n - 1; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case Family::E:
      edge(0, 2);
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
      edge(1, 3);
      break;
    case Family::F:
      edge(0, 1);
      edge(1, 2);
      edge(2, 3);
      a(1, 2) = -2;
      break;
    case Family::G:
      a(0, 1) = -1;
      a(1, 0) = -3;
      break;
  }
  return a;
}

// d_j = (alpha_j, alpha_j)/2 with short roots of squared length 2.
IVec half_lengths(CartanType t) {
  const int n = t.rank();
  IVec d = IVec::Ones(n);
  switch (t.family()) {
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) d(i) = 2;
      break;
    case Family::C:
      d(n - 1) = 2;
      break;
    case Family::F:
      d(0) = d(1) = 2;
      break;
    case Family::G:
      d(1) = 3;
      break;
    default:
      break;
  }
  return d;
}

std::vector<Int> key_of(const IVec& v) {
  return std::vector<Int>(v.data(), v.data() + v.size());
}

}  // namespace

RootSystem::RootSystem(CartanType type) : type_(type) {
  const int n = type.rank();
  cartan_ = cartan_matrix(type);
  const IVec d = half_lengths(type);
  bilinear_ = IMat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) bilinear_(i, j) = cartan_(i, j) * d(j);

  // Close the simple roots under simple reflections.
  std::deque<IVec> queue;
  for (int i = 0; i < n; ++i) {
    IVec e = IVec::Zero(n);
    e(i) = 1;
    index_.emplace(key_of(e), static_cast<int>(roots_.size()));
    roots_.push_back(e);
    queue.push_back(e);
    index_.emplace(key_of((-e).eval()), static_cast<int>(roots_.size()));
    roots_.push_back(-e);
    queue.push_back(-e);
  }
  while (!queue.empty()) {
    IVec c = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      IVec r = reflect_root(j, c);
      auto [it, inserted] = index_.emplace(key_of(r), static_cast<int>(roots_.size()));
      if (inserted) {
        roots_.push_back(r);
        queue.push_back(r);
      }
    }
  }
  if (static_cast<Int>(roots_.size()) != type.root_count())
    throw std::logic_error("RootSystem: root closure has wrong size for " + type.name());

  for (const auto& r : roots_)
    if (r.sum() > 0) positive_.push_back(r);
  highest_ = *std::max_element(
      positive_.begin(), positive_.end(),
      [](const IVec& a, const IVec& b) { return a.sum() < b.sum(); });
}

IVec RootSystem::simple_root(int i) const {
  IVec e = IVec::Zero(rank());
  e(i) = 1;
  return e;
}

bool RootSystem::is_root(const IVec& c) const { return index_.count(key_of(c)) > 0; }

Int RootSystem::length_sq(const IVec& c) const {
  return (c.transpose() * bilinear_ * c)(0, 0);
}

IVec RootSystem::reflect_root(int j, const IVec& c) const {
  Int pairing = 0;
  for (int i = 0; i < rank(); ++i) pairing += c(i) * cartan_(i, j);
  IVec r = c;
  r(j) -= pairing;
  return r;
}

QVec RootSystem::reflect_coweight(int i, const QVec& w) const {
  QVec r = w;
  for (int j = 0; j < rank(); ++j) r(j) = w(j) - Rational(cartan_(j, i)) * w(i);
  return r;
}

IVec RootSystem::reflect_coweight(int i, const IVec& w) const {
  IVec r = w;
  for (int j = 0; j < rank(); ++j) r(j) = w(j) - cartan_(j, i) * w(i);
  return r;
}

IVec RootSystem::coroot_coweights(const IVec& c) const {
  const Int len = length_sq(c);
  IVec b = bilinear_ * c;
  IVec w(rank());
  for (int j = 0; j < rank(); ++j) {
    const Int num = 2 * b(j);
    if (num % len != 0) throw std::logic_error("coroot_coweights: non-integral pairing");
    w(j) = num / len;
  }
  return w;
}

Rational RootSystem::eval(const IVec& root, const QVec& w) const {
  Rational s(0);
  for (int j = 0; j < rank(); ++j) s += Rational(root(j)) * w(j);
  return s;
}

Int RootSystem::eval(const IVec& root, const IVec& w) const { return root.dot(w); }

const RootSystem& shared_root_system(CartanType type) {
  static std::map<std::pair<int, int>, RootSystem> cache;
  auto key = std::make_pair(static_cast<int>(type.family()), type.rank());
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, RootSystem(type)).first;
  return it->second;
}

QVec dominant_representative(const RootSystem& rs, QVec w) {
  const Rational zero(0);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rs.rank(); ++i) {
      if (w(i) < zero) {
        w = rs.reflect_coweight(i, w);
        moved = true;
      }
    }
  }
  return w;
}

IVec dominant_representative(const RootSystem& rs, IVec w) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rs.rank(); ++i) {
      if (w(i) < 0) {
        w = rs.reflect_coweight(i, w);
        moved = true;
      }
    }
  }
  return w;
}

std::string WeightedDynkinDiagram::str() const {
  std::string s = "(";
  for (int i = 0; i < weights.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(weights(i));
  }
  return s + ")";
}

WeightedDynkinDiagram wdd_from_characteristic(const RootSystem& rs, const IVec& w) {
  IVec d = dominant_representative(rs, w);
  for (int i = 0; i < d.size(); ++i)
    if (d(i) < 0 || d(i) > 2)
      throw std::invalid_argument("wdd_from_characteristic: weight outside {0,1,2}");
  return WeightedDynkinDiagram{rs.type(), d};
}

std::map<Int, Int> graded_dims(const RootSystem& rs, const WeightedDynkinDiagram& d) {
  std::map<Int, Int> g;
  g[0] = rs.rank();
  for (const auto& r : rs.roots()) g[rs.eval(r, d.weights)] += 1;
  return g;
}

Int orbit_half_dim(const RootSystem& rs, const WeightedDynkinDiagram& d) {
  auto g = graded_dims(rs, d);
  const Int centralizer = g[0] + (g.count(1) ? g[1] : 0);
  const Int dim = rs.dim() - centralizer;
  if (dim % 2 != 0) throw std::logic_error("orbit_half_dim: odd orbit dimension");
  return dim / 2;
}

Partition::Partition(std::vector<Int> p) : parts(std::move(p)) {
  for (Int v : parts)
    if (v < 1) throw std::invalid_argument("Partition: parts must be >= 1");
  std::sort(parts.begin(), parts.end(), std::greater<Int>());
}

Int Partition::sum() const { return std::accumulate(parts.begin(), parts.end(), Int(0)); }

Int Partition::mult(Int part) const {
  return std::count(parts.begin(), parts.end(), part);
}

std::string Partition::str() const {
  std::string s = "[";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + "]";
}

WeightedDynkinDiagram wdd_from_partition(CartanType t, const Partition& p) {
  const int n = t.rank();
  Int want = 0;
  bool even_parts_even_mult = false, odd_parts_even_mult = false;
  switch (t.family()) {
    case Family::A: want = n + 1; break;
    case Family::B: want = 2 * n + 1; even_parts_even_mult = true; break;
    case Family::C: want = 2 * n; odd_parts_even_mult = true; break;
    case Family::D: want = 2 * n; even_parts_even_mult = true; break;
    default:
      throw std::invalid_argument("wdd_from_partition: " + t.name() + " is not classical");
  }
  if (p.sum() != want)
    throw std::invalid_argument("wdd_from_partition: " + p.str() + " is not a partition of " +
                                std::to_string(want) + " as required for " + t.name());
  for (Int v : p.parts) {
    if (even_parts_even_mult && v % 2 == 0 && p.mult(v) % 2 != 0)
      throw std::invalid_argument("wdd_from_partition: even part " + std::to_string(v) +
                                  " must have even multiplicity for " + t.name());
    if (odd_parts_even_mult && v % 2 == 1 && p.mult(v) % 2 != 0)
      throw std::invalid_argument("wdd_from_partition: odd part " + std::to_string(v) +
                                  " must have even multiplicity for " + t.name());
  }

  // Concatenate the sl2 weight strings {m-1, m-3, ..., 1-m} of all parts and
  // sort; the diagram weights are consecutive differences in the standard
  // orthogonal coordinates of the classical type.
  std::vector<Int> h;
  for (Int m : p.parts)
    for (Int v = m - 1; v >= 1 - m; v -= 2) h.push_back(v);
  std::sort(h.begin(), h.end(), std::greater<Int>());

  IVec w(n);
  switch (t.family()) {
    case Family::A:
      for (int i = 0; i < n; ++i) w(i) = h[i] - h[i + 1];
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) w(i) = h[i] - h[i + 1];
      w(n - 1) = h[n - 1];
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) w(i) = h[i] - h[i + 1];
      w(n - 1) = 2 * h[n - 1];
      break;
    case Family::D:
      for (int i = 0; i + 1 < n; ++i) w(i) = h[i] - h[i + 1];
      w(n - 1) = h[n - 2] + h[n - 1];
      break;
    default:
      break;
  }
  const RootSystem& rs = shared_root_system(t);
  return wdd_from_characteristic(rs, w);
}

std::vector<std::vector<int>> diagram_automorphisms(CartanType t) {
  const int n = t.rank();
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  std::vector<std::vector<int>> out{id};

  switch (t.family()) {
    case Family::A:
      if (n >= 2) {
        std::vector<int> rev(n);
        for (int i = 0; i < n; ++i) rev[i] = n - 1 - i;
        out.push_back(rev);
      }
      break;
    case Family::D:
      if (n == 4) {
        // S3 on the outer nodes {1,3,4} (0-based {0,2,3}); node 2 is fixed.
        const int outer[3] = {0, 2, 3};
        int images[3] = {0, 1, 2};
        std::sort(images, images + 3);
        out.clear();
        do {
          std::vector<int> p(n);
          p[1] = 1;
          for (int k = 0; k < 3; ++k) p[outer[k]] = outer[images[k]];
          out.push_back(p);
        } while (std::next_permutation(images, images + 3));
      } else {
        std::vector<int> swp = id;
        std::swap(swp[n - 2], swp[n - 1]);
        out.push_back(swp);
      }
      break;
    case Family::E:
      if (n == 6) {
        // (1 6)(3 5), nodes 2 and 4 fixed.
        out.push_back({5, 1, 4, 3, 2, 0});
      }
      break;
    default:
      break;
  }
  return out;
}

IVec apply_node_perm(const std::vector<int>& perm, const IVec& w) {
  IVec r(w.size());
  for (int i = 0; i < w.size(); ++i) r(perm[i]) = w(i);
  return r;
}

}  // namespace minorb
