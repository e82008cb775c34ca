#include <minorb/realform.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace minorb {

namespace {

[[noreturn]] void reject(const std::string& msg) { throw std::invalid_argument(msg); }
[[noreturn]] void broken(const std::string& msg) { throw std::logic_error(msg); }

std::vector<Int> key_of(const IVec& v) {
  return std::vector<Int>(v.data(), v.data() + v.size());
}

bool form_display_less(const RealForm& a, const RealForm& b) {
  if (a.dim_real() != b.dim_real()) return a.dim_real() > b.dim_real();
  return a < b;
}

// Complexified compact classical algebras, with the usual low-rank readings.
ComplexReductiveType c_sl(int p) {
  ComplexReductiveType t;
  if (p >= 2) t.add(CartanType(Family::A, p - 1));
  return t;
}

ComplexReductiveType c_so(int p) {
  ComplexReductiveType t;
  if (p <= 1) return t;
  switch (p) {
    case 2: t.add_center(1); break;
    case 3: t.add(CartanType(Family::A, 1)); break;
    case 4: t.add(CartanType(Family::A, 1)).add(CartanType(Family::A, 1)); break;
    case 5: t.add(CartanType(Family::C, 2)); break;
    case 6: t.add(CartanType(Family::A, 3)); break;
    default:
      t.add(p % 2 ? CartanType(Family::B, (p - 1) / 2) : CartanType(Family::D, p / 2));
  }
  return t;
}

ComplexReductiveType c_sp(int p) {
  ComplexReductiveType t;
  if (p == 1) t.add(CartanType(Family::A, 1));
  if (p >= 2) t.add(CartanType(Family::C, p));
  return t;
}

}  // namespace

// --- SatakeDiagram -------------------------------------------------------

int SatakeDiagram::num_black() const {
  return static_cast<int>(std::count(black.begin(), black.end(), 1));
}

int SatakeDiagram::num_arrows() const {
  int n = 0;
  for (int i = 0; i < rank(); ++i)
    if (partner[i] > i) ++n;
  return n;
}

int SatakeDiagram::num_classes() const { return rank() - num_black() - num_arrows(); }

std::vector<int> SatakeDiagram::node_classes() const {
  std::vector<int> cls(rank(), -1);
  int next = 0;
  for (int i = 0; i < rank(); ++i) {
    if (is_black(i) || cls[i] >= 0) continue;
    cls[i] = next;
    cls[partner[i]] = next;
    ++next;
  }
  return cls;
}

std::string SatakeDiagram::str() const {
  std::string b = "black={", a = "arrows={";
  bool firstb = true, firsta = true;
  for (int i = 0; i < rank(); ++i) {
    if (is_black(i)) {
      if (!firstb) b += ",";
      b += std::to_string(i + 1);
      firstb = false;
    }
    if (partner[i] > i) {
      if (!firsta) a += ",";
      a += std::to_string(i + 1) + ":" + std::to_string(partner[i] + 1);
      firsta = false;
    }
  }
  return b + "} " + a + "}";
}

void validate_satake(const SatakeDiagram& d) {
  const int n = d.ambient.rank();
  if (static_cast<int>(d.black.size()) != n || static_cast<int>(d.partner.size()) != n)
    broken("satake diagram: size mismatch for " + d.ambient.name());
  for (int i = 0; i < n; ++i) {
    if (d.partner[i] < 0 || d.partner[i] >= n || d.partner[d.partner[i]] != i)
      broken("satake diagram: arrow pairing is not an involution");
    if (d.partner[i] != i && (d.is_black(i) || d.is_black(d.partner[i])))
      broken("satake diagram: arrows must join white nodes");
  }
}

// --- involution ----------------------------------------------------------

IMat satake_involution(const SatakeDiagram& d) {
  validate_satake(d);
  const RootSystem& rs = shared_root_system(d.ambient);
  const int n = rs.rank();

  // Longest element of the black subsystem: drive a vector that is strictly
  // dominant on the black nodes to black-antidominant, recording the word.
  IVec v = IVec::Zero(n);
  for (int i = 0; i < n; ++i)
    if (d.is_black(i)) v(i) = 1;
  IMat w0b = IMat::Identity(n, n);
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < n; ++i) {
      if (d.is_black(i) && v(i) > 0) {
        v = rs.reflect_coweight(i, v);
        for (int j = 0; j < n; ++j) {
          IVec col = w0b.col(j);
          w0b.col(j) = rs.reflect_root(i, col);
        }
        moved = true;
      }
    }
  }

  // tau: arrow permutation on white nodes; on black nodes the diagram
  // permutation induced by -w0_black (so the involution fixes black simples).
  std::vector<int> tau(n);
  for (int i = 0; i < n; ++i) tau[i] = d.partner[i];
  for (int j = 0; j < n; ++j) {
    if (!d.is_black(j)) continue;
    IVec img = -w0b.col(j);
    int target = -1;
    for (int i = 0; i < n; ++i)
      if (img == rs.simple_root(i)) target = i;
    if (target < 0 || !d.is_black(target))
      broken("satake involution: -w0_black does not permute the black simples");
    tau[target] = j;  // tau = sigma^{-1} = sigma on black (involution)
  }

  IMat theta(n, n);
  for (int j = 0; j < n; ++j) theta.col(j) = -w0b.col(tau[j]);

  // Postconditions.
  if (theta * theta != IMat::Identity(n, n)) broken("satake involution: not an involution");
  for (int j = 0; j < n; ++j)
    if (d.is_black(j) && theta.col(j) != IVec(rs.simple_root(j)))
      broken("satake involution: black simple not fixed");
  Int trace = 0;
  for (int i = 0; i < n; ++i) trace += theta(i, i);
  if ((n + trace) % 2 != 0 || (n + trace) / 2 != d.num_black() + d.num_arrows())
    broken("satake involution: fixed subspace has wrong rank");
  for (const auto& r : rs.roots()) {
    IVec img = theta * r;
    if (!rs.is_root(img)) broken("satake involution: does not permute the roots");
    if (restrict_root(d, img) != IVec(-restrict_root(d, r)))
      broken("satake involution: restriction is not odd");
  }
  return theta;
}

IVec restrict_root(const SatakeDiagram& d, const IVec& root) {
  const std::vector<int> cls = d.node_classes();
  IVec out = IVec::Zero(d.num_classes());
  for (int i = 0; i < d.rank(); ++i)
    if (cls[i] >= 0) out(cls[i]) += root(i);
  return out;
}

// --- restricted roots ----------------------------------------------------

Int RestrictedRootSystem::mult_of(const IVec& lambda) const {
  auto it = mult.find(key_of(lambda));
  return it == mult.end() ? 0 : it->second;
}

Int RestrictedRootSystem::total_mult() const {
  Int s = 0;
  for (const auto& [k, m] : mult) s += m;
  return s;
}

Int RestrictedRootSystem::positive_mult() const {
  Int s = 0;
  for (const auto& [k, m] : mult)
    if (std::all_of(k.begin(), k.end(), [](Int x) { return x >= 0; })) s += m;
  return s;
}

std::vector<IVec> RestrictedRootSystem::positive_restricted_roots() const {
  std::vector<IVec> out;
  for (const auto& [k, m] : mult) {
    if (!std::all_of(k.begin(), k.end(), [](Int x) { return x >= 0; })) continue;
    IVec v(static_cast<int>(k.size()));
    for (size_t i = 0; i < k.size(); ++i) v(static_cast<int>(i)) = k[i];
    out.push_back(v);
  }
  return out;
}

namespace {

// Type label of a (possibly non-reduced) restricted root system, given the
// nonzero restricted roots in class coordinates and exact inner products of
// the class basis vectors.
std::string restricted_label(const std::map<std::vector<Int>, Int>& mult, int rank,
                             const QMat& gram) {
  auto is_key = [&](const std::vector<Int>& k) { return mult.count(k) > 0; };

  bool reduced = true;
  for (const auto& [k, m] : mult) {
    std::vector<Int> dbl(k);
    for (auto& x : dbl) x *= 2;
    if (is_key(dbl)) reduced = false;
  }
  if (!reduced) return "BC" + std::to_string(rank);
  if (rank == 1) return "A1";

  auto len = [&](const std::vector<Int>& k) {
    Rational s(0);
    for (int c = 0; c < rank; ++c)
      for (int d = 0; d < rank; ++d) s += Rational(k[c]) * Rational(k[d]) * gram(c, d);
    return s;
  };

  // Cartan pairing products between distinct class-basis simples.
  Int max_product = 0;
  for (int c = 0; c < rank; ++c) {
    for (int d = 0; d < rank; ++d) {
      if (c == d) continue;
      Rational num = Rational(4) * gram(c, d) * gram(c, d);
      Rational prod = num / (gram(c, c) * gram(d, d));
      if (!prod.is_integer()) broken("restricted system: non-integral Cartan product");
      max_product = std::max(max_product, prod.as_integer());
    }
  }

  const Int count = static_cast<Int>(mult.size());
  if (max_product == 3) return "G2";
  if (max_product == 2) {
    if (rank == 2) {
      // Orientation convention: first restricted simple short => C2.
      return len({1, 0}) < len({0, 1}) ? "C2" : "B2";
    }
    if (rank == 4 && count == 48) return "F4";
    // B_r has 2r roots of minimal length, C_r has 2r(r-1).
    Rational min_len(0);
    Int min_count = 0;
    for (const auto& [k, m] : mult) {
      Rational l = len(k);
      if (min_count == 0 || l < min_len) {
        min_len = l;
        min_count = 1;
      } else if (l == min_len) {
        ++min_count;
      }
    }
    return (min_count == 2 * rank ? "B" : "C") + std::to_string(rank);
  }
  // Simply laced.
  if (count == static_cast<Int>(rank) * (rank + 1)) return "A" + std::to_string(rank);
  if (rank >= 4 && count == 2 * static_cast<Int>(rank) * (rank - 1))
    return "D" + std::to_string(rank);
  if (rank == 6 && count == 72) return "E6";
  if (rank == 7 && count == 126) return "E7";
  if (rank == 8 && count == 240) return "E8";
  broken("restricted system: unrecognized type");
}

RestrictedRootSystem restricted_of_complex(CartanType t) {
  const RootSystem& rs = shared_root_system(t);
  RestrictedRootSystem out;
  out.rank = t.rank();
  out.reduced = true;
  out.label = t.name();
  out.dim_g = 2 * t.dim();
  out.dim_m = t.rank();
  for (const auto& r : rs.roots()) out.mult[key_of(r)] = 2;
  return out;
}

}  // namespace

RestrictedRootSystem RealForm::restricted_roots() const {
  if (kind_ == Kind::ComplexSimple) return restricted_of_complex(ambient_);

  const SatakeDiagram d = satake();
  const IMat theta = satake_involution(d);
  const RootSystem& rs = shared_root_system(ambient_);
  const int n = rs.rank();
  const int r = d.num_classes();

  RestrictedRootSystem out;
  out.rank = r;
  out.dim_g = dim_real();
  for (const auto& root : rs.roots()) {
    IVec lambda = restrict_root(d, root);
    if (lambda != IVec(IVec::Zero(r))) out.mult[key_of(lambda)] += 1;
  }

  out.reduced = true;
  for (const auto& [k, m] : out.mult) {
    std::vector<Int> dbl(k);
    for (auto& x : dbl) x *= 2;
    if (out.mult.count(dbl)) out.reduced = false;
  }

  // Exact Gram matrix of the class basis via the projection (1 - theta)/2.
  const std::vector<int> cls = d.node_classes();
  QMat proj(n, r);
  std::vector<int> rep(r, -1);
  for (int i = n - 1; i >= 0; --i)
    if (cls[i] >= 0) rep[cls[i]] = i;
  for (int c = 0; c < r; ++c) {
    IVec e = IVec::Zero(n);
    e(rep[c]) = 1;
    IVec img = theta * e;
    for (int i = 0; i < n; ++i)
      proj(i, c) = (Rational(e(i)) - Rational(img(i))) / Rational(2);
  }
  // All members of a class project to the same vector.
  for (int i = 0; i < n; ++i) {
    if (cls[i] < 0 || rep[cls[i]] == i) continue;
    IVec e = IVec::Zero(n);
    e(i) = 1;
    IVec img = theta * e;
    for (int k = 0; k < n; ++k)
      if (proj(k, cls[i]) != (Rational(e(k)) - Rational(img(k))) / Rational(2))
        broken("restricted system: class members project differently");
  }
  QMat bq(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) bq(i, j) = Rational(rs.bilinear()(i, j));
  QMat gram = proj.transpose() * bq * proj;

  out.label = restricted_label(out.mult, r, gram);
  out.dim_m = out.dim_g - r - out.total_mult();

  // Cross-check against the maximal compact subalgebra:
  // dim k = dim m + (positive restricted multiplicities).
  if (maximal_compact_complexified().dim() != out.dim_m + out.positive_mult())
    broken("restricted system: dimension bookkeeping fails for " + name());
  return out;
}

// --- RealForm factories --------------------------------------------------

RealForm RealForm::sl_R(int n) {
  if (n < 2) reject("sl_" + std::to_string(n) + "(R) is not a non-compact simple algebra");
  return RealForm(Kind::SlR, CartanType(Family::A, n - 1), n, 0, 0);
}

RealForm RealForm::su_star(int two_n) {
  if (two_n % 2 != 0) reject("su*_n requires even n");
  if (two_n == 2) reject("su*_2 is su_2, which is compact");
  if (two_n < 2) reject("su*_" + std::to_string(two_n) + " is not defined");
  return RealForm(Kind::SuStar, CartanType(Family::A, two_n - 1), two_n, 0, 0);
}

RealForm RealForm::su(int p, int q) {
  if (p < q) std::swap(p, q);
  if (q < 1) reject("su_" + std::to_string(p) + " is compact; expected a non-compact form");
  if (p == 1 && q == 1) return sl_R(2);
  return RealForm(Kind::Su, CartanType(Family::A, p + q - 1), p, q, 0);
}

RealForm RealForm::so(int p, int q) {
  if (p < q) std::swap(p, q);
  if (q < 1) reject("so_" + std::to_string(p) + " is compact; expected a non-compact form");
  const int N = p + q;
  switch (N) {
    case 2: reject("so_{1,1} is abelian, not simple");
    case 3: return sl_R(2);
    case 4:
      if (q == 1) return complex_simple(CartanType(Family::A, 1));  // so_{3,1}
      reject("so_{2,2} is sl_2(R)+sl_2(R), which is not simple");
    case 5: return q == 1 ? sp(1, 1) : sp_R(2);
    case 6:
      if (q == 1) return su_star(4);
      if (q == 2) return su(2, 2);
      return sl_R(4);
    default:
      break;
  }
  const CartanType ambient =
      N % 2 ? CartanType(Family::B, (N - 1) / 2) : CartanType(Family::D, N / 2);
  return RealForm(Kind::So, ambient, p, q, 0);
}

RealForm RealForm::sp_R(int n) {
  if (n < 1) reject("sp_" + std::to_string(n) + "(R) is not defined");
  if (n == 1) return sl_R(2);
  return RealForm(Kind::SpR, CartanType(Family::C, n), n, 0, 0);
}

RealForm RealForm::sp(int p, int q) {
  if (p < q) std::swap(p, q);
  if (q < 1) reject("sp_" + std::to_string(p) + " is compact; expected a non-compact form");
  return RealForm(Kind::Sp, CartanType(Family::C, p + q), p, q, 0);
}

RealForm RealForm::so_star(int two_n) {
  if (two_n % 2 != 0) reject("so*_n requires even n");
  if (two_n == 2) reject("so*_2 is abelian, not simple");
  if (two_n == 4) reject("so*_4 is su_2+sl_2(R), which is not simple");
  if (two_n == 6) return su(3, 1);
  if (two_n == 8) return so(6, 2);
  if (two_n < 2) reject("so*_" + std::to_string(two_n) + " is not defined");
  return RealForm(Kind::SoStar, CartanType(Family::D, two_n / 2), two_n, 0, 0);
}

RealForm RealForm::exceptional(Family f, int rank, int signature) {
  const CartanType t(f, rank);
  auto ok = [&](std::initializer_list<int> sigs) {
    for (int s : sigs)
      if (s == signature) return;
    std::string valid;
    for (int s : sigs) valid += (valid.empty() ? "" : ", ") + std::to_string(s);
    reject("no real form " + t.name() + "(" + std::to_string(signature) +
           "); valid signatures: " + valid);
  };
  switch (f) {
    case Family::E:
      if (rank == 6) ok({6, 2, -14, -26});
      if (rank == 7) ok({7, -5, -25});
      if (rank == 8) ok({8, -24});
      break;
    case Family::F: ok({4, -20}); break;
    case Family::G: ok({2}); break;
    default: reject("exceptional real forms exist only for types E, F, G");
  }
  return RealForm(Kind::Exceptional, t, 0, 0, signature);
}

RealForm RealForm::complex_simple(CartanType t) {
  return RealForm(Kind::ComplexSimple, t, 0, 0, 0);
}

// --- RealForm properties -------------------------------------------------

Int RealForm::dim_real() const {
  return kind_ == Kind::ComplexSimple ? 2 * ambient_.dim() : ambient_.dim();
}

ComplexReductiveType RealForm::complexification() const {
  ComplexReductiveType t;
  t.add(ambient_);
  if (kind_ == Kind::ComplexSimple) t.add(ambient_);
  return t;
}

ComplexReductiveType RealForm::maximal_compact_complexified() const {
  ComplexReductiveType k;
  switch (kind_) {
    case Kind::SlR:
      return c_so(p_);
    case Kind::SuStar:
      return c_sp(p_ / 2);
    case Kind::Su:
      return c_sl(p_).add(c_sl(q_)).add_center(1);
    case Kind::So:
      return c_so(p_).add(c_so(q_));
    case Kind::SpR:
      return c_sl(p_).add_center(1);
    case Kind::Sp:
      return c_sp(p_).add(c_sp(q_));
    case Kind::SoStar:
      return c_sl(p_ / 2).add_center(1);
    case Kind::ComplexSimple:
      k.add(ambient_);
      return k;
    case Kind::Exceptional:
      break;
  }
  const int n = ambient_.rank();
  if (ambient_.family() == Family::E && n == 6) {
    if (sig_ == 6) return ComplexReductiveType({CartanType(Family::C, 4)});
    if (sig_ == 2)
      return ComplexReductiveType({CartanType(Family::A, 5), CartanType(Family::A, 1)});
    if (sig_ == -14) return ComplexReductiveType({CartanType(Family::D, 5)}, 1);
    return ComplexReductiveType({CartanType(Family::F, 4)});  // -26
  }
  if (ambient_.family() == Family::E && n == 7) {
    if (sig_ == 7) return ComplexReductiveType({CartanType(Family::A, 7)});
    if (sig_ == -5)
      return ComplexReductiveType({CartanType(Family::D, 6), CartanType(Family::A, 1)});
    return ComplexReductiveType({CartanType(Family::E, 6)}, 1);  // -25
  }
  if (ambient_.family() == Family::E && n == 8) {
    if (sig_ == 8) return ComplexReductiveType({CartanType(Family::D, 8)});
    return ComplexReductiveType({CartanType(Family::E, 7), CartanType(Family::A, 1)});  // -24
  }
  if (ambient_.family() == Family::F) {
    if (sig_ == 4)
      return ComplexReductiveType({CartanType(Family::C, 3), CartanType(Family::A, 1)});
    return ComplexReductiveType({CartanType(Family::B, 4)});  // -20
  }
  // g2(2)
  return ComplexReductiveType({CartanType(Family::A, 1), CartanType(Family::A, 1)});
}

SatakeDiagram RealForm::satake() const {
  if (kind_ == Kind::ComplexSimple)
    reject("satake(): " + name() + " is not absolutely simple");
  const int n = ambient_.rank();
  SatakeDiagram d{ambient_, std::vector<char>(n, 0), std::vector<int>(n)};
  for (int i = 0; i < n; ++i) d.partner[i] = i;
  auto blacken = [&](int node_1based) { d.black[node_1based - 1] = 1; };
  auto arrow = [&](int a_1based, int b_1based) {
    d.partner[a_1based - 1] = b_1based - 1;
    d.partner[b_1based - 1] = a_1based - 1;
  };

  switch (kind_) {
    case Kind::SlR:
    case Kind::SpR:
      break;
    case Kind::SuStar:
      for (int i = 1; i <= n; i += 2) blacken(i);
      break;
    case Kind::Su: {
      const int N = p_ + q_;
      for (int i = q_ + 1; i <= N - q_ - 1; ++i) blacken(i);
      const int arrows = (p_ == q_) ? q_ - 1 : q_;
      for (int i = 1; i <= arrows; ++i) arrow(i, N - i);
      break;
    }
    case Kind::So: {
      if (ambient_.family() == Family::B) {
        for (int i = q_ + 1; i <= n; ++i) blacken(i);
      } else {
        if (q_ <= n - 2)
          for (int i = q_ + 1; i <= n; ++i) blacken(i);
        else if (q_ == n - 1)
          arrow(n - 1, n);
        // q_ == n: split, plain diagram
      }
      break;
    }
    case Kind::Sp:
      for (int i = 1; i <= 2 * q_ - 1; i += 2) blacken(i);
      for (int i = 2 * q_ + 1; i <= n; ++i) blacken(i);
      break;
    case Kind::SoStar:
      if (n % 2 == 0) {
        for (int i = 1; i <= n - 1; i += 2) blacken(i);
      } else {
        for (int i = 1; i <= n - 2; i += 2) blacken(i);
        arrow(n - 1, n);
      }
      break;
    case Kind::Exceptional:
      if (ambient_.family() == Family::E && n == 6) {
        if (sig_ == 2) {
          arrow(1, 6);
          arrow(3, 5);
        } else if (sig_ == -14) {
          blacken(3);
          blacken(4);
          blacken(5);
          arrow(1, 6);
        } else if (sig_ == -26) {
          for (int i : {2, 3, 4, 5}) blacken(i);
        }
      } else if (ambient_.family() == Family::E && n == 7) {
        if (sig_ == -5)
          for (int i : {2, 5, 7}) blacken(i);
        if (sig_ == -25)
          for (int i : {2, 3, 4, 5}) blacken(i);
      } else if (ambient_.family() == Family::E && n == 8) {
        if (sig_ == -24)
          for (int i : {2, 3, 4, 5}) blacken(i);
      } else if (ambient_.family() == Family::F) {
        if (sig_ == -20)
          for (int i : {1, 2, 3}) blacken(i);
      }
      break;
    case Kind::ComplexSimple:
      break;
  }
  validate_satake(d);
  return d;
}

std::string RealForm::name() const {
  switch (kind_) {
    case Kind::SlR: return "sl_" + std::to_string(p_) + "(R)";
    case Kind::SuStar: return "su*_" + std::to_string(p_);
    case Kind::Su: return "su_{" + std::to_string(p_) + "," + std::to_string(q_) + "}";
    case Kind::So: return "so_{" + std::to_string(p_) + "," + std::to_string(q_) + "}";
    case Kind::SpR: return "sp_" + std::to_string(p_) + "(R)";
    case Kind::Sp: return "sp_{" + std::to_string(p_) + "," + std::to_string(q_) + "}";
    case Kind::SoStar: return "so*_{" + std::to_string(p_) + "}";
    case Kind::Exceptional: {
      std::string base = ambient_.family() == Family::E ? "e" + std::to_string(ambient_.rank())
                         : ambient_.family() == Family::F ? "f4"
                                                          : "g2";
      return base + "(" + std::to_string(sig_) + ")";
    }
    case Kind::ComplexSimple: return ambient_.algebra_name();
  }
  return "?";
}

// --- RealReductiveType ---------------------------------------------------

RealReductiveType& RealReductiveType::add(const RealForm& f) {
  noncompact_.push_back(f);
  std::sort(noncompact_.begin(), noncompact_.end(), form_display_less);
  return *this;
}

RealReductiveType& RealReductiveType::add_compact_complexified(const ComplexReductiveType& c) {
  for (const auto& f : c.factors()) compact_.push_back(f);
  std::sort(compact_.begin(), compact_.end(), canonical_factor_less);
  center_c_ += c.center_dim();
  return *this;
}

RealReductiveType& RealReductiveType::add_compact_su(int n) {
  return add_compact_complexified(c_sl(n));
}

RealReductiveType& RealReductiveType::add_compact_so(int n) {
  return add_compact_complexified(c_so(n));
}

RealReductiveType& RealReductiveType::add_compact_sp(int n) {
  return add_compact_complexified(c_sp(n));
}

RealReductiveType& RealReductiveType::add_compact_exceptional(Family f, int rank) {
  compact_.push_back(CartanType(f, rank));
  std::sort(compact_.begin(), compact_.end(), canonical_factor_less);
  return *this;
}

RealReductiveType& RealReductiveType::add_center_compact(Int k) {
  center_c_ += k;
  return *this;
}

RealReductiveType& RealReductiveType::add_center_split(Int k) {
  center_s_ += k;
  return *this;
}

RealReductiveType& RealReductiveType::add_center_complex(Int k) {
  center_z_ += k;
  return *this;
}

RealReductiveType& RealReductiveType::add(const RealReductiveType& o) {
  for (const auto& f : o.noncompact_) noncompact_.push_back(f);
  for (const auto& c : o.compact_) compact_.push_back(c);
  std::sort(noncompact_.begin(), noncompact_.end(), form_display_less);
  std::sort(compact_.begin(), compact_.end(), canonical_factor_less);
  center_c_ += o.center_c_;
  center_s_ += o.center_s_;
  center_z_ += o.center_z_;
  return *this;
}

bool RealReductiveType::is_zero() const {
  return noncompact_.empty() && compact_.empty() && center_c_ == 0 && center_s_ == 0 &&
         center_z_ == 0;
}

Int RealReductiveType::dim_real() const {
  Int d = center_c_ + center_s_ + 2 * center_z_;
  for (const auto& f : noncompact_) d += f.dim_real();
  for (const auto& c : compact_) d += c.dim();
  return d;
}

ComplexReductiveType RealReductiveType::complexification() const {
  ComplexReductiveType out;
  for (const auto& f : noncompact_) out.add(f.complexification());
  for (const auto& c : compact_) out.add(c);
  out.add_center(center_c_ + center_s_ + 2 * center_z_);
  return out;
}

ComplexReductiveType RealReductiveType::maximal_compact_complexified() const {
  ComplexReductiveType out;
  for (const auto& f : noncompact_) out.add(f.maximal_compact_complexified());
  for (const auto& c : compact_) out.add(c);
  out.add_center(center_c_ + center_z_);
  return out;
}

namespace {
std::string compact_name(CartanType t) {
  const int n = t.rank();
  switch (t.family()) {
    case Family::A: return "su_" + std::to_string(n + 1);
    case Family::B: return "so_" + std::to_string(2 * n + 1);
    case Family::C: return "sp_" + std::to_string(n);
    case Family::D: return "so_" + std::to_string(2 * n);
    case Family::E: return "e" + std::to_string(n);
    case Family::F: return "f4";
    case Family::G: return "g2";
  }
  return "?";
}
}  // namespace

std::string RealReductiveType::name() const {
  if (is_zero()) return "0";
  std::string out;
  auto append = [&](const std::string& s) {
    if (!out.empty()) out += "+";
    out += s;
  };
  for (const auto& f : noncompact_) append(f.name());
  for (const auto& c : compact_) append(compact_name(c));
  for (Int i = 0; i < center_c_; ++i) append("so_2");
  for (Int i = 0; i < center_s_; ++i) append("R");
  for (Int i = 0; i < center_z_; ++i) append("C");
  return out;
}

}  // namespace minorb
