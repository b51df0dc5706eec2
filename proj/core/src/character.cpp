#include "orbigraph/character.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <sstream>

namespace orbigraph {

namespace {

constexpr double kCertTol = 1e-6;
constexpr int kOrderCap = 512;

bool near(double x, double y, double tol = kCertTol) { return std::abs(x - y) <= tol; }

long round_checked(double x, const char* what) {
  const double r = std::round(x);
  if (std::abs(x - r) > kCertTol)
    throw internal_consistency_error(std::string(what) + ": value " + std::to_string(x) +
                                     " is not integral");
  return static_cast<long>(r);
}

}  // namespace

std::vector<conj_class> conjugacy_classes(const finite_group& g) {
  const Id n = g.order();
  std::vector<Id> cls(n, undef);
  std::vector<conj_class> out;
  for (Id a = 0; a < n; ++a) {
    if (cls[a] != undef) continue;
    conj_class c;
    c.rep = a;
    for (Id t = 0; t < n; ++t) {
      const Id b = g.mul[g.mul[t][a]][g.inv[t]];
      if (cls[b] == undef) {
        cls[b] = static_cast<Id>(out.size());
        c.elements.push_back(b);
      }
    }
    std::sort(c.elements.begin(), c.elements.end());
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

// Class-sum structure constants: C_i C_j = sum_k a[i][j][k] C_k, with
// a[i][j][k] = #{x in C_i : x^-1 z in C_j} for any fixed z in C_k.
std::vector<std::vector<std::vector<long>>> class_structure_constants(
    const finite_group& g, const std::vector<conj_class>& cls, const std::vector<Id>& class_of) {
  const int nc = static_cast<int>(cls.size());
  std::vector a(nc, std::vector(nc, std::vector<long>(nc, 0)));
  for (int k = 0; k < nc; ++k) {
    const Id z = cls[k].rep;
    for (int i = 0; i < nc; ++i)
      for (Id x : cls[i].elements) ++a[i][class_of[g.mul[g.inv[x]][z]]][k];
  }
  return a;
}

character_table compute_character_table(const finite_group& g) {
  if (g.order() > kOrderCap)
    throw precondition_error("character_table: group order exceeds cap of 512");
  validate_group(g).require_ok("character_table: input group");

  character_table t;
  t.classes = conjugacy_classes(g);
  const int nc = static_cast<int>(t.classes.size());
  t.class_of.assign(g.order(), 0);
  for (int i = 0; i < nc; ++i)
    for (Id x : t.classes[i].elements) t.class_of[x] = i;

  const auto a = class_structure_constants(g, t.classes, t.class_of);

  // Common eigenvectors of the commuting class-sum matrices M_i with
  // (M_i)_{k j} = a[i][j][k]; each one-dimensional joint eigenspace is one
  // irreducible character.
  std::vector<Eigen::MatrixXcd> m(nc, Eigen::MatrixXcd::Zero(nc, nc));
  for (int i = 0; i < nc; ++i)
    for (int j = 0; j < nc; ++j)
      for (int k = 0; k < nc; ++k) m[i](k, j) = static_cast<double>(a[i][j][k]);

  const double order = static_cast<double>(g.order());
  for (unsigned attempt = 0; attempt < 16; ++attempt) {
    std::mt19937_64 rng(0x5eed0c0ffeeULL + attempt);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Eigen::MatrixXcd mix = Eigen::MatrixXcd::Zero(nc, nc);
    for (int i = 0; i < nc; ++i) mix += cplx(dist(rng), dist(rng)) * m[i];

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(mix);
    if (es.info() != Eigen::Success) continue;

    // Distinct eigenvalues guarantee the eigenvectors are the common ones.
    bool separated = true;
    for (int p = 0; p < nc && separated; ++p)
      for (int q = p + 1; q < nc; ++q)
        if (std::abs(es.eigenvalues()[p] - es.eigenvalues()[q]) < 1e-8 * (1.0 + es.eigenvalues().norm())) {
          separated = false;
          break;
        }
    if (!separated) continue;

    std::vector<class_function> rows;
    std::vector<int> degrees;
    bool good = true;
    for (int col = 0; col < nc && good; ++col) {
      Eigen::VectorXcd v = es.eigenvectors().col(col);
      int pivot = 0;
      for (int i = 1; i < nc; ++i)
        if (std::abs(v[i]) > std::abs(v[pivot])) pivot = i;
      // omega_i = class-sum eigenvalue of M_i on v, by Rayleigh quotient.
      std::vector<cplx> omega(nc);
      for (int i = 0; i < nc; ++i) {
        Eigen::VectorXcd w = m[i] * v;
        omega[i] = (v.adjoint() * w)(0) / (v.adjoint() * v)(0);
      }
      double s = 0;
      for (int i = 0; i < nc; ++i)
        s += std::norm(omega[i]) / static_cast<double>(t.classes[i].elements.size());
      if (s <= 0) {
        good = false;
        break;
      }
      const double dsq = order / s;
      const long d = round_checked(std::sqrt(dsq), "character degree");
      if (d < 1) {
        good = false;
        break;
      }
      class_function row(nc);
      for (int i = 0; i < nc; ++i)
        row[i] = static_cast<double>(d) * omega[i] / static_cast<double>(t.classes[i].elements.size());
      degrees.push_back(static_cast<int>(d));
      rows.push_back(std::move(row));
    }
    if (!good) continue;

    // Certification: row orthonormality and the degree sum.
    long degsum = 0;
    for (int p = 0; p < nc && good; ++p) {
      degsum += static_cast<long>(degrees[p]) * degrees[p];
      for (int q = 0; q < nc; ++q) {
        cplx ip = 0;
        for (int i = 0; i < nc; ++i)
          ip += static_cast<double>(t.classes[i].elements.size()) * std::conj(rows[p][i]) * rows[q][i];
        ip /= order;
        if (!near(ip.real(), p == q ? 1.0 : 0.0) || !near(ip.imag(), 0.0)) {
          good = false;
          break;
        }
      }
    }
    if (!good || degsum != g.order()) continue;

    std::vector<int> idx(nc);
    for (int i = 0; i < nc; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int p, int q) {
      if (degrees[p] != degrees[q]) return degrees[p] < degrees[q];
      for (int i = 0; i < nc; ++i) {
        const cplx x = rows[p][i], y = rows[q][i];
        if (!near(x.real(), y.real(), 1e-7)) return x.real() > y.real();
        if (!near(x.imag(), y.imag(), 1e-7)) return x.imag() > y.imag();
      }
      return false;
    });
    for (int i : idx) {
      t.degrees.push_back(degrees[i]);
      t.rows.push_back(rows[i]);
    }
    // Snap values that are numerically integral in both parts.
    for (auto& row : t.rows)
      for (auto& z : row) {
        if (near(z.real(), std::round(z.real()), 1e-9)) z.real(std::round(z.real()));
        if (near(z.imag(), std::round(z.imag()), 1e-9)) z.imag(std::round(z.imag()));
      }
    return t;
  }
  throw internal_consistency_error("character_table: eigen-analysis failed to certify after retries");
}

std::string group_digest(const finite_group& g) {
  std::string bytes;
  bytes.reserve(static_cast<std::size_t>(g.order()) * g.order() * 2 + 16);
  auto push = [&](Id v) {
    bytes.push_back(static_cast<char>(v & 0xff));
    bytes.push_back(static_cast<char>((v >> 8) & 0xff));
  };
  push(g.order());
  for (const auto& row : g.mul)
    for (Id v : row) push(v);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

// Disk round-trip used only when ORBIGRAPH_CACHE_DIR is set; the payload is
// the certified table in a plain text format.
bool load_cached_table(const std::string& path, int order, character_table& t) {
  std::ifstream in(path);
  if (!in) return false;
  int nc = 0, n = 0;
  if (!(in >> n >> nc) || n != order) return false;
  t.classes.resize(nc);
  for (auto& c : t.classes) {
    std::size_t sz;
    if (!(in >> c.rep >> sz)) return false;
    c.elements.resize(sz);
    for (auto& e : c.elements)
      if (!(in >> e)) return false;
  }
  t.class_of.resize(n);
  for (auto& c : t.class_of)
    if (!(in >> c)) return false;
  t.degrees.resize(nc);
  for (auto& d : t.degrees)
    if (!(in >> d)) return false;
  t.rows.assign(nc, class_function(nc));
  for (auto& row : t.rows)
    for (auto& z : row) {
      double re, im;
      if (!(in >> re >> im)) return false;
      z = {re, im};
    }
  return true;
}

void store_cached_table(const std::string& path, int order, const character_table& t) {
  std::ofstream out(path);
  if (!out) return;
  out.precision(17);
  out << order << ' ' << t.n_classes() << '\n';
  for (const auto& c : t.classes) {
    out << c.rep << ' ' << c.elements.size();
    for (Id e : c.elements) out << ' ' << e;
    out << '\n';
  }
  for (Id c : t.class_of) out << c << ' ';
  out << '\n';
  for (int d : t.degrees) out << d << ' ';
  out << '\n';
  for (const auto& row : t.rows) {
    for (const auto& z : row) out << z.real() << ' ' << z.imag() << ' ';
    out << '\n';
  }
}

}  // namespace

const character_table& get_character_table(const finite_group& g) {
  static std::shared_mutex mtx;
  static std::map<std::string, character_table> memo;
  const std::string key = group_digest(g);
  {
    std::shared_lock lock(mtx);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  character_table fresh;
  bool from_disk = false;
  const char* cache_dir = std::getenv("ORBIGRAPH_CACHE_DIR");
  std::string path;
  if (cache_dir && *cache_dir) {
    path = std::string(cache_dir) + "/chartab-" + key + ".txt";
    from_disk = load_cached_table(path, g.order(), fresh);
  }
  if (!from_disk) {
    fresh = compute_character_table(g);
    if (!path.empty()) store_cached_table(path, g.order(), fresh);
  }
  std::unique_lock lock(mtx);
  return memo.emplace(key, std::move(fresh)).first->second;
}

std::vector<long> decompose_character(const character_table& t, const class_function& a) {
  if (a.size() != static_cast<std::size_t>(t.n_classes()))
    throw precondition_error("decompose_character: wrong number of class values");
  long order = 0;
  for (const auto& c : t.classes) order += static_cast<long>(c.elements.size());
  std::vector<long> mult(t.n_irreps());
  for (int p = 0; p < t.n_irreps(); ++p) {
    cplx ip = 0;
    for (int i = 0; i < t.n_classes(); ++i)
      ip += static_cast<double>(t.classes[i].elements.size()) * std::conj(t.rows[p][i]) * a[i];
    ip /= static_cast<double>(order);
    if (!near(ip.imag(), 0.0))
      throw precondition_error("decompose_character: multiplicity not real, not a genuine character");
    if (!near(ip.real(), std::round(ip.real())))
      throw precondition_error("decompose_character: non-integral multiplicity, not a character");
    const long m = static_cast<long>(std::round(ip.real()));
    if (m < 0)
      throw precondition_error("decompose_character: negative multiplicity, virtual character rejected");
    mult[p] = m;
  }
  // Completeness: the multiplicities must reconstruct the class function.
  for (int i = 0; i < t.n_classes(); ++i) {
    cplx rec = 0;
    for (int p = 0; p < t.n_irreps(); ++p) rec += static_cast<double>(mult[p]) * t.rows[p][i];
    if (std::abs(rec - a[i]) > kCertTol)
      throw precondition_error("decompose_character: values do not reconstruct, not a character");
  }
  return mult;
}

long hom_multiplicity(const character_table& t, const class_function& a, const class_function& b) {
  decompose_character(t, a);
  decompose_character(t, b);
  long order = 0;
  for (const auto& c : t.classes) order += static_cast<long>(c.elements.size());
  cplx ip = 0;
  for (int i = 0; i < t.n_classes(); ++i)
    ip += static_cast<double>(t.classes[i].elements.size()) * std::conj(a[i]) * b[i];
  ip /= static_cast<double>(order);
  if (!near(ip.imag(), 0.0))
    throw internal_consistency_error("hom_multiplicity: non-real pairing");
  return round_checked(ip.real(), "hom_multiplicity");
}

class_function tensor_character(const character_table& t, const class_function& a,
                                const class_function& b) {
  class_function out(t.n_classes());
  for (int i = 0; i < t.n_classes(); ++i) out[i] = a[i] * b[i];
  return out;
}

class_function permutation_character(const character_table& t,
                                     const std::vector<std::vector<Id>>& action) {
  class_function out(t.n_classes());
  for (int i = 0; i < t.n_classes(); ++i) {
    const auto& row = action[t.classes[i].rep];
    long fixed = 0;
    for (Id x = 0; x < static_cast<Id>(row.size()); ++x)
      if (row[x] == x) ++fixed;
    out[i] = static_cast<double>(fixed);
  }
  return out;
}

class_function restrict_character(const finite_group& parent, const character_table& parent_table,
                                  const class_function& a, const finite_group& sub,
                                  const character_table& sub_table,
                                  const std::vector<Id>& into_parent) {
  if (into_parent.size() != static_cast<std::size_t>(sub.order()))
    throw precondition_error("restrict_character: embedding size mismatch");
  std::vector<bool> seen(parent.order(), false);
  for (Id x = 0; x < sub.order(); ++x) {
    const Id px = into_parent[x];
    if (px < 0 || px >= parent.order())
      throw precondition_error("restrict_character: embedding image out of range");
    if (seen[px]) throw precondition_error("restrict_character: embedding not injective");
    seen[px] = true;
    for (Id y = 0; y < sub.order(); ++y)
      if (into_parent[sub.mul[x][y]] != parent.mul[px][into_parent[y]])
        throw precondition_error("restrict_character: embedding is not a homomorphism");
  }
  class_function out(sub_table.n_classes());
  for (int i = 0; i < sub_table.n_classes(); ++i)
    out[i] = a[parent_table.class_of[into_parent[sub_table.classes[i].rep]]];
  return out;
}

}  // namespace orbigraph
