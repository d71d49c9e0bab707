// Copyright 2026 The ocg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ocg/catalog.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "ocg/field.hpp"
#include "ocg/numtheory.hpp"

namespace ocg {

namespace {

using Elt = Field::Elt;
using Vec = std::vector<Elt>;
using Mat = std::vector<Elt>;  // n*n, row-major

u64 checked_mul_u64(u64 a, u64 b) {
  if (a != 0 && b > UINT64_MAX / a) {
    throw std::overflow_error("catalog: order formula overflows");
  }
  return a * b;
}

u64 qpow64(u64 q, u64 k) {
  u64 r = 1;
  while (k--) r = checked_mul_u64(r, q);
  return r;
}

u64 sl_order(int n, u64 q) {
  u64 r = qpow64(q, u64(n) * (n - 1) / 2);
  for (int i = 2; i <= n; ++i) r = checked_mul_u64(r, qpow64(q, i) - 1);
  return r;
}

u64 su_order(int n, u64 q) {
  u64 r = qpow64(q, u64(n) * (n - 1) / 2);
  for (int i = 2; i <= n; ++i) {
    u64 t = qpow64(q, i);
    r = checked_mul_u64(r, i % 2 == 0 ? t - 1 : t + 1);
  }
  return r;
}

u64 sp_order(int m, u64 q) {
  u64 r = qpow64(q, u64(m) * m);
  for (int i = 1; i <= m; ++i) r = checked_mul_u64(r, qpow64(q, 2 * i) - 1);
  return r;
}

struct ProjectiveSpace {
  const Field* F = nullptr;
  int n = 0;
  std::vector<Vec> points;
  std::unordered_map<u64, uint32_t> index;

  u64 code(const Elt* v) const {
    u64 c = 0;
    for (int i = n; i-- > 0;) c = c * F->q + v[i];
    return c;
  }
  void canonicalize(Elt* v) const {
    int lead = 0;
    while (v[lead] == Field::zero) ++lead;
    Elt s = F->inv(v[lead]);
    for (int i = lead; i < n; ++i) v[i] = F->mul(s, v[i]);
  }
};

ProjectiveSpace make_space(const Field& F, int n) {
  ProjectiveSpace S;
  S.F = &F;
  S.n = n;
  u64 degree = (qpow64(F.q, n) - 1) / (F.q - 1);
  if (degree > 65535) {
    throw BudgetExceeded("catalog: projective degree " +
                         std::to_string(degree) + " exceeds the point budget");
  }
  S.points.reserve(degree);
  for (int lead = 0; lead < n; ++lead) {
    Vec v(n, Field::zero);
    v[lead] = Field::one;
    for (;;) {
      S.index.emplace(S.code(v.data()), static_cast<uint32_t>(S.points.size()));
      S.points.push_back(v);
      int i = n - 1;
      while (i > lead && v[i] == F.q - 1) v[i--] = Field::zero;
      if (i == lead) break;
      ++v[i];
    }
  }
  return S;
}

Perm perm_of_matrix(const ProjectiveSpace& S, const Mat& M) {
  const Field& F = *S.F;
  const int n = S.n;
  Perm out(S.points.size());
  Vec w(n);
  for (size_t id = 0; id < S.points.size(); ++id) {
    const Vec& v = S.points[id];
    for (int i = 0; i < n; ++i) {
      Elt acc = Field::zero;
      for (int j = 0; j < n; ++j) acc = F.add(acc, F.mul(M[i * n + j], v[j]));
      w[i] = acc;
    }
    S.canonicalize(w.data());
    out[id] = static_cast<Pt>(S.index.at(S.code(w.data())));
  }
  return out;
}

// Thins the candidate generators greedily. The candidates lie in a group of
// order want_order which they are known to generate, so hitting want_order
// certifies the image; falling short signals a corrupted construction.
GroupHandle image_group(const ProjectiveSpace& S, const std::vector<Mat>& mats,
                        u64 want_order, u64 budget, const std::string& what) {
  std::vector<Perm> kept;
  StabChain cur = StabChain::build(static_cast<int>(S.points.size()), {});
  SiftScratch s;
  for (const Mat& M : mats) {
    Perm g = perm_of_matrix(S, M);
    if (cur.contains(g, s)) continue;
    kept.push_back(std::move(g));
    cur = StabChain::build(static_cast<int>(S.points.size()), kept);
    if (cur.order() == want_order) break;
  }
  if (cur.order() != want_order) {
    throw std::logic_error(what + ": constructed order " +
                           std::to_string(cur.order()) + " does not match " +
                           std::to_string(want_order));
  }
  GroupHandle G;
  G.degree = static_cast<int>(S.points.size());
  G.element_budget = budget;
  G.generators = std::move(kept);
  G.order = cur.order();
  G.bsgs = std::move(cur);
  return G;
}

Mat identity_mat(int n) {
  Mat M(n * n, Field::zero);
  for (int i = 0; i < n; ++i) M[i * n + i] = Field::one;
  return M;
}

}  // namespace

GroupHandle alternating(int n, uint64_t element_budget) {
  if (n < 3 || n > 12) {
    throw std::invalid_argument("alternating: n out of range");
  }
  std::vector<Perm> gens = {parse_cycles("(1,2,3)", n)};
  std::string big = "(";
  for (int k = (n % 2 == 0) ? 2 : 1; k <= n; ++k) {
    if (big.size() > 1) big += ',';
    big += std::to_string(k);
  }
  big += ')';
  gens.push_back(parse_cycles(big, n));
  GroupHandle G = bsgs_build(n, gens, element_budget);
  u64 want = 1;
  for (int k = 3; k <= n; ++k) want *= k;
  if (G.order != want) throw std::logic_error("alternating: order mismatch");
  return G;
}

GroupHandle projective_special_linear(int n, uint32_t q,
                                      uint64_t element_budget) {
  if (n < 2) throw std::invalid_argument("projective_special_linear: n < 2");
  const Field& F = get_field(q);
  ProjectiveSpace S = make_space(F, n);
  std::vector<Mat> mats;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (uint32_t lam = 1; lam < q; ++lam) {
        Mat M = identity_mat(n);
        M[i * n + j] = static_cast<Elt>(lam);
        mats.push_back(std::move(M));
      }
    }
  }
  u64 want = sl_order(n, q) / std::gcd<u64>(n, q - 1);
  return image_group(S, mats, want, element_budget,
                     "projective_special_linear");
}

GroupHandle projective_special_unitary(int n, uint32_t q,
                                       uint64_t element_budget) {
  if (n < 3) throw std::invalid_argument("projective_special_unitary: n < 3");
  if (n == 3 && q == 2) {
    throw std::invalid_argument(
        "projective_special_unitary: (3, 2) transvections do not generate");
  }
  if (q > 255) {
    throw std::invalid_argument("projective_special_unitary: q too large");
  }
  const Field& F = get_field(q * q);
  ProjectiveSpace S = make_space(F, n);

  auto conj = [&](Elt a) { return F.pow(a, q); };
  auto hermitian = [&](const Vec& x, const Vec& y) {
    Elt acc = Field::zero;
    for (int i = 0; i < n; ++i) {
      acc = F.add(acc, F.mul(x[i], conj(y[n - 1 - i])));
    }
    return acc;
  };
  std::vector<Elt> trace_zero;
  for (uint32_t a = 1; a < F.q; ++a) {
    Elt x = static_cast<Elt>(a);
    if (F.add(x, conj(x)) == Field::zero) trace_zero.push_back(x);
  }

  std::vector<Mat> mats;
  for (const Vec& v : S.points) {
    if (hermitian(v, v) != Field::zero) continue;
    for (Elt lam : trace_zero) {
      Mat M = identity_mat(n);
      for (int k = 0; k < n; ++k) {
        if (v[k] == Field::zero) continue;
        for (int j = 0; j < n; ++j) {
          Elt c = conj(v[n - 1 - j]);
          M[k * n + j] = F.add(M[k * n + j], F.mul(F.mul(lam, v[k]), c));
        }
      }
      mats.push_back(std::move(M));
    }
  }
  u64 want = su_order(n, q) / std::gcd<u64>(n, q + 1);
  return image_group(S, mats, want, element_budget,
                     "projective_special_unitary");
}

GroupHandle symplectic(int d, uint32_t q, uint64_t element_budget) {
  if (d < 2 || d % 2 != 0) {
    throw std::invalid_argument("symplectic: dimension must be even");
  }
  const Field& F = get_field(q);
  const int m = d / 2;
  ProjectiveSpace S = make_space(F, d);

  std::vector<Mat> mats;
  for (const Vec& v : S.points) {
    for (uint32_t lam = 1; lam < q; ++lam) {
      Mat M = identity_mat(d);
      for (int k = 0; k < d; ++k) {
        if (v[k] == Field::zero) continue;
        for (int j = 0; j < d; ++j) {
          Elt c = v[d - 1 - j];
          if (j >= m) c = F.neg(c);
          M[k * d + j] = F.add(M[k * d + j],
                               F.mul(F.mul(static_cast<Elt>(lam), v[k]), c));
        }
      }
      mats.push_back(std::move(M));
    }
  }
  u64 want = sp_order(m, q) / std::gcd<u64>(2, q - 1);
  return image_group(S, mats, want, element_budget, "symplectic");
}

namespace {

// Nonzero vector <-> id: vector v sits at sum_i v_i q^i - 1.
void vector_at(Vec& v, u64 id, uint32_t q, int n) {
  u64 c = id + 1;
  for (int i = 0; i < n; ++i) {
    v[i] = static_cast<Elt>(c % q);
    c /= q;
  }
}

u64 id_of_vector(const Vec& v, uint32_t q, int n) {
  u64 c = 0;
  for (int i = n; i-- > 0;) c = c * q + v[i];
  return c - 1;
}

}  // namespace

GroupHandle special_linear_vectors(int n, uint32_t q,
                                   uint64_t element_budget) {
  if (n < 2) throw std::invalid_argument("special_linear_vectors: n < 2");
  const Field& F = get_field(q);
  u64 nvec = qpow64(q, n) - 1;
  if (nvec > 65535) {
    throw BudgetExceeded("special_linear_vectors: " + std::to_string(nvec) +
                         " vectors exceed the point budget");
  }
  const int degree = static_cast<int>(nvec);
  auto act = [&](const Mat& M) {
    Perm out(degree);
    Vec v(n), w(n);
    for (u64 id = 0; id < nvec; ++id) {
      vector_at(v, id, q, n);
      for (int i = 0; i < n; ++i) {
        Elt acc = Field::zero;
        for (int j = 0; j < n; ++j) acc = F.add(acc, F.mul(M[i * n + j], v[j]));
        w[i] = acc;
      }
      out[id] = static_cast<Pt>(id_of_vector(w, q, n));
    }
    return out;
  };

  u64 want = sl_order(n, q);
  std::vector<Perm> kept;
  StabChain cur = StabChain::build(degree, {});
  SiftScratch s;
  for (int i = 0; i < n && cur.order() != want; ++i) {
    for (int j = 0; j < n && cur.order() != want; ++j) {
      if (i == j) continue;
      for (uint32_t lam = 1; lam < q; ++lam) {
        Mat M = identity_mat(n);
        M[i * n + j] = static_cast<Elt>(lam);
        Perm g = act(M);
        if (cur.contains(g, s)) continue;
        kept.push_back(std::move(g));
        cur = StabChain::build(degree, kept);
        if (cur.order() == want) break;
      }
    }
  }
  if (cur.order() != want) {
    throw std::logic_error("special_linear_vectors: constructed order " +
                           std::to_string(cur.order()) +
                           " does not match " + std::to_string(want));
  }
  GroupHandle G;
  G.degree = degree;
  G.element_budget = element_budget;
  G.generators = std::move(kept);
  G.order = cur.order();
  G.bsgs = std::move(cur);
  return G;
}

Perm scalar_class_quotient(int n, uint32_t q, const Perm& vector_perm) {
  const Field& F = get_field(q);
  ProjectiveSpace S = make_space(F, n);
  u64 nvec = qpow64(q, n) - 1;
  if (vector_perm.size() != nvec) {
    throw std::invalid_argument("scalar_class_quotient: degree mismatch");
  }
  auto image_point = [&](const Vec& v) {
    Vec w(n);
    vector_at(w, vector_perm[id_of_vector(v, q, n)], q, n);
    S.canonicalize(w.data());
    return static_cast<Pt>(S.index.at(S.code(w.data())));
  };
  Perm out(S.points.size());
  Vec scaled(n);
  for (size_t id = 0; id < S.points.size(); ++id) {
    out[id] = image_point(S.points[id]);
    for (uint32_t lam = 2; lam < q; ++lam) {
      for (int i = 0; i < n; ++i) {
        scaled[i] = F.mul(static_cast<Elt>(lam), S.points[id][i]);
      }
      if (image_point(scaled) != out[id]) {
        throw std::invalid_argument(
            "scalar_class_quotient: input moves scalar classes apart");
      }
    }
  }
  return out;
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

GroupFile parse_group_file(std::istream& in, const std::string& what) {
  GroupFile f;
  bool saw_name = false, saw_degree = false;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where =
        what + ":" + std::to_string(lineno) + ": ";
    if (line[0] == '(') {
      if (!saw_degree) {
        throw std::runtime_error(where + "generator before degree header");
      }
      f.generators.push_back(parse_cycles(line, f.degree));
      continue;
    }
    size_t sp = line.find_first_of(" \t");
    std::string key = sp == std::string::npos ? line : line.substr(0, sp);
    std::string value =
        sp == std::string::npos ? "" : trim(line.substr(sp + 1));
    if (key == "name") {
      if (value.empty()) throw std::runtime_error(where + "empty name");
      f.name = value;
      saw_name = true;
    } else if (key == "degree") {
      long v = std::stol(value);
      if (v < 1 || v > 65535) {
        throw std::runtime_error(where + "degree out of range");
      }
      f.degree = static_cast<int>(v);
      saw_degree = true;
    } else if (key == "order") {
      f.order = std::stoull(value);
    } else if (key == "simple") {
      if (value == "true" || value == "1") {
        f.simple = true;
      } else if (value == "false" || value == "0") {
        f.simple = false;
      } else {
        throw std::runtime_error(where + "bad boolean");
      }
    } else {
      f.extra[key] = value;
    }
  }
  if (!saw_name || !saw_degree) {
    throw std::runtime_error(what + ": missing name or degree header");
  }
  return f;
}

GroupFile read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group file: " + path);
  return parse_group_file(in, path);
}

void write_group_file(std::ostream& out, const GroupFile& f) {
  for (const std::string& c : f.comments) out << "# " << c << "\n";
  out << "name " << f.name << "\n";
  out << "degree " << f.degree << "\n";
  if (f.order) out << "order " << *f.order << "\n";
  if (f.simple) out << "simple " << (*f.simple ? "true" : "false") << "\n";
  for (const auto& [k, v] : f.extra) out << k << " " << v << "\n";
  for (const Perm& g : f.generators) out << format_cycles(g) << "\n";
}

GroupHandle load_group(const GroupSpec& spec, uint64_t element_budget) {
  GroupHandle G;
  switch (spec.family) {
    case GroupSpec::Family::Alternating:
      G = alternating(spec.n, element_budget);
      break;
    case GroupSpec::Family::Linear:
      G = projective_special_linear(spec.n, spec.q, element_budget);
      break;
    case GroupSpec::Family::Unitary:
      G = projective_special_unitary(spec.n, spec.q, element_budget);
      break;
    case GroupSpec::Family::Symplectic:
      G = symplectic(spec.n, spec.q, element_budget);
      break;
    case GroupSpec::Family::File: {
      GroupFile f = read_group_file(spec.path);
      G = bsgs_build(f.degree, f.generators, element_budget);
      if (f.order && *f.order != G.order) {
        throw std::runtime_error("load_group: order mismatch in " + spec.path +
                                 " (corrupted data file)");
      }
      break;
    }
  }
  if (spec.expected_order && *spec.expected_order != G.order) {
    throw std::runtime_error("load_group: " + spec.name +
                             " expected order " +
                             std::to_string(*spec.expected_order) + ", got " +
                             std::to_string(G.order));
  }
  return G;
}

Perm projective_matrix_action(const Field& F, int n,
                              const std::vector<Field::Elt>& mat) {
  ProjectiveSpace S = make_space(F, n);
  return perm_of_matrix(S, mat);
}

std::vector<Perm> projective_orbit_action(
    const Field& F, int n, const std::vector<std::vector<Field::Elt>>& mats,
    const std::vector<Field::Elt>& start, size_t max_orbit) {
  ProjectiveSpace S;
  S.F = &F;
  S.n = n;
  Vec v = start;
  S.canonicalize(v.data());
  S.index.emplace(S.code(v.data()), 0);
  S.points.push_back(v);
  Vec w(n);
  for (size_t at = 0; at < S.points.size(); ++at) {
    for (const Mat& M : mats) {
      const Vec x = S.points[at];
      for (int i = 0; i < n; ++i) {
        Elt acc = Field::zero;
        for (int j = 0; j < n; ++j) acc = F.add(acc, F.mul(M[i * n + j], x[j]));
        w[i] = acc;
      }
      S.canonicalize(w.data());
      u64 c = S.code(w.data());
      if (S.index.emplace(c, static_cast<uint32_t>(S.points.size())).second) {
        S.points.push_back(w);
        if (S.points.size() > max_orbit) {
          throw std::runtime_error("projective_orbit_action: orbit too large");
        }
      }
    }
  }
  std::vector<Perm> out;
  out.reserve(mats.size());
  for (const Mat& M : mats) out.push_back(perm_of_matrix(S, M));
  return out;
}

}  // namespace ocg
