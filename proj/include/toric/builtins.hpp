#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

/// Fan of P^n: rays e_1..e_n and -(e_1+..+e_n); maximal cones are all
/// n-subsets of the n+1 rays.
inline Fan gen_pn(int n) {
  if (n < 1) throw std::invalid_argument("pn: n must be >= 1");
  std::vector<RayVector> rays;
  for (int i = 0; i < n; ++i) {
    std::vector<long long> c(n, 0);
    c[i] = 1;
    rays.push_back(RayVector{std::move(c)});
  }
  rays.push_back(RayVector{std::vector<long long>(n, -1)});
  std::vector<Cone> cones;
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<int> ix;
    for (int i = 0; i <= n; ++i)
      if (i != skip) ix.push_back(i);
    cones.push_back(Cone{std::move(ix)});
  }
  return make_fan(n, std::move(rays), std::move(cones));
}

/// Fan of P^n x P^m as the product of the two projective fans. Rays are
/// e_1..e_{n+m} followed by the two anticanonical rays of the factors;
/// maximal cones are unions of one maximal cone from each factor.
inline Fan gen_product_pn_pm(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("product: n and m must be >= 1");
  const int dim = n + m;
  std::vector<RayVector> rays;
  for (int i = 0; i < dim; ++i) {
    std::vector<long long> c(dim, 0);
    c[i] = 1;
    rays.push_back(RayVector{std::move(c)});
  }
  {
    std::vector<long long> c(dim, 0);
    for (int i = 0; i < n; ++i) c[i] = -1;
    rays.push_back(RayVector{std::move(c)});
  }
  {
    std::vector<long long> c(dim, 0);
    for (int i = n; i < dim; ++i) c[i] = -1;
    rays.push_back(RayVector{std::move(c)});
  }
  // factor ray index sets: {0..n-1, n+m} and {n..n+m-1, n+m+1}
  std::vector<int> first, second;
  for (int i = 0; i < n; ++i) first.push_back(i);
  first.push_back(dim);
  for (int i = n; i < dim; ++i) second.push_back(i);
  second.push_back(dim + 1);
  std::vector<Cone> cones;
  for (size_t a = 0; a < first.size(); ++a) {
    for (size_t b = 0; b < second.size(); ++b) {
      std::vector<int> ix;
      for (size_t i = 0; i < first.size(); ++i)
        if (i != a) ix.push_back(first[i]);
      for (size_t i = 0; i < second.size(); ++i)
        if (i != b) ix.push_back(second[i]);
      cones.push_back(Cone{std::move(ix)});
    }
  }
  return make_fan(dim, std::move(rays), std::move(cones));
}

/// Fan of the blow-up of P^n at the torus-fixed point of the cone spanned by
/// e_2..e_{n+1}: that cone is stellarly subdivided at the new ray -e_1.
inline Fan gen_blowup_pn(int n) {
  if (n < 2) throw std::invalid_argument("blowup-pn: n must be >= 2");
  std::vector<RayVector> rays;
  for (int i = 0; i < n; ++i) {
    std::vector<long long> c(n, 0);
    c[i] = 1;
    rays.push_back(RayVector{std::move(c)});
  }
  rays.push_back(RayVector{std::vector<long long>(n, -1)});  // e_{n+1}
  {
    std::vector<long long> c(n, 0);
    c[0] = -1;
    rays.push_back(RayVector{std::move(c)});  // e_{n+2} = -e_1
  }
  std::vector<Cone> cones;
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<int> ix;
    for (int i = 0; i <= n; ++i)
      if (i != skip) ix.push_back(i);
    if (skip == 0) {
      // subdivided cone e_2..e_{n+1}: replace each generator in turn by -e_1
      for (size_t drop = 0; drop < ix.size(); ++drop) {
        std::vector<int> sub;
        for (size_t i = 0; i < ix.size(); ++i) sub.push_back(i == drop ? n + 1 : ix[i]);
        cones.push_back(Cone{std::move(sub)});
      }
    } else {
      cones.push_back(Cone{std::move(ix)});
    }
  }
  return make_fan(n, std::move(rays), std::move(cones));
}

/// Fan of the Hirzebruch surface with parameter a: rays (1,0), (0,1),
/// (-1,a), (0,-1) and the four adjacent 2-cones. a = 1 is accepted even
/// though some references restrict to a > 1; the fan is smooth and complete
/// for every a >= 1.
inline Fan gen_hirzebruch(long long a) {
  if (a < 1) throw std::invalid_argument("hirzebruch: a must be >= 1");
  std::vector<RayVector> rays = {
      RayVector{{1, 0}},
      RayVector{{0, 1}},
      RayVector{{-1, a}},
      RayVector{{0, -1}},
  };
  std::vector<Cone> cones = {Cone{{0, 1}}, Cone{{1, 2}}, Cone{{2, 3}}, Cone{{0, 3}}};
  return make_fan(2, std::move(rays), std::move(cones));
}

/// Parse a generator spec such as "pn 2", "product 2 1", "blowup-pn 3",
/// "hirzebruch 2". Throws std::invalid_argument on anything else.
inline Fan gen_from_spec(const std::vector<std::string>& words) {
  auto arg = [&](size_t i) -> long long {
    if (i >= words.size()) throw std::invalid_argument("generator spec: missing argument");
    try {
      size_t pos = 0;
      long long v = std::stoll(words[i], &pos);
      if (pos != words[i].size()) throw std::invalid_argument("");
      return v;
    } catch (...) {
      throw std::invalid_argument("generator spec: bad integer \"" + words[i] + "\"");
    }
  };
  if (words.empty()) throw std::invalid_argument("empty generator spec");
  const std::string& name = words[0];
  if (name == "pn") {
    if (words.size() != 2) throw std::invalid_argument("usage: pn <n>");
    return gen_pn(static_cast<int>(arg(1)));
  }
  if (name == "product") {
    if (words.size() != 3) throw std::invalid_argument("usage: product <n> <m>");
    return gen_product_pn_pm(static_cast<int>(arg(1)), static_cast<int>(arg(2)));
  }
  if (name == "blowup-pn") {
    if (words.size() != 2) throw std::invalid_argument("usage: blowup-pn <n>");
    return gen_blowup_pn(static_cast<int>(arg(1)));
  }
  if (name == "hirzebruch") {
    if (words.size() != 2) throw std::invalid_argument("usage: hirzebruch <a>");
    return gen_hirzebruch(arg(1));
  }
  throw std::invalid_argument("unknown generator \"" + name + "\"");
}

}  // namespace toric
