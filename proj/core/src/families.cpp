#include "koszul/families.hpp"

namespace koszul::detail {

namespace {

using Poly = std::vector<Int>;  // univariate, index = power of t

Poly poly_mul(const Poly& f, const Poly& g) {
  if (f.empty() || g.empty()) return {};
  Poly out(f.size() + g.size() - 1, Int(0));
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
  return out;
}

Poly poly_deriv(const Poly& f) {
  if (f.size() <= 1) return {};
  Poly out(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = f[i] * Int(static_cast<long>(i));
  return out;
}

Poly poly_sub(Poly f, const Poly& g) {
  if (g.size() > f.size()) f.resize(g.size(), Int(0));
  for (std::size_t i = 0; i < g.size(); ++i) f[i] -= g[i];
  return f;
}

// Binary form of degree d as coefficients by y-exponent: sum c_k x^{d-k} y^k.
struct Form {
  Index deg;
  std::vector<Int> c;  // size deg+1
};

Form form_dx(const Form& f) {  // d/dx drops x-degree, keeps y-exponent
  Form out{f.deg - 1, std::vector<Int>(static_cast<std::size_t>(f.deg), Int(0))};
  for (Index k = 0; k < f.deg; ++k)
    out.c[static_cast<std::size_t>(k)] =
        f.c[static_cast<std::size_t>(k)] * Int(static_cast<long>(f.deg - k));
  return out;
}

Form form_dy(const Form& f) {
  Form out{f.deg - 1, std::vector<Int>(static_cast<std::size_t>(f.deg), Int(0))};
  for (Index k = 1; k <= f.deg; ++k)
    out.c[static_cast<std::size_t>(k - 1)] =
        f.c[static_cast<std::size_t>(k)] * Int(static_cast<long>(k));
  return out;
}

Form form_mul(const Form& f, const Form& g) {
  Form out{f.deg + g.deg,
           std::vector<Int>(static_cast<std::size_t>(f.deg + g.deg) + 1, Int(0))};
  for (std::size_t i = 0; i < f.c.size(); ++i)
    for (std::size_t j = 0; j < g.c.size(); ++j) out.c[i + j] += f.c[i] * g.c[j];
  return out;
}

}  // namespace

std::vector<std::vector<Int>> weyman_rows(Index n) {
  const Index d = n - 1;
  const Index pairs = n * (n - 1) / 2;
  const Index target = 2 * n - 3;  // dim of degree-(2n-4) forms
  std::vector<std::vector<Int>> rows(static_cast<std::size_t>(target),
                                     std::vector<Int>(static_cast<std::size_t>(pairs), Int(0)));
  auto form_basis = [&](Index a) {
    Form f{d, std::vector<Int>(static_cast<std::size_t>(d) + 1, Int(0))};
    f.c[static_cast<std::size_t>(a)] = 1;  // x^{n-1-a} y^a
    return f;
  };
  Index col = 0;
  for (Index a = 0; a < n; ++a)
    for (Index b = a + 1; b < n; ++b, ++col) {
      const Form fa = form_basis(a), fb = form_basis(b);
      const Form fx_gy = form_mul(form_dx(fa), form_dy(fb));
      const Form fy_gx = form_mul(form_dy(fa), form_dx(fb));
      for (Index k = 0; k < target; ++k) {
        Int v = fx_gy.c[static_cast<std::size_t>(k)] -
                fy_gx.c[static_cast<std::size_t>(k)];
        rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(col)] = v;
      }
    }
  return rows;
}

std::vector<std::vector<Int>> gaussian_rnc_rows(Index n) {
  const Index pairs = n * (n - 1) / 2;
  const Index target = 2 * n - 3;
  std::vector<std::vector<Int>> rows(static_cast<std::size_t>(target),
                                     std::vector<Int>(static_cast<std::size_t>(pairs), Int(0)));
  auto section = [&](Index a) {  // f_a(t) = t^{n-1-a}, matching x=t, y=1
    Poly f(static_cast<std::size_t>(n), Int(0));
    f[static_cast<std::size_t>(n - 1 - a)] = 1;
    return f;
  };
  Index col = 0;
  for (Index a = 0; a < n; ++a)
    for (Index b = a + 1; b < n; ++b, ++col) {
      const Poly fa = section(a), fb = section(b);
      const Poly w = poly_sub(poly_mul(fa, poly_deriv(fb)),
                              poly_mul(fb, poly_deriv(fa)));
      for (std::size_t s = 0; s < w.size() && s < rows.size(); ++s)
        rows[s][static_cast<std::size_t>(col)] = w[s];
    }
  return rows;
}

std::vector<std::vector<Int>> split_bundle_rows(Index a, Index b) {
  const Index n = a + b + 2;
  const Index pairs = n * (n - 1) / 2;
  const Index target = a + b + 1;  // dim of degree-(a+b) forms
  // Section i of O(a)+O(b): (t^i, 0) for i <= a, else (0, t^{i-a-1}).
  auto first = [&](Index i) {
    Poly f;
    if (i <= a) {
      f.assign(static_cast<std::size_t>(i) + 1, Int(0));
      f[static_cast<std::size_t>(i)] = 1;
    }
    return f;
  };
  auto second = [&](Index i) {
    Poly g;
    if (i > a) {
      g.assign(static_cast<std::size_t>(i - a - 1) + 1, Int(0));
      g[static_cast<std::size_t>(i - a - 1)] = 1;
    }
    return g;
  };
  std::vector<std::vector<Int>> rows(static_cast<std::size_t>(target),
                                     std::vector<Int>(static_cast<std::size_t>(pairs), Int(0)));
  Index col = 0;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j, ++col) {
      const Poly det = poly_sub(poly_mul(first(i), second(j)),
                                poly_mul(first(j), second(i)));
      for (std::size_t s = 0; s < det.size() && s < rows.size(); ++s)
        rows[s][static_cast<std::size_t>(col)] = det[s];
    }
  return rows;
}

}  // namespace koszul::detail
