#include "nlft/field.hpp"

#include <algorithm>
#include <string>

namespace nlft {

bool all_finite(std::span<const cplx> v) noexcept
{
  return std::all_of(v.begin(), v.end(),
                     [](const cplx& c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); });
}

ComplexField::ComplexField(Lattice lattice) : lattice_(lattice), samples_(lattice.size()) {}

ComplexField::ComplexField(Lattice lattice, CVector samples)
    : lattice_(lattice), samples_(std::move(samples))
{
  if (samples_.size() != lattice_.size())
    throw std::invalid_argument("field has " + std::to_string(samples_.size()) +
                                " samples, lattice needs " + std::to_string(lattice_.size()));
  if (!all_finite(samples_)) throw std::invalid_argument("field contains non-finite samples");
}

void require_same_lattice(const ComplexField& a, const ComplexField& b, const char* what)
{
  if (!a.lattice().same_geometry(b.lattice()))
    throw LatticeMismatch(std::string(what) + ": fields live on different lattices");
}

namespace {

template <class Op>
ComplexField zip(const ComplexField& a, const ComplexField& b, const char* what, Op op)
{
  require_same_lattice(a, b, what);
  CVector out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(a[i], b[i]);
  return {a.lattice(), std::move(out)};
}

template <class Op>
ComplexField map(const ComplexField& a, Op op)
{
  CVector out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(a[i]);
  return {a.lattice(), std::move(out)};
}

}  // namespace

ComplexField operator+(const ComplexField& a, const ComplexField& b)
{
  return zip(a, b, "add", [](cplx x, cplx y) { return x + y; });
}

ComplexField operator-(const ComplexField& a, const ComplexField& b)
{
  return zip(a, b, "subtract", [](cplx x, cplx y) { return x - y; });
}

ComplexField operator*(const ComplexField& a, const ComplexField& b)
{
  return zip(a, b, "multiply", [](cplx x, cplx y) { return x * y; });
}

ComplexField operator*(cplx alpha, const ComplexField& a)
{
  return map(a, [alpha](cplx x) { return alpha * x; });
}

ComplexField conj(const ComplexField& a)
{
  return map(a, [](cplx x) { return std::conj(x); });
}

ComplexField modulus(const ComplexField& a)
{
  return map(a, [](cplx x) { return cplx(std::abs(x), 0.0); });
}

ComplexField retag(const ComplexField& a, Domain d)
{
  return {with_domain(a.lattice(), d), a.copy_samples()};
}

cplx inner(const ComplexField& a, const ComplexField& b)
{
  require_same_lattice(a, b, "inner");
  cplx acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc * a.lattice().cell_area();
}

double l2(std::span<const cplx> v, double cell_area)
{
  double acc = 0.0;
  for (const cplx& c : v) acc += std::norm(c);
  return std::sqrt(acc * cell_area);
}

double l2(const ComplexField& a) { return l2(a.samples(), a.lattice().cell_area()); }

double relative_l2(const ComplexField& a, const ComplexField& b)
{
  require_same_lattice(a, b, "relative_l2");
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += std::norm(a[i] - b[i]);
    den += std::norm(b[i]);
  }
  if (den == 0.0) return num == 0.0 ? 0.0 : std::sqrt(num);
  return std::sqrt(num / den);
}

}  // namespace nlft
