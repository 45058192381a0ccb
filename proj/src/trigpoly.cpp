#include "reglab/trigpoly.hpp"

#include <algorithm>
#include <cmath>

namespace reglab {

cplx twopii_pow(int p) {
  double mag = std::pow(kTwoPi, p);
  switch (((p % 4) + 4) % 4) {
    case 0: return cplx(mag, 0.0);
    case 1: return cplx(0.0, mag);
    case 2: return cplx(-mag, 0.0);
    default: return cplx(0.0, -mag);
  }
}

int Mode::norm_inf() const {
  int m = 0;
  for (int i = 0; i < 3; ++i) m = std::max(m, std::abs(n[std::size_t(i)]));
  return m;
}

TrigPoly::TrigPoly(int dim) : dim_(dim) {
  require(dim >= 1 && dim <= 3, "DimRange", "torus dimension must be 1..3");
}

TrigPoly TrigPoly::constant(int dim, cplx c, int scale) {
  TrigPoly p(dim);
  p.scale_ = scale;
  p.set_raw_coeff(Mode{}, c);
  return p;
}

TrigPoly TrigPoly::character(int dim, Mode n, cplx c) {
  TrigPoly p(dim);
  for (int i = dim; i < 3; ++i)
    require(n[i] == 0, "DimRange", "mode has entries beyond the declared dimension");
  p.set_raw_coeff(n, c);
  return p;
}

int TrigPoly::degree() const {
  int d = 0;
  for (const auto& [n, c] : coeffs_) d = std::max(d, n.norm_inf());
  return d;
}

cplx TrigPoly::raw_coeff(Mode n) const {
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? cplx(0.0) : it->second;
}

void TrigPoly::set_raw_coeff(Mode n, cplx c) {
  if (c == cplx(0.0))
    coeffs_.erase(n);
  else
    coeffs_[n] = c;
  if (coeffs_.empty()) scale_ = 0;
}

void TrigPoly::add_raw_coeff(Mode n, cplx c) { set_raw_coeff(n, raw_coeff(n) + c); }

void TrigPoly::trim() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second == cplx(0.0))
      it = coeffs_.erase(it);
    else
      ++it;
  }
  if (coeffs_.empty()) scale_ = 0;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
  require(dim_ == o.dim_, "DimMismatch", "adding trig polynomials of different dimension");
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  // Align prefactors on the smaller exponent; exact when they already agree.
  if (scale_ != o.scale_) {
    int target = std::min(scale_, o.scale_);
    *this = with_scale(target);
    TrigPoly rhs = o.with_scale(target);
    for (const auto& [n, c] : rhs.coeffs_) add_raw_coeff(n, c);
    return *this;
  }
  for (const auto& [n, c] : o.coeffs_) add_raw_coeff(n, c);
  return *this;
}

TrigPoly TrigPoly::operator+(const TrigPoly& o) const {
  TrigPoly r = *this;
  r += o;
  return r;
}

TrigPoly TrigPoly::operator-() const {
  TrigPoly r = *this;
  for (auto& [n, c] : r.coeffs_) c = -c;
  return r;
}

TrigPoly TrigPoly::operator-(const TrigPoly& o) const { return *this + (-o); }

TrigPoly TrigPoly::operator*(const TrigPoly& o) const {
  require(dim_ == o.dim_, "DimMismatch", "multiplying trig polynomials of different dimension");
  // Order the operands canonically so f*g and g*f accumulate in the same
  // order and agree bitwise.
  const TrigPoly* a = this;
  const TrigPoly* b = &o;
  if (b->cmp(*a) == std::strong_ordering::less) std::swap(a, b);
  TrigPoly r(dim_);
  r.scale_ = scale_ + o.scale_;
  for (const auto& [m, cm] : a->coeffs_)
    for (const auto& [n, cn] : b->coeffs_) r.add_raw_coeff(m + n, cm * cn);
  r.trim();
  return r;
}

TrigPoly TrigPoly::scaled(cplx c) const {
  TrigPoly r = *this;
  for (auto& [n, v] : r.coeffs_) v *= c;
  r.trim();
  return r;
}

TrigPoly TrigPoly::scaled_twopii(int k) const {
  TrigPoly r = *this;
  if (!r.coeffs_.empty()) r.scale_ += k;
  return r;
}

TrigPoly TrigPoly::with_scale(int target) const {
  if (is_zero() || target == scale_) return *this;
  TrigPoly r = scaled(twopii_pow(scale_ - target));
  r.scale_ = target;
  return r;
}

TrigPoly TrigPoly::derive(int axis) const {
  require(axis >= 0 && axis < dim_, "AxisRange", "derivative axis out of range");
  TrigPoly r(dim_);
  r.scale_ = scale_ + 1;
  for (const auto& [n, c] : coeffs_) {
    if (n[axis] != 0) r.add_raw_coeff(n, double(n[axis]) * c);
  }
  r.trim();
  return r;
}

cplx TrigPoly::integrate() const { return coeff_value(Mode{}); }

cplx TrigPoly::eval(const std::array<double, 3>& t) const {
  cplx acc = 0.0;
  for (const auto& [n, c] : coeffs_) {
    double phase = 0.0;
    for (int i = 0; i < dim_; ++i) phase += double(n[i]) * t[std::size_t(i)];
    acc += c * std::polar(1.0, kTwoPi * phase);
  }
  return acc * twopii_pow(scale_);
}

double TrigPoly::max_abs_value() const {
  double m = 0.0;
  double s = std::abs(twopii_pow(scale_));
  for (const auto& [n, c] : coeffs_) m = std::max(m, std::abs(c) * s);
  return m;
}

double TrigPoly::total_abs_value() const {
  double m = 0.0;
  double s = std::abs(twopii_pow(scale_));
  for (const auto& [n, c] : coeffs_) m += std::abs(c) * s;
  return m;
}

std::strong_ordering TrigPoly::cmp(const TrigPoly& o) const {
  if (auto c = dim_ <=> o.dim_; c != 0) return c;
  if (auto c = scale_ <=> o.scale_; c != 0) return c;
  auto ita = coeffs_.begin();
  auto itb = o.coeffs_.begin();
  for (; ita != coeffs_.end() && itb != o.coeffs_.end(); ++ita, ++itb) {
    if (auto c = ita->first <=> itb->first; c != 0) return c;
    if (auto c = ita->second.real() <=> itb->second.real(); c != 0)
      return c == std::partial_ordering::less ? std::strong_ordering::less
                                              : std::strong_ordering::greater;
    if (auto c = ita->second.imag() <=> itb->second.imag(); c != 0)
      return c == std::partial_ordering::less ? std::strong_ordering::less
                                              : std::strong_ordering::greater;
  }
  if (ita != coeffs_.end()) return std::strong_ordering::greater;
  if (itb != o.coeffs_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

bool TrigPoly::approx_equal(const TrigPoly& o, double tol) const {
  if (dim_ != o.dim_) return false;
  return (*this - o).max_abs_value() <= tol;
}

UnitFunction::UnitFunction(std::array<int, 3> winding, TrigPoly logpart)
    : winding_(winding), logpart_(std::move(logpart)) {
  for (int i = logpart_.dim(); i < 3; ++i)
    require(winding_[std::size_t(i)] == 0, "DimRange",
            "winding has entries beyond the log-part dimension");
}

cplx UnitFunction::eval(const std::array<double, 3>& t) const {
  double phase = 0.0;
  for (int i = 0; i < dim(); ++i) phase += double(winding_[std::size_t(i)]) * t[std::size_t(i)];
  return std::polar(1.0, kTwoPi * phase) * std::exp(logpart_.eval(t));
}

UnitFunction UnitFunction::operator*(const UnitFunction& o) const {
  require(dim() == o.dim(), "DimMismatch", "multiplying units of different dimension");
  std::array<int, 3> w{};
  for (int i = 0; i < 3; ++i)
    w[std::size_t(i)] = winding_[std::size_t(i)] + o.winding_[std::size_t(i)];
  return UnitFunction(w, logpart_ + o.logpart_);
}

UnitFunction UnitFunction::inverse() const {
  std::array<int, 3> w{};
  for (int i = 0; i < 3; ++i) w[std::size_t(i)] = -winding_[std::size_t(i)];
  return UnitFunction(w, -logpart_);
}

UnitFunction exp_unit(const TrigPoly& f, int out_degree, double tail_tol) {
  require(out_degree >= f.degree(), "DegreeRange", "out_degree must cover deg(f)");
  require(tail_tol > 0, "BadTolerance", "tail_tol must be positive");
  UnitFunction u({0, 0, 0}, f);
  // The canonical representation logpart = f is exact; the sampled check
  // guards re-encoded inputs and the grid conventions downstream.
  int m = std::max(4 * out_degree, 4);
  double err = 0.0;
  std::array<double, 3> t{0, 0, 0};
  std::vector<int> idx(std::size_t(f.dim()), 0);
  bool done = false;
  while (!done) {
    for (int i = 0; i < f.dim(); ++i) t[std::size_t(i)] = double(idx[std::size_t(i)]) / m;
    err = std::max(err, std::abs(u.eval(t) - std::exp(f.eval(t))));
    int i = 0;
    for (; i < f.dim(); ++i) {
      if (++idx[std::size_t(i)] < m) break;
      idx[std::size_t(i)] = 0;
    }
    done = (i == f.dim());
  }
  require(err <= tail_tol, "TailTolExceeded", "sampled exp representation error above tail_tol");
  return u;
}

namespace {

// Continuous argument of a path of nonvanishing samples, anchored at the
// principal branch of the first sample.
std::vector<cplx> tracked_log(const std::vector<cplx>& samples) {
  std::vector<cplx> out(samples.size());
  double arg = std::arg(samples[0]);
  out[0] = cplx(std::log(std::abs(samples[0])), arg);
  for (std::size_t i = 1; i < samples.size(); ++i) {
    require(std::abs(samples[i]) >= 1e-12, "UnitVanishes", "sample magnitude below 1e-12");
    arg += std::arg(samples[i] / samples[i - 1]);
    out[i] = cplx(std::log(std::abs(samples[i])), arg);
  }
  return out;
}

}  // namespace

LogUnitResult log_unit(int samples_per_period,
                       const std::function<cplx(const std::array<double, 3>&)>& u, int dim) {
  require(dim >= 1 && dim <= 3, "DimRange", "torus dimension must be 1..3");
  int m = samples_per_period;
  require(m >= 4, "BadGrid", "need at least 4 samples per period");

  LogUnitResult res;
  res.logpart = TrigPoly(dim);

  // Winding per axis from the closed loop through the origin.
  for (int axis = 0; axis < dim; ++axis) {
    std::vector<cplx> loop(std::size_t(m) + 1);
    for (int j = 0; j <= m; ++j) {
      std::array<double, 3> t{0, 0, 0};
      t[std::size_t(axis)] = double(j) / m;
      loop[std::size_t(j)] = u(t);
      require(std::abs(loop[std::size_t(j)]) >= 1e-12, "UnitVanishes",
              "sample magnitude below 1e-12");
    }
    auto lg = tracked_log(loop);
    double turns = (lg.back().imag() - lg.front().imag()) / kTwoPi;
    double rounded = std::round(turns);
    require(std::abs(turns - rounded) <= 1e-6, "WindingAmbiguous",
            "argument increment around a generator is not close to an integer");
    res.winding[std::size_t(axis)] = int(rounded);
  }

  // Log samples over the full grid, tracked along a snake path so the branch
  // is globally continuous, then divided by the winding character.
  int total = 1;
  for (int i = 0; i < dim; ++i) total *= m;
  std::vector<cplx> snake(static_cast<std::size_t>(total));
  std::vector<int> order(static_cast<std::size_t>(total));
  std::vector<int> idx(static_cast<std::size_t>(dim), 0);
  // Row-major traversal with alternating direction in axis 0 keeps grid
  // neighbours adjacent along the path.
  for (int lin = 0; lin < total; ++lin) {
    int rest = lin;
    for (int i = dim - 1; i >= 1; --i) {
      int stride = 1;
      for (int j = 0; j < i; ++j) stride *= m;
      idx[std::size_t(i)] = rest / stride;
      rest %= stride;
    }
    int row_parity = 0;
    for (int i = 1; i < dim; ++i) row_parity += idx[std::size_t(i)];
    idx[0] = (row_parity % 2 == 0) ? rest : (m - 1 - rest);
    int flat = 0;
    for (int i = dim - 1; i >= 0; --i) flat = flat * m + idx[std::size_t(i)];
    order[std::size_t(lin)] = flat;
    std::array<double, 3> t{0, 0, 0};
    for (int i = 0; i < dim; ++i) t[std::size_t(i)] = double(idx[std::size_t(i)]) / m;
    double wphase = 0.0;
    for (int i = 0; i < dim; ++i) wphase += double(res.winding[std::size_t(i)]) * t[std::size_t(i)];
    snake[std::size_t(lin)] = u(t) * std::polar(1.0, -kTwoPi * wphase);
  }
  auto lg = tracked_log(snake);
  std::vector<cplx> grid_log(static_cast<std::size_t>(total));
  for (int lin = 0; lin < total; ++lin)
    grid_log[std::size_t(order[std::size_t(lin)])] = lg[std::size_t(lin)];

  // Discrete Fourier analysis; modes up to m/2 - 1 are alias-free.
  // Direct (not fast) transform; grids here are small.
  int maxdeg = m / 2 - 1;
  TrigPoly g(dim);
  std::vector<int> nm(std::size_t(dim), -maxdeg);
  bool done = dim == 0;
  while (!done) {
    Mode n;
    for (int i = 0; i < dim; ++i) n[i] = nm[std::size_t(i)];
    cplx c = 0.0;
    for (int flat = 0; flat < total; ++flat) {
      int rest = flat;
      double phase = 0.0;
      for (int i = 0; i < dim; ++i) {
        int gidx = rest % m;
        rest /= m;
        phase += double(n[i]) * double(gidx) / m;
      }
      c += grid_log[std::size_t(flat)] * std::polar(1.0, -kTwoPi * phase);
    }
    c /= double(total);
    if (std::abs(c) > 1e-13) g.add_raw_coeff(n, c);
    int i = 0;
    for (; i < dim; ++i) {
      if (++nm[std::size_t(i)] <= maxdeg) break;
      nm[std::size_t(i)] = -maxdeg;
    }
    done = (i == dim);
  }
  res.logpart = g;
  return res;
}

std::array<int, 3> recompute_winding(const UnitFunction& u, int samples_per_period) {
  auto r = log_unit(samples_per_period, [&](const std::array<double, 3>& t) { return u.eval(t); },
                    u.dim());
  return r.winding;
}

TrigPoly expand_unit_coeffs(const UnitFunction& u, int max_degree, double tail_tol) {
  require(u.dim() == 1, "DimRange", "coefficient expansion implemented on the circle only");
  const TrigPoly g = u.logpart().with_scale(0);
  // exp(g) as a power series in coefficient space; entire, so the term norms
  // decay superexponentially once k exceeds ||g||_1.
  int cap = std::max(4 * (max_degree + 8), 64);
  TrigPoly sum = TrigPoly::constant(1, 1.0);
  TrigPoly term = TrigPoly::constant(1, 1.0);
  for (int k = 1; k < 80; ++k) {
    term = (term * g).scaled(1.0 / k);
    if (term.degree() > cap) break;
    sum += term;
    if (term.total_abs_value() < 1e-18) break;
  }
  // Shift by the winding character and truncate, with a tail check.
  int w = u.winding1();
  TrigPoly out(1);
  double tail = 0.0;
  for (const auto& [n, c] : sum.coeffs()) {
    Mode shifted{n[0] + w};
    if (shifted.norm_inf() <= max_degree)
      out.add_raw_coeff(shifted, c);
    else
      tail += std::abs(c);
  }
  require(tail <= tail_tol, "ToeplitzBandwidth",
          "coefficient tail beyond the requested degree exceeds the tolerance");
  return out;
}

}  // namespace reglab
