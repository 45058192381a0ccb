#include "reglab/cyclic.hpp"

#include <algorithm>

namespace reglab {

int CyclicChain::word_length(int n, int k) { return (n % 2 == 0) ? 2 * k + 1 : 2 * k + 2; }

void CyclicChain::add_term(int k, std::vector<TrigPoly> word, cplx coeff) {
  int kmax = (n_ % 2 == 0) ? n_ / 2 : (n_ - 1) / 2;
  require(k >= 0 && k <= kmax, "DegreeRange", "column index out of range for this degree");
  require(int(word.size()) == word_length(n_, k), "DegreeRange",
          "word length does not match the bicomplex layout");
  for (const auto& f : word)
    require(f.dim() == dim_, "DimMismatch", "word entries must share the torus dimension");
  if (coeff == cplx(0.0)) return;
  terms_.push_back({k, std::move(word), coeff});
}

CyclicChain CyclicChain::scaled(cplx c) const {
  CyclicChain r(n_, dim_);
  for (const auto& t : terms_) r.add_term(t.k, t.word, t.coeff * c);
  return r;
}

namespace {

std::strong_ordering cmp_words(const std::vector<TrigPoly>& a, const std::vector<TrigPoly>& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (auto c = a[i].cmp(b[i]); c != 0) return c;
  return std::strong_ordering::equal;
}

// One cyclic step: last factor to the front, sign (-1)^m for word length m+1.
void rotate_once(std::vector<TrigPoly>& w, int& sign) {
  std::rotate(w.begin(), w.end() - 1, w.end());
  if ((w.size() - 1) % 2 != 0) sign = -sign;
}

}  // namespace

void LambdaChain::add_term(std::vector<TrigPoly> word, cplx coeff) {
  require(int(word.size()) == n_ + 1, "DegreeRange", "coinvariant word length must be n+1");
  for (const auto& f : word)
    require(f.dim() == dim_, "DimMismatch", "word entries must share the torus dimension");
  for (const auto& f : word)
    if (f.is_zero()) return;
  if (coeff == cplx(0.0)) return;

  // Canonical rotation: minimal word; collect the stabilizer signs.
  std::vector<TrigPoly> best = word;
  int best_sign = 1;
  bool sign_conflict = false;
  std::vector<TrigPoly> cur = word;
  int sign = 1;
  for (std::size_t r = 1; r <= word.size(); ++r) {
    rotate_once(cur, sign);
    auto c = cmp_words(cur, best);
    if (c == std::strong_ordering::less) {
      best = cur;
      best_sign = sign;
      sign_conflict = false;
    } else if (c == std::strong_ordering::equal && sign != best_sign) {
      sign_conflict = true;
    }
  }
  if (sign_conflict) return;  // [w] = -[w]: the class vanishes

  cplx c = coeff * double(best_sign);
  for (auto& t : terms_) {
    if (cmp_words(t.word, best) == std::strong_ordering::equal) {
      t.coeff += c;
      if (t.coeff == cplx(0.0))
        terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                    [](const LambdaTerm& x) { return x.coeff == cplx(0.0); }),
                     terms_.end());
      return;
    }
  }
  terms_.push_back({std::move(best), c});
}

LambdaChain LambdaChain::operator+(const LambdaChain& o) const {
  require(n_ == o.n_ && dim_ == o.dim_, "DegreeRange", "adding chains of different shape");
  LambdaChain r = *this;
  for (const auto& t : o.terms_) r.add_term(t.word, t.coeff);
  return r;
}

LambdaChain LambdaChain::scaled(cplx c) const {
  LambdaChain r(n_, dim_);
  for (const auto& t : terms_) r.add_term(t.word, t.coeff * c);
  return r;
}

double LambdaChain::total_abs_coeff() const {
  double s = 0.0;
  for (const auto& t : terms_) s += std::abs(t.coeff);
  return s;
}

LambdaChain lambda2(const TrigPoly& f0, const TrigPoly& f1, cplx coeff) {
  LambdaChain c(1, f0.dim());
  c.add_term({f0, f1}, coeff);
  return c;
}

namespace {

// Hochschild boundary of a single word, emitted through a sink.
template <typename Sink>
void hochschild_b(const std::vector<TrigPoly>& w, cplx coeff, Sink&& sink) {
  int m = int(w.size()) - 1;
  if (m == 0) return;
  for (int i = 0; i < m; ++i) {
    std::vector<TrigPoly> v;
    v.reserve(w.size() - 1);
    for (int j = 0; j < i; ++j) v.push_back(w[std::size_t(j)]);
    v.push_back(w[std::size_t(i)] * w[std::size_t(i + 1)]);
    for (int j = i + 2; j <= m; ++j) v.push_back(w[std::size_t(j)]);
    sink(std::move(v), (i % 2 == 0) ? coeff : -coeff);
  }
  std::vector<TrigPoly> v;
  v.reserve(w.size() - 1);
  v.push_back(w[std::size_t(m)] * w[0]);
  for (int j = 1; j < m; ++j) v.push_back(w[std::size_t(j)]);
  sink(std::move(v), (m % 2 == 0) ? coeff : -coeff);
}

// Connes operator B = (1 - t) s' N on a single word.
template <typename Sink>
void connes_B(const std::vector<TrigPoly>& w, cplx coeff, int dim, Sink&& sink) {
  int m = int(w.size()) - 1;
  TrigPoly one = TrigPoly::constant(dim, 1.0);
  std::vector<TrigPoly> cur = w;
  int sign = 1;
  for (int r = 0; r <= m; ++r) {
    if (r > 0) rotate_once(cur, sign);
    // s' N part: 1 (x) rotated word.
    std::vector<TrigPoly> v;
    v.reserve(w.size() + 1);
    v.push_back(one);
    v.insert(v.end(), cur.begin(), cur.end());
    sink(v, coeff * double(sign));
    // -t s' N part: one cyclic step applied to the extended word.
    std::vector<TrigPoly> tv = v;
    int tsign = 1;
    rotate_once(tv, tsign);
    sink(std::move(tv), -coeff * double(sign * tsign));
  }
}

}  // namespace

LambdaChain boundary_b(const LambdaChain& c) {
  require(c.n() >= 1, "DegreeRange", "boundary of a degree-0 chain");
  LambdaChain out(c.n() - 1, c.dim());
  for (const auto& t : c.terms())
    hochschild_b(t.word, t.coeff,
                 [&](std::vector<TrigPoly> w, cplx co) { out.add_term(std::move(w), co); });
  return out;
}

LambdaChain lambda_project(const CyclicChain& c) {
  int ktop = (c.n() % 2 == 0) ? c.n() / 2 : (c.n() - 1) / 2;
  LambdaChain out(c.n(), c.dim());
  for (const auto& t : c.terms())
    if (t.k == ktop) out.add_term(t.word, t.coeff);
  return out;
}

CyclicChain total_differential(const CyclicChain& c) {
  require(c.n() >= 1, "DegreeRange", "differential of a degree-0 chain");
  CyclicChain out(c.n() - 1, c.dim());
  for (const auto& t : c.terms()) {
    int m = int(t.word.size()) - 1;
    // b part: word length drops by one.
    hochschild_b(t.word, t.coeff, [&](std::vector<TrigPoly> w, cplx co) {
      int len = int(w.size());
      int k = (out.n() % 2 == 0) ? (len - 1) / 2 : (len - 2) / 2;
      out.add_term(k, std::move(w), co);
    });
    // B part: only away from the leftmost column p = (n - m)/2 = 0.
    int column = (c.n() - m) / 2;
    if (column >= 1) {
      connes_B(t.word, t.coeff, c.dim(), [&](std::vector<TrigPoly> w, cplx co) {
        int len = int(w.size());
        int k = (out.n() % 2 == 0) ? (len - 1) / 2 : (len - 2) / 2;
        out.add_term(k, std::move(w), co);
      });
    }
  }
  return out;
}

namespace {

double word_factorial(int m) {
  double f = 1.0;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

Form word_form(const std::vector<TrigPoly>& w, cplx coeff) {
  Form acc = Form::from_function(w[0]);
  for (std::size_t i = 1; i < w.size(); ++i)
    acc = wedge(acc, exterior_d(Form::from_function(w[i])));
  int m = int(w.size()) - 1;
  return acc.scaled(coeff / word_factorial(m));
}

}  // namespace

PeriodicFamily pi_dd(const CyclicChain& c) {
  PeriodicFamily fam(c.dim(), Truncation::atmost_p);
  for (const auto& t : c.terms()) {
    int m = int(t.word.size()) - 1;
    int p = (c.n() + m) / 2;
    fam.add_form(p, word_form(t.word, t.coeff));
  }
  return fam;
}

PeriodicFamily pi_minus(const CyclicChain& c) {
  PeriodicFamily fam(c.dim(), Truncation::atleast_p);
  for (const auto& t : c.terms()) {
    int m = int(t.word.size()) - 1;
    int p = (c.n() + m) / 2;
    if (m < p) continue;  // lands below the truncation: zero in the target
    fam.add_form(p, word_form(t.word, t.coeff));
  }
  return fam;
}

HPClass pi_d_iso(const CyclicChain& c, int d) {
  require(c.dim() == d, "NotACycle", "coefficient dimension must equal d");
  require(boundary_b(lambda_project(c)).is_zero(), "NotACycle",
          "the projected chain is not a cycle");
  PeriodicFamily fam = pi_dd(c);
  // Closedness within the truncated complex; components of top degree p are
  // unconstrained there, interior degrees must be honestly closed.
  require(family_d(fam).max_abs_value() <= 1e-12, "NotClosed",
          "family is not closed in the truncated complex");
  // Harmonic lift: the constant part is closed, untruncated, and cohomologous.
  PeriodicFamily lift(c.dim(), Truncation::none);
  for (const auto& [p, forms] : fam.entries()) {
    for (const auto& f : forms) {
      Form cpart(f.dim(), f.degree());
      for (const auto& [mask, coeff] : f.components()) {
        cplx c0 = coeff.raw_coeff(Mode{});
        if (c0 != cplx(0.0))
          cpart.add_component(mask, TrigPoly::constant(f.dim(), c0, coeff.scale()));
      }
      lift.add_form(p, cpart);
    }
  }
  require(d % 2 == 1, "BadParams", "the comparison dimension d must be odd");
  return HPClass(shift(lift, d - 1));
}

}  // namespace reglab
