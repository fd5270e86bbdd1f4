#include "lie4/gradedring.hpp"

#include <sstream>
#include <stdexcept>

namespace lie4 {

namespace {

// G24 degree-by-degree basis sizes and names.  Degree 2 is ordered
// {c1^2, c2}; the degree-4 point class is rendered as c2^2.
constexpr std::size_t kG24Sizes[5] = {1, 1, 2, 1, 1};
const char* const kG24Names[5][2] = {
    {"1", nullptr}, {"c1", nullptr}, {"c1^2", "c2"}, {"c1c2", nullptr},
    {"c2^2", nullptr}};

}  // namespace

ChowRing::ChowRing(Kind kind, std::shared_ptr<const ChowRing> base,
                   int fiber_rank, std::string fiber_name)
    : kind_(kind),
      base_(std::move(base)),
      fiber_bundle_rank_(fiber_rank),
      fiber_class_name_(std::move(fiber_name)) {
  switch (kind_) {
    case Kind::P3: top_degree_ = 3; break;
    case Kind::G24: top_degree_ = 4; break;
    case Kind::ProjBundleLayer:
      top_degree_ = base_->top_degree() + fiber_bundle_rank_ - 1;
      break;
  }
}

RingPtr ChowRing::p3() {
  static const RingPtr instance(new ChowRing(Kind::P3, nullptr, 0, ""));
  return instance;
}

RingPtr ChowRing::g24() {
  static const RingPtr instance(new ChowRing(Kind::G24, nullptr, 0, ""));
  return instance;
}

RingPtr ChowRing::proj_bundle_layer(RingPtr base, int fiber_bundle_rank,
                                    std::string fiber_class_name) {
  if (!base) throw std::invalid_argument("proj_bundle_layer: null base ring");
  if (base->kind() == Kind::ProjBundleLayer)
    throw std::invalid_argument("proj_bundle_layer: nested layers unsupported");
  if (fiber_bundle_rank < 1)
    throw std::invalid_argument("proj_bundle_layer: rank must be positive");
  return RingPtr(new ChowRing(Kind::ProjBundleLayer, std::move(base),
                              fiber_bundle_rank, std::move(fiber_class_name)));
}

std::size_t ChowRing::basis_size(int degree) const {
  if (degree < 0 || degree > top_degree_) return 0;
  switch (kind_) {
    case Kind::P3: return 1;
    case Kind::G24: return kG24Sizes[degree];
    case Kind::ProjBundleLayer: {
      std::size_t n = 0;
      for (int k = 0; k <= degree; ++k) {
        n += base_->basis_size(degree - k);
      }
      return n;
    }
  }
  return 0;
}

std::string ChowRing::monomial_name(int degree, std::size_t index) const {
  switch (kind_) {
    case Kind::P3:
      if (degree == 0) return "1";
      if (degree == 1) return "h";
      return "h^" + std::to_string(degree);
    case Kind::G24:
      return kG24Names[degree][index];
    case Kind::ProjBundleLayer: {
      auto [k, bi] = layer_decompose(degree, index);
      std::string fiber;
      if (k == 1) fiber = fiber_class_name_;
      else if (k > 1) fiber = fiber_class_name_ + "^" + std::to_string(k);
      std::string base_name = base_->monomial_name(degree - k, bi);
      if (k == 0) return base_name;
      if (base_name == "1") return fiber;
      return fiber + "*" + base_name;
    }
  }
  return "?";
}

const RingPtr& ChowRing::base() const {
  if (kind_ != Kind::ProjBundleLayer)
    throw std::domain_error("base(): not a projective bundle layer");
  return base_;
}

int ChowRing::fiber_bundle_rank() const {
  if (kind_ != Kind::ProjBundleLayer)
    throw std::domain_error("fiber_bundle_rank(): not a projective bundle layer");
  return fiber_bundle_rank_;
}

const std::string& ChowRing::fiber_class_name() const {
  if (kind_ != Kind::ProjBundleLayer)
    throw std::domain_error("fiber_class_name(): not a projective bundle layer");
  return fiber_class_name_;
}

std::size_t ChowRing::layer_index(int degree, int fiber_power,
                                  std::size_t base_index) const {
  std::size_t offset = 0;
  for (int k = 0; k < fiber_power; ++k) {
    offset += base_->basis_size(degree - k);
  }
  return offset + base_index;
}

std::pair<int, std::size_t> ChowRing::layer_decompose(int degree,
                                                      std::size_t index) const {
  for (int k = 0; k <= degree; ++k) {
    std::size_t n = base_->basis_size(degree - k);
    if (index < n) return {k, index};
    index -= n;
  }
  throw std::out_of_range("layer_decompose: index out of range");
}

std::vector<std::pair<std::size_t, Rational>> ChowRing::monomial_product(
    int d1, std::size_t i1, int d2, std::size_t i2) const {
  const int d = d1 + d2;
  if (d > top_degree_) return {};
  switch (kind_) {
    case Kind::P3:
      return {{0, Rational(1)}};
    case Kind::G24: {
      if (d1 > d2) {
        std::swap(d1, d2);
        std::swap(i1, i2);
      }
      if (d1 == 0) return {{i2, Rational(1)}};
      if (d1 == 1) {
        // c1 * x
        if (d2 == 1) return {{0, Rational(1)}};                 // c1^2
        if (d2 == 2 && i2 == 0) return {{0, Rational(2)}};      // c1^3 = 2 c1c2
        if (d2 == 2 && i2 == 1) return {{0, Rational(1)}};      // c1 c2
        if (d2 == 3) return {{0, Rational(1)}};                 // c1^2 c2 = pt
      }
      if (d1 == 2 && d2 == 2) {
        if (i1 == 0 && i2 == 0) return {{0, Rational(2)}};      // c1^4 = 2 pt
        return {{0, Rational(1)}};                              // c1^2 c2, c2^2
      }
      return {};
    }
    case Kind::ProjBundleLayer: {
      auto [k1, b1] = layer_decompose(d1, i1);
      auto [k2, b2] = layer_decompose(d2, i2);
      const int bd1 = d1 - k1, bd2 = d2 - k2;
      if (bd1 + bd2 > base_->top_degree()) return {};
      std::vector<std::pair<std::size_t, Rational>> out;
      for (const auto& [bi, coeff] :
           base_->monomial_product(bd1, b1, bd2, b2)) {
        out.emplace_back(layer_index(d, k1 + k2, bi), coeff);
      }
      return out;
    }
  }
  return {};
}

bool ChowRing::same_ring(const ChowRing& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ != Kind::ProjBundleLayer) return true;
  return fiber_bundle_rank_ == other.fiber_bundle_rank_ &&
         fiber_class_name_ == other.fiber_class_name_ &&
         base_->same_ring(*other.base_);
}

// ---------------------------------------------------------------------------

GradedClass::GradedClass(RingPtr ring) : ring_(std::move(ring)) {
  coeffs_.resize(ring_->top_degree() + 1);
  for (int d = 0; d <= ring_->top_degree(); ++d) {
    coeffs_[d].assign(ring_->basis_size(d), Rational(0));
  }
}

GradedClass GradedClass::scalar(RingPtr ring, const Rational& value) {
  GradedClass c(std::move(ring));
  c.coeffs_[0][0] = value;
  return c;
}

GradedClass GradedClass::monomial(RingPtr ring, int degree, std::size_t index,
                                  const Rational& coeff) {
  GradedClass c(std::move(ring));
  c.set_coeff(degree, index, coeff);
  return c;
}

const Rational& GradedClass::coeff(int degree, std::size_t index) const {
  static const Rational zero(0);
  if (degree < 0 || degree > ring_->top_degree()) return zero;
  return coeffs_[degree].at(index);
}

void GradedClass::set_coeff(int degree, std::size_t index,
                            const Rational& value) {
  if (degree < 0 || degree > ring_->top_degree()) {
    if (value == 0) return;  // silent truncation
    throw std::out_of_range("set_coeff: degree above truncation");
  }
  coeffs_[degree].at(index) = value;
}

bool GradedClass::is_zero() const {
  for (const auto& pieces : coeffs_) {
    for (const auto& c : pieces) {
      if (c != 0) return false;
    }
  }
  return true;
}

bool GradedClass::operator==(const GradedClass& other) const {
  return ring_->same_ring(*other.ring_) && coeffs_ == other.coeffs_;
}

GradedClass GradedClass::operator-() const {
  GradedClass out(ring_);
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    for (std::size_t i = 0; i < coeffs_[d].size(); ++i) {
      out.coeffs_[d][i] = -coeffs_[d][i];
    }
  }
  return out;
}

GradedClass& GradedClass::operator+=(const GradedClass& other) {
  if (!ring_->same_ring(*other.ring_))
    throw std::invalid_argument("GradedClass: ring mismatch");
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    for (std::size_t i = 0; i < coeffs_[d].size(); ++i) {
      coeffs_[d][i] += other.coeffs_[d][i];
    }
  }
  return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& other) {
  return *this += -other;
}

GradedClass add(const GradedClass& a, const GradedClass& b) {
  GradedClass out = a;
  out += b;
  return out;
}

GradedClass sub(const GradedClass& a, const GradedClass& b) {
  GradedClass out = a;
  out -= b;
  return out;
}

GradedClass mul(const GradedClass& a, const GradedClass& b) {
  if (!a.ring()->same_ring(*b.ring()))
    throw std::invalid_argument("mul: ring mismatch");
  const ChowRing& ring = *a.ring();
  GradedClass out(a.ring());
  for (int d1 = 0; d1 <= ring.top_degree(); ++d1) {
    for (std::size_t i1 = 0; i1 < ring.basis_size(d1); ++i1) {
      const Rational& x = a.coeff(d1, i1);
      if (x == 0) continue;
      for (int d2 = 0; d2 + d1 <= ring.top_degree(); ++d2) {
        for (std::size_t i2 = 0; i2 < ring.basis_size(d2); ++i2) {
          const Rational& y = b.coeff(d2, i2);
          if (y == 0) continue;
          for (const auto& [idx, c] : ring.monomial_product(d1, i1, d2, i2)) {
            out.set_coeff(d1 + d2, idx,
                          out.coeff(d1 + d2, idx) + x * y * c);
          }
        }
      }
    }
  }
  return out;
}

GradedClass scale(const GradedClass& a, const Rational& r) {
  GradedClass out(a.ring());
  const ChowRing& ring = *a.ring();
  for (int d = 0; d <= ring.top_degree(); ++d) {
    for (std::size_t i = 0; i < ring.basis_size(d); ++i) {
      out.set_coeff(d, i, r * a.coeff(d, i));
    }
  }
  return out;
}

GradedClass operator+(const GradedClass& a, const GradedClass& b) { return add(a, b); }
GradedClass operator-(const GradedClass& a, const GradedClass& b) { return sub(a, b); }
GradedClass operator*(const GradedClass& a, const GradedClass& b) { return mul(a, b); }
GradedClass operator*(const Rational& r, const GradedClass& a) { return scale(a, r); }

GradedClass degree_part(const GradedClass& a, int d) {
  GradedClass out(a.ring());
  if (d < 0 || d > a.ring()->top_degree()) return out;
  for (std::size_t i = 0; i < a.ring()->basis_size(d); ++i) {
    out.set_coeff(d, i, a.coeff(d, i));
  }
  return out;
}

GradedClass invert_unit(const GradedClass& a) {
  if (a.coeff(0, 0) != 1)
    throw std::invalid_argument("invert_unit: constant term is not 1");
  return invert(a);
}

GradedClass invert(const GradedClass& a) {
  const Rational a0 = a.coeff(0, 0);
  if (a0 == 0)
    throw std::invalid_argument("invert: constant term is zero");
  // 1/a = (1/a0) * (1 + m + m^2 + ...) with m = 1 - a/a0, nilpotent.
  GradedClass m = sub(GradedClass::one(a.ring()), scale(a, 1 / a0));
  GradedClass out = GradedClass::one(a.ring());
  GradedClass term = GradedClass::one(a.ring());
  for (int d = 1; d <= a.ring()->top_degree(); ++d) {
    term = mul(term, m);
    if (term.is_zero()) break;
    out += term;
  }
  return scale(out, 1 / a0);
}

GradedClass pow(const GradedClass& a, int n) {
  GradedClass base = n < 0 ? invert(a) : a;
  if (n < 0) n = -n;
  GradedClass out = GradedClass::one(a.ring());
  for (int i = 0; i < n; ++i) out = mul(out, base);
  return out;
}

Rational integrate(const GradedClass& a) {
  switch (a.ring()->kind()) {
    case ChowRing::Kind::P3: return a.coeff(3, 0);
    case ChowRing::Kind::G24: return a.coeff(4, 0);
    case ChowRing::Kind::ProjBundleLayer:
      throw std::domain_error(
          "integrate: class lives on a bundle layer, push forward first");
  }
  return Rational(0);
}

std::string GradedClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int d = 0; d <= ring_->top_degree(); ++d) {
    for (std::size_t i = 0; i < coeffs_[d].size(); ++i) {
      const Rational& c = coeffs_[d][i];
      if (c == 0) continue;
      const Rational abs = c < 0 ? Rational(-c) : c;
      if (first) {
        if (c < 0) os << "-";
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      const std::string name = ring_->monomial_name(d, i);
      const bool unit_coeff = (abs == 1);
      if (name == "1") {
        os << rational_to_string(abs);
      } else if (unit_coeff) {
        os << name;
      } else if (denominator(abs) == 1) {
        os << rational_to_string(abs) << name;
      } else {
        os << "(" << rational_to_string(abs) << ")" << name;
      }
    }
  }
  if (first) os << "0";
  return os.str();
}

GradedClass p3_h() { return GradedClass::monomial(ChowRing::p3(), 1, 0); }
GradedClass g24_c1() { return GradedClass::monomial(ChowRing::g24(), 1, 0); }
GradedClass g24_c2() { return GradedClass::monomial(ChowRing::g24(), 2, 1); }

GradedClass fiber_class(const RingPtr& layer) {
  return GradedClass::monomial(layer, 1, layer->layer_index(1, 1, 0));
}

GradedClass lift_to_layer(const RingPtr& layer, const GradedClass& base_class) {
  if (!layer->base()->same_ring(*base_class.ring()))
    throw std::invalid_argument("lift_to_layer: base ring mismatch");
  GradedClass out(layer);
  const ChowRing& base = *base_class.ring();
  for (int d = 0; d <= base.top_degree(); ++d) {
    for (std::size_t i = 0; i < base.basis_size(d); ++i) {
      const Rational& c = base_class.coeff(d, i);
      if (c != 0) out.set_coeff(d, layer->layer_index(d, 0, i), c);
    }
  }
  return out;
}

}  // namespace lie4
