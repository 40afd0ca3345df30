#include "specbound/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace specbound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// log(1 + e^x), stable on the whole line; softplus(log r + log s) is
// exactly log(1 + r s) without forming the product.
double softplus(double x) {
  if (x > 0.0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

// Upper incomplete gamma Gamma(s, x) for s > 0, x >= 0; series for the lower
// part when x < s + 1 and a Lentz continued fraction otherwise. Modest
// accuracy suffices here: it only ever multiplies a remainder that is
// smaller than the truncation floor times a decay length.
double upper_incomplete_gamma(double s, double x) {
  if (x <= 0.0) return std::tgamma(s);
  if (x < s + 1.0) {
    double term = 1.0 / s;
    double sum = term;
    for (int k = 1; k < 600; ++k) {
      term *= x / (s + k);
      sum += term;
      if (term < sum * 1e-16) break;
    }
    return std::tgamma(s) - std::exp(s * std::log(x) - x) * sum;
  }
  double b = x + 1.0 - s;
  double c = 1e308;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 600; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < 1e-300) d = 1e-300;
    c = b + an / c;
    if (std::abs(c) < 1e-300) c = 1e-300;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-15) break;
  }
  return std::exp(s * std::log(x) - x) * h;
}

}  // namespace

namespace detail {

double log_exp_class(double a, double alpha, double log_r, double term_floor) {
  if (log_r == -kInf) return 0.0;
  const double log_floor = std::log(term_floor);

  // Largest k whose factor satisfies r e^{-a k^alpha} >= term_floor.
  double kcut_real = 0.0;
  if (log_r > log_floor)
    kcut_real = std::pow((log_r - log_floor) / a, 1.0 / alpha);
  const long long kcut = kcut_real > 9.0e15
                             ? 9000000000000000LL
                             : static_cast<long long>(std::floor(kcut_real));

  // Direct summation, smallest terms first. The cap bounds work for extreme
  // radii; anything between the cap and kcut is covered below by its largest
  // member, which keeps the result a certified upper bound.
  const long long kdirect = std::min<long long>(kcut, 2000000);
  double total = 0.0;
  for (long long k = kdirect; k >= 1; --k)
    total += softplus(log_r - a * std::pow(static_cast<double>(k), alpha));
  if (kcut > kdirect)
    total += static_cast<double>(kcut - kdirect) *
             softplus(log_r - a * std::pow(static_cast<double>(kdirect + 1), alpha));

  // Remainder past kcut via log(1+y) <= y and an integral comparison:
  //   sum_{k > K} r e^{-a k^alpha} <= r Gamma(1/alpha, a K^alpha) / (alpha a^{1/alpha}).
  const double s = 1.0 / alpha;
  const double x0 = a * std::pow(static_cast<double>(kcut), alpha);
  const double gam = upper_incomplete_gamma(s, x0);
  if (gam > 0.0)
    total += std::exp(log_r + std::log(gam) - std::log(alpha) - s * std::log(a));
  return total;
}

}  // namespace detail

struct GrowthFunction::Node {
  enum class Kind {
    Profile,
    Exponential,
    ExpClass,
    PowerOnePlus,
    TwoSingular,
    Scaled,
    Max,
  };

  Kind kind;
  // Profile: logs of the positive values plus the tail bound.
  std::vector<double> log_values;
  double tail = 0.0;
  // ExpClass.
  double a = 0.0;
  double alpha = 0.0;
  // PowerOnePlus / TwoSingular.
  int n = 0;
  double s1 = 0.0;
  double s2 = 0.0;
  // Scaled.
  double log_m = 0.0;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;

  double log_eval(double log_r) const {
    switch (kind) {
      case Kind::Profile: {
        double total = 0.0;
        for (auto it = log_values.rbegin(); it != log_values.rend(); ++it)
          total += softplus(log_r + *it);
        if (tail > 0.0) total += std::exp(log_r) * tail;
        return total;
      }
      case Kind::Exponential:
        return std::exp(log_r);
      case Kind::ExpClass:
        return detail::log_exp_class(a, alpha, log_r, 1e-18);
      case Kind::PowerOnePlus:
        return n * softplus(log_r);
      case Kind::TwoSingular: {
        double total = 0.0;
        if (s1 > 0.0) total += softplus(log_r + std::log(s1));
        if (s2 > 0.0 && n > 1)
          total += (n - 1) * softplus(log_r + std::log(s2));
        return total;
      }
      case Kind::Scaled:
        return left->log_eval(log_r + log_m);
      case Kind::Max:
        return std::max(left->log_eval(log_r), right->log_eval(log_r));
    }
    return 0.0;  // unreachable
  }

  bool degenerate() const {
    switch (kind) {
      case Kind::Profile:
        return log_values.empty() && tail == 0.0;
      case Kind::Exponential:
      case Kind::ExpClass:
      case Kind::PowerOnePlus:
        return false;
      case Kind::TwoSingular:
        return s1 == 0.0;
      case Kind::Scaled:
        return left->degenerate();
      case Kind::Max:
        return left->degenerate() && right->degenerate();
    }
    return false;  // unreachable
  }

  std::string describe() const {
    switch (kind) {
      case Kind::Profile:
        return "profile[" + std::to_string(log_values.size()) +
               (tail > 0.0 ? "+tail]" : "]");
      case Kind::Exponential:
        return "exp";
      case Kind::ExpClass:
        return "expclass(a=" + std::to_string(a) +
               ",alpha=" + std::to_string(alpha) + ")";
      case Kind::PowerOnePlus:
        return "(1+r)^" + std::to_string(n);
      case Kind::TwoSingular:
        return "two_singular(" + std::to_string(s1) + "," +
               std::to_string(s2) + ";n=" + std::to_string(n) + ")";
      case Kind::Scaled:
        return "scaled(" + left->describe() + ")";
      case Kind::Max:
        return "max(" + left->describe() + ", " + right->describe() + ")";
    }
    return "?";  // unreachable
  }
};

GrowthFunction::GrowthFunction(std::shared_ptr<const Node> node)
    : node_(std::move(node)) {}

GrowthFunction GrowthFunction::profile(SingularProfile p) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Profile;
  for (double v : p.values())
    if (v > 0.0) node->log_values.push_back(std::log(v));
  node->tail = p.tail_sum();
  return GrowthFunction(std::move(node));
}

GrowthFunction GrowthFunction::from_matrix(const ComplexMatrix& m) {
  return profile(singular_values(m));
}

GrowthFunction GrowthFunction::exponential() {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Exponential;
  return GrowthFunction(std::move(node));
}

GrowthFunction GrowthFunction::exp_class(double a, double alpha) {
  if (!(a > 0.0) || !std::isfinite(a) || !(alpha > 0.0) || !std::isfinite(alpha))
    throw std::invalid_argument("exp_class: a and alpha must be positive");
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::ExpClass;
  node->a = a;
  node->alpha = alpha;
  return GrowthFunction(std::move(node));
}

GrowthFunction GrowthFunction::power_one_plus(int n) {
  if (n < 1) throw std::invalid_argument("power_one_plus: n must be >= 1");
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::PowerOnePlus;
  node->n = n;
  return GrowthFunction(std::move(node));
}

GrowthFunction GrowthFunction::two_singular(double s1, double s2, int n) {
  if (n < 1) throw std::invalid_argument("two_singular: n must be >= 1");
  if (!std::isfinite(s1) || !std::isfinite(s2) || s2 < 0.0 || s1 < s2)
    throw std::invalid_argument("two_singular: need s1 >= s2 >= 0");
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::TwoSingular;
  node->s1 = s1;
  node->s2 = s2;
  node->n = n;
  return GrowthFunction(std::move(node));
}

GrowthFunction GrowthFunction::scaled(double m) const {
  if (!(m > 0.0) || !std::isfinite(m))
    throw std::invalid_argument("scaled: factor must be positive and finite");
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Scaled;
  node->log_m = std::log(m);
  node->left = node_;
  return GrowthFunction(std::move(node));
}

double GrowthFunction::log_eval(double log_r) const {
  if (std::isnan(log_r))
    throw std::invalid_argument("log_eval: NaN argument");
  if (log_r == kInf)
    throw std::domain_error(degenerate()
                                ? "log_eval: infinite radius on a constant growth function"
                                : "log_eval: radius must be finite");
  return node_->log_eval(log_r);
}

bool GrowthFunction::degenerate() const { return node_->degenerate(); }

std::string GrowthFunction::describe() const { return node_->describe(); }

GrowthFunction combine_max(const GrowthFunction& f1, const GrowthFunction& f2) {
  auto node = std::make_shared<GrowthFunction::Node>();
  node->kind = GrowthFunction::Node::Kind::Max;
  node->left = f1.node_;
  node->right = f2.node_;
  return GrowthFunction(std::move(node));
}

GrowthFunction scale(const GrowthFunction& f, double m) { return f.scaled(m); }

}  // namespace specbound
