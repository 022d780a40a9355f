#include "lowlying/synthetic_form.hpp"

#include "lowlying/primes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lowlying {

namespace {

class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
  std::uint64_t state_;
};

} // namespace

std::string to_string(AngleDistribution d) {
  return d == AngleDistribution::sato_tate ? "sato-tate" : "uniform";
}

AngleDistribution parse_angle_distribution(const std::string& tag) {
  if (tag == "sato-tate") return AngleDistribution::sato_tate;
  if (tag == "uniform") return AngleDistribution::uniform;
  throw std::invalid_argument("unknown angle distribution '" + tag + "' (expected sato-tate or uniform)");
}

SyntheticForm::SyntheticForm(long kappa, std::uint64_t q, int eps_f, std::uint64_t seed, AngleDistribution dist)
    : kappa_(kappa), q_(q), eps_f_(eps_f), seed_(seed), dist_(dist) {
  if (kappa < 2 || kappa % 2 != 0) throw std::invalid_argument("SyntheticForm: kappa must be an even integer >= 2");
  if (!is_prime(q)) throw std::invalid_argument("SyntheticForm: level q must be prime");
  if (eps_f != 1 && eps_f != -1) throw std::invalid_argument("SyntheticForm: eps_f must be +1 or -1");
}

double SyntheticForm::angle(std::uint64_t p) const {
  if (p == q_) throw std::domain_error("SyntheticForm: no Satake angle at p = q");
  // Decorrelate nearby primes before seeding the per-prime stream.
  SplitMix64 mixer(p);
  SplitMix64 rng(seed_ ^ mixer.next());
  double theta = 0.0;
  if (dist_ == AngleDistribution::uniform) {
    theta = std::numbers::pi * rng.unit();
  } else {
    // Density (2/pi) sin^2 on [0, pi]: accept a uniform proposal with
    // probability sin^2.
    for (;;) {
      theta = std::numbers::pi * rng.unit();
      const double s = std::sin(theta);
      if (rng.unit() < s * s) break;
    }
  }
  return reflected_ ? std::numbers::pi - theta : theta;
}

double SyntheticForm::hecke_eigenvalue(std::uint64_t p) const { return 2.0 * std::cos(angle(p)); }

SyntheticForm SyntheticForm::reflect() const {
  SyntheticForm out = *this;
  out.reflected_ = !reflected_;
  return out;
}

void to_json(nlohmann::json& j, const SyntheticForm& f) {
  j = nlohmann::json{{"kappa", f.kappa()},
                     {"q", f.q()},
                     {"eps_f", f.eps_f()},
                     {"seed", f.seed()},
                     {"distribution", to_string(f.distribution())},
                     {"reflected", f.reflected()}};
}

SyntheticForm synthetic_form_from_json(const nlohmann::json& j) {
  SyntheticForm f(j.at("kappa").get<long>(), j.at("q").get<std::uint64_t>(), j.at("eps_f").get<int>(),
                  j.at("seed").get<std::uint64_t>(),
                  parse_angle_distribution(j.at("distribution").get<std::string>()));
  if (j.value("reflected", false)) f = f.reflect();
  return f;
}

} // namespace lowlying
