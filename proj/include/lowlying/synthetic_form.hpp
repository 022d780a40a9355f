#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>

namespace lowlying {

enum class AngleDistribution { sato_tate, uniform };

std::string to_string(AngleDistribution d);
/// Accepts "sato-tate" and "uniform"; throws std::invalid_argument otherwise.
AngleDistribution parse_angle_distribution(const std::string& tag);

/// Stand-in for a newform of weight kappa and prime level q.
///
/// Satake angles theta_p are a pure function of (seed, distribution, p): each
/// prime draws from its own splitmix64 stream, so the angle of a given prime
/// does not depend on which other primes were queried or in what order.
class SyntheticForm {
public:
  static constexpr std::uint64_t kDefaultSeed = 0x5eed5eed2009ULL;

  SyntheticForm(long kappa, std::uint64_t q, int eps_f, std::uint64_t seed = kDefaultSeed,
                AngleDistribution dist = AngleDistribution::sato_tate);

  long kappa() const { return kappa_; }
  std::uint64_t q() const { return q_; }
  int eps_f() const { return eps_f_; }
  std::uint64_t seed() const { return seed_; }
  AngleDistribution distribution() const { return dist_; }
  bool reflected() const { return reflected_; }

  /// theta_p in [0, pi]. Throws std::domain_error for p = q (the model has
  /// no Satake data at the level).
  double angle(std::uint64_t p) const;

  /// lambda_f(p) = 2 cos theta_p.
  double hecke_eigenvalue(std::uint64_t p) const;

  /// The same form with every angle replaced by pi - theta_p.
  SyntheticForm reflect() const;

  friend bool operator==(const SyntheticForm&, const SyntheticForm&) = default;

private:
  long kappa_;
  std::uint64_t q_;
  int eps_f_;
  std::uint64_t seed_;
  AngleDistribution dist_;
  bool reflected_ = false;
};

void to_json(nlohmann::json& j, const SyntheticForm& f);
/// Validates like the constructor; missing "reflected" means false.
SyntheticForm synthetic_form_from_json(const nlohmann::json& j);

} // namespace lowlying
