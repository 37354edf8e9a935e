#include "qcw/witness.hpp"

#include <cmath>
#include <sstream>

namespace qcw {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::ClassicalCertified: return "ClassicalCertified";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::NonclassicalCertified: return "NonclassicalCertified";
  }
  return "Unknown";
}

const char* to_string(ClassicalForm f) {
  switch (f) {
    case ClassicalForm::Chi1: return "chi1";
    case ClassicalForm::Chi2: return "chi2";
    case ClassicalForm::Chi3: return "chi3";
    case ClassicalForm::Chi4: return "chi4";
    case ClassicalForm::None: return "none";
  }
  return "none";
}

DirectionPair DirectionPair::make(const Vec3& z, const Vec3& w) {
  if (!z.allFinite() || !w.allFinite() || std::abs(z.norm() - 1.0) > tol::unit_norm ||
      std::abs(w.norm() - 1.0) > tol::unit_norm)
    throw Error(ErrorKind::InvalidArgument, "direction vectors must have unit norm");
  return DirectionPair(z, w);
}

DirectionPair DirectionPair::sample(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto draw = [&] {
    Vec3 v;
    do {
      v = Vec3(gauss(rng), gauss(rng), gauss(rng));
    } while (v.norm() < 1e-12);
    return Vec3(v.normalized());
  };
  const Vec3 z = draw();
  const Vec3 w = draw();
  return DirectionPair(z, w);
}

std::vector<DirectionPair> draw_directions(std::uint64_t seed, int count) {
  if (count < 1) throw Error(ErrorKind::InvalidArgument, "direction count must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<DirectionPair> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(DirectionPair::sample(rng));
  return out;
}

std::array<Mat4, 4> witness_observables(const DirectionPair& d) {
  const Mat2 id = pauli(0);
  return {
      pauli_product(1, 1),
      pauli_product(2, 2),
      pauli_product(3, 3),
      tensor(pauli_dot(d.z()), id) + tensor(id, pauli_dot(d.w())),
  };
}

namespace {

Expectations expectations_from(const PauliDecomposition& p, double e4) {
  return {p.T(0, 0), p.T(1, 1), p.T(2, 2), e4};
}

WitnessReport finish(const Expectations& e, const PauliDecomposition& p, double tol) {
  WitnessReport r;
  r.expectations = e;
  r.W = witness_sum(e);
  r.verdict = decide(r.W, tol, is_bell_diagonal(p));
  r.matched_form = r.verdict == Verdict::ClassicalCertified ? match_form(e) : ClassicalForm::None;
  return r;
}

}  // namespace

Expectations observable_expectations(const DensityMatrix& rho, const DirectionPair& d) {
  const PauliDecomposition p = decompose(rho);
  return expectations_from(p, d.z().dot(p.x) + d.w().dot(p.y));
}

double witness_sum(const Expectations& e) {
  double w = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 4; ++j) w += std::abs(e[i] * e[j]);
  return w;
}

ClassicalForm match_form(const Expectations& e) {
  int best = 0;
  for (int i = 1; i < 4; ++i)
    if (std::abs(e[i]) > std::abs(e[best])) best = i;
  return static_cast<ClassicalForm>(best);
}

Verdict decide(double W, double tol, bool bell_diagonal) {
  if (W <= tol) return Verdict::ClassicalCertified;
  return bell_diagonal ? Verdict::NonclassicalCertified : Verdict::Inconclusive;
}

bool is_bell_diagonal(const PauliDecomposition& d) {
  return d.x.cwiseAbs().maxCoeff() <= tol::bell_diagonal && d.y.cwiseAbs().maxCoeff() <= tol::bell_diagonal;
}

void require_diagonal_class(const PauliDecomposition& d) {
  const Mat3 off = d.T - Mat3(d.T.diagonal().asDiagonal());
  const double worst = off.cwiseAbs().maxCoeff();
  if (worst > tol::offdiagonal_correlation) {
    std::ostringstream os;
    os << "state has off-diagonal correlations (max |T_ij| = " << worst
       << "); the witness applies only to diagonal correlation matrices";
    throw Error(ErrorKind::OutOfClass, os.str());
  }
}

WitnessReport witness_for_directions(const DensityMatrix& rho, const DirectionPair& d, double tol) {
  const PauliDecomposition p = decompose(rho);
  require_diagonal_class(p);
  WitnessReport r = finish(expectations_from(p, d.z().dot(p.x) + d.w().dot(p.y)), p, tol);
  r.mode = Randomized{1, 0};
  return r;
}

WitnessReport witness_value(const DensityMatrix& rho, const WitnessMode& mode, double tol) {
  const PauliDecomposition p = decompose(rho);
  require_diagonal_class(p);

  if (std::holds_alternative<Deterministic>(mode)) {
    WitnessReport r = finish(expectations_from(p, p.x.norm() + p.y.norm()), p, tol);
    r.mode = mode;
    return r;
  }

  const auto& rnd = std::get<Randomized>(mode);
  if (rnd.n_trials < 1) throw Error(ErrorKind::InvalidArgument, "randomized witness needs n_trials >= 1");
  WitnessReport best;
  bool first = true;
  for (const DirectionPair& d : draw_directions(rnd.seed, rnd.n_trials)) {
    WitnessReport r = finish(expectations_from(p, d.z().dot(p.x) + d.w().dot(p.y)), p, tol);
    if (first || r.W > best.W) {
      best = r;
      first = false;
    }
  }
  best.mode = mode;
  return best;
}

Verdict classify(const DensityMatrix& rho, double tol, const WitnessMode& mode) {
  return witness_value(rho, mode, tol).verdict;
}

}  // namespace qcw
