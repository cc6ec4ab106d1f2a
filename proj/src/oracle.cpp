#include "eigconf/oracle.hpp"

#include <stdexcept>

namespace eigconf {

int IsolatedSpectrum::total_multiplicity() const {
  int t = 0;
  for (const auto& r : roots) t += r.multiplicity;
  return t;
}

IsolatedSpectrum isolated_spectrum(const SymmetricMatrix& a) {
  IsolatedSpectrum s;
  s.charpoly = charpoly(a);
  s.roots = isolate_real_roots(s.charpoly);
  if (s.total_multiplicity() != static_cast<int>(a.dimension())) {
    throw std::logic_error("symmetric matrix spectrum does not account for every eigenvalue");
  }
  return s;
}

namespace {

enum class Order { Less, Equal, Greater };

// Whether `g` vanishes somewhere in the closed interval [lo, hi].
bool has_root_in(const Polynomial& g, const SturmSequence* sturm, const Rational& lo, const Rational& hi) {
  if (g.degree() < 1) return false;
  if (evaluate(g, lo).is_zero()) return true;
  if (lo == hi) return false;
  return sturm->count(lo, hi) > 0;
}

// Strictly before: non-point intervals are open, point intervals closed.
bool before(const RootInterval& a, const RootInterval& b) {
  if (a.high < b.low) return true;
  return a.high == b.low && !(a.is_exact() && b.is_exact());
}

class Comparator {
 public:
  Comparator(const IsolatedSpectrum& alpha, const IsolatedSpectrum& beta)
      : sqf_alpha_(squarefree_part(alpha.charpoly)),
        sqf_beta_(squarefree_part(beta.charpoly)),
        common_(gcd(sqf_alpha_, sqf_beta_)) {
    if (common_.degree() >= 1) common_sturm_.emplace_back(common_);
  }

  // Refines both intervals in place until their order is decided.
  Order compare(RootInterval& a, RootInterval& b, RootInterval& tie_where) {
    while (true) {
      if (before(a, b)) return Order::Less;
      if (before(b, a)) return Order::Greater;
      Rational lo = std::max(a.low, b.low);
      Rational hi = std::min(a.high, b.high);
      // Each interval isolates one root of its squarefree charpoly, so a
      // common root inside the overlap must be both of them.
      if (has_root_in(common_, common_sturm_.empty() ? nullptr : &common_sturm_.front(), lo, hi)) {
        tie_where = {lo, hi, 1};
        return Order::Equal;
      }
      bisect_root(sqf_alpha_, a);
      bisect_root(sqf_beta_, b);
    }
  }

 private:
  Polynomial sqf_alpha_;
  Polynomial sqf_beta_;
  Polynomial common_;
  std::vector<SturmSequence> common_sturm_;
};

}  // namespace

OracleResult configuration_with_ties(const IsolatedSpectrum& alpha, const IsolatedSpectrum& beta) {
  const int m = alpha.total_multiplicity();
  OracleResult out;
  out.config.counts.assign(static_cast<std::size_t>(m), 0);

  Comparator cmp(alpha, beta);
  std::vector<RootInterval> a_roots = alpha.roots;
  std::vector<RootInterval> b_roots = beta.roots;

  for (std::size_t j = 0; j < b_roots.size(); ++j) {
    // beta_j lies in I_t exactly when t = #{i : alpha_i <= beta_j}.
    int at_or_below = 0;
    for (std::size_t i = 0; i < a_roots.size(); ++i) {
      RootInterval where;
      Order o = cmp.compare(a_roots[i], b_roots[j], where);
      if (o == Order::Greater) break;
      at_or_below += a_roots[i].multiplicity;
      if (o == Order::Equal) out.ties.push_back({i, j, where});
    }
    if (at_or_below == 0) {
      out.below_first += b_roots[j].multiplicity;
    } else {
      out.config.counts[static_cast<std::size_t>(at_or_below - 1)] += b_roots[j].multiplicity;
    }
  }
  return out;
}

EigenConfig configuration_from_spectra(const IsolatedSpectrum& alpha, const IsolatedSpectrum& beta) {
  return configuration_with_ties(alpha, beta).config;
}

EigenConfig eigen_configuration_oracle(const SymmetricMatrix& f_matrix, const SymmetricMatrix& g_matrix) {
  return configuration_from_spectra(isolated_spectrum(f_matrix), isolated_spectrum(g_matrix));
}

}  // namespace eigconf
