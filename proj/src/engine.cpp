#include "eigconf/engine.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "eigconf/errors.hpp"

namespace eigconf {

SignMatrix DiscriminantSystem::signs() const {
  std::vector<SignSequence> rows;
  rows.reserve(entries.size());
  for (const auto& row : entries) {
    SignSequence s;
    s.reserve(row.size());
    for (const auto& x : row) s.push_back(x.sign());
    rows.push_back(std::move(s));
  }
  return SignMatrix(m, n, std::move(rows));
}

Polynomial build_fe(const Polynomial& f, const ExponentIndex& e) {
  if (static_cast<int>(e.digits.size()) != f.degree()) {
    throw DomainError("exponent index has " + std::to_string(e.digits.size()) + " digits but deg f = " +
                      std::to_string(f.degree()));
  }
  Polynomial out = Polynomial::constant(1);
  Polynomial d = f;
  for (int digit : e.digits) {
    out = out * power(d, digit);
    d = derivative(d);
  }
  return out;
}

namespace {

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Calls work(i) for i in [0, count) on `threads` workers. Results must be
// written into per-index slots so the outcome does not depend on scheduling.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& work) {
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        work(i);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(count);
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

Polynomial mod(const Polynomial& a, const Polynomial& b) { return divmod(a, b).remainder; }

// Shared, read-only per-call data for computing rows of D.
class RowKernel {
 public:
  RowKernel(const Polynomial& f, const DenseMatrix& g, const EngineOptions& options)
      : g_(g), m_(f.degree()), n_(static_cast<int>(g.rows())), reduce_(options.reduce_modulo_charpoly) {
    Polynomial d = f;
    for (int k = 0; k < m_; ++k) {
      derivatives_.push_back(d);
      d = derivative(d);
    }
    if (reduce_) {
      charpoly_g_ = charpoly(g_);
      for (const auto& dk : derivatives_) {
        Polynomial r = mod(dk, charpoly_g_);
        squares_.push_back(mod(r * r, charpoly_g_));
        residues_.push_back(std::move(r));
      }
      DenseMatrix p = DenseMatrix::identity(g_.rows());
      for (int i = 0; i < n_; ++i) {
        powers_of_g_.push_back(p);
        p = p * g_;
      }
    } else {
      for (const auto& dk : derivatives_) squares_.push_back(dk * dk);
    }
  }

  const std::vector<Polynomial>& derivatives() const { return derivatives_; }

  struct Row {
    std::vector<Rational> coeffs;
    RowTrace trace;
  };

  Row compute(const ExponentIndex& e, bool keep) const {
    Row row;
    if (reduce_) {
      Polynomial r = Polynomial::constant(1);
      for (int k = 0; k < m_; ++k) {
        int digit = e.digits[static_cast<std::size_t>(k)];
        if (digit == 1) r = mod(r * residues_[static_cast<std::size_t>(k)], charpoly_g_);
        if (digit == 2) r = mod(r * squares_[static_cast<std::size_t>(k)], charpoly_g_);
      }
      DenseMatrix value(g_.rows(), g_.rows());
      auto c = r.coefficients();
      for (std::size_t i = 0; i < c.size(); ++i) value += powers_of_g_[i] * c[i];
      row.trace.fe_at_g = std::move(value);
      if (keep) row.trace.fe = full_product(e);
    } else {
      row.trace.fe = full_product(e);
      row.trace.fe_at_g = eval_poly_at_matrix(row.trace.fe, g_);
    }
    Polynomial h = charpoly(row.trace.fe_at_g);
    row.coeffs.reserve(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j) row.coeffs.push_back(h.coeff(j));
    if (keep) {
      row.trace.h = std::move(h);
    } else {
      row.trace = {};
    }
    return row;
  }

 private:
  Polynomial full_product(const ExponentIndex& e) const {
    Polynomial out = Polynomial::constant(1);
    for (int k = 0; k < m_; ++k) {
      int digit = e.digits[static_cast<std::size_t>(k)];
      if (digit == 1) out = out * derivatives_[static_cast<std::size_t>(k)];
      if (digit == 2) out = out * (reduce_ ? derivatives_[static_cast<std::size_t>(k)] * derivatives_[static_cast<std::size_t>(k)]
                                           : squares_[static_cast<std::size_t>(k)]);
    }
    return out;
  }

  const DenseMatrix& g_;
  int m_;
  int n_;
  bool reduce_;
  std::vector<Polynomial> derivatives_;
  std::vector<Polynomial> residues_;
  std::vector<Polynomial> squares_;
  Polynomial charpoly_g_;
  std::vector<DenseMatrix> powers_of_g_;
};

struct SystemWithTrace {
  DiscriminantSystem system;
  Polynomial f;
  std::vector<Polynomial> derivatives;
  std::vector<RowTrace> rows;
};

SystemWithTrace compute_system(const DenseMatrix& f_matrix, const DenseMatrix& g_matrix,
                               const EngineOptions& options) {
  SystemWithTrace out;
  out.f = charpoly(f_matrix);
  const int m = out.f.degree();
  const int n = static_cast<int>(g_matrix.rows());
  RowKernel kernel(out.f, g_matrix, options);
  out.derivatives = kernel.derivatives();

  const std::size_t count = pow3(m);
  out.system.m = m;
  out.system.n = n;
  out.system.entries.resize(count);
  if (options.keep_rows) out.rows.resize(count);
  parallel_for(count, resolve_threads(options.threads), [&](std::size_t rank) {
    auto row = kernel.compute(ExponentIndex::from_rank(rank, m), options.keep_rows);
    out.system.entries[rank] = std::move(row.coeffs);
    if (options.keep_rows) out.rows[rank] = std::move(row.trace);
  });
  return out;
}

}  // namespace

DiscriminantSystem discriminant_system(const SymmetricMatrix& f_matrix, const SymmetricMatrix& g_matrix,
                                       const EngineOptions& options) {
  EngineOptions opts = options;
  opts.keep_rows = false;
  return compute_system(f_matrix.dense(), g_matrix.dense(), opts).system;
}

BigInt common_denominator(const SymmetricMatrix& f_matrix, const SymmetricMatrix& g_matrix) {
  BigInt l = 1;
  for (const SymmetricMatrix* a : {&f_matrix, &g_matrix}) {
    for (std::size_t i = 0; i < a->dimension(); ++i)
      for (std::size_t j = 0; j < a->dimension(); ++j) {
        BigInt d = (*a)(i, j).denominator();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
      }
  }
  return l;
}

EngineResult eigen_configuration(const SymmetricMatrix& f_matrix, const SymmetricMatrix& g_matrix,
                                 const EngineOptions& options) {
  // EC(cF, cG) = EC(F, G) for c > 0, so clear denominators once for both.
  Rational scale(common_denominator(f_matrix, g_matrix));
  DenseMatrix f_scaled = f_matrix.dense() * scale;
  DenseMatrix g_scaled = g_matrix.dense() * scale;

  auto computed = compute_system(f_scaled, g_scaled, options);

  EngineResult result;
  PipelineTrace& trace = result.trace;
  trace.scale = scale;
  trace.f = std::move(computed.f);
  trace.derivatives = std::move(computed.derivatives);
  trace.rows = std::move(computed.rows);
  trace.sign_matrix = computed.system.signs();

  TransformResult transformed;
  try {
    transformed = transform(trace.sign_matrix);
  } catch (const InfeasibleSignMatrix& e) {
    throw std::logic_error(std::string("internal error: engine produced an infeasible sign matrix: ") + e.what());
  }
  trace.sigma = std::move(transformed.sigma);
  trace.q = std::move(transformed.q);
  trace.config = transformed.config;
  result.config = std::move(transformed.config);
  return result;
}

bool check_configuration(const SymmetricMatrix& f_matrix, const SymmetricMatrix& g_matrix,
                         const EigenConfig& config, const EngineOptions& options) {
  if (config.size() != f_matrix.dimension()) {
    throw DomainError("configuration has " + std::to_string(config.size()) + " entries, expected m = " +
                      std::to_string(f_matrix.dimension()));
  }
  for (int c : config.counts)
    if (c < 0) throw DomainError("configuration entries must be nonnegative");
  return eigen_configuration(f_matrix, g_matrix, options).config == config;
}

int matrix_signature(const SymmetricMatrix& a) {
  Polynomial h = charpoly(a);
  const int n = static_cast<int>(a.dimension());
  SignSequence signs;
  signs.reserve(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j < n; ++j) signs.push_back(h.coeff(j).sign());
  signs.push_back(Sign::Plus);
  return 2 * variation_count(signs) + leading_zero_count(signs) - n;
}

}  // namespace eigconf
