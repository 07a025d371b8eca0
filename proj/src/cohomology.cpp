#include "hopfcyc/cohomology.hpp"

#include <algorithm>

namespace hopfcyc {

SparseMatrix hochschild_b(const CyclicModuleView& m, unsigned n) {
  if (n == 0) {
    throw std::out_of_range("b : C^{n-1} -> C^n needs n >= 1");
  }
  SparseMatrix out = SparseMatrix::zero(m.dim(n), m.dim(n - 1));
  for (unsigned i = 0; i <= n; ++i) {
    if (i % 2 == 0) {
      out += m.face(i, n);
    } else {
      out -= m.face(i, n);
    }
  }
  return out;
}

SparseMatrix cyclic_sign(const CyclicModuleView& m, unsigned n) {
  return n % 2 == 0 ? m.cyclic(n) : m.cyclic(n).scaled(Scalar(-1));
}

SparseMatrix cyclic_norm(const CyclicModuleView& m, unsigned n) {
  SparseMatrix const lambda = cyclic_sign(m, n);
  SparseMatrix power = SparseMatrix::identity(m.dim(n));
  SparseMatrix out = power;
  for (unsigned i = 1; i <= n; ++i) {
    power = multiply(lambda, power);
    out += power;
  }
  return out;
}

SparseMatrix extra_degeneracy(const CyclicModuleView& m, unsigned n) {
  return multiply(m.degeneracy(n, n), m.cyclic(n + 1));
}

SparseMatrix cyclic_B(const CyclicModuleView& m, unsigned n) {
  if (auto why = m.cyclicity_obstruction()) {
    throw NotCyclic("the operator B is undefined for " + m.name() + ": " + *why);
  }
  SparseMatrix const one_minus = SparseMatrix::identity(m.dim(n + 1)) - cyclic_sign(m, n + 1);
  return multiply(cyclic_norm(m, n), multiply(extra_degeneracy(m, n), one_minus));
}

CheckReport mixed_complex_suite(const CyclicModuleView& m, unsigned max_degree) {
  CheckReport report;
  auto item = [&](const char* id, unsigned n, const SparseMatrix& mat) {
    CheckItem it;
    it.id = id;
    it.degree = static_cast<int>(n);
    if (!mat.is_zero()) {
      it.passed = false;
      auto const col = first_difference(mat, SparseMatrix::zero(mat.rows(), mat.cols()));
      it.witness = "nonzero column " + std::to_string(*col);
    }
    report.add(std::move(it));
  };
  for (unsigned n = 2; n <= max_degree; ++n) {
    item("b_squared", n, multiply(hochschild_b(m, n), hochschild_b(m, n - 1)));
  }
  for (unsigned n = 0; n + 2 <= max_degree; ++n) {
    item("B_squared", n, multiply(cyclic_B(m, n), cyclic_B(m, n + 1)));
  }
  for (unsigned n = 1; n <= max_degree; ++n) {
    // On C^n: b B + B b, landing in C^n.
    SparseMatrix const bB = multiply(hochschild_b(m, n), cyclic_B(m, n - 1));
    SparseMatrix const Bb = multiply(cyclic_B(m, n), hochschild_b(m, n + 1));
    item("bB_plus_Bb", n, bB + Bb);
  }
  for (unsigned n = 0; n < max_degree; ++n) {
    SparseMatrix const one_minus = SparseMatrix::identity(m.dim(n)) - cyclic_sign(m, n);
    item("B_image_cyclic", n, multiply(one_minus, cyclic_B(m, n)));
  }
  return report;
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Lambda:
      return "lambda";
    case Method::BB:
      return "bB";
    case Method::Both:
      break;
  }
  return "both";
}

Method parse_method(const std::string& text) {
  if (text == "lambda") return Method::Lambda;
  if (text == "bB") return Method::BB;
  if (text == "both") return Method::Both;
  throw std::invalid_argument("unknown method '" + text + "' (expected lambda, bB or both)");
}

std::vector<std::size_t> ComplexReport::hh() const {
  std::vector<std::size_t> out;
  for (const auto& r : rows) out.push_back(r.hh);
  return out;
}

std::vector<std::size_t> ComplexReport::hc_lambda() const {
  std::vector<std::size_t> out;
  for (const auto& r : rows) {
    if (r.hc_lambda) out.push_back(*r.hc_lambda);
  }
  return out;
}

std::vector<std::size_t> ComplexReport::hc_bB() const {
  std::vector<std::size_t> out;
  for (const auto& r : rows) {
    if (r.hc_bB) out.push_back(*r.hc_bB);
  }
  return out;
}

std::string ComplexReport::to_text() const {
  std::string out;
  out += "algebra: " + algebra + "\n";
  out += "character: " + character + "\n";
  out += "max-degree: " + std::to_string(options.max_degree) + "\n";
  out += "method: " + to_string(options.method) + "\n";
  out += "truncation: " + std::to_string(truncation) + "\n";
  for (const auto& r : rows) {
    out += "degree " + std::to_string(r.degree) + ": dim=" + std::to_string(r.dim) +
           " rank_b=" + std::to_string(r.rank_b) + " HH=" + std::to_string(r.hh);
    if (r.hc_lambda) {
      out += " lambda_dim=" + std::to_string(*r.lambda_dim) +
             " HC_lambda=" + std::to_string(*r.hc_lambda);
    }
    if (r.hc_bB) {
      out += " total_dim=" + std::to_string(*r.total_dim) + " HC_bB=" + std::to_string(*r.hc_bB);
    }
    if (r.boundary_unreliable) out += " boundary-unreliable";
    out += "\n";
  }
  out += "HH:";
  for (auto v : hh()) out += " " + std::to_string(v);
  out += "\n";
  auto const hc = options.method == Method::Lambda ? hc_lambda() : hc_bB();
  out += "HC:";
  for (auto v : hc) out += " " + std::to_string(v);
  out += "\n";
  out += std::string("euler: ") + (euler_consistent ? "pass" : "FAIL") + "\n";
  if (options.method == Method::Both) {
    out += std::string("agreement: ") + (methods_agree ? "pass" : "FAIL");
    for (auto d : disagreements) out += " degree=" + std::to_string(d);
    out += "\n";
  }
  std::string stab;
  for (std::size_t n = 0; n + 2 < hc.size(); ++n) {
    if (!stab.empty()) stab += ";";
    stab += " HC^" + std::to_string(n) + "=" + std::to_string(hc[n]) + " HC^" +
            std::to_string(n + 2) + "=" + std::to_string(hc[n + 2]) +
            (hc[n] == hc[n + 2] ? " equal" : " differ");
  }
  if (!stab.empty()) {
    out += "stabilization:" + stab + "\n";
    out += "note: stabilization compares dimensions only; the periodicity map S is not computed\n";
  }
  return out;
}

std::vector<std::size_t> hochschild_cohomology(const CyclicModuleView& m, unsigned max_degree,
                                               const EliminationOptions& options) {
  std::vector<std::size_t> ranks(max_degree + 2, 0);  // ranks[n] = rank b : C^{n-1} -> C^n
  for (unsigned n = 1; n <= max_degree + 1; ++n) ranks[n] = rank(hochschild_b(m, n), options);
  std::vector<std::size_t> out;
  for (unsigned n = 0; n <= max_degree; ++n) out.push_back(m.dim(n) - ranks[n + 1] - ranks[n]);
  return out;
}

namespace {

struct TotalComplex {
  // components[n] lists the cochain degrees of Tot^n, p ascending.
  std::vector<std::vector<unsigned>> components;

  std::size_t dim(const CyclicModuleView& m, unsigned n) const {
    std::size_t s = 0;
    for (auto k : components[n]) s += m.dim(k);
    return s;
  }
};

TotalComplex total_complex(unsigned top, unsigned truncation) {
  TotalComplex t;
  for (unsigned n = 0; n <= top; ++n) {
    std::vector<unsigned> comp;
    for (unsigned p = 0; 2 * p <= n; ++p) {
      if (n - 2 * p <= truncation) comp.push_back(n - 2 * p);
    }
    t.components.push_back(comp);
  }
  return t;
}

// D = b + B : Tot^n -> Tot^{n+1}.
SparseMatrix total_differential(const CyclicModuleView& m, const TotalComplex& t, unsigned n) {
  const auto& src = t.components[n];
  const auto& dst = t.components[n + 1];
  auto offset = [&](const std::vector<unsigned>& comp, unsigned k) -> std::optional<std::size_t> {
    std::size_t o = 0;
    for (auto c : comp) {
      if (c == k) return o;
      o += m.dim(c);
    }
    return std::nullopt;
  };
  SparseMatrix out = SparseMatrix::zero(t.dim(m, n + 1), t.dim(m, n));
  for (auto k : src) {
    auto const col = *offset(src, k);
    if (auto row = offset(dst, k + 1)) out.add_block(hochschild_b(m, k + 1), *row, col);
    if (k >= 1) {
      if (auto row = offset(dst, k - 1)) out.add_block(cyclic_B(m, k - 1), *row, col);
    }
  }
  return out;
}

}  // namespace

ComplexReport compute_cohomology(const CyclicModuleView& m, const std::string& character,
                                 const CohomologyOptions& options) {
  if (auto why = m.cyclicity_obstruction()) {
    throw NotCyclic("cyclic cohomology is undefined for " + m.name() + ": " + *why);
  }
  unsigned const N = options.max_degree;
  ComplexReport report;
  report.algebra = m.name();
  report.character = character;
  report.options = options;
  report.truncation = options.truncation == 0 ? N + 2 : options.truncation;

  std::vector<std::size_t> ranks(N + 2, 0);
  for (unsigned n = 1; n <= N + 1; ++n) ranks[n] = rank(hochschild_b(m, n), options.elimination);
  report.rank_b_top = ranks[N + 1];
  for (unsigned n = 0; n <= N; ++n) {
    DegreeRow row;
    row.degree = n;
    row.dim = m.dim(n);
    row.rank_b = ranks[n];
    row.hh = row.dim - ranks[n + 1] - ranks[n];
    report.rows.push_back(row);
  }

  if (options.method != Method::BB) {
    std::vector<SparseMatrix> kernels;
    for (unsigned n = 0; n <= N; ++n) {
      SparseMatrix const one_minus = SparseMatrix::identity(m.dim(n)) - cyclic_sign(m, n);
      kernels.push_back(kernel_matrix(one_minus, options.elimination));
    }
    std::vector<std::size_t> restricted(N + 1);  // rank of b : C^n_lambda -> C^{n+1}
    for (unsigned n = 0; n <= N; ++n) {
      restricted[n] = rank(multiply(hochschild_b(m, n + 1), kernels[n]), options.elimination);
    }
    for (unsigned n = 0; n <= N; ++n) {
      auto& row = report.rows[n];
      row.lambda_dim = kernels[n].cols();
      row.hc_lambda = kernels[n].cols() - restricted[n] - (n > 0 ? restricted[n - 1] : 0);
    }
  }

  if (options.method != Method::Lambda) {
    TotalComplex const t = total_complex(N + 1, report.truncation);
    std::vector<std::size_t> dranks(N + 1);
    for (unsigned n = 0; n <= N; ++n) {
      dranks[n] = rank(total_differential(m, t, n), options.elimination);
    }
    for (unsigned n = 0; n <= N; ++n) {
      auto& row = report.rows[n];
      row.total_dim = t.dim(m, n);
      row.hc_bB = *row.total_dim - dranks[n] - (n > 0 ? dranks[n - 1] : 0);
      row.boundary_unreliable = n + 2 > report.truncation;
    }
  }

  if (options.method == Method::Both) {
    for (const auto& row : report.rows) {
      if (!row.boundary_unreliable && row.hc_lambda != row.hc_bB) {
        report.methods_agree = false;
        report.disagreements.push_back(row.degree);
      }
    }
  }

  long chi_dims = 0;
  long chi_hh = 0;
  for (const auto& row : report.rows) {
    long const sign = row.degree % 2 == 0 ? 1 : -1;
    chi_dims += sign * static_cast<long>(row.dim);
    chi_hh += sign * static_cast<long>(row.hh);
  }
  chi_hh += (N % 2 == 0 ? 1 : -1) * static_cast<long>(report.rank_b_top);
  report.euler_consistent = chi_dims == chi_hh;
  return report;
}

}  // namespace hopfcyc
