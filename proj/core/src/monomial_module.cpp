#include "schurpol/monomial_module.hpp"

#include <algorithm>
#include <functional>

namespace schurpol {

namespace {

// Compositions of total into len parts, lexicographically decreasing.
void compositions(int total, int len, std::vector<std::uint8_t>& prefix,
                  const std::function<void(const std::vector<std::uint8_t>&)>& emit) {
  if (len == 1) {
    prefix.push_back(static_cast<std::uint8_t>(total));
    emit(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = total; first >= 0; --first) {
    prefix.push_back(static_cast<std::uint8_t>(first));
    compositions(total - first, len - 1, prefix, emit);
    prefix.pop_back();
  }
}

}  // namespace

MonomialModule MonomialModule::sym_tensor(const Partition& lambda, int m) {
  if (m < 0) throw std::invalid_argument("module needs m >= 0");
  if (lambda[0] > 255) throw std::invalid_argument("row degree too large");
  auto d = std::make_shared<Data>();
  d->grading = Grading::sym_tensor;
  d->rows = lambda.length();
  d->cols = m;
  d->degree = lambda.size();
  d->shape = lambda;
  if (m == 0) {
    if (lambda.empty()) d->monomials.emplace_back();
  } else {
    // Cartesian product of per-row compositions; row 0 most significant.
    std::vector<Exponents> acc{Exponents{}};
    for (int part : lambda.parts()) {
      std::vector<Exponents> row_choices;
      std::vector<std::uint8_t> prefix;
      compositions(part, m, prefix, [&](const auto& c) { row_choices.push_back(c); });
      std::vector<Exponents> next;
      next.reserve(acc.size() * row_choices.size());
      for (const auto& a : acc) {
        for (const auto& r : row_choices) {
          Exponents e = a;
          e.insert(e.end(), r.begin(), r.end());
          next.push_back(std::move(e));
        }
      }
      acc = std::move(next);
    }
    d->monomials = std::move(acc);
  }
  for (std::uint32_t i = 0; i < d->monomials.size(); ++i) d->index.emplace(d->monomials[i], i);
  return MonomialModule(std::move(d));
}

MonomialModule MonomialModule::sym_of_tensor(int degree, int n, int m) {
  if (degree < 0 || n < 0 || m < 0) throw std::invalid_argument("module needs d, n, m >= 0");
  if (degree > 255) throw std::invalid_argument("degree too large");
  auto d = std::make_shared<Data>();
  d->grading = Grading::sym_of_tensor;
  d->rows = n;
  d->cols = m;
  d->degree = degree;
  if (n * m == 0) {
    if (degree == 0) d->monomials.emplace_back();
  } else {
    std::vector<std::uint8_t> prefix;
    compositions(degree, n * m, prefix, [&](const auto& c) { d->monomials.push_back(c); });
  }
  for (std::uint32_t i = 0; i < d->monomials.size(); ++i) d->index.emplace(d->monomials[i], i);
  return MonomialModule(std::move(d));
}

std::optional<std::uint32_t> MonomialModule::find(const Exponents& e) const {
  auto it = data_->index.find(e);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::uint32_t MonomialModule::index_of(const Exponents& e) const {
  auto i = find(e);
  if (!i) throw std::out_of_range("monomial is not in " + describe());
  return *i;
}

std::vector<int> MonomialModule::column_degrees(std::uint32_t i) const {
  std::vector<int> deg(cols(), 0);
  const auto& e = monomial(i);
  for (int r = 0; r < rows(); ++r) {
    for (int c = 0; c < cols(); ++c) deg[c] += e[r * cols() + c];
  }
  return deg;
}

std::vector<int> MonomialModule::row_degrees(std::uint32_t i) const {
  std::vector<int> deg(rows(), 0);
  const auto& e = monomial(i);
  for (int r = 0; r < rows(); ++r) {
    for (int c = 0; c < cols(); ++c) deg[r] += e[r * cols() + c];
  }
  return deg;
}

std::string MonomialModule::describe() const {
  if (grading() == Grading::sym_tensor) {
    return "sym_tensor(" + shape().to_string() + ", m=" + std::to_string(cols()) + ")";
  }
  return "sym_of_tensor(d=" + std::to_string(degree()) + ", n=" + std::to_string(rows()) +
         ", m=" + std::to_string(cols()) + ")";
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer coefficient overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer coefficient overflow");
  return r;
}

IntPoly IntPoly::constant(int rows, int cols, long long c) {
  IntPoly p;
  p.rows_ = rows;
  p.cols_ = cols;
  if (c != 0) p.terms_.emplace(Exponents(static_cast<std::size_t>(rows * cols), 0), c);
  return p;
}

IntPoly IntPoly::variable(int rows, int cols, int row, int col) {
  IntPoly p = constant(rows, cols, 0);
  Exponents e(static_cast<std::size_t>(rows * cols), 0);
  e[row * cols + col] = 1;
  p.terms_.emplace(std::move(e), 1);
  return p;
}

int IntPoly::total_degree() const {
  if (terms_.empty()) return 0;
  int d = 0;
  for (auto b : terms_.begin()->first) d += b;
  return d;
}

void IntPoly::add_term(const Exponents& e, long long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (terms_.empty() && rows_ == 0 && cols_ == 0) {
    rows_ = o.rows_;
    cols_ = o.cols_;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (terms_.empty() && rows_ == 0 && cols_ == 0) {
    rows_ = o.rows_;
    cols_ = o.cols_;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  IntPoly p;
  p.rows_ = std::max(a.rows_, b.rows_);
  p.cols_ = std::max(a.cols_, b.cols_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) {
        const int s = e[i] + eb[i];
        if (s > 255) throw std::overflow_error("exponent overflow");
        e[i] = static_cast<std::uint8_t>(s);
      }
      p.add_term(e, checked_mul(ca, cb));
    }
  }
  return p;
}

IntPoly IntPoly::scaled(long long c) const {
  IntPoly p = constant(rows_, cols_, 0);
  for (const auto& [e, v] : terms_) p.add_term(e, checked_mul(v, c));
  return p;
}

std::vector<IntPoly> IntPoly::homogeneous_components(Axis axis) const {
  std::map<std::vector<int>, IntPoly> parts;
  for (const auto& [e, c] : terms_) {
    std::vector<int> deg(axis == Axis::cols ? cols_ : rows_, 0);
    for (int r = 0; r < rows_; ++r) {
      for (int col = 0; col < cols_; ++col) deg[axis == Axis::cols ? col : r] += e[r * cols_ + col];
    }
    auto [it, inserted] = parts.try_emplace(deg, constant(rows_, cols_, 0));
    it->second.add_term(e, c);
  }
  std::vector<IntPoly> out;
  for (auto& [deg, p] : parts) out.push_back(std::move(p));
  return out;
}

OneParamFamily OneParamFamily::identity(int dim) {
  OneParamFamily f;
  f.dim = dim;
  f.image.resize(dim);
  for (int a = 0; a < dim; ++a) f.image[a].push_back({0, a, 1});
  return f;
}

OneParamFamily OneParamFamily::column_shift(int dim, int i, int j) {
  if (i < 0 || j < 0 || i >= dim || j >= dim || i == j) {
    throw std::out_of_range("column shift indices out of range");
  }
  OneParamFamily f = identity(dim);
  f.image[j].push_back({1, i, 1});
  f.label = "e" + std::to_string(j + 1) + "+=t*e" + std::to_string(i + 1);
  return f;
}

int OneParamFamily::max_power() const {
  int p = 0;
  for (const auto& terms : image) {
    for (const auto& t : terms) p = std::max(p, t.power);
  }
  return p;
}

std::vector<OneParamFamily> gl_root_families(int m) {
  std::vector<OneParamFamily> out;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i != j) out.push_back(OneParamFamily::column_shift(m, i, j));
    }
  }
  return out;
}

std::vector<IntTerms> expand_substitution(const MonomialModule& module, const OneParamFamily& family,
                                          Axis axis, std::uint32_t u) {
  const int axis_dim = axis == Axis::cols ? module.cols() : module.rows();
  if (family.dim != axis_dim) throw std::invalid_argument("substitution dimension does not match module axis");
  const int rows = module.rows(), cols = module.cols();
  // Polynomial in (t, x): key = (power of t, exponents).
  std::map<std::pair<int, Exponents>, long long> acc;
  acc.emplace(std::make_pair(0, Exponents(static_cast<std::size_t>(rows * cols), 0)), 1);
  const Exponents& mono = module.monomial(u);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int coord = axis == Axis::cols ? c : r;
      for (int rep = 0; rep < mono[r * cols + c]; ++rep) {
        std::map<std::pair<int, Exponents>, long long> next;
        for (const auto& [key, coeff] : acc) {
          for (const auto& term : family.image[coord]) {
            auto e = key.second;
            const int target = axis == Axis::cols ? r * cols + term.coord : term.coord * cols + c;
            ++e[target];
            auto& slot = next[{key.first + term.power, std::move(e)}];
            slot = checked_add(slot, checked_mul(coeff, term.coeff));
          }
        }
        acc = std::move(next);
      }
    }
  }
  std::vector<IntTerms> out;
  for (const auto& [key, coeff] : acc) {
    if (coeff == 0) continue;
    if (static_cast<int>(out.size()) <= key.first) out.resize(key.first + 1);
    out[key.first].emplace_back(module.index_of(key.second), coeff);
  }
  return out;
}

const std::vector<IntTerms>& SubstitutionTable::expansion(std::uint32_t u) {
  auto it = cache_.find(u);
  if (it == cache_.end()) it = cache_.emplace(u, expand_substitution(module_, family_, axis_, u)).first;
  return it->second;
}

const IntTerms& SubstitutionTable::coefficient(std::uint32_t u, int r) {
  const auto& e = expansion(u);
  if (r < 0 || r >= static_cast<int>(e.size())) return empty_;
  return e[r];
}

const IntTerms& SubstitutionTable::difference_at_one(std::uint32_t u) {
  auto it = diff_cache_.find(u);
  if (it != diff_cache_.end()) return it->second;
  std::map<std::uint32_t, long long> sum;
  const auto& e = expansion(u);
  for (std::size_t r = 1; r < e.size(); ++r) {
    for (const auto& [w, c] : e[r]) sum[w] = checked_add(sum[w], c);
  }
  IntTerms terms;
  for (const auto& [w, c] : sum) {
    if (c != 0) terms.emplace_back(w, c);
  }
  return diff_cache_.emplace(u, std::move(terms)).first->second;
}

Exponents pad_exponents(const Exponents& e, int rows, int cols, int new_rows, int new_cols) {
  if (new_rows < rows || new_cols < cols) throw std::invalid_argument("cannot pad into a smaller module");
  Exponents out(static_cast<std::size_t>(new_rows * new_cols), 0);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) out[r * new_cols + c] = e[r * cols + c];
  }
  return out;
}

}  // namespace schurpol
