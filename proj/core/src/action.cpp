#include "schurpol/action.hpp"

#include <charconv>
#include <stdexcept>

namespace schurpol {

ActionSpec::ActionSpec(ActionKind kind, int n, int copies, FieldSpec field)
    : kind_(kind), n_(n), copies_(copies), field_(field) {
  if (copies < 0) throw std::invalid_argument("number of copies must be >= 0");
  if (n < 1) throw std::invalid_argument("action size must be >= 1");
  if (kind == ActionKind::cyclic_unipotent &&
      (field.kind() != FieldKind::prime_field || field.characteristic() != static_cast<std::uint32_t>(n))) {
    throw std::invalid_argument("cyclic:" + std::to_string(n) + " needs the field fp:" + std::to_string(n));
  }
}

ActionSpec ActionSpec::gl_conjugation(int n, int copies, FieldSpec field) {
  return ActionSpec(ActionKind::gl_conjugation, n, copies, field);
}

ActionSpec ActionSpec::slsl_leftright(int n, int copies, FieldSpec field) {
  return ActionSpec(ActionKind::slsl_leftright, n, copies, field);
}

ActionSpec ActionSpec::sl2_vector(int copies, FieldSpec field) {
  return ActionSpec(ActionKind::sl2_vector, 2, copies, field);
}

ActionSpec ActionSpec::cyclic_unipotent(int p, int copies, FieldSpec field) {
  if (!is_prime(static_cast<std::uint64_t>(std::max(p, 0)))) {
    throw std::invalid_argument("cyclic order " + std::to_string(p) + " is not prime");
  }
  return ActionSpec(ActionKind::cyclic_unipotent, p, copies, field);
}

ActionSpec ActionSpec::parse(std::string_view text, int copies, FieldSpec field) {
  if (text == "sl2vec") return sl2_vector(copies, field);
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("unknown action '" + std::string(text) + "'");
  auto head = text.substr(0, colon);
  auto tail = text.substr(colon + 1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), value);
  if (ec != std::errc{} || ptr != tail.data() + tail.size()) {
    throw std::invalid_argument("malformed action '" + std::string(text) + "'");
  }
  if (head == "conj") return gl_conjugation(value, copies, field);
  if (head == "slsl") return slsl_leftright(value, copies, field);
  if (head == "cyclic") return cyclic_unipotent(value, copies, field);
  throw std::invalid_argument("unknown action '" + std::string(text) + "'");
}

int ActionSpec::dim_v() const {
  switch (kind_) {
    case ActionKind::gl_conjugation:
    case ActionKind::slsl_leftright:
      return n_ * n_;
    case ActionKind::sl2_vector:
    case ActionKind::cyclic_unipotent:
      return 2;
  }
  return 0;
}

ActionSpec ActionSpec::with_copies(int copies) const { return ActionSpec(kind_, n_, copies, field_); }

ActionSpec ActionSpec::with_field(FieldSpec field) const { return ActionSpec(kind_, n_, copies_, field); }

std::vector<OneParamFamily> ActionSpec::generators() const {
  std::vector<OneParamFamily> out;
  const int n = n_;
  auto coord = [n](int a, int b) { return a * n + b; };
  switch (kind_) {
    case ActionKind::gl_conjugation:
      // X -> (1 + t E_kl) X (1 - t E_kl)
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          if (k == l) continue;
          auto f = OneParamFamily::identity(n * n);
          for (int b = 0; b < n; ++b) f.image[coord(k, b)].push_back({1, coord(l, b), 1});
          for (int a = 0; a < n; ++a) f.image[coord(a, l)].push_back({1, coord(a, k), -1});
          f.image[coord(k, l)].push_back({2, coord(l, k), -1});
          f.label = "conj E" + std::to_string(k + 1) + std::to_string(l + 1);
          out.push_back(std::move(f));
        }
      }
      break;
    case ActionKind::slsl_leftright:
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          if (k == l) continue;
          // X -> (1 + t E_kl) X
          auto left = OneParamFamily::identity(n * n);
          for (int b = 0; b < n; ++b) left.image[coord(k, b)].push_back({1, coord(l, b), 1});
          left.label = "left E" + std::to_string(k + 1) + std::to_string(l + 1);
          out.push_back(std::move(left));
          // X -> X (1 - t E_kl)
          auto right = OneParamFamily::identity(n * n);
          for (int a = 0; a < n; ++a) right.image[coord(a, l)].push_back({1, coord(a, k), -1});
          right.label = "right E" + std::to_string(k + 1) + std::to_string(l + 1);
          out.push_back(std::move(right));
        }
      }
      break;
    case ActionKind::sl2_vector:
      out.push_back(OneParamFamily::column_shift(2, 1, 0));
      out.push_back(OneParamFamily::column_shift(2, 0, 1));
      break;
    case ActionKind::cyclic_unipotent: {
      auto f = OneParamFamily::column_shift(2, 1, 0);
      f.discrete = true;
      f.label = "[[1,1],[0,1]]";
      out.push_back(std::move(f));
      break;
    }
  }
  return out;
}

std::vector<std::vector<int>> ActionSpec::coordinate_weights() const {
  std::vector<std::vector<int>> w;
  const int n = n_;
  switch (kind_) {
    case ActionKind::gl_conjugation:
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          std::vector<int> v(n, 0);
          ++v[a];
          --v[b];
          w.push_back(std::move(v));
        }
      }
      break;
    case ActionKind::slsl_leftright:
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          std::vector<int> v(2 * n, 0);
          ++v[a];
          --v[n + b];
          w.push_back(std::move(v));
        }
      }
      break;
    case ActionKind::sl2_vector:
      w = {{1, 0}, {0, 1}};
      break;
    case ActionKind::cyclic_unipotent:
      w = {{}, {}};
      break;
  }
  return w;
}

bool ActionSpec::torus_allows(const std::vector<int>& weight) const {
  auto all_equal = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin + 1; i < end; ++i) {
      if (weight[i] != weight[begin]) return false;
    }
    return true;
  };
  switch (kind_) {
    case ActionKind::gl_conjugation:
      for (int x : weight) {
        if (x != 0) return false;
      }
      return true;
    case ActionKind::slsl_leftright:
      return all_equal(0, n_) && all_equal(n_, 2 * n_);
    case ActionKind::sl2_vector:
      return all_equal(0, 2);
    case ActionKind::cyclic_unipotent:
      return true;
  }
  return true;
}

std::string ActionSpec::to_string() const {
  switch (kind_) {
    case ActionKind::gl_conjugation:
      return "conj:" + std::to_string(n_);
    case ActionKind::slsl_leftright:
      return "slsl:" + std::to_string(n_);
    case ActionKind::sl2_vector:
      return "sl2vec";
    case ActionKind::cyclic_unipotent:
      return "cyclic:" + std::to_string(n_);
  }
  return "";
}

}  // namespace schurpol
