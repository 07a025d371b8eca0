#ifndef HOPFCYC_TENSOR_HPP
#define HOPFCYC_TENSOR_HPP

#include <concepts>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfcyc/scalar.hpp"

namespace hopfcyc {

/// Finite linear combination of basis keys.
template <class Key>
using LinComb = std::map<Key, Scalar>;

/// Element of H^{\otimes n}: basis tuples of length n mapped to coefficients.
/// Degree 0 uses the empty tuple as the single key.
template <class Key>
using Tensor = std::map<std::vector<Key>, Scalar>;

template <class Map, class K>
void accumulate(Map& m, const K& key, const Scalar& c) {
  if (c.is_zero()) {
    return;
  }
  auto [it, inserted] = m.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      m.erase(it);
    }
  }
}

template <class Map>
void accumulate_all(Map& into, const Map& from, const Scalar& factor = Scalar(1)) {
  for (const auto& [k, c] : from) accumulate(into, k, c * factor);
}

template <class Key>
std::size_t degree_of(const Tensor<Key>& t) {
  return t.empty() ? 0 : t.begin()->first.size();
}

/// The algebraic surface the cyclic operators need from a Hopf algebra with
/// a fixed character. Implemented by finite structure-constant algebras and
/// by rule-based ones (enveloping algebras).
template <class M>
concept HopfModel = requires(const M& m, const typename M::Key& k) {
  { m.unit() } -> std::convertible_to<LinComb<typename M::Key>>;
  { m.product(k, k) } -> std::convertible_to<LinComb<typename M::Key>>;
  { m.coproduct(k) } -> std::convertible_to<Tensor<typename M::Key>>;
  { m.counit(k) } -> std::convertible_to<Scalar>;
  { m.antipode(k) } -> std::convertible_to<LinComb<typename M::Key>>;
  { m.twisted_antipode(k) } -> std::convertible_to<LinComb<typename M::Key>>;
};

namespace tensor {

template <class Key>
Tensor<Key> scalar_tensor(const Scalar& c) {
  Tensor<Key> t;
  accumulate(t, std::vector<Key>{}, c);
  return t;
}

/// a_1 (x) a_2 (x) ... (x) a_n, expanded multilinearly.
template <class Key>
Tensor<Key> pure(const std::vector<LinComb<Key>>& factors) {
  Tensor<Key> out = scalar_tensor<Key>(Scalar(1));
  for (const auto& f : factors) {
    Tensor<Key> next;
    for (const auto& [tuple, c] : out) {
      for (const auto& [k, d] : f) {
        auto t = tuple;
        t.push_back(k);
        accumulate(next, t, c * d);
      }
    }
    out = std::move(next);
  }
  return out;
}

template <class Key>
Tensor<Key> concat(const Tensor<Key>& a, const Tensor<Key>& b) {
  Tensor<Key> out;
  for (const auto& [ta, ca] : a) {
    for (const auto& [tb, cb] : b) {
      auto t = ta;
      t.insert(t.end(), tb.begin(), tb.end());
      accumulate(out, t, ca * cb);
    }
  }
  return out;
}

template <class Key, class F>
LinComb<Key> map_linear(const LinComb<Key>& x, F&& f) {
  LinComb<Key> out;
  for (const auto& [k, c] : x) accumulate_all(out, LinComb<Key>(f(k)), c);
  return out;
}

template <HopfModel M>
LinComb<typename M::Key> multiply(const M& m, const LinComb<typename M::Key>& a,
                                  const LinComb<typename M::Key>& b) {
  LinComb<typename M::Key> out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) accumulate_all(out, LinComb<typename M::Key>(m.product(ka, kb)), ca * cb);
  }
  return out;
}

/// Delta^{slots-1}(x) as an element with `slots` tensor factors (slots >= 1).
template <HopfModel M>
Tensor<typename M::Key> iterated_coproduct(const M& m, const LinComb<typename M::Key>& x,
                                           std::size_t slots) {
  using Key = typename M::Key;
  if (slots == 0) {
    throw std::invalid_argument("iterated coproduct needs at least one slot");
  }
  Tensor<Key> out;
  for (const auto& [k, c] : x) accumulate(out, std::vector<Key>{k}, c);
  for (std::size_t s = 1; s < slots; ++s) {
    Tensor<Key> next;
    for (const auto& [tuple, c] : out) {
      for (const auto& [pair, d] : Tensor<Key>(m.coproduct(tuple.back()))) {
        auto t = tuple;
        t.back() = pair[0];
        t.push_back(pair[1]);
        accumulate(next, t, c * d);
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Slotwise product (a_1 b_1) (x) ... (x) (a_n b_n).
template <HopfModel M>
Tensor<typename M::Key> slotwise_product(const M& m, const Tensor<typename M::Key>& a,
                                         const Tensor<typename M::Key>& b) {
  using Key = typename M::Key;
  Tensor<Key> out;
  for (const auto& [ta, ca] : a) {
    for (const auto& [tb, cb] : b) {
      if (ta.size() != tb.size()) {
        throw std::invalid_argument("slotwise product of tensors of different degree");
      }
      std::vector<LinComb<Key>> slots;
      slots.reserve(ta.size());
      for (std::size_t i = 0; i < ta.size(); ++i) slots.emplace_back(m.product(ta[i], tb[i]));
      accumulate_all(out, pure<Key>(slots), ca * cb);
    }
  }
  return out;
}

/// Face delta_i : H^{(x)(n-1)} -> H^{(x)n}, 0 <= i <= n. Slot i (1-based)
/// is split by the coproduct; i = 0 and i = n insert the unit.
template <HopfModel M>
Tensor<typename M::Key> face(const M& m, std::size_t i, std::size_t n,
                             const Tensor<typename M::Key>& t) {
  using Key = typename M::Key;
  if (n == 0 || i > n) {
    throw std::out_of_range("face index " + std::to_string(i) + " at degree " + std::to_string(n));
  }
  Tensor<Key> unit;
  for (const auto& [k, c] : LinComb<Key>(m.unit())) accumulate(unit, std::vector<Key>{k}, c);
  Tensor<Key> out;
  for (const auto& [tuple, c] : t) {
    if (tuple.size() + 1 != n) {
      throw std::invalid_argument("face: tensor degree does not match");
    }
    Tensor<Key> single;
    accumulate(single, tuple, c);
    if (i == 0) {
      accumulate_all(out, concat(unit, single));
    } else if (i == n) {
      accumulate_all(out, concat(single, unit));
    } else {
      for (const auto& [pair, d] : Tensor<Key>(m.coproduct(tuple[i - 1]))) {
        std::vector<Key> r(tuple.begin(), tuple.begin() + static_cast<std::ptrdiff_t>(i - 1));
        r.push_back(pair[0]);
        r.push_back(pair[1]);
        r.insert(r.end(), tuple.begin() + static_cast<std::ptrdiff_t>(i), tuple.end());
        accumulate(out, r, c * d);
      }
    }
  }
  return out;
}

/// Degeneracy sigma_i : H^{(x)(n+1)} -> H^{(x)n}; applies the counit to slot i+1.
template <HopfModel M>
Tensor<typename M::Key> degeneracy(const M& m, std::size_t i, std::size_t n,
                                   const Tensor<typename M::Key>& t) {
  using Key = typename M::Key;
  if (i > n) {
    throw std::out_of_range("degeneracy index " + std::to_string(i) + " at degree " +
                            std::to_string(n));
  }
  Tensor<Key> out;
  for (const auto& [tuple, c] : t) {
    if (tuple.size() != n + 1) {
      throw std::invalid_argument("degeneracy: tensor degree does not match");
    }
    Scalar const e = m.counit(tuple[i]);
    if (e.is_zero()) {
      continue;
    }
    auto r = tuple;
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
    accumulate(out, r, c * e);
  }
  return out;
}

/// Cyclic operator tau_n(h^1 (x) ... (x) h^n) = Delta^{n-1} S~(h^1) . (h^2 (x) ... (x) h^n (x) 1).
template <HopfModel M>
Tensor<typename M::Key> cyclic(const M& m, std::size_t n, const Tensor<typename M::Key>& t) {
  using Key = typename M::Key;
  if (n == 0) {
    return t;
  }
  Tensor<Key> unit;
  for (const auto& [k, c] : LinComb<Key>(m.unit())) accumulate(unit, std::vector<Key>{k}, c);
  Tensor<Key> out;
  for (const auto& [tuple, c] : t) {
    if (tuple.size() != n) {
      throw std::invalid_argument("cyclic: tensor degree does not match");
    }
    auto const left = iterated_coproduct(m, LinComb<Key>(m.twisted_antipode(tuple[0])), n);
    Tensor<Key> rest;
    accumulate(rest, std::vector<Key>(tuple.begin() + 1, tuple.end()), Scalar(1));
    accumulate_all(out, slotwise_product(m, left, concat(rest, unit)), c);
  }
  return out;
}

}  // namespace tensor

}  // namespace hopfcyc

#endif  // HOPFCYC_TENSOR_HPP
