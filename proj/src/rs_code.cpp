// Copyright 2026 The becc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "becc/rs_code.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace becc {

RsParams rs_params(int b, int t) {
  if (b < 2 || b > 16)
    throw std::invalid_argument("rs: b must satisfy 2 <= b <= 16");
  int n = (1 << b) - 1;
  if (t < 1 || 2 * t >= n) {
    std::ostringstream os;
    os << "rs: t=" << t << " out of range for n=" << n
       << " (need 1 <= t and 2t < n)";
    throw std::invalid_argument(os.str());
  }
  return RsParams{n, n - 2 * t, 2 * t + 1};
}

RsCode::RsCode(FieldTable field, int t, GfPoly g)
    : field_(std::move(field)),
      t_(t),
      n_(field_.group_order()),
      k_(n_ - 2 * t),
      g_(std::move(g)) {}

RsCode RsCode::make(FieldTable field, int t) {
  int n = field.group_order();
  if (t < 0 || 2 * t >= n)
    throw std::invalid_argument("rs: need 0 <= t and 2t < n");
  // g(x) = (x + alpha)(x + alpha^2) ... (x + alpha^{2t}); empty product is 1.
  GfPoly g(std::vector<FieldElem>{1});
  for (int i = 1; i <= 2 * t; ++i) {
    GfPoly factor(std::vector<FieldElem>{field.alpha_pow(i), 1});
    g = poly_mul(field, g, factor);
  }
  return RsCode(std::move(field), t, std::move(g));
}

std::vector<FieldElem> RsCode::encode(
    const std::vector<FieldElem>& data) const {
  if (static_cast<int>(data.size()) != k_)
    throw std::invalid_argument("rs: encode expects k data symbols");
  std::vector<FieldElem> c(n_, 0);
  std::copy(data.begin(), data.end(), c.begin() + (n_ - k_));
  if (t_ == 0) return c;
  GfPoly shifted;
  shifted.c = c;
  shifted.trim();
  GfPoly rem = poly_divmod(field_, shifted, g_).second;
  for (int i = 0; i < n_ - k_; ++i) c[i] = rem.at(i);
  return c;
}

std::vector<FieldElem> RsCode::extract_data(
    const std::vector<FieldElem>& codeword) const {
  if (static_cast<int>(codeword.size()) < n_ - k_ ||
      static_cast<int>(codeword.size()) > n_)
    throw std::invalid_argument("rs: bad codeword length");
  return std::vector<FieldElem>(codeword.begin() + (n_ - k_), codeword.end());
}

namespace {

// Iterative locator synthesis from syndromes s[0..2t-1] (s[i] = s_{i+1}).
GfPoly synthesize_locator(const FieldTable& f,
                          const std::vector<FieldElem>& s) {
  GfPoly sigma(std::vector<FieldElem>{1});
  GfPoly prev(std::vector<FieldElem>{1});
  int l = 0, m = 1;
  FieldElem b = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    FieldElem d = s[i];
    for (int j = 1; j <= l; ++j)
      d ^= f.mul(sigma.at(j), s[i - j]);
    if (d == 0) {
      ++m;
      continue;
    }
    GfPoly shifted;
    shifted.c.assign(prev.c.size() + m, 0);
    FieldElem coef = f.div(d, b);
    for (std::size_t j = 0; j < prev.c.size(); ++j)
      shifted.c[j + m] = f.mul(coef, prev.c[j]);
    if (2 * l <= static_cast<int>(i)) {
      GfPoly keep = sigma;
      sigma = poly_add(sigma, shifted);
      l = static_cast<int>(i) + 1 - l;
      prev = keep;
      b = d;
      m = 1;
    } else {
      sigma = poly_add(sigma, shifted);
      ++m;
    }
  }
  return sigma;
}

}  // namespace

RsDecodeResult RsCode::decode(const std::vector<FieldElem>& received) const {
  if (static_cast<int>(received.size()) != n_)
    throw std::invalid_argument("rs: decode expects n symbols");
  RsDecodeResult res;
  res.state.syndromes.assign(2 * t_, 0);
  GfPoly r;
  r.c = received;
  r.trim();
  bool clean = true;
  for (int i = 1; i <= 2 * t_; ++i) {
    FieldElem s = poly_eval(field_, r, field_.alpha_pow(i));
    res.state.syndromes[i - 1] = s;
    if (s != 0) clean = false;
  }
  if (clean) {
    res.ok = true;
    res.codeword = received;
    res.data = extract_data(received);
    res.state.locator = GfPoly(std::vector<FieldElem>{1});
    res.state.evaluator = GfPoly(std::vector<FieldElem>{1});
    return res;
  }

  GfPoly sigma = synthesize_locator(field_, res.state.syndromes);
  res.state.locator = sigma;
  int nu = sigma.deg();
  if (nu < 1 || nu > t_) return res;

  // Root search over every location: position p is in error when
  // sigma(alpha^{-p}) = 0, i.e. X_p = alpha^p is a locator root inverse.
  std::vector<int> pos;
  for (int p = 0; p < n_; ++p) {
    if (poly_eval(field_, sigma, field_.alpha_pow(-p)) == 0) pos.push_back(p);
  }
  if (static_cast<int>(pos.size()) != nu) return res;

  // z(x) = 1 + (s1+sigma1)x + (s2+sigma1 s1+sigma2)x^2 + ...
  GfPoly z;
  z.c.assign(nu + 1, 0);
  z.c[0] = 1;
  for (int i = 1; i <= nu; ++i) {
    FieldElem acc = sigma.at(i);
    for (int j = 0; j < i; ++j)
      acc ^= field_.mul(sigma.at(j), res.state.syndromes[i - j - 1]);
    z.c[i] = acc;
  }
  res.state.evaluator = z;

  std::vector<FieldElem> values(pos.size(), 0);
  for (std::size_t a = 0; a < pos.size(); ++a) {
    FieldElem xinv = field_.alpha_pow(-pos[a]);
    FieldElem num = poly_eval(field_, z, xinv);
    FieldElem den = 1;
    for (std::size_t q = 0; q < pos.size(); ++q) {
      if (q == a) continue;
      den = field_.mul(den,
                       1 ^ field_.mul(field_.alpha_pow(pos[q]), xinv));
    }
    if (den == 0 || num == 0) return res;
    values[a] = field_.div(num, den);
  }

  std::vector<FieldElem> corrected = received;
  for (std::size_t a = 0; a < pos.size(); ++a) corrected[pos[a]] ^= values[a];

  // Bounded-distance contract: accept only a verified codeword.
  GfPoly cpoly;
  cpoly.c = corrected;
  cpoly.trim();
  for (int i = 1; i <= 2 * t_; ++i) {
    if (poly_eval(field_, cpoly, field_.alpha_pow(i)) != 0) return res;
  }

  res.ok = true;
  res.codeword = std::move(corrected);
  res.data = extract_data(res.codeword);
  res.state.positions = std::move(pos);
  res.state.values = std::move(values);
  return res;
}

std::vector<FieldElem> RsCode::encode_shortened(
    const std::vector<FieldElem>& data) const {
  int ks = static_cast<int>(data.size());
  if (ks < 1 || ks > k_)
    throw std::invalid_argument("rs: shortened data length out of range");
  std::vector<FieldElem> padded(k_, 0);
  std::copy(data.begin(), data.end(), padded.begin());
  std::vector<FieldElem> full = encode(padded);
  full.resize(n_ - (k_ - ks));
  return full;
}

RsDecodeResult RsCode::decode_shortened(
    const std::vector<FieldElem>& received) const {
  int ns = static_cast<int>(received.size());
  if (ns <= n_ - k_ || ns > n_)
    throw std::invalid_argument("rs: shortened length out of range");
  std::vector<FieldElem> padded = received;
  padded.resize(n_, 0);
  RsDecodeResult res = decode(padded);
  if (!res.ok) return res;
  for (int p : res.state.positions) {
    if (p >= ns) {  // correction landed on a symbol that was never sent
      res.ok = false;
      res.codeword.clear();
      res.data.clear();
      return res;
    }
  }
  res.codeword.resize(ns);
  res.data = std::vector<FieldElem>(res.codeword.begin() + (n_ - k_),
                                    res.codeword.end());
  return res;
}

int RsCode::min_distance_bruteforce(std::uint64_t budget) const {
  std::uint64_t q = field_.field_size();
  std::uint64_t total = 1;
  for (int i = 0; i < k_; ++i) {
    if (total > budget / q) {
      std::ostringstream os;
      os << "rs: enumerating " << q << "^" << k_ << " codewords exceeds budget "
         << budget;
      throw std::invalid_argument(os.str());
    }
    total *= q;
  }
  if (total > budget) {
    std::ostringstream os;
    os << "rs: enumerating " << total << " codewords exceeds budget " << budget;
    throw std::invalid_argument(os.str());
  }
  std::vector<FieldElem> data(k_, 0);
  int best = n_ + 1;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    // Odometer increment in base q.
    for (int i = 0; i < k_; ++i) {
      if (++data[i] < q) break;
      data[i] = 0;
    }
    std::vector<FieldElem> c = encode(data);
    int w = 0;
    for (FieldElem s : c)
      if (s != 0) ++w;
    if (w < best) best = w;
    if (best == 1) break;  // cannot go lower
  }
  return best;
}

}  // namespace becc
