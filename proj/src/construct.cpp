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

#include "becc/construct.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "becc/gf2.hpp"

namespace becc {

namespace {

bool scan_zero_columns(const CheckMatrix& h) {
  for (int j = 0; j < h.n_sym; ++j) {
    bool zero = true;
    for (int i = 0; i < h.r_sym && zero; ++i) zero = h.rows[i][j] == 0;
    if (zero) return true;
  }
  return false;
}

void require_symbol_only(const CheckMatrix& h, const char* op) {
  if (h.has_parity()) {
    std::ostringstream os;
    os << "construct: " << op << " does not accept a parity row";
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

CheckMatrix base_matrix(const FieldTable& f) {
  CheckMatrix h;
  h.b = f.b();
  h.r_sym = 3;
  h.n_sym = f.field_size() + 2;
  h.rows.assign(3, std::vector<FieldElem>(h.n_sym, 0));
  for (int e = 0; e < static_cast<int>(f.group_order()); ++e) {
    FieldElem x = f.alpha_pow(e);
    h.rows[0][e] = 1;
    h.rows[1][e] = x;
    h.rows[2][e] = f.mul(x, x);
  }
  int q1 = f.group_order();
  h.rows[0][q1] = 1;
  h.rows[1][q1 + 1] = 1;
  h.rows[2][q1 + 2] = 1;
  return h;
}

CheckMatrix even_pair_matrix(const FieldTable& f) {
  CheckMatrix h;
  h.b = f.b();
  h.r_sym = 2;
  h.n_sym = 2;
  h.rows = {{1, 1}, {0, 1}};
  return h;
}

AllOnesResult to_all_ones_row(const FieldTable& f, const CheckMatrix& h,
                              const std::vector<FieldElem>& coeffs) {
  require_symbol_only(h, "to_all_ones_row");
  if (f.b() != h.b)
    throw std::invalid_argument("construct: field width mismatch");
  if (h.r_sym < 2 ||
      coeffs.size() != static_cast<std::size_t>(h.r_sym) - 1)
    throw std::invalid_argument(
        "construct: need one combination coefficient per row below the top");
  AllOnesResult res;
  res.h = h;
  for (int j = 0; j < h.n_sym; ++j) {
    FieldElem top = h.rows[0][j];
    for (int i = 1; i < h.r_sym; ++i)
      top ^= f.mul(coeffs[i - 1], h.rows[i][j]);
    if (top == 0) {
      res.h.rows[0][j] = 0;
      res.unnormalized.push_back(j);
      continue;
    }
    FieldElem scale = f.inv(top);
    res.h.rows[0][j] = 1;
    for (int i = 1; i < h.r_sym; ++i)
      res.h.rows[i][j] = f.mul(scale, h.rows[i][j]);
  }
  return res;
}

AllOnesResult to_all_ones_row(const FieldTable& f, const CheckMatrix& h,
                              FieldElem a) {
  if (a == 0)
    throw std::invalid_argument("construct: combination scalar must be nonzero");
  if (h.r_sym < 3)
    throw std::invalid_argument("construct: need at least 3 rows");
  std::vector<FieldElem> coeffs(h.r_sym - 1, 0);
  coeffs[0] = a;
  coeffs[1] = 1;
  return to_all_ones_row(f, h, coeffs);
}

int count_valid_scalars(const FieldTable& f) {
  CheckMatrix base = base_matrix(f);
  int count = 0;
  for (int e = 0; e < static_cast<int>(f.group_order()); ++e) {
    if (to_all_ones_row(f, base, f.alpha_pow(e)).unnormalized.empty()) ++count;
  }
  return count;
}

CheckMatrix strip_top_row(const CheckMatrix& h) {
  require_symbol_only(h, "strip_top_row");
  if (h.r_sym < 2)
    throw std::invalid_argument("construct: cannot strip to zero rows");
  CheckMatrix out;
  out.b = h.b;
  out.r_sym = h.r_sym - 1;
  out.n_sym = h.n_sym;
  out.rows.assign(h.rows.begin() + 1, h.rows.end());
  out.allow_zero_column = scan_zero_columns(out);
  return out;
}

CheckMatrix product_construct(const CheckMatrix& hv, const CheckMatrix& hw2) {
  require_symbol_only(hv, "product_construct");
  require_symbol_only(hw2, "product_construct");
  if (hv.b != hw2.b)
    throw std::invalid_argument("construct: factor field widths differ");
  CheckMatrix out;
  out.b = hv.b;
  out.r_sym = hv.r_sym + hw2.r_sym;
  long long n = static_cast<long long>(hv.n_sym) * hw2.n_sym;
  if (n > std::numeric_limits<int>::max())
    throw std::overflow_error("construct: product length overflows");
  out.n_sym = static_cast<int>(n);
  out.rows.assign(out.r_sym, std::vector<FieldElem>(out.n_sym, 0));
  for (int i = 0; i < hv.n_sym; ++i) {
    for (int j = 0; j < hw2.n_sym; ++j) {
      int c = i * hw2.n_sym + j;
      for (int u = 0; u < hv.r_sym; ++u) out.rows[u][c] = hv.rows[u][i];
      for (int u = 0; u < hw2.r_sym; ++u)
        out.rows[hv.r_sym + u][c] = hw2.rows[u][j];
    }
  }
  out.allow_zero_column = scan_zero_columns(out);
  return out;
}

std::uint64_t code_length_bound(int b, int r_sym) {
  if (b < 2 || b > 16)
    throw std::invalid_argument("construct: b must satisfy 2 <= b <= 16");
  if (r_sym < 3)
    throw std::invalid_argument("construct: r_sym must be at least 3");
  std::uint64_t base = (std::uint64_t{1} << b) + 2;
  int exp = (r_sym % 2 == 1) ? (r_sym - 1) / 2 : (r_sym - 2) / 2;
  std::uint64_t n = (r_sym % 2 == 1) ? 1 : 2;
  for (int i = 0; i < exp; ++i) {
    if (n > std::numeric_limits<std::uint64_t>::max() / base)
      throw std::overflow_error("construct: code length overflows 64 bits");
    n *= base;
  }
  return n;
}

BuiltCode build_sbec_dbed(const FieldTable& f, int r_sym) {
  if (r_sym < 3)
    throw std::invalid_argument("construct: r_sym must be at least 3");
  CheckMatrix h;
  if (r_sym == 3) {
    h = base_matrix(f);
  } else if (r_sym == 4) {
    h = product_construct(base_matrix(f), strip_top_row(even_pair_matrix(f)));
  } else {
    CheckMatrix w = build_sbec_dbed(f, r_sym - 2).h;
    AllOnesResult ones;
    bool found = false;
    if (w.r_sym == 3) {
      // Single-scalar scan in antilog order; the published example picks
      // the first valid power of alpha this way.
      for (int e = 0; e < static_cast<int>(f.group_order()) && !found; ++e) {
        ones = to_all_ones_row(f, w, f.alpha_pow(e));
        found = ones.unnormalized.empty();
      }
    } else {
      // Lexicographic scan over coefficient vectors, each coordinate
      // running through 1, alpha, ..., alpha^{q-2}, 0.
      std::vector<int> idx(w.r_sym - 1, 0);
      std::vector<FieldElem> coeffs(w.r_sym - 1, 0);
      int radix = f.field_size();  // q-1 nonzero values then zero
      while (!found) {
        for (std::size_t i = 0; i < idx.size(); ++i)
          coeffs[i] = idx[i] < static_cast<int>(f.group_order())
                          ? f.alpha_pow(idx[i])
                          : 0;
        ones = to_all_ones_row(f, w, coeffs);
        found = ones.unnormalized.empty();
        if (found) break;
        int p = static_cast<int>(idx.size()) - 1;
        while (p >= 0 && ++idx[p] == radix) idx[p--] = 0;
        if (p < 0) break;
      }
    }
    if (!found)
      throw std::runtime_error(
          "construct: no row combination normalizes every column");
    h = product_construct(base_matrix(f), strip_top_row(ones.h));
  }
  return BuiltCode{spec_for(h), h};
}

CheckMatrix double_code(const CheckMatrix& h) {
  require_symbol_only(h, "double_code");
  if (h.n_sym == 0)
    throw std::invalid_argument("construct: cannot double an empty matrix");
  CheckMatrix out;
  out.b = h.b;
  out.r_sym = h.r_sym;
  long long n = 2ll * h.n_sym;
  if (n > std::numeric_limits<int>::max())
    throw std::overflow_error("construct: doubled length overflows");
  out.n_sym = static_cast<int>(n);
  out.rows.assign(out.r_sym, std::vector<FieldElem>(out.n_sym, 0));
  for (int i = 0; i < h.r_sym; ++i) {
    for (int j = 0; j < h.n_sym; ++j) {
      out.rows[i][j] = h.rows[i][j];
      out.rows[i][j + h.n_sym] = h.rows[i][j];
    }
  }
  std::size_t bits = static_cast<std::size_t>(out.n_sym) * h.b;
  out.parity_row = BitVec(bits);
  for (std::size_t c = bits / 2; c < bits; ++c) out.parity_row.set(c, true);
  out.allow_zero_column = h.allow_zero_column;
  return out;
}

BuiltCode shorten(const FieldTable& f, const BuiltCode& code,
                  long long target_k_bits) {
  const CodeSpec& spec = code.spec;
  if (target_k_bits < 1 || target_k_bits > spec.k_bits)
    throw std::invalid_argument(
        "construct: shorten target must be in [1, k_bits]");
  if (target_k_bits == spec.k_bits) return code;

  BitMatrix expansion = binary_expansion(f, code.h);
  std::vector<BitVec> rows;
  rows.reserve(expansion.rows());
  for (std::size_t i = 0; i < expansion.rows(); ++i)
    rows.push_back(expansion.row(i));
  std::vector<std::size_t> pivots = gf2_rref(rows, expansion.cols(), true);
  if (pivots.size() != expansion.rows())
    throw std::invalid_argument("construct: check matrix is rank deficient");

  std::vector<bool> is_pivot(expansion.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> info;
  for (std::size_t c = 0; c < expansion.cols(); ++c)
    if (!is_pivot[c]) info.push_back(c);

  // Bits above the current k are already pinned; everything from the
  // target upward is now deleted or pinned.
  std::vector<bool> deleted(expansion.cols(), false);
  for (std::size_t i = target_k_bits; i < info.size(); ++i)
    deleted[info[i]] = true;

  std::vector<int> keep;
  for (int s = 0; s < code.h.n_sym; ++s) {
    bool all_deleted = true;
    for (int t = 0; t < code.h.b && all_deleted; ++t)
      all_deleted = deleted[static_cast<std::size_t>(s) * code.h.b + t];
    if (!all_deleted) keep.push_back(s);
  }

  CheckMatrix out;
  out.b = code.h.b;
  out.r_sym = code.h.r_sym;
  out.n_sym = static_cast<int>(keep.size());
  out.rows.assign(out.r_sym, std::vector<FieldElem>(out.n_sym, 0));
  for (int i = 0; i < out.r_sym; ++i)
    for (int j = 0; j < out.n_sym; ++j)
      out.rows[i][j] = code.h.rows[i][keep[j]];
  if (code.h.has_parity()) {
    out.parity_row = BitVec(static_cast<std::size_t>(out.n_sym) * out.b);
    for (int j = 0; j < out.n_sym; ++j)
      for (int t = 0; t < out.b; ++t)
        out.parity_row.set(
            static_cast<std::size_t>(j) * out.b + t,
            code.h.parity_row.get(static_cast<std::size_t>(keep[j]) * out.b +
                                  t));
  }
  out.allow_zero_column = code.h.allow_zero_column;

  CodeSpec s;
  s.b = spec.b;
  s.r_sym = spec.r_sym;
  s.extra_parity_bits = spec.extra_parity_bits;
  s.n_sym = out.n_sym;
  s.k_bits = target_k_bits;
  s.n_bits = target_k_bits + s.r_bits();
  return BuiltCode{s, out};
}

ValidationReport validate_sbec_dbed(const FieldTable& f, const CheckMatrix& h,
                                    const ValidateBudget& budget) {
  if (f.b() != h.b)
    throw std::invalid_argument("validate: field width mismatch");
  int q1 = f.group_order();
  std::uint64_t singles = static_cast<std::uint64_t>(h.n_sym) * q1;
  if (singles > budget.max_single) {
    std::ostringstream os;
    os << "validate: " << singles << " single-error syndromes exceed budget "
       << budget.max_single;
    throw std::invalid_argument(os.str());
  }
  std::uint64_t pairs =
      static_cast<std::uint64_t>(h.n_sym) * (h.n_sym - 1) / 2;
  std::uint64_t doubles = pairs * q1 * q1;
  if (pairs != 0 && doubles / (static_cast<std::uint64_t>(q1) * q1) != pairs)
    throw std::invalid_argument("validate: double-error count overflows");
  if (doubles > budget.max_double) {
    std::ostringstream os;
    os << "validate: " << doubles << " double-error syndromes exceed budget "
       << budget.max_double;
    throw std::invalid_argument(os.str());
  }
  if (h.r_bits() > 63)
    throw std::invalid_argument(
        "validate: syndromes wider than 63 bits are not supported");

  ValidationReport rep;
  auto add = [&](const Violation& v) {
    ++rep.violation_count;
    if (rep.violations.size() < budget.max_violations)
      rep.violations.push_back(v);
  };

  // Packed syndrome of pattern e at byte j: symbol i occupies bits
  // [i*b, (i+1)*b), the parity bit (if any) sits above them.
  int b = h.b;
  std::vector<FieldElem> parity_mask(h.n_sym, 0);
  if (h.has_parity()) {
    for (int j = 0; j < h.n_sym; ++j) {
      FieldElem m = 0;
      for (int t = 0; t < b; ++t)
        if (h.parity_row.get(static_cast<std::size_t>(j) * b + t))
          m |= static_cast<FieldElem>(1u << t);
      parity_mask[j] = m;
    }
  }
  auto syndrome = [&](int j, FieldElem e) {
    std::uint64_t s = 0;
    for (int i = 0; i < h.r_sym; ++i)
      s |= static_cast<std::uint64_t>(f.mul(h.rows[i][j], e)) << (i * b);
    if (h.has_parity() &&
        (std::popcount(static_cast<unsigned>(parity_mask[j] & e)) & 1))
      s |= std::uint64_t{1} << (h.r_sym * b);
    return s;
  };

  std::vector<std::uint64_t> syn(singles);
  std::unordered_map<std::uint64_t, std::pair<int, FieldElem>> seen;
  seen.reserve(singles * 2);
  for (int j = 0; j < h.n_sym; ++j) {
    for (int e = 1; e <= q1; ++e) {
      std::uint64_t s = syndrome(j, static_cast<FieldElem>(e));
      syn[static_cast<std::size_t>(j) * q1 + (e - 1)] = s;
      ++rep.singles_checked;
      if (s == 0) {
        add({Violation::kSingleIsZero, j, static_cast<FieldElem>(e)});
        continue;
      }
      auto [it, fresh] = seen.try_emplace(s, j, static_cast<FieldElem>(e));
      if (!fresh)
        add({Violation::kDuplicateSingle, it->second.first, it->second.second,
             j, static_cast<FieldElem>(e)});
    }
  }

  for (int j1 = 0; j1 < h.n_sym; ++j1) {
    for (int j2 = j1 + 1; j2 < h.n_sym; ++j2) {
      for (int e1 = 1; e1 <= q1; ++e1) {
        std::uint64_t s1 = syn[static_cast<std::size_t>(j1) * q1 + (e1 - 1)];
        for (int e2 = 1; e2 <= q1; ++e2) {
          std::uint64_t s =
              s1 ^ syn[static_cast<std::size_t>(j2) * q1 + (e2 - 1)];
          ++rep.doubles_checked;
          if (s == 0) {
            add({Violation::kDoubleIsZero, j1, static_cast<FieldElem>(e1), j2,
                 static_cast<FieldElem>(e2)});
            continue;
          }
          auto it = seen.find(s);
          if (it != seen.end())
            add({Violation::kDoubleEqualsSingle, j1,
                 static_cast<FieldElem>(e1), j2, static_cast<FieldElem>(e2),
                 it->second.first, it->second.second});
        }
      }
    }
  }
  rep.ok = rep.violation_count == 0;
  return rep;
}

}  // namespace becc
