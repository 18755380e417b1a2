// Copyright 2026 The mcdm-rank Authors.
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

#ifndef MCDM_FUZZY_HPP_
#define MCDM_FUZZY_HPP_

#include <cmath>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mcdm/error.hpp"
#include "mcdm/text.hpp"

namespace mcdm {

// Triangular fuzzy number (l, m, u) with l <= m <= u. A TFN with l == m == u
// is degenerate and behaves as the crisp number m.
class TriangularFuzzyNumber {
 public:
  TriangularFuzzyNumber() = default;

  TriangularFuzzyNumber(double l, double m, double u) : l_(l), m_(m), u_(u) {
    if (!std::isfinite(l)) throw ValidationError("tfn: l is not finite");
    if (!std::isfinite(m)) throw ValidationError("tfn: m is not finite");
    if (!std::isfinite(u)) throw ValidationError("tfn: u is not finite");
    if (l > m) throw ValidationError("tfn: l > m");
    if (m > u) throw ValidationError("tfn: m > u");
  }

  static TriangularFuzzyNumber Crisp(double value) {
    return TriangularFuzzyNumber(value, value, value);
  }

  double l() const noexcept { return l_; }
  double m() const noexcept { return m_; }
  double u() const noexcept { return u_; }

  bool IsDegenerate() const noexcept { return l_ == m_ && m_ == u_; }

  friend bool operator==(const TriangularFuzzyNumber&,
                         const TriangularFuzzyNumber&) = default;

 private:
  double l_ = 0.0;
  double m_ = 0.0;
  double u_ = 0.0;
};

using Tfn = TriangularFuzzyNumber;

// Component-wise arithmetic mean; used to fuse several experts' opinions.
inline Tfn Aggregate(std::span<const Tfn> tfns) {
  if (tfns.empty()) throw ValidationError("tfn aggregate: empty list");
  double l = 0.0, m = 0.0, u = 0.0;
  for (const Tfn& t : tfns) {
    l += t.l();
    m += t.m();
    u += t.u();
  }
  const double n = static_cast<double>(tfns.size());
  // Means of ordered triples stay ordered up to rounding; re-impose it.
  const double ml = l / n, mm = m / n, mu = u / n;
  return Tfn(std::min(ml, mm), mm, std::max(mu, mm));
}

inline double Centroid(const Tfn& a) {
  if (a.IsDegenerate()) return a.m();
  return (a.l() + a.m() + a.u()) / 3.0;
}

// Vertex-method distance sqrt(((dl)^2 + (dm)^2 + (du)^2) / 3).
inline double Distance(const Tfn& a, const Tfn& b) {
  if (a.IsDegenerate() && b.IsDegenerate()) return std::abs(a.m() - b.m());
  const double dl = a.l() - b.l();
  const double dm = a.m() - b.m();
  const double du = a.u() - b.u();
  return std::sqrt((dl * dl + dm * dm + du * du) / 3.0);
}

// Total order used when picking fuzzy extremes: centroid, then u, then m.
inline bool CentroidLess(const Tfn& a, const Tfn& b) {
  const double ca = Centroid(a), cb = Centroid(b);
  if (ca != cb) return ca < cb;
  if (a.u() != b.u()) return a.u() < b.u();
  return a.m() < b.m();
}

inline void to_json(nlohmann::ordered_json& j, const Tfn& t) {
  j = nlohmann::ordered_json{{"l", RoundSignificant(t.l())},
                             {"m", RoundSignificant(t.m())},
                             {"u", RoundSignificant(t.u())}};
}

inline Tfn TfnFromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("tfn: expected an object with l, m, u");
  for (const char* key : {"l", "m", "u"}) {
    if (!j.contains(key) || !j.at(key).is_number()) {
      throw ValidationError(std::string("tfn: missing numeric field '") + key + "'");
    }
  }
  return Tfn(j.at("l").get<double>(), j.at("m").get<double>(), j.at("u").get<double>());
}

// Ordered term -> TFN table. Terms are unique case-insensitively and modal
// values strictly increase along the list.
class LinguisticVocabulary {
 public:
  using Entry = std::pair<std::string, Tfn>;

  explicit LinguisticVocabulary(std::vector<Entry> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw ValidationError("vocabulary: no terms");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (Trim(entries_[i].first).empty()) {
        throw ValidationError("vocabulary: empty term at position " + std::to_string(i));
      }
      for (std::size_t k = 0; k < i; ++k) {
        if (SameName(entries_[k].first, entries_[i].first)) {
          throw ValidationError("vocabulary: duplicate term '" + entries_[i].first + "'");
        }
      }
      if (i > 0 && !(entries_[i - 1].second.m() < entries_[i].second.m())) {
        throw ValidationError("vocabulary: modal value of '" + entries_[i].first +
                              "' does not exceed that of '" + entries_[i - 1].first + "'");
      }
    }
  }

  // Very Low .. Very High, five terms on [0, 1].
  static const LinguisticVocabulary& Default() {
    static const LinguisticVocabulary vocab({
        {"Very Low", Tfn(0.0, 0.1, 0.3)},
        {"Low", Tfn(0.1, 0.3, 0.5)},
        {"Medium", Tfn(0.3, 0.5, 0.7)},
        {"High", Tfn(0.5, 0.7, 0.9)},
        {"Very High", Tfn(0.7, 0.9, 1.0)},
    });
    return vocab;
  }

  const std::vector<Entry>& entries() const noexcept { return entries_; }

  Tfn Lookup(std::string_view term) const {
    for (const auto& [name, tfn] : entries_) {
      if (SameName(name, term)) return tfn;
    }
    std::string valid;
    for (const auto& entry : entries_) {
      if (!valid.empty()) valid += ", ";
      valid += entry.first;
    }
    throw ValidationError("unknown linguistic term '" + Trim(term) + "' (valid: " + valid + ")");
  }

  bool Contains(std::string_view term) const {
    for (const auto& entry : entries_) {
      if (SameName(entry.first, term)) return true;
    }
    return false;
  }

  // [{"term": "...", "l": .., "m": .., "u": ..}, ...]
  static LinguisticVocabulary FromJson(const nlohmann::json& j) {
    if (!j.is_array()) throw ValidationError("vocabulary: expected a JSON array");
    std::vector<Entry> entries;
    for (const auto& item : j) {
      if (!item.is_object() || !item.contains("term") || !item.at("term").is_string()) {
        throw ValidationError("vocabulary: each entry needs a string 'term'");
      }
      entries.emplace_back(item.at("term").get<std::string>(), TfnFromJson(item));
    }
    return LinguisticVocabulary(std::move(entries));
  }

  nlohmann::ordered_json ToJson() const {
    auto out = nlohmann::ordered_json::array();
    for (const auto& [term, tfn] : entries_) {
      out.push_back({{"term", term}, {"l", tfn.l()}, {"m", tfn.m()}, {"u", tfn.u()}});
    }
    return out;
  }

 private:
  std::vector<Entry> entries_;
};

}  // namespace mcdm

#endif  // MCDM_FUZZY_HPP_
