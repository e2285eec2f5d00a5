#include "oddtown/set_systems.hpp"

#include <functional>
#include <stdexcept>

#include "oddtown/gf2.hpp"

namespace oddtown {

namespace {

void require_ground(const SubsetBits& s, std::size_t n, const char* what) {
  if (s.ground_size() != n) {
    throw std::invalid_argument(std::string(what) + ": member has ground size " +
                                std::to_string(s.ground_size()) + ", expected " + std::to_string(n));
  }
}

const char* parity_name(bool odd) { return odd ? "odd" : "even"; }

}  // namespace

SetFamily::SetFamily(std::size_t n, std::vector<SubsetBits> members)
    : ground_size(n), sets(std::move(members)) {
  for (const auto& s : sets) require_ground(s, n, "SetFamily");
}

TupleSystem::TupleSystem(std::size_t k, std::size_t t, std::size_t ground_size,
                         std::vector<std::vector<SubsetBits>> families)
    : k_(k), t_(t), m_(0), n_(ground_size), families_(std::move(families)) {
  if (k < 2) throw std::invalid_argument("tuple system needs k >= 2");
  if (t < 2 || t > k) throw std::invalid_argument("tuple system needs 2 <= t <= k");
  if (families_.size() != k) {
    throw std::invalid_argument("expected " + std::to_string(k) + " families, got " +
                                std::to_string(families_.size()));
  }
  m_ = families_.front().size();
  for (const auto& family : families_) {
    if (family.size() != m_) throw std::invalid_argument("families have different lengths");
    for (const auto& s : family) require_ground(s, n_, "TupleSystem");
  }
}

bool intersection_parity(std::span<const SubsetBits> sets) {
  if (sets.empty()) throw std::invalid_argument("intersection of an empty list of sets");
  SubsetBits acc = sets.front();
  for (std::size_t i = 1; i < sets.size(); ++i) {
    require_ground(sets[i], acc.ground_size(), "intersection_parity");
    acc &= sets[i];
  }
  return acc.parity();
}

VerifyReport verify_oddtown(const SetFamily& family, std::size_t cap) {
  VerifyReport report(cap);
  const auto& sets = family.sets;
  for (std::size_t i = 0; i < sets.size() && !report.full(); ++i) {
    if (!sets[i].parity()) report.add({i + 1}, sets[i].size(), "odd size");
  }
  for (std::size_t i = 0; i < sets.size() && !report.full(); ++i) {
    for (std::size_t j = i + 1; j < sets.size() && !report.full(); ++j) {
      const auto meet = sets[i] & sets[j];
      if (meet.parity()) report.add({i + 1, j + 1}, meet.size(), "even intersection");
    }
  }
  return report;
}

VerifyReport verify_skew_oddtown(const SetFamily& a, const SetFamily& b, SkewCondition condition,
                                 std::size_t cap) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("skew oddtown families differ in length: " + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()));
  }
  if (a.ground_size != b.ground_size) throw std::invalid_argument("skew oddtown ground sizes differ");
  VerifyReport report(cap);
  const std::size_t m = a.size();
  for (std::size_t i = 0; i < m && !report.full(); ++i) {
    for (std::size_t j = 0; j < m && !report.full(); ++j) {
      if (i > j && condition == SkewCondition::upper_triangular) continue;
      const auto meet = a.sets[i] & b.sets[j];
      const bool want_odd = i == j;
      if (meet.parity() != want_odd) report.add({i + 1, j + 1}, meet.size(), parity_name(want_odd));
    }
  }
  return report;
}

VerifyReport verify_kt_oddtown(const SetFamily& family, std::size_t k, std::size_t t, std::size_t cap) {
  if (t < 2 || t > k) throw std::invalid_argument("(k,t)-oddtown needs 2 <= t <= k");
  if (family.size() == 0) throw std::invalid_argument("(k,t)-oddtown needs a nonempty family");
  VerifyReport report(cap);
  const std::size_t m = family.size();
  const std::size_t max_d = std::min(k, m);
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, const SubsetBits&)> rec = [&](std::size_t start,
                                                                const SubsetBits& meet) {
    for (std::size_t i = start; i < m && !report.full(); ++i) {
      SubsetBits next = chosen.empty() ? family.sets[i] : (meet & family.sets[i]);
      chosen.push_back(i + 1);
      const std::size_t d = chosen.size();
      const bool want_odd = d < t;
      if (next.parity() != want_odd) report.add(chosen, next.size(), parity_name(want_odd));
      if (d < max_d) rec(i + 1, next);
      chosen.pop_back();
    }
  };
  rec(0, SubsetBits(family.ground_size));
  return report;
}

VerifyReport verify_bollobas_tuple(const TupleSystem& tuple, ParityConvention convention,
                                   std::size_t cap) {
  VerifyReport report(cap);
  const std::size_t k = tuple.k();
  const std::size_t m = tuple.m();
  if (m == 0) return report;
  std::vector<std::size_t> idx(k, 0);
  std::vector<std::size_t> multiplicity(m, 0);
  std::vector<SubsetBits> meets(k);
  std::size_t distinct = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    for (std::size_t i = 0; i < m && !report.full(); ++i) {
      idx[depth] = i + 1;
      const auto& s = tuple.set(depth + 1, i + 1);
      meets[depth] = depth == 0 ? s : (meets[depth - 1] & s);
      if (multiplicity[i]++ == 0) ++distinct;
      if (depth + 1 == k) {
        const bool few = distinct < tuple.t();
        const bool want_odd = convention == ParityConvention::standard ? !few : few;
        if (meets[depth].parity() != want_odd) report.add(idx, meets[depth].size(), parity_name(want_odd));
      } else {
        rec(depth + 1);
      }
      if (--multiplicity[i] == 0) --distinct;
    }
  };
  rec(0);
  return report;
}

TupleSystem add_auxiliary_element(const TupleSystem& tuple) {
  const std::size_t n = tuple.ground_size() + 1;
  auto families = tuple.families();
  for (auto& family : families) {
    for (auto& s : family) {
      s = s.with_ground(n);
      s.insert(n);
    }
  }
  return TupleSystem(tuple.k(), tuple.t(), n, std::move(families));
}

TupleSystem strip_auxiliary_element(const TupleSystem& tuple) {
  const std::size_t n = tuple.ground_size();
  if (n == 0) throw std::invalid_argument("no auxiliary element to strip from an empty ground set");
  auto families = tuple.families();
  for (auto& family : families) {
    for (auto& s : family) {
      if (!s.contains(n)) throw std::invalid_argument("element " + std::to_string(n) + " missing from a set");
      s = s.with_ground(n - 1);
    }
  }
  return TupleSystem(tuple.k(), tuple.t(), n - 1, std::move(families));
}

TupleSystem diagonal_tuple(const SetFamily& family, std::size_t k, std::size_t t) {
  return TupleSystem(k, t, family.ground_size, std::vector<std::vector<SubsetBits>>(k, family.sets));
}

IndependenceCertificate oddtown_certificate(const SetFamily& family) {
  if (!verify_oddtown(family, 1).valid) {
    throw std::invalid_argument("oddtown certificate requested for a family violating oddtown rules");
  }
  std::vector<BitVector> vectors;
  vectors.reserve(family.size());
  for (const auto& s : family.sets) vectors.push_back(s.bits());
  IndependenceCertificate cert;
  if (auto dep = find_dependency(vectors)) {
    cert.independent = false;
    for (auto i : *dep) cert.dependency.push_back(i + 1);
  }
  return cert;
}

SetFamily reduce_33_oddtown(const SetFamily& family, std::size_t anchor) {
  if (family.size() < 2) throw std::invalid_argument("reduction needs at least two sets");
  if (anchor < 1 || anchor > family.size()) throw std::invalid_argument("anchor index out of range");
  SetFamily out;
  out.ground_size = family.ground_size;
  const auto& base = family.sets[anchor - 1];
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i + 1 == anchor) continue;
    out.sets.push_back(base & family.sets[i]);
  }
  return out;
}

}  // namespace oddtown
