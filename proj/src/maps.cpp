#include "qlab/maps.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace qlab {

namespace {

// Mutable frequency table for building images.
class FreqMap {
 public:
  explicit FreqMap(const Partition& p) {
    for (auto& [part, freq] : p.pairs()) m_[part] = freq;
  }
  FreqMap() = default;
  long long get(int part) const {
    auto it = m_.find(part);
    return it == m_.end() ? 0 : it->second;
  }
  void set(int part, long long f) { m_[part] = f; }
  void bump(int part, long long d) { m_[part] += d; }
  Partition take() const {
    std::vector<std::pair<int, long long>> pairs;
    for (auto& [part, freq] : m_) {
      if (freq < 0)
        throw std::logic_error("map image has negative frequency");
      if (freq > 0) pairs.emplace_back(part, freq);
    }
    return Partition::from_pairs(std::move(pairs));
  }

 private:
  std::map<int, long long> m_;
};

Partition apply_gamma_star(const Partition& p) {
  long long f2 = p.freq(2), f3 = p.freq(3);
  FreqMap img;
  if (f2 > 0) {  // case i
    img.set(1, 2 * f2);
    img.set(3, f3);
  } else if (f3 > 0) {  // case ii
    img.set(1, 3);
    img.set(3, f3 - 1);
  } else {
    throw std::logic_error("gamma*: unmatched input " + p.to_string());
  }
  return img.take();
}

Partition apply_gamma(int L, const Partition& p) {
  int s = p.smallest();
  FreqMap img(p);
  if (2 < s && s < L + 1) {  // case i
    img.bump(s, -1);
    img.bump(s - 1, +1);
    long long t = img.get(L);  // f_L, minus one when s == L
    img.set(L, 0);
    img.set(1, t * L + 1);
  } else if (s == L + 1) {  // case ii
    img = FreqMap();
    img.set(1, L + 1);
    img.set(L + 1, p.freq(L + 1) - 1);
  } else if (s == 2) {  // case iii
    img.bump(2, -1);
    long long t = img.get(L);
    img.set(L, 0);
    img.set(1, t * L + 2);
  } else {
    throw std::logic_error("gamma: unmatched input " + p.to_string());
  }
  return img.take();
}

Partition apply_gamma1_star(const Partition& p) {
  long long f3 = p.freq(3), f4 = p.freq(4), f5 = p.freq(5);
  FreqMap img;
  img.set(5, f5);
  if (f4 > 0) {  // case i
    img.set(2, 2 * f4);
    img.set(3, f3);
  } else if (f3 == 0) {  // case ii (f5 > 0 since the input is nonempty)
    img.set(2, 1);
    img.set(3, 1);
    img.set(5, f5 - 1);
  } else if (f3 > 1) {  // case iii
    img.set(2, 3);
    img.set(3, f3 - 2);
  } else {  // case iv: f3 == 1; norm > 3 forces f5 > 0
    img.set(2, 1);
    img.set(3, 2);
    img.set(5, f5 - 1);
  }
  return img.take();
}

Partition apply_gamma1(int L, const Partition& p) {
  int m = (L + 1) / 2;
  FreqMap img(p);
  if (p.freq(2 * m) > 0) {  // case i: all (L+1)-parts into twos
    img.bump(2, p.freq(2 * m) * m);
    img.set(2 * m, 0);
    return img.take();
  }
  // largest i in {2..m-1} with f_{2i} > 0 (f_{2m} = 0 here)
  int ii = 0;
  for (int i = m - 1; i >= 2; --i)
    if (p.freq(2 * i) > 0) {
      ii = i;
      break;
    }
  if (ii != 0) {  // case ii
    img.bump(2 * ii, -1);
    img.bump(2, ii);
    return img.take();
  }
  // All even parts vanish; the partition is odd-parted.
  int s = p.smallest();
  if (s % 2 == 1 && s > 3) {  // case iii
    img.bump(s, -1);
    img.bump(s - 2, +1);
    img.bump(2, +1);
    return img.take();
  }
  long long f3 = p.freq(3);
  if (f3 >= 2) {  // case iv
    img.bump(3, -2);
    img.bump(4, +1);
    img.bump(2, +1);
    return img.take();
  }
  if (f3 == 1) {  // case v: smallest j > 1 with f_{2j+1} > 0 (norm > 3)
    for (int j = 2; j <= m; ++j) {
      if (p.freq(2 * j + 1) > 0) {
        img.bump(3, -1);
        img.bump(2 * j + 1, -1);
        img.bump(j + 1, +2);
        img.bump(2, +1);
        return img.take();
      }
    }
  }
  throw std::logic_error("Gamma1: unmatched input " + p.to_string());
}

Partition apply_gamma2_star(const Partition& p) {
  long long f3 = p.freq(3), f4 = p.freq(4), f5 = p.freq(5), f6 = p.freq(6);
  FreqMap img(p);
  if (f5 > 0 && f5 % 2 == 0) {  // case i
    img.set(5, 0);
    img.bump(2, (f5 / 2) * 5);
  } else if (f5 % 2 == 1 && f3 > 0) {  // case ii
    img.set(5, 0);
    img.bump(3, -1);
    img.bump(2, ((f5 - 1) / 2) * 5 + 4);
  } else if (f5 % 2 == 1) {  // case iii (f3 == 0)
    img.set(5, 0);
    img.set(3, 1);
    img.bump(2, ((f5 - 1) / 2) * 5 + 1);
  } else if (f6 > 0) {  // case iv.1 (f5 == 0); f3 carried
    img.bump(6, -1);
    img.bump(2, 3);
  } else if (f4 > 0) {  // case iv.2 (f5 == f6 == 0); f3 carried
    img.bump(4, -1);
    img.bump(2, 2);
  } else {  // case v: only threes remain; |pi| != 3 forces f3 >= 2
    if (f3 < 2)
      throw std::logic_error("Gamma2*: unmatched input " + p.to_string());
    img.set(3, f3 - 2);
    img.bump(4, +1);
    img.bump(2, +1);
  }
  return img.take();
}

Partition apply_gamma2(int m, const Partition& p) {
  FreqMap img(p);
  long long fo = p.freq(2 * m + 1);
  if (fo > 0 && fo % 2 == 0) {  // case i
    img.set(2 * m + 1, 0);
    img.bump(2, (fo / 2) * (2 * m + 1));
    return img.take();
  }
  if (fo % 2 == 1) {
    // largest k in {2..m} with f_{2k-1} > 0
    int kk = 0;
    for (int k = m; k >= 2; --k)
      if (p.freq(2 * k - 1) > 0) {
        kk = k;
        break;
      }
    img.set(2 * m + 1, 0);
    if (kk != 0) {  // case ii
      img.bump(2 * kk - 1, -1);
      img.bump(2, ((fo - 1) / 2) * (2 * m + 1) + m + kk);
    } else {  // case iii
      img.bump(2 * m - 1, +1);
      img.bump(2, ((fo - 1) / 2) * (2 * m + 1) + 1);
    }
    return img.take();
  }
  // f_{2m+1} == 0 from here on.
  int kk = 0;  // largest k in {2..m+1} with f_{2k} > 0
  for (int k = m + 1; k >= 2; --k)
    if (p.freq(2 * k) > 0) {
      kk = k;
      break;
    }
  if (kk != 0) {  // case iv
    img.bump(2 * kk, -1);
    img.bump(2, kk);
    return img.take();
  }
  long long f3 = p.freq(3);
  if (f3 == 1) {  // case v: smallest i > 1 with f_{2i+1} > 0 (norm > 3)
    for (int i = 2; i < m; ++i) {
      if (p.freq(2 * i + 1) > 0) {
        img.bump(3, -1);
        img.bump(2 * i + 1, -1);
        img.bump(i + 1, +2);
        img.bump(2, +1);
        return img.take();
      }
    }
  } else if (f3 > 1) {  // case vi
    img.bump(3, -2);
    img.bump(4, +1);
    img.bump(2, +1);
    return img.take();
  } else {  // case vii: f3 == 0; smallest 1 < i < m with f_{2i+1} > 0
    for (int i = 2; i < m; ++i) {
      if (p.freq(2 * i + 1) > 0) {
        img.bump(2 * i + 1, -1);
        img.bump(2 * i - 1, +1);
        img.bump(2, +1);
        return img.take();
      }
    }
  }
  throw std::logic_error("Gamma2: unmatched input " + p.to_string());
}

}  // namespace

InjectionId InjectionId::make(MapKind kind, int L) {
  auto bad = [&](const std::string& what) {
    throw std::invalid_argument("InjectionId: " + what);
  };
  switch (kind) {
    case MapKind::GammaStar:
      if (L != 2) bad("gammastar requires L = 2");
      break;
    case MapKind::Gamma:
      if (L < 3) bad("gamma requires L >= 3");
      break;
    case MapKind::Gamma1Star:
      if (L != 3) bad("gamma1star requires L = 3");
      break;
    case MapKind::Gamma1:
      if (L < 5 || L % 2 == 0) bad("gamma1 requires odd L >= 5");
      break;
    case MapKind::Gamma2Star:
      if (L != 4) bad("gamma2star requires L = 4");
      break;
    case MapKind::Gamma2:
      if (L < 6 || L % 2 == 1) bad("gamma2 requires even L >= 6");
      break;
  }
  return InjectionId{kind, L};
}

InjectionId InjectionId::parse(const std::string& name, int L) {
  if (name == "gammastar") return make(MapKind::GammaStar, L);
  if (name == "gamma") return make(MapKind::Gamma, L);
  if (name == "gamma1star") return make(MapKind::Gamma1Star, L);
  if (name == "gamma1") return make(MapKind::Gamma1, L);
  if (name == "gamma2star") return make(MapKind::Gamma2Star, L);
  if (name == "gamma2") return make(MapKind::Gamma2, L);
  throw std::invalid_argument("unknown map name: " + name);
}

std::string InjectionId::name() const {
  switch (kind) {
    case MapKind::GammaStar: return "gammastar";
    case MapKind::Gamma: return "gamma";
    case MapKind::Gamma1Star: return "gamma1star";
    case MapKind::Gamma1: return "gamma1";
    case MapKind::Gamma2Star: return "gamma2star";
    case MapKind::Gamma2: return "gamma2";
  }
  return "?";
}

ConstraintSet domain_set(const InjectionId& id) {
  switch (id.kind) {
    case MapKind::GammaStar:
    case MapKind::Gamma:
      return ConstraintSet::set_A(id.L, 2);
    default:
      return ConstraintSet::set_B(id.L, 2);
  }
}

ConstraintSet codomain_set(const InjectionId& id) {
  switch (id.kind) {
    case MapKind::GammaStar:
    case MapKind::Gamma:
      return ConstraintSet::set_A(id.L, 1);
    default:
      return ConstraintSet::set_B(id.L, 1);
  }
}

bool input_excluded(const InjectionId& id, long long norm,
                    std::string* reason) {
  switch (id.kind) {
    case MapKind::GammaStar:
    case MapKind::Gamma:
      return false;
    case MapKind::Gamma2Star:
      if (norm == 3) {
        if (reason) *reason = "norm 3 excluded (|pi| != 3)";
        return true;
      }
      return false;
    default:
      if (norm == 3) {
        if (reason) *reason = "norm 3 excluded (partitions with norm > 3)";
        return true;
      }
      return false;
  }
}

Partition apply(const InjectionId& id, const Partition& p) {
  if (!domain_set(id).matches(p))
    throw MapDomainError(id.name() + ": input " + p.to_string() +
                         " outside the domain family");
  std::string reason;
  if (input_excluded(id, p.norm(), &reason))
    throw ExcludedInputError(p.norm(), reason);
  switch (id.kind) {
    case MapKind::GammaStar: return apply_gamma_star(p);
    case MapKind::Gamma: return apply_gamma(id.L, p);
    case MapKind::Gamma1Star: return apply_gamma1_star(p);
    case MapKind::Gamma1: return apply_gamma1(id.L, p);
    case MapKind::Gamma2Star: return apply_gamma2_star(p);
    case MapKind::Gamma2: return apply_gamma2(id.L / 2, p);
  }
  throw std::logic_error("unreachable");
}

MapReport verify_injection(const InjectionId& id, long long N_max) {
  if (N_max < 1) throw std::invalid_argument("verify_injection: N_max < 1");
  MapReport rep;
  rep.id = id;
  rep.checked_norm_max = N_max;
  rep.norm_preserved_ok = true;
  rep.codomain_ok = true;
  ConstraintSet dom = domain_set(id);
  ConstraintSet cod = codomain_set(id);
  for (long long N = 1; N <= N_max; ++N) {
    std::string reason;
    if (input_excluded(id, N, &reason)) {
      if (count_by_enumeration(N, dom) > 0)
        rep.excluded_inputs.emplace_back(N, reason);
      continue;
    }
    std::unordered_map<Partition, Partition, PartitionHash> image_to_pre;
    for_each_partition(N, dom, [&](const Partition& p) {
      ++rep.domain_partitions_checked;
      Partition img = apply(id, p);
      if (img.norm() != N) rep.norm_preserved_ok = false;
      if (!cod.matches(img)) rep.codomain_ok = false;
      auto [it, inserted] = image_to_pre.emplace(img, p);
      if (!inserted)
        rep.collisions.push_back(Collision{it->second, p, img, N});
    });
  }
  rep.injectivity_ok = rep.collisions.empty();
  return rep;
}

std::vector<Partition> image_complement(const InjectionId& id, long long N) {
  std::unordered_set<Partition, PartitionHash> images;
  if (!input_excluded(id, N, nullptr)) {
    for_each_partition(N, domain_set(id), [&](const Partition& p) {
      images.insert(apply(id, p));
    });
  }
  std::vector<Partition> out;
  for_each_partition(N, codomain_set(id), [&](const Partition& p) {
    if (!images.count(p)) out.push_back(p);
  });
  return out;  // canonical order inherited from the enumerator
}

PowerSeries complement_genfun(const InjectionId& id, std::size_t prec) {
  std::vector<Int> coeffs(prec);
  for (std::size_t N = 0; N < prec; ++N)
    coeffs[N] = static_cast<long long>(
        image_complement(id, static_cast<long long>(N)).size());
  return PowerSeries::from_coeffs(std::move(coeffs));
}

}  // namespace qlab
