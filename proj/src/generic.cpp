#include "transverse/generic.hpp"

#include <algorithm>
#include <random>

#include "transverse/errors.hpp"
#include "transverse/matrix.hpp"

namespace transverse {

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  return mix_seed(mix_seed(mix_seed(base) ^ a) ^ (b * 0xd1b54a32d192ed03ULL));
}

GenericPool GenericPool::for_trial(std::uint64_t base_seed, std::uint64_t trial) {
  return GenericPool(derive_seed(base_seed, trial, 0x5eed));
}

namespace {

Int from_u64(std::uint64_t v) {
  Int out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return out;
}

}  // namespace

Rat GenericPool::surrogate(std::uint64_t stream, std::uint64_t counter) const {
  std::mt19937_64 gen(derive_seed(seed_, stream, counter));
  const std::uint64_t num = gen() >> 1;                          // [0, 2^63)
  const std::uint64_t den = (gen() >> 2) | (1ULL << 62) | 1ULL;  // odd, > 2^62
  Rat r(from_u64(num), from_u64(den));
  r.canonicalize();
  return r;
}

const Rat& GenericPool::offset(std::uint64_t stream) {
  auto it = streams_.find(stream);
  if (it != streams_.end()) return it->second;
  Rat r = surrogate(stream, 0);
  // Collisions are astronomically unlikely; salt deterministically if one occurs.
  for (std::uint64_t salt = 1; used_.count(r) != 0; ++salt) r = surrogate(stream, salt << 32);
  used_.insert(r);
  return streams_.emplace(stream, std::move(r)).first->second;
}

std::uint64_t GenericPool::draws(std::uint64_t stream) const {
  auto it = counters_.find(stream);
  return it == counters_.end() ? 0 : it->second;
}

Rat GenericPool::draw_near(const Rat& target, const Rat& eps, std::uint64_t stream) {
  if (sgn(eps) <= 0) throw PreconditionError("draw_near requires eps > 0");
  // Smallest k with 2^-k <= eps/4.
  const Rat quarter = eps / 4;
  long k = 0;
  Rat step = 1;
  while (step > quarter) {
    step /= 2;
    ++k;
  }
  while (step * 2 <= quarter) {
    step *= 2;
    --k;
  }
  // Nearest multiple of step to target.
  const Rat scaled_target = target / step + Rat(1, 2);
  const Rat q = Rat(floor_of(scaled_target)) * step;

  std::uint64_t& counter = counters_[stream];
  const Rat r = counter == 0 ? offset(stream) : surrogate(stream, counter);
  ++counter;
  // r < 2, so r * step/4 < step/2 <= eps/8.
  return q + r * (step / 4);
}

GenericityCertificate certify(std::vector<Condition> transcript) {
  GenericityCertificate cert;
  cert.conditions_ = std::move(transcript);
  for (std::size_t i = 0; i < cert.conditions_.size(); ++i) {
    if (sgn(cert.conditions_[i].value) == 0) {
      cert.failed_ = i;
      break;
    }
  }
  return cert;
}

nlohmann::json certificate_to_json(const GenericityCertificate& cert) {
  nlohmann::json conditions = nlohmann::json::array();
  for (const auto& c : cert.conditions()) {
    conditions.push_back({{"description", c.description}, {"value", to_text(c.value)}, {"nonzero", sgn(c.value) != 0}});
  }
  nlohmann::json out = {{"status", cert.ok() ? "ok" : "failed"}, {"conditions", std::move(conditions)}};
  if (cert.failed_index()) out["failed_index"] = *cert.failed_index();
  return out;
}

nlohmann::json certificate_summary(const GenericityCertificate& cert) {
  nlohmann::json out = {{"status", cert.ok() ? "ok" : "failed"}, {"conditions", cert.conditions().size()}};
  if (cert.failed_index()) {
    out["failed_index"] = *cert.failed_index();
    out["failed_condition"] = cert.conditions()[*cert.failed_index()].description;
  }
  return out;
}

void append_distinctness(std::vector<Condition>& out, const std::vector<Rat>& values, const std::string& label) {
  std::vector<Rat> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    out.push_back({label + " gap " + std::to_string(i), Rat(sorted[i] - sorted[i - 1])});
  }
}

Rat affine_independence_value(const std::vector<Vec>& points) {
  if (points.size() <= 1) return Rat(1);
  std::vector<Vec> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  const std::size_t k = diffs.size();
  Mat gram(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      gram(i, j) = dot(diffs[i], diffs[j]);
      gram(j, i) = gram(i, j);
    }
  return determinant(gram);
}

}  // namespace transverse
