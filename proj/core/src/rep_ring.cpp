#include "jblocks/rep_ring.hpp"

#include <mutex>
#include <tuple>

namespace jblocks {

RingElement RingElement::block(unsigned n, std::int64_t multiplicity) {
  RingElement x;
  x.add(n, multiplicity);
  return x;
}

RingElement RingElement::from_partition(const Partition& lambda) {
  RingElement x;
  for (unsigned part : lambda) x.add(part, 1);
  return x;
}

std::int64_t RingElement::coefficient(unsigned n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t RingElement::dim() const {
  std::int64_t d = 0;
  for (auto [n, a] : terms_) d += static_cast<std::int64_t>(n) * a;
  return d;
}

bool RingElement::is_effective() const {
  for (auto [n, a] : terms_)
    if (a < 0) return false;
  return true;
}

Partition RingElement::to_partition() const {
  if (!is_effective()) throw MathError(ErrorKind::InvalidArgument, to_string() + " is not the class of an object");
  std::vector<unsigned> parts;
  for (auto [n, a] : terms_) parts.insert(parts.end(), static_cast<std::size_t>(a), n);
  return Partition(std::move(parts));
}

RingElement& RingElement::add(unsigned n, std::int64_t a) {
  if (n == 0) throw MathError(ErrorKind::InvalidArgument, "J_0 is not a basis class");
  if (a == 0) return *this;
  auto& slot = terms_[n];
  slot += a;
  if (slot == 0) terms_.erase(n);
  return *this;
}

RingElement& RingElement::operator+=(const RingElement& o) {
  for (auto [n, a] : o.terms_) add(n, a);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  for (auto [n, a] : o.terms_) add(n, -a);
  return *this;
}

RingElement operator*(std::int64_t k, const RingElement& x) {
  RingElement out;
  for (auto [n, a] : x.terms_) out.add(n, k * a);
  return out;
}

std::string RingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [n, a] = *it;
    std::int64_t mag = a < 0 ? -a : a;
    if (s.empty())
      s += a < 0 ? "-" : "";
    else
      s += a < 0 ? " - " : " + ";
    if (mag != 1) s += std::to_string(mag) + "·";
    s += "J" + std::to_string(n);
  }
  return s;
}

Partition tensor_partition(const Partition& lambda, const Partition& mu, const GeneralizedLaw& law, FieldSpec field) {
  return visit_field(field, [&](auto k) {
    return jordan_partition(
        tensor_operator(nilpotent_from_partition(k, lambda), nilpotent_from_partition(k, mu), law));
  });
}

namespace {

using MemoKey = std::tuple<unsigned, unsigned, std::string, unsigned>;

struct StructureMemo {
  std::mutex mutex;
  std::map<MemoKey, RingElement> table;
};

StructureMemo& memo() {
  static StructureMemo instance;
  return instance;
}

}  // namespace

RingElement structure_constants(unsigned n, unsigned m, const FormalGroupLaw& law, FieldSpec field) {
  if (n == 0 || m == 0) throw MathError(ErrorKind::InvalidArgument, "block sizes must be positive");
  law.require_valid(field, std::max(1u, n + m - 2));
  MemoKey key{n, m, law.law().fingerprint(), field.characteristic()};
  {
    std::lock_guard lock(memo().mutex);
    auto it = memo().table.find(key);
    if (it != memo().table.end()) return it->second;
  }
  RingElement result = RingElement::from_partition(tensor_partition(Partition{n}, Partition{m}, law.law(), field));
  std::lock_guard lock(memo().mutex);
  memo().table.insert_or_assign(key, result);
  return result;
}

RingElement ring_multiply(const RingElement& x, const RingElement& y, const FormalGroupLaw& law, FieldSpec field) {
  RingElement out;
  for (auto [n, a] : x.terms())
    for (auto [m, b] : y.terms()) out += (a * b) * structure_constants(n, m, law, field);
  return out;
}

RingElement cg_tensor(unsigned n, unsigned m) {
  if (n == 0 || m == 0) throw MathError(ErrorKind::InvalidArgument, "block sizes must be positive");
  RingElement out;
  for (unsigned i = 0; i < std::min(n, m); ++i) out.add(n + m - 1 - 2 * i, 1);
  return out;
}

namespace detail {

std::vector<std::vector<unsigned>> sorted_words(unsigned d, unsigned m, bool strict) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> word;
  auto extend = [&](auto&& self, unsigned start) -> void {
    if (word.size() == m) {
      out.push_back(word);
      return;
    }
    for (unsigned letter = start; letter < d; ++letter) {
      word.push_back(letter);
      self(self, strict ? letter + 1 : letter);
      word.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

}  // namespace detail

Partition wedge_partition(const Partition& lambda, unsigned m, const GeneralizedLaw& law, FieldSpec field) {
  return visit_field(field,
                     [&](auto k) { return jordan_partition(wedge_operator(nilpotent_from_partition(k, lambda), m, law)); });
}

Partition sym_partition(const Partition& lambda, unsigned m, const GeneralizedLaw& law, FieldSpec field) {
  return visit_field(field,
                     [&](auto k) { return jordan_partition(sym_operator(nilpotent_from_partition(k, lambda), m, law)); });
}

}  // namespace jblocks
