#include "klc/dihedral.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace klc {

namespace {

constexpr int kLengthCriterionCheckLimit = 64;

int mod(int a, int n) { return ((a % n) + n) % n; }

void check_element(const GroupParams& params, const DihedralElement& el) {
  if (el.kind() == DihedralElement::Kind::Word && el.length() >= params.n()) {
    throw std::invalid_argument("dihedral: word of length " + std::to_string(el.length()) +
                                " is not reduced for n = " + std::to_string(params.n()));
  }
  if (el.kind() == DihedralElement::Kind::Longest && el.length() != params.n()) {
    throw std::invalid_argument("dihedral: longest element belongs to a different n");
  }
}

RotationReflection letter_model(Letter g) {
  return g == Letter::S ? RotationReflection{0, true} : RotationReflection{1, true};
}

RotationReflection model_product(int n, RotationReflection x, RotationReflection y) {
  int rotation = (y.reflection ? -x.rotation : x.rotation) + y.rotation;
  return {mod(rotation, n), x.reflection != y.reflection};
}

}  // namespace

char to_char(Letter g) { return g == Letter::S ? 's' : 't'; }

GroupParams::GroupParams(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("dihedral: n must be at least 2");
}

DihedralElement DihedralElement::word(Letter start, int length) {
  if (length < 1) throw std::invalid_argument("dihedral: word length must be positive");
  return DihedralElement(Kind::Word, start, length);
}

std::string DihedralElement::reduced_word() const {
  std::string out;
  Letter g = kind_ == Kind::Word ? start_ : Letter::S;
  for (int i = 0; i < length_; ++i) {
    out.push_back(to_char(g));
    g = other(g);
  }
  return out;
}

std::string DihedralElement::label() const {
  switch (kind_) {
    case Kind::Identity:
      return "e";
    case Kind::Longest:
      return "w0";
    case Kind::Word:
      break;
  }
  return reduced_word();
}

std::strong_ordering operator<=>(const DihedralElement& x, const DihedralElement& y) {
  if (auto c = x.length_ <=> y.length_; c != 0) return c;
  if (x.kind_ != DihedralElement::Kind::Word) return std::strong_ordering::equal;
  return static_cast<int>(x.start_) <=> static_cast<int>(y.start_);
}

RotationReflection to_rotation_reflection(const GroupParams& params, const DihedralElement& el) {
  check_element(params, el);
  const int n = params.n();
  if (el.kind() == DihedralElement::Kind::Identity) return {0, false};
  Letter start = el.kind() == DihedralElement::Kind::Word ? el.start() : Letter::S;
  const int half = el.length() / 2;
  const bool odd = el.length() % 2 == 1;
  if (start == Letter::S) {
    // (st)^j = rho^j and (st)^j s = sigma rho^-j
    return odd ? RotationReflection{mod(-half, n), true} : RotationReflection{mod(half, n), false};
  }
  // (ts)^j = rho^-j and (ts)^j t = sigma rho^(j+1)
  return odd ? RotationReflection{mod(half + 1, n), true}
             : RotationReflection{mod(-half, n), false};
}

DihedralElement from_rotation_reflection(const GroupParams& params, RotationReflection rr) {
  const int n = params.n();
  const int k = mod(rr.rotation, n);
  int s_length;
  int t_length;
  if (!rr.reflection) {
    if (k == 0) return DihedralElement::identity();
    s_length = 2 * k;
    t_length = 2 * (n - k);
  } else {
    s_length = 2 * mod(-k, n) + 1;
    t_length = 2 * mod(k - 1, n) + 1;
  }
  if (s_length == t_length) return DihedralElement::longest(n);
  return s_length < t_length ? DihedralElement::word(Letter::S, s_length)
                             : DihedralElement::word(Letter::T, t_length);
}

DihedralElement make_element(const GroupParams& params, std::string_view word) {
  RotationReflection acc;
  for (char c : word) {
    if (c != 's' && c != 't') {
      throw std::invalid_argument(std::string("dihedral: invalid letter '") + c + "'");
    }
    acc = model_product(params.n(), acc, letter_model(c == 's' ? Letter::S : Letter::T));
  }
  return from_rotation_reflection(params, acc);
}

DihedralElement parse_element(const GroupParams& params, std::string_view label) {
  if (label == "e") return DihedralElement::identity();
  if (label == "w0") return DihedralElement::longest(params.n());
  if (label.empty()) throw std::invalid_argument("dihedral: empty element label");
  return make_element(params, label);
}

DihedralElement multiply(const GroupParams& params, const DihedralElement& u,
                         const DihedralElement& v) {
  return from_rotation_reflection(
      params, model_product(params.n(), to_rotation_reflection(params, u),
                            to_rotation_reflection(params, v)));
}

DihedralElement multiply(const GroupParams& params, const DihedralElement& u, Letter g) {
  return from_rotation_reflection(
      params, model_product(params.n(), to_rotation_reflection(params, u), letter_model(g)));
}

DihedralElement multiply(const GroupParams& params, Letter g, const DihedralElement& u) {
  return from_rotation_reflection(
      params, model_product(params.n(), letter_model(g), to_rotation_reflection(params, u)));
}

DihedralElement inverse(const GroupParams& params, const DihedralElement& el) {
  RotationReflection rr = to_rotation_reflection(params, el);
  if (!rr.reflection) rr.rotation = mod(-rr.rotation, params.n());
  return from_rotation_reflection(params, rr);
}

DescentSet right_descents(const GroupParams& params, const DihedralElement& el) {
  return {multiply(params, el, Letter::S).length() < el.length(),
          multiply(params, el, Letter::T).length() < el.length()};
}

DescentSet left_descents(const GroupParams& params, const DihedralElement& el) {
  return {multiply(params, Letter::S, el).length() < el.length(),
          multiply(params, Letter::T, el).length() < el.length()};
}

std::vector<DihedralElement> enumerate_elements(const GroupParams& params) {
  std::vector<DihedralElement> out;
  out.reserve(params.order());
  out.push_back(DihedralElement::identity());
  for (int len = 1; len < params.n(); ++len) {
    out.push_back(DihedralElement::word(Letter::S, len));
    out.push_back(DihedralElement::word(Letter::T, len));
  }
  out.push_back(DihedralElement::longest(params.n()));
  return out;
}

int element_index(const GroupParams& params, const DihedralElement& el) {
  check_element(params, el);
  switch (el.kind()) {
    case DihedralElement::Kind::Identity:
      return 0;
    case DihedralElement::Kind::Longest:
      return params.order() - 1;
    case DihedralElement::Kind::Word:
      break;
  }
  return el.start() == Letter::S ? 2 * el.length() - 1 : 2 * el.length();
}

std::vector<bool> subword_products(const GroupParams& params, std::string_view word) {
  const auto elements = enumerate_elements(params);
  std::vector<bool> reached(elements.size(), false);
  reached[0] = true;
  for (char c : word) {
    if (c != 's' && c != 't') {
      throw std::invalid_argument(std::string("dihedral: invalid letter '") + c + "'");
    }
    const Letter g = c == 's' ? Letter::S : Letter::T;
    std::vector<bool> next = reached;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (reached[i]) next[element_index(params, multiply(params, elements[i], g))] = true;
    }
    reached = std::move(next);
  }
  return reached;
}

bool bruhat_length_criterion_verified(const GroupParams& params) {
  static std::mutex mutex;
  static std::map<int, bool> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(params.n()); it != cache.end()) return it->second;
  }
  bool ok = params.n() <= kLengthCriterionCheckLimit;
  if (ok) {
    const auto elements = enumerate_elements(params);
    for (const auto& v : elements) {
      const auto interval = subword_products(params, v.reduced_word());
      for (std::size_t i = 0; i < elements.size() && ok; ++i) {
        const auto& u = elements[i];
        ok = interval[i] == (u == v || u.length() < v.length());
      }
      if (!ok) break;
    }
  }
  std::lock_guard lock(mutex);
  cache.emplace(params.n(), ok);
  return ok;
}

bool bruhat_leq(const GroupParams& params, const DihedralElement& u, const DihedralElement& v) {
  check_element(params, u);
  check_element(params, v);
  if (bruhat_length_criterion_verified(params)) {
    return u == v || u.length() < v.length();
  }
  return subword_products(params, v.reduced_word())[element_index(params, u)];
}

}  // namespace klc
