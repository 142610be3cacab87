#include "antiunify/atomic.hpp"

#include <set>
#include <string>
#include <utility>

namespace antiunify {

namespace {

/// Wraps fresh() and records which bindings the result under construction
/// uses.
class Recorder {
 public:
  explicit Recorder(Variabilizer& v) : v_(v) {}

  Term phi(const Term& a, const Term& b) {
    Term out = v_.fresh(a, b);
    if (out.is_variable() && seen_.insert(out.symbol()).second) {
      used_.push_back(*v_.binding_of(out.symbol()));
    }
    return out;
  }

  Variabilizer& variabilizer() { return v_; }
  std::vector<Variabilizer::Binding> take() { return std::move(used_); }

 private:
  Variabilizer& v_;
  std::set<std::string> seen_;
  std::vector<Variabilizer::Binding> used_;
};

bool same_head(const Term& a, const Term& b) {
  return a.kind() == b.kind() && a.symbol() == b.symbol() && a.arity() == b.arity();
}

std::optional<Term> preceq_term(const Term& a, const Term& b, Recorder& rec) {
  if (a.is_variable() && b.is_variable()) return rec.phi(a, b);
  if (a.is_variable() || b.is_variable() || !same_head(a, b)) return std::nullopt;
  if (a.is_constant()) return a;
  std::vector<Term> args;
  args.reserve(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) {
    auto sub = preceq_term(a.args()[i], b.args()[i], rec);
    if (!sub) return std::nullopt;
    args.push_back(std::move(*sub));
  }
  return Term::compound(a.symbol(), std::move(args));
}

Term deep_term(const Term& a, const Term& b, Recorder& rec) {
  if (a.is_variable() || b.is_variable() || !same_head(a, b)) return rec.phi(a, b);
  if (a.is_constant()) return a;
  std::vector<Term> args;
  args.reserve(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) {
    args.push_back(deep_term(a.args()[i], b.args()[i], rec));
  }
  return Term::compound(a.symbol(), std::move(args));
}

}  // namespace

AtomicResult au_subseteq(const Atom& a, const Atom& b, Variabilizer& v) {
  if (!a.same_symbol(b)) return {};
  Recorder rec(v);
  Atom out;
  out.predicate = a.predicate;
  out.args.reserve(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) out.args.push_back(rec.phi(a.args[i], b.args[i]));
  return {std::move(out), rec.take()};
}

AtomicResult au_preceq(const Atom& a, const Atom& b, Variabilizer& v) {
  if (!a.same_symbol(b)) return {};
  const std::size_t mark = v.mark();
  Recorder rec(v);
  Atom out;
  out.predicate = a.predicate;
  out.args.reserve(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) {
    auto sub = preceq_term(a.args[i], b.args[i], rec);
    if (!sub) {
      v.rollback(mark);
      return {};
    }
    out.args.push_back(std::move(*sub));
  }
  return {std::move(out), rec.take()};
}

std::optional<Term> au_preceq(const Term& a, const Term& b, Variabilizer& v) {
  const std::size_t mark = v.mark();
  Recorder rec(v);
  auto out = preceq_term(a, b, rec);
  if (!out) v.rollback(mark);
  return out;
}

AtomicResult dau_subseteq(const Atom& a, const Atom& b, Variabilizer& v) {
  if (!a.same_symbol(b)) return {};
  Recorder rec(v);
  Atom out;
  out.predicate = a.predicate;
  out.args.reserve(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) {
    out.args.push_back(deep_term(a.args[i], b.args[i], rec));
  }
  return {std::move(out), rec.take()};
}

Term dau_subseteq(const Term& a, const Term& b, Variabilizer& v) {
  Recorder rec(v);
  return deep_term(a, b, rec);
}

long long weight(const Atom& a, const Atom& b) {
  Variabilizer scratch;
  const AtomicResult r = dau_subseteq(a, b, scratch);
  return r ? static_cast<long long>(tau_value(*r.value)) : -1;
}

}  // namespace antiunify
