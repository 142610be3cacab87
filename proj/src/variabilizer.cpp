#include "antiunify/variabilizer.hpp"

#include <stdexcept>

namespace antiunify {

Variabilizer::Variabilizer(std::set<std::string> reserved)
    : reserved_(std::move(reserved)) {}

void Variabilizer::reserve(const std::set<std::string>& names) {
  for (const std::string& n : names) {
    if (by_name_.contains(n)) {
      throw std::logic_error("cannot reserve already issued variable " + n);
    }
    reserved_.insert(n);
  }
}

std::string Variabilizer::next_name() {
  for (;;) {
    std::string name = "V" + std::to_string(++counter_);
    if (!reserved_.contains(name)) return name;
  }
}

Term Variabilizer::fresh(const Term& left, const Term& right) {
  if (left.is_constant() && left == right) return left;
  if (auto it = memo_.find({left, right}); it != memo_.end()) {
    return log_[it->second].variable;
  }
  counter_before_.push_back(counter_);
  Term v = Term::variable(next_name());
  memo_.emplace(std::pair{left, right}, log_.size());
  by_name_.emplace(v.symbol(), log_.size());
  log_.push_back(Binding{left, right, v});
  return v;
}

std::optional<Term> Variabilizer::lookup(const Term& left, const Term& right) const {
  if (left.is_constant() && left == right) return left;
  if (auto it = memo_.find({left, right}); it != memo_.end()) {
    return log_[it->second].variable;
  }
  return std::nullopt;
}

const Variabilizer::Binding* Variabilizer::binding_of(const std::string& variable) const {
  auto it = by_name_.find(variable);
  return it == by_name_.end() ? nullptr : &log_[it->second];
}

void Variabilizer::rollback(std::size_t mark) {
  if (mark >= log_.size()) return;
  counter_ = counter_before_[mark];
  for (std::size_t i = mark; i < log_.size(); ++i) {
    memo_.erase({log_[i].left, log_[i].right});
    by_name_.erase(log_[i].variable.symbol());
  }
  log_.erase(log_.begin() + static_cast<std::ptrdiff_t>(mark), log_.end());
  counter_before_.resize(mark);
}

Substitution Variabilizer::left_projection(const std::set<std::string>& over) const {
  Substitution out;
  for (const std::string& v : over) {
    if (const Binding* b = binding_of(v)) out.bind(v, b->left);
  }
  return out;
}

Substitution Variabilizer::right_projection(const std::set<std::string>& over) const {
  Substitution out;
  for (const std::string& v : over) {
    if (const Binding* b = binding_of(v)) out.bind(v, b->right);
  }
  return out;
}

}  // namespace antiunify
