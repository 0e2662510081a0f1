#include "sygus/eval.hpp"

#include "sygus/substitute.hpp"

namespace sygus {

namespace {

// Euclidean division: the remainder is always in [0, |n|).
std::pair<BigInt, BigInt> euclid_divmod(const BigInt& m, const BigInt& n) {
  if (n == 0) return {0, 0};  // totalized; never cross-checked against a backend
  BigInt q = m / n;  // truncates toward zero
  BigInt r = m % n;
  if (r < 0) {
    if (n > 0) {
      q -= 1;
      r += n;
    } else {
      q += 1;
      r -= n;
    }
  }
  return {q, r};
}

BigInt bv_modulus(unsigned width) { return BigInt(1) << width; }

BigInt to_signed(const BigInt& bits, unsigned width) {
  if (bit_test(bits, width - 1)) return bits - bv_modulus(width);
  return bits;
}

Value bv(unsigned width, BigInt bits) { return Value::of_bitvec(width, std::move(bits)); }

Value eval_bv_op(const std::string& op, const std::vector<Value>& args) {
  unsigned w = args[0].bv_width();
  const BigInt all_ones = bv_modulus(w) - 1;

  if (op == "bvnot") return bv(w, all_ones - args[0].as_bits());
  if (op == "bvneg") return bv(w, -args[0].as_bits());

  if (op == "bvadd" || op == "bvmul" || op == "bvand" || op == "bvor" || op == "bvxor") {
    BigInt acc = args[0].as_bits();
    for (std::size_t i = 1; i < args.size(); i++) {
      const BigInt& x = args[i].as_bits();
      if (op == "bvadd") acc += x;
      else if (op == "bvmul") acc *= x;
      else if (op == "bvand") acc &= x;
      else if (op == "bvor") acc |= x;
      else acc ^= x;
    }
    return bv(w, acc);
  }

  const BigInt& a = args[0].as_bits();
  const BigInt& b = args.size() > 1 ? args[1].as_bits() : args[0].as_bits();

  if (op == "bvsub") return bv(w, a - b);
  if (op == "bvudiv") return b == 0 ? bv(w, all_ones) : bv(w, a / b);
  if (op == "bvurem") return b == 0 ? bv(w, a) : bv(w, a % b);

  if (op == "bvsdiv" || op == "bvsrem") {
    bool neg_a = bit_test(a, w - 1), neg_b = bit_test(b, w - 1);
    BigInt ma = neg_a ? bv_modulus(w) - a : a;
    BigInt mb = neg_b ? bv_modulus(w) - b : b;
    if (op == "bvsdiv") {
      BigInt q = mb == 0 ? all_ones : ma / mb;  // bvudiv on magnitudes
      return (neg_a != neg_b) ? bv(w, -q) : bv(w, q);
    }
    BigInt r = mb == 0 ? ma : ma % mb;  // bvurem on magnitudes
    return neg_a ? bv(w, -r) : bv(w, r);
  }

  if (op == "bvshl" || op == "bvlshr" || op == "bvashr") {
    bool sign = bit_test(a, w - 1);
    if (b >= w) {
      if (op == "bvashr") return bv(w, sign ? all_ones : BigInt(0));
      return bv(w, 0);
    }
    unsigned sh = b.convert_to<unsigned>();
    if (op == "bvshl") return bv(w, a << sh);
    BigInt shifted = a >> sh;
    if (op == "bvashr" && sign) {
      BigInt high = (bv_modulus(sh) - 1) << (w - sh);
      shifted |= high;
    }
    return bv(w, shifted);
  }

  bool signed_cmp = op[2] == 's';
  BigInt x = signed_cmp ? to_signed(a, w) : a;
  BigInt y = signed_cmp ? to_signed(b, w) : b;
  if (op == "bvult" || op == "bvslt") return Value::of_bool(x < y);
  if (op == "bvule" || op == "bvsle") return Value::of_bool(x <= y);
  if (op == "bvugt" || op == "bvsgt") return Value::of_bool(x > y);
  if (op == "bvuge" || op == "bvsge") return Value::of_bool(x >= y);

  throw EvalError("unknown bit-vector operator '" + op + "'");
}

Value eval_str_op(const std::string& op, const std::vector<Value>& args) {
  if (op == "str.++") {
    std::string out;
    for (const auto& a : args) out += a.as_string();
    return Value::of_string(out);
  }
  const std::string& s = args[0].as_string();
  auto len = [](const std::string& x) { return BigInt(x.size()); };

  if (op == "str.len") return Value::of_int(len(s));

  if (op == "str.at") {
    const BigInt& i = args[1].as_int();
    if (i < 0 || i >= len(s)) return Value::of_string("");
    return Value::of_string(std::string(1, s[i.convert_to<std::size_t>()]));
  }

  if (op == "str.substr") {
    const BigInt& from = args[1].as_int();
    const BigInt& count = args[2].as_int();
    if (from < 0 || from >= len(s) || count < 0) return Value::of_string("");
    std::size_t start = from.convert_to<std::size_t>();
    BigInt take = std::min(count, len(s) - from);
    return Value::of_string(s.substr(start, take.convert_to<std::size_t>()));
  }

  if (op == "str.indexof") {
    const std::string& sub = args[1].as_string();
    const BigInt& from = args[2].as_int();
    if (from < 0 || from > len(s)) return Value::of_int(-1);
    std::size_t pos = s.find(sub, from.convert_to<std::size_t>());
    if (pos == std::string::npos) return Value::of_int(-1);
    return Value::of_int(BigInt(pos));
  }

  if (op == "str.replace") {
    const std::string& from = args[1].as_string();
    const std::string& to = args[2].as_string();
    if (from.empty()) return Value::of_string(to + s);
    std::size_t pos = s.find(from);
    if (pos == std::string::npos) return Value::of_string(s);
    return Value::of_string(s.substr(0, pos) + to + s.substr(pos + from.size()));
  }

  if (op == "str.prefixof") return Value::of_bool(args[1].as_string().starts_with(s));
  if (op == "str.suffixof") return Value::of_bool(args[1].as_string().ends_with(s));
  if (op == "str.contains") return Value::of_bool(s.find(args[1].as_string()) != std::string::npos);

  if (op == "str.to.int" || op == "str.to_int") {
    if (s.empty()) return Value::of_int(-1);
    for (char c : s)
      if (c < '0' || c > '9') return Value::of_int(-1);
    return Value::of_int(BigInt(s));
  }

  if (op == "int.to.str" || op == "str.from_int") {
    const BigInt& i = args[0].as_int();
    if (i < 0) return Value::of_string("");
    return Value::of_string(i.str());
  }

  throw EvalError("unknown string operator '" + op + "'");
}

Value eval_term(const TermPtr& t, const Env& env);

Value eval_apply(const TermPtr& t, const Env& env) {
  const std::string& op = t->name();

  // Short-circuit Boolean connectives before evaluating all arguments.
  if (op == "and" || op == "or") {
    bool stop_on = (op == "or");
    for (const auto& a : t->args())
      if (eval_term(a, env).as_bool() == stop_on) return Value::of_bool(stop_on);
    return Value::of_bool(!stop_on);
  }
  if (op == "=>") {
    // Right-associative chain: (=> a b c) = (=> a (=> b c)).
    for (std::size_t i = 0; i + 1 < t->args().size(); i++)
      if (!eval_term(t->args()[i], env).as_bool()) return Value::of_bool(true);
    return eval_term(t->args().back(), env);
  }
  if (op == "ite") {
    bool c = eval_term(t->args()[0], env).as_bool();
    return eval_term(t->args()[c ? 1 : 2], env);
  }

  if (env.defined_funs) {
    for (const auto& f : *env.defined_funs) {
      if (f.name != op) continue;
      Env inner;
      inner.defined_funs = env.defined_funs;
      for (std::size_t i = 0; i < f.params.size(); i++)
        inner.vars[f.params[i].first] = eval_term(t->args()[i], env);
      return eval_term(f.body, inner);
    }
  }

  std::vector<Value> args;
  for (const auto& a : t->args()) args.push_back(eval_term(a, env));

  if (op == "not") return Value::of_bool(!args[0].as_bool());
  if (op == "xor") {
    bool acc = args[0].as_bool();
    for (std::size_t i = 1; i < args.size(); i++) acc ^= args[i].as_bool();
    return Value::of_bool(acc);
  }
  if (op == "=") {
    for (std::size_t i = 1; i < args.size(); i++)
      if (!(args[i] == args[0])) return Value::of_bool(false);
    return Value::of_bool(true);
  }
  if (op == "distinct") {
    for (std::size_t i = 0; i < args.size(); i++)
      for (std::size_t j = i + 1; j < args.size(); j++)
        if (args[i] == args[j]) return Value::of_bool(false);
    return Value::of_bool(true);
  }

  if (!args.empty() && args[0].sort().is_int() && op != "str.from_int" && op != "int.to.str") {
    if (op == "+" || op == "*" || (op == "-" && args.size() >= 2)) {
      BigInt acc = args[0].as_int();
      for (std::size_t i = 1; i < args.size(); i++) {
        if (op == "+") acc += args[i].as_int();
        else if (op == "*") acc *= args[i].as_int();
        else acc -= args[i].as_int();
      }
      return Value::of_int(acc);
    }
    if (op == "-") return Value::of_int(-args[0].as_int());
    if (op == "abs") return Value::of_int(abs(args[0].as_int()));
    if (op == "div") return Value::of_int(euclid_divmod(args[0].as_int(), args[1].as_int()).first);
    if (op == "mod") return Value::of_int(euclid_divmod(args[0].as_int(), args[1].as_int()).second);
    if (op == "<=") return Value::of_bool(args[0].as_int() <= args[1].as_int());
    if (op == "<") return Value::of_bool(args[0].as_int() < args[1].as_int());
    if (op == ">=") return Value::of_bool(args[0].as_int() >= args[1].as_int());
    if (op == ">") return Value::of_bool(args[0].as_int() > args[1].as_int());
  }

  if (!args.empty() && args[0].sort().is_bitvec()) return eval_bv_op(op, args);
  if (!args.empty() && (args[0].sort().is_string() || op == "str.from_int" || op == "int.to.str"))
    return eval_str_op(op, args);

  throw EvalError("cannot evaluate application of '" + op + "'");
}

Value eval_term(const TermPtr& t, const Env& env) {
  switch (t->kind()) {
    case TermKind::Literal:
      return t->value();

    case TermKind::Var: {
      auto it = env.vars.find(t->name());
      if (it == env.vars.end()) throw EvalError("unbound variable '" + t->name() + "'");
      return it->second;
    }

    case TermKind::Apply:
      return eval_apply(t, env);

    case TermKind::Let: {
      // Parallel let: all binding values evaluate in the outer environment.
      Env inner = env;
      for (std::size_t i = 0; i < t->binding_count(); i++)
        inner.vars[t->bound_names()[i]] = eval_term(t->binding_value(i), env);
      return eval_term(t->body(), inner);
    }
  }
  throw EvalError("malformed term");
}

} // namespace

Value eval(const TermPtr& t, const Env& env) { return eval_term(t, env); }

bool holds_at(const Problem& p, const std::vector<Candidate>& cands, const Env& point) {
  if (!p.inv_constraints.empty())
    throw EvalError("holds_at requires a desugared problem (inv-constraints present)");
  Env env = point;
  env.defined_funs = &p.defined_funs;
  for (const auto& constraint : p.constraints) {
    TermPtr instantiated = constraint;
    for (const auto& c : cands) instantiated = substitute(instantiated, c);
    if (!eval(instantiated, env).as_bool()) return false;
  }
  return true;
}

} // namespace sygus
