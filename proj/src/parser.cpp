#include "residua/parser.hpp"

#include <algorithm>
#include <cctype>

#include "residua/metric.hpp"
#include "residua/residue.hpp"

namespace residua {

namespace {

[[noreturn]] void parse_fail(const std::string& msg, size_t offset) {
  fail(ErrKind::Parse, msg + " at offset " + std::to_string(offset));
}

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  size_t b = s.find_last_not_of(" \t");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '{' || c == '[') ++depth;
    if (c == ')' || c == '}' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(strip(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(strip(cur));
  return out;
}

}  // namespace

ExtDesc parse_ext(const std::string& raw) {
  std::string src = strip(raw);
  if (src == "Z⊂Q" || src == "ZinQ" || src == "ZcQ") return ExtDesc::zinq();
  if (src.starts_with("Zloc{") && src.back() == '}') {
    std::string body = src.substr(5, src.size() - 6);
    std::vector<long long> primes;
    if (!strip(body).empty())
      for (const auto& tok : split_top(body, ','))
        primes.push_back(std::stoll(tok));
    return ExtDesc::zloc(std::move(primes));
  }
  if (src.starts_with("F") && src.find("[t]loc{") != std::string::npos &&
      src.back() == '}') {
    size_t bracket = src.find("[t]loc{");
    long long p = std::stoll(src.substr(1, bracket - 1));
    std::string body = src.substr(bracket + 7, src.size() - bracket - 8);
    std::vector<FpPoly> polys;
    for (const auto& tok : split_top(body, ','))
      polys.push_back(fp_poly_parse(p, tok));
    return ExtDesc::fptloc(p, std::move(polys));
  }
  if (src.starts_with("prod(") && src.back() == ')') {
    std::string body = src.substr(5, src.size() - 6);
    std::vector<ExtDesc> parts;
    for (const auto& tok : split_top(body, ',')) parts.push_back(parse_ext(tok));
    return ExtDesc::product(std::move(parts));
  }
  fail(ErrKind::Parse, "bad extension descriptor: " + src);
}

ModelDesc parse_model(const std::string& raw) {
  std::string src = strip(raw);
  size_t colon = src.find(':');
  if (colon == std::string::npos)
    fail(ErrKind::Parse, "bad model descriptor: " + src);
  std::string kind = src.substr(0, colon), rest = strip(src.substr(colon + 1));
  if (kind == "res") return build_model(parse_ext(rest));
  if (kind == "rlambda") {
    if (rest == "Z") return model_rlambda(LGroupDesc::pointwise({0}));
    if (rest.starts_with("Z^")) {
      long long k = std::stoll(rest.substr(2));
      std::vector<long long> labels;
      for (long long i = 0; i < k; ++i) labels.push_back(i);
      return model_rlambda(LGroupDesc::pointwise(std::move(labels)));
    }
    if (rest == "Q+" || rest == "Q") return model_rlambda(LGroupDesc::primes());
    fail(ErrKind::Parse, "bad rlambda group: " + rest);
  }
  if (kind == "lfl") {
    auto parts = split_top(rest, ',');
    if (parts.size() != 2) fail(ErrKind::Parse, "lfl wants p,l: " + rest);
    return model_lfl(std::stoll(parts[0]), std::stoll(parts[1]));
  }
  if (kind == "salpha") {
    if (rest == "nonmedian") return model_salpha(false);
    if (rest == "nonlff") return model_salpha(true);
    fail(ErrKind::Parse, "salpha flavor is nonmedian or nonlff: " + rest);
  }
  fail(ErrKind::Parse, "bad model descriptor: " + src);
}

// ---------- expression parser ----------

namespace {

struct Parser {
  const std::string& src;
  const ModelDesc& model;
  size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool peek_word(const std::string& w) {
    skip_ws();
    if (src.compare(pos, w.size(), w) != 0) return false;
    size_t end = pos + w.size();
    if (end < src.size() &&
        (isalnum(static_cast<unsigned char>(src[end])) || src[end] == '_'))
      return false;
    return true;
  }

  bool eat_word(const std::string& w) {
    if (!peek_word(w)) return false;
    pos += w.size();
    return true;
  }

  long long integer() {
    skip_ws();
    size_t start = pos;
    bool neg = false;
    if (pos < src.size() && (src[pos] == '-' || src[pos] == '+'))
      neg = src[pos++] == '-';
    if (pos >= src.size() || !isdigit(static_cast<unsigned char>(src[pos])))
      parse_fail("expected integer", start);
    long long v = 0;
    while (pos < src.size() && isdigit(static_cast<unsigned char>(src[pos])))
      v = v * 10 + (src[pos++] - '0');
    return neg ? -v : v;
  }

  Rat rational() {
    long long n = integer();
    skip_ws();
    if (pos < src.size() && src[pos] == '/') {
      ++pos;
      long long d = integer();
      return make_rat(n, d);
    }
    return make_rat(n, 1);
  }

  LElem lelem_of_rat(const Rat& x) {
    if (model.group.kind != LGroupDesc::Kind::Primes &&
        model.group.kind != LGroupDesc::Kind::Pointwise)
      parse_fail("rational lattice literal needs a prime-indexed group", pos);
    if (x <= 0) parse_fail("lattice literal must be positive", pos);
    LElem r = l_eps(model.group);
    long long bound =
        model.kind == ModelDesc::Kind::Residue ? model.ext.factor_bound : 1000000;
    for (const auto& [p, e] : factor_int(rat_num(x), bound)) r.e[Idx{0, p}] += e;
    for (const auto& [p, e] : factor_int(rat_den(x), bound)) {
      r.e[Idx{0, p}] -= e;
      if (r.e[Idx{0, p}] == 0) r.e.erase(Idx{0, p});
    }
    return r;
  }

  ExprPtr lit(QsElem q) {
    auto e = std::make_shared<Expr>();
    e->op = Expr::Op::Lit;
    e->lit = std::move(q);
    return e;
  }

  ExprPtr node(Expr::Op op, std::vector<ExprPtr> args) {
    auto e = std::make_shared<Expr>();
    e->op = op;
    e->args = std::move(args);
    return e;
  }

  ExprPtr number_atom() {
    Rat x = rational();
    if (eat_word("mod")) {
      skip_ws();
      size_t at = pos;
      Rat q = rational();
      if (model.kind != ModelDesc::Kind::Residue)
        parse_fail("residue literal outside a residue model", at);
      if (q <= 0) parse_fail("modulus must be positive", at);
      return lit(make_residue(model, FieldElem(x), lelem_of_rat(q)));
    }
    return lit(lattice_elem(model, lelem_of_rat(x)));
  }

  ExprPtr rpair_atom() {
    auto vec = [&]() {
      if (!eat('(')) parse_fail("expected (", pos);
      std::vector<long long> v;
      if (!eat(')')) {
        v.push_back(integer());
        while (eat(',')) v.push_back(integer());
        if (!eat(')')) parse_fail("expected )", pos);
      }
      return v;
    };
    auto to_elem = [&](const std::vector<long long>& v) {
      LElem r = l_eps(model.group);
      if (model.group.kind == LGroupDesc::Kind::Lex) {
        if (static_cast<int>(v.size()) != model.group.lex_base + 1)
          parse_fail("wrong arity for the lex group", pos);
        for (size_t i = 0; i < v.size(); ++i)
          if (v[i]) r.e[Idx{0, static_cast<long long>(i)}] = v[i];
      } else {
        if (v.size() != model.group.labels.size())
          parse_fail("wrong arity for the group", pos);
        for (size_t i = 0; i < v.size(); ++i)
          if (v[i]) r.e[Idx{0, model.group.labels[i]}] = v[i];
      }
      return r;
    };
    std::vector<long long> g = vec();
    if (!eat(';')) parse_fail("expected ;", pos);
    std::vector<long long> d = vec();
    if (!eat(']')) parse_fail("expected ]", pos);
    return lit(make_rpair(model, to_elem(g), to_elem(d)));
  }

  ExprPtr primary() {
    skip_ws();
    if (pos >= src.size()) parse_fail("unexpected end of input", pos);
    char c = src[pos];

    if (eat_word("eps")) return lit(qs_eps(model));
    if (model.kind == ModelDesc::Kind::LFl && c == 'g') {
      ++pos;
      if (!eat('^')) parse_fail("expected ^", pos);
      return lit(make_lfl_lattice(model, integer()));
    }
    struct Fn {
      const char* name;
      Expr::Op op;
      int arity;
    };
    static const Fn fns[] = {{"inv", Expr::Op::Inv, 1},
                             {"meet", Expr::Op::Meet, 2},
                             {"join", Expr::Op::Join, 2},
                             {"median", Expr::Op::Median, 3},
                             {"d", Expr::Op::Dist, 2},
                             {"eplus", Expr::Op::EPlus, 1},
                             {"v", Expr::Op::V, 1},
                             {"one", Expr::Op::One, 1}};
    for (const Fn& f : fns) {
      size_t save = pos;
      if (!eat_word(f.name)) continue;
      if (!eat('(')) {
        pos = save;
        continue;
      }
      std::vector<ExprPtr> args{expr()};
      while (eat(',')) args.push_back(expr());
      if (!eat(')')) parse_fail("expected )", pos);
      if (static_cast<int>(args.size()) != f.arity)
        parse_fail(std::string(f.name) + " wants " + std::to_string(f.arity) +
                       " arguments",
                   save);
      return node(f.op, std::move(args));
    }
    if (c == '[') {
      ++pos;
      return rpair_atom();
    }
    if (c == '(') {
      if (model.kind == ModelDesc::Kind::LFl) {
        size_t save = pos;
        ++pos;
        long long n = integer();
        if (eat(',')) {
          long long x = integer();
          if (!eat(')')) parse_fail("expected )", pos);
          return lit(make_lfl_group(model, n, x));
        }
        pos = save;
      }
      if (model.kind == ModelDesc::Kind::Residue &&
          model.ext.kind == ExtDesc::Kind::Product) {
        size_t save = pos;
        size_t close = src.find(')', pos);
        std::string inner =
            close == std::string::npos ? "" : src.substr(pos + 1, close - pos - 1);
        if (inner.find('|') != std::string::npos) {
          auto comps = split_top(inner, '|');
          if (comps.size() != model.ext.parts.size())
            parse_fail("tuple arity mismatch", save);
          std::vector<FieldElem> reps;
          LElem mod = l_eps(model.group);
          for (size_t b = 0; b < comps.size(); ++b) {
            ModelDesc part = build_model(model.ext.parts[b]);
            Parser sub{comps[b], part, 0};
            ExprPtr atom = sub.number_atom();
            sub.skip_ws();
            if (sub.pos != comps[b].size()) parse_fail("bad tuple component", save);
            reps.push_back(atom->lit->res().rep);
            for (const auto& [k, w] : atom->lit->res().modulus.e)
              mod.e[Idx{static_cast<int>(b), k.pos}] = w;
          }
          pos = close + 1;
          return lit(make_residue(model, FieldElem(std::move(reps)), mod));
        }
      }
      ++pos;
      ExprPtr e = expr();
      if (!eat(')')) parse_fail("expected )", pos);
      return e;
    }
    if (isdigit(static_cast<unsigned char>(c))) return number_atom();
    parse_fail("unexpected token", pos);
  }

  ExprPtr unary() {
    skip_ws();
    if (pos < src.size() && src[pos] == '-') {
      ++pos;
      return node(Expr::Op::Neg, {unary()});
    }
    return primary();
  }

  ExprPtr prod() {
    ExprPtr e = unary();
    while (true) {
      skip_ws();
      if (pos < src.size() && src[pos] == '*') {
        ++pos;
        e = node(Expr::Op::Mul, {e, unary()});
      } else {
        break;
      }
    }
    return e;
  }

  ExprPtr expr() {
    ExprPtr e = prod();
    while (true) {
      skip_ws();
      if (pos >= src.size()) break;
      if (src[pos] == '+') {
        ++pos;
        e = node(Expr::Op::Add, {e, prod()});
      } else if (src[pos] == '-') {
        ++pos;
        e = node(Expr::Op::Sub, {e, prod()});
      } else {
        break;
      }
    }
    return e;
  }
};

}  // namespace

ExprPtr parse_expr(const std::string& src, const ModelDesc& model) {
  Parser p{src, model, 0};
  ExprPtr e = p.expr();
  p.skip_ws();
  if (p.pos != src.size()) parse_fail("trailing input", p.pos);
  return e;
}

Value eval_expr(const ExprPtr& e, const ModelDesc& model) {
  auto elem_arg = [&](size_t i) {
    Value v = eval_expr(e->args[i], model);
    if (!v.is_elem())
      fail(ErrKind::BadArgument, "operand is a Lambda value, not a model element");
    return v.elem();
  };
  switch (e->op) {
    case Expr::Op::Lit:
      return Value{*e->lit};
    case Expr::Op::Add:
      return Value{qs_add(elem_arg(0), elem_arg(1))};
    case Expr::Op::Sub:
      return Value{qs_sub(elem_arg(0), elem_arg(1))};
    case Expr::Op::Mul:
      return Value{qs_mul(elem_arg(0), elem_arg(1))};
    case Expr::Op::Neg:
      return Value{qs_neg(elem_arg(0))};
    case Expr::Op::Inv:
      return Value{qs_qinv(elem_arg(0))};
    case Expr::Op::Meet:
      return Value{qs_meet(elem_arg(0), elem_arg(1))};
    case Expr::Op::Join: {
      auto j = qs_join(elem_arg(0), elem_arg(1));
      if (!j) fail(ErrKind::NotIncident, "not incident");
      return Value{*j};
    }
    case Expr::Op::Median:
      return Value{met_median(elem_arg(0), elem_arg(1), elem_arg(2))};
    case Expr::Op::Dist:
      return Value{met_dist(elem_arg(0), elem_arg(1))};
    case Expr::Op::EPlus:
      return Value{qs_eplus(elem_arg(0))};
    case Expr::Op::V:
      return Value{qs_v(elem_arg(0))};
    case Expr::Op::One: {
      Value v = eval_expr(e->args[0], model);
      LElem alpha = v.is_elem() ? qs_lattice_of(v.elem()) : v.lam();
      return Value{one_alpha(model, alpha)};
    }
  }
  fail(ErrKind::Internal, "eval_expr: bad op");
}

std::string value_str(const Value& v) {
  if (v.is_elem()) return qs_str(v.elem());
  return lelem_str(v.lam());
}

LElem level_of_int(const ExtDesc& ext, long long n) {
  if (n <= 0) fail(ErrKind::BadArgument, "level must be positive");
  LGroupDesc g = lambda_group(ext);
  LElem lvl = l_eps(g);
  switch (ext.kind) {
    case ExtDesc::Kind::ZinQ:
      for (const auto& [p, e] : factor_int(to_int(n), ext.factor_bound))
        lvl.e[Idx{0, p}] = e;
      return lvl;
    case ExtDesc::Kind::ZlocS:
      for (long long p : ext.s_primes) {
        long long v = vp_int(to_int(n), to_int(p));
        if (v) lvl.e[Idx{0, p}] = v;
      }
      return lvl;
    case ExtDesc::Kind::FpTlocS:
      fail(ErrKind::Unsupported, "integer levels need a rational extension");
    case ExtDesc::Kind::Product:
      for (size_t b = 0; b < ext.parts.size(); ++b) {
        LElem part = level_of_int(ext.parts[b], n);
        for (const auto& [k, v] : part.e)
          lvl.e[Idx{static_cast<int>(b), k.pos}] = v;
      }
      return lvl;
  }
  fail(ErrKind::Internal, "level_of_int");
}

LMonElem parse_idempotent(const LGroupDesc& group, const std::string& raw) {
  std::string src = strip(raw);
  if (src == "omega") return lmon_omega(group);
  if (src == "eps") return lmon_eps(group);
  bool default_inf = false;
  if (src.starts_with("default=inf")) {
    default_inf = true;
    src = strip(src.substr(11));
    if (src.starts_with("*")) src = strip(src.substr(1));
  }
  std::map<Idx, ExtInt> entries;
  if (!src.empty())
    for (const auto& tok : split_top(src, '*')) {
      size_t caret = tok.find('^');
      if (caret == std::string::npos)
        fail(ErrKind::Parse, "bad idempotent factor: " + tok);
      long long p = std::stoll(tok.substr(0, caret));
      std::string ex = strip(tok.substr(caret + 1));
      entries[Idx{0, p}] =
          ex == "inf" ? ExtInt::infinity() : ExtInt::of(std::stoll(ex));
    }
  LMonElem t = lmon_make(group, std::vector<bool>(group.block_count(), default_inf),
                         std::move(entries));
  if (!lmon_idempotent(t))
    fail(ErrKind::NonIdempotent, "not an idempotent: " + raw);
  return t;
}


FieldElem parse_field_elem(const ExtDesc& ext, const std::string& raw) {
  std::string src = strip(raw);
  switch (ext.kind) {
    case ExtDesc::Kind::ZinQ:
    case ExtDesc::Kind::ZlocS: {
      auto parts = split_top(src, '/');
      if (parts.size() > 2 || parts[0].empty())
        fail(ErrKind::Parse, "bad rational: " + raw);
      Int num(parts[0]);
      Int den = parts.size() == 2 ? Int(parts[1]) : Int(1);
      if (den == 0) fail(ErrKind::Parse, "zero denominator: " + raw);
      return FieldElem(make_rat(num, den));
    }
    case ExtDesc::Kind::FpTlocS: {
      auto parts = split_top(src, '/');
      auto peel = [&](std::string s) {
        s = strip(s);
        if (!s.empty() && s.front() == '(' && s.back() == ')')
          s = s.substr(1, s.size() - 2);
        return fp_poly_parse(ext.p, s);
      };
      if (parts.size() > 2) fail(ErrKind::Parse, "bad rational function: " + raw);
      FpPoly num = peel(parts[0]);
      FpPoly den = parts.size() == 2 ? peel(parts[1]) : FpPoly::constant(ext.p, 1);
      return FieldElem(FpRat(num, den));
    }
    case ExtDesc::Kind::Product: {
      if (src.size() < 2 || src.front() != '(' || src.back() != ')')
        fail(ErrKind::Parse, "tuple wants (a | b): " + raw);
      auto comps = split_top(src.substr(1, src.size() - 2), '|');
      if (comps.size() != ext.parts.size())
        fail(ErrKind::Parse, "tuple arity mismatch: " + raw);
      std::vector<FieldElem> t;
      for (size_t b = 0; b < comps.size(); ++b)
        t.push_back(parse_field_elem(ext.parts[b], comps[b]));
      return FieldElem(std::move(t));
    }
  }
  fail(ErrKind::Internal, "parse_field_elem");
}

}  // namespace residua
