#include "hopf/hopf_c.h"

#include <algorithm>
#include <charconv>
#include <memory>
#include <sstream>
#include <string>

#include "hopf/error.hpp"
#include "hopf/lyndon_hall.hpp"
#include "hopf/morphisms.hpp"
#include "hopf/singular_frame.hpp"
#include "hopf/suites.hpp"

using namespace hopf;

struct hopf_context {
  std::string output;
  std::string error;
  long error_offset = -1;
};

struct hopf_frame_series {
  FrameSeries series;
  std::vector<std::string> coeffs;
};

namespace {

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Runs f, storing its text in ctx->output; maps exceptions to status codes.
template <class F>
hopf_status guarded(hopf_context* ctx, F&& f) {
  if (!ctx) return HOPF_ERR_INVALID_ARG;
  ctx->output.clear();
  ctx->error.clear();
  ctx->error_offset = -1;
  try {
    return f(ctx->output);
  } catch (const ParseError& e) {
    ctx->error = e.what();
    ctx->error_offset = static_cast<long>(e.offset());
    return HOPF_ERR_PARSE;
  } catch (const InvalidArgument& e) {
    ctx->error = e.what();
    return HOPF_ERR_INVALID_ARG;
  } catch (const DomainError& e) {
    ctx->error = e.what();
    return HOPF_ERR_DOMAIN;
  } catch (const std::exception& e) {
    ctx->error = std::string("internal error: ") + e.what();
    return HOPF_ERR_INTERNAL;
  } catch (...) {
    ctx->error = "internal error";
    return HOPF_ERR_INTERNAL;
  }
}

std::string arg(const char* s, const char* what) {
  if (!s) throw InvalidArgument(std::string(what) + " is null");
  return s;
}

void require_weight(long n) {
  if (n < 1) throw InvalidArgument("max weight must be >= 1");
  if (n > 12) throw InvalidArgument("max weight must be <= 12");
}

std::string qsym_tensor_string(const LinComb<Tensor<Word>>& x) {
  return to_string(x, [](const Tensor<Word>& t) {
    return qsym_basis_string(t.left) + " (x) " + qsym_basis_string(t.right);
  });
}

enum class Algebra { CK, GL, Foissy, Planar, Shuffle, QShuffle, QSym };

Algebra algebra_of(const std::string& name) {
  if (name == "ck") return Algebra::CK;
  if (name == "gl") return Algebra::GL;
  if (name == "foissy") return Algebra::Foissy;
  if (name == "planar") return Algebra::Planar;
  if (name == "shuffle") return Algebra::Shuffle;
  if (name == "qshuffle") return Algebra::QShuffle;
  if (name == "qsym") return Algebra::QSym;
  throw InvalidArgument("unknown algebra: " + name + " (ck|gl|foissy|planar|shuffle|qshuffle|qsym)");
}

Pairing word_pairing(Algebra a) { return a == Algebra::Shuffle ? Pairing::Zero : Pairing::Additive; }

Word parse_word_input(Algebra a, const std::string& text) {
  return a == Algebra::QSym ? parse_composition(text) : parse_word(text);
}

std::string word_lincomb_string(Algebra a, const LinComb<Word>& x) {
  return a == Algebra::QSym ? to_qsym_string(x) : to_string(x);
}

std::string coproduct_text(Algebra a, const std::string& in) {
  switch (a) {
    case Algebra::CK: return to_string(ck_coproduct(parse_forest(in)));
    case Algebra::GL: return to_string(gl_coproduct(parse_tree(in)));
    case Algebra::Foissy: return to_string(foissy_coproduct(parse_ordered_forest(in)));
    case Algebra::Planar: return to_string(planar_diamond_coproduct(parse_planar_tree(in)));
    case Algebra::Shuffle:
    case Algebra::QShuffle: return to_string(deconcat_coproduct(parse_word(in)));
    case Algebra::QSym: return qsym_tensor_string(deconcat_coproduct(parse_composition(in)));
  }
  return {};
}

std::string antipode_text(Algebra a, const std::string& in) {
  switch (a) {
    case Algebra::CK: return to_string(ck_antipode(parse_forest(in)));
    case Algebra::GL: return to_string(gl_hopf().antipode(parse_tree(in)));
    case Algebra::Foissy: return to_string(foissy_antipode(parse_ordered_forest(in)));
    case Algebra::Planar: return to_string(planar_hopf().antipode(parse_planar_tree(in)));
    case Algebra::Shuffle:
    case Algebra::QShuffle:
    case Algebra::QSym: return word_lincomb_string(a, word_antipode(parse_word_input(a, in), word_pairing(a)));
  }
  return {};
}

std::string product_text(Algebra a, const std::string& l, const std::string& r) {
  switch (a) {
    case Algebra::CK: return to_string(ck_product(parse_forest(l), parse_forest(r)));
    case Algebra::GL: return to_string(gl_product(parse_tree(l), parse_tree(r)));
    case Algebra::Foissy: return to_string(foissy_product(parse_ordered_forest(l), parse_ordered_forest(r)));
    case Algebra::Planar: return to_string(planar_diamond(parse_planar_tree(l), parse_planar_tree(r)));
    case Algebra::Shuffle:
    case Algebra::QShuffle:
    case Algebra::QSym:
      return word_lincomb_string(
          a, quasi_shuffle(parse_word_input(a, l), parse_word_input(a, r), word_pairing(a)));
  }
  return {};
}

std::string parse_text(const std::string& kind, const std::string& text) {
  if (kind == "tree") return parse_tree(text).code();
  if (kind == "forest") return to_string(parse_forest(text));
  if (kind == "planar") return parse_planar_tree(text).code();
  if (kind == "ordered-forest") return to_string(parse_ordered_forest(text));
  if (kind == "word") return to_string(parse_word(text));
  if (kind == "bbr") return bbr_print(bbr_parse(text));
  throw InvalidArgument("unknown kind: " + kind + " (tree|forest|planar|ordered-forest|word|bbr)");
}

int parse_int(const std::string& s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw ParseError("expected an integer", 0);
  return v;
}

std::string lyndon_text(long n) {
  std::ostringstream os;
  for (long w = 1; w <= n; ++w) {
    auto words = lyndon_of_weight(w);
    os << "# weight " << w << " (" << words.size() << ")\n";
    for (const Word& l : words) os << to_string(l) << '\n';
  }
  return os.str();
}

std::string hall_text(long n, Orientation o) {
  std::ostringstream os;
  for (long w = 1; w <= n; ++w) {
    auto words = lyndon_of_weight(w);
    os << "# weight " << w << " (" << words.size() << ")\n";
    for (const Word& l : words) {
      HallTree h = hall_tree_of_lyndon(l);
      os << to_string(h.foliage) << "  " << h.tree.code() << "  ";
      if (auto d = standard_decomposition(h))
        os << '(' << d->first.tree.code() << ", " << d->second.tree.code() << ')';
      else
        os << "(letter)";
      os << "  E = " << to_e_string(hall_polynomial(h, o)) << '\n';
    }
  }
  return os.str();
}

}  // namespace

extern "C" {

hopf_context* hopf_context_new(void) {
  try {
    return new hopf_context();
  } catch (...) {
    return nullptr;
  }
}

void hopf_context_free(hopf_context* ctx) { delete ctx; }

const char* hopf_output(const hopf_context* ctx) { return ctx ? ctx->output.c_str() : ""; }
const char* hopf_last_error(const hopf_context* ctx) { return ctx ? ctx->error.c_str() : ""; }
long hopf_last_error_offset(const hopf_context* ctx) { return ctx ? ctx->error_offset : -1; }

const char* hopf_status_string(hopf_status s) {
  switch (s) {
    case HOPF_OK: return "ok";
    case HOPF_ERR_PARSE: return "parse error";
    case HOPF_ERR_DOMAIN: return "domain error";
    case HOPF_ERR_INVALID_ARG: return "invalid argument";
    case HOPF_ERR_INTERNAL: return "internal error";
    case HOPF_CHECK_FAILED: return "check failed";
  }
  return "unknown status";
}

hopf_status hopf_coproduct(hopf_context* ctx, const char* algebra, const char* input) {
  return guarded(ctx, [&](std::string& out) {
    out = coproduct_text(algebra_of(arg(algebra, "algebra")), arg(input, "input")) + "\n";
    return HOPF_OK;
  });
}

hopf_status hopf_antipode(hopf_context* ctx, const char* algebra, const char* input) {
  return guarded(ctx, [&](std::string& out) {
    out = antipode_text(algebra_of(arg(algebra, "algebra")), arg(input, "input")) + "\n";
    return HOPF_OK;
  });
}

hopf_status hopf_product(hopf_context* ctx, const char* algebra, const char* left, const char* right) {
  return guarded(ctx, [&](std::string& out) {
    out = product_text(algebra_of(arg(algebra, "algebra")), arg(left, "left"), arg(right, "right")) + "\n";
    return HOPF_OK;
  });
}

hopf_status hopf_parse(hopf_context* ctx, const char* kind, const char* text) {
  return guarded(ctx, [&](std::string& out) {
    out = parse_text(arg(kind, "kind"), arg(text, "text")) + "\n";
    return HOPF_OK;
  });
}

hopf_status hopf_pi(hopf_context* ctx, const char* forest) {
  return guarded(ctx, [&](std::string& out) {
    out = to_string(pi(parse_forest(arg(forest, "forest")))) + "\n";
    return HOPF_OK;
  });
}

hopf_status hopf_lyndon(hopf_context* ctx, long max_weight) {
  return guarded(ctx, [&](std::string& out) {
    require_weight(max_weight);
    out = lyndon_text(max_weight);
    return HOPF_OK;
  });
}

hopf_status hopf_hall(hopf_context* ctx, long max_weight, const char* orientation) {
  return guarded(ctx, [&](std::string& out) {
    require_weight(max_weight);
    std::string o = orientation ? orientation : "standard";
    if (o != "standard" && o != "flipped") throw InvalidArgument("orientation must be standard or flipped");
    out = hall_text(max_weight, o == "standard" ? Orientation::Standard : Orientation::Flipped);
    return HOPF_OK;
  });
}

hopf_status hopf_zhao(hopf_context* ctx, const char* mode, const char* input) {
  return guarded(ctx, [&](std::string& out) {
    std::string m = arg(mode, "mode"), in = arg(input, "input");
    if (m == "k" || m == "eps") {
      int n = parse_int(in);
      if (n < (m == "k" ? 1 : 0) || n > 10) throw InvalidArgument("n out of range");
      out = to_string(m == "k" ? zhao_k(n) : zhao_eps(n)) + "\n";
    } else if (m == "Z") {
      out = to_string(zhao_Z(NSymElement(parse_nsym_word(in)))) + "\n";
    } else if (m == "Zstar") {
      out = to_qsym_string(zhao_Zstar(parse_forest(in))) + "\n";
    } else {
      throw InvalidArgument("unknown zhao mode: " + m + " (k|eps|Z|Zstar)");
    }
    return HOPF_OK;
  });
}

hopf_status hopf_frame(hopf_context* ctx, long max_weight, const char* format) {
  return guarded(ctx, [&](std::string& out) {
    require_weight(max_weight);
    std::string f = format ? format : "json";
    if (f == "json")
      out = to_json(frame_series(max_weight)) + "\n";
    else if (f == "text")
      out = to_text(frame_series(max_weight));
    else
      throw InvalidArgument("format must be json or text");
    return HOPF_OK;
  });
}

hopf_status hopf_check(hopf_context* ctx, const char* suite, long max_weight) {
  return guarded(ctx, [&](std::string& out) {
    require_weight(max_weight);
    std::string name = arg(suite, "suite");
    if (name != "all") {
      const auto& names = suite_names();
      if (std::find(names.begin(), names.end(), name) == names.end())
        throw InvalidArgument("unknown suite: " + name + " (hopf-axioms|duality|pi-kernel|diagrams|prop53|all)");
    }
    auto reports = run_suite(name, max_weight);
    bool ok = true;
    for (const auto& r : reports) {
      if (reports.size() > 1) out += "== " + r.suite + " ==\n";
      out += r.to_text();
      ok = ok && r.ok();
    }
    if (reports.size() > 1) out += ok ? "PASS\n" : "FAIL\n";
    return ok ? HOPF_OK : HOPF_CHECK_FAILED;
  });
}

hopf_status hopf_frame_series_new(hopf_context* ctx, long max_weight, hopf_frame_series** out) {
  return guarded(ctx, [&](std::string&) {
    if (!out) throw InvalidArgument("out is null");
    require_weight(max_weight);
    auto s = std::make_unique<hopf_frame_series>();
    s->series = frame_series(max_weight);
    for (const auto& t : s->series.terms) s->coeffs.push_back(t.coeff.to_string());
    *out = s.release();
    return HOPF_OK;
  });
}

void hopf_frame_series_free(hopf_frame_series* s) { delete s; }

size_t hopf_frame_series_size(const hopf_frame_series* s) { return s ? s->series.terms.size() : 0; }

hopf_status hopf_frame_series_term(const hopf_frame_series* s, size_t index, const int** letters, size_t* length,
                                   const char** coeff, long* v_pow, long* z_pow) {
  if (!s || index >= s->series.terms.size()) return HOPF_ERR_INVALID_ARG;
  const FrameTerm& t = s->series.terms[index];
  if (letters) *letters = t.word.letters().data();
  if (length) *length = t.word.length();
  if (coeff) *coeff = s->coeffs[index].c_str();
  if (v_pow) *v_pow = t.v_pow;
  if (z_pow) *z_pow = t.z_pow;
  return HOPF_OK;
}

}  // extern "C"
