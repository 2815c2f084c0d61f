#include "wqo/wqo.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "checks.hpp"
#include "correspond.hpp"
#include "eps.hpp"
#include "qo.hpp"
#include "seq.hpp"
#include "tree.hpp"

struct wqo_qo {
  wqo::QO q;
};

namespace {

thread_local std::string g_lastError = "no error";

char* dupString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs the body, translating exceptions into status codes.
template <typename F>
wqo_status guard(F&& body) {
  try {
    body();
    return WQO_OK;
  } catch (const wqo::ParseError& e) {
    g_lastError = e.what();
    return WQO_EPARSE;
  } catch (const wqo::LimitError& e) {
    g_lastError = e.what();
    return WQO_ELIMIT;
  } catch (const std::exception& e) {
    g_lastError = e.what();
    return WQO_EINVAL;
  }
}

wqo_status invalid(const char* msg) {
  g_lastError = msg;
  return WQO_EINVAL;
}

}  // namespace

extern "C" {

const char* wqo_last_error(void) { return g_lastError.c_str(); }

void wqo_string_free(char* s) { std::free(s); }

wqo_status wqo_qo_open_text(const char* text, wqo_qo** out) {
  if (!text || !out) return invalid("null argument");
  return guard([&] { *out = new wqo_qo{wqo::parseQO(text)}; });
}

wqo_status wqo_qo_open_builtin(const char* name, wqo_qo** out) {
  if (!name || !out) return invalid("null argument");
  return guard([&] { *out = new wqo_qo{wqo::builtinQO(name)}; });
}

void wqo_qo_close(wqo_qo* q) { delete q; }

wqo_status wqo_qo_stats(const wqo_qo* q, char** out) {
  if (!q || !out) return invalid("null argument");
  return guard([&] {
    std::ostringstream os;
    os << "size " << q->q.size() << "\n"
       << "classes " << q->q.equivClassCount() << "\n"
       << "otype " << wqo::otype(q->q) << "\n"
       << "height " << wqo::heightOf(q->q) << "\n"
       << "width " << wqo::widthOf(q->q) << "\n";
    *out = dupString(os.str());
  });
}

wqo_status wqo_tree_cmp(const wqo_qo* q, const char* tree1, const char* tree2,
                        int kruskal, int* result) {
  if (!q || !tree1 || !tree2 || !result) return invalid("null argument");
  return guard([&] {
    wqo::Tree a = wqo::parseTree(q->q, tree1);
    wqo::Tree b = wqo::parseTree(q->q, tree2);
    *result = (kruskal ? wqo::leK(q->q, a, b) : wqo::leT(q->q, a, b)) ? 1 : 0;
  });
}

wqo_status wqo_seq_cmp(const wqo_qo* q, const char* seq1, const char* seq2,
                       int* result) {
  if (!q || !seq1 || !seq2 || !result) return invalid("null argument");
  return guard([&] {
    wqo::NormalSeq a = wqo::normalize(wqo::parseSeq(q->q, seq1));
    wqo::NormalSeq b = wqo::normalize(wqo::parseSeq(q->q, seq2));
    *result = wqo::embeds(q->q, a, b) ? 1 : 0;
  });
}

wqo_status wqo_convert(const wqo_qo* q, const char* direction, const char* expr,
                       char** out) {
  if (!q || !direction || !expr || !out) return invalid("null argument");
  std::string dir = direction;
  return guard([&] {
    if (dir == "tree2seq") {
      wqo::Tree t = wqo::parseTree(q->q, expr);
      *out = dupString(wqo::printSeq(q->q, wqo::treeToSeq(t)));
    } else if (dir == "seq2tree") {
      wqo::NormalSeq s = wqo::normalize(wqo::parseSeq(q->q, expr));
      *out = dupString(wqo::printTree(q->q, wqo::seqToTree(q->q, s)));
    } else {
      throw wqo::DomainError("direction must be tree2seq or seq2tree");
    }
  });
}

wqo_status wqo_otype(const wqo_qo* q, const char* target, char** out) {
  if (!q || !target || !out) return invalid("null argument");
  std::string tgt = target;
  return guard([&] {
    if (tgt == "qo") {
      *out = dupString(std::to_string(wqo::otype(q->q)));
    } else if (tgt == "tf" || tgt == "seq") {
      wqo::Ordinal o = wqo::Ordinal::fromNat(wqo::otype(q->q));
      *out = dupString(wqo::toString(wqo::gType(o)));
    } else {
      throw wqo::DomainError("target must be qo, tf, or seq");
    }
  });
}

wqo_status wqo_eps_cmp(unsigned omega, const char* term1, const char* term2,
                       int* result) {
  if (!term1 || !term2 || !result) return invalid("null argument");
  return guard([&] {
    wqo::OmegaOrder om{omega};
    wqo::EpsTerm a = wqo::parseEps(term1, om);
    wqo::EpsTerm b = wqo::parseEps(term2, om);
    *result = wqo::epsCompare(a, b);
  });
}

wqo_status wqo_eps_to_tree(unsigned omega, const char* term, char** out) {
  if (!term || !out) return invalid("null argument");
  return guard([&] {
    wqo::OmegaOrder om{omega};
    wqo::EpsTerm t = wqo::parseEps(term, om);
    wqo::QO lq = wqo::epsLabelQO(om);
    *out = dupString(wqo::printTree(lq, wqo::epsToTree(t, om)));
  });
}

wqo_status wqo_run_check(const char* suite, uint64_t seed, int cases,
                         int max_size, unsigned omega, int* passed,
                         char** report) {
  if (!suite || !passed || !report) return invalid("null argument");
  if (cases < 1 || max_size < 1) return invalid("cases and max-size must be >= 1");
  return guard([&] {
    wqo::CheckConfig cfg{seed, cases, max_size, omega};
    wqo::CheckResult r = wqo::runSuite(suite, cfg);
    *passed = r.pass() ? 1 : 0;
    *report = dupString(r.text());
  });
}

}  // extern "C"
