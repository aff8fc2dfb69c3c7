#include "gmk/words.hpp"

#include <sstream>
#include <unordered_map>

namespace gmk {

void push_reduced(std::vector<GenSymbol>& stack, GenSymbol s) {
  if (s.sign != 1 && s.sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (!stack.empty() && stack.back().index == s.index && stack.back().sign == -s.sign) {
    stack.pop_back();
  } else {
    stack.push_back(s);
  }
}

Word reduce(const std::vector<GenSymbol>& raw) {
  std::vector<GenSymbol> stack;
  stack.reserve(raw.size());
  for (const GenSymbol& s : raw) {
    if (s.index < 0) throw std::out_of_range("negative generator index");
    push_reduced(stack, s);
  }
  return Word(std::move(stack));
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.syms.size(); ++i) {
    if (w.syms[i].index == w.syms[i - 1].index && w.syms[i].sign == -w.syms[i - 1].sign)
      return false;
  }
  return true;
}

int min_rank(const Word& w) {
  int r = 0;
  for (const GenSymbol& s : w.syms) r = std::max(r, s.index + 1);
  return r;
}

void check_rank(const Word& w, int rank) {
  for (const GenSymbol& s : w.syms) {
    if (s.index < 0 || s.index >= rank) throw std::out_of_range("generator index outside alphabet");
  }
}

Word invert(const Word& w) {
  std::vector<GenSymbol> out;
  out.reserve(w.syms.size());
  for (auto it = w.syms.rbegin(); it != w.syms.rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

Word concat(const Word& a, const Word& b) {
  std::vector<GenSymbol> stack = a.syms;
  for (const GenSymbol& s : b.syms) push_reduced(stack, s);
  return Word(std::move(stack));
}

Word word_power(const Word& w, int p) {
  Word base = p < 0 ? invert(w) : w;
  int reps = p < 0 ? -p : p;
  Word out;
  for (int i = 0; i < reps; ++i) out = concat(out, base);
  return out;
}

Word letter(int index, int sign) { return Word({GenSymbol(index, sign)}); }

Word word_from(std::initializer_list<GenSymbol> syms) {
  return reduce(std::vector<GenSymbol>(syms));
}

CyclicDecomposition cyclically_reduce(const Word& w) {
  std::size_t i = 0, j = w.syms.size();
  while (j >= i + 2 && w.syms[i].index == w.syms[j - 1].index &&
         w.syms[i].sign == -w.syms[j - 1].sign) {
    ++i;
    --j;
  }
  CyclicDecomposition d;
  d.conjugator = Word(std::vector<GenSymbol>(w.syms.begin(), w.syms.begin() + i));
  d.core = Word(std::vector<GenSymbol>(w.syms.begin() + i, w.syms.begin() + j));
  return d;
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < w.syms.size()) {
    std::size_t j = i;
    while (j < w.syms.size() && w.syms[j] == w.syms[i]) ++j;
    long run = static_cast<long>(j - i) * w.syms[i].sign;
    int idx = w.syms[i].index;
    if (idx < 0 || idx >= static_cast<int>(names.size()))
      throw std::out_of_range("no name for generator index");
    if (!first) out << ' ';
    out << names[idx];
    if (run != 1) out << '^' << run;
    first = false;
    i = j;
  }
  return out.str();
}

Word parse_word(const std::string& text, const std::vector<std::string>& names) {
  std::unordered_map<std::string, int> lookup;
  for (std::size_t i = 0; i < names.size(); ++i) lookup.emplace(names[i], static_cast<int>(i));
  std::vector<GenSymbol> raw;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    long power = 1;
    std::size_t caret = tok.find('^');
    std::string name = tok.substr(0, caret);
    if (caret != std::string::npos) {
      std::size_t pos = 0;
      std::string exp = tok.substr(caret + 1);
      power = std::stol(exp, &pos);
      if (pos != exp.size()) throw std::invalid_argument("bad exponent in word: " + tok);
    }
    auto it = lookup.find(name);
    if (it == lookup.end()) throw std::invalid_argument("unknown generator: " + name);
    int sign = power < 0 ? -1 : +1;
    for (long r = 0; r < (power < 0 ? -power : power); ++r)
      raw.emplace_back(it->second, sign);
  }
  return reduce(raw);
}

}  // namespace gmk
