// SPDX-License-Identifier: Apache-2.0
#include "pca/io.hpp"

#include <deque>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace pca {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

Error syntax(int line, const std::string& what) {
  return Error(Errc::SyntaxError, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

Model parse_model(std::istream& in) {
  bool header = false, have_circle = false, pig = false;
  Int c = 0;
  std::vector<Arc> arcs;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto tok = tokens(line);
    if (tok.empty()) continue;
    auto num = [&](const std::string& t) {
      try {
        return parse_int(t);
      } catch (const Error&) {
        throw syntax(no, "expected an integer, got '" + t + "'");
      }
    };
    if (!header) {
      if (tok.size() != 2 || tok[0] != "pca" || tok[1] != "v1") throw syntax(no, "expected 'pca v1'");
      header = true;
    } else if (tok[0] == "circle") {
      if (tok.size() != 2) throw syntax(no, "expected 'circle <c|pig>'");
      if (have_circle) throw syntax(no, "circle given twice");
      have_circle = true;
      if (tok[1] == "pig")
        pig = true;
      else
        c = num(tok[1]);
    } else if (tok[0] == "arc") {
      if (tok.size() != 3) throw syntax(no, "expected 'arc <s> <t>'");
      arcs.push_back(Arc{num(tok[1]), num(tok[2])});
    } else {
      throw syntax(no, "unknown directive '" + tok[0] + "'");
    }
  }
  if (!header) throw syntax(no, "missing 'pca v1' header");
  if (!have_circle) throw syntax(no, "missing circle directive");
  if (pig) {
    Int hi = 0;
    for (const Arc& a : arcs) hi = std::max({hi, a.s, a.t});
    c = hi + 1;
  }
  return validate(c, pig, std::move(arcs));
}

Model parse_model_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_model(ss);
}

Model load_model(const std::string& path) {
  if (path == "-") return parse_model(std::cin);
  std::ifstream f(path);
  if (!f) throw Error(Errc::SyntaxError, "cannot open " + path);
  return parse_model(f);
}

std::string write_model(const Model& m) {
  std::string out = "pca v1\ncircle " + (m.line ? std::string("pig") : to_string(m.c)) + "\n";
  for (const Arc& a : m.arcs) out += "arc " + to_string(a.s) + " " + to_string(a.t) + "\n";
  return out;
}

Model gen_random(const GenOptions& opt) {
  if (opt.n < 1) throw Error(Errc::InvalidParams, "n must be positive");
  if (opt.saturated && !opt.spca) throw Error(Errc::InvalidParams, "models without external arcs are never saturated");
  std::mt19937_64 rng(opt.seed);
  auto pick = [&](long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng); };
  const Id n = opt.n;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Id w = opt.spca ? static_cast<Id>(pick(1, std::max<Id>(1, (n + 1) / 2))) : 0;
    double p_open = std::uniform_real_distribution<double>(0.35, 0.75)(rng);
    int gap_budget = opt.connected ? ((opt.spca && !opt.saturated) ? static_cast<int>(pick(0, 1)) : 0) : 1 << 20;

    // Arcs waiting to close, oldest first; negative entries wrap from the end.
    std::deque<Id> queue;
    for (Id j = 0; j < w; ++j) queue.push_back(-1 - j);
    std::vector<Int> start(n), end(n), wrap_end(w);
    Id opened = 0, closes = n;
    Int x = 2 * pick(0, 2);
    bool stuck = false;
    while (opened < n || closes > 0) {
      Id q = static_cast<Id>(queue.size());
      bool empties = q == 1 && opened < n;
      bool can_close = closes > 0 && q > 0 && (!empties || gap_budget > 0) && q > (opened == n ? w : 0);
      bool can_open = opened < n && !(opt.saturated && q == 0) && !(!opt.connected ? false : (q == 0 && opened > 0 && !opt.spca));
      if (!can_open && !can_close) {
        stuck = true;
        break;
      }
      bool open = can_open && (!can_close || std::bernoulli_distribution(p_open)(rng));
      if (open) {
        start[opened] = x;
        queue.push_back(opened++);
      } else {
        Id a = queue.front();
        queue.pop_front();
        if (a < 0)
          wrap_end[-1 - a] = x;
        else
          end[a] = x;
        --closes;
        if (empties) --gap_budget;
      }
      x += 2 * pick(1, 3);
    }
    if (stuck || static_cast<Id>(queue.size()) != w) continue;
    for (Id j = 0; j < w; ++j) end[queue[j]] = wrap_end[j];
    std::vector<Arc> arcs;
    for (Id a = 0; a < n; ++a) arcs.push_back(Arc{start[a], end[a]});
    try {
      return validate(x, !opt.spca, std::move(arcs));
    } catch (const Error&) {
      continue;
    }
  }
  throw Error(Errc::GiveUp, "no model after 1000 attempts");
}

Model gen_uca(Id n, std::uint64_t seed) {
  if (n < 2) throw Error(Errc::InvalidParams, "n must be at least 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> gap(1, 3);
  std::vector<Int> s(n);
  Int x = 0;
  for (Id a = 0; a < n; ++a) {
    s[a] = x;
    x += 2 * gap(rng);
  }
  Int c = x;
  Int ell = 16;  // about four beginnings per arc
  if (ell + 1 >= c) ell = 2 * ((c - 2) / 4);
  std::vector<Arc> arcs;
  arcs.reserve(n);
  for (Id a = 0; a < n; ++a) arcs.push_back(Arc{s[a], mod(s[a] + ell + 1, c)});
  return validate(c, false, std::move(arcs));
}

}  // namespace pca
